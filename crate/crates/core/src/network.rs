//! Two-layer sigmoid feed-forward network.
//!
//! The input layer includes the bias unit: callers append a constant
//! `+1` as the last input component, so a "3-4-1" network takes two
//! payload inputs plus bias. There is no hidden-layer bias.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};

/// Layer sizes. `n_input` counts the bias unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Architecture {
    pub n_input: usize,
    pub n_hidden: usize,
    pub n_output: usize,
}

impl Architecture {
    pub fn new(n_input: usize, n_hidden: usize, n_output: usize) -> Result<Self> {
        if n_input < 1 || n_hidden < 1 || n_output < 1 {
            return Err(Error::Parameter(
                "all layer sizes must be at least 1".into(),
            ));
        }
        Ok(Architecture {
            n_input,
            n_hidden,
            n_output,
        })
    }

    /// Total number of weights.
    pub fn n_weights(&self) -> usize {
        self.n_hidden * self.n_input + self.n_output * self.n_hidden
    }

    /// Parses strings like "3-4-1".
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('-').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "architecture must look like 3-4-1, got {s:?}"
            )));
        }
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad layer size {p:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        Architecture::new(nums[0], nums[1], nums[2])
    }
}

impl std::fmt::Display for Architecture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}-{}", self.n_input, self.n_hidden, self.n_output)
    }
}

/// Activations from one forward pass; every entry lies strictly in (0,1).
#[derive(Debug, Clone)]
pub struct ForwardTrace {
    pub hidden: Vector,
    pub output: Vector,
}

/// Two-layer network: `w1` is hidden×input, `w2` is output×hidden.
#[derive(Debug, Clone)]
pub struct Network {
    arch: Architecture,
    w1: Matrix,
    w2: Matrix,
}

/// Largest f64 strictly below 1, used to keep saturated activations
/// inside the open interval.
const ONE_BELOW: f64 = 1.0 - f64::EPSILON / 2.0;

/// Numerically stable logistic sigmoid, clamped into the open (0,1).
#[inline]
pub fn sigmoid(h: f64) -> f64 {
    let s = if h >= 0.0 {
        1.0 / (1.0 + (-h).exp())
    } else {
        let eh = h.exp();
        eh / (1.0 + eh)
    };
    s.clamp(f64::MIN_POSITIVE, ONE_BELOW)
}

impl Network {
    /// Builds a network from explicit weight matrices.
    pub fn new(arch: Architecture, w1: Matrix, w2: Matrix) -> Result<Self> {
        if w1.rows() != arch.n_hidden || w1.cols() != arch.n_input {
            return Err(Error::Dimension(format!(
                "w1 must be {}x{}, got {}x{}",
                arch.n_hidden,
                arch.n_input,
                w1.rows(),
                w1.cols()
            )));
        }
        if w2.rows() != arch.n_output || w2.cols() != arch.n_hidden {
            return Err(Error::Dimension(format!(
                "w2 must be {}x{}, got {}x{}",
                arch.n_output,
                arch.n_hidden,
                w2.rows(),
                w2.cols()
            )));
        }
        if !w1.data().iter().chain(w2.data()).all(|v| v.is_finite()) {
            return Err(Error::Numeric("non-finite weight".into()));
        }
        Ok(Network { arch, w1, w2 })
    }

    /// All-zero weights.
    pub fn zeros(arch: Architecture) -> Self {
        Network {
            arch,
            w1: Matrix::zeros(arch.n_hidden, arch.n_input),
            w2: Matrix::zeros(arch.n_output, arch.n_hidden),
        }
    }

    pub fn arch(&self) -> Architecture {
        self.arch
    }

    pub fn w1(&self) -> &Matrix {
        &self.w1
    }

    pub fn w2(&self) -> &Matrix {
        &self.w2
    }

    /// Forward pass. `x` must have length `n_input` with the bias `+1`
    /// already appended by the caller.
    pub fn forward(&self, x: &Vector) -> Result<ForwardTrace> {
        self.check_input(x)?;
        let mut hidden = vec![0.0; self.arch.n_hidden];
        let mut output = vec![0.0; self.arch.n_output];
        self.forward_into(x.as_slice(), &mut hidden, &mut output);
        Ok(ForwardTrace {
            hidden: Vector::from_raw(hidden),
            output: Vector::from_raw(output),
        })
    }

    /// Allocation-free forward pass for training loops.
    pub(crate) fn forward_into(&self, x: &[f64], hidden: &mut [f64], output: &mut [f64]) {
        for (i, h) in hidden.iter_mut().enumerate() {
            *h = sigmoid(crate::linalg::dot_slices(self.w1.row(i), x));
        }
        for (i, o) in output.iter_mut().enumerate() {
            *o = sigmoid(crate::linalg::dot_slices(self.w2.row(i), hidden));
        }
    }

    /// Analytic Jacobian `∂y/∂ŵ`, one row per output, columns ordered as
    /// the packed weight vector: output-layer weights first (row-major
    /// over w2), then hidden-layer weights (row-major over w1).
    pub fn jacobian(&self, x: &Vector) -> Result<Matrix> {
        self.check_input(x)?;
        let trace = self.forward(x)?;
        let mut j = Matrix::zeros(self.arch.n_output, self.arch.n_weights());
        for row in 0..self.arch.n_output {
            let dst = j.row_mut(row);
            self.jacobian_row_into(x.as_slice(), &trace, row, dst);
        }
        Ok(j)
    }

    /// Fills one Jacobian row (for output `out_idx`) into `dst`.
    pub(crate) fn jacobian_row_into(
        &self,
        x: &[f64],
        trace: &ForwardTrace,
        out_idx: usize,
        dst: &mut [f64],
    ) {
        let arch = self.arch;
        let y = trace.output.get(out_idx);
        let dy = y * (1.0 - y);
        let hidden = trace.hidden.as_slice();
        let n2 = arch.n_output * arch.n_hidden;

        // Output-layer block: nonzero only for this output's own row of w2.
        for v in dst[..n2].iter_mut() {
            *v = 0.0;
        }
        let own = out_idx * arch.n_hidden;
        for (i1, v) in hidden.iter().enumerate() {
            dst[own + i1] = dy * v;
        }

        // Hidden-layer block.
        let w2_row = self.w2.row(out_idx);
        for i1 in 0..arch.n_hidden {
            let v = hidden[i1];
            let gate = dy * w2_row[i1] * v * (1.0 - v);
            let base = n2 + i1 * arch.n_input;
            for (i0, xv) in x.iter().enumerate() {
                dst[base + i0] = gate * xv;
            }
        }
    }

    /// Flattens the weights into a vector matching the Jacobian column
    /// order.
    pub fn pack(&self) -> Vector {
        let mut out = Vec::with_capacity(self.arch.n_weights());
        out.extend_from_slice(self.w2.data());
        out.extend_from_slice(self.w1.data());
        Vector::from_raw(out)
    }

    /// Inverse of [`Network::pack`].
    pub fn unpack(arch: Architecture, w: &Vector) -> Result<Network> {
        if w.len() != arch.n_weights() {
            return Err(Error::Dimension(format!(
                "weight vector length {} does not match architecture {} ({} weights)",
                w.len(),
                arch,
                arch.n_weights()
            )));
        }
        let n2 = arch.n_output * arch.n_hidden;
        let w2 = Matrix::from_row_major(arch.n_output, arch.n_hidden, w.as_slice()[..n2].to_vec())?;
        let w1 = Matrix::from_row_major(arch.n_hidden, arch.n_input, w.as_slice()[n2..].to_vec())?;
        Network::new(arch, w1, w2)
    }

    /// Adds `scale * delta` to the packed weights in place.
    pub(crate) fn apply_update(&mut self, delta: &[f64], scale: f64) {
        let n2 = self.arch.n_output * self.arch.n_hidden;
        for (w, d) in self.w2.as_mut_data().iter_mut().zip(&delta[..n2]) {
            *w += scale * d;
        }
        for (w, d) in self.w1.as_mut_data().iter_mut().zip(&delta[n2..]) {
            *w += scale * d;
        }
    }

    pub(crate) fn weights_finite(&self) -> bool {
        self.w1.data().iter().chain(self.w2.data()).all(|v| v.is_finite())
    }

    fn check_input(&self, x: &Vector) -> Result<()> {
        if x.len() != self.arch.n_input {
            return Err(Error::Dimension(format!(
                "input length {} does not match n_input {}",
                x.len(),
                self.arch.n_input
            )));
        }
        Ok(())
    }
}

/// Seeded uniform initialization on (−half_range, +half_range). The same
/// seed always produces the same network.
pub fn init_weights(arch: Architecture, seed: u64, half_range: f64) -> Result<Network> {
    if !(half_range > 0.0) {
        return Err(Error::Parameter(format!(
            "half_range must be positive, got {half_range}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w1 = Matrix::from_fn(arch.n_hidden, arch.n_input, |_, _| {
        rng.gen_range(-half_range..half_range)
    });
    let w2 = Matrix::from_fn(arch.n_output, arch.n_hidden, |_, _| {
        rng.gen_range(-half_range..half_range)
    });
    Network::new(arch, w1, w2)
}

/// Central finite-difference Jacobian, the independent oracle for the
/// analytic one. Uses only forward passes through perturbed weights.
pub fn finite_difference_jacobian(net: &Network, x: &Vector, step: f64) -> Result<Matrix> {
    let arch = net.arch();
    let w0 = net.pack();
    let mut j = Matrix::zeros(arch.n_output, arch.n_weights());
    for k in 0..arch.n_weights() {
        let mut wp = w0.to_vec();
        wp[k] += step;
        let yp = Network::unpack(arch, &Vector::from_raw(wp))?.forward(x)?.output;
        let mut wm = w0.to_vec();
        wm[k] -= step;
        let ym = Network::unpack(arch, &Vector::from_raw(wm))?.forward(x)?.output;
        for row in 0..arch.n_output {
            j.set(row, k, (yp.get(row) - ym.get(row)) / (2.0 * step));
        }
    }
    Ok(j)
}

/// On-disk form of a network plus the provenance of its initialization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkCheckpoint {
    pub arch: Architecture,
    pub w1: Vec<Vec<f64>>,
    pub w2: Vec<Vec<f64>>,
    pub seed: Option<u64>,
    pub half_range: Option<f64>,
}

impl NetworkCheckpoint {
    pub fn from_network(net: &Network, seed: Option<u64>, half_range: Option<f64>) -> Self {
        NetworkCheckpoint {
            arch: net.arch(),
            w1: net.w1().to_rows(),
            w2: net.w2().to_rows(),
            seed,
            half_range,
        }
    }

    pub fn to_network(&self) -> Result<Network> {
        Network::new(
            self.arch,
            Matrix::from_rows(&self.w1)?,
            Matrix::from_rows(&self.w2)?,
        )
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}
