//! Reproducible random Hermitian / PSD / PD matrices.
//!
//! Randomness comes from [`StreamKey`]s: a stream is addressed by a seed and
//! a path of labels and indices, hashed into a ChaCha20 key. Two workers that
//! derive the same key draw identical numbers, whatever the scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::linalg::{ComplexMatrix, HermitianMatrix, LinalgError, C64};

pub type StreamRng = ChaCha20Rng;

/// Address of an independent random stream.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey([u8; 32]);

impl StreamKey {
    pub fn root(seed: u64) -> Self {
        let mut h = Sha256::new();
        h.update(b"logmaj/stream/v1");
        h.update(seed.to_le_bytes());
        Self(h.finalize().into())
    }

    pub fn child(&self, label: &str) -> Self {
        let mut h = Sha256::new();
        h.update(self.0);
        h.update([1u8]);
        h.update((label.len() as u64).to_le_bytes());
        h.update(label.as_bytes());
        Self(h.finalize().into())
    }

    pub fn index(&self, i: u64) -> Self {
        let mut h = Sha256::new();
        h.update(self.0);
        h.update([2u8]);
        h.update(i.to_le_bytes());
        Self(h.finalize().into())
    }

    pub fn rng(&self) -> StreamRng {
        ChaCha20Rng::from_seed(self.0)
    }
}

impl std::fmt::Debug for StreamKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StreamKey({})", hex::encode(&self.0[..8]))
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("bad generator spec: {0}")]
    BadSpec(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "class")]
pub enum MatrixKind {
    Pd,
    PsdRankDeficient { rank: usize },
    Hermitian,
}

/// What to sample: dimension, class, conditioning and scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub dim: usize,
    pub kind: MatrixKind,
    pub cond_target: f64,
    pub scale: f64,
}

impl GenSpec {
    pub const DEFAULT_COND: f64 = 1e4;

    pub fn pd(dim: usize) -> Self {
        Self {
            dim,
            kind: MatrixKind::Pd,
            cond_target: Self::DEFAULT_COND,
            scale: 1.0,
        }
    }

    pub fn psd(dim: usize, rank: usize) -> Self {
        Self {
            kind: MatrixKind::PsdRankDeficient { rank },
            ..Self::pd(dim)
        }
    }

    pub fn hermitian(dim: usize) -> Self {
        Self {
            kind: MatrixKind::Hermitian,
            ..Self::pd(dim)
        }
    }

    pub fn with_cond(mut self, cond: f64) -> Self {
        self.cond_target = cond;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.dim == 0 {
            return Err(GenError::BadSpec("dim must be positive".into()));
        }
        if !(self.cond_target >= 1.0 && self.cond_target.is_finite()) {
            return Err(GenError::BadSpec(format!(
                "cond_target must be a finite number >= 1, got {}",
                self.cond_target
            )));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(GenError::BadSpec(format!("scale must be positive, got {}", self.scale)));
        }
        if let MatrixKind::PsdRankDeficient { rank } = self.kind {
            if rank == 0 || rank > self.dim {
                return Err(GenError::BadSpec(format!(
                    "rank must be in 1..={}, got {rank}",
                    self.dim
                )));
            }
        }
        Ok(())
    }
}

fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im)
}

/// Unitary factor of a complex Ginibre matrix (modified Gram–Schmidt on columns).
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let mut cols: Vec<Vec<C64>> = (0..n).map(|_| (0..n).map(|_| complex_normal(rng)).collect()).collect();
        let mut ok = true;
        for j in 0..n {
            for i in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let qi = &done[i];
                let proj: C64 = qi.iter().zip(rest[0].iter()).map(|(a, b)| a.conj() * b).sum();
                for (x, q) in rest[0].iter_mut().zip(qi) {
                    *x -= proj * q;
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-8 {
                ok = false;
                break;
            }
            for x in &mut cols[j] {
                *x /= norm;
            }
        }
        if ok {
            return ComplexMatrix::from_fn(n, |i, j| cols[j][i]);
        }
    }
}

/// `count` magnitudes in `[scale/cond, scale]`: both endpoints pinned, interior log-uniform.
fn log_uniform_magnitudes<R: Rng + ?Sized>(count: usize, cond: f64, scale: f64, rng: &mut R) -> Vec<f64> {
    let lo = (scale / cond).ln();
    let hi = scale.ln();
    (0..count)
        .map(|i| match i {
            0 => scale,
            _ if i + 1 == count => scale / cond,
            _ => rng.random_range(lo..=hi).exp(),
        })
        .collect()
}

fn target_spectrum<R: Rng + ?Sized>(spec: &GenSpec, rng: &mut R) -> Vec<f64> {
    let n = spec.dim;
    match spec.kind {
        MatrixKind::Pd => log_uniform_magnitudes(n, spec.cond_target, spec.scale, rng),
        MatrixKind::PsdRankDeficient { rank } => {
            let mut d = log_uniform_magnitudes(rank, spec.cond_target, spec.scale, rng);
            d.resize(n, 0.0);
            d
        }
        MatrixKind::Hermitian => {
            let mut d = log_uniform_magnitudes(n, spec.cond_target, spec.scale, rng);
            let mut signs: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            if n >= 2 && signs.iter().all(|&s| s == signs[0]) {
                let flip = rng.random_range(0..n);
                signs[flip] = !signs[flip];
            }
            for (x, neg) in d.iter_mut().zip(signs) {
                if neg {
                    *x = -*x;
                }
            }
            d
        }
    }
}

/// `Q diag(d) Q*` with `Q` Haar-like unitary and `d` drawn per the spec.
pub fn random_matrix<R: Rng + ?Sized>(spec: &GenSpec, rng: &mut R) -> Result<ComplexMatrix, GenError> {
    spec.validate()?;
    let d = target_spectrum(spec, rng);
    let q = random_unitary(spec.dim, rng);
    Ok(crate::linalg::spectral_matrix(&q, &d))
}

/// Random Hermitian matrix with unit Frobenius norm.
pub fn unit_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, |_, _| complex_normal(rng));
    let h = (&g + &g.adjoint()).scale(0.5);
    let norm = h.frobenius_norm();
    h.scale(1.0 / norm)
}

/// `M + magnitude·H` for a unit-Frobenius random Hermitian `H`, projected back
/// into the class described by `spec` (eigenvalue clamp for PD/PSD classes).
pub fn perturb<R: Rng + ?Sized>(
    m: &ComplexMatrix,
    spec: &GenSpec,
    magnitude: f64,
    rng: &mut R,
) -> Result<ComplexMatrix, GenError> {
    spec.validate()?;
    if m.dim() != spec.dim {
        return Err(GenError::BadSpec(format!(
            "matrix has dim {}, spec expects {}",
            m.dim(),
            spec.dim
        )));
    }
    let h = unit_hermitian(spec.dim, rng);
    let moved = m + &h.scale(magnitude);
    let herm = HermitianMatrix::new(moved)?;
    project(herm, spec)
}

/// Projects a Hermitian matrix onto the class of `spec`.
pub fn project(h: HermitianMatrix, spec: &GenSpec) -> Result<ComplexMatrix, GenError> {
    let n = spec.dim;
    let rank = match spec.kind {
        MatrixKind::Hermitian => return Ok(h.into_matrix()),
        MatrixKind::Pd => n,
        MatrixKind::PsdRankDeficient { rank } => rank,
    };
    let e = h.eig()?;
    let top = e.eigenvalues.max();
    let top = if top > 0.0 { top } else { spec.scale };
    let floor = top / spec.cond_target;
    let d: Vec<f64> = e
        .eigenvalues
        .values()
        .iter()
        .enumerate()
        .map(|(i, &l)| if i >= rank { 0.0 } else { l.max(floor) })
        .collect();
    Ok(crate::linalg::spectral_matrix(&e.eigenvectors, &d))
}
