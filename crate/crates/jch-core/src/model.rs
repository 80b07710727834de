//! Domain types and basis conventions shared by every other module.
//!
//! The one-excitation Hilbert space of an N-cavity chain is spanned by the
//! 2N states |Q⟩⊗|g,1⟩ (photonic) and |Q⟩⊗|e,0⟩ (atomic), Q = 1..N.
//! Amplitude vectors use site-major interleaved ordering: index 2(Q-1) is
//! the photonic amplitude at cavity Q, index 2(Q-1)+1 the atomic one.

use num_complex::Complex64;
use thiserror::Error;

/// Unit-norm tolerance accepted from constructors and evolution.
pub const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("n_cavities must be >= 2, got {0}")]
    ChainTooShort(usize),
    #[error("{name} must be >= 0, got {value}")]
    NegativeCoupling { name: &'static str, value: f64 },
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("custom coupling weights must be positive; weights[{index}] = {value}")]
    NonPositiveWeight { index: usize, value: f64 },
    #[error("custom profile needs {expected} weights for {n} cavities, got {got}")]
    WeightCountMismatch { expected: usize, n: usize, got: usize },
    #[error("cavity index {q} out of range 1..={n}")]
    CavityOutOfRange { q: usize, n: usize },
    #[error("basis index {index} out of range 0..{dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("cannot normalize a zero state")]
    ZeroState,
    #[error("j_coupling must be > 0, got {0}")]
    NonPositiveSpinCoupling(f64),
}

/// Which of the two local excitation modes an amplitude belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// |g,1⟩ — photon in the cavity, atom in the ground state.
    Photonic,
    /// |e,0⟩ — atom excited, cavity empty.
    Atomic,
}

/// Inter-cavity coupling pattern along the chain.
///
/// The adjacency matrix A is tridiagonal with A_{i,i+1} given by the
/// profile weight for bond i (1-based, i = 1..N-1).
#[derive(Debug, Clone, PartialEq)]
pub enum CouplingProfile {
    /// A_{i,i+1} = 1 (hard-wall path graph).
    Uniform,
    /// A_{i,i+1} = sqrt(i (N - i)); gives the equally spaced spectrum N-1-2k.
    Parabolic,
    /// Explicit positive bond weights, length N-1.
    Custom(Vec<f64>),
}

impl CouplingProfile {
    /// Bond weights A_{i,i+1} for i = 1..N-1.
    pub fn bond_weights(&self, n_cavities: usize) -> Vec<f64> {
        match self {
            CouplingProfile::Uniform => vec![1.0; n_cavities.saturating_sub(1)],
            CouplingProfile::Parabolic => (1..n_cavities)
                .map(|i| ((i * (n_cavities - i)) as f64).sqrt())
                .collect(),
            CouplingProfile::Custom(w) => w.clone(),
        }
    }

    fn validate(&self, n_cavities: usize) -> Result<(), ModelError> {
        if let CouplingProfile::Custom(w) = self {
            let expected = n_cavities - 1;
            if w.len() != expected {
                return Err(ModelError::WeightCountMismatch {
                    expected,
                    n: n_cavities,
                    got: w.len(),
                });
            }
            for (i, &x) in w.iter().enumerate() {
                if !x.is_finite() {
                    return Err(ModelError::NonFinite { name: "weight", value: x });
                }
                if x <= 0.0 {
                    return Err(ModelError::NonPositiveWeight { index: i, value: x });
                }
            }
        }
        Ok(())
    }
}

/// Physical configuration of a JCH chain (ħ = 1; all couplings in energy units).
///
/// The cavity frequency ω and atomic transition energy ε enter the
/// one-excitation dynamics only through the detuning Δ = ω − ε: the terms
/// proportional to (ω, ε) that remain after fixing Δ are a multiple of the
/// identity and contribute only a global phase, so they are not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainParams {
    n_cavities: usize,
    beta: f64,
    kappa: f64,
    delta: f64,
    profile: CouplingProfile,
}

impl ChainParams {
    /// Validate and construct. `beta = kappa = 0` is permitted (the evolution
    /// is then globally trivial) but is reported by [`ChainParams::warnings`].
    pub fn new(
        n_cavities: usize,
        beta: f64,
        kappa: f64,
        delta: f64,
        profile: CouplingProfile,
    ) -> Result<Self, ModelError> {
        if n_cavities < 2 {
            return Err(ModelError::ChainTooShort(n_cavities));
        }
        for (name, value) in [("beta", beta), ("kappa", kappa), ("delta", delta)] {
            if !value.is_finite() {
                return Err(ModelError::NonFinite { name, value });
            }
        }
        if beta < 0.0 {
            return Err(ModelError::NegativeCoupling { name: "beta", value: beta });
        }
        if kappa < 0.0 {
            return Err(ModelError::NegativeCoupling { name: "kappa", value: kappa });
        }
        profile.validate(n_cavities)?;
        Ok(Self { n_cavities, beta, kappa, delta, profile })
    }

    pub fn n_cavities(&self) -> usize {
        self.n_cavities
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn profile(&self) -> &CouplingProfile {
        &self.profile
    }

    /// Dimension of the one-excitation space, 2N.
    pub fn dim(&self) -> usize {
        2 * self.n_cavities
    }

    /// Non-fatal configuration oddities.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.beta == 0.0 && self.kappa == 0.0 {
            w.push("beta = kappa = 0: the evolution is a global phase".to_string());
        }
        w
    }
}

/// Single-magnon reference chain evolving under -(J/2) A.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinChainParams {
    n_sites: usize,
    j_coupling: f64,
    profile: CouplingProfile,
}

impl SpinChainParams {
    pub fn new(n_sites: usize, j_coupling: f64, profile: CouplingProfile) -> Result<Self, ModelError> {
        if n_sites < 2 {
            return Err(ModelError::ChainTooShort(n_sites));
        }
        if !j_coupling.is_finite() {
            return Err(ModelError::NonFinite { name: "j_coupling", value: j_coupling });
        }
        if j_coupling <= 0.0 {
            return Err(ModelError::NonPositiveSpinCoupling(j_coupling));
        }
        profile.validate(n_sites)?;
        Ok(Self { n_sites, j_coupling, profile })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn j_coupling(&self) -> f64 {
        self.j_coupling
    }

    pub fn profile(&self) -> &CouplingProfile {
        &self.profile
    }
}

/// Flat index of |Q⟩⊗mode in the interleaved one-excitation basis.
///
/// Photonic ⇒ 2(Q-1), atomic ⇒ 2(Q-1)+1. Bijective over
/// {1..N}×{photonic, atomic} ↔ {0..2N-1}.
pub fn basis_index(n_cavities: usize, q: usize, mode: Mode) -> Result<usize, ModelError> {
    if q < 1 || q > n_cavities {
        return Err(ModelError::CavityOutOfRange { q, n: n_cavities });
    }
    Ok(raw_basis_index(q, mode))
}

/// `basis_index` without the range check; Q must be 1-based and in range.
#[inline]
pub(crate) fn raw_basis_index(q: usize, mode: Mode) -> usize {
    match mode {
        Mode::Photonic => 2 * (q - 1),
        Mode::Atomic => 2 * (q - 1) + 1,
    }
}

/// Inverse of [`basis_index`]: recover (Q, mode) from a flat index.
pub fn basis_site_mode(n_cavities: usize, index: usize) -> Result<(usize, Mode), ModelError> {
    if index >= 2 * n_cavities {
        return Err(ModelError::IndexOutOfRange { index, dim: 2 * n_cavities });
    }
    let q = index / 2 + 1;
    let mode = if index % 2 == 0 { Mode::Photonic } else { Mode::Atomic };
    Ok((q, mode))
}

/// ℓ² norm of a complex amplitude vector.
pub fn norm(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Hermitian inner product ⟨a|b⟩ = Σ conj(a_i) b_i.
pub fn inner_product(a: &[Complex64], b: &[Complex64]) -> Result<Complex64, ModelError> {
    if a.len() != b.len() {
        return Err(ModelError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x.conj() * y).sum())
}

fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Vec<Complex64>, ModelError> {
    let n = norm(&amplitudes);
    if n == 0.0 || !n.is_finite() {
        return Err(ModelError::ZeroState);
    }
    if (n - 1.0).abs() > NORM_TOL {
        for a in &mut amplitudes {
            *a /= n;
        }
    }
    Ok(amplitudes)
}

/// Normalized amplitude vector over the 2N-dimensional one-excitation basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleExcitationState {
    amplitudes: Vec<Complex64>,
}

impl SingleExcitationState {
    /// Build from raw amplitudes (length 2N, interleaved), normalizing.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self, ModelError> {
        if amplitudes.len() < 4 || amplitudes.len() % 2 != 0 {
            return Err(ModelError::ChainTooShort(amplitudes.len() / 2));
        }
        Ok(Self { amplitudes: normalized(amplitudes)? })
    }

    pub fn n_cavities(&self) -> usize {
        self.amplitudes.len() / 2
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude of |Q⟩⊗mode (Q is 1-based).
    pub fn amplitude(&self, q: usize, mode: Mode) -> Result<Complex64, ModelError> {
        let idx = basis_index(self.n_cavities(), q, mode)?;
        Ok(self.amplitudes[idx])
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    pub fn inner_product(&self, other: &Self) -> Result<Complex64, ModelError> {
        inner_product(&self.amplitudes, &other.amplitudes)
    }
}

/// Normalized amplitude vector over the single-up-spin basis |1⟩..|N⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinChainState {
    amplitudes: Vec<Complex64>,
}

impl SpinChainState {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self, ModelError> {
        if amplitudes.len() < 2 {
            return Err(ModelError::ChainTooShort(amplitudes.len()));
        }
        Ok(Self { amplitudes: normalized(amplitudes)? })
    }

    pub fn n_sites(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    pub fn inner_product(&self, other: &Self) -> Result<Complex64, ModelError> {
        inner_product(&self.amplitudes, &other.amplitudes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_paper_scale_params() {
        let p = ChainParams::new(100, 1.0, 1e-3, 0.0, CouplingProfile::Uniform).unwrap();
        assert_eq!(p.n_cavities(), 100);
        assert!(p.warnings().is_empty());
    }

    #[test]
    fn rejects_single_cavity() {
        let err = ChainParams::new(1, 1.0, 1.0, 0.0, CouplingProfile::Uniform).unwrap_err();
        assert_eq!(err, ModelError::ChainTooShort(1));
    }

    #[test]
    fn rejects_zero_custom_weight() {
        let err = ChainParams::new(
            3,
            1.0,
            1.0,
            0.0,
            CouplingProfile::Custom(vec![1.0, 0.0]),
        )
        .unwrap_err();
        assert!(matches!(err, ModelError::NonPositiveWeight { index: 1, .. }));
    }

    #[test]
    fn rejects_wrong_weight_count() {
        let err =
            ChainParams::new(4, 1.0, 1.0, 0.0, CouplingProfile::Custom(vec![1.0])).unwrap_err();
        assert!(matches!(err, ModelError::WeightCountMismatch { expected: 3, .. }));
    }

    #[test]
    fn rejects_negative_couplings() {
        assert!(ChainParams::new(3, -1.0, 1.0, 0.0, CouplingProfile::Uniform).is_err());
        assert!(ChainParams::new(3, 1.0, -1.0, 0.0, CouplingProfile::Uniform).is_err());
        // negative detuning is physical
        assert!(ChainParams::new(3, 1.0, 1.0, -5.0, CouplingProfile::Uniform).is_ok());
    }

    #[test]
    fn both_zero_is_flagged_not_rejected() {
        let p = ChainParams::new(3, 0.0, 0.0, 1.0, CouplingProfile::Uniform).unwrap();
        assert_eq!(p.warnings().len(), 1);
    }

    #[test]
    fn basis_index_examples() {
        assert_eq!(basis_index(4, 1, Mode::Photonic).unwrap(), 0);
        assert_eq!(basis_index(4, 1, Mode::Atomic).unwrap(), 1);
        assert_eq!(basis_index(4, 3, Mode::Photonic).unwrap(), 4);
        assert!(basis_index(4, 5, Mode::Photonic).is_err());
        assert!(basis_index(4, 0, Mode::Atomic).is_err());
    }

    #[test]
    fn basis_index_roundtrip_is_bijective() {
        let n = 7;
        let mut seen = vec![false; 2 * n];
        for q in 1..=n {
            for mode in [Mode::Photonic, Mode::Atomic] {
                let idx = basis_index(n, q, mode).unwrap();
                assert!(!seen[idx]);
                seen[idx] = true;
                assert_eq!(basis_site_mode(n, idx).unwrap(), (q, mode));
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn inner_product_is_hermitian_and_orthonormal_on_basis() {
        let n = 3;
        let mut a = vec![Complex64::ZERO; 2 * n];
        let mut b = vec![Complex64::ZERO; 2 * n];
        a[0] = Complex64::ONE;
        b[3] = Complex64::ONE;
        assert_eq!(inner_product(&a, &b).unwrap(), Complex64::ZERO);
        let x = vec![Complex64::new(0.3, -0.4), Complex64::new(0.5, 0.7)];
        let xx = inner_product(&x, &x).unwrap();
        assert!(xx.im.abs() < 1e-15);
        assert!((xx.re.sqrt() - norm(&x)).abs() < 1e-15);
    }

    #[test]
    fn inner_product_rejects_length_mismatch() {
        let a = vec![Complex64::ONE; 4];
        let b = vec![Complex64::ONE; 6];
        assert_eq!(inner_product(&a, &b).unwrap_err(), ModelError::LengthMismatch(4, 6));
    }

    #[test]
    fn constructor_normalizes() {
        let s = SingleExcitationState::from_amplitudes(vec![
            Complex64::new(3.0, 0.0),
            Complex64::new(0.0, 4.0),
            Complex64::ZERO,
            Complex64::ZERO,
        ])
        .unwrap();
        assert!((s.norm() - 1.0).abs() < NORM_TOL);
        assert!((s.amplitude(1, Mode::Photonic).unwrap().re - 0.6).abs() < 1e-15);
    }

    #[test]
    fn zero_state_rejected() {
        let err = SingleExcitationState::from_amplitudes(vec![Complex64::ZERO; 4]).unwrap_err();
        assert_eq!(err, ModelError::ZeroState);
    }
}
