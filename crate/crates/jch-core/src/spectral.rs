//! Closed-form eigensystems of the one-excitation Hamiltonian
//!
//!   H = (Δ/2) Iₙ⊗Z + β Iₙ⊗X − κ A⊗(I₂+Z)/2
//!
//! Diagonalizing the adjacency matrix A (sine basis for the uniform chain,
//! Krawtchouk basis for the parabolic chain) block-diagonalizes H into 2×2
//! blocks, one per spatial mode |k⟩:
//!
//!   H(k) = [[Δ/2 − κλ_k, β], [β, −Δ/2]]
//!
//! whose eigenpairs E±(k) and mixing coefficients are computed here in
//! closed form. The dense numeric route lives in [`crate::oracle`].

use nalgebra::{DMatrix, Matrix2};
use thiserror::Error;

use crate::model::{ChainParams, CouplingProfile, ModelError};

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("closed-form spectra cover uniform and parabolic profiles only; use the dense oracle for custom weights")]
    CustomProfile,
    #[error("dressed basis degenerate: beta = delta = 0")]
    DegenerateDressedBasis,
    #[error("excitation number must be >= 1")]
    ZeroExcitations,
    #[error("k index {k} out of range 0..{n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("krawtchouk domain: need 0 <= k,l <= n and 0 < p < 1; got k={k}, l={l}, n={n}, p={p}")]
    KrawtchoukDomain { k: usize, l: usize, n: usize, p: f64 },
}

/// Eigensystem of an adjacency matrix A on the path graph.
///
/// Eigenvalues are stored in descending order; `vectors` holds the matching
/// orthonormal eigenvectors as columns, each with its first entry positive.
///
/// Index conventions: for the uniform profile, storage index i corresponds
/// to λ = 2cos((i+1)π/(N+1)); for the parabolic profile, to λ = N−1−2i.
#[derive(Debug, Clone)]
pub struct AdjacencyEigs {
    eigenvalues: Vec<f64>,
    vectors: DMatrix<f64>,
}

impl AdjacencyEigs {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvalues λ_k, descending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// N×N matrix with eigenvector k in column k.
    pub fn vectors(&self) -> &DMatrix<f64> {
        &self.vectors
    }

    /// Entry Q (1-based cavity index) of eigenvector k.
    pub fn component(&self, k: usize, q: usize) -> f64 {
        self.vectors[(q - 1, k)]
    }
}

/// Sine eigenbasis of the uniform path graph.
///
/// λ_k = 2cos(kπ/(N+1)) with eigenvector entries √(2/(N+1)) sin(Qkπ/(N+1)),
/// k = 1..N (stored 0-based, so storage index i holds k = i+1).
pub fn uniform_adjacency_eigs(n: usize) -> Result<AdjacencyEigs, SpectralError> {
    if n < 2 {
        return Err(ModelError::ChainTooShort(n).into());
    }
    let denom = (n + 1) as f64;
    let scale = (2.0 / denom).sqrt();
    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = DMatrix::zeros(n, n);
    for i in 0..n {
        let k = (i + 1) as f64;
        eigenvalues.push(2.0 * (k * std::f64::consts::PI / denom).cos());
        for q in 1..=n {
            vectors[(q - 1, i)] = scale * (q as f64 * k * std::f64::consts::PI / denom).sin();
        }
    }
    Ok(AdjacencyEigs { eigenvalues, vectors })
}

/// Krawtchouk polynomial K_k(l, p, n) = ₂F₁(−k, −l; −n; 1/p).
///
/// Evaluated by the three-term recurrence in the degree k, which stays
/// stable for p = 1/2 at the chain sizes used here; factorial-ratio forms
/// overflow f64 near n ≈ 170.
pub fn krawtchouk(k: usize, l: usize, p: f64, n: usize) -> Result<f64, SpectralError> {
    if k > n || l > n || !(0.0 < p && p < 1.0) {
        return Err(SpectralError::KrawtchoukDomain { k, l, n, p });
    }
    let nf = n as f64;
    let lf = l as f64;
    let mut prev = 1.0; // K_0
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 - lf / (p * nf); // K_1
    for deg in 1..k {
        let df = deg as f64;
        let next = ((p * (nf - df) + df * (1.0 - p) - lf) * cur - df * (1.0 - p) * prev)
            / (p * (nf - df));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Krawtchouk eigenbasis of the parabolic path graph A_{i,i+1} = √(i(N−i)).
///
/// Eigenvalues are N−1−2k for k = 0..N−1; eigenvector k has entries
/// √(C(N−1,k) C(N−1,Q−1)/2^(N−1)) · K_k(Q−1, 1/2, N−1). The entries are
/// generated by the degree recurrence in its orthonormal form
///
///   √((k+1)(n−k)) Φ_{k+1,l} = (n−2l) Φ_{k,l} − √(k(n−k+1)) Φ_{k−1,l}
///
/// starting from Φ_{0,l} = √(C(n,l)/2^n), n = N−1, which keeps every
/// intermediate O(1) instead of multiplying huge polynomial values by tiny
/// factorial weights (those overflow f64 near N ≈ 170). Only the columns
/// with λ ≥ 0 are generated; the path graph is bipartite, so the column for
/// −λ is the +λ column with site-alternating signs.
pub fn parabolic_adjacency_eigs(n: usize) -> Result<AdjacencyEigs, SpectralError> {
    if n < 2 {
        return Err(ModelError::ChainTooShort(n).into());
    }
    let order = n - 1;
    let nf = order as f64;
    // log-binomial start column sqrt(C(order, l) / 2^order)
    let mut base = Vec::with_capacity(n);
    let mut ln_c = 0.0;
    for l in 0..n {
        base.push((0.5 * (ln_c - nf * std::f64::consts::LN_2)).exp());
        ln_c += ((order - l) as f64 / (l + 1) as f64).ln();
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|k| nf - 2.0 * k as f64).collect();
    let mut vectors = DMatrix::zeros(n, n);
    let mid = (n - 1) / 2; // last column with lambda >= 0
    let mut prev = vec![0.0; n];
    let mut cur = base;
    for k in 0..=mid {
        let mut norm_sq = 0.0;
        for l in 0..n {
            norm_sq += cur[l] * cur[l];
        }
        let inv = 1.0 / norm_sq.sqrt();
        for l in 0..n {
            vectors[(l, k)] = cur[l] * inv;
        }
        if k < mid {
            let kf = k as f64;
            let down = (kf * (nf - kf + 1.0)).sqrt();
            let up = ((kf + 1.0) * (nf - kf)).sqrt();
            for l in 0..n {
                let next = ((nf - 2.0 * l as f64) * cur[l] - down * prev[l]) / up;
                prev[l] = cur[l];
                cur[l] = next;
            }
        }
    }
    for k in (mid + 1)..n {
        let src = n - 1 - k;
        for l in 0..n {
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            vectors[(l, k)] = sign * vectors[(l, src)];
        }
        eigenvalues[k] = -eigenvalues[src];
    }
    Ok(AdjacencyEigs { eigenvalues, vectors })
}

/// Spatial eigenbasis for a closed-form profile.
pub fn adjacency_eigs(profile: &CouplingProfile, n: usize) -> Result<AdjacencyEigs, SpectralError> {
    match profile {
        CouplingProfile::Uniform => uniform_adjacency_eigs(n),
        CouplingProfile::Parabolic => parabolic_adjacency_eigs(n),
        CouplingProfile::Custom(_) => Err(SpectralError::CustomProfile),
    }
}

/// Composition of a dressed state over the bare pair (|g,n⟩, |e,n−1⟩),
/// unit-normalized with the photonic coefficient kept non-negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedCoefficients {
    /// Coefficient of |g,n⟩ (photonic component).
    pub c_ground_photon: f64,
    /// Coefficient of |e,n−1⟩ (atomic component).
    pub c_excited_atom: f64,
}

/// Generalized Rabi frequency χ(n) = √(nβ² + Δ²/4).
pub fn rabi(n_excitations: u32, delta: f64, beta: f64) -> f64 {
    (n_excitations as f64 * beta * beta + 0.25 * delta * delta).sqrt()
}

/// Robust normalized eigenvectors of [[a, b], [b, d]] written as
/// (half-difference h = (a−d)/2, off-diagonal b). Returns the pair for
/// E₊ = (a+d)/2 + R and E₋ = (a+d)/2 − R, R = √(h²+b²), each with the
/// first component non-negative (or the second, if the first vanishes).
fn two_level_mixing(h: f64, b: f64) -> Option<(DressedCoefficients, DressedCoefficients)> {
    let r = h.hypot(b);
    if r == 0.0 {
        return None;
    }
    // of the two algebraically equivalent eigenvector forms, pick the one
    // whose norm is bounded below by R
    let (plus, minus) = if h >= 0.0 {
        ((h + r, b), (b, -(h + r)))
    } else {
        ((b, r - h), (r - h, -b))
    };
    Some((canonical(plus), canonical(minus)))
}

fn canonical((x, y): (f64, f64)) -> DressedCoefficients {
    let norm = x.hypot(y);
    let (mut x, mut y) = (x / norm, y / norm);
    if x < 0.0 || (x == 0.0 && y < 0.0) {
        x = -x;
        y = -y;
    }
    DressedCoefficients { c_ground_photon: x, c_excited_atom: y }
}

/// Dressed-state coefficients of |+,n⟩ and |−,n⟩, the single-cavity
/// eigenstates at energies ±χ(n) (up to the n-photon ladder offset).
///
/// At Δ = 0 this is (|g,n⟩ ± |e,n−1⟩)/√2.
pub fn dressed_state(
    n_excitations: u32,
    delta: f64,
    beta: f64,
) -> Result<(DressedCoefficients, DressedCoefficients), SpectralError> {
    if n_excitations == 0 {
        return Err(SpectralError::ZeroExcitations);
    }
    let g = beta * (n_excitations as f64).sqrt();
    two_level_mixing(0.5 * delta, g).ok_or(SpectralError::DegenerateDressedBasis)
}

fn closed_form_lambda(params: &ChainParams, k: usize) -> Result<f64, SpectralError> {
    let n = params.n_cavities();
    if k >= n {
        return Err(SpectralError::KOutOfRange { k, n });
    }
    match params.profile() {
        CouplingProfile::Uniform => {
            Ok(2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos())
        }
        CouplingProfile::Parabolic => Ok((n - 1) as f64 - 2.0 * k as f64),
        CouplingProfile::Custom(_) => Err(SpectralError::CustomProfile),
    }
}

/// The 2×2 block of H on spatial mode k (0-based storage index):
/// [[Δ/2 − κλ_k, β], [β, −Δ/2]].
pub fn jch_block(k: usize, params: &ChainParams) -> Result<Matrix2<f64>, SpectralError> {
    let lambda = closed_form_lambda(params, k)?;
    Ok(Matrix2::new(
        0.5 * params.delta() - params.kappa() * lambda,
        params.beta(),
        params.beta(),
        -0.5 * params.delta(),
    ))
}

fn block_eigenpair(
    params: &ChainParams,
    lambda: f64,
) -> (f64, f64, DressedCoefficients, DressedCoefficients) {
    let mean = -0.5 * params.kappa() * lambda;
    let h = 0.5 * (params.delta() - params.kappa() * lambda);
    let r = h.hypot(params.beta());
    let (mix_plus, mix_minus) = two_level_mixing(h, params.beta()).unwrap_or((
        // fully degenerate block (beta = 0 and Delta = kappa*lambda): any
        // orthonormal pair diagonalizes it
        DressedCoefficients { c_ground_photon: 1.0, c_excited_atom: 0.0 },
        DressedCoefficients { c_ground_photon: 0.0, c_excited_atom: 1.0 },
    ));
    (mean + r, mean - r, mix_plus, mix_minus)
}

/// Full closed-form spectrum: per spatial mode k the energies E±(k) and the
/// photon/atom mixing of |±,k⟩ = (c_ph |g,1⟩ + c_at |e,0⟩) ⊗ |k⟩.
#[derive(Debug, Clone)]
pub struct BlockSpectrum {
    params: ChainParams,
    spatial: AdjacencyEigs,
    e_plus: Vec<f64>,
    e_minus: Vec<f64>,
    mix_plus: Vec<DressedCoefficients>,
    mix_minus: Vec<DressedCoefficients>,
}

/// Which of the two block eigenstates, E₊ ≥ E₋.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl BlockSpectrum {
    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.e_plus.len()
    }

    pub fn spatial(&self) -> &AdjacencyEigs {
        &self.spatial
    }

    pub fn e_plus(&self) -> &[f64] {
        &self.e_plus
    }

    pub fn e_minus(&self) -> &[f64] {
        &self.e_minus
    }

    pub fn energy(&self, k: usize, branch: Branch) -> f64 {
        match branch {
            Branch::Plus => self.e_plus[k],
            Branch::Minus => self.e_minus[k],
        }
    }

    pub fn mixing(&self, k: usize, branch: Branch) -> DressedCoefficients {
        match branch {
            Branch::Plus => self.mix_plus[k],
            Branch::Minus => self.mix_minus[k],
        }
    }

    /// Eigenvector of |branch, k⟩ assembled in the interleaved basis.
    pub fn eigenvector(&self, k: usize, branch: Branch) -> Vec<f64> {
        let n = self.n();
        let mix = self.mixing(k, branch);
        let mut v = vec![0.0; 2 * n];
        for q in 1..=n {
            let spatial = self.spatial.component(k, q);
            v[2 * (q - 1)] = mix.c_ground_photon * spatial;
            v[2 * (q - 1) + 1] = mix.c_excited_atom * spatial;
        }
        v
    }

    /// All 2N eigenpairs: energies and matching eigenvector columns, with
    /// column 2k the plus branch of mode k and column 2k+1 the minus branch.
    pub fn dense_eigenpairs(&self) -> (Vec<f64>, DMatrix<f64>) {
        let n = self.n();
        let mut energies = Vec::with_capacity(2 * n);
        let mut vectors = DMatrix::zeros(2 * n, 2 * n);
        for k in 0..n {
            for (col, branch) in [(2 * k, Branch::Plus), (2 * k + 1, Branch::Minus)] {
                energies.push(self.energy(k, branch));
                let v = self.eigenvector(k, branch);
                for (row, x) in v.into_iter().enumerate() {
                    vectors[(row, col)] = x;
                }
            }
        }
        (energies, vectors)
    }
}

/// Diagonalize the one-excitation Hamiltonian in closed form.
pub fn jch_spectrum(params: &ChainParams) -> Result<BlockSpectrum, SpectralError> {
    let spatial = adjacency_eigs(params.profile(), params.n_cavities())?;
    let n = spatial.n();
    let mut e_plus = Vec::with_capacity(n);
    let mut e_minus = Vec::with_capacity(n);
    let mut mix_plus = Vec::with_capacity(n);
    let mut mix_minus = Vec::with_capacity(n);
    for &lambda in spatial.eigenvalues() {
        let (ep, em, mp, mm) = block_eigenpair(params, lambda);
        e_plus.push(ep);
        e_minus.push(em);
        mix_plus.push(mp);
        mix_minus.push(mm);
    }
    Ok(BlockSpectrum {
        params: params.clone(),
        spatial,
        e_plus,
        e_minus,
        mix_plus,
        mix_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn uniform_params(n: usize, beta: f64, kappa: f64, delta: f64) -> ChainParams {
        ChainParams::new(n, beta, kappa, delta, CouplingProfile::Uniform).unwrap()
    }

    #[test]
    fn uniform_n3_eigenvalues_exact() {
        let eigs = uniform_adjacency_eigs(3).unwrap();
        let sqrt2 = std::f64::consts::SQRT_2;
        for (got, want) in eigs.eigenvalues().iter().zip([sqrt2, 0.0, -sqrt2]) {
            assert_relative_eq!(*got, want, epsilon = 1e-14);
        }
    }

    #[test]
    fn uniform_n2_vectors() {
        let eigs = uniform_adjacency_eigs(2).unwrap();
        assert_relative_eq!(eigs.eigenvalues()[0], 1.0, epsilon = 1e-14);
        assert_relative_eq!(eigs.eigenvalues()[1], -1.0, epsilon = 1e-14);
        let s = 1.0 / std::f64::consts::SQRT_2;
        assert_relative_eq!(eigs.component(0, 1), s, epsilon = 1e-14);
        assert_relative_eq!(eigs.component(0, 2), s, epsilon = 1e-14);
        assert_relative_eq!(eigs.component(1, 1), s, epsilon = 1e-14);
        assert_relative_eq!(eigs.component(1, 2), -s, epsilon = 1e-14);
    }

    fn max_orthonormality_defect(eigs: &AdjacencyEigs) -> f64 {
        let v = eigs.vectors();
        let gram = v.transpose() * v;
        let mut defect: f64 = 0.0;
        for i in 0..eigs.n() {
            for j in 0..eigs.n() {
                let want = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((gram[(i, j)] - want).abs());
            }
        }
        defect
    }

    #[test]
    fn uniform_n100_orthonormal() {
        let eigs = uniform_adjacency_eigs(100).unwrap();
        assert!(max_orthonormality_defect(&eigs) < 1e-10);
    }

    #[test]
    fn parabolic_eigenvalues_are_integers() {
        let eigs = parabolic_adjacency_eigs(3).unwrap();
        assert_eq!(eigs.eigenvalues(), &[2.0, 0.0, -2.0]);
        let eigs = parabolic_adjacency_eigs(2).unwrap();
        assert_eq!(eigs.eigenvalues(), &[1.0, -1.0]);
    }

    #[test]
    fn parabolic_n60_residuals() {
        let n = 60;
        let eigs = parabolic_adjacency_eigs(n).unwrap();
        let weights = CouplingProfile::Parabolic.bond_weights(n);
        for k in 0..n {
            let lambda = eigs.eigenvalues()[k];
            let mut defect: f64 = 0.0;
            for q in 1..=n {
                let mut av = 0.0;
                if q > 1 {
                    av += weights[q - 2] * eigs.component(k, q - 1);
                }
                if q < n {
                    av += weights[q - 1] * eigs.component(k, q + 1);
                }
                defect = defect.max((av - lambda * eigs.component(k, q)).abs());
            }
            assert!(defect < 1e-8, "k={k} residual {defect}");
        }
    }

    #[test]
    fn parabolic_n200_orthonormal() {
        let eigs = parabolic_adjacency_eigs(200).unwrap();
        assert!(max_orthonormality_defect(&eigs) < 1e-8);
    }

    #[test]
    fn krawtchouk_degree_zero_is_one() {
        for l in 0..=6 {
            assert_eq!(krawtchouk(0, l, 0.5, 6).unwrap(), 1.0);
        }
    }

    #[test]
    fn krawtchouk_degree_one() {
        // first-order terminating series: K_1(l, p, n) = 1 - l/(p n)
        for n in [4usize, 9, 30] {
            for l in 0..=n {
                let got = krawtchouk(1, l, 0.5, n).unwrap();
                assert_relative_eq!(got, 1.0 - 2.0 * l as f64 / n as f64, epsilon = 1e-14);
            }
        }
    }

    /// Brute-force terminating hypergeometric series, exact for small inputs.
    fn krawtchouk_series(k: usize, l: usize, p: f64, n: usize) -> f64 {
        let mut total = 0.0;
        let mut term = 1.0; // j = 0
        for j in 0..=k.min(l) {
            if j > 0 {
                let jf = j as f64;
                term *= (-(k as f64) + jf - 1.0) * (-(l as f64) + jf - 1.0)
                    / ((-(n as f64) + jf - 1.0) * jf * p);
            }
            total += term;
        }
        total
    }

    #[test]
    fn krawtchouk_matches_series_oracle() {
        assert_relative_eq!(krawtchouk(2, 3, 0.5, 6).unwrap(), -0.2, epsilon = 1e-14);
        for n in [5usize, 8, 12] {
            for k in 0..=n {
                for l in 0..=n {
                    for p in [0.25, 0.5, 0.75] {
                        let got = krawtchouk(k, l, p, n).unwrap();
                        let want = krawtchouk_series(k, l, p, n);
                        assert_relative_eq!(got, want, epsilon = 1e-10, max_relative = 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn krawtchouk_domain_errors() {
        assert!(krawtchouk(7, 0, 0.5, 6).is_err());
        assert!(krawtchouk(0, 7, 0.5, 6).is_err());
        assert!(krawtchouk(1, 1, 0.0, 6).is_err());
        assert!(krawtchouk(1, 1, 1.0, 6).is_err());
    }

    #[test]
    fn rabi_at_zero_detuning() {
        assert_relative_eq!(rabi(1, 0.0, 2.5), 2.5, epsilon = 1e-15);
        assert_relative_eq!(rabi(4, 0.0, 1.0), 2.0, epsilon = 1e-15);
        assert_relative_eq!(rabi(1, 6.0, 4.0), 5.0, epsilon = 1e-15);
    }

    #[test]
    fn dressed_state_resonant() {
        let (plus, minus) = dressed_state(1, 0.0, 1.0).unwrap();
        let s = 1.0 / std::f64::consts::SQRT_2;
        assert_relative_eq!(plus.c_ground_photon, s, epsilon = 1e-15);
        assert_relative_eq!(plus.c_excited_atom, s, epsilon = 1e-15);
        assert_relative_eq!(minus.c_ground_photon, s, epsilon = 1e-15);
        assert_relative_eq!(minus.c_excited_atom, -s, epsilon = 1e-15);
    }

    #[test]
    fn dressed_state_matches_two_level_eigensolve() {
        // oracle: diagonalize [[Δ/2, β√n], [β√n, -Δ/2]] numerically
        for (n, delta, beta) in [(1u32, 10.0, 1.0), (1, -3.0, 0.7), (2, 0.5, 1.3)] {
            let g = beta * (n as f64).sqrt();
            let m = Matrix2::new(0.5 * delta, g, g, -0.5 * delta);
            let se = nalgebra::SymmetricEigen::new(m);
            let (hi, lo) = if se.eigenvalues[0] >= se.eigenvalues[1] { (0, 1) } else { (1, 0) };
            let (plus, minus) = dressed_state(n, delta, beta).unwrap();
            for (idx, mix) in [(hi, plus), (lo, minus)] {
                let v = se.eigenvectors.column(idx);
                let overlap = (v[0] * mix.c_ground_photon + v[1] * mix.c_excited_atom).abs();
                assert_relative_eq!(overlap, 1.0, epsilon = 1e-12);
            }
            assert_relative_eq!(
                plus.c_ground_photon.hypot(plus.c_excited_atom),
                1.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn dressed_state_degenerate_rejected() {
        assert_eq!(dressed_state(1, 0.0, 0.0).unwrap_err(), SpectralError::DegenerateDressedBasis);
        assert_eq!(dressed_state(0, 1.0, 1.0).unwrap_err(), SpectralError::ZeroExcitations);
    }

    #[test]
    fn dressed_state_bare_limit() {
        // beta = 0, Delta > 0: plus branch is purely photonic
        let (plus, minus) = dressed_state(1, 4.0, 0.0).unwrap();
        assert_relative_eq!(plus.c_ground_photon, 1.0, epsilon = 1e-15);
        assert_relative_eq!(plus.c_excited_atom, 0.0, epsilon = 1e-15);
        assert_relative_eq!(minus.c_ground_photon, 0.0, epsilon = 1e-15);
        assert_relative_eq!(minus.c_excited_atom, 1.0, epsilon = 1e-15);
        // beta = 0, Delta < 0: roles swap
        let (plus, minus) = dressed_state(1, -4.0, 0.0).unwrap();
        assert_relative_eq!(plus.c_ground_photon, 0.0, epsilon = 1e-15);
        assert_relative_eq!(plus.c_excited_atom, 1.0, epsilon = 1e-15);
        assert_relative_eq!(minus.c_ground_photon, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn block_reduces_to_single_cavity_at_zero_hopping() {
        let p = uniform_params(5, 2.0, 0.0, 0.0);
        for k in 0..5 {
            let b = jch_block(k, &p).unwrap();
            assert_eq!(b, Matrix2::new(0.0, 2.0, 2.0, 0.0));
        }
    }

    #[test]
    fn block_decoupled_at_zero_beta() {
        let p = uniform_params(4, 0.0, 1.5, 0.0);
        for k in 0..4 {
            let lambda = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 5.0).cos();
            let b = jch_block(k, &p).unwrap();
            assert_relative_eq!(b[(0, 0)], -1.5 * lambda, epsilon = 1e-14);
            assert_eq!(b[(0, 1)], 0.0);
            assert_eq!(b[(1, 1)], 0.0);
        }
    }

    #[test]
    fn block_rejects_custom_profile() {
        let p = ChainParams::new(3, 1.0, 1.0, 0.0, CouplingProfile::Custom(vec![1.0, 2.0]))
            .unwrap();
        assert_eq!(jch_block(0, &p).unwrap_err(), SpectralError::CustomProfile);
        assert_eq!(jch_spectrum(&p).unwrap_err(), SpectralError::CustomProfile);
    }

    #[test]
    fn block_k_range_checked() {
        let p = uniform_params(3, 1.0, 1.0, 0.0);
        assert!(jch_block(3, &p).is_err());
    }

    #[test]
    fn spectrum_degenerate_jc_doublet() {
        // kappa -> 0: every block gives +-beta
        let p = uniform_params(6, 1.3, 0.0, 0.0);
        let s = jch_spectrum(&p).unwrap();
        for k in 0..6 {
            assert_relative_eq!(s.energy(k, Branch::Plus), 1.3, epsilon = 1e-14);
            assert_relative_eq!(s.energy(k, Branch::Minus), -1.3, epsilon = 1e-14);
        }
    }

    #[test]
    fn spectrum_uniform_resonant_closed_form() {
        let (beta, kappa) = (1.0, 0.7);
        let p = uniform_params(10, beta, kappa, 0.0);
        let s = jch_spectrum(&p).unwrap();
        for k in 0..10 {
            let c = kappa * ((k + 1) as f64 * std::f64::consts::PI / 11.0).cos();
            let r = (c * c + beta * beta).sqrt();
            assert_relative_eq!(s.energy(k, Branch::Plus), -c + r, epsilon = 1e-12);
            assert_relative_eq!(s.energy(k, Branch::Minus), -c - r, epsilon = 1e-12);
        }
    }

    #[test]
    fn spectrum_vieta_relations_per_block() {
        // E+ + E- = -kappa*lambda and E+ * E- = -Delta/2(Delta/2 - kappa*lambda) - beta^2
        let p = uniform_params(20, 0.8, 1.7, 0.4);
        let s = jch_spectrum(&p).unwrap();
        for (k, &lambda) in s.spatial().eigenvalues().iter().enumerate() {
            let (ep, em) = (s.energy(k, Branch::Plus), s.energy(k, Branch::Minus));
            assert_relative_eq!(ep + em, -1.7 * lambda, epsilon = 1e-12, max_relative = 1e-12);
            let prod = -0.2 * (0.2 - 1.7 * lambda) - 0.64;
            assert_relative_eq!(ep * em, prod, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn spectrum_completeness_parabolic() {
        let p = ChainParams::new(60, 1.0, 1.0, 0.0, CouplingProfile::Parabolic).unwrap();
        let s = jch_spectrum(&p).unwrap();
        let (_, v) = s.dense_eigenpairs();
        let gram = &v * v.transpose();
        let mut defect: f64 = 0.0;
        for i in 0..120 {
            for j in 0..120 {
                let want = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((gram[(i, j)] - want).abs());
            }
        }
        assert!(defect < 1e-9, "completeness defect {defect}");
    }

    #[test]
    fn mixing_matches_evec_ratio() {
        // eigenvector structure: photonic/atomic amplitude ratio (Δ+2E)/(2β)
        let p = uniform_params(8, 0.9, 1.2, 0.5);
        let s = jch_spectrum(&p).unwrap();
        for k in 0..8 {
            for branch in [Branch::Plus, Branch::Minus] {
                let e = s.energy(k, branch);
                let mix = s.mixing(k, branch);
                let want = (0.5 + 2.0 * e) / (2.0 * 0.9);
                assert_relative_eq!(
                    mix.c_ground_photon / mix.c_excited_atom,
                    want,
                    max_relative = 1e-10
                );
            }
        }
    }
}
