//! Initial-state constructors and exact spectral time evolution.
//!
//! Evolution diagonalizes once and phase-rotates per sample:
//! ψ(t) = Σ_{k,±} e^{−iE±(k) t} |±,k⟩⟨±,k|ψ(0)⟩. There is no integrator
//! and hence no truncation error; unitarity holds to roundoff for any t,
//! negative times included.

use num_complex::Complex64;
use thiserror::Error;

use crate::cvec;
use crate::model::{
    ChainParams, ModelError, SingleExcitationState, SpinChainParams, SpinChainState,
};
use crate::spectral::{adjacency_eigs, dressed_state, BlockSpectrum, Branch, SpectralError};

#[derive(Debug, Error, PartialEq)]
pub enum DynamicsError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("state has {state} cavities but spectrum was built for {spectrum}")]
    DimensionMismatch { state: usize, spectrum: usize },
    #[error("times must be strictly increasing (violated at index {0})")]
    NonMonotoneTimes(usize),
    #[error("gaussian width must be > 0, got {0}")]
    InvalidWidth(f64),
}

/// Excitation at cavity 1 in an equal superposition of photonic and atomic
/// modes: amplitudes 1/√2 on |1⟩⊗|g,1⟩ and |1⟩⊗|e,0⟩.
pub fn initial_localized_superposition(n: usize) -> Result<SingleExcitationState, DynamicsError> {
    initial_localized_superposition_at(n, 1)
}

/// Equal photon/atom superposition localized at an arbitrary cavity.
pub fn initial_localized_superposition_at(
    n: usize,
    q0: usize,
) -> Result<SingleExcitationState, DynamicsError> {
    if n < 2 {
        return Err(ModelError::ChainTooShort(n).into());
    }
    if q0 < 1 || q0 > n {
        return Err(ModelError::CavityOutOfRange { q: q0, n }.into());
    }
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut amps = vec![Complex64::ZERO; 2 * n];
    amps[2 * (q0 - 1)] = s;
    amps[2 * (q0 - 1) + 1] = s;
    Ok(SingleExcitationState::from_amplitudes(amps)?)
}

/// Single-cavity dressed state |±,1⟩ placed at cavity q0.
///
/// At Δ = 0 the plus branch at q0 = 1 coincides with
/// [`initial_localized_superposition`].
pub fn initial_dressed(
    params: &ChainParams,
    q0: usize,
    branch: Branch,
) -> Result<SingleExcitationState, DynamicsError> {
    let n = params.n_cavities();
    if q0 < 1 || q0 > n {
        return Err(ModelError::CavityOutOfRange { q: q0, n }.into());
    }
    let (plus, minus) = dressed_state(1, params.delta(), params.beta())?;
    let mix = match branch {
        Branch::Plus => plus,
        Branch::Minus => minus,
    };
    let mut amps = vec![Complex64::ZERO; 2 * n];
    amps[2 * (q0 - 1)] = Complex64::new(mix.c_ground_photon, 0.0);
    amps[2 * (q0 - 1) + 1] = Complex64::new(mix.c_excited_atom, 0.0);
    Ok(SingleExcitationState::from_amplitudes(amps)?)
}

fn gaussian_envelope(
    n: usize,
    q_center: f64,
    width: f64,
    wavenumber: f64,
) -> Result<Vec<Complex64>, DynamicsError> {
    if n < 2 {
        return Err(ModelError::ChainTooShort(n).into());
    }
    if !(width > 0.0) {
        return Err(DynamicsError::InvalidWidth(width));
    }
    Ok((1..=n)
        .map(|q| {
            let qf = q as f64;
            let d = qf - q_center;
            Complex64::from_polar((-d * d / (2.0 * width * width)).exp(), -wavenumber * qf)
        })
        .collect())
}

/// Gaussian wave packet exp(−(Q−Qc)²/2s²) e^{−ikQ} ⊗ (|g,1⟩+|e,0⟩)/√2,
/// normalized numerically over the finite chain. Qc need not be an integer.
pub fn initial_gaussian_jch(
    n: usize,
    q_center: f64,
    width: f64,
    wavenumber: f64,
) -> Result<SingleExcitationState, DynamicsError> {
    let envelope = gaussian_envelope(n, q_center, width, wavenumber)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = Vec::with_capacity(2 * n);
    for e in envelope {
        amps.push(e * s);
        amps.push(e * s);
    }
    Ok(SingleExcitationState::from_amplitudes(amps)?)
}

/// Initial shapes for the single-magnon reference chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpinInitial {
    /// |Q0⟩ — up spin at one site.
    Localized(usize),
    /// Gaussian envelope, same convention as the JCH constructor.
    Gaussian { q_center: f64, width: f64, wavenumber: f64 },
}

pub fn initial_spin(n: usize, kind: SpinInitial) -> Result<SpinChainState, DynamicsError> {
    match kind {
        SpinInitial::Localized(q0) => {
            if n < 2 {
                return Err(ModelError::ChainTooShort(n).into());
            }
            if q0 < 1 || q0 > n {
                return Err(ModelError::CavityOutOfRange { q: q0, n }.into());
            }
            let mut amps = vec![Complex64::ZERO; n];
            amps[q0 - 1] = Complex64::ONE;
            Ok(SpinChainState::from_amplitudes(amps)?)
        }
        SpinInitial::Gaussian { q_center, width, wavenumber } => {
            let envelope = gaussian_envelope(n, q_center, width, wavenumber)?;
            Ok(SpinChainState::from_amplitudes(envelope)?)
        }
    }
}

/// De-interleave a state into (photonic, atomic) site vectors.
fn split_modes(state: &SingleExcitationState) -> (Vec<Complex64>, Vec<Complex64>) {
    let n = state.n_cavities();
    let amps = state.amplitudes();
    let mut photonic = Vec::with_capacity(n);
    let mut atomic = Vec::with_capacity(n);
    for q in 0..n {
        photonic.push(amps[2 * q]);
        atomic.push(amps[2 * q + 1]);
    }
    (photonic, atomic)
}

fn interleave(photonic: &[Complex64], atomic: &[Complex64]) -> Vec<Complex64> {
    let mut amps = Vec::with_capacity(2 * photonic.len());
    for (p, a) in photonic.iter().zip(atomic) {
        amps.push(*p);
        amps.push(*a);
    }
    amps
}

/// The state projected onto the closed-form eigenbasis; phase rotation and
/// reassembly per sample are O(N²) with no further projection cost.
struct SpectralCoefficients<'a> {
    spectrum: &'a BlockSpectrum,
    c_plus: Vec<Complex64>,
    c_minus: Vec<Complex64>,
}

impl<'a> SpectralCoefficients<'a> {
    fn project(
        spectrum: &'a BlockSpectrum,
        state: &SingleExcitationState,
    ) -> Result<Self, DynamicsError> {
        if state.n_cavities() != spectrum.n() {
            return Err(DynamicsError::DimensionMismatch {
                state: state.n_cavities(),
                spectrum: spectrum.n(),
            });
        }
        let (photonic, atomic) = split_modes(state);
        let v = spectrum.spatial().vectors();
        let u_ph = cvec::tr_mat_vec(v, &photonic);
        let u_at = cvec::tr_mat_vec(v, &atomic);
        let n = spectrum.n();
        let mut c_plus = Vec::with_capacity(n);
        let mut c_minus = Vec::with_capacity(n);
        for k in 0..n {
            let mp = spectrum.mixing(k, Branch::Plus);
            let mm = spectrum.mixing(k, Branch::Minus);
            c_plus.push(mp.c_ground_photon * u_ph[k] + mp.c_excited_atom * u_at[k]);
            c_minus.push(mm.c_ground_photon * u_ph[k] + mm.c_excited_atom * u_at[k]);
        }
        Ok(Self { spectrum, c_plus, c_minus })
    }

    fn sample(&self, t: f64) -> SingleExcitationState {
        let n = self.spectrum.n();
        let mut w_ph = Vec::with_capacity(n);
        let mut w_at = Vec::with_capacity(n);
        for k in 0..n {
            let cp = self.c_plus[k]
                * Complex64::from_polar(1.0, -self.spectrum.energy(k, Branch::Plus) * t);
            let cm = self.c_minus[k]
                * Complex64::from_polar(1.0, -self.spectrum.energy(k, Branch::Minus) * t);
            let mp = self.spectrum.mixing(k, Branch::Plus);
            let mm = self.spectrum.mixing(k, Branch::Minus);
            w_ph.push(mp.c_ground_photon * cp + mm.c_ground_photon * cm);
            w_at.push(mp.c_excited_atom * cp + mm.c_excited_atom * cm);
        }
        let v = self.spectrum.spatial().vectors();
        let photonic = cvec::mat_vec(v, &w_ph);
        let atomic = cvec::mat_vec(v, &w_at);
        SingleExcitationState::from_amplitudes(interleave(&photonic, &atomic))
            .expect("spectral propagation preserves the norm")
    }
}

/// Evolve a state for time t (negative t reverses the evolution).
pub fn evolve(
    state: &SingleExcitationState,
    spectrum: &BlockSpectrum,
    t: f64,
) -> Result<SingleExcitationState, DynamicsError> {
    Ok(SpectralCoefficients::project(spectrum, state)?.sample(t))
}

/// Time grid with the sampled states.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<SingleExcitationState>,
    params: ChainParams,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[SingleExcitationState] {
        &self.states
    }

    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &SingleExcitationState)> {
        self.times.iter().copied().zip(self.states.iter())
    }
}

fn check_monotone(times: &[f64]) -> Result<(), DynamicsError> {
    for i in 1..times.len() {
        if times[i] <= times[i - 1] {
            return Err(DynamicsError::NonMonotoneTimes(i));
        }
    }
    Ok(())
}

/// Sample the evolution on a strictly increasing time grid, projecting onto
/// the eigenbasis once.
pub fn evolve_series(
    state: &SingleExcitationState,
    spectrum: &BlockSpectrum,
    times: &[f64],
) -> Result<Trajectory, DynamicsError> {
    check_monotone(times)?;
    let coeffs = SpectralCoefficients::project(spectrum, state)?;
    let states = times.iter().map(|&t| coeffs.sample(t)).collect();
    Ok(Trajectory {
        times: times.to_vec(),
        states,
        params: spectrum.params().clone(),
    })
}

struct SpinCoefficients {
    energies: Vec<f64>,
    vectors: nalgebra::DMatrix<f64>,
    coeffs: Vec<Complex64>,
}

impl SpinCoefficients {
    fn project(state: &SpinChainState, params: &SpinChainParams) -> Result<Self, DynamicsError> {
        let eigs = adjacency_eigs(params.profile(), params.n_sites())?;
        if state.n_sites() != params.n_sites() {
            return Err(DynamicsError::DimensionMismatch {
                state: state.n_sites(),
                spectrum: params.n_sites(),
            });
        }
        let energies = eigs
            .eigenvalues()
            .iter()
            .map(|&lambda| -0.5 * params.j_coupling() * lambda)
            .collect();
        let coeffs = cvec::tr_mat_vec(eigs.vectors(), state.amplitudes());
        Ok(Self { energies, vectors: eigs.vectors().clone(), coeffs })
    }

    fn sample(&self, t: f64) -> SpinChainState {
        let rotated: Vec<Complex64> = self
            .coeffs
            .iter()
            .zip(&self.energies)
            .map(|(c, &e)| c * Complex64::from_polar(1.0, -e * t))
            .collect();
        SpinChainState::from_amplitudes(cvec::mat_vec(&self.vectors, &rotated))
            .expect("spectral propagation preserves the norm")
    }
}

/// Evolve a single-magnon state under −(J/2) A.
pub fn spin_evolve(
    state: &SpinChainState,
    params: &SpinChainParams,
    t: f64,
) -> Result<SpinChainState, DynamicsError> {
    Ok(SpinCoefficients::project(state, params)?.sample(t))
}

/// Time grid of single-magnon states.
#[derive(Debug, Clone)]
pub struct SpinTrajectory {
    times: Vec<f64>,
    states: Vec<SpinChainState>,
    params: SpinChainParams,
}

impl SpinTrajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[SpinChainState] {
        &self.states
    }

    pub fn params(&self) -> &SpinChainParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &SpinChainState)> {
        self.times.iter().copied().zip(self.states.iter())
    }
}

pub fn spin_evolve_series(
    state: &SpinChainState,
    params: &SpinChainParams,
    times: &[f64],
) -> Result<SpinTrajectory, DynamicsError> {
    check_monotone(times)?;
    let coeffs = SpinCoefficients::project(state, params)?;
    let states = times.iter().map(|&t| coeffs.sample(t)).collect();
    Ok(SpinTrajectory { times: times.to_vec(), states, params: params.clone() })
}

/// Uniform grid of `n_samples` times over [0, t_max].
pub fn time_grid(t_max: f64, n_samples: usize) -> Vec<f64> {
    assert!(n_samples >= 1 && t_max > 0.0);
    if n_samples == 1 {
        return vec![0.0];
    }
    (0..n_samples)
        .map(|i| t_max * i as f64 / (n_samples - 1) as f64)
        .collect()
}
