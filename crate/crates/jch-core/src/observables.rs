//! Occupations, conditional positions, dispersion, analytic envelopes, and
//! empirical speed extraction.
//!
//! Positions use the cavity index as the coordinate (lattice constant 1).
//! Conditional means restrict to one excitation mode: the mode's occupation
//! vector is renormalized before taking moments, so an unoccupied mode has
//! no defined position and is reported as an error rather than a silent 0.

use thiserror::Error;

use crate::dynamics::{
    initial_spin, spin_evolve, DynamicsError, SpinInitial, SpinTrajectory, Trajectory,
};
use crate::model::{Mode, ModelError, SingleExcitationState, SpinChainParams, SpinChainState};
use crate::model::CouplingProfile;

/// Below this probability mass a mode is treated as unoccupied.
pub const MODE_WEIGHT_EPS: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum ObservableError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error("mode unoccupied: probability mass {weight} <= {MODE_WEIGHT_EPS}")]
    ModeUnoccupied { weight: f64 },
    #[error("speed fit needs at least 5 samples, got {0}")]
    WindowTooShort(usize),
}

/// Per-cavity occupation probabilities ⟨a†_Q a_Q⟩ and ⟨σ⁺_Q σ⁻_Q⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupationProfile {
    pub photonic: Vec<f64>,
    pub atomic: Vec<f64>,
}

impl OccupationProfile {
    pub fn n_cavities(&self) -> usize {
        self.photonic.len()
    }

    /// Total probability; 1 for a normalized one-excitation state.
    pub fn total(&self) -> f64 {
        self.photonic.iter().sum::<f64>() + self.atomic.iter().sum::<f64>()
    }

    pub fn mode(&self, mode: Mode) -> &[f64] {
        match mode {
            Mode::Photonic => &self.photonic,
            Mode::Atomic => &self.atomic,
        }
    }
}

pub fn occupations(state: &SingleExcitationState) -> OccupationProfile {
    let n = state.n_cavities();
    let amps = state.amplitudes();
    let mut photonic = Vec::with_capacity(n);
    let mut atomic = Vec::with_capacity(n);
    for q in 0..n {
        photonic.push(amps[2 * q].norm_sqr());
        atomic.push(amps[2 * q + 1].norm_sqr());
    }
    OccupationProfile { photonic, atomic }
}

pub fn spin_occupations(state: &SpinChainState) -> Vec<f64> {
    state.amplitudes().iter().map(|a| a.norm_sqr()).collect()
}

/// Which excitation channel a position statistic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackedMode {
    Photonic,
    Atomic,
    Spin,
}

impl From<Mode> for TrackedMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Photonic => TrackedMode::Photonic,
            Mode::Atomic => TrackedMode::Atomic,
        }
    }
}

/// Conditional position statistics of one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionSample {
    pub mode: TrackedMode,
    /// Conditional ⟨Q⟩ over the mode's renormalized occupation vector.
    pub q_mean: f64,
    /// ΔQ = √(⟨Q²⟩ − ⟨Q⟩²), same conditioning.
    pub q_std: f64,
    /// Probability mass found in the mode.
    pub mode_weight: f64,
}

fn position_stats(occupation: &[f64]) -> Result<(f64, f64, f64), ObservableError> {
    let weight: f64 = occupation.iter().sum();
    if weight <= MODE_WEIGHT_EPS {
        return Err(ObservableError::ModeUnoccupied { weight });
    }
    let mut m1 = 0.0;
    let mut m2 = 0.0;
    for (i, &p) in occupation.iter().enumerate() {
        let q = (i + 1) as f64;
        m1 += q * p;
        m2 += q * q * p;
    }
    let mean = m1 / weight;
    let var = (m2 / weight - mean * mean).max(0.0);
    Ok((mean, var.sqrt(), weight))
}

pub fn conditional_position(
    state: &SingleExcitationState,
    mode: Mode,
) -> Result<DispersionSample, ObservableError> {
    let occ = occupations(state);
    let (q_mean, q_std, mode_weight) = position_stats(occ.mode(mode))?;
    Ok(DispersionSample { mode: mode.into(), q_mean, q_std, mode_weight })
}

pub fn spin_position(state: &SpinChainState) -> Result<DispersionSample, ObservableError> {
    let occ = spin_occupations(state);
    let (q_mean, q_std, mode_weight) = position_stats(&occ)?;
    Ok(DispersionSample { mode: TrackedMode::Spin, q_mean, q_std, mode_weight })
}

/// Triangle-wave envelope of a wavefront launched from cavity 1 and bouncing
/// between the hard walls at speed J:
/// Q∧(t) = (N−1)/π · arcsin(sin(π(Jt/N − 1/2))) + (N+1)/2.
pub fn triangle_wave(n: usize, j: f64, t: f64) -> f64 {
    assert!(j > 0.0, "triangle_wave needs J > 0");
    let nf = n as f64;
    let phase = std::f64::consts::PI * (j * t / nf - 0.5);
    (nf - 1.0) / std::f64::consts::PI * phase.sin().asin() + 0.5 * (nf + 1.0)
}

/// Triangle wave phase-shifted for a pulse launched from the chain center:
/// value (N+1)/2 at t = 0, reaching the wall at t = N/(2J).
pub fn triangle_wave_centered(n: usize, j: f64, t: f64) -> f64 {
    assert!(j > 0.0, "triangle_wave_centered needs J > 0");
    let nf = n as f64;
    let phase = std::f64::consts::PI * j * t / nf;
    (nf - 1.0) / std::f64::consts::PI * phase.sin().asin() + 0.5 * (nf + 1.0)
}

/// Position law of the parabolic chain, ⟨Q(t)⟩ = [N+1 − (N−1)cos(Jt)]/2;
/// the oscillation period 2π/J is independent of N.
pub fn parabolic_position(n: usize, j: f64, t: f64) -> f64 {
    assert!(j > 0.0, "parabolic_position needs J > 0");
    let nf = n as f64;
    0.5 * (nf + 1.0 - (nf - 1.0) * (j * t).cos())
}

/// How far along the chain the triangle-wave front has travelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontFraction {
    /// Q∧ = N/4.
    Quarter,
    /// Q∧ = N/2.
    Half,
}

/// Dispersion ΔQ of a uniform spin chain started in |1⟩, evaluated at the
/// time the triangle-wave front reaches N/4 or N/2. Depends on (N, fraction)
/// only — J rescales time, so ΔQ(J, t) = ΔQ(1, Jt) — and is computed by
/// direct evolution, not tabulated.
pub fn heisenberg_dispersion_reference(
    n: usize,
    j: f64,
    fraction: FrontFraction,
) -> Result<f64, ObservableError> {
    let nf = n as f64;
    let target = match fraction {
        FrontFraction::Quarter => nf / 4.0,
        FrontFraction::Half => nf / 2.0,
    };
    // invert the first ramp of the triangle wave: Q = 1 + (N-1) Jt/N
    let t_star = nf * (target - 1.0) / (j * (nf - 1.0));
    let params = SpinChainParams::new(n, j, CouplingProfile::Uniform)?;
    let s0 = initial_spin(n, SpinInitial::Localized(1))?;
    let st = spin_evolve(&s0, &params, t_star)?;
    Ok(spin_position(&st)?.q_std)
}

/// Least-squares slope of a conditional centroid over a fit window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedFit {
    /// Fitted speed (slope of q_mean against t).
    pub j_est: f64,
    /// RMS residual of the affine fit, in cavity units.
    pub residual: f64,
}

fn fit_slope(times: &[f64], means: &[f64]) -> Result<SpeedFit, ObservableError> {
    let n = times.len();
    if n < 5 {
        return Err(ObservableError::WindowTooShort(n));
    }
    let nf = n as f64;
    let t_bar = times.iter().sum::<f64>() / nf;
    let q_bar = means.iter().sum::<f64>() / nf;
    let mut num = 0.0;
    let mut den = 0.0;
    for (&t, &q) in times.iter().zip(means) {
        num += (t - t_bar) * (q - q_bar);
        den += (t - t_bar) * (t - t_bar);
    }
    let slope = num / den;
    let intercept = q_bar - slope * t_bar;
    let ss: f64 = times
        .iter()
        .zip(means)
        .map(|(&t, &q)| {
            let r = q - (intercept + slope * t);
            r * r
        })
        .sum();
    Ok(SpeedFit { j_est: slope, residual: (ss / nf).sqrt() })
}

/// Fit the conditional centroid slope of one mode along a trajectory.
///
/// The trajectory should stay clear of the first boundary reflection for
/// the chosen mode; the fit makes no attempt to detect reflections.
pub fn measure_speed(trajectory: &Trajectory, mode: Mode) -> Result<SpeedFit, ObservableError> {
    let mut means = Vec::with_capacity(trajectory.len());
    for (_, state) in trajectory.iter() {
        means.push(conditional_position(state, mode)?.q_mean);
    }
    fit_slope(trajectory.times(), &means)
}

/// [`measure_speed`] for a single-magnon trajectory.
pub fn spin_measure_speed(trajectory: &SpinTrajectory) -> Result<SpeedFit, ObservableError> {
    let mut means = Vec::with_capacity(trajectory.len());
    for (_, state) in trajectory.iter() {
        means.push(spin_position(state)?.q_mean);
    }
    fit_slope(trajectory.times(), &means)
}
