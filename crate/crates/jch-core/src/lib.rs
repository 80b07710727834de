//! Exact single-excitation dynamics of one-dimensional Jaynes-Cummings-
//! Hubbard cavity chains.
//!
//! A chain of N single-mode cavities, each holding one two-level atom, is
//! restricted to the subspace with one excitation (photonic or atomic).
//! There the Hamiltonian block-diagonalizes over the eigenbasis of the
//! inter-cavity adjacency matrix, which is known in closed form for uniform
//! and parabolic coupling profiles. This crate provides:
//!
//! * [`model`] — parameter and state types, basis conventions;
//! * [`spectral`] — closed-form adjacency eigenbases (sine / Krawtchouk),
//!   dressed states, 2×2 blocks, and the full spectrum;
//! * [`dynamics`] — initial states and exact spectral propagation, plus the
//!   single-magnon reference chain;
//! * [`observables`] — occupations, conditional positions, dispersion,
//!   analytic envelopes, speed fits;
//! * [`oracle`] — the independent dense-matrix route used to validate all
//!   closed forms;
//! * [`effective`] — limit-regime effective models and speed predictions.

pub mod model;
pub mod spectral;
pub mod dynamics;
pub mod observables;
pub mod oracle;
pub mod effective;

mod cvec;

pub use model::{
    basis_index, basis_site_mode, ChainParams, CouplingProfile, Mode, ModelError,
    SingleExcitationState, SpinChainParams, SpinChainState,
};
pub use spectral::{
    adjacency_eigs, dressed_state, jch_block, jch_spectrum, krawtchouk,
    parabolic_adjacency_eigs, rabi, uniform_adjacency_eigs, AdjacencyEigs, BlockSpectrum, Branch,
    DressedCoefficients, SpectralError,
};
pub use dynamics::{
    evolve, evolve_series, initial_dressed, initial_gaussian_jch, initial_localized_superposition,
    initial_localized_superposition_at, initial_spin, spin_evolve, spin_evolve_series, time_grid,
    DynamicsError, SpinInitial, SpinTrajectory, Trajectory,
};
pub use observables::{
    conditional_position, heisenberg_dispersion_reference, measure_speed, occupations,
    parabolic_position, spin_measure_speed, spin_occupations, spin_position, triangle_wave,
    triangle_wave_centered, DispersionSample, FrontFraction, ObservableError, OccupationProfile,
    SpeedFit, TrackedMode,
};
pub use oracle::{
    adjacency_matrix, build_dense, build_spin_dense, compare_spectra, dense_eigensystem,
    oracle_evolve, DenseEigensystem, DenseHamiltonian, OracleError, SpectraReport,
};
pub use effective::{
    classify_regime, effective_hamiltonian, predicted_speeds, x_term_commutator_check,
    x_term_matrix, EffectiveError, Regime, SpeedPrediction,
};
