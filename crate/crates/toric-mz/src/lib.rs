//! Simulation toolkit for a synthetic Mach-Zehnder interferometer on the
//! toric ladder.
//!
//! The ladder hosts two anyon species: spinons (star operators `A_s`, products
//! of Pauli-Z on four spins) and visons (plaquette operators `B_p`, products of
//! Pauli-X on two spins). A transverse field lets a spinon hop along the two
//! legs of the ladder; a vison in the intervening plaquette toggles the
//! interference of the two hopping paths between constructive and destructive,
//! so spinon motion reads out the mutual statistics directly.
//!
//! The crate provides:
//! - stabilizer state preparation with spinon/vison insertion ([`quench`]),
//! - exact (eigendecomposition) and Trotterized evolution ([`dynamics`]),
//! - shot-sampled emulation of a Z-basis measurement experiment ([`sample`]),
//! - open-system evolution under per-site Pauli baths ([`lindblad`]) with a
//!   vectorized-superoperator oracle ([`superop`]),
//! - calibration sweeps: optimal Trotter depth and bath-strength fitting
//!   ([`calibrate`]),
//! - a CLI front end emitting CSV series and figure-reproduction bundles
//!   ([`cli`]).
//!
//! Basis convention, fixed globally: qubit 1 (1-based user labels) is the most
//! significant bit of the computational-basis index. All modules share it.

pub mod calibrate;
pub mod circuit;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod lindblad;
pub mod par;
pub mod pauli;
pub mod quench;
pub mod sample;
pub mod series;
pub mod state;
pub mod superop;

// TEMP pub use error::{Error, Result};
// TEMP pub use lattice::LadderModel;
// TEMP pub use pauli::{Axis, PauliString, Phase};
// TEMP pub use quench::{QuenchSpec, VisonConfig};
// TEMP pub use series::{Method, ObservableSeries, RunMeta};
// TEMP pub use state::{DensityMatrix, StateVector};

/// Largest qubit count for which dense 2^N x 2^N matrices are assembled.
pub const DENSE_QUBIT_CAP: usize = 12;
