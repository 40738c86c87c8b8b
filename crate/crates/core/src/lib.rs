//! Bogoliubov transformations of a massless Dirac field confined to a rigid
//! cavity on piecewise inertial and uniformly accelerated trajectories, to
//! second order in the acceleration, and the resulting degradation of
//! entanglement between two cavities.

pub mod bogoliubov;
pub mod entanglement;
pub mod error;
pub mod geometry;
pub mod polylog;
pub mod scenario;

pub use bogoliubov::{PerturbativeMatrix, TravelScenario};
pub use error::{Error, Result};
pub use geometry::{CavityGeometry, ModeSpec};
pub use polylog::UnitPhase;
