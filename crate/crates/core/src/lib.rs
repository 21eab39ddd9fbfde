pub mod error;
pub mod formulas;
pub mod laurent;
pub mod matrix;
pub mod partition;
pub mod paths;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::Method;
pub use laurent::{LaurentPoly, Monomial};
pub use matrix::PolyMatrix;
pub use partition::{FrobeniusCoordinates, Partition, SkewShape};
pub use symfunc::CharacterFamily;
