//! Symmetric functions as a Hopf algebra, with Laplace-pairing deformations
//! and the classical character decompositions they produce.

pub mod characters;
pub mod convolution;
pub mod error;
pub mod fgl;
pub mod hash;
pub mod inner;
pub mod lincomb;
pub mod partition;
pub mod poly;
pub mod series;
pub mod sym;
pub mod vertex;

pub use characters::{BranchRule, Kind, RationalChar, ReducedChar, ThibonChar};
pub use convolution::{CoMul, Cochain1, Pairing, Witness};
pub use error::{Error, Result};
pub use fgl::{Fgl1, FglKind, TruncPoly};
pub use hash::{HashProduct, HashSpecDesc};
pub use inner::CharacterTable;
pub use lincomb::{Coeff, LinComb};
pub use partition::{Composition, FrobeniusForm, Partition, PartitionClass};
pub use series::SeriesId;
pub use sym::{SymFunc, TensorSymFunc};
pub use vertex::ParamPolySym;
