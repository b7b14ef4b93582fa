//! Encoders and decoders for codes on algebraic curves, hyperbolic cascaded
//! Reed–Solomon codes and Reed–Solomon codes, built on 2-D discrete Fourier
//! transforms over GF(q) and linear recurrences from Gröbner bases.

pub mod bms;
pub mod codec;
pub mod galois;
pub mod geometry;
pub mod linalg;
pub mod poly;
pub mod sim;
pub mod transform;

pub use bms::{bms, bms_with_voting, extend, vanishing_ideal_basis, BmsError, Domain, GroebnerBasis, PartialArray};
pub use codec::{decode, CodeSpec, CodecError, Decoded, Mode};
pub use galois::{Elt, Field, FieldError};
pub use geometry::{CodeKind, CurveSpec, MonomialOrder, Point, SupportSet};
pub use poly::{BivariatePoly, Cell};
pub use transform::{dft1, dft2, idft1, idft2, Array1D, Array2D};
