//! Exact Seshadri constants of ample line bundles on `E × E`, for an elliptic
//! curve `E` without complex multiplication or with multiplication by `i` or
//! `e^{πi/3}`.
//!
//! Every routine is generic over the integer type; the aliases below fix it to
//! [`BigInt`], which is what callers normally want.
//!
//! ```
//! use seshadri::{nocm, NsClass, SurfaceKind};
//!
//! let l = NsClass::from_i64(SurfaceKind::NoCm, &[7, 6, -3]).unwrap();
//! let r = nocm::epsilon(&l).unwrap();
//! assert_eq!(r.epsilon, 1.into());
//! assert_eq!(r.witnesses[0].label(), "N_{1,1}");
//! ```

pub mod cm;
pub mod crosssection;
pub mod error;
pub mod form;
pub mod nocm;
pub mod nslattice;
pub mod oracle;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
pub use nslattice::SurfaceKind;
pub use num_bigint::BigInt;
pub use scalar::Int;

pub type Rational = num_rational::BigRational;
pub type NsClass = nslattice::NsClass<BigInt>;
pub type CurvePair = nocm::CurvePair<BigInt>;
pub type EpsilonResult = nocm::EpsilonResult<BigInt>;
pub type PiecewiseLinear = crosssection::PiecewiseLinear<BigInt>;
pub type Segment = crosssection::Segment<BigInt>;
pub type CmTuple = cm::CmTuple<BigInt>;
pub type CmDegreeVector = cm::CmDegreeVector<BigInt>;
pub type CmWitness = cm::CmWitness<BigInt>;
pub type CmEpsilonResult = cm::CmEpsilonResult<BigInt>;
pub type QuadraticForm = form::QuadraticForm<BigInt>;
pub type ShellSearchReport = oracle::ShellSearchReport<BigInt>;
