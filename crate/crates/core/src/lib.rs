//! Exact arithmetic in NSym and QSym with the immaculate basis `𝔖_α`, the
//! dual immaculate basis `𝔖*_α`, and their Pieri rules.
//!
//! ```
//! use immaculate::{composition, skew_fundamental, SkewMethod, TransitionCache};
//!
//! let e = skew_fundamental(2, &composition![3, 1, 2], SkewMethod::Theorem, TransitionCache::global()).unwrap();
//! assert_eq!(e.terms.keys().collect::<Vec<_>>(), [&composition![1, 1, 2]]);
//! ```

pub mod calc;
pub mod compositions;
pub mod error;
pub mod kernel;
pub mod nsym;
pub mod pieri;
pub mod qsym;

pub use calc::{format_text, parse, CalcError, Evaluator, Expr, Value};
pub use compositions::{compositions_of, partitions_of, Composition, DescentSet, IntVector};
pub use error::{Error, Result};
pub use kernel::{Algebra, Basis, BasisElement, Degree, LinComb};
pub use nsym::{chi, NSymElem, SymElem, TransitionCache, DEFAULT_DEGREE_CAP};
pub use pieri::{
    coeff, dual_pieri, enumerate_z, enumerate_z_gamma, is_in_z, left_pieri, partition_skew,
    skew_fundamental, skew_pieri_raw, transfer_check, PieriExpansion, RawExpansion, SkewMethod,
};
pub use qsym::QSymElem;
