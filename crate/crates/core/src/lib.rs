//! Generic bases of cluster algebras from quivers with potential, in exact
//! arithmetic.
//!
//! ```
//! use qpbasis::fixtures;
//! use qpbasis::genbasis::{generic_basis_element, PrimeChoice};
//! use qpbasis::homalg::{DeltaVector, Sampling};
//!
//! let q = fixtures::a2();
//! let a = fixtures::path_algebra(&q);
//! let v = generic_basis_element(&DeltaVector::new(vec![-1, 1]), &a, &q, Sampling::default(), &PrimeChoice::default())
//!     .unwrap();
//! assert_eq!(v.value.to_fraction_string(), "(x2 + 1)/x1");
//! ```

pub mod fdalg;
pub mod field;
pub mod fixtures;
pub mod genbasis;
pub mod homalg;
pub mod laurent;
pub mod linalg;
pub mod modrep;
pub mod potential;
pub mod quiver;
pub mod seed;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/seeds.md")]
    struct Seeds;
    #[doc = include_str!("../../../book/src/jacobian.md")]
    struct Jacobian;
    #[doc = include_str!("../../../book/src/modules.md")]
    struct Modules;
    #[doc = include_str!("../../../book/src/presentations.md")]
    struct Presentations;
    #[doc = include_str!("../../../book/src/generic-basis.md")]
    struct GenericBasis;
}
