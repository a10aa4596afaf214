//! Exhaustive verification of the antipode of the ring of symmetric
//! functions in the Schur basis.
//!
//! Takeuchi's formula writes `S(s_{λ/μ})` as an alternating sum over strict
//! chains of partitions, which expands into a signed sum over tuples of
//! semistandard tableaux. A sign-reversing, weight-preserving involution on
//! those tuples cancels everything except its fixed points, which are in
//! bijection with row-strict plane partitions of λ/μ, and these in turn
//! produce `(−1)^{|λ|−|μ|} s_{λᵗ/μᵗ}`.
//!
//! Symmetric functions are truncated to `N` variables throughout. Evaluation
//! at `(x₁, …, x_N, 0, 0, …)` is an algebra homomorphism and the involution
//! never changes a cell's value, so every identity holds for each finite `N`.
//!
//! ```
//! use schur_antipode::{polynomials, Partition, SkewShape};
//!
//! let shape = SkewShape::straight(Partition::new(vec![2]).unwrap());
//! let expansion = polynomials::takeuchi_antipode_poly(&shape, 2).unwrap();
//! let closed = polynomials::closed_form_antipode_poly(&shape, 2).unwrap();
//! assert_eq!(expansion, closed);
//! assert_eq!(closed.to_string(), "x1*x2");
//! ```

pub mod cli;
mod error;
pub mod expansion;
pub mod involution;
pub mod polynomials;
pub mod render;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{Chain, TableauTuple, TaggedTableau};
pub use involution::{CellKind, DistinguishedCell};
pub use polynomials::Polynomial;
pub use shapes::{Cell, Partition, SkewShape};
pub use tableaux::{Monomial, Tableau};
