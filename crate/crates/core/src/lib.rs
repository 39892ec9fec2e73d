//! Sparse univariate polynomials over GF(2^n), and a deterministic,
//! count-preserving transformation of 3-CNF formulas into such polynomials:
//! the output has exactly as many roots in GF(2^n) as the input has
//! satisfying assignments.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf2n`]: GF(2^n) with a deterministic canonical modulus, big-exponent
//!   exponentiation, and Frobenius iterates.
//! - [`sparse`]: sparse polynomials with arbitrary-precision exponents,
//!   their evaluation, arithmetic, and bit-size accounting.
//! - [`linearized`]: linearized polynomials, Moore determinants, and the
//!   coordinate-extraction polynomials `f_i` with `f_i(x) = x_i`.
//! - [`cnf`]: CNF formulas of clause width ≤ 3 and a DIMACS reader.
//! - [`reduction`]: padding, per-constraint polynomials, and the
//!   basis-weighted combination into a single equation.
//! - [`brute`]: independent exhaustive counters and alternative
//!   constructions used as ground truth.
//! - [`corpus`]: seeded generation of test formulas.
//!
//! All values are immutable and all operations pure, so everything here can
//! be shared freely across threads.

pub mod brute;
pub mod cnf;
pub mod corpus;
pub mod gf2n;
pub mod linearized;
pub mod reduction;
pub mod sparse;

pub use brute::{count_roots_bruteforce, count_sat_bruteforce, GuardError};
pub use cnf::{parse_dimacs, Clause, Cnf, CnfError, Literal, ParseError};
pub use gf2n::{find_irreducible, is_irreducible, FieldContext, FieldElement, FieldError};
pub use linearized::{
    coordinate_poly, moore_determinant, CoordinateError, CoordinateTable, LinearizedPolynomial,
    MooreMatrix,
};
pub use reduction::{
    clause_to_poly, combine, dummy_pair_to_poly, pad, reduce, PaddedCnf, Provenance,
    ReductionError, ReductionOutput,
};
pub use sparse::{SparsePolynomial, Term};
