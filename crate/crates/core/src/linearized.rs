//! Linearized polynomials, Moore matrices, and the coordinate-extraction
//! polynomials built from them.
//!
//! A linearized polynomial `Σ c_j x^{2^j}` is F_2-linear as a map on GF(2^n)
//! because squaring is additive in characteristic 2. The Moore matrix of
//! elements `α_1..α_k` has entries `α_i^{2^j}`; its determinant is nonzero
//! exactly when the `α_i` are linearly independent over F_2. Deleting the
//! first (symbolic) row's column `j` and taking minors over the remaining
//! basis rows yields the coefficients of the unique linearized polynomial
//! `f_i` with `f_i(ω_j) = δ_ij`, which reads off coordinate `i` of its
//! argument. Characteristic 2 kills all cofactor signs, so no sign
//! bookkeeping appears anywhere below.

use crate::gf2n::{FieldContext, FieldElement};
use crate::sparse::SparsePolynomial;
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoordinateError {
    #[error("a Moore matrix needs at least one element")]
    EmptyTuple,
    #[error("coordinate index {index} is out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: u32 },
}

/// Coefficients `c_0..c_{n-1}` of `Σ c_j x^{2^j}` over a fixed field;
/// always stored with exactly `n` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedPolynomial {
    field: FieldContext,
    coeffs: Vec<FieldElement>,
}

impl LinearizedPolynomial {
    pub fn new(field: FieldContext, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(
            coeffs.len() <= field.n() as usize,
            "more coefficients than the field dimension"
        );
        for c in &coeffs {
            assert_eq!(c.field(), field, "coefficient from a different field");
        }
        coeffs.resize(field.n() as usize, field.zero());
        LinearizedPolynomial { field, coeffs }
    }

    pub fn zero(field: FieldContext) -> Self {
        Self::new(field, Vec::new())
    }

    /// The identity map `x ↦ x`.
    pub fn identity(field: FieldContext) -> Self {
        Self::new(field, vec![field.one()])
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    /// Evaluates `Σ c_j x^{2^j}` by walking the squaring chain of `x`.
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        assert_eq!(
            x.field(),
            self.field,
            "evaluation point from a different field"
        );
        let mut acc = self.field.zero();
        let mut power = x; // x^{2^j}
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += *c * power;
            }
            if j + 1 < self.coeffs.len() {
                power = power.square();
            }
        }
        acc
    }

    /// Transcribes into the sparse representation: one term `(c_j, 2^j)` per
    /// nonzero coefficient, at most `n` terms.
    pub fn to_sparse(&self) -> SparsePolynomial {
        SparsePolynomial::from_terms(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (*c, BigUint::from(1u32) << j)),
        )
    }
}

/// The k×k matrix with entries `α_i^{2^j}` for elements `α_1..α_k`.
#[derive(Debug, Clone)]
pub struct MooreMatrix {
    field: FieldContext,
    entries: Vec<Vec<FieldElement>>,
}

impl MooreMatrix {
    pub fn new(elems: &[FieldElement]) -> Result<Self, CoordinateError> {
        if elems.is_empty() {
            return Err(CoordinateError::EmptyTuple);
        }
        let field = elems[0].field();
        let k = elems.len();
        let entries = elems
            .iter()
            .map(|&alpha| {
                assert_eq!(alpha.field(), field, "element from a different field");
                frobenius_orbit(alpha, k)
            })
            .collect();
        Ok(MooreMatrix { field, entries })
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<FieldElement>] {
        &self.entries
    }

    pub fn determinant(&self) -> FieldElement {
        gaussian_determinant(self.field, self.entries.clone())
    }
}

/// Row `[a, a^2, a^4, …]` of length `len`.
fn frobenius_orbit(a: FieldElement, len: usize) -> Vec<FieldElement> {
    let mut row = Vec::with_capacity(len);
    let mut power = a;
    for j in 0..len {
        row.push(power);
        if j + 1 < len {
            power = power.square();
        }
    }
    row
}

/// Determinant by Gaussian elimination over the field. Row swaps carry no
/// sign in characteristic 2; the determinant is the product of the pivots.
/// The 0×0 determinant is 1 (empty product).
pub(crate) fn gaussian_determinant(
    field: FieldContext,
    mut m: Vec<Vec<FieldElement>>,
) -> FieldElement {
    let k = m.len();
    let mut det = field.one();
    for col in 0..k {
        let pivot_row = match (col..k).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return field.zero(),
        };
        m.swap(col, pivot_row);
        let pivot = m[col][col];
        det *= pivot;
        let pivot_inv = pivot.inv().expect("pivot is nonzero");
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_data = &upper[col];
        for row in lower.iter_mut() {
            let factor = row[col] * pivot_inv;
            if factor.is_zero() {
                continue;
            }
            for c in col..k {
                row[c] += factor * pivot_data[c];
            }
        }
    }
    det
}

/// Determinant of the Moore matrix of `elems`, nonzero iff the elements are
/// linearly independent over F_2.
pub fn moore_determinant(elems: &[FieldElement]) -> Result<FieldElement, CoordinateError> {
    Ok(MooreMatrix::new(elems)?.determinant())
}

/// Builds the coordinate polynomial `f_i`: the unique linearized polynomial
/// with `f_i(ω_j) = δ_ij`, so that `f_i(x)` is coordinate `i` of `x` embedded
/// as 0 or 1.
///
/// Construction: cofactor expansion along the symbolic first row of the
/// Moore matrix whose remaining rows are the basis elements `{ω_j : j ≠ i}`;
/// coefficient `j` is the minor with column `j` deleted, and the whole thing
/// is scaled so the value at `ω_i` is 1.
pub fn coordinate_poly(
    field: FieldContext,
    i: usize,
) -> Result<LinearizedPolynomial, CoordinateError> {
    let n = field.n() as usize;
    if i == 0 || i > n {
        return Err(CoordinateError::IndexOutOfRange {
            index: i,
            n: field.n(),
        });
    }
    // Frobenius orbits of the basis elements other than ω_i, n columns wide.
    let rows: Vec<Vec<FieldElement>> = (1..=n)
        .filter(|&j| j != i)
        .map(|j| frobenius_orbit(field.basis(j).expect("index in range"), n))
        .collect();
    let cofactors: Vec<FieldElement> = (0..n)
        .map(|col| {
            let minor: Vec<Vec<FieldElement>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != col)
                        .map(|(_, &e)| e)
                        .collect()
                })
                .collect();
            gaussian_determinant(field, minor)
        })
        .collect();
    let unnormalized = LinearizedPolynomial::new(field, cofactors);
    let value_at_basis = unnormalized.evaluate(field.basis(i).expect("index in range"));
    let scale = value_at_basis
        .inv()
        .expect("independent basis rows give a nonzero value at ω_i");
    let coeffs = unnormalized.coeffs.iter().map(|&c| c * scale).collect();
    Ok(LinearizedPolynomial { field, coeffs })
}

/// All coordinate polynomials `f_1..f_n` of a field, built once and reused
/// across clauses. Immutable after construction.
#[derive(Debug, Clone)]
pub struct CoordinateTable {
    field: FieldContext,
    polys: Vec<LinearizedPolynomial>,
}

impl CoordinateTable {
    pub fn build(field: FieldContext) -> Self {
        let polys = (1..=field.n() as usize)
            .map(|i| coordinate_poly(field, i).expect("index in range"))
            .collect();
        CoordinateTable { field, polys }
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    /// The coordinate polynomial `f_i`, 1-based.
    pub fn get(&self, i: usize) -> Option<&LinearizedPolynomial> {
        if i == 0 {
            return None;
        }
        self.polys.get(i - 1)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}
