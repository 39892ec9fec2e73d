//! Brute-force reference implementations: exhaustive model counting,
//! exhaustive root counting, and independently-constructed versions of the
//! algebraic building blocks. These are the ground truth the rest of the
//! crate is checked against, so they deliberately share as little code with
//! the main paths as possible.
//!
//! Every enumerator refuses inputs above a hard limit instead of silently
//! truncating, so a stray large instance cannot turn the test suite into an
//! exponential job.

use crate::cnf::Cnf;
use crate::gf2n::{FieldContext, FieldElement};
use crate::linearized::{CoordinateError, LinearizedPolynomial};
use crate::sparse::SparsePolynomial;

/// Enumeration limit for model counting (2^24 assignments).
pub const MAX_SAT_VARS: usize = 24;
/// Enumeration limit for root counting (2^16 field elements).
pub const MAX_ROOT_FIELD_DEGREE: u32 = 16;
/// Size limit for the cofactor-recursion determinant (k! terms).
pub const MAX_COFACTOR_SIZE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GuardError {
    #[error("refusing to enumerate 2^{vars} assignments (limit 2^{limit})")]
    TooManyVariables { vars: usize, limit: usize },
    #[error("refusing to enumerate GF(2^{n}) (limit 2^{limit})")]
    FieldTooLarge { n: u32, limit: u32 },
    #[error("refusing cofactor expansion of a {k}x{k} determinant (limit {limit})")]
    MatrixTooLarge { k: usize, limit: usize },
}

/// Exact model count by enumerating all 2^v assignments.
pub fn count_sat_bruteforce(cnf: &Cnf) -> Result<u64, GuardError> {
    let vars = cnf.num_vars();
    if vars > MAX_SAT_VARS {
        return Err(GuardError::TooManyVariables {
            vars,
            limit: MAX_SAT_VARS,
        });
    }
    let count = (0u64..1 << vars)
        .filter(|&a| cnf.is_satisfied_by(a))
        .count() as u64;
    Ok(count)
}

/// Exact root count by evaluating at every element of GF(2^n).
///
/// Exponents are value-preservingly reduced once up front; each point is then
/// evaluated through its Frobenius chain `x, x^2, x^4, …`, multiplying the
/// chain entries selected by the bits of each exponent. A unit test pins this
/// path against plain term-by-term evaluation.
pub fn count_roots_bruteforce(p: &SparsePolynomial) -> Result<u64, GuardError> {
    let field = p.field();
    let n = field.n();
    if n > MAX_ROOT_FIELD_DEGREE {
        return Err(GuardError::FieldTooLarge {
            n,
            limit: MAX_ROOT_FIELD_DEGREE,
        });
    }
    let reduced = p.reduce_exponents();
    // all exponents now fit in n+1 bits
    let terms: Vec<(FieldElement, u32)> = reduced
        .terms()
        .iter()
        .map(|t| {
            (
                t.coeff,
                u32::try_from(&t.exp).expect("reduced exponent is small"),
            )
        })
        .collect();
    let constant = terms
        .iter()
        .find(|(_, e)| *e == 0)
        .map(|(c, _)| *c)
        .unwrap_or_else(|| field.zero());

    let mut count = 0u64;
    if constant.is_zero() {
        count += 1; // x = 0: only the constant term survives
    }
    let mut chain = vec![field.zero(); n as usize];
    for x in field.elements().skip(1) {
        chain[0] = x;
        for j in 1..n as usize {
            chain[j] = chain[j - 1].square();
        }
        let mut acc = field.zero();
        for &(coeff, exp) in &terms {
            let mut term = coeff;
            let mut e = exp;
            while e != 0 {
                let j = e.trailing_zeros();
                // exponents stay below 2^n after reduction, except the
                // group-order value 2^n - 1 whose bits are all < n
                term *= chain[j as usize];
                e &= e - 1;
            }
            acc += term;
        }
        if acc.is_zero() {
            count += 1;
        }
    }
    Ok(count)
}

/// Independent construction of the coordinate polynomial `f_i`: solve the
/// n×n linear system given by the interpolation conditions `f_i(ω_j) = δ_ij`
/// for the coefficients `c_0..c_{n-1}` by Gauss-Jordan elimination on the
/// augmented matrix. The system matrix has rows `(ω_j, ω_j^2, …)`, i.e. the
/// Moore matrix of the basis, so a unique solution exists; a singular system
/// here would signal a field-arithmetic bug.
pub fn coordinate_poly_interpolated(
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
    // augmented rows: [ω_j^{2^0} … ω_j^{2^{n-1}} | δ_ij]
    let mut rows: Vec<Vec<FieldElement>> = (1..=n)
        .map(|j| {
            let mut row = Vec::with_capacity(n + 1);
            let mut power = field.basis(j).expect("in range");
            for _ in 0..n {
                row.push(power);
                power = power.square();
            }
            row.push(if j == i { field.one() } else { field.zero() });
            row
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .expect("basis Moore matrix is nonsingular");
        rows.swap(col, pivot_row);
        let inv = rows[col][col].inv().expect("pivot is nonzero");
        for entry in rows[col][col..].iter_mut() {
            *entry *= inv;
        }
        let pivot_data = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for c in col..=n {
                row[c] += factor * pivot_data[c];
            }
        }
    }
    let coeffs = rows.into_iter().map(|row| row[n]).collect();
    Ok(LinearizedPolynomial::new(field, coeffs))
}

/// Determinant by full cofactor recursion along the first row. All signs are
/// +1 in characteristic 2. Factorial cost, hence the size guard.
pub fn moore_determinant_cofactor(elems: &[FieldElement]) -> Result<FieldElement, GuardError> {
    assert!(!elems.is_empty(), "determinant of an empty tuple");
    let k = elems.len();
    if k > MAX_COFACTOR_SIZE {
        return Err(GuardError::MatrixTooLarge {
            k,
            limit: MAX_COFACTOR_SIZE,
        });
    }
    let field = elems[0].field();
    let matrix: Vec<Vec<FieldElement>> = elems
        .iter()
        .map(|&a| {
            let mut row = Vec::with_capacity(k);
            let mut power = a;
            for _ in 0..k {
                row.push(power);
                power = power.square();
            }
            row
        })
        .collect();
    Ok(cofactor_det(field, &matrix))
}

fn cofactor_det(field: FieldContext, m: &[Vec<FieldElement>]) -> FieldElement {
    let k = m.len();
    if k == 1 {
        return m[0][0];
    }
    let mut det = field.zero();
    for col in 0..k {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<FieldElement>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        det += m[0][col] * cofactor_det(field, &minor);
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linearized::{coordinate_poly, moore_determinant, CoordinateTable};
    use num_bigint::BigUint;

    #[test]
    fn model_count_basics() {
        let empty = Cnf::new(3, vec![]).unwrap();
        assert_eq!(count_sat_bruteforce(&empty), Ok(8));

        let one_clause = Cnf::from_ints(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(count_sat_bruteforce(&one_clause), Ok(7));

        let contradiction = Cnf::from_ints(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(count_sat_bruteforce(&contradiction), Ok(0));
    }

    #[test]
    fn model_count_guard() {
        let big = Cnf::new(25, vec![]).unwrap();
        assert_eq!(
            count_sat_bruteforce(&big),
            Err(GuardError::TooManyVariables {
                vars: 25,
                limit: 24
            })
        );
    }

    #[test]
    fn root_count_basics() {
        let ctx = FieldContext::new(3).unwrap();
        assert_eq!(count_roots_bruteforce(&SparsePolynomial::zero(ctx)), Ok(8));
        assert_eq!(count_roots_bruteforce(&SparsePolynomial::one(ctx)), Ok(0));
        // x^{2^n} + x vanishes on the whole field
        let frob = SparsePolynomial::from_terms(
            ctx,
            [
                (ctx.one(), BigUint::from(8u32)),
                (ctx.one(), BigUint::from(1u32)),
            ],
        );
        assert_eq!(count_roots_bruteforce(&frob), Ok(8));
    }

    #[test]
    fn root_count_guard() {
        let ctx = FieldContext::new(17).unwrap();
        assert_eq!(
            count_roots_bruteforce(&SparsePolynomial::zero(ctx)),
            Err(GuardError::FieldTooLarge { n: 17, limit: 16 })
        );
    }

    #[test]
    fn chain_evaluation_matches_plain_evaluation() {
        // the fast path inside count_roots_bruteforce vs. naive counting
        for n in 1..=8u32 {
            let ctx = FieldContext::new(n).unwrap();
            let p = SparsePolynomial::from_terms(
                ctx,
                [
                    (ctx.one(), BigUint::ZERO),
                    (ctx.basis(1).unwrap(), BigUint::from(3u32)),
                    (
                        ctx.basis(n as usize).unwrap(),
                        BigUint::from(1u32) << (n + 2),
                    ),
                    (
                        ctx.basis(1.max(n as usize / 2)).unwrap(),
                        BigUint::from(123u32),
                    ),
                ],
            );
            let naive = ctx.elements().filter(|&x| p.evaluate(x).is_zero()).count() as u64;
            assert_eq!(count_roots_bruteforce(&p), Ok(naive));
        }
    }

    #[test]
    fn root_count_never_exceeds_field_size() {
        let ctx = FieldContext::new(5).unwrap();
        let p = SparsePolynomial::from_terms(
            ctx,
            [
                (ctx.basis(3).unwrap(), BigUint::from(7u32)),
                (ctx.one(), BigUint::ZERO),
            ],
        );
        let count = count_roots_bruteforce(&p).unwrap();
        assert!(count <= 32);
    }

    #[test]
    fn interpolation_dimension_one() {
        let ctx = FieldContext::new(1).unwrap();
        let f1 = coordinate_poly_interpolated(ctx, 1).unwrap();
        assert_eq!(f1, LinearizedPolynomial::identity(ctx));
    }

    #[test]
    fn interpolation_gf4_by_hand() {
        // f_2 = x + x^2, from solving the 2×2 system by hand
        let ctx = FieldContext::new(2).unwrap();
        let f2 = coordinate_poly_interpolated(ctx, 2).unwrap();
        assert_eq!(f2.coeffs(), &[ctx.one(), ctx.one()]);
    }

    #[test]
    fn interpolation_agrees_with_cofactor_construction() {
        for n in 1..=8u32 {
            let ctx = FieldContext::new(n).unwrap();
            for i in 1..=n as usize {
                assert_eq!(
                    coordinate_poly_interpolated(ctx, i).unwrap(),
                    coordinate_poly(ctx, i).unwrap(),
                    "n={n} i={i}"
                );
            }
        }
    }

    #[test]
    fn interpolation_index_errors() {
        let ctx = FieldContext::new(2).unwrap();
        assert!(coordinate_poly_interpolated(ctx, 0).is_err());
        assert!(coordinate_poly_interpolated(ctx, 3).is_err());
    }

    #[test]
    fn cofactor_determinant_small_cases() {
        let ctx = FieldContext::new(4).unwrap();
        for a in [ctx.one(), ctx.basis(3).unwrap()] {
            assert_eq!(moore_determinant_cofactor(&[a]), Ok(a));
        }
        let repeated = [ctx.basis(2).unwrap(), ctx.basis(2).unwrap()];
        assert!(moore_determinant_cofactor(&repeated).unwrap().is_zero());
    }

    #[test]
    fn cofactor_determinant_matches_gaussian() {
        let ctx = FieldContext::new(6).unwrap();
        // a handful of fixed 3×3 tuples, independent and dependent
        let tuples: Vec<Vec<FieldElement>> = vec![
            vec![
                ctx.basis(1).unwrap(),
                ctx.basis(2).unwrap(),
                ctx.basis(3).unwrap(),
            ],
            vec![
                ctx.element(0b101).unwrap(),
                ctx.element(0b110).unwrap(),
                ctx.element(0b011).unwrap(), // XOR of the first two: dependent
            ],
            vec![
                ctx.element(0b100101).unwrap(),
                ctx.element(0b010110).unwrap(),
                ctx.element(0b001011).unwrap(),
            ],
        ];
        for t in tuples {
            assert_eq!(
                moore_determinant_cofactor(&t).unwrap(),
                moore_determinant(&t).unwrap()
            );
        }
    }

    #[test]
    fn cofactor_determinant_guard() {
        let ctx = FieldContext::new(8).unwrap();
        let elems: Vec<_> = (1..=7).map(|i| ctx.basis(i).unwrap()).collect();
        assert_eq!(
            moore_determinant_cofactor(&elems),
            Err(GuardError::MatrixTooLarge { k: 7, limit: 6 })
        );
    }

    #[test]
    fn reduction_counts_agree_on_small_instances() {
        let cases = [
            Cnf::new(2, vec![]).unwrap(),
            Cnf::from_ints(3, &[&[1, 2, 3]]).unwrap(),
            Cnf::from_ints(3, &[&[1, -2], &[2, 3], &[-1, -3]]).unwrap(),
            Cnf::from_ints(1, &[&[1], &[-1]]).unwrap(),
        ];
        for cnf in cases {
            let out = crate::reduction::reduce(&cnf).unwrap();
            assert_eq!(
                count_roots_bruteforce(&out.poly).unwrap(),
                count_sat_bruteforce(&cnf).unwrap(),
                "count preservation failed for {cnf:?}"
            );
        }
    }

    #[test]
    fn padded_formula_preserves_model_count() {
        let cnf = Cnf::from_ints(2, &[&[1, 2], &[-1, 2], &[1, -2]]).unwrap();
        let padded = crate::reduction::pad(cnf.clone());
        assert_eq!(
            count_sat_bruteforce(&cnf),
            count_sat_bruteforce(&padded.equivalent_cnf())
        );
    }

    #[test]
    fn coordinate_table_matches_interpolation() {
        let ctx = FieldContext::new(5).unwrap();
        let table = CoordinateTable::build(ctx);
        for i in 1..=5 {
            assert_eq!(
                table.get(i).unwrap(),
                &coordinate_poly_interpolated(ctx, i).unwrap()
            );
        }
    }
}
