//! The count-preserving transformation from a 3-CNF into one sparse
//! polynomial over GF(2^n).
//!
//! Pipeline: pad the formula with dummy variable pairs until the constraint
//! count is at most the variable count, build GF(2^n) with n = total
//! variables, turn every constraint into a {0,1}-valued polynomial in the
//! coordinate functions, and fold the system into a single equation
//! `Σ_k ω_k·P_k = 0`. An element of GF(2^n) is a root of the output exactly
//! when its coordinate bits form a satisfying assignment of the original
//! formula, so root count equals model count.

use crate::cnf::{Clause, Cnf};
use crate::gf2n::{FieldContext, FieldError};
use crate::linearized::CoordinateTable;
use crate::sparse::SparsePolynomial;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("variable {var} exceeds the field dimension {n}")]
    VariableOutOfRange { var: usize, n: u32 },
    #[error("{constraints} constraints exceed the field dimension {n}; pad first")]
    TooManyConstraints { constraints: usize, n: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A CNF together with `s` appended dummy variable pairs, each pair carrying
/// the single constraint "both dummies are true". Padding never changes the
/// model count (each pair has exactly one admissible setting) and restores
/// the precondition constraints ≤ variables: two new variables arrive per
/// new constraint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedCnf {
    base: Cnf,
    dummy_pairs: usize,
}

/// Pads with `s = max(0, clauses - vars)` dummy pairs.
pub fn pad(base: Cnf) -> PaddedCnf {
    let dummy_pairs = base.num_clauses().saturating_sub(base.num_vars());
    PaddedCnf { base, dummy_pairs }
}

impl PaddedCnf {
    pub fn base(&self) -> &Cnf {
        &self.base
    }

    /// The number of dummy pairs `s`.
    pub fn dummy_pairs(&self) -> usize {
        self.dummy_pairs
    }

    pub fn total_vars(&self) -> usize {
        self.base.num_vars() + 2 * self.dummy_pairs
    }

    /// Clauses plus dummy-pair constraints.
    pub fn num_constraints(&self) -> usize {
        self.base.num_clauses() + self.dummy_pairs
    }

    /// Variable indices of dummy pair `i` (1-based).
    pub fn dummy_pair(&self, i: usize) -> (usize, usize) {
        debug_assert!(i >= 1 && i <= self.dummy_pairs);
        let v = self.base.num_vars();
        (v + 2 * i - 1, v + 2 * i)
    }

    /// A plain CNF with the same model count: every dummy-pair conjunction
    /// becomes two unit clauses. Only for cross-checking against the CNF
    /// model counter; the reduction itself encodes each pair as one
    /// constraint.
    pub fn equivalent_cnf(&self) -> Cnf {
        let mut clauses = self.base.clauses().to_vec();
        for i in 1..=self.dummy_pairs {
            let (a, b) = self.dummy_pair(i);
            clauses.push(vec![crate::cnf::Literal::positive(a)]);
            clauses.push(vec![crate::cnf::Literal::positive(b)]);
        }
        Cnf::new(self.total_vars(), clauses).expect("padded formula is well-formed")
    }
}

/// Converts a clause into the product of complement factors: a positive
/// literal on variable `i` contributes `1 + f_i`, a negative one contributes
/// `f_i`. The product evaluates to 1 exactly on points whose coordinates
/// violate the clause and to 0 where the clause is satisfied, so its values
/// lie in {0, 1}.
pub fn clause_to_poly(
    table: &CoordinateTable,
    clause: &Clause,
) -> Result<SparsePolynomial, ReductionError> {
    let field = table.field();
    let one = SparsePolynomial::one(field);
    let mut acc = one.clone();
    for lit in clause {
        let f = table
            .get(lit.var())
            .ok_or(ReductionError::VariableOutOfRange {
                var: lit.var(),
                n: field.n(),
            })?
            .to_sparse();
        let factor = if lit.negated() { f } else { one.add(&f) };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// The dummy-pair constraint "both variables true" as `1 + f_a·f_b`:
/// zero exactly when both coordinates are 1, values in {0, 1}.
pub fn dummy_pair_to_poly(
    table: &CoordinateTable,
    var_a: usize,
    var_b: usize,
) -> Result<SparsePolynomial, ReductionError> {
    let field = table.field();
    let f = |var: usize| {
        table
            .get(var)
            .map(|l| l.to_sparse())
            .ok_or(ReductionError::VariableOutOfRange { var, n: field.n() })
    };
    let product = f(var_a)?.mul(&f(var_b)?);
    Ok(SparsePolynomial::one(field).add(&product))
}

/// Folds {0,1}-valued constraint polynomials into the single equation
/// `Σ_k ω_k·P_k`. Because the basis elements are linearly independent over
/// F_2 and every P_k takes values in F_2, the sum vanishes exactly on the
/// common roots of all P_k. Requires at most `n` constraints; the empty
/// system folds to the zero polynomial (every point is a root).
pub fn combine(
    field: FieldContext,
    constraint_polys: &[SparsePolynomial],
) -> Result<SparsePolynomial, ReductionError> {
    if constraint_polys.len() > field.n() as usize {
        return Err(ReductionError::TooManyConstraints {
            constraints: constraint_polys.len(),
            n: field.n(),
        });
    }
    let mut acc = SparsePolynomial::zero(field);
    for (k, poly) in constraint_polys.iter().enumerate() {
        let omega = field.basis(k + 1).expect("k < n");
        acc = acc.add(&poly.scale(omega));
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstraintKind {
    Clause,
    Dummy,
}

/// Per-constraint record: which kind of constraint produced the k-th summand
/// and how many terms its expanded polynomial has.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintInfo {
    pub kind: ConstraintKind,
    pub terms: usize,
}

/// How the output polynomial was assembled: the number of dummy pairs, the
/// role of each field coordinate ("x3" = input variable 3, "y2" = dummy 2),
/// and the per-constraint expansion sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub s: usize,
    pub var_map: Vec<String>,
    pub clause_terms: Vec<ConstraintInfo>,
}

/// The reduction result: the field, the combined sparse polynomial, and the
/// assembly metadata. The number of roots of `poly` in GF(2^n) equals the
/// number of satisfying assignments of the input formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ReductionOutputRepr")]
pub struct ReductionOutput {
    pub field: FieldContext,
    pub poly: SparsePolynomial,
    pub provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct ReductionOutputRepr {
    field: FieldContext,
    poly: SparsePolynomial,
    provenance: Provenance,
}

impl TryFrom<ReductionOutputRepr> for ReductionOutput {
    type Error = String;
    fn try_from(repr: ReductionOutputRepr) -> Result<Self, String> {
        if repr.poly.field() != repr.field {
            return Err("polynomial field does not match the declared field".to_string());
        }
        Ok(ReductionOutput {
            field: repr.field,
            poly: repr.poly,
            provenance: repr.provenance,
        })
    }
}

/// Runs the whole reduction on a formula with clauses of width at most 3.
pub fn reduce(cnf: &Cnf) -> Result<ReductionOutput, ReductionError> {
    let padded = pad(cnf.clone());
    let n = padded.total_vars();
    let field = FieldContext::new(n as u32)?;
    let table = CoordinateTable::build(field);

    let mut constraint_polys = Vec::with_capacity(padded.num_constraints());
    let mut clause_terms = Vec::with_capacity(padded.num_constraints());
    for clause in padded.base().clauses() {
        let p = clause_to_poly(&table, clause)?;
        clause_terms.push(ConstraintInfo {
            kind: ConstraintKind::Clause,
            terms: p.term_count(),
        });
        constraint_polys.push(p);
    }
    for i in 1..=padded.dummy_pairs() {
        let (a, b) = padded.dummy_pair(i);
        let p = dummy_pair_to_poly(&table, a, b)?;
        clause_terms.push(ConstraintInfo {
            kind: ConstraintKind::Dummy,
            terms: p.term_count(),
        });
        constraint_polys.push(p);
    }
    let poly = combine(field, &constraint_polys)?;

    let mut var_map = Vec::with_capacity(n);
    for v in 1..=cnf.num_vars() {
        var_map.push(format!("x{v}"));
    }
    for d in 1..=2 * padded.dummy_pairs() {
        var_map.push(format!("y{d}"));
    }

    Ok(ReductionOutput {
        field,
        poly,
        provenance: Provenance {
            s: padded.dummy_pairs(),
            var_map,
            clause_terms,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Cnf;

    fn exhaustive_values(p: &SparsePolynomial) -> Vec<u128> {
        p.field().elements().map(|x| p.evaluate(x).bits()).collect()
    }

    #[test]
    fn padding_formula() {
        let no_pad = pad(Cnf::from_ints(3, &[&[1, 2, 3]]).unwrap());
        assert_eq!(no_pad.dummy_pairs(), 0);
        assert_eq!(no_pad.total_vars(), 3);

        let padded = pad(Cnf::from_ints(2, &[&[1, 2], &[1, -2], &[-1, 2], &[-1, -2]]).unwrap());
        assert_eq!(padded.dummy_pairs(), 2);
        assert_eq!(padded.total_vars(), 6);
        assert_eq!(padded.num_constraints(), 6);
        assert_eq!(padded.dummy_pair(1), (3, 4));
        assert_eq!(padded.dummy_pair(2), (5, 6));

        let unit = pad(Cnf::from_ints(1, &[&[1]]).unwrap());
        assert_eq!(unit.dummy_pairs(), 0);
    }

    #[test]
    fn padding_always_satisfies_the_dimension_bound() {
        for (v, m) in [(1usize, 5usize), (2, 2), (3, 9), (4, 1)] {
            let clauses: Vec<&[i64]> = (0..m).map(|_| &[1i64][..]).collect();
            let padded = pad(Cnf::from_ints(v, &clauses).unwrap());
            assert!(padded.num_constraints() <= padded.total_vars());
        }
    }

    #[test]
    fn clause_poly_counts_violations_n1() {
        // over n=1, f_1 = x: clause (¬x1) becomes the polynomial x
        let field = FieldContext::new(1).unwrap();
        let table = CoordinateTable::build(field);
        let neg = clause_to_poly(&table, &vec![crate::cnf::Literal::negative(1)]).unwrap();
        assert_eq!(exhaustive_values(&neg), vec![0, 1]);
        // clause (x1) becomes 1 + x with the single root x=1
        let pos = clause_to_poly(&table, &vec![crate::cnf::Literal::positive(1)]).unwrap();
        assert_eq!(exhaustive_values(&pos), vec![1, 0]);
    }

    #[test]
    fn clause_poly_violated_only_at_origin() {
        // (x1 ∨ x2 ∨ x3) over n=3: value 1 exactly at x = 0
        let field = FieldContext::new(3).unwrap();
        let table = CoordinateTable::build(field);
        let p = clause_to_poly(
            &table,
            &Cnf::from_ints(3, &[&[1, 2, 3]]).unwrap().clauses()[0],
        )
        .unwrap();
        for x in field.elements() {
            let expected = if x.bits() == 0 {
                field.one()
            } else {
                field.zero()
            };
            assert_eq!(p.evaluate(x), expected);
        }
    }

    #[test]
    fn clause_poly_values_stay_boolean() {
        let field = FieldContext::new(4).unwrap();
        let table = CoordinateTable::build(field);
        let cnf = Cnf::from_ints(4, &[&[1, -2, 4], &[-1, -3], &[2]]).unwrap();
        for clause in cnf.clauses() {
            let p = clause_to_poly(&table, clause).unwrap();
            for x in field.elements() {
                let v = p.evaluate(x);
                assert!((v * (v + field.one())).is_zero());
                assert!(v.bits() <= 1);
            }
        }
    }

    #[test]
    fn dummy_pair_poly_has_one_root_among_pair_patterns() {
        // n=2, pair (1,2): zero only at ω_1 + ω_2 (both coordinates set)
        let field = FieldContext::new(2).unwrap();
        let table = CoordinateTable::build(field);
        let p = dummy_pair_to_poly(&table, 1, 2).unwrap();
        assert_eq!(exhaustive_values(&p), vec![1, 1, 1, 0]);
    }

    #[test]
    fn variable_out_of_range_is_reported() {
        let field = FieldContext::new(2).unwrap();
        let table = CoordinateTable::build(field);
        let err = clause_to_poly(&table, &vec![crate::cnf::Literal::positive(3)]).unwrap_err();
        assert_eq!(err, ReductionError::VariableOutOfRange { var: 3, n: 2 });
        assert!(dummy_pair_to_poly(&table, 1, 5).is_err());
    }

    #[test]
    fn combine_of_nothing_is_zero() {
        let field = FieldContext::new(2).unwrap();
        let combined = combine(field, &[]).unwrap();
        assert!(combined.is_zero());
    }

    #[test]
    fn combine_single_constraint_keeps_roots() {
        // ω_1 = 1 in the polynomial basis, so m=1 combination is P_1 itself
        let field = FieldContext::new(2).unwrap();
        let table = CoordinateTable::build(field);
        let p = clause_to_poly(&table, &Cnf::from_ints(2, &[&[1]]).unwrap().clauses()[0]).unwrap();
        let combined = combine(field, std::slice::from_ref(&p)).unwrap();
        assert_eq!(combined, p);
    }

    #[test]
    fn combine_intersects_root_sets() {
        // clauses (x1) and (x2) on n=2: the only common root is ω_1 + ω_2
        let field = FieldContext::new(2).unwrap();
        let table = CoordinateTable::build(field);
        let cnf = Cnf::from_ints(2, &[&[1], &[2]]).unwrap();
        let polys: Vec<_> = cnf
            .clauses()
            .iter()
            .map(|c| clause_to_poly(&table, c).unwrap())
            .collect();
        let combined = combine(field, &polys).unwrap();
        let roots: Vec<u128> = field
            .elements()
            .filter(|&x| combined.evaluate(x).is_zero())
            .map(|x| x.bits())
            .collect();
        assert_eq!(roots, vec![0b11]);
    }

    #[test]
    fn combine_rejects_oversized_systems() {
        let field = FieldContext::new(1).unwrap();
        let polys = vec![SparsePolynomial::one(field); 2];
        assert_eq!(
            combine(field, &polys),
            Err(ReductionError::TooManyConstraints {
                constraints: 2,
                n: 1
            })
        );
    }

    fn brute_models(cnf: &Cnf) -> u64 {
        (0u64..1 << cnf.num_vars())
            .filter(|&a| cnf.is_satisfied_by(a))
            .count() as u64
    }

    fn brute_roots(out: &ReductionOutput) -> u64 {
        out.field
            .elements()
            .filter(|&x| out.poly.evaluate(x).is_zero())
            .count() as u64
    }

    #[test]
    fn reduce_empty_formula() {
        let cnf = Cnf::new(1, vec![]).unwrap();
        let out = reduce(&cnf).unwrap();
        assert_eq!(out.field.n(), 1);
        assert!(out.poly.is_zero());
        assert_eq!(brute_roots(&out), 2);
        assert_eq!(out.provenance.var_map, vec!["x1"]);
    }

    #[test]
    fn reduce_single_clause_has_seven_roots() {
        let cnf = Cnf::from_ints(3, &[&[1, 2, 3]]).unwrap();
        let out = reduce(&cnf).unwrap();
        assert_eq!(brute_models(&cnf), 7);
        assert_eq!(brute_roots(&out), 7);
    }

    #[test]
    fn reduce_unsat_formula_has_no_roots() {
        let cnf = Cnf::from_ints(2, &[&[1, 2], &[1, -2], &[-1, 2], &[-1, -2]]).unwrap();
        let out = reduce(&cnf).unwrap();
        assert_eq!(out.field.n(), 6);
        assert_eq!(out.provenance.s, 2);
        assert_eq!(brute_models(&cnf), 0);
        assert_eq!(brute_roots(&out), 0);
    }

    #[test]
    fn reduce_records_provenance() {
        let cnf = Cnf::from_ints(1, &[&[1], &[-1]]).unwrap();
        let out = reduce(&cnf).unwrap();
        assert_eq!(out.field.n(), 3);
        assert_eq!(out.provenance.s, 1);
        assert_eq!(out.provenance.var_map, vec!["x1", "y1", "y2"]);
        assert_eq!(out.provenance.clause_terms.len(), 3);
        assert_eq!(out.provenance.clause_terms[0].kind, ConstraintKind::Clause);
        assert_eq!(out.provenance.clause_terms[2].kind, ConstraintKind::Dummy);
        assert_eq!(brute_roots(&out), 0);
    }

    #[test]
    fn reduction_output_json_rejects_field_mismatch() {
        let cnf = Cnf::from_ints(2, &[&[1, 2]]).unwrap();
        let out = reduce(&cnf).unwrap();
        let mut value = serde_json::to_value(&out).unwrap();
        value["field"] = serde_json::json!({"n": 3, "modulus_hex": "0b"});
        assert!(serde_json::from_value::<ReductionOutput>(value).is_err());
    }
}
