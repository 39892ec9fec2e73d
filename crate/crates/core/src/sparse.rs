//! Sparse univariate polynomials over GF(2^n).
//!
//! A polynomial is a list of `(coefficient, exponent)` pairs with
//! arbitrary-precision exponents; the degree may be exponential in the bit
//! size of the list. Terms are kept sorted by strictly increasing exponent
//! with no zero coefficients, so equality and serialization are canonical and
//! the empty list is the zero polynomial.
//!
//! Convention used throughout: `0^0 = 1`, i.e. evaluation at zero returns the
//! constant term.

use crate::gf2n::{bits_to_hex, hex_to_bits, FieldContext, FieldElement};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;

/// One term `coeff · x^exp`. The coefficient is nonzero in any polynomial in
/// canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElement,
    pub exp: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "SparsePolynomialRepr", try_from = "SparsePolynomialRepr")]
pub struct SparsePolynomial {
    field: FieldContext,
    terms: Vec<Term>,
}

impl SparsePolynomial {
    pub fn zero(field: FieldContext) -> Self {
        SparsePolynomial {
            field,
            terms: Vec::new(),
        }
    }

    pub fn one(field: FieldContext) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: FieldContext, c: FieldElement) -> Self {
        Self::from_terms(field, [(c, BigUint::ZERO)])
    }

    pub fn monomial(field: FieldContext, coeff: FieldElement, exp: BigUint) -> Self {
        Self::from_terms(field, [(coeff, exp)])
    }

    /// Builds a polynomial from arbitrary terms, normalizing to canonical
    /// form: sort by exponent, merge equal exponents by field addition, drop
    /// zero coefficients.
    pub fn from_terms(
        field: FieldContext,
        terms: impl IntoIterator<Item = (FieldElement, BigUint)>,
    ) -> Self {
        let mut raw: Vec<(BigUint, FieldElement)> = terms
            .into_iter()
            .inspect(|(c, _)| {
                assert_eq!(c.field(), field, "coefficient from a different field");
            })
            .map(|(c, e)| (e, c))
            .collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for (exp, coeff) in raw {
            match out.last_mut() {
                Some(last) if last.exp == exp => last.coeff += coeff,
                _ => out.push(Term { coeff, exp }),
            }
            if out.last().is_some_and(|t| t.coeff.is_zero()) {
                out.pop();
            }
        }
        SparsePolynomial { field, terms: out }
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at `x`. Exponents of nonzero points are reduced modulo
    /// `2^n - 1` inside `pow`; at `x = 0` the value is the constant term.
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        assert_eq!(
            x.field(),
            self.field,
            "evaluation point from a different field"
        );
        if x.is_zero() {
            return match self.terms.first() {
                Some(t) if t.exp == BigUint::ZERO => t.coeff,
                _ => self.field.zero(),
            };
        }
        let mut acc = self.field.zero();
        for t in &self.terms {
            acc += t.coeff * x.pow(&t.exp);
        }
        acc
    }

    /// Merges two polynomials by exponent; coefficients at equal exponents
    /// combine by field addition (XOR), so `p.add(p)` is the zero polynomial.
    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.field, other.field, "polynomials from different fields");
        // both inputs are sorted; a linear merge keeps canonical order
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.exp.cmp(&b.exp) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = a.coeff + b.coeff;
                    if !coeff.is_zero() {
                        out.push(Term {
                            coeff,
                            exp: a.exp.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        SparsePolynomial {
            field: self.field,
            terms: out,
        }
    }

    /// Product by pairwise term multiplication; the result has at most
    /// `|p|·|q|` terms before merging.
    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.field, other.field, "polynomials from different fields");
        let pairs = self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (a.coeff * b.coeff, &a.exp + &b.exp))
        });
        SparsePolynomial::from_terms(self.field, pairs)
    }

    /// Multiplies every coefficient by the scalar `c`; exponents unchanged.
    pub fn scale(&self, c: FieldElement) -> SparsePolynomial {
        assert_eq!(c.field(), self.field, "scalar from a different field");
        if c.is_zero() {
            return SparsePolynomial::zero(self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff * c,
                exp: t.exp.clone(),
            })
            .collect();
        SparsePolynomial {
            field: self.field,
            terms,
        }
    }

    /// Reduces every nonzero exponent `e` to `((e-1) mod (2^n - 1)) + 1`,
    /// keeping exponent 0 as a distinct constant term. The result evaluates
    /// to the same value as `self` at every point of the field, including 0.
    pub fn reduce_exponents(&self) -> SparsePolynomial {
        let order = self.field.group_order();
        let one = BigUint::from(1u32);
        let mapped = self.terms.iter().map(|t| {
            let exp = if t.exp == BigUint::ZERO {
                BigUint::ZERO
            } else {
                (&t.exp - &one) % &order + &one
            };
            (t.coeff, exp)
        });
        SparsePolynomial::from_terms(self.field, mapped)
    }

    /// Input-size measure: each term costs `n` bits for the coefficient plus
    /// the bit length of its exponent (with bit-length(0) counted as 1).
    pub fn bit_size(&self) -> u64 {
        let n = self.field.n() as u64;
        self.terms.iter().map(|t| n + t.exp.bits().max(1)).sum()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·x^{}", t.coeff, t.exp)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// JSON interchange format:
// {"field": {...}, "terms": [{"coeff_hex": "...", "exp": "<decimal>"}]}
// Terms appear in increasing exponent order; parsing rejects anything that is
// not already canonical, so serialize ∘ parse is the identity.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyFormatError {
    #[error("field error: {0}")]
    Field(#[from] crate::gf2n::FieldError),
    #[error("term {index}: invalid decimal exponent {exp:?}")]
    InvalidExponent { index: usize, exp: String },
    #[error("term {index}: zero coefficient not allowed in canonical form")]
    ZeroCoefficient { index: usize },
    #[error("term {index}: exponents must be strictly increasing")]
    ExponentOrder { index: usize },
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff_hex: String,
    exp: String,
}

#[derive(Serialize, Deserialize)]
struct SparsePolynomialRepr {
    field: FieldContext,
    terms: Vec<TermRepr>,
}

impl From<SparsePolynomial> for SparsePolynomialRepr {
    fn from(p: SparsePolynomial) -> Self {
        let n = p.field.n();
        SparsePolynomialRepr {
            field: p.field,
            terms: p
                .terms
                .iter()
                .map(|t| TermRepr {
                    coeff_hex: bits_to_hex(t.coeff.bits(), n),
                    exp: t.exp.to_str_radix(10),
                })
                .collect(),
        }
    }
}

impl TryFrom<SparsePolynomialRepr> for SparsePolynomial {
    type Error = PolyFormatError;
    fn try_from(repr: SparsePolynomialRepr) -> Result<Self, PolyFormatError> {
        let field = repr.field;
        let mut terms: Vec<Term> = Vec::with_capacity(repr.terms.len());
        for (index, t) in repr.terms.iter().enumerate() {
            let bits = hex_to_bits(&t.coeff_hex, field.n())?;
            let coeff = field.element(bits)?;
            if coeff.is_zero() {
                return Err(PolyFormatError::ZeroCoefficient { index });
            }
            if t.exp.is_empty() || !t.exp.bytes().all(|b| b.is_ascii_digit()) {
                return Err(PolyFormatError::InvalidExponent {
                    index,
                    exp: t.exp.clone(),
                });
            }
            let exp: BigUint = t
                .exp
                .parse()
                .map_err(|_| PolyFormatError::InvalidExponent {
                    index,
                    exp: t.exp.clone(),
                })?;
            if let Some(prev) = terms.last() {
                if prev.exp >= exp {
                    return Err(PolyFormatError::ExponentOrder { index });
                }
            }
            terms.push(Term { coeff, exp });
        }
        Ok(SparsePolynomial { field, terms })
    }
}
