//! Deterministic test-instance generation.
//!
//! Everything here is driven by a hand-rolled splitmix64 stream so that a
//! fixed seed yields byte-identical corpora forever, independent of any
//! external RNG crate's version history.

use crate::cnf::{Cnf, Literal};
use crate::gf2n::{FieldContext, FieldElement};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// splitmix64 (Steele, Lea, Flood); the standard finalizer constants.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `lo..=hi`; the modulo bias is irrelevant for
    /// test-corpus sampling and keeps the stream layout trivial.
    pub fn next_range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.next_u64() % (hi - lo + 1)
    }

    pub fn next_bool(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// A random element of the field, as a masked 2×64-bit draw.
    pub fn next_element(&mut self, field: FieldContext) -> FieldElement {
        let wide = (self.next_u64() as u128) | ((self.next_u64() as u128) << 64);
        let n = field.n();
        let mask = if n >= 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        field.element(wide & mask).expect("masked to n bits")
    }

    pub fn next_nonzero_element(&mut self, field: FieldContext) -> FieldElement {
        loop {
            let e = self.next_element(field);
            if !e.is_zero() {
                return e;
            }
        }
    }
}

/// A random 3-clause: three distinct variables, independent polarities.
fn random_clause(rng: &mut SplitMix64, num_vars: usize) -> Vec<Literal> {
    debug_assert!(num_vars >= 3);
    let mut vars = Vec::with_capacity(3);
    while vars.len() < 3 {
        let v = rng.next_range(1, num_vars as u64) as usize;
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.into_iter()
        .map(|v| {
            if rng.next_bool() {
                Literal::positive(v)
            } else {
                Literal::negative(v)
            }
        })
        .collect()
}

/// A random 3-CNF with the given shape.
pub fn random_cnf(rng: &mut SplitMix64, num_vars: usize, num_clauses: usize) -> Cnf {
    let clauses = (0..num_clauses)
        .map(|_| random_clause(rng, num_vars))
        .collect();
    Cnf::new(num_vars, clauses).expect("generated clauses are well-formed")
}

/// `count` random 3-CNFs with v ∈ 3..=10 and m ∈ 1..=10, rejection-sampled so
/// the padded formula never exceeds `max_total_vars` field dimensions.
pub fn random_corpus(seed: u64, count: usize, max_total_vars: usize) -> Vec<Cnf> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.next_range(3, 10) as usize;
        let m = rng.next_range(1, 10) as usize;
        let total = v + 2 * m.saturating_sub(v);
        if total > max_total_vars {
            continue;
        }
        out.push(random_cnf(&mut rng, v, m));
    }
    out
}

/// Twenty handcrafted formulas covering the corner cases: empty formulas,
/// unsatisfiable cores, tautological clauses, short clauses, duplicate
/// literals, duplicate clauses, and a clause-heavy instance that forces
/// padding.
pub fn edge_case_corpus() -> Vec<Cnf> {
    let c = |v: usize, clauses: &[&[i64]]| Cnf::from_ints(v, clauses).expect("well-formed");
    vec![
        Cnf::new(1, vec![]).unwrap(),
        Cnf::new(2, vec![]).unwrap(),
        Cnf::new(3, vec![]).unwrap(),
        c(1, &[&[1]]),
        c(1, &[&[-1]]),
        c(1, &[&[1], &[-1]]),
        c(2, &[&[1, 2], &[1, -2], &[-1, 2], &[-1, -2]]),
        c(
            3,
            &[
                &[1, 2, 3],
                &[1, 2, -3],
                &[1, -2, 3],
                &[1, -2, -3],
                &[-1, 2, 3],
                &[-1, 2, -3],
                &[-1, -2, 3],
                &[-1, -2, -3],
            ],
        ),
        c(2, &[&[1, -1, 2]]),
        c(1, &[&[1, -1]]),
        c(2, &[&[1, 1, 2]]),
        c(1, &[&[1, 1, 1]]),
        c(3, &[&[2]]),
        c(3, &[&[1, -3]]),
        c(3, &[&[1], &[1, 2], &[1, 2, 3]]),
        c(3, &[&[1, 2, 3]]),
        c(3, &[&[-1, -2, -3]]),
        c(3, &[&[1], &[-1, 2], &[-2, 3], &[-3]]),
        c(
            3,
            &[
                &[1, 2, 3],
                &[-1, 2, 3],
                &[1, -2, 3],
                &[1, 2, -3],
                &[-1, -2, 3],
                &[-1, 2, -3],
                &[1, -2, -3],
            ],
        ),
        c(3, &[&[1, 2, 3], &[1, 2, 3]]),
    ]
}

/// The acceptance corpus: 200 seeded random instances plus the 20 edge cases.
pub fn acceptance_corpus(seed: u64) -> Vec<Cnf> {
    let mut corpus = random_corpus(seed, 200, 12);
    corpus.extend(edge_case_corpus());
    corpus
}
