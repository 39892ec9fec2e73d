//! Arithmetic in the binary extension fields GF(2^n).
//!
//! Elements are polynomials over F_2 modulo a fixed irreducible polynomial of
//! degree `n`, stored as bit-vectors in a `u128`: bit `i` holds the
//! coefficient of `x^i` (bit 0 is the constant term). The modulus is chosen
//! deterministically as the lexicographically smallest irreducible of degree
//! `n` under that encoding, so two runs always agree on the representation.
//!
//! The coordinate basis is the polynomial basis `1, α, α^2, …, α^{n-1}` where
//! `α` is the residue class of `x`; coordinate `i` (1-based) of an element is
//! literally bit `i-1` of its bit-vector.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};

/// Largest supported extension degree. A degree-`n` modulus needs bit `n` of
/// a `u128`, so 127 is the ceiling of this representation.
pub const MAX_DEGREE: u32 = 127;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("extension degree {n} is out of range (supported: 1..={MAX_DEGREE})")]
    UnsupportedDegree { n: u32 },
    #[error("modulus does not have degree exactly {n}")]
    WrongModulusDegree { n: u32 },
    #[error("modulus is not irreducible over F_2")]
    NotIrreducible,
    #[error("modulus is not the canonical (lexicographically smallest) irreducible of its degree")]
    NonCanonicalModulus,
    #[error("irreducibility is undefined for constant polynomials")]
    ConstantPolynomial,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element does not fit in {n} bits")]
    ElementOutOfRange { n: u32 },
    #[error("basis index {index} is out of range 1..={n}")]
    BasisIndexOutOfRange { index: usize, n: u32 },
    #[error("invalid hex encoding {hex:?} (expected {expected_bytes} little-endian bytes)")]
    InvalidHex { hex: String, expected_bytes: usize },
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over F_2 on raw bit-vectors.
// ---------------------------------------------------------------------------

fn poly_degree(p: u128) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(127 - p.leading_zeros())
    }
}

/// Carryless product. The caller guarantees `deg a + deg b < 128`.
fn poly_mul(mut a: u128, mut b: u128) -> u128 {
    let mut acc = 0u128;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        if b != 0 {
            a <<= 1;
        }
    }
    acc
}

fn poly_divrem(mut a: u128, m: u128) -> (u128, u128) {
    let dm = poly_degree(m).expect("division by the zero polynomial");
    let mut q = 0u128;
    while let Some(da) = poly_degree(a) {
        if da < dm {
            break;
        }
        let shift = da - dm;
        a ^= m << shift;
        q |= 1u128 << shift;
    }
    (q, a)
}

fn poly_rem(a: u128, m: u128) -> u128 {
    poly_divrem(a, m).1
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Product of reduced `a` by arbitrary `b`, modulo `m`, with the reduction
/// interleaved into the shift loop so intermediates never exceed `deg m`.
fn poly_mulmod(mut a: u128, mut b: u128, m: u128) -> u128 {
    let d = poly_degree(m).expect("zero modulus");
    debug_assert!(poly_degree(a).is_none_or(|da| da < d));
    let mut acc = 0u128;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        if b == 0 {
            break;
        }
        a <<= 1;
        if (a >> d) & 1 == 1 {
            a ^= m;
        }
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
/// Requires `gcd(a, m) = 1` and `a` reduced, which the field layer guarantees.
fn poly_invmod(a: u128, m: u128) -> u128 {
    debug_assert!(a != 0);
    let (mut r0, mut r1) = (m, a);
    let (mut t0, mut t1) = (0u128, 1u128);
    while r1 != 0 {
        let (q, r) = poly_divrem(r0, r1);
        r0 = r1;
        r1 = r;
        let t2 = t0 ^ poly_mul(q, t1);
        t0 = t1;
        t1 = t2;
    }
    debug_assert_eq!(r0, 1, "modulus must be irreducible");
    t0
}

// ---------------------------------------------------------------------------
// Irreducibility and deterministic modulus selection.
// ---------------------------------------------------------------------------

fn distinct_prime_factors(mut d: u32) -> Vec<u32> {
    let mut primes = Vec::new();
    let mut q = 2;
    while q * q <= d {
        if d.is_multiple_of(q) {
            primes.push(q);
            while d.is_multiple_of(q) {
                d /= q;
            }
        }
        q += 1;
    }
    if d > 1 {
        primes.push(d);
    }
    primes
}

/// Tests whether `p` (bit `i` = coefficient of `x^i`) is irreducible over F_2.
///
/// Uses the standard criterion: `p` of degree `d` is irreducible iff
/// `x^{2^d} ≡ x (mod p)` and `gcd(x^{2^{d/q}} - x, p) = 1` for every prime
/// `q` dividing `d`.
pub fn is_irreducible(p: u128) -> Result<bool, FieldError> {
    let d = match poly_degree(p) {
        Some(d) if d >= 1 => d,
        _ => return Err(FieldError::ConstantPolynomial),
    };
    let x = poly_rem(0b10, p);
    // chain[j] = x^{2^j} mod p
    let mut chain = Vec::with_capacity(d as usize + 1);
    chain.push(x);
    for j in 0..d as usize {
        chain.push(poly_mulmod(chain[j], chain[j], p));
    }
    if chain[d as usize] != x {
        return Ok(false);
    }
    for q in distinct_prime_factors(d) {
        if poly_gcd(chain[(d / q) as usize] ^ x, p) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Returns the lexicographically smallest irreducible polynomial of degree
/// `n`, scanning candidates in increasing integer value of the bit encoding.
/// Deterministic: two calls always return the same bit-vector.
pub fn find_irreducible(n: u32) -> Result<u128, FieldError> {
    if n == 0 || n > MAX_DEGREE {
        return Err(FieldError::UnsupportedDegree { n });
    }
    let top = 1u128 << n;
    for low in 0..top {
        let candidate = top | low;
        if is_irreducible(candidate)? {
            return Ok(candidate);
        }
    }
    unreachable!("an irreducible polynomial exists for every degree");
}

// ---------------------------------------------------------------------------
// The field context and its elements.
// ---------------------------------------------------------------------------

/// A fixed field GF(2^n): the extension degree together with the canonical
/// irreducible modulus. Cheap to copy; immutable once built; all operations
/// are pure, so contexts and elements are safe to share across threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "FieldContextRepr", try_from = "FieldContextRepr")]
pub struct FieldContext {
    n: u32,
    modulus: u128,
}

impl FieldContext {
    /// Builds GF(2^n) with the canonical modulus for `n`.
    pub fn new(n: u32) -> Result<Self, FieldError> {
        let modulus = find_irreducible(n)?;
        Ok(FieldContext { n, modulus })
    }

    /// Rebuilds a context from serialized parts, enforcing the invariants:
    /// degree exactly `n`, irreducible, and canonical for `n`.
    pub fn from_parts(n: u32, modulus: u128) -> Result<Self, FieldError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree { n });
        }
        if poly_degree(modulus) != Some(n) {
            return Err(FieldError::WrongModulusDegree { n });
        }
        if !is_irreducible(modulus)? {
            return Err(FieldError::NotIrreducible);
        }
        if modulus != find_irreducible(n)? {
            return Err(FieldError::NonCanonicalModulus);
        }
        Ok(FieldContext { n, modulus })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: *self,
            bits: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: *self,
            bits: 1,
        }
    }

    /// Wraps an n-bit coordinate vector as a field element.
    pub fn element(&self, bits: u128) -> Result<FieldElement, FieldError> {
        if self.n < 128 && bits >> self.n != 0 {
            return Err(FieldError::ElementOutOfRange { n: self.n });
        }
        Ok(FieldElement { field: *self, bits })
    }

    /// The basis element `ω_i = α^{i-1}` (1-based), i.e. the single bit at
    /// index `i-1`.
    pub fn basis(&self, i: usize) -> Result<FieldElement, FieldError> {
        if i == 0 || i > self.n as usize {
            return Err(FieldError::BasisIndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(FieldElement {
            field: *self,
            bits: 1u128 << (i - 1),
        })
    }

    /// Iterates over all 2^n elements. Callers are expected to guard `n`
    /// before walking this.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let field = *self;
        (0..(1u128 << self.n)).map(move |bits| FieldElement { field, bits })
    }

    /// Order of the multiplicative group, `2^n - 1`.
    pub fn group_order(&self) -> BigUint {
        BigUint::from((1u128 << self.n) - 1)
    }
}

/// An element of GF(2^n): an n-bit coordinate vector in the polynomial basis,
/// tagged with its field so cross-field mixing is caught.
///
/// Binary operations panic if the operands live in different fields; this is
/// a programming error on the same footing as an out-of-bounds index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldContext,
    bits: u128,
}

impl FieldElement {
    pub fn field(&self) -> FieldContext {
        self.field
    }

    /// The raw coordinate vector; bit `i-1` is the 1-based coordinate `x_i`.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `x_i` (1-based) as 0 or 1.
    pub fn coordinate(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.field.n as usize);
        ((self.bits >> (i - 1)) & 1) as u8
    }

    pub fn square(self) -> FieldElement {
        self * self
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coordinate polynomials. Inverting zero is an error, never a value.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.bits == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(FieldElement {
            field: self.field,
            bits: poly_invmod(self.bits, self.field.modulus),
        })
    }

    /// Raises to an arbitrary-precision exponent by square-and-multiply.
    ///
    /// For nonzero bases the exponent is first reduced modulo `2^n - 1`, the
    /// order of the multiplicative group. `pow(0, e) = 0` for `e >= 1`, and
    /// the `0^0 = 1` convention applies.
    pub fn pow(self, e: &BigUint) -> FieldElement {
        let zero = BigUint::from(0u32);
        if self.bits == 0 {
            return if *e == zero { self.field.one() } else { self };
        }
        let reduced = e % self.field.group_order();
        let mut exp = u128::try_from(&reduced).expect("reduced exponent fits 127 bits");
        let mut base = self;
        let mut acc = self.field.one();
        while exp != 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            exp >>= 1;
            if exp != 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn pow_u64(self, e: u64) -> FieldElement {
        self.pow(&BigUint::from(e))
    }

    /// The j-th Frobenius iterate `a^{2^j}`, by successive squaring. Additive
    /// in `a` since squaring is additive in characteristic 2.
    pub fn frobenius_iter(self, j: u32) -> FieldElement {
        let steps = j % self.field.n;
        let mut acc = self;
        for _ in 0..steps {
            acc = acc.square();
        }
        acc
    }
}

fn assert_same_field(a: &FieldElement, b: &FieldElement) {
    assert_eq!(
        a.field, b.field,
        "field mismatch: operands belong to different GF(2^n) contexts"
    );
}

// addition in characteristic 2 is coordinatewise XOR, and subtraction
// coincides with addition
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(&self, &rhs);
        FieldElement {
            field: self.field,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + rhs
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(&self, &rhs);
        FieldElement {
            field: self.field,
            bits: poly_mulmod(self.bits, rhs.bits, self.field.modulus),
        }
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", bits_to_hex(self.bits, self.field.n))
    }
}

// ---------------------------------------------------------------------------
// Hex encoding of bit-vectors: little-endian bytes, byte 0 = bits 0..8,
// two lowercase hex digits per byte. Frozen in the file formats.
// ---------------------------------------------------------------------------

pub(crate) fn hex_byte_len(nbits: u32) -> usize {
    (nbits as usize).div_ceil(8)
}

pub(crate) fn bits_to_hex(bits: u128, nbits: u32) -> String {
    let len = hex_byte_len(nbits);
    let mut out = String::with_capacity(2 * len);
    for byte_idx in 0..len {
        let byte = ((bits >> (8 * byte_idx)) & 0xff) as u8;
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

pub(crate) fn hex_to_bits(hex: &str, nbits: u32) -> Result<u128, FieldError> {
    let expected_bytes = hex_byte_len(nbits);
    let err = || FieldError::InvalidHex {
        hex: hex.to_string(),
        expected_bytes,
    };
    if hex.len() != 2 * expected_bytes {
        return Err(err());
    }
    let mut bits = 0u128;
    for byte_idx in 0..expected_bytes {
        let pair = &hex[2 * byte_idx..2 * byte_idx + 2];
        let byte = u8::from_str_radix(pair, 16).map_err(|_| err())?;
        bits |= (byte as u128) << (8 * byte_idx);
    }
    if nbits < 128 && bits >> nbits != 0 {
        return Err(err());
    }
    Ok(bits)
}

#[derive(Serialize, Deserialize)]
struct FieldContextRepr {
    n: u32,
    modulus_hex: String,
}

impl From<FieldContext> for FieldContextRepr {
    fn from(ctx: FieldContext) -> Self {
        FieldContextRepr {
            n: ctx.n,
            modulus_hex: bits_to_hex(ctx.modulus, ctx.n + 1),
        }
    }
}

impl TryFrom<FieldContextRepr> for FieldContext {
    type Error = FieldError;
    fn try_from(repr: FieldContextRepr) -> Result<Self, FieldError> {
        if repr.n == 0 || repr.n > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree { n: repr.n });
        }
        let modulus = hex_to_bits(&repr.modulus_hex, repr.n + 1)?;
        FieldContext::from_parts(repr.n, modulus)
    }
}
