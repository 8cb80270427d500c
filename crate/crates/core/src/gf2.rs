//! Arithmetic in `F_2^n` with a polynomial basis, plus the coordinate dot product on `F_2^t`.
//!
//! Field elements and polynomials are bit-packed: bit `i` is the coefficient of `x^i`.

use crate::error::{Error, Result};

/// Largest extension degree a [`FieldContext`] accepts.
pub const MAX_DEGREE: u32 = 25;

const SHIPPED_MODULI: &str = include_str!("../../../data/moduli.txt");

/// Coordinate dot product on `F_2^t`: parity of `a & b`, returned as 0 or 1.
#[inline]
pub fn dot(a: u32, b: u32) -> u32 {
    (a & b).count_ones() & 1
}

/// Degree of a nonzero polynomial; `None` for the zero polynomial.
#[inline]
pub fn degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

/// Carry-less product. Callers keep `deg a + deg b < 64`.
#[inline]
pub fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m).expect("modulus must be nonzero");
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

pub fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    poly_rem(clmul(a, b), m)
}

/// Irreducibility over `F_2` (Ben-Or): `f` of degree `n` is irreducible iff
/// `gcd(x^(2^i) - x, f) = 1` for every `1 <= i <= n/2`.
///
/// Supports degrees up to 31. Constants (degree 0) and zero are not irreducible.
pub fn is_irreducible(modulus: u64) -> bool {
    let n = match degree(modulus) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    assert!(n <= 31, "degree {n} unsupported");
    let x = poly_rem(0b10, modulus);
    let mut power = x;
    for _ in 1..=n / 2 {
        power = mulmod(power, power, modulus);
        if poly_gcd(modulus, power ^ x) != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `n`.
pub fn default_modulus(n: u32) -> Result<u64> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::invalid(format!(
            "degree {n} outside 1..={MAX_DEGREE}"
        )));
    }
    let lo = 1u64 << n;
    Ok((lo..2 * lo)
        .find(|&p| is_irreducible(p))
        .expect("an irreducible polynomial exists for every degree"))
}

/// The moduli table shipped in `data/moduli.txt`, as `(degree, modulus)` pairs.
pub fn shipped_moduli() -> Result<Vec<(u32, u64)>> {
    let mut out = Vec::new();
    for (idx, line) in SHIPPED_MODULI.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(n), Some(hex), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::parse(idx + 1, "expected `n hex-modulus`"));
        };
        let n = n
            .parse()
            .map_err(|_| Error::parse(idx + 1, format!("bad degree `{n}`")))?;
        let m = u64::from_str_radix(hex.trim_start_matches("0x"), 16)
            .map_err(|_| Error::parse(idx + 1, format!("bad modulus `{hex}`")))?;
        out.push((n, m));
    }
    Ok(out)
}

/// `F_2^n` realised as `F_2[x] / (modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldContext {
    n: u32,
    modulus: u64,
}

impl FieldContext {
    /// Validates that `modulus` is an irreducible polynomial of degree exactly `n`.
    pub fn new(n: u32, modulus: u64) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::invalid(format!(
                "degree {n} outside 1..={MAX_DEGREE}"
            )));
        }
        if degree(modulus) != Some(n) {
            return Err(Error::invalid(format!(
                "modulus {modulus:#x} does not have degree {n}"
            )));
        }
        if !is_irreducible(modulus) {
            return Err(Error::invalid(format!("modulus {modulus:#x} is reducible")));
        }
        Ok(Self { n, modulus })
    }

    /// The field of degree `n` over the default modulus.
    pub fn with_default_modulus(n: u32) -> Result<Self> {
        let modulus = default_modulus(n)?;
        Ok(Self { n, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of field elements, `2^n`.
    pub fn order(&self) -> u32 {
        1 << self.n
    }

    fn check(&self, a: u32) -> Result<()> {
        if a >= self.order() {
            return Err(Error::invalid(format!(
                "element {a:#x} does not fit in {} bits",
                self.n
            )));
        }
        Ok(())
    }

    /// Product of two field elements. Operands must be `< 2^n`.
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.order() && b < self.order());
        poly_rem(clmul(a as u64, b as u64), self.modulus) as u32
    }

    pub fn checked_mul(&self, a: u32, b: u32) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// `a^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn checked_pow(&self, a: u32, e: u64) -> Result<u32> {
        self.check(a)?;
        Ok(self.pow(a, e))
    }

    /// Multiplicative inverse, extended by `0 -> 0`.
    pub fn inv(&self, a: u32) -> u32 {
        self.pow(a, (1u64 << self.n) - 2)
    }

    pub fn checked_inv(&self, a: u32) -> Result<u32> {
        self.check(a)?;
        Ok(self.inv(a))
    }
}
