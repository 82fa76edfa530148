//! Finite fields `GF(p^k)` with `p <= 17`, `k <= 4`, as `GF(p)[t]/(m(t))`.

use std::fmt;

use thiserror::Error;

use super::poly::{inv_mod, is_small_prime, smallest_irreducible, PolyModP};

pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime at most 17")]
    BadPrime(u32),
    #[error("extension degree {0} is outside 1..=4")]
    BadDegree(usize),
    #[error("modulus {0} is not monic irreducible")]
    ReducibleModulus(String),
}

/// An element of `GF(p^k)`: coefficients of `1, t, t^2, t^3`, reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct GFElement([u8; MAX_DEGREE]);

impl GFElement {
    pub fn coeffs(&self) -> [u8; MAX_DEGREE] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; MAX_DEGREE]
    }
}

/// Renders as a polynomial in `t`, e.g. `t^2+1`; zero renders as `0`.
impl fmt::Display for GFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<i64> = self.0.iter().map(|&x| x as i64).collect();
        super::poly::write_poly(f, &c, 't')
    }
}

/// A concrete finite field with a pinned modulus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FieldSpec {
    p: u32,
    k: usize,
    /// Monic modulus, low to high, length `k + 1`.
    modulus: Vec<u32>,
}

/// Moduli used whenever `(p, k)` appears here; other fields take the smallest
/// irreducible polynomial.
const PINNED: &[(u32, usize, &[i64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[1, 1, 1]),
];

impl FieldSpec {
    /// `GF(p^k)` with the pinned modulus for `(p, k)`.
    pub fn new(p: u32, k: usize) -> Result<Self, FieldError> {
        if !is_small_prime(p) {
            return Err(FieldError::BadPrime(p));
        }
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(FieldError::BadDegree(k));
        }
        let modulus = match PINNED.iter().find(|(q, d, _)| *q == p && *d == k) {
            Some((_, _, m)) => PolyModP::new(p, m),
            None if k == 1 => PolyModP::new(p, &[0, 1]),
            None => smallest_irreducible(p, k),
        };
        FieldSpec::with_modulus(p, &modulus)
    }

    /// `GF(p)[t]/(modulus)`; the modulus must be monic irreducible.
    pub fn with_modulus(p: u32, modulus: &PolyModP) -> Result<Self, FieldError> {
        if !is_small_prime(p) {
            return Err(FieldError::BadPrime(p));
        }
        let k = modulus.degree().unwrap_or(0);
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(FieldError::BadDegree(k));
        }
        if modulus.prime() != p || modulus.leading() != 1 || !modulus.is_irreducible() {
            return Err(FieldError::ReducibleModulus(modulus.to_string()));
        }
        Ok(FieldSpec {
            p,
            k,
            modulus: modulus.coeffs().to_vec(),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus(&self) -> PolyModP {
        PolyModP::new(
            self.p,
            &self.modulus.iter().map(|&c| c as i64).collect::<Vec<_>>(),
        )
    }

    pub fn zero(&self) -> GFElement {
        GFElement::default()
    }

    pub fn one(&self) -> GFElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> GFElement {
        let mut c = [0u8; MAX_DEGREE];
        c[0] = n.rem_euclid(self.p as i64) as u8;
        GFElement(c)
    }

    /// The class of `t`; a root of the modulus.
    pub fn generator(&self) -> GFElement {
        self.from_coeffs(&[0, 1])
    }

    /// Reduces an arbitrary coefficient list (low to high) modulo the modulus.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> GFElement {
        let poly = PolyModP::new(self.p, coeffs);
        let (_, rem) = poly.divrem(&self.modulus());
        let mut c = [0u8; MAX_DEGREE];
        for (slot, &x) in c.iter_mut().zip(rem.coeffs()) {
            *slot = x as u8;
        }
        GFElement(c)
    }

    pub fn add(&self, a: GFElement, b: GFElement) -> GFElement {
        let mut c = [0u8; MAX_DEGREE];
        for i in 0..self.k {
            c[i] = ((a.0[i] as u32 + b.0[i] as u32) % self.p) as u8;
        }
        GFElement(c)
    }

    pub fn neg(&self, a: GFElement) -> GFElement {
        let mut c = [0u8; MAX_DEGREE];
        for i in 0..self.k {
            c[i] = ((self.p - a.0[i] as u32) % self.p) as u8;
        }
        GFElement(c)
    }

    pub fn sub(&self, a: GFElement, b: GFElement) -> GFElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: GFElement, b: GFElement) -> GFElement {
        let k = self.k;
        let p = self.p;
        let mut prod = [0u32; 2 * MAX_DEGREE - 1];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + a.0[i] as u32 * b.0[j] as u32) % p;
            }
        }
        for deg in (k..2 * k - 1).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                prod[deg - k + i] = (prod[deg - k + i] + p * p - c * m) % p;
            }
        }
        let mut out = [0u8; MAX_DEGREE];
        for i in 0..k {
            out[i] = prod[i] as u8;
        }
        GFElement(out)
    }

    pub fn pow(&self, a: GFElement, mut e: u64) -> GFElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: GFElement) -> Option<GFElement> {
        if a.is_zero() {
            return None;
        }
        if self.k == 1 {
            return Some(self.from_int(inv_mod(a.0[0] as u32, self.p) as i64));
        }
        Some(self.pow(a, self.order() as u64 - 2))
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self, a: GFElement) -> GFElement {
        self.pow(a, self.p as u64)
    }

    pub fn in_prime_field(&self, a: GFElement) -> bool {
        a.0[1..].iter().all(|&c| c == 0)
    }

    /// All elements, zero first, in base-`p` counting order.
    pub fn elements(&self) -> Vec<GFElement> {
        (0..self.order())
            .map(|mut n| {
                let mut c = [0u8; MAX_DEGREE];
                for slot in c.iter_mut().take(self.k) {
                    *slot = (n % self.p) as u8;
                    n /= self.p;
                }
                GFElement(c)
            })
            .collect()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            let m: Vec<i64> = self.modulus.iter().map(|&c| c as i64).collect();
            write!(f, "GF({}) = GF({})[t]/(", self.order(), self.p)?;
            super::poly::write_poly(f, &m, 't')?;
            f.write_str(")")
        }
    }
}
