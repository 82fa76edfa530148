//! Dense univariate polynomials over `GF(p)` and over the integers: exhaustive
//! factorization for small degrees and discriminants via Sylvester
//! resultants.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not a prime at most 17")]
    BadPrime(u32),
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(usize),
    #[error("expected a polynomial of degree exactly {expected}, got {actual:?}")]
    WrongDegree {
        expected: usize,
        actual: Option<usize>,
    },
}

pub fn is_small_prime(p: u32) -> bool {
    matches!(p, 2 | 3 | 5 | 7 | 11 | 13 | 17)
}

/// A polynomial over `GF(p)`, coefficients from low to high degree with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyModP {
    p: u32,
    coeffs: Vec<u32>,
}

impl PolyModP {
    pub fn new(p: u32, coeffs: &[i64]) -> Self {
        let m = p as i64;
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x.rem_euclid(m) as u32).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyModP { p, coeffs: c }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn from_raw(p: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModP { p, coeffs }
    }

    pub fn mul(&self, other: &PolyModP) -> PolyModP {
        if self.is_zero() || other.is_zero() {
            return PolyModP::from_raw(self.p, Vec::new());
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        PolyModP::from_raw(self.p, out)
    }

    pub fn scale(&self, c: u32) -> PolyModP {
        PolyModP::from_raw(
            self.p,
            self.coeffs.iter().map(|&a| a * c % self.p).collect(),
        )
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, divisor: &PolyModP) -> (PolyModP, PolyModP) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = inv_mod(divisor.leading(), self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem[rem.len() - 1] * inv % self.p;
            quot[shift] = c;
            for (k, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = (rem[shift + k] + self.p * self.p - c * d % self.p) % self.p;
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (
            PolyModP::from_raw(self.p, quot),
            PolyModP::from_raw(self.p, rem),
        )
    }

    /// Monic polynomials of the given degree, in the order of the integer
    /// whose base-`p` digits are the coefficients below the leading one
    /// (constant term least significant).
    pub fn monic_of_degree(p: u32, degree: usize) -> impl Iterator<Item = PolyModP> {
        let count = (p as u64).pow(degree as u32);
        (0..count).map(move |mut n| {
            let mut c = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                c.push((n % p as u64) as u32);
                n /= p as u64;
            }
            c.push(1);
            PolyModP { p, coeffs: c }
        })
    }

    /// The first monic divisor of degree at least 1, scanning degrees upward.
    fn smallest_monic_divisor(&self) -> Option<PolyModP> {
        let n = self.degree()?;
        (1..=n / 2)
            .flat_map(|d| PolyModP::monic_of_degree(self.p, d))
            .find(|cand| self.divrem(cand).1.is_zero())
    }

    /// Irreducible over `GF(p)`: positive degree and no monic divisor of
    /// degree `1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        matches!(self.degree(), Some(d) if d >= 1) && self.smallest_monic_divisor().is_none()
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(
            f,
            &self.coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>(),
            'X',
        )
    }
}

/// Descending powers with explicit coefficients, e.g. `X^3+4X^2+X+2`.
pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[i64], var: char) -> fmt::Result {
    let mut first = true;
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let mag = c.unsigned_abs();
        f.write_str(sign)?;
        match (deg, mag) {
            (0, m) => write!(f, "{m}")?,
            (_, 1) => {}
            (_, m) => write!(f, "{m}")?,
        }
        match deg {
            0 => {}
            1 => write!(f, "{var}")?,
            d => write!(f, "{var}^{d}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let a = a % p;
    assert!(a != 0, "zero has no inverse mod {p}");
    (1..p).find(|&x| a * x % p == 1).expect("p is prime")
}

/// A factorization `unit · Π factors` over `GF(p)` with monic irreducible
/// factors in non-decreasing degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<PolyModP>,
}

impl Factorization {
    pub fn product(&self, p: u32) -> PolyModP {
        self.factors
            .iter()
            .fold(PolyModP::new(p, &[self.unit as i64]), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit != 1 || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
        }
        for fac in &self.factors {
            write!(f, "({fac})")?;
        }
        Ok(())
    }
}

/// Complete factorization of an integer polynomial of degree at most 4
/// reduced mod `p`.
pub fn factor_mod_p(poly: &IntPoly, p: u32) -> Result<Factorization, PolyError> {
    if !is_small_prime(p) {
        return Err(PolyError::BadPrime(p));
    }
    let mut rest = PolyModP::new(p, &poly.coeffs);
    let deg = rest.degree().ok_or(PolyError::ZeroPolynomial)?;
    if deg > 4 {
        return Err(PolyError::DegreeOutOfRange(deg));
    }
    let unit = rest.leading();
    rest = rest.scale(inv_mod(unit, p));
    let mut factors = Vec::new();
    while rest.degree().is_some_and(|d| d >= 1) {
        match rest.smallest_monic_divisor() {
            Some(d) => {
                rest = rest.divrem(&d).0;
                factors.push(d);
            }
            None => {
                factors.push(rest);
                break;
            }
        }
    }
    factors.sort_by_key(|f| (f.degree(), f.coeffs.clone()));
    Ok(Factorization { unit, factors })
}

/// A polynomial with integer coefficients, low to high degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(coeffs: &[i64]) -> Self {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly { coeffs: c }
    }

    /// Monic polynomial with the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(IntPoly::new(&[1]), |acc, &r| {
            acc.mul(&IntPoly::new(&[-r, 1]))
        })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(&[]);
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(&out)
    }

    pub fn derivative(&self) -> IntPoly {
        let c: Vec<i64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| i as i64 * a)
            .collect();
        IntPoly::new(&c)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, 'X')
    }
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> i128 {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return 0;
    };
    let size = m + n;
    if size == 0 {
        return 1;
    }
    let mut rows = vec![vec![0i128; size]; size];
    for r in 0..n {
        for (k, &c) in f.coeffs.iter().rev().enumerate() {
            rows[r][r + k] = c as i128;
        }
    }
    for r in 0..m {
        for (k, &c) in g.coeffs.iter().rev().enumerate() {
            rows[n + r][r + k] = c as i128;
        }
    }
    determinant(rows)
}

/// Exact determinant by Bareiss elimination.
fn determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Discriminant of a quartic: `(-1)^(n(n-1)/2) · Res(P, P') / lc(P)` with
/// `n = 4`, so the sign factor is `+1`.
pub fn quartic_discriminant(poly: &IntPoly) -> Result<i128, PolyError> {
    if poly.degree() != Some(4) {
        return Err(PolyError::WrongDegree {
            expected: 4,
            actual: poly.degree(),
        });
    }
    let lc = *poly.coeffs.last().expect("degree 4") as i128;
    Ok(resultant(poly, &poly.derivative()) / lc)
}

/// The smallest monic irreducible polynomial of degree `k` over `GF(p)` in
/// the order of [`PolyModP::monic_of_degree`].
pub fn smallest_irreducible(p: u32, k: usize) -> PolyModP {
    PolyModP::monic_of_degree(p, k)
        .find(PolyModP::is_irreducible)
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_quartic() -> IntPoly {
        IntPoly::new(&[12, 8, 0, 0, 1])
    }

    #[test]
    fn factor_mod_5() {
        let f = factor_mod_p(&paper_quartic(), 5).unwrap();
        assert_eq!(f.to_string(), "(X+1)(X^3+4X^2+X+2)");
        assert!(f.factors.iter().all(PolyModP::is_irreducible));
    }

    #[test]
    fn factor_mod_17() {
        let f = factor_mod_p(&paper_quartic(), 17).unwrap();
        assert_eq!(f.to_string(), "(X^2+4X+7)(X^2+13X+9)");
    }

    #[test]
    fn factor_small() {
        assert_eq!(
            factor_mod_p(&IntPoly::new(&[-1, 0, 1]), 5)
                .unwrap()
                .to_string(),
            "(X+1)(X+4)"
        );
        assert_eq!(
            factor_mod_p(&IntPoly::new(&[6, 0, 3]), 5)
                .unwrap()
                .to_string(),
            "3(X^2+2)"
        );
        assert_eq!(
            factor_mod_p(&IntPoly::new(&[5]), 5),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(
            factor_mod_p(&IntPoly::new(&[1, 1]), 4),
            Err(PolyError::BadPrime(4))
        );
    }

    #[test]
    fn discriminants() {
        assert_eq!(quartic_discriminant(&paper_quartic()).unwrap(), 331_776);
        assert_eq!(331_776, 576 * 576);
        assert_eq!(
            quartic_discriminant(&IntPoly::new(&[-1, 0, 0, 0, 1])).unwrap(),
            -256
        );
        assert_eq!(
            quartic_discriminant(&IntPoly::from_roots(&[1, 1, 2, 3])).unwrap(),
            0
        );
        assert!(quartic_discriminant(&IntPoly::new(&[1, 0, 1])).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::new(&[12, 8, 0, 0, 1]).to_string(), "X^4+8X+12");
        assert_eq!(IntPoly::new(&[-1, 0, 0, 0, 1]).to_string(), "X^4-1");
        assert_eq!(IntPoly::new(&[]).to_string(), "0");
    }

    #[test]
    fn irreducibility_scan() {
        assert!(PolyModP::new(2, &[1, 1, 0, 1]).is_irreducible());
        assert!(PolyModP::new(2, &[1, 1, 0, 0, 1]).is_irreducible());
        assert!(!PolyModP::new(2, &[1, 0, 1]).is_irreducible());
        assert_eq!(smallest_irreducible(2, 2).to_string(), "X^2+X+1");
        assert_eq!(smallest_irreducible(3, 2).to_string(), "X^2+1");
    }
}
