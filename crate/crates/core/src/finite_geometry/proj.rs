//! Points of `P^1` and `P^2` over a finite field, Frobenius orbits,
//! collinearity, and conics through five points.

use std::fmt;

use super::field::{FieldSpec, GFElement};
use super::GeomError;

/// A point of `P^2`, normalized so the first nonzero coordinate is `1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint([GFElement; 3]);

impl ProjPoint {
    pub fn new(field: &FieldSpec, coords: [GFElement; 3]) -> Result<Self, GeomError> {
        normalize(field, &coords)
            .map(ProjPoint)
            .ok_or(GeomError::ZeroVector)
    }

    pub fn from_ints(field: &FieldSpec, coords: [i64; 3]) -> Result<Self, GeomError> {
        ProjPoint::new(field, coords.map(|c| field.from_int(c)))
    }

    pub fn coords(&self) -> &[GFElement; 3] {
        &self.0
    }

    /// Coordinate-wise `x ↦ x^q`.
    pub fn frobenius(&self, field: &FieldSpec, q: u32) -> ProjPoint {
        ProjPoint(self.0.map(|c| field.pow(c, q as u64)))
    }

    /// Whether every coordinate lies in the prime field.
    pub fn is_rational(&self, field: &FieldSpec) -> bool {
        self.0.iter().all(|&c| field.in_prime_field(c))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// A point of `P^1`, normalized like [`ProjPoint`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct P1Point([GFElement; 2]);

impl P1Point {
    pub fn new(field: &FieldSpec, coords: [GFElement; 2]) -> Result<Self, GeomError> {
        normalize(field, &coords)
            .map(P1Point)
            .ok_or(GeomError::ZeroVector)
    }

    pub fn from_ints(field: &FieldSpec, coords: [i64; 2]) -> Result<Self, GeomError> {
        P1Point::new(field, coords.map(|c| field.from_int(c)))
    }

    pub fn coords(&self) -> &[GFElement; 2] {
        &self.0
    }

    pub fn frobenius(&self, field: &FieldSpec, q: u32) -> P1Point {
        P1Point(self.0.map(|c| field.pow(c, q as u64)))
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.0[0], self.0[1])
    }
}

fn normalize<const N: usize>(field: &FieldSpec, coords: &[GFElement; N]) -> Option<[GFElement; N]> {
    let lead = coords.iter().find(|c| !c.is_zero())?;
    let inv = field.inv(*lead).expect("nonzero");
    Some(coords.map(|c| field.mul(c, inv)))
}

/// Every point of `P^2` over the field, in normalized enumeration order.
pub fn all_points(field: &FieldSpec) -> Vec<ProjPoint> {
    let elems = field.elements();
    let (zero, one) = (field.zero(), field.one());
    let mut out = vec![ProjPoint([zero, zero, one])];
    out.extend(elems.iter().map(|&z| ProjPoint([zero, one, z])));
    for &y in &elems {
        for &z in &elems {
            out.push(ProjPoint([one, y, z]));
        }
    }
    out
}

/// Every point of `P^1` over the field.
pub fn all_p1_points(field: &FieldSpec) -> Vec<P1Point> {
    let mut out = vec![P1Point([field.zero(), field.one()])];
    out.extend(
        field
            .elements()
            .into_iter()
            .map(|x| P1Point([field.one(), x])),
    );
    out
}

/// The orbit of `pt` under `x ↦ x^q`, starting with `pt` itself.
pub fn frobenius_orbit(field: &FieldSpec, pt: &ProjPoint, q: u32) -> Vec<ProjPoint> {
    let mut orbit = vec![*pt];
    let mut cur = pt.frobenius(field, q);
    while cur != *pt {
        orbit.push(cur);
        cur = cur.frobenius(field, q);
    }
    orbit
}

fn det3(field: &FieldSpec, m: [[GFElement; 3]; 3]) -> GFElement {
    let term = |a: usize, b: usize, c: usize| field.mul(m[0][a], field.mul(m[1][b], m[2][c]));
    let pos = field.add(field.add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
    let neg = field.add(field.add(term(2, 1, 0), term(0, 2, 1)), term(1, 0, 2));
    field.sub(pos, neg)
}

pub fn collinear(field: &FieldSpec, a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
    det3(field, [a.0, b.0, c.0]).is_zero()
}

/// No three of the points collinear; for five points the conic through them
/// must also be irreducible.
pub fn general_position(field: &FieldSpec, points: &[ProjPoint]) -> Result<bool, GeomError> {
    if points.len() < 4 {
        return Err(GeomError::TooFewPoints {
            needed: 4,
            got: points.len(),
        });
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(GeomError::RepeatedPoint(points[i].to_string()));
            }
            for k in j + 1..points.len() {
                if collinear(field, &points[i], &points[j], &points[k]) {
                    return Ok(false);
                }
            }
        }
    }
    if points.len() == 5 {
        let five: [ProjPoint; 5] = points.try_into().expect("length checked");
        return Ok(!conic_through_5(field, &five)?.degenerate);
    }
    Ok(true)
}

/// `[x^2, y^2, z^2, xy, xz, yz]` at a point.
pub fn quadratic_monomials(field: &FieldSpec, pt: &[GFElement; 3]) -> [GFElement; 6] {
    let [x, y, z] = *pt;
    [
        field.mul(x, x),
        field.mul(y, y),
        field.mul(z, z),
        field.mul(x, y),
        field.mul(x, z),
        field.mul(y, z),
    ]
}

/// A plane conic `ax^2+by^2+cz^2+dxy+exz+fyz`, scaled so the first nonzero
/// coefficient is `1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Conic {
    pub coeffs: [GFElement; 6],
    pub degenerate: bool,
}

impl Conic {
    pub fn eval(&self, field: &FieldSpec, pt: &ProjPoint) -> GFElement {
        dot(field, &self.coeffs, &quadratic_monomials(field, &pt.0))
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 6] = ["x^2", "y^2", "z^2", "xy", "xz", "yz"];
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(NAMES)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| {
                if c.to_string() == "1" {
                    m.to_string()
                } else {
                    format!("({c}){m}")
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

pub(crate) fn dot(field: &FieldSpec, a: &[GFElement], b: &[GFElement]) -> GFElement {
    a.iter().zip(b).fold(field.zero(), |acc, (&x, &y)| {
        field.add(acc, field.mul(x, y))
    })
}

/// Row-reduces in place and returns the pivot columns.
pub(crate) fn row_reduce(field: &FieldSpec, rows: &mut [Vec<GFElement>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col];
                for j in 0..ncols {
                    let sub = field.mul(factor, rows[r][j]);
                    rows[i][j] = field.sub(rows[i][j], sub);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// The conic through five points. A singular conic is flagged `degenerate`;
/// its quadratic form has vanishing half-discriminant
/// `4abc + def − af² − be² − cd²`.
pub fn conic_through_5(field: &FieldSpec, points: &[ProjPoint; 5]) -> Result<Conic, GeomError> {
    let mut rows: Vec<Vec<GFElement>> = points
        .iter()
        .map(|p| quadratic_monomials(field, &p.0).to_vec())
        .collect();
    let pivots = row_reduce(field, &mut rows);
    if pivots.len() < 5 {
        return Err(GeomError::ConicUnderdetermined { rank: pivots.len() });
    }
    let free = (0..6)
        .find(|c| !pivots.contains(c))
        .expect("one free column");
    let mut coeffs = [field.zero(); 6];
    coeffs[free] = field.one();
    for (row, &pc) in rows.iter().zip(&pivots) {
        coeffs[pc] = field.neg(row[free]);
    }
    let coeffs = normalize(field, &coeffs).expect("nonzero solution");
    let [a, b, c, d, e, f] = coeffs;
    let m = |x: GFElement, y: GFElement| field.mul(x, y);
    let four = field.from_int(4);
    let disc = field.sub(
        field.add(m(four, m(a, m(b, c))), m(d, m(e, f))),
        field.add(field.add(m(a, m(f, f)), m(b, m(e, e))), m(c, m(d, d))),
    );
    Ok(Conic {
        coeffs,
        degenerate: disc.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(f: &FieldSpec, c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(f, c).unwrap()
    }

    #[test]
    fn normalization_and_count() {
        let f = FieldSpec::new(7, 1).unwrap();
        assert_eq!(pt(&f, [0, 3, 6]), pt(&f, [0, 1, 2]));
        assert_eq!(pt(&f, [0, 3, 6]).to_string(), "[0:1:2]");
        assert_eq!(all_points(&f).len(), 57);
        assert!(ProjPoint::from_ints(&f, [0, 7, 0]).is_err());
        assert_eq!(all_p1_points(&f).len(), 8);
    }

    #[test]
    fn rational_points_are_frobenius_fixed() {
        let f = FieldSpec::new(2, 3).unwrap();
        assert_eq!(frobenius_orbit(&f, &pt(&f, [1, 1, 1]), 2).len(), 1);
    }

    #[test]
    fn collinearity() {
        let f = FieldSpec::new(7, 1).unwrap();
        assert!(collinear(
            &f,
            &pt(&f, [1, 0, 0]),
            &pt(&f, [0, 1, 0]),
            &pt(&f, [1, 1, 0])
        ));
        assert!(!collinear(
            &f,
            &pt(&f, [1, 0, 0]),
            &pt(&f, [0, 1, 0]),
            &pt(&f, [0, 0, 1])
        ));
    }

    #[test]
    fn general_position_checks() {
        let f = FieldSpec::new(7, 1).unwrap();
        let quad = [
            pt(&f, [1, 0, 0]),
            pt(&f, [0, 1, 0]),
            pt(&f, [0, 0, 1]),
            pt(&f, [1, 1, 1]),
        ];
        assert_eq!(general_position(&f, &quad), Ok(true));
        let bad = [
            pt(&f, [1, 0, 0]),
            pt(&f, [0, 1, 0]),
            pt(&f, [1, 1, 0]),
            pt(&f, [1, 1, 1]),
        ];
        assert_eq!(general_position(&f, &bad), Ok(false));
        assert!(matches!(
            general_position(&f, &quad[..3]),
            Err(GeomError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn conic_on_xz_minus_y2() {
        let f = FieldSpec::new(7, 1).unwrap();
        let pts = [1, 2, 3, 4, 5].map(|s| pt(&f, [1, s, s * s]));
        let c = conic_through_5(&f, &pts).unwrap();
        assert!(!c.degenerate);
        // −y^2 + xz normalized so that the y^2 coefficient is 1.
        let expect = [0, 1, 0, 0, -1, 0].map(|x| f.from_int(x));
        assert_eq!(c.coeffs, expect);
        assert_eq!(general_position(&f, &pts), Ok(true));
    }

    #[test]
    fn degenerate_conics() {
        let f = FieldSpec::new(7, 1).unwrap();
        // three points on z = 0 and two on x = 0: the conic is xz.
        let pts = [
            pt(&f, [1, 0, 0]),
            pt(&f, [0, 1, 0]),
            pt(&f, [1, 1, 0]),
            pt(&f, [0, 1, 1]),
            pt(&f, [0, 1, 2]),
        ];
        let c = conic_through_5(&f, &pts).unwrap();
        assert!(c.degenerate);
        // four collinear points do not determine a conic.
        let pts = [
            pt(&f, [1, 0, 0]),
            pt(&f, [0, 1, 0]),
            pt(&f, [1, 1, 0]),
            pt(&f, [1, 2, 0]),
            pt(&f, [0, 0, 1]),
        ];
        assert!(matches!(
            conic_through_5(&f, &pts),
            Err(GeomError::ConicUnderdetermined { .. })
        ));
    }
}
