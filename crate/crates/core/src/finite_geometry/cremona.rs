//! Rational self-maps of `P^2` given by linear or quadratic forms, their
//! base points, and sampled orders.

use rand::seq::SliceRandom;
use rand::Rng;

use super::field::{FieldSpec, GFElement};
use super::proj::{all_points, dot, quadratic_monomials, row_reduce, ProjPoint};
use super::GeomError;

/// Largest order `map_order` will look for.
pub const ORDER_BOUND: u32 = 12;

/// A rational map of `P^2` evaluated point by point.
pub trait PlaneMap {
    /// The image, or `None` when every form vanishes (the map is
    /// indeterminate there).
    fn apply(&self, field: &FieldSpec, pt: &ProjPoint) -> Option<ProjPoint>;
}

/// Three quadratic forms in the monomial order `[x^2, y^2, z^2, xy, xz, yz]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticMap {
    forms: [[GFElement; 6]; 3],
}

impl QuadraticMap {
    /// Rejects linearly dependent forms and forms vanishing together on a
    /// whole line defined over the field.
    pub fn new(field: &FieldSpec, forms: [[GFElement; 6]; 3]) -> Result<Self, GeomError> {
        let mut rows: Vec<Vec<GFElement>> = forms.iter().map(|f| f.to_vec()).collect();
        if row_reduce(field, &mut rows).len() < 3 {
            return Err(GeomError::DependentForms);
        }
        let map = QuadraticMap { forms };
        let points = all_points(field);
        for line in &points {
            let on_line = points
                .iter()
                .filter(|p| dot(field, line.coords(), p.coords()).is_zero());
            let vanishing = on_line
                .clone()
                .all(|p| map.values(field, p).iter().all(GFElement::is_zero));
            if vanishing {
                return Err(GeomError::CommonLinearFactor(line.to_string()));
            }
        }
        Ok(map)
    }

    pub fn from_ints(field: &FieldSpec, forms: [[i64; 6]; 3]) -> Result<Self, GeomError> {
        QuadraticMap::new(field, forms.map(|f| f.map(|c| field.from_int(c))))
    }

    pub fn forms(&self) -> &[[GFElement; 6]; 3] {
        &self.forms
    }

    fn values(&self, field: &FieldSpec, pt: &ProjPoint) -> [GFElement; 3] {
        let mono = quadratic_monomials(field, pt.coords());
        self.forms.map(|f| dot(field, &f, &mono))
    }

    /// Points of `P^2(field)` where all three forms vanish.
    pub fn base_points(&self, field: &FieldSpec) -> Vec<ProjPoint> {
        all_points(field)
            .into_iter()
            .filter(|p| self.values(field, p).iter().all(GFElement::is_zero))
            .collect()
    }
}

impl PlaneMap for QuadraticMap {
    fn apply(&self, field: &FieldSpec, pt: &ProjPoint) -> Option<ProjPoint> {
        ProjPoint::new(field, self.values(field, pt)).ok()
    }
}

/// An invertible linear map; row `i` gives the `i`-th output coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    rows: [[GFElement; 3]; 3],
}

impl LinearMap {
    pub fn new(field: &FieldSpec, rows: [[GFElement; 3]; 3]) -> Result<Self, GeomError> {
        let mut m: Vec<Vec<GFElement>> = rows.iter().map(|r| r.to_vec()).collect();
        if row_reduce(field, &mut m).len() < 3 {
            return Err(GeomError::SingularLinearMap);
        }
        Ok(LinearMap { rows })
    }

    pub fn from_ints(field: &FieldSpec, rows: [[i64; 3]; 3]) -> Result<Self, GeomError> {
        LinearMap::new(field, rows.map(|r| r.map(|c| field.from_int(c))))
    }

    /// `self ∘ other`.
    pub fn compose(&self, field: &FieldSpec, other: &LinearMap) -> LinearMap {
        let mut rows = [[field.zero(); 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let col = [other.rows[0][j], other.rows[1][j], other.rows[2][j]];
                *slot = dot(field, &self.rows[i], &col);
            }
        }
        LinearMap { rows }
    }

    pub fn image(&self, field: &FieldSpec, pt: &ProjPoint) -> ProjPoint {
        self.apply(field, pt)
            .expect("invertible maps are defined everywhere")
    }
}

impl PlaneMap for LinearMap {
    fn apply(&self, field: &FieldSpec, pt: &ProjPoint) -> Option<ProjPoint> {
        ProjPoint::new(field, self.rows.map(|r| dot(field, &r, pt.coords()))).ok()
    }
}

/// The order-5 map `[x(z−y) : z(x−y) : xz]`.
pub fn phi(field: &FieldSpec) -> QuadraticMap {
    QuadraticMap::from_ints(
        field,
        [[0, 0, 0, -1, 1, 0], [0, 0, 0, 0, 1, -1], [0, 0, 0, 0, 1, 0]],
    )
    .expect("phi is a genuine quadratic map")
}

/// `[z(z−x) : (z−y)(z−x) : z(z−y)]`.
pub fn phi_inverse(field: &FieldSpec) -> QuadraticMap {
    QuadraticMap::from_ints(
        field,
        [
            [0, 0, 1, 0, -1, 0],
            [0, 0, 1, 1, -1, -1],
            [0, 0, 1, 0, 0, -1],
        ],
    )
    .expect("phi inverse is a genuine quadratic map")
}

/// The standard involution `[yz : xz : xy]`.
pub fn standard_involution(field: &FieldSpec) -> QuadraticMap {
    QuadraticMap::from_ints(
        field,
        [[0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0]],
    )
    .expect("standard involution is a genuine quadratic map")
}

/// Smallest `n <= ORDER_BOUND` with `m^n(p) = p` for every witness `p`: a
/// point whose first `ORDER_BOUND` iterates are all defined. Witnesses are
/// drawn without repetition from a shuffle of `P^2(field)`; at least
/// `samples` of them are required.
pub fn map_order<M: PlaneMap, R: Rng>(
    map: &M,
    field: &FieldSpec,
    samples: usize,
    rng: &mut R,
) -> Result<u32, GeomError> {
    let mut points = all_points(field);
    points.shuffle(rng);
    let mut orbits: Vec<Vec<ProjPoint>> = Vec::with_capacity(samples);
    for pt in points {
        if orbits.len() == samples {
            break;
        }
        let mut iterates = vec![pt];
        for _ in 0..ORDER_BOUND {
            match map.apply(field, iterates.last().expect("nonempty")) {
                Some(next) => iterates.push(next),
                None => break,
            }
        }
        if iterates.len() == ORDER_BOUND as usize + 1 {
            orbits.push(iterates);
        }
    }
    if orbits.len() < samples {
        return Err(GeomError::TooFewWitnesses {
            found: orbits.len(),
            needed: samples,
        });
    }
    (1..=ORDER_BOUND)
        .find(|&n| orbits.iter().all(|o| o[n as usize] == o[0]))
        .ok_or(GeomError::ExceedsBound(ORDER_BOUND))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pt(f: &FieldSpec, c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(f, c).unwrap()
    }

    #[test]
    fn phi_examples() {
        let f = FieldSpec::new(7, 1).unwrap();
        let m = phi(&f);
        assert_eq!(m.apply(&f, &pt(&f, [1, 1, 1])), Some(pt(&f, [0, 0, 1])));
        assert_eq!(m.apply(&f, &pt(&f, [0, 0, 1])), None);
        let mut base = m.base_points(&f);
        base.sort();
        let mut expect = vec![pt(&f, [1, 0, 0]), pt(&f, [0, 1, 0]), pt(&f, [0, 0, 1])];
        expect.sort();
        assert_eq!(base, expect);
    }

    #[test]
    fn orders() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(map_order(&phi(&f7), &f7, 20, &mut rng), Ok(5));
        assert_eq!(
            map_order(&standard_involution(&f7), &f7, 20, &mut rng),
            Ok(2)
        );
        let swap = LinearMap::from_ints(&f7, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        assert_eq!(map_order(&swap, &f7, 20, &mut rng), Ok(2));
        let f11 = FieldSpec::new(11, 1).unwrap();
        assert_eq!(map_order(&phi(&f11), &f11, 20, &mut rng), Ok(5));
    }

    #[test]
    fn order_errors() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f7 = FieldSpec::new(7, 1).unwrap();
        assert_eq!(
            map_order(&phi(&f7), &f7, 21, &mut rng),
            Err(GeomError::TooFewWitnesses {
                found: 20,
                needed: 21
            })
        );
        let f13 = FieldSpec::new(13, 1).unwrap();
        let shear = LinearMap::from_ints(&f13, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(
            map_order(&shear, &f13, 20, &mut rng),
            Err(GeomError::ExceedsBound(ORDER_BOUND))
        );
    }

    #[test]
    fn rejects_degenerate_maps() {
        let f = FieldSpec::new(7, 1).unwrap();
        // x·(x, y, z): common factor x.
        assert!(matches!(
            QuadraticMap::from_ints(
                &f,
                [[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]]
            ),
            Err(GeomError::CommonLinearFactor(_))
        ));
        assert_eq!(
            QuadraticMap::from_ints(
                &f,
                [[1, 0, 0, 0, 0, 0], [2, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
            ),
            Err(GeomError::DependentForms)
        );
        assert_eq!(
            LinearMap::from_ints(&f, [[1, 0, 0], [1, 0, 0], [0, 0, 1]]),
            Err(GeomError::SingularLinearMap)
        );
    }
}
