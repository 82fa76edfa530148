//! Explicit involutions of `P^2` and of `P^1 × P^1` over `GF(q^2)`, checked
//! point by point.

use super::cremona::LinearMap;
use super::field::{FieldSpec, GFElement};
use super::proj::{all_p1_points, all_points, P1Point, ProjPoint};
use super::{Check, GeomError};

/// `α = [x − t·y : −y : z]` and `β = [x − t·y : z : −y]`.
pub fn prop2_maps(field: &FieldSpec, t: GFElement) -> (LinearMap, LinearMap) {
    let (z, o) = (field.zero(), field.one());
    let m = field.neg(o);
    let nt = field.neg(t);
    let alpha = LinearMap::new(field, [[o, nt, z], [z, m, z], [z, z, o]]).expect("invertible");
    let beta = LinearMap::new(field, [[o, nt, z], [z, z, o], [z, m, z]]).expect("invertible");
    (alpha, beta)
}

/// `field` must be `GF(q^2)` and `a1` must lie outside `GF(q)`.
pub fn verify_prop2_involutions(
    field: &FieldSpec,
    q: u32,
    a1: GFElement,
) -> Result<Vec<Check>, GeomError> {
    if field.order() != q * q {
        return Err(GeomError::NotQuadraticExtension {
            order: field.order(),
            q,
        });
    }
    let a2 = field.pow(a1, q as u64);
    if a2 == a1 {
        return Err(GeomError::InBaseField(a1.to_string()));
    }
    let t = field.add(a1, a2);
    if field.pow(t, q as u64) != t {
        return Err(GeomError::InBaseField(format!(
            "trace {t} not fixed by Frobenius"
        )));
    }
    let (alpha, beta) = prop2_maps(field, t);
    let points = all_points(field);
    let holds = |f: &dyn Fn(&ProjPoint) -> ProjPoint| points.iter().all(|p| f(p) == *p);
    let a = |p: &ProjPoint| alpha.image(field, p);
    let b = |p: &ProjPoint| beta.image(field, p);

    let (z, o) = (field.zero(), field.one());
    let pt = |c: [GFElement; 3]| ProjPoint::new(field, c).expect("nonzero");
    let s = [pt([a1, o, z]), pt([a2, o, z])];
    let r = [pt([a1, z, o]), pt([a2, z, o])];
    let mut s_to_r = vec![b(&s[0]), b(&s[1])];
    s_to_r.sort();
    let mut r_to_s = vec![b(&r[0]), b(&r[1])];
    r_to_s.sort();
    let (mut rs, mut ss) = (r.to_vec(), s.to_vec());
    rs.sort();
    ss.sort();

    let label = format!("q={q}");
    Ok(vec![
        Check::new(
            format!("{label} alpha^2 = id"),
            holds(&|p| a(&a(p))),
            format!("{} points", points.len()),
        ),
        Check::new(
            format!("{label} beta^4 = id"),
            holds(&|p| b(&b(&b(&b(p))))),
            String::new(),
        ),
        Check::new(
            format!("{label} beta^2 != id"),
            !holds(&|p| b(&b(p))),
            String::new(),
        ),
        Check::new(
            format!("{label} alpha beta alpha = beta^-1"),
            holds(&|p| a(&b(&a(&b(p))))),
            String::new(),
        ),
        Check::new(
            format!("{label} beta([a1:1:0]) = [a2:0:1]"),
            b(&s[0]) == r[1],
            format!("{} -> {}", s[0], b(&s[0])),
        ),
        Check::new(
            format!("{label} beta swaps s and r"),
            s_to_r == rs && r_to_s == ss,
            String::new(),
        ),
    ])
}

/// A point of `P^1 × P^1`.
pub type QuadricPoint = (P1Point, P1Point);

fn p1(field: &FieldSpec, a: GFElement, b: GFElement) -> P1Point {
    P1Point::new(field, [a, b]).expect("nonzero")
}

/// `([u0 : u0 − u1], [v0 : v0 − v1])`.
pub fn prop1_alpha(field: &FieldSpec, (u, v): &QuadricPoint) -> QuadricPoint {
    let f = |w: &P1Point| {
        let [w0, w1] = *w.coords();
        p1(field, w0, field.sub(w0, w1))
    };
    (f(u), f(v))
}

/// `([v1 : v0], [u1 : u0])`.
pub fn prop1_beta(field: &FieldSpec, (u, v): &QuadricPoint) -> QuadricPoint {
    let swap = |w: &P1Point| p1(field, w.coords()[1], w.coords()[0]);
    (swap(v), swap(u))
}

/// `([u1 : u0], [v1 : v0])`.
pub fn prop1_gamma(field: &FieldSpec, (u, v): &QuadricPoint) -> QuadricPoint {
    let swap = |w: &P1Point| p1(field, w.coords()[1], w.coords()[0]);
    (swap(u), swap(v))
}

/// The twisted Frobenius `(x, y) ↦ (y^q, x^q)`.
pub fn quadric_twist(field: &FieldSpec, q: u32, (u, v): &QuadricPoint) -> QuadricPoint {
    (v.frobenius(field, q), u.frobenius(field, q))
}

/// The three involutions on every point of `P^1 × P^1 (GF(q^2))`.
pub fn verify_prop1_involutions(field: &FieldSpec, q: u32) -> Result<Vec<Check>, GeomError> {
    if field.order() != q * q {
        return Err(GeomError::NotQuadraticExtension {
            order: field.order(),
            q,
        });
    }
    let line = all_p1_points(field);
    let points: Vec<QuadricPoint> = line
        .iter()
        .flat_map(|&u| line.iter().map(move |&v| (u, v)))
        .collect();
    let pt = |a: [i64; 2], b: [i64; 2]| {
        (
            P1Point::from_ints(field, a).expect("nonzero"),
            P1Point::from_ints(field, b).expect("nonzero"),
        )
    };
    let p = [pt([1, 0], [1, 0]), pt([0, 1], [0, 1]), pt([1, 1], [1, 1])];
    let mut sorted_p = p.to_vec();
    sorted_p.sort();

    type Map = fn(&FieldSpec, &QuadricPoint) -> QuadricPoint;
    let maps: [(&str, Map); 3] = [
        ("alpha", prop1_alpha),
        ("beta", prop1_beta),
        ("gamma", prop1_gamma),
    ];
    let label = format!("q={q}");
    let mut checks = Vec::new();
    for (name, m) in maps {
        let involution = points.iter().all(|x| m(field, &m(field, x)) == *x);
        let twist = points.iter().all(|x| {
            m(field, &quadric_twist(field, q, x)) == quadric_twist(field, q, &m(field, x))
        });
        let mut image: Vec<QuadricPoint> = p.iter().map(|x| m(field, x)).collect();
        image.sort();
        checks.push(Check::new(
            format!("{label} {name}^2 = id"),
            involution,
            format!("{} points", points.len()),
        ));
        checks.push(Check::new(
            format!("{label} {name} commutes with the twist"),
            twist,
            String::new(),
        ));
        checks.push(Check::new(
            format!("{label} {name} permutes p1,p2,p3"),
            image == sorted_p,
            String::new(),
        ));
    }
    checks.push(Check::new(
        format!("{label} gamma(p1) = p2, gamma(p3) = p3"),
        prop1_gamma(field, &p[0]) == p[1] && prop1_gamma(field, &p[2]) == p[2],
        String::new(),
    ));
    checks.push(Check::new(
        format!("{label} alpha(p1) = p3"),
        prop1_alpha(field, &p[0]) == p[2],
        String::new(),
    ));
    Ok(checks)
}
