//! Named verification suites over the explicit constructions.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classifier::cremona_profile;
use crate::finite_geometry::involutions::{verify_prop1_involutions, verify_prop2_involutions};
use crate::finite_geometry::proj::{all_points, P1Point};
use crate::finite_geometry::{
    collinear, factor_mod_p, frobenius_orbit, general_position, map_order, phi, phi_inverse,
    quartic_discriminant, Check, FieldSpec, GFElement, IntPoly, PlaneMap, ProjPoint,
};
use crate::groups::all_perms;

pub const DEFAULT_SEED: u64 = 20_240_505;

/// `DP5_SEED` when set to an integer, otherwise [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("DP5_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// A named group of checks; it passes when every check does.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub checks: Vec<Check>,
}

impl NamedCheck {
    fn new(name: &str, checks: Vec<Check>) -> Self {
        NamedCheck {
            name: name.to_string(),
            checks,
        }
    }

    fn failed(name: &str, err: impl std::fmt::Display) -> Self {
        NamedCheck::new(
            name,
            vec![Check::new("precondition", false, err.to_string())],
        )
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

fn field(p: u32, k: usize) -> FieldSpec {
    FieldSpec::new(p, k).expect("pinned fields exist")
}

fn point(f: &FieldSpec, c: [GFElement; 3]) -> ProjPoint {
    ProjPoint::new(f, c).expect("nonzero")
}

/// `[1:ζ:ζ^4]` over `GF(8)`.
pub fn f8_degree3_point() -> NamedCheck {
    let f = field(2, 3);
    let z = f.generator();
    let zp = |e| f.pow(z, e);
    let start = point(&f, [f.one(), z, zp(4)]);
    let orbit = frobenius_orbit(&f, &start, 2);
    let expected = vec![
        start,
        point(&f, [f.one(), zp(2), z]),
        point(&f, [f.one(), zp(4), zp(2)]),
    ];
    let shown: Vec<String> = orbit.iter().map(ProjPoint::to_string).collect();
    let non_collinear = orbit.len() == 3 && !collinear(&f, &orbit[0], &orbit[1], &orbit[2]);
    NamedCheck::new(
        "F8-degree3-point",
        vec![
            Check::new("orbit length 3", orbit.len() == 3, shown.join(" ")),
            Check::new(
                "orbit is {[1:z:z^4],[1:z^2:z],[1:z^4:z^2]}",
                orbit == expected,
                f.to_string(),
            ),
            Check::new("components not collinear", non_collinear, String::new()),
        ],
    )
}

/// `[1:ζ:ζ^2]` over `GF(16)`.
pub fn f16_degree4_point() -> NamedCheck {
    let f = field(2, 4);
    let z = f.generator();
    let start = point(&f, [f.one(), z, f.pow(z, 2)]);
    let orbit = frobenius_orbit(&f, &start, 2);
    let expected: Vec<ProjPoint> = [1u64, 2, 4, 8]
        .iter()
        .map(|&e| point(&f, [f.one(), f.pow(z, e), f.pow(z, 2 * e)]))
        .collect();
    let shown: Vec<String> = orbit.iter().map(ProjPoint::to_string).collect();
    let general = general_position(&f, &orbit).unwrap_or(false);
    NamedCheck::new(
        "F16-degree4-point",
        vec![
            Check::new("orbit length 4", orbit.len() == 4, shown.join(" ")),
            Check::new(
                "orbit is {[1:z^e:z^2e] : e = 1,2,4,8}",
                orbit == expected,
                f.to_string(),
            ),
            Check::new("components in general position", general, String::new()),
        ],
    )
}

/// Diagonal points `([1−ζ:ζ^4],[1−ζ:ζ^4])` of `P^1 × P^1` over `GF(8)`.
pub fn f8_quadric_degree3_point() -> NamedCheck {
    let f = field(2, 3);
    let z = f.generator();
    let u = P1Point::new(&f, [f.sub(f.one(), z), f.pow(z, 4)]).expect("nonzero");
    let mut orbit = vec![(u, u)];
    loop {
        let (a, b) = orbit.last().expect("nonempty");
        let next = (a.frobenius(&f, 2), b.frobenius(&f, 2));
        if next == orbit[0] {
            break;
        }
        orbit.push(next);
    }
    let expected: Vec<(P1Point, P1Point)> = [1u64, 2, 4]
        .iter()
        .map(|&e| {
            let w = P1Point::new(&f, [f.sub(f.one(), f.pow(z, e)), f.pow(z, (4 * e) % 7)])
                .expect("nonzero");
            (w, w)
        })
        .collect();
    let distinct_rulings = (0..orbit.len()).all(|i| {
        (i + 1..orbit.len()).all(|j| orbit[i].0 != orbit[j].0 && orbit[i].1 != orbit[j].1)
    });
    NamedCheck::new(
        "F8-QL-degree3-point",
        vec![
            Check::new("orbit length 3", orbit.len() == 3, String::new()),
            Check::new(
                "orbit matches the listed components",
                orbit == expected,
                String::new(),
            ),
            Check::new(
                "no two components share a ruling",
                distinct_rulings,
                String::new(),
            ),
        ],
    )
}

/// Order, base points and inverse of `[x(z−y):z(x−y):xz]` over `GF(7)` and `GF(11)`.
pub fn phi5_order(seed: u64) -> NamedCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for p in [7, 11] {
        let f = field(p, 1);
        let m = phi(&f);
        let inv = phi_inverse(&f);
        let order = map_order(&m, &f, 20, &mut rng);
        checks.push(Check::new(
            format!("GF({p}) order 5 on 20 witnesses"),
            order == Ok(5),
            format!("{order:?}"),
        ));

        let mut base = m.base_points(&f);
        base.sort();
        let mut coord: Vec<ProjPoint> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|&c| ProjPoint::from_ints(&f, c).expect("nonzero"))
            .collect();
        coord.sort();
        let shown: Vec<String> = base.iter().map(ProjPoint::to_string).collect();
        checks.push(Check::new(
            format!("GF({p}) base points are the coordinate points"),
            base == coord,
            shown.join(" "),
        ));

        let one = ProjPoint::from_ints(&f, [1, 1, 1]).expect("nonzero");
        let img = m.apply(&f, &one);
        let target = ProjPoint::from_ints(&f, [0, 0, 1]).expect("nonzero");
        checks.push(Check::new(
            format!("GF({p}) phi([1:1:1]) = [0:0:1]"),
            img == Some(target),
            img.map_or("indeterminate".into(), |x| x.to_string()),
        ));

        let mut torus: Vec<ProjPoint> = all_points(&f)
            .into_iter()
            .filter(|q| q.coords().iter().all(|c| !c.is_zero()))
            .collect();
        torus.shuffle(&mut rng);
        let wanted = if p == 11 { 50 } else { torus.len() };
        let sample = &torus[..wanted.min(torus.len())];
        let round_trip = sample.len() == wanted
            && sample
                .iter()
                .all(|q| m.apply(&f, q).and_then(|r| inv.apply(&f, &r)) == Some(*q));
        checks.push(Check::new(
            format!("GF({p}) phi^-1(phi(x)) = x"),
            round_trip,
            format!("{} sampled points off xyz = 0", sample.len()),
        ));
    }
    NamedCheck::new("phi5-order", checks)
}

fn a4_quartic() -> IntPoly {
    IntPoly::new(&[12, 8, 0, 0, 1])
}

pub fn a4_discriminant() -> NamedCheck {
    let d = quartic_discriminant(&a4_quartic());
    NamedCheck::new(
        "A4-discriminant",
        vec![Check::new(
            "disc(X^4+8X+12) = 576^2 = 331776",
            d == Ok(576 * 576),
            format!("{d:?}"),
        )],
    )
}

pub fn a4_factorizations() -> NamedCheck {
    let expect = [(5, "(X+1)(X^3+4X^2+X+2)"), (17, "(X^2+4X+7)(X^2+13X+9)")];
    let checks = expect
        .iter()
        .map(|&(p, s)| match factor_mod_p(&a4_quartic(), p) {
            Ok(fac) => {
                let irreducible = fac.factors.iter().all(|f| f.is_irreducible());
                Check::new(
                    format!("mod {p}: {s}"),
                    fac.to_string() == s && irreducible,
                    fac.to_string(),
                )
            }
            Err(e) => Check::new(format!("mod {p}: {s}"), false, e.to_string()),
        })
        .collect();
    NamedCheck::new("A4-factorizations", checks)
}

pub fn prop1_involutions() -> NamedCheck {
    let mut checks = Vec::new();
    for q in [3, 5] {
        match verify_prop1_involutions(&field(q, 2), q) {
            Ok(c) => checks.extend(c),
            Err(e) => return NamedCheck::failed("prop1-involutions", e),
        }
    }
    NamedCheck::new("prop1-involutions", checks)
}

pub fn prop2_involutions() -> NamedCheck {
    let mut checks = Vec::new();
    for q in [3, 5] {
        let f = field(q, 2);
        match verify_prop2_involutions(&f, q, f.generator()) {
            Ok(c) => checks.extend(c),
            Err(e) => return NamedCheck::failed("prop2-involutions", e),
        }
    }
    NamedCheck::new("prop2-involutions", checks)
}

/// Noether relations for the Cremona profile of every element of `Sym5`.
pub fn noether_all_120() -> NamedCheck {
    let profiles: Vec<_> = all_perms()
        .iter()
        .map(|g| (g, cremona_profile(g)))
        .collect();
    let bad: Vec<String> = profiles
        .iter()
        .filter(|(_, c)| !c.satisfies_noether())
        .map(|(g, c)| format!("{g}: {c}"))
        .collect();
    let degrees_ok = profiles.iter().all(|(_, c)| matches!(c.degree, 1 | 2));
    let quadratic_iff_moves_5 = profiles
        .iter()
        .all(|(g, c)| (c.degree == 2) == (g.apply(5) != 5));
    let quadratic = profiles.iter().filter(|(_, c)| c.degree == 2).count();
    NamedCheck::new(
        "noether-all-120",
        vec![
            Check::new(
                "sum m = 3(d-1), sum m^2 = d^2-1",
                bad.is_empty(),
                bad.join("; "),
            ),
            Check::new("d in {1, 2}", degrees_ok, String::new()),
            Check::new(
                "d = 2 exactly when 5 moves",
                quadratic_iff_moves_5 && quadratic == 96,
                format!("{quadratic} quadratic"),
            ),
        ],
    )
}

pub fn example_suite(seed: u64) -> Vec<NamedCheck> {
    vec![
        f8_degree3_point(),
        f16_degree4_point(),
        f8_quadric_degree3_point(),
        phi5_order(seed),
        a4_discriminant(),
        a4_factorizations(),
    ]
}

pub fn noether_suite() -> Vec<NamedCheck> {
    vec![noether_all_120()]
}

pub fn involution_suite() -> Vec<NamedCheck> {
    vec![prop1_involutions(), prop2_involutions()]
}
