//! Per-subgroup classification records: orbits, invariant ranks, the
//! equivariant automorphism group of the diagram, Mori flags, Galois-stable
//! contractions, and Cremona degree profiles.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::groups::{
    self, all_conjugacy_classes_of_subgroups, centralizer, IsoType, Perm5, SubgroupRecord,
};
use crate::lattice::{
    fixed_rank, intersect, lattice_map_from_curve_perm, CurveId, DivisorClass, LatticeMap,
};
use crate::petersen::{
    action_on_quadruples, all_graph_automorphisms, build_graph, maximal_disjoint_quadruples,
    sym5_to_graph_aut, Perm10,
};

/// The lattice map induced by `g` through its action on the curves.
pub fn lattice_map_of(g: &Perm5) -> LatticeMap {
    static MAPS: OnceLock<Vec<LatticeMap>> = OnceLock::new();
    let maps = MAPS.get_or_init(|| {
        groups::all_perms()
            .iter()
            .map(|g| {
                lattice_map_from_curve_perm(sym5_to_graph_aut(g).images())
                    .expect("Sym5 acts by isometries")
            })
            .collect()
    });
    maps[g.index()]
}

fn graph_automorphisms() -> &'static [Perm10] {
    static AUTS: OnceLock<Vec<Perm10>> = OnceLock::new();
    AUTS.get_or_init(all_graph_automorphisms)
}

/// Graph automorphisms commuting with every element of the induced action
/// of `h`, found by filtering all 120 automorphisms. Sorted.
pub fn equivariant_aut_brute(h: &SubgroupRecord) -> Vec<Perm10> {
    let action: Vec<Perm10> = h.elements.iter().map(sym5_to_graph_aut).collect();
    let mut out: Vec<Perm10> = graph_automorphisms()
        .iter()
        .copied()
        .filter(|a| action.iter().all(|x| a.commutes_with(x)))
        .collect();
    out.sort();
    out
}

/// The centralizer of `h` in `Sym5`, pushed to curve permutations. Sorted.
pub fn equivariant_aut_via_centralizer(h: &SubgroupRecord) -> Vec<Perm10> {
    let mut out: Vec<Perm10> = centralizer(h)
        .elements
        .iter()
        .map(sym5_to_graph_aut)
        .collect();
    out.sort();
    out
}

/// A Galois-stable set of pairwise disjoint curves and the degree of the
/// del Pezzo surface obtained by contracting it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Contraction {
    pub curves: Vec<CurveId>,
    pub target_degree: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModelKind {
    ProjectivePlane,
    TwistedQuadric,
    SplitQuadric,
    DelPezzo6,
    DelPezzo7,
    Minimal,
}

/// Annotation of the most drastic blow-down suggested by the diagram alone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelTag {
    pub kind: ModelKind,
    pub contracted: Vec<CurveId>,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = match self.kind {
            ModelKind::ProjectivePlane => "→ P² (deg 9)",
            ModelKind::TwistedQuadric => "→ deg-8 quadric",
            ModelKind::SplitQuadric => "→ P¹×P¹ (deg 8)",
            ModelKind::DelPezzo6 => "→ dP6",
            ModelKind::DelPezzo7 => "→ dP7",
            ModelKind::Minimal => return f.write_str("minimal"),
        };
        let names: Vec<&str> = self.contracted.iter().map(|c| c.name()).collect();
        write!(f, "{target} contracting {{{}}}", names.join(","))
    }
}

/// Full classification record of one Galois image `H ≤ Sym5`.
#[derive(Clone, Debug)]
pub struct GaloisCase {
    pub subgroup: SubgroupRecord,
    pub orbit_partition: Vec<Vec<CurveId>>,
    pub k_curves: Vec<CurveId>,
    pub rk_ns: usize,
    pub equivariant_aut: SubgroupRecord,
    pub aut_type: IsoType,
    pub rk_ns_aut: usize,
    pub is_mfs: bool,
    pub is_aut_mfs: bool,
    pub stable_contractions: Vec<Contraction>,
    pub model_tag: ModelTag,
}

/// Classifies one subgroup. Panics if the two routes to the equivariant
/// automorphism group disagree.
pub fn classify_case(h: &SubgroupRecord) -> GaloisCase {
    let brute = equivariant_aut_brute(h);
    let via_centralizer = equivariant_aut_via_centralizer(h);
    assert_eq!(
        brute,
        via_centralizer,
        "equivariant automorphisms disagree for {}",
        h.generator_string()
    );

    let aut_elems: Vec<Perm5> = brute
        .iter()
        .map(|a| action_on_quadruples(a).expect("filtered from graph automorphisms"))
        .collect();
    let equivariant_aut = groups::generate(&aut_elems);
    let aut_type = groups::identify(&equivariant_aut).expect("subgroups of Sym5 are recognized");

    let h_maps: Vec<LatticeMap> = h.elements.iter().map(lattice_map_of).collect();
    let rk_ns = fixed_rank(&h_maps);
    let joint: Vec<LatticeMap> = h_maps
        .iter()
        .copied()
        .chain(equivariant_aut.elements.iter().map(lattice_map_of))
        .collect();
    let rk_ns_aut = fixed_rank(&joint);

    let orbit_partition = groups::orbits(h);
    let k_curves: Vec<CurveId> = orbit_partition
        .iter()
        .filter(|o| o.len() == 1)
        .map(|o| o[0])
        .collect();
    let stable_contractions = stable_contractions(&orbit_partition);
    let model_tag = model_tag(&stable_contractions, &orbit_partition, rk_ns);

    GaloisCase {
        subgroup: h.clone(),
        orbit_partition,
        k_curves,
        rk_ns,
        equivariant_aut,
        aut_type,
        rk_ns_aut,
        is_mfs: rk_ns == 1,
        is_aut_mfs: rk_ns_aut == 1,
        stable_contractions,
        model_tag,
    }
}

/// Every nonempty union of orbits whose curves are pairwise disjoint, sorted
/// by size and then lexicographically.
pub fn stable_contractions(orbits: &[Vec<CurveId>]) -> Vec<Contraction> {
    let g = build_graph();
    let mut out = Vec::new();
    for mask in 1u32..1 << orbits.len() {
        let mut curves: Vec<CurveId> = orbits
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, o)| o.iter().copied())
            .collect();
        curves.sort();
        if g.is_independent(&curves) {
            let target_degree = 5 + curves.len();
            out.push(Contraction {
                curves,
                target_degree,
            });
        }
    }
    out.sort_by(|a, b| (a.curves.len(), &a.curves).cmp(&(b.curves.len(), &b.curves)));
    out
}

fn model_tag(contractions: &[Contraction], orbits: &[Vec<CurveId>], rk_ns: usize) -> ModelTag {
    let quads = maximal_disjoint_quadruples();
    let tag = |kind, c: &Contraction| ModelTag {
        kind,
        contracted: c.curves.clone(),
    };
    if let Some(c) = contractions.iter().find(|c| c.curves.len() == 4) {
        return tag(ModelKind::ProjectivePlane, c);
    }
    let triangles: Vec<&Contraction> = contractions
        .iter()
        .filter(|c| {
            c.curves.len() == 3 && !quads.iter().any(|q| c.curves.iter().all(|x| q.contains(x)))
        })
        .collect();
    let orbit_count = |c: &Contraction| orbits.iter().filter(|o| c.curves.contains(&o[0])).count();
    if let Some(c) = triangles.iter().find(|c| rk_ns - orbit_count(c) == 1) {
        return tag(ModelKind::TwistedQuadric, c);
    }
    if let Some(c) = triangles.first() {
        return tag(ModelKind::SplitQuadric, c);
    }
    if let Some(c) = contractions.iter().find(|c| c.curves.len() == 1) {
        return tag(ModelKind::DelPezzo6, c);
    }
    if let Some(c) = contractions.iter().find(|c| c.curves.len() == 2) {
        return tag(ModelKind::DelPezzo7, c);
    }
    ModelTag {
        kind: ModelKind::Minimal,
        contracted: Vec::new(),
    }
}

/// The 19 records in class order.
pub fn classify_all() -> Vec<GaloisCase> {
    all_conjugacy_classes_of_subgroups()
        .iter()
        .map(classify_case)
        .collect()
}

/// Degree and base-point multiplicities of the plane Cremona map underlying
/// a lattice automorphism: `M(L) = d·L − Σ mᵢ·Eᵢ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CremonaProfile {
    pub degree: i64,
    pub multiplicities: [i64; 4],
}

impl CremonaProfile {
    /// `Σm = 3(d−1)` and `Σm² = d²−1`.
    pub fn satisfies_noether(&self) -> bool {
        let d = self.degree;
        let sum: i64 = self.multiplicities.iter().sum();
        let sum_sq: i64 = self.multiplicities.iter().map(|m| m * m).sum();
        sum == 3 * (d - 1) && sum_sq == d * d - 1
    }
}

impl fmt::Display for CremonaProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, e] = self.multiplicities;
        write!(f, "d={} m=({a},{b},{c},{e})", self.degree)
    }
}

pub fn cremona_profile(g: &Perm5) -> CremonaProfile {
    let image = lattice_map_of(g).apply(&DivisorClass::line());
    let degree = intersect(&image, &DivisorClass::line());
    let c = image.coeffs();
    CremonaProfile {
        degree,
        multiplicities: [-c[1], -c[2], -c[3], -c[4]],
    }
}

/// One transcribed row of expected values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub class_id: usize,
    pub generators: String,
    pub aut_type: IsoType,
    pub rk_ns: Option<usize>,
    pub rk_ns_aut: usize,
    pub mfs: bool,
    pub aut_mfs: bool,
}

#[derive(Deserialize)]
struct GoldenFile<T> {
    rows: Vec<T>,
}

pub fn golden_rows() -> Vec<GoldenRow> {
    let file: GoldenFile<GoldenRow> =
        serde_json::from_str(include_str!("../data/theorem1_golden.json"))
            .expect("golden table parses");
    file.rows
}

/// Orbit partitions transcribed from the colored diagrams, in class order.
pub fn golden_orbits() -> Vec<Vec<Vec<CurveId>>> {
    let file: GoldenFile<Vec<Vec<CurveId>>> =
        serde_json::from_str(include_str!("../data/figure2_orbits.json"))
            .expect("orbit table parses");
    file.rows
}

/// A disagreement between a computed row and the transcription.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub class_id: usize,
    pub field: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "class {}: {} expected {} got {}",
            self.class_id, self.field, self.expected, self.actual
        )
    }
}

/// Compares one case against its golden row.
pub fn compare_with_golden(case: &GaloisCase, golden: &GoldenRow) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut check = |field: &str, expected: String, actual: String| {
        if expected != actual {
            out.push(Mismatch {
                class_id: golden.class_id,
                field: field.into(),
                expected,
                actual,
            });
        }
    };
    let gens = groups::parse_generators(&golden.generators).expect("golden generators parse");
    let expected = groups::generate(&gens);
    if expected.element_set() != case.subgroup.element_set() {
        check(
            "subgroup",
            expected.generator_string(),
            case.subgroup.generator_string(),
        );
    }
    check(
        "aut_type",
        golden.aut_type.to_string(),
        case.aut_type.to_string(),
    );
    if let Some(rk) = golden.rk_ns {
        check("rk_ns", rk.to_string(), case.rk_ns.to_string());
    }
    check(
        "rk_ns_aut",
        golden.rk_ns_aut.to_string(),
        case.rk_ns_aut.to_string(),
    );
    check("mfs", golden.mfs.to_string(), case.is_mfs.to_string());
    check(
        "aut_mfs",
        golden.aut_mfs.to_string(),
        case.is_aut_mfs.to_string(),
    );
    out
}

/// The 19 classified representatives and every disagreement with the
/// transcribed table (empty when everything matches).
pub fn theorem1_table() -> (Vec<GaloisCase>, Vec<Mismatch>) {
    let cases = classify_all();
    let golden = golden_rows();
    assert_eq!(
        golden.len(),
        cases.len(),
        "golden table must have one row per class"
    );
    let diff = cases
        .iter()
        .zip(&golden)
        .flat_map(|(c, g)| compare_with_golden(c, g))
        .collect();
    (cases, diff)
}
