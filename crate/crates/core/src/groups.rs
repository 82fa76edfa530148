//! Permutation groups on `{1, .., 5}`: elements, subgroup closure, the full
//! subgroup lattice of `Sym5` up to conjugacy, centralizers, and recognition of
//! the isomorphism types that occur among its subgroups.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::CurveId;
use crate::petersen::sym5_to_graph_aut;

/// Order of `Sym5`.
pub const SYM5_ORDER: usize = 120;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("images {0:?} do not form a bijection of 1..5")]
    NotBijective([u8; 5]),
    #[error("no known isomorphism type with order {order} and element-order census {census:?}")]
    Unrecognized {
        order: usize,
        census: Vec<(u32, usize)>,
    },
    #[error("unknown case name {0:?}")]
    UnknownCase(String),
}

/// A permutation of `{1, .., 5}`, stored 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm5([u8; 5]);

impl Perm5 {
    pub const fn identity() -> Self {
        Perm5([0, 1, 2, 3, 4])
    }

    /// From 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: [u8; 5]) -> Result<Self, GroupError> {
        let mut seen = [false; 5];
        let mut zero_based = [0u8; 5];
        for (slot, &img) in zero_based.iter_mut().zip(&images) {
            if !(1..=5).contains(&img) || std::mem::replace(&mut seen[img as usize - 1], true) {
                return Err(GroupError::NotBijective(images));
            }
            *slot = img - 1;
        }
        Ok(Perm5(zero_based))
    }

    /// A single cycle on 1-based points.
    pub fn cycle(points: &[u8]) -> Result<Self, GroupError> {
        let mut images = [1, 2, 3, 4, 5];
        for (k, &p) in points.iter().enumerate() {
            if !(1..=5).contains(&p) {
                return Err(GroupError::NotBijective(images));
            }
            images[p as usize - 1] = points[(k + 1) % points.len()];
        }
        Perm5::from_images(images)
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: u8) -> u8 {
        self.0[point as usize - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> [u8; 5] {
        self.0.map(|x| x + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm5) -> Perm5 {
        Perm5(other.0.map(|x| self.0[x as usize]))
    }

    pub fn inverse(&self) -> Perm5 {
        let mut inv = [0u8; 5];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm5(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm5::identity()
    }

    pub fn order(&self) -> u32 {
        let mut p = *self;
        let mut n = 1;
        while !p.is_identity() {
            p = p.compose(self);
            n += 1;
        }
        n
    }

    pub fn conjugate_by(&self, g: &Perm5) -> Perm5 {
        g.compose(self).compose(&g.inverse())
    }

    pub fn commutes_with(&self, other: &Perm5) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Non-trivial cycles, 1-based, each starting at its smallest point and
    /// listed by increasing smallest point.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 5];
        let mut out = Vec::new();
        for start in 0..5u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start as usize] = true;
            let mut x = self.0[start as usize];
            while x != start {
                seen[x as usize] = true;
                cyc.push(x + 1);
                x = self.0[x as usize];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Lexicographic rank of the image tuple, in `0..120`.
    pub fn index(&self) -> usize {
        let mut rank = 0;
        for i in 0..5 {
            let smaller_later = (i + 1..5).filter(|&j| self.0[j] < self.0[i]).count();
            rank = rank * (5 - i) + smaller_later;
        }
        rank
    }

    pub fn from_index(index: usize) -> Perm5 {
        all_perms()[index]
    }
}

impl fmt::Display for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(u8::to_string).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `"(1 2 3)(4 5)"` or `"()"`. Points inside a
/// cycle are whitespace separated; a run of digits without spaces (`"(123)"`)
/// is read one digit per point. Cycles compose right to left.
impl FromStr for Perm5 {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(err("empty input"));
        }
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(err("expected '('"));
            };
            let close = body
                .find(')')
                .ok_or_else(|| err("unbalanced parenthesis"))?;
            let inner = &body[..close];
            let mut points = Vec::new();
            for tok in inner.split_whitespace() {
                for ch in tok.chars() {
                    let p = ch
                        .to_digit(10)
                        .filter(|d| (1..=5).contains(d))
                        .ok_or_else(|| err("points must be digits 1..5"))?;
                    points.push(p as u8);
                }
            }
            let distinct: HashSet<_> = points.iter().collect();
            if distinct.len() != points.len() {
                return Err(err("repeated point inside a cycle"));
            }
            cycles.push(points);
            rest = body[close + 1..].trim_start();
        }
        let mut result = Perm5::identity();
        for c in cycles.iter().rev() {
            if c.len() > 1 {
                result = Perm5::cycle(c)?.compose(&result);
            }
        }
        Ok(result)
    }
}

impl Serialize for Perm5 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm5 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a generator list: permutations separated by `,` or `;`.
pub fn parse_generators(s: &str) -> Result<Vec<Perm5>, GroupError> {
    s.split([',', ';'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// All 120 permutations in index order.
pub fn all_perms() -> &'static [Perm5; SYM5_ORDER] {
    static PERMS: OnceLock<[Perm5; SYM5_ORDER]> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = [Perm5::identity(); SYM5_ORDER];
        let mut n = 0;
        let mut cur = [0u8; 5];
        fn rec(
            pos: usize,
            used: &mut [bool; 5],
            cur: &mut [u8; 5],
            out: &mut [Perm5; SYM5_ORDER],
            n: &mut usize,
        ) {
            if pos == 5 {
                out[*n] = Perm5(*cur);
                *n += 1;
                return;
            }
            for v in 0..5u8 {
                if !used[v as usize] {
                    used[v as usize] = true;
                    cur[pos] = v;
                    rec(pos + 1, used, cur, out, n);
                    used[v as usize] = false;
                }
            }
        }
        rec(0, &mut [false; 5], &mut cur, &mut out, &mut n);
        out
    })
}

fn mult_table() -> &'static [[u8; SYM5_ORDER]; SYM5_ORDER] {
    static TABLE: OnceLock<[[u8; SYM5_ORDER]; SYM5_ORDER]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let perms = all_perms();
        let mut t = [[0u8; SYM5_ORDER]; SYM5_ORDER];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                t[i][j] = a.compose(b).index() as u8;
            }
        }
        t
    })
}

/// A subset of `Sym5` as a bitset over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct ElementSet(u128);

impl ElementSet {
    pub fn singleton(p: &Perm5) -> Self {
        ElementSet(1u128 << p.index())
    }

    pub fn contains(&self, p: &Perm5) -> bool {
        self.0 >> p.index() & 1 == 1
    }

    pub fn insert(&mut self, p: &Perm5) {
        self.0 |= 1u128 << p.index();
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Perm5> + '_ {
        let bits = self.0;
        (0..SYM5_ORDER)
            .filter(move |i| bits >> i & 1 == 1)
            .map(Perm5::from_index)
    }

    pub fn conjugate_by(&self, g: &Perm5) -> ElementSet {
        let mut out = ElementSet::default();
        for p in self.iter() {
            out.insert(&p.conjugate_by(g));
        }
        out
    }

    /// Closure under products. For a finite set this is the generated subgroup
    /// (the identity is always included).
    pub fn closure(&self) -> ElementSet {
        let table = mult_table();
        let id = Perm5::identity().index();
        let mut set = self.0 | 1u128 << id;
        let gens: Vec<usize> = (0..SYM5_ORDER).filter(|i| self.0 >> i & 1 == 1).collect();
        let mut frontier: Vec<usize> = (0..SYM5_ORDER).filter(|i| set >> i & 1 == 1).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = table[x][g] as usize;
                if set >> y & 1 == 0 {
                    set |= 1u128 << y;
                    frontier.push(y);
                }
            }
        }
        ElementSet(set)
    }

    fn from_perms<'a>(perms: impl IntoIterator<Item = &'a Perm5>) -> ElementSet {
        let mut s = ElementSet::default();
        for p in perms {
            s.insert(p);
        }
        s
    }
}

/// Isomorphism types of the groups occurring as subgroups of `Sym5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum IsoType {
    Trivial,
    Z2,
    Z3,
    Z4,
    Z5,
    Z6,
    Z2xZ2,
    S3,
    D4,
    D5,
    S3xZ2,
    A4,
    S4,
    GA15,
    A5,
    S5,
}

impl IsoType {
    pub const ALL: [IsoType; 16] = [
        IsoType::Trivial,
        IsoType::Z2,
        IsoType::Z3,
        IsoType::Z4,
        IsoType::Z5,
        IsoType::Z6,
        IsoType::Z2xZ2,
        IsoType::S3,
        IsoType::D4,
        IsoType::D5,
        IsoType::S3xZ2,
        IsoType::A4,
        IsoType::S4,
        IsoType::GA15,
        IsoType::A5,
        IsoType::S5,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IsoType::Trivial => "trivial",
            IsoType::Z2 => "Z2",
            IsoType::Z3 => "Z3",
            IsoType::Z4 => "Z4",
            IsoType::Z5 => "Z5",
            IsoType::Z6 => "Z6",
            IsoType::Z2xZ2 => "Z2xZ2",
            IsoType::S3 => "S3",
            IsoType::D4 => "D4",
            IsoType::D5 => "D5",
            IsoType::S3xZ2 => "S3xZ2",
            IsoType::A4 => "A4",
            IsoType::S4 => "S4",
            IsoType::GA15 => "GA(1,5)",
            IsoType::A5 => "A5",
            IsoType::S5 => "S5",
        }
    }

    pub fn order(self) -> usize {
        self.signature().0
    }

    pub fn is_abelian(self) -> bool {
        self.signature().1
    }

    /// `(order, abelian, census)` where the census lists `(element order,
    /// number of elements of that order)` for every order that occurs.
    pub fn signature(self) -> (usize, bool, &'static [(u32, usize)]) {
        match self {
            IsoType::Trivial => (1, true, &[(1, 1)]),
            IsoType::Z2 => (2, true, &[(1, 1), (2, 1)]),
            IsoType::Z3 => (3, true, &[(1, 1), (3, 2)]),
            IsoType::Z4 => (4, true, &[(1, 1), (2, 1), (4, 2)]),
            IsoType::Z2xZ2 => (4, true, &[(1, 1), (2, 3)]),
            IsoType::Z5 => (5, true, &[(1, 1), (5, 4)]),
            IsoType::Z6 => (6, true, &[(1, 1), (2, 1), (3, 2), (6, 2)]),
            IsoType::S3 => (6, false, &[(1, 1), (2, 3), (3, 2)]),
            IsoType::D4 => (8, false, &[(1, 1), (2, 5), (4, 2)]),
            IsoType::D5 => (10, false, &[(1, 1), (2, 5), (5, 4)]),
            IsoType::S3xZ2 => (12, false, &[(1, 1), (2, 7), (3, 2), (6, 2)]),
            IsoType::A4 => (12, false, &[(1, 1), (2, 3), (3, 8)]),
            IsoType::GA15 => (20, false, &[(1, 1), (2, 5), (4, 10), (5, 4)]),
            IsoType::S4 => (24, false, &[(1, 1), (2, 9), (3, 8), (4, 6)]),
            IsoType::A5 => (60, false, &[(1, 1), (2, 15), (3, 20), (5, 24)]),
            IsoType::S5 => (
                120,
                false,
                &[(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)],
            ),
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IsoType {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IsoType::ALL
            .into_iter()
            .find(|t| t.label() == s)
            .ok_or_else(|| GroupError::Parse {
                input: s.to_string(),
                reason: "unknown isomorphism type".into(),
            })
    }
}

impl Serialize for IsoType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for IsoType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subgroup of `Sym5` together with its conjugacy-class identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupRecord {
    set: ElementSet,
    pub elements: Vec<Perm5>,
    pub generators: Vec<Perm5>,
    /// 1..=19, in the order of [`REPRESENTATIVES`].
    pub class_id: usize,
    pub class_name: &'static str,
}

impl SubgroupRecord {
    fn from_set(set: ElementSet, generators: Vec<Perm5>) -> Self {
        let class_id = conjugacy_class_id(&set);
        SubgroupRecord {
            set,
            elements: set.iter().collect(),
            generators,
            class_id,
            class_name: REPRESENTATIVES[class_id - 1].name,
        }
    }

    pub fn element_set(&self) -> ElementSet {
        self.set
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm5) -> bool {
        self.set.contains(p)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| a.commutes_with(b)))
    }

    /// Rendered generators, e.g. `<(1 2 3), (1 2)>`.
    pub fn generator_string(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(Perm5::to_string).collect();
        format!("<{}>", gens.join(", "))
    }
}

/// A pinned conjugacy-class representative.
pub struct Representative {
    pub name: &'static str,
    /// Generators in cycle notation.
    pub generators: &'static [&'static str],
}

/// One representative per conjugacy class of subgroups of `Sym5`, in the order
/// used for every table (class id = position + 1).
pub const REPRESENTATIVES: [Representative; 19] = [
    Representative {
        name: "trivial",
        generators: &[],
    },
    Representative {
        name: "Z/2 (transposition)",
        generators: &["(3 4)"],
    },
    Representative {
        name: "Z/2 (double transposition)",
        generators: &["(1 2)(3 4)"],
    },
    Representative {
        name: "Z/2xZ/2 (two transpositions)",
        generators: &["(1 2)", "(3 4)"],
    },
    Representative {
        name: "Z/2xZ/2 (double transpositions)",
        generators: &["(1 2)(3 4)", "(1 3)(2 4)"],
    },
    Representative {
        name: "Z/3",
        generators: &["(1 2 3)"],
    },
    Representative {
        name: "Z/4",
        generators: &["(1 2 3 4)"],
    },
    Representative {
        name: "A4",
        generators: &["(1 2)(3 4)", "(1 2 3)"],
    },
    Representative {
        name: "D4",
        generators: &["(1 2 3 4)", "(1 3)"],
    },
    Representative {
        name: "S4",
        generators: &["(1 2 3 4)", "(1 2)"],
    },
    Representative {
        name: "S3",
        generators: &["(1 2 3)", "(1 2)"],
    },
    Representative {
        name: "Z/6",
        generators: &["(1 2 3)(4 5)"],
    },
    Representative {
        name: "S3xZ/2",
        generators: &["(1 2 3)", "(1 2)", "(4 5)"],
    },
    Representative {
        name: "S3 (twisted)",
        generators: &["(1 2 3)", "(1 2)(4 5)"],
    },
    Representative {
        name: "Z/5",
        generators: &["(1 2 3 4 5)"],
    },
    Representative {
        name: "D5",
        generators: &["(1 2 3 4 5)", "(2 5)(3 4)"],
    },
    Representative {
        name: "GA(1,5)",
        generators: &["(1 2 3 4 5)", "(2 3 5 4)"],
    },
    Representative {
        name: "A5",
        generators: &["(1 2 3 4 5)", "(1 2 3)"],
    },
    Representative {
        name: "S5",
        generators: &["(1 2 3 4 5)", "(1 2)"],
    },
];

impl Representative {
    pub fn parsed_generators(&self) -> Vec<Perm5> {
        self.generators
            .iter()
            .map(|g| g.parse().expect("pinned generator parses"))
            .collect()
    }
}

fn representative_sets() -> &'static [ElementSet; 19] {
    static SETS: OnceLock<[ElementSet; 19]> = OnceLock::new();
    SETS.get_or_init(|| {
        REPRESENTATIVES.map(|r| ElementSet::from_perms(&r.parsed_generators()).closure())
    })
}

/// Class id (1..=19) of a subgroup given as an element set.
///
/// Panics if `set` is not one of the subgroups of `Sym5`, which cannot happen
/// for sets produced by [`ElementSet::closure`].
pub fn conjugacy_class_id(set: &ElementSet) -> usize {
    let reps = representative_sets();
    for (i, rep) in reps.iter().enumerate() {
        if rep.len() != set.len() {
            continue;
        }
        if all_perms().iter().any(|g| rep.conjugate_by(g) == *set) {
            return i + 1;
        }
    }
    panic!(
        "element set of size {} is not conjugate to a pinned representative",
        set.len()
    )
}

/// The subgroup generated by `gens`.
pub fn generate(gens: &[Perm5]) -> SubgroupRecord {
    let set = ElementSet::from_perms(gens).closure();
    SubgroupRecord::from_set(set, gens.to_vec())
}

/// Every subgroup of `Sym5`, obtained by repeatedly adjoining one element to
/// known subgroups, starting from the trivial group, until nothing new appears.
pub fn all_subgroups() -> &'static [ElementSet] {
    static ALL: OnceLock<Vec<ElementSet>> = OnceLock::new();
    ALL.get_or_init(|| {
        let trivial = ElementSet::singleton(&Perm5::identity());
        let mut found: HashSet<ElementSet> = HashSet::from([trivial]);
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for g in all_perms() {
                if h.contains(g) {
                    continue;
                }
                let mut ext = h;
                ext.insert(g);
                let ext = ext.closure();
                if found.insert(ext) {
                    frontier.push(ext);
                }
            }
        }
        let mut v: Vec<ElementSet> = found.into_iter().collect();
        v.sort_by_key(|s| (s.len(), *s));
        v
    })
}

/// Every subgroup as a record; generators are the full element list minus the
/// identity, which keeps them trivially correct.
pub fn all_subgroup_records() -> Vec<SubgroupRecord> {
    all_subgroups()
        .iter()
        .map(|s| {
            let gens = s.iter().filter(|p| !p.is_identity()).collect();
            SubgroupRecord::from_set(*s, gens)
        })
        .collect()
}

/// The 19 pinned representatives, one per conjugacy class of subgroups.
///
/// Classes are computed from [`all_subgroups`]; the pinned generator sets are
/// then matched against them, so a missing or duplicated class panics.
pub fn all_conjugacy_classes_of_subgroups() -> Vec<SubgroupRecord> {
    let mut class_of: BTreeMap<usize, Vec<ElementSet>> = BTreeMap::new();
    for s in all_subgroups() {
        class_of.entry(conjugacy_class_id(s)).or_default().push(*s);
    }
    assert_eq!(
        class_of.len(),
        REPRESENTATIVES.len(),
        "every class must be hit"
    );
    REPRESENTATIVES
        .iter()
        .map(|r| generate(&r.parsed_generators()))
        .collect()
}

/// `{g in Sym5 : gh = hg for all h in H}`.
pub fn centralizer(h: &SubgroupRecord) -> SubgroupRecord {
    let elems: Vec<Perm5> = all_perms()
        .iter()
        .copied()
        .filter(|g| {
            h.generators
                .iter()
                .chain(&h.elements)
                .all(|x| g.commutes_with(x))
        })
        .collect();
    let set = ElementSet::from_perms(&elems);
    let gens = elems.into_iter().filter(|p| !p.is_identity()).collect();
    SubgroupRecord::from_set(set, gens)
}

/// The census `(element order, count)` sorted by element order.
pub fn order_census(elements: &[Perm5]) -> Vec<(u32, usize)> {
    let mut m: BTreeMap<u32, usize> = BTreeMap::new();
    for e in elements {
        *m.entry(e.order()).or_default() += 1;
    }
    m.into_iter().collect()
}

/// Recognizes the isomorphism type by order, commutativity and the census of
/// element orders. These signatures are pairwise distinct across [`IsoType`].
pub fn identify(h: &SubgroupRecord) -> Result<IsoType, GroupError> {
    identify_elements(&h.elements)
}

pub fn identify_elements(elements: &[Perm5]) -> Result<IsoType, GroupError> {
    let order = elements.len();
    let abelian = elements
        .iter()
        .all(|a| elements.iter().all(|b| a.commutes_with(b)));
    let census = order_census(elements);
    IsoType::ALL
        .into_iter()
        .find(|t| {
            let (o, ab, c) = t.signature();
            o == order && ab == abelian && c == census.as_slice()
        })
        .ok_or(GroupError::Unrecognized { order, census })
}

/// Orbit partition of the ten curves under the action of `h` on the Petersen
/// diagram. Each orbit is sorted, orbits are ordered by their first curve.
pub fn orbits(h: &SubgroupRecord) -> Vec<Vec<CurveId>> {
    let auts: Vec<_> = h.elements.iter().map(sym5_to_graph_aut).collect();
    let mut assigned = [false; 10];
    let mut out = Vec::new();
    for c in CurveId::ALL {
        if assigned[c.index()] {
            continue;
        }
        let mut orbit: Vec<CurveId> = auts.iter().map(|a| a.apply(c)).collect();
        orbit.sort();
        orbit.dedup();
        for x in &orbit {
            assigned[x.index()] = true;
        }
        out.push(orbit);
    }
    out
}

/// Orbits of `h` on the points `1..=5`.
pub fn point_orbits(h: &SubgroupRecord) -> Vec<Vec<u8>> {
    let mut assigned = [false; 5];
    let mut out = Vec::new();
    for p in 1..=5u8 {
        if assigned[p as usize - 1] {
            continue;
        }
        let mut orbit: Vec<u8> = h.elements.iter().map(|g| g.apply(p)).collect();
        orbit.sort();
        orbit.dedup();
        for &x in &orbit {
            assigned[x as usize - 1] = true;
        }
        out.push(orbit);
    }
    out
}

/// Resolves a named case shortcut (`"d5"`, `"ga15"`, `"z6"`, ...) or a numeric
/// class id to its pinned representative.
pub fn named_case(name: &str) -> Result<SubgroupRecord, GroupError> {
    let key = name.trim().to_ascii_lowercase();
    let id = match key.as_str() {
        "trivial" | "id" => 1,
        "z2" | "z2t" | "transposition" => 2,
        "z2d" | "double-transposition" => 3,
        "z2xz2" | "v4-intransitive" => 4,
        "v4" | "klein" => 5,
        "z3" => 6,
        "z4" => 7,
        "a4" => 8,
        "d4" => 9,
        "s4" => 10,
        "s3" => 11,
        "z6" => 12,
        "s3xz2" => 13,
        "s3-twisted" | "s3t" => 14,
        "z5" => 15,
        "d5" => 16,
        "ga15" | "ga(1,5)" => 17,
        "a5" => 18,
        "s5" => 19,
        other => match other.parse::<usize>() {
            Ok(n) if (1..=19).contains(&n) => n,
            _ => return Err(GroupError::UnknownCase(name.to_string())),
        },
    };
    Ok(generate(&REPRESENTATIVES[id - 1].parsed_generators()))
}
