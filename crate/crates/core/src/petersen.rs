//! The incidence diagram of the ten (-1)-curves, its `Sym5` symmetry via
//! Kneser labels, and the five maximal sets of pairwise disjoint curves.

use std::fmt;

use thiserror::Error;

use crate::groups::Perm5;
use crate::lattice::{curve_class, intersect, CurveId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PetersenError {
    #[error("curve permutation is not a bijection")]
    NotBijective,
    #[error("curve permutation does not preserve incidence")]
    NotAutomorphism,
}

/// A 2-subset `{a, b}` of `{1, .., 5}` with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct KneserLabel(u8, u8);

impl KneserLabel {
    pub fn new(a: u8, b: u8) -> Self {
        assert!(a != b && (1..=5).contains(&a) && (1..=5).contains(&b));
        KneserLabel(a.min(b), a.max(b))
    }

    pub fn points(&self) -> [u8; 2] {
        [self.0, self.1]
    }

    pub fn contains(&self, p: u8) -> bool {
        self.0 == p || self.1 == p
    }

    pub fn is_disjoint(&self, other: &KneserLabel) -> bool {
        !other.contains(self.0) && !other.contains(self.1)
    }

    pub fn of(c: CurveId) -> Self {
        use CurveId::*;
        match c {
            E1 => KneserLabel(1, 5),
            E2 => KneserLabel(2, 5),
            E3 => KneserLabel(3, 5),
            E4 => KneserLabel(4, 5),
            D12 => KneserLabel(3, 4),
            D13 => KneserLabel(2, 4),
            D14 => KneserLabel(2, 3),
            D23 => KneserLabel(1, 4),
            D24 => KneserLabel(1, 3),
            D34 => KneserLabel(1, 2),
        }
    }

    pub fn curve(&self) -> CurveId {
        CurveId::ALL
            .into_iter()
            .find(|&c| KneserLabel::of(c) == *self)
            .expect("labels are a bijection")
    }

    pub fn permute(&self, g: &Perm5) -> KneserLabel {
        KneserLabel::new(g.apply(self.0), g.apply(self.1))
    }
}

impl fmt::Display for KneserLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// A permutation of the ten curves; `images[c.index()]` is the image of `c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm10([CurveId; 10]);

impl Perm10 {
    pub fn identity() -> Self {
        Perm10(CurveId::ALL)
    }

    pub fn new(images: [CurveId; 10]) -> Result<Self, PetersenError> {
        let mut seen = [false; 10];
        for c in images {
            if std::mem::replace(&mut seen[c.index()], true) {
                return Err(PetersenError::NotBijective);
            }
        }
        Ok(Perm10(images))
    }

    pub fn images(&self) -> &[CurveId; 10] {
        &self.0
    }

    pub fn apply(&self, c: CurveId) -> CurveId {
        self.0[c.index()]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm10) -> Perm10 {
        Perm10(other.0.map(|c| self.apply(c)))
    }

    pub fn inverse(&self) -> Perm10 {
        let mut inv = CurveId::ALL;
        for c in CurveId::ALL {
            inv[self.apply(c).index()] = c;
        }
        Perm10(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0 == CurveId::ALL
    }

    pub fn commutes_with(&self, other: &Perm10) -> bool {
        self.compose(other) == other.compose(self)
    }
}

/// The Petersen incidence graph of the ten curves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PetersenGraph {
    adj: [[bool; 10]; 10],
}

impl PetersenGraph {
    pub fn adjacent(&self, a: CurveId, b: CurveId) -> bool {
        self.adj[a.index()][b.index()]
    }

    pub fn neighbors(&self, c: CurveId) -> Vec<CurveId> {
        CurveId::ALL
            .into_iter()
            .filter(|&d| self.adjacent(c, d))
            .collect()
    }

    pub fn degree(&self, c: CurveId) -> usize {
        self.neighbors(c).len()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(CurveId, CurveId)> {
        let mut out = Vec::new();
        for a in CurveId::ALL {
            for b in CurveId::ALL {
                if a < b && self.adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in CurveId::ALL {
            let mut dist = [usize::MAX; 10];
            let mut parent = [usize::MAX; 10];
            dist[root.index()] = 0;
            let mut queue = std::collections::VecDeque::from([root.index()]);
            while let Some(u) = queue.pop_front() {
                for v in 0..10 {
                    if !self.adj[u][v] {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_automorphism(&self, p: &Perm10) -> bool {
        CurveId::ALL.into_iter().all(|a| {
            CurveId::ALL
                .into_iter()
                .all(|b| self.adjacent(a, b) == self.adjacent(p.apply(a), p.apply(b)))
        })
    }

    /// Whether the curves are pairwise disjoint.
    pub fn is_independent(&self, set: &[CurveId]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.adjacent(a, b)))
    }
}

/// Builds the incidence graph from the intersection form.
pub fn build_graph() -> PetersenGraph {
    let mut adj = [[false; 10]; 10];
    for a in CurveId::ALL {
        for b in CurveId::ALL {
            adj[a.index()][b.index()] = intersect(&curve_class(a), &curve_class(b)) == 1;
        }
    }
    PetersenGraph { adj }
}

/// The curve permutation induced by `g` acting on Kneser labels.
pub fn sym5_to_graph_aut(g: &Perm5) -> Perm10 {
    Perm10(CurveId::ALL.map(|c| KneserLabel::of(c).permute(g).curve()))
}

/// Every adjacency-preserving permutation of the vertices, found by
/// backtracking in `CurveId` order.
pub fn all_graph_automorphisms() -> Vec<Perm10> {
    fn extend(
        g: &PetersenGraph,
        pos: usize,
        img: &mut [Option<CurveId>; 10],
        used: &mut [bool; 10],
        out: &mut Vec<Perm10>,
    ) {
        if pos == 10 {
            out.push(Perm10(img.map(|c| c.expect("complete assignment"))));
            return;
        }
        let a = CurveId::from_index(pos);
        for cand in CurveId::ALL {
            if used[cand.index()] || g.degree(cand) != g.degree(a) {
                continue;
            }
            let consistent = (0..pos).all(|q| {
                let b = CurveId::from_index(q);
                let ib = img[q].expect("earlier vertices assigned");
                g.adjacent(a, b) == g.adjacent(cand, ib)
            });
            if consistent {
                img[pos] = Some(cand);
                used[cand.index()] = true;
                extend(g, pos + 1, img, used, out);
                used[cand.index()] = false;
                img[pos] = None;
            }
        }
    }
    let g = build_graph();
    let mut out = Vec::new();
    extend(&g, 0, &mut [None; 10], &mut [false; 10], &mut out);
    out
}

/// One of the five maximal sets of four pairwise disjoint curves.
pub type Quadruple = [CurveId; 4];

/// All 4-sets of pairwise disjoint curves, each sorted, listed as `M1..M5`
/// where `Mi` is the set whose labels all contain the point `i`.
pub fn maximal_disjoint_quadruples() -> [Quadruple; 5] {
    let mut found = independent_sets_of_size(4);
    found.sort();
    let mut out = [[CurveId::E1; 4]; 5];
    let mut filled = [false; 5];
    for q in found {
        let common = (1..=5u8)
            .find(|&p| q.iter().all(|&c| KneserLabel::of(c).contains(p)))
            .expect("every maximal disjoint quadruple shares a label point");
        let slot = common as usize - 1;
        assert!(
            !filled[slot],
            "two quadruples share the common point {common}"
        );
        out[slot] = q.try_into().expect("size 4");
        filled[slot] = true;
    }
    assert!(
        filled.iter().all(|&f| f),
        "expected exactly five quadruples"
    );
    out
}

/// Every sorted set of `k` pairwise disjoint curves.
pub fn independent_sets_of_size(k: usize) -> Vec<Vec<CurveId>> {
    let g = build_graph();
    let mut out = Vec::new();
    for mask in 0u32..1 << 10 {
        if mask.count_ones() as usize != k {
            continue;
        }
        let set: Vec<CurveId> = CurveId::ALL
            .into_iter()
            .filter(|c| mask >> c.index() & 1 == 1)
            .collect();
        if g.is_independent(&set) {
            out.push(set);
        }
    }
    out.sort();
    out
}

/// The permutation of `{M1..M5}` (as points `1..5`) induced by an automorphism.
pub fn action_on_quadruples(p: &Perm10) -> Result<Perm5, PetersenError> {
    if !build_graph().is_automorphism(p) {
        return Err(PetersenError::NotAutomorphism);
    }
    let quads = maximal_disjoint_quadruples();
    let mut images = [0u8; 5];
    for (i, q) in quads.iter().enumerate() {
        let mut moved: Vec<CurveId> = q.iter().map(|&c| p.apply(c)).collect();
        moved.sort();
        let j = quads
            .iter()
            .position(|r| r.as_slice() == moved.as_slice())
            .expect("automorphisms permute the maximal disjoint quadruples");
        images[i] = j as u8 + 1;
    }
    Ok(Perm5::from_images(images).expect("quadruple action is a bijection"))
}
