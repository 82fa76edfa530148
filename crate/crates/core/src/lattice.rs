//! The Picard lattice of a quintic del Pezzo surface over an algebraically
//! closed field: `Z^{1,4}` with basis `(L, E1, E2, E3, E4)`, where `L` is the
//! pull-back of a line and `Ei` are the exceptional curves over the four
//! blown-up points.
//!
//! All matrices act on column coefficient vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Rank of the lattice.
pub const RANK: usize = 5;

/// Diagonal of the intersection form in the basis `(L, E1, .., E4)`.
const FORM: [i64; RANK] = [1, -1, -1, -1, -1];

/// Entries of every matrix handled here stay far below this; Bareiss minors
/// are bounded by Hadamard's inequality for 5 columns.
const ENTRY_BOUND: i64 = 1 << 40;

/// A divisor class `a*L + b1*E1 + b2*E2 + b3*E3 + b4*E4`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct DivisorClass(pub [i64; RANK]);

impl DivisorClass {
    pub const fn new(a: i64, b1: i64, b2: i64, b3: i64, b4: i64) -> Self {
        DivisorClass([a, b1, b2, b3, b4])
    }

    pub const fn line() -> Self {
        DivisorClass([1, 0, 0, 0, 0])
    }

    /// Exceptional class `Ei`, `i` in `1..=4`.
    pub fn exceptional(i: usize) -> Self {
        assert!((1..=4).contains(&i), "exceptional index {i} out of range");
        let mut c = [0; RANK];
        c[i] = 1;
        DivisorClass(c)
    }

    pub fn coeffs(&self) -> &[i64; RANK] {
        &self.0
    }

    /// Coefficient of `L`.
    pub fn degree(&self) -> i64 {
        self.0[0]
    }

    pub fn self_intersection(&self) -> i64 {
        intersect(self, self)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.0;
        for (x, y) in c.iter_mut().zip(rhs.0) {
            *x += y;
        }
        DivisorClass(c)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        DivisorClass(self.0.map(|x| -x))
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass(rhs.0.map(|x| self * x))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.0;
        write!(f, "({}; {}, {}, {}, {})", c[0], c[1], c[2], c[3], c[4])
    }
}

/// The intersection pairing `a*a' - sum bi*bi'`.
pub fn intersect(u: &DivisorClass, v: &DivisorClass) -> i64 {
    FORM.iter()
        .zip(u.0.iter().zip(v.0.iter()))
        .map(|(s, (x, y))| s * x * y)
        .sum()
}

/// `K = -3L + E1 + E2 + E3 + E4`.
pub fn canonical_class() -> DivisorClass {
    DivisorClass::new(-3, 1, 1, 1, 1)
}

/// One of the ten (-1)-curves. The declaration order is the global ordering
/// used for every tie-break and every golden table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum CurveId {
    E1,
    E2,
    E3,
    E4,
    D12,
    D13,
    D14,
    D23,
    D24,
    D34,
}

impl CurveId {
    pub const ALL: [CurveId; 10] = [
        CurveId::E1,
        CurveId::E2,
        CurveId::E3,
        CurveId::E4,
        CurveId::D12,
        CurveId::D13,
        CurveId::D14,
        CurveId::D23,
        CurveId::D24,
        CurveId::D34,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> CurveId {
        CurveId::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            CurveId::E1 => "E1",
            CurveId::E2 => "E2",
            CurveId::E3 => "E3",
            CurveId::E4 => "E4",
            CurveId::D12 => "D12",
            CurveId::D13 => "D13",
            CurveId::D14 => "D14",
            CurveId::D23 => "D23",
            CurveId::D24 => "D24",
            CurveId::D34 => "D34",
        }
    }

    /// Strict transform of the line through two of the blown-up points.
    pub fn line_through(i: usize, j: usize) -> Option<CurveId> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Some(match (i, j) {
            (1, 2) => CurveId::D12,
            (1, 3) => CurveId::D13,
            (1, 4) => CurveId::D14,
            (2, 3) => CurveId::D23,
            (2, 4) => CurveId::D24,
            (3, 4) => CurveId::D34,
            _ => return None,
        })
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurveId {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CurveId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| LatticeError::UnknownCurve(s.to_string()))
    }
}

/// Class of a (-1)-curve: `Ei` or `L - Ei - Ej`.
pub fn curve_class(c: CurveId) -> DivisorClass {
    let line =
        |i, j| DivisorClass::line() - DivisorClass::exceptional(i) - DivisorClass::exceptional(j);
    match c {
        CurveId::E1 => DivisorClass::exceptional(1),
        CurveId::E2 => DivisorClass::exceptional(2),
        CurveId::E3 => DivisorClass::exceptional(3),
        CurveId::E4 => DivisorClass::exceptional(4),
        CurveId::D12 => line(1, 2),
        CurveId::D13 => line(1, 3),
        CurveId::D14 => line(1, 4),
        CurveId::D23 => line(2, 3),
        CurveId::D24 => line(2, 4),
        CurveId::D34 => line(3, 4),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("curve permutation is not a bijection")]
    NotBijective,
    #[error("curve permutation has no linear extension: image of {0} is inconsistent")]
    NoLinearExtension(CurveId),
    #[error("linear extension does not preserve the intersection form")]
    NotIsometry,
    #[error("unknown curve name {0:?}")]
    UnknownCurve(String),
}

/// An integral linear endomorphism of the Picard lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LatticeMap {
    /// Row-major; column `j` is the image of basis vector `j`.
    m: [[i64; RANK]; RANK],
}

impl LatticeMap {
    pub fn identity() -> Self {
        let mut m = [[0; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        LatticeMap { m }
    }

    pub fn from_rows(m: [[i64; RANK]; RANK]) -> Self {
        LatticeMap { m }
    }

    /// Build from the images of the basis `(L, E1, .., E4)`.
    pub fn from_basis_images(images: [DivisorClass; RANK]) -> Self {
        let mut m = [[0; RANK]; RANK];
        for (j, img) in images.iter().enumerate() {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = img.0[i];
            }
        }
        LatticeMap { m }
    }

    pub fn rows(&self) -> &[[i64; RANK]; RANK] {
        &self.m
    }

    pub fn apply(&self, v: &DivisorClass) -> DivisorClass {
        let mut out = [0; RANK];
        for (o, row) in out.iter_mut().zip(&self.m) {
            *o = row.iter().zip(&v.0).map(|(a, b)| a * b).sum();
        }
        DivisorClass(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LatticeMap) -> LatticeMap {
        let mut m = [[0; RANK]; RANK];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..RANK).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        LatticeMap { m }
    }

    pub fn trace(&self) -> i64 {
        (0..RANK).map(|i| self.m[i][i]).sum()
    }

    pub fn preserves_form(&self) -> bool {
        let basis: Vec<DivisorClass> = (0..RANK)
            .map(|i| {
                let mut c = [0; RANK];
                c[i] = 1;
                DivisorClass(c)
            })
            .collect();
        basis.iter().all(|u| {
            basis
                .iter()
                .all(|v| intersect(&self.apply(u), &self.apply(v)) == intersect(u, v))
        })
    }

    pub fn fixes_canonical(&self) -> bool {
        self.apply(&canonical_class()) == canonical_class()
    }
}

/// The linear map induced by a permutation of the ten curves, given as the
/// image of each curve indexed in [`CurveId::ALL`] order.
///
/// `L = E1 + E2 + D12`, so the map is determined by the images of `E1, E2,
/// D12, E3, E4`; the remaining curves are used to validate the extension.
pub fn lattice_map_from_curve_perm(images: &[CurveId; 10]) -> Result<LatticeMap, LatticeError> {
    let mut seen = [false; 10];
    for c in images {
        if std::mem::replace(&mut seen[c.index()], true) {
            return Err(LatticeError::NotBijective);
        }
    }
    let img = |c: CurveId| curve_class(images[c.index()]);
    let l_image = img(CurveId::E1) + img(CurveId::E2) + img(CurveId::D12);
    let map = LatticeMap::from_basis_images([
        l_image,
        img(CurveId::E1),
        img(CurveId::E2),
        img(CurveId::E3),
        img(CurveId::E4),
    ]);
    for c in CurveId::ALL {
        if map.apply(&curve_class(c)) != img(c) {
            return Err(LatticeError::NoLinearExtension(c));
        }
    }
    if !map.preserves_form() {
        return Err(LatticeError::NotIsometry);
    }
    Ok(map)
}

/// Rank of the sublattice fixed by every map in `maps`: `5 - rank` of the
/// stacked `M - I` blocks.
pub fn fixed_rank(maps: &[LatticeMap]) -> usize {
    let id = LatticeMap::identity();
    let rows: Vec<Vec<i64>> = maps
        .iter()
        .flat_map(|m| (0..RANK).map(move |i| (0..RANK).map(|j| m.m[i][j] - id.m[i][j]).collect()))
        .collect();
    RANK - integer_rank(rows)
}

/// Rank over `Q` of an integer matrix by fraction-free (Bareiss) elimination.
pub(crate) fn integer_rank(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev_pivot = 1i64;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col];
        for r in rank + 1..rows.len() {
            let factor = rows[r][col];
            for c in col..ncols {
                let v = (pivot * rows[r][c] - factor * rows[rank][c]) / prev_pivot;
                debug_assert!(v.abs() < ENTRY_BOUND, "Bareiss entry overflow risk: {v}");
                rows[r][c] = v;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
