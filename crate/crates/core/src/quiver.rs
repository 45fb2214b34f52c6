//! Quivers, ice quivers and their mutation.
//!
//! Vertices are 1-based. In an [`IceQuiver`] the vertices `1..=m` are mutable
//! and `m+1..=n` are frozen.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::FromPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Rationals;
use crate::linalg::{LinAlg, Mat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("mutable count {m} exceeds vertex count {n}")]
    BadFrozenSplit { m: usize, n: usize },
    #[error("arrow {0} is a loop")]
    Loop(String),
    #[error("arrows {0} and {1} form a 2-cycle")]
    TwoCycle(String, String),
    #[error("duplicate arrow id {0}")]
    DuplicateId(String),
    #[error("cannot mutate at frozen vertex {0}")]
    FrozenVertex(usize),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(id: impl Into<String>, source: usize, target: usize) -> Self {
        Arrow { id: id.into(), source, target }
    }
}

/// A finite quiver with named arrows. Loops and 2-cycles are allowed; this is
/// the underlying shape of path algebras and their corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub n: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let mut seen = BTreeSet::new();
        for a in &arrows {
            for v in [a.source, a.target] {
                if v == 0 || v > n {
                    return Err(QuiverError::VertexOutOfRange(v, n));
                }
            }
            if !seen.insert(a.id.clone()) {
                return Err(QuiverError::DuplicateId(a.id.clone()));
            }
        }
        Ok(Quiver { n, arrows })
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Number of arrows `i -> j`.
    pub fn count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    /// The opposite quiver: every arrow reversed, ids kept.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self.arrows.iter().map(|a| Arrow::new(a.id.clone(), a.target, a.source)).collect(),
        }
    }
}

/// An ice quiver: no loops, no 2-cycles, frozen vertices `m+1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawIceQuiver", into = "RawIceQuiver")]
pub struct IceQuiver {
    n: usize,
    m: usize,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct RawIceQuiver {
    n: usize,
    m: usize,
    arrows: Vec<(String, usize, usize)>,
}

impl TryFrom<RawIceQuiver> for IceQuiver {
    type Error = QuiverError;
    fn try_from(r: RawIceQuiver) -> Result<Self, QuiverError> {
        IceQuiver::new(r.n, r.m, r.arrows.into_iter().map(|(id, s, t)| Arrow::new(id, s, t)).collect())
    }
}

impl From<IceQuiver> for RawIceQuiver {
    fn from(q: IceQuiver) -> Self {
        RawIceQuiver {
            n: q.n,
            m: q.m,
            arrows: q.arrows.into_iter().map(|a| (a.id, a.source, a.target)).collect(),
        }
    }
}

impl IceQuiver {
    pub fn new(n: usize, m: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        if m > n {
            return Err(QuiverError::BadFrozenSplit { m, n });
        }
        let q = Quiver::new(n, arrows)?;
        let mut direction: BTreeMap<(usize, usize), &str> = BTreeMap::new();
        for a in &q.arrows {
            if a.source == a.target {
                return Err(QuiverError::Loop(a.id.clone()));
            }
            if let Some(other) = direction.get(&(a.target, a.source)) {
                return Err(QuiverError::TwoCycle(other.to_string(), a.id.clone()));
            }
            direction.insert((a.source, a.target), &a.id);
        }
        Ok(IceQuiver { n, m, arrows: q.arrows })
    }

    /// Builds a quiver from `(source, target)` pairs, naming arrows `a1, a2, ...`.
    pub fn from_pairs(n: usize, m: usize, pairs: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let arrows = pairs.iter().enumerate().map(|(k, &(s, t))| Arrow::new(format!("a{}", k + 1), s, t)).collect();
        Self::new(n, m, arrows)
    }

    /// Quiver whose exchange matrix is `b` (n x n, skew-symmetric).
    pub fn from_exchange_matrix(b: &ExchangeMatrix, m: usize) -> Result<Self, QuiverError> {
        let n = b.size();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for _ in 0..b.get(i, j).max(0) {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        Self::from_pairs(n, m, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        v > self.m && v <= self.n
    }

    pub fn frozen(&self) -> std::ops::RangeInclusive<usize> {
        self.m + 1..=self.n
    }

    pub fn count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == j).count()
    }

    pub fn as_quiver(&self) -> Quiver {
        Quiver { n: self.n, arrows: self.arrows.clone() }
    }

    /// Arrows for display; optionally hides arrows between two frozen vertices.
    pub fn display_arrows(&self, hide_frozen_pairs: bool) -> Vec<&Arrow> {
        self.arrows
            .iter()
            .filter(|a| !(hide_frozen_pairs && self.is_frozen(a.source) && self.is_frozen(a.target)))
            .collect()
    }

    /// Mutation at the non-frozen vertex `i`.
    ///
    /// Composite arrows `h -> i -> j` get fresh ids `m1, m2, ...`; arrows at `i`
    /// are reversed and marked with a trailing `'`; 2-cycles are cancelled
    /// pairing arrows in id order.
    pub fn mutate(&self, i: usize) -> Result<IceQuiver, QuiverError> {
        if i == 0 || i > self.n {
            return Err(QuiverError::VertexOutOfRange(i, self.n));
        }
        if self.is_frozen(i) {
            return Err(QuiverError::FrozenVertex(i));
        }
        let mut fresh = self
            .arrows
            .iter()
            .filter_map(|a| a.id.strip_prefix('m').and_then(|s| s.parse::<usize>().ok()))
            .max()
            .unwrap_or(0);
        let mut arrows: Vec<Arrow> = Vec::new();
        let incoming: Vec<&Arrow> = self.arrows.iter().filter(|a| a.target == i).collect();
        let outgoing: Vec<&Arrow> = self.arrows.iter().filter(|a| a.source == i).collect();
        for a in &self.arrows {
            if a.source == i || a.target == i {
                arrows.push(Arrow::new(format!("{}'", a.id), a.target, a.source));
            } else {
                arrows.push(a.clone());
            }
        }
        for h in &incoming {
            for j in &outgoing {
                fresh += 1;
                arrows.push(Arrow::new(format!("m{fresh}"), h.source, j.target));
            }
        }
        let arrows = cancel_two_cycles(arrows);
        IceQuiver::new(self.n, self.m, arrows)
    }

    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let mut b = vec![vec![0i64; self.n]; self.n];
        for a in &self.arrows {
            b[a.source - 1][a.target - 1] += 1;
            b[a.target - 1][a.source - 1] -= 1;
        }
        ExchangeMatrix { b }
    }

    /// Arrow multiset as a count map, ignoring ids.
    pub fn shape(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for a in &self.arrows {
            *out.entry((a.source, a.target)).or_insert(0) += 1;
        }
        out
    }
}

fn cancel_two_cycles(arrows: Vec<Arrow>) -> Vec<Arrow> {
    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (k, a) in arrows.iter().enumerate() {
        by_pair.entry((a.source, a.target)).or_default().push(k);
    }
    let mut drop = BTreeSet::new();
    for (&(s, t), fwd) in &by_pair {
        if s >= t {
            continue;
        }
        let Some(back) = by_pair.get(&(t, s)) else { continue };
        let mut fwd = fwd.clone();
        let mut back = back.clone();
        fwd.sort_by(|&x, &y| id_order(&arrows[x].id, &arrows[y].id));
        back.sort_by(|&x, &y| id_order(&arrows[x].id, &arrows[y].id));
        for (x, y) in fwd.iter().zip(back.iter()) {
            drop.insert(*x);
            drop.insert(*y);
        }
    }
    arrows.into_iter().enumerate().filter(|(k, _)| !drop.contains(k)).map(|(_, a)| a).collect()
}

/// Orders ids by length, then lexicographically, so `m9 < m10`.
pub(crate) fn id_order(a: &str, b: &str) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for IceQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IceQuiver(n={}, m={}; ", self.n, self.m)?;
        let parts: Vec<String> =
            self.arrows.iter().map(|a| format!("{}:{}->{}", a.id, a.source, a.target)).collect();
        write!(f, "{})", parts.join(", "))
    }
}

/// Skew-symmetric integer matrix `b[i][j] = #(i->j) - #(j->i)` (0-based storage).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(b: Vec<Vec<i64>>) -> Option<Self> {
        let n = b.len();
        if b.iter().any(|r| r.len() != n) {
            return None;
        }
        for i in 0..n {
            for j in 0..n {
                if b[i][j] != -b[j][i] {
                    return None;
                }
            }
        }
        Some(ExchangeMatrix { b })
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Matrix mutation at the 1-based vertex `k`.
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        let k = k - 1;
        let n = self.size();
        let mut out = self.b.clone();
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -self.b[i][j]
                } else {
                    let (bik, bkj) = (self.b[i][k], self.b[k][j]);
                    self.b[i][j] + bik.signum() * (bik * bkj).max(0)
                };
            }
        }
        ExchangeMatrix { b: out }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows = self.b.iter().map(|r| r.iter().map(|&v| BigRational::from_i64(v).expect("i64")).collect()).collect();
        Rationals.rank(&Mat::from_rows(rows, self.size()))
    }
}

pub fn matrix_rank(b: &ExchangeMatrix) -> usize {
    b.rank()
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn ice_quiver() -> impl Strategy<Value = IceQuiver> {
        (2usize..6)
            .prop_flat_map(|n| (Just(n), 1..=n, prop::collection::vec(-2i64..3, n * (n - 1) / 2)))
            .prop_map(|(n, m, ups)| {
                let mut b = vec![vec![0i64; n]; n];
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        b[i][j] = ups[k];
                        b[j][i] = -ups[k];
                        k += 1;
                    }
                }
                IceQuiver::from_exchange_matrix(&ExchangeMatrix::new(b).unwrap(), m).unwrap()
            })
    }

    proptest! {
        #[test]
        fn mutation_is_an_involution(q in ice_quiver(), v in 1usize..6) {
            prop_assume!(v <= q.m());
            let back = q.mutate(v).unwrap().mutate(v).unwrap();
            prop_assert_eq!(back.shape(), q.shape());
        }

        #[test]
        fn arrow_and_matrix_mutation_commute(q in ice_quiver(), v in 1usize..6) {
            prop_assume!(v <= q.m());
            let mu = q.mutate(v).unwrap();
            prop_assert_eq!(mu.exchange_matrix(), q.exchange_matrix().mutate(v));
        }
    }
}
