//! Finite-dimensional algebras given by a quiver and relations.
//!
//! Paths are written in composition order: the word `c1 b1 a1` means first
//! `a1`, then `b1`, then `c1`. The product `x * y` of two paths is the
//! concatenation `x y`, nonzero only when `source(x) == target(y)`. With this
//! product, left modules are representations of the quiver and the projective
//! `A e_i` is spanned by the paths starting at `i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::Rationals;
use crate::linalg::{LinAlg, Mat};
use crate::quiver::{id_order, Arrow, Quiver, QuiverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("path {0:?} is not composable")]
    NotComposable(Vec<String>),
    #[error("relation mixes vertex pairs")]
    MixedEndpoints,
    #[error("relation term {0:?} is shorter than 2")]
    ShortTerm(Vec<String>),
    #[error("dimension did not stabilize at length bound {bound}")]
    NotStabilized { bound: usize },
    #[error("length bound must be at least 1")]
    BadBound,
    #[error("empty vertex set")]
    EmptyVertexSet,
}

/// Sparse coordinate vector in some basis.
pub type SparseVec = Vec<(usize, BigRational)>;

/// Linear combination of paths, each path a word of arrow ids in composition
/// order. JSON: `[[1,["c1","b1"]],[-1,["c2","b1","a2","c1","b2"]]]`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathCombination {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl PathCombination {
    pub fn new(terms: Vec<(i64, Vec<String>)>) -> Self {
        PathCombination { terms }
    }

    /// Parses `"b1 a1 - b2 a1 c2 b1 a2"` style text: space-separated arrow ids,
    /// terms joined by `+`/`-`, optional integer coefficient `3*c1 b1`.
    pub fn parse(s: &str) -> Option<Self> {
        let mut pieces: Vec<(i64, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = 1i64;
        let mut signed = false;
        for ch in s.chars() {
            if ch == '+' || ch == '-' {
                if !cur.trim().is_empty() {
                    pieces.push((sign, std::mem::take(&mut cur)));
                    sign = 1;
                } else if signed {
                    return None;
                }
                signed = true;
                if ch == '-' {
                    sign = -1;
                }
                cur.clear();
            } else {
                if !ch.is_whitespace() {
                    signed = false;
                }
                cur.push(ch);
            }
        }
        if cur.trim().is_empty() {
            return None;
        }
        pieces.push((sign, cur));
        let mut terms = Vec::new();
        for (sign, body) in pieces {
            let (coef, word) = match body.split_once('*') {
                Some((c, w)) => (c.trim().parse::<i64>().ok()?, w),
                None => (1, body.as_str()),
            };
            let word: Vec<String> = word.split_whitespace().map(str::to_string).collect();
            if word.is_empty() {
                return None;
            }
            terms.push((sign * coef, word));
        }
        Some(PathCombination { terms })
    }

    /// Drops zero terms and merges repeated words.
    pub fn simplified(&self) -> Self {
        let mut acc: BTreeMap<Vec<String>, i64> = BTreeMap::new();
        let mut order = Vec::new();
        for (c, w) in &self.terms {
            if !acc.contains_key(w) {
                order.push(w.clone());
            }
            *acc.entry(w.clone()).or_insert(0) += c;
        }
        PathCombination {
            terms: order.into_iter().filter(|w| acc[w] != 0).map(|w| (acc[&w], w)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.simplified().terms.is_empty()
    }
}

impl fmt::Display for PathCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, w)) in self.terms.iter().enumerate() {
            let word = w.join(" ");
            let abs = c.abs();
            match (k, *c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if abs == 1 {
                write!(f, "{word}")?;
            } else {
                write!(f, "{abs}*{word}")?;
            }
        }
        Ok(())
    }
}

/// A word in the arrows of a quiver, composition order, with explicit
/// endpoints so that the empty word names a vertex idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisElem {
    pub source: usize,
    pub target: usize,
    pub label: String,
    /// The element as a combination of words in the algebra's own arrows.
    pub expr: Vec<(BigRational, Word)>,
}

impl BasisElem {
    pub fn is_idempotent(&self) -> bool {
        self.expr.len() == 1 && self.expr[0].1.arrows.is_empty()
    }

    /// Length of the defining word (paths only).
    pub fn length(&self) -> usize {
        self.expr.iter().map(|(_, w)| w.arrows.len()).max().unwrap_or(0)
    }
}

/// A finite-dimensional algebra with a basis of vertex-homogeneous elements
/// and exact structure constants.
#[derive(Clone, Debug)]
pub struct FDAlgebra {
    quiver: Quiver,
    basis: Vec<BasisElem>,
    mult: Vec<Vec<SparseVec>>,
    arrow_elems: Vec<SparseVec>,
    bound: usize,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn word_label(q: &Quiver, w: &Word) -> String {
    if w.arrows.is_empty() {
        format!("e{}", w.source)
    } else {
        w.arrows.iter().map(|&a| q.arrows[a].id.as_str()).collect::<Vec<_>>().join("")
    }
}

fn add_scaled(acc: &mut BTreeMap<usize, BigRational>, v: &SparseVec, s: &BigRational) {
    for (k, c) in v {
        let e = acc.entry(*k).or_insert_with(BigRational::zero);
        *e += c * s;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Sparse echelon basis keyed by leading column (smallest key leads).
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    fn insert(&mut self, mut v: BTreeMap<usize, BigRational>) {
        loop {
            let Some((&k, c)) = v.iter().next() else { return };
            match self.rows.get(&k) {
                Some(row) => {
                    let c = -c.clone();
                    for (j, x) in row {
                        let e = v.entry(*j).or_insert_with(BigRational::zero);
                        *e += x * &c;
                        if e.is_zero() {
                            v.remove(j);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    for x in v.values_mut() {
                        *x *= &inv;
                    }
                    self.rows.insert(k, v);
                    return;
                }
            }
        }
    }

    /// Back-substitutes so every row mentions only its own pivot among pivots.
    fn reduce_fully(&mut self) {
        let keys: Vec<usize> = self.rows.keys().rev().copied().collect();
        for k in keys {
            let mut row = self.rows.remove(&k).expect("row");
            let hits: Vec<(usize, BigRational)> = row
                .iter()
                .filter(|(j, _)| **j != k && self.rows.contains_key(j))
                .map(|(j, c)| (*j, c.clone()))
                .collect();
            for (j, c) in hits {
                let other = &self.rows[&j];
                let cur = row.remove(&j).unwrap_or_else(BigRational::zero);
                debug_assert_eq!(cur, c);
                for (t, x) in other {
                    if *t == j {
                        continue;
                    }
                    let e = row.entry(*t).or_insert_with(BigRational::zero);
                    *e -= x * &c;
                    if e.is_zero() {
                        row.remove(t);
                    }
                }
            }
            self.rows.insert(k, row);
        }
    }
}

impl FDAlgebra {
    /// The algebra `kQ / (relations)`, computed by linear elimination inside
    /// paths of length at most `length_bound + 1`. Fails unless every path of
    /// length `length_bound + 1` already lies in the ideal.
    pub fn from_relations(
        quiver: &Quiver,
        relations: &[PathCombination],
        length_bound: usize,
    ) -> Result<FDAlgebra, AlgebraError> {
        if length_bound == 0 {
            return Err(AlgebraError::BadBound);
        }
        let mut alg = Self::truncated(quiver, relations, length_bound + 1)?;
        if alg.basis.iter().any(|b| b.length() > length_bound) {
            return Err(AlgebraError::NotStabilized { bound: length_bound });
        }
        alg.bound = length_bound;
        Ok(alg)
    }

    /// The truncation `kQ / (relations + paths longer than big)`.
    pub fn truncated(quiver: &Quiver, relations: &[PathCombination], big: usize) -> Result<FDAlgebra, AlgebraError> {
        let q = quiver;
        // resolve relations to index words
        let mut rels: Vec<Vec<(BigRational, Vec<usize>)>> = Vec::new();
        let mut rel_ends: Vec<(usize, usize)> = Vec::new();
        for r in relations {
            let r = r.simplified();
            if r.terms.is_empty() {
                continue;
            }
            let mut terms = Vec::new();
            let mut ends = None;
            for (c, w) in &r.terms {
                if w.len() < 2 {
                    return Err(AlgebraError::ShortTerm(w.clone()));
                }
                let idx = resolve_word(q, w)?;
                let e = (q.arrows[*idx.last().expect("nonempty")].source, q.arrows[idx[0]].target);
                if *ends.get_or_insert(e) != e {
                    return Err(AlgebraError::MixedEndpoints);
                }
                terms.push((rat(*c), idx));
            }
            rels.push(terms);
            rel_ends.push(ends.expect("nonempty"));
        }

        // all paths up to length `big`, by endpoints
        let mut paths: Vec<Word> = (1..=q.n).map(|v| Word { source: v, target: v, arrows: vec![] }).collect();
        let mut layer: Vec<Word> = paths.clone();
        for _ in 0..big {
            let mut next = Vec::new();
            for w in &layer {
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.source == w.target {
                        let mut arrows = vec![ai];
                        arrows.extend(&w.arrows);
                        next.push(Word { source: w.source, target: a.target, arrows });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            layer = next;
        }
        let arrow_rank = arrow_ranks(q);
        let order_key = |w: &Word| -> (usize, Vec<usize>, usize) {
            (w.arrows.len(), w.arrows.iter().map(|&a| arrow_rank[a]).collect(), w.source)
        };
        // index 0 is the largest path
        paths.sort_by_key(|w| std::cmp::Reverse(order_key(w)));
        let index: HashMap<&Vec<usize>, Vec<(usize, usize)>> = {
            let mut m: HashMap<&Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
            for (i, w) in paths.iter().enumerate() {
                m.entry(&w.arrows).or_default().push((w.source, i));
            }
            m
        };
        let lookup = |src: usize, arrows: &Vec<usize>| -> usize {
            index[arrows].iter().find(|(s, _)| *s == src).expect("path enumerated").1
        };

        let mut by_source: Vec<Vec<&Word>> = vec![Vec::new(); q.n + 1];
        let mut by_target: Vec<Vec<&Word>> = vec![Vec::new(); q.n + 1];
        for w in &paths {
            by_source[w.source].push(w);
            by_target[w.target].push(w);
        }

        let mut blocks: BTreeMap<(usize, usize), Echelon> = BTreeMap::new();
        for (terms, &(rs, rt)) in rels.iter().zip(&rel_ends) {
            let min_len = terms.iter().map(|(_, w)| w.len()).min().expect("nonempty");
            // p (starting at rt) after r after q (ending at rs)
            for qw in &by_target[rs] {
                if qw.arrows.len() + min_len > big {
                    continue;
                }
                for pw in &by_source[rt] {
                    if pw.arrows.len() + qw.arrows.len() + min_len > big {
                        continue;
                    }
                    let mut v = BTreeMap::new();
                    for (c, w) in terms {
                        let len = pw.arrows.len() + w.len() + qw.arrows.len();
                        if len > big {
                            continue;
                        }
                        let mut full = pw.arrows.clone();
                        full.extend(w);
                        full.extend(&qw.arrows);
                        let e = v.entry(lookup(qw.source, &full)).or_insert_with(BigRational::zero);
                        *e += c;
                    }
                    v.retain(|_, c: &mut BigRational| !c.is_zero());
                    if !v.is_empty() {
                        blocks.entry((qw.source, pw.target)).or_default().insert(v);
                    }
                }
            }
        }
        for e in blocks.values_mut() {
            e.reduce_fully();
        }
        let is_pivot = |w: &Word, i: usize| blocks.get(&(w.source, w.target)).is_some_and(|e| e.rows.contains_key(&i));

        let mut normal: Vec<usize> = (0..paths.len()).filter(|&i| !is_pivot(&paths[i], i)).collect();
        // basis: idempotents first, then by increasing path order
        normal.reverse();
        let pos: HashMap<usize, usize> = normal.iter().enumerate().map(|(k, &i)| (i, k)).collect();

        // reduction of an arbitrary path (source, word) to basis coordinates
        let reduce = |src: usize, arrows: &Vec<usize>| -> SparseVec {
            if arrows.len() > big {
                return Vec::new();
            }
            let i = lookup(src, arrows);
            if let Some(&k) = pos.get(&i) {
                return vec![(k, BigRational::one())];
            }
            let w = &paths[i];
            let row = &blocks[&(w.source, w.target)].rows[&i];
            let mut out: SparseVec = row.iter().filter(|(j, _)| **j != i).map(|(j, c)| (pos[j], -c.clone())).collect();
            out.sort_by_key(|(k, _)| *k);
            out
        };

        let basis: Vec<BasisElem> = normal
            .iter()
            .map(|&i| {
                let w = paths[i].clone();
                BasisElem { source: w.source, target: w.target, label: word_label(q, &w), expr: vec![(BigRational::one(), w)] }
            })
            .collect();
        let dim = basis.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if x.source != y.target {
                    continue;
                }
                let mut w = x.expr[0].1.arrows.clone();
                w.extend(&y.expr[0].1.arrows);
                mult[i][j] = reduce(y.source, &w);
            }
        }
        let arrow_elems = q.arrows.iter().enumerate().map(|(ai, a)| reduce(a.source, &vec![ai])).collect();
        Ok(FDAlgebra { quiver: q.clone(), basis, mult, arrow_elems, bound: big })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.n
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn length_bound(&self) -> usize {
        self.bound
    }

    /// Structure constants of `basis[i] * basis[j]`.
    pub fn mult(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn arrow_element(&self, arrow: usize) -> &SparseVec {
        &self.arrow_elems[arrow]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.basis
            .iter()
            .position(|b| b.is_idempotent() && b.source == v)
            .expect("every vertex has an idempotent")
    }

    /// Basis elements with the given source vertex: a basis of `A e_v`.
    pub fn starting_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == v).collect()
    }

    /// Basis elements with the given target vertex: a basis of `e_v A`.
    pub fn ending_at(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].target == v).collect()
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                add_scaled(&mut acc, &self.mult[*i][*j], &(a * b));
            }
        }
        acc.into_iter().collect()
    }

    /// Coordinates of a word in this algebra's arrows.
    pub fn word_element(&self, w: &Word) -> SparseVec {
        if w.arrows.is_empty() {
            return vec![(self.idempotent(w.source), BigRational::one())];
        }
        let mut acc = self.arrow_elems[*w.arrows.last().expect("nonempty")].clone();
        for a in w.arrows.iter().rev().skip(1) {
            acc = self.mul(&self.arrow_elems[*a], &acc);
        }
        acc
    }

    /// Coordinates of a combination of arrow-id words.
    pub fn element(&self, c: &PathCombination) -> Result<SparseVec, AlgebraError> {
        let mut acc = BTreeMap::new();
        for (coef, w) in &c.terms {
            let idx = resolve_word(&self.quiver, w)?;
            if idx.is_empty() {
                continue;
            }
            let word = Word {
                source: self.quiver.arrows[*idx.last().expect("nonempty")].source,
                target: self.quiver.arrows[idx[0]].target,
                arrows: idx,
            };
            add_scaled(&mut acc, &self.word_element(&word), &rat(*coef));
        }
        Ok(acc.into_iter().collect())
    }

    /// `Sum e_i` acts as a two-sided identity and the idempotents are orthogonal.
    pub fn check_identity(&self) -> bool {
        let one: SparseVec = (1..=self.num_vertices()).map(|v| (self.idempotent(v), BigRational::one())).collect();
        (0..self.dim()).all(|i| {
            let x = vec![(i, BigRational::one())];
            self.mul(&one, &x) == x && self.mul(&x, &one) == x
        })
    }

    pub fn check_associativity(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if self.mult[i][j].is_empty() {
                    // (b_i b_j) b_k = 0; check b_i (b_j b_k) = 0 too
                    for k in 0..d {
                        if !self.mul(&[(i, BigRational::one())].to_vec(), &self.mult[j][k]).is_empty() {
                            return false;
                        }
                    }
                    continue;
                }
                for k in 0..d {
                    let left = self.mul(&self.mult[i][j], &vec![(k, BigRational::one())]);
                    let right = self.mul(&vec![(i, BigRational::one())], &self.mult[j][k]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The opposite algebra: reversed quiver, reversed words, transposed
    /// multiplication; basis indices are kept.
    pub fn opposite(&self) -> FDAlgebra {
        let quiver = self.quiver.opposite();
        let basis = self
            .basis
            .iter()
            .map(|b| {
                let expr: Vec<(BigRational, Word)> = b
                    .expr
                    .iter()
                    .map(|(c, w)| {
                        let mut arrows = w.arrows.clone();
                        arrows.reverse();
                        (c.clone(), Word { source: w.target, target: w.source, arrows })
                    })
                    .collect();
                let label = if b.is_idempotent() { b.label.clone() } else { word_label_expr(&quiver, &expr) };
                BasisElem { source: b.target, target: b.source, label, expr }
            })
            .collect();
        let d = self.dim();
        let mult = (0..d).map(|i| (0..d).map(|j| self.mult[j][i].clone()).collect()).collect();
        FDAlgebra { quiver, basis, mult, arrow_elems: self.arrow_elems.clone(), bound: self.bound }
    }

    /// The corner algebra `e A e` for `e` the sum of the idempotents at
    /// `vertices`. Its vertices are renumbered `1..` in the given order and its
    /// arrows are basis elements of the radical not in the radical squared.
    pub fn corner(&self, vertices: &[usize]) -> Result<FDAlgebra, AlgebraError> {
        if vertices.is_empty() {
            return Err(AlgebraError::EmptyVertexSet);
        }
        let renum: HashMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&i| renum.contains_key(&self.basis[i].source) && renum.contains_key(&self.basis[i].target))
            .collect();
        let newpos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let d = keep.len();
        let to_corner = |v: &SparseVec| -> SparseVec { v.iter().map(|(i, c)| (newpos[i], c.clone())).collect() };
        let mult: Vec<Vec<SparseVec>> =
            keep.iter().map(|&i| keep.iter().map(|&j| to_corner(&self.mult[i][j])).collect()).collect();

        // radical: non-idempotent basis elements; arrows complement rad^2
        let rad: Vec<usize> = (0..d).filter(|&k| !self.basis[keep[k]].is_idempotent()).collect();
        let mut rad2: Vec<Vec<BigRational>> = Vec::new();
        for &x in &rad {
            for &y in &rad {
                let v = &mult[x][y];
                if !v.is_empty() {
                    rad2.push(dense(v, d));
                }
            }
        }
        let mut span = rad2.clone();
        let mut arrow_basis = Vec::new();
        for &x in &rad {
            let mut trial = span.clone();
            trial.push(unit(x, d));
            if Rationals.rank(&Rationals.from_columns(&trial, d)) > Rationals.rank(&Rationals.from_columns(&span, d)) {
                span = trial;
                arrow_basis.push(x);
            }
        }
        let arrows: Vec<Arrow> = arrow_basis
            .iter()
            .map(|&k| {
                let b = &self.basis[keep[k]];
                Arrow::new(b.label.clone(), renum[&b.source], renum[&b.target])
            })
            .collect();
        let quiver = Quiver::new(vertices.len(), arrows)?;
        let arrow_elems: Vec<SparseVec> = arrow_basis.iter().map(|&k| vec![(k, BigRational::one())]).collect();

        // express every corner basis element through words in the new arrows
        let mut words: Vec<(Word, SparseVec)> = Vec::new();
        for v in 1..=vertices.len() {
            let e = keep.iter().position(|&i| self.basis[i].is_idempotent() && renum[&self.basis[i].source] == v);
            let e = e.expect("idempotent in corner");
            words.push((Word { source: v, target: v, arrows: vec![] }, vec![(e, BigRational::one())]));
        }
        let mut frontier: Vec<(Word, SparseVec)> = Vec::new();
        for (ai, a) in quiver.arrows.iter().enumerate() {
            frontier.push((Word { source: a.source, target: a.target, arrows: vec![ai] }, arrow_elems[ai].clone()));
        }
        let mut kept_cols: Vec<Vec<BigRational>> = words.iter().map(|(_, v)| dense(v, d)).collect();
        let corner_mul = |x: &SparseVec, y: &SparseVec| -> SparseVec {
            let mut acc = BTreeMap::new();
            for (i, a) in x {
                for (j, b) in y {
                    add_scaled(&mut acc, &mult[*i][*j], &(a * b));
                }
            }
            acc.into_iter().collect()
        };
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (w, v) in frontier {
                if v.is_empty() {
                    continue;
                }
                let mut trial = kept_cols.clone();
                trial.push(dense(&v, d));
                let before = kept_cols.len();
                if Rationals.rank(&Rationals.from_columns(&trial, d)) == before {
                    continue;
                }
                kept_cols = trial;
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.source == w.target {
                        let mut arrows = vec![ai];
                        arrows.extend(&w.arrows);
                        let prod = corner_mul(&arrow_elems[ai], &v);
                        next.push((Word { source: w.source, target: a.target, arrows }, prod));
                    }
                }
                words.push((w, v));
            }
            frontier = next;
        }
        let word_mat = Rationals.from_columns(&kept_cols, d);
        let basis = (0..d)
            .map(|k| {
                let b = &self.basis[keep[k]];
                let coeffs = Rationals.solve(&word_mat, &Mat::from_rows(unit(k, d).into_iter().map(|x| vec![x]).collect(), 1));
                let coeffs = coeffs.expect("corner words span the corner");
                let expr: Vec<(BigRational, Word)> = (0..words.len())
                    .filter(|&t| !coeffs.get(t, 0).is_zero())
                    .map(|t| (coeffs.get(t, 0).clone(), words[t].0.clone()))
                    .collect();
                BasisElem { source: renum[&b.source], target: renum[&b.target], label: b.label.clone(), expr }
            })
            .collect();
        Ok(FDAlgebra { quiver, basis, mult, arrow_elems, bound: self.bound })
    }

    /// Dimension of the span of basis elements of each path length.
    pub fn graded_dims(&self) -> Vec<usize> {
        let max = self.basis.iter().map(|b| b.length()).max().unwrap_or(0);
        let mut out = vec![0; max + 1];
        for b in &self.basis {
            out[b.length()] += 1;
        }
        out
    }
}

fn word_label_expr(q: &Quiver, expr: &[(BigRational, Word)]) -> String {
    expr.iter().map(|(_, w)| word_label(q, w)).collect::<Vec<_>>().join("+")
}

fn dense(v: &SparseVec, d: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); d];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

fn unit(k: usize, d: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); d];
    out[k] = BigRational::one();
    out
}

fn arrow_ranks(q: &Quiver) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..q.arrows.len()).collect();
    idx.sort_by(|&a, &b| id_order(&q.arrows[a].id, &q.arrows[b].id));
    let mut rank = vec![0; q.arrows.len()];
    for (r, a) in idx.into_iter().enumerate() {
        rank[a] = r;
    }
    rank
}

/// Arrow indices of a word of ids, checking composability.
pub fn resolve_word(q: &Quiver, w: &[String]) -> Result<Vec<usize>, AlgebraError> {
    let idx: Vec<usize> = w
        .iter()
        .map(|id| q.arrow_index(id).ok_or_else(|| QuiverError::UnknownArrow(id.clone())))
        .collect::<Result<_, _>>()?;
    for pair in idx.windows(2) {
        if q.arrows[pair[0]].source != q.arrows[pair[1]].target {
            return Err(AlgebraError::NotComposable(w.to_vec()));
        }
    }
    Ok(idx)
}

/// The path words of length `len` in `q`, in composition order.
pub fn paths_of_length(q: &Quiver, len: usize) -> Vec<Vec<usize>> {
    let mut layer: Vec<Vec<usize>> = (0..q.arrows.len()).map(|a| vec![a]).collect();
    if len == 0 {
        return Vec::new();
    }
    for _ in 1..len {
        let mut next = Vec::new();
        for w in &layer {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == q.arrows[w[0]].target {
                    let mut v = vec![ai];
                    v.extend(w);
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    layer
}
