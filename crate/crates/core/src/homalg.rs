//! Two-term complexes of projectives, the E-invariant, generic sampling,
//! canonical decomposition and the tropical mutation of indices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fdalg::AlgebraError;
use crate::field::{Field, Rationals};
use crate::linalg::LinAlg;
use crate::modrep::{cokernel, decompose_with_degrees, hom_dim, Algebra, Elem, Module, ModuleError, ModuleMorphism};
use crate::quiver::{IceQuiver, QuiverError};

pub const DEFAULT_HEIGHT: i64 = 97;
pub const DEFAULT_TRIALS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HomalgError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("vector has length {got}, expected {expected}")]
    Length { expected: usize, got: usize },
    #[error("at least one trial is required")]
    NoTrials,
    #[error("generic sample did not stabilize within {} trials", .0.samples)]
    NotStabilized(Box<GenericStats>),
}

/// Coefficients of `[P_i]`; JSON `{"g":[1,0,-1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaVector {
    pub g: Vec<i64>,
}

impl DeltaVector {
    pub fn new(g: Vec<i64>) -> Self {
        DeltaVector { g }
    }

    pub fn len(&self) -> usize {
        self.g.len()
    }

    pub fn is_empty(&self) -> bool {
        self.g.is_empty()
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut g = vec![0; n];
        g[i - 1] = 1;
        DeltaVector { g }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.g.iter().all(|&x| x >= 0)
    }

    pub fn sum(&self) -> i64 {
        self.g.iter().sum()
    }

    fn check(&self, n: usize) -> Result<(), HomalgError> {
        if self.g.len() == n {
            Ok(())
        } else {
            Err(HomalgError::Length { expected: n, got: self.g.len() })
        }
    }
}

impl fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.g.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive part as `P0`, negative part as `P1`, vertices listed with
/// multiplicity in increasing order.
pub fn delta_split(d: &DeltaVector) -> (Vec<usize>, Vec<usize>) {
    let mut p0 = Vec::new();
    let mut p1 = Vec::new();
    for (i, &x) in d.g.iter().enumerate() {
        let target = if x > 0 { &mut p0 } else { &mut p1 };
        target.extend(std::iter::repeat(i + 1).take(x.unsigned_abs() as usize));
    }
    (p0, p1)
}

/// `f : (+) P_{p1} -> (+) P_{p0}`, stored both as a matrix of algebra
/// elements and as a module morphism.
#[derive(Clone, Debug)]
pub struct TwoTermComplex<F: Field> {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub elems: Vec<Vec<Elem<F>>>,
    pub f: ModuleMorphism<F>,
}

impl<F: Field> TwoTermComplex<F> {
    pub fn new(alg: &Algebra<F>, p1: Vec<usize>, p0: Vec<usize>, elems: Vec<Vec<Elem<F>>>) -> Self {
        let f = alg.proj_morphism(&p1, &p0, &elems);
        TwoTermComplex { p1, p0, elems, f }
    }

    pub fn zero(alg: &Algebra<F>, p1: Vec<usize>, p0: Vec<usize>) -> Self {
        let elems = vec![vec![Vec::new(); p1.len()]; p0.len()];
        Self::new(alg, p1, p0, elems)
    }

    pub fn from_morphism(alg: &Algebra<F>, p1: Vec<usize>, p0: Vec<usize>, f: ModuleMorphism<F>) -> Self {
        let elems = alg.proj_elements(&p1, &p0, &f);
        TwoTermComplex { p1, p0, elems, f }
    }

    pub fn delta(&self, n: usize) -> DeltaVector {
        let mut g = vec![0; n];
        for &v in &self.p0 {
            g[v - 1] += 1;
        }
        for &v in &self.p1 {
            g[v - 1] -= 1;
        }
        DeltaVector { g }
    }

    pub fn cokernel(&self) -> Module<F> {
        cokernel(&self.f).0
    }

    /// Kernel of the induced map of injectives `nu f`, computed as
    /// `D coker(Hom(f, A))`.
    pub fn injective_kernel(&self, alg: &Algebra<F>, op: &Algebra<F>) -> Module<F> {
        cokernel(&alg.transpose_map(&self.p1, &self.p0, &self.f, op)).0.dual()
    }
}

/// `g o f` for element matrices: `(g o f)_{zx} = sum_y f_{yx} * g_{zy}`.
fn compose<F: Field>(alg: &Algebra<F>, f: &[Vec<Elem<F>>], g: &[Vec<Elem<F>>], nx: usize) -> Vec<Vec<Elem<F>>> {
    let field = alg.field();
    g.iter()
        .map(|grow| {
            (0..nx)
                .map(|x| {
                    let mut acc: Elem<F> = Vec::new();
                    for (y, gzy) in grow.iter().enumerate() {
                        let p = alg.mul(&f[y][x], gzy);
                        acc = add_elems(field, &acc, &p);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn add_elems<F: Field>(field: &F, a: &Elem<F>, b: &Elem<F>) -> Elem<F> {
    let mut out: Vec<(usize, F::Elem)> = a.clone();
    for (i, c) in b {
        match out.iter_mut().find(|(j, _)| j == i) {
            Some(e) => e.1 = field.add(&e.1, c),
            None => out.push((*i, c.clone())),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Coordinates of a map of projectives in the basis of
/// [`Algebra::projective_hom_basis`].
fn hom_coords<F: Field>(alg: &Algebra<F>, src: &[usize], tgt: &[usize], elems: &[Vec<Elem<F>>]) -> Vec<F::Elem> {
    let field = alg.field();
    let mut out = Vec::new();
    for (l, &j) in tgt.iter().enumerate() {
        for (k, &i) in src.iter().enumerate() {
            for &b in alg.block(j, i) {
                let c = elems[l][k].iter().find(|(u, _)| *u == b).map(|(_, c)| c.clone());
                out.push(c.unwrap_or_else(|| field.zero()));
            }
        }
    }
    out
}

/// `dim E(f, g)` by the homotopy formula: `dim Hom(P1f, P0g)` minus the rank
/// of `(h1, h0) -> g h1 - h0 f`.
pub fn e_dim<F: Field>(alg: &Algebra<F>, f: &TwoTermComplex<F>, g: &TwoTermComplex<F>) -> usize {
    let field = alg.field();
    let total: usize = g.p0.iter().map(|&j| f.p1.iter().map(|&i| alg.block(j, i).len()).sum::<usize>()).sum();
    if total == 0 {
        return 0;
    }
    let mut cols: Vec<Vec<F::Elem>> = Vec::new();
    for h1 in alg.projective_hom_basis(&f.p1, &g.p1) {
        let c = compose(alg, &h1, &g.elems, f.p1.len());
        cols.push(hom_coords(alg, &f.p1, &g.p0, &c));
    }
    for h0 in alg.projective_hom_basis(&f.p0, &g.p0) {
        let c = compose(alg, &f.elems, &h0, f.p1.len());
        cols.push(hom_coords(alg, &f.p1, &g.p0, &c));
    }
    if cols.is_empty() {
        return total;
    }
    total - field.rank(&field.from_columns(&cols, total))
}

/// `dim E(f, g)` as `dim coker(Hom(P0f, coker g) -> Hom(P1f, coker g))`.
pub fn e_dim_cokernel<F: Field>(alg: &Algebra<F>, f: &TwoTermComplex<F>, g: &TwoTermComplex<F>) -> usize {
    let field = alg.field();
    let m = g.cokernel();
    let rows: usize = f.p1.iter().map(|&v| m.dim_at(v)).sum();
    let cols: usize = f.p0.iter().map(|&v| m.dim_at(v)).sum();
    if rows == 0 {
        return 0;
    }
    let mut mat = field.zeros(rows, cols);
    let mut c0 = 0;
    for (l, &j) in f.p0.iter().enumerate() {
        let mut r0 = 0;
        for (k, &i) in f.p1.iter().enumerate() {
            // f_{lk} maps m_j to m_i
            let mut block = field.zeros(m.dim_at(i), m.dim_at(j));
            for (b, c) in &f.elems[l][k] {
                block = field.mat_add(&block, &field.mat_scale(&alg.action(&m, *b), c));
            }
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    mat.set(r0 + r, c0 + c, block.get(r, c).clone());
                }
            }
            r0 += m.dim_at(i);
        }
        c0 += m.dim_at(j);
    }
    rows - field.rank(&mat)
}

/// Summary of a generic sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericStats {
    pub delta: DeltaVector,
    pub samples: usize,
    pub min_kernel_dim: Vec<usize>,
    pub e_self: usize,
    pub hom_tau: usize,
    pub stable: bool,
}

/// Sampling parameters: entry height, number of trials and the seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub height: i64,
    pub trials: usize,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { height: DEFAULT_HEIGHT, trials: DEFAULT_TRIALS, seed: 0 }
    }
}

impl Sampling {
    pub fn with_seed(seed: u64) -> Self {
        Sampling { seed, ..Sampling::default() }
    }

    /// Derived parameters for an auxiliary sample.
    pub fn derive(&self, salt: u64) -> Self {
        Sampling { seed: self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(salt), ..*self }
    }
}

/// A random map in `Hom((+) P_p1, (+) P_p0)` with integer coordinates in `[-h, h]`.
pub fn random_complex(
    alg: &Algebra<Rationals>,
    p1: &[usize],
    p0: &[usize],
    height: i64,
    rng: &mut ChaCha8Rng,
) -> TwoTermComplex<Rationals> {
    let mut elems = vec![vec![Vec::new(); p1.len()]; p0.len()];
    for (l, &j) in p0.iter().enumerate() {
        for (k, &i) in p1.iter().enumerate() {
            for &b in alg.block(j, i) {
                let c = rng.gen_range(-height..=height);
                if c != 0 {
                    elems[l][k].push((b, BigRational::from_integer(BigInt::from(c))));
                }
            }
        }
    }
    TwoTermComplex::new(alg, p1.to_vec(), p0.to_vec(), elems)
}

/// Samples `trials` random maps and keeps the one minimizing the kernel
/// dimension vector of `nu f` and then `e(f, f)`. The minimum is stable when
/// the last trial did not improve it.
pub fn generic_sample(
    alg: &Algebra<Rationals>,
    delta: &DeltaVector,
    s: Sampling,
) -> Result<(TwoTermComplex<Rationals>, GenericStats), HomalgError> {
    let (stats, best) = sample_inner(alg, delta, s)?;
    if stats.stable {
        Ok((best, stats))
    } else {
        Err(HomalgError::NotStabilized(Box::new(stats)))
    }
}

fn sample_inner(
    alg: &Algebra<Rationals>,
    delta: &DeltaVector,
    s: Sampling,
) -> Result<(GenericStats, TwoTermComplex<Rationals>), HomalgError> {
    delta.check(alg.num_vertices())?;
    if s.trials == 0 {
        return Err(HomalgError::NoTrials);
    }
    let (p0, p1) = delta_split(delta);
    let op = alg.opposite();
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut best: Option<((Vec<usize>, usize), TwoTermComplex<Rationals>)> = None;
    let mut improved_last = false;
    for _ in 0..s.trials {
        let f = random_complex(alg, &p1, &p0, s.height, &mut rng);
        let kdim = f.injective_kernel(alg, &op).dims().to_vec();
        let key = (kdim, e_dim(alg, &f, &f));
        improved_last = match &best {
            None => true,
            Some((k, _)) => key < *k,
        };
        if improved_last {
            best = Some((key, f));
        }
    }
    let ((kdim, e_self), f) = best.expect("at least one trial");
    let m = f.cokernel();
    let hom_tau = hom_dim(&m, &alg.ar_translate(&m))?;
    let stable = s.trials == 1 || !improved_last;
    let stats = GenericStats { delta: delta.clone(), samples: s.trials, min_kernel_dim: kdim, e_self, hom_tau, stable };
    Ok((stats, f))
}

/// The minimal presentation of `m` as a two-term complex.
pub fn presentation_complex(alg: &Algebra<Rationals>, m: &Module<Rationals>) -> TwoTermComplex<Rationals> {
    let pres = alg.minimal_projective_presentation(m);
    TwoTermComplex::from_morphism(alg, pres.p1, pres.p0, pres.f)
}

/// Summands of the generic complex of `delta` and whether `e` vanishes
/// between every two of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub summands: Vec<DeltaVector>,
    pub e_vanishes: bool,
}

/// The generic complex splits as the minimal presentation of its cokernel
/// plus a stalk complex `P' -> 0`; the cokernel is split into indecomposable
/// modules and `P'` into indecomposable projectives.
pub fn canonical_decomposition(
    alg: &Algebra<Rationals>,
    delta: &DeltaVector,
    s: Sampling,
) -> Result<CanonicalDecomposition, HomalgError> {
    let n = alg.num_vertices();
    let (f, _) = generic_sample(alg, delta, s)?;
    let m = f.cokernel();
    // (complex, degree): a degree k piece stands for k conjugate summands
    let mut pieces: Vec<(TwoTermComplex<Rationals>, usize)> = Vec::new();
    let mut sum = vec![0i64; n];
    for (part, k) in decompose_with_degrees(&m)? {
        let c = presentation_complex(alg, &part);
        for (acc, x) in sum.iter_mut().zip(&c.delta(n).g) {
            *acc += x;
        }
        pieces.push((c, k));
    }
    for (i, (&total, &want)) in sum.iter().zip(&delta.g).enumerate() {
        // what is left is a stalk complex of projectives in degree 1
        for _ in 0..(total - want).max(0) {
            pieces.push((TwoTermComplex::zero(alg, vec![i + 1], Vec::new()), 1));
        }
    }
    let mut e_vanishes = true;
    for a in 0..pieces.len() {
        for b in 0..pieces.len() {
            if a != b && e_dim(alg, &pieces[a].0, &pieces[b].0) != 0 {
                e_vanishes = false;
            }
        }
    }
    let mut summands: Vec<DeltaVector> = Vec::new();
    for (k_idx, (c, k)) in pieces.iter().enumerate() {
        let d = c.delta(n);
        if *k == 1 {
            summands.push(d);
            continue;
        }
        if d.g.iter().any(|x| x % *k as i64 != 0) {
            return Err(HomalgError::Module(ModuleError::Shape(format!("{d} is not divisible by {k}"))));
        }
        let part = DeltaVector::new(d.g.iter().map(|x| x / *k as i64).collect());
        // conjugates are E-orthogonal iff E of the piece is k times the generic self-E
        let (_, st) = generic_sample(alg, &part, s.derive(k_idx as u64 + 1))?;
        if e_dim(alg, c, c) != k * st.e_self {
            e_vanishes = false;
        }
        summands.extend(std::iter::repeat(part).take(*k));
    }
    summands.sort_by(|a, b| b.cmp(a));
    Ok(CanonicalDecomposition { summands, e_vanishes })
}

/// No coordinate has strictly opposite signs.
pub fn is_sign_coherent(a: &DeltaVector, b: &DeltaVector) -> bool {
    a.g.iter().zip(&b.g).all(|(x, y)| x * y >= 0)
}

/// Tropical mutation of an index at a mutable vertex `i`, counting arrows in
/// `q` before mutation.
pub fn mutate_delta(d: &DeltaVector, i: usize, q: &IceQuiver) -> Result<DeltaVector, HomalgError> {
    d.check(q.n())?;
    if i == 0 || i > q.n() {
        return Err(QuiverError::VertexOutOfRange(i, q.n()).into());
    }
    if q.is_frozen(i) {
        return Err(QuiverError::FrozenVertex(i).into());
    }
    let gi = d.g[i - 1];
    let mut g = d.g.clone();
    g[i - 1] = -gi;
    for a in q.arrows() {
        if a.source == i {
            g[a.target - 1] -= (-gi).max(0);
        } else if a.target == i {
            g[a.source - 1] += gi.max(0);
        }
    }
    Ok(DeltaVector { g })
}

/// Drop the frozen coordinates.
pub fn project_frozen(d: &DeltaVector, q: &IceQuiver) -> Result<DeltaVector, HomalgError> {
    d.check(q.n())?;
    Ok(DeltaVector { g: d.g[..q.m()].to_vec() })
}

/// Lift an index of the mutable part to the full ice quiver by adding the
/// projective cover `T_F` of `coker Hom(f, Gamma_F)` over the frozen corner.
pub fn lift_frozen(
    dbar: &DeltaVector,
    q: &IceQuiver,
    alg: &Algebra<Rationals>,
    s: Sampling,
) -> Result<DeltaVector, HomalgError> {
    dbar.check(q.m())?;
    let mut g = dbar.g.clone();
    g.resize(q.n(), 0);
    let full = DeltaVector { g };
    if q.m() == q.n() || dbar.is_nonnegative() {
        return Ok(full);
    }
    let (f, _) = generic_sample(alg, &full, s)?;
    let op = alg.opposite();
    let coker = cokernel(&alg.transpose_map(&f.p1, &f.p0, &f.f, &op)).0;
    let frozen: Vec<usize> = q.frozen().collect();
    let corner = op.fd().corner(&frozen)?;
    let field = Rationals;
    let mut out = full;
    for (k, &v) in frozen.iter().enumerate() {
        // radical at v: images of corner arrows ending at v
        let mut rad = field.zeros(coker.dim_at(v), 0);
        for a in &corner.quiver().arrows {
            if a.target == k + 1 {
                let b = op.fd().index_of(&a.id).expect("corner arrow is a basis element");
                rad = rad.hstack(&op.action(&coker, b));
            }
        }
        let top = coker.dim_at(v) - field.rank(&rad);
        out.g[v - 1] += top as i64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::modrep::is_isomorphic;

    fn a2() -> Algebra<Rationals> {
        Algebra::new(&fixtures::path_algebra(&fixtures::a2()), Rationals).unwrap()
    }

    fn b_lab() -> Algebra<Rationals> {
        Algebra::new(&fixtures::labardini_algebra().opposite(), Rationals).unwrap()
    }

    fn d(g: &[i64]) -> DeltaVector {
        DeltaVector::new(g.to_vec())
    }

    #[test]
    fn split() {
        assert_eq!(delta_split(&d(&[1, 0, -1])), (vec![1], vec![3]));
        assert_eq!(delta_split(&d(&[0, 0, 0])), (vec![], vec![]));
        assert_eq!(delta_split(&d(&[2, -1, 0])), (vec![1, 1], vec![2]));
    }

    #[test]
    fn sign_coherence() {
        assert!(is_sign_coherent(&d(&[1, 0, -1]), &d(&[2, 0, 0])));
        assert!(!is_sign_coherent(&d(&[1, 0, -1]), &d(&[-1, 0, 0])));
    }

    #[test]
    fn tropical_mutation() {
        let lab = fixtures::labardini();
        for i in 1..=3 {
            assert_eq!(mutate_delta(&d(&[1, 1, 1]), i, &lab).unwrap().sum(), 3);
        }
        assert_eq!(mutate_delta(&d(&[1, 1, 1]), 1, &lab).unwrap(), d(&[-1, 1, 3]));
        assert_eq!(mutate_delta(&d(&[0, 4, -2]), 1, &lab).unwrap(), d(&[0, 4, -2]));
        let a2 = fixtures::a2();
        let m = mutate_delta(&d(&[1, 0]), 1, &a2).unwrap();
        assert_eq!(m, d(&[-1, 0]));
        assert_eq!(mutate_delta(&m, 1, &a2.mutate(1).unwrap()).unwrap(), d(&[1, 0]));
        assert!(mutate_delta(&d(&[1, 0]), 2, &fixtures::a2_frozen()).is_err());
    }

    #[test]
    fn frozen_projection() {
        let q = IceQuiver::from_pairs(4, 3, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(project_frozen(&d(&[1, -1, 0, 2]), &q).unwrap(), d(&[1, -1, 0]));
        let lab = fixtures::labardini();
        assert_eq!(project_frozen(&d(&[1, 2, 3]), &lab).unwrap(), d(&[1, 2, 3]));
        let all = IceQuiver::from_pairs(2, 0, &[(1, 2)]).unwrap();
        assert!(project_frozen(&d(&[1, 1]), &all).unwrap().is_empty());
    }

    #[test]
    fn lift_trivial_cases() {
        let q = fixtures::a2_frozen();
        let alg = Algebra::new(&fixtures::path_algebra(&q), Rationals).unwrap();
        assert_eq!(lift_frozen(&d(&[2]), &q, &alg, Sampling::default()).unwrap(), d(&[2, 0]));
        let lab = fixtures::labardini();
        let b = b_lab();
        assert_eq!(lift_frozen(&d(&[1, 0, -1]), &lab, &b, Sampling::default()).unwrap(), d(&[1, 0, -1]));
        let lifted = lift_frozen(&d(&[-1]), &q, &alg, Sampling::default()).unwrap();
        assert_eq!(lifted.g[0], -1);
        let c = TwoTermComplex::zero(&alg, vec![], vec![2]);
        let (f, _) = generic_sample(&alg, &lifted, Sampling::default()).unwrap();
        assert_eq!(e_dim(&alg, &f, &c), 0);
        assert_eq!(e_dim(&alg, &c, &f), 0);
    }

    #[test]
    fn e_invariant_basics() {
        let a = a2();
        let id = TwoTermComplex::new(&a, vec![1], vec![1], vec![vec![a.basis_elem(a.fd().idempotent(1))]]);
        let any = TwoTermComplex::zero(&a, vec![2], vec![1]);
        assert_eq!(e_dim(&a, &id, &any), 0);
        let s1 = presentation_complex(&a, &a.simple(1));
        assert_eq!(e_dim(&a, &s1, &s1), 0);
        assert_eq!(e_dim_cokernel(&a, &s1, &s1), 0);
        let stalk = TwoTermComplex::zero(&a, vec![1], vec![]);
        let (g, _) = generic_sample(&a, &d(&[1, -1]), Sampling::default()).unwrap();
        assert_eq!(e_dim(&a, &g, &stalk), 0);
        let stalk2 = TwoTermComplex::zero(&a, vec![2], vec![]);
        let p1 = TwoTermComplex::zero(&a, vec![], vec![1]);
        let p2 = TwoTermComplex::zero(&a, vec![], vec![2]);
        // E(P -> 0, 0 -> P') = Hom(P, P')
        assert_eq!(e_dim(&a, &stalk, &p2), 0);
        assert_eq!(e_dim(&a, &stalk2, &p1), 1);
        assert_eq!(e_dim_cokernel(&a, &stalk2, &p1), 1);
        assert_eq!(e_dim(&a, &p1, &stalk2), 0);
    }

    #[test]
    fn generic_samples() {
        let a = a2();
        let (f, st) = generic_sample(&a, &d(&[1, -1]), Sampling::default()).unwrap();
        assert!(is_isomorphic(&f.cokernel(), &a.simple(1), 0).unwrap());
        assert_eq!(st.e_self, 0);
        let (_, st) = generic_sample(&a, &d(&[0, -1]), Sampling::default()).unwrap();
        assert_eq!(st.min_kernel_dim, vec![1, 1]);
        let b = b_lab();
        let (_, st) = generic_sample(&b, &d(&[1, 0, 0]), Sampling::default()).unwrap();
        assert_eq!((st.min_kernel_dim.clone(), st.e_self), (vec![0, 0, 0], 0));
        let (_, st) = generic_sample(&b, &d(&[1, 0, -1]), Sampling::with_seed(5)).unwrap();
        assert_eq!(st.min_kernel_dim, vec![1, 0, 1]);
        assert!(matches!(
            generic_sample(&b, &d(&[1, 0, -1]), Sampling { trials: 0, ..Sampling::default() }),
            Err(HomalgError::NoTrials)
        ));
    }

    #[test]
    fn double_formula_and_tau() {
        for alg in [a2(), b_lab()] {
            let n = alg.num_vertices();
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            for _ in 0..5 {
                let g: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                let delta = d(&g);
                let (f, st) = generic_sample(&alg, &delta, Sampling::with_seed(rng.gen())).unwrap();
                let pres = presentation_complex(&alg, &f.cokernel());
                assert_eq!(e_dim(&alg, &f, &f), e_dim_cokernel(&alg, &f, &f));
                assert_eq!(e_dim(&alg, &pres, &pres), st.hom_tau);
            }
        }
    }

    #[test]
    fn canonical_decompositions() {
        let a = a2();
        let c = canonical_decomposition(&a, &d(&[1, 1]), Sampling::default()).unwrap();
        assert_eq!(c.summands, vec![d(&[1, 0]), d(&[0, 1])]);
        assert!(c.e_vanishes);
        let c = canonical_decomposition(&a, &d(&[1, -1]), Sampling::default()).unwrap();
        assert_eq!(c.summands, vec![d(&[1, -1])]);
        let c = canonical_decomposition(&a, &d(&[-2, 0]), Sampling::default()).unwrap();
        assert_eq!(c.summands, vec![d(&[-1, 0]), d(&[-1, 0])]);
        let b = b_lab();
        let c = canonical_decomposition(&b, &d(&[1, 1, -1]), Sampling::default()).unwrap();
        assert_eq!(c.summands, vec![d(&[1, 0, -1]), d(&[0, 1, 0])]);
        assert!(c.e_vanishes);
        // a one-parameter family: the two summands are only defined over a
        // quadratic extension
        let c = canonical_decomposition(&b, &d(&[2, -2, 0]), Sampling::default()).unwrap();
        assert_eq!(c.summands, vec![d(&[1, -1, 0]), d(&[1, -1, 0])]);
        assert!(c.e_vanishes);
    }
}
