//! Seeds, the exchange relation and cluster enumeration.
//!
//! Cluster variables are stored as Laurent polynomials in the initial
//! variables `x1..xn`, so membership questions reduce to exact division.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{FractionExpr, LaurentError, LaurentPoly};
use crate::quiver::{IceQuiver, QuiverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeedError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("exchange relation did not give a Laurent polynomial: {0}")]
    Laurent(#[from] LaurentError),
    #[error("seed has {vars} variables but its quiver has {n} vertices")]
    Arity { vars: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeed", into = "RawSeed")]
pub struct Seed {
    pub quiver: IceQuiver,
    pub vars: Vec<LaurentPoly>,
    pub history: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSeed {
    quiver: IceQuiver,
    vars: Vec<String>,
    history: Vec<usize>,
}

impl TryFrom<RawSeed> for Seed {
    type Error = SeedError;
    fn try_from(r: RawSeed) -> Result<Self, SeedError> {
        let n = r.quiver.n();
        if r.vars.len() != n {
            return Err(SeedError::Arity { vars: r.vars.len(), n });
        }
        let vars = r.vars.iter().map(|s| LaurentPoly::parse(s, n)).collect::<Result<_, _>>()?;
        Ok(Seed { quiver: r.quiver, vars, history: r.history })
    }
}

impl From<Seed> for RawSeed {
    fn from(s: Seed) -> Self {
        RawSeed { quiver: s.quiver, vars: s.vars.iter().map(|v| v.to_string()).collect(), history: s.history }
    }
}

pub fn initial_seed(q: &IceQuiver) -> Seed {
    let n = q.n();
    Seed { quiver: q.clone(), vars: (0..n).map(|i| LaurentPoly::var(n, i)).collect(), history: Vec::new() }
}

/// `(prod u_j^{#k->j} + prod u_j^{#j->k}) / u_k`, as an exact quotient.
fn exchange(q: &IceQuiver, vars: &[LaurentPoly], k: usize) -> Result<LaurentPoly, LaurentError> {
    let nv = vars[0].nvars();
    let mut out_prod = LaurentPoly::one(nv);
    let mut in_prod = LaurentPoly::one(nv);
    for j in 1..=q.n() {
        let (o, i) = (q.count(k, j), q.count(j, k));
        if o > 0 {
            out_prod = &out_prod * &vars[j - 1].pow(o as u32);
        }
        if i > 0 {
            in_prod = &in_prod * &vars[j - 1].pow(i as u32);
        }
    }
    (&out_prod + &in_prod).div_exact(&vars[k - 1])
}

pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed, SeedError> {
    let quiver = s.quiver.mutate(k)?;
    let mut vars = s.vars.clone();
    vars[k - 1] = exchange(&s.quiver, &s.vars, k)?;
    let mut history = s.history.clone();
    history.push(k);
    Ok(Seed { quiver, vars, history })
}

/// `yhat_j = prod_i x_i^{#(i->j) - #(j->i)}` for `j = 1..=n`.
pub fn yhat(q: &IceQuiver) -> Vec<LaurentPoly> {
    let n = q.n();
    let b = q.exchange_matrix();
    (0..n)
        .map(|j| {
            let e = (0..n).map(|i| b.get(i, j) as i32).collect();
            LaurentPoly::monomial(n, e, 1.into())
        })
        .collect()
}

/// Result of a breadth-first closure under mutation.
#[derive(Clone, Debug)]
pub struct ClusterEnumeration {
    /// Each cluster as its mutable variables in canonical text, sorted.
    pub clusters: BTreeSet<Vec<String>>,
    /// Distinct mutable cluster variables, keyed by canonical text.
    pub variables: BTreeMap<String, LaurentPoly>,
    pub truncated: bool,
}

fn cluster_key(s: &Seed) -> Vec<String> {
    let mut key: Vec<String> = s.vars[..s.quiver.m()].iter().map(|v| v.to_string()).collect();
    key.sort();
    key
}

/// Explores seeds by mutation until closure or until `max_seeds` distinct
/// clusters have been seen.
pub fn enumerate_clusters(q: &IceQuiver, max_seeds: usize) -> Result<ClusterEnumeration, SeedError> {
    let start = initial_seed(q);
    let mut out = ClusterEnumeration { clusters: BTreeSet::new(), variables: BTreeMap::new(), truncated: false };
    let mut queue = VecDeque::new();
    out.clusters.insert(cluster_key(&start));
    queue.push_back(start);
    'bfs: while let Some(s) = queue.pop_front() {
        for v in &s.vars[..q.m()] {
            out.variables.entry(v.to_string()).or_insert_with(|| v.clone());
        }
        for k in 1..=q.m() {
            let t = mutate_seed(&s, k)?;
            let key = cluster_key(&t);
            if out.clusters.contains(&key) {
                continue;
            }
            if out.clusters.len() >= max_seeds {
                out.truncated = true;
                break 'bfs;
            }
            out.clusters.insert(key);
            queue.push_back(t);
        }
    }
    // variables of seeds still waiting in the queue
    for s in queue {
        for v in &s.vars[..q.m()] {
            out.variables.entry(v.to_string()).or_insert_with(|| v.clone());
        }
    }
    Ok(out)
}

/// The initial variables written as Laurent polynomials in the cluster of `s`.
pub fn initial_in_cluster(s: &Seed) -> Result<Vec<LaurentPoly>, SeedError> {
    let mut t = initial_seed(&s.quiver);
    for &k in s.history.iter().rev() {
        t = mutate_seed(&t, k)?;
    }
    Ok(t.vars)
}

/// Whether `p` (in the initial variables) is a Laurent polynomial in the
/// cluster variables of `s`.
pub fn is_laurent_in_cluster(p: &LaurentPoly, s: &Seed) -> Result<bool, SeedError> {
    let images: Vec<FractionExpr> = initial_in_cluster(s)?.into_iter().map(FractionExpr::from_poly).collect();
    Ok(is_laurent_fraction(&p.substitute(&images)?))
}

/// Membership for a value given as a fraction in the initial variables.
pub fn is_fraction_laurent_in_cluster(f: &FractionExpr, s: &Seed) -> Result<bool, SeedError> {
    let images: Vec<FractionExpr> = initial_in_cluster(s)?.into_iter().map(FractionExpr::from_poly).collect();
    let num = f.num.substitute(&images)?;
    let den = f.den.substitute(&images)?;
    Ok(is_laurent_fraction(&num.mul(&den.inv()?)))
}

fn is_laurent_fraction(f: &FractionExpr) -> bool {
    f.normalize().is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    fn a2() -> IceQuiver {
        IceQuiver::from_pairs(2, 2, &[(1, 2)]).unwrap()
    }

    fn labardini() -> IceQuiver {
        let arrows = [("a1", 1, 2), ("a2", 1, 2), ("b1", 2, 3), ("b2", 2, 3), ("c1", 3, 1), ("c2", 3, 1)];
        IceQuiver::new(3, 3, arrows.iter().map(|&(i, s, t)| Arrow::new(i, s, t)).collect()).unwrap()
    }

    #[test]
    fn initial_seeds() {
        let s = initial_seed(&a2());
        assert_eq!(s.vars, vec![p("x1", 2), p("x2", 2)]);
        let f = IceQuiver::from_pairs(3, 2, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(initial_seed(&f).vars.len(), 3);
    }

    #[test]
    fn a2_mutations() {
        let s = initial_seed(&a2());
        let s1 = mutate_seed(&s, 1).unwrap();
        assert_eq!(s1.vars[0], p("x1^-1*x2 + x1^-1", 2));
        assert_eq!(mutate_seed(&s1, 1).unwrap().vars, s.vars);
        let s12 = mutate_seed(&s1, 2).unwrap();
        // (x1 + x2 + 1)/(x1 x2), by hand
        assert_eq!(s12.vars[1], p("x2^-1 + x1^-1 + x1^-1*x2^-1", 2));
        assert_eq!(s12.history, vec![1, 2]);
    }

    #[test]
    fn yhat_values() {
        let y = yhat(&labardini());
        assert_eq!(y[2], p("x1^-2*x2^2", 3));
        assert_eq!(&y[0] * &y[2], p("x1^-2*x3^2", 3));
        let iso = IceQuiver::from_pairs(3, 3, &[(1, 2)]).unwrap();
        assert_eq!(yhat(&iso)[2], LaurentPoly::one(3));
    }

    #[test]
    fn finite_type_counts() {
        let e = enumerate_clusters(&a2(), 100).unwrap();
        assert!(!e.truncated);
        assert_eq!(e.variables.len(), 5);
        assert_eq!(e.clusters.len(), 5);
        let a3 = IceQuiver::from_pairs(3, 3, &[(1, 2), (2, 3)]).unwrap();
        let e = enumerate_clusters(&a3, 100).unwrap();
        assert!(!e.truncated);
        assert_eq!(e.variables.len(), 9);
        assert_eq!(e.clusters.len(), 14);
    }

    #[test]
    fn labardini_is_infinite() {
        let e = enumerate_clusters(&labardini(), 50).unwrap();
        assert!(e.truncated);
        assert_eq!(e.clusters.len(), 50);
    }

    #[test]
    fn laurent_membership() {
        let s = initial_seed(&labardini());
        assert!(is_laurent_in_cluster(&p("x1", 3), &s).unwrap());
        let v = p("x1^2 + x2^2 + x3^2", 3).div_exact(&p("x1*x3", 3)).unwrap();
        assert!(is_laurent_in_cluster(&v, &s).unwrap());
        let s2 = initial_seed(&a2());
        let not = FractionExpr::new(p("x1*x2 + x1 + 1", 2), p("x2 + 1", 2)).unwrap();
        assert!(!is_fraction_laurent_in_cluster(&not, &s2).unwrap());
        // in the cluster {y1 = (x2+1)/x1, x2}: x1 = (x2+1)/y1 is Laurent, 1/x1 is not
        let s1 = mutate_seed(&s2, 1).unwrap();
        assert!(is_laurent_in_cluster(&p("x1", 2), &s1).unwrap());
        assert!(!is_laurent_in_cluster(&p("x1^-1", 2), &s1).unwrap());
        assert!(is_laurent_in_cluster(&s1.vars[0], &s1).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let s = mutate_seed(&initial_seed(&a2()), 1).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains(r#""vars":["x1^-1*x2 + x1^-1","x2"]"#));
        let back: Seed = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::quiver::Arrow;
    use proptest::prelude::*;

    fn fixtures() -> Vec<IceQuiver> {
        let lab = [("a1", 1, 2), ("a2", 1, 2), ("b1", 2, 3), ("b2", 2, 3), ("c1", 3, 1), ("c2", 3, 1)];
        vec![
            IceQuiver::from_pairs(2, 2, &[(1, 2)]).unwrap(),
            IceQuiver::from_pairs(3, 3, &[(1, 2), (2, 3)]).unwrap(),
            IceQuiver::new(3, 3, lab.iter().map(|&(i, s, t)| Arrow::new(i, s, t)).collect()).unwrap(),
            IceQuiver::from_pairs(3, 2, &[(1, 2), (2, 3), (3, 1)]).unwrap(),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_walks_stay_laurent(which in 0usize..4, walk in prop::collection::vec(1usize..4, 0..=8)) {
            let q = &fixtures()[which];
            let mut s = initial_seed(q);
            for k in walk {
                let k = (k - 1) % q.m() + 1;
                // mutate_seed fails if an exchange quotient is not Laurent
                let t = mutate_seed(&s, k).unwrap();
                for f in q.frozen() {
                    prop_assert_eq!(&t.vars[f - 1], &LaurentPoly::var(q.n(), f - 1));
                }
                prop_assert_eq!(&mutate_seed(&t, k).unwrap().vars, &s.vars);
                s = t;
            }
            for v in &s.vars {
                prop_assert!(is_laurent_in_cluster(v, &s).unwrap());
            }
        }
    }
}
