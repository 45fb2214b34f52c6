//! Potentials, cyclic derivatives and Jacobian algebras.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fdalg::{paths_of_length, resolve_word, AlgebraError, FDAlgebra, PathCombination, Word};
use crate::quiver::{id_order, IceQuiver, Quiver, QuiverError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PotentialError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("term {0:?} is not a closed cycle")]
    NotACycle(Vec<String>),
}

/// Integer combination of oriented cycles, each stored in its least rotation.
/// JSON: `{"terms":[[1,["c1","b1","a1"]],[1,["c2","b2","a2"]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Potential {
    pub terms: Vec<(i64, Vec<String>)>,
}

/// The least rotation of a cycle, comparing ids as `m9 < m10`.
pub fn canonical_rotation(cycle: &[String]) -> Vec<String> {
    (0..cycle.len())
        .map(|k| {
            let mut r = cycle[k..].to_vec();
            r.extend_from_slice(&cycle[..k]);
            r
        })
        .min_by(|a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| id_order(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or_default()
}

impl Potential {
    /// Validates the cycles against `q`, rotates them canonically and merges
    /// equal cycles.
    pub fn new(q: &Quiver, terms: Vec<(i64, Vec<String>)>) -> Result<Self, PotentialError> {
        let mut out: Vec<(i64, Vec<String>)> = Vec::new();
        for (c, cycle) in terms {
            let idx = resolve_word(q, &cycle)?;
            let closed = !idx.is_empty() && q.arrows[idx[0]].target == q.arrows[*idx.last().expect("nonempty")].source;
            if !closed {
                return Err(PotentialError::NotACycle(cycle));
            }
            let rot = canonical_rotation(&cycle);
            match out.iter_mut().find(|(_, w)| *w == rot) {
                Some(t) => t.0 += c,
                None => out.push((c, rot)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        Ok(Potential { terms: out })
    }

    pub fn zero() -> Self {
        Potential { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `d_a W = sum over W = u a v of v u`.
pub fn cyclic_derivative(q: &Quiver, w: &Potential, a: &str) -> Result<PathCombination, PotentialError> {
    if q.arrow(a).is_none() {
        return Err(QuiverError::UnknownArrow(a.to_string()).into());
    }
    let mut terms = Vec::new();
    for (c, cycle) in &w.terms {
        for (k, x) in cycle.iter().enumerate() {
            if x == a {
                let mut vu = cycle[k + 1..].to_vec();
                vu.extend_from_slice(&cycle[..k]);
                terms.push((*c, vu));
            }
        }
    }
    Ok(PathCombination::new(terms).simplified())
}

/// All nonzero cyclic derivatives, one per arrow.
pub fn jacobian_relations(q: &Quiver, w: &Potential) -> Result<Vec<PathCombination>, PotentialError> {
    let mut out = Vec::new();
    for a in &q.arrows {
        let d = cyclic_derivative(q, w, &a.id)?;
        if !d.terms.is_empty() {
            out.push(d);
        }
    }
    Ok(out)
}

/// The Jacobian algebra, certified finite-dimensional: every path of length
/// `length_bound + 1` must lie in the ideal of cyclic derivatives.
pub fn jacobian_algebra(q: &IceQuiver, w: &Potential, length_bound: usize) -> Result<FDAlgebra, PotentialError> {
    let quiver = q.as_quiver();
    let rels = jacobian_relations(&quiver, w)?;
    Ok(FDAlgebra::from_relations(&quiver, &rels, length_bound)?)
}

/// Whether every cyclic derivative of `w` vanishes in `alg`.
pub fn check_relations(alg: &FDAlgebra, w: &Potential) -> Result<bool, PotentialError> {
    for d in jacobian_relations(alg.quiver(), w)? {
        if !alg.element(&d)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether all paths of length `len` are zero in `alg`.
pub fn paths_vanish(alg: &FDAlgebra, len: usize) -> bool {
    let q = alg.quiver();
    paths_of_length(q, len).into_iter().all(|arrows| {
        let w = Word { source: q.arrows[*arrows.last().expect("nonempty")].source, target: q.arrows[arrows[0]].target, arrows };
        alg.word_element(&w).is_empty()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_string).collect()
    }

    fn labardini() -> IceQuiver {
        let arrows = [("a1", 1, 2), ("a2", 1, 2), ("b1", 2, 3), ("b2", 2, 3), ("c1", 3, 1), ("c2", 3, 1)];
        IceQuiver::new(3, 3, arrows.iter().map(|&(i, s, t)| Arrow::new(i, s, t)).collect()).unwrap()
    }

    fn lab_potential(q: &Quiver) -> Potential {
        Potential::new(
            q,
            vec![(1, words("c1 b1 a1")), (1, words("c2 b2 a2")), (-1, words("c1 b2 a1 c2 b1 a2"))],
        )
        .unwrap()
    }

    #[test]
    fn rotation_and_validation() {
        let q = labardini().as_quiver();
        assert_eq!(canonical_rotation(&words("b1 a1 c1")), words("a1 c1 b1"));
        let w = Potential::new(&q, vec![(1, words("b1 a1 c1")), (2, words("a1 c1 b1"))]).unwrap();
        assert_eq!(w.terms, vec![(3, words("a1 c1 b1"))]);
        assert!(matches!(Potential::new(&q, vec![(1, words("b1 a1"))]), Err(PotentialError::NotACycle(_))));
        assert!(Potential::new(&q, vec![(1, words("a1 b1 c1"))]).is_err());
    }

    #[test]
    fn derivatives() {
        let q = labardini().as_quiver();
        let w = Potential::new(&q, vec![(1, words("c1 b1 a1"))]).unwrap();
        assert_eq!(cyclic_derivative(&q, &w, "c1").unwrap().terms, vec![(1, words("b1 a1"))]);
        let w2 = Potential::new(&q, vec![(1, words("c1 b1 a1")), (1, words("c2 b2 a2"))]).unwrap();
        assert_eq!(cyclic_derivative(&q, &w2, "a1").unwrap().terms, vec![(1, words("c1 b1"))]);
        let lw = lab_potential(&q);
        let d = cyclic_derivative(&q, &lw, "c1").unwrap();
        let expected = PathCombination::parse("b1 a1 - b2 a1 c2 b1 a2").unwrap();
        assert_eq!(d, expected);
        assert!(cyclic_derivative(&q, &lw, "zz").is_err());
    }

    #[test]
    fn zero_potential() {
        let a2 = IceQuiver::from_pairs(2, 2, &[(1, 2)]).unwrap();
        let alg = jacobian_algebra(&a2, &Potential::zero(), 5).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(check_relations(&alg, &Potential::zero()).unwrap());
    }

    #[test]
    fn labardini_jacobian_algebra() {
        let q = labardini();
        let w = lab_potential(&q.as_quiver());
        let alg = jacobian_algebra(&q, &w, 8).unwrap();
        assert_eq!(alg.dim(), 36);
        let mut p1: Vec<String> = alg.ending_at(1).into_iter().map(|i| alg.basis()[i].label.clone()).collect();
        p1.sort();
        let mut expected: Vec<String> = [
            "e1", "c1", "c2", "c1b1", "c1b2", "c2b1", "c2b2", "c1b1a1", "c1b2a1", "c2b1a2", "c1b2a1c2", "c2b1a2c1",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        expected.sort();
        assert_eq!(p1, expected);
        assert!(check_relations(&alg, &w).unwrap());
        let zero = |s: &str| alg.element(&PathCombination::parse(s).unwrap()).unwrap().is_empty();
        assert!(zero("c1 b1 a2"));
        assert!(zero("c1 b1 a1 - c2 b2 a2"));
        assert!(zero("b1 a1 c2"));
        assert!(!zero("c1 b1 a1"));
        assert!(paths_vanish(&alg, 7));
        assert!(!paths_vanish(&alg, 4));
        assert!(alg.check_identity());
    }
}
