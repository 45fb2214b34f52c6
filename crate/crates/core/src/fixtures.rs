//! Standard quivers, potentials and algebras used throughout the tests, the
//! guide and the command line.

use crate::fdalg::{paths_of_length, FDAlgebra, PathCombination};
use crate::potential::{jacobian_algebra, Potential};
use crate::quiver::{Arrow, IceQuiver, Quiver};

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

/// `1 -> 2`.
pub fn a2() -> IceQuiver {
    IceQuiver::new(2, 2, vec![Arrow::new("a", 1, 2)]).expect("valid")
}

/// `1 -> 2 -> 3`.
pub fn a3() -> IceQuiver {
    IceQuiver::new(3, 3, vec![Arrow::new("a", 1, 2), Arrow::new("b", 2, 3)]).expect("valid")
}

/// `1 -> 2` with vertex 2 frozen.
pub fn a2_frozen() -> IceQuiver {
    IceQuiver::new(2, 1, vec![Arrow::new("a", 1, 2)]).expect("valid")
}

/// Double arrows `a1,a2: 1 -> 2`, `b1,b2: 2 -> 3`, `c1,c2: 3 -> 1`.
pub fn labardini() -> IceQuiver {
    let arrows = [("a1", 1, 2), ("a2", 1, 2), ("b1", 2, 3), ("b2", 2, 3), ("c1", 3, 1), ("c2", 3, 1)];
    IceQuiver::new(3, 3, arrows.iter().map(|&(i, s, t)| Arrow::new(i, s, t)).collect()).expect("valid")
}

/// `c1 b1 a1 + c2 b2 a2 - c1 b2 a1 c2 b1 a2`.
pub fn labardini_potential() -> Potential {
    Potential::new(
        &labardini().as_quiver(),
        vec![(1, words("c1 b1 a1")), (1, words("c2 b2 a2")), (-1, words("c1 b2 a1 c2 b1 a2"))],
    )
    .expect("valid potential")
}

/// The explicit relation list of the Labardini Jacobian algebra, including
/// the vanishing of non-alternating paths of length 4 and all paths of
/// length 7.
pub fn labardini_relations() -> Vec<PathCombination> {
    let listed = [
        "c1 b1 - c2 b1 a2 c1 b2",
        "c2 b2 - c1 b2 a1 c2 b1",
        "b1 a1 - b2 a1 c2 b1 a2",
        "b2 a2 - b1 a2 c1 b2 a1",
        "a1 c1 - a2 c1 b2 a1 c2",
        "a2 c2 - a1 c2 b1 a2 c1",
        "c1 b1 a2",
        "c2 b2 a1",
        "c1 b2 a2",
        "c2 b1 a1",
        "b1 a1 c2",
        "b2 a2 c1",
        "b1 a2 c2",
        "b2 a1 c1",
        "a1 c1 b2",
        "a2 c2 b1",
        "a1 c2 b2",
        "a2 c1 b1",
    ];
    let mut rels: Vec<PathCombination> =
        listed.iter().map(|s| PathCombination::parse(s).expect("fixture relation")).collect();
    let q = labardini().as_quiver();
    for w in paths_of_length(&q, 4) {
        let idx: Vec<char> = w.iter().map(|&a| q.arrows[a].id.chars().last().expect("id")).collect();
        let alternating = idx.windows(2).all(|p| p[0] != p[1]);
        if !alternating {
            rels.push(monomial(&q, &w));
        }
    }
    for w in paths_of_length(&q, 7) {
        rels.push(monomial(&q, &w));
    }
    rels
}

fn monomial(q: &Quiver, w: &[usize]) -> PathCombination {
    PathCombination::new(vec![(1, w.iter().map(|&a| q.arrows[a].id.clone()).collect())])
}

/// The Labardini algebra from the hard-coded relation list.
pub fn labardini_algebra() -> FDAlgebra {
    FDAlgebra::from_relations(&labardini().as_quiver(), &labardini_relations(), 8).expect("stabilizes")
}

/// The Labardini algebra recomputed from the potential.
pub fn labardini_jacobian() -> FDAlgebra {
    jacobian_algebra(&labardini(), &labardini_potential(), 8).expect("stabilizes")
}

/// Path algebra of an acyclic quiver (potential zero).
pub fn path_algebra(q: &IceQuiver) -> FDAlgebra {
    jacobian_algebra(q, &Potential::zero(), q.n().max(1) + 1).expect("acyclic quiver")
}

/// A named fixture: quiver, potential and algebra.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub quiver: IceQuiver,
    pub potential: Potential,
    pub algebra: FDAlgebra,
}

pub const NAMES: [&str; 4] = ["a2", "a3", "a2-frozen", "labardini"];

pub fn by_name(name: &str) -> Option<Fixture> {
    let (name, quiver, potential) = match name {
        "a2" => ("a2", a2(), Potential::zero()),
        "a3" => ("a3", a3(), Potential::zero()),
        "a2-frozen" => ("a2-frozen", a2_frozen(), Potential::zero()),
        "labardini" => ("labardini", labardini(), labardini_potential()),
        _ => return None,
    };
    let algebra = if name == "labardini" { labardini_algebra() } else { path_algebra(&quiver) };
    Some(Fixture { name: name.to_string(), quiver, potential, algebra })
}
