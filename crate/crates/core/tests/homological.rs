use proptest::prelude::*;
use qpbasis::field::Rationals;
use qpbasis::fixtures;
use qpbasis::genbasis::module_algebra;
use qpbasis::homalg::{
    e_dim, e_dim_cokernel, generic_sample, is_sign_coherent, mutate_delta, random_complex, DeltaVector, Sampling,
};
use qpbasis::modrep::{decompose, hom_dim, is_isomorphic, Algebra};
use qpbasis::quiver::IceQuiver;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn a3() -> Algebra<Rationals> {
    Algebra::new(&fixtures::path_algebra(&fixtures::a3()), Rationals).unwrap()
}

#[test]
fn translate_and_inverse_on_a3() {
    let alg = a3();
    // the non-projective indecomposables of the linear A3 path algebra
    let mut nonprojective = Vec::new();
    for v in 1..=3 {
        nonprojective.push(alg.injective(v));
        nonprojective.push(alg.simple(v));
    }
    for m in nonprojective {
        if (1..=3).any(|v| is_isomorphic(&m, &alg.projective(v), 1).unwrap()) {
            continue;
        }
        let t = alg.ar_translate(&m);
        assert!(!t.is_zero(), "{:?}", m.dims());
        let back = alg.ar_translate_inverse(&t);
        assert!(is_isomorphic(&back, &m, 2).unwrap(), "{:?}", m.dims());
    }
    for v in 1..=3 {
        assert!(alg.ar_translate(&alg.projective(v)).is_zero());
        assert!(alg.ar_translate_inverse(&alg.injective(v)).is_zero());
    }
}

#[test]
fn generic_cokernels_are_rigid_on_a3() {
    // a Dynkin quiver has finitely many orbits, so generic modules are rigid
    let alg = module_algebra(&fixtures::path_algebra(&fixtures::a3())).unwrap();
    for (k, g) in [[1, -1, 0], [2, -1, 1], [1, 1, -1], [-1, 2, -1], [0, 1, -2]].iter().enumerate() {
        let (f, stats) = generic_sample(&alg, &DeltaVector::new(g.to_vec()), Sampling::with_seed(k as u64)).unwrap();
        assert_eq!(e_dim(&alg, &f, &f), 0, "{g:?}");
        assert_eq!(stats.hom_tau, 0);
        let m = f.cokernel();
        assert_eq!(hom_dim(&m, &alg.ar_translate(&m)).unwrap(), 0);
        let parts = decompose(&m).unwrap();
        assert!(parts.iter().all(|p| !p.is_zero()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tropical_mutation_involution(
        pairs in proptest::collection::vec((1usize..=4, 1usize..=4), 0..6),
        g in proptest::collection::vec(-4i64..=4, 4),
        k in 1usize..=4,
    ) {
        let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(a, b)| a != b).collect();
        // keep one orientation per pair so no 2-cycles appear
        let mut kept: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if !kept.contains(&(b, a)) {
                kept.push((a, b));
            }
        }
        let q = IceQuiver::from_pairs(4, 4, &kept).unwrap();
        let d = DeltaVector::new(g);
        let d1 = mutate_delta(&d, k, &q).unwrap();
        let back = mutate_delta(&d1, k, &q.mutate(k).unwrap()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn e_formulas_agree_on_random_complexes(
        seed in 0u64..1000,
        src in proptest::collection::vec(1usize..=3, 0..3),
        tgt in proptest::collection::vec(1usize..=3, 0..3),
        src2 in proptest::collection::vec(1usize..=3, 0..3),
        tgt2 in proptest::collection::vec(1usize..=3, 0..3),
    ) {
        let alg = module_algebra(&fixtures::labardini_algebra()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_complex(&alg, &src, &tgt, 5, &mut rng);
        let g = random_complex(&alg, &src2, &tgt2, 5, &mut rng);
        prop_assert_eq!(e_dim(&alg, &f, &g), e_dim_cokernel(&alg, &f, &g));
    }

    #[test]
    fn sign_coherence_is_symmetric(a in proptest::collection::vec(-3i64..=3, 3), b in proptest::collection::vec(-3i64..=3, 3)) {
        let (a, b) = (DeltaVector::new(a), DeltaVector::new(b));
        prop_assert_eq!(is_sign_coherent(&a, &b), is_sign_coherent(&b, &a));
        prop_assert!(is_sign_coherent(&a, &a));
    }
}
