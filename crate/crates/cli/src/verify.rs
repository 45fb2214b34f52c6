//! The acceptance checks, grouped into the suites run by `qpbasis verify`.

use std::collections::BTreeMap;

use qpbasis::fixtures::{self, Fixture};
use qpbasis::field::{PrimeField, Rationals};
use qpbasis::genbasis::{
    generic_basis_element, linear_independence_check, module_algebra, subrepresentation_census, GenericValue,
    GenbasisError, PrimeChoice,
};
use qpbasis::homalg::{
    canonical_decomposition, e_dim, e_dim_cokernel, generic_sample, is_sign_coherent, mutate_delta,
    presentation_complex, DeltaVector, Sampling,
};
use qpbasis::laurent::{FractionExpr, LaurentPoly};
use qpbasis::modrep::{hom_dim, is_isomorphic, Algebra};
use qpbasis::seed::{enumerate_clusters, initial_seed, is_laurent_in_cluster, mutate_seed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

pub const SUITES: [&str; 4] = ["paper-example", "invariants", "mutation-commutes-acyclic", "independence"];

/// Expected value at `(1,0,-1)` on the Labardini fixture.
pub const EXAMPLE_VALUE: &str = "(x1^2 + x2^2 + x3^2)/(x1*x3)";

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: Value,
}

impl Criterion {
    fn new(id: u32, name: &'static str, pass: bool, detail: Value) -> Self {
        Criterion { id, name, pass, detail }
    }

    fn failed(id: u32, name: &'static str, err: impl std::fmt::Display) -> Self {
        Criterion { id, name, pass: false, detail: json!({ "error": err.to_string() }) }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub sampling: Sampling,
    pub primes: PrimeChoice,
    /// Random indices per fixture for the E-invariant check.
    pub samples: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { sampling: Sampling::default(), primes: PrimeChoice::default(), samples: 50 }
    }
}

/// All integer vectors in `[lo, hi]^n`, last coordinate fastest.
pub fn grid(n: usize, lo: i64, hi: i64) -> Vec<DeltaVector> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(DeltaVector::new).collect()
}

fn random_deltas(n: usize, count: usize, seed: u64) -> Vec<DeltaVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| DeltaVector::new((0..n).map(|_| rng.gen_range(-2..=2)).collect())).collect()
}

fn value_at(fx: &Fixture, d: &DeltaVector, s: &Settings) -> Result<GenericValue, GenbasisError> {
    generic_basis_element(d, &fx.algebra, &fx.quiver, s.sampling, &s.primes)
}

fn labardini() -> Fixture {
    fixtures::by_name("labardini").expect("built-in")
}

fn example_delta() -> DeltaVector {
    DeltaVector::new(vec![1, 0, -1])
}

pub fn example_value(s: &Settings) -> Criterion {
    const NAME: &str = "worked example value";
    match value_at(&labardini(), &example_delta(), s) {
        Ok(v) => {
            let pass = v.value.to_fraction_string() == EXAMPLE_VALUE;
            Criterion::new(1, NAME, pass, v.to_json())
        }
        Err(e) => Criterion::failed(1, NAME, e),
    }
}

pub fn submodule_census(s: &Settings) -> Criterion {
    const NAME: &str = "submodule census";
    let v = match value_at(&labardini(), &example_delta(), s) {
        Ok(v) => v,
        Err(e) => return Criterion::failed(2, NAME, e),
    };
    let expected = vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 1]];
    let mut pass = v.module.dims() == [1, 0, 1];
    let mut per_prime = BTreeMap::new();
    for p in [2u64, 3, 5, 7] {
        let m = v.module.reduce(PrimeField::new(p).expect("prime"));
        match subrepresentation_census(&m) {
            Ok(c) => {
                pass &= c.keys().cloned().collect::<Vec<_>>() == expected && c.values().all(|&x| x == 1);
                let listed: Vec<Value> = c.iter().map(|(e, n)| json!({ "e": e, "count": n })).collect();
                per_prime.insert(p.to_string(), Value::Array(listed));
            }
            Err(e) => return Criterion::failed(2, NAME, e),
        }
    }
    Criterion::new(2, NAME, pass, json!({ "dims": v.module.dims(), "subrepresentations": per_prime }))
}

pub fn adjacent_seeds(s: &Settings) -> Criterion {
    const NAME: &str = "Laurent in initial and adjacent seeds";
    let fx = labardini();
    let v = match value_at(&fx, &example_delta(), s) {
        Ok(v) => v.value,
        Err(e) => return Criterion::failed(3, NAME, e),
    };
    let s0 = initial_seed(&fx.quiver);
    let mut seeds = vec![("initial".to_string(), s0.clone())];
    for k in 1..=fx.quiver.m() {
        match mutate_seed(&s0, k) {
            Ok(sk) => seeds.push((format!("mu{k}"), sk)),
            Err(e) => return Criterion::failed(3, NAME, e),
        }
    }
    let mut detail = BTreeMap::new();
    let mut pass = true;
    for (name, seed) in &seeds {
        let ok = is_laurent_in_cluster(&v, seed).unwrap_or(false);
        pass &= ok;
        detail.insert(name.clone(), ok);
    }
    Criterion::new(3, NAME, pass, json!(detail))
}

pub fn index_sum(fixture_set: &[Fixture]) -> Criterion {
    const NAME: &str = "index sum preserved under mutation";
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for fx in fixture_set.iter().filter(|f| f.name == "labardini") {
        for d in grid(fx.quiver.n(), -3, 3) {
            for i in 1..=fx.quiver.m() {
                checked += 1;
                match mutate_delta(&d, i, &fx.quiver) {
                    Ok(d1) if d1.sum() == d.sum() => {}
                    other => failures.push(json!({ "delta": d.g, "vertex": i, "got": format!("{other:?}") })),
                }
            }
        }
    }
    Criterion::new(4, NAME, failures.is_empty(), json!({ "checked": checked, "failures": failures }))
}

pub fn involution(fixture_set: &[Fixture]) -> Criterion {
    const NAME: &str = "tropical mutation is an involution";
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for fx in fixture_set {
        let q = &fx.quiver;
        for i in 1..=q.m() {
            let q1 = match q.mutate(i) {
                Ok(q1) => q1,
                Err(e) => return Criterion::failed(5, NAME, e),
            };
            for d in grid(q.n(), -3, 3) {
                checked += 1;
                let back = mutate_delta(&d, i, q).and_then(|d1| mutate_delta(&d1, i, &q1));
                if back.as_ref() != Ok(&d) {
                    failures.push(json!({ "fixture": fx.name, "delta": d.g, "vertex": i }));
                }
            }
        }
    }
    Criterion::new(5, NAME, failures.is_empty(), json!({ "checked": checked, "failures": failures }))
}

/// Runs on the acyclic fixtures without frozen vertices in the set.
pub fn surjectivity(fixture_set: &[Fixture], s: &Settings) -> Criterion {
    const NAME: &str = "cluster variables reached";
    let mut detail = BTreeMap::new();
    let mut pass = true;
    for fx in fixture_set.iter().filter(|f| f.name == "a2" || f.name == "a3") {
        let name = fx.name.clone();
        let n = fx.quiver.n();
        let expected = match enumerate_clusters(&fx.quiver, 10_000) {
            Ok(e) => e.variables,
            Err(e) => return Criterion::failed(6, NAME, e),
        };
        let mut found: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
        for d in grid(n, -1, 1) {
            match value_at(fx, &d, s) {
                Ok(v) if !v.value.is_monomial() => found.push(v.value),
                Ok(_) => {}
                Err(e) => return Criterion::failed(6, NAME, e),
            }
        }
        let missing: Vec<&String> = expected.iter().filter(|(_, x)| !found.contains(x)).map(|(k, _)| k).collect();
        pass &= missing.is_empty();
        detail.insert(name, json!({ "cluster_variables": expected.len(), "missing": missing }));
    }
    Criterion::new(6, NAME, pass, json!(detail))
}

fn e_checks(alg: &Algebra<Rationals>, n: usize, s: &Settings) -> Result<(usize, Vec<Value>), String> {
    let mut failures = Vec::new();
    let deltas = random_deltas(n, s.samples, s.sampling.seed ^ 0x5eed);
    for (k, d) in deltas.iter().enumerate() {
        let (f, _) = generic_sample(alg, d, s.sampling.derive(k as u64)).map_err(|e| e.to_string())?;
        let h = e_dim(alg, &f, &f);
        let c = e_dim_cokernel(alg, &f, &f);
        let m = f.cokernel();
        let pres = presentation_complex(alg, &m);
        let hp = e_dim(alg, &pres, &pres);
        let cp = e_dim_cokernel(alg, &pres, &pres);
        let tau = hom_dim(&m, &alg.ar_translate(&m)).map_err(|e| e.to_string())?;
        if h != c || hp != cp || hp != tau {
            failures.push(json!({ "delta": d.g, "homotopy": h, "cokernel": c, "minimal": [hp, cp], "hom_tau": tau }));
        }
    }
    Ok((deltas.len(), failures))
}

pub fn e_invariant(fixture_set: &[Fixture], s: &Settings) -> Criterion {
    const NAME: &str = "E-invariant double formula";
    let mut detail = BTreeMap::new();
    let mut pass = true;
    for fx in fixture_set {
        let alg = match module_algebra(&fx.algebra) {
            Ok(a) => a,
            Err(e) => return Criterion::failed(7, NAME, e),
        };
        match e_checks(&alg, fx.quiver.n(), s) {
            Ok((count, failures)) => {
                pass &= failures.is_empty();
                detail.insert(fx.name.clone(), json!({ "samples": count, "failures": failures }));
            }
            Err(e) => return Criterion::failed(7, NAME, e),
        }
    }
    Criterion::new(7, NAME, pass, json!(detail))
}

pub fn sign_coherence(fixture_set: &[Fixture], s: &Settings) -> Criterion {
    const NAME: &str = "canonical summands sign-coherent";
    let per = if fixture_set.is_empty() { 0 } else { 100usize.div_ceil(fixture_set.len()) };
    let mut detail = BTreeMap::new();
    let mut pass = true;
    for fx in fixture_set {
        let alg = match module_algebra(&fx.algebra) {
            Ok(a) => a,
            Err(e) => return Criterion::failed(8, NAME, e),
        };
        let mut failures = Vec::new();
        let mut summands = 0;
        let mut orthogonal = 0;
        for (k, d) in random_deltas(fx.quiver.n(), per, s.sampling.seed ^ 0xc0de).iter().enumerate() {
            let cd = match canonical_decomposition(&alg, d, s.sampling.derive(k as u64)) {
                Ok(cd) => cd,
                Err(e) => return Criterion::failed(8, NAME, e),
            };
            summands += cd.summands.len();
            orthogonal += usize::from(cd.e_vanishes);
            for (i, a) in cd.summands.iter().enumerate() {
                for b in &cd.summands[i + 1..] {
                    if a != b && !is_sign_coherent(a, b) {
                        failures.push(json!({ "delta": d.g, "pair": [a.g, b.g] }));
                    }
                }
            }
        }
        pass &= failures.is_empty();
        detail.insert(fx.name.clone(), json!({ "deltas": per, "summands": summands, "e_orthogonal": orthogonal, "failures": failures }));
    }
    Criterion::new(8, NAME, pass, json!(detail))
}

pub fn monomial_rule(fixture_set: &[Fixture], s: &Settings) -> Criterion {
    const NAME: &str = "non-negative indices give monomials";
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for fx in fixture_set {
        let n = fx.quiver.n();
        for d in grid(n, 0, 3) {
            checked += 1;
            let expected = LaurentPoly::monomial(n, d.g.iter().map(|&x| x as i32).collect(), 1.into());
            match value_at(fx, &d, s) {
                Ok(v) if v.value == expected => {}
                Ok(v) => failures.push(json!({ "fixture": fx.name, "delta": d.g, "value": v.value.to_string() })),
                Err(e) => failures.push(json!({ "fixture": fx.name, "delta": d.g, "error": e.to_string() })),
            }
        }
    }
    Criterion::new(9, NAME, failures.is_empty(), json!({ "checked": checked, "failures": failures }))
}

pub fn mutation_commutes(s: &Settings) -> Criterion {
    const NAME: &str = "mutation commutes with the generic basis";
    let fx = fixtures::by_name("a2").expect("built-in");
    let q = &fx.quiver;
    let s0 = initial_seed(q);
    let mut checked = 0usize;
    let mut failures = Vec::new();
    let mut cache: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
    for k in 1..=q.m() {
        let s1 = match mutate_seed(&s0, k) {
            Ok(s1) => s1,
            Err(e) => return Criterion::failed(10, NAME, e),
        };
        let mutated = Fixture {
            name: format!("a2-mu{k}"),
            quiver: s1.quiver.clone(),
            potential: fx.potential.clone(),
            algebra: fixtures::path_algebra(&s1.quiver),
        };
        let images: Vec<FractionExpr> = s1.vars.iter().cloned().map(FractionExpr::from_poly).collect();
        for d in grid(q.n(), -2, 2) {
            checked += 1;
            let outcome = (|| -> Result<bool, String> {
                let d1 = mutate_delta(&d, k, q).map_err(|e| e.to_string())?;
                let rhs = match cache.get(&d.g) {
                    Some(v) => v.clone(),
                    None => {
                        let v = value_at(&fx, &d, s).map_err(|e| e.to_string())?.value;
                        cache.insert(d.g.clone(), v.clone());
                        v
                    }
                };
                let lhs = value_at(&mutated, &d1, s).map_err(|e| e.to_string())?.value;
                let lhs = lhs.substitute(&images).map_err(|e| e.to_string())?;
                Ok(lhs.equals(&FractionExpr::from_poly(rhs)))
            })();
            match outcome {
                Ok(true) => {}
                Ok(false) => failures.push(json!({ "vertex": k, "delta": d.g })),
                Err(e) => failures.push(json!({ "vertex": k, "delta": d.g, "error": e })),
            }
        }
    }
    Criterion::new(10, NAME, failures.is_empty(), json!({ "checked": checked, "failures": failures }))
}

pub fn independence(s: &Settings) -> Criterion {
    const NAME: &str = "linear independence on the A2 grid";
    let fx = fixtures::by_name("a2").expect("built-in");
    let mut values = Vec::new();
    for d in grid(2, -1, 1) {
        match value_at(&fx, &d, s) {
            Ok(v) => values.push(v.value),
            Err(e) => return Criterion::failed(11, NAME, e),
        }
    }
    let pass = linear_independence_check(&values);
    let listed: Vec<String> = values.iter().map(LaurentPoly::to_string).collect();
    let rank = if pass { values.len() } else { independence_rank(&values) };
    Criterion::new(11, NAME, pass, json!({ "values": listed, "count": values.len(), "rank": rank }))
}

/// Size of the largest independent prefix-greedy subset.
fn independence_rank(values: &[LaurentPoly]) -> usize {
    let mut kept: Vec<LaurentPoly> = Vec::new();
    for v in values {
        kept.push(v.clone());
        if !linear_independence_check(&kept) {
            kept.pop();
        }
    }
    kept.len()
}

pub fn jacobian_dims() -> Criterion {
    const NAME: &str = "Jacobian algebra dimensions and self-injectivity";
    let alg = fixtures::labardini_jacobian();
    let mut p1: Vec<String> = alg.ending_at(1).into_iter().map(|i| alg.basis()[i].label.clone()).collect();
    p1.sort();
    let mut expected: Vec<String> =
        ["e1", "c1", "c2", "c1b1", "c1b2", "c2b1", "c2b2", "c1b1a1", "c1b2a1", "c2b1a2", "c1b2a1c2", "c2b1a2c1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    expected.sort();
    let a = match Algebra::new(&alg, Rationals) {
        Ok(a) => a,
        Err(e) => return Criterion::failed(12, NAME, e),
    };
    let self_injective: Vec<bool> =
        (1..=3).map(|v| is_isomorphic(&a.projective(v), &a.injective(v), v as u64).unwrap_or(false)).collect();
    let pass = alg.dim() == 36 && p1 == expected && self_injective.iter().all(|&b| b);
    Criterion::new(
        12,
        NAME,
        pass,
        json!({ "dim": alg.dim(), "e1A": p1, "projective_is_injective": self_injective }),
    )
}

/// Runs one suite. `fixture_set` is used by the invariants suite.
pub fn run_suite(name: &str, fixture_set: &[Fixture], s: &Settings) -> Option<Vec<Criterion>> {
    let out = match name {
        "paper-example" => vec![example_value(s), submodule_census(s), adjacent_seeds(s), jacobian_dims()],
        "invariants" => vec![
            index_sum(fixture_set),
            involution(fixture_set),
            surjectivity(fixture_set, s),
            e_invariant(fixture_set, s),
            sign_coherence(fixture_set, s),
            monomial_rule(fixture_set, s),
        ],
        "mutation-commutes-acyclic" => vec![mutation_commutes(s)],
        "independence" => vec![independence(s)],
        _ => return None,
    };
    Some(out)
}

/// `{"suite":..,"pass":..,"criteria":[..]}`.
pub fn report(name: &str, criteria: &[Criterion]) -> Value {
    json!({ "suite": name, "pass": criteria.iter().all(|c| c.pass), "criteria": criteria })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(grid(3, -3, 3).len(), 343);
        assert_eq!(grid(2, -1, 1)[0].g, vec![-1, -1]);
        assert_eq!(grid(0, 0, 3).len(), 1);
    }

    #[test]
    fn empty_invariants_suite_passes() {
        let s = Settings { samples: 2, ..Settings::default() };
        let out = run_suite("invariants", &[], &s).unwrap();
        assert!(out.iter().all(|c| c.pass));
        assert!(run_suite("nope", &[], &s).is_none());
    }

    #[test]
    fn tropical_checks_on_labardini() {
        let fx = vec![labardini()];
        assert!(index_sum(&fx).pass);
        assert!(involution(&fx).pass);
    }
}
