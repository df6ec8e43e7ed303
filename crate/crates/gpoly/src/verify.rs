//! Self-check property suite shared by the tests and the CLI.
//!
//! Every property pits two independent computations against each other
//! (path counting vs. basis activities vs. the cyclic-flat decomposition,
//! Möbius recursion vs. its closed form, computed polynomials vs. frozen
//! regression values), so a defect in any one backend surfaces as a named
//! counterexample instead of a silent wrong answer.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{catalog_lookup, realize};
use crate::decomp::{chain_poset, chain_realization_matches, g_polynomial};
use crate::error::Result;
use crate::matroid::{ElementOrder, ElementSet, Matroid};
use crate::poly::{binomial, narayana, IntPolynomial};
use crate::schubert::{catalan_matroid, g_uniform, SchubertMatroid};

/// Tuning for the randomized/exhaustive sweeps.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Largest ground set for the Schubert sweeps (exhaustive over all
    /// upper sets per size).
    pub max_n: usize,
    /// If set, check only this many sampled upper sets per ground-set size
    /// instead of all of them.
    pub samples: Option<usize>,
    /// Seed for sampling and for the random element orders.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 8, samples: None, seed: 0 }
    }
}

/// Result of one property: how many instances were checked, and the first
/// counterexample if any.
#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub instances: usize,
    pub failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `g/t` with `t-1` substituted for `t` — the shifted form whose
/// nonnegativity the suite checks for Schubert matroids.
pub fn shifted_g(g: &IntPolynomial) -> Result<IntPolynomial> {
    g.div_t()?.compose_shift(-1)
}

/// Run every property; the returned list is in a fixed order.
pub fn run_all(opts: &VerifyOptions) -> Vec<PropertyOutcome> {
    vec![
        delannoy_matches_activities(opts),
        path_activities_match_oracle(opts),
        uniform_closed_form(opts),
        admissible_path_bijection(opts),
        decomposition_matches_activities(opts),
        lambda_closed_form(),
        chain_schuberts_match(),
        structural_identities(),
        shifted_nonnegativity(opts),
        narayana_catalan(),
        catalog_regressions(),
        tutte_order_independence(opts),
    ]
}

// ------------------------------------------------------------- instances

/// All Schubert matroids with ground set up to `opts.max_n`, exhaustively
/// over upper sets (deterministic order), optionally sampled per size.
/// `clean` keeps only instances without loops or coloops.
fn schubert_instances(opts: &VerifyOptions, clean: bool) -> Vec<SchubertMatroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for n in 1..=opts.max_n {
        let mut this_size = Vec::new();
        for mask in 1u64..(1 << n) {
            let upper: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let s = SchubertMatroid::new(n, upper).expect("constructed in range");
            let (loops, coloops) = s.loops_coloops();
            if clean && !(loops.is_empty() && coloops.is_empty()) {
                continue;
            }
            this_size.push(s);
        }
        if let Some(k) = opts.samples {
            this_size.shuffle(&mut rng);
            this_size.truncate(k);
        }
        out.extend(this_size);
    }
    out
}

fn describe(s: &SchubertMatroid) -> String {
    format!("S({}, {})", s.n(), s.upper_set())
}

/// The fixed catalog entries (no parameters), realized.
fn fixed_catalog() -> Vec<(&'static str, Matroid)> {
    [
        "ag23", "ag32", "ag32p", "fano", "k123", "k33", "k4", "k5", "nonfano", "nonpappus",
        "pappus", "r8", "vamos", "w3", "w4", "w5",
    ]
    .iter()
    .map(|&name| {
        let spec = catalog_lookup(name, &BTreeMap::new()).expect("known name");
        (name, realize(&spec).expect("catalog entries realize").into_matroid())
    })
    .collect()
}

// ------------------------------------------------------------ properties

/// Path counting and the activity formula produce the same polynomial.
fn delannoy_matches_activities(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "delannoy-matches-activities";
    let mut instances = 0;
    for s in schubert_instances(opts, true) {
        instances += 1;
        let by_paths = s.g_delannoy().expect("clean instance");
        let by_bases = s.g_activities().expect("clean instance");
        if by_paths != by_bases {
            return fail(name, instances, format!(
                "{}: paths give {by_paths}, activities give {by_bases}",
                describe(&s)
            ));
        }
    }
    pass(name, instances)
}

/// The lattice-path activity counts agree with the fundamental-circuit /
/// fundamental-cocircuit definition on every basis (loops and coloops
/// included).
fn path_activities_match_oracle(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "path-activities-match-oracle";
    let mut instances = 0;
    for s in schubert_instances(opts, false) {
        let m = s.to_matroid();
        let ord = ElementOrder::identity(s.n());
        for &b in m.bases() {
            instances += 1;
            let fast = s.path_activities(b).expect("basis of the instance");
            let slow = m.activities(&ord, b).expect("basis of the instance");
            if fast != slow {
                return fail(name, instances, format!(
                    "{} basis {b}: path activities {fast:?}, oracle {slow:?}",
                    describe(&s)
                ));
            }
        }
    }
    pass(name, instances)
}

/// Path counting on uniform matroids reproduces the closed-form binomial
/// expression for their coefficients.
fn uniform_closed_form(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "uniform-closed-form";
    let mut instances = 0;
    for n in 2..=opts.max_n {
        for r in 1..n {
            instances += 1;
            let s = SchubertMatroid::new(n, (1..=r).collect()).expect("in range");
            let by_paths = s.g_delannoy().expect("uniform is clean for 1 <= r < n");
            let closed = g_uniform(r, n).expect("1 <= r < n");
            if by_paths != closed {
                return fail(name, instances, format!(
                    "U_{{{r},{n}}}: paths give {by_paths}, closed form {closed}"
                ));
            }
        }
    }
    pass(name, instances)
}

/// Region-respecting paths are admissible exactly when their basis has
/// activity pair (0,1), and the number of admissible paths landing on a
/// basis with `d` diagonals is `C(alpha, d)`.
fn admissible_path_bijection(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "admissible-path-bijection";
    let mut instances = 0;
    for s in schubert_instances(opts, true) {
        instances += 1;
        let m = s.to_matroid();
        let ord = ElementOrder::identity(s.n());
        let mut per_basis: HashMap<(ElementSet, usize), u64> = HashMap::new();
        for p in s.region_paths().expect("clean instance") {
            let b = s.basis_of_path(&p).expect("region paths stay in range");
            let admissible = s.is_admissible(&p).expect("clean instance");
            let lands_right = s.is_basis_set(b)
                && s.path_activities(b).expect("checked basis") == (0, 1);
            if admissible != lands_right {
                return fail(name, instances, format!(
                    "{} path {p}: admissible={admissible} but basis {b} {}",
                    describe(&s),
                    if lands_right { "has activities (0,1)" } else { "does not" }
                ));
            }
            if admissible {
                *per_basis.entry((b, p.diagonals())).or_insert(0) += 1;
            }
        }
        for &b in m.bases() {
            if s.path_activities(b).expect("basis") != (0, 1) {
                continue;
            }
            let alpha = m.alpha(&ord, b).expect("basis");
            for d in 0..=alpha {
                let got = per_basis.get(&(b, d)).copied().unwrap_or(0);
                if BigInt::from(got) != binomial(alpha, d) {
                    return fail(name, instances, format!(
                        "{} basis {b} (alpha {alpha}): {got} admissible paths with {d} \
                         diagonals, expected C({alpha},{d})",
                        describe(&s)
                    ));
                }
            }
        }
    }
    pass(name, instances)
}

/// The cyclic-flat-chain decomposition reproduces the activity formula on
/// realized Schubert matroids.
fn decomposition_matches_activities(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "decomposition-matches-activities";
    let mut instances = 0;
    for s in schubert_instances(opts, true) {
        instances += 1;
        let direct = s.g_activities().expect("clean instance");
        let decomposed = g_polynomial(&s.to_matroid());
        if direct != decomposed {
            return fail(name, instances, format!(
                "{}: activities give {direct}, decomposition gives {decomposed}",
                describe(&s)
            ));
        }
    }
    pass(name, instances)
}

/// The Möbius recursion for the chain coefficients agrees with the
/// alternating-sum closed form on every chain of every catalog entry.
fn lambda_closed_form() -> PropertyOutcome {
    let name = "lambda-closed-form";
    let mut instances = 0;
    for (entry, m) in fixed_catalog() {
        let poset = chain_poset(&m).expect("catalog entries have no loops/coloops");
        for chain in poset.chains() {
            instances += 1;
            let by_recursion = poset.lambda(chain).expect("own chain");
            let by_sum = poset.lambda_closed_form(chain).expect("own chain");
            if by_recursion != by_sum {
                return fail(name, instances, format!(
                    "{entry} chain {:?}: recursion {by_recursion}, closed form {by_sum}",
                    chain.flats()
                ));
            }
        }
    }
    pass(name, instances)
}

/// Realizing the Schubert matroid attached to a chain reproduces exactly
/// that chain of cyclic flats (after relabeling), for every chain of every
/// catalog entry on at most nine elements.
fn chain_schuberts_match() -> PropertyOutcome {
    let name = "chain-schuberts-match";
    let mut instances = 0;
    for (entry, m) in fixed_catalog() {
        if m.n() > 9 {
            continue;
        }
        let poset = chain_poset(&m).expect("catalog entries have no loops/coloops");
        for chain in poset.chains() {
            instances += 1;
            match chain_realization_matches(m.n(), chain) {
                Ok(true) => {}
                Ok(false) => {
                    return fail(name, instances, format!(
                        "{entry} chain {:?}: realized cyclic flats differ",
                        chain.flats()
                    ));
                }
                Err(e) => return fail(name, instances, format!("{entry}: {e}")),
            }
        }
    }
    pass(name, instances)
}

/// Structural identities: the linear coefficient of g is the beta
/// invariant; for connected entries g/t evaluates to 1 at -1 and to beta
/// at 0; g is multiplicative over direct sums.
fn structural_identities() -> PropertyOutcome {
    let name = "structural-identities";
    let mut instances = 0;

    let mut entries: Vec<(String, Matroid)> = fixed_catalog()
        .into_iter()
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    for r in 1..=5 {
        entries.push((format!("catalan(r={r})"), catalan_matroid(r).expect("in range").to_matroid()));
    }

    for (entry, m) in &entries {
        instances += 1;
        let g = g_polynomial(m);
        let beta = BigInt::from(m.beta());
        if g.coeff(1) != beta {
            return fail(name, instances, format!(
                "{entry}: linear coefficient {} but beta {beta}", g.coeff(1)
            ));
        }
        if m.is_connected() && m.n() >= 2 {
            let reduced = g.div_t().expect("g has no constant term");
            if reduced.eval_i64(-1) != BigInt::from(1) {
                return fail(name, instances, format!(
                    "{entry}: (g/t)(-1) = {}, expected 1", reduced.eval_i64(-1)
                ));
            }
            if reduced.eval_i64(0) != beta {
                return fail(name, instances, format!(
                    "{entry}: (g/t)(0) = {}, expected beta = {beta}", reduced.eval_i64(0)
                ));
            }
        }
    }

    // multiplicativity over direct sums, with frozen values
    let two_point = Matroid::from_base_lists(2, &[vec![1], vec![2]], true).expect("U_{1,2}");
    let cat3 = catalan_matroid(3).expect("in range").to_matroid();
    for (label, a, b, expect) in [
        ("U_{1,2} + U_{1,2}", &two_point, &two_point, IntPolynomial::from_coeffs([0, 0, 1])),
        ("Cat_3 + U_{1,2}", &cat3, &two_point, IntPolynomial::from_coeffs([0, 0, 2, 1])),
    ] {
        instances += 1;
        let sum = a.direct_sum(b).expect("disjoint after relabeling");
        let g = g_polynomial(&sum);
        let product = &g_polynomial(a) * &g_polynomial(b);
        if g != product || g != expect {
            return fail(name, instances, format!(
                "{label}: g {g}, factor product {product}, expected {expect}"
            ));
        }
    }
    pass(name, instances)
}

/// The shifted form (g/t)(t-1) has nonnegative coefficients for every
/// Schubert matroid in the sweep.
fn shifted_nonnegativity(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "shifted-nonnegativity";
    let mut instances = 0;
    for s in schubert_instances(opts, true) {
        instances += 1;
        let g = s.g_activities().expect("clean instance");
        let shifted = shifted_g(&g).expect("g has no constant term");
        if !shifted.has_nonnegative_coeffs() {
            return fail(name, instances, format!(
                "{}: shifted form {shifted} has a negative coefficient",
                describe(&s)
            ));
        }
    }
    pass(name, instances)
}

/// The shifted form of the Catalan matroid's polynomial is a Narayana
/// polynomial.
fn narayana_catalan() -> PropertyOutcome {
    let name = "narayana-catalan";
    let mut instances = 0;
    for r in 2..=6 {
        instances += 1;
        let s = catalan_matroid(r).expect("in range");
        let shifted = shifted_g(&s.g_activities().expect("clean"))
            .expect("g has no constant term");
        let expected = narayana(r - 1);
        if shifted != expected {
            return fail(name, instances, format!(
                "catalan(r={r}): shifted form {shifted}, Narayana gives {expected}"
            ));
        }
    }
    pass(name, instances)
}

/// One frozen regression row: ascending coefficients of g and of the
/// shifted form (g/t)(t-1).
struct Pin {
    name: &'static str,
    catalan_r: Option<usize>,
    g: &'static [i64],
    shifted: &'static [i64],
}

/// Frozen g-polynomials for the catalog (both columns of the regression
/// table). Coefficients ascending.
static PINS: &[Pin] = &[
    Pin { name: "k4", catalan_r: None, g: &[0, 2, 2, 1], shifted: &[1, 0, 1] },
    Pin { name: "w3", catalan_r: None, g: &[0, 2, 2, 1], shifted: &[1, 0, 1] },
    Pin { name: "k5", catalan_r: None, g: &[0, 6, 15, 15, 5], shifted: &[1, 0, 0, 5] },
    Pin { name: "fano", catalan_r: None, g: &[0, 3, 5, 3], shifted: &[1, -1, 3] },
    Pin { name: "nonfano", catalan_r: None, g: &[0, 4, 6, 3], shifted: &[1, 0, 3] },
    Pin { name: "vamos", catalan_r: None, g: &[0, 15, 25, 12, 1], shifted: &[1, 4, 9, 1] },
    Pin { name: "ag32", catalan_r: None, g: &[0, 6, 16, 12, 1], shifted: &[1, -5, 9, 1] },
    Pin { name: "ag32p", catalan_r: None, g: &[0, 7, 17, 12, 1], shifted: &[1, -4, 9, 1] },
    Pin { name: "r8", catalan_r: None, g: &[0, 8, 18, 12, 1], shifted: &[1, -3, 9, 1] },
    Pin { name: "k33", catalan_r: None, g: &[0, 5, 12, 12, 4], shifted: &[1, 0, 0, 4] },
    Pin { name: "pappus", catalan_r: None, g: &[0, 12, 21, 10], shifted: &[1, 1, 10] },
    Pin { name: "nonpappus", catalan_r: None, g: &[0, 13, 22, 10], shifted: &[1, 2, 10] },
    Pin { name: "ag23", catalan_r: None, g: &[0, 9, 18, 10], shifted: &[1, -2, 10] },
    Pin { name: "w4", catalan_r: None, g: &[0, 3, 5, 4, 1], shifted: &[1, 0, 1, 1] },
    Pin { name: "w5", catalan_r: None, g: &[0, 4, 9, 10, 5, 1], shifted: &[1, 0, 1, 1, 1] },
    Pin { name: "k123", catalan_r: None, g: &[0, 7, 20, 24, 12, 2], shifted: &[1, 0, 0, 4, 2] },
    Pin { name: "catalan", catalan_r: Some(1), g: &[0, 1], shifted: &[1] },
    Pin { name: "catalan", catalan_r: Some(2), g: &[0, 1], shifted: &[1] },
    Pin { name: "catalan", catalan_r: Some(3), g: &[0, 2, 1], shifted: &[1, 1] },
    Pin { name: "catalan", catalan_r: Some(4), g: &[0, 5, 5, 1], shifted: &[1, 3, 1] },
    Pin { name: "catalan", catalan_r: Some(5), g: &[0, 14, 21, 9, 1], shifted: &[1, 6, 6, 1] },
];

/// Every catalog polynomial matches its frozen value, in both the plain
/// and the shifted column; Schubert entries are additionally cross-checked
/// against both direct methods.
fn catalog_regressions() -> PropertyOutcome {
    let name = "catalog-regressions";
    let mut instances = 0;
    for pin in PINS {
        instances += 1;
        let mut params = BTreeMap::new();
        if let Some(r) = pin.catalan_r {
            params.insert("r".to_string(), r);
        }
        let label = match pin.catalan_r {
            Some(r) => format!("{}(r={r})", pin.name),
            None => pin.name.to_string(),
        };
        let spec = match catalog_lookup(pin.name, &params) {
            Ok(s) => s,
            Err(e) => return fail(name, instances, format!("{label}: {e}")),
        };
        let realized = match realize(&spec) {
            Ok(r) => r,
            Err(e) => return fail(name, instances, format!("{label}: {e}")),
        };
        let schubert = realized.as_schubert().cloned();
        let m = realized.into_matroid();

        let expected_g = IntPolynomial::from_coeffs(pin.g.iter().copied());
        let expected_shift = IntPolynomial::from_coeffs(pin.shifted.iter().copied());

        let g = g_polynomial(&m);
        if g != expected_g {
            return fail(name, instances, format!("{label}: g = {g}, expected {expected_g}"));
        }
        let shifted = shifted_g(&g).expect("g has no constant term");
        if shifted != expected_shift {
            return fail(name, instances, format!(
                "{label}: shifted form {shifted}, expected {expected_shift}"
            ));
        }
        if let Some(s) = schubert {
            let by_paths = s.g_delannoy().expect("catalog Schubert entries are clean");
            let by_bases = s.g_activities().expect("catalog Schubert entries are clean");
            if by_paths != expected_g || by_bases != expected_g {
                return fail(name, instances, format!(
                    "{label}: paths {by_paths}, activities {by_bases}, expected {expected_g}"
                ));
            }
        }
    }
    pass(name, instances)
}

/// The activity-based Tutte polynomial is independent of the element
/// order, and its value at (1,1) counts the bases.
fn tutte_order_independence(opts: &VerifyOptions) -> PropertyOutcome {
    let name = "tutte-order-independence";
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let mut instances = 0;

    let mut entries: Vec<(String, Matroid)> = fixed_catalog()
        .into_iter()
        .filter(|(_, m)| m.n() <= 9)
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    for r in 1..=4 {
        entries.push((format!("catalan(r={r})"), catalan_matroid(r).expect("in range").to_matroid()));
    }

    for (entry, m) in &entries {
        instances += 1;
        let reference = m.tutte(&ElementOrder::identity(m.n()));
        if reference.eval(1, 1) != BigInt::from(m.num_bases()) {
            return fail(name, instances, format!(
                "{entry}: Tutte(1,1) = {}, but the matroid has {} bases",
                reference.eval(1, 1),
                m.num_bases()
            ));
        }
        for _ in 0..5 {
            let ord = ElementOrder::shuffled(m.n(), &mut rng);
            let other = m.tutte(&ord);
            if other != reference {
                return fail(name, instances, format!(
                    "{entry}: Tutte polynomial changed under the order {ord:?}"
                ));
            }
        }
    }
    pass(name, instances)
}

fn pass(name: &'static str, instances: usize) -> PropertyOutcome {
    PropertyOutcome { name, instances, failure: None }
}

fn fail(name: &'static str, instances: usize, why: String) -> PropertyOutcome {
    PropertyOutcome { name, instances, failure: Some(why) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes_at_small_sizes() {
        let opts = VerifyOptions { max_n: 6, ..Default::default() };
        for outcome in run_all(&opts) {
            assert!(
                outcome.passed(),
                "{} failed: {}",
                outcome.name,
                outcome.failure.unwrap()
            );
            assert!(outcome.instances > 0, "{} checked nothing", outcome.name);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let opts = VerifyOptions { max_n: 7, samples: Some(6), seed: 42 };
        let a = run_all(&opts);
        let b = run_all(&opts);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.instances, y.instances, "{} varies between runs", x.name);
            assert!(x.passed(), "{} failed: {}", x.name, x.failure.clone().unwrap());
        }
    }

    #[test]
    fn regression_table_is_selfconsistent() {
        // the shifted column must be the shift of the plain column
        for pin in PINS {
            let g = IntPolynomial::from_coeffs(pin.g.iter().copied());
            let expected = IntPolynomial::from_coeffs(pin.shifted.iter().copied());
            assert_eq!(shifted_g(&g).unwrap(), expected, "{}", pin.name);
        }
    }
}
