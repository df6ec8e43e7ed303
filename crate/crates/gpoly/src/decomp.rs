//! g-polynomial of an arbitrary matroid by decomposition over chains of
//! cyclic flats.
//!
//! For a loopless, coloopless, connected matroid, every chain of cyclic flats
//! through the empty set and the ground set determines a Schubert matroid
//! (stack the chain's blocks, small flats first, and start a fresh run of
//! upper-set positions at each block). The g-polynomial is the sum of the
//! Schubert g-polynomials weighted by the Mobius function of the chain poset
//! with a top element adjoined. Loops or coloops force g = 0, and g is
//! multiplicative over connected components; [`g_polynomial`] stitches the
//! three cases together.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matroid::{ElementSet, Matroid};
use crate::poly::IntPolynomial;
use crate::schubert::SchubertMatroid;

/// Chain of cyclic flats `{} = F_0 < F_1 < ... < F_m = E` with their ranks.
/// The constructor enforces the internal shape; agreement with a particular
/// ground set or matroid is checked by the consumers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicFlatChain {
    flats: Vec<ElementSet>,
    ranks: Vec<usize>,
}

impl CyclicFlatChain {
    pub fn new(flats: Vec<ElementSet>, ranks: Vec<usize>) -> Result<Self> {
        if flats.len() != ranks.len() {
            return Err(Error::MalformedChain(format!(
                "{} flats but {} ranks",
                flats.len(),
                ranks.len()
            )));
        }
        if flats.len() < 2 {
            return Err(Error::MalformedChain(
                "need at least the empty set and the ground set".into(),
            ));
        }
        if !flats[0].is_empty() || ranks[0] != 0 {
            return Err(Error::MalformedChain(
                "chain must start at the empty set with rank 0".into(),
            ));
        }
        for i in 1..flats.len() {
            if !flats[i - 1].is_subset(flats[i]) || flats[i - 1] == flats[i] {
                return Err(Error::MalformedChain(format!(
                    "{} does not strictly contain {}",
                    flats[i], flats[i - 1]
                )));
            }
            let size_step = flats[i].len() - flats[i - 1].len();
            let rank_step = ranks[i] as i64 - ranks[i - 1] as i64;
            if rank_step < 1 || rank_step > size_step as i64 {
                return Err(Error::MalformedChain(format!(
                    "rank step {rank_step} at {} is outside 1..={size_step}",
                    flats[i]
                )));
            }
        }
        Ok(Self { flats, ranks })
    }

    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Number of flats, the two endpoints included; always at least two.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_refined_by(&self, other: &CyclicFlatChain) -> bool {
        self.flats.iter().all(|f| other.flats.contains(f))
    }
}

/// All chains of cyclic flats of one matroid between the empty set and the
/// ground set, ordered by inclusion of their flat sets, with the Mobius
/// weights against an adjoined top element precomputed.
#[derive(Clone, Debug)]
pub struct ChainPoset {
    n: usize,
    rank: usize,
    chains: Vec<CyclicFlatChain>,
    lambdas: Vec<i64>,
    index: HashMap<CyclicFlatChain, usize>,
}

/// Enumerate the chain poset of a loopless, coloopless matroid.
pub fn chain_poset(m: &Matroid) -> Result<ChainPoset> {
    let (loops, coloops) = m.loops_coloops();
    if !loops.is_empty() || !coloops.is_empty() {
        return Err(Error::HasLoopsOrColoops { loops, coloops });
    }
    let cyclic = m.cyclic_flats();
    let ground = m.ground_set();
    debug_assert!(cyclic.first() == Some(&ElementSet::empty()));
    debug_assert!(cyclic.last() == Some(&ground));
    let proper: Vec<ElementSet> = cyclic
        .into_iter()
        .filter(|f| !f.is_empty() && *f != ground)
        .collect();

    // Proper flats are sorted by size, so a flat only ever extends earlier
    // ones; every strictly nested selection is one chain.
    let mut selections: Vec<Vec<ElementSet>> = Vec::new();
    let mut pick: Vec<ElementSet> = Vec::new();
    fn extend(
        proper: &[ElementSet],
        from: usize,
        pick: &mut Vec<ElementSet>,
        out: &mut Vec<Vec<ElementSet>>,
    ) {
        out.push(pick.clone());
        for i in from..proper.len() {
            let fits = pick.last().is_none_or(|last| {
                last.is_subset(proper[i]) && *last != proper[i]
            });
            if fits {
                pick.push(proper[i]);
                extend(proper, i + 1, pick, out);
                pick.pop();
            }
        }
    }
    extend(&proper, 0, &mut pick, &mut selections);

    let mut chains: Vec<CyclicFlatChain> = selections
        .into_iter()
        .map(|mid| {
            let mut flats = vec![ElementSet::empty()];
            flats.extend(mid);
            flats.push(ground);
            let ranks = flats.iter().map(|f| m.rank_of(*f)).collect();
            CyclicFlatChain::new(flats, ranks)
                .expect("nested cyclic flats form a well-shaped chain")
        })
        .collect();
    chains.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.flats.cmp(&b.flats))
    });

    // Mobius recursion against the adjoined top: process superchains first.
    let mut order: Vec<usize> = (0..chains.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(chains[i].len()));
    let mut mu = vec![0i64; chains.len()];
    for (k, &i) in order.iter().enumerate() {
        let mut acc = -1i64; // the top element contributes mu(top) = 1
        for &j in &order[..k] {
            if chains[j].len() > chains[i].len() && chains[i].is_refined_by(&chains[j]) {
                acc -= mu[j];
            }
        }
        mu[i] = acc;
    }
    let lambdas: Vec<i64> = mu.into_iter().map(|v| -v).collect();

    let index = chains
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    Ok(ChainPoset {
        n: m.n(),
        rank: m.rank(),
        chains,
        lambdas,
        index,
    })
}

impl ChainPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Chains sorted by length, then lexicographically by flat list. The
    /// two-element chain `{} < E` is always first.
    pub fn chains(&self) -> &[CyclicFlatChain] {
        &self.chains
    }

    /// Weight `-mu(C, top)` from the Mobius recursion.
    pub fn lambda(&self, chain: &CyclicFlatChain) -> Result<i64> {
        let i = *self.index.get(chain).ok_or(Error::ChainNotInPoset)?;
        Ok(self.lambdas[i])
    }

    /// The same weight as an alternating sum over refining chains:
    /// `sum over D containing C of (-1)^(|D| - |C|)`. Kept as an independent
    /// cross-check of the recursion.
    pub fn lambda_closed_form(&self, chain: &CyclicFlatChain) -> Result<i64> {
        if !self.index.contains_key(chain) {
            return Err(Error::ChainNotInPoset);
        }
        let mut acc = 0i64;
        for d in &self.chains {
            if chain.is_refined_by(d) {
                acc += if (d.len() - chain.len()).is_multiple_of(2) { 1 } else { -1 };
            }
        }
        Ok(acc)
    }
}

/// The Schubert matroid of a chain on `{1..n}`, together with the relabeling
/// map (`map[p-1]` is the original element at position `p`).
///
/// Blocks `F_j - F_(j-1)` are laid out in chain order, each block keeping its
/// elements ascending, and the upper set takes the first `rank step` many
/// positions of each block. Smaller flats get smaller labels; the round-trip
/// invariant (the realized matroid's cyclic flats are exactly the relabeled
/// chain) is exercised by the test and verify suites on every chain they see.
pub fn schubert_of_chain(
    n: usize,
    chain: &CyclicFlatChain,
) -> Result<(SchubertMatroid, Vec<usize>)> {
    let flats = chain.flats();
    let ranks = chain.ranks();
    if *flats.last().unwrap() != ElementSet::full(n) {
        return Err(Error::MalformedChain(format!(
            "chain ends at {} instead of the ground set of size {n}",
            flats.last().unwrap()
        )));
    }
    let mut map = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(*ranks.last().unwrap());
    for j in 1..flats.len() {
        let block = flats[j].difference(flats[j - 1]);
        let rank_step = ranks[j] - ranks[j - 1];
        for p in 0..rank_step {
            upper.push(map.len() + 1 + p);
        }
        map.extend(block.iter());
    }
    let s = SchubertMatroid::new(n, upper)?;
    Ok((s, map))
}

/// Check the round-trip invariant of [`schubert_of_chain`]: realizing the
/// chain and taking cyclic flats again gives back exactly the relabeled
/// chain, ranks included.
pub fn chain_realization_matches(n: usize, chain: &CyclicFlatChain) -> Result<bool> {
    let (s, map) = schubert_of_chain(n, chain)?;
    let mut position = vec![0usize; n + 1];
    for (p, &orig) in map.iter().enumerate() {
        position[orig] = p + 1;
    }
    let m = s.to_matroid();
    let relabeled: Vec<ElementSet> = chain
        .flats()
        .iter()
        .map(|f| f.iter().map(|e| position[e]).collect())
        .collect();
    if m.cyclic_flats() != {
        let mut sorted = relabeled.clone();
        sorted.sort_by_key(|a| (a.len(), *a));
        sorted
    } {
        return Ok(false);
    }
    Ok(relabeled
        .iter()
        .zip(chain.ranks())
        .all(|(f, &r)| m.rank_of(*f) == r))
}

/// The g-polynomial of an arbitrary matroid: zero in the presence of loops
/// or coloops, multiplicative over connected components, and otherwise the
/// lambda-weighted sum of Schubert g-polynomials over the chain poset.
pub fn g_polynomial(m: &Matroid) -> IntPolynomial {
    let mut cache = HashMap::new();
    g_rec(m, &mut cache)
}

type SchubertKey = (usize, Vec<usize>);

fn g_rec(m: &Matroid, cache: &mut HashMap<SchubertKey, IntPolynomial>) -> IntPolynomial {
    let (loops, coloops) = m.loops_coloops();
    if !loops.is_empty() || !coloops.is_empty() {
        return IntPolynomial::zero();
    }
    let components = m.connected_components();
    if components.len() > 1 {
        let mut acc = IntPolynomial::one();
        for c in components {
            let piece = m
                .restriction(c)
                .expect("components are nonempty subsets of the ground set");
            acc = &acc * &g_rec(&piece, cache);
        }
        return acc;
    }
    let poset = chain_poset(m).expect("loops and coloops were ruled out above");
    let mut acc = IntPolynomial::zero();
    for chain in poset.chains() {
        let lam = poset.lambda(chain).expect("chain taken from this poset");
        if lam == 0 {
            continue;
        }
        let (s, _) = schubert_of_chain(m.n(), chain).expect("poset chains are well formed");
        let key = (s.n(), s.upper().to_vec());
        let g = cache.entry(key).or_insert_with(|| {
            s.g_activities()
                .expect("chain Schubert matroids have no loops or coloops")
        });
        acc = &acc + &g.scaled(&BigInt::from(lam));
    }
    acc
}
