//! Matroids on ground sets `{1, ..., n}` represented by explicit basis lists.
//!
//! Everything here is exact and brute-force by design: ranks come from
//! scanning the basis list, circuits from a subset sweep, and so on. This
//! module is the oracle that the faster path-based routines in [`crate::schubert`]
//! are checked against, so clarity beats asymptotics. Intended scale is
//! n up to about 12; the hard cap is n = 64 (one machine word per subset).

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;

/// Subset of `{1, ..., 64}` as a bitmask; element `e` is bit `e - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const fn empty() -> Self {
        Self(0)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        assert!((1..=64).contains(&e), "element {e} out of range");
        Self(1u64 << (e - 1))
    }

    /// Convenience constructor for literal sets in tests and examples.
    pub fn of(elems: &[usize]) -> Self {
        elems.iter().copied().collect()
    }

    /// Range- and duplicate-checked construction from arbitrary input.
    pub fn checked<I: IntoIterator<Item = usize>>(elems: I, n: usize) -> Result<Self> {
        let mut set = Self::empty();
        for e in elems {
            if e < 1 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if set.contains(e) {
                return Err(Error::DuplicateElement(e));
            }
            set = set.with(e);
        }
        Ok(set)
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=64).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        Self(self.0 | Self::singleton(e).0)
    }

    pub fn without(self, e: usize) -> Self {
        Self(self.0 & !Self::singleton(e).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement_in(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> ElementIter {
        ElementIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Shift every element up by `k` (relabel `e` to `e + k`).
    pub fn shifted_up(self, k: usize) -> Self {
        assert!(self.max_element().unwrap_or(0) + k <= 64);
        Self(self.0 << k)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = Self::empty();
        for e in iter {
            set = set.with(e);
        }
        set
    }
}

pub struct ElementIter(u64);

impl Iterator for ElementIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl Ord for ElementSet {
    /// Lexicographic on the ascending element list, so `{1,4} < {2,3}` and a
    /// proper prefix sorts first. This is the order used for canonical basis
    /// lists and all deterministic output.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            if a == b {
                return Ordering::Equal;
            }
            if a == 0 {
                return Ordering::Less;
            }
            if b == 0 {
                return Ordering::Greater;
            }
            let (ea, eb) = (a.trailing_zeros(), b.trailing_zeros());
            if ea != eb {
                return ea.cmp(&eb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    // Bitmask debug noise helps nobody; reuse the `{1,2,5}` form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Total order on `{1, ..., n}`: a permutation listing elements from most to
/// least preferred. Activity computations take the order as a parameter; the
/// natural order `1 < 2 < ... < n` is [`ElementOrder::identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrder {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl ElementOrder {
    pub fn identity(n: usize) -> Self {
        Self::from_seq((1..=n).collect()).expect("identity permutation is valid")
    }

    pub fn from_seq(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &e) in seq.iter().enumerate() {
            if e < 1 || e > n || pos[e - 1] != usize::MAX {
                return Err(Error::InvalidOrder(seq.clone()));
            }
            pos[e - 1] = p;
        }
        Ok(Self { seq, pos })
    }

    pub fn shuffled<R: rand::Rng>(n: usize, rng: &mut R) -> Self {
        use rand::seq::SliceRandom;
        let mut seq: Vec<usize> = (1..=n).collect();
        seq.shuffle(rng);
        Self::from_seq(seq).expect("shuffle keeps the permutation property")
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    /// Precedence position of `e` (0 = most preferred).
    pub fn position(&self, e: usize) -> usize {
        self.pos[e - 1]
    }

    /// Most preferred element of `set`.
    pub fn min_of(&self, set: ElementSet) -> Option<usize> {
        set.iter().min_by_key(|&e| self.position(e))
    }

    /// Next element after `e` in the order, if any.
    pub fn successor(&self, e: usize) -> Option<usize> {
        self.seq.get(self.position(e) + 1).copied()
    }
}

/// Matroid given by its full basis list, kept canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<ElementSet>,
    lookup: HashSet<ElementSet>,
}

impl Matroid {
    /// Build a matroid from an explicit basis collection. With `validate`,
    /// the basis exchange axiom is checked over all pairs (quadratic in the
    /// number of bases) and the witnessing pair is reported on failure.
    pub fn from_bases<I>(n: usize, bases: I, validate: bool) -> Result<Self>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        if !(1..=64).contains(&n) {
            return Err(Error::GroundSetSize(n));
        }
        let ground = ElementSet::full(n);
        let mut list: Vec<ElementSet> = bases.into_iter().collect();
        list.sort();
        list.dedup();
        let Some(&first) = list.first() else {
            return Err(Error::EmptyBasisCollection);
        };
        let rank = first.len();
        for &b in &list {
            if !b.is_subset(ground) {
                let e = b.difference(ground).min_element().unwrap();
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            if b.len() != rank {
                return Err(Error::UnequalBasisSizes { a: first, b });
            }
        }
        let lookup: HashSet<ElementSet> = list.iter().copied().collect();
        let m = Self { n, rank, bases: list, lookup };
        if validate {
            m.check_exchange()?;
        }
        Ok(m)
    }

    /// Same, from plain element lists (range- and duplicate-checked).
    pub fn from_base_lists(n: usize, lists: &[Vec<usize>], validate: bool) -> Result<Self> {
        let bases = lists
            .iter()
            .map(|l| ElementSet::checked(l.iter().copied(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_bases(n, bases, validate)
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for e in b1.difference(b2).iter() {
                    let found = b2
                        .difference(b1)
                        .iter()
                        .any(|f| self.is_basis(b1.without(e).with(f)));
                    if !found {
                        return Err(Error::ExchangeAxiomFailure { b1, b2, e });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Bases sorted lexicographically by ascending element list.
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        self.lookup.contains(&set)
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, a: ElementSet) -> usize {
        assert!(a.is_subset(self.ground_set()), "rank_of: {a} not a subset of the ground set");
        self.bases
            .iter()
            .map(|b| b.intersection(a).len())
            .max()
            .expect("matroid has at least one basis")
    }

    /// Elements whose addition does not raise the rank of `a`, plus `a`.
    pub fn closure_of(&self, a: ElementSet) -> ElementSet {
        let r = self.rank_of(a);
        let mut cl = a;
        for e in a.complement_in(self.n).iter() {
            if self.rank_of(a.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    /// (loops, coloops): elements in no basis, elements in every basis.
    pub fn loops_coloops(&self) -> (ElementSet, ElementSet) {
        let mut in_some = ElementSet::empty();
        let mut in_all = self.ground_set();
        for &b in &self.bases {
            in_some = in_some.union(b);
            in_all = in_all.intersection(b);
        }
        (in_some.complement_in(self.n), in_all)
    }

    /// All circuits (minimal dependent sets), sorted by size then
    /// lexicographically. Subset sweep over sizes up to rank + 1.
    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        let elems: Vec<usize> = (1..=self.n).collect();
        for k in 1..=(self.rank + 1).min(self.n) {
            let mut pick = Vec::with_capacity(k);
            self.circuit_scan(&elems, 0, k, &mut pick, &mut out);
        }
        out
    }

    fn circuit_scan(
        &self,
        elems: &[usize],
        from: usize,
        k: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<ElementSet>,
    ) {
        if pick.len() == k {
            let c: ElementSet = pick.iter().copied().collect();
            if self.rank_of(c) < k && c.iter().all(|e| self.rank_of(c.without(e)) == k - 1) {
                out.push(c);
            }
            return;
        }
        for i in from..elems.len() {
            pick.push(elems[i]);
            self.circuit_scan(elems, i + 1, k, pick, out);
            pick.pop();
        }
    }

    /// Connected components: the partition of the ground set generated by
    /// "lies on a common circuit". Loops and coloops are singletons. Blocks
    /// are sorted by smallest element.
    pub fn connected_components(&self) -> Vec<ElementSet> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for c in self.circuits() {
            let first = c.min_element().unwrap() - 1;
            for e in c.iter() {
                let (a, b) = (find(&mut parent, first), find(&mut parent, e - 1));
                parent[a] = b;
            }
        }
        let mut blocks: Vec<ElementSet> = Vec::new();
        let mut root_to_block: Vec<Option<usize>> = vec![None; self.n];
        for e in 1..=self.n {
            let root = find(&mut parent, e - 1);
            match root_to_block[root] {
                Some(i) => blocks[i] = blocks[i].with(e),
                None => {
                    root_to_block[root] = Some(blocks.len());
                    blocks.push(ElementSet::singleton(e));
                }
            }
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Restriction to a nonempty subset, relabeled order-preservingly onto
    /// `{1, ..., |a|}`. Bases are the maximum-size intersections of `a` with
    /// bases of `self`.
    pub fn restriction(&self, a: ElementSet) -> Result<Matroid> {
        if a.is_empty() {
            return Err(Error::EmptyRestriction);
        }
        assert!(a.is_subset(self.ground_set()), "restriction: {a} not a subset of the ground set");
        let k = self.rank_of(a);
        let mut new_label = vec![0usize; self.n + 1];
        for (i, e) in a.iter().enumerate() {
            new_label[e] = i + 1;
        }
        let bases: Vec<ElementSet> = self
            .bases
            .iter()
            .map(|b| b.intersection(a))
            .filter(|i| i.len() == k)
            .map(|i| i.iter().map(|e| new_label[e]).collect())
            .collect();
        Matroid::from_bases(a.len(), bases, false)
    }

    /// Direct sum: `other` is relabeled onto `{n+1, ..., n+n'}`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > 64 {
            return Err(Error::GroundSetSize(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1.union(b2.shifted_up(self.n)));
            }
        }
        Matroid::from_bases(n, bases, false)
    }

    /// The unique circuit inside `b + e`: `e` together with the elements of
    /// `b` whose exchange with `e` gives a basis.
    pub fn fundamental_circuit(&self, b: ElementSet, e: usize) -> Result<ElementSet> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis(b));
        }
        if e < 1 || e > self.n {
            return Err(Error::ElementOutOfRange { element: e, n: self.n });
        }
        if b.contains(e) {
            return Err(Error::ElementInBasis(e));
        }
        let mut c = ElementSet::singleton(e);
        for i in b.iter() {
            if self.is_basis(b.without(i).with(e)) {
                c = c.with(i);
            }
        }
        Ok(c)
    }

    /// The unique cocircuit avoiding `b - i`: `i` together with the
    /// non-basis elements whose exchange with `i` gives a basis.
    pub fn fundamental_cocircuit(&self, b: ElementSet, i: usize) -> Result<ElementSet> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis(b));
        }
        if i < 1 || i > self.n {
            return Err(Error::ElementOutOfRange { element: i, n: self.n });
        }
        if !b.contains(i) {
            return Err(Error::ElementNotInBasis(i));
        }
        let mut c = ElementSet::singleton(i);
        for e in b.complement_in(self.n).iter() {
            if self.is_basis(b.without(i).with(e)) {
                c = c.with(e);
            }
        }
        Ok(c)
    }

    /// (internal, external) activity of a basis under `ord`: how many
    /// `i in b` are the most preferred element of their fundamental
    /// cocircuit, and how many `e outside b` are the most preferred element
    /// of their fundamental circuit.
    pub fn activities(&self, ord: &ElementOrder, b: ElementSet) -> Result<(usize, usize)> {
        if !self.is_basis(b) {
            return Err(Error::NotABasis(b));
        }
        let mut internal = 0;
        for i in b.iter() {
            if ord.min_of(self.fundamental_cocircuit(b, i)?) == Some(i) {
                internal += 1;
            }
        }
        let mut external = 0;
        for e in b.complement_in(self.n).iter() {
            if ord.min_of(self.fundamental_circuit(b, e)?) == Some(e) {
                external += 1;
            }
        }
        Ok((internal, external))
    }

    /// Number of `i in b` whose exchange for its ord-successor yields a
    /// basis with the same activity pair as `b`. (When the successor already
    /// lies in `b` the swap shrinks the set, so it never counts.)
    pub fn alpha(&self, ord: &ElementOrder, b: ElementSet) -> Result<usize> {
        let acts = self.activities(ord, b)?;
        let mut count = 0;
        for i in b.iter() {
            let Some(next) = ord.successor(i) else { continue };
            if b.contains(next) {
                continue;
            }
            let swapped = b.without(i).with(next);
            if self.is_basis(swapped) && self.activities(ord, swapped)? == acts {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Tutte polynomial as the activity generating function
    /// `sum_B x^(internal) y^(external)` under `ord`. The result does not
    /// depend on the order; tests exercise that.
    pub fn tutte(&self, ord: &ElementOrder) -> BivariatePolynomial {
        let mut t = BivariatePolynomial::zero();
        for &b in &self.bases {
            let (i, e) = self
                .activities(ord, b)
                .expect("stored bases are bases");
            t.add_term(i, e, 1.into());
        }
        t.trim();
        t
    }

    /// Number of bases with activity pair (0, 1) under the natural order.
    pub fn beta(&self) -> usize {
        let ord = ElementOrder::identity(self.n);
        self.bases
            .iter()
            .filter(|&&b| self.activities(&ord, b).expect("stored basis") == (0, 1))
            .count()
    }

    /// Cyclic flats: subsets that are flats (adding any outside element
    /// raises the rank) whose restriction has no coloops (removing any inside
    /// element keeps the rank). Full subset sweep, exponential in n; sorted
    /// by size then lexicographically.
    pub fn cyclic_flats(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        let ground = self.ground_set();
        let mut mask = ElementSet::empty();
        loop {
            let a = mask;
            let r = self.rank_of(a);
            let flat = a
                .complement_in(self.n)
                .iter()
                .all(|e| self.rank_of(a.with(e)) == r + 1);
            let cyclic = flat && a.iter().all(|e| self.rank_of(a.without(e)) == r);
            if cyclic {
                out.push(a);
            }
            if mask == ground {
                break;
            }
            mask = ElementSet(mask.0 + 1);
        }
        out.sort_by_key(|a| (a.len(), *a));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivariatePolynomial;
    use rand::SeedableRng;

    fn uniform(r: usize, n: usize) -> Matroid {
        let mut bases = Vec::new();
        let mut pick = Vec::new();
        fn rec(from: usize, n: usize, r: usize, pick: &mut Vec<usize>, out: &mut Vec<ElementSet>) {
            if pick.len() == r {
                out.push(pick.iter().copied().collect());
                return;
            }
            for e in from..=n {
                pick.push(e);
                rec(e + 1, n, r, pick, out);
                pick.pop();
            }
        }
        rec(1, n, r, &mut pick, &mut bases);
        Matroid::from_bases(n, bases, true).unwrap()
    }

    /// Rank-3 matroid on 7 points whose dependent 3-sets are the seven lines
    /// of the smallest projective plane.
    fn fano() -> Matroid {
        let lines = [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ];
        let bases = uniform(3, 7)
            .bases()
            .iter()
            .copied()
            .filter(|b| !lines.iter().any(|l| *b == ElementSet::of(l)))
            .collect::<Vec<_>>();
        Matroid::from_bases(7, bases, true).unwrap()
    }

    /// Graphic matroid of the complete graph on four vertices, edges labeled
    /// 1=(12), 2=(13), 3=(14), 4=(23), 5=(24), 6=(34).
    fn k4() -> Matroid {
        let triangles = [[1, 2, 4], [1, 3, 5], [2, 3, 6], [4, 5, 6]];
        let bases = uniform(3, 6)
            .bases()
            .iter()
            .copied()
            .filter(|b| !triangles.iter().any(|t| *b == ElementSet::of(t)))
            .collect::<Vec<_>>();
        Matroid::from_bases(6, bases, true).unwrap()
    }

    /// Rank 2 on {1,2,3,4} with 1 and 2 parallel.
    fn parallel_pair() -> Matroid {
        Matroid::from_base_lists(
            4,
            &[vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]],
            true,
        )
        .unwrap()
    }

    /// U_{1,2} + U_{1,2} on {1,2} and {3,4}.
    fn two_parallel_classes() -> Matroid {
        Matroid::from_base_lists(
            4,
            &[vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]],
            true,
        )
        .unwrap()
    }

    #[test]
    fn element_set_basics() {
        let s = ElementSet::of(&[5, 1, 2]);
        assert_eq!(s.to_vec(), vec![1, 2, 5]);
        assert_eq!(s.to_string(), "{1,2,5}");
        assert_eq!(ElementSet::empty().to_string(), "{}");
        assert_eq!(s.len(), 3);
        assert_eq!(s.min_element(), Some(1));
        assert_eq!(s.max_element(), Some(5));
        assert!(s.contains(2) && !s.contains(3));
        assert_eq!(s.without(2).to_vec(), vec![1, 5]);
        assert_eq!(s.complement_in(5).to_vec(), vec![3, 4]);
        assert_eq!(s.shifted_up(2).to_vec(), vec![3, 4, 7]);
    }

    #[test]
    fn element_set_checked_rejects_bad_input() {
        assert!(matches!(
            ElementSet::checked([1, 5], 4),
            Err(Error::ElementOutOfRange { element: 5, n: 4 })
        ));
        assert!(matches!(
            ElementSet::checked([2, 2], 4),
            Err(Error::DuplicateElement(2))
        ));
    }

    #[test]
    fn element_set_order_is_list_lexicographic() {
        let mut sets = vec![
            ElementSet::of(&[2, 3]),
            ElementSet::of(&[1, 4]),
            ElementSet::of(&[1]),
            ElementSet::of(&[1, 2, 3]),
            ElementSet::empty(),
        ];
        sets.sort();
        let listed: Vec<Vec<usize>> = sets.into_iter().map(ElementSet::to_vec).collect();
        assert_eq!(
            listed,
            vec![vec![], vec![1], vec![1, 2, 3], vec![1, 4], vec![2, 3]]
        );
    }

    #[test]
    fn element_order_successor_and_min() {
        let ord = ElementOrder::from_seq(vec![3, 1, 2]).unwrap();
        assert_eq!(ord.min_of(ElementSet::of(&[1, 2])), Some(1));
        assert_eq!(ord.min_of(ElementSet::of(&[2, 3])), Some(3));
        assert_eq!(ord.successor(3), Some(1));
        assert_eq!(ord.successor(2), None);
        assert!(ElementOrder::from_seq(vec![1, 1, 3]).is_err());
        assert!(ElementOrder::from_seq(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn from_bases_canonicalizes() {
        let m = uniform(2, 4);
        assert_eq!((m.n(), m.rank(), m.num_bases()), (4, 2, 6));
        let listed: Vec<Vec<usize>> = m.bases().iter().map(|b| b.to_vec()).collect();
        assert_eq!(
            listed,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn from_bases_rejects_bad_collections() {
        assert!(matches!(
            Matroid::from_bases(3, Vec::new(), false),
            Err(Error::EmptyBasisCollection)
        ));
        assert!(matches!(
            Matroid::from_base_lists(3, &[vec![1], vec![1, 2]], false),
            Err(Error::UnequalBasisSizes { .. })
        ));
        assert!(matches!(
            Matroid::from_base_lists(4, &[vec![1, 5]], false),
            Err(Error::ElementOutOfRange { element: 5, n: 4 })
        ));
        // {1,2} and {3,4} cannot exchange element 1.
        let err = Matroid::from_base_lists(4, &[vec![1, 2], vec![3, 4]], true);
        assert!(matches!(err, Err(Error::ExchangeAxiomFailure { .. })));
    }

    #[test]
    fn rank_and_closure() {
        let m = uniform(2, 4);
        assert_eq!(m.rank_of(ElementSet::empty()), 0);
        assert_eq!(m.rank_of(ElementSet::of(&[1])), 1);
        assert_eq!(m.rank_of(ElementSet::full(4)), 2);
        assert_eq!(m.closure_of(ElementSet::of(&[1])), ElementSet::of(&[1]));

        let f = fano();
        assert_eq!(f.rank_of(ElementSet::of(&[1, 2, 3])), 2);
        assert_eq!(
            f.closure_of(ElementSet::of(&[1, 2])),
            ElementSet::of(&[1, 2, 3])
        );
        assert_eq!(f.rank_of(ElementSet::full(7)), 3);
    }

    #[test]
    fn loops_and_coloops() {
        let m = Matroid::from_base_lists(4, &[vec![3, 4]], false).unwrap();
        let (loops, coloops) = m.loops_coloops();
        assert_eq!(loops, ElementSet::of(&[1, 2]));
        assert_eq!(coloops, ElementSet::of(&[3, 4]));
        assert_eq!(uniform(2, 4).loops_coloops(), (ElementSet::empty(), ElementSet::empty()));
    }

    #[test]
    fn circuit_lists() {
        let m = parallel_pair();
        let circuits: Vec<Vec<usize>> = m.circuits().iter().map(|c| c.to_vec()).collect();
        assert_eq!(circuits, vec![vec![1, 2], vec![1, 3, 4], vec![2, 3, 4]]);
        assert!(uniform(1, 1).circuits().is_empty());
        assert_eq!(uniform(2, 4).circuits().len(), 4);
    }

    #[test]
    fn components_split_on_shared_circuits() {
        assert_eq!(
            two_parallel_classes().connected_components(),
            vec![ElementSet::of(&[1, 2]), ElementSet::of(&[3, 4])]
        );
        assert_eq!(
            uniform(2, 4).connected_components(),
            vec![ElementSet::full(4)]
        );
        assert!(uniform(1, 1).is_connected());
        // A loop is its own component.
        let m = Matroid::from_base_lists(2, &[vec![2]], false).unwrap();
        assert_eq!(
            m.connected_components(),
            vec![ElementSet::of(&[1]), ElementSet::of(&[2])]
        );
    }

    #[test]
    fn restriction_relabels_in_order() {
        let f = fano();
        let line = f.restriction(ElementSet::of(&[1, 2, 3])).unwrap();
        assert_eq!(line, uniform(2, 3));
        let m = uniform(2, 4).restriction(ElementSet::of(&[2, 4])).unwrap();
        assert_eq!(m, uniform(2, 2));
        assert!(matches!(
            uniform(2, 4).restriction(ElementSet::empty()),
            Err(Error::EmptyRestriction)
        ));
    }

    #[test]
    fn direct_sum_relabels_second_summand() {
        let m = uniform(1, 2).direct_sum(&uniform(1, 2)).unwrap();
        assert_eq!(m, two_parallel_classes());
    }

    #[test]
    fn fundamental_circuit_examples() {
        let m = uniform(2, 4);
        assert_eq!(
            m.fundamental_circuit(ElementSet::of(&[1, 2]), 3).unwrap(),
            ElementSet::of(&[1, 2, 3])
        );
        let p = parallel_pair();
        assert_eq!(
            p.fundamental_circuit(ElementSet::of(&[1, 3]), 2).unwrap(),
            ElementSet::of(&[1, 2])
        );
        assert!(matches!(
            m.fundamental_circuit(ElementSet::of(&[1, 2]), 2),
            Err(Error::ElementInBasis(2))
        ));
        assert!(matches!(
            m.fundamental_circuit(ElementSet::of(&[1, 2, 3]), 4),
            Err(Error::NotABasis(_))
        ));
    }

    #[test]
    fn fundamental_cocircuit_examples() {
        let p = parallel_pair();
        assert_eq!(
            p.fundamental_cocircuit(ElementSet::of(&[3, 4]), 3).unwrap(),
            ElementSet::of(&[1, 2, 3])
        );
        let coloops = Matroid::from_base_lists(4, &[vec![3, 4]], false).unwrap();
        assert_eq!(
            coloops
                .fundamental_cocircuit(ElementSet::of(&[3, 4]), 3)
                .unwrap(),
            ElementSet::of(&[3])
        );
        assert!(matches!(
            p.fundamental_cocircuit(ElementSet::of(&[3, 4]), 1),
            Err(Error::ElementNotInBasis(1))
        ));
    }

    #[test]
    fn activity_pairs_under_natural_order() {
        let ord = ElementOrder::identity(4);
        let m = uniform(2, 4);
        assert_eq!(m.activities(&ord, ElementSet::of(&[1, 2])).unwrap(), (2, 0));
        assert_eq!(m.activities(&ord, ElementSet::of(&[3, 4])).unwrap(), (0, 2));
        assert_eq!(m.activities(&ord, ElementSet::of(&[1, 4])).unwrap(), (1, 0));
        assert_eq!(m.activities(&ord, ElementSet::of(&[2, 3])).unwrap(), (0, 1));
        let p = parallel_pair();
        assert_eq!(p.activities(&ord, ElementSet::of(&[3, 4])).unwrap(), (0, 2));
    }

    #[test]
    fn alpha_counts_activity_preserving_swaps() {
        let ord = ElementOrder::identity(2);
        let m = uniform(1, 2);
        assert_eq!(m.alpha(&ord, ElementSet::of(&[1])).unwrap(), 0);
        assert_eq!(m.alpha(&ord, ElementSet::of(&[2])).unwrap(), 0);
    }

    #[test]
    fn tutte_values() {
        let expected_u24 =
            BivariatePolynomial::from_terms([(2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 2, 1)]);
        assert_eq!(uniform(2, 4).tutte(&ElementOrder::identity(4)), expected_u24);

        let expected_k4 = BivariatePolynomial::from_terms([
            (3, 0, 1),
            (2, 0, 3),
            (1, 0, 2),
            (1, 1, 4),
            (0, 1, 2),
            (0, 2, 3),
            (0, 3, 1),
        ]);
        assert_eq!(k4().tutte(&ElementOrder::identity(6)), expected_k4);

        let point = uniform(1, 1);
        assert_eq!(
            point.tutte(&ElementOrder::identity(1)),
            BivariatePolynomial::from_terms([(1, 0, 1)])
        );
    }

    #[test]
    fn tutte_is_order_independent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in [uniform(2, 4), parallel_pair(), k4(), fano()] {
            let reference = m.tutte(&ElementOrder::identity(m.n()));
            assert_eq!(reference.eval(1, 1), num_bigint::BigInt::from(m.num_bases() as i64));
            for _ in 0..5 {
                let ord = ElementOrder::shuffled(m.n(), &mut rng);
                assert_eq!(m.tutte(&ord), reference);
            }
        }
    }

    #[test]
    fn beta_values() {
        assert_eq!(k4().beta(), 2);
        assert_eq!(fano().beta(), 3);
        assert_eq!(uniform(2, 4).beta(), 2);
        assert_eq!(two_parallel_classes().beta(), 0);
        assert_eq!(uniform(1, 1).beta(), 0);
    }

    #[test]
    fn cyclic_flat_lists() {
        assert_eq!(
            uniform(2, 4).cyclic_flats(),
            vec![ElementSet::empty(), ElementSet::full(4)]
        );
        let f = fano();
        let flats = f.cyclic_flats();
        assert_eq!(flats.len(), 9);
        assert_eq!(flats[0], ElementSet::empty());
        assert_eq!(flats[8], ElementSet::full(7));
        assert!(flats[1..8].iter().all(|a| a.len() == 3 && f.rank_of(*a) == 2));
        assert_eq!(uniform(1, 1).cyclic_flats(), vec![ElementSet::empty()]);
        // A single loop: the loop set is the bottom cyclic flat.
        let loop_one = Matroid::from_base_lists(1, &[vec![]], false).unwrap();
        assert_eq!(loop_one.cyclic_flats(), vec![ElementSet::of(&[1])]);
    }
}
