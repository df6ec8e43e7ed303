//! Schubert matroids in their lattice-path presentation, Delannoy path
//! enumeration, and the two path-side formulas for the g-polynomial.
//!
//! `S(n, U)` for `U = {u_1 < ... < u_r}` has as bases exactly the r-subsets
//! `B = {b_1 < ... < b_r}` with `u_i <= b_i` for all `i`. Identifying an
//! r-subset with the monotone lattice path whose north steps sit at its
//! elements, the bases are the paths weakly below the path of `U`.
//!
//! Delannoy paths here run from (1,1) to (n-r, r) in east, north, and
//! diagonal steps, constrained to the region weakly below the path of `U`.
//! The admissible ones (no vertical overlap with the upper path, diagonals
//! only where a north step is allowed) count the g-polynomial by their
//! number of diagonal steps; independently, g is a sum of `t (t+1)^alpha(B)`
//! over bases with activity pair (0, 1). Both are implemented below and
//! cross-checked in the test suites.

use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::{ElementOrder, ElementSet, Matroid};
use crate::poly::{binomial, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    North,
    Diagonal,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::East => 'E',
            Step::North => 'N',
            Step::Diagonal => 'D',
        }
    }
}

/// A Delannoy word over E, N, D. Validity against a particular Schubert
/// matroid (staying in region, endpoint, admissibility) is checked by the
/// [`SchubertMatroid`] methods that consume paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DelannoyPath {
    steps: Vec<Step>,
}

impl DelannoyPath {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    pub fn from_word(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'E' => Ok(Step::East),
                'N' => Ok(Step::North),
                'D' => Ok(Step::Diagonal),
                other => Err(Error::BadPathWord(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn diagonals(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Diagonal).count()
    }
}

impl fmt::Display for DelannoyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Schubert matroid `S(n, U)`, stored with the prefix count table
/// `cnt[j] = |U intersect {1..j}|` that drives all path rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertMatroid {
    n: usize,
    upper: Vec<usize>,
    cnt: Vec<usize>,
}

impl SchubertMatroid {
    /// `upper` may arrive in any order but must be a nonempty duplicate-free
    /// subset of `{1..n}`.
    pub fn new(n: usize, mut upper: Vec<usize>) -> Result<Self> {
        if !(1..=64).contains(&n) {
            return Err(Error::GroundSetSize(n));
        }
        if upper.is_empty() {
            return Err(Error::EmptyUpperSet);
        }
        upper.sort_unstable();
        for pair in upper.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        if upper[0] < 1 || *upper.last().unwrap() > n {
            let e = if upper[0] < 1 { upper[0] } else { *upper.last().unwrap() };
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        let mut cnt = vec![0usize; n + 1];
        for j in 1..=n {
            cnt[j] = cnt[j - 1] + usize::from(upper.binary_search(&j).is_ok());
        }
        Ok(Self { n, upper, cnt })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.upper.len()
    }

    pub fn upper(&self) -> &[usize] {
        &self.upper
    }

    pub fn upper_set(&self) -> ElementSet {
        self.upper.iter().copied().collect()
    }

    fn in_upper(&self, j: usize) -> bool {
        j >= 1 && j <= self.n && self.cnt[j] > self.cnt[j - 1]
    }

    /// Loops are `{1, ..., u_1 - 1}`; coloops are the longest suffix
    /// `{k, ..., n}` contained in `U`.
    pub fn loops_coloops(&self) -> (ElementSet, ElementSet) {
        let loops: ElementSet = (1..self.upper[0]).collect();
        let mut k = self.n + 1;
        while k > 1 && self.in_upper(k - 1) {
            k -= 1;
        }
        let coloops: ElementSet = (k..=self.n).collect();
        (loops, coloops)
    }

    fn require_loopless_coloopless(&self) -> Result<()> {
        let (loops, coloops) = self.loops_coloops();
        if loops.is_empty() && coloops.is_empty() {
            Ok(())
        } else {
            Err(Error::HasLoopsOrColoops { loops, coloops })
        }
    }

    /// All bases, in lexicographic order of their ascending element lists.
    pub fn bases(&self) -> Vec<ElementSet> {
        let r = self.rank();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(r);
        self.bases_rec(0, &mut pick, &mut out);
        out
    }

    fn bases_rec(&self, i: usize, pick: &mut Vec<usize>, out: &mut Vec<ElementSet>) {
        let r = self.rank();
        if i == r {
            out.push(pick.iter().copied().collect());
            return;
        }
        let lo = self.upper[i].max(pick.last().map_or(0, |&p| p + 1));
        let hi = self.n - (r - i - 1);
        for b in lo..=hi {
            pick.push(b);
            self.bases_rec(i + 1, pick, out);
            pick.pop();
        }
    }

    /// Componentwise test `u_i <= b_i` without materializing the basis list.
    pub fn is_basis_set(&self, b: ElementSet) -> bool {
        if b.len() != self.rank() || !b.is_subset(ElementSet::full(self.n)) {
            return false;
        }
        self.upper.iter().zip(b.iter()).all(|(&u, b)| u <= b)
    }

    pub fn to_matroid(&self) -> Matroid {
        Matroid::from_bases(self.n, self.bases(), false)
            .expect("a Schubert basis family is a valid matroid")
    }

    /// Activity pair of a basis read off the lattice paths: internal = how
    /// many north steps `B` shares with the path of `U` (elements `k` of
    /// `B intersect U` where the prefix counts agree), external = `min(B) - 1`.
    pub fn path_activities(&self, b: ElementSet) -> Result<(usize, usize)> {
        if !self.is_basis_set(b) {
            return Err(Error::NotABasis(b));
        }
        let mut internal = 0;
        for (idx, k) in b.iter().enumerate() {
            if self.in_upper(k) && idx + 1 == self.cnt[k] {
                internal += 1;
            }
        }
        let external = b.min_element().expect("bases are nonempty") - 1;
        Ok((internal, external))
    }

    fn corner(&self) -> (usize, usize) {
        (self.n - self.rank(), self.rank())
    }

    /// Step legality at (x, y). Strict mode is admissibility: a north step
    /// needs `u_(y+1) <= x + y` (the new north stays strictly right of the
    /// matching north of `U`), and a diagonal needs east and north both
    /// legal. Relaxed mode only keeps the path weakly below the path of `U`.
    // the `+ 1` forms state "where the step lands" and are kept literal
    #[allow(clippy::int_plus_one)]
    fn step_ok(&self, x: usize, y: usize, step: Step, strict: bool) -> bool {
        let (xx, yy) = self.corner();
        match step {
            Step::East => x + 1 <= xx,
            Step::North => {
                y + 1 <= yy
                    && if strict {
                        self.cnt[x + y] >= y + 1
                    } else {
                        self.cnt[x + y + 1] >= y + 1
                    }
            }
            Step::Diagonal => {
                x + 1 <= xx
                    && y + 1 <= yy
                    && if strict {
                        self.cnt[x + y] >= y + 1
                    } else {
                        self.cnt[x + y + 2] >= y + 1
                    }
            }
        }
    }

    fn enumerate_paths(&self, strict: bool) -> Result<Vec<DelannoyPath>> {
        self.require_loopless_coloopless()?;
        let mut out = Vec::new();
        let mut word = Vec::new();
        self.paths_dfs(1, 1, strict, &mut word, &mut out);
        Ok(out)
    }

    fn paths_dfs(
        &self,
        x: usize,
        y: usize,
        strict: bool,
        word: &mut Vec<Step>,
        out: &mut Vec<DelannoyPath>,
    ) {
        if (x, y) == self.corner() {
            out.push(DelannoyPath::new(word.clone()));
            return;
        }
        for step in [Step::East, Step::North, Step::Diagonal] {
            if self.step_ok(x, y, step, strict) {
                let (nx, ny) = advance(x, y, step);
                word.push(step);
                self.paths_dfs(nx, ny, strict, word, out);
                word.pop();
            }
        }
    }

    /// All admissible Delannoy paths, in depth-first order trying E, N, D.
    pub fn admissible_paths(&self) -> Result<Vec<DelannoyPath>> {
        self.enumerate_paths(true)
    }

    /// All Delannoy paths from (1,1) to the corner that stay weakly below
    /// the path of `U`, admissible or not.
    pub fn region_paths(&self) -> Result<Vec<DelannoyPath>> {
        self.enumerate_paths(false)
    }

    pub fn is_admissible(&self, path: &DelannoyPath) -> Result<bool> {
        self.require_loopless_coloopless()?;
        let (mut x, mut y) = (1, 1);
        for &step in path.steps() {
            if !self.step_ok(x, y, step, true) {
                return Ok(false);
            }
            (x, y) = advance(x, y, step);
        }
        Ok((x, y) == self.corner())
    }

    /// g-polynomial by path counting: the coefficient of `t^(d+1)` is the
    /// number of admissible Delannoy paths with `d` diagonal steps.
    pub fn g_delannoy(&self) -> Result<IntPolynomial> {
        let paths = self.admissible_paths()?;
        let max_d = paths.iter().map(DelannoyPath::diagonals).max().unwrap_or(0);
        let mut counts = vec![0i64; max_d + 2];
        for p in &paths {
            counts[p.diagonals() + 1] += 1;
        }
        Ok(IntPolynomial::from_coeffs(counts))
    }

    /// The basis whose lattice path is `E N` followed by the path, with each
    /// diagonal spelled north-then-east. Requires the path to stay weakly
    /// below the path of `U` and to reach the corner; the result is a basis
    /// for admissible paths but need not be one otherwise.
    pub fn basis_of_path(&self, path: &DelannoyPath) -> Result<ElementSet> {
        self.require_loopless_coloopless()?;
        let (mut x, mut y) = (1, 1);
        for (i, &step) in path.steps().iter().enumerate() {
            if !self.step_ok(x, y, step, false) {
                return Err(Error::PathLeavesRegion { step: i + 1, word: path.to_string() });
            }
            (x, y) = advance(x, y, step);
        }
        let (xx, yy) = self.corner();
        if (x, y) != (xx, yy) {
            return Err(Error::PathWrongEndpoint {
                word: path.to_string(),
                x,
                y,
                ex: xx,
                ey: yy,
            });
        }
        let mut b = ElementSet::singleton(2);
        let mut pos = 2;
        for &step in path.steps() {
            match step {
                Step::East => pos += 1,
                Step::North => {
                    pos += 1;
                    b = b.with(pos);
                }
                Step::Diagonal => {
                    pos += 1;
                    b = b.with(pos);
                    pos += 1;
                }
            }
        }
        debug_assert_eq!(pos, self.n);
        Ok(b)
    }

    /// g-polynomial by basis activities: `t * sum (t+1)^alpha(B)` over bases
    /// with activity pair (0, 1). `alpha` is computed on the realized matroid.
    pub fn g_activities(&self) -> Result<IntPolynomial> {
        self.require_loopless_coloopless()?;
        let m = self.to_matroid();
        let ord = ElementOrder::identity(self.n);
        let t_plus_1 = IntPolynomial::from_coeffs([1, 1]);
        let mut acc = IntPolynomial::zero();
        for &b in m.bases() {
            if self.path_activities(b)? == (0, 1) {
                acc = &acc + &t_plus_1.pow(m.alpha(&ord, b)?);
            }
        }
        Ok(&IntPolynomial::t() * &acc)
    }
}

fn advance(x: usize, y: usize, step: Step) -> (usize, usize) {
    match step {
        Step::East => (x + 1, y),
        Step::North => (x, y + 1),
        Step::Diagonal => (x + 1, y + 1),
    }
}

/// The Catalan matroid `S(2r, {1, 3, ..., 2r-1})`.
pub fn catalan_matroid(r: usize) -> Result<SchubertMatroid> {
    SchubertMatroid::new(2 * r, (1..=r).map(|i| 2 * i - 1).collect())
}

/// Closed form for the g-polynomial of the uniform matroid `U_{r,n}`:
/// the coefficient of `t^(i+1)` is `C(n-2-i, i) C(n-2-2i, r-1-i)`.
pub fn g_uniform(r: usize, n: usize) -> Result<IntPolynomial> {
    if r == 0 || r >= n {
        let kind = if r == 0 {
            "every element a loop"
        } else if r == n {
            "every element a coloop"
        } else {
            "rank larger than the ground set"
        };
        return Err(Error::UniformDegenerate { r, n, kind });
    }
    let top = (r - 1).min(n - r - 1);
    Ok(IntPolynomial::from_coeffs((0..=top + 1).map(|k| {
        if k == 0 {
            0.into()
        } else {
            let i = k - 1;
            binomial(n - 2 - i, i) * binomial(n - 2 - 2 * i, r - 1 - i)
        }
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().copied())
    }

    fn sch(n: usize, upper: &[usize]) -> SchubertMatroid {
        SchubertMatroid::new(n, upper.to_vec()).unwrap()
    }

    fn words(paths: &[DelannoyPath]) -> Vec<String> {
        paths.iter().map(DelannoyPath::to_string).collect()
    }

    #[test]
    fn constructor_validates() {
        let s = SchubertMatroid::new(4, vec![3, 1]).unwrap();
        assert_eq!(s.upper(), &[1, 3]);
        assert_eq!((s.n(), s.rank()), (4, 2));
        assert!(matches!(
            SchubertMatroid::new(4, vec![]),
            Err(Error::EmptyUpperSet)
        ));
        assert!(matches!(
            SchubertMatroid::new(4, vec![1, 5]),
            Err(Error::ElementOutOfRange { element: 5, n: 4 })
        ));
        assert!(matches!(
            SchubertMatroid::new(4, vec![2, 2]),
            Err(Error::DuplicateElement(2))
        ));
    }

    #[test]
    fn loop_and_coloop_detection() {
        assert_eq!(
            sch(4, &[2, 4]).loops_coloops(),
            (ElementSet::of(&[1]), ElementSet::of(&[4]))
        );
        assert_eq!(
            sch(4, &[1, 3]).loops_coloops(),
            (ElementSet::empty(), ElementSet::empty())
        );
        assert_eq!(
            sch(3, &[1, 2, 3]).loops_coloops(),
            (ElementSet::empty(), ElementSet::of(&[1, 2, 3]))
        );
        assert_eq!(
            sch(5, &[3, 4]).loops_coloops(),
            (ElementSet::of(&[1, 2]), ElementSet::empty())
        );
    }

    #[test]
    fn basis_enumeration_is_componentwise_domination() {
        let s = sch(4, &[1, 3]);
        let listed: Vec<Vec<usize>> = s.bases().iter().map(|b| b.to_vec()).collect();
        assert_eq!(
            listed,
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert!(s.is_basis_set(ElementSet::of(&[2, 4])));
        assert!(!s.is_basis_set(ElementSet::of(&[1, 2])));
        // Realized matroid passes the exchange check.
        let m = Matroid::from_bases(4, s.bases(), true).unwrap();
        assert_eq!(&m, &s.to_matroid());
    }

    #[test]
    fn catalan_matroids() {
        assert_eq!(catalan_matroid(2).unwrap(), sch(4, &[1, 3]));
        assert_eq!(catalan_matroid(2).unwrap().bases().len(), 5);
        assert_eq!(catalan_matroid(1).unwrap(), sch(2, &[1]));
        assert!(catalan_matroid(0).is_err());
    }

    #[test]
    fn path_activity_worked_instance() {
        // n = 12, U = {1,2,5,7,10}, B = {3,4,5,7,12}: shared norths at 5 and
        // 7, min(B) - 1 = 2.
        let s = sch(12, &[1, 2, 5, 7, 10]);
        let b = ElementSet::of(&[3, 4, 5, 7, 12]);
        assert_eq!(s.path_activities(b).unwrap(), (2, 2));
        // Same answer from the fundamental-circuit oracle.
        let m = s.to_matroid();
        let ord = ElementOrder::identity(12);
        assert_eq!(m.activities(&ord, b).unwrap(), (2, 2));
    }

    #[test]
    fn path_activities_on_small_cases() {
        let s = sch(4, &[1, 3]);
        assert_eq!(s.path_activities(ElementSet::of(&[1, 3])).unwrap(), (2, 0));
        assert_eq!(s.path_activities(ElementSet::of(&[2, 4])).unwrap(), (0, 1));
        assert_eq!(s.path_activities(ElementSet::of(&[3, 4])).unwrap(), (0, 2));
        assert!(matches!(
            s.path_activities(ElementSet::of(&[1, 2])),
            Err(Error::NotABasis(_))
        ));
    }

    #[test]
    fn admissible_path_rules() {
        // Upper path with a single admissible word.
        assert_eq!(words(&sch(4, &[1, 3]).admissible_paths().unwrap()), ["EN"]);
        // Degenerate grid: the empty path.
        assert_eq!(words(&sch(2, &[1]).admissible_paths().unwrap()), [""]);
        // The four sample paths for U = {1,2,4,7,9} on 10 elements: two
        // admissible, one with a vertical overlap, one with an illegal
        // diagonal.
        let s = sch(10, &[1, 2, 4, 7, 9]);
        let ok1 = DelannoyPath::from_word("ENNEEENN").unwrap();
        let ok2 = DelannoyPath::from_word("DDEDN").unwrap();
        let overlap = DelannoyPath::from_word("NEDNEEN").unwrap();
        let bad_diag = DelannoyPath::from_word("DDDEN").unwrap();
        assert!(s.is_admissible(&ok1).unwrap());
        assert!(s.is_admissible(&ok2).unwrap());
        assert!(!s.is_admissible(&overlap).unwrap());
        assert!(!s.is_admissible(&bad_diag).unwrap());
        let all = s.admissible_paths().unwrap();
        assert!(all.contains(&ok1) && all.contains(&ok2));
        assert!(!all.contains(&overlap) && !all.contains(&bad_diag));
        // Loops or coloops forbid the enumeration outright.
        assert!(matches!(
            sch(4, &[2, 3]).admissible_paths(),
            Err(Error::HasLoopsOrColoops { .. })
        ));
    }

    #[test]
    fn delannoy_counts() {
        // S(6, {1,3,5}): paths EENN, ENEN (no diagonal) and EDN (one).
        let cat3 = catalan_matroid(3).unwrap();
        assert_eq!(words(&cat3.admissible_paths().unwrap()), ["EENN", "ENEN", "EDN"]);
        assert_eq!(cat3.g_delannoy().unwrap(), p(&[0, 2, 1]));
        // Uniform U_{2,4}: EN, NE, D.
        let u24 = sch(4, &[1, 2]);
        assert_eq!(words(&u24.admissible_paths().unwrap()), ["EN", "NE", "D"]);
        assert_eq!(u24.g_delannoy().unwrap(), p(&[0, 2, 1]));
        assert_eq!(sch(2, &[1]).g_delannoy().unwrap(), p(&[0, 1]));
    }

    #[test]
    fn region_paths_include_inadmissible_ones() {
        let u24 = sch(4, &[1, 2]);
        assert_eq!(
            words(&u24.region_paths().unwrap()),
            ["EN", "NE", "D"]
        );
        let s = sch(4, &[1, 3]);
        // ND overlaps vertically but stays in region... list them all.
        assert_eq!(words(&s.region_paths().unwrap()), ["EN", "NE", "D"]);
        assert_eq!(words(&s.admissible_paths().unwrap()), ["EN"]);
    }

    #[test]
    fn basis_of_path_worked_instance() {
        let s = sch(10, &[1, 2, 4, 7, 9]);
        let path = DelannoyPath::from_word("DDEDN").unwrap();
        assert_eq!(
            s.basis_of_path(&path).unwrap(),
            ElementSet::of(&[2, 3, 5, 8, 10])
        );
        // A region-respecting but inadmissible path may produce a non-basis.
        let s2 = sch(5, &[1, 4]);
        let de = DelannoyPath::from_word("DE").unwrap();
        let b = s2.basis_of_path(&de).unwrap();
        assert_eq!(b, ElementSet::of(&[2, 3]));
        assert!(!s2.is_basis_set(b));
    }

    #[test]
    fn basis_of_path_rejects_bad_paths() {
        let s = sch(5, &[1, 4]);
        let err = s.basis_of_path(&DelannoyPath::from_word("NEE").unwrap());
        assert!(matches!(err, Err(Error::PathLeavesRegion { step: 1, .. })));
        let s2 = sch(4, &[1, 2]);
        let err = s2.basis_of_path(&DelannoyPath::from_word("N").unwrap());
        assert!(matches!(err, Err(Error::PathWrongEndpoint { .. })));
        let err = s2.basis_of_path(&DelannoyPath::from_word("EE").unwrap());
        assert!(matches!(err, Err(Error::PathLeavesRegion { step: 2, .. })));
    }

    #[test]
    fn alpha_worked_instance() {
        // B = {2,3,5,8,10} in S(10, {1,2,4,7,9}): swaps at 3, 5, 8 preserve
        // the activity pair, so alpha = 3.
        let s = sch(10, &[1, 2, 4, 7, 9]);
        let m = s.to_matroid();
        let ord = ElementOrder::identity(10);
        let b = ElementSet::of(&[2, 3, 5, 8, 10]);
        assert_eq!(s.path_activities(b).unwrap(), (0, 1));
        assert_eq!(m.alpha(&ord, b).unwrap(), 3);
        // And the two statistics agree basis by basis here.
        for &basis in m.bases() {
            assert_eq!(
                s.path_activities(basis).unwrap(),
                m.activities(&ord, basis).unwrap()
            );
        }
    }

    #[test]
    fn alpha_small_instance() {
        let s = sch(4, &[1, 3]);
        let m = s.to_matroid();
        let ord = ElementOrder::identity(4);
        assert_eq!(m.alpha(&ord, ElementSet::of(&[2, 4])).unwrap(), 0);
    }

    #[test]
    fn g_by_activities() {
        assert_eq!(sch(4, &[1, 3]).g_activities().unwrap(), p(&[0, 1]));
        assert_eq!(
            catalan_matroid(4).unwrap().g_activities().unwrap(),
            p(&[0, 5, 5, 1])
        );
        assert_eq!(sch(7, &[1, 2, 4]).g_activities().unwrap(), p(&[0, 9, 11, 3]));
        assert!(matches!(
            sch(4, &[2, 3]).g_activities(),
            Err(Error::HasLoopsOrColoops { .. })
        ));
    }

    #[test]
    fn delannoy_equals_activities_on_small_grid() {
        for n in 2..=7usize {
            for bits in 0..(1u64 << (n - 2)) {
                // Loopless and coloopless upper sets: 1 in, n out, middle free.
                let mut upper = vec![1];
                for j in 2..n {
                    if bits >> (j - 2) & 1 == 1 {
                        upper.push(j);
                    }
                }
                let s = SchubertMatroid::new(n, upper).unwrap();
                assert_eq!(
                    s.g_delannoy().unwrap(),
                    s.g_activities().unwrap(),
                    "mismatch for S({n}, {:?})",
                    s.upper()
                );
            }
        }
        // One larger spot check.
        let s = sch(10, &[1, 2, 4, 7, 9]);
        assert_eq!(s.g_delannoy().unwrap(), s.g_activities().unwrap());
    }

    #[test]
    fn uniform_closed_form() {
        assert_eq!(g_uniform(2, 4).unwrap(), p(&[0, 2, 1]));
        assert_eq!(g_uniform(2, 5).unwrap(), p(&[0, 3, 2]));
        assert_eq!(g_uniform(3, 6).unwrap(), p(&[0, 6, 6, 1]));
        assert_eq!(g_uniform(1, 2).unwrap(), p(&[0, 1]));
        assert!(matches!(
            g_uniform(0, 3),
            Err(Error::UniformDegenerate { r: 0, n: 3, .. })
        ));
        assert!(matches!(
            g_uniform(3, 3),
            Err(Error::UniformDegenerate { r: 3, n: 3, .. })
        ));
    }

    #[test]
    fn uniform_closed_form_matches_paths() {
        for n in 2..=7usize {
            for r in 1..n {
                let s = SchubertMatroid::new(n, (1..=r).collect()).unwrap();
                assert_eq!(s.g_delannoy().unwrap(), g_uniform(r, n).unwrap());
            }
        }
    }

    #[test]
    fn path_words_round_trip() {
        let path = DelannoyPath::from_word("DDEDN").unwrap();
        assert_eq!(path.to_string(), "DDEDN");
        assert_eq!(path.diagonals(), 3);
        assert!(matches!(
            DelannoyPath::from_word("EXN"),
            Err(Error::BadPathWord('X'))
        ));
        assert!(DelannoyPath::from_word("").unwrap().is_empty());
    }
}
