//! Gap posets of numerical semigroups and their lower ideals.
//!
//! For a generator set `S` with `gcd(S) = 1` the gaps are the positive
//! integers that are not non-negative combinations of `S`. A gap `a` covers a
//! gap `b` when `a - b` lies in `S`; the partial order is the reflexive
//! transitive closure of that relation.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{HookSet, Partition};

/// Default cap on materialized lower ideals.
pub const DEFAULT_IDEAL_CAP: usize = 10_000_000;

/// Non-empty set of positive generators, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorSet(Vec<u64>);

impl GeneratorSet {
    pub fn new(gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = gens.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if v[0] == 0 {
            return Err(Error::ZeroGenerator);
        }
        Ok(GeneratorSet(v))
    }

    /// `{s, s+1, ..., s+p}`.
    pub fn consecutive(s: u64, p: u64) -> Result<Self> {
        Self::new(s..=s + p)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |g, &x| num_integer::gcd(g, x))
    }

    /// The gap set is finite exactly when the generators are coprime.
    pub fn is_finite(&self) -> bool {
        self.gcd() == 1
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        self.0[self.0.len() - 1]
    }
}

impl TryFrom<Vec<u64>> for GeneratorSet {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        GeneratorSet::new(v)
    }
}

impl From<GeneratorSet> for Vec<u64> {
    fn from(g: GeneratorSet) -> Self {
        g.0
    }
}

#[derive(Clone, Debug)]
pub struct GapPoset {
    gens: GeneratorSet,
    gaps: Vec<u64>,
    index: HashMap<u64, usize>,
    /// Indices of the gaps each gap covers.
    lower_covers: Vec<Vec<usize>>,
    /// `below[i]` has bit `j` set when gap `j` is strictly below gap `i`.
    below: Vec<Vec<u64>>,
}

/// A downward-closed set of gaps, sorted increasingly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LowerIdeal(Vec<u64>);

/// JSON form of a poset: `{generators, gaps, covers}` with covers as
/// `[upper, lower]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub covers: Vec<[u64; 2]>,
}

/// Marks representable integers until `min(S)` consecutive ones appear, after
/// which everything is representable.
fn sieve_gaps(gens: &[u64]) -> Vec<u64> {
    let run_needed = gens[0] as usize;
    let mut representable = vec![true];
    let mut gaps = Vec::new();
    let mut run = 0usize;
    let mut m = 0usize;
    while run < run_needed {
        m += 1;
        let r = gens.iter().any(|&g| (g as usize) <= m && representable[m - g as usize]);
        representable.push(r);
        if r {
            run += 1;
        } else {
            run = 0;
            gaps.push(m as u64);
        }
    }
    gaps
}

fn bit(set: &[u64], j: usize) -> bool {
    set[j / 64] >> (j % 64) & 1 == 1
}

impl GapPoset {
    pub fn new(gens: GeneratorSet) -> Result<Self> {
        let divisor = gens.gcd();
        if divisor != 1 {
            return Err(Error::InfinitePoset { gens: gens.0.clone(), divisor });
        }
        let gaps = sieve_gaps(gens.as_slice());
        let index: HashMap<u64, usize> = gaps.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let lower_covers: Vec<Vec<usize>> = gaps
            .iter()
            .map(|&a| {
                gens.as_slice().iter().filter(|&&s| s < a).filter_map(|&s| index.get(&(a - s)).copied()).collect()
            })
            .collect();
        let words = gaps.len().div_ceil(64).max(1);
        let mut below: Vec<Vec<u64>> = Vec::with_capacity(gaps.len());
        // covers point to smaller values, so increasing order is a linear extension
        for covers in &lower_covers {
            let mut set = vec![0u64; words];
            for &b in covers {
                set[b / 64] |= 1 << (b % 64);
                for (w, x) in set.iter_mut().zip(&below[b]) {
                    *w |= x;
                }
            }
            below.push(set);
        }
        Ok(GapPoset { gens, gaps, index, lower_covers, below })
    }

    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        Self::new(GeneratorSet::new(gens.iter().copied())?)
    }

    /// `T_{s,p}`, the gap poset of `{s, ..., s+p}`.
    pub fn consecutive(s: u64, p: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::OutOfRange { name: "s", value: 0, expected: "s >= 1" });
        }
        Self::new(GeneratorSet::consecutive(s, p)?)
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn is_gap(&self, m: u64) -> bool {
        self.index.contains_key(&m)
    }

    /// Largest gap, `None` when every positive integer is representable.
    pub fn frobenius_number(&self) -> Option<u64> {
        self.gaps.last().copied()
    }

    /// Cover pairs `(a, b)` with `a - b` in the generator set, sorted.
    pub fn covers(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = self
            .lower_covers
            .iter()
            .enumerate()
            .flat_map(|(i, cs)| cs.iter().map(move |&j| (i, j)))
            .map(|(i, j)| (self.gaps[i], self.gaps[j]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Covers that are not implied by a longer chain.
    pub fn hasse_covers(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, cs) in self.lower_covers.iter().enumerate() {
            for &j in cs {
                let implied = cs.iter().any(|&m| m != j && bit(&self.below[m], j));
                if !implied {
                    out.push((self.gaps[i], self.gaps[j]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `b <= a` in the poset order. Both must be gaps.
    pub fn le(&self, b: u64, a: u64) -> bool {
        match (self.index.get(&b), self.index.get(&a)) {
            (Some(&j), Some(&i)) => i == j || bit(&self.below[i], j),
            _ => false,
        }
    }

    /// Validates a set of gaps as a lower ideal.
    pub fn lower_ideal(&self, elements: impl IntoIterator<Item = u64>) -> Result<LowerIdeal> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        let mut member = vec![false; self.gaps.len()];
        for &x in &v {
            match self.index.get(&x) {
                Some(&i) => member[i] = true,
                None => return Err(Error::NotAGap { value: x, gens: self.gens.0.clone() }),
            }
        }
        for &x in &v {
            for &j in &self.lower_covers[self.index[&x]] {
                if !member[j] {
                    return Err(Error::NotDownwardClosed { present: x, missing: self.gaps[j] });
                }
            }
        }
        Ok(LowerIdeal(v))
    }

    /// Calls `f` on every lower ideal exactly once.
    ///
    /// Gaps are decided in increasing order, exclusion before inclusion; a gap
    /// may be included only when everything it covers is. Every partial choice
    /// extends to an ideal, so the walk never backtracks from a dead end.
    pub fn for_each_lower_ideal(&self, mut f: impl FnMut(&LowerIdeal)) {
        fn walk(p: &GapPoset, i: usize, member: &mut Vec<bool>, f: &mut dyn FnMut(&LowerIdeal)) {
            if i == p.gaps.len() {
                let ideal = LowerIdeal(member.iter().zip(&p.gaps).filter(|(m, _)| **m).map(|(_, &g)| g).collect());
                f(&ideal);
                return;
            }
            member.push(false);
            walk(p, i + 1, member, f);
            member.pop();
            if p.lower_covers[i].iter().all(|&j| member[j]) {
                member.push(true);
                walk(p, i + 1, member, f);
                member.pop();
            }
        }
        walk(self, 0, &mut Vec::with_capacity(self.gaps.len()), &mut f);
    }

    /// All lower ideals, or an error if there are more than `cap`.
    pub fn lower_ideals(&self, cap: usize) -> Result<Vec<LowerIdeal>> {
        if self.count_lower_ideals() > BigInt::from(cap) {
            return Err(Error::CapExceeded { cap });
        }
        let mut out = Vec::new();
        self.for_each_lower_ideal(|i| out.push(i.clone()));
        Ok(out)
    }

    /// Number of lower ideals, without materializing them.
    ///
    /// Same decision order as [`Self::for_each_lower_ideal`], memoized on the
    /// frontier: the membership of already-decided gaps that some undecided
    /// gap still covers.
    pub fn count_lower_ideals(&self) -> BigInt {
        let n = self.gaps.len();
        // last[j]: largest index of a gap covering j
        let mut last = vec![None; n];
        for (i, cs) in self.lower_covers.iter().enumerate() {
            for &j in cs {
                last[j] = Some(last[j].map_or(i, |x: usize| x.max(i)));
            }
        }
        let mut memo: HashMap<(usize, Vec<usize>), BigInt> = HashMap::new();
        fn go(
            p: &GapPoset,
            i: usize,
            frontier: Vec<usize>,
            last: &[Option<usize>],
            memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
        ) -> BigInt {
            if i == p.gaps.len() {
                return BigInt::one();
            }
            let key = (i, frontier);
            if let Some(v) = memo.get(&key) {
                return v.clone();
            }
            let (_, frontier) = &key;
            let keep = |v: &mut Vec<usize>| v.retain(|&j| last[j].is_some_and(|l| l > i));
            let mut excl = frontier.clone();
            keep(&mut excl);
            let mut total = go(p, i + 1, excl, last, memo);
            if p.lower_covers[i].iter().all(|j| frontier.binary_search(j).is_ok()) {
                let mut incl = frontier.clone();
                incl.push(i);
                keep(&mut incl);
                total += go(p, i + 1, incl, last, memo);
            }
            memo.insert(key, total.clone());
            total
        }
        go(self, 0, Vec::new(), &last, &mut memo)
    }

    /// The `S`-core whose first-column hook lengths are the ideal's elements.
    pub fn ideal_to_core(&self, ideal: &LowerIdeal) -> Partition {
        ideal_to_core(ideal)
    }

    /// First-column hooks of an `S`-core, as a lower ideal of this poset.
    pub fn core_to_ideal(&self, core: &Partition) -> Result<LowerIdeal> {
        for &g in self.gens.as_slice() {
            if let Some((row, col, hook)) = core.core_violation(g as usize) {
                return Err(Error::NotACore { partition: core.to_string(), generator: g, hook, row, col });
            }
        }
        self.lower_ideal(core.first_column_hooks().iter().map(|h| h as u64))
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            generators: self.gens.0.clone(),
            gaps: self.gaps.clone(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Graphviz digraph with one edge `a -> b` per cover `a` over `b`.
    /// With `reduce`, edges implied by longer chains are dropped.
    pub fn to_dot(&self, reduce: bool) -> String {
        let label: Vec<String> = self.gens.0.iter().map(ToString::to_string).collect();
        let mut out = String::new();
        let _ = writeln!(out, "digraph gap_poset {{");
        let _ = writeln!(out, "  label=\"P_{{{}}}\";", label.join(","));
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  edge [dir=back];");
        let _ = writeln!(out, "  node [shape=circle];");
        for g in &self.gaps {
            let _ = writeln!(out, "  n{g} [label=\"{g}\"];");
        }
        let edges = if reduce { self.hasse_covers() } else { self.covers() };
        for (a, b) in edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

impl LowerIdeal {
    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }
}

/// Partition whose first column has the ideal's elements as hook lengths.
pub fn ideal_to_core(ideal: &LowerIdeal) -> Partition {
    let hooks = HookSet::new(ideal.0.iter().map(|&x| x as usize)).expect("gaps are positive");
    Partition::from_hooks(&hooks)
}

/// `C_s^(p)`, the number of lower ideals of `T_{s,p}`, from the recursion
/// `C_s = sum_{i=1..s} C_{i-p} C_{s-i}` with `C_s = 1` for `s <= 0` and
/// `C_s = 2^(s-1)` for `1 <= s <= p`.
pub fn multi_catalan(s: i64, p: u64) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::OutOfRange { name: "p", value: 0, expected: "p >= 1" });
    }
    Ok(multi_catalan_table(s.max(0) as usize, p).pop().expect("table is non-empty"))
}

/// `[C_0^(p), ..., C_n^(p)]`.
pub fn multi_catalan_table(n: usize, p: u64) -> Vec<BigInt> {
    let p = p as usize;
    let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
    let at = |c: &[BigInt], s: isize| if s <= 0 { BigInt::one() } else { c[s as usize].clone() };
    for s in 0..=n {
        let v = if s == 0 {
            BigInt::one()
        } else if s <= p {
            BigInt::one() << (s - 1)
        } else {
            (1..=s).fold(BigInt::zero(), |acc, i| acc + at(&c, i as isize - p as isize) * at(&c, (s - i) as isize))
        };
        c.push(v);
    }
    c
}
