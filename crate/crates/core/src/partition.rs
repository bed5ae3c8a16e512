//! Integer partitions, hook lengths and core predicates.
//!
//! Rows are indexed from 0 starting at the longest row, columns from 0 at the
//! left edge. In the french picture row 0 sits at the bottom; hook lengths do
//! not depend on the picture.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of subpartitions materialized before callers must stream.
pub const DEFAULT_SUBPARTITION_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// First-column hook lengths of a partition: a finite set of distinct
/// positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HookSet(BTreeSet<usize>);

/// Orientation used when drawing a Ferrers diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Longest row at the bottom.
    #[default]
    French,
    /// Longest row at the top.
    English,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts and sorts the rest decreasingly.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition { parts: (0..width).map(|c| self.parts.iter().take_while(|&&p| p > c).count()).collect() }
    }

    /// `mu <= self` in the containment order.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Arm plus leg plus one for the cell in row `row`, column `col`.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if col >= self.part(row) {
            return Err(Error::CellOutOfDiagram { row, col, partition: self.to_string() });
        }
        Ok(self.hook_unchecked(row, col, &self.conjugate()))
    }

    fn hook_unchecked(&self, row: usize, col: usize, conj: &Partition) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = conj.parts[col] - row - 1;
        arm + leg + 1
    }

    /// Every cell as `(row, col, hook)`, row by row.
    pub fn hooks(&self) -> Vec<(usize, usize, usize)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (row, &len) in self.parts.iter().enumerate() {
            for col in 0..len {
                out.push((row, col, self.hook_unchecked(row, col, &conj)));
            }
        }
        out
    }

    /// First cell whose hook length is divisible by `s`, if any.
    pub fn core_violation(&self, s: usize) -> Option<(usize, usize, usize)> {
        if s == 0 {
            return None;
        }
        self.hooks().into_iter().find(|&(_, _, h)| h % s == 0)
    }

    /// No hook length is divisible by `s`. The empty partition is an `s`-core
    /// for every `s`; `s = 1` admits only the empty partition.
    pub fn is_core(&self, s: usize) -> bool {
        self.core_violation(s).is_none()
    }

    /// Simultaneous core for every element of `gens`.
    pub fn is_multicore(&self, gens: &[usize]) -> bool {
        let hooks = self.hooks();
        gens.iter().all(|&s| s == 0 || hooks.iter().all(|&(_, _, h)| h % s != 0))
    }

    /// `{ lambda_i + k - i }`, the hook lengths of the first column.
    pub fn first_column_hooks(&self) -> HookSet {
        let k = self.len();
        HookSet(self.parts.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect())
    }

    /// The unique partition whose first-column hook lengths are `hooks`.
    pub fn from_hooks(hooks: &HookSet) -> Partition {
        let k = hooks.len();
        // largest hook is the first row; the i-th largest loses k - 1 - i
        let parts = hooks.0.iter().rev().enumerate().map(|(i, &h)| h - (k - 1 - i)).collect();
        Partition { parts }
    }

    /// Streams every `mu <= self` (including the empty partition and `self`)
    /// in lexicographic order of the padded part sequence.
    pub fn iter_subpartitions(&self) -> Subpartitions<'_> {
        Subpartitions { shape: self, current: Some(vec![0; self.len()]) }
    }

    /// Materializes the subpartitions, refusing when there are more than `cap`.
    pub fn subpartitions(&self, cap: usize) -> Result<Vec<Partition>> {
        if self.count_subpartitions() > BigInt::from(cap) {
            return Err(Error::CapExceeded { cap });
        }
        Ok(self.iter_subpartitions().collect())
    }

    /// Number of subpartitions without enumerating them.
    pub fn count_subpartitions(&self) -> BigInt {
        // ways[v]: completions of rows i.. given that row i - 1 has length v
        let width = self.part(0);
        let mut ways: Vec<BigInt> = vec![BigInt::from(1); width + 1];
        for &cap in self.parts.iter().rev() {
            let mut next = vec![BigInt::zero(); width + 1];
            let mut running = BigInt::zero();
            for v in 0..=width {
                if v <= cap {
                    running += &ways[v];
                }
                next[v] = running.clone();
            }
            ways = next;
        }
        ways[width].clone()
    }

    /// Ferrers diagram with each cell showing its hook length.
    pub fn render_hooks(&self, orientation: Orientation) -> String {
        if self.is_empty() {
            return "(empty partition)\n".to_string();
        }
        let conj = self.conjugate();
        let width = self.hooks().iter().map(|&(_, _, h)| h.to_string().len()).max().unwrap_or(1);
        let mut lines: Vec<String> = self
            .parts
            .iter()
            .enumerate()
            .map(|(row, &len)| {
                (0..len).map(|col| format!("[{:>width$}]", self.hook_unchecked(row, col, &conj))).collect::<String>()
            })
            .collect();
        if orientation == Orientation::French {
            lines.reverse();
        }
        lines.join("\n") + "\n"
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let body: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

pub struct Subpartitions<'a> {
    shape: &'a Partition,
    current: Option<Vec<usize>>,
}

impl Iterator for Subpartitions<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let item = Partition { parts: cur.iter().copied().take_while(|&p| p > 0).collect() };
        // advance: bump the last position that still has room, zero the rest
        let mut next = cur;
        let bound = |i: usize, seq: &[usize]| {
            let cap = self.shape.parts[i];
            if i == 0 {
                cap
            } else {
                cap.min(seq[i - 1])
            }
        };
        if let Some(i) = (0..next.len()).rev().find(|&i| next[i] < bound(i, &next)) {
            next[i] += 1;
            next[i + 1..].iter_mut().for_each(|v| *v = 0);
            self.current = Some(next);
        }
        Some(item)
    }
}

impl HookSet {
    pub fn new(values: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = values.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::ZeroHook);
        }
        Ok(HookSet(set))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, h: usize) -> bool {
        self.0.contains(&h)
    }

    /// Increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

impl TryFrom<Vec<usize>> for HookSet {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        HookSet::new(v)
    }
}

impl From<HookSet> for Vec<usize> {
    fn from(h: HookSet) -> Self {
        h.to_vec()
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
