use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Step;
use crate::error::{Error, Result};
use crate::poset::{GapPoset, LowerIdeal};

/// Step of a generalized Dyck path with parameter `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GdStep {
    /// `(0, k)`, written `Nk`.
    North,
    /// `(k, 0)`, written `Ek`.
    East,
    /// `(i, i)` with `1 <= i <= k-1`, written `D<i>`.
    Diagonal(u64),
}

impl fmt::Display for GdStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GdStep::North => write!(f, "Nk"),
            GdStep::East => write!(f, "Ek"),
            GdStep::Diagonal(i) => write!(f, "D{i}"),
        }
    }
}

impl FromStr for GdStep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Nk" => Ok(GdStep::North),
            "Ek" => Ok(GdStep::East),
            _ => s
                .strip_prefix('D')
                .and_then(|i| i.parse::<u64>().ok())
                .filter(|&i| i >= 1)
                .map(GdStep::Diagonal)
                .ok_or_else(|| Error::InvalidPath { reason: format!("unknown step name {s:?}") }),
        }
    }
}

impl TryFrom<String> for GdStep {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GdStep> for String {
    fn from(s: GdStep) -> Self {
        s.to_string()
    }
}

/// Path from `(0,0)` to `(n,n)` that never goes below `y = x`, using steps
/// `(0,k)`, `(k,0)` and `(i,i)` for `1 <= i <= k-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGdPath")]
pub struct GeneralizedDyckPath {
    n: u64,
    k: u64,
    steps: Vec<GdStep>,
}

#[derive(Deserialize)]
struct RawGdPath {
    n: u64,
    k: u64,
    steps: Vec<GdStep>,
}

impl TryFrom<RawGdPath> for GeneralizedDyckPath {
    type Error = Error;
    fn try_from(raw: RawGdPath) -> Result<Self> {
        GeneralizedDyckPath::new(raw.n, raw.k, raw.steps)
    }
}

fn check_params(n: u64, k: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange { name: "n", value: 0, expected: "n >= 1" });
    }
    if k == 0 {
        return Err(Error::OutOfRange { name: "k", value: 0, expected: "k >= 1" });
    }
    Ok(())
}

impl GeneralizedDyckPath {
    pub fn new(n: u64, k: u64, steps: Vec<GdStep>) -> Result<Self> {
        check_params(n, k)?;
        let (mut x, mut y) = (0u64, 0u64);
        for (idx, st) in steps.iter().enumerate() {
            match *st {
                GdStep::North => y += k,
                GdStep::East => x += k,
                GdStep::Diagonal(i) if (1..k).contains(&i) => {
                    x += i;
                    y += i;
                }
                GdStep::Diagonal(i) => {
                    return Err(Error::InvalidPath { reason: format!("diagonal step D{i} needs 1 <= i <= {}", k - 1) })
                }
            }
            if x > n || y > n || y < x {
                return Err(Error::InvalidPath {
                    reason: format!("step {idx} reaches ({x},{y}), outside the triangle above y = x"),
                });
            }
        }
        if (x, y) != (n, n) {
            return Err(Error::InvalidPath { reason: format!("path ends at ({x},{y}), not ({n},{n})") });
        }
        Ok(GeneralizedDyckPath { n, k, steps })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn steps(&self) -> &[GdStep] {
        &self.steps
    }

    /// Step endpoints, starting at the origin.
    pub fn vertices(&self) -> Vec<(u64, u64)> {
        let mut out = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for st in &self.steps {
            match *st {
                GdStep::North => y += self.k,
                GdStep::East => x += self.k,
                GdStep::Diagonal(i) => {
                    x += i;
                    y += i;
                }
            }
            out.push((x, y));
        }
        out
    }

    /// Unit-step path obtained by replacing `N_k` with `k` norths, `E_k` with
    /// `k` easts and `D_i` with `i` norths followed by `i` easts.
    pub fn inflate(&self) -> Vec<Step> {
        let k = self.k as usize;
        let mut out = Vec::with_capacity(2 * self.n as usize);
        for st in &self.steps {
            match *st {
                GdStep::North => out.extend(std::iter::repeat_n(Step::N, k)),
                GdStep::East => out.extend(std::iter::repeat_n(Step::E, k)),
                GdStep::Diagonal(i) => {
                    out.extend(std::iter::repeat_n(Step::N, i as usize));
                    out.extend(std::iter::repeat_n(Step::E, i as usize));
                }
            }
        }
        out
    }

    /// Labels of the labeled cells strictly between the inflated path and the
    /// diagonal, sorted. See [`cell_label`] for the labeling.
    pub fn labels_below(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let (mut x, mut y) = (0u64, 0u64);
        for st in self.inflate() {
            match st {
                Step::N => y += 1,
                Step::E => {
                    // column x lies under the path up to height y
                    out.extend((x + 1..y).filter_map(|row| cell_label(self.n, self.k, x, row)));
                    x += 1;
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The lower ideal of `T_{n,k}` made of the labels below the inflated path.
    ///
    /// `poset` must be `T_{n,k}`, i.e. the gap poset of `{n, ..., n+k}`.
    pub fn to_ideal(&self, poset: &GapPoset) -> Result<LowerIdeal> {
        let expected: Vec<u64> = (self.n..=self.n + self.k).collect();
        if poset.generators().as_slice() != expected.as_slice() {
            return Err(Error::InvalidPath {
                reason: format!(
                    "path has (n,k) = ({},{}) but the poset is generated by {:?}",
                    self.n,
                    self.k,
                    poset.generators().as_slice()
                ),
            });
        }
        let ideal = poset
            .lower_ideal(self.labels_below())
            .unwrap_or_else(|e| panic!("cell labeling produced a non-ideal for {self:?}: {e}"));
        Ok(ideal)
    }
}

impl fmt::Display for GeneralizedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.steps.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", names.join(" "))
    }
}

/// Label of the unit cell with lower-left corner `(x, row)` in the `n x n`
/// grid, if it carries one.
///
/// Cells strictly above `y = x` lie on superdiagonals `d = row - x >= 1`.
/// Only the diagonals `d = 1 + c*k` are labeled; along diagonal `c` the cells
/// are numbered left to right starting at `1 + c*(n+k)`. Diagonal `c` holds
/// `n - 1 - c*k` cells, matching the run of gaps of `{n, ..., n+k}` that lie
/// between `c*(n+k)` and `(c+1)*n`.
pub fn cell_label(n: u64, k: u64, x: u64, row: u64) -> Option<u64> {
    if row <= x || row >= n {
        return None;
    }
    let d = row - x;
    if !(d - 1).is_multiple_of(k) {
        return None;
    }
    let c = (d - 1) / k;
    Some(1 + c * (n + k) + x)
}

/// `GD_{n,k}` via the first-return recursion
/// `GD_n = sum_{s=1..n} GD_{s-k} GD_{n-s}`, with `GD_n = 1` for `n <= 0`.
pub fn count_gd(n: i64, k: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::OutOfRange { name: "k", value: 0, expected: "k >= 1" });
    }
    Ok(count_gd_table(n.max(0) as usize, k).pop().expect("table is non-empty"))
}

/// `[GD_{0,k}, ..., GD_{n,k}]`.
pub fn count_gd_table(n: usize, k: u64) -> Vec<BigInt> {
    let k = k as i64;
    let mut gd: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n as i64 {
        let mut total = BigInt::zero();
        for s in 1..=m {
            let first = if s - k <= 0 { BigInt::one() } else { gd[(s - k) as usize].clone() };
            total += first * &gd[(m - s) as usize];
        }
        gd.push(total);
    }
    gd
}

/// Every generalized Dyck path for `(n, k)`, by depth-first search.
/// Steps are tried in the order `Nk`, `D1`, ..., `D(k-1)`, `Ek`.
pub fn enumerate_gd(n: u64, k: u64, cap: usize) -> Result<Vec<GeneralizedDyckPath>> {
    check_params(n, k)?;
    struct Walk {
        n: u64,
        k: u64,
        cap: usize,
        cur: Vec<GdStep>,
        out: Vec<GeneralizedDyckPath>,
    }
    impl Walk {
        fn go(&mut self, x: u64, y: u64) -> Result<()> {
            let (n, k) = (self.n, self.k);
            if (x, y) == (n, n) {
                if self.out.len() == self.cap {
                    return Err(Error::CapExceeded { cap: self.cap });
                }
                self.out.push(GeneralizedDyckPath { n, k, steps: self.cur.clone() });
                return Ok(());
            }
            let mut moves = Vec::with_capacity(k as usize + 1);
            if y + k <= n {
                moves.push((GdStep::North, x, y + k));
            }
            for i in 1..k {
                if y + i <= n {
                    moves.push((GdStep::Diagonal(i), x + i, y + i));
                }
            }
            if x + k <= y {
                moves.push((GdStep::East, x + k, y));
            }
            for (st, nx, ny) in moves {
                self.cur.push(st);
                self.go(nx, ny)?;
                self.cur.pop();
            }
            Ok(())
        }
    }
    let mut w = Walk { n, k, cap, cur: Vec::new(), out: Vec::new() };
    w.go(0, 0)?;
    Ok(w.out)
}
