use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Step;
use crate::algebra::{binom, gcd};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// North/east lattice path from `(0,0)` to `(t,s)` that stays weakly above
/// the diagonal `t*y = s*x`. The rectangle is `t` wide and `s` tall.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRectPath")]
pub struct RectPath {
    s: u64,
    t: u64,
    steps: Vec<Step>,
}

#[derive(Deserialize)]
struct RawRectPath {
    s: u64,
    t: u64,
    steps: Vec<Step>,
}

impl TryFrom<RawRectPath> for RectPath {
    type Error = Error;
    fn try_from(raw: RawRectPath) -> Result<Self> {
        RectPath::new(raw.s, raw.t, raw.steps)
    }
}

fn check_coprime(s: u64, t: u64) -> Result<()> {
    if s == 0 || t == 0 {
        return Err(Error::OutOfRange { name: if s == 0 { "s" } else { "t" }, value: 0, expected: "s, t >= 1" });
    }
    let g = gcd(s, t);
    if g != 1 {
        return Err(Error::NotCoprime { a: s, b: t, gcd: g });
    }
    Ok(())
}

impl RectPath {
    pub fn new(s: u64, t: u64, steps: Vec<Step>) -> Result<Self> {
        check_coprime(s, t)?;
        let (mut x, mut y) = (0u64, 0u64);
        for (i, st) in steps.iter().enumerate() {
            match st {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if x > t || y > s || t * y < s * x {
                return Err(Error::InvalidPath {
                    reason: format!("step {i} reaches ({x},{y}), outside the region above the diagonal"),
                });
            }
        }
        if (x, y) != (t, s) {
            return Err(Error::InvalidPath { reason: format!("path ends at ({x},{y}), not ({t},{s})") });
        }
        Ok(RectPath { s, t, steps })
    }

    /// The path whose cells above it, read column by column from the left,
    /// are the parts of `mu`.
    pub fn from_subpartition(s: u64, t: u64, mu: &Partition) -> Result<Self> {
        check_coprime(s, t)?;
        if mu.len() > t as usize || mu.part(0) > s as usize {
            return Err(Error::InvalidPath { reason: format!("{mu} does not fit in a {t}x{s} rectangle") });
        }
        let mut steps = Vec::with_capacity((s + t) as usize);
        let mut y = 0u64;
        for x in 0..t as usize {
            let height = s - mu.part(x) as u64;
            while y < height {
                steps.push(Step::N);
                y += 1;
            }
            steps.push(Step::E);
        }
        while y < s {
            steps.push(Step::N);
            y += 1;
        }
        Self::new(s, t, steps)
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn vertices(&self) -> Vec<(u64, u64)> {
        let mut out = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for st in &self.steps {
            match st {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            out.push((x, y));
        }
        out
    }

    /// Cells between the path and the top edge, per column from the left.
    pub fn cells_above(&self) -> Partition {
        let mut y = 0u64;
        let mut cols = Vec::with_capacity(self.t as usize);
        for st in &self.steps {
            match st {
                Step::N => y += 1,
                Step::E => cols.push((self.s - y) as usize),
            }
        }
        Partition::from_unsorted(cols)
    }

    /// Number of full cells between the path and the far (top-left) corner.
    pub fn coarea(&self) -> usize {
        self.cells_above().size()
    }
}

/// `C(s+t, s) / (s+t)`, the number of `(s,t)`-Dyck paths for coprime `s, t`.
pub fn count_rect_paths(s: u64, t: u64) -> Result<BigInt> {
    check_coprime(s, t)?;
    Ok(binom(s + t, s) / (s + t))
}

/// Partition above the path closest to the diagonal: parts `floor(s*i/t)`
/// for `i = 1..t-1`, zeros dropped.
pub fn diagonal_partition(s: u64, t: u64) -> Result<Partition> {
    check_coprime(s, t)?;
    Ok(Partition::from_unsorted((1..t).map(|i| (s * i / t) as usize).collect()))
}

/// Every `(s,t)`-Dyck path, north steps tried before east steps.
pub fn enumerate_rect_paths(s: u64, t: u64, cap: usize) -> Result<Vec<RectPath>> {
    check_coprime(s, t)?;
    fn walk(s: u64, t: u64, x: u64, y: u64, cur: &mut Vec<Step>, out: &mut Vec<RectPath>, cap: usize) -> Result<()> {
        if (x, y) == (t, s) {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(RectPath { s, t, steps: cur.clone() });
            return Ok(());
        }
        if y < s {
            cur.push(Step::N);
            walk(s, t, x, y + 1, cur, out, cap)?;
            cur.pop();
        }
        if x < t && t * y >= s * (x + 1) {
            cur.push(Step::E);
            walk(s, t, x + 1, y, cur, out, cap)?;
            cur.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    walk(s, t, 0, 0, &mut Vec::new(), &mut out, cap)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QPoly;
    use crate::paths::DEFAULT_PATH_CAP;
    use std::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All N/E words with the right step counts, filtered by the diagonal test.
    fn brute_paths(s: u64, t: u64) -> usize {
        let len = (s + t) as u32;
        (0u32..1 << len)
            .filter(|m| m.count_ones() as u64 == s)
            .filter(|m| {
                let (mut x, mut y) = (0u64, 0u64);
                (0..len).all(|i| {
                    if m >> i & 1 == 1 {
                        y += 1
                    } else {
                        x += 1
                    }
                    t * y >= s * x
                })
            })
            .count()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_rect_paths(3, 5).unwrap(), BigInt::from(7));
        assert_eq!(count_rect_paths(5, 7).unwrap(), BigInt::from(66));
        for t in 1..10 {
            assert_eq!(count_rect_paths(1, t).unwrap(), BigInt::from(1));
        }
        assert_eq!(count_rect_paths(4, 6).unwrap_err(), Error::NotCoprime { a: 4, b: 6, gcd: 2 });
    }

    #[test]
    fn diagonal_partition_examples() {
        assert_eq!(diagonal_partition(7, 5).unwrap(), p(&[5, 4, 2, 1]));
        assert_eq!(diagonal_partition(3, 5).unwrap(), p(&[2, 1, 1]));
        for t in 1..8 {
            assert!(diagonal_partition(1, t).unwrap().is_empty());
        }
        assert!(diagonal_partition(2, 4).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_rect_paths(3, 5, DEFAULT_PATH_CAP).unwrap().len(), 7);
        assert_eq!(enumerate_rect_paths(1, 2, DEFAULT_PATH_CAP).unwrap().len(), 1);
        assert_eq!(enumerate_rect_paths(5, 7, DEFAULT_PATH_CAP).unwrap().len(), 66);
        assert_eq!(enumerate_rect_paths(5, 7, 10).unwrap_err(), Error::CapExceeded { cap: 10 });
    }

    #[test]
    fn enumeration_matches_brute_force_words() {
        for s in 1..=8u64 {
            for t in 1..=9u64 {
                if gcd(s, t) == 1 && s + t <= 14 {
                    let n = enumerate_rect_paths(s, t, DEFAULT_PATH_CAP).unwrap().len();
                    assert_eq!(n, brute_paths(s, t), "({s},{t})");
                }
            }
        }
    }

    #[test]
    fn coarea_examples() {
        let hug = RectPath::from_subpartition(7, 5, &diagonal_partition(7, 5).unwrap()).unwrap();
        assert_eq!(hug.coarea(), 12);
        let mut steps = vec![Step::N; 7];
        steps.extend(vec![Step::E; 5]);
        assert_eq!(RectPath::new(7, 5, steps).unwrap().coarea(), 0);

        let mut poly = vec![0i64; 5];
        for path in enumerate_rect_paths(3, 5, DEFAULT_PATH_CAP).unwrap() {
            poly[path.coarea()] += 1;
        }
        assert_eq!(QPoly::from_i64s(&poly), QPoly::from_i64s(&[1, 1, 2, 2, 1]));
    }

    #[test]
    fn paths_biject_with_subpartitions_of_the_diagonal_shape() {
        for (s, t) in [(3, 5), (5, 3), (7, 5), (4, 7), (2, 9)] {
            let lambda = diagonal_partition(s, t).unwrap();
            let paths = enumerate_rect_paths(s, t, DEFAULT_PATH_CAP).unwrap();
            let shapes: BTreeSet<Partition> = paths.iter().map(RectPath::cells_above).collect();
            assert_eq!(shapes.len(), paths.len());
            assert!(shapes.iter().all(|mu| lambda.contains(mu)));
            assert_eq!(BigInt::from(shapes.len()), lambda.count_subpartitions());
            for path in &paths {
                assert_eq!(&RectPath::from_subpartition(s, t, &path.cells_above()).unwrap(), path);
            }
        }
    }

    #[test]
    fn invalid_paths_rejected() {
        assert!(RectPath::new(3, 5, vec![Step::E]).is_err());
        assert!(RectPath::new(3, 5, vec![Step::N, Step::N, Step::N]).is_err());
        assert!(RectPath::new(2, 4, vec![]).is_err());
        let json = r#"{"s":3,"t":5,"steps":["N","E","N","E","N","E","E","E"]}"#;
        let path: RectPath = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&path).unwrap(), json);
        let bad = r#"{"s":3,"t":5,"steps":["E","N","N","E","N","E","E","E"]}"#;
        assert!(serde_json::from_str::<RectPath>(bad).is_err());
    }
}
