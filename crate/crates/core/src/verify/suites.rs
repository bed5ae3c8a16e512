use num_bigint::BigInt;
use num_traits::Zero;

use super::*;
use crate::algebra::hessenberg_catalan_det;
use crate::paths::{count_gd, count_rect_paths, diagonal_partition, enumerate_gd, enumerate_rect_paths};
use crate::poset::DEFAULT_IDEAL_CAP;

/// Named parameter sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `#ideals = #paths = C(s+t,s)/(s+t) = #cores` for coprime pairs.
    EquinumerousPairs,
    /// `#cores = #generalized paths = #ideals` for consecutive generators.
    EquinumerousConsecutive,
    Kreweras,
    QDeterminant,
    Coarea,
    CatalanIdentity,
    HessenbergCatalan,
    Popoviciu,
    FrobeniusSylvester,
    Symmetry,
    MultiCatalan,
    Motzkin,
    GeneratingFunction,
    GdCounts,
    GdSmallN,
    GdBijection,
    Conjecture,
}

/// Parameter ranges for every suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteLimits {
    /// Coprime pairs `s < t` with `s + t <= pair_max_sum`.
    pub pair_max_sum: u64,
    /// Partitions inside a `box_side x box_side` box.
    pub kreweras_box: usize,
    pub qdet_box: usize,
    pub coarea_max_sum: u64,
    pub identity_max_n: u64,
    pub hessenberg_max_n: u64,
    /// Coprime `s < t <= popoviciu_max_t`, `0 <= m <= st`.
    pub popoviciu_max_t: u64,
    /// Odd `3 <= s <= symmetry_max_s`.
    pub symmetry_max_s: u64,
    pub multi_catalan_max_s: u64,
    pub multi_catalan_max_p: u64,
    pub motzkin_max_s: u64,
    pub gf_ps: Vec<u64>,
    pub gf_terms: usize,
    pub gd_max_n: u64,
    pub gd_max_k: u64,
    pub gd_small_max_k: u64,
    pub gd_bijection_max_n: u64,
    pub gd_bijection_max_k: u64,
    pub conjecture_max_s: u64,
}

impl Default for SuiteLimits {
    fn default() -> Self {
        SuiteLimits {
            pair_max_sum: 16,
            kreweras_box: 5,
            qdet_box: 4,
            coarea_max_sum: 14,
            identity_max_n: 30,
            hessenberg_max_n: 12,
            popoviciu_max_t: 12,
            symmetry_max_s: 25,
            multi_catalan_max_s: 12,
            multi_catalan_max_p: 4,
            motzkin_max_s: 20,
            gf_ps: vec![1, 2, 3],
            gf_terms: 20,
            gd_max_n: 10,
            gd_max_k: 4,
            gd_small_max_k: 6,
            gd_bijection_max_n: 8,
            gd_bijection_max_k: 3,
            conjecture_max_s: 10,
        }
    }
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::EquinumerousPairs,
        Suite::EquinumerousConsecutive,
        Suite::Kreweras,
        Suite::QDeterminant,
        Suite::Coarea,
        Suite::CatalanIdentity,
        Suite::HessenbergCatalan,
        Suite::Popoviciu,
        Suite::FrobeniusSylvester,
        Suite::Symmetry,
        Suite::MultiCatalan,
        Suite::Motzkin,
        Suite::GeneratingFunction,
        Suite::GdCounts,
        Suite::GdSmallN,
        Suite::GdBijection,
        Suite::Conjecture,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::EquinumerousPairs => "equinumerous-pairs",
            Suite::EquinumerousConsecutive => "equinumerous-consecutive",
            Suite::Kreweras => "kreweras",
            Suite::QDeterminant => "qdet",
            Suite::Coarea => "coarea",
            Suite::CatalanIdentity => "catalan-identity",
            Suite::HessenbergCatalan => "hessenberg-catalan",
            Suite::Popoviciu => "popoviciu",
            Suite::FrobeniusSylvester => "frobenius-sylvester",
            Suite::Symmetry => "symmetry",
            Suite::MultiCatalan => "multi-catalan",
            Suite::Motzkin => "motzkin",
            Suite::GeneratingFunction => "gf",
            Suite::GdCounts => "gd-counts",
            Suite::GdSmallN => "gd-small-n",
            Suite::GdBijection => "gd-bijection",
            Suite::Conjecture => "conjecture",
        }
    }

    pub fn run(self, limits: &SuiteLimits, jobs: usize) -> CheckReport {
        let l = limits;
        match self {
            Suite::EquinumerousPairs => {
                let pairs = coprime_pairs(|s, t| s + t <= l.pair_max_sum);
                run_check(
                    self.id(),
                    format!("coprime 1 <= s < t, s + t <= {}", l.pair_max_sum),
                    pairs,
                    jobs,
                    |&(s, t)| pair_equinumerosity(s, t),
                )
            }
            Suite::EquinumerousConsecutive => {
                let params = grid(1..=l.gd_max_n, 1..=l.gd_max_k);
                run_check(
                    self.id(),
                    format!("1 <= n <= {}, 1 <= k <= {}", l.gd_max_n, l.gd_max_k),
                    params,
                    jobs,
                    |&(n, k)| consecutive_equinumerosity(n, k),
                )
            }
            Suite::Kreweras => {
                let shapes = shapes_in_box(l.kreweras_box);
                run_check(self.id(), format!("{0}x{0} box", l.kreweras_box), shapes, jobs, |lambda| {
                    let det = kreweras_count(lambda);
                    let listed = lambda.iter_subpartitions().count();
                    Instance::new(
                        lambda.to_string(),
                        det == BigInt::from(listed),
                        format!("det {det}, listed {listed}"),
                    )
                })
            }
            Suite::QDeterminant => {
                let shapes = shapes_in_box(l.qdet_box);
                run_check(self.id(), format!("{0}x{0} box", l.qdet_box), shapes, jobs, |lambda| {
                    let det = qdet_coarea(lambda);
                    let brute = subpartition_size_polynomial(lambda);
                    let at_one = det.eval_at_one() == kreweras_count(lambda);
                    Instance::new(lambda.to_string(), det == brute && at_one, format!("det {det}, brute {brute}"))
                })
            }
            Suite::Coarea => {
                let pairs = coprime_pairs(|s, t| s + t <= l.coarea_max_sum);
                let pairs: Vec<(u64, u64)> = pairs.into_iter().flat_map(|(s, t)| [(s, t), (t, s)]).collect();
                run_check(self.id(), format!("coprime s, t, s + t <= {}", l.coarea_max_sum), pairs, jobs, |&(s, t)| {
                    coarea_distribution(s, t)
                })
            }
            Suite::CatalanIdentity => run_check(
                self.id(),
                format!("2 <= n <= {}", l.identity_max_n),
                (2..=l.identity_max_n).collect(),
                jobs,
                |&n| {
                    let v = catalan_identity(n);
                    if v.is_zero() {
                        Instance::new(format!("n={n}"), true, "sum = 0")
                    } else {
                        Instance::counterexample(format!("n={n}"), format!("sum = {v}"))
                    }
                },
            ),
            Suite::HessenbergCatalan => run_check(
                self.id(),
                format!("1 <= n <= {}", l.hessenberg_max_n),
                (1..=l.hessenberg_max_n).collect(),
                jobs,
                |&n| match hessenberg_catalan_det(n) {
                    Ok(d) => {
                        let c = catalan(n);
                        Instance::new(format!("n={n}"), d == c, format!("det {d}, C_n {c}"))
                    }
                    Err(e) => Instance::new(format!("n={n}"), false, e.to_string()),
                },
            ),
            Suite::Popoviciu => {
                let pairs = coprime_pairs(|_, t| t <= l.popoviciu_max_t);
                run_check(
                    self.id(),
                    format!("coprime 1 <= s < t <= {}, 0 <= m <= st", l.popoviciu_max_t),
                    pairs,
                    jobs,
                    |&(s, t)| {
                        for m in 0..=s * t {
                            let brute = representation_count(s, t, m);
                            match popoviciu(s, t, m) {
                                Ok(v) if v == BigInt::from(brute) => {}
                                Ok(v) => {
                                    return Instance::counterexample(
                                        format!("(s,t)=({s},{t})"),
                                        format!("m={m}: formula {v}, direct {brute}"),
                                    )
                                }
                                Err(e) => {
                                    return Instance::counterexample(format!("(s,t)=({s},{t})"), format!("m={m}: {e}"))
                                }
                            }
                        }
                        Instance::new(format!("(s,t)=({s},{t})"), true, format!("{} values agree", s * t + 1))
                    },
                )
            }
            Suite::FrobeniusSylvester => {
                let pairs = coprime_pairs(|s, t| s >= 2 && t <= l.popoviciu_max_t);
                run_check(self.id(), format!("coprime 2 <= s < t <= {}", l.popoviciu_max_t), pairs, jobs, |&(s, t)| {
                    frobenius_instance(s, t)
                })
            }
            Suite::Symmetry => {
                let params: Vec<u64> = (3..=l.symmetry_max_s).step_by(2).collect();
                run_check(self.id(), format!("odd 3 <= s <= {}", l.symmetry_max_s), params, jobs, |&s| {
                    match symmetry_check(s) {
                        Ok(r) if r.passed() => {
                            Instance::new(format!("s={s}"), true, format!("{} entries", r.instances.len()))
                        }
                        Ok(r) => Instance::counterexample(format!("s={s}"), r.counterexample.unwrap_or_default()),
                        Err(e) => Instance::new(format!("s={s}"), false, e.to_string()),
                    }
                })
            }
            Suite::MultiCatalan => {
                let params = grid(1..=l.multi_catalan_max_s, 1..=l.multi_catalan_max_p);
                run_check(
                    self.id(),
                    format!("1 <= s <= {}, 1 <= p <= {}", l.multi_catalan_max_s, l.multi_catalan_max_p),
                    params,
                    jobs,
                    |&(s, p)| {
                        let rec = multi_catalan(s as i64, p).expect("p >= 1");
                        let direct = GapPoset::consecutive(s, p).expect("consecutive").count_lower_ideals();
                        let mut ok = rec == direct;
                        if p == 1 {
                            ok &= rec == catalan(s);
                        }
                        Instance::new(format!("(s,p)=({s},{p})"), ok, format!("recursion {rec}, ideals {direct}"))
                    },
                )
            }
            Suite::Motzkin => {
                let reference = motzkin_numbers(l.motzkin_max_s as usize);
                run_check(
                    self.id(),
                    format!("0 <= s <= {}", l.motzkin_max_s),
                    (0..=l.motzkin_max_s).collect(),
                    jobs,
                    |&s| {
                        let c2 = multi_catalan(s as i64, 2).expect("p = 2");
                        let sum = motzkin_sum(s);
                        let m = &reference[s as usize];
                        if &c2 != m {
                            Instance::new(format!("s={s}"), false, format!("C^(2) {c2}, Motzkin {m}"))
                        } else if &sum != m {
                            Instance::counterexample(format!("s={s}"), format!("binomial sum {sum}, Motzkin {m}"))
                        } else {
                            Instance::new(format!("s={s}"), true, format!("{m}"))
                        }
                    },
                )
            }
            Suite::GeneratingFunction => {
                let n = l.gf_terms;
                run_check(
                    self.id(),
                    format!("p in {:?} (closed form with r = p + 1), {n} terms", l.gf_ps),
                    l.gf_ps.clone(),
                    jobs,
                    |&p| match gf_coefficients(p, n) {
                        Ok(c) => {
                            let rec = multi_catalan_table(n - 1, p);
                            Instance::new(format!("p={p}"), c == rec, join(&c))
                        }
                        Err(e) => Instance::counterexample(format!("p={p}"), e.to_string()),
                    },
                )
            }
            Suite::GdCounts => {
                let params = grid(1..=l.gd_max_n, 1..=l.gd_max_k);
                run_check(
                    self.id(),
                    format!("1 <= n <= {}, 1 <= k <= {}", l.gd_max_n, l.gd_max_k),
                    params,
                    jobs,
                    |&(n, k)| {
                        let listed = enumerate_gd(n, k, usize::MAX).map(|v| v.len());
                        let rec = count_gd(n as i64, k).expect("k >= 1");
                        let mc = multi_catalan(n as i64, k).expect("k >= 1");
                        match listed {
                            Ok(c) => Instance::new(
                                format!("(n,k)=({n},{k})"),
                                BigInt::from(c) == rec && rec == mc,
                                format!("listed {c}, recursion {rec}, C^(k) {mc}"),
                            ),
                            Err(e) => Instance::new(format!("(n,k)=({n},{k})"), false, e.to_string()),
                        }
                    },
                )
            }
            Suite::GdSmallN => {
                let params: Vec<(u64, u64)> =
                    grid(1..=l.gd_small_max_k, 1..=l.gd_small_max_k).into_iter().filter(|&(n, k)| n <= k).collect();
                run_check(self.id(), format!("1 <= n <= k <= {}", l.gd_small_max_k), params, jobs, |&(n, k)| {
                    let listed = enumerate_gd(n, k, usize::MAX).map(|v| v.len()).unwrap_or(0);
                    let rec = count_gd(n as i64, k).expect("k >= 1");
                    let expect = 1usize << (n - 1);
                    Instance::new(
                        format!("(n,k)=({n},{k})"),
                        listed == expect && rec == BigInt::from(expect),
                        format!("listed {listed}, recursion {rec}, 2^(n-1) = {expect}"),
                    )
                })
            }
            Suite::GdBijection => {
                let params = grid(1..=l.gd_bijection_max_n, 1..=l.gd_bijection_max_k);
                run_check(
                    self.id(),
                    format!("1 <= n <= {}, 1 <= k <= {}", l.gd_bijection_max_n, l.gd_bijection_max_k),
                    params,
                    jobs,
                    |&(n, k)| gd_bijection(n, k),
                )
            }
            Suite::Conjecture => {
                let params: Vec<u64> = (3..=l.conjecture_max_s).collect();
                run_check(self.id(), format!("3 <= s <= {}", l.conjecture_max_s), params, jobs, |&s| {
                    conjecture_instance(s)
                })
            }
        }
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn grid(a: std::ops::RangeInclusive<u64>, b: std::ops::RangeInclusive<u64>) -> Vec<(u64, u64)> {
    a.flat_map(|x| b.clone().map(move |y| (x, y))).collect()
}

/// Coprime `1 <= s < t` accepted by `keep`, for `t` up to 64.
fn coprime_pairs(keep: impl Fn(u64, u64) -> bool) -> Vec<(u64, u64)> {
    (1..64u64)
        .flat_map(|t| (1..t).map(move |s| (s, t)))
        .filter(|&(s, t)| num_integer::gcd(s, t) == 1 && keep(s, t))
        .collect()
}

fn shapes_in_box(side: usize) -> Vec<Partition> {
    Partition::new(vec![side; side])
        .map(|b| b.iter_subpartitions().collect())
        .unwrap_or_else(|_| vec![Partition::empty()])
}

/// Four independent counts for a coprime pair.
pub(crate) fn pair_equinumerosity(s: u64, t: u64) -> Instance {
    let params = format!("(s,t)=({s},{t})");
    let run = || -> Result<(BigInt, usize, BigInt, usize)> {
        let ideals = GapPoset::from_generators(&[s, t])?.count_lower_ideals();
        let paths = enumerate_rect_paths(s, t, usize::MAX)?.len();
        let formula = count_rect_paths(s, t)?;
        let cores = enumerate_cores_by_hook_sets(&[s, t], DEFAULT_IDEAL_CAP)?.len();
        Ok((ideals, paths, formula, cores))
    };
    match run() {
        Ok((ideals, paths, formula, cores)) => {
            let ok = ideals == formula && BigInt::from(paths) == formula && BigInt::from(cores) == formula;
            let detail = format!("cores {cores}, paths {paths}, ideals {ideals}, formula {formula}");
            if ok {
                Instance::new(params, true, detail)
            } else {
                Instance::counterexample(params, detail)
            }
        }
        Err(e) => Instance::new(params, false, e.to_string()),
    }
}

pub(crate) fn consecutive_equinumerosity(n: u64, k: u64) -> Instance {
    let params = format!("(n,k)=({n},{k})");
    let run = || -> Result<(usize, usize, BigInt)> {
        let gens: Vec<u64> = (n..=n + k).collect();
        let cores = enumerate_cores_by_hook_sets(&gens, DEFAULT_IDEAL_CAP)?.len();
        let paths = enumerate_gd(n, k, usize::MAX)?.len();
        let ideals = GapPoset::consecutive(n, k)?.count_lower_ideals();
        Ok((cores, paths, ideals))
    };
    match run() {
        Ok((cores, paths, ideals)) => {
            let ok = BigInt::from(cores) == ideals && BigInt::from(paths) == ideals;
            let detail = format!("cores {cores}, paths {paths}, ideals {ideals}");
            if ok {
                Instance::new(params, true, detail)
            } else {
                Instance::counterexample(params, detail)
            }
        }
        Err(e) => Instance::new(params, false, e.to_string()),
    }
}

pub(crate) fn coarea_distribution(s: u64, t: u64) -> Instance {
    let params = format!("(s,t)=({s},{t})");
    let run = || -> Result<(QPoly, QPoly, QPoly)> {
        let lambda = diagonal_partition(s, t)?;
        let mut coeffs = vec![BigInt::zero(); lambda.size() + 1];
        for path in enumerate_rect_paths(s, t, usize::MAX)? {
            coeffs[path.coarea()] += 1;
        }
        Ok((QPoly::new(coeffs), subpartition_size_polynomial(&lambda), qdet_coarea(&lambda)))
    };
    match run() {
        Ok((paths, subs, det)) => Instance::new(
            params,
            paths == subs && subs == det,
            format!("paths {paths}; subpartitions {subs}; determinant {det}"),
        ),
        Err(e) => Instance::new(params, false, e.to_string()),
    }
}

fn frobenius_instance(s: u64, t: u64) -> Instance {
    let params = format!("(s,t)=({s},{t})");
    let run = || -> Result<(u64, Option<u64>, bool)> {
        let f = frobenius_pair(s, t)?;
        let max_gap = GapPoset::from_generators(&[s, t])?.frobenius_number();
        Ok((f, max_gap, sylvester_check(s, t)?))
    };
    match run() {
        Ok((f, max_gap, half)) => {
            let detail = format!("st-s-t = {f}, largest gap {max_gap:?}, half-count {half}");
            if max_gap == Some(f) && half {
                Instance::new(params, true, detail)
            } else {
                Instance::counterexample(params, detail)
            }
        }
        Err(e) => Instance::new(params, false, e.to_string()),
    }
}

fn gd_bijection(n: u64, k: u64) -> Instance {
    let params = format!("(n,k)=({n},{k})");
    let run = || -> Result<(usize, usize, usize)> {
        let poset = GapPoset::consecutive(n, k)?;
        let ideals: std::collections::BTreeSet<_> = poset.lower_ideals(DEFAULT_IDEAL_CAP)?.into_iter().collect();
        let images = enumerate_gd(n, k, usize::MAX)?.iter().map(|p| p.to_ideal(&poset)).collect::<Result<Vec<_>>>()?;
        let image_set: std::collections::BTreeSet<_> = images.iter().cloned().collect();
        let hit = image_set.intersection(&ideals).count();
        Ok((images.len(), image_set.len(), if image_set == ideals { hit } else { usize::MAX }))
    };
    match run() {
        Ok((paths, distinct, hit)) => Instance::new(
            params,
            paths == distinct && hit == distinct,
            if hit == usize::MAX {
                format!("{paths} paths, {distinct} distinct images, image differs from the ideal set")
            } else {
                format!("{paths} paths onto {hit} ideals")
            },
        ),
        Err(e) => Instance::new(params, false, e.to_string()),
    }
}

/// Compares the two core enumerations with each other and with the
/// conjectured closed form.
fn conjecture_instance(s: u64) -> Instance {
    let params = format!("s={s}");
    let gens = [s, s + 1, s + 2];
    let run = || -> Result<(BigInt, BigInt, BigInt)> {
        let (lhs, rhs) = conjecture_total_size(s)?;
        let second: BigInt = enumerate_cores_by_hook_sets(&gens, DEFAULT_IDEAL_CAP)?.iter().map(Partition::size).sum();
        Ok((lhs, second, rhs))
    };
    match run() {
        Ok((lhs, second, rhs)) => {
            let detail = format!("lhs {lhs} (hook-set enumeration {second}), rhs {rhs}");
            if lhs != second {
                Instance::new(params, false, format!("enumerations disagree: {detail}"))
            } else if lhs != rhs {
                Instance::counterexample(params, detail)
            } else {
                Instance::new(params, true, detail)
            }
        }
        Err(e) => Instance::new(params, false, e.to_string()),
    }
}
