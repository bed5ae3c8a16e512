//! Each counting statement as a function with an independent oracle, plus
//! parameter sweeps that compare the two and produce [`CheckReport`]s.

mod report;
mod suites;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    binom, binomial, catalan, det_exact, det_qpoly, q_binomial, IntMatrix, PowerSeries, QPoly, QPolyMatrix,
};
use crate::error::{Error, Result};
use crate::partition::{HookSet, Partition};
use crate::poset::{multi_catalan, multi_catalan_table, GapPoset};

pub use report::{run_check, CheckReport, Instance};
pub use suites::{Suite, SuiteLimits};

/// `k x k` matrix with entries `C(lambda_j + 1, j - i + 1)` (1-based).
pub fn kreweras_matrix(lambda: &Partition) -> IntMatrix {
    let k = lambda.len();
    IntMatrix::from_fn(k, |i, j| binomial(lambda.part(j) as i64 + 1, j as i64 - i as i64 + 1).expect("top is positive"))
}

/// Number of partitions contained in `lambda`, as a determinant.
pub fn kreweras_count(lambda: &Partition) -> BigInt {
    det_exact(&kreweras_matrix(lambda))
}

/// Matrix with entries `q^C(j-i+1, 2) [lambda_j + 1 over j - i + 1]_q`.
pub fn qdet_matrix(lambda: &Partition) -> QPolyMatrix {
    let k = lambda.len();
    QPolyMatrix::from_fn(k, |i, j| {
        let m = j as i64 - i as i64 + 1;
        if m < 0 {
            return QPoly::zero();
        }
        let shift = (m * (m - 1) / 2) as usize;
        &QPoly::monomial(shift) * &q_binomial(lambda.part(j) as u64 + 1, m)
    })
}

/// `sum_{mu <= lambda} q^|mu|` as a determinant.
pub fn qdet_coarea(lambda: &Partition) -> QPoly {
    det_qpoly(&qdet_matrix(lambda))
}

/// `sum_{mu <= lambda} q^|mu|` by listing every subpartition.
pub fn subpartition_size_polynomial(lambda: &Partition) -> QPoly {
    let mut coeffs = vec![BigInt::zero(); lambda.size() + 1];
    for mu in lambda.iter_subpartitions() {
        coeffs[mu.size()] += 1;
    }
    QPoly::new(coeffs)
}

/// `sum_{k=1..n} (-1)^k C(k+1, n-k) C_k`, claimed to vanish for `n >= 2`.
pub fn catalan_identity(n: u64) -> BigInt {
    (1..=n)
        .map(|k| {
            let term = binom(k + 1, n - k) * catalan(k);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Representative of `a^-1 mod m` in `0..m` (0 when `m == 1`).
fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let eg = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(eg.gcd, 1);
    eg.x.rem_euclid(m as i64) as u64
}

/// Fractional part of `num / den` for non-negative `num`.
fn frac(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num % den), BigInt::from(den))
}

fn require_coprime(s: u64, t: u64) -> Result<()> {
    let g = num_integer::gcd(s, t);
    if s == 0 || t == 0 || g != 1 {
        return Err(Error::NotCoprime { a: s, b: t, gcd: g });
    }
    Ok(())
}

/// Number of ways to write `m = s*k + t*l` with `k, l >= 0`, from the closed
/// form `m/(st) - {t' m / s} - {s' m / t} + 1` where `t' t = 1 (mod s)` and
/// `s' s = 1 (mod t)`. Evaluated in exact rationals.
pub fn popoviciu(s: u64, t: u64, m: u64) -> Result<BigInt> {
    require_coprime(s, t)?;
    let t_inv = mod_inverse(t % s, s);
    let s_inv = mod_inverse(s % t, t);
    let value = BigRational::new(BigInt::from(m), BigInt::from(s * t))
        - frac((t_inv as u128 * m as u128 % s as u128) as u64, s)
        - frac((s_inv as u128 * m as u128 % t as u128) as u64, t)
        + BigRational::one();
    if !value.is_integer() || value.is_negative() {
        return Err(Error::FormulaViolation(format!(
            "representation count formula gave {value} for (s,t,m) = ({s},{t},{m})"
        )));
    }
    Ok(value.to_integer())
}

/// `#{(k, l) >= 0 : s*k + t*l = m}` by direct search.
pub fn representation_count(s: u64, t: u64, m: u64) -> u64 {
    (0..=m / s).filter(|k| (m - s * k).is_multiple_of(t)).count() as u64
}

/// `st - s - t`, the largest gap of `{s, t}`.
pub fn frobenius_pair(s: u64, t: u64) -> Result<u64> {
    require_coprime(s, t)?;
    if s < 2 || t < 2 {
        return Err(Error::OutOfRange { name: "min(s, t)", value: s.min(t) as i64, expected: "s, t >= 2" });
    }
    Ok(s * t - s - t)
}

/// Exactly half of `1..=(s-1)(t-1)` are gaps of `{s, t}`.
pub fn sylvester_check(s: u64, t: u64) -> Result<bool> {
    frobenius_pair(s, t)?;
    let poset = GapPoset::from_generators(&[s, t])?;
    let top = (s - 1) * (t - 1);
    let in_range = poset.gaps().iter().filter(|&&g| g <= top).count() as u64;
    Ok(2 * in_range == top)
}

/// Entry `(i, j)` of the `(s+1) x (s-1)` rectangle: `(s+1)(j-1) + i`.
pub fn rectangle_entry(s: u64, i: u64, j: u64) -> u64 {
    (s + 1) * (j - 1) + i
}

/// The entry paired with `(i, j)`: `(s+1)(s-1-j) + i`, i.e. column `s - j`.
pub fn reflected_entry(s: u64, i: u64, j: u64) -> u64 {
    (s + 1) * (s - 1 - j) + i
}

/// For odd `s >= 3`: each rectangle entry is a gap of `{s, s+2}` exactly
/// when its reflection is not. One instance per `(i, j)`.
pub fn symmetry_check(s: u64) -> Result<CheckReport> {
    if s.is_multiple_of(2) || s < 3 {
        return Err(Error::EvenSymmetryParameter { s });
    }
    let poset = GapPoset::from_generators(&[s, s + 2])?;
    let cells: Vec<(u64, u64)> = (1..=s - 1).flat_map(|j| (1..=s + 1).map(move |i| (i, j))).collect();
    Ok(run_check("symmetry", format!("s = {s}, 1 <= i <= {}, 1 <= j <= {}", s + 1, s - 1), cells, 1, |&(i, j)| {
        let a = rectangle_entry(s, i, j);
        let b = reflected_entry(s, i, j);
        let (ga, gb) = (poset.is_gap(a), poset.is_gap(b));
        let detail = format!("{a} gap={ga}, {b} gap={gb}");
        if ga != gb {
            Instance::new(format!("(i,j)=({i},{j})"), true, detail)
        } else {
            Instance::counterexample(format!("(i,j)=({i},{j})"), detail)
        }
    }))
}

/// `M_s` from `M_s = M_{s-1} + sum_{i=0}^{s-2} M_i M_{s-2-i}`.
pub fn motzkin_numbers(n: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(n + 1);
    for s in 0..=n {
        let v = if s < 2 {
            BigInt::one()
        } else {
            let mut acc = m[s - 1].clone();
            for i in 0..=s - 2 {
                acc += &m[i] * &m[s - 2 - i];
            }
            acc
        };
        m.push(v);
    }
    m
}

/// `sum_{k >= 0} C(s, 2k) C_k`.
pub fn motzkin_sum(s: u64) -> BigInt {
    (0..=s / 2).map(|k| binom(s, 2 * k) * catalan(k)).sum()
}

/// `C_s^(2) = sum_k C(s, 2k) C_k`.
pub fn motzkin_identity_check(s: u64) -> bool {
    multi_catalan(s as i64, 2).expect("p = 2 is valid") == motzkin_sum(s)
}

/// First `n_terms` coefficients of
/// `(2 - 2x - A(x) - sqrt(A(x)^2 - 4x^2)) / (2 x^(r-1))` with
/// `A(x) = 1 - x + (x^2 - x^(r-1)) / (1 - x)` and `r = p + 1`.
///
/// The closed form with parameter `r` generates `C_s^(r-1)`, so the caller
/// passes the poset parameter `p` directly. Fails with a formula violation if
/// the numerator is not divisible by `2 x^(r-1)` or a coefficient is not an
/// integer.
pub fn gf_coefficients(p: u64, n_terms: usize) -> Result<Vec<BigInt>> {
    if p == 0 {
        return Err(Error::OutOfRange { name: "p", value: 0, expected: "p >= 1" });
    }
    if n_terms == 0 {
        return Err(Error::OutOfRange { name: "n_terms", value: 0, expected: "n_terms >= 1" });
    }
    let r = p as usize + 1;
    let order = n_terms + r - 1;
    let x = |power: usize| PowerSeries::monomial(power, order);
    let one = PowerSeries::constant(1, order);
    let one_minus_x = one.sub(&x(1));
    let a = one_minus_x.add(&x(2).sub(&x(r - 1)).div(&one_minus_x)?);
    let radicand = a.mul(&a).sub(&x(2).scale(&BigRational::from_integer(4.into())));
    let root = radicand.sqrt()?;
    let numerator =
        PowerSeries::constant(2, order).sub(&x(1).scale(&BigRational::from_integer(2.into()))).sub(&a).sub(&root);
    let shifted = numerator
        .div_monomial(r - 1)
        .map_err(|e| Error::FormulaViolation(format!("numerator not divisible by 2x^{}: {e}", r - 1)))?;
    let series = shifted.scale(&BigRational::new(1.into(), 2.into()));
    series.to_integers().map_err(|e| Error::FormulaViolation(format!("generating function for p = {p}: {e}")))
}

/// `sum_{j=0}^{s-2} C(j+3, 3) C_j^(2)`.
pub fn conjectured_total_size(s: u64) -> BigInt {
    let table = multi_catalan_table(s.saturating_sub(2) as usize, 2);
    (0..=s.saturating_sub(2)).map(|j| binom(j + 3, 3) * &table[j as usize]).sum()
}

/// Total size of all `(s, s+1, s+2)`-cores, summed over the lower ideals of
/// `T_{s,2}`.
pub fn total_core_size_via_ideals(gens: &[u64]) -> Result<BigInt> {
    let poset = GapPoset::from_generators(gens)?;
    let mut total = BigInt::zero();
    poset.for_each_lower_ideal(|ideal| total += poset.ideal_to_core(ideal).size());
    Ok(total)
}

/// `(lhs, rhs)` for the total-size conjecture: lhs sums the sizes of all
/// `(s, s+1, s+2)`-cores, rhs is [`conjectured_total_size`].
pub fn conjecture_total_size(s: u64) -> Result<(BigInt, BigInt)> {
    if s < 3 {
        return Err(Error::OutOfRange { name: "s", value: s as i64, expected: "s >= 3" });
    }
    Ok((total_core_size_via_ideals(&[s, s + 1, s + 2])?, conjectured_total_size(s)))
}

/// Every `S`-core, found without the gap poset.
///
/// Builds first-column hook sets `H` over the candidates `1..(min-1)(max-1)`
/// (Schur's bound on the largest gap), admitting `h` only when `h - g` is
/// already in `H` for every generator `g <= h`. That closure rule is the
/// hook-set characterization of being a `g`-core. Each partition produced is
/// re-checked with the all-cells hook scan.
pub fn enumerate_cores_by_hook_sets(gens: &[u64], cap: usize) -> Result<Vec<Partition>> {
    let gset = crate::poset::GeneratorSet::new(gens.iter().copied())?;
    if !gset.is_finite() {
        return Err(Error::InfinitePoset { gens: gset.as_slice().to_vec(), divisor: gset.gcd() });
    }
    let bound = ((gset.min() - 1) * (gset.max() - 1)) as usize;
    let g: Vec<usize> = gset.as_slice().iter().map(|&x| x as usize).collect();
    let mut out = Vec::new();
    let mut member = vec![false; bound + 1];
    fn walk(
        h: usize,
        bound: usize,
        g: &[usize],
        member: &mut Vec<bool>,
        out: &mut Vec<Partition>,
        cap: usize,
    ) -> Result<()> {
        if h > bound {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            let hooks = HookSet::new((1..=bound).filter(|&x| member[x])).expect("positive");
            out.push(Partition::from_hooks(&hooks));
            return Ok(());
        }
        walk(h + 1, bound, g, member, out, cap)?;
        if g.iter().all(|&gen| h < gen || (h > gen && member[h - gen])) {
            member[h] = true;
            walk(h + 1, bound, g, member, out, cap)?;
            member[h] = false;
        }
        Ok(())
    }
    walk(1, bound, &g, &mut member, &mut out, cap)?;
    for core in &out {
        if !core.is_multicore(&g) {
            return Err(Error::FormulaViolation(format!("{core} passed the hook-set rule but fails the hook scan")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::diagonal_partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn kreweras_examples() {
        assert_eq!(kreweras_count(&p(&[2, 1])), BigInt::from(5));
        assert_eq!(kreweras_count(&Partition::empty()), BigInt::one());
        assert_eq!(kreweras_count(&p(&[2, 1, 1])), BigInt::from(7));
        let m = kreweras_matrix(&p(&[2, 1]));
        assert_eq!(m.rows(), vec![vec![BigInt::from(3), BigInt::from(1)], vec![BigInt::from(1), BigInt::from(2)]]);
    }

    #[test]
    fn qdet_examples() {
        assert_eq!(qdet_coarea(&p(&[1])), QPoly::from_i64s(&[1, 1]));
        assert_eq!(qdet_coarea(&p(&[2, 1])), QPoly::from_i64s(&[1, 1, 2, 1]));
        let diag = diagonal_partition(3, 5).unwrap();
        assert_eq!(qdet_coarea(&diag), QPoly::from_i64s(&[1, 1, 2, 2, 1]));
        assert_eq!(qdet_coarea(&Partition::empty()), QPoly::one());
    }

    #[test]
    fn catalan_identity_examples() {
        assert!(catalan_identity(2).is_zero());
        assert!(catalan_identity(3).is_zero());
        assert!(catalan_identity(20).is_zero());
        assert_eq!(catalan_identity(1), BigInt::from(-1));
    }

    #[test]
    fn popoviciu_examples() {
        assert_eq!(popoviciu(5, 7, 23).unwrap(), BigInt::zero());
        assert_eq!(popoviciu(5, 7, 24).unwrap(), BigInt::one());
        assert_eq!(representation_count(5, 7, 24), 1);
        for (s, t) in [(2, 3), (5, 7), (4, 9)] {
            assert_eq!(popoviciu(s, t, 0).unwrap(), BigInt::one());
        }
        assert!(matches!(popoviciu(4, 6, 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_pair(5, 7).unwrap(), 23);
        assert_eq!(frobenius_pair(2, 3).unwrap(), 1);
        assert_eq!(frobenius_pair(3, 4).unwrap(), 5);
        for (s, t) in [(5, 7), (2, 3), (3, 4)] {
            assert!(sylvester_check(s, t).unwrap());
        }
        assert_eq!(GapPoset::from_generators(&[3, 4]).unwrap().gaps(), &[1, 2, 5]);
        assert!(frobenius_pair(1, 4).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let r = symmetry_check(7).unwrap();
        assert!(r.passed());
        let first = &r.instances[0];
        assert_eq!(first.params, "(i,j)=(1,1)");
        assert_eq!(first.detail, "1 gap=true, 41 gap=false");
        let r3 = symmetry_check(3).unwrap();
        assert_eq!(r3.instances.len(), 8);
        assert!(r3.passed());
        assert_eq!(symmetry_check(4).unwrap_err(), Error::EvenSymmetryParameter { s: 4 });
        assert!(symmetry_check(1).is_err());
    }

    #[test]
    fn reflection_is_an_involution() {
        for s in (3..=25).step_by(2) {
            for j in 1..s {
                for i in 1..=s + 1 {
                    let j2 = s - j;
                    assert_eq!(reflected_entry(s, i, j), rectangle_entry(s, i, j2));
                    assert_eq!(reflected_entry(s, i, j2), rectangle_entry(s, i, j));
                }
            }
        }
    }

    #[test]
    fn motzkin_examples() {
        assert!(motzkin_identity_check(0));
        assert_eq!(motzkin_sum(4), BigInt::from(9));
        assert!(motzkin_identity_check(4));
        assert!(motzkin_identity_check(10));
        let m = motzkin_numbers(8);
        let expect = [1, 1, 2, 4, 9, 21, 51, 127, 323];
        assert_eq!(m, expect.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
    }

    #[test]
    fn gf_examples() {
        let as_i64 = |v: Vec<BigInt>| v.into_iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(gf_coefficients(1, 6).unwrap()), vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(as_i64(gf_coefficients(2, 6).unwrap()), vec![1, 1, 2, 4, 9, 21]);
        assert_eq!(as_i64(gf_coefficients(3, 5).unwrap()), vec![1, 1, 2, 4, 8]);
        for p in 1..=3 {
            assert_eq!(gf_coefficients(p, 20).unwrap(), multi_catalan_table(19, p));
        }
        assert!(gf_coefficients(0, 5).is_err());
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_total_size(3).unwrap(), (BigInt::from(5), BigInt::from(5)));
        assert_eq!(conjecture_total_size(4).unwrap(), (BigInt::from(25), BigInt::from(25)));
        assert!(conjecture_total_size(2).is_err());
        let cores = enumerate_cores_by_hook_sets(&[4, 5, 6], 1000).unwrap();
        assert_eq!(cores.len(), 9);
        assert_eq!(cores.iter().map(Partition::size).max(), Some(7));
        assert!(cores.contains(&p(&[4, 1, 1, 1])));
    }

    #[test]
    fn hook_set_cores_for_small_pairs() {
        let cores = enumerate_cores_by_hook_sets(&[2, 3], 100).unwrap();
        assert_eq!(cores, vec![Partition::empty(), p(&[1])]);
        assert_eq!(enumerate_cores_by_hook_sets(&[1, 5], 100).unwrap(), vec![Partition::empty()]);
        assert!(enumerate_cores_by_hook_sets(&[4, 6], 100).is_err());
        assert_eq!(enumerate_cores_by_hook_sets(&[5, 7], 10).unwrap_err(), Error::CapExceeded { cap: 10 });
    }
}
