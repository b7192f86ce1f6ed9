//! Per-family resistance formulas and their recursive reformulations.
//!
//! [`closed_form`] evaluates the Fibonacci/Lucas style formulas directly,
//! [`recursion_form`] assembles the same value from [`RecurrenceSpec`]
//! evaluations only. For the straight linear 3-tree no closed formula is
//! used: [`linear3tree_sequences`] computes the numerator and denominator
//! determinant sequences and checks them against the known order-5 and
//! order-14 recursions, and [`conjecture_delta_scan`] tracks the successive
//! differences `r(1, n+1) - r(1, n)` against their conjectured limit 1/14.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::rational::{int, ratio, to_scientific, Rational};
use crate::recurrence::{
    fib, fit_recurrence, ladder_h, lucas, verify_recurrence, IndexedSequence, RecurrenceSpec,
    Verdict,
};

/// Order-5 recursion of the linear 3-tree denominators (spanning-tree counts).
pub const LINEAR3TREE_DENOMINATOR_COEFFS: [i64; 5] = [5, -3, 3, -5, 1];

/// Order-14 recursion of the linear 3-tree numerators.
pub const LINEAR3TREE_NUMERATOR_COEFFS: [i64; 14] =
    [7, -7, 0, -98, 56, -56, 198, -56, 56, -98, 0, -7, 7, -1];

/// Largest `n` for which the Δ-scan computes `r(1, n)` by determinants.
pub const SCAN_DETERMINANT_LIMIT: usize = 60;

/// The ladder formula `-1 + H_{2m} / (2 H_m^2)` reproduces the resistance
/// across an end rung, `(1, 2)` or `(2m-1, 2m)`, under the usual column-wise
/// numbering; the diagonal pair `(1, 2m)` takes different values (1 and 7/5
/// at m = 2, 3 versus 3/4 and 11/15).
pub const LADDER_PAIR_NOTE: &str = "the ladder formula -1 + H_2m/(2 H_m^2) matches the end-rung pair (1,2) \
     (equivalently (2m-1,2m)); the diagonal (1,2m) differs for m >= 2, so use det/solve/reduce for it";

fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Covered {
    PathEnds,
    TreeEnds,
    LadderEndRung,
    Rim(usize),
}

fn covered_pair(spec: &FamilySpec, i: usize, j: usize) -> Result<Covered> {
    let n = spec.vertex_count();
    let (a, b) = (i.min(j), i.max(j));
    let unsupported = |hint: &str| Error::UnsupportedPair {
        family: spec.family().to_string(),
        i,
        j,
        hint: hint.to_string(),
    };
    if a == 0 || b > n {
        return Err(Error::IndexOutOfRange {
            index: if a == 0 { a } else { b },
            bound: n,
        });
    }
    match spec.family() {
        Family::Path if (a, b) == (1, n) => Ok(Covered::PathEnds),
        Family::Linear2Tree if (a, b) == (1, n) => Ok(Covered::TreeEnds),
        Family::Path | Family::Linear2Tree => Err(unsupported(
            "the formula covers only the end vertices (1, n)",
        )),
        Family::Ladder if b == a + 1 && (a == 1 || b == n) => Ok(Covered::LadderEndRung),
        Family::Ladder => Err(unsupported(LADDER_PAIR_NOTE)),
        Family::Fan | Family::Wheel if b == n && a < n => Ok(Covered::Rim(a)),
        Family::Fan | Family::Wheel => Err(unsupported("the formula covers hub pairs (i, k) only")),
        Family::Linear3Tree => Err(unsupported(
            "no closed formula; use det/solve/reduce or the sequence recursions",
        )),
    }
}

/// True when [`closed_form`] accepts the pair.
pub fn covers(spec: &FamilySpec, i: usize, j: usize) -> bool {
    covered_pair(spec, i, j).is_ok()
}

/// `2F_{n-1}^2 / (L_{n-1} L_{n-2}) + sum_{i=1}^{n-3} F_i F_{i+1} / (L_i L_{i+1})`.
pub fn linear2tree_sum_form(n: usize) -> Rational {
    let n = n as i64;
    let lead = big(fib(n - 1).pow(2) * 2) / big(lucas(n - 1) * lucas(n - 2));
    let (mut f0, mut f1) = (BigInt::one(), BigInt::one()); // F_1, F_2
    let (mut l0, mut l1) = (BigInt::one(), BigInt::from(3)); // L_1, L_2
    let mut sum = Rational::zero();
    for _ in 1..=n - 3 {
        sum += Rational::new(&f0 * &f1, &l0 * &l1);
        let f2 = &f0 + &f1;
        let l2 = &l0 + &l1;
        f0 = std::mem::replace(&mut f1, f2);
        l0 = std::mem::replace(&mut l1, l2);
    }
    lead + sum
}

/// `(n-1)/5 + 4F_{n-1} / (5L_{n-1})`.
pub fn linear2tree_compact_form(n: usize) -> Rational {
    let n = n as i64;
    ratio(n - 1, 5) + big(fib(n - 1) * 4) / big(lucas(n - 1) * 5)
}

/// Direct evaluation of the family formula for a covered pair.
pub fn closed_form(spec: &FamilySpec, i: usize, j: usize) -> Result<Rational> {
    let s = spec.size() as i64;
    Ok(match covered_pair(spec, i, j)? {
        Covered::PathEnds => int(s - 1),
        Covered::TreeEnds => linear2tree_compact_form(spec.size()),
        Covered::LadderEndRung => {
            let hm = ladder_h(s);
            int(-1) + big(ladder_h(2 * s)) / big(hm.pow(2) * 2)
        }
        Covered::Rim(i) => {
            let k = s;
            let i = i as i64;
            match spec.family() {
                Family::Fan => big(fib(2 * (k - 1 - i) + 1) * fib(2 * i - 1)) / big(fib(2 * k - 2)),
                _ => {
                    let f = fib(2 * k - 2);
                    big(f.pow(2)) / big(fib(4 * k - 4) - f * 2)
                }
            }
        }
    })
}

/// `G_n = n - 1` via `G_n = 2G_{n-1} - G_{n-2}`, `G_0 = -1`, `G_1 = 0`.
pub fn path_spec() -> RecurrenceSpec {
    RecurrenceSpec::from_ints(&[2, -1], 0, &[-1, 0]).expect("valid")
}

/// Fan denominator `D_k = F_{2k-2}`: `G_n = 3G_{n-1} - G_{n-2}` with the
/// listed values `-1, 0, 1` anchored at `k = 0`.
pub fn fan_denominator_spec() -> RecurrenceSpec {
    RecurrenceSpec::from_ints(&[3, -1], FAN_ANCHOR, &[-1, 0, 1]).expect("valid")
}

/// A commonly quoted variant of the fan numerator initial values:
/// `F_{2i-1} F_{1-2(i+1)}, F_{2i-1} F_{1-2i}, F_{2i-1} F_{1+2(2-i)}`.
/// The third value only follows `G_n = 3G_{n-1} - G_{n-2}` when `i = 2`;
/// the term the product formula gives at `k = 2` is `F_{2i-1} F_{3-2i}`.
pub fn fan_numerator_shifted_initials(i: usize) -> Result<[Rational; 3]> {
    let fibs = RecurrenceSpec::fibonacci();
    let i = i as i64;
    let lead = fibs.eval(2 * i - 1)?;
    Ok([
        &lead * fibs.eval(1 - 2 * (i + 1))?,
        &lead * fibs.eval(1 - 2 * i)?,
        &lead * fibs.eval(1 + 2 * (2 - i))?,
    ])
}

/// Fan numerator `N(i, k)` for a fixed rim vertex `i`: `G_n = 3G_{n-1} - G_{n-2}`
/// anchored at `k = 0` with `F_{2i-1} F_{-2i-1}, F_{2i-1} F_{1-2i},
/// F_{2i-1} F_{3-2i}`. The Fibonacci factors come from the Fibonacci
/// recurrence itself.
pub fn fan_numerator_spec(i: usize) -> Result<RecurrenceSpec> {
    let fibs = RecurrenceSpec::fibonacci();
    let i = i as i64;
    let lead = fibs.eval(2 * i - 1)?;
    let initial = [-2 * i - 1, 1 - 2 * i, 3 - 2 * i]
        .iter()
        .map(|&idx| Ok(&lead * fibs.eval(idx)?))
        .collect::<Result<Vec<_>>>()?;
    RecurrenceSpec::new(vec![int(3), int(-1)], FAN_ANCHOR, initial)
}

/// Wheel numerator: `G_n = 8G_{n-1} - 8G_{n-2} + G_{n-3}`, `1, 0, 1, 9` from `k = 0`.
pub fn wheel_numerator_spec() -> RecurrenceSpec {
    RecurrenceSpec::from_ints(&[8, -8, 1], WHEEL_ANCHOR, &[1, 0, 1, 9]).expect("valid")
}

/// Wheel denominator: `G_n = 10G_{n-1} - 23G_{n-2} + 10G_{n-3} - G_{n-4}`,
/// `-1, 0, 1, 15, 128` from `k = 0`.
pub fn wheel_denominator_spec() -> RecurrenceSpec {
    RecurrenceSpec::from_ints(&[10, -23, 10, -1], WHEEL_ANCHOR, &[-1, 0, 1, 15, 128])
        .expect("valid")
}

// The listed initial values are the k = 0, 1, 2, ... terms of the
// Fibonacci-product formulas; anchoring them at the smallest legal k instead
// fails validation (see tests).
const FAN_ANCHOR: i64 = 0;
const WHEEL_ANCHOR: i64 = 0;

/// Recurrences behind a family's recursive reformulation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFormulas {
    pub family: Family,
    pub recurrences: Vec<(String, RecurrenceSpec)>,
}

pub fn family_formulas(family: Family) -> FamilyFormulas {
    let named = |name: &str, spec: RecurrenceSpec| (name.to_string(), spec);
    let recurrences = match family {
        Family::Path => vec![named("n-1", path_spec())],
        Family::Linear2Tree => vec![
            named("n-1", path_spec()),
            named("fibonacci", RecurrenceSpec::fibonacci()),
            named("lucas", RecurrenceSpec::lucas()),
        ],
        Family::Ladder => vec![named("H", RecurrenceSpec::ladder_h())],
        Family::Fan => vec![named("denominator", fan_denominator_spec())],
        Family::Wheel => vec![
            named("numerator", wheel_numerator_spec()),
            named("denominator", wheel_denominator_spec()),
        ],
        Family::Linear3Tree => Vec::new(),
    };
    FamilyFormulas {
        family,
        recurrences,
    }
}

/// The same value as [`closed_form`], built only from recurrence evaluations.
pub fn recursion_form(spec: &FamilySpec, i: usize, j: usize) -> Result<Rational> {
    let s = spec.size() as i64;
    match covered_pair(spec, i, j)? {
        Covered::PathEnds => path_spec().eval(s),
        Covered::TreeEnds => {
            let linear = path_spec().eval(s)?;
            let f = RecurrenceSpec::fibonacci().eval(s - 1)?;
            let l = RecurrenceSpec::lucas().eval(s - 1)?;
            Ok(linear / int(5) + f * int(4) / (l * int(5)))
        }
        Covered::LadderEndRung => {
            let h = RecurrenceSpec::ladder_h();
            let hm = h.eval(s)?;
            Ok(int(-1) + h.eval(2 * s)? / (&hm * &hm * int(2)))
        }
        Covered::Rim(i) => match spec.family() {
            Family::Fan => Ok(fan_numerator_spec(i)?.eval(s)? / fan_denominator_spec().eval(s)?),
            _ => Ok(wheel_numerator_spec().eval(s)? / wheel_denominator_spec().eval(s)?),
        },
    }
}

fn linear3tree_nd(n: usize) -> Result<(Rational, Rational)> {
    let l = FamilySpec::new(Family::Linear3Tree, n)?
        .generate()
        .laplacian();
    let num = l.delete_rows_cols(&[1, n], &[1, n])?.det()?;
    let den = l.delete_rows_cols(&[n], &[n])?.det()?;
    Ok((num, den))
}

fn coeffs(c: &[i64]) -> Vec<Rational> {
    c.iter().map(|&v| int(v)).collect()
}

/// Determinant sequences of the straight linear 3-tree, `n = 4..=n_max`:
/// `N_n = det(L - {1, n})` and `D_n = det(L - {n})`, so `r(1, n) = N_n / D_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linear3TreeSequences {
    pub numerators: IndexedSequence,
    pub denominators: IndexedSequence,
    /// `None` when the sequence is too short to test the order-14 recursion.
    pub numerator_verdict: Option<Verdict>,
    pub denominator_verdict: Option<Verdict>,
    /// Recurrences seeded with the discovered initial window.
    pub numerator_spec: Option<RecurrenceSpec>,
    pub denominator_spec: Option<RecurrenceSpec>,
}

impl Linear3TreeSequences {
    pub fn resistance(&self, n: i64) -> Option<Rational> {
        Some(self.numerators.get(n)? / self.denominators.get(n)?)
    }
}

pub fn linear3tree_sequences(n_max: usize) -> Result<Linear3TreeSequences> {
    if n_max < 10 {
        return Err(Error::Domain(format!(
            "n_max must be at least 10, got {n_max}"
        )));
    }
    let pairs: Vec<(Rational, Rational)> = (4..=n_max)
        .into_par_iter()
        .map(linear3tree_nd)
        .collect::<Result<_>>()?;
    let (nums, dens): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let numerators = IndexedSequence::new(4, nums);
    let denominators = IndexedSequence::new(4, dens);
    let check =
        |seq: &IndexedSequence, c: &[i64]| -> Result<(Option<Verdict>, Option<RecurrenceSpec>)> {
            if seq.values.len() <= c.len() {
                return Ok((None, None));
            }
            let c = coeffs(c);
            Ok((Some(verify_recurrence(seq, &c)?), fit_recurrence(seq, &c)?))
        };
    let (numerator_verdict, numerator_spec) = check(&numerators, &LINEAR3TREE_NUMERATOR_COEFFS)?;
    let (denominator_verdict, denominator_spec) =
        check(&denominators, &LINEAR3TREE_DENOMINATOR_COEFFS)?;
    Ok(Linear3TreeSequences {
        numerators,
        denominators,
        numerator_verdict,
        denominator_verdict,
        numerator_spec,
        denominator_spec,
    })
}

/// One row of the Δ-scan: `delta = r(1, n+1) - r(1, n)` on straight linear
/// 3-trees and its exact distance to the target limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRow {
    pub n: usize,
    #[serde(with = "crate::rational::serde_fraction")]
    pub delta: Rational,
    #[serde(with = "crate::rational::serde_fraction")]
    pub abs_err: Rational,
}

impl DeltaRow {
    pub fn abs_err_decimal(&self) -> String {
        to_scientific(&self.abs_err, 6)
    }
}

pub fn one_fourteenth() -> Rational {
    ratio(1, 14)
}

/// Δ-scan for `n = 4..=n_max` against 1/14.
pub fn conjecture_delta_scan(n_max: usize) -> Result<Vec<DeltaRow>> {
    conjecture_delta_scan_with_target(n_max, &one_fourteenth())
}

/// Δ-scan against an arbitrary target. `r(1, n)` comes from determinants up
/// to [`SCAN_DETERMINANT_LIMIT`] and from the verified numerator and
/// denominator recursions beyond it.
pub fn conjecture_delta_scan_with_target(n_max: usize, target: &Rational) -> Result<Vec<DeltaRow>> {
    if n_max < 6 {
        return Err(Error::Domain(format!(
            "n_max must be at least 6, got {n_max}"
        )));
    }
    let last = n_max + 1;
    let det_top = last.clamp(10, SCAN_DETERMINANT_LIMIT);
    let seqs = linear3tree_sequences(det_top)?;
    let mut resistances: Vec<Rational> = (4..=last.min(det_top))
        .map(|n| seqs.resistance(n as i64).expect("computed"))
        .collect();
    if last > det_top {
        let (Some(num), Some(den)) = (&seqs.numerator_spec, &seqs.denominator_spec) else {
            return Err(Error::Precondition(
                "linear 3-tree recursions did not verify; cannot extend the scan".into(),
            ));
        };
        let from = det_top as i64 + 1;
        let count = last - det_top;
        let nums = num.terms(from, count)?;
        let dens = den.terms(from, count)?;
        resistances.extend(nums.into_iter().zip(dens).map(|(a, b)| a / b));
    }
    Ok(resistances
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let delta = &w[1] - &w[0];
            let abs_err = (&delta - target).abs();
            DeltaRow {
                n: k + 4,
                delta,
                abs_err,
            }
        })
        .collect())
}

/// Smallest `n0` such that the error is non-increasing over every reported
/// row from `n0` on.
pub fn monotone_from(rows: &[DeltaRow]) -> Option<usize> {
    decreasing_with_lag(rows, 1)
}

/// Smallest `n0` such that `abs_err(n + lag) <= abs_err(n)` for every
/// reported `n >= n0`. With an oscillating error a lag longer than the
/// oscillation period shows the underlying decay.
pub fn decreasing_with_lag(rows: &[DeltaRow], lag: usize) -> Option<usize> {
    let first = rows.first()?.n;
    if lag == 0 {
        return Some(first);
    }
    let last_break = (0..rows.len().saturating_sub(lag))
        .rev()
        .find(|&p| rows[p + lag].abs_err > rows[p].abs_err);
    Some(match last_break {
        None => first,
        Some(p) => rows[p + 1].n,
    })
}

/// CSV with header `n,delta_num,delta_den,abs_err_decimal`.
pub fn scan_to_csv(rows: &[DeltaRow]) -> String {
    let mut out = String::from("n,delta_num,delta_den,abs_err_decimal\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.n,
            row.delta.numer(),
            row.delta.denom(),
            row.abs_err_decimal()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resistance::resistance_det;

    fn spec(family: Family, size: usize) -> FamilySpec {
        FamilySpec::new(family, size).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form(&spec(Family::Linear2Tree, 5), 1, 5).unwrap(),
            ratio(8, 7)
        );
        assert_eq!(
            closed_form(&spec(Family::Linear2Tree, 6), 6, 1).unwrap(),
            ratio(15, 11)
        );
        assert_eq!(
            closed_form(&spec(Family::Fan, 3), 1, 3).unwrap(),
            ratio(2, 3)
        );
        for i in 1..5 {
            assert_eq!(
                closed_form(&spec(Family::Wheel, 5), i, 5).unwrap(),
                ratio(7, 15)
            );
        }
        assert_eq!(closed_form(&spec(Family::Ladder, 1), 1, 2).unwrap(), int(1));
        assert_eq!(
            closed_form(&spec(Family::Ladder, 2), 1, 2).unwrap(),
            ratio(3, 4)
        );
        assert_eq!(
            closed_form(&spec(Family::Ladder, 3), 1, 2).unwrap(),
            ratio(11, 15)
        );
        assert_eq!(
            closed_form(&spec(Family::Ladder, 3), 5, 6).unwrap(),
            ratio(11, 15)
        );
        assert_eq!(closed_form(&spec(Family::Path, 9), 1, 9).unwrap(), int(8));
    }

    #[test]
    fn unsupported_pairs() {
        assert!(matches!(
            closed_form(&spec(Family::Ladder, 3), 1, 6),
            Err(Error::UnsupportedPair { .. })
        ));
        assert!(matches!(
            closed_form(&spec(Family::Path, 5), 2, 5),
            Err(Error::UnsupportedPair { .. })
        ));
        assert!(matches!(
            closed_form(&spec(Family::Fan, 5), 1, 2),
            Err(Error::UnsupportedPair { .. })
        ));
        assert!(matches!(
            recursion_form(&spec(Family::Linear3Tree, 6), 1, 6),
            Err(Error::UnsupportedPair { .. })
        ));
        assert!(matches!(
            closed_form(&spec(Family::Fan, 5), 1, 6),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn recursion_form_examples() {
        assert_eq!(
            recursion_form(&spec(Family::Path, 7), 1, 7).unwrap(),
            int(6)
        );
        assert_eq!(
            recursion_form(&spec(Family::Fan, 5), 2, 5).unwrap(),
            ratio(10, 21)
        );
        assert_eq!(
            recursion_form(&spec(Family::Wheel, 4), 1, 4).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(
            recursion_form(&spec(Family::Linear2Tree, 6), 1, 6).unwrap(),
            ratio(15, 11)
        );
        assert_eq!(
            recursion_form(&spec(Family::Ladder, 3), 1, 2).unwrap(),
            ratio(11, 15)
        );
    }

    #[test]
    fn two_tree_forms_agree() {
        for n in 2..=200 {
            assert_eq!(
                linear2tree_sum_form(n),
                linear2tree_compact_form(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn recurrence_terms_match_fibonacci_products() {
        let d = fan_denominator_spec();
        let wn = wheel_numerator_spec();
        let wd = wheel_denominator_spec();
        for k in 0..40i64 {
            assert_eq!(d.eval(k).unwrap(), big(fib(2 * k - 2)));
            assert_eq!(wn.eval(k).unwrap(), big(fib(2 * k - 2).pow(2)));
            assert_eq!(
                wd.eval(k).unwrap(),
                big(fib(4 * k - 4) - fib(2 * k - 2) * 2)
            );
        }
        for i in 1..20i64 {
            let n = fan_numerator_spec(i as usize).unwrap();
            for k in 0..40i64 {
                assert_eq!(
                    n.eval(k).unwrap(),
                    big(fib(2 * i - 1) * fib(2 * (k - 1 - i) + 1))
                );
            }
        }
    }

    #[test]
    fn shifted_fan_initials_are_consistent_only_for_i_2() {
        for i in 1..12 {
            let shifted = fan_numerator_shifted_initials(i).unwrap();
            let ok = RecurrenceSpec::new(vec![int(3), int(-1)], 0, shifted.to_vec()).is_ok();
            assert_eq!(ok, i == 2, "i = {i}");
            let spec = fan_numerator_spec(i).unwrap();
            assert_eq!(&spec.initial()[..2], &shifted[..2]);
        }
    }

    #[test]
    fn anchoring_at_zero_is_the_only_valid_choice() {
        // shift every spec to each candidate anchor and keep those whose
        // values reproduce the direct formula over k in [min, 30]
        let valid = |coefficients: &[i64],
                     initial: &[i64],
                     min_k: i64,
                     direct: &dyn Fn(i64) -> Rational| {
            [0, min_k]
                .into_iter()
                .filter(|&anchor| {
                    let s = RecurrenceSpec::from_ints(coefficients, anchor, initial).unwrap();
                    (min_k..=30).all(|k| s.eval(k).unwrap() == direct(k))
                })
                .collect::<Vec<_>>()
        };
        let fan_d = |k: i64| big(fib(2 * k - 2));
        assert_eq!(valid(&[3, -1], &[-1, 0, 1], 2, &fan_d), vec![0]);
        let wheel_n = |k: i64| big(fib(2 * k - 2).pow(2));
        assert_eq!(valid(&[8, -8, 1], &[1, 0, 1, 9], 4, &wheel_n), vec![0]);
        let wheel_d = |k: i64| big(fib(4 * k - 4) - fib(2 * k - 2) * 2);
        assert_eq!(
            valid(&[10, -23, 10, -1], &[-1, 0, 1, 15, 128], 4, &wheel_d),
            vec![0]
        );
    }

    #[test]
    fn linear3tree_small_values() {
        let seqs = linear3tree_sequences(20).unwrap();
        assert_eq!(seqs.resistance(4).unwrap(), ratio(1, 2));
        let d = &seqs.denominators.values;
        assert!(d.windows(2).all(|w| w[0].is_positive() && w[1] > w[0]));
        assert_eq!(seqs.denominator_verdict, Some(Verdict::HoldsFrom(4)));
        assert!(linear3tree_sequences(9).is_err());
        // too short for the order-14 check
        assert_eq!(linear3tree_sequences(12).unwrap().numerator_verdict, None);
    }

    #[test]
    fn scan_bookkeeping() {
        let rows = conjecture_delta_scan(6).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].n, 4);
        assert_eq!(rows[0].delta, ratio(2, 3) - ratio(1, 2));
        assert!(conjecture_delta_scan(5).is_err());
        let csv = scan_to_csv(&rows);
        assert!(csv.starts_with("n,delta_num,delta_den,abs_err_decimal\n4,1,6,"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn scan_extension_matches_determinants() {
        // rows past the determinant limit come from the recursions
        let rows = conjecture_delta_scan(SCAN_DETERMINANT_LIMIT + 3).unwrap();
        for row in rows.iter().filter(|r| r.n >= SCAN_DETERMINANT_LIMIT - 1) {
            let g1 = FamilySpec::new(Family::Linear3Tree, row.n + 1)
                .unwrap()
                .generate();
            let g0 = FamilySpec::new(Family::Linear3Tree, row.n)
                .unwrap()
                .generate();
            let expect =
                resistance_det(&g1, 1, row.n + 1).unwrap() - resistance_det(&g0, 1, row.n).unwrap();
            assert_eq!(row.delta, expect, "n = {}", row.n);
        }
    }

    #[test]
    fn scan_error_oscillates_but_decays_at_lag_four() {
        let rows = conjecture_delta_scan(200).unwrap();
        assert_eq!(monotone_from(&rows), Some(195));
        assert_eq!(decreasing_with_lag(&rows, 3), Some(195));
        assert_eq!(decreasing_with_lag(&rows, 4), Some(4));
        let signs: String = rows[..12]
            .iter()
            .map(|r| if r.delta > one_fourteenth() { '+' } else { '-' })
            .collect();
        assert_eq!(signs, "+--+--+-++-+");
    }

    #[test]
    fn family_formula_lists() {
        assert_eq!(family_formulas(Family::Wheel).recurrences.len(), 2);
        assert!(family_formulas(Family::Linear3Tree).recurrences.is_empty());
    }
}
