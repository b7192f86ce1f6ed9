//! Linear homogeneous recurrences with constant rational coefficients.
//!
//! A [`RecurrenceSpec`] describes `G_t = c_1 G_{t-1} + ... + c_d G_{t-d}`
//! together with a run of consecutive known terms starting at an arbitrary
//! integer index. Terms can be evaluated at any integer index, forward or
//! backward; long jumps use companion-matrix powering.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// Step counts above this use matrix powering instead of iteration.
pub const POWERING_THRESHOLD: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceSpec {
    #[serde(with = "crate::rational::serde_fraction_vec")]
    coefficients: Vec<Rational>,
    base_index: i64,
    #[serde(with = "crate::rational::serde_fraction_vec")]
    initial: Vec<Rational>,
}

impl RecurrenceSpec {
    /// `initial` holds terms `base_index, base_index + 1, ...`. Terms beyond
    /// the first `d` must already satisfy the recursion.
    pub fn new(
        coefficients: Vec<Rational>,
        base_index: i64,
        initial: Vec<Rational>,
    ) -> Result<Self> {
        let d = coefficients.len();
        if d == 0 {
            return Err(Error::Domain("recurrence order must be at least 1".into()));
        }
        if initial.len() < d {
            return Err(Error::Domain(format!(
                "order {d} recurrence needs {d} initial values, got {}",
                initial.len()
            )));
        }
        let spec = Self {
            coefficients,
            base_index,
            initial,
        };
        for t in d..spec.initial.len() {
            if spec.initial[t] != spec.apply(&spec.initial[t - d..t]) {
                return Err(Error::InconsistentInitials {
                    index: base_index + t as i64,
                });
            }
        }
        Ok(spec)
    }

    pub fn from_ints(coefficients: &[i64], base_index: i64, initial: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| {
            v.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        };
        Self::new(conv(coefficients), base_index, conv(initial))
    }

    /// `F_0 = 0, F_1 = 1`.
    pub fn fibonacci() -> Self {
        Self::from_ints(&[1, 1], 0, &[0, 1]).expect("valid")
    }

    /// `L_0 = 2, L_1 = 1`.
    pub fn lucas() -> Self {
        Self::from_ints(&[1, 1], 0, &[2, 1]).expect("valid")
    }

    /// `H_0 = 0, H_1 = 1, H_n = 4 H_{n-1} - H_{n-2}`.
    pub fn ladder_h() -> Self {
        Self::from_ints(&[4, -1], 0, &[0, 1]).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn base_index(&self) -> i64 {
        self.base_index
    }

    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    // next term from a window of the previous d terms, oldest first
    fn apply(&self, window: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(window.iter().rev())
            .filter(|(c, _)| !c.is_zero())
            .fold(Rational::zero(), |acc, (c, g)| acc + c * g)
    }

    // term preceding a window, oldest first
    fn apply_backward(&self, window: &[Rational]) -> Result<Rational> {
        let d = self.order();
        let last = &self.coefficients[d - 1];
        if last.is_zero() {
            return Err(Error::Domain(
                "backward extension needs a nonzero trailing coefficient".into(),
            ));
        }
        // G_{t} = c_1 G_{t-1} + ... + c_d G_{t-d}, solved for G_{t-d}
        let newest = &window[d - 1];
        let rest = self.coefficients[..d - 1]
            .iter()
            .zip(window[..d - 1].iter().rev())
            .fold(Rational::zero(), |acc, (c, g)| acc + c * g);
        Ok((newest - rest) / last)
    }

    fn last_index(&self) -> i64 {
        self.base_index + self.initial.len() as i64 - 1
    }

    fn lookup(&self, n: i64) -> Option<&Rational> {
        if n < self.base_index {
            return None;
        }
        self.initial.get((n - self.base_index) as usize)
    }

    /// Exact term `G_n`, iterating for short distances and powering the
    /// companion matrix beyond [`POWERING_THRESHOLD`] steps.
    pub fn eval(&self, n: i64) -> Result<Rational> {
        if let Some(v) = self.lookup(n) {
            return Ok(v.clone());
        }
        let steps = if n > self.last_index() {
            n - self.last_index()
        } else {
            self.base_index - n
        };
        if steps as u64 > POWERING_THRESHOLD {
            self.eval_powering(n)
        } else {
            self.eval_iterative(n)
        }
    }

    pub fn eval_iterative(&self, n: i64) -> Result<Rational> {
        if let Some(v) = self.lookup(n) {
            return Ok(v.clone());
        }
        let d = self.order();
        if n > self.last_index() {
            let mut window: VecDeque<Rational> = self.initial[self.initial.len() - d..]
                .iter()
                .cloned()
                .collect();
            for _ in 0..n - self.last_index() {
                let next = self.apply(window.make_contiguous());
                window.pop_front();
                window.push_back(next);
            }
            Ok(window.pop_back().expect("order >= 1"))
        } else {
            let mut window: VecDeque<Rational> = self.initial[..d].iter().cloned().collect();
            for _ in 0..self.base_index - n {
                let prev = self.apply_backward(window.make_contiguous())?;
                window.pop_back();
                window.push_front(prev);
            }
            Ok(window.pop_front().expect("order >= 1"))
        }
    }

    pub fn eval_powering(&self, n: i64) -> Result<Rational> {
        if let Some(v) = self.lookup(n) {
            return Ok(v.clone());
        }
        let d = self.order();
        if n > self.last_index() {
            // state (G_t, G_{t-1}, ..., G_{t-d+1}) at t = last known index
            let state: Vec<Rational> = self.initial[self.initial.len() - d..]
                .iter()
                .rev()
                .cloned()
                .collect();
            let power = self.companion().pow((n - self.last_index()) as u64)?;
            Ok(dot(power.row(0), &state))
        } else {
            if self.coefficients[d - 1].is_zero() {
                return Err(Error::Domain(
                    "backward extension needs a nonzero trailing coefficient".into(),
                ));
            }
            let state: Vec<Rational> = self.initial[..d].iter().rev().cloned().collect();
            let power = self.inverse_companion().pow((self.base_index - n) as u64)?;
            Ok(dot(power.row(d - 1), &state))
        }
    }

    /// Consecutive terms `G_from, ..., G_{from+count-1}`.
    pub fn terms(&self, from: i64, count: usize) -> Result<Vec<Rational>> {
        let d = self.order();
        let mut out = Vec::with_capacity(count);
        let mut window: VecDeque<Rational> = (0..d as i64)
            .map(|k| self.eval(from + k))
            .collect::<Result<_>>()?;
        for _ in 0..count {
            let next = self.apply(window.make_contiguous());
            out.push(window.pop_front().expect("order >= 1"));
            window.push_back(next);
        }
        Ok(out)
    }

    /// Maps `(G_t, ..., G_{t-d+1})` to `(G_{t+1}, ..., G_{t-d+2})`.
    pub fn companion(&self) -> RatMatrix {
        let d = self.order();
        let mut m = RatMatrix::zeros(d, d);
        for (k, c) in self.coefficients.iter().enumerate() {
            m.set(0, k, c.clone());
        }
        for r in 1..d {
            m.set(r, r - 1, Rational::one());
        }
        m
    }

    fn inverse_companion(&self) -> RatMatrix {
        let d = self.order();
        let last = &self.coefficients[d - 1];
        let mut m = RatMatrix::zeros(d, d);
        for r in 0..d - 1 {
            m.set(r, r + 1, Rational::one());
        }
        m.set(d - 1, 0, last.recip());
        for k in 1..d {
            m.set(d - 1, k, -(&self.coefficients[k - 1] / last));
        }
        m
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Fibonacci number by fast doubling; `F_{-n} = (-1)^{n+1} F_n`.
pub fn fib(n: i64) -> BigInt {
    fn pair(n: u64) -> (BigInt, BigInt) {
        if n == 0 {
            return (BigInt::zero(), BigInt::one());
        }
        let (a, b) = pair(n / 2);
        let c = &a * (&b * 2 - &a);
        let d = &a * &a + &b * &b;
        if n.is_multiple_of(2) {
            (c, d)
        } else {
            let e = &c + &d;
            (d, e)
        }
    }
    let f = pair(n.unsigned_abs()).0;
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

pub fn lucas(n: i64) -> BigInt {
    fib(n - 1) + fib(n + 1)
}

/// `H_0 = 0, H_1 = 1, H_n = 4 H_{n-1} - H_{n-2}`, extended by `H_{-n} = -H_n`.
pub fn ladder_h(n: i64) -> BigInt {
    // [[4, -1], [1, 0]]^k applied to (H_1, H_0)
    fn mul(a: &[BigInt; 4], b: &[BigInt; 4]) -> [BigInt; 4] {
        [
            &a[0] * &b[0] + &a[1] * &b[2],
            &a[0] * &b[1] + &a[1] * &b[3],
            &a[2] * &b[0] + &a[3] * &b[2],
            &a[2] * &b[1] + &a[3] * &b[3],
        ]
    }
    let k = n.unsigned_abs();
    let mut acc = [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
    let mut base = [
        BigInt::from(4),
        BigInt::from(-1),
        BigInt::one(),
        BigInt::zero(),
    ];
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    // acc = M^k; (H_{k+1}, H_k) = M^k (H_1, H_0), so H_k = acc[2]
    let h = acc[2].clone();
    if n < 0 {
        -h
    } else {
        h
    }
}

/// Consecutive sequence terms starting at an integer index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedSequence {
    pub start: i64,
    #[serde(with = "crate::rational::serde_fraction_vec")]
    pub values: Vec<Rational>,
}

impl IndexedSequence {
    pub fn new(start: i64, values: Vec<Rational>) -> Self {
        Self { start, values }
    }

    pub fn get(&self, n: i64) -> Option<&Rational> {
        if n < self.start {
            return None;
        }
        self.values.get((n - self.start) as usize)
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "index")]
pub enum Verdict {
    /// Every term from this index on, together with the `d` terms that
    /// start there as initial values, follows the recursion.
    HoldsFrom(i64),
    /// The final window violates the recursion; this is the first index
    /// whose term disagrees with the recursion applied to its predecessors.
    FailsAt(i64),
}

/// Finds where `values` starts satisfying the recursion with the given
/// coefficients.
pub fn verify_recurrence(values: &IndexedSequence, coefficients: &[Rational]) -> Result<Verdict> {
    let d = coefficients.len();
    if d == 0 || values.values.len() < d + 1 {
        return Err(Error::Domain(format!(
            "need more than {d} terms to test an order-{d} recursion, got {}",
            values.values.len()
        )));
    }
    let v = &values.values;
    let holds = |t: usize| {
        let predicted = coefficients
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, c)| acc + c * &v[t - 1 - k]);
        predicted == v[t]
    };
    let failures: Vec<usize> = (d..v.len()).filter(|&t| !holds(t)).collect();
    Ok(match failures.last() {
        None => Verdict::HoldsFrom(values.start),
        Some(&t) if t == v.len() - 1 => Verdict::FailsAt(values.start + failures[0] as i64),
        Some(&t) => Verdict::HoldsFrom(values.start + (t + 1 - d) as i64),
    })
}

/// Builds the spec whose initial values are the window where `values`
/// begins satisfying the recursion, or `None` when it never settles.
pub fn fit_recurrence(
    values: &IndexedSequence,
    coefficients: &[Rational],
) -> Result<Option<RecurrenceSpec>> {
    match verify_recurrence(values, coefficients)? {
        Verdict::HoldsFrom(index) => {
            let offset = (index - values.start) as usize;
            let initial = values.values[offset..offset + coefficients.len()].to_vec();
            RecurrenceSpec::new(coefficients.to_vec(), index, initial).map(Some)
        }
        Verdict::FailsAt(_) => Ok(None),
    }
}
