//! Dense matrices over [`Rational`] with exact determinant and solve.
//!
//! Entry accessors are 0-based like any Rust container; operations that
//! select rows or columns by label ([`RatMatrix::delete_rows_cols`]) take
//! 1-based indices so they line up with vertex labels.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer matrices.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.as_ref()
                        .iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Removes the listed rows and columns (1-based), preserving order.
    pub fn delete_rows_cols(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let keep = |drop: &[usize], bound: usize| -> Result<Vec<usize>> {
            for &i in drop {
                if i == 0 || i > bound {
                    return Err(Error::IndexOutOfRange { index: i, bound });
                }
            }
            Ok((0..bound).filter(|i| !drop.contains(&(i + 1))).collect())
        };
        let keep_rows = keep(rows, self.rows)?;
        let keep_cols = keep(cols, self.cols)?;
        let mut entries = Vec::with_capacity(keep_rows.len() * keep_cols.len());
        for &r in &keep_rows {
            for &c in &keep_cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Self::new(keep_rows.len(), keep_cols.len(), entries)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    ///
    /// Each row is first scaled to integers by the lcm of its denominators,
    /// so every rational matrix goes through the integer path; the scale
    /// factors are divided back out at the end.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut scale = BigInt::one();
        let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let row = self.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            work.push(row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect());
            scale *= lcm;
        }
        Ok(Rational::new(bareiss_det(work), scale))
    }

    pub fn lu(&self) -> Result<LuFactors> {
        LuFactors::new(self)
    }

    /// Solves `self · x = b` exactly.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.lu()?.solve(b)
    }

    pub fn inverse(&self) -> Result<Self> {
        let lu = self.lu()?;
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for c in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[c] = Rational::one();
            for (r, v) in lu.solve(&e)?.into_iter().enumerate() {
                inv.set(r, c, v);
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let above = &pivot_row[j];
                if factor.is_zero() || above.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    row[j] = &row[j] * pivot;
                } else {
                    row[j] = &row[j] * pivot - &factor * above;
                }
                if !prev.is_one() {
                    row[j] /= &prev;
                }
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact rational LU factorization with row pivoting, `P·A = L·U`.
///
/// Pivots are the first nonzero entry at or below the diagonal; a column
/// without one means the matrix is singular. Zero entries are skipped
/// during elimination, so banded inputs stay cheap.
#[derive(Clone, Debug)]
pub struct LuFactors {
    n: usize,
    // row-major; strictly lower part holds L multipliers, the rest is U
    lu: Vec<Vec<Rational>>,
    perm: Vec<usize>,
    swaps: usize,
}

impl LuFactors {
    fn new(m: &RatMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!(
                "cannot factor a non-square {}x{} matrix",
                m.rows, m.cols
            )));
        }
        let n = m.rows;
        let mut lu = m.to_rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !lu[i][k].is_zero())
                .ok_or(Error::Singular)?;
            if p != k {
                lu.swap(p, k);
                perm.swap(p, k);
                swaps += 1;
            }
            let support: Vec<usize> = (k + 1..n).filter(|&j| !lu[k][j].is_zero()).collect();
            let (head, tail) = lu.split_at_mut(k + 1);
            let pivot_row = &head[k];
            for row in tail.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let factor = &row[k] / &pivot_row[k];
                for &j in &support {
                    let delta = &factor * &pivot_row[j];
                    row[j] -= delta;
                }
                row[k] = factor;
            }
        }
        Ok(Self { n, lu, perm, swaps })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Product of the U diagonal with the permutation sign.
    pub fn det(&self) -> Rational {
        let d = (0..self.n).fold(Rational::one(), |acc, i| acc * &self.lu[i][i]);
        if self.swaps % 2 == 1 {
            -d
        } else {
            d
        }
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if b.len() != self.n {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for a {}x{} system",
                b.len(),
                self.n,
                self.n
            )));
        }
        let mut y: Vec<Rational> = self.perm.iter().map(|&p| b[p].clone()).collect();
        for i in 0..self.n {
            for k in 0..i {
                let l = &self.lu[i][k];
                if !l.is_zero() && !y[k].is_zero() {
                    let delta = l * &y[k];
                    y[i] -= delta;
                }
            }
        }
        for i in (0..self.n).rev() {
            for k in i + 1..self.n {
                let u = &self.lu[i][k];
                if !u.is_zero() && !y[k].is_zero() {
                    let delta = u * &y[k];
                    y[i] -= delta;
                }
            }
            y[i] = &y[i] / &self.lu[i][i];
        }
        Ok(y)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
