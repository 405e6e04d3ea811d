//! Smith normal form over the integers.
//!
//! Pivot choice is fixed: the entry of smallest nonzero absolute value in the
//! active submatrix, ties broken by lowest row and then lowest column. With
//! that rule the whole decomposition is a deterministic function of the input.
//!
//! Reduction first runs on `i64` with checked arithmetic and restarts on
//! `BigInt` as soon as any entry (of the matrix or the transforms) would
//! overflow. Both runs perform the same operation sequence, so the result
//! does not depend on which one finished.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntegerMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, its diagonal a
/// non-negative divisibility chain (zeros last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `d`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal_entries()
            .into_iter()
            .filter(|x| !Zero::is_zero(x))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.d
            .diagonal_entries()
            .iter()
            .filter(|x| !Zero::is_zero(*x))
            .count()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let r = reduce(m, true);
    SmithDecomposition {
        u: r.u.expect("tracked"),
        d: r.d,
        v: r.v.expect("tracked"),
    }
}

/// Diagonal of the normal form only; skips all transform bookkeeping.
pub(crate) fn smith_diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    reduce(m, false).d.diagonal_entries()
}

struct Reduced {
    d: IntegerMatrix,
    u: Option<IntegerMatrix>,
    v: Option<IntegerMatrix>,
}

fn reduce(m: &IntegerMatrix, track: bool) -> Reduced {
    let small: Option<Vec<i64>> = m.entries().iter().map(ToPrimitive::to_i64).collect();
    if let Some(entries) = small {
        if let Some(r) = Reducer::run(Dense::new(m.rows(), m.cols(), entries), track) {
            return r.finish();
        }
    }
    let big = Dense::new(m.rows(), m.cols(), m.entries().to_vec());
    Reducer::run(big, track)
        .expect("BigInt reduction cannot overflow")
        .finish()
}

/// Integer type the reducer can run on. Arithmetic returns `None` on
/// overflow.
trait Scalar: Clone + PartialEq + Into<BigInt> {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// `|self| < |other|`
    fn smaller(&self, other: &Self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// `self + a * c`
    fn mul_add(&self, a: &Self, c: &Self) -> Option<Self>;
    /// Truncating quotient.
    fn quot(&self, d: &Self) -> Option<Self>;
    fn divides(&self, x: &Self) -> bool;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn smaller(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul_add(&self, a: &Self, c: &Self) -> Option<Self> {
        a.checked_mul(*c)?.checked_add(*self)
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn divides(&self, x: &Self) -> bool {
        match x.checked_rem(*self) {
            Some(r) => r == 0,
            None => true, // i64::MIN % -1
        }
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn smaller(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul_add(&self, a: &Self, c: &Self) -> Option<Self> {
        Some(self + a * c)
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn divides(&self, x: &Self) -> bool {
        x.is_multiple_of(self)
    }
}

#[derive(Clone)]
struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Dense<T> {
    fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        Self { rows, cols, data }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Self::new(n, n, data)
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x = x.neg()?;
        }
        Some(())
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, src: usize, dst: usize, c: &T) -> Option<()> {
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if !s.is_zero() {
                let v = self.data[dst * self.cols + j].mul_add(s, c)?;
                self.data[dst * self.cols + j] = v;
            }
        }
        Some(())
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, src: usize, dst: usize, c: &T) -> Option<()> {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if !s.is_zero() {
                let v = self.data[i * self.cols + dst].mul_add(s, c)?;
                self.data[i * self.cols + dst] = v;
            }
        }
        Some(())
    }

    fn into_matrix(self) -> IntegerMatrix {
        IntegerMatrix::new(
            self.rows,
            self.cols,
            self.data.into_iter().map(Into::into).collect(),
        )
        .expect("dimensions preserved")
    }
}

struct Transforms<T> {
    u: Dense<T>,
    v: Dense<T>,
}

struct Reducer<T> {
    a: Dense<T>,
    t: Option<Transforms<T>>,
}

impl<T: Scalar> Reducer<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.t {
            t.u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.t {
            t.v.swap_cols(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        self.a.negate_row(i)?;
        if let Some(t) = &mut self.t {
            t.u.negate_row(i)?;
        }
        Some(())
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, src: usize, dst: usize, c: &T) -> Option<()> {
        self.a.add_row(src, dst, c)?;
        if let Some(t) = &mut self.t {
            t.u.add_row(src, dst, c)?;
        }
        Some(())
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, src: usize, dst: usize, c: &T) -> Option<()> {
        self.a.add_col(src, dst, c)?;
        if let Some(t) = &mut self.t {
            t.v.add_col(src, dst, c)?;
        }
        Some(())
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = self.a.at(i, j);
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if !x.smaller(self.a.at(bi, bj)) => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Divides out row `t` and column `t` against the pivot. `Some(true)`
    /// when both are fully cleared.
    fn eliminate(&mut self, t: usize) -> Option<bool> {
        let p = self.a.at(t, t).clone();
        let mut clean = true;
        for i in t + 1..self.a.rows {
            if self.a.at(i, t).is_zero() {
                continue;
            }
            let q = self.a.at(i, t).quot(&p)?;
            if !q.is_zero() {
                self.add_row(t, i, &q.neg()?)?;
            }
            clean &= self.a.at(i, t).is_zero();
        }
        for j in t + 1..self.a.cols {
            if self.a.at(t, j).is_zero() {
                continue;
            }
            let q = self.a.at(t, j).quot(&p)?;
            if !q.is_zero() {
                self.add_col(t, j, &q.neg()?)?;
            }
            clean &= self.a.at(t, j).is_zero();
        }
        Some(clean)
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.a.at(t, t);
        (t + 1..self.a.rows).find(|&i| (t + 1..self.a.cols).any(|j| !p.divides(self.a.at(i, j))))
    }

    /// `None` on overflow.
    fn run(a: Dense<T>, track: bool) -> Option<Self> {
        let (rows, cols) = (a.rows, a.cols);
        let mut r = Reducer {
            a,
            t: track.then(|| Transforms {
                u: Dense::identity(rows),
                v: Dense::identity(cols),
            }),
        };
        for t in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = r.pivot(t) else {
                    return Some(r);
                };
                r.swap_rows(t, pi);
                r.swap_cols(t, pj);
                if !r.eliminate(t)? {
                    continue;
                }
                match r.non_divisible_row(t) {
                    Some(i) => r.add_row(i, t, &T::one())?,
                    None => break,
                }
            }
            if r.a.at(t, t).is_negative() {
                r.negate_row(t)?;
            }
        }
        Some(r)
    }

    fn finish(self) -> Reduced {
        let (u, v) = match self.t {
            Some(t) => (Some(t.u.into_matrix()), Some(t.v.into_matrix())),
            None => (None, None),
        };
        Reduced {
            d: self.a.into_matrix(),
            u,
            v,
        }
    }
}
