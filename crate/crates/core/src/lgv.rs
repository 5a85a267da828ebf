//! Lattice-path determinants and their exact evaluation.
//!
//! Three matrix families are built here: the path-count matrix of the simple
//! upper region, the weighted path-count matrix of the lower region, and the
//! same lower matrix with row factors removed, which is a polynomial matrix in
//! `m` and is evaluated at arbitrary rational `m`.

use crate::error::{Error, Result};
use crate::exact_math::{
    binom, factorial_rat, lagrange_interpolate, rat, rat_int, reciprocal_factorial,
    shifted_factorial, RationalPolynomial,
};
use crate::hexagon::{AxisIndex, PathFamilySpec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    /// Entry `(i, j)` is `f(i, j)` with 1-based indices.
    pub fn from_fn<F: FnMut(usize, usize) -> BigRational>(order: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 1..=order {
            for j in 1..=order {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { order, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        RationalMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 1-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[(i - 1) * self.order + (j - 1)]
    }

    /// Column `j` (1-based).
    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (1..=self.order).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[(i - 1) * self.order..i * self.order]
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.order {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators; the
/// integer matrix is then reduced with exact divisions by the previous pivot.
/// A zero pivot is replaced by the first row below with a nonzero entry in
/// that column, flipping the sign.
pub fn determinant(mat: &RationalMatrix) -> BigRational {
    let n = mat.order;
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| {
            let row = mat.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = BigRational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// `binom(N + m - i + 1, m + i - j)`: counts paths for the simple region.
pub fn matrix_s(n: u32, m: u32) -> RationalMatrix {
    let (n, m) = (n as i64, m as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64, j as i64);
        BigRational::from_integer(binom(n + m - i + 1, m + i - j))
    })
}

/// Weighted path-count matrix of the lower region `C(N, m, l)`.
pub fn matrix_c(n: u32, m: u32, l: AxisIndex) -> RationalMatrix {
    let (n, m, l) = (n as i64, m as i64, l.get() as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let head = factorial_rat(n + m - i) * reciprocal_factorial(m + i - j);
        if i != l {
            head * reciprocal_factorial(n + j - 2 * i + 1) * (rat_int(m) + rat(n - j + 1, 2))
        } else {
            head * reciprocal_factorial(n + j - 2 * i)
        }
    })
}

/// `matrix_c` with the factor `(N+m-i)! / ((m+i-1)! (2N-2i+1)!)` taken out of
/// row `i`; its entries are polynomials in `m`.
pub fn matrix_d(m: &BigRational, n: u32, l: AxisIndex) -> RationalMatrix {
    let (ni, l) = (n as i64, l.get() as i64);
    RationalMatrix::from_fn(n as usize, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let left = shifted_factorial(&(m + rat_int(i - j + 1)), (j - 1) as u32);
        if i != l {
            left * shifted_factorial(&rat_int(ni + j - 2 * i + 2), (ni - j) as u32)
                * (rat_int(ni + 1 - j) + m * rat_int(2))
                / rat_int(2)
        } else {
            left * shifted_factorial(&rat_int(ni + j - 2 * i + 1), (ni - j + 1) as u32)
        }
    })
}

/// `prod_{i=1}^{N} (N+m-i)! / ((m+i-1)! (2N-2i+1)!)`.
pub fn row_factor(n: u32, m: u32) -> BigRational {
    let (n, m) = (n as i64, m as i64);
    (1..=n).fold(BigRational::one(), |acc, i| {
        acc * factorial_rat(n + m - i)
            / (factorial_rat(m + i - 1) * factorial_rat(2 * n - 2 * i + 1))
    })
}

/// `prod_{i=1}^{floor(N/2)} (m+i)_{N-2i+1} (m+i+1/2)_{N-2i}`, the known
/// factor of `det matrix_d`.
pub fn d_prefactor(m: &BigRational, n: u32) -> BigRational {
    let n = n as i64;
    (1..=n / 2).fold(BigRational::one(), |acc, i| {
        acc * shifted_factorial(&(m + rat_int(i)), (n - 2 * i + 1) as u32)
            * shifted_factorial(&(m + rat_int(i) + rat(1, 2)), (n - 2 * i) as u32)
    })
}

/// `det matrix_d(m; N, l)`.
pub fn d_determinant(m: &BigRational, n: u32, l: AxisIndex) -> BigRational {
    determinant(&matrix_d(m, n, l))
}

/// Entry `(i, j)` counts weighted paths from `starts[j]` to `ends[i]`.
pub fn path_matrix(family: &PathFamilySpec) -> RationalMatrix {
    fn paths(from: (i64, i64), to: (i64, i64)) -> BigRational {
        let (h, v) = (to.0 - from.0, from.1 - to.1);
        if h < 0 || v < 0 {
            return BigRational::zero();
        }
        BigRational::from_integer(binom(h + v, h))
    }
    RationalMatrix::from_fn(family.len(), |i, j| {
        let (start, end) = (family.starts[j - 1], family.ends[i - 1]);
        if family.half_weight_final_vertical[i - 1] {
            // last step horizontal, or last step vertical at weight 1/2
            paths(start, (end.0 - 1, end.1)) + paths(start, (end.0, end.1 + 1)) * rat(1, 2)
        } else {
            paths(start, end)
        }
    })
}

/// Vanishing column combination of `matrix_d` at `m = -e - 1/2`:
///
/// `sum_{j=0}^{k} binom(k, j) col(N-2e+k+j) - c_k col(N-2e)` with
/// `c_k = (N-e-l+1/2)_k / ((-4)^k (N-e-l+1)_k)`.
///
/// Returns whether the combination is the zero vector. Admissible indices are
/// `1 <= e <= floor(N/2) - 1`, `1 <= k <= e`, `1 <= l <= floor((N+1)/2)`.
pub fn check_column_relation(n: u32, l: u32, e: u32, k: u32) -> Result<bool> {
    if n < 4 || e == 0 || e + 1 > n / 2 || k == 0 || k > e || l == 0 || l > n.div_ceil(2) {
        return Err(Error::OutOfRange(format!("column relation needs 1<=e<=N/2-1, 1<=k<=e, 1<=l<=(N+1)/2; got N={n} l={l} e={e} k={k}")));
    }
    let (ni, li, ei, ki) = (n as i64, l as i64, e as i64, k as i64);
    let mat = matrix_d(&rat(-2 * ei - 1, 2), n, AxisIndex::within(l, n)?);
    let x = ni - ei - li;
    let mut coeff =
        shifted_factorial(&rat(2 * x + 1, 2), k) / shifted_factorial(&rat_int(x + 1), k);
    coeff /= rat_int(-4).pow(k as i32);
    let base = (ni - 2 * ei) as usize;
    let mut combo: Vec<BigRational> = mat.column(base).iter().map(|v| -(v * &coeff)).collect();
    for j in 0..=ki {
        let w = BigRational::from_integer(binom(ki, j));
        for (acc, v) in combo.iter_mut().zip(mat.column(base + (ki + j) as usize)) {
            *acc += &w * v;
        }
    }
    Ok(combo.iter().all(Zero::is_zero))
}

/// The quotient `P(m; N, l) = det matrix_d / d_prefactor` as a polynomial,
/// recovered from `N` exact samples at `m = 1, 2, 3, ...`.
pub fn extract_p_polynomial(n: u32, l: AxisIndex) -> Result<RationalPolynomial> {
    let mut points = Vec::with_capacity(n as usize);
    let mut m = 1i64;
    while points.len() < n as usize {
        let x = rat_int(m);
        let pre = d_prefactor(&x, n);
        m += 1;
        if pre.is_zero() {
            continue;
        }
        let y = d_determinant(&x, n, l) / pre;
        points.push((x, y));
    }
    lagrange_interpolate(&points)
}
