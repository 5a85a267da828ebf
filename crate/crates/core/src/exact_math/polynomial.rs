use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree` is `len - 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn zero() -> Self {
        RationalPolynomial::default()
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        RationalPolynomial::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// `x - root`.
    pub fn linear_root(root: &BigRational) -> Self {
        RationalPolynomial::new(vec![-root.clone(), BigRational::one()])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        RationalPolynomial::new(self.coefficients.iter().map(|c| c * s).collect())
    }

    /// `p(a x + b)`.
    pub fn substitute_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let inner = RationalPolynomial::new(vec![b.clone(), a.clone()]);
        self.coefficients
            .iter()
            .rev()
            .fold(RationalPolynomial::zero(), |acc, c| {
                &(&acc * &inner) + &RationalPolynomial::constant(c.clone())
            })
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        let zero = BigRational::zero();
        let coefficients = (0..len)
            .map(|k| {
                self.coefficients.get(k).unwrap_or(&zero) + rhs.coefficients.get(k).unwrap_or(&zero)
            })
            .collect();
        RationalPolynomial::new(coefficients)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out =
            vec![BigRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

/// The unique polynomial of degree below `points.len()` through all points.
///
/// Built from the Lagrange basis `y_i * prod_{j != i} (x - x_j) / (x_i - x_j)`.
pub fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> Result<RationalPolynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateNode(xi.to_string()));
        }
    }
    let mut result = RationalPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RationalPolynomial::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPolynomial::linear_root(xj);
                denom *= xi - xj;
            }
        }
        result = &result + &basis.scale(&(yi / denom));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn interpolation_examples() {
        let p =
            lagrange_interpolate(&[(rat_int(0), rat_int(1)), (rat_int(1), rat_int(1))]).unwrap();
        assert_eq!(p, RationalPolynomial::constant(rat_int(1)));

        let sq = lagrange_interpolate(&[
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
            (rat_int(2), rat_int(4)),
        ])
        .unwrap();
        assert_eq!(sq, &RationalPolynomial::x() * &RationalPolynomial::x());

        let half = lagrange_interpolate(&[
            (rat_int(-1), rat(1, 2)),
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat(1, 2)),
        ])
        .unwrap();
        assert_eq!(
            half,
            RationalPolynomial::new(vec![rat_int(0), rat_int(0), rat(1, 2)])
        );
        assert_eq!(half.degree(), Some(2));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let err = lagrange_interpolate(&[(rat_int(1), rat_int(0)), (rat_int(1), rat_int(2))]);
        assert!(matches!(err, Err(Error::DuplicateNode(_))));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = RationalPolynomial::new(vec![rat_int(3), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(RationalPolynomial::new(vec![rat_int(0)]).degree(), None);
    }

    #[test]
    fn affine_substitution() {
        // p(x) = x^2 + 1, p(-x - 3) = x^2 + 6x + 10
        let p = RationalPolynomial::new(vec![rat_int(1), rat_int(0), rat_int(1)]);
        let q = p.substitute_affine(&rat_int(-1), &rat_int(-3));
        assert_eq!(
            q,
            RationalPolynomial::new(vec![rat_int(10), rat_int(6), rat_int(1)])
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn interpolant_reproduces_points(
            ys in proptest::collection::vec((-50i64..50, 1i64..9), 1..=9),
            offset in -20i64..20,
            stride in 1i64..4,
        ) {
            let points: Vec<_> = ys
                .iter()
                .enumerate()
                .map(|(i, &(p, q))| (rat_int(offset + stride * i as i64), rat(p, q)))
                .collect();
            let poly = lagrange_interpolate(&points).unwrap();
            prop_assert!(poly.degree().is_none_or(|d| d < points.len()));
            for (x, y) in &points {
                prop_assert_eq!(&poly.eval(x), y);
            }
        }
    }
}
