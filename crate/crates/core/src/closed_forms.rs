//! Closed-form counts, proportions and the identities around them.
//!
//! Everything here is exact except [`arcsine_limit`].

use crate::error::{Error, Result};
use crate::exact_math::{
    binom, double_factorial, factorial, factorial_rat, pow2, rat, rat_int, shifted_factorial,
    sign_power, terminating_hypergeometric, to_integer, to_rational,
};
use crate::hexagon::{AxisIndex, HexagonSpec, Parity, TheoremParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Box `a x b x c`; its plane partitions are the tilings of the hexagon
/// with sides `a, b, c, a, b, c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoxDims {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl BoxDims {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        BoxDims { a, b, c }
    }
}

impl From<HexagonSpec> for BoxDims {
    fn from(spec: HexagonSpec) -> Self {
        let (a, b, c) = spec.box_dims();
        BoxDims { a, b, c }
    }
}

/// Number of plane partitions in an `a x b x c` box.
///
/// The product over `k` telescopes, leaving
/// `prod_{i<=a} prod_{j<=b} (i+j+c-1)/(i+j-1)`.
pub fn macmahon_count(dims: BoxDims) -> BigInt {
    let c = dims.c as i64;
    let mut value = BigRational::one();
    for i in 1..=dims.a as i64 {
        for j in 1..=dims.b as i64 {
            value *= rat(i + j + c - 1, i + j - 1);
        }
    }
    to_integer(&value).expect("plane partition count is an integer")
}

/// Total number of tilings of the hexagon.
pub fn total_count(spec: HexagonSpec) -> BigInt {
    macmahon_count(spec.into())
}

fn check_axis(n: u32, l: AxisIndex) -> Result<()> {
    if l.get() > n {
        return Err(Error::AxisOutOfRange { l: l.get(), max: n });
    }
    Ok(())
}

/// `sum_{e=0}^{l-1} (-1)^e binom(N, e) (N-2e) (1/2)_e / ((m+e)(m+N-e)(1/2-N)_e)`.
pub fn axis_sum(n: u32, m: u32, l: AxisIndex) -> Result<BigRational> {
    check_axis(n, l)?;
    if m == 0 {
        return Err(Error::PoleAtZeroM);
    }
    let (ni, mi) = (n as i64, m as i64);
    let half = rat(1, 2);
    let low = rat(1 - 2 * ni, 2);
    let mut sum = BigRational::zero();
    for e in 0..l.get() as i64 {
        let num = sign_power(e)
            * BigRational::from_integer(binom(ni, e) * (ni - 2 * e))
            * shifted_factorial(&half, e as u32);
        let den = rat_int((mi + e) * (mi + ni - e)) * shifted_factorial(&low, e as u32);
        sum += num / den;
    }
    Ok(sum)
}

/// `m binom(m+N, m) binom(m+N-1, m) / binom(2m+2N-1, 2m)`.
fn proportion_prefactor(n: u32, m: u32) -> BigRational {
    let (n, m) = (n as i64, m as i64);
    BigRational::new(
        binom(m + n, m) * binom(m + n - 1, m) * m,
        binom(2 * m + 2 * n - 1, 2 * m),
    )
}

/// Share of tilings containing the `l`-th axis rhombus, as a function of the
/// formula parameters `(N, m)` alone.
pub fn proportion_nm(n: u32, m: u32, l: AxisIndex) -> Result<BigRational> {
    Ok(proportion_prefactor(n, m) * axis_sum(n, m, l)?)
}

/// Share of tilings containing the `l`-th axis rhombus. Both parities give
/// the same value for the same `(N, m)`.
pub fn proportion(params: &TheoremParams, l: AxisIndex) -> Result<BigRational> {
    proportion_nm(params.n(), params.m(), l)
}

/// Tilings of the hexagon `(N, 2m)` containing the `l`-th axis rhombus.
pub fn fixed_count_even(n: u32, m: u32, l: AxisIndex) -> Result<BigInt> {
    let total = macmahon_count(BoxDims::new(n, n, 2 * m));
    to_integer(&(proportion_nm(n, m, l)? * to_rational(&total)))
}

/// Tilings of the hexagon `(N+1, 2m-1)` containing the `l`-th axis rhombus.
pub fn fixed_count_odd(n: u32, m: u32, l: AxisIndex) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::OutOfRange("odd hexagons need m >= 1".into()));
    }
    let total = macmahon_count(BoxDims::new(n + 1, n + 1, 2 * m - 1));
    to_integer(&(proportion_nm(n, m, l)? * to_rational(&total)))
}

pub fn fixed_count(params: &TheoremParams, l: AxisIndex) -> Result<BigInt> {
    match params.parity() {
        Parity::Even => fixed_count_even(params.n(), params.m(), l),
        Parity::Odd => fixed_count_odd(params.n(), params.m(), l),
    }
}

/// `prod_{i=1}^{N} (N+m-i+1)! (i-1)! (2m+i+1)_{i-1} / ((m+i-1)! (2N-2i+1)!)`.
pub fn lemma5_rhs(n: u32, m: u32) -> BigRational {
    let (ni, mi) = (n as i64, m as i64);
    (1..=ni).fold(BigRational::one(), |acc, i| {
        acc * factorial_rat(ni + mi - i + 1)
            * factorial_rat(i - 1)
            * shifted_factorial(&rat_int(2 * mi + i + 1), (i - 1) as u32)
            / (factorial_rat(mi + i - 1) * factorial_rat(2 * ni - 2 * i + 1))
    })
}

/// Closed form for the weighted count of the lower region `C(N, m, l)`.
pub fn lemma6_rhs(n: u32, m: u32, l: AxisIndex) -> Result<BigRational> {
    let sum = axis_sum(n, m, l)?;
    let (ni, mi) = (n as i64, m as i64);
    let mq = rat_int(mi);
    let mut value = crate::lgv::row_factor(n, m) * crate::lgv::d_prefactor(&mq, n);
    value *= pow2((ni - 1) * (ni - 2) / 2) * shifted_factorial(&mq, n + 1);
    for j in 1..=ni {
        value *= factorial_rat(2 * j - 1);
    }
    value /= factorial_rat(ni);
    for i in 1..=ni / 2 {
        value /= shifted_factorial(&rat_int(2 * i), (2 * ni - 4 * i + 1) as u32);
    }
    Ok(value * sum)
}

/// Value of `P(m; N, l)` at `m = m_val`, `-floor(N/2) <= m_val <= 0`.
///
/// With `e = -m_val`, the product formula applies while `e < min(l, N+1-l)`;
/// for larger `e` the polynomial vanishes there.
pub fn p_eval_formula(m_val: i64, n: u32, l: AxisIndex) -> Result<BigRational> {
    check_axis(n, l)?;
    let ni = n as i64;
    let e = -m_val;
    if e < 0 || e > ni / 2 {
        return Err(Error::OutOfRange(format!(
            "m must lie in -{}..=0, got {m_val}",
            ni / 2
        )));
    }
    let li = l.get() as i64;
    if e >= li.min(ni + 1 - li) {
        return Ok(BigRational::zero());
    }
    let mut value = sign_power(e * ni + (e * e - e) / 2)
        * pow2((e * e + e) / 2 - ni + 1)
        * shifted_factorial(&rat_int(e), e as u32);
    for j in 1..=ni - e {
        value *= factorial_rat(2 * j - 1);
    }
    for k in 1..=e {
        value *= factorial_rat(k - 1).pow(2)
            * factorial_rat(ni + k - 2 * e - 1)
            * shifted_factorial(&rat(e - k + 1, 2), (k - 1) as u32)
            * shifted_factorial(&rat_int(k - ni), (ni - e) as u32);
    }
    for i in 1..=e {
        value /= factorial_rat(ni - e - i) * factorial_rat(e - i);
    }
    for i in e + 1..=ni / 2 {
        value /= shifted_factorial(&rat_int(i - e), (ni - 2 * i + 1) as u32);
    }
    for i in 1..=ni / 2 {
        value /= shifted_factorial(&(rat_int(i - e) + rat(1, 2)), (ni - 2 * i) as u32);
    }
    Ok(value)
}

/// Sign `s` in `P(-N-m; N, l) = s P(m; N, l)`, namely `(-1)^{N+1}`.
///
/// It is the sign of the determinant reflection, `(-1)^{binom(N+1,2)-1}`,
/// times `(-1)^{deg}` of the prefactor, whose roots are symmetric about `-N/2`.
pub fn p_reflection_sign(n: u32) -> BigRational {
    sign_power(n as i64 + 1)
}

/// The central-rhombus sum for `N = 2n-1`, `m = l = n`.
pub fn corollary_sum(n: u32) -> BigRational {
    let n = n as i64;
    let half = rat(1, 2);
    let low = rat(3 - 4 * n, 2);
    (0..n).fold(BigRational::zero(), |acc, e| {
        acc + sign_power(e)
            * BigRational::from_integer(binom(2 * n - 1, e) * (2 * n - 2 * e - 1))
            * shifted_factorial(&half, e as u32)
            / (rat_int((n + e) * (3 * n - e - 1)) * shifted_factorial(&low, e as u32))
    })
}

/// `2^{n-1} n! (n-1)! (6n-3)!! / ((3n)! (4n-3)!!)`.
pub fn corollary_closed_form(n: u32) -> BigRational {
    assert!(n >= 1, "corollary needs n >= 1");
    let ni = n as i64;
    let num = factorial(n) * factorial(n - 1) * double_factorial(6 * ni - 3).expect("odd argument");
    let den = factorial(3 * n) * double_factorial(4 * ni - 3).expect("odd argument");
    pow2(ni - 1) * BigRational::new(num, den)
}

/// `2n(2n+1)(6n-1)(6n+1) S(n) - (3n+1)(3n+2)(4n-1)(4n+1) S(n+1)`, zero for every `n >= 1`.
pub fn corollary_recurrence_residual(n: u32) -> BigRational {
    let k = n as i64;
    rat_int(2 * k * (2 * k + 1) * (6 * k - 1) * (6 * k + 1)) * corollary_sum(n)
        - rat_int((3 * k + 1) * (3 * k + 2) * (4 * k - 1) * (4 * k + 1)) * corollary_sum(n + 1)
}

/// `(2N-1)! ((m+1)_{N-1})^2 / ((N-1)!^2 (2m+1)_{2N-1})`, shared by the first two
/// hypergeometric forms.
fn hyp_prefactor(n: i64, m: i64) -> BigRational {
    factorial_rat(2 * n - 1) * shifted_factorial(&rat_int(m + 1), (n - 1) as u32).pow(2)
        / (factorial_rat(n - 1).pow(2) * shifted_factorial(&rat_int(2 * m + 1), (2 * n - 1) as u32))
}

fn check_hyp_args(n: u32, m: u32, l: AxisIndex) -> Result<()> {
    check_axis(n, l)?;
    if m == 0 {
        return Err(Error::PoleAtZeroM);
    }
    Ok(())
}

/// The proportion written as a terminating sum with five numerator parameters.
///
/// For even `N` and `l >= N/2 + 2` the lower parameter `-N/2` reaches zero
/// inside the window; this is reported as [`Error::SingularParameter`].
pub fn proportion_expanded_hyp(n: u32, m: u32, l: AxisIndex) -> Result<BigRational> {
    check_hyp_args(n, m, l)?;
    let (ni, mi) = (n as i64, m as i64);
    let num = [
        rat_int(-ni),
        rat(2 - ni, 2),
        rat_int(mi),
        rat_int(-mi - ni),
        rat(1, 2),
    ];
    let den = [
        rat(-ni, 2),
        rat_int(1 - mi - ni),
        rat_int(1 + mi),
        rat(1 - 2 * ni, 2),
    ];
    let series = terminating_hypergeometric(&num, &den, &BigRational::one(), l.get() as usize)?;
    Ok(hyp_prefactor(ni, mi) * series)
}

/// The proportion after the Whipple step: a balanced `4F3(1, 1/2, l-N, 1-l; 1+m, 1-m-N, 3/2; 1)`.
pub fn proportion_whipple(n: u32, m: u32, l: AxisIndex) -> Result<BigRational> {
    check_hyp_args(n, m, l)?;
    let (ni, mi, li) = (n as i64, m as i64, l.get() as i64);
    let k = (li - 1) as u32;
    let ratio = shifted_factorial(&rat_int(1 - ni), k) * shifted_factorial(&rat(1 - 2 * li, 2), k)
        / (shifted_factorial(&rat(1 - 2 * ni, 2), k) * shifted_factorial(&rat_int(1 - li), k));
    let num = [rat_int(1), rat(1, 2), rat_int(li - ni), rat_int(1 - li)];
    let den = [rat_int(1 + mi), rat_int(1 - mi - ni), rat(3, 2)];
    let series = terminating_hypergeometric(&num, &den, &BigRational::one(), l.get() as usize)?;
    Ok(hyp_prefactor(ni, mi) * ratio * series)
}

/// The proportion after the Bailey step:
/// a quotient of factorials times `4F3(1-l, 1, 1, 3/2-l+N; 3/2, 2-l-m, 2-l+m+N; 1)`.
pub fn proportion_balanced(n: u32, m: u32, l: AxisIndex) -> Result<BigRational> {
    check_hyp_args(n, m, l)?;
    let (ni, mi, li) = (n as i64, m as i64, l.get() as i64);
    let num = factorial_rat(2 * li)
        * factorial_rat(2 * mi)
        * factorial_rat(mi + ni - 1)
        * factorial_rat(mi + ni)
        * factorial_rat(2 * ni - 2 * li + 2);
    let den = rat_int(4 * (li + mi - 1) * (mi + ni - li + 1))
        * factorial_rat(li - 1)
        * factorial_rat(li)
        * factorial_rat(mi - 1)
        * factorial_rat(mi)
        * factorial_rat(ni - li)
        * factorial_rat(ni - li + 1)
        * factorial_rat(2 * mi + 2 * ni - 1);
    let params_num = [
        rat_int(1 - li),
        rat_int(1),
        rat_int(1),
        rat(3 - 2 * li + 2 * ni, 2),
    ];
    let params_den = [rat(3, 2), rat_int(2 - li - mi), rat_int(2 - li + mi + ni)];
    let series = terminating_hypergeometric(
        &params_num,
        &params_den,
        &BigRational::one(),
        l.get() as usize,
    )?;
    Ok(num / den * series)
}

/// Values of the proportion along the hypergeometric rewriting chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypChain {
    pub proportion: BigRational,
    /// `None` when the expanded sum hits a zero lower parameter.
    pub expanded: Option<BigRational>,
    pub whipple: BigRational,
    pub balanced: BigRational,
}

impl HypChain {
    pub fn holds(&self) -> bool {
        self.expanded.as_ref().is_none_or(|v| v == &self.proportion)
            && self.whipple == self.proportion
            && self.balanced == self.proportion
    }
}

pub fn hyp_chain(n: u32, m: u32, l: AxisIndex) -> Result<HypChain> {
    let expanded = match proportion_expanded_hyp(n, m, l) {
        Ok(v) => Some(v),
        Err(Error::SingularParameter { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(HypChain {
        proportion: proportion_nm(n, m, l)?,
        expanded,
        whipple: proportion_whipple(n, m, l)?,
        balanced: proportion_balanced(n, m, l)?,
    })
}

/// Whether all forms of the chain agree; a singular expanded sum is an error.
pub fn hyp_chain_check(n: u32, m: u32, l: AxisIndex) -> Result<bool> {
    proportion_expanded_hyp(n, m, l)?;
    Ok(hyp_chain(n, m, l)?.holds())
}

/// Limit ratios `m / N -> a` and `l / N -> b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AsymptoticParams {
    a_ratio: f64,
    b_ratio: f64,
}

impl AsymptoticParams {
    pub fn new(a_ratio: f64, b_ratio: f64) -> Result<Self> {
        if !(a_ratio.is_finite() && a_ratio >= 0.0) {
            return Err(Error::OutOfRange(format!(
                "a must be a nonnegative real, got {a_ratio}"
            )));
        }
        if !(b_ratio > 0.0 && b_ratio < 1.0) {
            return Err(Error::OutOfRange(format!(
                "b must lie in (0, 1), got {b_ratio}"
            )));
        }
        Ok(AsymptoticParams { a_ratio, b_ratio })
    }

    pub fn a(&self) -> f64 {
        self.a_ratio
    }

    pub fn b(&self) -> f64 {
        self.b_ratio
    }
}

/// `(2/pi) arcsin( sqrt(b(1-b)) / sqrt((a+b)(a-b+1)) )`.
pub fn arcsine_limit(ap: AsymptoticParams) -> f64 {
    let (a, b) = (ap.a_ratio, ap.b_ratio);
    let arg = ((b * (1.0 - b)) / ((a + b) * (a - b + 1.0))).sqrt();
    // argument is at most 1 analytically; clamp rounding noise
    std::f64::consts::FRAC_2_PI * arg.min(1.0).asin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::int;
    use proptest::prelude::*;

    fn ax(l: u32, n: u32) -> AxisIndex {
        AxisIndex::within(l, n).unwrap()
    }

    fn triple_product(a: u32, b: u32, c: u32) -> BigRational {
        let mut v = BigRational::one();
        for i in 1..=a as i64 {
            for j in 1..=b as i64 {
                for k in 1..=c as i64 {
                    v *= rat(i + j + k - 1, i + j + k - 2);
                }
            }
        }
        v
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(macmahon_count(BoxDims::new(1, 1, 1)), int(2));
        assert_eq!(macmahon_count(BoxDims::new(2, 2, 2)), int(20));
        assert_eq!(macmahon_count(BoxDims::new(3, 3, 4)), int(4116));
        assert_eq!(macmahon_count(BoxDims::new(3, 3, 3)), int(980));
        assert_eq!(macmahon_count(BoxDims::new(0, 4, 2)), int(1));
        assert_eq!(macmahon_count(BoxDims::new(3, 3, 0)), int(1));
    }

    #[test]
    fn macmahon_matches_triple_product_and_is_symmetric() {
        for a in 0..=5 {
            for b in 0..=5 {
                for c in 0..=5 {
                    let v = macmahon_count(BoxDims::new(a, b, c));
                    assert_eq!(to_rational(&v), triple_product(a, b, c));
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        assert_eq!(macmahon_count(BoxDims::new(x, y, z)), v);
                    }
                }
            }
        }
    }

    #[test]
    fn axis_sum_examples() {
        assert_eq!(axis_sum(1, 1, ax(1, 1)).unwrap(), rat(1, 2));
        assert_eq!(axis_sum(2, 1, ax(1, 2)).unwrap(), rat(2, 3));
        assert_eq!(axis_sum(2, 2, ax(1, 2)).unwrap(), rat(1, 4));
        assert_eq!(axis_sum(2, 0, ax(1, 2)), Err(Error::PoleAtZeroM));
        assert!(matches!(
            axis_sum(2, 1, ax(3, 3)),
            Err(Error::AxisOutOfRange { .. })
        ));
    }

    #[test]
    fn fixed_count_examples() {
        assert_eq!(fixed_count_even(1, 1, ax(1, 1)).unwrap(), int(1));
        assert_eq!(fixed_count_even(2, 1, ax(1, 2)).unwrap(), int(8));
        assert_eq!(fixed_count_even(3, 2, ax(2, 3)).unwrap(), int(1372));
        assert_eq!(fixed_count_odd(2, 2, ax(1, 2)).unwrap(), int(252));
        assert_eq!(fixed_count_odd(2, 2, ax(2, 2)).unwrap(), int(252));
        // hexagon (2, 1): 6 tilings, 2 of them contain the axis rhombus
        assert_eq!(fixed_count_odd(1, 1, ax(1, 1)).unwrap(), int(2));
    }

    #[test]
    fn proportion_examples() {
        let even = |n, m| TheoremParams::even(n, m).unwrap();
        assert_eq!(proportion(&even(2, 1), ax(1, 2)).unwrap(), rat(2, 5));
        assert_eq!(proportion_nm(2, 2, ax(1, 2)).unwrap(), rat(9, 35));
        for n in 1..=4u32 {
            let central = ax(n, 2 * n - 1);
            assert_eq!(proportion(&even(2 * n - 1, n), central).unwrap(), rat(1, 3));
            let odd = TheoremParams::odd(2 * n - 1, n).unwrap();
            assert_eq!(odd.hexagon(), HexagonSpec::new(2 * n, 2 * n - 1).unwrap());
            assert_eq!(proportion(&odd, central).unwrap(), rat(1, 3));
        }
    }

    #[test]
    fn counts_are_symmetric_and_bounded() {
        for n in 1..=6u32 {
            for m in 1..=4u32 {
                for l in 1..=n {
                    let f = fixed_count_even(n, m, ax(l, n)).unwrap();
                    assert_eq!(f, fixed_count_even(n, m, ax(n + 1 - l, n)).unwrap());
                    let p = proportion_nm(n, m, ax(l, n)).unwrap();
                    assert!(
                        p > BigRational::zero() && p <= BigRational::one(),
                        "{n} {m} {l}: {p}"
                    );
                    assert_eq!(
                        p * to_rational(&macmahon_count(BoxDims::new(n, n, 2 * m))),
                        to_rational(&f)
                    );
                }
            }
        }
    }

    #[test]
    fn lemma5_examples() {
        assert_eq!(lemma5_rhs(1, 2), rat_int(3));
        assert_eq!(lemma5_rhs(2, 1), rat_int(5));
        assert_eq!(lemma5_rhs(3, 0), rat_int(1));
    }

    #[test]
    fn lemma6_matches_determinants() {
        use crate::lgv::{determinant, matrix_c};
        assert_eq!(lemma6_rhs(1, 3, ax(1, 1)).unwrap(), rat_int(1));
        for (n, m, l) in [(2, 1, 1), (4, 3, 2), (5, 2, 3), (6, 1, 1)] {
            assert_eq!(
                lemma6_rhs(n, m, ax(l, n)).unwrap(),
                determinant(&matrix_c(n, m, ax(l, n)))
            );
        }
    }

    #[test]
    fn p_formula_matches_interpolation() {
        use crate::lgv::extract_p_polynomial;
        assert_eq!(p_eval_formula(0, 1, ax(1, 1)).unwrap(), rat_int(1));
        for n in 1..=6u32 {
            for l in 1..=n {
                let p = extract_p_polynomial(n, ax(l, n)).unwrap();
                for e in 0..=(n / 2) as i64 {
                    let x = rat_int(-e);
                    assert_eq!(
                        p.eval(&x),
                        p_eval_formula(-e, n, ax(l, n)).unwrap(),
                        "N={n} l={l} m=-{e}"
                    );
                }
                let reflected = p.substitute_affine(&rat_int(-1), &rat_int(-(n as i64)));
                assert_eq!(reflected, p.scale(&p_reflection_sign(n)));
            }
        }
        assert!(p_eval_formula(1, 4, ax(1, 4)).is_err());
        assert!(p_eval_formula(-3, 4, ax(1, 4)).is_err());
    }

    #[test]
    fn corollary_identities() {
        assert_eq!(corollary_sum(1), rat(1, 2));
        assert_eq!(corollary_sum(2), rat(7, 20));
        for n in 1..=10 {
            assert_eq!(corollary_sum(n), corollary_closed_form(n), "n={n}");
            assert!(corollary_recurrence_residual(n).is_zero());
        }
    }

    #[test]
    fn hypergeometric_chain() {
        let c = hyp_chain(3, 2, ax(2, 3)).unwrap();
        assert!(c.holds());
        assert_eq!(c.balanced, rat(1, 3));
        assert!(hyp_chain_check(2, 1, ax(1, 2)).unwrap());
        for l in 1..=5 {
            assert!(hyp_chain_check(5, 3, ax(l, 5)).unwrap());
        }
        // the expanded form is singular for N = 4, l = 4
        assert!(matches!(
            proportion_expanded_hyp(4, 1, ax(4, 4)),
            Err(Error::SingularParameter { .. })
        ));
        let c = hyp_chain(4, 1, ax(4, 4)).unwrap();
        assert!(c.expanded.is_none() && c.holds());
    }

    #[test]
    fn arcsine_examples() {
        let f = |a, b| arcsine_limit(AsymptoticParams::new(a, b).unwrap());
        assert!((f(0.5, 0.5) - 1.0 / 3.0).abs() < 1e-14);
        assert!((f(0.0, 0.5) - 1.0).abs() < 1e-14);
        assert!(f(1.0, 1e-12) < 1e-5);
        assert!(AsymptoticParams::new(1.0, 1.0).is_err());
        assert!(AsymptoticParams::new(-0.1, 0.5).is_err());
    }

    proptest! {
        #[test]
        fn proportion_is_mirror_symmetric(n in 1u32..12, m in 1u32..12, l_raw in 0u32..12) {
            let l = l_raw % n + 1;
            prop_assert_eq!(
                proportion_nm(n, m, ax(l, n)).unwrap(),
                proportion_nm(n, m, ax(n + 1 - l, n)).unwrap()
            );
        }
    }
}
