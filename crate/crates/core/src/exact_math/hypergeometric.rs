use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Finite hypergeometric sum
/// `sum_{e=0}^{term_count-1} prod (a_i)_e / prod (b_j)_e * z^e / e!`.
///
/// Terms are built incrementally from the ratio of consecutive terms. Any
/// denominator factor `b_j + t` that vanishes for a term inside the window is
/// reported as [`Error::SingularParameter`], even if a numerator factor has
/// already zeroed that term: the quotient is then formally `0/0`.
pub fn terminating_hypergeometric(
    numerator_params: &[BigRational],
    denominator_params: &[BigRational],
    argument: &BigRational,
    term_count: usize,
) -> Result<BigRational> {
    let mut sum = BigRational::zero();
    if term_count == 0 {
        return Ok(sum);
    }
    let mut term = BigRational::one();
    sum += &term;
    for e in 0..term_count - 1 {
        let shift = BigRational::from_integer(BigInt::from(e));
        let mut den = BigRational::from_integer(BigInt::from(e + 1));
        for b in denominator_params {
            let factor = b + &shift;
            if factor.is_zero() {
                return Err(Error::SingularParameter {
                    param: b.to_string(),
                    term: e + 1,
                });
            }
            den *= factor;
        }
        if term.is_zero() {
            continue;
        }
        let mut num = argument.clone();
        for a in numerator_params {
            num *= a + &shift;
        }
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}
