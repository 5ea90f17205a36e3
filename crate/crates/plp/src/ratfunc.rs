//! Rational functions of one parameter, in reduced canonical form.

use crate::poly::{Poly, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A quotient of polynomials, reduced so that gcd(num, den) = 1 and the
/// denominator has positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, String> {
        if den.is_zero() {
            return Err("rational function with zero denominator".into());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().map_or(false, |d| d > 0) {
            let (qn, rn) = num.divrem(&g);
            let (qd, rd) = den.divrem(&g);
            debug_assert!(rn.is_zero() && rd.is_zero());
            (qn, qd)
        } else {
            (num, den)
        };
        let lead = den.leading_coeff().unwrap().clone();
        let (num, den) = if lead.is_negative() {
            (-&num, -&den)
        } else {
            (num, den)
        };
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact evaluation; `None` when the denominator vanishes at `x`.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .unwrap()
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).unwrap()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.leading_coeff().map_or(false, |c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
