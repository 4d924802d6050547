//! The ring Z[sqrt(3)][d, U]: pairs rat + surd*sqrt(3) of integer
//! polynomials, with exact multiplication, conjugation, and division.

use std::fmt;

use num_bigint::BigInt;

use super::intpoly::IntPoly2;

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurdPoly {
    pub rat: IntPoly2,
    pub surd: IntPoly2,
}

impl SurdPoly {
    pub fn zero() -> Self {
        SurdPoly::default()
    }

    pub fn from_rat(rat: IntPoly2) -> Self {
        SurdPoly {
            rat,
            surd: IntPoly2::zero(),
        }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_rat(IntPoly2::constant(c))
    }

    /// c * sqrt(3)^k * d^deg_d * U^deg_u with k in {0, 1}.
    pub fn monomial(surd_part: bool, deg_d: u32, deg_u: u32, c: i64) -> Self {
        let m = IntPoly2::monomial(deg_d, deg_u, BigInt::from(c));
        if surd_part {
            SurdPoly {
                rat: IntPoly2::zero(),
                surd: m,
            }
        } else {
            SurdPoly::from_rat(m)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn neg(&self) -> Self {
        SurdPoly {
            rat: self.rat.neg(),
            surd: self.surd.neg(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        SurdPoly {
            rat: self.rat.add(&o.rat),
            surd: self.surd.add(&o.surd),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        SurdPoly {
            rat: self.rat.sub(&o.rat),
            surd: self.surd.sub(&o.surd),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        // (r1 + s1 sqrt3)(r2 + s2 sqrt3) = r1 r2 + 3 s1 s2 + (r1 s2 + s1 r2) sqrt3
        SurdPoly {
            rat: self.rat.mul(&o.rat).add(&self.surd.mul(&o.surd).scale(3)),
            surd: self.rat.mul(&o.surd).add(&self.surd.mul(&o.rat)),
        }
    }

    /// Conjugation sqrt(3) -> -sqrt(3).
    pub fn conj(&self) -> Self {
        SurdPoly {
            rat: self.rat.clone(),
            surd: self.surd.neg(),
        }
    }

    /// Exact quotient in Z[sqrt(3)][d, U]: multiply by the conjugate and
    /// divide both components by the norm rat^2 - 3 surd^2.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let norm = divisor
            .rat
            .mul(&divisor.rat)
            .sub(&divisor.surd.mul(&divisor.surd).scale(3));
        let num = self.mul(&divisor.conj());
        Some(SurdPoly {
            rat: num.rat.exact_div(&norm)?,
            surd: num.surd.exact_div(&norm)?,
        })
    }

    pub fn subst_d_squared(&self, d2: i64) -> Self {
        SurdPoly {
            rat: self.rat.subst_d_squared(d2),
            surd: self.surd.subst_d_squared(d2),
        }
    }

    pub fn subst_d_zero(&self) -> Self {
        SurdPoly {
            rat: self.rat.subst_d_zero(),
            surd: self.surd.subst_d_zero(),
        }
    }

    pub fn deriv_u(&self) -> Self {
        SurdPoly {
            rat: self.rat.deriv_u(),
            surd: self.surd.deriv_u(),
        }
    }

    pub fn eval_f64(&self, d: f64, u: f64) -> f64 {
        self.rat.eval_f64(d, u) + SQRT3 * self.surd.eval_f64(d, u)
    }
}

impl fmt::Display for SurdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.surd.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "({})*sqrt3", self.surd),
            (false, false) => write!(f, "{} + ({})*sqrt3", self.rat, self.surd),
        }
    }
}
