//! Sparse exact polynomials in the two commuting variables d and U with
//! arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An element of Z[d, U], stored as exponent pair -> coefficient with no
/// zero coefficients retained.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly2 {
    pub terms: BTreeMap<(u32, u32), BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(c))
    }

    pub fn monomial(deg_d: u32, deg_u: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_d, deg_u), coeff);
        }
        IntPoly2 { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        IntPoly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let entry = terms.entry(*k).or_insert_with(BigInt::zero);
            *entry += v;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        IntPoly2 { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for ((d1, u1), c1) in &self.terms {
            for ((d2, u2), c2) in &other.terms {
                let k = (d1 + d2, u1 + u2);
                let entry = terms.entry(k).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        IntPoly2 { terms }
    }

    pub fn scale(&self, c: i64) -> Self {
        self.mul(&Self::constant(c))
    }

    /// Exact quotient self / divisor; `None` when the division is not
    /// exact in Z[d, U]. Greedy leading-term elimination in the lex order
    /// on (deg_d, deg_U) terminates because exactness forces every leading
    /// term of the running remainder to be divisible.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (&(dd, du), dc) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = IntPoly2::zero();
        while !rem.is_zero() {
            let (&(rd, ru), rc) = rem.terms.iter().next_back().unwrap();
            if rd < dd || ru < du || !(rc % dc).is_zero() {
                return None;
            }
            let t = IntPoly2::monomial(rd - dd, ru - du, rc / dc);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Substitutes a constant for d^2; every term must have even d-degree.
    pub fn subst_d_squared(&self, d2: i64) -> Self {
        let base = BigInt::from(d2);
        let mut out = IntPoly2::zero();
        for (&(dd, du), c) in &self.terms {
            assert!(dd % 2 == 0, "odd power of d under a d^2 substitution");
            out = out.add(&IntPoly2::monomial(0, du, c * base.pow(dd / 2)));
        }
        out
    }

    /// Extracts the coefficient of d^0 (equivalently, substitutes d = 0).
    pub fn subst_d_zero(&self) -> Self {
        IntPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|((dd, _), _)| *dd == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Formal derivative with respect to U.
    pub fn deriv_u(&self) -> Self {
        let mut out = IntPoly2::zero();
        for (&(dd, du), c) in &self.terms {
            if du > 0 {
                out = out.add(&IntPoly2::monomial(dd, du - 1, c * BigInt::from(du)));
            }
        }
        out
    }

    pub fn eval_f64(&self, d: f64, u: f64) -> f64 {
        let mut acc = 0.0;
        for (&(dd, du), c) in &self.terms {
            let cf: f64 = c.to_string().parse().unwrap();
            acc += cf * d.powi(dd as i32) * u.powi(du as i32);
        }
        acc
    }
}

impl fmt::Display for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(dd, du), c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mag = c.abs();
            let mut wrote = false;
            if mag != BigInt::from(1) || (dd == 0 && du == 0) {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for (name, e) in [("d", dd), ("U", du)] {
                if e > 0 {
                    if wrote {
                        write!(f, "*")?;
                    }
                    wrote = true;
                    if e == 1 {
                        write!(f, "{name}")?;
                    } else {
                        write!(f, "{name}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(dd: u32, du: u32, c: i64) -> IntPoly2 {
        IntPoly2::monomial(dd, du, BigInt::from(c))
    }

    #[test]
    fn arithmetic_basics() {
        let p = m(0, 1, 2).add(&m(1, 0, -3)); // 2U - 3d
        let q = m(0, 1, 1).add(&m(0, 0, 1)); // U + 1
        let prod = p.mul(&q); // 2U^2 + 2U - 3dU - 3d
        assert_eq!(
            prod,
            m(0, 2, 2)
                .add(&m(0, 1, 2))
                .add(&m(1, 1, -3))
                .add(&m(1, 0, -3))
        );
        assert!(p.sub(&p).is_zero());
        assert_eq!(prod.exact_div(&q).unwrap(), p);
        assert_eq!(prod.add(&m(0, 0, 1)).exact_div(&q), None);
    }

    #[test]
    fn substitution_and_derivative() {
        // d^2 U^2 + 4 d^4 + U
        let p = m(2, 2, 1).add(&m(4, 0, 4)).add(&m(0, 1, 1));
        assert_eq!(
            p.subst_d_squared(3),
            m(0, 2, 3).add(&m(0, 0, 36)).add(&m(0, 1, 1))
        );
        assert_eq!(p.subst_d_zero(), m(0, 1, 1));
        assert_eq!(p.deriv_u(), m(2, 1, 2).add(&m(0, 0, 1)));
        assert!((p.eval_f64(2.0, 3.0) - (4.0 * 9.0 + 64.0 + 3.0)).abs() < 1e-12);
    }

    #[test]
    fn display_reads_naturally() {
        let p = m(0, 2, -1).add(&m(1, 1, 5)).add(&m(0, 0, 7));
        assert_eq!(p.to_string(), "5*d*U - U^2 + 7");
        assert_eq!(IntPoly2::zero().to_string(), "0");
    }
}
