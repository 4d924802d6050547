//! Polynomials in V over Z[sqrt(3)][d, U], the Sylvester matrix with the
//! first-argument rows on top, and its exact fraction-free determinant.

use super::surd::SurdPoly;

/// A polynomial in V; `coeffs[k]` is the coefficient of V^k.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SurdPolyInV {
    pub coeffs: Vec<SurdPoly>,
}

impl SurdPolyInV {
    pub fn new(coeffs: Vec<SurdPoly>) -> Self {
        let mut p = SurdPolyInV { coeffs };
        p.trim();
        p
    }

    /// Constant (degree-0 in V) polynomial.
    pub fn scalar(c: SurdPoly) -> Self {
        Self::new(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> SurdPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(SurdPoly::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![SurdPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(coeffs)
    }

    /// Conjugation sqrt(3) -> -sqrt(3) on every coefficient.
    pub fn conj(&self) -> Self {
        Self::new(self.coeffs.iter().map(SurdPoly::conj).collect())
    }
}

/// The (m+n) x (m+n) Sylvester matrix of f (degree m) and g (degree n),
/// with the n rows of f-coefficients first; this ordering fixes the sign
/// convention of the resultant.
pub fn sylvester_matrix(f: &SurdPolyInV, g: &SurdPolyInV) -> Vec<Vec<SurdPoly>> {
    assert!(
        !f.is_zero() && !g.is_zero(),
        "resultant of a zero polynomial"
    );
    let m = f.degree();
    let n = g.degree();
    let size = m + n;
    let mut mat = vec![vec![SurdPoly::zero(); size]; size];
    for (row, mr) in mat.iter_mut().take(n).enumerate() {
        for k in 0..=m {
            mr[row + k] = f.coeff(m - k);
        }
    }
    for (row, mr) in mat.iter_mut().skip(n).enumerate() {
        for k in 0..=n {
            mr[row + k] = g.coeff(n - k);
        }
    }
    mat
}

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting; every division is exact in the coefficient ring.
pub fn determinant(mut m: Vec<Vec<SurdPoly>>) -> SurdPoly {
    let n = m.len();
    if n == 0 {
        return SurdPoly::constant(1);
    }
    let mut sign = 1i64;
    let mut prev = SurdPoly::constant(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return SurdPoly::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = SurdPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Resultant with respect to V under the f-rows-first convention.
pub fn sylvester_resultant(f: &SurdPolyInV, g: &SurdPolyInV) -> SurdPoly {
    determinant(sylvester_matrix(f, g))
}
