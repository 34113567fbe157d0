//! Sparse multivariate polynomials in θ_0..θ_{n−1} with exact rational
//! coefficients, keyed by exponent vector.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl SymbolicPolynomial {
    pub fn zero(n: usize) -> Self {
        SymbolicPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, value: BigRational) -> Self {
        let mut p = SymbolicPolynomial::zero(n);
        if !value.is_zero() {
            p.terms.insert(vec![0; n], value);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        SymbolicPolynomial::constant(n, BigRational::one())
    }

    /// The single variable θ_e.
    pub fn variable(n: usize, e: usize) -> Self {
        assert!(e < n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[e] = 1;
        let mut p = SymbolicPolynomial::zero(n);
        p.terms.insert(exps, BigRational::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponents, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, exps: Vec<u32>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomial width mismatch");
        let mut out = self.clone();
        for (exps, coeff) in other.terms() {
            out.insert(exps.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomial width mismatch");
        let mut out = self.clone();
        for (exps, coeff) in other.terms() {
            out.insert(exps.clone(), -coeff.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "polynomial width mismatch");
        let mut out = SymbolicPolynomial::zero(self.n);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let exps: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.insert(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = SymbolicPolynomial::zero(self.n);
        for (exps, coeff) in self.terms() {
            out.terms.insert(exps.clone(), -coeff.clone());
        }
        out
    }

    pub fn evaluate(&self, theta: &[f64]) -> f64 {
        assert_eq!(theta.len(), self.n, "evaluation point width mismatch");
        let mut acc = 0.0;
        for (exps, coeff) in self.terms() {
            let mut term = rational_to_f64(coeff);
            for (e, &k) in exps.iter().enumerate() {
                term *= theta[e].powi(k as i32);
            }
            acc += term;
        }
        acc
    }

    pub fn evaluate_exact(&self, theta: &[BigRational]) -> BigRational {
        assert_eq!(theta.len(), self.n, "evaluation point width mismatch");
        let mut acc = BigRational::zero();
        for (exps, coeff) in self.terms() {
            let mut term = coeff.clone();
            for (e, &k) in exps.iter().enumerate() {
                for _ in 0..k {
                    term *= theta[e].clone();
                }
            }
            acc += term;
        }
        acc
    }

    /// The exponent vector of the term of minimal total degree, ties
    /// broken by picking the lexicographically largest exponent vector.
    /// (1 is the largest monomial; higher total degree compares smaller.)
    pub fn leading_exponents(&self) -> Option<Vec<u32>> {
        self.terms
            .keys()
            .min_by_key(|exps| {
                let degree: u32 = exps.iter().sum();
                (degree, std::cmp::Reverse((*exps).clone()))
            })
            .cloned()
    }
}

/// The exponent vector of the leading term under the order used throughout
/// this crate (minimal total degree, lexicographically largest on ties);
/// errors on the zero polynomial, which has no terms.
pub fn leading_monomial(p: &SymbolicPolynomial) -> crate::error::Result<Vec<u32>> {
    p.leading_exponents().ok_or(crate::error::CbnError::ZeroPolynomial)
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("rational magnitudes in this crate fit in f64's range")
}

impl fmt::Display for SymbolicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms() {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&k| k == 0) {
                factors.push(mag.to_string());
            }
            for (e, &k) in exps.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("t{e}")),
                    _ => factors.push(format!("t{e}^{k}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let t0 = SymbolicPolynomial::variable(2, 0);
        let t1 = SymbolicPolynomial::variable(2, 1);
        let sum = t0.add(&t1);
        assert_eq!(sum.term_count(), 2);
        let cancel = sum.sub(&t0).sub(&t1);
        assert!(cancel.is_zero());

        // (1 − t0)(1 − t1) = 1 − t0 − t1 + t0 t1
        let one = SymbolicPolynomial::one(2);
        let prod = one.sub(&t0).mul(&one.sub(&t1));
        assert_eq!(prod.term_count(), 4);
        assert_eq!(prod.coefficient(&[0, 0]), rat(1, 1));
        assert_eq!(prod.coefficient(&[1, 0]), rat(-1, 1));
        assert_eq!(prod.coefficient(&[0, 1]), rat(-1, 1));
        assert_eq!(prod.coefficient(&[1, 1]), rat(1, 1));
    }

    #[test]
    fn evaluation_matches_both_ways() {
        let t0 = SymbolicPolynomial::variable(2, 0);
        let t1 = SymbolicPolynomial::variable(2, 1);
        let p = t0.mul(&t0).sub(&t1.mul(&SymbolicPolynomial::constant(2, rat(3, 2))));
        // p = t0² − (3/2) t1 at (0.5, 0.25): 0.25 − 0.375 = −0.125.
        assert!((p.evaluate(&[0.5, 0.25]) + 0.125).abs() < 1e-15);
        let exact = p.evaluate_exact(&[rat(1, 2), rat(1, 4)]);
        assert_eq!(exact, rat(-1, 8));
    }

    #[test]
    fn leading_term_prefers_low_degree() {
        let one = SymbolicPolynomial::one(2);
        let t0 = SymbolicPolynomial::variable(2, 0);
        let t1 = SymbolicPolynomial::variable(2, 1);
        let p = t0.mul(&t1).add(&t1); // t0 t1 + t1 → leading is t1
        assert_eq!(p.leading_exponents(), Some(vec![0, 1]));
        assert_eq!(one.leading_exponents(), Some(vec![0, 0]));
        assert_eq!(SymbolicPolynomial::zero(2).leading_exponents(), None);
        // Degree tie broken toward the lexicographically larger vector.
        let q = t0.add(&t1);
        assert_eq!(q.leading_exponents(), Some(vec![1, 0]));
    }

    #[test]
    fn display_is_readable() {
        let one = SymbolicPolynomial::one(2);
        let t0 = SymbolicPolynomial::variable(2, 0);
        let t1 = SymbolicPolynomial::variable(2, 1);
        let p = one.sub(&t0.mul(&t1)).sub(&t1);
        assert_eq!(p.to_string(), "1 - t1 - t0*t1");
    }
}
