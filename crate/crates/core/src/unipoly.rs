//! Univariate polynomials in the distinguished variable `x`.
//!
//! Coefficients live in any supported ring; characteristic polynomials are
//! the main producer. Stored dense, lowest coefficient first, with trailing
//! zeros trimmed so derived equality is canonical.

use std::fmt::{self, Display};

use crate::poly::{MultiPoly, PolyLift, Var};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    /// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == R::one())
    }

    pub fn scale(&self, c: &R) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|k| k.mul(c)).collect())
    }

    /// Evaluate at a ring point by Horner's rule.
    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }
}

impl<R: PolyLift> UniPoly<R> {
    /// Flatten into the multivariate ring: `sum_k lift(c_k) * x^k`.
    pub fn to_multipoly(&self) -> MultiPoly {
        let x = MultiPoly::var(Var::X);
        let mut acc = MultiPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.lift().mul(&x.pow(k as u32)));
        }
        acc
    }
}

impl<R: Ring> Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let rendered = c.to_string();
            let xpow = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            // Multi-term coefficients render inside parentheses and join
            // with '+'; single-term ones carry their sign into the join.
            let multi_term = rendered.contains(' ');
            let term = if k == 0 {
                rendered.clone()
            } else if multi_term {
                format!("({rendered})*{xpow}")
            } else if rendered == "1" {
                xpow
            } else if rendered == "-1" {
                format!("-{xpow}")
            } else {
                format!("{rendered}*{xpow}")
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integer;

    fn ints(v: &[i64]) -> UniPoly<Integer> {
        UniPoly::from_coeffs(v.iter().map(|&n| Integer::from(n)).collect())
    }

    #[test]
    fn rendering() {
        assert_eq!(ints(&[-1, -1, 1]).to_string(), "x^2 - x - 1");
        assert_eq!(ints(&[0, 1]).to_string(), "x");
        assert_eq!(ints(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(ints(&[8, -8, 1]).to_string(), "x^2 - 8*x + 8");
        assert_eq!(ints(&[]).to_string(), "0");
        assert_eq!(ints(&[5]).to_string(), "5");
    }

    #[test]
    fn normalization_and_eval() {
        let p = ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeff(5), Integer::from(0));
        assert_eq!(p.eval(&Integer::from(3)), Integer::from(7));
        assert!(ints(&[7, 0, 1]).is_monic());
        assert!(!ints(&[7, 0, 2]).is_monic());
    }

    #[test]
    fn poly_coefficients_render_with_parens() {
        use crate::poly::MultiPoly;
        let a = MultiPoly::var(Var::A);
        let p = UniPoly::from_coeffs(vec![
            a.add(&MultiPoly::one()),
            MultiPoly::from_i64(-2).mul(&a),
            MultiPoly::one(),
        ]);
        assert_eq!(p.to_string(), "x^2 - 2*A*x + A + 1");
        let q = UniPoly::from_coeffs(vec![MultiPoly::zero(), a.add(&MultiPoly::one())]);
        assert_eq!(q.to_string(), "(A + 1)*x");
    }
}
