//! Dynamically typed ring values.
//!
//! [`RingElement`] tags a value with its ambient ring so callers that pick
//! a ring at run time (the CLI, report rendering) can operate without
//! monomorphization. Binary operations require matching tags: there is no
//! implicit coercion, a mismatch is a reported error.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use crate::poly::{MultiPoly, Var};
use crate::ring::{ArithError, Integer, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingElement {
    Int(Integer),
    Rat(Rational),
    Poly(MultiPoly),
}

impl RingElement {
    pub fn from_i64(n: i64) -> Self {
        RingElement::Int(Integer::from(n))
    }

    pub fn var(v: Var) -> Self {
        RingElement::Poly(MultiPoly::var(v))
    }

    pub fn ring_name(&self) -> &'static str {
        match self {
            RingElement::Int(_) => Integer::ring_name(),
            RingElement::Rat(_) => Rational::ring_name(),
            RingElement::Poly(_) => MultiPoly::ring_name(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(a) => a.is_zero(),
            RingElement::Rat(a) => a.is_zero(),
            RingElement::Poly(a) => a.is_zero(),
        }
    }

    fn mismatch(&self, rhs: &Self) -> ArithError {
        ArithError::RingMismatch {
            left: self.ring_name(),
            right: rhs.ring_name(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => Ok(RingElement::Int(a.add(b))),
            (RingElement::Rat(a), RingElement::Rat(b)) => Ok(RingElement::Rat(a.add(b))),
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a.add(b))),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => Ok(RingElement::Int(a.sub(b))),
            (RingElement::Rat(a), RingElement::Rat(b)) => Ok(RingElement::Rat(a.sub(b))),
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a.sub(b))),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => Ok(RingElement::Int(a.mul(b))),
            (RingElement::Rat(a), RingElement::Rat(b)) => Ok(RingElement::Rat(a.mul(b))),
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a.mul(b))),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            RingElement::Int(a) => RingElement::Int(Ring::neg(a)),
            RingElement::Rat(a) => RingElement::Rat(Ring::neg(a)),
            RingElement::Poly(a) => RingElement::Poly(Ring::neg(a)),
        }
    }

    pub fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        match (self, rhs) {
            (RingElement::Int(a), RingElement::Int(b)) => Ok(RingElement::Int(a.exact_div(b)?)),
            (RingElement::Rat(a), RingElement::Rat(b)) => Ok(RingElement::Rat(a.exact_div(b)?)),
            (RingElement::Poly(a), RingElement::Poly(b)) => Ok(RingElement::Poly(a.exact_div(b)?)),
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        match self {
            RingElement::Int(a) => RingElement::Int(Ring::pow(a, exp)),
            RingElement::Rat(a) => RingElement::Rat(Ring::pow(a, exp)),
            RingElement::Poly(a) => RingElement::Poly(Ring::pow(a, exp)),
        }
    }
}

impl Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(a) => write!(f, "{a}"),
            RingElement::Rat(a) => write!(f, "{a}"),
            RingElement::Poly(a) => write!(f, "{a}"),
        }
    }
}

/// Substitute ring elements for the variables of a polynomial.
///
/// Every variable occurring in `p` must be assigned; all assigned values
/// must share one ambient ring, which becomes the result's ring. A constant
/// polynomial with an empty assignment evaluates in the integers.
pub fn poly_eval(
    p: &MultiPoly,
    assignment: &BTreeMap<Var, RingElement>,
) -> Result<RingElement, ArithError> {
    let mut ambient: Option<&RingElement> = None;
    for value in assignment.values() {
        match ambient {
            None => ambient = Some(value),
            Some(first) if first.ring_name() != value.ring_name() => {
                return Err(ArithError::RingMismatch {
                    left: first.ring_name(),
                    right: value.ring_name(),
                })
            }
            _ => {}
        }
    }
    match ambient {
        None | Some(RingElement::Int(_)) => {
            let value = p.eval(&|v| match assignment.get(&v) {
                Some(RingElement::Int(x)) => Some(x.clone()),
                _ => None,
            })?;
            Ok(RingElement::Int(value))
        }
        Some(RingElement::Rat(_)) => {
            let value = p.eval(&|v| match assignment.get(&v) {
                Some(RingElement::Rat(x)) => Some(x.clone()),
                _ => None,
            })?;
            Ok(RingElement::Rat(value))
        }
        Some(RingElement::Poly(_)) => {
            let value = p.eval(&|v| match assignment.get(&v) {
                Some(RingElement::Poly(x)) => Some(x.clone()),
                _ => None,
            })?;
            Ok(RingElement::Poly(value))
        }
    }
}
