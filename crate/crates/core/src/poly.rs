//! Sparse multivariate polynomials over the integers.
//!
//! The variable universe is fixed: `A, B, w0, w1, q, x, t, eps`, ordered as
//! listed. Terms are kept in a map from exponent vector to nonzero integer
//! coefficient, with graded lexicographic ordering on exponent vectors, so
//! equality of canonical term maps is equality of polynomials. Exact
//! division by repeated leading-term elimination is enough for fraction-free
//! elimination, which only ever divides exactly.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::{self, Display};

use num_traits::{One, Signed, Zero};

use crate::ring::{ArithError, Integer, Ring};

/// Number of variables in the fixed universe.
pub const VAR_COUNT: usize = 8;

/// A variable of the fixed universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    W0,
    W1,
    Q,
    X,
    T,
    Eps,
}

impl Var {
    pub const ALL: [Var; VAR_COUNT] = [
        Var::A,
        Var::B,
        Var::W0,
        Var::W1,
        Var::Q,
        Var::X,
        Var::T,
        Var::Eps,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::B => "B",
            Var::W0 => "w0",
            Var::W1 => "w1",
            Var::Q => "q",
            Var::X => "x",
            Var::T => "t",
            Var::Eps => "eps",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

/// Exponent vector with cached total degree.
///
/// The derived `Ord` compares total degree first and then the exponent
/// vector lexicographically: graded lex over the fixed variable list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    degree: u32,
    exps: [u32; VAR_COUNT],
}

impl Mono {
    pub fn new(exps: [u32; VAR_COUNT]) -> Self {
        Mono {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn constant() -> Self {
        Mono::new([0; VAR_COUNT])
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; VAR_COUNT];
        exps[v.index()] = 1;
        Mono::new(exps)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    fn mul(&self, rhs: &Mono) -> Mono {
        let mut exps = self.exps;
        for (e, r) in exps.iter_mut().zip(rhs.exps.iter()) {
            *e += r;
        }
        Mono::new(exps)
    }

    /// Componentwise division, `None` if some exponent of `rhs` exceeds ours.
    fn try_div(&self, rhs: &Mono) -> Option<Mono> {
        let mut exps = self.exps;
        for (e, r) in exps.iter_mut().zip(rhs.exps.iter()) {
            *e = e.checked_sub(*r)?;
        }
        Some(Mono::new(exps))
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 1 {
                parts.push(v.name().to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", v.name(), e));
            }
        }
        parts.join("*")
    }
}

/// Sparse multivariate polynomial with integer coefficients.
///
/// Invariant: the term map never stores a zero coefficient, so derived
/// equality is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Integer>,
}

impl MultiPoly {
    pub fn constant(c: Integer) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(Mono::constant(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Integer::from(1));
        MultiPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Integer)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Integer> {
        if self.terms.is_empty() {
            return Some(Integer::from(0));
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Largest exponent of `v` across all terms.
    pub fn degree_of(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    /// Leading term under graded lex.
    fn leading(&self) -> Option<(&Mono, &Integer)> {
        self.terms.iter().next_back()
    }

    fn add_term(terms: &mut BTreeMap<Mono, Integer>, mono: Mono, coeff: Integer) {
        if Zero::is_zero(&coeff) {
            return;
        }
        match terms.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// `self * (coeff * mono)` for a single term.
    fn mul_term(&self, mono: &Mono, coeff: &Integer) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.mul(mono), c * coeff))
            .collect();
        MultiPoly { terms }
    }

    /// Substitute a ring value for every variable that occurs.
    ///
    /// The assignment closure must cover every used variable; integer
    /// coefficients are lifted into the target ring.
    pub fn eval<R: Ring>(&self, assign: &dyn Fn(Var) -> Option<R>) -> Result<R, ArithError> {
        let mut acc = R::zero();
        for (mono, coeff) in &self.terms {
            let mut term = R::from_integer(coeff);
            for v in Var::ALL {
                let e = mono.exp(v);
                if e > 0 {
                    let value = assign(v).ok_or(ArithError::MissingVariable(v.name()))?;
                    term = term.mul(&value.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }

    fn one() -> Self {
        MultiPoly::constant(Integer::from(1))
    }

    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(Integer::from(n))
    }

    fn from_integer(n: &Integer) -> Self {
        MultiPoly::constant(n.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::add_term(&mut terms, *m, c.clone());
        }
        MultiPoly { terms }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Self::add_term(&mut terms, *m, -c);
        }
        MultiPoly { terms }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                Self::add_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        MultiPoly { terms }
    }

    fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        MultiPoly { terms }
    }

    /// Exact division by repeated leading-term elimination. A quotient
    /// step that fails (monomial or coefficient not divisible) means the
    /// division is not exact and is a hard error.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (dm, dc) = rhs.leading().unwrap();
        let not_divisible = || ArithError::NotDivisible {
            dividend: self.to_string(),
            divisor: rhs.to_string(),
        };
        let mut rem = self.clone();
        let mut quo = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.try_div(dm).ok_or_else(not_divisible)?;
            let qc = rc.exact_div(dc).map_err(|_| not_divisible())?;
            rem = Ring::sub(&rem, &rhs.mul_term(&qm, &qc));
            quo.insert(qm, qc);
        }
        Ok(MultiPoly { terms: quo })
    }

    fn ring_name() -> &'static str {
        "poly"
    }
}

/// Terms in descending graded-lex order, `^` powers, `*` products.
impl Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = mono.render();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// Conversion between a scalar ring and the polynomial ring, used to extend
/// a matrix's entries by the characteristic variable `x`.
pub trait PolyLift: Ring {
    fn lift(&self) -> MultiPoly;
    /// Inverse of [`lift`](Self::lift); `None` when the polynomial does not
    /// lie in the image (e.g. a non-constant polynomial over the integers).
    fn lower(p: &MultiPoly) -> Option<Self>;
}

impl PolyLift for Integer {
    fn lift(&self) -> MultiPoly {
        MultiPoly::constant(self.clone())
    }

    fn lower(p: &MultiPoly) -> Option<Self> {
        p.as_constant()
    }
}

impl PolyLift for MultiPoly {
    fn lift(&self) -> MultiPoly {
        self.clone()
    }

    fn lower(p: &MultiPoly) -> Option<Self> {
        Some(p.clone())
    }
}
