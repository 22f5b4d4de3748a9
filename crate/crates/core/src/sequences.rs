//! Second-order recurrent sequences over any supported ring.
//!
//! A sequence is driven by `w_{n+1} = A*w_n - B*w_{n-1}` from seeds
//! `(w0, w1)`. The companion pair `u_n` (seeds 0, 1) and `v_n` (seeds 2, A)
//! covers the classical specializations: `u_n(1,-1)` are the Fibonacci
//! numbers, `v_n(1,-1)` the Lucas numbers, `u_n(2,1) = n`, and
//! `u_n(q+1,q)` is the q-analogue `[n]_q`.
//!
//! Everything is computed by forward iteration: O(n) ring operations, no
//! closed forms, no matrix powers.

use thiserror::Error;

use crate::ring::Ring;

/// Hard cap on generated prefix length.
pub const MAX_PREFIX_LEN: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("requested prefix of {0} values exceeds the cap of {MAX_PREFIX_LEN}")]
    PrefixTooLong(usize),
}

/// Parameters `(A, B, w0, w1)` of `w_{n+1} = A*w_n - B*w_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceParams<R: Ring> {
    pub a: R,
    pub b: R,
    pub w0: R,
    pub w1: R,
}

impl<R: Ring> RecurrenceParams<R> {
    pub fn new(a: R, b: R, w0: R, w1: R) -> Self {
        RecurrenceParams { a, b, w0, w1 }
    }

    /// Parameters of the Lucas sequence `u`: seeds (0, 1).
    pub fn lucas_u(a: R, b: R) -> Self {
        RecurrenceParams::new(a.clone(), b, R::zero(), R::one())
    }

    /// Parameters of the companion sequence `v`: seeds (2, A).
    pub fn lucas_v(a: R, b: R) -> Self {
        RecurrenceParams::new(a.clone(), b, R::from_i64(2), a)
    }
}

/// The values `w_0 ... w_N` of a recurrence, together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePrefix<R: Ring> {
    pub params: RecurrenceParams<R>,
    pub values: Vec<R>,
}

impl<R: Ring> SequencePrefix<R> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Checks `w_{k+1} = A*w_k - B*w_{k-1}` across the stored values.
    pub fn satisfies_recurrence(&self) -> bool {
        self.values
            .windows(3)
            .all(|w| w[2] == self.params.a.mul(&w[1]).sub(&self.params.b.mul(&w[0])))
    }
}

/// Generate `w_0 ... w_N` by forward iteration.
pub fn gen_prefix<R: Ring>(
    params: &RecurrenceParams<R>,
    last: usize,
) -> Result<SequencePrefix<R>, SequenceError> {
    if last >= MAX_PREFIX_LEN {
        return Err(SequenceError::PrefixTooLong(last + 1));
    }
    let mut values = Vec::with_capacity(last + 1);
    values.push(params.w0.clone());
    if last >= 1 {
        values.push(params.w1.clone());
    }
    for k in 2..=last {
        let next = params
            .a
            .mul(&values[k - 1])
            .sub(&params.b.mul(&values[k - 2]));
        values.push(next);
    }
    Ok(SequencePrefix {
        params: params.clone(),
        values,
    })
}

/// `u_n(A, B)` with `u_0 = 0`, `u_1 = 1`.
pub fn lucas_u<R: Ring>(n: usize, a: &R, b: &R) -> R {
    let (mut prev, mut cur) = (R::zero(), R::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = a.mul(&cur).sub(&b.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `v_n(A, B)` with `v_0 = 2`, `v_1 = A`.
pub fn lucas_v<R: Ring>(n: usize, a: &R, b: &R) -> R {
    let (mut prev, mut cur) = (R::from_i64(2), a.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = a.mul(&cur).sub(&b.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// The index-addition formula `w_{j+k} = w_{j+1}*u_k - B*w_j*u_{k-1}`.
///
/// Requires `k >= 1`; the result equals the directly iterated `w_{j+k}`.
pub fn addition_formula<R: Ring>(params: &RecurrenceParams<R>, j: usize, k: usize) -> R {
    assert!(k >= 1, "addition formula requires k >= 1");
    let prefix = gen_prefix(params, j + 1).expect("j within prefix cap");
    let uk = lucas_u(k, &params.a, &params.b);
    let uk1 = lucas_u(k - 1, &params.a, &params.b);
    prefix.values[j + 1]
        .mul(&uk)
        .sub(&params.b.mul(&prefix.values[j]).mul(&uk1))
}

/// Legendre symbol `(n/3)`: 0, 1, -1 for n congruent to 0, 1, 2 mod 3.
pub fn legendre3(n: i64) -> i64 {
    match n.rem_euclid(3) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}
