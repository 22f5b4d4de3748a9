//! Dense square matrices over a ring, the structured-family builders, and
//! exact determinant / characteristic-polynomial computation.
//!
//! Determinants use single-step fraction-free elimination: every division
//! is by the previous pivot and is exact over an integral domain, so the
//! whole computation stays inside the entry ring. An O(n!) cofactor
//! expansion is kept alongside as an independent cross-check oracle for
//! small dimensions.
//!
//! Builders follow the 1-based row/column convention of the identities they
//! serve and shift to 0-based storage internally; `|j-k|` is shift
//! invariant, `j+k` and `|j-k+1|` are not, so each builder fixes its offset
//! explicitly.

use thiserror::Error;

use crate::poly::{MultiPoly, PolyLift, Var};
use crate::ring::{ArithError, Integer, Ring};
use crate::sequences::SequencePrefix;
use crate::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("prefix too short: need {needed} values, have {have}")]
    PrefixTooShort { needed: usize, have: usize },
    #[error("cofactor expansion guarded to n <= {limit}, got {n}")]
    DimensionGuard { n: usize, limit: usize },
    #[error("matrix entries already involve the variable x")]
    VariableCollision,
    #[error("entry {0} is outside the entrywise map's domain")]
    EntryOutOfDomain(String),
    #[error("characteristic polynomial came out non-monic (algorithm bug)")]
    NotMonic,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Largest dimension accepted by the cofactor oracle.
pub const COFACTOR_LIMIT: usize = 8;

/// Row-major square matrix of ring elements with a construction tag
/// recording which builder produced it.
#[derive(Debug, Clone)]
pub struct DenseMatrix<R: Ring> {
    n: usize,
    entries: Vec<R>,
    tag: String,
}

/// Equality ignores the provenance tag.
impl<R: Ring> PartialEq for DenseMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl<R: Ring> Eq for DenseMatrix<R> {}

impl<R: Ring> DenseMatrix<R> {
    pub fn new(n: usize, entries: Vec<R>, tag: impl Into<String>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        Ok(DenseMatrix {
            n,
            entries,
            tag: tag.into(),
        })
    }

    pub fn from_fn(
        n: usize,
        tag: impl Into<String>,
        mut f: impl FnMut(usize, usize) -> R,
    ) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(f(j, k));
            }
        }
        DenseMatrix::new(n, entries, tag)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn at(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.n + col]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|j| (0..j).all(|k| self.at(j, k) == self.at(k, j)))
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.n, self.tag.clone(), |j, k| self.at(k, j).clone())
            .expect("dimension preserved")
    }

    /// Submatrix on the given row and column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self, MatrixError> {
        assert_eq!(rows.len(), cols.len(), "submatrix must be square");
        DenseMatrix::from_fn(rows.len(), format!("{}[minor]", self.tag), |j, k| {
            self.at(rows[j], cols[k]).clone()
        })
    }

    /// Text dump: first line `n`, then `n` tab-separated rows of canonical
    /// renderings.
    pub fn dump(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for j in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|k| self.at(j, k).to_string()).collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Exact determinant by fraction-free elimination.
    ///
    /// Pivots by the first nonzero entry in each column with row-swap sign
    /// tracking; a fully zero column short-circuits to zero. Uses only ring
    /// operations and exact division, so a division failure here signals a
    /// bug, never a data error.
    pub fn det(&self) -> Result<R, MatrixError> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut negated = false;
        let mut prev = R::one();
        for k in 0..n.saturating_sub(1) {
            let pivot_row = match (k..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => r,
                None => return Ok(R::zero()),
            };
            if pivot_row != k {
                for col in 0..n {
                    a.swap(pivot_row * n + col, k * n + col);
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i * n + j]
                        .mul(&a[k * n + k])
                        .sub(&a[i * n + k].mul(&a[k * n + j]));
                    a[i * n + j] = num.exact_div(&prev)?;
                }
                a[i * n + k] = R::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        Ok(if negated { d.neg() } else { d })
    }

    /// Independent O(n!) determinant oracle for cross-checking `det`.
    pub fn det_cofactor(&self) -> Result<R, MatrixError> {
        if self.n > COFACTOR_LIMIT {
            return Err(MatrixError::DimensionGuard {
                n: self.n,
                limit: COFACTOR_LIMIT,
            });
        }
        fn expand<R: Ring>(rows: &[usize], cols: &[usize], m: &DenseMatrix<R>) -> R {
            if rows.len() == 1 {
                return m.at(rows[0], cols[0]).clone();
            }
            let mut acc = R::zero();
            let sub_rows = &rows[1..];
            for (idx, &c) in cols.iter().enumerate() {
                let entry = m.at(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
                let minor = expand(sub_rows, &sub_cols, m);
                let signed = if idx % 2 == 0 {
                    entry.mul(&minor)
                } else {
                    entry.mul(&minor).neg()
                };
                acc = acc.add(&signed);
            }
            acc
        }
        let idx: Vec<usize> = (0..self.n).collect();
        Ok(expand(&idx, &idx, self))
    }
}

impl<R: PolyLift> DenseMatrix<R> {
    /// Lift entries into the polynomial ring and form `x*I - M`.
    ///
    /// Fails if an entry already involves `x`.
    pub fn char_matrix(&self) -> Result<DenseMatrix<MultiPoly>, MatrixError> {
        let x = MultiPoly::var(Var::X);
        let mut entries = Vec::with_capacity(self.n * self.n);
        for j in 0..self.n {
            for k in 0..self.n {
                let lifted = self.at(j, k).lift();
                if lifted.uses_var(Var::X) {
                    return Err(MatrixError::VariableCollision);
                }
                let e = if j == k { x.sub(&lifted) } else { lifted.neg() };
                entries.push(e);
            }
        }
        DenseMatrix::new(self.n, entries, format!("charmat({})", self.tag))
    }

    /// Monic characteristic polynomial `det(x*I - M)`, computed over the
    /// entry ring extended by `x`.
    pub fn char_poly(&self) -> Result<UniPoly<R>, MatrixError> {
        let d = self.char_matrix()?.det()?;
        collect_unipoly(&d, self.n)
    }
}

/// Regroup a polynomial by powers of `x` into a monic `UniPoly` of the
/// expected degree, lowering each coefficient back into `R`.
pub fn collect_unipoly<R: PolyLift>(
    p: &MultiPoly,
    degree: usize,
) -> Result<UniPoly<R>, MatrixError> {
    let x = MultiPoly::var(Var::X);
    let mut coeffs = Vec::with_capacity(degree + 1);
    let mut rest = p.clone();
    for k in 0..=degree {
        // coefficient of x^k: substitute nothing, just split terms
        let mut ck = MultiPoly::zero();
        for (mono, c) in rest.terms() {
            if mono.exp(Var::X) == k as u32 {
                let reduced = MultiPoly::constant(c.clone()).mul(&strip_x(mono));
                ck = ck.add(&reduced);
            }
        }
        rest = rest.sub(&ck.mul(&x.pow(k as u32)));
        let lowered = R::lower(&ck).ok_or(MatrixError::VariableCollision)?;
        coeffs.push(lowered);
    }
    if !rest.is_zero() {
        return Err(MatrixError::NotMonic);
    }
    let up = UniPoly::from_coeffs(coeffs);
    if up.degree() != Some(degree) || !up.is_monic() {
        return Err(MatrixError::NotMonic);
    }
    Ok(up)
}

fn strip_x(mono: &crate::poly::Mono) -> MultiPoly {
    let mut p = MultiPoly::one();
    for v in Var::ALL {
        if v != Var::X {
            let e = mono.exp(v);
            if e > 0 {
                p = p.mul(&MultiPoly::var(v).pow(e));
            }
        }
    }
    p
}

/// `entries[j][k] = w_{|j-k|}`; needs `w_0 ... w_{n-1}`.
pub fn build_abs_diff<R: Ring>(
    prefix: &SequencePrefix<R>,
    n: usize,
) -> Result<DenseMatrix<R>, MatrixError> {
    if prefix.len() < n {
        return Err(MatrixError::PrefixTooShort {
            needed: n,
            have: prefix.len(),
        });
    }
    DenseMatrix::from_fn(n, format!("absdiff(n={n})"), |j, k| {
        prefix.values[j.abs_diff(k)].clone()
    })
}

/// `entries[j][k] = w_{|j-k+1|}` in 1-based indices; needs `w_0 ... w_n`.
pub fn build_shifted<R: Ring>(
    prefix: &SequencePrefix<R>,
    n: usize,
) -> Result<DenseMatrix<R>, MatrixError> {
    if prefix.len() < n + 1 {
        return Err(MatrixError::PrefixTooShort {
            needed: n + 1,
            have: prefix.len(),
        });
    }
    DenseMatrix::from_fn(n, format!("shifted(n={n})"), |j, k| {
        // 1-based |j - k + 1| at (j+1, k+1)
        let idx = (j as i64 - k as i64 + 1).unsigned_abs() as usize;
        prefix.values[idx].clone()
    })
}

/// `entries[j][k] = w_{j+k}` with indices starting at `base` (0 or 1);
/// needs `w_0 ... w_{2n-2+2*base}`.
pub fn build_hankel<R: Ring>(
    prefix: &SequencePrefix<R>,
    n: usize,
    base: usize,
) -> Result<DenseMatrix<R>, MatrixError> {
    assert!(base <= 1, "hankel base is 0 or 1");
    let needed = 2 * n - 1 + 2 * base;
    if prefix.len() < needed {
        return Err(MatrixError::PrefixTooShort {
            needed,
            have: prefix.len(),
        });
    }
    DenseMatrix::from_fn(n, format!("hankel(base={base},n={n})"), |j, k| {
        prefix.values[j + k + 2 * base].clone()
    })
}

/// Add `c` to each diagonal entry.
pub fn add_diag<R: Ring>(m: &DenseMatrix<R>, c: &R) -> DenseMatrix<R> {
    DenseMatrix::from_fn(m.dim(), format!("{}+diag", m.tag()), |j, k| {
        if j == k {
            m.at(j, k).add(c)
        } else {
            m.at(j, k).clone()
        }
    })
    .expect("dimension preserved")
}

/// `entries[j][k] = q^{|j-k|} + t`.
pub fn build_q_matrix<R: Ring>(q: &R, t: &R, n: usize) -> Result<DenseMatrix<R>, MatrixError> {
    DenseMatrix::from_fn(n, format!("qmat(n={n})"), |j, k| {
        q.pow(j.abs_diff(k) as u32).add(t)
    })
}

/// `entries[j][k] = q^{|j-k|} - q^j - q^k + 1` in 1-based indices.
pub fn build_q_jk_matrix<R: Ring>(q: &R, n: usize) -> Result<DenseMatrix<R>, MatrixError> {
    DenseMatrix::from_fn(n, format!("qjk(n={n})"), |j, k| {
        q.pow(j.abs_diff(k) as u32)
            .sub(&q.pow(j as u32 + 1))
            .sub(&q.pow(k as u32 + 1))
            .add(&R::one())
    })
}

/// Entrywise image of a small non-negative integer matrix.
pub fn map_entries<R: Ring>(
    m: &DenseMatrix<Integer>,
    tag: impl Into<String>,
    f: impl Fn(usize) -> Option<R>,
) -> Result<DenseMatrix<R>, MatrixError> {
    use num_traits::ToPrimitive;
    let n = m.dim();
    let mut entries = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let raw = m.at(j, k);
            let idx = raw
                .to_usize()
                .ok_or_else(|| MatrixError::EntryOutOfDomain(raw.to_string()))?;
            let image = f(idx).ok_or_else(|| MatrixError::EntryOutOfDomain(raw.to_string()))?;
            entries.push(image);
        }
    }
    DenseMatrix::new(n, entries, tag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::ring::neg_one_pow;
    use crate::sequences::{gen_prefix, RecurrenceParams};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    fn int_matrix(rows: &[&[i64]]) -> DenseMatrix<Integer> {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| int(v)))
            .collect();
        DenseMatrix::new(n, entries, "test").unwrap()
    }

    fn nat_prefix(len: usize) -> SequencePrefix<Integer> {
        gen_prefix(
            &RecurrenceParams::new(int(2), int(1), int(0), int(1)),
            len.saturating_sub(1),
        )
        .unwrap()
    }

    fn fib_prefix(len: usize) -> SequencePrefix<Integer> {
        gen_prefix(
            &RecurrenceParams::new(int(1), int(-1), int(0), int(1)),
            len.saturating_sub(1),
        )
        .unwrap()
    }

    #[test]
    fn abs_diff_builder() {
        let m = build_abs_diff(&nat_prefix(3), 3).unwrap();
        assert_eq!(m, int_matrix(&[&[0, 1, 2], &[1, 0, 1], &[2, 1, 0]]));
        assert!(m.is_symmetric());

        let one = build_abs_diff(&nat_prefix(1), 1).unwrap();
        assert_eq!(one.at(0, 0), &int(0));

        let fib = build_abs_diff(&fib_prefix(3), 3).unwrap();
        assert_eq!(fib, int_matrix(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]));

        assert!(matches!(
            build_abs_diff(&nat_prefix(2), 3),
            Err(MatrixError::PrefixTooShort { .. })
        ));
    }

    #[test]
    fn shifted_builder() {
        // n = 2 is [[w1, w0], [w2, w1]]
        let fib = build_shifted(&fib_prefix(3), 2).unwrap();
        assert_eq!(fib, int_matrix(&[&[1, 0], &[1, 1]]));

        let one = build_shifted(&fib_prefix(2), 1).unwrap();
        assert_eq!(one.at(0, 0), &int(1));
    }

    #[test]
    fn hankel_builder() {
        let m0 = build_hankel(&fib_prefix(3), 2, 0).unwrap();
        assert_eq!(m0, int_matrix(&[&[0, 1], &[1, 1]]));
        assert!(m0.is_symmetric());

        let m1 = build_hankel(&fib_prefix(5), 2, 1).unwrap();
        assert_eq!(m1, int_matrix(&[&[1, 2], &[2, 3]]));

        let single = build_hankel(&fib_prefix(1), 1, 0).unwrap();
        assert_eq!(single.at(0, 0), &int(0));
    }

    #[test]
    fn add_diag_examples() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(add_diag(&m, &int(1)), int_matrix(&[&[1, 1], &[1, 1]]));

        let x = MultiPoly::var(Var::X);
        let mp = DenseMatrix::new(1, vec![MultiPoly::one()], "t").unwrap();
        let shifted = add_diag(&mp, &x);
        assert_eq!(shifted.at(0, 0), &MultiPoly::one().add(&x));

        // Fibonacci Hankel base 1, n = 2, +diag(1)
        let h = build_hankel(&fib_prefix(5), 2, 1).unwrap();
        assert_eq!(add_diag(&h, &int(1)), int_matrix(&[&[2, 2], &[2, 4]]));
    }

    #[test]
    fn q_matrix_builders() {
        let q = MultiPoly::var(Var::Q);
        let m = build_q_matrix(&q, &MultiPoly::zero(), 2).unwrap();
        assert_eq!(m.at(0, 0), &MultiPoly::one());
        assert_eq!(m.at(0, 1), &q);
        assert!(m.is_symmetric());

        let m2 = build_q_matrix(&int(2), &int(-1), 2).unwrap();
        assert_eq!(m2, int_matrix(&[&[0, 1], &[1, 0]]));

        let t = MultiPoly::var(Var::T);
        let m3 = build_q_matrix(&q, &t, 1).unwrap();
        assert_eq!(m3.at(0, 0), &MultiPoly::one().add(&t));

        // qjk: n = 1 entry is 2 - 2q
        let jk = build_q_jk_matrix(&q, 1).unwrap();
        assert_eq!(
            jk.at(0, 0),
            &MultiPoly::from_i64(2).sub(&MultiPoly::from_i64(2).mul(&q))
        );
        // diagonal (2,2) at q = 3 is -16
        let jk3 = build_q_jk_matrix(&int(3), 2).unwrap();
        assert_eq!(jk3.at(1, 1), &int(-16));
        // symmetry: entry (1,2) = entry (2,1) = 1 - q^2
        let jk2 = build_q_jk_matrix(&q, 2).unwrap();
        assert_eq!(jk2.at(0, 1), jk2.at(1, 0));
        assert_eq!(jk2.at(0, 1), &MultiPoly::one().sub(&q.pow(2)));
    }

    #[test]
    fn det_examples() {
        let m = int_matrix(&[&[0, 1, 2], &[1, 0, 1], &[2, 1, 0]]);
        assert_eq!(m.det().unwrap(), int(4));

        let w0 = MultiPoly::var(Var::W0);
        let single = DenseMatrix::new(1, vec![w0.clone()], "t").unwrap();
        assert_eq!(single.det().unwrap(), w0);

        let m2 = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(m2.det().unwrap(), int(-1));

        // zero column short-circuit and row-swap sign tracking
        let z = int_matrix(&[&[0, 1], &[0, 2]]);
        assert_eq!(z.det().unwrap(), int(0));
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.det_cofactor().unwrap(), int(-1));
    }

    #[test]
    fn det_cofactor_examples() {
        let a = MultiPoly::var(Var::A);
        let single = DenseMatrix::new(1, vec![a.clone()], "t").unwrap();
        assert_eq!(single.det_cofactor().unwrap(), a);

        let m = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det_cofactor().unwrap(), int(-2));

        let big = build_abs_diff(&nat_prefix(9), 9).unwrap();
        assert!(matches!(
            big.det_cofactor(),
            Err(MatrixError::DimensionGuard { .. })
        ));
    }

    #[test]
    fn det_agrees_with_cofactor_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let n = rng.gen_range(1..=4usize);
            let m = DenseMatrix::from_fn(n, "rand", |_, _| int(rng.gen_range(-9i64..=9))).unwrap();
            assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
        }
    }

    #[test]
    fn det_transpose_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..100 {
            let n = rng.gen_range(1..=6usize);
            let m = DenseMatrix::from_fn(n, "rand", |_, _| int(rng.gen_range(-9i64..=9))).unwrap();
            assert_eq!(m.det().unwrap(), m.transpose().det().unwrap());
        }
    }

    #[test]
    fn char_poly_examples() {
        // Fibonacci Hankel n = 2, base 0: x^2 - x - 1
        let m = build_hankel(&fib_prefix(3), 2, 0).unwrap();
        let cp = m.char_poly().unwrap();
        assert_eq!(cp.to_string(), "x^2 - x - 1");

        let c = DenseMatrix::new(1, vec![int(7)], "t").unwrap();
        assert_eq!(c.char_poly().unwrap().to_string(), "x - 7");

        let zero = int_matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(zero.char_poly().unwrap().to_string(), "x^2");

        // entries already using x are rejected
        let x = MultiPoly::var(Var::X);
        let bad = DenseMatrix::new(1, vec![x], "t").unwrap();
        assert!(matches!(
            bad.char_poly(),
            Err(MatrixError::VariableCollision)
        ));
    }

    #[test]
    fn char_poly_at_zero_is_signed_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5usize);
            let m = DenseMatrix::from_fn(n, "rand", |_, _| int(rng.gen_range(-9i64..=9))).unwrap();
            let cp = m.char_poly().unwrap();
            let expect = neg_one_pow::<Integer>(n).mul(&m.det().unwrap());
            assert_eq!(cp.coeff(0), expect);
        }
    }

    #[test]
    fn hankel_three_by_three_minors_vanish() {
        // rank of [w_{j+k}] is at most 2 for any recurrent w
        let sym = RecurrenceParams::new(
            MultiPoly::var(Var::A),
            MultiPoly::var(Var::B),
            MultiPoly::var(Var::W0),
            MultiPoly::var(Var::W1),
        );
        for base in 0..=1usize {
            let prefix = gen_prefix(&sym, 6 + 2 * base).unwrap();
            let h = build_hankel(&prefix, 4, base).unwrap();
            let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
            for rows in &triples {
                for cols in &triples {
                    let minor = h.submatrix(rows, cols).unwrap();
                    assert_eq!(minor.det().unwrap(), MultiPoly::zero());
                }
            }
        }
    }

    #[test]
    fn map_entries_examples() {
        let path = crate::tree::Tree::path(2);
        let d = path.distance_matrix();
        let q = MultiPoly::var(Var::Q);
        let m = map_entries(&d, "qpow", |k| Some(q.pow(k as u32))).unwrap();
        assert_eq!(m.at(0, 0), &MultiPoly::one());
        assert_eq!(m.at(0, 1), &q);

        let out = map_entries(&d, "strict", |k| if k == 0 { Some(int(1)) } else { None });
        assert!(matches!(out, Err(MatrixError::EntryOutOfDomain(_))));
    }

    #[test]
    fn map_entries_displayed_matrices() {
        use crate::sequences::lucas_u;
        // star distances sent through d -> u_d(A, B):
        // rows (0,1,A,A), (1,0,1,1), (A,1,0,A), (A,1,A,0)
        let a = MultiPoly::var(Var::A);
        let b = MultiPoly::var(Var::B);
        let d = crate::tree::Tree::star_k13().distance_matrix();
        let m = map_entries(&d, "star_u", |k| Some(lucas_u(k, &a, &b))).unwrap();
        let one = MultiPoly::one();
        let zero = MultiPoly::zero();
        let expect = [
            [&zero, &one, &a, &a],
            [&one, &zero, &one, &one],
            [&a, &one, &zero, &a],
            [&a, &one, &a, &zero],
        ];
        for (j, row) in expect.iter().enumerate() {
            for (k, cell) in row.iter().enumerate() {
                assert_eq!(m.at(j, k), *cell);
            }
        }

        // path distances sent through d -> [d]_q:
        // [[0, 1, 1+q], [1, 0, 1], [1+q, 1, 0]]
        let q = MultiPoly::var(Var::Q);
        let d3 = crate::tree::Tree::path(3).distance_matrix();
        let br = map_entries(&d3, "path_bracket", |k| {
            let mut acc = MultiPoly::zero();
            for e in 0..k {
                acc = acc.add(&q.pow(e as u32));
            }
            Some(acc)
        })
        .unwrap();
        assert_eq!(br.at(0, 2), &one.add(&q));
        assert_eq!(br.at(0, 1), &one);
        assert_eq!(br.at(1, 1), &zero);
        assert!(br.is_symmetric());
    }

    #[test]
    fn dump_format() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.dump(), "2\n0\t1\n1\t0\n");
    }
}
