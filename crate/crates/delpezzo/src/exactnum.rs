//! Exact rational arithmetic and small dense exact linear algebra.
//!
//! All values are `num::BigRational`: numerator and denominator are
//! arbitrary-precision integers kept coprime with a positive denominator,
//! so every operation is exact. No floating point appears anywhere in
//! this crate.
//!
//! The linear algebra is deliberately small and dense: fraction-free
//! (Bareiss) elimination for ranks, rational Gauss-Jordan for solving.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// `n` as an exact rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| ExactError::ParseRational(s.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("matrix dimensions mismatch: {0}")]
    Dimensions(String),
    #[error("not a rational number: {0:?}")]
    ParseRational(String),
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Dimensions("ragged rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != other.cols {
            return Err(ExactError::Dimensions("vstack column mismatch".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.rows != other.rows {
            return Err(ExactError::Dimensions("hstack row mismatch".into()));
        }
        let mut m = RatMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(m)
    }

    pub fn matvec(&self, v: &[Rat]) -> Result<Vec<Rat>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::Dimensions("matvec length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    ///
    /// Rows are first scaled to integers; the elimination then divides
    /// exactly by the previous pivot, which bounds intermediate growth.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut col = 0;
        while rank < rows && col < cols {
            let pivot_row = (rank..rows).find(|&i| !m[i][col].is_zero());
            let Some(p) = pivot_row else {
                col += 1;
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for i in rank + 1..rows {
                for j in col + 1..cols {
                    let t = &pivot * &m[i][j] - &m[i][col] * &m[rank][j];
                    m[i][j] = t / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
            col += 1;
        }
        rank
    }

    /// Reduced row echelon form together with the pivot columns.
    fn rref(mut self) -> (RatMatrix, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].clone();
            for j in c..cols {
                let v = self[(r, j)].clone() / &inv;
                self[(r, j)] = v;
            }
            for i in 0..rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..cols {
                        let v = self[(i, j)].clone() - &factor * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (self, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.clone().rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` over the rationals.
    pub fn solve(&self, b: &[Rat]) -> Result<RatSolve, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::Dimensions("rhs length mismatch".into()));
        }
        let rhs = RatMatrix::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&rhs)?;
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(RatSolve::Inconsistent);
        }
        let mut particular = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = rref[(r, self.cols)].clone();
        }
        if pivots.len() == self.cols {
            Ok(RatSolve::Unique(particular))
        } else {
            Ok(RatSolve::Parametrized {
                particular,
                nullspace: self.kernel_basis(),
            })
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    row.iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect()
}

/// Outcome of exact rational solving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatSolve {
    Inconsistent,
    Unique(Vec<Rat>),
    Parametrized {
        particular: Vec<Rat>,
        nullspace: Vec<Vec<Rat>>,
    },
}

/// Integer solutions of `a * x = b`.
///
/// Over the rationals the solution set of a linear system is an affine
/// subspace, so it is finite exactly when it is empty or a single point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolutions {
    /// All integer solutions (possibly none; an inconsistent system also
    /// lands here with an empty list).
    Finite(Vec<Vec<BigInt>>),
    /// Infinitely many rational solutions: a particular solution plus a
    /// basis of the homogeneous solution space.
    Underdetermined {
        particular: Vec<Rat>,
        nullspace: Vec<Vec<Rat>>,
    },
}

/// All integer solutions of `a * x = b` when the rational solution set is
/// finite, or an underdetermined parametrization otherwise.
pub fn solve_linear_integer(a: &RatMatrix, b: &[Rat]) -> Result<LinearSolutions, ExactError> {
    match a.solve(b)? {
        RatSolve::Inconsistent => Ok(LinearSolutions::Finite(Vec::new())),
        RatSolve::Unique(x) => {
            let ints: Option<Vec<BigInt>> = x
                .iter()
                .map(|r| r.is_integer().then(|| r.to_integer()))
                .collect();
            Ok(LinearSolutions::Finite(ints.map_or_else(Vec::new, |v| vec![v])))
        }
        RatSolve::Parametrized {
            particular,
            nullspace,
        } => Ok(LinearSolutions::Underdetermined {
            particular,
            nullspace,
        }),
    }
}

/// Homogeneous binary form in `v0, v1` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `v0^(d-i) * v1^i` where
/// `d = coeffs.len() - 1`. The zero form of degree `d` keeps its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    /// The quadratic `a*v0^2 + b*v0*v1 + c*v1^2`.
    pub fn quadratic(a: Rat, b: Rat, c: Rat) -> Self {
        BinaryForm { coeffs: vec![a, b, c] }
    }

    pub fn quadratic_int(a: i64, b: i64, c: i64) -> Self {
        Self::quadratic(rat(a), rat(b), rat(c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, v0: &Rat, v1: &Rat) -> Rat {
        let d = self.degree();
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut term = c.clone();
            for _ in 0..d - i {
                term *= v0;
            }
            for _ in 0..i {
                term *= v1;
            }
            acc += term;
        }
        acc
    }

    /// Multiplicity of `v1` in the form: index of the first nonzero
    /// coefficient. Undefined (returns degree+1) on the zero form.
    fn v1_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// Strips the `v1^k` factor and dehomogenizes the cofactor at `v1 = 1`,
    /// returning `(k, p)` with `p` in descending powers of `t = v0/v1` and
    /// a nonzero leading coefficient.
    fn split(&self) -> (usize, UniPoly) {
        let k = self.v1_multiplicity();
        (k, UniPoly::new(self.coeffs[k..].to_vec()))
    }

    /// Assembles `v1^k * hom(p)`.
    fn from_split(k: usize, p: &UniPoly) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(p.coeffs.clone());
        BinaryForm { coeffs }
    }
}

/// Dense univariate polynomial, descending powers, nonzero leading
/// coefficient unless zero (empty).
#[derive(Debug, Clone, PartialEq, Eq)]
struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.first().is_some_and(Rat::is_zero) {
            coeffs.remove(0);
        }
        UniPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn monic(mut self) -> Self {
        if let Some(lead) = self.coeffs.first().cloned() {
            for c in &mut self.coeffs {
                *c = c.clone() / &lead;
            }
        }
        self
    }

    fn rem(&self, div: &UniPoly) -> UniPoly {
        assert!(!div.is_zero());
        let mut r = self.coeffs.clone();
        while r.len() >= div.coeffs.len() && !r.is_empty() {
            if r[0].is_zero() {
                r.remove(0);
                continue;
            }
            let factor = r[0].clone() / &div.coeffs[0];
            for (i, c) in div.coeffs.iter().enumerate() {
                let v = r[i].clone() - &factor * c;
                r[i] = v;
            }
            r.remove(0);
        }
        UniPoly::new(r)
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Greatest common divisor of the nonzero forms, as a binary form.
///
/// Returns `None` when every form is zero (no constraint at all).
pub fn common_factor(forms: &[BinaryForm]) -> Option<BinaryForm> {
    let mut acc: Option<(usize, UniPoly)> = None;
    for f in forms.iter().filter(|f| !f.is_zero()) {
        let (k, p) = f.split();
        acc = Some(match acc {
            None => (k, p),
            Some((ka, pa)) => (ka.min(k), pa.gcd(&p)),
        });
    }
    acc.map(|(k, p)| BinaryForm::from_split(k, &p))
}

/// Do all the forms share a common projective root over the algebraic
/// closure?
///
/// Zero forms impose no condition; an empty or all-zero input is
/// vacuously `true`. Otherwise this holds exactly when the gcd of the
/// nonzero forms has positive degree, computed by iterated exact gcd of
/// binary forms.
pub fn common_projective_root_binary(forms: &[BinaryForm]) -> bool {
    match common_factor(forms) {
        None => true,
        Some(g) => g.degree() >= 1,
    }
}

/// Is the rational a square of a rational?
pub fn is_rational_square(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zero(2, 2).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // [[1,2],[2,4]] row-reduces to a single nonzero row.
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RatMatrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(3, 2), rat(1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    /// Independent oracle: rank by enumerating square minors.
    fn minor_rank(m: &RatMatrix) -> usize {
        fn det(m: &RatMatrix, rows: &[usize], cols: &[usize]) -> Rat {
            if rows.len() == 1 {
                return m[(rows[0], cols[0])].clone();
            }
            let mut acc = Rat::zero();
            for (i, &r) in rows.iter().enumerate() {
                let sub_rows: Vec<usize> =
                    rows.iter().copied().filter(|&x| x != r).collect();
                let d = det(m, &sub_rows, &cols[1..]);
                let term = m[(r, cols[0])].clone() * d;
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, k - 1) {
                    if rest.iter().all(|&x| x > first) {
                        rest.insert(0, first);
                        out.push(rest);
                    }
                }
            }
            out
        }
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rows in combos(m.rows(), k) {
                for cols in combos(m.cols(), k) {
                    if !det(m, &rows, &cols).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_agrees_with_minor_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let r = rng.gen_range(1..=3);
            let c = rng.gen_range(1..=3);
            let m = RatMatrix::from_fn(r, c, |_, _| rat(rng.gen_range(-3..=3)));
            assert_eq!(m.rank(), minor_rank(&m), "{m:?}");
        }
    }

    #[test]
    fn solve_multiplicity_system() {
        // 3a - 2b = -2, -2a + b = 1 has the unique solution (0, 1).
        let m = RatMatrix::from_int_rows(&[&[3, -2], &[-2, 1]]);
        let sols = solve_linear_integer(&m, &[rat(-2), rat(1)]).unwrap();
        assert_eq!(
            sols,
            LinearSolutions::Finite(vec![vec![BigInt::from(0), BigInt::from(1)]])
        );
    }

    #[test]
    fn solve_tautology_is_underdetermined() {
        // x = x, i.e. 0 * x = 0.
        let m = RatMatrix::from_int_rows(&[&[0]]);
        match solve_linear_integer(&m, &[rat(0)]).unwrap() {
            LinearSolutions::Underdetermined { nullspace, .. } => {
                assert_eq!(nullspace.len(), 1)
            }
            other => panic!("expected underdetermined, got {other:?}"),
        }
    }

    #[test]
    fn solve_symmetric_system() {
        let m = RatMatrix::from_int_rows(&[&[1, 1], &[1, -1]]);
        let sols = solve_linear_integer(&m, &[rat(2), rat(0)]).unwrap();
        assert_eq!(
            sols,
            LinearSolutions::Finite(vec![vec![BigInt::from(1), BigInt::from(1)]])
        );
    }

    #[test]
    fn solve_inconsistent_is_empty() {
        let m = RatMatrix::from_int_rows(&[&[1], &[1]]);
        let sols = solve_linear_integer(&m, &[rat(0), rat(1)]).unwrap();
        assert_eq!(sols, LinearSolutions::Finite(vec![]));
    }

    #[test]
    fn solve_non_integral_unique_yields_no_integer_solutions() {
        let m = RatMatrix::from_int_rows(&[&[2]]);
        let sols = solve_linear_integer(&m, &[rat(1)]).unwrap();
        assert_eq!(sols, LinearSolutions::Finite(vec![]));
    }

    #[test]
    fn common_root_examples() {
        // v0*v1 and v0^2 share the root [0:1].
        let f = BinaryForm::quadratic_int(0, 1, 0);
        let g = BinaryForm::quadratic_int(1, 0, 0);
        assert!(common_projective_root_binary(&[f, g]));
        // v0^2 and v1^2 have disjoint roots.
        let f = BinaryForm::quadratic_int(1, 0, 0);
        let g = BinaryForm::quadratic_int(0, 0, 1);
        assert!(!common_projective_root_binary(&[f, g]));
        // Vacuous inputs.
        assert!(common_projective_root_binary(&[]));
        assert!(common_projective_root_binary(&[BinaryForm::quadratic_int(
            0, 0, 0
        )]));
    }

    #[test]
    fn common_root_irrational() {
        // v0^2 - 2*v1^2 paired with itself: the shared root is irrational
        // but the gcd still detects it.
        let f = BinaryForm::quadratic_int(1, 0, -2);
        assert!(common_projective_root_binary(&[f.clone(), f.clone()]));
        // Against 2*v0^2 - 4*v1^2 (a scalar multiple) it persists.
        let g = BinaryForm::quadratic_int(2, 0, -4);
        assert!(common_projective_root_binary(&[f.clone(), g]));
        // Against v0^2 - 3*v1^2 it does not.
        let h = BinaryForm::quadratic_int(1, 0, -3);
        assert!(!common_projective_root_binary(&[f, h]));
    }

    /// Independent oracle for quadratics: enumerate the roots of the
    /// first nonzero form (rational roots directly, an irreducible
    /// quadratic by proportionality) and test them against the rest.
    fn root_oracle(forms: &[BinaryForm]) -> bool {
        let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
        let Some(first) = nonzero.first() else {
            return true;
        };
        let c = first.coeffs();
        // Candidate [1:0].
        if c[0].is_zero() && nonzero.iter().all(|f| f.coeffs()[0].is_zero()) {
            return true;
        }
        let eval_all = |t: &Rat| {
            nonzero
                .iter()
                .all(|f| f.eval(t, &Rat::one()).is_zero())
        };
        if c[0].is_zero() {
            if c[1].is_zero() {
                // first = c2 * v1^2: only root is [1:0], already checked.
                return false;
            }
            // b*v0*v1 + c*v1^2: finite root t = -c/b besides [1:0].
            return eval_all(&(-c[2].clone() / &c[1]));
        }
        let disc = c[1].clone() * &c[1] - rat(4) * &c[0] * &c[2];
        match is_rational_square(&disc) {
            Some(s) => {
                let two_a = rat(2) * &c[0];
                let r1 = (-c[1].clone() + &s) / &two_a;
                let r2 = (-c[1].clone() - &s) / &two_a;
                eval_all(&r1) || eval_all(&r2)
            }
            None => {
                // Irreducible over Q: every other quadratic must be a
                // rational multiple; lower-degree or v1-divisible forms
                // cannot share the irrational roots.
                nonzero.iter().all(|f| {
                    let d = f.coeffs();
                    !d[0].is_zero()
                        && (d[1].clone() * &c[0] - c[1].clone() * &d[0]).is_zero()
                        && (d[2].clone() * &c[0] - c[2].clone() * &d[0]).is_zero()
                })
            }
        }
    }

    #[test]
    fn gcd_route_matches_root_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let mut forms = Vec::new();
            for _ in 0..rng.gen_range(1..=3) {
                forms.push(BinaryForm::quadratic_int(
                    rng.gen_range(-2..=2),
                    rng.gen_range(-2..=2),
                    rng.gen_range(-2..=2),
                ));
            }
            // Also plant products sharing a linear factor.
            if rng.gen_bool(0.3) {
                let (p, q) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
                // (p*v0 + q*v1) * (v0 + v1) and (p*v0 + q*v1) * v0
                forms.push(BinaryForm::quadratic_int(p, p + q, q));
                forms.push(BinaryForm::quadratic_int(p, q, 0));
            }
            assert_eq!(
                common_projective_root_binary(&forms),
                root_oracle(&forms),
                "{forms:?}"
            );
        }
    }
}
