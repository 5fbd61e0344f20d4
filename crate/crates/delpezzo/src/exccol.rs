//! Numerical K-theory of the quintic del Pezzo threefold in the
//! exceptional basis `[O(-1)], [Q(-1)], [R], [O]`.
//!
//! The Gram matrix of the Euler form on this basis is upper-triangular
//! with unit diagonal. Left and right mutations act on classes as
//! `f -> f - chi(e, f) e` and `f -> f - chi(f, e) e`; the Serre operator
//! of the whole category is `f -> -(f * [O(-2)])` (the odd shift by 3
//! contributes the sign).
//!
//! Serre operators of admissible subcategories spanned by a contiguous
//! block of the basis are obtained by composing the ambient Serre
//! operator with right mutations over the complementary basis classes
//! (left mutations for the inverse). Shifts survive only as signs.

use crate::bundles::{chi_pair_characters, BundleClass, Catalog, ChernCharacter};
use crate::exactnum::{RatMatrix, RatSolve};
use std::ops::RangeInclusive;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KError {
    #[error("class is not exceptional: chi(e,e) = {0}")]
    NotExceptional(i64),
    #[error("class does not lie in the integer span of the exceptional basis: {0}")]
    NotInBasisSpan(String),
    #[error("class lies outside the span of the sub-collection")]
    OutsideSubSpan,
    #[error("unsupported sub-collection range")]
    UnsupportedRange,
    #[error(transparent)]
    Bundle(#[from] crate::bundles::BundleError),
}

/// Integer coordinates over `[O(-1)], [Q(-1)], [R], [O]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KClass {
    pub coeffs: [i64; 4],
}

impl KClass {
    pub fn new(coeffs: [i64; 4]) -> Self {
        KClass { coeffs }
    }

    pub fn zero() -> Self {
        KClass { coeffs: [0; 4] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 4]
    }

    pub fn scale(&self, k: i64) -> Self {
        KClass {
            coeffs: self.coeffs.map(|c| c * k),
        }
    }
}

impl std::ops::Add for KClass {
    type Output = KClass;
    fn add(self, other: KClass) -> KClass {
        KClass {
            coeffs: [
                self.coeffs[0] + other.coeffs[0],
                self.coeffs[1] + other.coeffs[1],
                self.coeffs[2] + other.coeffs[2],
                self.coeffs[3] + other.coeffs[3],
            ],
        }
    }
}

impl std::ops::Sub for KClass {
    type Output = KClass;
    fn sub(self, other: KClass) -> KClass {
        self + other.scale(-1)
    }
}

impl std::ops::Neg for KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        self.scale(-1)
    }
}

impl std::fmt::Display for KClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        const NAMES: [&str; 4] = ["[O(-1)]", "[Q(-1)]", "[R]", "[O]"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(NAMES) {
            if *c == 0 {
                continue;
            }
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if *c < 0 { "-" } else { "+" })?;
            }
            if c.abs() == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}{name}", c.abs())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `gram[i][j] = chi(E_i, E_j)` over the exceptional basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GramMatrix(pub [[i64; 4]; 4]);

impl GramMatrix {
    pub fn is_unitriangular(&self) -> bool {
        (0..4).all(|i| {
            self.0[i][i] == 1 && (0..i).all(|j| self.0[i][j] == 0)
        })
    }
}

/// The exceptional-basis K-theory context: basis Chern characters, the
/// Gram matrix, and the change-of-basis solver. Fixed to degree 5.
#[derive(Debug, Clone)]
pub struct KTheory {
    catalog: Catalog,
    basis: [BundleClass; 4],
    basis_ch: [ChernCharacter; 4],
    gram: GramMatrix,
}

impl KTheory {
    /// Standard context over the unfaulted catalog.
    pub fn new() -> Self {
        Self::with_catalog(&Catalog::dp5()).expect("standard catalog is consistent")
    }

    /// Context over a (possibly fault-injected) catalog. Fails when the
    /// Euler pairings of the catalog stop being integral.
    pub fn with_catalog(catalog: &Catalog) -> Result<Self, KError> {
        let basis = [catalog.o(-1), catalog.q_twist(-1), catalog.r(), catalog.o(0)];
        let basis_ch = basis.map(|b| b.chern_character());
        let mut gram = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let chi = chi_pair_characters(&basis_ch[i], &basis_ch[j])?;
                gram[i][j] = i64::try_from(chi).expect("small Euler pairing");
            }
        }
        Ok(KTheory {
            catalog: *catalog,
            basis,
            basis_ch,
            gram: GramMatrix(gram),
        })
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn basis(&self) -> &[BundleClass; 4] {
        &self.basis
    }

    pub fn basis_class(&self, i: usize) -> KClass {
        let mut coeffs = [0i64; 4];
        coeffs[i] = 1;
        KClass { coeffs }
    }

    pub fn gram(&self) -> GramMatrix {
        self.gram
    }

    /// Euler pairing extended bilinearly from the Gram matrix.
    pub fn euler(&self, a: &KClass, b: &KClass) -> i64 {
        let mut acc = 0;
        for i in 0..4 {
            for j in 0..4 {
                acc += a.coeffs[i] * b.coeffs[j] * self.gram.0[i][j];
            }
        }
        acc
    }

    /// Chern character of a K-class.
    pub fn character(&self, k: &KClass) -> ChernCharacter {
        let mut acc = self.basis_ch[0].scale(k.coeffs[0]);
        for i in 1..4 {
            acc = acc.add(&self.basis_ch[i].scale(k.coeffs[i]));
        }
        acc
    }

    /// Rank of the underlying class.
    pub fn rank(&self, k: &KClass) -> i64 {
        let ch0 = self.character(k);
        let r = ch0.ch(0);
        assert!(r.is_integer());
        i64::try_from(r.to_integer()).expect("small rank")
    }

    /// Coordinates of a bundle class in the exceptional basis.
    pub fn to_kclass(&self, b: &BundleClass) -> Result<KClass, KError> {
        self.to_kclass_character(&b.chern_character())
    }

    /// Coordinates of an arbitrary Chern character, demanded integral.
    pub fn to_kclass_character(&self, ch: &ChernCharacter) -> Result<KClass, KError> {
        let m = RatMatrix::from_fn(4, 4, |i, j| self.basis_ch[j].ch(i).clone());
        let rhs: Vec<_> = (0..4).map(|i| ch.ch(i).clone()).collect();
        let not_in_span = || KError::NotInBasisSpan(ch.to_string());
        match m.solve(&rhs).expect("square system") {
            RatSolve::Unique(x) => {
                let mut coeffs = [0i64; 4];
                for (slot, v) in coeffs.iter_mut().zip(&x) {
                    if !v.is_integer() {
                        return Err(not_in_span());
                    }
                    *slot = i64::try_from(v.to_integer())
                        .map_err(|_| not_in_span())?;
                }
                Ok(KClass { coeffs })
            }
            _ => Err(not_in_span()),
        }
    }

    /// Left mutation `f - chi(e, f) e` over an exceptional class.
    pub fn lmut(&self, e: &KClass, f: &KClass) -> Result<KClass, KError> {
        self.check_exceptional(e)?;
        Ok(*f - e.scale(self.euler(e, f)))
    }

    /// Right mutation `f - chi(f, e) e` over an exceptional class.
    pub fn rmut(&self, e: &KClass, f: &KClass) -> Result<KClass, KError> {
        self.check_exceptional(e)?;
        Ok(*f - e.scale(self.euler(f, e)))
    }

    fn check_exceptional(&self, e: &KClass) -> Result<(), KError> {
        let self_chi = self.euler(e, e);
        if self_chi == 1 {
            Ok(())
        } else {
            Err(KError::NotExceptional(self_chi))
        }
    }

    /// Serre operator of the ambient category: `-(f * [O(-2)])`.
    pub fn serre(&self, f: &KClass) -> Result<KClass, KError> {
        self.twist_negate(f, -2)
    }

    /// Inverse Serre operator: `-(f * [O(2)])`.
    pub fn serre_inverse(&self, f: &KClass) -> Result<KClass, KError> {
        self.twist_negate(f, 2)
    }

    fn twist_negate(&self, f: &KClass, n: i64) -> Result<KClass, KError> {
        let ch = self.character(f).twist(n).scale(-1);
        self.to_kclass_character(&ch)
    }

    /// Serre operator of the admissible subcategory spanned by the
    /// contiguous basis block `range`: right mutations over the right
    /// complement (nearest first), the ambient Serre operator, then
    /// right mutations over the left complement (leftmost first).
    pub fn serre_sub(&self, range: RangeInclusive<usize>, f: &KClass) -> Result<KClass, KError> {
        let (i, j) = self.check_range(&range, f)?;
        let mut g = *f;
        for k in j + 1..4 {
            g = self.rmut(&self.basis_class(k), &g)?;
        }
        g = self.serre(&g)?;
        for k in 0..i {
            g = self.rmut(&self.basis_class(k), &g)?;
        }
        Ok(g)
    }

    /// Inverse of [`Self::serre_sub`]: left mutations mirroring the
    /// forward composition.
    pub fn serre_sub_inverse(
        &self,
        range: RangeInclusive<usize>,
        f: &KClass,
    ) -> Result<KClass, KError> {
        let (i, j) = self.check_range(&range, f)?;
        let mut g = *f;
        for k in (0..i).rev() {
            g = self.lmut(&self.basis_class(k), &g)?;
        }
        g = self.serre_inverse(&g)?;
        for k in (j + 1..4).rev() {
            g = self.lmut(&self.basis_class(k), &g)?;
        }
        Ok(g)
    }

    fn check_range(
        &self,
        range: &RangeInclusive<usize>,
        f: &KClass,
    ) -> Result<(usize, usize), KError> {
        let (i, j) = (*range.start(), *range.end());
        if i > j || j > 3 || (i == 0 && j == 3) {
            return Err(KError::UnsupportedRange);
        }
        let inside = |k: usize| k >= i && k <= j;
        if (0..4).any(|k| !inside(k) && f.coeffs[k] != 0) {
            return Err(KError::OutsideSubSpan);
        }
        Ok((i, j))
    }
}

impl Default for KTheory {
    fn default() -> Self {
        Self::new()
    }
}

/// Indices of the sub-collection `<Q(-1), R>`.
pub const SUB_MIDDLE: RangeInclusive<usize> = 1..=2;
/// Indices of the sub-collection `<O(-1), Q(-1), R>`.
pub const SUB_FIRST_THREE: RangeInclusive<usize> = 0..=2;
