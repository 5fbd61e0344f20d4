//! Graded numerical intersection rings.
//!
//! Three ambient spaces appear: the cyclic Chow ring of a degree-`d` del
//! Pezzo threefold with basis `{1, H, L, P}` (hyperplane, line, point),
//! the Chow ring of the plane with basis `{1, h, p}`, and
//! projectivizations of rank-2 bundles over either base. On a
//! projectivization every class is kept in the Chern-Wu-reduced shape
//! `alpha + beta * xi` with base-ring coefficients, using
//! `xi^2 = c1 * h * xi - c2 * kappa` for the tautological class `xi`
//! (`kappa` the codimension-2 generator of the base).
//!
//! Integration pushes `xi` forward with `pi_*(xi) = 1` and reads the
//! point coefficient on the base.

use crate::exactnum::{rat, Rat};
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("degree {0} outside the del Pezzo range 1..=5")]
    DegreeOutOfRange(i64),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("polynomial is not homogeneous of degree {expected}: monomial xi^{xi} h^{h}")]
    NonHomogeneous { expected: u32, xi: u32, h: u32 },
}

/// Numerical Chow ring of a degree-`d` del Pezzo threefold.
///
/// Multiplication table: `H*H = d*L`, `H*L = P`, `L*L = 0`; everything of
/// total degree above three vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreefoldRing {
    degree: i64,
}

impl ThreefoldRing {
    pub fn new(degree: i64) -> Result<Self, ChowError> {
        if (1..=5).contains(&degree) {
            Ok(ThreefoldRing { degree })
        } else {
            Err(ChowError::DegreeOutOfRange(degree))
        }
    }

    /// The quintic del Pezzo threefold, the main stage.
    pub fn dp5() -> Self {
        ThreefoldRing { degree: 5 }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn zero(&self) -> ThreefoldClass {
        ThreefoldClass {
            ring: *self,
            c: [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn one(&self) -> ThreefoldClass {
        self.scalar(Rat::one())
    }

    pub fn scalar(&self, k: Rat) -> ThreefoldClass {
        let mut z = self.zero();
        z.c[0] = k;
        z
    }

    /// Hyperplane class `H`.
    pub fn h(&self) -> ThreefoldClass {
        let mut z = self.zero();
        z.c[1] = Rat::one();
        z
    }

    /// Line class `L`.
    pub fn l(&self) -> ThreefoldClass {
        let mut z = self.zero();
        z.c[2] = Rat::one();
        z
    }

    /// Point class `P`.
    pub fn p(&self) -> ThreefoldClass {
        let mut z = self.zero();
        z.c[3] = Rat::one();
        z
    }

    pub fn class(&self, c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> ThreefoldClass {
        ThreefoldClass {
            ring: *self,
            c: [c0, c1, c2, c3],
        }
    }
}

/// Element of a [`ThreefoldRing`] with rational coefficients of
/// `{1, H, L, P}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreefoldClass {
    ring: ThreefoldRing,
    c: [Rat; 4],
}

impl ThreefoldClass {
    pub fn ring(&self) -> ThreefoldRing {
        self.ring
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    /// Degree of the point component; the integral over the threefold.
    pub fn integrate(&self) -> Rat {
        self.c[3].clone()
    }

    pub fn scale(&self, k: &Rat) -> ThreefoldClass {
        ThreefoldClass {
            ring: self.ring,
            c: [
                &self.c[0] * k,
                &self.c[1] * k,
                &self.c[2] * k,
                &self.c[3] * k,
            ],
        }
    }

    fn assert_same_ring(&self, other: &ThreefoldClass) {
        assert_eq!(
            self.ring.degree, other.ring.degree,
            "threefold classes live in rings of different degree"
        );
    }
}

impl std::ops::Add for &ThreefoldClass {
    type Output = ThreefoldClass;
    fn add(self, other: &ThreefoldClass) -> ThreefoldClass {
        self.assert_same_ring(other);
        ThreefoldClass {
            ring: self.ring,
            c: [
                &self.c[0] + &other.c[0],
                &self.c[1] + &other.c[1],
                &self.c[2] + &other.c[2],
                &self.c[3] + &other.c[3],
            ],
        }
    }
}

impl std::ops::Sub for &ThreefoldClass {
    type Output = ThreefoldClass;
    fn sub(self, other: &ThreefoldClass) -> ThreefoldClass {
        self.assert_same_ring(other);
        ThreefoldClass {
            ring: self.ring,
            c: [
                &self.c[0] - &other.c[0],
                &self.c[1] - &other.c[1],
                &self.c[2] - &other.c[2],
                &self.c[3] - &other.c[3],
            ],
        }
    }
}

impl std::ops::Neg for &ThreefoldClass {
    type Output = ThreefoldClass;
    fn neg(self) -> ThreefoldClass {
        self.scale(&rat(-1))
    }
}

impl std::ops::Mul for &ThreefoldClass {
    type Output = ThreefoldClass;
    fn mul(self, other: &ThreefoldClass) -> ThreefoldClass {
        self.assert_same_ring(other);
        let d = rat(self.ring.degree);
        let (a, b) = (&self.c, &other.c);
        ThreefoldClass {
            ring: self.ring,
            c: [
                &a[0] * &b[0],
                &a[0] * &b[1] + &a[1] * &b[0],
                &a[0] * &b[2] + &a[2] * &b[0] + &d * &a[1] * &b[1],
                &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1],
            ],
        }
    }
}

impl std::fmt::Display for ThreefoldClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_graded(f, &self.c, &["1", "H", "L", "P"])
    }
}

/// Element of the Chow ring of the plane, coefficients of `{1, h, p}`
/// with `h*h = p` and degree above two vanishing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneClass {
    c: [Rat; 3],
}

impl PlaneClass {
    pub fn zero() -> Self {
        PlaneClass {
            c: [Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn one() -> Self {
        PlaneClass::scalar(Rat::one())
    }

    pub fn scalar(k: Rat) -> Self {
        let mut z = Self::zero();
        z.c[0] = k;
        z
    }

    /// Line class `h`.
    pub fn h() -> Self {
        let mut z = Self::zero();
        z.c[1] = Rat::one();
        z
    }

    /// Point class `p`.
    pub fn p() -> Self {
        let mut z = Self::zero();
        z.c[2] = Rat::one();
        z
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, k: &Rat) -> PlaneClass {
        PlaneClass {
            c: [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k],
        }
    }
}

impl std::ops::Add for &PlaneClass {
    type Output = PlaneClass;
    fn add(self, other: &PlaneClass) -> PlaneClass {
        PlaneClass {
            c: [
                &self.c[0] + &other.c[0],
                &self.c[1] + &other.c[1],
                &self.c[2] + &other.c[2],
            ],
        }
    }
}

impl std::ops::Sub for &PlaneClass {
    type Output = PlaneClass;
    fn sub(self, other: &PlaneClass) -> PlaneClass {
        PlaneClass {
            c: [
                &self.c[0] - &other.c[0],
                &self.c[1] - &other.c[1],
                &self.c[2] - &other.c[2],
            ],
        }
    }
}

impl std::ops::Mul for &PlaneClass {
    type Output = PlaneClass;
    fn mul(self, other: &PlaneClass) -> PlaneClass {
        let (a, b) = (&self.c, &other.c);
        PlaneClass {
            c: [
                &a[0] * &b[0],
                &a[0] * &b[1] + &a[1] * &b[0],
                &a[0] * &b[2] + &a[2] * &b[0] + &a[1] * &b[1],
            ],
        }
    }
}

impl std::fmt::Display for PlaneClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write_graded(f, &self.c, &["1", "h", "p"])
    }
}

fn write_graded(
    f: &mut std::fmt::Formatter<'_>,
    coeffs: &[Rat],
    names: &[&str],
) -> std::fmt::Result {
    let mut first = true;
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        if first {
            first = false;
        } else {
            write!(f, " + ")?;
        }
        if *name == "1" {
            write!(f, "{c}")?;
        } else if c.is_one() {
            write!(f, "{name}")?;
        } else {
            write!(f, "{c}*{name}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Base-ring interface shared by the two ambient spaces a rank-2 bundle
/// gets projectivized over.
pub trait ProjBase: Clone + PartialEq + std::fmt::Display {
    /// Do the two classes live in the same ring?
    fn same_ring(&self, other: &Self) -> bool;
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, k: &Rat) -> Self;
    /// Degree-1 generator (`H` or `h`) of the same ring.
    fn hyperplane(&self) -> Self;
    /// Degree-2 generator (`L` or `p`) of the same ring.
    fn codim2(&self) -> Self;
    /// Coefficient of the point class.
    fn top_coeff(&self) -> Rat;
    fn is_zero(&self) -> bool;
}

impl ProjBase for ThreefoldClass {
    fn same_ring(&self, other: &Self) -> bool {
        self.ring.degree == other.ring.degree
    }
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: &Rat) -> Self {
        ThreefoldClass::scale(self, k)
    }
    fn hyperplane(&self) -> Self {
        self.ring.h()
    }
    fn codim2(&self) -> Self {
        self.ring.l()
    }
    fn top_coeff(&self) -> Rat {
        self.c[3].clone()
    }
    fn is_zero(&self) -> bool {
        ThreefoldClass::is_zero(self)
    }
}

impl ProjBase for PlaneClass {
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
    fn zero_like(&self) -> Self {
        PlaneClass::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: &Rat) -> Self {
        PlaneClass::scale(self, k)
    }
    fn hyperplane(&self) -> Self {
        PlaneClass::h()
    }
    fn codim2(&self) -> Self {
        PlaneClass::p()
    }
    fn top_coeff(&self) -> Rat {
        self.c[2].clone()
    }
    fn is_zero(&self) -> bool {
        PlaneClass::is_zero(self)
    }
}

/// Projectivization `P(E) -> base` of a rank-2 bundle with
/// `c1(E) = c1 * h` and `c2(E) = c2 * kappa` on the base.
///
/// Only rank 2 is supported; the Chern-Wu relation is hard-coded as
/// `xi^2 = c1 * h * xi - c2 * kappa`, with the convention
/// `P(E) = Proj Sym E` and `pi_*(xi) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjBundleRing<B: ProjBase> {
    base_one: B,
    c1: i64,
    c2: i64,
}

impl ProjBundleRing<ThreefoldClass> {
    pub fn over_threefold(ring: ThreefoldRing, c1: i64, c2: i64) -> Self {
        ProjBundleRing {
            base_one: ring.one(),
            c1,
            c2,
        }
    }
}

impl ProjBundleRing<PlaneClass> {
    pub fn over_plane(c1: i64, c2: i64) -> Self {
        ProjBundleRing {
            base_one: PlaneClass::one(),
            c1,
            c2,
        }
    }

    /// Universal family of lines on the quintic del Pezzo threefold:
    /// `P(G) -> P^2` with `c1(G) = 3`, `c2(G) = 6`.
    pub fn lines_ring() -> Self {
        Self::over_plane(3, 6)
    }
}

impl<B: ProjBase> ProjBundleRing<B> {
    pub fn bundle_c1(&self) -> i64 {
        self.c1
    }

    pub fn bundle_c2(&self) -> i64 {
        self.c2
    }

    pub fn zero(&self) -> ProjBundleElement<B> {
        ProjBundleElement {
            ring: self.clone(),
            base: self.base_one.zero_like(),
            xi: self.base_one.zero_like(),
        }
    }

    /// Tautological class `xi`.
    pub fn xi(&self) -> ProjBundleElement<B> {
        ProjBundleElement {
            ring: self.clone(),
            base: self.base_one.zero_like(),
            xi: self.base_one.clone(),
        }
    }

    /// Pullback `pi^*` of a base class.
    pub fn pull(&self, base: B) -> ProjBundleElement<B> {
        assert!(
            base.same_ring(&self.base_one),
            "pullback from a different base ring"
        );
        ProjBundleElement {
            ring: self.clone(),
            base,
            xi: self.base_one.zero_like(),
        }
    }

    /// `a*xi + b*pi^*(hyperplane)`, the divisors this crate evaluates.
    pub fn divisor(&self, a: i64, b: i64) -> ProjBundleElement<B> {
        ProjBundleElement {
            ring: self.clone(),
            base: self.base_one.hyperplane().scale(&rat(b)),
            xi: self.base_one.scale(&rat(a)),
        }
    }

    fn same_ring(&self, other: &Self) -> bool {
        self.c1 == other.c1 && self.c2 == other.c2 && self.base_one.same_ring(&other.base_one)
    }
}

/// Chern-Wu-reduced element `base + xi_part * xi` of a projectivization.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjBundleElement<B: ProjBase> {
    ring: ProjBundleRing<B>,
    base: B,
    xi: B,
}

impl<B: ProjBase> ProjBundleElement<B> {
    pub fn base_part(&self) -> &B {
        &self.base
    }

    pub fn xi_part(&self) -> &B {
        &self.xi
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChowError> {
        if !self.ring.same_ring(&other.ring) {
            return Err(ChowError::RingMismatch("add".into()));
        }
        Ok(ProjBundleElement {
            ring: self.ring.clone(),
            base: self.base.add(&other.base),
            xi: self.xi.add(&other.xi),
        })
    }

    pub fn scale(&self, k: &Rat) -> Self {
        ProjBundleElement {
            ring: self.ring.clone(),
            base: self.base.scale(k),
            xi: self.xi.scale(k),
        }
    }

    /// Product, reduced by the Chern-Wu relation.
    pub fn mul(&self, other: &Self) -> Result<Self, ChowError> {
        if !self.ring.same_ring(&other.ring) {
            return Err(ChowError::RingMismatch("mul".into()));
        }
        let h = self.base.hyperplane();
        let kappa = self.base.codim2();
        let c1 = rat(self.ring.c1);
        let c2 = rat(self.ring.c2);
        let bb = self.xi.mul(&other.xi);
        // (a1 + b1 xi)(a2 + b2 xi)
        //   = a1 a2 - c2 b1 b2 kappa + (a1 b2 + a2 b1 + c1 b1 b2 h) xi
        let base = self
            .base
            .mul(&other.base)
            .add(&bb.mul(&kappa).scale(&-c2));
        let xi = self
            .base
            .mul(&other.xi)
            .add(&other.base.mul(&self.xi))
            .add(&bb.mul(&h).scale(&c1));
        Ok(ProjBundleElement {
            ring: self.ring.clone(),
            base,
            xi,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Self, ChowError> {
        let mut acc = ProjBundleElement {
            ring: self.ring.clone(),
            base: self.ring.base_one.clone(),
            xi: self.ring.base_one.zero_like(),
        };
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Pushforward then degree: `pi_*(base + beta * xi) = beta`, and the
    /// point coefficient of `beta` is the integral over the total space.
    pub fn integrate(&self) -> Rat {
        self.xi.top_coeff()
    }
}

/// Monomial `coeff * xi^xi_pow * h^h_pow` of an intersection polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub xi_pow: u32,
    pub h_pow: u32,
}

/// Evaluates a homogeneous degree-4 integer polynomial in `xi` and
/// `h = pi^*H` on a projectivization over a threefold.
pub fn eval_degree4(
    ring: &ProjBundleRing<ThreefoldClass>,
    poly: &[Monomial],
) -> Result<Rat, ChowError> {
    let mut acc = ring.zero();
    for m in poly {
        if m.xi_pow + m.h_pow != 4 {
            return Err(ChowError::NonHomogeneous {
                expected: 4,
                xi: m.xi_pow,
                h: m.h_pow,
            });
        }
        let term = ring
            .xi()
            .pow(m.xi_pow)?
            .mul(&ring.divisor(0, 1).pow(m.h_pow)?)?
            .scale(&rat(m.coeff));
        acc = acc.add(&term)?;
    }
    Ok(acc.integrate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;

    #[test]
    fn threefold_table() {
        let r = ThreefoldRing::dp5();
        // H*H = 5L in the degree-5 ring.
        assert_eq!(&r.h() * &r.h(), r.l().scale(&rat(5)));
        assert_eq!(&r.h() * &r.l(), r.p());
        assert!((&r.l() * &r.l()).is_zero());
        // H^3 = 5P.
        assert_eq!((&(&r.h() * &r.h()) * &r.h()).integrate(), rat(5));
    }

    #[test]
    fn chern_wu_with_trivial_c1() {
        // xi^2 = -c * pi^*L when c1 = 0.
        for c in -3..=3 {
            let pe = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, c);
            let sq = pe.xi().mul(&pe.xi()).unwrap();
            assert!(sq.xi_part().is_zero());
            assert_eq!(*sq.base_part(), ThreefoldRing::dp5().l().scale(&rat(-c)));
        }
    }

    #[test]
    fn lines_ring_chern_wu() {
        // eta^2 = 3*h*eta - 6*p on the universal family of lines.
        let u = ProjBundleRing::lines_ring();
        let sq = u.xi().mul(&u.xi()).unwrap();
        assert_eq!(*sq.xi_part(), PlaneClass::h().scale(&rat(3)));
        assert_eq!(*sq.base_part(), PlaneClass::p().scale(&rat(-6)));
    }

    #[test]
    fn integrate_xi_times_point() {
        let pe = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, 4);
        let el = pe.xi().mul(&pe.pull(ThreefoldRing::dp5().p())).unwrap();
        assert_eq!(el.integrate(), rat(1));
    }

    #[test]
    fn eta_cubed_is_three() {
        // eta^3 = eta*(3 h eta - 6 p) = 3 p eta, so the integral is 9-6=3.
        let u = ProjBundleRing::lines_ring();
        assert_eq!(u.xi().pow(3).unwrap().integrate(), rat(3));
    }

    #[test]
    fn evaluation_pullback_degree_three_cover() {
        // e^*H = eta + L and e^*l = eta*L - L^2 pull H*l = 1 back to 3.
        let u = ProjBundleRing::lines_ring();
        let eh = u.divisor(1, 1);
        let el = u
            .xi()
            .mul(&u.pull(PlaneClass::h()))
            .unwrap()
            .add(&u.pull(PlaneClass::p()).scale(&rat(-1)))
            .unwrap();
        assert_eq!(eh.mul(&el).unwrap().integrate(), rat(3));
    }

    #[test]
    fn eval_degree4_anticanonical() {
        // (2xi + 2h)^4 with c1 = 0, c2 = c on the quintic: 16(20 - 4c).
        for c in -5..=6 {
            let pe = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, c);
            let poly = binomial4(2, 2);
            assert_eq!(eval_degree4(&pe, &poly).unwrap(), rat(16 * (20 - 4 * c)));
        }
        // (2xi + 3h)^4 with c1 = -1: 80d - 64c.
        for d in 1..=5 {
            for c in -3..=6 {
                let pe =
                    ProjBundleRing::over_threefold(ThreefoldRing::new(d).unwrap(), -1, c);
                let poly = binomial4(2, 3);
                assert_eq!(eval_degree4(&pe, &poly).unwrap(), rat(80 * d - 64 * c));
            }
        }
        // (2xi + 2h)^4 with c1 = 0 at general degree: 64(d - c).
        for d in 1..=5 {
            for c in -3..=6 {
                let pe =
                    ProjBundleRing::over_threefold(ThreefoldRing::new(d).unwrap(), 0, c);
                let poly = binomial4(2, 2);
                assert_eq!(eval_degree4(&pe, &poly).unwrap(), rat(64 * (d - c)));
            }
        }
    }

    /// Expansion of `(a*xi + b*h)^4` as explicit monomials.
    fn binomial4(a: i64, b: i64) -> Vec<Monomial> {
        let binom = [1, 4, 6, 4, 1];
        (0..=4u32)
            .map(|k| Monomial {
                coeff: binom[k as usize] * a.pow(4 - k) * b.pow(k),
                xi_pow: 4 - k,
                h_pow: k,
            })
            .collect()
    }

    #[test]
    fn eval_degree4_rejects_inhomogeneous() {
        let pe = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, 1);
        let bad = [Monomial {
            coeff: 1,
            xi_pow: 2,
            h_pow: 1,
        }];
        assert!(matches!(
            eval_degree4(&pe, &bad),
            Err(ChowError::NonHomogeneous { .. })
        ));
    }

    #[test]
    fn grading_truncation() {
        // Any class of total degree below the dimension integrates to 0.
        let pe = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, 3);
        for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
            let el = pe.xi().pow(a).unwrap().mul(&pe.divisor(0, 1).pow(b).unwrap());
            if a + b < 4 {
                assert_eq!(el.unwrap().integrate(), rat(0), "xi^{a} h^{b}");
            }
        }
    }

    #[test]
    fn mul_ring_mismatch_errors() {
        let a = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, 1).xi();
        let b = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, 2).xi();
        assert!(matches!(a.mul(&b), Err(ChowError::RingMismatch(_))));
    }

    #[test]
    fn mul_commutes_and_associates() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let ring = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), -1, 2);
        let mut random_el = |rng: &mut rand_chacha::ChaCha8Rng| {
            let base = ThreefoldRing::dp5().class(
                frac(rng.gen_range(-4..=4), 2),
                rat(rng.gen_range(-4..=4)),
                rat(rng.gen_range(-4..=4)),
                rat(rng.gen_range(-4..=4)),
            );
            let xi = ThreefoldRing::dp5().class(
                rat(rng.gen_range(-4..=4)),
                rat(rng.gen_range(-4..=4)),
                rat(rng.gen_range(-4..=4)),
                rat(rng.gen_range(-4..=4)),
            );
            ring.pull(base)
                .add(&ring.xi().mul(&ring.pull(xi)).unwrap())
                .unwrap()
        };
        for _ in 0..40 {
            let (a, b, c) = (
                random_el(&mut rng),
                random_el(&mut rng),
                random_el(&mut rng),
            );
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn integrate_is_linear() {
        let ring = ProjBundleRing::over_threefold(ThreefoldRing::dp5(), 0, 2);
        let a = ring.divisor(1, 2).pow(4).unwrap();
        let b = ring.divisor(2, -1).pow(4).unwrap();
        assert_eq!(
            a.add(&b).unwrap().integrate(),
            a.integrate() + b.integrate()
        );
        assert_eq!(a.scale(&rat(7)).integrate(), rat(7) * a.integrate());
    }
}
