//! Chern data, Chern characters, the Todd class, and the
//! Hirzebruch-Riemann-Roch Euler pairing on a degree-`d` del Pezzo
//! threefold, together with the catalog of named bundles on the quintic.
//!
//! Conventions: `-K_X = 2H`, so `omega_X = O(-2)`; `c2(X) = 12 L` is
//! forced by the normalization `chi(O_X) = 1` (the anticanonical degree
//! never enters `c1(X) * c2(X) = 24`). The Todd class is therefore
//! `1 + H + (d+3)/3 L + P`.
//!
//! `chi` refuses to round: a non-integral Euler characteristic is
//! reported as an error, which doubles as a free consistency check on
//! all Chern data.

use crate::chow::{ThreefoldClass, ThreefoldRing};
use crate::exactnum::{frac, rat, Rat};
use num::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BundleError {
    #[error("Euler characteristic {0} is not an integer: inconsistent Chern data")]
    NonIntegralChi(String),
    #[error("classes live on threefolds of different degree")]
    RingMismatch,
    #[error("Chern character is not the character of integral Chern data: {0}")]
    NonIntegralClass(String),
    #[error("unknown bundle spec {0:?}")]
    UnknownBundle(String),
}

/// Numerical class of a vector bundle: rank and integer Chern classes
/// `c1 * H`, `c2 * L`, `c3 * P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleClass {
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub ring: ThreefoldRing,
}

impl BundleClass {
    pub fn new(ring: ThreefoldRing, rank: i64, c1: i64, c2: i64, c3: i64) -> Self {
        BundleClass {
            rank,
            c1,
            c2,
            c3,
            ring,
        }
    }

    /// Is this a normalized rank-2 class, i.e. `c1` in `{0, -1}`?
    pub fn is_normalized(&self) -> bool {
        self.rank == 2 && (self.c1 == 0 || self.c1 == -1)
    }

    /// Exact Chern character `(ch0, ch1, ch2, ch3)` in `{1, H, L, P}`.
    pub fn chern_character(&self) -> ChernCharacter {
        let d = self.ring.degree();
        let ch2 = frac(self.c1 * self.c1 * d - 2 * self.c2, 2);
        let ch3 = frac(
            self.c1 * self.c1 * self.c1 * d - 3 * self.c1 * self.c2 + 3 * self.c3,
            6,
        );
        ChernCharacter {
            class: self
                .ring
                .class(rat(self.rank), rat(self.c1), ch2, ch3),
        }
    }

    /// Total Chern class `1 + c1 H + c2 L + c3 P`.
    pub fn total_chern(&self) -> ThreefoldClass {
        self.ring
            .class(rat(1), rat(self.c1), rat(self.c2), rat(self.c3))
    }
}

impl std::fmt::Display for BundleClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(rank {}, c1 {}, c2 {}, c3 {})",
            self.rank, self.c1, self.c2, self.c3
        )
    }
}

/// Chern character with rational coefficients of `{1, H, L, P}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernCharacter {
    class: ThreefoldClass,
}

impl ChernCharacter {
    pub fn from_class(class: ThreefoldClass) -> Self {
        ChernCharacter { class }
    }

    pub fn class(&self) -> &ThreefoldClass {
        &self.class
    }

    pub fn ring(&self) -> ThreefoldRing {
        self.class.ring()
    }

    pub fn ch(&self, i: usize) -> &Rat {
        self.class.coeff(i)
    }

    /// Dual: odd-degree parts negated.
    pub fn dual(&self) -> ChernCharacter {
        let r = self.ring();
        ChernCharacter {
            class: r.class(
                self.ch(0).clone(),
                -self.ch(1).clone(),
                self.ch(2).clone(),
                -self.ch(3).clone(),
            ),
        }
    }

    /// Tensor with `O(n)`: multiplication by `exp(n H)`.
    pub fn twist(&self, n: i64) -> ChernCharacter {
        let d = self.ring().degree();
        let exp = self.ring().class(
            rat(1),
            rat(n),
            frac(n * n * d, 2),
            frac(n * n * n * d, 6),
        );
        ChernCharacter {
            class: &self.class * &exp,
        }
    }

    pub fn add(&self, other: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            class: &self.class + &other.class,
        }
    }

    pub fn sub(&self, other: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            class: &self.class - &other.class,
        }
    }

    pub fn scale(&self, k: i64) -> ChernCharacter {
        ChernCharacter {
            class: self.class.scale(&rat(k)),
        }
    }

    pub fn mul(&self, other: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            class: &self.class * &other.class,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.class.is_zero()
    }

    /// Back to `(rank, c1, c2, c3)`; errors when the inverse formulas are
    /// not integral.
    pub fn to_bundle_class(&self) -> Result<BundleClass, BundleError> {
        let (rank, c1, c2, c3) = self.invariants();
        let all = [&rank, &c1, &c2, &c3];
        if all.iter().any(|r| !r.is_integer()) {
            return Err(BundleError::NonIntegralClass(format!(
                "rank {rank}, c1 {c1}, c2 {c2}, c3 {c3}"
            )));
        }
        let to_i64 = |r: &Rat| i64::try_from(r.to_integer()).expect("small invariant");
        Ok(BundleClass::new(
            self.ring(),
            to_i64(&rank),
            to_i64(&c1),
            to_i64(&c2),
            to_i64(&c3),
        ))
    }

    /// `(rank, c1, c2, c3)` as exact rationals, without integrality
    /// demands; used to report what a failed bookkeeping run produced.
    pub fn invariants(&self) -> (Rat, Rat, Rat, Rat) {
        let d = rat(self.ring().degree());
        let rank = self.ch(0).clone();
        let c1 = self.ch(1).clone();
        // ch2 = (c1^2 d - 2 c2)/2 and ch3 = (c1^3 d - 3 c1 c2 + 3 c3)/6.
        let c2 = &c1 * &c1 * &d / rat(2) - self.ch(2);
        let c3 = (self.ch(3).clone() * rat(6) - &c1 * &c1 * &c1 * &d + rat(3) * &c1 * &c2)
            / rat(3);
        (rank, c1, c2, c3)
    }
}

impl std::fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.class)
    }
}

/// Todd class `1 + H + (d+3)/3 L + P` of the threefold.
pub fn todd(ring: ThreefoldRing) -> ThreefoldClass {
    ring.class(rat(1), rat(1), frac(ring.degree() + 3, 3), rat(1))
}

/// `chi(E) = deg(ch(E) * td(X))`, demanded to be an integer.
pub fn chi(b: &BundleClass) -> Result<BigInt, BundleError> {
    chi_of_character(&b.chern_character())
}

/// `chi` straight from a Chern character (used for alternating sums).
pub fn chi_of_character(ch: &ChernCharacter) -> Result<BigInt, BundleError> {
    let value = (ch.class() * &todd(ch.ring())).integrate();
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(BundleError::NonIntegralChi(value.to_string()))
    }
}

/// Euler pairing `chi(A, B) = deg(ch(A)^dual * ch(B) * td(X))`.
pub fn chi_pair(a: &BundleClass, b: &BundleClass) -> Result<BigInt, BundleError> {
    if a.ring != b.ring {
        return Err(BundleError::RingMismatch);
    }
    chi_pair_characters(&a.chern_character(), &b.chern_character())
}

pub fn chi_pair_characters(
    a: &ChernCharacter,
    b: &ChernCharacter,
) -> Result<BigInt, BundleError> {
    if a.ring() != b.ring() {
        return Err(BundleError::RingMismatch);
    }
    chi_of_character(&a.dual().mul(b))
}

/// Dual bundle class via the Chern character.
pub fn dual(b: &BundleClass) -> BundleClass {
    b.chern_character()
        .dual()
        .to_bundle_class()
        .expect("dual of integral Chern data is integral")
}

/// Twist by `O(n)` via the Chern character.
pub fn twist(b: &BundleClass, n: i64) -> BundleClass {
    b.chern_character()
        .twist(n)
        .to_bundle_class()
        .expect("twist of integral Chern data is integral")
}

/// `chi` of the rank-2 normal bundle of an elliptic curve of `H`-degree
/// `e`: the genus-1 terms cancel and Riemann-Roch leaves `2e`.
pub fn chi_normal_elliptic(h_degree: i64) -> i64 {
    assert!(h_degree >= 1, "elliptic curves have positive degree");
    2 * h_degree
}

/// Named bundles on the quintic del Pezzo threefold: the line bundles
/// `O(n)`, the tautological rank-2 subbundle `R` and rank-3 quotient `Q`
/// restricted from the Grassmannian, and their twists and duals. The
/// rank-2 bundle `G` on the plane (the Hilbert-scheme-of-lines datum)
/// is carried as its `(c1, c2)` pair.
///
/// The Chern data of `Q` is pinned by the Whitney relation
/// `c(R) * c(Q) = 1` from `0 -> R -> O^5 -> Q -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Catalog {
    ring: ThreefoldRing,
    r_data: (i64, i64, i64),
    q_data: (i64, i64, i64),
}

impl Catalog {
    pub fn dp5() -> Self {
        Catalog {
            ring: ThreefoldRing::dp5(),
            r_data: (-1, 2, 0),
            q_data: (1, 3, 1),
        }
    }

    pub fn ring(&self) -> ThreefoldRing {
        self.ring
    }

    /// Line bundle `O(n)`.
    pub fn o(&self, n: i64) -> BundleClass {
        BundleClass::new(self.ring, 1, n, 0, 0)
    }

    /// Tautological rank-2 subbundle restricted to the quintic.
    pub fn r(&self) -> BundleClass {
        BundleClass::new(self.ring, 2, self.r_data.0, self.r_data.1, self.r_data.2)
    }

    /// Rank-3 quotient bundle restricted to the quintic.
    pub fn q(&self) -> BundleClass {
        BundleClass::new(self.ring, 3, self.q_data.0, self.q_data.1, self.q_data.2)
    }

    pub fn q_twist(&self, n: i64) -> BundleClass {
        twist(&self.q(), n)
    }

    pub fn r_twist(&self, n: i64) -> BundleClass {
        twist(&self.r(), n)
    }

    pub fn q_dual(&self) -> BundleClass {
        dual(&self.q())
    }

    pub fn r_dual(&self) -> BundleClass {
        dual(&self.r())
    }

    /// Normalized rank-2 class with `c3 = 0`.
    pub fn e(&self, c1: i64, c2: i64) -> BundleClass {
        BundleClass::new(self.ring, 2, c1, c2, 0)
    }

    /// `(c1, c2)` of the rank-2 bundle `G` on the plane whose
    /// projectivization is the universal family of lines.
    pub fn lines_bundle(&self) -> (i64, i64) {
        (3, 6)
    }

    /// Whitney relation `c(R) * c(Q) = 1` for the current data.
    pub fn whitney_holds(&self) -> bool {
        let prod = &self.r().total_chern() * &self.q().total_chern();
        prod == self.ring.one()
    }

    /// Fault injection for verification runs: overrides one Chern datum.
    pub fn with_fault(&self, field: &str, value: i64) -> Result<Catalog, BundleError> {
        let mut cat = *self;
        match field {
            "c1R" => cat.r_data.0 = value,
            "c2R" => cat.r_data.1 = value,
            "c3R" => cat.r_data.2 = value,
            "c1Q" => cat.q_data.0 = value,
            "c2Q" => cat.q_data.1 = value,
            "c3Q" => cat.q_data.2 = value,
            other => return Err(BundleError::UnknownBundle(format!("catalog.{other}"))),
        }
        Ok(cat)
    }

    /// Parses the bundle mini-grammar:
    /// `O | Q | R | Qv | Rv` with an optional `(n)` twist, or
    /// `E(c1,c2)` for a normalized rank-2 class.
    pub fn by_name(&self, spec: &str) -> Result<BundleClass, BundleError> {
        let s = spec.trim();
        let err = || BundleError::UnknownBundle(spec.to_string());
        if let Some(rest) = s.strip_prefix("E(") {
            let inner = rest.strip_suffix(')').ok_or_else(err)?;
            let mut parts = inner.splitn(2, ',');
            let c1: i64 = parts
                .next()
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(err)?;
            let c2: i64 = parts
                .next()
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(err)?;
            return Ok(self.e(c1, c2));
        }
        let (name, twist_by) = match s.find('(') {
            Some(i) => {
                let inner = s[i..].strip_prefix('(').unwrap();
                let inner = inner.strip_suffix(')').ok_or_else(err)?;
                let n: i64 = inner.trim().parse().map_err(|_| err())?;
                (&s[..i], n)
            }
            None => (s, 0),
        };
        let base = match name {
            "O" => self.o(0),
            "Q" => self.q(),
            "R" => self.r(),
            "Qv" => self.q_dual(),
            "Rv" => self.r_dual(),
            _ => return Err(err()),
        };
        Ok(twist(&base, twist_by))
    }
}
