//! Exact-arithmetic workbench for rank-2 weak Fano bundles on del Pezzo
//! threefolds of Picard rank one.
//!
//! Everything here is computed over the rationals with no floating point:
//! numerical Chow rings and projective-bundle intersection numbers
//! ([`chow`]), Chern characters and Hirzebruch-Riemann-Roch Euler pairings
//! ([`bundles`]), numerical K-theory in the exceptional basis
//! `<O(-1), Q(-1), R, O>` with mutations and subcategory Serre operators
//! ([`exccol`]), resolution bookkeeping ([`resolve`]), weak-Fano
//! classification gates and the Hilbert-scheme-of-lines ring ([`fano`]),
//! and Theta-stability of 5-Kronecker quiver representations
//! ([`kronecker`]).
//!
//! The [`report`] module aggregates every verified claim into a
//! deterministic machine-readable report; the `delpezzo` CLI exposes it.
//!
//! With the default `parallel` feature, batch verification (report rows,
//! stability batches, classification scans) runs on rayon. Disabling the
//! feature falls back to equivalent sequential loops.

pub mod bundles;
pub mod chow;
pub mod exactnum;
pub mod exccol;
pub mod fano;
pub mod kronecker;
pub mod report;
pub mod resolve;

mod par;
