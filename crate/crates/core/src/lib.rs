//! Exact enumerative counts of linear series on general algebraic curves.
//!
//! The library answers one classical question three independent ways: how many
//! linear series `g^r_d` does a general curve of genus `g` carry when the
//! Brill-Noether number `rho = g - (r+1)(g-d+r)` vanishes?
//!
//! * [`partitions`] evaluates the closed factorial formula and counts standard
//!   Young tableaux, both by hook lengths and by exhaustive backtracking.
//! * [`schubert`] computes the same number as an intersection number on a
//!   Grassmannian via iterated Pieri products.
//! * [`brillnoether`] translates `(g, r, d)` triples into the other two
//!   languages and enumerates all `rho = 0` cases of a given genus.
//! * [`geometry`] realizes the underlying degeneration geometry concretely:
//!   rational normal curves, chords, an exact Plucker-coordinate solver for
//!   the four-lines problem, and a finite-field brute-force counting oracle.
//! * [`cli`] packages everything as deterministic commands with canonical
//!   JSON output; the `castelnuovo` binary is a thin front end over it.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, or
//! prime fields. No floating point is used anywhere.

pub mod brillnoether;
pub mod cli;
pub mod geometry;
pub mod partitions;
pub mod schubert;
