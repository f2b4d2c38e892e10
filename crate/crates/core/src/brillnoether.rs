//! Counting linear series `g^r_d` on a general curve of genus `g`.
//!
//! A `g^r_d` is an `r`-dimensional family of degree-`d` point divisors. The
//! Brill-Noether number `rho = g - (r+1)(g-d+r)` governs existence: finitely
//! many series are expected exactly when `rho = 0`.
//!
//! Notation dictionary, since the older literature writes these differently:
//! genus `g` is the classical `p`, series dimension `r` is `q`, degree `d`
//! is `m`, and with `Q = g - 1 - (d - r)` the vanishing of `rho` reads
//! `g = (q+1)(Q+1)`. The derived pair `(h, k) = (r+1, g-d+r)` therefore
//! satisfies `hk = g`, and the count of series is the number of standard
//! Young tableaux of the `h x k` rectangle.
//!
//! The same number is an incidence count: degenerate the curve to a rational
//! curve with `g` nodes; a series on the degenerate curve is cut out on a
//! rational normal curve of degree `d` by hyperplanes through a fixed
//! `(d-r)`-dimensional linear subspace that must meet the `g` chords joining
//! the identified point pairs. That is `sigma_r^g` on `G(d-r, d+1)`, handled
//! by [`crate::schubert`], while the concrete chord geometry lives in
//! [`crate::geometry`].

use crate::partitions::castelnuovo_factorial;
use crate::schubert::{incidence_with_line_class, GrassmannianSpec, SchubertProblemInstance};
use num_bigint::BigUint;
use num_traits::One;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrillNoetherError {
    /// Needs d >= r >= 1.
    InvalidTriple { g: u32, r: u32, d: u32 },
    /// The operation only applies when rho = 0.
    RhoNonzero { rho: i64 },
    /// g - d + r < 1: the series is non-special and the condition set is
    /// empty; the count is 1 and there is no rectangle to build.
    NonSpecial,
    /// The residual series would have r < 1 or d < r.
    InvalidResidual,
}

impl fmt::Display for BrillNoetherError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrillNoetherError::InvalidTriple { g, r, d } => {
                write!(f, "invalid series parameters (g={g}, r={r}, d={d}): need d >= r >= 1")
            }
            BrillNoetherError::RhoNonzero { rho } => {
                write!(f, "Brill-Noether number is {rho}, not 0")
            }
            BrillNoetherError::NonSpecial => {
                write!(f, "series is non-special (g - d + r < 1); the count is 1")
            }
            BrillNoetherError::InvalidResidual => write!(f, "residual series is not defined"),
        }
    }
}

impl std::error::Error for BrillNoetherError {}

/// A linear-series counting problem: genus `g`, series dimension `r`,
/// series degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BNProblem {
    g: u32,
    r: u32,
    d: u32,
}

impl BNProblem {
    pub fn new(g: u32, r: u32, d: u32) -> Result<Self, BrillNoetherError> {
        if r < 1 || d < r {
            return Err(BrillNoetherError::InvalidTriple { g, r, d });
        }
        Ok(BNProblem { g, r, d })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn series_dim(&self) -> u32 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// `g - d + r`, the speciality index `k`; may be negative.
    pub fn speciality(&self) -> i64 {
        i64::from(self.g) - i64::from(self.d) + i64::from(self.r)
    }
}

impl fmt::Display for BNProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, r={}, d={})", self.g, self.r, self.d)
    }
}

/// The rectangle sides derived from a `rho = 0` problem: `h = r + 1`,
/// `k = g - d + r`, with `hk = g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CastelnuovoParams {
    pub h: u32,
    pub k: u32,
}

/// `rho = g - (r+1)(g-d+r)`, total over all valid triples.
pub fn brill_noether_number(p: &BNProblem) -> i64 {
    i64::from(p.g) - i64::from(p.r + 1) * p.speciality()
}

/// Extracts `(h, k)` from a `rho = 0` problem. Fails when `rho != 0` or when
/// the series is non-special (`g - d + r < 1`, count 1, no rectangle).
pub fn to_castelnuovo_params(p: &BNProblem) -> Result<CastelnuovoParams, BrillNoetherError> {
    let rho = brill_noether_number(p);
    if rho != 0 {
        return Err(BrillNoetherError::RhoNonzero { rho });
    }
    let k = p.speciality();
    if k < 1 {
        return Err(BrillNoetherError::NonSpecial);
    }
    let params = CastelnuovoParams {
        h: p.r + 1,
        k: k as u32,
    };
    debug_assert_eq!(u64::from(params.h) * u64::from(params.k), u64::from(p.g));
    Ok(params)
}

/// The number of `g^r_d` series on a general curve of genus `g` when
/// `rho = 0`: the factorial formula on the `(h, k)` rectangle, or 1 in the
/// non-special case where the condition set is empty.
pub fn castelnuovo_number(p: &BNProblem) -> Result<BigUint, BrillNoetherError> {
    match to_castelnuovo_params(p) {
        Ok(params) => Ok(castelnuovo_factorial(params.h, params.k)
            .expect("h, k >= 1 by construction")
            .into_inner()),
        Err(BrillNoetherError::NonSpecial) => Ok(BigUint::one()),
        Err(e) => Err(e),
    }
}

/// Translates a `rho = 0` problem into its incidence form: projective
/// `(d-r-1)`-planes in `P^d` meeting `g` general lines, i.e. `sigma_r^g` on
/// `G(d-r, d+1)`.
pub fn to_schubert_problem(p: &BNProblem) -> Result<SchubertProblemInstance, BrillNoetherError> {
    let params = to_castelnuovo_params(p)?;
    let g = GrassmannianSpec::new(p.d - p.r, p.d + 1)
        .expect("rho = 0 with g >= 1 forces d > r");
    let c = incidence_with_line_class(&g).expect("box has r+1 >= 2 columns");
    debug_assert_eq!(c, p.r);
    debug_assert_eq!(u64::from(params.h) * u64::from(params.k), u64::from(p.g));
    let instance = SchubertProblemInstance::new(g, c, p.g)
        .expect("rho = 0 makes the problem zero-dimensional");
    Ok(instance)
}

/// The residual series `(g, g-d+r-1, 2g-2-d)`. Preserves `rho`; undefined
/// when the residual dimension drops below 1 or the degree below the
/// dimension.
pub fn residual(p: &BNProblem) -> Result<BNProblem, BrillNoetherError> {
    let r_res = p.speciality() - 1;
    let d_res = 2 * i64::from(p.g) - 2 - i64::from(p.d);
    if r_res < 1 || d_res < r_res {
        return Err(BrillNoetherError::InvalidResidual);
    }
    BNProblem::new(p.g, r_res as u32, d_res as u32)
        .map_err(|_| BrillNoetherError::InvalidResidual)
}

/// Every `rho = 0` problem of genus `g` with a nonempty condition set, one
/// per factorization `g = h * k` with `h >= 2`: `r = h - 1`, `d = g + r - k`.
/// Sorted by `(r, d)`.
pub fn enumerate_rho_zero(g: u32) -> Vec<BNProblem> {
    let mut out = Vec::new();
    for h in 2..=g {
        if g % h != 0 {
            continue;
        }
        let k = g / h;
        let r = h - 1;
        let d = g + r - k;
        let p = BNProblem::new(g, r, d).expect("factorization parameters are valid");
        debug_assert_eq!(brill_noether_number(&p), 0);
        out.push(p);
    }
    out.sort();
    out
}
