//! Exact geometry kernels: fields, linear algebra, rational normal curves,
//! the Plucker four-lines solver, finite-field counting, and randomized
//! conservation trials.
//!
//! The central equivalence tying this module to the series counts: a center
//! subspace meets a chord of the rational normal curve exactly when the
//! series it cuts out identifies the chord's two parameters, i.e. every
//! divisor through one endpoint passes through the other.

pub mod counting;
pub mod curve;
pub mod experiment;
pub mod field;
pub mod instance;
pub mod matrix;
pub mod pencil;
pub mod subspace;

pub use counting::{finite_field_count, gaussian_binomial, DEFAULT_ENUMERATION_CAP};
pub use curve::{
    imposes_identification, pullback_series, BinaryForm, Chord, CurveParameter,
    RationalNormalCurvePoint,
};
pub use experiment::{conservation_experiment, run_trial, SplitMix64, TrialOutcome, TrialReport};
pub use field::{
    is_prime, BigRational, EnumerableField, Field, PrimeField, QuadExtElem, QuadraticField,
    Rationals, MAX_PRIME_MODULUS,
};
pub use instance::{
    degenerate_to_json, instance_result_to_json, parse_instance, render_instance, report_to_json,
    run_instance, FieldSpec, InstanceFile, InstanceResult,
};
pub use matrix::Matrix;
pub use pencil::{
    four_lines_pencil, line_from_plucker, plucker_coordinates, plucker_pairing, plucker_quadric,
    projective_root_count, rational_sqrt, solve_four_lines, PencilQuadratic,
    PencilSolutionReport, SolutionCount, PLUCKER_PAIRS,
};
pub use subspace::LinearSubspace;

use num_bigint::BigUint;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// Matrix rows must share one length.
    RaggedRows,
    /// The operands live over different fields (e.g. different moduli).
    MixedFields,
    /// Vector or subspace lengths disagree.
    AmbientMismatch { left: usize, right: usize },
    /// A claimed basis was linearly dependent.
    DependentBasis { claimed: usize, rank: usize },
    /// (0 : 0) is not a point of the projective line.
    ZeroParameter,
    /// Chord endpoints (or identification parameters) must be distinct;
    /// tangent lines are out of scope.
    CoincidentParameters,
    /// The center must be a proper nonzero subspace to cut out a series.
    SeriesDimension { ambient: usize, dim: usize },
    /// An identification question needs at least one form.
    EmptySeries,
    /// Plucker coordinates require a 2-dimensional subspace of 4-space.
    NotALine { ambient: usize, dim: usize },
    /// The vector violates the Plucker quadric, so it is no line.
    NotDecomposable,
    /// The four incidence conditions are dependent.
    DegenerateConfiguration { rank: usize },
    /// The quadric vanishes on the whole pencil: infinitely many solutions.
    NonReducedPencil,
    /// The subspace enumeration would exceed the configured cap.
    EnumerationTooLarge { size: BigUint, cap: u64 },
    /// The requested modulus is not prime.
    NotPrime { p: u64 },
    /// Moduli are limited to 2^31.
    ModulusTooLarge { p: u64 },
    /// F_4 is not expressible as F_2(sqrt(c)); pick an odd prime.
    NoQuadraticExtension { p: u64 },
    /// Instance file syntax error.
    Parse { line: usize, message: String },
    /// The instance is well-formed but outside what this solver handles.
    UnsupportedInstance { message: String },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::RaggedRows => write!(f, "matrix rows have inconsistent lengths"),
            GeometryError::MixedFields => write!(f, "operands live over different fields"),
            GeometryError::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions disagree: {left} vs {right}")
            }
            GeometryError::DependentBasis { claimed, rank } => {
                write!(f, "claimed basis of {claimed} vectors has rank {rank}")
            }
            GeometryError::ZeroParameter => write!(f, "(0 : 0) is not a projective parameter"),
            GeometryError::CoincidentParameters => {
                write!(f, "parameters are coincident; chords need distinct endpoints")
            }
            GeometryError::SeriesDimension { ambient, dim } => {
                write!(
                    f,
                    "center of dimension {dim} in {ambient}-space cuts out no proper series"
                )
            }
            GeometryError::EmptySeries => write!(f, "series has no forms"),
            GeometryError::NotALine { ambient, dim } => {
                write!(
                    f,
                    "Plucker coordinates need a 2-dimensional subspace of 4-space, \
                     got dimension {dim} in {ambient}-space"
                )
            }
            GeometryError::NotDecomposable => {
                write!(f, "vector violates the Plucker quadric")
            }
            GeometryError::DegenerateConfiguration { rank } => {
                write!(f, "incidence conditions are dependent (rank {rank} < 4)")
            }
            GeometryError::NonReducedPencil => {
                write!(f, "quadric vanishes on the pencil: infinitely many solutions")
            }
            GeometryError::EnumerationTooLarge { size, cap } => {
                write!(f, "enumeration of {size} subspaces exceeds the cap {cap}")
            }
            GeometryError::NotPrime { p } => write!(f, "{p} is not prime"),
            GeometryError::ModulusTooLarge { p } => {
                write!(f, "modulus {p} exceeds the 2^31 limit")
            }
            GeometryError::NoQuadraticExtension { p } => {
                write!(f, "no square-root model of F_({p}^2); use an odd prime")
            }
            GeometryError::Parse { line, message } => {
                write!(f, "instance parse error at line {line}: {message}")
            }
            GeometryError::UnsupportedInstance { message } => {
                write!(f, "unsupported instance: {message}")
            }
        }
    }
}

impl std::error::Error for GeometryError {}
