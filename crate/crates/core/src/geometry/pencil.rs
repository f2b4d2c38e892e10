//! The four-lines problem in exact Plucker coordinates.
//!
//! Lines in `P^3` are 2-dimensional subspaces of a 4-dimensional space,
//! coordinatized by the six 2x2 minors in the fixed order
//! `(p01, p02, p03, p12, p13, p23)`. Decomposable vectors satisfy the
//! quadric `p01 p23 - p02 p13 + p03 p12 = 0`, and two lines meet exactly
//! when the polarized pairing of their coordinates vanishes. Both the
//! coordinate ordering and this sign convention are the single source of
//! truth for the whole crate.
//!
//! Meeting four fixed lines imposes four linear conditions; for lines in
//! general position the solutions form a pencil, and restricting the quadric
//! to the pencil leaves one binary quadratic whose roots are the answers.
//! The count with multiplicity over the algebraic closure is 2, matching the
//! series count for genus 4, dimension 1, degree 3.

use super::field::{BigRational, EnumerableField, Field, Rationals};
use super::matrix::Matrix;
use super::subspace::LinearSubspace;
use super::GeometryError;
use num_integer::Roots;
use num_traits::{Signed, Zero};

/// Index pairs behind the six Plucker coordinates, in storage order.
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Plucker coordinates of a line: the 2x2 minors of its basis matrix in the
/// fixed ordering.
pub fn plucker_coordinates<F: Field>(
    field: &F,
    line: &LinearSubspace<F>,
) -> Result<[F::Elem; 6], GeometryError> {
    if line.ambient_dim() != 4 || line.dim() != 2 {
        return Err(GeometryError::NotALine {
            ambient: line.ambient_dim(),
            dim: line.dim(),
        });
    }
    let u = &line.basis()[0];
    let v = &line.basis()[1];
    let minor = |i: usize, j: usize| {
        field.sub(&field.mul(&u[i], &v[j]), &field.mul(&u[j], &v[i]))
    };
    Ok(PLUCKER_PAIRS.map(|(i, j)| minor(i, j)))
}

/// The Plucker quadric `p01 p23 - p02 p13 + p03 p12`; zero exactly on
/// decomposable vectors.
pub fn plucker_quadric<F: Field>(field: &F, p: &[F::Elem; 6]) -> F::Elem {
    let t1 = field.mul(&p[0], &p[5]);
    let t2 = field.mul(&p[1], &p[4]);
    let t3 = field.mul(&p[2], &p[3]);
    field.add(&field.sub(&t1, &t2), &t3)
}

/// The polarization of the quadric: `q(P + Q) - q(P) - q(Q)`. Two lines meet
/// exactly when the pairing of their coordinates vanishes.
pub fn plucker_pairing<F: Field>(field: &F, p: &[F::Elem; 6], q: &[F::Elem; 6]) -> F::Elem {
    let mut acc = field.zero();
    acc = field.add(&acc, &field.mul(&p[0], &q[5]));
    acc = field.add(&acc, &field.mul(&p[5], &q[0]));
    acc = field.sub(&acc, &field.mul(&p[1], &q[4]));
    acc = field.sub(&acc, &field.mul(&p[4], &q[1]));
    acc = field.add(&acc, &field.mul(&p[2], &q[3]));
    acc = field.add(&acc, &field.mul(&p[3], &q[2]));
    acc
}

/// Recovers the line from a nonzero decomposable Plucker vector as the
/// kernel of the wedge conditions `x ^ P = 0`.
pub fn line_from_plucker<F: Field>(
    field: &F,
    p: &[F::Elem; 6],
) -> Result<LinearSubspace<F>, GeometryError> {
    let z = field.zero();
    let n = |x: &F::Elem| field.neg(x);
    // Rows indexed by the four coordinate triples (i<j<k):
    // x_i p_jk - x_j p_ik + x_k p_ij = 0.
    let rows = vec![
        vec![p[3].clone(), n(&p[1]), p[0].clone(), z.clone()],
        vec![p[4].clone(), n(&p[2]), z.clone(), p[0].clone()],
        vec![p[5].clone(), z.clone(), n(&p[2]), p[1].clone()],
        vec![z.clone(), p[5].clone(), n(&p[4]), p[3].clone()],
    ];
    let m = Matrix::from_rows(field.clone(), rows)?;
    let kernel = m.kernel_basis();
    if kernel.len() != 2 {
        return Err(GeometryError::NotDecomposable);
    }
    LinearSubspace::from_basis(field.clone(), 4, kernel)
}

/// The pencil of lines meeting four fixed lines, with the restricted quadric
/// `a2 x^2 + ab xy + b2 y^2` on the pencil `x A + y B`.
#[derive(Debug, Clone)]
pub struct PencilQuadratic<F: Field> {
    pub basis_a: [F::Elem; 6],
    pub basis_b: [F::Elem; 6],
    pub a2: F::Elem,
    pub ab: F::Elem,
    pub b2: F::Elem,
}

/// Builds the incidence system for the four lines and restricts the Plucker
/// quadric to its solution pencil. Works over any exact field.
///
/// Fails with [`GeometryError::DegenerateConfiguration`] when the four
/// incidence conditions are dependent, and with
/// [`GeometryError::NonReducedPencil`] when the quadric vanishes identically
/// on the pencil, the case of infinitely many solutions.
pub fn four_lines_pencil<F: Field>(
    field: &F,
    lines: &[LinearSubspace<F>; 4],
) -> Result<PencilQuadratic<F>, GeometryError> {
    let coords: Vec<[F::Elem; 6]> = lines
        .iter()
        .map(|line| plucker_coordinates(field, line))
        .collect::<Result<_, _>>()?;
    // Row i is the linear form ω(line_i, ·) on Plucker space.
    let rows: Vec<Vec<F::Elem>> = coords
        .iter()
        .map(|b| {
            vec![
                b[5].clone(),
                field.neg(&b[4]),
                b[3].clone(),
                b[2].clone(),
                field.neg(&b[1]),
                b[0].clone(),
            ]
        })
        .collect();
    let system = Matrix::from_rows(field.clone(), rows)?;
    let rank = system.rank();
    if rank != 4 {
        return Err(GeometryError::DegenerateConfiguration { rank });
    }
    let kernel = system.kernel_basis();
    debug_assert_eq!(kernel.len(), 2);
    let basis_a: [F::Elem; 6] = kernel[0].clone().try_into().expect("Plucker space has dim 6");
    let basis_b: [F::Elem; 6] = kernel[1].clone().try_into().expect("Plucker space has dim 6");
    let a2 = plucker_quadric(field, &basis_a);
    let b2 = plucker_quadric(field, &basis_b);
    let ab = plucker_pairing(field, &basis_a, &basis_b);
    if field.is_zero(&a2) && field.is_zero(&ab) && field.is_zero(&b2) {
        return Err(GeometryError::NonReducedPencil);
    }
    Ok(PencilQuadratic {
        basis_a,
        basis_b,
        a2,
        ab,
        b2,
    })
}

/// Root count of the quadratic over the closure, with multiplicity. The
/// `Infinite` flag is reserved for wrapping the non-reduced pencil case in
/// reports; the solver itself rejects it as an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionCount {
    Finite(u8),
    Infinite,
}

/// Outcome of the four-lines solver over the rationals. Every subspace in
/// `solutions` has been re-verified to meet all four input lines and its
/// Plucker vector re-checked against the quadric.
#[derive(Debug, Clone)]
pub struct PencilSolutionReport {
    pub count_with_multiplicity: SolutionCount,
    pub discriminant: BigRational,
    pub solutions: Vec<LinearSubspace<Rationals>>,
    /// Describes the quadratic extension holding the roots when they are
    /// irrational; `None` when all roots are rational.
    pub extension: Option<String>,
}

/// Exact square root in the rationals, if one exists.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer();
    let den = x.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

/// Solves the four-lines problem over the rationals: parametrize the pencil,
/// restrict the quadric, and take roots. Generic configurations report count
/// 2 with multiplicity; rational roots come with explicit, re-verified
/// solution subspaces, irrational ones with their quadratic extension.
pub fn solve_four_lines(
    lines: &[LinearSubspace<Rationals>; 4],
) -> Result<PencilSolutionReport, GeometryError> {
    let field = Rationals;
    let pencil = four_lines_pencil(&field, lines)?;
    let qa = &pencil.a2;
    let w = &pencil.ab;
    let qb = &pencil.b2;
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    let discriminant = w * w - four * (qa * qb);

    // Roots of qa x^2 + w xy + qb y^2 as projective pairs (x : y).
    let mut roots: Vec<(BigRational, BigRational)> = Vec::new();
    let mut extension = None;
    if !qa.is_zero() {
        match rational_sqrt(&discriminant) {
            Some(s) => {
                let r1 = (-w + &s) / (&two * qa);
                let r2 = (-w - &s) / (&two * qa);
                roots.push((r1.clone(), field.one()));
                if r2 != r1 {
                    roots.push((r2, field.one()));
                }
            }
            None => extension = Some(format!("Q(sqrt({discriminant}))")),
        }
    } else if !w.is_zero() {
        // qa = 0: the point (1 : 0) is a root, the other is rational.
        roots.push((field.one(), field.zero()));
        roots.push((-(qb / w), field.one()));
    } else {
        // qa = w = 0, qb != 0: double root at (1 : 0).
        roots.push((field.one(), field.zero()));
    }

    let mut solutions = Vec::with_capacity(roots.len());
    for (x, y) in roots {
        let p: [BigRational; 6] = std::array::from_fn(|i| {
            &pencil.basis_a[i] * &x + &pencil.basis_b[i] * &y
        });
        assert!(
            plucker_quadric(&field, &p).is_zero(),
            "root of the restricted quadratic must satisfy the quadric"
        );
        let line = line_from_plucker(&field, &p)?;
        for condition in lines {
            assert!(
                line.meets(condition).expect("same ambient space"),
                "solver output must meet every condition line"
            );
        }
        solutions.push(line);
    }

    Ok(PencilSolutionReport {
        count_with_multiplicity: SolutionCount::Finite(2),
        discriminant,
        solutions,
        extension,
    })
}

/// Number of distinct projective roots of `qa x^2 + w xy + qb y^2` over a
/// finite field, by direct scan of `P^1`. Used to cross-check the rational
/// solver against finite-field counts.
pub fn projective_root_count<F: EnumerableField>(
    field: &F,
    qa: &F::Elem,
    w: &F::Elem,
    qb: &F::Elem,
) -> u64 {
    let mut count = 0;
    // Points (x : 1).
    for i in 0..field.order() {
        let x = field.element_at(i);
        let val = field.add(
            &field.add(&field.mul(qa, &field.mul(&x, &x)), &field.mul(w, &x)),
            qb,
        );
        if field.is_zero(&val) {
            count += 1;
        }
    }
    // The point (1 : 0).
    if field.is_zero(qa) {
        count += 1;
    }
    count
}
