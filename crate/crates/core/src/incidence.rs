//! Projectivized null cone: points, lines, roll distance, midpoints.
//!
//! A point is a null line `⟨x⟩` (Q(x) = 0, x ≠ 0) in the imaginary split
//! octonions; a line is a 2-dimensional null subalgebra (all products of its
//! elements vanish). Two distinct points are one roll apart when they span a
//! line (`xy = 0`), two rolls apart when `xy ≠ 0` but `x · y = 0`, and three
//! rolls apart otherwise. Distance-2 pairs have the unique midpoint `⟨x × y⟩`.

use crate::error::GeomError;
use crate::linalg::Mat;
use crate::octonion::Imaginary;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Point of the projectivized null cone, stored as the canonical
/// representative whose first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq)]
pub struct PcPoint<S> {
    rep: Imaginary<S>,
}

impl<S: Scalar> PcPoint<S> {
    /// Projectivize a nonzero null vector; rejects zero and non-null input.
    pub fn from_vector(x: &Imaginary<S>) -> Result<Self, GeomError> {
        let Some(lead) = x.first_nonzero() else {
            return Err(GeomError::ZeroVector);
        };
        let q = x.q_form();
        if !q.is_zero() {
            return Err(GeomError::NotNull {
                q: format!("{}", q),
            });
        }
        let inv = S::one() / x.0[lead].clone();
        Ok(PcPoint { rep: x.scale(&inv) })
    }

    /// Canonical representative (first nonzero coordinate is 1).
    pub fn rep(&self) -> &Imaginary<S> {
        &self.rep
    }
}

/// Number of rolls separating two points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RollDistance {
    Zero,
    One,
    Two,
    Three,
}

impl RollDistance {
    pub fn value(self) -> u8 {
        match self {
            RollDistance::Zero => 0,
            RollDistance::One => 1,
            RollDistance::Two => 2,
            RollDistance::Three => 3,
        }
    }
}

/// Diagonal orbit of an ordered pair of points, labelled by roll distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitClass {
    X0,
    X1,
    X2,
    X3,
}

impl std::fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OrbitClass::X0 => "X0",
            OrbitClass::X1 => "X1",
            OrbitClass::X2 => "X2",
            OrbitClass::X3 => "X3",
        };
        f.write_str(s)
    }
}

impl OrbitClass {
    pub fn from_distance(d: RollDistance) -> Self {
        match d {
            RollDistance::Zero => OrbitClass::X0,
            RollDistance::One => OrbitClass::X1,
            RollDistance::Two => OrbitClass::X2,
            RollDistance::Three => OrbitClass::X3,
        }
    }
}

/// Roll distance between two points: 0 when equal; 1 when the representatives
/// multiply to zero; 2 when they are orthogonal but do not annihilate;
/// 3 otherwise.
pub fn roll_distance<S: Scalar>(a: &PcPoint<S>, b: &PcPoint<S>) -> RollDistance {
    if a == b {
        return RollDistance::Zero;
    }
    let (x, y) = (a.rep(), b.rep());
    if x.cross(y).is_zero() {
        // For orthogonal nulls xy = x × y, so vanishing cross means xy = 0.
        return RollDistance::One;
    }
    if x.dot(y).is_zero() {
        return RollDistance::Two;
    }
    RollDistance::Three
}

pub fn classify_pair<S: Scalar>(a: &PcPoint<S>, b: &PcPoint<S>) -> OrbitClass {
    OrbitClass::from_distance(roll_distance(a, b))
}

/// The matrix of `y ↦ yx` on imaginaries, as an 8×7 matrix over the
/// octonion coordinate basis (row 0 is the real part).
fn right_mul_matrix<S: Scalar>(x: &Imaginary<S>) -> Mat<S> {
    let mut m = Mat::zeros(8, 7);
    for j in 0..7 {
        let img = Imaginary::basis(j).mul_embedded(x);
        for (r, c) in img.coords().iter().enumerate() {
            *m.at_mut(r, j) = c.clone();
        }
    }
    m
}

/// Canonical basis of the annihilator `Ann_x = {y imaginary : yx = 0}`.
///
/// For null `x` this is a 3-dimensional null subalgebra containing `x`; the
/// returned rows are the RREF canonical basis of that subspace.
pub fn annihilator<S: Scalar>(p: &PcPoint<S>) -> [Imaginary<S>; 3] {
    let kernel = annihilator_span(p);
    assert_eq!(kernel.len(), 3, "annihilator of a null point has rank 3");
    [kernel[0].clone(), kernel[1].clone(), kernel[2].clone()]
}

/// Annihilator as a canonical list of basis vectors (length 3 for null input).
pub fn annihilator_span<S: Scalar>(p: &PcPoint<S>) -> Vec<Imaginary<S>> {
    let kernel = right_mul_matrix(p.rep()).kernel_basis();
    // Canonicalize the spanning set so equal subspaces compare equal.
    let canon = Mat::from_rows(kernel).row_space_canonical();
    canon
        .into_iter()
        .map(|v| Imaginary(std::array::from_fn(|i| v[i].clone())))
        .collect()
}

/// A line: 2-dimensional null subalgebra, held by its canonical (RREF) basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LineSubalgebra<S> {
    basis: [Imaginary<S>; 2],
}

impl<S: Scalar> LineSubalgebra<S> {
    /// The unique line through two points one roll apart.
    pub fn through(a: &PcPoint<S>, b: &PcPoint<S>) -> Result<Self, GeomError> {
        match roll_distance(a, b) {
            RollDistance::Zero => Err(GeomError::SamePoint),
            RollDistance::One => {
                let rows = vec![a.rep().0.to_vec(), b.rep().0.to_vec()];
                let canon = Mat::from_rows(rows).row_space_canonical();
                assert_eq!(canon.len(), 2);
                let basis = [
                    Imaginary(std::array::from_fn(|i| canon[0][i].clone())),
                    Imaginary(std::array::from_fn(|i| canon[1][i].clone())),
                ];
                let line = LineSubalgebra { basis };
                debug_assert!(line.is_null_subalgebra());
                Ok(line)
            }
            d => Err(GeomError::NotCollinear {
                distance: d.value(),
            }),
        }
    }

    pub fn basis(&self) -> &[Imaginary<S>; 2] {
        &self.basis
    }

    /// All products of basis elements vanish (including squares).
    pub fn is_null_subalgebra(&self) -> bool {
        let [u, v] = &self.basis;
        u.mul_embedded(u).is_zero()
            && v.mul_embedded(v).is_zero()
            && u.mul_embedded(v).is_zero()
            && v.mul_embedded(u).is_zero()
    }

    /// Whether a point lies on the line.
    pub fn contains(&self, p: &PcPoint<S>) -> bool {
        let rows = vec![
            self.basis[0].0.to_vec(),
            self.basis[1].0.to_vec(),
            p.rep().0.to_vec(),
        ];
        Mat::from_rows(rows).rank() == 2
    }
}

/// Midpoint `⟨x × z⟩` of a distance-2 pair; the unique point one roll from
/// each endpoint.
pub fn midpoint<S: Scalar>(a: &PcPoint<S>, c: &PcPoint<S>) -> Result<PcPoint<S>, GeomError> {
    match roll_distance(a, c) {
        RollDistance::Two => {
            let m = a.rep().cross(c.rep());
            Ok(PcPoint::from_vector(&m).expect("cross of a distance-2 pair is a nonzero null"))
        }
        d => Err(GeomError::NotTwoRolls {
            distance: d.value(),
        }),
    }
}

/// The joint annihilation kernel `{y : yx = 0 and yz = 0}` as canonical rows.
/// For a distance-2 pair it is one-dimensional, spanned by `x × z`.
pub fn joint_annihilation_kernel<S: Scalar>(a: &PcPoint<S>, c: &PcPoint<S>) -> Vec<Imaginary<S>> {
    let top = right_mul_matrix(a.rep());
    let bottom = right_mul_matrix(c.rep());
    let mut stacked = Mat::zeros(16, 7);
    for r in 0..8 {
        for j in 0..7 {
            *stacked.at_mut(r, j) = top.at(r, j).clone();
            *stacked.at_mut(8 + r, j) = bottom.at(r, j).clone();
        }
    }
    let canon = Mat::from_rows(stacked.kernel_basis()).row_space_canonical();
    canon
        .into_iter()
        .map(|v| Imaginary(std::array::from_fn(|i| v[i].clone())))
        .collect()
}
