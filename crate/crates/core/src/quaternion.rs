//! Quaternions over a generic scalar field.
//!
//! `Quaternion<Rat>` is the exact building block for split octonions;
//! `Quaternion<f64>` drives the rolling-ball kinematics (unit quaternions
//! standing in for rotations).

use crate::scalar::Scalar;
use std::ops::{Add, Mul, Neg, Sub};

/// `a + b*i + c*j + d*k` with the Hamilton relations `i^2 = j^2 = k^2 = ijk = -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    pub fn i() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    /// Real (scalar) part.
    pub fn re(&self) -> S {
        self.a.clone()
    }

    /// Conjugate `a - b*i - c*j - d*k`.
    pub fn conj(&self) -> Self {
        Self::new(
            self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    /// `|q|^2 = a^2 + b^2 + c^2 + d^2` (positive definite over R).
    pub fn norm_sqr(&self) -> S {
        self.a.clone() * self.a.clone()
            + self.b.clone() * self.b.clone()
            + self.c.clone() * self.c.clone()
            + self.d.clone() * self.d.clone()
    }

    /// Euclidean inner product `Re(conj(p) q)`.
    pub fn dot(&self, other: &Self) -> S {
        self.a.clone() * other.a.clone()
            + self.b.clone() * other.b.clone()
            + self.c.clone() * other.c.clone()
            + self.d.clone() * other.d.clone()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn coords(&self) -> [S; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    pub fn from_coords(c: [S; 4]) -> Self {
        let [a, b, cc, d] = c;
        Self::new(a, b, cc, d)
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
            self.c.clone() + rhs.c.clone(),
            self.d.clone() + rhs.d.clone(),
        )
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.a.clone() - rhs.a.clone(),
            self.b.clone() - rhs.b.clone(),
            self.c.clone() - rhs.c.clone(),
            self.d.clone() - rhs.d.clone(),
        )
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        Quaternion::new(
            -self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }
}

/// Hamilton product.
impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, r: &Quaternion<S>) -> Quaternion<S> {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&r.a, &r.b, &r.c, &r.d);
        Quaternion::new(
            a1.clone() * a2.clone()
                - b1.clone() * b2.clone()
                - c1.clone() * c2.clone()
                - d1.clone() * d2.clone(),
            a1.clone() * b2.clone() + b1.clone() * a2.clone() + c1.clone() * d2.clone()
                - d1.clone() * c2.clone(),
            a1.clone() * c2.clone() - b1.clone() * d2.clone()
                + c1.clone() * a2.clone()
                + d1.clone() * b2.clone(),
            a1.clone() * d2.clone() + b1.clone() * c2.clone() - c1.clone() * b2.clone()
                + d1.clone() * a2.clone(),
        )
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: Quaternion<S>) -> Quaternion<S> {
        &self * &rhs
    }
}

impl Quaternion<f64> {
    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self::new(self.a / n, self.b / n, self.c / n, self.d / n)
    }

    /// Imaginary (vector) part as a 3-vector.
    pub fn vec3(&self) -> [f64; 3] {
        [self.b, self.c, self.d]
    }

    /// Purely imaginary quaternion from a 3-vector.
    pub fn from_vec3(v: [f64; 3]) -> Self {
        Self::new(0.0, v[0], v[1], v[2])
    }

    /// Rotation of `v` by this unit quaternion: vector part of `q v conj(q)`.
    pub fn rotate(&self, v: [f64; 3]) -> [f64; 3] {
        let qv = &(self * &Self::from_vec3(v)) * &self.conj();
        qv.vec3()
    }

    /// 3x3 rotation matrix of the unit quaternion (row-major).
    pub fn rotation_matrix(&self) -> [[f64; 3]; 3] {
        let (w, x, y, z) = (self.a, self.b, self.c, self.d);
        [
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
            ],
            [
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
            ],
            [
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ]
    }
}
