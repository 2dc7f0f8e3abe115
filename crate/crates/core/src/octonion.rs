//! Split octonions as pairs of quaternions, and their 7-dimensional
//! imaginary subspace.
//!
//! The product on pairs is
//! `(a, b) (c, d) = (a c + d conj(b), conj(a) d + c b)`,
//! the quadratic form is `Q(a, b) = |a|^2 - |b|^2`, and conjugation is
//! `(a, b) -> (conj(a), -b)`. The imaginaries carry the fixed ordered basis
//! `e1..e7 = (i,0), (j,0), (k,0), (0,1), (0,i), (0,j), (0,k)`, on which the
//! dot form is `diag(1, 1, 1, -1, -1, -1, -1)` (signature (3,4)) and the
//! cross product is the half-commutator `x × y = (xy - yx) / 2`.

use crate::quaternion::Quaternion;
use crate::scalar::{rint, Rat, Scalar};
use num_traits::Zero;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Split octonion `(first, second)` in the pair-of-quaternions model.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitOctonion<S> {
    pub first: Quaternion<S>,
    pub second: Quaternion<S>,
}

impl<S: Scalar> SplitOctonion<S> {
    pub fn new(first: Quaternion<S>, second: Quaternion<S>) -> Self {
        SplitOctonion { first, second }
    }

    pub fn zero() -> Self {
        Self::new(Quaternion::zero(), Quaternion::zero())
    }

    pub fn one() -> Self {
        Self::new(Quaternion::one(), Quaternion::zero())
    }

    /// Conjugate `(conj(a), -b)`; fixes the unit, negates imaginaries.
    pub fn conj(&self) -> Self {
        Self::new(self.first.conj(), -&self.second)
    }

    /// Split quadratic form `Q(a, b) = |a|^2 - |b|^2`, signature (4,4).
    pub fn q_form(&self) -> S {
        self.first.norm_sqr() - self.second.norm_sqr()
    }

    /// Polarization of `Q`: `(a,b) · (c,d) = a·c - b·d`.
    pub fn dot(&self, other: &Self) -> S {
        self.first.dot(&other.first) - self.second.dot(&other.second)
    }

    /// Coefficient of the unit.
    pub fn real_part(&self) -> S {
        self.first.a.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.first.scale(s), self.second.scale(s))
    }

    /// Coordinates `[first.a, first.b, first.c, first.d, second.a, second.b, second.c, second.d]`.
    pub fn coords(&self) -> [S; 8] {
        let f = self.first.coords();
        let s = self.second.coords();
        [
            f[0].clone(),
            f[1].clone(),
            f[2].clone(),
            f[3].clone(),
            s[0].clone(),
            s[1].clone(),
            s[2].clone(),
            s[3].clone(),
        ]
    }

    pub fn from_coords(c: [S; 8]) -> Self {
        let [a, b, cc, d, e, f, g, h] = c;
        Self::new(Quaternion::new(a, b, cc, d), Quaternion::new(e, f, g, h))
    }

    /// Imaginary part as a 7-vector, discarding the unit coefficient.
    pub fn imaginary_part(&self) -> Imaginary<S> {
        Imaginary([
            self.first.b.clone(),
            self.first.c.clone(),
            self.first.d.clone(),
            self.second.a.clone(),
            self.second.b.clone(),
            self.second.c.clone(),
            self.second.d.clone(),
        ])
    }
}

impl<S: Scalar> Add for &SplitOctonion<S> {
    type Output = SplitOctonion<S>;
    fn add(self, rhs: &SplitOctonion<S>) -> SplitOctonion<S> {
        SplitOctonion::new(&self.first + &rhs.first, &self.second + &rhs.second)
    }
}

impl<S: Scalar> Sub for &SplitOctonion<S> {
    type Output = SplitOctonion<S>;
    fn sub(self, rhs: &SplitOctonion<S>) -> SplitOctonion<S> {
        SplitOctonion::new(&self.first - &rhs.first, &self.second - &rhs.second)
    }
}

impl<S: Scalar> Neg for &SplitOctonion<S> {
    type Output = SplitOctonion<S>;
    fn neg(self) -> SplitOctonion<S> {
        SplitOctonion::new(-&self.first, -&self.second)
    }
}

/// `(a, b) (c, d) = (a c + d conj(b), conj(a) d + c b)`.
impl<S: Scalar> Mul for &SplitOctonion<S> {
    type Output = SplitOctonion<S>;
    fn mul(self, rhs: &SplitOctonion<S>) -> SplitOctonion<S> {
        let (a, b) = (&self.first, &self.second);
        let (c, d) = (&rhs.first, &rhs.second);
        SplitOctonion::new(&(a * c) + &(d * &b.conj()), &(&a.conj() * d) + &(c * b))
    }
}

impl<S: Scalar> Mul for SplitOctonion<S> {
    type Output = SplitOctonion<S>;
    fn mul(self, rhs: SplitOctonion<S>) -> SplitOctonion<S> {
        &self * &rhs
    }
}

/// Associator `(xy)z - x(yz)`; vanishes on any two-generated subalgebra.
pub fn associator<S: Scalar>(
    x: &SplitOctonion<S>,
    y: &SplitOctonion<S>,
    z: &SplitOctonion<S>,
) -> SplitOctonion<S> {
    &(&(x * y) * z) - &(x * &(y * z))
}

/// Imaginary split octonion in coordinates over the fixed basis `e1..e7`.
#[derive(Clone, Debug, PartialEq)]
pub struct Imaginary<S>(pub [S; 7]);

/// Signs of the dot form on the basis: `e1..e3` spacelike, `e4..e7` timelike.
pub const GRAM_SIGNS: [i8; 7] = [1, 1, 1, -1, -1, -1, -1];

#[derive(Clone, Copy)]
struct CrossEntry {
    sign: i8,
    idx: u8,
}

static CROSS_TABLE: OnceLock<[[CrossEntry; 7]; 7]> = OnceLock::new();

/// Structure constants of the cross product: `e_i × e_j` is always `0` or a
/// signed basis vector. Built once from the definitional half-commutator.
fn cross_table() -> &'static [[CrossEntry; 7]; 7] {
    CROSS_TABLE.get_or_init(|| {
        let mut table = [[CrossEntry { sign: 0, idx: 0 }; 7]; 7];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let c = cross_via_product(&Imaginary::<Rat>::basis(i), &Imaginary::basis(j));
                let mut entry = CrossEntry { sign: 0, idx: 0 };
                for (k, coeff) in c.0.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    assert!(entry.sign == 0, "basis cross product is not monomial");
                    let sign = if *coeff == rint(1) {
                        1
                    } else if *coeff == rint(-1) {
                        -1
                    } else {
                        panic!("basis cross coefficient is not a unit")
                    };
                    entry = CrossEntry { sign, idx: k as u8 };
                }
                *slot = entry;
            }
        }
        table
    })
}

/// `x × y = (xy - yx) / 2` computed through the split-octonion product.
/// The real parts of `xy` and `yx` coincide, so the commutator is imaginary.
pub fn cross_via_product<S: Scalar>(x: &Imaginary<S>, y: &Imaginary<S>) -> Imaginary<S> {
    let p = &x.embed() * &y.embed();
    let q = &y.embed() * &x.embed();
    let half = S::one() / S::from_i64(2);
    (&p - &q).imaginary_part().scale(&half)
}

/// `x · y = -Re(xy + yx) / 2` computed through the split-octonion product.
pub fn dot_via_product<S: Scalar>(x: &Imaginary<S>, y: &Imaginary<S>) -> S {
    let p = &x.embed() * &y.embed();
    let q = &y.embed() * &x.embed();
    -(p.real_part() + q.real_part()) / S::from_i64(2)
}

impl<S: Scalar> Imaginary<S> {
    pub fn zero() -> Self {
        Imaginary(std::array::from_fn(|_| S::zero()))
    }

    /// Basis vector `e_{i+1}` for `i` in `0..7`.
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = S::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Embedding into the split octonions with zero real part.
    pub fn embed(&self) -> SplitOctonion<S> {
        let c = &self.0;
        SplitOctonion::new(
            Quaternion::new(S::zero(), c[0].clone(), c[1].clone(), c[2].clone()),
            Quaternion::new(c[3].clone(), c[4].clone(), c[5].clone(), c[6].clone()),
        )
    }

    /// Split-octonion product of two imaginaries (in general not imaginary).
    pub fn mul_embedded(&self, other: &Self) -> SplitOctonion<S> {
        &self.embed() * &other.embed()
    }

    /// Dot form of signature (3,4): `Σ_i g_i x_i y_i` with `g = GRAM_SIGNS`.
    pub fn dot(&self, other: &Self) -> S {
        let mut acc = S::zero();
        for ((a, b), sign) in self.0.iter().zip(&other.0).zip(GRAM_SIGNS) {
            let term = a.clone() * b.clone();
            if sign > 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }

    /// Cross product `x × y = (xy - yx) / 2`, evaluated through the cached
    /// basis structure constants.
    pub fn cross(&self, other: &Self) -> Self {
        let table = cross_table();
        let mut out = Self::zero();
        for (xi, row) in self.0.iter().zip(table) {
            if xi.is_zero() {
                continue;
            }
            for (yj, e) in other.0.iter().zip(row) {
                if e.sign == 0 || yj.is_zero() {
                    continue;
                }
                let term = xi.clone() * yj.clone();
                let k = e.idx as usize;
                if e.sign > 0 {
                    out.0[k] = out.0[k].clone() + term;
                } else {
                    out.0[k] = out.0[k].clone() - term;
                }
            }
        }
        out
    }

    /// `Q(x) = x · x`; `x` is null when this vanishes.
    pub fn q_form(&self) -> S {
        self.dot(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        Imaginary(std::array::from_fn(|i| {
            self.0[i].clone() + other.0[i].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Imaginary(std::array::from_fn(|i| {
            self.0[i].clone() - other.0[i].clone()
        }))
    }

    pub fn neg(&self) -> Self {
        Imaginary(std::array::from_fn(|i| -self.0[i].clone()))
    }

    pub fn scale(&self, s: &S) -> Self {
        Imaginary(std::array::from_fn(|i| self.0[i].clone() * s.clone()))
    }

    /// Index of the first nonzero coordinate.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }
}

/// Shorthand for an imaginary with integer coordinates.
pub fn imag_from_i64<S: Scalar>(c: [i64; 7]) -> Imaginary<S> {
    Imaginary(std::array::from_fn(|i| S::from_i64(c[i])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint};
    use proptest::prelude::*;

    type Oct = SplitOctonion<Rat>;
    type Im = Imaginary<Rat>;

    fn e(i: usize) -> Im {
        Im::basis(i - 1)
    }

    fn oct_e(i: usize) -> Oct {
        e(i).embed()
    }

    /// `(i, i)` as an imaginary 7-vector.
    fn x_ii() -> Im {
        imag_from_i64([1, 0, 0, 0, 1, 0, 0])
    }

    /// `(j, j)`.
    fn y_jj() -> Im {
        imag_from_i64([0, 1, 0, 0, 0, 1, 0])
    }

    #[test]
    fn unit_is_identity() {
        let x = Oct::from_coords(std::array::from_fn(|i| rint(i as i64 - 3)));
        assert_eq!(&Oct::one() * &x, x);
        assert_eq!(&x * &Oct::one(), x);
    }

    #[test]
    fn frozen_basis_products() {
        // e1 e4 = -e5, expanded by hand from the pair product.
        assert_eq!(&oct_e(1) * &oct_e(4), -&oct_e(5));
        // e3 e7 = e4 and e7 e3 = -e4.
        assert_eq!(&oct_e(3) * &oct_e(7), oct_e(4));
        assert_eq!(&oct_e(7) * &oct_e(3), -&oct_e(4));
    }

    #[test]
    fn null_square_example() {
        // (i, i) squares to zero: Q = 1 - 1 = 0 and it annihilates itself.
        let x = x_ii().embed();
        assert_eq!(x.q_form(), rint(0));
        assert!((&x * &x).is_zero());
    }

    #[test]
    fn frozen_cross_and_dot_examples() {
        // (i,i) × (j,j) = (2k, -2k)
        let c = x_ii().cross(&y_jj());
        assert_eq!(c, imag_from_i64([0, 0, 2, 0, 0, 0, -2]));
        // (i,i) · (j,j) = 0 and (i,i) · (i,-i) = 2
        assert_eq!(x_ii().dot(&y_jj()), rint(0));
        assert_eq!(x_ii().dot(&imag_from_i64([1, 0, 0, 0, -1, 0, 0])), rint(2));
    }

    #[test]
    fn gram_signature() {
        for (i, sign) in GRAM_SIGNS.iter().enumerate() {
            for j in 0..7 {
                let expect = if i == j { rint(*sign as i64) } else { rint(0) };
                assert_eq!(Im::basis(i).dot(&Im::basis(j)), expect);
                assert_eq!(dot_via_product(&Im::basis(i), &Im::basis(j)), expect);
            }
        }
    }

    #[test]
    fn cross_table_matches_half_commutator() {
        for i in 0..7 {
            for j in 0..7 {
                let (a, b) = (Im::basis(i), Im::basis(j));
                assert_eq!(a.cross(&b), cross_via_product(&a, &b));
            }
        }
    }

    #[test]
    fn frozen_associator_example() {
        // [e1, e2, e4] = (e1 e2) e4 - e1 (e2 e4) = -2 e7
        let a = associator(&oct_e(1), &oct_e(2), &oct_e(4));
        assert_eq!(a, oct_e(7).scale(&rint(-2)));
    }

    #[test]
    fn apartment_example_values() {
        // Worked triple x = (i,i), y = (j,j), z = (k/8, k/8).
        let z = Imaginary([
            rint(0),
            rint(0),
            rat(1, 8),
            rint(0),
            rint(0),
            rint(0),
            rat(1, 8),
        ]);
        let xy = x_ii().cross(&y_jj());
        let yz = y_jj().cross(&z);
        let zx = z.cross(&x_ii());
        assert_eq!(xy, imag_from_i64([0, 0, 2, 0, 0, 0, -2]));
        assert_eq!(
            yz,
            Imaginary([
                rat(1, 4),
                rint(0),
                rint(0),
                rint(0),
                rat(-1, 4),
                rint(0),
                rint(0)
            ])
        );
        assert_eq!(
            zx,
            Imaginary([
                rint(0),
                rat(1, 4),
                rint(0),
                rint(0),
                rint(0),
                rat(-1, 4),
                rint(0)
            ])
        );
        // Normalization (x × y) · z = 1/2.
        assert_eq!(xy.dot(&z), rat(1, 2));
        // Middle vertex w = 2 (x × y) × z = e4; w · w = -1, w × x = x.
        let w = xy.cross(&z).scale(&rint(2));
        assert_eq!(w, e(4));
        assert_eq!(w.q_form(), rint(-1));
        assert_eq!(w.cross(&x_ii()), x_ii());
    }

    fn oct_strategy() -> impl Strategy<Value = Oct> {
        prop::array::uniform8(-9i64..=9)
            .prop_map(|c| Oct::from_coords(std::array::from_fn(|i| rint(c[i]))))
    }

    proptest! {
        #[test]
        fn composition_law(x in oct_strategy(), y in oct_strategy()) {
            prop_assert_eq!((&x * &y).q_form(), x.q_form() * y.q_form());
        }

        #[test]
        fn conjugation_antiautomorphism(x in oct_strategy(), y in oct_strategy()) {
            prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(x.conj().q_form(), x.q_form());
        }

        #[test]
        fn imaginary_decomposition(a in prop::array::uniform7(-9i64..=9), b in prop::array::uniform7(-9i64..=9)) {
            // xy = x × y - (x · y) 1 for imaginaries.
            let x = imag_from_i64::<Rat>(a);
            let y = imag_from_i64::<Rat>(b);
            let prod = x.mul_embedded(&y);
            let expect = &x.cross(&y).embed() - &Oct::one().scale(&x.dot(&y));
            prop_assert_eq!(prod, expect);
        }

        #[test]
        fn alternativity(x in oct_strategy(), y in oct_strategy()) {
            prop_assert!(associator(&x, &x, &y).is_zero());
            prop_assert!(associator(&x, &y, &y).is_zero());
            prop_assert!(associator(&x, &y, &x).is_zero());
        }
    }
}
