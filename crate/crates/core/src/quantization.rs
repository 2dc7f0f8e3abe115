//! Sections over the complexified null cone and the maps that recover the
//! algebra from them.
//!
//! A vector `w` defines the section `s_w(x) = w · x` on null vectors. Pairs
//! of incident points (two rolls apart, witnessed by the middle point of the
//! correspondence [`in_s`]) evaluate such sections bilinearly; extending
//! bilinearly over all pairs gives the form [`delta`]. The adjoint of `delta`
//! — with the dot form on vectors and the evaluation pairing on sections —
//! sends `e_a ⊗ e_b` back to `e_a × e_b`, and the dot form itself is
//! recovered from the cross product by a trace ([`trace_dot`]).

use crate::error::GeomError;
use crate::incidence::PcPoint;
use crate::linalg::Mat;
use crate::octonion::{Imaginary, GRAM_SIGNS};
use crate::scalar::{CRat, Rat, Scalar};
use num_traits::Zero;

/// Evaluate the section `s_w` at a nonzero null vector: `s_w(x) = w · x`.
pub fn section_eval(w: &Imaginary<CRat>, x: &Imaginary<CRat>) -> Result<CRat, GeomError> {
    if x.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    let q = x.q_form();
    if !q.is_zero() {
        return Err(GeomError::NotNull {
            q: format!("{}", q),
        });
    }
    Ok(w.dot(x))
}

/// Whether `s_w` is a real section, i.e. all coordinates of `w` are real.
pub fn is_real_section(w: &Imaginary<CRat>) -> bool {
    w.0.iter().all(|c| c.im.is_zero())
}

/// Fixed real null vectors spanning the 7-space: realness of `s_w` on these
/// eight evaluations is equivalent to [`is_real_section`].
pub fn real_null_spanning_set() -> [Imaginary<CRat>; 8] {
    let pair = |a: usize, b: usize, sign: i64| {
        let mut v = Imaginary::<CRat>::basis(a);
        v.0[b] = CRat::from_i64(sign);
        v
    };
    [
        pair(0, 3, 1),
        pair(0, 3, -1),
        pair(1, 4, 1),
        pair(1, 4, -1),
        pair(2, 5, 1),
        pair(2, 5, -1),
        pair(0, 6, 1),
        pair(0, 6, -1),
    ]
}

/// Realness of `s_w` tested through its values on the spanning set.
pub fn real_on_spanning_set(w: &Imaginary<CRat>) -> bool {
    real_null_spanning_set()
        .iter()
        .all(|x| w.dot(x).im.is_zero())
}

/// The incidence correspondence: `(a, b, c)` lies in it when the
/// representatives satisfy `xy = 0`, `yz = 0`, and `xz ≠ 0`. When true,
/// `b` is forced to be the middle point `⟨x × z⟩` of the two-roll pair
/// `(a, c)`.
pub fn in_s(a: &PcPoint<CRat>, b: &PcPoint<CRat>, c: &PcPoint<CRat>) -> bool {
    let (x, y, z) = (a.rep(), b.rep(), c.rep());
    x.mul_embedded(y).is_zero() && y.mul_embedded(z).is_zero() && !x.mul_embedded(z).is_zero()
}

/// Bilinear form on pairs of imaginaries, as a 7×7 coefficient array:
/// `B(x ⊗ z) = Σ_ab B_ab x_a z_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bilinear(pub [[CRat; 7]; 7]);

impl Bilinear {
    pub fn eval(&self, x: &Imaginary<CRat>, z: &Imaginary<CRat>) -> CRat {
        let mut acc = CRat::zero();
        for (xa, row) in x.0.iter().zip(&self.0) {
            if xa.is_zero() {
                continue;
            }
            for (entry, zb) in row.iter().zip(&z.0) {
                acc += entry.clone() * xa.clone() * zb.clone();
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        Bilinear(std::array::from_fn(|a| {
            std::array::from_fn(|b| self.0[a][b].clone() + other.0[a][b].clone())
        }))
    }

    pub fn scale(&self, s: &CRat) -> Self {
        Bilinear(std::array::from_fn(|a| {
            std::array::from_fn(|b| self.0[a][b].clone() * s.clone())
        }))
    }
}

/// The bilinear extension of section evaluation over the incidence
/// correspondence: `Δw` has coefficients `B_ab = w · (e_a × e_b)`, so that
/// `Δw(x ⊗ z) = w · (x × z)` for every pair.
pub fn delta(w: &Imaginary<CRat>) -> Bilinear {
    Bilinear(std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            let c = Imaginary::<CRat>::basis(a).cross(&Imaginary::basis(b));
            w.dot(&c)
        })
    }))
}

/// 49×7 matrix of `delta` on the real basis: row index `7a + b` for the pair
/// `(e_a, e_b)`, column `k` for `Δe_k`.
fn delta_matrix() -> Mat<Rat> {
    let mut d = Mat::zeros(49, 7);
    for k in 0..7 {
        let col = delta(&Imaginary::<CRat>::basis(k));
        for a in 0..7 {
            for b in 0..7 {
                let entry = &col.0[a][b];
                assert!(entry.im.is_zero(), "delta of a real vector is real");
                *d.at_mut(7 * a + b, k) = entry.re.clone();
            }
        }
    }
    d
}

/// Adjoint of `delta` on basis tensors: entry `[a][b]` is `Δ*(e_a ⊗ e_b)`,
/// computed as `G⁻¹ Dᵀ` (dot form on the source, evaluation pairing on
/// sections). Recovers the cross product entrywise.
pub fn delta_adjoint() -> [[Imaginary<Rat>; 7]; 7] {
    let dt = delta_matrix().transpose(); // 7×49
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            Imaginary(std::array::from_fn(|k| {
                // (G⁻¹ Dᵀ)_{k,(a,b)} with G diagonal ±1 (its own inverse).
                let v = dt.at(k, 7 * a + b).clone();
                if GRAM_SIGNS[k] > 0 {
                    v
                } else {
                    -v
                }
            }))
        })
    })
}

/// The cross product on basis pairs, for comparison with [`delta_adjoint`].
pub fn cross_tensor() -> [[Imaginary<Rat>; 7]; 7] {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| Imaginary::<Rat>::basis(a).cross(&Imaginary::basis(b)))
    })
}

/// Recover the dot form from the cross product:
/// `a · b = -tr(c ↦ a × (b × c)) / 6`.
pub fn trace_dot<S: Scalar>(a: &Imaginary<S>, b: &Imaginary<S>) -> S {
    let mut trace = S::zero();
    for c in 0..7 {
        let image = a.cross(&b.cross(&Imaginary::basis(c)));
        trace = trace + image.0[c].clone();
    }
    -(trace / S::from_i64(6))
}
