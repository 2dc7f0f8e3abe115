//! Seeded generators for exact and floating-point test data.
//!
//! Exact samplers stay inside the null cone by construction: a reflection
//! `y(m) = Q(m)·y₀ − 2(y₀·m)·m` maps null vectors to null vectors for *any*
//! `m`, so random integer (or Gaussian-integer) choices of `m` walk the cone
//! without ever leaving it. Rejection is only used for open conditions
//! (nonzero, at the requested roll distance).
//!
//! Every sampler takes `&mut impl Rng`; [`rng_for`] derives an independent
//! per-sample stream from a base seed and an index, so batches can be
//! evaluated in any order (or in parallel) with identical results.

use crate::incidence::{annihilator, roll_distance, PcPoint, RollDistance};
use crate::kinematics::RollingLineParams;
use crate::linalg::Mat;
use crate::octonion::{Imaginary, SplitOctonion};
use crate::quaternion::Quaternion;
use crate::scalar::{crint, CRat, Rat, Scalar};
use crate::triples::{
    candidate_list, complete_pair, dot_row, g2_from_triples, two_roll_partner, G2Element,
    NullTriple,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Mix a base seed with a sample index (splitmix-style finalizer), so
/// per-sample streams are decorrelated and order-independent.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generator for sample `index` of a batch: the same `(seed, index)` always
/// yields the same stream, regardless of evaluation order.
pub fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index as u64))
}

// Coefficient range for exact samplers. Kept small deliberately: every
// downstream construction (completion, apartments, transports) multiplies
// magnitudes, and big-rational cost grows with operand size.
fn small_int<R: Rng>(rng: &mut R) -> i64 {
    rng.gen_range(-3..=3)
}

fn gaussian_int<R: Rng>(rng: &mut R) -> CRat {
    crint(small_int(rng), small_int(rng))
}

/// Null-preserving reflection of `x0` through `m`.
fn reflect<S: Scalar>(x0: &Imaginary<S>, m: &Imaginary<S>) -> Imaginary<S> {
    let two_dot = S::from_i64(2) * x0.dot(m);
    x0.scale(&m.q_form()).sub(&m.scale(&two_dot))
}

fn null_via_reflection<S: Scalar, R: Rng>(
    rng: &mut R,
    coeff: &impl Fn(&mut R) -> S,
) -> Imaginary<S> {
    let candidates = candidate_list::<S>();
    loop {
        let x0 = &candidates[rng.gen_range(0..candidates.len())];
        let m = Imaginary(std::array::from_fn(|_| coeff(rng)));
        let x = reflect(x0, &m);
        if !x.is_zero() {
            debug_assert!(x.q_form().is_zero());
            return x;
        }
    }
}

/// Dense random imaginary vector with small integer coordinates (nonzero,
/// not null in general).
pub fn random_imaginary<R: Rng>(rng: &mut R) -> Imaginary<Rat> {
    loop {
        let v = Imaginary(std::array::from_fn(|_| Rat::from_i64(small_int(rng))));
        if !v.is_zero() {
            return v;
        }
    }
}

/// Dense random algebra element with small integer coordinates.
pub fn random_octonion<R: Rng>(rng: &mut R) -> SplitOctonion<Rat> {
    SplitOctonion::from_coords(std::array::from_fn(|_| Rat::from_i64(small_int(rng))))
}

/// Random nonzero null vector with rational coordinates.
pub fn random_null<R: Rng>(rng: &mut R) -> Imaginary<Rat> {
    null_via_reflection(rng, &|rng: &mut R| Rat::from_i64(small_int(rng)))
}

/// Random nonzero null vector with complex rational coordinates.
pub fn random_null_complex<R: Rng>(rng: &mut R) -> Imaginary<CRat> {
    null_via_reflection(rng, &gaussian_int)
}

fn point<S: Scalar>(v: &Imaginary<S>) -> PcPoint<S> {
    PcPoint::from_vector(v).expect("sampled vectors are nonzero nulls")
}

/// Pair of representatives of the *same* point, with independent scalings.
pub fn random_distance0_pair<R: Rng>(rng: &mut R) -> (Imaginary<Rat>, Imaginary<Rat>) {
    let x = random_null(rng);
    let num = loop {
        let n = small_int(rng);
        if n != 0 {
            break n;
        }
    };
    let scale = Rat::new(num.into(), rng.gen_range(1i64..=4).into());
    let y = x.scale(&scale);
    (x, y)
}

/// Pair one roll apart: the partner is a random annihilator combination
/// (every such combination is null and annihilates the base point), rejected
/// until independent.
pub fn random_distance1_pair<R: Rng>(rng: &mut R) -> (Imaginary<Rat>, Imaginary<Rat>) {
    loop {
        let x = random_null(rng);
        let px = point(&x);
        let ann = annihilator(&px);
        for _ in 0..16 {
            let mut y = Imaginary::zero();
            for row in &ann {
                y = y.add(&row.scale(&Rat::from_i64(small_int(rng))));
            }
            if y.is_zero() {
                continue;
            }
            if roll_distance(&px, &point(&y)) == RollDistance::One {
                return (x, y);
            }
        }
    }
}

fn distance2_with<S: Scalar, R: Rng>(
    rng: &mut R,
    coeff: &impl Fn(&mut R) -> S,
) -> (Imaginary<S>, Imaginary<S>) {
    loop {
        let x = null_via_reflection(rng, coeff);
        let px = point(&x);
        let y0 = two_roll_partner(&px);
        // Reflections through m ⊥ x keep the partner null, orthogonal to x,
        // and generically still two rolls away.
        let kernel: Vec<Imaginary<S>> = Mat::from_rows(vec![dot_row(&x)])
            .kernel_basis()
            .into_iter()
            .map(|v| Imaginary(std::array::from_fn(|i| v[i].clone())))
            .collect();
        for _ in 0..16 {
            let mut m = Imaginary::zero();
            for v in &kernel {
                m = m.add(&v.scale(&coeff(rng)));
            }
            let y = reflect(&y0, &m);
            if y.is_zero() {
                continue;
            }
            if roll_distance(&px, &point(&y)) == RollDistance::Two {
                return (x, y);
            }
        }
    }
}

/// Pair two rolls apart, rational coordinates.
pub fn random_distance2_pair<R: Rng>(rng: &mut R) -> (Imaginary<Rat>, Imaginary<Rat>) {
    distance2_with(rng, &|rng: &mut R| Rat::from_i64(small_int(rng)))
}

/// Pair two rolls apart, complex rational coordinates.
pub fn random_complex_two_roll<R: Rng>(rng: &mut R) -> (Imaginary<CRat>, Imaginary<CRat>) {
    distance2_with(rng, &gaussian_int)
}

/// Pair three rolls apart (the generic position).
pub fn random_distance3_pair<R: Rng>(rng: &mut R) -> (Imaginary<Rat>, Imaginary<Rat>) {
    loop {
        let x = random_null(rng);
        let y = random_null(rng);
        if roll_distance(&point(&x), &point(&y)) == RollDistance::Three {
            return (x, y);
        }
    }
}

/// Pair at exactly the requested roll distance.
pub fn random_pair_at<R: Rng>(
    rng: &mut R,
    distance: RollDistance,
) -> (Imaginary<Rat>, Imaginary<Rat>) {
    match distance {
        RollDistance::Zero => random_distance0_pair(rng),
        RollDistance::One => random_distance1_pair(rng),
        RollDistance::Two => random_distance2_pair(rng),
        RollDistance::Three => random_distance3_pair(rng),
    }
}

/// Random valid null triple: a two-roll pair completed to its unique triple.
pub fn random_triple<R: Rng>(rng: &mut R) -> NullTriple<Rat> {
    let (x, y) = random_distance2_pair(rng);
    complete_pair(&x, &y).expect("two-roll pairs complete to a triple")
}

/// Random group element: the unique map between two random triples.
pub fn random_g2<R: Rng>(rng: &mut R) -> G2Element {
    let from = random_triple(rng);
    let to = random_triple(rng);
    g2_from_triples(&from, &to)
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Unit 3-vector by rejection from the cube.
pub fn random_unit3<R: Rng>(rng: &mut R) -> [f64; 3] {
    loop {
        let v = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let n = norm3(v);
        if n > 0.2 && n <= 1.0 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

/// Orthonormal pair `(u, w)` via Gram-Schmidt with rejection.
pub fn random_orthonormal_pair<R: Rng>(rng: &mut R) -> ([f64; 3], [f64; 3]) {
    let u = random_unit3(rng);
    loop {
        let raw = random_unit3(rng);
        let d = raw[0] * u[0] + raw[1] * u[1] + raw[2] * u[2];
        let w = [raw[0] - d * u[0], raw[1] - d * u[1], raw[2] - d * u[2]];
        let n = norm3(w);
        if n > 0.2 {
            return (u, [w[0] / n, w[1] / n, w[2] / n]);
        }
    }
}

/// Unit quaternion by rejection from the 4-cube.
pub fn random_unit_quaternion<R: Rng>(rng: &mut R) -> Quaternion<f64> {
    loop {
        let q = Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = q.norm();
        if n > 0.2 && n <= 1.0 {
            return q.normalized();
        }
    }
}

/// Random admissible rolling-line parameters at the given radius ratio.
pub fn random_rolling_params<R: Rng>(rng: &mut R, ratio: f64) -> RollingLineParams {
    let (u, w) = random_orthonormal_pair(rng);
    let q = random_unit_quaternion(rng);
    RollingLineParams::new(Quaternion::from_vec3(u), Quaternion::from_vec3(w), q, ratio)
        .expect("sampled parameters are admissible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::classify_pair;
    use crate::incidence::OrbitClass;
    use crate::triples::validate_triple;
    use num_traits::Zero;

    #[test]
    fn derived_seeds_are_stable_and_distinct() {
        let a = derive_seed(42, 0);
        assert_eq!(a, derive_seed(42, 0));
        let seeds: Vec<u64> = (0..100).map(|i| derive_seed(42, i)).collect();
        let mut unique = seeds.clone();
        unique.sort_unstable();
        unique.dedup();
        assert_eq!(unique.len(), seeds.len());
    }

    #[test]
    fn sampled_nulls_are_null_and_deterministic() {
        for i in 0..50 {
            let x = random_null(&mut rng_for(7, i));
            assert!(!x.is_zero());
            assert!(x.q_form().is_zero());
        }
        let a = random_null(&mut rng_for(7, 3));
        let b = random_null(&mut rng_for(7, 3));
        assert_eq!(a, b);
        let c = random_null(&mut rng_for(7, 4));
        assert_ne!(a, c);
    }

    #[test]
    fn complex_nulls_are_null() {
        let mut seen_complex = false;
        for i in 0..20 {
            let x = random_null_complex(&mut rng_for(11, i));
            assert!(!x.is_zero());
            assert!(x.q_form().is_zero());
            seen_complex |= x.0.iter().any(|c| !c.im.is_zero());
        }
        assert!(seen_complex, "complex sampler should leave the real locus");
    }

    #[test]
    fn pairs_land_at_requested_distances() {
        for i in 0..15 {
            let mut rng = rng_for(100, i);
            for (d, class) in [
                (RollDistance::Zero, OrbitClass::X0),
                (RollDistance::One, OrbitClass::X1),
                (RollDistance::Two, OrbitClass::X2),
                (RollDistance::Three, OrbitClass::X3),
            ] {
                let (x, y) = random_pair_at(&mut rng, d);
                let (px, py) = (point(&x), point(&y));
                assert_eq!(roll_distance(&px, &py), d);
                assert_eq!(classify_pair(&px, &py), class);
            }
        }
    }

    #[test]
    fn complex_two_roll_pairs() {
        for i in 0..10 {
            let (x, z) = random_complex_two_roll(&mut rng_for(5, i));
            assert_eq!(roll_distance(&point(&x), &point(&z)), RollDistance::Two);
        }
    }

    #[test]
    fn triples_validate_and_elements_preserve_forms() {
        for i in 0..10 {
            let mut rng = rng_for(9, i);
            let t = random_triple(&mut rng);
            assert!(validate_triple(t.x(), t.y(), t.z()).is_ok());
            let g = random_g2(&mut rng);
            let (a, b) = random_distance3_pair(&mut rng);
            assert_eq!(g.apply(&a).dot(&g.apply(&b)), a.dot(&b));
        }
    }

    #[test]
    fn float_samplers_produce_admissible_inputs() {
        for i in 0..20 {
            let mut rng = rng_for(3, i);
            let (u, w) = random_orthonormal_pair(&mut rng);
            assert!((norm3(u) - 1.0).abs() < 1e-12);
            assert!((norm3(w) - 1.0).abs() < 1e-12);
            let d = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
            assert!(d.abs() < 1e-12);
            let q = random_unit_quaternion(&mut rng);
            assert!((q.norm() - 1.0).abs() < 1e-12);
            let _ = random_rolling_params(&mut rng, 1.0 + (i as f64) / 4.0);
        }
    }
}
