//! Rolling a unit ball around a fixed ball of radius `R` without slipping or
//! twisting, in floating point.
//!
//! A rolling configuration is a contact point and the rolling ball's
//! orientation; orientations are stored as unit quaternions and exposed as
//! rotation matrices. Along a great circle through `u` toward `v = wu` the
//! configuration, spinor, and projectivized-null-cone trajectories are
//!
//! - `so3`: contact `cos Φ u + sin Φ v`, rotation by `(1+R)Φ` about `u × v`,
//! - `su2`: `(e^{2θw} u, e^{(R+1)θw} q)` with `Φ = 2θ`,
//! - `pc`:  `±(e^{2θw} u, e^{-(R-1)θw} u q)` — a null 7-vector.
//!
//! Only at `R = 3` does the `pc` trajectory stay inside one 2-dimensional
//! null subalgebra; [`null_defect`] measures the failure for other ratios.

use crate::error::GeomError;
use crate::octonion::Imaginary;
use crate::par::{self, ExecMode};
use crate::quaternion::Quaternion;

/// Pinned tolerances for the floating-point checks.
pub mod tol {
    /// Validation of unit norms and orthogonality of input parameters.
    pub const PARAM: f64 = 1e-12;
    /// Identities that are exact up to rounding (round trips, covering maps).
    pub const EXACT: f64 = 1e-12;
    /// Identities accumulated through a handful of operations.
    pub const DERIVED: f64 = 1e-10;
    /// Grid maxima and finite-difference residuals.
    pub const COARSE: f64 = 1e-6;
}

/// Magnitude below which a float coordinate is treated as zero when picking
/// the canonical sign of a projective representative.
const SIGN_EPS: f64 = 1e-9;

type Quat = Quaternion<f64>;

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: [f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

/// `cos θ + sin θ · w` for a unit imaginary quaternion `w`.
pub fn quat_exp_imag(w: &Quat, theta: f64) -> Result<Quat, GeomError> {
    if w.a.abs() > tol::PARAM {
        return Err(GeomError::Kinematics(format!(
            "exponential axis must be imaginary (Re = {:e})",
            w.a
        )));
    }
    if (w.norm() - 1.0).abs() > tol::PARAM {
        return Err(GeomError::Kinematics(format!(
            "exponential axis must be a unit vector (|w| = {})",
            w.norm()
        )));
    }
    let (s, c) = theta.sin_cos();
    Ok(Quaternion::new(c, s * w.b, s * w.c, s * w.d))
}

/// Parameters of a rolling line: start direction `u`, turning axis `w`
/// (orthonormal imaginary units), initial orientation `q`, radius ratio.
#[derive(Clone, Debug)]
pub struct RollingLineParams {
    u: Quat,
    w: Quat,
    q: Quat,
    ratio: f64,
}

impl RollingLineParams {
    pub fn new(u: Quat, w: Quat, q: Quat, ratio: f64) -> Result<Self, GeomError> {
        let unit_imaginary = |name: &str, v: &Quat| -> Result<(), GeomError> {
            if v.a.abs() > tol::PARAM {
                return Err(GeomError::Kinematics(format!("{name} must be imaginary")));
            }
            if (v.norm() - 1.0).abs() > tol::PARAM {
                return Err(GeomError::Kinematics(format!(
                    "{name} must be a unit vector"
                )));
            }
            Ok(())
        };
        unit_imaginary("u", &u)?;
        unit_imaginary("w", &w)?;
        if u.dot(&w).abs() > tol::PARAM {
            return Err(GeomError::Kinematics(
                "u and w must be orthogonal".to_string(),
            ));
        }
        if (q.norm() - 1.0).abs() > tol::PARAM {
            return Err(GeomError::Kinematics(
                "q must be a unit quaternion".to_string(),
            ));
        }
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(GeomError::Kinematics(format!(
                "radius ratio must be positive and finite, got {ratio}"
            )));
        }
        Ok(RollingLineParams { u, w, q, ratio })
    }

    /// `u = i`, `w = k`, `q = 1`.
    pub fn standard(ratio: f64) -> Self {
        Self::new(Quaternion::i(), Quaternion::k(), Quaternion::one(), ratio)
            .expect("standard parameters are valid")
    }

    pub fn u(&self) -> &Quat {
        &self.u
    }

    pub fn w(&self) -> &Quat {
        &self.w
    }

    pub fn q(&self) -> &Quat {
        &self.q
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// Second contact direction `v = wu` of the great circle.
    pub fn v(&self) -> Quat {
        &self.w * &self.u
    }
}

/// Contact point on the fixed sphere plus the rolling ball's orientation.
#[derive(Clone, Debug)]
pub struct ContactConfig {
    pub contact: [f64; 3],
    /// Orientation as a unit quaternion; see [`ContactConfig::rotation_matrix`].
    pub rot: Quat,
}

impl ContactConfig {
    pub fn rotation_matrix(&self) -> [[f64; 3]; 3] {
        self.rot.rotation_matrix()
    }
}

/// Spinor-level configuration: contact direction and rotation spinor, both
/// quaternions (the contact direction imaginary).
#[derive(Clone, Debug)]
pub struct SpinorConfig {
    pub contact_dir: Quat,
    pub spin: Quat,
}

/// Class of `(v, q)` under `(v, q) ~ (-v, q)`, stored with the canonical
/// sign of `v` (first coordinate above the zero threshold positive).
#[derive(Clone, Debug)]
pub struct ProjectiveConfig {
    pub v: Quat,
    pub q: Quat,
}

impl ProjectiveConfig {
    pub fn new(v: Quat, q: Quat) -> Self {
        let flip = v
            .vec3()
            .iter()
            .find(|c| c.abs() > SIGN_EPS)
            .is_some_and(|c| *c < 0.0);
        if flip {
            ProjectiveConfig { v: -&v, q }
        } else {
            ProjectiveConfig { v, q }
        }
    }
}

/// Contact trajectory: `contact(Φ) = cos Φ u + sin Φ v`, orientation rotating
/// about `u × v` by `(1+R)Φ` on top of the initial `g`.
pub fn so3_trajectory(
    u: [f64; 3],
    v: [f64; 3],
    g: &Quat,
    ratio: f64,
    phi: f64,
) -> Result<ContactConfig, GeomError> {
    if (norm3(u) - 1.0).abs() > tol::PARAM
        || (norm3(v) - 1.0).abs() > tol::PARAM
        || dot3(u, v).abs() > tol::PARAM
    {
        return Err(GeomError::Kinematics(
            "u and v must be orthonormal".to_string(),
        ));
    }
    let (s, c) = phi.sin_cos();
    let contact = [
        c * u[0] + s * v[0],
        c * u[1] + s * v[1],
        c * u[2] + s * v[2],
    ];
    let axis = Quaternion::from_vec3(cross3(u, v));
    // Rotation by (1+R)Φ about the axis is the quaternion e^{(1+R)Φ/2 · axis}.
    let rot = &quat_exp_imag(&axis, 0.5 * (1.0 + ratio) * phi)? * g;
    Ok(ContactConfig { contact, rot })
}

/// Spinor trajectory `(e^{2θw} u, e^{(R+1)θw} q)`.
pub fn su2_trajectory(p: &RollingLineParams, theta: f64) -> SpinorConfig {
    let e2 = quat_exp_imag(&p.w, 2.0 * theta).expect("validated axis");
    let er = quat_exp_imag(&p.w, (p.ratio + 1.0) * theta).expect("validated axis");
    SpinorConfig {
        contact_dir: &e2 * &p.u,
        spin: &er * &p.q,
    }
}

/// Double cover to the contact picture: the spinor acts as a rotation.
pub fn cover_to_contact(s: &SpinorConfig) -> ContactConfig {
    ContactConfig {
        contact: s.contact_dir.vec3(),
        rot: s.spin.clone(),
    }
}

/// Quotient to the projective picture: forget the sign of the contact
/// direction.
pub fn quotient_to_projective(s: &SpinorConfig) -> ProjectiveConfig {
    ProjectiveConfig::new(s.contact_dir.clone(), s.spin.clone())
}

/// `τ(±(v, q)) = ±(v, vq)`: a null 7-vector with canonical sign.
pub fn tau(c: &ProjectiveConfig) -> Imaginary<f64> {
    let vq = &c.v * &c.q;
    let v3 = c.v.vec3();
    canonical_sign(Imaginary([v3[0], v3[1], v3[2], vq.a, vq.b, vq.c, vq.d]))
}

/// Inverse of [`tau`]: `v` is the spacelike half, `q = v⁻¹ · (second half)`
/// with `v⁻¹ = -v` for unit imaginary `v`.
pub fn tau_inv(x: &Imaginary<f64>) -> Result<ProjectiveConfig, GeomError> {
    let v = Quaternion::from_vec3([x.0[0], x.0[1], x.0[2]]);
    let n = v.norm();
    if (n - 1.0).abs() > 1e-6 {
        return Err(GeomError::Kinematics(format!(
            "spacelike part must be a unit vector (|v| = {n})"
        )));
    }
    let second = Quaternion::new(x.0[3], x.0[4], x.0[5], x.0[6]);
    let q = &(-&v) * &second;
    Ok(ProjectiveConfig::new(v, q))
}

/// Null-cone trajectory `±(e^{2θw} u, e^{-(R-1)θw} u q)` with canonical sign.
pub fn pc_trajectory(p: &RollingLineParams, theta: f64) -> Imaginary<f64> {
    let e2 = quat_exp_imag(&p.w, 2.0 * theta).expect("validated axis");
    let em = quat_exp_imag(&p.w, -(p.ratio - 1.0) * theta).expect("validated axis");
    let v = &e2 * &p.u;
    let second = &em * &(&p.u * &p.q);
    let v3 = v.vec3();
    canonical_sign(Imaginary([
        v3[0], v3[1], v3[2], second.a, second.b, second.c, second.d,
    ]))
}

fn canonical_sign(x: Imaginary<f64>) -> Imaginary<f64> {
    let flip =
        x.0.iter()
            .find(|c| c.abs() > SIGN_EPS)
            .is_some_and(|c| *c < 0.0);
    if flip {
        x.neg()
    } else {
        x
    }
}

/// Euclidean distance of the trajectory point at `theta` from the span of
/// `(u, uq)` and `(wu, -wuq)` — the candidate null subalgebra. Vanishes for
/// every `theta` exactly when the ratio is 3.
pub fn line_span_residual(p: &RollingLineParams, theta: f64) -> f64 {
    let uq = &p.u * &p.q;
    let wu = &p.w * &p.u;
    let wuq = &wu * &p.q;
    let uv3 = p.u.vec3();
    let wu3 = wu.vec3();
    let s1 = [uv3[0], uv3[1], uv3[2], uq.a, uq.b, uq.c, uq.d];
    let s2 = [wu3[0], wu3[1], wu3[2], -wuq.a, -wuq.b, -wuq.c, -wuq.d];
    let x = pc_trajectory(p, theta).0;
    // s1 and s2 are Euclidean-orthogonal with squared norm 2.
    let alpha = (0..7).map(|i| x[i] * s1[i]).sum::<f64>() / 2.0;
    let beta = (0..7).map(|i| x[i] * s2[i]).sum::<f64>() / 2.0;
    (0..7)
        .map(|i| {
            let r = x[i] - alpha * s1[i] - beta * s2[i];
            r * r
        })
        .sum::<f64>()
        .sqrt()
}

/// Maximum `|x(θ_i) · x(θ_j)|` over a uniform grid `θ ∈ [0, π/2]` (inclusive)
/// of the standard-parameter trajectory: zero (to rounding) iff the ratio
/// supports a totally null trajectory, which happens exactly at ratio 3.
pub fn null_defect(ratio: f64, grid: usize) -> f64 {
    null_defect_with(ExecMode::default(), ratio, grid)
}

/// [`null_defect`] with an explicit sequential/parallel execution mode.
pub fn null_defect_with(mode: ExecMode, ratio: f64, grid: usize) -> f64 {
    assert!(grid >= 2, "defect grid needs at least the two endpoints");
    let p = RollingLineParams::standard(ratio);
    let pts: Vec<Imaginary<f64>> = (0..grid)
        .map(|i| {
            let theta = std::f64::consts::FRAC_PI_2 * (i as f64) / ((grid - 1) as f64);
            pc_trajectory(&p, theta)
        })
        .collect();
    par::max_residual(mode, grid, |i| {
        let mut worst: f64 = 0.0;
        for j in i + 1..grid {
            worst = worst.max(pts[i].dot(&pts[j]).abs());
        }
        worst
    })
}

/// Finite-difference no-slip check at angle `phi`: compares the antisymmetric
/// part of `(R(Φ+h) - R(Φ)) / h · R(Φ)ᵀ` against the expected space-frame
/// angular velocity `(1+R) u × v`. Returns the Euclidean residual.
pub fn nonslip_check(p: &RollingLineParams, phi: f64, h: f64) -> f64 {
    let u3 = p.u.vec3();
    let v3 = p.v().vec3();
    let r1 = so3_trajectory(u3, v3, &p.q, p.ratio, phi)
        .expect("validated parameters")
        .rotation_matrix();
    let r2 = so3_trajectory(u3, v3, &p.q, p.ratio, phi + h)
        .expect("validated parameters")
        .rotation_matrix();
    // D = (R2 - R1)/h * R1ᵀ; its antisymmetric part estimates the angular
    // velocity matrix. (Skipping the antisymmetrization leaves an O(h|Ω|²)
    // symmetric error that would swamp the h = 1e-6 tolerance.)
    let mut d = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = 0.0;
            for k in 0..3 {
                acc += (r2[r][k] - r1[r][k]) / h * r1[c][k];
            }
            d[r][c] = acc;
        }
    }
    let omega = [
        0.5 * (d[2][1] - d[1][2]),
        0.5 * (d[0][2] - d[2][0]),
        0.5 * (d[1][0] - d[0][1]),
    ];
    let expected = cross3(u3, v3);
    let scale = 1.0 + p.ratio;
    let diff = [
        omega[0] - scale * expected[0],
        omega[1] - scale * expected[1],
        omega[2] - scale * expected[2],
    ];
    norm3(diff)
}

/// Total rotation angle of the rolling ball over one revolution of the
/// contact point (`Φ` from 0 to 2π), unwrapped by composing successive
/// orientation quaternions. Equals `2π (R+1)` up to discretization rounding.
pub fn unwrapped_rotation_angle(ratio: f64, steps_per_rev: usize) -> f64 {
    assert!(steps_per_rev >= 8);
    let p = RollingLineParams::standard(ratio);
    let u3 = p.u.vec3();
    let v3 = p.v().vec3();
    let quat_at = |i: usize| -> Quat {
        let phi = 2.0 * std::f64::consts::PI * (i as f64) / (steps_per_rev as f64);
        so3_trajectory(u3, v3, &p.q, p.ratio, phi)
            .expect("validated parameters")
            .rot
    };
    let mut total = 0.0;
    let mut prev = quat_at(0);
    for i in 1..=steps_per_rev {
        let mut cur = quat_at(i);
        // Guard against norm drift from repeated composition.
        if i % 100 == 0 {
            cur = cur.normalized();
        }
        let step = &cur * &prev.conj();
        let vec_norm = norm3(step.vec3());
        total += 2.0 * vec_norm.atan2(step.a.abs());
        prev = cur;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn qdist(a: &Quat, b: &Quat) -> f64 {
        (a - b).norm()
    }

    #[test]
    fn exponential_examples_and_additivity() {
        let k = Quaternion::k();
        assert!(qdist(&quat_exp_imag(&k, 0.0).unwrap(), &Quaternion::one()) < tol::EXACT);
        assert!(qdist(&quat_exp_imag(&k, FRAC_PI_2).unwrap(), &k) < tol::EXACT);
        let i = Quaternion::i();
        let minus_one = Quaternion::new(-1.0, 0.0, 0.0, 0.0);
        assert!(qdist(&quat_exp_imag(&i, PI).unwrap(), &minus_one) < tol::EXACT);
        let (a, b) = (0.37, -1.21);
        let lhs = &quat_exp_imag(&k, a).unwrap() * &quat_exp_imag(&k, b).unwrap();
        let rhs = quat_exp_imag(&k, a + b).unwrap();
        assert!(qdist(&lhs, &rhs) < tol::EXACT);
        assert!(quat_exp_imag(&Quaternion::new(0.0, 0.5, 0.0, 0.0), 1.0).is_err());
        assert!(quat_exp_imag(&Quaternion::new(0.3, 1.0, 0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn su2_worked_example() {
        // R = 3, θ = π/2: (e^{πk} i, e^{2πk}) = (-i, 1).
        let p = RollingLineParams::standard(3.0);
        let s = su2_trajectory(&p, FRAC_PI_2);
        assert!(qdist(&s.contact_dir, &-&Quaternion::i()) < tol::EXACT);
        assert!(qdist(&s.spin, &Quaternion::one()) < tol::EXACT);
    }

    #[test]
    fn pc_worked_example() {
        // R = 3, θ = π/4: ±(j, -j), canonical representative (j, -j).
        let p = RollingLineParams::standard(3.0);
        let x = pc_trajectory(&p, FRAC_PI_4);
        let expect = [0.0, 1.0, 0.0, 0.0, 0.0, -1.0, 0.0];
        for (i, (got, want)) in x.0.iter().zip(expect).enumerate() {
            assert!((got - want).abs() < tol::EXACT, "coord {i}");
        }
    }

    #[test]
    fn covering_and_quotient_commute() {
        let p = RollingLineParams::standard(2.0);
        for step in 0..25 {
            let theta = -1.3 + 0.17 * step as f64;
            let s = su2_trajectory(&p, theta);
            // Double cover matches the contact trajectory at Φ = 2θ.
            let c = cover_to_contact(&s);
            let direct =
                so3_trajectory(p.u().vec3(), p.v().vec3(), p.q(), p.ratio(), 2.0 * theta).unwrap();
            for i in 0..3 {
                assert!((c.contact[i] - direct.contact[i]).abs() < tol::DERIVED);
            }
            assert!(qdist(&c.rot, &direct.rot) < tol::DERIVED);
            // Projective quotient followed by τ matches the pc trajectory.
            let via_tau = tau(&quotient_to_projective(&s));
            let direct_pc = pc_trajectory(&p, theta);
            for i in 0..7 {
                assert!((via_tau.0[i] - direct_pc.0[i]).abs() < tol::DERIVED);
            }
        }
    }

    #[test]
    fn tau_round_trip() {
        let p = RollingLineParams::standard(2.5);
        for step in 0..20 {
            let theta = 0.05 + 0.11 * step as f64;
            let x = pc_trajectory(&p, theta);
            let back = tau(&tau_inv(&x).unwrap());
            for i in 0..7 {
                assert!((x.0[i] - back.0[i]).abs() < tol::EXACT);
            }
        }
    }

    #[test]
    fn trajectory_points_are_null() {
        for ratio in [1.0, 2.0, 3.0, 4.5] {
            let p = RollingLineParams::standard(ratio);
            for step in 0..10 {
                let theta = 0.2 * step as f64;
                let x = pc_trajectory(&p, theta);
                assert!(x.q_form().abs() < tol::EXACT);
            }
        }
    }

    #[test]
    fn defect_singles_out_ratio_three() {
        assert!(null_defect(3.0, 200) <= tol::EXACT);
        for ratio in [1.0, 2.0, 4.0, 5.0] {
            assert!(null_defect(ratio, 200) > 0.1, "ratio {ratio}");
        }
        // Closed-form maxima.
        assert!((null_defect(1.0, 1001) - 2.0).abs() < tol::COARSE);
        assert!((null_defect(2.0, 1001) - 1.125).abs() < 1e-3);
    }

    #[test]
    fn line_span_residual_vanishes_at_three() {
        let p3 = RollingLineParams::standard(3.0);
        let p2 = RollingLineParams::standard(2.0);
        let mut worst2: f64 = 0.0;
        for step in 0..50 {
            let theta = 0.031 * step as f64;
            assert!(line_span_residual(&p3, theta) < tol::EXACT);
            worst2 = worst2.max(line_span_residual(&p2, theta));
        }
        assert!(worst2 > 0.1);
    }

    #[test]
    fn nonslip_residual_scales_with_h() {
        let p = RollingLineParams::standard(3.0);
        assert!(nonslip_check(&p, 0.7, 1e-6) < tol::COARSE);
        assert!(nonslip_check(&p, 0.7, 1e-3) < 1e-4);
    }

    #[test]
    fn ball_turns_ratio_plus_one_times() {
        for ratio in [1.0, 2.0, 3.0] {
            let total = unwrapped_rotation_angle(ratio, 1000);
            let expect = 2.0 * PI * (ratio + 1.0);
            assert!((total - expect).abs() < 1e-8, "ratio {ratio}: {total}");
        }
    }
}
