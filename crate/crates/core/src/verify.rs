//! Seeded randomized verification suites.
//!
//! Every suite draws sample `i` from its own generator [`sampling::rng_for`]
//! `(seed, i)`, so outcomes are identical whether checks run sequentially or
//! in parallel, and any reported counterexample is reproducible from `(seed,
//! index)` alone. Exact checks report the lowest-index counterexample;
//! floating-point checks report the worst residual against a pinned bound.

use crate::incidence::{
    annihilator, classify_pair, joint_annihilation_kernel, midpoint, roll_distance, LineSubalgebra,
    OrbitClass, PcPoint, RollDistance,
};
use crate::kinematics::{
    cover_to_contact, line_span_residual, nonslip_check, null_defect_with, pc_trajectory,
    quotient_to_projective, so3_trajectory, su2_trajectory, tau, tau_inv, tol,
    unwrapped_rotation_angle,
};
use crate::linalg::Mat;
use crate::octonion::{associator, cross_via_product, dot_via_product, Imaginary};
use crate::par::{first_failure, max_residual, ExecMode};
use crate::quantization::{
    cross_tensor, delta, delta_adjoint, in_s, is_real_section, real_on_spanning_set, trace_dot,
};
use crate::sampling::{self, rng_for};
use crate::scalar::{CRat, Rat, Scalar};
use crate::triples::{
    apartment_basis, complete_pair, extend_config, g2_from_triples, hexagon_check,
    pair_transporter, NullTriple,
};
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

/// Parameters shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub seed: u64,
    pub samples: usize,
    pub mode: ExecMode,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            seed: 42,
            samples: 1000,
            mode: ExecMode::default(),
        }
    }
}

impl SuiteParams {
    /// Reduced count for checks whose single sample is expensive.
    fn scaled(&self, divisor: usize) -> usize {
        (self.samples / divisor).max(1)
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub samples: usize,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.status == "pass"
    }
}

/// All checks of one suite, with the seed that reproduces them.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }
}

/// Names of the individual suites, in canonical order.
pub const SUITE_NAMES: [&str; 6] = [
    "algebra",
    "incidence",
    "hexagon",
    "torsor",
    "ratio",
    "quantization",
];

fn exact_check(
    name: &str,
    samples: usize,
    mode: ExecMode,
    f: impl Fn(usize) -> Result<(), String> + Sync + Send,
) -> CheckResult {
    let failure = first_failure(mode, samples, f);
    CheckResult {
        check: name.to_string(),
        samples,
        status: if failure.is_none() { "pass" } else { "fail" },
        worst_residual: None,
        bound: None,
        counterexample: failure.map(|(i, msg)| format!("sample {i}: {msg}")),
    }
}

fn residual_check(
    name: &str,
    samples: usize,
    mode: ExecMode,
    bound: f64,
    f: impl Fn(usize) -> f64 + Sync + Send,
) -> CheckResult {
    let worst = max_residual(mode, samples, f);
    CheckResult {
        check: name.to_string(),
        samples,
        status: if worst <= bound { "pass" } else { "fail" },
        worst_residual: Some(worst),
        bound: Some(bound),
        counterexample: None,
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fmt_vec<S: Scalar>(v: &Imaginary<S>) -> String {
    let parts: Vec<String> = v.0.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn point<S: Scalar>(v: &Imaginary<S>) -> PcPoint<S> {
    PcPoint::from_vector(v).expect("verification samplers produce nonzero nulls")
}

/// Lift two rational vectors to a complex one (`re + i·im`).
fn complexify(re: &Imaginary<Rat>, im: &Imaginary<Rat>) -> Imaginary<CRat> {
    Imaginary(std::array::from_fn(|k| {
        CRat::new(re.0[k].clone(), im.0[k].clone())
    }))
}

/// Algebra laws on random exact elements.
pub fn algebra_suite(p: &SuiteParams) -> VerificationReport {
    let (seed, n, mode) = (p.seed, p.samples, p.mode);
    let checks = vec![
        exact_check("composition law Q(xy) = Q(x) Q(y)", n, mode, |i| {
            let mut rng = rng_for(seed, i);
            let x = sampling::random_octonion(&mut rng);
            let y = sampling::random_octonion(&mut rng);
            let prod = &x * &y;
            require(prod.q_form() == x.q_form() * y.q_form(), || {
                format!("Q(xy) != Q(x)Q(y) for x = {:?}, y = {:?}", x, y)
            })
        }),
        exact_check("conjugation reverses products", n, mode, |i| {
            let mut rng = rng_for(seed, i);
            let x = sampling::random_octonion(&mut rng);
            let y = sampling::random_octonion(&mut rng);
            require((&x * &y).conj() == &y.conj() * &x.conj(), || {
                format!("conj(xy) != conj(y) conj(x) for x = {:?}, y = {:?}", x, y)
            })
        }),
        exact_check(
            "imaginary product splits as cross minus dot",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let x = sampling::random_imaginary(&mut rng);
                let y = sampling::random_imaginary(&mut rng);
                let mut expected = x.cross(&y).embed();
                expected.first.a = -x.dot(&y);
                require(x.mul_embedded(&y) == expected, || {
                    format!(
                        "xy != x×y - (x·y)1 for x = {}, y = {}",
                        fmt_vec(&x),
                        fmt_vec(&y)
                    )
                })
            },
        ),
        exact_check(
            "cross and dot match their definitional routes",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let x = sampling::random_imaginary(&mut rng);
                let y = sampling::random_imaginary(&mut rng);
                require(
                    x.cross(&y) == cross_via_product(&x, &y)
                        && x.dot(&y) == dot_via_product(&x, &y),
                    || {
                        format!(
                            "table route diverges from product route for x = {}, y = {}",
                            fmt_vec(&x),
                            fmt_vec(&y)
                        )
                    },
                )
            },
        ),
        exact_check("associator alternates and is antisymmetric", n, mode, |i| {
            let mut rng = rng_for(seed, i);
            let x = sampling::random_octonion(&mut rng);
            let y = sampling::random_octonion(&mut rng);
            let z = sampling::random_octonion(&mut rng);
            let zero = crate::octonion::SplitOctonion::zero();
            require(
                associator(&x, &x, &y) == zero
                    && associator(&x, &y, &y) == zero
                    && associator(&x, &y, &x) == zero
                    && associator(&x, &y, &z) == -&associator(&y, &x, &z),
                || format!("associator identity failed for x = {:?}, y = {:?}", x, y),
            )
        }),
    ];
    VerificationReport {
        suite: "algebra",
        seed,
        checks,
    }
}

/// Roll distances, annihilators, and witness chains.
pub fn incidence_suite(p: &SuiteParams) -> VerificationReport {
    let (seed, n, mode) = (p.seed, p.samples, p.mode);
    let distances = [
        RollDistance::Zero,
        RollDistance::One,
        RollDistance::Two,
        RollDistance::Three,
    ];
    let checks = vec![
        exact_check(
            "constructed pairs classify at their roll distance",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                for d in distances {
                    let (x, y) = sampling::random_pair_at(&mut rng, d);
                    let (px, py) = (point(&x), point(&y));
                    require(roll_distance(&px, &py) == d, || {
                        format!(
                            "distance-{} construction misclassified: x = {}, y = {}",
                            d.value(),
                            fmt_vec(&x),
                            fmt_vec(&y)
                        )
                    })?;
                    require(roll_distance(&py, &px) == d, || {
                        format!("roll distance asymmetric at d = {}", d.value())
                    })?;
                    require(
                        classify_pair(&px, &py) == OrbitClass::from_distance(d),
                        || format!("orbit class mismatch at d = {}", d.value()),
                    )?;
                }
                Ok(())
            },
        ),
        exact_check(
            "annihilators are totally null anticommuting 3-spaces containing the point",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let x = sampling::random_null(&mut rng);
                let px = point(&x);
                let ann = annihilator(&px);
                let rows: Vec<Vec<Rat>> = ann.iter().map(|a| a.0.to_vec()).collect();
                require(Mat::from_rows(rows.clone()).rank() == 3, || {
                    format!("annihilator rank != 3 at x = {}", fmt_vec(&x))
                })?;
                let mut with_x = rows;
                with_x.push(x.0.to_vec());
                require(Mat::from_rows(with_x).rank() == 3, || {
                    format!("x outside its own annihilator at x = {}", fmt_vec(&x))
                })?;
                for (k, a) in ann.iter().enumerate() {
                    require(a.mul_embedded(&x).is_zero(), || {
                        format!("row {k} fails to annihilate x = {}", fmt_vec(&x))
                    })?;
                    require(a.q_form().is_zero(), || {
                        format!("row {k} of the annihilator is not null")
                    })?;
                    for b in ann.iter().skip(k + 1) {
                        let anti = &a.mul_embedded(b) + &b.mul_embedded(a);
                        require(anti.is_zero(), || {
                            format!(
                                "annihilator rows fail to anticommute at x = {}",
                                fmt_vec(&x)
                            )
                        })?;
                    }
                }
                Ok(())
            },
        ),
        exact_check(
            "two-roll pairs meet at the unique middle point",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let (x, z) = sampling::random_distance2_pair(&mut rng);
                let (px, pz) = (point(&x), point(&z));
                let m = midpoint(&px, &pz).map_err(|e| e.to_string())?;
                require(
                    roll_distance(&px, &m) == RollDistance::One
                        && roll_distance(&m, &pz) == RollDistance::One,
                    || {
                        format!(
                            "middle point is not one roll from both ends: x = {}",
                            fmt_vec(&x)
                        )
                    },
                )?;
                let kernel = joint_annihilation_kernel(&px, &pz);
                require(kernel.len() == 1, || {
                    format!("joint annihilation kernel rank {} != 1", kernel.len())
                })?;
                require(point(&kernel[0]) == m, || {
                    "joint kernel direction differs from ⟨x × z⟩".to_string()
                })
            },
        ),
        exact_check(
            "three-roll pairs decompose into three single rolls",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let (x, z) = sampling::random_distance3_pair(&mut rng);
                let (px, pz) = (point(&x), point(&z));
                // Intermediate y: annihilates x, orthogonal to z. The value
                // map u ↦ u · z on the annihilator of x has rank 1, so the
                // kernel is 2-dimensional and misses ⟨x⟩ (x · z ≠ 0).
                let ann = annihilator(&px);
                let vals = vec![ann.iter().map(|row| row.dot(&z)).collect::<Vec<Rat>>()];
                let kernel = Mat::from_rows(vals).kernel_basis();
                require(kernel.len() == 2, || {
                    format!("value functional kernel rank {} != 2", kernel.len())
                })?;
                let mut y = Imaginary::zero();
                for (c, row) in kernel[0].iter().zip(ann.iter()) {
                    y = y.add(&row.scale(c));
                }
                require(!y.is_zero(), || "kernel combination vanished".to_string())?;
                let py = point(&y);
                require(roll_distance(&px, &py) == RollDistance::One, || {
                    "chain step x → y is not a single roll".to_string()
                })?;
                require(roll_distance(&py, &pz) == RollDistance::Two, || {
                    "chain step y → z is not two rolls".to_string()
                })?;
                let m = midpoint(&py, &pz).map_err(|e| e.to_string())?;
                require(
                    roll_distance(&py, &m) == RollDistance::One
                        && roll_distance(&m, &pz) == RollDistance::One,
                    || "three-roll chain does not close through the middle point".to_string(),
                )
            },
        ),
        exact_check(
            "one-roll pairs span a null line subalgebra containing both",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let (x, y) = sampling::random_distance1_pair(&mut rng);
                let (px, py) = (point(&x), point(&y));
                let line = LineSubalgebra::through(&px, &py).map_err(|e| e.to_string())?;
                require(line.is_null_subalgebra(), || {
                    format!("line through x = {} is not a null subalgebra", fmt_vec(&x))
                })?;
                require(line.contains(&px) && line.contains(&py), || {
                    "line misses one of its defining points".to_string()
                })
            },
        ),
    ];
    VerificationReport {
        suite: "incidence",
        seed,
        checks,
    }
}

/// Triple completion, apartment bases, hexagon rules, and extensions.
pub fn hexagon_suite(p: &SuiteParams) -> VerificationReport {
    let (seed, n, mode) = (p.seed, p.samples, p.mode);
    let checks = vec![
        exact_check("two-roll pairs complete to valid triples", n, mode, |i| {
            let mut rng = rng_for(seed, i);
            let (x, y) = sampling::random_distance2_pair(&mut rng);
            let t = complete_pair(&x, &y).map_err(|e| e.to_string())?;
            require(t.x() == &x && t.y() == &y, || {
                "completion replaced its inputs".to_string()
            })
        }),
        exact_check(
            "apartment bases are nondegenerate and pass every hexagon rule",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let t = sampling::random_triple(&mut rng);
                let basis = apartment_basis(&t);
                require(basis.matrix().rank() == 7, || {
                    "apartment basis is degenerate".to_string()
                })?;
                let report = hexagon_check(&t);
                if report.all_ok() {
                    Ok(())
                } else {
                    let failed: Vec<&str> = report
                        .rules
                        .iter()
                        .filter(|r| !r.ok)
                        .map(|r| r.rule)
                        .collect();
                    Err(format!(
                        "hexagon rules failed: {} (x = {})",
                        failed.join("; "),
                        fmt_vec(t.x())
                    ))
                }
            },
        ),
        exact_check(
            "hexagon structure survives cyclic relabeling",
            p.scaled(10),
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let t = sampling::random_triple(&mut rng);
                let cycled = t.cyclic();
                require(hexagon_check(&cycled).all_ok(), || {
                    "cyclic relabeling broke a hexagon rule".to_string()
                })?;
                require(
                    apartment_basis(&cycled).w() == apartment_basis(&t).w(),
                    || "the distinguished direction w is not cyclic-invariant".to_string(),
                )
            },
        ),
        exact_check(
            "extensions produce incident triples in every case",
            p.scaled(10),
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                // Case 0: a single point extends, keeping it as the first entry.
                let x0 = sampling::random_null(&mut rng);
                let e0 = extend_config(0, &x0, None).map_err(|e| e.to_string())?;
                require(e0.triple.x() == &x0 && e0.scale.is_none(), || {
                    "case 0 moved its input".to_string()
                })?;
                // Case 1: (w, x) one roll apart; x × y = w exactly.
                let (w1, x1) = sampling::random_distance1_pair(&mut rng);
                let e1 = extend_config(1, &w1, Some(&x1)).map_err(|e| e.to_string())?;
                require(
                    e1.triple.x() == &x1
                        && e1.triple.x().cross(e1.triple.y()) == w1
                        && e1.scale.is_some(),
                    || format!("case 1 certificate failed at w = {}", fmt_vec(&w1)),
                )?;
                // Case 2: completion, inputs kept verbatim.
                let (x2, y2) = sampling::random_distance2_pair(&mut rng);
                let e2 = extend_config(2, &x2, Some(&y2)).map_err(|e| e.to_string())?;
                require(
                    e2.triple.x() == &x2 && e2.triple.y() == &y2 && e2.scale.is_none(),
                    || "case 2 moved its inputs".to_string(),
                )?;
                // Case 3: (w, x) three rolls apart; ⟨y × z⟩ = ⟨w⟩.
                let (w3, x3) = sampling::random_distance3_pair(&mut rng);
                let e3 = extend_config(3, &w3, Some(&x3)).map_err(|e| e.to_string())?;
                let yz = e3.triple.y().cross(e3.triple.z());
                require(
                    e3.triple.x() == &x3 && point(&yz) == point(&w3) && e3.scale.is_some(),
                    || format!("case 3 certificate failed at w = {}", fmt_vec(&w3)),
                )
            },
        ),
    ];
    VerificationReport {
        suite: "hexagon",
        seed,
        checks,
    }
}

fn triples_equal(a: &NullTriple<Rat>, b: &NullTriple<Rat>) -> bool {
    a.x() == b.x() && a.y() == b.y() && a.z() == b.z()
}

/// Unique transport between triples; invariance of the structure.
pub fn torsor_suite(p: &SuiteParams) -> VerificationReport {
    let (seed, mode) = (p.seed, p.mode);
    let heavy = p.scaled(10);
    let transport = p.scaled(20);
    let checks = vec![
        exact_check("triples map uniquely onto triples", heavy, mode, |i| {
            let mut rng = rng_for(seed, i);
            let t1 = sampling::random_triple(&mut rng);
            let t2 = sampling::random_triple(&mut rng);
            let g = g2_from_triples(&t1, &t2);
            require(triples_equal(&g.apply_triple(&t1), &t2), || {
                "transport missed its target triple".to_string()
            })?;
            // Uniqueness corollary, spot-checked: nothing but the identity
            // fixes a triple.
            if i % 10 == 0 {
                require(g2_from_triples(&t1, &t1).is_identity(), || {
                    "self-transport is not the identity".to_string()
                })?;
            }
            Ok(())
        }),
        exact_check("triple transports compose and invert", heavy, mode, |i| {
            let mut rng = rng_for(seed, i);
            let t1 = sampling::random_triple(&mut rng);
            let t2 = sampling::random_triple(&mut rng);
            let t3 = sampling::random_triple(&mut rng);
            let g12 = g2_from_triples(&t1, &t2);
            let g23 = g2_from_triples(&t2, &t3);
            let g13 = g2_from_triples(&t1, &t3);
            require(g23.compose(&g12) == g13, || {
                "composition of transports differs from the direct transport".to_string()
            })?;
            require(g12.inverse().compose(&g12).is_identity(), || {
                "inverse composition is not the identity".to_string()
            })
        }),
        exact_check(
            "group elements preserve dot, cross, and roll distance",
            heavy,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let g = sampling::random_g2(&mut rng);
                let a = sampling::random_imaginary(&mut rng);
                let b = sampling::random_imaginary(&mut rng);
                require(g.apply(&a).dot(&g.apply(&b)) == a.dot(&b), || {
                    "dot form not preserved".to_string()
                })?;
                require(
                    g.apply(&a.cross(&b)) == g.apply(&a).cross(&g.apply(&b)),
                    || "cross product not preserved".to_string(),
                )?;
                let d = [
                    RollDistance::Zero,
                    RollDistance::One,
                    RollDistance::Two,
                    RollDistance::Three,
                ][i % 4];
                let (x, y) = sampling::random_pair_at(&mut rng, d);
                let (px, py) = (point(&x), point(&y));
                require(
                    roll_distance(&g.apply_point(&px), &g.apply_point(&py)) == d,
                    || format!("roll distance {} not preserved", d.value()),
                )
            },
        ),
        exact_check(
            "pairs transport within each orbit class",
            transport,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let d = [
                    RollDistance::Zero,
                    RollDistance::One,
                    RollDistance::Two,
                    RollDistance::Three,
                ][i % 4];
                let (a1, b1) = sampling::random_pair_at(&mut rng, d);
                let (a2, b2) = sampling::random_pair_at(&mut rng, d);
                let (pa1, pb1) = (point(&a1), point(&b1));
                let (pa2, pb2) = (point(&a2), point(&b2));
                let g = pair_transporter(&pa1, &pb1, &pa2, &pb2).map_err(|e| e.to_string())?;
                require(
                    g.apply_point(&pa1) == pa2 && g.apply_point(&pb1) == pb2,
                    || format!("transporter missed its target in class X{}", d.value()),
                )
            },
        ),
        exact_check(
            "transport across distinct orbit classes is rejected",
            p.scaled(50).min(20),
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let (a1, b1) = sampling::random_distance1_pair(&mut rng);
                let (a2, b2) = sampling::random_distance2_pair(&mut rng);
                match pair_transporter(&point(&a1), &point(&b1), &point(&a2), &point(&b2)) {
                    Err(crate::error::GeomError::DifferentOrbits { .. }) => Ok(()),
                    Err(e) => Err(format!("wrong rejection: {e}")),
                    Ok(_) => Err("cross-class transport was not rejected".to_string()),
                }
            },
        ),
    ];
    VerificationReport {
        suite: "torsor",
        seed,
        checks,
    }
}

fn random_ratio<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(0.5..5.5)
}

fn random_theta<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI)
}

/// Projective distance: Euclidean distance up to a global sign.
fn sign_free_dist(a: &Imaginary<f64>, b: &Imaginary<f64>) -> f64 {
    let mut plus = 0.0;
    let mut minus = 0.0;
    for k in 0..7 {
        plus += (a.0[k] - b.0[k]) * (a.0[k] - b.0[k]);
        minus += (a.0[k] + b.0[k]) * (a.0[k] + b.0[k]);
    }
    plus.sqrt().min(minus.sqrt())
}

/// Kinematic consistency across the three pictures, and the special ratio.
pub fn ratio_suite(p: &SuiteParams) -> VerificationReport {
    let (seed, n, mode) = (p.seed, p.samples, p.mode);
    let checks = vec![
        residual_check(
            "covering and quotient pictures agree along trajectories",
            n,
            mode,
            tol::DERIVED,
            |i| {
                let mut rng = rng_for(seed, i);
                let ratio = random_ratio(&mut rng);
                let params = sampling::random_rolling_params(&mut rng, ratio);
                let theta = random_theta(&mut rng);
                let spinor = su2_trajectory(&params, theta);
                // Quotient then coordinates vs the direct trajectory.
                let via_quotient = tau(&quotient_to_projective(&spinor));
                let direct = pc_trajectory(&params, theta);
                let mut worst = sign_free_dist(&via_quotient, &direct);
                // Double cover vs the contact picture at Φ = 2θ.
                let contact = cover_to_contact(&spinor);
                let u3 = params.u().vec3();
                let v3 = params.v().vec3();
                let so3 = so3_trajectory(u3, v3, params.q(), params.ratio(), 2.0 * theta)
                    .expect("sampled parameters are orthonormal");
                for k in 0..3 {
                    worst = worst.max((contact.contact[k] - so3.contact[k]).abs());
                }
                let dq = (&contact.rot - &so3.rot).norm();
                let dq_neg = (&contact.rot + &so3.rot).norm();
                worst = worst.max(dq.min(dq_neg));
                // Coordinates invert back to the projective picture.
                let back = tau_inv(&direct).expect("trajectory has a unit spacelike half");
                worst = worst.max(sign_free_dist(&tau(&back), &direct));
                worst
            },
        ),
        residual_check(
            "trajectory points stay on the null cone for every ratio",
            n,
            mode,
            tol::DERIVED,
            |i| {
                let mut rng = rng_for(seed, i);
                let ratio = random_ratio(&mut rng);
                let params = sampling::random_rolling_params(&mut rng, ratio);
                let x = pc_trajectory(&params, random_theta(&mut rng));
                x.q_form().abs()
            },
        ),
        residual_check(
            "ratio-3 trajectories stay on a fixed null line",
            n,
            mode,
            tol::DERIVED,
            |i| {
                let mut rng = rng_for(seed, i);
                let params = sampling::random_rolling_params(&mut rng, 3.0);
                line_span_residual(&params, random_theta(&mut rng))
            },
        ),
        exact_check("ratio 3 has vanishing null defect", 1, mode, |_| {
            let d = null_defect_with(mode, 3.0, 200);
            require(d <= tol::EXACT, || {
                format!("defect {d:e} above {:e} at ratio 3", tol::EXACT)
            })
        }),
        exact_check(
            "ratios 1, 2, 4, 5 keep the null defect above 0.1",
            4,
            mode,
            |i| {
                let ratio = [1.0, 2.0, 4.0, 5.0][i];
                let d = null_defect_with(ExecMode::Sequential, ratio, 200);
                require(d > 0.1, || {
                    format!("defect {d:e} too small at ratio {ratio}")
                })
            },
        ),
        residual_check(
            "finite differences match the no-slip angular velocity (h = 1e-6)",
            n,
            mode,
            1e-6,
            |i| {
                let mut rng = rng_for(seed, i);
                let ratio = random_ratio(&mut rng);
                let params = sampling::random_rolling_params(&mut rng, ratio);
                nonslip_check(&params, random_theta(&mut rng), 1e-6)
            },
        ),
        residual_check(
            "finite differences match the no-slip angular velocity (h = 1e-3)",
            n,
            mode,
            1e-4,
            |i| {
                let mut rng = rng_for(seed, i);
                let ratio = random_ratio(&mut rng);
                let params = sampling::random_rolling_params(&mut rng, ratio);
                nonslip_check(&params, random_theta(&mut rng), 1e-3)
            },
        ),
        residual_check(
            "one contact revolution turns the ball by 2π(R+1)",
            p.scaled(20),
            mode,
            1e-8,
            |i| {
                let mut rng = rng_for(seed, i);
                let ratio = random_ratio(&mut rng);
                let angle = unwrapped_rotation_angle(ratio, 1000);
                (angle - 2.0 * std::f64::consts::PI * (ratio + 1.0)).abs()
            },
        ),
    ];
    VerificationReport {
        suite: "ratio",
        seed,
        checks,
    }
}

/// Sections, the evaluation form, its adjoint, and the trace identity.
pub fn quantization_suite(p: &SuiteParams) -> VerificationReport {
    let (seed, n, mode) = (p.seed, p.samples, p.mode);
    let checks = vec![
        exact_check(
            "trace of the double cross recovers the dot form",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let a = sampling::random_imaginary(&mut rng);
                let b = sampling::random_imaginary(&mut rng);
                require(trace_dot(&a, &b) == a.dot(&b), || {
                    format!(
                        "trace formula failed for a = {}, b = {}",
                        fmt_vec(&a),
                        fmt_vec(&b)
                    )
                })
            },
        ),
        exact_check(
            "adjoint of the evaluation form is the cross product",
            1,
            mode,
            |_| {
                let adj = delta_adjoint();
                let expect = cross_tensor();
                for a in 0..7 {
                    for b in 0..7 {
                        if adj[a][b] != expect[a][b] {
                            return Err(format!("adjoint mismatch at basis pair ({a}, {b})"));
                        }
                    }
                }
                Ok(())
            },
        ),
        exact_check(
            "evaluation forms factor through the cross product and are linear",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let w = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                let x = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                let z = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                require(delta(&w).eval(&x, &z) == w.dot(&x.cross(&z)), || {
                    "evaluation form disagrees with w · (x × z)".to_string()
                })?;
                let w2 = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                let lhs = delta(&w.add(&w2));
                let rhs = delta(&w).add(&delta(&w2));
                require(lhs == rhs, || "evaluation form is not additive".to_string())
            },
        ),
        exact_check(
            "sections are real exactly when real on the null spanning set",
            n,
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let im_part = if i % 2 == 0 {
                    Imaginary::zero()
                } else {
                    sampling::random_imaginary(&mut rng)
                };
                let w = complexify(&sampling::random_imaginary(&mut rng), &im_part);
                require(is_real_section(&w) == real_on_spanning_set(&w), || {
                    "coordinate realness and spanning-set realness disagree".to_string()
                })
            },
        ),
        exact_check(
            "incident pairs are recognized with the forced middle point",
            p.scaled(10),
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let (x, z) = sampling::random_complex_two_roll(&mut rng);
                let (px, pz) = (point(&x), point(&z));
                let mid = point(&x.cross(&z));
                require(in_s(&px, &mid, &pz), || {
                    "true incidence triple rejected".to_string()
                })?;
                require(!in_s(&px, &px, &pz) && !in_s(&px, &pz, &pz), || {
                    "degenerate middle point accepted".to_string()
                })
            },
        ),
        exact_check(
            "evaluation forms are equivariant under the group",
            p.scaled(50),
            mode,
            |i| {
                let mut rng = rng_for(seed, i);
                let g = sampling::random_g2(&mut rng);
                let w = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                let x = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                let z = complexify(
                    &sampling::random_imaginary(&mut rng),
                    &sampling::random_imaginary(&mut rng),
                );
                let moved =
                    delta(&g.apply_complex(&w)).eval(&g.apply_complex(&x), &g.apply_complex(&z));
                require(moved == delta(&w).eval(&x, &z), || {
                    "evaluation form is not equivariant".to_string()
                })
            },
        ),
    ];
    VerificationReport {
        suite: "quantization",
        seed,
        checks,
    }
}

/// Run one suite by name.
pub fn suite_by_name(name: &str, p: &SuiteParams) -> Option<VerificationReport> {
    match name {
        "algebra" => Some(algebra_suite(p)),
        "incidence" => Some(incidence_suite(p)),
        "hexagon" => Some(hexagon_suite(p)),
        "torsor" => Some(torsor_suite(p)),
        "ratio" => Some(ratio_suite(p)),
        "quantization" => Some(quantization_suite(p)),
        _ => None,
    }
}

/// Run all six suites in canonical order.
pub fn all_suites(p: &SuiteParams) -> Vec<VerificationReport> {
    SUITE_NAMES
        .iter()
        .map(|name| suite_by_name(name, p).expect("canonical names resolve"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteParams {
        SuiteParams {
            seed: 42,
            samples: 40,
            mode: ExecMode::Sequential,
        }
    }

    #[test]
    fn all_suites_pass_on_a_small_run() {
        for report in all_suites(&quick()) {
            for check in &report.checks {
                assert!(
                    check.ok(),
                    "{}/{}: {:?} {:?}",
                    report.suite,
                    check.check,
                    check.counterexample,
                    check.worst_residual
                );
            }
        }
    }

    #[test]
    fn reports_serialize_with_stable_fields() {
        let report = algebra_suite(&SuiteParams {
            samples: 2,
            ..quick()
        });
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["suite"], "algebra");
        assert_eq!(v["seed"], 42);
        assert!(v["checks"][0]["check"].is_string());
        assert_eq!(v["checks"][0]["status"], "pass");
    }

    #[test]
    fn failures_carry_reproducible_counterexamples() {
        // A deliberately broken predicate: fails at every index, so the
        // reported counterexample must be index 0.
        let r = exact_check("always fails", 25, ExecMode::Sequential, |i| {
            Err(format!("index {i}"))
        });
        assert_eq!(r.status, "fail");
        assert_eq!(r.counterexample.as_deref(), Some("sample 0: index 0"));
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_reports_match() {
        let seq = ratio_suite(&SuiteParams {
            seed: 7,
            samples: 30,
            mode: ExecMode::Sequential,
        });
        let par = ratio_suite(&SuiteParams {
            seed: 7,
            samples: 30,
            mode: ExecMode::Parallel,
        });
        assert_eq!(
            serde_json::to_string(&seq).unwrap(),
            serde_json::to_string(&par).unwrap()
        );
    }
}
