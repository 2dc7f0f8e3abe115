//! Null triples, apartments, hexagon laws, and explicit automorphisms.
//!
//! A null triple is an ordered triple `(x, y, z)` of pairwise-orthogonal
//! nonzero null imaginaries normalized by `(x × y) · z = 1/2`. Its apartment
//! basis `x, y, z, x×y, y×z, z×x, w = 2(x×y)×z` spans the 7-space, and the
//! automorphism group of the algebra acts simply transitively on null
//! triples: mapping one apartment basis onto another yields an exact 7×7
//! matrix preserving both the dot form and the cross product.

use crate::error::{GeomError, TripleViolation};
use crate::incidence::{
    annihilator, classify_pair, roll_distance, OrbitClass, PcPoint, RollDistance,
};
use crate::linalg::Mat;
use crate::octonion::{Imaginary, GRAM_SIGNS};
use crate::scalar::{CRat, Rat, Scalar};
use num_complex::Complex;
use num_traits::Zero;

fn half<S: Scalar>() -> S {
    S::one() / S::from_i64(2)
}

/// Validated null triple.
#[derive(Clone, Debug, PartialEq)]
pub struct NullTriple<S> {
    x: Imaginary<S>,
    y: Imaginary<S>,
    z: Imaginary<S>,
}

impl<S: Scalar> NullTriple<S> {
    pub fn x(&self) -> &Imaginary<S> {
        &self.x
    }

    pub fn y(&self) -> &Imaginary<S> {
        &self.y
    }

    pub fn z(&self) -> &Imaginary<S> {
        &self.z
    }

    pub fn entries(&self) -> [&Imaginary<S>; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Cyclic rotation `(y, z, x)`; stays a null triple because the
    /// normalization form is cyclically symmetric.
    pub fn cyclic(&self) -> NullTriple<S> {
        validate_triple(&self.y, &self.z, &self.x)
            .expect("cyclic rotation of a null triple is a null triple")
    }
}

/// Check the null-triple conditions, reporting the first violated one.
pub fn validate_triple<S: Scalar>(
    x: &Imaginary<S>,
    y: &Imaginary<S>,
    z: &Imaginary<S>,
) -> Result<NullTriple<S>, TripleViolation> {
    let entries = [x, y, z];
    for (index, v) in entries.iter().enumerate() {
        if v.is_zero() {
            return Err(TripleViolation::Zero { index });
        }
        let q = v.q_form();
        if !q.is_zero() {
            return Err(TripleViolation::NotNull {
                index,
                q: format!("{}", q),
            });
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let d = entries[i].dot(entries[j]);
        if !d.is_zero() {
            return Err(TripleViolation::NotOrthogonal {
                i,
                j,
                dot: format!("{}", d),
            });
        }
    }
    let norm = x.cross(y).dot(z);
    if norm != half::<S>() {
        return Err(TripleViolation::Normalization {
            value: format!("{}", norm),
        });
    }
    Ok(NullTriple {
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    })
}

/// Labels of the apartment basis vectors, in storage order.
pub const APARTMENT_LABELS: [&str; 7] = ["x", "y", "z", "x_cross_y", "y_cross_z", "z_cross_x", "w"];

/// The seven vectors `x, y, z, x×y, y×z, z×x, w = 2(x×y)×z` of a null triple.
#[derive(Clone, Debug, PartialEq)]
pub struct ApartmentBasis<S> {
    vectors: [Imaginary<S>; 7],
}

impl<S: Scalar> ApartmentBasis<S> {
    pub fn vectors(&self) -> &[Imaginary<S>; 7] {
        &self.vectors
    }

    /// Middle vertex `w`.
    pub fn w(&self) -> &Imaginary<S> {
        &self.vectors[6]
    }

    /// 7×7 matrix with the basis vectors as columns.
    pub fn matrix(&self) -> Mat<S> {
        let mut m = Mat::zeros(7, 7);
        for (c, v) in self.vectors.iter().enumerate() {
            for r in 0..7 {
                *m.at_mut(r, c) = v.0[r].clone();
            }
        }
        m
    }
}

/// Apartment basis of a triple; always a genuine basis (nonzero determinant).
pub fn apartment_basis<S: Scalar>(t: &NullTriple<S>) -> ApartmentBasis<S> {
    let xy = t.x.cross(&t.y);
    let yz = t.y.cross(&t.z);
    let zx = t.z.cross(&t.x);
    let w = xy.cross(&t.z).scale(&S::from_i64(2));
    let basis = ApartmentBasis {
        vectors: [t.x.clone(), t.y.clone(), t.z.clone(), xy, yz, zx, w],
    };
    assert!(
        !basis.matrix().det().is_zero(),
        "apartment vectors of a null triple form a basis"
    );
    basis
}

/// One hexagon rule family: name, whether every instance held, and the first
/// violating instance if not.
#[derive(Clone, Debug)]
pub struct RuleCheck {
    pub rule: &'static str,
    pub ok: bool,
    pub detail: Option<String>,
}

/// Result of checking all eight hexagon rule families.
#[derive(Clone, Debug)]
pub struct HexagonReport {
    pub rules: Vec<RuleCheck>,
}

impl HexagonReport {
    pub fn all_ok(&self) -> bool {
        self.rules.iter().all(|r| r.ok)
    }
}

/// Check the incidence hexagon of a triple: outer ring `x, x×y, y, y×z, z,
/// z×x` (cyclic), middle vertex `w`.
pub fn hexagon_check<S: Scalar>(t: &NullTriple<S>) -> HexagonReport {
    let a = apartment_basis(t);
    let v = a.vectors();
    // Outer ring in cyclic order.
    let ring: [&Imaginary<S>; 6] = [&v[0], &v[3], &v[1], &v[4], &v[2], &v[5]];
    let ring_names = ["x", "x_cross_y", "y", "y_cross_z", "z", "z_cross_x"];
    let w = a.w();
    let mut rules = Vec::new();
    let mut push = |rule: &'static str, violations: Vec<String>| {
        rules.push(RuleCheck {
            rule,
            ok: violations.is_empty(),
            detail: violations.into_iter().next(),
        });
    };

    let mut bad = Vec::new();
    for (i, p) in ring.iter().enumerate() {
        if !p.q_form().is_zero() {
            bad.push(format!("{} is not null", ring_names[i]));
        }
    }
    push("outer vertices are null", bad);

    let mut bad = Vec::new();
    for i in 0..3 {
        let d = ring[i].dot(ring[i + 3]);
        if d != half::<S>() {
            bad.push(format!("{} · {} = {}", ring_names[i], ring_names[i + 3], d));
        }
    }
    push("opposite outer pairs meet in 1/2", bad);

    let mut bad = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if j == i + 3 {
                continue; // opposite pair
            }
            let d = ring[i].dot(ring[j]);
            if !d.is_zero() {
                bad.push(format!("{} · {} = {}", ring_names[i], ring_names[j], d));
            }
        }
    }
    push("non-opposite outer pairs are orthogonal", bad);

    let mut bad = Vec::new();
    for (i, p) in ring.iter().enumerate() {
        if !w.dot(p).is_zero() {
            bad.push(format!("w · {} ≠ 0", ring_names[i]));
        }
    }
    if w.q_form() != -S::one() {
        bad.push(format!("w · w = {}", w.q_form()));
    }
    push("middle vertex: orthogonal to the ring, w · w = -1", bad);

    let mut bad = Vec::new();
    for i in 0..6 {
        let j = (i + 1) % 6;
        if !ring[i].cross(ring[j]).is_zero() {
            bad.push(format!("{} × {} ≠ 0", ring_names[i], ring_names[j]));
        }
    }
    push("adjacent outer cross products vanish", bad);

    let mut bad = Vec::new();
    for i in 0..6 {
        let j = (i + 2) % 6;
        let between = (i + 1) % 6;
        if &ring[i].cross(ring[j]) != ring[between] {
            bad.push(format!(
                "{} × {} ≠ {}",
                ring_names[i], ring_names[j], ring_names[between]
            ));
        }
    }
    push("vertices two apart cross to the vertex between", bad);

    let mut bad = Vec::new();
    let half_w = w.scale(&half());
    for (i, j) in [(1, 4), (3, 0), (5, 2)] {
        if ring[i].cross(ring[j]) != half_w {
            bad.push(format!("{} × {} ≠ w/2", ring_names[i], ring_names[j]));
        }
    }
    push("opposite crosses give half the middle vertex", bad);

    let mut bad = Vec::new();
    for (i, name) in [(0usize, "x"), (2, "y"), (4, "z")] {
        if &w.cross(ring[i]) != ring[i] {
            bad.push(format!("w × {} ≠ {}", name, name));
        }
    }
    for (i, name) in [(1usize, "x_cross_y"), (3, "y_cross_z"), (5, "z_cross_x")] {
        if &ring[i].cross(w) != ring[i] {
            bad.push(format!("{} × w ≠ {}", name, name));
        }
    }
    push("middle crosses fix the ring with orientation", bad);

    HexagonReport { rules }
}

///// Dot form as a linear functional: row of coefficients `g_i v_i`.
pub(crate) fn dot_row<S: Scalar>(v: &Imaginary<S>) -> Vec<S> {
    (0..7)
        .map(|i| {
            if GRAM_SIGNS[i] > 0 {
                v.0[i].clone()
            } else {
                -v.0[i].clone()
            }
        })
        .collect()
}

/// Complete a two-roll pair `(x, y)` to the null triple `(x, y, z)`:
/// solve `z·x = 0, z·y = 0, (x×y)·z = 1/2` with free variables zero, then
/// project the particular solution onto the null cone along `x × y`.
pub fn complete_pair<S: Scalar>(
    x: &Imaginary<S>,
    y: &Imaginary<S>,
) -> Result<NullTriple<S>, GeomError> {
    let px = PcPoint::from_vector(x)?;
    let py = PcPoint::from_vector(y)?;
    let d = roll_distance(&px, &py);
    if d != RollDistance::Two {
        return Err(GeomError::NotTwoRolls {
            distance: d.value(),
        });
    }
    let xy = x.cross(y);
    let system = Mat::from_rows(vec![dot_row(x), dot_row(y), dot_row(&xy)]);
    let rhs = [S::zero(), S::zero(), half::<S>()];
    let z1 = system
        .solve_particular(&rhs)
        .expect("completion system has independent rows");
    let z1 = Imaginary(std::array::from_fn(|i| z1[i].clone()));
    // z = z1 - Q(z1) (x × y) is exactly null and keeps all three constraints:
    // x × y is null, orthogonal to x and y, and pairs to 1/2 with z1.
    let z = z1.sub(&xy.scale(&z1.q_form()));
    validate_triple(x, y, &z).map_err(GeomError::from)
}

/// The 24 null candidates `e_a ± e_b` (spacelike `a`, timelike `b`), with the
/// three quaternion-diagonal pairs first. Used by the deterministic scans.
pub(crate) fn candidate_list<S: Scalar>() -> Vec<Imaginary<S>> {
    const PAIRS: [(usize, usize); 12] = [
        (0, 4),
        (1, 5),
        (2, 6),
        (0, 3),
        (0, 5),
        (0, 6),
        (1, 3),
        (1, 4),
        (1, 6),
        (2, 3),
        (2, 4),
        (2, 5),
    ];
    let mut out = Vec::with_capacity(24);
    for (a, b) in PAIRS {
        for sign in [1i64, -1] {
            let mut v = Imaginary::<S>::basis(a);
            v.0[b] = S::from_i64(sign);
            out.push(v);
        }
    }
    out
}

/// Deterministic partner two rolls from `x`: first the fixed candidate list,
/// then a reflection scan through the null cone of `x`'s orthogonal
/// complement (always succeeds; the candidate list alone can fail for
/// generic `x`).
pub(crate) fn two_roll_partner<S: Scalar>(px: &PcPoint<S>) -> Imaginary<S> {
    for c in candidate_list::<S>() {
        let pc = PcPoint::from_vector(&c).expect("candidates are nonzero nulls");
        if roll_distance(px, &pc) == RollDistance::Two {
            return c;
        }
    }
    // Fallback: y(m) = Q(m) y0 - 2 (y0 · m) m is null for any m and stays in
    // x^⊥ when y0 and m do; scan m over the RREF basis of x^⊥ and pairwise
    // sums/differences until the cross with x is nonzero.
    let x = px.rep();
    let perp = Mat::from_rows(vec![dot_row(x)]).kernel_basis();
    let perp: Vec<Imaginary<S>> = perp
        .into_iter()
        .map(|v| Imaginary(std::array::from_fn(|i| v[i].clone())))
        .collect();
    let y0 = annihilator(px)
        .into_iter()
        .find(|row| PcPoint::from_vector(row).expect("annihilator rows are nonzero nulls") != *px)
        .expect("annihilator has rank 3, so some basis row avoids ⟨x⟩");
    let mut candidates: Vec<Imaginary<S>> = perp.clone();
    for i in 0..perp.len() {
        for j in i + 1..perp.len() {
            candidates.push(perp[i].add(&perp[j]));
            candidates.push(perp[i].sub(&perp[j]));
        }
    }
    for m in candidates {
        let two_dot = S::from_i64(2) * y0.dot(&m);
        let y = y0.scale(&m.q_form()).sub(&m.scale(&two_dot));
        if y.is_zero() || x.cross(&y).is_zero() {
            continue;
        }
        debug_assert!(y.q_form().is_zero() && x.dot(&y).is_zero());
        return y;
    }
    unreachable!("reflection scan always finds a two-roll partner")
}

/// A triple extension together with the scalar certificate that was applied
/// to one entry during renormalization (`None` when no rescaling happened).
#[derive(Clone, Debug)]
pub struct Extension<S> {
    pub triple: NullTriple<S>,
    pub scale: Option<S>,
}

/// Extend a configuration to a null triple incident to it. The case is the
/// roll distance of the input configuration:
///
/// - case 0 — a single point `x`: triple `(x, y, z)` with scanned partner `y`;
/// - case 1 — a one-roll pair `(w, x)`: triple `(x, y, z)` with `x × y = w`
///   exactly (`y` rescaled; scalar returned);
/// - case 2 — a two-roll pair `(x, y)`: completion `(x, y, z)`;
/// - case 3 — a three-roll pair `(w, x)`: triple `(x, y, z)` with
///   `⟨y × z⟩ = ⟨w⟩` (`z` rescaled; scalar returned).
pub fn extend_config<S: Scalar>(
    case: u8,
    first: &Imaginary<S>,
    second: Option<&Imaginary<S>>,
) -> Result<Extension<S>, GeomError> {
    match case {
        0 => {
            if second.is_some() {
                return Err(GeomError::InvalidInput(
                    "case 0 takes a single vector".into(),
                ));
            }
            let px = PcPoint::from_vector(first)?;
            let y = two_roll_partner(&px);
            let triple = complete_pair(first, &y)?;
            Ok(Extension {
                triple,
                scale: None,
            })
        }
        1 => {
            let x_vec = second
                .ok_or_else(|| GeomError::InvalidInput("case 1 takes the pair (w, x)".into()))?;
            let pw = PcPoint::from_vector(first)?;
            let px = PcPoint::from_vector(x_vec)?;
            let d = roll_distance(&pw, &px);
            if d != RollDistance::One {
                return Err(GeomError::WrongDistance {
                    case: 1,
                    expected: 1,
                    found: d.value(),
                });
            }
            let w = first;
            // Pick an annihilator basis row of w outside span{w, x}; it is
            // automatically two rolls from x.
            let ann = annihilator(&pw);
            let y = ann
                .iter()
                .find(|row| {
                    Mat::from_rows(vec![w.0.to_vec(), x_vec.0.to_vec(), row.0.to_vec()]).rank() == 3
                })
                .expect("annihilator rank 3 exceeds the 2-dim span{w, x}")
                .clone();
            let py = PcPoint::from_vector(&y)?;
            assert_eq!(
                roll_distance(&px, &py),
                RollDistance::Two,
                "third annihilator direction is two rolls from x"
            );
            // ⟨x × y⟩ = ⟨w⟩ by midpoint uniqueness; rescale y to make it exact.
            let xy = x_vec.cross(&y);
            let lead = xy.first_nonzero().expect("two-roll cross is nonzero");
            let lambda = w.0[lead].clone() / xy.0[lead].clone();
            assert_eq!(xy.scale(&lambda), w.clone(), "w is proportional to x × y");
            let y = y.scale(&lambda);
            let triple = complete_pair(x_vec, &y)?;
            Ok(Extension {
                triple,
                scale: Some(lambda),
            })
        }
        2 => {
            let y_vec = second
                .ok_or_else(|| GeomError::InvalidInput("case 2 takes the pair (x, y)".into()))?;
            let triple = complete_pair(first, y_vec)?;
            Ok(Extension {
                triple,
                scale: None,
            })
        }
        3 => {
            let x_vec = second
                .ok_or_else(|| GeomError::InvalidInput("case 3 takes the pair (w, x)".into()))?;
            let pw = PcPoint::from_vector(first)?;
            let px = PcPoint::from_vector(x_vec)?;
            let d = roll_distance(&pw, &px);
            if d != RollDistance::Three {
                return Err(GeomError::WrongDistance {
                    case: 3,
                    expected: 3,
                    found: d.value(),
                });
            }
            // Kernel of u ↦ u · x on Ann_w is exactly 2-dimensional
            // (w itself pairs nontrivially with x).
            let ann = annihilator(&pw);
            let vals = vec![ann.iter().map(|row| row.dot(x_vec)).collect::<Vec<S>>()];
            let kernel = Mat::from_rows(vals).kernel_basis();
            assert_eq!(kernel.len(), 2, "u ↦ u·x has rank 1 on Ann_w");
            let combine = |coeffs: &[S]| -> Imaginary<S> {
                let mut acc = Imaginary::zero();
                for (c, row) in coeffs.iter().zip(ann.iter()) {
                    acc = acc.add(&row.scale(c));
                }
                acc
            };
            let y = combine(&kernel[0]);
            let z0 = combine(&kernel[1]);
            let yz = y.cross(&z0);
            assert!(!yz.is_zero(), "kernel directions are two rolls apart");
            assert_eq!(
                PcPoint::from_vector(&yz)?,
                pw,
                "⟨y × z⟩ = ⟨w⟩ by midpoint uniqueness"
            );
            // Normalize: (x × y) · z0 = (y × z0) · x ∝ w · x ≠ 0.
            let nu = x_vec.cross(&y).dot(&z0);
            assert!(!nu.is_zero());
            let lambda = half::<S>() / nu;
            let z = z0.scale(&lambda);
            let triple = validate_triple(x_vec, &y, &z)?;
            Ok(Extension {
                triple,
                scale: Some(lambda),
            })
        }
        _ => Err(GeomError::InvalidInput(format!(
            "extension case must be 0..=3, got {}",
            case
        ))),
    }
}

/// Exact automorphism of the imaginary split octonions: a 7×7 rational
/// matrix preserving the dot form and the cross product.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Element {
    m: Mat<Rat>,
}

impl G2Element {
    /// Validate and wrap a matrix: `MᵀGM = G` and `M(e_i × e_j) = Me_i × Me_j`
    /// for all 21 basis pairs (bilinearity extends both to everything).
    pub fn try_new(m: Mat<Rat>) -> Result<Self, GeomError> {
        assert_eq!((m.rows(), m.cols()), (7, 7));
        if !Self::preserves_forms(&m) {
            return Err(GeomError::InvalidInput(
                "matrix does not preserve the dot and cross structure".into(),
            ));
        }
        Ok(G2Element { m })
    }

    fn preserves_forms(m: &Mat<Rat>) -> bool {
        let cols: Vec<Imaginary<Rat>> = (0..7)
            .map(|c| Imaginary(std::array::from_fn(|r| m.at(r, c).clone())))
            .collect();
        for a in 0..7 {
            for b in a..7 {
                let expect = if a == b {
                    Rat::from_i64(GRAM_SIGNS[a] as i64)
                } else {
                    Rat::zero()
                };
                if cols[a].dot(&cols[b]) != expect {
                    return false;
                }
            }
        }
        for a in 0..7 {
            for b in a + 1..7 {
                let image_of_cross = {
                    let c = Imaginary::<Rat>::basis(a).cross(&Imaginary::basis(b));
                    Imaginary(std::array::from_fn(|r| {
                        let mut acc = Rat::zero();
                        for k in 0..7 {
                            acc += m.at(r, k).clone() * c.0[k].clone();
                        }
                        acc
                    }))
                };
                if image_of_cross != cols[a].cross(&cols[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn identity() -> Self {
        G2Element {
            m: Mat::identity(7),
        }
    }

    pub fn matrix(&self) -> &Mat<Rat> {
        &self.m
    }

    pub fn from_matrix_unchecked(m: Mat<Rat>) -> Self {
        debug_assert!(Self::preserves_forms(&m));
        G2Element { m }
    }

    pub fn apply(&self, v: &Imaginary<Rat>) -> Imaginary<Rat> {
        let out = self.m.mul_vec(&v.0);
        Imaginary(std::array::from_fn(|i| out[i].clone()))
    }

    pub fn apply_point(&self, p: &PcPoint<Rat>) -> PcPoint<Rat> {
        PcPoint::from_vector(&self.apply(p.rep())).expect("automorphisms preserve the null cone")
    }

    /// Apply the (real) matrix to a complexified imaginary vector.
    pub fn apply_complex(&self, v: &Imaginary<CRat>) -> Imaginary<CRat> {
        Imaginary(std::array::from_fn(|r| {
            let mut acc = CRat::zero();
            for (k, vk) in v.0.iter().enumerate() {
                let entry = Complex::new(self.m.at(r, k).clone(), Rat::zero());
                acc += entry * vk.clone();
            }
            acc
        }))
    }

    /// Function composition: `(self ∘ other)(v) = self(other(v))`.
    pub fn compose(&self, other: &Self) -> Self {
        G2Element {
            m: self.m.matmul(&other.m),
        }
    }

    pub fn inverse(&self) -> Self {
        G2Element {
            m: self
                .m
                .inverse()
                .expect("form-preserving matrices are invertible"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m == Mat::identity(7)
    }

    pub fn apply_triple(&self, t: &NullTriple<Rat>) -> NullTriple<Rat> {
        validate_triple(&self.apply(&t.x), &self.apply(&t.y), &self.apply(&t.z))
            .expect("automorphisms preserve null triples")
    }
}

/// The unique automorphism carrying one null triple to another: map apartment
/// basis to apartment basis, `M = B₂ B₁⁻¹`.
pub fn g2_from_triples(t1: &NullTriple<Rat>, t2: &NullTriple<Rat>) -> G2Element {
    let b1 = apartment_basis(t1).matrix();
    let b2 = apartment_basis(t2).matrix();
    let inv = b1.inverse().expect("apartment matrices are invertible");
    let m = b2.matmul(&inv);
    G2Element::try_new(m).expect("apartment transport preserves the structure")
}

/// Exact automorphism carrying the ordered pair `(a1, b1)` to `(a2, b2)`
/// (projectively). The pairs must lie in the same orbit, i.e. have the same
/// roll distance.
pub fn pair_transporter(
    a1: &PcPoint<Rat>,
    b1: &PcPoint<Rat>,
    a2: &PcPoint<Rat>,
    b2: &PcPoint<Rat>,
) -> Result<G2Element, GeomError> {
    let c1 = classify_pair(a1, b1);
    let c2 = classify_pair(a2, b2);
    if c1 != c2 {
        return Err(GeomError::DifferentOrbits {
            left: c1.to_string(),
            right: c2.to_string(),
        });
    }
    let triple_for = |a: &PcPoint<Rat>, b: &PcPoint<Rat>| -> Result<NullTriple<Rat>, GeomError> {
        Ok(match c1 {
            OrbitClass::X0 => extend_config(0, a.rep(), None)?.triple,
            OrbitClass::X1 => extend_config(1, a.rep(), Some(b.rep()))?.triple,
            OrbitClass::X2 => complete_pair(a.rep(), b.rep())?,
            OrbitClass::X3 => extend_config(3, a.rep(), Some(b.rep()))?.triple,
        })
    };
    let t1 = triple_for(a1, b1)?;
    let t2 = triple_for(a2, b2)?;
    let g = g2_from_triples(&t1, &t2);
    debug_assert_eq!(g.apply_point(a1), *a2);
    debug_assert_eq!(g.apply_point(b1), *b2);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::imag_from_i64;
    use crate::scalar::{rat, rint};

    fn im(c: [i64; 7]) -> Imaginary<Rat> {
        imag_from_i64(c)
    }

    fn x_ii() -> Imaginary<Rat> {
        im([1, 0, 0, 0, 1, 0, 0])
    }

    fn y_jj() -> Imaginary<Rat> {
        im([0, 1, 0, 0, 0, 1, 0])
    }

    fn z_k8() -> Imaginary<Rat> {
        Imaginary([
            rint(0),
            rint(0),
            rat(1, 8),
            rint(0),
            rint(0),
            rint(0),
            rat(1, 8),
        ])
    }

    fn derived_triple() -> NullTriple<Rat> {
        validate_triple(&x_ii(), &y_jj(), &z_k8()).unwrap()
    }

    #[test]
    fn validation_reports_the_failing_condition() {
        assert!(validate_triple(&x_ii(), &y_jj(), &z_k8()).is_ok());
        // Scaling x by 2 breaks only the normalization.
        let doubled = x_ii().scale(&rint(2));
        assert!(matches!(
            validate_triple(&doubled, &y_jj(), &z_k8()),
            Err(TripleViolation::Normalization { .. })
        ));
        // A non-null entry.
        assert!(matches!(
            validate_triple(&im([1, 0, 0, 0, 0, 0, 0]), &y_jj(), &z_k8()),
            Err(TripleViolation::NotNull { index: 0, .. })
        ));
        // Non-orthogonal entries.
        assert!(matches!(
            validate_triple(&x_ii(), &im([1, 0, 0, 0, -1, 0, 0]), &z_k8()),
            Err(TripleViolation::NotOrthogonal { i: 0, j: 1, .. })
        ));
        assert!(matches!(
            validate_triple(&Imaginary::zero(), &y_jj(), &z_k8()),
            Err(TripleViolation::Zero { index: 0 })
        ));
    }

    #[test]
    fn completion_matches_worked_example() {
        let t = complete_pair(&x_ii(), &y_jj()).unwrap();
        assert_eq!(t.z(), &z_k8());
        // Refusal on wrong distances.
        assert_eq!(
            complete_pair(&x_ii(), &im([0, 1, 0, 0, 0, -1, 0])),
            Err(GeomError::NotTwoRolls { distance: 1 })
        );
    }

    #[test]
    fn apartment_of_derived_triple() {
        let a = apartment_basis(&derived_triple());
        let v = a.vectors();
        assert_eq!(v[3], im([0, 0, 2, 0, 0, 0, -2]));
        assert_eq!(
            v[4],
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
            v[5],
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
        // Middle vertex is (0, 1) = e4.
        assert_eq!(a.w(), &Imaginary::basis(3));
        assert!(!a.matrix().det().is_zero());
    }

    #[test]
    fn hexagon_rules_hold_for_derived_triple() {
        let report = hexagon_check(&derived_triple());
        assert_eq!(report.rules.len(), 8);
        for rule in &report.rules {
            assert!(rule.ok, "{}: {:?}", rule.rule, rule.detail);
        }
    }

    #[test]
    fn extension_case0_matches_worked_example() {
        let ext = extend_config(0, &x_ii(), None).unwrap();
        assert_eq!(ext.triple.x(), &x_ii());
        assert_eq!(ext.triple.y(), &y_jj());
        assert_eq!(ext.triple.z(), &z_k8());
        assert!(ext.scale.is_none());
    }

    #[test]
    fn extension_case1_scales_y() {
        // w = (2k, -2k) = x × y is one roll from x = (i, i).
        let w = im([0, 0, 2, 0, 0, 0, -2]);
        let ext = extend_config(1, &w, Some(&x_ii())).unwrap();
        let t = &ext.triple;
        assert_eq!(t.x(), &x_ii());
        assert_eq!(t.x().cross(t.y()), w);
        assert!(ext.scale.is_some());
        // Any nonzero rescaling of w yields the same projective data.
        let w5 = w.scale(&rat(-5, 3));
        let ext5 = extend_config(1, &w5, Some(&x_ii())).unwrap();
        assert_eq!(ext5.triple.x().cross(ext5.triple.y()), w5);
    }

    #[test]
    fn extension_case3_encodes_w_projectively() {
        let w = im([1, 0, 0, 0, -1, 0, 0]); // (i, -i): dot with (i, i) is 2, three rolls
        let ext = extend_config(3, &w, Some(&x_ii())).unwrap();
        let t = &ext.triple;
        assert_eq!(t.x(), &x_ii());
        let yz = t.y().cross(t.z());
        assert_eq!(
            PcPoint::from_vector(&yz).unwrap(),
            PcPoint::from_vector(&w).unwrap()
        );
        assert!(ext.scale.is_some());
    }

    #[test]
    fn extension_rejects_wrong_distance() {
        assert!(matches!(
            extend_config(1, &x_ii(), Some(&y_jj())),
            Err(GeomError::WrongDistance {
                case: 1,
                expected: 1,
                found: 2
            })
        ));
        assert!(matches!(
            extend_config(4, &x_ii(), None),
            Err(GeomError::InvalidInput(_))
        ));
    }

    #[test]
    fn torsor_identity_and_cyclic_order_three() {
        let t = derived_triple();
        let id = g2_from_triples(&t, &t);
        assert!(id.is_identity());

        let rot = g2_from_triples(&t, &t.cyclic());
        let cubed = rot.compose(&rot).compose(&rot);
        assert!(cubed.is_identity());
        assert!(!rot.is_identity());
    }

    #[test]
    fn transporter_moves_pairs() {
        let a1 = PcPoint::from_vector(&x_ii()).unwrap();
        let b1 = PcPoint::from_vector(&y_jj()).unwrap();
        let a2 = PcPoint::from_vector(&im([0, 1, 0, 0, 0, 1, 0])).unwrap();
        let b2 = PcPoint::from_vector(&im([0, 0, 1, 0, 0, 0, 1])).unwrap();
        let g = pair_transporter(&a1, &b1, &a2, &b2).unwrap();
        assert_eq!(g.apply_point(&a1), a2);
        assert_eq!(g.apply_point(&b1), b2);

        let mismatch = pair_transporter(&a1, &b1, &a2, &a2);
        assert!(matches!(mismatch, Err(GeomError::DifferentOrbits { .. })));
    }
}
