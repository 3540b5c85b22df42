//! Hyperplane piercing verification and the constructive transversal
//! pipelines: the single-hyperplane solver for pairwise-intersecting families
//! and the k-hyperplane solver for families whose Kneser coloring hypothesis
//! holds, both routed through Gale duality and the constrained Radon-tuple
//! search on the lifted witness configuration.

use crate::gale::{
    center_and_lift, hyperplane_from_radon, inverse_gale, LinearHyperplane, PointConfig,
};
use crate::kneser::{self, SetFamily};
use crate::linalg::{self, Vector};
use crate::lp::{lp_feasible, LpOutcome, LpProblem};
use crate::radon::{find_constrained_radon_tuple_capped, RadonTuple};
use crate::rat::Rat;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A polytope given by its vertices (V-representation).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polytope {
    vertices: Vec<Vector>,
}

impl Polytope {
    pub fn new(vertices: Vec<Vector>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("polytope needs at least one vertex".into()));
        }
        let dim = vertices[0].len();
        if vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch(
                "polytope vertices must share a dimension".into(),
            ));
        }
        Ok(Polytope { vertices })
    }

    pub fn from_int_vertices(pts: &[&[i64]]) -> Result<Self> {
        Polytope::new(
            pts.iter()
                .map(|p| p.iter().map(|&x| Rat::int(x)).collect())
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Exact membership test by LP over convex coefficients.
    pub fn contains(&self, point: &[Rat]) -> Result<bool> {
        if point.len() != self.dim() {
            return Err(Error::DimensionMismatch(
                "point and polytope dimensions differ".into(),
            ));
        }
        let vars = self.vertices.len();
        let mut p = LpProblem::new(vars);
        for d in 0..self.dim() {
            let row: Vec<Rat> = self.vertices.iter().map(|v| v[d].clone()).collect();
            p.add_eq(row, point[d].clone())?;
        }
        p.add_eq(vec![Rat::one(); vars], Rat::one())?;
        p.set_all_nonneg();
        Ok(lp_feasible(&p)?.witness().is_some())
    }
}

/// An affine hyperplane `<a, x> = b` in canonical form: integer-cleared,
/// content 1, first nonzero normal entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineHyperplane {
    normal: Vector,
    offset: Rat,
}

impl AffineHyperplane {
    pub fn new(normal: &[Rat], offset: &Rat) -> Result<Self> {
        if linalg::is_zero_vec(normal) {
            return Err(Error::InvalidInput("hyperplane normal must be nonzero".into()));
        }
        // Joint canonicalization; the offset sits last, so the sign rule is
        // driven by the first nonzero normal entry.
        let mut joint = normal.to_vec();
        joint.push(offset.clone());
        let mut canon = linalg::canonical_integer_direction(&joint)
            .expect("nonzero by the check above");
        let offset = canon.pop().expect("offset slot");
        Ok(AffineHyperplane {
            normal: canon,
            offset,
        })
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `<a, p> - b`; the open sides are the strict signs.
    pub fn eval(&self, p: &[Rat]) -> Rat {
        linalg::dot(&self.normal, p) - &self.offset
    }

    /// The linear hyperplane in one dimension up whose height-one slice is
    /// this affine hyperplane.
    pub fn to_linear(&self) -> LinearHyperplane {
        let mut dir = self.normal.clone();
        dir.push(-&self.offset);
        LinearHyperplane::new(&dir).expect("normal is nonzero")
    }

    /// Intersects a linear hyperplane with the height-one copy of the space
    /// one dimension down. Errors when the hyperplane is horizontal (its
    /// slice at height one is empty).
    pub fn from_linear_at_height_one(h: &LinearHyperplane) -> Result<Self> {
        let alpha = h.normal();
        let d = alpha.len() - 1;
        let normal = &alpha[..d];
        if linalg::is_zero_vec(normal) {
            return Err(Error::Internal(
                "horizontal linear hyperplane has no affine slice".into(),
            ));
        }
        AffineHyperplane::new(normal, &-&alpha[d])
    }
}

/// Exact witness that one polytope meets one hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PierceWitness {
    pub polytope: usize,
    pub hyperplane: usize,
    pub point: Vector,
    /// Convex coefficients over the polytope's vertices.
    pub coefficients: Vec<Rat>,
}

/// Hyperplanes together with one verifiable witness per polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TransversalCertificate {
    pub hyperplanes: Vec<AffineHyperplane>,
    pub witnesses: Vec<PierceWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiercesOutcome {
    Certified(TransversalCertificate),
    /// Index of a polytope missed by every hyperplane.
    Missed { polytope: usize },
}

/// For each polytope, searches a point on some hyperplane inside the
/// polytope (the convex-combination system with the hyperplane equality
/// added). Hyperplanes are tried in order; the first hit is recorded.
pub fn pierces_verify(
    hyperplanes: &[AffineHyperplane],
    polytopes: &[Polytope],
) -> Result<PiercesOutcome> {
    if hyperplanes.is_empty() {
        return Err(Error::InvalidInput("no hyperplanes given".into()));
    }
    let dim = hyperplanes[0].dim();
    if hyperplanes.iter().any(|h| h.dim() != dim)
        || polytopes.iter().any(|p| p.dim() != dim)
    {
        return Err(Error::DimensionMismatch(
            "hyperplanes and polytopes must share a dimension".into(),
        ));
    }
    let mut witnesses = Vec::with_capacity(polytopes.len());
    for (pi, poly) in polytopes.iter().enumerate() {
        let mut found = None;
        for (hi, h) in hyperplanes.iter().enumerate() {
            if let Some(w) = polytope_on_hyperplane(poly, h)? {
                found = Some(PierceWitness {
                    polytope: pi,
                    hyperplane: hi,
                    point: w.0,
                    coefficients: w.1,
                });
                break;
            }
        }
        match found {
            Some(w) => witnesses.push(w),
            None => return Ok(PiercesOutcome::Missed { polytope: pi }),
        }
    }
    Ok(PiercesOutcome::Certified(TransversalCertificate {
        hyperplanes: hyperplanes.to_vec(),
        witnesses,
    }))
}

fn polytope_on_hyperplane(
    poly: &Polytope,
    h: &AffineHyperplane,
) -> Result<Option<(Vector, Vec<Rat>)>> {
    let vars = poly.vertices().len();
    let mut p = LpProblem::new(vars);
    p.add_eq(vec![Rat::one(); vars], Rat::one())?;
    p.add_eq(
        poly.vertices()
            .iter()
            .map(|v| linalg::dot(h.normal(), v))
            .collect(),
        h.offset().clone(),
    )?;
    p.set_all_nonneg();
    match lp_feasible(&p)? {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Feasible(lambda) => {
            let mut point = vec![Rat::zero(); poly.dim()];
            for (l, v) in lambda.iter().zip(poly.vertices()) {
                for (acc, x) in point.iter_mut().zip(v) {
                    *acc += l * x;
                }
            }
            Ok(Some((point, lambda)))
        }
    }
}

/// Exact substitution check of a stored certificate: every polytope has a
/// witness whose point is the stated convex combination and lies on the
/// stated hyperplane.
pub fn verify_transversal_certificate(
    cert: &TransversalCertificate,
    polytopes: &[Polytope],
) -> Result<()> {
    let mut covered = vec![false; polytopes.len()];
    for w in &cert.witnesses {
        let poly = polytopes
            .get(w.polytope)
            .ok_or(Error::IndexOutOfRange {
                index: w.polytope,
                n: polytopes.len(),
            })?;
        let h = cert
            .hyperplanes
            .get(w.hyperplane)
            .ok_or(Error::IndexOutOfRange {
                index: w.hyperplane,
                n: cert.hyperplanes.len(),
            })?;
        if w.coefficients.len() != poly.vertices().len() {
            return Err(Error::InvalidCertificate(
                "witness coefficient count mismatch".into(),
            ));
        }
        if w.coefficients.iter().any(Rat::is_negative)
            || w.coefficients.iter().sum::<Rat>() != Rat::one()
        {
            return Err(Error::InvalidCertificate(
                "witness coefficients are not convex".into(),
            ));
        }
        let mut point = vec![Rat::zero(); poly.dim()];
        for (l, v) in w.coefficients.iter().zip(poly.vertices()) {
            for (acc, x) in point.iter_mut().zip(v) {
                *acc += l * x;
            }
        }
        if point != w.point {
            return Err(Error::InvalidCertificate(
                "witness point is not the stated combination".into(),
            ));
        }
        if !h.eval(&point).is_zero() {
            return Err(Error::InvalidCertificate(
                "witness point is off its hyperplane".into(),
            ));
        }
        covered[w.polytope] = true;
    }
    if let Some(missing) = covered.iter().position(|c| !c) {
        return Err(Error::InvalidCertificate(format!(
            "polytope {missing} has no witness"
        )));
    }
    Ok(())
}

/// The finite point set carrying a polytope family: deduplicated vertices
/// plus intersection witnesses, with each polytope mapped to the indices of
/// the points it contains.
#[derive(Debug, Clone)]
pub struct WitnessSet {
    pub config: PointConfig,
    /// Per polytope (input order): sorted indices of contained points.
    pub members: Vec<Vec<usize>>,
    /// Per polytope: its class (family) label.
    pub classes: Vec<usize>,
}

impl WitnessSet {
    pub fn family(&self) -> Result<SetFamily> {
        SetFamily::from_sets(
            self.config.len(),
            self.members.iter().map(|m| m.iter().copied().collect()),
        )
    }

    fn member_masks(&self) -> Vec<u64> {
        self.members
            .iter()
            .map(|m| m.iter().fold(0u64, |acc, &i| acc | (1 << i)))
            .collect()
    }

    /// Indices of a same-class pair whose polytopes share no point of the
    /// set, if any. After construction such a pair has disjoint hulls.
    pub fn disjoint_same_class_pair(&self) -> Option<(usize, usize)> {
        let masks = self.member_masks();
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if self.classes[i] == self.classes[j] && masks[i] & masks[j] == 0 {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Builds the witness point set for a polytope family partitioned into
/// classes: all vertices (deduplicated), closed under exact membership, plus
/// one intersection witness for every same-class pair of polytopes that
/// intersect without already sharing a point. Pairs that share a vertex use
/// that vertex as their intersection point, so no point is added for them.
pub fn build_witness_set(polytopes: &[Polytope], classes: &[usize]) -> Result<WitnessSet> {
    if polytopes.is_empty() {
        return Err(Error::InvalidInput("family must be nonempty".into()));
    }
    if classes.len() != polytopes.len() {
        return Err(Error::InvalidInput("one class label per polytope".into()));
    }
    let dim = polytopes[0].dim();
    if polytopes.iter().any(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch(
            "family members must share a dimension".into(),
        ));
    }

    let mut ground: Vec<Vector> = Vec::new();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); polytopes.len()];
    let index_of = |ground: &mut Vec<Vector>, p: &Vector| -> usize {
        match ground.iter().position(|q| q == p) {
            Some(i) => i,
            None => {
                ground.push(p.clone());
                ground.len() - 1
            }
        }
    };
    for (pi, poly) in polytopes.iter().enumerate() {
        for v in poly.vertices() {
            let idx = index_of(&mut ground, v);
            if !members[pi].contains(&idx) {
                members[pi].push(idx);
            }
        }
    }
    // Membership closure: a point of the set belongs to every polytope that
    // contains it, not only to the one it came from.
    for gi in 0..ground.len() {
        for (pi, poly) in polytopes.iter().enumerate() {
            if !members[pi].contains(&gi) && poly.contains(&ground[gi])? {
                members[pi].push(gi);
            }
        }
    }
    // Intersection witnesses for same-class pairs that share no point yet.
    for i in 0..polytopes.len() {
        for j in i + 1..polytopes.len() {
            if classes[i] != classes[j] {
                continue;
            }
            if members[i].iter().any(|gi| members[j].contains(gi)) {
                continue;
            }
            if let Some(w) = polytopes_intersect(&polytopes[i], &polytopes[j])? {
                let idx = ground.len();
                ground.push(w);
                for (pi, poly) in polytopes.iter().enumerate() {
                    if poly.contains(&ground[idx])? {
                        members[pi].push(idx);
                    }
                }
                debug_assert!(members[i].contains(&idx) && members[j].contains(&idx));
            }
        }
    }
    for m in &mut members {
        m.sort_unstable();
    }
    Ok(WitnessSet {
        config: PointConfig::new(dim, ground)?,
        members,
        classes: classes.to_vec(),
    })
}

/// Deterministic exact intersection point of two polytopes, if any.
pub fn polytopes_intersect(a: &Polytope, b: &Polytope) -> Result<Option<Vector>> {
    let na = a.vertices().len();
    let nb = b.vertices().len();
    let vars = na + nb;
    let mut p = LpProblem::new(vars);
    for d in 0..a.dim() {
        let mut row = Vec::with_capacity(vars);
        for v in a.vertices() {
            row.push(v[d].clone());
        }
        for v in b.vertices() {
            row.push(-&v[d]);
        }
        p.add_eq(row, Rat::zero())?;
    }
    let mut sum_a = vec![Rat::zero(); vars];
    sum_a[..na].fill(Rat::one());
    p.add_eq(sum_a, Rat::one())?;
    let mut sum_b = vec![Rat::zero(); vars];
    sum_b[na..].fill(Rat::one());
    p.add_eq(sum_b, Rat::one())?;
    p.set_all_nonneg();
    match lp_feasible(&p)? {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Feasible(w) => {
            let mut point = vec![Rat::zero(); a.dim()];
            for (l, v) in w[..na].iter().zip(a.vertices()) {
                for (acc, x) in point.iter_mut().zip(v) {
                    *acc += l * x;
                }
            }
            Ok(Some(point))
        }
    }
}

/// A proven regime `(k, m) -> least dimension with a guaranteed transversal`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regime {
    pub tag: &'static str,
    pub dimension: usize,
}

/// The regime table is data: every entry for `(k, m)` gives a dimension at
/// which `k` hyperplanes are guaranteed for families with a valid
/// `2^k`-Kneser coloring in `m` classes. Guarantees are monotone in the
/// ambient dimension.
pub fn regimes(k: usize, m: usize) -> Vec<Regime> {
    assert!(k >= 1 && m >= 1);
    let mut out = Vec::new();
    let p = usize::BITS as usize - 1 - m.leading_zeros() as usize;
    let q = m - (1 << p);
    out.push(Regime {
        tag: "general",
        dimension: (1usize << (k + p - 1)) + q,
    });
    if k == 2 {
        let near_power = m.is_power_of_two()
            || (m + 1).is_power_of_two()
            || (m >= 3 && (m - 1).is_power_of_two());
        if near_power {
            out.push(Regime {
                tag: "two-planes",
                dimension: (3 * m).div_ceil(2),
            });
        }
    }
    if k == 3 && m == 1 {
        out.push(Regime {
            tag: "three-planes",
            dimension: 3,
        });
    }
    // Tightness floor: no regime can beat ceil((2^k - 1) m / k).
    debug_assert!(out
        .iter()
        .all(|r| r.dimension >= (((1usize << k) - 1) * m).div_ceil(k)));
    out
}

/// The strongest applicable regime at ambient dimension `c`, if any.
pub fn guarantee(k: usize, m: usize, c: usize) -> Option<Regime> {
    regimes(k, m)
        .into_iter()
        .filter(|r| r.dimension <= c)
        .min_by_key(|r| r.dimension)
}

#[derive(Debug, Clone, Copy)]
pub struct TransversalOptions {
    /// Error out when `(k, m, c)` is outside every proven regime. When off,
    /// the search still runs and the solution is flagged as empirical.
    pub enforce_regime: bool,
    /// Cap on Radon-pair support size during enumeration; the default keeps
    /// the scan complete.
    pub max_support: usize,
}

impl Default for TransversalOptions {
    fn default() -> Self {
        TransversalOptions {
            enforce_regime: true,
            max_support: usize::MAX,
        }
    }
}

/// Output of the index-level pipeline.
#[derive(Debug, Clone)]
pub struct CoreSolution {
    pub hyperplanes: Vec<AffineHyperplane>,
    pub tuple: RadonTuple,
    /// Tag of the regime backing the guarantee, `None` when empirical.
    pub regime: Option<&'static str>,
}

/// The index-level transversal pipeline over a ground configuration and a
/// family of index sets partitioned into at most `m` classes:
/// center-and-lift the ground set, invert the Gale transform, search `k`
/// minimal Radon pairs whose side intersections avoid every member, dualize
/// each pair to a linear hyperplane, and slice at height one. The returned
/// hyperplanes are verified exactly against every member hull before return.
pub fn hyperplane_transversal_core(
    ground: &PointConfig,
    members: &[Vec<usize>],
    classes: &[usize],
    k: usize,
    m: usize,
    opts: &TransversalOptions,
) -> Result<CoreSolution> {
    if members.is_empty() {
        return Err(Error::InvalidInput("family must be nonempty".into()));
    }
    if classes.len() != members.len() {
        return Err(Error::InvalidInput("one class label per member".into()));
    }
    if members.iter().any(Vec::is_empty) {
        return Err(Error::InvalidInput("family members must be nonempty".into()));
    }
    let class_count = classes.iter().max().map_or(0, |c| c + 1);
    if class_count > m {
        return Err(Error::HypothesisViolation(format!(
            "coloring uses {class_count} classes, hypothesis allows {m}"
        )));
    }
    let c = ground.dim();
    let regime = guarantee(k, m, c);
    if opts.enforce_regime && regime.is_none() {
        let need = regimes(k, m)
            .iter()
            .map(|r| r.dimension)
            .min()
            .expect("table is never empty");
        return Err(Error::RegimeViolation(format!(
            "k={k}, m={m} needs ambient dimension at least {need}, got {c}"
        )));
    }

    // Kneser hypothesis on the index family: no class contains 2^k pairwise
    // disjoint members.
    let masks: Vec<u64> = members
        .iter()
        .map(|mm| mm.iter().fold(0u64, |acc, &i| acc | (1 << i)))
        .collect();
    for class in 0..class_count {
        let in_class: Vec<usize> = (0..members.len())
            .filter(|&i| classes[i] == class)
            .collect();
        if let Some(edge) = kneser::disjoint_tuple_search(&masks, &in_class, 1 << k) {
            return Err(Error::HypothesisViolation(format!(
                "class {class} contains {} pairwise disjoint members (indices {edge:?})",
                1 << k
            )));
        }
    }

    let lift = center_and_lift(ground);
    let lifted = &lift.config;
    let primal = inverse_gale(lifted)?;
    let family = SetFamily::from_sets(
        lifted.len(),
        members.iter().map(|mm| mm.iter().copied().collect()),
    )?;
    let tuple = find_constrained_radon_tuple_capped(&primal, &family, k, opts.max_support)?;

    let mut hyperplanes = Vec::with_capacity(k);
    for pair in &tuple.pairs {
        let (linear, _pattern) = hyperplane_from_radon(lifted, pair, &primal)?;
        let affine = if lift.degenerate {
            // No lift happened: a linear hyperplane of the ambient space is
            // the affine answer through the origin.
            AffineHyperplane::new(linear.normal(), &Rat::zero())?
        } else {
            AffineHyperplane::from_linear_at_height_one(&linear)?
        };
        hyperplanes.push(affine);
    }

    // Binding verification: every member hull meets the union.
    let member_hulls: Vec<Polytope> = members
        .iter()
        .map(|mm| {
            Polytope::new(mm.iter().map(|&i| ground.point(i).clone()).collect())
        })
        .collect::<Result<_>>()?;
    match pierces_verify(&hyperplanes, &member_hulls)? {
        PiercesOutcome::Certified(_) => {}
        PiercesOutcome::Missed { polytope } => {
            return Err(Error::Internal(format!(
                "solver produced hyperplanes missing member {polytope}"
            )))
        }
    }
    Ok(CoreSolution {
        hyperplanes,
        tuple,
        regime: regime.map(|r| r.tag),
    })
}

/// A verified transversal solution at the polytope level.
#[derive(Debug, Clone)]
pub struct TransversalSolution {
    pub certificate: TransversalCertificate,
    pub tuple: RadonTuple,
    pub regime: Option<&'static str>,
}

/// Single-hyperplane transversal for `d` pairwise-intersecting families of
/// polytopes in `R^d`. The hypothesis is checked exactly; the certificate is
/// verified before return.
pub fn dolnikov_hyperplane(families: &[Vec<Polytope>]) -> Result<TransversalSolution> {
    if families.is_empty() || families.iter().any(Vec::is_empty) {
        return Err(Error::InvalidInput("every family must be nonempty".into()));
    }
    let d = families.len();
    let polytopes: Vec<Polytope> = families.iter().flatten().cloned().collect();
    let classes: Vec<usize> = families
        .iter()
        .enumerate()
        .flat_map(|(i, f)| std::iter::repeat(i).take(f.len()))
        .collect();
    if polytopes[0].dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "{d} families require ambient dimension {d}, got {}",
            polytopes[0].dim()
        )));
    }
    let ws = build_witness_set(&polytopes, &classes)?;
    if let Some((i, j)) = ws.disjoint_same_class_pair() {
        return Err(Error::HypothesisViolation(format!(
            "family {} is not intersecting: members {i} and {j} are disjoint",
            classes[i]
        )));
    }
    let core = hyperplane_transversal_core(
        &ws.config,
        &ws.members,
        &ws.classes,
        1,
        d,
        &TransversalOptions::default(),
    )?;
    match pierces_verify(&core.hyperplanes, &polytopes)? {
        PiercesOutcome::Certified(certificate) => Ok(TransversalSolution {
            certificate,
            tuple: core.tuple,
            regime: core.regime,
        }),
        PiercesOutcome::Missed { polytope } => Err(Error::Internal(format!(
            "verified core solution misses polytope {polytope}"
        ))),
    }
}

/// k-hyperplane transversal for a polytope family with a coloring witnessing
/// the `2^k`-Kneser hypothesis in `m` classes. The coloring is verified on
/// the witness index family (exact hull intersections within classes are
/// realized by shared points), the pipeline runs in the lift, and the final
/// certificate is verified against the input polytopes.
pub fn affine_k_transversal(
    polytopes: &[Polytope],
    k: usize,
    m: usize,
    coloring: &kneser::Coloring,
    opts: &TransversalOptions,
) -> Result<TransversalSolution> {
    if coloring.colors.len() != polytopes.len() {
        return Err(Error::InvalidInput(
            "coloring must assign every polytope".into(),
        ));
    }
    let ws = build_witness_set(polytopes, &coloring.colors)?;
    let core = hyperplane_transversal_core(&ws.config, &ws.members, &ws.classes, k, m, opts)?;
    match pierces_verify(&core.hyperplanes, polytopes)? {
        PiercesOutcome::Certified(certificate) => Ok(TransversalSolution {
            certificate,
            tuple: core.tuple,
            regime: core.regime,
        }),
        PiercesOutcome::Missed { polytope } => Err(Error::Internal(format!(
            "verified core solution misses polytope {polytope}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::Coloring;

    fn interval(a: (i64, i64), b: (i64, i64)) -> Polytope {
        Polytope::new(vec![
            vec![Rat::frac(a.0, a.1)],
            vec![Rat::frac(b.0, b.1)],
        ])
        .unwrap()
    }

    #[test]
    fn pierce_two_intervals_at_zero() {
        let h = AffineHyperplane::new(&[Rat::one()], &Rat::zero()).unwrap();
        let polys = vec![interval((-1, 1), (1, 1)), interval((0, 1), (2, 1))];
        match pierces_verify(&[h], &polys).unwrap() {
            PiercesOutcome::Certified(cert) => {
                assert_eq!(cert.witnesses.len(), 2);
                for w in &cert.witnesses {
                    assert_eq!(w.point, vec![Rat::zero()]);
                }
                verify_transversal_certificate(&cert, &polys).unwrap();
            }
            PiercesOutcome::Missed { .. } => panic!("both intervals contain 0"),
        }
    }

    #[test]
    fn pierce_reports_missed_polytope() {
        let h = AffineHyperplane::new(&[Rat::one()], &Rat::zero()).unwrap();
        let polys = vec![interval((1, 1), (2, 1))];
        assert_eq!(
            pierces_verify(&[h], &polys).unwrap(),
            PiercesOutcome::Missed { polytope: 0 }
        );
    }

    #[test]
    fn two_planes_pierce_straddling_boxes() {
        let h1 = AffineHyperplane::new(
            &[Rat::one(), Rat::zero(), Rat::zero()],
            &Rat::zero(),
        )
        .unwrap();
        let h2 = AffineHyperplane::new(
            &[Rat::zero(), Rat::zero(), Rat::one()],
            &Rat::int(5),
        )
        .unwrap();
        let boxes: Vec<Polytope> = (0..6)
            .map(|i| {
                let (lo, hi) = if i % 2 == 0 { (-2, 1) } else { (4, 6) };
                let c = i as i64;
                let mut vs = Vec::new();
                for x in [lo, hi] {
                    for y in [c, c + 1] {
                        for z in [lo, hi] {
                            vs.push(vec![
                                Rat::int(if i % 2 == 0 { x } else { x - 5 }),
                                Rat::int(y),
                                Rat::int(z),
                            ]);
                        }
                    }
                }
                Polytope::new(vs).unwrap()
            })
            .collect();
        match pierces_verify(&[h1, h2], &boxes).unwrap() {
            PiercesOutcome::Certified(cert) => {
                verify_transversal_certificate(&cert, &boxes).unwrap()
            }
            PiercesOutcome::Missed { polytope } => panic!("box {polytope} straddles a plane"),
        }
    }

    #[test]
    fn affine_linear_slice_round_trip() {
        let h = AffineHyperplane::new(
            &[Rat::frac(2, 3), Rat::int(-1)],
            &Rat::frac(1, 2),
        )
        .unwrap();
        let again = AffineHyperplane::from_linear_at_height_one(&h.to_linear()).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn witness_set_for_overlapping_intervals() {
        let polys = vec![interval((0, 1), (2, 1)), interval((1, 1), (3, 1))];
        let ws = build_witness_set(&polys, &[0, 0]).unwrap();
        // endpoints 1 and 2 lie in both intervals, so membership closure
        // already shares them and no witness point is added
        assert_eq!(ws.config.len(), 4);
        assert!(ws.members[0].contains(&2) && ws.members[1].contains(&2));
        assert!(ws.members[0].contains(&1) && ws.members[1].contains(&1));
        assert!(ws.disjoint_same_class_pair().is_none());
    }

    #[test]
    fn witness_set_adds_a_point_for_crossing_segments() {
        // diagonals of the unit square: vertex sets disjoint, no vertex of
        // one lies on the other, so the LP witness (1/2,1/2) must be added
        let a = Polytope::from_int_vertices(&[&[0, 0], &[1, 1]]).unwrap();
        let b = Polytope::from_int_vertices(&[&[1, 0], &[0, 1]]).unwrap();
        let ws = build_witness_set(&[a, b], &[0, 0]).unwrap();
        assert_eq!(ws.config.len(), 5);
        assert_eq!(
            ws.config.point(4),
            &vec![Rat::frac(1, 2), Rat::frac(1, 2)]
        );
        assert!(ws.members[0].contains(&4));
        assert!(ws.members[1].contains(&4));
        assert!(ws.disjoint_same_class_pair().is_none());
    }

    #[test]
    fn witness_set_keeps_disjoint_members_lean() {
        let polys = vec![interval((0, 1), (1, 1)), interval((5, 1), (6, 1))];
        let ws = build_witness_set(&polys, &[0, 0]).unwrap();
        assert_eq!(ws.config.len(), 4);
        assert_eq!(ws.disjoint_same_class_pair(), Some((0, 1)));
    }

    #[test]
    fn single_polytope_witness_set_is_its_vertices() {
        let polys = vec![interval((0, 1), (1, 1))];
        let ws = build_witness_set(&polys, &[0]).unwrap();
        assert_eq!(ws.config.len(), 2);
        assert_eq!(ws.members, vec![vec![0, 1]]);
    }

    #[test]
    fn helly_intervals_give_a_point_in_the_overlap() {
        // pairwise-intersecting intervals [0,2],[1,3],[3/2,5/2]: the common
        // intersection is [3/2,2], and the transversal point must land there
        let family = vec![
            interval((0, 1), (2, 1)),
            interval((1, 1), (3, 1)),
            interval((3, 2), (5, 2)),
        ];
        let sol = dolnikov_hyperplane(&[family]).unwrap();
        assert_eq!(sol.certificate.hyperplanes.len(), 1);
        let h = &sol.certificate.hyperplanes[0];
        let point = h.offset() / &h.normal()[0];
        assert!(point >= Rat::frac(3, 2) && point <= Rat::int(2));
        assert_eq!(sol.regime, Some("general"));
    }

    #[test]
    fn dolnikov_rejects_non_intersecting_family() {
        let family = vec![interval((0, 1), (1, 1)), interval((5, 1), (6, 1))];
        assert!(matches!(
            dolnikov_hyperplane(&[family]),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn common_point_family_is_pierced() {
        // every polytope contains the origin; any transversal must verify
        let tri = |a: [i64; 2], b: [i64; 2]| {
            Polytope::from_int_vertices(&[&[0, 0], &a, &b]).unwrap()
        };
        let fam1 = vec![tri([2, 0], [0, 2]), tri([-2, 0], [0, -2])];
        let fam2 = vec![tri([1, 1], [-1, 1]), tri([1, -1], [-1, -1])];
        let sol = dolnikov_hyperplane(&[fam1.clone(), fam2.clone()]).unwrap();
        let all: Vec<Polytope> = fam1.into_iter().chain(fam2).collect();
        verify_transversal_certificate(&sol.certificate, &all).unwrap();
    }

    #[test]
    fn regime_table_values() {
        assert_eq!(guarantee(1, 3, 3).unwrap().dimension, 3);
        assert!(guarantee(1, 3, 2).is_none());
        // two-plane family beats the general bound at m = 2
        assert_eq!(guarantee(2, 2, 3).unwrap().tag, "two-planes");
        assert_eq!(guarantee(2, 2, 3).unwrap().dimension, 3);
        assert_eq!(guarantee(3, 1, 3).unwrap().tag, "three-planes");
        // tightness floor
        for k in 1..=4usize {
            for m in 1..=16usize {
                let floor = (((1usize << k) - 1) * m).div_ceil(k);
                for r in regimes(k, m) {
                    assert!(r.dimension >= floor, "k={k} m={m} {:?}", r);
                }
            }
        }
    }

    #[test]
    fn k1_core_matches_single_hyperplane_solver() {
        let family = vec![
            interval((0, 1), (2, 1)),
            interval((1, 1), (3, 1)),
        ];
        let sol = dolnikov_hyperplane(&[family.clone()]).unwrap();
        let coloring = Coloring { colors: vec![0, 0] };
        let general = affine_k_transversal(
            &family,
            1,
            1,
            &coloring,
            &TransversalOptions::default(),
        )
        .unwrap();
        assert_eq!(sol.certificate.hyperplanes, general.certificate.hyperplanes);
    }
}
