//! The Gale transform, its inverse, centering/lifting of point sets, and both
//! directions of the correspondence between minimal Radon pairs of a primal
//! configuration and strict separations of its Gale dual by linear
//! hyperplanes.
//!
//! The transform is made deterministic by always taking the canonical RREF
//! nullspace basis of the lifted point matrix; the inverse completes the dual
//! rows to a basis with standard basis vectors in ascending index order.

use crate::linalg::{self, Matrix, Vector};
use crate::radon::RadonPair;
use crate::rat::Rat;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// An ordered sequence of `n` rational points in `R^d` (primal or dual).
/// Synthetic indices mark points appended by [`center_and_lift`]; set
/// families over a configuration never reference them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "wire::PointConfigWire", into = "wire::PointConfigWire")]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vector>,
    synthetic: BTreeSet<usize>,
    affinely_spanning: bool,
}

mod wire {
    //! JSON form `{"d":, "points": [["p/q",…],…], "synthetic": [1-based]}`.
    use super::PointConfig;
    use crate::linalg::Vector;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    pub struct PointConfigWire {
        pub d: usize,
        pub points: Vec<Vector>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        pub synthetic: Vec<usize>,
    }

    impl From<PointConfig> for PointConfigWire {
        fn from(c: PointConfig) -> Self {
            PointConfigWire {
                d: c.dim,
                points: c.points,
                synthetic: c.synthetic.iter().map(|i| i + 1).collect(),
            }
        }
    }

    impl TryFrom<PointConfigWire> for PointConfig {
        type Error = crate::Error;

        fn try_from(w: PointConfigWire) -> Result<Self, Self::Error> {
            let synthetic = w
                .synthetic
                .into_iter()
                .map(|i| {
                    i.checked_sub(1)
                        .ok_or_else(|| crate::Error::InvalidInput("indices are 1-based".into()))
                })
                .collect::<Result<_, _>>()?;
            PointConfig::with_synthetic(w.d, w.points, synthetic)
        }
    }
}

impl PointConfig {
    pub fn new(dim: usize, points: Vec<Vector>) -> Result<Self> {
        Self::with_synthetic(dim, points, BTreeSet::new())
    }

    pub fn with_synthetic(
        dim: usize,
        points: Vec<Vector>,
        synthetic: BTreeSet<usize>,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("configuration needs n >= 1 points".into()));
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "every point must have dimension {dim}"
            )));
        }
        if let Some(&i) = synthetic.iter().find(|&&i| i >= points.len()) {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: points.len(),
            });
        }
        let affinely_spanning = lifted_matrix_of(dim, &points).rank() == dim + 1;
        Ok(PointConfig {
            dim,
            points,
            synthetic,
            affinely_spanning,
        })
    }

    pub fn from_int_points(dim: usize, pts: &[&[i64]]) -> Result<Self> {
        Self::new(
            dim,
            pts.iter()
                .map(|p| p.iter().map(|&x| Rat::int(x)).collect())
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &Vector {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn synthetic(&self) -> &BTreeSet<usize> {
        &self.synthetic
    }

    /// Checked at construction, never assumed.
    pub fn affinely_spans(&self) -> bool {
        self.affinely_spanning
    }

    /// The points as columns of a `d x n` matrix.
    pub fn point_matrix(&self) -> Matrix {
        Matrix::from_cols(self.points.clone()).expect("uniform dimensions")
    }

    /// The `(d+1) x n` matrix whose column `j` is the point `j` with a 1
    /// appended.
    pub fn lifted_matrix(&self) -> Matrix {
        lifted_matrix_of(self.dim, &self.points)
    }

    pub fn sum(&self) -> Vector {
        let mut s = vec![Rat::zero(); self.dim];
        for p in &self.points {
            for (acc, x) in s.iter_mut().zip(p) {
                *acc += x;
            }
        }
        s
    }

    /// True when the points linearly span `R^d`.
    pub fn linearly_spans(&self) -> bool {
        self.point_matrix().rank() == self.dim
    }
}

fn lifted_matrix_of(_dim: usize, points: &[Vector]) -> Matrix {
    let cols: Vec<Vector> = points
        .iter()
        .map(|p| {
            let mut c = p.clone();
            c.push(Rat::one());
            c
        })
        .collect();
    Matrix::from_cols(cols).expect("uniform dimensions")
}

/// A linear hyperplane through the origin, stored as a canonical normal:
/// cleared denominators, content 1, first nonzero entry positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearHyperplane {
    normal: Vector,
}

impl LinearHyperplane {
    pub fn new(direction: &[Rat]) -> Result<Self> {
        let normal = linalg::canonical_integer_direction(direction)
            .ok_or_else(|| Error::InvalidInput("hyperplane normal must be nonzero".into()))?;
        Ok(LinearHyperplane { normal })
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, p: &[Rat]) -> Rat {
        linalg::dot(&self.normal, p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "0")]
    Zero,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        match r.signum() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

/// Per-index position of each dual point relative to a linear hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignPattern(pub Vec<Sign>);

impl SignPattern {
    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|s| **s == Sign::Zero).count()
    }

    pub fn is_zero_free(&self) -> bool {
        self.zero_count() == 0
    }

    pub fn flipped(&self) -> SignPattern {
        SignPattern(self.0.iter().map(|s| s.flipped()).collect())
    }

    /// Equality up to a global sign flip.
    pub fn matches_up_to_flip(&self, other: &SignPattern) -> bool {
        self == other || *self == other.flipped()
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Plus => "+",
                Sign::Minus => "-",
                Sign::Zero => "0",
            })?;
        }
        Ok(())
    }
}

/// The Gale transform: `n` points in `R^{n-d-1}` read off the columns of the
/// matrix whose rows are the canonical nullspace basis of the lifted primal
/// matrix. The output linearly spans its space and sums to the zero vector.
pub fn gale_transform(primal: &PointConfig) -> Result<PointConfig> {
    if !primal.affinely_spans() {
        return Err(Error::SpanDeficient);
    }
    let n = primal.len();
    let e = n - primal.dim() - 1;
    let basis = primal.lifted_matrix().nullspace();
    debug_assert_eq!(basis.len(), e);
    let dual_points: Vec<Vector> = (0..n)
        .map(|j| basis.iter().map(|v| v[j].clone()).collect())
        .collect();
    PointConfig::new(e, dual_points)
}

/// Inverts the Gale transform: given `n` points in `R^e` that linearly span
/// and sum to zero, produces `n` points in `R^{n-e-1}` whose Gale transform
/// has the same row space as the input.
///
/// Construction: complete the dual rows to a basis of `R^n` by appending
/// standard basis vectors in ascending index order while independent, invert,
/// and read the primal coordinates from the trailing inverse columns, rebased
/// so the lift row is all ones.
pub fn inverse_gale(dual: &PointConfig) -> Result<PointConfig> {
    let n = dual.len();
    let e = dual.dim();
    if !dual.linearly_spans() {
        return Err(Error::InvalidInput(
            "dual points must linearly span their space".into(),
        ));
    }
    if !linalg::is_zero_vec(&dual.sum()) {
        return Err(Error::InvalidInput("dual points must sum to zero".into()));
    }
    if e + 1 > n {
        return Err(Error::InvalidInput(
            "a zero-sum spanning configuration needs n >= e + 1 points".into(),
        ));
    }
    let d = n - e - 1;
    let dual_rows = dual.point_matrix().row_vectors();

    // Complete to a basis of R^n with standard vectors, ascending.
    let mut rows = dual_rows;
    let mut rank = e;
    for i in 0..n {
        if rows.len() == n {
            break;
        }
        let mut candidate = vec![Rat::zero(); n];
        candidate[i] = Rat::one();
        let mut trial = rows.clone();
        trial.push(candidate.clone());
        let r = Matrix::from_rows(trial)?.rank();
        if r > rank {
            rows.push(candidate);
            rank = r;
        }
    }
    debug_assert_eq!(rows.len(), n);
    let completion = Matrix::from_rows(rows)?;
    let inv = completion
        .inverse()
        .ok_or_else(|| Error::Internal("basis completion not invertible".into()))?;

    // Trailing inverse columns span the orthogonal complement of the dual
    // row space; the all-ones vector lies in it because the duals sum to 0.
    let complement: Vec<Vector> = (e..n).map(|c| inv.col(c)).collect();
    let ones = vec![Rat::one(); n];
    let mut chosen: Vec<Vector> = vec![ones.clone()];
    for cand in &complement {
        if chosen.len() == d + 1 {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(cand.clone());
        if Matrix::from_rows(trial.clone())?.rank() == trial.len() {
            chosen = trial;
        }
    }
    if chosen.len() != d + 1 {
        return Err(Error::Internal(
            "could not rebase the complement onto the lift row".into(),
        ));
    }
    let primal_points: Vec<Vector> = (0..n)
        .map(|j| (1..=d).map(|r| chosen[r][j].clone()).collect())
        .collect();
    let primal = PointConfig::new(d, primal_points)?;
    debug_assert!(primal.affinely_spans());
    Ok(primal)
}

/// Result of [`center_and_lift`]. When the input already linearly spans and
/// sums to zero the lift is skipped, the input is returned unchanged, and the
/// no-op is recorded via `degenerate`.
#[derive(Debug, Clone)]
pub struct CenteredLift {
    pub config: PointConfig,
    /// Index of the appended closing point `-sum`, if one was appended.
    pub closing: Option<usize>,
    pub degenerate: bool,
}

/// Embeds each point at height one, pads with synthetic points until the
/// result linearly spans, and closes with `-sum` so the output sums to zero.
/// Synthetic padding points are perturbed standard directions at height one
/// scaled by `1/2^i`, recorded so callers exclude them from set families.
pub fn center_and_lift(input: &PointConfig) -> CenteredLift {
    if input.linearly_spans() && linalg::is_zero_vec(&input.sum()) {
        return CenteredLift {
            config: input.clone(),
            closing: None,
            degenerate: true,
        };
    }
    let d = input.dim();
    let mut points: Vec<Vector> = input
        .points()
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(Rat::one());
            q
        })
        .collect();
    let mut synthetic = BTreeSet::new();

    let rank_of = |pts: &[Vector]| {
        Matrix::from_cols(pts.to_vec())
            .expect("uniform dimensions")
            .rank()
    };
    let mut rank = rank_of(&points);
    let mut attempt = 0usize;
    while rank < d + 1 {
        let dir = attempt % d;
        let scale = Rat::frac(1, 1 << (attempt / d + 1));
        attempt += 1;
        let mut cand = vec![Rat::zero(); d + 1];
        cand[dir] = scale;
        cand[d] = Rat::one();
        if points.contains(&cand) {
            continue;
        }
        let mut trial = points.clone();
        trial.push(cand.clone());
        let r = rank_of(&trial);
        if r > rank {
            synthetic.insert(points.len());
            points.push(cand);
            rank = r;
        }
    }

    let mut closing = vec![Rat::zero(); d + 1];
    for p in &points {
        for (acc, x) in closing.iter_mut().zip(p) {
            *acc -= x;
        }
    }
    let closing_index = points.len();
    synthetic.insert(closing_index);
    points.push(closing);

    let config = PointConfig::with_synthetic(d + 1, points, synthetic)
        .expect("lifted configuration is well-formed");
    debug_assert!(config.linearly_spans());
    debug_assert!(linalg::is_zero_vec(&config.sum()));
    CenteredLift {
        config,
        closing: Some(closing_index),
        degenerate: false,
    }
}

/// Checks that `dual` can serve as a Gale dual for `primal`: same length,
/// complementary dimension, dual rows spanning the nullspace of the lifted
/// primal matrix. Row-space equality (rather than exact equality with the
/// canonical transform) is accepted so that externally constructed zero-sum
/// configurations can be dualized in place.
fn check_duality(primal: &PointConfig, dual: &PointConfig) -> Result<()> {
    let n = primal.len();
    if dual.len() != n {
        return Err(Error::GaleMismatch("point counts differ".into()));
    }
    if !primal.affinely_spans() {
        return Err(Error::SpanDeficient);
    }
    if n < primal.dim() + 1 || dual.dim() != n - primal.dim() - 1 {
        return Err(Error::GaleMismatch(format!(
            "dual dimension {} does not complement primal dimension {}",
            dual.dim(),
            primal.dim()
        )));
    }
    if !dual.linearly_spans() {
        return Err(Error::GaleMismatch(
            "dual points do not linearly span".into(),
        ));
    }
    let lifted = primal.lifted_matrix();
    for row in dual.point_matrix().row_vectors() {
        if !linalg::is_zero_vec(&lifted.mul_vec(&row)) {
            return Err(Error::GaleMismatch(
                "dual rows do not annihilate the lifted primal matrix".into(),
            ));
        }
    }
    Ok(())
}

/// Maps a minimal Radon pair of the primal configuration to the linear
/// hyperplane that strictly separates the corresponding dual points, with all
/// remaining dual points on the hyperplane.
///
/// The normal solves `D^T alpha = t` exactly, where `t` carries the pair's
/// convex coefficients signed by side. The returned [`SignPattern`] is
/// computed from the canonicalized normal, so it may be the global flip of
/// the pair's orientation.
pub fn hyperplane_from_radon(
    dual: &PointConfig,
    pair: &RadonPair,
    primal: &PointConfig,
) -> Result<(LinearHyperplane, SignPattern)> {
    pair.verify(primal)?;
    check_duality(primal, dual)?;
    let n = primal.len();
    let t = pair.signed_coefficients(n);
    let dual_cols = dual.point_matrix().transpose(); // n x e
    let alpha = dual_cols
        .solve(&t)
        .ok_or_else(|| Error::GaleMismatch("pair coefficients not in the dual row space".into()))?;
    let h = LinearHyperplane::new(&alpha)?;
    let pattern = SignPattern(dual.points().iter().map(|b| Sign::of(&h.eval(b))).collect());
    debug_assert_eq!(pattern.zero_count(), n - pair.support_size());
    Ok((h, pattern))
}

/// Maps a strictly separating linear hyperplane on the dual side back to a
/// minimal Radon pair of the primal: split indices by the sign of
/// `<b_j, alpha>`, normalize each side's coefficients to sum one, then shrink
/// to a minimal pair by greedy removal (ascending index, alternating sides
/// starting with the positive one, re-verified by LP after each removal).
pub fn radon_from_hyperplane(
    primal: &PointConfig,
    dual: &PointConfig,
    h: &LinearHyperplane,
) -> Result<RadonPair> {
    check_duality(primal, dual)?;
    if h.dim() != dual.dim() {
        return Err(Error::DimensionMismatch(format!(
            "hyperplane lives in R^{}, dual in R^{}",
            h.dim(),
            dual.dim()
        )));
    }
    let t: Vec<Rat> = dual.points().iter().map(|b| h.eval(b)).collect();
    let plus: Vec<usize> = (0..t.len()).filter(|&j| t[j].is_positive()).collect();
    let minus: Vec<usize> = (0..t.len()).filter(|&j| t[j].is_negative()).collect();
    if plus.is_empty() || minus.is_empty() {
        return Err(Error::NotSeparating);
    }
    let pos_total: Rat = plus.iter().map(|&j| &t[j]).sum();
    let lambda_plus: Vec<Rat> = plus.iter().map(|&j| &t[j] / &pos_total).collect();
    let neg_total: Rat = minus.iter().map(|&j| &t[j]).sum();
    let lambda_minus: Vec<Rat> = minus.iter().map(|&j| -&t[j] / -&neg_total).collect();
    let pair = RadonPair::new(plus, lambda_plus, minus, lambda_minus)?;
    pair.verify(primal)?;
    crate::radon::minimalize(primal, &pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radon;

    fn cfg_1d(xs: &[i64]) -> PointConfig {
        PointConfig::new(1, xs.iter().map(|&x| vec![Rat::int(x)]).collect()).unwrap()
    }

    #[test]
    fn gale_of_three_collinear_points() {
        // nullspace of [[0,1,2],[1,1,1]] computed by hand
        let dual = gale_transform(&cfg_1d(&[0, 1, 2])).unwrap();
        assert_eq!(dual.dim(), 1);
        assert_eq!(
            dual.points(),
            &[vec![Rat::int(1)], vec![Rat::int(-2)], vec![Rat::int(1)]]
        );
    }

    #[test]
    fn gale_of_a_simplex_is_zero_dimensional() {
        let simplex = PointConfig::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let dual = gale_transform(&simplex).unwrap();
        assert_eq!(dual.dim(), 0);
        assert_eq!(dual.len(), 3);
    }

    #[test]
    fn gale_output_sums_to_zero_and_spans() {
        let cfg = PointConfig::from_int_points(
            2,
            &[&[0, 0], &[3, 1], &[1, 4], &[-2, 2], &[5, -1]],
        )
        .unwrap();
        let dual = gale_transform(&cfg).unwrap();
        assert!(linalg::is_zero_vec(&dual.sum()));
        assert_eq!(dual.point_matrix().rank(), cfg.len() - cfg.dim() - 1);
    }

    #[test]
    fn gale_rejects_degenerate_configs() {
        let flat = PointConfig::from_int_points(2, &[&[0, 0], &[1, 0], &[2, 0]]).unwrap();
        assert!(matches!(gale_transform(&flat), Err(Error::SpanDeficient)));
    }

    #[test]
    fn inverse_gale_round_trip() {
        let dual = cfg_1d(&[1, -2, 1]);
        let primal = inverse_gale(&dual).unwrap();
        assert_eq!(primal.dim(), 1);
        let re = gale_transform(&primal).unwrap();
        assert_eq!(
            re.point_matrix().row_space_canonical(),
            dual.point_matrix().row_space_canonical()
        );
    }

    #[test]
    fn inverse_gale_of_zero_dimensional_dual() {
        // n empty vectors: the primal is the standard simplex, units first
        let dual = PointConfig::new(0, vec![vec![], vec![], vec![]]).unwrap();
        let primal = inverse_gale(&dual).unwrap();
        assert_eq!(primal.dim(), 2);
        assert_eq!(
            primal.points(),
            &[
                vec![Rat::int(1), Rat::int(0)],
                vec![Rat::int(0), Rat::int(1)],
                vec![Rat::int(0), Rat::int(0)],
            ]
        );
    }

    #[test]
    fn inverse_gale_cross_configuration() {
        let dual = PointConfig::from_int_points(
            2,
            &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]],
        )
        .unwrap();
        let primal = inverse_gale(&dual).unwrap();
        assert_eq!(primal.dim(), 1);
        let re = gale_transform(&primal).unwrap();
        assert_eq!(
            re.point_matrix().row_space_canonical(),
            dual.point_matrix().row_space_canonical()
        );
    }

    #[test]
    fn inverse_gale_rejects_bad_input() {
        // does not sum to zero
        let bad = cfg_1d(&[1, 2]);
        assert!(inverse_gale(&bad).is_err());
    }

    #[test]
    fn center_and_lift_two_points() {
        let lifted = center_and_lift(&cfg_1d(&[0, 1]));
        assert!(!lifted.degenerate);
        assert_eq!(
            lifted.config.points(),
            &[
                vec![Rat::int(0), Rat::int(1)],
                vec![Rat::int(1), Rat::int(1)],
                vec![Rat::int(-1), Rat::int(-2)],
            ]
        );
        assert_eq!(lifted.closing, Some(2));
        assert!(lifted.config.synthetic().contains(&2));
        assert!(linalg::is_zero_vec(&lifted.config.sum()));
        assert!(lifted.config.linearly_spans());
    }

    #[test]
    fn center_and_lift_degenerate_noop() {
        // already linearly spanning with zero sum: returned unchanged
        let centered = cfg_1d(&[-1, 1]);
        let lifted = center_and_lift(&centered);
        assert!(lifted.degenerate);
        assert_eq!(lifted.closing, None);
        assert_eq!(lifted.config, centered);
    }

    #[test]
    fn center_and_lift_pads_a_single_point() {
        let single = PointConfig::from_int_points(2, &[&[0, 0]]).unwrap();
        let lifted = center_and_lift(&single);
        let cfg = &lifted.config;
        assert_eq!(cfg.dim(), 3);
        assert!(cfg.linearly_spans());
        assert!(linalg::is_zero_vec(&cfg.sum()));
        // two padding points plus the closing point are synthetic
        assert_eq!(cfg.synthetic().len(), 3);
        assert!(!cfg.synthetic().contains(&0));
    }

    #[test]
    fn pair_to_hyperplane_hand_example() {
        // t = (1/2, -1, 1/2) is 1/2 * (1, -2, 1)
        let primal = cfg_1d(&[0, 1, 2]);
        let dual = gale_transform(&primal).unwrap();
        let pair = RadonPair::new(
            vec![0, 2],
            vec![Rat::frac(1, 2), Rat::frac(1, 2)],
            vec![1],
            vec![Rat::one()],
        )
        .unwrap();
        let (h, pattern) = hyperplane_from_radon(&dual, &pair, &primal).unwrap();
        assert_eq!(h.normal(), &vec![Rat::int(1)]);
        assert_eq!(pattern.0, vec![Sign::Plus, Sign::Minus, Sign::Plus]);
    }

    #[test]
    fn hyperplane_to_pair_hand_example() {
        let primal = cfg_1d(&[0, 1, 2]);
        let dual = gale_transform(&primal).unwrap();
        let h = LinearHyperplane::new(&[Rat::int(1)]).unwrap();
        let pair = radon_from_hyperplane(&primal, &dual, &h).unwrap();
        assert_eq!(pair.plus(), &[0, 2]);
        assert_eq!(pair.minus(), &[1]);
        assert_eq!(pair.common_point(&primal), vec![Rat::int(1)]);
    }

    #[test]
    fn round_trip_preserves_supports() {
        let primal = PointConfig::from_int_points(
            2,
            &[&[0, 0], &[4, 0], &[0, 4], &[3, 3], &[1, 1]],
        )
        .unwrap();
        let dual = gale_transform(&primal).unwrap();
        let pair = radon::find_minimal_radon_pair(&primal).unwrap();
        let (h, pattern) = hyperplane_from_radon(&dual, &pair, &primal).unwrap();
        assert_eq!(
            pattern.zero_count(),
            primal.len() - pair.support_size()
        );
        let back = radon_from_hyperplane(&primal, &dual, &h).unwrap();
        assert_eq!(back.plus(), pair.plus());
        assert_eq!(back.minus(), pair.minus());
    }

    #[test]
    fn bad_pair_is_rejected() {
        let primal = cfg_1d(&[0, 1, 2]);
        let dual = gale_transform(&primal).unwrap();
        let bogus = RadonPair::new(
            vec![0],
            vec![Rat::one()],
            vec![1],
            vec![Rat::one()],
        )
        .unwrap();
        assert!(hyperplane_from_radon(&dual, &bogus, &primal).is_err());
    }
}
