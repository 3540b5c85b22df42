//! Radon pairs: exact convex-hull intersection tests, minimal pair search,
//! complete enumeration, and the constrained k-tuple search.
//!
//! A minimal Radon pair is supported on a circuit of the affine matroid of
//! the configuration: a minimally dependent subset carries a unique affine
//! dependence (up to scale) with full support, and its sign split is the
//! pair. Enumeration therefore scans subsets for circuits instead of testing
//! every disjoint pair of subsets with an LP; the brute-force LP scan remains
//! the independent test oracle.

use crate::gale::PointConfig;
use crate::kneser::SetFamily;
use crate::linalg::{self, Matrix, Vector};
use crate::lp::{lp_feasible, LpOutcome, LpProblem};
use crate::par;
use crate::rat::Rat;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Enumeration refuses configurations with more points than this. Large
/// instances fail loudly instead of silently approximating.
pub const MAX_ENUM_GROUND: usize = 18;

/// Two disjoint index sets with strictly positive convex coefficients
/// witnessing that the corresponding convex hulls intersect. Orientation is
/// canonical: the smallest index of the support lies on the plus side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "wire::RadonPairWire", into = "wire::RadonPairWire")]
pub struct RadonPair {
    plus: Vec<usize>,
    minus: Vec<usize>,
    lambda_plus: Vec<Rat>,
    lambda_minus: Vec<Rat>,
}

impl RadonPair {
    /// Structural validation: disjoint nonempty supports, strictly positive
    /// coefficients, each side summing to one. Sides are sorted and the
    /// canonical orientation is applied. Exactness of the common point is a
    /// property of a configuration and is checked by [`RadonPair::verify`].
    pub fn new(
        plus: Vec<usize>,
        lambda_plus: Vec<Rat>,
        minus: Vec<usize>,
        lambda_minus: Vec<Rat>,
    ) -> Result<Self> {
        if plus.is_empty() || minus.is_empty() {
            return Err(Error::InvalidCertificate("empty Radon pair side".into()));
        }
        if plus.len() != lambda_plus.len() || minus.len() != lambda_minus.len() {
            return Err(Error::InvalidCertificate(
                "coefficient count does not match support".into(),
            ));
        }
        let sort_side = |idx: Vec<usize>, lam: Vec<Rat>| {
            let mut paired: Vec<(usize, Rat)> = idx.into_iter().zip(lam).collect();
            paired.sort_by_key(|(i, _)| *i);
            paired.into_iter().unzip::<_, _, Vec<_>, Vec<_>>()
        };
        let (plus, lambda_plus) = sort_side(plus, lambda_plus);
        let (minus, lambda_minus) = sort_side(minus, lambda_minus);
        if plus.windows(2).any(|w| w[0] == w[1]) || minus.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCertificate("repeated index in a side".into()));
        }
        if plus.iter().any(|i| minus.binary_search(i).is_ok()) {
            return Err(Error::InvalidCertificate("sides are not disjoint".into()));
        }
        for lam in [&lambda_plus, &lambda_minus] {
            if lam.iter().any(|l| !l.is_positive()) {
                return Err(Error::InvalidCertificate(
                    "coefficients must be strictly positive".into(),
                ));
            }
            if lam.iter().sum::<Rat>() != Rat::one() {
                return Err(Error::InvalidCertificate(
                    "coefficients on a side must sum to one".into(),
                ));
            }
        }
        let mut pair = RadonPair {
            plus,
            minus,
            lambda_plus,
            lambda_minus,
        };
        if pair.minus[0] < pair.plus[0] {
            std::mem::swap(&mut pair.plus, &mut pair.minus);
            std::mem::swap(&mut pair.lambda_plus, &mut pair.lambda_minus);
        }
        Ok(pair)
    }

    pub fn plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn minus(&self) -> &[usize] {
        &self.minus
    }

    pub fn lambda_plus(&self) -> &[Rat] {
        &self.lambda_plus
    }

    pub fn lambda_minus(&self) -> &[Rat] {
        &self.lambda_minus
    }

    pub fn support_size(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    pub fn same_supports(&self, other: &RadonPair) -> bool {
        self.plus == other.plus && self.minus == other.minus
    }

    /// `t_j`: the coefficient signed by side, zero off the support.
    pub fn signed_coefficients(&self, n: usize) -> Vector {
        let mut t = vec![Rat::zero(); n];
        for (i, l) in self.plus.iter().zip(&self.lambda_plus) {
            t[*i] = l.clone();
        }
        for (i, l) in self.minus.iter().zip(&self.lambda_minus) {
            t[*i] = -l;
        }
        t
    }

    pub fn common_point(&self, cfg: &PointConfig) -> Vector {
        let mut p = vec![Rat::zero(); cfg.dim()];
        for (i, l) in self.plus.iter().zip(&self.lambda_plus) {
            for (acc, x) in p.iter_mut().zip(cfg.point(*i)) {
                *acc += l * x;
            }
        }
        p
    }

    /// Exact re-verification against the owning configuration.
    pub fn verify(&self, cfg: &PointConfig) -> Result<()> {
        let n = cfg.len();
        if let Some(&i) = self.plus.iter().chain(&self.minus).find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut diff = self.common_point(cfg);
        for (i, l) in self.minus.iter().zip(&self.lambda_minus) {
            for (acc, x) in diff.iter_mut().zip(cfg.point(*i)) {
                *acc -= l * x;
            }
        }
        if !linalg::is_zero_vec(&diff) {
            return Err(Error::InvalidCertificate(
                "sides do not combine to a common point".into(),
            ));
        }
        Ok(())
    }

    fn order_key(&self) -> (&[usize], &[usize]) {
        (&self.plus, &self.minus)
    }
}

impl PartialOrd for RadonPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadonPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

mod wire {
    //! JSON form with 1-based indices matching the ground set `[n]`.
    use super::RadonPair;
    use crate::rat::Rat;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    #[serde(rename_all = "camelCase")]
    pub struct RadonPairWire {
        pub plus: Vec<usize>,
        pub minus: Vec<usize>,
        pub lambda_plus: Vec<Rat>,
        pub lambda_minus: Vec<Rat>,
    }

    impl From<RadonPair> for RadonPairWire {
        fn from(p: RadonPair) -> Self {
            RadonPairWire {
                plus: p.plus.iter().map(|i| i + 1).collect(),
                minus: p.minus.iter().map(|i| i + 1).collect(),
                lambda_plus: p.lambda_plus,
                lambda_minus: p.lambda_minus,
            }
        }
    }

    impl TryFrom<RadonPairWire> for RadonPair {
        type Error = crate::Error;

        fn try_from(w: RadonPairWire) -> Result<Self, Self::Error> {
            let shift = |v: Vec<usize>| -> Result<Vec<usize>, crate::Error> {
                v.into_iter()
                    .map(|i| {
                        i.checked_sub(1).ok_or_else(|| {
                            crate::Error::InvalidInput("indices are 1-based".into())
                        })
                    })
                    .collect()
            };
            RadonPair::new(shift(w.plus)?, w.lambda_plus, shift(w.minus)?, w.lambda_minus)
        }
    }
}

/// An ordered list of minimal Radon pairs over one configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadonTuple {
    pub pairs: Vec<RadonPair>,
}

/// Exact witness of intersecting convex hulls.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HullWitness {
    pub point: Vector,
    pub coeffs_a: Vec<Rat>,
    pub coeffs_b: Vec<Rat>,
}

/// LP feasibility of a common convex combination over the two index sets.
/// Returns the common point with both coefficient vectors, or `None` when
/// the hulls are disjoint. The index sets need not be disjoint.
pub fn hulls_intersect(
    cfg: &PointConfig,
    a: &[usize],
    b: &[usize],
) -> Result<Option<HullWitness>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidInput("index sets must be nonempty".into()));
    }
    let n = cfg.len();
    if let Some(&i) = a.iter().chain(b).find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let vars = a.len() + b.len();
    let mut p = LpProblem::new(vars);
    for d in 0..cfg.dim() {
        let mut row = Vec::with_capacity(vars);
        for &i in a {
            row.push(cfg.point(i)[d].clone());
        }
        for &j in b {
            row.push(-&cfg.point(j)[d]);
        }
        p.add_eq(row, Rat::zero())?;
    }
    let mut sum_a = vec![Rat::zero(); vars];
    sum_a[..a.len()].fill(Rat::one());
    p.add_eq(sum_a, Rat::one())?;
    let mut sum_b = vec![Rat::zero(); vars];
    sum_b[a.len()..].fill(Rat::one());
    p.add_eq(sum_b, Rat::one())?;
    p.set_all_nonneg();
    match lp_feasible(&p)? {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Feasible(w) => {
            let coeffs_a = w[..a.len()].to_vec();
            let coeffs_b = w[a.len()..].to_vec();
            let mut point = vec![Rat::zero(); cfg.dim()];
            for (&i, l) in a.iter().zip(&coeffs_a) {
                for (acc, x) in point.iter_mut().zip(cfg.point(i)) {
                    *acc += l * x;
                }
            }
            Ok(Some(HullWitness {
                point,
                coeffs_a,
                coeffs_b,
            }))
        }
    }
}

/// Builds a minimal Radon pair from the first canonical affine dependence:
/// split the dependence by sign, normalize each side to sum one, then
/// minimalize. Errors with a hypothesis violation when no dependence exists
/// (`n <= d+1`).
pub fn find_minimal_radon_pair(cfg: &PointConfig) -> Result<RadonPair> {
    if !cfg.affinely_spans() {
        return Err(Error::SpanDeficient);
    }
    let basis = cfg.lifted_matrix().nullspace();
    let Some(dep) = basis.first() else {
        return Err(Error::HypothesisViolation(
            "no affine dependence exists (n <= d+1)".into(),
        ));
    };
    let pair = pair_from_dependence(dep)?;
    minimalize(cfg, &pair)
}

/// Sign-splits an affine dependence (entries summing to zero) into a
/// structurally valid pair.
fn pair_from_dependence(dep: &[Rat]) -> Result<RadonPair> {
    let plus: Vec<usize> = (0..dep.len()).filter(|&j| dep[j].is_positive()).collect();
    let minus: Vec<usize> = (0..dep.len()).filter(|&j| dep[j].is_negative()).collect();
    let pos_total: Rat = plus.iter().map(|&j| &dep[j]).sum();
    let lambda_plus: Vec<Rat> = plus.iter().map(|&j| &dep[j] / &pos_total).collect();
    let lambda_minus: Vec<Rat> = minus.iter().map(|&j| -&dep[j] / &pos_total).collect();
    RadonPair::new(plus, lambda_plus, minus, lambda_minus)
}

/// Shrinks a valid pair until dropping any single index from either side
/// makes the hulls disjoint. Removal order: ascending index, alternating
/// sides starting with the plus side, re-verifying by LP after each removal.
pub fn minimalize(cfg: &PointConfig, pair: &RadonPair) -> Result<RadonPair> {
    pair.verify(cfg)?;
    let mut plus = pair.plus().to_vec();
    let mut minus = pair.minus().to_vec();
    loop {
        let mut removed = false;
        for side in 0..2 {
            let (own, other): (&mut Vec<usize>, &Vec<usize>) = if side == 0 {
                (&mut plus, &minus)
            } else {
                (&mut minus, &plus)
            };
            if own.len() <= 1 {
                continue;
            }
            for pos in 0..own.len() {
                let mut trial = own.clone();
                trial.remove(pos);
                if hulls_intersect(cfg, &trial, other)?.is_some() {
                    own.remove(pos);
                    removed = true;
                    break;
                }
            }
        }
        if !removed {
            break;
        }
    }
    let witness = hulls_intersect(cfg, &plus, &minus)?
        .ok_or_else(|| Error::Internal("minimalized sides lost their intersection".into()))?;
    if witness
        .coeffs_a
        .iter()
        .chain(&witness.coeffs_b)
        .any(|l| !l.is_positive())
    {
        return Err(Error::Internal(
            "witness of a minimal pair has a zero coefficient".into(),
        ));
    }
    let out = RadonPair::new(plus, witness.coeffs_a, minus, witness.coeffs_b)?;
    out.verify(cfg)?;
    Ok(out)
}

/// All minimal Radon pairs with support size at most `max_support`,
/// deduplicated up to the side swap and ordered lexicographically by
/// (plus, minus).
///
/// A subset supports a minimal pair iff the affine dependences it carries
/// form a one-dimensional space whose generator has full support, so the scan
/// tests each subset against the dependence space of the whole configuration.
pub fn enumerate_minimal_radon_pairs(
    cfg: &PointConfig,
    max_support: usize,
) -> Result<Vec<RadonPair>> {
    let n = cfg.len();
    if n > MAX_ENUM_GROUND {
        return Err(Error::GuardExceeded(format!(
            "enumeration is limited to {MAX_ENUM_GROUND} points, got {n}"
        )));
    }
    let dep_basis = cfg.lifted_matrix().nullspace();
    let e = dep_basis.len();
    if e == 0 {
        return Ok(Vec::new());
    }
    // D: e x n, rows spanning the affine-dependence space. Row-wise
    // integerization preserves the row space and feeds the i128 rank filter.
    let d_mat = Matrix::from_rows(dep_basis)?;
    let int_rows: Option<Vec<Vec<i128>>> = integerize_rows(&d_mat);
    let lifted_rank = n - e;
    let cap = max_support.min(lifted_rank + 1).min(n);

    let mut pairs: Vec<RadonPair> = Vec::new();
    for size in 2..=cap {
        let subsets = combinations(n, size);
        let found = par::filter_map_collect(&subsets, |subset| {
            circuit_pair(&d_mat, int_rows.as_deref(), e, subset, n)
        });
        pairs.extend(found);
    }
    pairs.sort();
    Ok(pairs)
}

/// Tests one subset: it supports a minimal pair iff the dependence space
/// restricted to it is one-dimensional with a full-support generator.
fn circuit_pair(
    d_mat: &Matrix,
    int_rows: Option<&[Vec<i128>]>,
    e: usize,
    subset: &[usize],
    n: usize,
) -> Option<RadonPair> {
    let complement: Vec<usize> = {
        let mut inside = vec![false; n];
        for &i in subset {
            inside[i] = true;
        }
        (0..n).filter(|&i| !inside[i]).collect()
    };
    // dim { w in dependence space : supp(w) subset } = e - rank(D columns
    // outside the subset); full column rank means no dependence fits.
    if let Some(rows) = int_rows {
        let sub: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| complement.iter().map(|&c| r[c]).collect())
            .collect();
        if linalg::integer_rank(&sub) == e {
            return None;
        }
    }
    let system = if complement.is_empty() {
        Matrix::zeros(0, e)
    } else {
        let outside_cols: Vec<Vec<Rat>> = complement
            .iter()
            .map(|&c| (0..e).map(|r| d_mat.at(r, c).clone()).collect())
            .collect();
        Matrix::from_rows(outside_cols).ok()?
    };
    let coeff_basis = system.nullspace();
    if coeff_basis.len() != 1 {
        return None;
    }
    let beta = &coeff_basis[0];
    let mut dep = vec![Rat::zero(); n];
    for &j in subset {
        dep[j] = (0..e).map(|r| d_mat.at(r, j) * &beta[r]).sum();
    }
    if subset.iter().any(|&j| dep[j].is_zero()) {
        return None;
    }
    pair_from_dependence(&dep).ok()
}

fn integerize_rows(m: &Matrix) -> Option<Vec<Vec<i128>>> {
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut lcm = BigInt::one();
        for v in m.row(r) {
            lcm = lcm.lcm(v.denom());
        }
        let mut row = Vec::with_capacity(m.cols());
        for v in m.row(r) {
            let scaled: BigInt = v.numer() * (&lcm / v.denom());
            row.push(scaled.to_i128()?);
        }
        out.push(row);
    }
    Some(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance to the next combination in lexicographic order
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// Searches for `k` minimal Radon pairs such that none of the `2^k`
/// side-intersections contains a member of the family. The scan runs in
/// lexicographic order over non-decreasing k-tuples of the enumerated pair
/// list and returns the first hit; callers are responsible for the coloring
/// hypothesis under which a hit is guaranteed, and exhaustion is surfaced as
/// a flagged anomaly rather than swallowed.
pub fn find_constrained_radon_tuple(
    cfg: &PointConfig,
    family: &SetFamily,
    k: usize,
) -> Result<RadonTuple> {
    find_constrained_radon_tuple_capped(cfg, family, k, usize::MAX)
}

/// As [`find_constrained_radon_tuple`] with an explicit cap on pair support
/// size. The default cap (`usize::MAX`, clamped to `d+2`) keeps the scan
/// complete; smaller caps trade completeness for speed.
pub fn find_constrained_radon_tuple_capped(
    cfg: &PointConfig,
    family: &SetFamily,
    k: usize,
    max_support: usize,
) -> Result<RadonTuple> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if family.ground_size() != cfg.len() {
        return Err(Error::DimensionMismatch(format!(
            "family ground set has {} elements, configuration has {}",
            family.ground_size(),
            cfg.len()
        )));
    }
    if !cfg.affinely_spans() {
        return Err(Error::SpanDeficient);
    }
    let pairs = enumerate_minimal_radon_pairs(cfg, max_support)?;
    if pairs.is_empty() {
        return Err(Error::Exhausted(
            "configuration admits no minimal Radon pairs".into(),
        ));
    }
    // Containment of a member is equivalent to containment of a minimal
    // member, so the antichain suffices for the exact check.
    let member_masks = family.minimal_member_masks();
    let side_masks: Vec<(u64, u64)> = pairs
        .iter()
        .map(|p| (mask_of(p.plus()), mask_of(p.minus())))
        .collect();
    let scan = TupleScan {
        side_masks: &side_masks,
        member_masks: &member_masks,
        k,
    };
    let hit = par::find_map_first(pairs.len(), |first| scan.from_branch(first));
    let tuple_indices = match hit {
        Some(t) => t,
        None => {
            return Err(Error::Exhausted(format!(
                "no admissible {k}-tuple among {} minimal pairs",
                pairs.len()
            )))
        }
    };
    let chosen: Vec<RadonPair> = tuple_indices.iter().map(|&i| pairs[i].clone()).collect();
    for p in &chosen {
        p.verify(cfg)?;
    }
    Ok(RadonTuple { pairs: chosen })
}

fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// Depth-first scan over non-decreasing index tuples in lexicographic order.
/// Refining a tuple only shrinks its side intersections, so a prefix whose
/// intersections already avoid every member completes with repeats of its
/// last index — the lexicographically least valid extension — and the first
/// hit of the whole scan is the lexicographically least valid tuple.
struct TupleScan<'a> {
    side_masks: &'a [(u64, u64)],
    member_masks: &'a [u64],
    k: usize,
}

impl TupleScan<'_> {
    fn clean(&self, intersections: &[u64]) -> bool {
        !self
            .member_masks
            .iter()
            .any(|&m| intersections.iter().any(|&i| m & i == m))
    }

    fn from_branch(&self, first: usize) -> Option<Vec<usize>> {
        let (p, m) = self.side_masks[first];
        self.descend(vec![first], vec![p, m])
    }

    fn descend(&self, prefix: Vec<usize>, intersections: Vec<u64>) -> Option<Vec<usize>> {
        if self.clean(&intersections) {
            let last = *prefix.last().expect("nonempty prefix");
            let mut full = prefix;
            full.resize(self.k, last);
            return Some(full);
        }
        if prefix.len() == self.k {
            return None;
        }
        let start = *prefix.last().expect("nonempty prefix");
        for next in start..self.side_masks.len() {
            let (p, m) = self.side_masks[next];
            let mut refined = Vec::with_capacity(intersections.len() * 2);
            for &i in &intersections {
                refined.push(i & p);
                refined.push(i & m);
            }
            let mut extended = prefix.clone();
            extended.push(next);
            if let Some(t) = self.descend(extended, refined) {
                return Some(t);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg_1d(xs: &[i64]) -> PointConfig {
        PointConfig::new(1, xs.iter().map(|&x| vec![Rat::int(x)]).collect()).unwrap()
    }

    fn unit_square() -> PointConfig {
        PointConfig::from_int_points(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    #[test]
    fn hulls_intersect_diagonals() {
        let sq = unit_square();
        let w = hulls_intersect(&sq, &[0, 2], &[1, 3]).unwrap().unwrap();
        assert_eq!(w.point, vec![Rat::frac(1, 2), Rat::frac(1, 2)]);
    }

    #[test]
    fn hulls_disjoint_singletons() {
        let sq = unit_square();
        assert!(hulls_intersect(&sq, &[0], &[1]).unwrap().is_none());
        // identity case: same singleton on both sides returns the point
        let w = hulls_intersect(&sq, &[2], &[2]).unwrap().unwrap();
        assert_eq!(w.point, vec![Rat::int(1), Rat::int(1)]);
    }

    #[test]
    fn minimal_pair_on_collinear_points() {
        let pair = find_minimal_radon_pair(&cfg_1d(&[0, 1, 2])).unwrap();
        assert_eq!(pair.plus(), &[0, 2]);
        assert_eq!(pair.minus(), &[1]);
        assert_eq!(pair.lambda_plus(), &[Rat::frac(1, 2), Rat::frac(1, 2)]);
        assert_eq!(pair.lambda_minus(), &[Rat::one()]);
    }

    #[test]
    fn minimal_pair_on_unit_square_is_the_diagonal_split() {
        let pair = find_minimal_radon_pair(&unit_square()).unwrap();
        assert_eq!(pair.plus(), &[0, 2]);
        assert_eq!(pair.minus(), &[1, 3]);
    }

    #[test]
    fn repeated_point_gives_singleton_pair() {
        let cfg = cfg_1d(&[5, 5, 9]);
        let pair = find_minimal_radon_pair(&cfg).unwrap();
        assert_eq!(pair.support_size(), 2);
        assert_eq!(pair.plus(), &[0]);
        assert_eq!(pair.minus(), &[1]);
    }

    #[test]
    fn simplex_has_no_dependence() {
        let simplex = PointConfig::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            find_minimal_radon_pair(&simplex),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn minimalize_removes_redundant_index() {
        // ({1,3},{2}) plus a redundant 4th collinear point on the plus side
        let cfg = cfg_1d(&[0, 1, 2, 3]);
        let loose = RadonPair::new(
            vec![0, 2, 3],
            vec![Rat::frac(5, 9), Rat::frac(1, 3), Rat::frac(1, 9)],
            vec![1],
            vec![Rat::one()],
        )
        .unwrap();
        loose.verify(&cfg).unwrap();
        let min = minimalize(&cfg, &loose).unwrap();
        assert_eq!(min.support_size(), 3);
        assert_eq!(min.minus(), &[1]);
    }

    #[test]
    fn minimalize_fixes_minimal_pairs() {
        let cfg = cfg_1d(&[0, 1, 2]);
        let pair = find_minimal_radon_pair(&cfg).unwrap();
        let again = minimalize(&cfg, &pair).unwrap();
        assert_eq!(pair, again);
    }

    #[test]
    fn enumerate_collinear_triple() {
        let pairs = enumerate_minimal_radon_pairs(&cfg_1d(&[0, 1, 2]), 3).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].plus(), &[0, 2]);
        assert_eq!(pairs[0].minus(), &[1]);
    }

    #[test]
    fn enumerate_simplex_is_empty() {
        let simplex = PointConfig::from_int_points(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert!(enumerate_minimal_radon_pairs(&simplex, 4).unwrap().is_empty());
    }

    #[test]
    fn enumerate_unit_square() {
        let pairs = enumerate_minimal_radon_pairs(&unit_square(), 4).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].plus(), &[0, 2]);
        assert_eq!(pairs[0].minus(), &[1, 3]);
    }

    #[test]
    fn guard_fails_loudly() {
        let big = PointConfig::new(
            1,
            (0..19).map(|i| vec![Rat::int(i)]).collect(),
        )
        .unwrap();
        assert!(matches!(
            enumerate_minimal_radon_pairs(&big, 4),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn serde_is_one_based() {
        let pair = RadonPair::new(
            vec![0, 2],
            vec![Rat::frac(1, 2), Rat::frac(1, 2)],
            vec![1],
            vec![Rat::one()],
        )
        .unwrap();
        let json = serde_json::to_string(&pair).unwrap();
        assert_eq!(
            json,
            r#"{"plus":[1,3],"minus":[2],"lambdaPlus":["1/2","1/2"],"lambdaMinus":["1"]}"#
        );
        let back: RadonPair = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pair);
    }
}
