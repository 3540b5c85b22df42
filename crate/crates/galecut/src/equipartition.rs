//! Equipartition checks and searches: exact orthant counting, simultaneous
//! bisection of point sets by one hyperplane, k-hyperplane equipartitions via
//! majority families and the transversal core, moment-curve instances, and
//! the bound table for the least dimension admitting an equipartition.

use crate::gale::PointConfig;
use crate::kneser::majority_family;
use crate::linalg::Vector;
use crate::rat::Rat;
use crate::transversal::{
    guarantee, hyperplane_transversal_core, AffineHyperplane, TransversalOptions,
};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// `m` finite rational point sets in `R^d`. Points are distinct within each
/// set; counts are per-set multiplicity-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "wire::MassInstanceWire", into = "wire::MassInstanceWire")]
pub struct MassInstance {
    dim: usize,
    sets: Vec<Vec<Vector>>,
}

impl MassInstance {
    pub fn new(dim: usize, sets: Vec<Vec<Vector>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidInput("at least one point set".into()));
        }
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidInput(format!("set {i} is empty")));
            }
            if set.iter().any(|p| p.len() != dim) {
                return Err(Error::DimensionMismatch(format!(
                    "set {i} has a point of the wrong dimension"
                )));
            }
            for a in 0..set.len() {
                for b in a + 1..set.len() {
                    if set[a] == set[b] {
                        return Err(Error::InvalidInput(format!(
                            "set {i} repeats a point"
                        )));
                    }
                }
            }
        }
        Ok(MassInstance { dim, sets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sets(&self) -> &[Vec<Vector>] {
        &self.sets
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }
}

mod wire {
    use super::MassInstance;
    use crate::linalg::Vector;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    pub struct MassInstanceWire {
        pub d: usize,
        pub sets: Vec<Vec<Vector>>,
    }

    impl From<MassInstance> for MassInstanceWire {
        fn from(m: MassInstance) -> Self {
            MassInstanceWire {
                d: m.dim,
                sets: m.sets,
            }
        }
    }

    impl TryFrom<MassInstanceWire> for MassInstance {
        type Error = crate::Error;

        fn try_from(w: MassInstanceWire) -> Result<Self, Self::Error> {
            MassInstance::new(w.d, w.sets)
        }
    }
}

/// Exact per-orthant counts. `counts[g][i]` is the number of points of set
/// `i` in the open orthant whose sign vector has bit `j` of `g` set for the
/// positive side of hyperplane `j`. Points on any hyperplane lie in no open
/// orthant and are uncounted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthantTable {
    pub k: usize,
    pub counts: Vec<Vec<usize>>,
}

impl OrthantTable {
    pub fn orthant_label(&self, g: usize) -> String {
        (0..self.k)
            .map(|j| if g & (1 << j) != 0 { '+' } else { '-' })
            .collect()
    }
}

/// Exact sign evaluation of every point against every hyperplane.
pub fn orthant_counts(inst: &MassInstance, hps: &[AffineHyperplane]) -> Result<OrthantTable> {
    if hps.is_empty() {
        return Err(Error::InvalidInput("at least one hyperplane".into()));
    }
    if hps.iter().any(|h| h.dim() != inst.dim()) {
        return Err(Error::DimensionMismatch(
            "hyperplanes and instance must share a dimension".into(),
        ));
    }
    let k = hps.len();
    let mut counts = vec![vec![0usize; inst.num_sets()]; 1 << k];
    for (i, set) in inst.sets().iter().enumerate() {
        'points: for p in set {
            let mut g = 0usize;
            for (j, h) in hps.iter().enumerate() {
                match h.eval(p).signum() {
                    0 => continue 'points,
                    1 => g |= 1 << j,
                    _ => {}
                }
            }
            counts[g][i] += 1;
        }
    }
    Ok(OrthantTable { k, counts })
}

/// `k` hyperplanes with the exact orthant table certifying that every open
/// orthant holds at most `|X_i| / 2^k` points of each set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EquipartitionCertificate {
    pub hyperplanes: Vec<AffineHyperplane>,
    pub table: OrthantTable,
    pub set_sizes: Vec<usize>,
}

impl EquipartitionCertificate {
    /// Recomputes the table by an independent sign pass and checks the bound
    /// `2^k * count <= |X_i|` exactly.
    pub fn verify(&self, inst: &MassInstance) -> Result<()> {
        if self.set_sizes != inst.set_sizes() {
            return Err(Error::InvalidCertificate("set sizes differ".into()));
        }
        let recount = orthant_counts(inst, &self.hyperplanes)?;
        if recount != self.table {
            return Err(Error::InvalidCertificate(
                "stored orthant table does not match a recount".into(),
            ));
        }
        let k = self.hyperplanes.len();
        for (g, row) in recount.counts.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                if (c as u128) << k > self.set_sizes[i] as u128 {
                    return Err(Error::InvalidCertificate(format!(
                        "orthant {} holds {c} points of set {i}, above {}/{}",
                        recount.orthant_label(g),
                        self.set_sizes[i],
                        1usize << k,
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Search outcome with the regime annotation: `regime` names the guarantee
/// backing the instance's dimension, `None` when the run is empirical.
#[derive(Debug, Clone)]
pub struct EquipartitionSolution {
    pub certificate: EquipartitionCertificate,
    pub regime: Option<&'static str>,
}

/// Simultaneous bisection of `d` point sets in `R^d` by one hyperplane, via
/// the majority-family reduction and the single-hyperplane transversal.
pub fn ham_sandwich(inst: &MassInstance) -> Result<EquipartitionCertificate> {
    if inst.num_sets() != inst.dim() {
        return Err(Error::HypothesisViolation(format!(
            "simultaneous bisection needs m = d, got m = {}, d = {}",
            inst.num_sets(),
            inst.dim()
        )));
    }
    let sol = equipartition_search(inst, 1)?;
    debug_assert!(sol.regime.is_some());
    Ok(sol.certificate)
}

/// Equipartition by `k` hyperplanes via the majority-family reduction:
/// every subset of `X_i` with more than `|X_i|/2^k` points becomes a family
/// member over the combined ground set, a k-transversal of the member hulls
/// is computed, and the orthant table converts it into a verified
/// equipartition certificate. Outside every proven regime the search still
/// runs and the solution is flagged empirical.
pub fn equipartition_search(inst: &MassInstance, k: usize) -> Result<EquipartitionSolution> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let m = inst.num_sets();
    // Combined ground set; points shared across sets collapse.
    let mut ground: Vec<Vector> = Vec::new();
    let mut ground_index: Vec<Vec<usize>> = Vec::with_capacity(m);
    for set in inst.sets() {
        let mut idx = Vec::with_capacity(set.len());
        for p in set {
            let gi = match ground.iter().position(|q| q == p) {
                Some(i) => i,
                None => {
                    ground.push(p.clone());
                    ground.len() - 1
                }
            };
            idx.push(gi);
        }
        ground_index.push(idx);
    }
    let ground_cfg = PointConfig::new(inst.dim(), ground)?;

    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut classes: Vec<usize> = Vec::new();
    for (i, set) in inst.sets().iter().enumerate() {
        let majority = majority_family(set.len(), k)?;
        for member in majority.members() {
            let mapped: Vec<usize> = member.iter().map(|&j| ground_index[i][j]).collect();
            members.push(mapped);
            classes.push(i);
        }
    }

    let opts = TransversalOptions {
        enforce_regime: false,
        ..TransversalOptions::default()
    };
    let core = hyperplane_transversal_core(&ground_cfg, &members, &classes, k, m, &opts)?;
    let table = orthant_counts(inst, &core.hyperplanes)?;
    let certificate = EquipartitionCertificate {
        hyperplanes: core.hyperplanes,
        table,
        set_sizes: inst.set_sizes(),
    };
    certificate.verify(inst).map_err(|e| {
        Error::Internal(format!("transversal produced an invalid equipartition: {e}"))
    })?;
    Ok(EquipartitionSolution {
        certificate,
        regime: guarantee(k, m, inst.dim()).map(|r| r.tag),
    })
}

/// Points on the curve `t -> (t, t^2, ..., t^d)` at distinct parameters
/// drawn deterministically from the seed, sorted ascending and grouped into
/// consecutive blocks of the given sizes. These instances realize the known
/// lower-bound layout for equipartitions.
pub fn moment_curve_instance(d: usize, sizes: &[usize], seed: u64) -> Result<MassInstance> {
    if d == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(Error::InvalidInput("block sizes must be positive".into()));
    }
    let total: usize = sizes.iter().sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<i64> = (1..=(4 * total as i64)).collect();
    pool.shuffle(&mut rng);
    let mut params: Vec<i64> = pool.into_iter().take(total).collect();
    params.sort_unstable();

    let gamma = |t: i64| -> Vector {
        let mut coords = Vec::with_capacity(d);
        let mut power = Rat::one();
        for _ in 0..d {
            power = power * Rat::int(t);
            coords.push(power.clone());
        }
        coords
    };
    let mut sets = Vec::with_capacity(sizes.len());
    let mut cursor = 0;
    for &s in sizes {
        sets.push(params[cursor..cursor + s].iter().map(|&t| gamma(t)).collect());
        cursor += s;
    }
    MassInstance::new(d, sets)
}

/// Bounds on the least dimension in which any `m` point sets admit a
/// k-hyperplane equipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaBounds {
    pub m: usize,
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
}

/// `lower = ceil((2^k - 1) m / k)` (the moment-curve bound); `upper =
/// 2^{k+p-1} + q` for `m = 2^p + q, 0 <= q < 2^p`; `exact` from the known
/// matching cases for k = 2 near powers of two, k = 3 with m in {1, 2, 4},
/// and any coincidence of the two bounds.
pub fn delta_bounds(m: usize, k: usize) -> Result<DeltaBounds> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidInput("m and k must be positive".into()));
    }
    let lower = (((1usize << k) - 1) * m).div_ceil(k);
    let p = usize::BITS as usize - 1 - m.leading_zeros() as usize;
    let q = m - (1 << p);
    let upper = (1usize << (k + p - 1)) + q;

    let mut exact = None;
    if k == 2 {
        if m.is_power_of_two() {
            // m = 2^s, s >= 1 -> 3 * 2^{s-1}; m = 1 falls to the case below
            if m >= 2 {
                exact = Some(3 * (m / 2));
            }
        }
        if (m + 1).is_power_of_two() {
            // m = 2^s - 1, s >= 1 -> 3 * 2^{s-1} - 1
            exact = Some(3 * ((m + 1) / 2) - 1);
        }
        if m >= 5 && (m - 1).is_power_of_two() {
            // m = 2^s + 1, s >= 2 -> 3 * 2^{s-1} + 2
            exact = Some(3 * ((m - 1) / 2) + 2);
        }
    }
    if k == 3 {
        exact = match m {
            1 => Some(3),
            2 => Some(5),
            4 => Some(10),
            _ => None,
        };
    }
    if exact.is_none() && lower == upper {
        exact = Some(lower);
    }
    debug_assert!(lower <= upper);
    if let Some(e) = exact {
        debug_assert!(lower <= e && e <= upper, "m={m} k={k}: {lower} <= {e} <= {upper}");
    }
    Ok(DeltaBounds {
        m,
        k,
        lower,
        upper,
        exact,
    })
}

/// Markdown bound table for `m <= max_m`, `k <= max_k`.
pub fn delta_bounds_markdown(max_m: usize, max_k: usize) -> Result<String> {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(&mut out, "| m \\ k | {} |", (1..=max_k).map(|k| k.to_string()).collect::<Vec<_>>().join(" | ")).unwrap();
    writeln!(&mut out, "|---|{}|", vec!["---"; max_k].join("|")).unwrap();
    for m in 1..=max_m {
        let mut row = format!("| {m} |");
        for k in 1..=max_k {
            let b = delta_bounds(m, k)?;
            let cell = match b.exact {
                Some(e) => format!(" {e} |"),
                None => format!(" {}..{} |", b.lower, b.upper),
            };
            row.push_str(&cell);
        }
        writeln!(&mut out, "{row}").unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst_1d(sets: &[&[i64]]) -> MassInstance {
        MassInstance::new(
            1,
            sets.iter()
                .map(|s| s.iter().map(|&x| vec![Rat::int(x)]).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn orthant_counts_four_quadrants() {
        let inst = MassInstance::new(
            2,
            vec![vec![
                vec![Rat::int(1), Rat::int(1)],
                vec![Rat::int(-1), Rat::int(1)],
                vec![Rat::int(1), Rat::int(-1)],
                vec![Rat::int(-1), Rat::int(-1)],
            ]],
        )
        .unwrap();
        let h1 = AffineHyperplane::new(&[Rat::one(), Rat::zero()], &Rat::zero()).unwrap();
        let h2 = AffineHyperplane::new(&[Rat::zero(), Rat::one()], &Rat::zero()).unwrap();
        let table = orthant_counts(&inst, &[h1, h2]).unwrap();
        assert_eq!(table.counts.len(), 4);
        for row in &table.counts {
            assert_eq!(row, &vec![1]);
        }
    }

    #[test]
    fn points_on_hyperplanes_are_uncounted() {
        let inst = inst_1d(&[&[0, 1, 2]]);
        let h = AffineHyperplane::new(&[Rat::one()], &Rat::zero()).unwrap();
        let table = orthant_counts(&inst, &[h]).unwrap();
        // 0 lies on the hyperplane
        assert_eq!(table.counts[0], vec![0]);
        assert_eq!(table.counts[1], vec![2]);
    }

    #[test]
    fn median_split_counts() {
        let inst = inst_1d(&[&[0, 1, 2, 3]]);
        let h = AffineHyperplane::new(&[Rat::one()], &Rat::frac(3, 2)).unwrap();
        let table = orthant_counts(&inst, &[h]).unwrap();
        assert_eq!(table.counts[0], vec![2]);
        assert_eq!(table.counts[1], vec![2]);
    }

    #[test]
    fn bisect_four_collinear_points() {
        let inst = inst_1d(&[&[0, 1, 2, 3]]);
        let cert = ham_sandwich(&inst).unwrap();
        cert.verify(&inst).unwrap();
        assert_eq!(cert.hyperplanes.len(), 1);
    }

    #[test]
    fn bisect_rejects_mismatched_counts() {
        let inst = inst_1d(&[&[0, 1], &[2, 3]]);
        assert!(matches!(
            ham_sandwich(&inst),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn equipartition_one_set_three_planes() {
        // one 8-point set in R^3: every open orthant of the three planes
        // holds at most one point
        let inst = moment_curve_instance(3, &[8], 11).unwrap();
        let sol = equipartition_search(&inst, 3).unwrap();
        sol.certificate.verify(&inst).unwrap();
        assert_eq!(sol.certificate.hyperplanes.len(), 3);
        assert_eq!(sol.regime, Some("three-planes"));
        for row in &sol.certificate.table.counts {
            assert!(row[0] <= 1);
        }
    }

    #[test]
    fn moment_curve_formula() {
        let inst = moment_curve_instance(3, &[2], 0).unwrap();
        for p in &inst.sets()[0] {
            let t = p[0].clone();
            assert_eq!(p[1], &t * &t);
            assert_eq!(p[2], &(&t * &t) * &t);
        }
        let one_d = moment_curve_instance(1, &[3], 5).unwrap();
        assert_eq!(one_d.sets()[0].len(), 3);
        let blocks = moment_curve_instance(3, &[4, 4], 7).unwrap();
        assert_eq!(blocks.set_sizes(), vec![4, 4]);
        // determinism
        assert_eq!(blocks, moment_curve_instance(3, &[4, 4], 7).unwrap());
    }

    #[test]
    fn delta_bound_values() {
        let b = delta_bounds(2, 2).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (3, 4, Some(3)));
        let b = delta_bounds(4, 3).unwrap();
        assert_eq!((b.lower, b.exact), (10, Some(10)));
        let b = delta_bounds(5, 2).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (8, 9, Some(8)));
        let b = delta_bounds(1, 1).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (1, 1, Some(1)));
        let b = delta_bounds(1, 3).unwrap();
        assert_eq!(b.exact, Some(3));
        let b = delta_bounds(2, 3).unwrap();
        assert_eq!(b.exact, Some(5));
    }

    #[test]
    fn delta_bounds_markdown_renders() {
        let table = delta_bounds_markdown(4, 3).unwrap();
        assert!(table.contains("| 4 | 4 | 6 | 10 |"));
    }
}
