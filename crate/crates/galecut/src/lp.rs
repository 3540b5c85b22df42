//! Exact LP feasibility kernel.
//!
//! A [`LpProblem`] is a system of rational equality rows with per-variable
//! nonnegativity and strict-positivity flags. Feasibility is decided by a
//! two-phase dense simplex with Bland's rule over exact rationals, which
//! terminates without any epsilon tuning. Strict positivity is handled by a
//! shared slack variable that is maximized and required positive: the system
//! has a solution with all flagged variables strictly positive iff the
//! optimal slack is positive.
//!
//! Feasibility only; there is no objective interface.

use crate::rat::Rat;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct LpProblem {
    num_vars: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
    nonneg: Vec<bool>,
    strict: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// An exact point satisfying every row, every nonnegativity flag, and
    /// every strict-positivity flag strictly.
    Feasible(Vec<Rat>),
    Infeasible,
}

impl LpOutcome {
    pub fn witness(&self) -> Option<&[Rat]> {
        match self {
            LpOutcome::Feasible(w) => Some(w),
            LpOutcome::Infeasible => None,
        }
    }
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            rows: Vec::new(),
            nonneg: vec![false; num_vars],
            strict: vec![false; num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn add_eq(&mut self, coeffs: Vec<Rat>, rhs: Rat) -> Result<&mut Self> {
        if coeffs.len() != self.num_vars {
            return Err(Error::InvalidInput(format!(
                "equality row has {} coefficients, expected {}",
                coeffs.len(),
                self.num_vars
            )));
        }
        self.rows.push((coeffs, rhs));
        Ok(self)
    }

    pub fn set_nonneg(&mut self, var: usize) -> &mut Self {
        self.nonneg[var] = true;
        self
    }

    pub fn set_all_nonneg(&mut self) -> &mut Self {
        self.nonneg.iter_mut().for_each(|f| *f = true);
        self
    }

    /// Strict positivity implies nonnegativity.
    pub fn set_strict(&mut self, var: usize) -> &mut Self {
        self.strict[var] = true;
        self.nonneg[var] = true;
        self
    }

    pub fn rows(&self) -> &[(Vec<Rat>, Rat)] {
        &self.rows
    }

    /// Exact substitution check used by tests and report-time re-verification.
    pub fn check_witness(&self, x: &[Rat]) -> bool {
        x.len() == self.num_vars
            && self
                .rows
                .iter()
                .all(|(c, b)| crate::linalg::dot(c, x) == *b)
            && (0..self.num_vars).all(|i| {
                (!self.nonneg[i] || !x[i].is_negative())
                    && (!self.strict[i] || x[i].is_positive())
            })
    }
}

/// Decides feasibility and returns an exact witness point when one exists.
pub fn lp_feasible(p: &LpProblem) -> Result<LpOutcome> {
    // Standard form: every variable nonnegative; free variables are split
    // into a difference of two nonnegative ones.
    let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(p.num_vars);
    let mut ncols = 0;
    for i in 0..p.num_vars {
        if p.nonneg[i] {
            col_of.push((ncols, None));
            ncols += 1;
        } else {
            col_of.push((ncols, Some(ncols + 1)));
            ncols += 2;
        }
    }
    let any_strict = p.strict.iter().any(|&s| s);
    let slack_col = if any_strict {
        let s = ncols;
        ncols += 1; // the shared positivity slack
        s
    } else {
        usize::MAX
    };

    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let expand = |coeffs: &[Rat], extra: &[(usize, Rat)], m: usize| -> Vec<Rat> {
        let mut r = vec![Rat::zero(); m];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (pos, neg) = col_of[i];
            r[pos] = c.clone();
            if let Some(n) = neg {
                r[n] = -c;
            }
        }
        for (j, v) in extra {
            r[*j] = v.clone();
        }
        r
    };

    let mut extra_cols = 0;
    let mut extra_rows: Vec<(usize, Vec<(usize, Rat)>)> = Vec::new();
    if any_strict {
        // x_i - s - t_i = 0 for each strict variable, plus s + r = 1 to keep
        // the maximization bounded.
        for i in 0..p.num_vars {
            if p.strict[i] {
                extra_rows.push((i, vec![(slack_col, Rat::int(-1))]));
                extra_cols += 1;
            }
        }
        extra_cols += 1; // the cap slack r
    }
    let total_cols = ncols + extra_cols;

    for (coeffs, rhs) in &p.rows {
        rows.push((expand(coeffs, &[], total_cols), rhs.clone()));
    }
    if any_strict {
        let mut t_col = ncols;
        for (i, extras) in extra_rows {
            let mut unit = vec![Rat::zero(); p.num_vars];
            unit[i] = Rat::one();
            let mut extra = extras;
            extra.push((t_col, Rat::int(-1)));
            rows.push((expand(&unit, &extra, total_cols), Rat::zero()));
            t_col += 1;
        }
        let mut cap = vec![Rat::zero(); total_cols];
        cap[slack_col] = Rat::one();
        cap[t_col] = Rat::one();
        rows.push((cap, Rat::one()));
    }

    let mut tab = Tableau::new(total_cols, rows);
    if !tab.phase_one() {
        return Ok(LpOutcome::Infeasible);
    }
    if any_strict {
        // Maximize s, i.e. minimize -s.
        let mut cost = vec![Rat::zero(); total_cols];
        cost[slack_col] = Rat::int(-1);
        tab.phase_two(&cost);
        if !tab.value(slack_col).is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
    }

    let mut x = Vec::with_capacity(p.num_vars);
    for i in 0..p.num_vars {
        let (pos, neg) = col_of[i];
        let mut v = tab.value(pos);
        if let Some(n) = neg {
            v -= tab.value(n);
        }
        x.push(v);
    }
    debug_assert!(p.check_witness(&x), "simplex witness failed substitution");
    Ok(LpOutcome::Feasible(x))
}

/// Dense simplex tableau over exact rationals. Rows are `a | b` with `b >= 0`
/// maintained as an invariant; `basis[i]` is the basic column of row `i`.
struct Tableau {
    ncols: usize,
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(ncols: usize, rows: Vec<(Vec<Rat>, Rat)>) -> Self {
        let mut a = Vec::with_capacity(rows.len());
        let mut b = Vec::with_capacity(rows.len());
        for (mut coeffs, mut rhs) in rows {
            if rhs.is_negative() {
                for c in &mut coeffs {
                    *c = -c.clone();
                }
                rhs = -rhs;
            }
            a.push(coeffs);
            b.push(rhs);
        }
        Tableau {
            ncols,
            a,
            b,
            basis: Vec::new(),
        }
    }

    fn value(&self, col: usize) -> Rat {
        self.basis
            .iter()
            .position(|&c| c == col)
            .map_or(Rat::zero(), |r| self.b[r].clone())
    }

    /// Minimizes the artificial objective; true iff the system is feasible.
    /// On success the artificial columns are eliminated from the tableau.
    fn phase_one(&mut self) -> bool {
        let m = self.a.len();
        let nreal = self.ncols;
        for (i, row) in self.a.iter_mut().enumerate() {
            row.resize(nreal + m, Rat::zero());
            row[nreal + i] = Rat::one();
            self.basis.push(nreal + i);
        }
        self.ncols += m;
        let mut cost = vec![Rat::zero(); self.ncols];
        for j in nreal..self.ncols {
            cost[j] = Rat::one();
        }
        let objective = self.run_bland(&cost);
        if objective.is_positive() {
            return false;
        }
        // Drive leftover artificials out of the basis; an all-zero row over
        // the real columns is redundant and dropped.
        let mut r = 0;
        while r < self.a.len() {
            if self.basis[r] >= nreal {
                if let Some(j) = (0..nreal).find(|&j| !self.a[r][j].is_zero()) {
                    self.pivot(r, j);
                } else {
                    self.a.remove(r);
                    self.b.remove(r);
                    self.basis.remove(r);
                    continue;
                }
            }
            r += 1;
        }
        for row in &mut self.a {
            row.truncate(nreal);
        }
        self.ncols = nreal;
        true
    }

    fn phase_two(&mut self, cost: &[Rat]) {
        debug_assert_eq!(cost.len(), self.ncols);
        self.run_bland(cost);
    }

    /// Bland-rule minimization of `cost`; returns the objective value at the
    /// final basis. Smallest-index entering and leaving choices guarantee
    /// termination. An improving column without a positive pivot entry would
    /// mean an unbounded objective, which no caller constructs; it panics in
    /// debug and exits the loop in release (no certificate is emitted from a
    /// non-optimal basis because every caller re-verifies witnesses).
    fn run_bland(&mut self, cost: &[Rat]) -> Rat {
        loop {
            // Reduced costs from scratch: sizes here are tiny and an explicit
            // recomputation avoids cost-row bookkeeping bugs.
            let mut entering = None;
            for j in 0..self.ncols {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j].clone();
                for (r, &bc) in self.basis.iter().enumerate() {
                    if !cost[bc].is_zero() && !self.a[r][j].is_zero() {
                        red -= &cost[bc] * &self.a[r][j];
                    }
                }
                if red.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                break;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for r in 0..self.a.len() {
                if !self.a[r][j].is_positive() {
                    continue;
                }
                let ratio = &self.b[r] / &self.a[r][j];
                let better = match &leave {
                    None => true,
                    Some((lr, lv)) => {
                        ratio < *lv || (ratio == *lv && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                debug_assert!(false, "unbounded objective in feasibility simplex");
                break;
            };
            self.pivot(r, j);
        }
        let mut obj = Rat::zero();
        for (r, &bc) in self.basis.iter().enumerate() {
            if !cost[bc].is_zero() {
                obj += &cost[bc] * &self.b[r];
            }
        }
        obj
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.a[r][j].recip();
        for c in 0..self.ncols {
            let v = &self.a[r][c] * &inv;
            self.a[r][c] = v;
        }
        self.b[r] = &self.b[r] * &inv;
        for i in 0..self.a.len() {
            if i == r || self.a[i][j].is_zero() {
                continue;
            }
            let f = self.a[i][j].clone();
            for c in 0..self.ncols {
                let v = &self.a[i][c] - &(&f * &self.a[r][c]);
                self.a[i][c] = v;
            }
            self.b[i] = &self.b[i] - &(&f * &self.b[r]);
        }
        self.basis[r] = j;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction_is_infeasible() {
        // x >= 0, x = -1
        let mut p = LpProblem::new(1);
        p.add_eq(vec![Rat::one()], Rat::int(-1)).unwrap();
        p.set_nonneg(0);
        assert_eq!(lp_feasible(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn simplex_on_a_segment() {
        // x + y = 1, x >= 0, y >= 0
        let mut p = LpProblem::new(2);
        p.add_eq(vec![Rat::one(), Rat::one()], Rat::one()).unwrap();
        p.set_all_nonneg();
        let out = lp_feasible(&p).unwrap();
        let w = out.witness().expect("feasible");
        assert!(p.check_witness(w));
    }

    #[test]
    fn diagonals_of_the_unit_square() {
        // Convex combinations of (0,0),(1,1) and of (1,0),(0,1) that meet:
        // the 2x2 system for the diagonals has the unique solution (1/2,1/2).
        let pts_a = [[0i64, 0], [1, 1]];
        let pts_b = [[1i64, 0], [0, 1]];
        let mut p = LpProblem::new(4);
        for d in 0..2 {
            p.add_eq(
                vec![
                    Rat::int(pts_a[0][d]),
                    Rat::int(pts_a[1][d]),
                    Rat::int(-pts_b[0][d]),
                    Rat::int(-pts_b[1][d]),
                ],
                Rat::zero(),
            )
            .unwrap();
        }
        p.add_eq(
            vec![Rat::one(), Rat::one(), Rat::zero(), Rat::zero()],
            Rat::one(),
        )
        .unwrap();
        p.add_eq(
            vec![Rat::zero(), Rat::zero(), Rat::one(), Rat::one()],
            Rat::one(),
        )
        .unwrap();
        p.set_all_nonneg();
        let out = lp_feasible(&p).unwrap();
        let w = out.witness().expect("diagonals intersect");
        let x = &w[0] * Rat::int(0) + &w[1] * Rat::int(1);
        let y = &w[0] * Rat::int(0) + &w[1] * Rat::int(1);
        assert_eq!(x, Rat::frac(1, 2));
        assert_eq!(y, Rat::frac(1, 2));
    }

    #[test]
    fn strict_positivity_via_slack() {
        // x + y = 1 with x, y > 0 is strictly feasible
        let mut p = LpProblem::new(2);
        p.add_eq(vec![Rat::one(), Rat::one()], Rat::one()).unwrap();
        p.set_strict(0);
        p.set_strict(1);
        let out = lp_feasible(&p).unwrap();
        let w = out.witness().expect("strictly feasible");
        assert!(w[0].is_positive() && w[1].is_positive());

        // x + y = 1, x - y = 1 forces y = 0, so y > 0 is infeasible
        let mut q = LpProblem::new(2);
        q.add_eq(vec![Rat::one(), Rat::one()], Rat::one()).unwrap();
        q.add_eq(vec![Rat::one(), Rat::int(-1)], Rat::one()).unwrap();
        q.set_nonneg(0);
        q.set_strict(1);
        assert_eq!(lp_feasible(&q).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn free_variables_split() {
        // x - y = 5 with both free has a witness even with negative parts
        let mut p = LpProblem::new(2);
        p.add_eq(vec![Rat::one(), Rat::int(-1)], Rat::int(5)).unwrap();
        let out = lp_feasible(&p).unwrap();
        assert!(p.check_witness(out.witness().unwrap()));
    }

    #[test]
    fn malformed_row_rejected() {
        let mut p = LpProblem::new(2);
        assert!(p.add_eq(vec![Rat::one()], Rat::one()).is_err());
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let mut p = LpProblem::new(2);
        p.add_eq(vec![Rat::one(), Rat::one()], Rat::one()).unwrap();
        p.add_eq(vec![Rat::int(2), Rat::int(2)], Rat::int(2)).unwrap();
        p.set_all_nonneg();
        assert!(lp_feasible(&p).unwrap().witness().is_some());
    }
}
