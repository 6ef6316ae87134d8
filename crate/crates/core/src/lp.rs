//! A small dense exact-rational linear programming solver: two-phase primal
//! simplex with Bland's rule, so termination is guaranteed and every answer
//! is exact. Problem sizes in this crate are tiny (tens of variables), which
//! makes the full-tableau method the right tool.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<(Vec<Rat>, Rel, Rat)>,
    objective: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, solution: Vec<Rat> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    /// All variables are implicitly nonnegative.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram { num_vars, rows: Vec::new(), objective: vec![Rat::zero(); num_vars] }
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rat>, rel: Rel, rhs: Rat) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.rows.push((coeffs, rel, rhs));
    }

    pub fn set_objective(&mut self, coeffs: Vec<Rat>) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.objective = coeffs;
    }

    pub fn maximize(&self) -> LpOutcome {
        Tableau::build(self).solve()
    }
}

struct Tableau {
    /// rows[i] = coefficients over all columns, then the right-hand side
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    ncols: usize,
    num_vars: usize,
    first_artificial: usize,
    objective: Vec<Rat>,
}

enum SimplexEnd {
    Optimal(Rat),
    Unbounded,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let n = lp.num_vars;
        let m = lp.rows.len();
        // effective relation once rows with negative rhs are negated
        let eff_rel = |rel: Rel, negate: bool| match (rel, negate) {
            (Rel::Eq, _) => Rel::Eq,
            (Rel::Le, false) | (Rel::Ge, true) => Rel::Le,
            (Rel::Ge, false) | (Rel::Le, true) => Rel::Ge,
        };
        let mut num_slack = 0;
        let mut num_art = 0;
        for (_, rel, rhs) in &lp.rows {
            match eff_rel(*rel, rhs.is_negative()) {
                Rel::Le => num_slack += 1,
                Rel::Ge => {
                    num_slack += 1;
                    num_art += 1;
                }
                Rel::Eq => num_art += 1,
            }
        }
        let first_artificial = n + num_slack;
        let ncols = first_artificial + num_art;
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack_at = n;
        let mut artificial_at = first_artificial;
        for (coeffs, rel, rhs) in &lp.rows {
            let negate = rhs.is_negative();
            let sign = if negate { -Rat::one() } else { Rat::one() };
            let mut row: Vec<Rat> = vec![Rat::zero(); ncols + 1];
            for (j, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    row[j] = c * &sign;
                }
            }
            row[ncols] = rhs * &sign;
            match eff_rel(*rel, negate) {
                Rel::Le => {
                    row[slack_at] = Rat::one();
                    basis.push(slack_at);
                    slack_at += 1;
                }
                Rel::Ge => {
                    row[slack_at] = -Rat::one();
                    slack_at += 1;
                    row[artificial_at] = Rat::one();
                    basis.push(artificial_at);
                    artificial_at += 1;
                }
                Rel::Eq => {
                    row[artificial_at] = Rat::one();
                    basis.push(artificial_at);
                    artificial_at += 1;
                }
            }
            rows.push(row);
        }
        Tableau { rows, basis, ncols, num_vars: n, first_artificial, objective: lp.objective.clone() }
    }

    fn solve(mut self) -> LpOutcome {
        // phase 1: maximize minus the sum of artificials
        if self.first_artificial < self.ncols {
            let mut c1 = vec![Rat::zero(); self.ncols];
            for x in c1.iter_mut().skip(self.first_artificial) {
                *x = -Rat::one();
            }
            match self.run(&c1, self.ncols) {
                SimplexEnd::Optimal(value) => {
                    if value.is_negative() {
                        return LpOutcome::Infeasible;
                    }
                }
                SimplexEnd::Unbounded => unreachable!("phase 1 objective is bounded"),
            }
            self.evict_artificials();
        }
        // phase 2 on the original objective, artificial columns barred
        let mut c2 = vec![Rat::zero(); self.ncols];
        c2[..self.num_vars].clone_from_slice(&self.objective);
        match self.run(&c2, self.first_artificial) {
            SimplexEnd::Optimal(value) => {
                let mut solution = vec![Rat::zero(); self.num_vars];
                for (i, &b) in self.basis.iter().enumerate() {
                    if b < self.num_vars {
                        solution[b] = self.rows[i][self.ncols].clone();
                    }
                }
                LpOutcome::Optimal { value, solution }
            }
            SimplexEnd::Unbounded => LpOutcome::Unbounded,
        }
    }

    /// Bland-rule simplex restricted to columns `0..allowed`.
    fn run(&mut self, c: &[Rat], allowed: usize) -> SimplexEnd {
        loop {
            let m = self.rows.len();
            // reduced costs from scratch each iteration; sizes keep it cheap
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut red = c[j].clone();
                for i in 0..m {
                    let cb = &c[self.basis[i]];
                    if !cb.is_zero() && !self.rows[i][j].is_zero() {
                        red -= cb * &self.rows[i][j];
                    }
                }
                if red.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else {
                let mut value = Rat::zero();
                for i in 0..m {
                    let cb = &c[self.basis[i]];
                    if !cb.is_zero() {
                        value += cb * &self.rows[i][self.ncols];
                    }
                }
                return SimplexEnd::Optimal(value);
            };
            // ratio test with Bland tie-break on the leaving variable index
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..m {
                if self.rows[i][j].is_positive() {
                    let ratio = &self.rows[i][self.ncols] / &self.rows[i][j];
                    match &leave {
                        None => leave = Some((i, ratio)),
                        Some((li, lr)) => {
                            if ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]) {
                                leave = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((pivot_row, _)) = leave else {
                return SimplexEnd::Unbounded;
            };
            self.pivot(pivot_row, j);
        }
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = self.rows[pr][pc].recip();
        for x in self.rows[pr].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..self.rows.len() {
            if i == pr || self.rows[i][pc].is_zero() {
                continue;
            }
            let f = self.rows[i][pc].clone();
            for j in 0..=self.ncols {
                if !self.rows[pr][j].is_zero() {
                    let delta = &f * &self.rows[pr][j];
                    self.rows[i][j] = &self.rows[i][j] - &delta;
                }
            }
        }
        self.basis[pr] = pc;
    }

    /// After phase 1, pivot basic artificials out or drop redundant rows.
    fn evict_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.first_artificial {
                if let Some(j) = (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                    self.pivot(i, j);
                } else {
                    self.rows.remove(i);
                    self.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rat {
        Rat::from_integer(x.into())
    }

    #[test]
    fn simple_maximum() {
        // max x + y s.t. x + 2y <= 4, 3x + y <= 6
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![r(1), r(2)], Rel::Le, r(4));
        lp.add_constraint(vec![r(3), r(1)], Rel::Le, r(6));
        lp.set_objective(vec![r(1), r(1)]);
        match lp.maximize() {
            LpOutcome::Optimal { value, .. } => {
                assert_eq!(value, Rat::new(14.into(), 5.into()));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn equality_and_infeasible() {
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![r(1), r(1)], Rel::Eq, r(2));
        lp.add_constraint(vec![r(1), r(1)], Rel::Ge, r(3));
        lp.set_objective(vec![r(1), r(0)]);
        assert_eq!(lp.maximize(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![r(1)], Rel::Ge, r(1));
        lp.set_objective(vec![r(1)]);
        assert_eq!(lp.maximize(), LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // x - y <= -1 with x, y >= 0: optimum of x at y = 1 + x
        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![r(1), r(-1)], Rel::Le, r(-1));
        lp.add_constraint(vec![r(0), r(1)], Rel::Le, r(4));
        lp.set_objective(vec![r(1), r(0)]);
        match lp.maximize() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, r(3)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn degenerate_still_terminates() {
        // degenerate vertex at the origin; Bland's rule must not cycle
        let mut lp = LinearProgram::new(3);
        lp.add_constraint(vec![r(1), r(-1), r(0)], Rel::Le, r(0));
        lp.add_constraint(vec![r(0), r(1), r(-1)], Rel::Le, r(0));
        lp.add_constraint(vec![r(-1), r(0), r(1)], Rel::Le, r(0));
        lp.add_constraint(vec![r(1), r(1), r(1)], Rel::Le, r(3));
        lp.set_objective(vec![r(1), r(1), r(1)]);
        match lp.maximize() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, r(3)),
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
