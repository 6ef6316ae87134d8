//! Regular subdivisions of hypersimplices in exact rational arithmetic.
//!
//! A lifting function assigns a rational height to every vertex of the
//! hypersimplex. The lower affine supports `(a, b)` with `a.x + b <= h(x)`
//! at all lifted vertices form a polyhedron; its vertices are exactly the
//! supports flat on a full-dimensional cell, i.e. the maximal cells of the
//! subdivision, and its bounded edges are the interior ridges. The engine
//! therefore runs a breadth-first search over that vertex-edge graph with
//! exact pivoting: a rotation step finds the first vertex, and a double
//! description step enumerates the edge directions at each vertex. Every
//! cell carries its support certificate, which is re-checked against all
//! hypersimplex vertices before the subdivision is returned.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lift::{corank_vector, predicted_ray_cells, LiftVector};
use crate::linalg::{dot, matrix_rank, normalize_direction, nullspace_basis, solve};
use crate::matroid::Matroid;
use crate::split::{is_split, split_flacets};
use crate::subsets::{binomial, codec, Subset};

pub type Rat = BigRational;

/// Default cap on the number of hypersimplex vertices the engine accepts.
pub const DEFAULT_MAX_VERTICES: u64 = 1000;

/// A regular subdivision: maximal cells as sorted vertex-index sets, the
/// dual graph, and one affine support certificate `(a, b)` per cell.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub k: usize,
    pub n: usize,
    pub cells: Vec<Vec<usize>>,
    pub dual_edges: Vec<(usize, usize)>,
    pub certificates: Vec<(Vec<Rat>, Rat)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SecondaryConeInfo {
    pub solution_dim: usize,
    pub lineality_dim: usize,
    pub cone_dim: usize,
}

struct Engine {
    n: usize,
    /// reduced support coordinates: a_1..a_{n-1} and b (a_n is pinned to 0)
    rows: Vec<Vec<Rat>>,
    heights: Vec<Rat>,
}

impl Engine {
    fn new(k: usize, n: usize, lift: &LiftVector) -> Engine {
        let c = codec(n, k);
        let rows = c
            .subsets()
            .iter()
            .map(|s| {
                let mut row = vec![Rat::zero(); n];
                for e in s.elems() {
                    if e < n {
                        row[e - 1] = Rat::one();
                    }
                }
                row[n - 1] = Rat::one();
                row
            })
            .collect();
        Engine { n, rows, heights: lift.heights.clone() }
    }

    fn gap(&self, y: &[Rat], u: usize) -> Rat {
        &self.heights[u] - dot(&self.rows[u], y)
    }

    fn tight_set(&self, y: &[Rat]) -> Result<Vec<usize>> {
        let mut tight = Vec::new();
        for u in 0..self.rows.len() {
            let g = self.gap(y, u);
            if g.is_negative() {
                return Err(Error::CertificateFailure(format!(
                    "support exceeds the lift at vertex {u}"
                )));
            }
            if g.is_zero() {
                tight.push(u);
            }
        }
        Ok(tight)
    }

    /// Rotate the trivial support until its tight set spans full rank,
    /// which is the first vertex of the support polyhedron.
    fn find_vertex(&self) -> Result<Vec<Rat>> {
        let m = self.n;
        let mut y = vec![Rat::zero(); m];
        y[m - 1] = self.heights.iter().min().expect("nonempty lift").clone();
        loop {
            let tight = self.tight_set(&y)?;
            let tight_rows: Vec<Vec<Rat>> = tight.iter().map(|&u| self.rows[u].clone()).collect();
            let null = nullspace_basis(&tight_rows, m);
            let Some(delta) = null.into_iter().next() else {
                return Ok(y);
            };
            let mut delta = delta;
            let is_recession = |d: &[Rat]| self.rows.iter().all(|r| !dot(r, d).is_positive());
            if is_recession(&delta) {
                for x in delta.iter_mut() {
                    *x = -x.clone();
                }
                if is_recession(&delta) {
                    return Err(Error::CertificateFailure(
                        "support polyhedron has unexpected lineality".into(),
                    ));
                }
            }
            let step = self.blocking_step(&y, &delta).expect("non-recession direction blocks");
            for (yi, di) in y.iter_mut().zip(&delta) {
                *yi += &step * di;
            }
        }
    }

    /// Largest step along `delta` staying inside the support polyhedron;
    /// None when the ray is unbounded.
    fn blocking_step(&self, y: &[Rat], delta: &[Rat]) -> Option<Rat> {
        let mut best: Option<Rat> = None;
        for u in 0..self.rows.len() {
            let slope = dot(&self.rows[u], delta);
            if slope.is_positive() {
                let t = self.gap(y, u) / slope;
                if best.as_ref().is_none_or(|b| t < *b) {
                    best = Some(t);
                }
            }
        }
        best
    }

    /// Extreme rays of `{delta : row . delta <= 0}` for the tight rows of a
    /// vertex (a pointed cone), by incremental double description.
    fn vertex_cone_rays(&self, tight: &[usize]) -> Vec<Vec<Rat>> {
        let m = self.n;
        // greedy independent subset of the tight rows for the seed cone
        let mut rref: Vec<Vec<Rat>> = Vec::new();
        let mut seed: Vec<usize> = Vec::new();
        let mut rest: Vec<usize> = Vec::new();
        for (pos, &u) in tight.iter().enumerate() {
            let mut probe = rref.clone();
            probe.push(self.rows[u].clone());
            if matrix_rank(probe.clone()) > rref.len() {
                rref = probe;
                crate::linalg::row_reduce(&mut rref);
                seed.push(pos);
            } else {
                rest.push(pos);
            }
        }
        debug_assert_eq!(seed.len(), m, "vertex cone must be pointed");
        let a_seed: Vec<Vec<Rat>> = seed.iter().map(|&p| self.rows[tight[p]].clone()).collect();
        let total = tight.len();
        let word_len = total.div_ceil(64);
        let mark = |z: &mut Vec<u64>, i: usize| z[i / 64] |= 1 << (i % 64);
        let mut rays: Vec<(Vec<Rat>, Vec<u64>)> = Vec::new();
        for (j, _) in seed.iter().enumerate() {
            let mut rhs = vec![Rat::zero(); m];
            rhs[j] = -Rat::one();
            let mut ray = solve(&a_seed, &rhs).expect("seed rows are invertible");
            normalize_direction(&mut ray);
            let mut z = vec![0u64; word_len];
            for (jj, &p) in seed.iter().enumerate() {
                if jj != j {
                    mark(&mut z, p);
                }
            }
            rays.push((ray, z));
        }
        for &pos in &rest {
            let row = &self.rows[tight[pos]];
            let sign_of = |r: &[Rat]| dot(row, r);
            let mut inside = Vec::new();
            let mut on = Vec::new();
            let mut outside = Vec::new();
            for rz in rays.drain(..) {
                let s = sign_of(&rz.0);
                if s.is_negative() {
                    inside.push(rz);
                } else if s.is_zero() {
                    on.push(rz);
                } else {
                    outside.push((rz, s));
                }
            }
            for (_, z) in on.iter_mut() {
                mark(z, pos);
            }
            let mut next: Vec<(Vec<Rat>, Vec<u64>)> = Vec::new();
            // adjacency: the common zero set of the pair is dominated by no
            // third ray; standard combinatorial test for pointed cones
            let all: Vec<&Vec<u64>> = inside
                .iter()
                .map(|(_, z)| z)
                .chain(on.iter().map(|(_, z)| z))
                .chain(outside.iter().map(|((_, z), _)| z))
                .collect();
            for (p, zp) in &inside {
                let sp = sign_of(p);
                for ((q, zq), sq) in &outside {
                    let common: Vec<u64> = zp.iter().zip(zq).map(|(a, b)| a & b).collect();
                    let dominated = all.iter().any(|z| {
                        !std::ptr::eq(*z, zp)
                            && !std::ptr::eq(*z, zq)
                            && common.iter().zip(z.iter()).all(|(c, w)| c & !w == 0)
                    });
                    if dominated {
                        continue;
                    }
                    // combination tight on the new row, inside the old cone
                    let mut ray: Vec<Rat> = p
                        .iter()
                        .zip(q)
                        .map(|(pi, qi)| sq * pi - &sp * qi)
                        .collect();
                    normalize_direction(&mut ray);
                    let mut z = common;
                    mark(&mut z, pos);
                    next.push((ray, z));
                }
            }
            rays = inside;
            rays.extend(on);
            rays.extend(next);
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (ray, _) in rays {
            if seen.insert(ray.clone()) {
                out.push(ray);
            }
        }
        out
    }
}

/// Regular subdivision with the default vertex guard.
pub fn regular_subdivision(k: usize, n: usize, lift: &LiftVector) -> Result<Subdivision> {
    regular_subdivision_with_limit(k, n, lift, DEFAULT_MAX_VERTICES)
}

pub fn regular_subdivision_with_limit(
    k: usize,
    n: usize,
    lift: &LiftVector,
    max_vertices: u64,
) -> Result<Subdivision> {
    if k == 0 || k >= n {
        return Err(Error::DegenerateParameters);
    }
    let count = binomial(n, k);
    if count > max_vertices {
        return Err(Error::LimitExceeded(format!(
            "hypersimplex has {count} vertices, guard is {max_vertices}"
        )));
    }
    if (lift.k, lift.n) != (k, n) || lift.heights.len() != count as usize {
        return Err(Error::InvalidParams("lift does not match the hypersimplex".into()));
    }
    let engine = Engine::new(k, n, lift);
    let start = engine.find_vertex()?;
    let mut cell_index: HashMap<Vec<Rat>, usize> = HashMap::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut supports: Vec<Vec<Rat>> = Vec::new();
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut queue = VecDeque::new();
    cell_index.insert(start.clone(), 0);
    cells.push(engine.tight_set(&start)?);
    supports.push(start.clone());
    queue.push_back(start);
    while let Some(y) = queue.pop_front() {
        let here = cell_index[&y];
        let tight = cells[here].clone();
        for ray in engine.vertex_cone_rays(&tight) {
            let Some(step) = engine.blocking_step(&y, &ray) else {
                continue; // boundary ridge
            };
            debug_assert!(step.is_positive());
            let next: Vec<Rat> =
                y.iter().zip(&ray).map(|(yi, ri)| yi + &step * ri).collect();
            let there = match cell_index.get(&next) {
                Some(&i) => i,
                None => {
                    let i = cells.len();
                    cell_index.insert(next.clone(), i);
                    cells.push(engine.tight_set(&next)?);
                    supports.push(next.clone());
                    queue.push_back(next);
                    i
                }
            };
            edges.insert((here.min(there), here.max(there)));
        }
    }
    // deterministic cell order
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by(|&a, &b| cells[a].cmp(&cells[b]));
    let mut rank_of = vec![0usize; cells.len()];
    for (new, &old) in order.iter().enumerate() {
        rank_of[old] = new;
    }
    let cells: Vec<Vec<usize>> = order.iter().map(|&o| cells[o].clone()).collect();
    let supports: Vec<Vec<Rat>> = order.iter().map(|&o| supports[o].clone()).collect();
    let mut dual_edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (rank_of[a], rank_of[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    dual_edges.sort_unstable();
    let certificates: Vec<(Vec<Rat>, Rat)> = supports
        .iter()
        .map(|y| {
            let mut a = y[..n - 1].to_vec();
            a.push(Rat::zero());
            (a, y[n - 1].clone())
        })
        .collect();
    let sub = Subdivision { k, n, cells, dual_edges, certificates };
    check_certificates(&sub, lift)?;
    Ok(sub)
}

/// Re-checks every cell certificate against all hypersimplex vertices and
/// the coverage invariant.
fn check_certificates(sub: &Subdivision, lift: &LiftVector) -> Result<()> {
    let c = codec(sub.n, sub.k);
    let mut covered = vec![false; c.size()];
    for (cell, (a, b)) in sub.cells.iter().zip(&sub.certificates) {
        let in_cell: HashSet<usize> = cell.iter().copied().collect();
        for u in 0..c.size() {
            let mut val = b.clone();
            for e in c.subset(u).elems() {
                val += &a[e - 1];
            }
            let diff = &lift.heights[u] - &val;
            let ok = if in_cell.contains(&u) { diff.is_zero() } else { diff.is_positive() };
            if !ok {
                return Err(Error::CertificateFailure(format!(
                    "cell certificate fails at vertex index {u}"
                )));
            }
        }
        for &u in cell {
            covered[u] = true;
        }
    }
    if covered.iter().any(|&x| !x) {
        return Err(Error::CertificateFailure("cells do not cover all vertices".into()));
    }
    Ok(())
}

/// Interpret a cell's vertex set as a basis system.
pub fn cell_to_matroid(k: usize, n: usize, cell: &[usize]) -> Result<Matroid> {
    let c = codec(n, k);
    let bases: Vec<Subset> = cell.iter().map(|&i| c.subset(i)).collect();
    Matroid::from_bases(n, k, bases).map_err(|e| match e {
        Error::ExchangeViolation { a, b, elem } => Error::NotAMatroid { a, b, elem },
        other => other,
    })
}

pub fn is_matroid_subdivision(sub: &Subdivision) -> bool {
    sub.cells.iter().all(|cell| cell_to_matroid(sub.k, sub.n, cell).is_ok())
}

/// Indices of the loop-free maximal cells; these carry the tropical linear
/// space inside the dual complex.
pub fn tropical_linear_space(sub: &Subdivision) -> Vec<usize> {
    let c = codec(sub.n, sub.k);
    (0..sub.cells.len())
        .filter(|&i| {
            let mut union = Subset::EMPTY;
            for &u in &sub.cells[i] {
                union = union.union(c.subset(u));
            }
            union == Subset::full(sub.n)
        })
        .collect()
}

/// Dimension data of the secondary cone: the space of lifts that are affine
/// on every maximal cell, modulo the n-dimensional lineality of global
/// linear functionals.
pub fn secondary_cone_dimension(sub: &Subdivision) -> Result<SecondaryConeInfo> {
    if sub.k == 0 || sub.k >= sub.n {
        return Err(Error::DegenerateParameters);
    }
    let c = codec(sub.n, sub.k);
    let lifted = |u: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); sub.n + 1];
        for e in c.subset(u).elems() {
            v[e - 1] = Rat::one();
        }
        v[sub.n] = Rat::one();
        v
    };
    let mut equations: Vec<Vec<Rat>> = Vec::new();
    for cell in &sub.cells {
        // affinely spanning subset of the cell
        let mut span: Vec<usize> = Vec::new();
        let mut span_rows: Vec<Vec<Rat>> = Vec::new();
        for &u in cell {
            let mut probe = span_rows.clone();
            probe.push(lifted(u));
            if matrix_rank(probe) > span.len() {
                span_rows.push(lifted(u));
                span.push(u);
            }
        }
        // each remaining vertex is an affine combination of the span; the
        // same combination must hold among the heights
        let cols: Vec<Vec<Rat>> = (0..=sub.n)
            .map(|j| span.iter().map(|&u| lifted(u)[j].clone()).collect())
            .collect();
        for &u in cell {
            if span.contains(&u) {
                continue;
            }
            let target = lifted(u);
            let gamma = solve(&cols, &target).expect("vertex lies in the affine span");
            let mut row = vec![Rat::zero(); c.size()];
            row[u] = Rat::one();
            for (g, &b) in gamma.iter().zip(&span) {
                row[b] = -g.clone();
            }
            equations.push(row);
        }
    }
    let rank = matrix_rank(equations);
    let solution_dim = c.size() - rank;
    Ok(SecondaryConeInfo {
        solution_dim,
        lineality_dim: sub.n,
        cone_dim: solution_dim - sub.n,
    })
}

/// Outcome of checking that the corank vector of the series-free lift spans
/// a ray: the cells must be exactly the predicted matroid polytopes and the
/// secondary cone must be one-dimensional.
#[derive(Clone, Debug, Serialize)]
pub struct RayReport {
    pub expected_cell_count: usize,
    pub actual_cell_count: usize,
    pub cells_match: bool,
    pub cone_dim: usize,
    pub missing_cells: Vec<Vec<Subset>>,
    pub extra_cells: Vec<Vec<Subset>>,
}

impl RayReport {
    pub fn passed(&self) -> bool {
        self.cells_match && self.expected_cell_count == self.actual_cell_count && self.cone_dim == 1
    }
}

pub fn verify_ray(m: &Matroid) -> Result<RayReport> {
    verify_ray_with_limit(m, DEFAULT_MAX_VERTICES)
}

pub fn verify_ray_with_limit(m: &Matroid, max_vertices: u64) -> Result<RayReport> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_split(m) {
        return Err(Error::NotSplit);
    }
    let predicted = predicted_ray_cells(m)?;
    let lam = &predicted[0];
    let lift = corank_vector(lam, lam.rank())?;
    let sub = regular_subdivision_with_limit(lam.rank(), lam.n(), &lift, max_vertices)?;
    let mut expected_sets: Vec<Vec<usize>> =
        predicted.iter().map(|p| p.bases_bitmap().iter_ones().collect()).collect();
    expected_sets.sort();
    let mut actual_sets = sub.cells.clone();
    actual_sets.sort();
    let c = codec(lam.n(), lam.rank());
    let as_subsets =
        |cell: &Vec<usize>| cell.iter().map(|&i| c.subset(i)).collect::<Vec<Subset>>();
    let missing_cells: Vec<Vec<Subset>> =
        expected_sets.iter().filter(|e| !actual_sets.contains(e)).map(as_subsets).collect();
    let extra_cells: Vec<Vec<Subset>> =
        actual_sets.iter().filter(|a| !expected_sets.contains(a)).map(as_subsets).collect();
    let cone = secondary_cone_dimension(&sub)?;
    let expected_count = split_flacets(m)?.len() + 2;
    Ok(RayReport {
        expected_cell_count: expected_count,
        actual_cell_count: sub.cells.len(),
        cells_match: missing_cells.is_empty() && extra_cells.is_empty(),
        cone_dim: cone.cone_dim,
        missing_cells,
        extra_cells,
    })
}

/// Structured-text export: header `k n num_cells`, one line per cell listing
/// its k-subsets in lexicographic index order, then the dual edges as index
/// pairs, one per line.
pub fn export_subdivision(sub: &Subdivision) -> String {
    let c = codec(sub.n, sub.k);
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", sub.k, sub.n, sub.cells.len());
    for cell in &sub.cells {
        let line: Vec<String> = cell
            .iter()
            .map(|&i| {
                c.subset(i).elems().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            })
            .collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    for (a, b) in &sub.dual_edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::corank_vector;

    fn snowflake() -> Matroid {
        Matroid::from_nonbases(6, 2, [[1, 2], [3, 4], [5, 6]].map(Subset::from_elems)).unwrap()
    }

    fn lift_from_i64(k: usize, n: usize, hs: &[i64]) -> LiftVector {
        LiftVector::new(k, n, hs.iter().map(|&h| Rat::from_integer(h.into())).collect()).unwrap()
    }

    #[test]
    fn trivial_lift_gives_one_cell() {
        let lift = lift_from_i64(2, 4, &[0; 6]);
        let sub = regular_subdivision(2, 4, &lift).unwrap();
        assert_eq!(sub.cells, vec![(0..6).collect::<Vec<_>>()]);
        assert!(sub.dual_edges.is_empty());
        assert!(is_matroid_subdivision(&sub));
    }

    #[test]
    fn five_basis_corank_splits_into_two_pyramids() {
        let m5 = Matroid::from_nonbases(4, 2, [Subset::from_elems([3, 4])]).unwrap();
        let lift = corank_vector(&m5, 2).unwrap();
        let sub = regular_subdivision(2, 4, &lift).unwrap();
        assert_eq!(sub.cells.len(), 2);
        assert!(sub.cells.iter().all(|c| c.len() == 5));
        assert_eq!(sub.dual_edges, vec![(0, 1)]);
        assert!(is_matroid_subdivision(&sub));
        // the matroid's own polytope is one of the cells
        let own: Vec<usize> = m5.bases_bitmap().iter_ones().collect();
        assert!(sub.cells.contains(&own));
    }

    #[test]
    fn snowflake_corank_subdivision_is_the_snowflake_tree() {
        let s = snowflake();
        let lift = corank_vector(&s, 2).unwrap();
        let sub = regular_subdivision(2, 6, &lift).unwrap();
        assert_eq!(sub.cells.len(), 4);
        assert!(is_matroid_subdivision(&sub));
        // all four cells are loop-free, so the tropical linear space is the
        // whole dual tree: three leaves joined at the center cell
        assert_eq!(tropical_linear_space(&sub), vec![0, 1, 2, 3]);
        let center: Vec<usize> = s.bases_bitmap().iter_ones().collect();
        let center_idx = sub.cells.iter().position(|c| *c == center).unwrap();
        assert_eq!(sub.dual_edges.len(), 3);
        assert!(sub.dual_edges.iter().all(|&(a, b)| a == center_idx || b == center_idx));
        let cone = secondary_cone_dimension(&sub).unwrap();
        assert_eq!(cone.cone_dim, 3);
    }

    #[test]
    fn caterpillar_lift_has_four_cells_and_is_not_a_corank_subdivision() {
        let lift = lift_from_i64(2, 6, &[3, 2, 1, 0, 0, 2, 1, 0, 0, 2, 1, 1, 2, 2, 3]);
        let sub = regular_subdivision(2, 6, &lift).unwrap();
        assert_eq!(sub.cells.len(), 4);
        assert!(is_matroid_subdivision(&sub));
        let mut sorted_cells = sub.cells.clone();
        sorted_cells.sort();
        for cell in &sub.cells {
            let mc = cell_to_matroid(2, 6, cell).unwrap();
            let again = regular_subdivision(2, 6, &corank_vector(&mc, 2).unwrap()).unwrap();
            let mut other = again.cells.clone();
            other.sort();
            assert_ne!(other, sorted_cells, "corank subdivision of a cell must differ");
        }
    }

    #[test]
    fn single_split_has_two_matroid_cells_and_cone_dim_one() {
        // lift |x1 + x2 - 1| over the vertices of the (2,6)-hypersimplex
        let c = codec(6, 2);
        let heights: Vec<Rat> = c
            .subsets()
            .iter()
            .map(|s| {
                let hits = s.inter(Subset::from_elems([1, 2])).card() as i64;
                Rat::from_integer((hits - 1).abs().into())
            })
            .collect();
        let lift = LiftVector::new(2, 6, heights).unwrap();
        let sub = regular_subdivision(2, 6, &lift).unwrap();
        assert_eq!(sub.cells.len(), 2);
        assert!(is_matroid_subdivision(&sub));
        assert_eq!(secondary_cone_dimension(&sub).unwrap().cone_dim, 1);
    }

    #[test]
    fn adding_an_affine_function_keeps_the_cells() {
        let s = snowflake();
        let base = corank_vector(&s, 2).unwrap();
        let c = codec(6, 2);
        let coeffs: Vec<i64> = vec![5, -3, 2, 0, 7, -1];
        let shifted: Vec<Rat> = base
            .heights
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let lin: i64 = c.subset(i).elems().map(|e| coeffs[e - 1]).sum();
                h + Rat::from_integer((lin + 11).into())
            })
            .collect();
        let sub_a = regular_subdivision(2, 6, &base).unwrap();
        let sub_b = regular_subdivision(2, 6, &LiftVector::new(2, 6, shifted).unwrap()).unwrap();
        assert_eq!(sub_a.cells, sub_b.cells);
    }

    #[test]
    fn cell_to_matroid_detects_non_matroids() {
        let c = codec(4, 2);
        let bad = vec![
            c.index_of(Subset::from_elems([1, 2])).unwrap(),
            c.index_of(Subset::from_elems([3, 4])).unwrap(),
        ];
        assert!(matches!(cell_to_matroid(2, 4, &bad), Err(Error::NotAMatroid { .. })));
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(cell_to_matroid(2, 4, &all).unwrap(), Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn guard_and_degenerate_checks() {
        let lift = lift_from_i64(2, 4, &[0; 6]);
        assert!(matches!(
            regular_subdivision_with_limit(2, 4, &lift, 5),
            Err(Error::LimitExceeded(_))
        ));
        let l0 = LiftVector::new(3, 3, vec![Rat::zero()]).unwrap();
        assert!(matches!(regular_subdivision(3, 3, &l0), Err(Error::DegenerateParameters)));
    }

    #[test]
    fn ray_check_on_the_two_element_uniform() {
        let report = verify_ray(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.actual_cell_count, 2);
        assert_eq!(report.cone_dim, 1);
    }

    #[test]
    fn export_format_shape() {
        let m5 = Matroid::from_nonbases(4, 2, [Subset::from_elems([3, 4])]).unwrap();
        let sub = regular_subdivision(2, 4, &corank_vector(&m5, 2).unwrap()).unwrap();
        let text = export_subdivision(&sub);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("2 4 2"));
        let first = lines.next().unwrap();
        assert!(first.starts_with("1,2 "));
        assert_eq!(text.lines().last(), Some("0 1"));
    }
}
