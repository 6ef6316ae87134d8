//! Geometry-free split analysis: flacets, split flacets, hypersimplex split
//! hyperplanes, compatibility (combinatorial and exact-LP geometric),
//! split/paving/sparse-paving/nested classification, Johnson-graph stable
//! sets and the Dressian dimension bound formulas.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome, Rel};
use crate::matroid::{Flat, Matroid};
use crate::subsets::{binomial, codec, Subset};

pub type Rat = BigRational;

/// An (S, mu)-hyperplane of the hypersimplex: on the slice sum(x) = d it
/// reads sum_{i in S} x_i = d - mu. The window conditions below are exactly
/// the ones making the hyperplane a split of the hypersimplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitHyperplane {
    pub elements: Subset,
    pub mu: usize,
}

impl SplitHyperplane {
    pub fn new(d: usize, n: usize, elements: Subset, mu: usize) -> Result<SplitHyperplane> {
        let size = elements.card();
        if elements.is_empty() || size >= n {
            return Err(Error::InvalidParams("split support must be a proper nonempty subset".into()));
        }
        if mu == 0 || mu >= d || d.saturating_sub(size) >= mu || mu >= n - size {
            return Err(Error::InvalidParams(format!(
                "mu = {mu} outside the split window for |S| = {size}, d = {d}, n = {n}"
            )));
        }
        Ok(SplitHyperplane { elements, mu })
    }
}

/// Proper flats whose restriction and contraction are both connected.
/// These are precisely the flats defining facets of the matroid polytope.
pub fn flacets(m: &Matroid) -> Result<Vec<Flat>> {
    if m.n() < 2 {
        return Err(Error::InvalidParams("flacets need at least two elements".into()));
    }
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    let full = m.ground_set();
    let mut out = Vec::new();
    for f in m.flats() {
        if f.elements.is_empty() || f.elements == full {
            continue;
        }
        if m.restriction(f.elements)?.is_connected() && m.contraction(f.elements)?.is_connected() {
            out.push(f);
        }
    }
    Ok(out)
}

/// Flacets whose hyperplane is a hypersimplex split: 0 < rank(F) < |F|.
pub fn split_flacets(m: &Matroid) -> Result<Vec<Flat>> {
    Ok(flacets(m)?.into_iter().filter(|f| 0 < f.rank && f.rank < f.elements.card()).collect())
}

/// The (F, d - rank F)-hyperplane attached to a split flacet.
pub fn hyperplane_of_flacet(m: &Matroid, f: &Flat) -> Result<SplitHyperplane> {
    let splits = split_flacets(m)?;
    if !splits.iter().any(|g| g.elements == f.elements) {
        return Err(Error::NotASplitFlacet(f.elements));
    }
    let rank = m.rank_of(f.elements);
    SplitHyperplane::new(m.rank(), m.n(), f.elements, m.rank() - rank)
}

/// Combinatorial split compatibility: |F cap G| + d <= rank F + rank G.
pub fn splits_compatible(d: usize, f: &Flat, g: &Flat) -> bool {
    f.elements.inter(g.elements).card() + d <= f.rank + g.rank
}

/// Exact-LP oracle: the two split hyperplanes are compatible exactly when
/// they do not meet in the relative interior of the hypersimplex. The
/// relative interior is certified by a maximized rational margin eps with
/// eps <= x_i <= 1 - eps; a positive optimum is an interior point.
pub fn splits_compatible_geometric(
    d: usize,
    n: usize,
    h1: &SplitHyperplane,
    h2: &SplitHyperplane,
) -> bool {
    let nv = n + 1; // x_1..x_n and the margin
    let mut lp = LinearProgram::new(nv);
    let ri = |x: i64| Rat::from_integer(x.into());
    for i in 0..n {
        let mut row = vec![Rat::zero(); nv];
        row[i] = Rat::one();
        row[n] = -Rat::one();
        lp.add_constraint(row, Rel::Ge, Rat::zero()); // x_i >= eps
        let mut row = vec![Rat::zero(); nv];
        row[i] = Rat::one();
        row[n] = Rat::one();
        lp.add_constraint(row, Rel::Le, Rat::one()); // x_i <= 1 - eps
    }
    let mut row = vec![Rat::one(); nv];
    row[n] = Rat::zero();
    lp.add_constraint(row, Rel::Eq, ri(d as i64)); // sum x = d
    for h in [h1, h2] {
        let mut row = vec![Rat::zero(); nv];
        for e in h.elements.elems() {
            row[e - 1] = Rat::one();
        }
        lp.add_constraint(row, Rel::Eq, ri((d - h.mu) as i64));
    }
    let mut eps_cap = vec![Rat::zero(); nv];
    eps_cap[n] = Rat::one();
    lp.add_constraint(eps_cap, Rel::Le, Rat::one());
    let mut obj = vec![Rat::zero(); nv];
    obj[n] = Rat::one();
    lp.set_objective(obj);
    match lp.maximize() {
        LpOutcome::Optimal { value, .. } => !value.is_positive(),
        LpOutcome::Infeasible => true,
        LpOutcome::Unbounded => unreachable!("margin is capped"),
    }
}

fn is_split_connected(m: &Matroid) -> bool {
    split_flacets(m)
        .expect("connected input")
        .iter()
        .all(|f| {
            m.restriction(f.elements).is_ok_and(|r| r.is_uniform())
                && m.contraction(f.elements).is_ok_and(|c| c.is_uniform())
        })
}

/// Split matroid test. Connected case: every split flacet has uniform
/// restriction and uniform contraction. Disconnected case: at most one
/// component is a non-uniform split matroid, all others are uniform.
pub fn is_split(m: &Matroid) -> bool {
    if m.n() < 2 {
        return true;
    }
    let comps = m.connected_components();
    if comps.len() == 1 {
        return is_split_connected(m);
    }
    let mut non_uniform = 0;
    for comp in comps {
        let part = m.restriction(comp).expect("components are nonempty");
        if !part.is_uniform() {
            non_uniform += 1;
            if non_uniform > 1 || !is_split(&part) {
                return false;
            }
        }
    }
    true
}

/// No circuit has fewer than d elements, i.e. every (d-1)-subset is independent.
pub fn is_paving(m: &Matroid) -> bool {
    let d = m.rank();
    if d == 0 {
        return true;
    }
    codec(m.n(), d - 1).subsets().iter().all(|&s| m.rank_of(s) == d - 1)
}

pub fn is_sparse_paving(m: &Matroid) -> bool {
    is_paving(m) && is_paving(&m.dual())
}

/// The cyclic flats form a chain under inclusion.
pub fn is_nested(m: &Matroid) -> bool {
    let cf = m.cyclic_flats();
    // sorted by cardinality; a chain must link consecutive members
    cf.windows(2).all(|w| w[0].elements.is_subset_of(w[1].elements))
}

/// Matroid whose non-bases are exactly the given stable family of d-subsets.
/// Rejects families containing two subsets one exchange apart.
pub fn stable_set_to_matroid(d: usize, n: usize, family: &[Subset]) -> Result<Matroid> {
    for s in family {
        if s.card() != d || !s.is_subset_of(Subset::full(n)) {
            return Err(Error::CardinalityMismatch(*s, d));
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if a.sym_diff(b).card() == 2 {
                return Err(Error::NotStable(a, b));
            }
        }
    }
    Matroid::from_nonbases(n, d, family.iter().copied())
}

/// Non-bases of a connected sparse paving matroid, i.e. its vertex-split centers.
pub fn matroid_to_stable_set(m: &Matroid) -> Result<Vec<Subset>> {
    if !m.is_connected() || !is_sparse_paving(m) {
        return Err(Error::NotSparsePaving);
    }
    Ok(m.nonbases().collect())
}

/// Largest color class of the coloring S -> sum of elements mod n on the
/// d-subsets; ties go to the smallest residue. The class is a stable set of
/// size at least C(n,d)/n.
pub fn knuth_stable_set(d: usize, n: usize) -> Result<Vec<Subset>> {
    if d == 0 || d >= n {
        return Err(Error::InvalidParams("need 0 < d < n".into()));
    }
    let c = codec(n, d);
    let mut classes: Vec<Vec<Subset>> = vec![Vec::new(); n];
    for &s in c.subsets() {
        let color = s.elems().sum::<usize>() % n;
        classes[color].push(s);
    }
    let best = classes.iter().enumerate().max_by_key(|(i, v)| (v.len(), n - i)).expect("n > 0").0;
    Ok(classes.swap_remove(best))
}

/// Lower and upper bounds for the dimension of the Dressian of (d,n):
/// C(n,d)/n - 1 and C(n-2,d-1) - 1.
pub fn dressian_dim_bounds(d: usize, n: usize) -> Result<(Rat, u64)> {
    if d == 0 || d >= n {
        return Err(Error::InvalidParams("need 0 < d < n".into()));
    }
    let lower = Rat::new(binomial(n, d).into(), (n as u64).into()) - Rat::one();
    let upper = binomial(n - 2, d - 1) - 1;
    Ok((lower, upper))
}

/// Per-matroid classification flags; disconnected input gets per-component
/// sub-reports and empty flacet lists at the top level.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub rank: usize,
    pub num_bases: usize,
    pub connected: bool,
    pub flacets: Vec<Flat>,
    pub split_flacets: Vec<Flat>,
    pub is_split: bool,
    pub is_paving: bool,
    pub is_sparse_paving: bool,
    pub is_nested: bool,
    pub component_summaries: Vec<ComponentSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub elements: Subset,
    pub report: ClassificationReport,
}

pub fn classify(m: &Matroid) -> ClassificationReport {
    let connected = m.is_connected();
    let (flacets, splits) = if connected && m.n() >= 2 {
        let fl = flacets(m).expect("connected");
        let sp = fl.iter().copied().filter(|f| 0 < f.rank && f.rank < f.elements.card()).collect();
        (fl, sp)
    } else {
        (Vec::new(), Vec::new())
    };
    let component_summaries = if connected {
        Vec::new()
    } else {
        m.connected_components()
            .into_iter()
            .map(|comp| {
                let part = m.restriction(comp).expect("components are nonempty");
                ComponentSummary { elements: comp, report: classify(&part) }
            })
            .collect()
    };
    ClassificationReport {
        n: m.n(),
        rank: m.rank(),
        num_bases: m.num_bases(),
        connected,
        flacets,
        split_flacets: splits,
        is_split: is_split(m),
        is_paving: is_paving(m),
        is_sparse_paving: is_sparse_paving(m),
        is_nested: is_nested(m),
        component_summaries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snowflake() -> Matroid {
        Matroid::from_nonbases(
            6,
            2,
            [[1, 2], [3, 4], [5, 6]].map(Subset::from_elems),
        )
        .unwrap()
    }

    /// (3,6)-matroid whose two split flacets {3,4} and {5,6} are incompatible.
    fn two_flacet_clash() -> Matroid {
        Matroid::from_nonbases(
            6,
            3,
            [[1, 3, 4], [2, 3, 4], [3, 4, 5], [3, 4, 6], [1, 5, 6], [2, 5, 6], [3, 5, 6], [4, 5, 6]]
                .map(Subset::from_elems),
        )
        .unwrap()
    }

    #[test]
    fn flacets_of_uniform_are_the_singletons() {
        let u = Matroid::uniform(2, 4).unwrap();
        let fl = flacets(&u).unwrap();
        assert_eq!(fl.len(), 4);
        assert!(fl.iter().all(|f| f.elements.card() == 1 && f.rank == 1));
        assert!(split_flacets(&u).unwrap().is_empty());
    }

    #[test]
    fn snowflake_flacets_are_the_three_pairs() {
        let fl = flacets(&snowflake()).unwrap();
        let expect: Vec<Subset> = [[1, 2], [3, 4], [5, 6]].map(Subset::from_elems).to_vec();
        assert_eq!(fl.iter().map(|f| f.elements).collect::<Vec<_>>(), expect);
        // together with the six nonnegativity facets the polytope has 9 facets
        let sp = split_flacets(&snowflake()).unwrap();
        assert_eq!(sp.len(), 3);
    }

    #[test]
    fn two_flacet_clash_split_flacets() {
        // the singletons {1} and {2} define hypersimplex-facet facets; the
        // split flacets are exactly the two incompatible pairs
        let fl = flacets(&two_flacet_clash()).unwrap();
        assert_eq!(
            fl.iter().map(|f| f.elements).collect::<Vec<_>>(),
            vec![
                Subset::singleton(1),
                Subset::singleton(2),
                Subset::from_elems([3, 4]),
                Subset::from_elems([5, 6])
            ]
        );
        let sp = split_flacets(&two_flacet_clash()).unwrap();
        assert_eq!(
            sp.iter().map(|f| f.elements).collect::<Vec<_>>(),
            vec![Subset::from_elems([3, 4]), Subset::from_elems([5, 6])]
        );
    }

    #[test]
    fn hyperplane_of_snowflake_pair() {
        let m = snowflake();
        let f = Flat { elements: Subset::from_elems([1, 2]), rank: 1 };
        let h = hyperplane_of_flacet(&m, &f).unwrap();
        assert_eq!((h.elements, h.mu), (Subset::from_elems([1, 2]), 1));
        let bad = Flat { elements: Subset::from_elems([1, 3]), rank: 2 };
        assert!(matches!(hyperplane_of_flacet(&m, &bad), Err(Error::NotASplitFlacet(_))));
    }

    #[test]
    fn clash_hyperplane_window() {
        let m = two_flacet_clash();
        let f = Flat { elements: Subset::from_elems([3, 4]), rank: 1 };
        let h = hyperplane_of_flacet(&m, &f).unwrap();
        assert_eq!(h.mu, 2);
    }

    #[test]
    fn compatibility_matches_the_examples() {
        let f = Flat { elements: Subset::from_elems([1, 2]), rank: 1 };
        let g = Flat { elements: Subset::from_elems([3, 4]), rank: 1 };
        assert!(splits_compatible(2, &f, &g));
        assert!(!splits_compatible(3, &f, &g));
        let a = Flat { elements: Subset::from_elems([3, 4]), rank: 1 };
        let b = Flat { elements: Subset::from_elems([5, 6]), rank: 1 };
        assert!(!splits_compatible(3, &a, &b));
    }

    #[test]
    fn geometric_oracle_on_the_snowflake_pairs() {
        let h1 = SplitHyperplane::new(2, 6, Subset::from_elems([1, 2]), 1).unwrap();
        let h2 = SplitHyperplane::new(2, 6, Subset::from_elems([3, 4]), 1).unwrap();
        assert!(splits_compatible_geometric(2, 6, &h1, &h2));
        // same supports inside the larger hypersimplex intersect interiorly
        let g1 = SplitHyperplane::new(3, 7, Subset::from_elems([1, 2]), 2).unwrap();
        let g2 = SplitHyperplane::new(3, 7, Subset::from_elems([3, 4]), 2).unwrap();
        assert!(!splits_compatible_geometric(3, 7, &g1, &g2));
    }

    #[test]
    fn split_classification_examples() {
        assert!(is_split(&snowflake()));
        let coloop = Matroid::uniform(1, 1).unwrap();
        assert!(is_split(&snowflake().direct_sum(&coloop).unwrap()));
        let m5 = Matroid::from_nonbases(4, 2, [Subset::from_elems([3, 4])]).unwrap();
        assert!(!is_split(&m5.direct_sum(&m5).unwrap()));
        assert!(!is_split(&two_flacet_clash()));
    }

    #[test]
    fn paving_and_sparse_paving() {
        let s = snowflake();
        assert!(is_paving(&s));
        // the non-bases form a stable family, so the dual is paving as well
        assert!(is_sparse_paving(&s));
        assert!(is_paving(&Matroid::uniform(3, 6).unwrap()));
        assert!(is_sparse_paving(&Matroid::uniform(3, 6).unwrap()));
        // a rank-2 matroid with a 3-element rank-1 flat is paving but not sparse
        let m = Matroid::from_nonbases(
            5,
            2,
            [[1, 2], [1, 3], [2, 3]].map(Subset::from_elems),
        )
        .unwrap();
        assert!(is_paving(&m));
        assert!(!is_sparse_paving(&m));
    }

    #[test]
    fn nested_examples() {
        assert!(is_nested(&Matroid::uniform(2, 5).unwrap()));
        assert!(!is_nested(&snowflake()));
    }

    #[test]
    fn stable_sets_round_trip() {
        let family = [[1, 2], [3, 4], [5, 6]].map(Subset::from_elems).to_vec();
        let m = stable_set_to_matroid(2, 6, &family).unwrap();
        assert_eq!(m, snowflake());
        assert_eq!(matroid_to_stable_set(&m).unwrap(), family);
        assert_eq!(stable_set_to_matroid(3, 6, &[]).unwrap(), Matroid::uniform(3, 6).unwrap());
        let clash = [[1, 2, 3], [1, 2, 4]].map(Subset::from_elems);
        assert!(matches!(stable_set_to_matroid(3, 6, &clash), Err(Error::NotStable(_, _))));
        let ok = [[1, 2, 3], [1, 4, 5]].map(Subset::from_elems);
        assert_eq!(stable_set_to_matroid(3, 6, &ok).unwrap().num_bases(), 18);
    }

    #[test]
    fn knuth_examples() {
        let k = knuth_stable_set(2, 4).unwrap();
        assert!(k.len() >= 2);
        assert_eq!(k, vec![Subset::from_elems([1, 4]), Subset::from_elems([2, 3])]);
        let k38 = knuth_stable_set(3, 8).unwrap();
        assert!(k38.len() >= 7);
        for (i, &a) in k38.iter().enumerate() {
            for &b in &k38[i + 1..] {
                assert!(a.sym_diff(b).card() >= 4, "{a} and {b} too close");
            }
        }
    }

    #[test]
    fn dressian_bounds_examples() {
        let (lo, hi) = dressian_dim_bounds(3, 8).unwrap();
        assert_eq!((lo, hi), (Rat::from_integer(6.into()), 14));
        let (lo, hi) = dressian_dim_bounds(2, 4).unwrap();
        assert_eq!((lo, hi), (Rat::new(1.into(), 2.into()), 1));
        let (lo, hi) = dressian_dim_bounds(3, 6).unwrap();
        assert_eq!((lo, hi), (Rat::new(7.into(), 3.into()), 5));
    }

    #[test]
    fn classify_disconnected_has_component_reports() {
        let m = snowflake().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        let rep = classify(&m);
        assert!(!rep.connected);
        assert!(rep.is_split);
        assert_eq!(rep.component_summaries.len(), 2);
        assert!(rep.component_summaries[0].report.connected);
    }
}
