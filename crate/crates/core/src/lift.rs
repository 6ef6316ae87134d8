//! Corank vectors and the lift constructions: the series-free lift, the
//! parallel-cofree lift and the nested matroids attached to split flacets.
//!
//! All three lifts live on the ground set `{1..n, f, s}` with the two new
//! elements always labeled f = n+1 and s = n+2, so height identities between
//! their corank vectors hold as literal vector identities.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{Flat, Matroid};
use crate::split::{is_split, split_flacets};
use crate::subsets::{codec, Subset};

pub type Rat = BigRational;

/// Rational lifting function on the vertices of a hypersimplex, one height
/// per k-subset in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftVector {
    pub k: usize,
    pub n: usize,
    pub heights: Vec<Rat>,
}

impl Serialize for LiftVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LiftVector", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("n", &self.n)?;
        let heights: Vec<String> = self.heights.iter().map(|h| h.to_string()).collect();
        st.serialize_field("heights", &heights)?;
        st.end()
    }
}

impl LiftVector {
    pub fn new(k: usize, n: usize, heights: Vec<Rat>) -> Result<LiftVector> {
        let want = crate::subsets::binomial(n, k) as usize;
        if heights.len() != want {
            return Err(Error::InvalidParams(format!(
                "lift needs {want} heights for (k,n) = ({k},{n}), got {}",
                heights.len()
            )));
        }
        Ok(LiftVector { k, n, heights })
    }
}

/// Labels of the two lift elements over an n-element ground set.
pub fn lift_elements(n: usize) -> (usize, usize) {
    (n + 1, n + 2)
}

/// The k-corank vector: S -> d - rank(S) over all k-subsets.
pub fn corank_vector(m: &Matroid, k: usize) -> Result<LiftVector> {
    if k > m.n() {
        return Err(Error::InvalidParams("corank cardinality exceeds the ground set".into()));
    }
    let c = codec(m.n(), k);
    let heights = c
        .subsets()
        .iter()
        .map(|&s| Rat::from_integer(((m.rank() - m.rank_of(s)) as i64).into()))
        .collect();
    Ok(LiftVector { k, n: m.n(), heights })
}

/// Series-free lift: free extension by f followed by the series extension
/// at f by s. A (d+1)-set B is a basis exactly when fs is contained in B
/// and B - fs is independent of size d-1, or exactly one of f, s lies in B
/// and B - fs is a basis of M.
pub fn series_free_lift(m: &Matroid) -> Result<Matroid> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = m.n();
    let d = m.rank();
    let (f, s) = lift_elements(n);
    let fs = Subset::from_elems([f, s]);
    let c = codec(n + 2, d + 1);
    let mut bitmap = crate::subsets::Bitmap::zeros(c.size());
    for (i, &b) in c.subsets().iter().enumerate() {
        let core = b.minus(fs);
        let hits = b.inter(fs).card();
        let is_basis = match hits {
            2 => m.rank_of(core) == d - 1,
            1 => m.rank_of(core) == d,
            _ => false,
        };
        if is_basis {
            bitmap.set(i, true);
        }
    }
    Matroid::from_bitmap_checked(n + 2, d + 1, bitmap)
}

/// Rank a subset of the lifted ground set would have in the series-free
/// lift: min(rank(S - fs) + |fs cap S|, d + 1). Used for cross-validation.
pub fn series_free_rank(m: &Matroid, s: Subset) -> usize {
    let fs = Subset::from_elems([m.n() + 1, m.n() + 2]);
    (m.rank_of(s.minus(fs)) + s.inter(fs).card()).min(m.rank() + 1)
}

/// Parallel-cofree lift, computed as the dual of the series-free lift of
/// the dual; f and s keep the labels n+1 and n+2.
pub fn parallel_cofree_lift(m: &Matroid) -> Result<Matroid> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(series_free_lift(&m.dual())?.dual())
}

/// Rank formula for the parallel-cofree lift: min(rank(S - fs) + 1, |S|).
pub fn parallel_cofree_rank(m: &Matroid, s: Subset) -> usize {
    let fs = Subset::from_elems([m.n() + 1, m.n() + 2]);
    (m.rank_of(s.minus(fs)) + 1).min(s.card())
}

/// Rank formula of the nested matroid attached to a split flacet:
/// min{d+1, |S|, |S cap F| + d + 1 - rank F, |S cap (F+fs)| + d - rank F}.
pub fn nested_matroid_rank(d: usize, n: usize, f: &Flat, s: Subset) -> usize {
    let fs = Subset::from_elems([n + 1, n + 2]);
    let in_f = s.inter(f.elements).card();
    let in_ffs = s.inter(f.elements.union(fs)).card();
    (d + 1)
        .min(s.card())
        .min(in_f + d + 1 - f.rank)
        .min(in_ffs + d - f.rank)
}

/// The nested matroid N_F of a split flacet F: the (d+1, n+2)-matroid whose
/// cyclic flats are the chain {}, [n]-F, [n]-F+fs, [n]+fs.
pub fn nested_matroid_nf(m: &Matroid, f: &Flat) -> Result<Matroid> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_split(m) {
        return Err(Error::NotSplit);
    }
    let splits = split_flacets(m)?;
    if !splits.iter().any(|g| g.elements == f.elements && g.rank == f.rank) {
        return Err(Error::NotASplitFlacet(f.elements));
    }
    let n = m.n();
    let d = m.rank();
    let c = codec(n + 2, d + 1);
    let mut bitmap = crate::subsets::Bitmap::zeros(c.size());
    for (i, &b) in c.subsets().iter().enumerate() {
        if nested_matroid_rank(d, n, f, b) == d + 1 {
            bitmap.set(i, true);
        }
    }
    Matroid::from_bitmap_checked(n + 2, d + 1, bitmap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CorankRelation {
    Equality,
    Strict,
}

/// Compares the corank of a (d+1)-subset in the series-free lift, shifted
/// by the flacet data, against its corank in the nested matroid:
/// d+1 - rank_lift(S) + rank F - |S cap F|  >=  d+1 - rank_nf(S),
/// with equality on every basis of the nested matroid.
pub struct CorankInequality {
    lifted: Matroid,
    nested: Matroid,
    flacet: Flat,
    d: usize,
}

impl CorankInequality {
    pub fn new(m: &Matroid, f: &Flat) -> Result<CorankInequality> {
        Ok(CorankInequality {
            lifted: series_free_lift(m)?,
            nested: nested_matroid_nf(m, f)?,
            flacet: *f,
            d: m.rank(),
        })
    }

    pub fn lifted(&self) -> &Matroid {
        &self.lifted
    }

    pub fn nested(&self) -> &Matroid {
        &self.nested
    }

    pub fn check(&self, s: Subset) -> Result<CorankRelation> {
        if s.card() != self.d + 1 {
            return Err(Error::CardinalityMismatch(s, self.d + 1));
        }
        let lhs = (self.d + 1) as i64 - self.lifted.rank_of(s) as i64 + self.flacet.rank as i64
            - s.inter(self.flacet.elements).card() as i64;
        let rhs = (self.d + 1) as i64 - self.nested.rank_of(s) as i64;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Equal => Ok(CorankRelation::Equality),
            std::cmp::Ordering::Greater => Ok(CorankRelation::Strict),
            std::cmp::Ordering::Less => Err(Error::CertificateFailure(format!(
                "corank inequality violated at {s}: {lhs} < {rhs}"
            ))),
        }
    }
}

/// One-shot variant of [`CorankInequality::check`].
pub fn check_corank_inequality(m: &Matroid, f: &Flat, s: Subset) -> Result<CorankRelation> {
    CorankInequality::new(m, f)?.check(s)
}

/// The maximal cells the corank subdivision of the series-free lift must
/// have: the lift, the parallel-cofree lift, and one nested matroid per
/// split flacet.
pub fn predicted_ray_cells(m: &Matroid) -> Result<Vec<Matroid>> {
    if !m.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_split(m) {
        return Err(Error::NotSplit);
    }
    let mut cells = vec![series_free_lift(m)?, parallel_cofree_lift(m)?];
    for f in split_flacets(m)? {
        cells.push(nested_matroid_nf(m, &f)?);
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn snowflake() -> Matroid {
        Matroid::from_nonbases(6, 2, [[1, 2], [3, 4], [5, 6]].map(Subset::from_elems)).unwrap()
    }

    fn heights_i64(v: &LiftVector) -> Vec<i64> {
        use num_traits::ToPrimitive;
        v.heights.iter().map(|h| h.to_i64().unwrap()).collect()
    }

    #[test]
    fn corank_vectors_of_the_five_basis_matroid() {
        let m5 = Matroid::from_nonbases(4, 2, [Subset::from_elems([3, 4])]).unwrap();
        assert_eq!(heights_i64(&corank_vector(&m5, 2).unwrap()), vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(heights_i64(&corank_vector(&m5, 3).unwrap()), vec![0, 0, 0, 0]);
        assert_eq!(heights_i64(&corank_vector(&m5, 1).unwrap()), vec![1, 1, 1, 1]);
    }

    #[test]
    fn corank_of_uniform_is_zero() {
        let u = Matroid::uniform(3, 6).unwrap();
        assert!(corank_vector(&u, 3).unwrap().heights.iter().all(|h| h.is_zero()));
    }

    #[test]
    fn series_free_lift_of_u12() {
        let lam = series_free_lift(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert_eq!((lam.rank(), lam.n(), lam.num_bases()), (2, 4, 5));
        assert!(!lam.is_basis(Subset::from_elems([1, 2])));
    }

    #[test]
    fn rank_formula_matches_bases_exhaustively() {
        for m in [Matroid::uniform(1, 2).unwrap(), Matroid::uniform(2, 4).unwrap(), snowflake()] {
            let lam = series_free_lift(&m).unwrap();
            for mask in 0..(1u32 << lam.n()) {
                let s = Subset(mask);
                assert_eq!(lam.rank_of(s), series_free_rank(&m, s), "at {s}");
            }
        }
    }

    #[test]
    fn double_lift_is_the_nested_non_split_matroid() {
        let ll = series_free_lift(&series_free_lift(&Matroid::uniform(1, 2).unwrap()).unwrap()).unwrap();
        assert_eq!((ll.rank(), ll.n(), ll.num_bases()), (3, 6, 14));
        let nonbases: Vec<Subset> = ll.nonbases().collect();
        let expect: Vec<Subset> =
            [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6], [1, 3, 4], [2, 3, 4]]
                .map(Subset::from_elems)
                .to_vec();
        assert_eq!(nonbases.len(), 6);
        for e in expect {
            assert!(nonbases.contains(&e), "{e} should be dependent");
        }
        assert!(crate::split::is_nested(&ll));
        assert!(!is_split(&ll));
    }

    #[test]
    fn split_flacets_of_lifted_snowflake_gain_the_ground_set() {
        let lam = series_free_lift(&snowflake()).unwrap();
        let sf: Vec<Subset> = split_flacets(&lam).unwrap().iter().map(|f| f.elements).collect();
        assert_eq!(
            sf,
            vec![
                Subset::from_elems([1, 2]),
                Subset::from_elems([3, 4]),
                Subset::from_elems([5, 6]),
                Subset::full(6),
            ]
        );
    }

    #[test]
    fn parallel_cofree_rank_formula_exhaustively() {
        let m = snowflake();
        let pc = parallel_cofree_lift(&m).unwrap();
        for mask in 0..(1u32 << pc.n()) {
            let s = Subset(mask);
            assert_eq!(pc.rank_of(s), parallel_cofree_rank(&m, s), "at {s}");
        }
    }

    #[test]
    fn corank_height_relation_between_the_lifts() {
        // corank_pc(S) + 1 = corank_sf(S) + |S cap fs| at every vertex
        for m in [Matroid::uniform(1, 2).unwrap(), snowflake()] {
            let lam = series_free_lift(&m).unwrap();
            let pc = parallel_cofree_lift(&m).unwrap();
            let fs = Subset::from_elems([m.n() + 1, m.n() + 2]);
            let d1 = m.rank() + 1;
            for &s in codec(m.n() + 2, d1).subsets() {
                let left = d1 - pc.rank_of(s) + 1;
                let right = d1 - lam.rank_of(s) + s.inter(fs).card();
                assert_eq!(left, right, "at {s}");
            }
        }
    }

    #[test]
    fn shared_bases_of_the_two_lifts_form_the_coloop_pair_sum() {
        let m = snowflake();
        let lam = series_free_lift(&m).unwrap();
        let pc = parallel_cofree_lift(&m).unwrap();
        let sum = m.direct_sum(&Matroid::uniform(1, 2).unwrap()).unwrap();
        let shared: Vec<Subset> = lam.bases().filter(|&b| pc.is_basis(b)).collect();
        let expect: Vec<Subset> = sum.bases().collect();
        assert_eq!(shared, expect);
    }

    #[test]
    fn nested_matroid_of_the_first_snowflake_flacet() {
        let m = snowflake();
        let f = Flat { elements: Subset::from_elems([1, 2]), rank: 1 };
        let nf = nested_matroid_nf(&m, &f).unwrap();
        assert_eq!((nf.rank(), nf.n()), (3, 8));
        let chain: Vec<(Subset, usize)> =
            nf.cyclic_flats().iter().map(|fl| (fl.elements, fl.rank)).collect();
        assert_eq!(
            chain,
            vec![
                (Subset::EMPTY, 0),
                (Subset::from_elems([3, 4, 5, 6]), 1),
                (Subset::from_elems([3, 4, 5, 6, 7, 8]), 2),
                (Subset::full(8), 3),
            ]
        );
        assert!(crate::split::is_nested(&nf));
        assert!(!is_split(&nf));
        let sf: Vec<Subset> = split_flacets(&nf).unwrap().iter().map(|x| x.elements).collect();
        assert_eq!(sf, vec![Subset::from_elems([3, 4, 5, 6]), Subset::from_elems([3, 4, 5, 6, 7, 8])]);
    }

    #[test]
    fn nested_rank_agrees_with_chain_formula_over_computed_cyclic_flats() {
        let m = snowflake();
        let f = Flat { elements: Subset::from_elems([1, 2]), rank: 1 };
        let nf = nested_matroid_nf(&m, &f).unwrap();
        let chain = nf.cyclic_flats();
        for &s in codec(8, 3).subsets() {
            let via_chain = chain
                .iter()
                .map(|g| g.rank + s.minus(g.elements).card())
                .min()
                .unwrap();
            assert_eq!(nested_matroid_rank(2, 6, &f, s), via_chain, "at {s}");
            assert_eq!(nf.rank_of(s), via_chain);
        }
    }

    #[test]
    fn corank_inequality_examples() {
        let m = snowflake();
        let f = Flat { elements: Subset::from_elems([1, 2]), rank: 1 };
        let ineq = CorankInequality::new(&m, &f).unwrap();
        for &s in codec(8, 3).subsets() {
            let rel = ineq.check(s).unwrap();
            if ineq.nested().is_basis(s) {
                assert_eq!(rel, CorankRelation::Equality, "basis {s}");
            }
        }
    }

    #[test]
    fn predicted_cells_counts() {
        assert_eq!(predicted_ray_cells(&snowflake()).unwrap().len(), 5);
        assert_eq!(predicted_ray_cells(&Matroid::uniform(1, 2).unwrap()).unwrap().len(), 2);
        for c in predicted_ray_cells(&snowflake()).unwrap() {
            assert!(c.is_connected());
        }
    }
}
