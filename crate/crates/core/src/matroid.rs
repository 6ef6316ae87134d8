//! Matroid kernel: explicit-basis matroids over ground sets `{1..n}` with
//! the standard operations every other module consumes.
//!
//! Bases are stored as a membership bitmap over the lexicographic subset
//! codec, which keeps duality, canonicalization and census streaming cheap.
//! Matroid values are immutable after validation; the memoized rank table
//! is filled lazily behind a `OnceLock`, so sharing across threads is safe.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subsets::{codec, for_each_permutation, Bitmap, Subset, SubsetCodec, MAX_GROUND_SET};

/// Default ground-set bound for exhaustive isomorphism search.
pub const DEFAULT_ISO_LIMIT: usize = 9;

/// Ground sets up to this size get a memoized rank table over all 2^n subsets.
const RANK_MEMO_MAX_N: usize = 13;

/// A flat together with its rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Flat {
    pub elements: Subset,
    pub rank: usize,
}

impl fmt::Debug for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:r{}", self.elements, self.rank)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elements)
    }
}

pub struct Matroid {
    n: usize,
    d: usize,
    codec: Arc<SubsetCodec>,
    bases: Bitmap,
    rank_table: OnceLock<Option<Vec<u8>>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        let rank_table = OnceLock::new();
        if let Some(t) = self.rank_table.get() {
            let _ = rank_table.set(t.clone());
        }
        Matroid { n: self.n, d: self.d, codec: self.codec.clone(), bases: self.bases.clone(), rank_table }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::hash::Hash for Matroid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.d.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(d={}, n={}, {} bases)", self.d, self.n, self.num_bases())
    }
}

impl Matroid {
    // ----- construction -----

    pub fn from_bases<I>(n: usize, d: usize, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = Subset>,
    {
        check_params(n, d)?;
        let c = codec(n, d);
        let mut bitmap = Bitmap::zeros(c.size());
        let full = Subset::full(n);
        for b in bases {
            if !b.is_subset_of(full) || b.card() != d {
                return Err(Error::CardinalityMismatch(b, d));
            }
            let idx = c.index_of(b).expect("subset within codec");
            bitmap.set(idx, true);
        }
        Matroid::from_bitmap_checked(n, d, bitmap)
    }

    /// All d-subsets except the listed non-bases.
    pub fn from_nonbases<I>(n: usize, d: usize, nonbases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = Subset>,
    {
        check_params(n, d)?;
        let c = codec(n, d);
        let mut bitmap = Bitmap::ones(c.size());
        let full = Subset::full(n);
        for b in nonbases {
            if !b.is_subset_of(full) || b.card() != d {
                return Err(Error::CardinalityMismatch(b, d));
            }
            bitmap.set(c.index_of(b).expect("subset within codec"), false);
        }
        Matroid::from_bitmap_checked(n, d, bitmap)
    }

    pub fn uniform(d: usize, n: usize) -> Result<Matroid> {
        check_params(n, d)?;
        let c = codec(n, d);
        Ok(Matroid::from_bitmap_unchecked(n, d, Bitmap::ones(c.size())))
    }

    /// Validates the exchange axiom and wraps the bitmap.
    pub fn from_bitmap_checked(n: usize, d: usize, bases: Bitmap) -> Result<Matroid> {
        check_params(n, d)?;
        let c = codec(n, d);
        assert_eq!(bases.len(), c.size(), "bitmap length must match the codec");
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        check_exchange(&c, &bases)?;
        Ok(Matroid::from_bitmap_unchecked(n, d, bases))
    }

    /// Caller promises the bitmap already satisfies the exchange axiom.
    pub(crate) fn from_bitmap_unchecked(n: usize, d: usize, bases: Bitmap) -> Matroid {
        Matroid { n, d, codec: codec(n, d), bases, rank_table: OnceLock::new() }
    }

    // ----- accessors -----

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn codec(&self) -> &Arc<SubsetCodec> {
        &self.codec
    }

    pub fn bases_bitmap(&self) -> &Bitmap {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.count_ones()
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        b.card() == self.d && self.codec.index_of(b).is_some_and(|i| self.bases.get(i))
    }

    pub fn bases(&self) -> impl Iterator<Item = Subset> + '_ {
        self.bases.iter_ones().map(|i| self.codec.subset(i))
    }

    pub fn nonbases(&self) -> impl Iterator<Item = Subset> + '_ {
        (0..self.codec.size()).filter(|&i| !self.bases.get(i)).map(|i| self.codec.subset(i))
    }

    pub fn is_uniform(&self) -> bool {
        self.num_bases() == self.codec.size()
    }

    /// Number of bases containing the element.
    pub fn degree(&self, e: usize) -> usize {
        self.bases().filter(|b| b.contains(e)).count()
    }

    // ----- rank machinery -----

    /// Rank of a subset: the maximal intersection with a basis.
    pub fn rank_of(&self, s: Subset) -> usize {
        debug_assert!(s.is_subset_of(self.ground_set()));
        let table = self.rank_table.get_or_init(|| {
            if self.n > RANK_MEMO_MAX_N {
                return None;
            }
            let mut t = vec![0u8; 1usize << self.n];
            for b in self.bases.iter_ones() {
                let bm = self.codec.subset(b).0;
                for (m, slot) in t.iter_mut().enumerate() {
                    let inter = (m as u32 & bm).count_ones() as u8;
                    if inter > *slot {
                        *slot = inter;
                    }
                }
            }
            Some(t)
        });
        match table {
            Some(t) => t[s.0 as usize] as usize,
            None => self.rank_uncached(s),
        }
    }

    fn rank_uncached(&self, s: Subset) -> usize {
        self.bases.iter_ones().map(|i| self.codec.subset(i).inter(s).card()).max().unwrap_or(0)
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == s.card()
    }

    /// Smallest flat containing `s`.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        let mut out = s;
        for e in s.complement(self.n).elems() {
            if self.rank_of(s.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    /// All flats, sorted by cardinality then mask. O(2^n) scan.
    pub fn flats(&self) -> Vec<Flat> {
        let mut out = Vec::new();
        for mask in 0..(1u32 << self.n) {
            let s = Subset(mask);
            if self.is_flat(s) {
                out.push(Flat { elements: s, rank: self.rank_of(s) });
            }
        }
        out.sort_by_key(|f| (f.elements.card(), f.elements.0));
        out
    }

    /// Inclusion-minimal dependent sets, sorted by cardinality then mask.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for k in 1..=(self.d + 1).min(self.n) {
            let ck = codec(self.n, k);
            for &s in ck.subsets() {
                if self.rank_of(s) == k - 1 && s.elems().all(|e| self.rank_of(s.without(e)) == k - 1) {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Flats whose restriction has no coloops, i.e. unions of circuits.
    pub fn cyclic_flats(&self) -> Vec<Flat> {
        self.flats()
            .into_iter()
            .filter(|f| {
                let r = f.rank;
                f.elements.elems().all(|e| self.rank_of(f.elements.without(e)) == r)
            })
            .collect()
    }

    // ----- duality, minors, sums -----

    pub fn dual(&self) -> Matroid {
        let dd = self.n - self.d;
        let dc = codec(self.n, dd);
        let mut bitmap = Bitmap::zeros(dc.size());
        for i in self.bases.iter_ones() {
            let comp = self.codec.subset(i).complement(self.n);
            bitmap.set(dc.index_of(comp).expect("complement within codec"), true);
        }
        Matroid::from_bitmap_unchecked(self.n, dd, bitmap)
    }

    /// Restriction to `f`, relabeled onto `{1..|f|}` preserving element order.
    pub fn restriction(&self, f: Subset) -> Result<Matroid> {
        if f.is_empty() {
            return Err(Error::InvalidParams("restriction to the empty set".into()));
        }
        debug_assert!(f.is_subset_of(self.ground_set()));
        let r = self.rank_of(f);
        let map = compact_map(self.n, f);
        let mut seen = Vec::new();
        for b in self.bases() {
            let inter = b.inter(f);
            if inter.card() == r {
                seen.push(inter.relabel(&map));
            }
        }
        seen.sort_unstable();
        seen.dedup();
        Matroid::from_bases(f.card(), r, seen)
    }

    /// Contraction of `f`, relabeled onto `{1..n-|f|}` preserving element order.
    pub fn contraction(&self, f: Subset) -> Result<Matroid> {
        let rest = f.complement(self.n);
        if rest.is_empty() {
            return Err(Error::InvalidParams("contraction of the full ground set".into()));
        }
        debug_assert!(f.is_subset_of(self.ground_set()));
        let r = self.rank_of(f);
        let map = compact_map(self.n, rest);
        let mut seen = Vec::new();
        for b in self.bases() {
            if b.inter(f).card() == r {
                seen.push(b.minus(f).relabel(&map));
            }
        }
        seen.sort_unstable();
        seen.dedup();
        Matroid::from_bases(rest.card(), self.d - r, seen)
    }

    /// Single-element deletion, keeping the rank bookkeeping of `restriction`.
    pub fn delete_element(&self, e: usize) -> Result<Matroid> {
        self.restriction(self.ground_set().without(e))
    }

    pub fn contract_element(&self, e: usize) -> Result<Matroid> {
        self.contraction(Subset::singleton(e))
    }

    /// Direct sum; the second summand is relabeled above the first.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        let d = self.d + other.d;
        let mut all = Vec::with_capacity(self.num_bases() * other.num_bases());
        for b1 in self.bases() {
            for b2 in other.bases() {
                all.push(b1.union(Subset(b2.0 << self.n)));
            }
        }
        Matroid::from_bases(n, d, all)
    }

    // ----- connectivity -----

    /// Finest partition into separators; two elements share a component
    /// exactly when some circuit contains both.
    pub fn connected_components(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for c in self.circuits() {
            let mut it = c.elems();
            if let Some(first) = it.next() {
                for e in it {
                    let a = find(&mut parent, first - 1);
                    let b = find(&mut parent, e - 1);
                    parent[a] = b;
                }
            }
        }
        let mut groups: HashMap<usize, Subset> = HashMap::new();
        for e in 1..=self.n {
            let root = find(&mut parent, e - 1);
            groups.entry(root).or_insert(Subset::EMPTY);
            let g = groups.get_mut(&root).unwrap();
            *g = g.with(e);
        }
        let mut out: Vec<Subset> = groups.into_values().collect();
        out.sort_by_key(|s| s.min_elem());
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    // ----- relabeling and isomorphism -----

    /// Relabel the ground set; `labels[old - 1] = new` must be a permutation.
    pub fn relabel(&self, labels: &[usize]) -> Result<Matroid> {
        if labels.len() != self.n {
            return Err(Error::InvalidParams("relabeling length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &l in labels {
            if l < 1 || l > self.n || seen[l - 1] {
                return Err(Error::InvalidParams("relabeling is not a permutation".into()));
            }
            seen[l - 1] = true;
        }
        let mut bitmap = Bitmap::zeros(self.codec.size());
        for i in self.bases.iter_ones() {
            let t = self.codec.subset(i).relabel(labels);
            bitmap.set(self.codec.index_of(t).expect("relabel stays in codec"), true);
        }
        Ok(Matroid::from_bitmap_unchecked(self.n, self.d, bitmap))
    }

    /// Minimum basis bitmap over all ground-set permutations.
    pub fn canonical_form(&self) -> Result<Bitmap> {
        self.canonical_form_with_limit(DEFAULT_ISO_LIMIT)
    }

    pub fn canonical_form_with_limit(&self, limit: usize) -> Result<Bitmap> {
        if self.n > limit {
            return Err(Error::LimitExceeded(format!(
                "isomorphism search needs n <= {limit}, got n = {}",
                self.n
            )));
        }
        let c = self.codec.size();
        let mut best: Option<Bitmap> = None;
        let mut consider = |map: &dyn Fn(usize) -> usize| match &best {
            None => {
                let mut bm = Bitmap::zeros(c);
                for j in 0..c {
                    bm.set(j, self.bases.get(map(j)));
                }
                best = Some(bm);
            }
            Some(b) => {
                let mut verdict = Ordering::Equal;
                for j in (0..c).rev() {
                    let bit = self.bases.get(map(j));
                    let old = b.get(j);
                    if bit != old {
                        verdict = if bit { Ordering::Greater } else { Ordering::Less };
                        break;
                    }
                }
                if verdict == Ordering::Less {
                    let mut bm = Bitmap::zeros(c);
                    for j in 0..c {
                        bm.set(j, self.bases.get(map(j)));
                    }
                    best = Some(bm);
                }
            }
        };
        if let Some(maps) = perm_index_maps(self.n, self.d) {
            for map in maps.iter() {
                consider(&|j| map[j] as usize);
            }
        } else {
            let codec_ref = &self.codec;
            for_each_permutation(self.n, |perm| {
                let mut labels = vec![0usize; self.n];
                for (i, &p) in perm.iter().enumerate() {
                    labels[i] = p + 1;
                }
                consider(&|j| {
                    codec_ref
                        .index_of(codec_ref.subset(j).relabel(&labels))
                        .expect("relabel stays in codec")
                });
            });
        }
        Ok(best.expect("at least the identity permutation"))
    }

    pub fn is_isomorphic(&self, other: &Matroid) -> Result<bool> {
        self.is_isomorphic_with_limit(other, DEFAULT_ISO_LIMIT)
    }

    pub fn is_isomorphic_with_limit(&self, other: &Matroid, limit: usize) -> Result<bool> {
        if self.n != other.n || self.d != other.d || self.num_bases() != other.num_bases() {
            return Ok(false);
        }
        // degree multiset is a cheap isomorphism invariant
        let degs = |m: &Matroid| {
            let mut v: Vec<usize> = (1..=m.n).map(|e| m.degree(e)).collect();
            v.sort_unstable();
            v
        };
        if degs(self) != degs(other) {
            return Ok(false);
        }
        Ok(self.canonical_form_with_limit(limit)? == other.canonical_form_with_limit(limit)?)
    }
}

fn check_params(n: usize, d: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParams("ground set must be nonempty".into()));
    }
    if n > MAX_GROUND_SET {
        return Err(Error::InvalidParams(format!("ground set larger than {MAX_GROUND_SET}")));
    }
    if d > n {
        return Err(Error::InvalidParams(format!("rank {d} exceeds ground-set size {n}")));
    }
    Ok(())
}

/// Relabel map sending the elements of `keep` onto `1..|keep|` in order.
fn compact_map(n: usize, keep: Subset) -> Vec<usize> {
    let mut map = vec![0usize; n];
    for (new, old) in keep.elems().enumerate() {
        map[old - 1] = new + 1;
    }
    map
}

fn check_exchange(c: &SubsetCodec, bases: &Bitmap) -> Result<()> {
    let idxs: Vec<usize> = bases.iter_ones().collect();
    for &i in &idxs {
        let a = c.subset(i);
        for &j in &idxs {
            if i == j {
                continue;
            }
            let b = c.subset(j);
            let a_minus_b = a.minus(b);
            let b_minus_a = b.minus(a);
            for x in a_minus_b.elems() {
                let stem = a.without(x);
                let ok = b_minus_a
                    .elems()
                    .any(|y| bases.get(c.index_of(stem.with(y)).expect("within codec")));
                if !ok {
                    return Err(Error::ExchangeViolation { a, b, elem: x });
                }
            }
        }
    }
    Ok(())
}

/// Per-permutation subset-index maps, cached for small ground sets where the
/// full table pays off; `None` means compute transforms on the fly.
pub(crate) fn perm_index_maps(n: usize, k: usize) -> Option<Arc<Vec<Vec<u16>>>> {
    if n > 8 {
        return None;
    }
    static MAPS: OnceLock<Mutex<HashMap<(usize, usize), Arc<Vec<Vec<u16>>>>>> = OnceLock::new();
    let cache = MAPS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().expect("iso map cache poisoned");
    Some(
        cache
            .entry((n, k))
            .or_insert_with(|| {
                let c = codec(n, k);
                let mut maps = Vec::new();
                for_each_permutation(n, |perm| {
                    let mut labels = vec![0usize; n];
                    for (i, &p) in perm.iter().enumerate() {
                        labels[i] = p + 1;
                    }
                    let map: Vec<u16> = (0..c.size())
                        .map(|j| c.index_of(c.subset(j).relabel(&labels)).unwrap() as u16)
                        .collect();
                    maps.push(map);
                });
                Arc::new(maps)
            })
            .clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn snowflake() -> Matroid {
        Matroid::from_nonbases(
            6,
            2,
            [
                Subset::from_elems([1, 2]),
                Subset::from_elems([3, 4]),
                Subset::from_elems([5, 6]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn snowflake_has_twelve_bases() {
        let s = snowflake();
        assert_eq!(s.num_bases(), 12);
        assert_eq!((s.rank(), s.n()), (2, 6));
    }

    #[test]
    fn uniform_counts() {
        assert_eq!(Matroid::uniform(2, 4).unwrap().num_bases(), 6);
        assert_eq!(Matroid::uniform(0, 3).unwrap().num_bases(), 1);
        assert_eq!(Matroid::uniform(3, 6).unwrap().num_bases(), 20);
        assert!(Matroid::uniform(5, 4).is_err());
    }

    #[test]
    fn exchange_violation_detected() {
        let err = Matroid::from_bases(
            4,
            2,
            [Subset::from_elems([1, 2]), Subset::from_elems([3, 4])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ExchangeViolation { .. }));
    }

    #[test]
    fn rank_examples() {
        let s = snowflake();
        assert_eq!(s.rank_of(Subset::from_elems([1, 2])), 1);
        assert_eq!(s.rank_of(Subset::EMPTY), 0);
        assert_eq!(s.rank_of(Subset::from_elems([1, 3, 5])), 2);
    }

    #[test]
    fn closure_examples() {
        let s = snowflake();
        assert_eq!(s.closure(Subset::singleton(1)), Subset::from_elems([1, 2]));
        assert_eq!(s.closure(s.ground_set()), s.ground_set());
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.closure(Subset::singleton(1)), Subset::singleton(1));
    }

    #[test]
    fn circuits_of_snowflake_contain_the_three_pairs() {
        let s = snowflake();
        let cs = s.circuits();
        for pair in [[1, 2], [3, 4], [5, 6]] {
            assert!(cs.contains(&Subset::from_elems(pair)));
        }
    }

    #[test]
    fn cyclic_flats_of_uniform() {
        let u = Matroid::uniform(3, 6).unwrap();
        let cf = u.cyclic_flats();
        assert_eq!(cf.len(), 2);
        assert_eq!(cf[0].elements, Subset::EMPTY);
        assert_eq!(cf[1].elements, u.ground_set());
    }

    #[test]
    fn dual_examples() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.dual(), u);
        let s = snowflake();
        let d = s.dual();
        assert_eq!((d.rank(), d.n(), d.num_bases()), (4, 6, 12));
        assert_eq!(d.dual(), s);
    }

    #[test]
    fn restriction_and_contraction_of_snowflake() {
        let s = snowflake();
        let r = s.restriction(Subset::from_elems([1, 2])).unwrap();
        assert_eq!(r, Matroid::uniform(1, 2).unwrap());
        let c = s.contraction(Subset::from_elems([1, 2])).unwrap();
        assert_eq!(c, Matroid::uniform(1, 4).unwrap());
        assert_eq!(s.restriction(s.ground_set()).unwrap(), s);
    }

    #[test]
    fn direct_sum_examples() {
        let coloop = Matroid::uniform(1, 1).unwrap();
        let two = coloop.direct_sum(&coloop).unwrap();
        assert_eq!((two.rank(), two.n(), two.num_bases()), (2, 2, 1));
        let s = snowflake().direct_sum(&coloop).unwrap();
        assert_eq!((s.rank(), s.n(), s.num_bases()), (3, 7, 12));
        let m5 = Matroid::from_nonbases(4, 2, [Subset::from_elems([3, 4])]).unwrap();
        let mm = m5.direct_sum(&m5).unwrap();
        assert_eq!((mm.rank(), mm.n(), mm.num_bases()), (4, 8, 25));
    }

    #[test]
    fn connectivity() {
        assert!(snowflake().is_connected());
        assert!(Matroid::uniform(2, 5).unwrap().is_connected());
        let sum = snowflake().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert!(!sum.is_connected());
        assert_eq!(
            sum.connected_components(),
            vec![Subset::full(6), Subset::singleton(7)]
        );
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let s = snowflake();
        let pi = s.relabel(&[3, 5, 1, 6, 2, 4]).unwrap();
        assert_eq!(s.canonical_form().unwrap(), pi.canonical_form().unwrap());
        assert!(s.is_isomorphic(&pi).unwrap());
    }

    #[test]
    fn self_dual_uniform_is_isomorphic_to_its_dual() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(u.is_isomorphic(&u.dual()).unwrap());
    }

    #[test]
    fn iso_limit_is_enforced() {
        let u = Matroid::uniform(2, 10).unwrap();
        assert!(matches!(u.canonical_form(), Err(Error::LimitExceeded(_))));
        assert!(u.canonical_form_with_limit(10).is_ok());
    }

    #[test]
    fn rejects_empty_ground_set() {
        assert!(Matroid::from_bases(0, 0, [Subset::EMPTY]).is_err());
    }
}
