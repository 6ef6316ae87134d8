//! Ground-set subsets, basis bitmaps and the lexicographic subset codec.
//!
//! Elements of a ground set are labeled `1..=n` and subsets are stored as
//! bitmasks (bit `i-1` stands for element `i`). The codec enumerates all
//! `k`-subsets of `{1..n}` in lexicographic order of their sorted element
//! lists and provides the subset <-> index bijection used for basis bitmaps,
//! lift vectors and corpus lines.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Largest supported ground-set size; subsets are u32 masks.
pub const MAX_GROUND_SET: usize = 30;

/// Binomial coefficient C(n, k). Panics on overflow, which cannot happen at
/// the desk scales this crate guards for.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u64).expect("binomial overflow") / (i as u64 + 1);
    }
    acc
}

/// A subset of the ground set `{1..n}`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(e: usize) -> Subset {
        debug_assert!(e >= 1 && e <= MAX_GROUND_SET);
        Subset(1 << (e - 1))
    }

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND_SET);
        if n == 0 {
            Subset(0)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
        let mut mask = 0u32;
        for e in elems {
            debug_assert!(e >= 1 && e <= MAX_GROUND_SET);
            mask |= 1 << (e - 1);
        }
        Subset(mask)
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && e <= MAX_GROUND_SET && self.0 & (1 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << (e - 1))
    }

    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(Self::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn elems(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let e = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(e)
            }
        })
    }

    /// Smallest element, if any.
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Relabel elements through `map`, where `map[old - 1] = new`.
    pub fn relabel(self, map: &[usize]) -> Subset {
        let mut out = 0u32;
        for e in self.elems() {
            out |= 1 << (map[e - 1] - 1);
        }
        Subset(out)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.card()))?;
        for e in self.elems() {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

/// Lexicographic comparison of subsets by their sorted element lists,
/// shorter prefix first. Used wherever output order should match the
/// written convention `{1,2} < {1,3} < ... < {2,3}`.
pub fn lex_cmp(a: Subset, b: Subset) -> Ordering {
    let mut xs = a.elems();
    let mut ys = b.elems();
    loop {
        match (xs.next(), ys.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => match x.cmp(&y) {
                Ordering::Equal => continue,
                ord => return ord,
            },
        }
    }
}

/// The lexicographic enumeration of all k-subsets of `{1..n}`.
pub struct SubsetCodec {
    n: usize,
    k: usize,
    subsets: Vec<Subset>,
    index: HashMap<u32, usize>,
}

impl SubsetCodec {
    fn build(n: usize, k: usize) -> SubsetCodec {
        assert!(n <= MAX_GROUND_SET, "ground set too large");
        assert!(k <= n, "cardinality exceeds ground set");
        let count = binomial(n, k) as usize;
        let mut subsets = Vec::with_capacity(count);
        if k == 0 {
            subsets.push(Subset::EMPTY);
        } else {
            let mut cur: Vec<usize> = (1..=k).collect();
            loop {
                subsets.push(Subset::from_elems(cur.iter().copied()));
                // advance to the next k-subset in lexicographic order
                let mut i = k;
                while i > 0 && cur[i - 1] == n - (k - i) {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                cur[i - 1] += 1;
                for j in i..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
        }
        debug_assert_eq!(subsets.len(), count);
        let index = subsets.iter().enumerate().map(|(i, s)| (s.0, i)).collect();
        SubsetCodec { n, k, subsets, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of k-subsets, C(n, k).
    pub fn size(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset(&self, index: usize) -> Subset {
        self.subsets[index]
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.index.get(&s.0).copied()
    }
}

static CODECS: OnceLock<Mutex<HashMap<(usize, usize), Arc<SubsetCodec>>>> = OnceLock::new();

/// Shared codec for (n, k); codecs are cached process-wide.
pub fn codec(n: usize, k: usize) -> Arc<SubsetCodec> {
    let cache = CODECS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().expect("codec cache poisoned");
    cache
        .entry((n, k))
        .or_insert_with(|| Arc::new(SubsetCodec::build(n, k)))
        .clone()
}

/// A fixed-length bitmap; used for basis membership over a subset codec.
///
/// Ordering reads the bit string as an integer with index 0 least
/// significant, which gives the fixed total order used for canonical forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitmap {
    len: usize,
    words: Vec<u64>,
}

impl Bitmap {
    pub fn zeros(len: usize) -> Bitmap {
        Bitmap { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn ones(len: usize) -> Bitmap {
        let mut b = Bitmap::zeros(len);
        for i in 0..len {
            b.set(i, true);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 != 0
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Lowest 64 bits; convenient for small codecs.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn from_low_word(len: usize, word: u64) -> Bitmap {
        debug_assert!(len <= 64);
        let mut b = Bitmap::zeros(len);
        if !b.words.is_empty() {
            b.words[0] = word;
        }
        b
    }
}

impl PartialOrd for Bitmap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bitmap {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Bitmap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '*' } else { '0' })?;
        }
        Ok(())
    }
}

/// Calls `f` with every permutation of `{0..n-1}` (Heap's algorithm).
/// The map sends position `i` to `perm[i]`.
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut stack = vec![0usize; n];
    f(&perm);
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            f(&perm);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
}
