//! Small-matroid census: brute-force enumeration up to isomorphism, corpus
//! file parsing and writing, and aggregated classification statistics.
//!
//! The corpus format is plain text: a header line `d n count`, then one
//! matroid per line as exactly C(n,d) characters over {'*','0'}, where '*'
//! at position i marks the i-th d-subset (lexicographic) as a basis.

use std::io::{BufRead, Write};

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{perm_index_maps, Matroid};
use crate::split;
use crate::subsets::{binomial, codec, Bitmap};

pub type Rat = BigRational;

/// Enumeration stays within C(n,d) <= this bound.
pub const ENUMERATION_GUARD: u64 = 20;
/// Canonical-form dedup during enumeration needs the cached permutation
/// tables, which exist for ground sets up to this size.
pub const ENUMERATION_MAX_N: usize = 8;

/// All matroids of rank d on n elements, one canonical representative per
/// isomorphism class, ordered by canonical basis bitmap.
pub fn enumerate_matroids(d: usize, n: usize) -> Result<Vec<Matroid>> {
    let c = binomial(n, d);
    if c > ENUMERATION_GUARD {
        return Err(Error::LimitExceeded(format!(
            "enumeration needs C(n,d) <= {ENUMERATION_GUARD}, got {c}"
        )));
    }
    if n > ENUMERATION_MAX_N {
        return Err(Error::LimitExceeded(format!(
            "enumeration dedup needs n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    if n == 0 || d > n {
        return Err(Error::InvalidParams("need 1 <= n and d <= n".into()));
    }
    let c = c as usize;
    let cd = codec(n, d);
    // for each ordered basis pair (i, j) and each a in A_i - A_j, the set of
    // exchange targets A_i - a + b as a bitmask over subset indices
    let mut pair_masks: Vec<Vec<u32>> = vec![Vec::new(); c * c];
    for i in 0..c {
        let a = cd.subset(i);
        for j in 0..c {
            if i == j {
                continue;
            }
            let b = cd.subset(j);
            let slot = &mut pair_masks[i * c + j];
            for x in a.minus(b).elems() {
                let stem = a.without(x);
                let mut mask = 0u32;
                for y in b.minus(a).elems() {
                    mask |= 1 << cd.index_of(stem.with(y)).expect("within codec");
                }
                slot.push(mask);
            }
        }
    }
    let maps = perm_index_maps(n, d).expect("n is small enough for cached tables");
    let mut classes = std::collections::BTreeSet::new();
    'cand: for cand in 1u32..(1u32 << c) {
        let mut rest = cand;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut others = cand & !(1 << i);
            while others != 0 {
                let j = others.trailing_zeros() as usize;
                others &= others - 1;
                for &mask in &pair_masks[i * c + j] {
                    if cand & mask == 0 {
                        continue 'cand;
                    }
                }
            }
        }
        let mut canon = u32::MAX;
        for map in maps.iter() {
            let mut img = 0u32;
            for (j, &src) in map.iter().enumerate() {
                img |= ((cand >> src) & 1) << j;
            }
            if img < canon {
                canon = img;
            }
        }
        classes.insert(canon);
    }
    classes
        .into_iter()
        .map(|word| Matroid::from_bitmap_checked(n, d, Bitmap::from_low_word(c, word as u64)))
        .collect()
}

/// Subset orderings a corpus file may use for its line positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetOrder {
    Lex,
    /// Exactly reversed lexicographic: position i means lex index C-1-i.
    ReversedLex,
    /// Colexicographic: sorted by largest differing element.
    Colex,
}

impl SubsetOrder {
    /// Maps a line position to the lexicographic codec index.
    fn to_lex(self, n: usize, k: usize) -> Vec<usize> {
        let c = codec(n, k);
        match self {
            SubsetOrder::Lex => (0..c.size()).collect(),
            SubsetOrder::ReversedLex => (0..c.size()).rev().collect(),
            SubsetOrder::Colex => {
                let mut idx: Vec<usize> = (0..c.size()).collect();
                idx.sort_by(|&a, &b| {
                    let (sa, sb) = (c.subset(a), c.subset(b));
                    let top = sa.sym_diff(sb).elems().max();
                    match top {
                        None => std::cmp::Ordering::Equal,
                        Some(t) => {
                            if sb.contains(t) {
                                std::cmp::Ordering::Less
                            } else {
                                std::cmp::Ordering::Greater
                            }
                        }
                    }
                });
                idx
            }
        }
    }
}

pub fn write_corpus<W: Write>(matroids: &[Matroid], w: &mut W) -> Result<()> {
    let Some(first) = matroids.first() else {
        return Err(Error::InvalidParams("empty corpus".into()));
    };
    let (d, n) = (first.rank(), first.n());
    if matroids.iter().any(|m| m.rank() != d || m.n() != n) {
        return Err(Error::MixedParameters);
    }
    let c = codec(n, d).size();
    writeln!(w, "{d} {n} {}", matroids.len())?;
    for m in matroids {
        let mut line = String::with_capacity(c);
        for i in 0..c {
            line.push(if m.bases_bitmap().get(i) { '*' } else { '0' });
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

/// Result of a lenient parse: valid matroids plus flagged line numbers.
#[derive(Debug)]
pub struct CorpusParse {
    pub d: usize,
    pub n: usize,
    pub matroids: Vec<Matroid>,
    pub flagged: Vec<(usize, Error)>,
}

/// Parses a corpus stream. Structural problems are always errors; lines
/// failing matroid validation are errors in strict mode and flagged
/// otherwise.
pub fn parse_corpus<R: BufRead>(r: R, strict: bool, order: SubsetOrder) -> Result<CorpusParse> {
    let mut lines = r.lines().enumerate();
    let header = match lines.next() {
        Some((_, line)) => line?,
        None => return Err(Error::FormatError { line: 1, reason: "missing header".into() }),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::FormatError { line: 1, reason: "header must be `d n count`".into() });
    }
    let parse_num = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::FormatError {
            line: 1,
            reason: format!("bad header field `{s}`"),
        })
    };
    let d = parse_num(fields[0])?;
    let n = parse_num(fields[1])?;
    let count = parse_num(fields[2])?;
    if n == 0 || d > n || n > crate::subsets::MAX_GROUND_SET {
        return Err(Error::FormatError { line: 1, reason: "header parameters out of range".into() });
    }
    let c = codec(n, d).size();
    let position_to_lex = order.to_lex(n, d);
    let mut matroids = Vec::new();
    let mut flagged = Vec::new();
    let mut seen = 0usize;
    for (zero_idx, line) in lines {
        let line_no = zero_idx + 1;
        let line = line?;
        if line.is_empty() && seen == count {
            continue; // trailing newline
        }
        if line.len() != c || !line.bytes().all(|b| b == b'*' || b == b'0') {
            return Err(Error::FormatError {
                line: line_no,
                reason: format!("expected {c} characters over {{'*','0'}}"),
            });
        }
        seen += 1;
        let mut bitmap = Bitmap::zeros(c);
        for (pos, byte) in line.bytes().enumerate() {
            if byte == b'*' {
                bitmap.set(position_to_lex[pos], true);
            }
        }
        match Matroid::from_bitmap_checked(n, d, bitmap) {
            Ok(m) => matroids.push(m),
            Err(e) if strict => {
                return Err(Error::FormatError {
                    line: line_no,
                    reason: format!("invalid matroid: {e}"),
                })
            }
            Err(e) => flagged.push((line_no, e)),
        }
    }
    if seen != count {
        return Err(Error::FormatError {
            line: 1,
            reason: format!("header promises {count} matroids, found {seen}"),
        });
    }
    Ok(CorpusParse { d, n, matroids, flagged })
}

/// Aggregate classification counts with table-convention percentages
/// (round half up).
#[derive(Clone, Debug, Serialize)]
pub struct CensusRecord {
    pub d: usize,
    pub n: usize,
    pub total: u64,
    pub connected: u64,
    pub paving: u64,
    pub sparse_paving: u64,
    pub split: u64,
    pub nested: u64,
    pub paving_pct: u32,
    pub split_pct: u32,
}

fn round_half_up_pct(count: u64, total: u64) -> u32 {
    ((200 * count + total) / (2 * total)) as u32
}

impl CensusRecord {
    pub fn paving_pct_exact(&self) -> Rat {
        Rat::new((100 * self.paving).into(), self.total.into())
    }

    pub fn split_pct_exact(&self) -> Rat {
        Rat::new((100 * self.split).into(), self.total.into())
    }

    pub const CSV_HEADER: &'static str =
        "d,n,total,connected,paving,sparse_paving,split,nested,paving_pct,split_pct";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.d,
            self.n,
            self.total,
            self.connected,
            self.paving,
            self.sparse_paving,
            self.split,
            self.nested,
            self.paving_pct,
            self.split_pct
        )
    }
}

pub fn census_stats(matroids: &[Matroid]) -> Result<CensusRecord> {
    let Some(first) = matroids.first() else {
        return Err(Error::InvalidParams("empty census".into()));
    };
    let (d, n) = (first.rank(), first.n());
    if matroids.iter().any(|m| m.rank() != d || m.n() != n) {
        return Err(Error::MixedParameters);
    }
    let mut rec = CensusRecord {
        d,
        n,
        total: matroids.len() as u64,
        connected: 0,
        paving: 0,
        sparse_paving: 0,
        split: 0,
        nested: 0,
        paving_pct: 0,
        split_pct: 0,
    };
    for m in matroids {
        if m.is_connected() {
            rec.connected += 1;
        }
        if split::is_paving(m) {
            rec.paving += 1;
        }
        if split::is_sparse_paving(m) {
            rec.sparse_paving += 1;
        }
        if split::is_split(m) {
            rec.split += 1;
        }
        if split::is_nested(m) {
            rec.nested += 1;
        }
    }
    rec.paving_pct = round_half_up_pct(rec.paving, rec.total);
    rec.split_pct = round_half_up_pct(rec.split, rec.total);
    Ok(rec)
}
