//! Integer partitions and Young-diagram combinatorics: contents, hooks,
//! content products, skew shapes, and related statistics.
//!
//! Boxes are addressed as `(i, j)` with `i` the 1-based row and `j` the
//! 1-based column; the content of a box is `j - i`.

use crate::algebra::{factorial, ParamScalar, Rat};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("malformed partition: {0}")]
    Malformed(String),
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds from any iterator, sorting descending and dropping zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: v }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row length with rows past the end counting as zero.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &q)| self.part(i) >= q)
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=cols {
            out.push(self.parts.iter().filter(|&&p| p >= j as u32).count() as u32);
        }
        Partition { parts: out }
    }

    /// All boxes `(i, j)`, 1-based, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Boxes of the skew shape `self / inner`.
    pub fn skew_boxes(&self, inner: &Partition) -> impl Iterator<Item = (usize, usize)> + '_ {
        let inner = inner.clone();
        self.parts.iter().enumerate().flat_map(move |(i, &p)| {
            ((inner.part(i) + 1) as usize..=p as usize).map(move |j| (i + 1, j))
        })
    }

    /// Arm length of box `(i, j)` (boxes strictly to the right).
    pub fn arm(&self, i: usize, j: usize) -> u32 {
        self.part(i - 1) - j as u32
    }

    /// Leg length of box `(i, j)` (boxes strictly below).
    pub fn leg(&self, i: usize, j: usize) -> u32 {
        self.parts[i..]
            .iter()
            .take_while(|&&p| p >= j as u32)
            .count() as u32
    }

    /// Shapes obtained by adding one box (optionally capped at `max_len` rows).
    pub fn with_box_added(&self, max_len: Option<usize>) -> Vec<(Partition, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let row = self.part(i);
            let above = if i == 0 { u32::MAX } else { self.part(i - 1) };
            if row < above {
                if let Some(cap) = max_len {
                    if i >= cap {
                        continue;
                    }
                }
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push((Partition { parts }, i + 1, (row + 1) as usize));
            }
        }
        out
    }

    /// Shapes obtained by removing one corner box.
    pub fn with_box_removed(&self) -> Vec<(Partition, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let row = self.parts[i];
            let below = self.part(i + 1);
            if row > below {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push((Partition { parts }, i + 1, row as usize));
            }
        }
        out
    }

    /// Dominance order: `self <= other` (both must have equal size).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `z_lambda = prod_k k^{m_k} m_k!` for the power-sum inner product.
    pub fn zee(&self) -> Rat {
        let mut acc = Rat::from_integer(1.into());
        let mut run = 1u32;
        for w in 0..self.parts.len() {
            if w + 1 < self.parts.len() && self.parts[w + 1] == self.parts[w] {
                run += 1;
            } else {
                let k = self.parts[w];
                for _ in 0..run {
                    acc *= Rat::from_integer((k as i64).into());
                }
                acc *= factorial(run);
                run = 1;
            }
        }
        acc
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated decreasing positive integers; the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| PartitionError::Malformed(s.to_string()))?;
            if p == 0 {
                return Err(PartitionError::Malformed(s.to_string()));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::Malformed(s.to_string()));
        }
        Ok(Partition { parts })
    }
}

/// Total order: by size, then reverse-lexicographic within a size, so every
/// map iteration over shapes is deterministic.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A skew shape `outer / inner` with containment validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, PartitionError> {
        if !outer.contains(&inner) {
            return Err(PartitionError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }
}

/// Content `j - i` for every box, row-major.
pub fn contents(r: &Partition) -> Vec<((usize, usize), i64)> {
    r.boxes().map(|(i, j)| ((i, j), j as i64 - i as i64)).collect()
}

/// Hook lengths (arm + leg + 1) for every box, as a sorted multiset.
pub fn hooks(r: &Partition) -> Vec<u32> {
    let mut out: Vec<u32> = r
        .boxes()
        .map(|(i, j)| r.arm(i, j) + r.leg(i, j) + 1)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Content product `xi_R(z) = prod_{(i,j) in R} (z + j - i)`.
pub fn xi(r: &Partition, z: &ParamScalar) -> ParamScalar {
    let mut acc = ParamScalar::one();
    for (_, c) in contents(r) {
        acc = acc.mul(&z.add(&ParamScalar::int(c)));
    }
    acc
}

/// Content-product ratio over the skew boxes of `R / Q`.
///
/// With `transposed = false` each box contributes `z + j - i`; with
/// `transposed = true` it contributes `z + i - j`.
pub fn xi_ratio(
    r: &Partition,
    q: &Partition,
    z: &ParamScalar,
    transposed: bool,
) -> Result<ParamScalar, PartitionError> {
    if !r.contains(q) {
        return Err(PartitionError::NotContained);
    }
    let mut acc = ParamScalar::one();
    for (i, j) in r.skew_boxes(q) {
        let c = if transposed {
            i as i64 - j as i64
        } else {
            j as i64 - i as i64
        };
        acc = acc.mul(&z.add(&ParamScalar::int(c)));
    }
    Ok(acc)
}

/// Restricted box count: the sum of the parts of `Q` over rows where `Q`
/// differs from `R`.
pub fn restricted_size(r: &Partition, q: &Partition) -> Result<u32, PartitionError> {
    if !r.contains(q) {
        return Err(PartitionError::NotContained);
    }
    Ok((0..q.len())
        .filter(|&i| q.part(i) != r.part(i))
        .map(|i| q.part(i))
        .sum())
}

/// `[[x]]_{s,a}`: `x` when `x = a mod s`, otherwise 1.
pub fn bracket(x: i64, s: u32, a: i64) -> i64 {
    assert!(s >= 1);
    if x.rem_euclid(s as i64) == a.rem_euclid(s as i64) {
        x
    } else {
        1
    }
}

/// Whether the rows of the skew shape `R / Q` interact: `false` exactly when
/// `Q_i < R_{i+1}` for every `i < l(R)` (all skew rows disconnected).
pub fn rows_interact(r: &Partition, q: &Partition) -> Result<bool, PartitionError> {
    if !r.contains(q) {
        return Err(PartitionError::NotContained);
    }
    for i in 0..r.len().saturating_sub(1) {
        if q.part(i) >= r.part(i + 1) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All partitions of `n`, in the crate's canonical order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let mut p = rem.min(max);
        while p >= 1 {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
            p -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of size `0..=max_size`, optionally capped in length.
pub fn partitions_up_to(max_size: u32, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for p in partitions_of(n) {
            if max_len.map_or(true, |l| p.len() <= l) {
                out.push(p);
            }
        }
    }
    out
}

/// All subshapes `Q` contained in `R`.
pub fn subpartitions(r: &Partition) -> Vec<Partition> {
    fn go(r: &[u32], min_next: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if r.is_empty() {
            out.push(Partition::from_unsorted(cur.iter().copied()));
            return;
        }
        let hi = r[0].min(min_next);
        for q in 0..=hi {
            cur.push(q);
            go(&r[1..], q, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r.parts(), u32::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac_equal;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn contents_examples() {
        let c: Vec<i64> = contents(&part("2,1")).into_iter().map(|(_, v)| v).collect();
        assert_eq!(c, vec![0, 1, -1]);
        let c: Vec<i64> = contents(&part("3,1")).into_iter().map(|(_, v)| v).collect();
        assert_eq!(c, vec![0, 1, 2, -1]);
        assert!(contents(&Partition::empty()).is_empty());
    }

    #[test]
    fn hooks_examples() {
        assert_eq!(hooks(&part("2,1")), vec![3, 1, 1]);
        assert_eq!(hooks(&part("3,1")), vec![4, 2, 1, 1]);
        assert_eq!(hooks(&part("1")), vec![1]);
    }

    #[test]
    fn xi_examples() {
        let z = ParamScalar::named("z");
        assert!(frac_equal(&xi(&part("1"), &z), &z));
        // [2,1]: contents {0, 1, -1}
        let expect = z
            .mul(&z.add(&ParamScalar::int(1)))
            .mul(&z.sub(&ParamScalar::int(1)));
        assert!(frac_equal(&xi(&part("2,1"), &z), &expect));
        // [4] at z = 4 concrete: 4*5*6*7
        let four = ParamScalar::int(4);
        assert!(frac_equal(&xi(&part("4"), &four), &ParamScalar::int(840)));
    }

    #[test]
    fn xi_is_monic_of_degree_size() {
        let z = ParamScalar::named("z");
        for r in partitions_up_to(6, None) {
            let x = xi(&r, &z);
            let poly = x.to_poly().unwrap();
            if r.is_empty() {
                assert!(x.is_one());
            } else {
                assert_eq!(poly.total_degree(), r.size());
                assert!(poly.leading().1.is_one());
            }
        }
    }

    #[test]
    fn xi_ratio_conventions() {
        let z = ParamScalar::named("z");
        let plain = xi_ratio(&part("2"), &part("1"), &z, false).unwrap();
        assert!(frac_equal(&plain, &z.add(&ParamScalar::int(1))));
        let transposed = xi_ratio(&part("2"), &part("1"), &z, true).unwrap();
        assert!(frac_equal(&transposed, &z.sub(&ParamScalar::int(1))));
        assert!(xi_ratio(&part("1"), &part("1"), &z, false).unwrap().is_one());
        assert!(xi_ratio(&part("1"), &part("1"), &z, true).unwrap().is_one());
        assert_eq!(
            xi_ratio(&part("1"), &part("2"), &z, false).unwrap_err(),
            PartitionError::NotContained
        );
    }

    #[test]
    fn xi_ratio_multiplicative_over_chains() {
        let z = ParamScalar::named("z");
        let r = part("4,3,1");
        for q in subpartitions(&r) {
            for transposed in [false, true] {
                let a = xi_ratio(&r, &q, &z, transposed).unwrap();
                let b = xi_ratio(&q, &Partition::empty(), &z, transposed).unwrap();
                let c = xi_ratio(&r, &Partition::empty(), &z, transposed).unwrap();
                assert!(frac_equal(&a.mul(&b), &c));
            }
        }
    }

    #[test]
    fn restricted_size_examples() {
        assert_eq!(restricted_size(&part("6,3"), &part("2")).unwrap(), 2);
        let r = part("4,2");
        assert_eq!(restricted_size(&r, &r).unwrap(), 0);
        assert_eq!(restricted_size(&part("4,3,2"), &part("2,1")).unwrap(), 3);
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(4, 2, 0), 4);
        assert_eq!(bracket(3, 2, 0), 1);
        assert_eq!(bracket(0, 2, 0), 0);
    }

    #[test]
    fn rows_interact_examples() {
        assert!(rows_interact(&part("3,2,1"), &part("2,1")).unwrap());
        assert!(!rows_interact(&part("4,1"), &Partition::empty()).unwrap());
        assert!(rows_interact(&part("2,2"), &part("2")).unwrap());
    }

    #[test]
    fn content_sum_row_formula() {
        // sum of contents = sum_i [R_i(R_i-1)/2 - (i-1) R_i]
        for r in partitions_up_to(10, None) {
            let total: i64 = contents(&r).iter().map(|(_, c)| c).sum();
            let by_rows: i64 = r
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    let p = p as i64;
                    p * (p - 1) / 2 - (i as i64) * p
                })
                .sum();
            assert_eq!(total, by_rows);
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["", "1", "4,3,2", "2,2,1"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("3,4".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn subpartition_count_small() {
        // boxes of [2,1]: subshapes are {}, [1], [2], [1,1], [2,1]
        assert_eq!(subpartitions(&part("2,1")).len(), 5);
    }

    #[test]
    fn conjugate_involution() {
        for r in partitions_up_to(8, None) {
            assert_eq!(r.conjugate().conjugate(), r);
        }
    }

    #[test]
    fn zee_values() {
        use crate::algebra::rat;
        assert_eq!(part("2").zee(), rat(2));
        assert_eq!(part("1,1").zee(), rat(2));
        assert_eq!(part("3,1,1").zee(), rat(6));
        assert_eq!(part("2,2,1").zee(), rat(8));
    }
}
