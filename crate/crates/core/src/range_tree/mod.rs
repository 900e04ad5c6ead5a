//! Static counting range tree over integer points in `d` dimensions.
//!
//! Coordinates are first replaced by their rank among the distinct values of
//! their dimension. The structure is then layered: a balanced segment tree on
//! the first remaining dimension whose nodes each own a structure on the
//! remaining ones, down to two dimensions, which are answered by binary search
//! on the first and a wavelet matrix on the second. Nodes holding at most
//! [`BUCKET`] points keep no sub-structure and are scanned.

mod wavelet;

use crate::error::{Error, Result};
use wavelet::WaveletMatrix;

/// Lower bound meaning "unbounded below".
pub const NEG_INF: i64 = i64::MIN;
/// Upper bound meaning "unbounded above".
pub const POS_INF: i64 = i64::MAX;

const BUCKET: usize = 48;

/// Points of a fixed dimension, each carrying a payload id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<i64>,
    payload: Vec<usize>,
}

impl PointSet {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionZero);
        }
        Ok(PointSet { dim, coords: Vec::new(), payload: Vec::new() })
    }

    pub fn with_capacity(dim: usize, n: usize) -> Result<Self> {
        let mut ps = Self::new(dim)?;
        ps.coords.reserve(n * dim);
        ps.payload.reserve(n);
        Ok(ps)
    }

    pub fn push(&mut self, point: &[i64], id: usize) -> Result<()> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: point.len() });
        }
        self.coords.extend_from_slice(point);
        self.payload.push(id);
        Ok(())
    }

    pub fn from_points(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        let mut ps = Self::with_capacity(dim, points.len())?;
        for (i, p) in points.iter().enumerate() {
            ps.push(p, i)?;
        }
        Ok(ps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.payload.len()
    }

    pub fn is_empty(&self) -> bool {
        self.payload.is_empty()
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn payload(&self, i: usize) -> usize {
        self.payload[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[i64]> {
        self.coords.chunks_exact(self.dim)
    }
}

/// Closed integer box `[lo_t, hi_t]` per dimension; [`NEG_INF`] and
/// [`POS_INF`] act as infinite bounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RangeBox {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl RangeBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { expected: lo.len(), got: hi.len() });
        }
        if lo.is_empty() {
            return Err(Error::DimensionZero);
        }
        if let Some(t) = (0..lo.len()).find(|&t| lo[t] > hi[t]) {
            return Err(Error::EmptyBox { dim: t, lo: lo[t], hi: hi[t] });
        }
        Ok(RangeBox { lo, hi })
    }

    /// The box covering all of `d`-space.
    pub fn full(dim: usize) -> Self {
        RangeBox { lo: vec![NEG_INF; dim], hi: vec![POS_INF; dim] }
    }

    pub fn from_bounds(bounds: &[(i64, i64)]) -> Result<Self> {
        Self::new(bounds.iter().map(|b| b.0).collect(), bounds.iter().map(|b| b.1).collect())
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn bound(&self, t: usize) -> (i64, i64) {
        (self.lo[t], self.hi[t])
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.iter().zip(self.lo.iter().zip(&self.hi)).all(|(&x, (&l, &h))| l <= x && x <= h)
    }
}

/// Linear-scan count of the points inside `b`.
pub fn count_bruteforce(ps: &PointSet, b: &RangeBox) -> Result<usize> {
    if b.dim() != ps.dim() {
        return Err(Error::DimensionMismatch { expected: ps.dim(), got: b.dim() });
    }
    Ok(ps.iter().filter(|p| b.contains(p)).count())
}

/// Half-open rank range per dimension.
type Ranks = (u32, u32);

#[derive(Debug)]
struct Node {
    start: u32,
    end: u32,
    children: Option<(u32, u32)>,
    assoc: Option<Box<Layer>>,
}

#[derive(Debug)]
enum Layer {
    Line { keys: Vec<u32> },
    /// `local` holds the distinct second coordinates; the wavelet matrix
    /// stores indices into it, so its depth follows the node size.
    Plane { keys: Vec<u32>, local: Vec<u32>, values: WaveletMatrix },
    Tree { keys: Vec<u32>, rest: Vec<u32>, nodes: Vec<Node> },
}

/// Sorts flattened points (stride `r`) by their first coordinate.
fn sort_by_first(points: &[u32], r: usize) -> Vec<u32> {
    let mut idx: Vec<u32> = (0..(points.len() / r) as u32).collect();
    idx.sort_by_key(|&i| points[i as usize * r]);
    let mut out = Vec::with_capacity(points.len());
    for i in idx {
        out.extend_from_slice(&points[i as usize * r..(i as usize + 1) * r]);
    }
    out
}

/// Merges two point lists (stride `r`) already sorted by first coordinate.
fn merge_by_first(a: &[u32], b: &[u32], r: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        if a[x] <= b[y] {
            out.extend_from_slice(&a[x..x + r]);
            x += r;
        } else {
            out.extend_from_slice(&b[y..y + r]);
            y += r;
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
    out
}

impl Layer {
    /// `points` is flattened with stride `r`, the number of remaining
    /// dimensions.
    fn build(points: &[u32], r: usize) -> Layer {
        Self::build_sorted(&sort_by_first(points, r), r)
    }

    /// Like [`Self::build`] for points already sorted by first coordinate.
    fn build_sorted(sorted: &[u32], r: usize) -> Layer {
        let keys: Vec<u32> = sorted.iter().step_by(r).copied().collect();
        match r {
            1 => Layer::Line { keys },
            2 => {
                let mut local: Vec<u32> = sorted.iter().skip(1).step_by(2).copied().collect();
                local.sort_unstable();
                local.dedup();
                let values = sorted
                    .iter()
                    .skip(1)
                    .step_by(2)
                    .map(|v| local.binary_search(v).expect("value is listed") as u32)
                    .collect();
                let values = WaveletMatrix::new(values, bits_for(local.len()));
                Layer::Plane { keys, local, values }
            }
            _ => {
                let stride = r - 1;
                let mut rest = Vec::with_capacity(keys.len() * stride);
                for p in sorted.chunks_exact(r) {
                    rest.extend_from_slice(&p[1..]);
                }
                let mut nodes = Vec::new();
                Self::build_node(&mut nodes, &rest, stride, 0, keys.len());
                Layer::Tree { keys, rest, nodes }
            }
        }
    }

    /// Builds the subtree over `rest[start..end]` and returns its id with the
    /// same points sorted by their next coordinate, merged up from the
    /// children so that no level sorts from scratch.
    fn build_node(nodes: &mut Vec<Node>, rest: &[u32], stride: usize, start: usize, end: usize) -> (u32, Vec<u32>) {
        let id = nodes.len();
        nodes.push(Node { start: start as u32, end: end as u32, children: None, assoc: None });
        if end - start <= BUCKET {
            return (id as u32, sort_by_first(&rest[start * stride..end * stride], stride));
        }
        let mid = start + (end - start) / 2;
        let (left, lsorted) = Self::build_node(nodes, rest, stride, start, mid);
        let (right, rsorted) = Self::build_node(nodes, rest, stride, mid, end);
        let merged = merge_by_first(&lsorted, &rsorted, stride);
        nodes[id].children = Some((left, right));
        nodes[id].assoc = Some(Box::new(Layer::build_sorted(&merged, stride)));
        (id as u32, merged)
    }

    fn positions(keys: &[u32], (lo, hi): Ranks) -> (usize, usize) {
        (keys.partition_point(|&k| k < lo), keys.partition_point(|&k| k < hi))
    }

    /// `full[t]` says the query does not constrain remaining dimension `t`.
    fn count(&self, q: &[Ranks], full: &[bool]) -> usize {
        match self {
            Layer::Line { keys } => {
                let (a, b) = Self::positions(keys, q[0]);
                b - a
            }
            Layer::Plane { keys, local, values } => {
                let (a, b) = Self::positions(keys, q[0]);
                if full[1] || a >= b {
                    b - a
                } else {
                    let (lo, hi) = Self::positions(local, q[1]);
                    values.count(a, b, lo as u32, hi as u32)
                }
            }
            Layer::Tree { keys, rest, nodes } => {
                let (a, b) = Self::positions(keys, q[0]);
                if a >= b {
                    return 0;
                }
                if full[1..].iter().all(|&f| f) {
                    return b - a;
                }
                Self::visit(nodes, rest, 0, a as u32, b as u32, &q[1..], &full[1..])
            }
        }
    }

    fn visit(nodes: &[Node], rest: &[u32], id: u32, a: u32, b: u32, q: &[Ranks], full: &[bool]) -> usize {
        let node = &nodes[id as usize];
        if node.end <= a || b <= node.start {
            return 0;
        }
        if let (Some(assoc), Some((left, right))) = (&node.assoc, node.children) {
            if a <= node.start && node.end <= b {
                return assoc.count(q, full);
            }
            return Self::visit(nodes, rest, left, a, b, q, full) + Self::visit(nodes, rest, right, a, b, q, full);
        }
        let stride = q.len();
        let (from, to) = (a.max(node.start) as usize, b.min(node.end) as usize);
        rest[from * stride..to * stride]
            .chunks_exact(stride)
            .filter(|p| p.iter().zip(q).all(|(&x, &(lo, hi))| lo <= x && x < hi))
            .count()
    }
}

/// Immutable box-counting structure; safe to query from many threads.
#[derive(Debug)]
pub struct RangeTree {
    dim: usize,
    len: usize,
    axes: Vec<Vec<i64>>,
    perm: Vec<usize>,
    root: Layer,
}

fn bits_for(distinct: usize) -> u32 {
    usize::BITS - distinct.saturating_sub(1).leading_zeros()
}

impl RangeTree {
    pub fn build(ps: &PointSet) -> Result<Self> {
        Self::build_ordered(ps, &(0..ps.dim()).collect::<Vec<_>>())
    }

    /// Builds with the layers nested in `order`, a permutation of the
    /// dimensions, outermost first. Counts do not depend on the order but
    /// query time does.
    pub fn build_ordered(ps: &PointSet, order: &[usize]) -> Result<Self> {
        let d = ps.dim();
        if d == 0 {
            return Err(Error::DimensionZero);
        }
        if order.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: order.len() });
        }
        let mut seen = vec![false; d];
        for &t in order {
            if t >= d || std::mem::replace(&mut seen[t], true) {
                return Err(Error::OrderingMismatch(format!("{order:?} is not a permutation of 0..{d}")));
            }
        }
        let perm = order.to_vec();
        let axes: Vec<Vec<i64>> = perm
            .iter()
            .map(|&t| {
                let mut axis: Vec<i64> = ps.iter().map(|p| p[t]).collect();
                axis.sort_unstable();
                axis.dedup();
                axis
            })
            .collect();
        let mut ranks = Vec::with_capacity(ps.len() * d);
        for p in ps.iter() {
            for (t, &pt) in perm.iter().enumerate() {
                let x = p[pt];
                ranks.push(axes[t].binary_search(&x).expect("coordinate on its axis") as u32);
            }
        }
        let root = Layer::build(&ranks, d);
        Ok(RangeTree { dim: d, len: ps.len(), axes, perm, root })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of stored points inside `b`, counted with multiplicity.
    pub fn count(&self, b: &RangeBox) -> Result<usize> {
        if b.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: b.dim() });
        }
        Ok(self.count_bounds(b.lo(), b.hi()))
    }

    /// [`Self::count`] on raw closed bounds of the right dimension.
    pub(crate) fn count_bounds(&self, lo: &[i64], hi: &[i64]) -> usize {
        debug_assert!(lo.len() == self.dim && hi.len() == self.dim);
        if self.len == 0 {
            return 0;
        }
        const STACK: usize = 16;
        if self.dim <= STACK {
            let mut q = [(0, 0); STACK];
            let mut full = [false; STACK];
            self.count_with(lo, hi, &mut q[..self.dim], &mut full[..self.dim])
        } else {
            self.count_with(lo, hi, &mut vec![(0, 0); self.dim], &mut vec![false; self.dim])
        }
    }

    fn count_with(&self, lo: &[i64], hi: &[i64], q: &mut [Ranks], full: &mut [bool]) -> usize {
        for (t, axis) in self.axes.iter().enumerate() {
            let o = self.perm[t];
            let rl = axis.partition_point(|&c| c < lo[o]) as u32;
            let rh = axis.partition_point(|&c| c <= hi[o]) as u32;
            if rl >= rh {
                return 0;
            }
            full[t] = rl == 0 && rh as usize == axis.len();
            q[t] = (rl, rh);
        }
        self.root.count(q, full)
    }
}
