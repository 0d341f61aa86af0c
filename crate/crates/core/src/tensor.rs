//! Dense multi-index arrays whose axes carry an index kind and variance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::CoreError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Vector,
    Versor,
    Spinor,
    /// Crump-scalar index of the given signed weight; extent 1.
    Bullet(i32),
}

impl Kind {
    pub fn extent(self) -> usize {
        match self {
            Kind::Vector => 10,
            Kind::Versor => 5,
            Kind::Spinor => 4,
            Kind::Bullet(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Axis {
    pub kind: Kind,
    pub upper: bool,
}

impl Axis {
    pub fn up(kind: Kind) -> Self {
        Axis { kind, upper: true }
    }

    pub fn down(kind: Kind) -> Self {
        Axis { kind, upper: false }
    }

    /// Bullet axes are written upper for positive weight.
    pub fn bullet(weight: i32) -> Self {
        Axis { kind: Kind::Bullet(weight), upper: weight >= 0 }
    }

    pub fn extent(&self) -> usize {
        self.kind.extent()
    }

    fn pairs_with(&self, o: &Axis) -> bool {
        match (self.kind, o.kind) {
            (Kind::Bullet(a), Kind::Bullet(b)) => a + b == 0,
            (a, b) => a == b && self.upper != o.upper,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Bullet(w) => write!(f, "bullet({w:+})"),
            k => write!(f, "{:?}{}", k, if self.upper { "^" } else { "_" }),
        }
    }
}

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "V: Serialize", deserialize = "V: Deserialize<'de>"))]
#[serde(try_from = "TensorRepr<V>")]
pub struct GenTensor<V> {
    axes: Vec<Axis>,
    entries: Vec<V>,
}

#[derive(Deserialize)]
struct TensorRepr<V> {
    axes: Vec<Axis>,
    entries: Vec<V>,
}

impl<V> TryFrom<TensorRepr<V>> for GenTensor<V> {
    type Error = CoreError;
    fn try_from(r: TensorRepr<V>) -> Result<Self, CoreError> {
        let n: usize = r.axes.iter().map(|a| a.extent()).product();
        if n != r.entries.len() {
            return Err(CoreError::Shape(format!("expected {n} entries, found {}", r.entries.len())));
        }
        Ok(GenTensor { axes: r.axes, entries: r.entries })
    }
}

impl<V: Ring> GenTensor<V> {
    pub fn zeros(axes: Vec<Axis>) -> Self {
        let n = axes.iter().map(|a| a.extent()).product();
        GenTensor { axes, entries: vec![V::zero(); n] }
    }

    pub fn from_vec(axes: Vec<Axis>, entries: Vec<V>) -> Result<Self, CoreError> {
        GenTensor::try_from(TensorRepr { axes, entries })
    }

    pub fn from_fn(axes: Vec<Axis>, mut f: impl FnMut(&[usize]) -> V) -> Self {
        let mut t = GenTensor::zeros(axes);
        let shape = t.shape();
        for (off, idx) in MultiIndex::new(&shape).enumerate() {
            t.entries[off] = f(&idx);
        }
        t
    }

    pub fn scalar(v: V) -> Self {
        GenTensor { axes: vec![], entries: vec![v] }
    }

    /// Mixed identity `1^a_b` on the given kind.
    pub fn identity(kind: Kind) -> Self {
        GenTensor::from_fn(vec![Axis::up(kind), Axis::down(kind)], |ix| {
            if ix[0] == ix[1] {
                V::one()
            } else {
                V::zero()
            }
        })
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn entries(&self) -> &[V] {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.axes.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.extent()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total bullet weight, summed over bullet axes.
    pub fn bullet_weight(&self) -> i32 {
        self.axes
            .iter()
            .map(|a| match a.kind {
                Kind::Bullet(w) => w,
                _ => 0,
            })
            .sum()
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.axes.len());
        let mut off = 0;
        for (a, &i) in self.axes.iter().zip(idx) {
            debug_assert!(i < a.extent());
            off = off * a.extent() + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &V {
        &self.entries[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: V) {
        let off = self.offset(idx);
        self.entries[off] = v;
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut V {
        let off = self.offset(idx);
        &mut self.entries[off]
    }

    pub fn indices(&self) -> MultiIndex {
        MultiIndex::new(&self.shape())
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &V)> {
        self.indices().zip(self.entries.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero())
    }

    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &V)> {
        self.iter().find(|(_, v)| !v.is_zero())
    }

    pub fn map<W: Ring>(&self, f: impl Fn(&V) -> W) -> GenTensor<W> {
        GenTensor { axes: self.axes.clone(), entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map(|v| v.scale(s))
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn add(&self, o: &Self) -> Result<Self, CoreError> {
        self.zip_with(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, CoreError> {
        self.zip_with(o, |a, b| a.sub(b))
    }

    fn zip_with(&self, o: &Self, f: impl Fn(&V, &V) -> V) -> Result<Self, CoreError> {
        if self.axes != o.axes {
            return Err(CoreError::Shape(format!(
                "axes differ: [{}] vs [{}]",
                fmt_axes(&self.axes),
                fmt_axes(&o.axes)
            )));
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect();
        Ok(GenTensor { axes: self.axes.clone(), entries })
    }

    /// Tensor product; axes of `self` come first.
    pub fn outer(&self, o: &Self) -> Self {
        let mut axes = self.axes.clone();
        axes.extend_from_slice(&o.axes);
        let mut entries = Vec::with_capacity(self.len() * o.len());
        for a in &self.entries {
            for b in &o.entries {
                entries.push(if a.is_zero() || b.is_zero() { V::zero() } else { a.mul(b) });
            }
        }
        GenTensor { axes, entries }
    }

    /// Reorders axes so that new axis `n` is old axis `perm[n]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, CoreError> {
        let r = self.rank();
        let mut seen = vec![false; r];
        if perm.len() != r || perm.iter().any(|&p| p >= r || std::mem::replace(&mut seen[p], true)) {
            return Err(CoreError::Shape(format!("{perm:?} is not a permutation of {r} axes")));
        }
        let axes: Vec<Axis> = perm.iter().map(|&p| self.axes[p]).collect();
        let mut old = vec![0; r];
        Ok(GenTensor::from_fn(axes, |ix| {
            for (n, &p) in perm.iter().enumerate() {
                old[p] = ix[n];
            }
            self.get(&old).clone()
        }))
    }

    /// Sums over a matched upper/lower pair of axes of one tensor.
    pub fn contract(&self, a: usize, b: usize) -> Result<Self, CoreError> {
        self.check_pair(a, b)?;
        let (a, b) = (a.min(b), a.max(b));
        let axes: Vec<Axis> = self
            .axes
            .iter()
            .enumerate()
            .filter(|(n, _)| *n != a && *n != b)
            .map(|(_, x)| *x)
            .collect();
        let n = self.axes[a].extent();
        let mut full = vec![0; self.rank()];
        Ok(GenTensor::from_fn(axes, |ix| {
            let mut it = ix.iter();
            for (pos, slot) in full.iter_mut().enumerate() {
                if pos != a && pos != b {
                    *slot = *it.next().unwrap();
                }
            }
            let mut acc = V::zero();
            for s in 0..n {
                full[a] = s;
                full[b] = s;
                let v = self.get(&full);
                if !v.is_zero() {
                    acc.add_assign(v);
                }
            }
            acc
        }))
    }

    /// Contracts axis `a` of `self` against axis `b` of `o` without forming
    /// the full outer product. Result axes: `self` without `a`, then `o`
    /// without `b`.
    pub fn contract_with(&self, a: usize, o: &Self, b: usize) -> Result<Self, CoreError> {
        if a >= self.rank() || b >= o.rank() {
            return Err(CoreError::Shape(format!("axis out of range: {a} / {b}")));
        }
        if !self.axes[a].pairs_with(&o.axes[b]) {
            return Err(CoreError::KindMismatch { a: format!("#{a} {}", self.axes[a]), b: format!("#{b} {}", o.axes[b]) });
        }
        let mut axes: Vec<Axis> = self.axes.iter().enumerate().filter(|(n, _)| *n != a).map(|(_, x)| *x).collect();
        let left_rank = axes.len();
        axes.extend(o.axes.iter().enumerate().filter(|(n, _)| *n != b).map(|(_, x)| *x));
        let n = self.axes[a].extent();
        let mut li = vec![0; self.rank()];
        let mut ri = vec![0; o.rank()];
        Ok(GenTensor::from_fn(axes, |ix| {
            let (l, r) = ix.split_at(left_rank);
            fill_skipping(&mut li, l, a);
            fill_skipping(&mut ri, r, b);
            let mut acc = V::zero();
            for s in 0..n {
                li[a] = s;
                ri[b] = s;
                let x = self.get(&li);
                if x.is_zero() {
                    continue;
                }
                let y = o.get(&ri);
                if !y.is_zero() {
                    acc.add_assign(&x.mul(y));
                }
            }
            acc
        }))
    }

    /// `t'[..a..] = Σ_b m[a][b] · t[..b..]` on one axis, with scalar `m`.
    pub fn transform_axis(&self, axis: usize, m: &crate::Matrix) -> Self {
        let n = self.axes[axis].extent();
        assert!(m.rows() == n && m.cols() == n, "matrix does not fit axis {axis}");
        let mut out: GenTensor<V> = GenTensor::zeros(self.axes.clone());
        let stride: usize = self.axes[axis + 1..].iter().map(|x| x.extent()).product();
        for (off, v) in self.entries.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let b = (off / stride) % n;
            let base = off - b * stride;
            for a in 0..n {
                let c = m.get(a, b);
                if !c.is_zero() {
                    out.entries[base + a * stride].add_scaled(v, c);
                }
            }
        }
        out
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<(), CoreError> {
        if a >= self.rank() || b >= self.rank() || a == b {
            return Err(CoreError::Shape(format!("cannot contract axes {a} and {b} of a rank-{} tensor", self.rank())));
        }
        if !self.axes[a].pairs_with(&self.axes[b]) {
            return Err(CoreError::KindMismatch { a: format!("#{a} {}", self.axes[a]), b: format!("#{b} {}", self.axes[b]) });
        }
        Ok(())
    }
}

fn fill_skipping(full: &mut [usize], part: &[usize], skip: usize) {
    let mut it = part.iter();
    for (pos, slot) in full.iter_mut().enumerate() {
        if pos != skip {
            *slot = *it.next().unwrap();
        }
    }
}

fn fmt_axes(axes: &[Axis]) -> String {
    axes.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ")
}

impl<V: fmt::Debug> fmt::Debug for GenTensor<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenTensor[{}] {:?}", fmt_axes(&self.axes), self.entries)
    }
}

/// Row-major iterator over all multi-indices of a shape.
pub struct MultiIndex {
    shape: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl MultiIndex {
    pub fn new(shape: &[usize]) -> Self {
        let next = if shape.iter().any(|&n| n == 0) { None } else { Some(vec![0; shape.len()]) };
        MultiIndex { shape: shape.to_vec(), next }
    }
}

impl Iterator for MultiIndex {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut n = cur.clone();
        let mut k = n.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            n[k] += 1;
            if n[k] < self.shape[k] {
                self.next = Some(n);
                break;
            }
            n[k] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_of_identity() {
        let id: GenTensor<Scalar> = GenTensor::identity(Kind::Spinor);
        let t = id.contract(0, 1).unwrap();
        assert_eq!(t.entries()[0], Scalar::int(4));
        assert_eq!(t.rank(), 0);
    }

    #[test]
    fn kind_mismatch_names_both_axes() {
        let t: GenTensor<Scalar> = GenTensor::zeros(vec![Axis::up(Kind::Vector), Axis::down(Kind::Spinor)]);
        let err = t.contract(0, 1).unwrap_err().to_string();
        assert!(err.contains("Vector^") && err.contains("Spinor_"), "{err}");
        let u: GenTensor<Scalar> = GenTensor::zeros(vec![Axis::up(Kind::Vector), Axis::up(Kind::Vector)]);
        assert!(u.contract(0, 1).is_err());
    }

    #[test]
    fn multi_index_order() {
        let v: Vec<Vec<usize>> = MultiIndex::new(&[2, 3]).collect();
        assert_eq!(v.len(), 6);
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(v[3], vec![1, 0]);
        assert_eq!(MultiIndex::new(&[]).count(), 1);
    }

    #[test]
    fn permute_transposes() {
        let t = GenTensor::from_fn(vec![Axis::up(Kind::Spinor), Axis::down(Kind::Spinor)], |ix| {
            Scalar::int((10 * ix[0] + ix[1]) as i64)
        });
        let p = t.permute(&[1, 0]).unwrap();
        assert_eq!(p.get(&[2, 3]), &Scalar::int(32));
        assert!(t.permute(&[0, 0]).is_err());
    }

    #[test]
    fn bullet_axes_pair_by_opposite_weight() {
        let a: GenTensor<Scalar> = GenTensor::from_vec(vec![Axis::bullet(1)], vec![Scalar::int(3)]).unwrap();
        let b: GenTensor<Scalar> = GenTensor::from_vec(vec![Axis::bullet(-1)], vec![Scalar::int(2)]).unwrap();
        let ab = a.outer(&b);
        assert_eq!(ab.bullet_weight(), 0);
        assert_eq!(ab.contract(0, 1).unwrap().entries()[0], Scalar::int(6));
        assert!(a.outer(&a).contract(0, 1).is_err());
    }
}
