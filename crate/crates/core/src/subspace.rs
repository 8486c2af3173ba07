//! Subspaces of F_q^n in canonical reduced row echelon form.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gfq::{Field, FieldElement, FieldSpec};

/// Largest Grassmannian `enumerate_grassmannian` will stream.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

pub type Vector = Vec<FieldElement>;

/// A subspace of F_q^n, held as its canonical RREF basis.
///
/// Two values are equal iff they describe the same subspace. Ordering is by
/// ambient dimension, then dimension, then the concatenated row encoding.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    n: usize,
    rows: Vec<Vector>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q() && self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.q(), self.n, self.rows.len(), &self.rows).cmp(&(
            other.field.q(),
            other.n,
            other.rows.len(),
            &other.rows,
        ))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ">")
    }
}

/// Row-reduces `rows` in place to canonical RREF and drops zero rows.
/// Returns the pivot columns.
pub(crate) fn rref(field: &FieldSpec, rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]).expect("nonzero pivot");
        if inv != FieldElement::ONE {
            for x in rows[r][c..].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = field.neg(rows[i][c]);
            let (pivot_row, target) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for j in c..ncols {
                if !pivot_row[j].is_zero() {
                    target[j] = field.add(target[j], field.mul(factor, pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a list of vectors (consumes a copy).
pub fn rank(field: &FieldSpec, rows: &[Vector], ncols: usize) -> usize {
    let mut m: Vec<Vector> = rows.to_vec();
    rref(field, &mut m, ncols).len()
}

impl Subspace {
    /// The zero subspace of F_q^n.
    pub fn zero(field: &Field, n: usize) -> Self {
        Subspace { field: field.clone(), n, rows: Vec::new() }
    }

    /// The whole space F_q^n.
    pub fn full(field: &Field, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![FieldElement::ZERO; n];
                v[i] = FieldElement::ONE;
                v
            })
            .collect();
        Subspace { field: field.clone(), n, rows }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span(field: &Field, n: usize, vectors: &[Vector]) -> Result<Self> {
        let q = field.q();
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            if let Some(x) = v.iter().find(|x| x.0 as u32 >= q) {
                return Err(Error::InvalidElement { idx: x.0 as u32, q });
            }
        }
        let mut rows = vectors.to_vec();
        rref(field, &mut rows, n);
        Ok(Subspace { field: field.clone(), n, rows })
    }

    /// Builds a subspace from integer-encoded rows, canonicalizing them.
    pub fn from_rows(field: &Field, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let q = field.q();
        let vectors = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| {
                        if x < q {
                            Ok(FieldElement(x as u8))
                        } else {
                            Err(Error::InvalidElement { idx: x, q })
                        }
                    })
                    .collect::<Result<Vector>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::span(field, n, &vectors)
    }

    /// Rows as plain integers, the serialized form.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.0 as u32).collect()).collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field.q() != other.field.q() || self.n != other.n {
            return Err(Error::AmbientMismatch {
                q1: self.field.q(),
                n1: self.n,
                q2: other.field.q(),
                n2: other.n,
            });
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: v.len() });
        }
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(self.pivots().iter()) {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for j in pc..self.n {
                w[j] = f.sub(w[j], f.mul(c, row[j]));
            }
        }
        Ok(w.iter().all(|x| x.is_zero()))
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for r in &self.rows {
            if !other.contains_vector(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// dim(X + Y) without materializing the sum.
    pub fn dim_sum(&self, other: &Subspace) -> Result<usize> {
        self.check_ambient(other)?;
        if self.is_zero() {
            return Ok(other.dim());
        }
        if other.is_zero() {
            return Ok(self.dim());
        }
        let stacked: Vec<Vector> = self.rows.iter().chain(other.rows.iter()).cloned().collect();
        Ok(rank(&self.field, &stacked, self.n))
    }

    pub fn dim_intersection(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.dim_sum(other)?)
    }

    /// Sum and intersection in one Zassenhaus elimination.
    pub fn sum_and_intersection(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        self.check_ambient(other)?;
        let n = self.n;
        let mut m: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for r in &self.rows {
            let mut row = r.clone();
            row.extend_from_slice(r);
            m.push(row);
        }
        for r in &other.rows {
            let mut row = r.clone();
            row.extend(std::iter::repeat_n(FieldElement::ZERO, n));
            m.push(row);
        }
        rref(&self.field, &mut m, 2 * n);
        let split = m
            .iter()
            .position(|r| r[..n].iter().all(|x| x.is_zero()))
            .unwrap_or(m.len());
        let sum_rows: Vec<Vector> = m[..split].iter().map(|r| r[..n].to_vec()).collect();
        let int_rows: Vec<Vector> = m[split..].iter().map(|r| r[n..].to_vec()).collect();
        let sum = Subspace { field: self.field.clone(), n, rows: sum_rows };
        let int = Subspace { field: self.field.clone(), n, rows: int_rows };
        Ok((sum, int))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.sum_and_intersection(other)?.0)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.sum_and_intersection(other)?.1)
    }

    /// Subspace distance `dim(X + Y) - dim(X ∩ Y)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        let s = self.dim_sum(other)?;
        Ok(2 * s - self.dim() - other.dim())
    }

    /// Orthogonal complement under the standard bilinear form.
    pub fn orthogonal_complement(&self) -> Subspace {
        let f = &self.field;
        let pivots = self.pivots();
        let mut basis = Vec::with_capacity(self.n - self.dim());
        for free in (0..self.n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![FieldElement::ZERO; self.n];
            v[free] = FieldElement::ONE;
            for (row, &pc) in self.rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            basis.push(v);
        }
        Subspace::span(f, self.n, &basis).expect("well-formed basis")
    }

    /// Image of a subspace of F_q^m under the linear map sending the i-th
    /// standard basis vector to `basis[i]` in F_q^n.
    pub fn image_under(&self, basis: &[Vector], n: usize) -> Result<Subspace> {
        if basis.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: basis.len() });
        }
        let f = &self.field;
        let vectors: Vec<Vector> = self
            .rows
            .iter()
            .map(|coef| {
                let mut v = vec![FieldElement::ZERO; n];
                for (c, b) in coef.iter().zip(basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = f.add(*x, f.mul(*c, *y));
                    }
                }
                v
            })
            .collect();
        Subspace::span(f, n, &vectors)
    }

    /// All nonzero vectors of the subspace, in lexicographic coefficient order.
    pub fn nonzero_vectors(&self) -> Vec<Vector> {
        let f = &self.field;
        let k = self.dim();
        let q = f.order();
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total.saturating_sub(1));
        for mut code in 1..total {
            let mut v = vec![FieldElement::ZERO; self.n];
            for row in self.rows.iter().rev() {
                let c = FieldElement((code % q) as u8);
                code /= q;
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(c, *y));
                }
            }
            out.push(v);
        }
        out
    }
}

/// Exact Gaussian binomial coefficient `[n k]_q`; zero when `k > n`.
pub fn gaussian_binomial(q: u32, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let one = BigUint::one();
    let mut acc = BigUint::one();
    // after step i, acc = [n, i+1]_q
    for i in 0..k {
        acc *= q.pow((n - i) as u32) - &one;
        acc /= q.pow((i + 1) as u32) - &one;
    }
    acc
}

/// `|P_q(n)|`, the number of all subspaces of F_q^n.
pub fn projective_space_size(q: u32, n: usize) -> BigUint {
    (0..=n).map(|k| gaussian_binomial(q, n, k)).sum()
}

/// One pivot pattern of the Grassmannian: an odometer over its free entries.
struct PivotStream {
    template: Vec<u8>,
    free: Vec<usize>,
    q: u8,
    done: bool,
}

impl PivotStream {
    fn new(n: usize, pivots: &[usize], q: u8) -> Self {
        let k = pivots.len();
        let mut template = vec![0u8; n * k];
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            template[r * n + p] = 1;
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push(r * n + c);
                }
            }
        }
        PivotStream { template, free, q, done: false }
    }

    fn advance(&mut self) {
        for &pos in self.free.iter().rev() {
            if self.template[pos] + 1 < self.q {
                self.template[pos] += 1;
                return;
            }
            self.template[pos] = 0;
        }
        self.done = true;
    }
}

/// Streams every k-dimensional subspace of F_q^n once, in lexicographic
/// order of the concatenated RREF rows.
pub struct Grassmannian {
    field: Field,
    n: usize,
    k: usize,
    streams: Vec<PivotStream>,
    heap: BinaryHeap<Reverse<(Vec<u8>, usize)>>,
}

impl Iterator for Grassmannian {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        let Reverse((enc, sid)) = self.heap.pop()?;
        let s = &mut self.streams[sid];
        s.advance();
        if !s.done {
            self.heap.push(Reverse((s.template.clone(), sid)));
        }
        let rows = if self.n == 0 {
            vec![Vec::new(); self.k]
        } else {
            enc.chunks(self.n)
                .map(|c| c.iter().map(|&x| FieldElement(x)).collect())
                .collect()
        };
        Some(Subspace { field: self.field.clone(), n: self.n, rows })
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Streams G_q(n, k); refuses Grassmannians larger than [`ENUMERATION_GUARD`].
pub fn enumerate_grassmannian(field: &Field, n: usize, k: usize) -> Result<Grassmannian> {
    if k > n {
        return Err(Error::BadDimensions(format!("k = {k} > n = {n}")));
    }
    let count = gaussian_binomial(field.q(), n, k);
    if count > BigUint::from(ENUMERATION_GUARD) {
        return Err(Error::TooLarge(count.to_string()));
    }
    let q = field.q() as u8;
    let streams: Vec<PivotStream> =
        combinations(n, k).iter().map(|p| PivotStream::new(n, p, q)).collect();
    let heap = streams
        .iter()
        .enumerate()
        .map(|(i, s)| Reverse((s.template.clone(), i)))
        .collect();
    Ok(Grassmannian { field: field.clone(), n, k, streams, heap })
}

/// Collects G_q(n, k) into a vector.
pub fn grassmannian(field: &Field, n: usize, k: usize) -> Result<Vec<Subspace>> {
    Ok(enumerate_grassmannian(field, n, k)?.collect())
}

/// Size of G_q(n, k) as a machine integer, if it fits.
pub fn grassmannian_size(q: u32, n: usize, k: usize) -> Option<u64> {
    gaussian_binomial(q, n, k).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::field;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[u8]) -> Vector {
        xs.iter().map(|&x| FieldElement(x)).collect()
    }

    fn random_subspace(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Subspace {
        let gens = rng.gen_range(0..=n + 1);
        let vs: Vec<Vector> = (0..gens)
            .map(|_| (0..n).map(|_| FieldElement(rng.gen_range(0..f.q()) as u8)).collect())
            .collect();
        Subspace::span(f, n, &vs).unwrap()
    }

    #[test]
    fn span_examples() {
        let f = field(2).unwrap();
        let z = Subspace::span(&f, 3, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        let s = Subspace::span(&f, 3, &[v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(s.rows(), &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(
            Subspace::span(&f, 3, &[v(&[1, 0])]).unwrap_err(),
            Error::DimensionMismatch { expected: 3, found: 2 }
        );
    }

    #[test]
    fn span_in_gf8_as_f2_cubed() {
        let f8 = field(8).unwrap();
        let f2 = field(2).unwrap();
        let vecof = |i: i64| -> Vector {
            f8.coefficients(f8.alpha_pow(i)).into_iter().map(FieldElement).collect()
        };
        let a = Subspace::span(&f2, 3, &[vecof(0), vecof(1)]).unwrap();
        let b = Subspace::span(&f2, 3, &[vecof(0), vecof(1), vecof(3)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn sum_and_intersection_small() {
        let f = field(2).unwrap();
        let x = Subspace::span(&f, 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let y = Subspace::span(&f, 3, &[v(&[1, 0, 0]), v(&[0, 0, 1])]).unwrap();
        let z = Subspace::zero(&f, 3);
        assert_eq!(x.sum(&z).unwrap(), x);
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(&f, 3));
        assert_eq!(x.intersect(&y).unwrap().dim(), 1);
        assert_eq!(x.distance(&y).unwrap(), 2);
        assert_eq!(x.distance(&x).unwrap(), 0);
        assert_eq!(x.distance(&z).unwrap(), 2);
        let other = Subspace::zero(&f, 4);
        assert!(matches!(x.sum(&other), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(x.intersect(&other), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(x.distance(&other), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn fano_codewords_meet_in_alpha() {
        let f8 = field(8).unwrap();
        let f2 = field(2).unwrap();
        let vecof = |i: i64| -> Vector {
            f8.coefficients(f8.alpha_pow(i)).into_iter().map(FieldElement).collect()
        };
        let b0 = Subspace::span(&f2, 3, &[vecof(0), vecof(1)]).unwrap();
        let b1 = Subspace::span(&f2, 3, &[vecof(1), vecof(2)]).unwrap();
        let i = b0.intersect(&b1).unwrap();
        assert_eq!(i, Subspace::span(&f2, 3, &[vecof(1)]).unwrap());
    }

    #[test]
    fn complement_examples() {
        let f = field(2).unwrap();
        assert_eq!(Subspace::zero(&f, 4).orthogonal_complement(), Subspace::full(&f, 4));
        let x = Subspace::span(&f, 4, &[v(&[1, 0, 1, 1]), v(&[0, 1, 1, 0])]).unwrap();
        assert_eq!(x.orthogonal_complement().dim(), 2);
        let so = Subspace::span(&f, 4, &[v(&[1, 1, 0, 0]), v(&[0, 0, 1, 1])]).unwrap();
        let perp = so.orthogonal_complement();
        assert_eq!(so.intersect(&perp).unwrap(), so);
    }

    #[test]
    fn complement_is_orthogonal_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2, 3, 4, 5, 9] {
            let f = field(q).unwrap();
            for _ in 0..100 {
                let n = rng.gen_range(1..=6);
                let x = random_subspace(&f, n, &mut rng);
                let y = x.orthogonal_complement();
                assert_eq!(x.dim() + y.dim(), n);
                assert_eq!(y.orthogonal_complement(), x);
                for a in x.rows() {
                    for b in y.rows() {
                        let dot = a
                            .iter()
                            .zip(b)
                            .fold(FieldElement::ZERO, |s, (p, r)| f.add(s, f.mul(*p, *r)));
                        assert!(dot.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_under_shuffle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..10_000 {
            let q = [2, 3, 4, 5, 7, 8, 9][i % 7];
            let f = field(q).unwrap();
            let n = rng.gen_range(1..=5);
            let mut gens: Vec<Vector> = (0..rng.gen_range(0..=4))
                .map(|_| (0..n).map(|_| FieldElement(rng.gen_range(0..q) as u8)).collect())
                .collect();
            let a = Subspace::span(&f, n, &gens).unwrap();
            gens.shuffle(&mut rng);
            // add a random combination of the generators
            if gens.len() >= 2 {
                let c = FieldElement(rng.gen_range(0..q) as u8);
                let mix: Vector =
                    gens[0].iter().zip(&gens[1]).map(|(x, y)| f.add(*x, f.mul(c, *y))).collect();
                gens.push(mix);
            }
            let b = Subspace::span(&f, n, &gens).unwrap();
            assert_eq!(a, b);
            for r in a.rows() {
                assert!(a.contains_vector(r).unwrap());
            }
        }
    }

    #[test]
    fn modular_law_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for i in 0..1000 {
            let q = [2, 3, 4, 5][i % 4];
            let f = field(q).unwrap();
            let n = rng.gen_range(1..=6);
            let x = random_subspace(&f, n, &mut rng);
            let y = random_subspace(&f, n, &mut rng);
            let (s, int) = x.sum_and_intersection(&y).unwrap();
            assert_eq!(s.dim() + int.dim(), x.dim() + y.dim());
            assert_eq!(s.dim(), x.dim_sum(&y).unwrap());
            assert!(x.is_subspace_of(&s).unwrap() && y.is_subspace_of(&s).unwrap());
            assert!(int.is_subspace_of(&x).unwrap() && int.is_subspace_of(&y).unwrap());
            assert!(s.dim() >= x.dim().max(y.dim()));
        }
    }

    #[test]
    fn modular_law_all_planes_of_f2_cubed() {
        let f = field(2).unwrap();
        let planes = grassmannian(&f, 3, 2).unwrap();
        for x in &planes {
            for y in &planes {
                let (s, i) = x.sum_and_intersection(y).unwrap();
                assert_eq!(s.dim() + i.dim(), 4);
                if x != y {
                    assert_eq!(s.dim(), 3);
                    assert_eq!(i.dim(), 1);
                }
            }
        }
    }

    #[test]
    fn metric_axioms_on_p2_3() {
        let f = field(2).unwrap();
        let all: Vec<Subspace> =
            (0..=3).flat_map(|k| grassmannian(&f, 3, k).unwrap()).collect();
        assert_eq!(all.len(), 16);
        for x in &all {
            assert_eq!(x.distance(&Subspace::zero(&f, 3)).unwrap(), x.dim());
            for y in &all {
                let dxy = x.distance(y).unwrap();
                assert_eq!(dxy, y.distance(x).unwrap());
                assert_eq!(dxy == 0, x == y);
                for z in &all {
                    assert!(dxy <= x.distance(z).unwrap() + z.distance(y).unwrap());
                }
            }
        }
    }

    #[test]
    fn triangle_inequality_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for i in 0..500 {
            let f = field([3, 4, 5, 7][i % 4]).unwrap();
            let n = rng.gen_range(1..=5);
            let x = random_subspace(&f, n, &mut rng);
            let y = random_subspace(&f, n, &mut rng);
            let z = random_subspace(&f, n, &mut rng);
            let d = |a: &Subspace, b: &Subspace| a.distance(b).unwrap();
            assert!(d(&x, &y) <= d(&x, &z) + d(&z, &y));
            assert_eq!(d(&x, &y), d(&y, &x));
        }
    }

    #[test]
    fn grassmannian_counts() {
        let f = field(2).unwrap();
        assert_eq!(enumerate_grassmannian(&f, 3, 2).unwrap().count(), 7);
        assert_eq!(enumerate_grassmannian(&f, 4, 2).unwrap().count(), 35);
        assert_eq!(enumerate_grassmannian(&f, 5, 0).unwrap().count(), 1);
        for q in [2, 3, 4, 5] {
            let f = field(q).unwrap();
            for n in 0..=6 {
                for k in 0..=n {
                    let expect = gaussian_binomial(q, n, k).to_u64().unwrap();
                    if expect > 200_000 {
                        continue;
                    }
                    let all: Vec<Subspace> = enumerate_grassmannian(&f, n, k).unwrap().collect();
                    assert_eq!(all.len() as u64, expect, "q={q} n={n} k={k}");
                    for w in all.windows(2) {
                        assert!(w[0].rows() < w[1].rows(), "lex order q={q} n={n} k={k}");
                    }
                    for s in &all {
                        assert_eq!(s.dim(), k);
                        let again = Subspace::span(&f, n, s.rows()).unwrap();
                        assert_eq!(&again, s);
                    }
                }
            }
        }
    }

    #[test]
    fn grassmannian_guard() {
        let f = field(3).unwrap();
        assert!(matches!(enumerate_grassmannian(&f, 8, 4), Err(Error::TooLarge(_))));
        assert!(matches!(enumerate_grassmannian(&f, 2, 3), Err(Error::BadDimensions(_))));
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(3, 4, 1), BigUint::from(40u32));
        assert_eq!(gaussian_binomial(2, 4, 2), BigUint::from(35u32));
        for q in [2, 3, 5, 32] {
            for n in 0..10 {
                assert_eq!(gaussian_binomial(q, n, 0), BigUint::one());
                for j in 0..=n {
                    assert_eq!(gaussian_binomial(q, n, j), gaussian_binomial(q, n, n - j));
                }
            }
        }
    }

    #[test]
    fn projective_sizes() {
        assert_eq!(projective_space_size(3, 3), BigUint::from(28u32));
        assert_eq!(projective_space_size(7, 0), BigUint::one());
        assert_eq!(projective_space_size(3, 8), BigUint::from(127_902_864u64));
    }

    #[test]
    fn image_under_basis() {
        let f = field(3).unwrap();
        let t = vec![v(&[1, 0, 0, 2]), v(&[0, 1, 0, 1]), v(&[0, 0, 1, 1])];
        let tspace = Subspace::span(&f, 4, &t).unwrap();
        for p in grassmannian(&f, 3, 2).unwrap() {
            let img = p.image_under(&t, 4).unwrap();
            assert_eq!(img.dim(), 2);
            assert!(img.is_subspace_of(&tspace).unwrap());
        }
    }

    #[test]
    fn nonzero_vector_listing() {
        let f = field(3).unwrap();
        let x = Subspace::span(&f, 3, &[v(&[1, 0, 2]), v(&[0, 1, 1])]).unwrap();
        let vs = x.nonzero_vectors();
        assert_eq!(vs.len(), 8);
        for w in &vs {
            assert!(x.contains_vector(w).unwrap());
        }
    }
}
