//! Steiner triple systems and block-design parameter checks.
//!
//! Points are 0-based everywhere.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Steiner triple system on points `0..v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sts {
    pub v: usize,
    pub triples: Vec<[usize; 3]>,
}

impl Sts {
    fn from_raw(v: usize, raw: impl IntoIterator<Item = [usize; 3]>) -> Self {
        let set: BTreeSet<[usize; 3]> = raw
            .into_iter()
            .map(|mut t| {
                t.sort_unstable();
                t
            })
            .collect();
        Sts { v, triples: set.into_iter().collect() }
    }

    /// Block count.
    pub fn b(&self) -> usize {
        self.triples.len()
    }

    /// Replication number `(v - 1) / 2`.
    pub fn r(&self) -> usize {
        (self.v.saturating_sub(1)) / 2
    }

    /// `third[a][b]` is the third point of the triple through `a` and `b`;
    /// `None` on the diagonal or for uncovered pairs.
    pub fn third_point_table(&self) -> Vec<Vec<Option<usize>>> {
        let mut t = vec![vec![None; self.v]; self.v];
        for &[a, b, c] in &self.triples {
            t[a][b] = Some(c);
            t[b][a] = Some(c);
            t[a][c] = Some(b);
            t[c][a] = Some(b);
            t[b][c] = Some(a);
            t[c][b] = Some(a);
        }
        t
    }

    pub fn verify(&self) -> StsCheck {
        verify_sts(self.v, &self.triples)
    }

    /// Whether the Steiner quasigroup `x∘y = third(x, y)`, `x∘x = e`, with an
    /// adjoined identity `e`, is associative.
    pub fn lift_is_associative(&self) -> bool {
        // element 0 is the identity, point p is element p + 1
        let third = self.third_point_table();
        let m = self.v + 1;
        let op = |x: usize, y: usize| -> usize {
            if x == 0 {
                y
            } else if y == 0 {
                x
            } else if x == y {
                0
            } else {
                third[x - 1][y - 1].map_or(usize::MAX, |c| c + 1)
            }
        };
        for x in 0..m {
            for y in 0..m {
                let xy = op(x, y);
                if xy == usize::MAX {
                    return false;
                }
                for z in 0..m {
                    let l = op(xy, z);
                    let r = op(x, op(y, z));
                    if l != r || l == usize::MAX {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum StsViolation {
    /// A triple with a repeated or out-of-range point.
    BadTriple { index: usize },
    Uncovered { pair: [usize; 2] },
    Overcovered { pair: [usize; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StsCheck {
    pub valid: bool,
    pub violation: Option<StsViolation>,
}

/// True iff every pair of points lies in exactly one triple.
pub fn verify_sts(v: usize, triples: &[[usize; 3]]) -> StsCheck {
    let fail = |violation| StsCheck { valid: false, violation: Some(violation) };
    let mut cover = vec![0u32; v * v];
    for (index, t) in triples.iter().enumerate() {
        let [a, b, c] = *t;
        if a >= v || b >= v || c >= v || a == b || b == c || a == c {
            return fail(StsViolation::BadTriple { index });
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let (x, y) = (x.min(y), x.max(y));
            cover[x * v + y] += 1;
        }
    }
    for x in 0..v {
        for y in x + 1..v {
            match cover[x * v + y] {
                1 => {}
                0 => return fail(StsViolation::Uncovered { pair: [x, y] }),
                _ => return fail(StsViolation::Overcovered { pair: [x, y] }),
            }
        }
    }
    StsCheck { valid: true, violation: None }
}

/// A deterministic STS(v): Bose for `v ≡ 3 (mod 6)`, Skolem for `v ≡ 1 (mod 6)`.
pub fn sts_make(v: usize) -> Result<Sts> {
    if v < 3 {
        return Err(Error::NoSuchSystem(v));
    }
    match v % 6 {
        3 => Ok(bose(v)),
        1 => Ok(skolem(v)),
        _ => Err(Error::NoSuchSystem(v)),
    }
}

fn bose(v: usize) -> Sts {
    let n = v / 3;
    let t = (n - 1) / 2;
    let pt = |x: usize, i: usize| x + n * (i % 3);
    // idempotent commutative quasigroup on Z_n
    let op = |x: usize, y: usize| (t + 1) * (x + y) % n;
    let mut raw = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..n {
        raw.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..n {
        for y in x + 1..n {
            for i in 0..3 {
                raw.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    Sts::from_raw(v, raw)
}

fn skolem(v: usize) -> Sts {
    let t = (v - 1) / 6;
    let n = 2 * t;
    let inf = v - 1;
    let pt = |x: usize, i: usize| x + n * (i % 3);
    // half-idempotent commutative quasigroup on Z_2t: relabeled Cayley table of Z_2t
    let op = |x: usize, y: usize| {
        let s = (x + y) % n;
        if s % 2 == 0 {
            s / 2
        } else {
            t + s / 2
        }
    };
    let mut raw = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..t {
        raw.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            raw.push([inf, pt(x + t, i), pt(x, i + 1)]);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            for i in 0..3 {
                raw.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    Sts::from_raw(v, raw)
}

/// The projective STS on the nonzero vectors of F_2^m: point `p` is the
/// vector with integer encoding `p + 1`, and triples are `{x, y, x ⊕ y}`.
pub fn sts_boolean(m: u32) -> Result<Sts> {
    if !(2..=20).contains(&m) {
        return Err(Error::BadDimensions(format!("m = {m} must be in 2..=20")));
    }
    let v = (1usize << m) - 1;
    let mut raw = Vec::with_capacity(v * (v - 1) / 6);
    for x in 1..=v {
        for y in x + 1..=v {
            let z = x ^ y;
            if z > y {
                raw.push([x - 1, y - 1, z - 1]);
            }
        }
    }
    Ok(Sts::from_raw(v, raw))
}

/// Parameters of a family of blocks on `0..v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: usize,
    pub b: usize,
    /// Block size, when uniform.
    pub k: Option<usize>,
    /// `deg(x)` for each point.
    pub degrees: Vec<usize>,
    /// Replication number, when every point has the same degree.
    pub r: Option<usize>,
    /// Number of blocks through each pair, when constant.
    pub lambda: Option<usize>,
    /// Common size of pairwise block intersections, when constant (needs b ≥ 2).
    pub intersection: Option<usize>,
    pub uniform: bool,
    /// Uniform, constant positive intersection, and b = v.
    pub symmetric: bool,
    /// `r(k-1) = λ(v-1)` and `bk = vr`, when the family is a regular design.
    pub identities_hold: Option<bool>,
    /// `b ≤ v` for an intersecting family with positive intersection size.
    pub fisher_holds: Option<bool>,
    /// Fewer than two blocks, or blocks covering every point.
    pub degenerate: bool,
}

pub fn design_params(v: usize, family: &[Vec<usize>]) -> Result<DesignParams> {
    if family.is_empty() {
        return Err(Error::BadDimensions("empty family".into()));
    }
    let blocks: Vec<BTreeSet<usize>> = family.iter().map(|b| b.iter().copied().collect()).collect();
    for (i, (raw, set)) in family.iter().zip(&blocks).enumerate() {
        if raw.len() != set.len() || set.iter().any(|&p| p >= v) {
            return Err(Error::BadDimensions(format!("block {i} is not a subset of 0..{v}")));
        }
    }
    let distinct: BTreeSet<&BTreeSet<usize>> = blocks.iter().collect();
    if distinct.len() != blocks.len() {
        return Err(Error::BadDimensions("repeated block".into()));
    }

    let b = blocks.len();
    let k0 = blocks[0].len();
    let uniform = blocks.iter().all(|s| s.len() == k0);
    let k = uniform.then_some(k0);

    let mut degrees = vec![0usize; v];
    for s in &blocks {
        for &p in s {
            degrees[p] += 1;
        }
    }
    let r = degrees.first().copied().filter(|&r0| degrees.iter().all(|&d| d == r0));

    let mut pair_cover: Option<usize> = None;
    let mut balanced = v >= 2;
    'outer: for x in 0..v {
        for y in x + 1..v {
            let c = blocks.iter().filter(|s| s.contains(&x) && s.contains(&y)).count();
            match pair_cover {
                None => pair_cover = Some(c),
                Some(l) if l != c => {
                    balanced = false;
                    break 'outer;
                }
                _ => {}
            }
        }
    }
    let lambda = if balanced { pair_cover } else { None };

    let mut intersection: Option<usize> = None;
    let mut constant_int = b >= 2;
    'blocks: for i in 0..b {
        for j in i + 1..b {
            let c = blocks[i].intersection(&blocks[j]).count();
            match intersection {
                None => intersection = Some(c),
                Some(l) if l != c => {
                    constant_int = false;
                    break 'blocks;
                }
                _ => {}
            }
        }
    }
    let intersection = if constant_int { intersection } else { None };

    let symmetric = uniform && intersection.is_some_and(|l| l >= 1) && b == v;
    let identities_hold = match (k, r, lambda) {
        (Some(k), Some(r), Some(l)) => Some(r * (k.max(1) - 1) == l * (v - 1) && b * k == v * r),
        _ => None,
    };
    let fisher_holds = intersection.filter(|&l| l >= 1).map(|_| b <= v);
    let degenerate = b < 2 || k == Some(v);

    Ok(DesignParams {
        v,
        b,
        k,
        degrees,
        r,
        lambda,
        intersection,
        uniform,
        symmetric,
        identities_hold,
        fisher_holds,
        degenerate,
    })
}

/// Returns the order `p` if the blocks form a projective plane on `0..v`.
pub fn is_projective_plane(v: usize, family: &[Vec<usize>]) -> Option<usize> {
    let p = (1..v).find(|p| p * p + p + 1 == v)?;
    if family.len() != v || family.iter().any(|b| b.len() != p + 1) {
        return None;
    }
    let params = design_params(v, family).ok()?;
    (params.lambda == Some(1)).then_some(p)
}
