//! Equidistant code constructions and the closed-form size bounds.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::designs::{sts_make, Sts};
use crate::error::{Error, Result};
use crate::gfq::{self, Field, FieldElement};
use crate::lincode::LinearCode;
use crate::subspace::{enumerate_grassmannian, gaussian_binomial, projective_space_size, Subspace, Vector};

/// Uniform family of `k`-subspaces pairwise meeting in dimension `lambda`,
/// kept in canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectingFamily {
    field: Field,
    n: usize,
    k: usize,
    lambda: usize,
    members: Vec<Subspace>,
}

impl IntersectingFamily {
    pub fn new(field: &Field, n: usize, k: usize, lambda: usize, mut members: Vec<Subspace>) -> Result<Self> {
        if lambda >= k && members.len() > 1 {
            return Err(Error::NotIntersecting(format!("lambda = {lambda} must be below k = {k}")));
        }
        for (i, m) in members.iter().enumerate() {
            if m.field().q() != field.q() || m.n() != n {
                return Err(Error::AmbientMismatch { q1: field.q(), n1: n, q2: m.field().q(), n2: m.n() });
            }
            if m.dim() != k {
                return Err(Error::NotIntersecting(format!("member {i} has dimension {} != {k}", m.dim())));
            }
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotIntersecting(format!("repeated member {:?}", w[0])));
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                let d = members[i].dim_intersection(&members[j])?;
                if d != lambda {
                    return Err(Error::NotIntersecting(format!(
                        "members {i} and {j} meet in dimension {d}, expected {lambda}"
                    )));
                }
            }
        }
        Ok(IntersectingFamily { field: field.clone(), n, k, lambda, members })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// An intersecting family whose pairwise intersections all equal `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sunflower {
    pub family: IntersectingFamily,
    pub center: Subspace,
}

fn f2() -> Field {
    gfq::field(2).expect("F_2")
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![FieldElement::ZERO; n];
    v[i] = FieldElement::ONE;
    v
}

/// `U = {0} ∪ {⟨α^i, α^{i+1}⟩ : 0 ≤ i ≤ 6}` in P_2(3) with α a root of
/// x^3 + x + 1. Codeword `i + 1` is `⟨α^i, α^{i+1}⟩`.
pub fn fano_code() -> LinearCode {
    let f8 = gfq::field(8).expect("F_8");
    let f = f2();
    let vec_of = |x: FieldElement| -> Vector { f8.coefficients(x).into_iter().map(FieldElement).collect() };
    let mut words = vec![Subspace::zero(&f, 3)];
    for i in 0..7 {
        let a = f8.alpha_pow(i);
        let b = f8.alpha_pow(i + 1);
        words.push(Subspace::span(&f, 3, &[vec_of(a), vec_of(b)]).expect("F_2^3"));
    }
    let index: HashMap<Subspace, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let rule = |i: usize, j: usize| -> usize {
        match (i, j) {
            (0, x) | (x, 0) => x,
            (x, y) if x == y => 0,
            (x, y) => {
                let (a, b) = (x as i64 - 1, y as i64 - 1);
                let u = f8.add(f8.alpha_pow(a), f8.alpha_pow(b));
                let w = f8.add(f8.alpha_pow(a + 1), f8.alpha_pow(b + 1));
                let s = Subspace::span(&f, 3, &[vec_of(u), vec_of(w)]).expect("F_2^3");
                index[&s]
            }
        }
    };
    LinearCode::with_rule(&f, 3, words, rule).expect("well-formed Fano code")
}

/// All `k`-subspaces of F_q^n containing `center`. These pairwise meet in
/// exactly the center only when `k = dim center + 1` (or `k = n`).
pub fn sunflower(field: &Field, n: usize, center: &Subspace, k: usize) -> Result<Sunflower> {
    let t = center.dim();
    if center.n() != n || center.field().q() != field.q() {
        return Err(Error::AmbientMismatch { q1: field.q(), n1: n, q2: center.field().q(), n2: center.n() });
    }
    if !(t < k && k <= n) {
        return Err(Error::BadDimensions(format!("need dim center {t} < k {k} <= n {n}")));
    }
    if k > t + 1 && k < n {
        return Err(Error::BadDimensions(format!(
            "k-subspaces through a {t}-dim center do not pairwise meet in it for k = {k}"
        )));
    }
    let pivots = center.pivots();
    let complement: Vec<Vector> = (0..n).filter(|c| !pivots.contains(c)).map(|c| unit(n, c)).collect();
    let mut members = Vec::new();
    for petal in enumerate_grassmannian(field, n - t, k - t)? {
        let img = petal.image_under(&complement, n)?;
        members.push(img.sum(center)?);
    }
    let family = IntersectingFamily::new(field, n, k, t, members)?;
    Ok(Sunflower { family, center: center.clone() })
}

/// Lexicographically least `dim`-subspace of F_q^n.
pub fn least_subspace(field: &Field, n: usize, dim: usize) -> Result<Subspace> {
    enumerate_grassmannian(field, n, dim)?
        .next()
        .ok_or_else(|| Error::BadDimensions(format!("no {dim}-subspace of F^{n}")))
}

/// `{0} ∪ {⟨e_0, v⟩ : 0 ≠ v ∈ ⟨e_1, …, e_{n-1}⟩}` in P_2(n) with
/// `⟨e_0, v⟩ ⊞ ⟨e_0, w⟩ = ⟨e_0, v + w⟩`. Codeword `i` has `v` with bit `b`
/// of `i` as the coefficient of `e_{b+1}`.
pub fn sunflower_code_binary(n: usize) -> Result<LinearCode> {
    if !(3..=20).contains(&n) {
        return Err(Error::BadDimensions(format!("binary sunflower code needs 3 <= n <= 20, got {n}")));
    }
    let f = f2();
    let mut words = vec![Subspace::zero(&f, n)];
    for i in 1..1usize << (n - 1) {
        let w: Vector = (0..n)
            .map(|c| FieldElement((c > 0 && (i >> (c - 1)) & 1 == 1) as u8))
            .collect();
        words.push(Subspace::span(&f, n, &[unit(n, 0), w])?);
    }
    LinearCode::with_rule(&f, n, words, |i, j| i ^ j)
}

/// All 2-subspaces of a fixed 3-subspace `t` of F_q^4 (lexicographically
/// least `t` when not given).
pub fn hyperplane_family(field: &Field, n: usize, t: Option<&Subspace>) -> Result<IntersectingFamily> {
    if n != 4 {
        return Err(Error::BadDimensions(format!("hyperplane family is defined for n = 4, got {n}")));
    }
    let t = match t {
        Some(t) => t.clone(),
        None => least_subspace(field, 4, 3)?,
    };
    if t.dim() != 3 || t.n() != 4 || t.field().q() != field.q() {
        return Err(Error::BadDimensions(format!("T must be a 3-subspace of F^4, got dim {}", t.dim())));
    }
    let members = enumerate_grassmannian(field, 3, 2)?
        .map(|p| p.image_under(t.rows(), 4))
        .collect::<Result<Vec<_>>>()?;
    IntersectingFamily::new(field, 4, 2, 1, members)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftMode {
    /// Triples `{x, y, x ⊕ y}` on the nonzero vectors of F_2^m.
    Boolean,
    /// The deterministic Bose/Skolem system of the right order.
    BoseSkolem,
}

fn lift_order(size: usize) -> Result<u32> {
    if size == 0 || !(size + 1).is_power_of_two() {
        return Err(Error::BadSize(size));
    }
    Ok((size + 1).trailing_zeros())
}

fn check_liftable(family: &IntersectingFamily) -> Result<()> {
    lift_order(family.len())?;
    if family.len() > 1 && family.k() != 2 * family.lambda() {
        return Err(Error::NotIntersecting(format!(
            "members of dimension {} are not {}-intersecting with k = 2d",
            family.k(),
            family.lambda()
        )));
    }
    Ok(())
}

fn lift_codewords(family: &IntersectingFamily) -> Vec<Subspace> {
    std::iter::once(Subspace::zero(family.field(), family.n()))
        .chain(family.members().iter().cloned())
        .collect()
}

/// Turns a `(2^m - 1)`-member `d`-intersecting family in G_q(n, 2d) into a
/// code, defining `X_i ⊞ X_j = X_l` for each triple `{i, j, l}` of an STS.
pub fn sts_lift(family: &IntersectingFamily, mode: LiftMode) -> Result<LinearCode> {
    check_liftable(family)?;
    let words = lift_codewords(family);
    match mode {
        LiftMode::Boolean => LinearCode::with_rule(family.field(), family.n(), words, |i, j| i ^ j),
        LiftMode::BoseSkolem if family.len() < 3 => {
            LinearCode::with_rule(family.field(), family.n(), words, |i, j| i ^ j)
        }
        LiftMode::BoseSkolem => lift_with_sts(family, &sts_make(family.len())?),
    }
}

/// Lift with an explicit STS on the member indices `0..|family|`.
pub fn lift_with_sts(family: &IntersectingFamily, sts: &Sts) -> Result<LinearCode> {
    check_liftable(family)?;
    if sts.v != family.len() {
        return Err(Error::BadSize(sts.v));
    }
    let third = sts.third_point_table();
    let words = lift_codewords(family);
    let m = words.len();
    let mut table = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            table[i][j] = match (i, j) {
                (0, x) | (x, 0) => x,
                (x, y) if x == y => 0,
                (x, y) => match third[x - 1][y - 1] {
                    Some(c) => c + 1,
                    None => {
                        return Err(Error::MalformedTable(format!("STS does not cover pair ({}, {})", x - 1, y - 1)))
                    }
                },
            };
        }
    }
    LinearCode::new(family.field(), family.n(), words, Some(table))
}

/// `U*` of an equidistant code with distance `2d`, as a `d`-intersecting
/// family in G_q(n, 2d).
pub fn extract_family(code: &LinearCode) -> Result<IntersectingFamily> {
    let members = code.nontrivial().to_vec();
    let k = members.first().map_or(0, Subspace::dim);
    IntersectingFamily::new(code.field(), code.n(), k, k / 2, members)
}

/// Point sets of the members in PG(n-1, q), points numbered by the integer
/// encoding of their normalized vectors (leading nonzero coordinate 1).
/// Returns the number of points and one sorted block per member.
pub fn collapse_blocks(field: &Field, n: usize, members: &[Subspace]) -> (usize, Vec<Vec<usize>>) {
    let q = field.q() as usize;
    let code = |v: &[FieldElement]| v.iter().rev().fold(0, |acc, x| acc * q + x.idx());
    let normalize = |v: &[FieldElement]| -> Vector {
        let lead = v.iter().find(|x| !x.is_zero()).copied().expect("nonzero");
        let inv = field.inv(lead).expect("nonzero");
        v.iter().map(|&x| field.mul(inv, x)).collect()
    };
    let points: Vec<usize> = {
        let mut p: Vec<usize> = Subspace::full(field, n).nonzero_vectors().iter().map(|v| code(&normalize(v))).collect();
        p.sort_unstable();
        p.dedup();
        p
    };
    let blocks = members
        .iter()
        .map(|m| {
            let mut b: Vec<usize> = m
                .nonzero_vectors()
                .iter()
                .map(|v| points.binary_search(&code(&normalize(v))).expect("point"))
                .collect();
            b.sort_unstable();
            b.dedup();
            b
        })
        .collect();
    (points.len(), blocks)
}

/// Keeps the `target` lexicographically least members.
pub fn trim_family(family: &IntersectingFamily, target: usize) -> Result<IntersectingFamily> {
    if target > family.len() {
        return Err(Error::TooFew { have: family.len(), want: target });
    }
    Ok(IntersectingFamily {
        members: family.members[..target].to_vec(),
        ..family.clone()
    })
}

/// Largest `2^m - 1` not exceeding `size`.
pub fn liftable_size(size: usize) -> usize {
    if size == 0 {
        0
    } else {
        (1usize << (usize::BITS - 1 - (size + 1).leading_zeros())) - 1
    }
}

fn pow2_floor(x: &BigUint) -> BigUint {
    BigUint::from(1u8) << (x.bits() - 1)
}

/// `E_q(3) = 2^⌊log2(q² + q + 2)⌋`.
pub fn bound_e_q3(q: u32) -> u64 {
    let x = q as u64 * q as u64 + q as u64 + 2;
    1u64 << (63 - x.leading_zeros())
}

/// `E_q(n, 1) = 2^⌊log2([n-1 1]_q + 1)⌋`, the sunflower bound; `n ≥ 3`.
pub fn bound_e_qn1(q: u32, n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::BadDimensions(format!("n = {n} < 3")));
    }
    Ok(pow2_floor(&(gaussian_binomial(q, n - 1, 1) + 1u8)))
}

fn ser_big<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub q: u32,
    /// |G_q(3, 2)| = q² + q + 1
    pub family_size: u64,
    /// E_q(3)
    pub max_code_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub n: usize,
    /// E_q(n, 1); at n = 3 the full G_q(3, 2) family gives E_q(3).
    #[serde(serialize_with = "ser_big")]
    pub max_code_size: BigUint,
    /// |P_q(n)|
    #[serde(serialize_with = "ser_big")]
    pub space_size: BigUint,
}

pub fn table1(qs: &[u32]) -> Result<Vec<Table1Row>> {
    qs.iter()
        .map(|&q| {
            gfq::field(q)?;
            Ok(Table1Row {
                q,
                family_size: gaussian_binomial(q, 3, 2).to_u64().expect("small"),
                max_code_size: bound_e_q3(q),
            })
        })
        .collect()
}

pub fn table2(q: u32, ns: &[usize]) -> Result<Vec<Table2Row>> {
    gfq::field(q)?;
    ns.iter()
        .map(|&n| {
            let max_code_size = if n == 3 { BigUint::from(bound_e_q3(q)) } else { bound_e_qn1(q, n)? };
            Ok(Table2Row { n, max_code_size, space_size: projective_space_size(q, n) })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioReport {
    pub q: u32,
    pub max_code_size: u64,
    pub space_size: u64,
    /// E_q(3) / |P_q(3)|
    pub ratio: Ratio<u64>,
    pub above_quarter: bool,
    pub at_most_half: bool,
    pub equals_half: bool,
    /// Equality is expected exactly for q ∈ {2, 5}.
    pub equality_expected: bool,
    pub pass: bool,
}

pub fn ratio_report(q: u32) -> Result<RatioReport> {
    gfq::field(q)?;
    let e = bound_e_q3(q);
    let p = projective_space_size(q, 3).to_u64().expect("small");
    let ratio = Ratio::new(e, p);
    let above_quarter = ratio > Ratio::new(1, 4);
    let at_most_half = ratio <= Ratio::new(1, 2);
    let equals_half = ratio == Ratio::new(1, 2);
    let equality_expected = q == 2 || q == 5;
    Ok(RatioReport {
        q,
        max_code_size: e,
        space_size: p,
        ratio,
        above_quarter,
        at_most_half,
        equals_half,
        equality_expected,
        pass: above_quarter && at_most_half && equals_half == equality_expected,
    })
}
