//! Linear subspace codes with an explicit addition table.
//!
//! The addition `⊞` is stored as an `M × M` table of codeword indices. Index 0
//! is always the zero subspace. [`verify_linear`] checks the four linearity
//! axioms exhaustively; [`check_lemma_suite`] and [`structure_analysis`]
//! derive the consequences those axioms force on dimensions and intersections.

use std::collections::HashMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::{self, Field};
use crate::subspace::Subspace;

pub type Table = Vec<Vec<usize>>;

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    codewords: Vec<Subspace>,
    table: Option<Table>,
}

/// On-disk form: `{"q", "n", "size", "codewords", "table"?}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u32,
    pub n: usize,
    pub size: usize,
    pub codewords: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
}

impl LinearCode {
    /// Checks structure only: distinct codewords, `{0}` first, and a table
    /// that is square, in range, symmetric, with identity row and zero diagonal.
    pub fn new(field: &Field, n: usize, codewords: Vec<Subspace>, table: Option<Table>) -> Result<Self> {
        match codewords.first() {
            Some(z) if z.is_zero() => {}
            _ => return Err(Error::MissingZero),
        }
        for c in &codewords {
            if c.field().q() != field.q() || c.n() != n {
                return Err(Error::AmbientMismatch { q1: field.q(), n1: n, q2: c.field().q(), n2: c.n() });
            }
        }
        let mut seen: HashMap<&Subspace, usize> = HashMap::with_capacity(codewords.len());
        for (i, c) in codewords.iter().enumerate() {
            if let Some(&j) = seen.get(c) {
                return Err(Error::DuplicateCodeword(j, i));
            }
            seen.insert(c, i);
        }
        if let Some(t) = &table {
            check_table_structure(t, codewords.len())?;
        }
        Ok(LinearCode { field: field.clone(), n, codewords, table })
    }

    /// Builds the table from a rule on index pairs.
    pub fn with_rule(
        field: &Field,
        n: usize,
        codewords: Vec<Subspace>,
        rule: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let m = codewords.len();
        let table = (0..m).map(|i| (0..m).map(|j| rule(i, j)).collect()).collect();
        Self::new(field, n, codewords, Some(table))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn codewords(&self) -> &[Subspace] {
        &self.codewords
    }

    /// The nontrivial part `U*`.
    pub fn nontrivial(&self) -> &[Subspace] {
        &self.codewords[1..]
    }

    pub fn table(&self) -> Option<&Table> {
        self.table.as_ref()
    }

    pub fn attach_table(self, table: Table) -> Result<Self> {
        Self::new(&self.field, self.n, self.codewords, Some(table))
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.codewords.iter().position(|c| c == s)
    }

    /// `codewords[i] ⊞ codewords[j]` as an index.
    pub fn boxplus(&self, i: usize, j: usize) -> Result<usize> {
        let t = self.table.as_ref().ok_or(Error::NoTable)?;
        let m = self.size();
        for idx in [i, j] {
            if idx >= m {
                return Err(Error::IndexOutOfRange { index: idx, size: m });
            }
        }
        Ok(t[i][j])
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile {
            q: self.field.q(),
            n: self.n,
            size: self.size(),
            codewords: self.codewords.iter().map(Subspace::to_rows).collect(),
            table: self.table.clone(),
        }
    }

    pub fn from_file(file: &CodeFile) -> Result<Self> {
        let f = gfq::field(file.q)?;
        if file.size != file.codewords.len() {
            return Err(Error::Parse(format!(
                "size {} does not match {} codewords",
                file.size,
                file.codewords.len()
            )));
        }
        if file.codewords.first().is_some_and(|c| !c.is_empty()) {
            return Err(Error::MissingZero);
        }
        let words = file
            .codewords
            .iter()
            .map(|rows| Subspace::from_rows(&f, file.n, rows))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&f, file.n, words, file.table.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: CodeFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    /// Pairwise subspace distances.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        let m = self.size();
        (0..m)
            .into_par_iter()
            .map(|i| {
                (0..m)
                    .map(|j| self.codewords[i].distance(&self.codewords[j]).expect("same ambient"))
                    .collect()
            })
            .collect()
    }

    /// Pairwise intersection dimensions.
    pub fn intersection_matrix(&self) -> Vec<Vec<usize>> {
        let m = self.size();
        (0..m)
            .into_par_iter()
            .map(|i| {
                (0..m)
                    .map(|j| {
                        self.codewords[i].dim_intersection(&self.codewords[j]).expect("same ambient")
                    })
                    .collect()
            })
            .collect()
    }
}

fn check_table_structure(t: &Table, m: usize) -> Result<()> {
    if t.len() != m || t.iter().any(|r| r.len() != m) {
        return Err(Error::MalformedTable(format!("table is not {m}x{m}")));
    }
    for i in 0..m {
        for j in 0..m {
            if t[i][j] >= m {
                return Err(Error::MalformedTable(format!("entry ({i},{j}) = {} out of range", t[i][j])));
            }
            if t[i][j] != t[j][i] {
                return Err(Error::MalformedTable(format!("not symmetric at ({i},{j})")));
            }
        }
        if t[i][0] != i {
            return Err(Error::MalformedTable(format!("row {i} has {} in the identity column", t[i][0])));
        }
        if t[i][i] != 0 {
            return Err(Error::MalformedTable(format!("diagonal entry ({i},{i}) = {}", t[i][i])));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// (i) table entries are codeword indices
    Closure,
    /// (i)
    Commutativity,
    /// (i)
    Associativity,
    /// (ii)
    Identity,
    /// (iii)
    SelfInverse,
    /// (iv)
    Isometry,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Closure,
        Axiom::Commutativity,
        Axiom::Associativity,
        Axiom::Identity,
        Axiom::SelfInverse,
        Axiom::Isometry,
    ];

    /// Roman numeral of the linearity condition the check belongs to.
    pub fn condition(self) -> &'static str {
        match self {
            Axiom::Closure | Axiom::Commutativity | Axiom::Associativity => "i",
            Axiom::Identity => "ii",
            Axiom::SelfInverse => "iii",
            Axiom::Isometry => "iv",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub condition: String,
    pub pass: bool,
    /// First violating index tuple in lexicographic order. Associativity
    /// reports `(x, y, z)`; isometry reports `(y1, y2, x)`.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub size: usize,
    pub pass: bool,
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub fn check(&self, axiom: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == axiom).expect("all axioms reported")
    }

    pub fn failed(&self) -> Vec<Axiom> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.axiom).collect()
    }
}

/// Smallest `(a, b, c)` in lexicographic order with `a < m`, `b in lo(a)..m`,
/// `c < m` for which `bad` holds.
fn first_bad_triple(
    m: usize,
    lo: impl Fn(usize) -> usize + Sync,
    bad: impl Fn(usize, usize, usize) -> bool + Sync,
) -> Option<Vec<usize>> {
    (0..m)
        .into_par_iter()
        .find_map_first(|a| {
            for b in lo(a)..m {
                for c in 0..m {
                    if bad(a, b, c) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
            None
        })
}

/// Checks the axioms on a code file's table without the structural gate of
/// [`LinearCode::new`], so a corrupted table is attributed to an axiom.
pub fn verify_file(file: &CodeFile) -> Result<VerificationReport> {
    let bare = CodeFile { table: None, ..file.clone() };
    let mut code = LinearCode::from_file(&bare)?;
    code.table = Some(file.table.clone().ok_or(Error::NoTable)?);
    verify_linear(&code)
}

/// Exhaustively checks the linearity axioms on the attached table.
pub fn verify_linear(code: &LinearCode) -> Result<VerificationReport> {
    let t = code.table.as_ref().ok_or(Error::NoTable)?;
    let m = code.size();

    let mut checks = Vec::with_capacity(6);
    let mut push = |axiom: Axiom, counterexample: Option<Vec<usize>>| {
        checks.push(AxiomCheck {
            axiom,
            condition: axiom.condition().to_string(),
            pass: counterexample.is_none(),
            counterexample,
        })
    };

    let closure = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .find(|&(i, j)| t.get(i).and_then(|r| r.get(j)).is_none_or(|&v| v >= m))
        .map(|(i, j)| vec![i, j]);
    let closed = closure.is_none();
    push(Axiom::Closure, closure);
    if !closed {
        for a in &Axiom::ALL[1..] {
            push(*a, Some(Vec::new()));
        }
        return Ok(VerificationReport { size: m, pass: false, checks });
    }

    let commut = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .find(|&(i, j)| t[i][j] != t[j][i])
        .map(|(i, j)| vec![i, j]);
    push(Axiom::Commutativity, commut);

    let assoc = first_bad_triple(m, |_| 0, |x, y, z| t[t[x][y]][z] != t[x][t[y][z]]);
    push(Axiom::Associativity, assoc);

    let ident = (0..m).find(|&i| t[i][0] != i || t[0][i] != i).map(|i| vec![i]);
    push(Axiom::Identity, ident);

    let selfinv = (0..m).find(|&i| t[i][i] != 0).map(|i| vec![i]);
    push(Axiom::SelfInverse, selfinv);

    let dist = code.distance_matrix();
    let iso = first_bad_triple(m, |y1| y1 + 1, |y1, y2, x| dist[t[y1][x]][t[y2][x]] != dist[y1][y2]);
    push(Axiom::Isometry, iso);

    let pass = checks.iter().all(|c| c.pass);
    Ok(VerificationReport { size: m, pass, checks })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeMetrics {
    pub size: usize,
    /// Minimum pairwise subspace distance.
    pub d: usize,
    /// Minimum dimension of a nontrivial codeword; equals `d` for linear codes.
    pub min_dim: usize,
    /// Maximum codeword dimension.
    pub l: usize,
    /// `log_q(M) / (n l)`, exact when `M` is a power of `q`.
    pub rate_exact: Option<Ratio<u64>>,
    pub rate: f64,
    /// `d / 2l`.
    pub delta: Ratio<u64>,
    pub constant_distance: Option<usize>,
}

/// Tolerance used when the rate is only available as a float.
pub const RATE_TOLERANCE: f64 = 1e-12;

fn exact_log(q: u64, mut m: u64) -> Option<u64> {
    let mut k = 0;
    while m > 1 {
        if m % q != 0 {
            return None;
        }
        m /= q;
        k += 1;
    }
    Some(k)
}

pub fn metrics(code: &LinearCode) -> Result<CodeMetrics> {
    let m = code.size();
    if m < 2 {
        return Err(Error::TooSmall(m));
    }
    let dist = code.distance_matrix();
    let mut d = usize::MAX;
    let mut dmax = 0;
    for i in 0..m {
        for j in i + 1..m {
            d = d.min(dist[i][j]);
            dmax = dmax.max(dist[i][j]);
        }
    }
    let min_dim = code.nontrivial().iter().map(Subspace::dim).min().unwrap_or(0);
    let l = code.codewords.iter().map(Subspace::dim).max().unwrap_or(0);
    let nl = (code.n * l) as u64;
    let q = code.field.q() as u64;
    let rate_exact = exact_log(q, m as u64).map(|k| Ratio::new(k, nl));
    let rate = (m as f64).ln() / (q as f64).ln() / nl as f64;
    Ok(CodeMetrics {
        size: m,
        d,
        min_dim,
        l,
        rate_exact,
        rate,
        delta: Ratio::new(d as u64, 2 * l as u64),
        constant_distance: (d == dmax).then_some(d),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// dim(X ⊞ Y) = d_S(X, Y)
    DimensionDistance,
    /// Z = X ⊞ Y implies Y = X ⊞ Z
    Exchange,
    /// X ∩ Y = {0} implies X ⊞ Y = X + Y
    DisjointSum,
    /// minimum distance equals minimum nontrivial dimension
    MinDistance,
    /// dim X = dim(X ∩ Y) + dim(X ∩ (X ⊞ Y))
    IntersectionSplit,
    /// dim(X ⊞ Y) = dim(X ∩ (X ⊞ Y)) + dim(Y ∩ (X ⊞ Y))
    SumSplit,
    /// dim(X ⊞ Y) ≥ dim X − dim Y, equality iff Y ⊆ X
    LowerBound,
    /// Y ⊂ X iff X ⊞ Y ⊂ X
    ContainmentSum,
    /// Y ⊂ X iff Y ∩ (X ⊞ Y) = {0}
    ContainmentMeet,
}

impl Lemma {
    pub const ALL: [Lemma; 9] = [
        Lemma::DimensionDistance,
        Lemma::Exchange,
        Lemma::DisjointSum,
        Lemma::MinDistance,
        Lemma::IntersectionSplit,
        Lemma::SumSplit,
        Lemma::LowerBound,
        Lemma::ContainmentSum,
        Lemma::ContainmentMeet,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    pub pass: bool,
    /// First violating pair `(x, y)`, or empty for code-level statements.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub pass: bool,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn check(&self, lemma: Lemma) -> &LemmaCheck {
        self.checks.iter().find(|c| c.lemma == lemma).expect("all lemmas reported")
    }

    pub fn failed(&self) -> Vec<Lemma> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.lemma).collect()
    }
}

fn require_linear(code: &LinearCode) -> Result<()> {
    let report = verify_linear(code)?;
    if !report.pass {
        let names: Vec<String> = report.failed().iter().map(|a| format!("{a:?}")).collect();
        return Err(Error::NotVerifiedLinear(names.join(", ")));
    }
    Ok(())
}

/// Runs the dimension/intersection identities every linear code satisfies.
pub fn check_lemma_suite(code: &LinearCode) -> Result<LemmaReport> {
    require_linear(code)?;
    lemma_suite_unchecked(code)
}

/// Same as [`check_lemma_suite`] without first requiring the axioms to hold;
/// used to localize what a broken table violates.
pub fn lemma_suite_unchecked(code: &LinearCode) -> Result<LemmaReport> {
    let t = code.table.as_ref().ok_or(Error::NoTable)?;
    let m = code.size();
    let words = &code.codewords;
    let dim: Vec<usize> = words.iter().map(Subspace::dim).collect();
    let int = code.intersection_matrix();
    // sub(a, b): codeword a ⊆ codeword b
    let sub = |a: usize, b: usize| int[a][b] == dim[a];
    let proper = |a: usize, b: usize| a != b && sub(a, b);

    let first_pair = |bad: &(dyn Fn(usize, usize) -> bool + Sync)| -> Option<Vec<usize>> {
        (0..m).into_par_iter().find_map_first(|x| {
            (0..m).find(|&y| bad(x, y)).map(|y| vec![x, y])
        })
    };

    let mut checks = Vec::new();
    let mut record = |lemma: Lemma, counterexample: Option<Vec<usize>>| {
        checks.push(LemmaCheck { lemma, pass: counterexample.is_none(), counterexample })
    };

    record(
        Lemma::DimensionDistance,
        first_pair(&|x, y| dim[t[x][y]] != dim[x] + dim[y] - 2 * int[x][y]),
    );
    record(Lemma::Exchange, first_pair(&|x, y| t[x][t[x][y]] != y));
    record(
        Lemma::DisjointSum,
        first_pair(&|x, y| {
            if int[x][y] != 0 {
                return false;
            }
            let z = t[x][y];
            if dim[z] != dim[x] + dim[y] {
                return true;
            }
            !words[x].sum(&words[y]).is_ok_and(|s| s == words[z])
        }),
    );

    let min_dim = (1..m).map(|i| dim[i]).min();
    let min_dist = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .map(|(i, j)| dim[i] + dim[j] - 2 * int[i][j])
        .min();
    record(Lemma::MinDistance, (min_dim != min_dist).then(Vec::new));

    record(
        Lemma::IntersectionSplit,
        first_pair(&|x, y| dim[x] != int[x][y] + int[x][t[x][y]]),
    );
    record(
        Lemma::SumSplit,
        first_pair(&|x, y| {
            let z = t[x][y];
            dim[z] != int[x][z] + int[y][z]
        }),
    );
    record(
        Lemma::LowerBound,
        first_pair(&|x, y| {
            let z = t[x][y];
            let lhs = dim[z] as i64;
            let rhs = dim[x] as i64 - dim[y] as i64;
            lhs < rhs || ((lhs == rhs) != sub(y, x))
        }),
    );
    record(
        Lemma::ContainmentSum,
        first_pair(&|x, y| x != 0 && y != 0 && x != y && proper(y, x) != proper(t[x][y], x)),
    );
    record(
        Lemma::ContainmentMeet,
        first_pair(&|x, y| x != 0 && y != 0 && x != y && proper(y, x) != (int[y][t[x][y]] == 0)),
    );

    let pass = checks.iter().all(|c| c.pass);
    Ok(LemmaReport { pass, checks })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub size: usize,
    /// Every pair of distinct codewords at the same distance.
    pub equidistant: bool,
    pub constant_distance: Option<usize>,
    /// Half the constant distance, when it is even.
    pub d: Option<usize>,
    /// Common dimension of the nontrivial codewords, if uniform.
    pub uniform_dimension: Option<usize>,
    /// Common pairwise intersection dimension of `U*`, if constant.
    pub intersection_dimension: Option<usize>,
    /// (a) equidistant with constant distance 2d
    pub cond_a: bool,
    /// (b) U* ⊆ G_q(n, 2d)
    pub cond_b: bool,
    /// (c) U* is d-intersecting
    pub cond_c: bool,
    /// (a), (b), (c) agree and name the same d.
    pub equivalence_holds: bool,
    /// Constant distance is even whenever |U*| ≥ 2.
    pub even_distance: bool,
    pub delta: Ratio<u64>,
    /// delta = 1/2 exactly when the code is equidistant.
    pub half_delta_iff_equidistant: bool,
    /// No uniform odd nontrivial dimension when |U*| ≥ 2.
    pub no_odd_uniform: bool,
    /// M is a power of two and every element is its own inverse.
    pub elementary_abelian: bool,
    pub pass: bool,
}

/// Equidistance and intersecting structure of a verified linear code.
pub fn structure_analysis(code: &LinearCode) -> Result<StructureReport> {
    require_linear(code)?;
    let m = code.size();
    let t = code.table.as_ref().ok_or(Error::NoTable)?;
    let dist = code.distance_matrix();
    let int = code.intersection_matrix();
    let dims: Vec<usize> = code.nontrivial().iter().map(Subspace::dim).collect();
    let nontrivial_pairs = || (1..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));

    let mut all_dist = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| dist[i][j]);
    let constant_distance = match all_dist.next() {
        None => None,
        Some(first) => all_dist.all(|x| x == first).then_some(first),
    };
    let equidistant = m >= 2 && constant_distance.is_some();

    let uniform_dimension = match dims.first() {
        Some(&k) if dims.iter().all(|&x| x == k) => Some(k),
        _ => None,
    };
    let mut ints = nontrivial_pairs().map(|(i, j)| int[i][j]);
    let intersection_dimension = match ints.next() {
        None => None,
        Some(first) => ints.all(|x| x == first).then_some(first),
    };
    let multi = m >= 3;

    let d = constant_distance.filter(|c| c % 2 == 0).map(|c| c / 2);
    let cond_a = equidistant;
    let cond_b = match (uniform_dimension, multi) {
        (Some(k), true) => k % 2 == 0,
        (Some(_), false) => true,
        (None, _) => false,
    };
    let cond_c = match (intersection_dimension, uniform_dimension) {
        (Some(lam), Some(k)) => k == 2 * lam,
        (None, Some(_)) => !multi,
        _ => false,
    };
    let equivalence_holds = if multi {
        let same = cond_a == cond_b && cond_b == cond_c;
        let consistent = !cond_a
            || (d.is_some()
                && uniform_dimension == d.map(|x| 2 * x)
                && intersection_dimension == d);
        same && consistent
    } else {
        cond_a == cond_b
    };
    let even_distance = !multi || constant_distance.is_none_or(|c| c % 2 == 0);
    let no_odd_uniform = !multi || uniform_dimension.is_none_or(|k| k % 2 == 0);

    let l = code.codewords.iter().map(Subspace::dim).max().unwrap_or(0);
    let dmin = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).map(|(i, j)| dist[i][j]).min().unwrap_or(0);
    let delta = if l == 0 { Ratio::from_integer(0) } else { Ratio::new(dmin as u64, 2 * l as u64) };
    let half_delta_iff_equidistant = (delta == Ratio::new(1, 2)) == equidistant;

    let elementary_abelian = m.is_power_of_two() && (0..m).all(|i| t[i][i] == 0);

    let pass = equivalence_holds && even_distance && no_odd_uniform && half_delta_iff_equidistant && elementary_abelian;
    Ok(StructureReport {
        size: m,
        equidistant,
        constant_distance: constant_distance.filter(|_| equidistant),
        d,
        uniform_dimension,
        intersection_dimension,
        cond_a,
        cond_b,
        cond_c,
        equivalence_holds,
        even_distance,
        delta,
        half_delta_iff_equidistant,
        no_odd_uniform,
        elementary_abelian,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::{field, FieldElement};

    fn basis_code(n: usize) -> LinearCode {
        // subspaces spanned by subsets of the standard basis, ⊞ = symmetric difference
        let f = field(2).unwrap();
        let words: Vec<Subspace> = (0..1usize << n)
            .map(|mask| {
                let vs: Vec<Vec<FieldElement>> = (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| {
                        let mut v = vec![FieldElement::ZERO; n];
                        v[b] = FieldElement::ONE;
                        v
                    })
                    .collect();
                Subspace::span(&f, n, &vs).unwrap()
            })
            .collect();
        LinearCode::with_rule(&f, n, words, |i, j| i ^ j).unwrap()
    }

    #[test]
    fn trivial_code() {
        let f = field(2).unwrap();
        let c = LinearCode::new(&f, 3, vec![Subspace::zero(&f, 3)], Some(vec![vec![0]])).unwrap();
        assert_eq!(c.size(), 1);
        assert!(verify_linear(&c).unwrap().pass);
        assert_eq!(metrics(&c).unwrap_err(), Error::TooSmall(1));
        assert_eq!(c.boxplus(0, 0).unwrap(), 0);
        assert_eq!(c.boxplus(0, 1).unwrap_err(), Error::IndexOutOfRange { index: 1, size: 1 });
    }

    #[test]
    fn structural_errors() {
        let f = field(2).unwrap();
        let z = Subspace::zero(&f, 2);
        let a = Subspace::span(&f, 2, &[vec![FieldElement(1), FieldElement(0)]]).unwrap();
        let b = Subspace::span(&f, 2, &[vec![FieldElement(0), FieldElement(1)]]).unwrap();
        assert_eq!(LinearCode::new(&f, 2, vec![a.clone(), z.clone()], None).unwrap_err(), Error::MissingZero);
        assert_eq!(
            LinearCode::new(&f, 2, vec![z.clone(), a.clone(), a.clone()], None).unwrap_err(),
            Error::DuplicateCodeword(1, 2)
        );
        let words = vec![z.clone(), a.clone(), b.clone()];
        let asym = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 1, 0]];
        assert!(matches!(LinearCode::new(&f, 2, words.clone(), Some(asym)), Err(Error::MalformedTable(_))));
        let diag = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 0]];
        assert!(matches!(LinearCode::new(&f, 2, words.clone(), Some(diag)), Err(Error::MalformedTable(_))));
        let square = vec![vec![0, 1], vec![1, 0]];
        assert!(matches!(LinearCode::new(&f, 2, words.clone(), Some(square)), Err(Error::MalformedTable(_))));
        let nt = LinearCode::new(&f, 2, words, None).unwrap();
        assert_eq!(verify_linear(&nt).unwrap_err(), Error::NoTable);
        assert_eq!(nt.boxplus(1, 2).unwrap_err(), Error::NoTable);
    }

    #[test]
    fn two_word_code() {
        let f = field(3).unwrap();
        let x = Subspace::span(&f, 3, &[vec![FieldElement(1), FieldElement(2), FieldElement(0)]]).unwrap();
        let c = LinearCode::with_rule(&f, 3, vec![Subspace::zero(&f, 3), x], |i, j| i ^ j).unwrap();
        let m = metrics(&c).unwrap();
        assert_eq!((m.d, m.l, m.constant_distance), (1, 1, Some(1)));
        let s = structure_analysis(&c).unwrap();
        assert!(s.equidistant && s.uniform_dimension == Some(1));
        assert!(s.pass);
    }

    #[test]
    fn fixed_basis_code_is_linear_but_not_equidistant() {
        for n in 2..=4 {
            let c = basis_code(n);
            let r = verify_linear(&c).unwrap();
            assert!(r.pass, "{r:?}");
            let lemmas = check_lemma_suite(&c).unwrap();
            assert!(lemmas.pass, "{lemmas:?}");
            let s = structure_analysis(&c).unwrap();
            assert!(!s.equidistant && !s.cond_b && !s.cond_c);
            assert!(s.delta < Ratio::new(1, 2));
            assert!(s.pass);
            let m = metrics(&c).unwrap();
            assert_eq!(m.d, 1);
            assert_eq!(m.min_dim, 1);
            assert_eq!(m.l, n);
            // 2^n codewords over q = 2: rate n / (n * n)
            assert_eq!(m.rate_exact, Some(Ratio::new(1, n as u64)));
        }
    }

    #[test]
    fn broken_isometry_is_localized() {
        let c = basis_code(2);
        // ⟨e0⟩ ⊞ ⟨e1⟩ := ⟨e0⟩
        let mut t = c.table().unwrap().clone();
        t[1][2] = 1;
        t[2][1] = 1;
        let bad = c.clone().attach_table(t).unwrap();
        let r = verify_linear(&bad).unwrap();
        assert!(!r.pass);
        assert!(!r.check(Axiom::Isometry).pass);
        let l = lemma_suite_unchecked(&bad).unwrap();
        assert!(!l.check(Lemma::DimensionDistance).pass);
        assert!(matches!(check_lemma_suite(&bad), Err(Error::NotVerifiedLinear(_))));
        assert!(matches!(structure_analysis(&bad), Err(Error::NotVerifiedLinear(_))));
    }

    #[test]
    fn json_roundtrip() {
        let c = basis_code(3);
        let back = LinearCode::from_json(&c.to_json()).unwrap();
        assert_eq!(back.codewords(), c.codewords());
        assert_eq!(back.table(), c.table());
        let mut file = c.to_file();
        file.size = 3;
        assert!(matches!(LinearCode::from_file(&file), Err(Error::Parse(_))));
    }

    #[test]
    fn raw_file_names_the_axiom() {
        let mut file = basis_code(2).to_file();
        let t = file.table.as_mut().unwrap();
        t[1][2] = 0;
        assert!(matches!(LinearCode::from_file(&file), Err(Error::MalformedTable(_))));
        let r = verify_file(&file).unwrap();
        assert_eq!(r.check(Axiom::Commutativity).counterexample, Some(vec![1, 2]));
        file.table.as_mut().unwrap()[3].pop();
        assert_eq!(verify_file(&file).unwrap().failed()[0], Axiom::Closure);
        file.table = None;
        assert_eq!(verify_file(&file).unwrap_err(), Error::NoTable);
    }
}
