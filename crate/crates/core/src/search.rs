//! Exhaustive searches over intersecting subspace families, Steiner triple
//! systems and addition tables.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::construct::{bound_e_q3, collapse_blocks, ratio_report, sts_lift, trim_family, liftable_size, IntersectingFamily, LiftMode, RatioReport};
use crate::designs::{is_projective_plane, Sts};
use crate::error::{Error, Result};
use crate::gfq::{self, Field};
use crate::lincode::{verify_linear, LinearCode};
use crate::subspace::{gaussian_binomial, grassmannian, Subspace};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const WITNESS_CAP: usize = 10_000;

/// Branching order of the clique search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchOrder {
    #[default]
    Lex,
    Reverse,
    /// Decreasing compatibility degree, ties broken lexicographically.
    Degree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node limit over the whole search.
    pub budget: u64,
    pub threads: usize,
    pub order: SearchOrder,
    /// Collect every maximum family; otherwise stop at the first proof of
    /// optimality.
    pub census: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, threads: 1, order: SearchOrder::Lex, census: true }
    }
}

/// Shape of a maximum family with `lambda = k - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyForm {
    /// All members contain a common `(k-1)`-subspace.
    Sunflower,
    /// All members lie in a common `(k+1)`-subspace.
    Hyperplane,
    Other,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub sunflower: usize,
    pub hyperplane: usize,
    pub other: usize,
}

fn ser_families<S: Serializer>(fams: &[Vec<Subspace>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<Vec<Vec<u32>>>> = fams.iter().map(|f| f.iter().map(Subspace::to_rows).collect()).collect();
    rows.serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub max_size: usize,
    /// A-priori cap used for pruning.
    pub upper_bound: usize,
    #[serde(serialize_with = "ser_families")]
    pub witnesses: Vec<Vec<Subspace>>,
    pub witness_count: usize,
    /// Whether `witnesses` lists every maximum family.
    pub witnesses_complete: bool,
    pub census: Option<Census>,
    pub exhausted: bool,
    pub nodes_explored: u64,
}

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn clear(b: &mut Bits, i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

fn count(b: &Bits) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn first(b: &Bits) -> Option<usize> {
    b.iter().position(|&w| w != 0).map(|w| w * 64 + b[w].trailing_zeros() as usize)
}

fn and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

struct Graph {
    adj: Vec<Bits>,
}

struct Sub {
    best: usize,
    cliques: Vec<Vec<usize>>,
    clique_count: usize,
    nodes: u64,
    aborted: bool,
}

struct Ctx<'a> {
    g: &'a Graph,
    census: bool,
    cap: usize,
    limit: u64,
}

impl Ctx<'_> {
    fn expand(&self, clique: &mut Vec<usize>, mut cand: Bits, st: &mut Sub) {
        st.nodes += 1;
        if st.nodes > self.limit {
            st.aborted = true;
            return;
        }
        if count(&cand) == 0 {
            self.record(clique, st);
            return;
        }
        // greedy sequential colouring gives an upper bound per vertex
        let mut order = Vec::new();
        let mut uncolored = cand.clone();
        let mut color = 0;
        while count(&uncolored) > 0 {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = first(&avail) {
                clear(&mut avail, v);
                clear(&mut uncolored, v);
                for (a, b) in avail.iter_mut().zip(&self.g.adj[v]) {
                    *a &= !b;
                }
                order.push((v, color));
            }
        }
        for &(v, c) in order.iter().rev() {
            let reach = clique.len() + c;
            if reach < st.best || (!self.census && (reach == st.best || st.best >= self.cap)) {
                return;
            }
            clique.push(v);
            self.expand(clique, and(&cand, &self.g.adj[v]), st);
            clique.pop();
            if st.aborted {
                return;
            }
            clear(&mut cand, v);
        }
    }

    fn record(&self, clique: &[usize], st: &mut Sub) {
        let len = clique.len();
        if len > st.best || (len == st.best && self.census) {
            if len > st.best {
                st.best = len;
                st.cliques.clear();
                st.clique_count = 0;
            }
            st.clique_count += 1;
            if st.cliques.len() < WITNESS_CAP {
                st.cliques.push(clique.to_vec());
            }
        }
    }

    fn root(&self, r: usize, floor: usize) -> Sub {
        let mut st = Sub { best: floor, cliques: Vec::new(), clique_count: 0, nodes: 0, aborted: false };
        let words = self.g.adj[r].len();
        let mut later = vec![0u64; words];
        for i in r + 1..self.g.adj.len() {
            set(&mut later, i);
        }
        let cand = and(&self.g.adj[r], &later);
        let reach = 1 + count(&cand);
        if reach < floor || (!self.census && reach == floor) {
            st.nodes = 1;
            return st;
        }
        self.expand(&mut vec![r], cand, &mut st);
        st
    }
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut clique: Vec<usize> = Vec::new();
    for v in 0..g.adj.len() {
        if clique.iter().all(|&u| bit(&g.adj[u], v)) {
            clique.push(v);
        }
    }
    clique
}

/// Exact maximum of a `lambda`-intersecting family in G_q(n, k) within the
/// default options and the given node budget.
pub fn max_intersecting_family(q: u32, n: usize, k: usize, lambda: usize, budget: u64) -> Result<SearchResult> {
    max_intersecting_family_with(q, n, k, lambda, &SearchOptions { budget, ..SearchOptions::default() })
}

pub fn max_intersecting_family_with(
    q: u32,
    n: usize,
    k: usize,
    lambda: usize,
    opts: &SearchOptions,
) -> Result<SearchResult> {
    if !(lambda < k && k <= n) {
        return Err(Error::BadDimensions(format!("need 0 <= lambda {lambda} < k {k} <= n {n}")));
    }
    let field = gfq::field(q)?;
    // X ↦ X^⊥ maps lambda-intersecting k-spaces to (n-2k+lambda)-intersecting
    // (n-k)-spaces
    let dual = 2 * k > n && n + lambda >= 2 * k;
    let (sk, sl) = if dual { (n - k, n + lambda - 2 * k) } else { (k, lambda) };
    let mut verts = grassmannian(&field, n, sk)?;

    let adj_rows: Vec<Vec<usize>> = (0..verts.len())
        .into_par_iter()
        .map(|i| {
            (0..verts.len())
                .filter(|&j| j != i && verts[i].dim_intersection(&verts[j]).expect("same ambient") == sl)
                .collect()
        })
        .collect();
    let perm: Vec<usize> = match opts.order {
        SearchOrder::Lex => (0..verts.len()).collect(),
        SearchOrder::Reverse => (0..verts.len()).rev().collect(),
        SearchOrder::Degree => {
            let mut p: Vec<usize> = (0..verts.len()).collect();
            p.sort_by_key(|&i| std::cmp::Reverse(adj_rows[i].len()));
            p
        }
    };
    let mut pos = vec![0; verts.len()];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    let words = verts.len().div_ceil(64);
    let mut adj = vec![vec![0u64; words]; verts.len()];
    for (old, row) in adj_rows.iter().enumerate() {
        for &j in row {
            set(&mut adj[pos[old]], pos[j]);
        }
    }
    verts = perm.iter().map(|&i| verts[i].clone()).collect();
    let g = Graph { adj };

    let points = |d: usize| gaussian_binomial(q, d, 1).to_usize().unwrap_or(usize::MAX);
    let mut cap = verts.len().min(points(n));
    if sl == 0 {
        cap = cap.min(points(n) / points(sk));
    }

    let greedy = greedy_clique(&g);
    let floor = greedy.len();
    let ctx = Ctx { g: &g, census: opts.census, cap, limit: opts.budget };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .map_err(|e| Error::BadDimensions(e.to_string()))?;
    let mut subs: Vec<Sub> = pool.install(|| (0..verts.len()).into_par_iter().map(|r| ctx.root(r, floor)).collect());

    // replay the budget as if roots ran one after another
    let mut spent = 0u64;
    let mut exhausted = true;
    for r in 0..subs.len() {
        let left = opts.budget - spent;
        if subs[r].nodes > left || subs[r].aborted {
            let lim = Ctx { limit: left, ..ctx };
            subs[r] = lim.root(r, floor);
            subs.truncate(r + 1);
            exhausted = false;
            spent += subs[r].nodes.min(left);
            break;
        }
        spent += subs[r].nodes;
    }

    let best = subs.iter().map(|s| s.best).max().unwrap_or(0).max(floor);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut clique_count = 0;
    for s in subs.iter().filter(|s| s.best == best && s.clique_count > 0) {
        clique_count += s.clique_count;
        cliques.extend(s.cliques.iter().cloned());
    }
    if cliques.is_empty() {
        cliques.push(greedy);
        clique_count = 1;
    }
    cliques.truncate(WITNESS_CAP);
    let complete = exhausted && opts.census && clique_count <= WITNESS_CAP;

    let mut witnesses: Vec<Vec<Subspace>> = cliques
        .iter()
        .map(|c| {
            let mut w: Vec<Subspace> = c
                .iter()
                .map(|&v| if dual { verts[v].orthogonal_complement() } else { verts[v].clone() })
                .collect();
            w.sort();
            w
        })
        .collect();
    witnesses.sort();
    for w in &witnesses {
        IntersectingFamily::new(&field, n, k, lambda, w.clone())?;
    }
    let census = (complete && lambda + 1 == k).then(|| {
        let mut c = Census::default();
        for w in &witnesses {
            match classify_family(w) {
                FamilyForm::Sunflower => c.sunflower += 1,
                FamilyForm::Hyperplane => c.hyperplane += 1,
                FamilyForm::Other => c.other += 1,
            }
        }
        c
    });

    Ok(SearchResult {
        q,
        n,
        k,
        lambda,
        max_size: best,
        upper_bound: cap,
        witnesses,
        witness_count: clique_count,
        witnesses_complete: complete,
        census,
        exhausted,
        nodes_explored: spent,
    })
}

/// Classifies a uniform family of `k`-subspaces against the two extremal
/// shapes for `(k-1)`-intersecting families.
pub fn classify_family(members: &[Subspace]) -> FamilyForm {
    let Some(first) = members.first() else {
        return FamilyForm::Other;
    };
    let k = first.dim();
    let meet = members[1..].iter().try_fold(first.clone(), |acc, m| acc.intersect(m));
    let join = members[1..].iter().try_fold(first.clone(), |acc, m| acc.sum(m));
    match (meet, join) {
        (Ok(m), _) if k >= 1 && m.dim() == k - 1 => FamilyForm::Sunflower,
        (_, Ok(j)) if j.dim() == k + 1 => FamilyForm::Hyperplane,
        _ => FamilyForm::Other,
    }
}

/// Boolean lift of the largest liftable trim of the first witness; its size
/// is `2^⌊log2(max_size + 1)⌋` when `k = 2 lambda`.
pub fn best_code(result: &SearchResult) -> Result<LinearCode> {
    let w = result.witnesses.first().ok_or(Error::TooFew { have: 0, want: 1 })?;
    let field = gfq::field(result.q)?;
    let fam = IntersectingFamily::new(&field, result.n, result.k, result.lambda, w.clone())?;
    sts_lift(&trim_family(&fam, liftable_size(fam.len()))?, LiftMode::Boolean)
}

fn ser_big<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub q: u32,
    pub n: usize,
    pub d: usize,
    /// Largest equidistant linear code with distance `2d`.
    pub e_qnd: u64,
    /// Largest over all `d`.
    pub e_qn: u64,
    pub e_qn_exact: bool,
    /// Largest `d`-intersecting family in G_q(n, 2d).
    pub m_qd: usize,
    pub m_qd_exact: bool,
    /// Largest equidistant constant-dimension code in G_q(n, 2d), distance `2d`.
    pub a_qn2d2d: usize,
    /// Labeled STS count on `e_qnd - 1` points, when small enough to count.
    #[serde(serialize_with = "ser_opt_big")]
    pub n_s: Option<BigUint>,
}

fn ser_opt_big<S: Serializer>(x: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser_big(v, s),
        None => s.serialize_none(),
    }
}

fn pow2_floor(x: u64) -> u64 {
    1 << (63 - x.leading_zeros())
}

pub fn bound_report(q: u32, n: usize, d: usize, opts: &SearchOptions) -> Result<BoundReport> {
    if d == 0 || 2 * d > n {
        return Err(Error::BadDimensions(format!("need 1 <= d and 2d <= n, got d = {d}, n = {n}")));
    }
    let quiet = SearchOptions { census: false, ..*opts };
    let mut e_qn = 1;
    let mut e_qn_exact = true;
    let mut own = None;
    for dd in 1..=n / 2 {
        let r = max_intersecting_family_with(q, n, 2 * dd, dd, &quiet)?;
        let e = pow2_floor(r.max_size as u64 + 1);
        e_qn = e_qn.max(e);
        e_qn_exact &= r.exhausted;
        if dd == d {
            own = Some((r.max_size, r.exhausted, e));
        }
    }
    let (m, exact, e) = own.expect("d in range");
    let s = (e - 1) as usize;
    let n_s = matches!(s, 1 | 3 | 7).then(|| BigUint::from(count_labeled_sts(s).expect("small v").count));
    Ok(BoundReport { q, n, d, e_qnd: e, e_qn, e_qn_exact, m_qd: m, m_qd_exact: exact, a_qn2d2d: m, n_s })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P1Report {
    /// Distinct codeword sets of size 8 for equidistant linear codes in P_2(3).
    pub codeword_sets: usize,
    pub set_is_full_grassmannian: bool,
    pub blocks_form_fano_plane: bool,
    /// Addition tables on that set passing every linearity axiom.
    pub valid_tables: usize,
    pub labeled_sts: u64,
    pub associative_sts_lifts: usize,
    pub pass: bool,
}

/// Counts symmetric tables with identity 0, zero diagonal and Latin rows on
/// the given codewords that pass `verify_linear`.
pub fn count_valid_tables(field: &Field, n: usize, codewords: &[Subspace]) -> Result<usize> {
    let m = codewords.len();
    let base = LinearCode::new(field, n, codewords.to_vec(), None)?;
    let mut t = vec![vec![usize::MAX; m]; m];
    for i in 0..m {
        t[i][0] = i;
        t[0][i] = i;
        t[i][i] = 0;
    }
    let cells: Vec<(usize, usize)> = (1..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut used = vec![vec![false; m]; m];
    for (i, row) in used.iter_mut().enumerate() {
        row[0] = true;
        row[i] = true;
    }
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        t: &mut Vec<Vec<usize>>,
        used: &mut Vec<Vec<bool>>,
        base: &LinearCode,
        found: &mut usize,
    ) -> Result<()> {
        let m = t.len();
        if idx == cells.len() {
            let code = base.clone().attach_table(t.clone())?;
            if verify_linear(&code)?.pass {
                *found += 1;
            }
            return Ok(());
        }
        let (i, j) = cells[idx];
        for v in 1..m {
            if used[i][v] || used[j][v] {
                continue;
            }
            t[i][j] = v;
            t[j][i] = v;
            used[i][v] = true;
            used[j][v] = true;
            rec(idx + 1, cells, t, used, base, found)?;
            used[i][v] = false;
            used[j][v] = false;
        }
        t[i][j] = usize::MAX;
        t[j][i] = usize::MAX;
        Ok(())
    }
    let mut found = 0;
    rec(0, &cells, &mut t, &mut used, &base, &mut found)?;
    Ok(found)
}

pub fn verify_p1() -> Result<P1Report> {
    let r = max_intersecting_family(2, 3, 2, 1, DEFAULT_BUDGET)?;
    let f = gfq::field(2)?;
    let all = grassmannian(&f, 3, 2)?;
    let sets: Vec<&Vec<Subspace>> = r.witnesses.iter().filter(|w| w.len() == 7).collect();
    let codeword_sets = if r.exhausted && r.witnesses_complete && r.max_size == 7 { sets.len() } else { 0 };
    let set_is_full_grassmannian = sets.first().is_some_and(|w| **w == all);
    let blocks_form_fano_plane = sets.first().is_some_and(|w| {
        let (v, blocks) = collapse_blocks(&f, 3, w);
        is_projective_plane(v, &blocks) == Some(2)
    });
    let words: Vec<Subspace> = std::iter::once(Subspace::zero(&f, 3)).chain(all.iter().cloned()).collect();
    let valid_tables = count_valid_tables(&f, 3, &words)?;
    let sts = count_labeled_sts(7)?;
    let associative_sts_lifts = sts.valid_code_lifts.unwrap_or(0);
    let pass = codeword_sets == 1
        && set_is_full_grassmannian
        && blocks_form_fano_plane
        && valid_tables == associative_sts_lifts
        && valid_tables > 1;
    Ok(P1Report {
        codeword_sets,
        set_is_full_grassmannian,
        blocks_form_fano_plane,
        valid_tables,
        labeled_sts: sts.count,
        associative_sts_lifts,
        pass,
    })
}

/// `(n, d)` with `n >= 2d + 1` and `2^{n-d-1} = 2^{2d-1} + 2^{d-1} - 1`.
pub fn e1_solutions(n_max: usize, d_max: usize) -> Result<Vec<(usize, usize)>> {
    if n_max < 3 || d_max < 1 {
        return Err(Error::BadDimensions(format!("need n_max >= 3 and d_max >= 1, got {n_max}, {d_max}")));
    }
    let two = |e: usize| BigUint::one() << e;
    let mut out = Vec::new();
    for d in 1..=d_max {
        let rhs = two(2 * d - 1) + two(d - 1) - 1u8;
        for n in 2 * d + 1..=n_max {
            if two(n - d - 1) == rhs {
                out.push((n, d));
            }
        }
    }
    Ok(out)
}

/// All `1 <= x <= x_max` with `x^2 + 7` a power of two.
pub fn ramanujan_nagell(x_max: u64) -> Vec<u64> {
    (1..=x_max)
        .filter(|&x| (x as u128 * x as u128 + 7).is_power_of_two())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P5Row {
    pub d: usize,
    pub max_size: usize,
    pub exhausted: bool,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P5Report {
    pub n: usize,
    /// 2^n - 1
    pub limit: u64,
    pub rows: Vec<P5Row>,
    pub pass: bool,
}

/// Exact `M_{2,d}` in G_2(n, 2d) for every `d <= n/2`, each compared with
/// `2^n - 1`.
pub fn verify_p5(n: usize, opts: &SearchOptions) -> Result<P5Report> {
    if !(4..=6).contains(&n) {
        return Err(Error::BadDimensions(format!("verify_p5 covers 4 <= n <= 6, got {n}")));
    }
    let quiet = SearchOptions { census: false, ..*opts };
    let limit = (1u64 << n) - 1;
    let rows = (1..=n / 2)
        .map(|d| {
            let r = max_intersecting_family_with(2, n, 2 * d, d, &quiet)?;
            Ok(P5Row { d, max_size: r.max_size, exhausted: r.exhausted, nodes_explored: r.nodes_explored })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = rows.iter().all(|r| r.exhausted && (r.max_size as u64) < limit);
    Ok(P5Report { n, limit, rows, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StsCount {
    pub v: usize,
    pub count: u64,
    /// Systems whose Steiner quasigroup with an adjoined identity is a group
    /// (only for `v = 2^m - 1`).
    pub associative_lifts: Option<u64>,
    /// For `v = 7`: lifts of G_2(3, 2) that pass `verify_linear`.
    pub valid_code_lifts: Option<usize>,
}

fn enumerate_sts(v: usize, mut visit: impl FnMut(&[[usize; 3]])) {
    fn rec(v: usize, covered: &mut Vec<Vec<bool>>, triples: &mut Vec<[usize; 3]>, visit: &mut dyn FnMut(&[[usize; 3]])) {
        let pair = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).find(|&(a, b)| !covered[a][b]);
        let Some((a, b)) = pair else {
            visit(triples);
            return;
        };
        for c in b + 1..v {
            if covered[a][c] || covered[b][c] {
                continue;
            }
            for (x, y) in [(a, b), (a, c), (b, c)] {
                covered[x][y] = true;
            }
            triples.push([a, b, c]);
            rec(v, covered, triples, visit);
            triples.pop();
            for (x, y) in [(a, b), (a, c), (b, c)] {
                covered[x][y] = false;
            }
        }
    }
    let mut covered = vec![vec![false; v]; v];
    rec(v, &mut covered, &mut Vec::new(), &mut visit);
}

/// Labeled Steiner triple systems on `0..v` by exhaustive backtracking.
pub fn count_labeled_sts(v: usize) -> Result<StsCount> {
    if !matches!(v, 1 | 3 | 7 | 9) {
        return Err(Error::BadSize(v));
    }
    let pow = (v + 1).is_power_of_two();
    let fano = if v == 7 {
        let f = gfq::field(2)?;
        Some(IntersectingFamily::new(&f, 3, 2, 1, grassmannian(&f, 3, 2)?)?)
    } else {
        None
    };
    let mut count = 0u64;
    let mut assoc = 0u64;
    let mut valid = 0usize;
    let mut err = None;
    enumerate_sts(v, |triples| {
        count += 1;
        let sts = Sts { v, triples: triples.to_vec() };
        if pow && sts.lift_is_associative() {
            assoc += 1;
        }
        if let Some(fam) = &fano {
            match crate::construct::lift_with_sts(fam, &sts).and_then(|c| verify_linear(&c)) {
                Ok(r) if r.pass => valid += 1,
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(StsCount {
        v,
        count,
        associative_lifts: pow.then_some(assoc),
        valid_code_lifts: fano.is_some().then_some(valid),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfspaceReport {
    pub q: u32,
    pub n: usize,
    /// `n / 4` when `4 | n`.
    pub d: Option<usize>,
    pub grassmannian_size: Option<u64>,
    /// `X^⊥⊥ = X` on G_q(n, n/2).
    pub involution: Option<bool>,
    pub self_dual: Option<usize>,
    /// Whether `dim(X ∩ X^⊥) != d` for every `X`, so no `d`-intersecting
    /// family holds both.
    pub pairing_step_holds: Option<bool>,
    /// First `(X, X^⊥)` in lexicographic order meeting in dimension `d`.
    pub pairing_counterexample: Option<[Vec<Vec<u32>>; 2]>,
    pub max_family: Option<usize>,
    pub max_family_exact: Option<bool>,
    /// `2 M_{q,d} <= |G_q(4d, 2d)|`.
    pub bound_holds: Option<bool>,
    pub ratio: RatioReport,
    pub pass: bool,
}

pub fn verify_halfspace_bound(q: u32, n: usize, opts: &SearchOptions) -> Result<HalfspaceReport> {
    if q > 5 || !(3..=6).contains(&n) {
        return Err(Error::TooLarge(format!("halfspace census covers q <= 5, 3 <= n <= 6; got q = {q}, n = {n}")));
    }
    let field = gfq::field(q)?;
    let ratio = ratio_report(q)?;
    debug_assert_eq!(ratio.max_code_size, bound_e_q3(q));
    let mut rep = HalfspaceReport {
        q,
        n,
        d: None,
        grassmannian_size: None,
        involution: None,
        self_dual: None,
        pairing_step_holds: None,
        pairing_counterexample: None,
        max_family: None,
        max_family_exact: None,
        bound_holds: None,
        pass: ratio.pass,
        ratio,
    };
    if n % 4 != 0 {
        return Ok(rep);
    }
    let d = n / 4;
    let all = grassmannian(&field, n, 2 * d)?;
    let mut involution = true;
    let mut self_dual = 0;
    let mut counter = None;
    for x in &all {
        let perp = x.orthogonal_complement();
        involution &= perp.orthogonal_complement() == *x;
        if perp == *x {
            self_dual += 1;
        }
        if counter.is_none() && x.dim_intersection(&perp)? == d {
            counter = Some([x.to_rows(), perp.to_rows()]);
        }
    }
    let r = max_intersecting_family_with(q, n, 2 * d, d, &SearchOptions { census: false, ..*opts })?;
    let bound_holds = 2 * r.max_size <= all.len();
    rep.d = Some(d);
    rep.grassmannian_size = Some(all.len() as u64);
    rep.involution = Some(involution);
    rep.self_dual = Some(self_dual);
    rep.pairing_step_holds = Some(counter.is_none());
    rep.pairing_counterexample = counter;
    rep.max_family = Some(r.max_size);
    rep.max_family_exact = Some(r.exhausted);
    rep.bound_holds = Some(bound_holds);
    rep.pass = rep.ratio.pass && involution && bound_holds && r.exhausted;
    Ok(rep)
}
