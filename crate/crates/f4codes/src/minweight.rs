//! Exact minimum-weight computation with machine-checkable certificates.
//!
//! Two engines:
//!
//! - **Full enumeration** walks all 2^k - 1 nonzero GF(2) combinations of
//!   the reduced generators in Gray-code order, one generator XOR per
//!   step. Exact, but only viable while 2^k fits the budget.
//!
//! - **Windowed bounding** builds a sequence of row-reduced forms whose
//!   pivot bits occupy pairwise disjoint coordinate windows (each GF(4)
//!   coordinate hosts up to two pivot bits). In every form it enumerates,
//!   radius by radius, each codeword touching at most r window
//!   coordinates through its pivot bits, completed by all combinations of
//!   the form's non-window ("free") pivot rows. A codeword missed by a
//!   form after radius r has more than r nonzero coordinates in that
//!   window, so after finishing radius r_j in every form, unseen words
//!   weigh at least the sum of (r_j + 1) over the disjoint windows. The
//!   walk stops when that lower bound meets the best word found; the
//!   radius log becomes the certificate's lower-bound trace.
//!
//! Certificates carry the claimed weight, a witness codeword, and the
//! trace; [`verify_certificate`] re-checks one against a code without
//! repeating the enumeration.

use crate::code::AdditiveCode;
use crate::error::{Error, Result};
use crate::gf4::F4Vector;
use crate::kernel::{self, GrayVisitor};

use std::fmt;

/// Resource knobs for the weight engines.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Maximum 2^rank for full enumeration (default 2^28).
    pub enum_budget: u64,
    /// Cap on windowed candidates per operation; beyond it, counting
    /// reports a partial result and the other operations error out.
    pub candidate_cap: u64,
    /// Forms carrying more free pivot rows than this stay out of lower
    /// bounds (their 2^free completion would be too wide).
    pub free_rank_cap: u32,
    /// Extra permuted forms used only for witness hunting.
    pub probe_forms: usize,
    /// Radius schedule cap for `find_word_of_weight_at_most`.
    pub find_radius_cap: u32,
    /// Worker threads; results are identical for any value.
    pub threads: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            enum_budget: 1 << 28,
            candidate_cap: u64::MAX,
            free_rank_cap: 16,
            probe_forms: 4,
            find_radius_cap: 12,
            threads: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

impl EngineConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_enum_budget(mut self, budget: u64) -> Self {
        self.enum_budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertMethod {
    FullEnumeration,
    WindowedBound,
}

impl fmt::Display for CertMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertMethod::FullEnumeration => write!(f, "full_enumeration"),
            CertMethod::WindowedBound => write!(f, "windowed_bound"),
        }
    }
}

/// One radius advancement of one form: after finishing radius r on a
/// window, every unseen codeword has more than r nonzero coordinates
/// there, so the window contributes r + 1 to the lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPass {
    pub form_index: usize,
    /// 1-based coordinates of the window.
    pub window: Vec<usize>,
    /// Pivot bits the form places inside its window.
    pub window_rank: usize,
    pub radius: u32,
    pub contribution: u32,
}

/// Proof object for a minimum-weight claim: an optional witness codeword
/// of the claimed weight plus a replayable lower-bound trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightCertificate {
    pub claimed_d: u32,
    pub witness: Option<F4Vector>,
    pub method: CertMethod,
    /// For full enumeration: nonzero words covered (2^rank - 1).
    pub words_enumerated: Option<u64>,
    /// For the windowed method: chronological radius log.
    pub passes: Vec<BoundPass>,
}

/// Result of [`count_words_of_weight`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub weight: u32,
    pub count: u64,
    /// False when the candidate cap cut certification short; the count is
    /// then only a lower bound.
    pub exhaustive: bool,
}

/// Outcome of [`verify_no_word_below`].
#[derive(Debug, Clone)]
pub enum VerifyOutcome {
    /// No codeword of weight below the target exists.
    Holds(WeightCertificate),
    /// A concrete codeword of weight below the target.
    Refuted(F4Vector),
}

impl VerifyOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, VerifyOutcome::Holds(_))
    }
}

// ---------------------------------------------------------------------------
// Full enumeration engine
// ---------------------------------------------------------------------------

struct MinVisitor<const W: usize> {
    best_w: u32,
    best_m: u64,
    best: ([u64; W], [u64; W]),
}

impl<const W: usize> MinVisitor<W> {
    fn new() -> Self {
        MinVisitor {
            best_w: u32::MAX,
            best_m: u64::MAX,
            best: ([0; W], [0; W]),
        }
    }
}

impl<const W: usize> GrayVisitor<W> for MinVisitor<W> {
    #[inline(always)]
    fn visit(&mut self, m: u64, a: &[u64; W], b: &[u64; W]) {
        let w = kernel::weight_of(a, b);
        if w < self.best_w {
            self.best_w = w;
            self.best_m = m;
            self.best = (*a, *b);
        }
    }
}

fn min_result<const W: usize>(v: MinVisitor<W>, n: usize) -> (u32, u64, F4Vector) {
    (v.best_w, v.best_m, planes_to_vector(n, &v.best))
}

fn min_of_range(gens: &[F4Vector], n: usize, lo: u64, hi: u64) -> (u32, u64, F4Vector) {
    kernel::gray_walk_dispatch(
        gens,
        lo,
        hi,
        MinVisitor::<1>::new,
        MinVisitor::<2>::new,
        MinVisitor::<4>::new,
        |v| min_result(v, n),
        |v| min_result(v, n),
        |v| min_result(v, n),
    )
}

/// Exact minimum weight by Gray-code enumeration of all nonzero words.
/// The witness is the first minimum-weight codeword in enumeration order.
pub fn min_weight_enumerate(code: &AdditiveCode, cfg: &EngineConfig) -> Result<WeightCertificate> {
    let total = code.enumeration_size(cfg.enum_budget)?;
    let n = code.len();
    let (w, _m, witness) = kernel::with_pool(cfg.threads, || {
        kernel::chunk_ranges(1, total)
            .into_par_iter()
            .map(|(lo, hi)| min_of_range(code.reduced_rows(), n, lo, hi))
            .reduce_with(|x, y| if y.0 < x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x })
            .expect("at least one chunk")
    });
    Ok(WeightCertificate {
        claimed_d: w,
        witness: Some(witness),
        method: CertMethod::FullEnumeration,
        words_enumerated: Some(total - 1),
        passes: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// Windowed forms
// ---------------------------------------------------------------------------

/// A row-reduced form: `rows[..window_rank]` pivot inside the window (one
/// or two rows per window coordinate), `rows[window_rank..]` pivot
/// outside it ("free" rows).
#[derive(Debug, Clone)]
pub(crate) struct WindowForm {
    rows: Vec<F4Vector>,
    /// 0-based window coordinates, in pivot order.
    window: Vec<u32>,
    /// Per window coordinate: its pivot row indices (None second entry
    /// for single-pivot coordinates).
    coord_rows: Vec<(usize, Option<usize>)>,
    window_rank: usize,
    free: usize,
}

impl WindowForm {
    fn window_size(&self) -> usize {
        self.window.len()
    }

    fn usable(&self, cfg: &EngineConfig) -> bool {
        (self.free as u32) <= cfg.free_rank_cap
    }

    /// Candidates at exactly radius r: coefficient of x^r in the product
    /// of (1 + options_c x) over window coordinates, times the free
    /// completion factor.
    fn radius_cost(&self, r: u32) -> f64 {
        let r = r as usize;
        let mut dp = vec![0f64; r + 1];
        dp[0] = 1.0;
        for &(_, second) in &self.coord_rows {
            let opts = if second.is_some() { 3.0 } else { 1.0 };
            for i in (1..=r).rev() {
                dp[i] += dp[i - 1] * opts;
            }
        }
        dp[r] * 2f64.powi(self.free.min(1023) as i32)
    }
}

/// Build the disjoint-window form sequence. Form 0 carries all k pivots
/// in its window; each later form pivots in so-far-unused coordinates
/// first and parks the remainder as free rows. Deterministic in the code
/// alone.
pub(crate) fn build_bound_forms(code: &AdditiveCode) -> Vec<WindowForm> {
    let n = code.len();
    let mut used = vec![false; n];
    let mut forms = Vec::new();
    loop {
        let mut order: Vec<u32> = Vec::with_capacity(2 * n);
        for c in 0..n as u32 {
            if !used[c as usize] {
                order.push(2 * c);
                order.push(2 * c + 1);
            }
        }
        if order.is_empty() {
            break;
        }
        for c in 0..n as u32 {
            if used[c as usize] {
                order.push(2 * c);
                order.push(2 * c + 1);
            }
        }
        let form = reduce_to_form(code, &order, &used);
        if form.window_rank == 0 {
            break;
        }
        for &c in &form.window {
            used[c as usize] = true;
        }
        forms.push(form);
    }
    forms
}

/// Permutation-ordered single forms for witness hunting; their windows
/// may overlap the bound windows, so they never enter lower bounds.
pub(crate) fn build_probe_forms(code: &AdditiveCode, count: usize) -> Vec<WindowForm> {
    let n = code.len();
    let used = vec![false; n];
    (0..count)
        .map(|i| {
            let mut perm: Vec<u32> = (0..n as u32).collect();
            let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ ((i as u64 + 1) << 32);
            for j in (1..n).rev() {
                let pick = (splitmix64(&mut state) % (j as u64 + 1)) as usize;
                perm.swap(j, pick);
            }
            let mut order = Vec::with_capacity(2 * n);
            for &c in &perm {
                order.push(2 * c);
                order.push(2 * c + 1);
            }
            reduce_to_form(code, &order, &used)
        })
        .collect()
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn reduce_to_form(code: &AdditiveCode, order: &[u32], used: &[bool]) -> WindowForm {
    let mut rows = code.reduced_rows().to_vec();
    let pivots = kernel::rref(&mut rows, order);
    let mut window: Vec<u32> = Vec::new();
    let mut coord_rows: Vec<(usize, Option<usize>)> = Vec::new();
    let mut window_rank = 0usize;
    for (row_idx, &p) in pivots.iter().enumerate() {
        let coord = p >> 1;
        if used[coord as usize] {
            continue; // free row: pivot outside this form's window
        }
        window_rank += 1;
        match window.last() {
            Some(&last) if last == coord => {
                coord_rows.last_mut().unwrap().1 = Some(row_idx);
            }
            _ => {
                window.push(coord);
                coord_rows.push((row_idx, None));
            }
        }
    }
    // Unused-coordinate bit columns come first in `order`, so the window
    // rows are exactly rows[..window_rank].
    debug_assert!(pivots
        .iter()
        .take(window_rank)
        .all(|&p| !used[(p >> 1) as usize]));
    let free = rows.len() - window_rank;
    WindowForm {
        rows,
        window,
        coord_rows,
        window_rank,
        free,
    }
}

// ---------------------------------------------------------------------------
// Windowed enumeration kernel
// ---------------------------------------------------------------------------

struct PackedForm<const W: usize> {
    opts_a: Vec<[[u64; W]; 3]>,
    opts_b: Vec<[[u64; W]; 3]>,
    opts_len: Vec<u8>,
    free_a: Vec<[u64; W]>,
    free_b: Vec<[u64; W]>,
}

fn to_planes<const W: usize>(row: &F4Vector) -> ([u64; W], [u64; W]) {
    let mut a = [0u64; W];
    let mut b = [0u64; W];
    a[..row.plane_a().len()].copy_from_slice(row.plane_a());
    b[..row.plane_b().len()].copy_from_slice(row.plane_b());
    (a, b)
}

fn pack_form<const W: usize>(form: &WindowForm, with_free: bool) -> PackedForm<W> {
    let mut opts_a = Vec::with_capacity(form.coord_rows.len());
    let mut opts_b = Vec::with_capacity(form.coord_rows.len());
    let mut opts_len = Vec::with_capacity(form.coord_rows.len());
    for &(first, second) in &form.coord_rows {
        let (fa, fb) = to_planes(&form.rows[first]);
        let mut oa = [[0u64; W]; 3];
        let mut ob = [[0u64; W]; 3];
        oa[0] = fa;
        ob[0] = fb;
        match second {
            Some(s) => {
                let (sa, sb) = to_planes(&form.rows[s]);
                oa[1] = sa;
                ob[1] = sb;
                for w in 0..W {
                    oa[2][w] = fa[w] ^ sa[w];
                    ob[2][w] = fb[w] ^ sb[w];
                }
                opts_len.push(3u8);
            }
            None => opts_len.push(1u8),
        }
        opts_a.push(oa);
        opts_b.push(ob);
    }
    let (free_a, free_b) = if with_free {
        form.rows[form.window_rank..].iter().map(to_planes).unzip()
    } else {
        (Vec::new(), Vec::new())
    };
    PackedForm {
        opts_a,
        opts_b,
        opts_len,
        free_a,
        free_b,
    }
}

/// Candidate consumer for the windowed walk.
trait Sink<const W: usize> {
    fn visit(&mut self, a: &[u64; W], b: &[u64; W]);
    #[inline(always)]
    fn want_more(&self) -> bool {
        true
    }
}

#[inline(always)]
fn xor_in<const W: usize>(dst: &mut [u64; W], src: &[u64; W]) {
    for i in 0..W {
        dst[i] ^= src[i];
    }
}

/// Visit the accumulated word and all its free-row completions.
fn leaf<const W: usize, S: Sink<W>>(pf: &PackedForm<W>, a: [u64; W], b: [u64; W], sink: &mut S) {
    sink.visit(&a, &b);
    if !pf.free_a.is_empty() {
        let mut ca = a;
        let mut cb = b;
        let total = 1u64 << pf.free_a.len();
        let mut t = 1u64;
        while t < total && sink.want_more() {
            let f = t.trailing_zeros() as usize;
            xor_in(&mut ca, &pf.free_a[f]);
            xor_in(&mut cb, &pf.free_b[f]);
            sink.visit(&ca, &cb);
            t += 1;
        }
    }
}

fn descend<const W: usize, S: Sink<W>>(
    pf: &PackedForm<W>,
    start: usize,
    left: u32,
    a: [u64; W],
    b: [u64; W],
    sink: &mut S,
) {
    if left == 0 {
        leaf(pf, a, b, sink);
        return;
    }
    let max_start = pf.opts_len.len() - left as usize;
    for c in start..=max_start {
        for o in 0..pf.opts_len[c] as usize {
            if !sink.want_more() {
                return;
            }
            let mut na = a;
            let mut nb = b;
            xor_in(&mut na, &pf.opts_a[c][o]);
            xor_in(&mut nb, &pf.opts_b[c][o]);
            descend(pf, c + 1, left - 1, na, nb, sink);
        }
    }
}

/// Work units of one (form, radius) block, in enumeration order.
enum Task {
    FreeOnly,
    One(usize),
    Two(usize, usize),
}

fn radius_tasks(m: usize, r: u32) -> Vec<Task> {
    match r {
        0 => vec![Task::FreeOnly],
        1 => (0..m).map(Task::One).collect(),
        _ => {
            let r = r as usize;
            let mut tasks = Vec::new();
            for c1 in 0..=m.saturating_sub(r) {
                for c2 in c1 + 1..=m - r + 1 {
                    tasks.push(Task::Two(c1, c2));
                }
            }
            tasks
        }
    }
}

/// Drops the all-zero word (the empty free combination at radius 0).
struct SkipZero<'a, S> {
    inner: &'a mut S,
}

impl<const W: usize, S: Sink<W>> Sink<W> for SkipZero<'_, S> {
    #[inline(always)]
    fn visit(&mut self, a: &[u64; W], b: &[u64; W]) {
        if a.iter().any(|&x| x != 0) || b.iter().any(|&x| x != 0) {
            self.inner.visit(a, b);
        }
    }
    #[inline(always)]
    fn want_more(&self) -> bool {
        self.inner.want_more()
    }
}

fn run_task<const W: usize, S: Sink<W>>(pf: &PackedForm<W>, r: u32, task: &Task, sink: &mut S) {
    let za = [0u64; W];
    let zb = [0u64; W];
    match *task {
        Task::FreeOnly => {
            if !pf.free_a.is_empty() {
                let mut skip = SkipZero { inner: sink };
                leaf(pf, za, zb, &mut skip);
            }
        }
        Task::One(c) => {
            for o in 0..pf.opts_len[c] as usize {
                if !sink.want_more() {
                    return;
                }
                let mut a = za;
                let mut b = zb;
                xor_in(&mut a, &pf.opts_a[c][o]);
                xor_in(&mut b, &pf.opts_b[c][o]);
                leaf(pf, a, b, sink);
            }
        }
        Task::Two(c1, c2) => {
            for o1 in 0..pf.opts_len[c1] as usize {
                for o2 in 0..pf.opts_len[c2] as usize {
                    if !sink.want_more() {
                        return;
                    }
                    let mut a = za;
                    let mut b = zb;
                    xor_in(&mut a, &pf.opts_a[c1][o1]);
                    xor_in(&mut b, &pf.opts_b[c1][o1]);
                    xor_in(&mut a, &pf.opts_a[c2][o2]);
                    xor_in(&mut b, &pf.opts_b[c2][o2]);
                    descend(pf, c2 + 1, r - 2, a, b, sink);
                }
            }
        }
    }
}

/// Run one (form, radius) block. Task boundaries depend only on the form
/// and radius, so merged results are worker-count independent.
fn run_radius<const W: usize, S, M>(
    form: &WindowForm,
    with_free: bool,
    r: u32,
    threads: usize,
    mk: M,
) -> Vec<S>
where
    S: Sink<W> + Send,
    M: Fn() -> S + Sync + Send,
{
    let pf = pack_form::<W>(form, with_free);
    let tasks = radius_tasks(form.window_size(), r);
    if tasks.len() <= 1 || threads <= 1 {
        tasks
            .iter()
            .map(|t| {
                let mut s = mk();
                run_task(&pf, r, t, &mut s);
                s
            })
            .collect()
    } else {
        kernel::with_pool(threads, || {
            tasks
                .par_iter()
                .map(|t| {
                    let mut s = mk();
                    run_task(&pf, r, t, &mut s);
                    s
                })
                .collect()
        })
    }
}

// ---------------------------------------------------------------------------
// Sinks
// ---------------------------------------------------------------------------

/// Strictly-improving minimum tracker; keeps the first minimum-weight
/// word in enumeration order.
struct MinSink<const W: usize> {
    best_w: u32,
    best: ([u64; W], [u64; W]),
}

impl<const W: usize> MinSink<W> {
    fn new() -> Self {
        MinSink {
            best_w: u32::MAX,
            best: ([0; W], [0; W]),
        }
    }
}

impl<const W: usize> Sink<W> for MinSink<W> {
    #[inline(always)]
    fn visit(&mut self, a: &[u64; W], b: &[u64; W]) {
        let w = kernel::weight_of(a, b);
        if w < self.best_w {
            self.best_w = w;
            self.best = (*a, *b);
        }
    }
}

/// Stops its task at the first word of weight at most `limit`.
struct HitSink<const W: usize> {
    limit: u32,
    hit: Option<([u64; W], [u64; W])>,
}

impl<const W: usize> Sink<W> for HitSink<W> {
    #[inline(always)]
    fn visit(&mut self, a: &[u64; W], b: &[u64; W]) {
        if self.hit.is_none() && kernel::weight_of(a, b) <= self.limit {
            self.hit = Some((*a, *b));
        }
    }
    #[inline(always)]
    fn want_more(&self) -> bool {
        self.hit.is_none()
    }
}

/// Collects words of one exact weight (deduplicated by the caller).
struct CollectSink<const W: usize> {
    target: u32,
    hits: Vec<([u64; W], [u64; W])>,
}

impl<const W: usize> Sink<W> for CollectSink<W> {
    #[inline(always)]
    fn visit(&mut self, a: &[u64; W], b: &[u64; W]) {
        if kernel::weight_of(a, b) == self.target {
            self.hits.push((*a, *b));
        }
    }
}

fn planes_to_vector<const W: usize>(n: usize, planes: &([u64; W], [u64; W])) -> F4Vector {
    let words = kernel::words_needed(n);
    F4Vector::from_planes(n, planes.0[..words].to_vec(), planes.1[..words].to_vec())
}

// ---------------------------------------------------------------------------
// Windowed operations
// ---------------------------------------------------------------------------

fn dispatch_width<R>(
    n: usize,
    f1: impl FnOnce() -> R,
    f2: impl FnOnce() -> R,
    f4: impl FnOnce() -> R,
) -> R {
    match kernel::words_needed(n) {
        1 => f1(),
        2 => f2(),
        3 | 4 => f4(),
        _ => panic!("windowed engine unsupported beyond 256 coordinates"),
    }
}

struct WindowedState {
    forms: Vec<WindowForm>,
    /// Finished radius per form; -1 means untouched.
    radii: Vec<i64>,
    usable: Vec<bool>,
    passes: Vec<BoundPass>,
    candidates: f64,
}

impl WindowedState {
    fn new(code: &AdditiveCode, cfg: &EngineConfig) -> WindowedState {
        let forms = build_bound_forms(code);
        let usable = forms.iter().map(|f| f.usable(cfg)).collect();
        let radii = vec![-1i64; forms.len()];
        WindowedState {
            forms,
            radii,
            usable,
            passes: Vec::new(),
            candidates: 0.0,
        }
    }

    fn bound(&self) -> u64 {
        self.radii
            .iter()
            .zip(&self.usable)
            .map(|(&r, &u)| if u { (r + 1) as u64 } else { 0 })
            .sum()
    }

    /// Next form to advance: cheapest next-radius block among usable,
    /// unexhausted forms (ties to the lower index). Form 0 has no free
    /// rows and is always usable, so None only happens once form 0 is
    /// fully enumerated.
    fn next_form(&self) -> Option<usize> {
        let mut best: Option<(f64, usize)> = None;
        for (j, form) in self.forms.iter().enumerate() {
            if !self.usable[j] || self.radii[j] >= form.window_size() as i64 {
                continue;
            }
            let cost = form.radius_cost((self.radii[j] + 1) as u32);
            if best.map_or(true, |(c, _)| cost < c) {
                best = Some((cost, j));
            }
        }
        best.map(|(_, j)| j)
    }

    fn record_pass(&mut self, j: usize) {
        let form = &self.forms[j];
        self.passes.push(BoundPass {
            form_index: j,
            window: form.window.iter().map(|&c| c as usize + 1).collect(),
            window_rank: form.window_rank,
            radius: self.radii[j] as u32,
            contribution: (self.radii[j] + 1) as u32,
        });
    }

    /// Form 0 fully enumerated means every codeword was visited.
    fn exhausted(&self) -> bool {
        self.radii[0] >= self.forms[0].window_size() as i64
    }
}

fn full_coverage_cert(code: &AdditiveCode, claimed_d: u32, witness: Option<F4Vector>) -> WeightCertificate {
    // Reaching radius = window size on form 0 implies ~2^rank visits, so
    // the rank is necessarily small here.
    assert!(code.rank() < 64);
    WeightCertificate {
        claimed_d,
        witness,
        method: CertMethod::FullEnumeration,
        words_enumerated: Some((1u64 << code.rank()) - 1),
        passes: Vec::new(),
    }
}

fn merge_min<const W: usize>(sinks: Vec<MinSink<W>>, best: &mut Option<(u32, F4Vector)>, n: usize) {
    for s in sinks {
        if s.best_w < best.as_ref().map_or(u32::MAX, |b| b.0) {
            *best = Some((s.best_w, planes_to_vector(n, &s.best)));
        }
    }
}

fn windowed_min_impl<const W: usize>(
    code: &AdditiveCode,
    cfg: &EngineConfig,
) -> Result<WeightCertificate> {
    let n = code.len();
    let mut st = WindowedState::new(code, cfg);
    let mut best: Option<(u32, F4Vector)> = None;
    loop {
        if let Some((bw, _)) = &best {
            if st.bound() >= *bw as u64 {
                break;
            }
        }
        if st.exhausted() {
            let (claimed_d, witness) = best.ok_or(Error::TrivialCode)?;
            return Ok(full_coverage_cert(code, claimed_d, Some(witness)));
        }
        let j = st.next_form().expect("form 0 is always advanceable");
        let r = (st.radii[j] + 1) as u32;
        st.candidates += st.forms[j].radius_cost(r);
        if st.candidates > cfg.candidate_cap as f64 {
            return Err(Error::BudgetExceeded {
                rank: code.rank(),
                budget: cfg.candidate_cap,
            });
        }
        let sinks = run_radius::<W, _, _>(&st.forms[j], true, r, cfg.threads, MinSink::new);
        st.radii[j] = r as i64;
        st.record_pass(j);
        merge_min(sinks, &mut best, n);
    }
    let (claimed_d, witness) = best.ok_or(Error::TrivialCode)?;
    Ok(WeightCertificate {
        claimed_d,
        witness: Some(witness),
        method: CertMethod::WindowedBound,
        words_enumerated: None,
        passes: st.passes,
    })
}

/// Exact minimum weight by the windowed bounding scheme; viable far
/// beyond the full-enumeration budget.
pub fn min_weight_windowed(code: &AdditiveCode, cfg: &EngineConfig) -> Result<WeightCertificate> {
    if code.rank() == 0 {
        return Err(Error::TrivialCode);
    }
    dispatch_width(
        code.len(),
        || windowed_min_impl::<1>(code, cfg),
        || windowed_min_impl::<2>(code, cfg),
        || windowed_min_impl::<4>(code, cfg),
    )
}

/// Whichever engine fits: full enumeration under the budget, otherwise
/// the windowed scheme.
pub fn min_weight_auto(code: &AdditiveCode, cfg: &EngineConfig) -> Result<WeightCertificate> {
    if code.enumeration_size(cfg.enum_budget).is_ok() {
        min_weight_enumerate(code, cfg)
    } else {
        min_weight_windowed(code, cfg)
    }
}

fn verify_impl<const W: usize>(
    code: &AdditiveCode,
    d: u32,
    cfg: &EngineConfig,
) -> Result<VerifyOutcome> {
    let n = code.len();
    let mut st = WindowedState::new(code, cfg);
    while st.bound() < d as u64 {
        if st.exhausted() {
            return Ok(VerifyOutcome::Holds(full_coverage_cert(code, d, None)));
        }
        let j = st.next_form().expect("form 0 is always advanceable");
        let r = (st.radii[j] + 1) as u32;
        st.candidates += st.forms[j].radius_cost(r);
        if st.candidates > cfg.candidate_cap as f64 {
            return Err(Error::BudgetExceeded {
                rank: code.rank(),
                budget: cfg.candidate_cap,
            });
        }
        let sinks =
            run_radius::<W, _, _>(&st.forms[j], true, r, cfg.threads, || HitSink::<W> {
                limit: d - 1,
                hit: None,
            });
        st.radii[j] = r as i64;
        st.record_pass(j);
        for s in &sinks {
            if let Some(planes) = &s.hit {
                return Ok(VerifyOutcome::Refuted(planes_to_vector(n, planes)));
            }
        }
    }
    Ok(VerifyOutcome::Holds(WeightCertificate {
        claimed_d: d,
        witness: None,
        method: CertMethod::WindowedBound,
        words_enumerated: None,
        passes: st.passes,
    }))
}

/// Prove there is no codeword of weight below d, or produce one. The
/// proof may finish long before the exact minimum weight is known.
pub fn verify_no_word_below(
    code: &AdditiveCode,
    d: u32,
    cfg: &EngineConfig,
) -> Result<VerifyOutcome> {
    if code.rank() == 0 {
        return Err(Error::TrivialCode);
    }
    if d <= 1 {
        // Nonzero words weigh at least 1; nothing to prove.
        return Ok(VerifyOutcome::Holds(WeightCertificate {
            claimed_d: d,
            witness: None,
            method: CertMethod::WindowedBound,
            words_enumerated: None,
            passes: Vec::new(),
        }));
    }
    dispatch_width(
        code.len(),
        || verify_impl::<1>(code, d, cfg),
        || verify_impl::<2>(code, d, cfg),
        || verify_impl::<4>(code, d, cfg),
    )
}

fn find_impl<const W: usize>(code: &AdditiveCode, d: u32, cfg: &EngineConfig) -> Option<F4Vector> {
    let n = code.len();
    let mut forms = build_bound_forms(code);
    forms.extend(build_probe_forms(code, cfg.probe_forms));
    let cap = cfg.find_radius_cap.min(code.rank() as u32);
    for r in 0..=cap {
        for form in &forms {
            if r as usize > form.window_size() {
                continue;
            }
            let with_free = form.free > 0 && form.usable(cfg);
            if r == 0 && !with_free {
                continue;
            }
            let sinks = run_radius::<W, _, _>(form, with_free, r, cfg.threads, || HitSink::<W> {
                limit: d,
                hit: None,
            });
            for s in &sinks {
                if let Some(planes) = &s.hit {
                    return Some(planes_to_vector(n, planes));
                }
            }
        }
    }
    None
}

/// Bounded-radius hunt for a codeword of weight at most d. `None` is not
/// evidence of nonexistence.
pub fn find_word_of_weight_at_most(
    code: &AdditiveCode,
    d: u32,
    cfg: &EngineConfig,
) -> Option<F4Vector> {
    if code.rank() == 0 || d == 0 {
        return None;
    }
    dispatch_width(
        code.len(),
        || find_impl::<1>(code, d, cfg),
        || find_impl::<2>(code, d, cfg),
        || find_impl::<4>(code, d, cfg),
    )
}

struct DistVisitor<const W: usize> {
    counts: Vec<u64>,
}

impl<const W: usize> GrayVisitor<W> for DistVisitor<W> {
    #[inline(always)]
    fn visit(&mut self, _m: u64, a: &[u64; W], b: &[u64; W]) {
        self.counts[kernel::weight_of(a, b) as usize] += 1;
    }
}

fn count_windowed_impl<const W: usize>(
    code: &AdditiveCode,
    w: u32,
    cfg: &EngineConfig,
) -> CountReport {
    let mut st = WindowedState::new(code, cfg);
    // Plan radii until every weight-w word is reachable in some form:
    // words missed by the whole plan then weigh at least bound() >= w+1.
    let mut feasible = true;
    while st.bound() < w as u64 + 1 && !st.exhausted() {
        match st.next_form() {
            Some(j) => {
                let r = (st.radii[j] + 1) as u32;
                let cost = st.forms[j].radius_cost(r);
                if st.candidates + cost > cfg.candidate_cap as f64 {
                    feasible = false;
                    break;
                }
                st.candidates += cost;
                st.radii[j] = r as i64;
            }
            None => {
                feasible = false;
                break;
            }
        }
    }
    let exhaustive = feasible || st.exhausted();
    let mut all_hits: Vec<([u64; W], [u64; W])> = Vec::new();
    for (j, form) in st.forms.iter().enumerate() {
        for r in 0..=st.radii[j] {
            let sinks = run_radius::<W, _, _>(form, true, r as u32, cfg.threads, || {
                CollectSink::<W> {
                    target: w,
                    hits: Vec::new(),
                }
            });
            for s in sinks {
                all_hits.extend(s.hits);
            }
        }
    }
    all_hits.sort_unstable();
    all_hits.dedup();
    CountReport {
        weight: w,
        count: all_hits.len() as u64,
        exhaustive,
    }
}

/// Exact count of codewords of weight exactly w. Full enumeration under
/// the budget; otherwise complete low-weight enumeration with cross-form
/// deduplication. `exhaustive: false` flags a partial count (a lower
/// bound) when the candidate cap cut the plan short.
pub fn count_words_of_weight(code: &AdditiveCode, w: u32, cfg: &EngineConfig) -> Result<CountReport> {
    let n = code.len();
    if w as usize > n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: w as usize,
        });
    }
    if w == 0 {
        return Ok(CountReport {
            weight: 0,
            count: 1,
            exhaustive: true,
        });
    }
    if code.rank() == 0 {
        return Ok(CountReport {
            weight: w,
            count: 0,
            exhaustive: true,
        });
    }
    if let Ok(total) = code.enumeration_size(cfg.enum_budget) {
        let counts = kernel::with_pool(cfg.threads, || {
            kernel::chunk_ranges(1, total)
                .into_par_iter()
                .map(|(lo, hi)| {
                    kernel::gray_walk_dispatch(
                        code.reduced_rows(),
                        lo,
                        hi,
                        || DistVisitor::<1> { counts: vec![0; n + 1] },
                        || DistVisitor::<2> { counts: vec![0; n + 1] },
                        || DistVisitor::<4> { counts: vec![0; n + 1] },
                        |v| v.counts,
                        |v| v.counts,
                        |v| v.counts,
                    )
                })
                .reduce(
                    || vec![0u64; n + 1],
                    |mut acc, c| {
                        for (a, b) in acc.iter_mut().zip(c) {
                            *a += b;
                        }
                        acc
                    },
                )
        });
        return Ok(CountReport {
            weight: w,
            count: counts[w as usize],
            exhaustive: true,
        });
    }
    Ok(dispatch_width(
        n,
        || count_windowed_impl::<1>(code, w, cfg),
        || count_windowed_impl::<2>(code, w, cfg),
        || count_windowed_impl::<4>(code, w, cfg),
    ))
}

// ---------------------------------------------------------------------------
// Certificate serialization and re-checking
// ---------------------------------------------------------------------------

impl WeightCertificate {
    /// Stable-field-order text rendering for third-party re-verification.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        out.push_str("f4codes-certificate v1\n");
        let _ = writeln!(out, "claimed_d: {}", self.claimed_d);
        let _ = writeln!(out, "method: {}", self.method);
        let _ = writeln!(
            out,
            "witness: {}",
            self.witness
                .as_ref()
                .map_or_else(|| "-".to_string(), |w| w.to_alphabet_string())
        );
        let _ = writeln!(
            out,
            "words_enumerated: {}",
            self.words_enumerated
                .map_or_else(|| "-".to_string(), |v| v.to_string())
        );
        let _ = writeln!(out, "passes: {}", self.passes.len());
        for p in &self.passes {
            let _ = writeln!(
                out,
                "pass form={} window={} window_rank={} r={} contribution={}",
                p.form_index,
                p.window
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                p.window_rank,
                p.radius,
                p.contribution
            );
        }
        out
    }

    pub fn from_text(text: &str) -> Result<WeightCertificate> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty certificate".into()))?;
        if header.trim() != "f4codes-certificate v1" {
            return Err(Error::Parse(format!("bad certificate header {header:?}")));
        }
        let mut field = |name: &str| -> Result<String> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing field {name}")))?;
            let (k, v) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad line {line:?}")))?;
            if k.trim() != name {
                return Err(Error::Parse(format!("expected field {name}, got {k}")));
            }
            Ok(v.trim().to_string())
        };
        let claimed_d: u32 = field("claimed_d")?
            .parse()
            .map_err(|_| Error::Parse("claimed_d not an integer".into()))?;
        let method = match field("method")?.as_str() {
            "full_enumeration" => CertMethod::FullEnumeration,
            "windowed_bound" => CertMethod::WindowedBound,
            other => return Err(Error::Parse(format!("unknown method {other:?}"))),
        };
        let witness_s = field("witness")?;
        let witness = if witness_s == "-" {
            None
        } else {
            Some(F4Vector::from_alphabet_str(&witness_s).map_err(Error::Parse)?)
        };
        let we_s = field("words_enumerated")?;
        let words_enumerated = if we_s == "-" {
            None
        } else {
            Some(
                we_s.parse::<u64>()
                    .map_err(|_| Error::Parse("words_enumerated not an integer".into()))?,
            )
        };
        let pass_count: usize = field("passes")?
            .parse()
            .map_err(|_| Error::Parse("passes not an integer".into()))?;
        let mut passes = Vec::with_capacity(pass_count);
        for _ in 0..pass_count {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing pass line".into()))?;
            passes.push(parse_pass_line(line)?);
        }
        Ok(WeightCertificate {
            claimed_d,
            witness,
            method,
            words_enumerated,
            passes,
        })
    }
}

fn parse_pass_line(line: &str) -> Result<BoundPass> {
    let mut form_index = None;
    let mut window = None;
    let mut window_rank = None;
    let mut radius = None;
    let mut contribution = None;
    for tok in line.split_whitespace() {
        if tok == "pass" {
            continue;
        }
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad pass token {tok:?}")))?;
        match k {
            "form" => form_index = v.parse().ok(),
            "window" => {
                window = Some(
                    v.split(',')
                        .map(|t| {
                            t.parse::<usize>()
                                .map_err(|_| Error::Parse("bad window coordinate".into()))
                        })
                        .collect::<Result<Vec<usize>>>()?,
                )
            }
            "window_rank" => window_rank = v.parse().ok(),
            "r" => radius = v.parse().ok(),
            "contribution" => contribution = v.parse().ok(),
            _ => return Err(Error::Parse(format!("unknown pass field {k:?}"))),
        }
    }
    Ok(BoundPass {
        form_index: form_index.ok_or_else(|| Error::Parse("pass missing form".into()))?,
        window: window.ok_or_else(|| Error::Parse("pass missing window".into()))?,
        window_rank: window_rank.ok_or_else(|| Error::Parse("pass missing window_rank".into()))?,
        radius: radius.ok_or_else(|| Error::Parse("pass missing r".into()))?,
        contribution: contribution.ok_or_else(|| Error::Parse("pass missing contribution".into()))?,
    })
}

/// Independent certificate checker: validates the witness against the
/// code and recomputes the lower-bound trace from the certificate plus
/// the deterministically rebuilt reduced forms. Never repeats the
/// enumeration.
pub fn verify_certificate(code: &AdditiveCode, cert: &WeightCertificate) -> Result<()> {
    if let Some(w) = &cert.witness {
        if !code.contains(w)? {
            return Err(Error::BadCertificate("witness is not a codeword".into()));
        }
        if w.weight() as u32 != cert.claimed_d {
            return Err(Error::BadCertificate(format!(
                "witness weight {} != claimed_d {}",
                w.weight(),
                cert.claimed_d
            )));
        }
    }
    match cert.method {
        CertMethod::FullEnumeration => {
            let k = code.rank();
            if k >= 64 {
                return Err(Error::BadCertificate(
                    "full enumeration claimed for rank >= 64".into(),
                ));
            }
            if cert.words_enumerated != Some((1u64 << k) - 1) {
                return Err(Error::BadCertificate(format!(
                    "words_enumerated {:?} != 2^{k} - 1",
                    cert.words_enumerated
                )));
            }
            Ok(())
        }
        CertMethod::WindowedBound => {
            if cert.claimed_d <= 1 && cert.passes.is_empty() {
                return Ok(()); // vacuous: nonzero words weigh at least 1
            }
            let forms = build_bound_forms(code);
            let mut latest: Vec<Option<u32>> = vec![None; forms.len()];
            for p in &cert.passes {
                let form = forms.get(p.form_index).ok_or_else(|| {
                    Error::BadCertificate(format!("pass references unknown form {}", p.form_index))
                })?;
                let want: Vec<usize> = form.window.iter().map(|&c| c as usize + 1).collect();
                if p.window != want {
                    return Err(Error::BadCertificate(format!(
                        "pass window mismatch for form {}",
                        p.form_index
                    )));
                }
                if p.window_rank != form.window_rank {
                    return Err(Error::BadCertificate(format!(
                        "pass window_rank {} != recomputed {}",
                        p.window_rank, form.window_rank
                    )));
                }
                if p.radius as usize > form.window_size() {
                    return Err(Error::BadCertificate("pass radius beyond window size".into()));
                }
                if p.contribution != p.radius + 1 {
                    return Err(Error::BadCertificate(format!(
                        "pass contribution {} != r + 1 = {}",
                        p.contribution,
                        p.radius + 1
                    )));
                }
                match latest[p.form_index] {
                    Some(prev) if p.radius != prev + 1 => {
                        return Err(Error::BadCertificate(
                            "pass radii not consecutive per form".into(),
                        ))
                    }
                    None if p.radius != 0 => {
                        return Err(Error::BadCertificate(
                            "first pass of a form must have radius 0".into(),
                        ))
                    }
                    _ => {}
                }
                latest[p.form_index] = Some(p.radius);
            }
            // Rebuilt windows are pairwise disjoint by construction; sum
            // each form's final contribution.
            let bound: u64 = latest.iter().map(|r| r.map_or(0u64, |r| r as u64 + 1)).sum();
            if bound < cert.claimed_d as u64 {
                return Err(Error::BadCertificate(format!(
                    "trace bound {bound} below claimed_d {}",
                    cert.claimed_d
                )));
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantPair;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg() -> EngineConfig {
        EngineConfig::default().with_threads(1)
    }

    fn code(n: usize, a: &[usize], b: &[usize]) -> AdditiveCode {
        AdditiveCode::from_pair(&CirculantPair::from_positions(n, a, b).unwrap()).unwrap()
    }

    fn c14ii() -> AdditiveCode {
        code(7, &[2, 7], &[1, 2, 5])
    }

    fn random_pair(rng: &mut ChaCha8Rng, n: usize) -> CirculantPair {
        let mut a_pos = Vec::new();
        for j in 2..=n {
            let partner = ((n + 1 - j) % n) + 1;
            if j <= partner && rng.gen_bool(0.5) {
                a_pos.push(j);
                if partner != j {
                    a_pos.push(partner);
                }
            }
        }
        let b_pos: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        CirculantPair::from_positions(n, &a_pos, &b_pos).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let cert = min_weight_enumerate(&c14ii(), &cfg()).unwrap();
        assert_eq!(cert.claimed_d, 6);
        let w = cert.witness.as_ref().unwrap();
        assert_eq!(w.weight(), 6);
        assert!(c14ii().contains(w).unwrap());
        verify_certificate(&c14ii(), &cert).unwrap();

        // Zero graph: minimum weight 1.
        let z = AdditiveCode::from_graph(&crate::circulant::BinaryMatrix::zero(5, 5)).unwrap();
        assert_eq!(min_weight_enumerate(&z, &cfg()).unwrap().claimed_d, 1);

        // C(20,II): d = 8.
        let c = code(10, &[3, 9], &[1, 2, 3, 6, 7]);
        assert_eq!(min_weight_enumerate(&c, &cfg()).unwrap().claimed_d, 8);
    }

    #[test]
    fn windowed_matches_enumerate_on_small_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x3111);
        for _ in 0..40 {
            let n = rng.gen_range(2..=10);
            let c = AdditiveCode::from_pair(&random_pair(&mut rng, n)).unwrap();
            let by_enum = min_weight_enumerate(&c, &cfg()).unwrap();
            let by_window = min_weight_windowed(&c, &cfg()).unwrap();
            assert_eq!(by_enum.claimed_d, by_window.claimed_d, "pair order {n}");
            verify_certificate(&c, &by_window).unwrap();
        }
    }

    #[test]
    fn windowed_c36ii() {
        let c = code(18, &[2, 4, 5, 6, 14, 15, 16, 18], &[1, 2, 4, 5, 7, 8, 9, 10, 11, 14, 15]);
        let cert = min_weight_windowed(&c, &cfg()).unwrap();
        assert_eq!(cert.claimed_d, 12);
        verify_certificate(&c, &cert).unwrap();
    }

    #[test]
    fn verify_examples() {
        let c = c14ii();
        match verify_no_word_below(&c, 7, &cfg()).unwrap() {
            VerifyOutcome::Refuted(w) => assert_eq!(w.weight(), 6),
            VerifyOutcome::Holds(_) => panic!("minimum weight is 6"),
        }
        match verify_no_word_below(&c, 6, &cfg()).unwrap() {
            VerifyOutcome::Holds(cert) => {
                assert!(cert.witness.is_none());
                verify_certificate(&c, &cert).unwrap();
            }
            VerifyOutcome::Refuted(w) => panic!("unexpected word of weight {}", w.weight()),
        }
        // Vacuous target.
        match verify_no_word_below(&c, 1, &cfg()).unwrap() {
            VerifyOutcome::Holds(cert) => {
                assert!(cert.passes.is_empty());
                verify_certificate(&c, &cert).unwrap();
            }
            _ => panic!(),
        }
    }

    #[test]
    fn find_examples() {
        let c = c14ii();
        assert!(find_word_of_weight_at_most(&c, 5, &cfg()).is_none());
        let w = find_word_of_weight_at_most(&c, 6, &cfg()).unwrap();
        assert_eq!(w.weight(), 6);
        assert!(c.contains(&w).unwrap());
    }

    #[test]
    fn count_examples() {
        let c = c14ii();
        let r = count_words_of_weight(&c, 0, &cfg()).unwrap();
        assert_eq!((r.count, r.exhaustive), (1, true));

        let dist = c.weight_distribution(1 << 28, 1).unwrap();
        for w in [6u32, 7, 8] {
            let full = count_words_of_weight(&c, w, &cfg()).unwrap();
            assert_eq!(full.count, dist[w as usize]);
            assert!(full.exhaustive);
            // Force the windowed path with a tiny enumeration budget.
            let tiny = EngineConfig {
                enum_budget: 2,
                ..cfg()
            };
            let windowed = count_words_of_weight(&c, w, &tiny).unwrap();
            assert_eq!(windowed.count, dist[w as usize], "weight {w}");
            assert!(windowed.exhaustive);
        }
        assert!(count_words_of_weight(&c, 15, &cfg()).is_err());
    }

    #[test]
    fn certificate_text_round_trip_and_tamper() {
        let c = c14ii();
        let cert = min_weight_windowed(&c, &cfg()).unwrap();
        let text = cert.to_text();
        let parsed = WeightCertificate::from_text(&text).unwrap();
        assert_eq!(parsed, cert);
        verify_certificate(&c, &parsed).unwrap();

        let mut tampered = cert.clone();
        tampered.claimed_d += 1;
        assert!(verify_certificate(&c, &tampered).is_err());

        let mut tampered = cert.clone();
        tampered.witness = Some(F4Vector::zero(14));
        assert!(verify_certificate(&c, &tampered).is_err());

        let mut tampered = cert.clone();
        for p in &mut tampered.passes {
            p.contribution += 1;
        }
        assert!(verify_certificate(&c, &tampered).is_err());

        // Inflating the claim without a witness must also fail.
        let mut tampered = cert;
        tampered.witness = None;
        tampered.claimed_d = 13;
        assert!(verify_certificate(&c, &tampered).is_err());
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let c = code(8, &[2, 8], &[1, 2, 5]);
        let base = min_weight_windowed(&c, &cfg()).unwrap();
        for threads in [2, 4, 8] {
            let cert = min_weight_windowed(&c, &EngineConfig::default().with_threads(threads)).unwrap();
            assert_eq!(cert, base);
        }
        let base_find = find_word_of_weight_at_most(&c, 6, &cfg());
        for threads in [2, 4, 8] {
            let f = find_word_of_weight_at_most(&c, 6, &EngineConfig::default().with_threads(threads));
            assert_eq!(f, base_find);
        }
    }

    #[test]
    fn budget_exceeded_reported() {
        let c = c14ii();
        let starved = EngineConfig {
            enum_budget: 2,
            candidate_cap: 4,
            ..cfg()
        };
        assert!(matches!(
            min_weight_windowed(&c, &starved),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
