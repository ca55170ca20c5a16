//! Search over circulant-pair space (and the single-circulant space) for
//! the largest minimum weight.
//!
//! The candidate space is indexed linearly: the symmetric support of A
//! contributes floor(n/2) free bits (mirror pairs flip together), the
//! support of B contributes n bits walked in Gray order. Candidates are
//! processed in batches of `checkpoint_interval`; inside a batch they are
//! evaluated in parallel and merged in index order, so records are
//! bit-identical for any worker count and a run can be interrupted and
//! resumed at any checkpoint.
//!
//! Per candidate: a constant-time type prediction filters first, then a
//! bounded-radius probe tries to exhibit a word below the running record
//! (early rejection), and only survivors get full exact certification.
//! Probe misses cost extra certification work but never change results.

use crate::circulant::{CirculantPair, SupportSet};
use crate::code::{predict_type_prop1, AdditiveCode, TypeLabel};
use crate::error::{Error, Result};
use crate::kernel;
use crate::minweight::{find_word_of_weight_at_most, min_weight_auto, EngineConfig};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::atomic::{AtomicU32, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeFilter {
    Any,
    TypeI,
    TypeII,
}

impl TypeFilter {
    fn admits(self, t: TypeLabel) -> bool {
        match self {
            TypeFilter::Any => true,
            TypeFilter::TypeI => t == TypeLabel::TypeI,
            TypeFilter::TypeII => t == TypeLabel::TypeII,
        }
    }
}

/// Which construction the search walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    /// Codes C(A,B) of length 2n (A symmetric circulant, B circulant).
    Pair,
    /// Codes with generator A + wI of length n (A symmetric circulant).
    Single,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Code length: 2n for pair mode, n for single-circulant mode.
    pub length: usize,
    pub space: SpaceKind,
    pub mode: SearchMode,
    pub type_filter: TypeFilter,
    pub seed: u64,
    /// Early-reject floor: candidates shown to carry a word below this
    /// are dropped without certification.
    pub d_min: u32,
    /// Max candidates; `None` means the whole space (exhaustive only).
    pub budget: Option<u64>,
    pub checkpoint_interval: u64,
    /// Skip pairs that are not lexicographically minimal under
    /// simultaneous decimation and B-shift. Off by default: the induced
    /// equivalence is plausible but cross-checked rather than assumed.
    pub reduce_by_decimation: bool,
    /// Random mode: evaluate this pair as candidate 0.
    pub start: Option<CirculantPair>,
    /// Bit-size cap on the exhaustive space.
    pub space_cap_bits: u32,
    /// Probe depth for early rejection.
    pub probe_radius: u32,
    pub engine: EngineConfig,
}

impl SearchConfig {
    pub fn exhaustive(length: usize) -> SearchConfig {
        SearchConfig {
            length,
            space: SpaceKind::Pair,
            mode: SearchMode::Exhaustive,
            type_filter: TypeFilter::Any,
            seed: 0,
            d_min: 0,
            budget: None,
            checkpoint_interval: 10_000,
            reduce_by_decimation: false,
            start: None,
            space_cap_bits: 34,
            probe_radius: 4,
            engine: EngineConfig::default(),
        }
    }

    pub fn random(length: usize, seed: u64, budget: u64) -> SearchConfig {
        SearchConfig {
            mode: SearchMode::Random,
            seed,
            budget: Some(budget),
            ..SearchConfig::exhaustive(length)
        }
    }

    pub fn single(length: usize) -> SearchConfig {
        SearchConfig {
            space: SpaceKind::Single,
            ..SearchConfig::exhaustive(length)
        }
    }

    fn order(&self) -> usize {
        match self.space {
            SpaceKind::Pair => self.length / 2,
            SpaceKind::Single => self.length,
        }
    }

    fn validate(&self) -> Result<()> {
        match self.space {
            SpaceKind::Pair => {
                if self.length < 2 || self.length % 2 != 0 {
                    return Err(Error::Parse(format!(
                        "pair search length must be even and positive, got {}",
                        self.length
                    )));
                }
            }
            SpaceKind::Single => {
                if self.length < 1 {
                    return Err(Error::Parse("single search length must be positive".into()));
                }
            }
        }
        if self.mode == SearchMode::Random && self.budget.is_none() {
            return Err(Error::Parse("random search needs a candidate budget".into()));
        }
        Ok(())
    }
}

/// A search candidate: the compact description of one code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Candidate {
    Pair(CirculantPair),
    Single(SupportSet),
}

impl Candidate {
    pub fn build_code(&self) -> Result<AdditiveCode> {
        match self {
            Candidate::Pair(p) => AdditiveCode::from_pair(p),
            Candidate::Single(s) => AdditiveCode::from_single_circulant(s),
        }
    }

    fn spec_line(&self, name: &str) -> String {
        match self {
            Candidate::Pair(p) => format!(
                "witness name={name} n={} A={} B={}",
                p.order(),
                p.supp_a().to_list_string(),
                p.supp_b().to_list_string()
            ),
            Candidate::Single(s) => format!(
                "witness name={name} n={} A={}",
                s.order(),
                s.to_list_string()
            ),
        }
    }
}

const WITNESS_CAP: usize = 64;

/// Best results of a run with a resumable cursor.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchRecord {
    /// Largest certified minimum weight; 0 before any certification.
    pub best_d: u32,
    /// Candidates achieving best_d, in candidate-index order, capped.
    pub witnesses: Vec<Candidate>,
    pub candidates_examined: u64,
    /// Next candidate index to process.
    pub cursor: u64,
    pub finished: bool,
    /// Best per type with one witness each (filter = Any only).
    pub type_bests: Vec<(TypeLabel, u32, Candidate)>,
}

impl SearchRecord {
    fn empty() -> SearchRecord {
        SearchRecord {
            best_d: 0,
            witnesses: Vec::new(),
            candidates_examined: 0,
            cursor: 0,
            finished: false,
            type_bests: Vec::new(),
        }
    }

    pub fn type_best(&self, t: TypeLabel) -> Option<u32> {
        self.type_bests
            .iter()
            .find(|(tt, _, _)| *tt == t)
            .map(|(_, d, _)| *d)
    }

    /// One checkpoint line: `examined=<int> best_d=<int> cursor=<hex>`.
    pub fn progress_line(&self) -> String {
        format!(
            "examined={} best_d={} cursor={:x}",
            self.candidates_examined, self.best_d, self.cursor
        )
    }
}

// ---------------------------------------------------------------------------
// Candidate spaces
// ---------------------------------------------------------------------------

/// Free A-support positions: one representative per mirror pair
/// {j, n+2-j}, including the self-paired n/2+1 when n is even.
fn free_a_positions(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&j| {
            let partner = ((n + 1 - j) % n) + 1;
            j <= partner
        })
        .collect()
}

fn a_support_from_bits(n: usize, free: &[usize], bits: u64) -> SupportSet {
    let mut positions = Vec::new();
    for (i, &j) in free.iter().enumerate() {
        if bits >> i & 1 == 1 {
            positions.push(j);
            let partner = ((n + 1 - j) % n) + 1;
            if partner != j {
                positions.push(partner);
            }
        }
    }
    SupportSet::new(n, positions).expect("mirror-closed support is valid")
}

fn b_support_from_bits(n: usize, bits: u64) -> SupportSet {
    let positions: Vec<usize> = (0..n).filter(|i| bits >> i & 1 == 1).map(|i| i + 1).collect();
    SupportSet::new(n, positions).expect("bit support is valid")
}

struct Space {
    kind: SpaceKind,
    n: usize,
    free_a: Vec<usize>,
    b_bits: u32,
}

impl Space {
    fn new(cfg: &SearchConfig) -> Result<Space> {
        let n = cfg.order();
        let free_a = free_a_positions(n);
        let b_bits = match cfg.space {
            SpaceKind::Pair => n as u32,
            SpaceKind::Single => 0,
        };
        let bits = free_a.len() as u32 + b_bits;
        if cfg.mode == SearchMode::Exhaustive && bits > cfg.space_cap_bits {
            return Err(Error::SpaceExceeded {
                bits,
                cap_bits: cfg.space_cap_bits,
            });
        }
        Ok(Space {
            kind: cfg.space,
            n,
            free_a,
            b_bits,
        })
    }

    fn size(&self) -> u64 {
        1u64 << (self.free_a.len() as u32 + self.b_bits)
    }

    /// Exhaustive order: A bits in the high part, B walked in Gray order
    /// so consecutive candidates differ in one column cycle of B.
    fn candidate_at(&self, index: u64) -> Candidate {
        match self.kind {
            SpaceKind::Pair => {
                let b_mask = (1u64 << self.b_bits) - 1;
                let b_lin = index & b_mask;
                let b_code = b_lin ^ (b_lin >> 1);
                let a_bits = index >> self.b_bits;
                Candidate::Pair(
                    CirculantPair::new(
                        a_support_from_bits(self.n, &self.free_a, a_bits),
                        b_support_from_bits(self.n, b_code),
                    )
                    .expect("constructed pair valid"),
                )
            }
            SpaceKind::Single => {
                Candidate::Single(a_support_from_bits(self.n, &self.free_a, index))
            }
        }
    }

    fn random_candidate(&self, rng: &mut ChaCha8Rng) -> Candidate {
        let a_mask = if self.free_a.is_empty() {
            0
        } else {
            (1u64 << self.free_a.len()) - 1
        };
        let a_bits = rng.gen::<u64>() & a_mask;
        match self.kind {
            SpaceKind::Pair => {
                let b = rng.gen::<u64>() & ((1u64 << self.b_bits) - 1);
                Candidate::Pair(
                    CirculantPair::new(
                        a_support_from_bits(self.n, &self.free_a, a_bits),
                        b_support_from_bits(self.n, b),
                    )
                    .expect("constructed pair valid"),
                )
            }
            SpaceKind::Single => {
                Candidate::Single(a_support_from_bits(self.n, &self.free_a, a_bits))
            }
        }
    }

    /// One neighborhood move: flip a mirror pair of A (the self-paired
    /// position alone) or one B position.
    fn mutate(&self, base: &Candidate, rng: &mut ChaCha8Rng) -> Candidate {
        let n = self.n;
        match base {
            Candidate::Pair(p) => {
                let flip_a = !self.free_a.is_empty() && rng.gen_bool(0.5);
                let mut a: Vec<usize> = p.supp_a().positions().to_vec();
                let mut b: Vec<usize> = p.supp_b().positions().to_vec();
                if flip_a {
                    let j = self.free_a[rng.gen_range(0..self.free_a.len())];
                    let partner = ((n + 1 - j) % n) + 1;
                    toggle(&mut a, j);
                    if partner != j {
                        toggle(&mut a, partner);
                    }
                } else {
                    toggle(&mut b, rng.gen_range(1..=n));
                }
                Candidate::Pair(
                    CirculantPair::new(
                        SupportSet::new(n, a).expect("mutated A valid"),
                        SupportSet::new(n, b).expect("mutated B valid"),
                    )
                    .expect("mutation preserves symmetry"),
                )
            }
            Candidate::Single(s) => {
                if self.free_a.is_empty() {
                    return base.clone();
                }
                let mut a: Vec<usize> = s.positions().to_vec();
                let j = self.free_a[rng.gen_range(0..self.free_a.len())];
                let partner = ((n + 1 - j) % n) + 1;
                toggle(&mut a, j);
                if partner != j {
                    toggle(&mut a, partner);
                }
                Candidate::Single(SupportSet::new(n, a).expect("mutated support valid"))
            }
        }
    }
}

fn toggle(positions: &mut Vec<usize>, pos: usize) {
    match positions.iter().position(|&p| p == pos) {
        Some(i) => {
            positions.remove(i);
        }
        None => positions.push(pos),
    }
}

fn candidate_type(c: &Candidate) -> TypeLabel {
    match c {
        Candidate::Pair(p) => predict_type_prop1(p),
        // Single circulant: every degree equals |supp|, so Type II iff odd.
        Candidate::Single(s) => {
            if s.len() % 2 == 1 {
                TypeLabel::TypeII
            } else {
                TypeLabel::TypeI
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Decimation reduction (optional)
// ---------------------------------------------------------------------------

/// True iff (supp_A, supp_B) is lexicographically minimal under the
/// j -> a*j decimations (gcd(a,n)=1) combined with cyclic shifts of
/// supp_B.
fn is_decimation_canonical(p: &CirculantPair) -> bool {
    let n = p.order();
    let a_pos = p.supp_a().positions();
    let b_pos = p.supp_b().positions();
    let key = (a_pos.to_vec(), b_pos.to_vec());
    for a in 1..=n {
        if gcd(a, n) != 1 {
            continue;
        }
        let mut ma: Vec<usize> = a_pos.iter().map(|&j| (a * (j - 1)) % n + 1).collect();
        ma.sort_unstable();
        for t in 0..n {
            let mut mb: Vec<usize> = b_pos.iter().map(|&j| (a * (j - 1) + t) % n + 1).collect();
            mb.sort_unstable();
            if (ma.clone(), mb) < key {
                return false;
            }
        }
    }
    true
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

struct Certified {
    d: u32,
    label: TypeLabel,
    candidate: Candidate,
}

/// Running record thresholds for early rejection. They only ever rise,
/// and rejection is sound against any momentary value, so relaxed
/// atomics keep results exact at every worker count.
struct Thresholds {
    type_i: AtomicU32,
    type_ii: AtomicU32,
}

impl Thresholds {
    fn from_record(record: &SearchRecord, filter: TypeFilter) -> Thresholds {
        match filter {
            TypeFilter::Any => Thresholds {
                type_i: AtomicU32::new(record.type_best(TypeLabel::TypeI).unwrap_or(0)),
                type_ii: AtomicU32::new(record.type_best(TypeLabel::TypeII).unwrap_or(0)),
            },
            _ => Thresholds {
                type_i: AtomicU32::new(record.best_d),
                type_ii: AtomicU32::new(record.best_d),
            },
        }
    }

    fn slot(&self, filter: TypeFilter, label: TypeLabel) -> &AtomicU32 {
        match (filter, label) {
            (TypeFilter::Any, TypeLabel::TypeI) => &self.type_i,
            (TypeFilter::Any, TypeLabel::TypeII) => &self.type_ii,
            // With a fixed filter both slots track the overall best.
            (_, TypeLabel::TypeI) => &self.type_i,
            (_, TypeLabel::TypeII) => &self.type_ii,
        }
    }

    fn raise(&self, filter: TypeFilter, label: TypeLabel, d: u32) {
        match filter {
            TypeFilter::Any => {
                self.slot(filter, label).fetch_max(d, Ordering::Relaxed);
            }
            _ => {
                self.type_i.fetch_max(d, Ordering::Relaxed);
                self.type_ii.fetch_max(d, Ordering::Relaxed);
            }
        }
    }
}

fn evaluate(
    cfg: &SearchConfig,
    thresholds: &Thresholds,
    candidate: Candidate,
) -> Option<Certified> {
    let label = candidate_type(&candidate);
    if !cfg.type_filter.admits(label) {
        return None;
    }
    if cfg.reduce_by_decimation {
        if let Candidate::Pair(p) = &candidate {
            if !is_decimation_canonical(p) {
                return None;
            }
        }
    }
    let code = candidate.build_code().expect("search candidates are valid");
    let threshold = thresholds
        .slot(cfg.type_filter, label)
        .load(Ordering::Relaxed)
        .max(cfg.d_min);
    if threshold > 1 {
        let probe_cfg = EngineConfig {
            threads: 1,
            probe_forms: 1,
            find_radius_cap: cfg.probe_radius,
            ..cfg.engine.clone()
        };
        if find_word_of_weight_at_most(&code, threshold - 1, &probe_cfg).is_some() {
            return None; // provably below the running record
        }
    }
    let cert_cfg = EngineConfig {
        threads: 1,
        ..cfg.engine.clone()
    };
    let d = min_weight_auto(&code, &cert_cfg)
        .expect("search candidates certify")
        .claimed_d;
    thresholds.raise(cfg.type_filter, label, d);
    Some(Certified {
        d,
        label,
        candidate,
    })
}

/// Fold certified results (already in candidate-index order) into the
/// record.
fn merge_certified(record: &mut SearchRecord, results: Vec<Option<Certified>>) {
    for c in results.into_iter().flatten() {
        if c.d > record.best_d {
            record.best_d = c.d;
            record.witnesses.clear();
            record.witnesses.push(c.candidate.clone());
        } else if c.d == record.best_d && record.best_d > 0 && record.witnesses.len() < WITNESS_CAP
        {
            record.witnesses.push(c.candidate.clone());
        }
        match record.type_bests.iter_mut().find(|(t, _, _)| *t == c.label) {
            Some((_, d, w)) => {
                if c.d > *d {
                    *d = c.d;
                    *w = c.candidate;
                }
            }
            None => record.type_bests.push((c.label, c.d, c.candidate)),
        }
    }
    record.type_bests.sort_by_key(|(t, _, _)| *t == TypeLabel::TypeII);
}

/// Core batched driver; `on_checkpoint` fires after every batch with the
/// merged record.
pub fn search_with_progress(
    cfg: &SearchConfig,
    resume_from: Option<SearchRecord>,
    mut on_checkpoint: impl FnMut(&SearchRecord),
) -> Result<SearchRecord> {
    cfg.validate()?;
    let space = Space::new(cfg)?;
    let total = match cfg.mode {
        SearchMode::Exhaustive => {
            let size = space.size();
            cfg.budget.map_or(size, |b| b.min(size))
        }
        SearchMode::Random => cfg.budget.expect("validated"),
    };
    let full_total = match cfg.mode {
        SearchMode::Exhaustive => space.size(),
        SearchMode::Random => cfg.budget.expect("validated"),
    };
    let mut record = resume_from.unwrap_or_else(SearchRecord::empty);
    let thresholds = Thresholds::from_record(&record, cfg.type_filter);
    // Incumbent for mutation moves; updated only at batch boundaries so
    // the candidate stream is reproducible at any worker count.
    let mut incumbent: Option<Candidate> = record.witnesses.first().cloned();
    while record.cursor < total {
        let lo = record.cursor;
        let hi = (lo + cfg.checkpoint_interval).min(total);
        let batch: Vec<Candidate> = (lo..hi)
            .map(|i| generate_candidate(&space, cfg, &incumbent, i))
            .collect();
        let results: Vec<Option<Certified>> = kernel::with_pool(cfg.engine.threads, || {
            batch
                .into_par_iter()
                .map(|c| evaluate(cfg, &thresholds, c))
                .collect()
        });
        merge_certified(&mut record, results);
        record.candidates_examined += hi - lo;
        record.cursor = hi;
        record.finished = record.cursor >= full_total;
        incumbent = record.witnesses.first().cloned();
        on_checkpoint(&record);
    }
    Ok(record)
}

fn generate_candidate(
    space: &Space,
    cfg: &SearchConfig,
    incumbent: &Option<Candidate>,
    index: u64,
) -> Candidate {
    match cfg.mode {
        SearchMode::Exhaustive => space.candidate_at(index),
        SearchMode::Random => {
            if index == 0 {
                if let Some(start) = &cfg.start {
                    return Candidate::Pair(start.clone());
                }
            }
            // Stateless per-candidate randomness keeps resumed runs on
            // the same stream.
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (index + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            match incumbent {
                Some(base) if rng.gen_bool(0.5) => space.mutate(base, &mut rng),
                _ => space.random_candidate(&mut rng),
            }
        }
    }
}

/// All valid pairs of one length; reproduces the per-length records.
pub fn exhaustive_search(cfg: &SearchConfig) -> Result<SearchRecord> {
    let mut cfg = cfg.clone();
    cfg.mode = SearchMode::Exhaustive;
    search_with_progress(&cfg, None, |_| {})
}

/// Seeded random walk: uniform draws mixed with single-move mutations of
/// the incumbent. Reproducible from (seed, budget).
pub fn random_search(cfg: &SearchConfig) -> Result<SearchRecord> {
    let mut cfg = cfg.clone();
    cfg.mode = SearchMode::Random;
    search_with_progress(&cfg, None, |_| {})
}

/// Exhaustive search over single-circulant codes A + wI.
pub fn single_circulant_search(cfg: &SearchConfig) -> Result<SearchRecord> {
    let mut cfg = cfg.clone();
    cfg.space = SpaceKind::Single;
    search_with_progress(&cfg, None, |_| {})
}

/// Continue an interrupted run from its checkpoint record.
pub fn resume(cfg: &SearchConfig, record: SearchRecord) -> Result<SearchRecord> {
    search_with_progress(cfg, Some(record), |_| {})
}

// ---------------------------------------------------------------------------
// Record serialization
// ---------------------------------------------------------------------------

impl SearchRecord {
    /// Structured text document with witnesses in code-spec line format.
    pub fn to_text(&self, cfg: &SearchConfig) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        out.push_str("f4codes-search-record v1\n");
        let _ = writeln!(
            out,
            "space={} mode={} length={} type_filter={} seed={} d_min={}",
            match cfg.space {
                SpaceKind::Pair => "pair",
                SpaceKind::Single => "single",
            },
            match cfg.mode {
                SearchMode::Exhaustive => "exhaustive",
                SearchMode::Random => "random",
            },
            cfg.length,
            match cfg.type_filter {
                TypeFilter::Any => "any",
                TypeFilter::TypeI => "I",
                TypeFilter::TypeII => "II",
            },
            cfg.seed,
            cfg.d_min
        );
        let _ = writeln!(
            out,
            "examined={} best_d={} cursor={:x} finished={}",
            self.candidates_examined, self.best_d, self.cursor, self.finished
        );
        for (t, d, w) in &self.type_bests {
            let _ = writeln!(out, "type_best type={t} d={d} {}", w.spec_line("tb"));
        }
        for (i, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(out, "{}", w.spec_line(&format!("W{i}")));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<(SearchRecord, SpaceKind)> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty search record".into()))?;
        if header.trim() != "f4codes-search-record v1" {
            return Err(Error::Parse(format!("bad record header {header:?}")));
        }
        let meta = lines
            .next()
            .ok_or_else(|| Error::Parse("missing record metadata".into()))?;
        let space = if meta.contains("space=pair") {
            SpaceKind::Pair
        } else if meta.contains("space=single") {
            SpaceKind::Single
        } else {
            return Err(Error::Parse("record metadata missing space".into()));
        };
        let state = lines
            .next()
            .ok_or_else(|| Error::Parse("missing record state".into()))?;
        let mut examined = None;
        let mut best_d = None;
        let mut cursor = None;
        let mut finished = None;
        for tok in state.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad state token {tok:?}")))?;
            match k {
                "examined" => examined = v.parse().ok(),
                "best_d" => best_d = v.parse().ok(),
                "cursor" => cursor = u64::from_str_radix(v, 16).ok(),
                "finished" => finished = v.parse().ok(),
                _ => return Err(Error::Parse(format!("unknown state field {k:?}"))),
            }
        }
        let mut record = SearchRecord {
            best_d: best_d.ok_or_else(|| Error::Parse("state missing best_d".into()))?,
            witnesses: Vec::new(),
            candidates_examined: examined
                .ok_or_else(|| Error::Parse("state missing examined".into()))?,
            cursor: cursor.ok_or_else(|| Error::Parse("state missing cursor".into()))?,
            finished: finished.ok_or_else(|| Error::Parse("state missing finished".into()))?,
            type_bests: Vec::new(),
        };
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("type_best ") {
                let mut t = None;
                let mut d = None;
                for tok in rest.split_whitespace() {
                    if let Some((k, v)) = tok.split_once('=') {
                        match k {
                            "type" => {
                                t = match v {
                                    "I" => Some(TypeLabel::TypeI),
                                    "II" => Some(TypeLabel::TypeII),
                                    _ => None,
                                }
                            }
                            "d" => d = v.parse().ok(),
                            _ => {}
                        }
                    }
                }
                let w = parse_witness_line(rest, space)?;
                record.type_bests.push((
                    t.ok_or_else(|| Error::Parse("type_best missing type".into()))?,
                    d.ok_or_else(|| Error::Parse("type_best missing d".into()))?,
                    w,
                ));
            } else if line.starts_with("witness ") {
                record.witnesses.push(parse_witness_line(line, space)?);
            } else {
                return Err(Error::Parse(format!("unexpected record line {line:?}")));
            }
        }
        Ok((record, space))
    }
}

fn parse_witness_line(line: &str, space: SpaceKind) -> Result<Candidate> {
    let mut n = None;
    let mut a = None;
    let mut b = None;
    for tok in line.split_whitespace() {
        if let Some((k, v)) = tok.split_once('=') {
            match k {
                "n" => n = v.parse::<usize>().ok(),
                "A" => a = Some(v.to_string()),
                "B" => b = Some(v.to_string()),
                _ => {}
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse("witness missing n".into()))?;
    let a = a.ok_or_else(|| Error::Parse("witness missing A".into()))?;
    match space {
        SpaceKind::Pair => {
            let b = b.ok_or_else(|| Error::Parse("pair witness missing B".into()))?;
            Ok(Candidate::Pair(CirculantPair::new(
                SupportSet::from_list_str(n, &a)?,
                SupportSet::from_list_str(n, &b)?,
            )?))
        }
        SpaceKind::Single => Ok(Candidate::Single(SupportSet::from_list_str(n, &a)?)),
    }
}
