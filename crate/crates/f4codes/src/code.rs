//! Additive GF(4) codes: GF(2) spans of generator vectors, with rank,
//! duality, membership, weight distribution, and Type I/II classification.
//!
//! An additive code of length n is a GF(2)-subspace of the 2n-bit image
//! where each coordinate contributes its two plane bits. Self-duality is
//! with respect to the trace inner product: a code is self-dual iff all
//! generator pairs are trace-orthogonal and the GF(2) rank equals n.
//!
//! Graph codes (rows of A + wI for a symmetric zero-diagonal A) are always
//! self-dual, and their Type is readable off the vertex degrees: Type II
//! exactly when every degree is odd.

use crate::circulant::{block_matrix, generator_matrix, BinaryMatrix, CirculantPair, SupportSet};
use crate::error::{Error, Result};
use crate::gf4::F4Vector;
use crate::kernel;

/// Self-dual additive codes are Type II when every codeword has even
/// weight, Type I otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum TypeLabel {
    TypeI,
    TypeII,
}

impl std::fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeLabel::TypeI => write!(f, "I"),
            TypeLabel::TypeII => write!(f, "II"),
        }
    }
}

/// An additive GF(4) code: generators plus their cached GF(2) reduced
/// form. Immutable after construction; all queries are read-only.
#[derive(Debug, Clone)]
pub struct AdditiveCode {
    n: usize,
    generators: Vec<F4Vector>,
    reduced: Vec<F4Vector>,
    pivots: Vec<u32>,
    adjacency: Option<BinaryMatrix>,
}

impl AdditiveCode {
    /// Build from explicit generators. Dependent or duplicate generators
    /// reduce the rank accordingly.
    pub fn from_generators(generators: Vec<F4Vector>) -> Result<AdditiveCode> {
        let Some(first) = generators.first() else {
            return Err(Error::BadGenerators("empty generator list".into()));
        };
        let n = first.len();
        if let Some(bad) = generators.iter().find(|g| g.len() != n) {
            return Err(Error::BadGenerators(format!(
                "mixed lengths: {} and {}",
                n,
                bad.len()
            )));
        }
        let mut reduced = generators.clone();
        let pivots = kernel::rref(&mut reduced, &kernel::natural_col_order(n));
        Ok(AdditiveCode {
            n,
            generators,
            reduced,
            pivots,
            adjacency: None,
        })
    }

    /// The graph code C(adj): span of the rows of adj + wI. Always
    /// self-dual for a valid (symmetric, zero-diagonal) adjacency matrix.
    pub fn from_graph(adj: &BinaryMatrix) -> Result<AdditiveCode> {
        let generators = generator_matrix(adj)?;
        let mut code = AdditiveCode::from_generators(generators)?;
        code.adjacency = Some(adj.clone());
        Ok(code)
    }

    /// The code C(A,B) of a circulant pair, length 2n.
    pub fn from_pair(pair: &CirculantPair) -> Result<AdditiveCode> {
        AdditiveCode::from_graph(&block_matrix(pair))
    }

    /// Single-circulant code with generator matrix A + wI; the support
    /// must describe a symmetric circulant with zero diagonal.
    pub fn from_single_circulant(supp: &SupportSet) -> Result<AdditiveCode> {
        AdditiveCode::from_graph(&crate::circulant::circulant_from_support(supp))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// GF(2) rank k; the code has 2^k codewords.
    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    pub fn generators(&self) -> &[F4Vector] {
        &self.generators
    }

    /// Row-reduced spanning set (same GF(2) span as the generators).
    pub fn reduced_rows(&self) -> &[F4Vector] {
        &self.reduced
    }

    pub fn adjacency(&self) -> Option<&BinaryMatrix> {
        self.adjacency.as_ref()
    }

    /// Membership test against the reduced form.
    pub fn contains(&self, x: &F4Vector) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut rem = x.clone();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if kernel::get_bit(&rem, p) {
                rem.add_assign(row);
            }
        }
        Ok(rem.is_zero())
    }

    /// True iff all generator pairs are trace-orthogonal (bilinearity
    /// extends this to the whole span).
    pub fn is_self_orthogonal(&self) -> bool {
        for (i, x) in self.generators.iter().enumerate() {
            for y in &self.generators[i..] {
                if x.trace_ip(y) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Self-dual iff self-orthogonal with rank n (then |C| = 2^n = |C*|).
    pub fn is_self_dual(&self) -> bool {
        self.rank() == self.n && self.is_self_orthogonal()
    }

    /// Exact weight distribution A_0..A_n by Gray-code enumeration of all
    /// 2^rank codewords. Refuses when 2^rank exceeds the budget.
    pub fn weight_distribution(&self, budget: u64, threads: usize) -> Result<Vec<u64>> {
        let total = self.enumeration_size(budget)?;
        let partials = kernel::par_map_collect(threads, kernel::chunk_ranges(1, total), |(lo, hi)| {
            count_weights(&self.reduced, self.n, lo, hi)
        });
        let mut counts = vec![0u64; self.n + 1];
        for p in partials {
            for (a, b) in counts.iter_mut().zip(p) {
                *a += b;
            }
        }
        counts[0] += 1; // the zero word
        Ok(counts)
    }

    /// Type classification. Uses the vertex-degree criterion when this
    /// code was built from a graph; otherwise falls back to enumeration
    /// under the budget.
    pub fn classify_type(&self, budget: u64, threads: usize) -> Result<TypeLabel> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        match &self.adjacency {
            Some(adj) => type_by_degrees(adj),
            None => self.classify_type_by_enumeration(budget, threads),
        }
    }

    /// Enumerative classification: walk all codewords and test weight
    /// parity. Independent of the degree criterion.
    pub fn classify_type_by_enumeration(&self, budget: u64, threads: usize) -> Result<TypeLabel> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        let total = self.enumeration_size(budget).map_err(|_| Error::TypeUndecided {
            rank: self.rank(),
            budget,
        })?;
        let all_even = kernel::par_map_collect(threads, kernel::chunk_ranges(1, total), |(lo, hi)| {
            all_weights_even(&self.reduced, lo, hi)
        })
        .into_iter()
        .all(|b| b);
        let label = if all_even { TypeLabel::TypeII } else { TypeLabel::TypeI };
        debug_assert!(!(label == TypeLabel::TypeII && self.n % 2 == 1));
        Ok(label)
    }

    pub(crate) fn enumeration_size(&self, budget: u64) -> Result<u64> {
        let k = self.rank();
        if k == 0 {
            return Err(Error::TrivialCode);
        }
        if k >= 64 || (1u64 << k) > budget {
            return Err(Error::BudgetExceeded { rank: k, budget });
        }
        Ok(1u64 << k)
    }

    /// Basis of the dual code C* via the trace-form kernel (test support).
    #[doc(hidden)]
    pub fn dual_basis(&self) -> Vec<F4Vector> {
        let mut rows: Vec<F4Vector> =
            self.generators.iter().map(kernel::swap_planes).collect();
        let pivots = kernel::rref(&mut rows, &kernel::natural_col_order(self.n));
        let pivot_set: std::collections::HashSet<u32> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..2 * self.n as u32 {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut x = F4Vector::zero(self.n);
            kernel::flip_bit(&mut x, f);
            for (row, &p) in rows.iter().zip(&pivots) {
                if kernel::get_bit(row, f) {
                    kernel::flip_bit(&mut x, p);
                }
            }
            basis.push(x);
        }
        basis
    }
}

struct WeightCounter<const W: usize> {
    counts: Vec<u64>,
}

impl<const W: usize> kernel::GrayVisitor<W> for WeightCounter<W> {
    #[inline(always)]
    fn visit(&mut self, _m: u64, a: &[u64; W], b: &[u64; W]) {
        self.counts[kernel::weight_of(a, b) as usize] += 1;
    }
}

fn count_weights(gens: &[F4Vector], n: usize, lo: u64, hi: u64) -> Vec<u64> {
    kernel::gray_walk_dispatch(
        gens,
        lo,
        hi,
        || WeightCounter::<1> { counts: vec![0; n + 1] },
        || WeightCounter::<2> { counts: vec![0; n + 1] },
        || WeightCounter::<4> { counts: vec![0; n + 1] },
        |v| v.counts,
        |v| v.counts,
        |v| v.counts,
    )
}

struct ParityCheck<const W: usize> {
    all_even: bool,
}

impl<const W: usize> kernel::GrayVisitor<W> for ParityCheck<W> {
    #[inline(always)]
    fn visit(&mut self, _m: u64, a: &[u64; W], b: &[u64; W]) {
        self.all_even &= kernel::weight_of(a, b) & 1 == 0;
    }
}

fn all_weights_even(gens: &[F4Vector], lo: u64, hi: u64) -> bool {
    kernel::gray_walk_dispatch(
        gens,
        lo,
        hi,
        || ParityCheck::<1> { all_even: true },
        || ParityCheck::<2> { all_even: true },
        || ParityCheck::<4> { all_even: true },
        |v| v.all_even,
        |v| v.all_even,
        |v| v.all_even,
    )
}

/// Degree criterion for graph codes: Type II iff every vertex degree
/// (row sum of the adjacency matrix) is odd.
pub fn type_by_degrees(adj: &BinaryMatrix) -> Result<TypeLabel> {
    if !adj.is_square() || !adj.has_zero_diagonal() || !adj.is_symmetric() {
        return Err(Error::BadAdjacency(
            "degree criterion needs a symmetric zero-diagonal matrix".into(),
        ));
    }
    let all_odd = (0..adj.rows()).all(|i| adj.row_weight(i) % 2 == 1);
    Ok(if all_odd { TypeLabel::TypeII } else { TypeLabel::TypeI })
}

/// Parity criterion for C(A,B) read off the pair description alone:
/// for even n, Type II iff [n/2+1 in supp(r_A)] + |supp(r_B)| is odd;
/// for odd n, Type II iff |supp(r_B)| is odd.
pub fn predict_type_prop1(pair: &CirculantPair) -> TypeLabel {
    let n = pair.order();
    let b_weight = pair.supp_b().len();
    let odd = if n % 2 == 0 {
        let w = pair.supp_a().contains(n / 2 + 1) as usize;
        (w + b_weight) % 2 == 1
    } else {
        b_weight % 2 == 1
    };
    if odd {
        TypeLabel::TypeII
    } else {
        TypeLabel::TypeI
    }
}
