//! Circulant matrices from first-row supports and the two-block layout
//!
//! ```text
//!           ( A   B  )
//! M(A, B) = (        )
//!           ( B^T A  )
//! ```
//!
//! with A an n x n symmetric circulant (1,0)-matrix with zero diagonal and
//! B an n x n circulant (1,0)-matrix. Generator matrices are M(A,B) + wI.
//!
//! Supports are 1-based position sets in the first row: position j carries
//! the coefficient of the (j-1)-th cyclic shift, so position 1 is the
//! diagonal. Row i+1 of a circulant is row i shifted right cyclically.

use crate::error::{Error, Result};
use crate::gf4::{F4Vector, words_for};

/// Sorted set of 1-based positions in [1, n] describing a circulant's
/// first row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportSet {
    n: usize,
    positions: Vec<usize>,
}

impl SupportSet {
    pub fn new(n: usize, mut positions: Vec<usize>) -> Result<SupportSet> {
        if n == 0 {
            return Err(Error::BadSupport("circulant order must be positive".into()));
        }
        positions.sort_unstable();
        for w in positions.windows(2) {
            if w[0] == w[1] {
                return Err(Error::BadSupport(format!("duplicate position {}", w[0])));
            }
        }
        if let Some(&p) = positions.iter().find(|&&p| p < 1 || p > n) {
            return Err(Error::BadSupport(format!("position {p} outside [1, {n}]")));
        }
        Ok(SupportSet { n, positions })
    }

    pub fn empty(n: usize) -> SupportSet {
        SupportSet::new(n, Vec::new()).expect("empty support is always valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.positions.binary_search(&pos).is_ok()
    }

    /// Mirror position under transposition of the circulant:
    /// j and partner(j) carry each other's entries in A^T.
    pub fn partner(&self, pos: usize) -> usize {
        debug_assert!((1..=self.n).contains(&pos));
        ((self.n + 1 - pos) % self.n) + 1
    }

    /// True iff the circulant built from this support is symmetric,
    /// i.e. the set is closed under `partner`.
    pub fn is_symmetric(&self) -> bool {
        self.positions.iter().all(|&p| self.contains(self.partner(p)))
    }

    /// Render as a comma list, or "-" when empty.
    pub fn to_list_string(&self) -> String {
        if self.positions.is_empty() {
            "-".to_string()
        } else {
            self.positions
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Parse a comma list ("-" for empty).
    pub fn from_list_str(n: usize, s: &str) -> Result<SupportSet> {
        if s == "-" {
            return SupportSet::new(n, Vec::new());
        }
        let positions: Result<Vec<usize>> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad support position {t:?}")))
            })
            .collect();
        SupportSet::new(n, positions?)
    }
}

/// Validated (n, supp(r_A), supp(r_B)) description of a code C(A,B).
///
/// Invariants checked at construction: position 1 is not in supp(r_A)
/// (zero diagonal) and supp(r_A) is closed under `partner` (A symmetric).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantPair {
    n: usize,
    supp_a: SupportSet,
    supp_b: SupportSet,
}

impl CirculantPair {
    pub fn new(supp_a: SupportSet, supp_b: SupportSet) -> Result<CirculantPair> {
        if supp_a.order() != supp_b.order() {
            return Err(Error::BadPair(format!(
                "support orders differ: {} vs {}",
                supp_a.order(),
                supp_b.order()
            )));
        }
        if supp_a.contains(1) {
            return Err(Error::BadPair("supp(r_A) contains position 1 (diagonal must be zero)".into()));
        }
        if !supp_a.is_symmetric() {
            return Err(Error::BadPair("supp(r_A) is not closed under j -> n+2-j (A not symmetric)".into()));
        }
        Ok(CirculantPair {
            n: supp_a.order(),
            supp_a,
            supp_b,
        })
    }

    pub fn from_positions(n: usize, a: &[usize], b: &[usize]) -> Result<CirculantPair> {
        CirculantPair::new(SupportSet::new(n, a.to_vec())?, SupportSet::new(n, b.to_vec())?)
    }

    /// Circulant block order n; the code C(A,B) has length 2n.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn code_length(&self) -> usize {
        2 * self.n
    }

    pub fn supp_a(&self) -> &SupportSet {
        &self.supp_a
    }

    pub fn supp_b(&self) -> &SupportSet {
        &self.supp_b
    }
}

/// Dense bit matrix with row-major packed storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zero(rows: usize, cols: usize) -> BinaryMatrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let stride = words_for(cols);
        BinaryMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / 64] & (1 << (j % 64)) != 0
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_zero_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| !self.get(i, i))
    }

    /// Render rows as 0/1 strings (debugging / dumps).
    pub fn row_string(&self, i: usize) -> String {
        (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()
    }
}

/// n x n circulant with first row given by the support; row i+1 is row i
/// shifted right cyclically.
pub fn circulant_from_support(s: &SupportSet) -> BinaryMatrix {
    let n = s.order();
    let mut m = BinaryMatrix::zero(n, n);
    for &p in s.positions() {
        let j0 = p - 1;
        for i in 0..n {
            m.set(i, (j0 + i) % n, true);
        }
    }
    m
}

/// True iff the circulant built from `s` is a symmetric matrix.
pub fn is_symmetric_support(s: &SupportSet) -> bool {
    s.is_symmetric()
}

/// Assemble the 2n x 2n block matrix (A B; B^T A) from a validated pair.
/// Always symmetric with zero diagonal.
pub fn block_matrix(p: &CirculantPair) -> BinaryMatrix {
    let n = p.order();
    let a = circulant_from_support(p.supp_a());
    let b = circulant_from_support(p.supp_b());
    let mut m = BinaryMatrix::zero(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            if a.get(i, j) {
                m.set(i, j, true);
                m.set(n + i, n + j, true);
            }
            if b.get(i, j) {
                m.set(i, n + j, true);
                m.set(n + j, i, true); // B^T block
            }
        }
    }
    debug_assert!(m.is_symmetric() && m.has_zero_diagonal());
    m
}

/// Rows of m + wI as GF(4) vectors: plane a = matrix row, plane b = e_i.
///
/// Errors unless m is square, symmetric, with zero diagonal (a graph
/// adjacency matrix).
pub fn generator_matrix(m: &BinaryMatrix) -> Result<Vec<F4Vector>> {
    if !m.is_square() {
        return Err(Error::BadAdjacency(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    if !m.has_zero_diagonal() {
        return Err(Error::BadAdjacency("nonzero diagonal".into()));
    }
    if !m.is_symmetric() {
        return Err(Error::BadAdjacency("not symmetric".into()));
    }
    let n = m.rows();
    Ok((0..n)
        .map(|i| {
            let mut v = F4Vector::zero(n);
            {
                let (pa, pb) = v.planes_mut();
                pa.copy_from_slice(m.row_words(i));
                pb[i / 64] |= 1 << (i % 64);
            }
            v
        })
        .collect())
}

/// One code per line: `name=<string> n=<int> A=<comma-list|-> B=<comma-list|->`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub name: String,
    pub pair: CirculantPair,
}

impl CodeSpec {
    pub fn to_line(&self) -> String {
        format!(
            "name={} n={} A={} B={}",
            self.name,
            self.pair.order(),
            self.pair.supp_a().to_list_string(),
            self.pair.supp_b().to_list_string()
        )
    }

    pub fn parse_line(line: &str) -> Result<CodeSpec> {
        let mut name = None;
        let mut n = None;
        let mut a = None;
        let mut b = None;
        for field in line.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("field {field:?} is not key=value")))?;
            match key {
                "name" => name = Some(value.to_string()),
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|_| {
                        Error::Parse(format!("field n: {value:?} is not an integer"))
                    })?)
                }
                "A" => a = Some(value.to_string()),
                "B" => b = Some(value.to_string()),
                _ => return Err(Error::Parse(format!("unknown field {key:?}"))),
            }
        }
        let name = name.ok_or_else(|| Error::Parse("missing field name".into()))?;
        let n = n.ok_or_else(|| Error::Parse("missing field n".into()))?;
        let a = a.ok_or_else(|| Error::Parse("missing field A".into()))?;
        let b = b.ok_or_else(|| Error::Parse("missing field B".into()))?;
        let pair = CirculantPair::new(
            SupportSet::from_list_str(n, &a)?,
            SupportSet::from_list_str(n, &b)?,
        )?;
        Ok(CodeSpec { name, pair })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn supp(n: usize, p: &[usize]) -> SupportSet {
        SupportSet::new(n, p.to_vec()).unwrap()
    }

    #[test]
    fn circulant_rows_shift_right() {
        // supp {2,7} at n=7: row 1 = 0100001, row 2 = 1010000.
        let m = circulant_from_support(&supp(7, &[2, 7]));
        assert_eq!(m.row_string(0), "0100001");
        assert_eq!(m.row_string(1), "1010000");

        let z = circulant_from_support(&supp(3, &[]));
        assert_eq!(z, BinaryMatrix::zero(3, 3));

        let ones = circulant_from_support(&supp(4, &[1, 2, 3, 4]));
        for i in 0..4 {
            assert_eq!(ones.row_string(i), "1111");
        }
    }

    #[test]
    fn symmetric_support_check() {
        assert!(is_symmetric_support(&supp(7, &[2, 7])));
        assert!(is_symmetric_support(&supp(11, &[2, 3, 10, 11])));
        assert!(!is_symmetric_support(&supp(7, &[2, 3])));
        // Self-paired positions: 1 always, n/2+1 when n is even.
        assert!(is_symmetric_support(&supp(8, &[1, 5])));
        // Matches matrix-level symmetry on random supports.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=20);
            let positions: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
            let s = supp(n, &positions);
            assert_eq!(is_symmetric_support(&s), circulant_from_support(&s).is_symmetric());
        }
    }

    #[test]
    fn pair_invariants_enforced() {
        assert!(CirculantPair::from_positions(7, &[2, 7], &[1, 2, 5]).is_ok());
        // Diagonal entry in A.
        assert!(matches!(
            CirculantPair::from_positions(7, &[1, 2, 7], &[]),
            Err(Error::BadPair(_))
        ));
        // Non-symmetric A.
        assert!(matches!(
            CirculantPair::from_positions(7, &[2, 3], &[]),
            Err(Error::BadPair(_))
        ));
        assert!(SupportSet::new(7, vec![2, 2]).is_err());
        assert!(SupportSet::new(7, vec![0]).is_err());
        assert!(SupportSet::new(7, vec![8]).is_err());
    }

    #[test]
    fn block_matrix_examples() {
        // C(14,II) pair: all vertex degrees are |A| + |B| = 2 + 3 = 5.
        let p = CirculantPair::from_positions(7, &[2, 7], &[1, 2, 5]).unwrap();
        let m = block_matrix(&p);
        assert_eq!(m.rows(), 14);
        assert!(m.is_symmetric() && m.has_zero_diagonal());
        for i in 0..14 {
            assert_eq!(m.row_weight(i), 5);
        }

        let p = CirculantPair::from_positions(1, &[], &[1]).unwrap();
        let m = block_matrix(&p);
        assert_eq!((m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)), (false, true, true, false));

        let p = CirculantPair::from_positions(2, &[], &[]).unwrap();
        assert_eq!(block_matrix(&p), BinaryMatrix::zero(4, 4));
    }

    #[test]
    fn block_matrix_always_symmetric_zero_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=16);
            let mut a_pos = Vec::new();
            for j in 2..=n {
                let partner = ((n + 1 - j) % n) + 1;
                if j <= partner && rng.gen_bool(0.4) {
                    a_pos.push(j);
                    if partner != j {
                        a_pos.push(partner);
                    }
                }
            }
            let b_pos: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
            let p = CirculantPair::from_positions(n, &a_pos, &b_pos).unwrap();
            let m = block_matrix(&p);
            assert!(m.is_symmetric() && m.has_zero_diagonal());
        }
    }

    #[test]
    fn circulant_commutes_with_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let n = rng.gen_range(1..=24);
            let positions: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.3)).collect();
            let t = rng.gen_range(0..n);
            let rotated: Vec<usize> = positions.iter().map(|&p| ((p - 1 + t) % n) + 1).collect();
            let m = circulant_from_support(&supp(n, &positions));
            let mr = circulant_from_support(&supp(n, &rotated));
            // Rotating the support by t shifts every column index by t.
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(mr.get(i, (j + t) % n), m.get(i, j));
                }
            }
        }
    }

    #[test]
    fn generator_matrix_examples() {
        let g = generator_matrix(&BinaryMatrix::zero(1, 1)).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].to_alphabet_string(), "w");

        let mut m = BinaryMatrix::zero(2, 2);
        m.set(0, 1, true);
        m.set(1, 0, true);
        let g = generator_matrix(&m).unwrap();
        assert_eq!(g[0].to_alphabet_string(), "w1");
        assert_eq!(g[1].to_alphabet_string(), "1w");

        // C(14,II): every generator has weight 1 + |A| + |B| = 6.
        let p = CirculantPair::from_positions(7, &[2, 7], &[1, 2, 5]).unwrap();
        let g = generator_matrix(&block_matrix(&p)).unwrap();
        assert_eq!(g.len(), 14);
        for row in &g {
            assert_eq!(row.weight(), 6);
        }

        let mut bad = BinaryMatrix::zero(2, 2);
        bad.set(0, 0, true);
        assert!(generator_matrix(&bad).is_err());
        let mut asym = BinaryMatrix::zero(2, 2);
        asym.set(0, 1, true);
        assert!(generator_matrix(&asym).is_err());
    }

    #[test]
    fn code_spec_line_round_trip() {
        let spec = CodeSpec {
            name: "C14II".into(),
            pair: CirculantPair::from_positions(7, &[2, 7], &[1, 2, 5]).unwrap(),
        };
        let line = spec.to_line();
        assert_eq!(line, "name=C14II n=7 A=2,7 B=1,2,5");
        assert_eq!(CodeSpec::parse_line(&line).unwrap(), spec);

        let empty = CodeSpec {
            name: "E".into(),
            pair: CirculantPair::from_positions(3, &[], &[]).unwrap(),
        };
        assert_eq!(empty.to_line(), "name=E n=3 A=- B=-");
        assert_eq!(CodeSpec::parse_line(&empty.to_line()).unwrap(), empty);

        assert!(CodeSpec::parse_line("name=X n=7 A=2,3 B=-").is_err()); // non-symmetric A
        assert!(CodeSpec::parse_line("n=7 A=- B=-").is_err()); // missing name
        assert!(CodeSpec::parse_line("name=X n=q A=- B=-").is_err());
    }
}
