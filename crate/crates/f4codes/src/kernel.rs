//! Shared low-level machinery: GF(2) row reduction over the interleaved
//! bit-column view of GF(4) vectors, Gray-code enumeration of GF(2)
//! combinations, and a deterministic parallel chunk driver.
//!
//! Bit-column convention: column c of a length-n vector addresses
//! coordinate c >> 1; even c is the 1-plane bit, odd c the w-plane bit.
//! A k-generator code is a GF(2) row space inside 2n such columns.

use crate::gf4::F4Vector;

pub(crate) fn words_needed(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn get_bit(v: &F4Vector, col: u32) -> bool {
    let coord = (col >> 1) as usize;
    let plane = if col & 1 == 0 { v.plane_a() } else { v.plane_b() };
    plane[coord / 64] & (1 << (coord % 64)) != 0
}

pub(crate) fn flip_bit(v: &mut F4Vector, col: u32) {
    let coord = (col >> 1) as usize;
    let (pa, pb) = v.planes_mut();
    let plane = if col & 1 == 0 { pa } else { pb };
    plane[coord / 64] ^= 1 << (coord % 64);
}

/// Swap the two bit planes. The trace inner product of x and y equals the
/// plain GF(2) dot product of x's bits with swapped(y)'s bits.
pub(crate) fn swap_planes(v: &F4Vector) -> F4Vector {
    F4Vector::from_planes(v.len(), v.plane_b().to_vec(), v.plane_a().to_vec())
}

/// In-place reduced row echelon form over GF(2), processing bit columns
/// in the given order. Returns the pivot column of each surviving row;
/// `rows` is truncated to the rank and kept in pivot order.
pub(crate) fn rref(rows: &mut Vec<F4Vector>, col_order: &[u32]) -> Vec<u32> {
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for &col in col_order {
        let Some(found) = (next..rows.len()).find(|&i| get_bit(&rows[i], col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && get_bit(row, col) {
                row.add_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    pivots
}

pub(crate) fn natural_col_order(n: usize) -> Vec<u32> {
    (0..2 * n as u32).collect()
}

/// Visitor for the Gray-code walk over nonzero GF(2) combinations.
/// `visit` receives the message index m (combination = gray(m)) and the
/// current codeword planes.
pub(crate) trait GrayVisitor<const W: usize> {
    fn visit(&mut self, m: u64, a: &[u64; W], b: &[u64; W]);
}

#[inline(always)]
pub(crate) fn weight_of<const W: usize>(a: &[u64; W], b: &[u64; W]) -> u32 {
    let mut w = 0u32;
    for i in 0..W {
        w += (a[i] | b[i]).count_ones();
    }
    w
}

/// Walk message indices [lo, hi) visiting codeword(gray(m)) for each m.
/// One generator XOR per step; the entry point pays O(k) to seed gray(lo).
fn gray_walk<const W: usize, V: GrayVisitor<W>>(
    gens_a: &[[u64; W]],
    gens_b: &[[u64; W]],
    lo: u64,
    hi: u64,
    visitor: &mut V,
) {
    debug_assert!(lo < hi);
    let mut a = [0u64; W];
    let mut b = [0u64; W];
    let start = lo ^ (lo >> 1);
    for (i, (ga, gb)) in gens_a.iter().zip(gens_b).enumerate() {
        if start >> i & 1 == 1 {
            for w in 0..W {
                a[w] ^= ga[w];
                b[w] ^= gb[w];
            }
        }
    }
    visitor.visit(lo, &a, &b);
    for m in lo + 1..hi {
        let flip = m.trailing_zeros() as usize;
        let (ga, gb) = (&gens_a[flip], &gens_b[flip]);
        for w in 0..W {
            a[w] ^= ga[w];
            b[w] ^= gb[w];
        }
        visitor.visit(m, &a, &b);
    }
}

/// Fixed-width copies of generator planes for the enumeration kernels.
pub(crate) struct PackedGens<const W: usize> {
    pub a: Vec<[u64; W]>,
    pub b: Vec<[u64; W]>,
}

pub(crate) fn pack_gens<const W: usize>(gens: &[F4Vector]) -> PackedGens<W> {
    let mut a = Vec::with_capacity(gens.len());
    let mut b = Vec::with_capacity(gens.len());
    for g in gens {
        let mut wa = [0u64; W];
        let mut wb = [0u64; W];
        wa[..g.plane_a().len()].copy_from_slice(g.plane_a());
        wb[..g.plane_b().len()].copy_from_slice(g.plane_b());
        a.push(wa);
        b.push(wb);
    }
    PackedGens { a, b }
}

/// Width-dispatched Gray walk; generators wider than 256 coordinates are
/// not enumerable within any practical budget anyway.
pub(crate) fn gray_walk_dispatch<V1, V2, V4, R>(
    gens: &[F4Vector],
    lo: u64,
    hi: u64,
    mk1: impl FnOnce() -> V1,
    mk2: impl FnOnce() -> V2,
    mk4: impl FnOnce() -> V4,
    fin1: impl FnOnce(V1) -> R,
    fin2: impl FnOnce(V2) -> R,
    fin4: impl FnOnce(V4) -> R,
) -> R
where
    V1: GrayVisitor<1>,
    V2: GrayVisitor<2>,
    V4: GrayVisitor<4>,
{
    let words = gens[0].plane_a().len();
    match words {
        1 => {
            let p = pack_gens::<1>(gens);
            let mut v = mk1();
            gray_walk(&p.a, &p.b, lo, hi, &mut v);
            fin1(v)
        }
        2 => {
            let p = pack_gens::<2>(gens);
            let mut v = mk2();
            gray_walk(&p.a, &p.b, lo, hi, &mut v);
            fin2(v)
        }
        3 | 4 => {
            let p = pack_gens::<4>(gens);
            let mut v = mk4();
            gray_walk(&p.a, &p.b, lo, hi, &mut v);
            fin4(v)
        }
        _ => panic!("enumeration unsupported beyond 256 coordinates"),
    }
}

/// Split [lo, hi) into chunk ranges whose boundaries depend only on the
/// range itself, never on the worker count, so parallel reductions merge
/// to identical results at any thread count.
pub(crate) fn chunk_ranges(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    const MIN_CHUNK: u64 = 1 << 16;
    const TARGET_CHUNKS: u64 = 512;
    let total = hi - lo;
    let size = (total.div_ceil(TARGET_CHUNKS)).max(MIN_CHUNK);
    let mut out = Vec::new();
    let mut at = lo;
    while at < hi {
        let end = (at + size).min(hi);
        out.push((at, end));
        at = end;
    }
    out
}

/// Map items to results, preserving order. `threads <= 1` stays on the
/// current thread and never touches rayon, so per-item work nested
/// inside parallel regions runs inline instead of spawning pools.
pub(crate) fn par_map_collect<I, O, F>(threads: usize, items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
{
    use rayon::prelude::*;
    if threads <= 1 || items.len() <= 1 {
        items.into_iter().map(f).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(|| items.into_par_iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf4::F4Vector;

    #[test]
    fn rref_reduces_and_reports_pivots() {
        // Generators (w), (1) over length 1: columns 0 (a-plane), 1 (b-plane).
        let g1 = F4Vector::from_alphabet_str("w").unwrap();
        let g2 = F4Vector::from_alphabet_str("1").unwrap();
        let mut rows = vec![g1.clone(), g2.clone(), g1.sum(&g2)];
        let pivots = rref(&mut rows, &natural_col_order(1));
        assert_eq!(rows.len(), 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn gray_walk_covers_all_combinations() {
        let gens = vec![
            F4Vector::from_alphabet_str("w00").unwrap(),
            F4Vector::from_alphabet_str("0w0").unwrap(),
            F4Vector::from_alphabet_str("11W").unwrap(),
        ];
        struct Collect {
            seen: Vec<(u64, u32)>,
        }
        impl GrayVisitor<1> for Collect {
            fn visit(&mut self, m: u64, a: &[u64; 1], b: &[u64; 1]) {
                self.seen.push((m, weight_of(a, b)));
            }
        }
        let p = pack_gens::<1>(&gens);
        let mut v = Collect { seen: Vec::new() };
        gray_walk(&p.a, &p.b, 1, 8, &mut v);
        assert_eq!(v.seen.len(), 7);
        // Check against direct evaluation of each combination.
        for (m, w) in v.seen {
            let mask = m ^ (m >> 1);
            let mut acc = F4Vector::zero(3);
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.add_assign(g);
                }
            }
            assert_eq!(acc.weight() as u32, w);
        }
    }

    #[test]
    fn chunks_are_thread_count_free() {
        let a = chunk_ranges(1, 1 << 20);
        assert_eq!(a.first().unwrap().0, 1);
        assert_eq!(a.last().unwrap().1, 1 << 20);
        for w in a.windows(2) {
            assert_eq!(w[0].1, w[1].0);
        }
    }
}
