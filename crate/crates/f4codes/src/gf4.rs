//! GF(4) arithmetic and bit-plane packed vectors.
//!
//! GF(4) = {0, 1, w, W} with W = w^2 = w + 1. An element is a bit pair
//! (a, b) meaning a*1 + b*w:
//!
//! ```text
//! 0 <-> (0,0)    1 <-> (1,0)    w <-> (0,1)    W <-> (1,1)
//! ```
//!
//! Addition is XOR of pairs. A length-n vector is stored as two parallel
//! bit planes (`plane_a`, `plane_b`) packed into u64 words, so vector
//! addition is two XOR sweeps and the weight is `popcount(a | b)`.
//!
//! The trace inner product x*y = sum_i (x_i y_i^2 + x_i^2 y_i) takes
//! values in {0, 1}. On bit planes it reduces to
//! `parity(popcount((a_x & b_y) ^ (b_x & a_y)))`, which is the fast path
//! used here; tests check it against the literal field formula.

use std::fmt;

/// Element of GF(4), stored as bit pair: bit 0 = coefficient of 1,
/// bit 1 = coefficient of w.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0b00);
    pub const ONE: F4 = F4(0b01);
    pub const OMEGA: F4 = F4(0b10);
    pub const OMEGA_BAR: F4 = F4(0b11);

    /// Build from the (a, b) bit pair of a*1 + b*w.
    pub fn from_bits(a: bool, b: bool) -> F4 {
        F4((a as u8) | ((b as u8) << 1))
    }

    pub fn bit_a(self) -> bool {
        self.0 & 1 != 0
    }

    pub fn bit_b(self) -> bool {
        self.0 & 2 != 0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// GF(4) addition (characteristic 2: XOR of bit pairs).
    pub fn add(self, other: F4) -> F4 {
        F4(self.0 ^ other.0)
    }

    /// GF(4) multiplication.
    ///
    /// With x = a1 + b1*w and y = a2 + b2*w, using w^2 = w + 1:
    /// x*y = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) w.
    pub fn mul(self, other: F4) -> F4 {
        let (a1, b1) = (self.0 & 1, self.0 >> 1);
        let (a2, b2) = (other.0 & 1, other.0 >> 1);
        let a = (a1 & a2) ^ (b1 & b2);
        let b = (a1 & b2) ^ (b1 & a2) ^ (b1 & b2);
        F4(a | (b << 1))
    }

    /// Frobenius square x^2 = conjugate; fixes {0,1}, swaps w and W.
    pub fn square(self) -> F4 {
        self.mul(self)
    }

    /// Render as one character of the {0,1,w,W} alphabet.
    pub fn to_char(self) -> char {
        match self.0 {
            0b00 => '0',
            0b01 => '1',
            0b10 => 'w',
            _ => 'W',
        }
    }

    /// Parse one character of the {0,1,w,W} alphabet.
    pub fn from_char(c: char) -> Option<F4> {
        match c {
            '0' => Some(F4::ZERO),
            '1' => Some(F4::ONE),
            'w' => Some(F4::OMEGA),
            'W' => Some(F4::OMEGA_BAR),
            _ => None,
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Length-n vector over GF(4) as two packed bit planes.
///
/// Coordinate i lives at bit `i % 64` of word `i / 64` in each plane.
/// Paper-style coordinate 1 is index 0 here; all I/O stays 1-based.
/// Unused tail bits of the last word are kept zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F4Vector {
    n: usize,
    plane_a: Vec<u64>,
    plane_b: Vec<u64>,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl F4Vector {
    pub fn zero(n: usize) -> F4Vector {
        assert!(n > 0, "vector length must be positive");
        F4Vector {
            n,
            plane_a: vec![0; words_for(n)],
            plane_b: vec![0; words_for(n)],
        }
    }

    pub fn from_elements(elems: &[F4]) -> F4Vector {
        let mut v = F4Vector::zero(elems.len());
        for (i, &e) in elems.iter().enumerate() {
            v.set(i, e);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false // length is always positive
    }

    pub fn get(&self, i: usize) -> F4 {
        debug_assert!(i < self.n);
        let (w, m) = (i / 64, 1u64 << (i % 64));
        F4::from_bits(self.plane_a[w] & m != 0, self.plane_b[w] & m != 0)
    }

    pub fn set(&mut self, i: usize, e: F4) {
        debug_assert!(i < self.n);
        let (w, m) = (i / 64, 1u64 << (i % 64));
        if e.bit_a() {
            self.plane_a[w] |= m;
        } else {
            self.plane_a[w] &= !m;
        }
        if e.bit_b() {
            self.plane_b[w] |= m;
        } else {
            self.plane_b[w] &= !m;
        }
    }

    pub fn plane_a(&self) -> &[u64] {
        &self.plane_a
    }

    pub fn plane_b(&self) -> &[u64] {
        &self.plane_b
    }

    pub(crate) fn planes_mut(&mut self) -> (&mut [u64], &mut [u64]) {
        (&mut self.plane_a, &mut self.plane_b)
    }

    pub(crate) fn from_planes(n: usize, plane_a: Vec<u64>, plane_b: Vec<u64>) -> F4Vector {
        debug_assert_eq!(plane_a.len(), words_for(n));
        debug_assert_eq!(plane_b.len(), words_for(n));
        F4Vector { n, plane_a, plane_b }
    }

    /// In-place addition (GF(4) vector sum = XOR of both planes).
    pub fn add_assign(&mut self, other: &F4Vector) {
        assert_eq!(self.n, other.n, "length mismatch");
        for (x, y) in self.plane_a.iter_mut().zip(&other.plane_a) {
            *x ^= y;
        }
        for (x, y) in self.plane_b.iter_mut().zip(&other.plane_b) {
            *x ^= y;
        }
    }

    pub fn sum(&self, other: &F4Vector) -> F4Vector {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    /// Number of nonzero coordinates: popcount of (plane_a | plane_b).
    pub fn weight(&self) -> usize {
        self.plane_a
            .iter()
            .zip(&self.plane_b)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.plane_a.iter().all(|&w| w == 0) && self.plane_b.iter().all(|&w| w == 0)
    }

    /// Trace inner product, bit-plane fast path:
    /// parity of popcount((a_x & b_y) ^ (b_x & a_y)).
    pub fn trace_ip(&self, other: &F4Vector) -> u8 {
        assert_eq!(self.n, other.n, "length mismatch");
        let mut acc = 0u32;
        for i in 0..self.plane_a.len() {
            acc ^= ((self.plane_a[i] & other.plane_b[i])
                ^ (self.plane_b[i] & other.plane_a[i]))
                .count_ones();
        }
        (acc & 1) as u8
    }

    /// Render in the {0,1,w,W} alphabet, coordinate 1 leftmost.
    pub fn to_alphabet_string(&self) -> String {
        (0..self.n).map(|i| self.get(i).to_char()).collect()
    }

    /// Parse from the {0,1,w,W} alphabet.
    pub fn from_alphabet_str(s: &str) -> Result<F4Vector, String> {
        let elems: Result<Vec<F4>, String> = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                F4::from_char(c).ok_or_else(|| format!("bad symbol {c:?} at coordinate {}", i + 1))
            })
            .collect();
        let elems = elems?;
        if elems.is_empty() {
            return Err("empty vector".to_string());
        }
        Ok(F4Vector::from_elements(&elems))
    }
}

impl fmt::Display for F4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_alphabet_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Literal field-arithmetic trace form; independent of the bit-plane
    /// fast path. Oracle for `trace_ip`.
    fn trace_ip_direct(x: &F4Vector, y: &F4Vector) -> u8 {
        assert_eq!(x.len(), y.len());
        let mut acc = F4::ZERO;
        for i in 0..x.len() {
            let (xi, yi) = (x.get(i), y.get(i));
            acc = acc.add(xi.mul(yi.square())).add(xi.square().mul(yi));
        }
        // A trace form lands in GF(2).
        assert!(acc == F4::ZERO || acc == F4::ONE);
        (acc == F4::ONE) as u8
    }

    fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> F4Vector {
        let mut v = F4Vector::zero(n);
        for i in 0..n {
            v.set(i, F4(rng.gen_range(0..4u8)));
        }
        v
    }

    #[test]
    fn mul_table() {
        use F4 as E;
        let all = [E::ZERO, E::ONE, E::OMEGA, E::OMEGA_BAR];
        // w^2 = W, w^3 = 1, absorbing zero.
        assert_eq!(E::OMEGA.mul(E::OMEGA), E::OMEGA_BAR);
        assert_eq!(E::OMEGA.mul(E::OMEGA_BAR), E::ONE);
        assert_eq!(E::ZERO.mul(E::OMEGA_BAR), E::ZERO);
        // Field axioms on the full table.
        for &x in &all {
            assert_eq!(x.mul(E::ONE), x);
            assert_eq!(x.mul(E::ZERO), E::ZERO);
            for &y in &all {
                assert_eq!(x.mul(y), y.mul(x));
                for &z in &all {
                    assert_eq!(x.mul(y.mul(z)), x.mul(y).mul(z));
                    assert_eq!(x.mul(y.add(z)), x.mul(y).add(x.mul(z)));
                }
            }
        }
        // W = w + 1.
        assert_eq!(E::OMEGA.add(E::ONE), E::OMEGA_BAR);
    }

    #[test]
    fn trace_examples() {
        let x = F4Vector::from_elements(&[F4::OMEGA]);
        assert_eq!(x.trace_ip(&x), 0);

        let one = F4Vector::from_elements(&[F4::ONE]);
        let om = F4Vector::from_elements(&[F4::OMEGA]);
        assert_eq!(one.trace_ip(&om), 1);

        let x = F4Vector::from_elements(&[F4::ONE, F4::OMEGA]);
        let y = F4Vector::from_elements(&[F4::OMEGA, F4::ONE]);
        assert_eq!(x.trace_ip(&y), 0);
    }

    #[test]
    fn weight_examples() {
        let v = F4Vector::from_elements(&[F4::ZERO, F4::OMEGA, F4::ONE, F4::OMEGA_BAR]);
        assert_eq!(v.weight(), 3);
        assert_eq!(F4Vector::zero(14).weight(), 0);
    }

    #[test]
    fn fast_path_matches_direct_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4f40_0001);
        for _ in 0..10_000 {
            let n = rng.gen_range(1..=128);
            let x = random_vector(&mut rng, n);
            let y = random_vector(&mut rng, n);
            assert_eq!(x.trace_ip(&y), trace_ip_direct(&x, &y));
        }
    }

    #[test]
    fn trace_form_is_alternating() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4f40_0002);
        for _ in 0..10_000 {
            let n = rng.gen_range(1..=128);
            let x = random_vector(&mut rng, n);
            assert_eq!(x.trace_ip(&x), 0);
        }
    }

    #[test]
    fn trace_form_is_bilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4f40_0003);
        for _ in 0..2_000 {
            let n = rng.gen_range(1..=96);
            let x = random_vector(&mut rng, n);
            let y = random_vector(&mut rng, n);
            let z = random_vector(&mut rng, n);
            assert_eq!(x.sum(&y).trace_ip(&z), x.trace_ip(&z) ^ y.trace_ip(&z));
        }
    }

    #[test]
    fn weight_subadditive_and_definite() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4f40_0004);
        for _ in 0..2_000 {
            let n = rng.gen_range(1..=96);
            let x = random_vector(&mut rng, n);
            let y = random_vector(&mut rng, n);
            assert!(x.sum(&y).weight() <= x.weight() + y.weight());
            assert_eq!(x.weight() == 0, x.is_zero());
        }
    }

    #[test]
    fn alphabet_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4f40_0005);
        for _ in 0..200 {
            let n = rng.gen_range(1..=100);
            let v = random_vector(&mut rng, n);
            let s = v.to_alphabet_string();
            assert_eq!(F4Vector::from_alphabet_str(&s).unwrap(), v);
        }
        assert!(F4Vector::from_alphabet_str("01wWx").is_err());
        assert!(F4Vector::from_alphabet_str("").is_err());
    }
}
