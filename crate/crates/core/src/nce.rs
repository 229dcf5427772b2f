//! Number constraint editing: raise each number `d_i` to a value in its set
//! `phi(i)` so that the total increase is exactly a given target.
//!
//! `T[i][j]` is true iff the first `i` numbers can be completed with total
//! increase `j`; row `i` is the union over admissible `x >= d_i` of row
//! `i - 1` shifted by `x - d_i`. Rows are bit sets, so one table answers
//! every target `0..=k_max` at once.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NceInstance {
    pub degrees: Vec<usize>,
    pub k: usize,
    pub r: usize,
    pub phi: Vec<Vec<usize>>,
}

impl NceInstance {
    pub fn new(degrees: Vec<usize>, k: usize, r: usize, phi: Vec<Vec<usize>>) -> Result<Self> {
        if degrees.len() != phi.len() {
            return Err(Error::invalid(format!(
                "{} numbers but {} allowed-value sets",
                degrees.len(),
                phi.len()
            )));
        }
        if let Some((i, &x)) = phi
            .iter()
            .enumerate()
            .find_map(|(i, s)| s.iter().find(|&&x| x > r).map(|x| (i, x)))
        {
            return Err(Error::invalid(format!(
                "value {x} allowed for index {i} exceeds r = {r}"
            )));
        }
        Ok(NceInstance { degrees, k, r, phi })
    }

    pub fn decide(&self) -> bool {
        NceTable::build(&self.degrees, &self.phi, self.k).feasible(self.k)
    }

    /// A witness `d'` with `d'_i >= d_i`, `d'_i` in `phi(i)` and total increase `k`.
    pub fn traceback(&self) -> Option<Vec<usize>> {
        NceTable::build(&self.degrees, &self.phi, self.k).witness(self.k)
    }
}

#[derive(Clone, Debug)]
struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn zeros(bits: usize) -> Self {
        BitRow {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// `self |= other << shift`, truncated to the row length.
    fn or_shifted(&mut self, other: &BitRow, shift: usize) {
        let (word_shift, bit_shift) = (shift / 64, shift % 64);
        let len = self.words.len();
        for i in (word_shift..len).rev() {
            let src = i - word_shift;
            let mut w = other.words[src] << bit_shift;
            if bit_shift > 0 && src > 0 {
                w |= other.words[src - 1] >> (64 - bit_shift);
            }
            self.words[i] |= w;
        }
    }

    fn clear_above(&mut self, bits: usize) {
        let full = bits / 64;
        if full < self.words.len() {
            let rem = bits % 64;
            self.words[full] &= (1u64 << rem).wrapping_sub(1);
            for w in &mut self.words[full + 1..] {
                *w = 0;
            }
        }
    }
}

/// The full DP table for targets `0..=k_max`.
#[derive(Clone, Debug)]
pub struct NceTable {
    degrees: Vec<usize>,
    phi: Vec<Vec<usize>>,
    k_max: usize,
    rows: Vec<BitRow>,
}

impl NceTable {
    pub fn build(degrees: &[usize], phi: &[Vec<usize>], k_max: usize) -> Self {
        assert_eq!(degrees.len(), phi.len());
        let bits = k_max + 1;
        let mut rows = Vec::with_capacity(degrees.len() + 1);
        let mut base = BitRow::zeros(bits);
        base.set(0);
        rows.push(base);
        for (i, (&d, allowed)) in degrees.iter().zip(phi).enumerate() {
            let mut row = BitRow::zeros(bits);
            for &x in allowed {
                if x >= d && x - d <= k_max {
                    row.or_shifted(&rows[i], x - d);
                }
            }
            row.clear_above(bits);
            rows.push(row);
        }
        NceTable {
            degrees: degrees.to_vec(),
            phi: phi.to_vec(),
            k_max,
            rows,
        }
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn feasible(&self, target: usize) -> bool {
        target <= self.k_max && self.rows[self.degrees.len()].get(target)
    }

    /// Entry `j` answers the instance with target `j`.
    pub fn all_targets(&self) -> Vec<bool> {
        (0..=self.k_max).map(|j| self.feasible(j)).collect()
    }

    /// Walks the table backwards, taking the smallest admissible value at
    /// each index. The witness is checked before it is returned.
    pub fn witness(&self, target: usize) -> Option<Vec<usize>> {
        if !self.feasible(target) {
            return None;
        }
        let n = self.degrees.len();
        let mut out = vec![0; n];
        let mut j = target;
        for i in (0..n).rev() {
            let d = self.degrees[i];
            let x = self.phi[i]
                .iter()
                .copied()
                .filter(|&x| x >= d && x - d <= j && self.rows[i].get(j - (x - d)))
                .min()?;
            out[i] = x;
            j -= x - d;
        }
        debug_assert_eq!(j, 0);
        let ok = j == 0
            && out
                .iter()
                .zip(&self.degrees)
                .zip(&self.phi)
                .all(|((&x, &d), allowed)| x >= d && allowed.contains(&x))
            && out.iter().zip(&self.degrees).map(|(x, d)| x - d).sum::<usize>() == target;
        ok.then_some(out)
    }
}

pub fn nce_decide(inst: &NceInstance) -> bool {
    inst.decide()
}

pub fn nce_decide_all_targets(degrees: &[usize], k_max: usize, phi: &[Vec<usize>]) -> Vec<bool> {
    NceTable::build(degrees, phi, k_max).all_targets()
}

pub fn nce_traceback(inst: &NceInstance) -> Option<Vec<usize>> {
    inst.traceback()
}
