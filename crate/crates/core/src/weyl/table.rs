use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::Result;
use crate::rootsystem::RootSystem;

use super::{Parabolic, WeylElement};

/// Above this many cosets the Bruhat down-sets are not materialized and
/// comparisons fall back to the descent recursion.
pub const BITSET_LIMIT: usize = 8192;

/// W/W_P with integer coset ids, ordered by length.
#[derive(Debug)]
pub struct CosetTable {
    parabolic: Parabolic,
    reps: Vec<WeylElement>,
    lengths: Vec<usize>,
    index: HashMap<WeylElement, usize>,
    /// left[c * rank + i] = id of s_i · c.
    left: Vec<u32>,
    /// Row c holds the set {x : x ⪯ c}.
    down: Option<Vec<u64>>,
    words: usize,
    /// right[c][k] = id of c s_α for the k-th root outside R_P.
    right: OnceLock<Vec<Vec<u32>>>,
    outside: Vec<usize>,
}

impl CosetTable {
    pub fn new(rs: &RootSystem, p: &Parabolic, cap: usize) -> Result<Self> {
        let reps = rs.enumerate_cosets(p, cap)?;
        let n = rs.rank();
        let lengths: Vec<usize> = reps.iter().map(|w| rs.length(w)).collect();
        let index: HashMap<WeylElement, usize> = reps.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let mut left = vec![0u32; reps.len() * n];
        for (c, w) in reps.iter().enumerate() {
            for i in 0..n {
                let x = rs.mul_simple_left(i, w);
                left[c * n + i] = index.get(&x).map_or(c as u32, |&k| k as u32);
            }
        }
        let outside = (0..rs.num_positive()).filter(|&k| rs.root(k).support_mask() & !p.mask() != 0).collect();
        let mut t = CosetTable {
            parabolic: *p,
            reps,
            lengths,
            index,
            left,
            down: None,
            words: 0,
            right: OnceLock::new(),
            outside,
        };
        if t.len() <= BITSET_LIMIT {
            t.build_down_sets(n);
        }
        Ok(t)
    }

    fn build_down_sets(&mut self, n: usize) {
        let m = self.len();
        let words = m.div_ceil(64);
        let mut down = vec![0u64; m * words];
        down[0] = 1;
        // reps are sorted by length, so sv is processed before v
        for v in 1..m {
            let (s, sv) = (0..n)
                .map(|i| (i, self.left[v * n + i] as usize))
                .find(|&(_, x)| self.lengths[x] < self.lengths[v])
                .expect("non-identity coset has a left descent");
            for x in 0..m {
                if down[sv * words + x / 64] >> (x % 64) & 1 == 1 {
                    let sx = self.left[x * n + s] as usize;
                    down[v * words + x / 64] |= 1 << (x % 64);
                    down[v * words + sx / 64] |= 1 << (sx % 64);
                }
            }
        }
        self.down = Some(down);
        self.words = words;
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Minimal representative of coset `c`.
    pub fn rep(&self, c: usize) -> &WeylElement {
        &self.reps[c]
    }

    pub fn reps(&self) -> &[WeylElement] {
        &self.reps
    }

    pub fn length(&self, c: usize) -> usize {
        self.lengths[c]
    }

    /// Id of the coset of an arbitrary element.
    pub fn id_of(&self, rs: &RootSystem, w: &WeylElement) -> usize {
        self.index[&rs.coset_min(w, &self.parabolic)]
    }

    /// Id of a minimal representative.
    pub fn id_of_min(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn left_mul(&self, i: usize, c: usize) -> usize {
        let n = self.left.len() / self.len();
        self.left[c * n + i] as usize
    }

    pub fn has_down_sets(&self) -> bool {
        self.down.is_some()
    }

    /// Coset Bruhat order on ids.
    pub fn leq(&self, rs: &RootSystem, a: usize, b: usize) -> bool {
        match &self.down {
            Some(d) => d[b * self.words + a / 64] >> (a % 64) & 1 == 1,
            None => self.lengths[a] <= self.lengths[b] && rs.bruhat_leq(&self.reps[a], &self.reps[b]),
        }
    }

    /// Positive root indices outside R_P, the labels of adjacency edges.
    pub fn edge_roots(&self) -> &[usize] {
        &self.outside
    }

    /// right(rs)[c][k] = coset of rep(c) · s_α for α = edge_roots()[k].
    pub fn right_reflections(&self, rs: &RootSystem) -> &[Vec<u32>] {
        self.right.get_or_init(|| {
            let refl: Vec<WeylElement> = self.outside.iter().map(|&k| rs.reflection_of(k)).collect();
            self.reps.iter().map(|w| refl.iter().map(|s| self.id_of(rs, &w.mul(s)) as u32).collect()).collect()
        })
    }
}
