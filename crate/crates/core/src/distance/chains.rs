//! Chains of adjacent cosets and the Pareto search for their minimal degrees.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::degree::{minimal_elements, Degree};
use crate::error::{Error, Result};
use crate::weyl::WeylElement;

use super::{DegreeFront, Distance, Provenance};

/// A chain ū₀, …, ū_r with u_{i−1} s̄_{α_i} = ū_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    /// Coset ids.
    pub ids: Vec<usize>,
    /// Minimal representatives of the cosets.
    pub cosets: Vec<WeylElement>,
    /// Positive root indices α₁, …, α_r.
    pub edge_roots: Vec<usize>,
    pub total: Degree,
}

impl ChainWitness {
    /// Adjacency of consecutive cosets and the total, recomputed from the
    /// group rather than the table.
    pub fn check(&self, dist: &Distance) -> Result<()> {
        let rs = dist.rs();
        let p = dist.parabolic();
        let mut total = Degree::zero(p);
        for (i, &a) in self.edge_roots.iter().enumerate() {
            let next = rs.coset_min(&self.cosets[i].mul(&rs.reflection_of(a)), p);
            if next != self.cosets[i + 1] || rs.in_levi(a, p) {
                return Err(Error::Invariant(format!("chain step {i} via {} is not an adjacency", rs.root(a))));
            }
            total = total.add(&rs.d_of_root(a, p));
        }
        if total != self.total {
            return Err(Error::Invariant(format!("chain total {} differs from recorded {}", total, self.total)));
        }
        Ok(())
    }

    /// Degrees Σ_{j>i} d(α_j) for i = 0..=r.
    pub fn suffix_degrees(&self, dist: &Distance) -> Vec<Degree> {
        let p = dist.parabolic();
        let mut out = vec![Degree::zero(p)];
        for &a in self.edge_roots.iter().rev() {
            let last = out.last().unwrap().add(&dist.rs().d_of_root(a, p));
            out.push(last);
        }
        out.reverse();
        out
    }

    pub fn to_json(&self, dist: &Distance) -> Value {
        let rs = dist.rs();
        json!({
            "cosets": self.cosets.iter().map(|w| rs.reduced_word(w).iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "edge_roots": self.edge_roots.iter().map(|&a| rs.root(a).coeffs().to_vec()).collect::<Vec<_>>(),
            "total": self.total.to_json(),
        })
    }
}

#[derive(Clone, Debug)]
struct Label {
    coset: u32,
    deg: Degree,
    pred: Option<u32>,
    /// Position in `edge_roots()` of the step into this label.
    edge: u32,
    alive: bool,
}

/// Pareto-minimal chain degrees from a seed set to every coset.
///
/// Labels are settled in order of total degree height, so a label is final
/// once its bucket is reached: anything dominating it has smaller height.
/// Labels leaving the scan box are dropped and remembered; a front is exact
/// when each dropped degree lies above some front element.
#[derive(Debug)]
pub struct ChainSearch<'d> {
    dist: &'d Distance,
    labels: Vec<Label>,
    at: Vec<Vec<u32>>,
    dropped: Vec<Degree>,
}

impl<'d> ChainSearch<'d> {
    /// Seeds every ū₀ ⪰ ū, as in the definition of δ_P(u, v).
    pub fn from_up_set(dist: &'d Distance, u: usize) -> Self {
        let seeds: Vec<usize> = (0..dist.table().len()).filter(|&x| dist.leq(u, x)).collect();
        Self::run(dist, &seeds)
    }

    /// Seeds only ū₀ = ū.
    pub fn from_exact(dist: &'d Distance, u: usize) -> Self {
        Self::run(dist, &[u])
    }

    fn run(dist: &'d Distance, seeds: &[usize]) -> Self {
        let n = dist.table().len();
        let cap = dist.scan_box();
        let height = |d: &Degree| d.coeffs().iter().sum::<i32>() as usize;
        let mut s = ChainSearch { dist, labels: Vec::new(), at: vec![Vec::new(); n], dropped: Vec::new() };
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); height(cap) + 1];
        let zero = Degree::zero(dist.parabolic());
        for &x in seeds {
            s.insert(x, zero.clone(), None, 0, &mut buckets);
        }
        let right = dist.table().right_reflections(dist.rs());
        let mut dropped = HashSet::new();
        for h in 0..buckets.len() {
            let mut k = 0;
            while k < buckets[h].len() {
                let id = buckets[h][k] as usize;
                k += 1;
                if !s.labels[id].alive {
                    continue;
                }
                let c = s.labels[id].coset as usize;
                for (e, &x) in right[c].iter().enumerate() {
                    let deg = s.labels[id].deg.add(&dist.edge_degrees()[e]);
                    if !deg.leq(cap) {
                        dropped.insert(deg);
                        continue;
                    }
                    s.insert(x as usize, deg, Some(id as u32), e as u32, &mut buckets);
                }
            }
        }
        for v in &mut s.at {
            v.retain(|&id| s.labels[id as usize].alive);
        }
        s.dropped = minimal_elements(&dropped.into_iter().collect::<Vec<_>>());
        s
    }

    fn insert(&mut self, x: usize, deg: Degree, pred: Option<u32>, edge: u32, buckets: &mut [Vec<u32>]) {
        if self.at[x].iter().any(|&id| self.labels[id as usize].alive && self.labels[id as usize].deg.leq(&deg)) {
            return;
        }
        for &id in &self.at[x] {
            let l = &mut self.labels[id as usize];
            if l.alive && deg.leq(&l.deg) {
                l.alive = false;
            }
        }
        let labels = &self.labels;
        self.at[x].retain(|&id| labels[id as usize].alive);
        let id = self.labels.len() as u32;
        let h = deg.coeffs().iter().sum::<i32>() as usize;
        self.labels.push(Label { coset: x as u32, deg, pred, edge, alive: true });
        self.at[x].push(id);
        buckets[h].push(id);
    }

    /// Pareto-minimal chain degrees from the seeds to the coset `x`.
    pub fn labels_at(&self, x: usize) -> Vec<Degree> {
        let mut v: Vec<Degree> = self.at[x].iter().map(|&id| self.labels[id as usize].deg.clone()).collect();
        v.sort();
        v
    }

    /// Minimal degrees over the terminal set {x̄ : x̄ ⪯ v̄*}.
    pub fn front(&self, v: usize) -> DegreeFront {
        let target = self.dist.dual_of(v);
        self.front_over((0..self.at.len()).filter(|&x| self.dist.leq(x, target)))
    }

    /// Minimal degrees of chains ending exactly at `x`.
    pub fn front_at(&self, x: usize) -> DegreeFront {
        self.front_over(std::iter::once(x))
    }

    fn front_over(&self, terminals: impl Iterator<Item = usize>) -> DegreeFront {
        let all: Vec<Degree> = terminals.flat_map(|x| self.labels_at(x)).collect();
        let degrees = minimal_elements(&all);
        let capped = self.dropped.iter().any(|d| !degrees.iter().any(|f| f.leq(d)));
        DegreeFront { degrees, provenance: Provenance::ChainSearch, capped }
    }

    /// A chain of degree `d` from the seeds into {x̄ : x̄ ⪯ v̄*}.
    pub fn witness(&self, v: usize, d: &Degree) -> Option<ChainWitness> {
        let target = self.dist.dual_of(v);
        let id = (0..self.at.len())
            .filter(|&x| self.dist.leq(x, target))
            .flat_map(|x| self.at[x].iter().copied())
            .find(|&id| &self.labels[id as usize].deg == d)?;
        Some(self.trace(id as usize))
    }

    /// A chain of degree `d` ending exactly at `x`.
    pub fn witness_at(&self, x: usize, d: &Degree) -> Option<ChainWitness> {
        let id = self.at[x].iter().copied().find(|&id| &self.labels[id as usize].deg == d)?;
        Some(self.trace(id as usize))
    }

    fn trace(&self, mut id: usize) -> ChainWitness {
        let roots = self.dist.table().edge_roots();
        let mut ids = vec![self.labels[id].coset as usize];
        let mut edge_roots = Vec::new();
        let total = self.labels[id].deg.clone();
        while let Some(p) = self.labels[id].pred {
            edge_roots.push(roots[self.labels[id].edge as usize]);
            id = p as usize;
            ids.push(self.labels[id].coset as usize);
        }
        ids.reverse();
        edge_roots.reverse();
        let cosets = ids.iter().map(|&c| self.dist.table().rep(c).clone()).collect();
        ChainWitness { ids, cosets, edge_roots, total }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::Options;
    use crate::rootsystem::{RootSystem, TypeLetter};
    use crate::weyl::Parabolic;

    #[test]
    fn rank_one_single_edge() {
        let a1 = RootSystem::new(TypeLetter::A, 1).unwrap();
        let d = Distance::new(&a1, &Parabolic::borel(1), &Options::default()).unwrap();
        let right = d.table().right_reflections(&a1);
        assert_eq!(right, &[vec![1], vec![0]]);
        assert_eq!(d.table().edge_roots(), &[0]);
    }

    #[test]
    fn a2_edge_count_matches_recount() {
        let a2 = RootSystem::new(TypeLetter::A, 2).unwrap();
        let b = Parabolic::borel(2);
        let d = Distance::new(&a2, &b, &Options::default()).unwrap();
        let right = d.table().right_reflections(&a2);
        let mut edges = HashSet::new();
        for (c, row) in right.iter().enumerate() {
            for &x in row {
                edges.insert((c.min(x as usize), c.max(x as usize)));
            }
        }
        // brute force: pairs of elements differing by a reflection on the right
        let elems = a2.enumerate_elements(100).unwrap();
        let mut brute = HashSet::new();
        for (i, u) in elems.iter().enumerate() {
            for (j, v) in elems.iter().enumerate() {
                let x = a2.inverse(u).mul(v);
                if i < j && (0..a2.num_positive()).any(|a| a2.reflection_of(a) == x) {
                    brute.insert((i, j));
                }
            }
        }
        assert_eq!(edges.len(), brute.len());
        assert_eq!(edges.len(), 6 * 3 / 2);
    }

    #[test]
    fn witnesses_check_out() {
        let b2 = RootSystem::new(TypeLetter::B, 2).unwrap();
        for p in Parabolic::all(2) {
            let d = Distance::new(&b2, &p, &Options::default()).unwrap();
            for u in 0..d.table().len() {
                let s = ChainSearch::from_up_set(&d, u);
                for v in 0..d.table().len() {
                    for deg in s.front(v).degrees {
                        let w = s.witness(v, &deg).unwrap();
                        w.check(&d).unwrap();
                        assert_eq!(w.total, deg);
                        assert!(d.leq(u, w.ids[0]));
                        assert!(d.leq(*w.ids.last().unwrap(), d.dual_of(v)));
                    }
                }
            }
        }
    }
}
