//! Weyl group elements, Bruhat order, parabolic cosets and the Hecke monoid.
//!
//! An element is stored as its action on the root lattice: column `j` holds
//! the coefficients of `w(α_j)`. Group operations are methods on
//! [`RootSystem`].

mod table;

pub use table::CosetTable;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{mask_indices, Root, RootSystem};

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    m: Vec<i32>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<&[i32]> = (0..self.rank).map(|j| self.col(j)).collect();
        write!(f, "WeylElement{cols:?}")
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement { rank, m }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// w(α_j) in root coordinates.
    #[inline]
    pub fn col(&self, j: usize) -> &[i32] {
        &self.m[j * self.rank..(j + 1) * self.rank]
    }

    /// The action matrix, column major.
    pub fn action(&self) -> &[i32] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    pub fn apply(&self, x: &[i32]) -> Vec<i32> {
        let n = self.rank;
        let mut out = vec![0; n];
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            let c = self.col(j);
            for i in 0..n {
                out[i] += xj * c[i];
            }
        }
        out
    }

    /// Ordinary group product `self * other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut m = vec![0; n * n];
        for j in 0..n {
            let c = self.apply(other.col(j));
            m[j * n..(j + 1) * n].copy_from_slice(&c);
        }
        WeylElement { rank: n, m }
    }

    /// Whether w(α_i) is a negative root, i.e. s_i is a right descent.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        // w(α_i) is a root, so all its entries share a sign
        self.col(i).iter().any(|&x| x < 0)
    }

    /// Least index right descent.
    pub fn first_right_descent(&self) -> Option<usize> {
        (0..self.rank).find(|&i| self.has_right_descent(i))
    }
}

/// Minimal or maximal representative of a coset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Minimal,
    Maximal,
}

/// Δ_P ⊆ Δ, stored as a bitmask over 0-based simple indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parabolic {
    rank: u8,
    mask: u32,
}

impl Parabolic {
    pub fn from_mask(rank: usize, mask: u32) -> Self {
        let full = if rank >= 32 { u32::MAX } else { (1u32 << rank) - 1 };
        Parabolic { rank: rank as u8, mask: mask & full }
    }

    /// Δ_P = ∅.
    pub fn borel(rank: usize) -> Self {
        Self::from_mask(rank, 0)
    }

    /// Δ_P = Δ.
    pub fn full(rank: usize) -> Self {
        Self::from_mask(rank, u32::MAX)
    }

    /// P_β: Δ_P = Δ \ {β}.
    pub fn maximal(rank: usize, beta: usize) -> Self {
        Self::from_mask(rank, !(1u32 << beta))
    }

    /// From 0-based indices.
    pub fn from_indices(rank: usize, idx: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        for &i in idx {
            if i >= rank {
                return Err(Error::Config(format!("simple index {} out of range 1..={rank}", i + 1)));
            }
            mask |= 1 << i;
        }
        Ok(Self::from_mask(rank, mask))
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask & (1 << i) != 0
    }

    /// Δ_P as 0-based indices.
    pub fn indices(&self) -> Vec<usize> {
        mask_indices(self.mask).collect()
    }

    /// Δ \ Δ_P as 0-based indices: the coordinates of a degree.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.contains(i)).collect()
    }

    pub fn complement_mask(&self) -> u32 {
        Self::full(self.rank()).mask & !self.mask
    }

    pub fn is_subset_of(&self, other: &Parabolic) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_borel(&self) -> bool {
        self.mask == 0
    }

    pub fn is_maximal(&self) -> bool {
        self.complement().len() == 1
    }

    /// Every parabolic of a rank-`rank` system, Borel first.
    pub fn all(rank: usize) -> Vec<Parabolic> {
        (0..(1u32 << rank)).map(|m| Self::from_mask(rank, m)).collect()
    }

    /// 1-based indices, for output.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices().into_iter().map(|i| i + 1).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRep {
    pub element: WeylElement,
    pub parabolic: Parabolic,
    pub flavor: Flavor,
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.mul_simple_right(&self.identity(), i)
    }

    /// s_α for a positive or negative root α.
    pub fn reflection(&self, alpha: &Root) -> Result<WeylElement> {
        let neg = Root::new(alpha.coeffs().iter().map(|x| -x).collect());
        let idx = self
            .root_index(alpha)
            .or_else(|| self.root_index(&neg))
            .ok_or_else(|| Error::Domain(format!("{alpha} is not a root of {}", self.name())))?;
        Ok(self.reflection_of(idx))
    }

    /// s_α for the positive root with index `idx`.
    pub fn reflection_of(&self, idx: usize) -> WeylElement {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let c = self.reflect(&e, idx);
            m[j * n..(j + 1) * n].copy_from_slice(&c);
        }
        WeylElement { rank: n, m }
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        u.mul(v)
    }

    /// w s_i.
    pub fn mul_simple_right(&self, w: &WeylElement, i: usize) -> WeylElement {
        let n = self.rank();
        let mut m = w.m.clone();
        let ci: Vec<i32> = w.col(i).to_vec();
        for j in 0..n {
            let a = self.cartan(i, j);
            if a == 0 {
                continue;
            }
            for k in 0..n {
                m[j * n + k] -= a * ci[k];
            }
        }
        WeylElement { rank: n, m }
    }

    /// s_i w.
    pub fn mul_simple_left(&self, i: usize, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut m = w.m.clone();
        for j in 0..n {
            let c = self.pair_simple(w.col(j), i);
            m[j * n + i] -= c;
        }
        WeylElement { rank: n, m }
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.identity(), |w, &i| self.mul_simple_right(&w, i))
    }

    /// Canonical reduced word: repeatedly strip the least-index right descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut w = w.clone();
        let mut rev = Vec::new();
        while let Some(i) = w.first_right_descent() {
            rev.push(i);
            w = self.mul_simple_right(&w, i);
        }
        rev.reverse();
        rev
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        let n = self.rank();
        // height of w(α_j); height of w(α) is then linear in α
        let h: Vec<i32> = (0..n).map(|j| w.col(j).iter().sum()).collect();
        self.positive_roots().iter().filter(|r| r.coeffs().iter().zip(&h).map(|(a, b)| a * b).sum::<i32>() < 0).count()
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word)
    }

    /// Longest element of W_S for S given by a parabolic.
    pub fn longest_element(&self, p: &Parabolic) -> WeylElement {
        let mut w = self.identity();
        loop {
            match p.indices().into_iter().find(|&b| !w.has_right_descent(b)) {
                Some(b) => w = self.mul_simple_right(&w, b),
                None => return w,
            }
        }
    }

    pub fn w_o(&self) -> WeylElement {
        self.longest_element(&Parabolic::full(self.rank()))
    }

    /// w_X = w_o w_P.
    pub fn w_x(&self, p: &Parabolic) -> WeylElement {
        self.w_o().mul(&self.longest_element(p))
    }

    pub fn coset_min(&self, w: &WeylElement, p: &Parabolic) -> WeylElement {
        let mut w = w.clone();
        while let Some(b) = p.indices().into_iter().find(|&b| w.has_right_descent(b)) {
            w = self.mul_simple_right(&w, b);
        }
        w
    }

    pub fn coset_max(&self, w: &WeylElement, p: &Parabolic) -> WeylElement {
        let mut w = w.clone();
        while let Some(b) = p.indices().into_iter().find(|&b| !w.has_right_descent(b)) {
            w = self.mul_simple_right(&w, b);
        }
        w
    }

    pub fn coset_rep(&self, w: &WeylElement, p: &Parabolic, flavor: Flavor) -> CosetRep {
        let element = match flavor {
            Flavor::Minimal => self.coset_min(w, p),
            Flavor::Maximal => self.coset_max(w, p),
        };
        CosetRep { element, parabolic: *p, flavor }
    }

    pub fn is_min_rep(&self, w: &WeylElement, p: &Parabolic) -> bool {
        p.indices().into_iter().all(|b| !w.has_right_descent(b))
    }

    /// Bruhat order by the descent recursion.
    ///
    /// With s a right descent of v: if s is also a descent of u then
    /// u ⪯ v ⟺ us ⪯ vs, otherwise u ⪯ v ⟺ u ⪯ vs.
    pub fn bruhat_leq(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut v = v.clone();
        loop {
            match v.first_right_descent() {
                None => return u.is_identity(),
                Some(i) => {
                    if u.has_right_descent(i) {
                        u = self.mul_simple_right(&u, i);
                    }
                    v = self.mul_simple_right(&v, i);
                }
            }
        }
    }

    pub fn bruhat_leq_coset(&self, u: &WeylElement, v: &WeylElement, p: &Parabolic) -> bool {
        self.bruhat_leq(&self.coset_min(u, p), &self.coset_min(v, p))
    }

    /// u · s_i in the Hecke monoid.
    #[inline]
    pub fn hecke_simple(&self, u: &WeylElement, i: usize) -> WeylElement {
        if u.has_right_descent(i) {
            u.clone()
        } else {
            self.mul_simple_right(u, i)
        }
    }

    /// Hecke product u · v along the canonical reduced word of v.
    pub fn hecke(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        self.hecke_word(u, &self.reduced_word(v))
    }

    pub fn hecke_word(&self, u: &WeylElement, word: &[usize]) -> WeylElement {
        let mut w = u.clone();
        for &i in word {
            if !w.has_right_descent(i) {
                w = self.mul_simple_right(&w, i);
            }
        }
        w
    }

    /// u · vW_P, returned as the minimal representative.
    pub fn hecke_coset(&self, u: &WeylElement, v: &WeylElement, p: &Parabolic) -> WeylElement {
        self.coset_min(&self.hecke(u, v), p)
    }

    /// Δ_{P_w} = {β : s_β · wW_P = wW_P}, as a mask.
    pub fn stabilizer_delta(&self, w: &WeylElement, p: &Parabolic) -> u32 {
        let base = self.coset_min(w, p);
        (0..self.rank())
            .filter(|&b| self.coset_min(&self.hecke(&self.simple_reflection(b), w), p) == base)
            .fold(0, |m, b| m | (1 << b))
    }

    /// Same set via {β : s_β wW_P ⪯ wW_P}.
    pub fn stabilizer_delta_by_order(&self, w: &WeylElement, p: &Parabolic) -> u32 {
        (0..self.rank())
            .filter(|&b| self.bruhat_leq_coset(&self.mul_simple_left(b, w), w, p))
            .fold(0, |m, b| m | (1 << b))
    }

    /// w* = w_o w.
    pub fn dual(&self, w: &WeylElement) -> WeylElement {
        self.w_o().mul(w)
    }

    /// Δ(w): simple reflections occurring in a reduced word.
    pub fn element_support(&self, w: &WeylElement) -> u32 {
        self.reduced_word(w).into_iter().fold(0, |m, i| m | (1 << i))
    }

    /// All of W, by breadth-first search (so sorted by length).
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<WeylElement>> {
        self.enumerate_cosets(&Parabolic::borel(self.rank()), cap)
    }

    /// Minimal representatives of W/W_P, sorted by length.
    pub fn enumerate_cosets(&self, p: &Parabolic, cap: usize) -> Result<Vec<WeylElement>> {
        // W^P is closed under removing a left factor, so a BFS by left
        // multiplication inside W^P reaches every representative, layer by
        // layer in length.
        let mut out = vec![self.identity()];
        let mut seen: HashMap<WeylElement, ()> = HashMap::new();
        seen.insert(self.identity(), ());
        let mut k = 0;
        while k < out.len() {
            let w = out[k].clone();
            for i in 0..self.rank() {
                let x = self.mul_simple_left(i, &w);
                if !self.is_min_rep(&x, p) || seen.contains_key(&x) {
                    continue;
                }
                if out.len() >= cap {
                    return Err(Error::Resource { what: format!("enumerating W/W_P of {}", self.name()), cap });
                }
                seen.insert(x.clone(), ());
                out.push(x);
            }
            k += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::TypeLetter;

    fn rs(l: TypeLetter, n: usize) -> RootSystem {
        RootSystem::new(l, n).unwrap()
    }

    /// Subword oracle: the Bruhat interval below v is the set of products of
    /// subwords of one reduced word of v.
    fn below_by_subwords(r: &RootSystem, v: &WeylElement) -> Vec<WeylElement> {
        let word = r.reduced_word(v);
        let mut out: Vec<WeylElement> = Vec::new();
        for bits in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = (0..word.len()).filter(|k| bits & (1 << k) != 0).map(|k| word[k]).collect();
            let x = r.from_word(&sub);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    #[test]
    fn reflections_and_words() {
        let a2 = rs(TypeLetter::A, 2);
        let t = a2.highest_root().clone();
        let st = a2.reflection(&t).unwrap();
        assert_eq!(a2.length(&st), 3);
        assert_eq!(a2.reduced_word(&st), vec![0, 1, 0]);
        assert_eq!(a2.from_word(&[0, 1, 0]), a2.from_word(&[1, 0, 1]));
        assert_eq!(st, a2.from_word(&[1, 0, 1]));
        assert!(a2.mul_simple_right(&st, 0) != st);
        let s1 = a2.simple_reflection(0);
        assert_eq!(s1.mul(&s1), a2.identity());
        assert_eq!(st.mul(&st), a2.identity());
        assert_eq!(s1.apply(&[1, 0]), vec![-1, 0]);
        assert!(a2.reduced_word(&a2.identity()).is_empty());
        assert!(a2.reflection(&Root::new(vec![1, -1])).is_err());

        let g2 = rs(TypeLetter::G, 2);
        assert_eq!(g2.length(&g2.w_o()), 6);
        for w in g2.enumerate_elements(100).unwrap() {
            assert_eq!(g2.reduced_word(&w).len(), g2.length(&w));
            assert_eq!(g2.from_word(&g2.reduced_word(&w)), w);
            assert_eq!(g2.inverse(&w).mul(&w), g2.identity());
        }
    }

    #[test]
    fn longest_elements_and_cosets() {
        let a2 = rs(TypeLetter::A, 2);
        assert_eq!(a2.longest_element(&Parabolic::borel(2)), a2.identity());
        let w0 = a2.w_o();
        for r in a2.positive_roots() {
            assert!(w0.apply(r.coeffs()).iter().all(|&x| x <= 0));
        }
        let g2 = rs(TypeLetter::G, 2);
        assert_eq!(g2.longest_element(&Parabolic::from_mask(2, 0b01)), g2.simple_reflection(0));

        let p = Parabolic::from_mask(2, 0b10);
        // w_o s_2 = s_2 s_1 is the short end of w_o W_P; s_1 s_2 sends α_2 negative
        let m = a2.coset_min(&w0, &p);
        assert_eq!(a2.reduced_word(&m), vec![1, 0]);
        assert_eq!(a2.reduced_word(&a2.coset_min(&w0, &Parabolic::from_mask(2, 0b01))), vec![0, 1]);
        let wp = a2.longest_element(&p);
        assert_eq!(a2.coset_min(&wp, &p), a2.identity());
        for w in a2.enumerate_elements(100).unwrap() {
            assert_eq!(a2.coset_min(&w, &Parabolic::borel(2)), w);
            let mn = a2.coset_min(&w, &p);
            let mx = a2.coset_max(&w, &p);
            assert_eq!(mn.mul(&wp), mx);
            assert_eq!(a2.length(&mx), a2.length(&mn) + a2.length(&wp));
        }
        assert_eq!(a2.enumerate_elements(100).unwrap().len(), 6);
        assert_eq!(g2.enumerate_elements(100).unwrap().len(), 12);
        let a3 = rs(TypeLetter::A, 3);
        assert_eq!(a3.enumerate_cosets(&Parabolic::from_mask(3, 0b101), 100).unwrap().len(), 6);
        assert!(matches!(a3.enumerate_elements(10), Err(Error::Resource { cap: 10, .. })));
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for (l, n) in [(TypeLetter::A, 3), (TypeLetter::B, 3), (TypeLetter::G, 2)] {
            let r = rs(l, n);
            let all = r.enumerate_elements(1000).unwrap();
            for v in &all {
                let below = below_by_subwords(&r, v);
                for u in &all {
                    assert_eq!(r.bruhat_leq(u, v), below.contains(u), "{l}{n}");
                }
            }
        }
        let g2 = rs(TypeLetter::G, 2);
        let sts = g2.reflection(g2.highest_short_root().unwrap()).unwrap();
        assert!(g2.bruhat_leq(&sts, &g2.w_o()));
        assert!(!g2.bruhat_leq(&sts, &g2.simple_reflection(0)));
    }

    #[test]
    fn hecke_basics() {
        let b2 = rs(TypeLetter::B, 2);
        let s = b2.simple_reflection(1);
        assert_eq!(b2.hecke(&s, &s), s);
        let e = b2.identity();
        for w in b2.enumerate_elements(100).unwrap() {
            assert_eq!(b2.hecke(&w, &e), w);
            assert_eq!(b2.hecke(&e, &w), w);
        }
        for p in Parabolic::all(2) {
            let wp = b2.longest_element(&p);
            assert_eq!(b2.hecke(&wp, &wp), wp);
        }
    }

    #[test]
    fn stabilizer_descriptions_agree() {
        for (l, n) in [(TypeLetter::A, 2), (TypeLetter::B, 2)] {
            let r = rs(l, n);
            for p in Parabolic::all(n) {
                for w in r.enumerate_cosets(&p, 100).unwrap() {
                    assert_eq!(r.stabilizer_delta(&w, &p), r.stabilizer_delta_by_order(&w, &p));
                }
                assert_eq!(r.stabilizer_delta(&r.w_o(), &p), r.full_mask());
                assert_eq!(r.stabilizer_delta(&r.identity(), &p), p.mask());
            }
        }
    }

    #[test]
    fn dual_is_involution() {
        let a2 = rs(TypeLetter::A, 2);
        assert_eq!(a2.dual(&a2.identity()), a2.w_o());
        for w in a2.enumerate_elements(100).unwrap() {
            assert_eq!(a2.dual(&a2.dual(&w)), w);
            assert_eq!(a2.length(&w) + a2.length(&a2.dual(&w)), 3);
        }
    }
}
