//! Degrees in H₂(G/P), the degree d(α) of a root, c₁, greedy decompositions,
//! supports, and restriction/induction between parabolics.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::rootsystem::{CorootVector, RootSystem};
use crate::weyl::Parabolic;

/// A class in ZΔ∨/ZΔ_P∨. Stored over all of Δ with zeros on Δ_P.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    parabolic: Parabolic,
    coeffs: Vec<i32>,
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.outside().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Degree {
    pub fn zero(p: &Parabolic) -> Self {
        Degree { parabolic: *p, coeffs: vec![0; p.rank()] }
    }

    /// Image of a coroot-lattice vector: coordinates on Δ_P are dropped.
    pub fn from_coroot(p: &Parabolic, c: &CorootVector) -> Self {
        let coeffs = c.coeffs().iter().enumerate().map(|(i, &x)| if p.contains(i) { 0 } else { x }).collect();
        Degree { parabolic: *p, coeffs }
    }

    /// From coefficients listed over Δ \ Δ_P in increasing index order.
    pub fn from_outside(p: &Parabolic, vals: &[i32]) -> Result<Self> {
        let comp = p.complement();
        if vals.len() != comp.len() {
            return Err(Error::Config(format!(
                "degree needs {} coefficients (one per simple root outside the parabolic), got {}",
                comp.len(),
                vals.len()
            )));
        }
        if vals.iter().any(|&v| v < 0) {
            return Err(Error::Config("degree coefficients must be nonnegative".into()));
        }
        let mut d = Self::zero(p);
        for (&i, &v) in comp.iter().zip(vals) {
            d.coeffs[i] = v;
        }
        Ok(d)
    }

    /// The unit degree on β ∉ Δ_P.
    pub fn unit(p: &Parabolic, beta: usize) -> Self {
        let mut d = Self::zero(p);
        d.coeffs[beta] = 1;
        d
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    /// Coefficients over all of Δ, zero on Δ_P.
    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    /// d_β = (ω_β, d).
    pub fn get(&self, beta: usize) -> i32 {
        self.coeffs[beta]
    }

    /// Coefficients over Δ \ Δ_P.
    pub fn outside(&self) -> Vec<i32> {
        self.parabolic.complement().into_iter().map(|i| self.coeffs[i]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Degree) -> Degree {
        debug_assert_eq!(self.parabolic, other.parabolic);
        Degree {
            parabolic: self.parabolic,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// self - other when the result is effective.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        other.leq(self).then(|| Degree {
            parabolic: self.parabolic,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn leq(&self, other: &Degree) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    pub fn lt(&self, other: &Degree) -> bool {
        self.leq(other) && self != other
    }

    /// Add `k` to every coordinate outside Δ_P.
    pub fn shift(&self, k: i32) -> Degree {
        let mut d = self.clone();
        for i in self.parabolic.complement() {
            d.coeffs[i] += k;
        }
        d
    }

    /// Δ(d) = {β : d_β > 0} as a mask.
    pub fn support_mask(&self) -> u32 {
        self.coeffs.iter().enumerate().filter(|(_, &x)| x > 0).fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for i in self.parabolic.complement() {
            coeffs.insert((i + 1).to_string(), json!(self.coeffs[i]));
        }
        json!({ "parabolic": self.parabolic.one_based(), "coeffs": coeffs })
    }

    pub fn from_json(rank: usize, v: &Value) -> Result<Degree> {
        let bad = || Error::Config(format!("malformed degree JSON: {v}"));
        let idx: Vec<usize> = v["parabolic"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().filter(|&k| k >= 1).map(|k| k as usize - 1).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let p = Parabolic::from_indices(rank, &idx)?;
        let obj = v["coeffs"].as_object().ok_or_else(bad)?;
        let mut vals = Vec::new();
        for i in p.complement() {
            vals.push(obj.get(&(i + 1).to_string()).and_then(Value::as_i64).ok_or_else(bad)? as i32);
        }
        Degree::from_outside(&p, &vals)
    }
}

/// All degrees d with 0 ≤ d ≤ cap, in lexicographic order of the outside coordinates.
pub fn degrees_in_box(cap: &Degree) -> Vec<Degree> {
    let p = *cap.parabolic();
    let comp = p.complement();
    let mut out = Vec::new();
    let mut cur = Degree::zero(&p);
    loop {
        out.push(cur.clone());
        let mut k = comp.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            let i = comp[k];
            if cur.coeffs[i] < cap.coeffs[i] {
                cur.coeffs[i] += 1;
                break;
            }
            cur.coeffs[i] = 0;
        }
    }
}

/// Pareto-minimal elements of a finite set of degrees, sorted.
pub fn minimal_elements(ds: &[Degree]) -> Vec<Degree> {
    let mut out: Vec<Degree> = ds.iter().filter(|d| !ds.iter().any(|e| e.lt(d))).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// c₁(G/P) on the fundamental weights ω_β, β ∉ Δ_P (zero on Δ_P).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector {
    pub coeffs: Vec<i32>,
}

impl ChernVector {
    pub fn pair(&self, d: &Degree) -> i32 {
        self.coeffs.iter().zip(d.coeffs()).map(|(a, b)| a * b).sum()
    }
}

impl RootSystem {
    /// d(α) for the positive root with index `idx`.
    pub fn d_of_root(&self, idx: usize, p: &Parabolic) -> Degree {
        Degree::from_coroot(p, self.coroot_of(idx))
    }

    /// d(β) for a simple root.
    pub fn d_of_simple(&self, beta: usize, p: &Parabolic) -> Degree {
        self.d_of_root(self.simple_root_index(beta), p)
    }

    /// Whether α lies in R_P.
    pub fn in_levi(&self, idx: usize, p: &Parabolic) -> bool {
        self.root(idx).support_mask() & !p.mask() == 0
    }

    pub fn c1(&self, p: &Parabolic) -> ChernVector {
        let n = self.rank();
        let mut sum = vec![0; n];
        for (k, r) in self.positive_roots().iter().enumerate() {
            if !self.in_levi(k, p) {
                for i in 0..n {
                    sum[i] += r.coeffs()[i];
                }
            }
        }
        let coeffs = (0..n).map(|b| if p.contains(b) { 0 } else { self.pair_simple(&sum, b) }).collect();
        ChernVector { coeffs }
    }

    /// Maximal roots of d: maximal elements of {α ∈ R⁺ \ R_P⁺ : d(α) ≤ d}.
    pub fn maximal_roots(&self, d: &Degree) -> Vec<usize> {
        let p = d.parabolic();
        let cand: Vec<usize> =
            (0..self.num_positive()).filter(|&k| !self.in_levi(k, p) && self.d_of_root(k, p).leq(d)).collect();
        cand.iter().copied().filter(|&a| !cand.iter().any(|&b| b != a && self.root(a).leq(self.root(b)))).collect()
    }

    /// Greedy decomposition with the lexicographically largest maximal root
    /// chosen at each step.
    pub fn greedy_decomposition(&self, d: &Degree) -> Vec<usize> {
        self.greedy_by(d, |rs, maxes| {
            *maxes.iter().max_by(|&&a, &&b| rs.root(a).coeffs().cmp(rs.root(b).coeffs())).unwrap()
        })
    }

    /// Greedy decomposition with a caller-supplied tie-break among maximal roots.
    pub fn greedy_by(&self, d: &Degree, mut pick: impl FnMut(&RootSystem, &[usize]) -> usize) -> Vec<usize> {
        let mut rest = d.clone();
        let mut out = Vec::new();
        while !rest.is_zero() {
            let maxes = self.maximal_roots(&rest);
            // every nonzero degree dominates some d(β), β simple outside Δ_P
            let a = pick(self, &maxes);
            rest = rest.checked_sub(&self.d_of_root(a, d.parabolic())).expect("maximal root degree fits");
            out.push(a);
        }
        out
    }

    /// Δ(d) = {β ∉ Δ_P : d_β > 0}.
    pub fn naive_support(&self, d: &Degree) -> u32 {
        d.support_mask()
    }

    /// Union of the supports of the greedy entries.
    pub fn extended_support(&self, d: &Degree) -> u32 {
        self.greedy_decomposition(d).iter().fold(0, |m, &a| m | self.root(a).support_mask())
    }

    pub fn is_connected_degree(&self, d: &Degree) -> bool {
        let s = self.extended_support(d);
        s != 0 && self.is_connected(s)
    }

    /// α(d): the first greedy entry of a connected degree.
    pub fn alpha_of_connected(&self, d: &Degree) -> Result<usize> {
        if !self.is_connected_degree(d) {
            return Err(Error::Domain(format!("degree {d} does not have connected support")));
        }
        Ok(self.greedy_decomposition(d)[0])
    }

    /// d_Q for P ⊆ Q.
    pub fn restrict(&self, d: &Degree, q: &Parabolic) -> Result<Degree> {
        if !d.parabolic().is_subset_of(q) {
            return Err(Error::Domain(format!(
                "cannot restrict from {:?} to {:?}: parabolics are not nested",
                d.parabolic().one_based(),
                q.one_based()
            )));
        }
        Ok(Degree::from_coroot(q, &CorootVector::new(d.coeffs().to_vec())))
    }

    /// e^P = Σ d(α_i) over a greedy decomposition of e over Q ⊇ P.
    pub fn induce(&self, e: &Degree, p: &Parabolic) -> Result<Degree> {
        if !p.is_subset_of(e.parabolic()) {
            return Err(Error::Domain(format!(
                "cannot induce from {:?} to {:?}: parabolics are not nested",
                e.parabolic().one_based(),
                p.one_based()
            )));
        }
        Ok(self.greedy_decomposition(e).iter().fold(Degree::zero(p), |acc, &a| acc.add(&self.d_of_root(a, p))))
    }

    /// Sum of d(α) over a list of roots.
    pub fn degree_of_roots(&self, roots: &[usize], p: &Parabolic) -> Degree {
        roots.iter().fold(Degree::zero(p), |acc, &a| acc.add(&self.d_of_root(a, p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::TypeLetter;

    fn rs(l: TypeLetter, n: usize) -> RootSystem {
        RootSystem::new(l, n).unwrap()
    }

    #[test]
    fn d_of_root_examples() {
        let g2 = rs(TypeLetter::G, 2);
        let p2 = Parabolic::maximal(2, 1);
        assert_eq!(g2.d_of_root(g2.highest_root_index(), &p2).outside(), vec![2]);
        assert!(g2.d_of_root(g2.simple_root_index(0), &p2).is_zero());
        let b = Parabolic::borel(2);
        for k in 0..g2.num_positive() {
            assert_eq!(g2.d_of_root(k, &b).coeffs(), g2.coroot_of(k).coeffs());
        }
    }

    #[test]
    fn c1_examples() {
        let a1 = rs(TypeLetter::A, 1);
        assert_eq!(a1.c1(&Parabolic::borel(1)).coeffs, vec![2]);
        // c₁ of a full flag variety is 2ρ = Σ 2ω_β
        let b3 = rs(TypeLetter::B, 3);
        assert_eq!(b3.c1(&Parabolic::borel(3)).coeffs, vec![2, 2, 2]);
        // projective space P^n: c₁ = (n+1) ω₁
        let a3 = rs(TypeLetter::A, 3);
        assert_eq!(a3.c1(&Parabolic::maximal(3, 0)).coeffs, vec![4, 0, 0]);
        assert_eq!(a3.c1(&Parabolic::maximal(3, 0)).pair(&Degree::zero(&Parabolic::maximal(3, 0))), 0);
    }

    #[test]
    fn greedy_examples() {
        let g2 = rs(TypeLetter::G, 2);
        let b = Parabolic::borel(2);
        assert!(g2.greedy_decomposition(&Degree::zero(&b)).is_empty());
        let e = Degree::from_outside(&b, &[2, 1]).unwrap();
        let g: Vec<Vec<i32>> = g2.greedy_decomposition(&e).iter().map(|&a| g2.root(a).coeffs().to_vec()).collect();
        assert_eq!(g, vec![vec![3, 1], vec![1, 0]]);
        assert_eq!(g2.extended_support(&e), 0b11);
        assert!(g2.maximal_roots(&Degree::zero(&b)).is_empty());
        let t = g2.d_of_root(g2.highest_root_index(), &b);
        assert_eq!(g2.maximal_roots(&t), vec![g2.highest_root_index()]);
        assert_eq!(g2.alpha_of_connected(&t).unwrap(), g2.highest_root_index());
        let a3 = rs(TypeLetter::A, 3);
        let b3 = Parabolic::borel(3);
        let d = Degree::from_outside(&b3, &[1, 0, 1]).unwrap();
        assert!(!a3.is_connected_degree(&d));
        assert!(a3.alpha_of_connected(&d).is_err());
    }

    #[test]
    fn restrict_and_induce() {
        let b2 = rs(TypeLetter::B, 2);
        let b = Parabolic::borel(2);
        let q = Parabolic::maximal(2, 0);
        let d = Degree::from_outside(&b, &[2, 3]).unwrap();
        assert_eq!(b2.restrict(&d, &b).unwrap(), d);
        assert_eq!(b2.restrict(&d, &q).unwrap().outside(), vec![2]);
        let e = Degree::from_outside(&q, &[1]).unwrap();
        assert!(b2.restrict(&e, &b).is_err());
        assert!(b2.induce(&d, &q).is_err());
        assert!(b2.induce(&Degree::zero(&q), &b).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let p = Parabolic::from_indices(4, &[1, 3]).unwrap();
        let d = Degree::from_outside(&p, &[3, 5]).unwrap();
        let v = d.to_json();
        assert_eq!(v, json!({"parabolic": [2, 4], "coeffs": {"1": 3, "3": 5}}));
        assert_eq!(Degree::from_json(4, &v).unwrap(), d);
        assert!(Degree::from_json(4, &json!({"parabolic": [2]})).is_err());
        assert!(Degree::from_outside(&p, &[1]).is_err());
        assert!(Degree::from_outside(&p, &[1, -1]).is_err());
    }

    #[test]
    fn boxes_and_minimal_elements() {
        let p = Parabolic::borel(2);
        let cap = Degree::from_outside(&p, &[1, 2]).unwrap();
        let all = degrees_in_box(&cap);
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|d| d.leq(&cap)));
        let x = Degree::from_outside(&p, &[1, 0]).unwrap();
        let y = Degree::from_outside(&p, &[0, 1]).unwrap();
        assert_eq!(minimal_elements(&[Degree::zero(&p), x.clone()]), vec![Degree::zero(&p)]);
        assert_eq!(minimal_elements(&[x.clone(), y.clone()]).len(), 2);
        assert_eq!(degrees_in_box(&Degree::zero(&Parabolic::full(3))).len(), 1);
    }
}
