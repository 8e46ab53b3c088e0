//! The element z_d^P, curve neighborhoods of Schubert cosets, and the
//! cosmall / very cosmall classification of roots.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::degree::{degrees_in_box, Degree};
use crate::error::{Error, Result};
use crate::rootsystem::{CorootVector, RootSystem};
use crate::weyl::{Parabolic, WeylElement};

/// z_d^P together with its maximal representative z_d^P w_P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveNbhd {
    pub degree: Degree,
    pub z_min: WeylElement,
    pub z_max: WeylElement,
}

/// Memo table for z_d^P, shareable across threads.
#[derive(Debug, Default)]
pub struct ZCache {
    map: Mutex<HashMap<Degree, Arc<CurveNbhd>>>,
}

impl ZCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, rs: &RootSystem, d: &Degree) -> Arc<CurveNbhd> {
        if let Some(z) = self.map.lock().unwrap().get(d) {
            return z.clone();
        }
        let z = Arc::new(rs.z(d));
        self.map.lock().unwrap().entry(d.clone()).or_insert(z).clone()
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Outcome of the scan for a lift e over B with z_e^B = z_d^P w_P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLiftReport {
    pub passed: bool,
    /// Largest degree scanned (the box corner).
    pub corner: Degree,
    /// Number of witnesses in the scanned box.
    pub witnesses: usize,
    /// Least witness in the scan order, if any.
    pub first_witness: Option<Degree>,
}

impl RootSystem {
    /// Hecke product of reflections along a list of roots.
    pub fn hecke_of_roots(&self, roots: &[usize]) -> WeylElement {
        roots.iter().fold(self.identity(), |acc, &a| self.hecke(&acc, &self.reflection_of(a)))
    }

    /// z_d^P from the canonical greedy decomposition.
    pub fn z(&self, d: &Degree) -> CurveNbhd {
        self.z_from_greedy(d, &self.greedy_decomposition(d))
    }

    /// z_d^P from a given greedy decomposition of d.
    pub fn z_from_greedy(&self, d: &Degree, greedy: &[usize]) -> CurveNbhd {
        let p = d.parabolic();
        let z_max = self.hecke(&self.hecke_of_roots(greedy), &self.longest_element(p));
        let z_min = self.coset_min(&z_max, p);
        CurveNbhd { degree: d.clone(), z_min, z_max }
    }

    /// Minimal representative of Γ_d(X_w) = X_{w·z_d^P}.
    pub fn curve_neighborhood(&self, w: &WeylElement, d: &Degree) -> WeylElement {
        self.coset_min(&self.hecke(w, &self.z(d).z_max), d.parabolic())
    }

    fn check_outside(&self, idx: usize, p: &Parabolic) -> Result<()> {
        if self.in_levi(idx, p) {
            return Err(Error::Domain(format!("root {} lies in R_P", self.root(idx))));
        }
        Ok(())
    }

    /// α is a maximal root of d(α).
    pub fn is_cosmall_by_maximality(&self, idx: usize, p: &Parabolic) -> Result<bool> {
        self.check_outside(idx, p)?;
        Ok(self.maximal_roots(&self.d_of_root(idx, p)).contains(&idx))
    }

    /// ℓ(s_α W_P) = (c₁(X), d(α)) − 1.
    pub fn is_cosmall_by_length(&self, idx: usize, p: &Parabolic) -> Result<bool> {
        self.check_outside(idx, p)?;
        let l = self.length(&self.coset_min(&self.reflection_of(idx), p)) as i32;
        Ok(l == self.c1(p).pair(&self.d_of_root(idx, p)) - 1)
    }

    /// P-cosmall test. Both characterizations are evaluated and must agree.
    pub fn is_cosmall(&self, idx: usize, p: &Parabolic) -> Result<bool> {
        let a = self.is_cosmall_by_maximality(idx, p)?;
        let b = self.is_cosmall_by_length(idx, p)?;
        if a != b {
            return Err(Error::Invariant(format!(
                "cosmall characterizations disagree for {} on {:?}: maximality {a}, length {b}",
                self.root(idx),
                p.one_based()
            )));
        }
        Ok(a)
    }

    /// α is a maximal root of d(α) + ZΔ_{P_β}∨ for every β ∉ Δ_P.
    pub fn is_very_cosmall(&self, idx: usize, p: &Parabolic) -> bool {
        let n = self.rank();
        p.complement().into_iter().all(|b| {
            let pb = Parabolic::maximal(n, b);
            !self.in_levi(idx, &pb) && self.maximal_roots(&self.d_of_root(idx, &pb)).contains(&idx)
        })
    }

    /// Scan lifts e over B of d with the Δ_P coordinates running from those of
    /// induce(d) up to induce(d) + `margin`. Passes when the box corner and the
    /// corner one step further out are both witnesses.
    pub fn z_lift_check(&self, d: &Degree, margin: &Degree) -> Result<ZLiftReport> {
        let n = self.rank();
        let p = *d.parabolic();
        let b = Parabolic::borel(n);
        let base = self.induce(d, &b)?;
        let target = self.z(d).z_max;
        let inner = p.indices();
        // offsets live on Δ_P, i.e. they are degrees for the complementary parabolic
        let span_p = Parabolic::from_mask(n, p.complement_mask());
        let span = Degree::from_outside(&span_p, &inner.iter().map(|&i| margin.get(i)).collect::<Vec<_>>())?;
        let mut witnesses = 0;
        let mut first = None;
        let lift = |off: &Degree| {
            let mut c = base.coeffs().to_vec();
            for &i in &inner {
                c[i] += off.get(i);
            }
            Degree::from_coroot(&b, &CorootVector::new(c))
        };
        for off in degrees_in_box(&span) {
            let e = lift(&off);
            if self.z(&e).z_min == target {
                witnesses += 1;
                if first.is_none() {
                    first = Some(e);
                }
            }
        }
        let corner = lift(&span);
        let beyond = lift(&span.shift(1));
        let passed = self.z(&corner).z_min == target && self.z(&beyond).z_min == target;
        Ok(ZLiftReport { passed, corner, witnesses, first_witness: first })
    }

    /// For every β ∉ Δ_P some d' ≥ d + d(β) inside `cap` has z_{d'} = z_d.
    pub fn equalwx_criterion(&self, d: &Degree, cap: &Degree, cache: &ZCache) -> bool {
        let p = d.parabolic();
        let z = cache.get(self, d).z_min.clone();
        let pool = degrees_in_box(cap);
        p.complement().into_iter().all(|b| {
            let lo = d.add(&Degree::unit(p, b));
            pool.iter().any(|x| lo.leq(x) && cache.get(self, x).z_min == z)
        })
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
    fn z_examples() {
        let g2 = rs(TypeLetter::G, 2);
        let b = Parabolic::borel(2);
        assert!(g2.z(&Degree::zero(&b)).z_min.is_identity());
        let dgb = Degree::from_outside(&b, &[2, 2]).unwrap();
        assert_eq!(g2.z(&dgb).z_min, g2.w_o());
        let p = Parabolic::maximal(2, 1);
        let z0 = g2.z(&Degree::zero(&p));
        assert_eq!(z0.z_max, g2.longest_element(&p));
        assert!(z0.z_min.is_identity());
    }

    #[test]
    fn cache_is_transparent() {
        let b2 = rs(TypeLetter::B, 2);
        let c = ZCache::new();
        let d = Degree::from_outside(&Parabolic::borel(2), &[1, 2]).unwrap();
        assert_eq!(*c.get(&b2, &d), b2.z(&d));
        c.get(&b2, &d);
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn cosmall_examples() {
        for (l, n) in [(TypeLetter::B, 3), (TypeLetter::G, 2)] {
            let r = rs(l, n);
            let b = Parabolic::borel(n);
            let long = r.root_length(r.highest_root_index());
            for k in 0..r.num_positive() {
                if r.root_length(k) == long || r.root(k).height() == 1 {
                    assert!(r.is_cosmall(k, &b).unwrap(), "{l}{n} {}", r.root(k));
                }
            }
            let s = r.highest_short_root_index().unwrap();
            assert!(!r.is_cosmall(s, &b).unwrap());
            for p in Parabolic::all(n) {
                if p.mask() != r.full_mask() {
                    assert!(r.is_cosmall(r.highest_root_index(), &p).unwrap());
                    assert!(r.is_very_cosmall(r.highest_root_index(), &p));
                }
            }
        }
        let b2 = rs(TypeLetter::B, 2);
        assert!(b2.is_cosmall(b2.simple_root_index(0), &Parabolic::maximal(2, 1)).is_err());
    }

    #[test]
    fn very_cosmall_classification_b3() {
        let r = rs(TypeLetter::B, 3);
        for p in Parabolic::all(3) {
            if p.mask() == r.full_mask() {
                continue;
            }
            for k in 0..r.num_positive() {
                let v = r.is_very_cosmall(k, &p);
                if p.is_maximal() {
                    let c = !r.in_levi(k, &p) && r.is_cosmall(k, &p).unwrap();
                    assert_eq!(v, c);
                } else {
                    assert_eq!(v, k == r.highest_root_index());
                }
            }
        }
    }

    #[test]
    fn curve_neighborhood_basics() {
        let g2 = rs(TypeLetter::G, 2);
        for p in Parabolic::all(2) {
            let w = g2.simple_reflection(1);
            assert_eq!(g2.curve_neighborhood(&w, &Degree::zero(&p)), g2.coset_min(&w, &p));
        }
    }
}
