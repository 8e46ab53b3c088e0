//! The cascade of orthogonal roots, chain cascades and the formulas for d_X.

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::rootsystem::{mask_indices, CorootVector, RootSystem, TypeLetter};
use crate::weyl::{Parabolic, WeylElement};

/// 𝓑 for the subsystem generated by a subset of Δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cascade {
    /// Subset of Δ the cascade was built on.
    pub mask: u32,
    /// Members as positive root indices, in construction order.
    pub roots: Vec<usize>,
    /// parent[k] is the member whose orthogonal complement produced roots[k];
    /// `None` for the highest root of each component of `mask`.
    pub parent: Vec<Option<usize>>,
}

impl Cascade {
    pub fn contains(&self, idx: usize) -> bool {
        self.roots.contains(&idx)
    }

    pub fn parent_of(&self, idx: usize) -> Option<usize> {
        self.roots.iter().position(|&r| r == idx).and_then(|k| self.parent[k])
    }
}

impl RootSystem {
    /// Δ°(S) = {β ∈ S : (β, θ_S) = 0} for a connected S.
    pub fn delta_circ_of(&self, mask: u32) -> u32 {
        let Some(t) = self.highest_root_of(mask) else { return 0 };
        let theta = self.root(t).coeffs().to_vec();
        mask_indices(mask)
            .filter(|&b| self.inner(self.simple_root(b).coeffs(), &theta) == 0)
            .fold(0, |m, b| m | (1 << b))
    }

    /// Δ° of the whole system.
    pub fn delta_circ(&self) -> u32 {
        self.delta_circ_of(self.full_mask())
    }

    /// 𝓑 of the subsystem generated by `mask`, one recursion per component.
    pub fn cascade_of(&self, mask: u32) -> Cascade {
        let mut out = Vec::new();
        for comp in self.components(mask) {
            self.cascade_component(comp, None, &mut out);
        }
        Cascade { mask, roots: out.iter().map(|x| x.0).collect(), parent: out.iter().map(|x| x.1).collect() }
    }

    fn cascade_component(&self, comp: u32, parent: Option<usize>, out: &mut Vec<(usize, Option<usize>)>) {
        let theta = self.highest_root_of(comp).expect("nonempty component");
        out.push((theta, parent));
        for sub in self.components(self.delta_circ_of(comp)) {
            self.cascade_component(sub, Some(theta), out);
        }
    }

    /// 𝓑_R.
    pub fn cascade(&self) -> Cascade {
        self.cascade_of(self.full_mask())
    }

    /// C_R(φ) restricted to the cascade built on `mask`, sorted descending.
    pub fn chain_cascade_in(&self, mask: u32, phi: usize) -> Result<Vec<usize>> {
        let b = self.cascade_of(mask);
        let mut c: Vec<usize> = b.roots.into_iter().filter(|&a| self.root(phi).leq(self.root(a))).collect();
        c.sort_by_key(|&a| std::cmp::Reverse(self.root(a).height()));
        for w in c.windows(2) {
            if !self.root(w[1]).leq(self.root(w[0])) {
                return Err(Error::Invariant(format!(
                    "chain cascade above {} is not totally ordered: {} vs {}",
                    self.root(phi),
                    self.root(w[0]),
                    self.root(w[1])
                )));
            }
        }
        Ok(c)
    }

    /// C_R(φ) in descending order.
    pub fn chain_cascade(&self, phi: usize) -> Result<Vec<usize>> {
        self.chain_cascade_in(self.full_mask(), phi)
    }

    /// α is the highest root of R(α).
    pub fn is_locally_high(&self, idx: usize) -> bool {
        self.highest_root_of(self.root(idx).support_mask()) == Some(idx)
    }

    /// α ± α' ∉ R ∪ {0}.
    pub fn is_strongly_orthogonal(&self, a: usize, b: usize) -> bool {
        let (x, y) = (self.root(a).coeffs(), self.root(b).coeffs());
        let sum: Vec<i32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
        let diff: Vec<i32> = x.iter().zip(y).map(|(p, q)| p - q).collect();
        a != b && !self.is_root(&sum) && !self.is_root(&diff)
    }

    /// (α, α') = 0 and α + α' ∉ R.
    pub fn is_strongly_orthogonal_by_sum(&self, a: usize, b: usize) -> bool {
        let (x, y) = (self.root(a).coeffs(), self.root(b).coeffs());
        let sum: Vec<i32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
        self.inner(x, y) == 0 && !self.is_root(&sum)
    }

    /// Product of the reflections over 𝓑_{R(φ)}.
    pub fn w_o_of(&self, phi: usize) -> WeylElement {
        self.cascade_of(self.root(phi).support_mask())
            .roots
            .iter()
            .fold(self.identity(), |w, &a| w.mul(&self.reflection_of(a)))
    }

    /// d_{G/B} of the subsystem on `mask`: Σ α∨ over its cascade.
    pub fn d_gb_of(&self, mask: u32) -> CorootVector {
        self.cascade_of(mask).roots.iter().fold(CorootVector::zero(self.rank()), |acc, &a| acc.add(self.coroot_of(a)))
    }

    pub fn d_gb(&self) -> CorootVector {
        self.d_gb_of(self.full_mask())
    }

    /// d_{G/P_β} = Σ_{α ∈ C(β)} (ω_β, α∨) inside the subsystem on `mask`.
    pub fn d_gpbeta_in(&self, mask: u32, beta: usize) -> Result<i32> {
        let c = self.chain_cascade_in(mask, self.simple_root_index(beta))?;
        Ok(c.iter().map(|&a| self.pair_weight(beta, self.coroot_of(a))).sum())
    }

    pub fn d_gpbeta(&self, beta: usize) -> Result<i32> {
        self.d_gpbeta_in(self.full_mask(), beta)
    }

    /// d_X by restricting Σ_{α∈𝓑} α∨ to P.
    pub fn d_x_by_cascade(&self, p: &Parabolic) -> Degree {
        Degree::from_coroot(p, &self.d_gb())
    }

    /// d_X as Σ_{β ∉ Δ_P} d_{G/P_β} d(β).
    pub fn d_x_by_maximal(&self, p: &Parabolic) -> Result<Degree> {
        let mut d = Degree::zero(p);
        for b in p.complement() {
            let k = self.d_gpbeta(b)?;
            for _ in 0..k {
                d = d.add(&self.d_of_simple(b, p));
            }
        }
        Ok(d)
    }

    /// d_X, with both formulas evaluated and compared.
    pub fn d_x(&self, p: &Parabolic) -> Result<Degree> {
        let a = self.d_x_by_cascade(p);
        let b = self.d_x_by_maximal(p)?;
        if a != b {
            return Err(Error::Invariant(format!(
                "d_X formulas disagree on {:?}: cascade {a}, maximal {b}",
                p.one_based()
            )));
        }
        Ok(a)
    }

    /// Whether Δ(φ) \ {β} is connected (possibly empty).
    pub fn is_boundary(&self, mask: u32, beta: usize) -> bool {
        mask & (1 << beta) != 0 && self.is_connected(mask & !(1 << beta))
    }

    /// Type of the irreducible subsystem R(φ).
    pub fn type_of_root_subsystem(&self, phi: usize) -> TypeLetter {
        self.subsystem(self.root(phi).support_mask())[0].system.letter()
    }

    /// α_{β,φ}: for R(φ) of type A_n and β a boundary of Δ(φ), the root
    /// supported on the ⌈n/2⌉ consecutive simple roots starting at β.
    pub fn alpha_beta_phi(&self, phi: usize, beta: usize) -> Result<usize> {
        let mask = self.root(phi).support_mask();
        if self.type_of_root_subsystem(phi) != TypeLetter::A {
            return Err(Error::Domain(format!("R({}) is not of type A", self.root(phi))));
        }
        if !self.is_boundary(mask, beta) {
            return Err(Error::Domain(format!("α{} is not a boundary root of Δ({})", beta + 1, self.root(phi))));
        }
        let n = mask.count_ones() as usize;
        // walk the path from β
        let mut path = vec![beta];
        while path.len() < n.div_ceil(2) {
            let last = *path.last().unwrap();
            let next = mask_indices(mask).find(|&j| !path.contains(&j) && self.adjacent(last, j)).unwrap();
            path.push(next);
        }
        let mut c = vec![0; self.rank()];
        for &j in &path {
            c[j] = 1;
        }
        self.index_of_coeffs(&c).ok_or_else(|| Error::Invariant(format!("{c:?} should be a root of {}", self.name())))
    }
}
