//! Exceptional roots and the inequalities the main induction needs for them.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsystem::{mask_indices, CorootVector, RootSystem, TypeLetter};
use crate::weyl::Parabolic;

/// One exceptional root with the data of the two technical lemmas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalReport {
    pub root: usize,
    /// The β ∈ Δ \ Δ° witnessing exceptionality.
    pub witness_beta: usize,
    /// Locally high root of the component of {γ : (α, γ) = 0} containing β.
    pub phi: usize,
    /// α_{β,φ}, when R(φ) is of type A with β a boundary root.
    pub alpha_beta_phi: Option<usize>,
    /// α∨ + α_{β,φ}∨ ≤ θ₁∨.
    pub ineq1_holds: bool,
    pub ineq1_strict: bool,
    /// α∨ + Σ d_{G(φ_i)/B(φ_i)} ≤ d_{G/B}.
    pub ineq3_holds: bool,
    pub ineq3_strict: bool,
    pub b_cosmall: bool,
    pub strongly_orthogonal: bool,
}

impl ExceptionalReport {
    pub fn to_json(&self, rs: &RootSystem) -> Value {
        json!({
            "root": rs.root(self.root).coeffs(),
            "witness_beta": self.witness_beta + 1,
            "phi": rs.root(self.phi).coeffs(),
            "alpha_beta_phi": self.alpha_beta_phi.map(|a| rs.root(a).coeffs().to_vec()),
            "ineq1_holds": self.ineq1_holds,
            "ineq1_strict": self.ineq1_strict,
            "ineq3_holds": self.ineq3_holds,
            "ineq3_strict": self.ineq3_strict,
            "b_cosmall": self.b_cosmall,
            "strongly_orthogonal": self.strongly_orthogonal,
        })
    }
}

/// Sub-checks of the first technical lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TechnicalReport {
    pub root: usize,
    pub beta: usize,
    pub phi: usize,
    pub type_a: bool,
    pub boundary: bool,
    pub alpha_beta_phi: Option<usize>,
    /// α∨ + α_{β,φ}∨ ≤ θ₁∨ and its strictness.
    pub inequality: bool,
    pub strict: bool,
    /// α∨ + β∨ ≤ θ₁∨.
    pub weak_inequality: bool,
    /// α∨ + φ∨ < θ₁∨.
    pub phi_strict: bool,
    /// (α_{β,φ} = β) ⟺ |Δ(φ)| ≤ 2.
    pub equality_criterion: bool,
}

impl TechnicalReport {
    pub fn passed(&self) -> bool {
        self.type_a
            && self.boundary
            && self.inequality
            && self.strict
            && self.weak_inequality
            && self.phi_strict
            && self.equality_criterion
    }
}

/// Sub-checks of the second technical lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Technical2Report {
    pub root: usize,
    /// Locally high roots of the components of {γ : (α, γ) = 0}.
    pub components: Vec<usize>,
    pub lhs: CorootVector,
    pub rhs: CorootVector,
    pub holds: bool,
    pub strict: bool,
}

fn orthogonal_mask(rs: &RootSystem, a: usize) -> u32 {
    (0..rs.rank())
        .filter(|&g| rs.inner(rs.root(a).coeffs(), rs.simple_root(g).coeffs()) == 0)
        .fold(0, |m, g| m | (1 << g))
}

/// β ∈ Δ \ Δ° with (α, β) = 0 satisfying `cond`, lowest index first.
fn witness(rs: &RootSystem, a: usize, cond: impl Fn(usize) -> bool) -> Option<usize> {
    if rs.root(a).support_mask() != rs.full_mask() {
        return None;
    }
    let outer = rs.full_mask() & !rs.delta_circ();
    mask_indices(outer).find(|&b| rs.inner(rs.root(a).coeffs(), rs.simple_root(b).coeffs()) == 0 && cond(b))
}

fn maximal_for_sum(rs: &RootSystem, a: usize, b: usize) -> bool {
    let borel = Parabolic::borel(rs.rank());
    let e = rs.d_of_root(a, &borel).add(&rs.d_of_simple(b, &borel));
    rs.maximal_roots(&e).contains(&a)
}

fn b_cosmall(rs: &RootSystem, a: usize) -> bool {
    rs.is_cosmall(a, &Parabolic::borel(rs.rank())).expect("positive roots lie outside the Borel Levi")
}

pub fn is_exceptional(rs: &RootSystem, a: usize) -> bool {
    witness(rs, a, |b| maximal_for_sum(rs, a, b)).is_some()
}

/// Full-support roots orthogonal to some β ∈ Δ \ Δ° and B-cosmall: the
/// alternate definition, evaluated for comparison only.
pub fn exceptional_roots_by_cosmall(rs: &RootSystem) -> Vec<usize> {
    (0..rs.num_positive()).filter(|&a| witness(rs, a, |_| b_cosmall(rs, a)).is_some()).collect()
}

fn component_containing(rs: &RootSystem, mask: u32, b: usize) -> u32 {
    rs.components(mask).into_iter().find(|c| c & (1 << b) != 0).expect("β lies in the mask")
}

/// All exceptional roots, ordered by positive root index.
pub fn exceptional_roots(rs: &RootSystem) -> Vec<ExceptionalReport> {
    (0..rs.num_positive())
        .filter_map(|a| {
            let b = witness(rs, a, |b| maximal_for_sum(rs, a, b))?;
            let comp = component_containing(rs, orthogonal_mask(rs, a), b);
            let phi = rs.highest_root_of(comp).expect("nonempty component");
            let t1 = verify_lemma_technical(rs, a);
            let t2 = verify_lemma_technical2(rs, a);
            let (ineq1_holds, ineq1_strict, abp) = match &t1 {
                Ok(r) => (r.inequality, r.strict, r.alpha_beta_phi),
                Err(_) => (false, false, None),
            };
            let (ineq3_holds, ineq3_strict) = match &t2 {
                Ok(r) => (r.holds, r.strict),
                Err(_) => (false, false),
            };
            Some(ExceptionalReport {
                root: a,
                witness_beta: b,
                phi,
                alpha_beta_phi: abp,
                ineq1_holds,
                ineq1_strict,
                ineq3_holds,
                ineq3_strict,
                b_cosmall: b_cosmall(rs, a),
                strongly_orthogonal: rs.is_strongly_orthogonal(a, rs.simple_root_index(b)),
            })
        })
        .collect()
}

fn not_exceptional(rs: &RootSystem, a: usize) -> Error {
    Error::Domain(format!("{} is not an exceptional root of {}", rs.root(a), rs.name()))
}

/// Evaluates every sub-check of the first technical lemma; fails with a
/// verification error naming the first one that does not hold.
pub fn verify_lemma_technical(rs: &RootSystem, a: usize) -> Result<TechnicalReport> {
    if !is_exceptional(rs, a) {
        return Err(not_exceptional(rs, a));
    }
    let outer = rs.full_mask() & !rs.delta_circ();
    if outer.count_ones() != 1 {
        return Err(Error::Verification(format!("Δ \\ Δ° of {} is not a single root", rs.name())));
    }
    let b = outer.trailing_zeros() as usize;
    let comp = component_containing(rs, orthogonal_mask(rs, a), b);
    let phi = rs.highest_root_of(comp).expect("nonempty component");
    let type_a = rs.type_of_root_subsystem(phi) == TypeLetter::A;
    let boundary = rs.is_boundary(comp, b);
    let theta = rs.coroot_of(rs.highest_root_index());
    let av = rs.coroot_of(a);
    let abp = rs.alpha_beta_phi(phi, b).ok();
    let (inequality, strict, equality_criterion) = match abp {
        Some(x) => {
            let s = av.add(rs.coroot_of(x));
            let small = comp.count_ones() <= 2;
            (s.leq(theta), s.lt(theta), (x == rs.simple_root_index(b)) == small)
        }
        None => (false, false, false),
    };
    let weak_inequality = av.add(rs.coroot_of(rs.simple_root_index(b))).leq(theta);
    let phi_strict = av.add(rs.coroot_of(phi)).lt(theta);
    let report = TechnicalReport {
        root: a,
        beta: b,
        phi,
        type_a,
        boundary,
        alpha_beta_phi: abp,
        inequality,
        strict,
        weak_inequality,
        phi_strict,
        equality_criterion,
    };
    if !report.passed() {
        return Err(Error::Verification(format!("technical lemma fails for {}: {report:?}", rs.root(a))));
    }
    Ok(report)
}

/// α∨ + Σ_i d_{G(φ_i)/B(φ_i)} ≤ d_{G/B} over the components of
/// {γ ∈ Δ : (α, γ) = 0}.
pub fn verify_lemma_technical2(rs: &RootSystem, a: usize) -> Result<Technical2Report> {
    if !is_exceptional(rs, a) {
        return Err(not_exceptional(rs, a));
    }
    let comps = rs.components(orthogonal_mask(rs, a));
    let lhs = comps.iter().fold(rs.coroot_of(a).clone(), |acc, &c| acc.add(&rs.d_gb_of(c)));
    let rhs = rs.d_gb();
    let report = Technical2Report {
        root: a,
        components: comps.iter().map(|&c| rs.highest_root_of(c).expect("nonempty component")).collect(),
        holds: lhs.leq(&rhs),
        strict: lhs.lt(&rhs),
        lhs,
        rhs,
    };
    if !report.holds {
        return Err(Error::Verification(format!(
            "second technical lemma fails for {}: {:?} vs {:?}",
            rs.root(a),
            report.lhs.coeffs(),
            report.rhs.coeffs()
        )));
    }
    Ok(report)
}
