//! The distance function δ_P, computed two independent ways: as the minimal
//! degrees d with wW_P ⪯ z_d^P W_P (an up-set scan over a degree box), and as
//! minimal total degrees of chains of adjacent cosets (a Pareto search).

mod chains;
mod exceptional;
mod suites;

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::degree::{degrees_in_box, Degree};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::rootsystem::RootSystem;
use crate::weyl::{CosetTable, Parabolic, WeylElement, DEFAULT_ENUMERATION_CAP};

pub use chains::{ChainSearch, ChainWitness};
pub use exceptional::{
    exceptional_roots, exceptional_roots_by_cosmall, is_exceptional, verify_lemma_technical, verify_lemma_technical2,
    ExceptionalReport, Technical2Report, TechnicalReport,
};
pub use suites::{verify_suite, ClaimResult, SuiteReport, PAIR_LIMIT, SUITES};

/// Which algorithm produced a front.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    UpSetScan,
    ChainSearch,
}

/// An antichain of degrees: δ_P(w) or δ_P(u, v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFront {
    /// Sorted, pairwise incomparable.
    pub degrees: Vec<Degree>,
    pub provenance: Provenance,
    /// Set when the chain search pruned labels at the degree cap that no
    /// front element dominates, so the front is not certified exact.
    pub capped: bool,
}

impl DegreeFront {
    pub fn contains(&self, d: &Degree) -> bool {
        self.degrees.contains(d)
    }

    pub fn is_singleton(&self) -> bool {
        self.degrees.len() == 1
    }

    /// Some element of the front is ≤ d.
    pub fn bounds(&self, d: &Degree) -> bool {
        self.degrees.iter().any(|f| f.leq(d))
    }

    pub fn is_antichain(&self) -> bool {
        self.degrees.iter().all(|a| !self.degrees.iter().any(|b| b.lt(a)))
    }

    pub fn to_json(&self) -> Value {
        let prov = match self.provenance {
            Provenance::UpSetScan => "up-set scan",
            Provenance::ChainSearch => "chain search",
        };
        json!({
            "degrees": self.degrees.iter().map(Degree::to_json).collect::<Vec<_>>(),
            "provenance": prov,
            "capped": self.capped,
        })
    }
}

/// Tuning for [`Distance`].
#[derive(Clone, Debug)]
pub struct Options {
    /// The scan box is d_X plus this much in every coordinate.
    pub margin: i32,
    /// Explicit scan box (outside coordinates), replacing d_X + margin.
    pub scan_box: Option<Vec<i32>>,
    pub coset_cap: usize,
    /// Verification suites check full (u, v) pairs only up to this many cosets.
    pub pair_limit: usize,
    pub exec: Execution,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            margin: 2,
            scan_box: None,
            coset_cap: DEFAULT_ENUMERATION_CAP,
            pair_limit: suites::PAIR_LIMIT,
            exec: Execution::default(),
        }
    }
}

/// Shared data for distance computations on one G/P: the coset table, d_X,
/// the scan box and z_d^P for every degree in the box enlarged by one.
#[derive(Debug)]
pub struct Distance {
    rs: RootSystem,
    p: Parabolic,
    table: CosetTable,
    d_x: Degree,
    cap: Degree,
    outer: Degree,
    outer_degrees: Vec<Degree>,
    strides: Vec<usize>,
    z_ids: Vec<u32>,
    edge_deg: Vec<Degree>,
    dual: Vec<usize>,
    fronts: Vec<OnceLock<Result<Vec<Degree>>>>,
    exec: Execution,
}

impl Distance {
    pub fn new(rs: &RootSystem, p: &Parabolic, opts: &Options) -> Result<Distance> {
        let table = CosetTable::new(rs, p, opts.coset_cap)?;
        let d_x = rs.d_x(p)?;
        let cap = match &opts.scan_box {
            Some(v) => Degree::from_outside(p, v)?,
            None => d_x.shift(opts.margin.max(0)),
        };
        let outer = cap.shift(1);
        let comp = p.complement();
        let mut strides = vec![0; rs.rank()];
        let mut s = 1;
        for &i in comp.iter().rev() {
            strides[i] = s;
            s *= outer.get(i) as usize + 1;
        }
        let outer_degrees = degrees_in_box(&outer);
        let z_ids: Vec<u32> = opts.exec.map(&outer_degrees, |d| {
            table.id_of_min(&rs.z(d).z_min).expect("z_d^P is a minimal representative") as u32
        });
        let edge_deg = table.edge_roots().iter().map(|&a| rs.d_of_root(a, p)).collect();
        let w_o = rs.w_o();
        let dual = table.reps().iter().map(|w| table.id_of(rs, &w_o.mul(w))).collect();
        let fronts = (0..table.len()).map(|_| OnceLock::new()).collect();
        let dist = Distance {
            rs: rs.clone(),
            p: *p,
            table,
            d_x,
            cap,
            outer,
            outer_degrees,
            strides,
            z_ids,
            edge_deg,
            dual,
            fronts,
            exec: opts.exec,
        };
        dist.check_monotone()?;
        Ok(dist)
    }

    /// z_d ⪯ z_{d+d(β)} across the box; the up-set scan relies on it.
    fn check_monotone(&self) -> Result<()> {
        for d in &self.outer_degrees {
            let z = self.z_ids[self.index(d)] as usize;
            for b in self.p.complement() {
                let e = d.add(&Degree::unit(&self.p, b));
                if e.leq(&self.outer) && !self.table.leq(&self.rs, z, self.z_ids[self.index(&e)] as usize) {
                    return Err(Error::Verification(format!("z_d^P is not monotone between {d} and {e}")));
                }
            }
        }
        Ok(())
    }

    fn index(&self, d: &Degree) -> usize {
        d.coeffs().iter().zip(&self.strides).map(|(&c, &s)| c as usize * s).sum()
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.p
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn d_x(&self) -> &Degree {
        &self.d_x
    }

    /// The scan box corner.
    pub fn scan_box(&self) -> &Degree {
        &self.cap
    }

    pub fn exec(&self) -> Execution {
        self.exec
    }

    /// Degrees 0 ≤ d ≤ scan box.
    pub fn box_degrees(&self) -> Vec<Degree> {
        self.outer_degrees.iter().filter(|d| d.leq(&self.cap)).cloned().collect()
    }

    pub fn coset_of(&self, w: &WeylElement) -> usize {
        self.table.id_of(&self.rs, w)
    }

    /// Coset of w_o · rep(c).
    pub fn dual_of(&self, c: usize) -> usize {
        self.dual[c]
    }

    pub fn w_o_coset(&self) -> usize {
        self.table.len() - 1
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.table.leq(&self.rs, a, b)
    }

    /// d(α) for each edge root, parallel to `table().edge_roots()`.
    pub fn edge_degrees(&self) -> &[Degree] {
        &self.edge_deg
    }

    /// Coset of z_d^P; computed directly outside the stored box.
    pub fn z_coset(&self, d: &Degree) -> usize {
        debug_assert_eq!(d.parabolic(), &self.p, "degree for another parabolic");
        if d.leq(&self.outer) {
            self.z_ids[self.index(d)] as usize
        } else {
            self.table.id_of_min(&self.rs.z(d).z_min).expect("z_d^P is a minimal representative")
        }
    }

    /// wW_P ⪯ z_d^P W_P.
    pub fn reaches(&self, c: usize, d: &Degree) -> bool {
        self.leq(c, self.z_coset(d))
    }

    fn front_within(&self, c: usize, lim: &Degree) -> Vec<Degree> {
        let comp = self.p.complement();
        let mut out = Vec::new();
        for d in self.outer_degrees.iter().filter(|d| d.leq(lim)) {
            if !self.reaches(c, d) {
                continue;
            }
            let minimal = comp
                .iter()
                .all(|&b| d.get(b) == 0 || !self.reaches(c, &d.checked_sub(&Degree::unit(&self.p, b)).unwrap()));
            if minimal {
                out.push(d.clone());
            }
        }
        out.sort();
        out
    }

    fn compute_front(&self, c: usize) -> Result<Vec<Degree>> {
        let inner = self.front_within(c, &self.cap);
        let wider = self.front_within(c, &self.outer);
        if inner != wider {
            let extra = wider.iter().find(|d| !inner.contains(d)).or(inner.first()).cloned();
            return Err(Error::Verification(format!(
                "δ_P front of {:?} is unstable at the scan box {}: degree {} appears at box + 1",
                self.rs.reduced_word(self.table.rep(c)),
                self.cap,
                extra.map_or("none".into(), |d| d.to_string())
            )));
        }
        if inner.is_empty() {
            return Err(Error::Verification(format!(
                "δ_P front of {:?} is empty inside the scan box {}",
                self.rs.reduced_word(self.table.rep(c)),
                self.cap
            )));
        }
        Ok(inner)
    }

    /// δ_P(w) for the coset with id `c`, by the up-set scan.
    pub fn delta_coset(&self, c: usize) -> Result<DegreeFront> {
        let degrees = self.fronts[c].get_or_init(|| self.compute_front(c)).clone()?;
        Ok(DegreeFront { degrees, provenance: Provenance::UpSetScan, capped: false })
    }

    /// δ_P(w) by the up-set scan.
    pub fn delta_w(&self, w: &WeylElement) -> Result<DegreeFront> {
        self.delta_coset(self.coset_of(w))
    }

    /// d ∈ δ_P(z_d^P).
    pub fn in_own_front(&self, d: &Degree) -> Result<bool> {
        Ok(self.delta_coset(self.z_coset(d))?.contains(d))
    }

    /// δ_P(u, v) by the chain search.
    pub fn delta_uv(&self, u: &WeylElement, v: &WeylElement) -> DegreeFront {
        ChainSearch::from_up_set(self, self.coset_of(u)).front(self.coset_of(v))
    }
}

impl RootSystem {
    /// δ_P(w) with default options.
    pub fn delta_w(&self, w: &WeylElement, p: &Parabolic) -> Result<DegreeFront> {
        Distance::new(self, p, &Options::default())?.delta_w(w)
    }

    /// δ_P(u, v) with default options.
    pub fn delta_uv(&self, u: &WeylElement, v: &WeylElement, p: &Parabolic) -> Result<DegreeFront> {
        Ok(Distance::new(self, p, &Options::default())?.delta_uv(u, v))
    }
}
