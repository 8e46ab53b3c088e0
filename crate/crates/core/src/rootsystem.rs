//! Irreducible root systems of types A through G.
//!
//! Simple roots follow Bourbaki's numbering. Indices are 0-based internally;
//! everything user facing (CLI, JSON) is 1-based.
//!
//! The invariant form is normalized so that short roots have squared length 2.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Largest rank accepted. Subsets of simple roots are stored as `u32` masks.
pub const MAX_RANK: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Self::A),
            "B" => Ok(Self::B),
            "C" => Ok(Self::C),
            "D" => Ok(Self::D),
            "E" => Ok(Self::E),
            "F" => Ok(Self::F),
            "G" => Ok(Self::G),
            other => Err(Error::Config(format!("unknown type letter {other:?}"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Number of positive roots of the irreducible system of the given type.
pub fn classical_positive_count(letter: TypeLetter, rank: usize) -> usize {
    match letter {
        TypeLetter::A => rank * (rank + 1) / 2,
        TypeLetter::B | TypeLetter::C => rank * rank,
        TypeLetter::D => rank * (rank - 1),
        TypeLetter::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        TypeLetter::F => 24,
        TypeLetter::G => 6,
    }
}

fn check_admissible(letter: TypeLetter, rank: usize) -> Result<()> {
    let ok = match letter {
        TypeLetter::A => rank >= 1,
        TypeLetter::B | TypeLetter::C => rank >= 2,
        TypeLetter::D => rank >= 3,
        TypeLetter::E => (6..=8).contains(&rank),
        TypeLetter::F => rank == 4,
        TypeLetter::G => rank == 2,
    };
    if !ok {
        return Err(Error::Config(format!("{letter}{rank} is not an admissible type")));
    }
    if rank > MAX_RANK {
        return Err(Error::Config(format!("rank {rank} exceeds the supported maximum {MAX_RANK}")));
    }
    Ok(())
}

/// A root as its coefficient vector in the simple root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Coefficientwise order.
    pub fn leq(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support_mask(&self) -> u32 {
        mask_from_coeffs(&self.0)
    }

    /// Compact digit string, e.g. `1222` for F4. Only meaningful while all
    /// coefficients are single digits.
    pub fn digits(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An element of the coroot lattice in the simple coroot basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CorootVector {
    pub coroot: Vec<i32>,
}

impl CorootVector {
    pub fn new(coeffs: Vec<i32>) -> Self {
        CorootVector { coroot: coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        CorootVector { coroot: vec![0; rank] }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coroot
    }

    pub fn add(&self, other: &CorootVector) -> CorootVector {
        CorootVector::new(self.coroot.iter().zip(&other.coroot).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &CorootVector) -> CorootVector {
        CorootVector::new(self.coroot.iter().zip(&other.coroot).map(|(a, b)| a - b).collect())
    }

    pub fn leq(&self, other: &CorootVector) -> bool {
        self.coroot.iter().zip(&other.coroot).all(|(a, b)| a <= b)
    }

    /// Strictly smaller: `<=` and not equal.
    pub fn lt(&self, other: &CorootVector) -> bool {
        self.leq(other) && self != other
    }

    pub fn support_mask(&self) -> u32 {
        mask_from_coeffs(&self.coroot)
    }
}

fn mask_from_coeffs(c: &[i32]) -> u32 {
    c.iter().enumerate().filter(|(_, &x)| x != 0).fold(0u32, |m, (i, _)| m | (1 << i))
}

/// Iterate the set bits of a mask in increasing order.
pub fn mask_indices(mask: u32) -> impl Iterator<Item = usize> {
    (0..32usize).filter(move |i| mask & (1 << i) != 0)
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    letter: TypeLetter,
    rank: usize,
    /// Squared lengths (α_i, α_i).
    lengths: Vec<i32>,
    /// Gram matrix (α_i, α_j), row major.
    form: Vec<i32>,
    /// cartan[i*rank + j] = <α_j, α_i^∨>, so that diag(lengths/2)·C = form.
    cartan: Vec<i32>,
    positive: Vec<Root>,
    coroots: Vec<CorootVector>,
    root_lengths: Vec<i32>,
    index: HashMap<Vec<i32>, usize>,
    simple_idx: Vec<usize>,
    highest: usize,
    highest_short: Option<usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.letter == other.letter && self.rank == other.rank && self.form == other.form
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Build the irreducible system of the given type in Bourbaki numbering.
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        check_admissible(letter, rank)?;
        let n = rank;
        let mut lengths = vec![2; n];
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match letter {
            TypeLetter::A => edges.extend((0..n - 1).map(|i| (i, i + 1))),
            TypeLetter::B => {
                lengths = vec![4; n];
                lengths[n - 1] = 2;
                edges.extend((0..n - 1).map(|i| (i, i + 1)));
            }
            TypeLetter::C => {
                lengths[n - 1] = 4;
                edges.extend((0..n - 1).map(|i| (i, i + 1)));
            }
            TypeLetter::D => {
                edges.extend((0..n - 2).map(|i| (i, i + 1)));
                edges.push((n - 3, n - 1));
            }
            TypeLetter::E => {
                edges.push((0, 2));
                edges.push((1, 3));
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
            }
            TypeLetter::F => {
                lengths = vec![4, 4, 2, 2];
                edges.extend([(0, 1), (1, 2), (2, 3)]);
            }
            TypeLetter::G => {
                lengths = vec![2, 6];
                edges.push((0, 1));
            }
        }
        let mut form = vec![0i32; n * n];
        for i in 0..n {
            form[i * n + i] = lengths[i];
        }
        for &(i, j) in &edges {
            let v = -lengths[i].max(lengths[j]) / 2;
            form[i * n + j] = v;
            form[j * n + i] = v;
        }
        let rs = Self::from_form(letter, form);
        if rs.positive.len() != classical_positive_count(letter, rank) {
            return Err(Error::Invariant(format!(
                "{letter}{rank}: generated {} positive roots, expected {}",
                rs.positive.len(),
                classical_positive_count(letter, rank)
            )));
        }
        Ok(rs)
    }

    /// Build a system from an already-normalized Gram matrix of a connected
    /// Dynkin diagram. Used for components of subsystems.
    pub(crate) fn from_form(letter: TypeLetter, form: Vec<i32>) -> Self {
        let n = (form.len() as f64).sqrt().round() as usize;
        let lengths: Vec<i32> = (0..n).map(|i| form[i * n + i]).collect();
        let mut cartan = vec![0i32; n * n];
        for i in 0..n {
            for j in 0..n {
                cartan[i * n + j] = 2 * form[i * n + j] / lengths[i];
            }
        }
        // closure under simple reflections, starting from the simple roots
        let mut roots: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: HashMap<Vec<i32>, ()> = roots.iter().map(|r| (r.clone(), ())).collect();
        let mut k = 0;
        while k < roots.len() {
            let a = roots[k].clone();
            for i in 0..n {
                let is_simple_i = a.iter().enumerate().all(|(j, &x)| x == if j == i { 1 } else { 0 });
                if is_simple_i {
                    continue;
                }
                let c: i32 = (0..n).map(|j| a[j] * cartan[i * n + j]).sum();
                if c < 0 {
                    let mut b = a.clone();
                    b[i] -= c;
                    if !seen.contains_key(&b) {
                        seen.insert(b.clone(), ());
                        roots.push(b);
                    }
                }
            }
            k += 1;
        }
        roots.sort_by(|x, y| {
            let hx: i32 = x.iter().sum();
            let hy: i32 = y.iter().sum();
            hx.cmp(&hy).then_with(|| x.cmp(y))
        });
        let positive: Vec<Root> = roots.into_iter().map(Root).collect();
        let index: HashMap<Vec<i32>, usize> = positive.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
        let simple_idx: Vec<usize> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                index[&v]
            })
            .collect();
        let sq = |a: &[i32]| -> i32 {
            let mut s = 0;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] * a[j] * form[i * n + j];
                }
            }
            s
        };
        let root_lengths: Vec<i32> = positive.iter().map(|r| sq(&r.0)).collect();
        let coroots: Vec<CorootVector> = positive
            .iter()
            .zip(&root_lengths)
            .map(|(r, &l)| CorootVector::new((0..n).map(|i| r.0[i] * lengths[i] / l).collect()))
            .collect();
        let maximal = |cands: &[usize]| -> Vec<usize> {
            cands.iter().copied().filter(|&a| !cands.iter().any(|&b| b != a && positive[a].leq(&positive[b]))).collect()
        };
        let all: Vec<usize> = (0..positive.len()).collect();
        let tops = maximal(&all);
        assert_eq!(tops.len(), 1, "irreducible system must have a unique highest root");
        let highest = tops[0];
        let min_len = *root_lengths.iter().min().unwrap();
        let max_len = *root_lengths.iter().max().unwrap();
        let highest_short = if min_len == max_len {
            None
        } else {
            let shorts: Vec<usize> = all.iter().copied().filter(|&i| root_lengths[i] == min_len).collect();
            let t = maximal(&shorts);
            assert_eq!(t.len(), 1);
            Some(t[0])
        };
        RootSystem {
            letter,
            rank: n,
            lengths,
            form,
            cartan,
            positive,
            coroots,
            root_lengths,
            index,
            simple_idx,
            highest,
            highest_short,
        }
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    /// `<α_j, α_i^∨>`.
    #[inline]
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i * self.rank + j]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        (0..self.rank).map(|i| (0..self.rank).map(|j| self.cartan(i, j)).collect()).collect()
    }

    /// d_i = (α_i, α_i)/2.
    pub fn symmetrizer(&self) -> Vec<i32> {
        self.lengths.iter().map(|l| l / 2).collect()
    }

    /// (α_i, α_j).
    #[inline]
    pub fn form(&self, i: usize, j: usize) -> i32 {
        self.form[i * self.rank + j]
    }

    pub fn full_mask(&self) -> u32 {
        if self.rank == 32 {
            u32::MAX
        } else {
            (1u32 << self.rank) - 1
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.positive[idx]
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    pub fn index_of_coeffs(&self, c: &[i32]) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.positive[self.simple_idx[i]]
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_idx[i]
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[self.highest]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest
    }

    pub fn highest_short_root(&self) -> Option<&Root> {
        self.highest_short.map(|i| &self.positive[i])
    }

    pub fn highest_short_root_index(&self) -> Option<usize> {
        self.highest_short
    }

    pub fn is_simply_laced(&self) -> bool {
        self.highest_short.is_none()
    }

    /// (α, α) of the positive root with this index.
    pub fn root_length(&self, idx: usize) -> i32 {
        self.root_lengths[idx]
    }

    pub fn is_long(&self, idx: usize) -> bool {
        self.root_lengths[idx] == *self.root_lengths.iter().max().unwrap()
    }

    /// Whether the vector is a root (positive or negative).
    pub fn is_root(&self, c: &[i32]) -> bool {
        if self.index.contains_key(c) {
            return true;
        }
        let neg: Vec<i32> = c.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn coroot(&self, r: &Root) -> Result<CorootVector> {
        if r.0.len() != self.rank {
            return domain(format!("{r} has the wrong rank for {}", self.name()));
        }
        if let Some(i) = self.root_index(r) {
            return Ok(self.coroots[i].clone());
        }
        let neg = Root(r.0.iter().map(|x| -x).collect());
        match self.root_index(&neg) {
            Some(i) => Ok(CorootVector::new(self.coroots[i].coroot.iter().map(|x| -x).collect())),
            None => domain(format!("{r} is not a root of {}", self.name())),
        }
    }

    pub fn coroot_of(&self, idx: usize) -> &CorootVector {
        &self.coroots[idx]
    }

    /// Index of the positive root whose coroot is `c`, if any.
    pub fn root_of_coroot(&self, c: &CorootVector) -> Option<usize> {
        self.coroots.iter().position(|x| x == c)
    }

    /// (x, y) for vectors in root coordinates.
    pub fn inner(&self, x: &[i32], y: &[i32]) -> i32 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x[i] * y[j] * self.form[i * n + j];
            }
        }
        s
    }

    /// (x, c) for x in root coordinates and c in coroot coordinates.
    pub fn pair(&self, x: &[i32], c: &CorootVector) -> i32 {
        let n = self.rank;
        let mut s = 0;
        for k in 0..n {
            if c.coroot[k] == 0 {
                continue;
            }
            for i in 0..n {
                s += x[i] * c.coroot[k] * self.cartan[k * n + i];
            }
        }
        s
    }

    /// (x, α_k^∨).
    #[inline]
    pub fn pair_simple(&self, x: &[i32], k: usize) -> i32 {
        let n = self.rank;
        (0..n).map(|i| x[i] * self.cartan[k * n + i]).sum()
    }

    /// (ω_β, c): the β∨ coefficient of c.
    pub fn pair_weight(&self, beta: usize, c: &CorootVector) -> i32 {
        c.coroot[beta]
    }

    /// Support of a root as sorted 0-based indices.
    pub fn support(&self, r: &Root) -> Vec<usize> {
        mask_indices(r.support_mask()).collect()
    }

    pub fn root_leq(&self, a: &Root, b: &Root) -> bool {
        a.leq(b)
    }

    /// s_α(x) = x - <x, α^∨> α for the positive root with index `idx`.
    pub fn reflect(&self, x: &[i32], idx: usize) -> Vec<i32> {
        let c = self.pair(x, &self.coroots[idx]);
        let a = &self.positive[idx].0;
        x.iter().zip(a).map(|(xi, ai)| xi - c * ai).collect()
    }

    /// Whether two simple roots are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.form(i, j) != 0
    }

    /// Connected components of a subset of Δ, each as a mask, ordered by lowest index.
    pub fn components(&self, mask: u32) -> Vec<u32> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in mask_indices(left) {
                    if comp & (1 << j) == 0 && self.adjacent(i, j) {
                        comp |= 1 << j;
                        stack.push(j);
                    }
                }
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, mask: u32) -> bool {
        self.components(mask).len() <= 1
    }

    /// Indices of positive roots whose support lies inside `mask`.
    pub fn roots_in(&self, mask: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.positive.len()).filter(move |&i| self.positive[i].support_mask() & !mask == 0)
    }

    /// Highest root of the subsystem generated by a connected subset.
    pub fn highest_root_of(&self, mask: u32) -> Option<usize> {
        if mask == 0 {
            return None;
        }
        // the highest root of a connected subset has full support on it and
        // dominates every root inside
        let inside: Vec<usize> = self.roots_in(mask).collect();
        inside.iter().copied().find(|&a| inside.iter().all(|&b| self.positive[b].leq(&self.positive[a])))
    }

    /// Components of the subsystem generated by `mask`, with embeddings.
    pub fn subsystem(&self, mask: u32) -> Vec<Subsystem> {
        self.components(mask)
            .into_iter()
            .map(|comp| {
                let simple: Vec<usize> = mask_indices(comp).collect();
                let m = simple.len();
                let mut form = vec![0i32; m * m];
                for (a, &i) in simple.iter().enumerate() {
                    for (b, &j) in simple.iter().enumerate() {
                        form[a * m + b] = self.form(i, j);
                    }
                }
                let letter = classify(&form, m);
                // renormalize so that short roots have squared length 2
                let min = (0..m).map(|i| form[i * m + i]).min().unwrap();
                let form: Vec<i32> = form.iter().map(|x| x * 2 / min).collect();
                Subsystem { system: RootSystem::from_form(letter, form), simple, ambient_rank: self.rank }
            })
            .collect()
    }
}

/// Type letter of a connected Dynkin diagram given by its Gram matrix.
fn classify(form: &[i32], m: usize) -> TypeLetter {
    if m == 1 {
        return TypeLetter::A;
    }
    let len = |i: usize| form[i * m + i];
    let mult = |i: usize, j: usize| {
        let f = form[i * m + j];
        (4 * f * f) / (len(i) * len(j))
    };
    let mut degree = vec![0usize; m];
    let mut multi: Option<(usize, usize, i32)> = None;
    for i in 0..m {
        for j in 0..m {
            if i != j && form[i * m + j] != 0 {
                degree[i] += 1;
                if i < j && mult(i, j) > 1 {
                    multi = Some((i, j, mult(i, j)));
                }
            }
        }
    }
    if let Some((i, j, k)) = multi {
        if k == 3 {
            return TypeLetter::G;
        }
        if m == 2 {
            return TypeLetter::B;
        }
        let end_i = degree[i] == 1;
        let end_j = degree[j] == 1;
        if !end_i && !end_j {
            return TypeLetter::F;
        }
        let end = if end_i { i } else { j };
        let other = if end_i { j } else { i };
        return if len(end) < len(other) { TypeLetter::B } else { TypeLetter::C };
    }
    let branch = (0..m).find(|&i| degree[i] == 3);
    match branch {
        None => TypeLetter::A,
        Some(b) => {
            // arm lengths from the branch node
            let mut arms = Vec::new();
            for start in (0..m).filter(|&j| j != b && form[b * m + j] != 0) {
                let (mut prev, mut cur, mut n) = (b, start, 1);
                loop {
                    let next = (0..m).find(|&k| k != prev && k != cur && form[cur * m + k] != 0);
                    match next {
                        Some(k) => {
                            prev = cur;
                            cur = k;
                            n += 1;
                        }
                        None => break,
                    }
                }
                arms.push(n);
            }
            arms.sort();
            if arms[0] == 1 && arms[1] == 1 {
                TypeLetter::D
            } else {
                TypeLetter::E
            }
        }
    }
}

/// One irreducible component of a subsystem R(S), S ⊆ Δ.
#[derive(Clone, Debug)]
pub struct Subsystem {
    pub system: RootSystem,
    /// Local simple index -> ambient simple index (increasing).
    pub simple: Vec<usize>,
    ambient_rank: usize,
}

impl Subsystem {
    pub fn mask(&self) -> u32 {
        self.simple.iter().fold(0, |m, &i| m | (1 << i))
    }

    pub fn embed(&self, local: &Root) -> Root {
        let mut v = vec![0; self.ambient_rank];
        for (a, &i) in self.simple.iter().enumerate() {
            v[i] = local.0[a];
        }
        Root(v)
    }

    /// Inverse of `embed` for roots supported inside the component.
    pub fn restrict(&self, ambient: &Root) -> Option<Root> {
        if ambient.support_mask() & !self.mask() != 0 {
            return None;
        }
        Some(Root(self.simple.iter().map(|&i| ambient.0[i]).collect()))
    }

    pub fn embed_coroot(&self, local: &CorootVector) -> CorootVector {
        let mut v = vec![0; self.ambient_rank];
        for (a, &i) in self.simple.iter().enumerate() {
            v[i] = local.coroot[a];
        }
        CorootVector::new(v)
    }

    pub fn local_index(&self, ambient: usize) -> Option<usize> {
        self.simple.iter().position(|&i| i == ambient)
    }
}
