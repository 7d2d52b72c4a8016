//! Irreducible restricted root systems with exact rational coordinates.
//!
//! Systems are realized in the standard Bourbaki epsilon coordinates, so all
//! Cartan integers come out as exact integers and sign conventions are fixed
//! once and for all. Both reduced families (A through G) and the non-reduced
//! family BC are supported.
//!
//! Conventions:
//! - Simple roots carry Bourbaki numbering; this is the only ordering exposed.
//! - The Cartan matrix is `C[i][j] = n(alpha_i, alpha_j) = 2<a_i,a_j>/|a_j|^2`.
//!   With this orientation G2 reads [[2,-1],[-3,2]].
//! - The normalized inner product used for Gram matrices scales the ambient
//!   dot product so long roots have squared length 2 (reduced types) and the
//!   shortest non-double root has squared length 1 (type BC).

use std::collections::HashMap;

use thiserror::Error;

use crate::linalg::Mat;
use crate::scalar::{dot, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("invalid root system type {family}{rank}: {reason}")]
    InvalidType {
        family: Family,
        rank: usize,
        reason: String,
    },
    #[error("not a root of the system")]
    NotARoot,
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl std::fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl RootSystemType {
    /// Validates rank bounds and canonicalizes the low-rank coincidences
    /// B1 = C1 = A1 and C2 = B2. D2 and D3 are rejected so that every
    /// isomorphism class has exactly one name.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let err = |reason: &str| {
            Err(RootSystemError::InvalidType {
                family,
                rank,
                reason: reason.to_string(),
            })
        };
        if rank == 0 {
            return err("rank must be positive");
        }
        let t = match (family, rank) {
            (Family::A, _) => (Family::A, rank),
            (Family::B, 1) => (Family::A, 1),
            (Family::B, _) => (Family::B, rank),
            (Family::C, 1) => (Family::A, 1),
            (Family::C, 2) => (Family::B, 2),
            (Family::C, _) => (Family::C, rank),
            (Family::D, r) if r < 4 => {
                return err("D2 and D3 are not canonical; write A1 x A1 or A3 instead")
            }
            (Family::D, _) => (Family::D, rank),
            (Family::E, 6..=8) => (Family::E, rank),
            (Family::E, _) => return err("E requires rank 6, 7, or 8"),
            (Family::F, 4) => (Family::F, 4),
            (Family::F, _) => return err("F requires rank 4"),
            (Family::G, 2) => (Family::G, 2),
            (Family::G, _) => return err("G requires rank 2"),
            (Family::BC, _) => (Family::BC, rank),
        };
        Ok(RootSystemType {
            family: t.0,
            rank: t.1,
        })
    }

    pub fn is_reduced(&self) -> bool {
        self.family != Family::BC
    }

    /// Number of roots, from the classical closed-form table.
    pub fn root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::E => match r {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
            Family::BC => 2 * r * (r + 1),
        }
    }

    /// Order of the Weyl group, from the classical closed-form table.
    pub fn weyl_order(&self) -> u64 {
        let r = self.rank as u32;
        let fact = |n: u32| (1..=n as u64).product::<u64>();
        match self.family {
            Family::A => fact(r + 1),
            Family::B | Family::C | Family::BC => 2u64.pow(r) * fact(r),
            Family::D => 2u64.pow(r - 1) * fact(r),
            Family::E => match r {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

/// Convenience wrapper around [`RootSystemType::weyl_order`], matching the
/// operation names used by the CLI.
pub fn weyl_order(t: RootSystemType) -> u64 {
    t.weyl_order()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LengthClass {
    Short,
    Long,
    /// Roots of the form `2a` with `a` itself a root (type BC only).
    Double,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root<S> {
    /// Integer coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    /// Exact coordinates in the Bourbaki epsilon realization.
    pub ambient: Vec<S>,
    /// Sum of the coefficients.
    pub height: i64,
}

#[derive(Debug, Clone)]
pub struct RootSystem<S> {
    rs_type: RootSystemType,
    /// All roots; positives first sorted by (height, coefficients), then the
    /// negatives in the mirrored order.
    roots: Vec<Root<S>>,
    n_positive: usize,
    index: HashMap<Vec<i64>, usize>,
    cartan: Vec<Vec<i64>>,
    classes: Vec<LengthClass>,
    /// Scale factor applied to the ambient dot product by [`Self::inner`].
    norm_factor: S,
}

/// Builds the full root system for a (canonicalized) type.
pub fn build_root_system<S: Scalar>(t: RootSystemType) -> RootSystem<S> {
    RootSystem::build(t)
}

impl<S: Scalar> RootSystem<S> {
    pub fn build(t: RootSystemType) -> Self {
        let simples = simple_roots::<S>(t);
        let candidates = root_vectors::<S>(t);
        let rank = t.rank;

        // Express every root in the simple basis: solve M n = root exactly.
        let ambient_dim = simples[0].len();
        let m = Mat::from_fn(ambient_dim, rank, |r, c| simples[c][r].clone());
        let mut positives: Vec<Root<S>> = Vec::new();
        for v in &candidates {
            let x = m.solve(v).expect("root outside simple-root span");
            debug_assert_eq!(m.mul_vec(&x), *v);
            let coeffs: Vec<i64> = x
                .iter()
                .map(|c| c.to_i64().expect("non-integer root coefficient"))
                .collect();
            let neg = coeffs.iter().all(|&c| c <= 0);
            let pos = coeffs.iter().all(|&c| c >= 0);
            assert!(pos || neg, "root with mixed-sign coefficients");
            if pos {
                let height = coeffs.iter().sum();
                positives.push(Root {
                    coeffs,
                    ambient: v.clone(),
                    height,
                });
            }
        }
        positives.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));
        assert_eq!(positives.len() * 2, t.root_count(), "root count mismatch");

        let n_positive = positives.len();
        let mut roots = positives;
        for i in 0..n_positive {
            let p = &roots[i];
            roots.push(Root {
                coeffs: p.coeffs.iter().map(|c| -c).collect(),
                ambient: p.ambient.iter().map(|x| -x.clone()).collect(),
                height: -p.height,
            });
        }

        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        assert_eq!(index.len(), roots.len());

        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        cartan_from_ambient(&roots[index[&unit(rank, i)]].ambient, &roots[index[&unit(rank, j)]].ambient)
                    })
                    .collect::<Vec<i64>>()
            })
            .collect::<Vec<_>>();
        for (i, row) in cartan.iter().enumerate() {
            for (j, &n) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(n, 2);
                } else {
                    assert!((-3..=0).contains(&n), "off-diagonal Cartan integer {n}");
                }
            }
        }

        let classes = classify_lengths(&roots, &index);
        let norm_factor = normalization_factor(t, &roots, &classes);

        RootSystem {
            rs_type: t,
            roots,
            n_positive,
            index,
            cartan,
            classes,
            norm_factor,
        }
    }

    pub fn rs_type(&self) -> RootSystemType {
        self.rs_type
    }

    pub fn rank(&self) -> usize {
        self.rs_type.rank
    }

    pub fn all_roots(&self) -> &[Root<S>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root<S>] {
        &self.roots[..self.n_positive]
    }

    pub fn n_positive(&self) -> usize {
        self.n_positive
    }

    pub fn root(&self, idx: usize) -> &Root<S> {
        &self.roots[idx]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.n_positive
    }

    /// Index of the simple root `alpha_i` (which is just `i` by the sort
    /// order, asserted here).
    pub fn simple_index(&self, i: usize) -> usize {
        let idx = self.index[&unit(self.rank(), i)];
        debug_assert!(idx < self.rank());
        idx
    }

    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn length_class(&self, idx: usize) -> LengthClass {
        self.classes[idx]
    }

    pub fn norm_factor(&self) -> &S {
        &self.norm_factor
    }

    /// Ambient dot product of two roots (no normalization).
    pub fn dot_eps(&self, a: usize, b: usize) -> S {
        dot(&self.roots[a].ambient, &self.roots[b].ambient)
    }

    /// Normalized inner product: long roots have squared length 2.
    pub fn inner(&self, a: usize, b: usize) -> S {
        self.norm_factor.clone() * self.dot_eps(a, b)
    }

    /// The Cartan integer `n(a, b) = 2<a,b>/|b|^2`, exact.
    pub fn cartan_integer(&self, a: &[i64], b: &[i64]) -> Result<i64, RootSystemError> {
        let ia = self.index_of(a).ok_or(RootSystemError::NotARoot)?;
        let ib = self.index_of(b).ok_or(RootSystemError::NotARoot)?;
        Ok(cartan_from_ambient(
            &self.roots[ia].ambient,
            &self.roots[ib].ambient,
        ))
    }

    pub fn cartan_integer_by_index(&self, a: usize, b: usize) -> i64 {
        cartan_from_ambient(&self.roots[a].ambient, &self.roots[b].ambient)
    }

    /// Decomposes a positive root as an ordered sum of simple roots with
    /// every partial sum again a root. Greedy: repeatedly strips the
    /// smallest-index simple root that leaves a positive root.
    pub fn root_chain_decomposition(&self, eta: &[i64]) -> Vec<usize> {
        let idx = self
            .index_of(eta)
            .unwrap_or_else(|| panic!("chain decomposition of a non-root"));
        assert!(self.is_positive(idx), "chain decomposition needs a positive root");
        let mut current = eta.to_vec();
        let mut chain_rev = Vec::new();
        while current.iter().sum::<i64>() > 1 {
            let mut stripped = None;
            for i in 0..self.rank() {
                if current[i] == 0 {
                    continue;
                }
                let mut lower = current.clone();
                lower[i] -= 1;
                if let Some(l) = self.index_of(&lower) {
                    if self.is_positive(l) {
                        stripped = Some((i, lower));
                        break;
                    }
                }
            }
            let (i, lower) =
                stripped.expect("internal invariant violated: no simple root strips to a root");
            chain_rev.push(i);
            current = lower;
        }
        let last = current
            .iter()
            .position(|&c| c == 1)
            .expect("height-one root is simple");
        chain_rev.push(last);
        chain_rev.reverse();
        chain_rev
    }

    /// Simple reflection `s_i` applied to a rational vector in simple-root
    /// coordinates, extending `n(., alpha_i)` linearly.
    pub fn simple_reflection(&self, i: usize, v: &[S]) -> Result<Vec<S>, RootSystemError> {
        if v.len() != self.rank() {
            return Err(RootSystemError::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            });
        }
        let mut n = S::zero();
        for (j, c) in v.iter().enumerate() {
            n = n + c.clone() * S::from_i64(self.cartan[j][i]);
        }
        let mut out = v.to_vec();
        out[i] = out[i].clone() - n;
        Ok(out)
    }

    /// Matrix of `s_i` on the simple-root coordinates.
    pub fn simple_reflection_matrix(&self, i: usize) -> Mat<S> {
        Mat::from_fn(self.rank(), self.rank(), |r, c| {
            let mut v = S::zero();
            if r == c {
                v = S::one();
            }
            if r == i {
                v = v - S::from_i64(self.cartan[c][i]);
            }
            v
        })
    }

    /// Does the linear map `T` (on simple-root coordinates of the dual flat)
    /// map the root set bijectively onto itself and preserve all Cartan
    /// integers?
    pub fn check_aut_sigma(&self, t: &Mat<S>) -> bool {
        if t.rows() != self.rank() || t.cols() != self.rank() {
            return false;
        }
        let mut images = Vec::with_capacity(self.roots.len());
        let mut seen = std::collections::HashSet::new();
        for root in &self.roots {
            let v: Vec<S> = root.coeffs.iter().map(|&c| S::from_i64(c)).collect();
            let img = t.mul_vec(&v);
            let int: Option<Vec<i64>> = img.iter().map(|x| x.to_i64()).collect();
            let Some(int) = int else { return false };
            let Some(idx) = self.index_of(&int) else {
                return false;
            };
            if !seen.insert(idx) {
                return false;
            }
            images.push(idx);
        }
        for (a, &ia) in images.iter().enumerate() {
            for (b, &ib) in images.iter().enumerate() {
                if self.cartan_integer_by_index(ia, ib) != self.cartan_integer_by_index(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i] = 1;
    v
}

fn cartan_from_ambient<S: Scalar>(a: &[S], b: &[S]) -> i64 {
    let two = S::from_i64(2);
    let n = two * dot(a, b) / dot(b, b);
    n.to_i64().expect("Cartan integer is not an integer")
}

fn classify_lengths<S: Scalar>(
    roots: &[Root<S>],
    index: &HashMap<Vec<i64>, usize>,
) -> Vec<LengthClass> {
    let is_double = |r: &Root<S>| {
        if r.coeffs.iter().any(|c| c % 2 != 0) {
            return false;
        }
        let half: Vec<i64> = r.coeffs.iter().map(|c| c / 2).collect();
        index.contains_key(&half)
    };
    let mut norms: Vec<S> = Vec::new();
    for r in roots {
        if !is_double(r) {
            let n = dot(&r.ambient, &r.ambient);
            if !norms.contains(&n) {
                norms.push(n);
            }
        }
    }
    norms.sort();
    assert!(norms.len() <= 2, "more than two non-double length classes");
    roots
        .iter()
        .map(|r| {
            if is_double(r) {
                LengthClass::Double
            } else if norms.len() == 1 {
                LengthClass::Short
            } else {
                let n = dot(&r.ambient, &r.ambient);
                if n == norms[0] {
                    LengthClass::Short
                } else {
                    LengthClass::Long
                }
            }
        })
        .collect()
}

/// Scale making long roots have squared length 2 (reduced types) and the
/// shortest non-double root squared length 1 (type BC, where the epsilon
/// realization already does this).
fn normalization_factor<S: Scalar>(
    t: RootSystemType,
    roots: &[Root<S>],
    classes: &[LengthClass],
) -> S {
    if t.family == Family::BC {
        return S::one();
    }
    let mut max_norm = S::zero();
    for (r, c) in roots.iter().zip(classes) {
        if *c != LengthClass::Double {
            let n = dot(&r.ambient, &r.ambient);
            if n > max_norm {
                max_norm = n;
            }
        }
    }
    S::from_i64(2) / max_norm
}

fn half<S: Scalar>() -> S {
    S::from_ratio(1, 2)
}

fn s<S: Scalar>(n: i64) -> S {
    S::from_i64(n)
}

fn e<S: Scalar>(dim: usize, i: usize, scale: S) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = scale;
    v
}

fn e_diff<S: Scalar>(dim: usize, i: usize, j: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v[j] = -S::one();
    v
}

fn simple_roots<S: Scalar>(t: RootSystemType) -> Vec<Vec<S>> {
    let r = t.rank;
    match t.family {
        Family::A => (0..r).map(|i| e_diff(r + 1, i, i + 1)).collect(),
        Family::B | Family::BC => {
            let mut v: Vec<Vec<S>> = (0..r - 1).map(|i| e_diff(r, i, i + 1)).collect();
            v.push(e(r, r - 1, S::one()));
            v
        }
        Family::C => {
            let mut v: Vec<Vec<S>> = (0..r - 1).map(|i| e_diff(r, i, i + 1)).collect();
            v.push(e(r, r - 1, s(2)));
            v
        }
        Family::D => {
            let mut v: Vec<Vec<S>> = (0..r - 1).map(|i| e_diff(r, i, i + 1)).collect();
            let mut last = vec![S::zero(); r];
            last[r - 2] = S::one();
            last[r - 1] = S::one();
            v.push(last);
            v
        }
        Family::G => vec![
            {
                let mut v = vec![S::zero(); 3];
                v[0] = S::one();
                v[1] = -S::one();
                v
            },
            {
                let mut v = vec![S::zero(); 3];
                v[0] = s(-2);
                v[1] = S::one();
                v[2] = S::one();
                v
            },
        ],
        Family::F => vec![
            e_diff(4, 1, 2),
            e_diff(4, 2, 3),
            e(4, 3, S::one()),
            vec![half(), -half::<S>(), -half::<S>(), -half::<S>()],
        ],
        Family::E => e8_simples::<S>()[..r].to_vec(),
    }
}

fn e8_simples<S: Scalar>() -> Vec<Vec<S>> {
    let mut a1 = vec![-half::<S>(); 8];
    a1[0] = half();
    a1[7] = half();
    let mut a2 = vec![S::zero(); 8];
    a2[0] = S::one();
    a2[1] = S::one();
    let mut v = vec![a1, a2];
    v.push({
        let mut x = vec![S::zero(); 8];
        x[0] = -S::one();
        x[1] = S::one();
        x
    });
    for k in 0..5 {
        // alpha_{4+k} = e_{k+3} - e_{k+2} in 1-based Bourbaki labels
        let mut x = vec![S::zero(); 8];
        x[k + 1] = -S::one();
        x[k + 2] = S::one();
        v.push(x);
    }
    v
}

fn root_vectors<S: Scalar>(t: RootSystemType) -> Vec<Vec<S>> {
    let r = t.rank;
    let mut out: Vec<Vec<S>> = Vec::new();
    let pair_roots = |out: &mut Vec<Vec<S>>, dim: usize| {
        for i in 0..dim {
            for j in (i + 1)..dim {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![S::zero(); dim];
                    v[i] = s(si);
                    v[j] = s(sj);
                    out.push(v);
                }
            }
        }
    };
    match t.family {
        Family::A => {
            for i in 0..=r {
                for j in 0..=r {
                    if i != j {
                        out.push(e_diff(r + 1, i, j));
                    }
                }
            }
        }
        Family::B => {
            for i in 0..r {
                out.push(e(r, i, S::one()));
                out.push(e(r, i, -S::one()));
            }
            pair_roots(&mut out, r);
        }
        Family::C => {
            for i in 0..r {
                out.push(e(r, i, s(2)));
                out.push(e(r, i, s(-2)));
            }
            pair_roots(&mut out, r);
        }
        Family::BC => {
            for i in 0..r {
                out.push(e(r, i, S::one()));
                out.push(e(r, i, -S::one()));
                out.push(e(r, i, s(2)));
                out.push(e(r, i, s(-2)));
            }
            if r > 1 {
                pair_roots(&mut out, r);
            }
        }
        Family::D => pair_roots(&mut out, r),
        Family::G => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        out.push(e_diff(3, i, j));
                    }
                }
            }
            for i in 0..3 {
                let (j, k) = match i {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let mut v = vec![S::zero(); 3];
                v[i] = s(2);
                v[j] = -S::one();
                v[k] = -S::one();
                out.push(v.clone());
                out.push(v.into_iter().map(|x| -x).collect());
            }
        }
        Family::F => {
            for i in 0..4 {
                out.push(e(4, i, S::one()));
                out.push(e(4, i, -S::one()));
            }
            pair_roots(&mut out, 4);
            for signs in 0..16u32 {
                let v: Vec<S> = (0..4)
                    .map(|b| {
                        if signs & (1 << b) != 0 {
                            -half::<S>()
                        } else {
                            half()
                        }
                    })
                    .collect();
                out.push(v);
            }
        }
        Family::E => {
            let mut e8: Vec<Vec<S>> = Vec::new();
            pair_roots(&mut e8, 8);
            for signs in 0..256u32 {
                if signs.count_ones() % 2 == 0 {
                    let v: Vec<S> = (0..8)
                        .map(|b| {
                            if signs & (1 << b) != 0 {
                                -half::<S>()
                            } else {
                                half()
                            }
                        })
                        .collect();
                    e8.push(v);
                }
            }
            match r {
                8 => out = e8,
                7 => {
                    // Orthogonal to e7 + e8.
                    out = e8
                        .into_iter()
                        .filter(|v| v[6].clone() + v[7].clone() == S::zero())
                        .collect();
                }
                _ => {
                    // Orthogonal to e7 + e8 and e6 + e8.
                    out = e8
                        .into_iter()
                        .filter(|v| {
                            v[6].clone() + v[7].clone() == S::zero()
                                && v[5].clone() + v[7].clone() == S::zero()
                        })
                        .collect();
                }
            }
        }
    }
    out
}

/// Independent construction route used for cross-checks: saturates the
/// simple roots under root strings driven by the Cartan matrix alone.
/// Only valid for reduced systems. Returns positive roots as coefficient
/// vectors.
pub mod oracle {
    use std::collections::HashSet;

    /// Builds the positive roots of a reduced system level by level. `p` for
    /// the string through `beta` in direction `alpha_i` is read off the
    /// already-built lower levels, and `q = p - n(beta, alpha_i)` decides
    /// whether `beta + alpha_i` is a root.
    pub fn positive_roots_by_string_closure(cartan: &[Vec<i64>]) -> HashSet<Vec<i64>> {
        let rank = cartan.len();
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        let mut level: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        for v in &level {
            set.insert(v.clone());
        }
        while !level.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &level {
                for i in 0..rank {
                    if beta.iter().enumerate().all(|(j, &c)| (j == i) == (c != 0)) {
                        // beta is alpha_i itself; the string rule does not apply.
                        continue;
                    }
                    let mut p = 0i64;
                    loop {
                        let mut down = beta.clone();
                        down[i] -= p + 1;
                        if down[i] >= 0 && set.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let n: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - n >= 1 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if set.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            level = next;
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, Q};
    use num_rational::Rational64;
    use proptest::prelude::*;

    fn rs(family: Family, rank: usize) -> RootSystem<Q> {
        RootSystem::build(RootSystemType::new(family, rank).unwrap())
    }

    #[test]
    fn canonicalization_and_bounds() {
        assert_eq!(
            RootSystemType::new(Family::B, 1).unwrap(),
            RootSystemType::new(Family::A, 1).unwrap()
        );
        assert_eq!(
            RootSystemType::new(Family::C, 2).unwrap(),
            RootSystemType::new(Family::B, 2).unwrap()
        );
        assert_eq!(
            RootSystemType::new(Family::C, 1).unwrap().family,
            Family::A
        );
        assert!(RootSystemType::new(Family::D, 3).is_err());
        assert!(RootSystemType::new(Family::D, 2).is_err());
        assert!(RootSystemType::new(Family::E, 5).is_err());
        assert!(RootSystemType::new(Family::F, 3).is_err());
        assert!(RootSystemType::new(Family::A, 0).is_err());
    }

    #[test]
    fn a2_positive_roots_and_heights() {
        let a2 = rs(Family::A, 2);
        let pos: Vec<(Vec<i64>, i64)> = a2
            .positive_roots()
            .iter()
            .map(|r| (r.coeffs.clone(), r.height))
            .collect();
        assert_eq!(
            pos,
            vec![
                (vec![0, 1], 1),
                (vec![1, 0], 1),
                (vec![1, 1], 2),
            ]
        );
    }

    #[test]
    fn a1_has_two_roots() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.all_roots().len(), 2);
        assert!(a1.is_root(&[1]) && a1.is_root(&[-1]));
    }

    #[test]
    fn bc1_positive_roots() {
        let bc1 = rs(Family::BC, 1);
        assert_eq!(bc1.n_positive(), 2);
        assert!(bc1.is_root(&[1]) && bc1.is_root(&[2]));
        assert_eq!(bc1.length_class(bc1.index_of(&[2]).unwrap()), LengthClass::Double);
        assert_eq!(bc1.length_class(bc1.index_of(&[1]).unwrap()), LengthClass::Short);
    }

    #[test]
    fn root_counts_match_table() {
        for (f, r) in [
            (Family::A, 1),
            (Family::A, 3),
            (Family::B, 2),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::BC, 1),
            (Family::BC, 3),
        ] {
            let t = RootSystemType::new(f, r).unwrap();
            let sys = RootSystem::<Q>::build(t);
            assert_eq!(sys.all_roots().len(), t.root_count(), "{t}");
        }
    }

    #[test]
    fn g2_cartan_integers() {
        let g2 = rs(Family::G, 2);
        // With alpha_1 short and alpha_2 long: n(a1,a2) = -1, n(a2,a1) = -3.
        assert_eq!(g2.cartan_integer(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(g2.cartan_integer(&[0, 1], &[1, 0]).unwrap(), -3);
        assert_eq!(g2.cartan_matrix(), &vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn cartan_integer_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.cartan_integer(&[1, 0], &[1, 0]).unwrap(), 2);
        assert_eq!(a2.cartan_integer(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(
            a2.cartan_integer(&[2, 0], &[0, 1]),
            Err(RootSystemError::NotARoot)
        );
    }

    #[test]
    fn classical_cartan_matrices() {
        assert_eq!(
            rs(Family::B, 3).cartan_matrix(),
            &vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            rs(Family::C, 3).cartan_matrix(),
            &vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        assert_eq!(
            rs(Family::F, 4).cartan_matrix(),
            &vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
        // Simply-laced: symmetric with single bonds on the A3 path.
        assert_eq!(
            rs(Family::A, 3).cartan_matrix(),
            &vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
    }

    #[test]
    fn b_and_c_distinguished_by_root_membership() {
        let b3 = rs(Family::B, 3);
        let c3 = rs(Family::C, 3);
        // alpha_2 + 2 alpha_3
        assert!(b3.is_root(&[0, 1, 2]));
        assert!(!c3.is_root(&[0, 1, 2]));
        let a2 = rs(Family::A, 2);
        assert!(a2.is_root(&[1, 1]));
        assert!(!a2.is_root(&[2, 1]));
    }

    #[test]
    fn chain_decompositions() {
        let a2 = rs(Family::A, 2);
        let chain = a2.root_chain_decomposition(&[1, 1]);
        assert_eq!(chain.len(), 2);
        assert_eq!(a2.root_chain_decomposition(&[1, 0]), vec![0]);

        let g2 = rs(Family::G, 2);
        let chain = g2.root_chain_decomposition(&[3, 2]);
        assert_eq!(chain.len(), 5);
        let mut partial = vec![0i64; 2];
        for i in &chain {
            partial[*i] += 1;
            assert!(g2.is_root(&partial), "partial sum {partial:?} is not a root");
        }
        assert_eq!(partial, vec![3, 2]);
    }

    #[test]
    fn chain_length_equals_height_everywhere() {
        for (f, r) in [(Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::F, 4)] {
            let sys = rs(f, r);
            for root in sys.positive_roots() {
                let chain = sys.root_chain_decomposition(&root.coeffs);
                assert_eq!(chain.len() as i64, root.height);
                let mut partial = vec![0i64; sys.rank()];
                for i in &chain {
                    partial[*i] += 1;
                    assert!(sys.is_root(&partial));
                }
            }
        }
    }

    #[test]
    fn simple_reflection_examples() {
        let a2 = rs(Family::A, 2);
        // s_1(alpha_2) = alpha_1 + alpha_2
        assert_eq!(
            a2.simple_reflection(0, &[q(0), q(1)]).unwrap(),
            vec![q(1), q(1)]
        );
        // s_i(alpha_i) = -alpha_i
        assert_eq!(
            a2.simple_reflection(0, &[q(1), q(0)]).unwrap(),
            vec![q(-1), q(0)]
        );
    }

    #[test]
    fn weyl_orders_match_bfs_enumeration() {
        for (f, r) in [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 4),
            (Family::B, 2),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
            (Family::BC, 2),
        ] {
            let t = RootSystemType::new(f, r).unwrap();
            let sys = RootSystem::<Q>::build(t);
            let gens: Vec<Mat<Q>> = (0..r).map(|i| sys.simple_reflection_matrix(i)).collect();
            let mut seen = std::collections::HashSet::new();
            let mut queue = vec![Mat::<Q>::identity(r)];
            seen.insert(format!("{:?}", queue[0]));
            let mut count = 0u64;
            while let Some(m) = queue.pop() {
                count += 1;
                for g in &gens {
                    let next = g.mul(&m);
                    if seen.insert(format!("{next:?}")) {
                        queue.push(next);
                    }
                }
            }
            assert_eq!(count, t.weyl_order(), "{t}");
        }
    }

    #[test]
    fn check_aut_sigma_basics() {
        let a2 = rs(Family::A, 2);
        assert!(a2.check_aut_sigma(&Mat::identity(2)));
        // -identity is the longest Weyl element composed with the flip.
        let minus = Mat::from_fn(2, 2, |r, c| if r == c { q(-1) } else { q(0) });
        assert!(a2.check_aut_sigma(&minus));
        // alpha_1 -> 2 alpha_1 is not even a bijection of the root set.
        let scale = Mat::from_rows(vec![vec![q(2), q(0)], vec![q(0), q(1)]]);
        assert!(!a2.check_aut_sigma(&scale));
        // Every simple reflection is an automorphism of Sigma.
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::BC, 2)] {
            let sys = rs(f, r);
            for i in 0..r {
                assert!(sys.check_aut_sigma(&sys.simple_reflection_matrix(i)));
            }
        }
    }

    #[test]
    fn string_closure_oracle_agrees_with_construction() {
        for (f, r) in [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 2),
            (Family::B, 3),
            (Family::B, 4),
            (Family::C, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let sys = rs(f, r);
            let from_strings = oracle::positive_roots_by_string_closure(sys.cartan_matrix());
            let built: std::collections::HashSet<Vec<i64>> = sys
                .positive_roots()
                .iter()
                .map(|r| r.coeffs.clone())
                .collect();
            assert_eq!(from_strings, built, "{f:?}{r}");
        }
    }

    #[test]
    fn bc_indivisible_part_is_type_b() {
        for r in 2..=4 {
            let bc = rs(Family::BC, r);
            let b = rs(Family::B, r);
            let indivisible: std::collections::HashSet<Vec<i64>> = bc
                .all_roots()
                .iter()
                .enumerate()
                .filter(|(i, _)| bc.length_class(*i) != LengthClass::Double)
                .map(|(_, root)| root.coeffs.clone())
                .collect();
            let b_set: std::collections::HashSet<Vec<i64>> = b
                .all_roots()
                .iter()
                .map(|root| root.coeffs.clone())
                .collect();
            assert_eq!(indivisible, b_set);
        }
        // Doubles are exactly twice the shortest class.
        let bc2 = rs(Family::BC, 2);
        for (i, root) in bc2.all_roots().iter().enumerate() {
            if bc2.length_class(i) == LengthClass::Double {
                let half: Vec<i64> = root.coeffs.iter().map(|c| c / 2).collect();
                let hi = bc2.index_of(&half).unwrap();
                assert_eq!(bc2.length_class(hi), LengthClass::Short);
            }
        }
    }

    #[test]
    fn negation_closure() {
        for (f, r) in [(Family::E, 6), (Family::BC, 3), (Family::F, 4)] {
            let sys = rs(f, r);
            for root in sys.all_roots() {
                let neg: Vec<i64> = root.coeffs.iter().map(|c| -c).collect();
                assert!(sys.is_root(&neg));
            }
        }
    }

    #[test]
    fn generic_over_both_scalars() {
        let big = RootSystem::<Q>::build(RootSystemType::new(Family::G, 2).unwrap());
        let small =
            RootSystem::<Rational64>::build(RootSystemType::new(Family::G, 2).unwrap());
        assert_eq!(big.cartan_matrix(), small.cartan_matrix());
        assert_eq!(big.n_positive(), small.n_positive());
    }

    proptest! {
        #[test]
        fn simple_reflection_is_an_involution(
            v in proptest::collection::vec((-6i64..=6, 1i64..=3), 3),
            i in 0usize..3,
        ) {
            let b3 = rs(Family::B, 3);
            let v: Vec<Q> = v.into_iter().map(|(n, d)| crate::qr(n, d)).collect();
            let once = b3.simple_reflection(i, &v).unwrap();
            let twice = b3.simple_reflection(i, &once).unwrap();
            prop_assert_eq!(twice, v);
        }
    }
}
