//! Exact root data for the simple types A–G.
//!
//! Conventions, fixed once for the whole crate:
//! - Bourbaki numbering of simple roots for every family.
//! - `cartan[i][j] = ⟨α_j, α̌_i⟩`, so weight coordinates of a root-lattice
//!   element `r` are `cartan · r`.
//! - Weights are integer vectors in the fundamental-weight basis
//!   (`coords[i] = ⟨λ, α̌_i⟩`); root-basis coordinates are exact rationals.
//! - The invariant bilinear form is normalized so long roots have squared
//!   length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::weyl::{self, WeylElement};
use crate::Result;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn rank_admissible(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.rank_admissible(rank) {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Integer coordinates in the fundamental-weight basis: `coords[i] = ⟨λ, α̌_i⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// All fundamental-weight coordinates nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Exact rational coefficients on the simple roots α_1..α_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootCoords {
    coeffs: Vec<Rational>,
}

impl RootCoords {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        RootCoords { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        RootCoords {
            coeffs: coeffs.iter().map(|&c| Rational::from_integer(c)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs[i]
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        if self.is_integral() {
            Some(self.coeffs.iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Every coefficient ≤ 0 (zeros allowed).
    pub fn is_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_positive())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &RootCoords) -> RootCoords {
        debug_assert_eq!(self.rank(), other.rank());
        RootCoords {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RootCoords) -> RootCoords {
        debug_assert_eq!(self.rank(), other.rank());
        RootCoords {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for RootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug)]
pub struct RootSystem {
    pub(crate) spec: RootSystemSpec,
    pub(crate) cartan: Vec<Vec<i64>>,
    pub(crate) cartan_inv: Vec<Vec<Rational>>,
    pub(crate) symmetrizers: Vec<i64>,
    /// (α_i, α_j) under the long-root-squared-length-2 normalization.
    pub(crate) gram: Vec<Vec<Rational>>,
    /// Integer root coordinates of the positive roots, sorted by (height, lex).
    pub(crate) positive_root_ints: Vec<Vec<i64>>,
    pub(crate) positive_root_weights: Vec<Weight>,
    /// Weight coordinates of ±positive roots → (index into positive list, is_positive).
    pub(crate) root_index: HashMap<Vec<i64>, (usize, bool)>,
    pub(crate) fundamental_weights: Vec<RootCoords>,
    pub(crate) rho: Weight,
    pub(crate) highest_long_root: Weight,
    pub(crate) highest_long_root_coords: RootCoords,
    /// For each positive root α: coordinates of α̌ in the simple-coroot basis.
    pub(crate) coroot_coords: Vec<Vec<Rational>>,
    pub(crate) longest: WeylElement,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        RootSystem::build(RootSystemSpec::new(family, rank)?)
    }

    pub fn build(spec: RootSystemSpec) -> Result<RootSystem> {
        let n = spec.rank;
        let cartan = cartan_matrix(spec);
        let cartan_inv = invert_rational(&cartan);
        let symmetrizers = symmetrizers(&cartan);

        // (α_i, α_i)/2 = d_i / max d, so long simple roots get squared length 2.
        let max_d = *symmetrizers.iter().max().expect("rank >= 1");
        let half_norms: Vec<Rational> = symmetrizers
            .iter()
            .map(|&d| Rational::new(d, max_d))
            .collect();
        let mut gram = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = half_norms[i] * Rational::from_integer(cartan[i][j]);
            }
        }
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(gram[i][j], gram[j][i]);
            }
        }

        let positive_root_ints = positive_roots_by_closure(&cartan);
        let positive_root_weights: Vec<Weight> = positive_root_ints
            .iter()
            .map(|r| Weight::new(mat_mul_int(&cartan, r)))
            .collect();

        let mut root_index = HashMap::new();
        for (idx, w) in positive_root_weights.iter().enumerate() {
            root_index.insert(w.coords().to_vec(), (idx, true));
            root_index.insert(w.neg().coords().to_vec(), (idx, false));
        }

        let fundamental_weights: Vec<RootCoords> = (0..n)
            .map(|j| RootCoords::new((0..n).map(|i| cartan_inv[i][j]).collect()))
            .collect();

        let rho = Weight::new(vec![1; n]);

        // The highest root: the unique maximal positive root in the root order.
        // It is long in every type.
        let (hi_idx, _) = positive_root_ints
            .iter()
            .enumerate()
            .max_by_key(|(_, r)| (r.iter().sum::<i64>(), (*r).clone()))
            .expect("nonempty root set");
        let highest = positive_root_ints[hi_idx].clone();
        for r in &positive_root_ints {
            assert!(
                highest.iter().zip(r).all(|(h, c)| h >= c),
                "highest root must dominate every positive root"
            );
        }
        let highest_long_root = positive_root_weights[hi_idx].clone();
        assert!(highest_long_root.is_dominant());
        assert!(highest.iter().all(|&c| c >= 1));
        let highest_long_root_coords = RootCoords::from_integers(&highest);

        let mut coroot_coords = Vec::with_capacity(positive_root_ints.len());
        for r in &positive_root_ints {
            let norm: Rational = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            Rational::from_integer(r[i] * r[j]) * gram[i][j]
                        })
                        .sum::<Rational>()
                })
                .sum();
            let half = norm / Rational::from_integer(2);
            // α̌ = Σ_j m_j (α_j,α_j)/(α,α) α̌_j
            let coords: Vec<Rational> = (0..n)
                .map(|j| Rational::from_integer(r[j]) * half_norms[j] / half)
                .collect();
            coroot_coords.push(coords);
        }

        let mut rs = RootSystem {
            spec,
            cartan,
            cartan_inv,
            symmetrizers,
            gram,
            positive_root_ints,
            positive_root_weights,
            root_index,
            fundamental_weights,
            rho,
            highest_long_root,
            highest_long_root_coords,
            coroot_coords,
            longest: WeylElement::identity_for(spec),
        };
        rs.longest = weyl::compute_longest_element(&rs);
        Ok(rs)
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_root_ints.len()
    }

    /// Positive roots as integer simple-root coordinates, sorted by (height, lex).
    pub fn positive_roots(&self) -> Vec<RootCoords> {
        self.positive_root_ints
            .iter()
            .map(|r| RootCoords::from_integers(r))
            .collect()
    }

    pub fn positive_root_weight(&self, idx: usize) -> &Weight {
        &self.positive_root_weights[idx]
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight::new((0..self.rank()).map(|k| self.cartan[k][i]).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> &RootCoords {
        &self.fundamental_weights[i]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn highest_long_root(&self) -> &Weight {
        &self.highest_long_root
    }

    pub fn highest_long_root_coords(&self) -> &RootCoords {
        &self.highest_long_root_coords
    }

    /// ⟨λ, α̌_i⟩ for a weight: a coordinate read.
    pub fn pairing_weight(&self, w: &Weight, i: usize) -> i64 {
        w.coord(i)
    }

    /// ⟨x, α̌_i⟩ for simple-root coordinates: row i of the Cartan matrix.
    pub fn pairing_root_coords(&self, x: &RootCoords, i: usize) -> Rational {
        (0..self.rank())
            .map(|j| Rational::from_integer(self.cartan[i][j]) * x.coeff(j))
            .sum()
    }

    /// Solve `cartan · r = coords(w)` exactly.
    pub fn to_root_coords(&self, w: &Weight) -> RootCoords {
        let coeffs = (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| self.cartan_inv[i][j] * Rational::from_integer(w.coord(j)))
                    .sum()
            })
            .collect();
        RootCoords::new(coeffs)
    }

    /// Weight coordinates of a root-coordinate vector, if they are integral.
    pub fn to_weight(&self, r: &RootCoords) -> Option<Weight> {
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let v: Rational = (0..self.rank())
                .map(|j| Rational::from_integer(self.cartan[i][j]) * r.coeff(j))
                .sum();
            if !v.is_integer() {
                return None;
            }
            coords.push(v.to_integer());
        }
        Some(Weight::new(coords))
    }

    pub(crate) fn weight_from_int_root_coords(&self, r: &[i64]) -> Weight {
        Weight::new(mat_mul_int(&self.cartan, r))
    }

    /// W-invariant form, long roots squared length 2.
    pub fn bilinear_form(&self, x: &RootCoords, y: &RootCoords) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x.coeff(i).is_zero() {
                continue;
            }
            for j in 0..n {
                acc += x.coeff(i) * y.coeff(j) * self.gram[i][j];
            }
        }
        acc
    }

    pub fn norm_sq(&self, x: &RootCoords) -> Rational {
        self.bilinear_form(x, x)
    }
}

fn cartan_matrix(spec: RootSystemSpec) -> Vec<Vec<i64>> {
    let n = spec.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // bond(i, j, p, q): A[i][j] = p = ⟨α_j, α̌_i⟩ and A[j][i] = q.
    let bond = |m: &mut Vec<Vec<i64>>, i: usize, j: usize, p: i64, q: i64| {
        m[i][j] = p;
        m[j][i] = q;
    };
    match spec.family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // α_n short: ⟨α_{n-1}, α̌_n⟩ = -2.
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 2, n - 1, -1, -2);
        }
        Family::C => {
            // α_n long: ⟨α_n, α̌_{n-1}⟩ = -2.
            for i in 0..n - 2 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 3 {
                bond(&mut a, i, i + 1, -1, -1);
            }
            bond(&mut a, n - 3, n - 2, -1, -1);
            bond(&mut a, n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to 4.
            bond(&mut a, 0, 2, -1, -1);
            bond(&mut a, 1, 3, -1, -1);
            for i in 2..n - 1 {
                bond(&mut a, i, i + 1, -1, -1);
            }
        }
        Family::F => {
            // α_1, α_2 long; α_3, α_4 short.
            bond(&mut a, 0, 1, -1, -1);
            bond(&mut a, 1, 2, -1, -2);
            bond(&mut a, 2, 3, -1, -1);
        }
        Family::G => {
            // α_1 short, α_2 long: ⟨α_2, α̌_1⟩ = -3.
            bond(&mut a, 0, 1, -3, -1);
        }
    }
    a
}

/// Minimal positive integers d with d_i A[i][j] = d_j A[j][i].
fn symmetrizers(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d = vec![Rational::zero(); n];
    d[0] = Rational::from_integer(1);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && !seen[j] {
                d[j] = d[i] * Rational::new(cartan[i][j], cartan[j][i]);
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    assert!(seen.iter().all(|&s| s), "Dynkin diagram must be connected");
    let lcm_den = d
        .iter()
        .fold(1i64, |acc, r| num_integer_lcm(acc, *r.denom()));
    let ints: Vec<i64> = d
        .iter()
        .map(|r| (r * Rational::from_integer(lcm_den)).to_integer())
        .collect();
    let g = ints.iter().fold(0i64, |acc, &v| num_integer_gcd(acc, v));
    let out: Vec<i64> = ints.iter().map(|v| v / g).collect();
    for i in 0..n {
        for j in 0..n {
            assert_eq!(out[i] * cartan[i][j], out[j] * cartan[j][i]);
        }
    }
    out
}

fn num_integer_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    a / num_integer_gcd(a, b) * b
}

/// Generate R⁺ from the simple roots by root strings: β + α_i is a root iff
/// the string count p − ⟨β, α̌_i⟩ is at least 1, where p is how far the string
/// extends below β.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut set: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        set.insert(e.clone());
        by_height[0].push(e);
    }
    let mut h = 0;
    while !by_height[h].is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in by_height[h].clone() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().any(|&c| c < 0) || !set.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        by_height.push(next);
        h += 1;
    }
    let mut all: Vec<Vec<i64>> = set.into_iter().collect();
    all.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    all
}

fn invert_rational(cartan: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = cartan.len();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = cartan[i]
                .iter()
                .map(|&v| Rational::from_integer(v))
                .collect();
            row.extend((0..n).map(|j| {
                Rational::from_integer(if i == j { 1 } else { 0 })
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        aug.swap(col, pivot);
        let p = aug[col][col];
        for v in aug[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col];
                for c in 0..2 * n {
                    let sub = f * aug[col][c];
                    aug[r][c] -= sub;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn mat_mul_int(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        let cases: Vec<(Family, usize, usize)> = vec![
            (Family::A, 2, 3),
            (Family::G, 2, 6),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::F, 4, 24),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
        ];
        for (f, n, expect) in cases {
            assert_eq!(rs(f, n).num_positive_roots(), expect, "{f}{n}");
        }
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert_eq!(
            RootSystem::new(Family::E, 9).unwrap_err(),
            Error::InvalidRank {
                family: Family::E,
                rank: 9
            }
        );
        assert!(RootSystem::new(Family::D, 3).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
        assert!(RootSystem::new(Family::A, 1).is_ok());
    }

    #[test]
    fn b3_highest_long_root_is_second_fundamental_weight() {
        let b3 = rs(Family::B, 3);
        assert_eq!(
            b3.highest_long_root_coords().integer_coeffs().unwrap(),
            vec![1, 2, 2]
        );
        assert_eq!(b3.highest_long_root().coords(), &[0, 1, 0]);
    }

    #[test]
    fn highest_long_root_of_each_exceptional_type() {
        // Pinned to the adjoint fundamental weight of each diagram.
        let cases = [
            (Family::E, 6, vec![0, 1, 0, 0, 0, 0]),
            (Family::E, 7, vec![1, 0, 0, 0, 0, 0, 0]),
            (Family::E, 8, vec![0, 0, 0, 0, 0, 0, 0, 1]),
            (Family::F, 4, vec![1, 0, 0, 0]),
            (Family::G, 2, vec![0, 1]),
        ];
        for (f, n, expect) in cases {
            assert_eq!(rs(f, n).highest_long_root().coords(), &expect[..], "{f}{n}");
        }
    }

    #[test]
    fn a2_weight_to_root_coords() {
        let a2 = rs(Family::A, 2);
        let w = Weight::new(vec![1, 1]);
        assert_eq!(
            a2.to_root_coords(&w).coeffs(),
            &[rat(1, 1), rat(1, 1)]
        );
        let omega1 = Weight::new(vec![1, 0]);
        assert_eq!(
            a2.to_root_coords(&omega1).coeffs(),
            &[rat(2, 3), rat(1, 3)]
        );
    }

    #[test]
    fn a3_two_omega2_in_root_coordinates() {
        let a3 = rs(Family::A, 3);
        let w = Weight::new(vec![0, 2, 0]);
        assert_eq!(
            a3.to_root_coords(&w).integer_coeffs().unwrap(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn c3_two_omega1_in_root_coordinates() {
        let c3 = rs(Family::C, 3);
        let w = Weight::new(vec![2, 0, 0]);
        assert_eq!(
            c3.to_root_coords(&w).integer_coeffs().unwrap(),
            vec![2, 2, 1]
        );
    }

    #[test]
    fn round_trip_weight_root_coords() {
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::D, 4)] {
            let sys = rs(f, n);
            for raw in [-2i64, 0, 1, 3] {
                let w = Weight::new((0..n).map(|i| raw + i as i64).collect());
                let back = sys.to_weight(&sys.to_root_coords(&w)).unwrap();
                assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn cartan_times_fundamental_weight_is_basis_vector() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 4),
            (Family::C, 3),
            (Family::D, 5),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let sys = rs(f, n);
            for i in 0..n {
                let w = sys.to_weight(sys.fundamental_weight(i)).unwrap();
                let mut expect = vec![0i64; n];
                expect[i] = 1;
                assert_eq!(w.coords(), &expect[..]);
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            a2.pairing_root_coords(&RootCoords::from_integers(&[1, 0]), 0),
            rat(2, 1)
        );
        let b3 = rs(Family::B, 3);
        let alpha0 = b3.highest_long_root_coords().clone();
        assert_eq!(b3.pairing_root_coords(&alpha0, 1), rat(1, 1));
        let a4 = rs(Family::A, 4);
        let lam = Weight::new(vec![2, 0, 1, 0]);
        assert_eq!(a4.pairing_weight(&lam, 1), 0);
    }

    #[test]
    fn bilinear_form_normalization() {
        let a2 = rs(Family::A, 2);
        let a1 = RootCoords::from_integers(&[1, 0]);
        assert_eq!(a2.bilinear_form(&a1, &a1), rat(2, 1));

        let b2 = rs(Family::B, 2);
        assert_eq!(b2.symmetrizers(), &[2, 1]);
        let short = RootCoords::from_integers(&[0, 1]);
        let long = RootCoords::from_integers(&[1, 0]);
        assert_eq!(b2.norm_sq(&short), rat(1, 1));
        assert_eq!(b2.norm_sq(&long), rat(2, 1));

        let g2 = rs(Family::G, 2);
        let s1 = RootCoords::from_integers(&[1, 0]);
        let s2 = RootCoords::from_integers(&[0, 1]);
        assert_eq!(g2.norm_sq(&s2), rat(2, 1));
        assert_eq!(g2.norm_sq(&s1), rat(2, 3));
        assert_eq!(g2.bilinear_form(&s1, &s2), rat(-1, 1));
    }

    #[test]
    fn long_root_norm_is_two_in_every_type() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 4),
            (Family::E, 6),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let sys = rs(f, n);
            assert_eq!(sys.norm_sq(sys.highest_long_root_coords()), rat(2, 1), "{f}{n}");
        }
    }

    #[test]
    fn every_positive_root_descends_to_another_by_a_simple_root() {
        for (f, n) in [(Family::B, 3), (Family::F, 4), (Family::G, 2)] {
            let sys = rs(f, n);
            let ints = &sys.positive_root_ints;
            let set: std::collections::HashSet<_> = ints.iter().cloned().collect();
            for r in ints {
                let height: i64 = r.iter().sum();
                if height == 1 {
                    continue;
                }
                let descends = (0..n).any(|i| {
                    if r[i] == 0 {
                        return false;
                    }
                    let mut down = r.clone();
                    down[i] -= 1;
                    set.contains(&down)
                });
                assert!(descends, "{f}{n}: {r:?}");
            }
        }
    }
}
