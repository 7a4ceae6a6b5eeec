//! Weyl group elements as exact integer matrices on weight coordinates.
//!
//! Elements are canonicalized by their matrix; the stored word is provenance
//! (for enumerated elements it is the lexicographically smallest defining
//! word, 0-based indices).

use std::collections::{HashMap, VecDeque};

use crate::error::Error;
use crate::rootsystem::{Rational, RootCoords, RootSystem, RootSystemSpec, Weight};
use crate::Result;

/// Words longer than this factorial base are refused by the n! enumerations.
pub const DEFAULT_RANK_CAP: usize = 9;

#[derive(Debug, Clone)]
pub struct WeylElement {
    spec: RootSystemSpec,
    matrix: Vec<Vec<i64>>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub(crate) fn identity_for(spec: RootSystemSpec) -> WeylElement {
        let n = spec.rank;
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement {
            spec,
            matrix,
            word: Vec::new(),
        }
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.matrix
    }

    /// Defining word, 0-based simple-reflection indices, leftmost factor first.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Word with the conventional 1-based indices, for display and reports.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        debug_assert_eq!(w.rank(), self.spec.rank);
        Weight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(w.coords()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Matrix product: `self` then `other` reading right to left, so the
    /// right factor acts first.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.spec != other.spec {
            return Err(Error::MixedRootSystem);
        }
        let n = self.spec.rank;
        let mut matrix = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    matrix[i][j] += a * other.matrix[k][j];
                }
            }
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(WeylElement {
            spec: self.spec,
            matrix,
            word,
        })
    }
}

/// A Weyl element whose word uses each simple reflection exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    element: WeylElement,
}

impl CoxeterElement {
    pub fn new(element: WeylElement) -> Result<CoxeterElement> {
        let n = element.spec.rank;
        let mut seen = vec![false; n];
        if element.word.len() != n {
            return Err(Error::IndexOutOfRange {
                index: element.word.len(),
                rank: n,
            });
        }
        for &i in &element.word {
            if i >= n || seen[i] {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            seen[i] = true;
        }
        Ok(CoxeterElement { element })
    }

    pub fn element(&self) -> &WeylElement {
        &self.element
    }

    pub fn word(&self) -> &[usize] {
        self.element.word()
    }

    pub fn word_one_based(&self) -> Vec<usize> {
        self.element.word_one_based()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        self.element.apply(w)
    }
}

impl RootSystem {
    pub fn identity_element(&self) -> WeylElement {
        WeylElement::identity_for(self.spec)
    }

    /// s_i(λ) = λ − ⟨λ, α̌_i⟩ α_i on weight coordinates.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        let n = self.rank();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut matrix = vec![vec![0i64; n]; n];
        for (k, row) in matrix.iter_mut().enumerate() {
            row[k] = 1;
            row[i] -= self.cartan[k][i];
        }
        Ok(WeylElement {
            spec: self.spec,
            matrix,
            word: vec![i],
        })
    }

    /// Product s_{w[0]} s_{w[1]} ⋯; the last index acts first.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut acc = self.identity_element();
        for &i in word {
            acc = acc.compose(&self.simple_reflection(i)?)?;
        }
        Ok(acc)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_root_weights
            .iter()
            .filter(|beta| !self.is_positive_root_image(w, beta))
            .count()
    }

    fn is_positive_root_image(&self, w: &WeylElement, beta: &Weight) -> bool {
        let image = w.apply(beta);
        let (_, positive) = self
            .root_index
            .get(image.coords())
            .expect("Weyl element must permute the roots");
        *positive
    }

    /// {i : w(α_i) < 0}, 0-based, sorted.
    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| !self.is_positive_root_image(w, &self.simple_root_weight(i)))
            .collect()
    }

    /// All distinct Coxeter elements, one per group element, sorted by matrix.
    /// Each carries its lexicographically smallest word.
    pub fn coxeter_elements(&self) -> Result<Vec<CoxeterElement>> {
        self.coxeter_elements_with_cap(DEFAULT_RANK_CAP)
    }

    pub fn coxeter_elements_with_cap(&self, cap: usize) -> Result<Vec<CoxeterElement>> {
        let n = self.rank();
        if n > cap {
            return Err(Error::RankCapExceeded { rank: n, cap });
        }
        let refl: Vec<WeylElement> = (0..n)
            .map(|i| self.simple_reflection(i).expect("index in range"))
            .collect();
        let mut found: HashMap<Vec<Vec<i64>>, Vec<usize>> = HashMap::new();
        // DFS in ascending index order: the first word reaching a matrix is
        // the lexicographically smallest one.
        fn dfs(
            prefix: &WeylElement,
            used: &[bool],
            refl: &[WeylElement],
            found: &mut HashMap<Vec<Vec<i64>>, Vec<usize>>,
        ) {
            let n = used.len();
            if prefix.word().len() == n {
                found
                    .entry(prefix.matrix().clone())
                    .or_insert_with(|| prefix.word().to_vec());
                return;
            }
            for i in 0..n {
                if !used[i] {
                    let mut next_used = used.to_vec();
                    next_used[i] = true;
                    let next = prefix.compose(&refl[i]).expect("same system");
                    dfs(&next, &next_used, refl, found);
                }
            }
        }
        dfs(
            &self.identity_element(),
            &vec![false; n],
            &refl,
            &mut found,
        );
        let mut items: Vec<(Vec<Vec<i64>>, Vec<usize>)> = found.into_iter().collect();
        items.sort();
        items
            .into_iter()
            .map(|(matrix, word)| {
                CoxeterElement::new(WeylElement {
                    spec: self.spec,
                    matrix,
                    word,
                })
            })
            .collect()
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.longest
    }

    /// −w₀(χ): dominant when χ is dominant.
    pub fn dual_character(&self, chi: &Weight) -> Weight {
        self.longest.apply(chi).neg()
    }

    /// The full group by closure from the simple reflections, sorted by matrix.
    pub fn weyl_group(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let n = self.rank();
        let refl: Vec<WeylElement> = (0..n)
            .map(|i| self.simple_reflection(i).expect("index in range"))
            .collect();
        let mut seen: HashMap<Vec<Vec<i64>>, Vec<usize>> = HashMap::new();
        let id = self.identity_element();
        seen.insert(id.matrix().clone(), Vec::new());
        let mut queue: VecDeque<WeylElement> = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for r in &refl {
                let next = w.compose(r).expect("same system");
                if seen.len() >= cap && !seen.contains_key(next.matrix()) {
                    return Err(Error::WeylGroupCapExceeded { cap });
                }
                if !seen.contains_key(next.matrix()) {
                    seen.insert(next.matrix().clone(), next.word().to_vec());
                    queue.push_back(next);
                }
            }
        }
        let mut items: Vec<(Vec<Vec<i64>>, Vec<usize>)> = seen.into_iter().collect();
        items.sort();
        Ok(items
            .into_iter()
            .map(|(matrix, word)| WeylElement {
                spec: self.spec,
                matrix,
                word,
            })
            .collect())
    }

    /// Integer matrix of w acting on simple-root coordinates: A⁻¹ M A.
    pub fn root_action_matrix(&self, w: &WeylElement) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut out = vec![vec![0i64; n]; n];
        for j in 0..n {
            // image of α_j, column by column
            let img = w.apply(&self.simple_root_weight(j));
            let rc = self.to_root_coords(&img);
            for i in 0..n {
                let v = rc.coeff(i);
                assert!(v.is_integer(), "Weyl action preserves the root lattice");
                out[i][j] = v.to_integer();
            }
        }
        out
    }

    pub fn apply_to_root_coords(&self, w: &WeylElement, x: &RootCoords) -> RootCoords {
        let n = self.rank();
        // weight coordinates of x (rational), mapped, converted back
        let wc: Vec<Rational> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(self.cartan[i][j]) * x.coeff(j))
                    .sum()
            })
            .collect();
        let mapped: Vec<Rational> = w
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&wc)
                    .map(|(&a, b)| Rational::from_integer(a) * b)
                    .sum()
            })
            .collect();
        let coeffs = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.cartan_inv[i][j] * mapped[j])
                    .sum()
            })
            .collect();
        RootCoords::new(coeffs)
    }

    /// Dominant representative of the W-orbit of μ.
    pub fn make_dominant(&self, mu: &Weight) -> Weight {
        let mut coords = mu.coords().to_vec();
        loop {
            let Some(i) = coords.iter().position(|&c| c < 0) else {
                return Weight::new(coords);
            };
            let c = coords[i];
            // s_i: subtract c · α_i in weight coordinates
            for k in 0..self.rank() {
                coords[k] -= c * self.cartan[k][i];
            }
        }
    }
}

pub(crate) fn compute_longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = rs.identity_element();
    loop {
        let ascent = (0..rs.rank()).find(|&i| {
            let img = w.apply(&rs.simple_root_weight(i));
            rs.root_index
                .get(img.coords())
                .map(|&(_, positive)| positive)
                .expect("Weyl element permutes roots")
        });
        match ascent {
            Some(i) => {
                w = w
                    .compose(&rs.simple_reflection(i).expect("index in range"))
                    .expect("same system");
            }
            None => break,
        }
    }
    assert_eq!(rs.length(&w), rs.num_positive_roots());
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn simple_reflection_on_fundamental_weights() {
        let a2 = rs(Family::A, 2);
        let s1 = a2.simple_reflection(0).unwrap();
        assert_eq!(s1.apply(&Weight::new(vec![1, 0])).coords(), &[-1, 1]);
        assert_eq!(s1.apply(&Weight::new(vec![0, 1])).coords(), &[0, 1]);
        assert!(a2.simple_reflection(2).is_err());
    }

    #[test]
    fn b2_reflection_in_root_coordinates() {
        let b2 = rs(Family::B, 2);
        let s2 = b2.simple_reflection(1).unwrap();
        let x = RootCoords::from_integers(&[1, 2]);
        let img = b2.apply_to_root_coords(&s2, &x);
        assert_eq!(img.integer_coeffs().unwrap(), vec![1, 0]);
    }

    #[test]
    fn reflections_are_involutions_and_braid_order_holds() {
        let a2 = rs(Family::A, 2);
        let s1 = a2.simple_reflection(0).unwrap();
        let s2 = a2.simple_reflection(1).unwrap();
        assert!(s1.compose(&s1).unwrap().is_identity());
        let c = s1.compose(&s2).unwrap();
        let c3 = c.compose(&c).unwrap().compose(&c).unwrap();
        assert!(!c.compose(&c).unwrap().is_identity());
        assert!(c3.is_identity());
    }

    #[test]
    fn compose_rejects_mixed_systems() {
        let a2 = rs(Family::A, 2);
        let b2 = rs(Family::B, 2);
        let s1 = a2.simple_reflection(0).unwrap();
        let t1 = b2.simple_reflection(0).unwrap();
        assert_eq!(s1.compose(&t1).unwrap_err(), Error::MixedRootSystem);
    }

    #[test]
    fn lengths() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.length(&a2.identity_element()), 0);
        assert_eq!(a2.length(a2.longest_element()), 3);
        let a3 = rs(Family::A, 3);
        for c in a3.coxeter_elements().unwrap() {
            assert_eq!(a3.length(c.element()), 3);
        }
    }

    #[test]
    fn descent_sets() {
        let a2 = rs(Family::A, 2);
        assert!(a2.right_descents(&a2.identity_element()).is_empty());
        let s1 = a2.simple_reflection(0).unwrap();
        assert_eq!(a2.right_descents(&s1), vec![0]);

        let a3 = rs(Family::A, 3);
        let w = a3.element_from_word(&[2, 1, 0]).unwrap();
        let descents = a3.right_descents(&w);
        assert_eq!(descents, vec![0]);
    }

    #[test]
    fn coxeter_counts_are_two_to_the_edges() {
        let cases = [
            (Family::A, 2, 2usize),
            (Family::A, 3, 4),
            (Family::B, 3, 4),
            (Family::D, 4, 8),
            (Family::G, 2, 2),
            (Family::A, 1, 1),
        ];
        for (f, n, expect) in cases {
            let sys = rs(f, n);
            assert_eq!(sys.coxeter_elements().unwrap().len(), expect, "{f}{n}");
        }
    }

    #[test]
    fn d4_contains_the_three_named_elements() {
        let d4 = rs(Family::D, 4);
        let elements = d4.coxeter_elements().unwrap();
        for word in [[3, 2, 1, 0], [3, 0, 1, 2], [2, 0, 1, 3]] {
            let w = d4.element_from_word(&word).unwrap();
            assert!(
                elements.iter().any(|c| c.element() == &w),
                "missing {word:?}"
            );
        }
    }

    #[test]
    fn coxeter_enumeration_respects_rank_cap() {
        let a3 = rs(Family::A, 3);
        assert_eq!(
            a3.coxeter_elements_with_cap(2).unwrap_err(),
            Error::RankCapExceeded { rank: 3, cap: 2 }
        );
    }

    #[test]
    fn longest_element_facts() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.longest_element().word(), &[0]);

        let b2 = rs(Family::B, 2);
        let w0 = b2.longest_element();
        for i in 0..2 {
            let mut e = vec![0i64; 2];
            e[i] = 1;
            assert_eq!(w0.apply(&Weight::new(e.clone())).coords(), &[-e[0], -e[1]]);
        }
        let a3 = rs(Family::A, 3);
        let w0 = a3.longest_element();
        assert!(w0.compose(w0).unwrap().is_identity());
        assert_eq!(a3.dual_character(&Weight::new(vec![1, 0, 0])).coords(), &[0, 0, 1]);
        assert_eq!(a3.dual_character(&Weight::new(vec![0, 1, 0])).coords(), &[0, 1, 0]);
    }

    #[test]
    fn dual_character_examples() {
        let a4 = rs(Family::A, 4);
        assert_eq!(
            a4.dual_character(&Weight::new(vec![0, 1, 0, 2])).coords(),
            &[2, 0, 1, 0]
        );
        let b3 = rs(Family::B, 3);
        let chi = Weight::new(vec![2, 1, 0]);
        assert_eq!(b3.dual_character(&chi), chi);
        let a2 = rs(Family::A, 2);
        let alpha0 = a2.highest_long_root().clone();
        assert_eq!(a2.dual_character(&alpha0), alpha0);
    }

    #[test]
    fn dual_character_is_an_involution_preserving_dominance() {
        let a4 = rs(Family::A, 4);
        for seed in 0..20i64 {
            let w = Weight::new((0..4).map(|i| (seed + i) % 3).collect());
            let d = a4.dual_character(&w);
            assert_eq!(a4.dual_character(&d), w);
            if w.is_dominant() {
                assert!(d.is_dominant());
            }
        }
    }

    #[test]
    fn group_action_preserves_the_bilinear_form() {
        for (f, n) in [(Family::B, 2), (Family::G, 2), (Family::A, 3)] {
            let sys = rs(f, n);
            let elements = sys.weyl_group(2000).unwrap();
            let xs: Vec<Weight> = (0..n)
                .map(|i| {
                    let mut c = vec![1i64; n];
                    c[i] = 3;
                    Weight::new(c)
                })
                .collect();
            for w in elements.iter().take(12) {
                for x in &xs {
                    for y in &xs {
                        let lhs = sys.bilinear_form(
                            &sys.to_root_coords(&w.apply(x)),
                            &sys.to_root_coords(&w.apply(y)),
                        );
                        let rhs =
                            sys.bilinear_form(&sys.to_root_coords(x), &sys.to_root_coords(y));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        let cases = [
            (Family::A, 2, 6usize),
            (Family::A, 3, 24),
            (Family::B, 2, 8),
            (Family::B, 3, 48),
            (Family::C, 3, 48),
            (Family::G, 2, 12),
            (Family::D, 4, 192),
        ];
        for (f, n, expect) in cases {
            assert_eq!(rs(f, n).weyl_group(2000).unwrap().len(), expect, "{f}{n}");
        }
        assert_eq!(
            rs(Family::E, 6).weyl_group(2000).unwrap_err(),
            Error::WeylGroupCapExceeded { cap: 2000 }
        );
    }

    #[test]
    fn make_dominant_lands_in_the_orbit() {
        let b3 = rs(Family::B, 3);
        let mu = Weight::new(vec![-2, 1, -1]);
        let dom = b3.make_dominant(&mu);
        assert!(dom.is_dominant());
        let group = b3.weyl_group(2000).unwrap();
        assert!(group.iter().any(|w| w.apply(&mu) == dom));
    }

    #[test]
    fn matrices_permute_the_roots() {
        let g2 = rs(Family::G, 2);
        for c in g2.coxeter_elements().unwrap() {
            for beta in &g2.positive_root_weights {
                let img = c.element().apply(beta);
                assert!(g2.root_index.contains_key(img.coords()));
            }
        }
    }
}
