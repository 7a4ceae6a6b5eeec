//! Dimensions and weight multiplicities of irreducible highest-weight
//! modules, all exact.
//!
//! Two independent routes are provided on purpose: the Freudenthal recursion
//! (production path, memoized on dominant orbit representatives) and an
//! alternating sum over the Weyl group against a Kostant partition counter
//! (oracle path, capped by |W|). They must agree wherever both run.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::Error;
use crate::rootsystem::{Rational, RootCoords, RootSystem, Weight};
use crate::Result;

#[derive(Debug, Clone)]
pub struct WeightMultiplicityTable {
    highest: Weight,
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiplicityTable {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn total_dimension(&self) -> u64 {
        self.entries.values().sum()
    }
}

impl RootSystem {
    /// ∏_{α>0} ⟨λ+ρ, α̌⟩ / ⟨ρ, α̌⟩, evaluated exactly and asserted integral.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        if !lambda.is_dominant() {
            return Err(Error::NonDominant);
        }
        let shifted = lambda.add(self.rho());
        let mut acc = BigRational::one();
        for coroot in &self.coroot_coords {
            let num = pair_with_coroot(coroot, &shifted);
            let den = pair_with_coroot(coroot, self.rho());
            debug_assert!(num.is_integer() && den.is_integer());
            acc *= BigRational::new(
                BigInt::from(num.to_integer()),
                BigInt::from(den.to_integer()),
            );
        }
        assert!(acc.is_integer(), "Weyl dimension must be an integer");
        let dim = acc.to_integer().to_u64().expect("dimension fits in u64");
        Ok(dim)
    }

    /// The saturated weight set of V(λ): closure of {λ} under the simple
    /// root strings μ − α_i, …, μ − ⟨μ,α̌_i⟩α_i.
    pub(crate) fn irrep_weight_set(&self, lambda: &Weight) -> HashSet<Vec<i64>> {
        let n = self.rank();
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        set.insert(lambda.coords().to_vec());
        let mut queue: VecDeque<Vec<i64>> = VecDeque::from([lambda.coords().to_vec()]);
        while let Some(mu) = queue.pop_front() {
            for i in 0..n {
                let c = mu[i];
                if c <= 0 {
                    continue;
                }
                let mut nu = mu.clone();
                for _ in 0..c {
                    for k in 0..n {
                        nu[k] -= self.cartan[k][i];
                    }
                    if set.insert(nu.clone()) {
                        queue.push_back(nu.clone());
                    }
                }
            }
        }
        set
    }

    /// Freudenthal multiplicities on the dominant weights of V(λ), keyed by
    /// weight coordinates.
    fn freudenthal_dominant(&self, lambda: &Weight) -> Result<HashMap<Vec<i64>, u64>> {
        if !lambda.is_dominant() {
            return Err(Error::NonDominant);
        }
        let n = self.rank();
        let weights = self.irrep_weight_set(lambda);
        let lambda_rc = self.to_root_coords(lambda);

        // dominant weights sorted by depth below λ
        let mut dominants: Vec<(i64, Vec<i64>)> = Vec::new();
        for mu in &weights {
            if mu.iter().all(|&c| c >= 0) {
                let diff = lambda.sub(&Weight::new(mu.clone()));
                let depth = self
                    .to_root_coords(&diff)
                    .integer_coeffs()
                    .expect("weights of one module differ by root-lattice elements")
                    .iter()
                    .sum();
                dominants.push((depth, mu.clone()));
            }
        }
        dominants.sort();
        debug_assert_eq!(dominants[0], (0, lambda.coords().to_vec()));

        // per-root constants
        let roots = &self.positive_root_ints;
        let root_norms: Vec<Rational> = roots
            .iter()
            .map(|r| self.norm_sq(&RootCoords::from_integers(r)))
            .collect();
        let root_wcs: Vec<&[i64]> = (0..roots.len())
            .map(|idx| self.positive_root_weights[idx].coords())
            .collect();

        let rho_rc = self.to_root_coords(self.rho());
        let top_norm = self.norm_sq(&lambda_rc.add(&rho_rc));

        let mut memo: HashMap<Vec<i64>, u64> = HashMap::new();
        memo.insert(lambda.coords().to_vec(), 1);

        for (depth, mu) in dominants.iter().skip(1) {
            let mu_w = Weight::new(mu.clone());
            let mu_rc = self.to_root_coords(&mu_w);
            let beta = self
                .to_root_coords(&lambda.sub(&mu_w))
                .integer_coeffs()
                .expect("integral difference");
            debug_assert_eq!(beta.iter().sum::<i64>(), *depth);

            let mut rhs = Rational::from_integer(0);
            for (idx, alpha) in roots.iter().enumerate() {
                // (μ + kα, α) = (μ, α) + k (α, α)
                let mut inner = self.bilinear_form(&mu_rc, &RootCoords::from_integers(alpha));
                let mut remaining = beta.clone();
                let mut nu = mu.clone();
                loop {
                    let mut ok = true;
                    for j in 0..n {
                        remaining[j] -= alpha[j];
                        if remaining[j] < 0 {
                            ok = false;
                        }
                    }
                    if !ok {
                        break;
                    }
                    inner += root_norms[idx];
                    for k in 0..n {
                        nu[k] += root_wcs[idx][k];
                    }
                    let dom = self.make_dominant(&Weight::new(nu.clone()));
                    if let Some(&m) = memo.get(dom.coords()) {
                        if m > 0 {
                            rhs += inner * Rational::from_integer(m as i64);
                        }
                    }
                }
            }

            let denom = top_norm - self.norm_sq(&mu_rc.add(&rho_rc));
            assert!(denom.is_positive(), "Freudenthal denominator must be positive");
            let value = Rational::from_integer(2) * rhs / denom;
            assert!(value.is_integer(), "Freudenthal multiplicity must be integral");
            let value = value.to_integer();
            assert!(value >= 0);
            memo.insert(mu.clone(), value as u64);
        }
        Ok(memo)
    }

    /// Multiplicity of μ in V(λ) (0 when λ − μ is not in the positive root
    /// cone).
    pub fn weight_multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        if !lambda.is_dominant() {
            return Err(Error::NonDominant);
        }
        let diff = self.to_root_coords(&lambda.sub(mu));
        if !diff.is_integral() || !diff.is_nonnegative() {
            return Ok(0);
        }
        let memo = self.freudenthal_dominant(lambda)?;
        let dom = self.make_dominant(mu);
        Ok(memo.get(dom.coords()).copied().unwrap_or(0))
    }

    /// Full multiplicity table of V(λ), W-orbit expanded.
    pub fn multiplicity_table(&self, lambda: &Weight) -> Result<WeightMultiplicityTable> {
        let memo = self.freudenthal_dominant(lambda)?;
        let mut entries = BTreeMap::new();
        for mu in self.irrep_weight_set(lambda) {
            let mu_w = Weight::new(mu);
            let dom = self.make_dominant(&mu_w);
            let m = memo.get(dom.coords()).copied().unwrap_or(0);
            if m > 0 {
                entries.insert(mu_w, m);
            }
        }
        Ok(WeightMultiplicityTable {
            highest: lambda.clone(),
            entries,
        })
    }

    /// dim H⁰(G/B, L_χ^{⊗d})ᵀ: the zero-weight multiplicity of V(dχ).
    /// Zero when dominant χ is outside the root lattice.
    pub fn invariant_dim(&self, chi: &Weight, d: u32) -> Result<u64> {
        if !chi.is_dominant() {
            return Err(Error::NonDominant);
        }
        if !self.to_root_coords(chi).is_integral() {
            return Ok(0);
        }
        let scaled = chi.scaled(d as i64);
        self.weight_multiplicity(&scaled, &Weight::zero(self.rank()))
    }

    /// Freudenthal check by the independent alternating-sum route.
    pub fn kostant_multiplicity(
        &self,
        lambda: &Weight,
        mu: &Weight,
        weyl_cap: usize,
    ) -> Result<u64> {
        let mut oracle = KostantOracle::new(self, weyl_cap)?;
        oracle.multiplicity(lambda, mu)
    }
}

fn pair_with_coroot(coroot: &[Rational], w: &Weight) -> Rational {
    coroot
        .iter()
        .zip(w.coords())
        .map(|(c, &v)| c * Rational::from_integer(v))
        .sum()
}

/// Multiplicities as Σ_w (−1)^{l(w)} P(w(λ+ρ) − (μ+ρ)), with P a partition
/// counter over the positive roots. Shares its memo across queries.
pub struct KostantOracle<'a> {
    rs: &'a RootSystem,
    signed_elements: Vec<(Vec<Vec<i64>>, bool)>,
    roots_desc: Vec<Vec<i64>>,
    memo: HashMap<(usize, Vec<i64>), u128>,
}

impl<'a> KostantOracle<'a> {
    pub fn new(rs: &'a RootSystem, weyl_cap: usize) -> Result<KostantOracle<'a>> {
        let group = rs.weyl_group(weyl_cap)?;
        let signed_elements = group
            .iter()
            .map(|w| (w.matrix().clone(), rs.length(w) % 2 == 1))
            .collect();
        let mut roots_desc = rs.positive_root_ints.clone();
        roots_desc.sort_by_key(|r| std::cmp::Reverse((r.iter().sum::<i64>(), r.clone())));
        Ok(KostantOracle {
            rs,
            signed_elements,
            roots_desc,
            memo: HashMap::new(),
        })
    }

    pub fn multiplicity(&mut self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        if !lambda.is_dominant() {
            return Err(Error::NonDominant);
        }
        let shifted = lambda.add(self.rs.rho());
        let target = mu.add(self.rs.rho());
        let mut total: i128 = 0;
        for idx in 0..self.signed_elements.len() {
            let (matrix, odd) = self.signed_elements[idx].clone();
            let image: Vec<i64> = matrix
                .iter()
                .map(|row| row.iter().zip(shifted.coords()).map(|(a, b)| a * b).sum())
                .collect();
            let diff = Weight::new(image).sub(&target);
            let rc = self.rs.to_root_coords(&diff);
            let Some(v) = rc.integer_coeffs() else {
                continue;
            };
            if v.iter().any(|&c| c < 0) {
                continue;
            }
            let count = self.partition_count(0, v) as i128;
            total += if odd { -count } else { count };
        }
        assert!(total >= 0, "Kostant alternating sum must be nonnegative");
        Ok(total as u64)
    }

    /// Number of ways to write v as a nonnegative combination of
    /// roots_desc[i..].
    fn partition_count(&mut self, i: usize, v: Vec<i64>) -> u128 {
        if v.iter().all(|&c| c == 0) {
            return 1;
        }
        if i >= self.roots_desc.len() {
            return 0;
        }
        if let Some(&cached) = self.memo.get(&(i, v.clone())) {
            return cached;
        }
        let alpha = self.roots_desc[i].clone();
        let kmax = v
            .iter()
            .zip(&alpha)
            .filter(|(_, &a)| a > 0)
            .map(|(&c, &a)| c / a)
            .min()
            .unwrap_or(0);
        let mut total: u128 = 0;
        for k in 0..=kmax {
            let rest: Vec<i64> = v.iter().zip(&alpha).map(|(&c, &a)| c - k * a).collect();
            total += self.partition_count(i + 1, rest);
        }
        self.memo.insert((i, v), total);
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::Family;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn weyl_dim_examples() {
        let b3 = rs(Family::B, 3);
        assert_eq!(b3.weyl_dim(&Weight::new(vec![2, 0, 0])).unwrap(), 27);
        let d4 = rs(Family::D, 4);
        assert_eq!(d4.weyl_dim(&Weight::new(vec![2, 0, 0, 0])).unwrap(), 35);
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.weyl_dim(&Weight::zero(2)).unwrap(), 1);
        assert_eq!(a2.weyl_dim(a2.highest_long_root()).unwrap(), 8);
        assert_eq!(
            a2.weyl_dim(&Weight::new(vec![-1, 0])).unwrap_err(),
            Error::NonDominant
        );
    }

    #[test]
    fn adjoint_zero_weight_space_has_rank_dimension() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            a2.weight_multiplicity(a2.highest_long_root(), &Weight::zero(2))
                .unwrap(),
            2
        );
        let b2 = rs(Family::B, 2);
        assert_eq!(
            b2.weight_multiplicity(b2.highest_long_root(), &Weight::zero(2))
                .unwrap(),
            2
        );
    }

    #[test]
    fn freudenthal_examples() {
        let b3 = rs(Family::B, 3);
        assert_eq!(
            b3.weight_multiplicity(&Weight::new(vec![2, 0, 0]), &Weight::zero(3))
                .unwrap(),
            3
        );
        let a4 = rs(Family::A, 4);
        assert_eq!(
            a4.weight_multiplicity(&Weight::new(vec![2, 0, 1, 0]), &Weight::zero(4))
                .unwrap(),
            6
        );
    }

    #[test]
    fn kostant_examples() {
        let a2 = rs(Family::A, 2);
        let adjoint = a2.highest_long_root().clone();
        let alpha1 = a2.simple_root_weight(0);
        assert_eq!(a2.kostant_multiplicity(&adjoint, &alpha1, 100).unwrap(), 1);
        assert_eq!(
            a2.kostant_multiplicity(&adjoint.scaled(2), &Weight::zero(2), 100)
                .unwrap(),
            3
        );
        let b2 = rs(Family::B, 2);
        assert_eq!(
            b2.kostant_multiplicity(b2.highest_long_root(), &Weight::zero(2), 100)
                .unwrap(),
            2
        );
    }

    #[test]
    fn invariant_dim_examples() {
        let a3 = rs(Family::A, 3);
        assert_eq!(a3.invariant_dim(&Weight::new(vec![0, 2, 0]), 1).unwrap(), 2);
        let a4 = rs(Family::A, 4);
        assert_eq!(
            a4.invariant_dim(&Weight::new(vec![5, 0, 0, 0]), 1).unwrap(),
            1
        );
        let d4 = rs(Family::D, 4);
        assert_eq!(
            d4.invariant_dim(&Weight::new(vec![2, 0, 0, 0]), 1).unwrap(),
            3
        );
        // dominant but outside the root lattice: empty zero-weight space
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.invariant_dim(&Weight::new(vec![1, 0]), 1).unwrap(), 0);
        assert_eq!(
            a2.invariant_dim(&Weight::new(vec![-1, 0]), 1).unwrap_err(),
            Error::NonDominant
        );
    }

    #[test]
    fn table_sums_to_weyl_dim() {
        for (f, n, lambda) in [
            (Family::A, 2, vec![1, 1]),
            (Family::A, 3, vec![2, 0, 1]),
            (Family::B, 2, vec![1, 2]),
            (Family::B, 3, vec![2, 0, 0]),
            (Family::G, 2, vec![0, 1]),
            (Family::C, 3, vec![2, 0, 0]),
        ] {
            let sys = rs(f, n);
            let lam = Weight::new(lambda);
            let table = sys.multiplicity_table(&lam).unwrap();
            assert_eq!(
                table.total_dimension(),
                sys.weyl_dim(&lam).unwrap(),
                "{f}{n}"
            );
        }
    }

    #[test]
    fn multiplicities_are_weyl_invariant() {
        let b2 = rs(Family::B, 2);
        let lam = Weight::new(vec![2, 2]);
        let table = b2.multiplicity_table(&lam).unwrap();
        for w in b2.weyl_group(100).unwrap() {
            for (mu, m) in table.entries() {
                assert_eq!(table.multiplicity(&w.apply(mu)), *m);
            }
        }
    }

    #[test]
    fn freudenthal_matches_kostant_on_a_sample() {
        let g2 = rs(Family::G, 2);
        let mut oracle = KostantOracle::new(&g2, 100).unwrap();
        for lam_coords in [vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0]] {
            let lam = Weight::new(lam_coords);
            let table = g2.multiplicity_table(&lam).unwrap();
            for (mu, m) in table.entries() {
                assert_eq!(oracle.multiplicity(&lam, mu).unwrap(), *m);
            }
            // and a weight outside the module
            assert_eq!(
                oracle
                    .multiplicity(&lam, &lam.add(&Weight::new(vec![1, 0])))
                    .unwrap(),
                0
            );
        }
    }

    #[test]
    fn oracle_respects_weyl_cap() {
        let b3 = rs(Family::B, 3);
        assert_eq!(
            KostantOracle::new(&b3, 10).err(),
            Some(Error::WeylGroupCapExceeded { cap: 10 })
        );
    }
}
