//! The graded-ring side: Hilbert-function prefixes of the invariant ring,
//! Krull dimension through dim(G/P_J), free-generator inference, and the
//! polynomiality verdict dim H⁰(L_χ)ᵀ ≤ rank.
//!
//! The generator inference is a necessary condition only: a Hilbert series
//! cannot separate a polynomial ring from a non-polynomial ring with the
//! same series. The verdict field `polynomial_by_theorem` is the authority;
//! `hilbert_consistent` corroborates it with the Krull dimension.

use std::collections::BTreeSet;

use crate::characters::DominantCharacter;
use crate::error::Error;
use crate::rootsystem::RootSystem;
use crate::Result;

/// Indices i (0-based) with ⟨χ, α̌_i⟩ ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSupport {
    indices: BTreeSet<usize>,
}

impl ParabolicSupport {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> ParabolicSupport {
        ParabolicSupport {
            indices: indices.into_iter().collect(),
        }
    }

    pub fn of_character(chi: &DominantCharacter) -> ParabolicSupport {
        ParabolicSupport::new(
            chi.weight()
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c >= 1)
                .map(|(i, _)| i),
        )
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }
}

/// h(0), …, h(D) with h(d) = dim H⁰(G/B, L_χ^{⊗d})ᵀ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPrefix {
    chi: DominantCharacter,
    values: Vec<u64>,
}

impl HilbertPrefix {
    pub fn chi(&self) -> &DominantCharacter {
        &self.chi
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, d: usize) -> u64 {
        self.values[d]
    }

    pub fn degree_bound(&self) -> usize {
        self.values.len() - 1
    }

    /// Greedy fit of h against the series of a free commutative algebra:
    /// at each degree the shortfall against the prediction from generators
    /// already inferred contributes new generators of that degree. A negative
    /// shortfall refutes freeness outright.
    pub fn infer_free_generators(&self) -> GeneratorInference {
        let d_max = self.degree_bound();
        let mut degrees: Vec<u32> = Vec::new();
        // free-algebra series on the generators found so far
        let mut series: Vec<i128> = vec![0; d_max + 1];
        series[0] = 1;
        for d in 1..=d_max {
            let observed = self.values[d] as i128;
            if observed < series[d] {
                return GeneratorInference::Inconsistent { degree: d as u32 };
            }
            let shortfall = observed - series[d];
            for _ in 0..shortfall {
                degrees.push(d as u32);
                for j in d..=d_max {
                    series[j] += series[j - d];
                }
            }
        }
        GeneratorInference::Consistent { degrees }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorInference {
    /// Generator degrees as a sorted multiset.
    Consistent { degrees: Vec<u32> },
    /// Observed dimension fell below the free prediction at this degree.
    Inconsistent { degree: u32 },
}

impl GeneratorInference {
    pub fn degrees(&self) -> Option<&[u32]> {
        match self {
            GeneratorInference::Consistent { degrees } => Some(degrees),
            GeneratorInference::Inconsistent { .. } => None,
        }
    }
}

/// Everything the classification records about one character.
#[derive(Debug, Clone)]
pub struct RingVerdict {
    pub chi: DominantCharacter,
    pub witness_count: usize,
    /// 1-based witness words, canonical order.
    pub witness_words: Vec<Vec<usize>>,
    pub zero_weight_dim: u64,
    pub rank: usize,
    pub krull_dim: i64,
    pub hilbert: HilbertPrefix,
    pub generators: GeneratorInference,
    pub polynomial_by_theorem: bool,
    pub hilbert_consistent: bool,
}

impl RootSystem {
    /// Number of positive roots whose support meets J; the dimension of the
    /// partial flag variety G/P_J.
    pub fn dim_g_mod_p(&self, support: &ParabolicSupport) -> Result<usize> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(self
            .positive_root_ints
            .iter()
            .filter(|r| support.indices().any(|j| r[j] >= 1))
            .count())
    }

    /// dim(G/P_J) + 1 − rank for J the support of χ.
    pub fn krull_dim_invariant_ring(&self, chi: &DominantCharacter) -> Result<i64> {
        if chi.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        let dim = self.dim_g_mod_p(&ParabolicSupport::of_character(chi))?;
        Ok(dim as i64 + 1 - self.rank() as i64)
    }

    pub fn hilbert_prefix(&self, chi: &DominantCharacter, d_max: u32) -> Result<HilbertPrefix> {
        let values = (0..=d_max)
            .map(|d| self.invariant_dim(chi.weight(), d))
            .collect::<Result<Vec<u64>>>()?;
        debug_assert_eq!(values[0], 1);
        Ok(HilbertPrefix {
            chi: chi.clone(),
            values,
        })
    }

    /// Assemble the full verdict. `NotApplicable` unless χ is indecomposable
    /// with at least one Coxeter witness.
    pub fn ring_verdict(
        &self,
        chi: &DominantCharacter,
        d_max: u32,
        rank_cap: usize,
    ) -> Result<RingVerdict> {
        if chi.is_zero() || !self.is_indecomposable(chi)? {
            return Err(Error::NotApplicable);
        }
        let witness = self.find_semistable_coxeter(chi, rank_cap)?;
        if !witness.is_semistable() {
            return Err(Error::NotApplicable);
        }
        self.ring_verdict_unchecked(chi, &witness.witnesses, d_max)
    }

    pub(crate) fn ring_verdict_unchecked(
        &self,
        chi: &DominantCharacter,
        witnesses: &[crate::weyl::CoxeterElement],
        d_max: u32,
    ) -> Result<RingVerdict> {
        let hilbert = self.hilbert_prefix(chi, d_max.max(1))?;
        let zero_weight_dim = hilbert.value(1);
        let krull_dim = self.krull_dim_invariant_ring(chi)?;
        let generators = hilbert.infer_free_generators();
        let polynomial_by_theorem = zero_weight_dim <= self.rank() as u64;
        let hilbert_consistent = match &generators {
            GeneratorInference::Consistent { degrees } => degrees.len() as i64 == krull_dim,
            GeneratorInference::Inconsistent { .. } => false,
        };
        Ok(RingVerdict {
            chi: chi.clone(),
            witness_count: witnesses.len(),
            witness_words: witnesses.iter().map(|w| w.word_one_based()).collect(),
            zero_weight_dim,
            rank: self.rank(),
            krull_dim,
            hilbert,
            generators,
            polynomial_by_theorem,
            hilbert_consistent,
        })
    }
}
