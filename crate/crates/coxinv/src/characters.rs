//! Dominant characters of the adjoint torus (dominant weights in the root
//! lattice), indecomposability, and the Coxeter-semistability predicate
//! w(χ) ≤ 0 (every simple-root coefficient nonpositive, zeros allowed).

use crate::error::Error;
use crate::rootsystem::{RootSystem, Weight};
use crate::weyl::CoxeterElement;
use crate::Result;

/// A dominant weight lying in the root lattice, with its integer simple-root
/// coordinates cached. Nonzero characters have every coordinate ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantCharacter {
    weight: Weight,
    root_coords: Vec<i64>,
}

impl DominantCharacter {
    pub fn new(rs: &RootSystem, weight: Weight) -> Result<DominantCharacter> {
        if !weight.is_dominant() {
            return Err(Error::NonDominant);
        }
        let rc = rs.to_root_coords(&weight);
        let root_coords = rc.integer_coeffs().ok_or(Error::NotInRootLattice)?;
        debug_assert!(
            weight.is_zero() || root_coords.iter().all(|&c| c >= 1),
            "nonzero dominant root-lattice elements have strictly positive root coordinates"
        );
        Ok(DominantCharacter {
            weight,
            root_coords,
        })
    }

    pub fn from_root_coords(rs: &RootSystem, coords: &[i64]) -> Result<DominantCharacter> {
        let weight = rs.weight_from_int_root_coords(coords);
        DominantCharacter::new(rs, weight)
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn root_coords(&self) -> &[i64] {
        &self.root_coords
    }

    pub fn is_zero(&self) -> bool {
        self.weight.is_zero()
    }

    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }
}

/// A character together with every Coxeter element witnessing w(χ) ≤ 0,
/// in the canonical (matrix-sorted) order. Empty means no witness exists.
#[derive(Debug, Clone)]
pub struct SemistabilityWitness {
    pub character: DominantCharacter,
    pub witnesses: Vec<CoxeterElement>,
}

impl SemistabilityWitness {
    pub fn is_semistable(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct DescentViolation {
    pub character: DominantCharacter,
    pub witness: CoxeterElement,
    /// 0-based descent indices of the witness.
    pub descents: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct DescentCheck {
    pub holds: bool,
    pub violations: Vec<DescentViolation>,
}

impl RootSystem {
    /// True iff all weight coordinates are ≥ 0 and all simple-root
    /// coordinates are integers.
    pub fn is_dominant_root_lattice(&self, chi: &Weight) -> bool {
        chi.is_dominant() && self.to_root_coords(chi).is_integral()
    }

    /// w(χ) ≤ 0 in simple-root coordinates.
    pub fn coxeter_semistable(&self, w: &CoxeterElement, chi: &DominantCharacter) -> bool {
        let image = w.element().apply(chi.weight());
        self.to_root_coords(&image).is_nonpositive()
    }

    /// All Coxeter witnesses for χ, canonical order.
    pub fn find_semistable_coxeter(
        &self,
        chi: &DominantCharacter,
        rank_cap: usize,
    ) -> Result<SemistabilityWitness> {
        let witnesses = self
            .coxeter_elements_with_cap(rank_cap)?
            .into_iter()
            .filter(|w| self.coxeter_semistable(w, chi))
            .collect();
        Ok(SemistabilityWitness {
            character: chi.clone(),
            witnesses,
        })
    }

    /// No decomposition χ = χ₁ + χ₂ into nonzero dominant root-lattice parts.
    /// Both parts of any split have all root coordinates ≥ 1, so the search
    /// box is 1 ≤ χ₁[j] ≤ χ[j] − 1.
    pub fn is_indecomposable(&self, chi: &DominantCharacter) -> Result<bool> {
        if chi.is_zero() {
            return Err(Error::ZeroCharacter);
        }
        let a = chi.root_coords();
        if a.iter().any(|&c| c < 2) {
            return Ok(true);
        }
        let n = self.rank();
        let mut part = vec![1i64; n];
        loop {
            let part_w = self.weight_from_int_root_coords(&part);
            if part_w.is_dominant() {
                let rest: Vec<i64> = a.iter().zip(&part).map(|(t, p)| t - p).collect();
                let rest_w = self.weight_from_int_root_coords(&rest);
                if rest_w.is_dominant() {
                    return Ok(false);
                }
            }
            // odometer over the box [1, a_j - 1]
            let mut j = 0;
            loop {
                if j == n {
                    return Ok(true);
                }
                part[j] += 1;
                if part[j] < a[j] {
                    break;
                }
                part[j] = 1;
                j += 1;
            }
        }
    }

    /// All indecomposable dominant root-lattice χ of height ≤ `height_bound`
    /// admitting at least one Coxeter witness, each with its full witness
    /// list, sorted by (height, root coordinates).
    pub fn enumerate_semistable_indecomposables(
        &self,
        height_bound: i64,
        rank_cap: usize,
    ) -> Result<Vec<SemistabilityWitness>> {
        let n = self.rank();
        let coxeter = self.coxeter_elements_with_cap(rank_cap)?;
        let root_actions: Vec<Vec<Vec<i64>>> = coxeter
            .iter()
            .map(|c| self.root_action_matrix(c.element()))
            .collect();

        let mut out: Vec<SemistabilityWitness> = Vec::new();
        // nonzero dominant root-lattice characters have all coordinates ≥ 1
        let mut coords = vec![1i64; n];
        if (n as i64) > height_bound {
            return Ok(out);
        }
        loop {
            let weight = self.weight_from_int_root_coords(&coords);
            if weight.is_dominant() {
                let chi = DominantCharacter {
                    weight,
                    root_coords: coords.clone(),
                };
                if self.is_indecomposable(&chi)? {
                    let witnesses: Vec<CoxeterElement> = coxeter
                        .iter()
                        .zip(&root_actions)
                        .filter(|(_, m)| {
                            (0..n).all(|i| {
                                (0..n).map(|j| m[i][j] * coords[j]).sum::<i64>() <= 0
                            })
                        })
                        .map(|(c, _)| c.clone())
                        .collect();
                    if !witnesses.is_empty() {
                        out.push(SemistabilityWitness {
                            character: chi,
                            witnesses,
                        });
                    }
                }
            }
            // odometer over {coords ≥ 1 : Σ coords ≤ height_bound}
            let mut j = 0;
            loop {
                if j == n {
                    out.sort_by_key(|s| (s.character.height(), s.character.root_coords().to_vec()));
                    return Ok(out);
                }
                coords[j] += 1;
                if coords.iter().sum::<i64>() <= height_bound {
                    break;
                }
                coords[j] = 1;
                j += 1;
            }
        }
    }

    /// For type A: every (χ, w) pair found by the enumeration must have the
    /// descent set of w contained in {first, last}. Violations are returned
    /// rather than hidden; `holds` is their absence.
    pub fn verify_descent_lemma(&self, height_bound: i64, rank_cap: usize) -> Result<DescentCheck> {
        if self.family() != crate::rootsystem::Family::A {
            return Err(Error::WrongType);
        }
        let n = self.rank();
        let allowed = |i: usize| i == 0 || i == n - 1;
        let mut violations = Vec::new();
        for entry in self.enumerate_semistable_indecomposables(height_bound, rank_cap)? {
            for w in &entry.witnesses {
                let descents = self.right_descents(w.element());
                if !descents.iter().all(|&i| allowed(i)) {
                    violations.push(DescentViolation {
                        character: entry.character.clone(),
                        witness: w.clone(),
                        descents,
                    });
                }
            }
        }
        Ok(DescentCheck {
            holds: violations.is_empty(),
            violations,
        })
    }
}
