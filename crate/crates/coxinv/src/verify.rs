//! The full verification suite: every classification claim the crate
//! reproduces, as named checks with expected and computed values. The report
//! passes iff every check passes; a failing check is a finding, not an
//! error.

use num_rational::Ratio;

use crate::characters::DominantCharacter;
use crate::multiplicity::KostantOracle;
use crate::report::{classify_report, Check, Parameters, Report};
use crate::rootsystem::{Family, RootSystem, Weight};
use crate::weyl::DEFAULT_RANK_CAP;
use crate::{Result, DEFAULT_WEYL_CAP};

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Upper rank for the classical-family sweeps.
    pub max_rank: usize,
    pub weyl_cap: usize,
    pub rank_cap: usize,
    pub degree_bound: u32,
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_rank: 6,
            weyl_cap: DEFAULT_WEYL_CAP,
            rank_cap: DEFAULT_RANK_CAP,
            degree_bound: 4,
            threads: 1,
        }
    }
}

pub fn paper_report(opts: VerifyOptions) -> Result<Report> {
    let mut report = Report::new(
        None,
        Parameters {
            degree_bound: Some(opts.degree_bound),
            weyl_cap: Some(opts.weyl_cap),
            rank_cap: Some(opts.rank_cap),
            max_rank: Some(opts.max_rank),
            ..Parameters::default()
        },
    );
    let checks = &mut report.checks;
    root_count_checks(checks, opts)?;
    coxeter_count_checks(checks, opts)?;
    oracle_agreement_checks(checks, opts)?;
    dimension_checks(checks, opts)?;
    binomial_checks(checks, opts)?;
    flag_dimension_checks(checks)?;
    coxeter_gate_checks(checks, opts)?;
    hilbert_law_checks(checks, opts)?;
    enumeration_checks(checks, opts)?;
    sweep_checks(checks, opts)?;
    descent_checks(checks, opts)?;
    grading_checks(checks, opts)?;
    determinism_check(checks, opts)?;
    Ok(report)
}

fn sys(f: Family, n: usize) -> Result<RootSystem> {
    RootSystem::new(f, n)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn classical_ranks(min: usize, cap: usize, opts: VerifyOptions) -> Vec<usize> {
    (min..=cap.min(opts.max_rank)).collect()
}

fn root_count_checks(checks: &mut Vec<Check>, _opts: VerifyOptions) -> Result<()> {
    let mut cases: Vec<(Family, usize, usize)> = Vec::new();
    for n in 1..=8 {
        cases.push((Family::A, n, n * (n + 1) / 2));
    }
    for n in 2..=8 {
        cases.push((Family::B, n, n * n));
        cases.push((Family::C, n, n * n));
    }
    for n in 4..=8 {
        cases.push((Family::D, n, n * (n - 1)));
    }
    cases.push((Family::E, 6, 36));
    cases.push((Family::E, 7, 63));
    cases.push((Family::E, 8, 120));
    cases.push((Family::F, 4, 24));
    cases.push((Family::G, 2, 6));
    for (f, n, expected) in cases {
        let rs = sys(f, n)?;
        checks.push(Check::compare(
            &format!("root_count_{f}{n}").to_lowercase(),
            "number of positive roots equals the classical closed form",
            expected,
            rs.num_positive_roots(),
        ));
    }
    Ok(())
}

fn dynkin_edges(rs: &RootSystem) -> usize {
    let n = rs.rank();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if rs.cartan()[i][j] != 0 {
                count += 1;
            }
        }
    }
    count
}

fn coxeter_count_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let mut cases: Vec<(Family, usize)> = Vec::new();
    for n in classical_ranks(1, 6, opts) {
        cases.push((Family::A, n));
    }
    for n in classical_ranks(2, 4, opts) {
        cases.push((Family::B, n));
        cases.push((Family::C, n));
    }
    if opts.max_rank >= 4 {
        cases.push((Family::D, 4));
    }
    cases.push((Family::G, 2));
    for (f, n) in cases {
        let rs = sys(f, n)?;
        let expected = 1usize << dynkin_edges(&rs);
        let actual = rs.coxeter_elements_with_cap(opts.rank_cap)?.len();
        checks.push(Check::compare(
            &format!("coxeter_count_{f}{n}").to_lowercase(),
            "number of distinct Coxeter elements equals 2^(diagram edges)",
            expected,
            actual,
        ));
    }
    Ok(())
}

/// Dominant weights of root-basis height ≤ `height`, by weight coordinates.
fn dominant_weights_up_to_height(rs: &RootSystem, height: i64) -> Vec<Weight> {
    let n = rs.rank();
    let fw_heights: Vec<Ratio<i64>> = (0..n).map(|i| rs.fundamental_weight(i).height()).collect();
    let bound = Ratio::from_integer(height);
    let caps: Vec<i64> = fw_heights.iter().map(|h| (bound / h).floor().to_integer()).collect();
    let mut out = Vec::new();
    let mut coords = vec![0i64; n];
    'outer: loop {
        let total: Ratio<i64> = coords
            .iter()
            .zip(&fw_heights)
            .map(|(&c, h)| Ratio::from_integer(c) * h)
            .sum();
        if total <= bound {
            out.push(Weight::new(coords.clone()));
        }
        let mut j = 0;
        loop {
            if j == n {
                break 'outer;
            }
            coords[j] += 1;
            if coords[j] <= caps[j] {
                break;
            }
            coords[j] = 0;
            j += 1;
        }
    }
    out.sort();
    out
}

fn oracle_agreement_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let types = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::G, 2),
    ];
    for (f, n) in types {
        let rs = sys(f, n)?;
        let mut oracle = KostantOracle::new(&rs, opts.weyl_cap)?;
        let mut pairs = 0usize;
        let mut mismatches = Vec::new();
        // μ ranges over an independently enumerated box, not the table's own
        // weight set, so a dropped weight shows up as a 0-vs-oracle mismatch.
        let dominants = dominant_weights_up_to_height(&rs, 8);
        for lambda in &dominants {
            let table = rs.multiplicity_table(lambda)?;
            for mu in &dominants {
                let diff = rs.to_root_coords(&lambda.sub(mu));
                if !diff.is_integral() {
                    continue;
                }
                let freudenthal = table.multiplicity(mu);
                let kostant = oracle.multiplicity(lambda, mu)?;
                pairs += 1;
                if freudenthal != kostant {
                    mismatches.push(format!("λ={lambda} μ={mu}: {freudenthal} vs {kostant}"));
                }
            }
        }
        checks.push(Check::assert(
            &format!("multiplicity_oracle_agreement_{f}{n}").to_lowercase(),
            "recursion and alternating-sum multiplicities agree on all dominant pairs of height at most 8",
            "0 mismatches",
            &if mismatches.is_empty() {
                format!("0 mismatches over {pairs} pairs")
            } else {
                format!("{} mismatches: {}", mismatches.len(), mismatches.join("; "))
            },
            mismatches.is_empty(),
        ));
    }
    Ok(())
}

fn dimension_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    for n in classical_ranks(2, 4, opts) {
        let rs = sys(Family::B, n)?;
        let mut coords = vec![0i64; n];
        coords[0] = 2;
        let two_omega1 = Weight::new(coords);
        checks.push(Check::compare(
            &format!("dim_v_two_omega1_b{n}"),
            "dim V(2ω1) for the odd orthogonal group equals n(2n+3)",
            (n * (2 * n + 3)) as u64,
            rs.weyl_dim(&two_omega1)?,
        ));
        checks.push(Check::compare(
            &format!("zero_weight_two_omega1_b{n}"),
            "dim of the zero weight space of V(2ω1) equals the rank",
            n as u64,
            rs.invariant_dim(&two_omega1, 1)?,
        ));
    }
    if opts.max_rank >= 4 {
        let d4 = sys(Family::D, 4)?;
        let two_omega1 = Weight::new(vec![2, 0, 0, 0]);
        checks.push(Check::compare(
            "dim_v_two_omega1_d4",
            "dim V(2ω1) for the even orthogonal group in rank 4 equals 35",
            35,
            d4.weyl_dim(&two_omega1)?,
        ));
        checks.push(Check::compare(
            "zero_weight_two_omega1_d4",
            "dim of the zero weight space of V(2ω1) equals 3",
            3,
            d4.invariant_dim(&two_omega1, 1)?,
        ));
    }
    // adjoint zero weight = rank, across every supported type
    let mut adjoint_cases: Vec<(Family, usize)> = Vec::new();
    for n in classical_ranks(1, 6, opts) {
        adjoint_cases.push((Family::A, n));
    }
    for n in classical_ranks(2, 4, opts) {
        adjoint_cases.push((Family::B, n));
        adjoint_cases.push((Family::C, n));
    }
    for n in classical_ranks(4, 5, opts) {
        adjoint_cases.push((Family::D, n));
    }
    adjoint_cases.extend([
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
        (Family::F, 4),
        (Family::G, 2),
    ]);
    for (f, n) in adjoint_cases {
        let rs = sys(f, n)?;
        checks.push(Check::compare(
            &format!("adjoint_zero_weight_{f}{n}").to_lowercase(),
            "zero weight space of the adjoint module has dimension equal to the rank",
            n as u64,
            rs.invariant_dim(rs.highest_long_root(), 1)?,
        ));
    }
    Ok(())
}

fn hook_weight(rank: usize, i: usize) -> Weight {
    // iω1 + ω_{n−i} for the type A_{rank} system with n = rank + 1
    let n = rank + 1;
    let mut coords = vec![0i64; rank];
    coords[0] += i as i64;
    coords[n - i - 1] += 1;
    Weight::new(coords)
}

fn binomial_checks(checks: &mut Vec<Check>, _opts: VerifyOptions) -> Result<()> {
    for n in [5usize, 6] {
        let rank = n - 1;
        let rs = sys(Family::A, rank)?;
        for i in 2..=n - 3 {
            let chi = hook_weight(rank, i);
            let expected = binomial((n - 1) as u64, i as u64);
            let actual = rs.invariant_dim(&chi, 1)?;
            checks.push(Check::compare(
                &format!("zero_weight_binomial_a{rank}_i{i}"),
                "zero weight space of V(iω1+ω_{n−i}) counts hook standard tableaux C(n−1,i)",
                expected,
                actual,
            ));
            let dual = rs.dual_character(&chi);
            checks.push(Check::compare(
                &format!("zero_weight_binomial_dual_a{rank}_i{i}"),
                "the dual character has the same zero weight dimension",
                actual,
                rs.invariant_dim(&dual, 1)?,
            ));
        }
    }
    Ok(())
}

fn flag_dimension_checks(checks: &mut Vec<Check>) -> Result<()> {
    use crate::ringanalysis::ParabolicSupport;
    let cases: Vec<(Family, usize, usize, usize)> = vec![
        (Family::B, 4, 1, 11),
        (Family::D, 4, 1, 9),
        (Family::D, 5, 1, 13),
        (Family::E, 6, 1, 21),
        (Family::E, 7, 0, 33),
        (Family::E, 8, 7, 57),
        (Family::G, 2, 1, 5),
    ];
    for (f, n, j, expected) in cases {
        let rs = sys(f, n)?;
        checks.push(Check::compare(
            &format!("flag_dim_{f}{n}_j{}", j + 1).to_lowercase(),
            "dimension of G/P for the adjoint parabolic equals the pinned value",
            expected,
            rs.dim_g_mod_p(&ParabolicSupport::new([j]))?,
        ));
    }
    let f4 = sys(Family::F, 4)?;
    let dim = f4.dim_g_mod_p(&ParabolicSupport::new([0]))?;
    checks.push(Check::assert(
        "flag_dim_f4_j1",
        "dimension of F4/P1 is at least 8 (exact value recorded)",
        ">= 8",
        &format!("{dim}"),
        dim >= 8,
    ));
    Ok(())
}

fn coxeter_gate_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let mut cases: Vec<(Family, usize, bool)> = Vec::new();
    for n in classical_ranks(1, 6, opts) {
        cases.push((Family::A, n, true));
    }
    for n in classical_ranks(2, 4, opts) {
        cases.push((Family::B, n, n == 2));
        cases.push((Family::C, n, true));
    }
    for n in classical_ranks(4, 5, opts) {
        cases.push((Family::D, n, false));
    }
    cases.extend([
        (Family::E, 6, false),
        (Family::F, 4, false),
        (Family::G, 2, false),
    ]);
    for (f, n, expected) in cases {
        let rs = sys(f, n)?;
        let alpha0 = DominantCharacter::new(&rs, rs.highest_long_root().clone())?;
        let witness = rs.find_semistable_coxeter(&alpha0, opts.rank_cap)?;
        checks.push(Check::compare(
            &format!("coxeter_gate_{f}{n}").to_lowercase(),
            "the highest long root admits a Coxeter witness exactly in the linear and rank-2 orthogonal/symplectic families",
            expected,
            witness.is_semistable(),
        ));
    }
    Ok(())
}

fn hilbert_law_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let d_max = opts.degree_bound.max(4);
    // isomorphism types: h(d) = C(n+d−1, d) on the nose
    for (f, n) in [
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 3),
    ] {
        let rs = sys(f, n)?;
        let alpha0 = DominantCharacter::new(&rs, rs.highest_long_root().clone())?;
        let prefix = rs.hilbert_prefix(&alpha0, d_max)?;
        let expected: Vec<u64> = (0..=d_max as u64)
            .map(|d| binomial(n as u64 + d - 1, d))
            .collect();
        checks.push(Check::compare(
            &format!("hilbert_free_series_{f}{n}").to_lowercase(),
            "the highest-long-root grading matches the free series on rank many degree-1 generators",
            expected,
            prefix.values().to_vec(),
        ));
    }
    // strict-growth types: ≥ everywhere, > somewhere by degree 3
    for (f, n) in [(Family::B, 3), (Family::D, 4), (Family::G, 2)] {
        let rs = sys(f, n)?;
        let alpha0 = DominantCharacter::new(&rs, rs.highest_long_root().clone())?;
        let prefix = rs.hilbert_prefix(&alpha0, d_max)?;
        let lower: Vec<u64> = (0..=d_max as u64)
            .map(|d| binomial(n as u64 + d - 1, d))
            .collect();
        let ge_all = prefix.values().iter().zip(&lower).all(|(h, b)| h >= b);
        let gt_by_three = prefix
            .values()
            .iter()
            .zip(&lower)
            .take(4)
            .any(|(h, b)| h > b);
        checks.push(Check::assert(
            &format!("hilbert_lower_bound_{f}{n}").to_lowercase(),
            "polynomial subring forces h(d) at least C(n+d−1,d) in every degree",
            "h >= C(n+d-1,d) for all d",
            &format!("h={:?}, bound={lower:?}", prefix.values()),
            ge_all,
        ));
        checks.push(Check::assert(
            &format!("hilbert_strict_growth_{f}{n}").to_lowercase(),
            "h(d) exceeds C(n+d−1,d) for some degree at most 3",
            "strict excess by degree 3",
            &format!("h={:?}, bound={lower:?}", prefix.values()),
            gt_by_three,
        ));
    }
    Ok(())
}

fn enumeration_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let cases: Vec<(Family, usize, i64, Vec<Vec<i64>>)> = vec![
        (
            Family::A,
            2,
            12,
            vec![vec![1, 1], vec![1, 2], vec![2, 1]],
        ),
        (Family::B, 2, 12, vec![vec![1, 1], vec![1, 2]]),
        (
            Family::A,
            3,
            16,
            vec![
                vec![1, 1, 1],
                vec![1, 2, 1],
                vec![1, 2, 3],
                vec![3, 2, 1],
            ],
        ),
    ];
    for (f, n, bound, mut expected) in cases {
        let rs = sys(f, n)?;
        expected.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        let actual: Vec<Vec<i64>> = rs
            .enumerate_semistable_indecomposables(bound, opts.rank_cap)?
            .into_iter()
            .map(|s| s.character.root_coords().to_vec())
            .collect();
        checks.push(Check::compare(
            &format!("enumeration_{f}{n}_height{bound}").to_lowercase(),
            "the indecomposable Coxeter-semistable characters up to the height bound are exactly the classified list",
            expected,
            actual,
        ));
    }
    Ok(())
}

fn sweep_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let types = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
    ];
    for (f, n) in types {
        let rs = sys(f, n)?;
        let entries = rs.enumerate_semistable_indecomposables(20, opts.rank_cap)?;
        let verdicts = crate::parallel::map_ordered(&entries, opts.threads, |entry| {
            rs.ring_verdict_unchecked(&entry.character, &entry.witnesses, opts.degree_bound)
        });
        let mut bad = Vec::new();
        for (entry, verdict) in entries.iter().zip(verdicts) {
            let v = verdict?;
            let coherent = if v.polynomial_by_theorem {
                v.hilbert_consistent
            } else {
                let gens_mismatch = v
                    .generators
                    .degrees()
                    .is_none_or(|d| d.len() as i64 != v.krull_dim);
                v.zero_weight_dim > v.krull_dim as u64 || gens_mismatch
            };
            if !coherent {
                bad.push(format!("{:?}", entry.character.root_coords()));
            }
        }
        checks.push(Check::assert(
            &format!("sweep_coherence_{f}{n}").to_lowercase(),
            "each verdict is corroborated: polynomial rings have free-consistent Hilbert data, refuted rings show the dimension obstruction",
            &format!("{} characters coherent", entries.len()),
            &if bad.is_empty() {
                format!("{} characters coherent", entries.len())
            } else {
                format!("incoherent: {}", bad.join("; "))
            },
            bad.is_empty(),
        ));
    }
    // the pinned non-polynomial witness
    let a4 = sys(Family::A, 4)?;
    let chi = DominantCharacter::new(&a4, Weight::new(vec![2, 0, 1, 0]))?;
    let v = a4.ring_verdict(&chi, opts.degree_bound, opts.rank_cap)?;
    checks.push(Check::compare(
        "nonpolynomial_witness_a4",
        "2ω1+ω3 in rank 4: zero weight dimension 6 exceeds Krull dimension 5, so the ring is not polynomial",
        (6u64, 5i64, false),
        (v.zero_weight_dim, v.krull_dim, v.polynomial_by_theorem),
    ));
    Ok(())
}

fn descent_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    for (n, bound) in [(2usize, 12i64), (4, 20), (5, 20)] {
        let rs = sys(Family::A, n)?;
        let check = rs.verify_descent_lemma(bound, opts.rank_cap)?;
        checks.push(Check::assert(
            &format!("descent_confinement_a{n}"),
            "witnessing Coxeter elements only descend at the diagram ends",
            "0 violations",
            &format!("{} violations", check.violations.len()),
            check.holds,
        ));
    }
    let a3 = sys(Family::A, 3)?;
    let check = a3.verify_descent_lemma(16, opts.rank_cap)?;
    let expected_word = vec![1usize, 3, 2];
    let reproduced = check.violations.len() == 1
        && check.violations[0].character.root_coords() == [1, 2, 1]
        && check.violations[0].witness.word_one_based() == expected_word
        && check.violations[0].descents.contains(&1);
    checks.push(Check::assert(
        "descent_exception_a3",
        "rank 3 is the lone exception: the middle character 2ω2 with witness s1s3s2 descends at the middle node",
        "exactly the 2ω2 / s1s3s2 violation",
        &format!(
            "{} violation(s): {}",
            check.violations.len(),
            check
                .violations
                .iter()
                .map(|v| format!(
                    "chi={:?} w={:?} descents={:?}",
                    v.character.root_coords(),
                    v.witness.word_one_based(),
                    v.descents.iter().map(|d| d + 1).collect::<Vec<_>>()
                ))
                .collect::<Vec<_>>()
                .join("; ")
        ),
        reproduced,
    ));
    Ok(())
}

/// The rank-3 odd orthogonal ring carries two natural gradings; record both
/// prefixes and their compatibility.
fn grading_checks(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let b3 = sys(Family::B, 3)?;
    let omega1 = DominantCharacter::new(&b3, Weight::new(vec![1, 0, 0]))?;
    let two_omega1 = DominantCharacter::new(&b3, Weight::new(vec![2, 0, 0]))?;
    let h1 = b3.hilbert_prefix(&omega1, opts.degree_bound.max(4))?;
    let h2 = b3.hilbert_prefix(&two_omega1, opts.degree_bound.max(4) / 2)?;
    let halves: Vec<u64> = h1.values().iter().step_by(2).copied().collect();
    checks.push(Check::compare(
        "b3_doubled_grading_consistency",
        "the doubled-character prefix interleaves the vector-character prefix",
        h2.values().to_vec(),
        halves[..h2.values().len()].to_vec(),
    ));
    let inferred = h1.infer_free_generators();
    checks.push(Check::assert(
        "b3_vector_grading_generators",
        "under the vector grading the inferred generators are one linear and rank−1 quadratic",
        "[1, 2, 2]",
        &inferred
            .degrees()
            .map_or("inconsistent".to_string(), |d| format!("{d:?}")),
        inferred.degrees() == Some(&[1, 2, 2][..]),
    ));
    Ok(())
}

fn determinism_check(checks: &mut Vec<Check>, opts: VerifyOptions) -> Result<()> {
    let a2 = sys(Family::A, 2)?;
    let first = classify_report(&a2, 12, 3, opts.weyl_cap, opts.rank_cap, 1)?.canonical_json();
    let second = classify_report(&a2, 12, 3, opts.weyl_cap, opts.rank_cap, 2)?.canonical_json();
    checks.push(Check::assert(
        "classify_determinism",
        "two classification runs with identical inputs produce byte-identical canonical bodies",
        "identical bytes",
        if first == second {
            "identical bytes"
        } else {
            "bytes differ"
        },
        first == second,
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_has_exactly_one_finding() {
        let report = paper_report(VerifyOptions::default()).unwrap();
        let failed = report.failed_checks();
        assert_eq!(
            failed.len(),
            1,
            "unexpected failures: {:?}",
            failed.iter().map(|c| &c.name).collect::<Vec<_>>()
        );
        // The classified rank-3 linear list omits 2ω1+ω2 and its dual; the
        // enumeration finds them, so this check records the discrepancy.
        assert_eq!(failed[0].name, "enumeration_a3_height16");
        assert!(failed[0].actual.contains("[2, 2, 1]"));
        assert!(failed[0].actual.contains("[1, 2, 2]"));
    }

    #[test]
    fn binomial_helper() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(6, 3), 20);
    }

    #[test]
    fn dominant_enumeration_respects_height() {
        let g2 = sys(Family::G, 2).unwrap();
        let list = dominant_weights_up_to_height(&g2, 8);
        // heights: ω1 ↦ 3, ω2 ↦ 5
        assert!(list.contains(&Weight::new(vec![0, 0])));
        assert!(list.contains(&Weight::new(vec![1, 1])));
        assert!(!list.contains(&Weight::new(vec![3, 0])));
        assert_eq!(list.len(), 5);
    }
}
