//! Enumeration counts, ordering, resume/checkpoint behavior, and the
//! parallel fold, pinned against independently computed values.

use std::io::BufReader;

use densediv_arith::checkpoint::{read_checkpoint, write_checkpoint};
use densediv_arith::{
    count_dense, count_members, enumerate_members, enumerate_members_from, par_members_fold,
    ThetaRule,
};

#[test]
fn dense_two_exact_list_to_thirty() {
    let rule = ThetaRule::dense_t(2.0).unwrap();
    assert_eq!(
        enumerate_members(&rule, 30).unwrap(),
        vec![1, 2, 4, 6, 8, 12, 16, 18, 20, 24, 28, 30]
    );
}

#[test]
fn pinned_counts_at_one_million() {
    assert_eq!(count_dense(1_000_000, 2.0).unwrap(), 91_472);
    assert_eq!(
        count_members(&ThetaRule::practical(), 1_000_000).unwrap(),
        97_385
    );
}

#[test]
fn gap_tolerance_x_admits_everything() {
    // With t = x, every integer <= x passes the divisor-gap condition, so
    // the count is exactly ⌊x⌋.
    for x in [2u64, 10, 137, 1_000, 10_000] {
        assert_eq!(count_dense(x, x as f64).unwrap(), x, "x={x}");
    }
}

#[test]
fn counts_monotone_in_t_and_x() {
    let x = 100_000u64;
    let c2 = count_dense(x, 2.0).unwrap();
    let c25 = count_dense(x, 2.5).unwrap();
    let c3 = count_dense(x, 3.0).unwrap();
    assert!(c2 <= c25 && c25 <= c3, "{c2} {c25} {c3}");

    let rule = ThetaRule::practical();
    let mut prev = 0;
    for x in [10u64, 100, 1_000, 10_000, 100_000] {
        let c = count_members(&rule, x).unwrap();
        assert!(c >= prev);
        prev = c;
    }
}

#[test]
fn custom_rule_reproduces_dense_two() {
    let custom = ThetaRule::custom("double", |pre| 2.0 * pre.value as f64).unwrap();
    let dense = ThetaRule::dense_t(2.0).unwrap();
    assert_eq!(
        enumerate_members(&custom, 10_000).unwrap(),
        enumerate_members(&dense, 10_000).unwrap()
    );
}

#[test]
fn custom_rule_via_sigma_reproduces_practical() {
    let custom = ThetaRule::custom("sigma-plus-one", |pre| 1.0 + pre.sigma as f64).unwrap();
    assert_eq!(
        enumerate_members(&custom, 10_000).unwrap(),
        enumerate_members(&ThetaRule::practical(), 10_000).unwrap()
    );
}

#[test]
fn checkpoint_full_resume_concatenation() {
    let rule = ThetaRule::practical();
    let x = 10_000u64;

    let mut full = Vec::new();
    write_checkpoint(&mut full, &rule, x, 0).unwrap();

    // Split the run at an arbitrary resume point and stitch the halves.
    let split = 4_711u64;
    let mut head = Vec::new();
    write_checkpoint(&mut head, &rule, split, 0).unwrap();
    let mut tail = Vec::new();
    write_checkpoint(&mut tail, &rule, x, split).unwrap();
    head.extend_from_slice(&tail);

    assert_eq!(full, head);

    // And the parsed stream matches direct enumeration.
    let parsed = read_checkpoint(BufReader::new(&full[..])).unwrap();
    let values: Vec<u64> = parsed.iter().map(|m| m.value()).collect();
    assert_eq!(values, enumerate_members(&rule, x).unwrap());
}

#[test]
fn resume_equals_filtered_enumeration() {
    let rule = ThetaRule::dense_t(2.5).unwrap();
    let all = enumerate_members(&rule, 50_000).unwrap();
    let from = 30_000u64;
    let tail = enumerate_members_from(&rule, 50_000, from).unwrap();
    let expect: Vec<u64> = all.into_iter().filter(|&v| v > from).collect();
    assert_eq!(tail, expect);
}

#[test]
fn parallel_count_matches_sequential_at_one_million() {
    for rule in [ThetaRule::dense_t(2.0).unwrap(), ThetaRule::practical()] {
        let seq = count_members(&rule, 1_000_000).unwrap();
        let par = par_members_fold(
            &rule,
            1_000_000,
            0u64,
            |acc, _| acc + 1,
            |a, b| a + b,
        )
        .unwrap();
        assert_eq!(seq, par, "rule {rule}");
    }
}

#[test]
fn parallel_sum_of_counts_matches_sequential() {
    // Fold something order-insensitive but value-dependent: Σ Ω(n) and Σ ω(n).
    let rule = ThetaRule::dense_t(2.0).unwrap();
    let x = 500_000u64;
    let mut seq = (0u64, 0u64);
    densediv_arith::for_each_member(&rule, x, |m| {
        seq.0 += m.big_omega as u64;
        seq.1 += m.small_omega as u64;
    })
    .unwrap();
    let par = par_members_fold(
        &rule,
        x,
        (0u64, 0u64),
        |acc, m| (acc.0 + m.big_omega as u64, acc.1 + m.small_omega as u64),
        |a, b| (a.0 + b.0, a.1 + b.1),
    )
    .unwrap();
    assert_eq!(seq, par);
}
