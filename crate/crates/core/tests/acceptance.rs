//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with `cargo test -p sncode-core --test acceptance -- --nocapture`
//! to see the lines for passing criteria too.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sncode_core::perm::factorial;
use sncode_core::{
    char_criterion, compute_r, decompose_young_module, dimension, induction_step, mn_character,
    partitions_of, product_counts, theorem_classify, total_perfect_code_check, two_row_char,
    validate_connection_set, verify_tiling, CodeQuery, CycleType, OracleLimits, Partition,
    Permutation, YoungSubgroupSpec,
};

fn report(id: u32, name: &str, violations: Vec<String>) {
    let status = if violations.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance {id} ({name}): {status}");
    assert!(
        violations.is_empty(),
        "criterion {id} ({name}) violated {} times, first: {}",
        violations.len(),
        violations[0]
    );
}

fn classes_by_type(n: usize) -> BTreeMap<Vec<usize>, Vec<Permutation>> {
    let mut buckets: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
    for p in Permutation::all(n) {
        let key = p.cycle_type().to_partition().parts().to_vec();
        buckets.entry(key).or_default().push(p);
    }
    buckets
}

fn young_elements(n: usize, k: usize) -> Vec<Permutation> {
    YoungSubgroupSpec::two_block(n, k).unwrap().elements(10).unwrap().collect()
}

/// Criterion 1: the cycle-type classification, the character criterion and
/// the brute-force product count agree on every class of S_3..S_8 and
/// every admissible block size.
#[test]
fn acceptance_1_three_way_agreement() {
    let limits = OracleLimits::default();
    let mut violations = Vec::new();
    let mut cases = 0u32;
    for n in 3..=8 {
        let buckets = classes_by_type(n);
        for k in 1..=(n - 1) / 2 {
            let young = young_elements(n, k);
            for (parts, class) in &buckets {
                let partition = Partition::new(parts.clone()).unwrap();
                let ct = CycleType::from_partition(&partition);
                let query = CodeQuery::new(n, k, ct).unwrap();
                let by_type = theorem_classify(&query);
                let by_characters = char_criterion(&query).unwrap();
                let oracle = verify_tiling(class, &young, &limits).unwrap();
                cases += 1;
                if by_type != by_characters || by_characters != oracle.is_code {
                    violations.push(format!(
                        "n={n}, k={k}, {partition}: type={by_type}, characters={by_characters}, oracle={}",
                        oracle.is_code
                    ));
                    continue;
                }
                if oracle.is_code && oracle.r != Some(compute_r(&query).unwrap()) {
                    violations.push(format!(
                        "n={n}, k={k}, {partition}: oracle r={:?} vs computed {:?}",
                        oracle.r,
                        compute_r(&query)
                    ));
                }
            }
        }
    }
    assert!(cases > 100, "sweep shrank unexpectedly: {cases} cases");
    report(1, "three-way classification agreement, n <= 8", violations);
}

/// Criterion 2: classification versus character criterion alone for
/// degrees 9 and 10, where the oracle is above budget.
#[test]
fn acceptance_2_criterion_sweep_n9_n10() {
    let mut violations = Vec::new();
    for n in [9usize, 10] {
        for k in 1..=(n - 1) / 2 {
            for partition in partitions_of(n) {
                let ct = CycleType::from_partition(&partition);
                let query = CodeQuery::new(n, k, ct).unwrap();
                let by_type = theorem_classify(&query);
                let by_characters = char_criterion(&query).unwrap();
                if by_type != by_characters {
                    violations.push(format!(
                        "n={n}, k={k}, {partition}: type={by_type}, characters={by_characters}"
                    ));
                }
            }
        }
    }
    report(2, "criterion-only sweep, n = 9 and 10", violations);
}

/// Criterion 3: the coefficient-extraction route and the rim-hook route
/// agree on every two-row character value up to degree 12.
#[test]
fn acceptance_3_two_row_routes_agree() {
    let mut violations = Vec::new();
    for n in 1..=12 {
        for partition in partitions_of(n) {
            let ct = CycleType::from_partition(&partition);
            for m in 0..=n / 2 {
                let shape = if m == 0 {
                    Partition::new(vec![n]).unwrap()
                } else {
                    Partition::new(vec![n - m, m]).unwrap()
                };
                let coefficient = two_row_char(&ct, m).unwrap();
                let rim_hook = mn_character(&shape, &ct);
                if coefficient != rim_hook {
                    violations.push(format!(
                        "n={n}, {partition}, m={m}: coefficient={coefficient}, rim hook={rim_hook}"
                    ));
                }
            }
        }
    }
    report(3, "two-row character routes agree, n <= 12", violations);
}

/// Criterion 4: the two coefficient identities behind the induction.
/// For cycle types meeting the (k-1)-level condition (multiplicity 1 on
/// power-of-two lengths below k, 0 on the rest below k), the two-row
/// character (n-k, k) equals i_k - 1 when k is a power of two and i_k
/// otherwise.
#[test]
fn acceptance_4_coefficient_identities() {
    let mut violations = Vec::new();
    let mut qualifying = 0u32;
    for n in 2..=14 {
        for partition in partitions_of(n) {
            let ct = CycleType::from_partition(&partition);
            for k in 1..=n / 2 {
                let condition_below_k =
                    (1..k).all(|len| ct.multiplicity(len) == usize::from(len.is_power_of_two()));
                if !condition_below_k {
                    continue;
                }
                qualifying += 1;
                let value = two_row_char(&ct, k).unwrap();
                let i_k = ct.multiplicity(k) as i64;
                let expected = if k.is_power_of_two() { i_k - 1 } else { i_k };
                if value != expected {
                    violations.push(format!(
                        "n={n}, k={k}, {partition}: value={value}, expected={expected}"
                    ));
                }
            }
        }
    }
    assert!(qualifying > 100, "too few qualifying cases: {qualifying}");
    report(4, "coefficient identities of the induction, n <= 14", violations);
}

/// Criterion 5: one induction unfolding equals the full criterion on
/// every query with n <= 9 and k >= 2.
#[test]
fn acceptance_5_induction_identity() {
    let mut violations = Vec::new();
    for n in 5..=9 {
        for k in 2..=(n - 1) / 2 {
            for partition in partitions_of(n) {
                let ct = CycleType::from_partition(&partition);
                let query = CodeQuery::new(n, k, ct).unwrap();
                let unfolded = induction_step(&query).unwrap();
                let direct = char_criterion(&query).unwrap();
                if unfolded != direct {
                    violations.push(format!(
                        "n={n}, k={k}, {partition}: unfolded={unfolded}, direct={direct}"
                    ));
                }
            }
        }
    }
    report(5, "induction unfolding equals the criterion, n <= 9", violations);
}

/// Criterion 6: the three concrete code instances with their measured
/// multiplicities.
#[test]
fn acceptance_6_concrete_instances() {
    let limits = OracleLimits::default();
    let mut violations = Vec::new();
    for (n, k, parts, expected_r) in
        [(3usize, 1usize, vec![2, 1], 1u64), (5, 1, vec![2, 2, 1], 3), (6, 2, vec![3, 2, 1], 8)]
    {
        let partition = Partition::new(parts).unwrap();
        let ct = CycleType::from_partition(&partition);
        let class: Vec<_> = ct.elements(10).unwrap().collect();
        let young = young_elements(n, k);
        let query = CodeQuery::new(n, k, ct).unwrap();
        let oracle = verify_tiling(&class, &young, &limits).unwrap();
        let computed = compute_r(&query).unwrap();
        if !oracle.is_code || oracle.r != Some(expected_r) || computed != expected_r {
            violations.push(format!(
                "n={n}, k={k}, {partition}: oracle={:?}, computed={computed}, expected={expected_r}",
                oracle.r
            ));
        }
    }
    report(6, "concrete code instances", violations);
}

/// Criterion 7: the permutation module of a two-row shape decomposes into
/// exactly the two-row shapes above it, each with multiplicity one.
#[test]
fn acceptance_7_two_row_decomposition() {
    let mut violations = Vec::new();
    for n in 1usize..=12 {
        for k in 0..=(n - 1) / 2 {
            let shape = if k == 0 {
                Partition::new(vec![n]).unwrap()
            } else {
                Partition::new(vec![n - k, k]).unwrap()
            };
            let decomposition = decompose_young_module(&shape);
            let expected: Vec<_> = (0..=k)
                .map(|m| {
                    let mu = if m == 0 {
                        Partition::new(vec![n]).unwrap()
                    } else {
                        Partition::new(vec![n - m, m]).unwrap()
                    };
                    (mu, 1u64)
                })
                .collect();
            if decomposition.constituents != expected {
                violations.push(format!("n={n}, k={k}: got {:?}", decomposition.constituents));
            }
        }
    }
    report(7, "two-row permutation module decomposition, n <= 12", violations);
}

/// Criterion 8: conservation of the product count and the counting
/// consequence of a total perfect code, over 200 seeded random subset
/// pairs in S_5 and S_6.
#[test]
fn acceptance_8_conservation_and_counting() {
    let limits = OracleLimits::default();
    let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
    let mut violations = Vec::new();
    for n in [5usize, 6] {
        let order = factorial(n);
        for trial in 0..100 {
            let a = random_subset(&mut rng, n, 30);
            let b = random_subset(&mut rng, n, 30);
            let table = product_counts(&a, &b, &limits).unwrap();
            if table.total() != a.len() as u128 * b.len() as u128 {
                violations.push(format!(
                    "n={n}, trial {trial}: total {} != {}",
                    table.total(),
                    a.len() * b.len()
                ));
            }

            let connection = symmetrize(&a);
            if connection.is_empty() {
                continue;
            }
            validate_connection_set(&connection).unwrap();
            let report = total_perfect_code_check(&connection, &b, &limits).unwrap();
            if report.is_code && (connection.len() * b.len()) as u64 != order {
                violations.push(format!(
                    "n={n}, trial {trial}: total perfect code with |A|*|B| = {} != {order}",
                    connection.len() * b.len()
                ));
            }
        }
    }
    report(8, "conservation and counting on random subsets", violations);
}

fn random_subset(rng: &mut StdRng, n: usize, max_size: usize) -> Vec<Permutation> {
    let order = factorial(n);
    let size = rng.random_range(1..=max_size);
    let mut ranks: Vec<u64> = (0..size).map(|_| rng.random_range(0..order)).collect();
    ranks.sort_unstable();
    ranks.dedup();
    ranks.into_iter().map(|r| Permutation::unrank(n, r)).collect()
}

/// Closes a subset under inversion and strips the identity, producing a
/// legal Cayley connection set.
fn symmetrize(a: &[Permutation]) -> Vec<Permutation> {
    let mut closed: Vec<Permutation> =
        a.iter().flat_map(|p| [p.clone(), p.inverse()]).filter(|p| !p.is_identity()).collect();
    closed.sort();
    closed.dedup();
    closed
}

/// Criterion 9: column orthogonality of the character table up to degree
/// 7, the fixed-point identity up to degree 12, and hook-length
/// dimensions up to degree 9.
#[test]
fn acceptance_9_character_sanity() {
    let mut violations = Vec::new();

    for n in 1..=7 {
        let shapes = partitions_of(n);
        let types: Vec<_> = shapes.iter().map(CycleType::from_partition).collect();
        for x in &types {
            for y in &types {
                let inner: i128 = shapes
                    .iter()
                    .map(|shape| mn_character(shape, x) as i128 * mn_character(shape, y) as i128)
                    .sum();
                let expected = if x == y { (factorial(n) / x.class_size()) as i128 } else { 0 };
                if inner != expected {
                    violations.push(format!(
                        "orthogonality n={n}, x={:?}, y={:?}: {inner} != {expected}",
                        x.to_partition(),
                        y.to_partition()
                    ));
                }
            }
        }
    }

    for n in 2..=12 {
        for partition in partitions_of(n) {
            let ct = CycleType::from_partition(&partition);
            let value = two_row_char(&ct, 1).unwrap();
            let expected = ct.multiplicity(1) as i64 - 1;
            if value != expected {
                violations.push(format!("fixed points n={n}, {partition}: {value} != {expected}"));
            }
        }
    }

    for n in 1..=9 {
        let identity = CycleType::identity(n);
        for shape in partitions_of(n) {
            let value = mn_character(&shape, &identity);
            let expected = dimension(&shape) as i64;
            if value != expected {
                violations.push(format!("dimension {shape}: {value} != {expected}"));
            }
        }
    }

    report(9, "character-theory sanity checks", violations);
}
