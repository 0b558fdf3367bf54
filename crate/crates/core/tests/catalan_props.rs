use num_bigint::BigInt;

use qpos_core::{
    double_expansion_check, gauss_binom, odd_super_catalan_direct, ratio_b, super_catalan_a,
    OddCatalanRecursion,
};

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

fn pairs(max_sum: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=max_sum).flat_map(move |m| (0..=max_sum - m).map(move |n| (m, n)))
}

#[test]
fn odd_super_catalan_is_positive() {
    for (m, n) in pairs(20) {
        assert!(odd_super_catalan_direct(m, n).unwrap().is_nonneg(), "C_{{{m},{n}}}");
    }
}

#[test]
fn recursion_matches_direct() {
    let rec = OddCatalanRecursion::new();
    for (m, n) in pairs(16) {
        assert_eq!(rec.get(m, n).unwrap(), odd_super_catalan_direct(m, n).unwrap(), "C_{{{m},{n}}}");
    }
}

#[test]
fn recursion_memo_shared_across_threads() {
    let rec = OddCatalanRecursion::new();
    std::thread::scope(|s| {
        for t in 0..4u32 {
            let rec = &rec;
            s.spawn(move || {
                for (m, n) in pairs(10).filter(|(m, _)| m % 4 == t) {
                    assert_eq!(rec.get(m, n).unwrap(), odd_super_catalan_direct(m, n).unwrap());
                }
            });
        }
    });
}

#[test]
fn super_catalan_a_is_positive() {
    for (m, n) in pairs(20) {
        assert!(super_catalan_a(m, n).unwrap().is_nonneg(), "A_{{{m},{n}}}");
    }
}

#[test]
fn double_expansion_grid() {
    for big_n in 0..=8 {
        for h in 1..=8 {
            let r = double_expansion_check(big_n, h).unwrap();
            assert!(r.passed, "N={big_n}, h={h}: {:?}", r.difference);
        }
    }
}

#[test]
fn odd_super_catalan_at_one() {
    for (m, n) in pairs(15) {
        let want = factorial(2 * m + 1) * factorial(2 * n) / (factorial(m + n + 1) * factorial(m) * factorial(n));
        assert_eq!(odd_super_catalan_direct(m, n).unwrap().eval_at_one(), want);
    }
}

#[test]
fn diagonal_is_central_gaussian_coefficient() {
    for n in 0..=10u32 {
        assert_eq!(odd_super_catalan_direct(n, n).unwrap(), gauss_binom(2 * i64::from(n), i64::from(n)));
    }
}

#[test]
fn ratio_b_is_positive() {
    for n in 0..=12 {
        for m in 0..=n {
            assert!(ratio_b(n, m).unwrap().is_nonneg(), "B_{{{n},{m}}}");
        }
    }
}
