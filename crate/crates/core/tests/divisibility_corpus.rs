use semiring_core::divisibility::{finite_band_check, is_mult_divisible};
use semiring_core::enumeration::{enumerate, ConstraintSet};
use semiring_core::FiniteSemiring;

fn power(s: &FiniteSemiring, b: usize, n: usize) -> usize {
    (1..n).fold(b, |acc, _| s.mul(acc, b))
}

/// Least `(n, a)` with `a` not an `n`-th power, scanning exponents up to `max_n`.
fn direct(s: &FiniteSemiring, max_n: usize) -> Option<(usize, usize)> {
    (1..=max_n).find_map(|n| {
        s.elements()
            .find(|&a| s.elements().all(|b| power(s, b, n) != a))
            .map(|a| (n, a))
    })
}

#[test]
fn agrees_with_direct_check_on_corpus() {
    for n in 1..=4 {
        for s in enumerate(n, ConstraintSet::default()).unwrap().semirings() {
            let d = is_mult_divisible(&s);
            // Pre-period plus the lcm of cycle lengths stays below 24 at order 4.
            assert_eq!(d.witness, direct(&s, 24), "\n{}", s.to_text());
            assert_eq!(d.divisible, s.is_mult_idempotent(), "\n{}", s.to_text());
            assert!(finite_band_check(&s));
        }
    }
}
