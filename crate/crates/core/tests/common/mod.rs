#![allow(dead_code)]

use semiring_core::FiniteSemiring;

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Tables relabelled by `perm` (old element `x` becomes `perm[x]`), row-major.
pub fn relabelled(
    add: &[usize],
    mul: &[usize],
    n: usize,
    perm: &[usize],
) -> (Vec<usize>, Vec<usize>) {
    let mut a = vec![0; n * n];
    let mut m = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            a[perm[x] * n + perm[y]] = perm[add[x * n + y]];
            m[perm[x] * n + perm[y]] = perm[mul[x * n + y]];
        }
    }
    (a, m)
}

/// Smallest `(add, mul)` over all relabellings, by exhaustive search.
pub fn brute_canonical(add: &[usize], mul: &[usize], n: usize) -> (Vec<usize>, Vec<usize>) {
    permutations(n)
        .iter()
        .map(|p| relabelled(add, mul, n, p))
        .min()
        .expect("n >= 1")
}

pub fn cells(s: &FiniteSemiring) -> (Vec<usize>, Vec<usize>) {
    let n = s.order();
    let mut a = Vec::with_capacity(n * n);
    let mut m = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            a.push(s.add(x, y));
            m.push(s.mul(x, y));
        }
    }
    (a, m)
}

pub fn brute_canonical_of(s: &FiniteSemiring) -> (Vec<usize>, Vec<usize>) {
    let (a, m) = cells(s);
    brute_canonical(&a, &m, s.order())
}

pub fn is_associative(t: &[usize], n: usize) -> bool {
    (0..n)
        .all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]])))
}

pub fn is_semiring(add: &[usize], mul: &[usize], n: usize) -> bool {
    let commutative = (0..n).all(|x| (0..n).all(|y| add[x * n + y] == add[y * n + x]));
    let distributive = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                mul[x * n + add[y * n + z]] == add[mul[x * n + y] * n + mul[x * n + z]]
                    && mul[add[x * n + y] * n + z] == add[mul[x * n + z] * n + mul[y * n + z]]
            })
        })
    });
    commutative && is_associative(add, n) && is_associative(mul, n) && distributive
}

/// All tables of order `n` as row-major vectors.
pub fn all_tables(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; cells];
        for c in t.iter_mut() {
            *c = code % n;
            code /= n;
        }
        t
    })
}
