//! Point-count oracle for the Betti numbers of the genus-zero moduli
//! spaces of stable marked curves.
//!
//! The moduli space of stable genus-zero curves with `n` labeled marked
//! points is a smooth projective variety whose cohomology is concentrated
//! in even degrees and has no torsion, so its number of points over a
//! finite field with `q` elements is a polynomial in `q` whose coefficient
//! of `q^k` equals `dim H^{2k}`.
//!
//! The count is computed by a recursion over the component tree of a
//! stable curve, rooted at the component carrying the last marked point:
//! the open moduli of a single component with `m` special points has
//! `(q-2)(q-3)...(q-(m-2))` points, and every subtree hanging off a node
//! is itself a smaller stable curve with the node as an extra marked
//! point. This never looks at a monomial basis, so it is usable as an
//! independent cross-check against basis enumeration.
//!
//! This crate is test support: it is meant to be pulled in as a
//! dev-dependency only.

/// Polynomial in `q` with integer coefficients, lowest degree first.
pub type Poly = Vec<i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_scaled(acc: &mut Poly, term: &Poly, scale: i64) {
    if acc.len() < term.len() {
        acc.resize(term.len(), 0);
    }
    for (i, &t) in term.iter().enumerate() {
        acc[i] += scale * t;
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Point count of the open locus of irreducible configurations: `m`
/// distinct points on a projective line modulo its automorphisms,
/// i.e. `(q-2)(q-3)...(q-(m-2))` for `m >= 3`.
fn open_component_count(m: usize) -> Poly {
    assert!(m >= 3);
    let mut out = vec![1];
    for j in 2..=(m as i64 - 2) {
        out = poly_mul(&out, &vec![-j, 1]);
    }
    out
}

/// Number of ways to partition a labeled `t`-set into unordered blocks
/// with the given multiset of sizes.
fn partition_count(t: usize, sizes: &[usize]) -> i64 {
    debug_assert_eq!(sizes.iter().sum::<usize>(), t);
    let mut ways = factorial(t);
    for &s in sizes {
        ways /= factorial(s);
    }
    // identical block sizes are interchangeable
    let mut run = 1;
    for w in sizes.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            ways /= factorial(run);
            run = 1;
        }
    }
    ways /= factorial(run);
    ways
}

/// All non-increasing multisets of block sizes >= 2 summing to `t`.
fn size_multisets(t: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if t == 0 {
        out.push(prefix.clone());
        return;
    }
    let mut s = max.min(t);
    while s >= 2 {
        // a leftover of 1 can never be completed
        if t - s != 1 {
            prefix.push(s);
            size_multisets(t - s, s, prefix, out);
            prefix.pop();
        }
        s -= 1;
    }
}

/// Point-count polynomial of the compactified moduli space with `n`
/// labeled marked points, `n >= 3`. Coefficient `k` is `dim H^{2k}`.
pub fn point_count_polynomial(n: usize) -> Poly {
    assert!(n >= 3, "need at least three marked points");
    let mut memo: Vec<Option<Poly>> = vec![None; n + 1];
    count_rec(n, &mut memo)
}

fn count_rec(n: usize, memo: &mut Vec<Option<Poly>>) -> Poly {
    if let Some(p) = &memo[n] {
        return p.clone();
    }
    let result = if n == 3 {
        vec![1]
    } else {
        // Root the tree at the component holding marked point n. Choose
        // which of the other n-1 labels sit directly on that component
        // and partition the rest into subtrees of >= 2 labels each.
        let others = n - 1;
        let mut acc: Poly = vec![];
        for direct in 0..=others {
            let t = others - direct;
            let choose_direct = factorial(others) / (factorial(direct) * factorial(t));
            let mut multisets = Vec::new();
            size_multisets(t, t.max(2), &mut Vec::new(), &mut multisets);
            for sizes in &multisets {
                let slots = direct + sizes.len();
                if slots + 1 < 3 {
                    continue; // root component would be unstable
                }
                let mut term = open_component_count(slots + 1);
                for &b in sizes {
                    let sub = count_rec(b + 1, memo);
                    term = poly_mul(&term, &sub);
                }
                let ways = choose_direct * partition_count(t, sizes);
                poly_add_scaled(&mut acc, &term, ways);
            }
        }
        acc
    };
    memo[n] = Some(result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_points_is_a_line() {
        assert_eq!(point_count_polynomial(4), vec![1, 1]);
    }

    #[test]
    fn five_points() {
        assert_eq!(point_count_polynomial(5), vec![1, 5, 1]);
    }

    #[test]
    fn six_points() {
        assert_eq!(point_count_polynomial(6), vec![1, 16, 16, 1]);
    }

    #[test]
    fn duality_symmetry_up_to_nine() {
        for n in 3..=9 {
            let p = point_count_polynomial(n);
            assert_eq!(p.len(), n - 2, "degree should be n-3 for n={n}");
            let mut rev = p.clone();
            rev.reverse();
            assert_eq!(p, rev, "Poincare duality fails for n={n}");
        }
    }

    #[test]
    fn open_counts() {
        assert_eq!(open_component_count(3), vec![1]);
        assert_eq!(open_component_count(4), vec![-2, 1]);
        assert_eq!(open_component_count(5), vec![6, -5, 1]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_count(4, &[2, 2]), 3);
        assert_eq!(partition_count(4, &[4]), 1);
        assert_eq!(partition_count(6, &[2, 2, 2]), 15);
        assert_eq!(partition_count(5, &[3, 2]), 10);
    }
}
