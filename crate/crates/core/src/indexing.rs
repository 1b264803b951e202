//! Multi-index bookkeeping shared by the Plücker embedding, Kempf–Ness sums
//! and Gieseker tensors.
//!
//! Every wedge-indexed object in the crate uses the same order: sorted
//! multi-indices of size `r` drawn from `0..n`, listed lexicographically.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Binomial coefficient C(n, k) as usize; panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

/// All sorted multi-indices of length `r` from `0..n`, in lexicographic order.
pub fn multi_indices(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, r));
    let mut current = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        let remaining = r - current.len();
        for i in start..=(n - remaining) {
            current.push(i);
            rec(n, r, i + 1, current, out);
            current.pop();
        }
    }
    if r == 0 {
        out.push(vec![]);
    } else if r <= n {
        rec(n, r, 0, &mut current, &mut out);
    }
    out
}

/// Position of a sorted multi-index in the lexicographic enumeration.
pub fn multi_index_position(n: usize, index: &[usize]) -> usize {
    let r = index.len();
    let mut pos = 0;
    let mut prev: isize = -1;
    for (slot, &i) in index.iter().enumerate() {
        for j in (prev + 1) as usize..i {
            pos += binomial(n - j - 1, r - slot - 1);
        }
        prev = i as isize;
    }
    pos
}

/// Exponent tuples (m_0, ..., m_{n_vars-1}) with Σ m_i = degree, ordered
/// lexicographically with the highest first entry first. Used for monomial
/// bases of O(k) on CPⁿ.
pub fn monomial_exponents(n_vars: usize, degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n_vars];
    fn rec(slot: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slot == current.len() - 1 {
            current[slot] = left;
            out.push(current.clone());
            return;
        }
        for m in (0..=left).rev() {
            current[slot] = m;
            rec(slot + 1, left - m, current, out);
        }
    }
    if n_vars == 0 {
        return out;
    }
    rec(0, degree, &mut current, &mut out);
    out
}

/// Minor det(M[rows, cols]) of a complex matrix.
pub fn minor(m: &DMatrix<Complex64>, rows: &[usize], cols: &[usize]) -> Complex64 {
    let r = rows.len();
    debug_assert_eq!(r, cols.len());
    match r {
        0 => Complex64::new(1.0, 0.0),
        1 => m[(rows[0], cols[0])],
        2 => {
            m[(rows[0], cols[0])] * m[(rows[1], cols[1])]
                - m[(rows[0], cols[1])] * m[(rows[1], cols[0])]
        }
        _ => {
            let sub = DMatrix::from_fn(r, r, |i, j| m[(rows[i], cols[j])]);
            sub.determinant()
        }
    }
}

/// Exterior power Λʳ of a square matrix: the C(n,r) × C(n,r) matrix of r×r
/// minors, rows and columns both in the shared lexicographic order.
pub fn exterior_power(m: &DMatrix<Complex64>, r: usize) -> DMatrix<Complex64> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "exterior power needs a square matrix");
    let indices = multi_indices(n, r);
    let k = indices.len();
    DMatrix::from_fn(k, k, |a, b| minor(m, &indices[a], &indices[b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use nalgebra::DMatrix;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn multi_index_order_is_lexicographic() {
        let idx = multi_indices(4, 2);
        assert_eq!(
            idx,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        for (pos, i) in idx.iter().enumerate() {
            assert_eq!(multi_index_position(4, i), pos);
        }
    }

    #[test]
    fn monomials_cp2_degree_one() {
        assert_eq!(
            monomial_exponents(3, 1),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(monomial_exponents(3, 2).len(), 6);
    }

    #[test]
    fn exterior_power_multiplicative() {
        let mut rng_state = 1u64;
        let mut next = move || {
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1);
            ((rng_state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
        };
        let a = DMatrix::from_fn(4, 4, |_, _| Complex64::new(next(), next()));
        let b = DMatrix::from_fn(4, 4, |_, _| Complex64::new(next(), next()));
        let lhs = exterior_power(&(&a * &b), 2);
        let rhs = exterior_power(&a, 2) * exterior_power(&b, 2);
        assert_relative_eq!((lhs - rhs).norm(), 0.0, epsilon = 1e-12);
    }
}
