use crate::poly::{ExactDiv, Ring, UniPoly};

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
/// an integral domain. `unit` supplies the ring context for the empty matrix.
pub fn bareiss_determinant<C: ExactDiv>(mut m: Vec<Vec<C>>, unit: &C) -> C {
    let n = m.len();
    if n == 0 {
        return unit.ring_one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = unit.ring_one();
    for k in 0..n - 1 {
        if m[k][k].ring_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].ring_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return unit.ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].ring_mul(&m[k][k]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.ring_neg()
    } else {
        det
    }
}

/// Sylvester matrix with the `deg g` shifted copies of `f` above the `deg f`
/// shifted copies of `g`, coefficients from the leading term down.
pub fn sylvester_matrix<C: Ring>(f: &UniPoly<C>, g: &UniPoly<C>) -> Vec<Vec<C>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let dim = m + n;
    let zero = f.zero_coeff().clone();
    let mut rows = Vec::with_capacity(dim);
    for k in 0..n {
        let mut row = vec![zero.clone(); dim];
        for i in 0..=m {
            row[k + i] = f.coeff(m - i);
        }
        rows.push(row);
    }
    for k in 0..m {
        let mut row = vec![zero.clone(); dim];
        for j in 0..=n {
            row[k + j] = g.coeff(n - j);
        }
        rows.push(row);
    }
    rows
}

/// `Res(f, g) = lc(f)^deg g * prod g(alpha)` over the roots of `f`.
///
/// The resultant with a zero polynomial is zero; two nonzero constants give 1.
pub fn sylvester_resultant<C: ExactDiv>(f: &UniPoly<C>, g: &UniPoly<C>) -> C {
    let zero = f.zero_coeff().clone();
    if f.is_zero() || g.is_zero() {
        return zero;
    }
    bareiss_determinant(sylvester_matrix(f, g), &zero)
}

/// Dimension of the Sylvester matrix of `f` and `g`.
pub fn sylvester_dimension<C: Ring>(f: &UniPoly<C>, g: &UniPoly<C>) -> usize {
    f.degree().unwrap_or(0) + g.degree().unwrap_or(0)
}
