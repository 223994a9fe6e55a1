use alloc::vec;
use alloc::vec::Vec;

use super::poly::{BiPoly, Poly, Ring, ZPoly};
use crate::{Error, Result};

/// Sylvester matrix of `p` (degree m) and `q` (degree n), size `m + n`.
pub fn sylvester<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Vec<Vec<R>> {
    let m = p.degree().max(0) as usize;
    let n = q.degree().max(0) as usize;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, count, deg) in [(p, n, m), (q, m, n)] {
        for shift in 0..count {
            let mut row = vec![R::zero(); size];
            for k in 0..=deg {
                // highest coefficient first
                row[shift + k] = src.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, i);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Resultant with respect to the (outer) variable of `p` and `q`.
pub fn resultant<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Result<R> {
    if p.is_zero_poly() || q.is_zero_poly() {
        return Err(Error::Degenerate);
    }
    if p.degree() == 0 && q.degree() == 0 {
        return Err(Error::Degenerate);
    }
    Ok(bareiss_det(sylvester(p, q)))
}

/// Which variable of a [`BiPoly`] to eliminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    /// The variable of the outer polynomial.
    Outer,
    /// The variable of the coefficient polynomials.
    Inner,
}

/// Resultant of two bivariate polynomials, eliminating `var`; the result is a
/// polynomial in the remaining variable.
pub fn resultant_bi(p: &BiPoly, q: &BiPoly, var: Var) -> Result<ZPoly> {
    match var {
        Var::Outer => resultant(p, q),
        Var::Inner => resultant(&p.swap_vars(), &q.swap_vars()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    #[test]
    fn substitution_example() {
        // outer y: y² − x and y − 2
        let p: BiPoly = Poly::new(vec![z(&[0, -1]), ZPoly::zero(), z(&[1])]);
        let q: BiPoly = Poly::new(vec![z(&[-2]), z(&[1])]);
        assert_eq!(resultant_bi(&p, &q, Var::Outer).unwrap(), z(&[4, -1]));
        // eliminating x instead: y² − x = 0 gives x = y², second has no x
        let r = resultant_bi(&p, &q, Var::Inner).unwrap();
        assert_eq!(r, z(&[-2, 1]));
    }

    #[test]
    fn integer_resultant_matches_product_formula() {
        // Res((y−a)(y−b), y−c) = (c−a)(c−b)
        for (a, b, c) in [(1, 2, 3), (-1, 4, 0), (2, 2, 5), (3, -3, 3)] {
            let p = Poly::new(vec![BigInt::from(a * b), BigInt::from(-(a + b)), BigInt::from(1)]);
            let q = Poly::new(vec![BigInt::from(-c), BigInt::from(1)]);
            assert_eq!(resultant(&p, &q).unwrap(), BigInt::from((c - a) * (c - b)));
        }
    }

    #[test]
    fn degenerate_inputs() {
        let p: ZPoly = z(&[3]);
        let q: ZPoly = z(&[5]);
        assert_eq!(resultant(&p, &q), Err(Error::Degenerate));
        assert_eq!(resultant(&ZPoly::zero(), &z(&[1, 1])), Err(Error::Degenerate));
    }

    #[test]
    fn bareiss_small() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(3)],
            vec![BigInt::from(4), BigInt::from(1), BigInt::from(0)],
        ];
        // 0·(0−3) − 2·(0−12) + 1·(1−0) = 25
        assert_eq!(bareiss_det(m), BigInt::from(25));
    }
}
