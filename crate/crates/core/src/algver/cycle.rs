//! Period-four orbit of the `x^(-3/2)` expansion with partial quotients `1, 1, 1, 2`:
//! `y³(x−1)² = 1`, `z³(y−1)² = 1`, `w³(z−1)² = 1`, `x³(w−2)² = 1`.

use alloc::vec;

use num_bigint::BigInt;

use super::poly::{BiPoly, Poly, Ring, ZPoly};
use super::resultant::resultant;
use super::sturm::SturmChain;
use crate::realkernel::{CertifiedReal, Dyadic, Rat, Round};
use crate::Result;

fn z(c: &[i64]) -> ZPoly {
    ZPoly::from_i64(c)
}

/// `(t − a)²`.
fn shifted_square(a: i64) -> ZPoly {
    z(&[a * a, -2 * a, 1])
}

/// Eliminates `w`, then `z`, then `y`; returns the eliminant in `x`.
pub fn eliminate_cycle() -> ZPoly {
    try_eliminate_cycle().expect("cycle system is not degenerate")
}

fn try_eliminate_cycle() -> Result<ZPoly> {
    // Res_w over Z[z][x] (outer z, inner x)
    let zz = |p: ZPoly| -> BiPoly { BiPoly::from_outer(&p) };
    let xx = |p: ZPoly| -> BiPoly { BiPoly::from_inner(p) };
    let minus_one: BiPoly = xx(z(&[-1]));
    // (z−1)² w³ − 1
    let a: Poly<BiPoly> = Poly::new(vec![minus_one.clone(), BiPoly::zero(), BiPoly::zero(), zz(shifted_square(1))]);
    // x³(w−2)² − 1 = x³w² − 4x³w + 4x³ − 1
    let x3 = z(&[0, 0, 0, 1]);
    let b: Poly<BiPoly> = Poly::new(vec![
        xx(z(&[-1, 0, 0, 4])),
        xx(x3.scale(&BigInt::from(-4))),
        xx(x3.clone()),
    ]);
    let r1: BiPoly = resultant(&a, &b)?;

    // Res_z over Z[y][x] (outer y, inner x); r1 is a polynomial in z over Z[x]
    let r1_in_z: Poly<BiPoly> = Poly::new(r1.coeffs().iter().map(|c| BiPoly::from_inner(c.clone())).collect());
    let c: Poly<BiPoly> = Poly::new(vec![
        BiPoly::from_inner(z(&[-1])),
        BiPoly::zero(),
        BiPoly::zero(),
        BiPoly::from_outer(&shifted_square(1)),
    ]);
    let r2: BiPoly = resultant(&r1_in_z, &c)?;

    // Res_y over Z[x]; r2 is a polynomial in y over Z[x]
    let d: BiPoly = Poly::new(vec![z(&[-1]), ZPoly::zero(), ZPoly::zero(), shifted_square(1)]);
    resultant(&r2, &d)
}

/// `x ↦ 1 + f(1 + f(1 + f(2 + f(x))))` with `f(t) = t^(−3/2)`.
pub fn cycle_map(x: &CertifiedReal) -> Result<CertifiedReal> {
    let e = Rat::new(BigInt::from(-3), BigInt::from(2));
    let bits = x.bits();
    let mut t = x.pow_rat(&e)?.add(&CertifiedReal::from_int(2, bits));
    for _ in 0..3 {
        t = t.pow_rat(&e)?.add(&CertifiedReal::from_int(1, bits));
    }
    Ok(t)
}

/// Certified enclosure of the fixed point of [`cycle_map`] near 1.442, of
/// width at most `2^-bits`.
pub fn solve_cycle(bits: u64) -> CertifiedReal {
    let bits = bits.max(16);
    let mut prec = bits + 32;
    let gap = |x: &Dyadic, prec: u64| -> Option<i32> {
        let p = CertifiedReal::point(x.clone(), prec).forget_exact();
        let m = cycle_map(&p).expect("positive arguments").sub(&p);
        if m.lo().is_positive() {
            Some(1)
        } else if m.hi().signum() < 0 {
            Some(-1)
        } else {
            None
        }
    };
    let mut lo = Dyadic::from_rat(&Rat::new(144.into(), 100.into()), 64, Round::Down);
    let mut hi = Dyadic::from_rat(&Rat::new(145.into(), 100.into()), 64, Round::Up);
    let s_lo = gap(&lo, prec).expect("bracket sign");
    let s_hi = gap(&hi, prec).expect("bracket sign");
    assert_ne!(s_lo, s_hi, "no sign change on the bracket");
    let tol = Dyadic::new(BigInt::from(1), -(bits as i64));
    while hi.sub(&lo) > tol {
        let mid = lo.add(&hi).shl(-1);
        match gap(&mid, prec) {
            Some(s) if s == s_lo => lo = mid,
            Some(_) => hi = mid,
            None => prec *= 2,
        }
    }
    CertifiedReal::from_bounds(lo, hi, bits)
}

/// Outcome of checking a candidate minimal polynomial against the cycle.
#[derive(Clone, Debug)]
pub struct Deg93Report {
    pub candidate_degree: isize,
    pub eliminant_degree: isize,
    /// Candidate divides the eliminant exactly over `Z`.
    pub divides: bool,
    pub cofactor_degree: Option<isize>,
    /// Distinct real roots of the candidate.
    pub real_roots: usize,
    /// Roots of the candidate at or below the lower end of the cycle enclosure.
    pub roots_below: usize,
    /// Roots of the candidate inside the cycle enclosure.
    pub roots_inside: usize,
    pub root: CertifiedReal,
    pub candidate_vanishes: bool,
    pub eliminant_vanishes: bool,
}

impl Deg93Report {
    /// 1-based position of the cycle point among the real roots, when isolated.
    pub fn root_index(&self) -> Option<usize> {
        (self.roots_inside == 1).then_some(self.roots_below + 1)
    }

    pub fn passes(&self, degree: isize, real_roots: usize, index: usize) -> bool {
        self.candidate_degree == degree
            && self.divides
            && self.real_roots == real_roots
            && self.root_index() == Some(index)
            && self.candidate_vanishes
            && self.eliminant_vanishes
    }
}

/// Checks `candidate` against the eliminant and the certified cycle point.
pub fn verify_candidate(candidate: &ZPoly, eliminant: &ZPoly, bits: u64) -> Deg93Report {
    let cofactor = Ring::exact_div(eliminant, candidate);
    let root = solve_cycle(bits);
    let lo = root.lo().to_rat();
    let hi = root.hi().to_rat();
    let chain = SturmChain::new(candidate);
    let roots_below = chain.count(None, Some(&lo));
    let roots_inside = chain.count(Some(&lo), Some(&hi));
    let x = root.clone().with_bits(bits + 64);
    let contains_zero = |p: &ZPoly| p.eval_interval(&x).contains_rat(&Rat::from_integer(0.into()));
    Deg93Report {
        candidate_degree: candidate.degree(),
        eliminant_degree: eliminant.degree(),
        divides: cofactor.is_some(),
        cofactor_degree: cofactor.map(|c| c.degree()),
        real_roots: chain.count(None, None),
        roots_below,
        roots_inside,
        candidate_vanishes: contains_zero(candidate),
        eliminant_vanishes: contains_zero(eliminant),
        root,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_point_digits() {
        let r = solve_cycle(64);
        let v = r.mid_f64();
        assert!((v - 1.44225029).abs() < 5e-9, "{v}");
    }
}
