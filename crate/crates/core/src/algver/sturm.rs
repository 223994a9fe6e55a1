use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{Poly, ZPoly};
use crate::realkernel::{CertifiedReal, Rat};

fn sign(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl ZPoly {
    /// Sign of `p(r)`, computed exactly.
    pub fn sign_at(&self, r: &Rat) -> i32 {
        let (n, d) = (r.numer(), r.denom());
        // Σ c_i n^i d^(deg−i), same sign as p(n/d) because d > 0
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for a in self.coeffs().iter().rev() {
            acc = acc * n + a * &dpow;
            dpow *= d;
        }
        sign(&acc)
    }

    pub fn eval_rat(&self, r: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.coeffs().iter().rev() {
            acc = acc * r + Rat::from_integer(a.clone());
        }
        acc
    }

    /// Interval Horner evaluation with outward rounding.
    pub fn eval_interval(&self, x: &CertifiedReal) -> CertifiedReal {
        let bits = x.bits();
        let mut acc = CertifiedReal::from_int(0, bits);
        for a in self.coeffs().iter().rev() {
            acc = acc.mul(x).add(&CertifiedReal::from_int(a.clone(), bits));
        }
        acc
    }

    /// Sturm sequence `p, p', −rem(p, p'), …` built from sign-correct
    /// pseudo-remainders and kept primitive.
    pub fn sturm_sequence(&self) -> Vec<ZPoly> {
        let mut seq = Vec::new();
        if self.is_zero_poly() {
            return seq;
        }
        seq.push(self.clone());
        let d = self.derivative();
        if d.is_zero_poly() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            let mut r = a.pseudo_rem(b);
            if r.is_zero_poly() {
                break;
            }
            // make the pseudo-remainder multiplier positive
            let k = a.degree() - b.degree() + 1;
            if b.lead().unwrap().is_negative() && k % 2 == 1 {
                r = Poly::new(r.coeffs().iter().map(|c| -c).collect());
            }
            let next = Poly::new(r.coeffs().iter().map(|c| -c).collect::<Vec<_>>()).primitive_keep_sign();
            seq.push(next);
        }
        seq
    }

    /// Number of distinct real roots in `(a, b]`; `None` means an infinite end.
    pub fn sturm_count(&self, a: Option<&Rat>, b: Option<&Rat>) -> usize {
        SturmChain::new(self).count(a, b)
    }

    /// Number of distinct real roots.
    pub fn real_root_count(&self) -> usize {
        self.sturm_count(None, None)
    }

    /// Cauchy bound: every root has absolute value below the result.
    pub fn root_bound(&self) -> Rat {
        let lead = self.lead().expect("nonzero polynomial").abs();
        let m = self.coeffs().iter().map(|c| c.abs()).max().unwrap();
        Rat::new(m, lead) + Rat::one()
    }

    /// Disjoint isolating intervals `(lo, hi]`, one per distinct real root, in
    /// increasing order.
    pub fn isolate_real_roots(&self) -> Vec<(Rat, Rat)> {
        let sf = self.squarefree_part();
        if sf.degree() < 1 {
            return Vec::new();
        }
        let seq = sf.sturm_sequence();
        let bound = sf.root_bound();
        let mut out = Vec::new();
        let mut stack = alloc::vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let c = variations_at(&seq, Some(&lo), false) - variations_at(&seq, Some(&hi), true);
            match c {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }
}

/// Sturm sequence of the squarefree part, reusable across many counts.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<ZPoly>,
}

impl SturmChain {
    pub fn new(p: &ZPoly) -> SturmChain {
        SturmChain {
            seq: p.squarefree_part().sturm_sequence(),
        }
    }

    /// Distinct real roots in `(a, b]`; `None` means an infinite end.
    pub fn count(&self, a: Option<&Rat>, b: Option<&Rat>) -> usize {
        if self.seq.is_empty() {
            return 0;
        }
        let va = variations_at(&self.seq, a, false);
        let vb = variations_at(&self.seq, b, true);
        va.saturating_sub(vb)
    }
}

fn variations_at(seq: &[ZPoly], x: Option<&Rat>, plus_inf: bool) -> usize {
    let signs = seq.iter().map(|p| match x {
        Some(r) => p.sign_at(r),
        None => {
            let s = sign(p.lead().unwrap());
            if plus_inf || p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }
    });
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}
