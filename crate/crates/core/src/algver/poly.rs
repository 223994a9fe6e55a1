use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Commutative ring with exact division where it exists; enough for
/// fraction-free elimination over `Z`, `Z[x]` and `Z[x][y]`.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / o` when `o` divides `self`.
    fn exact_div(&self, o: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

/// Dense polynomial with ascending coefficients, trimmed so the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    c: Vec<R>,
}

/// Integer polynomial.
pub type ZPoly = Poly<BigInt>;
/// Polynomial whose coefficients are integer polynomials in a second variable.
pub type BiPoly = Poly<ZPoly>;

impl<R: Ring> Poly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(r: R) -> Self {
        Poly::new(vec![r])
    }

    /// `r·t^k`.
    pub fn monomial(r: R, k: usize) -> Self {
        let mut c = vec![R::zero(); k];
        c.push(r);
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lead(&self) -> Option<&R> {
        self.c.last()
    }

    pub fn is_zero_poly(&self) -> bool {
        self.c.is_empty()
    }

    pub fn scale(&self, k: &R) -> Self {
        Poly::new(self.c.iter().map(|a| a.mul(k)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::constant(R::one());
        for _ in 0..n {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    /// Substitutes the ring element `v` for the variable (Horner).
    pub fn eval(&self, v: &R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(v).add(a);
        }
        acc
    }

    /// Long division requiring every leading-coefficient quotient to be exact.
    pub fn div_rem_exact(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.lead()?;
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return Some((Poly::zero(), self.clone()));
        }
        let mut q = vec![R::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let t = top.exact_div(dl)?;
            for (j, dc) in d.c.iter().enumerate() {
                r[i + j] = r[i + j].sub(&t.mul(dc));
            }
            q[i] = t;
        }
        r.truncate(dd);
        Some((Poly::new(q), Poly::new(r)))
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Poly::zero();
        }
        let mut c = vec![R::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Poly::new(c)
    }
    fn neg(&self) -> Self {
        Poly {
            c: self.c.iter().map(Ring::neg).collect(),
        }
    }
    fn exact_div(&self, o: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_exact(o)?;
        if r.is_zero_poly() {
            Some(q)
        } else {
            None
        }
    }
}

impl<R: Ring> Poly<Poly<R>> {
    /// Exchanges the roles of the outer and inner variables.
    pub fn swap_vars(&self) -> Self {
        let inner_len = self.c.iter().map(|p| p.c.len()).max().unwrap_or(0);
        let mut out = Vec::with_capacity(inner_len);
        for j in 0..inner_len {
            out.push(Poly::new(self.c.iter().map(|p| p.coeff(j)).collect()));
        }
        Poly::new(out)
    }

    /// Lifts a polynomial in the inner variable to a constant in the outer one.
    pub fn from_inner(p: Poly<R>) -> Self {
        Poly::constant(p)
    }

    /// Lifts a polynomial in the outer variable with constant coefficients.
    pub fn from_outer(p: &Poly<R>) -> Self {
        Poly::new(p.c.iter().map(|a| Poly::constant(a.clone())).collect())
    }
}

impl ZPoly {
    pub fn from_i64(c: &[i64]) -> ZPoly {
        Poly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `t`.
    pub fn x() -> ZPoly {
        ZPoly::from_i64(&[0, 1])
    }

    pub fn derivative(&self) -> ZPoly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.c.iter().fold(<BigInt as Zero>::zero(), |g, a| g.gcd(a))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> ZPoly {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut g = self.content();
        if self.c.last().unwrap().is_negative() {
            g = -g;
        }
        Poly::new(self.c.iter().map(|a| a / &g).collect())
    }

    /// Divides by the (positive) content, keeping signs.
    pub fn primitive_keep_sign(&self) -> ZPoly {
        if self.c.is_empty() {
            return self.clone();
        }
        let g = self.content();
        Poly::new(self.c.iter().map(|a| a / &g).collect())
    }

    /// `lc(b)^(deg a − deg b + 1) · a mod b`.
    pub fn pseudo_rem(&self, b: &ZPoly) -> ZPoly {
        assert!(!b.c.is_empty(), "pseudo-remainder by zero");
        let db = b.c.len() - 1;
        let lb = b.c[db].clone();
        let mut r = self.clone();
        if r.c.len() < b.c.len() {
            return r;
        }
        let steps = r.c.len() - db;
        let mut done = 0;
        while r.c.len() >= b.c.len() {
            let k = r.c.len() - 1 - db;
            let lr = r.c.last().unwrap().clone();
            // r = lb·r − lr·t^k·b
            let mut c: Vec<BigInt> = r.c.iter().map(|a| a * &lb).collect();
            for (j, bc) in b.c.iter().enumerate() {
                c[k + j] -= &lr * bc;
            }
            r = Poly::new(c);
            done += 1;
        }
        // uniform multiplier lb^steps
        if done < steps {
            let extra = num_traits::pow(lb, steps - done);
            r = r.scale(&extra);
        }
        r
    }

    /// Gcd up to sign and content, by primitive remainder sequence.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.c.is_empty() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> ZPoly {
        if self.degree() < 1 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() < 1 {
            return self.primitive();
        }
        // primitive over Z by Gauss's lemma
        Ring::exact_div(&self.primitive(), &g)
            .expect("gcd divides the polynomial")
            .primitive()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.eval(x)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if Zero::is_zero(a) {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
