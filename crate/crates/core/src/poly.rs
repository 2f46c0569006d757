//! Univariate polynomials over a `Field`, coefficients lowest degree first.

use crate::field::{Field, Scalar};
use crate::linalg::Mat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub field: Field,
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn monic(&self) -> Poly {
        let f = self.field;
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let li = f.inv(l).unwrap();
                Poly::new(f, self.coeffs.iter().map(|c| f.mul(c, &li)).collect())
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let c = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        Poly::new(f, c)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(&d.coeffs[dd]).unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![f.zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = f.mul(r.last().unwrap(), &lead_inv);
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = f.sub_mul(&r[k + i], &c, dc);
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors (valid in characteristic 0 or p > degree).
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Roots in the base field, if they can be found exactly.
    /// Over ℚ this uses the rational root test and gives up on huge coefficients;
    /// over 𝔽_p it enumerates residues for p up to a bound.
    pub fn roots(&self) -> Option<Vec<Scalar>> {
        let f = self.field;
        let Some(deg) = self.degree() else { return Some(Vec::new()) };
        if deg == 0 {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        match f {
            Field::Prime(p) => {
                if p > 200_000 {
                    return None;
                }
                for x in 0..p {
                    let s = f.from_i64(x as i64);
                    if self.eval(&s).is_zero() {
                        roots.push(s);
                    }
                }
            }
            Field::Rationals => {
                // Clear denominators.
                let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Scalar::from_integer(l.clone())).to_integer()).collect();
                let mut poly = ints;
                // Factor out x^k.
                let mut lowest = 0;
                while poly[lowest].is_zero() {
                    lowest += 1;
                }
                if lowest > 0 {
                    roots.push(Scalar::zero());
                }
                poly.drain(..lowest);
                if poly.len() == 1 {
                    return Some(roots);
                }
                let a0 = small_divisors(&poly[0])?;
                let an = small_divisors(poly.last().unwrap())?;
                let mut seen = std::collections::BTreeSet::new();
                for n in &a0 {
                    for d in &an {
                        for sign in [1i64, -1] {
                            let cand = Scalar::new(BigInt::from(*n as i64 * sign), BigInt::from(*d as i64));
                            if seen.insert(cand.clone()) && self.eval(&cand).is_zero() {
                                roots.push(cand);
                            }
                        }
                    }
                }
            }
        }
        Some(roots)
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > 10_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Minimal polynomial of a square matrix, via linear dependence of its powers.
pub fn min_poly(m: &Mat) -> Poly {
    let f = m.field();
    let n = m.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Mat::identity(f, n).vectorize()];
    let mut cur = Mat::identity(f, n);
    loop {
        cur = cur.mul(m);
        let k = powers.len();
        let mut cols = Mat::zeros(f, n * n, k);
        for (j, p) in powers.iter().enumerate() {
            for (i, x) in p.iter().enumerate() {
                cols.set(i, j, x.clone());
            }
        }
        let target = Mat::from_vec(f, n * n, 1, cur.vectorize());
        if let Some(sol) = cols.solve(&target) {
            let mut c: Vec<Scalar> = (0..k).map(|i| f.neg(sol.get(i, 0))).collect();
            c.push(f.one());
            return Poly::new(f, c);
        }
        powers.push(cur.vectorize());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        let q = Field::Rationals;
        // (2x - 1)(x + 3) = 2x² + 5x - 3
        let p = Poly::new(q, vec![q.from_i64(-3), q.from_i64(5), q.from_i64(2)]);
        let mut r = p.roots().unwrap();
        r.sort();
        assert_eq!(r, vec![q.from_i64(-3), Scalar::new(1.into(), 2.into())]);
        let irr = Poly::new(q, vec![q.from_i64(-2), q.zero(), q.one()]);
        assert!(irr.roots().unwrap().is_empty());
    }

    #[test]
    fn min_poly_and_squarefree() {
        let q = Field::Rationals;
        let m = Mat::from_i64(q, &[vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 3]]);
        let mp = min_poly(&m);
        assert_eq!(mp.degree(), Some(3));
        let sf = mp.squarefree_part();
        assert_eq!(sf.degree(), Some(2));
        let f = Field::Prime(5);
        let p = Poly::new(f, vec![f.from_i64(1), f.zero(), f.one()]); // x²+1 = (x-2)(x-3) mod 5
        assert_eq!(p.roots().unwrap().len(), 2);
    }
}
