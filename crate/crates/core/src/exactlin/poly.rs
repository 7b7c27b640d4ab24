//! Univariate polynomials as coefficient vectors, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{FieldSpec, Scalar};

/// Largest integer whose divisors are enumerated by trial division when
/// searching rational roots.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

pub fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Quotient of `p` by `(x - root)`; the remainder `p(root)` is discarded.
pub fn div_linear(p: &[Scalar], root: &Scalar) -> Vec<Scalar> {
    let n = match degree(p) {
        Some(0) | None => return Vec::new(),
        Some(n) => n,
    };
    let mut q = vec![root.field().zero(); n];
    let mut carry = p[n].clone();
    for k in (0..n).rev() {
        q[k] = carry.clone();
        carry = &p[k] + &(&carry * root);
    }
    q
}

/// Distinct roots of `p` in its base field, sorted for determinism
/// (by value over ℚ, by residue over 𝔽_p). Returns `None` when a rational
/// search would need to factor integers beyond the trial-division limit.
pub fn roots(field: FieldSpec, p: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut p = p.to_vec();
    trim(&mut p);
    if degree(&p).unwrap_or(0) == 0 {
        return Some(Vec::new());
    }
    if !field.is_rational() {
        let ch = field.characteristic();
        return Some(
            (0..ch)
                .map(|v| field.from_i64(v as i64))
                .filter(|x| eval(&p, x).is_zero())
                .collect(),
        );
    }
    rational_roots(field, &p)
}

fn rational_roots(field: FieldSpec, p: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut found = Vec::new();
    let shift = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if shift > 0 {
        found.push(field.zero());
    }
    let p = &p[shift..];
    if p.len() > 1 {
        let ints = clear_denominators(p);
        let lead = divisors(ints.last().unwrap())?;
        let constant = divisors(&ints[0])?;
        let mut seen = std::collections::BTreeSet::new();
        for a in &constant {
            for b in &lead {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for sign in [1i64, -1] {
                    let num = a * BigInt::from(sign);
                    if !seen.insert((num.clone(), b.clone())) {
                        continue;
                    }
                    let x = Scalar::Rational(num_rational::BigRational::new(num, b.clone()));
                    if eval(p, &x).is_zero() {
                        found.push(x);
                    }
                }
            }
        }
    }
    found.sort_by(|x, y| x.as_rational().cmp(&y.as_rational()));
    Some(found)
}

fn clear_denominators(p: &[Scalar]) -> Vec<BigInt> {
    let qs: Vec<_> = p
        .iter()
        .map(|c| c.as_rational().expect("rational").clone())
        .collect();
    let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    qs.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    if small.is_empty() {
        // n == 0 cannot happen after removing factors of x.
        small.push(BigInt::zero());
    }
    Some(small)
}
