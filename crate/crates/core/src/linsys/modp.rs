//! Small prime-field polynomial arithmetic for factor-degree patterns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::qalg::{primitive_integer_vector, UPoly};

type P = Vec<u64>;

fn trim(mut a: P) -> P {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn sub(a: &P, b: &P, p: u64) -> P {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn mul(a: &P, b: &P, p: u64) -> P {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

fn rem(a: &P, m: &P, p: u64) -> P {
    let mut r = a.clone();
    let lc_inv = inv(*m.last().expect("nonzero modulus"), p);
    while r.len() >= m.len() {
        let c = mulmod(*r.last().unwrap(), lc_inv, p);
        let shift = r.len() - m.len();
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(c, mi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &P, b: &P, p: u64) -> P {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let i = inv(lc, p);
        a.iter_mut().for_each(|c| *c = mulmod(*c, i, p));
    }
    a
}

fn derivative(a: &P, p: u64) -> P {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
}

fn powmod_poly(base: &P, mut e: u64, m: &P, p: u64) -> P {
    let mut r = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// Degrees of the irreducible factors of a squarefree `f`, via
/// distinct-degree factorization.
fn factor_degrees(f: &P, p: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0, 1];
    let mut h = x.clone();
    let mut k = 0;
    while f.len() > 1 {
        k += 1;
        if 2 * k > f.len() - 1 {
            out.push(f.len() - 1);
            break;
        }
        h = powmod_poly(&h, p, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if g.len() > 1 {
            let n = (g.len() - 1) / k;
            out.extend(std::iter::repeat_n(k, n));
            // f := f / g
            let (mut q, mut r) = (vec![0u64; f.len() - g.len() + 1], f.clone());
            while r.len() >= g.len() {
                let c = *r.last().unwrap();
                let shift = r.len() - g.len();
                q[shift] = c;
                for (i, &gi) in g.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + p - mulmod(c, gi, p)) % p;
                }
                r = trim(r);
            }
            f = trim(q);
            h = rem(&h, &f, p);
        }
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Subset sums of a factor-degree multiset, as a bitmask over `0..=n`.
fn subset_sums(degrees: &[usize], n: usize) -> Vec<bool> {
    let mut s = vec![false; n + 1];
    s[0] = true;
    for &d in degrees {
        for v in (d..=n).rev() {
            if s[v - d] {
                s[v] = true;
            }
        }
    }
    s
}

/// True only if `f` is irreducible over the rationals: no proper factor
/// degree is compatible with the factorization patterns modulo the primes
/// tried.
pub fn irreducible_by_degree_patterns(f: &UPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let ints: Vec<BigInt> = primitive_integer_vector(f.coeffs())
        .iter()
        .map(|r| r.numer().clone())
        .collect();
    let mut possible = vec![true; n + 1];
    let mut used = 0;
    for p in (10_007u64..).filter(|&p| is_prime(p)).take(40) {
        let pb = BigInt::from(p);
        let red: P = trim(
            ints.iter()
                .map(|c| {
                    let m = c.mod_floor(&pb);
                    debug_assert!(!m.is_negative());
                    m.to_u64().unwrap()
                })
                .collect(),
        );
        if red.len() != n + 1 || ints[n].mod_floor(&pb).is_zero() {
            continue;
        }
        if gcd(&red, &derivative(&red, p), p).len() != 1 {
            continue;
        }
        let sums = subset_sums(&factor_degrees(&red, p), n);
        for v in 0..=n {
            possible[v] &= sums[v];
        }
        used += 1;
        if (1..n).all(|v| !possible[v]) {
            return true;
        }
        if used >= 12 {
            break;
        }
    }
    false
}
