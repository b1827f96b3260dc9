//! Distinct irreducible factors over `F_q`: distinct-degree splitting
//! followed by Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;

use super::Poly;

const SEED: u64 = 0x5eed_f00d;

/// The distinct monic irreducible factors of `f` (multiplicities dropped),
/// sorted by degree and then by coefficient indices, lowest first.
pub fn distinct_irreducible_factors(f: &Poly) -> Vec<Poly> {
    let field = f.field().clone();
    if f.deg0() == 0 {
        return Vec::new();
    }
    let q = field.size() as u64;
    let x = Poly::x(&field);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut i = 0;
    while rest.deg0() >= 1 {
        i += 1;
        h = h.pow_mod(q, &rest);
        let g = (&h - &x).gcd(&rest);
        if g.deg0() >= 1 {
            equal_degree_split(&g, i, &mut rng, &mut out);
            loop {
                let c = rest.gcd(&g);
                if c.deg0() == 0 {
                    break;
                }
                rest = rest.exact_div(&c);
            }
            h = if rest.deg0() >= 1 { h.rem(&rest) } else { Poly::zero(&field) };
        }
    }
    out.sort_by_key(|p| sort_key(p));
    out
}

fn sort_key(p: &Poly) -> (usize, Vec<u32>) {
    let f = p.field();
    (p.deg0(), p.coeffs().iter().map(|&c| f.index(c)).collect())
}

pub fn is_irreducible(f: &Poly) -> bool {
    if f.deg0() == 0 {
        return false;
    }
    let fs = distinct_irreducible_factors(f);
    fs.len() == 1 && fs[0] == f.monic()
}

fn random_poly(field: &Field, n: usize, rng: &mut ChaCha8Rng) -> Poly {
    let q = field.size();
    Poly::new(field, (0..n).map(|_| field.from_index(rng.gen_range(0..q))).collect())
}

/// Splits a squarefree product of irreducibles of degree `i`.
fn equal_degree_split(g: &Poly, i: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = g.deg0();
    if n == i {
        out.push(g.clone());
        return;
    }
    let field = g.field().clone();
    let q = field.size() as u64;
    let p = field.characteristic() as u64;
    loop {
        let a = random_poly(&field, n, rng);
        if a.deg0() == 0 {
            continue;
        }
        let b = if p == 2 {
            // Absolute trace to F_2 of the residue class, valued in F_2.
            let k = field.degree() as usize;
            let mut s = a.clone();
            let mut t = a.clone();
            for _ in 1..k * i {
                s = (&s * &s).rem(g);
                t = &t + &s;
            }
            t
        } else {
            // a^((q^i - 1)/2) via the norm a^(1+q+...+q^(i-1)).
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..i {
                t = t.pow_mod(q, g);
                acc = (&acc * &t).rem(g);
            }
            &acc.pow_mod((q - 1) / 2, g) - &Poly::one(&field)
        };
        let d = b.gcd(g);
        if d.deg0() >= 1 && d.deg0() < n {
            let other = g.exact_div(&d);
            equal_degree_split(&d, i, rng, out);
            equal_degree_split(&other, i, rng, out);
            return;
        }
    }
}
