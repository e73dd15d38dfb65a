//! Deterministic builders for the group families the analysis corpus uses.
//!
//! Canonical element orderings, per family:
//! - cyclic n: 0..n-1 with i*j = i+j mod n
//! - dihedral 2m: r^0..r^{m-1}, then s r^0..s r^{m-1}
//! - quaternion 8: a^0..a^3, then b a^0..b a^3 (a^4 = 1, b^2 = a^2)
//! - symmetric k: permutations of 0..k-1 in lexicographic order
//! - heisenberg p: triples (x, y, z) over F_p, index x p^2 + y p + z
//! - modular p^3: pairs (i mod p^2, j mod p), index i p + j
//! - direct product: (a, b) at index a |B| + b
//! - central product: quotient labeling from group-core (ascending minimal
//!   member)

use crate::group::is_prime;
use crate::{order_cap, Error, Group, Result};

pub fn construct_cyclic(n: usize) -> Result<Group> {
    if n == 0 || n > order_cap() {
        return Err(Error::OutOfRange(format!("cyclic order {n}")));
    }
    Group::from_fn(n, Some(format!("C{n}")), |i, j| (i + j) % n)
}

pub fn construct_direct_product(a: &Group, b: &Group) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    if na * nb > order_cap() {
        return Err(Error::OrderCapExceeded { cap: order_cap() });
    }
    let name = match (a.name(), b.name()) {
        (Some(x), Some(y)) => Some(format!("{x}x{y}")),
        _ => None,
    };
    Group::from_fn(na * nb, name, |i, j| {
        let (a1, b1) = (i / nb, i % nb);
        let (a2, b2) = (j / nb, j % nb);
        a.mul(a1, a2) * nb + b.mul(b1, b2)
    })
}

/// Dihedral group of order `n` = 2m, m >= 1.
pub fn construct_dihedral(n: usize) -> Result<Group> {
    if n < 2 || n % 2 != 0 || n > order_cap() {
        return Err(Error::OutOfRange(format!("dihedral order {n}")));
    }
    let m = n / 2;
    // element b*m + i stands for s^b r^i; r^i s = s r^{-i}
    Group::from_fn(n, Some(format!("D{n}")), |x, y| {
        let (b, i) = (x / m, x % m);
        let (c, j) = (y / m, y % m);
        let i2 = if c == 0 { (i + j) % m } else { (m - i + j) % m };
        ((b + c) % 2) * m + i2
    })
}

pub fn construct_quaternion8() -> Result<Group> {
    // element c*4 + i stands for b^c a^i; a^4 = 1, b^2 = a^2, b a b^{-1} = a^{-1}
    Group::from_fn(8, Some("Q8".into()), |x, y| {
        let (c, i) = (x / 4, x % 4);
        let (d, j) = (y / 4, y % 4);
        // b^c a^i · b^d a^j = b^{c+d} a^{(-1)^d i + j}, plus a^2 when c = d = 1
        let mut i2 = if d == 0 { (i + j) % 4 } else { ((4 - i) + j) % 4 };
        if c == 1 && d == 1 {
            i2 = (i2 + 2) % 4;
        }
        ((c + d) % 2) * 4 + i2
    })
}

fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..k as u8).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn permutation_group(perms: Vec<Vec<u8>>, name: String) -> Result<Group> {
    let index: std::collections::HashMap<Vec<u8>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    Group::from_fn(perms.len(), Some(name), |i, j| {
        let composed: Vec<u8> = perms[j].iter().map(|&x| perms[i][x as usize]).collect();
        index[&composed]
    })
}

pub fn construct_symmetric(k: usize) -> Result<Group> {
    if k == 0 || k > 5 {
        return Err(Error::OutOfRange(format!("symmetric degree {k}")));
    }
    permutation_group(permutations(k), format!("S{k}"))
}

pub fn construct_alternating4() -> Result<Group> {
    let evens: Vec<Vec<u8>> = permutations(4)
        .into_iter()
        .filter(|p| {
            let mut inversions = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            inversions % 2 == 0
        })
        .collect();
    permutation_group(evens, "A4".into())
}

/// Upper unitriangular 3x3 matrices over F_p: extraspecial of exponent p.
pub fn construct_heisenberg(p: usize) -> Result<Group> {
    if !is_prime(p) || p == 2 {
        return Err(Error::NotPrime(p));
    }
    let n = p * p * p;
    if n > order_cap() {
        return Err(Error::OrderCapExceeded { cap: order_cap() });
    }
    // (x, y, z)(x', y', z') = (x+x', y+y', z+z'+x y')
    Group::from_fn(n, Some(format!("Heis{p}")), |i, j| {
        let (x1, y1, z1) = (i / (p * p), (i / p) % p, i % p);
        let (x2, y2, z2) = (j / (p * p), (j / p) % p, j % p);
        let x = (x1 + x2) % p;
        let y = (y1 + y2) % p;
        let z = (z1 + z2 + x1 * y2) % p;
        x * p * p + y * p + z
    })
}

/// Modular (exponent p^2) extraspecial group of order p^3, p odd.
fn construct_modular_p3(p: usize) -> Result<Group> {
    let n = p * p * p;
    if n > order_cap() {
        return Err(Error::OrderCapExceeded { cap: order_cap() });
    }
    let p2 = p * p;
    // a^i b^j with b a b^{-1} = a^{1+p}: (i, j)(k, l) = (i + k(1+p)^j, j + l)
    let mut pow = vec![1usize; p];
    for j in 1..p {
        pow[j] = pow[j - 1] * (1 + p) % p2;
    }
    Group::from_fn(n, Some(format!("M{n}")), |x, y| {
        let (i, j) = (x / p, x % p);
        let (k, l) = (y / p, y % p);
        ((i + k * pow[j]) % p2) * p + (j + l) % p
    })
}

/// Central product of two groups, amalgamating order-p central subgroups.
///
/// Quotients A x B by the anti-diagonal <(z_a, z_b^{-1})> where z_a, z_b are
/// the minimal-index central elements of order p.
fn central_product(a: &Group, b: &Group, p: usize) -> Result<Group> {
    let za = a
        .center()
        .iter()
        .find(|&x| x != 0 && a.element_order(x) == p)
        .ok_or_else(|| Error::OutOfRange(format!("no central element of order {p}")))?;
    let zb = b
        .center()
        .iter()
        .find(|&x| x != 0 && b.element_order(x) == p)
        .ok_or_else(|| Error::OutOfRange(format!("no central element of order {p}")))?;
    let prod = construct_direct_product(a, b)?;
    let nb = b.order();
    let anti = prod.generated_subgroup(&[za * nb + b.inv(zb)]);
    debug_assert_eq!(anti.size(), p);
    prod.quotient(&anti)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraspecialVariant {
    Plus,
    Minus,
}

/// Extraspecial p-group of order p^{2a+1}.
///
/// For odd p: Plus has exponent p (central product of Heisenberg groups),
/// Minus has exponent p^2. For p = 2: Plus is a central product of a copies of
/// D8, Minus swaps one copy for Q8 (so (2,1,Plus) = D8, (2,1,Minus) = Q8).
pub fn construct_extraspecial(p: usize, a: usize, variant: ExtraspecialVariant) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a == 0 {
        return Err(Error::OutOfRange("extraspecial needs a >= 1".into()));
    }
    let mut order = p;
    for _ in 0..2 * a {
        order = order
            .checked_mul(p)
            .filter(|&o| o <= order_cap())
            .ok_or(Error::OrderCapExceeded { cap: order_cap() })?;
    }
    let base = |exotic: bool| -> Result<Group> {
        match (p, exotic) {
            (2, false) => construct_dihedral(8),
            (2, true) => construct_quaternion8(),
            (_, false) => construct_heisenberg(p),
            (_, true) => construct_modular_p3(p),
        }
    };
    let mut g = base(variant == ExtraspecialVariant::Minus)?;
    for _ in 1..a {
        g = central_product(&g, &base(false)?, p)?;
    }
    let sign = if variant == ExtraspecialVariant::Plus { "+" } else { "-" };
    let g = g.with_name(format!("ES({p},{a}){sign}"));
    assert_extraspecial_shape(&g, p, a);
    Ok(g)
}

fn assert_extraspecial_shape(g: &Group, p: usize, a: usize) {
    let z = g.center();
    let d = g.commutator_subgroup();
    assert_eq!(z.size(), p, "extraspecial center must have order p");
    assert_eq!(d.size(), p, "extraspecial commutator must have order p");
    assert_eq!(z, d);
    let q = g.quotient(&z).expect("center is normal");
    let (qp, qk) = q.elementary_abelian().expect("G/Z must be elementary abelian");
    assert_eq!((qp, qk as usize), (p, 2 * a));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Nilpotency;

    #[test]
    fn cyclic_bounds() {
        assert_eq!(construct_cyclic(1).unwrap().order(), 1);
        assert!(construct_cyclic(0).is_err());
    }

    #[test]
    fn dihedral_presentation() {
        // r^4 = s^2 = 1, s r s = r^-1, all elements covered
        let d8 = construct_dihedral(8).unwrap();
        let (r, s) = (1, 4);
        assert_eq!(d8.element_order(r), 4);
        assert_eq!(d8.element_order(s), 2);
        assert_eq!(d8.mul(d8.mul(s, r), s), d8.inv(r));
        assert_eq!(d8.generated_subgroup(&[r, s]).size(), 8);
    }

    #[test]
    fn quaternion_shape() {
        let q8 = construct_quaternion8().unwrap();
        assert_eq!(q8.center().to_vec(), vec![0, 2]);
        assert_eq!(q8.commutator_subgroup().to_vec(), vec![0, 2]);
        // one involution only
        let involutions = (1..8).filter(|&i| q8.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(q8.exponent(), 4);
    }

    #[test]
    fn symmetric_and_alternating() {
        let s3 = construct_symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let s5 = construct_symmetric(5).unwrap();
        assert_eq!(s5.order(), 120);
        let a4 = construct_alternating4().unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.commutator_subgroup().size(), 4);
        assert!(construct_symmetric(6).is_err());
    }

    #[test]
    fn heisenberg_is_extraspecial_exponent_p() {
        let h = construct_heisenberg(3).unwrap();
        assert_eq!(h.order(), 27);
        assert_eq!(h.exponent(), 3);
        assert_eq!(h.center().size(), 3);
        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q.elementary_abelian(), Some((3, 2)));
        assert_eq!(h.nilpotency_class(), Nilpotency::Class(2));
    }

    #[test]
    fn modular_27_has_exponent_9() {
        let m = construct_extraspecial(3, 1, ExtraspecialVariant::Minus).unwrap();
        assert_eq!(m.order(), 27);
        assert_eq!(m.exponent(), 9);
        assert_eq!(m.center().size(), 3);
    }

    #[test]
    fn extraspecial_2_1_matches_d8_q8() {
        let plus = construct_extraspecial(2, 1, ExtraspecialVariant::Plus).unwrap();
        assert!(plus.same_table(&construct_dihedral(8).unwrap()));
        let minus = construct_extraspecial(2, 1, ExtraspecialVariant::Minus).unwrap();
        assert!(minus.same_table(&construct_quaternion8().unwrap()));
    }

    #[test]
    fn extraspecial_32_both_variants() {
        for v in [ExtraspecialVariant::Plus, ExtraspecialVariant::Minus] {
            let g = construct_extraspecial(2, 2, v).unwrap();
            assert_eq!(g.order(), 32);
            assert_eq!(g.center().size(), 2);
            assert_eq!(g.commutator_subgroup().size(), 2);
        }
        // the variants are not isomorphic: involution counts differ
        let count = |g: &Group| (1..g.order()).filter(|&i| g.element_order(i) == 2).count();
        let p = construct_extraspecial(2, 2, ExtraspecialVariant::Plus).unwrap();
        let m = construct_extraspecial(2, 2, ExtraspecialVariant::Minus).unwrap();
        assert_ne!(count(&p), count(&m));
    }

    #[test]
    fn extraspecial_243_both_variants() {
        let p = construct_extraspecial(3, 2, ExtraspecialVariant::Plus).unwrap();
        assert_eq!(p.order(), 243);
        assert_eq!(p.exponent(), 3);
        let m = construct_extraspecial(3, 2, ExtraspecialVariant::Minus).unwrap();
        assert_eq!(m.order(), 243);
        assert_eq!(m.exponent(), 9);
    }

    #[test]
    fn extraspecial_rejects_bad_params() {
        assert!(matches!(
            construct_extraspecial(4, 1, ExtraspecialVariant::Plus),
            Err(Error::NotPrime(4))
        ));
        assert!(construct_extraspecial(2, 0, ExtraspecialVariant::Plus).is_err());
        assert!(matches!(
            construct_extraspecial(3, 4, ExtraspecialVariant::Plus),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn direct_product_center_splits() {
        let c2 = construct_cyclic(2).unwrap();
        let s3 = construct_symmetric(3).unwrap();
        let g = construct_direct_product(&c2, &s3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.center().size(), 2);
        let d8 = construct_dihedral(8).unwrap();
        let h = construct_direct_product(&c2, &d8).unwrap();
        assert_eq!(h.center().size(), d8.center().size() * 2);
    }

    #[test]
    fn heisenberg_rejects_even_or_composite() {
        assert!(construct_heisenberg(2).is_err());
        assert!(construct_heisenberg(9).is_err());
    }
}
