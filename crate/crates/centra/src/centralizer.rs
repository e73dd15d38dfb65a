//! The centralizer family Cent(G): deduplicated proper centralizers, centers
//! of centralizers, the inclusion poset and its rank, F-group and strict
//! partition tests, and the counting-formula evaluators.

use std::collections::HashMap;

use crate::group::prime_power;
use crate::{Error, Group, Result, SubgroupSet};

/// {g : gx = xg}; equals G iff x is central.
pub fn centralizer(g: &Group, x: usize) -> SubgroupSet {
    let mut c = SubgroupSet::empty(g.order());
    for e in 0..g.order() {
        if g.mul(e, x) == g.mul(x, e) {
            c.insert(e);
        }
    }
    c
}

/// Deduplicated centralizer data for one group.
pub struct CentralizerProfile {
    /// Distinct proper centralizers, ordered by minimal non-central owner.
    pub proper: Vec<SubgroupSet>,
    /// Element index -> proper-centralizer id; None for central elements.
    pub owner: Vec<Option<usize>>,
    /// Z(x): intrinsic center of each proper centralizer.
    pub centers: Vec<SubgroupSet>,
    /// |Cent(G)| = distinct proper centralizers + 1 (G itself).
    pub cent_count: usize,
    /// Non-abelian members of Cent(G), counting G itself when non-abelian.
    pub nacent_count: usize,
    /// Length of the longest chain in the proper-centralizer inclusion poset;
    /// None for abelian groups (no proper centralizers).
    pub rank: Option<usize>,
    center: SubgroupSet,
}

impl CentralizerProfile {
    pub fn center(&self) -> &SubgroupSet {
        &self.center
    }

    /// Index of the centralizer of x in G.
    pub fn index_of(&self, g: &Group, x: usize) -> usize {
        match self.owner[x] {
            Some(id) => g.order() / self.proper[id].size(),
            None => 1,
        }
    }

    /// |Z(x)| / |Z(G)| per proper centralizer.
    pub fn center_ratios(&self) -> Vec<usize> {
        self.centers
            .iter()
            .map(|zx| zx.size() / self.center.size())
            .collect()
    }
}

pub fn profile(g: &Group) -> CentralizerProfile {
    let n = g.order();
    let center = g.center();
    let mut proper: Vec<SubgroupSet> = Vec::new();
    let mut ids: HashMap<SubgroupSet, usize> = HashMap::new();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        if center.contains(x) {
            continue;
        }
        let c = centralizer(g, x);
        let id = *ids.entry(c.clone()).or_insert_with(|| {
            proper.push(c);
            proper.len() - 1
        });
        owner[x] = Some(id);
    }
    let centers: Vec<SubgroupSet> = proper
        .iter()
        .map(|c| {
            let members = c.to_vec();
            let mut z = SubgroupSet::empty(n);
            'outer: for &x in &members {
                for &y in &members {
                    if g.mul(x, y) != g.mul(y, x) {
                        continue 'outer;
                    }
                }
                z.insert(x);
            }
            z
        })
        .collect();
    let cent_count = proper.len() + 1;
    let mut nacent_count = proper
        .iter()
        .filter(|c| !g.subgroup_is_abelian(c))
        .count();
    if !g.is_abelian() {
        nacent_count += 1;
    }
    let rank = if proper.is_empty() {
        None
    } else {
        // longest chain in the strict-inclusion DAG, by increasing size
        let mut order: Vec<usize> = (0..proper.len()).collect();
        order.sort_by_key(|&i| proper[i].size());
        let mut depth = vec![1usize; proper.len()];
        for (pos, &i) in order.iter().enumerate() {
            for &j in &order[..pos] {
                if proper[j].size() < proper[i].size() && proper[j].is_subset_of(&proper[i]) {
                    depth[i] = depth[i].max(depth[j] + 1);
                }
            }
        }
        Some(depth.into_iter().max().unwrap())
    };
    CentralizerProfile {
        proper,
        owner,
        centers,
        cent_count,
        nacent_count,
        rank,
        center,
    }
}

/// None iff G is an F-group; otherwise a witness pair (x, y) of non-central
/// elements with C(x) strictly inside C(y).
pub fn f_group_witness(_g: &Group, p: &CentralizerProfile) -> Option<(usize, usize)> {
    for (i, a) in p.proper.iter().enumerate() {
        for (j, b) in p.proper.iter().enumerate() {
            if i != j && a.size() < b.size() && a.is_subset_of(b) {
                let x = p.owner.iter().position(|&o| o == Some(i)).unwrap();
                let y = p.owner.iter().position(|&o| o == Some(j)).unwrap();
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_f_group(g: &Group, p: &CentralizerProfile) -> bool {
    f_group_witness(g, p).is_none()
}

/// True iff every non-central element lies in exactly one member of the
/// deduplicated family {Z(x)}. On failure the witness is a multiply-covered
/// (or uncovered) element.
pub fn strict_center_partition_witness(
    g: &Group,
    p: &CentralizerProfile,
) -> Result<(bool, Option<usize>)> {
    if p.proper.is_empty() {
        return Err(Error::AbelianInput);
    }
    let mut distinct: Vec<&SubgroupSet> = Vec::new();
    for z in &p.centers {
        if !distinct.contains(&z) {
            distinct.push(z);
        }
    }
    for x in 0..g.order() {
        if p.center().contains(x) {
            continue;
        }
        let covers = distinct.iter().filter(|z| z.contains(x)).count();
        if covers != 1 {
            return Ok((false, Some(x)));
        }
    }
    Ok((true, None))
}

pub fn is_strict_center_partition(g: &Group, p: &CentralizerProfile) -> Result<bool> {
    strict_center_partition_witness(g, p).map(|(ok, _)| ok)
}

pub fn poset_rank(p: &CentralizerProfile) -> Result<usize> {
    p.rank.ok_or(Error::AbelianInput)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugateType {
    /// Every proper centralizer has this index.
    UniformIndex(usize),
    /// Sorted distinct indices occurring among proper centralizers.
    Mixed(Vec<usize>),
}

impl std::fmt::Display for ConjugateType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConjugateType::UniformIndex(n) => write!(f, "({n},1)"),
            ConjugateType::Mixed(v) => {
                let items: Vec<String> = v.iter().map(|i| i.to_string()).collect();
                write!(f, "mixed{{{}}}", items.join(","))
            }
        }
    }
}

pub fn conjugate_type(g: &Group, p: &CentralizerProfile) -> Result<ConjugateType> {
    if p.proper.is_empty() {
        return Err(Error::AbelianInput);
    }
    let mut indices: Vec<usize> = p.proper.iter().map(|c| g.order() / c.size()).collect();
    indices.sort();
    indices.dedup();
    Ok(if indices.len() == 1 {
        ConjugateType::UniformIndex(indices[0])
    } else {
        ConjugateType::Mixed(indices)
    })
}

/// All proper centralizers abelian.
pub fn is_ca_group(g: &Group, p: &CentralizerProfile) -> Result<bool> {
    if p.proper.is_empty() {
        return Err(Error::AbelianInput);
    }
    Ok(p.proper.iter().all(|c| g.subgroup_is_abelian(c)))
}

/// All proper centralizers of equal order.
pub fn is_i_group(_g: &Group, p: &CentralizerProfile) -> Result<bool> {
    if p.proper.is_empty() {
        return Err(Error::AbelianInput);
    }
    let first = p.proper[0].size();
    Ok(p.proper.iter().all(|c| c.size() == first))
}

/// (p^k - 1)/(p^m - 1) + 1 for an F-group with |G/Z| = p^k and uniform
/// |Z(x)/Z| = p^m.
pub fn count_by_uniform_ratio_formula(g: &Group, p: &CentralizerProfile) -> Result<usize> {
    if p.proper.is_empty() {
        return Err(Error::NotApplicable("group is abelian".into()));
    }
    if !is_f_group(g, p) {
        return Err(Error::NotApplicable("not an F-group".into()));
    }
    let quotient_order = g.order() / p.center().size();
    let (prime, k) = prime_power(quotient_order)
        .ok_or_else(|| Error::NotApplicable("|G/Z| is not a prime power".into()))?;
    let ratios = p.center_ratios();
    let first = ratios[0];
    if ratios.iter().any(|&r| r != first) {
        return Err(Error::NotApplicable("|Z(x)/Z| is not uniform".into()));
    }
    match prime_power(first) {
        Some((q, _)) if q == prime => {}
        _ => return Err(Error::NotApplicable("|Z(x)/Z| is not a power of p".into())),
    }
    let _ = k;
    Ok((quotient_order - 1) / (first - 1) + 1)
}

/// p^{k-1} + ... + p + 2 - vp for an F-group with |G/Z| = p^k and every
/// |Z(x)/Z| <= p^2; returns (value, v) where v counts centralizers with
/// |Z(x)/Z| = p^2.
pub fn count_by_bounded_ratio_formula(g: &Group, p: &CentralizerProfile) -> Result<(usize, usize)> {
    if p.proper.is_empty() {
        return Err(Error::NotApplicable("group is abelian".into()));
    }
    if !is_f_group(g, p) {
        return Err(Error::NotApplicable("not an F-group".into()));
    }
    let quotient_order = g.order() / p.center().size();
    let (prime, k) = prime_power(quotient_order)
        .ok_or_else(|| Error::NotApplicable("|G/Z| is not a prime power".into()))?;
    let ratios = p.center_ratios();
    if ratios.iter().any(|&r| r > prime * prime) {
        return Err(Error::NotApplicable("some |Z(x)/Z| exceeds p^2".into()));
    }
    let v = ratios.iter().filter(|&&r| r == prime * prime).count();
    // p^{k-1} + p^{k-2} + ... + p + 2 - vp
    let mut value = 2usize;
    let mut term = prime;
    for _ in 1..k {
        value += term;
        term *= prime;
    }
    value -= v * prime;
    Ok((value, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn d8() -> Group {
        construct_dihedral(8).unwrap()
    }

    fn s3() -> Group {
        construct_symmetric(3).unwrap()
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let g = d8();
        assert_eq!(centralizer(&g, 0).size(), 8);
    }

    #[test]
    fn centralizer_d8_reflection() {
        let g = d8();
        // s = index 4: C(s) = {1, r^2, s, r^2 s}
        assert_eq!(centralizer(&g, 4).to_vec(), vec![0, 2, 4, 6]);
    }

    #[test]
    fn centralizer_s3_three_cycle() {
        let g = s3();
        let c3 = (1..6).find(|&i| g.element_order(i) == 3).unwrap();
        let c = centralizer(&g, c3);
        assert_eq!(c.size(), 3);
        assert_eq!(c, g.generated_subgroup(&[c3]));
    }

    #[test]
    fn commuting_symmetry() {
        for g in [d8(), s3(), construct_alternating4().unwrap()] {
            for x in 0..g.order() {
                let cx = centralizer(&g, x);
                for y in 0..g.order() {
                    assert_eq!(cx.contains(y), centralizer(&g, y).contains(x));
                }
            }
        }
    }

    #[test]
    fn central_coset_stability() {
        // C(xz) = C(x) for central z
        for g in [d8(), construct_quaternion8().unwrap(), construct_heisenberg(3).unwrap()] {
            let z = g.center();
            for x in 0..g.order() {
                let cx = centralizer(&g, x);
                for zi in z.iter() {
                    assert_eq!(centralizer(&g, g.mul(x, zi)), cx);
                }
            }
        }
    }

    #[test]
    fn profile_abelian() {
        let g = construct_cyclic(12).unwrap();
        let p = profile(&g);
        assert_eq!(p.cent_count, 1);
        assert_eq!(p.nacent_count, 0);
        assert!(p.rank.is_none());
    }

    #[test]
    fn profile_d8_counts() {
        let g = d8();
        let p = profile(&g);
        assert_eq!(p.cent_count, 4);
        assert_eq!(p.cent_count, g.order() / p.center().size());
        assert!(p.center_ratios().iter().all(|&r| r == 2));
    }

    #[test]
    fn profile_a4() {
        let g = construct_alternating4().unwrap();
        let p = profile(&g);
        assert_eq!(p.cent_count, 6); // G, V4, four <3-cycle>s
        let mut sizes: Vec<usize> = p.proper.iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4]);
    }

    #[test]
    fn profile_s3_cent_count() {
        let p = profile(&s3());
        assert_eq!(p.cent_count, 5);
        assert_eq!(p.nacent_count, 1); // only G itself
    }

    #[test]
    fn f_group_examples() {
        let g = s3();
        assert!(is_f_group(&g, &profile(&g)));
        let g = d8();
        assert!(is_f_group(&g, &profile(&g)));
        for v in [ExtraspecialVariant::Plus, ExtraspecialVariant::Minus] {
            let g = construct_extraspecial(2, 2, v).unwrap();
            assert!(is_f_group(&g, &profile(&g)));
        }
    }

    #[test]
    fn s4_is_not_an_f_group() {
        let g = construct_symmetric(4).unwrap();
        let p = profile(&g);
        let (x, y) = f_group_witness(&g, &p).expect("S4 has nested centralizers");
        let cx = centralizer(&g, x);
        let cy = centralizer(&g, y);
        assert!(cx.size() < cy.size() && cx.is_subset_of(&cy));
        assert!(poset_rank(&p).unwrap() >= 2);
        let (ok, witness) = strict_center_partition_witness(&g, &p).unwrap();
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn remark_equivalences_on_small_groups() {
        // F-group <=> strict center partition <=> rank 1
        for g in [
            d8(),
            s3(),
            construct_quaternion8().unwrap(),
            construct_alternating4().unwrap(),
            construct_symmetric(4).unwrap(),
            construct_heisenberg(3).unwrap(),
        ] {
            let p = profile(&g);
            let f = is_f_group(&g, &p);
            assert_eq!(f, is_strict_center_partition(&g, &p).unwrap());
            assert_eq!(f, poset_rank(&p).unwrap() == 1);
        }
    }

    #[test]
    fn strict_partition_rejects_abelian() {
        let g = construct_cyclic(6).unwrap();
        let p = profile(&g);
        assert!(matches!(
            strict_center_partition_witness(&g, &p),
            Err(Error::AbelianInput)
        ));
    }

    #[test]
    fn conjugate_types() {
        let g = d8();
        assert_eq!(
            conjugate_type(&g, &profile(&g)).unwrap(),
            ConjugateType::UniformIndex(2)
        );
        let h = construct_heisenberg(3).unwrap();
        assert_eq!(
            conjugate_type(&h, &profile(&h)).unwrap(),
            ConjugateType::UniformIndex(3)
        );
        let s = s3();
        assert_eq!(
            conjugate_type(&s, &profile(&s)).unwrap(),
            ConjugateType::Mixed(vec![2, 3])
        );
    }

    #[test]
    fn ca_and_i_predicates() {
        let s = s3();
        let ps = profile(&s);
        assert!(is_ca_group(&s, &ps).unwrap());
        assert!(!is_i_group(&s, &ps).unwrap());
        let g = d8();
        let pg = profile(&g);
        assert!(is_ca_group(&g, &pg).unwrap());
        assert!(is_i_group(&g, &pg).unwrap());
        let e = construct_extraspecial(2, 2, ExtraspecialVariant::Plus).unwrap();
        let pe = profile(&e);
        assert!(is_i_group(&e, &pe).unwrap());
        assert!(!is_ca_group(&e, &pe).unwrap());
    }

    #[test]
    fn uniform_ratio_formula_cases() {
        let g = d8();
        assert_eq!(count_by_uniform_ratio_formula(&g, &profile(&g)).unwrap(), 4);
        let h = construct_heisenberg(3).unwrap();
        assert_eq!(count_by_uniform_ratio_formula(&h, &profile(&h)).unwrap(), 5);
        let s = s3();
        assert!(matches!(
            count_by_uniform_ratio_formula(&s, &profile(&s)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn bounded_ratio_formula_cases() {
        let g = construct_extraspecial(2, 2, ExtraspecialVariant::Plus).unwrap();
        let p = profile(&g);
        assert_eq!(count_by_bounded_ratio_formula(&g, &p).unwrap(), (16, 0));
        assert_eq!(p.cent_count, 16);
        let d = d8();
        assert_eq!(count_by_bounded_ratio_formula(&d, &profile(&d)).unwrap(), (4, 0));
    }

    #[test]
    fn heisenberg5_count() {
        let h = construct_heisenberg(5).unwrap();
        let p = profile(&h);
        assert_eq!(p.cent_count, 7); // p + 2
    }
}
