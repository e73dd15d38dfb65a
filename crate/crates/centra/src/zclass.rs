//! z-equivalence: elements whose centralizers are conjugate subgroups.
//!
//! The partition is computed over centralizer ids, not raw elements: elements
//! sharing a centralizer are automatically z-equivalent, so conjugacy is only
//! tested once per pair of distinct centralizers.

use crate::centralizer::{centralizer, CentralizerProfile};
use crate::{Group, SubgroupSet};

#[derive(Clone, Debug)]
pub struct ZClass {
    /// Sorted member element indices.
    pub members: Vec<usize>,
    /// Minimal member.
    pub rep: usize,
    /// Proper-centralizer id of the representative; None for the central class.
    pub cent_id: Option<usize>,
    /// [G : N_G(C(x))]
    pub normalizer_index: usize,
    /// |F'_x| = #{y : C(y) = C(x)}
    pub fprime_size: usize,
}

#[derive(Clone, Debug)]
pub struct ZClassPartition {
    /// Classes ordered by minimal member; the central class comes first.
    pub classes: Vec<ZClass>,
}

impl ZClassPartition {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// True iff some g conjugates C(y) onto C(x).
pub fn z_equivalent(g: &Group, x: usize, y: usize) -> bool {
    let cx = centralizer(g, x);
    let cy = centralizer(g, y);
    if cx.size() != cy.size() {
        return false;
    }
    (0..g.order()).any(|c| g.conjugate_set(c, &cy) == cx)
}

fn subgroups_conjugate(g: &Group, a: &SubgroupSet, b: &SubgroupSet) -> bool {
    a.size() == b.size() && (0..g.order()).any(|c| g.conjugate_set(c, b) == *a)
}

pub fn z_partition(g: &Group, p: &CentralizerProfile) -> ZClassPartition {
    let mut classes: Vec<ZClass> = Vec::new();
    // central elements: C(x) = G, one class, N_G(G) = G
    classes.push(ZClass {
        members: p.center().to_vec(),
        rep: 0,
        cent_id: None,
        normalizer_index: 1,
        fprime_size: p.center().size(),
    });
    // group the proper-centralizer ids by subgroup conjugacy
    let mut assigned: Vec<Option<usize>> = vec![None; p.proper.len()];
    let mut id_groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..p.proper.len() {
        if assigned[i].is_some() {
            continue;
        }
        let cls = id_groups.len();
        assigned[i] = Some(cls);
        id_groups.push(vec![i]);
        for j in i + 1..p.proper.len() {
            if assigned[j].is_none() && subgroups_conjugate(g, &p.proper[i], &p.proper[j]) {
                assigned[j] = Some(cls);
                id_groups[cls].push(j);
            }
        }
    }
    for ids in &id_groups {
        let mut members: Vec<usize> = (0..g.order())
            .filter(|&x| p.owner[x].is_some_and(|o| ids.contains(&o)))
            .collect();
        members.sort();
        let rep = members[0];
        let rep_id = p.owner[rep].unwrap();
        let normalizer = g.normalizer(&p.proper[rep_id]);
        let normalizer_index = g.order() / normalizer.size();
        let fprime_size = p.owner.iter().filter(|&&o| o == Some(rep_id)).count();
        // the z-class size formula, recomputed from independent pieces
        assert_eq!(
            members.len(),
            normalizer_index * fprime_size,
            "z-class size formula violated"
        );
        classes.push(ZClass {
            members,
            rep,
            cent_id: Some(rep_id),
            normalizer_index,
            fprime_size,
        });
    }
    classes.sort_by_key(|c| c.rep);
    ZClassPartition { classes }
}

/// Both sides of the normality criterion: (zclass_count == cent_count,
/// every centralizer normal), computed independently.
pub fn zclass_count_equals_cent_count(g: &Group, p: &CentralizerProfile) -> (bool, bool) {
    let zp = z_partition(g, p);
    let counts_equal = zp.count() == p.cent_count;
    let all_normal = p.proper.iter().all(|c| g.is_normal(c));
    (counts_equal, all_normal)
}

/// Outcome of a conditional theorem check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    HypothesisNotMet(String),
    Violation(String),
}

/// Maximal z-class count characterization for F-groups with |G/Z| = p^k:
/// zclass_count = (p^k-1)/(p-1)+1 iff G/Z is elementary abelian and every
/// Z(x) = <x, Z(G)>.
pub fn check_max_zclass_characterization(g: &Group, p: &CentralizerProfile) -> CheckOutcome {
    use crate::centralizer::is_f_group;
    use crate::group::prime_power;
    if p.proper.is_empty() {
        return CheckOutcome::HypothesisNotMet("abelian".into());
    }
    if !is_f_group(g, p) {
        return CheckOutcome::HypothesisNotMet("not an F-group".into());
    }
    let quotient_order = g.order() / p.center().size();
    let Some((prime, _)) = prime_power(quotient_order) else {
        return CheckOutcome::HypothesisNotMet("|G/Z| is not a prime power".into());
    };
    let target = (quotient_order - 1) / (prime - 1) + 1;
    let lhs = z_partition(g, p).count() == target;
    let quotient = g.quotient(p.center()).expect("center is normal");
    let mut rhs = quotient.elementary_abelian().is_some();
    if rhs {
        for x in 0..g.order() {
            if p.center().contains(x) {
                continue;
            }
            let id = p.owner[x].unwrap();
            let mut seeds = p.center().to_vec();
            seeds.push(x);
            if g.generated_subgroup(&seeds) != p.centers[id] {
                rhs = false;
                break;
            }
        }
    }
    if lhs == rhs {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Violation(format!("lhs(count={target})={lhs} rhs={rhs}"))
    }
}

/// zclass_count <= [G:Z(G)], with the equality biconditional: equality iff
/// every |Z(x)/Z(G)| = 2.
pub fn upper_bound_check(g: &Group, p: &CentralizerProfile) -> CheckOutcome {
    let index = g.order() / p.center().size();
    let count = z_partition(g, p).count();
    if count > index {
        return CheckOutcome::Violation(format!("zclass_count {count} > [G:Z] {index}"));
    }
    if p.proper.is_empty() {
        return CheckOutcome::Holds; // abelian: 1 <= 1, biconditional is vacuous
    }
    let equality = count == index;
    let all_two = p.center_ratios().iter().all(|&r| r == 2);
    if equality == all_two {
        CheckOutcome::Holds
    } else {
        CheckOutcome::Violation(format!(
            "equality={equality} but all |Z(x)/Z|=2 is {all_two}"
        ))
    }
}
