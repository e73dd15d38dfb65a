//! Structural classification: special / extraspecial / semi-extraspecial /
//! ultraspecial p-groups, Camina pairs, minimal non-abelian groups, and the
//! maximal-centralizer property. `classify` bundles the individual predicates
//! into one report and asserts the implication chain between them.

use crate::centralizer::{
    conjugate_type, is_ca_group, is_f_group, is_i_group, CentralizerProfile, ConjugateType,
};
use crate::group::prime_power;
use crate::zclass::ZClassPartition;
use crate::{Error, Group, Nilpotency, Result, SubgroupSet};

/// Special p-group: Z(G) = G' = Phi(G); equivalently (for our purposes)
/// Z(G) = G' and Z(G) is elementary abelian, G non-abelian.
pub fn is_special_p(g: &Group) -> Result<bool> {
    let (p, _) = g.prime_power().ok_or(Error::NotPGroup)?;
    let z = g.center();
    if z.size() == g.order() {
        return Ok(false);
    }
    if g.commutator_subgroup() != z {
        return Ok(false);
    }
    Ok(z.to_vec()
        .iter()
        .all(|&x| x == 0 || g.element_order(x) == p))
}

/// Extraspecial: special with |Z(G)| = p.
pub fn is_extraspecial(g: &Group) -> Result<bool> {
    let (p, _) = g.prime_power().ok_or(Error::NotPGroup)?;
    Ok(is_special_p(g)? && g.center().size() == p)
}

/// Semi-extraspecial: G/N is extraspecial for every maximal subgroup N of
/// Z(G). Errors with AbelianInput on abelian groups.
pub fn is_semi_extraspecial(g: &Group) -> Result<bool> {
    let (p, _) = g.prime_power().ok_or(Error::NotPGroup)?;
    let z = g.center();
    if z.size() == g.order() {
        return Err(Error::AbelianInput);
    }
    // Maximal subgroups of the abelian group Z(G) are its index-p subgroups;
    // enumerate them inside Z realized as a group of its own.
    let (zg, elems) = g.subgroup_as_group(&z)?;
    for m in zg.normal_prime_index_subgroups(p) {
        let mut n = SubgroupSet::empty(g.order());
        for i in m.to_vec() {
            n.insert(elems[i]);
        }
        let q = g.quotient(&n)?;
        if !is_extraspecial(&q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Ultraspecial: semi-extraspecial with |G'|^2 = [G : G'].
pub fn is_ultraspecial(g: &Group) -> Result<bool> {
    if !is_semi_extraspecial(g)? {
        return Ok(false);
    }
    let d = g.commutator_subgroup().size();
    Ok(d * d == g.order() / d)
}

/// (G, H) is a Camina pair: H is a proper nontrivial normal subgroup and the
/// conjugacy class of every x outside H contains the whole coset xH.
pub fn is_camina_pair(g: &Group, h: &SubgroupSet) -> Result<bool> {
    if !g.is_subgroup(h) || !g.is_normal(h) {
        return Err(Error::NotNormal);
    }
    if h.size() == g.order() {
        return Err(Error::NotProper);
    }
    if h.size() == 1 {
        return Ok(true); // only z = identity, vacuously conjugate
    }
    for x in 0..g.order() {
        if h.contains(x) {
            continue;
        }
        let class = g.conjugacy_class_of(x);
        for z in h.to_vec() {
            if !class.contains(g.mul(x, z)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Camina group: (G, G') is a Camina pair, with G' nontrivial and proper.
pub fn is_camina_group(g: &Group) -> Result<bool> {
    let d = g.commutator_subgroup();
    if d.size() == 1 {
        return Err(Error::AbelianInput);
    }
    if d.size() == g.order() {
        return Ok(false); // perfect groups are never Camina
    }
    is_camina_pair(g, &d)
}

/// Minimal non-abelian: non-abelian, and every pair of non-commuting
/// elements generates the whole group. (Any proper subgroup containing a
/// non-commuting pair would contradict this, and conversely every non-abelian
/// subgroup contains such a pair, so this matches "every proper subgroup is
/// abelian".)
pub fn is_minimal_nonabelian(g: &Group) -> bool {
    let mut found_pair = false;
    for a in 0..g.order() {
        for b in a + 1..g.order() {
            if g.mul(a, b) == g.mul(b, a) {
                continue;
            }
            found_pair = true;
            if g.generated_subgroup(&[a, b]).size() != g.order() {
                return false;
            }
        }
    }
    found_pair
}

/// Every proper element centralizer is a maximal subgroup of G.
pub fn all_centralizers_maximal(g: &Group, p: &CentralizerProfile) -> Result<bool> {
    if p.proper.is_empty() {
        return Err(Error::AbelianInput);
    }
    for c in &p.proper {
        if !g.is_maximal_subgroup(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Summary of a group's structural classification. Flags that only make
/// sense under a hypothesis (p-group, non-abelian) are None when the
/// hypothesis fails.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub order: usize,
    pub abelian: bool,
    pub nilpotency: Nilpotency,
    pub center_size: usize,
    pub commutator_size: usize,
    /// (p, k) with [G : Z(G)] = p^k, when that index is a prime power > 1.
    pub central_quotient_params: Option<(usize, u32)>,
    pub f_group: Option<bool>,
    pub ca_group: Option<bool>,
    pub i_group: Option<bool>,
    pub conjugate_type: Option<ConjugateType>,
    /// Uniform m with |Z(x)/Z(G)| = p^m over non-central x, if any.
    pub uniform_center_ratio_exp: Option<u32>,
    /// #{non-central x : |Z(x)/Z(G)| = p^2}, for p-groups.
    pub v_count: Option<usize>,
    pub special: Option<bool>,
    pub extraspecial: Option<bool>,
    pub semi_extraspecial: Option<bool>,
    pub ultraspecial: Option<bool>,
    pub camina: Option<bool>,
    pub minimal_nonabelian: bool,
    pub all_centralizers_maximal: Option<bool>,
    pub cent_count: usize,
    pub nacent_count: usize,
    pub zclass_count: usize,
}

impl ClassificationReport {
    /// Key/value lines, one flag per line, for CLI output.
    pub fn lines(&self) -> Vec<String> {
        fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
            match v {
                Some(x) => x.to_string(),
                None => "n/a".into(),
            }
        }
        let mut out = vec![
            format!("order {}", self.order),
            format!("abelian {}", self.abelian),
            format!("nilpotency {}", self.nilpotency),
            format!("center_size {}", self.center_size),
            format!("commutator_size {}", self.commutator_size),
        ];
        match self.central_quotient_params {
            Some((p, k)) => out.push(format!("central_quotient p^{k} (p={p})")),
            None => out.push("central_quotient not a prime power".into()),
        }
        out.push(format!("f_group {}", opt(&self.f_group)));
        out.push(format!("ca_group {}", opt(&self.ca_group)));
        out.push(format!("i_group {}", opt(&self.i_group)));
        out.push(format!("conjugate_type {}", opt(&self.conjugate_type)));
        out.push(format!("special {}", opt(&self.special)));
        out.push(format!("extraspecial {}", opt(&self.extraspecial)));
        out.push(format!("semi_extraspecial {}", opt(&self.semi_extraspecial)));
        out.push(format!("ultraspecial {}", opt(&self.ultraspecial)));
        out.push(format!("camina {}", opt(&self.camina)));
        out.push(format!("minimal_nonabelian {}", self.minimal_nonabelian));
        out.push(format!(
            "all_centralizers_maximal {}",
            opt(&self.all_centralizers_maximal)
        ));
        out.push(format!("cent_count {}", self.cent_count));
        out.push(format!("nacent_count {}", self.nacent_count));
        out.push(format!("zclass_count {}", self.zclass_count));
        out
    }
}

pub fn classify(g: &Group, p: &CentralizerProfile, zp: &ZClassPartition) -> ClassificationReport {
    let abelian = p.proper.is_empty();
    let center_size = p.center().size();
    let commutator_size = g.commutator_subgroup().size();
    let quotient_index = g.order() / center_size;
    let central_quotient_params = prime_power(quotient_index);

    let is_p_group = g.prime_power().is_some();
    let special = if is_p_group {
        Some(is_special_p(g).expect("order checked"))
    } else {
        None
    };
    let extraspecial = if is_p_group {
        Some(is_extraspecial(g).expect("order checked"))
    } else {
        None
    };
    let semi_extraspecial = if is_p_group && !abelian {
        Some(is_semi_extraspecial(g).expect("hypotheses checked"))
    } else {
        None
    };
    let ultraspecial = if is_p_group && !abelian {
        Some(is_ultraspecial(g).expect("hypotheses checked"))
    } else {
        None
    };
    let camina = if abelian { None } else { Some(is_camina_group(g).expect("non-abelian")) };

    // implication chain between the p-group flags
    if ultraspecial == Some(true) {
        assert_eq!(semi_extraspecial, Some(true), "ultraspecial must be semi-extraspecial");
    }
    if semi_extraspecial == Some(true) {
        assert_eq!(special, Some(true), "semi-extraspecial must be special");
    }
    if extraspecial == Some(true) {
        assert_eq!(special, Some(true), "extraspecial must be special");
    }
    // for non-abelian p-groups: semi-extraspecial iff Camina of class 2
    if let (Some(se), Some(cam)) = (semi_extraspecial, camina) {
        let class2 = g.nilpotency_class() == Nilpotency::Class(2);
        assert_eq!(se, cam && class2, "semi-extraspecial <-> Camina p-group of class 2");
    }
    // semi-extraspecial consequence: |C(x)| = [G:G'] for all x outside G',
    // i.e. [G:C(x)] = |G'|
    if semi_extraspecial == Some(true) {
        let d = g.commutator_subgroup();
        for x in 0..g.order() {
            if !d.contains(x) {
                assert_eq!(p.index_of(g, x), d.size(), "semi-extraspecial centralizer size");
            }
        }
    }

    let conj_type = if abelian { None } else { Some(conjugate_type(g, p).expect("non-abelian")) };
    let uniform_center_ratio_exp = central_quotient_params.and_then(|(prime, _)| {
        let ratios = p.center_ratios();
        let first = *ratios.first()?;
        if ratios.iter().all(|&r| r == first) {
            prime_power(first).filter(|&(q, _)| q == prime).map(|(_, m)| m)
        } else {
            None
        }
    });
    let v_count = central_quotient_params.map(|(prime, _)| {
        p.center_ratios().iter().filter(|&&r| r == prime * prime).count()
    });

    ClassificationReport {
        order: g.order(),
        abelian,
        nilpotency: g.nilpotency_class(),
        center_size,
        commutator_size,
        central_quotient_params,
        f_group: if abelian { None } else { Some(is_f_group(g, p)) },
        ca_group: if abelian {
            None
        } else {
            Some(is_ca_group(g, p).expect("non-abelian"))
        },
        i_group: if abelian {
            None
        } else {
            Some(is_i_group(g, p).expect("non-abelian"))
        },
        conjugate_type: conj_type,
        uniform_center_ratio_exp,
        v_count,
        special,
        extraspecial,
        semi_extraspecial,
        ultraspecial,
        camina,
        minimal_nonabelian: is_minimal_nonabelian(g),
        all_centralizers_maximal: if abelian {
            None
        } else {
            Some(all_centralizers_maximal(g, p).expect("non-abelian"))
        },
        cent_count: p.cent_count,
        nacent_count: p.nacent_count,
        zclass_count: zp.count(),
    }
}
