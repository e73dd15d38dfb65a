//! Isoclinism testing.
//!
//! Two groups A and B are isoclinic when there are isomorphisms
//! phi: A/Z(A) -> B/Z(B) and theta: A' -> B' with
//! theta([x, y]) = [phi(x), phi(y)] for all cosets x, y. The commutator of two
//! elements depends only on their central cosets, so the commutator map
//! descends to w: G/Z x G/Z -> G', and isoclinism is a pair of isomorphisms
//! compatible with the two w tables.
//!
//! The search assigns images to a greedy generating sequence of A/Z(A),
//! extending each partial map by multiplicative closure and pruning on both
//! homomorphism conflicts and partial-theta conflicts. Since commutators
//! generate the derived subgroup, a complete phi determines theta; the final
//! theta is then verified independently.

use crate::constructors::{construct_extraspecial, ExtraspecialVariant};
use crate::group::prime_power;
use crate::{Error, Group, Result};

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct IsoclinismWitness {
    /// Isomorphism A/Z(A) -> B/Z(B), on quotient element indices.
    pub phi: Vec<usize>,
    /// Isomorphism A' -> B', on derived-subgroup element indices.
    pub theta: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum Isoclinism {
    Isoclinic(IsoclinismWitness),
    NotIsoclinic(String),
}

impl Isoclinism {
    pub fn holds(&self) -> bool {
        matches!(self, Isoclinism::Isoclinic(_))
    }
}

/// One side of an isoclinism problem: the central quotient, the derived
/// subgroup as a standalone group, and the descended commutator table.
struct Side {
    q: Group,
    d: Group,
    /// w[x * |q| + y] = index in d of [rep(x), rep(y)]
    w: Vec<usize>,
    q_orders: Vec<usize>,
    d_orders: Vec<usize>,
}

fn side_of(g: &Group) -> Side {
    let z = g.center();
    let (q, _, reps) = g.quotient_with_map(&z).expect("center is normal");
    let dset = g.commutator_subgroup();
    let (d, d_elems) = g.subgroup_as_group(&dset).expect("derived is a subgroup");
    let mut d_index = vec![usize::MAX; g.order()];
    for (local, &e) in d_elems.iter().enumerate() {
        d_index[e] = local;
    }
    let n = q.order();
    let mut w = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            let c = g.commutator(reps[x], reps[y]);
            debug_assert!(d_index[c] != usize::MAX);
            w[x * n + y] = d_index[c];
        }
    }
    let q_orders = (0..q.order()).map(|e| q.element_order(e)).collect();
    let d_orders = (0..d.order()).map(|e| d.element_order(e)).collect();
    Side { q, d, w, q_orders, d_orders }
}

/// Sorted multiset of (order of x, order of y, order of [x, y]) over the
/// central quotient. An isoclinism invariant, used as a cheap reject.
pub fn commutator_map_signature(g: &Group) -> Vec<(usize, usize, usize)> {
    let s = side_of(g);
    let n = s.q.order();
    let mut sig: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|x| {
            let s = &s;
            (0..n).map(move |y| (s.q_orders[x], s.q_orders[y], s.d_orders[s.w[x * n + y]]))
        })
        .collect();
    sig.sort_unstable();
    sig
}

#[derive(Clone)]
struct SearchState {
    phi: Vec<Option<usize>>,
    phi_used: Vec<bool>,
    theta: Vec<Option<usize>>,
    theta_used: Vec<bool>,
    domain: Vec<usize>,
}

struct Search<'a> {
    a: &'a Side,
    b: &'a Side,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Extends `st` with x -> y, closing under multiplication and recording
    /// theta constraints. Returns None on any conflict.
    fn extend(&mut self, st: &SearchState, x0: usize, y0: usize) -> Option<SearchState> {
        let na = self.a.q.order();
        let mut st = st.clone();
        let mut queue: Vec<(usize, usize)> = vec![(x0, y0)];
        while let Some((x, y)) = queue.pop() {
            match st.phi[x] {
                Some(prev) => {
                    if prev != y {
                        return None;
                    }
                    continue;
                }
                None => {
                    if st.phi_used[y] || self.a.q_orders[x] != self.b.q_orders[y] {
                        return None;
                    }
                }
            }
            st.phi[x] = Some(y);
            st.phi_used[y] = true;
            // theta constraints against everything already in the domain
            for &d in &st.domain {
                let md = st.phi[d].unwrap();
                for (ca, cb) in [
                    (self.a.w[x * na + d], self.b.w[y * self.b.q.order() + md]),
                    (self.a.w[d * na + x], self.b.w[md * self.b.q.order() + y]),
                ] {
                    match st.theta[ca] {
                        Some(prev) if prev != cb => return None,
                        Some(_) => {}
                        None => {
                            if st.theta_used[cb]
                                || self.a.d_orders[ca] != self.b.d_orders[cb]
                            {
                                return None;
                            }
                            st.theta[ca] = Some(cb);
                            st.theta_used[cb] = true;
                        }
                    }
                }
            }
            let caa = self.a.w[x * na + x];
            let cbb = self.b.w[y * self.b.q.order() + y];
            match st.theta[caa] {
                Some(prev) if prev != cbb => return None,
                Some(_) => {}
                None => {
                    if st.theta_used[cbb] || self.a.d_orders[caa] != self.b.d_orders[cbb] {
                        return None;
                    }
                    st.theta[caa] = Some(cbb);
                    st.theta_used[cbb] = true;
                }
            }
            // multiplicative closure against the current domain
            for &d in &st.domain {
                let md = st.phi[d].unwrap();
                queue.push((self.a.q.mul(x, d), self.b.q.mul(y, md)));
                queue.push((self.a.q.mul(d, x), self.b.q.mul(md, y)));
            }
            queue.push((self.a.q.mul(x, x), self.b.q.mul(y, y)));
            st.domain.push(x);
        }
        Some(st)
    }

    fn search(
        &mut self,
        st: &SearchState,
        gens: &[usize],
        depth: usize,
    ) -> Result<Option<SearchState>> {
        if depth == gens.len() {
            return Ok(Some(st.clone()));
        }
        let g = gens[depth];
        for y in 0..self.b.q.order() {
            if st.phi_used[y] || self.b.q_orders[y] != self.a.q_orders[g] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            if let Some(next) = self.extend(st, g, y) {
                if let Some(found) = self.search(&next, gens, depth + 1)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }
}

/// Greedy generating sequence: each element properly extends the subgroup
/// generated by its predecessors.
fn generating_sequence(g: &Group) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = g.generated_subgroup(&[]);
    for e in 0..g.order() {
        if !span.contains(e) {
            gens.push(e);
            span = g.generated_subgroup(&gens);
            if span.size() == g.order() {
                break;
            }
        }
    }
    gens
}

/// Completes theta from its values on commutators to all of the derived
/// subgroup by multiplicative closure, then verifies it is an isomorphism
/// compatible with the commutator tables.
fn finish_witness(a: &Side, b: &Side, st: &SearchState) -> Option<IsoclinismWitness> {
    let phi: Vec<usize> = st.phi.iter().map(|m| m.unwrap()).collect();
    let mut theta = st.theta.clone();
    theta[0] = Some(0);
    // closure: the defined points include every commutator, which generate d
    let mut changed = true;
    while changed {
        changed = false;
        let defined: Vec<usize> = (0..a.d.order()).filter(|&i| theta[i].is_some()).collect();
        for &x in &defined {
            for &y in &defined {
                let p = a.d.mul(x, y);
                let img = b.d.mul(theta[x].unwrap(), theta[y].unwrap());
                match theta[p] {
                    Some(prev) if prev != img => return None,
                    Some(_) => {}
                    None => {
                        theta[p] = Some(img);
                        changed = true;
                    }
                }
            }
        }
    }
    let theta: Vec<usize> = theta.into_iter().collect::<Option<Vec<_>>>()?;
    // verify: theta bijective homomorphism
    let mut seen = vec![false; b.d.order()];
    for &t in &theta {
        if seen[t] {
            return None;
        }
        seen[t] = true;
    }
    for x in 0..a.d.order() {
        for y in 0..a.d.order() {
            if theta[a.d.mul(x, y)] != b.d.mul(theta[x], theta[y]) {
                return None;
            }
        }
    }
    // verify: phi bijective homomorphism and full compatibility with w
    let na = a.q.order();
    for x in 0..na {
        for y in 0..na {
            if phi[a.q.mul(x, y)] != b.q.mul(phi[x], phi[y]) {
                return None;
            }
            if theta[a.w[x * na + y]] != b.w[phi[x] * na + phi[y]] {
                return None;
            }
        }
    }
    Some(IsoclinismWitness { phi, theta })
}

pub fn are_isoclinic(a: &Group, b: &Group) -> Result<Isoclinism> {
    are_isoclinic_with_budget(a, b, DEFAULT_BUDGET)
}

pub fn are_isoclinic_with_budget(a: &Group, b: &Group, budget: u64) -> Result<Isoclinism> {
    let sa = side_of(a);
    let sb = side_of(b);
    if sa.q.order() != sb.q.order() {
        return Ok(Isoclinism::NotIsoclinic(format!(
            "central quotients have orders {} and {}",
            sa.q.order(),
            sb.q.order()
        )));
    }
    if sa.d.order() != sb.d.order() {
        return Ok(Isoclinism::NotIsoclinic(format!(
            "derived subgroups have orders {} and {}",
            sa.d.order(),
            sb.d.order()
        )));
    }
    if sa.q.order() == 1 {
        // both abelian
        return Ok(Isoclinism::Isoclinic(IsoclinismWitness {
            phi: vec![0],
            theta: vec![0],
        }));
    }
    {
        let mut siga: Vec<(usize, usize, usize)> = Vec::new();
        let mut sigb: Vec<(usize, usize, usize)> = Vec::new();
        let n = sa.q.order();
        for x in 0..n {
            for y in 0..n {
                siga.push((sa.q_orders[x], sa.q_orders[y], sa.d_orders[sa.w[x * n + y]]));
                sigb.push((sb.q_orders[x], sb.q_orders[y], sb.d_orders[sb.w[x * n + y]]));
            }
        }
        siga.sort_unstable();
        sigb.sort_unstable();
        if siga != sigb {
            return Ok(Isoclinism::NotIsoclinic(
                "commutator map signatures differ".into(),
            ));
        }
    }
    let gens = generating_sequence(&sa.q);
    let mut search = Search {
        a: &sa,
        b: &sb,
        nodes: 0,
        budget,
    };
    let init = SearchState {
        phi: {
            let mut v = vec![None; sa.q.order()];
            v[0] = Some(0);
            v
        },
        phi_used: {
            let mut v = vec![false; sb.q.order()];
            v[0] = true;
            v
        },
        theta: vec![None; sa.d.order()],
        theta_used: vec![false; sb.d.order()],
        domain: vec![0],
    };
    match search.search(&init, &gens, 0)? {
        Some(st) => match finish_witness(&sa, &sb, &st) {
            Some(w) => Ok(Isoclinism::Isoclinic(w)),
            None => Ok(Isoclinism::NotIsoclinic(
                "compatible quotient map admits no derived-subgroup isomorphism".into(),
            )),
        },
        None => Ok(Isoclinism::NotIsoclinic("search exhausted".into())),
    }
}

/// If G is isoclinic to an extraspecial group, returns its parameters
/// (p, a, variant) with |G/Z| = p^(2a). Requires |G/Z| to be an even prime
/// power; returns None otherwise or when no variant matches.
pub fn isoclinic_to_extraspecial(
    g: &Group,
) -> Result<Option<(usize, usize, ExtraspecialVariant)>> {
    let z = g.center();
    let index = g.order() / z.size();
    let Some((p, k)) = prime_power(index) else {
        return Ok(None);
    };
    if k % 2 != 0 {
        return Ok(None);
    }
    let a = (k / 2) as usize;
    for variant in [ExtraspecialVariant::Plus, ExtraspecialVariant::Minus] {
        let candidate = construct_extraspecial(p, a, variant)?;
        if are_isoclinic(g, &candidate)?.holds() {
            return Ok(Some((p, a, variant)));
        }
    }
    Ok(None)
}
