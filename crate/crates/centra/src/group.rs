//! Immutable finite-group values with table-based arithmetic and the
//! fundamental subgroup computations everything else builds on.

use crate::{Error, Result};

/// Bit-vector of element indices within a parent group of a fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    universe: usize,
    words: Vec<u64>,
    size: usize,
}

impl SubgroupSet {
    pub fn empty(universe: usize) -> Self {
        SubgroupSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
            size: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Inserts an index; returns true if it was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        let (w, b) = (i / 64, i % 64);
        if self.words[w] & (1 << b) == 0 {
            self.words[w] |= 1 << b;
            self.size += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        self.words[w] & (1 << b) != 0
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Nilpotency classification via the upper central series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Class(u32),
    NonNilpotent,
}

impl Nilpotency {
    pub fn is_nilpotent(self) -> bool {
        matches!(self, Nilpotency::Class(_))
    }
}

impl std::fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "{c}"),
            Nilpotency::NonNilpotent => write!(f, "non-nilpotent"),
        }
    }
}

/// Immutable finite group given by its full multiplication table.
///
/// Index 0 is always the identity. The table is validated on construction:
/// identity row/column, Latin-square property, two-sided inverses, and full
/// associativity.
#[derive(Clone)]
pub struct Group {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    name: Option<String>,
}

impl Group {
    pub fn from_table(rows: &[Vec<usize>], name: Option<String>) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::NotAGroup(format!("order {n} exceeds table limit")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(Error::NotAGroup(format!(
                        "entry at ({i},{j}) is {e}, out of range"
                    )));
                }
            }
        }
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = rows[i][j] as u16;
            }
        }
        // identity at index 0
        for j in 0..n {
            if mul[j] as usize != j {
                return Err(Error::NotAGroup(format!("0*{j} != {j}: 0 is not an identity")));
            }
            if mul[j * n] as usize != j {
                return Err(Error::NotAGroup(format!("{j}*0 != {j}: 0 is not an identity")));
            }
        }
        // Latin square
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let e = mul[i * n + j] as usize;
                if seen[e] {
                    return Err(Error::NotAGroup(format!("row {i} repeats {e}")));
                }
                seen[e] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let e = mul[j * n + i] as usize;
                if seen[e] {
                    return Err(Error::NotAGroup(format!("column {i} repeats {e}")));
                }
                seen[e] = true;
            }
        }
        // inverses
        let mut inv = vec![0u16; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| mul[i * n + j] == 0)
                .expect("Latin square row must contain 0");
            if mul[j * n + i] != 0 {
                return Err(Error::NotAGroup(format!("{i} has no two-sided inverse")));
            }
            inv[i] = j as u16;
        }
        // associativity
        for i in 0..n {
            for j in 0..n {
                let ij = mul[i * n + j] as usize;
                for k in 0..n {
                    let jk = mul[j * n + k] as usize;
                    if mul[ij * n + k] != mul[i * n + jk] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(Group {
            order: n,
            mul,
            inv,
            name,
        })
    }

    /// Builds the table from a product function over indices and validates it.
    pub fn from_fn(
        order: usize,
        name: Option<String>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Group> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..order).map(|j| f(i, j)).collect())
            .collect();
        Group::from_table(&rows, name)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// g x g^{-1}
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// [a, b] = a^{-1} b^{-1} a b
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn same_table(&self, other: &Group) -> bool {
        self.order == other.order && self.mul == other.mul
    }

    pub fn is_abelian(&self) -> bool {
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.mul(i, j) != self.mul(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn center(&self) -> SubgroupSet {
        let mut z = SubgroupSet::empty(self.order);
        'outer: for x in 0..self.order {
            for g in 0..self.order {
                if self.mul(x, g) != self.mul(g, x) {
                    continue 'outer;
                }
            }
            z.insert(x);
        }
        z
    }

    /// Smallest subgroup containing `seeds`; BFS closure under products.
    pub fn generated_subgroup(&self, seeds: &[usize]) -> SubgroupSet {
        let mut set = SubgroupSet::empty(self.order);
        set.insert(0);
        let mut elems = vec![0usize];
        let mut queue: Vec<usize> = Vec::new();
        for &s in seeds {
            if set.insert(s) {
                elems.push(s);
                queue.push(s);
            }
        }
        while let Some(x) = queue.pop() {
            // products with every element found so far, both orders
            let snapshot = elems.clone();
            for &y in &snapshot {
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if set.insert(p) {
                        elems.push(p);
                        queue.push(p);
                    }
                }
            }
        }
        set
    }

    pub fn commutator_subgroup(&self) -> SubgroupSet {
        let mut seeds = Vec::new();
        let mut seen = SubgroupSet::empty(self.order);
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.commutator(a, b);
                if seen.insert(c) {
                    seeds.push(c);
                }
            }
        }
        self.generated_subgroup(&seeds)
    }

    pub fn is_subgroup(&self, h: &SubgroupSet) -> bool {
        if !h.contains(0) {
            return false;
        }
        let members = h.to_vec();
        for &a in &members {
            if !h.contains(self.inv(a)) {
                return false;
            }
            for &b in &members {
                if !h.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_normal(&self, h: &SubgroupSet) -> bool {
        let members = h.to_vec();
        for g in 0..self.order {
            for &x in &members {
                if !h.contains(self.conj(g, x)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn normalizer(&self, h: &SubgroupSet) -> SubgroupSet {
        let members = h.to_vec();
        let mut n = SubgroupSet::empty(self.order);
        'outer: for g in 0..self.order {
            for &x in &members {
                if !h.contains(self.conj(g, x)) {
                    continue 'outer;
                }
            }
            n.insert(g);
        }
        n
    }

    /// True iff `h` is maximal among proper subgroups.
    pub fn is_maximal_subgroup(&self, h: &SubgroupSet) -> Result<bool> {
        if h.size() == self.order {
            return Err(Error::NotProper);
        }
        let members = h.to_vec();
        for g in 0..self.order {
            if h.contains(g) {
                continue;
            }
            let mut seeds = members.clone();
            seeds.push(g);
            if self.generated_subgroup(&seeds).size() != self.order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Quotient by a normal subgroup, with coset labels ordered by ascending
    /// minimal member so the output table is reproducible.
    pub fn quotient(&self, n: &SubgroupSet) -> Result<Group> {
        Ok(self.quotient_with_map(n)?.0)
    }

    /// Quotient plus the element-to-coset map and per-coset minimal
    /// representatives.
    pub fn quotient_with_map(&self, nsub: &SubgroupSet) -> Result<(Group, Vec<usize>, Vec<usize>)> {
        if !self.is_subgroup(nsub) {
            return Err(Error::NotAGroup("quotient by a non-subgroup".into()));
        }
        if !self.is_normal(nsub) {
            return Err(Error::NotNormal);
        }
        let n = self.order;
        let members = nsub.to_vec();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            // g is the minimal member of its coset, by scan order
            let id = reps.len();
            reps.push(g);
            for &x in &members {
                coset_of[self.mul(g, x)] = id;
            }
        }
        let q = reps.len();
        let rows: Vec<Vec<usize>> = (0..q)
            .map(|i| (0..q).map(|j| coset_of[self.mul(reps[i], reps[j])]).collect())
            .collect();
        let qg = Group::from_table(&rows, None)?;
        Ok((qg, coset_of, reps))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, i| lcm(acc, self.element_order(i)))
    }

    /// Conjugacy classes as sorted element lists, ordered by minimal member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class = SubgroupSet::empty(self.order);
            for g in 0..self.order {
                class.insert(self.conj(g, x));
            }
            let members = class.to_vec();
            for &m in &members {
                seen[m] = true;
            }
            classes.push(members);
        }
        classes
    }

    pub fn conjugacy_class_of(&self, x: usize) -> SubgroupSet {
        let mut class = SubgroupSet::empty(self.order);
        for g in 0..self.order {
            class.insert(self.conj(g, x));
        }
        class
    }

    /// Length of the upper central series, or NonNilpotent if it stabilizes
    /// below the whole group.
    pub fn nilpotency_class(&self) -> Nilpotency {
        let mut z = SubgroupSet::from_indices(self.order, [0]);
        let mut class = 0u32;
        loop {
            if z.size() == self.order {
                return Nilpotency::Class(class);
            }
            // next term: elements whose commutator with everything lies in z
            let mut next = SubgroupSet::empty(self.order);
            'outer: for x in 0..self.order {
                for g in 0..self.order {
                    if !z.contains(self.commutator(x, g)) {
                        continue 'outer;
                    }
                }
                next.insert(x);
            }
            if next.size() == z.size() {
                return Nilpotency::NonNilpotent;
            }
            z = next;
            class += 1;
        }
    }

    /// Conjugate of a whole subgroup: g H g^{-1}.
    pub fn conjugate_set(&self, g: usize, h: &SubgroupSet) -> SubgroupSet {
        let mut out = SubgroupSet::empty(self.order);
        for x in h.iter() {
            out.insert(self.conj(g, x));
        }
        out
    }

    pub fn subgroup_is_abelian(&self, h: &SubgroupSet) -> bool {
        let members = h.to_vec();
        for (idx, &a) in members.iter().enumerate() {
            for &b in &members[idx + 1..] {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Realizes a subgroup as a standalone Group on its own sorted element
    /// list. Returns the group and the list mapping new indices to parent
    /// element indices.
    pub fn subgroup_as_group(&self, h: &SubgroupSet) -> Result<(Group, Vec<usize>)> {
        let elems = h.to_vec();
        let index_of = |e: usize| elems.binary_search(&e).expect("closed subgroup");
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| index_of(self.mul(a, b))).collect())
            .collect();
        let g = Group::from_table(&rows, None)?;
        Ok((g, elems))
    }

    /// Some((p, k)) when the order is p^k for a prime p and k >= 1.
    pub fn prime_power(&self) -> Option<(usize, u32)> {
        prime_power(self.order)
    }

    /// All normal subgroups of index p (p prime).
    ///
    /// These are exactly the kernels of surjections onto C_p, i.e. the
    /// index-p subgroups containing K = <G', p-th powers>; enumerated as
    /// hyperplanes of the elementary abelian quotient G/K. Order is fixed by
    /// the lexicographic functional enumeration.
    pub fn normal_prime_index_subgroups(&self, p: usize) -> Vec<SubgroupSet> {
        debug_assert!(is_prime(p));
        let mut seeds: Vec<usize> = self.commutator_subgroup().to_vec();
        for x in 0..self.order {
            let mut xp = 0;
            for _ in 0..p {
                xp = self.mul(xp, x);
            }
            seeds.push(xp);
        }
        let k = self.generated_subgroup(&seeds);
        if self.order / k.size() < p {
            return Vec::new();
        }
        let (q, coset_of, _) = self
            .quotient_with_map(&k)
            .expect("K contains G' so it is normal");
        debug_assert!(q.exponent() == p || q.order() == 1);
        // coordinates of q's elements over F_p
        let mut coords: Vec<Option<Vec<usize>>> = vec![None; q.order()];
        coords[0] = Some(Vec::new());
        let mut rank = 0;
        for b in 1..q.order() {
            if coords[b].is_some() {
                continue;
            }
            // extend the span by powers of the new basis element
            let known: Vec<usize> = (0..q.order()).filter(|&e| coords[e].is_some()).collect();
            for &e in &known {
                coords[e].as_mut().unwrap().push(0);
            }
            let mut bk = b;
            for exp in 1..p {
                for &e in &known {
                    let mut c = coords[e].clone().unwrap();
                    c[rank] = exp;
                    coords[q.mul(e, bk)] = Some(c);
                }
                bk = q.mul(bk, b);
            }
            rank += 1;
        }
        // nonzero functionals with leading coefficient 1, lexicographic
        let mut functionals: Vec<Vec<usize>> = Vec::new();
        let mut current = vec![0usize; rank];
        loop {
            if current.iter().any(|&c| c != 0) {
                let lead = current.iter().find(|&&c| c != 0).unwrap();
                if *lead == 1 {
                    functionals.push(current.clone());
                }
            }
            let mut i = rank;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                current[i] += 1;
                if current[i] < p {
                    break;
                }
                current[i] = 0;
            }
            if current.iter().all(|&c| c == 0) {
                break;
            }
        }
        functionals
            .into_iter()
            .map(|f| {
                let mut h = SubgroupSet::empty(self.order);
                for x in 0..self.order {
                    let c = coords[coset_of[x]].as_ref().unwrap();
                    let dot: usize = c.iter().zip(&f).map(|(a, b)| a * b).sum();
                    if dot % p == 0 {
                        h.insert(x);
                    }
                }
                h
            })
            .collect()
    }

    /// Some((p, k)) when the group is elementary abelian of order p^k (k >= 1).
    pub fn elementary_abelian(&self) -> Option<(usize, u32)> {
        let (p, k) = self.prime_power()?;
        if !self.is_abelian() {
            return None;
        }
        for i in 1..self.order {
            if self.element_order(i) != p {
                return None;
            }
        }
        Some((p, k))
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Group(order={}, name={:?})",
            self.order,
            self.name.as_deref().unwrap_or("?")
        )
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Some((p, k)) when n = p^k, p prime, k >= 1.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

pub fn prime_divisors(n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn trivial_group() {
        let g = Group::from_table(&[vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.nilpotency_class(), Nilpotency::Class(0));
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn rejects_missing_inverse() {
        // order 2 with 1*1 = 1: row 1 repeats 1
        let err = Group::from_table(&[vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn rejects_identity_elsewhere() {
        let err = Group::from_table(&[vec![1, 0], vec![0, 1]], None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // a Latin square quasigroup that is not associative
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_table(&rows, None).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn center_of_abelian_is_everything() {
        let g = construct_cyclic(6).unwrap();
        assert_eq!(g.center().size(), 6);
    }

    #[test]
    fn center_d8_s3() {
        let d8 = construct_dihedral(8).unwrap();
        let z = d8.center();
        assert_eq!(z.size(), 2);
        assert!(z.contains(0) && z.contains(2)); // 1 and r^2
        let s3 = construct_symmetric(3).unwrap();
        assert_eq!(s3.center().size(), 1);
    }

    #[test]
    fn commutator_subgroups() {
        let c6 = construct_cyclic(6).unwrap();
        assert_eq!(c6.commutator_subgroup().size(), 1);
        let d8 = construct_dihedral(8).unwrap();
        assert_eq!(d8.commutator_subgroup().to_vec(), vec![0, 2]);
        let s3 = construct_symmetric(3).unwrap();
        let a3 = s3.commutator_subgroup();
        assert_eq!(a3.size(), 3);
        for x in a3.iter() {
            assert!(x == 0 || s3.element_order(x) == 3);
        }
    }

    #[test]
    fn generated_subgroup_cases() {
        let d8 = construct_dihedral(8).unwrap();
        assert_eq!(d8.generated_subgroup(&[]).to_vec(), vec![0]);
        assert_eq!(d8.generated_subgroup(&[1]).size(), 4); // <r>
        let s3 = construct_symmetric(3).unwrap();
        let transposition = (1..6).find(|&i| s3.element_order(i) == 2).unwrap();
        let threecycle = (1..6).find(|&i| s3.element_order(i) == 3).unwrap();
        assert_eq!(s3.generated_subgroup(&[transposition, threecycle]).size(), 6);
    }

    #[test]
    fn generated_subgroup_idempotent() {
        let d8 = construct_dihedral(8).unwrap();
        let h = d8.generated_subgroup(&[1, 4]);
        let again = d8.generated_subgroup(&h.to_vec());
        assert_eq!(h, again);
    }

    #[test]
    fn quotient_cases() {
        let d8 = construct_dihedral(8).unwrap();
        let whole = SubgroupSet::full(8);
        assert_eq!(d8.quotient(&whole).unwrap().order(), 1);
        let q = d8.quotient(&d8.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2); // Klein four
        let s3 = construct_symmetric(3).unwrap();
        let a3 = s3.commutator_subgroup();
        let q2 = s3.quotient(&a3).unwrap();
        assert_eq!(q2.order(), 2);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = construct_symmetric(3).unwrap();
        let t = (1..6).find(|&i| s3.element_order(i) == 2).unwrap();
        let h = s3.generated_subgroup(&[t]);
        assert!(matches!(s3.quotient(&h), Err(Error::NotNormal)));
    }

    #[test]
    fn normalizer_cases() {
        let s3 = construct_symmetric(3).unwrap();
        let whole = SubgroupSet::full(6);
        assert_eq!(s3.normalizer(&whole).size(), 6);
        let t = (1..6).find(|&i| s3.element_order(i) == 2).unwrap();
        let h = s3.generated_subgroup(&[t]);
        assert_eq!(s3.normalizer(&h), h); // self-normalizing
        let d8 = construct_dihedral(8).unwrap();
        let r = d8.generated_subgroup(&[1]);
        assert_eq!(d8.normalizer(&r).size(), 8); // index 2 is normal
        assert!(d8.is_normal(&r));
    }

    #[test]
    fn normalizer_contains_subgroup() {
        let s4 = construct_symmetric(4).unwrap();
        for seed in [1usize, 5, 7] {
            let h = s4.generated_subgroup(&[seed]);
            assert!(h.is_subset_of(&s4.normalizer(&h)));
        }
    }

    #[test]
    fn maximality_cases() {
        let s3 = construct_symmetric(3).unwrap();
        let t = (1..6).find(|&i| s3.element_order(i) == 2).unwrap();
        assert!(s3.is_maximal_subgroup(&s3.generated_subgroup(&[t])).unwrap());
        let a3 = s3.commutator_subgroup();
        assert!(s3.is_normal(&a3));
        assert!(s3.is_maximal_subgroup(&a3).unwrap());
        let d8 = construct_dihedral(8).unwrap();
        let r2 = d8.generated_subgroup(&[2]);
        assert!(!d8.is_maximal_subgroup(&r2).unwrap()); // inside <r>
        let whole = SubgroupSet::full(6);
        assert!(matches!(s3.is_maximal_subgroup(&whole), Err(Error::NotProper)));
    }

    #[test]
    fn nilpotency_cases() {
        assert_eq!(construct_cyclic(5).unwrap().nilpotency_class(), Nilpotency::Class(1));
        assert_eq!(construct_dihedral(8).unwrap().nilpotency_class(), Nilpotency::Class(2));
        assert_eq!(
            construct_symmetric(3).unwrap().nilpotency_class(),
            Nilpotency::NonNilpotent
        );
    }

    #[test]
    fn exponent_and_orders() {
        assert_eq!(construct_cyclic(4).unwrap().exponent(), 4);
        let d8 = construct_dihedral(8).unwrap();
        assert_eq!(d8.quotient(&d8.center()).unwrap().exponent(), 2);
    }

    #[test]
    fn conjugacy_classes_s3() {
        let s3 = construct_symmetric(3).unwrap();
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn lagrange_and_gz_cyclic() {
        for g in [
            construct_dihedral(8).unwrap(),
            construct_symmetric(4).unwrap(),
            construct_quaternion8().unwrap(),
        ] {
            let z = g.center();
            let d = g.commutator_subgroup();
            assert_eq!(g.order() % z.size(), 0);
            assert_eq!(g.order() % d.size(), 0);
            // G/Z is never nontrivially cyclic
            let q = g.quotient(&z).unwrap();
            if q.order() > 1 {
                assert!((0..q.order()).all(|i| q.element_order(i) < q.order()));
            }
        }
    }

    #[test]
    fn prime_power_helper() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(1), None);
    }
}
