//! Finite groups by Cayley table.

use std::collections::BTreeSet;

use crate::error::{Axiom, Error, Result};

/// A verified finite group on indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    center: Vec<usize>,
    derived: Vec<usize>,
    names: Vec<String>,
}

impl GroupTable {
    /// Validate a Cayley table (`table[g][h] = gh`) and derive the rest.
    pub fn from_table(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<GroupTable> {
        let m = table.len();
        if m == 0 {
            return Err(Error::axiom(Axiom::TableShape, &[0]));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != m || row.iter().any(|&x| x >= m) {
                return Err(Error::axiom(Axiom::TableShape, &[i]));
            }
        }
        let op = |g: usize, h: usize| table[g][h];
        let identity = (0..m)
            .find(|&e| (0..m).all(|g| op(e, g) == g && op(g, e) == g))
            .ok_or_else(|| Error::axiom(Axiom::GroupIdentity, &[]))?;
        for g in 0..m {
            for h in 0..m {
                for k in 0..m {
                    if op(op(g, h), k) != op(g, op(h, k)) {
                        return Err(Error::axiom(Axiom::GroupAssociativity, &[g, h, k]));
                    }
                }
            }
        }
        let mut inverse = vec![0; m];
        for g in 0..m {
            inverse[g] = (0..m)
                .find(|&h| op(g, h) == identity && op(h, g) == identity)
                .ok_or_else(|| Error::axiom(Axiom::GroupInverse, &[g]))?;
        }
        let names = names.unwrap_or_else(|| (0..m).map(|g| format!("g{g}")).collect());
        if names.len() != m {
            return Err(Error::axiom(Axiom::TableShape, &[names.len()]));
        }

        let mut seen = vec![false; m];
        let mut classes = Vec::new();
        for g in 0..m {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..m).map(|h| op(op(h, g), inverse[h])).collect();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class.into_iter().collect());
        }
        let center = (0..m).filter(|&g| (0..m).all(|h| op(g, h) == op(h, g))).collect();
        let mut commutators = BTreeSet::new();
        for g in 0..m {
            for h in 0..m {
                commutators.insert(op(op(inverse[g], inverse[h]), op(g, h)));
            }
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        let mut group = GroupTable {
            order: m,
            table: flat,
            identity,
            inverse,
            classes,
            center,
            derived: Vec::new(),
            names,
        };
        group.derived = group.subgroup_generated(&commutators.into_iter().collect::<Vec<_>>());
        Ok(group)
    }

    /// The quaternion group on `e, a, a^2, b, ab, a^3, a^2b, a^3b` (this index order).
    ///
    /// Elements are normal forms `a^s b^t`; products use `b a = a^3 b` and `b^2 = a^2`.
    pub fn q8() -> GroupTable {
        const FORMS: [(u8, u8); 8] = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (3, 0), (2, 1), (3, 1)];
        let index = |s: u8, t: u8| FORMS.iter().position(|&f| f == (s % 4, t)).expect("normal form");
        let table: Vec<Vec<usize>> = FORMS
            .iter()
            .map(|&(s, t)| {
                FORMS
                    .iter()
                    .map(|&(u, v)| {
                        // a^s b^t a^u b^v = a^(s +- u) b^(t + v)
                        let exp = if t == 1 { s + 4 - u } else { s + u };
                        if t + v == 2 {
                            index(exp + 2, 0)
                        } else {
                            index(exp, t + v)
                        }
                    })
                    .collect()
            })
            .collect();
        let names = ["e", "a", "a^2", "b", "ab", "a^3", "a^2b", "a^3b"].map(String::from).to_vec();
        GroupTable::from_table(&table, Some(names)).expect("Q8 table is a group")
    }

    pub fn cyclic(n: usize) -> Result<GroupTable> {
        if n == 0 {
            return Err(Error::axiom(Axiom::TableShape, &[0]));
        }
        let table: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "c".to_string(),
                _ => format!("c^{k}"),
            })
            .collect();
        GroupTable::from_table(&table, Some(names))
    }

    pub fn elementary_abelian_2(rank: u32) -> Result<GroupTable> {
        if rank > 12 {
            return Err(Error::Overflow);
        }
        let m = 1usize << rank;
        let table: Vec<Vec<usize>> = (0..m).map(|g| (0..m).map(|h| g ^ h).collect()).collect();
        let names = (0..m).map(|g| if g == 0 { "e".into() } else { format!("v{g}") }).collect();
        GroupTable::from_table(&table, Some(names))
    }

    /// Direct product; the pair `(g, h)` has index `g * |H| + h`.
    pub fn product(g1: &GroupTable, g2: &GroupTable) -> Result<GroupTable> {
        let (m, k) = (g1.order, g2.order);
        let total = m.checked_mul(k).filter(|&t| t <= 4096).ok_or(Error::Overflow)?;
        let table: Vec<Vec<usize>> = (0..total)
            .map(|x| (0..total).map(|y| g1.mul(x / k, y / k) * k + g2.mul(x % k, y % k)).collect())
            .collect();
        let names = (0..total).map(|x| format!("({},{})", g1.names[x / k], g2.names[x % k])).collect();
        GroupTable::from_table(&table, Some(names))
    }

    /// Quotient by a normal subgroup; cosets are ordered by least representative.
    pub fn quotient(&self, normal: &[usize]) -> Result<GroupTable> {
        if !self.is_normal_subgroup(normal) {
            return Err(Error::axiom(Axiom::Subgroup, normal));
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &n in normal {
                coset_of[self.mul(g, n)] = reps.len();
            }
            reps.push(g);
        }
        let table: Vec<Vec<usize>> = reps
            .iter()
            .map(|&g| reps.iter().map(|&h| coset_of[self.mul(g, h)]).collect())
            .collect();
        let names = reps.iter().map(|&g| format!("{}N", self.names[g])).collect();
        GroupTable::from_table(&table, Some(names))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Conjugacy classes, ordered by least member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn derived_subgroup(&self) -> &[usize] {
        &self.derived
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_abelian(&self) -> bool {
        self.center.len() == self.order
    }

    /// Cayley table as rows.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Sorted subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        members.into_iter().collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        s.contains(&self.identity)
            && s.iter().all(|&g| g < self.order && s.contains(&self.inverse[g]))
            && s.iter().all(|&g| s.iter().all(|&h| s.contains(&self.mul(g, h))))
    }

    pub fn is_normal_subgroup(&self, set: &[usize]) -> bool {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        self.is_subgroup(set)
            && (0..self.order).all(|g| s.iter().all(|&h| s.contains(&self.mul(self.mul(g, h), self.inverse[g]))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q8_structure() {
        let q = GroupTable::q8();
        let a = q.index_of_name("a").unwrap();
        let b = q.index_of_name("b").unwrap();
        let a2 = q.index_of_name("a^2").unwrap();
        assert_eq!(q.center(), &[0, a2]);
        assert_eq!(q.derived_subgroup(), &[0, a2]);
        assert_eq!(q.classes().len(), 5);
        let name = |g: usize| q.name(g).to_string();
        assert_eq!(name(q.mul(a, b)), "ab");
        assert_eq!(name(q.mul(b, a)), "a^3b");
        // defining relations
        let a4 = q.mul(q.mul(a, a), q.mul(a, a));
        assert_eq!(a4, q.identity());
        assert_eq!(q.mul(a, a), q.mul(b, b));
        assert_eq!(q.mul(q.mul(a, b), q.inverse(a)), q.inverse(b));
    }

    #[test]
    fn q8_classes_by_exhaustion() {
        let q = GroupTable::q8();
        let named: Vec<Vec<&str>> = q.classes().iter().map(|c| c.iter().map(|&g| q.name(g)).collect()).collect();
        assert_eq!(
            named,
            vec![vec!["e"], vec!["a", "a^3"], vec!["a^2"], vec!["b", "a^2b"], vec!["ab", "a^3b"]]
        );
    }

    #[test]
    fn other_groups() {
        let c2 = GroupTable::cyclic(2).unwrap();
        assert_eq!(c2.order(), 2);
        assert!(c2.is_abelian());
        let h = GroupTable::product(&GroupTable::q8(), &c2).unwrap();
        assert_eq!(h.order(), 16);
        assert!(!h.is_abelian());
        // Hamiltonian: every subgroup normal; check cyclic subgroups.
        for g in 0..16 {
            assert!(h.is_normal_subgroup(&h.subgroup_generated(&[g])));
        }
        let e = GroupTable::elementary_abelian_2(3).unwrap();
        assert_eq!(e.order(), 8);
        assert!(e.is_abelian());
    }

    #[test]
    fn nonassociative_table_rejected() {
        // identity 0, but 1*(1*2) != (1*1)*2
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        assert!(GroupTable::from_table(&t, None).is_err());
    }

    #[test]
    fn quotient_of_q8_by_derived() {
        let q = GroupTable::q8();
        let k = q.quotient(q.derived_subgroup()).unwrap();
        assert_eq!(k.order(), 4);
        assert!(k.is_abelian());
        assert!(q.quotient(&[0, 1]).is_err());
    }
}
