//! Grade groups: finitely generated abelian groups `Z^r + Z/n1 + ... + Z/nk`
//! (written additively) and finite groups given by a multiplication table.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, HermiteBasis};

/// Element of a grade group. Abelian groups use one integer per cyclic
/// factor (torsion coordinates reduced into `[0, n)`); table groups use a
/// single entry holding the table index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// A cardinality that may be infinite (indices of subgroups, group orders).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Cardinal {
    Finite(u128),
    Infinite,
}

impl Cardinal {
    pub fn finite(&self) -> Option<u128> {
        match self {
            Cardinal::Finite(n) => Some(*n),
            Cardinal::Infinite => None,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl TableGroup {
    /// Validates the group axioms on a full multiplication table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let m = labels.len();
        if m == 0 || table.len() != m || table.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidInput("group table must be square and nonempty".into()));
        }
        if table.iter().flatten().any(|&x| x >= m) {
            return Err(Error::InvalidInput("group table entry out of range".into()));
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidInput("group table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(m);
        for g in 0..m {
            let inv = (0..m)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element `{}` has no inverse", labels[g])))?;
            inverse.push(inv);
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!(
                            "group table not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != m {
            return Err(Error::InvalidInput("duplicate group element labels".into()));
        }
        Ok(TableGroup {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradeGroup {
    Abelian { rank: usize, torsion: Vec<u64> },
    Table(TableGroup),
}

impl GradeGroup {
    pub fn abelian(rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if torsion.contains(&0) {
            return Err(Error::InvalidInput("torsion orders must be positive".into()));
        }
        Ok(GradeGroup::Abelian { rank, torsion })
    }

    pub fn trivial() -> Self {
        GradeGroup::Abelian {
            rank: 0,
            torsion: vec![],
        }
    }

    pub fn integers() -> Self {
        GradeGroup::Abelian {
            rank: 1,
            torsion: vec![],
        }
    }

    pub fn cyclic(n: u64) -> Self {
        GradeGroup::Abelian {
            rank: 0,
            torsion: vec![n],
        }
    }

    pub fn table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        Ok(GradeGroup::Table(TableGroup::new(labels, table)?))
    }

    /// Length of coordinate vectors for elements.
    pub fn coord_len(&self) -> usize {
        match self {
            GradeGroup::Abelian { rank, torsion } => rank + torsion.len(),
            GradeGroup::Table(_) => 1,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GradeGroup::Abelian { .. } => true,
            GradeGroup::Table(t) => {
                let m = t.size();
                (0..m).all(|a| (0..m).all(|b| t.table[a][b] == t.table[b][a]))
            }
        }
    }

    pub fn is_fg_abelian(&self) -> bool {
        matches!(self, GradeGroup::Abelian { .. })
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GradeGroup::Abelian { .. } => GroupElement(vec![0; self.coord_len()]),
            GradeGroup::Table(t) => GroupElement(vec![t.identity as i64]),
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    /// Normalizes raw coordinates into an element.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.coord_len() {
            return Err(Error::Structural(format!(
                "expected {} coordinates, got {}",
                self.coord_len(),
                coords.len()
            )));
        }
        match self {
            GradeGroup::Abelian { rank, torsion } => {
                let mut c = coords.to_vec();
                for (k, &n) in torsion.iter().enumerate() {
                    c[rank + k] = c[rank + k].rem_euclid(n as i64);
                }
                Ok(GroupElement(c))
            }
            GradeGroup::Table(t) => {
                if coords[0] < 0 || coords[0] as usize >= t.size() {
                    return Err(Error::Structural(format!("table index {} out of range", coords[0])));
                }
                Ok(GroupElement(coords.to_vec()))
            }
        }
    }

    pub fn contains_element(&self, g: &GroupElement) -> bool {
        self.element(&g.0).is_ok_and(|n| n == *g)
    }

    /// Group law `g·h` (addition for abelian groups); owner mismatch is an error.
    pub fn combine(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        if !self.contains_element(g) || !self.contains_element(h) {
            return Err(Error::Structural(format!(
                "elements {g:?}, {h:?} do not belong to this group"
            )));
        }
        Ok(self.op(g, h))
    }

    /// Unchecked group law for elements already known to belong to the group.
    pub fn op(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        match self {
            GradeGroup::Abelian { .. } => {
                let sum: Vec<i64> = g.0.iter().zip(&h.0).map(|(a, b)| a + b).collect();
                self.element(&sum).expect("coordinate length")
            }
            GradeGroup::Table(t) => GroupElement(vec![t.table[g.0[0] as usize][h.0[0] as usize] as i64]),
        }
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        match self {
            GradeGroup::Abelian { .. } => {
                let neg: Vec<i64> = g.0.iter().map(|a| -a).collect();
                self.element(&neg).expect("coordinate length")
            }
            GradeGroup::Table(t) => GroupElement(vec![t.inverse[g.0[0] as usize] as i64]),
        }
    }

    /// `g^k` (or `k·g` additively).
    pub fn power(&self, g: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inverse(g) } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.op(&acc, &base);
        }
        acc
    }

    pub fn order(&self) -> Cardinal {
        match self {
            GradeGroup::Abelian { rank, torsion } => {
                if *rank > 0 {
                    Cardinal::Infinite
                } else {
                    Cardinal::Finite(torsion.iter().map(|&n| n as u128).product())
                }
            }
            GradeGroup::Table(t) => Cardinal::Finite(t.size() as u128),
        }
    }

    /// All elements of a finite group, in a fixed order.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        match self {
            GradeGroup::Abelian { rank, torsion } => {
                if *rank > 0 {
                    return None;
                }
                let mut out = vec![vec![]];
                for &n in torsion {
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<i64>| {
                            (0..n as i64).map(move |x| {
                                let mut p = prefix.clone();
                                p.push(x);
                                p
                            })
                        })
                        .collect();
                }
                Some(out.into_iter().map(GroupElement).collect())
            }
            GradeGroup::Table(t) => Some((0..t.size()).map(|i| GroupElement(vec![i as i64])).collect()),
        }
    }

    /// A generating set: unit vectors for abelian groups, all
    /// non-identity elements for table groups.
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        match self {
            GradeGroup::Abelian { rank, torsion } => (0..self.coord_len())
                .filter(|&k| k < *rank || torsion[k - rank] > 1)
                .map(|k| {
                    let mut c = vec![0; self.coord_len()];
                    c[k] = 1;
                    GroupElement(c)
                })
                .collect(),
            GradeGroup::Table(t) => (0..t.size())
                .filter(|&i| i != t.identity)
                .map(|i| GroupElement(vec![i as i64]))
                .collect(),
        }
    }

    pub fn format_element(&self, g: &GroupElement) -> String {
        match self {
            GradeGroup::Abelian { .. } => {
                if g.0.len() == 1 {
                    g.0[0].to_string()
                } else {
                    let parts: Vec<String> = g.0.iter().map(i64::to_string).collect();
                    format!("({})", parts.join(","))
                }
            }
            GradeGroup::Table(t) => t.labels[g.0[0] as usize].clone(),
        }
    }

    /// Parses `"(1,0)"`, `"3"`, `"()"` or a table label.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let t = text.trim();
        match self {
            GradeGroup::Table(tg) => tg
                .index_of(t)
                .map(|i| GroupElement(vec![i as i64]))
                .ok_or_else(|| Error::InvalidInput(format!("unknown group element `{t}`"))),
            GradeGroup::Abelian { .. } => {
                let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
                let coords: Vec<i64> = if inner.trim().is_empty() {
                    vec![]
                } else {
                    inner
                        .split(',')
                        .map(|s| s.trim().parse::<i64>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::InvalidInput(format!("malformed group element `{t}`")))?
                };
                self.element(&coords)
            }
        }
    }

    /// Relation rows `n_i e_{r+i}` presenting the group as a quotient of `Z^{r+k}`.
    fn relation_rows(&self) -> Vec<Vec<BigInt>> {
        match self {
            GradeGroup::Abelian { rank, torsion } => torsion
                .iter()
                .enumerate()
                .map(|(k, &n)| {
                    let mut row = vec![BigInt::zero(); rank + torsion.len()];
                    row[rank + k] = BigInt::from(n);
                    row
                })
                .collect(),
            GradeGroup::Table(_) => vec![],
        }
    }

    /// Index `|G : H|`: Smith normal form of relations plus generators for
    /// abelian groups, closure counting for table groups.
    pub fn coset_index(&self, h: &SubgroupSpec) -> Result<Cardinal> {
        for g in &h.generators {
            if !self.contains_element(g) {
                return Err(Error::Structural(format!("generator {g:?} not in group")));
            }
        }
        match self {
            GradeGroup::Abelian { .. } => {
                let m = self.coord_len();
                if m == 0 {
                    return Ok(Cardinal::Finite(1));
                }
                let mut rows = self.relation_rows();
                rows.extend(
                    h.generators
                        .iter()
                        .map(|g| g.0.iter().map(|&x| BigInt::from(x)).collect()),
                );
                if rows.is_empty() {
                    return Ok(Cardinal::Infinite);
                }
                let snf = smith_normal_form(&rows);
                if snf.invariants.len() < m || snf.invariants.iter().any(Zero::is_zero) {
                    return Ok(Cardinal::Infinite);
                }
                let prod: BigInt = snf.invariants.iter().product();
                Ok(Cardinal::Finite(
                    prod.to_u128()
                        .ok_or_else(|| Error::Unsupported("index exceeds 128 bits".into()))?,
                ))
            }
            GradeGroup::Table(t) => {
                let sub = self.closure(&h.generators);
                Ok(Cardinal::Finite((t.size() / sub.len()) as u128))
            }
        }
    }

    /// Elements of the subgroup generated by `gens` (finite groups only).
    pub fn closure(&self, gens: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        let e = self.identity();
        seen.insert(e.clone());
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.op(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Commutator subgroup of a table group and its order.
    pub fn derived_subgroup(&self) -> Result<(SubgroupSpec, usize)> {
        let GradeGroup::Table(_) = self else {
            if self.is_fg_abelian() {
                return Ok((SubgroupSpec::new(vec![]), 1));
            }
            unreachable!()
        };
        let elems = self.elements().unwrap();
        let mut commutators = BTreeSet::new();
        for g in &elems {
            for h in &elems {
                let c = self.op(&self.op(g, h), &self.op(&self.inverse(g), &self.inverse(h)));
                commutators.insert(c);
            }
        }
        let gens: Vec<GroupElement> = commutators.into_iter().collect();
        let sub = self.closure(&gens);
        Ok((SubgroupSpec::new(sub.clone()), sub.len()))
    }

    /// Center of a finite group.
    pub fn center_elements(&self) -> Option<Vec<GroupElement>> {
        let elems = self.elements()?;
        Some(
            elems
                .iter()
                .filter(|z| elems.iter().all(|g| self.op(z, g) == self.op(g, z)))
                .cloned()
                .collect(),
        )
    }

    /// Lattice data for reducing elements modulo a subgroup (abelian only).
    pub fn quotient_reducer(&self, h: &SubgroupSpec) -> Result<CosetReducer> {
        if !self.is_fg_abelian() {
            return Err(Error::Unsupported("coset reduction needs an abelian group".into()));
        }
        let mut rows = self.relation_rows();
        rows.extend(
            h.generators
                .iter()
                .map(|g| g.0.iter().map(|&x| BigInt::from(x)).collect()),
        );
        Ok(CosetReducer {
            group: self.clone(),
            lattice: HermiteBasis::new(self.coord_len(), &rows),
        })
    }
}

impl fmt::Display for GradeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeGroup::Abelian { rank, torsion } => {
                let mut parts = Vec::new();
                match rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                parts.extend(torsion.iter().map(|n| format!("Z/{n}")));
                if parts.is_empty() {
                    write!(f, "trivial")
                } else {
                    write!(f, "{}", parts.join(" x "))
                }
            }
            GradeGroup::Table(t) => write!(f, "table({})", t.size()),
        }
    }
}

impl std::str::FromStr for GradeGroup {
    type Err = Error;

    /// Parses `"Z^r x Z/n1 x ..."`, `"Z"`, `"Z/2 x Z/2"` or `"trivial"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "trivial" || t == "1" || t == "0" {
            return Ok(GradeGroup::trivial());
        }
        let mut rank = 0usize;
        let mut torsion = Vec::new();
        for part in t.split(['x', '×']) {
            let p = part.trim().replace(' ', "");
            let bad = || Error::InvalidInput(format!("unknown group factor `{p}`"));
            if p == "Z" {
                rank += 1;
            } else if let Some(r) = p.strip_prefix("Z^") {
                rank += r.parse::<usize>().map_err(|_| bad())?;
            } else if let Some(n) = p.strip_prefix("Z/").or_else(|| p.strip_prefix("Z_")) {
                torsion.push(n.parse::<u64>().map_err(|_| bad())?);
            } else if let Some(n) = p.strip_prefix('Z') {
                torsion.push(n.parse::<u64>().map_err(|_| bad())?);
            } else {
                return Err(bad());
            }
        }
        GradeGroup::abelian(rank, torsion)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SubgroupSpec {
    pub generators: Vec<GroupElement>,
}

impl SubgroupSpec {
    pub fn new(generators: Vec<GroupElement>) -> Self {
        SubgroupSpec { generators }
    }

    pub fn trivial() -> Self {
        SubgroupSpec::default()
    }
}

/// Canonical coset representatives for `G / H` with `G` abelian.
#[derive(Clone, Debug)]
pub struct CosetReducer {
    group: GradeGroup,
    lattice: HermiteBasis,
}

impl CosetReducer {
    pub fn reduce(&self, g: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = g.0.iter().map(|&x| BigInt::from(x)).collect();
        let r = self.lattice.reduce(&v);
        let coords: Vec<i64> = r.iter().map(|x| x.to_i64().expect("small coordinates")).collect();
        self.group.element(&coords).expect("coordinate length")
    }

    pub fn same_coset(&self, a: &GroupElement, b: &GroupElement) -> bool {
        self.reduce(&self.group.op(a, &self.group.inverse(b))) == self.group.identity()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.reduce(g) == self.group.identity()
    }
}

/// Builds the symmetric group `S_3` with the labelling
/// `e, a=(23), b=(13), c=(12), d=(123), f=(132)`.
pub fn symmetric_group_s3() -> GradeGroup {
    let perms: [(&str, [usize; 3]); 6] = [
        ("e", [0, 1, 2]),
        ("a", [0, 2, 1]),
        ("b", [2, 1, 0]),
        ("c", [1, 0, 2]),
        ("d", [1, 2, 0]),
        ("f", [2, 0, 1]),
    ];
    permutation_group(&perms)
}

/// Table group from permutations in image notation; the product `p·q`
/// applies `q` first (composition `p ∘ q`).
pub fn permutation_group<const N: usize>(perms: &[(&str, [usize; N])]) -> GradeGroup {
    let index: BTreeMap<[usize; N], usize> = perms.iter().enumerate().map(|(i, (_, p))| (*p, i)).collect();
    let table = perms
        .iter()
        .map(|(_, p)| {
            perms
                .iter()
                .map(|(_, q)| {
                    let mut comp = [0; N];
                    for k in 0..N {
                        comp[k] = p[q[k]];
                    }
                    index[&comp]
                })
                .collect()
        })
        .collect();
    GradeGroup::table(perms.iter().map(|(l, _)| l.to_string()).collect(), table).expect("permutations form a group")
}

/// The dihedral group of order 8 as permutations of the square's vertices.
pub fn dihedral_group_d4() -> GradeGroup {
    let perms: [(&str, [usize; 4]); 8] = [
        ("e", [0, 1, 2, 3]),
        ("r", [1, 2, 3, 0]),
        ("r2", [2, 3, 0, 1]),
        ("r3", [3, 0, 1, 2]),
        ("s", [0, 3, 2, 1]),
        ("sr", [1, 0, 3, 2]),
        ("sr2", [2, 1, 0, 3]),
        ("sr3", [3, 2, 1, 0]),
    ];
    permutation_group(&perms)
}

/// Cyclic group of order `n` presented by its addition table.
pub fn cyclic_table(n: usize) -> GradeGroup {
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GradeGroup::table(labels, table).expect("cyclic group")
}

impl GradeGroup {
    pub fn is_trivial(&self) -> bool {
        self.order() == Cardinal::Finite(1)
    }

    /// Canonical representatives of `G / H` for abelian `G` when the index
    /// is finite (and at most `limit`).
    pub fn quotient_classes(&self, h: &SubgroupSpec, limit: usize) -> Result<Vec<GroupElement>> {
        match self.coset_index(h)? {
            Cardinal::Infinite => return Err(Error::Unsupported("quotient has infinite index".into())),
            Cardinal::Finite(n) if n as usize > limit => {
                return Err(Error::Unsupported(format!("quotient has {n} classes")))
            }
            Cardinal::Finite(_) => {}
        }
        let red = self.quotient_reducer(h)?;
        let gens = self.standard_generators();
        let start = red.reduce(&self.identity());
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = red.reduce(&self.op(&x, g));
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

/// Order of the subgroup generated by `gens` in a finite group, or `None`.
pub fn subgroup_order(group: &GradeGroup, gens: &[GroupElement]) -> Option<u128> {
    group.elements()?;
    Some(group.closure(gens).len() as u128)
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn is<T: Send + Sync>() {}
    is::<GradeGroup>();
    is::<GroupElement>();
    let _ = BigInt::one();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_combine() {
        let g: GradeGroup = "Z/2 x Z/2".parse().unwrap();
        let a = g.element(&[1, 0]).unwrap();
        let b = g.element(&[1, 1]).unwrap();
        assert_eq!(g.combine(&a, &b).unwrap(), g.element(&[0, 1]).unwrap());
        let z = GradeGroup::integers();
        let two = z.element(&[2]).unwrap();
        let three = z.element(&[3]).unwrap();
        assert_eq!(z.combine(&two, &three).unwrap().0, vec![5]);
        assert!(z.combine(&two, &a).is_err());
    }

    #[test]
    fn s3_combination_follows_composition() {
        let s3 = symmetric_group_s3();
        let a = s3.parse_element("a").unwrap();
        let b = s3.parse_element("b").unwrap();
        // (23)∘(13): 1 -> 3 -> 2, 2 -> 2 -> 3, 3 -> 1 -> 1, i.e. (123) = d.
        assert_eq!(s3.format_element(&s3.combine(&a, &b).unwrap()), "d");
    }

    #[test]
    fn coset_indices() {
        let z = GradeGroup::integers();
        let h = SubgroupSpec::new(vec![z.element(&[2]).unwrap()]);
        assert_eq!(z.coset_index(&h).unwrap(), Cardinal::Finite(2));
        let v4: GradeGroup = "Z/2 x Z/2".parse().unwrap();
        assert_eq!(v4.coset_index(&SubgroupSpec::trivial()).unwrap(), Cardinal::Finite(4));
        let z2: GradeGroup = "Z^2".parse().unwrap();
        let h = SubgroupSpec::new(vec![z2.element(&[2, 0]).unwrap(), z2.element(&[0, 3]).unwrap()]);
        assert_eq!(z2.coset_index(&h).unwrap(), Cardinal::Finite(6));
        assert_eq!(z.coset_index(&SubgroupSpec::trivial()).unwrap(), Cardinal::Infinite);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(cyclic_table(2).derived_subgroup().unwrap().1, 1);
        let s3 = symmetric_group_s3();
        let (sub, m) = s3.derived_subgroup().unwrap();
        assert_eq!(m, 3);
        let mut names: Vec<String> = sub.generators.iter().map(|g| s3.format_element(g)).collect();
        names.sort();
        assert_eq!(names, vec!["d", "e", "f"]);
        assert_eq!(dihedral_group_d4().derived_subgroup().unwrap().1, 2);
    }

    #[test]
    fn bad_tables_rejected() {
        let labels = vec!["e".to_string(), "x".to_string()];
        assert!(GradeGroup::table(labels.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GradeGroup::table(labels, vec![vec![0, 1], vec![1, 0]]).is_ok());
    }

    #[test]
    fn parse_and_format() {
        let g: GradeGroup = "Z^2 x Z/3".parse().unwrap();
        assert_eq!(g.to_string(), "Z^2 x Z/3");
        let e = g.parse_element("(1,-2,5)").unwrap();
        assert_eq!(g.format_element(&e), "(1,-2,2)");
        assert!("Q".parse::<GradeGroup>().is_err());
    }

    #[test]
    fn coset_reducer_is_canonical() {
        let z = GradeGroup::integers();
        let r = z
            .quotient_reducer(&SubgroupSpec::new(vec![z.element(&[2]).unwrap()]))
            .unwrap();
        assert_eq!(r.reduce(&z.element(&[7]).unwrap()).0, vec![1]);
        assert_eq!(r.reduce(&z.element(&[-4]).unwrap()).0, vec![0]);
        assert!(r.same_coset(&z.element(&[3]).unwrap(), &z.element(&[-1]).unwrap()));
    }
}
