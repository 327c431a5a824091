//! Additively closed subsystems Ψ ⊆ Φ, their simple systems J ⊂ Φ⁺,
//! component decomposition and type, distinguished coset representatives
//! D_Ψ, and enumeration of subsystems up to W-conjugacy.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{rank, Field, Vector};
use crate::rootsys::{CartanType, RootSystem};
use crate::weyl::{ElementId, ReflectionGroup, Subgroup};

/// Type of one indecomposable component. `tilde` marks the long-root
/// A1 inside G2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentType {
    pub letter: char,
    pub rank: usize,
    pub tilde: bool,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tilde && self.letter == 'A' {
            write!(f, "Ã{}", self.rank)
        } else if self.tilde {
            write!(f, "{}\u{303}{}", self.letter, self.rank)
        } else {
            write!(f, "{}{}", self.letter, self.rank)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subsystem {
    roots: Vec<usize>,
    simple: Vec<usize>,
    components: Vec<Vec<usize>>,
    types: Vec<ComponentType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemJson {
    pub r#type: String,
    pub simple_roots: Vec<String>,
}

/// Closure of `gens` under the reflections `τ_g`, `g ∈ gens`.
fn reflection_orbit(rs: &RootSystem, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; rs.num_roots()];
    let mut out: Vec<usize> = Vec::new();
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            out.push(g);
        }
    }
    let mut i = 0;
    while i < out.len() {
        let r = out[i];
        for &g in gens {
            let img = rs.reflect_root(g, r);
            if !seen[img] {
                seen[img] = true;
                out.push(img);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Ψ⁺ elements that are not a sum of two Ψ⁺ elements, in index order.
fn extract_simple(rs: &RootSystem, roots: &[usize]) -> Vec<usize> {
    let pos: Vec<usize> = roots.iter().copied().filter(|&r| rs.is_positive(r)).collect();
    let pos_set: HashSet<usize> = pos.iter().copied().collect();
    let mut decomposable = HashSet::new();
    for (i, &a) in pos.iter().enumerate() {
        for &b in &pos[i..] {
            if let Some(s) = rs.sum(a, b) {
                if pos_set.contains(&s) {
                    decomposable.insert(s);
                }
            }
        }
    }
    pos.into_iter().filter(|r| !decomposable.contains(r)).collect()
}

fn check_additively_closed(rs: &RootSystem, roots: &[usize]) -> Result<()> {
    let set: HashSet<usize> = roots.iter().copied().collect();
    for (i, &a) in roots.iter().enumerate() {
        for &b in &roots[i..] {
            if let Some(s) = rs.sum(a, b) {
                if !set.contains(&s) {
                    return Err(Error::NotAdditivelyClosed {
                        left: rs.format_root(a),
                        right: rs.format_root(b),
                        sum: rs.format_root(s),
                    });
                }
            }
        }
    }
    Ok(())
}

fn split_components(rs: &RootSystem, simple: &[usize]) -> Vec<Vec<usize>> {
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = out.len();
        comp[start] = c;
        let mut stack = vec![start];
        let mut members = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX && !rs.orthogonal(simple[i], simple[j]) {
                    comp[j] = c;
                    stack.push(j);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members.into_iter().map(|i| simple[i]).collect());
    }
    // order components by their smallest root index
    out.sort_by_key(|c| c.iter().copied().min());
    out
}

/// Classifies an indecomposable simple system by its Dynkin diagram.
pub fn identify_type(rs: &RootSystem, component: &[usize]) -> Result<ComponentType> {
    let n = component.len();
    let plain = |letter: char, rank: usize| ComponentType {
        letter,
        rank,
        tilde: false,
    };
    if n == 0 {
        return Err(Error::UnknownType(0));
    }
    if n == 1 {
        let tilde = rs.cartan_type() == CartanType::G2 && !rs.is_short(component[0]);
        return Ok(ComponentType {
            letter: 'A',
            rank: 1,
            tilde,
        });
    }
    let bond = |i: usize, j: usize| rs.pairing(component[i], component[j]) * rs.pairing(component[j], component[i]);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = 0;
    let mut max_bond = 0;
    for i in 0..n {
        for j in i + 1..n {
            let m = bond(i, j);
            if m > 0 {
                adj[i].push(j);
                adj[j].push(i);
                edges += 1;
                max_bond = max_bond.max(m);
            }
        }
    }
    let unknown = || Error::UnknownType(n);
    if edges != n - 1 || max_bond > 3 {
        return Err(unknown());
    }
    // connectivity
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(unknown());
    }
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let is_path = degrees.iter().all(|&d| d <= 2);

    match max_bond {
        3 if n == 2 => Ok(plain('G', 2)),
        3 => Err(unknown()),
        2 => {
            if !is_path {
                return Err(unknown());
            }
            if n == 2 {
                return Ok(plain('B', 2));
            }
            // walk the path from one end
            let start = degrees.iter().position(|&d| d == 1).ok_or_else(unknown)?;
            let mut order = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                order.push(next);
                prev = cur;
                cur = next;
            }
            let doubles: Vec<usize> = (0..n - 1).filter(|&k| bond(order[k], order[k + 1]) == 2).collect();
            if doubles.len() != 1 {
                return Err(unknown());
            }
            let k = doubles[0];
            if n == 4 && k == 1 {
                return Ok(plain('F', 4));
            }
            let (end, inner) = if k == 0 {
                (order[0], order[1])
            } else if k == n - 2 {
                (order[n - 1], order[n - 2])
            } else {
                return Err(unknown());
            };
            let end_norm = rs.norm2(component[end]).as_rational().cloned();
            let inner_norm = rs.norm2(component[inner]).as_rational().cloned();
            if end_norm < inner_norm {
                Ok(plain('B', n))
            } else {
                Ok(plain('C', n))
            }
        }
        _ => {
            if is_path {
                return Ok(plain('A', n));
            }
            let branches: Vec<usize> = (0..n).filter(|&i| degrees[i] == 3).collect();
            if branches.len() != 1 || degrees.iter().any(|&d| d > 3) {
                return Err(unknown());
            }
            let b = branches[0];
            let mut arms: Vec<usize> = adj[b]
                .iter()
                .map(|&first| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (b, first);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        len += 1;
                        prev = cur;
                        cur = next;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(plain('D', n)),
                [1, 2, 2] => Ok(plain('E', 6)),
                [1, 2, 3] => Ok(plain('E', 7)),
                [1, 2, 4] => Ok(plain('E', 8)),
                _ => Err(unknown()),
            }
        }
    }
}

impl Subsystem {
    pub fn empty() -> Self {
        Subsystem {
            roots: Vec::new(),
            simple: Vec::new(),
            components: Vec::new(),
            types: Vec::new(),
        }
    }

    /// Builds Ψ = W(J)·J from a proposed simple system, keeping J's order.
    pub fn from_simple(rs: &RootSystem, simple: &[usize]) -> Result<Self> {
        let invalid = |msg: String| Error::InvalidSimpleSystem(msg);
        for &j in simple {
            if !rs.is_positive(j) {
                return Err(invalid(format!("{} is not a positive root", rs.format_root(j))));
            }
        }
        let distinct: HashSet<usize> = simple.iter().copied().collect();
        if distinct.len() != simple.len() {
            return Err(invalid("repeated root".into()));
        }
        let ambient: Vec<Vector> = simple.iter().map(|&j| rs.root(j).ambient.clone()).collect();
        if rank(&ambient, Field::Rational)? != simple.len() {
            return Err(invalid(format!("{} is linearly dependent", rs.format_root_list(simple))));
        }
        for (i, &a) in simple.iter().enumerate() {
            for &b in &simple[i + 1..] {
                if rs.pairing(a, b) > 0 {
                    return Err(invalid(format!(
                        "{} and {} form an acute angle",
                        rs.format_root(a),
                        rs.format_root(b)
                    )));
                }
            }
        }
        let roots = reflection_orbit(rs, simple);
        check_additively_closed(rs, &roots)?;
        let recovered: HashSet<usize> = extract_simple(rs, &roots).into_iter().collect();
        if recovered != distinct {
            return Err(invalid(format!(
                "{} is not the simple system of the subsystem it generates",
                rs.format_root_list(simple)
            )));
        }
        Self::assemble(rs, roots, simple.to_vec())
    }

    /// The subsystem generated (under its own reflections) by arbitrary
    /// roots, with J extracted from Ψ ∩ Φ⁺.
    pub fn generated_by(rs: &RootSystem, gens: &[usize]) -> Result<Self> {
        let roots = reflection_orbit(rs, gens);
        Self::from_root_set(rs, roots)
    }

    /// Wraps a root subset that is already a subsystem. Fails if it is not
    /// symmetric, closed under its reflections, and additively closed.
    pub fn from_root_set(rs: &RootSystem, mut roots: Vec<usize>) -> Result<Self> {
        roots.sort_unstable();
        roots.dedup();
        let set: HashSet<usize> = roots.iter().copied().collect();
        for &a in &roots {
            if !set.contains(&rs.negate(a)) {
                return Err(Error::InvalidSimpleSystem("root set is not symmetric".into()));
            }
            for &b in &roots {
                if !set.contains(&rs.reflect_root(a, b)) {
                    return Err(Error::InvalidSimpleSystem("root set is not reflection-closed".into()));
                }
            }
        }
        check_additively_closed(rs, &roots)?;
        let simple = extract_simple(rs, &roots);
        Self::assemble(rs, roots, simple)
    }

    fn assemble(rs: &RootSystem, roots: Vec<usize>, simple: Vec<usize>) -> Result<Self> {
        let components = split_components(rs, &simple);
        let types = components
            .iter()
            .map(|c| identify_type(rs, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subsystem {
            roots,
            simple,
            components,
            types,
        })
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_types(&self) -> &[ComponentType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.roots.binary_search(&root).is_ok()
    }

    /// Label such as `A3`, `2A1`, `A1+Ã1`, or `∅`.
    pub fn type_label(&self) -> String {
        if self.types.is_empty() {
            return "∅".into();
        }
        let mut counts: Vec<(ComponentType, usize)> = Vec::new();
        for t in &self.types {
            match counts.iter_mut().find(|(u, _)| u == t) {
                Some((_, k)) => *k += 1,
                None => counts.push((*t, 1)),
            }
        }
        counts
            .iter()
            .map(|(t, k)| if *k == 1 { t.to_string() } else { format!("{k}{t}") })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Sorted root indices of `w(Ψ)`.
    pub fn image(&self, group: &ReflectionGroup, w: ElementId) -> Vec<usize> {
        let mut v = group.apply_all(w, &self.roots);
        v.sort_unstable();
        v
    }

    pub fn is_disjoint_from(&self, other: &[usize]) -> bool {
        other.iter().all(|r| !self.contains(*r))
    }

    /// W(Ψ) as a subgroup of the parent group.
    pub fn weyl_subgroup(&self, group: &ReflectionGroup) -> Subgroup {
        group.subgroup_from_reflections(&self.simple)
    }

    pub fn to_json(&self, rs: &RootSystem) -> SubsystemJson {
        SubsystemJson {
            r#type: self.type_label(),
            simple_roots: self.simple.iter().map(|&r| rs.format_root(r)).collect(),
        }
    }
}

/// Ψ⊥: every root orthogonal to all of Ψ.
pub fn orthogonal_complement(rs: &RootSystem, psi: &Subsystem) -> Result<Subsystem> {
    let roots: Vec<usize> = (0..rs.num_roots())
        .filter(|&a| psi.simple().iter().all(|&j| rs.orthogonal(j, a)))
        .collect();
    Subsystem::from_root_set(rs, roots)
}

/// Distinguished coset representatives D_Ψ = {w : w(J) ⊂ Φ⁺} together with
/// the coset map `W → D_Ψ`.
#[derive(Debug, Clone)]
pub struct CosetReps {
    reps: Vec<ElementId>,
    subgroup: Subgroup,
    coset_of: Vec<u32>,
}

impl CosetReps {
    pub fn new(group: &ReflectionGroup, psi: &Subsystem) -> Result<Self> {
        let rs = group.root_system();
        let simple = psi.simple();
        let reps: Vec<ElementId> = group
            .exec()
            .filter(group.order(), |w| {
                simple.iter().all(|&j| rs.is_positive(group.apply(ElementId(w), j)))
            })
            .into_iter()
            .map(ElementId)
            .collect();
        let subgroup = psi.weyl_subgroup(group);
        if reps.len() * subgroup.len() != group.order() {
            return Err(Error::Violation(format!(
                "|D_Ψ| · |W(Ψ)| = {} · {} ≠ |W| = {}",
                reps.len(),
                subgroup.len(),
                group.order()
            )));
        }
        let mut coset_of = vec![u32::MAX; group.order()];
        for (k, &d) in reps.iter().enumerate() {
            for &u in subgroup.elements() {
                let w = group.compose(d, u);
                if coset_of[w.0] != u32::MAX {
                    return Err(Error::Violation(format!(
                        "element {} factors twice through D_Ψ",
                        group.format_word(w)
                    )));
                }
                coset_of[w.0] = k as u32;
            }
        }
        Ok(CosetReps {
            reps,
            subgroup,
            coset_of,
        })
    }

    /// Representatives ordered by (length, element id).
    pub fn reps(&self) -> &[ElementId] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Position in [`reps`](Self::reps) of the coset containing `w`.
    pub fn coset_index(&self, w: ElementId) -> usize {
        self.coset_of[w.0] as usize
    }

    pub fn rep_of(&self, w: ElementId) -> ElementId {
        self.reps[self.coset_index(w)]
    }

    pub fn position(&self, d: ElementId) -> Option<usize> {
        let k = self.coset_index(d);
        (self.reps[k] == d).then_some(k)
    }

    /// The unique `(d, u)` with `w = d ∘ u`, `d ∈ D_Ψ`, `u ∈ W(Ψ)`.
    pub fn factor(&self, group: &ReflectionGroup, w: ElementId) -> (ElementId, ElementId) {
        let d = self.rep_of(w);
        (d, group.compose(group.inverse(d), w))
    }
}

pub fn distinguished_reps(group: &ReflectionGroup, psi: &Subsystem) -> Result<CosetReps> {
    CosetReps::new(group, psi)
}

/// Lexicographically smallest sorted image of a root set over all of W.
pub fn canonical_key(group: &ReflectionGroup, roots: &[usize]) -> Vec<usize> {
    group
        .exec()
        .map(group.order(), |w| {
            let mut v = group.apply_all(ElementId(w), roots);
            v.sort_unstable();
            v
        })
        .into_iter()
        .min()
        .unwrap_or_default()
}

pub fn are_conjugate(group: &ReflectionGroup, a: &Subsystem, b: &Subsystem) -> bool {
    a.len() == b.len() && canonical_key(group, a.roots()) == canonical_key(group, b.roots())
}

/// Highest root of an irreducible subsystem relative to Ψ ∩ Φ⁺.
fn highest_root(rs: &RootSystem, component: &[usize]) -> usize {
    let roots = reflection_orbit(rs, component);
    let set: HashSet<usize> = roots.iter().copied().collect();
    roots
        .iter()
        .copied()
        .filter(|&r| rs.is_positive(r))
        .find(|&r| component.iter().all(|&j| rs.sum(r, j).is_none_or(|s| !set.contains(&s))))
        .expect("irreducible subsystems have a highest root")
}

/// One representative per W-conjugacy class of additively closed
/// subsystems: repeated node deletion from extended Dynkin diagrams of
/// components, plus deletion from ordinary diagrams, deduplicated by orbit.
/// Classes are ordered by rank, then size (both descending), then type
/// label, then discovery.
pub fn enumerate_subsystems(group: &ReflectionGroup) -> Result<Vec<Subsystem>> {
    let rs = group.root_system();
    let full: Vec<usize> = rs.simple_roots().collect();
    let start = Subsystem::from_simple(rs, &full)?;
    let mut found: Vec<Subsystem> = vec![start.clone()];
    let mut keys: HashMap<Vec<usize>, usize> = HashMap::new();
    keys.insert(canonical_key(group, start.roots()), 0);
    let mut i = 0;
    while i < found.len() {
        let cur = found[i].clone();
        let mut children: Vec<Vec<usize>> = Vec::new();
        for comp in cur.components() {
            let theta = highest_root(rs, comp);
            let rest: Vec<usize> = cur.simple().iter().copied().filter(|r| !comp.contains(r)).collect();
            for skip in 0..comp.len() {
                let mut gens = rest.clone();
                gens.extend(comp.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &r)| r));
                gens.push(rs.negate(theta));
                children.push(gens);
            }
        }
        for skip in 0..cur.simple().len() {
            children.push(
                cur.simple()
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &r)| r)
                    .collect(),
            );
        }
        for gens in children {
            let child = Subsystem::generated_by(rs, &gens)?;
            let key = canonical_key(group, child.roots());
            if let std::collections::hash_map::Entry::Vacant(e) = keys.entry(key) {
                e.insert(found.len());
                found.push(child);
            }
        }
        i += 1;
    }
    let mut indexed: Vec<(usize, String, Subsystem)> =
        found.into_iter().enumerate().map(|(k, s)| (k, s.type_label(), s)).collect();
    indexed.sort_by(|(ka, la, a), (kb, lb, b)| {
        (b.rank(), b.len())
            .cmp(&(a.rank(), a.len()))
            .then_with(|| la.cmp(lb))
            .then(ka.cmp(kb))
    });
    Ok(indexed.into_iter().map(|(_, _, s)| s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_CAP;

    fn group(label: &str) -> ReflectionGroup {
        ReflectionGroup::generate(RootSystem::new(label.parse().unwrap()).unwrap(), DEFAULT_CAP).unwrap()
    }

    fn sub(g: &ReflectionGroup, j: &str) -> Subsystem {
        let rs = g.root_system();
        Subsystem::from_simple(rs, &rs.parse_root_list(j).unwrap()).unwrap()
    }

    #[test]
    fn from_simple_examples() {
        let d4 = group("D4");
        let a3 = sub(&d4, "1000,0100,0010");
        assert_eq!(a3.len(), 12);
        assert_eq!(a3.type_label(), "A3");
        assert_eq!(a3.components().len(), 1);
        let two_a1 = sub(&d4, "1101,0111");
        assert_eq!(two_a1.len(), 4);
        assert_eq!(two_a1.type_label(), "2A1");
        assert_eq!(two_a1.components().len(), 2);

        let g2 = group("G2");
        assert_eq!(sub(&g2, "10,32").type_label(), "A1+Ã1");
        assert_eq!(sub(&g2, "10").type_label(), "A1");
        assert_eq!(sub(&g2, "01").type_label(), "Ã1");
        assert_eq!(sub(&g2, "01,31").type_label(), "A2");
        assert_eq!(sub(&g2, "10,01").type_label(), "G2");
        assert_eq!(sub(&g2, "").type_label(), "∅");
    }

    #[test]
    fn from_simple_rejects_bad_input() {
        let g2 = group("G2");
        let rs = g2.root_system();
        let bad = |j: &str| Subsystem::from_simple(rs, &rs.parse_root_list(j).unwrap());
        assert!(matches!(bad("-10"), Err(Error::InvalidSimpleSystem(_))));
        assert!(matches!(bad("10,21"), Err(Error::InvalidSimpleSystem(_)))); // acute
        assert!(matches!(bad("10,10"), Err(Error::InvalidSimpleSystem(_))));
        assert!(matches!(bad("10,32,01"), Err(Error::InvalidSimpleSystem(_)))); // dependent
        // short roots 10 and 11 generate the short A2, which is not closed
        assert!(matches!(bad("10,11"), Err(Error::NotAdditivelyClosed { .. })));
        let b3 = group("B3");
        let rs = b3.root_system();
        // ε₁ and ε₂: orthogonal but ε₁+ε₂ is a root
        let r = Subsystem::from_simple(rs, &rs.parse_root_list("111,011").unwrap());
        assert!(matches!(r, Err(Error::NotAdditivelyClosed { .. })));
    }

    #[test]
    fn identify_types_across_systems() {
        for label in ["A4", "B3", "C3", "D5", "F4", "G2", "E6"] {
            let rs = RootSystem::new(label.parse().unwrap()).unwrap();
            let full: Vec<usize> = rs.simple_roots().collect();
            let t = identify_type(&rs, &full).unwrap();
            assert_eq!(t.to_string(), label);
        }
    }

    #[test]
    fn orthogonal_complements() {
        let d4 = group("D4");
        let rs = d4.root_system();
        let full = sub(&d4, "1000,0100,0010,0001");
        assert!(orthogonal_complement(rs, &full).unwrap().is_empty());
        let empty = Subsystem::empty();
        assert_eq!(orthogonal_complement(rs, &empty).unwrap().len(), 24);
        let a3 = sub(&d4, "1000,0100,0010");
        assert!(orthogonal_complement(rs, &a3).unwrap().is_empty());
        // Ψ ⊆ Ψ⊥⊥
        for j in ["1101,0111", "1000", "0100", "1000,0010,0001"] {
            let psi = sub(&d4, j);
            let perp = orthogonal_complement(rs, &psi).unwrap();
            let pp = orthogonal_complement(rs, &perp).unwrap();
            assert!(psi.roots().iter().all(|r| pp.contains(*r)), "{j}");
        }
    }

    #[test]
    fn coset_reps_examples() {
        let d4 = group("D4");
        let a3 = sub(&d4, "1000,0100,0010");
        let d = CosetReps::new(&d4, &a3).unwrap();
        assert_eq!(d.len(), 8);
        let words: Vec<String> = d.reps().iter().map(|&w| d4.format_word(w)).collect();
        assert_eq!(words[0], "e");
        assert_eq!(words[1], "t4");
        assert_eq!(words[2], "t2 t4");
        assert_eq!(CosetReps::new(&d4, &Subsystem::empty()).unwrap().len(), 192);
        let full = sub(&d4, "1000,0100,0010,0001");
        assert_eq!(CosetReps::new(&d4, &full).unwrap().reps(), &[d4.identity()]);
    }

    #[test]
    fn unique_factorization_and_minimality() {
        for (label, j) in [("G2", "01"), ("G2", "10,32"), ("B3", "100,122,001"), ("D4", "1000,0100,0010")] {
            let g = group(label);
            let psi = sub(&g, j);
            let d = CosetReps::new(&g, &psi).unwrap();
            for w in g.elements() {
                let (rep, u) = d.factor(&g, w);
                assert!(d.subgroup().contains(u));
                assert_eq!(g.compose(rep, u), w);
                let hits = d
                    .reps()
                    .iter()
                    .filter(|&&r| d.subgroup().contains(g.compose(g.inverse(r), w)))
                    .count();
                assert_eq!(hits, 1);
                assert!(g.length(rep) <= g.length(w));
            }
        }
    }

    #[test]
    fn conjugation_transports_subgroups() {
        let d4 = group("D4");
        let psi = sub(&d4, "1000,0010");
        let wpsi = psi.weyl_subgroup(&d4);
        for w in d4.elements().step_by(11) {
            let moved = d4.apply_all(w, psi.simple());
            let lhs = d4.subgroup_from_reflections(&moved);
            let mut rhs: Vec<ElementId> = wpsi.elements().iter().map(|&u| d4.conjugate(w, u)).collect();
            rhs.sort();
            assert_eq!(lhs.elements(), rhs.as_slice());
        }
    }

    /// Every additively closed subsystem, by brute force over subsets of Φ⁺.
    fn brute_force_classes(g: &ReflectionGroup) -> HashSet<Vec<usize>> {
        let rs = g.root_system();
        let np = rs.num_positive();
        let mut keys = HashSet::new();
        for mask in 0u32..(1 << np) {
            let mut roots: Vec<usize> = (0..np).filter(|i| mask >> i & 1 == 1).collect();
            roots.extend(roots.clone().into_iter().map(|r| rs.negate(r)));
            if let Ok(s) = Subsystem::from_root_set(rs, roots) {
                keys.insert(canonical_key(g, s.roots()));
            }
        }
        keys
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
            let g = group(label);
            let listed = enumerate_subsystems(&g).unwrap();
            let keys: HashSet<Vec<usize>> = listed.iter().map(|s| canonical_key(&g, s.roots())).collect();
            assert_eq!(keys.len(), listed.len(), "{label}: duplicates");
            assert_eq!(keys, brute_force_classes(&g), "{label}");
            for s in &listed {
                assert!(s.simple().iter().all(|&j| g.root_system().is_positive(j)));
            }
        }
    }

    #[test]
    fn g2_subsystem_atlas() {
        let g = group("G2");
        let list = enumerate_subsystems(&g).unwrap();
        let labels: Vec<String> = list.iter().map(Subsystem::type_label).collect();
        assert_eq!(labels, ["G2", "A2", "A1+Ã1", "A1", "Ã1", "∅"]);
        assert_eq!(enumerate_subsystems(&group("A2")).unwrap().len(), 3);
        let trivial = ReflectionGroup::generate(RootSystem::build('A', 0).unwrap(), DEFAULT_CAP).unwrap();
        let only = enumerate_subsystems(&trivial).unwrap();
        assert_eq!(only.len(), 1);
        assert!(only[0].is_empty());
    }
}
