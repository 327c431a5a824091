//! The Weyl group W(Φ) as permutations of the root set.
//!
//! Elements are enumerated breadth-first from the identity by left
//! multiplication with simple reflections, so element ids are sorted by
//! length and each element's cached word is reduced. A word `t2 t4` denotes
//! the composite `τ₂ ∘ τ₄`, which acts on a root as `τ₂(τ₄(·))`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};
use crate::exec::Exec;
use crate::rootsys::{CartanType, RootSystem};

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Handle to an element of a [`ReflectionGroup`]. Id 0 is the identity and
/// ids increase with length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: ElementId,
    /// Members in ascending id order.
    pub elements: Vec<ElementId>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub index: usize,
    pub size: usize,
    pub representative: String,
    pub length: usize,
}

/// A subgroup, stored as a sorted list of parent-group element ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<ElementId>,
}

impl Subgroup {
    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: ElementId) -> bool {
        self.elements.binary_search(&w).is_ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            elements: self.elements.iter().copied().filter(|&w| other.contains(w)).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

pub struct ReflectionGroup {
    rs: RootSystem,
    exec: Exec,
    n_roots: usize,
    perms: Vec<u16>,
    /// `(parent, generator)` with element = `τ_generator ∘ parent`.
    parents: Vec<(u32, u8)>,
    lengths: Vec<u32>,
    lookup: HashMap<Vec<u16>, u32>,
    inverses: Vec<u32>,
    classes: OnceLock<Vec<ConjugacyClass>>,
}

impl fmt::Debug for ReflectionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReflectionGroup")
            .field("type", &self.rs.cartan_type())
            .field("order", &self.order())
            .finish()
    }
}

impl ReflectionGroup {
    /// Enumerates W(Φ) with the default execution strategy.
    pub fn generate(rs: RootSystem, cap: usize) -> Result<Self> {
        Self::generate_with(rs, cap, Exec::default())
    }

    pub fn generate_with(rs: RootSystem, cap: usize, exec: Exec) -> Result<Self> {
        let predicted = rs.cartan_type().group_order();
        if predicted > cap as u128 {
            return Err(Error::CapExceeded { predicted, cap });
        }
        let n = rs.num_roots();
        let rank = rs.rank();
        let gens: Vec<Vec<u16>> = (0..rank)
            .map(|i| (0..n).map(|r| rs.reflect_root(i, r) as u16).collect())
            .collect();

        let identity: Vec<u16> = (0..n as u16).collect();
        let key_of = |p: &[u16]| -> Vec<u16> { p[..rank].to_vec() };
        let mut perms = identity.clone();
        let mut parents = vec![(u32::MAX, u8::MAX)];
        let mut lengths = vec![0u32];
        let mut lookup = HashMap::new();
        lookup.insert(key_of(&identity), 0u32);

        let mut frontier = 0..1usize;
        let mut level = 0u32;
        while !frontier.is_empty() {
            level += 1;
            let start = frontier.start;
            let candidates: Vec<(usize, u8, Vec<u16>)> = exec
                .map(frontier.len() * rank, |k| {
                    let w = start + k / rank;
                    let g = k % rank;
                    let wp = &perms[w * n..(w + 1) * n];
                    let img: Vec<u16> = wp.iter().map(|&r| gens[g][r as usize]).collect();
                    (w, g as u8, img)
                });
            let next_start = lengths.len();
            for (w, g, img) in candidates {
                let key = key_of(&img);
                if lookup.contains_key(&key) {
                    continue;
                }
                let id = lengths.len();
                if id >= cap {
                    return Err(Error::CapExceeded {
                        predicted: predicted.max(id as u128 + 1),
                        cap,
                    });
                }
                lookup.insert(key, id as u32);
                perms.extend_from_slice(&img);
                parents.push((w as u32, g));
                lengths.push(level);
            }
            frontier = next_start..lengths.len();
        }

        if lengths.len() as u128 != predicted {
            return Err(Error::Violation(format!(
                "enumerated {} elements, product formula gives {predicted}",
                lengths.len()
            )));
        }

        let order = lengths.len();
        let inverses = exec.map(order, |w| {
            let p = &perms[w * n..(w + 1) * n];
            let mut inv = vec![0u16; n];
            for (r, &img) in p.iter().enumerate() {
                inv[img as usize] = r as u16;
            }
            lookup[&inv[..rank]]
        });

        Ok(ReflectionGroup {
            rs,
            exec,
            n_roots: n,
            perms,
            parents,
            lengths,
            lookup,
            inverses,
            classes: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order()).map(ElementId)
    }

    pub fn perm(&self, w: ElementId) -> &[u16] {
        &self.perms[w.0 * self.n_roots..(w.0 + 1) * self.n_roots]
    }

    /// Image of a root under `w`.
    pub fn apply(&self, w: ElementId, root: usize) -> usize {
        self.perm(w)[root] as usize
    }

    pub fn apply_all(&self, w: ElementId, roots: &[usize]) -> Vec<usize> {
        roots.iter().map(|&r| self.apply(w, r)).collect()
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.lengths[w.0] as usize
    }

    /// Length by counting positive roots sent to negative roots.
    pub fn inversion_count(&self, w: ElementId) -> usize {
        (0..self.rs.num_positive())
            .filter(|&r| !self.rs.is_positive(self.apply(w, r)))
            .count()
    }

    pub fn sign(&self, w: ElementId) -> i32 {
        if self.length(w).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn sign_in(&self, w: ElementId, field: Field) -> Scalar {
        field.from_i64(self.sign(w) as i64)
    }

    /// Reduced word as 0-based generator indices, leftmost factor first.
    pub fn word(&self, w: ElementId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut cur = w.0;
        while cur != 0 {
            let (p, g) = self.parents[cur];
            out.push(g as usize);
            cur = p as usize;
        }
        out
    }

    /// `t1 t2 ...` with 1-based generator indices; `e` for the identity.
    pub fn format_word(&self, w: ElementId) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|g| format!("t{}", g + 1)).collect::<Vec<_>>().join(" ")
    }

    pub fn find_perm(&self, perm: &[u16]) -> Option<ElementId> {
        let rank = self.rs.rank();
        let id = *self.lookup.get(&perm[..rank])? as usize;
        (self.perm(ElementId(id)) == perm).then_some(ElementId(id))
    }

    /// `a ∘ b`.
    pub fn compose(&self, a: ElementId, b: ElementId) -> ElementId {
        let pa = self.perm(a);
        let pb = self.perm(b);
        let key: Vec<u16> = pb[..self.rs.rank()].iter().map(|&r| pa[r as usize]).collect();
        ElementId(self.lookup[&key] as usize)
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        ElementId(self.inverses[w.0] as usize)
    }

    /// `a b a⁻¹`.
    pub fn conjugate(&self, a: ElementId, b: ElementId) -> ElementId {
        self.compose(self.compose(a, b), self.inverse(a))
    }

    pub fn element_order(&self, w: ElementId) -> usize {
        let mut k = 1;
        let mut cur = w;
        while cur != self.identity() {
            cur = self.compose(w, cur);
            k += 1;
        }
        k
    }

    /// The simple reflection `τ_{i+1}` (0-based `i`).
    pub fn generator(&self, i: usize) -> ElementId {
        ElementId(self.lookup[&self.reflection_perm(i)[..self.rs.rank()]] as usize)
    }

    fn reflection_perm(&self, root: usize) -> Vec<u16> {
        (0..self.n_roots).map(|r| self.rs.reflect_root(root, r) as u16).collect()
    }

    /// The reflection `τ_α` for any root index `α`.
    pub fn reflection(&self, root: usize) -> ElementId {
        self.find_perm(&self.reflection_perm(root)).expect("reflections lie in W")
    }

    pub fn from_word(&self, word: &[usize]) -> Result<ElementId> {
        let rank = self.rs.rank();
        let mut cur = self.identity();
        for &g in word.iter().rev() {
            if g >= rank {
                return Err(Error::BadWord(format!("generator index {} out of range", g + 1)));
            }
            cur = self.compose(self.generator(g), cur);
        }
        Ok(cur)
    }

    /// Parses `t1 t2 t4` (also `τ1`, `e`, or the empty string).
    pub fn parse_word(&self, text: &str) -> Result<ElementId> {
        let mut word = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*' || c == ',') {
            if tok.is_empty() || tok == "e" {
                continue;
            }
            let digits = tok
                .strip_prefix('t')
                .or_else(|| tok.strip_prefix('τ'))
                .or_else(|| tok.strip_prefix('s'))
                .ok_or_else(|| Error::BadWord(text.to_string()))?;
            let i: usize = digits.parse().map_err(|_| Error::BadWord(text.to_string()))?;
            if i == 0 || i > self.rs.rank() {
                return Err(Error::BadWord(format!("{tok}: index out of range 1..={}", self.rs.rank())));
            }
            word.push(i - 1);
        }
        self.from_word(&word)
    }

    /// Closure of `{τ_α : α ∈ roots}` under composition.
    pub fn subgroup_from_reflections(&self, roots: &[usize]) -> Subgroup {
        let gens: Vec<ElementId> = roots.iter().map(|&r| self.reflection(r)).collect();
        self.subgroup_generated(&gens)
    }

    pub fn subgroup_generated(&self, gens: &[ElementId]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        let mut elements = vec![self.identity()];
        seen[0] = true;
        let mut i = 0;
        while i < elements.len() {
            let w = elements[i];
            for &g in gens {
                let x = self.compose(g, w);
                if !seen[x.0] {
                    seen[x.0] = true;
                    elements.push(x);
                }
            }
            i += 1;
        }
        elements.sort();
        Subgroup { elements }
    }

    /// Conjugacy classes, computed once. For G2 the order (and the
    /// representatives) are `e, τ₂, τ₁τ₂, (τ₁τ₂)², (τ₁τ₂)³, τ₁`; otherwise
    /// classes are sorted by size and then by smallest member.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| self.compute_classes())
    }

    pub fn class_of(&self, w: ElementId) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.elements.binary_search(&w).is_ok())
            .expect("classes partition W")
    }

    fn compute_classes(&self) -> Vec<ConjugacyClass> {
        let order = self.order();
        let gens: Vec<ElementId> = (0..self.rs.rank()).map(|i| self.generator(i)).collect();
        let tables: Vec<Vec<u32>> = gens
            .iter()
            .map(|&g| self.exec.map(order, |x| self.conjugate(g, ElementId(x)).0 as u32))
            .collect();
        let mut label = vec![usize::MAX; order];
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for start in 0..order {
            if label[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            label[start] = c;
            let mut members = vec![ElementId(start)];
            let mut i = 0;
            while i < members.len() {
                let x = members[i].0;
                for t in &tables {
                    let y = t[x] as usize;
                    if label[y] == usize::MAX {
                        label[y] = c;
                        members.push(ElementId(y));
                    }
                }
                i += 1;
            }
            members.sort();
            classes.push(members);
        }

        let mut out: Vec<ConjugacyClass> = classes
            .into_iter()
            .map(|elements| ConjugacyClass {
                representative: elements[0],
                elements,
            })
            .collect();

        if self.rs.cartan_type() == CartanType::G2 {
            let reps = ["", "t2", "t1 t2", "t1 t2 t1 t2", "t1 t2 t1 t2 t1 t2", "t1"];
            let reps: Vec<ElementId> = reps.iter().map(|w| self.parse_word(w).expect("valid G2 word")).collect();
            let mut ordered = Vec::with_capacity(out.len());
            for r in reps {
                let pos = out.iter().position(|c| c.elements.binary_search(&r).is_ok()).expect("G2 rep");
                let mut c = out.remove(pos);
                c.representative = r;
                ordered.push(c);
            }
            debug_assert!(out.is_empty(), "G2 has six classes");
            ordered
        } else {
            out.sort_by_key(|c| (c.size(), c.elements[0]));
            out
        }
    }

    pub fn classes_json(&self) -> Vec<ClassJson> {
        self.conjugacy_classes()
            .iter()
            .enumerate()
            .map(|(index, c)| ClassJson {
                index: index + 1,
                size: c.size(),
                representative: self.format_word(c.representative),
                length: self.length(c.representative),
            })
            .collect()
    }
}
