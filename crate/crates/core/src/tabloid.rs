//! Frames `{J₁,...,J_r; J₁',...,J_s'}`, the useful-system test, and
//! Δ-tabloids.
//!
//! A tabloid `{wJ̄}` is identified with the coset `w·W(J)` and keyed by its
//! distinguished representative `d ∈ D_Ψ`. The group acts by
//! `σ·{dJ̄} = {σdJ̄}`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::subsys::{orthogonal_complement, CosetReps, Subsystem};
use crate::weyl::{ElementId, ReflectionGroup, Subgroup};

/// Ordered rows (components of J) and columns (components of J').
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    psi: Subsystem,
    psi_prime: Subsystem,
}

impl Frame {
    /// Both lists must be valid simple systems inside Φ⁺.
    pub fn new(rs: &RootSystem, rows: &[usize], cols: &[usize]) -> Result<Self> {
        Ok(Frame {
            psi: Subsystem::from_simple(rs, rows)?,
            psi_prime: Subsystem::from_simple(rs, cols)?,
        })
    }

    /// Parses comma-separated root notation for J and J'.
    pub fn parse(rs: &RootSystem, rows: &str, cols: &str) -> Result<Self> {
        Frame::new(rs, &rs.parse_root_list(rows)?, &rs.parse_root_list(cols)?)
    }

    pub fn from_subsystems(psi: Subsystem, psi_prime: Subsystem) -> Self {
        Frame { psi, psi_prime }
    }

    pub fn psi(&self) -> &Subsystem {
        &self.psi
    }

    pub fn psi_prime(&self) -> &Subsystem {
        &self.psi_prime
    }

    /// Row roots in display order.
    pub fn row_roots(&self) -> Vec<usize> {
        self.psi.components().concat()
    }

    pub fn col_roots(&self) -> Vec<usize> {
        self.psi_prime.components().concat()
    }

    /// All frame slots, rows then columns.
    pub fn slots(&self) -> Vec<usize> {
        let mut v = self.row_roots();
        v.extend(self.col_roots());
        v
    }

    /// `{r₁,r₂,...;c₁,c₂,...}` for the frame `w·J̄`.
    pub fn display(&self, group: &ReflectionGroup, w: ElementId) -> String {
        let rs = group.root_system();
        let rows = rs.format_root_list(&group.apply_all(w, &self.row_roots()));
        let cols = rs.format_root_list(&group.apply_all(w, &self.col_roots()));
        format!("{{{rows};{cols}}}")
    }

    /// The frame `w·J̄` re-expressed with simple systems inside Φ⁺ (roots of
    /// `w(J)` may be negative).
    pub fn translate(&self, group: &ReflectionGroup, w: ElementId) -> Result<Frame> {
        let rs = group.root_system();
        Ok(Frame {
            psi: Subsystem::from_root_set(rs, self.psi.image(group, w))?,
            psi_prime: Subsystem::from_root_set(rs, self.psi_prime.image(group, w))?,
        })
    }
}

/// Outcome of the useful-system test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsefulnessReport {
    /// W(J) ∩ W(J').
    pub row_col_intersection: Vec<ElementId>,
    /// W(J⊥) ∩ W(J'⊥).
    pub perp_intersection: Vec<ElementId>,
    pub psi_perp: Subsystem,
    pub psi_prime_perp: Subsystem,
}

impl UsefulnessReport {
    pub fn is_useful(&self) -> bool {
        self.row_col_intersection.len() == 1 && self.perp_intersection.len() == 1
    }

    /// Smallest nontrivial element of a failing intersection, checking
    /// W(J) ∩ W(J') first.
    pub fn witness(&self) -> Option<ElementId> {
        self.row_col_intersection
            .iter()
            .chain(&self.perp_intersection)
            .copied()
            .find(|w| w.0 != 0)
    }
}

/// Usefulness: both subgroup intersections trivial.
/// The precondition Ψ' ⊆ Φ∖Ψ is reported as [`Error::Precondition`].
pub fn check_useful(group: &ReflectionGroup, frame: &Frame) -> Result<UsefulnessReport> {
    let rs = group.root_system();
    if let Some(&r) = frame.psi_prime.roots().iter().find(|&&r| frame.psi.contains(r)) {
        return Err(Error::Precondition(format!(
            "Ψ' must lie in Φ∖Ψ, but {} is in both",
            rs.format_root(r)
        )));
    }
    let w_rows = frame.psi.weyl_subgroup(group);
    let w_cols = frame.psi_prime.weyl_subgroup(group);
    let psi_perp = orthogonal_complement(rs, &frame.psi)?;
    let psi_prime_perp = orthogonal_complement(rs, &frame.psi_prime)?;
    let wp = psi_perp.weyl_subgroup(group);
    let wpp = psi_prime_perp.weyl_subgroup(group);
    Ok(UsefulnessReport {
        row_col_intersection: w_rows.intersection(&w_cols).elements().to_vec(),
        perp_intersection: wp.intersection(&wpp).elements().to_vec(),
        psi_perp,
        psi_prime_perp,
    })
}

/// Both sides of the frame-distinctness criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distinctness {
    /// `|{wJ̄ : w ∈ W}|`.
    pub orbit_size: usize,
    pub group_order: usize,
    /// W(J⊥) ∩ W(J'⊥) = {e}.
    pub perp_trivial: bool,
}

impl Distinctness {
    pub fn frames_distinct(&self) -> bool {
        self.orbit_size == self.group_order
    }

    pub fn agrees(&self) -> bool {
        self.frames_distinct() == self.perp_trivial
    }
}

pub fn check_distinctness(group: &ReflectionGroup, frame: &Frame) -> Result<Distinctness> {
    let rs = group.root_system();
    let slots = frame.slots();
    let images: HashSet<Vec<usize>> = group
        .exec()
        .map(group.order(), |w| group.apply_all(ElementId(w), &slots))
        .into_iter()
        .collect();
    let wp = orthogonal_complement(rs, frame.psi())?.weyl_subgroup(group);
    let wpp = orthogonal_complement(rs, frame.psi_prime())?.weyl_subgroup(group);
    Ok(Distinctness {
        orbit_size: images.len(),
        group_order: group.order(),
        perp_trivial: wp.intersection(&wpp).is_trivial(),
    })
}

/// A Δ-tabloid, as a position in the D_Ψ ordering of its [`TabloidSpace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid(pub usize);

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

/// The tabloid set τ_Δ of a frame, with the W-action.
#[derive(Debug)]
pub struct TabloidSpace<'g> {
    group: &'g ReflectionGroup,
    frame: Frame,
    cosets: CosetReps,
    col_group: Subgroup,
    usefulness: Option<UsefulnessReport>,
}

impl<'g> TabloidSpace<'g> {
    /// Builds τ_Δ. Usefulness is checked and recorded but not required;
    /// see [`is_verified`](Self::is_verified).
    pub fn new(group: &'g ReflectionGroup, frame: Frame) -> Result<Self> {
        let usefulness = match check_useful(group, &frame) {
            Ok(r) => Some(r),
            Err(Error::Precondition(_)) => None,
            Err(e) => return Err(e),
        };
        let cosets = CosetReps::new(group, frame.psi())?;
        let col_group = frame.psi_prime().weyl_subgroup(group);
        Ok(TabloidSpace {
            group,
            frame,
            cosets,
            col_group,
            usefulness,
        })
    }

    pub fn group(&self) -> &'g ReflectionGroup {
        self.group
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn cosets(&self) -> &CosetReps {
        &self.cosets
    }

    /// W(J').
    pub fn col_group(&self) -> &Subgroup {
        &self.col_group
    }

    /// W(J).
    pub fn row_group(&self) -> &Subgroup {
        self.cosets.subgroup()
    }

    pub fn usefulness(&self) -> Option<&UsefulnessReport> {
        self.usefulness.as_ref()
    }

    /// True when the frame passed the useful-system test.
    pub fn is_verified(&self) -> bool {
        self.usefulness.as_ref().is_some_and(UsefulnessReport::is_useful)
    }

    /// `dim M^Δ = [W : W(J)]`.
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn tabloid_of(&self, w: ElementId) -> Tabloid {
        Tabloid(self.cosets.coset_index(w))
    }

    pub fn all_tabloids(&self) -> Vec<Tabloid> {
        (0..self.len()).map(Tabloid).collect()
    }

    /// Distinguished representative `d` with `t = {dJ̄}`.
    pub fn rep(&self, t: Tabloid) -> ElementId {
        self.cosets.reps()[t.0]
    }

    pub fn act(&self, sigma: ElementId, t: Tabloid) -> Tabloid {
        self.tabloid_of(self.group.compose(sigma, self.rep(t)))
    }

    pub fn display(&self, t: Tabloid) -> String {
        self.frame.display(self.group, self.rep(t))
    }
}
