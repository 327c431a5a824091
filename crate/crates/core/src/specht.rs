//! The permutation module M^Δ, polytabloids, Specht modules S^{J,J'}, the
//! invariant form, the quotients D = S / (S ∩ S⊥), and characters.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactlin::{null_space, rank, row_reduce, solve_membership, Field, Matrix, RowReduction, Scalar, Vector};
use crate::subsys::CosetReps;
use crate::tabloid::{Tabloid, TabloidSpace};
use crate::weyl::{ElementId, ReflectionGroup, Subgroup};

/// A vector of M^Δ: a finite linear combination of tabloids. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    field: Field,
    dim: usize,
    coeffs: BTreeMap<usize, Scalar>,
}

impl ModuleVector {
    pub fn zero(field: Field, dim: usize) -> Self {
        ModuleVector {
            field,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector of a single tabloid.
    pub fn tabloid(field: Field, dim: usize, t: Tabloid) -> Self {
        assert!(t.0 < dim, "tabloid {t} outside a space of dimension {dim}");
        let mut v = Self::zero(field, dim);
        v.coeffs.insert(t.0, field.one());
        v
    }

    pub fn from_vector(field: Field, v: &Vector) -> Self {
        let mut out = Self::zero(field, v.dim());
        for (i, c) in v.entries().iter().enumerate() {
            if !c.is_zero() {
                out.coeffs.insert(i, c.clone());
            }
        }
        out
    }

    pub fn to_vector(&self) -> Vector {
        let mut entries = vec![self.field.zero(); self.dim];
        for (&i, c) in &self.coeffs {
            entries[i] = c.clone();
        }
        Vector::new(entries)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `dim M^Δ`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, t: Tabloid) -> Scalar {
        self.coeffs.get(&t.0).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (Tabloid, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (Tabloid(i), c))
    }

    pub fn support(&self) -> Vec<Tabloid> {
        self.coeffs.keys().map(|&i| Tabloid(i)).collect()
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &ModuleVector) {
        assert_eq!(self.dim, other.dim, "vectors from different tabloid spaces");
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.coeffs {
            self.add_term(i, &(c * x));
        }
    }

    fn add_term(&mut self, i: usize, c: &Scalar) {
        let entry = self.coeffs.entry(i).or_insert_with(|| self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), other);
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(&-self.field.one(), other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> ModuleVector {
        let mut out = Self::zero(self.field, self.dim);
        if !c.is_zero() {
            for (&i, x) in &self.coeffs {
                out.coeffs.insert(i, c * x);
            }
        }
        out
    }

    /// `σ·m`, extending the tabloid action linearly.
    pub fn act(&self, space: &TabloidSpace<'_>, sigma: ElementId) -> ModuleVector {
        let mut out = Self::zero(self.field, self.dim);
        for (&i, c) in &self.coeffs {
            out.coeffs.insert(space.act(sigma, Tabloid(i)).0, c.clone());
        }
        out
    }

    pub fn to_field(&self, field: Field) -> Result<ModuleVector> {
        let mut out = Self::zero(field, self.dim);
        for (&i, c) in &self.coeffs {
            let c = c.to_field(field)?;
            if !c.is_zero() {
                out.coeffs.insert(i, c);
            }
        }
        Ok(out)
    }

    /// Signed-tabloid notation, e.g. `{01;11,31} - {32;21,-01}`.
    pub fn format(&self, space: &TabloidSpace<'_>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (t, c)) in self.terms().enumerate() {
            let neg = c.signum() < 0;
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                let _ = write!(out, "{mag}");
            }
            out.push_str(&space.display(t));
        }
        out
    }
}

/// The invariant form `⟨{J̄₁},{J̄₂}⟩ = δ`, extended bilinearly.
pub fn bilinear_form(a: &ModuleVector, b: &ModuleVector) -> Result<Scalar> {
    if a.dim != b.dim || a.field != b.field {
        return Err(Error::Precondition(
            "bilinear form needs vectors of one tabloid space over one field".into(),
        ));
    }
    let mut acc = a.field.zero();
    for (i, x) in &a.coeffs {
        if let Some(y) = b.coeffs.get(i) {
            acc += &(x * y);
        }
    }
    Ok(acc)
}

/// `Σ_{σ ∈ H} s(σ)·σm`.
pub fn kappa_apply(space: &TabloidSpace<'_>, h: &Subgroup, m: &ModuleVector) -> ModuleVector {
    let group = space.group();
    let mut out = ModuleVector::zero(m.field, m.dim);
    for &sigma in h.elements() {
        out.add_scaled(&group.sign_in(sigma, m.field), &m.act(space, sigma));
    }
    out
}

/// The generalized polytabloid `e_{wJ,wJ'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytabloid {
    pub w: ElementId,
    pub vector: ModuleVector,
}

/// `e_{J,J'} = κ_{J'}{J̄}`.
pub fn base_polytabloid(space: &TabloidSpace<'_>, field: Field) -> ModuleVector {
    let start = ModuleVector::tabloid(field, space.len(), Tabloid(0));
    kappa_apply(space, space.col_group(), &start)
}

/// `e_{wJ,wJ'}` computed as `w·e_{J,J'}` and checked against
/// `κ_{wJ'}{wJ̄}`.
pub fn polytabloid(space: &TabloidSpace<'_>, w: ElementId, field: Field) -> Result<Polytabloid> {
    let moved = base_polytabloid(space, field).act(space, w);
    check_polytabloid(space, w, &moved)?;
    Ok(Polytabloid { w, vector: moved })
}

fn check_polytabloid(space: &TabloidSpace<'_>, w: ElementId, moved: &ModuleVector) -> Result<()> {
    let group = space.group();
    let cols = group.apply_all(w, &space.frame().col_roots());
    let h = group.subgroup_from_reflections(&cols);
    let start = ModuleVector::tabloid(moved.field, space.len(), space.tabloid_of(w));
    if kappa_apply(space, &h, &start) != *moved {
        return Err(Error::Violation(format!(
            "w·e differs from κ_(wJ'){{wJ̄}} for w = {}",
            group.format_word(w)
        )));
    }
    Ok(())
}

/// An order-2 element of sign −1 in W(J) ∩ W(J'), which forces the
/// polytabloid to vanish. Returns the smallest such element and verifies
/// the vanishing.
pub fn vanishing_witness(space: &TabloidSpace<'_>) -> Result<Option<ElementId>> {
    let group = space.group();
    let common = space.row_group().intersection(space.col_group());
    let witness = common
        .elements()
        .iter()
        .copied()
        .find(|&w| group.element_order(w) == 2 && group.sign(w) == -1);
    if let Some(w) = witness {
        if !base_polytabloid(space, Field::Rational).is_zero() {
            return Err(Error::Violation(format!(
                "{} lies in W(J) ∩ W(J') with order 2 and sign -1, yet e is nonzero",
                group.format_word(w)
            )));
        }
    }
    Ok(witness)
}

/// One decomposition `d = σρ` with σ ∈ W(J'), ρ ∈ W(J), d ∈ D_Ψ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factorization {
    pub d: Tabloid,
    pub sigma: ElementId,
    pub rho: ElementId,
}

/// Support data of `e_{J,J'}` over ℚ, indexed by tabloid (equivalently by
/// `d ∈ D_Ψ`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportAnalysis {
    /// `{d : dΨ ∩ Ψ' = ∅}`.
    pub a: Vec<Tabloid>,
    /// Support of `e_{J,J'}`.
    pub b: Vec<Tabloid>,
    /// First factorization found for each factorizable `d`, in `d` order.
    pub factorizations: Vec<Factorization>,
}

impl SupportAnalysis {
    /// Good means every `d` with `dΨ ∩ Ψ' = ∅` occurs in `e_{J,J'}`.
    pub fn is_good(&self) -> bool {
        self.a.iter().all(|d| self.b.binary_search(d).is_ok())
    }

    pub fn factorized(&self) -> Vec<Tabloid> {
        self.factorizations.iter().map(|f| f.d).collect()
    }
}

/// Computes A, B and the σρ table. On a useful frame it also asserts
/// B ⊆ A and that B is exactly the set of factorizable `d`.
pub fn support_analysis(space: &TabloidSpace<'_>) -> Result<SupportAnalysis> {
    let group = space.group();
    let frame = space.frame();
    let psi_prime = frame.psi_prime();
    let a: Vec<Tabloid> = space
        .all_tabloids()
        .into_iter()
        .filter(|&t| psi_prime.is_disjoint_from(&frame.psi().image(group, space.rep(t))))
        .collect();
    let b = base_polytabloid(space, Field::Rational).support();

    let cosets = space.cosets();
    let mut found: BTreeMap<usize, Factorization> = BTreeMap::new();
    for &sigma in space.col_group().elements() {
        for &rho in space.row_group().elements() {
            let d = group.compose(sigma, rho);
            if cosets.rep_of(d) == d {
                let t = space.tabloid_of(d);
                found.entry(t.0).or_insert(Factorization { d: t, sigma, rho });
            }
        }
    }
    let analysis = SupportAnalysis {
        a,
        b,
        factorizations: found.into_values().collect(),
    };
    if space.is_verified() {
        if let Some(d) = analysis.b.iter().find(|d| analysis.a.binary_search(d).is_err()) {
            return Err(Error::Violation(format!(
                "{} is in the support of e but dΨ meets Ψ'",
                space.display(*d)
            )));
        }
        if analysis.b != analysis.factorized() {
            return Err(Error::Violation(
                "support of e differs from the set of d = σρ".into(),
            ));
        }
    }
    Ok(analysis)
}

/// The good-system verdict, computed over ℚ. Requires a useful frame.
pub fn check_good(space: &TabloidSpace<'_>) -> Result<bool> {
    require_useful(space)?;
    Ok(support_analysis(space)?.is_good())
}

fn require_useful(space: &TabloidSpace<'_>) -> Result<()> {
    if space.is_verified() {
        Ok(())
    } else {
        Err(Error::Precondition("the frame is not a useful system".into()))
    }
}

/// S^{J,J'} inside M^Δ.
#[derive(Debug, Clone)]
pub struct SpechtModule {
    field: Field,
    dim_m: usize,
    psi_roots: Vec<usize>,
    generator_reps: Vec<ElementId>,
    generators: Vec<ModuleVector>,
    basis_indices: Vec<usize>,
    basis: Vec<Vector>,
    echelon: RowReduction,
}

/// Builds S from the generators `e_{dJ,dJ'}`, `d ∈ D_{Ψ'}`, and checks
/// that the span is W-stable.
pub fn specht_module(space: &TabloidSpace<'_>, field: Field) -> Result<SpechtModule> {
    require_useful(space)?;
    let group = space.group();
    let col_reps = CosetReps::new(group, space.frame().psi_prime())?;
    let e = base_polytabloid(space, field);
    let generator_reps = col_reps.reps().to_vec();
    let generators = group.exec().map_slice(&generator_reps, |&d| -> Result<ModuleVector> {
        let v = e.act(space, d);
        check_polytabloid(space, d, &v)?;
        Ok(v)
    });
    let generators: Vec<ModuleVector> = generators.into_iter().collect::<Result<_>>()?;

    let mut basis_indices = Vec::new();
    let mut basis: Vec<Vector> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if basis.len() == space.len() {
            break;
        }
        let v = g.to_vector();
        if !v.is_zero() && solve_membership(&v, &basis)?.is_none() {
            basis_indices.push(i);
            basis.push(v);
        }
    }
    let echelon = row_reduce(&basis, field)?;
    let module = SpechtModule {
        field,
        dim_m: space.len(),
        psi_roots: space.frame().psi().roots().to_vec(),
        generator_reps,
        generators,
        basis_indices,
        basis,
        echelon,
    };
    for i in 0..group.root_system().rank() {
        let s = group.generator(i);
        for b in &module.basis {
            let image = ModuleVector::from_vector(field, b).act(space, s);
            if !module.contains(&image)? {
                return Err(Error::Violation(format!(
                    "S is not stable under t{}",
                    i + 1
                )));
            }
        }
    }
    Ok(module)
}

impl SpechtModule {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `dim M^Δ`.
    pub fn ambient_dim(&self) -> usize {
        self.dim_m
    }

    /// The `d ∈ D_{Ψ'}` indexing the generators.
    pub fn generator_reps(&self) -> &[ElementId] {
        &self.generator_reps
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    /// Positions in [`generators`](Self::generators) of the basis vectors:
    /// the first maximal independent subsequence.
    pub fn basis_indices(&self) -> &[usize] {
        &self.basis_indices
    }

    pub fn basis(&self) -> Vec<ModuleVector> {
        self.basis.iter().map(|b| ModuleVector::from_vector(self.field, b)).collect()
    }

    /// Reduced row echelon basis of S.
    pub fn echelon(&self) -> &RowReduction {
        &self.echelon
    }

    /// Coordinates of `m` in the generator basis, if `m ∈ S`.
    pub fn coordinates(&self, m: &ModuleVector) -> Result<Option<Vec<Scalar>>> {
        self.check_compatible(m)?;
        if m.is_zero() {
            return Ok(Some(vec![self.field.zero(); self.dim()]));
        }
        Ok(solve_membership(&m.to_vector(), &self.basis)?)
    }

    pub fn contains(&self, m: &ModuleVector) -> Result<bool> {
        Ok(self.coordinates(m)?.is_some())
    }

    fn check_compatible(&self, m: &ModuleVector) -> Result<()> {
        if m.dim != self.dim_m || m.field != self.field {
            return Err(Error::Precondition(format!(
                "vector of M^Δ with dim {} over {} does not match S (dim M = {}, {})",
                m.dim, m.field, self.dim_m, self.field
            )));
        }
        Ok(())
    }
}

/// Matrix of `g` on S in the generator basis: row `i` holds the
/// coordinates of `g·b_i`.
pub fn representation_matrix(space: &TabloidSpace<'_>, module: &SpechtModule, g: ElementId) -> Result<Matrix> {
    check_same_space(space, module)?;
    let rows = module
        .basis()
        .iter()
        .map(|b| {
            module.coordinates(&b.act(space, g))?.ok_or_else(|| {
                Error::Violation(format!(
                    "{} maps a basis vector of S outside S",
                    space.group().format_word(g)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::from_rows(vec![])?);
    }
    Ok(Matrix::from_rows(rows)?)
}

fn check_same_space(space: &TabloidSpace<'_>, module: &SpechtModule) -> Result<()> {
    if module.dim_m != space.len() || module.psi_roots != space.frame().psi().roots() {
        return Err(Error::Precondition(
            "module and tabloid space come from different row subsystems".into(),
        ));
    }
    Ok(())
}

/// Class function values in the group's class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector {
    values: Vec<Scalar>,
}

impl CharacterVector {
    pub fn new(values: Vec<Scalar>) -> Self {
        CharacterVector { values }
    }

    pub fn from_i64(field: Field, values: &[i64]) -> Self {
        CharacterVector::new(values.iter().map(|&v| field.from_i64(v)).collect())
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.values.iter().map(Scalar::to_i64).collect()
    }

    pub fn sub(&self, other: &CharacterVector) -> CharacterVector {
        CharacterVector::new(self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect())
    }

    /// `(1/|W|) Σ_g χ(g) ψ(g⁻¹)`.
    pub fn inner(&self, other: &CharacterVector, group: &ReflectionGroup) -> Result<Scalar> {
        let classes = group.conjugacy_classes();
        if self.values.len() != classes.len() || other.values.len() != classes.len() {
            return Err(Error::Precondition("character length differs from the class count".into()));
        }
        let field = self.values.first().map_or(Field::Rational, Scalar::field);
        let mut acc = field.zero();
        for (i, c) in classes.iter().enumerate() {
            let inv = group.class_of(group.inverse(c.representative));
            let term = &self.values[i] * &other.values[inv];
            acc += &(&field.from_i64(c.size() as i64) * &term);
        }
        Ok(acc.checked_div(&field.from_i64(group.order() as i64))?)
    }

    pub fn norm(&self, group: &ReflectionGroup) -> Result<Scalar> {
        self.inner(self, group)
    }
}

/// Trace of each class representative on S.
pub fn character(space: &TabloidSpace<'_>, module: &SpechtModule) -> Result<CharacterVector> {
    check_same_space(space, module)?;
    let group = space.group();
    let reps: Vec<ElementId> = group.conjugacy_classes().iter().map(|c| c.representative).collect();
    let values = group.exec().map_slice(&reps, |&g| -> Result<Scalar> {
        let m = representation_matrix(space, module, g)?;
        Ok(m.trace().unwrap_or_else(|| module.field.zero()))
    });
    Ok(CharacterVector::new(values.into_iter().collect::<Result<_>>()?))
}

/// Character of `big / small` for `small ⊆ big` over a field of
/// characteristic 0.
pub fn quotient_character(space: &TabloidSpace<'_>, big: &SpechtModule, small: &SpechtModule) -> Result<CharacterVector> {
    if big.field.characteristic() != 0 || small.field != big.field {
        return Err(Error::Precondition("quotient characters need characteristic 0".into()));
    }
    check_same_space(space, small)?;
    for b in small.basis() {
        if !big.contains(&b)? {
            return Err(Error::Precondition("the smaller module is not contained in the larger".into()));
        }
    }
    Ok(character(space, big)?.sub(&character(space, small)?))
}

/// `D = S / (S ∩ S⊥)`.
#[derive(Debug, Clone)]
pub struct IrreducibleQuotient {
    pub dim_d: usize,
    /// Basis of `S ∩ S⊥`.
    pub radical: Vec<ModuleVector>,
    /// Gram matrix of the generator basis.
    pub gram: Matrix,
}

/// Gram rank gives `dim D`; its null space gives `S ∩ S⊥`. In
/// characteristic 0 the radical must vanish.
pub fn irreducible_quotient(module: &SpechtModule) -> Result<IrreducibleQuotient> {
    let field = module.field;
    let basis = module.basis();
    let k = basis.len();
    let mut rows = Vec::with_capacity(k);
    for a in &basis {
        rows.push(basis.iter().map(|b| bilinear_form(a, b)).collect::<Result<Vec<_>>>()?);
    }
    let gram_rows: Vec<Vector> = rows.iter().cloned().map(Vector::new).collect();
    let dim_d = rank(&gram_rows, field)?;
    let radical: Vec<ModuleVector> = null_space(&gram_rows, k, field)?
        .iter()
        .map(|c| {
            let mut v = ModuleVector::zero(field, module.dim_m);
            for (ci, b) in c.entries().iter().zip(&basis) {
                v.add_scaled(ci, b);
            }
            v
        })
        .collect();
    if field.characteristic() == 0 && !radical.is_empty() {
        return Err(Error::Violation("S ∩ S⊥ is nonzero in characteristic 0".into()));
    }
    Ok(IrreducibleQuotient {
        dim_d,
        radical,
        gram: Matrix::from_rows(rows)?,
    })
}

/// The scalar `c` with `κ_{J'} m = c·e_{J,J'}`, which exists on good
/// systems.
pub fn kappa_multiple_check(space: &TabloidSpace<'_>, m: &ModuleVector) -> Result<Scalar> {
    let e = base_polytabloid(space, m.field);
    if e.is_zero() {
        return Err(Error::Precondition("e is zero; the frame is not useful".into()));
    }
    let km = kappa_apply(space, space.col_group(), m);
    let (t, lead) = e.terms().next().expect("nonzero");
    let c = km.coefficient(t).checked_div(lead)?;
    if km != e.scale(&c) {
        return Err(Error::Violation("κ_(J') m is not a multiple of e".into()));
    }
    Ok(c)
}

/// Outcome of the submodule probe for `U = KW·m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dichotomy {
    pub dim_u: usize,
    pub contains_s: bool,
    pub inside_s_perp: bool,
}

/// Checks that `U = span{w·m}` either contains S or lies in S⊥, and not
/// both. Characteristic 0 only.
pub fn submodule_dichotomy_probe(space: &TabloidSpace<'_>, module: &SpechtModule, m: &ModuleVector) -> Result<Dichotomy> {
    if module.field.characteristic() != 0 {
        return Err(Error::Precondition("the submodule probe needs characteristic 0".into()));
    }
    check_same_space(space, module)?;
    module.check_compatible(m)?;
    let group = space.group();
    let orbit: Vec<ModuleVector> = group.exec().map(group.order(), |w| m.act(space, ElementId(w)));
    let u = row_reduce(&orbit.iter().map(ModuleVector::to_vector).collect::<Vec<_>>(), module.field)?;
    let basis = module.basis();
    let mut contains_s = true;
    for b in &basis {
        if solve_membership(&b.to_vector(), &u.basis)?.is_none() {
            contains_s = false;
            break;
        }
    }
    let mut inside_s_perp = true;
    'outer: for x in &orbit {
        for b in &basis {
            if !bilinear_form(x, b)?.is_zero() {
                inside_s_perp = false;
                break 'outer;
            }
        }
    }
    let probe = Dichotomy {
        dim_u: u.rank(),
        contains_s,
        inside_s_perp,
    };
    if contains_s == inside_s_perp && module.dim() > 0 {
        return Err(Error::Violation(format!(
            "submodule of dimension {} neither contains S nor lies in S⊥ (or both)",
            probe.dim_u
        )));
    }
    Ok(probe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::tabloid::Frame;
    use crate::weyl::DEFAULT_CAP;

    fn group(label: &str) -> ReflectionGroup {
        ReflectionGroup::generate(RootSystem::new(label.parse().unwrap()).unwrap(), DEFAULT_CAP).unwrap()
    }

    fn space<'g>(g: &'g ReflectionGroup, rows: &str, cols: &str) -> TabloidSpace<'g> {
        TabloidSpace::new(g, Frame::parse(g.root_system(), rows, cols).unwrap()).unwrap()
    }

    #[test]
    fn g2_polytabloid_expansion() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let e = base_polytabloid(&sp, Field::Rational);
        assert_eq!(
            e.format(&sp),
            "{01;11,31} - {32;21,-01} - {32;11,-31} + {01;-10,-32}"
        );
        let expect = [("", 1), ("t2 t1", -1), ("t1 t2 t1", -1), ("t1 t2 t1 t2 t1", 1)];
        for (w, c) in expect {
            let t = sp.tabloid_of(g2.parse_word(w).unwrap());
            assert_eq!(e.coefficient(t), Field::Rational.from_i64(c));
        }
        assert_eq!(e.support().len(), 4);
    }

    #[test]
    fn kappa_on_empty_columns_is_identity() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "");
        let m = ModuleVector::tabloid(Field::Rational, sp.len(), Tabloid(2));
        assert_eq!(kappa_apply(&sp, sp.col_group(), &m), m);
    }

    #[test]
    fn kappa_squared_scales() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let q = Field::Rational;
        let m = ModuleVector::tabloid(q, sp.len(), Tabloid(1)).add(&ModuleVector::tabloid(q, sp.len(), Tabloid(4)));
        let once = kappa_apply(&sp, sp.col_group(), &m);
        let twice = kappa_apply(&sp, sp.col_group(), &once);
        assert_eq!(twice, once.scale(&q.from_i64(sp.col_group().len() as i64)));
    }

    #[test]
    fn g2_module_matrix_and_character() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let s = specht_module(&sp, Field::Rational).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis_indices(), &[0, 1]);
        assert_eq!(s.generator_reps()[1], g2.parse_word("t1").unwrap());
        let t = representation_matrix(&sp, &s, g2.parse_word("t1 t2").unwrap()).unwrap();
        assert_eq!(t.to_i64_rows().unwrap(), vec![vec![-1, 1], vec![-1, 0]]);
        let chi = character(&sp, &s).unwrap();
        assert_eq!(chi.to_i64().unwrap(), vec![2, 0, -1, -1, 2, 0]);
        assert_eq!(chi.norm(&g2).unwrap(), Field::Rational.one());
        assert_eq!(irreducible_quotient(&s).unwrap().dim_d, 2);
    }

    #[test]
    fn g2_quotient_character() {
        let g2 = group("G2");
        let big_space = space(&g2, "01", "11");
        let small_space = space(&g2, "01", "11,31");
        let big = specht_module(&big_space, Field::Rational).unwrap();
        let small = specht_module(&small_space, Field::Rational).unwrap();
        // S^{J,{11}} is the augmentation kernel of M (χ₄+χ₅+χ₆), so the
        // quotient by S^{J,{11,31}} (χ₅) is χ₄+χ₆
        assert_eq!(big.dim(), 5);
        let chi = quotient_character(&big_space, &big, &small).unwrap();
        assert_eq!(chi.to_i64().unwrap(), vec![3, 1, 0, 0, -3, -1]);
        let zero = quotient_character(&big_space, &big, &big).unwrap();
        assert!(zero.values().iter().all(Scalar::is_zero));
        assert!(quotient_character(&big_space, &small, &big).is_err());
    }

    #[test]
    fn support_and_goodness() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let sa = support_analysis(&sp).unwrap();
        let words = ["", "t2 t1", "t1 t2 t1", "t1 t2 t1 t2 t1"];
        let mut want: Vec<Tabloid> = words.iter().map(|w| sp.tabloid_of(g2.parse_word(w).unwrap())).collect();
        want.sort();
        assert_eq!(sa.a, want);
        assert_eq!(sa.b, want);
        assert!(check_good(&sp).unwrap());

        let full = space(&g2, "10,01", "");
        assert!(check_good(&full).unwrap());
        let partial = space(&g2, "01", "");
        assert!(matches!(check_good(&partial), Err(Error::Precondition(_))));
    }

    #[test]
    fn b3_polytabloid_vanishes() {
        let b3 = group("B3");
        let sp = space(&b3, "100,122,001", "010,111,012");
        assert!(!sp.is_verified());
        assert!(base_polytabloid(&sp, Field::Rational).is_zero());
        let w = vanishing_witness(&sp).unwrap().unwrap();
        assert_eq!(w, b3.parse_word("t3 t2 t3 t1 t2 t3 t1 t2 t1").unwrap());
        assert!(matches!(specht_module(&sp, Field::Rational), Err(Error::Precondition(_))));
    }

    #[test]
    fn extreme_frames_give_trivial_and_sign() {
        let g2 = group("G2");
        let triv = space(&g2, "10,01", "");
        let s = specht_module(&triv, Field::Rational).unwrap();
        assert_eq!(character(&triv, &s).unwrap().to_i64().unwrap(), vec![1; 6]);
        let sign = space(&g2, "", "10,01");
        let s = specht_module(&sign, Field::Rational).unwrap();
        assert_eq!(character(&sign, &s).unwrap().to_i64().unwrap(), vec![1, -1, 1, 1, 1, -1]);
    }

    #[test]
    fn bilinear_form_basics() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let q = Field::Rational;
        let a = ModuleVector::tabloid(q, 6, Tabloid(1));
        let b = ModuleVector::tabloid(q, 6, Tabloid(2));
        assert!(bilinear_form(&a, &a).unwrap().is_one());
        assert!(bilinear_form(&a, &b).unwrap().is_zero());
        let e = base_polytabloid(&sp, q);
        assert_eq!(bilinear_form(&e, &e).unwrap(), q.from_i64(4));
        assert!(bilinear_form(&a, &ModuleVector::zero(q, 3)).is_err());
    }

    #[test]
    fn kappa_multiples() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let q = Field::Rational;
        let first = ModuleVector::tabloid(q, sp.len(), Tabloid(0));
        assert!(kappa_multiple_check(&sp, &first).unwrap().is_one());
        let sa = support_analysis(&sp).unwrap();
        for t in sp.all_tabloids() {
            let c = kappa_multiple_check(&sp, &ModuleVector::tabloid(q, sp.len(), t)).unwrap();
            match sa.factorizations.iter().find(|f| f.d == t) {
                Some(f) => assert_eq!(c, g2.sign_in(f.sigma, q)),
                None => assert!(c.is_zero()),
            }
        }
    }

    #[test]
    fn dichotomy_on_extremes() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        let q = Field::Rational;
        let s = specht_module(&sp, q).unwrap();
        let e = base_polytabloid(&sp, q);
        let p = submodule_dichotomy_probe(&sp, &s, &e).unwrap();
        assert!(p.contains_s && !p.inside_s_perp && p.dim_u == 2);
        let z = submodule_dichotomy_probe(&sp, &s, &ModuleVector::zero(q, sp.len())).unwrap();
        assert!(!z.contains_s && z.inside_s_perp);
    }

    #[test]
    fn gf_runs_are_consistent() {
        let g2 = group("G2");
        let sp = space(&g2, "01", "11,31");
        for p in [2, 3, 5] {
            let f = Field::prime(p).unwrap();
            let s = specht_module(&sp, f).unwrap();
            let d = irreducible_quotient(&s).unwrap();
            assert!(d.dim_d <= s.dim());
            assert_eq!(d.dim_d + d.radical.len(), s.dim());
        }
    }
}
