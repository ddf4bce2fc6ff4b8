//! Spaces, maps, and the catalog.
//!
//! A map between catalog spaces carries its pullback (a ring map on
//! generators), its codimension, its normal bundle, and Umkehr data in one
//! of two modes: a fundamental class `f_*(1)` (valid when the pullback is
//! surjective; the rest of the map follows from the projection formula),
//! or an explicit pushforward table on the source basis. Either way the
//! map is resolved at construction into a full basis table, so the two
//! modes are interchangeable once loaded.
//!
//! Covers are codimension-0 maps marked with a sheet count; for them
//! `p_* p^* = n . id`, which over GF(2) is the zero map for even `n`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::charclass::{CharClassError, VirtualBundle};
use crate::f2poly::{
    rings_compatible, tensor, F2Error, GradedElement, RingHom, RingPresentation, Term,
};
use crate::gf2mat::PreimageSolver;
use crate::steenrod::{CheckReport, Witness};

/// A named space with a validated ring presentation.
#[derive(Debug, PartialEq, Eq)]
pub struct Space {
    name: String,
    ring: Arc<RingPresentation>,
}

impl Space {
    pub fn new(name: &str, ring: Arc<RingPresentation>) -> Arc<Self> {
        Arc::new(Space { name: name.to_string(), ring })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }
}

fn same_space(a: &Arc<Space>, b: &Arc<Space>) -> bool {
    Arc::ptr_eq(a, b) || (a.name == b.name && rings_compatible(&a.ring, &b.ring))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyError {
    /// An element or bundle belongs to the wrong space.
    SpaceMismatch { map: String, detail: String },
    /// `compose(f, g)` needs `g.target = f.source`.
    NotComposable { f: String, g: String },
    /// Fundamental-class Umkehr data needs a surjective pullback.
    PullbackNotSurjective { map: String, degree: u32 },
    /// Umkehr data must raise degree by exactly the codimension.
    UmkehrDegree { map: String, detail: String },
    /// An explicit table must cover every source basis monomial once.
    BadTable { map: String, detail: String },
    /// The normal bundle's rank must equal the codimension.
    RankCodimMismatch { map: String, rank: i64, codim: u32 },
    /// The operation requires a map marked as an n-sheeted cover.
    NotACover(String),
    /// Catalog ids must be unique per kind.
    DuplicateName(String),
    /// A referenced catalog entry does not exist.
    Unresolved(String),
    Algebra(F2Error),
    CharClass(CharClassError),
}

impl fmt::Display for TopologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyError::SpaceMismatch { map, detail } => {
                write!(f, "map `{map}`: {detail}")
            }
            TopologyError::NotComposable { f: ff, g } => {
                write!(f, "cannot compose `{ff}` after `{g}`: target/source mismatch")
            }
            TopologyError::PullbackNotSurjective { map, degree } => {
                write!(f, "map `{map}`: pullback is not surjective in degree {degree}, fundamental-class Umkehr data is invalid")
            }
            TopologyError::UmkehrDegree { map, detail } => write!(f, "map `{map}`: {detail}"),
            TopologyError::BadTable { map, detail } => write!(f, "map `{map}`: {detail}"),
            TopologyError::RankCodimMismatch { map, rank, codim } => {
                write!(f, "map `{map}`: normal bundle rank {rank} != codimension {codim}")
            }
            TopologyError::NotACover(map) => {
                write!(f, "map `{map}` is not marked as a cover")
            }
            TopologyError::DuplicateName(n) => write!(f, "duplicate catalog id `{n}`"),
            TopologyError::Unresolved(n) => write!(f, "unresolved reference `{n}`"),
            TopologyError::Algebra(e) => write!(f, "{e}"),
            TopologyError::CharClass(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for TopologyError {}

impl From<F2Error> for TopologyError {
    fn from(e: F2Error) -> Self {
        TopologyError::Algebra(e)
    }
}

impl From<CharClassError> for TopologyError {
    fn from(e: CharClassError) -> Self {
        TopologyError::CharClass(e)
    }
}

/// Declared Umkehr data, before resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UmkehrData {
    /// `f_*(1)`; the rest of the map follows from the projection formula.
    FundamentalClass(GradedElement),
    /// Pushforward of every source basis monomial.
    Table(Vec<(Term, GradedElement)>),
}

/// A map between catalog spaces, with everything the checkers need.
#[derive(Debug, PartialEq, Eq)]
pub struct MapData {
    name: String,
    source: Arc<Space>,
    target: Arc<Space>,
    codim: u32,
    pullback: RingHom,
    declared: UmkehrData,
    /// Resolved pushforward, aligned with the source basis order.
    table: Vec<GradedElement>,
    normal: VirtualBundle,
    sheets: Option<u32>,
}

impl MapData {
    pub fn new(
        name: &str,
        source: Arc<Space>,
        target: Arc<Space>,
        codim: u32,
        pullback: RingHom,
        declared: UmkehrData,
        normal: VirtualBundle,
        sheets: Option<u32>,
    ) -> Result<Self, TopologyError> {
        let mismatch = |detail: String| TopologyError::SpaceMismatch {
            map: name.to_string(),
            detail,
        };
        if !rings_compatible(pullback.domain(), target.ring()) {
            return Err(mismatch("pullback domain is not the target ring".into()));
        }
        if !rings_compatible(pullback.codomain(), source.ring()) {
            return Err(mismatch("pullback codomain is not the source ring".into()));
        }
        if !rings_compatible(normal.base(), source.ring()) {
            return Err(mismatch("normal bundle is not over the source".into()));
        }
        if normal.rank() != i64::from(codim) {
            return Err(TopologyError::RankCodimMismatch {
                map: name.to_string(),
                rank: normal.rank(),
                codim,
            });
        }

        let table = match &declared {
            UmkehrData::FundamentalClass(f1) => {
                resolve_fundamental(name, &source, &target, codim, &pullback, f1)?
            }
            UmkehrData::Table(rows) => resolve_table(name, &source, &target, codim, rows)?,
        };

        Ok(MapData {
            name: name.to_string(),
            source,
            target,
            codim,
            pullback,
            declared,
            table,
            normal,
            sheets,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Space> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Space> {
        &self.target
    }

    pub fn codim(&self) -> u32 {
        self.codim
    }

    pub fn pullback_hom(&self) -> &RingHom {
        &self.pullback
    }

    pub fn declared(&self) -> &UmkehrData {
        &self.declared
    }

    pub fn normal(&self) -> &VirtualBundle {
        &self.normal
    }

    pub fn sheets(&self) -> Option<u32> {
        self.sheets
    }

    /// `f^*`: substitute pullback images of the target generators.
    pub fn pullback(&self, a: &GradedElement) -> Result<GradedElement, TopologyError> {
        Ok(self.pullback.apply(a)?)
    }

    /// `f_*`: the resolved table extended linearly. Raises degree by the
    /// codimension.
    pub fn umkehr(&self, b: &GradedElement) -> Result<GradedElement, TopologyError> {
        if !rings_compatible(b.ring(), self.source.ring()) {
            return Err(TopologyError::SpaceMismatch {
                map: self.name.clone(),
                detail: "umkehr argument is not in the source ring".into(),
            });
        }
        let mut acc = GradedElement::zero(self.target.ring());
        for t in b.terms() {
            let idx = self
                .source
                .ring()
                .basis_index(t)
                .expect("normal-form terms are basis monomials");
            acc = acc.add(&self.table[idx])?;
        }
        Ok(acc)
    }

    /// `f_*(1)`, the class the map represents.
    pub fn umkehr_one(&self) -> Result<GradedElement, TopologyError> {
        self.umkehr(&GradedElement::one(self.source.ring()))
    }
}

fn resolve_fundamental(
    name: &str,
    source: &Arc<Space>,
    target: &Arc<Space>,
    codim: u32,
    pullback: &RingHom,
    f1: &GradedElement,
) -> Result<Vec<GradedElement>, TopologyError> {
    if !rings_compatible(f1.ring(), target.ring()) {
        return Err(TopologyError::SpaceMismatch {
            map: name.to_string(),
            detail: "fundamental class is not in the target ring".into(),
        });
    }
    if !f1.is_zero() && f1.degree() != Some(codim) {
        return Err(TopologyError::UmkehrDegree {
            map: name.to_string(),
            detail: format!("f_*(1) = {f1} is not homogeneous of degree {codim}"),
        });
    }

    let src = source.ring();
    let tgt = target.ring();
    let mut table = Vec::with_capacity(src.dimension());
    let mut d = 0;
    let mut src_pos = 0;
    while src_pos < src.dimension() {
        // graded piece of the source in degree d
        let src_piece: Vec<usize> = (src_pos..src.dimension())
            .take_while(|&i| src.basis()[i].degree() == d)
            .collect();
        if src_piece.is_empty() {
            d += 1;
            continue;
        }
        let tgt_piece: Vec<&Term> =
            tgt.basis().iter().filter(|t| t.degree() == d).collect();
        // matrix of the pullback on this degree, columns over target basis
        let mut columns = Vec::with_capacity(tgt_piece.len());
        for t in &tgt_piece {
            let image = pullback.apply(&tgt.element_from_term(t))?;
            let mut col = alloc::vec![false; src_piece.len()];
            for it in image.terms() {
                let idx = src.basis_index(it).expect("normal form");
                col[idx - src_pos] = true;
            }
            columns.push(col);
        }
        let solver = PreimageSolver::new(&columns, src_piece.len());
        for row in 0..src_piece.len() {
            let support = solver.solve_unit(row).ok_or(TopologyError::PullbackNotSurjective {
                map: name.to_string(),
                degree: d,
            })?;
            // preimage a with f^*(a) = basis monomial; then f_*(m) = a f_*(1)
            let mut preimage = GradedElement::zero(tgt);
            for c in support {
                preimage = preimage.add(&tgt.element_from_term(tgt_piece[c]))?;
            }
            table.push(preimage.mul(f1)?);
        }
        src_pos += src_piece.len();
        d += 1;
    }
    Ok(table)
}

fn resolve_table(
    name: &str,
    source: &Arc<Space>,
    target: &Arc<Space>,
    codim: u32,
    rows: &[(Term, GradedElement)],
) -> Result<Vec<GradedElement>, TopologyError> {
    let src = source.ring();
    let mut table: Vec<Option<GradedElement>> = alloc::vec![None; src.dimension()];
    for (t, value) in rows {
        let idx = src.basis_index(t).ok_or_else(|| TopologyError::BadTable {
            map: name.to_string(),
            detail: format!("`{}` is not a basis monomial of the source", src.term_string(t)),
        })?;
        if table[idx].is_some() {
            return Err(TopologyError::BadTable {
                map: name.to_string(),
                detail: format!("duplicate row for `{}`", src.term_string(t)),
            });
        }
        if !rings_compatible(value.ring(), target.ring()) {
            return Err(TopologyError::SpaceMismatch {
                map: name.to_string(),
                detail: "table value is not in the target ring".into(),
            });
        }
        if !value.is_zero() && value.degree() != Some(t.degree() + codim) {
            return Err(TopologyError::UmkehrDegree {
                map: name.to_string(),
                detail: format!(
                    "pushforward of `{}` must be homogeneous of degree {}",
                    src.term_string(t),
                    t.degree() + codim
                ),
            });
        }
        table[idx] = Some(value.clone());
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| TopologyError::BadTable {
                map: name.to_string(),
                detail: format!(
                    "missing row for basis monomial `{}`",
                    src.term_string(&src.basis()[i])
                ),
            })
        })
        .collect()
}

/// The identity map of a space: codimension 0, `f_*(1) = 1`, trivial
/// normal bundle.
pub fn identity_map(space: &Arc<Space>, name: &str) -> Result<MapData, TopologyError> {
    MapData::new(
        name,
        space.clone(),
        space.clone(),
        0,
        RingHom::identity(space.ring()),
        UmkehrData::FundamentalClass(GradedElement::one(space.ring())),
        VirtualBundle::trivial(space.ring(), 0),
        None,
    )
}

/// Composition `f . g` for `g: N -> M`, `f: M -> X`: pullbacks compose
/// contravariantly, the Umkehr table is `f_* . g_*` on the basis, the
/// codimensions add, and the normal bundle is `nu_g (+) g^* nu_f`.
pub fn compose(f: &MapData, g: &MapData, name: &str) -> Result<MapData, TopologyError> {
    if !same_space(&g.target, &f.source) {
        return Err(TopologyError::NotComposable {
            f: f.name.clone(),
            g: g.name.clone(),
        });
    }
    let pullback = f.pullback.and_then(&g.pullback)?;
    let src = g.source.ring();
    let rows = src
        .basis()
        .iter()
        .map(|t| {
            let pushed = f.umkehr(&g.umkehr(&src.element_from_term(t))?)?;
            Ok((t.clone(), pushed))
        })
        .collect::<Result<Vec<_>, TopologyError>>()?;
    let normal = g.normal.whitney_sum(&f.normal.pullback(&g.pullback)?)?;
    MapData::new(
        name,
        g.source.clone(),
        f.target.clone(),
        f.codim + g.codim,
        pullback,
        UmkehrData::Table(rows),
        normal,
        None,
    )
}

/// The map `1 x f: P x M -> P x X` over the Kunneth rings: the pullback is
/// `id (x) f^*`, the Umkehr sends `a (x) b` to `a (x) f_*(b)`, and the
/// normal bundle is the Kunneth lift of `nu_f`.
pub fn product_with_space(
    p: &Arc<Space>,
    f: &MapData,
    name: &str,
) -> Result<MapData, TopologyError> {
    let ks = tensor(p.ring(), f.source.ring())?;
    let kt = tensor(p.ring(), f.target.ring())?;
    let source = Space::new(&format!("{}x{}", p.name, f.source.name), ks.ring().clone());
    let target = Space::new(&format!("{}x{}", p.name, f.target.name), kt.ring().clone());

    let mut images = Vec::with_capacity(kt.ring().width());
    for i in 0..p.ring().width() {
        images.push(ks.ring().generator_element(i)?);
    }
    for img in f.pullback.images() {
        images.push(ks.embed_right(img)?);
    }
    let pullback = RingHom::new(kt.ring().clone(), ks.ring().clone(), images)?;

    let rows = ks
        .ring()
        .basis()
        .iter()
        .map(|t| {
            let (tp, tm) = ks.split_term(t);
            let pushed_m = f.umkehr(&f.source.ring().element_from_term(&tm))?;
            let value = kt
                .embed_left(&p.ring().element_from_term(&tp))?
                .mul(&kt.embed_right(&pushed_m)?)?;
            Ok((t.clone(), value))
        })
        .collect::<Result<Vec<_>, TopologyError>>()?;

    let normal = f.normal.lift_right(&ks)?;
    MapData::new(
        name,
        source,
        target,
        f.codim,
        pullback,
        UmkehrData::Table(rows),
        normal,
        None,
    )
}

/// Verifies `p_* p^* = n . id` on every target basis element of a map
/// marked as an n-sheeted cover; over GF(2) that is the zero map for even
/// `n` and the identity for odd `n`.
pub fn double_cover_pushpull(p: &MapData) -> Result<CheckReport, TopologyError> {
    let Some(n) = p.sheets else {
        return Err(TopologyError::NotACover(p.name.clone()));
    };
    if p.codim != 0 {
        return Err(TopologyError::UmkehrDegree {
            map: p.name.clone(),
            detail: format!("a cover has codimension 0, got {}", p.codim),
        });
    }
    let description = format!("p_* p^* = {n} . id for `{}`", p.name);
    let tgt = p.target.ring();
    let mut cases = 0;
    for t in tgt.basis() {
        let b = tgt.element_from_term(t);
        let lhs = p.umkehr(&p.pullback(&b)?)?;
        let rhs = if n % 2 == 1 { b } else { GradedElement::zero(tgt) };
        cases += 1;
        if lhs != rhs {
            return Ok(CheckReport {
                description,
                cases,
                witness: Some(Witness {
                    location: tgt.term_string(t),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            });
        }
    }
    Ok(CheckReport { description, cases, witness: None })
}

/// Verifies the projection formula `f_*(f^*(a) . b) = a . f_*(b)` on
/// every (target basis, source basis) pair.
pub fn check_projection_formula(f: &MapData) -> Result<CheckReport, TopologyError> {
    let description = format!("projection formula for `{}`", f.name());
    let src = f.source().ring();
    let tgt = f.target().ring();
    let mut cases = 0;
    for a in tgt.basis() {
        let ea = tgt.element_from_term(a);
        let pulled = f.pullback(&ea)?;
        for b in src.basis() {
            let eb = src.element_from_term(b);
            let lhs = f.umkehr(&pulled.mul(&eb)?)?;
            let rhs = ea.mul(&f.umkehr(&eb)?)?;
            cases += 1;
            if lhs != rhs {
                return Ok(CheckReport {
                    description,
                    cases,
                    witness: Some(Witness {
                        location: format!(
                            "a={}, b={}",
                            tgt.term_string(a),
                            src.term_string(b)
                        ),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                });
            }
        }
    }
    Ok(CheckReport { description, cases, witness: None })
}

/// A named bundle in the catalog.
#[derive(Debug, PartialEq, Eq)]
pub struct NamedBundle {
    pub name: String,
    pub bundle: VirtualBundle,
}

/// Immutable collection of spaces, bundles, and maps, addressed by name.
#[derive(Debug, Default)]
pub struct Catalog {
    spaces: Vec<Arc<Space>>,
    bundles: Vec<NamedBundle>,
    maps: Vec<Arc<MapData>>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    pub fn add_space(&mut self, space: Arc<Space>) -> Result<(), TopologyError> {
        if self.space(space.name()).is_some() {
            return Err(TopologyError::DuplicateName(space.name().to_string()));
        }
        self.spaces.push(space);
        Ok(())
    }

    /// Registers a space unless an identical one is already present;
    /// a name clash with a different presentation is an error.
    pub fn ensure_space(&mut self, space: &Arc<Space>) -> Result<(), TopologyError> {
        match self.space(space.name()) {
            Some(existing) if same_space(existing, space) => Ok(()),
            Some(_) => Err(TopologyError::DuplicateName(space.name().to_string())),
            None => {
                self.spaces.push(space.clone());
                Ok(())
            }
        }
    }

    pub fn add_bundle(&mut self, name: &str, bundle: VirtualBundle) -> Result<(), TopologyError> {
        if self.bundle(name).is_some() {
            return Err(TopologyError::DuplicateName(name.to_string()));
        }
        self.bundles.push(NamedBundle { name: name.to_string(), bundle });
        Ok(())
    }

    pub fn add_map(&mut self, map: MapData) -> Result<(), TopologyError> {
        if self.map(map.name()).is_some() {
            return Err(TopologyError::DuplicateName(map.name().to_string()));
        }
        self.maps.push(Arc::new(map));
        Ok(())
    }

    pub fn space(&self, name: &str) -> Option<&Arc<Space>> {
        self.spaces.iter().find(|s| s.name() == name)
    }

    pub fn bundle(&self, name: &str) -> Option<&NamedBundle> {
        self.bundles.iter().find(|b| b.name == name)
    }

    pub fn map(&self, name: &str) -> Option<&Arc<MapData>> {
        self.maps.iter().find(|m| m.name() == name)
    }

    pub fn spaces(&self) -> &[Arc<Space>] {
        &self.spaces
    }

    pub fn bundles(&self) -> &[NamedBundle] {
        &self.bundles
    }

    pub fn maps(&self) -> &[Arc<MapData>] {
        &self.maps
    }
}

impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.spaces == other.spaces
            && self.bundles == other.bundles
            && self.maps == other.maps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2poly::{Generator, RingSpec};

    fn rp_ring(n: u32) -> Arc<RingPresentation> {
        if n == 0 {
            RingSpec::new(Vec::new(), None).build().unwrap()
        } else {
            RingSpec::new(vec![Generator::new("x", 1, Some(n + 1))], None)
                .build()
                .unwrap()
        }
    }

    fn rp_space(n: u32) -> Arc<Space> {
        Space::new(&format!("RP{n}"), rp_ring(n))
    }

    /// The catalog inclusion RP^m in RP^n.
    fn inclusion(src: &Arc<Space>, tgt: &Arc<Space>, m: u32, n: u32) -> MapData {
        let x_img = if m == 0 {
            GradedElement::zero(src.ring())
        } else {
            src.ring().parse_element("x").unwrap()
        };
        let pullback = RingHom::new(tgt.ring().clone(), src.ring().clone(), vec![x_img]).unwrap();
        let f1 = tgt.ring().parse_element(&format!("x^{}", n - m)).unwrap();
        let w = src
            .ring()
            .parse_element("1 + x")
            .or_else(|_| src.ring().parse_element("1"))
            .unwrap()
            .pow(n - m);
        let nu = VirtualBundle::new_genuine(src.ring(), n - m, w).unwrap();
        MapData::new(
            &format!("i{m}_{n}"),
            src.clone(),
            tgt.clone(),
            n - m,
            pullback,
            UmkehrData::FundamentalClass(f1),
            nu,
            None,
        )
        .unwrap()
    }

    #[test]
    fn inclusion_umkehr_shifts_powers() {
        let (rp1, rp3) = (rp_space(1), rp_space(3));
        let f = inclusion(&rp1, &rp3, 1, 3);
        // f_*(x^j) = x^(j+2)
        assert_eq!(f.umkehr_one().unwrap(), rp3.ring().parse_element("x^2").unwrap());
        let x = rp1.ring().parse_element("x").unwrap();
        assert_eq!(f.umkehr(&x).unwrap(), rp3.ring().parse_element("x^3").unwrap());
        // pullback restricts the generator and kills x^3
        assert_eq!(f.pullback(&rp3.ring().parse_element("x").unwrap()).unwrap(), x);
        assert_eq!(
            f.pullback(&GradedElement::one(rp3.ring())).unwrap(),
            GradedElement::one(rp1.ring())
        );
        assert!(f
            .pullback(&rp3.ring().parse_element("x^3").unwrap())
            .unwrap()
            .is_zero());
        // umkehr of zero is zero
        assert!(f.umkehr(&GradedElement::zero(rp1.ring())).unwrap().is_zero());
    }

    #[test]
    fn point_inclusion_pushes_to_top_class() {
        let (rp0, rp4) = (rp_space(0), rp_space(4));
        let f = inclusion(&rp0, &rp4, 0, 4);
        assert_eq!(f.umkehr_one().unwrap(), rp4.ring().parse_element("x^4").unwrap());
    }

    #[test]
    fn identity_map_is_neutral() {
        let rp3 = rp_space(3);
        let id = identity_map(&rp3, "id_RP3").unwrap();
        assert_eq!(id.codim(), 0);
        for t in rp3.ring().basis() {
            let e = rp3.ring().element_from_term(t);
            assert_eq!(id.umkehr(&e).unwrap(), e);
            assert_eq!(id.pullback(&e).unwrap(), e);
        }
    }

    #[test]
    fn composition_agrees_with_direct_inclusion() {
        let (rp1, rp2, rp4) = (rp_space(1), rp_space(2), rp_space(4));
        let g = inclusion(&rp1, &rp2, 1, 2);
        let f = inclusion(&rp2, &rp4, 2, 4);
        let fg = compose(&f, &g, "c1_2_4").unwrap();
        assert_eq!(fg.codim(), 3);
        let direct = inclusion(&rp1, &rp4, 1, 4);
        // same Umkehr on the whole basis, same pullback images
        for t in rp1.ring().basis() {
            let e = rp1.ring().element_from_term(t);
            assert_eq!(fg.umkehr(&e).unwrap(), direct.umkehr(&e).unwrap());
        }
        assert_eq!(fg.umkehr_one().unwrap(), rp4.ring().parse_element("x^3").unwrap());
        assert_eq!(fg.normal(), direct.normal());
        // compose with identity changes nothing
        let id = identity_map(&rp2, "id_RP2").unwrap();
        let same = compose(&id, &g, "same").unwrap();
        for t in rp1.ring().basis() {
            let e = rp1.ring().element_from_term(t);
            assert_eq!(same.umkehr(&e).unwrap(), g.umkehr(&e).unwrap());
        }
    }

    #[test]
    fn projection_formula_holds_for_inclusions() {
        let (rp2, rp5) = (rp_space(2), rp_space(5));
        let f = inclusion(&rp2, &rp5, 2, 5);
        for a in rp5.ring().basis() {
            let ea = rp5.ring().element_from_term(a);
            for b in rp2.ring().basis() {
                let eb = rp2.ring().element_from_term(b);
                let lhs = f.umkehr(&f.pullback(&ea).unwrap().mul(&eb).unwrap()).unwrap();
                let rhs = ea.mul(&f.umkehr(&eb).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn product_map_acts_factorwise() {
        let (rp2, rp1, rp3) = (rp_space(2), rp_space(1), rp_space(3));
        let f = inclusion(&rp1, &rp3, 1, 3);
        let pf = product_with_space(&rp2, &f, "pr_RP2_i1_3").unwrap();
        assert_eq!(pf.source().name(), "RP2xRP1");
        assert_eq!(pf.target().name(), "RP2xRP3");
        let src = pf.source().ring();
        let tgt = pf.target().ring();
        // (1 x f)_*(1 (x) 1) = 1 (x) f_*(1)
        assert_eq!(pf.umkehr_one().unwrap(), tgt.parse_element("x'^2").unwrap());
        // (1 x f)_*(mu^a (x) x^j) = mu^a (x) x^(j+2), here mu = x of RP2
        let a = src.parse_element("x^2*x'^1").unwrap();
        assert_eq!(pf.umkehr(&a).unwrap(), tgt.parse_element("x^2*x'^3").unwrap());
        // pullback fixes the left factor
        let left = tgt.parse_element("x").unwrap();
        assert_eq!(pf.pullback(&left).unwrap(), src.parse_element("x").unwrap());
    }

    fn circle() -> Arc<Space> {
        Space::new("S1", rp_ring(1))
    }

    fn cover(name: &str, sheets: u32) -> MapData {
        let s1 = circle();
        let ring = s1.ring().clone();
        let x_img = if sheets % 2 == 0 {
            GradedElement::zero(&ring)
        } else {
            ring.parse_element("x").unwrap()
        };
        let pullback = RingHom::new(ring.clone(), ring.clone(), vec![x_img]).unwrap();
        let one = GradedElement::one(&ring);
        let x = ring.parse_element("x").unwrap();
        let push_one = if sheets % 2 == 0 { GradedElement::zero(&ring) } else { one.clone() };
        let rows = vec![
            (one.terms()[0].clone(), push_one),
            (x.terms()[0].clone(), x.clone()),
        ];
        MapData::new(
            name,
            s1.clone(),
            s1,
            0,
            pullback,
            UmkehrData::Table(rows),
            VirtualBundle::trivial(&ring, 0),
            Some(sheets),
        )
        .unwrap()
    }

    #[test]
    fn cover_pushpull_is_multiplication_by_sheets() {
        // 2-sheeted: p_* p^* = 0 mod 2
        let rep = double_cover_pushpull(&cover("cov2", 2)).unwrap();
        assert!(rep.passed(), "{:?}", rep.witness);
        // 1-sheeted (identity-like): p_* p^* = id
        let rep = double_cover_pushpull(&cover("cov1", 1)).unwrap();
        assert!(rep.passed(), "{:?}", rep.witness);
        // 3-sheeted: 3 = 1 mod 2
        let rep = double_cover_pushpull(&cover("cov3", 3)).unwrap();
        assert!(rep.passed(), "{:?}", rep.witness);
        // unmarked maps are rejected
        let rp2 = rp_space(2);
        let id = identity_map(&rp2, "id").unwrap();
        assert!(matches!(double_cover_pushpull(&id), Err(TopologyError::NotACover(_))));
    }

    #[test]
    fn fundamental_class_mode_requires_surjective_pullback() {
        // the 2-sheeted cover pulls x to 0, so mode (a) must be rejected
        let s1 = circle();
        let ring = s1.ring().clone();
        let pullback =
            RingHom::new(ring.clone(), ring.clone(), vec![GradedElement::zero(&ring)]).unwrap();
        let err = MapData::new(
            "bad",
            s1.clone(),
            s1,
            0,
            pullback,
            UmkehrData::FundamentalClass(GradedElement::one(&ring)),
            VirtualBundle::trivial(&ring, 0),
            Some(2),
        );
        assert!(matches!(err, Err(TopologyError::PullbackNotSurjective { degree: 1, .. })));
    }

    #[test]
    fn umkehr_degree_bookkeeping_is_enforced() {
        let (rp1, rp3) = (rp_space(1), rp_space(3));
        let pullback = RingHom::new(
            rp3.ring().clone(),
            rp1.ring().clone(),
            vec![rp1.ring().parse_element("x").unwrap()],
        )
        .unwrap();
        // f_*(1) of degree 3 != codim 2
        let err = MapData::new(
            "bad",
            rp1.clone(),
            rp3.clone(),
            2,
            pullback,
            UmkehrData::FundamentalClass(rp3.ring().parse_element("x^3").unwrap()),
            VirtualBundle::new_genuine(rp1.ring(), 2, GradedElement::one(rp1.ring())).unwrap(),
            None,
        );
        assert!(matches!(err, Err(TopologyError::UmkehrDegree { .. })));
    }

    #[test]
    fn normal_bundle_fixture_rederives_from_tangent_classes() {
        // w(nu) (1+x)^(m+1) = f^* (1+x)^(n+1) over RP^m, the standard
        // tangent-bundle route to nu = (n-m) gamma
        for (m, n) in [(1u32, 3u32), (2, 3), (2, 5), (4, 8)] {
            let (src, tgt) = (rp_space(m), rp_space(n));
            let f = inclusion(&src, &tgt, m, n);
            let x_src = src.ring().parse_element("1 + x").unwrap();
            let lhs = f.normal().total_sw().mul(&x_src.pow(m + 1)).unwrap();
            let tangent_target = tgt.ring().parse_element("1 + x").unwrap().pow(n + 1);
            let rhs = f.pullback(&tangent_target).unwrap();
            assert_eq!(lhs, rhs, "RP{m} in RP{n}");
        }
    }

    #[test]
    fn catalog_rejects_duplicates() {
        let mut cat = Catalog::new();
        cat.add_space(rp_space(1)).unwrap();
        assert!(matches!(
            cat.add_space(rp_space(1)),
            Err(TopologyError::DuplicateName(_))
        ));
    }
}
