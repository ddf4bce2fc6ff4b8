//! Graded-commutative quotient polynomial algebras over GF(2).
//!
//! A ring is presented by an ordered list of generators, each with a
//! cohomological degree, a truncation exponent (the least power equal to
//! zero, or infinite), and a declared total Steenrod square. Elements are
//! finite sets of normal-form monomials; a monomial present in the set has
//! coefficient 1, an absent one has coefficient 0, so addition is symmetric
//! difference and cancellation is automatic.
//!
//! Presentations with an infinite truncation must carry a global degree
//! cap (this is how `H^*(RP^inf)` is modelled up to a degree); monomials
//! whose total degree exceeds the cap are zero. Dropping such monomials is
//! a genuine ring quotient, so all identities in degrees up to the cap are
//! exact.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Bound on the number of basis monomials a presentation may enumerate.
const MAX_BASIS: usize = 1 << 20;

/// A ring generator: a name, a cohomological degree, and a truncation
/// exponent (`None` means polynomial, i.e. never truncated by itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub truncation: Option<u32>,
}

impl Generator {
    pub fn new(name: &str, degree: u32, truncation: Option<u32>) -> Self {
        Generator { name: name.to_string(), degree, truncation }
    }
}

/// A normal-form monomial: one exponent per generator, in generator order,
/// with the total degree cached. Terms order by total degree, ties broken
/// so that powers of earlier generators come first (graded lexicographic);
/// this is the canonical term order used everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    degree: u32,
    exps: Vec<u16>,
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Term {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }
}

/// Errors from ring and element operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum F2Error {
    /// Operands belong to different ring presentations.
    RingMismatch,
    /// A name does not denote a generator of the presentation.
    UnknownGenerator(String),
    /// Raw monomial data does not match the presentation (wrong arity).
    PresentationMismatch { expected: usize, got: usize },
    /// The presentation itself is illegal (bad degree, bad sq-rule, ...).
    InvalidPresentation(String),
    /// Element text could not be parsed.
    Parse(String),
}

impl fmt::Display for F2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            F2Error::RingMismatch => write!(f, "operands belong to different rings"),
            F2Error::UnknownGenerator(n) => write!(f, "unknown generator `{n}`"),
            F2Error::PresentationMismatch { expected, got } => {
                write!(f, "monomial has {got} exponents, presentation has {expected} generators")
            }
            F2Error::InvalidPresentation(msg) => write!(f, "invalid presentation: {msg}"),
            F2Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for F2Error {}

/// A presented ring: `GF(2)[g_1, ..., g_n] / (g_i^{t_i}, degree cap)`.
///
/// Construction goes through [`RingSpec`], which validates the generators
/// and the per-generator total Steenrod squares.
#[derive(Debug)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    /// Total square of each generator, as a normalized term list.
    sq_rules: Vec<Vec<Term>>,
    degree_cap: Option<u32>,
    /// All normal-form monomials in canonical order.
    basis: Vec<Term>,
    max_degree: u32,
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.sq_rules == other.sq_rules
            && self.degree_cap == other.degree_cap
    }
}

impl Eq for RingPresentation {}

/// Input to ring construction: generators, optional degree cap, and
/// per-generator sq-rules in the canonical element syntax. Degree-1
/// generators default to the forced rule `g + g^2`; higher-degree
/// generators must state a rule explicitly.
#[derive(Debug, Clone, Default)]
pub struct RingSpec {
    pub generators: Vec<Generator>,
    pub degree_cap: Option<u32>,
    pub sq_rules: Vec<(String, String)>,
}

impl RingSpec {
    pub fn new(generators: Vec<Generator>, degree_cap: Option<u32>) -> Self {
        RingSpec { generators, degree_cap, sq_rules: Vec::new() }
    }

    pub fn with_rule(mut self, generator: &str, rule: &str) -> Self {
        self.sq_rules.push((generator.to_string(), rule.to_string()));
        self
    }

    pub fn build(self) -> Result<Arc<RingPresentation>, F2Error> {
        RingPresentation::build(self)
    }
}

impl RingPresentation {
    fn build(spec: RingSpec) -> Result<Arc<RingPresentation>, F2Error> {
        let RingSpec { generators, degree_cap, sq_rules } = spec;
        for g in &generators {
            if g.degree == 0 {
                return Err(F2Error::InvalidPresentation(format!(
                    "generator `{}` has degree 0",
                    g.name
                )));
            }
            if let Some(t) = g.truncation {
                if t < 2 {
                    return Err(F2Error::InvalidPresentation(format!(
                        "generator `{}` has truncation {t} < 2",
                        g.name
                    )));
                }
            } else {
                match degree_cap {
                    None => {
                        return Err(F2Error::InvalidPresentation(format!(
                            "generator `{}` is polynomial but the ring has no degree cap",
                            g.name
                        )))
                    }
                    Some(c) if c < g.degree => {
                        return Err(F2Error::InvalidPresentation(format!(
                            "degree cap {c} is below the degree of generator `{}`",
                            g.name
                        )))
                    }
                    _ => {}
                }
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(F2Error::InvalidPresentation(format!(
                    "duplicate generator name `{}`",
                    g.name
                )));
            }
        }
        // A cap at or above the largest representable degree cuts nothing;
        // canonicalize it away so presentations compare structurally.
        let degree_cap = match degree_cap {
            Some(c) if generators.iter().all(|g| g.truncation.is_some()) => {
                let full: u32 = generators
                    .iter()
                    .map(|g| (g.truncation.expect("all finite") - 1) * g.degree)
                    .sum();
                if c >= full {
                    None
                } else {
                    Some(c)
                }
            }
            c => c,
        };
        let basis = enumerate_basis(&generators, degree_cap)?;
        let max_degree = basis.iter().map(Term::degree).max().unwrap_or(0);

        let ring = RingPresentation {
            generators,
            sq_rules: Vec::new(),
            degree_cap,
            basis,
            max_degree,
        };
        let arc = Arc::new(ring);
        let mut rules: Vec<Option<GradedElement>> = vec![None; arc.generators.len()];
        for (name, text) in &sq_rules {
            let idx = arc.generator_index(name).ok_or_else(|| {
                F2Error::InvalidPresentation(format!("sq-rule names unknown generator `{name}`"))
            })?;
            if rules[idx].is_some() {
                return Err(F2Error::InvalidPresentation(format!(
                    "duplicate sq-rule for generator `{name}`"
                )));
            }
            rules[idx] = Some(arc.parse_element(text)?);
        }
        let mut resolved = Vec::with_capacity(arc.generators.len());
        for (i, rule) in rules.into_iter().enumerate() {
            let g = &arc.generators[i];
            let elem = match rule {
                Some(e) => e,
                None if g.degree == 1 => {
                    let x = arc.generator_element(i)?;
                    let x2 = x.mul(&x)?;
                    x.add(&x2)?
                }
                None => {
                    return Err(F2Error::InvalidPresentation(format!(
                        "generator `{}` has degree {} > 1 and no sq-rule",
                        g.name, g.degree
                    )))
                }
            };
            // Sq^0 = id: the degree-|g| part must be exactly g.
            let low = elem.degree_part(g.degree);
            if low.terms.len() != 1 || low.terms[0] != arc.generator_term(i) {
                return Err(F2Error::InvalidPresentation(format!(
                    "sq-rule for `{}` does not have `{}` as its degree-{} part",
                    g.name, g.name, g.degree
                )));
            }
            if let Some(top) = elem.top_degree() {
                if top > 2 * g.degree {
                    return Err(F2Error::InvalidPresentation(format!(
                        "sq-rule for `{}` has a term of degree {top} > {}",
                        g.name,
                        2 * g.degree
                    )));
                }
            }
            resolved.push(elem.terms);
        }
        let mut ring = Arc::try_unwrap(arc).expect("sole owner during construction");
        ring.sq_rules = resolved;
        Ok(Arc::new(ring))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn width(&self) -> usize {
        self.generators.len()
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    /// Largest total degree carried by any basis monomial.
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// All normal-form monomials, ordered by (degree, exponents).
    pub fn basis(&self) -> &[Term] {
        &self.basis
    }

    /// GF(2)-dimension of the presented ring.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Position of a normal-form monomial in the canonical basis order.
    pub fn basis_index(&self, t: &Term) -> Option<usize> {
        self.basis.binary_search(t).ok()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    fn generator_term(&self, idx: usize) -> Term {
        let mut exps = vec![0u16; self.width()];
        exps[idx] = 1;
        Term { degree: self.generators[idx].degree, exps }
    }

    /// Effective exponent bound: least power of the generator that is zero,
    /// with the cap folded in for polynomial generators.
    fn effective_truncation(&self, idx: usize) -> u32 {
        let g = &self.generators[idx];
        match g.truncation {
            Some(t) => t,
            None => self.degree_cap.expect("cap enforced at build") / g.degree + 1,
        }
    }

    /// Checks exponents against truncations and the cap. `None` means the
    /// monomial is the zero class.
    fn make_term(&self, exps: Vec<u16>) -> Result<Option<Term>, F2Error> {
        if exps.len() != self.width() {
            return Err(F2Error::PresentationMismatch {
                expected: self.width(),
                got: exps.len(),
            });
        }
        let mut degree: u32 = 0;
        for (i, &e) in exps.iter().enumerate() {
            if u32::from(e) >= self.effective_truncation(i) {
                return Ok(None);
            }
            degree += u32::from(e) * self.generators[i].degree;
        }
        if let Some(cap) = self.degree_cap {
            if degree > cap {
                return Ok(None);
            }
        }
        Ok(Some(Term { degree, exps }))
    }
}

fn enumerate_basis(gens: &[Generator], cap: Option<u32>) -> Result<Vec<Term>, F2Error> {
    let mut basis = vec![Term { degree: 0, exps: vec![0; gens.len()] }];
    for (i, g) in gens.iter().enumerate() {
        let bound = match g.truncation {
            Some(t) => t - 1,
            None => cap.expect("checked by caller") / g.degree,
        };
        let mut next = Vec::new();
        for t in &basis {
            for e in 0..=bound {
                let degree = t.degree + e * g.degree;
                if let Some(c) = cap {
                    if degree > c {
                        break;
                    }
                }
                let mut exps = t.exps.clone();
                exps[i] = e as u16;
                next.push(Term { degree, exps });
            }
            if next.len() > MAX_BASIS {
                return Err(F2Error::InvalidPresentation(
                    "presentation has too many basis monomials".to_string(),
                ));
            }
        }
        basis = next;
    }
    basis.sort();
    Ok(basis)
}

/// Sorts a raw term list and cancels duplicate pairs (GF(2) addition).
fn normalize_terms(mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort();
    let mut out = Vec::with_capacity(terms.len());
    let mut iter = terms.into_iter().peekable();
    while let Some(t) = iter.next() {
        let mut count = 1usize;
        while iter.peek() == Some(&t) {
            iter.next();
            count += 1;
        }
        if count % 2 == 1 {
            out.push(t);
        }
    }
    out
}

/// An element of a presented ring: a finite set of normal-form monomials,
/// each with implicit coefficient 1. Terms are kept sorted in canonical
/// order, so equal elements have identical representations.
#[derive(Debug, Clone)]
pub struct GradedElement {
    ring: Arc<RingPresentation>,
    terms: Vec<Term>,
}

impl PartialEq for GradedElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && rings_compatible(&self.ring, &other.ring)
    }
}

impl Eq for GradedElement {}

pub(crate) fn rings_compatible(a: &Arc<RingPresentation>, b: &Arc<RingPresentation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GradedElement {
    pub fn zero(ring: &Arc<RingPresentation>) -> Self {
        GradedElement { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<RingPresentation>) -> Self {
        let unit = Term { degree: 0, exps: vec![0; ring.width()] };
        GradedElement { ring: ring.clone(), terms: vec![unit] }
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when all terms share one total degree (the zero element is
    /// vacuously homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].degree == w[1].degree)
    }

    /// The common degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [] => None,
            terms if self.is_homogeneous() => Some(terms[0].degree),
            _ => None,
        }
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.terms.last().map(Term::degree)
    }

    fn check_same_ring(&self, other: &Self) -> Result<(), F2Error> {
        if rings_compatible(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(F2Error::RingMismatch)
        }
    }

    /// Sum in GF(2): symmetric difference of term sets.
    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        self.check_same_ring(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].cmp(&other.terms[j]) {
                core::cmp::Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Ok(GradedElement { ring: self.ring.clone(), terms })
    }

    /// Cup product: distributed term-by-term, then normalized. Commutative
    /// without signs since the coefficients are mod 2.
    pub fn mul(&self, other: &Self) -> Result<Self, F2Error> {
        self.check_same_ring(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let exps: Vec<u16> =
                    a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
                if let Some(t) = self.ring.make_term(exps)? {
                    raw.push(t);
                }
            }
        }
        Ok(GradedElement { ring: self.ring.clone(), terms: normalize_terms(raw) })
    }

    /// Square, using that (a+b)^2 = a^2 + b^2 in characteristic 2.
    pub fn square(&self) -> Self {
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let exps: Vec<u16> = t.exps.iter().map(|e| e * 2).collect();
            if let Ok(Some(t)) = self.ring.make_term(exps) {
                raw.push(t);
            }
        }
        GradedElement { ring: self.ring.clone(), terms: normalize_terms(raw) }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = GradedElement::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        result
    }

    /// Sub-sum of the terms of total degree exactly `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|t| t.degree == d).cloned().collect();
        GradedElement { ring: self.ring.clone(), terms }
    }
}

impl RingPresentation {
    /// Normalizes a raw multiset of exponent vectors into an element:
    /// monomials hitting a truncation or the cap are deleted, duplicate
    /// pairs cancel.
    pub fn normalize(
        self: &Arc<Self>,
        raw: impl IntoIterator<Item = Vec<u16>>,
    ) -> Result<GradedElement, F2Error> {
        let mut terms = Vec::new();
        for exps in raw {
            if let Some(t) = self.make_term(exps)? {
                terms.push(t);
            }
        }
        Ok(GradedElement { ring: self.clone(), terms: normalize_terms(terms) })
    }

    /// The element `g_idx` itself (zero if the presentation kills it).
    pub fn generator_element(self: &Arc<Self>, idx: usize) -> Result<GradedElement, F2Error> {
        let mut exps = vec![0u16; self.width()];
        exps[idx] = 1;
        self.normalize([exps])
    }

    /// Builds a one-term element from named exponents, e.g. `[("x", 3)]`.
    pub fn monomial(
        self: &Arc<Self>,
        named: &[(&str, u16)],
    ) -> Result<GradedElement, F2Error> {
        let mut exps = vec![0u16; self.width()];
        for (name, e) in named {
            let idx = self
                .generator_index(name)
                .ok_or_else(|| F2Error::UnknownGenerator((*name).to_string()))?;
            exps[idx] += e;
        }
        self.normalize([exps])
    }

    /// The declared total Steenrod square of generator `idx`.
    pub fn sq_rule(self: &Arc<Self>, idx: usize) -> GradedElement {
        GradedElement { ring: self.clone(), terms: self.sq_rules[idx].clone() }
    }

    /// An element with one basis monomial.
    pub fn element_from_term(self: &Arc<Self>, term: &Term) -> GradedElement {
        GradedElement { ring: self.clone(), terms: vec![term.clone()] }
    }

    pub fn term_string(&self, t: &Term) -> String {
        if t.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in t.exps.iter().enumerate() {
            if e > 0 {
                parts.push(format!("{}^{}", self.generators[i].name, e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for GradedElement {
    /// Canonical text form: terms joined by " + ", each monomial as
    /// `name^exp` factors joined by "*", the unit as "1", zero as "0".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.ring.term_string(t))?;
            first = false;
        }
        Ok(())
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl RingPresentation {
    /// Parses the canonical element syntax, then normalizes. Accepts `name`
    /// as shorthand for `name^1` and tolerates extra whitespace.
    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<GradedElement, F2Error> {
        let mut raw: Vec<Vec<u16>> = Vec::new();
        for term_text in text.split('+') {
            let term_text = term_text.trim();
            if term_text.is_empty() {
                return Err(F2Error::Parse(format!("empty term in `{text}`")));
            }
            if term_text == "0" {
                continue;
            }
            if term_text == "1" {
                raw.push(vec![0; self.width()]);
                continue;
            }
            let mut exps = vec![0u16; self.width()];
            for factor in term_text.split('*') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let exp: u16 = e.trim().parse().map_err(|_| {
                            F2Error::Parse(format!("bad exponent `{e}` in `{factor}`"))
                        })?;
                        (n.trim(), exp)
                    }
                    None => (factor, 1),
                };
                if name.is_empty()
                    || !name.starts_with(is_ident_start)
                    || !name.chars().all(is_ident_char)
                {
                    return Err(F2Error::Parse(format!("bad factor `{factor}` in `{text}`")));
                }
                let idx = self
                    .generator_index(name)
                    .ok_or_else(|| F2Error::UnknownGenerator(name.to_string()))?;
                exps[idx] = exps[idx].checked_add(exp).ok_or_else(|| {
                    F2Error::Parse(format!("exponent overflow in `{term_text}`"))
                })?;
            }
            raw.push(exps);
        }
        self.normalize(raw)
    }
}

/// A degree-preserving ring homomorphism given by generator images.
///
/// Construction checks that each image is homogeneous of the generator's
/// degree (or zero) and that the domain's truncation relations map to zero,
/// so applying the map is always well-defined on normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    domain: Arc<RingPresentation>,
    codomain: Arc<RingPresentation>,
    images: Vec<GradedElement>,
}

impl RingHom {
    pub fn new(
        domain: Arc<RingPresentation>,
        codomain: Arc<RingPresentation>,
        images: Vec<GradedElement>,
    ) -> Result<Self, F2Error> {
        if images.len() != domain.width() {
            return Err(F2Error::PresentationMismatch {
                expected: domain.width(),
                got: images.len(),
            });
        }
        for (i, img) in images.iter().enumerate() {
            if !rings_compatible(&img.ring, &codomain) {
                return Err(F2Error::RingMismatch);
            }
            let g = &domain.generators[i];
            if !img.is_zero() && img.degree() != Some(g.degree) {
                return Err(F2Error::InvalidPresentation(format!(
                    "image of `{}` is not homogeneous of degree {}",
                    g.name, g.degree
                )));
            }
            let t = domain.effective_truncation(i);
            if !img.pow(t).is_zero() {
                return Err(F2Error::InvalidPresentation(format!(
                    "image of `{}` does not satisfy its truncation relation",
                    g.name
                )));
            }
        }
        Ok(RingHom { domain, codomain, images })
    }

    /// The identity map of a ring.
    pub fn identity(ring: &Arc<RingPresentation>) -> Self {
        let images = (0..ring.width())
            .map(|i| ring.generator_element(i).expect("in range"))
            .collect();
        RingHom { domain: ring.clone(), codomain: ring.clone(), images }
    }

    pub fn domain(&self) -> &Arc<RingPresentation> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<RingPresentation> {
        &self.codomain
    }

    pub fn images(&self) -> &[GradedElement] {
        &self.images
    }

    /// Substitutes generator images term by term.
    pub fn apply(&self, a: &GradedElement) -> Result<GradedElement, F2Error> {
        if !rings_compatible(&a.ring, &self.domain) {
            return Err(F2Error::RingMismatch);
        }
        let mut acc = GradedElement::zero(&self.codomain);
        for t in &a.terms {
            let mut prod = GradedElement::one(&self.codomain);
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&self.images[i].pow(u32::from(e)))?;
                }
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// Composition `other . self` (apply `self` first).
    pub fn and_then(&self, other: &RingHom) -> Result<RingHom, F2Error> {
        if !rings_compatible(&self.codomain, &other.domain) {
            return Err(F2Error::RingMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|img| other.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        RingHom::new(self.domain.clone(), other.codomain.clone(), images)
    }
}

/// The Kunneth (tensor) square of two presentations, with the embeddings
/// of both factors.
///
/// Generator name collisions are resolved by suffixing the second factor's
/// clashing names with `'` (repeatedly, until distinct). A polynomial
/// generator of a capped factor is materialized as a finite truncation at
/// its effective exponent bound, so the product presentation is finite and
/// its dimension is the product of the factor dimensions.
#[derive(Debug, Clone)]
pub struct Kunneth {
    ring: Arc<RingPresentation>,
    left: Arc<RingPresentation>,
    right: Arc<RingPresentation>,
    left_width: usize,
}

/// Tensor product over GF(2) of two presented rings.
pub fn tensor(
    left: &Arc<RingPresentation>,
    right: &Arc<RingPresentation>,
) -> Result<Kunneth, F2Error> {
    let mut gens: Vec<Generator> = Vec::with_capacity(left.width() + right.width());
    let mut rules: Vec<Vec<Term>> = Vec::with_capacity(gens.capacity());
    let materialize = |ring: &Arc<RingPresentation>, i: usize| {
        let g = &ring.generators[i];
        Generator {
            name: g.name.clone(),
            degree: g.degree,
            truncation: Some(ring.effective_truncation(i)),
        }
    };
    for i in 0..left.width() {
        gens.push(materialize(left, i));
        rules.push(pad_terms(&left.sq_rules[i], 0, left.width() + right.width()));
    }
    for i in 0..right.width() {
        let mut g = materialize(right, i);
        while gens.iter().any(|h| h.name == g.name) {
            g.name.push('\'');
        }
        gens.push(g);
        rules.push(pad_terms(&right.sq_rules[i], left.width(), left.width() + right.width()));
    }

    // The factor rules are already validated and normal; padding them into
    // the product presentation preserves both, so the ring is assembled
    // directly instead of re-validating through RingSpec.
    let basis = enumerate_basis(&gens, None)?;
    let max_degree = basis.iter().map(Term::degree).max().unwrap_or(0);
    let ring = Arc::new(RingPresentation {
        generators: gens,
        sq_rules: rules,
        degree_cap: None,
        basis,
        max_degree,
    });
    Ok(Kunneth { ring, left: left.clone(), right: right.clone(), left_width: left.width() })
}

fn pad_terms(terms: &[Term], offset: usize, width: usize) -> Vec<Term> {
    terms
        .iter()
        .map(|t| {
            let mut exps = vec![0u16; width];
            exps[offset..offset + t.exps.len()].copy_from_slice(&t.exps);
            Term { degree: t.degree, exps }
        })
        .collect()
}

impl Kunneth {
    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn left(&self) -> &Arc<RingPresentation> {
        &self.left
    }

    pub fn right(&self) -> &Arc<RingPresentation> {
        &self.right
    }

    /// The embedding `a -> a (x) 1`.
    pub fn embed_left(&self, a: &GradedElement) -> Result<GradedElement, F2Error> {
        if !rings_compatible(&a.ring, &self.left) {
            return Err(F2Error::RingMismatch);
        }
        let terms = pad_terms(&a.terms, 0, self.ring.width());
        self.ring.normalize(terms.into_iter().map(|t| t.exps))
    }

    /// The embedding `b -> 1 (x) b`.
    pub fn embed_right(&self, b: &GradedElement) -> Result<GradedElement, F2Error> {
        if !rings_compatible(&b.ring, &self.right) {
            return Err(F2Error::RingMismatch);
        }
        let terms = pad_terms(&b.terms, self.left_width, self.ring.width());
        self.ring.normalize(terms.into_iter().map(|t| t.exps))
    }

    /// The cross product `a (x) b`.
    pub fn cross(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement, F2Error> {
        self.embed_left(a)?.mul(&self.embed_right(b)?)
    }

    /// Splits a product-basis monomial into its factor parts.
    pub fn split_term(&self, t: &Term) -> (Term, Term) {
        let (l, r) = t.exps.split_at(self.left_width);
        let ldeg: u32 = l
            .iter()
            .zip(self.left.generators())
            .map(|(&e, g)| u32::from(e) * g.degree)
            .sum();
        (
            Term { degree: ldeg, exps: l.to_vec() },
            Term { degree: t.degree - ldeg, exps: r.to_vec() },
        )
    }

    /// The ring map killing the left factor's generators (restriction along
    /// the slice inclusion of the right factor).
    pub fn project_right(&self) -> Result<RingHom, F2Error> {
        let mut images = Vec::with_capacity(self.ring.width());
        images.resize(self.left_width, GradedElement::zero(&self.right));
        for i in 0..self.right.width() {
            images.push(self.right.generator_element(i)?);
        }
        RingHom::new(self.ring.clone(), self.right.clone(), images)
    }
}
