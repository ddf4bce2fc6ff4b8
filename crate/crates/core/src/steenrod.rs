//! Total Steenrod squares on presented rings.
//!
//! The total square is the ring endomorphism determined by the declared
//! per-generator rules: `Sq(g)` is the generator's sq-rule, `Sq(ab) =
//! Sq(a) Sq(b)` (Cartan formula) and `Sq(a+b) = Sq(a) + Sq(b)`. The
//! individual operation `Sq^i` on a homogeneous class of degree `k` is the
//! degree-`(k+i)` part of the total square.
//!
//! Binomial coefficients mod 2 come from Lucas' theorem (a bitwise AND),
//! which doubles as an independent oracle for `Sq^i` on powers of a
//! degree-1 generator: `Sq^i(x^j) = C(j,i) x^(i+j)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::fmt;

use crate::f2poly::{F2Error, GradedElement, RingPresentation};

/// The operation `Sq^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SteenrodOp(pub u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SteenrodError {
    /// `sq` acts on homogeneous classes; mixed inputs must use `sq_total`.
    RequiresHomogeneous,
    /// Adem relations require `a < 2b`.
    BadRelation { a: u32, b: u32 },
    Algebra(F2Error),
}

impl fmt::Display for SteenrodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SteenrodError::RequiresHomogeneous => {
                write!(f, "Sq^i requires a homogeneous class (use the total square for mixed inputs)")
            }
            SteenrodError::BadRelation { a, b } => {
                write!(f, "Adem relation requires a < 2b, got a={a}, b={b}")
            }
            SteenrodError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SteenrodError {}

impl From<F2Error> for SteenrodError {
    fn from(e: F2Error) -> Self {
        SteenrodError::Algebra(e)
    }
}

/// `C(n, k) mod 2` by Lucas' theorem: odd exactly when the binary digits
/// of `k` are dominated by those of `n`.
pub fn binom_mod2(n: u64, k: u64) -> bool {
    k <= n && (n & k) == k
}

/// Evaluator for total squares over one ring, memoizing `Sq(g)^e` per
/// generator power. Sweeps reuse one evaluator; the free functions below
/// build a throwaway one.
pub struct SqEvaluator {
    ring: Arc<RingPresentation>,
    memo: BTreeMap<(usize, u16), GradedElement>,
}

impl SqEvaluator {
    pub fn new(ring: &Arc<RingPresentation>) -> Self {
        SqEvaluator { ring: ring.clone(), memo: BTreeMap::new() }
    }

    fn gen_power(&mut self, idx: usize, e: u16) -> GradedElement {
        if let Some(hit) = self.memo.get(&(idx, e)) {
            return hit.clone();
        }
        let result = match e {
            0 => GradedElement::one(&self.ring),
            1 => self.ring.sq_rule(idx),
            _ if e % 2 == 0 => self.gen_power(idx, e / 2).square(),
            _ => {
                let even = self.gen_power(idx, e - 1);
                even.mul(&self.ring.sq_rule(idx)).expect("same ring")
            }
        };
        self.memo.insert((idx, e), result.clone());
        result
    }

    /// Total square of an arbitrary element.
    pub fn total(&mut self, a: &GradedElement) -> Result<GradedElement, SteenrodError> {
        if !crate::f2poly::rings_compatible(a.ring(), &self.ring) {
            return Err(SteenrodError::Algebra(F2Error::RingMismatch));
        }
        let mut acc = GradedElement::zero(&self.ring);
        for term in a.terms() {
            let mut prod = GradedElement::one(&self.ring);
            for (idx, &e) in term.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&self.gen_power(idx, e))?;
                }
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// `Sq^i` on a homogeneous class of degree `k`: the degree-`(k+i)`
    /// part of the total square.
    pub fn sq(&mut self, op: SteenrodOp, a: &GradedElement) -> Result<GradedElement, SteenrodError> {
        if !a.is_homogeneous() {
            return Err(SteenrodError::RequiresHomogeneous);
        }
        let k = a.degree().unwrap_or(0);
        Ok(self.total(a)?.degree_part(k + op.0))
    }
}

/// Total square through a one-shot evaluator.
pub fn sq_total(a: &GradedElement) -> GradedElement {
    SqEvaluator::new(a.ring()).total(a).expect("element of its own ring")
}

/// `Sq^i(a)` for homogeneous `a`.
pub fn sq(op: SteenrodOp, a: &GradedElement) -> Result<GradedElement, SteenrodError> {
    SqEvaluator::new(a.ring()).sq(op, a)
}

/// First-counterexample witness of a failed identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Where the identity broke: an index, a basis element, or a pair.
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity sweep: how many cases were checked and the
/// first counterexample, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub description: String,
    pub cases: usize,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn fail(
    description: String,
    cases: usize,
    location: String,
    lhs: &GradedElement,
    rhs: &GradedElement,
) -> CheckReport {
    CheckReport {
        description,
        cases,
        witness: Some(Witness { location, lhs: lhs.to_string(), rhs: rhs.to_string() }),
    }
}

/// Verifies the Cartan formula `Sq(ab) = Sq(a) Sq(b)` on all basis pairs
/// with `|a| + |b| <= d`.
pub fn check_cartan(ring: &Arc<RingPresentation>, d: u32) -> CheckReport {
    let description = format!("Cartan formula up to degree {d}");
    let mut eval = SqEvaluator::new(ring);
    let mut cases = 0;
    for a in ring.basis() {
        if a.degree() > d {
            break;
        }
        for b in ring.basis() {
            if a.degree() + b.degree() > d {
                break;
            }
            let ea = ring.element_from_term(a);
            let eb = ring.element_from_term(b);
            let prod = ea.mul(&eb).expect("same ring");
            let lhs = eval.total(&prod).expect("same ring");
            let rhs = eval
                .total(&ea)
                .expect("same ring")
                .mul(&eval.total(&eb).expect("same ring"))
                .expect("same ring");
            cases += 1;
            if lhs != rhs {
                let loc = format!("({})*({})", ring.term_string(a), ring.term_string(b));
                return fail(description, cases, loc, &lhs, &rhs);
            }
        }
    }
    CheckReport { description, cases, witness: None }
}

/// Verifies the Adem relation
/// `Sq^a Sq^b = sum_c C(b-1-c, a-2c) Sq^(a+b-c) Sq^c` (for `a < 2b`)
/// on every basis element of degree at most `d`.
pub fn check_adem(
    ring: &Arc<RingPresentation>,
    a: u32,
    b: u32,
    d: u32,
) -> Result<CheckReport, SteenrodError> {
    if a >= 2 * b {
        return Err(SteenrodError::BadRelation { a, b });
    }
    let description = format!("Adem relation Sq^{a} Sq^{b} up to degree {d}");
    let mut eval = SqEvaluator::new(ring);
    let mut cases = 0;
    for t in ring.basis() {
        if t.degree() > d {
            break;
        }
        let e = ring.element_from_term(t);
        let lhs = {
            let inner = eval.sq(SteenrodOp(b), &e)?;
            eval.sq(SteenrodOp(a), &inner)?
        };
        let mut rhs = GradedElement::zero(ring);
        for c in 0..=a / 2 {
            if binom_mod2(u64::from(b - 1 - c), u64::from(a - 2 * c)) {
                let inner = eval.sq(SteenrodOp(c), &e)?;
                rhs = rhs.add(&eval.sq(SteenrodOp(a + b - c), &inner)?)?;
            }
        }
        cases += 1;
        if lhs != rhs {
            return Ok(fail(description, cases, ring.term_string(t), &lhs, &rhs));
        }
    }
    Ok(CheckReport { description, cases, witness: None })
}

/// The standard axiom sweep on one ring, up to degree `d`:
///
/// * `Sq^0 = id` on every basis element;
/// * `Sq^(|a|) a = a * a` (squaring axiom);
/// * `Sq^i a = 0` for `i > |a|` (instability);
/// * for each degree-1 generator with the standard rule `g + g^2`, the
///   Lucas oracle `Sq^i(g^j) = C(j,i) g^(i+j)` for `0 <= i <= j <= d`;
/// * the Cartan formula on all basis pairs with `|a| + |b| <= d`.
pub fn check_axioms(ring: &Arc<RingPresentation>, d: u32) -> CheckReport {
    let description = format!("Steenrod axioms up to degree {d}");
    let mut eval = SqEvaluator::new(ring);
    let mut cases = 0;
    for t in ring.basis() {
        if t.degree() > d {
            break;
        }
        let e = ring.element_from_term(t);
        let k = t.degree();
        let loc = ring.term_string(t);

        let sq0 = eval.sq(SteenrodOp(0), &e).expect("basis is homogeneous");
        cases += 1;
        if sq0 != e {
            return fail(description, cases, format!("Sq^0 at {loc}"), &sq0, &e);
        }

        let top = eval.sq(SteenrodOp(k), &e).expect("basis is homogeneous");
        let square = e.mul(&e).expect("same ring");
        cases += 1;
        if top != square {
            return fail(description, cases, format!("Sq^{k} at {loc}"), &top, &square);
        }

        for i in k + 1..=2 * k {
            let above = eval.sq(SteenrodOp(i), &e).expect("basis is homogeneous");
            cases += 1;
            if !above.is_zero() {
                let zero = GradedElement::zero(ring);
                return fail(description, cases, format!("Sq^{i} at {loc}"), &above, &zero);
            }
        }
    }

    // Lucas oracle on powers of standard degree-1 generators.
    for (idx, g) in ring.generators().iter().enumerate() {
        if g.degree != 1 {
            continue;
        }
        let x = ring.generator_element(idx).expect("in range");
        let standard = x.add(&x.square()).expect("same ring");
        if ring.sq_rule(idx) != standard {
            continue;
        }
        for j in 1..=d {
            let power = x.pow(j);
            if power.is_zero() {
                break;
            }
            for i in 0..=j {
                let got = eval.sq(SteenrodOp(i), &power).expect("homogeneous");
                let expect = if binom_mod2(u64::from(j), u64::from(i)) {
                    x.pow(i + j)
                } else {
                    GradedElement::zero(ring)
                };
                cases += 1;
                if got != expect {
                    let loc = format!("Sq^{i} at {}^{j}", g.name);
                    return fail(description, cases, loc, &got, &expect);
                }
            }
        }
    }

    let cartan = check_cartan(ring, d);
    CheckReport { description, cases: cases + cartan.cases, witness: cartan.witness }
}
