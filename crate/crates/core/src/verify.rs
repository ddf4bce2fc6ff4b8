//! The theorem checkers.
//!
//! `check_thom` verifies `Sq^i(f_*(1)) = f_* w_i(nu_f)` for `0 <= i <= k`
//! (and the instability vanishing above `k`), with both sides computed
//! through entirely separate code paths: the left through the total
//! Steenrod square of the represented class, the right through the
//! Stiefel-Whitney classes of the normal bundle and the Umkehr table.
//!
//! `check_equivariant` verifies the refinement
//! `P_l(f_*(1)) = (1 x f)_* w_k(gamma_l (x) nu_f)` in the Kunneth ring of
//! `RP^l x X`, where `P_l(a) = sum_i mu^(k-i) (x) Sq^i(a)` and the right
//! side twists the lifted normal bundle by the tautological line bundle.
//!
//! `check_whitney_mod2` is the mod-2 shadow of Whitney's double-point
//! formula: `f_*(1) cup f_*(1) = f_* e(nu_f)` (the double-point term
//! carries an even coefficient and dies); it must agree with the `i = k`
//! clause of `check_thom` since `Sq^k` squares degree-k classes.
//!
//! `run_suite` evaluates a list of named tasks against a catalog and
//! reports one verdict per task, deterministically ordered by task id;
//! per-task errors become error verdicts and never abort the suite.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::charclass::{twist_top_class, CharClassError};
use crate::f2poly::{tensor, F2Error, Generator, GradedElement, Kunneth, RingSpec};
use crate::steenrod::{
    check_adem, check_axioms, CheckReport, SqEvaluator, SteenrodError, SteenrodOp, Witness,
};
use crate::topology::{
    double_cover_pushpull, product_with_space, Catalog, MapData, Space, TopologyError,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    Steenrod(SteenrodError),
    Topology(TopologyError),
    CharClass(CharClassError),
    Algebra(F2Error),
    Config(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::Steenrod(e) => write!(f, "{e}"),
            VerifyError::Topology(e) => write!(f, "{e}"),
            VerifyError::CharClass(e) => write!(f, "{e}"),
            VerifyError::Algebra(e) => write!(f, "{e}"),
            VerifyError::Config(msg) => write!(f, "{msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for VerifyError {}

impl From<SteenrodError> for VerifyError {
    fn from(e: SteenrodError) -> Self {
        VerifyError::Steenrod(e)
    }
}

impl From<TopologyError> for VerifyError {
    fn from(e: TopologyError) -> Self {
        VerifyError::Topology(e)
    }
}

impl From<CharClassError> for VerifyError {
    fn from(e: CharClassError) -> Self {
        VerifyError::CharClass(e)
    }
}

impl From<F2Error> for VerifyError {
    fn from(e: F2Error) -> Self {
        VerifyError::Algebra(e)
    }
}

/// One named check against the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationTask {
    pub id: String,
    pub kind: TaskKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TaskKind {
    /// `Sq^i(f_*(1)) = f_* w_i(nu_f)` for all i.
    Thom { map: String },
    /// `P_l(f_*(1)) = (1 x f)_* w_k(gamma_l (x) nu_f)`.
    Equivariant { map: String, ell: u32 },
    /// `f_*(1)^2 = f_* e(nu_f)`.
    Whitney { map: String },
    /// Restriction contract `iota^* P_l(a) = a cup a` on a ring's basis.
    InternalOp { space: String, ell: u32, upto: u32 },
    /// Steenrod axioms (Sq^0, squaring, instability, Lucas, Cartan).
    AxiomSweep { space: String, upto: u32 },
    /// One Adem relation `Sq^a Sq^b` on a ring's basis.
    AdemSweep { space: String, a: u32, b: u32, upto: u32 },
    /// `p_* p^* = n . id` for an n-sheeted cover.
    Cover { map: String, sheets: u32 },
}

impl TaskKind {
    pub fn kind_name(&self) -> &'static str {
        match self {
            TaskKind::Thom { .. } => "thom",
            TaskKind::Equivariant { .. } => "equivariant",
            TaskKind::Whitney { .. } => "whitney",
            TaskKind::InternalOp { .. } => "internalop",
            TaskKind::AxiomSweep { .. } => "axioms",
            TaskKind::AdemSweep { .. } => "adem",
            TaskKind::Cover { .. } => "cover",
        }
    }

    /// The map or ring the task addresses.
    pub fn target(&self) -> &str {
        match self {
            TaskKind::Thom { map }
            | TaskKind::Equivariant { map, .. }
            | TaskKind::Whitney { map }
            | TaskKind::Cover { map, .. } => map,
            TaskKind::InternalOp { space, .. }
            | TaskKind::AxiomSweep { space, .. }
            | TaskKind::AdemSweep { space, .. } => space,
        }
    }

    /// Canonical `key=value` rendering of the task parameters.
    pub fn parameter(&self) -> String {
        match self {
            TaskKind::Thom { .. } | TaskKind::Whitney { .. } => String::new(),
            TaskKind::Equivariant { ell, .. } => format!("ell={ell}"),
            TaskKind::InternalOp { ell, upto, .. } => format!("ell={ell},upto={upto}"),
            TaskKind::AxiomSweep { upto, .. } => format!("upto={upto}"),
            TaskKind::AdemSweep { a, b, upto, .. } => format!("a={a},b={b},upto={upto}"),
            TaskKind::Cover { sheets, .. } => format!("sheets={sheets}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictStatus::Pass => write!(f, "pass"),
            VerdictStatus::Fail => write!(f, "fail"),
            VerdictStatus::Error => write!(f, "error"),
        }
    }
}

/// Outcome of one task. On failure the witness holds the first
/// counterexample with both sides in canonical serialization; on error the
/// diagnostic explains why the task could not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub task: VerificationTask,
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    pub diagnostic: Option<String>,
}

impl Verdict {
    fn from_report(task: &VerificationTask, report: CheckReport) -> Self {
        Verdict {
            task: task.clone(),
            status: if report.passed() { VerdictStatus::Pass } else { VerdictStatus::Fail },
            witness: report.witness,
            diagnostic: None,
        }
    }

    fn error(task: &VerificationTask, err: VerifyError) -> Self {
        Verdict {
            task: task.clone(),
            status: VerdictStatus::Error,
            witness: None,
            diagnostic: Some(err.to_string()),
        }
    }
}

/// `RP^l` with its tautological degree-1 generator `mu`; the left factor
/// of every equivariant Kunneth ring, so one constructor keeps the
/// presentations identical across checkers.
pub fn rp_ell_space(ell: u32) -> Arc<Space> {
    let ring = RingSpec::new(vec![Generator::new("mu", 1, Some(ell + 1))], None)
        .build()
        .expect("valid presentation");
    Space::new(&format!("RP{ell}"), ring)
}

/// Per-index sides of the Thom formula for a map of codimension `k`:
/// `(i, Sq^i(f_*(1)), f_* w_i(nu_f))` for `0 <= i <= 2k`; above `k` the
/// right side is zero, which is the instability clause.
pub fn thom_rows(f: &MapData) -> Result<Vec<(u32, GradedElement, GradedElement)>, VerifyError> {
    let k = f.codim();
    if f.normal().rank() != i64::from(k) {
        return Err(VerifyError::Config(format!(
            "map `{}`: normal bundle rank {} != codimension {k}",
            f.name(),
            f.normal().rank()
        )));
    }
    let represented = f.umkehr_one()?;
    let mut eval = SqEvaluator::new(f.target().ring());
    let mut rows = Vec::with_capacity(2 * k as usize + 1);
    for i in 0..=2 * k {
        let lhs = eval.sq(SteenrodOp(i), &represented)?;
        let rhs = if i <= k {
            f.umkehr(&f.normal().sw(i))?
        } else {
            GradedElement::zero(f.target().ring())
        };
        rows.push((i, lhs, rhs));
    }
    Ok(rows)
}

/// Thom's formula `Sq^i(f_*(1)) = f_* w_i(nu_f)` for all i.
pub fn check_thom(f: &MapData) -> Result<CheckReport, VerifyError> {
    let description = format!("Thom formula for `{}`", f.name());
    let mut cases = 0;
    for (i, lhs, rhs) in thom_rows(f)? {
        cases += 1;
        if lhs != rhs {
            return Ok(CheckReport {
                description,
                cases,
                witness: Some(Witness {
                    location: format!("i={i}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            });
        }
    }
    Ok(CheckReport { description, cases, witness: None })
}

/// Whitney's formula mod 2: `f_*(1) cup f_*(1) = f_* e(nu_f)` (the
/// double-point term `2 psi_*(1)` vanishes). Computed independently of
/// `check_thom`: the left side is a literal cup square, the right the
/// pushforward of the top Stiefel-Whitney class.
pub fn check_whitney_mod2(f: &MapData) -> Result<CheckReport, VerifyError> {
    let description = format!("Whitney formula mod 2 for `{}`", f.name());
    let represented = f.umkehr_one()?;
    let lhs = represented.mul(&represented)?;
    let euler = f.normal().euler()?;
    let rhs = f.umkehr(&euler)?;
    if lhs != rhs {
        return Ok(CheckReport {
            description,
            cases: 1,
            witness: Some(Witness {
                location: "f_*(1)^2".to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        });
    }
    Ok(CheckReport { description, cases: 1, witness: None })
}

/// `P_l(alpha) = sum_{i=0}^{k} mu^(k-i) (x) Sq^i(alpha)` computed in a
/// prepared Kunneth square whose left factor is `RP^l`.
pub fn internal_op_in(k: &Kunneth, alpha: &GradedElement) -> Result<GradedElement, VerifyError> {
    if !alpha.is_homogeneous() {
        return Err(VerifyError::Steenrod(SteenrodError::RequiresHomogeneous));
    }
    let deg = alpha.degree().unwrap_or(0);
    let mu = k.left().generator_element(0)?;
    let mut eval = SqEvaluator::new(alpha.ring());
    let mut acc = GradedElement::zero(k.ring());
    for i in 0..=deg {
        let sq_i = eval.sq(SteenrodOp(i), alpha)?;
        acc = acc.add(&k.cross(&mu.pow(deg - i), &sq_i)?)?;
    }
    Ok(acc)
}

/// The internal Steenrod operation `P_l: H^k(X) -> H^(2k)(RP^l x X)`.
/// Powers of `mu` above `l` are killed by the `RP^l` truncation.
pub fn internal_op(alpha: &GradedElement, ell: u32) -> Result<GradedElement, VerifyError> {
    let rp = rp_ell_space(ell);
    let k = tensor(rp.ring(), alpha.ring())?;
    internal_op_in(&k, alpha)
}

/// The restriction contract `iota^* P_l(alpha) = alpha cup alpha` on every
/// basis element of degree at most `upto`. Algebraically `iota^*` sets
/// `mu` to zero, which extracts the `i = k` Kunneth component.
pub fn check_internal_op(
    space: &Arc<Space>,
    ell: u32,
    upto: u32,
) -> Result<CheckReport, VerifyError> {
    let description = format!(
        "internal operation contract on `{}` (ell={ell}, upto degree {upto})",
        space.name()
    );
    let rp = rp_ell_space(ell);
    let kunneth = tensor(rp.ring(), space.ring())?;
    let restrict = kunneth.project_right()?;
    let ring = space.ring();
    let mut cases = 0;
    for t in ring.basis() {
        if t.degree() > upto {
            break;
        }
        let alpha = ring.element_from_term(t);
        let p = internal_op_in(&kunneth, &alpha)?;
        let lhs = restrict.apply(&p)?;
        let rhs = alpha.mul(&alpha)?;
        cases += 1;
        if lhs != rhs {
            return Ok(CheckReport {
                description,
                cases,
                witness: Some(Witness {
                    location: ring.term_string(t),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }),
            });
        }
    }
    Ok(CheckReport { description, cases, witness: None })
}

/// The equivariant refinement: `P_l(f_*(1))` must equal
/// `(1 x f)_* w_k(gamma_l (x) nu_f)` in the ring of `RP^l x X`.
pub fn check_equivariant(f: &MapData, ell: u32) -> Result<CheckReport, VerifyError> {
    let description = format!("equivariant formula for `{}` (ell={ell})", f.name());
    let lhs = internal_op(&f.umkehr_one()?, ell)?;

    let rp = rp_ell_space(ell);
    let pf = product_with_space(&rp, f, &format!("1x{}", f.name()))?;
    // gamma_l lifted from the left factor has w_1 = mu (x) 1
    let mu = pf.source().ring().generator_element(0)?;
    let twist = twist_top_class(&mu, pf.normal())?;
    let rhs = pf.umkehr(&twist)?;

    if lhs != rhs {
        return Ok(CheckReport {
            description,
            cases: 1,
            witness: Some(Witness {
                location: format!("ell={ell}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        });
    }
    Ok(CheckReport { description, cases: 1, witness: None })
}

fn execute(catalog: &Catalog, task: &VerificationTask) -> Result<CheckReport, VerifyError> {
    let find_map = |name: &str| {
        catalog
            .map(name)
            .ok_or_else(|| VerifyError::Topology(TopologyError::Unresolved(name.to_string())))
    };
    let find_space = |name: &str| {
        catalog
            .space(name)
            .ok_or_else(|| VerifyError::Topology(TopologyError::Unresolved(name.to_string())))
    };
    match &task.kind {
        TaskKind::Thom { map } => check_thom(find_map(map)?),
        TaskKind::Equivariant { map, ell } => check_equivariant(find_map(map)?, *ell),
        TaskKind::Whitney { map } => check_whitney_mod2(find_map(map)?),
        TaskKind::InternalOp { space, ell, upto } => {
            check_internal_op(find_space(space)?, *ell, *upto)
        }
        TaskKind::AxiomSweep { space, upto } => Ok(check_axioms(find_space(space)?.ring(), *upto)),
        TaskKind::AdemSweep { space, a, b, upto } => {
            Ok(check_adem(find_space(space)?.ring(), *a, *b, *upto)?)
        }
        TaskKind::Cover { map, sheets } => {
            let m = find_map(map)?;
            match m.sheets() {
                Some(n) if n == *sheets => Ok(double_cover_pushpull(m)?),
                Some(n) => Err(VerifyError::Config(format!(
                    "map `{map}` is marked as a {n}-sheeted cover, task says {sheets}"
                ))),
                None => Err(VerifyError::Topology(TopologyError::NotACover(map.clone()))),
            }
        }
    }
}

/// Runs every task, never aborting: per-task errors become error verdicts
/// with a diagnostic. The report is ordered by task id, so identical
/// inputs produce identical reports.
pub fn run_suite(catalog: &Catalog, tasks: &[VerificationTask]) -> Vec<Verdict> {
    let mut verdicts: Vec<Verdict> = tasks
        .iter()
        .map(|task| match execute(catalog, task) {
            Ok(report) => Verdict::from_report(task, report),
            Err(err) => Verdict::error(task, err),
        })
        .collect();
    verdicts.sort_by(|a, b| a.task.id.cmp(&b.task.id));
    verdicts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charclass::VirtualBundle;
    use crate::f2poly::{Generator, RingHom, RingPresentation, RingSpec};
    use crate::topology::{identity_map, UmkehrData};

    fn rp_ring(n: u32) -> Arc<RingPresentation> {
        if n == 0 {
            RingSpec::new(Vec::new(), None).build().unwrap()
        } else {
            RingSpec::new(vec![Generator::new("x", 1, Some(n + 1))], None)
                .build()
                .unwrap()
        }
    }

    fn rp(n: u32) -> Arc<Space> {
        Space::new(&format!("RP{n}"), rp_ring(n))
    }

    fn inclusion(m: u32, n: u32) -> MapData {
        let src = rp(m);
        let tgt = rp(n);
        let x_img = if m == 0 {
            GradedElement::zero(src.ring())
        } else {
            src.ring().parse_element("x").unwrap()
        };
        let pullback = RingHom::new(tgt.ring().clone(), src.ring().clone(), vec![x_img]).unwrap();
        let f1 = tgt.ring().parse_element(&format!("x^{}", n - m)).unwrap();
        let w = if m == 0 {
            GradedElement::one(src.ring())
        } else {
            src.ring().parse_element("1 + x").unwrap().pow(n - m)
        };
        let nu = VirtualBundle::new_genuine(src.ring(), n - m, w).unwrap();
        MapData::new(
            &format!("i{m}_{n}"),
            src,
            tgt,
            n - m,
            pullback,
            UmkehrData::FundamentalClass(f1),
            nu,
            None,
        )
        .unwrap()
    }

    #[test]
    fn thom_formula_rp1_in_rp3_by_hand() {
        // k = 2, f_*(1) = x^2, w(nu) = (1+x)^2 = 1 over RP^1
        let f = inclusion(1, 3);
        let rows = thom_rows(&f).unwrap();
        let tgt = f.target().ring().clone();
        // i = 0: both sides x^2
        assert_eq!(rows[0].1, tgt.parse_element("x^2").unwrap());
        assert_eq!(rows[0].2, tgt.parse_element("x^2").unwrap());
        // i = 1: Sq^1 x^2 = 0 and w_1 = 0
        assert!(rows[1].1.is_zero());
        assert!(rows[1].2.is_zero());
        // i = 2: Sq^2 x^2 = x^4 = 0 in RP^3, w_2 = x^2 = 0 in RP^1
        assert!(rows[2].1.is_zero());
        assert!(rows[2].2.is_zero());
        assert!(check_thom(&f).unwrap().passed());
    }

    #[test]
    fn thom_formula_identity_and_hyperplane() {
        let id = identity_map(&rp(4), "id_RP4").unwrap();
        assert!(check_thom(&id).unwrap().passed());
        // RP^2 in RP^3: i = 1 gives Sq^1 x = x^2 = f_*(x)
        let f = inclusion(2, 3);
        let rows = thom_rows(&f).unwrap();
        let tgt = f.target().ring().clone();
        assert_eq!(rows[1].1, tgt.parse_element("x^2").unwrap());
        assert_eq!(rows[1].2, tgt.parse_element("x^2").unwrap());
        assert!(check_thom(&f).unwrap().passed());
    }

    #[test]
    fn whitney_cross_check_equals_top_thom_clause() {
        for (m, n) in [(1u32, 3u32), (2, 3), (3, 4), (0, 2), (2, 5)] {
            let f = inclusion(m, n);
            let whitney = check_whitney_mod2(&f).unwrap();
            assert!(whitney.passed(), "RP{m} in RP{n}: {:?}", whitney.witness);
            // the i = k row of the Thom table says the same thing
            let rows = thom_rows(&f).unwrap();
            let k = f.codim() as usize;
            let f1 = f.umkehr_one().unwrap();
            assert_eq!(rows[k].1, f1.mul(&f1).unwrap());
            assert_eq!(rows[k].2, f.umkehr(&f.normal().euler().unwrap()).unwrap());
        }
    }

    #[test]
    fn internal_op_expands_the_kunneth_formula() {
        // alpha = x in RP^2: P_l(x) = mu (x) x + 1 (x) x^2
        let space = rp(2);
        let x = space.ring().parse_element("x").unwrap();
        let p = internal_op(&x, 4).unwrap();
        assert_eq!(p.to_string(), "mu^1*x^1 + x^2");
        // alpha = 1: P_l(1) = 1 (x) 1
        let one = GradedElement::one(space.ring());
        assert_eq!(internal_op(&one, 4).unwrap().to_string(), "1");
        // non-homogeneous inputs are rejected
        let mixed = space.ring().parse_element("1 + x").unwrap();
        assert!(matches!(
            internal_op(&mixed, 4),
            Err(VerifyError::Steenrod(SteenrodError::RequiresHomogeneous))
        ));
    }

    #[test]
    fn internal_op_restriction_contract() {
        for n in [1u32, 2, 3, 5] {
            let report = check_internal_op(&rp(n), 4, n).unwrap();
            assert!(report.passed(), "RP{n}: {:?}", report.witness);
        }
    }

    #[test]
    fn equivariant_formula_hand_fixtures() {
        // RP^2 in RP^3, k = 1, l = 4:
        // lhs = mu (x) x + 1 (x) x^2, rhs = (1 x f)_*(mu (x) 1 + 1 (x) x)
        let f = inclusion(2, 3);
        let lhs = internal_op(&f.umkehr_one().unwrap(), 4).unwrap();
        assert_eq!(lhs.to_string(), "mu^1*x^1 + x^2");
        let report = check_equivariant(&f, 4).unwrap();
        assert!(report.passed(), "{:?}", report.witness);

        // RP^1 in RP^3, k = 2, l = 4: both sides mu^2 (x) x^2
        let f = inclusion(1, 3);
        let lhs = internal_op(&f.umkehr_one().unwrap(), 4).unwrap();
        assert_eq!(lhs.to_string(), "mu^2*x^2");
        let report = check_equivariant(&f, 4).unwrap();
        assert!(report.passed(), "{:?}", report.witness);

        // identity map: both sides 1 (x) 1
        let id = identity_map(&rp(3), "id_RP3").unwrap();
        let report = check_equivariant(&id, 5).unwrap();
        assert!(report.passed(), "{:?}", report.witness);
    }

    #[test]
    fn equivariant_consistency_triangle() {
        // (1 x f)_* w_k(gamma_l (x) nu_f) decomposes termwise as
        // sum_i mu^(k-i) (x) f_* w_i(nu_f)
        for (m, n, ell) in [(1u32, 3u32, 4u32), (2, 4, 3), (2, 5, 6)] {
            let f = inclusion(m, n);
            let rp_l = rp_ell_space(ell);
            let pf = product_with_space(&rp_l, &f, "1xf").unwrap();
            let mu_src = pf.source().ring().generator_element(0).unwrap();
            let rhs = pf.umkehr(&twist_top_class(&mu_src, pf.normal()).unwrap()).unwrap();

            let kt = tensor(rp_l.ring(), f.target().ring()).unwrap();
            let mu = rp_l.ring().generator_element(0).unwrap();
            let mut sum = GradedElement::zero(kt.ring());
            let k = f.codim();
            for i in 0..=k {
                let pushed = f.umkehr(&f.normal().sw(i)).unwrap();
                sum = sum.add(&kt.cross(&mu.pow(k - i), &pushed).unwrap()).unwrap();
            }
            assert_eq!(rhs, sum, "RP{m} in RP{n}, ell={ell}");
        }
    }

    #[test]
    fn run_suite_reports_by_id_and_never_aborts() {
        let mut catalog = Catalog::new();
        let f = inclusion(2, 3);
        catalog.add_space(f.source().clone()).unwrap();
        catalog.add_space(f.target().clone()).unwrap();
        catalog.add_map(f).unwrap();

        let tasks = [
            VerificationTask {
                id: "b_thom".into(),
                kind: TaskKind::Thom { map: "i2_3".into() },
            },
            VerificationTask {
                id: "a_missing".into(),
                kind: TaskKind::Thom { map: "nope".into() },
            },
            VerificationTask {
                id: "c_axioms".into(),
                kind: TaskKind::AxiomSweep { space: "RP3".into(), upto: 3 },
            },
        ];
        let verdicts = run_suite(&catalog, &tasks);
        assert_eq!(verdicts.len(), 3);
        // ordered by id
        assert_eq!(verdicts[0].task.id, "a_missing");
        assert_eq!(verdicts[0].status, VerdictStatus::Error);
        assert!(verdicts[0].diagnostic.as_deref().unwrap().contains("nope"));
        assert_eq!(verdicts[1].status, VerdictStatus::Pass);
        assert_eq!(verdicts[2].status, VerdictStatus::Pass);
        // empty suite gives an empty report
        assert!(run_suite(&catalog, &[]).is_empty());
    }
}
