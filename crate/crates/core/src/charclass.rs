//! Virtual bundles presented by rank and total Stiefel-Whitney class.
//!
//! A bundle here is pure formal data: a base ring, an integer rank, and a
//! total class `w = 1 + w_1 + w_2 + ...` in the base. Whitney sum
//! multiplies total classes and adds ranks; the mod-2 Euler class is the
//! top class `w_rank`.
//!
//! The one genuinely computational operation is the top class of a twist
//! `lambda (x) xi` by a line bundle with `w_1(lambda) = mu`. It is
//! implemented twice: the closed form `sum_i mu^(k-i) w_i(xi)` and a
//! brute-force splitting-principle oracle that expands
//! `prod_j (1 + mu + t_j)` over formal roots `t_j` and re-expresses the
//! degree-k part in elementary symmetric polynomials. The two routes are
//! cross-tested on every catalog bundle.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use core::fmt;

use crate::f2poly::{
    rings_compatible, F2Error, Generator, GradedElement, Kunneth, RingHom, RingPresentation,
    RingSpec,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharClassError {
    /// Two bundles in one operation live over different bases.
    BaseMismatch,
    /// The degree-0 part of a total class must be exactly 1.
    NotUnital,
    /// A genuine rank-k bundle may not carry classes above degree k.
    ClassAboveRank { rank: i64, found: u32 },
    /// Twisting requires the line class to be homogeneous of degree 1.
    TwistDegree,
    /// The operation needs a non-negative rank.
    NegativeRank(i64),
    Algebra(F2Error),
}

impl fmt::Display for CharClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharClassError::BaseMismatch => write!(f, "bundles live over different bases"),
            CharClassError::NotUnital => write!(f, "total class has degree-0 part != 1"),
            CharClassError::ClassAboveRank { rank, found } => {
                write!(f, "rank-{rank} bundle carries a class in degree {found}")
            }
            CharClassError::TwistDegree => {
                write!(f, "twisting class must be homogeneous of degree 1 (or zero)")
            }
            CharClassError::NegativeRank(r) => write!(f, "operation needs rank >= 0, got {r}"),
            CharClassError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CharClassError {}

impl From<F2Error> for CharClassError {
    fn from(e: F2Error) -> Self {
        CharClassError::Algebra(e)
    }
}

/// A bundle known through its rank and total Stiefel-Whitney class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualBundle {
    base: Arc<RingPresentation>,
    rank: i64,
    total_sw: GradedElement,
}

impl VirtualBundle {
    /// A formal virtual bundle: any rank, any total class with unit
    /// degree-0 part.
    pub fn new(
        base: &Arc<RingPresentation>,
        rank: i64,
        total_sw: GradedElement,
    ) -> Result<Self, CharClassError> {
        if !rings_compatible(total_sw.ring(), base) {
            return Err(CharClassError::BaseMismatch);
        }
        if total_sw.degree_part(0) != GradedElement::one(base) {
            return Err(CharClassError::NotUnital);
        }
        Ok(VirtualBundle { base: base.clone(), rank, total_sw })
    }

    /// A genuine bundle: rank >= 0 and no classes above the rank.
    pub fn new_genuine(
        base: &Arc<RingPresentation>,
        rank: u32,
        total_sw: GradedElement,
    ) -> Result<Self, CharClassError> {
        let bundle = Self::new(base, i64::from(rank), total_sw)?;
        if let Some(top) = bundle.total_sw.top_degree() {
            if top > rank {
                return Err(CharClassError::ClassAboveRank { rank: i64::from(rank), found: top });
            }
        }
        Ok(bundle)
    }

    /// The trivial bundle of a given rank.
    pub fn trivial(base: &Arc<RingPresentation>, rank: u32) -> Self {
        VirtualBundle {
            base: base.clone(),
            rank: i64::from(rank),
            total_sw: GradedElement::one(base),
        }
    }

    pub fn base(&self) -> &Arc<RingPresentation> {
        &self.base
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total_sw(&self) -> &GradedElement {
        &self.total_sw
    }

    /// `w_i`: the degree-i part of the total class.
    pub fn sw(&self, i: u32) -> GradedElement {
        self.total_sw.degree_part(i)
    }

    /// Whitney sum: ranks add, total classes multiply.
    pub fn whitney_sum(&self, other: &VirtualBundle) -> Result<VirtualBundle, CharClassError> {
        if !rings_compatible(&self.base, &other.base) {
            return Err(CharClassError::BaseMismatch);
        }
        Ok(VirtualBundle {
            base: self.base.clone(),
            rank: self.rank + other.rank,
            total_sw: self.total_sw.mul(&other.total_sw)?,
        })
    }

    /// The mod-2 Euler class: the top Stiefel-Whitney class `w_rank`.
    pub fn euler(&self) -> Result<GradedElement, CharClassError> {
        let rank =
            u32::try_from(self.rank).map_err(|_| CharClassError::NegativeRank(self.rank))?;
        Ok(self.sw(rank))
    }

    /// Base change along a ring map (the bundle `h^* xi`).
    pub fn pullback(&self, hom: &RingHom) -> Result<VirtualBundle, CharClassError> {
        if !rings_compatible(hom.domain(), &self.base) {
            return Err(CharClassError::BaseMismatch);
        }
        Ok(VirtualBundle {
            base: hom.codomain().clone(),
            rank: self.rank,
            total_sw: hom.apply(&self.total_sw)?,
        })
    }

    /// Lift through a Kunneth square to the product ring (the bundle
    /// `1 (x) xi` pulled back from the right factor).
    pub fn lift_right(&self, k: &Kunneth) -> Result<VirtualBundle, CharClassError> {
        if !rings_compatible(k.right(), &self.base) {
            return Err(CharClassError::BaseMismatch);
        }
        Ok(VirtualBundle {
            base: k.ring().clone(),
            rank: self.rank,
            total_sw: k.embed_right(&self.total_sw)?,
        })
    }
}

fn check_twist_class(mu: &GradedElement) -> Result<(), CharClassError> {
    if mu.is_zero() || mu.degree() == Some(1) {
        Ok(())
    } else {
        Err(CharClassError::TwistDegree)
    }
}

/// Top Stiefel-Whitney class of `lambda (x) xi`, where `lambda` is the
/// line bundle with `w_1 = mu`: the closed form
/// `w_k(lambda (x) xi) = sum_{i=0}^{k} mu^(k-i) w_i(xi)`.
pub fn twist_top_class(
    mu: &GradedElement,
    xi: &VirtualBundle,
) -> Result<GradedElement, CharClassError> {
    check_twist_class(mu)?;
    if !rings_compatible(mu.ring(), xi.base()) {
        return Err(CharClassError::BaseMismatch);
    }
    let k = u32::try_from(xi.rank()).map_err(|_| CharClassError::NegativeRank(xi.rank()))?;
    let mut acc = GradedElement::zero(xi.base());
    for i in 0..=k {
        let term = mu.pow(k - i).mul(&xi.sw(i))?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Splitting-principle oracle for [`twist_top_class`].
///
/// Works in the formal ring `GF(2)[u, t_1, ..., t_k]`: expands
/// `prod_j (1 + u + t_j)`, extracts the total-degree-k part, checks that
/// the part multiplying `u^(k-i)` is exactly the elementary symmetric
/// polynomial `e_i(t)`, and only then assembles the answer with
/// `e_i -> w_i`, `u -> mu` in the actual base ring.
pub fn twist_top_oracle(
    mu: &GradedElement,
    k: u32,
    w: &GradedElement,
) -> Result<GradedElement, CharClassError> {
    check_twist_class(mu)?;
    if !rings_compatible(mu.ring(), w.ring()) {
        return Err(CharClassError::BaseMismatch);
    }
    let base = mu.ring();

    // formal ring with u and one root per line-bundle summand
    let mut gens = vec![Generator::new("u", 1, Some(k + 2))];
    for j in 1..=k {
        gens.push(Generator::new(&format!("t{j}"), 1, Some(2)));
    }
    let formal = RingSpec::new(gens, None).build()?;
    let u = formal.generator_element(0)?;

    let mut product = GradedElement::one(&formal);
    for j in 1..=k as usize {
        let factor = GradedElement::one(&formal)
            .add(&u)?
            .add(&formal.generator_element(j)?)?;
        product = product.mul(&factor)?;
    }
    let top = product.degree_part(k);

    // group the terms of the degree-k part by u-exponent and check each
    // group is the full elementary symmetric polynomial in the roots
    let mut subset_counts = vec![0u64; k as usize + 1];
    for term in top.terms() {
        let exps = term.exponents();
        let u_exp = u32::from(exps[0]);
        let root_count = exps[1..].iter().filter(|&&e| e == 1).count() as u32;
        debug_assert!(exps[1..].iter().all(|&e| e <= 1), "roots appear squarefree");
        debug_assert_eq!(u_exp + root_count, k);
        subset_counts[root_count as usize] += 1;
    }
    for (i, &count) in subset_counts.iter().enumerate() {
        let expected = binomial(u64::from(k), i as u64);
        if count != expected {
            // structurally impossible; bail out rather than report nonsense
            return Err(CharClassError::Algebra(F2Error::InvalidPresentation(
                String::from("splitting-principle expansion lost terms"),
            )));
        }
    }

    // assemble sum_i u^(k-i) e_i with e_i -> w_i, u -> mu in the base
    let mut acc = GradedElement::zero(base);
    for i in 0..=k {
        let term = mu.pow(k - i).mul(&w.degree_part(i))?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(n: u32) -> Arc<RingPresentation> {
        RingSpec::new(vec![Generator::new("x", 1, Some(n + 1))], None)
            .build()
            .unwrap()
    }

    fn line_bundle_power(base: &Arc<RingPresentation>, copies: u32) -> VirtualBundle {
        // (copies) gamma, with w(gamma) = 1 + x
        let w1 = base.parse_element("1 + x").unwrap();
        let gamma = VirtualBundle::new_genuine(base, 1, w1).unwrap();
        let mut acc = VirtualBundle::trivial(base, 0);
        for _ in 0..copies {
            acc = acc.whitney_sum(&gamma).unwrap();
        }
        acc
    }

    #[test]
    fn whitney_sum_of_line_bundles() {
        // normal bundle of RP^m in RP^n: (n-m) copies of gamma
        let base = rp(2);
        let nu = line_bundle_power(&base, 2);
        assert_eq!(nu.rank(), 2);
        // (1+x)^2 = 1 + x^2 over GF(2)
        assert_eq!(*nu.total_sw(), base.parse_element("1 + x^2").unwrap());
        // unit: sum with the rank-0 trivial bundle changes nothing
        let same = nu.whitney_sum(&VirtualBundle::trivial(&base, 0)).unwrap();
        assert_eq!(same, nu);
    }

    #[test]
    fn sw_extracts_components() {
        let base = rp(4);
        let xi = line_bundle_power(&base, 3);
        assert_eq!(xi.sw(0), GradedElement::one(&base));
        // (1+x)^3 = 1 + x + x^2 + x^3
        assert_eq!(xi.sw(1), base.parse_element("x").unwrap());
        assert_eq!(xi.sw(2), base.parse_element("x^2").unwrap());
        // over RP^1 the square of the generator dies: w_2(nu(RP1 in RP3)) = 0
        let rp1 = rp(1);
        let nu = line_bundle_power(&rp1, 2);
        assert!(nu.sw(2).is_zero());
    }

    #[test]
    fn genuine_bundle_rejects_classes_above_rank() {
        let base = rp(4);
        let w = base.parse_element("1 + x^2").unwrap();
        assert!(VirtualBundle::new_genuine(&base, 1, w.clone()).is_err());
        // as a formal virtual bundle it is allowed
        assert!(VirtualBundle::new(&base, 1, w).is_ok());
        let not_unital = base.parse_element("x").unwrap();
        assert!(matches!(
            VirtualBundle::new(&base, 1, not_unital),
            Err(CharClassError::NotUnital)
        ));
    }

    #[test]
    fn euler_class_is_multiplicative() {
        let base = rp(8);
        let xi = line_bundle_power(&base, 2);
        let eta = line_bundle_power(&base, 3);
        let sum = xi.whitney_sum(&eta).unwrap();
        let product = xi.euler().unwrap().mul(&eta.euler().unwrap()).unwrap();
        assert_eq!(sum.euler().unwrap(), product);
        assert_eq!(product, base.parse_element("x^5").unwrap());
    }

    #[test]
    fn twist_rank_one_adds_first_classes() {
        // w_1(eta (x) xi) = w_1(eta) + w_1(xi) for line bundles
        let base = RingSpec::new(
            vec![Generator::new("m", 1, Some(5)), Generator::new("t", 1, Some(5))],
            None,
        )
        .build()
        .unwrap();
        let mu = base.parse_element("m").unwrap();
        let xi =
            VirtualBundle::new_genuine(&base, 1, base.parse_element("1 + t").unwrap()).unwrap();
        let got = twist_top_class(&mu, &xi).unwrap();
        assert_eq!(got, base.parse_element("m + t").unwrap());
        assert_eq!(twist_top_oracle(&mu, 1, xi.total_sw()).unwrap(), got);
    }

    #[test]
    fn twist_degenerate_cases() {
        let base = rp(6);
        let xi = line_bundle_power(&base, 3);
        // mu = 0: untwisted top class
        let zero = GradedElement::zero(&base);
        assert_eq!(twist_top_class(&zero, &xi).unwrap(), xi.sw(3));
        // trivial bundle of rank k: only i = 0 survives, giving mu^k
        let mu = base.parse_element("x").unwrap();
        let triv = VirtualBundle::trivial(&base, 3);
        assert_eq!(twist_top_class(&mu, &triv).unwrap(), base.parse_element("x^3").unwrap());
        assert_eq!(
            twist_top_oracle(&mu, 3, triv.total_sw()).unwrap(),
            base.parse_element("x^3").unwrap()
        );
        // degree errors
        let bad = base.parse_element("x^2").unwrap();
        assert!(matches!(twist_top_class(&bad, &xi), Err(CharClassError::TwistDegree)));
        let mixed = base.parse_element("1 + x").unwrap();
        assert!(matches!(twist_top_class(&mixed, &xi), Err(CharClassError::TwistDegree)));
    }

    #[test]
    fn twist_rank_two_expands_by_hand() {
        // degree-2 part of (1+mu+t1)(1+mu+t2) is mu^2 + mu e_1 + e_2
        let base = RingSpec::new(
            vec![
                Generator::new("m", 1, Some(9)),
                Generator::new("a", 1, Some(9)),
                Generator::new("b", 1, Some(9)),
            ],
            None,
        )
        .build()
        .unwrap();
        let mu = base.parse_element("m").unwrap();
        // w = (1+a)(1+b), so w_1 = a + b, w_2 = ab
        let w = base.parse_element("1 + a + b + a^1*b^1").unwrap();
        let xi = VirtualBundle::new_genuine(&base, 2, w.clone()).unwrap();
        let expect = base.parse_element("m^2 + m*a + m*b + a^1*b^1").unwrap();
        assert_eq!(twist_top_class(&mu, &xi).unwrap(), expect);
        assert_eq!(twist_top_oracle(&mu, 2, &w).unwrap(), expect);
    }

    #[test]
    fn twist_oracle_agrees_with_closed_form_up_to_rank_six() {
        let base = rp(8);
        let mus = [GradedElement::zero(&base), base.parse_element("x").unwrap()];
        for k in 0..=6u32 {
            let xi = line_bundle_power(&base, k);
            for mu in &mus {
                assert_eq!(
                    twist_top_class(mu, &xi).unwrap(),
                    twist_top_oracle(mu, k, xi.total_sw()).unwrap(),
                    "rank {k}"
                );
            }
        }
    }
}
