//! Algebraic property tests: ring laws on random and exhaustive inputs,
//! idempotence of normalization, the Frobenius identity, and the
//! serialization round trip.

use proptest::prelude::*;
use std::sync::{Arc, OnceLock};

use umkehr_core::builtin::builtin_suite;
use umkehr_core::f2poly::{GradedElement, RingPresentation};

fn catalog_rings() -> &'static [(String, Arc<RingPresentation>)] {
    static RINGS: OnceLock<Vec<(String, Arc<RingPresentation>)>> = OnceLock::new();
    RINGS.get_or_init(|| {
        builtin_suite()
            .catalog
            .spaces()
            .iter()
            .map(|s| (s.name().to_string(), s.ring().clone()))
            .collect()
    })
}

/// Element from a bitmask over the basis.
fn element_from_bits(ring: &Arc<RingPresentation>, bits: [u64; 4]) -> GradedElement {
    let raw = ring
        .basis()
        .iter()
        .enumerate()
        .filter(|(i, _)| bits[i / 64] >> (i % 64) & 1 == 1)
        .map(|(_, t)| t.exponents().to_vec());
    ring.normalize(raw).expect("basis exponents are valid")
}

proptest! {
    #[test]
    fn ring_laws_on_random_triples(
        ring_idx in 0usize..30,
        a in any::<[u64; 4]>(),
        b in any::<[u64; 4]>(),
        c in any::<[u64; 4]>(),
    ) {
        let rings = catalog_rings();
        let (_, ring) = &rings[ring_idx % rings.len()];
        let (a, b, c) = (
            element_from_bits(ring, a),
            element_from_bits(ring, b),
            element_from_bits(ring, c),
        );
        // commutativity
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        // associativity
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        // distributivity
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        // units
        let one = GradedElement::one(ring);
        let zero = GradedElement::zero(ring);
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert_eq!(a.add(&zero).unwrap(), a.clone());
        prop_assert!(a.add(&a).unwrap().is_zero());
    }

    #[test]
    fn frobenius_identity(
        ring_idx in 0usize..30,
        a in any::<[u64; 4]>(),
        b in any::<[u64; 4]>(),
    ) {
        let rings = catalog_rings();
        let (_, ring) = &rings[ring_idx % rings.len()];
        let (a, b) = (element_from_bits(ring, a), element_from_bits(ring, b));
        let sum_sq = a.add(&b).unwrap().square();
        prop_assert_eq!(sum_sq, a.square().add(&b.square()).unwrap());
        // square agrees with mul
        prop_assert_eq!(a.square(), a.mul(&a).unwrap());
    }

    #[test]
    fn normalize_is_idempotent(
        ring_idx in 0usize..30,
        raw in prop::collection::vec(prop::collection::vec(0u16..12, 0..3), 0..8),
    ) {
        let rings = catalog_rings();
        let (_, ring) = &rings[ring_idx % rings.len()];
        let width = ring.width();
        let padded: Vec<Vec<u16>> = raw
            .iter()
            .map(|v| {
                let mut e = v.clone();
                e.resize(width, 0);
                e
            })
            .collect();
        let once = ring.normalize(padded).unwrap();
        let again = ring
            .normalize(once.terms().iter().map(|t| t.exponents().to_vec()))
            .unwrap();
        prop_assert_eq!(once, again);
    }

    #[test]
    fn parse_of_serialize_is_identity(
        ring_idx in 0usize..30,
        a in any::<[u64; 4]>(),
    ) {
        let rings = catalog_rings();
        let (_, ring) = &rings[ring_idx % rings.len()];
        let a = element_from_bits(ring, a);
        let text = a.to_string();
        prop_assert_eq!(ring.parse_element(&text).unwrap(), a);
    }
}

#[test]
fn ring_laws_exhaustive_on_basis_triples() {
    // every catalog ring has GF(2)-dimension <= 64, so the basis-triple
    // sweep is exhaustive for all of them
    for (name, ring) in catalog_rings() {
        let dim = ring.dimension();
        assert!(dim <= 64, "{name} has dimension {dim}");
        let elems: Vec<GradedElement> =
            ring.basis().iter().map(|t| ring.element_from_term(t)).collect();
        for a in &elems {
            for b in &elems {
                let ab = a.mul(b).unwrap();
                assert_eq!(ab, b.mul(a).unwrap(), "{name}: commutativity");
                for c in &elems {
                    assert_eq!(
                        ab.mul(c).unwrap(),
                        a.mul(&b.mul(c).unwrap()).unwrap(),
                        "{name}: associativity"
                    );
                }
            }
        }
    }
}

#[test]
fn tensor_dimension_is_multiplicative_on_catalog_rings() {
    let rings = catalog_rings();
    let small: Vec<_> = rings.iter().filter(|(_, r)| r.dimension() <= 12).collect();
    for (an, a) in &small {
        for (bn, b) in &small {
            let k = umkehr_core::f2poly::tensor(a, b).unwrap();
            assert_eq!(
                k.ring().dimension(),
                a.dimension() * b.dimension(),
                "{an} (x) {bn}"
            );
        }
    }
}
