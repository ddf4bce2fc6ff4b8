//! The compiled-in catalog and its default verification suite.
//!
//! Spaces: `RP0`..`RP8`, the circle `S1`, and `RPinf`/`RPinf48`
//! (polynomial rings capped at degree 24 and 48; the wider cap keeps the
//! Lucas sweep `Sq^i(x^j)` non-degenerate through `i = j = 24`), plus the
//! Kunneth product spaces the product maps live on.
//!
//! Maps: all 36 inclusions `RP^m in RP^n` for `0 <= m < n <= 8` with
//! normal bundle `(n-m) gamma`, all 84 two-step compositions through an
//! intermediate `RP^k`, the identity maps, ten product maps `1 x f`, and
//! three covers of the circle (1-, 2- and 3-sheeted).
//!
//! Tasks: Thom and Whitney checks per map, the equivariant check per map
//! for `1 <= l <= 8`, the axiom sweep per space, every Adem relation with
//! `a < 2b <= 12` per space, the internal-operation contract, and the
//! cover rule.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::charclass::VirtualBundle;
use crate::f2poly::{Generator, GradedElement, RingHom, RingPresentation, RingSpec};
use crate::topology::{
    compose, identity_map, product_with_space, Catalog, MapData, Space, UmkehrData,
};
use crate::verify::{TaskKind, VerificationTask};

/// Largest projective space in the catalog.
pub const MAX_RP: u32 = 8;
/// Degree cap of the catalog's `RPinf`.
pub const DEGREE_CAP: u32 = 24;
/// Range of `l` swept by the equivariant tasks.
pub const ELL_RANGE: core::ops::RangeInclusive<u32> = 1..=8;
/// Degree bound of the axiom and Adem sweeps on finite spaces.
pub const SWEEP_DEGREE: u32 = 12;

/// The built-in catalog together with its default task list.
pub struct BuiltinSuite {
    pub catalog: Catalog,
    pub tasks: Vec<VerificationTask>,
}

fn rp_ring(n: u32) -> Arc<RingPresentation> {
    if n == 0 {
        RingSpec::new(Vec::new(), None).build().expect("point ring")
    } else {
        RingSpec::new(vec![Generator::new("x", 1, Some(n + 1))], None)
            .build()
            .expect("projective-space ring")
    }
}

fn rp_inf_ring(cap: u32) -> Arc<RingPresentation> {
    RingSpec::new(vec![Generator::new("x", 1, None)], Some(cap))
        .build()
        .expect("capped polynomial ring")
}

/// The inclusion `RP^m in RP^n`: pullback restricts the generator, the
/// represented class is `x^(n-m)`, and the normal bundle is `(n-m) gamma`.
fn inclusion(src: &Arc<Space>, tgt: &Arc<Space>, m: u32, n: u32) -> MapData {
    let x_img = if m == 0 {
        GradedElement::zero(src.ring())
    } else {
        src.ring().parse_element("x").expect("generator")
    };
    let pullback = RingHom::new(tgt.ring().clone(), src.ring().clone(), vec![x_img])
        .expect("restriction is a ring map");
    let f1 = tgt
        .ring()
        .parse_element(&format!("x^{}", n - m))
        .expect("fundamental class");
    let gamma_total = if m == 0 {
        GradedElement::one(src.ring())
    } else {
        src.ring().parse_element("1 + x").expect("line class")
    };
    let nu = VirtualBundle::new_genuine(src.ring(), n - m, gamma_total.pow(n - m))
        .expect("normal bundle (n-m) gamma");
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
    .expect("catalog inclusion")
}

/// An n-sheeted self-cover of the circle. Odd covers pull the generator
/// back to itself and push `1 -> 1`; even covers pull it to zero and push
/// `1 -> 0`. Both push `x -> x` (the point class counts one preimage).
fn circle_cover(s1: &Arc<Space>, name: &str, sheets: u32) -> MapData {
    let ring = s1.ring().clone();
    let x = ring.parse_element("x").expect("generator");
    let one = GradedElement::one(&ring);
    let odd = sheets % 2 == 1;
    let pullback = RingHom::new(
        ring.clone(),
        ring.clone(),
        vec![if odd { x.clone() } else { GradedElement::zero(&ring) }],
    )
    .expect("cover pullback");
    let rows = vec![
        (one.terms()[0].clone(), if odd { one.clone() } else { GradedElement::zero(&ring) }),
        (x.terms()[0].clone(), x.clone()),
    ];
    MapData::new(
        name,
        s1.clone(),
        s1.clone(),
        0,
        pullback,
        UmkehrData::Table(rows),
        VirtualBundle::trivial(&ring, 0),
        Some(sheets),
    )
    .expect("catalog cover")
}

fn add_map_with_bundle(catalog: &mut Catalog, map: MapData) {
    catalog
        .add_bundle(&format!("nu_{}", map.name()), map.normal().clone())
        .expect("unique bundle name");
    catalog.add_map(map).expect("unique map name");
}

/// Builds the catalog and the default task list.
pub fn builtin_suite() -> BuiltinSuite {
    let mut catalog = Catalog::new();

    let rp: Vec<Arc<Space>> = (0..=MAX_RP)
        .map(|n| Space::new(&format!("RP{n}"), rp_ring(n)))
        .collect();
    for s in &rp {
        catalog.add_space(s.clone()).expect("unique space");
    }
    let rp_inf = Space::new("RPinf", rp_inf_ring(DEGREE_CAP));
    let rp_inf48 = Space::new("RPinf48", rp_inf_ring(2 * DEGREE_CAP));
    let s1 = Space::new("S1", rp_ring(1));
    for s in [&rp_inf, &rp_inf48, &s1] {
        catalog.add_space(s.clone()).expect("unique space");
    }

    // the 36 inclusions
    for m in 0..MAX_RP {
        for n in m + 1..=MAX_RP {
            add_map_with_bundle(&mut catalog, inclusion(&rp[m as usize], &rp[n as usize], m, n));
        }
    }

    // all two-step compositions through an intermediate RP^k
    for m in 0..MAX_RP {
        for k in m + 1..MAX_RP {
            for n in k + 1..=MAX_RP {
                let g = catalog.map(&format!("i{m}_{k}")).expect("inclusion").clone();
                let f = catalog.map(&format!("i{k}_{n}")).expect("inclusion").clone();
                let c = compose(&f, &g, &format!("c{m}_{k}_{n}")).expect("catalog composition");
                add_map_with_bundle(&mut catalog, c);
            }
        }
    }

    // identity maps
    for (n, s) in rp.iter().enumerate() {
        let id = identity_map(s, &format!("id_RP{n}")).expect("identity map");
        add_map_with_bundle(&mut catalog, id);
    }

    // ten product maps 1 x f; the last one uses a product space as the
    // left factor, exercising nested Kunneth assembly
    let named_products: [(&str, u32, u32); 9] = [
        ("RP1", 1, 2),
        ("RP1", 1, 3),
        ("RP2", 1, 3),
        ("RP2", 2, 3),
        ("RP2", 2, 4),
        ("RP3", 1, 2),
        ("RP3", 2, 5),
        ("RP4", 3, 4),
        ("RP5", 2, 6),
    ];
    for (p_name, m, n) in named_products {
        let p = catalog.space(p_name).expect("left factor").clone();
        let f = catalog.map(&format!("i{m}_{n}")).expect("inclusion").clone();
        let pr = product_with_space(&p, &f, &format!("pr_{p_name}_i{m}_{n}"))
            .expect("catalog product map");
        catalog.ensure_space(pr.source()).expect("product space");
        catalog.ensure_space(pr.target()).expect("product space");
        add_map_with_bundle(&mut catalog, pr);
    }
    {
        let p = catalog.space("RP2xRP3").expect("product space").clone();
        let f = catalog.map("i1_2").expect("inclusion").clone();
        let pr =
            product_with_space(&p, &f, "pr_RP2xRP3_i1_2").expect("nested catalog product map");
        catalog.ensure_space(pr.source()).expect("product space");
        catalog.ensure_space(pr.target()).expect("product space");
        add_map_with_bundle(&mut catalog, pr);
    }

    // covers of the circle
    for sheets in 1..=3u32 {
        add_map_with_bundle(&mut catalog, circle_cover(&s1, &format!("cov{sheets}"), sheets));
    }

    let tasks = default_tasks(&catalog);
    BuiltinSuite { catalog, tasks }
}

/// The default task list over a catalog: one Thom and one Whitney task
/// per map, the equivariant sweep per map, per-space axiom and Adem
/// sweeps, the internal-operation contract, and the cover tasks.
fn default_tasks(catalog: &Catalog) -> Vec<VerificationTask> {
    let mut tasks = Vec::new();
    let mut push = |id: alloc::string::String, kind: TaskKind| {
        tasks.push(VerificationTask { id, kind });
    };

    for map in catalog.maps() {
        let name = map.name().to_string();
        push(format!("thom_{name}"), TaskKind::Thom { map: name.clone() });
        push(format!("whit_{name}"), TaskKind::Whitney { map: name.clone() });
        for ell in ELL_RANGE {
            push(
                format!("eq_{name}_l{ell}"),
                TaskKind::Equivariant { map: name.clone(), ell },
            );
        }
    }

    for space in catalog.spaces() {
        let name = space.name().to_string();
        let upto = if name.starts_with("RPinf") { DEGREE_CAP } else { SWEEP_DEGREE };
        push(format!("ax_{name}"), TaskKind::AxiomSweep { space: name.clone(), upto });
        for b in 1..=SWEEP_DEGREE / 2 {
            for a in 1..2 * b {
                push(
                    format!("adem_{name}_a{a}b{b}"),
                    TaskKind::AdemSweep { space: name.clone(), a, b, upto: SWEEP_DEGREE },
                );
            }
        }
    }

    for n in 1..=MAX_RP {
        let space = format!("RP{n}");
        push(
            format!("iop_{space}_l4"),
            TaskKind::InternalOp { space, ell: 4, upto: n },
        );
    }
    push(
        "iop_RP2xRP3_l4".to_string(),
        TaskKind::InternalOp { space: "RP2xRP3".to_string(), ell: 4, upto: 5 },
    );

    for sheets in 1..=3u32 {
        push(
            format!("cov_cov{sheets}"),
            TaskKind::Cover { map: format!("cov{sheets}"), sheets },
        );
    }

    tasks
}
