//! The catalog of orbifolds F1a to F4h with their isolated arcs.
//!
//! Most entries are families in one or two parameters: cone orders `p`, `q`
//! or corner reflectors labelled `2p`, `2q`. Each family is stored as a
//! builder together with representative parameter values; matching binds
//! the parameters from the cone and corner labels of the input.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use orbifold_core::{Orbifold2, Symmetry, WeightedChi};
use serde::Serialize;

use crate::arc::{ArcClass, Marked, Separation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Param {
    /// A cone order, at least 2.
    Cone,
    /// Half a corner label, at least 1.
    HalfCorner,
}

type Build = fn(&[u32]) -> (Orbifold2, Option<ArcClass>);

struct Family {
    id: &'static str,
    family: &'static str,
    names: &'static [&'static str],
    params: &'static [Param],
    example: &'static [u32],
    build: Build,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub figure_id: String,
    /// Human description of the parameter family.
    pub family: String,
    /// Bound parameter values, by name.
    pub params: BTreeMap<String, u32>,
    pub orbifold: Orbifold2,
    pub euler_char: WeightedChi,
    pub isolated_arc: Option<ArcClass>,
    #[serde(rename = "requires_nonVPC_ambient")]
    pub requires_non_vpc_ambient: bool,
    pub dim3_legal: bool,
    pub ns_omission: bool,
}

fn disk(cones: &[u32], circles: &[String]) -> Orbifold2 {
    let refs: Vec<&str> = circles.iter().map(String::as_str).collect();
    Orbifold2::planar_str(cones, &refs)
}

fn s(x: &str) -> String {
    x.to_string()
}

fn chord(o: &Orbifold2, e0: (usize, usize), e1: (usize, usize), fwd: &[Marked]) -> Option<ArcClass> {
    Some(ArcClass::chord(o, e0, e1, fwd, false))
}

fn with_chord(
    o: Orbifold2,
    e0: (usize, usize),
    e1: (usize, usize),
    fwd: &[Marked],
) -> (Orbifold2, Option<ArcClass>) {
    let a = chord(&o, e0, e1, fwd);
    (o, a)
}

fn with_twisted(o: Orbifold2, e0: (usize, usize), m: (usize, usize)) -> (Orbifold2, Option<ArcClass>) {
    let a = if e0.0 == m.0 { ArcClass::twisted_chord(&o, e0, m, &[]) } else { ArcClass::twisted_spanning(e0, m) };
    (o, Some(a))
}

fn families() -> Vec<Family> {
    use Marked::{Circle, Cone};
    use Param::{Cone as P, HalfCorner as H};
    vec![
        // F1: χ = 0
        Family { id: "F1a", family: "annulus, inner circle half ∂₁", names: &[], params: &[], example: &[], build: |_| {
            let o = disk(&[], &[s("D0"), s("D0 D1")]);
            (o, Some(ArcClass::spanning((0, 0), (1, 0))))
        }},
        Family { id: "F1b", family: "disk, two mirrors, one ∂₁ interval", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[], &[s("M D1 D0 M D0")]), (0, 4), (0, 2), &[])
        }},
        Family { id: "F1c", family: "disk, two mirrors, two ∂₁ intervals", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[], &[s("M D1 D0 D1 M D0")]), (0, 5), (0, 2), &[])
        }},
        Family { id: "F1d", family: "annulus", names: &[], params: &[], example: &[], build: |_| {
            (disk(&[], &[s("D0"), s("D0")]), Some(ArcClass::spanning((0, 0), (1, 0))))
        }},
        Family { id: "F1e", family: "D²(2,2)", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[2, 2], &[s("D0")]), (0, 0), (0, 0), &[Cone(0)])
        }},
        Family { id: "F1f", family: "Möbius band", names: &[], params: &[], example: &[], build: |_| {
            let o = Orbifold2 { orientable: false, genus: 1, ..disk(&[], &[s("D0")]) };
            let a = ArcClass { twisted: false, endpoints: vec![(0, 0), (0, 0)], fold: None, separation: Separation::Nonseparating };
            (o, Some(a))
        }},
        Family { id: "F1g", family: "square with two opposite mirrors", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[], &[s("M D0 M D0")]), (0, 1), (0, 3), &[])
        }},
        Family { id: "F1h", family: "annulus with a mirror circle", names: &[], params: &[], example: &[], build: |_| {
            with_twisted(disk(&[], &[s("D0"), s("M")]), (0, 0), (1, 0))
        }},
        Family { id: "F1i", family: "half disk with a cone point of order 2", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[2], &[s("D0 M")]), (0, 0), (0, 0), &[Cone(0)])
        }},
        Family { id: "F1j", family: "disk with two corners of order 2", names: &[], params: &[], example: &[], build: |_| {
            with_twisted(disk(&[], &[s("D0 M M@2 M@2")]), (0, 0), (0, 2))
        }},
        // F3: χ < 0, ∂₁ empty
        Family { id: "F3a", family: "D²(p,q), p,q ≥ 2 not both 2", names: &["p", "q"], params: &[P, P], example: &[2, 3], build: |v| {
            with_chord(disk(&[v[0], v[1]], &[s("D0")]), (0, 0), (0, 0), &[Cone(0)])
        }},
        Family { id: "F3b", family: "annulus with a cone point of order p ≥ 2", names: &["p"], params: &[P], example: &[2], build: |v| {
            (disk(&[v[0]], &[s("D0"), s("D0")]), Some(ArcClass::spanning((0, 0), (1, 0))))
        }},
        Family { id: "F3c", family: "half disk with a cone point of order p ≥ 3", names: &["p"], params: &[P], example: &[3], build: |v| {
            with_chord(disk(&[v[0]], &[s("M D0")]), (0, 1), (0, 1), &[Cone(0)])
        }},
        Family { id: "F3d", family: "annulus with a mirror arc on one circle", names: &[], params: &[], example: &[], build: |_| {
            (disk(&[], &[s("M D0"), s("D0")]), Some(ArcClass::spanning((1, 0), (0, 1))))
        }},
        Family { id: "F3e", family: "disk with corners 2p, 2q, p,q ≥ 1 not both 1", names: &["p", "q"], params: &[H, H], example: &[1, 2], build: |v| {
            with_twisted(disk(&[], &[format!("D0 M M@{} M@{}", 2 * v[0], 2 * v[1])]), (0, 0), (0, 2))
        }},
        Family { id: "F3f", family: "disk with two mirror arcs, one corner 2p", names: &["p"], params: &[H], example: &[1], build: |v| {
            with_chord(disk(&[], &[format!("D0 M D0 M M@{}", 2 * v[0])]), (0, 0), (0, 2), &[])
        }},
        // F4: χ < 0, ∂₁ nonempty
        Family { id: "F4a", family: "annulus with a cone point, inner circle ∂₁", names: &["p"], params: &[P], example: &[2], build: |v| {
            with_chord(disk(&[v[0]], &[s("D0"), s("D1")]), (0, 0), (0, 0), &[Cone(0)])
        }},
        Family { id: "F4b", family: "pants, one ∂₁ circle", names: &[], params: &[], example: &[], build: |_| {
            (disk(&[], &[s("D0"), s("D0"), s("D1")]), Some(ArcClass::spanning((0, 0), (1, 0))))
        }},
        Family { id: "F4c", family: "pants, two ∂₁ circles", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[], &[s("D0"), s("D1"), s("D1")]), (0, 0), (0, 0), &[Circle(1)])
        }},
        Family { id: "F4d", family: "annulus with a mirror arc, inner circle ∂₁", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[], &[s("M D0"), s("D1")]), (0, 1), (0, 1), &[Circle(1)])
        }},
        Family { id: "F4e", family: "annulus, mirror arc beside ∂₁", names: &[], params: &[], example: &[], build: |_| {
            with_twisted(disk(&[], &[s("M D1"), s("D0")]), (1, 0), (0, 0))
        }},
        Family { id: "F4f", family: "disk with a corner 2p and a ∂₁ interval", names: &["p"], params: &[H], example: &[1], build: |v| {
            with_twisted(disk(&[], &[format!("D0 M M@{} D1 M", 2 * v[0])]), (0, 0), (0, 2))
        }},
        Family { id: "F4g", family: "disk with three mirror arcs, one ∂₁ interval", names: &[], params: &[], example: &[], build: |_| {
            with_chord(disk(&[], &[s("D0 M D0 M D1 M")]), (0, 0), (0, 2), &[])
        }},
        Family { id: "F4h", family: "disk with three mirror arcs, two ∂₁ intervals", names: &[], params: &[], example: &[], build: |_| {
            with_twisted(disk(&[], &[s("D0 M D1 M D1 M")]), (0, 0), (0, 3))
        }},
        // F2: the eight orbifolds with χ < 0 and no essential closed curve
        Family { id: "F2a", family: "D²(p,q), p,q ≥ 2 not both 2", names: &["p", "q"], params: &[P, P], example: &[2, 3], build: |v| {
            (disk(&[v[0], v[1]], &[s("D0")]), None)
        }},
        Family { id: "F2b", family: "annulus with a cone point of order p ≥ 2", names: &["p"], params: &[P], example: &[2], build: |v| {
            (disk(&[v[0]], &[s("D0"), s("D0")]), None)
        }},
        Family { id: "F2c", family: "pair of pants", names: &[], params: &[], example: &[], build: |_| {
            (disk(&[], &[s("D0"), s("D0"), s("D0")]), None)
        }},
        Family { id: "F2d", family: "half disk with a cone point of order p ≥ 3", names: &["p"], params: &[P], example: &[3], build: |v| {
            (disk(&[v[0]], &[s("M D0")]), None)
        }},
        Family { id: "F2e", family: "annulus with a mirror arc on one circle", names: &[], params: &[], example: &[], build: |_| {
            (disk(&[], &[s("M D0"), s("D0")]), None)
        }},
        Family { id: "F2f", family: "disk with corners 2p, 2q, p,q ≥ 1 not both 1", names: &["p", "q"], params: &[H, H], example: &[1, 2], build: |v| {
            (disk(&[], &[format!("D0 M M@{} M@{}", 2 * v[0], 2 * v[1])]), None)
        }},
        Family { id: "F2g", family: "disk with two mirror arcs, one corner 2p", names: &["p"], params: &[H], example: &[1], build: |v| {
            (disk(&[], &[format!("D0 M D0 M M@{}", 2 * v[0])]), None)
        }},
        Family { id: "F2h", family: "hexagon with three mirror sides", names: &[], params: &[], example: &[], build: |_| {
            (disk(&[], &[s("M D0 M D0 M D0")]), None)
        }},
    ]
}

fn figure(id: &str) -> char {
    id.chars().nth(1).unwrap_or('?')
}

/// χ has the sign its figure requires and every parameter is in range.
fn legal(f: &Family, values: &[u32], o: &Orbifold2) -> bool {
    let in_range = f.params.iter().zip(values).all(|(p, &v)| match p {
        Param::Cone => v >= 2,
        Param::HalfCorner => v >= 1,
    });
    let Ok(chi) = o.euler_char() else { return false };
    in_range && if figure(f.id) == '1' { chi.is_zero() } else { chi.is_negative() }
}

fn instantiate(f: &Family, values: &[u32]) -> CatalogEntry {
    let (orbifold, isolated_arc) = (f.build)(values);
    let euler_char = orbifold.euler_char().expect("catalog orbifolds validate");
    let requires_non_vpc_ambient = euler_char.is_zero() && !orbifold.has_kind(orbifold_core::SegKind::D1);
    let dim3_legal = orbifold.is_mirror_free() && !requires_non_vpc_ambient;
    CatalogEntry {
        figure_id: f.id.to_string(),
        family: f.family.to_string(),
        params: f.names.iter().map(|n| n.to_string()).zip(values.iter().copied()).collect(),
        orbifold,
        euler_char,
        isolated_arc,
        requires_non_vpc_ambient,
        dim3_legal,
        ns_omission: f.id == "F4b",
    }
}

fn table() -> &'static Vec<CatalogEntry> {
    static TABLE: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    TABLE.get_or_init(|| families().iter().map(|f| instantiate(f, f.example)).collect())
}

fn entries_of(fig: char) -> Vec<CatalogEntry> {
    table().iter().filter(|e| figure(&e.figure_id) == fig).cloned().collect()
}

/// Every entry with representative parameters, in figure order.
pub fn catalog_all() -> Vec<CatalogEntry> {
    let mut v = table().clone();
    v.sort_by(|a, b| a.figure_id.cmp(&b.figure_id));
    v
}

/// The ten F1 configurations.
pub fn catalog_chi_zero() -> Vec<CatalogEntry> {
    entries_of('1')
}

/// The eight F2 orbifolds.
pub fn catalog_chi_neg_orbifolds() -> Vec<Orbifold2> {
    entries_of('2').into_iter().map(|e| e.orbifold).collect()
}

/// The F3 and F4 configurations.
pub fn catalog_chi_neg_configs() -> Vec<CatalogEntry> {
    let mut v = entries_of('3');
    v.extend(entries_of('4'));
    v
}

/// The configurations that can occur as a base when the ambient dimension is 3.
pub fn catalog_dim3() -> Vec<CatalogEntry> {
    catalog_all().into_iter().filter(|e| e.dim3_legal && e.isolated_arc.is_some()).collect()
}

/// Looks up an entry by figure id, with representative parameters.
pub fn catalog_entry(id: &str) -> Option<CatalogEntry> {
    table().iter().find(|e| e.figure_id == id).cloned()
}

/// Instantiates a figure family at the given parameters.
pub fn catalog_instance(id: &str, values: &[u32]) -> Option<CatalogEntry> {
    let f = families().into_iter().find(|f| f.id == id)?;
    if values.len() != f.params.len() {
        return None;
    }
    let (o, _) = (f.build)(values);
    if o.validate().is_err() || !legal(&f, values, &o) {
        return None;
    }
    Some(instantiate(&f, values))
}

fn tuples(pool: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out.into_iter().flat_map(|t| pool.iter().map(move |&x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

/// The entry matching `o` together with the identification of the entry's
/// orbifold with `o`.
pub fn catalog_match_with_map(o: &Orbifold2) -> Option<(CatalogEntry, Symmetry)> {
    let mut pool: Vec<u32> = o.cone_points.clone();
    for c in &o.circles {
        for seg in &c.segments {
            if let Some(m) = seg.corner {
                pool.push(m);
                if m % 2 == 0 {
                    pool.push(m / 2);
                }
            }
        }
    }
    pool.sort_unstable();
    pool.dedup();
    for f in families() {
        for values in tuples(&pool, f.params.len()) {
            let (inst, _) = (f.build)(&values);
            if inst.validate().is_err() || !legal(&f, &values, &inst) {
                continue;
            }
            if let Some(sym) = inst.isomorphisms_to(o).into_iter().next() {
                return Some((instantiate(&f, &values), sym));
            }
        }
    }
    None
}

/// The entry whose orbifold is `o` up to relabelling and reflection.
pub fn catalog_match(o: &Orbifold2) -> Option<CatalogEntry> {
    catalog_match_with_map(o).map(|(e, sym)| {
        let isolated_arc = e.isolated_arc.as_ref().map(|a| a.mapped(&sym));
        CatalogEntry { orbifold: o.clone(), isolated_arc, ..e }
    })
}

pub const FOURTEEN_NOTE: &str = "There are fourteen orbifolds with χ < 0 that carry an isolated essential arc: the six F3 \
configurations and the eight F4 configurations, all encoded here. A count of 13 would drop one F4 configuration.";

#[derive(Serialize)]
struct Export {
    entries: BTreeMap<String, CatalogEntry>,
    notes: Vec<&'static str>,
}

/// The whole catalog as a JSON document keyed by figure id.
pub fn catalog_export() -> String {
    let entries = catalog_all().into_iter().map(|e| (e.figure_id.clone(), e)).collect();
    let doc = Export { entries, notes: vec![FOURTEEN_NOTE] };
    serde_json::to_string_pretty(&doc).expect("catalog serializes") + "\n"
}
