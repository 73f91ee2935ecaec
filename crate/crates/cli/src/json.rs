//! `rlat/1` JSON report shapes.
//!
//! Field order is declaration order and every list is built in canonical
//! order, so identical inputs serialize to identical bytes.

use rlat_core::census::SizeSummary;
use rlat_core::spectrum::{self, PrimeCollection};
use rlat_core::topology::{BasisTag, CompactnessReport, ConnectednessReport, SeparationReport};
use rlat_core::{Algebra, ElementSet, FilterLattice, HullKernelSpace, Spectrum, TopologyKind};
use serde::Serialize;

pub const SCHEMA: &str = "rlat/1";

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: &'static str,
    pub algebra: Option<AlgebraInfo>,
    pub payload: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, alg: Option<&Algebra>, payload: T) -> Self {
        Self {
            schema: SCHEMA,
            command,
            algebra: alg.map(AlgebraInfo::of),
            payload,
        }
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Serialize)]
pub struct AlgebraInfo {
    pub size: usize,
    pub elements: Vec<String>,
    pub bottom: String,
    pub top: String,
    pub mtl: bool,
}

impl AlgebraInfo {
    fn of(alg: &Algebra) -> Self {
        Self {
            size: alg.size(),
            elements: alg.names().to_vec(),
            bottom: alg.name(alg.bottom()).to_string(),
            top: alg.name(alg.top()).to_string(),
            mtl: alg.is_mtl(),
        }
    }
}

pub type NameSet = Vec<String>;

fn names(alg: &Algebra, s: ElementSet) -> NameSet {
    alg.set_names(s)
}

fn members(alg: &Algebra, pi: &PrimeCollection) -> Vec<NameSet> {
    pi.members().iter().map(|p| names(alg, p.elems())).collect()
}

#[derive(Serialize)]
pub struct FilterEntry {
    pub elements: NameSet,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
}

#[derive(Serialize)]
pub struct FiltersPayload {
    pub count: usize,
    pub filters: Vec<FilterEntry>,
}

pub fn filters(alg: &Algebra, lattice: &FilterLattice, spectrum: &Spectrum) -> FiltersPayload {
    FiltersPayload {
        count: lattice.len(),
        filters: lattice
            .iter()
            .map(|f| FilterEntry {
                elements: names(alg, f.elems()),
                proper: f.is_proper(alg),
                prime: spectrum.spec().position(f).is_some(),
                maximal: spectrum.max().position(f).is_some(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct DSetEntry {
    pub prime: NameSet,
    pub d_set: NameSet,
}

#[derive(Serialize)]
pub struct PerpEntry {
    pub element: String,
    pub perp: NameSet,
}

#[derive(Serialize)]
pub struct SpectrumPayload {
    pub spec: Vec<NameSet>,
    pub max: Vec<NameSet>,
    pub min: Vec<NameSet>,
    pub pm: bool,
    /// `D(P)` relative to the filter `{1}`.
    pub d_sets: Vec<DSetEntry>,
    pub perp: Vec<PerpEntry>,
}

pub fn spectrum_payload(alg: &Algebra, sp: &Spectrum) -> rlat_core::Result<SpectrumPayload> {
    let unit = rlat_core::Filter::unit(alg);
    let d_sets = sp
        .spec()
        .members()
        .iter()
        .map(|&p| {
            Ok(DSetEntry {
                prime: names(alg, p.elems()),
                d_set: names(alg, spectrum::d_set(alg, unit, p)?),
            })
        })
        .collect::<rlat_core::Result<_>>()?;
    Ok(SpectrumPayload {
        spec: members(alg, sp.spec()),
        max: members(alg, sp.max()),
        min: members(alg, sp.min()),
        pm: rlat_core::harness::is_pm(sp),
        d_sets,
        perp: (0..alg.size())
            .map(|x| PerpEntry {
                element: alg.name(x).to_string(),
                perp: names(alg, spectrum::perp(alg, ElementSet::singleton(x))),
            })
            .collect(),
    })
}

#[derive(Serialize)]
pub struct BasisEntry {
    /// `d` for members avoiding the element, `h` for members containing it.
    pub kind: &'static str,
    pub element: String,
    /// Point indices.
    pub points: Vec<usize>,
}

#[derive(Serialize)]
pub struct TopologyPayload {
    pub collection: String,
    pub topology: TopologyKind,
    /// Collection members; opens and basis sets refer to them by index.
    pub points: Vec<NameSet>,
    pub basis: Vec<BasisEntry>,
    pub opens: Vec<Vec<usize>>,
    pub separation: SeparationReport,
    pub compactness: CompactnessReport,
    pub connectedness: ConnectednessReport,
}

pub fn topology_payload(
    alg: &Algebra,
    label: String,
    space: &HullKernelSpace,
    kind: TopologyKind,
    separation: SeparationReport,
    compactness: CompactnessReport,
) -> TopologyPayload {
    let top = space.topology(kind);
    TopologyPayload {
        collection: label,
        topology: kind,
        points: members(alg, space.collection()),
        basis: top
            .basis()
            .iter()
            .map(|b| {
                let (kind, x) = match b.tag {
                    BasisTag::Avoiding(x) => ("d", x),
                    BasisTag::Containing(x) => ("h", x),
                };
                BasisEntry {
                    kind,
                    element: alg.name(x).to_string(),
                    points: b.set.to_vec(),
                }
            })
            .collect(),
        opens: top.opens().iter().map(|o| o.to_vec()).collect(),
        separation,
        compactness,
        connectedness: space.connectedness(kind),
    }
}

#[derive(Serialize)]
pub struct SearchPayload {
    pub sizes: Vec<SizeSummary>,
    /// Counts come from this tool's own enumeration.
    pub source: &'static str,
}
