//! Instance-wise verification of the theorem catalog.
//!
//! Every check runs over the prime collections Spec, Max, Min and `Min_F`
//! for each proper filter `F`, under both topologies where relevant. A
//! failing check is data: it is recorded with its first witnesses rather
//! than aborting the run.

use serde::Serialize;

use crate::algebra::{residual_from_prod, validate_algebra, Algebra, Tables};
use crate::error::{Error, Result};
use crate::filter::{self, generated_filter, Filter, FilterLattice};
use crate::sample::{self, DEFAULT_SEED};
use crate::set::{ElementSet, PointSet};
use crate::spectrum::{self, CollectionKind, PrimeCollection, Spectrum};
use crate::topology::{
    self, check_galois, is_continuous, min_space_identities, HullKernelSpace, IdentityReport,
    TopologyKind,
};

/// Spec is split into every nonempty subcollection up to this size.
const SUBCOLLECTION_LIMIT: usize = 8;
/// Brute-force retraction searches stop beyond this many candidate maps.
const RETRACTION_LIMIT: usize = 1 << 16;

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// Number of instances evaluated.
    pub instances: usize,
    /// First failing instance, if any.
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub algebra: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

type CheckFn = fn(&Ctx, &mut IdentityReport) -> Result<()>;

struct Check {
    id: &'static str,
    statement: &'static str,
    run: CheckFn,
}

macro_rules! catalog {
    ($($id:literal => $f:ident : $statement:literal,)*) => {
        const CHECKS: &[Check] = &[$(Check { id: $id, statement: $statement, run: $f },)*];
    };
}

catalog! {
    "algebra.adjointness" => algebra_adjointness:
        "x*y <= z iff x <= y->z",
    "algebra.residuum_roundtrip" => algebra_residuum_roundtrip:
        "the residuum is recovered from meet and product",
    "algebra.order" => algebra_order:
        "the meet order is a bounded lattice order and x <= y iff x->y = 1",
    "algebra.prod_distributes" => algebra_prod_distributes:
        "x*(y v z) = x*y v x*z and x v y*z >= (x v y)*(x v z)",
    "filters.generated_eq_prime_meet" => filters_generated_eq_prime_meet:
        "the filter generated by X is the intersection of the primes containing X",
    "filters.generated_eq_min_meet" => filters_generated_eq_min_meet:
        "the filter generated by X is the intersection of the X-minimal primes",
    "filters.adjoin_meet_join" => filters_adjoin_meet_join:
        "F(F,x) meet F(F,y) = F(F,x v y) and F(F,x) join F(F,y) = F(F,x*y)",
    "filters.adjoin_antitone" => filters_adjoin_antitone:
        "x <= y implies F(F,y) is contained in F(F,x)",
    "filters.finite_generation" => filters_finite_generation:
        "a set generating the whole carrier has a finite generating subset",
    "filters.lattice_closed" => filters_lattice_closed:
        "the filter lattice is closed under meet and join",
    "spectrum.prime_criterion" => spectrum_prime_criterion:
        "a proper filter is prime iff it is meet-irreducible in the filter lattice",
    "spectrum.max_in_spec" => spectrum_max_in_spec:
        "maximal filters are prime and every proper filter lies under one",
    "spectrum.minimal_prime_theorem" => spectrum_minimal_prime_theorem:
        "minimal primes over F are the complements of maximal join-closed sets avoiding F",
    "spectrum.prime_over_contains_minimal" => spectrum_prime_over_contains_minimal:
        "every prime containing X contains an X-minimal prime",
    "spectrum.coannihilator_meet" => spectrum_coannihilator_meet:
        "(meet Pi : X) is the intersection of the members of Pi not containing X",
    "spectrum.perp_via_spec_min" => spectrum_perp_via_spec_min:
        "X^perp is the intersection of the primes, or of the minimal primes, not containing X",
    "spectrum.d_set_props" => spectrum_d_set_props:
        "D_F is antitone in P and D_F(P) is contained in P when F is",
    "spectrum.minimality_threeway" => spectrum_minimality_threeway:
        "inclusion scan, P = D_F(P) and the exclusion test agree on minimality over F",
    "spectrum.f_closed_unique_containment" => spectrum_f_closed_unique_containment:
        "Pi is F-closed iff each member is the only one containing its D_F",
    "spectrum.f_closed_chain" => spectrum_f_closed_chain:
        "F-closed implies unique containment over S_Pi implies antichain, with the converse under prelinearity in F",
    "spectrum.d_set_minimal_primes" => spectrum_d_set_minimal_primes:
        "D_F(P) is the meet of the F-minimal primes below P and of the primes between F and P",
    "spectrum.prime_avoiding" => spectrum_prime_avoiding:
        "a filter disjoint from a join-closed set extends to a prime disjoint from it",
    "topology.galois" => topology_galois:
        "hull and kernel form a Galois connection and hk is a closure operator",
    "topology.hull_identities" => topology_hull_identities:
        "d and h turn joins and products into intersections and unions",
    "topology.open_identities" => topology_open_identities:
        "d(X) is empty iff X is in meet Pi, is all of a full Pi iff X generates the carrier, and kd(X) = (meet Pi : X)",
    "topology.closure_topological" => topology_closure_topological:
        "hk is the closure of the hull-kernel topology and the generating families are bases",
    "topology.t0" => topology_t0:
        "both topologies are T0",
    "topology.t1_antichain" => topology_t1_antichain:
        "T1 iff Pi is an antichain",
    "topology.hausdorff_f_closed" => topology_hausdorff_f_closed:
        "Hausdorff iff Pi is (meet Pi)-closed",
    "topology.specialization" => topology_specialization:
        "P is contained in Q iff Q is in the hull-kernel closure of P iff P is in the dual closure of Q",
    "topology.retraction_hausdorff" => topology_retraction_hausdorff:
        "if Max is a retract of Spec then Max is Hausdorff",
    "topology.pm_retract" => topology_pm_retract:
        "every prime lies under a unique maximal filter iff Max is a retract of Spec",
    "topology.max_hausdorff_iff_spec_normal" => topology_max_hausdorff_iff_spec_normal:
        "Max is Hausdorff iff Spec is normal, read literally",
    "topology.max_hausdorff_iff_s_max_normal" => topology_max_hausdorff_iff_s_max_normal:
        "Max is Hausdorff iff S_Max is normal",
    "topology.retract_normal" => topology_retract_normal:
        "a compact S_Pi retracting onto a T4 collection Pi is normal",
    "topology.s_pi_normal_hausdorff" => topology_s_pi_normal_hausdorff:
        "an antichain Pi with normal S_Pi is Hausdorff",
    "topology.compactness" => topology_compactness:
        "both topologies are compact, and Spec and Max are full",
    "topology.mtl_max_spec" => topology_mtl_max_spec:
        "on prelinear algebras Max is Hausdorff and Spec is normal",
    "min.hausdorff" => min_hausdorff:
        "Min_F is Hausdorff for every proper filter F",
    "min.identities" => min_identities:
        "the identity battery of the minimal prime space",
    "min.zero_dimensional" => min_zero_dimensional:
        "Min is zero-dimensional and totally disconnected and the dual topology refines the hull-kernel one",
    "min.star_compact" => min_star_compact:
        "star iff the two topologies coincide on Min iff Min is compact",
    "min.extremally_disconnected" => min_extremally_disconnected:
        "Min is extremally disconnected iff every h(X^perp) is open",
    "min.stonean_bigstar" => min_stonean_bigstar:
        "Min is Stonean iff bigstar",
    "min.finite_forcing" => min_finite_forcing:
        "star and bigstar hold and the two topologies coincide on Min",
}

/// `(id, statement)` for every check, in report order.
pub fn catalog() -> Vec<(&'static str, &'static str)> {
    CHECKS.iter().map(|c| (c.id, c.statement)).collect()
}

/// Validates the tables first; an invalid algebra is refused.
pub fn run_suite_tables(tables: &Tables, options: SuiteOptions) -> Result<TheoremReport> {
    let report = validate_algebra(tables)?;
    if !report.is_valid() {
        return Err(Error::ValidationFailed(Box::new(report)));
    }
    run_suite(&Algebra::new(tables.clone())?, options)
}

/// Runs the whole catalog. Only cap violations abort; every other error
/// raised inside a check is recorded as that check's failure.
pub fn run_suite(alg: &Algebra, options: SuiteOptions) -> Result<TheoremReport> {
    let ctx = Ctx::new(alg, options)?;
    let mut checks = Vec::with_capacity(CHECKS.len());
    for check in CHECKS {
        let mut r = IdentityReport::default();
        let outcome = (check.run)(&ctx, &mut r);
        let mut witness = r.failures.first().cloned();
        let mut passed = r.is_ok();
        match outcome {
            Ok(()) => {}
            Err(e @ Error::CapExceeded { .. }) => return Err(e),
            Err(e) => {
                passed = false;
                witness.get_or_insert_with(|| e.to_string());
            }
        }
        checks.push(CheckResult {
            id: check.id,
            statement: check.statement,
            passed,
            instances: r.checked,
            witness,
        });
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    Ok(TheoremReport {
        algebra: alg.names().join(" "),
        summary: Summary {
            total: checks.len(),
            passed: checks.len() - failed,
            failed,
        },
        checks,
    })
}

/// `x^perp^perp = y^perp` is solvable in `y` for every `x`.
pub fn star_check(alg: &Algebra) -> bool {
    let perps = perp_table(alg);
    perps
        .iter()
        .all(|&xp| perps.contains(&spectrum::perp(alg, xp)))
}

/// Every intersection of sets `x^perp` is itself some `y^perp`.
pub fn bigstar_check(alg: &Algebra) -> bool {
    let perps = perp_table(alg);
    let mut closure = vec![alg.carrier()];
    let mut i = 0;
    while i < closure.len() {
        let s = closure[i];
        for &p in &perps {
            let t = s.intersection(p);
            if !closure.contains(&t) {
                closure.push(t);
            }
        }
        i += 1;
    }
    closure.iter().all(|s| perps.contains(s))
}

fn perp_table(alg: &Algebra) -> Vec<ElementSet> {
    (0..alg.size())
        .map(|x| spectrum::perp(alg, ElementSet::singleton(x)))
        .collect()
}

/// Every prime lies under exactly one maximal filter.
pub fn is_pm(spectrum: &Spectrum) -> bool {
    spectrum
        .spec()
        .members()
        .iter()
        .all(|&p| spectrum.maximal_over(p).len() == 1)
}

struct Named {
    label: String,
    space: HullKernelSpace,
}

struct Ctx<'a> {
    alg: &'a Algebra,
    spectrum: Spectrum,
    elems: Vec<ElementSet>,
    seed: u64,
    /// Spec, Max, Min, then `Min_F` per proper filter.
    spaces: Vec<Named>,
    /// `(F, Min_F)` for every proper filter.
    min_over: Vec<(Filter, PrimeCollection)>,
    /// Nonempty subcollections of Spec, when Spec is small.
    subspaces: Vec<HullKernelSpace>,
}

impl<'a> Ctx<'a> {
    fn new(alg: &'a Algebra, options: SuiteOptions) -> Result<Self> {
        let spectrum = Spectrum::new(alg)?;
        let elems = sample::element_samples(alg, spectrum.filters(), options.seed);
        let mut spaces = vec![
            Named {
                label: "Spec".into(),
                space: HullKernelSpace::new(alg, spectrum.spec().clone())?,
            },
            Named {
                label: "Max".into(),
                space: HullKernelSpace::new(alg, spectrum.max().clone())?,
            },
            Named {
                label: "Min".into(),
                space: HullKernelSpace::new(alg, spectrum.min().clone())?,
            },
        ];
        let mut min_over = Vec::new();
        for f in spectrum.filters().proper(alg) {
            let m = spectrum.min_over(alg, f.elems())?;
            spaces.push(Named {
                label: format!("Min_{}", fmt_set(alg, f.elems())),
                space: HullKernelSpace::new(alg, m.clone())?,
            });
            min_over.push((f, m));
        }
        let mut subspaces = Vec::new();
        let spec = spectrum.spec();
        if spec.len() <= SUBCOLLECTION_LIMIT {
            for s in PointSet::full(spec.len())
                .subsets()
                .filter(|s| !s.is_empty())
            {
                let members = s.iter().map(|i| spec.get(i)).collect();
                let pi = PrimeCollection::new(alg, CollectionKind::Custom, members)?;
                subspaces.push(HullKernelSpace::new(alg, pi)?);
            }
        }
        Ok(Self {
            alg,
            spectrum,
            elems,
            seed: options.seed,
            spaces,
            min_over,
            subspaces,
        })
    }

    fn n(&self) -> usize {
        self.alg.size()
    }

    fn filters(&self) -> &FilterLattice {
        self.spectrum.filters()
    }

    fn spec_space(&self) -> &HullKernelSpace {
        &self.spaces[0].space
    }

    fn max_space(&self) -> &HullKernelSpace {
        &self.spaces[1].space
    }

    fn min_space(&self) -> &HullKernelSpace {
        &self.spaces[2].space
    }

    fn set(&self, s: ElementSet) -> String {
        fmt_set(self.alg, s)
    }

    /// Named spaces followed by the Spec subcollections.
    fn all_spaces(&self) -> impl Iterator<Item = (String, &HullKernelSpace)> {
        self.spaces
            .iter()
            .map(|n| (n.label.clone(), &n.space))
            .chain(
                self.subspaces
                    .iter()
                    .map(|s| (self.pi_label(s.collection()), s)),
            )
    }

    fn pi_label(&self, pi: &PrimeCollection) -> String {
        let parts: Vec<String> = pi.members().iter().map(|p| self.set(p.elems())).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn fmt_set(alg: &Algebra, s: ElementSet) -> String {
    format!("{{{}}}", alg.set_names(s).join(","))
}

fn meet_all(alg: &Algebra, sets: impl IntoIterator<Item = ElementSet>) -> ElementSet {
    sets.into_iter()
        .fold(alg.carrier(), |acc, s| acc.intersection(s))
}

fn algebra_adjointness(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    for x in 0..c.n() {
        for y in 0..c.n() {
            for z in 0..c.n() {
                r.check(a.leq(a.prod(x, y), z) == a.leq(x, a.res(y, z)), || {
                    format!("x={}, y={}, z={}", a.name(x), a.name(y), a.name(z))
                });
            }
        }
    }
    Ok(())
}

fn algebra_residuum_roundtrip(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let t = c.alg.tables();
    let derived = residual_from_prod(&t.meet, &t.prod)?;
    r.check(derived == t.res, || {
        "derived residuum differs from the stored table".into()
    });
    Ok(())
}

fn algebra_order(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let n = c.n();
    for x in 0..n {
        r.check(a.leq(x, x) && a.leq(0, x) && a.leq(x, a.top()), || {
            format!("{} is not between the bounds", a.name(x))
        });
        for y in 0..n {
            let name = || format!("x={}, y={}", a.name(x), a.name(y));
            r.check(a.leq(x, y) == (a.res(x, y) == a.top()), name);
            r.check(!(a.leq(x, y) && a.leq(y, x)) || x == y, name);
            let (j, m) = (a.join(x, y), a.meet(x, y));
            r.check(
                a.leq(x, j) && a.leq(y, j) && a.leq(m, x) && a.leq(m, y),
                name,
            );
            for z in 0..n {
                let name = || format!("x={}, y={}, z={}", a.name(x), a.name(y), a.name(z));
                r.check(!(a.leq(x, y) && a.leq(y, z)) || a.leq(x, z), name);
                r.check(!(a.leq(x, z) && a.leq(y, z)) || a.leq(j, z), name);
                r.check(!(a.leq(z, x) && a.leq(z, y)) || a.leq(z, m), name);
            }
        }
    }
    Ok(())
}

fn algebra_prod_distributes(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    for x in 0..c.n() {
        for y in 0..c.n() {
            for z in 0..c.n() {
                let name = || format!("x={}, y={}, z={}", a.name(x), a.name(y), a.name(z));
                r.check(
                    a.prod(x, a.join(y, z)) == a.join(a.prod(x, y), a.prod(x, z)),
                    name,
                );
                r.check(
                    a.leq(a.prod(a.join(x, y), a.join(x, z)), a.join(x, a.prod(y, z))),
                    name,
                );
            }
        }
    }
    Ok(())
}

fn filters_generated_eq_prime_meet(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for &x in &c.elems {
        let g = generated_filter(c.alg, x).elems();
        let primes = c.spectrum.primes_containing(x);
        let rhs = meet_all(c.alg, primes.iter().map(|p| p.elems()));
        r.check(g == rhs, || format!("X={}", c.set(x)));
    }
    Ok(())
}

fn filters_generated_eq_min_meet(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for &x in &c.elems {
        let g = generated_filter(c.alg, x).elems();
        let min = c.spectrum.min_over(c.alg, x)?;
        let rhs = meet_all(c.alg, min.members().iter().map(|p| p.elems()));
        r.check(g == rhs, || format!("X={}", c.set(x)));
    }
    Ok(())
}

fn filters_adjoin_meet_join(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    for f in c.filters().iter() {
        for x in 0..c.n() {
            let fx = filter::adjoin(a, f, x);
            for y in x..c.n() {
                let fy = filter::adjoin(a, f, y);
                let name = || format!("F={}, x={}, y={}", c.set(f.elems()), a.name(x), a.name(y));
                r.check(
                    filter::filter_meet(fx, fy) == filter::adjoin(a, f, a.join(x, y)),
                    name,
                );
                r.check(
                    filter::filter_join(a, fx, fy) == filter::adjoin(a, f, a.prod(x, y)),
                    name,
                );
            }
        }
    }
    Ok(())
}

fn filters_adjoin_antitone(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    for f in c.filters().iter() {
        for x in 0..c.n() {
            for y in a.up(x) {
                r.check(
                    filter::adjoin(a, f, y).is_subset(filter::adjoin(a, f, x)),
                    || format!("F={}, x={}, y={}", c.set(f.elems()), a.name(x), a.name(y)),
                );
            }
        }
    }
    Ok(())
}

fn filters_finite_generation(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let generates_all = |s: ElementSet| generated_filter(a, s).elems() == a.carrier();
    for &x in &c.elems {
        let whole = generates_all(x);
        r.check(whole == generated_filter(a, x).contains(a.bottom()), || {
            format!(
                "X={} generates the carrier but misses bottom, or the reverse",
                c.set(x)
            )
        });
        if !whole {
            continue;
        }
        let mut y = x;
        for e in x {
            if generates_all(y.without(e)) {
                y.remove(e);
            }
        }
        r.check(y.is_subset(x) && generates_all(y), || {
            format!("shrinking X={} lost generation", c.set(x))
        });
        r.check(y.iter().all(|e| !generates_all(y.without(e))), || {
            format!(
                "shrunk generator {} of X={} is not irredundant",
                c.set(y),
                c.set(x)
            )
        });
    }
    Ok(())
}

fn filters_lattice_closed(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let lat = c.filters();
    r.check(
        lat.position(Filter::unit(a)).is_some() && lat.position(Filter::whole(a)).is_some(),
        || "{1} or the carrier is missing".into(),
    );
    for f in lat.iter() {
        r.check(filter::is_filter(a, f.elems()), || {
            format!("{} is not a filter", c.set(f.elems()))
        });
        for g in lat.iter() {
            let name = || format!("F={}, G={}", c.set(f.elems()), c.set(g.elems()));
            r.check(lat.position(filter::filter_meet(f, g)).is_some(), name);
            r.check(lat.position(filter::filter_join(a, f, g)).is_some(), name);
        }
    }
    Ok(())
}

fn spectrum_prime_criterion(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for f in c.filters().proper(c.alg) {
        let prime = spectrum::is_prime(c.alg, f)?;
        r.check(
            prime == spectrum::is_meet_irreducible(c.filters(), f),
            || format!("F={}", c.set(f.elems())),
        );
        r.check(prime == c.spectrum.spec().position(f).is_some(), || {
            format!("Spec disagrees with primeness at F={}", c.set(f.elems()))
        });
    }
    Ok(())
}

fn spectrum_max_in_spec(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let proper: Vec<Filter> = c.filters().proper(a).collect();
    let maximal: Vec<Filter> = proper
        .iter()
        .copied()
        .filter(|&f| !proper.iter().any(|&g| g != f && f.is_subset(g)))
        .collect();
    r.check(maximal.as_slice() == c.spectrum.max().members(), || {
        "Max differs from a scan".into()
    });
    for &m in &maximal {
        r.check(spectrum::is_prime(a, m)?, || {
            format!("{} is maximal but not prime", c.set(m.elems()))
        });
    }
    r.check(c.spectrum.max().is_full(a, c.filters()), || {
        "some proper filter is under no maximal filter".into()
    });
    Ok(())
}

fn spectrum_minimal_prime_theorem(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    if c.n() > 12 {
        return Ok(());
    }
    for (f, min) in &c.min_over {
        let complements: Vec<ElementSet> = a
            .carrier()
            .subsets()
            .filter(|&s| spectrum::is_maximal_vee_closed_avoiding(a, s, f.elems()))
            .map(|s| s.complement(c.n()))
            .collect();
        let mut expected: Vec<ElementSet> = min.members().iter().map(|m| m.elems()).collect();
        let mut got = complements;
        expected.sort();
        got.sort();
        r.check(got == expected, || format!("F={}", c.set(f.elems())));
    }
    Ok(())
}

fn spectrum_prime_over_contains_minimal(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for &x in &c.elems {
        let min = c.spectrum.min_over(c.alg, x)?;
        for p in c.spectrum.primes_containing(x) {
            r.check(min.members().iter().any(|m| m.is_subset(p)), || {
                format!("X={}, P={}", c.set(x), c.set(p.elems()))
            });
        }
    }
    Ok(())
}

fn spectrum_coannihilator_meet(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, space) in c.all_spaces() {
        let pi = space.collection();
        let core = space.core();
        for &x in &c.elems {
            let rhs = meet_all(
                c.alg,
                pi.members()
                    .iter()
                    .filter(|p| !x.is_subset(p.elems()))
                    .map(|p| p.elems()),
            );
            r.check(spectrum::coannihilator(c.alg, core, x) == rhs, || {
                format!("Pi={label}, X={}", c.set(x))
            });
        }
    }
    Ok(())
}

fn spectrum_perp_via_spec_min(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let avoiding_meet = |pi: &PrimeCollection, x: ElementSet| {
        meet_all(
            c.alg,
            pi.members()
                .iter()
                .filter(|p| !x.is_subset(p.elems()))
                .map(|p| p.elems()),
        )
    };
    for &x in &c.elems {
        let perp = spectrum::perp(c.alg, x);
        r.check(perp == avoiding_meet(c.spectrum.spec(), x), || {
            format!("Spec, X={}", c.set(x))
        });
        r.check(perp == avoiding_meet(c.spectrum.min(), x), || {
            format!("Min, X={}", c.set(x))
        });
    }
    Ok(())
}

fn spectrum_d_set_props(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let spec = c.spectrum.spec().members();
    for f in c.filters().proper(c.alg) {
        for &p in spec {
            let dp = spectrum::d_set(c.alg, f, p)?;
            if f.is_subset(p) {
                r.check(dp.is_subset(p.elems()), || {
                    format!("F={}, P={}", c.set(f.elems()), c.set(p.elems()))
                });
            }
            for &q in spec.iter().filter(|&&q| p.is_subset(q)) {
                let dq = spectrum::d_set(c.alg, f, q)?;
                r.check(dq.is_subset(dp), || {
                    format!(
                        "F={}, P={}, Q={}",
                        c.set(f.elems()),
                        c.set(p.elems()),
                        c.set(q.elems())
                    )
                });
            }
        }
    }
    Ok(())
}

fn spectrum_minimality_threeway(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (f, min) in &c.min_over {
        for &p in c
            .spectrum
            .spec()
            .members()
            .iter()
            .filter(|p| f.is_subset(**p))
        {
            let minimal = spectrum::check_minimality(c.alg, &c.spectrum, *f, p)?;
            r.check(minimal == min.position(p).is_some(), || {
                format!("F={}, P={}", c.set(f.elems()), c.set(p.elems()))
            });
        }
    }
    Ok(())
}

fn filters_below<'c>(c: &'c Ctx, core: ElementSet) -> impl Iterator<Item = Filter> + 'c {
    c.filters()
        .iter()
        .filter(move |f| f.elems().is_subset(core))
}

fn spectrum_f_closed_unique_containment(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, space) in c.all_spaces() {
        let pi = space.collection();
        for f in filters_below(c, space.core()) {
            let closed = spectrum::is_f_closed(c.alg, pi, f.elems())?.closed;
            let mut unique = true;
            for &p in pi.members() {
                let d = spectrum::d_set(c.alg, f, p)?;
                let holders: Vec<_> = pi
                    .members()
                    .iter()
                    .filter(|q| d.is_subset(q.elems()))
                    .collect();
                unique &= holders.as_slice() == [&p];
            }
            r.check(closed == unique, || {
                format!("Pi={label}, F={}", c.set(f.elems()))
            });
        }
    }
    Ok(())
}

fn spectrum_f_closed_chain(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let spec = c.spectrum.spec();
    for (label, space) in c.all_spaces() {
        let pi = space.collection();
        let antichain = spectrum::is_antichain(pi);
        let s = spectrum::s_pi(a, spec, pi);
        let unique = s
            .iter()
            .all(|&q| pi.members().iter().filter(|p| q.is_subset(**p)).count() == 1);
        r.check(!unique || antichain, || {
            format!("Pi={label}: unique containment without antichain")
        });
        for f in filters_below(c, space.core()) {
            let closed = spectrum::is_f_closed(a, pi, f.elems())?.closed;
            let name = || format!("Pi={label}, F={}", c.set(f.elems()));
            r.check(!closed || unique, name);
            let prelinear = (0..c.n())
                .all(|x| (0..c.n()).all(|y| f.contains(a.join(a.res(x, y), a.res(y, x)))));
            if prelinear {
                r.check(!antichain || closed, name);
            }
        }
        if a.is_mtl() {
            let closed = spectrum::is_f_closed(a, pi, ElementSet::singleton(a.top()))?.closed;
            r.check(closed == antichain, || {
                format!("Pi={label}: prelinear algebra, 1-closed vs antichain")
            });
        }
    }
    Ok(())
}

fn spectrum_d_set_minimal_primes(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let spec = c.spectrum.spec().members();
    for (f, min) in &c.min_over {
        for &p in spec.iter().filter(|p| f.is_subset(**p)) {
            let d = spectrum::d_set(a, *f, p)?;
            let name = || format!("F={}, P={}", c.set(f.elems()), c.set(p.elems()));
            let below: Vec<Filter> = min
                .members()
                .iter()
                .copied()
                .filter(|m| m.is_subset(p))
                .collect();
            let min_d = c.spectrum.min_over(a, d)?;
            r.check(min_d.members() == below.as_slice(), name);
            r.check(min_d.members().iter().all(|m| m.is_subset(p)), name);
            r.check(d == meet_all(a, below.iter().map(|m| m.elems())), name);
            let between = spec.iter().filter(|q| f.is_subset(**q) && q.is_subset(p));
            r.check(d == meet_all(a, between.map(|q| q.elems())), name);
        }
    }
    Ok(())
}

fn spectrum_prime_avoiding(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    let avoid_sets: Vec<ElementSet> = {
        let mut v: Vec<_> = c
            .elems
            .iter()
            .filter(|x| !x.is_empty())
            .map(|&x| spectrum::vee_closure(a, x))
            .collect();
        v.sort();
        v.dedup();
        v
    };
    for f in c.filters().iter() {
        for &avoid in avoid_sets.iter().filter(|s| s.is_disjoint(f.elems())) {
            let p = spectrum::prime_avoiding(c.filters(), f, avoid)?;
            let name = || format!("F={}, C={}", c.set(f.elems()), c.set(avoid));
            r.check(f.is_subset(p) && p.elems().is_disjoint(avoid), name);
            r.check(spectrum::is_prime(a, p)?, name);
            let larger = c
                .filters()
                .iter()
                .any(|g| g != p && p.is_subset(g) && g.elems().is_disjoint(avoid));
            r.check(!larger, name);
        }
    }
    Ok(())
}

fn topology_galois(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for named in &c.spaces {
        let points = sample::point_samples(named.space.len(), c.seed);
        let mut sub = check_galois(&named.space, &c.elems, &points);
        for f in sub.failures.iter_mut() {
            *f = format!("Pi={}: {f}", named.label);
        }
        r.merge(sub);
    }
    Ok(())
}

fn topology_hull_identities(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    for named in &c.spaces {
        let s = &named.space;
        let label = &named.label;
        for x in 0..c.n() {
            r.check(s.hull_of(x).is_subset(s.avoiding_of(a.negation(x))), || {
                format!("Pi={label}, x={}", a.name(x))
            });
            for y in x..c.n() {
                let name = || format!("Pi={label}, x={}, y={}", a.name(x), a.name(y));
                let (j, p) = (a.join(x, y), a.prod(x, y));
                r.check(
                    s.avoiding_of(x).intersection(s.avoiding_of(y)) == s.avoiding_of(j),
                    name,
                );
                r.check(
                    s.avoiding_of(x).union(s.avoiding_of(y)) == s.avoiding_of(p),
                    name,
                );
                r.check(
                    s.hull_of(x).intersection(s.hull_of(y)) == s.hull_of(p),
                    name,
                );
                r.check(s.hull_of(x).union(s.hull_of(y)) == s.hull_of(j), name);
            }
        }
        for &x in &c.elems {
            let perp = spectrum::perp(a, x);
            r.check(s.hull(x).union(s.hull(perp)) == s.ground(), || {
                format!("Pi={label}, X={}", c.set(x))
            });
        }
    }
    Ok(())
}

fn topology_open_identities(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let a = c.alg;
    for (i, named) in c.spaces.iter().enumerate() {
        let s = &named.space;
        let label = &named.label;
        let core = s.core();
        let full = s.collection().is_full(a, c.filters());
        for &x in &c.elems {
            let name = || format!("Pi={label}, X={}", c.set(x));
            let dx = s.avoiding(x);
            let gen = generated_filter(a, x).elems();
            r.check(dx.is_empty() == x.is_subset(core), name);
            if full {
                r.check((dx == s.ground()) == (gen == a.carrier()), name);
            }
            r.check(s.kernel(dx) == spectrum::coannihilator(a, core, x), name);
            if i == 0 {
                r.check(s.kernel(s.hull(x)) == gen, name);
                for &y in &c.elems {
                    let same_hull = s.hull(x) == s.hull(y);
                    let same_filter = gen == generated_filter(a, y).elems();
                    r.check(same_hull == same_filter, || {
                        format!("Spec, X={}, Y={}", c.set(x), c.set(y))
                    });
                }
            }
        }
    }
    Ok(())
}

fn union_of_basis_inside(basis: &[topology::BasisSet], o: PointSet) -> PointSet {
    basis
        .iter()
        .map(|b| b.set)
        .filter(|b| b.is_subset(o))
        .fold(PointSet::EMPTY, |acc, b| acc.union(b))
}

fn topology_closure_topological(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for named in &c.spaces {
        let s = &named.space;
        let label = &named.label;
        r.check(s.closure(PointSet::EMPTY).is_empty(), || {
            format!("Pi={label}: hk(empty) is not empty")
        });
        for f in sample::point_samples(s.len(), c.seed) {
            r.check(s.closure(f) == s.hk().closure(f), || {
                format!("Pi={label}, points={f:?}")
            });
        }
        for top in [s.hk(), s.dual()] {
            for b in top.basis() {
                r.check(top.is_open(b.set), || {
                    format!("Pi={label}: basis set {:?} not open", b.set)
                });
            }
            for &o in top.opens() {
                r.check(union_of_basis_inside(top.basis(), o) == o, || {
                    format!("Pi={label}: open {o:?} is not a union of basis sets")
                });
            }
        }
    }
    Ok(())
}

fn topology_t0(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, s) in c.all_spaces() {
        for kind in [TopologyKind::HullKernel, TopologyKind::Dual] {
            r.check(s.topology(kind).is_t0(), || format!("Pi={label}, {kind:?}"));
        }
    }
    Ok(())
}

fn topology_t1_antichain(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, s) in c.all_spaces() {
        let antichain = spectrum::is_antichain(s.collection());
        for kind in [TopologyKind::HullKernel, TopologyKind::Dual] {
            let sep = s.separation(c.alg, kind)?;
            r.check(sep.t1 == antichain, || format!("Pi={label}, {kind:?}"));
        }
    }
    Ok(())
}

fn topology_hausdorff_f_closed(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, s) in c.all_spaces() {
        let closed = spectrum::is_f_closed(c.alg, s.collection(), s.core())?.closed;
        let sep = s.separation(c.alg, TopologyKind::HullKernel)?;
        r.check(sep.hausdorff == closed, || format!("Pi={label}"));
    }
    Ok(())
}

fn topology_specialization(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for named in &c.spaces {
        let s = &named.space;
        let members = s.collection().members();
        for (i, p) in members.iter().enumerate() {
            for (j, q) in members.iter().enumerate() {
                let le = p.is_subset(*q);
                let in_h = s.hk().closure(PointSet::singleton(i)).contains(j);
                let in_d = s.dual().closure(PointSet::singleton(j)).contains(i);
                r.check(le == in_h && le == in_d, || {
                    format!(
                        "Pi={}, P={}, Q={}",
                        named.label,
                        c.set(p.elems()),
                        c.set(q.elems())
                    )
                });
            }
        }
    }
    Ok(())
}

/// All continuous maps from `from` onto its subcollection `onto` that fix
/// `onto` pointwise; `None` when the search space is too large.
fn retractions(from: &HullKernelSpace, onto: &HullKernelSpace) -> Option<Vec<Vec<usize>>> {
    let fixed: Vec<Option<usize>> = from
        .collection()
        .members()
        .iter()
        .map(|&p| onto.collection().position(p))
        .collect();
    if fixed.iter().any(|f| f.is_none()) && onto.is_empty() {
        return Some(Vec::new());
    }
    let free = fixed.iter().filter(|f| f.is_none()).count();
    let total = onto.len().checked_pow(free as u32)?;
    if total > RETRACTION_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut map: Vec<usize> = fixed.iter().map(|f| f.unwrap_or(0)).collect();
    let free_idx: Vec<usize> = (0..fixed.len()).filter(|&i| fixed[i].is_none()).collect();
    for mut code in 0..total {
        for &i in &free_idx {
            map[i] = code % onto.len();
            code /= onto.len();
        }
        if is_continuous(&map, from.hk(), onto.hk()) {
            out.push(map.clone());
        }
    }
    Some(out)
}

fn topology_retraction_hausdorff(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    if let Some(maps) = retractions(c.spec_space(), c.max_space()) {
        let sep = c.max_space().separation(c.alg, TopologyKind::HullKernel)?;
        r.check(maps.is_empty() || sep.hausdorff, || {
            "Max is a retract of Spec but not Hausdorff".into()
        });
    }
    Ok(())
}

fn topology_pm_retract(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let pm = is_pm(&c.spectrum);
    let built = topology::retraction_spec_to_max(c.alg, &c.spectrum);
    match &built {
        Ok(_) => r.check(pm, || {
            "retraction built without the unique-maximal property".into()
        }),
        Err(Error::NotPm { witness }) => {
            r.check(!pm, || format!("NotPm at prime #{witness} on a pm algebra"))
        }
        Err(e) => return Err(e.clone()),
    }
    if let Some(maps) = retractions(c.spec_space(), c.max_space()) {
        r.check(pm == !maps.is_empty(), || {
            format!("pm={pm} but {} retractions exist", maps.len())
        });
        if let Ok(f) = built {
            r.check(maps.contains(&f.map), || {
                "unique-maximal map is not among the retractions".into()
            });
        }
    }
    Ok(())
}

fn topology_max_hausdorff_iff_spec_normal(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let max = c.max_space().separation(c.alg, TopologyKind::HullKernel)?;
    let spec = c.spec_space().separation(c.alg, TopologyKind::HullKernel)?;
    r.check(max.hausdorff == spec.normal, || {
        format!(
            "Max hausdorff={}, Spec normal={}",
            max.hausdorff, spec.normal
        )
    });
    Ok(())
}

fn s_pi_space(c: &Ctx, pi: &PrimeCollection) -> Result<HullKernelSpace> {
    let members = spectrum::s_pi(c.alg, c.spectrum.spec(), pi);
    HullKernelSpace::new(
        c.alg,
        PrimeCollection::new(c.alg, CollectionKind::Custom, members)?,
    )
}

fn topology_max_hausdorff_iff_s_max_normal(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let max = c.max_space().separation(c.alg, TopologyKind::HullKernel)?;
    let s = s_pi_space(c, c.max_space().collection())?;
    let s_max = s.separation(c.alg, TopologyKind::HullKernel)?;
    r.check(max.hausdorff == s_max.normal, || {
        format!(
            "Max hausdorff={}, S_Max normal={}",
            max.hausdorff, s_max.normal
        )
    });
    Ok(())
}

fn topology_retract_normal(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, s) in c.all_spaces() {
        let sep = s.separation(c.alg, TopologyKind::HullKernel)?;
        if !sep.t4 {
            continue;
        }
        let sp = s_pi_space(c, s.collection())?;
        if !sp.hk().is_compact() {
            continue;
        }
        if let Some(maps) = retractions(&sp, s) {
            if !maps.is_empty() {
                r.check(sp.hk().is_normal(), || format!("Pi={label}"));
            }
        }
    }
    Ok(())
}

fn topology_s_pi_normal_hausdorff(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (label, s) in c.all_spaces() {
        if !spectrum::is_antichain(s.collection()) {
            continue;
        }
        let sp = s_pi_space(c, s.collection())?;
        if sp.hk().is_normal() {
            r.check(s.hk().is_hausdorff(), || format!("Pi={label}"));
        }
    }
    Ok(())
}

fn topology_compactness(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for (i, named) in c.spaces.iter().enumerate() {
        let k = named.space.compactness(c.alg, &c.spectrum)?;
        r.check(k.compact_h && k.compact_d, || format!("Pi={}", named.label));
        if i < 2 {
            r.check(k.full, || format!("Pi={} is not full", named.label));
        }
        let basis: Vec<PointSet> = named.space.hk().basis().iter().map(|b| b.set).collect();
        r.check(named.space.hk().minimal_subcover(&basis).is_some(), || {
            format!("Pi={}: the basis does not cover", named.label)
        });
    }
    Ok(())
}

fn topology_mtl_max_spec(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    if !c.alg.is_mtl() {
        return Ok(());
    }
    let max = c.max_space().separation(c.alg, TopologyKind::HullKernel)?;
    let spec = c.spec_space().separation(c.alg, TopologyKind::HullKernel)?;
    r.check(max.hausdorff, || "Max is not Hausdorff".into());
    r.check(spec.normal, || "Spec is not normal".into());
    Ok(())
}

fn min_hausdorff(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    for named in &c.spaces[2..] {
        let sep = named.space.separation(c.alg, TopologyKind::HullKernel)?;
        r.check(sep.hausdorff, || format!("Pi={}", named.label));
    }
    Ok(())
}

fn min_identities(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    r.merge(min_space_identities(c.alg, &c.spectrum, &c.elems)?);
    Ok(())
}

fn min_zero_dimensional(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let s = c.min_space();
    let conn = s.connectedness(TopologyKind::HullKernel);
    r.check(conn.zero_dimensional, || {
        "Min is not zero-dimensional".into()
    });
    r.check(conn.totally_disconnected, || {
        "Min is not totally disconnected".into()
    });
    r.check(s.dual().is_finer_than(s.hk()), || {
        "the dual topology does not refine on Min".into()
    });
    Ok(())
}

fn min_star_compact(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let s = c.min_space();
    let star = star_check(c.alg);
    let coincide = s.hk().same_opens(s.dual());
    let compact = s.hk().is_compact();
    r.check(star == coincide && coincide == compact, || {
        format!("star={star}, coincide={coincide}, compact={compact}")
    });
    Ok(())
}

fn min_extremally_disconnected(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let s = c.min_space();
    let ext = s
        .connectedness(TopologyKind::HullKernel)
        .extremally_disconnected;
    let all_open = c
        .elems
        .iter()
        .all(|&x| s.hk().is_open(s.hull(spectrum::perp(c.alg, x))));
    r.check(ext == all_open, || {
        format!("extremally disconnected={ext}, hulls open={all_open}")
    });
    Ok(())
}

fn min_stonean_bigstar(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let stonean = c
        .min_space()
        .connectedness(TopologyKind::HullKernel)
        .stonean;
    let bigstar = bigstar_check(c.alg);
    r.check(stonean == bigstar, || {
        format!("stonean={stonean}, bigstar={bigstar}")
    });
    Ok(())
}

fn min_finite_forcing(c: &Ctx, r: &mut IdentityReport) -> Result<()> {
    let s = c.min_space();
    r.check(star_check(c.alg), || "star fails".into());
    r.check(bigstar_check(c.alg), || "bigstar fails".into());
    r.check(s.hk().same_opens(s.dual()), || {
        "the topologies differ on Min".into()
    });
    Ok(())
}
