use std::cell::OnceCell;

use super::{AuditReport, ClaimId, SkipReason, Witness};
use crate::corona::{iterated_corona, product, CoronaLabeledGraph, Variant};
use crate::format::format_set;
use crate::geodetic::{Certificate, ForcedVertices, LengthBound, SolveConfig, SolveError, Solver};
use crate::graph::{distances, pendant_vertices, DistanceTable, Graph, GraphRef, Vertex};

/// Every minimum basis holds the pendant vertices, and dropping any single
/// pendant from the whole vertex set breaks strong geodeticity.
///
/// Minimization runs without pendant seeding so the check is not circular.
pub fn audit_lemma0(g: &GraphRef, cfg: &SolveConfig) -> AuditReport {
    let report = AuditReport::new(ClaimId::Lemma0, format!("graph {}", g.name));
    let pendants = pendant_vertices(&g.graph);
    let unseeded = SolveConfig { forced: ForcedVertices::None, ..cfg.clone() };
    let result = match Solver::new(&g.graph, unseeded).and_then(|s| Ok((s.minimum(LengthBound::Unbounded)?, s))) {
        Ok(r) => r,
        Err(e) => return report.skip_for(&e),
    };
    let (min, solver) = result;
    let mut report = report.values(
        format!("pendants {} in every basis", format_set(&pendants)),
        format!("basis {}", format_set(min.certificate.basis())),
    );
    if pendants.is_empty() {
        report = report.note("no pendant vertices");
    }
    if pendants.iter().any(|p| !min.certificate.basis().contains(p)) {
        let witness = Witness::Valid { certificate: min.certificate, bound: LengthBound::Unbounded };
        return report.fail(&g.graph, witness);
    }
    for &p in &pendants {
        let rest: Vec<Vertex> = g.graph.vertices().filter(|&v| v != p).collect();
        match solver.check(&rest, LengthBound::Unbounded) {
            Ok(None) => {}
            Ok(Some(certificate)) => {
                return report.fail(&g.graph, Witness::Valid { certificate, bound: LengthBound::Unbounded })
            }
            Err(e) => return report.skip_for(&e),
        }
    }
    report
}

/// `Sg = Sg'` when the diameter is at most two. Larger diameters are
/// skipped, with the comparison still recorded.
pub fn audit_result1(g: &GraphRef, cfg: &SolveConfig) -> AuditReport {
    let report = AuditReport::new(ClaimId::Result1, format!("graph {}", g.name));
    let solved = Solver::new(&g.graph, cfg.clone()).and_then(|s| {
        let sg = s.minimum(LengthBound::Unbounded)?;
        let sg2 = s.minimum(LengthBound::TWO)?;
        Ok((s.table().diameter().expect("connected"), sg, sg2))
    });
    let (diam, sg, sg2) = match solved {
        Ok(r) => r,
        Err(e) => return report.skip_for(&e),
    };
    let report =
        report.values("Sg = Sg'", format!("Sg = {}, Sg' = {}", sg.number, sg2.number)).note(format!("diam = {diam}"));
    if diam > 2 {
        let relation = if sg.number == sg2.number { "equal" } else { "different" };
        return report.skip(SkipReason::Precondition).note(format!("Sg and Sg' are {relation}"));
    }
    if sg.number < sg2.number {
        // With diameter at most two every pair is within the bound.
        report.fail(&g.graph, Witness::Valid { certificate: sg.certificate, bound: LengthBound::TWO })
    } else if sg2.number < sg.number {
        report.fail(&g.graph, Witness::Valid { certificate: sg2.certificate, bound: LengthBound::Unbounded })
    } else {
        report
    }
}

fn describe(variant: Variant, base: &GraphRef, copies: &[GraphRef]) -> String {
    if is_uniform(copies) {
        format!("{variant} {} {}", base.name, copies[0].name)
    } else {
        let names: Vec<&str> = copies.iter().map(|c| c.name.as_str()).collect();
        format!("{variant} {} [{}]", base.name, names.join(","))
    }
}

fn is_uniform(copies: &[GraphRef]) -> bool {
    !copies.is_empty() && copies.iter().all(|c| c.graph == copies[0].graph)
}

/// A product under audit, with the per-copy strong 2-geodetic bases
/// computed on demand.
struct Case<'a> {
    instance: String,
    base: &'a Graph,
    uniform: bool,
    product: CoronaLabeledGraph,
    table: DistanceTable,
    cfg: &'a SolveConfig,
    bases: OnceCell<Result<Vec<Certificate>, SolveError>>,
    a: OnceCell<Result<Vec<Vertex>, SolveError>>,
}

impl<'a> Case<'a> {
    fn new(variant: Variant, base: &'a GraphRef, copies: &[GraphRef], cfg: &'a SolveConfig) -> Result<Self, String> {
        let hs: Vec<Graph> = copies.iter().map(|c| c.graph.clone()).collect();
        let product = product(variant, &base.graph, &hs).map_err(|e| e.to_string())?;
        let table = distances(product.graph());
        Ok(Self {
            instance: describe(variant, base, copies),
            base: &base.graph,
            uniform: is_uniform(copies),
            product,
            table,
            cfg,
            bases: OnceCell::new(),
            a: OnceCell::new(),
        })
    }

    fn graph(&self) -> &Graph {
        self.product.graph()
    }

    fn copy_graph(&self, copy: usize) -> Graph {
        let vs: Vec<Vertex> = self.product.copy_vertices(copy).collect();
        self.graph().induced(&vs)
    }

    fn bases(&self) -> Result<&[Certificate], SolveError> {
        self.bases
            .get_or_init(|| {
                (0..self.product.copy_count())
                    .map(|c| {
                        Ok(Solver::new(&self.copy_graph(c), self.cfg.clone())?.minimum(LengthBound::TWO)?.certificate)
                    })
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Basis of copy `c` in product labels.
    fn lifted(&self, bases: &[Certificate], c: usize) -> Vec<Vertex> {
        let offset = self.product.copy_vertices(c).start;
        bases[c].basis().iter().map(|&b| offset + b).collect()
    }

    fn a(&self) -> Result<&[Vertex], SolveError> {
        self.a.get_or_init(|| compute_a(&self.product, self.bases()?, self.cfg)).as_deref().map_err(Clone::clone)
    }

    fn report(&self, claim: ClaimId) -> AuditReport {
        AuditReport::new(claim, self.instance.clone())
    }
}

/// Tally of a structural check: how many cases were looked at and the first
/// counterexample.
struct Tally {
    checked: usize,
    violations: usize,
    first: Option<Witness>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, violations: 0, first: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            self.first.get_or_insert_with(witness);
        }
    }

    fn finish(self, report: AuditReport, graph: &Graph) -> AuditReport {
        let report = report.values("0 violations", format!("{} of {} checked", self.violations, self.checked));
        match self.first {
            Some(w) => report.fail(graph, w),
            None => report,
        }
    }
}

/// Pendant base vertices of an edge corona whose copy has no 2-geodesic
/// slack.
///
/// A pendant `u` is left out of `A` when some non-adjacent basis pair of its
/// copy can be released (its geodesic then free to pass through `u`) while
/// the remaining 2-geodesics still cover the copy. Pairs at distance more
/// than two inside the copy are never fixed there, so one of them is
/// already free. `bases` are strong 2-geodetic certificates in copy labels.
pub fn compute_a(
    product: &CoronaLabeledGraph,
    bases: &[Certificate],
    cfg: &SolveConfig,
) -> Result<Vec<Vertex>, SolveError> {
    if product.variant() != Variant::EdgeCorona {
        return Ok(Vec::new());
    }
    let g = product.graph();
    let base_order = product.base_order();
    let mut a = Vec::new();
    for u in 0..base_order {
        let base_degree = g.neighbors(u).iter().filter(|&&w| w < base_order).count();
        if base_degree != 1 {
            continue;
        }
        let copy = product.copy_edges().iter().position(|&(x, y)| x == u || y == u).expect("pendant has an edge");
        let vs: Vec<Vertex> = product.copy_vertices(copy).collect();
        let h = g.induced(&vs);
        if !has_slack(&h, bases[copy].basis(), cfg)? {
            a.push(u);
        }
    }
    Ok(a)
}

fn has_slack(h: &Graph, basis: &[Vertex], cfg: &SolveConfig) -> Result<bool, SolveError> {
    let solver = Solver::new(h, cfg.clone())?;
    let table = solver.table();
    let mut pairs = Vec::new();
    for (i, &s) in basis.iter().enumerate() {
        for &t in &basis[i + 1..] {
            pairs.push((s, t));
        }
    }
    let required: Vec<Vertex> = h.vertices().filter(|v| !basis.contains(v)).collect();
    for &(s, t) in &pairs {
        let d = table.raw(s, t);
        if d < 2 {
            continue;
        }
        if d > 2 {
            return Ok(true);
        }
        let others: Vec<(Vertex, Vertex)> =
            pairs.iter().copied().filter(|&(x, y)| (x, y) != (s, t) && table.raw(x, y) <= 2).collect();
        if solver.assign(&others, &required)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Checks that `formula_set` is strong geodetic and that the exact minimum
/// equals `expected`.
fn formula_check(
    mut report: AuditReport,
    graph: &Graph,
    formula_set: Vec<Vertex>,
    expected: usize,
    cfg: &SolveConfig,
) -> AuditReport {
    let solver = match Solver::new(graph, cfg.clone()) {
        Ok(s) => s,
        Err(e) => return report.skip_for(&e),
    };
    let upper = match solver.check(&formula_set, LengthBound::Unbounded) {
        Ok(c) => c.is_some(),
        Err(e) => return report.skip_for(&e),
    };
    report.upper_bound = Some(upper);
    report = report.note(format!(
        "formula set {} is {}",
        format_set(&formula_set),
        if upper { "strong geodetic" } else { "not strong geodetic" }
    ));
    let rejected = || {
        let uncovered = graph.vertices().find(|&w| {
            !formula_set.contains(&w)
                && !formula_set
                    .iter()
                    .any(|&s| formula_set.iter().any(|&t| s < t && solver.table().on_geodesic(s, w, t)))
        });
        Witness::Rejected { set: formula_set.clone(), bound: LengthBound::Unbounded, uncovered }
    };
    match solver.minimum(LengthBound::Unbounded) {
        Err(e) => {
            report.expected = expected.to_string();
            if upper {
                report.skip_for(&e)
            } else {
                report.actual = "unknown".into();
                let w = rejected();
                report.note(e.to_string()).fail(graph, w)
            }
        }
        Ok(min) => {
            let report = report.values(expected, min.number);
            if !upper {
                let w = rejected();
                report.fail(graph, w)
            } else if min.number < expected {
                report.fail(graph, Witness::Valid { certificate: min.certificate, bound: LengthBound::Unbounded })
            } else {
                report
            }
        }
    }
}

fn theorem_report(case: &Case<'_>, claim: ClaimId) -> AuditReport {
    let report = case.report(claim);
    let bases = match case.bases() {
        Ok(b) => b,
        Err(e) => return report.skip_for(&e),
    };
    let sizes: Vec<String> = bases.iter().map(|b| b.len().to_string()).collect();
    let mut report = report.note(format!("s_i = {}", sizes.join(",")));
    let mut formula_set: Vec<Vertex> = (0..bases.len()).flat_map(|c| case.lifted(bases, c)).collect();
    let mut expected: usize = bases.iter().map(Certificate::len).sum();
    if case.product.variant() == Variant::EdgeCorona {
        let a = match case.a() {
            Ok(a) => a,
            Err(e) => return report.skip_for(&e),
        };
        report = report
            .note(format!("A = {}", format_set(a)))
            .note("A decided by exact re-assignment search over each pendant copy's 2-geodesics");
        formula_set.extend_from_slice(a);
        expected += a.len();
    }
    formula_set.sort_unstable();
    formula_check(report, case.graph(), formula_set, expected, case.cfg)
}

fn corollary_report(case: &Case<'_>, theorem: &AuditReport, claim: ClaimId) -> AuditReport {
    let mut report = theorem.clone();
    report.claim = claim;
    if let (Variant::EdgeCorona, Ok(bases), Ok(a)) = (case.product.variant(), case.bases(), case.a()) {
        let s = bases.first().map_or(0, Certificate::len);
        report.notes.push(format!(
            "copies = |E(G)| = {}; the order-based count n*s+|A| = {}",
            case.base.size(),
            case.base.order() * s + a.len()
        ));
    }
    report
}

fn satellites(case: &Case<'_>, copy: usize) -> std::ops::Range<Vertex> {
    case.product.copy_vertices(copy)
}

fn lemma1(case: &Case<'_>) -> AuditReport {
    let mut tally = Tally::new();
    let n = case.product.base_order();
    for i in 0..n {
        for j in i + 1..n {
            for p in satellites(case, i) {
                for q in satellites(case, j) {
                    for u in [i, j] {
                        let ok = case.table.on_geodesic(p, u, q);
                        tally.record(ok, || Witness::NotOnGeodesic { s: p, t: q, vertex: u });
                    }
                }
            }
        }
    }
    tally.finish(case.report(ClaimId::Lemma1), case.graph())
}

fn lemma2(case: &Case<'_>) -> AuditReport {
    let mut tally = Tally::new();
    for c in 0..case.product.copy_count() {
        for p in satellites(case, c) {
            for q in satellites(case, c).filter(|&q| q > p && !case.graph().has_edge(p, q)) {
                let d = case.table.raw(p, q);
                tally.record(d == 2, || Witness::Distance { u: p, v: q, expected: 2, actual: d });
            }
        }
    }
    tally.finish(case.report(ClaimId::Lemma2), case.graph())
}

/// No basis vertex of a copy lies on a geodesic from another basis vertex
/// of the same copy to a vertex outside it.
fn cross_copy(case: &Case<'_>, claim: ClaimId) -> AuditReport {
    let report = case.report(claim);
    let bases = match case.bases() {
        Ok(b) => b,
        Err(e) => return report.skip_for(&e),
    };
    let mut tally = Tally::new();
    for c in 0..bases.len() {
        let inside = satellites(case, c);
        let lifted = case.lifted(bases, c);
        for &b in &lifted {
            for &s in lifted.iter().filter(|&&s| s != b) {
                for x in case.graph().vertices().filter(|x| !inside.contains(x)) {
                    let ok = !case.table.on_geodesic(s, b, x);
                    tally.record(ok, || Witness::OnGeodesic { s, t: x, vertex: b });
                }
            }
        }
    }
    tally.finish(report, case.graph())
}

fn lemma4(case: &Case<'_>) -> AuditReport {
    let report = case.report(ClaimId::Lemma4);
    let (bases, a) = match case.bases().and_then(|b| Ok((b, case.a()?))) {
        Ok(r) => r,
        Err(e) => return report.skip_for(&e),
    };
    let edges = case.product.copy_edges();
    let mut tally = Tally::new();
    let mut uncoverable = Vec::new();
    let solver = match Solver::new(case.graph(), case.cfg.clone()) {
        Ok(s) => s,
        Err(e) => return report.skip_for(&e),
    };
    for u in 0..case.product.base_order() {
        let incident: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].0 == u || edges[e].1 == u).collect();
        if incident.len() >= 2 {
            for (x, &ea) in incident.iter().enumerate() {
                for &eb in &incident[x + 1..] {
                    for p in case.lifted(bases, ea) {
                        for q in case.lifted(bases, eb) {
                            let ok = case.table.on_geodesic(p, u, q);
                            tally.record(ok, || Witness::NotOnGeodesic { s: p, t: q, vertex: u });
                        }
                    }
                }
            }
        } else if let [copy] = incident[..] {
            let lifted = case.lifted(bases, copy);
            let mut pairs = Vec::new();
            for (x, &s) in lifted.iter().enumerate() {
                for &t in &lifted[x + 1..] {
                    pairs.push((s, t));
                }
            }
            let mut required: Vec<Vertex> = satellites(case, copy).filter(|v| !lifted.contains(v)).collect();
            required.push(u);
            let coverable = match solver.assign(&pairs, &required) {
                Ok(found) => found.is_some(),
                Err(e) => return report.skip_for(&e),
            };
            if !coverable {
                uncoverable.push(u);
            }
            let in_a = a.contains(&u);
            tally.record(coverable != in_a, || Witness::Slack { pendant: u, in_a, pairs, required });
        }
    }
    let report = report.note(format!(
        "A = {}, pendants not coverable from their copy: {}",
        format_set(a),
        format_set(&uncoverable)
    ));
    tally.finish(report, case.graph())
}

fn lemma6(case: &Case<'_>) -> AuditReport {
    let mut tally = Tally::new();
    for i in 0..case.product.base_order() {
        for &j in case.base.neighbors(i) {
            for p in satellites(case, i) {
                for q in satellites(case, j) {
                    let ok = case.table.on_geodesic(p, i, q);
                    tally.record(ok, || Witness::NotOnGeodesic { s: p, t: q, vertex: i });
                }
            }
        }
    }
    tally.finish(case.report(ClaimId::Lemma6), case.graph())
}

fn antipodal(table: &DistanceTable, u: Vertex, v: Vertex) -> bool {
    Some(table.raw(u, v)) == table.diameter()
}

fn prop1(case: &Case<'_>) -> AuditReport {
    let report = case.report(ClaimId::Prop1);
    let base_table = distances(case.base);
    let (Some(gd), Some(pd)) = (base_table.diameter(), case.table.diameter()) else {
        return report.skip(SkipReason::InvalidInstance).note("disconnected");
    };
    if pd != gd + 2 {
        let report = report.values(gd + 2, pd).note("diameter law");
        return report.fail(case.graph(), Witness::Diameter { expected: gd + 2, actual: pd });
    }
    let mut tally = Tally::new();
    let n = case.product.base_order();
    for i in 0..n {
        for j in i + 1..n {
            let expected = antipodal(&base_table, i, j);
            for p in satellites(case, i) {
                for q in satellites(case, j) {
                    let actual = antipodal(&case.table, p, q);
                    tally.record(actual == expected, || Witness::Antipodality { pair: (p, q), expected, actual });
                }
            }
        }
    }
    tally.finish(report.note(format!("diam = {pd} = diam(G) + 2")), case.graph())
}

fn prop3(case: &Case<'_>) -> AuditReport {
    let report = case.report(ClaimId::Prop3);
    let base_table = distances(case.base);
    let Some(gd) = base_table.diameter() else {
        return report.skip(SkipReason::InvalidInstance).note("disconnected");
    };
    let n = case.product.base_order();
    let mut tally = Tally::new();
    let check = |x: usize, y: usize, tally: &mut Tally| {
        for p in satellites(case, x) {
            for q in satellites(case, y) {
                let actual = antipodal(&case.table, p, q);
                tally.record(actual, || Witness::Antipodality { pair: (p.min(q), p.max(q)), expected: true, actual });
            }
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if base_table.raw(i, j) != gd {
                continue;
            }
            let common: Vec<Vertex> =
                case.base.neighbors(i).iter().copied().filter(|k| case.base.has_edge(*k, j)).collect();
            if common.is_empty() {
                check(i, j, &mut tally);
            } else {
                for k in common {
                    check(i, k, &mut tally);
                    check(j, k, &mut tally);
                }
            }
        }
    }
    tally.finish(report, case.graph())
}

fn invalid(claim: ClaimId, variant: Variant, base: &GraphRef, copies: &[GraphRef], why: String) -> AuditReport {
    AuditReport::new(claim, describe(variant, base, copies)).skip(SkipReason::InvalidInstance).note(why)
}

fn theorem_claim(variant: Variant) -> ClaimId {
    match variant {
        Variant::Corona => ClaimId::Theorem1,
        Variant::EdgeCorona => ClaimId::Theorem2,
        Variant::NeighborhoodCorona => ClaimId::Theorem3,
    }
}

fn single_theorem(variant: Variant, g: &GraphRef, hs: &[GraphRef], cfg: &SolveConfig) -> AuditReport {
    let claim = theorem_claim(variant);
    match Case::new(variant, g, hs, cfg) {
        Ok(case) => theorem_report(&case, claim),
        Err(why) => invalid(claim, variant, g, hs, why),
    }
}

/// Generalized corona: the union of per-copy strong 2-geodetic bases is a
/// minimum strong geodetic set, so `Sg = sum of s_i`.
pub fn audit_theorem1(g: &GraphRef, hs: &[GraphRef], cfg: &SolveConfig) -> AuditReport {
    single_theorem(Variant::Corona, g, hs, cfg)
}

/// Generalized edge corona: `Sg = sum of s_i + |A|` with `A` from [`compute_a`].
pub fn audit_theorem2(g: &GraphRef, hs: &[GraphRef], cfg: &SolveConfig) -> AuditReport {
    single_theorem(Variant::EdgeCorona, g, hs, cfg)
}

/// Generalized neighborhood corona: `Sg = sum of s_i`.
pub fn audit_theorem3(g: &GraphRef, hs: &[GraphRef], cfg: &SolveConfig) -> AuditReport {
    single_theorem(Variant::NeighborhoodCorona, g, hs, cfg)
}

/// Antipodality statements: the corona iff (with the diameter law) and the
/// neighborhood-corona implications. Metric only.
pub fn audit_props(variant: Variant, g: &GraphRef, hs: &[GraphRef]) -> AuditReport {
    let cfg = SolveConfig::default();
    let claim = if variant == Variant::NeighborhoodCorona { ClaimId::Prop3 } else { ClaimId::Prop1 };
    let case = match Case::new(variant, g, hs, &cfg) {
        Ok(case) => case,
        Err(why) => return invalid(claim, variant, g, hs, why),
    };
    match variant {
        Variant::Corona => prop1(&case),
        Variant::NeighborhoodCorona => prop3(&case),
        Variant::EdgeCorona => {
            case.report(claim).skip(SkipReason::NotApplicable).note("no antipodality claim for the edge corona")
        }
    }
}

/// Every claim that applies to the product, in claim order.
pub fn audit_product(variant: Variant, g: &GraphRef, hs: &[GraphRef], cfg: &SolveConfig) -> Vec<AuditReport> {
    audit_product_filtered(variant, g, hs, cfg, &|_| true)
}

pub(crate) fn audit_product_filtered(
    variant: Variant,
    g: &GraphRef,
    hs: &[GraphRef],
    cfg: &SolveConfig,
    want: &dyn Fn(ClaimId) -> bool,
) -> Vec<AuditReport> {
    let claims: &[ClaimId] = match variant {
        Variant::Corona => {
            &[ClaimId::Lemma1, ClaimId::Lemma2, ClaimId::Lemma3, ClaimId::Theorem1, ClaimId::Corollary1, ClaimId::Prop1]
        }
        Variant::EdgeCorona => &[ClaimId::Lemma4, ClaimId::Lemma5, ClaimId::Theorem2, ClaimId::Corollary2],
        Variant::NeighborhoodCorona => {
            &[ClaimId::Lemma6, ClaimId::Lemma7, ClaimId::Theorem3, ClaimId::Corollary3, ClaimId::Prop3]
        }
    };
    let case = match Case::new(variant, g, hs, cfg) {
        Ok(case) => case,
        Err(why) => {
            let claim = theorem_claim(variant);
            return if want(claim) { vec![invalid(claim, variant, g, hs, why)] } else { Vec::new() };
        }
    };
    let theorem = theorem_claim(variant);
    let mut theorem_cache: Option<AuditReport> = None;
    let mut reports = Vec::new();
    for &claim in claims.iter().filter(|&&c| want(c)) {
        let report = match claim {
            ClaimId::Lemma1 => lemma1(&case),
            ClaimId::Lemma2 => lemma2(&case),
            ClaimId::Lemma3 | ClaimId::Lemma5 | ClaimId::Lemma7 => cross_copy(&case, claim),
            ClaimId::Lemma4 => lemma4(&case),
            ClaimId::Lemma6 => lemma6(&case),
            ClaimId::Prop1 => prop1(&case),
            ClaimId::Prop3 => prop3(&case),
            ClaimId::Theorem1 | ClaimId::Theorem2 | ClaimId::Theorem3 => {
                theorem_cache.get_or_insert_with(|| theorem_report(&case, theorem)).clone()
            }
            _ => {
                if !case.uniform {
                    continue;
                }
                let theorem = theorem_cache.get_or_insert_with(|| theorem_report(&case, theorem));
                corollary_report(&case, theorem, claim)
            }
        };
        reports.push(report);
    }
    reports
}

/// Corona graphs: `Sg(G^(m+1)) = Sg'(G) * n(n+1)^m`, the formula set being
/// the lifted bases of the outermost copies of `G`.
pub fn audit_theorem1a(g: &GraphRef, m: u32, cfg: &SolveConfig) -> AuditReport {
    let report = AuditReport::new(ClaimId::Theorem1a, format!("iterated {} m={m}", g.name));
    let basis = match Solver::new(&g.graph, cfg.clone()).and_then(|s| s.minimum(LengthBound::TWO)) {
        Ok(r) => r.certificate.basis().to_vec(),
        Err(e) => return report.skip_for(&e),
    };
    let big = match iterated_corona(&g.graph, m + 1) {
        Ok(big) => big,
        Err(e) => return report.skip(SkipReason::ResourceCap).note(e.to_string()),
    };
    if big.order() > cfg.max_vertices {
        let e = SolveError::VertexCap { n: big.order(), cap: cfg.max_vertices };
        return report.skip_for(&e);
    }
    let n = g.graph.order();
    let inner = big.order() / (n + 1);
    let set: Vec<Vertex> = (0..inner).flat_map(|c| basis.iter().map(move |&b| inner + c * n + b)).collect();
    let expected = basis.len() * inner;
    let report = report.note(format!("s = {}, n(n+1)^m = {inner}", basis.len()));
    formula_check(report, &big, set, expected, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::Verdict;

    fn r(s: &str) -> GraphRef {
        s.parse().unwrap()
    }

    fn cfg() -> SolveConfig {
        SolveConfig::default()
    }

    #[test]
    fn lemma0_examples() {
        let fig = audit_lemma0(&r("DS2-2"), &cfg());
        assert_eq!(fig.verdict, Verdict::Pass);
        assert_eq!(fig.actual, "basis {0,3,4,5}");
        let c5 = audit_lemma0(&r("C5"), &cfg());
        assert_eq!(c5.verdict, Verdict::Pass);
        assert!(c5.notes.iter().any(|n| n == "no pendant vertices"));
        assert_eq!(audit_lemma0(&r("S4"), &cfg()).actual, "basis {1,2,3,4}");
    }

    #[test]
    fn result1_examples() {
        assert_eq!(audit_result1(&r("C5"), &cfg()).verdict, Verdict::Pass);
        assert_eq!(audit_result1(&r("K4"), &cfg()).actual, "Sg = 4, Sg' = 4");
        let fig = audit_result1(&r("DS2-2"), &cfg());
        assert_eq!(fig.verdict, Verdict::Skipped(SkipReason::Precondition));
        assert!(fig.notes.iter().any(|n| n == "Sg and Sg' are equal"));
    }

    #[test]
    fn worked_example_is_nine() {
        let hs = [r("P2"), r("K4"), r("C5")];
        let report = audit_theorem1(&r("C3"), &hs, &cfg());
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!((report.expected.as_str(), report.actual.as_str()), ("9", "9"));
        assert_eq!(report.upper_bound, Some(true));
    }

    #[test]
    fn slack_set() {
        let cfg = cfg();
        let with_k3 = crate::corona::uniform(Variant::EdgeCorona, &r("P3").graph, &r("K3").graph).unwrap();
        let k3 = Solver::new(&r("K3").graph, cfg.clone()).unwrap().minimum(LengthBound::TWO).unwrap().certificate;
        assert_eq!(compute_a(&with_k3, &[k3.clone(), k3], &cfg).unwrap(), vec![0, 2]);

        let c3 = crate::corona::uniform(Variant::EdgeCorona, &r("C3").graph, &r("P2").graph).unwrap();
        let p2 = Solver::new(&r("P2").graph, cfg.clone()).unwrap().minimum(LengthBound::TWO).unwrap().certificate;
        assert!(compute_a(&c3, &vec![p2; 3], &cfg).unwrap().is_empty());
    }

    #[test]
    fn edge_variant_has_no_prop() {
        let report = audit_props(Variant::EdgeCorona, &r("C3"), &[r("K1"), r("K1"), r("K1")]);
        assert_eq!(report.verdict, Verdict::Skipped(SkipReason::NotApplicable));
    }

    #[test]
    fn k1_copies_are_degenerate_for_formulas() {
        let k1 = r("K1");
        let report = audit_theorem1(&r("P2"), &[k1.clone(), k1], &cfg());
        assert_eq!(report.verdict, Verdict::Skipped(SkipReason::Degenerate));
    }
}
