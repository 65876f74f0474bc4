//! One function per command-line verification. Each returns the JSON
//! report, a human-readable rendering and the verdict.

use std::fmt::Write as _;

use serde::Serialize;

use crate::codes::{five_qubit_listing, mermin_listing, weight_range, CodeDefinition, CodeName, Normalization};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ks::{
    build_ks_set, canonical_contexts, declared_colorability, enumerate_contexts, ks_colorability, Context,
    ContextSet, OrthogonalityGraph, SearchStats, Verdict, VertexRecord,
};
use crate::paradox::array::{canonical_array, check_array, ArrayReport};
use crate::paradox::parity::{canonical_pentagon_instance, check_parity_contradiction, pentagon, ParityReport, Pentagon};
use crate::paradox::reality::{compatible_pairs, find_determinations};
use crate::paradox::search::{search_parity_contradictions, SearchOptions, SearchOutcome};
use crate::pauli::{PauliLetter, PauliString, Sign};
use crate::report::{Report, ReportVerdict};
use crate::selftest::{self, SelftestConfig, SelftestReport};
use crate::stabilizer::{
    bit_flip_errors, knill_laflamme_check, single_qubit_errors, Codeword, ErrorPairCheck, StabilizerElement,
    StabilizerGroup, StabilizesReport,
};
use crate::statevector::eigensign;

pub struct Outcome {
    pub command: &'static str,
    pub code: Option<CodeName>,
    pub verdict: ReportVerdict,
    pub json: String,
    pub text: String,
}

impl Outcome {
    fn new<T: Serialize>(command: &'static str, code: Option<CodeName>, verdict: ReportVerdict, details: T, text: String) -> Self {
        let json = Report::new(command, code.map(CodeName::as_str), verdict, details).to_json();
        Self { command, code, verdict, json, text }
    }

    /// File name used when reports are written to a directory.
    pub fn file_name(&self) -> String {
        match self.code {
            Some(c) => format!("{}-{}.json", self.command, c.as_str()),
            None => format!("{}.json", self.command),
        }
    }
}

// ---- verify-code ----

#[derive(Serialize)]
pub struct KnillLaflammeSummary {
    pub error_set: &'static str,
    pub errors: Vec<PauliString>,
    pub pairs_checked: usize,
    pub failures: usize,
    pub expected_to_pass: bool,
    pub passed: bool,
    pub first_failure: Option<ErrorPairCheck>,
}

#[derive(Serialize)]
pub struct VerifyCodeDetails {
    pub qubits: usize,
    pub normalization: Normalization,
    pub codewords_orthogonal: bool,
    pub group_order: usize,
    pub expected_group_order: usize,
    pub abelian: bool,
    pub closed: bool,
    pub stabilizes: StabilizesReport,
    pub invariant_subgroup_order: usize,
    /// Agreement with the tabulated signed listing, where one exists.
    pub listing_matches: Option<bool>,
    pub weight_range: Option<(usize, usize)>,
    pub weights_within_3_to_7: Option<bool>,
    pub knill_laflamme: Vec<KnillLaflammeSummary>,
    pub generators: Vec<String>,
    pub group: Vec<String>,
}

fn listing_matches(group: &StabilizerGroup, listing: &[StabilizerElement]) -> bool {
    listing.len() == group.order() && listing.iter().all(|e| group.get(&e.op) == Some(e))
}

fn kl_summary(code: &CodeDefinition, error_set: &'static str, errors: Vec<PauliString>, expected: bool, exec: Exec) -> Result<KnillLaflammeSummary> {
    let r = knill_laflamme_check(&code.codeword0, &code.codeword1, &errors, exec)?;
    let first_failure = r.failures().next().cloned();
    Ok(KnillLaflammeSummary {
        error_set,
        pairs_checked: r.pairs.len(),
        failures: r.failures().count(),
        expected_to_pass: expected,
        passed: r.passed(),
        first_failure,
        errors,
    })
}

fn phase_flip_errors(n: usize) -> Result<Vec<PauliString>> {
    let mut out = vec![PauliString::identity(n)?];
    for site in 0..n {
        out.push(PauliString::single(n, site, PauliLetter::Z)?);
    }
    Ok(out)
}

pub fn verify_code(name: CodeName, exec: Exec) -> Result<Outcome> {
    let code = name.build()?;
    let group = code.group()?;
    let stabilizes = group.verify_stabilizes(&code.codeword0, &code.codeword1)?;
    let invariant = group.invariant_subgroup()?;
    let n = code.n;
    let knill_laflamme = match name {
        CodeName::Five | CodeName::Steane => vec![kl_summary(&code, "single-qubit", single_qubit_errors(n)?, true, exec)?],
        CodeName::Mermin => vec![
            kl_summary(&code, "bit-flip", bit_flip_errors(n)?, true, exec)?,
            kl_summary(&code, "phase-flip", phase_flip_errors(n)?, false, exec)?,
        ],
    };
    let listing = match name {
        CodeName::Five => Some(listing_matches(&group, &five_qubit_listing()?)),
        CodeName::Mermin => Some(listing_matches(&group, &mermin_listing()?)),
        CodeName::Steane => None,
    };
    let wr = weight_range(&group);
    let weights_ok = (name == CodeName::Steane).then(|| wr.is_some_and(|(lo, hi)| lo >= 3 && hi <= 7));
    let details = VerifyCodeDetails {
        qubits: n,
        normalization: code.normalization,
        codewords_orthogonal: code.codewords_orthogonal()?,
        group_order: group.order(),
        expected_group_order: code.expected_group_order,
        abelian: group.is_abelian(),
        closed: group.is_closed(),
        stabilizes,
        invariant_subgroup_order: invariant.order(),
        listing_matches: listing,
        weight_range: wr,
        weights_within_3_to_7: weights_ok,
        knill_laflamme,
        generators: code.generators.iter().map(StabilizerElement::to_line).collect(),
        group: group.to_lines(),
    };
    let ok = details.codewords_orthogonal
        && details.group_order == details.expected_group_order
        && details.abelian
        && details.closed
        && details.stabilizes.passed()
        && details.listing_matches != Some(false)
        && details.weights_within_3_to_7 != Some(false)
        && details.knill_laflamme.iter().all(|k| k.passed == k.expected_to_pass);

    let mut t = String::new();
    let _ = writeln!(t, "code {name}: {n} qubits, group order {} (expected {})", details.group_order, details.expected_group_order);
    let _ = writeln!(t, "  abelian {}, closed {}, codewords orthogonal {}", details.abelian, details.closed, details.codewords_orthogonal);
    let _ = writeln!(
        t,
        "  stabilizes: {} elements checked, {} violations",
        details.stabilizes.checked,
        details.stabilizes.violations.len()
    );
    let _ = writeln!(t, "  sign-stable subgroup order {}", details.invariant_subgroup_order);
    if let Some(m) = details.listing_matches {
        let _ = writeln!(t, "  matches tabulated listing: {m}");
    }
    if let Some((lo, hi)) = details.weight_range {
        let _ = writeln!(t, "  non-identity weights {lo}..={hi}");
    }
    for k in &details.knill_laflamme {
        let _ = writeln!(
            t,
            "  Knill-Laflamme ({}): {} ({} of {} pairs fail; expected {})",
            k.error_set,
            if k.passed { "pass" } else { "fail" },
            k.failures,
            k.pairs_checked,
            if k.expected_to_pass { "pass" } else { "fail" }
        );
    }
    let verdict = ReportVerdict::from_pass(ok);
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    Ok(Outcome::new("verify-code", Some(name), verdict, details, t))
}

// ---- reality ----

#[derive(Serialize)]
pub struct DeterminationRecord {
    pub witness: PauliString,
    pub witness_label: String,
    pub predicted_product: Sign,
    pub element: PauliString,
    /// The element's eigenvalue on the codeword equals `predicted_product`.
    pub verified: bool,
}

#[derive(Serialize)]
pub struct PairRecord {
    pub first: usize,
    pub second: usize,
    pub first_witness: String,
    pub second_witness: String,
}

#[derive(Serialize)]
pub struct RealityDetails {
    pub codeword: Codeword,
    pub site: usize,
    pub letter: PauliLetter,
    pub target: String,
    pub determinations: Vec<DeterminationRecord>,
    pub compatible_pairs: Vec<PairRecord>,
}

/// `site` is 1-based.
pub fn reality(name: CodeName, codeword: Codeword, site: usize, letter: PauliLetter) -> Result<Outcome> {
    let code = name.build()?;
    let group = code.group()?;
    if site == 0 || site > code.n {
        return Err(Error::SiteOutOfRange { site, n: code.n });
    }
    let state = code.codeword(codeword);
    let ds = find_determinations(&group, codeword, site - 1, letter)?;
    let pairs = compatible_pairs(&ds);
    let mut records = Vec::new();
    for d in &ds {
        let verified = eigensign(&d.element, state)? == Some(d.predicted_product);
        records.push(DeterminationRecord {
            witness: d.witness,
            witness_label: d.witness.sigma_label(),
            predicted_product: d.predicted_product,
            element: d.element,
            verified,
        });
    }
    let details = RealityDetails {
        codeword,
        site,
        letter,
        target: format!("σ{site}{}", letter.as_lower()),
        compatible_pairs: pairs
            .iter()
            .map(|&(i, j)| PairRecord {
                first: i + 1,
                second: j + 1,
                first_witness: records[i].witness_label.clone(),
                second_witness: records[j].witness_label.clone(),
            })
            .collect(),
        determinations: records,
    };
    let ok = details.determinations.iter().all(|d| d.verified);
    let mut t = String::new();
    let _ = writeln!(t, "{} on {} of code {name}: {} determinations", details.target, codeword.label(), details.determinations.len());
    for (k, d) in details.determinations.iter().enumerate() {
        let _ = writeln!(
            t,
            "  {:>2}. v({}) = {} · v({})",
            k + 1,
            details.target,
            d.predicted_product,
            d.witness_label
        );
    }
    let _ = writeln!(t, "compatible pairs: {}", details.compatible_pairs.len());
    for p in &details.compatible_pairs {
        let _ = writeln!(t, "  ({}, {})  {}  |  {}", p.first, p.second, p.first_witness, p.second_witness);
    }
    let verdict = ReportVerdict::from_pass(ok);
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    Ok(Outcome::new("reality", Some(name), verdict, details, t))
}

// ---- pentagon ----

#[derive(Serialize)]
pub struct PentagonCase {
    pub codeword: Codeword,
    pub parity: ParityReport,
    pub pentagon: Pentagon,
    pub every_symbol_twice: bool,
}

#[derive(Serialize)]
pub struct PentagonDetails {
    pub cases: Vec<PentagonCase>,
}

pub fn pentagon_command() -> Result<Outcome> {
    let code = CodeName::Five.build()?;
    let group = code.group()?;
    let mut cases = Vec::new();
    for cw in Codeword::BOTH {
        let inst = canonical_pentagon_instance(&group, code.codeword(cw), cw)?;
        let parity = check_parity_contradiction(&inst)?;
        let every_symbol_twice = parity.multiplicities.iter().all(|m| m.count == 2);
        cases.push(PentagonCase { codeword: cw, pentagon: pentagon(&inst)?, parity, every_symbol_twice });
    }
    let ok = cases.iter().all(|c| c.parity.contradiction && c.parity.product_route_agrees && c.every_symbol_twice);
    let mut t = String::new();
    for c in &cases {
        let _ = writeln!(t, "{}:", c.codeword.label());
        for o in &c.parity.operators {
            let _ = writeln!(t, "  {:>2}  {}", o.eigenvalue, o.op.sigma_label());
        }
        for s in &c.pentagon.sides {
            let _ = writeln!(t, "  side {} - {} - {}: product {}", s.from_vertex, s.middle, s.to_vertex, s.product);
        }
        let _ = writeln!(
            t,
            "  centre product {}, {} distinct symbols, eigenvalue product {}, operator product {}, contradiction {}",
            c.pentagon.center_product,
            c.pentagon.distinct_symbols,
            c.parity.eigenvalue_product,
            c.parity.operator_product.map_or("not ±1".to_string(), |s| s.to_string()),
            c.parity.contradiction
        );
    }
    let verdict = ReportVerdict::from_contradiction(ok);
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    Ok(Outcome::new("pentagon", Some(CodeName::Five), verdict, PentagonDetails { cases }, t))
}

// ---- array ----

#[derive(Serialize)]
pub struct ArrayDetails {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<String>>,
    pub check: ArrayReport,
}

pub fn array_command() -> Result<Outcome> {
    let arr = canonical_array()?;
    let check = check_array(&arr)?;
    let cells: Vec<Vec<String>> =
        (0..arr.rows()).map(|r| arr.row(r).iter().map(PauliString::sigma_label).collect()).collect();
    let ok = check.all_lines_match()
        && check.impossible
        && check.rows.iter().all(|l| l.product == Some(Sign::Plus))
        && check.cols[..12].iter().all(|l| l.product == Some(Sign::Plus))
        && check.cols[12].product == Some(Sign::Minus);
    let mut t = String::new();
    for (r, row) in cells.iter().enumerate() {
        let _ = writeln!(t, "row {}: {}", r + 1, row.join(" | "));
    }
    for l in check.rows.iter().map(|l| ("row", l)).chain(check.cols.iter().map(|l| ("column", l))) {
        let _ = writeln!(
            t,
            "{} {:>2}: commuting {}, product {}",
            l.0,
            l.1.index,
            l.1.commuting,
            l.1.product.map_or("not ±1".to_string(), |s| s.to_string())
        );
    }
    let _ = writeln!(t, "impossible assignment: {}", check.impossible);
    let verdict = ReportVerdict::from_contradiction(ok);
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    let details = ArrayDetails { rows: arr.rows(), cols: arr.cols(), cells, check };
    Ok(Outcome::new("array", Some(CodeName::Five), verdict, details, t))
}

// ---- ks ----

#[derive(Serialize)]
pub struct CompositionCount {
    pub kets: usize,
    pub mutations: usize,
    pub rows: usize,
    pub contexts: usize,
}

#[derive(Serialize)]
pub struct KsExport {
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<(usize, usize)>,
    pub contexts: Vec<Context>,
}

#[derive(Serialize)]
pub struct SubInstance {
    pub description: &'static str,
    pub vertices: usize,
    pub contexts: usize,
    pub verdict: Verdict,
}

#[derive(Serialize)]
pub struct KsDetails {
    pub vertices: usize,
    pub rank_one: usize,
    pub rank_four: usize,
    pub dimension: usize,
    pub ratio: f64,
    pub edges: usize,
    pub contexts: usize,
    pub context_search_nodes: u64,
    pub context_composition: Vec<CompositionCount>,
    pub canonical_contexts_found: bool,
    pub verdict: Verdict,
    pub sub_instances: Vec<SubInstance>,
    pub export: Option<KsExport>,
}

pub const DEFAULT_KS_BUDGET: u64 = 10_000_000;

pub fn ks_command(budget: u64, export: bool, exec: Exec) -> Result<Outcome> {
    let g = OrthogonalityGraph::build(build_ks_set()?, exec)?;
    let contexts = enumerate_contexts(&g, budget, exec)?;
    let verdict = ks_colorability(&g, &contexts)?;

    let canon = canonical_contexts(&g);
    let canonical_found = canon.iter().all(|c| contexts.contexts.contains(c));
    let mut sub_instances = vec![SubInstance {
        description: "seven canonical contexts with all orthogonality edges",
        vertices: g.len(),
        contexts: canon.len(),
        verdict: declared_colorability(&g, &ContextSet::declared(canon))?,
    }];
    let rank_one: Vec<usize> = (0..g.len()).filter(|&v| g.rank(v) == 1).collect();
    let sub = g.subgraph(&rank_one);
    let sub_contexts = enumerate_contexts(&sub, budget, exec)?;
    sub_instances.push(SubInstance {
        description: "rank-1 vertices only, all of their contexts",
        vertices: sub.len(),
        contexts: sub_contexts.len(),
        verdict: ks_colorability(&sub, &sub_contexts)?,
    });
    let basis_pair = ContextSet::declared(canonical_contexts(&sub));
    sub_instances.push(SubInstance {
        description: "rank-1 vertices only, the two basis contexts",
        vertices: sub.len(),
        contexts: basis_pair.len(),
        verdict: declared_colorability(&sub, &basis_pair)?,
    });

    let rank_one_count = rank_one.len();
    let dimension = 1usize << g.vertices()[0].projector.n();
    let details = KsDetails {
        vertices: g.len(),
        rank_one: rank_one_count,
        rank_four: g.vertices().iter().filter(|v| v.rank() == 4).count(),
        dimension,
        ratio: g.len() as f64 / dimension as f64,
        edges: g.edge_count(),
        contexts: contexts.len(),
        context_search_nodes: contexts.nodes,
        context_composition: contexts
            .composition_census(&g)
            .into_iter()
            .map(|((kets, mutations, rows), n)| CompositionCount { kets, mutations, rows, contexts: n })
            .collect(),
        canonical_contexts_found: canonical_found,
        verdict,
        sub_instances,
        export: export.then(|| KsExport {
            vertices: g.vertices().iter().map(VertexRecord::from).collect(),
            edges: g.edges().to_vec(),
            contexts: contexts.contexts.clone(),
        }),
    };
    let ok = details.verdict.is_unsat() && canonical_found;

    let mut t = String::new();
    let _ = writeln!(
        t,
        "{} projectors ({} rank 1, {} rank 4) in dimension {}: ratio {}",
        details.vertices, details.rank_one, details.rank_four, dimension, details.ratio
    );
    let _ = writeln!(t, "{} orthogonal pairs", details.edges);
    let _ = writeln!(t, "{} contexts ({} search nodes); canonical seven present: {}", details.contexts, details.context_search_nodes, canonical_found);
    for c in &details.context_composition {
        let _ = writeln!(t, "  {:>2} × ({} kets, {} mutations, {} rank-4)", c.contexts, c.kets, c.mutations, c.rows);
    }
    let _ = writeln!(t, "KS1/KS2 colouring: {}", render_verdict(&details.verdict, &g));
    for s in &details.sub_instances {
        let _ = writeln!(t, "  sub-instance [{}]: {}", s.description, render_short(&s.verdict));
    }
    let verdict = ReportVerdict::from_contradiction(ok);
    if !details.verdict.is_unsat() {
        let _ = writeln!(t, "!!! a consistent colouring exists: the non-colourability claim is FALSIFIED !!!");
    }
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    Ok(Outcome::new("ks", Some(CodeName::Five), verdict, details, t))
}

fn render_short(v: &Verdict) -> String {
    let SearchStats { nodes, propagations } = v.stats();
    let word = if v.is_unsat() { "UNSAT" } else { "SAT" };
    format!("{word} ({nodes} nodes, {propagations} propagations)")
}

fn render_verdict(v: &Verdict, g: &OrthogonalityGraph) -> String {
    match v {
        Verdict::Unsat { .. } => render_short(v),
        Verdict::Sat { true_vertices, .. } => {
            let labels: Vec<String> = true_vertices.iter().map(|&i| g.vertices()[i].label()).collect();
            format!("{}; true vertices: {}", render_short(v), labels.join(", "))
        }
    }
}

// ---- steane-search ----

#[derive(Serialize)]
pub struct SteaneSearchDetails {
    pub group_order: usize,
    pub max_subset: usize,
    pub per_size_limit: Option<usize>,
    pub node_budget: u64,
    pub largest_size_found: Option<usize>,
    pub outcome: SearchOutcome,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

pub fn steane_search(max_subset: usize, codeword: Codeword, per_size_limit: Option<usize>, node_budget: u64, exec: Exec) -> Result<Outcome> {
    let code = CodeName::Steane.build()?;
    let group = code.group()?;
    let opts = SearchOptions { min_subset: 1, max_subset, per_size_limit, node_budget, exec };
    let outcome = search_parity_contradictions(&group, code.codeword(codeword), codeword, &opts)?;
    let ok = !outcome.instances.is_empty();
    let mut t = String::new();
    let _ = writeln!(
        t,
        "Steane group order {}, {} non-identity elements, symbol rank {}, nullspace dimension {}",
        group.order(),
        outcome.elements,
        outcome.symbol_rank,
        outcome.nullspace_dim
    );
    for s in &outcome.sizes {
        let _ = writeln!(
            t,
            "  size {:>2}: {} even subsets visited, {} contradictions kept{}",
            s.size,
            s.even_candidates,
            s.contradictions,
            if s.truncated { " (limit reached)" } else { "" }
        );
    }
    for r in &outcome.instances {
        let ops: Vec<String> = r.operators.iter().map(|o| format!("{}{}", o.eigenvalue.as_char(), o.op.letters_text())).collect();
        let _ = writeln!(t, "  [{}] {}", r.operators.len(), ops.join(" "));
    }
    let verdict = ReportVerdict::from_contradiction(ok);
    let _ = writeln!(t, "minimum contradiction size: {}", outcome.min_size.map_or("none".into(), |s| s.to_string()));
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    let details = SteaneSearchDetails {
        group_order: group.order(),
        max_subset,
        per_size_limit,
        node_budget,
        largest_size_found: outcome.instances.last().map(|r| r.operators.len()),
        outcome,
    };
    Ok(Outcome::new("steane-search", Some(CodeName::Steane), verdict, details, t))
}

// ---- selftest ----

pub fn selftest_command(config: SelftestConfig, exec: Exec) -> Result<Outcome> {
    let r: SelftestReport = selftest::run(config, exec)?;
    let mut t = String::new();
    let _ = writeln!(t, "seed {}: {} random pairs (1-3 qubits), {} random triples (5 qubits)", config.seed, config.pairs, config.triples);
    let _ = writeln!(
        t,
        "  mismatches: multiplication {}, commutation {}, action {}, composition {}",
        r.multiplication_mismatches, r.commutation_mismatches, r.action_mismatches, r.composition_mismatches
    );
    let verdict = ReportVerdict::from_pass(r.passed());
    let _ = writeln!(t, "verdict: {}", verdict.as_str());
    Ok(Outcome::new("selftest", None, verdict, r, t))
}
