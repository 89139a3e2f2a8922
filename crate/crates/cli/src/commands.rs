use std::fmt::Write as _;
use std::fs;

use bei::edge_ideal::{
    binomial_edge_ideal_over, colon_generators_over, cut_sets, minimal_primes_over, CutSetFamily,
};
use bei::io::cache::ResultCache;
use bei::io::report::{emit_report, ReportFormat};
use bei::io::{detect_format, graph6, parse_graph_input};
use bei::poly::{Ideal, PrimeField};
use bei::resolution::{betti_table_with_order, BettiTable, ModuleTag};
use bei::verify::{
    check_clique_multiplicativity, check_join_cutsets, check_join_reg, run_census, run_check, run_join_checks,
    CensusOptions, Check, CheckResult, GraphContext, Verdict,
};
use bei::{Edge, Error, Graph, Result};
use serde_json::json;

use crate::{Cli, Command, FormatArg, GlobalOpts, GraphArgs, GraphSource, Outcome};

pub fn run(cli: &Cli) -> Result<Outcome> {
    let opts = &cli.opts;
    let field = opts.field()?;
    match &cli.command {
        Command::Reg(g) => print_reg(&load(g)?, field, opts),
        Command::Betti(g) => print_betti(&load(g)?, field, opts),
        Command::Gb(g) => print_gb(&load(g)?, field, opts),
        Command::Primes(g) => print_primes(&load(g)?, field, opts),
        Command::Cutsets(g) => print_cutsets(&load(g)?, opts),
        Command::Colon { graph, edge, check } => print_colon(&load(graph)?, edge, *check, field, opts),
        Command::Alpha(g) => print_alpha(&load(g)?, opts),
        Command::Join { left, right } => {
            let (g1, g2) = (graph6::decode(left)?, graph6::decode(right)?);
            print_join(&g1, &g2, field, opts)
        }
        Command::Census { nmax, checks } => {
            let checks = parse_checks(checks)?;
            if checks.iter().any(|c| c.is_pair_check()) {
                return Err(Error::Domain("pair checks run through `bei verify <check> --nmax k`".into()));
            }
            let mut census = census_options(*nmax, opts, field)?;
            if !checks.is_empty() {
                census.checks = checks;
            }
            let records = run_census(&census)?;
            print!("{}", emit_report(&records, report_format(opts))?);
            let failed = records.iter().any(|r| r.failures().next().is_some());
            Ok(if failed { Outcome::CheckFailed } else { Outcome::Pass })
        }
        Command::Verify { check, nmax, edges, file, graph6, vertices } => {
            let check: Check = check.parse()?;
            let results = match nmax {
                Some(n) => {
                    let census = census_options(*n, opts, field)?.with_checks(&[check]);
                    if check.is_pair_check() {
                        run_join_checks(&census)?
                    } else {
                        run_census(&census)?.into_iter().flat_map(|r| r.verdicts).collect()
                    }
                }
                None => {
                    if check.is_pair_check() {
                        return Err(Error::Domain(format!("{check} needs two graphs; use `bei join` or --nmax")));
                    }
                    let source = GraphSource { edges: edges.clone(), file: file.clone(), graph6: graph6.clone() };
                    let g = load(&GraphArgs { source, vertices: *vertices })?;
                    let ctx = GraphContext::new(&g, field)?;
                    run_check(&ctx, check)?
                }
            };
            print!("{}", render_results(&results, opts.format)?);
            Ok(outcome(&results))
        }
    }
}

fn report_format(opts: &GlobalOpts) -> ReportFormat {
    match opts.format {
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Text => ReportFormat::Text,
    }
}

fn census_options(nmax: usize, opts: &GlobalOpts, field: PrimeField) -> Result<CensusOptions> {
    let mut census = CensusOptions::new(nmax).with_jobs(opts.jobs);
    census.field = field;
    census.ceiling = opts.ceiling;
    if let (Some(dir), false) = (&opts.cache_dir, opts.no_cache) {
        census.cache = Some(ResultCache::open(dir)?);
    }
    Ok(census)
}

fn parse_checks(names: &[String]) -> Result<Vec<Check>> {
    names.iter().filter(|s| !s.is_empty()).map(|s| s.trim().parse()).collect()
}

fn outcome(results: &[CheckResult]) -> Outcome {
    if results.iter().all(CheckResult::passed) {
        Outcome::Pass
    } else {
        Outcome::CheckFailed
    }
}

fn parse_inline_edges(text: &str, vertices: Option<usize>) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut column = 1;
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if !tok.is_empty() {
            let bad = || Error::Parse { line: 1, column, msg: format!("expected an edge like 1-2, found {tok:?}") };
            let (a, b) = tok.split_once('-').ok_or_else(bad)?;
            pairs.push((a.trim().parse::<usize>().map_err(|_| bad())?, b.trim().parse::<usize>().map_err(|_| bad())?));
        }
        column += tok.len() + 1;
    }
    let max_label = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    let n = vertices.unwrap_or(max_label);
    if n < max_label {
        return Err(Error::Validation(format!("label {max_label} exceeds --vertices {n}")));
    }
    Graph::from_edges(n, pairs)
}

fn load(args: &GraphArgs) -> Result<Graph> {
    let src = &args.source;
    if let Some(edges) = &src.edges {
        return parse_inline_edges(edges, args.vertices);
    }
    if let Some(g6) = &src.graph6 {
        return graph6::decode(g6.trim());
    }
    let Some(path) = src.file.as_ref() else {
        return Err(Error::Domain("give one of --edges, --file or --graph6".into()));
    };
    let text = fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), source: e })?;
    parse_graph_input(&text, detect_format(&text))
}

fn parse_edge(text: &str) -> Result<Edge> {
    let bad = || Error::Parse { line: 1, column: 1, msg: format!("expected an edge like 1-2, found {text:?}") };
    let (a, b) = text.split_once('-').ok_or_else(bad)?;
    let (a, b) = (a.trim().parse::<usize>().map_err(|_| bad())?, b.trim().parse::<usize>().map_err(|_| bad())?);
    if a == b || a == 0 || b == 0 {
        return Err(Error::Validation(format!("{text} is not an edge between two distinct vertices")));
    }
    Ok(Edge::new(a, b))
}

fn key_of(g: &Graph) -> String {
    g.canonical_form()
        .map(|k| k.as_str().to_string())
        .unwrap_or_else(|_| graph6::encode(g))
}

/// Betti table of `S/J_G`; for the zero ideal that is the free module `S`.
fn quotient_table(ideal: &Ideal, opts: &GlobalOpts) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Ok(BettiTable::new(ModuleTag::Quotient, [((0, 0), 1)]));
    }
    Ok(betti_table_with_order(ideal, opts.monomial_order())?.to_quotient())
}

fn print_reg(g: &Graph, field: PrimeField, opts: &GlobalOpts) -> Result<Outcome> {
    let ideal = binomial_edge_ideal_over(g, field)?;
    let table = quotient_table(&ideal, opts)?;
    let reg_s = table.regularity().unwrap_or(0);
    let reg_j = if ideal.is_zero() { 0 } else { reg_s + 1 };
    let key = key_of(g);
    match opts.format {
        FormatArg::Json => println!(
            "{}",
            json!({"key": key, "n": g.n(), "reg": reg_j, "reg_quotient": reg_s, "zero_ideal": ideal.is_zero()})
        ),
        FormatArg::Csv => print!("key,n,reg,reg_quotient\n{key},{},{reg_j},{reg_s}\n", g.n()),
        FormatArg::Text => {
            print!("reg(J)={reg_j} reg(S/J)={reg_s}");
            if ideal.is_zero() {
                print!("  (edgeless graph: J is zero, reg recorded as 0)");
            }
            println!();
        }
    }
    Ok(Outcome::Pass)
}

fn print_betti(g: &Graph, field: PrimeField, opts: &GlobalOpts) -> Result<Outcome> {
    let table = quotient_table(&binomial_edge_ideal_over(g, field)?, opts)?;
    match opts.format {
        FormatArg::Json => println!("{}", serde_json::to_string_pretty(&table)?),
        FormatArg::Csv => print!("{}", table.to_csv()),
        FormatArg::Text => print!("{}", table.to_text()),
    }
    Ok(Outcome::Pass)
}

fn print_gb(g: &Graph, field: PrimeField, opts: &GlobalOpts) -> Result<Outcome> {
    let ideal = binomial_edge_ideal_over(g, field)?;
    let ring = ideal.ring();
    let basis: Vec<String> = if ideal.is_zero() {
        Vec::new()
    } else {
        ideal.groebner(opts.monomial_order()).polys().iter().map(|p| ring.format_poly(p)).collect()
    };
    match opts.format {
        FormatArg::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({"ring": ring, "order": opts.monomial_order().to_string(), "basis": basis}))?
        ),
        FormatArg::Csv => {
            println!("generator");
            basis.iter().for_each(|b| println!("{b}"));
        }
        FormatArg::Text => basis.iter().for_each(|b| println!("{b}")),
    }
    Ok(Outcome::Pass)
}

fn labels(t: bei::VertexSet) -> String {
    t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_primes(g: &Graph, field: PrimeField, opts: &GlobalOpts) -> Result<Outcome> {
    let primes = minimal_primes_over(g, field)?;
    match opts.format {
        FormatArg::Json => {
            let docs: Vec<_> = primes.iter().map(|p| p.to_json()).collect();
            println!("{}", serde_json::to_string_pretty(&docs)?);
        }
        FormatArg::Csv => {
            println!("T,components,height");
            for p in &primes {
                let comps: Vec<String> = p.components.iter().map(|c| labels(*c)).collect();
                println!("{},{},{}", labels(p.t), comps.join(";"), p.predicted_height());
            }
        }
        FormatArg::Text => {
            for p in &primes {
                let ring = p.ideal.ring();
                let comps: Vec<String> = p.components.iter().map(|c| format!("{{{}}}", labels(*c))).collect();
                println!("T={{{}}} components={} height={}", labels(p.t), comps.join(" "), p.predicted_height());
                for f in p.ideal.generators() {
                    println!("  {}", ring.format_poly(f));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn print_family(family: &CutSetFamily, format: FormatArg) -> Result<String> {
    let mut out = String::new();
    match format {
        FormatArg::Json => writeln!(out, "{}", serde_json::to_string(family)?).unwrap(),
        FormatArg::Csv => {
            out.push_str("T\n");
            family.iter().for_each(|t| writeln!(out, "{}", labels(t)).unwrap());
        }
        FormatArg::Text => family.iter().for_each(|t| writeln!(out, "{{{}}}", labels(t)).unwrap()),
    }
    Ok(out)
}

fn print_cutsets(g: &Graph, opts: &GlobalOpts) -> Result<Outcome> {
    print!("{}", print_family(&cut_sets(g)?, opts.format)?);
    Ok(Outcome::Pass)
}

fn print_colon(g: &Graph, edge: &str, check: bool, field: PrimeField, opts: &GlobalOpts) -> Result<Outcome> {
    let e = parse_edge(edge)?;
    let colon = colon_generators_over(g, e, field)?;
    let ring = colon.ring();
    let gens: Vec<String> = colon.generators().iter().map(|p| ring.format_poly(p)).collect();
    let agrees = if check {
        let deleted = binomial_edge_ideal_over(&g.delete_edges(&[e])?, field)?;
        let elim = deleted.colon(&ring.minor(e.low(), e.high()))?;
        Some(elim.equals(&colon)?)
    } else {
        None
    };
    match opts.format {
        FormatArg::Json => println!("{}", json!({"edge": e, "generators": gens, "elimination_agrees": agrees})),
        FormatArg::Csv => {
            println!("generator");
            gens.iter().for_each(|s| println!("{s}"));
        }
        FormatArg::Text => {
            gens.iter().for_each(|s| println!("{s}"));
            if let Some(ok) = agrees {
                println!("elimination colon {}", if ok { "agrees" } else { "DIFFERS" });
            }
        }
    }
    Ok(if agrees == Some(false) { Outcome::CheckFailed } else { Outcome::Pass })
}

fn print_alpha(g: &Graph, opts: &GlobalOpts) -> Result<Outcome> {
    let alpha = (1..=g.n()).map(|v| g.alpha(v)).collect::<Result<Vec<_>>>()?;
    let min = g.alpha_min()?;
    match opts.format {
        FormatArg::Json => println!("{}", json!({"alpha": alpha, "alpha_min": min})),
        FormatArg::Csv => {
            println!("v,alpha");
            alpha.iter().enumerate().for_each(|(k, a)| println!("{},{a}", k + 1));
        }
        FormatArg::Text => {
            let cells: Vec<String> = alpha.iter().enumerate().map(|(k, a)| format!("alpha({})={a}", k + 1)).collect();
            println!("{}", cells.join(" "));
            println!("alpha_G={min}");
        }
    }
    Ok(Outcome::Pass)
}

fn print_join(g1: &Graph, g2: &Graph, field: PrimeField, opts: &GlobalOpts) -> Result<Outcome> {
    let mut results = vec![check_join_reg(g1, g2, field)?, check_clique_multiplicativity(g1, g2)?];
    if !g1.is_connected() && !g2.is_connected() {
        results.push(check_join_cutsets(g1, g2)?);
    }
    if opts.format == FormatArg::Text {
        println!("join {}", graph6::encode(&g1.join(g2)));
    }
    print!("{}", render_results(&results, opts.format)?);
    Ok(outcome(&results))
}

fn render_results(results: &[CheckResult], format: FormatArg) -> Result<String> {
    let mut out = String::new();
    match format {
        FormatArg::Json => out = serde_json::to_string_pretty(results)? + "\n",
        FormatArg::Csv => {
            out.push_str("check,key,subject,verdict\n");
            for r in results {
                let key = if r.key.contains([',', '"']) { format!("\"{}\"", r.key.replace('"', "\"\"")) } else { r.key.clone() };
                writeln!(out, "{},{key},{},{}", r.check, r.subject.as_deref().unwrap_or(""), r.verdict).unwrap();
            }
        }
        FormatArg::Text => {
            for r in results {
                let at = r.subject.as_deref().map(|s| format!(" {s}")).unwrap_or_default();
                writeln!(out, "{:<24} {:<12} {}{at}  {}", r.check.name(), r.verdict, r.key, r.witness).unwrap();
            }
            let fails = results.iter().filter(|r| r.verdict == Verdict::Fail).count();
            writeln!(out, "{} results, {fails} failed", results.len()).unwrap();
        }
    }
    Ok(out)
}
