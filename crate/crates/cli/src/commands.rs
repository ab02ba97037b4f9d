use std::path::Path;

use hatcraft::bounds::{
    alpha_constant, certify_not_solvable, counting_bound_check, edge_critical_check,
    half_acyclic_check, min_vertex_bound, semibipartite_refute, Axioms, Criticality,
};
use hatcraft::graph::{parse_digraph, serialize_digraph, DEFAULT_SUBSET_CAP};
use hatcraft::search::{
    exact_solve, gadget_search, AffineClass, GraphStatus, SearchBudget, SolveOutcome,
};
use hatcraft::strategy::{
    bipartite_strategy, blowup_strategy, clique_strategy, construct_epsilon, construct_kfree,
    cycle2_strategy, even_cycle_strategy, gadget_compose, k22_strategy, make_gadget,
    parse_strategy, serialize_strategy, Construction, EpsilonRoute,
};
use hatcraft::verify::{certify_gadget, evaluate, sample_verify, VerifyOptions};
use hatcraft::{Digraph, NamedGraph, Strategy, Verdict};

use crate::report::Report;
use crate::{
    BoundCommand, Budget, Checking, ComposeCommand, ConstructArgs, ConstructName, CriticalArgs,
    Ctx, Failure, GadgetCommand, Instance, LosingArgs, Route, SolveArgs, VerifyArgs, EXIT_OK,
    EXIT_REFUTED, EXIT_UNKNOWN,
};
use crate::Command;

/// Largest graph whose clique number is reported by `construct`.
const CLIQUE_REPORT_CAP: usize = 256;

pub fn run(command: Command, ctx: &Ctx, report: &mut Report) -> Result<u8, Failure> {
    match command {
        Command::Construct(args) => construct(args, report),
        Command::Verify(args) => verify_cmd(args, ctx, report),
        Command::Losing(args) => losing(args, ctx, report),
        Command::Solve(args) => solve(args, report),
        Command::Bound(cmd) => bound(cmd, report),
        Command::Gadget(cmd) => gadget(cmd, ctx, report),
        Command::Compose(cmd) => compose(cmd, ctx, report),
        Command::Critical(args) => critical(args, ctx, report),
    }
}

fn budget(b: &Budget) -> SearchBudget {
    SearchBudget { max_nodes: b.budget_nodes, max_seconds: b.budget_seconds }
}

fn options(ctx: &Ctx, cap: usize) -> VerifyOptions {
    VerifyOptions { losing_cap: cap, max_configs: ctx.max_configs, execution: ctx.execution }
}

fn read_graph(report: &mut Report, path: &Path) -> Result<Digraph, Failure> {
    let text = report.input("graph", path)?;
    parse_digraph(&text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn read_strategy(report: &mut Report, path: &Path) -> Result<Strategy, Failure> {
    let text = report.input("strategy", path)?;
    parse_strategy(&text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn read_instance(report: &mut Report, inst: &Instance) -> Result<(Digraph, Strategy), Failure> {
    let g = read_graph(report, &inst.graph)?;
    let f = read_strategy(report, &inst.strategy)?;
    report.field("q", inst.q);
    f.check_shape(&g, inst.q)?;
    Ok((g, f))
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Solved => EXIT_OK,
        Verdict::NotSolvedBy { .. } | Verdict::SampledCounterexample { .. } => EXIT_REFUTED,
        Verdict::SampledClean { .. } => EXIT_UNKNOWN,
    }
}

fn describe(report: &mut Report, g: &Digraph) {
    report.field("vertices", g.vertex_count());
    report.field("arcs", g.arc_count());
}

/// Writes the graph and, if asked for, the strategy.
fn write_outputs(
    report: &mut Report,
    g: &Digraph,
    f: Option<&Strategy>,
    graph_out: Option<&Path>,
    strategy_out: Option<&Path>,
) -> Result<(), Failure> {
    if let Some(path) = graph_out {
        report.output("graph", path, &serialize_digraph(g))?;
    }
    match (strategy_out, f) {
        (Some(path), Some(f)) => report.output("strategy", path, &serialize_strategy(f)?)?,
        (Some(_), None) => return Err(Failure::usage("-s: this construction has no strategy")),
        (None, _) => {}
    }
    Ok(())
}

fn construct(args: ConstructArgs, report: &mut Report) -> Result<u8, Failure> {
    let with_q = |(g, f): (Digraph, Strategy)| {
        let q = f.q();
        (g, Some(f), Some(q))
    };
    let (g, f, q) = match args.name {
        ConstructName::Clique { q } => with_q(clique_strategy(q)?),
        ConstructName::K22 => with_q(k22_strategy()?),
        ConstructName::Bipartite { q } => with_q(bipartite_strategy(q)?),
        ConstructName::Cycle2 { n } => with_q(cycle2_strategy(n)?),
        ConstructName::EvenCycle { n } => with_q(even_cycle_strategy(n)?),
        ConstructName::CompleteBipartite { m, s } => {
            (NamedGraph::CompleteBipartite(m, s).build()?, None, None)
        }
        ConstructName::DirectedCycle { n } => (NamedGraph::DirectedCycle(n).build()?, None, None),
        ConstructName::UndirectedCycle { n } => {
            (NamedGraph::UndirectedCycle(n).build()?, None, None)
        }
        ConstructName::Path { n } => (NamedGraph::Path(n).build()?, None, None),
        ConstructName::SixVertex => (NamedGraph::SixVertexGadget.build()?, None, None),
        ConstructName::Epsilon { q, eps, route } => {
            let route = match route {
                Route::Bipartite => EpsilonRoute::Bipartite,
                Route::K22 => EpsilonRoute::K22,
            };
            family(report, construct_epsilon(q, eps, route)?)
        }
        ConstructName::Kfree { q, omega, m } => family(report, construct_kfree(q, omega, m)?),
    };
    if let Some(name) = g.name() {
        report.field("graph", name);
    }
    describe(report, &g);
    if let Some(q) = q {
        report.field("q", q);
    }
    if g.vertex_count() <= CLIQUE_REPORT_CAP {
        report.field("clique-number", g.clique_number(CLIQUE_REPORT_CAP)?);
    }
    write_outputs(report, &g, f.as_ref(), args.output.as_deref(), args.strategy.as_deref())?;
    Ok(EXIT_OK)
}

fn family(
    report: &mut Report,
    c: Construction,
) -> (Digraph, Option<Strategy>, Option<usize>) {
    let r = &c.report;
    report.field("p", r.p);
    report.field("r", r.r);
    report.field("q-requested", r.q);
    report.field("base-vertices", r.base_vertex_count);
    report.field("clique-ok", r.clique_ok);
    report.field("vertex-bound-ok", r.vertex_bound_ok);
    for note in &r.notes {
        report.field("note", note);
    }
    (c.graph, c.strategy, Some(c.report.q_effective))
}

fn verify_cmd(args: VerifyArgs, ctx: &Ctx, report: &mut Report) -> Result<u8, Failure> {
    let (g, f) = read_instance(report, &args.instance)?;
    let q = args.instance.q;
    let verdict = match args.sample {
        Some(samples) => sample_verify(&g, q, &f, samples, args.seed, ctx.execution)?,
        None => {
            let e = evaluate(&g, q, &f, &options(ctx, args.cap))?;
            report.field("configs", e.configs);
            e.verdict
        }
    };
    report.block(&verdict.report());
    Ok(verdict_code(&verdict))
}

fn losing(args: LosingArgs, ctx: &Ctx, report: &mut Report) -> Result<u8, Failure> {
    let (g, f) = read_instance(report, &args.instance)?;
    let e = evaluate(&g, args.instance.q, &f, &options(ctx, args.cap))?;
    report.field("configs", e.configs);
    report.block(&e.verdict.report());
    Ok(verdict_code(&e.verdict))
}

fn solve(args: SolveArgs, report: &mut Report) -> Result<u8, Failure> {
    let g = read_graph(report, &args.graph)?;
    report.field("q", args.q);
    let result = exact_solve(&g, args.q, budget(&args.budget))?;
    report.field("nodes", result.nodes);
    Ok(match result.outcome {
        SolveOutcome::Solvable(f) => {
            report.line("outcome solvable");
            if let Some(path) = &args.strategy {
                report.output("strategy", path, &serialize_strategy(&f)?)?;
            }
            EXIT_OK
        }
        SolveOutcome::Unsolvable => {
            report.line("outcome unsolvable");
            EXIT_REFUTED
        }
        SolveOutcome::Unknown => {
            report.line("outcome unknown");
            EXIT_UNKNOWN
        }
    })
}

fn holds(report: &mut Report, name: &str, ok: bool) -> u8 {
    report.field(name, if ok { "holds" } else { "inconclusive" });
    if ok { EXIT_OK } else { EXIT_UNKNOWN }
}

fn bound(cmd: BoundCommand, report: &mut Report) -> Result<u8, Failure> {
    match cmd {
        BoundCommand::Counting { n, acyclic, q, graph } => {
            let (n, i) = match graph {
                Some(path) => {
                    let g = read_graph(report, &path)?;
                    let found = g.max_acyclic_induced(DEFAULT_SUBSET_CAP)?;
                    let ids: Vec<String> = found.vertices.iter().map(|v| v.to_string()).collect();
                    report.field("acyclic-witness", ids.join(","));
                    (g.vertex_count(), found.size)
                }
                None => (
                    n.ok_or_else(|| Failure::usage("--n is required without -g"))?,
                    acyclic.ok_or_else(|| Failure::usage("--I is required without -g"))?,
                ),
            };
            report.line(format!("n {n}\nI {i}\nq {q}"));
            let ok = counting_bound_check(n, i, q)?;
            Ok(holds(report, "counting-bound", ok))
        }
        BoundCommand::Semibipartite { graph, q, strategy } => {
            let g = read_graph(report, &graph)?;
            report.field("q", q);
            let Some(partition) = g.min_semibipartite(DEFAULT_SUBSET_CAP)? else {
                report.line("semibipartite none");
                return Ok(EXIT_UNKNOWN);
            };
            let ids: Vec<String> = partition.left.iter().map(|v| v.to_string()).collect();
            report.field("left", ids.join(","));
            if partition.m() + 2 > q {
                report.line("semibipartite inconclusive");
                return Ok(EXIT_UNKNOWN);
            }
            report.line(format!("certificate semibipartite L={} q={q}", ids.join(",")));
            if let Some(path) = strategy {
                let f = read_strategy(report, &path)?;
                let x = semibipartite_refute(&g, &partition, &f, q)?;
                report.field("losing-config", x);
            }
            Ok(EXIT_OK)
        }
        BoundCommand::Alpha { tolerance } => {
            report.field("alpha", format!("{:.12}", alpha_constant(tolerance)?));
            Ok(EXIT_OK)
        }
        BoundCommand::MinVertices { acyclic, q } => {
            report.field("min-vertices", min_vertex_bound(acyclic, q)?);
            Ok(EXIT_OK)
        }
        BoundCommand::HalfAcyclic { n, q } => {
            let ok = half_acyclic_check(n, q)?;
            Ok(holds(report, "half-acyclic", ok))
        }
        BoundCommand::Certify { graph, q } => {
            let g = read_graph(report, &graph)?;
            report.field("q", q);
            Ok(match certify_not_solvable(&g, q, DEFAULT_SUBSET_CAP)? {
                Some(cert) => {
                    report.line(cert.line());
                    EXIT_OK
                }
                None => {
                    report.line("certificate none");
                    EXIT_UNKNOWN
                }
            })
        }
    }
}

fn digits(row: &[u8]) -> String {
    row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn gadget(cmd: GadgetCommand, ctx: &Ctx, report: &mut Report) -> Result<u8, Failure> {
    match cmd {
        GadgetCommand::Check { kind } => {
            let gadget = make_gadget(kind.into())?;
            describe(report, &gadget.graph);
            report.field("q", gadget.q);
            report.field("pivot", gadget.pivot);
            let phi = certify_gadget(&gadget, ctx.max_configs)?;
            report.field("phi", digits(&phi));
            report.line("gadget certified");
            Ok(EXIT_OK)
        }
        GadgetCommand::Search {
            graph,
            q,
            pivot,
            coefficients,
            max_work,
            list,
            budget: b,
        } => {
            let g = read_graph(report, &graph)?;
            report.field("q", q);
            report.field("pivot", pivot);
            let class = match &coefficients {
                Some(c) => AffineClass::linear_with(c),
                None => AffineClass::full(q),
            };
            let found =
                gadget_search(&g, q, pivot, &class, max_work, budget(&b), ctx.execution)?;
            let status = match found.status {
                GraphStatus::Unsolvable => "unsolvable",
                GraphStatus::Solvable => "solvable",
                GraphStatus::Unknown => "unknown",
            };
            report.field("graph-status", status);
            report.field("gadgets", found.gadgets.len());
            for (k, fg) in found.gadgets.iter().take(list).enumerate() {
                let rows: Vec<String> = fg.matrix.iter().map(|r| digits(r)).collect();
                report.line(format!(
                    "gadget {k} matrix {} offset {}",
                    rows.join(";"),
                    digits(&fg.offset)
                ));
            }
            Ok(match found.status {
                GraphStatus::Solvable => EXIT_REFUTED,
                _ if found.gadgets.is_empty() => EXIT_REFUTED,
                GraphStatus::Unsolvable => EXIT_OK,
                GraphStatus::Unknown => {
                    report.line("gadgets weak");
                    EXIT_UNKNOWN
                }
            })
        }
    }
}

/// Exhaustive check under the cap, seeded sampling above it.
fn check(
    report: &mut Report,
    g: &Digraph,
    f: &Strategy,
    ctx: &Ctx,
    checking: &Checking,
) -> Result<u8, Failure> {
    let q = f.q();
    let space = (q as f64).powi(g.vertex_count() as i32);
    let verdict = if space <= ctx.max_configs as f64 {
        verify_exhaustive(g, f, ctx)?
    } else {
        sample_verify(g, q, f, checking.samples, checking.seed, ctx.execution)?
    };
    report.block(&verdict.report());
    Ok(verdict_code(&verdict))
}

fn verify_exhaustive(g: &Digraph, f: &Strategy, ctx: &Ctx) -> Result<Verdict, Failure> {
    Ok(evaluate(g, f.q(), f, &options(ctx, 10))?.verdict)
}

fn compose(cmd: ComposeCommand, ctx: &Ctx, report: &mut Report) -> Result<u8, Failure> {
    let (g, f, graph_out, strategy_out, checking) = match cmd {
        ComposeCommand::Blowup { instance, r, output, strategy_out, checking } => {
            let (d, f) = read_instance(report, &instance)?;
            report.field("r", r);
            let (g, f) = blowup_strategy(&d, &f, r)?;
            (g, f, output, strategy_out, checking)
        }
        ComposeCommand::Gadgets { kind, p, output, strategy_out, checking } => {
            let gadget = make_gadget(kind.into())?;
            report.field("p", p);
            let (g, f) = gadget_compose(p, &gadget)?;
            (g, f, output, strategy_out, checking)
        }
    };
    describe(report, &g);
    report.field("q", f.q());
    write_outputs(report, &g, Some(&f), graph_out.as_deref(), strategy_out.as_deref())?;
    check(report, &g, &f, ctx, &checking)
}

fn critical(args: CriticalArgs, ctx: &Ctx, report: &mut Report) -> Result<u8, Failure> {
    let (g, f) = read_instance(report, &args.instance)?;
    let axioms = Axioms { trees_not_3solvable: args.axiom_trees };
    let found = edge_critical_check(
        &g,
        args.instance.q,
        &f,
        axioms,
        budget(&args.budget),
        &options(ctx, 10),
    )?;
    report.block(&found.report());
    Ok(match found.outcome {
        Criticality::EdgeCritical => EXIT_OK,
        Criticality::NotEdgeCritical(_) => EXIT_REFUTED,
        Criticality::Inconclusive(_) => EXIT_UNKNOWN,
    })
}
