//! Acceptance criteria. Runs as a plain binary so that one PASS/FAIL line
//! per criterion is always printed.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use domgame::game::{Player, Solver};
use domgame::graph::{parse_graph6, Graph};
use domgame::harness::{
    read_graph6_file, run_sweep, verify_figure1, Check, Filters, InputSource, SweepConfig, SweepReport,
};
use domgame::recognizers::is_claw_free;
use domgame::strategies::{
    edge_circuit_profile, merge_verdicts, sample_state_claims, simulate, ClaimVerdict, PotentialProfile,
    StallerModel,
};

const SAMPLES_PER_PROFILE: usize = 10_000;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn sweep(input: InputSource, filters: Filters, checks: &[Check]) -> Result<SweepReport, String> {
    let cfg = SweepConfig { filters, checks: checks.to_vec(), ..SweepConfig::new(input, vec![]) };
    run_sweep(&cfg).map_err(|e| e.to_string())
}

/// Every check clean and exercised at least once.
fn all_clean(reports: &[SweepReport], checks: &[Check]) -> Verdict {
    let mut summary = Vec::new();
    for &c in checks {
        let (mut passed, mut failed) = (0, 0);
        for r in reports {
            if let Some(k) = r.counts(c) {
                passed += k.passed;
                failed += k.failed;
            }
        }
        if failed > 0 {
            let cert = reports.iter().flat_map(|r| &r.certificates).find(|x| x.check == c.name());
            return Err(format!("{c}: {failed} failures, first {cert:?}"));
        }
        if passed == 0 {
            return Err(format!("{c}: no graph satisfied the hypothesis"));
        }
        summary.push(format!("{c} {passed} graphs"));
    }
    Ok(summary.join(", "))
}

fn figure_values() -> Verdict {
    let t = Instant::now();
    let r = verify_figure1();
    let secs = t.elapsed().as_secs_f64();
    let vals: Vec<String> = r.entries.iter().map(|e| format!("{}: {} traceable={}", e.name, e.gamma_g, e.traceable)).collect();
    if r.passed && secs < 60.0 {
        Ok(format!("{} in {secs:.1}s", vals.join("; ")))
    } else {
        Err(format!("{} in {secs:.1}s", vals.join("; ")))
    }
}

fn equality_counts() -> Verdict {
    let runs = [
        (6usize, InputSource::Generated(6), 5),
        (8, InputSource::Files(vec![data("graphs_n8.g6")]), 23),
        (9, InputSource::Files(vec![data("connected_mindeg2_n9.g6")]), 5),
    ];
    let mut got = Vec::new();
    for (n, input, want) in runs {
        let cfg = SweepConfig {
            filters: Filters::equality_defaults(),
            equality: true,
            ..SweepConfig::new(input, vec![])
        };
        let r = run_sweep(&cfg).map_err(|e| e.to_string())?;
        // replay each case with a fresh solver
        for e in &r.equality_cases {
            let g = parse_graph6(&e.graph6).map_err(|x| x.to_string())?;
            if Solver::new(&g).value(0, Player::Dominator) as usize != n.div_ceil(2) || g.n() != n {
                return Err(format!("case {} does not replay", e.graph6));
            }
        }
        got.push((n, r.equality_cases.len(), want));
    }
    let line = got.iter().map(|(n, k, _)| format!("n={n}: {k}")).collect::<Vec<_>>().join(", ");
    if got.iter().all(|(_, k, w)| k == w) {
        Ok(line)
    } else {
        Err(format!("{line}; expected 5, 23, 5"))
    }
}

fn mindeg2_half_bound() -> Verdict {
    let checks = [Check::HalfBoundMindeg2];
    let mut reports = Vec::new();
    for n in 1..=7 {
        reports.push(sweep(InputSource::Generated(n), Filters::default(), &checks)?);
    }
    reports.push(sweep(InputSource::Files(vec![data("graphs_n8.g6")]), Filters::default(), &checks)?);
    all_clean(&reports, &checks)
}

fn claw_free_cubic() -> Verdict {
    let checks = [Check::CubicClawFree, Check::CubicClawFreeStaller, Check::CubicStrategy];
    let filters = Filters { connected: true, claw_free: true, cubic: true, ..Filters::default() };
    let r = sweep(InputSource::Files(vec![data("connected_cubic_n_le14.g6")]), filters, &checks)?;
    all_clean(&[r], &checks)
}

fn edge_trail_bounds() -> Verdict {
    let checks = [Check::EdgeCircuit, Check::EdgeTrail, Check::EdgeCircuitStrategy];
    let filters = Filters { connected: true, max_edges: Some(12), ..Filters::default() };
    let r = sweep(InputSource::Files(vec![data("connected_m_le12.g6")]), filters, &checks)?;
    all_clean(&[r], &checks)
}

fn line_graph_duality() -> Verdict {
    let checks = [Check::LineGraphDuality];
    let filters = Filters { connected: true, max_edges: Some(10), ..Filters::default() };
    let r = sweep(InputSource::Files(vec![data("connected_m_le12.g6")]), filters, &checks)?;
    all_clean(&[r], &checks)
}

fn claw_free_mindeg2() -> Verdict {
    let checks = [Check::ClawFreeMindeg2];
    let filters = Filters { connected: true, min_degree: Some(2), claw_free: true, ..Filters::default() };
    let mut reports = Vec::new();
    for n in 1..=7 {
        reports.push(sweep(InputSource::Generated(n), filters.clone(), &checks)?);
    }
    for f in ["graphs_n8.g6", "connected_mindeg2_n9.g6"] {
        reports.push(sweep(InputSource::Files(vec![data(f)]), filters.clone(), &checks)?);
    }
    let exceptions: Vec<u32> = [5, 9].map(|n| Solver::new(&Graph::cycle(n)).value(0, Player::Dominator)).to_vec();
    if exceptions != [3, 5] {
        return Err(format!("γ_g(C5), γ_g(C9) = {exceptions:?}, expected [3, 5]"));
    }
    all_clean(&reports, &checks).map(|s| format!("{s}, C5 = 3, C9 = 5"))
}

fn hosts(file: &str, filters: Filters) -> Result<Vec<Graph>, String> {
    let all = read_graph6_file(&data(file)).map_err(|e| e.to_string())?;
    let keep = |g: &Graph| {
        (!filters.connected || g.is_connected())
            && filters.min_degree.is_none_or(|k| g.min_degree() >= k)
            && (!filters.claw_free || is_claw_free(g))
            && filters.max_edges.is_none_or(|m| g.m() <= m)
    };
    Ok(all.into_iter().filter(keep).collect())
}

fn claim_audits() -> Verdict {
    let cubic = hosts("connected_cubic_n_le14.g6", Filters { claw_free: true, ..Filters::default() })?;
    let clawfree =
        hosts("graphs_n8.g6", Filters { connected: true, min_degree: Some(2), claw_free: true, ..Filters::default() })?;
    let edge: Vec<(Graph, PotentialProfile)> = hosts("connected_m_le12.g6", Filters { max_edges: Some(9), ..Filters::default() })?
        .into_iter()
        .filter_map(|g| edge_circuit_profile(&g).ok().map(|p| (g, p)))
        .collect();
    let runs: Vec<(&str, Vec<(Graph, PotentialProfile)>)> = vec![
        ("cubic", cubic.into_iter().map(|g| (g, PotentialProfile::CubicClawFree)).collect()),
        ("claw-free", clawfree.into_iter().map(|g| (g, PotentialProfile::ClawFreeMinDeg2)).collect()),
        ("edge-circuit", edge),
    ];
    let mut lines = Vec::new();
    for (name, hosts) in runs {
        if hosts.is_empty() {
            return Err(format!("{name}: no hosts"));
        }
        let mut verdicts: Vec<ClaimVerdict> = Vec::new();
        let per_host = SAMPLES_PER_PROFILE.div_ceil(hosts.len());
        let mut samples = 0;
        let mut traces = 0;
        for (i, (g, p)) in hosts.iter().enumerate() {
            let k = per_host.min(SAMPLES_PER_PROFILE - samples);
            if k > 0 {
                merge_verdicts(&mut verdicts, sample_state_claims(g, p, k, i as u64).map_err(|e| e.to_string())?);
                samples += k;
            }
            for staller in [StallerModel::ExactAdversary, StallerModel::GreedyMinGain, StallerModel::SeededRandom(i as u64)] {
                let r = simulate(g, p, staller).map_err(|e| e.to_string())?;
                if !r.verdict {
                    return Err(format!("{name}: {} took {} moves, bound {}", r.graph6, r.length, r.bound));
                }
                merge_verdicts(&mut verdicts, r.claims);
                traces += 1;
            }
        }
        if let Some(bad) = verdicts.iter().find(|v| !v.passed) {
            return Err(format!("{name}: {} failed: {:?}", bad.claim, bad.failures));
        }
        if name == "claw-free" && !verdicts.iter().any(|v| v.claim == "blue-white-clique" && v.checked > 0) {
            return Err("blue-white-clique never checked".into());
        }
        lines.push(format!("{name}: {samples} states, {traces} traces, {} claims", verdicts.len()));
    }
    Ok(lines.join("; "))
}

fn lockstep() -> Verdict {
    let checks = [Check::Lockstep];
    let filters = Filters { connected: true, max_edges: Some(8), ..Filters::default() };
    let r = sweep(InputSource::Files(vec![data("connected_m_le12.g6")]), filters, &checks)?;
    all_clean(&[r], &checks)
}

fn cycle_formula() -> Verdict {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=20usize {
        let got = Solver::new(&Graph::cycle(n)).value(0, Player::Dominator) as usize;
        let want = if n % 4 == 1 { n.div_ceil(2) } else { n / 2 };
        if got != want {
            bad.push(format!("C{n}: {got} != {want}"));
        }
    }
    let secs = t.elapsed().as_secs_f64();
    if bad.is_empty() && secs < 1.0 {
        Ok(format!("n = 3..20 in {secs:.2}s"))
    } else {
        Err(format!("{bad:?} in {secs:.2}s"))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("sharpness instances", figure_values),
        ("equality case counts", equality_counts),
        ("half bound under minimum degree 2, n <= 8", mindeg2_half_bound),
        ("claw-free cubic bounds and strategy", claw_free_cubic),
        ("edge circuit and trail bounds, m <= 12", edge_trail_bounds),
        ("line graph duality, m <= 10", line_graph_duality),
        ("claw-free minimum degree 2 bound, n <= 9", claw_free_mindeg2),
        ("claim audits", claim_audits),
        ("imagination lockstep, m <= 8", lockstep),
        ("cycle formula", cycle_formula),
    ];
    let mut ok = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = f();
        let secs = t.elapsed().as_secs_f64();
        match v {
            Ok(d) => println!("PASS {:>2} {name} ({d}) [{secs:.1}s]", i + 1),
            Err(d) => {
                ok = false;
                println!("FAIL {:>2} {name} ({d}) [{secs:.1}s]", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
