//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `DOCUMENTED_FAILURES` are expected to fail with the
//! shipped defaults; the run exits non-zero if any other criterion fails or
//! if a documented failure starts passing.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use gridqubo::evaluation::{decode, enforce_connectedness, LoopStatus};
use gridqubo::grid_model::{
    build_sim_graph, parse_matpower, ComponentKind, ComponentSpec, CostModel, SimGraph,
};
use gridqubo::metrics::{
    estimate_embedding, quality_stats, relative_error, smallest_infeasible, tts, AnnealTimeUnit,
    CouplerBase, EmbeddingLaw, Reference, Tts,
};
use gridqubo::qubo::{q_cut, q_modularity, q_part, q_size, q_weights, WeightedEdge, WeightedGraph};
use gridqubo::solvers::{
    solve_exact, solve_sa, Assignment, ExactConfig, RecordFile, SaParams, SampleSetFile,
    SolverConfig,
};
use gridqubo::{PartTerms, Qubo};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

const DOCUMENTED_FAILURES: &[&str] = &["2b", "4"];

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn case14_text() -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/case14.m");
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn case14_sim(costs: &CostModel) -> SimGraph {
    build_sim_graph(&parse_matpower(&case14_text()).unwrap(), costs).unwrap()
}

fn assignments(n: usize) -> impl Iterator<Item = Assignment> {
    (0..1u64 << n).map(move |m| Assignment::from_mask(m, n))
}

fn sign(b: u8) -> f64 {
    if b == 1 {
        1.0
    } else {
        -1.0
    }
}

// ---------------------------------------------------------------- criterion 1

/// Weights in `(0, 1]`, the normalized-cost scale the builders receive.
fn random_weighted_graph(rng: &mut ChaCha8Rng, n: usize) -> WeightedGraph {
    let density = rng.gen_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push(WeightedEdge {
                    u,
                    v,
                    w: rng.gen_range(0.01..=1.0),
                });
            }
        }
    }
    if edges.is_empty() {
        edges.push(WeightedEdge {
            u: 0,
            v: n - 1,
            w: 1.0,
        });
    }
    WeightedGraph::new(n, edges).unwrap()
}

fn newman_modularity(graph: &WeightedGraph, bits: &[u8]) -> f64 {
    let m = graph.edges().len() as f64;
    let mut inside = [0.0f64; 2];
    let mut degree = [0.0f64; 2];
    for e in graph.edges() {
        degree[bits[e.u] as usize] += 1.0;
        degree[bits[e.v] as usize] += 1.0;
        if bits[e.u] == bits[e.v] {
            inside[bits[e.u] as usize] += 1.0;
        }
    }
    (0..2)
        .map(|c| inside[c] / m - (degree[c] / (2.0 * m)).powi(2))
        .sum()
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let instances = 231;
    let mut worst = [0.0f64; 4];
    for k in 0..instances {
        let n = 4 + k % 11;
        let g = random_weighted_graph(&mut rng, n);
        let p = [0.5, 1.0, 2.0, 3.0][k % 4];
        let cut: Qubo = q_cut(&g).unwrap();
        let size: Qubo = q_size(n).unwrap();
        let weights: Qubo = q_weights(&g, p).unwrap();
        let modularity: Qubo = q_modularity(&g).unwrap();
        let mut mass = vec![0.0; n];
        for e in g.edges() {
            mass[e.u] += e.w.powf(p);
            mass[e.v] += e.w.powf(p);
        }
        for z in assignments(n) {
            let b = z.bits();
            let cut_direct: f64 = g
                .edges()
                .iter()
                .filter(|e| b[e.u] != b[e.v])
                .map(|e| e.w)
                .sum();
            let n1 = z.ones() as f64;
            let size_direct = (n1 - (n as f64 - n1)).powi(2);
            let weights_direct = (0..n).map(|i| sign(b[i]) * mass[i]).sum::<f64>().powi(2);
            let mod_direct = -newman_modularity(&g, b);
            let errs = [
                (cut.energy(b).unwrap() - cut_direct).abs(),
                (size.energy(b).unwrap() - size_direct).abs(),
                (weights.energy(b).unwrap() - weights_direct).abs(),
                (modularity.energy(b).unwrap() - mod_direct).abs(),
            ];
            for (w, e) in worst.iter_mut().zip(errs) {
                *w = w.max(e);
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    let max_err = worst.iter().copied().fold(0.0, f64::max);
    Outcome {
        id: "1",
        title: "objective-oracle equivalence",
        pass: instances >= 200 && max_err <= 1e-9 && secs < 60.0,
        detail: format!(
            "{instances} graphs with 4-14 nodes, weights in (0, 1]; max |err| cut {:.1e}, size {:.1e}, weights {:.1e}, modularity {:.1e}; {secs:.1}s",
            worst[0], worst[1], worst[2], worst[3]
        ),
    }
}

// ---------------------------------------------------------------- criterion 2

fn random_sim(rng: &mut ChaCha8Rng, n: usize, spanning: bool) -> SimGraph {
    let mut specs = Vec::new();
    if spanning {
        for v in 1..n {
            let u = rng.gen_range(0..v);
            specs.push(ComponentSpec::Line {
                from: u,
                to: v,
                cost: rng.gen_range(1.0..8.0),
            });
        }
    }
    for _ in 0..rng.gen_range(0..=n) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            specs.push(ComponentSpec::Line {
                from: u,
                to: v,
                cost: rng.gen_range(1.0..8.0),
            });
        }
    }
    specs.push(ComponentSpec::Attached {
        bus: rng.gen_range(0..n),
        kind: ComponentKind::Generator,
        cost: rng.gen_range(5.0..15.0),
    });
    for bus in 0..n {
        if rng.gen_bool(0.3) {
            specs.push(ComponentSpec::Attached {
                bus,
                kind: ComponentKind::Generator,
                cost: rng.gen_range(5.0..15.0),
            });
        }
        if rng.gen_bool(0.3) {
            specs.push(ComponentSpec::Attached {
                bus,
                kind: ComponentKind::Load,
                cost: rng.gen_range(1.0..4.0),
            });
        }
    }
    SimGraph::assemble("random", (1..=n as u32).collect(), &specs).unwrap()
}

/// Cost quantities computed straight from the simulation-graph edges.
struct Direct {
    incident: f64,
    components_cut_excluded: f64,
    w_cut: f64,
    delta_w_networks: f64,
}

fn direct(sim: &SimGraph, b: &[u8]) -> Direct {
    let n = sim.n_grid() as f64;
    let (mut incident, mut comp, mut cut_cost, mut m_c) = (0.0, 0.0, 0.0, 0.0);
    for e in sim.edges() {
        if e.is_line() {
            incident += e.c * (sign(b[e.u]) + sign(b[e.v]));
            if b[e.u] != b[e.v] {
                cut_cost += e.c;
                m_c += 1.0;
            } else {
                comp += e.c * sign(b[e.u]);
            }
        } else {
            incident += e.c * sign(b[e.u]);
            comp += e.c * sign(b[e.u]);
        }
    }
    let n1 = b.iter().filter(|&&x| x == 1).count() as f64;
    let delta_n = 2.0 * n1 - n;
    Direct {
        incident,
        components_cut_excluded: comp,
        w_cut: cut_cost + 4.0 * (n - 1.0) * m_c,
        delta_w_networks: (2.0 * n - 1.0) * delta_n,
    }
}

fn criterion_2() -> [Outcome; 2] {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let graphs = 66;
    let mut worst = [0.0f64; 5];
    let (mut literal_checked, mut literal_mismatch) = (0u64, 0u64);
    for k in 0..graphs {
        let n = 2 + k % 11;
        let sim = random_sim(&mut rng, n, true);
        let c_max = sim.c_max();
        let part = q_part::<f64>(&sim).unwrap();
        let t = PartTerms::of(&sim).unwrap();
        for z in assignments(n) {
            let b = z.bits();
            let d = direct(&sim, b);
            let (ec, ek, en) = (
                t.components.energy(b).unwrap(),
                t.cut.energy(b).unwrap(),
                t.network.energy(b).unwrap(),
            );
            let report = decode(&sim, &z).unwrap();
            let errs = [
                (part.energy(b).unwrap() - (ec + ek + en)).abs(),
                (ec - (d.incident / c_max).powi(2)).abs(),
                (ek - d.w_cut / c_max).abs(),
                (en - (d.delta_w_networks / c_max).powi(2)).abs(),
                (report.delta_w_incident - d.incident)
                    .abs()
                    .max((report.w_cut - d.w_cut).abs())
                    .max((report.delta_w_networks as f64 - d.delta_w_networks).abs())
                    .max((report.delta_w_components - d.components_cut_excluded).abs()),
            ];
            for (w, e) in worst.iter_mut().zip(errs) {
                *w = w.max(e);
            }
            literal_checked += 1;
            if (ec - (d.components_cut_excluded / c_max).powi(2)).abs() > 1e-9 {
                literal_mismatch += 1;
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    let max_err = worst.iter().copied().fold(0.0, f64::max);

    // Two buses, a generator on each, one line: z = [1, 1].
    let two = SimGraph::assemble(
        "two",
        vec![1, 2],
        &[
            ComponentSpec::Line {
                from: 0,
                to: 1,
                cost: 5.0,
            },
            ComponentSpec::Attached {
                bus: 0,
                kind: ComponentKind::Generator,
                cost: 10.0,
            },
            ComponentSpec::Attached {
                bus: 1,
                kind: ComponentKind::Generator,
                cost: 10.0,
            },
        ],
    )
    .unwrap();
    let e_two = PartTerms::of(&two)
        .unwrap()
        .components
        .energy(&[1, 1])
        .unwrap();
    let lit_two = (direct(&two, &[1, 1]).components_cut_excluded / two.c_max()).powi(2);

    [
        Outcome {
            id: "2",
            title: "composite consistency",
            pass: graphs >= 50 && max_err <= 1e-9 && secs < 60.0,
            detail: format!(
                "{graphs} graphs with 2-12 buses; max |err| additivity {:.1e}, components vs (incident imbalance / c_max)^2 {:.1e}, cut vs W_cut / c_max {:.1e}, network vs (dW_net / c_max)^2 {:.1e}, report fields {:.1e}; {secs:.1}s",
                worst[0], worst[1], worst[2], worst[3], worst[4]
            ),
        },
        Outcome {
            id: "2b",
            title: "component term vs (dW_comp / c_max)^2 with cut components excluded",
            pass: literal_mismatch == 0,
            detail: format!(
                "mismatch on {literal_mismatch} of {literal_checked} assignments; two-bus example z=[1,1]: component energy {e_two} vs {lit_two}"
            ),
        },
    ]
}

// ---------------------------------------------------------------- criterion 3

fn criterion_3() -> Outcome {
    let sim = case14_sim(&CostModel::default());
    let q = q_part::<f64>(&sim).unwrap();
    let t = Instant::now();
    let ground = solve_exact(&q, &ExactConfig::default()).unwrap();
    let exact_secs = t.elapsed().as_secs_f64();
    let e_min = ground.records[0].energy;
    let t = Instant::now();
    let mut hits = 0;
    for seed in 0..100 {
        let set = solve_sa(
            &q,
            &SaParams {
                reads: 10_000,
                sweeps: 100,
                seed,
                ..Default::default()
            },
        )
        .unwrap();
        let stats = quality_stats(
            &set,
            Some((e_min, Reference::Exact)),
            0.99,
            100.0,
            AnnealTimeUnit::Sweeps,
        )
        .unwrap();
        if stats.l_min == 0.0 {
            hits += 1;
        }
    }
    Outcome {
        id: "3",
        title: "case14 optimality",
        pass: exact_secs < 10.0 && hits >= 95,
        detail: format!(
            "exact solve {:.3}s, E* = {e_min:.6}; SA (10^4 reads, 100 sweeps) L_min = 0 for {hits}/100 seeds in {:.1}s",
            exact_secs,
            t.elapsed().as_secs_f64()
        ),
    }
}

// ---------------------------------------------------------------- criterion 4

fn optimum_structure(costs: &CostModel) -> (Vec<(usize, usize, usize)>, f64) {
    let sim = case14_sim(costs);
    let q = q_part::<f64>(&sim).unwrap();
    let ground = solve_exact(&q, &ExactConfig::default()).unwrap();
    let shapes = ground
        .records
        .iter()
        .map(|r| {
            let rep = decode(&sim, &r.assignment).unwrap();
            (rep.n1, rep.n2, rep.m_c)
        })
        .collect();
    (shapes, ground.records[0].energy)
}

fn criterion_4() -> Outcome {
    let (shapes, e) = optimum_structure(&CostModel::default());
    let ok = |&(n1, n2, m_c): &(usize, usize, usize)| n1.abs_diff(n2) <= 2 && m_c <= 4;
    let mut with_loads = CostModel::default();
    with_loads.include_loads = true;
    let (loads_shapes, loads_e) = optimum_structure(&with_loads);
    Outcome {
        id: "4",
        title: "case14 optimum structure",
        pass: shapes.iter().all(ok),
        detail: format!(
            "default costs: {} ground states at E = {e:.4}, (N1, N2, M_c) = {:?}; with loads included: {} ground states at E = {loads_e:.4}, (N1, N2, M_c) = {:?}",
            shapes.len(),
            dedup(&shapes),
            loads_shapes.len(),
            dedup(&loads_shapes)
        ),
    }
}

fn dedup(shapes: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
    let mut v = shapes.to_vec();
    v.sort();
    v.dedup();
    v
}

// ---------------------------------------------------------------- criterion 5

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();

    let t1 = tts(0.99, 50.0, 1, 2).unwrap().value();
    let exact1 = 0.01f64.ln() / 0.5f64.ln() * 50.0;
    if (t1 - exact1).abs() > 1e-6 || format!("{t1:.2}") != "332.19" {
        failures.push(format!("ratio 0.5 TTS {t1}"));
    }

    let file = SampleSetFile {
        solver: "fixture".into(),
        params: serde_json::Value::Null,
        n_vars: 2,
        records: vec![
            RecordFile {
                bits: Assignment::parse("00").unwrap(),
                energy: -10.0,
                count: 1,
            },
            RecordFile {
                bits: Assignment::parse("01").unwrap(),
                energy: -8.0,
                count: 2,
            },
            RecordFile {
                bits: Assignment::parse("10").unwrap(),
                energy: -8.0,
                count: 1,
            },
        ],
        seed: None,
        wall_time_ms: 0.0,
        meta: None,
    };
    let set = file.into_sample_set::<f64>().unwrap();
    let s = quality_stats(
        &set,
        Some((-10.0, Reference::Exact)),
        0.99,
        1.0,
        AnnealTimeUnit::Sweeps,
    )
    .unwrap();
    let exact2 = 0.01f64.ln() / 0.75f64.ln();
    let t2 = s.tts.value();
    if s.l_min != 0.0
        || s.n_opt != 1
        || s.n_s != 4
        || (t2 - exact2).abs() > 1e-6
        || format!("{t2:.3}") != "16.008"
    {
        failures.push(format!(
            "four-sample example: L_min {} n_opt {} n_s {} TTS {t2}",
            s.l_min, s.n_opt, s.n_s
        ));
    }

    let l = relative_error(-10.0, -8.0).unwrap().value;
    if (l - 0.2).abs() > 1e-6 {
        failures.push(format!("L = {l}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let draws = 1000;
    for _ in 0..draws {
        let p_s = rng.gen_range(0.01..0.999);
        let t_a = rng.gen_range(1e-3..1e4);
        let n_s = rng.gen_range(1..100_000u64);
        let n_opt = rng.gen_range(0..=n_s);
        let c = rng.gen_range(1e-2..1e2);
        let base = tts(p_s, t_a, n_opt, n_s).unwrap();
        if n_opt < n_s && tts(p_s, t_a, n_opt + 1, n_s).unwrap().value() > base.value() {
            failures.push(format!("monotonicity at p_s={p_s} n_opt={n_opt} n_s={n_s}"));
        }
        match (base, tts(p_s, c * t_a, n_opt, n_s).unwrap()) {
            (Tts::Finite(a), Tts::Finite(b)) if (b - c * a).abs() <= 1e-9 * b.abs().max(1.0) => {}
            (Tts::Infinite, Tts::Infinite) => {}
            other => failures.push(format!("scaling {other:?}")),
        }
        let e_min = rng.gen_range(-1e3..1e3);
        let e = e_min + rng.gen_range(0.0..50.0) * (rng.gen_range(0..3) as f64);
        let r = relative_error(e_min, e).unwrap();
        if r.value < 0.0 || (r.value == 0.0) != (e == e_min) {
            failures.push(format!("L({e_min}, {e}) = {}", r.value));
        }
    }
    Outcome {
        id: "5",
        title: "TTS and relative-error formulas",
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("TTS {t1:.6} (332.19), {t2:.6} (16.008), L = {l}; {draws} random draws monotone and linear in t_a")
        } else {
            failures.join("; ")
        },
    }
}

// ---------------------------------------------------------------- criterion 6

fn criterion_6() -> Outcome {
    let law = EmbeddingLaw::default();
    let first = smallest_infeasible(&law, 10_000);
    let e118 = estimate_embedding(118, &law).unwrap();
    let literal = EmbeddingLaw {
        coupler_base: CouplerBase::LogicalCouplers,
        ..law
    };
    let literal_first = smallest_infeasible(&literal, 10_000);
    Outcome {
        id: "6",
        title: "embedding estimator",
        pass: first.is_some_and(|n| (180..=210).contains(&n)) && (1.5e3..=2.2e3).contains(&e118.physical_qubits),
        detail: format!(
            "smallest infeasible N = {first:?}; N=118 needs {:.0} physical qubits; (coupler law on N^2/2 would give {literal_first:?})",
            e118.physical_qubits
        ),
    }
}

// ---------------------------------------------------------------- criterion 7

fn criterion_7() -> Outcome {
    let sim = case14_sim(&CostModel::default());
    let q = q_part::<f64>(&sim).unwrap();
    let e_min = solve_exact(&q, &ExactConfig::default()).unwrap().records[0].energy;
    let mean_l = |sweeps: usize, seed: u64| {
        let set = solve_sa(
            &q,
            &SaParams {
                reads: 1000,
                sweeps,
                seed,
                ..Default::default()
            },
        )
        .unwrap();
        quality_stats(
            &set,
            Some((e_min, Reference::Exact)),
            0.99,
            sweeps as f64,
            AnnealTimeUnit::Sweeps,
        )
        .unwrap()
        .summary
        .mean
    };
    let reps = 5u32;
    let pairs: Vec<(f64, f64)> = (0..reps as u64)
        .map(|s| (mean_l(10, s), mean_l(100, s)))
        .collect();
    let wins = pairs.iter().filter(|(a, b)| b < a).count() as u32;
    let binom = |n: u32, k: u32| (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
    let p = (wins..=reps).map(|k| binom(reps, k)).sum::<f64>() / 2f64.powi(reps as i32);
    Outcome {
        id: "7",
        title: "near-optimal behavior",
        pass: p < 0.05,
        detail: format!(
            "mean L (sweeps=10 -> 100) per repetition: {}; {wins}/{reps} lower, one-sided sign test p = {p:.4}",
            pairs.iter().map(|(a, b)| format!("{a:.4}->{b:.4}")).collect::<Vec<_>>().join(", ")
        ),
    }
}

// ---------------------------------------------------------------- criterion 8

fn both_connected(sim: &SimGraph, b: &[u8]) -> bool {
    let n = sim.n_grid();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in sim.lines() {
        if b[e.u] == b[e.v] {
            let (x, y) = (root(&mut parent, e.u), root(&mut parent, e.v));
            parent[x] = y;
        }
    }
    [0u8, 1].iter().all(|&side| {
        let members: Vec<usize> = (0..n).filter(|&k| b[k] == side).collect();
        match members.first() {
            None => false,
            Some(&f) => {
                let r = root(&mut parent, f);
                members.iter().all(|&m| root(&mut parent, m) == r)
            }
        }
    })
}

fn criterion_8() -> Outcome {
    let mut graphs = Vec::new();
    let mut star: Vec<ComponentSpec> = (1..5)
        .map(|leaf| ComponentSpec::Line {
            from: 0,
            to: leaf,
            cost: 5.0,
        })
        .collect();
    star.push(ComponentSpec::Attached {
        bus: 0,
        kind: ComponentKind::Generator,
        cost: 10.0,
    });
    graphs.push(SimGraph::assemble("star", vec![1, 2, 3, 4, 5], &star).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for k in 0..20 {
        let n = 3 + k % 8;
        graphs.push(random_sim(&mut rng, n, k % 4 != 3));
    }

    let sampler = SolverConfig::Enumerate(ExactConfig::default());
    let mut failures = Vec::new();
    let (mut found, mut exhausted) = (0, 0);
    let mut star_leaf = false;
    for (k, sim) in graphs.iter().enumerate() {
        let q = q_part::<f64>(sim).unwrap();
        let oracle = assignments(sim.n_grid())
            .filter(|z| both_connected(sim, z.bits()))
            .map(|z| q.energy(z.bits()).unwrap())
            .fold(None, |acc: Option<f64>, e| {
                Some(acc.map_or(e, |a| a.min(e)))
            });
        let out = enforce_connectedness(sim, &q, &sampler, 3).unwrap();
        match (oracle, out.status, &out.best) {
            (Some(e), LoopStatus::Found, Some(best))
                if (best.energy - e).abs() <= 1e-9
                    && both_connected(sim, best.assignment.bits()) =>
            {
                found += 1;
                if k == 0 {
                    let hub = best.assignment.bits()[0];
                    star_leaf = best.assignment.bits().iter().filter(|&&b| b != hub).count() == 1;
                }
            }
            (None, LoopStatus::Exhausted, None) => exhausted += 1,
            (o, s, b) => failures.push(format!(
                "graph {k}: oracle {o:?}, loop {s:?} {:?}",
                b.as_ref().map(|b| (b.assignment.to_string(), b.energy))
            )),
        }
    }
    if !star_leaf {
        failures.push("star graph did not settle on a single leaf".into());
    }
    Outcome {
        id: "8",
        title: "connectedness loop",
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "star + {} random graphs: {found} matched the brute-force best connected split, {exhausted} exhausted with no connected split",
                graphs.len() - 1
            )
        } else {
            failures.join("; ")
        },
    }
}

// ---------------------------------------------------------------- criterion 9

fn cli(out: &Path, args: &[&str]) -> bool {
    Command::new(env!("CARGO_BIN_EXE_gridqubo"))
        .arg("--quiet")
        .arg("--out-dir")
        .arg(out)
        .args(args)
        .status()
        .map(|s| s.success())
        .unwrap_or(false)
}

fn without_wall_time(text: &str) -> String {
    text.lines()
        .filter(|l| !l.contains("wall_time"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_9() -> Outcome {
    let dir = TempDir::new().unwrap();
    let case = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/case14.m");
    let case = case.to_str().unwrap();
    let mut failures = Vec::new();
    let solve = [
        "--seed",
        "7",
        "solve",
        "--case",
        case,
        "--reads",
        "3000",
        "--sweeps",
        "50",
        "--exact-reference",
    ];
    let sweep = [
        "--seed", "7", "sweep", "--case", case, "--values", "10,50", "--reps", "2", "--reads",
        "500",
    ];
    for run in ["a", "b"] {
        if !cli(&dir.path().join(run).join("solve"), &solve)
            || !cli(&dir.path().join(run).join("sweep"), &sweep)
        {
            failures.push(format!("run {run} failed"));
        }
    }
    let read = |p: &str| fs::read_to_string(dir.path().join(p)).unwrap_or_default();
    let records = |p: &str| {
        let v: serde_json::Value = serde_json::from_str(&read(p)).unwrap_or_default();
        serde_json::to_string(&v["records"]).unwrap()
    };
    if records("a/solve/samples.json") != records("b/solve/samples.json") {
        failures.push("sample records differ".into());
    }
    for f in [
        "solve/samples.json",
        "solve/stats.json",
        "solve/l_values.csv",
        "sweep/sweep.csv",
        "sweep/sweep.json",
    ] {
        let (a, b) = (read(&format!("a/{f}")), read(&format!("b/{f}")));
        if a.is_empty() || without_wall_time(&a) != without_wall_time(&b) {
            failures.push(format!("{f} differs"));
        }
    }
    Outcome {
        id: "9",
        title: "determinism",
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "solve and sweep reruns with seed 7: records and artifacts byte-identical (wall_time fields aside)".into()
        } else {
            failures.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut outcomes = vec![criterion_1()];
    outcomes.extend(criterion_2());
    outcomes.push(criterion_3());
    outcomes.push(criterion_4());
    outcomes.push(criterion_5());
    outcomes.push(criterion_6());
    outcomes.push(criterion_7());
    outcomes.push(criterion_8());
    outcomes.push(criterion_9());

    println!();
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let documented = DOCUMENTED_FAILURES.contains(&o.id);
        let tag = if documented && !o.pass {
            " [documented]"
        } else {
            ""
        };
        println!(
            "criterion {:<3} {verdict}{tag}  {}: {}",
            o.id, o.title, o.detail
        );
        if o.pass == documented {
            unexpected.push(o.id);
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!(
        "acceptance: {passed}/{} checks pass in {:.1}s; documented failures: {}",
        outcomes.len(),
        started.elapsed().as_secs_f64(),
        DOCUMENTED_FAILURES.join(", ")
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: unexpected outcome for {}",
            unexpected.join(", ")
        );
        ExitCode::FAILURE
    }
}
