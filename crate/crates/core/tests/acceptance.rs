//! End-to-end acceptance checks. Run with `--nocapture` to see one line per criterion.

mod common;

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use metric_graphs::cli::{stats_csv, SEED_ENV};
use metric_graphs::prelude::*;
use metric_graphs::space::{jitter, max_displacement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

use common::*;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

const NORMS: [Norm; 3] = [Norm::L1, Norm::L2, Norm::Linf];

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    ensure!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    Ok(format!("{detail} in {elapsed:.2?}"))
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(1), || {
        let s = four_point_space();
        let r = relations_report(&s).map_err(|e| e.to_string())?;
        ensure!(
            r.cs.edge_set() == edges(&[(X, Y), (Y, Z), (Z, T)]),
            "CS {:?}",
            r.cs.edge_set()
        );
        ensure!(
            r.mc.edge_set() == edges(&[(X, Y), (X, Z), (Y, Z), (Z, T)]),
            "MC {:?}",
            r.mc.edge_set()
        );
        ensure!(r.cut.value == 3.0, "cut value {}", r.cut.value);
        ensure!(
            r.sigma.edge_set() == edges(&[(X, Y), (X, T), (Y, Z), (Z, T)]),
            "Sigma {:?}",
            r.sigma.edge_set()
        );
        let rel = r.relations;
        ensure!(rel.cs_eq_sigma_cap_mc, "CS != Sigma ∩ MC");
        ensure!(
            rel.cs_subset_sigma && !rel.sigma_eq_cs,
            "CS not a proper subgraph of Sigma"
        );
        ensure!(
            rel.cs_subset_mc && !rel.mc_eq_cs,
            "CS not a proper subgraph of MC"
        );
        Ok("edge sets and relations exact".into())
    })
}

fn criterion_2() -> Outcome {
    timed(Duration::from_secs(1), || {
        let s = space(t_shape_cloud());
        let r = relations_report(&s).map_err(|e| e.to_string())?;
        let tree = edges(&[(X, Y), (Y, Z), (Y, T)]);
        ensure!(r.cs.edge_set() == tree, "CS {:?}", r.cs.edge_set());
        ensure!(r.mc.edge_set() == tree, "MC {:?}", r.mc.edge_set());
        let r2 = 2f64.sqrt();
        let expected = [
            ((X, Y), 1.0),
            ((X, T), r2),
            ((Y, Z), 1.0),
            ((Y, T), 1.0),
            ((Z, T), r2),
        ];
        ensure!(
            r.sigma.edge_count() == 5,
            "Sigma has {} edges",
            r.sigma.edge_count()
        );
        for ((u, v), w) in expected {
            let got = r.sigma.weight(u, v);
            ensure!(
                got.is_some_and(|g| (g - w).abs() <= 1e-9),
                "Sigma weight of {u}{v}: {got:?}, expected {w}"
            );
        }
        ensure!(
            r.class.label == IntrinsicLabel::IntrinsicII,
            "class {}",
            r.class
        );
        Ok("CS = MC, Sigma weights within 1e-9, intrinsic-II".into())
    })
}

fn criterion_3() -> Outcome {
    let l1 = space(corner_cloud(Norm::L1));
    let r = relations_report(&l1).map_err(|e| e.to_string())?;
    ensure!(
        r.class.label == IntrinsicLabel::IntrinsicI,
        "L1 class {}",
        r.class
    );
    ensure!(
        r.class.common_length == Some(1.0),
        "L1 common length {:?}",
        r.class.common_length
    );
    ensure!(r.relations.all_equal, "L1: Sigma, CS, MC differ");
    for norm in [Norm::L2, Norm::Linf] {
        let r = relations_report(&space(corner_cloud(norm))).map_err(|e| e.to_string())?;
        ensure!(
            r.class.label == IntrinsicLabel::Extrinsic,
            "{norm} class {}",
            r.class
        );
        ensure!(r.sigma.edge_set() == complete(3), "{norm}: Sigma is not K3");
    }
    Ok("l1 intrinsic-I (r=1) with Sigma = CS = MC; l2, linf extrinsic".into())
}

fn criterion_4() -> Outcome {
    let n = 3;
    let threshold = diagonal_threshold(n);
    let cs = |x: f64, config: ToleranceConfig| {
        let s = FiniteMetricSpace::from_points_with(diagonal_basis_cloud(n, x), config).unwrap();
        build_cs(&s).graph.edge_set()
    };
    let default = ToleranceConfig::default();
    for x in [0.0, -0.05] {
        ensure!(
            cs(x, default) == star(n + 1, 0),
            "x = {x}: CS is not the star"
        );
    }
    let below = cs(threshold - 1e-6, ToleranceConfig::absolute(1e-4));
    ensure!(
        below == complete(n + 1),
        "threshold - 1e-6 (eq_tol 1e-4): {below:?}"
    );
    let at = cs(threshold, default);
    ensure!(at == complete(n + 1), "exact threshold: {at:?}");
    Ok(format!(
        "star at 0 and -0.05, K4 at threshold {threshold:.9}"
    ))
}

fn criterion_5() -> Outcome {
    timed(Duration::from_secs(60), || {
        let mut trees = 0;
        for (i, cloud) in uniform_clouds(1000, 3, 30, 5_000).into_iter().enumerate() {
            let s = space(cloud);
            ensure!(
                s.is_distance_separated(),
                "cloud {i} is not distance separated"
            );
            if is_tree(&build_cs(&s).graph) {
                trees += 1;
            }
        }
        ensure!(trees == 1000, "{trees}/1000 trees");
        Ok("1000/1000 trees".into())
    })
}

/// 200 clouds with m in 3..=25, dimension 1..=4 and all three norms.
fn random_clouds() -> Vec<FiniteMetricSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    (0..200)
        .map(|i| {
            let m = rng.random_range(3..=25);
            let dim = rng.random_range(1..=4);
            let cloud = sample_cloud(CloudModel::UniformCube { dim, side: 1.0 }, m, 10_000 + i)
                .unwrap()
                .with_norm(NORMS[i as usize % 3]);
            space(cloud)
        })
        .collect()
}

fn grid_clouds(count: usize, seed: u64) -> Vec<PointCloud> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let dim = rng.random_range(1..=3);
            let k: usize = rng.random_range(3..=5);
            let total = k.pow(dim as u32);
            let m = rng.random_range(3..=total.min(25));
            sample_cloud(CloudModel::Grid { dim, k }, m, 0)
                .unwrap()
                .with_norm(NORMS[i % 3])
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut worst = 0.0f64;
    for (i, s) in random_clouds().iter().enumerate() {
        let sigma = build_sigma(s);
        let pm = path_metric(&sigma).map_err(|e| format!("cloud {i}: {e}"))?;
        for (x, y, d) in s.pairs() {
            let err = (pm.d(x, y) - d).abs();
            ensure!(
                err <= 1e-9 * s.diameter(),
                "cloud {i}: error {err} at {x}{y}"
            );
            worst = worst.max(err / s.diameter());
        }
        for e in sigma.edges() {
            let mut g = sigma.clone();
            g.remove_edge(e.u, e.v);
            let alt = distances_from(&g, e.u)[e.v];
            ensure!(
                alt.is_infinite() || s.tolerance().lt(e.weight, alt),
                "cloud {i}: edge {}{} redundant ({alt} vs {})",
                e.u,
                e.v,
                e.weight
            );
        }
    }
    Ok(format!(
        "200/200, worst relative error {worst:.1e}, every edge necessary"
    ))
}

fn criterion_7() -> Outcome {
    let spaces = random_clouds()
        .into_iter()
        .chain(grid_clouds(50, 7).into_iter().map(space));
    let mut count = 0;
    for (i, s) in spaces.enumerate() {
        let cs = build_cs(&s).graph;
        let (mc, _) = build_mc(&s);
        let sigma = build_sigma(&s);
        ensure!(
            is_subgraph(&cs, &sigma).unwrap(),
            "space {i}: CS not in Sigma"
        );
        ensure!(is_subgraph(&cs, &mc).unwrap(), "space {i}: CS not in MC");
        count += 1;
    }
    Ok(format!("{count}/250 with CS in Sigma and in MC"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let draw = |m: usize, dim: usize, rng: &mut ChaCha8Rng| {
        sample_cloud(CloudModel::UniformCube { dim, side: 1.0 }, m, rng.random()).unwrap()
    };
    for i in 0..100 {
        let m = rng.random_range(4..=8);
        let dim = rng.random_range(1..=3);
        let (a, b) = (draw(m, dim, &mut rng), draw(m, dim, &mut rng));
        let fast = bottleneck_distance(&a, &b).unwrap().value;
        let brute = bottleneck_bruteforce(&a, &b).unwrap();
        ensure!(fast == brute, "pair {i}: {fast} != {brute}");
    }
    for i in 0..100 {
        let m = rng.random_range(4..=8);
        let dim = rng.random_range(1..=3);
        let (a, b, c) = (
            draw(m, dim, &mut rng),
            draw(m, dim, &mut rng),
            draw(m, dim, &mut rng),
        );
        let d = |p: &PointCloud, q: &PointCloud| bottleneck_distance(p, q).unwrap().value;
        ensure!(
            (d(&a, &b) - d(&b, &a)).abs() <= 1e-12,
            "triple {i}: asymmetric"
        );
        ensure!(
            d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12,
            "triple {i}: triangle fails"
        );
    }
    Ok("100 pairs exact, 100 triples symmetric and triangular".into())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    let mut seed = 20_000;
    while checked < 200 {
        seed += 1;
        let m = rng.random_range(4..=20);
        let dim = rng.random_range(1..=3);
        let cloud = sample_cloud(CloudModel::UniformCube { dim, side: 1.0 }, m, seed)
            .unwrap()
            .with_norm(NORMS[checked % 3]);
        let s = space(cloud.clone());
        if !s.is_distance_separated() {
            continue;
        }
        let delta = s.distance_set().mesh_delta().unwrap();
        let moved = jitter(&cloud, delta / 20.0, &mut rng);
        let shift = max_displacement(&cloud, &moved);
        ensure!(
            shift < delta / 20.0,
            "cloud {checked}: displacement {shift} >= {}",
            delta / 20.0
        );
        ensure!(
            space(moved).is_distance_separated(),
            "cloud {checked}: tie after jitter"
        );
        checked += 1;
    }
    Ok("200/200 remain distance separated".into())
}

fn criterion_10() -> Outcome {
    let tied: Vec<PointCloud> = grid_clouds(90, 10)
        .into_iter()
        .chain((2..12).map(|n| diagonal_basis_cloud(n, diagonal_threshold(n))))
        .collect();
    let mut worst = 0;
    for (i, cloud) in tied.iter().enumerate() {
        let s = space(cloud.clone());
        ensure!(!s.is_distance_separated(), "cloud {i} is not tied");
        let eps = s.distance_set().mesh_delta().unwrap() / 20.0;
        let r = perturb_to_ds(cloud, eps, 1_000 + i as u64, 64)
            .map_err(|e| format!("cloud {i}: {e}"))?;
        worst = worst.max(r.attempts);
        ensure!(
            r.displacement < eps,
            "cloud {i}: moved {} >= {eps}",
            r.displacement
        );
        let out = space(r.output);
        ensure!(out.is_distance_separated(), "cloud {i}: output tied");
        ensure!(
            is_tree(&build_cs(&out).graph),
            "cloud {i}: CS is not a tree"
        );
    }
    Ok(format!("100/100 trees, at most {worst} attempts"))
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..200u64 {
        let m = rng.random_range(3..=25);
        let dim = rng.random_range(1..=4);
        let cloud =
            sample_cloud(CloudModel::UniformCube { dim, side: 1.0 }, m, 30_000 + i).unwrap();
        let motion = random_rigid_motion(dim, m, 40_000 + i);
        let (a, b) = (space(cloud.clone()), space(motion.apply(&cloud).unwrap()));
        let f = &motion.relabeling;
        ensure!(
            isomorphic_under(&build_cs(&a).graph, &build_cs(&b).graph, f).unwrap(),
            "triple {i}: CS not preserved"
        );
        ensure!(
            isomorphic_under(&build_mc(&a).0, &build_mc(&b).0, f).unwrap(),
            "triple {i}: MC not preserved"
        );
    }
    Ok("200/200 CS and MC isomorphic".into())
}

fn criterion_12() -> Outcome {
    let dir = TempDir::new().unwrap();
    let matrix = dir.path().join("m.csv");
    fs::write(&matrix, "0,1,3,4\n1,0,2,5\n3,2,0,3\n4,5,3,0\n").unwrap();
    let grid = dir.path().join("g.csv");
    fs::write(&grid, "0,0\n0,1\n0,2\n1,0\n1,1\n1,2\n2,0\n2,1\n2,2\n").unwrap();
    let (m, g) = (matrix.to_str().unwrap(), grid.to_str().unwrap());

    let commands: Vec<Vec<&str>> = vec![
        vec![
            "build",
            "cs",
            "--input",
            m,
            "--format",
            "matrix-csv",
            "--emit",
            "json",
            "--out",
        ],
        vec!["build", "mc", "--input", g, "--emit", "dot", "--out"],
        vec!["build", "sigma", "--input", g, "--norm", "l1", "--out"],
        vec!["classify", "--input", m, "--format", "matrix-csv", "--out"],
        vec!["perturb", "--input", g, "--seed", "5", "--out"],
        vec![
            "stats",
            "--model",
            "jittered-grid:2:4:0.01",
            "--points",
            "16",
            "--trials",
            "5",
            "--out",
        ],
        vec!["dump", "--input", g, "--out"],
    ];
    for (c, args) in commands.iter().enumerate() {
        let mut artifacts = Vec::new();
        for round in 0..2 {
            let out = dir.path().join(format!("out-{c}-{round}"));
            let output = Command::new(env!("CARGO_BIN_EXE_metric-graphs"))
                .args(args)
                .arg(&out)
                .env_remove(SEED_ENV)
                .output()
                .unwrap();
            ensure!(output.status.success(), "{args:?} failed: {output:?}");
            let mut files: Vec<_> = fs::read_dir(dir.path())
                .unwrap()
                .map(|e| e.unwrap().path())
                .filter(|p| p.to_string_lossy().contains(&format!("out-{c}-{round}")))
                .collect();
            files.sort();
            let contents: Vec<Vec<u8>> = files.iter().map(|p| fs::read(p).unwrap()).collect();
            artifacts.push((contents, output.stdout, output.stderr));
        }
        ensure!(
            artifacts[0] == artifacts[1],
            "{args:?} differs between runs"
        );
    }
    Ok(format!(
        "{} commands byte-identical on repeat",
        commands.len()
    ))
}

fn mc_ratio_report() -> String {
    let csv = stats_csv(
        CloudModel::UniformCube { dim: 3, side: 1.0 },
        200,
        10,
        1,
        Norm::L2,
        ToleranceConfig::default(),
    )
    .unwrap();
    let last = csv.lines().last().unwrap().to_string();
    let ratio = last.split(',').next_back().unwrap().to_string();
    format!("|E(MC)|/m on uniform-cube:3:1, m = 200, 10 trials: {ratio} (reported, not asserted)")
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("four-point space: CS, MC, Sigma and relations", criterion_1),
        (
            "T-shaped cloud: CS = MC, weighted Sigma, intrinsic-II",
            criterion_2,
        ),
        ("corner cloud under l1, l2, linf", criterion_3),
        ("diagonal-basis sweep, n = 3", criterion_4),
        ("CS is a tree on separated clouds", criterion_5),
        ("Sigma reproduces d and is minimal", criterion_6),
        ("CS inside Sigma and MC", criterion_7),
        ("bottleneck distance against brute force", criterion_8),
        ("openness of distance separation", criterion_9),
        ("perturbation into separated position", criterion_10),
        ("invariance under rigid motions", criterion_11),
        ("CLI determinism", criterion_12),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS  {name}: {detail}"),
            Err(why) => {
                println!("criterion {n:>2}: FAIL  {name}: {why}");
                failed.push(n);
            }
        }
    }
    println!("{}", mc_ratio_report());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
