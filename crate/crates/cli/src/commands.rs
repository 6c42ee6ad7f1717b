use std::path::PathBuf;

use kron_thickness::bounds::{
    complete_bipartite_bounds, g_times_k2_bounds, knnn_times_k2_bounds, product_bounds, theta_kmn_times_k2,
    theta_kmn_times_kpq, tripartite_times_k2_bounds, BoundReport, BoundsError,
};
use kron_thickness::constructions::{
    chen_yin_k4p4p, kn_times_k2_decomposition, knnn_times_k2_decomposition, ConstructionError, Decomposition,
    Guarantee, OracleSeeds, SeedDirectory, SeedFile, SeedProvider,
};
use kron_thickness::format::{
    decomposition_from_json, decomposition_to_dot, decomposition_to_json, graph_to_dot, graph_to_json, to_json,
};
use kron_thickness::graph::make_complete;
use kron_thickness::oracle::SearchBudget;
use kron_thickness::products::kronecker_product;
use kron_thickness::verification::verify_decomposition;

use crate::family::{parse_numbers, parse_range, GraphSpec};
use crate::{BoundsKind, Failure, Family, Output};

pub const SEED_DIR_VAR: &str = "THICKNESS_SEED_DIR";

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, ok: true })
}

pub fn product(left: &GraphSpec, right: &GraphSpec, dot: bool) -> Result<Output, Failure> {
    let g = kronecker_product(&left.build()?, &right.build()?);
    ok(if dot { graph_to_dot(&g) } else { graph_to_json(&g) })
}

fn seed_provider(seed: Option<PathBuf>) -> Option<Box<dyn SeedProvider>> {
    match seed {
        Some(path) => Some(Box::new(SeedFile(path))),
        None => std::env::var_os(SEED_DIR_VAR).map(|dir| Box::new(SeedDirectory(dir.into())) as Box<dyn SeedProvider>),
    }
}

fn construction_failure(e: ConstructionError) -> Failure {
    match e {
        ConstructionError::SeedRequired { .. } => {
            Failure::SeedRequired(format!("{e}; pass --seed or set {SEED_DIR_VAR}"))
        }
        ConstructionError::InvalidSize(_) | ConstructionError::UseFixture(_) => Failure::Usage(e.to_string()),
        ConstructionError::SeedInvalid(_) => Failure::Io(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

pub fn build(family: Family, size: u32, seeds: Option<&dyn SeedProvider>) -> Result<Decomposition, Failure> {
    match family {
        Family::KnXK2 => kn_times_k2_decomposition(size),
        Family::Knn if size % 4 != 0 => {
            return Err(Failure::Usage(format!("knn is built for sizes divisible by 4, got {size}")))
        }
        Family::Knn => chen_yin_k4p4p(size / 4),
        Family::KnnnXK2 => knnn_times_k2_decomposition(size, seeds),
    }
    .map_err(construction_failure)
}

pub fn decompose(family: Family, size: u32, seed: Option<PathBuf>, search: bool, dot: bool) -> Result<Output, Failure> {
    let seeds = if search {
        Some(Box::new(OracleSeeds(SearchBudget::default())) as Box<dyn SeedProvider>)
    } else {
        seed_provider(seed)
    };
    let d = build(family, size, seeds.as_deref())?;
    let report = verify_decomposition(&d.target, &d.parts);
    eprintln!("{} parts, {}", d.part_count(), report.summary());
    let text = if dot { decomposition_to_dot(&d) } else { decomposition_to_json(&d) };
    Ok(Output { text, ok: report.passed })
}

pub fn verify(path: &str, quiet: bool) -> Result<Output, Failure> {
    let text = crate::read_input(path)?;
    let d = decomposition_from_json(&text).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    let report = verify_decomposition(&d.target, &d.parts);
    let text = if quiet { format!("{}\n", if report.passed { "PASS" } else { "FAIL" }) } else { to_json(&report) };
    Ok(Output { text, ok: report.passed })
}

fn numbers(args: &[String], count: usize) -> Result<Vec<u64>, Failure> {
    let joined = args.join(",");
    let values = parse_numbers(&joined, count).map_err(Failure::Usage)?;
    Ok(values.into_iter().map(u64::from).collect())
}

fn bounds_failure(e: BoundsError) -> Failure {
    Failure::Usage(e.to_string())
}

pub fn bound_report(kind: BoundsKind, args: &[String]) -> Result<BoundReport, Failure> {
    match kind {
        BoundsKind::KnXK2 => {
            let n = numbers(args, 1)?[0];
            let g = make_complete(n as u32).map_err(|e| Failure::Usage(e.to_string()))?;
            g_times_k2_bounds(&g).map_err(bounds_failure)
        }
        BoundsKind::Knn => {
            let n = numbers(args, 1)?[0];
            Ok(complete_bipartite_bounds(n, n))
        }
        BoundsKind::Kmn => {
            let v = numbers(args, 2)?;
            Ok(complete_bipartite_bounds(v[0], v[1]))
        }
        BoundsKind::KmnXK2 => {
            let v = numbers(args, 2)?;
            theta_kmn_times_k2(v[0], v[1]).map_err(bounds_failure)
        }
        BoundsKind::KmnXKpq => {
            let v = numbers(args, 4)?;
            theta_kmn_times_kpq(v[0], v[1], v[2], v[3]).map_err(bounds_failure)
        }
        BoundsKind::KnnnXK2 => {
            let n = numbers(args, 1)?[0];
            knnn_times_k2_bounds(n).map_err(bounds_failure)
        }
        BoundsKind::TripartiteXK2 => {
            let v = numbers(args, 3)?;
            tripartite_times_k2_bounds(v[0], v[1], v[2]).map_err(bounds_failure)
        }
        BoundsKind::GXK2 => {
            let [spec] = args else { return Err(Failure::Usage("g_x_k2 takes one graph spec".into())) };
            let g = spec.parse::<GraphSpec>().map_err(Failure::Usage)?.build()?;
            g_times_k2_bounds(&g).map_err(bounds_failure)
        }
        BoundsKind::Product => {
            let [a, b] = args else { return Err(Failure::Usage("product takes two graph specs".into())) };
            let g = a.parse::<GraphSpec>().map_err(Failure::Usage)?.build()?;
            let h = b.parse::<GraphSpec>().map_err(Failure::Usage)?.build()?;
            product_bounds(&g, &h).map_err(bounds_failure)
        }
    }
}

pub fn bounds(kind: BoundsKind, args: &[String]) -> Result<Output, Failure> {
    ok(to_json(&bound_report(kind, args)?))
}

struct Row {
    n: u32,
    lower: u64,
    parts: Option<usize>,
    upper: Option<u64>,
    optimal: Option<bool>,
}

fn table_row(family: Family, n: u32, seeds: Option<&dyn SeedProvider>) -> Result<Row, Failure> {
    let (report, built) = match family {
        Family::KnXK2 => {
            let g = make_complete(n).map_err(|e| Failure::Usage(e.to_string()))?;
            (g_times_k2_bounds(&g).map_err(bounds_failure)?, build(family, n, seeds))
        }
        Family::Knn => (complete_bipartite_bounds(4 * n as u64, 4 * n as u64), build(family, 4 * n, seeds)),
        Family::KnnnXK2 => (knnn_times_k2_bounds(n as u64).map_err(bounds_failure)?, build(family, n, seeds)),
    };
    let d = match built {
        Ok(d) => Some(d),
        Err(Failure::SeedRequired(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Row {
        n,
        lower: report.lower,
        parts: d.as_ref().map(Decomposition::part_count),
        upper: report.upper,
        optimal: d.map(|d| d.guarantee == Guarantee::Optimal && verify_decomposition(&d.target, &d.parts).passed),
    })
}

pub fn table(family: Family, range: &str, csv: bool) -> Result<Output, Failure> {
    let sizes = parse_range(range).map_err(Failure::Usage)?;
    let seeds = seed_provider(None);
    let rows = sizes.into_iter().map(|n| table_row(family, n, seeds.as_deref())).collect::<Result<Vec<_>, _>>()?;
    let index = if matches!(family, Family::Knn) { "p" } else { "n" };
    let header = [index, "lower", "parts", "upper", "optimal"].map(String::from);
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.lower.to_string(),
                r.parts.map_or("UNSUPPORTED".into(), |p| p.to_string()),
                r.upper.map_or("unknown".into(), |u| u.to_string()),
                r.optimal.map_or("-".into(), |o| if o { "yes".into() } else { "no".into() }),
            ]
        })
        .collect();
    let mut text = String::new();
    if csv {
        for line in std::iter::once(&header).chain(&cells) {
            text.push_str(&line.join(","));
            text.push('\n');
        }
    } else {
        let widths: Vec<usize> =
            (0..5).map(|c| std::iter::once(&header).chain(&cells).map(|l| l[c].len()).max().unwrap_or(0)).collect();
        for line in std::iter::once(&header).chain(&cells) {
            let padded: Vec<String> = line.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            text.push_str(padded.join("  ").trim_end());
            text.push('\n');
        }
    }
    ok(text)
}
