//! Command implementations behind the CLI binary: fit, scan, simulate and
//! verify. Each takes an options struct and a writer for the human-readable
//! summary, so they are directly testable without a process boundary.

use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::algebra::moebius::{inverse_moebius, moebius_transform};
use crate::algebra::poly::SymbolicPolynomial;
use crate::algebra::quadrics::{hibi_quadrics, symbolic_sum_check, verify_invariants, verify_invariants_exact};
use crate::counts::CountVector;
use crate::error::{CbnError, Result};
use crate::io::report::FitReport;
use crate::io::svg::{scan_scatter_svg, ScanPoint};
use crate::io::table::{format_count, DataFormat, GenotypeTable};
use crate::lattice::GenotypeLattice;
use crate::model::CbnModel;
use crate::poset::Poset;
use crate::select;

/// Where a poset comes from: an inline `"A<B;A<C"` spec or a file holding
/// the same syntax (newlines work like semicolons, `#` starts a comment).
#[derive(Debug, Clone)]
pub enum PosetSource {
    Inline(String),
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub enum ThetaSpec {
    Random,
    List(Vec<f64>),
}

// ---------------------------------------------------------------- fit ----

#[derive(Debug, Clone)]
pub struct FitOptions {
    pub data: PathBuf,
    pub format: DataFormat,
    pub epsilon: f64,
    /// Merge indistinguishable events instead of failing on unseparated
    /// data.
    pub merge: bool,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

pub fn run_fit(opts: &FitOptions, w: &mut dyn Write) -> Result<FitReport> {
    let table = GenotypeTable::read_path(&opts.data, opts.format)?;
    let u = table.to_counts()?;
    ensure_separated_or_merge(&u, opts.merge)?;
    let fit = select::fit(&u, opts.epsilon)?;
    let report = FitReport::from_fit(&fit, table.event_names(), opts.seed, None)?;
    if let Some(path) = &opts.out {
        write_file(path, report.to_json().as_bytes())?;
    }
    print_fit_summary(w, &report)?;
    Ok(report)
}

fn print_fit_summary(w: &mut dyn Write, r: &FitReport) -> Result<()> {
    writeln!(w, "events: {}", r.event_names.join(", "))?;
    if let Some(groups) = &r.merge_groups {
        let merged: Vec<String> = groups
            .iter()
            .filter(|g| g.len() > 1)
            .map(|g| g.join("+"))
            .collect();
        if !merged.is_empty() {
            writeln!(w, "merged indistinguishable events: {}", merged.join(", "))?;
        }
    }
    writeln!(w, "cover relations:")?;
    if r.cover_relations.is_empty() {
        writeln!(w, "  (none)")?;
    }
    for (a, b) in &r.cover_relations {
        writeln!(w, "  {a} < {b}")?;
    }
    writeln!(w, "theta_hat:")?;
    for (name, t) in r.event_names.iter().zip(&r.theta_hat) {
        let mark = if r.unidentified_events.contains(name) {
            "  (unidentified)"
        } else {
            ""
        };
        writeln!(w, "  {name} = {t:.6}{mark}")?;
    }
    writeln!(w, "lambda_hat = {:.6}", r.lambda_hat)?;
    match r.epsilon_max {
        Some(hi) if hi > r.epsilon => {
            writeln!(w, "epsilon = {} (fit is identical up to {hi})", r.epsilon)?
        }
        _ => writeln!(w, "epsilon = {}", r.epsilon)?,
    }
    writeln!(w, "log_lik = {}", r.log_lik)?;
    writeln!(w, "lattice size = {}", r.lattice_size)?;
    writeln!(
        w,
        "compatible mass = {} of {}",
        format_count(r.n_compatible),
        format_count(r.n_total)
    )?;
    Ok(())
}

// --------------------------------------------------------------- scan ----

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub data: PathBuf,
    pub format: DataFormat,
    /// Explicit tolerance grid; `None` scans every distinct violation
    /// fraction in the data.
    pub epsilons: Option<Vec<f64>>,
    pub bootstrap: Option<usize>,
    pub seed: u64,
    pub merge: bool,
    /// JSON array of per-poset reports.
    pub out: Option<PathBuf>,
    /// Two-column CSV (fraction_incompatible, log_lik).
    pub csv: Option<PathBuf>,
    /// SVG scatter.
    pub plot: Option<PathBuf>,
}

pub fn run_scan(opts: &ScanOptions, w: &mut dyn Write) -> Result<Vec<FitReport>> {
    let table = GenotypeTable::read_path(&opts.data, opts.format)?;
    let u = table.to_counts()?;
    ensure_separated_or_merge(&u, opts.merge)?;
    let grid = match &opts.epsilons {
        Some(g) => g.clone(),
        None => select::auto_epsilon_grid(&u)?,
    };
    let result = select::scan(&u, &grid)?;

    let mut reports = Vec::with_capacity(result.entries.len());
    let mut points = Vec::with_capacity(result.entries.len());
    for (idx, entry) in result.entries.iter().enumerate() {
        let bootstrap = match opts.bootstrap {
            // Entries get seeds 2^32 apart; replicates within an entry use
            // consecutive offsets.
            Some(b) => {
                let working = working_counts(&u, &entry.fit)?;
                Some(select::bootstrap_loglik(
                    &working,
                    &entry.fit.poset,
                    b,
                    opts.seed.wrapping_add((idx as u64) << 32),
                )?)
            }
            None => None,
        };
        let mut report = FitReport::from_fit(
            &entry.fit,
            table.event_names(),
            opts.bootstrap.map(|_| opts.seed),
            bootstrap,
        )?;
        report.epsilon = entry.epsilon_min;
        report.epsilon_max = Some(entry.epsilon_max);
        points.push(ScanPoint {
            x: entry.fraction_incompatible,
            y: entry.fit.log_lik,
            whiskers: bootstrap,
        });
        reports.push(report);
    }

    if let Some(path) = &opts.out {
        let mut text = serde_json::to_string_pretty(&reports).expect("reports serialize");
        text.push('\n');
        write_file(path, text.as_bytes())?;
    }
    if let Some(path) = &opts.csv {
        let mut text = String::from("fraction_incompatible,log_lik\n");
        for entry in &result.entries {
            text.push_str(&format!(
                "{},{}\n",
                entry.fraction_incompatible, entry.fit.log_lik
            ));
        }
        write_file(path, text.as_bytes())?;
    }
    if let Some(path) = &opts.plot {
        write_file(path, scan_scatter_svg(&points).as_bytes())?;
    }

    writeln!(w, "scanned {} tolerance(s), {} distinct poset(s)", grid.len(), reports.len())?;
    for (entry, report) in result.entries.iter().zip(&reports) {
        writeln!(
            w,
            "epsilon [{}, {}]: {} cover relation(s), fraction_incompatible = {:.6}, log_lik = {}",
            entry.epsilon_min,
            entry.epsilon_max,
            report.cover_relations.len(),
            entry.fraction_incompatible,
            entry.fit.log_lik
        )?;
    }
    if let Some(first) = reports.first() {
        // Ties go to the smallest tolerance.
        let best = reports[1..].iter().fold(first, |best, r| {
            if r.log_lik > best.log_lik {
                r
            } else {
                best
            }
        });
        writeln!(w, "best log_lik at epsilon = {}", best.epsilon)?;
    }
    Ok(reports)
}

/// The count vector the fit actually used: the original data, reduced by
/// the fit's event merge when one happened.
fn working_counts(u: &CountVector, fit: &select::MixtureFit) -> Result<CountVector> {
    match &fit.merge {
        None => Ok(u.clone()),
        Some(_) => Ok(select::merge_events(u)?.0),
    }
}

// ----------------------------------------------------------- simulate ----

#[derive(Debug, Clone)]
pub struct SimulateOptions {
    pub poset: PosetSource,
    /// Event names; defaults to `e1..ek` where k = θ length.
    pub events: Option<Vec<String>>,
    pub theta: Vec<f64>,
    pub n: u64,
    pub seed: u64,
    /// Counts-format CSV destination; stdout when absent.
    pub out: Option<PathBuf>,
}

pub fn run_simulate(opts: &SimulateOptions, w: &mut dyn Write) -> Result<()> {
    let names = resolve_event_names(&opts.events, Some(opts.theta.len()), None)?;
    let relations = load_poset_relations(&opts.poset, &names)?;
    let poset = Poset::from_relations(names.len(), &relations)?;
    let model = CbnModel::new(poset, opts.theta.clone())?;
    let sample = model.sample(opts.n, opts.seed);
    let table = GenotypeTable::from_counts(&sample, &names)?;
    match &opts.out {
        Some(path) => {
            let mut buf = Vec::new();
            table.write_counts_format(&mut buf)?;
            write_file(path, &buf)?;
            writeln!(
                w,
                "wrote {} observation(s), {} distinct genotype(s), seed {}",
                format_count(sample.total()),
                sample.support_len(),
                opts.seed
            )?;
        }
        None => table.write_counts_format(w)?,
    }
    Ok(())
}

// ------------------------------------------------------------- verify ----

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub poset: PosetSource,
    /// Event names; inferred from the relation spec (order of first
    /// appearance) when absent and θ is random.
    pub events: Option<Vec<String>>,
    pub theta: ThetaSpec,
    pub trials: usize,
    pub seed: u64,
    /// Corrupt each tested distribution; the run must then FAIL.
    pub negative_control: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOutcome {
    pub passed: bool,
    /// Largest floating-point residual seen across all numeric checks.
    pub max_residual: f64,
}

/// Numeric residuals this far from zero count as failures. The identities
/// are exact; double rounding across a ≤ `SYMBOLIC_LATTICE_CAP` lattice
/// stays orders of magnitude below this.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

pub fn run_verify(opts: &VerifyOptions, w: &mut dyn Write) -> Result<VerifyOutcome> {
    let spec_text = load_poset_text(&opts.poset)?;
    let theta_len = match &opts.theta {
        ThetaSpec::List(t) => Some(t.len()),
        ThetaSpec::Random => None,
    };
    let names = resolve_event_names(&opts.events, theta_len, Some(&spec_text))?;
    let n = names.len();
    let relations = parse_poset_spec(&spec_text, &names)?;
    let poset = Poset::from_relations(n, &relations)?;

    let mut passed = true;
    let mut max_residual = 0.0f64;
    let mut check = |w: &mut dyn Write, label: &str, ok: bool, detail: String| {
        passed &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        writeln!(w, "{label}: {detail}{verdict}").map(|_| ())
    };

    // Exact symbolic normalization.
    let sum = symbolic_sum_check(&poset)?;
    check(
        w,
        "symbolic sum of genotype polynomials equals 1",
        sum == SymbolicPolynomial::one(n),
        String::new(),
    )?;

    let lattice = GenotypeLattice::enumerate(&poset)?;
    let len = lattice.len();
    writeln!(
        w,
        "lattice: {} genotype(s), {} quadratic invariant(s)",
        len,
        hibi_quadrics(&lattice).len()
    )?;

    // Exact Möbius roundtrip on a fixed rational distribution
    // p_i = 2(i+1) / (L(L+1)).
    let denom = (len as i64) * (len as i64 + 1);
    let p_exact: Vec<BigRational> = (0..len as i64)
        .map(|i| BigRational::new((2 * (i + 1)).into(), denom.into()))
        .collect();
    let roundtrip = inverse_moebius(&lattice, &moebius_transform(&lattice, &p_exact)?)?;
    check(w, "exact Moebius transform roundtrip", roundtrip == p_exact, String::new())?;

    // Per-trial numeric checks at float θ.
    let trials = match &opts.theta {
        ThetaSpec::List(_) => 1,
        ThetaSpec::Random => opts.trials.max(1),
    };
    let mut rng = ChaCha12Rng::seed_from_u64(opts.seed);
    for trial in 0..trials {
        let theta: Vec<f64> = match &opts.theta {
            ThetaSpec::List(t) => t.clone(),
            ThetaSpec::Random => (0..n).map(|_| rng.random::<f64>()).collect(),
        };
        let model = CbnModel::new(poset.clone(), theta)?;
        let (lat, mut p) = model.distribution()?;

        let q = moebius_transform(&lat, &p)?;
        let mut subsum_residual = 0.0f64;
        for (i, h) in lat.ideals().iter().enumerate() {
            subsum_residual = subsum_residual.max((q[i] - model.marginal_subsum(h)?).abs());
        }
        max_residual = max_residual.max(subsum_residual);
        check(
            w,
            &format!("trial {trial}: superset sums match marginal subsums"),
            subsum_residual < VERIFY_TOLERANCE,
            format!("max residual {subsum_residual:.3e}, "),
        )?;

        if opts.negative_control {
            // Deliberately leak probability mass; the invariants must
            // notice.
            p[0] += 0.01;
        }
        let quad_residual = verify_invariants(&lat, &p)?;
        max_residual = max_residual.max(quad_residual);
        check(
            w,
            &format!("trial {trial}: invariants vanish on the distribution"),
            quad_residual < VERIFY_TOLERANCE,
            format!("max residual {quad_residual:.3e}, "),
        )?;
    }

    // Exact vanishing at rational θ drawn from {0/64, …, 64/64}.
    let mut exact_ok = true;
    for _ in 0..trials {
        let theta: Vec<BigRational> = match &opts.theta {
            ThetaSpec::List(t) => t
                .iter()
                .map(|&x| {
                    BigRational::from_float(x).ok_or_else(|| {
                        CbnError::Domain(format!("non-finite parameter {x}"))
                    })
                })
                .collect::<Result<_>>()?,
            ThetaSpec::Random => (0..n)
                .map(|_| BigRational::new(rng.random_range(0..=64u32).into(), 64.into()))
                .collect(),
        };
        let (lat, p) = crate::algebra::quadrics::exact_distribution(&poset, &theta)?;
        let worst = verify_invariants_exact(&lat, &p)?;
        exact_ok &= worst.is_zero();
    }
    check(
        w,
        "invariants vanish identically at rational parameters",
        exact_ok,
        String::new(),
    )?;

    if opts.negative_control {
        writeln!(w, "(negative control: distributions were corrupted on purpose)")?;
    }
    let verdict = if passed { "PASS" } else { "FAIL" };
    writeln!(w, "overall: {verdict} (max numeric residual {max_residual:.3e})")?;
    Ok(VerifyOutcome { passed, max_residual })
}

// ------------------------------------------------------------ helpers ----

fn ensure_separated_or_merge(u: &CountVector, merge: bool) -> Result<()> {
    let (separated, _) = select::separates_events(u)?;
    if !separated && !merge {
        return Err(CbnError::CallerMustMerge);
    }
    Ok(())
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes)?;
    Ok(())
}

/// Parses an `"A<B;A<C"` relation spec against known event names.
/// Newlines work like semicolons and `#` starts a comment, so the same
/// grammar reads poset files.
pub fn parse_poset_spec(spec: &str, names: &[String]) -> Result<Vec<(usize, usize)>> {
    let mut relations = Vec::new();
    for (i, raw) in spec.split([';', '\n']).enumerate() {
        let item = raw.split('#').next().unwrap_or("").trim();
        if item.is_empty() {
            continue;
        }
        let Some((a, b)) = item.split_once('<') else {
            return Err(CbnError::Parse {
                line: i + 1,
                msg: format!("expected \"event<event\", got {item:?}"),
            });
        };
        let e = lookup_name(names, a.trim(), i + 1)?;
        let f = lookup_name(names, b.trim(), i + 1)?;
        relations.push((e, f));
    }
    Ok(relations)
}

fn lookup_name(names: &[String], name: &str, line: usize) -> Result<usize> {
    names.iter().position(|n| n == name).ok_or_else(|| CbnError::Parse {
        line,
        msg: format!("unknown event name {name:?}"),
    })
}

fn load_poset_text(source: &PosetSource) -> Result<String> {
    match source {
        PosetSource::Inline(s) => Ok(s.clone()),
        PosetSource::File(path) => Ok(std::fs::read_to_string(path)?),
    }
}

fn load_poset_relations(source: &PosetSource, names: &[String]) -> Result<Vec<(usize, usize)>> {
    parse_poset_spec(&load_poset_text(source)?, names)
}

/// Event names, in priority order: explicit list; `e1..ek` when a θ list
/// pins the width; otherwise the names appearing in the relation spec, in
/// order of first appearance (isolated events then need an explicit list).
fn resolve_event_names(
    events: &Option<Vec<String>>,
    theta_len: Option<usize>,
    spec_text: Option<&str>,
) -> Result<Vec<String>> {
    if let Some(names) = events {
        for name in names {
            crate::io::table::check_name(name)?;
        }
        let mut seen = std::collections::HashSet::new();
        for name in names {
            if !seen.insert(name.as_str()) {
                return Err(CbnError::Parse {
                    line: 0,
                    msg: format!("duplicate event name {name:?}"),
                });
            }
        }
        if let Some(k) = theta_len {
            if names.len() != k {
                return Err(CbnError::DimensionMismatch { expected: k, got: names.len() });
            }
        }
        return Ok(names.clone());
    }
    if let Some(k) = theta_len {
        return Ok((1..=k).map(|i| format!("e{i}")).collect());
    }
    let Some(text) = spec_text else {
        return Err(CbnError::Parse {
            line: 0,
            msg: "event names are needed (pass --events or --theta)".to_string(),
        });
    };
    let mut names: Vec<String> = Vec::new();
    for raw in text.split([';', '\n']) {
        let item = raw.split('#').next().unwrap_or("").trim();
        if item.is_empty() {
            continue;
        }
        for part in item.split('<') {
            let name = part.trim();
            crate::io::table::check_name(name)?;
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    if names.is_empty() {
        return Err(CbnError::Parse {
            line: 0,
            msg: "no event names found in the poset spec".to_string(),
        });
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }

    #[test]
    fn poset_spec_parses_names_and_reports_unknowns() {
        let ns = names(&["V82A", "K20R", "I54V"]);
        let rels =
            parse_poset_spec("V82A<I54V;K20R<I54V", &ns).unwrap();
        assert_eq!(rels, [(0, 2), (1, 2)]);
        let rels = parse_poset_spec("# comment\nV82A<I54V\n\nK20R < I54V\n", &ns).unwrap();
        assert_eq!(rels, [(0, 2), (1, 2)]);
        assert!(matches!(
            parse_poset_spec("V82A<X", &ns),
            Err(CbnError::Parse { .. })
        ));
        assert!(matches!(
            parse_poset_spec("V82A I54V", &ns),
            Err(CbnError::Parse { .. })
        ));
    }

    #[test]
    fn event_names_resolve_from_each_source() {
        assert_eq!(
            resolve_event_names(&Some(names(&["a", "b"])), Some(2), None).unwrap(),
            names(&["a", "b"])
        );
        assert_eq!(
            resolve_event_names(&None, Some(3), None).unwrap(),
            names(&["e1", "e2", "e3"])
        );
        assert_eq!(
            resolve_event_names(&None, None, Some("B<C;A<C")).unwrap(),
            names(&["B", "C", "A"])
        );
        assert!(matches!(
            resolve_event_names(&Some(names(&["a"])), Some(2), None),
            Err(CbnError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            resolve_event_names(&Some(names(&["a", "a"])), None, None),
            Err(CbnError::Parse { .. })
        ));
    }

    #[test]
    fn simulate_all_ones_writes_full_genotypes() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("data.csv");
        let opts = SimulateOptions {
            poset: PosetSource::Inline("e1<e2".to_string()),
            events: None,
            theta: vec![1.0, 1.0],
            n: 5,
            seed: 3,
            out: Some(out.clone()),
        };
        let mut sink = Vec::new();
        run_simulate(&opts, &mut sink).unwrap();
        assert_eq!(std::fs::read_to_string(&out).unwrap(), "e1,e2\n11,5\n");
    }

    #[test]
    fn simulate_roundtrips_through_fit() {
        let dir = tempfile::tempdir().unwrap();
        let data = dir.path().join("sim.csv");
        run_simulate(
            &SimulateOptions {
                poset: PosetSource::Inline("A<C;B<C".to_string()),
                events: Some(names(&["A", "B", "C"])),
                theta: vec![0.8, 0.7, 0.6],
                n: 4000,
                seed: 17,
                out: Some(data.clone()),
            },
            &mut Vec::new(),
        )
        .unwrap();
        let report = run_fit(
            &FitOptions {
                data: data.clone(),
                format: DataFormat::Auto,
                epsilon: 0.0,
                merge: false,
                seed: None,
                out: None,
            },
            &mut Vec::new(),
        )
        .unwrap();
        assert_eq!(
            report.cover_relations,
            [
                ("A".to_string(), "C".to_string()),
                ("B".to_string(), "C".to_string())
            ]
        );
        assert_eq!(report.lambda_hat, 1.0);
    }

    #[test]
    fn fit_requires_merge_flag_on_unseparated_data() {
        let dir = tempfile::tempdir().unwrap();
        let data = write_temp(&dir, "merged.csv", "a,b\n00,5\n11,5\n");
        let base = FitOptions {
            data,
            format: DataFormat::Auto,
            epsilon: 0.0,
            merge: false,
            seed: None,
            out: None,
        };
        let err = run_fit(&base, &mut Vec::new()).unwrap_err();
        assert!(matches!(err, CbnError::CallerMustMerge));
        let report = run_fit(&FitOptions { merge: true, ..base }, &mut Vec::new()).unwrap();
        assert_eq!(report.event_names, ["a+b"]);
        assert_eq!(report.merge_groups, Some(vec![names(&["a", "b"])]));
    }

    #[test]
    fn fit_writes_report_file() {
        let dir = tempfile::tempdir().unwrap();
        let data = write_temp(&dir, "d.csv", "a,b\n00,2\n10,3\n11,5\n");
        let out = dir.path().join("report.json");
        let report = run_fit(
            &FitOptions {
                data,
                format: DataFormat::Auto,
                epsilon: 0.0,
                merge: false,
                seed: Some(1),
                out: Some(out.clone()),
            },
            &mut Vec::new(),
        )
        .unwrap();
        let text = std::fs::read_to_string(&out).unwrap();
        assert_eq!(FitReport::from_json(&text).unwrap(), report);
        assert_eq!(report.cover_relations, [("a".to_string(), "b".to_string())]);
    }

    #[test]
    fn scan_emits_json_csv_and_svg() {
        let dir = tempfile::tempdir().unwrap();
        // Mostly chain-like data with one incompatible stray.
        let data = write_temp(&dir, "d.csv", "a,b\n00,6\n10,8\n11,5\n01,1\n");
        let opts = ScanOptions {
            data,
            format: DataFormat::Auto,
            epsilons: None,
            bootstrap: Some(40),
            seed: 9,
            merge: false,
            out: Some(dir.path().join("scan.json")),
            csv: Some(dir.path().join("scan.csv")),
            plot: Some(dir.path().join("scan.svg")),
        };
        let mut sink = Vec::new();
        let reports = run_scan(&opts, &mut sink).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.bootstrap.is_some()));

        let json = std::fs::read_to_string(dir.path().join("scan.json")).unwrap();
        let back: Vec<FitReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, reports);

        let csv = std::fs::read_to_string(dir.path().join("scan.csv")).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("fraction_incompatible,log_lik"));
        assert_eq!(lines.count(), reports.len());

        let svg = std::fs::read_to_string(dir.path().join("scan.svg")).unwrap();
        assert_eq!(svg.matches("<circle").count(), reports.len());

        // Determinism: a second run reproduces every artifact byte for byte.
        let dir2 = tempfile::tempdir().unwrap();
        let data2 = write_temp(&dir2, "d.csv", "a,b\n00,6\n10,8\n11,5\n01,1\n");
        let opts2 = ScanOptions {
            data: data2,
            out: Some(dir2.path().join("scan.json")),
            csv: Some(dir2.path().join("scan.csv")),
            plot: Some(dir2.path().join("scan.svg")),
            ..opts
        };
        run_scan(&opts2, &mut Vec::new()).unwrap();
        for name in ["scan.json", "scan.csv", "scan.svg"] {
            assert_eq!(
                std::fs::read(dir.path().join(name)).unwrap(),
                std::fs::read(dir2.path().join(name)).unwrap(),
                "{name} differs between runs"
            );
        }
    }

    #[test]
    fn verify_passes_on_model_and_fails_on_control() {
        let opts = VerifyOptions {
            poset: PosetSource::Inline("e1<e3;e2<e3;e1<e4;e2<e4".to_string()),
            events: None,
            theta: ThetaSpec::List(vec![0.7, 0.4, 0.6, 0.3]),
            trials: 3,
            seed: 5,
            negative_control: false,
        };
        let mut out = Vec::new();
        let outcome = run_verify(&opts, &mut out).unwrap();
        assert!(outcome.passed);
        assert!(outcome.max_residual < VERIFY_TOLERANCE);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("overall: PASS"));

        let control = VerifyOptions { negative_control: true, ..opts };
        let mut out = Vec::new();
        let outcome = run_verify(&control, &mut out).unwrap();
        assert!(!outcome.passed);
        assert!(outcome.max_residual > VERIFY_TOLERANCE);
        assert!(String::from_utf8(out).unwrap().contains("overall: FAIL"));
    }

    #[test]
    fn verify_random_thetas_pass() {
        let opts = VerifyOptions {
            poset: PosetSource::Inline("A<B;B<C".to_string()),
            events: None,
            theta: ThetaSpec::Random,
            trials: 4,
            seed: 11,
            negative_control: false,
        };
        let mut out = Vec::new();
        let outcome = run_verify(&opts, &mut out).unwrap();
        assert!(outcome.passed);
        // A chain has no incomparable pairs, hence no quadrics.
        assert!(String::from_utf8(out).unwrap().contains("0 quadratic invariant(s)"));
    }

    #[test]
    fn verify_reads_poset_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_temp(
            &dir,
            "poset.txt",
            "# a two-by-two poset\nA<C\nB<C\nA<D\nB<D\n",
        );
        let opts = VerifyOptions {
            poset: PosetSource::File(path),
            events: None,
            theta: ThetaSpec::Random,
            trials: 2,
            seed: 1,
            negative_control: false,
        };
        let outcome = run_verify(&opts, &mut Vec::new()).unwrap();
        assert!(outcome.passed);
    }
}
