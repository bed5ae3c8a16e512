use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use multicore::paths::count_gd;
use multicore::paths::{
    count_rect_paths, diagonal_partition, enumerate_gd, enumerate_rect_paths, panels_svg, LatticeDrawing,
};
use multicore::verify::{qdet_coarea, CheckReport, Instance, Suite, SuiteLimits};
use multicore::{
    multi_catalan, GapPoset, GdStep, GeneralizedDyckPath, LowerIdeal, Orientation, Partition, RectPath, Step,
};

use crate::args::{
    Command, CountKind, Format, GensArg, ListedGensArg, ListingArgs, PathKind, SvgArgs, VerifyArgs, VerifyTarget,
};
use crate::output::{self, big, json as json_text, lines};
use crate::{Failure, Outcome, Output};

const LIST_CAP: usize = 1_000_000;
const COUNT_CAP: usize = 10_000_000;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Poset { gens, format, reduce } => poset(&gens, format, reduce),
        Command::Ideals { gens, listing } => ideals(&gens, &listing),
        Command::Cores { gens, listing, total_size } => cores(&gens, &listing, total_size),
        Command::Paths { kind: PathKind::Rect { s, t, listing, svg } } => rect_paths(s, t, &listing, &svg),
        Command::Paths { kind: PathKind::Gd { n, k, listing, svg, ideals } } => gd_paths(n, k, &listing, &svg, ideals),
        Command::Count { what } => count(what),
        Command::Qdet { shape, s, t, format } => qdet(shape, s, t, format),
        Command::Hooks { shape, english, core_for, format } => hooks(shape, english, &core_for, format),
        Command::Verify(args) => verify(&args),
    }
}

fn allow(format: Format, allowed: &[Format], what: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        let names: Vec<&str> = allowed.iter().map(|f| format_name(*f)).collect();
        Err(Failure::Usage(format!(
            "--format {} is not available for {what} (use {})",
            format_name(format),
            names.join(" or ")
        )))
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Plain => "plain",
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Svg => "svg",
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn check_cap(count: &BigInt, cap: usize) -> Result<(), Failure> {
    if *count > BigInt::from(cap) {
        return Err(multicore::Error::CapExceeded { cap }.into());
    }
    Ok(())
}

/// Report for a file whose items were all accepted.
fn verified(kind: &str, n: usize, format: Format) -> Outcome {
    if format == Format::Json {
        #[derive(Serialize)]
        struct Verified<'a> {
            verified: &'a str,
            items: usize,
            ok: bool,
        }
        return Ok(Output::ok(json_text(&Verified { verified: kind, items: n, ok: true })?));
    }
    Ok(Output::ok(format!("ok: {n} {kind} verified\n")))
}

/// Compares the count recorded in a file, the number of items listed and the
/// independently computed total.
fn check_counts(recorded: &str, listed: usize, expected: &BigInt) -> Result<(), Failure> {
    let recorded: BigInt =
        recorded.parse().map_err(|_| Failure::Usage(format!("count {recorded:?} is not a decimal integer")))?;
    if recorded != BigInt::from(listed) {
        return Err(Failure::Check(format!("file records count {recorded} but lists {listed} items")));
    }
    if recorded != *expected {
        return Err(Failure::Check(format!("file lists {listed} items, expected {expected}")));
    }
    Ok(())
}

fn distinct<T: Ord + Clone + std::fmt::Debug>(items: &[T]) -> Result<(), Failure> {
    let mut seen = BTreeSet::new();
    for item in items {
        if !seen.insert(item.clone()) {
            return Err(Failure::Check(format!("duplicate item {item:?}")));
        }
    }
    Ok(())
}

fn poset_for(gens: &[u64]) -> Result<GapPoset, Failure> {
    Ok(GapPoset::from_generators(gens)?)
}

fn poset(gens: &GensArg, format: Format, reduce: bool) -> Outcome {
    allow(format, &[Format::Plain, Format::Json, Format::Dot], "poset")?;
    let p = poset_for(&gens.gens)?;
    let text = match format {
        Format::Json => json_text(&p.to_json())?,
        Format::Dot => p.to_dot(reduce),
        _ => {
            let gens: Vec<String> = p.generators().as_slice().iter().map(u64::to_string).collect();
            let gaps: Vec<String> = p.gaps().iter().map(u64::to_string).collect();
            let covers = if reduce { p.hasse_covers() } else { p.covers() };
            let mut out = format!("generators: {}\n", gens.join(","));
            out.push_str(&format!("gaps ({}): {}\n", p.len(), gaps.join(" ")));
            match p.frobenius_number() {
                Some(f) => out.push_str(&format!("frobenius number: {f}\n")),
                None => out.push_str("frobenius number: none\n"),
            }
            out.push_str(&format!("covers ({}):\n", covers.len()));
            out.push_str(&lines(covers.iter().map(|(a, b)| format!("  {a} > {b}"))));
            out
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize, Deserialize)]
struct IdealsJson {
    generators: Vec<u64>,
    count: String,
    ideals: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct CoresJson {
    generators: Vec<u64>,
    count: String,
    cores: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct CountJson<'a> {
    generators: &'a [u64],
    count: String,
}

fn ideals(gens: &ListedGensArg, listing: &ListingArgs) -> Outcome {
    allow(listing.format, &[Format::Plain, Format::Json], "ideals")?;
    if let Some(path) = &listing.from_file {
        let file: IdealsJson = read_json(path)?;
        let p = GapPoset::from_generators(&file.generators)?;
        let mut checked = Vec::with_capacity(file.ideals.len());
        for raw in &file.ideals {
            let ideal = p.lower_ideal(raw.iter().copied()).map_err(|e| Failure::Check(format!("{raw:?}: {e}")))?;
            if ideal.elements() != raw.as_slice() {
                return Err(Failure::Check(format!("{raw:?} is not sorted increasingly")));
            }
            checked.push(ideal);
        }
        distinct(&checked)?;
        check_counts(&file.count, checked.len(), &p.count_lower_ideals())?;
        return verified("lower ideals", checked.len(), listing.format);
    }
    let p = poset_for(&gens.gens)?;
    let count = p.count_lower_ideals();
    if listing.count_only {
        return count_output(&p, &count, listing.format);
    }
    let cap = listing.max_items.unwrap_or(LIST_CAP);
    check_cap(&count, cap)?;
    let all = p.lower_ideals(cap)?;
    let text = match listing.format {
        Format::Json => json_text(&IdealsJson {
            generators: p.generators().as_slice().to_vec(),
            count: big(&count),
            ideals: all.iter().map(|i| i.elements().to_vec()).collect(),
        })?,
        _ => lines(all.iter().map(output::ideal)),
    };
    Ok(Output::ok(text))
}

fn count_output(p: &GapPoset, count: &BigInt, format: Format) -> Outcome {
    let text = match format {
        Format::Json => json_text(&CountJson { generators: p.generators().as_slice(), count: big(count) })?,
        _ => format!("{count}\n"),
    };
    Ok(Output::ok(text))
}

fn cores(gens: &ListedGensArg, listing: &ListingArgs, total_size: bool) -> Outcome {
    allow(listing.format, &[Format::Plain, Format::Json], "cores")?;
    if let Some(path) = &listing.from_file {
        let file: CoresJson = read_json(path)?;
        let p = GapPoset::from_generators(&file.generators)?;
        let gens: Vec<usize> = file.generators.iter().map(|&g| g as usize).collect();
        let mut checked = Vec::with_capacity(file.cores.len());
        for raw in &file.cores {
            let core = Partition::new(raw.clone()).map_err(|e| Failure::Check(e.to_string()))?;
            if !core.is_multicore(&gens) {
                return Err(Failure::Check(format!("{core} is not a core for every generator")));
            }
            p.core_to_ideal(&core).map_err(|e| Failure::Check(e.to_string()))?;
            checked.push(core.parts().to_vec());
        }
        distinct(&checked)?;
        check_counts(&file.count, checked.len(), &p.count_lower_ideals())?;
        return verified("cores", checked.len(), listing.format);
    }
    let p = poset_for(&gens.gens)?;
    let count = p.count_lower_ideals();
    if listing.count_only {
        return count_output(&p, &count, listing.format);
    }
    if total_size {
        check_cap(&count, listing.max_items.unwrap_or(COUNT_CAP))?;
        let mut total = BigInt::from(0u32);
        p.for_each_lower_ideal(|ideal| total += p.ideal_to_core(ideal).size());
        let text = match listing.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Total<'a> {
                    generators: &'a [u64],
                    count: String,
                    total_size: String,
                }
                json_text(&Total {
                    generators: p.generators().as_slice(),
                    count: big(&count),
                    total_size: big(&total),
                })?
            }
            _ => format!("{total}\n"),
        };
        return Ok(Output::ok(text));
    }
    let cap = listing.max_items.unwrap_or(LIST_CAP);
    check_cap(&count, cap)?;
    let mut cores: Vec<Partition> = p.lower_ideals(cap)?.iter().map(|i| p.ideal_to_core(i)).collect();
    cores.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts())));
    let text = match listing.format {
        Format::Json => json_text(&CoresJson {
            generators: p.generators().as_slice().to_vec(),
            count: big(&count),
            cores: cores.iter().map(|c| c.parts().to_vec()).collect(),
        })?,
        _ => lines(cores.iter().map(output::partition)),
    };
    Ok(Output::ok(text))
}

#[derive(Serialize, Deserialize)]
struct RawRect {
    s: u64,
    t: u64,
    steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct RectJson {
    s: u64,
    t: u64,
    count: String,
    paths: Vec<RawRect>,
}

fn steps_string(steps: &[Step]) -> String {
    steps.iter().map(|s| if *s == Step::N { 'N' } else { 'E' }).collect()
}

fn emit_svg<D: LatticeDrawing>(items: &[D], svg: &SvgArgs) -> Result<String, Failure> {
    match svg.index {
        Some(i) => items
            .get(i)
            .map(|d| d.to_svg(svg.labels))
            .ok_or_else(|| Failure::Usage(format!("--index {i} out of range: only {} paths", items.len()))),
        None => Ok(panels_svg(items, svg.labels)),
    }
}

fn rect_paths(s: Option<u64>, t: Option<u64>, listing: &ListingArgs, svg: &SvgArgs) -> Outcome {
    allow(listing.format, &[Format::Plain, Format::Json, Format::Svg], "paths")?;
    if let Some(path) = &listing.from_file {
        let file: RectJson = read_json(path)?;
        let mut checked = Vec::with_capacity(file.paths.len());
        for raw in file.paths {
            if (raw.s, raw.t) != (file.s, file.t) {
                return Err(Failure::Check(format!(
                    "path in a {}x{} rectangle listed under s={}, t={}",
                    raw.t, raw.s, file.s, file.t
                )));
            }
            let p = RectPath::new(raw.s, raw.t, raw.steps).map_err(|e| Failure::Check(e.to_string()))?;
            checked.push(p.steps().to_vec());
        }
        distinct(&checked)?;
        check_counts(&file.count, checked.len(), &count_rect_paths(file.s, file.t)?)?;
        return verified("paths", checked.len(), listing.format);
    }
    let (s, t) = (s.unwrap_or_default(), t.unwrap_or_default());
    let count = count_rect_paths(s, t)?;
    if listing.count_only {
        return Ok(Output::ok(match listing.format {
            Format::Json => json_text(&json!({ "s": s, "t": t, "count": big(&count) }))?,
            _ => format!("{count}\n"),
        }));
    }
    let cap = listing.max_items.unwrap_or(LIST_CAP);
    check_cap(&count, cap)?;
    let paths = enumerate_rect_paths(s, t, cap)?;
    if let Some(file) = &svg.svg {
        write_file(file, &emit_svg(&paths, svg)?)?;
    }
    let text = match listing.format {
        Format::Json => json_text(&RectJson {
            s,
            t,
            count: big(&count),
            paths: paths.iter().map(|p| RawRect { s, t, steps: p.steps().to_vec() }).collect(),
        })?,
        Format::Svg => emit_svg(&paths, svg)?,
        _ => lines(paths.iter().map(|p| format!("{}  coarea {}", steps_string(p.steps()), p.coarea()))),
    };
    Ok(Output::ok(text))
}

#[derive(Serialize, Deserialize)]
struct RawGd {
    n: u64,
    k: u64,
    steps: Vec<GdStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ideal: Option<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct GdJson {
    n: u64,
    k: u64,
    count: String,
    paths: Vec<RawGd>,
}

fn gd_steps(p: &GeneralizedDyckPath) -> String {
    let steps: Vec<String> = p.steps().iter().map(GdStep::to_string).collect();
    steps.join(" ")
}

fn gd_poset(n: u64, k: u64) -> Result<GapPoset, Failure> {
    Ok(GapPoset::consecutive(n, k)?)
}

fn gd_paths(n: Option<u64>, k: Option<u64>, listing: &ListingArgs, svg: &SvgArgs, with_ideals: bool) -> Outcome {
    allow(listing.format, &[Format::Plain, Format::Json, Format::Svg], "paths")?;
    if let Some(path) = &listing.from_file {
        let file: GdJson = read_json(path)?;
        let poset = if file.paths.iter().any(|p| p.ideal.is_some()) { Some(gd_poset(file.n, file.k)?) } else { None };
        let mut checked = Vec::with_capacity(file.paths.len());
        for raw in file.paths {
            if (raw.n, raw.k) != (file.n, file.k) {
                return Err(Failure::Check(format!(
                    "path with n={}, k={} listed under n={}, k={}",
                    raw.n, raw.k, file.n, file.k
                )));
            }
            let p = GeneralizedDyckPath::new(raw.n, raw.k, raw.steps).map_err(|e| Failure::Check(e.to_string()))?;
            if let (Some(expected), Some(poset)) = (&raw.ideal, &poset) {
                let ideal = p.to_ideal(poset)?;
                if ideal.elements() != expected.as_slice() {
                    return Err(Failure::Check(format!(
                        "path {} maps to {}, file says {expected:?}",
                        gd_steps(&p),
                        output::ideal(&ideal)
                    )));
                }
            }
            checked.push(p.steps().to_vec());
        }
        distinct(&checked)?;
        check_counts(&file.count, checked.len(), &count_gd(file.n as i64, file.k)?)?;
        return verified("paths", checked.len(), listing.format);
    }
    let (n, k) = (n.unwrap_or_default(), k.unwrap_or_default());
    let count = count_gd(n as i64, k)?;
    if listing.count_only {
        return Ok(Output::ok(match listing.format {
            Format::Json => json_text(&json!({ "n": n, "k": k, "count": big(&count) }))?,
            _ => format!("{count}\n"),
        }));
    }
    let cap = listing.max_items.unwrap_or(LIST_CAP);
    check_cap(&count, cap)?;
    let paths = enumerate_gd(n, k, cap)?;
    let ideals: Option<Vec<LowerIdeal>> = if with_ideals {
        let poset = gd_poset(n, k)?;
        Some(paths.iter().map(|p| p.to_ideal(&poset)).collect::<multicore::Result<_>>()?)
    } else {
        None
    };
    if let Some(file) = &svg.svg {
        write_file(file, &emit_svg(&paths, svg)?)?;
    }
    let ideal_at = |i: usize| ideals.as_ref().map(|v| &v[i]);
    let text = match listing.format {
        Format::Json => json_text(&GdJson {
            n,
            k,
            count: big(&count),
            paths: paths
                .iter()
                .enumerate()
                .map(|(i, p)| RawGd {
                    n,
                    k,
                    steps: p.steps().to_vec(),
                    ideal: ideal_at(i).map(|x| x.elements().to_vec()),
                })
                .collect(),
        })?,
        Format::Svg => emit_svg(&paths, svg)?,
        _ => lines(paths.iter().enumerate().map(|(i, p)| match ideal_at(i) {
            Some(ideal) => format!("{}  {}", gd_steps(p), output::ideal(ideal)),
            None => gd_steps(p),
        })),
    };
    Ok(Output::ok(text))
}

fn count(what: CountKind) -> Outcome {
    let (value, params, format) = match what {
        CountKind::MultiCatalan { s, p, format } => (multi_catalan(s, p)?, json!({ "s": s, "p": p }), format),
        CountKind::Rect { s, t, format } => (count_rect_paths(s, t)?, json!({ "s": s, "t": t }), format),
        CountKind::Gd { n, k, format } => (count_gd(n, k)?, json!({ "n": n, "k": k }), format),
    };
    allow(format, &[Format::Plain, Format::Json], "count")?;
    let text = match format {
        Format::Json => {
            let mut obj = params;
            obj["value"] = big(&value).into();
            json_text(&obj)?
        }
        _ => format!("{value}\n"),
    };
    Ok(Output::ok(text))
}

fn qdet(shape: Option<Vec<usize>>, s: Option<u64>, t: Option<u64>, format: Format) -> Outcome {
    allow(format, &[Format::Plain, Format::Json], "qdet")?;
    let lambda = match (shape, s, t) {
        (Some(parts), _, _) => Partition::new(parts)?,
        (None, Some(s), Some(t)) => diagonal_partition(s, t)?,
        _ => return Err(Failure::Usage("give --shape or both --s and --t".into())),
    };
    let poly = qdet_coarea(&lambda);
    let coeffs: Vec<String> = poly.coeffs().iter().map(big).collect();
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Qdet {
                shape: Vec<usize>,
                coefficients: Vec<String>,
                polynomial: String,
            }
            json_text(&Qdet { shape: lambda.parts().to_vec(), coefficients: coeffs, polynomial: poly.to_string() })?
        }
        _ => format!("{}\n", coeffs.join(" ")),
    };
    Ok(Output::ok(text))
}

fn hooks(shape: Vec<usize>, english: bool, core_for: &[usize], format: Format) -> Outcome {
    allow(format, &[Format::Plain, Format::Json], "hooks")?;
    let lambda = Partition::new(shape)?;
    if core_for.contains(&0) {
        return Err(multicore::Error::ZeroHook.into());
    }
    let first: Vec<usize> = lambda.first_column_hooks().to_vec();
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct CoreFlag {
                s: usize,
                is_core: bool,
            }
            #[derive(Serialize)]
            struct Hooks {
                shape: Vec<usize>,
                size: usize,
                hooks: Vec<[usize; 3]>,
                first_column_hooks: Vec<usize>,
                cores: Vec<CoreFlag>,
            }
            json_text(&Hooks {
                shape: lambda.parts().to_vec(),
                size: lambda.size(),
                hooks: lambda.hooks().into_iter().map(|(r, c, h)| [r, c, h]).collect(),
                first_column_hooks: first,
                cores: core_for.iter().map(|&s| CoreFlag { s, is_core: lambda.is_core(s) }).collect(),
            })?
        }
        _ => {
            let orientation = if english { Orientation::English } else { Orientation::French };
            let mut out = lambda.render_hooks(orientation);
            let first: Vec<String> = first.iter().map(usize::to_string).collect();
            out.push_str(&format!("first column hooks: {}\n", first.join(" ")));
            for &s in core_for {
                match lambda.core_violation(s) {
                    None => out.push_str(&format!("{s}-core: yes\n")),
                    Some((r, c, h)) => out.push_str(&format!("{s}-core: no (hook {h} at row {r}, column {c})\n")),
                }
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn suites_for(target: VerifyTarget) -> Vec<Suite> {
    match target {
        VerifyTarget::All => Suite::ALL.to_vec(),
        VerifyTarget::Symmetry => vec![Suite::Symmetry],
        VerifyTarget::Popoviciu => vec![Suite::Popoviciu, Suite::FrobeniusSylvester],
        VerifyTarget::Identity => vec![Suite::CatalanIdentity, Suite::HessenbergCatalan],
        VerifyTarget::Gf => vec![Suite::GeneratingFunction],
        VerifyTarget::Conjecture => vec![Suite::Conjecture],
        VerifyTarget::Equinumerous => vec![Suite::EquinumerousPairs, Suite::EquinumerousConsecutive],
        VerifyTarget::Kreweras => vec![Suite::Kreweras],
        VerifyTarget::Qdet => vec![Suite::QDeterminant, Suite::Coarea],
        VerifyTarget::MultiCatalan => vec![Suite::MultiCatalan, Suite::Motzkin],
        VerifyTarget::Gd => vec![Suite::GdCounts, Suite::GdSmallN, Suite::GdBijection],
    }
}

fn limits_for(args: &VerifyArgs) -> SuiteLimits {
    let mut l = SuiteLimits::default();
    if let Some(v) = args.max_s {
        l.symmetry_max_s = v;
        l.conjecture_max_s = v;
        l.multi_catalan_max_s = v;
        l.motzkin_max_s = v;
    }
    if let Some(v) = args.max_t {
        l.popoviciu_max_t = v;
    }
    if let Some(v) = args.max_n {
        l.identity_max_n = v;
        l.gd_max_n = v;
    }
    if let Some(v) = args.max_k {
        l.gd_max_k = v;
        l.gd_small_max_k = v;
    }
    if let Some(v) = args.max_p {
        l.multi_catalan_max_p = v;
    }
    if let Some(v) = args.max_sum {
        l.pair_max_sum = v;
        l.coarea_max_sum = v;
    }
    if let Some(v) = args.box_side {
        l.kreweras_box = v;
        l.qdet_box = v;
    }
    if let Some(ps) = &args.p {
        l.gf_ps = ps.clone();
    }
    if let Some(v) = args.terms {
        l.gf_terms = v;
    }
    if let Some(v) = args.hessenberg_max_n {
        l.hessenberg_max_n = v;
    }
    if let Some(v) = args.bijection_max_n {
        l.gd_bijection_max_n = v;
    }
    if let Some(v) = args.bijection_max_k {
        l.gd_bijection_max_k = v;
    }
    l
}

#[derive(Serialize)]
struct ReportJson<'a> {
    id: &'a str,
    range: &'a str,
    passed: bool,
    counterexample: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    duration_secs: Option<f64>,
    instances: &'a [Instance],
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    reports: Vec<ReportJson<'a>>,
}

fn report_line(r: &CheckReport, timings: bool) -> String {
    let passed = r.instances.iter().filter(|i| i.pass).count();
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut line = format!("{status} {:<26} {passed}/{} instances  [{}]", r.id, r.instances.len(), r.range);
    if timings {
        line.push_str(&format!("  {:.3}s", r.duration_secs));
    }
    line.push('\n');
    line
}

fn verify(args: &VerifyArgs) -> Outcome {
    allow(args.format, &[Format::Plain, Format::Json], "verify")?;
    if args.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let limits = limits_for(args);
    let reports: Vec<CheckReport> = suites_for(args.target).into_iter().map(|s| s.run(&limits, args.jobs)).collect();
    if let Some(empty) = reports.iter().find(|r| r.instances.is_empty()) {
        return Err(Failure::Usage(format!("{}: the range [{}] contains no instances", empty.id, empty.range)));
    }
    let passed = reports.iter().all(CheckReport::passed);
    let text = match args.format {
        Format::Json => json_text(&VerifyJson {
            passed,
            reports: reports
                .iter()
                .map(|r| ReportJson {
                    id: &r.id,
                    range: &r.range,
                    passed: r.passed(),
                    counterexample: r.counterexample.as_deref(),
                    duration_secs: args.timings.then_some(r.duration_secs),
                    instances: &r.instances,
                })
                .collect(),
        })?,
        _ => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&report_line(r, args.timings));
                if !args.quiet {
                    for i in &r.instances {
                        let mark = if i.pass {
                            "ok  "
                        } else if i.counterexample {
                            "CEX "
                        } else {
                            "FAIL"
                        };
                        out.push_str(&format!("  {mark} {}  {}\n", i.params, i.detail));
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed == 0 {
                out.push_str(&format!("all {} suites passed\n", reports.len()));
            } else {
                out.push_str(&format!("{failed} of {} suites failed\n", reports.len()));
            }
            out
        }
    };
    Ok(Output { text, failed: !passed })
}
