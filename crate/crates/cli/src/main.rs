use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qdeg_core::distance::{exceptional_roots, ClaimResult, SuiteReport, SUITES};
use qdeg_core::rootsystem::mask_indices;
use qdeg_core::{
    verify_suite, ChainSearch, Degree, DegreeFront, Distance, Error, Execution, Options, Parabolic, RootSystem,
    TypeLetter, WeylElement,
};

const SCHEMA: &str = "qdeg/1";

#[derive(Parser, Debug)]
#[command(name = "qdeg", version, about = "Minimal quantum degrees on G/P from curve neighborhoods")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Positive roots and coroots.
    Roots(Common),
    /// The cascade of orthogonal roots with its parent tree.
    Cascade(Common),
    /// d_X, the minimal degree of a curve through two general points.
    Dx(Common),
    /// z_d^P and z_d^P w_P for a degree d.
    Z {
        #[command(flatten)]
        common: Common,
        /// Degree in the coordinates outside Δ_P, comma separated.
        #[arg(long)]
        degree: String,
    },
    /// δ_P(u): minimal degrees d with ū ⪯ z_d^P.
    Delta {
        #[command(flatten)]
        common: Common,
        /// Word in 1-based simple reflections, comma separated.
        #[arg(long, default_value = "")]
        u: String,
    },
    /// δ_P(u, v): minimal chain degrees, with witnesses.
    Delta2 {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long, default_value = "")]
        v: String,
    },
    /// Exceptional roots and the two technical inequalities.
    Exceptional(Common),
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Iterate every parabolic (rank ≤ 5).
        #[arg(long)]
        all_parabolics: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Cartan type letter.
    #[arg(long = "type")]
    letter: String,
    #[arg(long)]
    rank: usize,
    /// Δ_P as comma separated 1-based indices; "" is the Borel; "all" in verify.
    #[arg(long, default_value = "")]
    parabolic: String,
    #[arg(long)]
    json: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    /// Scan box in the coordinates outside Δ_P (default d_X + 2).
    #[arg(long = "box")]
    scan_box: Option<String>,
    /// Cap on the number of cosets enumerated.
    #[arg(long)]
    cap: Option<usize>,
    /// Largest coset count for which verify checks every (u, v) pair.
    #[arg(long)]
    pair_limit: Option<usize>,
}

enum Outcome {
    Pass,
    Fail,
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|_| Error::Usage(format!("bad {what} entry {x:?}"))))
        .collect()
}

fn parse_indices(s: &str, rank: usize, what: &str) -> Result<Vec<usize>, Error> {
    parse_list(s, what)?
        .into_iter()
        .map(|k| {
            if k >= 1 && k as usize <= rank {
                Ok(k as usize - 1)
            } else {
                Err(Error::Usage(format!("{what} index {k} outside 1..={rank}")))
            }
        })
        .collect()
}

struct Context {
    rs: RootSystem,
    p: Parabolic,
    opts: Options,
    json: bool,
}

impl Common {
    fn system(&self) -> Result<RootSystem, Error> {
        let letter = TypeLetter::parse(&self.letter).map_err(|e| Error::Usage(e.to_string()))?;
        RootSystem::new(letter, self.rank).map_err(|e| Error::Usage(e.to_string()))
    }

    fn parabolic(&self, rank: usize) -> Result<Parabolic, Error> {
        Parabolic::from_indices(rank, &parse_indices(&self.parabolic, rank, "parabolic")?)
    }

    fn options(&self) -> Result<Options, Error> {
        let mut opts = Options::default();
        if let Some(b) = &self.scan_box {
            opts.scan_box = Some(parse_list(b, "box")?.into_iter().map(|x| x as i32).collect());
        }
        if let Some(c) = self.cap {
            opts.coset_cap = c;
        }
        if let Some(l) = self.pair_limit {
            opts.pair_limit = l;
        }
        if let Some(j) = self.jobs {
            if j == 0 {
                return Err(Error::Usage("--jobs must be positive".into()));
            }
            if j == 1 {
                opts.exec = Execution::Sequential;
            } else {
                #[cfg(feature = "parallel")]
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build_global()
                    .map_err(|e| Error::Config(e.to_string()))?;
            }
        }
        Ok(opts)
    }

    fn context(&self) -> Result<Context, Error> {
        let rs = self.system()?;
        let p = if self.parabolic.trim() == "all" { Parabolic::borel(rs.rank()) } else { self.parabolic(rs.rank())? };
        let opts = self.options()?;
        Ok(Context { rs, p, opts, json: self.json })
    }
}

fn system_json(rs: &RootSystem) -> Value {
    json!({ "type": rs.letter().to_string(), "rank": rs.rank() })
}

fn word_json(rs: &RootSystem, w: &WeylElement) -> Value {
    json!(rs.reduced_word(w).iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn word_text(rs: &RootSystem, w: &WeylElement) -> String {
    let word = rs.reduced_word(w);
    if word.is_empty() {
        "1".into()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }
}

fn parse_word(rs: &RootSystem, s: &str) -> Result<WeylElement, Error> {
    Ok(rs.from_word(&parse_indices(s, rs.rank(), "word")?))
}

fn degree_text(d: &Degree) -> String {
    let parts: Vec<String> = d.parabolic().complement().iter().map(|&b| format!("{}:{}", b + 1, d.get(b))).collect();
    format!("[{}]", parts.join(", "))
}

fn front_text(f: &DegreeFront) -> String {
    let ds: Vec<String> = f.degrees.iter().map(degree_text).collect();
    format!("{{{}}}{}", ds.join(", "), if f.capped { " (capped by the scan box)" } else { "" })
}

// A closed stdout (e.g. piped into head) is not an error worth reporting.
fn emit(ctx: &Context, doc: Value, text: impl FnOnce() -> Vec<String>) {
    let mut out = std::io::stdout().lock();
    if ctx.json {
        let mut doc = doc;
        doc.as_object_mut().expect("object document").insert("schema".into(), json!(SCHEMA));
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        for line in text() {
            if writeln!(out, "{line}").is_err() {
                break;
            }
        }
    }
}

fn roots(ctx: &Context) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let list: Vec<Value> = (0..rs.num_positive())
        .map(|a| json!({ "root": rs.root(a).coeffs(), "coroot": rs.coroot_of(a).coeffs() }))
        .collect();
    let doc = json!({
        "system": system_json(rs),
        "roots": list,
        "highest_root": rs.highest_root().coeffs(),
        "highest_short_root": rs.highest_short_root().map(|r| r.coeffs().to_vec()),
    });
    emit(ctx, doc, || {
        let mut out = vec![format!("{}: {} positive roots", rs.name(), rs.num_positive())];
        for a in 0..rs.num_positive() {
            out.push(format!("{:?}  coroot {:?}", rs.root(a).coeffs(), rs.coroot_of(a).coeffs()));
        }
        out
    });
    Ok(Outcome::Pass)
}

fn cascade(ctx: &Context) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let c = rs.cascade();
    let members: Vec<Value> = c
        .roots
        .iter()
        .zip(&c.parent)
        .map(|(&r, par)| json!({ "root": rs.root(r).coeffs(), "parent": par.map(|q| rs.root(q).coeffs().to_vec()) }))
        .collect();
    let dgb = rs.d_gb();
    let doc = json!({ "system": system_json(rs), "cascade": members, "d_gb": { "coroot": dgb.coeffs() } });
    emit(ctx, doc, || {
        let mut out = vec![format!("{}: cascade of {} roots", rs.name(), c.roots.len())];
        for (&r, par) in c.roots.iter().zip(&c.parent) {
            match par {
                Some(q) => out.push(format!("{:?}  under {:?}", rs.root(r).coeffs(), rs.root(*q).coeffs())),
                None => out.push(format!("{:?}", rs.root(r).coeffs())),
            }
        }
        out.push(format!("d_G/B coroot {:?}", dgb.coeffs()));
        out
    });
    Ok(Outcome::Pass)
}

fn dx(ctx: &Context) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let d = rs.d_x(&ctx.p)?;
    let doc = json!({
        "system": system_json(rs),
        "parabolic": ctx.p.one_based(),
        "d_x": d.to_json(),
        "coefficients": d.outside(),
    });
    emit(ctx, doc, || vec![format!("d_X = {:?}", d.outside())]);
    Ok(Outcome::Pass)
}

fn z(ctx: &Context, degree: &str) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let vals: Vec<i32> = parse_list(degree, "degree")?.into_iter().map(|x| x as i32).collect();
    let d = Degree::from_outside(&ctx.p, &vals).map_err(|e| Error::Usage(e.to_string()))?;
    let z = rs.z(&d);
    let greedy: Vec<Vec<i32>> = rs.greedy_decomposition(&d).iter().map(|&a| rs.root(a).coeffs().to_vec()).collect();
    let doc = json!({
        "system": system_json(rs),
        "parabolic": ctx.p.one_based(),
        "degree": d.to_json(),
        "greedy": greedy,
        "z_min": word_json(rs, &z.z_min),
        "z_max": word_json(rs, &z.z_max),
    });
    emit(ctx, doc, || {
        vec![
            format!("greedy {:?}", greedy),
            format!("z_min {}", word_text(rs, &z.z_min)),
            format!("z_max {}", word_text(rs, &z.z_max)),
        ]
    });
    Ok(Outcome::Pass)
}

fn delta(ctx: &Context, u: &str) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let w = parse_word(rs, u)?;
    let dist = Distance::new(rs, &ctx.p, &ctx.opts)?;
    let f = dist.delta_w(&w)?;
    let doc = json!({
        "system": system_json(rs),
        "parabolic": ctx.p.one_based(),
        "u": word_json(rs, &w),
        "scan_box": dist.scan_box().to_json(),
        "front": f.to_json(),
    });
    emit(ctx, doc, || vec![format!("δ_P({}) = {}", word_text(rs, &w), front_text(&f))]);
    Ok(Outcome::Pass)
}

fn delta2(ctx: &Context, u: &str, v: &str) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let (wu, wv) = (parse_word(rs, u)?, parse_word(rs, v)?);
    let dist = Distance::new(rs, &ctx.p, &ctx.opts)?;
    let (cu, cv) = (dist.coset_of(&wu), dist.coset_of(&wv));
    let search = ChainSearch::from_up_set(&dist, cu);
    let f = search.front(cv);
    let witnesses: Vec<Value> =
        f.degrees.iter().filter_map(|d| search.witness(cv, d)).map(|w| w.to_json(&dist)).collect();
    let doc = json!({
        "system": system_json(rs),
        "parabolic": ctx.p.one_based(),
        "u": word_json(rs, &wu),
        "v": word_json(rs, &wv),
        "scan_box": dist.scan_box().to_json(),
        "front": f.to_json(),
        "witnesses": witnesses,
    });
    emit(ctx, doc, || {
        let mut out = vec![format!("δ_P({}, {}) = {}", word_text(rs, &wu), word_text(rs, &wv), front_text(&f))];
        for d in &f.degrees {
            if let Some(w) = search.witness(cv, d) {
                let steps: Vec<String> = w.edge_roots.iter().map(|&a| format!("{:?}", rs.root(a).coeffs())).collect();
                out.push(format!(
                    "  {} via {}",
                    degree_text(d),
                    if steps.is_empty() { "no steps".into() } else { steps.join(" ") }
                ));
            }
        }
        out
    });
    Ok(Outcome::Pass)
}

fn exceptional(ctx: &Context) -> Result<Outcome, Error> {
    let rs = &ctx.rs;
    let reports = exceptional_roots(rs);
    let outer: Vec<usize> = mask_indices(rs.full_mask() & !rs.delta_circ()).map(|b| b + 1).collect();
    let all_hold = reports.iter().all(|r| r.ineq1_holds && r.ineq3_holds);
    let doc = json!({
        "system": system_json(rs),
        "delta_minus_delta_circ": outer,
        "exceptional": reports.iter().map(|r| r.to_json(rs)).collect::<Vec<_>>(),
    });
    emit(ctx, doc, || {
        let mut out = vec![format!("{}: Δ \\ Δ° = {:?}, {} exceptional roots", rs.name(), outer, reports.len())];
        for r in &reports {
            out.push(format!(
                "{}  β = {}  φ = {}  first inequality {}  second inequality {}",
                rs.root(r.root).digits(),
                r.witness_beta + 1,
                rs.root(r.phi).digits(),
                if r.ineq1_strict {
                    "strict"
                } else if r.ineq1_holds {
                    "holds"
                } else {
                    "FAILS"
                },
                if r.ineq3_strict {
                    "strict"
                } else if r.ineq3_holds {
                    "holds"
                } else {
                    "FAILS"
                },
            ));
        }
        out
    });
    Ok(if all_hold { Outcome::Pass } else { Outcome::Fail })
}

fn verify(common: &Common, suite: &str, all_parabolics: bool) -> Result<Outcome, Error> {
    let ctx = common.context()?;
    let rs = &ctx.rs;
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Error::Usage(format!("unknown suite {suite:?}; known: all, {}", SUITES.join(", "))));
    };
    let parabolics = if all_parabolics || common.parabolic.trim() == "all" {
        if rs.rank() > 5 {
            return Err(Error::Usage("iterating every parabolic needs rank ≤ 5".into()));
        }
        Parabolic::all(rs.rank())
    } else {
        vec![ctx.p]
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for p in &parabolics {
        for name in &names {
            match verify_suite(name, rs, Some(p), &ctx.opts) {
                Ok(r) => reports.push(r),
                Err(Error::Verification(msg)) => {
                    let mut r = empty_report(name, rs, p);
                    r.claims = vec![ClaimResult {
                        name: "setup".into(),
                        checked: 1,
                        counterexample: Some(json!({ "error": msg })),
                    }];
                    reports.push(r);
                }
                Err(e) => return Err(e),
            }
        }
    }
    let passed = reports.iter().all(SuiteReport::passed);
    let doc = json!({
        "system": system_json(rs),
        "passed": passed,
        "reports": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
    });
    emit(&ctx, doc, || {
        let mut out = Vec::new();
        for r in &reports {
            let status = if !r.applicable {
                "n/a "
            } else if r.passed() {
                "PASS"
            } else {
                "FAIL"
            };
            out.push(format!("{status} {} on {} P = {:?}", r.suite, r.system, r.parabolic));
            for c in &r.claims {
                match &c.counterexample {
                    None => out.push(format!("  ok   {} ({} checked)", c.name, c.checked)),
                    Some(x) => out.push(format!("  FAIL {}: {}", c.name, x)),
                }
            }
            for o in &r.observations {
                out.push(format!("  note {o}"));
            }
        }
        out.push(if passed { "all suites passed".into() } else { "counterexample found".into() });
        out
    });
    Ok(if passed { Outcome::Pass } else { Outcome::Fail })
}

fn empty_report(name: &str, rs: &RootSystem, p: &Parabolic) -> SuiteReport {
    SuiteReport {
        suite: name.to_string(),
        system: rs.name(),
        parabolic: p.one_based(),
        scan_box: None,
        applicable: true,
        claims: Vec::new(),
        values: Default::default(),
        observations: Vec::new(),
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match &cli.verb {
        Verb::Roots(c) => roots(&c.context()?),
        Verb::Cascade(c) => cascade(&c.context()?),
        Verb::Dx(c) => dx(&c.context()?),
        Verb::Z { common, degree } => z(&common.context()?, degree),
        Verb::Delta { common, u } => delta(&common.context()?, u),
        Verb::Delta2 { common, u, v } => delta2(&common.context()?, u, v),
        Verb::Exceptional(c) => exceptional(&c.context()?),
        Verb::Verify { common, suite, all_parabolics } => verify(common, suite, *all_parabolics),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e @ (Error::Verification(_) | Error::Invariant(_))) => {
            eprintln!("qdeg: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("qdeg: {e}");
            ExitCode::from(2)
        }
    }
}
