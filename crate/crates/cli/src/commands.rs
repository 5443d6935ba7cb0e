//! One function per subcommand; each returns the serialized output and whether its checks passed.

use std::fmt::Write as _;
use std::fs;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use bsymbol::bsymbol::w_b;
use bsymbol::codes::{brute_distribution, Code};
use bsymbol::cyclotomy::{circulant_scan, gaussian_period_closed_form, PeriodSystem};
use bsymbol::enumerators::{closed_form_distribution, u_profile};
use bsymbol::grid::{table1, TABLE1_HEADER};
use bsymbol::hierarchy::{hierarchy_report, HierarchyMethod};
use bsymbol::numtheory::{divisors, prime_power};
use bsymbol::shorten::{bsymbol_shorten, min_weight_codeword, table2};
use bsymbol::suite::{verify, VerifyOptions};
use bsymbol::{
    DistributionView, EnumerationMode, FieldConfig, FieldDescriptor, Limits, VerificationReport, WeightDistribution,
    Word,
};

use crate::args::{
    CodeArgs, EnumerateCmd, FieldArgs, FieldCmd, Format, GlobalArgs, HierarchyCmd, Method, Mode, PeriodsCmd, ScanCmd,
    ShortenCmd, UsetCmd, VerifyCmd, View, WeightCmd,
};

/// Serialized output and the verdict of any checks it carries.
pub struct Output {
    pub body: String,
    pub passed: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, passed: true }
    }
}

pub struct Ctx {
    pub global: GlobalArgs,
}

impl Ctx {
    pub fn limits(&self) -> Limits {
        Limits { enumeration: self.global.enumeration_limit, subspaces: self.global.subspace_limit }
    }

    fn format(&self, default: Format) -> Format {
        self.global.format.unwrap_or(default)
    }

    /// The resolved run configuration embedded in every JSON output.
    fn config(&self, subcommand: &str, args: &impl Serialize, field: Option<FieldConfig>) -> Value {
        json!({
            "subcommand": subcommand,
            "args": args,
            "field": field,
            "limits": self.limits(),
            "seed": self.global.seed,
            "tolerance": self.global.tolerance,
        })
    }
}

fn to_json(v: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

/// `result` as a JSON object with the config under `"config"`.
fn with_config(result: impl Serialize, config: Value) -> Result<String> {
    let mut v = serde_json::to_value(result)?;
    match &mut v {
        Value::Object(map) => {
            map.insert("config".into(), config);
        }
        other => v = json!({ "result": other.take(), "config": config }),
    }
    to_json(&v)
}

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn resolve_field(p: u32, e: u32, args: &FieldArgs) -> Result<FieldDescriptor> {
    let cfg = match &args.field_config {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let cfg: FieldConfig =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            if (cfg.p, cfg.e) != (p, e) {
                bail!("field config describes F_{}^{}, expected F_{p}^{e}", cfg.p, cfg.e);
            }
            if args.modulus.is_some() && args.modulus != cfg.modulus {
                bail!("--modulus disagrees with the field config");
            }
            cfg
        }
        None => FieldConfig { p, e, modulus: args.modulus.clone() },
    };
    Ok(FieldDescriptor::from_config(&cfg)?)
}

fn build_code(args: &CodeArgs) -> Result<Code> {
    let e = args.s.checked_mul(args.m).filter(|&e| e > 0).context("s and m must be positive")?;
    let field = resolve_field(args.p, e, &args.field)?;
    Ok(Code::new(&field, args.s, args.big_n)?)
}

pub fn field(ctx: &Ctx, cmd: &FieldCmd) -> Result<Output> {
    let (p, e) = match (&cmd.field.field_config, cmd.p, cmd.e) {
        (_, Some(p), Some(e)) => (p, e),
        (Some(path), _, _) => {
            let cfg: FieldConfig = serde_json::from_str(&fs::read_to_string(path)?)?;
            (cfg.p, cfg.e)
        }
        _ => bail!("--p and --e are required without --field-config"),
    };
    let f = resolve_field(p, e, &cmd.field)?;
    let element = match cmd.element {
        Some(x) => {
            let el = f.element(x)?;
            let traces: serde_json::Map<String, Value> = divisors(e as u64)
                .into_iter()
                .map(|d| Ok((d.to_string(), json!(f.relative_trace(d as u32, el.value())?))))
                .collect::<Result<_>>()?;
            let log = if el.is_zero() { Value::Null } else { json!(f.discrete_log(x)?) };
            Some(json!({ "value": x, "digits": f.digits(x), "log": log, "traces": traces }))
        }
        None => None,
    };
    let result = json!({
        "p": f.p(),
        "e": f.e(),
        "order": f.order(),
        "modulus": f.modulus(),
        "alpha": f.alpha(),
        "subfield_degrees": divisors(e as u64),
        "element": element,
    });
    let config = ctx.config("field", cmd, Some(f.config()));
    match ctx.format(Format::Json) {
        Format::Json => Ok(Output::ok(with_config(result, config)?)),
        _ => Ok(Output::ok(format!("F_{}^{}: modulus {:?}, alpha = {}\n", f.p(), f.e(), f.modulus(), f.alpha()))),
    }
}

pub fn periods(ctx: &Ctx, cmd: &PeriodsCmd) -> Result<Output> {
    let e = cmd.s.checked_mul(cmd.m).filter(|&e| e > 0).context("s and m must be positive")?;
    let f = resolve_field(cmd.p, e, &cmd.field)?;
    let ps = PeriodSystem::exact(&f, cmd.k)?;
    let exact = ps.periods().expect("exact system");
    let closed: Vec<_> = (0..cmd.k).map(|i| gaussian_period_closed_form(cmd.p, cmd.s, cmd.m, cmd.k, i).ok()).collect();
    let case = closed.first().copied().flatten().map(|c| c.case.tag());
    let (eta, integer, passed) = if cmd.closed {
        let Some(case) = case else {
            bail!("no closed form applies to k = {} over F_{}^{}; use --exact", cmd.k, cmd.p, e);
        };
        let mut eta = Vec::new();
        let mut all_match = true;
        for (c, x) in closed.iter().zip(exact) {
            let c = c.with_context(|| format!("closed form missing for some class ({case})"))?;
            all_match &= c.value.matches(x);
            eta.push(
                c.value.as_integer().map_or_else(|| serde_json::to_value(c.value).expect("serializable"), |v| json!(v)),
            );
        }
        let integer = closed.iter().all(|c| c.is_some_and(|c| c.value.as_integer().is_some()));
        (eta, integer, all_match)
    } else {
        let eta = exact
            .iter()
            .map(|x| x.as_integer().map_or_else(|| json!({ "counts": x.counts() }), |v| json!(v)))
            .collect();
        (eta, exact.iter().all(|x| x.as_integer().is_some()), true)
    };
    let sum_ok = ps.exact_sum().and_then(|s| s.as_integer()) == Some(-1);
    let result = json!({
        "Q": f.order(),
        "k": cmd.k,
        "eta": eta,
        "integer": integer,
        "case": case.unwrap_or("exact"),
        "sum_is_minus_one": sum_ok,
        "closed_matches_exact": if cmd.closed { json!(passed) } else { Value::Null },
    });
    let config = ctx.config("periods", cmd, Some(f.config()));
    let body = match ctx.format(Format::Json) {
        Format::Json => with_config(result, config)?,
        _ => {
            let parts: Vec<String> = result["eta"].as_array().expect("array").iter().map(Value::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
    };
    Ok(Output { body, passed: passed && sum_ok })
}

pub fn conjecture_scan(ctx: &Ctx, cmd: &ScanCmd) -> Result<Output> {
    let rows = circulant_scan(cmd.max_order)?;
    let body = match ctx.format(Format::Csv) {
        Format::Json => with_config(&rows, ctx.config("conjecture15-scan", cmd, None))?,
        _ => {
            let mut out = csv_line(&["Q", "k", "min_abs_eval", "verdict"].map(String::from));
            for r in &rows {
                out.push_str(&csv_line(&[
                    r.field_order.to_string(),
                    r.k.to_string(),
                    format!("{:e}", r.min_abs_eval),
                    r.verdict.as_str().to_string(),
                ]));
            }
            out
        }
    };
    // the conjecture is open; the scan informs and never fails
    Ok(Output::ok(body))
}

/// Parses a comma-separated word over `F_q`.
pub fn parse_word(text: &str, q: u32, alpha_log: bool) -> Result<Word> {
    let (p, s) = prime_power(q as u64).with_context(|| format!("q = {q} is not a prime power"))?;
    let sub = FieldDescriptor::new(p as u32, s, None)?;
    let symbols = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| -> Result<u32> {
            if alpha_log {
                if tok == "-" {
                    return Ok(0);
                }
                let k: u64 = tok.parse().with_context(|| format!("bad discrete log {tok:?}"))?;
                Ok(sub.exp(k))
            } else if tok.contains(':') {
                let digits = tok.split(':').map(|d| d.parse::<u32>()).collect::<std::result::Result<Vec<_>, _>>()?;
                Ok(sub.from_digits(&digits)?)
            } else {
                Ok(tok.parse().with_context(|| format!("bad symbol {tok:?}"))?)
            }
        })
        .collect::<Result<Vec<u32>>>()?;
    Ok(Word::new(q, symbols)?)
}

pub fn weight(ctx: &Ctx, cmd: &WeightCmd) -> Result<Output> {
    let x = parse_word(&cmd.word, cmd.q, cmd.alpha_log)?;
    let weights = cmd.b.iter().map(|&b| Ok((b, w_b(&x, b)?))).collect::<Result<Vec<(usize, usize)>>>()?;
    let body = match ctx.format(Format::Text) {
        Format::Json => {
            let map: serde_json::Map<String, Value> = weights.iter().map(|(b, w)| (b.to_string(), json!(w))).collect();
            with_config(json!({ "word": x.symbols(), "q": cmd.q, "weights": map }), ctx.config("weight", cmd, None))?
        }
        Format::Csv => {
            let mut out = csv_line(&["b".into(), "w_b".into()]);
            for (b, w) in &weights {
                out.push_str(&csv_line(&[b.to_string(), w.to_string()]));
            }
            out
        }
        Format::Text => weights.iter().map(|(_, w)| format!("{w}\n")).collect(),
    };
    Ok(Output::ok(body))
}

fn view(v: View) -> DistributionView {
    match v {
        View::Distinct => DistributionView::Distinct,
        View::Beta => DistributionView::BetaIndexed,
    }
}

fn distribution_csv(d: &WeightDistribution) -> String {
    let mut out = csv_line(&["weight".into(), "count".into()]);
    for (w, c) in &d.entries {
        out.push_str(&csv_line(&[w.to_string(), c.to_string()]));
    }
    out
}

pub fn enumerate(ctx: &Ctx, cmd: &EnumerateCmd) -> Result<Output> {
    let code = build_code(&cmd.code)?;
    let limits = ctx.limits();
    let v = view(cmd.view);
    let dist = match cmd.mode {
        Mode::Full => brute_distribution(&code, cmd.b, EnumerationMode::Full, v, &limits, ctx.global.seed)?,
        Mode::PerClass => brute_distribution(&code, cmd.b, EnumerationMode::PerClass, v, &limits, ctx.global.seed)?,
        Mode::Orbits => brute_distribution(&code, cmd.b, EnumerationMode::Orbits, v, &limits, ctx.global.seed)?,
        Mode::Closed => closed_form_distribution(&code, cmd.b, &limits)?.to_view(&code, v)?,
    };
    let body = match ctx.format(Format::Json) {
        Format::Json => {
            let result = json!({
                "code": code.id(),
                "params": code.params(),
                "b": cmd.b,
                "mode": cmd.mode,
                "view": cmd.view,
                "weights": dist.entries,
                "total": dist.total(),
                "enumerator": dist.enumerator(),
            });
            with_config(result, ctx.config("enumerate", cmd, Some(code.field().config())))?
        }
        Format::Csv => distribution_csv(&dist),
        Format::Text => format!("{}\n", dist.enumerator()),
    };
    Ok(Output::ok(body))
}

pub fn uset(ctx: &Ctx, cmd: &UsetCmd) -> Result<Output> {
    let code = build_code(&cmd.code)?;
    let u = u_profile(&code, cmd.b, &ctx.limits())?;
    let body = match ctx.format(Format::Json) {
        Format::Json => with_config(&u, ctx.config("uset", cmd, Some(code.field().config())))?,
        Format::Csv => {
            let mut out = csv_line(&["i".into(), "count".into()]);
            for (i, c) in u.counts.iter().enumerate() {
                out.push_str(&csv_line(&[i.to_string(), c.to_string()]));
            }
            out
        }
        Format::Text => format!("{}\n", u.counts.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")),
    };
    Ok(Output::ok(body))
}

pub fn hierarchy(ctx: &Ctx, cmd: &HierarchyCmd) -> Result<Output> {
    let code = build_code(&cmd.code)?;
    let method = match cmd.method {
        Method::Brute => HierarchyMethod::Brute,
        Method::Closed => HierarchyMethod::Closed,
        Method::Auto => HierarchyMethod::Auto,
    };
    let r = hierarchy_report(&code, method, cmd.ghw, &ctx.limits())?;
    let passed = r.shape_holds() && r.dominance_holds();
    let body = match ctx.format(Format::Json) {
        Format::Json => with_config(&r, ctx.config("hierarchy", cmd, Some(code.field().config())))?,
        Format::Csv => r.to_csv()?,
        Format::Text => {
            let mut out = format!("d: {}\n", r.db.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            if let Some(g) = &r.ghw {
                writeln!(out, "ghw: {}", g.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))?;
            }
            out
        }
    };
    Ok(Output { body, passed })
}

pub fn shorten(ctx: &Ctx, cmd: &ShortenCmd) -> Result<Output> {
    let code = if cmd.simplex {
        let a = &cmd.code;
        let e = a.s.checked_mul(a.m).filter(|&e| e > 0).context("s and m must be positive")?;
        Code::simplex(&resolve_field(a.p, e, &a.field)?, a.s)?
    } else {
        build_code(&cmd.code)?
    };
    let limits = ctx.limits();
    let (beta_log, c) = min_weight_codeword(&code, cmd.b, &limits)?;
    let sc = bsymbol_shorten(&code, &c, cmd.b, &limits)?;
    let griesmer = sc.is_griesmer();
    let body = match ctx.format(Format::Json) {
        Format::Json => {
            let result = json!({
                "parent": sc.parent,
                "b": cmd.b,
                "beta_log": beta_log,
                "params": sc.params(),
                "griesmer": griesmer.unwrap_or(false),
                "T": sc.shorten_set.indices(),
                "kept": sc.kept,
                "generator": sc.generator,
            });
            with_config(result, ctx.config("shorten", cmd, Some(code.field().config())))?
        }
        Format::Csv => {
            let [n, k, d] = sc.params();
            csv_line(&["n", "k", "d", "griesmer"].map(String::from))
                + &csv_line(&[n.to_string(), k.to_string(), d.to_string(), griesmer.unwrap_or(false).to_string()])
        }
        Format::Text => format!("{:?} griesmer = {}\n", sc.params(), griesmer.unwrap_or(false)),
    };
    Ok(Output::ok(body))
}

pub fn table_one(ctx: &Ctx) -> Result<Output> {
    let rows = table1(&ctx.limits())?;
    let passed = rows.iter().all(|r| r.pass);
    let body = match ctx.format(Format::Csv) {
        Format::Json => with_config(&rows, ctx.config("table1", &(), None))?,
        _ => {
            let mut out = csv_line(&TABLE1_HEADER.map(String::from));
            for r in &rows {
                out.push_str(&csv_line(&r.csv_record()));
            }
            out
        }
    };
    Ok(Output { body, passed })
}

pub fn table_two(ctx: &Ctx) -> Result<Output> {
    let rows = table2(&ctx.limits())?;
    let passed = rows.iter().all(|r| r.pass);
    let body = match ctx.format(Format::Csv) {
        Format::Json => with_config(&rows, ctx.config("table2", &(), None))?,
        _ => {
            let mut out = csv_line(&["m", "q", "b", "n", "k", "d", "griesmer", "pass"].map(String::from));
            for r in &rows {
                let [n, k, d] = r.computed;
                out.push_str(&csv_line(&[
                    r.row.m.to_string(),
                    r.row.q.to_string(),
                    r.row.b.to_string(),
                    n.to_string(),
                    k.to_string(),
                    d.to_string(),
                    r.griesmer.to_string(),
                    if r.pass { "pass" } else { "fail" }.to_string(),
                ]));
            }
            out
        }
    };
    Ok(Output { body, passed })
}

pub fn verify_cmd(ctx: &Ctx, cmd: &VerifyCmd) -> Result<Output> {
    let mut opts = if cmd.extended { VerifyOptions::extended() } else { VerifyOptions::quick() };
    opts.seed = ctx.global.seed;
    opts.limits = ctx.limits();
    opts.tolerance = ctx.global.tolerance;
    let mut report: VerificationReport = verify(&opts);
    if let Value::Object(map) = &mut report.config {
        map.insert("cli".into(), ctx.config("verify", cmd, None));
    }
    let body = match ctx.format(Format::Json) {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    };
    Ok(Output { body, passed: report.passed() })
}
