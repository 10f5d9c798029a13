//! Command-line front end: every computation and the catalog verifier, with
//! deterministic machine-readable output.
//!
//! The tool is a pure function of argv: no configuration files, no
//! environment variables. `--json` selects a JSON payload with stable key
//! order; integers outside the exactly-representable JSON range are emitted
//! as `{"format": "bigint", "value": "<decimal>"}` objects and rationals as
//! `{"num", "den"}` string pairs, so exactness survives every consumer.
//! Exit codes: 0 success, 1 a user-supplied descriptor violated a bound,
//! 2 usage error.

mod render;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use chern_bounds::bounds::{
    self, cohomology_bounds, delta_lower_nogap, delta_lower_uniform, grossa_rhs,
    grossa_rhs_literal, h0_upper, hn_upper, lambda_s, louso_check, menogrande2_rhs,
    menogrande_rhs, negative_c2_window, regularity_bound, rigrossa_rhs, semistable_delta_floor,
    Verdict,
};
use chern_bounds::catalog::{
    builtin_catalog, document_from_json, document_to_json, verify, SheafDescriptor,
};
use chern_bounds::chern::{
    discriminant, dual, high_chern_tail, restrict_hyperplane, split_chern, twist_numeric,
    twist_symbolic, ChernData,
};
use chern_bounds::rational::to_integer;
use chern_bounds::riemann_roch::{euler_char, euler_char_poly};
use chern_bounds::splitting::{
    brute_force_max_sumsq, extremal_nogap_sequence, GstMatrix, SplittingType,
};

use render::{big_json, json_payload, poly_json, rat_json, report_json, verification_json};
use serde_json::{Map, Value};

/// Outcome of one invocation: the payload for stdout, diagnostics for
/// stderr, and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
    pub diagnostics: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult {
            exit_code: 0,
            payload,
            diagnostics: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        let message = message.into();
        CommandResult {
            exit_code: 2,
            payload: String::new(),
            diagnostics: format!("error: {message}\n\n{USAGE}"),
        }
    }
}

const USAGE: &str = "\
usage: chern-bounds <command> [flags]

commands:
  chern split       --b LIST --ambient N
  chern twist       --rank n --ambient N --classes LIST (--l K | --symbolic)
  chern whitney     --ambient N --sub-rank n --sub-classes LIST --quot-rank n --quot-classes LIST
  chern quotient    --ambient N --total-rank n --total-classes LIST --sub-rank n --sub-classes LIST
  chern dual        --rank n --ambient N --classes LIST
  chern restrict    --rank n --ambient N --classes LIST
  chern discriminant --rank n --ambient N --classes LIST
  chern tail        --rank n --ambient N --classes LIST --s S
  chi               --rank n --ambient N --classes LIST [--symbolic]
  bounds h0         --b LIST --ambient N
  bounds grossa     --rows ROWS [--literal]
  bounds rigrossa   --rows ROWS --t K
  bounds menogrande2 --b LIST --a LIST --ambient N
  bounds c2         --b LIST --a LIST
  bounds window     --rank n --ambient N --classes LIST --b LIST
  bounds delta      --n n --c1 K
  bounds floor      --n n (--stable | --semistable)
  bounds lambda     --rank n --ambient N --classes LIST --b LIST --s S
  bounds louso      --a LIST --c1 K
  bounds pqc        --rank n --ambient N --c1 K --c2 K --b LIST
  catalog list      [--file PATH]
  catalog verify    [--name NAME] [--file PATH]
  catalog dump      [--name NAME] [--file PATH]
  catalog check     --file PATH
  sweep nogap       --n n --c1-range LO,HI

LIST is comma-separated integers (e.g. 0,1,0); ROWS is semicolon-separated
rows, '_' for an absent row (e.g. \"0,0;0,-1;-1,-1\"). --json selects JSON
output everywhere. Exit codes: 0 ok, 1 violated bound, 2 usage error.
";

struct Args {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

const SWITCHES: &[&str] = &["json", "symbolic", "literal", "stable", "semistable"];

fn parse_flags(argv: &[String]) -> Result<Args, String> {
    let mut values = BTreeMap::new();
    let mut switches = BTreeSet::new();
    let mut i = 0;
    while i < argv.len() {
        let arg = &argv[i];
        let Some(name) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument '{arg}'"));
        };
        if SWITCHES.contains(&name) {
            switches.insert(name.to_string());
            i += 1;
            continue;
        }
        let Some(value) = argv.get(i + 1) else {
            return Err(format!("flag '--{name}' needs a value"));
        };
        if values.insert(name.to_string(), value.clone()).is_some() {
            return Err(format!("duplicate flag '--{name}'"));
        }
        i += 2;
    }
    Ok(Args { values, switches })
}

impl Args {
    fn json(&self) -> bool {
        self.switches.contains("json")
    }

    fn has(&self, name: &str) -> bool {
        self.switches.contains(name)
    }

    fn get(&self, name: &str) -> Result<&str, String> {
        self.values
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| format!("missing flag '--{name}'"))
    }

    fn opt(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn i64(&self, name: &str) -> Result<i64, String> {
        self.get(name)?
            .parse()
            .map_err(|_| format!("flag '--{name}' must be an integer"))
    }

    fn usize(&self, name: &str) -> Result<usize, String> {
        let v = self.i64(name)?;
        usize::try_from(v).map_err(|_| format!("flag '--{name}' must be non-negative"))
    }

    fn big(&self, name: &str) -> Result<BigInt, String> {
        self.get(name)?
            .parse()
            .map_err(|_| format!("flag '--{name}' must be an integer"))
    }

    fn i64_list(&self, name: &str) -> Result<Vec<i64>, String> {
        parse_i64_list(self.get(name)?).map_err(|e| format!("flag '--{name}': {e}"))
    }

    fn big_list(&self, name: &str) -> Result<Vec<BigInt>, String> {
        self.get(name)?
            .split(',')
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| format!("flag '--{name}': malformed integer '{s}'"))
            })
            .collect()
    }

    fn chern(&self) -> Result<ChernData, String> {
        let rank = self.i64("rank")?;
        let ambient = self.usize("ambient")?;
        if rank < 1 || ambient < 1 {
            return Err("rank and ambient must be at least 1".into());
        }
        let classes = self.big_list("classes")?;
        if classes.len() != ambient {
            return Err(format!("expected {ambient} classes, got {}", classes.len()));
        }
        Ok(ChernData::new(ambient, rank, classes))
    }

    fn splitting(&self, name: &str) -> Result<SplittingType, String> {
        SplittingType::new(self.i64_list(name)?).map_err(|e| format!("flag '--{name}': {e}"))
    }

    fn gst_rows(&self) -> Result<GstMatrix, String> {
        let text = self.get("rows")?;
        let rows: Vec<Option<SplittingType>> = text
            .split(';')
            .map(|row| {
                let row = row.trim();
                if row == "_" || row.eq_ignore_ascii_case("none") {
                    return Ok(None);
                }
                SplittingType::new(parse_i64_list(row)?)
                    .map(Some)
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<_, String>>()?;
        let ambient = rows.len();
        GstMatrix::new(ambient, rows).map_err(|e| e.to_string())
    }
}

fn parse_i64_list(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| format!("malformed integer '{s}'"))
        })
        .collect()
}

fn chern_json(data: &ChernData) -> Value {
    let mut map = Map::new();
    map.insert("ambient_dim".into(), Value::from(data.ambient_dim() as u64));
    map.insert("rank".into(), Value::from(data.rank()));
    map.insert(
        "classes".into(),
        Value::Array(data.classes().iter().map(big_json).collect()),
    );
    Value::Object(map)
}

fn chern_plain(data: &ChernData) -> String {
    let classes: Vec<String> = data.classes().iter().map(|c| c.to_string()).collect();
    format!(
        "P^{} rank {} classes ({})\n",
        data.ambient_dim(),
        data.rank(),
        classes.join(",")
    )
}

fn emit_chern(data: ChernData, json: bool) -> CommandResult {
    if json {
        CommandResult::ok(json_payload(&chern_json(&data)))
    } else {
        CommandResult::ok(chern_plain(&data))
    }
}

/// Dispatch a full argument vector (without the program name).
pub fn execute(argv: &[String]) -> CommandResult {
    match try_execute(argv) {
        Ok(result) => result,
        Err(message) => CommandResult::usage(message),
    }
}

fn try_execute(argv: &[String]) -> Result<CommandResult, String> {
    let (command, rest) = argv.split_first().ok_or("missing command")?;
    match command.as_str() {
        "chern" => {
            let (sub, rest) = rest.split_first().ok_or("missing chern subcommand")?;
            let args = parse_flags(rest)?;
            chern_command(sub, &args)
        }
        "chi" => {
            let args = parse_flags(rest)?;
            chi_command(&args)
        }
        "bounds" => {
            let (sub, rest) = rest.split_first().ok_or("missing bounds subcommand")?;
            let args = parse_flags(rest)?;
            bounds_command(sub, &args)
        }
        "catalog" => {
            let (sub, rest) = rest.split_first().ok_or("missing catalog subcommand")?;
            let args = parse_flags(rest)?;
            catalog_command(sub, &args)
        }
        "sweep" => {
            let (sub, rest) = rest.split_first().ok_or("missing sweep subcommand")?;
            if sub != "nogap" {
                return Err(format!("unknown sweep subcommand '{sub}'"));
            }
            let args = parse_flags(rest)?;
            sweep_nogap(&args)
        }
        "help" | "--help" | "-h" => Ok(CommandResult {
            exit_code: 0,
            payload: USAGE.to_string(),
            diagnostics: String::new(),
        }),
        other => Err(format!("unknown command '{other}'")),
    }
}

fn chern_command(sub: &str, args: &Args) -> Result<CommandResult, String> {
    match sub {
        "split" => {
            let b = args.splitting("b")?;
            let ambient = args.usize("ambient")?;
            Ok(emit_chern(split_chern(&b, ambient), args.json()))
        }
        "twist" => {
            let data = args.chern()?;
            if args.has("symbolic") {
                let twisted = twist_symbolic(&data);
                if args.json() {
                    let mut map = Map::new();
                    map.insert("ambient_dim".into(), Value::from(data.ambient_dim() as u64));
                    map.insert("rank".into(), Value::from(data.rank()));
                    let classes: Vec<Value> = (1..=data.ambient_dim())
                        .map(|i| poly_json(twisted.class_poly(i).expect("index in range")))
                        .collect();
                    map.insert("classes".into(), Value::Array(classes));
                    Ok(CommandResult::ok(json_payload(&Value::Object(map))))
                } else {
                    let mut out = String::new();
                    for i in 1..=data.ambient_dim() {
                        let p = twisted.class_poly(i).expect("index in range");
                        out.push_str(&format!("c_{i}(F(t)) = {p}\n"));
                    }
                    Ok(CommandResult::ok(out))
                }
            } else {
                let l = args.i64("l")?;
                Ok(emit_chern(twist_numeric(&data, l), args.json()))
            }
        }
        "whitney" => {
            let ambient = args.usize("ambient")?;
            let sub_data = ChernData::new(
                ambient,
                args.i64("sub-rank")?,
                args.big_list("sub-classes")?,
            );
            let quot = ChernData::new(
                ambient,
                args.i64("quot-rank")?,
                args.big_list("quot-classes")?,
            );
            let total =
                chern_bounds::chern::whitney(&sub_data, &quot).map_err(|e| e.to_string())?;
            Ok(emit_chern(total, args.json()))
        }
        "quotient" => {
            let ambient = args.usize("ambient")?;
            let total = ChernData::new(
                ambient,
                args.i64("total-rank")?,
                args.big_list("total-classes")?,
            );
            let sub_data = ChernData::new(
                ambient,
                args.i64("sub-rank")?,
                args.big_list("sub-classes")?,
            );
            let quot = chern_bounds::chern::whitney_quotient(&total, &sub_data)
                .map_err(|e| e.to_string())?;
            Ok(emit_chern(quot, args.json()))
        }
        "dual" => Ok(emit_chern(dual(&args.chern()?), args.json())),
        "restrict" => {
            let restricted = restrict_hyperplane(&args.chern()?).map_err(|e| e.to_string())?;
            Ok(emit_chern(restricted, args.json()))
        }
        "discriminant" => {
            let delta = discriminant(&args.chern()?).map_err(|e| e.to_string())?;
            if args.json() {
                let mut map = Map::new();
                map.insert("discriminant".into(), big_json(&delta));
                Ok(CommandResult::ok(json_payload(&Value::Object(map))))
            } else {
                Ok(CommandResult::ok(format!("{delta}\n")))
            }
        }
        "tail" => {
            let data = args.chern()?;
            let s = args.usize("s")?;
            let tail = high_chern_tail(&data, s).map_err(|e| e.to_string())?;
            if args.json() {
                let mut map = Map::new();
                map.insert("s".into(), Value::from(s as u64));
                map.insert("tail".into(), poly_json(&tail));
                Ok(CommandResult::ok(json_payload(&Value::Object(map))))
            } else {
                Ok(CommandResult::ok(format!("c_{s}(F(t)) = {tail}\n")))
            }
        }
        other => Err(format!("unknown chern subcommand '{other}'")),
    }
}

fn chi_command(args: &Args) -> Result<CommandResult, String> {
    let data = args.chern()?;
    if args.has("symbolic") {
        let poly = euler_char_poly(&data);
        if args.json() {
            let mut map = Map::new();
            map.insert("chi_poly".into(), poly_json(&poly));
            Ok(CommandResult::ok(json_payload(&Value::Object(map))))
        } else {
            Ok(CommandResult::ok(format!("{poly}\n")))
        }
    } else {
        let chi = euler_char(&data);
        if args.json() {
            let mut map = Map::new();
            map.insert("chi".into(), rat_json(&chi));
            Ok(CommandResult::ok(json_payload(&Value::Object(map))))
        } else {
            match to_integer(&chi) {
                Some(v) => Ok(CommandResult::ok(format!("{v}\n"))),
                None => Ok(CommandResult::ok(format!("{chi}\n"))),
            }
        }
    }
}

fn bounds_command(sub: &str, args: &Args) -> Result<CommandResult, String> {
    let mut map = Map::new();
    match sub {
        "h0" => {
            let b = args.splitting("b")?;
            let ambient = args.usize("ambient")?;
            map.insert("h0_upper".into(), big_json(&h0_upper(&b, ambient)));
            map.insert("hN_upper".into(), big_json(&hn_upper(&b, ambient)));
        }
        "grossa" => {
            let m = args.gst_rows()?;
            let value = if args.has("literal") {
                grossa_rhs_literal(&m)
            } else {
                grossa_rhs(&m)
            }
            .map_err(|e| e.to_string())?;
            map.insert("grossa".into(), big_json(&value));
        }
        "rigrossa" => {
            let m = args.gst_rows()?;
            let t = args.i64("t")?;
            let value = rigrossa_rhs(&m, t).map_err(|e| e.to_string())?;
            map.insert("t".into(), Value::from(t));
            map.insert("rigrossa".into(), big_json(&value));
        }
        "menogrande2" => {
            let b = args.splitting("b")?;
            let a = args.splitting("a")?;
            let ambient = args.usize("ambient")?;
            let fine = menogrande2_rhs(&b, &a, ambient).map_err(|e| e.to_string())?;
            let coarse = menogrande_rhs(&b, &a, ambient).map_err(|e| e.to_string())?;
            map.insert("menogrande2".into(), big_json(&fine));
            map.insert("menogrande".into(), big_json(&coarse));
        }
        "c2" => {
            let b = args.splitting("b")?;
            let a = args.splitting("a")?;
            let value = bounds::c2_lower(&b, &a).map_err(|e| e.to_string())?;
            map.insert("c2_lower".into(), big_json(&value));
        }
        "window" => {
            let data = args.chern()?;
            let b = args.splitting("b")?;
            let w = negative_c2_window(&data, &b).map_err(|e| e.to_string())?;
            map.insert(
                "twists".into(),
                Value::Array(w.twists.iter().map(big_json).collect()),
            );
            map.insert("size".into(), Value::from(w.twists.len() as u64));
            map.insert("size_bound".into(), Value::from(w.size_bound));
        }
        "delta" => {
            let n = args.usize("n")?;
            let c1 = args.i64("c1")?;
            map.insert("domenica".into(), big_json(&delta_lower_nogap(n, c1)));
            map.insert("mattina".into(), big_json(&delta_lower_uniform(n)));
        }
        "floor" => {
            let n = args.usize("n")?;
            let stable = args.has("stable");
            if !stable && !args.has("semistable") {
                return Err("bounds floor needs --stable or --semistable".into());
            }
            map.insert("floor".into(), rat_json(&semistable_delta_floor(n, stable)));
        }
        "lambda" => {
            let data = args.chern()?;
            let b = args.splitting("b")?;
            let s = args.usize("s")?;
            let lam = lambda_s(&data, &b, s).map_err(|e| e.to_string())?;
            map.insert("s".into(), Value::from(s as u64));
            map.insert("lambda".into(), poly_json(&lam));
        }
        "louso" => {
            let a = args.splitting("a")?;
            let c1 = args.i64("c1")?;
            let report = louso_check(&a, c1);
            return Ok(emit_report_result(report, args.json()));
        }
        "pqc" => {
            let rank = args.i64("rank")?;
            let ambient = args.usize("ambient")?;
            let c1 = args.i64("c1")?;
            let c2 = args.big("c2")?;
            let b = args.splitting("b")?;
            let result =
                cohomology_bounds(rank, ambient, c1, &c2, &b).map_err(|e| e.to_string())?;
            let reg = regularity_bound(&result);
            map.insert(
                "per_index".into(),
                Value::Array(result.per_index().iter().map(big_json).collect()),
            );
            map.insert(
                "vanishing_threshold".into(),
                big_json(result.vanishing_threshold()),
            );
            map.insert(
                "chern_bounds".into(),
                Value::Array(result.chern_bounds().iter().map(big_json).collect()),
            );
            map.insert("regularity".into(), big_json(&reg.regularity));
            map.insert(
                "global_generation".into(),
                big_json(&reg.global_generation),
            );
        }
        other => return Err(format!("unknown bounds subcommand '{other}'")),
    }
    if args.json() {
        Ok(CommandResult::ok(json_payload(&Value::Object(map))))
    } else {
        let mut out = String::new();
        for (key, value) in &map {
            out.push_str(&format!("{key}: {}\n", render::plain_value(value)));
        }
        Ok(CommandResult::ok(out))
    }
}

fn emit_report_result(report: chern_bounds::bounds::BoundReport, json: bool) -> CommandResult {
    let violated = report.verdict == Verdict::Violated;
    let payload = if json {
        json_payload(&report_json(&report))
    } else {
        format!(
            "{}: {} (bound {}, oracle {}){}\n",
            report.name,
            report.verdict.as_str(),
            report.bound,
            report
                .oracle
                .as_ref()
                .map_or("-".to_string(), |o| o.to_string()),
            if report.detail.is_empty() {
                String::new()
            } else {
                format!(" - {}", report.detail)
            }
        )
    };
    CommandResult {
        exit_code: i32::from(violated),
        payload,
        diagnostics: String::new(),
    }
}

fn load_descriptors(args: &Args) -> Result<Vec<SheafDescriptor>, String> {
    let mut descriptors = match args.opt("file") {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read '{path}': {e}"))?;
            document_from_json(&text).map_err(|e| e.to_string())?
        }
        None => builtin_catalog(),
    };
    if let Some(name) = args.opt("name") {
        descriptors.retain(|d| d.name == name);
        if descriptors.is_empty() {
            return Err(format!("no descriptor named '{name}'"));
        }
    }
    Ok(descriptors)
}

fn catalog_command(sub: &str, args: &Args) -> Result<CommandResult, String> {
    match sub {
        "list" => {
            let descriptors = load_descriptors(args)?;
            if args.json() {
                let names: Vec<Value> = descriptors
                    .iter()
                    .map(|d| Value::String(d.name.clone()))
                    .collect();
                let mut map = Map::new();
                map.insert("count".into(), Value::from(descriptors.len() as u64));
                map.insert("names".into(), Value::Array(names));
                Ok(CommandResult::ok(json_payload(&Value::Object(map))))
            } else {
                let mut out = String::new();
                for d in &descriptors {
                    out.push_str(&format!(
                        "{} (P^{}, rank {})\n",
                        d.name, d.ambient_dim, d.rank
                    ));
                }
                Ok(CommandResult::ok(out))
            }
        }
        "verify" => {
            let descriptors = load_descriptors(args)?;
            let results: Vec<_> = descriptors.iter().map(verify).collect();
            let pass = results.iter().all(|r| r.pass);
            let payload = if args.json() {
                let mut map = Map::new();
                map.insert("pass".into(), Value::Bool(pass));
                map.insert(
                    "results".into(),
                    Value::Array(results.iter().map(verification_json).collect()),
                );
                json_payload(&Value::Object(map))
            } else {
                let mut out = String::new();
                for r in &results {
                    out.push_str(&format!(
                        "{}: {}\n",
                        r.descriptor,
                        if r.pass { "pass" } else { "VIOLATED" }
                    ));
                    for rep in &r.reports {
                        if rep.verdict == Verdict::Violated || rep.verdict == Verdict::Equality {
                            out.push_str(&format!("  {}: {}\n", rep.name, rep.verdict.as_str()));
                        }
                    }
                }
                out.push_str(if pass {
                    "overall: pass\n"
                } else {
                    "overall: VIOLATED\n"
                });
                out
            };
            Ok(CommandResult {
                exit_code: i32::from(!pass),
                payload,
                diagnostics: String::new(),
            })
        }
        "dump" => {
            let descriptors = load_descriptors(args)?;
            Ok(CommandResult::ok(document_to_json(&descriptors)))
        }
        "check" => {
            let path = args.get("file")?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read '{path}': {e}"))?;
            let descriptors = document_from_json(&text).map_err(|e| e.to_string())?;
            let canonical = document_to_json(&descriptors);
            if canonical == text {
                Ok(CommandResult::ok(canonical))
            } else {
                Ok(CommandResult {
                    exit_code: 1,
                    payload: canonical,
                    diagnostics: "input differs from its canonical form\n".into(),
                })
            }
        }
        other => Err(format!("unknown catalog subcommand '{other}'")),
    }
}

fn sweep_nogap(args: &Args) -> Result<CommandResult, String> {
    let n = args.usize("n")?;
    if n == 0 {
        return Err("--n must be positive".into());
    }
    let range = args.i64_list("c1-range")?;
    let [lo, hi] = range[..] else {
        return Err("--c1-range needs LO,HI".into());
    };
    if lo > hi {
        return Err("--c1-range needs LO <= HI".into());
    }
    let mut rows = Vec::new();
    for c1 in lo..=hi {
        let built = extremal_nogap_sequence(n, c1);
        let brute = brute_force_max_sumsq(n, c1).map_err(|e| e.to_string())?;
        let sumsq = built.sum_squares();
        rows.push((c1, built, sumsq, brute));
    }
    if args.json() {
        let entries: Vec<Value> = rows
            .iter()
            .map(|(c1, built, sumsq, brute)| {
                let mut map = Map::new();
                map.insert("c1".into(), Value::from(*c1));
                map.insert(
                    "sequence".into(),
                    Value::Array(built.entries().iter().map(|&e| Value::from(e)).collect()),
                );
                map.insert("sum_squares".into(), big_json(sumsq));
                map.insert("brute_force".into(), big_json(brute));
                map.insert("agree".into(), Value::Bool(sumsq == brute));
                Value::Object(map)
            })
            .collect();
        let mut map = Map::new();
        map.insert("n".into(), Value::from(n as u64));
        map.insert("entries".into(), Value::Array(entries));
        Ok(CommandResult::ok(json_payload(&Value::Object(map))))
    } else {
        let mut out = String::new();
        for (c1, built, sumsq, brute) in &rows {
            out.push_str(&format!(
                "c1={c1}: {built} sum_sq={sumsq} brute={brute} {}\n",
                if sumsq == brute { "ok" } else { "MISMATCH" }
            ));
        }
        Ok(CommandResult::ok(out))
    }
}
