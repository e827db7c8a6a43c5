//! The `fibpal` command line.
//!
//! Every query prints one JSON record per line ([`QueryResult`]); `--plain`
//! switches to a human-readable layout. Exit status is 0 on success, 1 when
//! a verification check fails and 2 on usage or domain errors.

use std::fmt::Display;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use fibpal_core::chain::{chain_interval, end_pos_kernel, new_pal_at, span_pal, start_pos_kernel, ChainInterval};
use fibpal_core::counting::{
    a_special, b_fm, b_fm_minus2, c_closed, ending_count, expand, occurrence_count_traced, tau1, tau2,
    TailCase, TauNode,
};
use fibpal_core::cylinder::{
    coord_from_pal, cylinder_table, pal_from_coord, palindromic_conjugates, pals_of_length,
    prefix_palindrome_lengths, Cylinder, PalCoord,
};
use fibpal_core::fibword::{count_a, count_b, fib, letter_at, parse_word, prefix, show};
use fibpal_core::singular::{kernel, singular};
use fibpal_core::verify::{bench_row, run_suite, CheckReport, Limits, Suite};
use fibpal_core::{BigUint, Error};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Number, Value};

/// One output record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryResult {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Value>>,
}

impl QueryResult {
    fn new(command: &str) -> Self {
        QueryResult { command: command.into(), inputs: Map::new(), outputs: Map::new(), trace: None }
    }

    fn input(mut self, k: &str, v: Value) -> Self {
        self.inputs.insert(k.into(), v);
        self
    }

    fn output(mut self, k: &str, v: Value) -> Self {
        self.outputs.insert(k.into(), v);
        self
    }

    fn render_plain(&self) -> String {
        let mut s = self.command.clone();
        for (k, v) in &self.inputs {
            s += &format!(" {k}={}", plain_value(v));
        }
        s.push('\n');
        for (k, v) in &self.outputs {
            s += &format!("  {k}: {}\n", plain_value(v));
        }
        for (k, step) in self.trace.iter().flatten().enumerate() {
            s += &format!("  step {}: {}\n", k + 1, plain_value(step));
        }
        s
    }
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

/// A decimal integer of any size as a JSON number.
pub fn num(v: impl Display) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
}

fn word(w: &[u8]) -> Value {
    Value::String(show(w))
}

#[derive(Parser, Debug)]
#[command(name = "fibpal", version, about = "Exact palindrome queries on the Fibonacci word")]
struct Cli {
    /// Human-readable output instead of JSON lines.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// f_M.
    Fib {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
    },
    /// The letter at position N and the letter counts of F[1, N].
    Letters {
        #[arg(short, value_parser = big)]
        n: BigUint,
    },
    /// F[1, N].
    Prefix {
        #[arg(short)]
        n: u64,
    },
    /// The singular word K_M.
    Singular {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
    },
    /// The kernel of a factor.
    Kernel {
        #[arg(short)]
        w: String,
    },
    /// Palindrome coordinates.
    #[command(subcommand)]
    Pal(PalCmd),
    /// Occurrence positions.
    #[command(subcommand)]
    Pos(PosCmd),
    /// The interval <K_M, P>.
    Chain {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
        #[arg(short, value_parser = big)]
        p: BigUint,
    },
    /// Splits <K_M, P> into child intervals.
    Tau {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
        #[arg(short, value_parser = big)]
        p: BigUint,
        /// Expand recursively this many levels (down to <a> leaves if large).
        #[arg(long)]
        expand_depth: Option<usize>,
    },
    /// Palindrome counts: distinct (= N), ending at N, or with repetition.
    Count(CountArgs),
    /// Runs a verification suite against the oracles.
    Verify(VerifyArgs),
    /// Closed-form B(N) against the palindromic tree.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000")]
        n_list: Vec<u64>,
    },
    /// The cylinder table or the chain table.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Subcommand, Debug)]
enum PalCmd {
    /// All palindromes of length N.
    List {
        #[arg(long, value_parser = big)]
        length: BigUint,
    },
    /// Coordinates of a palindromic factor.
    Coord {
        #[arg(short)]
        w: String,
    },
    /// The palindrome whose first occurrence ends at N.
    At {
        #[arg(short, value_parser = big)]
        n: BigUint,
    },
    /// Palindromic conjugates of F_M.
    Conjugates {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
    },
    /// Lengths N <= MAX with F[1, N] a palindrome.
    PrefixLengths {
        #[arg(long, value_parser = big)]
        max: BigUint,
    },
}

#[derive(Subcommand, Debug)]
enum PosCmd {
    /// The P-th occurrence of K_M.
    Kernel {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
        #[arg(short, value_parser = big)]
        p: BigUint,
    },
    /// The P-th occurrence of the palindrome (M, I).
    Pal {
        #[arg(short, allow_hyphen_values = true)]
        m: i32,
        #[arg(short, value_parser = big)]
        i: BigUint,
        #[arg(short, value_parser = big)]
        p: BigUint,
    },
}

#[derive(Subcommand, Debug)]
enum TableCmd {
    /// First ROWS palindromes of each cylinder.
    Cylinders {
        #[arg(long, default_value_t = 12)]
        rows: usize,
    },
    /// <K_m, 1> for -1 <= m <= MAX_M.
    Chain {
        #[arg(long, default_value_t = 6)]
        max_m: i32,
    },
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct CountArgs {
    #[command(subcommand)]
    special: Option<CountSub>,
    /// Distinct palindromic factors of F[1, N].
    #[arg(long)]
    distinct: bool,
    /// Palindrome occurrences in F[1, N], with repetition: B(N).
    #[arg(long)]
    occurrences: bool,
    /// Palindrome occurrences ending at N: A(N).
    #[arg(long)]
    ending: bool,
    #[arg(short, value_parser = big)]
    n: Option<BigUint>,
    /// Print the reduction steps.
    #[arg(long)]
    trace: bool,
}

#[derive(Subcommand, Debug)]
enum CountSub {
    /// C(M), B(f_M - 2), B(f_M) and A at f_M - 2, f_M - 1, f_M.
    Special {
        #[arg(short, long = "m")]
        m: i32,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// floors, cylinder, chain, tau, counts, richness, return-words, kernels or all.
    #[arg(value_parser = suite_list)]
    suite: SuiteList,
    #[arg(long, default_value_t = 10_000)]
    max_n: u64,
    #[arg(long, default_value_t = 15, allow_hyphen_values = true)]
    max_m: i32,
    #[arg(long, default_value_t = 500)]
    max_p: u64,
}

#[derive(Debug, Clone)]
struct SuiteList(Vec<Suite>);

fn suite_list(s: &str) -> Result<SuiteList, String> {
    if s == "all" {
        return Ok(SuiteList(Suite::ALL.to_vec()));
    }
    s.parse::<Suite>().map(|x| SuiteList(vec![x])).map_err(|e| e.to_string())
}

fn big(s: &str) -> Result<BigUint, String> {
    BigUint::from_str(s).map_err(|_| format!("{s:?} is not a non-negative decimal integer"))
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<Vec<QueryResult>, Failure>;

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let (records, failure) = match dispatch(cli.cmd) {
        Ok(r) => (r, None),
        Err(f) => (Vec::new(), Some(f)),
    };
    let code = write_records(&records, cli.plain, stdout, stderr);
    match failure {
        None => code,
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Some(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Prints `records`; 1 if any verification record failed, naming the first
/// counterexample on `stderr`.
fn write_records(records: &[QueryResult], plain: bool, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut code = 0;
    for r in records {
        emit(stdout, r, plain);
        if r.command == "verify" && r.outputs.get("passed") == Some(&Value::Bool(false)) && code == 0 {
            code = 1;
            let _ = writeln!(stderr, "counterexample: {}", plain_value(&r.outputs["counterexample"]));
        }
    }
    code
}

fn emit(out: &mut dyn Write, r: &QueryResult, plain: bool) {
    let _ = if plain {
        if let Some(Value::String(t)) = r.outputs.get("table") {
            write!(out, "{t}")
        } else {
            write!(out, "{}", r.render_plain())
        }
    } else {
        writeln!(out, "{}", serde_json::to_string(r).expect("records serialize"))
    };
}

fn dispatch(cmd: Cmd) -> Out {
    Ok(match cmd {
        Cmd::Fib { m } => vec![QueryResult::new("fib").input("m", num(m)).output("f", num(fib(m)?))],
        Cmd::Letters { n } => {
            let r = QueryResult::new("letters").input("n", num(&n));
            vec![r
                .output("letter", Value::String(letter_at(&n)?.to_string()))
                .output("count_a", num(count_a(&n)))
                .output("count_b", num(count_b(&n)))]
        }
        Cmd::Prefix { n } => {
            vec![QueryResult::new("prefix").input("n", num(n)).output("word", word(&prefix(n)?))]
        }
        Cmd::Singular { m } => {
            let w = singular(m)?;
            vec![QueryResult::new("singular")
                .input("m", num(m))
                .output("word", word(&w))
                .output("length", num(w.len()))
                .output("cylinder", Value::String(Cylinder::of_kernel(m).label().into()))]
        }
        Cmd::Kernel { w } => {
            let bytes = parse_word(&w)?;
            let k = kernel(&bytes, true)?;
            vec![QueryResult::new("kernel")
                .input("w", Value::String(w))
                .output("m", num(k.m))
                .output("offset", num(k.offset))
                .output("kernel", word(&singular(k.m)?))]
        }
        Cmd::Pal(p) => pal(p)?,
        Cmd::Pos(PosCmd::Kernel { m, p }) => vec![QueryResult::new("pos kernel")
            .input("m", num(m))
            .input("p", num(&p))
            .output("start", num(start_pos_kernel(m, &p)?))
            .output("end", num(end_pos_kernel(m, &p)?))],
        Cmd::Pos(PosCmd::Pal { m, i, p }) => {
            let c = PalCoord::new(m, i)?;
            let span = span_pal(&c, &p)?;
            vec![QueryResult::new("pos pal")
                .input("m", num(m))
                .input("i", num(&c.i))
                .input("p", num(&p))
                .output("start", num(&span.start))
                .output("end", num(&span.end))
                .output("length", num(c.length()))]
        }
        Cmd::Chain { m, p } => {
            let iv = chain_interval(m, &p)?;
            vec![QueryResult::new("chain")
                .input("m", num(m))
                .input("p", num(&p))
                .output("lo", num(&iv.lo))
                .output("hi", num(&iv.hi))
                .output("size", num(iv.size()))]
        }
        Cmd::Tau { m, p, expand_depth } => vec![tau(m, &p, expand_depth)?],
        Cmd::Count(c) => vec![count(c)?],
        Cmd::Verify(v) => verify(v)?,
        Cmd::Bench { n_list } => {
            let mut out = Vec::new();
            for n in n_list {
                if n == 0 {
                    return Err(Failure::Usage("bench sizes must be positive".into()));
                }
                let row = bench_row(n)?;
                out.push(
                    QueryResult::new("bench")
                        .input("n", num(n))
                        .output("b", num(&row.b))
                        .output("closed_form_ns", num(row.closed_form.as_nanos()))
                        .output("eertree_ns", num(row.eertree.as_nanos()))
                        .output("speedup", json!((row.speedup() * 10.0).round() / 10.0)),
                );
            }
            out
        }
        Cmd::Table(t) => vec![table(t)?],
    })
}

fn coord_value(c: &PalCoord) -> Value {
    let mut o = Map::new();
    o.insert("m".into(), num(c.m));
    o.insert("i".into(), num(&c.i));
    o.insert("length".into(), num(c.length()));
    o.insert("cylinder".into(), Value::String(c.cylinder().label().into()));
    if let Ok(w) = pal_from_coord(c) {
        o.insert("word".into(), word(&w));
    }
    Value::Object(o)
}

fn pal(cmd: PalCmd) -> Out {
    Ok(vec![match cmd {
        PalCmd::List { length } => {
            let cs = pals_of_length(&length)?;
            QueryResult::new("pal list")
                .input("length", num(&length))
                .output("count", num(cs.len()))
                .output("palindromes", Value::Array(cs.iter().map(coord_value).collect()))
        }
        PalCmd::Coord { w } => {
            let c = coord_from_pal(&parse_word(&w)?)?;
            QueryResult::new("pal coord")
                .input("w", Value::String(w))
                .output("m", num(c.m))
                .output("i", num(&c.i))
                .output("length", num(c.length()))
                .output("cylinder", Value::String(c.cylinder().label().into()))
                .output("singular", Value::Bool(c.is_singular()))
        }
        PalCmd::At { n } => {
            let c = new_pal_at(&n)?;
            let mut r = QueryResult::new("pal at")
                .input("n", num(&n))
                .output("m", num(c.m))
                .output("i", num(&c.i))
                .output("length", num(c.length()));
            if let Ok(w) = pal_from_coord(&c) {
                r = r.output("word", word(&w));
            }
            r
        }
        PalCmd::Conjugates { m } => {
            let set = palindromic_conjugates(m)?;
            QueryResult::new("pal conjugates")
                .input("m", num(m))
                .output("count", num(set.len()))
                .output("conjugates", Value::Array(set.iter().map(|w| word(w)).collect()))
        }
        PalCmd::PrefixLengths { max } => {
            let ls = prefix_palindrome_lengths(&max);
            QueryResult::new("pal prefix-lengths")
                .input("max", num(&max))
                .output("lengths", Value::Array(ls.iter().map(num).collect()))
        }
    }])
}

fn interval_value(iv: &ChainInterval) -> Value {
    json!({ "m": iv.m, "p": num(&iv.p), "lo": num(&iv.lo), "hi": num(&iv.hi) })
}

fn tau(m: i32, p: &BigUint, depth: Option<usize>) -> Result<QueryResult, Failure> {
    let parent = chain_interval(m, p)?;
    let mut r = QueryResult::new("tau").input("m", num(m)).input("p", num(p));
    if let Some(d) = depth {
        r = r.input("expand_depth", num(d));
    }
    r = r.output("parent", interval_value(&parent));
    r = match m {
        -1 => r.output("children", json!([])),
        0 => r.output("children", json!([interval_value(&tau2(p)?)])),
        _ => {
            let s = tau1(m, p)?;
            r.output("children", json!([interval_value(&s.left), interval_value(&s.right)]))
        }
    };
    if let Some(d) = depth {
        let tree = expand(m, p, Some(d))?;
        let mut steps = Vec::new();
        walk(&tree, 0, &mut steps);
        r = r.output("leaves", Value::Array(tree.leaves().into_iter().map(interval_value).collect()));
        r.trace = Some(steps);
    }
    Ok(r)
}

fn walk(node: &TauNode, level: usize, out: &mut Vec<Value>) {
    let mut v = interval_value(&node.interval);
    v["depth"] = num(level);
    out.push(v);
    for c in &node.children {
        walk(c, level + 1, out);
    }
}

fn count(c: CountArgs) -> Result<QueryResult, Failure> {
    if let Some(CountSub::Special { m }) = c.special {
        let (a2, a1, a0) = a_special(m)?;
        return Ok(QueryResult::new("count special")
            .input("m", num(m))
            .output("C(m)", num(c_closed(m)?))
            .output("B(f_m-2)", num(b_fm_minus2(m)?))
            .output("B(f_m)", num(b_fm(m)?))
            .output("A(f_m-2)", num(a2))
            .output("A(f_m-1)", num(a1))
            .output("A(f_m)", num(a0)));
    }
    let chosen = [c.distinct, c.occurrences, c.ending].iter().filter(|&&b| b).count();
    if chosen != 1 {
        return Err(Failure::Usage("give exactly one of --distinct, --occurrences, --ending".into()));
    }
    let n = c.n.ok_or_else(|| Failure::Usage("count needs -n N".into()))?;
    if c.trace && !c.occurrences {
        return Err(Failure::Usage("--trace applies to --occurrences".into()));
    }
    let r = QueryResult::new("count");
    Ok(if c.distinct {
        if n == BigUint::from(0u32) {
            return Err(Failure::Usage("positions are 1-based".into()));
        }
        r.input("kind", json!("distinct")).input("n", num(&n)).output("distinct", num(&n))
    } else if c.ending {
        r.input("kind", json!("ending")).input("n", num(&n)).output("A", num(ending_count(&n)?))
    } else {
        let t = occurrence_count_traced(&n);
        let mut r = r.input("kind", json!("occurrences")).input("n", num(&n)).output("B", num(&t.total));
        if c.trace {
            let base_at = if t.m >= 2 { fib(t.m)? - 2u32 } else { BigUint::from(0u32) };
            r = r
                .output("m", num(t.m))
                .output("base_at", num(&base_at))
                .output("base", num(&t.base))
                .output("tail", num(&t.tail));
            let mut steps: Vec<Value> = t
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "m": s.m,
                        "n": num(&s.n),
                        "case": match s.case { TailCase::Head => "head", TailCase::Tail => "tail" },
                        "constant": num(&s.constant),
                        "next": num(&s.next),
                    })
                })
                .collect();
            steps.push(json!({ "table_sum": t.base_sum }));
            r.trace = Some(steps);
        }
        r
    })
}

fn report_record(rep: &CheckReport, lim: &Limits) -> QueryResult {
    let mut r = QueryResult::new("verify")
        .input("suite", json!(rep.suite.name()))
        .input("max_n", num(lim.max_n))
        .input("max_m", num(lim.max_m))
        .input("max_p", num(lim.max_p))
        .output("check", json!(rep.name))
        .output("passed", Value::Bool(rep.passed()))
        .output("cases", num(rep.checked));
    if let Some(f) = &rep.failure {
        r = r.output("counterexample", json!(f));
    }
    r
}

fn verify(v: VerifyArgs) -> Out {
    let lim = Limits { max_n: v.max_n, max_m: v.max_m, max_p: v.max_p };
    if lim.max_n == 0 || lim.max_p == 0 || lim.max_m < 1 {
        return Err(Failure::Usage("--max-n and --max-p must be >= 1, --max-m >= 1".into()));
    }
    let results = run_all(&v.suite.0, &lim);
    let mut out = Vec::new();
    for res in results {
        out.extend(res?.iter().map(|rep| report_record(rep, &lim)));
    }
    Ok(out)
}

#[cfg(feature = "parallel")]
fn run_all(suites: &[Suite], lim: &Limits) -> Vec<fibpal_core::Result<Vec<CheckReport>>> {
    use rayon::prelude::*;
    suites.par_iter().map(|&s| run_suite(s, lim)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(suites: &[Suite], lim: &Limits) -> Vec<fibpal_core::Result<Vec<CheckReport>>> {
    suites.iter().map(|&s| run_suite(s, lim)).collect()
}

fn table(t: TableCmd) -> Result<QueryResult, Failure> {
    Ok(match t {
        TableCmd::Cylinders { rows } => {
            if rows == 0 {
                return Err(Failure::Usage("--rows must be >= 1".into()));
            }
            let cols = cylinder_table(rows)?;
            let cell = |e: &fibpal_core::cylinder::TableEntry| {
                let w = show(&e.word);
                if e.is_singular() {
                    format!("[{w}]")
                } else {
                    w
                }
            };
            let width = cols.iter().flatten().map(|e| cell(e).len()).max().unwrap_or(0) + 2;
            let mut text = String::new();
            for c in Cylinder::ALL {
                text += &format!("{:<width$}", c.label());
            }
            text = text.trim_end().to_string() + "\n";
            for r in 0..rows {
                let line: String = cols.iter().map(|col| format!("{:<width$}", cell(&col[r]))).collect();
                text += line.trim_end();
                text.push('\n');
            }
            let json_cols: Vec<Value> = cols
                .iter()
                .map(|col| {
                    Value::Array(col.iter().map(|e| json!({ "word": show(&e.word), "singular": e.is_singular() })).collect())
                })
                .collect();
            QueryResult::new("table cylinders")
                .input("rows", num(rows))
                .output("<a>", json_cols[0].clone())
                .output("<b>", json_cols[1].clone())
                .output("<aa>", json_cols[2].clone())
                .output("table", Value::String(text))
        }
        TableCmd::Chain { max_m } => {
            if max_m < -1 {
                return Err(Failure::Usage("--max-m must be >= -1".into()));
            }
            let p = BigUint::from(1u32);
            let ivs = (-1..=max_m).map(|m| chain_interval(m, &p)).collect::<fibpal_core::Result<Vec<_>>>()?;
            let label = |m: i32| match m {
                -1 => "<a,1>".to_string(),
                0 => "<b,1>".to_string(),
                1 => "<aa,1>".to_string(),
                _ => format!("<K_{m},1>"),
            };
            let set = |iv: &ChainInterval| {
                let size = iv.size();
                if size <= BigUint::from(3u32) {
                    let mut xs = Vec::new();
                    let mut x = iv.lo.clone();
                    while x <= iv.hi {
                        xs.push(x.to_string());
                        x += 1u32;
                    }
                    format!("{{{}}}", xs.join(","))
                } else {
                    format!("{{{},...,{}}}", iv.lo, iv.hi)
                }
            };
            let heads: Vec<String> = ivs.iter().map(|iv| label(iv.m)).collect();
            let sets: Vec<String> = ivs.iter().map(set).collect();
            let text = format!("{}\n{}\n", heads.join(" | "), sets.join(" | "));
            QueryResult::new("table chain")
                .input("max_m", num(max_m))
                .output("intervals", Value::Array(ivs.iter().map(interval_value).collect()))
                .output("table", Value::String(text))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_exits_1_with_counterexample() {
        let ok = CheckReport { suite: Suite::Floors, name: "a", checked: 3, failure: None };
        let bad = CheckReport { failure: Some("p=7".into()), name: "b", ..ok.clone() };
        let worse = CheckReport { failure: Some("p=9".into()), name: "c", ..ok.clone() };
        let lim = Limits::default();
        let recs: Vec<QueryResult> = [ok, bad, worse].iter().map(|r| report_record(r, &lim)).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(write_records(&recs, false, &mut out, &mut err), 1);
        assert_eq!(String::from_utf8(err).unwrap(), "counterexample: p=7\n");
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 3);
    }

    #[test]
    fn numbers_are_plain_decimals() {
        let v = num("123456789012345678901234567890");
        assert_eq!(v.to_string(), "123456789012345678901234567890");
        assert_eq!(plain_value(&json!("x")), "x");
    }

    #[test]
    fn suite_lists() {
        assert_eq!(suite_list("all").unwrap().0.len(), 8);
        assert_eq!(suite_list("return-words").unwrap().0, vec![Suite::ReturnWords]);
        assert!(suite_list("x").is_err());
    }
}
