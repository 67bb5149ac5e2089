//! The `gengraph` command line.
//!
//! Vertices are written `a,b` (the modulus of `Z × Z/nZ` goes in `--n`),
//! free-group words as space-separated letters such as `"x1 x2^-1"`.
//! Every answer is printed as a record, either as `key: value` lines or,
//! with `--json`, as one JSON object per line. Certificates are re-checked
//! before printing unless `--verify false` is given.
//!
//! Exit codes: 0 success, 1 negative answer, 2 invalid input, 3 resource
//! limit exceeded, 4 failed certificate check.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use crate::arith::{
    gcd, is_prime, matrix_product, ElementaryMatrix, Int, Mat2, Row, Unit,
};
use crate::chains::{
    distance_bounds, fib_vertex, lar_chain, t_word_from_chain, t_word_to_matrix, validate_chain,
    BoxSearch,
};
use crate::error::{Error, Result};
use crate::export::{lattice_ball, EdgeList};
use crate::finite::{build_gamma, build_gamma_star_capped, diameter, FiniteGraph, DEFAULT_VERTEX_CAP};
use crate::free::{
    abelianize, apply_nielsen_all, generates_free, lift_vector, nielsen_reduce_pair, Word,
};
use crate::lattice::{
    det, factor_elementary, find_witness_lattice, is_adjacent_lattice, is_nonisolated_lattice,
    neighborhood, path_to_basis, LatticePath, LatticeVertex,
};
use crate::torsion::{
    common_neighbor, generates_torsion_oracle, is_adjacent_torsion, is_nonisolated_torsion,
    path_torsion, witness_search_torsion, Lift, TorsionVertex,
};

#[derive(Parser, Debug)]
#[command(
    name = "gengraph",
    version,
    about = "Generating graphs of Z x Z/nZ, Z/m x Z/n, Z x Z and the free group F2"
)]
struct Cli {
    /// Print one JSON object per line.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized self-tests.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Re-check certificates before printing.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set, value_name = "BOOL")]
    verify: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Torsion,
    Lattice,
    Free,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VertexKind {
    Torsion,
    Lattice,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether two vertices (or two words) are adjacent.
    Adjacent {
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        /// Modulus of the torsion part.
        #[arg(long)]
        n: Option<String>,
    },
    /// Whether a vertex has a neighbour, with the smallest witness.
    Nonisolated {
        kind: VertexKind,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        n: Option<String>,
    },
    /// Neighbours `k·v ± witness` of a lattice vertex for `|k| <= K`.
    Neighbors {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 2)]
        limit: u64,
    },
    /// A vertex of Z x Z/nZ adjacent to both inputs.
    CommonNeighbor {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        n: String,
    },
    /// A path between two vertices; a lattice path starts at (1, 0) when
    /// only one vertex is given.
    Path {
        kind: VertexKind,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Lower and upper bounds on a lattice distance.
    Distance {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
        /// Half-width of the breadth-first search box.
        #[arg(long = "box")]
        search_box: Option<i64>,
    },
    /// The Fibonacci vertex (F_2n, F_2n+1) and its distance from (0, 1).
    FibPair {
        n: u64,
        #[arg(long = "box")]
        search_box: Option<i64>,
    },
    /// The least-absolute-remainder chain starting from a, b.
    Chain {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Elementary factors of the matrix ((a, b), (c, d)).
    Factor {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Greedy Nielsen reduction of a pair of words.
    NielsenReduce { w1: String, w2: String },
    /// A free-group word over a lattice vertex, with a generating companion.
    Lift {
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// The generating graph of Z/m x Z/n (non-isolated part unless --full).
    FiniteGraph {
        m: i64,
        n: i64,
        #[arg(long)]
        diameter: bool,
        #[arg(long)]
        full: bool,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: u64,
    },
    /// DOT for the ball of a given radius around a lattice vertex.
    ExportDot {
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long = "box", default_value_t = 2)]
        search_box: i64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Randomized consistency checks driven by --seed.
    Selftest {
        #[arg(long, default_value_t = 200)]
        rounds: usize,
    },
}

enum Outcome {
    Positive,
    Negative,
}

struct Field {
    key: &'static str,
    value: Value,
    sep: &'static str,
}

struct Record {
    command: &'static str,
    fields: Vec<Field>,
}

impl Record {
    fn new(command: &'static str) -> Self {
        Record {
            command,
            fields: Vec::new(),
        }
    }

    fn put(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.fields.push(Field {
            key,
            value: value.into(),
            sep: ", ",
        });
        self
    }

    fn text(&mut self, key: &'static str, value: impl ToString) -> &mut Self {
        self.put(key, value.to_string())
    }

    fn list<I, S>(&mut self, key: &'static str, items: I, sep: &'static str) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let value = Value::Array(items.into_iter().map(|s| Value::String(s.to_string())).collect());
        self.fields.push(Field { key, value, sep });
        self
    }

    fn render(&self, json: bool) -> String {
        if json {
            let mut map = Map::new();
            map.insert("command".into(), Value::String(self.command.into()));
            for f in &self.fields {
                map.insert(f.key.into(), f.value.clone());
            }
            return format!("{}\n", Value::Object(map));
        }
        let mut out = String::new();
        for f in &self.fields {
            let text = plain(&f.value, f.sep);
            if f.key == "answer" {
                out.push_str(&text);
            } else {
                out.push_str(f.key);
                out.push_str(": ");
                out.push_str(&text);
            }
            out.push('\n');
        }
        out
    }
}

fn plain(v: &Value, sep: &str) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(|x| plain(x, ", ")).collect::<Vec<_>>().join(sep),
        other => other.to_string(),
    }
}

/// Runs the command line on `args` (program name first), writing records
/// to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let ctx = Ctx {
        json: cli.json,
        verify: cli.verify,
        seed: cli.seed,
    };
    let mut records = Vec::new();
    let result = dispatch(&ctx, cli.command, &mut records);
    for r in &records {
        if out.write_all(r.render(ctx.json).as_bytes()).is_err() {
            return 2;
        }
    }
    match result {
        Ok(Outcome::Positive) => 0,
        Ok(Outcome::Negative) => 1,
        Err(e) => {
            let _ = writeln!(err, "gengraph: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::ModulusMismatch(..) | Error::Isolated(_) => 2,
        Error::ResourceExhausted(_) => 3,
        Error::Verification(_) => 4,
    }
}

struct Ctx {
    json: bool,
    verify: bool,
    seed: u64,
}

impl Ctx {
    fn check(&self, ok: impl FnOnce() -> bool, what: impl FnOnce() -> String) -> Result<()> {
        if self.verify && !ok() {
            return Err(Error::Verification(what()));
        }
        Ok(())
    }
}

fn parse_int(s: &str) -> Result<Int> {
    s.trim()
        .parse::<Int>()
        .map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}")))
}

fn parse_pair(s: &str) -> Result<(Int, Int)> {
    let t = s.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(t);
    let parts: Vec<&str> = t.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidInput(format!("expected a vertex a,b, got {s:?}")));
    }
    Ok((parse_int(parts[0])?, parse_int(parts[1])?))
}

fn lattice(s: &str) -> Result<LatticeVertex> {
    let (a, b) = parse_pair(s)?;
    Ok(LatticeVertex::new(a, b))
}

fn torsion(s: &str, n: Option<&str>) -> Result<TorsionVertex> {
    let n = n.ok_or_else(|| Error::InvalidInput("torsion vertices need --n".into()))?;
    let (a, b) = parse_pair(s)?;
    TorsionVertex::new(a, b, parse_int(n)?)
}

fn word(s: &str) -> Result<Word> {
    s.parse()
}

fn dispatch(ctx: &Ctx, command: Command, records: &mut Vec<Record>) -> Result<Outcome> {
    match command {
        Command::Adjacent { kind, v, w, n } => adjacent(ctx, kind, &v, &w, n.as_deref(), records),
        Command::Nonisolated { kind, v, n } => nonisolated(ctx, kind, &v, n.as_deref(), records),
        Command::Neighbors { v, limit } => neighbors(ctx, &v, limit, records),
        Command::CommonNeighbor { v, w, n } => common(ctx, &v, &w, &n, records),
        Command::Path { kind, v, w, n } => path(ctx, kind, &v, w.as_deref(), n.as_deref(), records),
        Command::Distance { v, w, search_box } => {
            distance(ctx, &lattice(&v)?, &lattice(&w)?, search_box, "distance", records)
        }
        Command::FibPair { n, search_box } => {
            let v = fib_vertex(n)?;
            distance(ctx, &v, &LatticeVertex::from_i64(0, 1), search_box, "fib-pair", records)
        }
        Command::Chain { a, b } => chain(ctx, &a, &b, records),
        Command::Factor { a, b, c, d } => factor(ctx, [&a, &b, &c, &d], records),
        Command::NielsenReduce { w1, w2 } => nielsen(ctx, &w1, &w2, records),
        Command::Lift { v } => lift(ctx, &v, records),
        Command::FiniteGraph {
            m,
            n,
            diameter,
            full,
            dot,
            csv,
            cap,
        } => finite_graph(m, n, diameter, full, dot, csv, cap, records),
        Command::ExportDot {
            v,
            radius,
            search_box,
            out,
        } => export_dot(&v, radius, search_box, out, records),
        Command::Selftest { rounds } => selftest(ctx, rounds, records),
    }
}

fn answer(r: &mut Record, yes: bool) -> Outcome {
    r.put("answer", yes);
    if yes {
        Outcome::Positive
    } else {
        Outcome::Negative
    }
}

fn adjacent(
    ctx: &Ctx,
    kind: Kind,
    v: &str,
    w: &str,
    n: Option<&str>,
    records: &mut Vec<Record>,
) -> Result<Outcome> {
    let mut r = Record::new("adjacent");
    let outcome = match kind {
        Kind::Torsion => {
            let (v, w) = (torsion(v, n)?, torsion(w, n)?);
            let yes = is_adjacent_torsion(&v, &w)?;
            ctx.check(
                || generates_torsion_oracle(&v, &w) == Ok(yes),
                || format!("adjacency of {v} and {w} disagrees with the invariant factors"),
            )?;
            let d = v.a() * w.b() - v.b() * w.a();
            let out = answer(&mut r, yes);
            r.text("gcd_first", gcd(v.a(), w.a()))
                .text("det", &d)
                .text("gcd_det_n", gcd(&d, v.n()));
            out
        }
        Kind::Lattice => {
            let (v, w) = (lattice(v)?, lattice(w)?);
            let yes = is_adjacent_lattice(&v, &w);
            let out = answer(&mut r, yes);
            r.text("det", det(&v, &w));
            out
        }
        Kind::Free => {
            let pair = (word(v)?, word(w)?);
            let yes = pair.0 != pair.1 && generates_free(&pair);
            let out = answer(&mut r, yes);
            if !pair.0.is_empty() && !pair.1.is_empty() {
                let red = nielsen_reduce_pair(&pair)?;
                ctx.check(
                    || apply_nielsen_all(&red.moves(), &pair) == red.reduced,
                    || "Nielsen moves do not replay to the reduced pair".into(),
                )?;
                r.put("steps", red.steps.len())
                    .list("reduced", [&red.reduced.0, &red.reduced.1], ", ");
            }
            r.text("abelianization", det(&abelianize(&pair.0), &abelianize(&pair.1)));
            out
        }
    };
    records.push(r);
    Ok(outcome)
}

fn nonisolated(
    ctx: &Ctx,
    kind: VertexKind,
    v: &str,
    n: Option<&str>,
    records: &mut Vec<Record>,
) -> Result<Outcome> {
    let mut r = Record::new("nonisolated");
    let outcome = match kind {
        VertexKind::Torsion => {
            let v = torsion(v, n)?;
            let yes = is_nonisolated_torsion(&v);
            let found = witness_search_torsion(&v);
            ctx.check(
                || found.is_some() == yes,
                || format!("gcd test and witness search disagree on {v}"),
            )?;
            let out = answer(&mut r, yes);
            if let Some(w) = found {
                ctx.check(
                    || generates_torsion_oracle(&v, &w) == Ok(true),
                    || format!("witness {w} does not generate with {v}"),
                )?;
                r.text("witness", w);
            }
            out
        }
        VertexKind::Lattice => {
            let v = lattice(v)?;
            let yes = is_nonisolated_lattice(&v);
            let out = answer(&mut r, yes);
            if yes {
                let w = find_witness_lattice(&v)?;
                ctx.check(
                    || det(&v, &w).is_one(),
                    || format!("witness {w} has det != 1"),
                )?;
                r.text("witness", &w).text("det", det(&v, &w));
            }
            out
        }
    };
    records.push(r);
    Ok(outcome)
}

fn neighbors(ctx: &Ctx, v: &str, limit: u64, records: &mut Vec<Record>) -> Result<Outcome> {
    let v = lattice(v)?;
    let list = neighborhood(&v, limit)?;
    ctx.check(
        || list.iter().all(|w| is_adjacent_lattice(&v, w)),
        || format!("a listed neighbour is not adjacent to {v}"),
    )?;
    let mut r = Record::new("neighbors");
    r.text("vertex", &v)
        .put("count", list.len())
        .list("neighbors", &list, "; ");
    records.push(r);
    Ok(Outcome::Positive)
}

fn common(ctx: &Ctx, v: &str, w: &str, n: &str, records: &mut Vec<Record>) -> Result<Outcome> {
    let (v, w) = (torsion(v, Some(n))?, torsion(w, Some(n))?);
    let cn = common_neighbor(&v, &w)?;
    let u = &cn.vertex;
    ctx.check(
        || generates_torsion_oracle(u, &v) == Ok(true) && generates_torsion_oracle(u, &w) == Ok(true),
        || format!("{u} is not adjacent to both inputs"),
    )?;
    let mut r = Record::new("common-neighbor");
    r.text("vertex", u)
        .text("base", format!("({}, {})", cn.base.0, cn.base.1));
    match &cn.lift {
        Lift::Prime { u: d, x_star, m, t, p } => {
            ctx.check(
                || is_prime(p) && *p == x_star + t * m && u.a() == &(d * p),
                || format!("prime lift data for {u} is inconsistent"),
            )?;
            r.text("lift", "prime")
                .text("u", d)
                .text("x_star", x_star)
                .text("m", m)
                .text("t", t)
                .text("p", p);
        }
        Lift::Unit => {
            r.text("lift", "unit");
        }
    }
    records.push(r);
    Ok(Outcome::Positive)
}

fn check_lattice_path(ctx: &Ctx, p: &LatticePath, from: &LatticeVertex, to: &LatticeVertex) -> Result<()> {
    ctx.check(
        || p.is_valid() && p.vertices.first() == Some(from) && p.vertices.last() == Some(to),
        || format!("path {p} is not a valid path from {from} to {to}"),
    )
}

fn path(
    ctx: &Ctx,
    kind: VertexKind,
    v: &str,
    w: Option<&str>,
    n: Option<&str>,
    records: &mut Vec<Record>,
) -> Result<Outcome> {
    let mut r = Record::new("path");
    match kind {
        VertexKind::Torsion => {
            let w = w.ok_or_else(|| Error::InvalidInput("torsion paths need two vertices".into()))?;
            let (v, w) = (torsion(v, n)?, torsion(w, n)?);
            let p = path_torsion(&v, &w)?;
            ctx.check(
                || {
                    p.vertices.first() == Some(&v)
                        && p.vertices.last() == Some(&w)
                        && p.vertices
                            .windows(2)
                            .all(|e| generates_torsion_oracle(&e[0], &e[1]) == Ok(true))
                },
                || "torsion path has an invalid edge".into(),
            )?;
            r.put("length", p.len()).list("path", &p.vertices, " - ");
        }
        VertexKind::Lattice => {
            let target = lattice(v)?;
            let p = match w {
                None => path_to_basis(&target)?,
                Some(w) => {
                    let to = lattice(w)?;
                    let mut vertices = path_to_basis(&target)?.vertices;
                    vertices.reverse();
                    vertices.extend(path_to_basis(&to)?.vertices.into_iter().skip(1));
                    LatticePath { vertices }.without_loops()
                }
            };
            let (from, to) = match w {
                None => (LatticeVertex::from_i64(1, 0), target),
                Some(w) => (target, lattice(w)?),
            };
            check_lattice_path(ctx, &p, &from, &to)?;
            r.put("length", p.len()).list("path", &p.vertices, " - ");
        }
    }
    records.push(r);
    Ok(Outcome::Positive)
}

fn distance(
    ctx: &Ctx,
    v: &LatticeVertex,
    w: &LatticeVertex,
    search_box: Option<i64>,
    command: &'static str,
    records: &mut Vec<Record>,
) -> Result<Outcome> {
    let b = distance_bounds(v, w, search_box)?;
    check_lattice_path(ctx, &b.path, v, w)?;
    ctx.check(
        || b.lower <= b.upper && b.path.len() >= b.upper,
        || "distance bounds are inconsistent".into(),
    )?;
    let mut r = Record::new(command);
    r.text("from", v)
        .text("to", w)
        .put("lower", b.lower)
        .text("lower_source", "shortest Euclidean chain")
        .put("upper", b.upper)
        .put("exact", b.is_exact())
        .text("bounds", format!("{} <= d <= {}", b.lower, b.upper));
    match (b.search, search_box) {
        (BoxSearch::Found(d), Some(m)) => r.text("box_search", format!("<= {d} (within box {m})")),
        (BoxSearch::Unreachable, Some(m)) => r.text("box_search", format!("unreachable within box {m}")),
        _ => r.text("box_search", "skipped"),
    };
    r.list("path", &b.path.vertices, " - ");
    records.push(r);
    Ok(Outcome::Positive)
}

fn chain(ctx: &Ctx, a: &str, b: &str, records: &mut Vec<Record>) -> Result<Outcome> {
    let (a, b) = (parse_int(a)?, parse_int(b)?);
    let c = lar_chain(&a, &b)?;
    ctx.check(|| validate_chain(&c), || format!("chain {c} is not a Euclidean chain"))?;
    let mut r = Record::new("chain");
    r.put("length", c.len())
        .list("remainders", &c.remainders, ", ")
        .list("quotients", &c.quotients, ", ")
        .text("divisions", &c);
    if c.last_nonzero().is_some_and(|g| g.abs().is_one()) {
        // The chain for (a, b) belongs to the vertex (b, a).
        let tw = t_word_from_chain(&c, &b, &a)?;
        let m = t_word_to_matrix(&tw);
        ctx.check(
            || m.second_row() == [b.clone(), a.clone()],
            || format!("T-word {tw} does not reach ({b}, {a})"),
        )?;
        r.text("vertex", LatticeVertex::new(b.clone(), a.clone()))
            .text("t_word", &tw)
            .text("matrix", m);
    }
    records.push(r);
    Ok(Outcome::Positive)
}

fn factor(ctx: &Ctx, entries: [&String; 4], records: &mut Vec<Record>) -> Result<Outcome> {
    let [a, b, c, d] = entries;
    let m = Mat2::new(parse_int(a)?, parse_int(b)?, parse_int(c)?, parse_int(d)?);
    let factors = factor_elementary(&m)?;
    ctx.check(
        || matrix_product(&factors) == m,
        || format!("factors do not multiply back to {m}"),
    )?;
    let mut r = Record::new("factor");
    r.text("matrix", &m)
        .text("det", m.det())
        .put("count", factors.len())
        .list("factors", &factors, " * ");
    records.push(r);
    Ok(Outcome::Positive)
}

fn nielsen(ctx: &Ctx, w1: &str, w2: &str, records: &mut Vec<Record>) -> Result<Outcome> {
    let pair = (word(w1)?, word(w2)?);
    let red = nielsen_reduce_pair(&pair)?;
    let moves = red.moves();
    ctx.check(
        || apply_nielsen_all(&moves, &pair) == red.reduced,
        || "Nielsen moves do not replay to the reduced pair".into(),
    )?;
    let mut r = Record::new("nielsen-reduce");
    r.list("reduced", [&red.reduced.0, &red.reduced.1], ", ")
        .put("generates", red.is_basis())
        .list("steps", &red.steps, "; ")
        .list("moves", &moves, " ");
    records.push(r);
    Ok(Outcome::Positive)
}

fn lift(ctx: &Ctx, v: &str, records: &mut Vec<Record>) -> Result<Outcome> {
    let v = lattice(v)?;
    let l = lift_vector(&v)?;
    ctx.check(
        || abelianize(l.word()) == v && generates_free(&(l.word().clone(), l.companion().clone())),
        || format!("lift of {v} is not certified"),
    )?;
    let mut r = Record::new("lift");
    r.text("vertex", &v)
        .text("word", l.word())
        .text("companion", l.companion())
        .put("length", l.word().len());
    records.push(r);
    Ok(Outcome::Positive)
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn finite_graph(
    m: i64,
    n: i64,
    with_diameter: bool,
    full: bool,
    dot: Option<PathBuf>,
    csv: Option<PathBuf>,
    cap: u64,
    records: &mut Vec<Record>,
) -> Result<Outcome> {
    let g: FiniteGraph = if full {
        build_gamma(m, n, cap)?
    } else {
        build_gamma_star_capped(m, n, cap)?
    };
    let name = if full { "Gamma" } else { "Gamma*" };
    let comment = format!("{name}(Z/{m} x Z/{n})");
    let list = EdgeList::from_finite(&g, comment.clone());
    let mut r = Record::new("finite-graph");
    r.text("graph", &comment)
        .put("vertices", g.vertices().len())
        .put("edges", g.edge_count());
    if with_diameter {
        r.text("diameter", diameter(&g));
    }
    if let Some(path) = dot {
        write_file(&path, &list.to_dot())?;
        r.text("dot", path.display());
    }
    if let Some(path) = csv {
        write_file(&path, &list.to_csv())?;
        r.text("csv", path.display());
    }
    records.push(r);
    Ok(Outcome::Positive)
}

fn export_dot(
    v: &str,
    radius: usize,
    search_box: i64,
    out: Option<PathBuf>,
    records: &mut Vec<Record>,
) -> Result<Outcome> {
    let ball = lattice_ball(&lattice(v)?, radius, search_box)?;
    let text = ball.to_dot();
    let mut r = Record::new("export-dot");
    r.text("ball", &ball.comment)
        .put("vertices", ball.labels.len())
        .put("edges", ball.edges.len());
    match out {
        Some(path) => {
            write_file(&path, &text)?;
            r.text("dot", path.display());
        }
        None => {
            r.text("dot", text.trim_end());
        }
    }
    records.push(r);
    Ok(Outcome::Positive)
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> Mat2 {
    let count = rng.gen_range(0..=30);
    let factors: Vec<ElementaryMatrix> = (0..count)
        .map(|_| {
            let row = if rng.gen_bool(0.5) { Row::First } else { Row::Second };
            match rng.gen_range(0..3) {
                0 => ElementaryMatrix::Transposition,
                1 => ElementaryMatrix::dilation(row, Unit::Minus),
                _ => ElementaryMatrix::Transvection {
                    row,
                    factor: Int::from(rng.gen_range(-10i64..=10)),
                },
            }
        })
        .collect();
    matrix_product(&factors)
}

fn random_coprime(rng: &mut ChaCha8Rng, bound: i64) -> LatticeVertex {
    loop {
        let v = LatticeVertex::from_i64(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if is_nonisolated_lattice(&v) {
            return v;
        }
    }
}

fn selftest(ctx: &Ctx, rounds: usize, records: &mut Vec<Record>) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut failures: Vec<String> = Vec::new();

    for _ in 0..rounds {
        let n: i64 = rng.gen_range(2..=12);
        let pick = |rng: &mut ChaCha8Rng| loop {
            let v = TorsionVertex::from_i64(rng.gen_range(-1_000_000..=1_000_000), rng.gen_range(0..n), n)
                .expect("modulus is at least 2");
            if is_nonisolated_torsion(&v) {
                return v;
            }
        };
        let (v, w) = (pick(&mut rng), pick(&mut rng));
        let ok = path_torsion(&v, &w).is_ok_and(|p| {
            p.len() <= 2
                && p.vertices
                    .windows(2)
                    .all(|e| generates_torsion_oracle(&e[0], &e[1]) == Ok(true))
        });
        if !ok {
            failures.push(format!("torsion path {v} -> {w}"));
        }
    }

    for _ in 0..rounds {
        let m = random_unimodular(&mut rng);
        if !factor_elementary(&m).is_ok_and(|f| matrix_product(&f) == m) {
            failures.push(format!("factorization of {m}"));
        }
    }

    for _ in 0..rounds {
        let v = random_coprime(&mut rng, 10_000);
        let ok = path_to_basis(&v).is_ok_and(|p| {
            p.is_valid() && p.vertices.first() == Some(&LatticeVertex::from_i64(1, 0)) && p.vertices.last() == Some(&v)
        });
        if !ok {
            failures.push(format!("path to {v}"));
        }
    }

    for _ in 0..rounds {
        let v = random_coprime(&mut rng, 50);
        let w = random_coprime(&mut rng, 50);
        let ok = distance_bounds(&v, &w, None).is_ok_and(|b| {
            b.lower <= b.upper && b.path.is_valid() && b.path.len() == b.upper
        });
        if !ok {
            failures.push(format!("distance bounds {v} -> {w}"));
        }
        let ok = lift_vector(&v).is_ok_and(|l| {
            abelianize(l.word()) == v
                && generates_free(&(l.word().clone(), l.companion().clone()))
                && (l.word().len() as u64) == (v.a.abs() + v.b.abs()).try_into().unwrap_or(0u64)
        });
        if !ok {
            failures.push(format!("lift of {v}"));
        }
    }

    let mut r = Record::new("selftest");
    r.put("seed", ctx.seed)
        .put("rounds", rounds)
        .put("checks", rounds * 5)
        .put("failures", failures.len())
        .list("failed", &failures, "; ");
    records.push(r);
    if failures.is_empty() {
        Ok(Outcome::Positive)
    } else {
        Err(Error::Verification(format!("{} self-test checks failed", failures.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gengraph").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn lattice_adjacency() {
        let (code, out, _) = call(&["adjacent", "lattice", "1,0", "0,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "true\ndet: 1\n");
        let (code, out, _) = call(&["adjacent", "lattice", "2,0", "0,1"]);
        assert_eq!(code, 1);
        assert_eq!(out, "false\ndet: 2\n");
    }

    #[test]
    fn negative_coordinates_and_json() {
        let (code, out, _) = call(&["--json", "adjacent", "lattice", "-1,0", "0,-1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"command\":\"adjacent\",\"answer\":true,\"det\":\"1\"}\n");
    }

    #[test]
    fn torsion_path_through_prime_lift() {
        let (code, out, _) = call(&["path", "torsion", "--n", "2", "1,0", "3,0"]);
        assert_eq!(code, 0);
        assert!(out.contains("length: 2"), "{out}");
        assert!(out.contains("(1, 0 mod 2) - (10, 1 mod 2) - (3, 0 mod 2)"), "{out}");
    }

    #[test]
    fn fib_pair_two() {
        let (code, out, _) = call(&["fib-pair", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("from: (3, 5)"), "{out}");
        assert!(out.contains("lower: 2\n"), "{out}");
    }

    #[test]
    fn malformed_input() {
        assert_eq!(call(&["adjacent", "lattice", "1;0", "0,1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["adjacent", "torsion", "1,0", "0,1"]).0, 2);
        assert_eq!(call(&["lift", "2,4"]).0, 2);
        assert_eq!(call(&["distance", "0,1", "3,5", "--box", "5000"]).0, 3);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn free_commands() {
        let (code, out, _) = call(&["nielsen-reduce", "x1 x2", "x2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("reduced: x1, x2\ngenerates: true\n"), "{out}");
        let (code, _, _) = call(&["adjacent", "free", "x1 x1", "x2"]);
        assert_eq!(code, 1);
        let (code, out, _) = call(&["lift", "1,0"]);
        assert_eq!(code, 0);
        assert!(out.contains("word: x1\ncompanion: x2\n"), "{out}");
    }

    #[test]
    fn selftest_passes() {
        let (code, out, err) = call(&["--seed", "7", "selftest", "--rounds", "20"]);
        assert_eq!(code, 0, "{out}{err}");
        assert!(out.contains("failures: 0"));
    }
}
