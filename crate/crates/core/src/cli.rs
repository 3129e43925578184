//! Command-line front end. [`run`] does all the work and returns the exit code
//! with the captured output, so the binary is a one-line wrapper and tests can
//! drive every subcommand in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::charfn::{check, random_q_charfn, CharFunction};
use crate::classify::classify;
use crate::corpus::{corpus, names};
use crate::facevec::{identity_report, FaceVectorReport, Verdict};
use crate::homology::{reduced_betti, Coefficients, Field};
use crate::io::{
    emit_charfn, emit_poset, parse_file, quotient_report, to_json_string, Document, NamedPoset,
    ProblemBundle, QuotientReport,
};
use crate::spectral::{ManifoldData, PageTable, ProblemKind, SpectralError};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "sposet", version, about = "Simplicial poset invariants and torus quotient rank tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, purity, connectivity and f-vector.
    Stats(Common),
    /// Reduced Betti numbers (with torsion over z).
    Homology {
        #[command(flatten)]
        common: Common,
        /// z, q or fp:<p>; overrides --field.
        #[arg(long)]
        coeff: Option<Coefficients>,
    },
    /// f-, h-, ft-, h'- and h''-vectors.
    Fvec(Common),
    /// Buchsbaum, Cohen-Macaulay and homology-manifold verdicts.
    Classify(Common),
    /// Polynomial identities and Dehn-Sommerville relations.
    Identities(Common),
    /// Check or sample characteristic functions.
    #[command(subcommand)]
    Charfn(CharfnCommand),
    /// Rank tables of a torus quotient.
    #[command(subcommand)]
    Quotient(QuotientCommand),
    /// Built-in example posets.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
struct Common {
    /// Input file (sposet-v1, scomplex-v1, cone-v1 or manifold-v1).
    file: Option<PathBuf>,
    /// Use a built-in poset instead of a file.
    #[arg(long, conflicts_with = "file")]
    corpus: Option<String>,
    /// q or fp:<p>.
    #[arg(long, default_value = "q")]
    field: Field,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum CharfnCommand {
    /// Per-simplex validity of a charfn-v1 file.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        charfn: PathBuf,
        /// z, q or fp:<p>.
        #[arg(long, default_value = "z")]
        coeff: Coefficients,
    },
    /// Seeded random characteristic function valid over q.
    Random {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
}

#[derive(Debug, Args)]
struct QuotientArgs {
    #[command(flatten)]
    common: Common,
    /// Rank of the torus; defaults to dim S + 1.
    #[arg(long)]
    n: Option<usize>,
    /// charfn-v1 file.
    #[arg(long)]
    charfn: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum QuotientCommand {
    /// Cone over S: from a cone-v1 file or any poset input.
    Cone(QuotientArgs),
    /// Manifold with corners: from a manifold-v1 file.
    Manifold {
        #[command(flatten)]
        args: QuotientArgs,
        /// Betti numbers of Q, comma separated.
        #[arg(long = "betti-q", value_delimiter = ',')]
        betti_q: Option<Vec<usize>>,
        /// Ranks of H_i(boundary) -> H_i(Q), comma separated.
        #[arg(long, value_delimiter = ',')]
        iota: Option<Vec<usize>>,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusCommand {
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print an entry as sposet-v1.
    Emit { name: String },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        Self { code: 1, stdout, stderr }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::failed(String::new(), format!("error: {e}\n{}", details(&e))),
    }
}

fn details(e: &Error) -> String {
    let mut s = String::new();
    if let Error::Spectral(SpectralError::NotBuchsbaum { witnesses }) = e {
        for w in witnesses {
            let _ = writeln!(
                s,
                "  witness: link of `{}` has b~_{} = {}",
                w.element.as_deref().unwrap_or("S"),
                w.degree,
                w.betti
            );
        }
    }
    s
}

fn dispatch(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Stats(c) => stats(c),
        Command::Homology { common, coeff } => homology(common, coeff),
        Command::Fvec(c) => fvec(c),
        Command::Classify(c) => classify_cmd(c),
        Command::Identities(c) => identities(c),
        Command::Charfn(CharfnCommand::Check { common, charfn, coeff }) => charfn_check(common, charfn, coeff),
        Command::Charfn(CharfnCommand::Random { common, n, seed, bound }) => charfn_random(common, n, seed, bound),
        Command::Quotient(QuotientCommand::Cone(a)) => quotient(ProblemKind::Cone, a, None),
        Command::Quotient(QuotientCommand::Manifold { args, betti_q, iota }) => {
            let data = match (betti_q, iota) {
                (Some(betti_q), Some(iota)) => Some(ManifoldData { betti_q, iota, orientable: true }),
                (None, None) => None,
                _ => return Err(Error::Usage("--betti-q and --iota go together".into())),
            };
            quotient(ProblemKind::Manifold, args, data)
        }
        Command::Corpus(CorpusCommand::List { json }) => Ok(Outcome::ok(if json {
            to_json_string(&names())
        } else {
            names().join("\n") + "\n"
        })),
        Command::Corpus(CorpusCommand::Emit { name }) => {
            let s = corpus(&name)?;
            Ok(Outcome::ok(to_json_string(&emit_poset(Some(&name), &s))))
        }
    }
}

enum Input {
    Poset(NamedPoset),
    Bundle(ProblemBundle),
}

impl Input {
    fn poset(&self) -> &NamedPoset {
        match self {
            Input::Poset(p) => p,
            Input::Bundle(b) => &b.poset,
        }
    }
}

fn load(c: &Common) -> Result<Input, Error> {
    match (&c.file, &c.corpus) {
        (_, Some(name)) => Ok(Input::Poset(NamedPoset::corpus(name)?)),
        (Some(path), None) => match parse_file(path)? {
            Document::Poset(p) => Ok(Input::Poset(p)),
            Document::Problem(b) => Ok(Input::Bundle(b)),
            Document::CharFn(_) => Err(Error::Usage("expected a poset or problem file, got charfn-v1".into())),
        },
        (None, None) => Err(Error::Usage("give an input file or --corpus NAME".into())),
    }
}

fn load_charfn(path: &PathBuf) -> Result<CharFunction, Error> {
    match parse_file(path)? {
        Document::CharFn(l) => Ok(l),
        _ => Err(Error::Usage(format!("`{}` is not a charfn-v1 file", path.display()))),
    }
}

fn label(p: &NamedPoset) -> String {
    p.name().unwrap_or("<input>").to_string()
}

fn vec_str<T: std::fmt::Display>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(", "))
}

fn json_out(command: &str, input: &str, result: &impl Serialize) -> String {
    to_json_string(&json!({ "command": command, "input": input, "result": result }))
}

fn stats(c: Common) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let st = p.poset.validate_stats();
    if c.json {
        return Ok(Outcome::ok(json_out("stats", &label(p), &st)));
    }
    Ok(Outcome::ok(format!(
        "{}\n  dim        {}\n  pure       {}\n  connected  {}\n  f          {}\n",
        label(p),
        st.dim,
        st.pure,
        st.connected,
        vec_str(&st.f)
    )))
}

fn homology(c: Common, coeff: Option<Coefficients>) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let coeff = coeff.unwrap_or(c.field.into());
    let b = reduced_betti(&p.poset, coeff);
    if c.json {
        return Ok(Outcome::ok(json_out("homology", &label(p), &b)));
    }
    let mut s = format!("{} over {coeff}\n  degree  b~  torsion\n", label(p));
    for d in -1..=b.top_degree() {
        let t: Vec<String> = b.torsion(d).iter().map(|x| format!("Z/{x}")).collect();
        let _ = writeln!(s, "  {d:>6}  {:>2}  {}", b.reduced(d), t.join(" "));
    }
    Ok(Outcome::ok(s))
}

fn fvec(c: Common) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let r = FaceVectorReport::new(&p.poset, c.field)?;
    if c.json {
        return Ok(Outcome::ok(json_out("fvec", &label(p), &r)));
    }
    let mut s = format!("{} over {}, n = {}\n", label(p), r.field, r.n);
    for (name, v) in [("f", &r.f), ("h", &r.h), ("ft", &r.ft), ("h'", &r.hprime), ("h''", &r.hdoubleprime)] {
        let _ = writeln!(s, "  {name:<4} {}", vec_str(v));
    }
    let _ = writeln!(s, "  chi  {}\n  chi~ {}", r.chi, r.chitilde);
    Ok(Outcome::ok(s))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify_cmd(c: Common) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let r = classify(&p.poset, c.field)?;
    if c.json {
        return Ok(Outcome::ok(json_out("classify", &label(p), &r)));
    }
    let mut s = format!(
        "{} over {}\n  buchsbaum          {}\n  cohen-macaulay     {}\n  homology manifold  {}\n  orientable         {}\n",
        label(p),
        r.field,
        yes(r.buchsbaum),
        yes(r.cohen_macaulay),
        yes(r.homology_manifold),
        yes(r.orientable_over_field)
    );
    for w in &r.witnesses {
        let _ = writeln!(
            s,
            "  witness {:?}: {} has b~_{} = {}",
            w.property,
            w.element.as_deref().map_or("S".to_string(), |e| format!("lk `{e}`")),
            w.degree,
            w.betti
        );
    }
    Ok(Outcome::ok(s))
}

fn verdict_str(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::Fail => "FAIL".into(),
        Verdict::Skipped(why) => format!("skipped ({why})"),
    }
}

fn identities(c: Common) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let r = identity_report(&p.poset, c.field)?;
    let out = if c.json {
        json_out("identities", &label(p), &r)
    } else {
        let mut s = format!("{} over {}\n", label(p), c.field);
        for (name, v) in r.checks() {
            let _ = writeln!(s, "  {name:<28} {}", verdict_str(v));
        }
        s
    };
    Ok(if r.all_pass() {
        Outcome::ok(out)
    } else {
        Outcome::failed(out, "error: identity check failed\n".into())
    })
}

fn charfn_check(c: Common, path: PathBuf, coeff: Coefficients) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let lambda = load_charfn(&path)?;
    let r = check(&p.poset, &lambda, coeff)?;
    let out = if c.json {
        json_out("charfn check", &label(p), &r)
    } else {
        let mut s = format!("{} over {coeff}: {}\n", label(p), if r.pass { "PASS" } else { "FAIL" });
        if let Some(f) = r.first_failure() {
            let _ = write!(s, "  first failure at `{}`: rank {}", f.element, f.rank);
            if !f.invariant_factors.is_empty() {
                let _ = write!(s, ", invariant factors {}", vec_str(&f.invariant_factors));
            }
            s.push('\n');
        }
        s
    };
    Ok(if r.pass {
        Outcome::ok(out)
    } else {
        Outcome::failed(out, "error: characteristic function is not valid\n".into())
    })
}

fn charfn_random(c: Common, n: Option<usize>, seed: u64, bound: i64) -> Result<Outcome, Error> {
    let input = load(&c)?;
    let p = input.poset();
    let n = n.unwrap_or((p.poset.dim() + 1).max(0) as usize);
    let lambda = random_q_charfn(&p.poset, n, seed, bound)?;
    Ok(Outcome::ok(to_json_string(&emit_charfn(&lambda))))
}

fn quotient(kind: ProblemKind, a: QuotientArgs, data: Option<ManifoldData>) -> Result<Outcome, Error> {
    let input = load(&a.common)?;
    let mut bundle = match input {
        Input::Bundle(b) => {
            if b.kind != kind {
                return Err(Error::Usage(format!("input file describes a {:?} problem", b.kind).to_lowercase()));
            }
            b
        }
        Input::Poset(p) => {
            let n = a.n.unwrap_or((p.poset.dim() + 1).max(0) as usize);
            if kind == ProblemKind::Manifold && data.is_none() {
                return Err(Error::Usage("manifold problems need a manifold-v1 file or --betti-q/--iota".into()));
            }
            ProblemBundle {
                kind,
                poset: p,
                n,
                coeff: a.common.field.into(),
                manifold: data,
                charfn: None,
            }
        }
    };
    if let Some(path) = &a.charfn {
        bundle.charfn = Some(load_charfn(path)?);
    }
    let prob = bundle.to_problem()?;
    let report = quotient_report(&bundle, &prob);
    let out = if a.common.json {
        to_json_string(&report)
    } else {
        render_report(&bundle, &report)
    };
    Ok(if report.all_pass() {
        Outcome::ok(out)
    } else {
        Outcome::failed(out, "error: consistency check failed\n".into())
    })
}

fn render_page(t: &PageTable, n: usize) -> String {
    let n = n as i64;
    let lo = t.entries.iter().map(|e| e.q).min().unwrap_or(0).min(0);
    let hi = t.entries.iter().map(|e| e.q).max().unwrap_or(0).max(n - 1);
    let mut s = String::new();
    for q in (lo..=hi).rev() {
        let _ = write!(s, "    q={q:>3} |");
        for p in 0..=n {
            let _ = write!(s, " {:>4}", t.get(p, q));
        }
        s.push('\n');
    }
    let _ = write!(s, "          +");
    for p in 0..=n {
        let _ = write!(s, " {:>4}", format!("p={p}"));
    }
    s.push('\n');
    s
}

fn render_report(b: &ProblemBundle, r: &QuotientReport) -> String {
    let n = b.n;
    let t = &r.tables;
    let mut s = format!(
        "quotient {}: {}, n = {n}, field {}\n",
        format!("{:?}", b.kind).to_lowercase(),
        label(&b.poset),
        b.coeff
    );
    let _ = writeln!(s, "  H_*(Q, dQ)     {}", vec_str(&r.derived.relative));
    let _ = writeln!(s, "  rank delta     {}", vec_str(&r.derived.delta));
    let _ = writeln!(s, "  rank iota      {}", vec_str(&r.derived.iota));
    for (name, page) in [("E1 (boundary, truncated)", &t.e1trunc), ("Ea1", &t.ea1), ("Ea2", &t.ea2), ("Ea_inf", &t.eainf)] {
        let _ = writeln!(s, "  {name}\n{}", render_page(page, n));
    }
    let _ = writeln!(s, "  Ea1 diagonal     {}", vec_str(&t.ea1.diagonal(n)));
    let _ = writeln!(s, "  Ea2 diagonal     {}", vec_str(&t.ea2.diagonal(n)));
    let _ = writeln!(s, "  Ea_inf diagonal  {}", vec_str(&t.eainf.diagonal(n)));
    let _ = writeln!(s, "  H_ij(X)");
    for j in (0..=n).rev() {
        let _ = write!(s, "    j={j:>2} |");
        for i in 0..=n {
            let _ = write!(s, " {:>4}", t.bigraded.get(i, j));
        }
        s.push('\n');
    }
    let _ = writeln!(s, "  Betti numbers of X {}", vec_str(&t.totals));
    let _ = writeln!(s, "  chi(X) = {}, f_(n-1)(S) = {}", r.log.euler_x, r.log.top_faces);
    let _ = writeln!(s, "  checks");
    for (name, ok) in &r.checks {
        let _ = writeln!(s, "    {name:<30} {}", if *ok { "pass" } else { "FAIL" });
    }
    for (name, why) in &r.skipped {
        let _ = writeln!(s, "    {name:<30} skipped ({why})");
    }
    s
}
