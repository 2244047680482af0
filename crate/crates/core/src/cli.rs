//! Command-line front end. Exit codes: 0 success or pass, 1 a check came out false,
//! 2 usage, parse or computation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus::{
    builtin_fixtures, find_fixture, load_fixture_dir, parse_ideal_expr, run_fixture_with,
    ExampleFixture, FixtureReport, RunOptions,
};
use crate::cores::{
    balancedness_check, core_ci_power, core_conjecture, core_formula, core_montecarlo,
    gamma_upper_estimate, integral_closure_member, CoreResult, MonteCarloOptions,
};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, normal_form};
use crate::ideal::Ideal;
use crate::matrix::{g_s_check, minor_ideal, pfaffian_ideal, PolyMatrix};
use crate::reductions::{analytic_spread, is_reduction, sample_reduction_stream, SamplerConfig};
use crate::ring::{parse_poly, FieldSpec, PolyRing, Polynomial, TermOrder};

#[derive(Parser, Debug)]
#[command(
    name = "idealcore",
    version,
    about = "Cores, minimal reductions and analytic spreads of polynomial ideals"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Coefficient field: QQ or GF:p
    #[arg(long, global = true, default_value = "GF:32003")]
    pub field: FieldSpec,
    /// Seed for every randomized computation
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest reduction number tried before answering "unknown"
    #[arg(long, global = true, default_value_t = 30)]
    pub r_max: u32,
    /// Cap for integral closure membership
    #[arg(long, global = true, default_value_t = 10)]
    pub k_max: u32,
    /// Consecutive non-shrinking samples that end a Monte-Carlo core run
    #[arg(long, global = true, default_value_t = 5)]
    pub stabilization: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Directory of *.fixture files used instead of the built-in corpus
    #[arg(long, global = true, env = "IDEALCORE_FIXTURES")]
    pub fixtures: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

/// Variables and the main ideal.
#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    /// Comma separated variables; inferred from the inputs in order of appearance if omitted
    #[arg(long)]
    pub ring: Option<String>,
    /// Generators `f1, f2, ...` or an expression such as `(x, y)^3 * (z)`
    #[arg(long)]
    pub ideal: String,
}

#[derive(Args, Debug, Clone)]
pub struct TwoIdeals {
    #[command(flatten)]
    pub base: IdealArgs,
    /// The second ideal
    #[arg(long)]
    pub ideal2: String,
}

#[derive(Args, Debug, Clone)]
pub struct IdealPoly {
    #[command(flatten)]
    pub base: IdealArgs,
    /// A polynomial
    #[arg(long)]
    pub poly: String,
}

#[derive(Args, Debug, Clone)]
pub struct MatrixArgs {
    /// Comma separated variables; inferred if omitted
    #[arg(long)]
    pub ring: Option<String>,
    /// Rows separated by `;`, entries by `,`
    #[arg(long)]
    pub matrix: String,
    /// Minor or Pfaffian size
    #[arg(long)]
    pub size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoreMethodArg {
    Formula,
    Montecarlo,
    Conjecture,
    Oracle,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis (Buchberger with the Gebauer-Möller criteria)
    Gb {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Normal form of a polynomial modulo the reduced Gröbner basis of an ideal
    Nf(IdealPoly),
    /// Krull dimension of R/I
    Dim(IdealArgs),
    /// I + J
    Sum(TwoIdeals),
    /// I J
    Product(TwoIdeals),
    /// I^k
    Power {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long)]
        exponent: u32,
    },
    /// I ∩ J by elimination
    Intersect(TwoIdeals),
    /// I : J
    Colon(TwoIdeals),
    /// Whether I = J (exit 1 if not)
    Equal(TwoIdeals),
    /// Whether a polynomial lies in I (exit 1 if not)
    Member(IdealPoly),
    /// Height of I
    Height(IdealArgs),
    /// Ideal of t x t minors I_t(M)
    Minors(MatrixArgs),
    /// Ideal of principal Pfaffians of an alternating matrix
    Pfaffians(MatrixArgs),
    /// Condition G_s for I from a presentation matrix via heights of Fitting ideals (exit 1 if it fails)
    GsCheck {
        #[command(flatten)]
        args: IdealArgs,
        /// Presentation matrix with one row per generator of I
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        s: usize,
    },
    /// Least r with I^(r+1) = J I^r (exit 1 if not found up to --r-max)
    ReductionNumber {
        #[command(flatten)]
        args: IdealArgs,
        /// The reduction J
        #[arg(long)]
        reduction: String,
    },
    /// Analytic spread: dimension of the fiber cone, via the Rees ideal
    AnalyticSpread(IdealArgs),
    /// A general minimal reduction from random linear combinations of the generators
    SampleReduction {
        #[command(flatten)]
        args: IdealArgs,
        /// Number of generators; defaults to the analytic spread
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_retries: usize,
    },
    /// core(I): formula (J:I)I, Monte-Carlo intersection of reductions, the conjectured
    /// (J^r:I^r)I = (J^r:I^r)J = J^(r+1):I^r, or core(I^j) = I^(gj-g+1) for a regular sequence
    Core {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long, value_enum)]
        method: CoreMethodArg,
        /// A minimal reduction J (formula and conjecture)
        #[arg(long)]
        reduction: Option<String>,
        /// The power j (oracle); the ideal is then the regular sequence
        #[arg(long)]
        power: Option<u32>,
        #[arg(long, default_value_t = 1)]
        min_samples: usize,
        #[arg(long, default_value_t = 200)]
        max_samples: usize,
    },
    /// Whether J : I is the same for sampled minimal reductions J (exit 1 if not)
    Balanced {
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// Upper estimate of the least number of minimal reductions intersecting to the core
    GammaEstimate {
        #[command(flatten)]
        args: IdealArgs,
        /// The core; otherwise computed by the formula from --reduction
        #[arg(long)]
        core: Option<String>,
        #[arg(long)]
        reduction: Option<String>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 64)]
        max_per_trial: usize,
    },
    /// Integral closure membership: f is integral over I iff I is a reduction of I + (f)
    /// (exit 1 without a certificate up to --k-max)
    IclMember(IdealPoly),
    /// Run the checks of one fixture (exit 1 on failure)
    CheckExample { name: String },
    /// Run every fixture (exit 1 on failure)
    CheckAll,
    /// Names and descriptions of the fixtures
    ListFixtures {
        #[arg(default_value = "")]
        filter: String,
    },
}

enum Item {
    Value(String, String),
    Ideal(String, Vec<String>),
}

/// Collected output, rendered at the end in the chosen format.
struct Output {
    items: Vec<Item>,
}

impl Output {
    fn new() -> Self {
        Output { items: Vec::new() }
    }

    fn value(&mut self, key: &str, v: impl ToString) {
        self.items.push(Item::Value(key.to_string(), v.to_string()));
    }

    fn ideal(&mut self, key: &str, i: &Ideal) {
        let gens = i.canonical_generators().iter().map(|g| g.to_string()).collect();
        self.items.push(Item::Ideal(key.to_string(), gens));
    }

    fn polys(&mut self, key: &str, ps: &[Polynomial]) {
        let gens = ps.iter().map(|g| g.to_string()).collect();
        self.items.push(Item::Ideal(key.to_string(), gens));
    }

    fn render(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        for item in &self.items {
            match (item, format) {
                (Item::Value(k, v), _) => writeln!(out, "{k}: {v}")?,
                (Item::Ideal(k, gens), Format::Human) => {
                    if gens.is_empty() {
                        writeln!(out, "{k}: (0)")?
                    } else {
                        writeln!(out, "{k}: ({})", gens.join(", "))?
                    }
                }
                (Item::Ideal(k, gens), Format::Machine) => {
                    writeln!(out, "ideal {k} {}", gens.len())?;
                    for g in gens {
                        writeln!(out, "{g}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

struct Session {
    global: GlobalArgs,
}

impl Session {
    fn ring(&self, explicit: &Option<String>, inputs: &[&str]) -> Result<Arc<PolyRing>> {
        let vars = match explicit {
            Some(r) => r.split(',').map(|v| v.trim().to_string()).collect(),
            None => infer_vars(inputs),
        };
        if vars.is_empty() {
            return Err(Error::Usage("no variables; pass --ring".into()));
        }
        PolyRing::new(vars, self.global.field.clone(), TermOrder::GrevLex)
    }

    fn sampler(&self) -> SamplerConfig {
        SamplerConfig::with_seed(self.global.seed)
    }

    fn fixtures(&self) -> Result<Vec<ExampleFixture>> {
        match &self.global.fixtures {
            Some(dir) => load_fixture_dir(dir),
            None => Ok(builtin_fixtures()),
        }
    }

    fn run_options(&self) -> RunOptions {
        RunOptions {
            r_max: self.global.r_max,
            k_max: self.global.k_max,
            stabilization: self.global.stabilization,
        }
    }
}

/// Identifiers in order of first appearance.
fn infer_vars(inputs: &[&str]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for text in inputs {
        let bytes = text.as_bytes();
        let mut k = 0;
        while k < bytes.len() {
            let c = bytes[k];
            if c.is_ascii_alphabetic() || c == b'_' {
                let start = k;
                while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                    k += 1;
                }
                let name = &text[start..k];
                if !out.iter().any(|v| v == name) {
                    out.push(name.to_string());
                }
            } else if c.is_ascii_digit() {
                while k < bytes.len() && bytes[k].is_ascii_alphanumeric() {
                    k += 1;
                }
            } else {
                k += 1;
            }
        }
    }
    out
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let format = cli.global.format;
    let session = Session { global: cli.global };
    let mut output = Output::new();
    let result = dispatch(&session, &cli.command, &mut output, err);
    let _ = output.render(format, out);
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn ideal_in(s: &Session, a: &IdealArgs, extra: &[&str]) -> Result<(Arc<PolyRing>, Ideal)> {
    let mut inputs = vec![a.ideal.as_str()];
    inputs.extend_from_slice(extra);
    let ring = s.ring(&a.ring, &inputs)?;
    let i = parse_ideal_expr(&a.ideal, &ring)?;
    Ok((ring, i))
}

fn two(s: &Session, t: &TwoIdeals) -> Result<(Ideal, Ideal)> {
    let (ring, i) = ideal_in(s, &t.base, &[&t.ideal2])?;
    Ok((i, parse_ideal_expr(&t.ideal2, &ring)?))
}

fn report_core(out: &mut Output, res: &CoreResult) {
    out.value("method", res.method);
    out.ideal("core", &res.core);
    for (name, ideal) in &res.candidates {
        out.ideal(name, ideal);
    }
    for (k, v) in &res.agreement {
        out.value(&format!("agree {k}"), v);
    }
}

/// Returns whether the verb "passed"; only checks can return `false`.
fn dispatch(s: &Session, cmd: &Command, out: &mut Output, err: &mut dyn Write) -> Result<bool> {
    match cmd {
        Command::Gb { args, order } => {
            let (_, i) = ideal_in(s, args, &[])?;
            let order = match order {
                OrderArg::Grevlex => TermOrder::GrevLex,
                OrderArg::Lex => TermOrder::Lex,
            };
            if i.is_zero() {
                out.polys("gb", &[]);
            } else {
                let gb = groebner_basis(i.gens(), &order)?;
                out.polys("gb", gb.elements());
            }
        }
        Command::Nf(a) => {
            let (ring, i) = ideal_in(s, &a.base, &[&a.poly])?;
            let f = parse_poly(&a.poly, &ring)?;
            let basis = i.canonical_generators();
            out.value("nf", normal_form(&f, &basis, ring.order())?);
        }
        Command::Dim(a) => {
            let (_, i) = ideal_in(s, a, &[])?;
            out.value("dim", i.dimension());
        }
        Command::Sum(t) => {
            let (i, j) = two(s, t)?;
            out.ideal("sum", &i.sum(&j)?);
        }
        Command::Product(t) => {
            let (i, j) = two(s, t)?;
            out.ideal("product", &i.product(&j)?);
        }
        Command::Power { args, exponent } => {
            let (_, i) = ideal_in(s, args, &[])?;
            out.ideal("power", &i.power(*exponent));
        }
        Command::Intersect(t) => {
            let (i, j) = two(s, t)?;
            out.ideal("intersection", &i.intersect(&j)?);
        }
        Command::Colon(t) => {
            let (i, j) = two(s, t)?;
            out.ideal("colon", &i.colon(&j)?);
        }
        Command::Equal(t) => {
            let (i, j) = two(s, t)?;
            let v = i.equals(&j)?;
            out.value("equal", v);
            return Ok(v);
        }
        Command::Member(a) => {
            let (ring, i) = ideal_in(s, &a.base, &[&a.poly])?;
            let v = i.contains(&parse_poly(&a.poly, &ring)?)?;
            out.value("member", v);
            return Ok(v);
        }
        Command::Height(a) => {
            let (_, i) = ideal_in(s, a, &[])?;
            out.value("height", i.height()?);
        }
        Command::Minors(m) | Command::Pfaffians(m) => {
            let ring = s.ring(&m.ring, &[&m.matrix])?;
            let matrix = PolyMatrix::parse(&m.matrix, &ring)?;
            let i = if matches!(cmd, Command::Minors(_)) {
                minor_ideal(&matrix, m.size)?
            } else {
                pfaffian_ideal(&matrix, m.size)?
            };
            out.polys("generators", i.gens());
        }
        Command::GsCheck { args, matrix, s: level } => {
            let (ring, i) = ideal_in(s, args, &[matrix])?;
            let phi = PolyMatrix::parse(matrix, &ring)?;
            let rep = g_s_check(&i, &phi, *level)?;
            for row in &rep.rows {
                let h = row.height.map_or("inf".into(), |h| h.to_string());
                out.value(
                    &format!("i={} minors={}", row.i, row.minor_size),
                    format!("height {h} {}", if row.passes { "pass" } else { "fail" }),
                );
            }
            out.value("holds", rep.holds);
            return Ok(rep.holds);
        }
        Command::ReductionNumber { args, reduction } => {
            let (ring, i) = ideal_in(s, args, &[reduction])?;
            let j = parse_ideal_expr(reduction, &ring)?;
            let rep = is_reduction(&j, &i, s.global.r_max)?;
            match rep.r {
                Some(r) => out.value("reduction-number", r),
                None => {
                    out.value("reduction-number", format!("unknown (cap {})", s.global.r_max));
                    return Ok(false);
                }
            }
        }
        Command::AnalyticSpread(a) => {
            let (_, i) = ideal_in(s, a, &[])?;
            out.value("analytic-spread", analytic_spread(&i)?);
        }
        Command::SampleReduction {
            args,
            ell,
            max_retries,
        } => {
            let (_, i) = ideal_in(s, args, &[])?;
            out.value("seed", s.global.seed);
            let ell = match ell {
                Some(l) => *l,
                None => analytic_spread(&i)?,
            };
            let cfg = SamplerConfig {
                max_retries: *max_retries,
                ..s.sampler()
            };
            let sample = sample_reduction_stream(&i, ell, &cfg, s.global.r_max, 0)?;
            if let Some((_, stream)) = sample.source {
                out.value("stream", stream);
            }
            out.value("reduction-number", sample.report.r.expect("certified reduction"));
            out.polys("reduction", sample.ideal.gens());
        }
        Command::Core {
            args,
            method,
            reduction,
            power,
            min_samples,
            max_samples,
        } => {
            let extra: Vec<&str> = reduction.iter().map(String::as_str).collect();
            let (ring, i) = ideal_in(s, args, &extra)?;
            let need_j = || -> Result<Ideal> {
                let text = reduction
                    .as_ref()
                    .ok_or_else(|| Error::Usage("this method needs --reduction".into()))?;
                parse_ideal_expr(text, &ring)
            };
            let res = match method {
                CoreMethodArg::Formula => core_formula(&i, &need_j()?, s.global.r_max)?,
                CoreMethodArg::Conjecture => core_conjecture(&i, &need_j()?, s.global.r_max)?,
                CoreMethodArg::Oracle => {
                    let j = power.ok_or_else(|| {
                        Error::Usage("the oracle needs --power".into())
                    })?;
                    core_ci_power(i.gens(), j)?
                }
                CoreMethodArg::Montecarlo => {
                    out.value("seed", s.global.seed);
                    let opts = MonteCarloOptions {
                        stabilization: s.global.stabilization,
                        min_samples: *min_samples,
                        max_samples: *max_samples,
                        r_max: s.global.r_max,
                    };
                    let res = core_montecarlo(&i, &s.sampler(), &opts)?;
                    out.value("samples", res.samples);
                    out.value("stabilized", res.stabilized);
                    if let Some(g) = res.gamma_estimate {
                        out.value("gamma-upper-estimate", g);
                    }
                    res
                }
            };
            report_core(out, &res);
            if !res.all_agree() {
                let _ = writeln!(
                    err,
                    "warning: the computed expressions disagree; see the agree lines"
                );
                return Ok(false);
            }
        }
        Command::Balanced { args, samples } => {
            let (_, i) = ideal_in(s, args, &[])?;
            out.value("seed", s.global.seed);
            let rep = balancedness_check(&i, *samples, &s.sampler(), s.global.r_max)?;
            out.value("distinct-colons", rep.colons.len());
            for (k, c) in rep.colons.iter().enumerate() {
                out.ideal(&format!("colon-{k}"), c);
            }
            out.value("balanced", rep.balanced);
            return Ok(rep.balanced);
        }
        Command::GammaEstimate {
            args,
            core,
            reduction,
            trials,
            max_per_trial,
        } => {
            let extra: Vec<&str> = core.iter().chain(reduction).map(String::as_str).collect();
            let (ring, i) = ideal_in(s, args, &extra)?;
            let core = match (core, reduction) {
                (Some(c), _) => parse_ideal_expr(c, &ring)?,
                (None, Some(j)) => {
                    let res = core_formula(&i, &parse_ideal_expr(j, &ring)?, s.global.r_max)?;
                    if !res.all_agree() {
                        return Err(Error::DegenerateIdeal(
                            "core unknown: (J:I)I and (J:I)J differ".into(),
                        ));
                    }
                    res.core
                }
                (None, None) => {
                    return Err(Error::Usage(
                        "core unknown: pass --core or --reduction".into(),
                    ))
                }
            };
            out.value("seed", s.global.seed);
            let est = gamma_upper_estimate(
                &i,
                &core,
                *trials,
                &s.sampler(),
                *max_per_trial,
                s.global.r_max,
            )?;
            for (seed, count) in &est.trials {
                let c = count.map_or("not reached".into(), |c| c.to_string());
                out.value(&format!("trial seed {seed}"), c);
            }
            out.value("gamma-upper-estimate", est.estimate);
        }
        Command::IclMember(a) => {
            let (ring, i) = ideal_in(s, &a.base, &[&a.poly])?;
            let f = parse_poly(&a.poly, &ring)?;
            let v = integral_closure_member(&f, &i, s.global.k_max)?;
            match v {
                crate::cores::IntegralClosureVerdict::Member { r } => {
                    out.value("integral", "member");
                    out.value("reduction-number", r);
                }
                crate::cores::IntegralClosureVerdict::NonMemberUpToCap { k_max } => {
                    out.value("integral", format!("non-member up to cap {k_max}"));
                }
            }
            return Ok(v.is_member());
        }
        Command::CheckExample { name } => {
            let all = s.fixtures()?;
            let rep = run_fixture_with(find_fixture(&all, name)?, &s.run_options())?;
            report_fixture(out, &rep);
            return Ok(rep.passed());
        }
        Command::CheckAll => {
            let mut ok = true;
            for fx in s.fixtures()? {
                let rep = run_fixture_with(&fx, &s.run_options())?;
                report_fixture(out, &rep);
                ok &= rep.passed();
            }
            return Ok(ok);
        }
        Command::ListFixtures { filter } => {
            for fx in s.fixtures()? {
                if fx.name.contains(filter.as_str()) {
                    out.value(&fx.name, &fx.description);
                }
            }
        }
    }
    Ok(true)
}

fn report_fixture(out: &mut Output, rep: &FixtureReport) {
    out.value("fixture", &rep.name);
    out.value("seed", rep.seed);
    if let Some(n) = &rep.note {
        out.value("note", n);
    }
    for c in &rep.checks {
        let verdict = if c.passed { "pass" } else { "FAIL" };
        let mut line = format!("{verdict} expected {} got {}", c.expected, c.actual);
        if let Some(d) = &c.detail {
            line.push_str(&format!(" [{d}]"));
        }
        line.push_str(&format!(" -- {}", c.citation));
        out.value(&format!("  {}", c.label), line);
    }
    out.value(
        "result",
        if rep.passed() { "pass" } else { "FAIL" },
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("idealcore").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn inferred_variables() {
        assert_eq!(infer_vars(&["x^2 + 3*y", "z1*x"]), vec!["x", "y", "z1"]);
    }

    #[test]
    fn equal_false_exits_one() {
        let (code, out, _) = call(&["equal", "--ideal", "x", "--ideal2", "y"]);
        assert_eq!(code, 1);
        assert_eq!(out, "equal: false\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--field", "GF:4", "dim", "--ideal", "x"]).0, 2);
        let (code, _, err) = call(&["dim", "--ideal", "x +"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn core_formula_verb() {
        let (code, out, _) = call(&[
            "core", "--method", "formula", "--ring", "x,y", "--ideal", "x^2,x*y,y^2",
            "--reduction", "x^2,y^2",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("core: (x^3, x^2*y, x*y^2, y^3)"), "{out}");
    }

    #[test]
    fn machine_output_is_deterministic() {
        let argv = [
            "--format", "machine", "--seed", "3", "sample-reduction", "--ideal", "(x, y)^2",
        ];
        let (c1, o1, _) = call(&argv);
        let (c2, o2, _) = call(&argv);
        assert_eq!((c1, &o1), (c2, &o2));
        assert!(o1.starts_with("seed: 3\n"));
        assert!(o1.contains("ideal reduction 2\n"));
    }

    #[test]
    fn help_lists_verbs() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        for verb in ["gs-check", "icl-member", "check-all", "list-fixtures"] {
            assert!(out.contains(verb), "{verb}");
        }
    }
}
