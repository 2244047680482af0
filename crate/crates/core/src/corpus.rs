//! Worked examples with expected values, stored as line-oriented text fixtures.
//!
//! ```text
//! name: maximal-ideal-powers-j2
//! description: one line
//! note: free text (optional)
//! field: GF:32003
//! vars: x, y
//! matrix phi: a, b; c, d            (rows separated by `;`)
//! ideal: (x, y)^2                    (the ideal `I`)
//! ideal J: (x^2, y^2)                (further named ideals)
//! element f: x*y
//! seed: 0
//! min-samples: 10                    (optional sampling parameters)
//! samples: 3
//! trials: 20
//! expect <check> <args>: <value> | <citation>
//! ```
//!
//! Ideal expressions combine `(g1, ..., gk)` generator lists, names, `pf(M, k)`,
//! `minors(M, t)` and `sample(N)` (a sampled minimal reduction of `N`) with `^`, `*`
//! and `+`. Blank lines and lines starting with `#` are ignored.
//!
//! Checks: `height`, `analytic-spread`, `reduction-number N`, `core-formula N`,
//! `core-conjecture N`, `core-montecarlo`, `balanced`, `gamma-estimate`, `minors M t`,
//! `pfaffians M k`, `gs M s`, `member e N`, `integral e N`, `core-power j`,
//! `gamma-power-at-most j`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::cores::{
    balancedness_check, core_ci_power, core_conjecture, core_formula, core_montecarlo,
    gamma_upper_estimate, integral_closure_member, MonteCarloOptions, DEFAULT_K_MAX,
    DEFAULT_STABILIZATION,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix::{g_s_check, minor_ideal, pfaffian_ideal, PolyMatrix};
use crate::reductions::{
    analytic_spread, reduction_number, sample_minimal_reduction, SamplerConfig, DEFAULT_R_MAX,
};
use crate::ring::{parse_poly, parse_poly_list, FieldSpec, PolyRing, Polynomial, TermOrder};

const BUILTIN: &[&str] = &[
    include_str!("../fixtures/ci-powers-4-4.fixture"),
    include_str!("../fixtures/conjecture-5-2.fixture"),
    include_str!("../fixtures/gorenstein-height3.fixture"),
    include_str!("../fixtures/maximal-ideal-powers-j1.fixture"),
    include_str!("../fixtures/maximal-ideal-powers-j2.fixture"),
    include_str!("../fixtures/maximal-ideal-powers-j3.fixture"),
    include_str!("../fixtures/maximal-ideal-powers-j4.fixture"),
    include_str!("../fixtures/pfaffian-3-9.fixture"),
];

const CHECKS: &[(&str, usize)] = &[
    ("height", 0),
    ("analytic-spread", 0),
    ("reduction-number", 1),
    ("core-formula", 1),
    ("core-conjecture", 1),
    ("core-montecarlo", 0),
    ("balanced", 0),
    ("gamma-estimate", 0),
    ("minors", 2),
    ("pfaffians", 2),
    ("gs", 2),
    ("member", 2),
    ("integral", 2),
    ("core-power", 1),
    ("gamma-power-at-most", 1),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub check: String,
    pub args: Vec<String>,
    pub value: String,
    pub citation: String,
}

impl Expectation {
    pub fn label(&self) -> String {
        std::iter::once(self.check.as_str())
            .chain(self.args.iter().map(String::as_str))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleFixture {
    pub name: String,
    pub description: String,
    pub note: Option<String>,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub matrices: Vec<(String, String)>,
    /// Expression for `I`.
    pub ideal: String,
    pub ideals: Vec<(String, String)>,
    pub elements: Vec<(String, String)>,
    pub seed: u64,
    pub min_samples: Option<usize>,
    pub samples: Option<usize>,
    pub trials: Option<usize>,
    pub expectations: Vec<Expectation>,
}

impl ExampleFixture {
    /// Parse and type-check a fixture; `origin` labels error messages.
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Fixture {
            name: origin.to_string(),
            line,
            msg,
        };
        let mut name = None;
        let mut description = None;
        let mut note = None;
        let mut field = None;
        let mut vars = None;
        let mut ideal = None;
        let mut seed = None;
        let mut fx_min = None;
        let mut fx_samples = None;
        let mut fx_trials = None;
        let (mut matrices, mut ideals, mut elements, mut expectations) =
            (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| err(line_no, "expected `key: value`".into()))?;
            let value = value.trim().to_string();
            let words: Vec<&str> = key.split_whitespace().collect();
            let count = |v: &str| -> Result<usize> {
                v.parse()
                    .map_err(|_| err(line_no, format!("`{v}` is not a count")))
            };
            match words.as_slice() {
                ["name"] => name = Some(value),
                ["description"] => description = Some(value),
                ["note"] => note = Some(value),
                ["field"] => {
                    field = Some(
                        value
                            .parse::<FieldSpec>()
                            .map_err(|e| err(line_no, e.to_string()))?,
                    )
                }
                ["vars"] => vars = Some(value.split(',').map(|v| v.trim().to_string()).collect()),
                ["ideal"] => ideal = Some(value),
                ["ideal", n] => ideals.push((n.to_string(), value)),
                ["matrix", n] => matrices.push((n.to_string(), value)),
                ["element", n] => elements.push((n.to_string(), value)),
                ["seed"] => {
                    seed = Some(
                        value
                            .parse()
                            .map_err(|_| err(line_no, format!("bad seed `{value}`")))?,
                    )
                }
                ["min-samples"] => fx_min = Some(count(&value)?),
                ["samples"] => fx_samples = Some(count(&value)?),
                ["trials"] => fx_trials = Some(count(&value)?),
                ["expect", check, args @ ..] => {
                    let arity = CHECKS
                        .iter()
                        .find(|(c, _)| c == check)
                        .map(|(_, a)| *a)
                        .ok_or_else(|| err(line_no, format!("unknown check `{check}`")))?;
                    if args.len() != arity {
                        return Err(err(
                            line_no,
                            format!("`{check}` takes {arity} arguments"),
                        ));
                    }
                    let (v, citation) = value
                        .split_once('|')
                        .ok_or_else(|| err(line_no, "expected value needs `| citation`".into()))?;
                    let citation = citation.trim();
                    if citation.is_empty() {
                        return Err(err(line_no, "empty citation".into()));
                    }
                    expectations.push(Expectation {
                        check: check.to_string(),
                        args: args.iter().map(|a| a.to_string()).collect(),
                        value: v.trim().to_string(),
                        citation: citation.to_string(),
                    });
                }
                _ => return Err(err(line_no, format!("unknown key `{}`", key.trim()))),
            }
        }
        let missing = |what: &str| err(0, format!("missing `{what}`"));
        let fx = ExampleFixture {
            name: name.ok_or_else(|| missing("name"))?,
            description: description.ok_or_else(|| missing("description"))?,
            note,
            field: field.ok_or_else(|| missing("field"))?,
            vars: vars.ok_or_else(|| missing("vars"))?,
            matrices,
            ideal: ideal.ok_or_else(|| missing("ideal"))?,
            ideals,
            elements,
            seed: seed.unwrap_or(0),
            min_samples: fx_min,
            samples: fx_samples,
            trials: fx_trials,
            expectations,
        };
        fx.validate().map_err(|e| match e {
            Error::Fixture { .. } => e,
            other => err(0, other.to_string()),
        })?;
        Ok(fx)
    }

    pub fn ring(&self) -> Result<Arc<PolyRing>> {
        PolyRing::new(self.vars.clone(), self.field.clone(), TermOrder::GrevLex)
    }

    /// Parse every polynomial, matrix and expression, and check that names resolve.
    pub fn validate(&self) -> Result<()> {
        Context::new(self, &RunOptions::default()).map(|_| ())
    }

    /// Evaluate `I` and every named ideal, in declaration order.
    pub fn evaluate_ideals(&self, opts: &RunOptions) -> Result<Vec<(String, Ideal)>> {
        let mut ctx = Context::new(self, opts)?;
        let mut names = vec!["I".to_string()];
        names.extend(self.ideals.iter().map(|(n, _)| n.clone()));
        names
            .into_iter()
            .map(|n| ctx.ideal(&n).map(|i| (n, i)))
            .collect()
    }
}

impl fmt::Display for ExampleFixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "description: {}", self.description)?;
        if let Some(n) = &self.note {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "vars: {}", self.vars.join(", "))?;
        for (n, m) in &self.matrices {
            writeln!(f, "matrix {n}: {m}")?;
        }
        writeln!(f, "ideal: {}", self.ideal)?;
        for (n, e) in &self.ideals {
            writeln!(f, "ideal {n}: {e}")?;
        }
        for (n, e) in &self.elements {
            writeln!(f, "element {n}: {e}")?;
        }
        writeln!(f, "seed: {}", self.seed)?;
        if let Some(v) = self.min_samples {
            writeln!(f, "min-samples: {v}")?;
        }
        if let Some(v) = self.samples {
            writeln!(f, "samples: {v}")?;
        }
        if let Some(v) = self.trials {
            writeln!(f, "trials: {v}")?;
        }
        for e in &self.expectations {
            writeln!(f, "expect {}: {} | {}", e.label(), e.value, e.citation)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Gens(Vec<Polynomial>),
    Name(String),
    Pf(String, usize),
    Minors(String, usize),
    Sample(String),
    Pow(Box<Expr>, u32),
    Mul(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl ExprParser<'_> {
    fn parse(src: &str, ring: &Arc<PolyRing>) -> Result<Expr> {
        let mut p = ExprParser { src, pos: 0, ring };
        let e = p.sum()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(Error::parse(p.pos, format!("trailing input in `{src}`")));
        }
        Ok(e)
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        while self.eat('+') {
            acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.integer()?;
            return Ok(Expr::Pow(Box::new(base), k as u32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        let v = self.rest()[..len]
            .parse()
            .map_err(|_| Error::parse(self.pos, "expected an integer"))?;
        self.pos += len;
        Ok(v)
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(Error::parse(self.pos, "expected a name"));
        }
        let s = self.rest()[..len].to_string();
        self.pos += len;
        Ok(s)
    }

    fn atom(&mut self) -> Result<Expr> {
        if self.eat('(') {
            let start = self.pos;
            let mut depth = 1;
            for (k, c) in self.rest().char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            let inner = &self.src[start..start + k];
                            self.pos = start + k + 1;
                            return Ok(Expr::Gens(parse_poly_list(inner, self.ring)?));
                        }
                    }
                    _ => {}
                }
            }
            return Err(Error::parse(start, "unbalanced `(`"));
        }
        let name = self.ident()?;
        if !self.eat('(') {
            return Ok(Expr::Name(name));
        }
        let arg = self.ident()?;
        let out = match name.as_str() {
            "sample" => Expr::Sample(arg),
            "pf" | "minors" => {
                if !self.eat(',') {
                    return Err(Error::parse(self.pos, "expected `,`"));
                }
                let k = self.integer()?;
                if name == "pf" {
                    Expr::Pf(arg, k)
                } else {
                    Expr::Minors(arg, k)
                }
            }
            _ => return Err(Error::parse(self.pos, format!("unknown function `{name}`"))),
        };
        if !self.eat(')') {
            return Err(Error::parse(self.pos, "expected `)`"));
        }
        Ok(out)
    }
}

/// Parse an ideal from a generator list (`x^2, x*y`) or an expression over generator lists
/// such as `(x, y)^3 * (z) + (w)`.
pub fn parse_ideal_expr(text: &str, ring: &Arc<PolyRing>) -> Result<Ideal> {
    if let Ok(gens) = parse_poly_list(text, ring) {
        return Ideal::new(ring, gens);
    }
    fn eval(e: &Expr, ring: &Arc<PolyRing>) -> Result<Ideal> {
        Ok(match e {
            Expr::Gens(g) => Ideal::new(ring, g.clone())?,
            Expr::Pow(a, k) => eval(a, ring)?.power(*k),
            Expr::Mul(a, b) => eval(a, ring)?.product(&eval(b, ring)?)?,
            Expr::Add(a, b) => eval(a, ring)?.sum(&eval(b, ring)?)?.minimized(),
            Expr::Name(n) | Expr::Sample(n) | Expr::Pf(n, _) | Expr::Minors(n, _) => {
                return Err(Error::UnknownVariable(n.clone()))
            }
        })
    }
    eval(&ExprParser::parse(text, ring)?, ring)
}

/// Limits used while running fixtures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub r_max: u32,
    pub k_max: u32,
    pub stabilization: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            r_max: DEFAULT_R_MAX,
            k_max: DEFAULT_K_MAX,
            stabilization: DEFAULT_STABILIZATION,
        }
    }
}

struct Context<'a> {
    fx: &'a ExampleFixture,
    opts: RunOptions,
    ring: Arc<PolyRing>,
    matrices: HashMap<String, PolyMatrix>,
    elements: HashMap<String, Polynomial>,
    exprs: HashMap<String, Expr>,
    cache: HashMap<String, Ideal>,
    visiting: HashSet<String>,
    montecarlo: Option<Ideal>,
}

impl<'a> Context<'a> {
    fn new(fx: &'a ExampleFixture, opts: &RunOptions) -> Result<Self> {
        let ring = fx.ring()?;
        let matrices = fx
            .matrices
            .iter()
            .map(|(n, m)| Ok((n.clone(), PolyMatrix::parse(m, &ring)?)))
            .collect::<Result<_>>()?;
        let elements = fx
            .elements
            .iter()
            .map(|(n, e)| Ok((n.clone(), parse_poly(e, &ring)?)))
            .collect::<Result<_>>()?;
        let mut exprs = HashMap::new();
        exprs.insert("I".to_string(), ExprParser::parse(&fx.ideal, &ring)?);
        for (n, e) in &fx.ideals {
            if exprs.insert(n.clone(), ExprParser::parse(e, &ring)?).is_some() {
                return Err(Error::Fixture {
                    name: fx.name.clone(),
                    line: 0,
                    msg: format!("ideal `{n}` defined twice"),
                });
            }
        }
        let ctx = Context {
            fx,
            opts: opts.clone(),
            ring,
            matrices,
            elements,
            exprs,
            cache: HashMap::new(),
            visiting: HashSet::new(),
            montecarlo: None,
        };
        for e in ctx.exprs.values() {
            ctx.check_names(e)?;
        }
        for x in &fx.expectations {
            ctx.check_expectation(x)?;
        }
        Ok(ctx)
    }

    fn unknown(&self, kind: &str, n: &str) -> Error {
        Error::Fixture {
            name: self.fx.name.clone(),
            line: 0,
            msg: format!("unknown {kind} `{n}`"),
        }
    }

    fn check_names(&self, e: &Expr) -> Result<()> {
        match e {
            Expr::Gens(_) => Ok(()),
            Expr::Name(n) | Expr::Sample(n) => self
                .exprs
                .contains_key(n)
                .then_some(())
                .ok_or_else(|| self.unknown("ideal", n)),
            Expr::Pf(m, _) | Expr::Minors(m, _) => self
                .matrices
                .contains_key(m)
                .then_some(())
                .ok_or_else(|| self.unknown("matrix", m)),
            Expr::Pow(a, _) => self.check_names(a),
            Expr::Mul(a, b) | Expr::Add(a, b) => {
                self.check_names(a)?;
                self.check_names(b)
            }
        }
    }

    fn check_expectation(&self, x: &Expectation) -> Result<()> {
        let args = &x.args;
        let ideal_arg = |n: &String| {
            self.exprs
                .contains_key(n)
                .then_some(())
                .ok_or_else(|| self.unknown("ideal", n))
        };
        let matrix_arg = |n: &String| {
            self.matrices
                .contains_key(n)
                .then_some(())
                .ok_or_else(|| self.unknown("matrix", n))
        };
        let element_arg = |n: &String| {
            self.elements
                .contains_key(n)
                .then_some(())
                .ok_or_else(|| self.unknown("element", n))
        };
        let number_arg = |n: &String| {
            n.parse::<u32>()
                .map(|_| ())
                .map_err(|_| self.unknown("count", n))
        };
        match x.check.as_str() {
            "reduction-number" | "core-formula" | "core-conjecture" => ideal_arg(&args[0])?,
            "minors" | "pfaffians" | "gs" => {
                matrix_arg(&args[0])?;
                number_arg(&args[1])?;
            }
            "member" | "integral" => {
                element_arg(&args[0])?;
                ideal_arg(&args[1])?;
            }
            "core-power" | "gamma-power-at-most" => number_arg(&args[0])?,
            _ => {}
        }
        match value_kind(&x.check) {
            ValueKind::Ideal => self.check_names(&ExprParser::parse(&x.value, &self.ring)?),
            ValueKind::Count => x
                .value
                .parse::<usize>()
                .map(|_| ())
                .map_err(|_| self.unknown("count", &x.value)),
            ValueKind::Flag => x
                .value
                .parse::<bool>()
                .map(|_| ())
                .map_err(|_| self.unknown("boolean", &x.value)),
        }
    }

    fn sampler(&self) -> SamplerConfig {
        SamplerConfig::with_seed(self.fx.seed)
    }

    fn ideal(&mut self, name: &str) -> Result<Ideal> {
        if let Some(i) = self.cache.get(name) {
            return Ok(i.clone());
        }
        if !self.visiting.insert(name.to_string()) {
            return Err(Error::Fixture {
                name: self.fx.name.clone(),
                line: 0,
                msg: format!("ideal `{name}` is defined in terms of itself"),
            });
        }
        let expr = self.exprs[name].clone();
        let value = self.eval(&expr)?;
        self.visiting.remove(name);
        self.cache.insert(name.to_string(), value.clone());
        Ok(value)
    }

    fn eval(&mut self, e: &Expr) -> Result<Ideal> {
        Ok(match e {
            Expr::Gens(g) => Ideal::new(&self.ring, g.clone())?,
            Expr::Name(n) => self.ideal(n)?,
            Expr::Pf(m, k) => pfaffian_ideal(&self.matrices[m], *k)?,
            Expr::Minors(m, t) => minor_ideal(&self.matrices[m], *t)?,
            Expr::Sample(n) => {
                let target = self.ideal(n)?;
                let ell = analytic_spread(&target)?;
                sample_minimal_reduction(&target, ell, &self.sampler(), self.opts.r_max)?.0
            }
            Expr::Pow(a, k) => self.eval(a)?.power(*k),
            Expr::Mul(a, b) => self.eval(a)?.product(&self.eval(b)?)?,
            Expr::Add(a, b) => self.eval(a)?.sum(&self.eval(b)?)?.minimized(),
        })
    }

    fn value_ideal(&mut self, text: &str) -> Result<Ideal> {
        let e = ExprParser::parse(text, &self.ring)?;
        self.eval(&e)
    }

    fn montecarlo_core(&mut self) -> Result<Ideal> {
        if let Some(c) = &self.montecarlo {
            return Ok(c.clone());
        }
        let i = self.ideal("I")?;
        let opts = MonteCarloOptions {
            stabilization: self.opts.stabilization,
            min_samples: self.fx.min_samples.unwrap_or(1),
            r_max: self.opts.r_max,
            ..MonteCarloOptions::default()
        };
        let res = core_montecarlo(&i, &self.sampler(), &opts)?;
        self.montecarlo = Some(res.core.clone());
        Ok(res.core)
    }

    /// Returns (actual, passed, detail).
    fn run(&mut self, x: &Expectation) -> Result<(String, bool, Option<String>)> {
        let a = &x.args;
        let count = || x.value.parse::<usize>().expect("validated count");
        let flag = || x.value.parse::<bool>().expect("validated flag");
        let num = |k: usize| a[k].parse::<u32>().expect("validated number");
        match x.check.as_str() {
            "height" => {
                let h = self.ideal("I")?.height()?;
                Ok((h.to_string(), h == count(), None))
            }
            "analytic-spread" => {
                let l = analytic_spread(&self.ideal("I")?)?;
                Ok((l.to_string(), l == count(), None))
            }
            "reduction-number" => {
                let r = reduction_number(&self.ideal(&a[0])?, &self.ideal("I")?, self.opts.r_max)?;
                Ok((r.to_string(), r as usize == count(), None))
            }
            "core-formula" | "core-conjecture" => {
                let (i, j) = (self.ideal("I")?, self.ideal(&a[0])?);
                let res = if x.check == "core-formula" {
                    core_formula(&i, &j, self.opts.r_max)?
                } else {
                    core_conjecture(&i, &j, self.opts.r_max)?
                };
                let expected = self.value_ideal(&x.value)?;
                let ok = res.core.equals(&expected)? && res.all_agree();
                let detail = res
                    .agreement
                    .iter()
                    .map(|(k, v)| format!("{k}: {v}"))
                    .collect::<Vec<_>>()
                    .join("; ");
                Ok((res.core.to_string(), ok, Some(detail)))
            }
            "core-montecarlo" => {
                let core = self.montecarlo_core()?;
                let expected = self.value_ideal(&x.value)?;
                Ok((core.to_string(), core.equals(&expected)?, None))
            }
            "balanced" => {
                let i = self.ideal("I")?;
                let rep =
                    balancedness_check(&i, self.fx.samples.unwrap_or(3), &self.sampler(), self.opts.r_max)?;
                let detail = format!("{} distinct colon ideals", rep.colons.len());
                Ok((rep.balanced.to_string(), rep.balanced == flag(), Some(detail)))
            }
            "gamma-estimate" => {
                let i = self.ideal("I")?;
                let core = self.montecarlo_core()?;
                let est = gamma_upper_estimate(
                    &i,
                    &core,
                    self.fx.trials.unwrap_or(5),
                    &self.sampler(),
                    4 * count().max(1),
                    self.opts.r_max,
                )?;
                Ok((est.estimate.to_string(), est.estimate == count(), None))
            }
            "minors" | "pfaffians" => {
                let m = &self.matrices[&a[0]];
                let got = if x.check == "minors" {
                    minor_ideal(m, num(1) as usize)?
                } else {
                    pfaffian_ideal(m, num(1) as usize)?
                };
                let expected = self.value_ideal(&x.value)?;
                Ok((got.to_string(), got.equals(&expected)?, None))
            }
            "gs" => {
                let i = self.ideal("I")?;
                let rep = g_s_check(&i, &self.matrices[&a[0]], num(1) as usize)?;
                let detail = rep
                    .rows
                    .iter()
                    .map(|r| {
                        let h = r.height.map_or("inf".to_string(), |h| h.to_string());
                        format!("i={} height={h}", r.i)
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                Ok((rep.holds.to_string(), rep.holds == flag(), Some(detail)))
            }
            "member" => {
                let f = self.elements[&a[0]].clone();
                let v = self.ideal(&a[1])?.contains(&f)?;
                Ok((v.to_string(), v == flag(), None))
            }
            "integral" => {
                let f = self.elements[&a[0]].clone();
                let v = integral_closure_member(&f, &self.ideal(&a[1])?, self.opts.k_max)?;
                let detail = format!("{v:?}");
                Ok((v.is_member().to_string(), v.is_member() == flag(), Some(detail)))
            }
            "core-power" => {
                let i = self.ideal("I")?;
                let j = num(0);
                let oracle = core_ci_power(i.gens(), j)?.core;
                let opts = MonteCarloOptions {
                    stabilization: self.opts.stabilization,
                    r_max: self.opts.r_max,
                    ..MonteCarloOptions::default()
                };
                let mc = core_montecarlo(&i.power(j), &self.sampler(), &opts)?;
                let expected = self.value_ideal(&x.value)?;
                let ok = mc.core.equals(&oracle)? && oracle.equals(&expected)?;
                let detail = format!("{} samples", mc.samples);
                Ok((mc.core.to_string(), ok, Some(detail)))
            }
            "gamma-power-at-most" => {
                let i = self.ideal("I")?;
                let j = num(0);
                let oracle = core_ci_power(i.gens(), j)?.core;
                let bound = count();
                let est = gamma_upper_estimate(
                    &i.power(j),
                    &oracle,
                    self.fx.trials.unwrap_or(1),
                    &self.sampler(),
                    2 * bound.max(1),
                    self.opts.r_max,
                )?;
                Ok((est.estimate.to_string(), est.estimate <= bound, None))
            }
            other => unreachable!("unvalidated check {other}"),
        }
    }
}

enum ValueKind {
    Ideal,
    Count,
    Flag,
}

fn value_kind(check: &str) -> ValueKind {
    match check {
        "core-formula" | "core-conjecture" | "core-montecarlo" | "minors" | "pfaffians"
        | "core-power" => ValueKind::Ideal,
        "balanced" | "gs" | "member" | "integral" => ValueKind::Flag,
        _ => ValueKind::Count,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    pub citation: String,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: String,
    pub note: Option<String>,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Run every expectation of a fixture. Computation errors become failed checks.
pub fn run_fixture_with(fx: &ExampleFixture, opts: &RunOptions) -> Result<FixtureReport> {
    let mut ctx = Context::new(fx, opts)?;
    let checks = fx
        .expectations
        .iter()
        .map(|x| {
            let (actual, passed, detail) = match ctx.run(x) {
                Ok(v) => v,
                Err(e) => (format!("error: {e}"), false, None),
            };
            CheckOutcome {
                label: x.label(),
                expected: x.value.clone(),
                actual,
                passed,
                citation: x.citation.clone(),
                detail,
            }
        })
        .collect();
    Ok(FixtureReport {
        name: fx.name.clone(),
        note: fx.note.clone(),
        seed: fx.seed,
        checks,
    })
}

/// The fixtures shipped with the crate, sorted by name.
pub fn builtin_fixtures() -> Vec<ExampleFixture> {
    let mut out: Vec<ExampleFixture> = BUILTIN
        .iter()
        .enumerate()
        .map(|(k, text)| {
            ExampleFixture::parse(text, &format!("builtin #{k}")).expect("builtin fixtures are valid")
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// All `*.fixture` files in `dir`, sorted by name.
pub fn load_fixture_dir(dir: &Path) -> Result<Vec<ExampleFixture>> {
    let read_err = |e: std::io::Error| Error::Fixture {
        name: dir.display().to_string(),
        line: 0,
        msg: e.to_string(),
    };
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(read_err)? {
        let path = entry.map_err(read_err)?.path();
        if path.extension().is_some_and(|e| e == "fixture") {
            let text = std::fs::read_to_string(&path).map_err(read_err)?;
            out.push(ExampleFixture::parse(&text, &path.display().to_string())?);
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

pub fn find_fixture<'a>(fixtures: &'a [ExampleFixture], name: &str) -> Result<&'a ExampleFixture> {
    fixtures
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// Names and descriptions of built-in fixtures containing `filter`, in name order.
pub fn list_fixtures(filter: &str) -> Vec<(String, String)> {
    builtin_fixtures()
        .into_iter()
        .filter(|f| f.name.contains(filter))
        .map(|f| (f.name, f.description))
        .collect()
}

/// Run a built-in fixture with default limits.
pub fn run_fixture(name: &str) -> Result<FixtureReport> {
    let all = builtin_fixtures();
    run_fixture_with(find_fixture(&all, name)?, &RunOptions::default())
}
