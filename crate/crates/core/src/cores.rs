//! The core of an ideal: closed formulas, Monte-Carlo intersection of sampled reductions,
//! balancedness, estimates of the number of reductions needed, and integral closure
//! membership.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::reductions::{
    analytic_spread, is_reduction, reduction_number, sample_reduction_stream, SampledReduction,
    SamplerConfig,
};
use crate::ring::Polynomial;

pub const DEFAULT_STABILIZATION: usize = 5;
pub const DEFAULT_K_MAX: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoreMethod {
    Formula,
    MonteCarlo,
    Conjecture,
    CompleteIntersectionOracle,
}

impl fmt::Display for CoreMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoreMethod::Formula => "formula",
            CoreMethod::MonteCarlo => "montecarlo",
            CoreMethod::Conjecture => "conjecture",
            CoreMethod::CompleteIntersectionOracle => "oracle",
        })
    }
}

/// A reduction that went into a core computation.
#[derive(Clone, Debug)]
pub struct Witness {
    pub reduction: Ideal,
    pub r: Option<u32>,
    /// `(seed, stream)` for sampled reductions.
    pub source: Option<(u64, u64)>,
}

impl From<SampledReduction> for Witness {
    fn from(s: SampledReduction) -> Self {
        Witness {
            reduction: s.ideal,
            r: s.report.r,
            source: s.source,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoreResult {
    pub core: Ideal,
    pub method: CoreMethod,
    pub witnesses: Vec<Witness>,
    /// Named ideals computed along the way, e.g. the sides of a formula.
    pub candidates: Vec<(String, Ideal)>,
    /// Equality verdicts between candidates, keyed `"a = b"`.
    pub agreement: BTreeMap<String, bool>,
    /// Monte-Carlo only: samples drawn, and the sample count at the last shrink.
    pub samples: usize,
    pub gamma_estimate: Option<usize>,
    /// Monte-Carlo only: the stabilization rule was met before `max_samples`.
    pub stabilized: bool,
}

impl CoreResult {
    fn new(core: Ideal, method: CoreMethod) -> Self {
        CoreResult {
            core,
            method,
            witnesses: Vec::new(),
            candidates: Vec::new(),
            agreement: BTreeMap::new(),
            samples: 0,
            gamma_estimate: None,
            stabilized: false,
        }
    }

    /// Every recorded equality holds.
    pub fn all_agree(&self) -> bool {
        self.agreement.values().all(|&v| v)
    }

    fn compare_candidates(&mut self) -> Result<()> {
        for a in 0..self.candidates.len() {
            for b in a + 1..self.candidates.len() {
                let (na, ia) = &self.candidates[a];
                let (nb, ib) = &self.candidates[b];
                let v = ia.equals(ib)?;
                self.agreement.insert(format!("{na} = {nb}"), v);
            }
        }
        Ok(())
    }
}

/// `core(I) = (J:I) I` for a minimal reduction `J`, together with `(J:I) J`.
///
/// The two products coincide whenever the formula applies; a disagreement is recorded in
/// [`CoreResult::agreement`] rather than hidden.
pub fn core_formula(i: &Ideal, j: &Ideal, r_max: u32) -> Result<CoreResult> {
    let r = reduction_number(j, i, r_max)?;
    let colon = j.colon(i)?;
    let by_i = colon.product(i)?;
    let by_j = colon.product(j)?;
    let mut out = CoreResult::new(by_i.clone(), CoreMethod::Formula);
    out.witnesses.push(Witness {
        reduction: j.clone(),
        r: Some(r),
        source: None,
    });
    out.candidates = vec![
        ("(J:I)I".into(), by_i),
        ("(J:I)J".into(), by_j),
        ("J:I".into(), colon),
    ];
    let v = out.candidates[0].1.equals(&out.candidates[1].1)?;
    out.agreement.insert("(J:I)I = (J:I)J".into(), v);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonteCarloOptions {
    /// Stop after this many consecutive samples that do not shrink the intersection.
    pub stabilization: usize,
    pub min_samples: usize,
    pub max_samples: usize,
    pub r_max: u32,
}

impl Default for MonteCarloOptions {
    fn default() -> Self {
        MonteCarloOptions {
            stabilization: DEFAULT_STABILIZATION,
            min_samples: 1,
            max_samples: 200,
            r_max: crate::reductions::DEFAULT_R_MAX,
        }
    }
}

/// Intersect sampled minimal reductions until the running intersection stops shrinking.
///
/// The result always contains `core(I)`. `gamma_estimate` is the number of samples after
/// which the intersection last shrank.
pub fn core_montecarlo(
    i: &Ideal,
    cfg: &SamplerConfig,
    opts: &MonteCarloOptions,
) -> Result<CoreResult> {
    if opts.stabilization == 0 || opts.max_samples == 0 {
        return Err(Error::OutOfRange(
            "stabilization and max_samples must be positive".into(),
        ));
    }
    let ell = analytic_spread(i)?;
    let mut acc: Option<Ideal> = None;
    let mut out = CoreResult::new(i.clone(), CoreMethod::MonteCarlo);
    let mut streak = 0;
    let mut last_shrink = 0;
    for n in 1..=opts.max_samples {
        let s = sample_reduction_stream(i, ell, cfg, opts.r_max, n as u64 - 1)?;
        let basic = s.source.is_none();
        let j = s.ideal.clone();
        out.witnesses.push(s.into());
        out.samples = n;
        acc = Some(match acc {
            None => {
                last_shrink = n;
                j
            }
            Some(k) if j.contains_ideal(&k)? => {
                streak += 1;
                k
            }
            Some(k) => {
                streak = 0;
                last_shrink = n;
                k.intersect(&j)?
            }
        });
        if basic {
            // `I` is its own unique minimal reduction.
            out.stabilized = true;
            break;
        }
        if streak >= opts.stabilization && n >= opts.min_samples {
            out.stabilized = true;
            break;
        }
    }
    out.core = acc.expect("at least one sample");
    out.gamma_estimate = Some(last_shrink);
    Ok(out)
}

/// The three expressions `(J^r : I^r) I`, `(J^r : I^r) J` and `J^{r+1} : I^r` with
/// `r = r_J(I)`, and their pairwise equality verdicts.
pub fn core_conjecture(i: &Ideal, j: &Ideal, r_max: u32) -> Result<CoreResult> {
    let r = reduction_number(j, i, r_max)?;
    let i_r = i.power(r);
    let j_r = j.power(r);
    let colon = j_r.colon(&i_r)?;
    let by_i = colon.product(i)?;
    let by_j = colon.product(j)?;
    let residual = j_r.product(j)?.colon(&i_r)?;
    let mut out = CoreResult::new(by_i.clone(), CoreMethod::Conjecture);
    out.witnesses.push(Witness {
        reduction: j.clone(),
        r: Some(r),
        source: None,
    });
    out.candidates = vec![
        ("(J^r:I^r)I".into(), by_i),
        ("(J^r:I^r)J".into(), by_j),
        ("J^(r+1):I^r".into(), residual),
    ];
    out.compare_candidates()?;
    Ok(out)
}

/// Check that `gens` is a homogeneous regular sequence: each generator is a non-zerodivisor
/// modulo the ideal of the previous ones, i.e. `(f_1..f_k) : f_{k+1} = (f_1..f_k)`.
pub fn verify_regular_sequence(gens: &[Polynomial]) -> Result<()> {
    let Some(first) = gens.first() else {
        return Err(Error::NotRegularSequence("empty sequence".into()));
    };
    let ring = first.ring();
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Inhomogeneous);
    }
    if gens.iter().any(|g| g.is_zero() || g.is_constant()) {
        return Err(Error::NotRegularSequence(
            "generators must be nonzero forms of positive degree".into(),
        ));
    }
    for k in 1..gens.len() {
        let prev = Ideal::new(ring, gens[..k].to_vec())?;
        let q = prev.colon_element(&gens[k])?;
        if !prev.contains_ideal(&q)? {
            return Err(Error::NotRegularSequence(format!(
                "generator {} is a zero divisor modulo the previous ones",
                k + 1
            )));
        }
    }
    Ok(())
}

/// `core(I^j) = I^{gj-g+1}` for `I` generated by a homogeneous regular sequence of length `g`.
pub fn core_ci_power(gens: &[Polynomial], j: u32) -> Result<CoreResult> {
    if j == 0 {
        return Err(Error::OutOfRange("power must be at least 1".into()));
    }
    verify_regular_sequence(gens)?;
    let g = gens.len() as u32;
    let i = Ideal::new(gens[0].ring(), gens.to_vec())?;
    let core = i.power(g * j - g + 1);
    let mut out = CoreResult::new(core, CoreMethod::CompleteIntersectionOracle);
    out.candidates.push(("I".into(), i));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct BalanceReport {
    pub balanced: bool,
    /// The distinct colon ideals `J_k : I` found, in order of discovery.
    pub colons: Vec<Ideal>,
    pub reductions: Vec<Witness>,
}

/// Sample minimal reductions and test whether `J : I` is the same for all of them.
pub fn balancedness_check(
    i: &Ideal,
    samples: usize,
    cfg: &SamplerConfig,
    r_max: u32,
) -> Result<BalanceReport> {
    if samples == 0 {
        return Err(Error::OutOfRange("need at least one sample".into()));
    }
    let ell = analytic_spread(i)?;
    let mut colons: Vec<Ideal> = Vec::new();
    let mut reductions = Vec::new();
    for n in 0..samples {
        let s = sample_reduction_stream(i, ell, cfg, r_max, n as u64)?;
        let basic = s.source.is_none();
        let c = s.ideal.colon(i)?;
        let mut seen = false;
        for prev in &colons {
            if prev.equals(&c)? {
                seen = true;
                break;
            }
        }
        if !seen {
            colons.push(c);
        }
        reductions.push(s.into());
        if basic {
            break;
        }
    }
    Ok(BalanceReport {
        balanced: colons.len() == 1,
        colons,
        reductions,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaEstimate {
    /// Smallest count over all trials that reached the core.
    pub estimate: usize,
    /// Per trial: the seed used and the number of samples needed, if reached.
    pub trials: Vec<(u64, Option<usize>)>,
}

/// Upper estimate for the least number of minimal reductions whose intersection is the core.
///
/// Trial `t` samples with seed `cfg.seed + t` and intersects reductions until the
/// intersection equals `core`, giving up after `max_per_trial` samples.
pub fn gamma_upper_estimate(
    i: &Ideal,
    core: &Ideal,
    trials: usize,
    cfg: &SamplerConfig,
    max_per_trial: usize,
    r_max: u32,
) -> Result<GammaEstimate> {
    if trials == 0 {
        return Err(Error::OutOfRange("need at least one trial".into()));
    }
    let ell = analytic_spread(i)?;
    let mut out = Vec::with_capacity(trials);
    for t in 0..trials {
        let trial_cfg = SamplerConfig {
            seed: cfg.seed.wrapping_add(t as u64),
            ..cfg.clone()
        };
        let mut acc: Option<Ideal> = None;
        let mut reached = None;
        for n in 1..=max_per_trial {
            let s = sample_reduction_stream(i, ell, &trial_cfg, r_max, n as u64 - 1)?;
            if !s.ideal.contains_ideal(core)? {
                return Err(Error::DegenerateIdeal(
                    "the given core is not contained in a sampled reduction".into(),
                ));
            }
            let k = match acc {
                None => s.ideal,
                Some(k) if s.ideal.contains_ideal(&k)? => k,
                Some(k) => k.intersect(&s.ideal)?,
            };
            if core.contains_ideal(&k)? {
                reached = Some(n);
                break;
            }
            acc = Some(k);
        }
        out.push((trial_cfg.seed, reached));
    }
    let estimate = out
        .iter()
        .filter_map(|(_, c)| *c)
        .min()
        .ok_or(Error::SampleLimit(max_per_trial))?;
    Ok(GammaEstimate {
        estimate,
        trials: out,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralClosureVerdict {
    /// `I` is a reduction of `I + (f)` with this reduction number.
    Member { r: u32 },
    /// No certificate up to the cap; membership is undecided.
    NonMemberUpToCap { k_max: u32 },
}

impl IntegralClosureVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, IntegralClosureVerdict::Member { .. })
    }
}

/// `f` is integral over `I` iff `I` is a reduction of `I + (f)`.
pub fn integral_closure_member(
    f: &Polynomial,
    i: &Ideal,
    k_max: u32,
) -> Result<IntegralClosureVerdict> {
    let ext = i.sum(&Ideal::principal(f))?;
    let rep = is_reduction(i, &ext, k_max)?;
    Ok(match rep.r {
        Some(r) => IntegralClosureVerdict::Member { r },
        None => IntegralClosureVerdict::NonMemberUpToCap { k_max },
    })
}
