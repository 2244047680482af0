//! Reductions of ideals: reduction tests and numbers, analytic spread, and random sampling of
//! minimal reductions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::elimination_gens;
use crate::ideal::Ideal;
use crate::ring::{FieldSpec, PolyRing, Polynomial, Scalar, TermOrder};

pub const DEFAULT_R_MAX: u32 = 30;

/// Attempts per sample must fit in the stream stride.
const STREAM_STRIDE: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub is_reduction: bool,
    /// Least `r` with `I^{r+1} = J I^r`, when found.
    pub r: Option<u32>,
    /// The search stopped at `r_max` without a verdict; the answer is unknown, not "no".
    pub cap_hit: bool,
    /// Seed of the sampler that produced `J`, if it was sampled.
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub max_retries: usize,
    /// Integers never used as coefficients (zero is always excluded).
    pub excluded_coeffs: Vec<i64>,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 0,
            max_retries: 8,
            excluded_coeffs: Vec::new(),
        }
    }
}

impl SamplerConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplerConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_retries == 0 || self.max_retries as u64 >= STREAM_STRIDE {
            return Err(Error::OutOfRange(format!(
                "max_retries must be in 1..{STREAM_STRIDE}"
            )));
        }
        Ok(())
    }

    /// The stream used by attempt `attempt` of sample `sample`.
    pub fn stream(sample: u64, attempt: usize) -> u64 {
        sample * STREAM_STRIDE + attempt as u64
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn coefficient(&self, field: &FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
        loop {
            let c = match field {
                FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(1..*p as i64)),
                FieldSpec::Rationals => field.from_i64(rng.gen_range(-100..=100)),
            };
            let excluded = field.is_zero(&c)
                || self
                    .excluded_coeffs
                    .iter()
                    .any(|&e| field.is_zero(&field.sub(&c, &field.from_i64(e))));
            if !excluded {
                return c;
            }
        }
    }
}

/// Decide whether `J` is a reduction of `I` by testing `I^{r+1} ⊆ J I^r` for
/// `r = 0, 1, ..., r_max`.
pub fn is_reduction(j: &Ideal, i: &Ideal, r_max: u32) -> Result<ReductionReport> {
    if !PolyRing::same(j.ring(), i.ring()) {
        return Err(Error::RingMismatch);
    }
    if !i.contains_ideal(j)? {
        return Err(Error::NotContained);
    }
    let (j, i) = (j.minimized(), i.minimized());
    let mut power = Ideal::unit(i.ring());
    for r in 0..=r_max {
        let next = i.product(&power)?;
        if j.product(&power)?.contains_ideal(&next)? {
            return Ok(ReductionReport {
                is_reduction: true,
                r: Some(r),
                cap_hit: false,
                seed: None,
            });
        }
        power = next;
    }
    Ok(ReductionReport {
        is_reduction: false,
        r: None,
        cap_hit: true,
        seed: None,
    })
}

/// The reduction number `r_J(I)`; fails with [`Error::NotAReduction`] past `r_max`.
pub fn reduction_number(j: &Ideal, i: &Ideal, r_max: u32) -> Result<u32> {
    is_reduction(j, i, r_max)?
        .r
        .ok_or(Error::NotAReduction(r_max as usize))
}

fn check_graded(i: &Ideal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::DegenerateIdeal("zero ideal".into()));
    }
    if !i.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    if i.is_unit() {
        return Err(Error::DegenerateIdeal("unit ideal".into()));
    }
    Ok(())
}

/// Krull dimension of the fiber cone `R[It] / m R[It]`.
///
/// The Rees ideal is the elimination of `t` from `(y_k - t f_k)` in `k[t, y, x]`; adding the
/// variables `x` and taking the dimension leaves the fiber ring.
pub fn analytic_spread(i: &Ideal) -> Result<usize> {
    check_graded(i)?;
    let gens = i.minimized().gens().to_vec();
    let ring = i.ring();
    let (n, d) = (gens.len(), ring.nvars());
    let yx = ring.extend_front("y", n, TermOrder::GrevLex);
    let tyx = yx.extend_front("t", 1, TermOrder::elimination(1));
    let x_positions: Vec<usize> = (1 + n..1 + n + d).collect();
    let t = Polynomial::var(&tyx, 0);
    let rees_gens: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(k, f)| &Polynomial::var(&tyx, 1 + k) - &(&t * &f.embed(&tyx, &x_positions)))
        .collect();
    let mut fiber = elimination_gens(&rees_gens, 1, &yx);
    fiber.extend((n..n + d).map(|k| Polynomial::var(&yx, k)));
    let dim = Ideal::new(&yx, fiber)?.dimension();
    Ok(dim.max(0) as usize)
}

/// Outcome of one sampled minimal reduction.
#[derive(Clone, Debug)]
pub struct SampledReduction {
    pub ideal: Ideal,
    pub report: ReductionReport,
    /// `(seed, stream)` of the attempt that succeeded; `None` when `I` is its own minimal
    /// reduction and nothing was sampled.
    pub source: Option<(u64, u64)>,
}

/// A minimal reduction generated by `ell` random linear combinations of the generators of
/// an equigenerated homogeneous ideal, certified by [`is_reduction`].
pub fn sample_minimal_reduction(
    i: &Ideal,
    ell: usize,
    cfg: &SamplerConfig,
    r_max: u32,
) -> Result<(Ideal, ReductionReport)> {
    let s = sample_reduction_stream(i, ell, cfg, r_max, 0)?;
    Ok((s.ideal, s.report))
}

/// As [`sample_minimal_reduction`], drawing randomness only from the streams of sample
/// number `sample`, so samples are reproducible independently of one another.
pub fn sample_reduction_stream(
    i: &Ideal,
    ell: usize,
    cfg: &SamplerConfig,
    r_max: u32,
    sample: u64,
) -> Result<SampledReduction> {
    cfg.validate()?;
    check_graded(i)?;
    if i.generator_degree().is_none() {
        return Err(Error::NotEquigenerated);
    }
    let basis = i.minimized();
    let gens = basis.gens();
    if ell == 0 || ell > gens.len() {
        return Err(Error::OutOfRange(format!(
            "cannot build {ell} generators from {} independent ones",
            gens.len()
        )));
    }
    if ell == gens.len() {
        let report = ReductionReport {
            is_reduction: true,
            r: Some(0),
            cap_hit: false,
            seed: None,
        };
        return Ok(SampledReduction {
            ideal: basis,
            report,
            source: None,
        });
    }
    let ring = i.ring();
    let field = ring.field();
    let mut tried = Vec::with_capacity(cfg.max_retries);
    for attempt in 0..cfg.max_retries {
        let stream = SamplerConfig::stream(sample, attempt);
        tried.push((cfg.seed, stream));
        let mut rng = cfg.rng(stream);
        let combos: Vec<Polynomial> = (0..ell)
            .map(|_| {
                gens.iter().fold(Polynomial::zero(ring), |acc, g| {
                    &acc + &g.scale(&cfg.coefficient(field, &mut rng))
                })
            })
            .collect();
        let j = Ideal::new(ring, combos)?;
        let mut report = is_reduction(&j, i, r_max)?;
        if report.is_reduction {
            report.seed = Some(cfg.seed);
            return Ok(SampledReduction {
                ideal: j,
                report,
                source: Some((cfg.seed, stream)),
            });
        }
    }
    Err(Error::GenericityFailure(tried))
}
