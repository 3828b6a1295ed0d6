//! Job file schema and dispatch. One TOML document per file, selected by a
//! top-level `command` key; polynomials and rationals are strings in the
//! poly-core syntax, so `1/2`, `-3`, and `x[1][2]^2 - s[1]` all parse the
//! same way everywhere.

use std::collections::BTreeMap;
use std::time::Instant;

use num_rational::BigRational;
use serde::Deserialize;
use symorb::equivariant::{
    fixed_point_generators, grassmannian_seq_ideal, orbit_closure_generators,
    orbit_closure_member, orbit_truncate, seq_ideal_level, vandermonde_seq_ideal, ComponentSpec,
    EquivariantError, FamilySpec, Multiplicity, OrbitClosureSpec, SequencePrefixDescriptor,
    SymmetricIdealSpec,
};
use symorb::geometry::{ngon_instance, region_escapes_disk};
use symorb::groebner::GroebnerError;
use symorb::parse::parse_poly;
use symorb::semialg::{
    decide_fiber_capped, decide_nonempty_capped, Decision, EquivariantSignSystem, SemialgError,
};
use symorb::{Ideal, MonomialOrder, Poly};

use crate::report::{decision_report, generator_report, membership_report, ngon_report, Report};

/// What went wrong, split by exit code: bad input (2) versus a computation
/// that refused or overflowed its caps (3).
#[derive(Debug)]
pub enum JobError {
    Validation(String),
    Compute(String),
}

impl JobError {
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Validation(_) => 2,
            JobError::Compute(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            JobError::Validation(m) | JobError::Compute(m) => m,
        }
    }
}

impl From<EquivariantError> for JobError {
    fn from(e: EquivariantError) -> Self {
        match e {
            EquivariantError::Groebner(g) => g.into(),
            other => JobError::Validation(other.to_string()),
        }
    }
}

impl From<GroebnerError> for JobError {
    fn from(e: GroebnerError) -> Self {
        JobError::Compute(e.to_string())
    }
}

impl From<SemialgError> for JobError {
    fn from(e: SemialgError) -> Self {
        match e {
            SemialgError::UnresolvedParameters(_) => JobError::Validation(e.to_string()),
            // multi-column systems are out of the procedure's range, like
            // an Unsupported decision
            SemialgError::SingleColumn(_) | SemialgError::Projection(_) => {
                JobError::Compute(e.to_string())
            }
            SemialgError::WitnessVerification(_) => JobError::Compute(e.to_string()),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum MultiplicityField {
    Capacity(u32),
    Word(String),
}

#[derive(Debug, Deserialize)]
pub struct ComponentField {
    #[serde(default)]
    pub complement: Vec<String>,
    pub multiplicity: MultiplicityField,
    #[serde(default)]
    pub point: Option<Vec<String>>,
}

/// One job file. The `command` key picks the variant; the remaining keys
/// are that command's payload.
#[derive(Debug, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Job {
    OrbitIdeal {
        ncols: u32,
        level: u32,
        vp: Vec<String>,
        #[serde(default)]
        component: Vec<ComponentField>,
    },
    OrbitMember {
        ncols: u32,
        vp: Vec<String>,
        #[serde(default)]
        component: Vec<ComponentField>,
        points: Vec<Vec<String>>,
        #[serde(default)]
        tail: Option<Vec<String>>,
    },
    FixedPoint {
        level: u32,
        prime: Vec<String>,
    },
    SeqIdeal {
        ncols: u32,
        level: u32,
        #[serde(default)]
        shared_params: u32,
        #[serde(default)]
        fiber_params: u32,
        generators: Vec<String>,
    },
    Vandermonde {
        degree: u32,
        ncols: u32,
        level: u32,
    },
    Grassmannian {
        rank: u32,
        ncols: u32,
        level: u32,
    },
    Truncate {
        ncols: u32,
        level: u32,
        generators: Vec<String>,
    },
    Member {
        generators: Vec<String>,
        candidate: String,
    },
    RadicalMember {
        generators: Vec<String>,
        candidate: String,
    },
    Decide {
        #[serde(default)]
        weak: Vec<String>,
        #[serde(default)]
        strict: Vec<String>,
    },
    DecideFiber {
        #[serde(default)]
        weak: Vec<String>,
        #[serde(default)]
        strict: Vec<String>,
        params: BTreeMap<String, String>,
    },
    NgonDemo {
        sides: u32,
    },
}

impl Job {
    pub fn command_name(&self) -> &'static str {
        match self {
            Job::OrbitIdeal { .. } => "orbit-ideal",
            Job::OrbitMember { .. } => "orbit-member",
            Job::FixedPoint { .. } => "fixed-point",
            Job::SeqIdeal { .. } => "seq-ideal",
            Job::Vandermonde { .. } => "vandermonde",
            Job::Grassmannian { .. } => "grassmannian",
            Job::Truncate { .. } => "truncate",
            Job::Member { .. } => "member",
            Job::RadicalMember { .. } => "radical-member",
            Job::Decide { .. } => "decide",
            Job::DecideFiber { .. } => "decide-fiber",
            Job::NgonDemo { .. } => "ngon-demo",
        }
    }
}

/// Parses a job file; TOML syntax and schema violations surface with the
/// offending line and column.
pub fn parse_job(text: &str) -> Result<Job, JobError> {
    toml::from_str(text).map_err(|e| JobError::Validation(e.to_string()))
}

fn poly(s: &str) -> Result<Poly, JobError> {
    parse_poly(s)
        .map_err(|e| JobError::Validation(format!("polynomial {s:?}: {e}")))
}

fn polys(ss: &[String]) -> Result<Vec<Poly>, JobError> {
    ss.iter().map(|s| poly(s)).collect()
}

fn rational(s: &str) -> Result<BigRational, JobError> {
    poly(s)?
        .as_constant()
        .ok_or_else(|| JobError::Validation(format!("expected a rational constant, got {s:?}")))
}

fn rationals(ss: &[String]) -> Result<Vec<BigRational>, JobError> {
    ss.iter().map(|s| rational(s)).collect()
}

/// Parameter keys are spelled like the variables they assign: `s[3]`.
fn param_index(key: &str) -> Result<u32, JobError> {
    key.strip_prefix("s[")
        .and_then(|rest| rest.strip_suffix(']'))
        .and_then(|idx| idx.parse::<u32>().ok())
        .filter(|&idx| idx >= 1)
        .ok_or_else(|| {
            JobError::Validation(format!("parameter key {key:?} is not of the form \"s[k]\""))
        })
}

fn components(fields: &[ComponentField]) -> Result<Vec<ComponentSpec>, JobError> {
    fields
        .iter()
        .map(|f| {
            let multiplicity = match &f.multiplicity {
                MultiplicityField::Capacity(c) => Multiplicity::Finite(*c),
                MultiplicityField::Word(w) if w == "infinite" => Multiplicity::Infinite,
                MultiplicityField::Word(w) => {
                    return Err(JobError::Validation(format!(
                        "multiplicity must be a capacity or \"infinite\", got {w:?}"
                    )))
                }
            };
            Ok(ComponentSpec {
                complement_generators: polys(&f.complement)?,
                multiplicity,
                point: f.point.as_deref().map(rationals).transpose()?,
            })
        })
        .collect()
}

fn orbit_spec(
    ncols: u32,
    vp: &[String],
    component: &[ComponentField],
) -> Result<OrbitClosureSpec, JobError> {
    Ok(OrbitClosureSpec::new(ncols, polys(vp)?, components(component)?)?)
}

fn with_cap(ideal: Ideal, cap: Option<u32>) -> Ideal {
    match cap {
        Some(c) => ideal.with_degree_cap(c),
        None => ideal,
    }
}

/// Runs one parsed job. `cap` overrides every degree cap downstream (both
/// the Groebner default and the projection default).
pub fn run_job(job: &Job, cap: Option<u32>) -> Result<Report, JobError> {
    let t0 = Instant::now();
    let name = job.command_name();
    let decide_cap = cap.unwrap_or(symorb::cad::DEFAULT_PROJECTION_DEGREE_CAP);
    let mut report = match job {
        Job::OrbitIdeal { ncols, level, vp, component } => {
            let spec = orbit_spec(*ncols, vp, component)?;
            let ideal = orbit_closure_generators(&spec, *level)?;
            generator_report(name, *level, spec.vp_generators(), &ideal)
        }
        Job::OrbitMember { ncols, vp, component, points, tail } => {
            let spec = orbit_spec(*ncols, vp, component)?;
            let pts = points
                .iter()
                .map(|p| rationals(p))
                .collect::<Result<Vec<_>, _>>()?;
            let tail = tail.as_deref().map(rationals).transpose()?;
            let descriptor = SequencePrefixDescriptor::new(*ncols, pts, tail)?;
            let member = orbit_closure_member(&spec, &descriptor)?;
            membership_report(name, &descriptor, member)
        }
        Job::FixedPoint { level, prime } => {
            let gens = polys(prime)?;
            let ideal = with_cap(fixed_point_generators(&gens, *level)?, cap);
            generator_report(name, *level, &gens, &ideal)
        }
        Job::SeqIdeal { ncols, level, shared_params, fiber_params, generators } => {
            let family = FamilySpec::new(*ncols, *shared_params, *fiber_params, polys(generators)?)?;
            let ideal = seq_ideal_level(&family, *level)?;
            generator_report(name, *level, family.generators(), &ideal)
        }
        Job::Vandermonde { degree, ncols, level } => {
            let ideal = vandermonde_seq_ideal(*degree, *ncols, *level);
            generator_report(name, *level, &[], &ideal)
        }
        Job::Grassmannian { rank, ncols, level } => {
            let ideal = grassmannian_seq_ideal(*rank, *ncols, *level);
            generator_report(name, *level, &[], &ideal)
        }
        Job::Truncate { ncols, level, generators } => {
            let spec = SymmetricIdealSpec::new(*ncols, polys(generators)?)?;
            let ideal = orbit_truncate(&spec, *level)?;
            generator_report(name, *level, spec.generators(), &ideal)
        }
        Job::Member { generators, candidate } => {
            let ideal = with_cap(Ideal::new(polys(generators)?, MonomialOrder::Grevlex), cap);
            let f = poly(candidate)?;
            let member = ideal.contains(&f)?;
            membership_report(name, &f, member)
        }
        Job::RadicalMember { generators, candidate } => {
            let ideal = with_cap(Ideal::new(polys(generators)?, MonomialOrder::Grevlex), cap);
            let f = poly(candidate)?;
            let member = ideal.radical_contains(&f)?;
            membership_report(name, &f, member)
        }
        Job::Decide { weak, strict } => {
            let sys = EquivariantSignSystem::new(polys(weak)?, polys(strict)?)?;
            let decision = decide_nonempty_capped(&sys, decide_cap)?;
            decision_report(name, &sys, None, &decision)
        }
        Job::DecideFiber { weak, strict, params } => {
            let sys = EquivariantSignSystem::new(polys(weak)?, polys(strict)?)?;
            let mut values = BTreeMap::new();
            for (key, value) in params {
                values.insert(param_index(key)?, rational(value)?);
            }
            let decision = decide_fiber_capped(&sys, &values, decide_cap)?;
            decision_report(name, &sys, Some(&values), &decision)
        }
        Job::NgonDemo { sides } => {
            if *sides < 3 {
                return Err(JobError::Validation(format!(
                    "a polygon needs at least 3 sides, got {sides}"
                )));
            }
            let arrangement = ngon_instance(*sides);
            let full = region_escapes_disk(&arrangement);
            let dropped: Vec<bool> = (0..*sides as usize)
                .map(|j| region_escapes_disk(&arrangement.without_line(j)))
                .collect();
            ngon_report(name, *sides, full, &dropped)
        }
    };
    report.elapsed = t0.elapsed();
    Ok(report)
}

/// Unsupported decisions exit with the same code as a degree-cap overflow:
/// the job ran, but the answer is a refusal.
pub fn report_exit_code(report: &Report) -> i32 {
    if report.unsupported {
        3
    } else {
        0
    }
}
