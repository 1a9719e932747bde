use super::{Command, RunConfig};
use crate::brauer::{
    brauer_braid_check, brauer_exchange_check, brauer_highest_monomial_check, brauer_relation_suite, brauer_unitarity_symbolic,
    brauer_yang_baxter_matrix, degenerate_affine_check, ebar_projector_check, link_generators,
};
use crate::diagrams::relations::{
    block_structure, matches_reference, mirror_suite, module_generation, reference_h4, relation_suite, sigma_shift_suite,
    sigma_triangularity,
};
use crate::diagrams::{markov_checks, markov_trace, parse_word, Generators, Letter};
use crate::error::Result;
use crate::polyrep::{
    basis_checks, braid_check, contraction_factor, cyclic_sum_check, cyclic_v_block_check, describe_failures, exchange_check,
    generate_basis, highest_monomial_check, matched_divisibility, pfaffian_checks, property_failures, sn_factorization_check,
    tl_collapse_check, unitarity_symbolic, verify_duality, DualityVector, Flavor,
};
use crate::report::{Assertion, Report};
use crate::scalars::{Mode, Scalar};
use serde_json::{json, Value};

const BMW_ONLY: &[Mode] = &[Mode::Bmw];
const BRAUER_ONLY: &[Mode] = &[Mode::Brauer];

fn generators(cfg: &RunConfig) -> Result<Generators> {
    match cfg.mode {
        Mode::Bmw => Generators::build(cfg.n, &Flavor::bmw().params),
        Mode::Brauer => link_generators(cfg.n),
    }
}

fn basis(cfg: &RunConfig) -> Result<(Flavor, DualityVector)> {
    let fl = Flavor::new(cfg.mode);
    let v = generate_basis(&fl, cfg.n, cfg.route()?.as_ref())?;
    Ok((fl, v))
}

fn matrices_artifact(g: &Generators, cfg: &RunConfig) -> Value {
    let names = cfg.mode.names();
    let mut all: Vec<Value> = Vec::new();
    for i in 1..g.n {
        all.push(g.get(Letter::T(i)).to_json(names));
        all.push(g.get(Letter::E(i)).to_json(names));
    }
    if cfg.mode == Mode::Bmw {
        all.push(g.sigma().to_json(names));
    }
    Value::Array(all)
}

pub struct Relations;

impl Command for Relations {
    fn name(&self) -> &'static str {
        "relations"
    }
    fn summary(&self) -> &'static str {
        "defining relations of the generator matrices"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let g = generators(cfg)?;
        match cfg.mode {
            Mode::Brauer => report.extend(brauer_relation_suite(&g)),
            Mode::Bmw => {
                report.extend(relation_suite(&g));
                report.extend(mirror_suite(&g));
                if g.n >= 4 {
                    report.extend([sigma_shift_suite(&g), sigma_triangularity(&g), module_generation(&g)]);
                    report.extend((1..g.n).map(|i| block_structure(&g, i)));
                }
                if g.n == 4 {
                    let refs = reference_h4(&g.params);
                    let find = |label: &str| &refs.iter().find(|(l, _)| *l == label).expect("reference label").1;
                    let pairs = [
                        ("e1", g.get(Letter::E(1)), "e1"),
                        ("e3", g.get(Letter::E(3)), "e1"),
                        ("e2", g.get(Letter::E(2)), "e2"),
                        ("t1", g.get(Letter::T(1)), "t1"),
                        ("t3", g.get(Letter::T(3)), "t1"),
                        ("t2", g.get(Letter::T(2)), "t2"),
                    ];
                    for (label, m, reference) in pairs {
                        report.check(format!("n=4 matrix {label}"), matches_reference(m, find(reference)), format!("against {reference}"));
                    }
                    report.check("n=4 matrix sigma", matches_reference(&g.sigma(), find("sigma")), "against sigma");
                }
            }
        }
        report.artifact("matrices", matrices_artifact(&g, cfg));
        Ok(())
    }
}

pub struct Basis;

impl Command for Basis {
    fn name(&self) -> &'static str {
        "basis"
    }
    fn summary(&self) -> &'static str {
        "generate and export the dual polynomial basis"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let (fl, v) = basis(cfg)?;
        report.extend(basis_checks(&fl, &v));
        if cfg.mode == Mode::Brauer {
            report.extend([brauer_highest_monomial_check(&v)?]);
        }
        report.artifact("basis", v.to_json(cfg.mode.names()));
        Ok(())
    }
}

pub struct Duality;

impl Command for Duality {
    fn name(&self) -> &'static str {
        "duality"
    }
    fn summary(&self) -> &'static str {
        "generator actions agree on both sides of the pairing"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let g = generators(cfg)?;
        let (fl, v) = basis(cfg)?;
        report.extend(verify_duality(&fl, &g, &v, cfg.route()?.as_ref()));
        Ok(())
    }
}

pub struct PropertyP;

impl Command for PropertyP {
    fn name(&self) -> &'static str {
        "property-p"
    }
    fn summary(&self) -> &'static str {
        "vanishing at shifted triples, per basis polynomial"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let (fl, v) = basis(cfg)?;
        let mut failures = serde_json::Map::new();
        for (m, f) in v.entries() {
            let fails = property_failures(&fl, f);
            if !fails.is_empty() {
                failures.insert(m.to_string(), serde_json::to_value(&fails).expect("constraints serialize"));
            }
            let mut a = describe_failures(fails);
            a.name = format!("{} {m}", a.name);
            report.extend([a]);
        }
        report.extend([matched_divisibility(&fl, &v)]);
        report.artifact("failures", Value::Object(failures));
        Ok(())
    }
}

pub struct Pfaffian;

impl Command for Pfaffian {
    fn name(&self) -> &'static str {
        "pfaffian"
    }
    fn summary(&self) -> &'static str {
        "the symmetric state polynomial and its checks"
    }
    fn modes(&self) -> &'static [Mode] {
        BMW_ONLY
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let (pf, checks) = pfaffian_checks(&Flavor::bmw(), cfg.n)?;
        report.extend(checks);
        report.artifact("pfaffian", json!(pf.to_string()));
        Ok(())
    }
}

pub struct Cyclic;

impl Command for Cyclic {
    fn name(&self) -> &'static str {
        "cyclic"
    }
    fn summary(&self) -> &'static str {
        "specialization p = q^-2 and the summed basis"
    }
    fn modes(&self) -> &'static [Mode] {
        BMW_ONLY
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let g = generators(cfg)?;
        let (_, v) = basis(cfg)?;
        let (checks, ratio) = cyclic_sum_check(&g, &v)?;
        report.extend(checks);
        report.artifact("ratio", json!(ratio.to_string()));
        // reported only: holds at n = 4, not at n = 6
        if g.n >= 4 {
            let block = cyclic_v_block_check(&g)?;
            report.artifact("v_block", json!({ "name": block.name, "status": block.status, "detail": block.detail }));
        }
        Ok(())
    }
}

pub struct SnFactorization;

impl Command for SnFactorization {
    fn name(&self) -> &'static str {
        "sn-factorization"
    }
    fn summary(&self) -> &'static str {
        "factorized image of the maximally crossed polynomial"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        report.extend(sn_factorization_check(&Flavor::new(cfg.mode), cfg.route()?.as_ref(), cfg.n)?);
        Ok(())
    }
}

pub struct TlCollapse;

impl Command for TlCollapse {
    fn name(&self) -> &'static str {
        "tl-collapse"
    }
    fn summary(&self) -> &'static str {
        "U = e1 e2 e1 - e1 and the reduction E'"
    }
    fn modes(&self) -> &'static [Mode] {
        BMW_ONLY
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let g = generators(cfg)?;
        let (_, v) = basis(cfg)?;
        let c = cfg.c_prime()?;
        report.extend(tl_collapse_check(&g, &v, &c)?);
        report.artifact("c_prime", json!(c.display_with(cfg.mode.names())));
        Ok(())
    }
}

pub struct YangBaxter;

impl YangBaxter {
    fn bmw(cfg: &RunConfig, g: &Generators, v: &DualityVector, report: &mut Report) -> Result<()> {
        for i in 1..g.n {
            report.extend([unitarity_symbolic(g, i)?]);
        }
        let mut bad = Vec::new();
        for z in [2, 3, -5] {
            let f = contraction_factor(g, &Scalar::integer(z))?;
            if !f.is_one() {
                bad.push(format!("z={z}: {f}"));
            }
        }
        report.check("Y(z) e_i = e_i", bad.is_empty(), if bad.is_empty() { "z = 2, 3, -5".into() } else { bad.join("; ") });
        if g.n >= 3 {
            report.extend([braid_check(g, cfg.samples, cfg.seed)?]);
        }
        let (a, outcome) = exchange_check(g, v, cfg.samples, cfg.seed)?;
        report.extend([a]);
        report.artifact(
            "exchange",
            json!({ "samples": outcome.samples, "forward_failures": outcome.forward_failures, "inverse_failures": outcome.inverse_failures }),
        );
        Ok(())
    }

    fn brauer(cfg: &RunConfig, g: &Generators, v: &DualityVector, report: &mut Report) -> Result<()> {
        for i in 1..g.n {
            report.extend([brauer_unitarity_symbolic(g, i)]);
        }
        let at_zero = brauer_yang_baxter_matrix(g, 1, &Scalar::zero())?;
        report.check("Y(0) = 1", at_zero.sub(&g.identity()).is_zero(), "i = 1");
        if g.n >= 3 {
            report.extend([brauer_braid_check(g, cfg.samples, cfg.seed)?]);
        }
        let (a, opposite) = brauer_exchange_check(g, v, cfg.samples, cfg.seed)?;
        report.extend([a]);
        report.artifact("exchange", json!({ "samples": cfg.samples, "opposite_failures": opposite }));
        Ok(())
    }
}

impl Command for YangBaxter {
    fn name(&self) -> &'static str {
        "yang-baxter"
    }
    fn summary(&self) -> &'static str {
        "unitarity, braid and exchange identities of Y"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let g = generators(cfg)?;
        let (_, v) = basis(cfg)?;
        match cfg.mode {
            Mode::Bmw => Self::bmw(cfg, &g, &v, report),
            Mode::Brauer => Self::brauer(cfg, &g, &v, report),
        }
    }
}

pub struct Trace;

impl Command for Trace {
    fn name(&self) -> &'static str {
        "trace"
    }
    fn summary(&self) -> &'static str {
        "Markov trace of WORD and the trace axioms"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let params = Flavor::new(cfg.mode).params;
        if let Some(word) = cfg.args.first() {
            let letters = parse_word(word)?;
            let value = markov_trace(cfg.n, &letters, &params)?;
            report.artifact("word", json!(word));
            report.artifact("trace", json!(value.display_with(cfg.mode.names())));
        }
        report.extend(markov_checks(cfg.n, &params, cfg.samples, cfg.seed)?);
        Ok(())
    }
}

pub struct Affine;

impl Command for Affine {
    fn name(&self) -> &'static str {
        "affine"
    }
    fn summary(&self) -> &'static str {
        "degenerate affine relations on random inputs"
    }
    fn modes(&self) -> &'static [Mode] {
        BRAUER_ONLY
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let count = cfg.samples.max(50);
        report.extend([degenerate_affine_check(cfg.route()?.as_ref(), cfg.n, count, cfg.seed)?]);
        Ok(())
    }
}

pub struct HighestMonomial;

impl Command for HighestMonomial {
    fn name(&self) -> &'static str {
        "highest-monomial"
    }
    fn summary(&self) -> &'static str {
        "leading terms of the basis polynomials"
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        let (_, v) = basis(cfg)?;
        let a: Assertion = match cfg.mode {
            Mode::Bmw => highest_monomial_check(&v),
            Mode::Brauer => brauer_highest_monomial_check(&v)?,
        };
        report.extend([a]);
        Ok(())
    }
}

pub struct Projector;

impl Command for Projector {
    fn name(&self) -> &'static str {
        "projector"
    }
    fn summary(&self) -> &'static str {
        "the contraction operator squares to tau times itself"
    }
    fn modes(&self) -> &'static [Mode] {
        BRAUER_ONLY
    }
    fn run(&self, cfg: &RunConfig, report: &mut Report) -> Result<()> {
        report.extend([ebar_projector_check(cfg.n, cfg.samples.max(50), cfg.seed)?]);
        Ok(())
    }
}
