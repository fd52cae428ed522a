//! Expected-cost bound audits, reported as line-oriented text with a final
//! PASS/FAIL verdict.

use std::fmt::Write as _;

use distsearch::datagen::{
    lowerbound_family, random_audit_pair, random_portfolio_instance, substream,
    two_atom_instance,
};
use distsearch::evaluation::{
    audit_theorem1, audit_theorem4, expected_cost, optimal_bst_cost,
};
use distsearch::strategies::{LearnedParams, StrategySpec};
use distsearch::{Instance, KeyArray, ProbDist, Result};
use rand::Rng;

#[derive(Debug, Clone)]
pub struct AuditOptions {
    pub instances: u32,
    pub n_max: usize,
    pub seed: u64,
    pub params: LearnedParams,
    pub portfolio_instances: u32,
}

pub struct AuditOutcome {
    pub text: String,
    pub pass: bool,
}

pub fn run_bound_audit(opts: &AuditOptions) -> Result<AuditOutcome> {
    let mut text = String::new();
    let mut pass = true;
    let c = opts.params.growth_factor();
    writeln!(
        text,
        "bound audit: seed={} instances={} n_max={} c={c} portfolio={}",
        opts.seed, opts.instances, opts.n_max, opts.portfolio_instances
    )
    .unwrap();

    // Random (truth, prediction) pairs against the single-prediction bound.
    let mut rng = substream(opts.seed, "audit-pairs", 0);
    let mut violations = 0u32;
    let mut worst: f64 = 0.0;
    for _ in 0..opts.instances {
        let n = rng.gen_range(2..=opts.n_max.max(2));
        let (p, q) = random_audit_pair(&mut rng, n)?;
        let keys = KeyArray::contiguous(0, n as i64 - 1)?;
        let inst = Instance::new("audit", keys, p, vec![q], None)?;
        let report = audit_theorem1(&inst, &opts.params)?;
        let bound = report.bound.expect("audit sets the bound");
        worst = worst.max(bound.ratio);
        if !bound.satisfied {
            violations += 1;
        }
    }
    writeln!(
        text,
        "single-prediction bound: {violations} violations over {} instances, \
         worst ratio {worst:.4}",
        opts.instances
    )
    .unwrap();
    pass &= violations == 0;

    // Adversarial family: cost grows with log(eta) while the optimal-tree
    // witness certifies the matching floor.
    for eta in [4usize, 16, 64, 256] {
        let family = lowerbound_family(eta, 256)?;
        let avg = family
            .iter()
            .map(|inst| {
                expected_cost(&StrategySpec::Learned(opts.params), inst)
                    .map(|r| r.expected_cost)
            })
            .sum::<Result<f64>>()?
            / eta as f64;
        let ceiling = 8.0 * ((eta as f64).log2() + 2.0) + 8.0;
        let witness = optimal_bst_cost(&ProbDist::uniform(eta)?);
        let floor = (eta as f64).log2() / 3.0;
        let ok = avg <= ceiling + 1e-9 && witness >= floor - 1e-9;
        writeln!(
            text,
            "adversarial family eta={eta}: family-average learned cost {avg:.3} \
             <= {ceiling:.3}; optimal-tree witness {witness:.3} >= {floor:.3} \
             [{}]",
            if ok { "ok" } else { "VIOLATION" }
        )
        .unwrap();
        pass &= ok;
    }

    // The two-atom instance: entropy 1, zero error, bound 20.
    let two_atom = two_atom_instance(1 << 16)?;
    let report = audit_theorem1(&two_atom, &opts.params)?;
    let bound = report.bound.expect("audit sets the bound");
    writeln!(
        text,
        "two-atom n=2^16: expected cost {:.3} <= {:.3} (H={:.3}, emd={:.3}) [{}]",
        report.expected_cost,
        bound.value,
        report.entropy_bits,
        report.emd_to_each_prediction[0],
        if bound.satisfied { "ok" } else { "VIOLATION" }
    )
    .unwrap();
    pass &= bound.satisfied;

    // Portfolio instances against the multi-prediction bound.
    let mut rng = substream(opts.seed, "audit-portfolio", 0);
    let mut violations = 0u32;
    let mut worst: f64 = 0.0;
    for trial in 0..opts.portfolio_instances {
        let n = rng.gen_range(2..=opts.n_max.clamp(2, 1024));
        let m = [2usize, 4, 8][trial as usize % 3];
        let inst = random_portfolio_instance(&mut rng, n, m)?;
        let report = audit_theorem4(&inst, &opts.params)?;
        let bound = report.bound.expect("audit sets the bound");
        worst = worst.max(bound.ratio);
        if !bound.satisfied {
            violations += 1;
        }
    }
    writeln!(
        text,
        "portfolio bound: {violations} violations over {} instances, \
         worst ratio {worst:.4}",
        opts.portfolio_instances
    )
    .unwrap();
    pass &= violations == 0;

    writeln!(text, "{}", if pass { "AUDIT PASS" } else { "AUDIT FAIL" }).unwrap();
    Ok(AuditOutcome { text, pass })
}
