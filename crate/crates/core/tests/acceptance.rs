//! End-to-end acceptance run: ten criteria, one PASS/FAIL line each.

use bmw::brauer::{
    brauer_braid_check, brauer_exchange_check, brauer_highest_monomial_check, brauer_relation_suite, brauer_unitarity_symbolic,
    degenerate_affine_check, link_generators,
};
use bmw::diagrams::relations::{matches_reference, mirror_suite, reference_h4, relation_suite};
use bmw::diagrams::{markov_checks, Generators, Letter};
use bmw::polyrep::{
    basis_checks, braid_check, cyclic_sum_check, default_route, dual_rows, exchange_check, generate_basis, is_symmetric,
    pfaffian_checks, sn_factorization_check, tbar_route, tl_collapse_check, unitarity_symbolic, verify_duality, DualityVector,
    Flavor, TBAR_ROUTES,
};
use bmw::report::Assertion;
use bmw::{AlgebraParams, Scalar};
use std::io::Write;
use std::time::{Duration, Instant};

type Outcome = bmw::Result<Vec<Assertion>>;

fn bmw_gens(n: usize) -> bmw::Result<Generators> {
    Generators::build(n, &AlgebraParams::bmw())
}

fn bmw_basis(n: usize) -> bmw::Result<DualityVector> {
    generate_basis(&Flavor::bmw(), n, default_route().as_ref())
}

fn within(name: &str, started: Instant, limit: Duration) -> Assertion {
    let took = started.elapsed();
    Assertion::new(format!("{name} runtime"), took <= limit, format!("{took:.2?} of {limit:?}"))
}

fn tagged(n: usize, items: Vec<Assertion>) -> impl Iterator<Item = Assertion> {
    items.into_iter().map(move |a| Assertion { name: format!("n={n} {}", a.name), ..a })
}

fn golden_matrices() -> Outcome {
    let started = Instant::now();
    let g = bmw_gens(4)?;
    let refs = reference_h4(&g.params);
    let find = |label: &str| &refs.iter().find(|(l, _)| *l == label).expect("reference label").1;
    let mut out: Vec<Assertion> = [
        ("e1", Letter::E(1), "e1"),
        ("e3", Letter::E(3), "e1"),
        ("e2", Letter::E(2), "e2"),
        ("t1", Letter::T(1), "t1"),
        ("t3", Letter::T(3), "t1"),
        ("t2", Letter::T(2), "t2"),
    ]
    .into_iter()
    .map(|(label, g_, r)| Assertion::new(label, matches_reference(g.get(g_), find(r)), format!("against {r}")))
    .collect();
    out.push(Assertion::new("sigma", matches_reference(&g.sigma(), find("sigma")), ""));
    out.push(within("golden", started, Duration::from_secs(1)));
    Ok(out)
}

fn relations() -> Outcome {
    let started = Instant::now();
    let mut out = Vec::new();
    for n in [4, 6] {
        let g = bmw_gens(n)?;
        out.push(Assertion::new(format!("n={n} dimension"), g.basis().len() == [3, 15][n / 2 - 2], g.basis().len().to_string()));
        out.extend(tagged(n, relation_suite(&g)));
        out.extend(tagged(n, mirror_suite(&g)));
    }
    out.push(within("relations", started, Duration::from_secs(60)));
    Ok(out)
}

fn polynomial_basis() -> Outcome {
    let fl = Flavor::bmw();
    let mut out = Vec::new();
    for n in [2, 4, 6] {
        let started = Instant::now();
        let v = bmw_basis(n)?;
        out.extend(tagged(n, basis_checks(&fl, &v)));
        if n == 6 {
            out.push(within("n=6 basis", started, Duration::from_secs(120)));
        }
    }
    Ok(out)
}

fn duality() -> Outcome {
    let fl = Flavor::bmw();
    let mut out = Vec::new();
    for n in [4, 6] {
        let (g, v) = (bmw_gens(n)?, bmw_basis(n)?);
        out.extend(tagged(n, verify_duality(&fl, &g, &v, default_route().as_ref())));
        for i in 1..n {
            let rows = dual_rows(g.get(Letter::E(i)), &v);
            let bad: Vec<String> = v
                .entries()
                .iter()
                .zip(&rows)
                .filter(|((m, _), row)| if m.connects(i, i + 1) { !is_symmetric(row, i) } else { !row.is_zero() })
                .map(|((m, _), _)| m.to_string())
                .collect();
            out.push(Assertion::new(format!("n={n} e{i} rows symmetric on joined, zero elsewhere"), bad.is_empty(), bad.join(", ")));
        }
    }
    Ok(out)
}

fn sn_factorization() -> Outcome {
    let route = default_route();
    let mut out = Vec::new();
    for fl in [Flavor::bmw(), Flavor::brauer()] {
        for n in [4, 6] {
            let mode = fl.mode();
            out.extend(
                sn_factorization_check(&fl, route.as_ref(), n)?
                    .into_iter()
                    .map(|a| Assertion { name: format!("{mode} n={n} {}", a.name), ..a }),
            );
        }
    }
    Ok(out)
}

fn pfaffian_and_cyclic() -> Outcome {
    let fl = Flavor::bmw();
    let mut out = Vec::new();
    for n in [2, 4, 6] {
        out.extend(tagged(n, pfaffian_checks(&fl, n)?.1));
    }
    for n in [4, 6] {
        let (checks, ratio) = cyclic_sum_check(&bmw_gens(n)?, &bmw_basis(n)?)?;
        let _ = writeln!(std::io::stderr(), "    cyclic constant at n={n}: {ratio}");
        out.extend(tagged(n, checks));
    }
    Ok(out)
}

fn yang_baxter() -> Outcome {
    let mut out = Vec::new();
    let (g, v) = (bmw_gens(4)?, bmw_basis(4)?);
    for i in 1..4 {
        out.push(unitarity_symbolic(&g, i)?);
    }
    for seed in [1, 2] {
        out.push(braid_check(&g, 20, seed)?);
        out.push(exchange_check(&g, &v, 20, seed)?.0);
    }
    let lg = link_generators(4)?;
    let lv = generate_basis(&Flavor::brauer(), 4, default_route().as_ref())?;
    for i in 1..4 {
        out.push(brauer_unitarity_symbolic(&lg, i));
    }
    for seed in [1, 2] {
        out.push(brauer_braid_check(&lg, 20, seed)?);
        out.push(brauer_exchange_check(&lg, &lv, 20, seed)?.0);
    }
    Ok(out)
}

fn brauer_limit() -> Outcome {
    let mut out = Vec::new();
    for n in [4, 6] {
        out.extend(tagged(n, brauer_relation_suite(&link_generators(n)?)));
    }
    for name in TBAR_ROUTES {
        let route = tbar_route(name).expect("registered route");
        out.push(degenerate_affine_check(route.as_ref(), 4, 60, 11)?);
    }
    let v = generate_basis(&Flavor::brauer(), 4, default_route().as_ref())?;
    out.push(brauer_highest_monomial_check(&v)?);
    Ok(out)
}

fn tl_collapse() -> Outcome {
    let c = Scalar::one();
    let mut out = Vec::new();
    for n in [4, 6] {
        let checks = tl_collapse_check(&bmw_gens(n)?, &bmw_basis(n)?, &c)?;
        let keep: Vec<Assertion> = checks.into_iter().filter(|a| n == 4 || a.name == "U is zero").collect();
        out.extend(tagged(n, keep));
    }
    Ok(out)
}

fn markov() -> Outcome {
    let mut out = Vec::new();
    for n in [2, 4, 6] {
        out.extend(tagged(n, markov_checks(n, &AlgebraParams::bmw(), 20, 100 + n as u64)?));
    }
    Ok(out)
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 golden n=4 matrices", golden_matrices),
        ("2 relation suite and mirror", relations),
        ("3 polynomial basis", polynomial_basis),
        ("4 duality", duality),
        ("5 S_n factorization", sn_factorization),
        ("6 pfaffian and cyclic point", pfaffian_and_cyclic),
        ("7 yang-baxter", yang_baxter),
        ("8 brauer limit", brauer_limit),
        ("9 temperley-lieb collapse", tl_collapse),
        ("10 markov trace", markov),
    ];
    let mut failed = Vec::new();
    for (label, run) in criteria {
        let started = Instant::now();
        let line = match run() {
            Ok(items) => {
                let bad: Vec<String> = items.iter().filter(|a| !a.passed()).map(|a| a.to_string()).collect();
                let status = if bad.is_empty() { "PASS" } else { "FAIL" };
                let mut line = format!("criterion {label}: {status} ({} assertions, {:.1?})", items.len(), started.elapsed());
                for b in &bad {
                    line.push_str(&format!("\n    {b}"));
                }
                if !bad.is_empty() {
                    failed.push(label);
                }
                line
            }
            Err(e) => {
                failed.push(label);
                format!("criterion {label}: FAIL (error: {e})")
            }
        };
        // bypasses the harness capture so the lines show in a plain test run
        let _ = writeln!(std::io::stderr(), "{line}");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
