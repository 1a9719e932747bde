use super::*;
use crate::error::Error;

#[test]
fn registry_names_are_unique() {
    let mut names: Vec<&str> = registry().iter().map(|c| c.name()).collect();
    let total = names.len();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), total);
    for name in names {
        assert_eq!(lookup(name).unwrap().name(), name);
    }
}

#[test]
fn config_errors() {
    let cfg = RunConfig::new(4, Mode::Bmw);
    assert!(matches!(run("nope", &cfg), Err(Error::UnknownCommand(_))));
    assert!(matches!(run("relations", &RunConfig::new(5, Mode::Bmw)), Err(Error::OddSize(5))));
    assert!(matches!(run("relations", &RunConfig::new(10, Mode::Bmw)), Err(Error::ResourceLimit(_))));
    let wide = RunConfig { max_n: 20, ..RunConfig::new(14, Mode::Bmw) };
    assert!(matches!(run("relations", &wide), Err(Error::ResourceLimit(_))));
    assert!(matches!(run("affine", &cfg), Err(Error::Unsupported(_))));
    let bad_route = RunConfig { route: "sideways".into(), ..cfg.clone() };
    assert!(matches!(run("basis", &bad_route), Err(Error::UnknownStrategy(_))));
    let bad_c = RunConfig { c_prime: Some("q +".into()), ..cfg };
    assert!(bad_c.c_prime().is_err());
}

#[test]
fn basis_n2_is_one() {
    let r = run("basis", &RunConfig::new(2, Mode::Bmw)).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    let entries = &r.artifacts["basis"]["entries"];
    assert_eq!(entries.as_array().unwrap().len(), 1);
    assert_eq!(entries[0]["matching"], serde_json::json!([[1, 2]]));
    assert_eq!(entries[0]["poly"], "1");
}

#[test]
fn small_commands_pass_and_are_deterministic() {
    let cfg = RunConfig { seed: 3, args: vec!["t1 e2 t3^-1".into()], ..RunConfig::new(4, Mode::Bmw) };
    for name in ["relations", "trace", "pfaffian", "sn-factorization", "tl-collapse", "highest-monomial"] {
        let r = run(name, &cfg).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
    }
    let once = run("trace", &cfg).unwrap().to_json();
    assert_eq!(once, run("trace", &cfg).unwrap().to_json());
    let brauer = RunConfig::new(4, Mode::Brauer);
    for name in ["relations", "affine", "projector", "highest-monomial"] {
        let r = run(name, &brauer).unwrap();
        assert!(r.passed(), "brauer {name}: {:?}", r.failures().collect::<Vec<_>>());
    }
}
