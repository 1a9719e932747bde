use bmw::commands::{self, RunConfig};
use bmw::Mode;
use clap::{value_parser, Arg, ArgAction, ArgMatches, Command};
use std::io::Write;
use std::process::ExitCode;

fn global(name: &'static str, help: &'static str) -> Arg {
    Arg::new(name).long(name).global(true).help(help)
}

fn leaf(c: &dyn commands::Command) -> Command {
    let mut sub = Command::new(c.name()).about(c.summary());
    if c.name() == "trace" {
        sub = sub.arg(Arg::new("word").value_name("WORD").help("generators such as \"t1 e2 t3^-1\""));
    }
    sub
}

fn cli() -> Command {
    let mut root = Command::new("bmw")
        .about("Exact checks for the BMW algebra, its polynomial representation and the Brauer limit")
        .subcommand_required(true)
        .arg(global("n", "number of points (even)").value_parser(value_parser!(usize)).default_value("4"))
        .arg(global("mode", "coefficient field").value_parser(["bmw", "brauer"]).default_value("bmw"))
        .arg(global("seed", "seed for sampled identities").value_parser(value_parser!(u64)).default_value("0"))
        .arg(global("samples", "random specializations per sampled identity").value_parser(value_parser!(usize)).default_value("20"))
        .arg(global("output", "write the JSON report here instead of stdout"))
        .arg(global("c-prime", "normalization of E' as a scalar string"))
        .arg(global("max-n", "refuse larger n").value_parser(value_parser!(usize)).default_value("8"))
        .arg(global("route", "strategy for the dual braid generator").default_value("minus-p"))
        .arg(global("quiet", "no summary on stderr").action(ArgAction::SetTrue))
        .subcommand(Command::new("list").about("list commands and strategies"));
    let mut brauer = Command::new("brauer").about("run a command in brauer mode").subcommand_required(true);
    for c in commands::registry() {
        root = root.subcommand(leaf(*c));
        if c.modes().contains(&Mode::Brauer) {
            brauer = brauer.subcommand(leaf(*c));
        }
    }
    root.subcommand(brauer)
}

fn config(m: &ArgMatches, mode: Mode) -> RunConfig {
    RunConfig {
        n: *m.get_one("n").expect("defaulted"),
        mode,
        seed: *m.get_one("seed").expect("defaulted"),
        samples: *m.get_one("samples").expect("defaulted"),
        c_prime: m.get_one::<String>("c-prime").cloned(),
        route: m.get_one::<String>("route").cloned().expect("defaulted"),
        max_n: *m.get_one("max-n").expect("defaulted"),
        args: m.try_get_one::<String>("word").ok().flatten().into_iter().cloned().collect(),
    }
}

fn list() {
    for c in commands::registry() {
        let modes: Vec<String> = c.modes().iter().map(Mode::to_string).collect();
        println!("{:<18} {} [{}]", c.name(), c.summary(), modes.join(", "));
    }
    println!("routes: {}", bmw::polyrep::TBAR_ROUTES.join(", "));
}

fn main() -> ExitCode {
    let m = cli().get_matches();
    let (name, sub) = m.subcommand().expect("subcommand required");
    if name == "list" {
        list();
        return ExitCode::SUCCESS;
    }
    let (name, mode, leaf) = if name == "brauer" {
        let (inner, leaf) = sub.subcommand().expect("subcommand required");
        (inner, Mode::Brauer, leaf)
    } else {
        let mode = match sub.get_one::<String>("mode").map(String::as_str) {
            Some("brauer") => Mode::Brauer,
            _ => Mode::Bmw,
        };
        (name, mode, sub)
    };
    let cfg = config(leaf, mode);
    let report = match commands::run(name, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let json = report.to_json();
    match leaf.get_one::<String>("output") {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(2);
            }
        }
        None => {
            // a closed pipe is not an error of the run
            let _ = writeln!(std::io::stdout(), "{json}");
        }
    }
    if !leaf.get_flag("quiet") {
        eprintln!("{}", report.summary());
        for a in report.failures() {
            eprintln!("  {a}");
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
