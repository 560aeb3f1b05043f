use std::process::{Command, Output};

fn hl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hl")).args(args).output().expect("run hl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = hl(&["p", "--lambda", "[2,0]", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1^2 - x1*x2*t + x1*x2 + x2^2");

    let o = hl(&["pf", "--kind", "UU", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let got: hlboson::algebra::LaurentPoly = stdout(&o).trim().parse().unwrap();
    assert_eq!(got, "(1 - t)*(1 - z^2)".parse().unwrap());

    let o = hl(&["verify", "--identity", "4", "--n", "1", "--order", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["identity"], 4);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    for key in ["n", "order", "seconds"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn same_config_same_bytes() {
    for args in [
        &["q", "--lambda", "[2,1,0]", "--n", "3"][..],
        &["k", "--lambda", "[1,0]", "--n", "2", "--gamma", "formal", "--delta", "1/3", "--json"],
        &["pf-props", "--kind", "OS", "--n", "2", "--json"],
        &["fbasis-check", "--n", "2", "--json"],
    ] {
        let (a, b) = (hl(args), hl(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn bindings_are_exact() {
    let o = hl(&["p", "--lambda", "[2,0]", "--n", "2", "--t", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hl(&["p", "--lambda", "[2,0]", "--n", "2", "--t", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x1^2 + x1*x2 + x2^2");
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["verify", "--identity", "9", "--n", "1", "--order", "2"],
        &["verify", "--identity", "1", "--n", "7", "--order", "2"],
        &["p", "--lambda", "[1,2]", "--n", "2"],
        &["p", "--lambda", "[1]", "--n", "2"],
        &["pf", "--kind", "XX", "--n", "1"],
        &["pf", "--kind", "DW", "--n", "9"],
        &["fbasis-check", "--n", "4"],
    ] {
        assert_eq!(hl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn worker_variable_is_honoured() {
    let run = |w: &str| {
        Command::new(env!("CARGO_BIN_EXE_hl"))
            .args(["verify", "--identity", "1", "--n", "2", "--order", "2"])
            .env("HL_WORKERS", w)
            .output()
            .unwrap()
    };
    assert_eq!(run("1").status.code(), Some(0));
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(run("lots").status.code(), Some(2));
}
