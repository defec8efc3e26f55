use std::path::{Path, PathBuf};
use std::process::Command;

use z2z4_cli::{parse_code_file, run};

const EXAMPLES: [&str; 6] = [
    "code_13121",
    "code_34313",
    "code_13121_canonical",
    "code_34313_canonical",
    "self_dual_21201",
    "self_dual_22111",
];

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

fn data(name: &str) -> String {
    dir("data")
        .join(format!("{name}.txt"))
        .display()
        .to_string()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(dir("golden").join(name)).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("z2z4").chain(args.iter().copied()), None);
    assert_eq!(out.status, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn golden_outputs() {
    for name in EXAMPLES {
        let file = data(name);
        assert_eq!(
            ok(&["info", &file]),
            golden(&format!("{name}.info.txt")),
            "info {name}"
        );
        assert_eq!(
            ok(&["std", &file]),
            golden(&format!("{name}.std.txt")),
            "std {name}"
        );
        assert_eq!(
            ok(&["dual", "--method", "standard", &file]),
            golden(&format!("{name}.dual.txt")),
            "dual {name}"
        );
        assert_eq!(
            ok(&["check", &file]),
            golden(&format!("{name}.check.txt")),
            "check {name}"
        );
        assert_eq!(
            ok(&["--json", "info", &file]),
            golden(&format!("{name}.info.json")),
            "json {name}"
        );
    }
}

#[test]
fn documented_lines() {
    assert!(ok(&["info", &data("code_13121")]).starts_with("type (1,3;1,2;1), |C| = 32\n"));
    assert!(ok(&["dual", &data("code_13121_canonical")]).ends_with("\n1 | 1 3 1\n"));
    let check = ok(&["check", &data("self_dual_22111")]);
    assert!(check.contains("self-dual: yes\nantipodal: no\nseparable: no\n"));
}

#[test]
fn dual_methods_agree_as_codes() {
    for name in EXAMPLES {
        let file = data(name);
        let codes: Vec<_> = ["standard", "lift", "brute"]
            .iter()
            .map(|m| parse_code_file(&ok(&["dual", "--method", m, &file])).unwrap())
            .collect();
        assert!(codes[0].equals(&codes[1]).unwrap(), "{name}");
        assert!(codes[0].equals(&codes[2]).unwrap(), "{name}");
    }
}

#[test]
fn json_fields() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "check", &data("self_dual_21201")])).unwrap();
    assert_eq!(v["is_self_dual"], true);
    assert_eq!(v["replication_exponent_r"], 1);
    assert_eq!(v["cardinality"], 4);
    assert_eq!(v["rows"], serde_json::json!([[1, 1, 0], [0, 0, 2]]));
    let v: serde_json::Value = serde_json::from_str(&ok(&[
        "--json",
        "wenum",
        "--macwilliams",
        &data("self_dual_21201"),
    ]))
    .unwrap();
    assert_eq!(v["weight_enumerator"], serde_json::json!([1, 0, 2, 0, 1]));
    assert_eq!(v["dual_weight_enumerator"], v["weight_enumerator"]);
}

#[test]
fn other_commands() {
    assert_eq!(
        ok(&["wenum", "--macwilliams", &data("self_dual_21201")]),
        "type (2,1;2,0;1), |C| = 4\nweight enumerator: 1 0 2 0 1\ndual weight enumerator: 1 0 2 0 1\n"
    );
    assert_eq!(
        ok(&["gray", &data("self_dual_21201")]),
        "(11|0) -> 1100\n(00|2) -> 0011\n"
    );
    assert_eq!(
        ok(&["gray", "--all", &data("self_dual_21201")]),
        "(00|0) -> 0000\n(00|2) -> 0011\n(11|0) -> 1100\n(11|2) -> 1111\n"
    );
    let fam = ok(&["family", "c", "--kappa", "2", "--delta", "1", "--beta", "4"]);
    let c = parse_code_file(&fam).unwrap();
    assert_eq!(c.generators().len(), 5);
    assert!(fam.contains("self-dual: yes"));
}

#[test]
fn parse_errors_carry_location() {
    let tmp = std::env::temp_dir().join(format!("z2z4-bad-{}.txt", std::process::id()));
    std::fs::write(&tmp, "alpha=1 beta=3\n1 | 4 0 0\n").unwrap();
    let out = run(["z2z4", "info", tmp.to_str().unwrap()], None);
    std::fs::remove_file(&tmp).unwrap();
    assert_eq!(out.status, 1);
    assert!(out.stderr.contains(":line 2:"), "{}", out.stderr);
    assert!(out.stderr.contains("`4`"), "{}", out.stderr);
}

#[test]
fn caps_give_exit_status_two() {
    let file = data("code_34313_canonical");
    let out = run(["z2z4", "--cap", "16", "info", &file], None);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("exceeds the cap of 16"));
    assert_eq!(
        run(["z2z4", "dual", "--method", "brute", &file], Some("2^10")).status,
        2
    );
    assert_eq!(
        run(
            ["z2z4", "--cap", "2^11", "dual", "--method", "brute", &file],
            Some("2^10")
        )
        .status,
        0
    );
    assert_eq!(run(["z2z4", "info", &file], Some("nonsense")).status, 1);
    // The canonical form needs no enumeration.
    assert_eq!(run(["z2z4", "--cap", "1", "std", &file], None).status, 0);
}

#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_z2z4");
    let out = Command::new(bin)
        .args(["info", &data("code_13121")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("code_13121.info.txt")
    );
    let out = Command::new(bin)
        .env("Z2Z4_CAP", "4")
        .args(["info", &data("code_13121")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["info"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_stable() {
    for name in EXAMPLES {
        let file = data(name);
        for cmd in [
            &["std", file.as_str()][..],
            &["dual", "--method", "lift", file.as_str()],
            &["gray", "--all", file.as_str()],
        ] {
            assert_eq!(ok(cmd), ok(cmd));
        }
    }
}
