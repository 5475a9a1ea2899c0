use std::process::{Command, Output};

use kfq_cli::report::{ConnectingReport, KGroupReport, RingTableReport, VerifyReport};

fn kfq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfq")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kgroups_q5_m2() {
    let o = kfq(&["kgroups", "--q", "5", "--m", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: KGroupReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.degrees[0].rank, r.degrees[1].rank), (12, 12));
    assert!(r.comparison.success);
    assert_eq!(r.generators.len(), 24);
    assert!(r.generators.iter().all(|g| g.chi >= 1 && g.chi <= 3));
}

#[test]
fn kgroups_q2_vanishes() {
    let o = kfq(&["kgroups", "--q", "2", "--m", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: KGroupReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.degrees.iter().all(|d| d.rank == 0));
    assert!(r.generators.is_empty());
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(code(&kfq(&["kgroups", "--q", "6"])), 2);
    assert_eq!(code(&kfq(&["kgroups", "--q", "1"])), 2);
    assert_eq!(code(&kfq(&["kgroups", "--q", "3", "--format", "yaml"])), 2);
    assert_eq!(code(&kfq(&["verify", "--q", "3", "--precision", "0"])), 2);
    assert_eq!(code(&kfq(&["colimit", "--q", "2", "--matrix", "6"])), 2);
    assert_eq!(code(&kfq(&["colimit", "--q", "3", "--matrix", "2,1;1"])), 2);
}

#[test]
fn caps_exit_3() {
    assert_eq!(code(&kfq(&["connecting-matrix", "--q", "9", "--n", "1"])), 3);
    assert_eq!(code(&kfq(&["kgroups", "--q", "3", "--cap", "1"])), 3);
}

#[test]
fn connecting_matrices() {
    let o = kfq(&["connecting-matrix", "--q", "3", "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("[[2, 1], [1, 2]]\nPASS"));
    let o = kfq(&["connecting-matrix", "--q", "4", "--n", "1", "--format", "json"]);
    let r: ConnectingReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.pass);
    assert_eq!(r.matrix.len(), 3);
    let o = kfq(&["connecting-matrix", "--q", "2", "--n", "2"]);
    assert!(stdout(&o).starts_with("[[2]]\nPASS"));
}

#[test]
fn verify_and_negative_control() {
    let o = kfq(&["verify", "--q", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.passed && r.checks.iter().all(|c| c.passed));
    let o = kfq(&["verify", "--q", "4", "--mvn-levels", "1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = kfq(&["verify", "--q", "3", "--corrupt-w"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL w_chi1 w* = 1")));
}

#[test]
fn json_round_trips() {
    let o = kfq(&["kgroups", "--q", "4", "--m", "3", "--format", "json"]);
    let text = stdout(&o);
    let r: KGroupReport = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
    assert_eq!(again, text);
    let o = kfq(&["ring-table", "--q", "3", "--m", "1", "--format", "json"]);
    let r: RingTableReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(serde_json::from_str::<RingTableReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
}

#[test]
fn runs_are_deterministic() {
    let args = ["kgroups", "--q", "5", "--m", "3", "--format", "json"];
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v.to_string()
    };
    assert_eq!(strip(kfq(&args)), strip(kfq(&args)));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("kfq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("irr.txt");
    let o = kfq(&["irreducibles", "--q", "3", "--m", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "f_1 = 1+T\nf_2 = 1+2T\nf_3 = 1+T^2\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn colimit_report() {
    let o = kfq(&["colimit", "--q", "3", "--n", "2"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert!(s.contains("colimit: Z[1/3]^1 + Z^1"));
    assert!(s.contains("iota_2(e_1) = (-4/9, 1)"));
}
