use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leibrep::fixtures;
use leibrep::io::{emit_algebra, emit_module, parse_module_document};
use leibrep::rep::LeibnizModule;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let leib2 = write(dir.path(), "leib2.json", &emit_algebra(&fixtures::leib2()));
    assert_eq!(code(&bin(&["check", s(&leib2)])), 0);

    let bad = write(dir.path(), "idem.json", &emit_algebra(&fixtures::idempotent1()));
    let out = bin(&["check", s(&bad)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("violation")).count(), 1);

    assert_eq!(code(&bin(&["check", s(&dir.path().join("missing.json"))])), 2);

    let malformed = write(dir.path(), "bad.json", r#"{"dim": 1, "products": [[0, 0, 0, "1/0"]]}"#);
    let out = bin(&["check", s(&malformed)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("products[0]"));
}

#[test]
fn invariants_report() {
    let dir = tempfile::tempdir().unwrap();
    let leib2 = write(dir.path(), "leib2.json", &emit_algebra(&fixtures::leib2()));
    let out = bin(&["invariants", s(&leib2)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for line in [
        "Leib(L): dim 1 span{[0, 1]}",
        "Z(L): dim 1 span{[0, 1]}",
        "Ann(L): dim 1 span{[0, 1]}",
        "lower central series: length 3",
        "nilpotent: true",
    ] {
        assert!(text.contains(line), "missing {line:?} in\n{text}");
    }

    let r2 = write(dir.path(), "r2.json", &emit_algebra(&fixtures::lie_r2()));
    let text = stdout(&bin(&["invariants", s(&r2)]));
    assert!(text.contains("Z(L): dim 0") && text.contains("Ann(L): dim 0") && text.contains("Leib(L): dim 0"));
    assert!(text.contains("nilpotent: false"));

    let ab = write(dir.path(), "ab.json", &emit_algebra(&fixtures::abelian(2)));
    let text = stdout(&bin(&["invariants", s(&ab)]));
    assert!(text.contains("Leib(L): dim 0") && text.contains("Z(L): dim 2") && text.contains("Ann(L): dim 2"));

    let bad = write(dir.path(), "idem.json", &emit_algebra(&fixtures::idempotent1()));
    assert_eq!(code(&bin(&["invariants", s(&bad)])), 1);
    let garbage = write(dir.path(), "garbage.json", "[]");
    assert_eq!(code(&bin(&["invariants", s(&garbage)])), 2);
}

#[test]
fn faithful_writes_certified_documents() {
    let dir = tempfile::tempdir().unwrap();
    for (alg, dim, branch) in [
        (fixtures::leib2(), 3, "construction"),
        (fixtures::lie_r2(), 2, "adjoint"),
        (fixtures::abelian(1), 2, "construction"),
    ] {
        let input = write(dir.path(), "in.json", &emit_algebra(&alg));
        let output = dir.path().join("out.json");
        assert_eq!(code(&bin(&["faithful", s(&input), "-o", s(&output)])), 0);
        let (m, cert) = parse_module_document(&fs::read_to_string(&output).unwrap()).unwrap();
        let cert = cert.expect("certificate block");
        assert_eq!(m.mod_dim(), dim);
        assert_eq!((cert.dim_v, cert.branch.as_str(), cert.kernel_dim), (dim, branch, 0));

        // same document on stdout without -o
        let out = bin(&["faithful", s(&input)]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), fs::read_to_string(&output).unwrap());
    }

    let input = write(dir.path(), "r2.json", &emit_algebra(&fixtures::lie_r2()));
    let out = bin(&["--force-construction", "faithful", s(&input)]);
    let (_, cert) = parse_module_document(&stdout(&out)).unwrap();
    assert_eq!(cert.unwrap().branch, "construction");

    let bad = write(dir.path(), "idem.json", &emit_algebra(&fixtures::idempotent1()));
    assert_eq!(code(&bin(&["faithful", s(&bad)])), 1);
    assert_eq!(code(&bin(&["faithful", s(&dir.path().join("nope.json"))])), 2);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let alg = write(dir.path(), "leib2.json", &emit_algebra(&fixtures::leib2()));
    let module = dir.path().join("v.json");
    assert_eq!(code(&bin(&["faithful", s(&alg), "-o", s(&module)])), 0);

    let out = bin(&["verify", s(&alg), s(&module)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("kernel dim: 0"));
    assert!(stdout(&out).contains("power identity: holds"));

    let zero = write(dir.path(), "zero.json", &emit_module(&LeibnizModule::zero(2, 2)));
    let out = bin(&["verify", s(&alg), s(&zero)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("kernel dim: 2"));

    // λ_{e0}: w̄0 ↦ w̄1 changed to w̄0 ↦ 2 w̄1
    let (mut m, _) = parse_module_document(&fs::read_to_string(&module).unwrap()).unwrap();
    m.lambda_mut()[0][(2, 1)] = leibrep::exactlin::rat(2);
    let tampered = write(dir.path(), "tampered.json", &emit_module(&m));
    let out = bin(&["verify", s(&alg), s(&tampered)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("residual"));

    let wrong_dim = write(dir.path(), "wrong.json", &emit_module(&LeibnizModule::zero(3, 1)));
    assert_eq!(code(&bin(&["verify", s(&alg), s(&wrong_dim)])), 2);
}

#[test]
fn corpus_runs() {
    let out = bin(&["corpus"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok")).count(), fixtures::corpus().len());

    assert_eq!(code(&bin(&["corpus", "--empty"])), 0);

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "idem.json", &emit_algebra(&fixtures::idempotent1()));
    let out = bin(&["corpus", "--include", s(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL idempotent1"));

    assert_eq!(code(&bin(&["corpus", "--include", "/nonexistent/x.json"])), 2);
}

#[test]
fn seed_flag_is_accepted() {
    assert_eq!(code(&bin(&["--seed", "7", "corpus", "--empty"])), 0);
    assert_eq!(code(&bin(&["--seed", "notanumber", "corpus"])), 2);
    assert_eq!(code(&bin(&["frobnicate"])), 2);
}
