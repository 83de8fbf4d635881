//! End-to-end checks of the oriflip binary: byte-reproducible output,
//! golden files, exit codes, and agreement with the library.

use oriflip::document::{parse_document, serialize_document};
use oriflip::pattern::{miura, square, twist, Mv, MvAssignment, PatternSpec};
use oriflip::validity::is_locally_valid;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oriflip"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn oriflip")
}

fn run_ok(args: &[&str]) -> Vec<u8> {
    let out = run(args);
    assert!(
        out.status.success(),
        "oriflip {args:?} failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn oriflip");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn gen_to(dir: &std::path::Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_str().unwrap().to_string();
    let mut full: Vec<&str> = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    run_ok(&full);
    path
}

#[test]
fn criterion_13_cli_output_is_byte_reproducible() {
    // gen, canonical and seeded-random
    let gen_tri = ["gen", "--family", "triangle", "--m", "2", "--n", "2"];
    let a = run_ok(&gen_tri);
    assert_eq!(
        a,
        run_ok(&gen_tri),
        "criterion 13: FAIL: gen (canonical) differs across runs"
    );
    assert_eq!(
        a,
        include_bytes!("golden/tri2x2_canonical.json"),
        "criterion 13: FAIL: canonical 2x2 triangle document drifted from the golden file"
    );
    let gen_rand = [
        "gen", "--family", "square", "--m", "4", "--n", "4", "--mv", "random-valid", "--seed", "42",
    ];
    assert_eq!(
        run_ok(&gen_rand),
        run_ok(&gen_rand),
        "criterion 13: FAIL: gen (random-valid, fixed seed) differs across runs"
    );

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let sq_a = gen_to(d, "sq_a.json", &["--family", "square", "--m", "2", "--n", "2"]);
    let sq_b = gen_to(
        d,
        "sq_b.json",
        &["--family", "square", "--m", "2", "--n", "2", "--mv", "random-valid", "--seed", "3"],
    );
    let mi_a = gen_to(d, "mi_a.json", &["--family", "miura", "--m", "2", "--n", "3"]);
    let mi_b = gen_to(
        d,
        "mi_b.json",
        &["--family", "miura", "--m", "2", "--n", "3", "--mv", "random-valid", "--seed", "11"],
    );
    let tri_a = gen_to(
        d,
        "tri_a.json",
        &["--family", "triangle", "--m", "2", "--n", "2", "--mv", "random-valid", "--seed", "7"],
    );
    let tri_b = gen_to(
        d,
        "tri_b.json",
        &["--family", "triangle", "--m", "2", "--n", "2", "--mv", "random-valid", "--seed", "8"],
    );

    for args in [
        vec!["minflip", "--family", "square", sq_a.as_str(), sq_b.as_str()],
        vec!["minflip", "--family", "miura", mi_a.as_str(), mi_b.as_str()],
        vec!["reconfigure", "--to-canonical", tri_a.as_str()],
        vec!["reconfigure", tri_a.as_str(), tri_b.as_str()],
    ] {
        assert_eq!(
            run_ok(&args),
            run_ok(&args),
            "criterion 13: FAIL: {} differs across runs",
            args[0]
        );
    }

    let golden_doc = d.join("golden.json").to_str().unwrap().to_string();
    std::fs::write(&golden_doc, include_bytes!("golden/tri2x2_canonical.json")).unwrap();
    let render = ["render", "--labels", golden_doc.as_str()];
    assert_eq!(
        run_ok(&render),
        run_ok(&render),
        "criterion 13: FAIL: render differs across runs"
    );
    assert_eq!(
        run_ok(&["render", golden_doc.as_str()]),
        include_bytes!("golden/tri2x2_canonical.svg"),
        "criterion 13: FAIL: rendered SVG drifted from the golden file"
    );
    println!("criterion 13: PASS: gen, minflip, reconfigure, and render are byte-identical across runs and match the checked-in golden files");
}

#[test]
fn gen_example_square_3x5_prints_a_document() {
    let out = run_ok(&["gen", "--family", "square", "--m", "3", "--n", "5", "--mv", "canonical"]);
    let (p, mu) = parse_document(std::str::from_utf8(&out).unwrap()).unwrap();
    assert_eq!(p.spec, PatternSpec::Square { rows: 3, cols: 5 });
    assert_eq!(p.face_count(), 15);
    assert!(is_locally_valid(&mu, &p));
}

#[test]
fn check_example_all_mountain_fails_with_maekawa_verdicts() {
    let p = square::build_square_grid(2, 2).unwrap();
    let text = serialize_document(&p, &MvAssignment::uniform(&p, Mv::Mountain));
    let out = run_stdin(&["check", "-"], &text);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("violates maekawa"), "{stdout}");
    assert!(stdout.contains("invalid:"), "{stdout}");
}

#[test]
fn minflip_example_agrees_with_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = gen_to(d, "a.json", &["--family", "miura", "--m", "2", "--n", "3"]);
    let b = gen_to(
        d,
        "b.json",
        &["--family", "miura", "--m", "2", "--n", "3", "--mv", "random-valid", "--seed", "11"],
    );
    let out = String::from_utf8(run_ok(&["minflip", "--family", "miura", &a, &b])).unwrap();
    let reported: usize = out
        .lines()
        .find_map(|l| l.strip_prefix("length: "))
        .expect("length line")
        .parse()
        .unwrap();
    let (p, mua) = parse_document(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let (_, mub) = parse_document(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(reported, miura_distance(&mua, &mub, &p));
    // the printed faces are the sequence itself, one id per line
    let faces = out.lines().take_while(|l| !l.starts_with("length")).count();
    assert_eq!(faces, reported);
}

fn miura_distance(
    a: &MvAssignment,
    b: &MvAssignment,
    p: &oriflip::CreasePattern,
) -> usize {
    oriflip::miura_minflip::min_flip_distance(a, b, p).unwrap()
}

#[test]
fn flip_is_an_involution_on_documents() {
    let out = run_ok(&["gen", "--family", "square", "--m", "2", "--n", "2"]);
    let text = std::str::from_utf8(&out).unwrap();
    let once = run_stdin(&["flip", "-", "-f", "3"], text);
    assert!(once.status.success());
    let twice = run_stdin(&["flip", "-", "-f", "3"], std::str::from_utf8(&once.stdout).unwrap());
    assert_eq!(twice.stdout, out);
}

#[test]
fn check_exit_code_agrees_with_is_locally_valid_on_fuzzed_documents() {
    let patterns = [
        square::build_square_grid(2, 2).unwrap(),
        miura::build_miura(2, 2, oriflip::exact::rat(60, 1)).unwrap(),
        twist::build_square_twist(1, 1).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(20260816);
    for i in 0..1000 {
        let p = &patterns[i % patterns.len()];
        let mut mu = MvAssignment::uniform(p, Mv::Mountain);
        for v in mu.values.iter_mut() {
            *v = if rng.gen::<bool>() { Mv::Mountain } else { Mv::Valley };
        }
        let text = serialize_document(p, &mu);
        let out = run_stdin(&["check", "-"], &text);
        let expect = if is_locally_valid(&mu, p) { 0 } else { 1 };
        assert_eq!(
            out.status.code(),
            Some(expect),
            "doc {i} ({}): check disagrees with the library\n{}",
            p.family().name(),
            text
        );
    }
}

#[test]
fn usage_errors_exit_2_and_domain_errors_exit_1() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "nope", "--m", "1", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["gen", "--family", "triangle", "--radius", "1", "--m", "2"]).status.code(),
        Some(2),
        "radius and rows together should be a usage error"
    );
    assert_eq!(run(&["check", "/nonexistent/x.json"]).status.code(), Some(1));
    let junk = run_stdin(&["check", "-"], "{\"format_version\": 9}");
    assert_eq!(junk.status.code(), Some(1));
}

#[test]
fn parse_rejects_single_rule_mutations_of_a_valid_fixture() {
    let fixture = include_str!("golden/tri2x2_canonical.json");
    parse_document(fixture).expect("fixture parses");
    // each mutation breaks exactly one schema rule
    let mutations = [
        fixture.replace("\"format_version\": 1", "\"format_version\": 2"),
        fixture.replace("\"family\": \"triangle\"", "\"family\": \"pentagon\""),
        fixture.replace("\"rows\": 2,", ""),
        fixture.replace("\"edge\": \"m:0:0\"", "\"edge\": \"m:9:9\""),
        fixture.replace("\"edge\": \"m:0:1\"", "\"edge\": \"m:0:0\""),
        fixture.replace("\"mv\": \"M\"", "\"mv\": \"W\""),
        fixture.replace("\"assignment\"", "\"assignments\""),
        fixture.replacen(",\n    {\n      \"edge\": \"v:1:2\",\n      \"mv\": \"V\"\n    }", "", 1),
    ];
    for (i, text) in mutations.iter().enumerate() {
        assert_ne!(text.as_str(), fixture, "mutation {i} did not change the fixture");
        assert!(
            parse_document(text).is_err(),
            "mutation {i} should be rejected:\n{text}"
        );
    }
    // and the binary agrees
    let out = run_stdin(&["check", "-"], &mutations[0]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_from_file_reuses_the_assignment() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let src = gen_to(
        d,
        "src.json",
        &["--family", "square", "--m", "2", "--n", "2", "--mv", "random-valid", "--seed", "5"],
    );
    let out = run_ok(&[
        "gen", "--family", "square", "--m", "2", "--n", "2", "--mv", "from-file", "--mv-file", &src,
    ]);
    assert_eq!(out, std::fs::read(&src).unwrap());
    // a mismatched pattern is a domain failure
    let status = run(&[
        "gen", "--family", "square", "--m", "3", "--n", "3", "--mv", "from-file", "--mv-file", &src,
    ])
    .status;
    assert_eq!(status.code(), Some(1));
}

#[test]
fn library_documents_are_accepted_verbatim_by_check() {
    let p = miura::build_miura(2, 2, oriflip::exact::rat(45, 2)).unwrap();
    let text = serialize_document(&p, &miura::canonical_mv(&p));
    let out = run_stdin(&["check", "-"], &text);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
