//! End-to-end tests of the binary: spawn it, check stdout and exit codes,
//! and cross-check outputs against direct library calls.

use qperfect::codec::{CodeFile, PartitionFile};
use qperfect::embed::build_embedding;
use qperfect::partition::build_partition;
use qperfect::{create_field, Word};
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qperfect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qperfect-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir
}

const PAIR_PARTITION: &str =
    "q=2 n=3 parts=4\npart 1\n0 0 0\n1 1 1\npart 2\n0 0 1\n1 1 0\npart 3\n0 1 0\n1 0 1\npart 4\n1 0 0\n0 1 1\n";

const PAIR_SPEC: &str = "spec=partition q=2 s=3\npart 1\n0 0 0\n1 1 1\npart 2\n0 0 1\n1 1 0\npart 3\n0 1 0\n1 0 1\npart 4\n1 0 0\n0 1 1\n";

#[cfg(unix)]
#[test]
fn closed_pipe_kills_the_process_quietly() {
    use std::process::Stdio;
    // The (2,8) line listing is a few hundred KiB, well past the pipe
    // buffer, so the writes must hit a closed descriptor.
    let mut child = Command::new(env!("CARGO_BIN_EXE_qperfect"))
        .args(["geometry", "--q", "2", "--m", "8", "--lines"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    drop(child.stdout.take());
    let status = child.wait().expect("child exits");
    let mut err = String::new();
    use std::io::Read;
    child.stderr.take().unwrap().read_to_string(&mut err).unwrap();
    assert!(!err.contains("panic"), "panicked on broken pipe: {err}");
    assert!(!status.success());
}

#[test]
fn geometry_summary_and_points() {
    let out = run(&["geometry", "--q", "2", "--m", "3", "--points"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("q=2 m=3 n=7 points=7 lines=7 planes=1\n"), "{text}");
    assert!(text.contains("0: 1.0.0\n"), "{text}");
    assert!(text.contains("6: 1.1.1\n"), "{text}");
}

#[test]
fn geometry_line_listing_matches_counts() {
    let out = run(&["geometry", "--q", "2", "--m", "4", "--lines"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("q=2 m=4 n=15 points=15 lines=35 planes=15\n"), "{text}");
    // Header plus one row per line.
    assert_eq!(text.lines().count(), 36);
}

#[test]
fn components_output_matches_the_library() {
    let out = run(&["components", "--q", "2", "--m", "3", "--delta", "1.1.1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("dim=3\n"), "{text}");

    let f = create_field(2).unwrap();
    let h = qperfect::hamming::HammingCode::new(f.clone(), 3).unwrap();
    let delta = qperfect::codec::point_from_dots(&f, "1.1.1").unwrap();
    let basis = qperfect::components::component_basis(&h, &delta).unwrap();
    for row in basis.rows() {
        assert!(text.contains(&row.to_string()), "missing basis row {row}");
    }
}

#[test]
fn embed_writes_the_code_and_reports_shorten() {
    let dir = scratch("embed");
    let input = dir.join("c.code");
    let output = dir.join("p.code");
    std::fs::write(&input, "q=2 n=3\n0 0 0\n1 1 1\n").unwrap();

    let out = run(&[
        "embed", "--q", "2", "--m", "4",
        "--code", input.to_str().unwrap(),
        "--out", output.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("q=2 m=4 n=15\n"), "{text}");
    assert!(text.contains("code words: 2\n"), "{text}");
    assert!(text.contains("embedded words: 2048\n"), "{text}");
    assert!(text.contains("shorten: OK\n"), "{text}");

    let written = CodeFile::load(&output).unwrap();
    assert_eq!(written.words.len(), 2048);

    let f = create_field(2).unwrap();
    let words = vec![
        Word::new(&f, vec![0, 0, 0]).unwrap(),
        Word::new(&f, vec![1, 1, 1]).unwrap(),
    ];
    let spec = build_embedding(&f, &words, 4).unwrap();
    let mut expected = spec.enumerate(1 << 20).unwrap();
    expected.sort();
    assert_eq!(written.words, expected);
}

#[test]
fn embed_oracle_only_writes_a_description() {
    let dir = scratch("oracle");
    let input = dir.join("rep.code");
    let output = dir.join("rep.spec");
    std::fs::write(&input, "q=4 n=3\n0 0 0\n1 1 1\n2 2 2\n3 3 3\n").unwrap();

    let out = run(&[
        "embed", "--q", "4", "--m", "4",
        "--code", input.to_str().unwrap(),
        "--out", output.to_str().unwrap(),
        "--oracle-only",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("q=4 m=4 n=85\n"), "{text}");
    assert!(text.contains("embedded words: 4^81\n"), "{text}");
    assert!(text.contains("shorten: OK\n"), "{text}");
    let description = std::fs::read_to_string(&output).unwrap();
    assert!(description.starts_with("spec=embed q=4 m=4\n"), "{description}");
}

#[test]
fn verify_perfect_passes_and_fails_with_witness() {
    let dir = scratch("verify-perfect");
    let input = dir.join("c.code");
    let output = dir.join("p.code");
    std::fs::write(&input, "q=2 n=3\n0 0 0\n1 1 1\n").unwrap();
    let built = run(&[
        "embed", "--q", "2", "--m", "4",
        "--code", input.to_str().unwrap(),
        "--out", output.to_str().unwrap(),
    ]);
    assert_eq!(code(&built), 0);

    let pass = run(&["verify", "perfect", "--code", output.to_str().unwrap()]);
    assert_eq!(code(&pass), 0);
    assert!(stdout(&pass).starts_with("PASS (exhaustive: 32768 words scanned"));

    let sampled = run(&[
        "verify", "perfect", "--code", output.to_str().unwrap(),
        "--sampled", "200", "--seed", "5",
    ]);
    assert_eq!(code(&sampled), 0);
    assert_eq!(stdout(&sampled), "PASS (sampled: seed=5 trials=200)\n");

    // A lone codeword covers only 4 of the 8 words; 011 is the first miss.
    let broken = dir.join("broken.code");
    std::fs::write(&broken, "q=2 n=3\n0 0 0\n").unwrap();
    let fail = run(&["verify", "perfect", "--code", broken.to_str().unwrap()]);
    assert_eq!(code(&fail), 1);
    assert_eq!(stdout(&fail), "FAIL witness: 0 1 1\n");
}

#[test]
fn verify_perfect_accepts_a_construction_oracle() {
    let dir = scratch("verify-construction");
    let spec = dir.join("embed.spec");
    std::fs::write(&spec, "spec=embed q=2 m=4\n0 0 0\n1 1 1\n").unwrap();
    let out = run(&["verify", "perfect", "--construction", spec.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("PASS (exhaustive: 32768"));
}

#[test]
fn verify_one_code_exit_codes() {
    let dir = scratch("verify-1code");
    let good = dir.join("good.code");
    std::fs::write(&good, "q=2 n=3\n0 0 0\n1 1 1\n").unwrap();
    let ok = run(&["verify", "1code", "--code", good.to_str().unwrap()]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).starts_with("PASS"));

    let bad = dir.join("bad.code");
    std::fs::write(&bad, "q=2 n=3\n0 0 0\n0 0 1\n").unwrap();
    let fail = run(&["verify", "1code", "--code", bad.to_str().unwrap()]);
    assert_eq!(code(&fail), 1);
    assert_eq!(stdout(&fail), "FAIL witness pair: 0 0 0 / 0 0 1\n");
}

#[test]
fn embed_partition_flow_and_verification() {
    let dir = scratch("embed-partition");
    let input = dir.join("in.part");
    let output = dir.join("out.part");
    std::fs::write(&input, PAIR_PARTITION).unwrap();

    let out = run(&[
        "embed-partition", "--q", "2", "--s", "3",
        "--partition", input.to_str().unwrap(),
        "--out", output.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("q=2 s=3 n=15\n"), "{text}");
    assert!(text.contains("parts=16\n"), "{text}");
    for j in 1..=4 {
        assert!(text.contains(&format!("P{j} shorten: OK\n")), "{text}");
    }

    let written = PartitionFile::load(&output).unwrap();
    assert_eq!(written.parts.len(), 16);
    assert!(written.parts.iter().all(|(_, ws)| ws.len() == 2048));
    assert_eq!(written.parts[0].0, "P1");
    assert_eq!(written.parts[4].0, "O0.0.0");

    let verified = run(&["verify", "partition", "--partition", output.to_str().unwrap()]);
    assert_eq!(code(&verified), 0, "{}", stdout(&verified));
    assert!(stdout(&verified).contains("part P1: PASS"));
}

#[test]
fn verify_partition_construction_oracle_sampled() {
    let dir = scratch("verify-partition-spec");
    let spec = dir.join("lift.spec");
    std::fs::write(&spec, PAIR_SPEC).unwrap();
    let out = run(&[
        "verify", "partition", "--construction", spec.to_str().unwrap(),
        "--sampled", "60", "--seed", "9",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.starts_with("tiling: PASS"), "{text}");
    assert!(text.contains("part O0.0.0: PASS"), "{text}");
}

#[test]
fn classify_matches_the_library() {
    let dir = scratch("classify");
    let spec = dir.join("lift.spec");
    std::fs::write(&spec, PAIR_SPEC).unwrap();

    let zeros = ["0"; 15].join(" ");
    let out = run(&["classify", "--spec", spec.to_str().unwrap(), "--word", &zeros]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout(&out), "O0.0.0\n");

    let f = create_field(2).unwrap();
    let classes: Vec<Vec<Word>> = [[0u64, 7], [1, 6], [2, 5], [4, 3]]
        .iter()
        .map(|p| p.iter().map(|&r| Word::from_rank(&f, 3, r)).collect())
        .collect();
    let lifted = build_partition(&f, &classes, 3).unwrap();
    for rank in [1u64, 333, 12345, 32767] {
        let w = Word::from_rank(&f, 15, rank);
        let arg = w.to_string();
        let got = run(&["classify", "--spec", spec.to_str().unwrap(), "--word", &arg]);
        assert_eq!(code(&got), 0);
        assert_eq!(stdout(&got).trim(), lifted.classify(&w).unwrap().to_string());
    }
}

#[test]
fn contains_reports_membership_through_exit_codes() {
    let dir = scratch("contains");
    let espec = dir.join("embed.spec");
    std::fs::write(&espec, "spec=embed q=2 m=4\n0 0 0\n1 1 1\n").unwrap();

    // delta = (1,0,0,0) is the first coordinate: its unit word enters the
    // embedded code and the zero word leaves it.
    let mut unit = vec!["0"; 15];
    unit[0] = "1";
    let yes = run(&[
        "contains", "--spec", espec.to_str().unwrap(),
        "--word", &unit.join(" "),
    ]);
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes), "true\n");

    let zeros = ["0"; 15].join(" ");
    let no = run(&["contains", "--spec", espec.to_str().unwrap(), "--word", &zeros]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no), "false\n");

    let pspec = dir.join("lift.spec");
    std::fs::write(&pspec, PAIR_SPEC).unwrap();
    let swap = run(&[
        "contains", "--spec", pspec.to_str().unwrap(),
        "--part", "O0.0.0", "--word", &zeros,
    ]);
    assert_eq!(code(&swap), 0);
    assert_eq!(stdout(&swap), "true\n");
    let not_in_p1 = run(&[
        "contains", "--spec", pspec.to_str().unwrap(),
        "--part", "P1", "--word", &zeros,
    ]);
    assert_eq!(code(&not_in_p1), 1);
    assert_eq!(stdout(&not_in_p1), "false\n");

    let missing_part = run(&["contains", "--spec", pspec.to_str().unwrap(), "--word", &zeros]);
    assert_eq!(code(&missing_part), 2);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = scratch("usage");
    let missing = dir.join("nope.code");
    let out = run(&["verify", "perfect", "--code", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let both = run(&["verify", "perfect", "--code", "a", "--construction", "b"]);
    assert_eq!(code(&both), 2);

    let q3 = dir.join("q3.code");
    std::fs::write(&q3, "q=3 n=3\n0 0 0\n").unwrap();
    let out_path = dir.join("out.code");
    let mismatch = run(&[
        "embed", "--q", "2", "--m", "4",
        "--code", q3.to_str().unwrap(),
        "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&mismatch), 2);
    assert!(String::from_utf8_lossy(&mismatch.stderr).contains("--q"));

    let espec = dir.join("embed.spec");
    std::fs::write(&espec, "spec=embed q=2 m=4\n").unwrap();
    let wrong_kind = run(&["classify", "--spec", espec.to_str().unwrap(), "--word", "0"]);
    assert_eq!(code(&wrong_kind), 2);

    let malformed = dir.join("broken.code");
    std::fs::write(&malformed, "q=2 n=3\n0 0\n").unwrap();
    let parse = run(&["verify", "perfect", "--code", malformed.to_str().unwrap()]);
    assert_eq!(code(&parse), 2);
    assert!(String::from_utf8_lossy(&parse.stderr).contains("line 2"));
}
