//! End-to-end behavior of the `piecespace` binary: exit codes, exact
//! stdout bytes, stream separation, and batch-mode line discipline.

use std::path::PathBuf;
use std::process::Command;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn piecespace(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_piecespace"))
        .args(args)
        .output()
        .unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("piecespace-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn count_prints_bare_exact_digits() {
    let run = piecespace(&["count", "KNNNNvkq"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "130455400320\n");
    assert_eq!(run.stderr, "");

    assert_eq!(piecespace(&["count", "v"]).stdout, "1\n");
    assert_eq!(
        piecespace(&["count", "KNNNNvkq", "--stm-factor"]).stdout,
        "260910800640\n"
    );
    assert_eq!(
        piecespace(&["count", "KQRv", "--board", "1x6"]).stdout,
        "120\n"
    );
    assert_eq!(
        piecespace(&["count", "KNNNNvKRR"]).stdout,
        "3717978909120\n"
    );
}

#[test]
fn parse_errors_exit_1_and_keep_stdout_clean() {
    let run = piecespace(&["count", "KXvk"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.stdout, "");
    assert!(run.stderr.contains("'X'") && run.stderr.contains("position 2"));

    let run = piecespace(&["count", "KNvk", "--board", "99x1"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.stdout, "");

    let run = piecespace(&["count", "KNvk", "--board", "nonsense"]);
    assert_eq!(run.code, 1);

    // unknown flags are usage errors
    assert_eq!(piecespace(&["count", "Kvk", "--frobnicate"]).code, 1);
    // help and version are not errors
    assert_eq!(piecespace(&["--help"]).code, 0);
    assert_eq!(piecespace(&["count", "--help"]).code, 0);
}

#[test]
fn domain_errors_exit_2() {
    // enumeration budget: a 7-piece space is ~3.1e12 raw sequences
    let run = piecespace(&["enumerate", "KNNNNvkq"]);
    assert_eq!(run.code, 2);
    assert_eq!(run.stdout, "");
    assert!(run.stderr.contains("budget"));
    assert!(run.stderr.contains("3130929607680"));

    // chess validation failure
    let run = piecespace(&["legal-exact", "KKvk", "--stm", "w"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("multiple-kings"));

    let run = piecespace(&["legal-sample", "Qvk", "--samples", "10", "--seed", "1", "--stm", "b"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("missing-king"));

    // zero samples is a domain error from the estimator
    let run = piecespace(&["legal-sample", "Kvk", "--samples", "0", "--seed", "1", "--stm", "w"]);
    assert_eq!(run.code, 2);

    // c4 on a rectangle
    let run = piecespace(&["classes", "Kvk", "--board", "2x3", "--group", "c4"]);
    assert_eq!(run.code, 2);

    // ratio over an impossible (zero-sized) space
    let run = piecespace(&["ratio", "--examined", "5", "KQRBNvkqrbn", "--board", "2x2"]);
    assert_eq!(run.code, 2);
}

#[test]
fn enumerate_streams_deterministic_placements() {
    let first = piecespace(&["enumerate", "Nvn", "--board", "1x3"]);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, "1/n/N\nn/1/N\n1/N/n\nn/N/1\nN/1/n\nN/n/1\n");
    let second = piecespace(&["enumerate", "Nvn", "--board", "1x3"]);
    assert_eq!(second.stdout, first.stdout);

    let limited = piecespace(&["enumerate", "Kvk", "--limit", "2", "--stm", "b"]);
    assert_eq!(limited.stdout, "8/8/8/8/8/8/8/Kk6 b\n8/8/8/8/8/8/8/K1k5 b\n");

    // an oversized set simply enumerates nothing
    let empty = piecespace(&["enumerate", "KQRBNv", "--board", "2x2"]);
    assert_eq!(empty.code, 0);
    assert_eq!(empty.stdout, "");
}

#[test]
fn legal_exact_reports_reference_values() {
    for stm in ["w", "b"] {
        let run = piecespace(&["legal-exact", "Kvk", "--stm", stm, "--json"]);
        assert_eq!(run.code, 0);
        let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
        assert_eq!(v["legal"], "3612");
        assert_eq!(v["total"], "4032");
        assert_eq!(v["fraction"], "0.895833");
    }
    // an asymmetric 3-piece set, frozen from an independent brute-force oracle
    let run = piecespace(&["legal-exact", "KQvk", "--stm", "w", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["legal"], "144508");
    assert_eq!(v["total"], "249984");
}

#[test]
fn legal_sample_is_byte_reproducible() {
    let args = [
        "legal-sample",
        "Kvk",
        "--samples",
        "30000",
        "--seed",
        "42",
        "--stm",
        "w",
        "--json",
    ];
    let first = piecespace(&args);
    assert_eq!(first.code, 0);
    let second = piecespace(&args);
    assert_eq!(first.stdout, second.stdout, "same seed, same bytes");

    let other_seed = piecespace(&[
        "legal-sample",
        "Kvk",
        "--samples",
        "30000",
        "--seed",
        "43",
        "--stm",
        "w",
        "--json",
    ]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn classes_reports_class_and_raw_counts() {
    let run = piecespace(&["classes", "Qvk", "--board", "2x2", "--group", "c4", "--json"]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["classes"], "3");
    assert_eq!(v["placements"], "12");

    // default group: c4 on square boards, r180 otherwise
    let square = piecespace(&["classes", "Qv", "--board", "4x4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&square.stdout).unwrap();
    assert_eq!(v["group"], "c4");
    assert_eq!(v["classes"], "4"); // 16 squares / 4 rotations, no fixed square
    let rect = piecespace(&["classes", "Qv", "--board", "2x4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&rect.stdout).unwrap();
    assert_eq!(v["group"], "r180");
    assert_eq!(v["classes"], "4");

    // identity group on the headline set leaves the raw count untouched
    let id = piecespace(&["classes", "KNNNNvkq", "--group", "id", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&id.stdout).unwrap();
    assert_eq!(v["classes"], "130455400320");
    assert_eq!(v["placements"], "130455400320");

    // pawned sets get a warning on stderr, never in the data stream
    let warned = piecespace(&["classes", "KPvk", "--group", "c4", "--json"]);
    assert_eq!(warned.code, 0);
    assert!(warned.stderr.contains("warning"));
    assert!(serde_json::from_str::<serde_json::Value>(&warned.stdout).is_ok());
    let silent = piecespace(&["classes", "KPvk", "--group", "id", "--json"]);
    assert_eq!(silent.stderr, "");
}

#[test]
fn ratio_renders_reference_percent() {
    let run = piecespace(&["ratio", "--examined", "120000", "KNNNNvKRR", "--precision", "5", "--json"]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["percent"], "0.0000032276");
    assert_eq!(v["denominator"], "3717978909120");

    let run = piecespace(&["ratio", "--examined", "120000", "KNNNNvKRR"]);
    assert!(run.stdout.contains("percent   0.00000322756%"), "{}", run.stdout);

    // --examined takes arbitrary-precision digits
    let run = piecespace(&[
        "ratio",
        "--examined",
        "130455400320000000000000000000",
        "KNNNNvkq",
        "--json",
    ]);
    assert_eq!(run.code, 0);
    let v: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(v["percent"], "100000000000000000000");

    assert_eq!(piecespace(&["ratio", "--examined", "12x", "Kvk"]).code, 1);
}

#[test]
fn batch_mode_keeps_line_correspondence() {
    let path = write_temp(
        "counts.txt",
        "# headline sets\nKNNNNvkq\n\nKNNNNvKRR # eight pieces\nKXvk\nv\n",
    );
    let run = piecespace(&["count", "--batch", path.to_str().unwrap()]);
    assert_eq!(run.code, 1, "a parse failure in the batch is reported");
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines.len(), 4, "comments and blank lines produce no output");
    assert!(lines[0].starts_with("KNNNNvkq") && lines[0].ends_with("130455400320"));
    assert!(lines[1].starts_with("KNNNNvKRR") && lines[1].ends_with("3717978909120"));
    assert!(lines[2].contains("error(parse)"));
    assert!(lines[3].starts_with("v") && lines[3].ends_with("1"));

    // all-good batch exits 0
    let ok = write_temp("ok.txt", "Kvk\nKQvk\n");
    let run = piecespace(&["count", "--batch", ok.to_str().unwrap()]);
    assert_eq!(run.code, 0);

    // domain failures dominate the exit code when they come first
    let dom = write_temp("dom.txt", "KKvk\nKvk\n");
    let run = piecespace(&["legal-exact", "--stm", "w", "--batch", dom.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert!(lines[0].contains("error(domain)"));
    assert!(lines[1].contains("legal=3612"));

    // SET and --batch are mutually exclusive; neither is also an error
    assert_eq!(
        piecespace(&["count", "Kvk", "--batch", ok.to_str().unwrap()]).code,
        1
    );
    assert_eq!(piecespace(&["count"]).code, 1);
    // unreadable batch file
    assert_eq!(piecespace(&["count", "--batch", "/no/such/file"]).code, 1);
}
