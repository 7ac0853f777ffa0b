use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cubic_normality::covers::is_good;
use cubic_normality::graph::connected_cubic_graphs;
use cubic_normality::graph::corpus::CORPUS_NAMES;
use cubic_normality::graph::io::{to_edgelist, to_graph6};
use cubic_normality::oracle::enumerate_minimal_covers;
use cubic_normality::witness::CertificateFile;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-normality"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn witness_then_verify_for_whole_corpus() {
    let dir = tempfile::tempdir().unwrap();
    for name in CORPUS_NAMES {
        let cert = dir.path().join(format!("{name}.json"));
        let o = bin(&["witness", "--name", name, "--out", path_str(&cert)]);
        assert_eq!(code(&o), 0, "{name}: {}", stderr(&o));
        let o = bin(&["verify", "--name", name, "--certificate", path_str(&cert)]);
        assert_eq!(code(&o), 0, "{name}: {}", stderr(&o));
        // the embedded graph is used when no graph is given
        let o = bin(&["verify", "--certificate", path_str(&cert)]);
        assert_eq!(code(&o), 0, "{name}: {}", stderr(&o));
    }
}

#[test]
fn witness_summary_and_exit_codes() {
    let o = bin(&["witness", "--name", "petersen"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("line_vertices_covered=15"));
    let file = CertificateFile::from_json(&stdout(&o)).unwrap();
    assert_eq!(file.matchings.len(), 15);
    assert_eq!(code(&bin(&["witness", "--name", "triangle"])), 3);
    assert_eq!(
        code(&bin(&["witness", "--name", "flower_snark", "--k", "5"])),
        0
    );
    assert_eq!(code(&bin(&["witness", "--name", "C6"])), 3);
    assert_eq!(code(&bin(&["witness", "--name", "no_such_graph"])), 2);
    assert_eq!(
        code(&bin(&["witness", "--input", "/nonexistent/graph.g6"])),
        2
    );
    assert_eq!(code(&bin(&["frobnicate"])), 2);
}

#[test]
fn file_inputs_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let g = cubic_normality::graph::corpus::named_graph("tietze").unwrap();
    let g6 = dir.path().join("t.g6");
    let el = dir.path().join("t.txt");
    fs::write(&g6, format!("{}\n", to_graph6(&g))).unwrap();
    fs::write(&el, to_edgelist(&g)).unwrap();
    let a = bin(&["witness", "--input", path_str(&g6)]);
    let b = bin(&["witness", "--input", path_str(&el), "--format", "edgelist"]);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(code(&b), 0, "{}", stderr(&b));
    assert_eq!(a.stdout, b.stdout);
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 2\n0 1\n1 1\n").unwrap();
    assert_eq!(
        code(&bin(&[
            "witness",
            "--input",
            path_str(&bad),
            "--format",
            "edgelist"
        ])),
        2
    );
}

#[test]
fn verify_rejects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let good = bin(&["witness", "--name", "petersen"]);
    let mut file = CertificateFile::from_json(&stdout(&good)).unwrap();

    // add a second edge at an endpoint of the first matching edge
    let [a, b] = file.matchings[0][0];
    let g = file.embedded_graph().unwrap();
    let z = g.neighbors(a).iter().copied().find(|&z| z != b).unwrap();
    file.matchings[0].push([a.min(z), a.max(z)]);
    let tampered = dir.path().join("tampered.json");
    fs::write(&tampered, file.to_json()).unwrap();
    let o = bin(&[
        "verify",
        "--name",
        "petersen",
        "--certificate",
        path_str(&tampered),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("disjointness"), "{}", stderr(&o));

    let own = dir.path().join("own.json");
    fs::write(&own, stdout(&good)).unwrap();
    let o = bin(&["verify", "--name", "K4", "--certificate", path_str(&own)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("coverage"), "{}", stderr(&o));

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(
        code(&bin(&["verify", "--certificate", path_str(&garbage)])),
        2
    );
}

#[test]
fn oracle_subcommands() {
    let o = bin(&["oracle", "normal", "--name", "C5"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "false\n"));
    let o = bin(&["oracle", "strong", "--name", "triangle"]);
    assert_eq!(stdout(&o), "false\n");
    let o = bin(&["oracle", "normal", "--name", "C9", "--budget-ms", "60000"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "true\n"));
    let o = bin(&["oracle", "normal", "--n", "70", "--seed", "1"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (5, "unknown\n"));
    let o = bin(&["oracle", "good", "--name", "petersen"]);
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn decompose_fixtures() {
    let o = bin(&["decompose", "--name", "petersen", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pieces"].as_array().unwrap().len(), 1);
    assert!(v["links"].as_array().unwrap().is_empty());
    let o = bin(&["decompose", "--name", "gadget_completion_pair"]);
    assert!(stdout(&o).starts_with("2 pieces, 1 links"));
    let o = bin(&["decompose", "--name", "gadget_chain3"]);
    assert!(stdout(&o).starts_with("3 pieces, 2 links"));
    assert_eq!(code(&bin(&["decompose", "--name", "C5"])), 3);
}

#[test]
fn diagnose_good_bad_and_non_minimal() {
    let dir = tempfile::tempdir().unwrap();
    let cover = dir.path().join("cover.txt");

    fs::write(&cover, "0 1 2\n").unwrap();
    let o = bin(&["diagnose", "--name", "K4", "--cover", path_str(&cover)]);
    assert_eq!(
        (code(&o), stdout(&o).as_str()),
        (0, "good\n"),
        "{}",
        stderr(&o)
    );

    fs::write(&cover, "0,1,2,3").unwrap();
    let o = bin(&["diagnose", "--name", "K4", "--cover", path_str(&cover)]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("not minimal"));

    let (g, c) = connected_cubic_graphs(10)
        .into_iter()
        .find_map(|g| {
            let bad = enumerate_minimal_covers(&g)
                .unwrap()
                .into_iter()
                .find(|c| !is_good(&g, c).unwrap())?;
            Some((g, bad))
        })
        .expect("a not-good minimal cover exists on ten vertices");
    let g6 = dir.path().join("g.g6");
    fs::write(&g6, to_graph6(&g)).unwrap();
    let ids: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
    fs::write(&cover, ids.join(" ")).unwrap();
    let o = bin(&[
        "diagnose",
        "--input",
        path_str(&g6),
        "--cover",
        path_str(&cover),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("not good\ntype "), "{text}");
    assert!(text.contains("[ok] type invariants") && text.contains("[ok] technical exclusions"));
    let o = bin(&[
        "diagnose",
        "--input",
        path_str(&g6),
        "--cover",
        path_str(&cover),
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["good"], false);
    assert!(v["wrong_set"]["w"].as_array().is_some());
}

#[test]
fn generate_is_deterministic() {
    let a = bin(&["generate", "--n", "30", "--seed", "9"]);
    let b = bin(&["generate", "--n", "30", "--seed", "9"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = bin(&["generate", "--n", "30", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout);
}
