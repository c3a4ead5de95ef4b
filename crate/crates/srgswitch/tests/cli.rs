use std::process::{Command, Output};

use srgswitch::graph6;
use srgswitch::tables::Table;
use srgswitch_core::graphs::{check_srg, sp};
use srgswitch_core::search::replay;

fn srgswitch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srgswitch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).expect("valid JSON")
}

#[test]
fn rank_of_symplectic_graph() {
    let o = srgswitch(&["rank", "--construct", "sp", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn replay_bundled_table() {
    let o = srgswitch(&["replay", "--table", "table1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 14);
    assert!(out.trim_end().ends_with("step 13: 24"));
}

#[test]
fn replay_transcript_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table1.json");
    std::fs::write(&path, Table::Table1.json()).unwrap();
    let o = srgswitch(&["replay", "--transcript", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let ranks: Vec<u64> = v["ranks"].as_array().unwrap().iter().map(|r| r.as_u64().unwrap()).collect();
    assert_eq!(ranks, [6, 8, 10, 12, 14, 16, 18, 18, 20, 20, 22, 22, 22, 24]);
}

#[test]
fn corrupted_transcript_names_the_step() {
    let mut rec: serde_json::Value = serde_json::from_str(Table::Table2Left.json()).unwrap();
    assert_eq!(rec["steps"][2]["rank"], 14);
    rec["steps"][2]["rank"] = 12.into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, rec.to_string()).unwrap();
    let o = srgswitch(&["replay", "--transcript", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).trim(), "step 3: expected 12, observed 14");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(srgswitch(&["bogus"]).status.code(), Some(2));
    assert_eq!(srgswitch(&["rank", "--nope"]).status.code(), Some(2));
    assert_eq!(srgswitch(&[]).status.code(), Some(2));
    assert_eq!(srgswitch(&["rank"]).status.code(), Some(2));
    assert_eq!(srgswitch(&["gm-switch", "--graph", "sp3"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    let o = srgswitch(&["gm-validate", "--graph", "2k2", "--set", "1 2 3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).lines().count(), 1);
    assert_eq!(srgswitch(&["rank", "--graph", "petersen"]).status.code(), Some(1));
    assert_eq!(srgswitch(&["srg-check", "--graph", "k1"]).status.code(), Some(1));
}

#[test]
fn json_round_trips_library_values() {
    let o = srgswitch(&["srg-check", "--graph", "g+3", "--json"]);
    let v = json(&o);
    let p = check_srg(&srgswitch_core::product::named_graph("g+3").unwrap()).unwrap();
    assert_eq!(v["srg"]["n"], p.n);
    assert_eq!(v["srg"]["k"], p.k);
    assert_eq!(v["srg"]["lambda"], p.lambda);
    assert_eq!(v["srg"]["mu"], p.mu);
    assert_eq!(v["family"], "P+");

    let o = srgswitch(&["rank", "--graph", "clebsch", "--json"]);
    assert_eq!(json(&o)["rank"], 6);
}

#[test]
fn graph6_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sp3.g6");
    let o = srgswitch(&["construct", "--construct", "sp", "--m", "3", "--g6", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(graph6::read_file(&out).unwrap(), sp(3).unwrap().without_labels());
    let o = srgswitch(&["rank", "--g6", out.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "6");

    let fin = dir.path().join("end.g6");
    let o = srgswitch(&["replay", "--table", "table1", "--g6", fin.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let end = replay(&Table::Table1.transcript()).unwrap().final_graph;
    assert_eq!(graph6::read_file(&fin).unwrap(), end.without_labels());
}

#[test]
fn switching_commands() {
    let o = srgswitch(&["gm-switch", "--graph", "sp3", "--set", "100000 010000 101000 011000"]);
    assert_eq!(stdout(&o).trim(), "rank 6 -> 8");
    let o = srgswitch(&["gm-validate", "--graph", "g-3", "--set", "(1,1,1);(1,1,3);(2,2,1);(2,2,3)", "--json"]);
    assert_eq!(json(&o)["rank_delta"], 2);
    let o = srgswitch(&["seidel-switch", "--graph", "g-3", "--isolate", "1,1,1"]);
    assert_eq!(stdout(&o).trim(), "rank 8 -> 6");
    let o = srgswitch(&["seidel-switch", "--graph", "lattice4", "--set", "1,1 2,2 3,3 4,4", "--json"]);
    assert_eq!(json(&o)["graph"]["srg"]["k"], 6);
}

#[test]
fn products_and_predictions() {
    let o = srgswitch(&["predict-rank", "lattice4", "2k2"]);
    assert_eq!(stdout(&o).trim(), "8");
    let o = srgswitch(&["product", "lattice4", "k4", "--json"]);
    let v = json(&o);
    assert_eq!((v["n"].as_u64(), v["rank"].as_u64()), (Some(64), Some(8)));
    let o = srgswitch(&["hadamard-check", "--kron", "h1,h1", "--json"]);
    let v = json(&o);
    assert_eq!(v["hadamard"], true);
    assert_eq!(v["graph_srg"]["k"], 6);
}

#[test]
fn theorem4_command() {
    let o = srgswitch(&["theorem4", "--family", "p-", "--m", "4", "--factor", "g-3"]);
    assert_eq!(stdout(&o).trim(), "(256,120,56,56) rank 10");
    let o = srgswitch(&["theorem4", "--family", "p-", "--m", "4", "--factor", "table:table2-left", "--json"]);
    assert_eq!(json(&o)["rank"], 28);
    let o = srgswitch(&["theorem4", "--family", "p+", "--m", "4", "--factor", "g-3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn search_defaults_to_seed_zero() {
    let run = |extra: &[&str], threads: &str| {
        let mut args = vec!["search", "--graph", "sp3", "--max-rank", "10", "--random", "--json"];
        args.extend_from_slice(extra);
        let o = Command::new(env!("CARGO_BIN_EXE_srgswitch"))
            .args(&args)
            .env("SRGSWITCH_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        json(&o)
    };
    let a = run(&[], "1");
    assert_eq!(a, run(&["--seed", "0"], "4"));
    assert_eq!(a["final_rank"], 10);
    assert_eq!(a["terminated_by"], "target_reached");
}

#[test]
fn search_writes_replayable_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("found.json");
    let o = srgswitch(&["search", "--graph", "sp3", "--max-rank", "10", "--transcript", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = srgswitch(&["replay", "--transcript", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["final_rank"], 10);
}
