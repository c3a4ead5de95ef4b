use srgswitch::tables::Table;
use srgswitch_core::search::replay;
use srgswitch_core::{check_srg, Error, SrgParams};

#[test]
fn complete_tables_replay() {
    for (table, params) in [
        (Table::Table1, SrgParams::new(63, 32, 16, 16)),
        (Table::Table2Left, SrgParams::new(64, 28, 12, 12)),
        (Table::Table2Right, SrgParams::new(64, 28, 12, 12)),
        (Table::Table3LeftErratum, SrgParams::new(64, 36, 20, 20)),
    ] {
        let t = table.transcript();
        let r = replay(&t).unwrap_or_else(|e| panic!("{}: {e}", table.name()));
        assert_eq!(r.params, Some(params));
        assert_eq!(check_srg(&r.final_graph), Some(params));
        assert_eq!(r.path.len(), t.steps.len());
        if table != Table::Table1 {
            assert!(r.path.iter().all(|p| p.ones_in_colspace), "{}", table.name());
        }
    }
}

#[test]
fn verbatim_g_plus_tables_stop_at_invalid_sets() {
    for (table, step) in [(Table::Table3Left, 14), (Table::Table3Right, 3)] {
        match replay(&table.transcript()) {
            Err(Error::InvalidStep { step: s, .. }) => assert_eq!(s, step, "{}", table.name()),
            other => panic!("{}: {other:?}", table.name()),
        }
    }
}

#[test]
fn erratum_differs_in_one_label() {
    let (a, b) = (Table::Table3Left.transcript(), Table::Table3LeftErratum.transcript());
    let diffs: Vec<(usize, usize)> = a
        .steps
        .iter()
        .zip(&b.steps)
        .enumerate()
        .flat_map(|(i, (x, y))| {
            x.labels
                .iter()
                .zip(&y.labels)
                .enumerate()
                .filter(|(_, (p, q))| p != q)
                .map(move |(j, _)| (i + 1, j))
        })
        .collect();
    assert_eq!(diffs, [(14, 0)]);
}
