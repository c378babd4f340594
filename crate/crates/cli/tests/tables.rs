use mip_cli::tables::{jennings_series, run_table, Status, TABLE_NAMES};
use mip_core::Caps;

#[test]
fn every_table_passes() {
    for name in TABLE_NAMES {
        let table = run_table(name, &Caps::default()).unwrap();
        assert!(!table.cells.is_empty(), "{name}");
        assert!(table.passed(), "{}", table.render());
        let last = table.render().lines().last().unwrap().to_string();
        assert!(last.starts_with("PASS: "), "{name}: {last}");
    }
}

#[test]
fn only_the_documented_cell_is_corrected() {
    for name in TABLE_NAMES {
        let table = run_table(name, &Caps::default()).unwrap();
        for cell in table.cells.iter().filter(|c| c.status == Status::Corrected) {
            let key = format!("{name}/{}/{}", cell.row, cell.column);
            let c = mip_cli::expected::correction(&key).unwrap();
            assert_eq!(cell.computed, c.corrected.to_string());
            assert!(cell.note.is_some());
        }
    }
}

#[test]
fn tables_exit_codes() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_mip"))
        .args(["tables", "hh1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("T1(n=6)  dim HH1  178"));
    assert!(text.ends_with("PASS: 18 cells, 0 failed\n"));
}

#[test]
fn generating_function_helper() {
    // C2 × C2: (1 + t)^2
    assert_eq!(jennings_series(2, &[2]), vec![2, 1]);
    // C3 with d_1 = 1: 1 + t + t^2
    assert_eq!(jennings_series(3, &[1]), vec![1, 1]);
    // D8: d_1 = 2, d_2 = 1 → (1+t)^2 (1+t^2)
    assert_eq!(jennings_series(2, &[2, 1]), vec![2, 2, 2, 1]);
}

#[test]
fn unknown_table_is_a_usage_error() {
    let err = run_table("table1", &Caps::default()).unwrap_err();
    assert_eq!(err.exit_code(), mip_cli::exit::USAGE);
}
