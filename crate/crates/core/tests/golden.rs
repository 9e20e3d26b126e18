//! Figure data against checked-in golden files. Set `UPDATE_GOLDEN=1` to
//! regenerate them.

use std::path::PathBuf;
use std::process::Command;

use cascade_squeezing::figures::Figure;

fn golden_path(figure: Figure) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{}.csv", figure.id()))
}

fn figure_output(figure: Figure) -> Vec<u8> {
    let o = Command::new(env!("CARGO_BIN_EXE_cascade"))
        .args(["figure", figure.id()])
        .output()
        .unwrap();
    assert!(o.status.success());
    o.stdout
}

#[test]
fn figures_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for figure in Figure::ALL {
        let out = figure_output(figure);
        let path = golden_path(figure);
        if update || !path.exists() {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let golden = std::fs::read(&path).unwrap();
        assert!(
            out == golden,
            "{} differs from {}",
            figure.id(),
            path.display()
        );
    }
}

#[test]
fn library_and_binary_agree() {
    for figure in Figure::ALL {
        let table = figure.table().unwrap();
        assert_eq!(
            table.to_csv().into_bytes(),
            figure_output(figure),
            "{}",
            figure.id()
        );
    }
}
