use std::process::{Command, Output};

use z4lcd_cli::wire::{CatalogWire, ClassifyWire, CountWire, FactorTableWire, HullWire, SweepWire};
use z4lcd_cli::{EXIT_MISMATCH, EXIT_USAGE};

fn z4lcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4lcd")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = z4lcd(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn factor_text() {
    let text = stdout(&["factor", "7"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("X^7-1 = (X-1)(X^3+2X^2+X-1)(X^3-X^2+2X-1)"));
    assert!(lines.next().unwrap().starts_with("g[1,1]  = X-1 "));
    assert!(lines.next().unwrap().starts_with("f[1,7]  = X^3+2X^2+X-1 "));
    assert!(lines.next().unwrap().starts_with("f*[1,7] = X^3-X^2+2X-1 "));

    assert!(stdout(&["factor", "1"]).lines().nth(1).unwrap().starts_with("g[1,1] = X-1"));
}

#[test]
fn bad_lengths_are_usage_errors() {
    for args in [&["factor", "6"][..], &["classify", "0"], &["count-lcd", "4"], &["factor", "-3"]] {
        let out = z4lcd(args);
        assert_eq!(out.status.code(), Some(EXIT_USAGE), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    let err = String::from_utf8(z4lcd(&["factor", "6"]).stderr).unwrap();
    assert!(err.contains("N must be odd"), "{err}");
}

#[test]
fn factor_json_round_trips_byte_identically() {
    for n in ["1", "7", "15", "21", "31"] {
        let json = stdout(&["--json", "factor", n]);
        let parsed: FactorTableWire = serde_json::from_str(&json).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(again, json);
    }
    let parsed: FactorTableWire = serde_json::from_str(&stdout(&["--json", "factor", "7"])).unwrap();
    let polys: Vec<&str> = parsed.records.iter().map(|r| r.poly.as_str()).collect();
    assert_eq!(polys, ["3,1", "3,1,2,1", "3,2,3,1"]);
    assert!(!stdout(&["--json", "factor", "7"]).contains('.'));
}

#[test]
fn classify_outputs() {
    let text = stdout(&["classify", "7"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("n=1 ") && lines[0].ends_with("good  gamma=1"));
    assert!(lines[1].starts_with("n=7 ") && lines[1].ends_with("bad   beta=1"));

    let wire: ClassifyWire = serde_json::from_str(&stdout(&["--json", "classify", "15"])).unwrap();
    let kinds: Vec<(u64, &str)> = wire.divisors.iter().map(|d| (d.n, d.kind.as_str())).collect();
    assert_eq!(kinds, [(1, "good"), (3, "good"), (5, "good"), (15, "bad")]);
    assert_eq!(wire.divisors[3].beta, Some(1));

    let wire: ClassifyWire = serde_json::from_str(&stdout(&["--json", "classify", "1"])).unwrap();
    assert_eq!(wire.divisors.len(), 1);
    assert_eq!(wire.divisors[0].kind, "good");
}

fn hull(args: &[&str]) -> HullWire {
    let mut full = vec!["--json", "hull"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn hull_examples() {
    let r = hull(&["7", "--f", "3,1", "--g", "1"]);
    assert_eq!((r.report.hull_size, r.report.lcd), (1, true));
    assert_eq!(r.code.h, [1, 2]);
    let r = hull(&["7", "--f", "3,1,2,1", "--g", "1"]);
    assert_eq!((r.report.deg_h, r.report.deg_g, r.report.hull_size), (3, 0, 64));
    assert_eq!(r.report.h_ids, [2]);
    let r = hull(&["7", "--f", "1", "--g", "3,0,0,0,0,0,0,1"]);
    assert_eq!((r.report.deg_g, r.report.hull_size, r.report.lcd), (7, 128, false));
    let r = hull(&["7", "--f", "ids:1,2"]);
    assert!(r.report.lcd);
    let r = hull(&["7", "--f", "-1,1"]);
    assert!(r.report.lcd);

    assert!(stdout(&["hull", "7", "--f", "3,1"]).contains("hullSize = 4^0 * 2^0 = 1\nLCD\n"));
}

#[test]
fn hull_rejects_bad_inputs() {
    for args in [
        &["hull", "7", "--f", "1,1"][..],
        &["hull", "7", "--f", "3,1", "--g", "3,1"],
        &["hull", "7", "--f", "ids:9"],
        &["hull", "7", "--f", "x"],
    ] {
        assert_eq!(z4lcd(args).status.code(), Some(EXIT_USAGE), "{args:?}");
    }
}

#[test]
fn enumerate_and_count() {
    let cat: CatalogWire = serde_json::from_str(&stdout(&["--json", "enumerate-lcd", "7"])).unwrap();
    assert_eq!((cat.nsrf, cat.count), (2, 4));
    let labels: Vec<&str> = cat.entries.iter().map(|e| e.label.as_str()).collect();
    assert_eq!(labels, ["(1)", "(g[1,1])", "(f[1,7]f*[1,7])", "(0)"]);
    assert_eq!(cat.entries[3].generator, "3,0,0,0,0,0,0,1");

    assert_eq!(stdout(&["count-lcd", "7"]).lines().next(), Some("4"));
    let c: CountWire = serde_json::from_str(&stdout(&["--json", "count-lcd", "15"])).unwrap();
    assert_eq!((c.nsrf, c.count, c.enumerated, c.swept), (4, 16, 16, Some(16)));
}

#[test]
fn verify_runs_and_respects_bound() {
    assert_eq!(stdout(&["verify", "9"]), "N=9: 27 partitions, 0 mismatches, 8 LCD\n");
    let w: SweepWire = serde_json::from_str(&stdout(&["--json", "verify", "7"])).unwrap();
    assert_eq!((w.partitions, w.lcd_count, w.mismatches.len()), (27, 4, 0));

    let out = z4lcd(&["verify", "11"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("N <= 9"));
    assert_ne!(EXIT_USAGE, EXIT_MISMATCH);
}

#[test]
fn config_file_sets_bound() {
    let dir = std::env::temp_dir().join(format!("z4lcd-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("z4lcd.toml");
    std::fs::write(&cfg, "max_bruteforce = 5\nsweep_budget = 10\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    assert_eq!(z4lcd(&["--config", cfg, "verify", "7"]).status.code(), Some(EXIT_USAGE));
    assert!(stdout(&["--config", cfg, "verify", "5"]).contains("0 mismatches"));
    // flag beats file
    assert!(stdout(&["--config", cfg, "verify", "7", "--max-bruteforce", "7"]).contains("27 partitions"));
    // 3^5 partitions at N=15 exceed a budget of 10
    let c: CountWire = serde_json::from_str(&stdout(&["--config", cfg, "--json", "count-lcd", "15"])).unwrap();
    assert_eq!(c.swept, None);

    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "unknown = 1\n").unwrap();
    assert_eq!(z4lcd(&["--config", bad.to_str().unwrap(), "factor", "7"]).status.code(), Some(EXIT_USAGE));
    std::fs::remove_dir_all(&dir).unwrap();
}
