use std::fs;
use std::path::PathBuf;

use qqueer_cli::{relation_dump, run, GridPoint, RunConfig};

fn golden(rel: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../golden")
        .join(rel);
    fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn relation_dumps() {
    assert_eq!(relation_dump(1, 1, 1), golden("relations/r1s1n1.txt"));
    assert_eq!(relation_dump(1, 1, 2), golden("relations/r1s1n2.txt"));
}

#[test]
fn single_point_reports() {
    for (r, s, n) in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1)] {
        let cfg = RunConfig {
            grid: vec![GridPoint::new(r, s, n)],
            ..RunConfig::default()
        };
        let rep = run(&cfg).unwrap();
        assert_eq!(
            rep.to_json(),
            golden(&format!("reports/r{r}s{s}n{n}.json")),
            "({r},{s},{n})"
        );
    }
}
