//! One PASS/FAIL line per acceptance criterion, all exact.

use std::fs;
use std::path::PathBuf;

use serde_json::Value;

use qqueer::graded::{classical_dim, Algebra, AlgebraSpec};
use qqueer::relset::relations_a_unfolded_equivalence;
use qqueer::supertensor::{build_s, build_s_inverse, check_qybe};
use qqueer_cli::{run, Report, RunConfig, Status, Suite};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../golden/reports")
        .join(name)
}

fn results<'a>(rep: &'a Report, r: usize, s: usize, n: usize, suite: Suite) -> (Status, &'a Value) {
    let sr = rep
        .point(r, s, n)
        .and_then(|p| p.suite(suite))
        .expect("suite present");
    (sr.status, &sr.results)
}

fn count(v: &Value) -> u64 {
    v["count"].as_u64().expect("witness count")
}

const GRID: [(usize, usize, usize); 6] = [
    (1, 1, 1),
    (1, 1, 2),
    (2, 1, 1),
    (1, 2, 1),
    (2, 2, 1),
    (2, 2, 2),
];

fn qybe() -> bool {
    (1..=3).all(|n| {
        let s = build_s(n);
        check_qybe(&s).unwrap() && s.mul(&build_s_inverse(n)).unwrap().is_identity()
    })
}

fn presentation() -> bool {
    [(1, 1), (2, 1), (1, 2), (2, 2)]
        .iter()
        .all(|&(r, n)| relations_a_unfolded_equivalence(r, n))
}

fn classical() -> bool {
    let mut ok = true;
    for (r, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        for spec in [AlgebraSpec::a(r, n), AlgebraSpec::abar(r, n)] {
            let t = Algebra::new(spec).dims_table(4).unwrap();
            let got: Vec<u128> = t.values().map(|&d| d as u128).collect();
            let want: Vec<u128> = (0..=4).map(|d| classical_dim(r * n, d)).collect();
            ok &= got == want;
            if (r, n) == (1, 1) {
                ok &= got == [1, 2, 2, 2, 2];
            }
        }
    }
    ok
}

fn flatness(rep: &Report) -> bool {
    GRID.iter().all(|&(r, s, n)| {
        let (st, v) = results(rep, r, s, n, Suite::Dims);
        let rows = v["braided"]["rows"].as_array().unwrap();
        st == Status::Pass
            && v["dmax"] == 4
            && v["braided"]["flat"] == true
            && rows.len() == 15
            && rows.iter().all(|x| x["dim"] == x["product"])
    })
}

fn actions(rep: &Report) -> bool {
    GRID.iter().all(|&(r, s, n)| {
        let (_, v) = results(rep, r, s, n, Suite::Actions);
        let rows = v["invariance"].as_array().unwrap();
        let want = [
            ("A", "Phi"),
            ("Abar", "Phi"),
            ("Abar", "PsiBar"),
            ("O", "Phi"),
            ("O", "PsiBar"),
        ];
        v["dmax"] == 3
            && want.iter().all(|&(a, f)| {
                rows.iter().any(|x| {
                    x["algebra"] == a
                        && x["family"] == f
                        && count(&x["failures"]) == 0
                        && x["checked"].as_u64() > Some(0)
                })
            })
    })
}

fn psi_defect(rep: &Report) -> bool {
    [(1, 1, 1), (2, 1, 1)].iter().all(|&(r, s, n)| {
        let (_, v) = results(rep, r, s, n, Suite::Actions);
        let d = &v["psi_defect"];
        count(&d["mismatches"]) == 0 && d["nonzero"].as_u64() > Some(0) && d["xi_squared"] == true
    })
}

fn x_relations(rep: &Report) -> bool {
    [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 1, 2)]
        .iter()
        .all(|&(r, s, n)| {
            let (st, v) = results(rep, r, s, n, Suite::Invariants);
            let x = &v["x_relations"];
            st == Status::Pass
                && ["xt", "xbart", "xx"].iter().all(|k| count(&x[k]) == 0)
                && x["checked"].as_u64() > Some(0)
        })
}

fn fft(rep: &Report) -> bool {
    let mut ok = GRID.iter().all(|&(r, s, n)| {
        let (st, v) = results(rep, r, s, n, Suite::Fft);
        let dmax = if r == 1 && s == 1 { 3 } else { 2 };
        st == Status::Pass && v["dmax"] == dmax && v["off_diagonal_max"] == 0
    });
    let (_, v) = results(rep, 1, 1, 1, Suite::Fft);
    let diag: Vec<u64> = v["diagonal_invariant_dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    ok &= diag.starts_with(&[1, 2, 2]);
    ok
}

fn howe(rep: &Report) -> bool {
    GRID.iter().all(|&(r, s, n)| {
        let (st, v) = results(rep, r, s, n, Suite::Howe);
        let kmax = v["gen_delta"].as_array().unwrap().len();
        let dm = &v["delta_mul"];
        let inj_ok = if n >= r.max(s) {
            let rows = v["injectivity"].as_array().unwrap();
            rows.len() == 3
                && rows.iter().all(|x| {
                    x["passed"] == true
                        && x["rank"] == x["domain_dim"]
                        && x["rank"] == x["invariant_dim"]
                })
        } else {
            v["injectivity"].is_string()
        };
        st == Status::Pass
            && kmax >= 2
            && ((r, s, n) != (1, 1, 1) || kmax == 3)
            && dm["random_checked"] == 50
            && dm["exhaustive_checked"].as_u64() > Some(0)
            && v["omega_descent"].as_array().unwrap().len() == 2
            && inj_ok
    })
}

fn main() {
    let cache = tempfile::tempdir().unwrap();
    let cfg = RunConfig {
        cache_dir: Some(cache.path().to_path_buf()),
        ..RunConfig::default()
    };
    let cold = run(&cfg).unwrap();
    let warm = run(&cfg).unwrap();
    let (a, b) = (cold.to_json(), warm.to_json());
    let golden_text = fs::read_to_string(golden("default-grid.json")).unwrap_or_default();

    let rows = [
        ("1 qybe and inverse, n = 1..3", qybe()),
        ("2 presentation equivalence", presentation()),
        ("3 classical dimensions up to degree 4", classical()),
        ("4 flatness of the braided product", flatness(&cold)),
        ("5 relation invariance under the actions", actions(&cold)),
        ("6 psi defect negative control", psi_defect(&cold)),
        ("7 x relations", x_relations(&cold)),
        ("8 first fundamental theorem tables", fft(&cold)),
        ("9 howe maps", howe(&cold)),
        (
            "10 determinism (cold, warm cache, golden)",
            a == b && a == golden_text && cold.passed,
        ),
    ];
    for (name, ok) in &rows {
        println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
    }
    let failed = rows.iter().filter(|r| !r.1).count();
    println!("{} of {} criteria pass", rows.len() - failed, rows.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
