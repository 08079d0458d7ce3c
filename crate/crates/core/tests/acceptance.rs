//! One line per acceptance criterion. The full `verify all --seed 7` run is
//! made twice through the binary; criteria 1-7 and 9 read the first report,
//! criterion 10 compares the two byte for byte. Runs without the libtest
//! harness so the per-criterion lines are always printed.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use greenbiset::biset::{burnside_units, BurnsideElement};
use greenbiset::category::{cat_identity, tilde, EndAlgebra};
use greenbiset::green::{Burnside, GreenFunctor};
use greenbiset::group::{builtin_catalog, FiniteGroup};
use greenbiset::scalar::{Ring, Scalar};
use greenbiset::star::{make_star_burnside, orthogonal_automorphisms};

const Z: Ring = Ring::Integers;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_greenbiset"))
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

fn stdout_of(args: &[&str]) -> (i32, Vec<u8>) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout)
}

struct Report(Value);

impl Report {
    fn check(&self, suite: &str, name: &str) -> Result<&Value, String> {
        self.0["suites"]
            .as_array()
            .into_iter()
            .flatten()
            .filter(|s| s["suite"] == suite)
            .flat_map(|s| s["checks"].as_array().into_iter().flatten())
            .find(|c| c["name"] == name)
            .ok_or_else(|| format!("{suite}/{name} missing"))
    }

    /// Every named check is present, passed, and had at least one case.
    fn require(&self, suite: &str, names: &[&str]) -> Result<String, String> {
        let mut cases = 0;
        for n in names {
            let c = self.check(suite, n)?;
            if c["passed"] != true {
                return Err(format!("{suite}/{n} failed: {}", c["witnesses"]));
            }
            let k = c["cases"].as_u64().unwrap_or(0);
            if k == 0 {
                return Err(format!("{suite}/{n} checked nothing"));
            }
            cases += k;
        }
        Ok(format!("{} checks, {cases} cases", names.len()))
    }
}

fn criterion_8() -> Result<String, String> {
    let e = |x: greenbiset::Error| x.to_string();
    let c2 = builtin_catalog().require("C2").map_err(e)?;
    let one = FiniteGroup::trivial();

    let units = burnside_units(&c2).map_err(e)?;
    let free = BurnsideElement::basis(&c2, &one, 0, Z).map_err(e)?;
    let u = free.sub(&Burnside.one(&c2, Z).map_err(e)?).map_err(e)?;
    if units.len() != 4 || !units.contains(&u) {
        return Err(format!("B(C2) has {} units", units.len()));
    }

    let sb = make_star_burnside().map_err(e)?;
    let (r1, _) = orthogonal_automorphisms(&sb, &one, 1, Z).map_err(e)?;
    let id1 = EndAlgebra::new(&Burnside, &one, Z).map_err(e)?.identity_coords().to_vec();
    let neg1: Vec<Scalar> = id1.iter().map(|c| -c).collect();
    if r1.elements != vec![neg1, id1] {
        return Err(format!("Aut(1) within bound 1 is {:?}", r1.elements));
    }

    let (r2, _) = orthogonal_automorphisms(&sb, &c2, 2, Z).map_err(e)?;
    let end = EndAlgebra::new(&Burnside, &c2, Z).map_err(e)?;
    let id = cat_identity(&Burnside, &c2, Z).map_err(e)?;
    let tu = tilde(&Burnside, &u).map_err(e)?;
    for x in [id.clone(), id.neg(), tu.clone(), tu.neg()] {
        if !r2.elements.contains(&end.coords(&x)) {
            return Err("±Id or ±tilde([C2/1]-[C2/C2]) missing at C2".into());
        }
    }
    if !r2.group_table_verified {
        return Err("orthogonal automorphisms of C2 not group-closed".into());
    }

    for (args, file) in [
        (&["units", "--group", "C2"][..], "burnside_units_C2.json"),
        (&["orth", "--group", "C2", "--functor", "B", "--kind", "auts", "--bound", "2"][..], "orth_auts_B_C2_bound2.json"),
        (&["ring-table", "--group", "C2", "--functor", "B"][..], "ring_table_B_C2.json"),
    ] {
        let (code, out) = stdout_of(args);
        if code != 0 || String::from_utf8_lossy(&out) != golden(file) {
            return Err(format!("{file} differs from the current output"));
        }
    }
    Ok(format!("4 units, |Aut(1)| = 2, |Aut(C2)| within bound 2 = {}", r2.elements.len()))
}

fn main() {
    let verify_all = || {
        let t = Instant::now();
        let (code, out) = stdout_of(&["verify", "all", "--seed", "7"]);
        (code, out, t.elapsed())
    };
    let (code, first, elapsed) = verify_all();
    let report = Report(serde_json::from_slice(&first).expect("verify all prints JSON"));
    let window_ok = report.0["window"] == serde_json::json!(["1", "C2", "C3", "C4", "V4", "S3"]);

    let b = "biset-identities";
    let mut lines: Vec<(u32, &str, Result<String, String>)> = vec![
        (1, "symbolic composition matches concrete composition", {
            if window_ok { report.require(b, &["mackey-matches-concrete-composition"]) } else { Err("wrong window".into()) }
        }),
        (2, "swap and reversal identities", {
            if report.0["maxOrder"] != 3 {
                Err("four-factor identities not at order 3".into())
            } else {
                report.require(b, &[
                    "swap-is-involutive",
                    "reversal-factors-through-swaps",
                    "swap-commutes-with-inflation-and-restriction",
                    "swap-fixes-diagonal-bisets",
                    "swap-moves-middle-contraction",
                    "swap-fixes-right-arrow",
                ])
            }
        }),
        (3, "arrow of composite, identity and opposite", report.require(b, &["arrow-of-composite", "arrow-of-identity", "arrow-of-opposite"])),
        (4, "tilde embedding on B and M2(B)", {
            let mut names = Vec::new();
            for tag in ["B", "M2(B)"] {
                for n in [
                    "tilde-unital-and-multiplicative",
                    "tilde-retraction",
                    "tilde-acts-by-left-multiplication",
                    "tilde-of-induction-is-double-algebra-map",
                ] {
                    names.push(format!("{tag}: {n}"));
                }
            }
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            report.require("category", &refs)
        }),
        (5, "opposite category through the swap", report.require("category", &["B: opposite-category-via-swap", "M2(B): opposite-category-via-swap"])),
        (6, "bullet duality conditions agree", report.require("star", &["B: bullet-conditions-equivalent", "M2(B): bullet-conditions-equivalent"])),
        (7, "real and imaginary parts over the rationals", report.require("star", &["B: real-imaginary-decomposition", "M2(B): real-imaginary-decomposition"])),
        (8, "unit golden values", criterion_8()),
        (9, "orthogonal units, automorphisms and transfer", {
            let names = [
                "B: orthogonal-units-are-all-units",
                "B: orthogonal-automorphisms-within-bound",
                "tilde-sends-orthogonal-units-to-orthogonal-automorphisms",
                "B: restriction-along-surjections",
                "B: deflation-inflation-is-a-monomorphism",
                "B: deflation-inflation-transitive",
                "B: diagonal-morphism-diagrams",
            ];
            match report.require("orthogonal", &names) {
                Ok(_) if code != 0 => Err(format!("verify all exited with {code}")),
                Ok(_) if elapsed > Duration::from_secs(600) => Err(format!("verify all took {elapsed:?}")),
                r => r.map(|s| format!("{s}, verify all in {:.1}s", elapsed.as_secs_f64())),
            }
        }),
    ];
    let (_, second, _) = verify_all();
    lines.push((10, "verify all --seed 7 is reproducible", {
        if first == second { Ok(format!("{} identical bytes", first.len())) } else { Err("reports differ".into()) }
    }));

    let mut failed = 0;
    for (i, label, r) in &lines {
        match r {
            Ok(detail) => println!("PASS criterion {i:>2}: {label} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {i:>2}: {label}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
