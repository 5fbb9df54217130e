//! The acceptance criteria, one pass/fail line each. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use gsq::basis::{hilbert, irr_words, monotone_words};
use gsq::freealg::{Alphabet, Letter, Poly, Word};
use gsq::rewrite::{
    ideal_membership, is_gs_basis, normal_form, oracle_quotient_dim, shirshov_complete, CompletionLimits,
    CompletionStatus, RewriteSystem,
};
use gsq::scalar::rational;
use gsq::uq::*;
use serde_json::Value;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn gsq_json(args: &[&str]) -> Result<(i32, Value), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_gsq"))
        .args(args)
        .args(["--json", "--no-timings"])
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by a signal")?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let v = serde_json::from_str(&text).map_err(|e| format!("{e}: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok((code, v))
}

fn jimbo(n: usize) -> RewriteSystem {
    jimbo_bundle(n, Sign::Plus).unwrap().system().unwrap()
}

fn letter_map(polys: Vec<Poly>) -> HashMap<Letter, Poly> {
    polys.into_iter().enumerate().map(|(i, p)| (i as Letter, p)).collect()
}

fn jimbo_verdicts() -> Verdict {
    let start = Instant::now();
    for n in 1..=4 {
        let (code, v) = gsq_json(&["verify", "--builtin", "uq-plus", "--n", &n.to_string()])?;
        ensure(code == 0 && v["verdict"] == true, || format!("rank {n}: exit {code}, verdict {}", v["verdict"]))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("ranks 1-4 verify true in {took:.2?}"))
}

fn proof_replay() -> Verdict {
    let (code, v) = gsq_json(&["replay", "--n", "4"])?;
    let (_, again) = gsq_json(&["replay", "--n", "4"])?;
    let c = &v["census"];
    ensure(code == 0 && v["verdict"] == true, || format!("exit {code}"))?;
    ensure(c["unclassifiable"].as_array().is_some_and(Vec::is_empty), || {
        format!("unclassifiable: {}", c["unclassifiable"])
    })?;
    ensure(v == again, || "census differs between runs".into())?;
    let golden_path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/replay_n4.json");
    let golden: Value = serde_json::from_str(&std::fs::read_to_string(golden_path).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(v == golden, || "census differs from the golden file".into())?;
    Ok(format!(
        "{} compositions over {} cases, none unclassifiable, matches golden",
        c["compositions"], c["cases_covered"]
    ))
}

fn pbw_counts() -> Verdict {
    for n in 2..=3 {
        let w = JimboIndex::new(n).weights();
        let got = hilbert(&jimbo(n), &w, 6).map_err(|e| e.to_string())?.counts();
        let want = common::partition_series(&w, 6);
        ensure(got == want, || format!("rank {n}: {got:?} vs series {want:?}"))?;
    }
    let first = hilbert(&jimbo(2), &[1, 2, 1], 5).map_err(|e| e.to_string())?.counts();
    ensure(first == [1, 2, 4, 6, 9, 12], || format!("rank 2 starts {first:?}"))?;
    Ok("ranks 2, 3 match the partition series to degree 6".into())
}

fn cd_lemma() -> Verdict {
    let xy = Alphabet::new(["x", "y"]).unwrap();
    let comm = Poly::monomial(Word::from_letters(&[1, 0])).sub(&Poly::monomial(Word::from_letters(&[0, 1])));
    let systems = [
        ("uq-plus-2", jimbo(2)),
        ("uq-plus-3", jimbo(3)),
        ("sl2", lie_pbw_relations(&sl2_table()).unwrap().system().unwrap()),
        ("xy-yx", RewriteSystem::new(xy, vec![comm]).unwrap()),
    ];
    let qs = [rational(7, 3), rational(11, 5)];
    for (name, sys) in systems {
        let ones = vec![1; sys.alphabet().len()];
        let unit = sys.with_alphabet(sys.alphabet().reweighted(ones).unwrap()).unwrap();
        let irr = irr_words(&unit, 5).counts();
        for q in &qs {
            let dims = oracle_quotient_dim(&sys, 5, std::slice::from_ref(q)).map_err(|e| e.to_string())?;
            ensure(dims == irr, || format!("{name} at q = {q}: irr {irr:?}, oracle {dims:?}"))?;
        }
    }
    Ok("4 systems agree with both specializations to degree 5".into())
}

fn serre_compatibility() -> Verdict {
    for n in 1..=4 {
        let sys = jimbo(n);
        let map = letter_map(simple_to_jimbo(n).into_iter().map(|l| Poly::monomial(Word::letter(l))).collect());
        for r in &serre_relations(&cartan_an(n).unwrap(), Sign::Plus).unwrap().relations {
            let img = r.substitute(&map).unwrap();
            ensure(normal_form(&img, &sys).is_zero(), || format!("rank {n}: image does not reduce to 0"))?;
        }
    }
    let serre = serre_relations(&cartan_an(2).unwrap(), Sign::Plus).unwrap().system().unwrap();
    let c = shirshov_complete(&serre, CompletionLimits { max_degree: 6, max_rounds: 50 }).map_err(|e| e.to_string())?;
    ensure(c.status == CompletionStatus::Complete, || "A_2 completion truncated".into())?;
    let map = letter_map(jimbo_expansion(2).unwrap());
    for r in &jimbo_bundle(2, Sign::Plus).unwrap().relations {
        let img = r.substitute(&map).unwrap();
        ensure(ideal_membership(&img, &c.system).map_err(|e| e.to_string())?, || {
            "an expanded Jimbo relation is outside the ideal".into()
        })?;
    }
    Ok("Serre images vanish for N <= 4; rank-2 expansions lie in the Serre ideal".into())
}

fn lie_pbw() -> Verdict {
    let sys = lie_pbw_relations(&sl2_table()).unwrap().system().unwrap();
    ensure(is_gs_basis(&sys).verdict, || "sl2 fails".into())?;
    let mut irr: Vec<Word> = irr_words(&sys, 5).words().cloned().collect();
    let mut mono = monotone_words(&[1, 1, 1], 5);
    irr.sort();
    mono.sort();
    ensure(irr == mono, || "normal words are not the nondecreasing words".into())?;
    let bad = lie_pbw_relations(&sl2_perturbed_table()).unwrap().system().unwrap();
    let rep = is_gs_basis(&bad);
    let witness = rep.failures().next().map(|r| r.normal_form.render(bad.alphabet()));
    ensure(!rep.verdict && witness.is_some(), || "perturbation passes".into())?;
    Ok(format!("sl2 passes; perturbed table fails with witness {}", witness.unwrap()))
}

fn completion_behaviours() -> Verdict {
    for n in 1..=4 {
        let sys = jimbo(n);
        let c = shirshov_complete(&sys, CompletionLimits::default()).map_err(|e| e.to_string())?;
        ensure(c.added.is_empty() && c.system.polys() == sys.polys(), || format!("rank {n} changed"))?;
    }
    let a = Alphabet::new(["y", "x"]).unwrap();
    let (y, x) = (0, 1);
    let square = Poly::monomial(Word::from_letters(&[x, x])).sub(&Poly::monomial(Word::letter(y)));
    let comm = Poly::monomial(Word::from_letters(&[x, y])).sub(&Poly::monomial(Word::from_letters(&[y, x])));
    let c = shirshov_complete(&RewriteSystem::new(a, vec![square.clone()]).unwrap(), CompletionLimits::default())
        .map_err(|e| e.to_string())?;
    let mut got = c.system.polys();
    got.sort();
    let mut want = vec![square, comm];
    want.sort();
    ensure(got == want, || format!("x^2 - y completes to {got:?}"))?;
    let serre = serre_relations(&cartan_an(2).unwrap(), Sign::Plus).unwrap().system().unwrap();
    let c = shirshov_complete(&serre, CompletionLimits { max_degree: 6, max_rounds: 50 }).map_err(|e| e.to_string())?;
    let counts = hilbert(&c.system, &[1, 1], 6).map_err(|e| e.to_string())?.counts();
    let series = common::partition_series(&[1, 2, 1], 6);
    ensure(c.status == CompletionStatus::Complete && counts == series, || format!("A_2: {counts:?}"))?;
    Ok("no-op on Jimbo sets, {x^2 - y} gains xy - yx, A_2 Serre closes with the PBW series".into())
}

fn full_algebra() -> Verdict {
    let (code, v) = gsq_json(&["verify", "--builtin", "uq-full", "--n", "1"])?;
    let modes = v["modes"].as_array().ok_or("no mode records")?;
    ensure(modes.len() == 2, || format!("{} modes recorded", modes.len()))?;
    let mut summary = Vec::new();
    for m in modes {
        let verdict = m["gs"]["verdict"].as_bool().ok_or("missing verdict")?;
        if verdict {
            ensure(m["triangular"]["holds"] == true, || format!("{}: triangular shape fails", m["mode"]))?;
        } else {
            ensure(m["gs"]["nontrivial"].as_u64().unwrap_or(0) > 0, || format!("{}: no witnesses", m["mode"]))?;
        }
        summary.push(format!("{} {}", m["mode"].as_str().unwrap_or("?"), verdict));
    }
    ensure(code == 0 || code == 1, || format!("exit {code}"))?;
    Ok(format!("N = 1: {}", summary.join(", ")))
}

fn engine_properties() -> Verdict {
    common::field_axioms(common::CASES).map_err(|e| format!("field axioms: {e}"))?;
    common::order_axioms(common::CASES).map_err(|e| format!("order axioms: {e}"))?;
    common::reduce_idempotent(common::CASES).map_err(|e| format!("idempotence: {e}"))?;
    common::strategy_independent(common::CASES).map_err(|e| format!("strategy independence: {e}"))?;
    Ok(format!("4 properties x {} cases", common::CASES))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 Jimbo relations are a GS basis", jimbo_verdicts),
        ("2 proof replay", proof_replay),
        ("3 PBW counting", pbw_counts),
        ("4 CD-lemma cross-validation", cd_lemma),
        ("5 Serre compatibility", serre_compatibility),
        ("6 Lie PBW", lie_pbw),
        ("7 completion behaviours", completion_behaviours),
        ("8 full U_q(A_1) verdict", full_algebra),
        ("9 engine properties", engine_properties),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => common::write_line(&format!("PASS  {name}: {detail}")),
            Err(why) => {
                common::write_line(&format!("FAIL  {name}: {why}"));
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
