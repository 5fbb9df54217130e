//! Independent oracles and property runners shared by the integration and
//! acceptance suites. Nothing here calls the engine code it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::io::Write;

use gsq::freealg::{Letter, Poly, Word};
use gsq::rewrite::{normal_form, normal_form_with_strategy, RewriteSystem, Strategy as Rewriting};
use gsq::scalar::Scalar;
use gsq::uq::{jimbo_bundle, lie_pbw_relations, sl2_table, Sign};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

/// Coefficients of `∏ (1 − t^w)^{-1}` through `t^cap`, by repeated
/// multiplication with the geometric series of each factor.
pub fn partition_series(weights: &[u32], cap: usize) -> Vec<u64> {
    let mut c = vec![0u64; cap + 1];
    c[0] = 1;
    for &w in weights {
        let w = w as usize;
        let prev = c.clone();
        for (k, ck) in c.iter_mut().enumerate() {
            *ck = (0..=k / w).map(|m| prev[k - m * w]).sum();
        }
    }
    c
}

pub type Overlaps = BTreeSet<(usize, usize, Vec<Letter>)>;

/// `(left, right, w)` for every proper overlap and inclusion of leading
/// words, found by comparing every suffix with every prefix and sliding
/// every word along every other.
pub fn brute_force_overlaps(leads: &[Vec<Letter>]) -> (Overlaps, Overlaps) {
    let mut inter = BTreeSet::new();
    let mut incl = BTreeSet::new();
    for (i, f) in leads.iter().enumerate() {
        for (j, g) in leads.iter().enumerate() {
            for k in 1..f.len().min(g.len()) {
                if f[f.len() - k..] == g[..k] {
                    let mut w = f.clone();
                    w.extend_from_slice(&g[k..]);
                    inter.insert((i, j, w));
                }
            }
            if i != j && g.len() <= f.len() {
                for s in 0..=f.len() - g.len() {
                    if f[s..s + g.len()] == g[..] {
                        incl.insert((i, j, f.clone()));
                    }
                }
            }
        }
    }
    (inter, incl)
}

pub fn write_line(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

// ---- strategies ----

pub fn laurent() -> impl Strategy<Value = Scalar> {
    proptest::collection::vec((-4i64..=4, -5i64..=5), 0..4).prop_map(Scalar::laurent)
}

/// Laurent polynomials and quotients of them.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        laurent(),
        (laurent(), laurent()).prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b).unwrap() }),
    ]
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn word(letters: u32, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..letters, 0..=max_len).prop_map(|v| Word::from_letters(&v))
}

pub fn poly(letters: u32, max_len: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((word(letters, max_len), laurent()), 0..=max_terms)
        .prop_map(Poly::from_terms)
}

// ---- property runners, 1000 cases each unless asked otherwise ----

pub const CASES: u32 = 1000;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn finish(r: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&(scalar(), scalar(), scalar()), |(a, b, c)| {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&Scalar::zero()), a.clone());
        prop_assert_eq!(a.mul(&Scalar::one()), a.clone());
        prop_assert!(a.add(&a.neg()).is_zero());
        prop_assert_eq!(a.sub(&b), a.add(&b.neg()));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.div(&a).unwrap().mul(&a), b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
        Ok(())
    }))
}

pub fn order_axioms(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&(word(3, 5), word(3, 5), word(3, 5), word(3, 3), word(3, 3)), |(u, v, w, a, b)| {
        // total: exactly one of <, =, >
        let c = u.cmp(&v);
        prop_assert_eq!(c.reverse(), v.cmp(&u));
        prop_assert_eq!(c == std::cmp::Ordering::Equal, u == v);
        // transitive
        if u <= v && v <= w {
            prop_assert!(u <= w);
        }
        // length first, then letterwise
        if u.len() != v.len() {
            prop_assert_eq!(c, u.len().cmp(&v.len()));
        } else {
            prop_assert_eq!(c, u.letters().cmp(v.letters()));
        }
        // compatible with two-sided multiplication
        let (au, av) = (a.concat(&u).concat(&b), a.concat(&v).concat(&b));
        prop_assert_eq!(au.cmp(&av), c);
        // the empty word is least, and proper factors are smaller
        prop_assert!(Word::empty() <= u);
        if !a.is_empty() || !b.is_empty() {
            prop_assert!(u < au);
        }
        Ok(())
    }))
}

/// The two Jimbo systems and `sl₂`, all Gröbner–Shirshov bases.
pub fn gs_systems() -> Vec<RewriteSystem> {
    vec![
        jimbo_bundle(2, Sign::Plus).unwrap().system().unwrap(),
        jimbo_bundle(3, Sign::Plus).unwrap().system().unwrap(),
        lie_pbw_relations(&sl2_table()).unwrap().system().unwrap(),
    ]
}

fn on_systems(max_len: usize, max_terms: usize) -> impl Strategy<Value = (usize, Poly, u64)> {
    (0usize..3, any::<u64>()).prop_flat_map(move |(k, seed)| {
        let letters = [3u32, 6, 3][k];
        poly(letters, max_len, max_terms).prop_map(move |p| (k, p, seed))
    })
}

pub fn reduce_idempotent(cases: u32) -> Result<(), String> {
    let systems = gs_systems();
    finish(runner(cases).run(&on_systems(4, 4), |(k, p, _)| {
        let sys = &systems[k];
        let t = gsq::rewrite::reduce(&p, sys);
        prop_assert_eq!(normal_form(&t.result, sys), t.result.clone());
        for (w, _) in t.result.terms() {
            prop_assert!(!sys.is_reducible(w));
        }
        prop_assert_eq!(p.sub(&t.result), t.ideal_combination(sys));
        Ok(())
    }))
}

pub fn strategy_independent(cases: u32) -> Result<(), String> {
    let systems = gs_systems();
    finish(runner(cases).run(&on_systems(4, 4), |(k, p, seed)| {
        let sys = &systems[k];
        let canonical = normal_form(&p, sys);
        let random = normal_form_with_strategy(&p, sys, Rewriting::Random(seed));
        prop_assert_eq!(random.result, canonical);
        Ok(())
    }))
}
