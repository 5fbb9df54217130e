use std::fmt::Write;

use super::*;

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn input_line(out: &mut String, indent: &str, i: &InputSummary) {
    let _ = writeln!(
        out,
        "{indent}input: {} ({} generators, {} relations, sha256 {})",
        if i.name.is_empty() { "<unnamed>" } else { &i.name },
        i.generators,
        i.relations,
        i.digest
    );
}

fn steps(out: &mut String, indent: &str, steps: &[StepEntry]) {
    for s in steps {
        let _ = writeln!(
            out,
            "{indent}- ({}) * {} * s{} * {}   at {}",
            s.coeff, s.left, s.relation, s.right, s.position
        );
    }
}

fn gs(out: &mut String, indent: &str, g: &GsSection) {
    let _ = writeln!(
        out,
        "{indent}compositions: {} ({} nontrivial)",
        g.compositions, g.nontrivial
    );
    for r in &g.records {
        let _ = write!(out, "{indent}  {} s{}|s{} w = {}: {}", r.kind, r.left, r.right, r.w, r.status);
        if r.status != "trivial" {
            let _ = write!(out, ", normal form {}", r.normal_form);
        }
        out.push('\n');
        if let Some(t) = &r.trace {
            steps(out, &format!("{indent}    "), t);
        }
    }
}

fn counts(out: &mut String, label: &str, xs: &[u64]) {
    let cells: Vec<String> = xs.iter().map(u64::to_string).collect();
    let _ = writeln!(out, "{label}{}", cells.join(" "));
}

/// Plain-text rendering carrying the same fields as the JSON form.
pub fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", r.command);
    if let Some(i) = &r.input {
        input_line(&mut out, "", i);
    }
    if let Some(v) = r.verdict {
        let _ = writeln!(out, "verdict: {}", yes_no(v));
    }
    if let Some(g) = &r.gs {
        gs(&mut out, "", g);
    }
    for m in &r.modes {
        let _ = writeln!(out, "mode {}: verdict {}", m.mode, yes_no(m.gs.verdict));
        input_line(&mut out, "  ", &m.input);
        if let Some(c) = &m.completion {
            let _ = writeln!(out, "  completion: {c}");
        }
        gs(&mut out, "  ", &m.gs);
        if let Some(t) = &m.triangular {
            let _ = writeln!(out, "  triangular shape up to length {}: {}", t.cap, yes_no(t.holds));
            counts(&mut out, "    normal words by length: ", &t.irr_counts);
            counts(&mut out, "    product series:         ", &t.product_counts);
            for w in &t.misfits {
                let _ = writeln!(out, "    misfit: {w}");
            }
        }
    }
    if let Some(c) = &r.completion {
        let _ = writeln!(
            out,
            "completion: {} after {} rounds, {} discarded",
            c.status, c.rounds, c.discarded
        );
        for a in &c.added {
            let _ = writeln!(out, "  added: {a}");
        }
        for rel in &c.relations {
            let _ = writeln!(out, "  rel: {rel}");
        }
    }
    if let Some(nf) = &r.normal_form {
        let _ = writeln!(out, "input poly: {}", nf.input);
        let _ = writeln!(out, "normal form: {}", nf.normal_form);
        if let Some(t) = &nf.trace {
            steps(&mut out, "  ", t);
        }
    }
    if let Some(irr) = &r.irr {
        let _ = writeln!(out, "normal words up to weighted degree {}:", irr.cap);
        for d in &irr.degrees {
            let _ = write!(out, "  {}: {}", d.degree, d.count);
            if let Some(ws) = &d.words {
                let _ = write!(out, "  [{}]", ws.join(", "));
            }
            out.push('\n');
        }
    }
    if let Some(h) = &r.hilbert {
        counts(&mut out, &format!("hilbert up to weighted degree {}: ", h.cap), &h.counts);
    }
    if let Some(c) = &r.census {
        let _ = writeln!(
            out,
            "replay N = {}: {} compositions, all trivial {}, {} cases covered",
            c.n,
            c.compositions,
            yes_no(c.all_trivial),
            c.cases_covered
        );
        let _ = writeln!(out, "  case  subcase   count  trivial");
        for row in &c.rows {
            let _ = writeln!(out, "  {:>4}  {:<8}  {:>5}  {:>7}", row.case, row.subcase, row.count, row.trivial);
        }
        for u in &c.unclassifiable {
            let _ = writeln!(out, "  unclassifiable: {u}");
        }
    }
    if let Some(ts) = &r.timings {
        for t in ts {
            let _ = writeln!(out, "time {}: {:.3} ms", t.phase, t.millis);
        }
    }
    out
}
