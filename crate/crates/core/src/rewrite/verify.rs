use rayon::prelude::*;

use crate::freealg::Poly;

use super::reduce::{normal_form, reduce, ReductionTrace};
use super::{composition_value, find_compositions, Composition, RewriteError, RewriteSystem};

/// Outcome for one composition. `normal_form` is zero exactly when the
/// composition reduced to zero; a nonzero value is the counterexample.
#[derive(Debug, Clone)]
pub struct CompositionRecord {
    pub composition: Composition,
    pub value: Poly,
    pub normal_form: Poly,
    pub trace: Option<ReductionTrace>,
}

impl CompositionRecord {
    pub fn is_trivial(&self) -> bool {
        self.normal_form.is_zero()
    }
}

#[derive(Debug, Clone)]
pub struct GsReport {
    pub verdict: bool,
    pub records: Vec<CompositionRecord>,
}

impl GsReport {
    pub fn failures(&self) -> impl Iterator<Item = &CompositionRecord> {
        self.records.iter().filter(|r| !r.is_trivial())
    }
}

/// Reduce-to-zero test. A zero normal form certifies triviality modulo
/// `(S, w)` because every rewrite stays strictly below `w`.
pub fn is_trivial(c: &Composition, sys: &RewriteSystem) -> Result<(bool, ReductionTrace), RewriteError> {
    let v = composition_value(c, sys)?;
    let t = reduce(&v, sys);
    Ok((t.result.is_zero(), t))
}

/// Checks every composition in parallel; records come back in composition
/// order regardless of scheduling.
pub fn check_gs_basis(sys: &RewriteSystem, with_traces: bool) -> GsReport {
    let records: Vec<CompositionRecord> = find_compositions(sys)
        .into_par_iter()
        .map(|c| {
            let value = composition_value(&c, sys).expect("found compositions are valid");
            let (nf, trace) = if with_traces {
                let t = reduce(&value, sys);
                (t.result.clone(), Some(t))
            } else {
                (normal_form(&value, sys), None)
            };
            CompositionRecord {
                composition: c,
                value,
                normal_form: nf,
                trace,
            }
        })
        .collect();
    GsReport {
        verdict: records.iter().all(CompositionRecord::is_trivial),
        records,
    }
}

pub fn is_gs_basis(sys: &RewriteSystem) -> GsReport {
    check_gs_basis(sys, false)
}

/// Membership in the ideal, decided by the normal form. Only meaningful for
/// a Gröbner–Shirshov basis, which is checked first.
pub fn ideal_membership(p: &Poly, sys: &RewriteSystem) -> Result<bool, RewriteError> {
    p.check_alphabet(sys.alphabet())
        .map_err(|_| RewriteError::AlphabetMismatch)?;
    if !is_gs_basis(sys).verdict {
        return Err(RewriteError::NotAGSBasis);
    }
    Ok(normal_form(p, sys).is_zero())
}
