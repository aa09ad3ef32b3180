use std::fmt;

use serde::Serialize;

use super::MarkovError;
use crate::dynmaps::{intermediate_amap, min_choi_eigenvalue};
use crate::models::ModelFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Markov,
    NonMarkov,
    NonMarkovInitialCorrelations,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Markov => "Markov",
            Verdict::NonMarkov => "non-Markov",
            Verdict::NonMarkovInitialCorrelations => "non-Markov (initial correlations)",
        })
    }
}

/// CP flags of `B(t1,0)`, `B(t2,0)` and `B(t2,t1)` with the resulting verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub cp_t1: bool,
    pub cp_t2: bool,
    /// `None` when the intermediate map is not evaluated.
    pub cp_intermediate: Option<bool>,
    pub verdict: Verdict,
}

/// Maps CP/NCP flags onto the three recognised rows:
///
/// | B(t1,0) | B(t2,0) | B(t2,t1) | verdict |
/// |---------|---------|----------|---------|
/// | CP      | CP      | CP       | Markov |
/// | CP      | CP      | NCP      | non-Markov |
/// | NCP     | NCP     | –        | non-Markov, initially correlated state |
///
/// Anything else is an error rather than a guess. In the last row any
/// supplied intermediate flag is dropped.
pub fn classify(
    cp_t1: bool,
    cp_t2: bool,
    cp_intermediate: Option<bool>,
) -> Result<ClassificationRecord, MarkovError> {
    let (cp_intermediate, verdict) = match (cp_t1, cp_t2, cp_intermediate) {
        (true, true, Some(true)) => (Some(true), Verdict::Markov),
        (true, true, Some(false)) => (Some(false), Verdict::NonMarkov),
        (true, true, None) => return Err(MarkovError::IntermediateUndefined),
        (false, false, _) => (None, Verdict::NonMarkovInitialCorrelations),
        _ => return Err(MarkovError::InconsistentFlags { cp_t1, cp_t2 }),
    };
    Ok(ClassificationRecord {
        cp_t1,
        cp_t2,
        cp_intermediate,
        verdict,
    })
}

/// Classification of a model between `t1` and `t2` together with the three
/// minimum Choi eigenvalues behind it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ModelClassification {
    pub record: ClassificationRecord,
    pub min_eig_t1: f64,
    pub min_eig_t2: f64,
    pub min_eig_intermediate: f64,
}

pub fn classify_model(
    family: &ModelFamily,
    t1: f64,
    t2: f64,
    cp_tol: f64,
    singular_tol: f64,
) -> Result<ModelClassification, MarkovError> {
    if !(t2 > t1 && t1 > 0.0) {
        return Err(MarkovError::InvalidGrid(format!(
            "need t2 > t1 > 0, got t1 = {t1}, t2 = {t2}"
        )));
    }
    let a1 = family.amap(t1)?;
    let a2 = family.amap(t2)?;
    let inter = intermediate_amap(&a2, &a1, singular_tol)?;
    let eigs = [a1, a2, inter].map(|a| min_choi_eigenvalue(&a));
    let is_cp = |x: f64| x >= -cp_tol;
    let record = classify(is_cp(eigs[0]), is_cp(eigs[1]), Some(is_cp(eigs[2])))?;
    Ok(ModelClassification {
        record,
        min_eig_t1: eigs[0],
        min_eig_t2: eigs[1],
        min_eig_intermediate: eigs[2],
    })
}
