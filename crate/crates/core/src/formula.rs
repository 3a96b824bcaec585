//! Closed-form extremal numbers for edge blow-ups of trees.
//!
//! Let `A`, `B` be the color classes of a tree `T` with `|A| ≤ |B|` and
//! `k = δ_T(A)`. For `p ≥ 3` and large `n`, `ex(n, T^{p+1})` is
//!
//! * `h(n, p, |A|)` when `k = 1` and `α(T) = |B|`;
//! * `h'(n, p, q) + ex(q − 1, 𝓑)` when `k = 1` and `α(T) > |B|`, with `q`
//!   and `𝓑` taken from the decomposition family;
//! * one of four rows built from `g₁(k)`, `g₂(k)` and `b` when `k ≥ 2`.
//!
//! Here `h'(n, p, q)` counts the edges of `K̄_{q−1} + T(n − q + 1, p)` and
//! `h(n, p, q)` those of `K_{q−1} + T(n − q + 1, p)`.

use serde::Serialize;

use crate::blowup::edge_blowup;
use crate::decomposition::{decomposition_family, forbidden_family_from, ForbiddenFamily};
use crate::error::{Error, Result};
use crate::search::brute_ex;
use crate::tree::TreeAnalysis;
use crate::Graph;

pub(crate) fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `t(n, p)`, the number of edges of the Turán graph `T(n, p)`.
pub fn t_count(n: u64, p: u64) -> Result<u64> {
    if p < 1 {
        return Err(Error::InvalidParts(p as usize));
    }
    let (base, extra) = (n / p, n % p);
    Ok(choose2(n) - extra * choose2(base + 1) - (p - extra) * choose2(base))
}

/// `(g₁(k), g₂(k))` for `k ≥ 2`.
pub fn g_values(k: u64) -> Result<(u64, u64)> {
    if k < 2 {
        return Err(Error::OutOfDomain(format!("g₁, g₂ need k ≥ 2, got {k}")));
    }
    let square = k * k;
    Ok(if k.is_multiple_of(2) {
        let g = square - 3 * k / 2;
        (g, g)
    } else {
        (square - (3 * k - 1) / 2, square - k)
    })
}

fn check_npq(n: u64, p: u64, q: u64) -> Result<()> {
    if p < 1 {
        return Err(Error::InvalidParts(p as usize));
    }
    if q < 1 || n < q {
        return Err(Error::OutOfDomain(format!("need n ≥ q ≥ 1, got n={n}, q={q}")));
    }
    Ok(())
}

/// `h'(n, p, q) = (q − 1)(n − q + 1) + t(n − q + 1, p)`.
pub fn h_prime(n: u64, p: u64, q: u64) -> Result<u64> {
    check_npq(n, p, q)?;
    let rest = n - q + 1;
    Ok((q - 1) * rest + t_count(rest, p)?)
}

/// `h(n, p, q) = h'(n, p, q) + C(q − 1, 2)`.
pub fn h(n: u64, p: u64, q: u64) -> Result<u64> {
    Ok(h_prime(n, p, q)? + choose2(q - 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseLabel {
    LiuK1AlphaEq,
    WhlmKEven,
    WhlmKOddB0Empty,
    WhlmKOddSmallB,
    WhlmKOddLargeB,
    NewTheorem,
}

/// Which closed form the prediction is anchored on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Base {
    #[serde(rename = "h")]
    H,
    #[serde(rename = "h'")]
    HPrime,
}

impl Base {
    pub fn eval(self, n: u64, p: u64, q: u64) -> Result<u64> {
        match self {
            Base::H => h(n, p, q),
            Base::HPrime => h_prime(n, p, q),
        }
    }
}

/// A named constant added to the base value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub name: String,
    pub value: u64,
}

impl Term {
    fn new(name: &str, value: u64) -> Self {
        Self {
            name: name.to_owned(),
            value,
        }
    }
}

/// The competing row when `b` sits where the two odd-`k` rows overlap.
#[derive(Clone, Debug, Serialize)]
pub struct Overlap {
    pub case: CaseLabel,
    pub base: Base,
    pub terms: Vec<Term>,
    /// The two rows give different values.
    pub ambiguous: bool,
}

/// A classified theorem case with its closed form.
#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub case: CaseLabel,
    pub p: u64,
    pub q: u64,
    pub base: Base,
    pub terms: Vec<Term>,
    /// Forbidden apex family, for the `α(T) > |B|` case.
    pub forbidden: Option<ForbiddenFamily>,
    pub overlap: Option<Overlap>,
    /// The formulas hold only for sufficiently large `n`.
    pub asymptotic_only: bool,
    /// Default threshold below which values are reported unverified:
    /// ten times the order of `T^{p+1}`.
    pub n_min: u64,
    pub analysis: TreeAnalysis,
}

impl Prediction {
    pub fn offset(&self) -> u64 {
        self.terms.iter().map(|t| t.value).sum()
    }

    pub fn value_at(&self, n: u64) -> Result<u64> {
        Ok(self.base.eval(n, self.p, self.q)? + self.offset())
    }
}

/// Classifies `t` into its theorem case for blow-up parameter `p ≥ 3`.
pub fn classify(t: &Graph, p: u64) -> Result<Prediction> {
    if p < 3 {
        return Err(Error::OutOfTheoremScope(format!("p must be at least 3, got {p}")));
    }
    let analysis = TreeAnalysis::new(t)?;
    let blowup_order = edge_blowup(t, p as usize)?.graph.order() as u64;
    let size_a = analysis.class_a_size() as u64;
    let k = analysis.delta_a as u64;

    let mut prediction = Prediction {
        case: CaseLabel::LiuK1AlphaEq,
        p,
        q: size_a,
        base: Base::H,
        terms: Vec::new(),
        forbidden: None,
        overlap: None,
        asymptotic_only: true,
        n_min: 10 * blowup_order,
        analysis,
    };
    let analysis = &prediction.analysis;

    if k == 1 {
        // B is independent, so α(T) ≥ |B| always
        if analysis.alpha == analysis.class_b_size() {
            return Ok(prediction);
        }
        let family = decomposition_family(t)?;
        let forbidden = forbidden_family_from(analysis, &family)?;
        let q = forbidden.q as u64;
        let ex = brute_ex((q - 1) as usize, &forbidden.members)?.ex_value as u64;
        prediction.case = CaseLabel::NewTheorem;
        prediction.q = q;
        prediction.base = Base::HPrime;
        prediction.terms = vec![Term::new("ex(q-1,B)", ex)];
        prediction.forbidden = Some(forbidden);
        return Ok(prediction);
    }

    let (g1, g2) = g_values(k)?;
    let q = size_a;
    let whlm = &analysis.whlm;
    if k.is_multiple_of(2) {
        prediction.case = CaseLabel::WhlmKEven;
        prediction.terms = vec![Term::new("g1(k)", g1)];
        return Ok(prediction);
    }
    let Some(b) = whlm.b else {
        prediction.case = CaseLabel::WhlmKOddB0Empty;
        prediction.terms = vec![Term::new("g2(k)", g2)];
        return Ok(prediction);
    };
    // B₀ ≠ ∅ needs a vertex with two neighbors in A, so |A| ≥ 2
    debug_assert!(q >= 2);
    let b = b as i64;
    let threshold = (q as i64 - 1) - (k - 1).div_ceil(q - 1) as i64;
    let small_row = 0 <= b && b <= threshold;
    let large_row = b >= threshold.max(1);

    let large_terms = || {
        vec![
            Term::new("g2(k)", g2),
            Term::new("floor((q-1)(b-1)/2)", ((q as i64 - 1) * (b - 1) / 2) as u64),
        ]
    };
    match (small_row, large_row) {
        (true, also_large) => {
            prediction.case = CaseLabel::WhlmKOddSmallB;
            prediction.terms = vec![Term::new("g1(k)", g1)];
            if also_large {
                let terms = large_terms();
                let small_offset = choose2(q - 1) + g1;
                let large_offset: u64 = terms.iter().map(|t| t.value).sum();
                prediction.overlap = Some(Overlap {
                    case: CaseLabel::WhlmKOddLargeB,
                    base: Base::HPrime,
                    terms,
                    ambiguous: small_offset != large_offset,
                });
            }
        }
        (false, true) => {
            prediction.case = CaseLabel::WhlmKOddLargeB;
            prediction.base = Base::HPrime;
            prediction.terms = large_terms();
        }
        (false, false) => {
            return Err(Error::OutOfTheoremScope(format!(
                "k={k} odd with b={b}: neither 0 ≤ b ≤ {threshold} nor b ≥ max(1, {threshold}) holds"
            )));
        }
    }
    Ok(prediction)
}

/// A prediction evaluated at a specific `n`.
#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub n: u64,
    pub value: u64,
    pub base_value: u64,
    pub n_min: u64,
    pub warnings: Vec<String>,
    pub prediction: Prediction,
}

/// `ex(n, T^{p+1})` from the closed form of `t`'s case. Values for `n`
/// below `n_min` (default or `n_min_override`) are still returned but
/// carry a warning.
pub fn predict(t: &Graph, p: u64, n: u64, n_min_override: Option<u64>) -> Result<Evaluation> {
    let prediction = classify(t, p)?;
    let n_min = n_min_override.unwrap_or(prediction.n_min);
    let base_value = prediction.base.eval(n, p, prediction.q)?;
    let value = base_value + prediction.offset();

    let mut warnings = vec!["asymptotic-only: the formula is proven for sufficiently large n".to_owned()];
    if n < n_min {
        warnings.push(format!("unverified: n={n} is below n_min={n_min}"));
    }
    if let Some(overlap) = prediction.overlap.as_ref().filter(|o| o.ambiguous) {
        let alt = overlap.base.eval(n, p, prediction.q)? + overlap.terms.iter().map(|t| t.value).sum::<u64>();
        warnings.push(format!(
            "AMBIGUOUS: b lies in two rows; {:?} gives {value}, {:?} gives {alt}",
            prediction.case, overlap.case
        ));
    }
    if let Some(f) = &prediction.forbidden {
        if !f.within_hypotheses {
            warnings.push("forbidden family computed outside the theorem's hypotheses".to_owned());
        }
    }
    Ok(Evaluation {
        n,
        value,
        base_value,
        n_min,
        warnings,
        prediction,
    })
}
