use std::collections::BTreeSet;
use std::thread;

use serde::{Deserialize, Serialize};

use super::{psi_of_rep, theta, AffineVarietySpec, RealizeError, RingPresentation, ThetaImage};
use crate::charvar::distinguish_reps;
use crate::chevalley::is_symplectic;
use crate::polyring::MonomialOrder;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub point: Vec<String>,
    pub recovered: Option<Vec<String>>,
    pub symplectic: bool,
    /// First coordinate where `ψ(θ(s))` and `s` differ.
    pub offending_coordinate: Option<usize>,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub first: usize,
    pub second: usize,
    /// The two samples coincide, so there is nothing to separate.
    pub skipped: bool,
    pub witness: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundtripReport {
    pub variety: String,
    #[serde(rename = "M")]
    pub modulus: u64,
    pub c: String,
    pub variety_dimension: i64,
    pub hom_dimension: i64,
    pub samples: Vec<SampleReport>,
    pub separation: Vec<SeparationReport>,
    pub warning: Option<String>,
    pub pass: bool,
}

fn strings(p: &[Rational]) -> Vec<String> {
    p.iter().map(ToString::to_string).collect()
}

fn check_sample(
    spec: &AffineVarietySpec,
    rp: &RingPresentation,
    s: &[Rational],
    c: &Rational,
) -> (SampleReport, Option<ThetaImage>) {
    let mut report = SampleReport {
        point: strings(s),
        recovered: None,
        symplectic: false,
        offending_coordinate: None,
        error: None,
        pass: false,
    };
    let image = match theta(spec, rp, s) {
        Ok(image) => image,
        Err(e) => {
            report.error = Some(e.to_string());
            return (report, None);
        }
    };
    report.symplectic = image.rep.matrices().iter().all(is_symplectic);
    let values: Vec<Rational> = image.rep.matrices().iter().map(|m| m.trace()).collect();
    let candidate: Vec<Rational> = values.iter().map(|v| c - v).collect();
    report.recovered = Some(strings(&candidate));
    report.offending_coordinate = candidate.iter().zip(s).position(|(a, b)| a != b);
    match psi_of_rep(spec, &image.rep, c) {
        Ok(_) => {}
        Err(e) => report.error = Some(e.to_string()),
    }
    report.pass =
        report.symplectic && report.offending_coordinate.is_none() && report.error.is_none();
    (report, Some(image))
}

/// Checks `ψ(θ(s)) = s` for every sample (concurrently), that all images
/// are symplectic, and that distinct samples are separated by the trace of
/// some `γ_{r_i}`.
pub fn roundtrip_check(
    spec: &AffineVarietySpec,
    rp: &RingPresentation,
    samples: &[Vec<Rational>],
    c: &Rational,
) -> Result<RoundtripReport, RealizeError> {
    let results: Vec<(SampleReport, Option<ThetaImage>)> = thread::scope(|scope| {
        let handles: Vec<_> = samples
            .iter()
            .map(|s| scope.spawn(move || check_sample(spec, rp, s, c)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sample check panicked"))
            .collect()
    });

    let mut separation = Vec::new();
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let skipped = samples[i] == samples[j];
            let witness = match (&results[i].1, &results[j].1) {
                (Some(a), Some(b)) if !skipped => distinguish_reps(&a.rep, &b.rep, 1)
                    .map_err(|e| RealizeError::OffVariety(e.to_string()))?
                    .map(|w| w.display(a.rep.generators()).to_string()),
                _ => None,
            };
            separation.push(SeparationReport {
                first: i,
                second: j,
                skipped,
                pass: skipped || witness.is_some(),
                witness,
            });
        }
    }

    let samples: Vec<SampleReport> = results.into_iter().map(|(r, _)| r).collect();
    let warning = samples.is_empty().then(|| "no points".to_string());
    let pass = samples.iter().all(|s| s.pass) && separation.iter().all(|s| s.pass);
    Ok(RoundtripReport {
        variety: spec.ideal.to_text(&MonomialOrder::GrevLex),
        modulus: rp.modulus(),
        c: c.to_string(),
        variety_dimension: spec.ideal.dimension(),
        hom_dimension: super::hom_variety(rp).dimension,
        samples,
        separation,
        warning,
        pass,
    })
}

/// Rational points of `S` with coordinates `p/q`, `|p| ≤ height`,
/// `1 ≤ q ≤ height`, at most `limit` of them, in a fixed order.
pub fn grid_points(spec: &AffineVarietySpec, height: i64, limit: usize) -> Vec<Vec<Rational>> {
    let mut values: BTreeSet<Rational> = BTreeSet::new();
    for den in 1..=height.max(1) {
        for num in -height..=height {
            values.insert(Rational::new(num.into(), den.into()));
        }
    }
    let mut values: Vec<Rational> = values.into_iter().collect();
    values.sort_by_key(|v| {
        (
            v.numer().magnitude().clone() + v.denom().magnitude(),
            v.clone(),
        )
    });

    let t = spec.dim();
    let mut found = Vec::new();
    let mut idx = vec![0usize; t];
    if t == 0 {
        if spec.contains(&[]) {
            found.push(Vec::new());
        }
        return found;
    }
    loop {
        let point: Vec<Rational> = idx.iter().map(|&i| values[i].clone()).collect();
        if spec.contains(&point) {
            found.push(point);
            if found.len() >= limit {
                break;
            }
        }
        let mut k = 0;
        while k < t {
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == t {
            break;
        }
    }
    found
}
