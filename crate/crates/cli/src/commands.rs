use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use fricke_core::charvar::{
    generic_witness, kappa_closed_form, kappa_elimination, kappa_orbit, CharVarError, KappaMethod,
    KappaReport,
};
use fricke_core::chevalley::{
    e_alpha, golden_text, is_symplectic, roots_of_cn, verify_all_pairs, weyl_dim, ChevalleyError,
    RootSystemC,
};
use fricke_core::polyring::{parse_rationals, Polynomial};
use fricke_core::realize::{
    grid_points, roundtrip_check, AffineVarietySpec, RingPresentation, RoundtripReport,
};
use fricke_core::repvar::RepFile;
use fricke_core::words::{parse_presentation, Presentation};
use fricke_core::{QPoly, Rational};

use crate::config::RunConfig;
use crate::{ChevalleyArgs, Failure, KappaArgs, RealizeArgs};

/// How many grid points to look for when a variety file lists none.
const GRID_SAMPLES: usize = 8;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn emit(cfg: &RunConfig, report: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    println!("{text}");
    if let Some(path) = &cfg.output {
        fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// A presentation file: the DSL, possibly spread over several lines, with
/// `#` comments.
pub fn read_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = read(path)?;
    let body: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    parse_presentation(&body.join(" "))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    match parse_rationals(s).as_deref() {
        Some([v]) => Ok(v.clone()),
        _ => Err(Failure::Input(format!("not a rational number: `{s}`"))),
    }
}

#[derive(Serialize)]
struct Skipped {
    method: KappaMethod,
    reason: String,
}

#[derive(Serialize)]
struct KappaOutput<'a> {
    config: &'a RunConfig,
    group: String,
    n: usize,
    reports: Vec<KappaReport>,
    skipped: Vec<Skipped>,
    agree: bool,
}

pub fn kappa(cfg: &RunConfig, args: &KappaArgs) -> Result<(), Failure> {
    let p = read_presentation(&args.group)?;
    if args.n == 0 {
        return Err(Failure::Input("--n must be positive".into()));
    }
    let methods = match args.method.as_str() {
        "all" => vec![
            KappaMethod::ClosedForm,
            KappaMethod::Orbit,
            KappaMethod::Elimination,
        ],
        m => vec![m.parse().map_err(Failure::Input)?],
    };
    let explicit = methods.len() == 1;
    let witness = match &args.witness {
        Some(path) => Some(
            RepFile::parse(&read(path)?)
                .and_then(|f| f.to_rep(&p))
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };

    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for method in methods {
        let result = match method {
            KappaMethod::ClosedForm => kappa_closed_form(&p, args.n),
            KappaMethod::Orbit => match &witness {
                Some(w) => kappa_orbit(&p, args.n, w, cfg.word_length),
                None => generic_witness(&p, args.n, cfg.seed, cfg.tries)
                    .and_then(|w| kappa_orbit(&p, args.n, &w, cfg.word_length)),
            },
            KappaMethod::Elimination => kappa_elimination(&p, args.n, cfg.word_length, cfg.cap),
        };
        match result {
            Ok(r) => reports.push(r),
            Err(
                e @ (CharVarError::NotFree
                | CharVarError::NeedWitness
                | CharVarError::CapExceeded { .. }),
            ) if !explicit => skipped.push(Skipped {
                method,
                reason: e.to_string(),
            }),
            Err(e) => return Err(Failure::Input(e.to_string())),
        }
    }
    if reports.is_empty() {
        return Err(Failure::Input(
            "no method applies; supply --witness or raise --cap".into(),
        ));
    }
    let agree = reports.windows(2).all(|w| w[0].value == w[1].value);
    emit(
        cfg,
        &KappaOutput {
            config: cfg,
            group: p.to_string(),
            n: args.n,
            reports,
            skipped,
            agree,
        },
    )?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Verification("methods disagree".into()))
    }
}

/// `w1+2w2`, `2w1`, `0`, or a comma list of coefficients.
pub fn parse_weight(s: &str, rank: usize) -> Result<Vec<u32>, String> {
    let bad = || format!("bad weight `{s}`");
    let s = s.trim();
    if s.contains(',') {
        let coeffs = s
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        return if coeffs.len() == rank {
            Ok(coeffs)
        } else {
            Err(format!("weight `{s}` needs {rank} coefficients"))
        };
    }
    let mut coeffs = vec![0u32; rank];
    if s == "0" {
        return Ok(coeffs);
    }
    for term in s.split('+') {
        let term = term.trim();
        let (mult, idx) = term.split_once(['w', 'ω']).ok_or_else(bad)?;
        let mult = if mult.is_empty() {
            1
        } else {
            mult.parse::<u32>().map_err(|_| bad())?
        };
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 || idx > rank {
            return Err(format!("no fundamental weight w{idx} in rank {rank}"));
        }
        coeffs[idx - 1] += mult;
    }
    Ok(coeffs)
}

fn check_root_elements(system: &RootSystemC) -> Result<usize, ChevalleyError> {
    let s: QPoly = Polynomial::var(0);
    let t: QPoly = Polynomial::var(1);
    let mut checked = 0;
    for alpha in system.roots() {
        let es = e_alpha(system, alpha, &s)?;
        let law = &es * &e_alpha(system, alpha, &t)? == e_alpha(system, alpha, &(&s + &t))?;
        if !is_symplectic(&es) || !law {
            return Err(ChevalleyError::IdentityFailed {
                alpha: alpha.clone(),
                beta: alpha.clone(),
            });
        }
        checked += 1;
    }
    Ok(checked)
}

pub fn chevalley_check(cfg: &RunConfig, args: &ChevalleyArgs) -> Result<(), Failure> {
    let system = roots_of_cn(args.rank).map_err(|e| Failure::Input(e.to_string()))?;
    let weyl = match &args.weyl {
        Some(w) => {
            let coeffs = parse_weight(w, args.rank).map_err(Failure::Input)?;
            let dim = weyl_dim(&system, &coeffs).map_err(|e| Failure::Input(e.to_string()))?;
            Some(json!({ "weight": coeffs, "dimension": dim }))
        }
        None => None,
    };
    let golden = match &args.golden {
        Some(path) => Some(read(path)?),
        None => None,
    };

    let mut out = json!({
        "config": cfg,
        "rank": args.rank,
        "roots": system.roots().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "weyl": weyl,
    });
    let checks = check_root_elements(&system).and_then(|n| Ok((n, verify_all_pairs(&system)?)));
    let failure = match checks {
        Ok((symplectic, pairs)) => {
            let text = golden_text(&system, &pairs);
            let golden_match = golden.as_ref().map(|g| *g == text);
            out["symplectic_checked"] = json!(symplectic);
            out["pairs_checked"] = json!(pairs.len());
            out["constants"] = serde_json::to_value(&pairs).expect("serializable");
            out["golden_match"] = json!(golden_match);
            (golden_match == Some(false))
                .then(|| "constants differ from the golden file".to_string())
        }
        Err(e) => Some(e.to_string()),
    };
    out["pass"] = Value::Bool(failure.is_none());
    emit(cfg, &out)?;
    failure.map_or(Ok(()), |msg| Err(Failure::Verification(msg)))
}

#[derive(Serialize)]
struct RealizeOutput<'a> {
    config: &'a RunConfig,
    sample_source: &'static str,
    #[serde(flatten)]
    report: RoundtripReport,
}

pub fn realize(cfg: &RunConfig, args: &RealizeArgs) -> Result<(), Failure> {
    let text = read(&args.variety)?;
    let spec = AffineVarietySpec::parse(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.variety.display())))?;
    let c = parse_rational(&cfg.c)?;
    let rp =
        RingPresentation::new(&spec, cfg.modulus).map_err(|e| Failure::Input(e.to_string()))?;
    let (samples, sample_source) = if spec.points.is_empty() {
        (grid_points(&spec, cfg.grid_height, GRID_SAMPLES), "grid")
    } else {
        (spec.points.clone(), "file")
    };
    let report =
        roundtrip_check(&spec, &rp, &samples, &c).map_err(|e| Failure::Input(e.to_string()))?;
    if let Some(w) = &report.warning {
        eprintln!("fricke: warning: {w}");
    }
    let pass = report.pass;
    emit(
        cfg,
        &RealizeOutput {
            config: cfg,
            sample_source,
            report,
        },
    )?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification(
            "ψ∘θ differs from the identity on some sample".into(),
        ))
    }
}
