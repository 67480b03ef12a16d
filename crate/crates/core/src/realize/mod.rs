//! From a rational affine variety `S ⊂ Aᵗ` to representations of an
//! elementary symplectic group and back.
//!
//! A point `s` gives the ring map `f_s: r_i ↦ s_i, u ↦ 1/(2M)`; `θ(s)` sends
//! the gadget `γ_{r_i} = e_{2e1}(1)e_{−2e1}(−1)e_{2e1}(1)e_{−2e1}(−r_i)` to
//! `γ_{s_i}`, and `ψ` reads the point back from traces as `c − τ_{γ_{r_i}}`.

mod roundtrip;

use thiserror::Error;

use crate::chevalley::{
    gamma_r_decomposition, is_symplectic, roots_of_cn, specialize, word_in_elementaries,
    ChevalleyError, Root,
};
use crate::polyring::{parse_ideal, parse_rationals, Ideal, PolyError, Polynomial};
use crate::repvar::{RepError, Representation};
use crate::{q, QMatrix, QPoly, Rational, RationalRep};

pub use roundtrip::{
    grid_points, roundtrip_check, RoundtripReport, SampleReport, SeparationReport,
};

/// The default calibration: `tr γ_r = 2 − r`.
pub const DEFAULT_CALIBRATION: i64 = 2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RealizeError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error("line {line}: bad point `{text}`")]
    BadPoint { line: usize, text: String },
    #[error("point has {got} coordinates, the variety lives in A^{dim}")]
    PointDimension { got: usize, dim: usize },
    #[error("point ({0}) is not on the variety")]
    OffVariety(String),
    #[error("M must be positive")]
    BadModulus,
}

fn show_point(p: &[Rational]) -> String {
    p.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// A `ℚ`-defined closed subvariety of `Aᵗ` with optional sample points.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineVarietySpec {
    pub ideal: Ideal<Rational>,
    pub points: Vec<Vec<Rational>>,
}

impl AffineVarietySpec {
    pub fn new(ideal: Ideal<Rational>, points: Vec<Vec<Rational>>) -> Result<Self, RealizeError> {
        let spec = AffineVarietySpec {
            ideal,
            points: Vec::new(),
        };
        for p in &points {
            spec.check_point(p)?;
        }
        Ok(AffineVarietySpec { points, ..spec })
    }

    /// Ideal text format plus `points: a, b, …` lines (one point per line).
    pub fn parse(text: &str) -> Result<Self, RealizeError> {
        let mut ideal_text = String::new();
        let mut points = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            match line.trim().strip_prefix("points:") {
                Some(rest) => {
                    let p = parse_rationals(rest).ok_or_else(|| RealizeError::BadPoint {
                        line: lineno + 1,
                        text: rest.trim().to_string(),
                    })?;
                    points.push(p);
                    ideal_text.push('\n');
                }
                None => {
                    ideal_text.push_str(line);
                    ideal_text.push('\n');
                }
            }
        }
        Self::new(parse_ideal(&ideal_text)?, points)
    }

    pub fn dim(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        p.len() == self.dim() && self.ideal.vanishes_at(p)
    }

    pub fn check_point(&self, p: &[Rational]) -> Result<(), RealizeError> {
        if p.len() != self.dim() {
            return Err(RealizeError::PointDimension {
                got: p.len(),
                dim: self.dim(),
            });
        }
        if !self.ideal.vanishes_at(p) {
            return Err(RealizeError::OffVariety(show_point(p)));
        }
        Ok(())
    }
}

/// `R = ℚ[r_1, …, r_t, u] / (I(S), 2M·u − 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RingPresentation {
    t: usize,
    modulus: u64,
    relations: Ideal<Rational>,
}

impl RingPresentation {
    pub fn new(spec: &AffineVarietySpec, modulus: u64) -> Result<Self, RealizeError> {
        if modulus == 0 {
            return Err(RealizeError::BadModulus);
        }
        let t = spec.dim();
        let mut vars: Vec<String> = (1..=t).map(|i| format!("r{i}")).collect();
        vars.push("u".into());
        let mut gens: Vec<QPoly> = spec.ideal.generators().to_vec();
        let u: QPoly = Polynomial::var(t);
        gens.push(&u.scale(&q(2 * modulus as i64)) - &Polynomial::constant(q(1)));
        Ok(RingPresentation {
            t,
            modulus,
            relations: Ideal::new(vars, gens)?,
        })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn relations(&self) -> &Ideal<Rational> {
        &self.relations
    }

    /// `1/(2M)`.
    pub fn inverted(&self) -> Rational {
        Rational::new(1.into(), (2 * self.modulus).into())
    }

    /// The coordinates in `U ⊂ A^{t+1}` of the homomorphism `f_s`.
    pub fn homomorphism(&self, s: &[Rational]) -> Result<Vec<Rational>, RealizeError> {
        if s.len() != self.t {
            return Err(RealizeError::PointDimension {
                got: s.len(),
                dim: self.t,
            });
        }
        let mut coords = s.to_vec();
        coords.push(self.inverted());
        if !self.relations.vanishes_at(&coords) {
            return Err(RealizeError::OffVariety(show_point(s)));
        }
        Ok(coords)
    }

    /// The gadget word `γ_{r_i}` (0-based `i`) as root elements over `R`.
    pub fn gamma_word(&self, i: usize) -> Vec<(Root, QPoly)> {
        gamma_r_decomposition(Polynomial::var(i))
    }
}

/// `U ≅ Hom(R, K)` as an ideal in `A^{t+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomVariety {
    pub ideal: Ideal<Rational>,
    pub dimension: i64,
}

pub fn hom_variety(rp: &RingPresentation) -> HomVariety {
    HomVariety {
        ideal: rp.relations.clone(),
        dimension: rp.relations.dimension(),
    }
}

/// `θ(s)`: the homomorphism `f_s` together with the representation of the
/// free group on `γ_{r_1}, …, γ_{r_t}` it induces in `Sp_4(ℚ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaImage {
    pub point: Vec<Rational>,
    pub homomorphism: Vec<Rational>,
    pub rep: RationalRep,
}

impl ThetaImage {
    /// Evaluates a formal product `∏ e_α(f)` of root elements over `R`.
    pub fn evaluate(&self, word: &[(Root, QPoly)]) -> Result<QMatrix, RealizeError> {
        let m = word_in_elementaries(&roots_of_cn(2)?, word)?;
        Ok(specialize(&m, &self.homomorphism))
    }
}

pub fn gadget_names(t: usize) -> Vec<String> {
    (1..=t).map(|i| format!("gamma_r{i}")).collect()
}

pub fn theta(
    spec: &AffineVarietySpec,
    rp: &RingPresentation,
    s: &[Rational],
) -> Result<ThetaImage, RealizeError> {
    spec.check_point(s)?;
    let homomorphism = rp.homomorphism(s)?;
    let mut image = ThetaImage {
        point: s.to_vec(),
        homomorphism,
        rep: Representation::trivial(Vec::new(), 4),
    };
    let matrices = (0..rp.t())
        .map(|i| image.evaluate(&rp.gamma_word(i)))
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert!(matrices.iter().all(is_symplectic));
    image.rep = Representation::new(gadget_names(rp.t()), 4, matrices)?;
    Ok(image)
}

/// A point read back from Fricke values.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiPoint {
    pub coords: Vec<Rational>,
    /// Every value equals 4, the trace of the trivial representation.
    pub trivial_representation: bool,
}

/// `(c − τ_{γ_{r_i}})_i`, membership-checked against `S`.
pub fn psi(
    spec: &AffineVarietySpec,
    fricke_values: &[Rational],
    c: &Rational,
) -> Result<PsiPoint, RealizeError> {
    let coords: Vec<Rational> = fricke_values.iter().map(|v| c - v).collect();
    spec.check_point(&coords)?;
    Ok(PsiPoint {
        trivial_representation: fricke_values.iter().all(|v| *v == q(4)),
        coords,
    })
}

/// `ψ` applied to the traces of a representation's generators.
pub fn psi_of_rep(
    spec: &AffineVarietySpec,
    rep: &RationalRep,
    c: &Rational,
) -> Result<PsiPoint, RealizeError> {
    let values: Vec<Rational> = rep.matrices().iter().map(QMatrix::trace).collect();
    psi(spec, &values, c)
}
