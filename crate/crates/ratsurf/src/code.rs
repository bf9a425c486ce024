//! Evaluation codes: sections of a linear system evaluated at the rational
//! points of a surface model.
//!
//! Plane systems on the blown-up-plane models evaluate at plane points;
//! for the model with a double-point center the blow-up replaces the
//! center by q+1 exceptional directions, where a section's value is its
//! tangent-cone quadratic (second-order Hasse coefficients) applied to the
//! direction.  Quadric sections evaluate at the q²+1 points of the quadric
//! in P³.  Point order is fixed — enumeration order, with exceptional
//! directions last — so identical inputs always produce byte-identical
//! generator matrices.

use crate::bounds::construction_lower_bound;
use crate::error::{Error, Result};
use crate::field::{Field, FieldRef};
use crate::geometry::{enumerate_points, HomogeneousForm, ProjSpace, ProjectivePoint};
use crate::linsys::{
    build_gamma, build_lambda, build_quadric_sections, make_surface, Ambient, LinearSystem,
    SurfaceKind, SurfaceModel,
};
use crate::matrix::FqMatrix;

/// One evaluation point of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalPoint {
    /// An ordinary rational point of the plane.
    Plane(ProjectivePoint),
    /// A direction (α:β) on the exceptional curve over the blown-up
    /// rational center.
    ExceptionalDir { alpha: u64, beta: u64 },
    /// A rational point of the quadric in P³.
    Space(ProjectivePoint),
}

/// A linear code built by evaluating a system's basis at a surface's
/// rational points, together with what is known about its distance.
#[derive(Clone, Debug)]
pub struct EvaluationCode {
    model: SurfaceModel,
    system: LinearSystem,
    points: Vec<EvalPoint>,
    gen: FqMatrix,
    vanishing_sections: usize,
    d_lower: u64,
    d_upper: Option<u64>,
    d_exact: Option<u64>,
}

impl EvaluationCode {
    pub fn field(&self) -> &FieldRef {
        self.system.field()
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn system(&self) -> &LinearSystem {
        &self.system
    }

    pub fn points(&self) -> &[EvalPoint] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.gen.nrows()
    }

    /// Row-reduced generator matrix; rows are linearly independent.
    pub fn gen(&self) -> &FqMatrix {
        &self.gen
    }

    /// Dimension of the space of sections vanishing at every point (the
    /// deficiency between the system dimension and the code dimension).
    pub fn vanishing_sections(&self) -> usize {
        self.vanishing_sections
    }

    pub fn d_lower(&self) -> u64 {
        self.d_lower
    }

    pub fn d_upper(&self) -> Option<u64> {
        self.d_upper
    }

    pub fn d_exact(&self) -> Option<u64> {
        self.d_exact
    }

    /// Registers a witnessed codeword weight (an upper bound on d).
    pub fn record_upper(&mut self, weight: u64) {
        assert!(
            weight >= self.d_lower,
            "witness of weight {weight} contradicts certified floor {}",
            self.d_lower
        );
        let better = self.d_upper.map_or(true, |u| weight < u);
        if better {
            self.d_upper = Some(weight);
        }
        self.resolve();
    }

    /// Registers a certified distance floor.
    pub fn record_lower(&mut self, floor: u64) {
        if let Some(u) = self.d_upper {
            assert!(floor <= u, "floor {floor} contradicts witnessed weight {u}");
        }
        if floor > self.d_lower {
            self.d_lower = floor;
        }
        self.resolve();
    }

    /// Registers an exactly computed distance.
    pub fn record_exact(&mut self, d: u64) {
        assert!(d >= self.d_lower, "exact distance {d} below certified floor {}", self.d_lower);
        if let Some(u) = self.d_upper {
            assert!(d <= u, "exact distance {d} above witnessed weight {u}");
        }
        self.d_lower = d;
        self.d_upper = Some(d);
        self.d_exact = Some(d);
    }

    fn resolve(&mut self) {
        if self.d_upper == Some(self.d_lower) {
            self.d_exact = Some(self.d_lower);
        }
    }

    /// The codeword of one section: its values at every evaluation point.
    pub fn evaluate_section(&self, form: &HomogeneousForm) -> Result<Vec<u64>> {
        section_row(&self.model, form, &self.points)
    }

    /// Generator matrix text: `q=<q> n=<n> k=<k>` then k rows of n values.
    pub fn matrix_text(&self) -> String {
        let mut out = format!("q={} n={} k={}\n", self.field().order(), self.n(), self.k());
        for r in 0..self.gen.nrows() {
            let row: Vec<String> = self.gen.row(r).iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses the generator-matrix text format back into a matrix.
pub fn parse_matrix_text(text: &str) -> Result<FqMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
    let mut q = None;
    let mut n = None;
    let mut k = None;
    for part in header.split_whitespace() {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header token '{part}'")))?;
        let v: u64 = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer '{value}' in header")))?;
        match key {
            "q" => q = Some(v),
            "n" => n = Some(v as usize),
            "k" => k = Some(v as usize),
            other => return Err(Error::Parse(format!("unknown header key '{other}'"))),
        }
    }
    let (q, n, k) = match (q, n, k) {
        (Some(q), Some(n), Some(k)) => (q, n, k),
        _ => return Err(Error::Parse("matrix header must set q, n and k".into())),
    };
    let field = Field::of_order(q)?;
    let mut rows = Vec::with_capacity(k);
    for line in lines {
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("bad entry '{tok}'"))))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!("row has {} entries, expected {n}", row.len())));
        }
        for &v in &row {
            if v >= field.order() {
                return Err(Error::ValueOutOfRange { value: v, order: field.order() });
            }
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Parse(format!("found {} rows, expected {k}", rows.len())));
    }
    Ok(FqMatrix::from_rows(&field, rows))
}

/// The ordered evaluation points of a (model, system) pair.
fn evaluation_points(model: &SurfaceModel, system: &LinearSystem) -> Result<Vec<EvalPoint>> {
    let field = model.field();
    if system.field() != field {
        return Err(Error::OwnerMismatch {
            expected: field.to_string(),
            got: system.field().to_string(),
        });
    }
    match (model, system.ambient()) {
        (SurfaceModel::EllipticQuadric { form }, Ambient::Quadric) => {
            Ok(enumerate_points(field, ProjSpace::Space)
                .filter(|p| form.evaluate(p).unwrap() == 0)
                .map(EvalPoint::Space)
                .collect())
        }
        (SurfaceModel::BlowupZ { .. }, Ambient::Plane) => {
            Ok(enumerate_points(field, ProjSpace::Plane).map(EvalPoint::Plane).collect())
        }
        (SurfaceModel::BlowupY { center, .. }, Ambient::Plane) => {
            let mut points: Vec<EvalPoint> = enumerate_points(field, ProjSpace::Plane)
                .filter(|p| p != center)
                .map(EvalPoint::Plane)
                .collect();
            // Exceptional directions (α:β), canonical order.
            points.push(EvalPoint::ExceptionalDir { alpha: 0, beta: 1 });
            for b in 0..field.order() {
                points.push(EvalPoint::ExceptionalDir { alpha: 1, beta: b });
            }
            Ok(points)
        }
        _ => Err(Error::AmbientMismatch),
    }
}

/// Values of one section at the given points.
fn section_row(
    model: &SurfaceModel,
    form: &HomogeneousForm,
    points: &[EvalPoint],
) -> Result<Vec<u64>> {
    let field = model.field().clone();
    // The tangent-cone quadratic at the blown-up center, if relevant.
    let cone = match model {
        SurfaceModel::BlowupY { center, .. } if form.degree() >= 2 => {
            Some(tangent_cone_coeffs(form, center)?)
        }
        _ => None,
    };
    points
        .iter()
        .map(|pt| match pt {
            EvalPoint::Plane(p) | EvalPoint::Space(p) => form.evaluate(p),
            EvalPoint::ExceptionalDir { alpha, beta } => {
                let (cuu, cuv, cvv) = cone.expect("exceptional point outside a blow-up model");
                let a2 = field.mul(field.mul(*alpha, *alpha), cuu);
                let ab = field.mul(field.mul(*alpha, *beta), cuv);
                let b2 = field.mul(field.mul(*beta, *beta), cvv);
                Ok(field.add(field.add(a2, ab), b2))
            }
        })
        .collect()
}

/// Coefficients (c_uu, c_uv, c_vv) of the tangent-cone quadratic of `form`
/// at `center`, in the chart coordinates given by the center's leading
/// position.  For a section with a double point at the center this is the
/// restriction of its strict transform to the exceptional curve.
pub fn tangent_cone_coeffs(
    form: &HomogeneousForm,
    center: &ProjectivePoint,
) -> Result<(u64, u64, u64)> {
    let chart = center.lead_position();
    let mut vars = (0..3).filter(|&v| v != chart);
    let u = vars.next().unwrap();
    let v = vars.next().unwrap();
    Ok((
        form.hasse_deriv2(u, u).evaluate(center)?,
        form.hasse_deriv2(u, v).evaluate(center)?,
        form.hasse_deriv2(v, v).evaluate(center)?,
    ))
}

/// Evaluates the system at the model's points and assembles the code.
pub fn build_code(model: &SurfaceModel, system: &LinearSystem) -> Result<EvaluationCode> {
    let points = evaluation_points(model, system)?;
    let field = model.field().clone();
    let rows: Vec<Vec<u64>> = system
        .basis()
        .iter()
        .map(|form| section_row(model, form, &points))
        .collect::<Result<_>>()?;
    let mut gen = FqMatrix::from_rows(&field, rows);
    gen.rref();
    gen.drop_zero_rows();
    let vanishing_sections = system.dimension() - gen.nrows();
    let n = points.len() as u64;
    let d_lower = match construction_lower_bound(model, system) {
        Ok(bound) if bound.value < n => n - bound.value,
        _ => 1, // no stated floor in range; nonzero codewords still have weight ≥ 1
    };
    let d_upper = (0..gen.nrows())
        .map(|r| gen.row(r).iter().filter(|&&v| v != 0).count() as u64)
        .min();
    let mut code = EvaluationCode {
        model: model.clone(),
        system: system.clone(),
        points,
        gen,
        vanishing_sections,
        d_lower,
        d_upper,
        d_exact: None,
    };
    code.resolve();
    Ok(code)
}

/// The named constructions: surface, system degree, and the command-line
/// tag under which each is reachable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Quadratic sections of the elliptic quadric: [q²+1, 9].
    QuadricM2,
    /// Cubic sections of the elliptic quadric: [q²+1, 16].
    QuadricM3,
    /// Degree-4 curves, double point at the rational center, through the
    /// degree-4 point: [(q+1)², 8].
    YF4,
    /// Cubics through the degree-3 center: [q²+q+1, 7].
    ZL3,
    /// Quartics through the degree-3 center: [q²+q+1, 12].
    ZL4,
    /// Quintics through the degree-3 center: [q²+q+1, 18].
    ZL5,
}

impl Construction {
    pub fn all() -> [Construction; 6] {
        [
            Construction::QuadricM2,
            Construction::QuadricM3,
            Construction::YF4,
            Construction::ZL3,
            Construction::ZL4,
            Construction::ZL5,
        ]
    }

    pub fn tag(self) -> &'static str {
        match self {
            Construction::QuadricM2 => "quadric-m2",
            Construction::QuadricM3 => "quadric-m3",
            Construction::YF4 => "Y-F4",
            Construction::ZL3 => "Z-L3",
            Construction::ZL4 => "Z-L4",
            Construction::ZL5 => "Z-L5",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Construction> {
        Construction::all()
            .into_iter()
            .find(|c| c.tag() == tag)
            .ok_or_else(|| Error::UnknownConstruction(tag.to_string()))
    }

    pub fn surface(self) -> SurfaceKind {
        match self {
            Construction::QuadricM2 | Construction::QuadricM3 => SurfaceKind::EllipticQuadric,
            Construction::YF4 => SurfaceKind::BlowupY,
            Construction::ZL3 | Construction::ZL4 | Construction::ZL5 => SurfaceKind::BlowupZ,
        }
    }

    /// System degree: m for quadric sections, i for plane systems.
    pub fn degree(self) -> u32 {
        match self {
            Construction::QuadricM2 => 2,
            Construction::QuadricM3 => 3,
            Construction::YF4 | Construction::ZL4 => 4,
            Construction::ZL3 => 3,
            Construction::ZL5 => 5,
        }
    }
}

/// Builds the system of the given degree on a surface of the given kind.
pub fn build_system(model: &SurfaceModel, degree: u32) -> Result<LinearSystem> {
    match model.kind() {
        SurfaceKind::EllipticQuadric => build_quadric_sections(model, degree),
        SurfaceKind::BlowupY => build_lambda(model, degree),
        SurfaceKind::BlowupZ => build_gamma(model, degree),
    }
}

/// One-call pipeline for a named construction over F_q.
pub fn build_construction(field: &FieldRef, construction: Construction) -> Result<EvaluationCode> {
    let model = make_surface(field, construction.surface())?;
    let system = build_system(&model, construction.degree())?;
    build_code(&model, &system)
}
