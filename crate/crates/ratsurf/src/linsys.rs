//! Linear systems of forms with base conditions, and the three surface
//! models whose codes this crate builds.
//!
//! A base condition prescribes vanishing (multiplicity 1) or a double
//! point (multiplicity 2) at a closed point.  Conditions at a degree-d
//! point are F_q-linear once the extension-field evaluation rows are
//! expanded to base coordinates, so every system is the kernel of one
//! constraint matrix over F_q.
//!
//! The surface models are: the elliptic quadric in P³ (q²+1 rational
//! points), the plane blown up at one rational point and one degree-4
//! point on a conjugate-line conic, and the plane blown up at one
//! non-collinear degree-3 point.  Each model fixes its data
//! deterministically from the field alone, so identical inputs always
//! rebuild identical models.

use crate::error::{Error, Result};
use crate::field::{Field, FieldRef};
use crate::geometry::{
    closed_point, enumerate_points, monomial_count, monomial_exponents, ClosedPoint,
    HomogeneousForm, PlaneCurve, PointConstraint, ProjSpace, ProjectivePoint,
    find_closed_point,
};
use crate::matrix::FqMatrix;

/// A vanishing or double-point condition at one closed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCondition {
    point: ClosedPoint,
    multiplicity: u8,
}

impl BaseCondition {
    pub fn new(point: ClosedPoint, multiplicity: u8) -> Result<Self> {
        if multiplicity == 0 || multiplicity > 2 {
            return Err(Error::UnsupportedMultiplicity(multiplicity));
        }
        Ok(BaseCondition { point, multiplicity })
    }

    pub fn point(&self) -> &ClosedPoint {
        &self.point
    }

    pub fn multiplicity(&self) -> u8 {
        self.multiplicity
    }
}

/// Constraint rows over the base field for one condition on degree-`degree`
/// plane forms.  A form satisfies the condition iff its coefficient vector
/// lies in the kernel of the returned matrix.
///
/// Multiplicity 1 contributes the evaluation functional at every orbit
/// member; each extension-field row expands to `d` base-field rows.
/// Multiplicity 2 adds the two first-order Hasse-derivative functionals in
/// the affine chart given by the point's leading coordinate.  All rows are
/// stacked and row-reduced, so the result is duplicate-free: d rows for a
/// simple degree-d point, 3 rows for a double rational point.
pub fn multiplicity_rows(point: &ClosedPoint, multiplicity: u8, degree: u32) -> Result<FqMatrix> {
    if multiplicity == 0 || multiplicity > 2 {
        return Err(Error::UnsupportedMultiplicity(multiplicity));
    }
    if degree < multiplicity as u32 {
        return Err(Error::DegreeOutOfRange {
            what: "form degree under a multiplicity condition",
            min: multiplicity as u32,
            got: degree,
        });
    }
    let base = point.base().clone();
    let exps = monomial_exponents(3, degree);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for member in point.orbit() {
        let ext = member.field().clone();
        let mut functionals: Vec<Vec<u64>> = Vec::new();
        functionals.push(
            exps.iter().map(|e| monomial_functional(&ext, member.coords(), e, None)).collect(),
        );
        if multiplicity == 2 {
            let chart = member.lead_position();
            for var in 0..3 {
                if var == chart {
                    continue;
                }
                functionals.push(
                    exps.iter()
                        .map(|e| monomial_functional(&ext, member.coords(), e, Some(var)))
                        .collect(),
                );
            }
        }
        let rel = if point.degree() == 1 { 1 } else { ext.relative_degree().unwrap() as usize };
        for row in functionals {
            if rel == 1 {
                rows.push(row);
            } else {
                let mut expanded = vec![vec![0u64; row.len()]; rel];
                for (m, &v) in row.iter().enumerate() {
                    for (j, c) in ext.expand_to_base(v).into_iter().enumerate() {
                        expanded[j][m] = c;
                    }
                }
                rows.extend(expanded);
            }
        }
    }
    let mut matrix = FqMatrix::from_rows(&base, rows);
    matrix.rref();
    matrix.drop_zero_rows();
    Ok(matrix)
}

/// Value at `coords` of one monomial, or of its first-order Hasse
/// derivative with respect to `deriv`.
fn monomial_functional(f: &FieldRef, coords: &[u64], exps: &[u8; 4], deriv: Option<usize>) -> u64 {
    let mut e = *exps;
    let mut acc = 1u64;
    if let Some(v) = deriv {
        if e[v] == 0 {
            return 0;
        }
        acc = f.scalar(e[v] as u64);
        if acc == 0 {
            return 0;
        }
        e[v] -= 1;
    }
    for (i, &x) in coords.iter().enumerate() {
        if e[i] == 0 {
            continue;
        }
        if x == 0 {
            return 0;
        }
        acc = f.mul(acc, f.pow(x, e[i] as u64));
    }
    acc
}

/// Ambient space of a linear system: plane curves or quadric sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Plane,
    Quadric,
}

impl Ambient {
    pub fn nvars(self) -> usize {
        match self {
            Ambient::Plane => 3,
            Ambient::Quadric => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Ambient::Plane => "plane",
            Ambient::Quadric => "quadric",
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        match label {
            "plane" => Ok(Ambient::Plane),
            "quadric" => Ok(Ambient::Quadric),
            other => Err(Error::Parse(format!("unknown ambient '{other}'"))),
        }
    }
}

/// A linear system: an explicit F_q-basis of forms of one degree, cut out
/// by base conditions (plane) or taken modulo multiples of the quadric
/// equation (quadric sections, stored as complement-basis monomial forms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    field: FieldRef,
    ambient: Ambient,
    degree: u32,
    conditions: Vec<BaseCondition>,
    basis: Vec<HomogeneousForm>,
}

impl LinearSystem {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn conditions(&self) -> &[BaseCondition] {
        &self.conditions
    }

    pub fn basis(&self) -> &[HomogeneousForm] {
        &self.basis
    }

    /// Vector-space dimension (the number of basis forms).
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The section Σ message_i · basis_i.
    pub fn linear_combination(&self, message: &[u64]) -> HomogeneousForm {
        assert_eq!(message.len(), self.basis.len(), "message length must match dimension");
        let nvars = self.ambient.nvars();
        let mut coeffs = vec![0u64; monomial_count(nvars, self.degree)];
        for (m, form) in message.iter().zip(&self.basis) {
            if *m == 0 {
                continue;
            }
            for (c, &b) in coeffs.iter_mut().zip(form.coeffs()) {
                *c = self.field.add(*c, self.field.mul(*m, b));
            }
        }
        HomogeneousForm::new(&self.field, nvars, self.degree, coeffs).unwrap()
    }

    /// Header `ambient=<plane|quadric> q=<q> deg=<i>`, then one
    /// space-separated coefficient line per basis form.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "ambient={} q={} deg={}\n",
            self.ambient.label(),
            self.field.order(),
            self.degree
        );
        for form in &self.basis {
            let coeffs: Vec<String> = form.coeffs().iter().map(|c| c.to_string()).collect();
            out.push_str(&coeffs.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text form.  Base conditions are not serialized; the
    /// parsed system carries the basis only.
    pub fn parse(text: &str) -> Result<LinearSystem> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty system text".into()))?;
        let mut ambient = None;
        let mut q = None;
        let mut deg = None;
        for part in header.split_whitespace() {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header token '{part}'")))?;
            match key {
                "ambient" => ambient = Some(Ambient::from_label(value)?),
                "q" => {
                    q = Some(value.parse::<u64>().map_err(|_| {
                        Error::Parse(format!("bad field order '{value}'"))
                    })?)
                }
                "deg" => {
                    deg = Some(value.parse::<u32>().map_err(|_| {
                        Error::Parse(format!("bad degree '{value}'"))
                    })?)
                }
                other => return Err(Error::Parse(format!("unknown header key '{other}'"))),
            }
        }
        let (ambient, q, degree) = match (ambient, q, deg) {
            (Some(a), Some(q), Some(d)) => (a, q, d),
            _ => return Err(Error::Parse("system header must set ambient, q and deg".into())),
        };
        let field = Field::of_order(q)?;
        let mut basis = Vec::new();
        for line in lines {
            let coeffs: Vec<u64> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse().map_err(|_| Error::Parse(format!("bad coefficient '{tok}'")))
                })
                .collect::<Result<_>>()?;
            basis.push(HomogeneousForm::new(&field, ambient.nvars(), degree, coeffs)?);
        }
        Ok(LinearSystem { field, ambient, degree, conditions: Vec::new(), basis })
    }
}

/// General plane-system builder: all degree-`degree` forms satisfying every
/// condition, as a kernel basis of the stacked constraint matrix.
pub fn plane_system(
    field: &FieldRef,
    degree: u32,
    conditions: Vec<BaseCondition>,
) -> Result<LinearSystem> {
    let cols = monomial_count(3, degree);
    let mut constraints = FqMatrix::zero(field, 0, cols);
    for cond in &conditions {
        if cond.point().base() != field {
            return Err(Error::OwnerMismatch {
                expected: field.to_string(),
                got: cond.point().base().to_string(),
            });
        }
        constraints.stack(&multiplicity_rows(cond.point(), cond.multiplicity(), degree)?);
    }
    let basis = constraints
        .kernel_basis()
        .into_iter()
        .map(|v| HomogeneousForm::new(field, 3, degree, v).unwrap())
        .collect();
    Ok(LinearSystem { field: field.clone(), ambient: Ambient::Plane, degree, conditions, basis })
}

/// The three surfaces whose evaluation codes this crate studies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceModel {
    /// Zero set in P³ of x₀x₁ − n(x₂,x₃) with n the least irreducible
    /// binary quadratic; has exactly q²+1 rational points and no rational
    /// lines.
    EllipticQuadric { form: HomogeneousForm },
    /// Plane marked with the least rational point P, the conic D through P
    /// that splits into two conjugate lines over F_{q²}, and the least
    /// degree-4 closed point R on D.  Codes evaluate curves with a double
    /// point at P passing through R.
    BlowupY { center: ProjectivePoint, conic: PlaneCurve, quartic_point: ClosedPoint },
    /// Plane marked with the least non-collinear degree-3 closed point.
    BlowupZ { center: ClosedPoint },
}

/// Variant selector for [`make_surface`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    EllipticQuadric,
    BlowupY,
    BlowupZ,
}

impl SurfaceModel {
    pub fn field(&self) -> &FieldRef {
        match self {
            SurfaceModel::EllipticQuadric { form } => form.field(),
            SurfaceModel::BlowupY { center, .. } => center.field(),
            SurfaceModel::BlowupZ { center } => center.base(),
        }
    }

    pub fn kind(&self) -> SurfaceKind {
        match self {
            SurfaceModel::EllipticQuadric { .. } => SurfaceKind::EllipticQuadric,
            SurfaceModel::BlowupY { .. } => SurfaceKind::BlowupY,
            SurfaceModel::BlowupZ { .. } => SurfaceKind::BlowupZ,
        }
    }

    pub fn as_quadric(&self) -> Option<&HomogeneousForm> {
        match self {
            SurfaceModel::EllipticQuadric { form } => Some(form),
            _ => None,
        }
    }

    pub fn as_blowup_y(&self) -> Option<(&ProjectivePoint, &PlaneCurve, &ClosedPoint)> {
        match self {
            SurfaceModel::BlowupY { center, conic, quartic_point } => {
                Some((center, conic, quartic_point))
            }
            _ => None,
        }
    }

    pub fn as_blowup_z(&self) -> Option<&ClosedPoint> {
        match self {
            SurfaceModel::BlowupZ { center } => Some(center),
            _ => None,
        }
    }
}

/// Coefficients (c0, c1) of the least irreducible monic quadratic
/// t² + c1·t + c0 over the field, scanning c0 then c1 in encoding order.
pub fn least_irreducible_quadratic(field: &FieldRef) -> (u64, u64) {
    let q = field.order();
    for c0 in 0..q {
        for c1 in 0..q {
            let has_root = (0..q)
                .any(|x| field.add(field.add(field.mul(x, x), field.mul(c1, x)), c0) == 0);
            if !has_root {
                return (c0, c1);
            }
        }
    }
    unreachable!("every finite field admits an irreducible quadratic")
}

/// Builds the requested surface model deterministically from the field.
pub fn make_surface(field: &FieldRef, kind: SurfaceKind) -> Result<SurfaceModel> {
    match kind {
        SurfaceKind::EllipticQuadric => {
            let (c0, c1) = least_irreducible_quadratic(field);
            let form = HomogeneousForm::from_terms(
                field,
                4,
                2,
                &[
                    ([1, 1, 0, 0], 1),
                    ([0, 0, 2, 0], field.neg(1)),
                    ([0, 0, 1, 1], field.neg(c1)),
                    ([0, 0, 0, 2], field.neg(c0)),
                ],
            )?;
            let q = field.order();
            let points = enumerate_points(field, ProjSpace::Space)
                .filter(|p| form.evaluate(p).unwrap() == 0)
                .count() as u64;
            if points != q * q + 1 {
                return Err(Error::ModelCheck(format!(
                    "quadric over F_{q} has {points} rational points, expected {}",
                    q * q + 1
                )));
            }
            Ok(SurfaceModel::EllipticQuadric { form })
        }
        SurfaceKind::BlowupY => {
            let center = ProjectivePoint::new(field, &[0, 0, 1])?;
            let (c0, c1) = least_irreducible_quadratic(field);
            let conic = PlaneCurve::new(HomogeneousForm::from_terms(
                field,
                3,
                2,
                &[([2, 0, 0, 0], 1), ([1, 1, 0, 0], c1), ([0, 2, 0, 0], c0)],
            )?)?;
            let q = field.order();
            if conic.form().evaluate(&center)? != 0 {
                return Err(Error::ModelCheck("conic misses its center".into()));
            }
            if conic.count_points() != 1 {
                return Err(Error::ModelCheck(format!(
                    "conic over F_{q} should have exactly one rational point"
                )));
            }
            // Over F_{q²} the conic splits into two conjugate lines: 2q²+1
            // points.
            let ext = Field::extension(field, 2)?;
            let ext_points = enumerate_points(&ext, ProjSpace::Plane)
                .filter(|p| conic.form().evaluate(p).unwrap() == 0)
                .count() as u64;
            if ext_points != 2 * q * q + 1 {
                return Err(Error::ModelCheck(format!(
                    "conic has {ext_points} points over the quadratic extension, expected {}",
                    2 * q * q + 1
                )));
            }
            let quartic_point = find_closed_point(field, 4, &PointConstraint::OnCurve(&conic))?;
            Ok(SurfaceModel::BlowupY { center, conic, quartic_point })
        }
        SurfaceKind::BlowupZ => {
            let center = find_closed_point(field, 3, &PointConstraint::NonCollinear)?;
            Ok(SurfaceModel::BlowupZ { center })
        }
    }
}

/// Degree-`i` plane curves through the degree-3 center (i ≥ 3).
/// Vector-space dimensions: 7, 12, 18 for i = 3, 4, 5.
pub fn build_gamma(model: &SurfaceModel, i: u32) -> Result<LinearSystem> {
    let center = model.as_blowup_z().ok_or(Error::AmbientMismatch)?;
    if i < 3 {
        return Err(Error::DegreeOutOfRange {
            what: "degree of curves through the cubic center",
            min: 3,
            got: i,
        });
    }
    let field = model.field().clone();
    plane_system(&field, i, vec![BaseCondition::new(center.clone(), 1)?])
}

/// Degree-`i` plane curves with a double point at the rational center and
/// passing through the degree-4 point (i ≥ 4).  Vector-space dimensions:
/// 8 for i = 4, 14 for i = 5.
pub fn build_lambda(model: &SurfaceModel, i: u32) -> Result<LinearSystem> {
    let (center, _, quartic_point) = model.as_blowup_y().ok_or(Error::AmbientMismatch)?;
    if i < 4 {
        return Err(Error::DegreeOutOfRange {
            what: "degree of curves with a double point at the center",
            min: 4,
            got: i,
        });
    }
    let field = model.field().clone();
    let conditions = vec![
        BaseCondition::new(closed_point(center, &field)?, 2)?,
        BaseCondition::new(quartic_point.clone(), 1)?,
    ];
    plane_system(&field, i, conditions)
}

/// Degree-`m` forms on the quadric modulo multiples of its equation,
/// represented by the standard-monomial complement basis.  Dimension
/// (m+1)².
pub fn build_quadric_sections(model: &SurfaceModel, m: u32) -> Result<LinearSystem> {
    let form = model.as_quadric().ok_or(Error::AmbientMismatch)?;
    if m < 1 {
        return Err(Error::DegreeOutOfRange { what: "section degree on the quadric", min: 1, got: m });
    }
    let field = model.field().clone();
    let pivots = quadric_ideal_rref(form, m).1;
    let exps = monomial_exponents(4, m);
    let mut basis = Vec::new();
    for (idx, e) in exps.iter().enumerate() {
        if pivots.contains(&idx) {
            continue;
        }
        basis.push(HomogeneousForm::from_terms(&field, 4, m, &[(*e, 1)])?);
    }
    debug_assert_eq!(basis.len(), ((m + 1) * (m + 1)) as usize);
    Ok(LinearSystem {
        field,
        ambient: Ambient::Quadric,
        degree: m,
        conditions: Vec::new(),
        basis,
    })
}

/// Row-reduced coefficient matrix of { monomial · F } spanning the ideal's
/// degree-m slice, plus its pivot columns.
fn quadric_ideal_rref(form: &HomogeneousForm, m: u32) -> (FqMatrix, Vec<usize>) {
    let field = form.field().clone();
    let cols = monomial_count(4, m);
    let mut rows = Vec::new();
    if m >= 2 {
        for e in monomial_exponents(4, m - 2) {
            let mono = HomogeneousForm::from_terms(&field, 4, m - 2, &[(e, 1)]).unwrap();
            rows.push(mono.mul(form).coeffs().to_vec());
        }
    }
    let mut matrix = if rows.is_empty() {
        FqMatrix::zero(&field, 0, cols)
    } else {
        FqMatrix::from_rows(&field, rows)
    };
    let pivots = matrix.rref();
    matrix.drop_zero_rows();
    (matrix, pivots)
}

/// Coordinates of a degree-m form in the complement basis: the coefficient
/// vector after eliminating the pivot positions of the ideal slice.  Two
/// forms congruent modulo multiples of the quadric reduce identically.
pub fn quadric_complement_coords(model: &SurfaceModel, form: &HomogeneousForm) -> Result<Vec<u64>> {
    let surface = model.as_quadric().ok_or(Error::AmbientMismatch)?;
    if form.nvars() != 4 {
        return Err(Error::VariableCount { expected: 4, got: form.nvars() });
    }
    let field = model.field().clone();
    let (ideal, pivots) = quadric_ideal_rref(surface, form.degree());
    let mut v = form.coeffs().to_vec();
    for (row, &col) in pivots.iter().enumerate() {
        let factor = v[col];
        if factor == 0 {
            continue;
        }
        for (x, &r) in v.iter_mut().zip(ideal.row(row)) {
            *x = field.sub(*x, field.mul(factor, r));
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn condition_row_counts_and_ranks() {
        let f3 = Field::new(3, 1).unwrap();
        // Simple rational point: one row, whatever the degree.
        let p = closed_point(&ProjectivePoint::new(&f3, &[0, 0, 1]).unwrap(), &f3).unwrap();
        for degree in 1..=5 {
            assert_eq!(multiplicity_rows(&p, 1, degree).unwrap().nrows(), 1);
        }
        // Double rational point: three independent rows.
        let rows = multiplicity_rows(&p, 2, 4).unwrap();
        assert_eq!(rows.nrows(), 3);
        assert_eq!(rows.clone().rank(), 3);
        // Simple degree-4 point (on the split conic): four rows of rank 4.
        let y = make_surface(&f3, SurfaceKind::BlowupY).unwrap();
        let (_, _, r) = y.as_blowup_y().unwrap();
        assert_eq!(r.degree(), 4);
        let rows = multiplicity_rows(r, 1, 4).unwrap();
        assert_eq!(rows.nrows(), 4);
        assert_eq!(rows.clone().rank(), 4);
        // Simple degree-3 point: three rows.
        let z = make_surface(&f3, SurfaceKind::BlowupZ).unwrap();
        let rows = multiplicity_rows(z.as_blowup_z().unwrap(), 1, 3).unwrap();
        assert_eq!(rows.nrows(), 3);
        // Guard rails.
        assert!(multiplicity_rows(&p, 3, 4).is_err());
        assert!(multiplicity_rows(&p, 2, 1).is_err());
    }

    #[test]
    fn curve_system_dimensions_through_cubic_point() {
        for q in [3u64, 7] {
            let field = Field::of_order(q).unwrap();
            let z = make_surface(&field, SurfaceKind::BlowupZ).unwrap();
            assert_eq!(build_gamma(&z, 3).unwrap().dimension(), 7);
            assert_eq!(build_gamma(&z, 4).unwrap().dimension(), 12);
            assert_eq!(build_gamma(&z, 5).unwrap().dimension(), 18);
            assert!(build_gamma(&z, 2).is_err());
        }
    }

    #[test]
    fn double_point_system_dimensions() {
        for q in [3u64, 4] {
            let field = Field::of_order(q).unwrap();
            let y = make_surface(&field, SurfaceKind::BlowupY).unwrap();
            let l4 = build_lambda(&y, 4).unwrap();
            assert_eq!(l4.dimension(), 8);
            // Rank–nullity: the seven constraint rows are independent.
            let mut constraints = FqMatrix::zero(&field, 0, monomial_count(3, 4));
            for cond in l4.conditions() {
                constraints
                    .stack(&multiplicity_rows(cond.point(), cond.multiplicity(), 4).unwrap());
            }
            assert_eq!(constraints.rank(), 7);
            assert_eq!(build_lambda(&y, 5).unwrap().dimension(), 14);
            assert!(build_lambda(&y, 3).is_err());
        }
    }

    #[test]
    fn basis_forms_satisfy_their_conditions() {
        let f5 = Field::new(5, 1).unwrap();
        let z = make_surface(&f5, SurfaceKind::BlowupZ).unwrap();
        let g3 = build_gamma(&z, 3).unwrap();
        for form in g3.basis() {
            for member in z.as_blowup_z().unwrap().orbit() {
                assert_eq!(form.evaluate(member).unwrap(), 0);
            }
        }
        let f4 = Field::new(2, 2).unwrap();
        let y = make_surface(&f4, SurfaceKind::BlowupY).unwrap();
        let (center, _, r) = y.as_blowup_y().unwrap();
        for form in build_lambda(&y, 4).unwrap().basis() {
            assert_eq!(form.evaluate(center).unwrap(), 0);
            // Double point: both chart Hasse derivatives vanish too.
            assert_eq!(form.hasse_deriv1(0).evaluate(center).unwrap(), 0);
            assert_eq!(form.hasse_deriv1(1).evaluate(center).unwrap(), 0);
            for member in r.orbit() {
                assert_eq!(form.evaluate(member).unwrap(), 0);
            }
        }
    }

    #[test]
    fn membership_matches_exhaustive_vanishing_over_f3() {
        // Independent oracle: over F3, degree-3 forms vanishing on the whole
        // degree-3 orbit are exactly the span of the computed basis.
        let f3 = Field::new(3, 1).unwrap();
        let z = make_surface(&f3, SurfaceKind::BlowupZ).unwrap();
        let orbit = z.as_blowup_z().unwrap().orbit().to_vec();
        let g3 = build_gamma(&z, 3).unwrap();
        let mut span = FqMatrix::from_rows(
            &f3,
            g3.basis().iter().map(|b| b.coeffs().to_vec()).collect(),
        );
        span.rref();
        let mut vanishing = 0u64;
        let mut coeffs = vec![0u64; 10];
        loop {
            let form = HomogeneousForm::new(&f3, 3, 3, coeffs.clone()).unwrap();
            let vanishes = orbit.iter().all(|m| form.evaluate(m).unwrap() == 0);
            if vanishes {
                vanishing += 1;
                assert!(span.row_space_contains(&coeffs));
            }
            // Odometer over all 3^10 coefficient vectors.
            let mut pos = 0;
            loop {
                if pos == coeffs.len() {
                    break;
                }
                coeffs[pos] += 1;
                if coeffs[pos] < 3 {
                    break;
                }
                coeffs[pos] = 0;
                pos += 1;
            }
            if pos == coeffs.len() {
                break;
            }
        }
        assert_eq!(vanishing, 3u64.pow(7)); // kernel size = q^dim
    }

    #[test]
    fn quadric_section_dimensions() {
        for q in [3u64, 4, 9] {
            let field = Field::of_order(q).unwrap();
            let x = make_surface(&field, SurfaceKind::EllipticQuadric).unwrap();
            for m in 1..=5u32 {
                let sections = build_quadric_sections(&x, m).unwrap();
                assert_eq!(sections.dimension(), ((m + 1) * (m + 1)) as usize);
            }
        }
    }

    #[test]
    fn complement_coordinates_are_well_defined_modulo_the_quadric() {
        let f4 = Field::new(2, 2).unwrap();
        let x = make_surface(&f4, SurfaceKind::EllipticQuadric).unwrap();
        let surface = x.as_quadric().unwrap().clone();
        let m = 3u32;
        let mut rng = ChaCha8Rng::seed_from_u64(0x51ad21c);
        for _ in 0..200 {
            let g = HomogeneousForm::new(
                &f4,
                4,
                m,
                (0..monomial_count(4, m)).map(|_| rng.gen_range(0..4)).collect(),
            )
            .unwrap();
            let h = HomogeneousForm::new(
                &f4,
                4,
                m - 2,
                (0..monomial_count(4, m - 2)).map(|_| rng.gen_range(0..4)).collect(),
            )
            .unwrap();
            let shifted = g.add(&h.mul(&surface));
            assert_eq!(
                quadric_complement_coords(&x, &g).unwrap(),
                quadric_complement_coords(&x, &shifted).unwrap()
            );
        }
    }

    #[test]
    fn surface_construction_checks() {
        // Quadric point counts q²+1 for several fields.
        for q in [3u64, 4, 5, 7, 8, 9] {
            let field = Field::of_order(q).unwrap();
            let x = make_surface(&field, SurfaceKind::EllipticQuadric).unwrap();
            let form = x.as_quadric().unwrap();
            let count = enumerate_points(&field, ProjSpace::Space)
                .filter(|p| form.evaluate(p).unwrap() == 0)
                .count() as u64;
            assert_eq!(count, q * q + 1);
        }
        // The degree-3 center exists over the 13-point plane and is
        // genuinely non-collinear.
        let f3 = Field::new(3, 1).unwrap();
        let z = make_surface(&f3, SurfaceKind::BlowupZ).unwrap();
        let center = z.as_blowup_z().unwrap();
        assert_eq!(center.degree(), 3);
        assert!(!crate::geometry::collinear(center.orbit()));
        // Over F4 the split conic carries a degree-4 point.
        let f4 = Field::new(2, 2).unwrap();
        let y = make_surface(&f4, SurfaceKind::BlowupY).unwrap();
        let (_, conic, r) = y.as_blowup_y().unwrap();
        assert_eq!(r.degree(), 4);
        for member in r.orbit() {
            assert_eq!(conic.form().evaluate(member).unwrap(), 0);
        }
    }

    #[test]
    fn deterministic_models() {
        for q in [3u64, 4, 5] {
            let field = Field::of_order(q).unwrap();
            for kind in [SurfaceKind::EllipticQuadric, SurfaceKind::BlowupY, SurfaceKind::BlowupZ]
            {
                let a = make_surface(&field, kind).unwrap();
                let b = make_surface(&field, kind).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn system_text_round_trip() {
        let f5 = Field::new(5, 1).unwrap();
        let z = make_surface(&f5, SurfaceKind::BlowupZ).unwrap();
        let g4 = build_gamma(&z, 4).unwrap();
        let text = g4.to_text();
        assert!(text.starts_with("ambient=plane q=5 deg=4\n"));
        let back = LinearSystem::parse(&text).unwrap();
        assert_eq!(back.dimension(), g4.dimension());
        assert_eq!(back.basis(), g4.basis());

        let x = make_surface(&f5, SurfaceKind::EllipticQuadric).unwrap();
        let s2 = build_quadric_sections(&x, 2).unwrap();
        let back = LinearSystem::parse(&s2.to_text()).unwrap();
        assert_eq!(back.basis(), s2.basis());
    }

    #[test]
    fn least_quadratics_match_known_values() {
        // (c0, c1) for t² + c1·t + c0, fixed by the encoding-order scan.
        let cases = [(2u64, (1u64, 1u64)), (3, (1, 0)), (4, (1, 2)), (5, (1, 1)), (7, (1, 0)), (8, (1, 1)), (9, (1, 4))];
        for (q, want) in cases {
            let field = Field::of_order(q).unwrap();
            assert_eq!(least_irreducible_quadratic(&field), want, "q={q}");
        }
    }

    #[test]
    fn combinations_evaluate_like_their_parts() {
        let f4 = Field::new(2, 2).unwrap();
        let z = make_surface(&f4, SurfaceKind::BlowupZ).unwrap();
        let g3 = build_gamma(&z, 3).unwrap();
        let msg: Vec<u64> = (0..g3.dimension() as u64).map(|i| i % 4).collect();
        let combo = g3.linear_combination(&msg);
        for pt in enumerate_points(&f4, ProjSpace::Plane) {
            let direct = combo.evaluate(&pt).unwrap();
            let mut acc = 0u64;
            for (m, b) in msg.iter().zip(g3.basis()) {
                acc = f4.add(acc, f4.mul(*m, b.evaluate(&pt).unwrap()));
            }
            assert_eq!(direct, acc);
        }
    }
}
