//! Projective points, Frobenius orbits, and plane curves over small fields.
//!
//! Points of P² and P³ are kept in canonical form — coordinates scaled so
//! the first nonzero one is 1 — and enumerated in a fixed order:
//! lexicographic on the canonical coordinate tuple, so (0:0:1) comes first,
//! then (0:1:c), then (1:b:c).  Closed points are Frobenius orbits of
//! points over an extension; their degree is the orbit size.
//!
//! Homogeneous forms store one coefficient per monomial, monomials ordered
//! by descending lexicographic exponent (x before y before z before w)
//! within a fixed degree.  First- and second-order Hasse derivatives are
//! provided instead of plain partials so multiplicity conditions stay
//! correct in characteristics 2 and 3.

use crate::error::{Error, Result};
use crate::field::FieldRef;
use std::collections::HashMap;
use std::fmt;

/// Which projective space a point lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjSpace {
    /// P², three coordinates.
    Plane,
    /// P³, four coordinates.
    Space,
}

impl ProjSpace {
    pub fn nvars(self) -> usize {
        match self {
            ProjSpace::Plane => 3,
            ProjSpace::Space => 4,
        }
    }

    /// Number of rational points, 1 + q + … + q^{nvars−1}.
    pub fn point_count(self, q: u64) -> u64 {
        (0..self.nvars() as u32).map(|i| q.pow(i)).sum()
    }
}

/// A point of P² or P³ in canonical form (first nonzero coordinate 1).
#[derive(Clone)]
pub struct ProjectivePoint {
    field: FieldRef,
    coords: [u64; 4],
    nvars: u8,
}

impl ProjectivePoint {
    /// Canonicalizes arbitrary homogeneous coordinates.  Errors if all are
    /// zero or the slice has a length other than 3 or 4.
    pub fn new(field: &FieldRef, coords: &[u64]) -> Result<Self> {
        if coords.len() != 3 && coords.len() != 4 {
            return Err(Error::VariableCount { expected: 3, got: coords.len() });
        }
        for &c in coords {
            if c >= field.order() {
                return Err(Error::ValueOutOfRange { value: c, order: field.order() });
            }
        }
        let lead = coords.iter().position(|&c| c != 0).ok_or(Error::ZeroPoint)?;
        let scale = field.inv(coords[lead]);
        let mut canon = [0u64; 4];
        for (i, &c) in coords.iter().enumerate() {
            canon[i] = field.mul(c, scale);
        }
        Ok(ProjectivePoint { field: field.clone(), coords: canon, nvars: coords.len() as u8 })
    }

    fn from_canonical(field: &FieldRef, coords: [u64; 4], nvars: u8) -> Self {
        ProjectivePoint { field: field.clone(), coords, nvars }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords[..self.nvars as usize]
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    /// Index of the leading 1 — the affine chart the point surely lies in.
    pub fn lead_position(&self) -> usize {
        self.coords().iter().position(|&c| c != 0).expect("canonical point has a nonzero entry")
    }

    /// Image under x ↦ x^|base|, coordinate-wise.  Canonical form is
    /// preserved (0 and 1 are fixed), so no renormalization happens.
    pub fn frobenius(&self, base: &FieldRef) -> Result<ProjectivePoint> {
        if self.field == *base {
            return Ok(self.clone());
        }
        match self.field.base() {
            Some(b) if *b == *base => {
                let mut coords = [0u64; 4];
                for i in 0..self.nvars as usize {
                    coords[i] = self.field.relative_frobenius(self.coords[i]);
                }
                Ok(ProjectivePoint::from_canonical(&self.field, coords, self.nvars))
            }
            _ => Err(Error::NotASubfield {
                field: self.field.to_string(),
                base: base.to_string(),
            }),
        }
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.field == other.field
            && self.coords() == other.coords()
    }
}
impl Eq for ProjectivePoint {}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.nvars, self.coords()).cmp(&(other.nvars, other.coords()))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

/// Enumerates all rational points of the space over `field`, in canonical
/// lexicographic order.
pub fn enumerate_points(field: &FieldRef, space: ProjSpace) -> impl Iterator<Item = ProjectivePoint> {
    let field = field.clone();
    let nvars = space.nvars();
    let q = field.order();
    // Blocks by lead position, from the last coordinate to the first.
    (0..nvars).rev().flat_map(move |lead| {
        let field = field.clone();
        let trailing = nvars - 1 - lead;
        (0..q.pow(trailing as u32)).map(move |counter| {
            let mut coords = [0u64; 4];
            coords[lead] = 1;
            let mut rem = counter;
            for i in (0..trailing).rev() {
                coords[lead + 1 + i] = rem % q;
                rem /= q;
            }
            ProjectivePoint::from_canonical(&field, coords, nvars as u8)
        })
    })
}

/// A closed point: one Frobenius orbit of points over an extension of the
/// base field.  The degree is the orbit size; the orbit is sorted by
/// canonical coordinates so equal orbits compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedPoint {
    base: FieldRef,
    degree: u32,
    orbit: Vec<ProjectivePoint>,
}

impl ClosedPoint {
    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Orbit members over the extension field, sorted.
    pub fn orbit(&self) -> &[ProjectivePoint] {
        &self.orbit
    }

    pub fn representative(&self) -> &ProjectivePoint {
        &self.orbit[0]
    }
}

/// Collects the Frobenius orbit of `seed` relative to `base`.  The seed's
/// field must be `base` itself or an extension built over it.
pub fn closed_point(seed: &ProjectivePoint, base: &FieldRef) -> Result<ClosedPoint> {
    if seed.field() != base && seed.field().base().map_or(true, |b| b != base) {
        return Err(Error::NotASubfield {
            field: seed.field().to_string(),
            base: base.to_string(),
        });
    }
    let mut orbit = vec![seed.clone()];
    let mut current = seed.frobenius(base)?;
    while current != *seed {
        orbit.push(current.clone());
        current = current.frobenius(base)?;
    }
    orbit.sort();
    Ok(ClosedPoint { base: base.clone(), degree: orbit.len() as u32, orbit })
}

/// Geometric side conditions for [`find_closed_point`].
pub enum PointConstraint<'a> {
    /// Any closed point of the requested degree.
    Any,
    /// Orbit members must not lie on a common line (degree-3 points only).
    NonCollinear,
    /// The orbit must lie on the given curve (defined over the base field).
    OnCurve(&'a PlaneCurve),
}

/// The first closed point of P² over `base`, in enumeration order of
/// P²(F_{q^d}), with exact degree `d` and satisfying the constraint.
pub fn find_closed_point(
    base: &FieldRef,
    d: u32,
    constraint: &PointConstraint<'_>,
) -> Result<ClosedPoint> {
    let ext = crate::field::Field::extension(base, d)?;
    let base_q = base.order();
    // Pre-embed curve coefficients once; evaluation then runs in the
    // extension without further table walks.
    let compiled: Option<Vec<([u8; 4], u64)>> = match constraint {
        PointConstraint::OnCurve(curve) => {
            let form = curve.form();
            if form.field() != base {
                return Err(Error::OwnerMismatch {
                    expected: base.to_string(),
                    got: form.field().to_string(),
                });
            }
            Some(
                monomial_exponents(3, form.degree())
                    .into_iter()
                    .zip(form.coeffs())
                    .filter(|(_, &c)| c != 0)
                    .map(|(e, &c)| (e, if d == 1 { c } else { ext.embed_base(c) }))
                    .collect(),
            )
        }
        _ => None,
    };

    for seed in enumerate_points(&ext, ProjSpace::Plane) {
        // Cheap curve-membership filter first: conjugates of a point on a
        // curve with base-field coefficients stay on it, so testing the
        // seed suffices and spares the orbit walk for the misses.
        if let Some(terms) = &compiled {
            if eval_terms(&ext, terms, seed.coords()) != 0 {
                continue;
            }
        }
        // Exact-degree test: the orbit must have size d.
        let mut orbit = [seed.clone(), seed.clone(), seed.clone(), seed.clone()];
        let mut size = 1u32;
        let mut current = seed.frobenius(base)?;
        while current != seed {
            if size >= d {
                size = d + 1; // orbit longer than wanted; stop early
                break;
            }
            orbit[size as usize] = current.clone();
            size += 1;
            current = current.frobenius(base)?;
        }
        if size != d {
            continue;
        }
        let members = &orbit[..d as usize];
        let ok = match constraint {
            PointConstraint::Any | PointConstraint::OnCurve(_) => true,
            PointConstraint::NonCollinear => {
                d == 3 && {
                    let m: Vec<&[u64]> = members.iter().map(|p| p.coords()).collect();
                    det3(&ext, m[0], m[1], m[2]) != 0
                }
            }
        };
        if ok {
            let mut sorted = members.to_vec();
            sorted.sort();
            return Ok(ClosedPoint { base: base.clone(), degree: d, orbit: sorted });
        }
    }
    Err(Error::SearchExhausted(format!(
        "no closed point of degree {d} with the requested constraint over F_{base_q}"
    )))
}

/// Whether all listed points lie on one line.  Fewer than three points are
/// always collinear.  All points must live in P² over the same field.
pub fn collinear(points: &[ProjectivePoint]) -> bool {
    let distinct: Vec<&ProjectivePoint> = {
        let mut seen: Vec<&ProjectivePoint> = Vec::new();
        for p in points {
            if !seen.iter().any(|s| **s == *p) {
                seen.push(p);
            }
        }
        seen
    };
    if distinct.len() <= 2 {
        return true;
    }
    let f = distinct[0].field().clone();
    let (a, b) = (distinct[0].coords(), distinct[1].coords());
    // Line through a and b: cross product.
    let line = [
        f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
        f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
        f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
    ];
    distinct[2..].iter().all(|p| {
        let c = p.coords();
        let dot = f.add(f.add(f.mul(line[0], c[0]), f.mul(line[1], c[1])), f.mul(line[2], c[2]));
        dot == 0
    })
}

fn det3(f: &FieldRef, a: &[u64], b: &[u64], c: &[u64]) -> u64 {
    let m01 = f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1]));
    let m11 = f.sub(f.mul(b[0], c[2]), f.mul(b[2], c[0]));
    let m21 = f.sub(f.mul(b[0], c[1]), f.mul(b[1], c[0]));
    f.add(f.sub(f.mul(a[0], m01), f.mul(a[1], m11)), f.mul(a[2], m21))
}

fn eval_terms(f: &FieldRef, terms: &[([u8; 4], u64)], coords: &[u64]) -> u64 {
    let mut acc = 0u64;
    'term: for (exps, coeff) in terms {
        let mut prod = *coeff;
        for (i, &e) in exps.iter().enumerate().take(coords.len()) {
            if e == 0 {
                continue;
            }
            if coords[i] == 0 {
                continue 'term;
            }
            prod = f.mul(prod, f.pow(coords[i], e as u64));
        }
        acc = f.add(acc, prod);
    }
    acc
}

/// Exponent vectors of all degree-`degree` monomials in `nvars` variables,
/// in descending lexicographic order (x² , xy, xz, y², yz, z² for degree 2).
pub fn monomial_exponents(nvars: usize, degree: u32) -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(monomial_count(nvars, degree));
    let mut current = [0u8; 4];
    fill_exponents(&mut out, &mut current, 0, nvars, degree as u8);
    out
}

fn fill_exponents(out: &mut Vec<[u8; 4]>, current: &mut [u8; 4], pos: usize, nvars: usize, left: u8) {
    if pos == nvars - 1 {
        current[pos] = left;
        out.push(*current);
        current[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        current[pos] = e;
        fill_exponents(out, current, pos + 1, nvars, left - e);
    }
    current[pos] = 0;
}

/// C(degree + nvars − 1, nvars − 1): the length of the monomial list.
pub fn monomial_count(nvars: usize, degree: u32) -> usize {
    let d = degree as usize;
    match nvars {
        3 => (d + 1) * (d + 2) / 2,
        4 => (d + 1) * (d + 2) * (d + 3) / 6,
        _ => panic!("only 3 or 4 variables supported"),
    }
}

/// A homogeneous form in 3 or 4 variables, one coefficient per monomial in
/// the canonical descending-lex order.
#[derive(Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    field: FieldRef,
    nvars: u8,
    degree: u32,
    coeffs: Vec<u64>,
}

impl HomogeneousForm {
    pub fn new(field: &FieldRef, nvars: usize, degree: u32, coeffs: Vec<u64>) -> Result<Self> {
        if nvars != 3 && nvars != 4 {
            return Err(Error::VariableCount { expected: 3, got: nvars });
        }
        let want = monomial_count(nvars, degree);
        if coeffs.len() != want {
            return Err(Error::Parse(format!(
                "degree-{degree} form in {nvars} variables needs {want} coefficients, got {}",
                coeffs.len()
            )));
        }
        for &c in &coeffs {
            if c >= field.order() {
                return Err(Error::ValueOutOfRange { value: c, order: field.order() });
            }
        }
        Ok(HomogeneousForm { field: field.clone(), nvars: nvars as u8, degree, coeffs })
    }

    pub fn zero(field: &FieldRef, nvars: usize, degree: u32) -> Self {
        HomogeneousForm {
            field: field.clone(),
            nvars: nvars as u8,
            degree,
            coeffs: vec![0; monomial_count(nvars, degree)],
        }
    }

    /// Builds a form from sparse (exponents, coefficient) terms.
    pub fn from_terms(
        field: &FieldRef,
        nvars: usize,
        degree: u32,
        terms: &[([u8; 4], u64)],
    ) -> Result<Self> {
        let mut form = HomogeneousForm::zero(field, nvars, degree);
        let index = monomial_index_map(nvars, degree);
        for (exps, coeff) in terms {
            let idx = *index
                .get(exps)
                .ok_or_else(|| Error::Parse(format!("exponents {exps:?} not of degree {degree}")))?;
            form.coeffs[idx] = field.add(form.coeffs[idx], *coeff % field.order());
        }
        Ok(form)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Evaluates at a point over the same field, or over an extension of it
    /// (coefficients are embedded on the fly).
    pub fn evaluate(&self, pt: &ProjectivePoint) -> Result<u64> {
        if pt.nvars() != self.nvars() {
            return Err(Error::VariableCount { expected: self.nvars(), got: pt.nvars() });
        }
        let ptf = pt.field();
        let embed = if ptf == &self.field {
            false
        } else if ptf.base() == Some(&self.field) {
            true
        } else {
            return Err(Error::OwnerMismatch {
                expected: self.field.to_string(),
                got: ptf.to_string(),
            });
        };
        let exps = monomial_exponents(self.nvars(), self.degree);
        let mut acc = 0u64;
        'term: for (e, &c) in exps.iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let mut prod = if embed { ptf.embed_base(c) } else { c };
            for (i, &ei) in e.iter().enumerate().take(self.nvars()) {
                if ei == 0 {
                    continue;
                }
                let x = pt.coords()[i];
                if x == 0 {
                    continue 'term;
                }
                prod = ptf.mul(prod, ptf.pow(x, ei as u64));
            }
            acc = ptf.add(acc, prod);
        }
        Ok(acc)
    }

    pub fn add(&self, other: &HomogeneousForm) -> HomogeneousForm {
        assert!(self.degree == other.degree && self.nvars == other.nvars && self.field == other.field);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        HomogeneousForm { field: self.field.clone(), nvars: self.nvars, degree: self.degree, coeffs }
    }

    pub fn scale(&self, c: u64) -> HomogeneousForm {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        HomogeneousForm { field: self.field.clone(), nvars: self.nvars, degree: self.degree, coeffs }
    }

    /// Product of two forms (degrees add).
    pub fn mul(&self, other: &HomogeneousForm) -> HomogeneousForm {
        assert!(self.nvars == other.nvars && self.field == other.field);
        let degree = self.degree + other.degree;
        let mut out = HomogeneousForm::zero(&self.field, self.nvars(), degree);
        let index = monomial_index_map(self.nvars(), degree);
        let ea = monomial_exponents(self.nvars(), self.degree);
        let eb = monomial_exponents(self.nvars(), other.degree);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut e = [0u8; 4];
                for v in 0..4 {
                    e[v] = ea[i][v] + eb[j][v];
                }
                let idx = index[&e];
                out.coeffs[idx] = self.field.add(out.coeffs[idx], self.field.mul(a, b));
            }
        }
        out
    }

    /// First-order Hasse derivative with respect to variable `var` — equal
    /// to the formal partial derivative, with the multiplier reduced mod p.
    pub fn hasse_deriv1(&self, var: usize) -> HomogeneousForm {
        assert!(var < self.nvars() && self.degree >= 1);
        let mut out = HomogeneousForm::zero(&self.field, self.nvars(), self.degree - 1);
        let src = monomial_exponents(self.nvars(), self.degree);
        let index = monomial_index_map(self.nvars(), self.degree - 1);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 || src[i][var] == 0 {
                continue;
            }
            let mut e = src[i];
            let mult = self.field.scalar(e[var] as u64);
            if mult == 0 {
                continue;
            }
            e[var] -= 1;
            let idx = index[&e];
            out.coeffs[idx] = self.field.add(out.coeffs[idx], self.field.mul(c, mult));
        }
        out
    }

    /// Second-order Hasse derivative for the multi-index with 1 at `a` and
    /// `b` (or 2 at `a` when a == b).  The coefficient multipliers are the
    /// binomials C(e_a, 2) or e_a·e_b taken mod p, which is what keeps
    /// multiplicity-two conditions meaningful in characteristics 2 and 3.
    pub fn hasse_deriv2(&self, a: usize, b: usize) -> HomogeneousForm {
        assert!(a < self.nvars() && b < self.nvars() && self.degree >= 2);
        let mut out = HomogeneousForm::zero(&self.field, self.nvars(), self.degree - 2);
        let src = monomial_exponents(self.nvars(), self.degree);
        let index = monomial_index_map(self.nvars(), self.degree - 2);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = src[i];
            let mult = if a == b {
                if e[a] < 2 {
                    continue;
                }
                // C(e_a, 2) mod p
                self.field.scalar((e[a] as u64) * (e[a] as u64 - 1) / 2)
            } else {
                if e[a] < 1 || e[b] < 1 {
                    continue;
                }
                self.field.scalar(e[a] as u64 * e[b] as u64)
            };
            if mult == 0 {
                continue;
            }
            let mut t = e;
            t[a] -= if a == b { 2 } else { 1 };
            if a != b {
                t[b] -= 1;
            }
            let idx = index[&t];
            out.coeffs[idx] = self.field.add(out.coeffs[idx], self.field.mul(c, mult));
        }
        out
    }

    /// Two-line text form: `q=<q> nvars=<n> deg=<d>` then the coefficients.
    pub fn to_text(&self) -> String {
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!(
            "q={} nvars={} deg={}\n{}\n",
            self.field.order(),
            self.nvars,
            self.degree,
            coeffs.join(" ")
        )
    }

    /// Parses the two-line text form, constructing the field from its order.
    pub fn parse(text: &str) -> Result<HomogeneousForm> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty curve text".into()))?;
        let mut q = None;
        let mut nvars = None;
        let mut deg = None;
        for part in header.split_whitespace() {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header token '{part}'")))?;
            let n: u64 = value
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{value}' in header")))?;
            match key {
                "q" => q = Some(n),
                "nvars" => nvars = Some(n as usize),
                "deg" => deg = Some(n as u32),
                other => return Err(Error::Parse(format!("unknown header key '{other}'"))),
            }
        }
        let (q, nvars, deg) = match (q, nvars, deg) {
            (Some(q), Some(n), Some(d)) => (q, n, d),
            _ => return Err(Error::Parse("header must set q, nvars and deg".into())),
        };
        let field = crate::field::Field::of_order(q)?;
        let body = lines.next().ok_or_else(|| Error::Parse("missing coefficient line".into()))?;
        let coeffs: Vec<u64> = body
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("bad coefficient '{tok}'"))))
            .collect::<Result<_>>()?;
        HomogeneousForm::new(&field, nvars, deg, coeffs)
    }
}

impl fmt::Debug for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z", "w"];
        let exps = monomial_exponents(self.nvars(), self.degree);
        let mut parts = Vec::new();
        for (e, &c) in exps.iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            let mut term = if c == 1 { String::new() } else { c.to_string() };
            for v in 0..self.nvars() {
                match e[v] {
                    0 => {}
                    1 => term.push_str(names[v]),
                    n => term.push_str(&format!("{}^{}", names[v], n)),
                }
            }
            if term.is_empty() {
                term.push('1');
            }
            parts.push(term);
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join("+"))
    }
}

fn monomial_index_map(nvars: usize, degree: u32) -> HashMap<[u8; 4], usize> {
    monomial_exponents(nvars, degree)
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect()
}

/// A nonzero homogeneous form in three variables, viewed as a plane curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    form: HomogeneousForm,
}

impl PlaneCurve {
    pub fn new(form: HomogeneousForm) -> Result<Self> {
        if form.nvars() != 3 {
            return Err(Error::VariableCount { expected: 3, got: form.nvars() });
        }
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(PlaneCurve { form })
    }

    pub fn form(&self) -> &HomogeneousForm {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn field(&self) -> &FieldRef {
        self.form.field()
    }

    /// Number of rational points in P² over the curve's own field.
    pub fn count_points(&self) -> u64 {
        enumerate_points(self.field(), ProjSpace::Plane)
            .filter(|p| self.form.evaluate(p).unwrap() == 0)
            .count() as u64
    }

    /// Whether the curve is a product of rational linear forms, i.e. a
    /// union of deg-many rational lines counted with multiplicity.  Decided
    /// by exact trial division.
    pub fn is_union_of_rational_lines(&self) -> bool {
        let field = self.field().clone();
        let mut remaining = self.form.clone();
        for line in enumerate_points(&field, ProjSpace::Plane) {
            // Dual: coefficient triples of canonical lines are exactly the
            // canonical point triples.
            let lf = HomogeneousForm::new(&field, 3, 1, line.coords().to_vec()).unwrap();
            while remaining.degree() > 0 {
                match divide_by_linear(&remaining, &lf) {
                    Some(quotient) => remaining = quotient,
                    None => break,
                }
            }
            if remaining.degree() == 0 {
                return true;
            }
        }
        false
    }

    pub fn parse(text: &str) -> Result<PlaneCurve> {
        PlaneCurve::new(HomogeneousForm::parse(text)?)
    }

    pub fn to_text(&self) -> String {
        self.form.to_text()
    }
}

/// Exact division of `f` by the linear form `l` (canonical: leading
/// coefficient 1).  Returns the quotient, or None if `l` does not divide.
pub fn divide_by_linear(f: &HomogeneousForm, l: &HomogeneousForm) -> Option<HomogeneousForm> {
    assert_eq!(l.degree(), 1);
    if f.degree() == 0 {
        return None;
    }
    let field = f.field().clone();
    let lead_var = l.coeffs().iter().position(|&c| c != 0)?;
    debug_assert_eq!(l.coeffs()[lead_var], 1, "line not canonical");
    let exps = monomial_exponents(f.nvars(), f.degree());
    let qexp_index = monomial_index_map(f.nvars(), f.degree() - 1);
    let mut rem = f.coeffs().to_vec();
    let mut quot = vec![0u64; monomial_count(f.nvars(), f.degree() - 1)];
    // Peel leading terms; each step eliminates the current leading monomial
    // because monomials are stored in the term order.
    for i in 0..rem.len() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        if exps[i][lead_var] == 0 {
            return None; // leading monomial not divisible by the lead variable
        }
        let mut t = exps[i];
        t[lead_var] -= 1;
        quot[qexp_index[&t]] = c;
        // rem -= c · t · l
        for (v, &lc) in l.coeffs().iter().enumerate().take(f.nvars()) {
            if lc == 0 {
                continue;
            }
            let mut m = t;
            m[v] += 1;
            let idx = exps.iter().position(|e| *e == m).unwrap();
            rem[idx] = field.sub(rem[idx], field.mul(c, lc));
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    Some(HomogeneousForm::new(&field, f.nvars(), f.degree() - 1, quot).unwrap())
}

/// The quartic over F₄ with 14 rational points — one more than the
/// Homma–Kim generic maximum 3q+1, the unique exceptional degree/field pair.
/// Its points are exactly P²(F₄) minus P²(F₂).
pub fn quartic_14_points_f4() -> PlaneCurve {
    let f4 = crate::field::Field::new(2, 2).unwrap();
    let terms: Vec<([u8; 4], u64)> = vec![
        ([4, 0, 0, 0], 1),
        ([0, 4, 0, 0], 1),
        ([0, 0, 4, 0], 1),
        ([2, 2, 0, 0], 1),
        ([0, 2, 2, 0], 1),
        ([2, 0, 2, 0], 1),
        ([2, 1, 1, 0], 1),
        ([1, 2, 1, 0], 1),
        ([1, 1, 2, 0], 1),
    ];
    PlaneCurve::new(HomogeneousForm::from_terms(&f4, 3, 4, &terms).unwrap()).unwrap()
}

/// The quintic over F₅ with 22 rational points: x times a specific quartic.
/// It demonstrates that a quintic through a degree-3 point can meet the
/// 4q+2 ceiling even at q = 5, where three concurrent lines plus a conic
/// cannot realize it.
pub fn quintic_22_points_f5() -> PlaneCurve {
    let f5 = crate::field::Field::new(5, 1).unwrap();
    let quartic: Vec<([u8; 4], u64)> = vec![
        ([4, 0, 0, 0], 1),
        ([3, 1, 0, 0], 2),
        ([3, 0, 1, 0], 3),
        ([2, 2, 0, 0], 3),
        ([2, 1, 1, 0], 4),
        ([2, 0, 2, 0], 3),
        ([1, 3, 0, 0], 2),
        ([1, 2, 1, 0], 4),
        ([1, 1, 2, 0], 1),
        ([1, 0, 3, 0], 3),
        ([0, 4, 0, 0], 2),
        ([0, 3, 1, 0], 4),
        ([0, 2, 2, 0], 2),
        ([0, 1, 3, 0], 4),
        ([0, 0, 4, 0], 2),
    ];
    let q4 = HomogeneousForm::from_terms(&f5, 3, 4, &quartic).unwrap();
    let x = HomogeneousForm::from_terms(&f5, 3, 1, &[([1, 0, 0, 0], 1)]).unwrap();
    PlaneCurve::new(x.mul(&q4)).unwrap()
}
