//! Arithmetic in small finite fields F_{p^k} and their extensions.
//!
//! Every field is built by [`Field::new`] (or [`Field::extension`]) and
//! shared behind an [`FieldRef`].  The modulus is canonical: the
//! lexicographically least monic irreducible polynomial of degree k over
//! F_p, coefficients compared constant term first.  Two calls with the same
//! (p, k) therefore produce bit-identical fields — every artifact downstream
//! (point enumerations, constraint matrices, generator matrices) inherits
//! that determinism.
//!
//! Elements are plain integers: Σ aᵢ tⁱ is encoded as Σ aᵢ pⁱ, where t is
//! the residue class of the variable.  Arithmetic lives on the [`Field`]
//! object and works on raw encodings, so vectors and matrices of elements
//! stay flat; [`FieldElement`] wraps an encoding together with its owner for
//! call sites that want mismatches caught instead of trusted.
//!
//! An extension built by [`Field::extension`] knows its base field: it can
//! embed base elements, apply the relative Frobenius x ↦ x^|base|, and
//! expand an element into its d base-field coordinates over the power basis
//! 1, t, …, t^{d−1}.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Shared handle to a field.  Cloning is cheap; equality of the underlying
/// fields is structural (same p, k, modulus).
pub type FieldRef = Arc<Field>;

/// Largest order for which multiplication runs off exp/log tables and the
/// relative Frobenius off a lookup table.  Beyond it (allowed up to 2^32)
/// arithmetic falls back to polynomial multiplication, which is still exact,
/// just slower.
const TABLE_LIMIT: u64 = 1 << 20;

/// A finite field F_{p^k} with its canonical modulus.
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, constant term first; length k+1, last entry 1.
    modulus: Vec<u64>,
    tables: Option<LogTables>,
    ext: Option<Extension>,
}

/// Discrete-log tables over a fixed generator of the multiplicative group.
struct LogTables {
    /// exp[i] = g^i for i in 0..2(q−1), so products of logs index directly.
    exp: Vec<u64>,
    /// log[x] for x in 1..q (entry 0 unused).
    log: Vec<u32>,
}

/// Data tying an extension to its base field.
struct Extension {
    base: FieldRef,
    /// Relative degree d, so k = base.k · d.
    degree: u32,
    /// Image in this field of each base element (indexed by base encoding).
    embed: Vec<u64>,
    /// x ↦ x^|base| table when the field is small enough, else computed.
    frob: Option<Vec<u64>>,
    /// Inverse of the F_p change-of-basis matrix from coordinates over
    /// {ρ^j · t^i} to plain p-adic digits; row-major, k×k entries mod p.
    expand_inv: Vec<u64>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.k)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.k)
        }
    }
}

impl Field {
    /// Builds F_{p^k} with the canonical modulus.  Errors if `p` is not
    /// prime or p^k exceeds 2^32.
    pub fn new(p: u64, k: u32) -> Result<FieldRef> {
        Ok(Arc::new(Field::build(p, k)?))
    }

    fn build(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::FieldTooLarge { p, k });
        }
        let q = checked_power(p, k).ok_or(Error::FieldTooLarge { p, k })?;
        let modulus = canonical_modulus(p, k);
        let mut field = Field { p, k, q, modulus, tables: None, ext: None };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// Builds the order-q field, factoring q as p^k.  Errors if q is not a
    /// prime power.
    pub fn of_order(q: u64) -> Result<FieldRef> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, k)
    }

    /// Builds the degree-d extension of `base`.  The result is the same
    /// field `Field::new(p, base.k·d)` would give — same modulus, same
    /// encodings — but additionally knows how to embed `base`, apply the
    /// relative Frobenius, and expand elements into base coordinates.
    pub fn extension(base: &FieldRef, d: u32) -> Result<FieldRef> {
        if d == 0 {
            return Err(Error::FieldTooLarge { p: base.p, k: 0 });
        }
        if d == 1 {
            return Ok(base.clone());
        }
        let mut field = Field::build(base.p, base.k * d)?;
        field.ext = Some(field.build_extension(base, d)?);
        Ok(Arc::new(field))
    }

    /// The characteristic p.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// The degree k over the prime field.
    pub fn degree(&self) -> u32 {
        self.k
    }

    /// The order q = p^k.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant term first (length k+1, monic).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The base field of an extension built by [`Field::extension`].
    pub fn base(&self) -> Option<&FieldRef> {
        self.ext.as_ref().map(|e| &e.base)
    }

    /// Relative degree over the base field (None for plain fields).
    pub fn relative_degree(&self) -> Option<u32> {
        self.ext.as_ref().map(|e| e.degree)
    }

    /// Text header `p=<p> k=<k> modulus=<c0,c1,...,ck>`.
    pub fn text_header(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        format!("p={} k={} modulus={}", self.p, self.k, coeffs.join(","))
    }

    /// Iterator over all element encodings, 0..q.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    /// The image of the small integer n, i.e. n mod p as a constant.
    pub fn scalar(&self, n: u64) -> u64 {
        n % self.p
    }

    /// Additive inverse.
    pub fn neg(&self, a: u64) -> u64 {
        let mut digits = self.digits(a);
        for d in &mut digits {
            if *d != 0 {
                *d = self.p - *d;
            }
        }
        self.from_digits(&digits)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut out, mut mult, mut x, mut y) = (0u64, 1u64, a, b);
        while x != 0 || y != 0 {
            let s = x % self.p + y % self.p;
            out += (if s >= self.p { s - self.p } else { s }) * mult;
            mult *= self.p;
            x /= self.p;
            y /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize];
        }
        self.mul_generic(a, b)
    }

    /// Multiplicative inverse; panics on zero (checked callers test first).
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        if let Some(t) = &self.tables {
            let l = t.log[a as usize] as u64;
            return t.exp[((self.q - 1 - l) % (self.q - 1)) as usize];
        }
        self.pow(a, self.q - 2)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        if let Some(t) = &self.tables {
            let l = t.log[x as usize] as u128 * e as u128 % (self.q - 1) as u128;
            return t.exp[l as usize];
        }
        let mut base = x;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_generic(acc, base);
            }
            base = self.mul_generic(base, base);
            e >>= 1;
        }
        acc
    }

    /// The relative Frobenius x ↦ x^|base| of an extension.  Its fixed
    /// points are exactly the embedded copy of the base field.
    pub fn relative_frobenius(&self, x: u64) -> u64 {
        let ext = self.ext.as_ref().expect("relative Frobenius needs an extension field");
        match &ext.frob {
            Some(table) => table[x as usize],
            None => self.pow(x, ext.base.q),
        }
    }

    /// Embeds a base-field element into the extension.
    pub fn embed_base(&self, base_value: u64) -> u64 {
        let ext = self.ext.as_ref().expect("embedding needs an extension field");
        ext.embed[base_value as usize]
    }

    /// Expands an element into its d coordinates over the base field with
    /// respect to the power basis 1, t, …, t^{d−1}:
    /// x = Σ embed(coords[i]) · t^i.
    pub fn expand_to_base(&self, x: u64) -> Vec<u64> {
        let ext = self.ext.as_ref().expect("expansion needs an extension field");
        let k = self.k as usize;
        let e = ext.base.k as usize;
        let digits = self.digits(x);
        // coords-over-basis = expand_inv · digits (mod p).
        let mut c = vec![0u64; k];
        for (row, slot) in c.iter_mut().enumerate() {
            let mut acc = 0u64;
            for (col, &dg) in digits.iter().enumerate() {
                acc += ext.expand_inv[row * k + col] * dg;
            }
            *slot = acc % self.p;
        }
        (0..ext.degree as usize)
            .map(|r| {
                let mut enc = 0u64;
                let mut mult = 1u64;
                for i in 0..e {
                    enc += c[r * e + i] * mult;
                    mult *= self.p;
                }
                enc
            })
            .collect()
    }

    /// p-adic digits of an encoding, least significant first, length k.
    pub fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    /// Inverse of [`Field::digits`].
    pub fn from_digits(&self, digits: &[u64]) -> u64 {
        let mut enc = 0u64;
        for &d in digits.iter().rev() {
            enc = enc * self.p + d;
        }
        enc
    }

    fn mul_generic(&self, a: u64, b: u64) -> u64 {
        let k = self.k as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // Reduce by the monic modulus from the top down.
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(k) {
                let idx = i - k + j;
                prod[idx] = (prod[idx] + c * (self.p - m) % self.p) % self.p;
            }
        }
        self.from_digits(&prod[..k])
    }

    fn build_tables(&self) -> LogTables {
        let q = self.q;
        let factors = prime_factors(q - 1);
        let generator = (2..q)
            .find(|&g| {
                factors.iter().all(|&f| {
                    // Order test without tables: g^((q−1)/f) ≠ 1.
                    self.pow_generic(g, (q - 1) / f) != 1
                })
            })
            .unwrap_or(1); // q = 2: the group is trivial, generator 1.
        let mut exp = vec![0u64; 2 * (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for i in 0..(q - 1) as usize {
            exp[i] = acc;
            exp[i + (q - 1) as usize] = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_generic(acc, generator);
        }
        LogTables { exp, log }
    }

    fn pow_generic(&self, x: u64, mut e: u64) -> u64 {
        let mut base = x;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_generic(acc, base);
            }
            base = self.mul_generic(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_extension(&self, base: &FieldRef, d: u32) -> Result<Extension> {
        if base.p != self.p {
            return Err(Error::NotASubfield {
                field: self.to_string(),
                base: base.to_string(),
            });
        }
        // Least root of the base modulus in this field; it exists because
        // the base degree divides ours.
        let root = (0..self.q)
            .find(|&x| self.eval_poly(&base.modulus, x) == 0)
            .ok_or_else(|| Error::SearchExhausted("root of base modulus in extension".into()))?;
        // embed(Σ aᵢ t_baseⁱ) = Σ aᵢ ρⁱ.
        let embed: Vec<u64> = (0..base.q)
            .map(|b| {
                let digits = base.digits(b);
                let mut acc = 0u64;
                for &a in digits.iter().rev() {
                    acc = self.add(self.mul(acc, root), a);
                }
                acc
            })
            .collect();
        let frob = if self.q <= TABLE_LIMIT {
            Some((0..self.q).map(|x| self.pow(x, base.q)).collect())
        } else {
            None
        };

        // Change of basis {ρ^j t^i : i<d, j<e} → p-adic digits, inverted so
        // expansion is a matrix-vector product.
        let k = self.k as usize;
        let e = base.k as usize;
        let t = self.p; // encoding of the residue class of the variable
        let mut m = vec![0u64; k * k];
        for i in 0..d as usize {
            for j in 0..e {
                let col = i * e + j;
                let basis_elt = self.mul(self.pow(t, i as u64), self.pow(root, j as u64));
                for (row, dg) in self.digits(basis_elt).into_iter().enumerate() {
                    m[row * k + col] = dg;
                }
            }
        }
        let expand_inv = invert_mod_p(&m, k, self.p)
            .ok_or_else(|| Error::ModelCheck("extension power basis is singular".into()))?;
        Ok(Extension { base: base.clone(), degree: d, embed, frob, expand_inv })
    }

    /// Evaluates a polynomial with coefficients in 0..p (constant first) at
    /// a point of this field.
    fn eval_poly(&self, coeffs: &[u64], x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }
}

/// The operation selector for [`FieldElement::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element encoding together with its owning field.  Use this wrapper at
/// API boundaries where mixing fields must be an error rather than silent
/// garbage; inner loops work on raw `u64` encodings via [`Field`] methods.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldRef,
    value: u64,
}

impl FieldElement {
    pub fn new(field: &FieldRef, value: u64) -> Result<Self> {
        if value >= field.order() {
            return Err(Error::ValueOutOfRange { value, order: field.order() });
        }
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Checked arithmetic: errors on owner mismatch and on division by zero.
    pub fn arith(&self, op: ArithOp, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::OwnerMismatch {
                expected: self.field.to_string(),
                got: other.field.to_string(),
            });
        }
        let f = &self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, other.value),
            ArithOp::Sub => f.sub(self.value, other.value),
            ArithOp::Mul => f.mul(self.value, other.value),
            ArithOp::Div => {
                if other.value == 0 {
                    return Err(Error::DivisionByZero);
                }
                f.div(self.value, other.value)
            }
        };
        Ok(FieldElement { field: f.clone(), value })
    }

    /// Relative Frobenius x ↦ x^|base|.  `base` must be the field itself
    /// (then the map is the identity on rational elements… in fact on all of
    /// it, x^q = x) or the declared base of this element's extension field.
    pub fn frobenius(&self, base: &FieldRef) -> Result<FieldElement> {
        if *base == self.field {
            return Ok(self.clone());
        }
        match self.field.base() {
            Some(b) if *b == *base => Ok(FieldElement {
                field: self.field.clone(),
                value: self.field.relative_frobenius(self.value),
            }),
            _ => Err(Error::NotASubfield {
                field: self.field.to_string(),
                base: base.to_string(),
            }),
        }
    }

    /// Coordinates over the base field with respect to the power basis
    /// 1, t, …, t^{d−1}.
    pub fn expand_to_base(&self, base: &FieldRef) -> Result<Vec<FieldElement>> {
        if *base == self.field {
            return Ok(vec![self.clone()]);
        }
        match self.field.base() {
            Some(b) if *b == *base => Ok(self
                .field
                .expand_to_base(self.value)
                .into_iter()
                .map(|v| FieldElement { field: base.clone(), value: v })
                .collect()),
            _ => Err(Error::NotASubfield {
                field: self.field.to_string(),
                base: base.to_string(),
            }),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈{}", self.value, self.field)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.value == other.value
    }
}
impl Eq for FieldElement {}

/// Exact integer square root.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while (x + 1).checked_mul(x + 1).map_or(false, |s| s <= n) {
        x += 1;
    }
    while x * x > n {
        x -= 1;
    }
    x
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Writes q = p^k with p prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut k = 0;
    let mut n = q;
    while n > 1 {
        n /= p;
        k += 1;
    }
    (checked_power(p, k) == Some(q)).then_some((p, k))
}

fn checked_power(p: u64, k: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(p)?;
        if acc > (1u64 << 32) {
            return None;
        }
    }
    Some(acc)
}

/// The lexicographically least monic irreducible polynomial of degree k over
/// F_p, coefficients compared constant term first.  Returned constant-first
/// with the leading 1 included.
fn canonical_modulus(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // the polynomial t
    }
    let k = k as usize;
    let total = checked_power(p, k as u32).expect("order already validated");
    for n in 0..total {
        // Lex order on (c0, …, c_{k−1}) = integer order with c0 as the most
        // significant base-p digit of n.
        let mut coeffs = vec![0u64; k + 1];
        let mut rem = n;
        for i in (0..k).rev() {
            coeffs[i] = rem % p;
            rem /= p;
        }
        coeffs[k] = 1;
        if poly_is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

/// Trial division by every monic polynomial of degree up to deg(f)/2.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if f[0] == 0 {
        return deg == 1; // t itself is irreducible; anything else has root 0
    }
    for d in 1..=deg / 2 {
        let count = checked_power(p, d as u32).expect("small degree");
        for n in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut rem = n;
            for slot in g.iter_mut().take(d) {
                *slot = rem % p;
                rem /= p;
            }
            g[d] = 1;
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

/// Whether monic g divides f over F_p.
fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut r: Vec<u64> = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let top = r.len() - 1;
        if lead != 0 {
            for (j, &gj) in g.iter().enumerate().take(dg) {
                let idx = top - dg + j;
                r[idx] = (r[idx] + lead * (p - gj) % p) % p;
            }
        }
        r.pop();
        while r.len() > dg && *r.last().unwrap() == 0 {
            r.pop();
        }
    }
    r.iter().all(|&c| c == 0)
}

/// Inverts a k×k matrix over F_p (row-major).  Returns None if singular.
fn invert_mod_p(m: &[u64], k: usize, p: u64) -> Option<Vec<u64>> {
    let mut a = m.to_vec();
    let mut inv = vec![0u64; k * k];
    for i in 0..k {
        inv[i * k + i] = 1;
    }
    let inv_mod = |x: u64| -> u64 {
        // p is prime and small; Fermat by repeated multiplication.
        let mut acc = 1u64;
        for _ in 0..p - 2 {
            acc = acc * x % p;
        }
        acc
    };
    for col in 0..k {
        let pivot = (col..k).find(|&r| a[r * k + col] != 0)?;
        if pivot != col {
            for j in 0..k {
                a.swap(col * k + j, pivot * k + j);
                inv.swap(col * k + j, pivot * k + j);
            }
        }
        let scale = inv_mod(a[col * k + col]);
        for j in 0..k {
            a[col * k + j] = a[col * k + j] * scale % p;
            inv[col * k + j] = inv[col * k + j] * scale % p;
        }
        for r in 0..k {
            if r == col || a[r * k + col] == 0 {
                continue;
            }
            let factor = a[r * k + col];
            for j in 0..k {
                a[r * k + j] = (a[r * k + j] + factor * (p - a[col * k + j]) % p) % p;
                inv[r * k + j] = (inv[r * k + j] + factor * (p - inv[col * k + j]) % p) % p;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli_of_small_fields() {
        assert_eq!(Field::new(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]); // t²+t+1
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]); // t²+1
        // Constant-first lex puts t³+t²+1 before t³+t+1.
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn header_text() {
        assert_eq!(Field::new(3, 2).unwrap().text_header(), "p=3 k=2 modulus=1,0,1");
    }

    #[test]
    fn f4_multiplication() {
        // In F4 with t²+t+1: t·t = t+1, i.e. encodings 2·2 = 3.
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.mul(2, 3), 1); // t(t+1) = t²+t = 1
    }

    #[test]
    fn f9_multiplication_and_frobenius() {
        // In F9 with t²+1: t·t = −1 = 2 and t³ = 2t (encoding 6).
        let f3 = Field::new(3, 1).unwrap();
        let f9 = Field::extension(&f3, 2).unwrap();
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.relative_frobenius(3), 6);
    }

    #[test]
    fn f5_division() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.div(3, 2), 4); // 3/2 = 3·3 = 9 = 4
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, k) in [(3, 4), (7, 2), (2, 6)] {
            let f = Field::new(p, k).unwrap();
            for x in 1..f.order() {
                assert_eq!(f.pow(x, f.order() - 1), 1, "x^(q-1) != 1 in {f}");
            }
        }
    }

    #[test]
    fn canonical_modulus_of_f7_4_verified_independently() {
        // Oracle: naive integer-arithmetic check, independent of the field
        // internals, that the chosen quartic is irreducible over F7 and that
        // every lexicographically smaller candidate is reducible.
        let f = Field::new(7, 4).unwrap();
        let m = f.modulus().to_vec();
        assert!(naive_irreducible(&m, 7));
        let rank = |c: &[u64]| c[0] * 343 + c[1] * 49 + c[2] * 7 + c[3];
        let my_rank = rank(&m);
        for n in 0..my_rank {
            let cand = vec![n / 343 % 7, n / 49 % 7, n / 7 % 7, n % 7, 1];
            assert!(!naive_irreducible(&cand, 7), "smaller irreducible exists: {cand:?}");
        }
    }

    /// Test-side irreducibility by exhaustive trial division, written
    /// directly on integer vectors.
    fn naive_irreducible(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        'outer: for d in 1..=deg / 2 {
            let mut g = vec![0u64; d + 1];
            g[d] = 1;
            loop {
                // divide f by g, naively
                let mut r = f.to_vec();
                while r.len() > d && r.len() > 1 {
                    let lead = *r.last().unwrap();
                    let shift = r.len() - 1 - d;
                    for j in 0..=d {
                        r[shift + j] = (r[shift + j] + (p - g[j] % p) * lead) % p;
                    }
                    while r.len() > 1 && *r.last().unwrap() == 0 {
                        r.pop();
                    }
                    if r.len() - 1 < d {
                        break;
                    }
                }
                if r.iter().all(|&c| c == 0) {
                    return false;
                }
                // next monic g
                let mut i = 0;
                loop {
                    if i == d {
                        continue 'outer;
                    }
                    g[i] += 1;
                    if g[i] < p {
                        break;
                    }
                    g[i] = 0;
                    i += 1;
                }
            }
        }
        true
    }

    #[test]
    fn embed_respects_arithmetic() {
        let f5 = Field::new(5, 1).unwrap();
        let f625 = Field::extension(&f5, 4).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(
                    f625.embed_base(f5.mul(a, b)),
                    f625.mul(f625.embed_base(a), f625.embed_base(b))
                );
                assert_eq!(
                    f625.embed_base(f5.add(a, b)),
                    f625.add(f625.embed_base(a), f625.embed_base(b))
                );
            }
        }
    }

    #[test]
    fn expand_round_trips() {
        let f5 = Field::new(5, 1).unwrap();
        let f625 = Field::extension(&f5, 4).unwrap();
        let t = 5u64; // the generator of F625 as an encoding
        for x in (0..625).step_by(7) {
            let coords = f625.expand_to_base(x);
            assert_eq!(coords.len(), 4);
            let mut acc = 0u64;
            for (i, &c) in coords.iter().enumerate() {
                acc = f625.add(acc, f625.mul(f625.embed_base(c), f625.pow(t, i as u64)));
            }
            assert_eq!(acc, x, "power-basis recombination failed at {x}");
        }
        // Embedded base elements expand to (x, 0, 0, 0).
        for b in 0..5 {
            assert_eq!(f625.expand_to_base(f625.embed_base(b)), vec![b, 0, 0, 0]);
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_base() {
        let f3 = Field::new(3, 1).unwrap();
        let f9 = Field::extension(&f3, 2).unwrap();
        let embedded: Vec<u64> = (0..3).map(|b| f9.embed_base(b)).collect();
        for x in 0..9 {
            let fixed = f9.relative_frobenius(x) == x;
            assert_eq!(fixed, embedded.contains(&x));
        }
    }

    #[test]
    fn checked_element_layer() {
        let f5 = Field::new(5, 1).unwrap();
        let f7 = Field::new(7, 1).unwrap();
        let a = FieldElement::new(&f5, 3).unwrap();
        let b = FieldElement::new(&f5, 2).unwrap();
        let c = FieldElement::new(&f7, 2).unwrap();
        assert_eq!(a.arith(ArithOp::Div, &b).unwrap().value(), 4);
        assert!(matches!(a.arith(ArithOp::Add, &c), Err(Error::OwnerMismatch { .. })));
        let zero = FieldElement::new(&f5, 0).unwrap();
        assert!(matches!(a.arith(ArithOp::Div, &zero), Err(Error::DivisionByZero)));
        assert!(FieldElement::new(&f5, 5).is_err());
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(Field::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(Field::new(2, 40), Err(Error::FieldTooLarge { .. })));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert!(Field::of_order(12).is_err());
    }

    #[test]
    fn determinism() {
        let a = Field::new(3, 4).unwrap();
        let b = Field::new(3, 4).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.text_header(), b.text_header());
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(35), 5);
        assert_eq!(isqrt(36), 6);
        assert_eq!(isqrt(4 * 8), 5); // ⌊2√8⌋
    }
}
