//! Minimum-distance searches and max-zero witness curves.
//!
//! Three engines, all deterministic:
//!
//! * [`min_distance_exhaustive`] — odometer sweep over projective messages,
//!   one representative per scalar class, with an incrementally maintained
//!   codeword and weight.
//! * [`min_distance_isd`] — Brouwer–Zimmermann style enumeration over a
//!   deterministic family of pairwise-disjoint information sets.  Maintains a
//!   certified lower bound that grows with each completed weight level and an
//!   upper bound seeded from the code's recorded witnesses; terminates with
//!   the exact distance when the two meet, otherwise with a verified bracket.
//! * [`witness_max_curve`] — finds a section with many rational zeros, either
//!   by full sweep (small systems) or by composing products of low-degree
//!   components adapted to the system's base conditions.

use rayon::prelude::*;

use crate::bounds::construction_lower_bound;
use crate::code::EvaluationCode;
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::geometry::{enumerate_points, HomogeneousForm, ProjSpace};
use crate::linsys::{plane_system, Ambient, BaseCondition, SurfaceKind};
use crate::matrix::FqMatrix;

/// Budget knobs for the search engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCaps {
    /// Full enumeration is allowed while q^k stays at or below this.
    pub exhaustive_limit: u64,
    /// Witness sweeps enumerate at most this many projective sections.
    pub witness_exhaustive_limit: u64,
    /// Total messages the information-set enumeration may visit per call.
    pub isd_message_limit: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            exhaustive_limit: 100_000_000,
            witness_exhaustive_limit: 10_000_000,
            isd_message_limit: 400_000_000,
        }
    }
}

/// Builds the global worker pool, honouring the `RATSURF_THREADS` override.
/// Safe to call more than once; returns the number of workers in use.
pub fn configure_threads() -> usize {
    if let Ok(v) = std::env::var("RATSURF_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    rayon::current_num_threads()
}

/// q^k with saturation, for cap checks.
pub fn pow_saturating(q: u64, k: u32) -> u64 {
    let mut out = 1u64;
    for _ in 0..k {
        out = out.saturating_mul(q);
    }
    out
}

/// (q^k - 1)/(q - 1): the number of projective message classes.
fn projective_count(q: u64, k: u32) -> u64 {
    let t = pow_saturating(q, k);
    if t == u64::MAX {
        u64::MAX
    } else {
        (t - 1) / (q - 1)
    }
}

/// Flat q*q addition table so the inner loops never touch field internals.
fn flat_add_table(field: &FieldRef) -> Vec<u64> {
    let q = field.order();
    let mut t = vec![0u64; (q * q) as usize];
    for a in 0..q {
        for b in 0..q {
            t[(a * q + b) as usize] = field.add(a, b);
        }
    }
    t
}

/// Per-position transition rows: `trans[p][v]` is `(next(v) - v) · row_p`,
/// where `next` steps through the element encodings 0, 1, …, q-1 and wraps
/// to 0.  Adding them in sequence telescopes to the correct scalar multiples
/// — repeated row addition alone would be wrong in non-prime fields, where
/// the encoding order is not the additive orbit of 1.
fn transition_rows(field: &FieldRef, rows: &[&[u64]]) -> Vec<Vec<Vec<u64>>> {
    let q = field.order();
    rows.iter()
        .map(|row| {
            (0..q)
                .map(|v| {
                    let next = if v + 1 == q { 0 } else { v + 1 };
                    let delta = field.sub(next, v);
                    row.iter().map(|&c| field.mul(delta, c)).collect()
                })
                .collect()
        })
        .collect()
}

/// Adds `row` into `cw` in place, returning the change in Hamming weight.
#[inline]
fn add_row_fused(cw: &mut [u64], row: &[u64], add: &[u64], q: u64) -> i64 {
    let mut delta = 0i64;
    for (c, &r) in row.iter().enumerate() {
        if r == 0 {
            continue;
        }
        let old = cw[c];
        let new = add[(old * q + r) as usize];
        cw[c] = new;
        delta += (new != 0) as i64 - (old != 0) as i64;
    }
    delta
}

/// Result of a full projective sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceScan {
    /// Exact minimum weight of the row space.
    pub d: u64,
    /// First message (coefficients against the scanned rows) attaining it.
    pub witness: Vec<u64>,
    /// Number of projective messages visited.
    pub messages: u64,
}

/// One enumeration block: the leading message digit is pinned to position
/// `lead` (with value 1) and, when present, the next digit is pinned to
/// `second`.  Blocks partition the projective message classes.
struct Block {
    lead: usize,
    second: Option<u64>,
}

fn scan_plan(k: usize, q: u64) -> Vec<Block> {
    let mut blocks = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            for v in 0..q {
                blocks.push(Block { lead, second: Some(v) });
            }
        } else {
            blocks.push(Block { lead, second: None });
        }
    }
    blocks
}

/// Sequentially scans one block, returning (min weight, first witness, count).
fn scan_block(
    trans: &[Vec<Vec<u64>>],
    n: usize,
    q: u64,
    add: &[u64],
    block: &Block,
) -> (u64, Vec<u64>, u64) {
    let k = trans.len();
    let mut digits = vec![0u64; k];
    let mut cw = vec![0u64; n];
    digits[block.lead] = 1;
    let mut weight = add_row_fused(&mut cw, &trans[block.lead][0], add, q);
    let free_start = match block.second {
        Some(v) => {
            digits[block.lead + 1] = v;
            for step in 0..v {
                weight += add_row_fused(&mut cw, &trans[block.lead + 1][step as usize], add, q);
            }
            block.lead + 2
        }
        None => block.lead + 1,
    };

    let mut best = weight as u64;
    let mut witness = digits.clone();
    let mut count = 1u64;
    loop {
        // Odometer step over positions free_start..k, last digit fastest.
        // Each bump adds that digit's transition row; the wrap transition
        // returns its contribution to zero before the carry.
        let mut p = k as isize - 1;
        loop {
            if p < free_start as isize {
                return (best, witness, count);
            }
            let pu = p as usize;
            weight += add_row_fused(&mut cw, &trans[pu][digits[pu] as usize], add, q);
            digits[pu] += 1;
            if digits[pu] == q {
                digits[pu] = 0;
                p -= 1;
            } else {
                break;
            }
        }
        count += 1;
        let w = weight as u64;
        if w < best {
            best = w;
            witness.copy_from_slice(&digits);
        }
    }
}

/// Exact minimum weight of the row space of `mat` over all projective
/// messages.  Deterministic: the witness is the first minimiser in block
/// order.
fn min_weight_scan(mat: &FqMatrix) -> DistanceScan {
    let field = mat.field().clone();
    let q = field.order();
    let k = mat.nrows();
    let n = mat.ncols();
    let rows: Vec<&[u64]> = (0..k).map(|r| mat.row(r)).collect();
    let trans = transition_rows(&field, &rows);
    let add = flat_add_table(&field);
    let blocks = scan_plan(k, q);
    let results: Vec<(u64, Vec<u64>, u64)> = blocks
        .par_iter()
        .map(|b| scan_block(&trans, n, q, &add, b))
        .collect();
    let mut d = u64::MAX;
    let mut witness = Vec::new();
    let mut messages = 0u64;
    for (w, wit, cnt) in results {
        messages += cnt;
        if w < d {
            d = w;
            witness = wit;
        }
    }
    DistanceScan { d, witness, messages }
}

/// Exact minimum distance by full projective enumeration.
///
/// Errors with `CapExceeded` when q^k is larger than
/// `caps.exhaustive_limit`.
pub fn min_distance_exhaustive(code: &EvaluationCode, caps: &SearchCaps) -> Result<DistanceScan> {
    let q = code.field().order();
    let k = code.k() as u32;
    if k == 0 {
        return Err(Error::SearchExhausted("code has dimension zero".into()));
    }
    let needed = pow_saturating(q, k);
    if needed > caps.exhaustive_limit {
        return Err(Error::CapExceeded { needed, cap: caps.exhaustive_limit });
    }
    Ok(min_weight_scan(code.gen()))
}

/// Outcome of the information-set enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsdOutcome {
    /// Lower bound certified by the completed weight levels (capped at
    /// `upper`; at least 1).
    pub certified_lower: u64,
    /// Best codeword weight known (seeded from the code, improved by any
    /// lighter codeword met during enumeration).
    pub upper: u64,
    /// Set when the bounds met: the exact minimum distance.
    pub exact: Option<u64>,
    /// Deepest fully completed weight level.
    pub levels_completed: u32,
    /// Fresh-column ranks of the disjoint information sets, in build order.
    pub set_ranks: Vec<usize>,
    /// Total messages enumerated.
    pub messages: u64,
}

/// Greedy disjoint information sets.  Each round runs Gauss–Jordan with the
/// still-unused columns offered first (ascending), so every generator is in
/// systematic form on its pivot columns and the fresh pivots of distinct
/// rounds are disjoint.  Returns (systematic generator, fresh-pivot columns)
/// per round.
fn disjoint_information_sets(gen: &FqMatrix) -> Vec<(FqMatrix, Vec<usize>)> {
    let field = gen.field().clone();
    let k = gen.nrows();
    let n = gen.ncols();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        order.extend((0..n).filter(|&c| used[c]));
        let mut m = gen.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for &col in &order {
            if r == k {
                break;
            }
            let mut pivot = None;
            for row in r..k {
                if m.at(row, col) != 0 {
                    pivot = Some(row);
                    break;
                }
            }
            let Some(prow) = pivot else { continue };
            if prow != r {
                for c in 0..n {
                    let a = m.at(r, c);
                    let b = m.at(prow, c);
                    m.set(r, c, b);
                    m.set(prow, c, a);
                }
            }
            let inv = field.inv(m.at(r, col));
            for c in 0..n {
                m.set(r, c, field.mul(inv, m.at(r, c)));
            }
            for row in 0..k {
                if row != r && m.at(row, col) != 0 {
                    let f = m.at(row, col);
                    for c in 0..n {
                        let v = field.sub(m.at(row, c), field.mul(f, m.at(r, c)));
                        m.set(row, c, v);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        debug_assert_eq!(r, k, "generator must have full rank");
        let fresh: Vec<usize> = pivots.iter().copied().filter(|&c| !used[c]).collect();
        if fresh.is_empty() {
            break;
        }
        for &c in &fresh {
            used[c] = true;
        }
        sets.push((m, fresh));
    }
    sets
}

/// Number of weight-`w` projective messages over k positions.
fn level_size(k: u32, q: u64, w: u32) -> u64 {
    let mut binom = 1u64;
    for i in 0..w {
        binom = binom.saturating_mul((k - i) as u64) / (i as u64 + 1);
    }
    let mut coeffs = 1u64;
    for _ in 1..w {
        coeffs = coeffs.saturating_mul(q - 1);
    }
    binom.saturating_mul(coeffs)
}

/// Depth-first enumeration of the weight-`depth_left` extensions of
/// `parent`, supports drawn from `start..k`, all coefficients nonzero.
/// Coefficients step through the transition rows so every scalar multiple is
/// visited exactly once.  `scratch` holds one (codeword, weight) buffer per
/// remaining depth.
#[allow(clippy::too_many_arguments)]
fn level_dfs(
    trans: &[Vec<Vec<u64>>],
    q: u64,
    add: &[u64],
    parent: &(Vec<u64>, i64),
    scratch: &mut [(Vec<u64>, i64)],
    start: usize,
    depth_left: usize,
    best: &mut u64,
    count: &mut u64,
) {
    let k = trans.len();
    let (child, rest) = scratch.split_first_mut().expect("scratch sized to depth");
    for s in start..=(k - depth_left) {
        child.0.copy_from_slice(&parent.0);
        child.1 = parent.1;
        for c in 1..q {
            child.1 += add_row_fused(&mut child.0, &trans[s][(c - 1) as usize], add, q);
            if depth_left == 1 {
                *count += 1;
                let w = child.1 as u64;
                if w < *best {
                    *best = w;
                }
            } else {
                level_dfs(trans, q, add, child, rest, s + 1, depth_left - 1, best, count);
            }
        }
    }
}

/// Enumerates every projective message of weight exactly `w` against the
/// rows behind `trans`, returning (lightest codeword weight seen, messages
/// visited).
fn level_scan(trans: &[Vec<Vec<u64>>], n: usize, q: u64, add: &[u64], w: u32) -> (u64, u64) {
    let k = trans.len();
    let w = w as usize;
    let firsts: Vec<usize> = (0..=(k - w)).collect();
    let results: Vec<(u64, u64)> = firsts
        .par_iter()
        .map(|&s1| {
            let mut root = (vec![0u64; n], 0i64);
            root.1 += add_row_fused(&mut root.0, &trans[s1][0], add, q);
            let mut best = u64::MAX;
            let mut count = 0u64;
            if w == 1 {
                count = 1;
                best = root.1 as u64;
            } else {
                let mut scratch = vec![(vec![0u64; n], 0i64); w - 1];
                level_dfs(trans, q, add, &root, &mut scratch, s1 + 1, w - 1, &mut best, &mut count);
            }
            (best, count)
        })
        .collect();
    let mut best = u64::MAX;
    let mut count = 0u64;
    for (b, c) in results {
        best = best.min(b);
        count += c;
    }
    (best, count)
}

/// Minimum distance by enumeration over disjoint information sets.
///
/// The upper bound starts from the code's recorded witness weight and drops
/// whenever a lighter codeword is met.  After completing weight level `w` on
/// a generator whose information set contributed `r` fresh columns, any
/// unseen codeword restricts to a message of weight at least `w + 1` there,
/// of which at most `k - r` sits on reused columns; summing over the
/// pairwise-disjoint fresh column sets certifies the lower bound.  Supports
/// that cannot yet contribute are deferred (and caught up) rather than
/// scanned for nothing.
///
/// Stops with `exact` when the bounds meet, with a verified bracket when
/// `target` is certified or the message budget would be exceeded.
pub fn min_distance_isd(
    code: &EvaluationCode,
    target: Option<u64>,
    caps: &SearchCaps,
) -> Result<IsdOutcome> {
    let field = code.field().clone();
    let q = field.order();
    let k = code.k();
    let n = code.n();
    if k == 0 {
        return Err(Error::SearchExhausted("code has dimension zero".into()));
    }
    if k > 24 || q > 9 {
        return Err(Error::IsdUnsupported(format!(
            "information-set enumeration supports k <= 24 and q <= 9, got k={k} q={q}"
        )));
    }

    let sets = disjoint_information_sets(code.gen());
    let set_ranks: Vec<usize> = sets.iter().map(|(_, fresh)| fresh.len()).collect();
    let add = flat_add_table(&field);
    let mut upper = code.d_upper().unwrap_or(n as u64);
    let mut done = vec![0u32; sets.len()];
    let mut spent = 0u64;

    let lower_of = |done: &[u32]| -> u64 {
        let mut lb = 0u64;
        for (j, &w) in done.iter().enumerate() {
            let reused = (k - set_ranks[j]) as u64;
            let w = w as u64;
            if w + 1 > reused {
                lb += w + 1 - reused;
            }
        }
        lb.max(1)
    };
    let outcome = |done: &[u32], upper: u64, spent: u64, level: u32, exact: bool| IsdOutcome {
        certified_lower: lower_of(done).min(upper),
        upper,
        exact: if exact || lower_of(done) >= upper { Some(upper) } else { None },
        levels_completed: level,
        set_ranks: set_ranks.clone(),
        messages: spent,
    };

    for w in 1..=k as u32 {
        for (j, (mat, fresh)) in sets.iter().enumerate() {
            // This set only strengthens the bound once w+1 exceeds its
            // reused-column slack; catch up its earlier levels then.
            if (w as usize) < k - fresh.len() {
                continue;
            }
            let rows: Vec<&[u64]> = (0..k).map(|r| mat.row(r)).collect();
            let trans = transition_rows(&field, &rows);
            while done[j] < w {
                let lvl = done[j] + 1;
                let est = level_size(k as u32, q, lvl);
                if spent.saturating_add(est) > caps.isd_message_limit {
                    return Ok(outcome(&done, upper, spent, w - 1, false));
                }
                let (light, cnt) = level_scan(&trans, n, q, &add, lvl);
                spent += cnt;
                if light < upper {
                    upper = light;
                }
                done[j] = lvl;
            }
        }
        let lb = lower_of(&done);
        if lb >= upper {
            return Ok(outcome(&done, upper, spent, w, true));
        }
        if let Some(t) = target {
            if lb >= t {
                return Ok(outcome(&done, upper, spent, w, false));
            }
        }
        if w as usize == k {
            // A full information set enumerated through weight k has ranged
            // over every message, so the lightest weight seen is exact.
            return Ok(outcome(&done, upper, spent, w, true));
        }
    }
    unreachable!("level loop returns at w = k");
}

/// A section with many rational zeros, plus how it was found.
#[derive(Debug, Clone)]
pub struct WitnessOutcome {
    /// The section itself.
    pub section: HomogeneousForm,
    /// Its rational zeros among the code's evaluation points.
    pub zeros: u64,
    /// The proved ceiling on zeros for this system, when one applies.
    pub bound: Option<u64>,
    /// Whether the witness meets that ceiling.
    pub reached: bool,
    /// Which search produced it.
    pub method: &'static str,
}

/// All projective messages for a small system, in block-scan order.
fn small_projective_messages(q: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut digits = vec![0u64; k];
    for lead in 0..k {
        digits.iter_mut().for_each(|d| *d = 0);
        digits[lead] = 1;
        loop {
            out.push(digits.clone());
            let mut p = k as isize - 1;
            loop {
                if p <= lead as isize {
                    break;
                }
                let pu = p as usize;
                digits[pu] += 1;
                if digits[pu] == q {
                    digits[pu] = 0;
                    p -= 1;
                } else {
                    break;
                }
            }
            if p <= lead as isize {
                break;
            }
        }
    }
    out
}

/// Bit mask of zero positions of a value row.
fn zero_mask(values: &[u64]) -> Vec<u64> {
    let mut mask = vec![0u64; values.len().div_ceil(64)];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            mask[i / 64] |= 1 << (i % 64);
        }
    }
    mask
}

fn or_count(parts: &[&[u64]]) -> u32 {
    let words = parts[0].len();
    let mut total = 0u32;
    for i in 0..words {
        let mut w = 0u64;
        for p in parts {
            w |= p[i];
        }
        total += w.count_ones();
    }
    total
}

/// Canonical linear forms on the system's ambient projective space, in point
/// enumeration order of their coefficient vectors.
fn linear_forms(field: &FieldRef, nvars: usize) -> Vec<HomogeneousForm> {
    let space = if nvars == 3 { ProjSpace::Plane } else { ProjSpace::Space };
    enumerate_points(field, space)
        .map(|p| {
            HomogeneousForm::new(field, nvars, 1, p.coords()[..nvars].to_vec())
                .expect("canonical point is nonzero")
        })
        .collect()
}

/// Zero masks of `forms` over the code's evaluation rows.
fn form_masks(code: &EvaluationCode, forms: &[HomogeneousForm]) -> Result<Vec<Vec<u64>>> {
    forms
        .iter()
        .map(|f| Ok(zero_mask(&code.evaluate_section(f)?)))
        .collect()
}

/// Basis combinations of a small linear system, one per projective class.
fn system_members(field: &FieldRef, basis: &[HomogeneousForm]) -> Vec<HomogeneousForm> {
    let q = field.order();
    small_projective_messages(q, basis.len())
        .into_iter()
        .map(|msg| {
            let mut acc = HomogeneousForm::zero(field, basis[0].nvars(), basis[0].degree());
            for (c, b) in msg.iter().zip(basis) {
                if *c != 0 {
                    acc = acc.add(&b.scale(*c));
                }
            }
            acc
        })
        .collect()
}

/// Recounts zeros of `section` over the code's points and packages the
/// outcome.
fn finish_witness(
    code: &EvaluationCode,
    section: HomogeneousForm,
    bound: Option<u64>,
    method: &'static str,
) -> Result<WitnessOutcome> {
    let row = code.evaluate_section(&section)?;
    let zeros = row.iter().filter(|&&v| v == 0).count() as u64;
    Ok(WitnessOutcome { section, zeros, bound, reached: bound == Some(zeros), method })
}

/// Best product of a conic through the blown-up point with `arity` rational
/// lines (a multiset), stopping early at the proved ceiling.
fn z_composite_witness(code: &EvaluationCode, arity: usize, bound: Option<u64>) -> Result<WitnessOutcome> {
    let field = code.field().clone();
    let model = code.model();
    let center = model.as_blowup_z().expect("Z model").clone();
    let conics = plane_system(&field, 2, vec![BaseCondition::new(center, 1)?])?;
    let conic_forms = system_members(&field, conics.basis());
    let lines = linear_forms(&field, 3);
    let conic_masks = form_masks(code, &conic_forms)?;
    let line_masks = form_masks(code, &lines)?;

    let mut best = 0u32;
    let mut pick: Option<(usize, Vec<usize>)> = None;
    'outer: for (ci, cm) in conic_masks.iter().enumerate() {
        let mut stack = vec![0usize; arity];
        loop {
            let parts: Vec<&[u64]> = std::iter::once(cm.as_slice())
                .chain(stack.iter().map(|&li| line_masks[li].as_slice()))
                .collect();
            let z = or_count(&parts);
            if z > best {
                best = z;
                pick = Some((ci, stack.clone()));
                if bound == Some(z as u64) {
                    break 'outer;
                }
            }
            // Next non-decreasing index tuple (multisets of lines).
            let mut p = arity;
            loop {
                if p == 0 {
                    break;
                }
                p -= 1;
                if stack[p] + 1 < lines.len() {
                    let v = stack[p] + 1;
                    for s in stack.iter_mut().skip(p) {
                        *s = v;
                    }
                    break;
                }
                if p == 0 {
                    stack.clear();
                    break;
                }
            }
            if stack.is_empty() {
                break;
            }
        }
    }
    let (ci, lis) = pick.expect("at least one candidate");
    let mut section = conic_forms[ci].clone();
    for li in lis {
        section = section.mul(&lines[li]);
    }
    finish_witness(code, section, bound, "conic-line-products")
}

/// Best product of a conic through the degree-four point with two distinct
/// lines through the blown-up center.
fn y_composite_witness(code: &EvaluationCode, bound: Option<u64>) -> Result<WitnessOutcome> {
    let field = code.field().clone();
    let (center, _, quartic_point) = code.model().as_blowup_y().expect("Y model");
    let center = center.clone();
    let conics = plane_system(&field, 2, vec![BaseCondition::new(quartic_point.clone(), 1)?])?;
    let conic_forms = system_members(&field, conics.basis());
    let through_center: Vec<HomogeneousForm> = linear_forms(&field, 3)
        .into_iter()
        .filter(|l| l.evaluate(&center).expect("same field") == 0)
        .collect();

    let mut best: Option<(u64, HomogeneousForm)> = None;
    'outer: for conic in &conic_forms {
        for i in 0..through_center.len() {
            for j in (i + 1)..through_center.len() {
                let section = conic.mul(&through_center[i]).mul(&through_center[j]);
                let row = code.evaluate_section(&section)?;
                let zeros = row.iter().filter(|&&v| v == 0).count() as u64;
                if best.as_ref().map_or(true, |(bz, _)| zeros > *bz) {
                    best = Some((zeros, section));
                    if bound == Some(zeros) {
                        break 'outer;
                    }
                }
            }
        }
    }
    let (_, section) = best.expect("at least one candidate");
    finish_witness(code, section, bound, "conic-through-quartic-point")
}

/// Best product of `arity` hyperplanes restricted to the quadric.
fn quadric_composite_witness(code: &EvaluationCode, arity: usize, bound: Option<u64>) -> Result<WitnessOutcome> {
    let field = code.field().clone();
    let planes = linear_forms(&field, 4);
    let masks = form_masks(code, &planes)?;
    let m = masks.len();

    // Deterministic parallel split over the first index; ties resolve to the
    // lexicographically first tuple.
    let per_first: Vec<(u32, Vec<usize>)> = (0..m)
        .into_par_iter()
        .map(|a| {
            let mut best = 0u32;
            let mut pick = vec![a];
            match arity {
                1 => {
                    best = or_count(&[&masks[a]]);
                }
                2 => {
                    for b in a..m {
                        let z = or_count(&[&masks[a], &masks[b]]);
                        if z > best {
                            best = z;
                            pick = vec![a, b];
                            if bound == Some(z as u64) {
                                break;
                            }
                        }
                    }
                }
                _ => {
                    'outer: for b in a..m {
                        let ab: Vec<u64> =
                            masks[a].iter().zip(&masks[b]).map(|(x, y)| x | y).collect();
                        for c in b..m {
                            let z = or_count(&[&ab, &masks[c]]);
                            if z > best {
                                best = z;
                                pick = vec![a, b, c];
                                if bound == Some(z as u64) {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            (best, pick)
        })
        .collect();

    let mut best = 0u32;
    let mut pick: Option<Vec<usize>> = None;
    for (z, tuple) in per_first {
        if z > best {
            best = z;
            pick = Some(tuple);
        }
    }
    let tuple = pick.expect("at least one candidate");
    let mut section = planes[tuple[0]].clone();
    for &i in &tuple[1..] {
        section = section.mul(&planes[i]);
    }
    finish_witness(code, section, bound, "hyperplane-products")
}

/// Finds a section of the code's system with as many rational zeros as the
/// search can certify.
///
/// Small systems are swept in full, so the result is the true maximum.
/// Larger ones fall back to composite candidates shaped by the system's base
/// conditions; `reached` reports whether the proved ceiling was met.
pub fn witness_max_curve(code: &EvaluationCode, caps: &SearchCaps) -> Result<WitnessOutcome> {
    let field = code.field().clone();
    let q = field.order();
    let system = code.system();
    let dim = system.dimension();
    let bound = construction_lower_bound(code.model(), system).ok().map(|b| b.value);

    if projective_count(q, dim as u32) <= caps.witness_exhaustive_limit {
        // Full sweep over the system itself (not the reduced generator), so
        // the winning message converts straight back into a section.
        let rows: Result<Vec<Vec<u64>>> =
            system.basis().iter().map(|f| code.evaluate_section(f)).collect();
        let mat = FqMatrix::from_rows(&field, rows?);
        let scan = min_weight_scan(&mat);
        let section = system.linear_combination(&scan.witness);
        return finish_witness(code, section, bound, "exhaustive");
    }

    match (code.model().kind(), system.ambient(), system.degree()) {
        (SurfaceKind::BlowupZ, Ambient::Plane, deg @ 3..=5) => {
            z_composite_witness(code, deg as usize - 2, bound)
        }
        (SurfaceKind::BlowupY, Ambient::Plane, 4) => y_composite_witness(code, bound),
        (SurfaceKind::EllipticQuadric, Ambient::Quadric, deg @ 1..=3) => {
            quadric_composite_witness(code, deg as usize, bound)
        }
        _ => Err(Error::SearchExhausted(format!(
            "no witness search for this system (dimension {dim} over q={q})"
        ))),
    }
}
