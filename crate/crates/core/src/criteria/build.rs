//! Assembly of tensor-sum and Hadamard-sum matrices.

use num_integer::Integer;

use super::{CriteriaError, LocalData, Sym, TwistPattern};
use crate::config::EvalConfig;
use crate::spectra::SymMatrix;

fn gamma(k: usize) -> f64 {
    let ku = k as f64 * f64::EPSILON * 0.5;
    ku / (1.0 - ku)
}

/// `x^n` by repeated squaring: `O(log n)` multiplications.
pub fn pow_by_squaring(mut x: f64, mut n: u64) -> f64 {
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= x;
        }
        n >>= 1;
        if n > 0 {
            x *= x;
        }
    }
    acc
}

fn checked_pow(x: i128, n: u64) -> Option<i128> {
    x.checked_pow(u32::try_from(n).ok()?)
}

/// Common denominator and integer weights for `d_i^{2-n}`, if representable.
fn exact_weights(dims: &[i128], n: u64) -> Option<(Vec<i128>, i128)> {
    if n <= 2 {
        let w = dims.iter().map(|&d| checked_pow(d, 2 - n)).collect::<Option<Vec<_>>>()?;
        return Some((w, 1));
    }
    let pows = dims.iter().map(|&d| checked_pow(d, n - 2)).collect::<Option<Vec<_>>>()?;
    let mut lcm: i128 = 1;
    for &p in &pows {
        let g = lcm.gcd(&p);
        lcm = (lcm / g).checked_mul(p)?;
    }
    Some((pows.iter().map(|&p| lcm / p).collect(), lcm))
}

/// Exact weights when available: `n = 2` is weight-free, otherwise the
/// dimensions must be integers.
fn local_weights(l: &LocalData, n: u64) -> Option<(Vec<i128>, i128)> {
    if n == 2 {
        return Some((vec![1; l.blocks.len()], 1));
    }
    l.integral_dims().and_then(|d| exact_weights(&d, n))
}

fn float_weight(dim: f64, n: u64) -> f64 {
    if n <= 2 {
        pow_by_squaring(dim, 2 - n)
    } else {
        1.0 / pow_by_squaring(dim, n - 2)
    }
}

/// Packed index list of `(row, col)` pairs with `col ≤ row`.
fn packed_len(order: usize) -> usize {
    order * (order + 1) / 2
}

/// `Σ_i w_i ⊗_j (U_j B_i U_jᵀ)`; `signs` multiplies each term by ±1.
pub(crate) fn tensor_matrix(
    l: &LocalData,
    pattern: &TwistPattern,
    signs: Option<&[f64]>,
    cfg: &EvalConfig,
) -> Result<SymMatrix, CriteriaError> {
    let s = l.size();
    let n = pattern.len();
    if n == 0 {
        return Err(CriteriaError::InvalidN);
    }
    if pattern.size() != s {
        return Err(CriteriaError::NonUnitaryTwist(format!("pattern acts on {} points, |S| = {s}", pattern.size())));
    }
    let order = super::order_of(s, n).filter(|&o| o <= cfg.dense_cap).ok_or(CriteriaError::DenseCapExceeded {
        order: super::order_of(s, n).unwrap_or(usize::MAX),
        cap: cfg.dense_cap,
    })?;
    let mut factors: Vec<Vec<Vec<f64>>> = Vec::with_capacity(l.blocks.len());
    for i in 0..l.blocks.len() {
        let blk = l.known_block(i)?;
        factors.push((0..n).map(|j| pattern.conjugate(j, &blk)).collect());
    }
    let sign = |i: usize| signs.map_or(1.0, |sg| sg[i]);

    // digits of every multi-index, most significant first
    let mut digits = vec![0usize; order * n];
    for idx in 0..order {
        let mut r = idx;
        for k in (0..n).rev() {
            digits[idx * n + k] = r % s;
            r /= s;
        }
    }
    let product = |f: &[Vec<f64>], r: usize, c: usize| -> f64 {
        let mut p = 1.0;
        for k in 0..n {
            p *= f[k][digits[r * n + k] * s + digits[c * n + k]];
            if p == 0.0 {
                break;
            }
        }
        p
    };

    let exact_ok = order <= cfg.exact_cap && pattern.is_permutation() && l.entries_integral();
    if exact_ok {
        if let Some((weights, denom)) = local_weights(l, n as u64) {
            if let Some(numer) = exact_tensor(&factors, &weights, signs, order, &product) {
                return Ok(SymMatrix::from_exact(order, numer, denom)?);
            }
        }
    }

    let mut acc = vec![0.0; packed_len(order)];
    let mut entry_error = 0.0;
    let mut max_abs = 0.0;
    for (i, f) in factors.iter().enumerate() {
        let b = &l.blocks[i];
        let w = sign(i) * float_weight(b.dim, n as u64);
        let fmax: f64 = f.iter().map(|m| m.iter().fold(0.0f64, |a, &v| a.max(v.abs()))).product();
        if w == 0.0 || fmax == 0.0 {
            continue;
        }
        let term = w.abs() * fmax;
        max_abs += term;
        entry_error += term * ((n as f64 - 2.0).abs() * b.dim_error / b.dim + gamma(2 * n + 2));
        let mut p = 0;
        for r in 0..order {
            for c in 0..=r {
                let v = product(f, r, c);
                if v != 0.0 {
                    acc[p] += w * v;
                }
                p += 1;
            }
        }
    }
    entry_error += gamma(l.blocks.len() + 1) * max_abs;
    Ok(SymMatrix::from_packed(order, acc, entry_error)?)
}

/// Entry `(r, c)` of one tensor factor.
type FactorProduct<'a> = &'a dyn Fn(&[Vec<f64>], usize, usize) -> f64;

fn exact_tensor(
    factors: &[Vec<Vec<f64>>],
    weights: &[i128],
    signs: Option<&[f64]>,
    order: usize,
    product: FactorProduct,
) -> Option<Vec<i128>> {
    let mut acc = vec![0i128; packed_len(order)];
    for (i, f) in factors.iter().enumerate() {
        let mut w = weights[i];
        if signs.is_some_and(|sg| sg[i] < 0.0) {
            w = -w;
        }
        // factor entries are small integers; guard the product magnitude
        let bound: f64 = f.iter().map(|m| m.iter().fold(0.0f64, |a, &v| a.max(v))).product();
        if bound * (w.unsigned_abs() as f64) > 1e36 {
            return None;
        }
        let mut p = 0;
        for r in 0..order {
            for c in 0..=r {
                let v = product(f, r, c);
                if v != 0.0 {
                    acc[p] = acc[p].checked_add(w.checked_mul(v as i128)?)?;
                }
                p += 1;
            }
        }
    }
    Some(acc)
}

/// Symbolic conjugation `U B Uᵀ` over `{Zero, Known, Unknown}`.
fn conjugate_sym(pattern: &TwistPattern, j: usize, b: &[Sym]) -> Vec<Sym> {
    let s = pattern.size();
    let t = &pattern.twists()[j];
    if let Some(p) = &t.perm {
        let mut out = Vec::with_capacity(s * s);
        for a in 0..s {
            for c in 0..s {
                out.push(b[p[a] * s + p[c]]);
            }
        }
        return out;
    }
    let u = &t.matrix;
    let mut out = Vec::with_capacity(s * s);
    for a in 0..s {
        for c in 0..s {
            let mut unknown = false;
            let mut val = 0.0;
            let mut any = false;
            for x in 0..s {
                for y in 0..s {
                    let coef = u[a * s + x] * u[c * s + y];
                    if coef == 0.0 {
                        continue;
                    }
                    match b[x * s + y] {
                        Sym::Zero => {}
                        Sym::Unknown => unknown = true,
                        Sym::Known(v) => {
                            val += coef * v;
                            any = true;
                        }
                    }
                }
            }
            out.push(if unknown {
                Sym::Unknown
            } else if any && val != 0.0 {
                Sym::Known(val)
            } else {
                Sym::Zero
            });
        }
    }
    out
}

/// Per-block symbolic Hadamard products `∘_j (U_j B_i U_jᵀ)`.
fn hadamard_symbols(l: &LocalData, pattern: &TwistPattern) -> Result<Vec<Vec<Sym>>, CriteriaError> {
    let s = l.size();
    if pattern.size() != s {
        return Err(CriteriaError::NonUnitaryTwist(format!("pattern acts on {} points, |S| = {s}", pattern.size())));
    }
    Ok(l
        .blocks
        .iter()
        .map(|b| {
            let syms: Vec<Sym> = b.entries.iter().map(|&e| Sym::from_entry(e)).collect();
            let mut prod = vec![Sym::Known(1.0); s * s];
            for j in 0..pattern.len() {
                let c = conjugate_sym(pattern, j, &syms);
                for (p, q) in prod.iter_mut().zip(c) {
                    *p = p.mul(q);
                }
            }
            prod
        })
        .collect())
}

/// `Σ_i d_i^{2-n} ∘_j (U_j B_i U_jᵀ)`; unknowns must be annihilated.
pub(crate) fn hadamard_matrix(l: &LocalData, pattern: &TwistPattern) -> Result<SymMatrix, CriteriaError> {
    let s = l.size();
    let n = pattern.len() as u64;
    if n == 0 {
        return Err(CriteriaError::InvalidN);
    }
    let syms = hadamard_symbols(l, pattern)?;
    for (i, prod) in syms.iter().enumerate() {
        if let Some(p) = prod.iter().position(|v| *v == Sym::Unknown) {
            return Err(CriteriaError::UnknownNotAnnihilated {
                block: l.blocks[i].label + 1,
                row: p / s + 1,
                col: p % s + 1,
            });
        }
    }
    let value = |v: &Sym| match v {
        Sym::Known(x) => *x,
        _ => 0.0,
    };
    if pattern.is_permutation() && l.entries_integral() {
        if let Some((weights, denom)) = local_weights(l, n) {
            let exact: Option<Vec<i128>> = (0..s)
                .flat_map(|r| (0..=r).map(move |c| (r, c)))
                .map(|(r, c)| {
                    let mut acc: i128 = 0;
                    for (i, prod) in syms.iter().enumerate() {
                        let v = value(&prod[r * s + c]);
                        if v != 0.0 {
                            if v.abs() > 1e30 {
                                return None;
                            }
                            acc = acc.checked_add(weights[i].checked_mul(v as i128)?)?;
                        }
                    }
                    Some(acc)
                })
                .collect();
            if let Some(numer) = exact {
                return Ok(SymMatrix::from_exact(s, numer, denom)?);
            }
        }
    }
    let mut full = vec![0.0; s * s];
    for (i, prod) in syms.iter().enumerate() {
        let w = float_weight(l.blocks[i].dim, n);
        for (f, v) in full.iter_mut().zip(prod) {
            *f += w * value(v);
        }
    }
    symmetrize(&mut full, s);
    Ok(SymMatrix::from_full(s, &full, hadamard_entry_error(l, pattern))?)
}

fn symmetrize(full: &mut [f64], s: usize) {
    for r in 0..s {
        for c in 0..r {
            let a = 0.5 * (full[r * s + c] + full[c * s + r]);
            full[r * s + c] = a;
            full[c * s + r] = a;
        }
    }
}

/// Bound on the rounding and dimension error of each Hadamard-sum entry.
pub(crate) fn hadamard_entry_error(l: &LocalData, pattern: &TwistPattern) -> f64 {
    let n = pattern.len();
    let mut err = 0.0;
    for b in &l.blocks {
        let mx = b.entries.iter().filter_map(|e| e.known()).fold(0.0f64, f64::max);
        let term = float_weight(b.dim, n as u64) * pow_by_squaring(mx, n as u64);
        let perm_err = if pattern.is_permutation() { 0.0 } else { gamma(4 * l.size()) * n as f64 };
        err += term * ((n as f64 - 2.0).abs() * b.dim_error / b.dim + gamma(2 * n + 2) + perm_err);
    }
    err * (1.0 + gamma(l.blocks.len() + 1))
}

/// Known part of a `2×2` Hadamard sum whose unknowns sit off the diagonal.
/// Returns the row-major known matrix and whether unknown mass is present.
pub(crate) fn hadamard_known_part(l: &LocalData, pattern: &TwistPattern) -> Result<(Vec<f64>, bool), CriteriaError> {
    let s = l.size();
    let n = pattern.len() as u64;
    let syms = hadamard_symbols(l, pattern)?;
    let mut known = vec![0.0; s * s];
    let mut unknown_off = false;
    for (i, prod) in syms.iter().enumerate() {
        let w = float_weight(l.blocks[i].dim, n);
        for r in 0..s {
            for c in 0..s {
                match prod[r * s + c] {
                    Sym::Unknown if r == c => {
                        return Err(CriteriaError::PreconditionViolated(format!(
                            "block x{} leaves an unknown on the diagonal at ({}, {})",
                            l.blocks[i].label + 1,
                            r + 1,
                            c + 1
                        )))
                    }
                    Sym::Unknown => unknown_off = true,
                    Sym::Known(v) => known[r * s + c] += w * v,
                    Sym::Zero => {}
                }
            }
        }
    }
    symmetrize(&mut known, s);
    Ok((known, unknown_off))
}

/// `Σ_i d_i² (B_i/d_i)^{∘n}`; exact for small `n`, otherwise floating point.
pub(crate) fn reduced_power(l: &LocalData, n: u64) -> Result<SymMatrix, CriteriaError> {
    if n == 0 {
        return Err(CriteriaError::InvalidN);
    }
    let s = l.size();
    let blocks = (0..l.blocks.len()).map(|i| l.known_block(i)).collect::<Result<Vec<_>, _>>()?;
    if l.entries_integral() {
        if let Some((weights, denom)) = local_weights(l, n) {
            let exact: Option<Vec<i128>> = (0..s)
                .flat_map(|r| (0..=r).map(move |c| (r, c)))
                .map(|(r, c)| {
                    let mut acc: i128 = 0;
                    for (i, b) in blocks.iter().enumerate() {
                        let v = b[r * s + c];
                        if v != 0.0 {
                            let p = checked_pow(v as i128, n)?;
                            acc = acc.checked_add(weights[i].checked_mul(p)?)?;
                        }
                    }
                    Some(acc)
                })
                .collect();
            if let Some(numer) = exact {
                return Ok(SymMatrix::from_exact(s, numer, denom)?);
            }
        }
    }
    let mut full = vec![0.0; s * s];
    let mut err = 0.0;
    let log_n = 64 - n.leading_zeros() as usize;
    for (i, b) in blocks.iter().enumerate() {
        let d = l.blocks[i].dim;
        let rel_x = f64::EPSILON + l.blocks[i].dim_error / d;
        for (f, &v) in full.iter_mut().zip(b) {
            if v != 0.0 {
                let t = d * d * pow_by_squaring(v / d, n);
                *f += t;
                err += t.abs() * (n as f64 * rel_x + gamma(2 * log_n + 3) + 2.0 * l.blocks[i].dim_error / d);
            }
        }
    }
    symmetrize(&mut full, s);
    let max = full.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    Ok(SymMatrix::from_full(s, &full, err + gamma(l.blocks.len() + 1) * max)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squaring_matches_powi() {
        for n in 0..40u64 {
            let a = pow_by_squaring(1.07, n);
            let b = 1.07f64.powi(n as i32);
            assert!((a - b).abs() <= 1e-13 * b);
        }
        assert_eq!(pow_by_squaring(0.5, 1_000_000), 0.0);
        assert_eq!(pow_by_squaring(1.0, u64::MAX), 1.0);
    }

    #[test]
    fn weights_share_a_denominator() {
        let (w, d) = exact_weights(&[1, 5, 6, 7], 3).unwrap();
        assert_eq!(d, 210);
        assert_eq!(w, vec![210, 42, 35, 30]);
        let (w, d) = exact_weights(&[1, 2], 1).unwrap();
        assert_eq!((w, d), (vec![1, 2], 1));
    }
}
