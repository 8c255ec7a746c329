//! Exact characteristic polynomials over the integers.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Largest order for which [`char_poly`] is offered.
pub const EXACT_ORDER_LIMIT: usize = 20;

/// `det(xI - A) = sum c_k x^k`, coefficients ascending, monic.
///
/// Only built from symmetric integer matrices, so every root is real; the
/// exact root counts below rely on that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

/// Division-free Samuelson–Berkowitz recurrence on a row-major integer
/// matrix. Returns coefficients in descending order, or `None` if the ring
/// arithmetic overflows.
fn berkowitz<T>(a: &[i64], n: usize) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedAdd + CheckedSub + CheckedMul + From<i64>,
{
    let at = |i: usize, j: usize| T::from(a[i * n + j]);
    let mut p: Vec<T> = vec![T::one()];
    for k in (0..n).rev() {
        let s = n - k;
        // Toeplitz column: 1, -a_kk, -R C, -R A1 C, ..., -R A1^(s-2) C
        let mut t: Vec<T> = Vec::with_capacity(s + 1);
        t.push(T::one());
        t.push(T::zero().checked_sub(&at(k, k))?);
        let mut v: Vec<T> = (k + 1..n).map(|i| at(i, k)).collect();
        for _ in 0..s.saturating_sub(1) {
            let mut rv = T::zero();
            for (j, vj) in (k + 1..n).zip(&v) {
                rv = rv.checked_add(&at(k, j).checked_mul(vj)?)?;
            }
            t.push(T::zero().checked_sub(&rv)?);
            let mut next = Vec::with_capacity(v.len());
            for i in k + 1..n {
                let mut acc = T::zero();
                for (j, vj) in (k + 1..n).zip(&v) {
                    acc = acc.checked_add(&at(i, j).checked_mul(vj)?)?;
                }
                next.push(acc);
            }
            v = next;
        }
        let mut q = Vec::with_capacity(s + 1);
        for i in 0..=s {
            let mut acc = T::zero();
            for j in 0..=i.min(s - 1) {
                acc = acc.checked_add(&t[i - j].checked_mul(&p[j])?)?;
            }
            q.push(acc);
        }
        p = q;
    }
    Some(p)
}

/// Characteristic polynomial of an integer symmetric matrix.
pub(crate) fn char_poly_of_matrix(a: &[i64], n: usize) -> CharPoly {
    let desc: Vec<BigInt> = match berkowitz::<i128>(a, n) {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None => berkowitz::<BigInt>(a, n).expect("big integers do not overflow"),
    };
    CharPoly { coeffs: desc.into_iter().rev().collect() }
}

/// Exact `det(xI - A(g))`.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    let n = g.order();
    if n > EXACT_ORDER_LIMIT {
        return Err(Error::Unsupported(format!(
            "exact characteristic polynomials are limited to order {EXACT_ORDER_LIMIT}, got {n}"
        )));
    }
    let mut a = vec![0i64; n * n];
    for i in 0..n {
        for j in bits(g.rows()[i]) {
            a[i * n + j] = 1;
        }
    }
    Ok(char_poly_of_matrix(&a, n))
}

/// Divides `coeffs` (ascending) by `x - r` in place if exact.
fn divide_by_linear(coeffs: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let d = coeffs.len().checked_sub(1)?;
    if d == 0 {
        return None;
    }
    let mut quotient = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for k in (0..=d).rev() {
        let value = &coeffs[k] + &carry * r;
        if k == 0 {
            return value.is_zero().then_some(quotient);
        }
        quotient[k - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

/// `p(x + r)` by repeated synthetic division.
fn taylor_shift(coeffs: &mut [BigInt], r: &BigInt) {
    if r.is_zero() {
        return;
    }
    let n = coeffs.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let add = &coeffs[j + 1] * r;
            coeffs[j] += add;
        }
    }
}

impl CharPoly {
    /// `x^n`.
    pub fn monomial(n: usize) -> CharPoly {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        CharPoly { coeffs }
    }

    /// Product with another characteristic polynomial.
    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CharPoly { coeffs }
    }

    /// Monic polynomial from ascending integer coefficients of a real-rooted
    /// polynomial, e.g. `x^2 - m`.
    pub(crate) fn from_real_rooted(coeffs: Vec<BigInt>) -> CharPoly {
        debug_assert!(coeffs.last().is_some_and(|c| c.is_one()));
        CharPoly { coeffs }
    }

    /// Ascending coefficients `c_0..c_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Multiplicity of the integer `r` as a root.
    pub fn integer_root_multiplicity(&self, r: i64) -> usize {
        let r = BigInt::from(r);
        let mut current = self.coeffs.clone();
        let mut mult = 0;
        while let Some(q) = divide_by_linear(&current, &r) {
            current = q;
            mult += 1;
        }
        mult
    }

    /// Multiplicity of `x^2 + b x + c` as a factor.
    pub fn quadratic_factor_multiplicity(&self, b: i64, c: i64) -> usize {
        let (b, c) = (BigInt::from(b), BigInt::from(c));
        let mut current = self.coeffs.clone();
        let mut mult = 0;
        while current.len() >= 3 {
            // long division by a monic quadratic
            let mut rem = current.clone();
            let d = rem.len() - 1;
            let mut quotient = vec![BigInt::zero(); d - 1];
            for k in (2..=d).rev() {
                let lead = rem[k].clone();
                quotient[k - 2] = lead.clone();
                rem[k - 1] -= &lead * &b;
                rem[k - 2] -= &lead * &c;
                rem[k] = BigInt::zero();
            }
            if !(rem[0].is_zero() && rem[1].is_zero()) {
                break;
            }
            current = quotient;
            mult += 1;
        }
        mult
    }

    /// Exact number of roots strictly greater than `num / den`, together with
    /// the multiplicity of `num / den` itself.
    ///
    /// Scales roots by `den`, shifts by `num`, and counts sign variations:
    /// Descartes' bound is exact for real-rooted polynomials.
    pub fn roots_above(&self, num: i64, den: u64) -> (usize, usize) {
        assert!(den > 0, "denominator must be positive");
        let n = self.degree();
        let den_big = BigInt::from(den);
        let mut scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * num_traits::pow(den_big.clone(), n - k))
            .collect();
        taylor_shift(&mut scaled, &BigInt::from(num));
        let zero_mult = scaled.iter().take_while(|c| c.is_zero()).count();
        let mut variations = 0;
        let mut last_sign: Option<bool> = None;
        for c in &scaled[zero_mult..] {
            if c.is_zero() {
                continue;
            }
            let positive = c.is_positive();
            if last_sign.is_some_and(|s| s != positive) {
                variations += 1;
            }
            last_sign = Some(positive);
        }
        (variations, zero_mult)
    }

    /// Exact number of roots `>= num / den`.
    pub fn roots_at_least(&self, num: i64, den: u64) -> usize {
        let (above, at) = self.roots_above(num, den);
        above + at
    }

    /// Floating-point evaluation by Horner's rule.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().expect("finite coefficient"))
    }

    /// `sum |c_k|` as a float.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, disjoint_union, empty, path};

    fn coeffs(p: &CharPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    /// Cofactor expansion of det(xI - A) with polynomial entries; exponential
    /// but independent of the recurrence.
    fn cofactor_char_poly(g: &crate::graph::Graph) -> Vec<i64> {
        fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
            let mut out = vec![0; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        fn poly_add(a: &mut Vec<i64>, b: &[i64], sign: i64) {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (i, y) in b.iter().enumerate() {
                a[i] += sign * y;
            }
        }
        fn det(m: &[Vec<Vec<i64>>]) -> Vec<i64> {
            let n = m.len();
            if n == 0 {
                return vec![1];
            }
            let mut acc = vec![0];
            for col in 0..n {
                let minor: Vec<Vec<Vec<i64>>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, e)| e.clone()).collect())
                    .collect();
                let term = poly_mul(&m[0][col], &det(&minor));
                poly_add(&mut acc, &term, if col % 2 == 0 { 1 } else { -1 });
            }
            acc
        }
        let n = g.order();
        let m: Vec<Vec<Vec<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { vec![0, 1] } else if g.has_edge(i, j) { vec![-1] } else { vec![0] })
                    .collect()
            })
            .collect();
        let mut p = det(&m);
        while p.len() > n + 1 && p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    #[test]
    fn small_known_polynomials() {
        assert_eq!(coeffs(&char_poly(&complete(3)).unwrap()), vec![-2, -3, 0, 1]);
        assert_eq!(coeffs(&char_poly(&path(3)).unwrap()), vec![0, -2, 0, 1]);
        assert_eq!(coeffs(&char_poly(&empty(0)).unwrap()), vec![1]);
        let c4k1 = disjoint_union(&cycle(4).unwrap(), &empty(1)).unwrap();
        let star = complete_multipartite(&[1, 4]).unwrap();
        assert_eq!(char_poly(&c4k1).unwrap(), char_poly(&star).unwrap());
        assert_eq!(coeffs(&char_poly(&star).unwrap()), vec![0, 0, 0, -4, 0, 1]);
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        let graphs = [
            cycle(5).unwrap(),
            complete_multipartite(&[1, 2, 3]).unwrap(),
            crate::graph::Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap(),
            path(6),
        ];
        for g in &graphs {
            assert_eq!(coeffs(&char_poly(g).unwrap()), cofactor_char_poly(g), "{g:?}");
        }
    }

    #[test]
    fn trace_coefficients() {
        let g = complete_multipartite(&[2, 3, 4]).unwrap();
        let p = char_poly(&g).unwrap();
        let n = g.order();
        assert!(p.coeffs()[n].is_one());
        assert!(p.coeffs()[n - 1].is_zero());
        assert_eq!(p.coeffs()[n - 2], BigInt::from(-(g.edge_count() as i64)));
    }

    #[test]
    fn big_integer_fallback_matches() {
        // K_20 has char poly (x - 19)(x + 1)^19, large enough to stress i128 sums
        let p = char_poly(&complete(20)).unwrap();
        assert_eq!(p.integer_root_multiplicity(-1), 19);
        assert_eq!(p.integer_root_multiplicity(19), 1);
        let a: Vec<i64> = (0..400).map(|k| if k / 20 == k % 20 { 0 } else { 1 }).collect();
        let big = char_poly_of_matrix(&a, 20);
        let forced = berkowitz::<BigInt>(&a, 20).unwrap();
        assert_eq!(big.coeffs().iter().rev().cloned().collect::<Vec<_>>(), forced);
        assert!(char_poly(&complete(21)).is_err());
    }

    #[test]
    fn root_multiplicities() {
        assert_eq!(char_poly(&complete(4)).unwrap().integer_root_multiplicity(-1), 3);
        let k23 = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(char_poly(&k23).unwrap().integer_root_multiplicity(0), 3);
        assert_eq!(char_poly(&path(3)).unwrap().integer_root_multiplicity(1), 0);
        assert_eq!(char_poly(&empty(4)).unwrap().integer_root_multiplicity(0), 4);
    }

    #[test]
    fn exact_root_counts() {
        // K_5: {4, -1 x4}
        let p = char_poly(&complete(5)).unwrap();
        assert_eq!(p.roots_above(-1, 1), (1, 4));
        assert_eq!(p.roots_at_least(0, 1), 1);
        assert_eq!(p.roots_at_least(-1, 1), 5);
        assert_eq!(p.roots_above(4, 1), (0, 1));
        // P_3: {sqrt 2, 0, -sqrt 2}; 1/3 and 3/2 are not roots
        let p = char_poly(&path(3)).unwrap();
        assert_eq!(p.roots_above(1, 3), (1, 0));
        assert_eq!(p.roots_above(3, 2), (0, 0));
        assert_eq!(p.roots_above(-3, 2), (3, 0));
    }

    #[test]
    fn quadratic_factors() {
        // P_3 = x (x^2 - 2)
        assert_eq!(char_poly(&path(3)).unwrap().quadratic_factor_multiplicity(0, -2), 1);
        let two_p3 = disjoint_union(&path(3), &path(3)).unwrap();
        assert_eq!(char_poly(&two_p3).unwrap().quadratic_factor_multiplicity(0, -2), 2);
        assert_eq!(char_poly(&path(3)).unwrap().quadratic_factor_multiplicity(2, -1), 0);
    }

    #[test]
    fn display() {
        assert_eq!(char_poly(&complete(3)).unwrap().to_string(), "x^3 - 3x - 2");
        assert_eq!(char_poly(&path(3)).unwrap().to_string(), "x^3 - 2x");
        assert_eq!(CharPoly::monomial(0).to_string(), "1");
    }
}
