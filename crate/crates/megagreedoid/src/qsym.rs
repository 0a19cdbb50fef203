//! Exact quasisymmetric-function arithmetic in the monomial (`M`) and
//! fundamental (`F`) bases.
//!
//! Basis elements are indexed by a pair `(S, n)` where `n` is the degree
//! and `S ⊆ {1, …, n−1}` is a set of positions:
//!
//! * `F_{S,n}` sums the monomials `x_{i_1} ⋯ x_{i_n}` over weakly
//!   increasing index words with a strict rise at exactly the positions
//!   required by `S` (strict at `j ∈ S`, weak elsewhere);
//! * `M_{S,n}` sums over words that are strict exactly at `S` and constant
//!   elsewhere, so `F_{S,n} = Σ_{T ⊇ S} M_{T,n}`.
//!
//! Elements are finite rational combinations; mixed degrees are allowed.
//! The degree-0 term `(∅, 0)` is the constant 1.

use crate::error::Error;
use crate::rational::{rat, Rational};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    M,
    F,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::M => 'M',
            Basis::F => 'F',
        }
    }
}

/// Key of one basis element: degree plus the position set encoded as a
/// bitmask (bit `p−1` ⇔ position `p` is in the set).
pub type TermKey = (usize, u16);

fn positions_of(mask: u16) -> Vec<usize> {
    (0..16).filter(|p| mask & (1 << p) != 0).map(|p| p + 1).collect()
}

pub fn position_mask<I: IntoIterator<Item = usize>>(positions: I) -> u16 {
    let mut mask = 0u16;
    for p in positions {
        assert!(p >= 1, "positions are 1-based");
        mask |= 1 << (p - 1);
    }
    mask
}

/// A formal rational combination of basis elements in one basis. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Eq)]
pub struct QsymElement {
    basis: Basis,
    terms: BTreeMap<TermKey, Rational>,
}

impl PartialEq for QsymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            return true;
        }
        self.basis == other.basis && self.terms == other.terms
    }
}

impl QsymElement {
    pub fn zero(basis: Basis) -> Self {
        QsymElement {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit (degree-0 term with coefficient one).
    pub fn one(basis: Basis) -> Self {
        let mut q = Self::zero(basis);
        q.add_term(0, 0, rat(1));
        q
    }

    pub fn term(basis: Basis, deg: usize, descents: u16, coeff: Rational) -> Result<Self, Error> {
        if deg > 16 || (deg == 0 && descents != 0) || (deg > 0 && descents >> (deg - 1) != 0) {
            return Err(Error::BadDocument {
                reason: format!("descent set out of range for degree {deg}"),
            });
        }
        let mut q = Self::zero(basis);
        q.add_term(deg, descents, coeff);
        Ok(q)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, deg: usize, descents: u16) -> Rational {
        self.terms
            .get(&(deg, descents))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Add `coeff · basis_{descents, deg}` in place.
    pub fn add_term(&mut self, deg: usize, descents: u16, coeff: Rational) {
        debug_assert!(deg == 0 || descents >> (deg - 1) == 0);
        debug_assert!(deg > 0 || descents == 0);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((deg, descents)).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(deg, descents));
        }
    }

    pub fn add(&self, other: &QsymElement) -> QsymElement {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (&(deg, des), coeff) in &other.terms {
            out.add_term(deg, des, coeff.clone());
        }
        out
    }

    pub fn negate(&self) -> QsymElement {
        let mut out = Self::zero(self.basis);
        for (&(deg, des), coeff) in &self.terms {
            out.add_term(deg, des, -coeff.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> QsymElement {
        let mut out = Self::zero(self.basis);
        for (&(deg, des), coeff) in &self.terms {
            out.add_term(deg, des, coeff * c);
        }
        out
    }

    /// Convert to the target basis. `F → M` expands each `F_{S,n}` as the
    /// sum of `M_{T,n}` over supersets `T ⊇ S` inside `[n−1]`; `M → F`
    /// inverts it by inclusion–exclusion.
    pub fn to_basis(&self, target: Basis) -> QsymElement {
        if self.basis == target {
            return self.clone();
        }
        let mut out = Self::zero(target);
        for (&(deg, des), coeff) in &self.terms {
            let universe = if deg == 0 { 0u16 } else { ((1u32 << (deg - 1)) - 1) as u16 };
            let free = universe & !des;
            // iterate supersets of `des` within the universe
            let mut extra = free;
            loop {
                let t = des | extra;
                match target {
                    Basis::M => out.add_term(deg, t, coeff.clone()),
                    Basis::F => {
                        let sign = if extra.count_ones() % 2 == 0 { 1 } else { -1 };
                        out.add_term(deg, t, coeff * rat(sign));
                    }
                }
                if extra == 0 {
                    break;
                }
                extra = (extra - 1) & free;
            }
        }
        out
    }

    /// Bilinear product. Internally this is the overlapping-shuffle product
    /// of compositions in the `M` basis; the result is converted back to
    /// the basis of `self`.
    pub fn multiply(&self, other: &QsymElement) -> QsymElement {
        let a = self.to_basis(Basis::M);
        let b = other.to_basis(Basis::M);
        let mut out = Self::zero(Basis::M);
        for (&ka, ca) in &a.terms {
            let comp_a = key_to_composition(ka);
            for (&kb, cb) in &b.terms {
                let comp_b = key_to_composition(kb);
                let coeff = ca * cb;
                let mut shuffles = Vec::new();
                let mut prefix = Vec::new();
                quasi_shuffle(&comp_a, &comp_b, &mut prefix, &mut shuffles);
                for comp in shuffles {
                    let (deg, des) = composition_to_key(&comp);
                    out.add_term(deg, des, coeff.clone());
                }
            }
        }
        out.to_basis(self.basis)
    }

    /// Number of monomials of this element in the variables `x_1, …, x_n`,
    /// evaluated as a polynomial in `n` (so negative arguments are allowed):
    /// an `F_{S,m}` term counts `C(n + m − 1 − |S|, m)` and an `M_{S,m}`
    /// term counts `C(n, |S|+1)`.
    pub fn count_specialize(&self, n: i64) -> Rational {
        let mut total = Rational::zero();
        for (&(deg, des), coeff) in &self.terms {
            let k = des.count_ones() as i64;
            let value = match (self.basis, deg) {
                (_, 0) => rat(1),
                (Basis::F, m) => falling_binomial(n + m as i64 - 1 - k, m),
                (Basis::M, _) => falling_binomial(n, des.count_ones() as usize + 1),
            };
            total += coeff * value;
        }
        total
    }

    /// The same specialization as an explicit polynomial in `n`.
    pub fn counting_polynomial(&self) -> CountingPolynomial {
        let mut total = CountingPolynomial::zero();
        for (&(deg, des), coeff) in &self.terms {
            let k = des.count_ones() as i64;
            let poly = match (self.basis, deg) {
                (_, 0) => CountingPolynomial::constant(rat(1)),
                (Basis::F, m) => binomial_polynomial(m as i64 - 1 - k, m),
                (Basis::M, _) => binomial_polynomial(0, des.count_ones() as usize + 1),
            };
            total = total.add(&poly.scale(coeff));
        }
        total
    }

    /// Deterministic rendering: terms sorted by degree then by the descent
    /// set as an ascending list (lexicographically); each term printed as
    /// `<coeff>*F[{s1,s2};n]` with exact rational coefficients.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&TermKey> = self.terms.keys().collect();
        keys.sort_by_key(|&&(deg, des)| (deg, positions_of(des)));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|&(deg, des)| {
                let coeff = &self.terms[&(deg, des)];
                let set = positions_of(des)
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{}*{}[{{{}}};{}]", coeff, self.basis.letter(), set, deg)
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for QsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// `(deg, descents)` to the composition of `deg` given by consecutive gaps
/// of `0 < s_1 < … < s_k < deg`.
fn key_to_composition((deg, des): TermKey) -> Vec<usize> {
    if deg == 0 {
        return Vec::new();
    }
    let mut parts = Vec::new();
    let mut last = 0usize;
    for p in positions_of(des) {
        parts.push(p - last);
        last = p;
    }
    parts.push(deg - last);
    parts
}

fn composition_to_key(comp: &[usize]) -> TermKey {
    let deg: usize = comp.iter().sum();
    let mut des = 0u16;
    let mut acc = 0usize;
    for &part in &comp[..comp.len().saturating_sub(1)] {
        acc += part;
        des |= 1 << (acc - 1);
    }
    (deg, des)
}

/// Overlapping shuffles of two compositions: at each step take the head of
/// `a`, the head of `b`, or merge the two heads.
fn quasi_shuffle(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    match (a.first(), b.first()) {
        (None, None) => out.push(prefix.clone()),
        (Some(&x), None) => {
            prefix.push(x);
            quasi_shuffle(&a[1..], b, prefix, out);
            prefix.pop();
        }
        (None, Some(&y)) => {
            prefix.push(y);
            quasi_shuffle(a, &b[1..], prefix, out);
            prefix.pop();
        }
        (Some(&x), Some(&y)) => {
            prefix.push(x);
            quasi_shuffle(&a[1..], b, prefix, out);
            prefix.pop();
            prefix.push(y);
            quasi_shuffle(a, &b[1..], prefix, out);
            prefix.pop();
            prefix.push(x + y);
            quasi_shuffle(&a[1..], &b[1..], prefix, out);
            prefix.pop();
        }
    }
}

/// `C(top, k) = top (top−1) ⋯ (top−k+1) / k!` over the rationals; valid for
/// negative `top`.
pub fn falling_binomial(top: i64, k: usize) -> Rational {
    let mut value = rat(1);
    for j in 0..k {
        value *= rat(top - j as i64);
        value /= rat(j as i64 + 1);
    }
    value
}

/// A univariate polynomial with rational coefficients, dense by ascending
/// degree with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingPolynomial {
    coeffs: Vec<Rational>,
}

impl CountingPolynomial {
    pub fn zero() -> Self {
        CountingPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = CountingPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &CountingPolynomial) -> CountingPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            let mut c = Rational::zero();
            if let Some(a) = self.coeffs.get(i) {
                c += a;
            }
            if let Some(b) = other.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        let mut p = CountingPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &Rational) -> CountingPolynomial {
        let mut p = CountingPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        };
        p.trim();
        p
    }

    /// Multiply by the linear factor `(x + shift)`.
    fn mul_linear(&self, shift: &Rational) -> CountingPolynomial {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += a;
            coeffs[i] += a * shift;
        }
        let mut p = CountingPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn eval(&self, x: i64) -> Rational {
        let xr = rat(x);
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xr + c;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for CountingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "n")?,
                1 => write!(f, "{c}*n")?,
                _ if c.is_one() => write!(f, "n^{k}")?,
                _ => write!(f, "{c}*n^{k}")?,
            }
        }
        Ok(())
    }
}

/// `C(x + shift, k)` as a polynomial in `x`.
fn binomial_polynomial(shift: i64, k: usize) -> CountingPolynomial {
    let mut p = CountingPolynomial::constant(rat(1));
    for j in 0..k {
        p = p.mul_linear(&rat(shift - j as i64));
    }
    let mut factorial = rat(1);
    for j in 1..=k {
        factorial *= rat(j as i64);
    }
    p.scale(&(rat(1) / factorial))
}
