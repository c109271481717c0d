//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with ascending integer coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &BigInt) -> Self {
        let step = IntPoly::new(vec![c.clone(), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, a| &(&acc * &step) + &IntPoly::constant(a.clone()))
    }

    /// `(-1)^deg f(-x)`, monic when `f` is.
    pub fn negate_variable(&self) -> Self {
        let n = self.coeffs.len();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if (n - 1 - k) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero(), "pseudo_rem by zero polynomial");
        let db = b.deg();
        let lb = b.lead();
        let mut r = self.clone();
        let mut e = (self.deg() - db + 1).max(0);
        while !r.is_zero() && r.deg() >= db {
            let shift = (r.deg() - db) as usize;
            let lr = r.lead();
            let t = IntPoly::monomial(lr, shift);
            r = &r.scale(&lb) - &(&t * b);
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&num_traits::pow::pow(lb, e as usize));
        }
        r
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, b: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(b.is_monic(), "divisor must be monic");
        let db = b.deg();
        let mut r = self.coeffs.clone();
        if self.deg() < db {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); (self.deg() - db + 1) as usize];
        for k in (0..q.len()).rev() {
            let c = r[k + db as usize].clone();
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &c * bc;
            }
            q[k] = c;
        }
        (IntPoly::new(q), IntPoly::new(r))
    }

    pub fn rem_monic(&self, b: &IntPoly) -> IntPoly {
        self.div_rem_monic(b).1
    }

    /// Coefficients reduced to the symmetric range `(-m/2, m/2]`.
    pub(crate) fn symmetric_mod(&self, m: &BigInt) -> IntPoly {
        let half = m / 2;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub(crate) fn mod_floor(&self, m: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub(crate) fn norm1(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `res(f, g) = lc(f)^deg g * prod g(a)` over the roots `a` of `f`,
/// by the subresultant pseudo-remainder sequence.
pub fn poly_resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("resultant of the zero polynomial".into()));
    }
    let (df, dg) = (f.deg() as usize, g.deg() as usize);
    if df == 0 {
        return Ok(num_traits::pow::pow(f.lead(), dg));
    }
    if dg == 0 {
        return Ok(num_traits::pow::pow(g.lead(), df));
    }

    let ca = f.content();
    let cb = g.content();
    let mut a = f.div_scalar(&ca);
    let mut b = g.div_scalar(&cb);
    let t = num_traits::pow::pow(ca, dg) * num_traits::pow::pow(cb, df);
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.deg() - b.deg()) as usize;
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &gg * num_traits::pow::pow(h.clone(), delta);
        b = r.div_scalar(&divisor);
        gg = a.lead();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => num_traits::pow::pow(gg.clone(), delta) / num_traits::pow::pow(h, delta - 1),
        };
        if b.deg() <= 0 {
            break;
        }
    }
    if b.is_zero() {
        return Ok(BigInt::zero());
    }
    let da = a.deg() as usize;
    let hfin = num_traits::pow::pow(b.lead(), da) / num_traits::pow::pow(h, da - 1);
    Ok(s * t * hfin)
}

/// `disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::InvalidDegree("discriminant needs degree >= 1".into())),
    };
    if n == 1 {
        return Ok(BigInt::one());
    }
    let r = poly_resultant(f, &f.derivative())?;
    let d = r / f.lead();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Accepts `[c0,c1,...,cn]` or symbolic text such as `x^3 - 13*x + 4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated list `{s}`")))?;
            if inner.trim().is_empty() {
                return Ok(IntPoly::zero());
            }
            let coeffs = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(IntPoly::new(coeffs));
        }
        parse_symbolic(s)
    }
}

fn parse_symbolic(s: &str) -> Result<IntPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let compact = compact.replace("**", "^");
    let bytes = compact.as_bytes();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i != 0 {
            return Err(Error::Parse(format!("expected sign at offset {i} in `{s}`")));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef = if i > start {
            compact[start..i].parse::<BigInt>().expect("digits")
        } else {
            BigInt::one()
        };
        let mut power = 0usize;
        let had_digits = i > start;
        if i < bytes.len() && bytes[i] == b'*' {
            if !had_digits {
                return Err(Error::Parse(format!("dangling `*` in `{s}`")));
            }
            i += 1;
            if i >= bytes.len() || bytes[i] != b'x' {
                return Err(Error::Parse(format!("expected `x` after `*` in `{s}`")));
            }
        }
        if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let ps = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ps == i {
                    return Err(Error::Parse(format!("missing exponent in `{s}`")));
                }
                power = compact[ps..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            }
        } else if !had_digits {
            return Err(Error::Parse(format!("unexpected input at offset {start} in `{s}`")));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        coeffs[power] += sign * coef;
        if i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            return Err(Error::Parse(format!("unexpected `{}` in `{s}`", bytes[i] as char)));
        }
    }
    Ok(IntPoly::new(coeffs))
}
