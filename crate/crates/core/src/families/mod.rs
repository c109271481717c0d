//! Parametric families with closed-form values of `I(K)` and `i(K)`, and
//! a verifier comparing them with the exact engine.

mod verify;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::integer::{factorize, is_squarefree, free_of_odd_squares, vp};
use crate::arith::IntPoly;
use crate::error::{Error, Result};
use crate::nf::is_irreducible;

pub use verify::{param_grid, verify_family, VerificationReport, VerificationRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `x^2 - m`
    Quadratic,
    /// `x^3 - a x + b`, two parameters
    Cubic,
    /// `x^3 - d`
    PureCubic,
    SimplestCubic,
    SimplestQuartic,
    LehmerQuintic,
    SimplestSextic,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Quadratic,
        Family::Cubic,
        Family::PureCubic,
        Family::SimplestCubic,
        Family::SimplestQuartic,
        Family::LehmerQuintic,
        Family::SimplestSextic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Quadratic => "quadratic",
            Family::Cubic => "cubic",
            Family::PureCubic => "pure_cubic",
            Family::SimplestCubic => "simplest_cubic",
            Family::SimplestQuartic => "simplest_quartic",
            Family::LehmerQuintic => "lehmer_quintic",
            Family::SimplestSextic => "simplest_sextic",
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Family::Quadratic => 2,
            Family::Cubic | Family::PureCubic | Family::SimplestCubic => 3,
            Family::SimplestQuartic => 4,
            Family::LehmerQuintic => 5,
            Family::SimplestSextic => 6,
        }
    }

    /// Number of integer parameters.
    pub fn arity(self) -> usize {
        if self == Family::Cubic {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Predicted invariants for one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPrediction {
    pub family: Family,
    pub param: Vec<BigInt>,
    /// `None` when the formula says nothing about `I(K)`.
    pub index_pred: Option<BigInt>,
    /// Allowed values of `i(K)`, ascending.
    pub i_pred: Vec<BigInt>,
}

impl FamilyPrediction {
    fn new(family: Family, param: Vec<BigInt>, index_pred: Option<i64>, i_pred: &[i64]) -> Self {
        let mut i_pred: Vec<BigInt> = i_pred.iter().map(|&x| BigInt::from(x)).collect();
        i_pred.sort();
        i_pred.dedup();
        FamilyPrediction { family, param, index_pred: index_pred.map(BigInt::from), i_pred }
    }

    pub fn admits(&self, index: &BigInt, i: &BigInt) -> bool {
        self.index_pred.as_ref().map_or(true, |x| x == index) && self.i_pred.contains(i)
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn residue(m: &BigInt, modulus: i64) -> i64 {
    i64::try_from(m.mod_floor(&big(modulus))).expect("small residue")
}

fn cubic_poly(a: &BigInt, b: &BigInt) -> IntPoly {
    IntPoly::new(vec![b.clone(), -a, BigInt::zero(), BigInt::one()])
}

/// `x^3 - a x + b` with its discriminant data at 2 and 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    pub a: BigInt,
    pub b: BigInt,
    /// `4 a^3 - 27 b^2`
    pub delta: BigInt,
    pub s2: u32,
    pub delta2: BigInt,
    pub s3: u32,
    pub delta3: BigInt,
}

impl CubicForm {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        let delta = BigInt::from(4) * &a * &a * &a - BigInt::from(27) * &b * &b;
        if delta.is_zero() {
            return Err(Error::NotAField(format!("x^3 - ({a})x + ({b}) has a repeated root")));
        }
        let s2 = vp(&delta, 2);
        let s3 = vp(&delta, 3);
        let delta2 = &delta / BigInt::from(2).pow(s2);
        let delta3 = &delta / BigInt::from(3).pow(s3);
        Ok(CubicForm { a, b, delta, s2, delta2, s3, delta3 })
    }

    pub fn polynomial(&self) -> IntPoly {
        cubic_poly(&self.a, &self.b)
    }

    /// No prime has `p^2 | a` and `p^3 | b`.
    pub fn is_reduced(&self) -> bool {
        common_reducing_prime(&self.a, &self.b).is_none()
    }
}

fn common_reducing_prime(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let g = a.gcd(b);
    factorize(&g)
        .into_iter()
        .map(|(p, _)| BigInt::from(p))
        .find(|p| (a % (p * p)).is_zero() && (b % (p * p * p)).is_zero())
}

/// Divides `(a, b)` by `(p^2, p^3)` until no prime allows it.
pub fn cubic_reduce(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    if !is_irreducible(&cubic_poly(a, b))? {
        return Err(Error::NotAField(format!("x^3 - ({a})x + ({b}) is reducible")));
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    while let Some(p) = common_reducing_prime(&a, &b) {
        a /= &p * &p;
        b /= &p * &p * &p;
    }
    Ok((a, b))
}

pub fn cubic_predict(a: &BigInt, b: &BigInt) -> Result<FamilyPrediction> {
    let form = CubicForm::new(a.clone(), b.clone())?;
    if !form.is_reduced() {
        return Err(Error::NotReduced(a.to_string(), b.to_string()));
    }
    let (va, vb) = (vp(a, 2), vp(b, 2));
    let alpha = (va == 1 && va < vb) || residue(a, 2) != residue(b, 2);
    let beta = (residue(a, 9) == 3
        && residue(&(b * b), 27) == residue(&(a + 1), 27)
        && form.s3 > 6
        && form.s3 % 2 == 0
        && residue(&form.delta3, 3) == 1)
        || (residue(a, 3) == 1 && residue(b, 3) == 0);
    let index = residue(a, 2) == 1
        && residue(b, 2) == 0
        && form.s2 % 2 == 0
        && residue(&form.delta2, 8) == 1;
    let i = (if alpha { 2 } else { 1 }) * (if beta { 3 } else { 1 });
    Ok(FamilyPrediction::new(
        Family::Cubic,
        vec![a.clone(), b.clone()],
        Some(if index { 2 } else { 1 }),
        &[i],
    ))
}

fn cube_free(d: &BigInt) -> bool {
    factorize(d).iter().all(|(_, e)| *e < 3)
}

pub fn pure_cubic_predict(d: &BigInt) -> Result<FamilyPrediction> {
    if d.abs() <= BigInt::one() || !cube_free(d) {
        return Err(Error::NotAField(format!("x^3 - ({d}) needs cube-free |d| > 1")));
    }
    let i = if d.is_odd() { 2 } else { 1 };
    Ok(FamilyPrediction::new(Family::PureCubic, vec![d.clone()], None, &[i]))
}

fn is_special_mod_243(m: &BigInt) -> bool {
    matches!(residue(m, 243), 39 | 120 | 201)
}

pub fn simplest_cubic_predict(m: &BigInt) -> Result<FamilyPrediction> {
    let i = if is_special_mod_243(m) { 3 } else { 1 };
    Ok(FamilyPrediction::new(Family::SimplestCubic, vec![m.clone()], Some(1), &[i]))
}

pub fn simplest_quartic_predict(m: &BigInt) -> Result<FamilyPrediction> {
    let m0 = m.abs();
    if m0.is_zero() || m0 == big(3) {
        return Err(Error::NotApplicable(format!("m = {m} is excluded")));
    }
    if !free_of_odd_squares(&(&m0 * &m0 + 16)) {
        return Err(Error::NotApplicable(format!("m^2 + 16 has an odd square factor at m = {m}")));
    }
    let index = if m0.is_odd() { 2 } else { 1 };
    let v2 = vp(&m0, 2);
    let i = if (1..=3).contains(&v2) { 1 } else { 4 };
    Ok(FamilyPrediction::new(Family::SimplestQuartic, vec![m.clone()], Some(index), &[i]))
}

/// `m^4 + 5m^3 + 15m^2 + 25m + 25`
pub fn lehmer_conductor_value(m: &BigInt) -> BigInt {
    let m2 = m * m;
    &m2 * &m2 + 5 * &m2 * m + 15 * &m2 + 25 * m + 25
}

pub fn lehmer_quintic_predict(m: &BigInt) -> Result<FamilyPrediction> {
    let c = lehmer_conductor_value(m);
    if let Some((p, _)) = factorize(&c).into_iter().find(|(p, e)| *e >= 2 && *p != 5u32.into()) {
        return Err(Error::NotApplicable(format!("{p}^2 divides {c} at m = {m}")));
    }
    let i = if residue(m, 5) == 2 { 5 } else { 1 };
    Ok(FamilyPrediction::new(Family::LehmerQuintic, vec![m.clone()], Some(1), &[i]))
}

/// Allowed `v_2(i(K))` for the sextic family.
pub fn sextic_alpha_set(m: &BigInt) -> Vec<u32> {
    let r8 = residue(m, 8);
    let r24 = residue(m, 24);
    let third = residue(m, 3) != 0;
    if ((r8 == 0 || r8 == 5) && third) || r24 == 0 || r24 == 21 {
        vec![3, 4]
    } else {
        vec![0]
    }
}

pub fn simplest_sextic_predict(m: &BigInt) -> Result<FamilyPrediction> {
    if [-8, -5, -3, 0].iter().any(|&x| *m == big(x)) {
        return Err(Error::NotApplicable(format!("m = {m} is excluded")));
    }
    let beta = if is_special_mod_243(m) { 2 } else { 0 };
    let i: Vec<i64> = sextic_alpha_set(m).iter().map(|&a| (1i64 << a) * 3i64.pow(beta)).collect();
    Ok(FamilyPrediction::new(Family::SimplestSextic, vec![m.clone()], Some(1), &i))
}

pub fn quadratic_predict(m: &BigInt) -> Result<FamilyPrediction> {
    if m.is_zero() || m.is_one() || !is_squarefree(m) {
        return Err(Error::NotApplicable(format!("m = {m} is not a squarefree integer other than 0, 1")));
    }
    let i = if residue(m, 8) == 1 { 2 } else { 1 };
    Ok(FamilyPrediction::new(Family::Quadratic, vec![m.clone()], Some(1), &[i]))
}

/// Prediction for a family member; `param` has `family.arity()` entries.
pub fn predict(family: Family, param: &[BigInt]) -> Result<FamilyPrediction> {
    check_arity(family, param)?;
    match family {
        Family::Quadratic => quadratic_predict(&param[0]),
        Family::Cubic => cubic_predict(&param[0], &param[1]),
        Family::PureCubic => pure_cubic_predict(&param[0]),
        Family::SimplestCubic => simplest_cubic_predict(&param[0]),
        Family::SimplestQuartic => simplest_quartic_predict(&param[0]),
        Family::LehmerQuintic => lehmer_quintic_predict(&param[0]),
        Family::SimplestSextic => simplest_sextic_predict(&param[0]),
    }
}

fn check_arity(family: Family, param: &[BigInt]) -> Result<()> {
    if param.len() != family.arity() {
        return Err(Error::InvalidInput(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            param.len()
        )));
    }
    Ok(())
}

fn poly(coeffs: Vec<BigInt>) -> IntPoly {
    IntPoly::new(coeffs)
}

/// Defining polynomial of a family member.
pub fn family_polynomial(family: Family, param: &[BigInt]) -> Result<IntPoly> {
    check_arity(family, param)?;
    let m = &param[0];
    let one = || BigInt::one();
    Ok(match family {
        Family::Quadratic => poly(vec![-m, BigInt::zero(), one()]),
        Family::Cubic => cubic_poly(&param[0], &param[1]),
        Family::PureCubic => poly(vec![-m, BigInt::zero(), BigInt::zero(), one()]),
        Family::SimplestCubic => poly(vec![-one(), -(m + 3i32), -m, one()]),
        Family::SimplestQuartic => poly(vec![one(), m.clone(), big(-6), -m, one()]),
        Family::LehmerQuintic => {
            let m2 = m * m;
            let m3 = &m2 * m;
            let m4 = &m2 * &m2;
            let c3: BigInt = 2 * &m3 + 6 * &m2 + 10 * m + 10;
            poly(vec![
                one(),
                &m3 + 4 * &m2 + 10 * m + 10,
                &m4 + 5 * &m3 + 11 * &m2 + 15 * m + 5,
                -c3,
                m2.clone(),
                one(),
            ])
        }
        Family::SimplestSextic => {
            let m2: BigInt = 2 * m;
            let m5: BigInt = 5 * m;
            poly(vec![one(), &m2 + 6, m5.clone(), big(-20), -m5 - 15, -m2, one()])
        }
    })
}
