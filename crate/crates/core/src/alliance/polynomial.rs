use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Number, Value};

use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// `A(G; x) = sum_k A_k x^(n + k)` with exact non-negative counts `A_k`.
///
/// Coefficients are keyed by the alliance index `k`; zero counts are never
/// stored. Equality compares the order and the full coefficient map, so two
/// polynomials of different order are distinct even when their coefficient
/// lists coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlliancePolynomial {
    order: usize,
    coeffs: BTreeMap<i64, BigUint>,
}

impl AlliancePolynomial {
    /// Validates the key range `-n < k <= n - 1` and drops zero counts.
    pub fn new(order: usize, coeffs: BTreeMap<i64, BigUint>) -> Result<Self> {
        let n = order as i64;
        let mut kept = BTreeMap::new();
        for (k, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            if k <= -n || k > n - 1 {
                return Err(Error::Polynomial(format!(
                    "alliance index {k} outside (-{n}, {}] for order {n}",
                    n - 1
                )));
            }
            kept.insert(k, c);
        }
        Ok(AlliancePolynomial {
            order,
            coeffs: kept,
        })
    }

    /// Builds from counts keyed by exponent `n + k`.
    pub fn from_exponents(order: usize, terms: BTreeMap<usize, BigUint>) -> Result<Self> {
        let n = order as i64;
        Self::new(
            order,
            terms.into_iter().map(|(e, c)| (e as i64 - n, c)).collect(),
        )
    }

    /// Reads a polynomial in `x`; negative coefficients are rejected.
    pub fn from_int_polynomial(order: usize, p: &IntPolynomial) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in p.coefficients().iter().enumerate() {
            if c.is_negative() {
                return Err(Error::Polynomial(format!(
                    "negative coefficient {c} at x^{e}"
                )));
            }
            if !c.is_zero() {
                terms.insert(e, c.magnitude().clone());
            }
        }
        Self::from_exponents(order, terms)
    }

    pub fn to_int_polynomial(&self) -> IntPolynomial {
        let len = self.max_exponent().map_or(0, |e| e + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (e, c) in self.terms() {
            coeffs[e] = BigInt::from(c.clone());
        }
        IntPolynomial::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &BTreeMap<i64, BigUint> {
        &self.coeffs
    }

    /// `A_k`, zero when absent.
    pub fn coefficient(&self, k: i64) -> BigUint {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// `(exponent, count)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        let n = self.order as i64;
        self.coeffs.iter().map(move |(&k, c)| ((n + k) as usize, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<usize> {
        self.terms().next().map(|(e, _)| e)
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.coeffs
            .keys()
            .next_back()
            .map(|&k| (self.order as i64 + k) as usize)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.terms().fold(BigRational::zero(), |acc, (e, c)| {
            acc + BigRational::from_integer(BigInt::from(c.clone())) * pow_rational(x, e)
        })
    }

    /// `A(G; 1)`: the number of vertex sets inducing a nonempty connected
    /// subgraph.
    pub fn connected_count(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// `2^n - 1 - A(G; 1)`: the number of cut vertex sets.
    pub fn cut_set_count(&self) -> BigInt {
        let all = (BigInt::one() << self.order) - 1;
        all - BigInt::from(self.connected_count())
    }

    /// `sum_{i >= k} A_i`: connected defensive `k`-alliances.
    pub fn defensive_alliance_count(&self, k: i64) -> BigUint {
        self.coeffs.range(k..).map(|(_, c)| c).sum()
    }

    /// Unimodality of the nonzero coefficients taken in exponent order.
    pub fn is_unimodal(&self) -> bool {
        let seq: Vec<&BigUint> = self.coeffs.values().collect();
        let mut i = 1;
        while i < seq.len() && seq[i - 1] <= seq[i] {
            i += 1;
        }
        while i < seq.len() && seq[i - 1] >= seq[i] {
            i += 1;
        }
        i >= seq.len()
    }

    /// All exponents with nonzero coefficient share one parity.
    pub fn is_parity_symmetric(&self) -> bool {
        let mut parities = self.terms().map(|(e, _)| e % 2);
        match parities.next() {
            None => true,
            Some(first) => parities.all(|p| p == first),
        }
    }

    /// `{"n": n, "coeffs": {"k": count, ...}}` with keys in increasing `k`.
    pub fn to_json_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("n".into(), Value::from(self.order as u64));
        obj.insert("coeffs".into(), Value::Object(self.coeff_map_json()));
        Value::Object(obj)
    }

    /// The bare `{"k": count}` map.
    pub fn coeff_map_json(&self) -> Map<String, Value> {
        self.coeffs
            .iter()
            .map(|(k, c)| (k.to_string(), Value::Number(big_number(c))))
            .collect()
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Polynomial(m.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected a JSON object"))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing or invalid \"n\""))?;
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing or invalid \"coeffs\""))?;
        Self::from_coeff_map_json(n as usize, coeffs)
    }

    pub fn from_coeff_map_json(order: usize, coeffs: &Map<String, Value>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (key, value) in coeffs {
            let k: i64 = key
                .parse()
                .map_err(|_| Error::Polynomial(format!("bad alliance index {key:?}")))?;
            let count = match value {
                Value::Number(num) => num.to_string().parse::<BigUint>().ok(),
                _ => None,
            }
            .ok_or_else(|| Error::Polynomial(format!("bad count for index {key}")))?;
            map.insert(k, count);
        }
        Self::new(order, map)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::Polynomial(format!("json: {e}")))?;
        Self::from_json_value(&v)
    }
}

fn big_number(c: &BigUint) -> Number {
    match c.to_u64() {
        Some(small) => Number::from(small),
        None => c
            .to_string()
            .parse()
            .expect("decimal integer is a JSON number"),
    }
}

fn pow_rational(x: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for AlliancePolynomial {
    /// Increasing exponents joined by `" + "`, unit coefficients omitted:
    /// `6x^3 + 33x^5 + 15x^7 + x^9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if !c.is_one() || e == 0 {
                write!(f, "{c}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(order: usize, terms: &[(i64, u64)]) -> AlliancePolynomial {
        AlliancePolynomial::new(
            order,
            terms.iter().map(|&(k, c)| (k, BigUint::from(c))).collect(),
        )
        .unwrap()
    }

    fn k33() -> AlliancePolynomial {
        poly(6, &[(-3, 6), (-1, 33), (1, 15), (3, 1)])
    }

    #[test]
    fn rendering() {
        assert_eq!(k33().to_string(), "6x^3 + 33x^5 + 15x^7 + x^9");
        assert_eq!(poly(2, &[(-1, 2), (1, 1)]).to_string(), "2x + x^3");
        assert_eq!(poly(1, &[(0, 1)]).to_string(), "x");
    }

    #[test]
    fn evaluations() {
        let p = k33();
        assert_eq!(p.connected_count(), BigUint::from(55u32));
        assert_eq!(p.cut_set_count(), BigInt::from(8));
        assert_eq!(
            p.evaluate(&BigRational::one()),
            BigRational::from_integer(55.into())
        );
        let half = BigRational::new(1.into(), 2.into());
        // 6/8 + 33/32 + 15/128 + 1/512
        let expect = BigRational::new((384 + 528 + 60 + 1).into(), 512.into());
        assert_eq!(p.evaluate(&half), expect);
        assert_eq!(p.defensive_alliance_count(1), BigUint::from(16u32));
        assert_eq!(p.defensive_alliance_count(-3), p.connected_count());
        assert_eq!(p.defensive_alliance_count(4), BigUint::zero());
    }

    #[test]
    fn key_range_and_zero_counts() {
        assert!(AlliancePolynomial::new(2, [(-2, BigUint::one())].into()).is_err());
        assert!(AlliancePolynomial::new(2, [(2, BigUint::one())].into()).is_err());
        let p = AlliancePolynomial::new(2, [(0, BigUint::zero())].into()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn order_is_part_of_equality() {
        assert_ne!(poly(3, &[(0, 1)]), poly(4, &[(0, 1)]));
    }

    #[test]
    fn shape_predicates() {
        // (n-2)x^(n-2) + 2x^(n-1) + ... for n = 5: 3, 2, 9, 1
        assert!(!poly(5, &[(-2, 3), (-1, 2), (0, 9), (1, 1)]).is_unimodal());
        assert!(poly(6, &[(-2, 6), (0, 24), (2, 1)]).is_unimodal());
        assert!(poly(3, &[(-1, 1)]).is_unimodal());
        assert!(k33().is_parity_symmetric());
        assert!(!poly(3, &[(-2, 1), (-1, 2)]).is_parity_symmetric());
    }

    #[test]
    fn json_shape() {
        let p = poly(2, &[(-1, 2), (1, 1)]);
        assert_eq!(p.to_json_string(), r#"{"n":2,"coeffs":{"-1":2,"1":1}}"#);
        assert_eq!(
            AlliancePolynomial::from_json_str(&p.to_json_string()).unwrap(),
            p
        );
        assert!(AlliancePolynomial::from_json_str(r#"{"n":2,"coeffs":{"-1":-2}}"#).is_err());
        assert!(AlliancePolynomial::from_json_str(r#"{"n":2}"#).is_err());
    }

    #[test]
    fn json_big_counts() {
        let big = BigUint::one() << 80usize;
        let p = AlliancePolynomial::new(100, [(0, big.clone())].into()).unwrap();
        let back = AlliancePolynomial::from_json_str(&p.to_json_string()).unwrap();
        assert_eq!(back.coefficient(0), big);
    }
}
