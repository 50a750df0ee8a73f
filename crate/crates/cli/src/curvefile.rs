//! The `.curve` file format: line-oriented `key = hexvalue` pairs with `#`
//! comments, chosen so parsers stay trivial in any language and diffs stay
//! reviewable.
//!
//! Keys: `name` (bare token), `p`, `a`, `b` (required), `order`, `gx`,
//! `gy` (optional base point, both or neither), and the optional
//! Montgomery-form section `mont_a`, `mont_b`, `mont_gx` used by the
//! x-only baseline. All numbers are lowercase big-endian hex without
//! prefix; serialization reproduces the same shape, so parse-serialize-
//! parse is the identity.

use num_bigint::BigUint;

use ecfast::curve::{AffinePoint, CurveParams};
use ecfast::fp::{FieldElement, PrimeModulus};
use ecfast::montgomery::MontgomeryCurve;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFile {
    pub name: String,
    pub p: BigUint,
    pub a: BigUint,
    pub b: BigUint,
    pub order: Option<BigUint>,
    pub gx: Option<BigUint>,
    pub gy: Option<BigUint>,
    pub mont_a: Option<BigUint>,
    pub mont_b: Option<BigUint>,
    pub mont_gx: Option<BigUint>,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut fields: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(idx) => &raw[..idx],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if value.is_empty() {
                return Err(format!("line {}: empty value for `{key}`", lineno + 1));
            }
            if fields.iter().any(|(k, _)| *k == key) {
                return Err(format!("line {}: duplicate key `{key}`", lineno + 1));
            }
            fields.push((key, value));
        }
        let take = |key: &str| fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.clone());
        let hex = |key: &str| -> Result<Option<BigUint>, String> {
            match take(key) {
                None => Ok(None),
                Some(v) => BigUint::parse_bytes(v.as_bytes(), 16)
                    .map(Some)
                    .ok_or_else(|| format!("invalid hex for `{key}`: {v}")),
            }
        };
        for (key, _) in &fields {
            if !matches!(
                key.as_str(),
                "name" | "p" | "a" | "b" | "order" | "gx" | "gy" | "mont_a" | "mont_b" | "mont_gx"
            ) {
                return Err(format!("unknown key `{key}`"));
            }
        }
        let name = take("name").ok_or("missing required key `name`")?;
        let p = hex("p")?.ok_or("missing required key `p`")?;
        let a = hex("a")?.ok_or("missing required key `a`")?;
        let b = hex("b")?.ok_or("missing required key `b`")?;
        let gx = hex("gx")?;
        let gy = hex("gy")?;
        if gx.is_some() != gy.is_some() {
            return Err("gx and gy must be given together".into());
        }
        Ok(CurveFile {
            name,
            p,
            a,
            b,
            order: hex("order")?,
            gx,
            gy,
            mont_a: hex("mont_a")?,
            mont_b: hex("mont_b")?,
            mont_gx: hex("mont_gx")?,
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name = {}\n", self.name));
        out.push_str(&format!("p = {:x}\n", self.p));
        out.push_str(&format!("a = {:x}\n", self.a));
        out.push_str(&format!("b = {:x}\n", self.b));
        if let Some(v) = &self.order {
            out.push_str(&format!("order = {v:x}\n"));
        }
        if let (Some(x), Some(y)) = (&self.gx, &self.gy) {
            out.push_str(&format!("gx = {x:x}\n"));
            out.push_str(&format!("gy = {y:x}\n"));
        }
        if let Some(v) = &self.mont_a {
            out.push_str(&format!("mont_a = {v:x}\n"));
        }
        if let Some(v) = &self.mont_b {
            out.push_str(&format!("mont_b = {v:x}\n"));
        }
        if let Some(v) = &self.mont_gx {
            out.push_str(&format!("mont_gx = {v:x}\n"));
        }
        out
    }

    /// Semantic validation: prime modulus, nonsingular curve, Hasse-bound
    /// order, on-curve base point.
    pub fn to_curve(&self) -> Result<(CurveParams, Option<AffinePoint>), String> {
        let ctx = PrimeModulus::new(self.p.clone())
            .map_err(|e| format!("curve `{}`: {e}", self.name))?;
        let a = FieldElement::new(self.a.clone(), &ctx);
        let b = FieldElement::new(self.b.clone(), &ctx);
        let e = CurveParams::new(ctx.clone(), a, b, self.order.clone(), self.name.clone())
            .map_err(|e| format!("curve `{}`: {e}", self.name))?;
        let base = match (&self.gx, &self.gy) {
            (Some(x), Some(y)) => Some(
                AffinePoint::new(
                    FieldElement::new(x.clone(), &ctx),
                    FieldElement::new(y.clone(), &ctx),
                    &e,
                )
                .map_err(|err| format!("curve `{}` base point: {err}", self.name))?,
            ),
            _ => None,
        };
        Ok((e, base))
    }

    /// The optional Montgomery-form section, validated.
    pub fn to_montgomery(&self) -> Result<Option<(MontgomeryCurve, FieldElement)>, String> {
        let (ma, mb) = match (&self.mont_a, &self.mont_b) {
            (Some(a), Some(b)) => (a, b),
            (None, None) => return Ok(None),
            _ => return Err("mont_a and mont_b must be given together".into()),
        };
        let ctx = PrimeModulus::new(self.p.clone())
            .map_err(|e| format!("curve `{}`: {e}", self.name))?;
        let curve = MontgomeryCurve::new(
            ctx.clone(),
            FieldElement::new(ma.clone(), &ctx),
            FieldElement::new(mb.clone(), &ctx),
        )
        .map_err(|e| format!("curve `{}`: {e}", self.name))?;
        let base_x = FieldElement::new(
            self.mont_gx.clone().unwrap_or_else(|| BigUint::from(2u32)),
            &ctx,
        );
        Ok(Some((curve, base_x)))
    }
}
