//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles here deliberately avoid the library's arithmetic: they work
//! over plain `u64`/`i64` integers with Fermat inversion, so agreement with
//! the library is a genuine two-route check.

#![allow(dead_code)]

use num_bigint::BigUint;

use ecfast::curve::{AffinePoint, CurveParams};
use ecfast::fp::{FieldElement, PrimeModulus};

/// y^2 = x^3 + 2x + 2 over F_17: order 19, generator (5, 1).
pub fn tiny17() -> CurveParams {
    let ctx = PrimeModulus::new(BigUint::from(17u32)).unwrap();
    CurveParams::new(
        ctx.clone(),
        FieldElement::from_u64(2, &ctx),
        FieldElement::from_u64(2, &ctx),
        Some(BigUint::from(19u32)),
        "tiny17",
    )
    .unwrap()
}

/// y^2 = x^3 + x + 8 over F_53: group order exactly 61 (prime, so every
/// finite point generates). Generator (1, 13).
pub fn order61() -> CurveParams {
    let ctx = PrimeModulus::new(BigUint::from(53u32)).unwrap();
    CurveParams::new(
        ctx.clone(),
        FieldElement::from_u64(1, &ctx),
        FieldElement::from_u64(8, &ctx),
        Some(BigUint::from(61u32)),
        "toy61",
    )
    .unwrap()
}

/// y^2 = x^3 + x + 1 over F_643: order 678 = 2 * 3 * 113, cyclic with
/// generator (7, 173). Carries two-torsion (130, 0) and three-torsion
/// (609, 23), which exercise every degenerate-chain path.
pub fn torsion643() -> CurveParams {
    let ctx = PrimeModulus::new(BigUint::from(643u32)).unwrap();
    CurveParams::new(
        ctx.clone(),
        FieldElement::from_u64(1, &ctx),
        FieldElement::from_u64(1, &ctx),
        Some(BigUint::from(678u32)),
        "t643",
    )
    .unwrap()
}

pub fn generator(e: &CurveParams) -> AffinePoint {
    let (x, y) = match e.name() {
        "tiny17" => (5u64, 1u64),
        "toy61" => (1, 13),
        "t643" => (7, 173),
        other => panic!("no generator fixture for {other}"),
    };
    point(e, x, y)
}

pub fn point(e: &CurveParams, x: u64, y: u64) -> AffinePoint {
    AffinePoint::new(
        FieldElement::from_u64(x, e.ctx()),
        FieldElement::from_u64(y, e.ctx()),
        e,
    )
    .unwrap()
}

pub const P521_P: &str = "1ffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff";
pub const P521_A: &str = "1fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffc";
pub const P521_B: &str = "51953eb9618e1c9a1f929a21a0b68540eea2da725b99b315f3b8b489918ef109e156193951ec7e937b1652c0bd3bb1bf073573df883d2c34f1ef451fd46b503f00";
pub const P521_ORDER: &str = "1fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffa51868783bf2f966b7fcc0148f709a5d03bb5c9b8899c47aebb6fb71e91386409";
pub const P521_GX: &str = "c6858e06b70404e9cd9e3ecb662395b4429c648139053fb521f828af606b4d3dbaa14b5e77efe75928fe1dc127a2ffa8de3348b3c1856a429bf97e7e31c2e5bd66";
pub const P521_GY: &str = "11839296a789a3bc0045c8a5fb42c7d1bd998f54449579b446817afbd17273e662c97ee72995ef42640c550b9013fad0761353c7086a272c24088be94769fd16650";

fn hex(s: &str) -> BigUint {
    BigUint::parse_bytes(s.as_bytes(), 16).unwrap()
}

/// NIST P-521 with its published order and base point.
pub fn p521() -> (CurveParams, AffinePoint) {
    let ctx = PrimeModulus::new(hex(P521_P)).unwrap();
    let e = CurveParams::new(
        ctx.clone(),
        FieldElement::new(hex(P521_A), &ctx),
        FieldElement::new(hex(P521_B), &ctx),
        Some(hex(P521_ORDER)),
        "p521",
    )
    .unwrap();
    let g = AffinePoint::new(
        FieldElement::new(hex(P521_GX), &ctx),
        FieldElement::new(hex(P521_GY), &ctx),
        &e,
    )
    .unwrap();
    (e, g)
}

// ---------------------------------------------------------------------
// Independent u64 short-Weierstrass oracle.
// ---------------------------------------------------------------------

pub type OraclePoint = Option<(u64, u64)>; // None = infinity

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat, distinct from the library's binary Euclid
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

pub fn oracle_add(p: OraclePoint, q: OraclePoint, a: u64, modulus: u64) -> OraclePoint {
    let (x1, y1) = match p {
        None => return q,
        Some(v) => v,
    };
    let (x2, y2) = match q {
        None => return p,
        Some(v) => v,
    };
    if x1 == x2 && (y1 + y2) % modulus == 0 {
        return None;
    }
    let lambda = if x1 == x2 {
        if y1 == 0 {
            return None;
        }
        (3 * x1 % modulus * x1 % modulus + a) % modulus * inv_mod(2 * y1 % modulus, modulus)
            % modulus
    } else {
        let dy = (y2 + modulus - y1) % modulus;
        let dx = (x2 + modulus - x1) % modulus;
        dy * inv_mod(dx, modulus) % modulus
    };
    let x3 = (lambda * lambda % modulus + 2 * modulus - x1 - x2) % modulus;
    let y3 = (lambda * ((x1 + modulus - x3) % modulus) % modulus + modulus - y1) % modulus;
    Some((x3, y3))
}

pub fn oracle_mul(k: u64, p: OraclePoint, a: u64, modulus: u64) -> OraclePoint {
    let mut acc = None;
    let mut base = p;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = oracle_add(acc, base, a, modulus);
        }
        base = oracle_add(base, base, a, modulus);
        k >>= 1;
    }
    acc
}

/// All finite points of a small curve, by exhaustive enumeration.
pub fn oracle_enumerate(a: u64, b: u64, modulus: u64) -> Vec<(u64, u64)> {
    let mut points = Vec::new();
    for x in 0..modulus {
        let rhs = (x * x % modulus * x % modulus + a * x % modulus + b) % modulus;
        for y in 0..modulus {
            if y * y % modulus == rhs {
                points.push((x, y));
            }
        }
    }
    points
}

/// Library point -> oracle point (requires a small modulus).
pub fn to_oracle(p: &AffinePoint) -> OraclePoint {
    match p {
        AffinePoint::Infinity => None,
        AffinePoint::Finite { x, y } => {
            let xd = x.value().iter_u64_digits().next().unwrap_or(0);
            let yd = y.value().iter_u64_digits().next().unwrap_or(0);
            Some((xd, yd))
        }
    }
}

pub fn from_oracle(p: OraclePoint, e: &CurveParams) -> AffinePoint {
    match p {
        None => AffinePoint::Infinity,
        Some((x, y)) => point(e, x, y),
    }
}

// ---------------------------------------------------------------------
// Independent u64 Montgomery oracle: B*y^2 = x^3 + A*x^2 + x.
// ---------------------------------------------------------------------

pub fn mont_oracle_add(
    p: OraclePoint,
    q: OraclePoint,
    a: u64,
    b: u64,
    modulus: u64,
) -> OraclePoint {
    let (x1, y1) = match p {
        None => return q,
        Some(v) => v,
    };
    let (x2, y2) = match q {
        None => return p,
        Some(v) => v,
    };
    if x1 == x2 && (y1 + y2) % modulus == 0 {
        return None;
    }
    let lambda = if x1 == x2 && y1 == y2 {
        if y1 == 0 {
            return None;
        }
        let numer = (3 * x1 % modulus * x1 % modulus + 2 * a % modulus * x1 % modulus + 1)
            % modulus;
        let denom = 2 * b % modulus * y1 % modulus;
        numer * inv_mod(denom, modulus) % modulus
    } else {
        let dy = (y2 + modulus - y1) % modulus;
        let dx = (x2 + modulus - x1) % modulus;
        dy * inv_mod(dx, modulus) % modulus
    };
    let x3 = (b * lambda % modulus * lambda % modulus + 3 * modulus - a - x1 - x2) % modulus;
    let y3 = (lambda * ((x1 + modulus - x3) % modulus) % modulus + modulus - y1) % modulus;
    Some((x3, y3))
}

pub fn mont_oracle_mul(k: u64, p: OraclePoint, a: u64, b: u64, modulus: u64) -> OraclePoint {
    let mut acc = None;
    for _ in 0..k {
        acc = mont_oracle_add(acc, p, a, b, modulus);
    }
    acc
}
