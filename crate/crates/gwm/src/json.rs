//! The JSON wire format shared by the CLI, test fixtures and the C API:
//! invariants as `{"n": [n_1, ...], "M": [[m_11, ...], ...]}`, rationals as
//! strings in lowest terms.

use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::GameError;
use crate::game::CompleteGameInvariants;
use crate::power::{BipartiteGame, ConjectureReport, PowerProfile, RankingReport};
use crate::vector::{Hierarchy, ProfileVector};
use crate::weighted::WeightednessVerdict;

/// Serde mirror of the invariants wire format.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GameJson {
    pub n: Vec<u32>,
    #[serde(rename = "M")]
    pub m: Vec<Vec<u32>>,
}

impl From<&CompleteGameInvariants> for GameJson {
    fn from(game: &CompleteGameInvariants) -> GameJson {
        GameJson {
            n: game.hierarchy().class_sizes().to_vec(),
            m: game.rows().iter().map(|r| r.entries().to_vec()).collect(),
        }
    }
}

impl TryFrom<GameJson> for CompleteGameInvariants {
    type Error = GameError;

    fn try_from(raw: GameJson) -> Result<Self, GameError> {
        let hierarchy = Hierarchy::new(raw.n)?;
        let rows = raw
            .m
            .into_iter()
            .map(ProfileVector::new)
            .collect::<Result<Vec<_>, _>>()?;
        CompleteGameInvariants::new(hierarchy, rows)
    }
}

/// Parses invariants from the wire format, validating on the way in.
pub fn game_from_json(text: &str) -> Result<CompleteGameInvariants, String> {
    let raw: GameJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    CompleteGameInvariants::try_from(raw).map_err(|e| e.to_string())
}

/// Emits invariants in the wire format.
pub fn game_to_json(game: &CompleteGameInvariants) -> String {
    serde_json::to_string(&GameJson::from(game)).expect("plain data serializes")
}

/// `p/q` in lowest terms (`p` alone when `q = 1`).
pub fn rational_to_string(r: &BigRational) -> String {
    r.to_string()
}

/// Accepts `p/q` or a bare integer.
pub fn rational_from_str(s: &str) -> Result<BigRational, String> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Decimal rendering with `digits` places, labeled approximate by callers.
/// Rounds half away from zero.
pub fn rational_to_decimal(r: &BigRational, digits: u32) -> String {
    use num_bigint::BigInt;
    use num_traits::Signed;

    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r * BigRational::from(scale.clone());
    let (numer, denom) = (scaled.numer().clone(), scaled.denom().clone());
    // round(n/d) half away from zero with d > 0
    let twice = BigInt::from(2) * &numer;
    let rounded = if numer.is_negative() {
        (twice - &denom) / (BigInt::from(2) * &denom)
    } else {
        (twice + &denom) / (BigInt::from(2) * &denom)
    };
    let negative = rounded.is_negative();
    let digits_str = rounded.magnitude().to_string();
    let digits = digits as usize;
    let padded = if digits_str.len() <= digits {
        format!("0{:0>width$}", digits_str, width = digits)
    } else {
        digits_str
    };
    let split = padded.len() - digits;
    let (int_part, frac_part) = padded.split_at(split);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Arbitrary-precision integer as a JSON number.
pub fn biguint_number(v: &BigUint) -> Number {
    Number::from_str(&v.to_string()).expect("digits parse as a JSON number")
}

#[derive(Serialize)]
struct PowerGameRef {
    n1: u32,
    n2: u32,
    a: u32,
    b: u32,
}

#[derive(Serialize)]
struct PowerApprox {
    digits: u32,
    ss: [String; 2],
    bz_rel: [String; 2],
    bz_abs: [String; 2],
}

#[derive(Serialize)]
struct PowerJson {
    game: PowerGameRef,
    c1: Number,
    c2: Number,
    ss: [String; 2],
    bz_rel: [String; 2],
    bz_abs: [String; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<PowerApprox>,
}

/// The `power` payload: raw swing counts as numbers, indices as exact
/// rational strings, optionally an approximate decimal block.
pub fn power_to_json(game: &BipartiteGame, profile: &PowerProfile, decimal: Option<u32>) -> String {
    let approx = decimal.map(|digits| PowerApprox {
        digits,
        ss: [
            rational_to_decimal(&profile.ss1, digits),
            rational_to_decimal(&profile.ss2, digits),
        ],
        bz_rel: [
            rational_to_decimal(&profile.bz1_rel, digits),
            rational_to_decimal(&profile.bz2_rel, digits),
        ],
        bz_abs: [
            rational_to_decimal(&profile.bz1_abs, digits),
            rational_to_decimal(&profile.bz2_abs, digits),
        ],
    });
    let out = PowerJson {
        game: PowerGameRef {
            n1: game.n1(),
            n2: game.n2(),
            a: game.a(),
            b: game.b(),
        },
        c1: biguint_number(&profile.c1),
        c2: biguint_number(&profile.c2),
        ss: [
            rational_to_string(&profile.ss1),
            rational_to_string(&profile.ss2),
        ],
        bz_rel: [
            rational_to_string(&profile.bz1_rel),
            rational_to_string(&profile.bz2_rel),
        ],
        bz_abs: [
            rational_to_string(&profile.bz1_abs),
            rational_to_string(&profile.bz2_abs),
        ],
        approx,
    };
    serde_json::to_string(&out).expect("plain data serializes")
}

/// The `classify` payload; quota and class weights present iff weighted.
pub fn verdict_to_json(verdict: &WeightednessVerdict, decimal: Option<u32>) -> String {
    let mut payload = serde_json::json!({
        "weighted": verdict.is_weighted,
        "stripped_veto_classes": verdict.stripped_veto_classes,
        "stripped_null_classes": verdict.stripped_null_classes,
    });
    if let Some(rep) = &verdict.representation {
        payload["quota"] = rational_to_string(rep.quota()).into();
        payload["class_weights"] = rep
            .class_weights()
            .iter()
            .map(|w| serde_json::Value::from(rational_to_string(w)))
            .collect::<Vec<_>>()
            .into();
        if let Some(digits) = decimal {
            payload["approx"] = serde_json::json!({
                "digits": digits,
                "quota": rational_to_decimal(rep.quota(), digits),
                "class_weights": rep
                    .class_weights()
                    .iter()
                    .map(|w| rational_to_decimal(w, digits))
                    .collect::<Vec<_>>(),
            });
        }
    }
    payload.to_string()
}

/// The `rank` payload: tie groups with exact values, plus the chain text.
pub fn ranking_to_json(report: &RankingReport) -> String {
    let groups: Vec<serde_json::Value> = report
        .groups
        .iter()
        .map(|g| {
            serde_json::json!({
                "value": rational_to_string(&g.value),
                "games": g.games,
            })
        })
        .collect();
    serde_json::json!({
        "n1": report.n1,
        "n2": report.n2,
        "index": report.index,
        "groups": groups,
        "chain": report.chain_string(),
    })
    .to_string()
}

/// The `verify-conjecture` payload with all witnesses.
pub fn conjecture_report_to_json(report: &ConjectureReport) -> String {
    let ties: Vec<serde_json::Value> = report
        .ties
        .iter()
        .map(|t| {
            serde_json::json!({
                "n1": t.n1,
                "n2": t.n2,
                "first": t.first,
                "second": t.second,
                "first_numerators": [
                    biguint_number(&t.first_numerators.0),
                    biguint_number(&t.first_numerators.1),
                ],
                "second_numerators": [
                    biguint_number(&t.second_numerators.0),
                    biguint_number(&t.second_numerators.1),
                ],
            })
        })
        .collect();
    let violations: Vec<serde_json::Value> = report
        .violations
        .iter()
        .map(|v| {
            serde_json::json!({
                "n1": v.n1,
                "n2": v.n2,
                "a": v.a,
                "b": v.b,
                "kind": format!("{:?}", v.kind),
                "lhs": rational_to_string(&v.lhs),
                "rhs": rational_to_string(&v.rhs),
            })
        })
        .collect();
    serde_json::json!({
        "n_max": report.n_max,
        "games_checked": report.games_checked,
        "pass": report.violations.is_empty(),
        "violations": violations,
        "ties": ties,
    })
    .to_string()
}
