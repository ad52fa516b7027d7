//! C ABI over the gwm library.
//!
//! Conventions:
//!
//! * games travel as opaque `GwmGame` handles, freed with [`gwm_game_free`];
//! * every fallible call returns a [`GwmStatus`] and writes its result
//!   through an out-pointer, which is left untouched on failure;
//! * structured results are JSON strings in the library's wire format
//!   (rationals as `"p/q"` in lowest terms), freed with [`gwm_string_free`];
//! * [`gwm_last_error`] returns a thread-local message for the most recent
//!   failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use gwm::enumeration::{count, CountQuery, Family};
use gwm::json::{
    conjecture_report_to_json, game_from_json, game_to_json, power_to_json, verdict_to_json,
};
use gwm::power::{power_profile, rank_games, verify_banzhaf_conjecture, BipartiteGame, PowerIndex};
use gwm::weighted::classify_weighted;
use gwm::CompleteGameInvariants;

/// A complete game held behind the ABI; contents are not visible to C.
pub struct GwmGame {
    inner: CompleteGameInvariants,
}

/// Result of a C API call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GwmStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input does not describe a valid game, query or index.
    InvalidArgument = 3,
    /// The operation is not defined for this input (no closed formula, or a
    /// game outside the bipartite single-row family).
    Unsupported = 4,
    /// The input exceeds a size cap (oracle player limit, grid sweep limit).
    TooLarge = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: GwmStatus, message: String) -> GwmStatus {
    let message = CString::new(message).unwrap_or_else(|_| CString::new("invalid error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
    status
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Message for the most recent failure on this thread, or null if the last
/// call succeeded. The pointer is valid until the next failing call on the
/// same thread; do not free it.
#[no_mangle]
pub extern "C" fn gwm_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

unsafe fn str_arg<'a>(ptr: *const c_char) -> Result<&'a str, GwmStatus> {
    if ptr.is_null() {
        return Err(fail(GwmStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(GwmStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

fn write_string(out: *mut *mut c_char, value: String) -> GwmStatus {
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            GwmStatus::Ok
        }
        Err(_) => fail(
            GwmStatus::InvalidArgument,
            "result contained an interior NUL byte".into(),
        ),
    }
}

fn write_game(out: *mut *mut GwmGame, game: CompleteGameInvariants) -> GwmStatus {
    let boxed = Box::new(GwmGame { inner: game });
    unsafe { *out = Box::into_raw(boxed) };
    GwmStatus::Ok
}

/// Parses characteristic invariants from JSON
/// (`{"n": [n1, ...], "M": [[m11, ...], ...]}`), validating them.
///
/// # Safety
///
/// `json` must be a valid NUL-terminated string and `out_game` a valid
/// pointer. On success the caller owns the handle and must free it with
/// `gwm_game_free`.
#[no_mangle]
pub unsafe extern "C" fn gwm_game_from_json(
    json: *const c_char,
    out_game: *mut *mut GwmGame,
) -> GwmStatus {
    clear_error();
    if out_game.is_null() {
        return fail(GwmStatus::NullArgument, "null out pointer".into());
    }
    let text = match str_arg(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match game_from_json(text) {
        Ok(game) => write_game(out_game, game),
        Err(message) => fail(GwmStatus::InvalidArgument, message),
    }
}

/// Builds the bipartite game with hierarchy `(n1, n2)` and shift-minimal
/// winning vector `(a, b)`.
///
/// # Safety
///
/// `out_game` must be a valid pointer; the caller owns the returned handle.
#[no_mangle]
pub unsafe extern "C" fn gwm_game_bipartite(
    n1: u32,
    n2: u32,
    a: u32,
    b: u32,
    out_game: *mut *mut GwmGame,
) -> GwmStatus {
    clear_error();
    if out_game.is_null() {
        return fail(GwmStatus::NullArgument, "null out pointer".into());
    }
    match BipartiteGame::new(n1, n2, a, b) {
        Ok(game) => write_game(out_game, game.invariants()),
        Err(e) => fail(GwmStatus::InvalidArgument, e.to_string()),
    }
}

/// Frees a game handle; null is a no-op.
///
/// # Safety
///
/// `game` must be null or a handle returned by this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn gwm_game_free(game: *mut GwmGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// Frees a string returned by this library; null is a no-op.
///
/// # Safety
///
/// `s` must be null or a string returned by this library that has not been
/// freed already.
#[no_mangle]
pub unsafe extern "C" fn gwm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Serializes a game back to the invariants wire format.
///
/// # Safety
///
/// `game` must be a live handle and `out_json` a valid pointer; the caller
/// frees the string with `gwm_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gwm_game_to_json(
    game: *const GwmGame,
    out_json: *mut *mut c_char,
) -> GwmStatus {
    clear_error();
    if game.is_null() || out_json.is_null() {
        return fail(GwmStatus::NullArgument, "null argument".into());
    }
    write_string(out_json, game_to_json(&(*game).inner))
}

/// Computes the dual game.
///
/// # Safety
///
/// `game` must be a live handle and `out_dual` a valid pointer; the caller
/// owns the returned handle.
#[no_mangle]
pub unsafe extern "C" fn gwm_game_dual(
    game: *const GwmGame,
    out_dual: *mut *mut GwmGame,
) -> GwmStatus {
    clear_error();
    if game.is_null() || out_dual.is_null() {
        return fail(GwmStatus::NullArgument, "null argument".into());
    }
    match (*game).inner.dual() {
        Ok(dual) => write_game(out_dual, dual),
        Err(e @ gwm::GameError::GridTooLarge { .. }) => fail(GwmStatus::TooLarge, e.to_string()),
        Err(e) => fail(GwmStatus::InvalidArgument, e.to_string()),
    }
}

/// Weightedness verdict as JSON, with the exact representation when the
/// game is weighted. Requires a game with a single shift-minimal winning
/// vector.
///
/// # Safety
///
/// `game` must be a live handle and `out_json` a valid pointer; the caller
/// frees the string.
#[no_mangle]
pub unsafe extern "C" fn gwm_classify_json(
    game: *const GwmGame,
    out_json: *mut *mut c_char,
) -> GwmStatus {
    clear_error();
    if game.is_null() || out_json.is_null() {
        return fail(GwmStatus::NullArgument, "null argument".into());
    }
    match classify_weighted(&(*game).inner) {
        Ok(verdict) => write_string(out_json, verdict_to_json(&verdict, None)),
        Err(e @ gwm::GameError::NotSingleRow { .. }) => fail(GwmStatus::Unsupported, e.to_string()),
        Err(e) => fail(GwmStatus::InvalidArgument, e.to_string()),
    }
}

/// Swing counts and power indices as JSON. The game must be bipartite with a
/// single shift-minimal winning vector.
///
/// # Safety
///
/// `game` must be a live handle and `out_json` a valid pointer; the caller
/// frees the string.
#[no_mangle]
pub unsafe extern "C" fn gwm_power_json(
    game: *const GwmGame,
    out_json: *mut *mut c_char,
) -> GwmStatus {
    clear_error();
    if game.is_null() || out_json.is_null() {
        return fail(GwmStatus::NullArgument, "null argument".into());
    }
    let inner = &(*game).inner;
    let sizes = inner.hierarchy().class_sizes();
    if sizes.len() != 2 || inner.num_rows() != 1 {
        return fail(
            GwmStatus::Unsupported,
            "power indices are computed for bipartite games with one shift-minimal winning vector"
                .into(),
        );
    }
    let row = inner.rows()[0].entries();
    match BipartiteGame::new(sizes[0], sizes[1], row[0], row[1]) {
        Ok(bipartite) => {
            let profile = power_profile(&bipartite);
            write_string(out_json, power_to_json(&bipartite, &profile, None))
        }
        Err(e) => fail(GwmStatus::InvalidArgument, e.to_string()),
    }
}

/// Ranks all games on hierarchy `(n1, n2)` by class-1 index value and
/// returns the tie-grouped chain, e.g. `(3,0)=(2,0)=(1,0)>(3,1)>...`.
/// `index` is one of `ss`, `bz-rel`, `bz-abs`.
///
/// # Safety
///
/// `index` must be a valid NUL-terminated string and `out_chain` a valid
/// pointer; the caller frees the string.
#[no_mangle]
pub unsafe extern "C" fn gwm_rank_chain(
    n1: u32,
    n2: u32,
    index: *const c_char,
    out_chain: *mut *mut c_char,
) -> GwmStatus {
    clear_error();
    if out_chain.is_null() {
        return fail(GwmStatus::NullArgument, "null out pointer".into());
    }
    let index = match str_arg(index) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let index = match index {
        "ss" => PowerIndex::ShapleyShubik,
        "bz-rel" => PowerIndex::BanzhafRelative,
        "bz-abs" => PowerIndex::BanzhafAbsolute,
        other => {
            return fail(
                GwmStatus::InvalidArgument,
                format!("unknown index {other:?}; use ss, bz-rel or bz-abs"),
            )
        }
    };
    match rank_games(n1, n2, &index) {
        Ok(report) => write_string(out_chain, report.chain_string()),
        Err(e) => fail(GwmStatus::InvalidArgument, e.to_string()),
    }
}

/// Closed-form count of games, written as a decimal string. `family` is one
/// of `weighted`, `complete`, `weighted-dual`, `complete-dual`,
/// `nontrivial-weighted`, `symmetric`; pass `-1` for a `t` or `r` wildcard.
/// Returns `Unsupported` when no closed formula exists for the combination.
///
/// # Safety
///
/// `family` must be a valid NUL-terminated string and `out_count` a valid
/// pointer; the caller frees the string.
#[no_mangle]
pub unsafe extern "C" fn gwm_count(
    family: *const c_char,
    n: u32,
    t: i32,
    r: i32,
    out_count: *mut *mut c_char,
) -> GwmStatus {
    clear_error();
    if out_count.is_null() {
        return fail(GwmStatus::NullArgument, "null out pointer".into());
    }
    let family = match str_arg(family) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let Some(family) = Family::parse(family) else {
        return fail(
            GwmStatus::InvalidArgument,
            format!("unknown family {family:?}"),
        );
    };
    let wildcard = |v: i32| -> Result<Option<u32>, GwmStatus> {
        match v {
            -1 => Ok(None),
            v if v >= 1 => Ok(Some(v as u32)),
            _ => Err(fail(
                GwmStatus::InvalidArgument,
                format!("parameter must be >= 1 or -1 for wildcard, got {v}"),
            )),
        }
    };
    let t = match wildcard(t) {
        Ok(v) => v,
        Err(status) => return status,
    };
    let r = match wildcard(r) {
        Ok(v) => v,
        Err(status) => return status,
    };
    match count(&CountQuery { family, n, t, r }) {
        Ok(value) => write_string(out_count, value.to_string()),
        Err(e @ gwm::EnumerationError::NoFormulaAvailable { .. }) => {
            fail(GwmStatus::Unsupported, e.to_string())
        }
        Err(e) => fail(GwmStatus::InvalidArgument, e.to_string()),
    }
}

/// Runs the exhaustive relative-Banzhaf conjecture sweep up to `n_max`
/// players and returns the full JSON report (violations and ties).
///
/// # Safety
///
/// `out_json` must be a valid pointer; the caller frees the string.
#[no_mangle]
pub unsafe extern "C" fn gwm_verify_conjecture_json(
    n_max: u32,
    out_json: *mut *mut c_char,
) -> GwmStatus {
    clear_error();
    if out_json.is_null() {
        return fail(GwmStatus::NullArgument, "null out pointer".into());
    }
    if n_max < 2 {
        return fail(
            GwmStatus::InvalidArgument,
            "n_max must be at least 2".into(),
        );
    }
    let report = verify_banzhaf_conjecture(n_max);
    write_string(out_json, conjecture_report_to_json(&report))
}
