//! C ABI over the hecke-trace library.
//!
//! Every operation returns an opaque `ht_result` handle carrying either the
//! canonical text output or an error message; status codes mirror the CLI
//! exit codes (0 ok, 2 domain/parse error, 3 unsupported case, 1 invalid
//! arguments such as NULL or non-UTF-8 input). The caller owns the handle
//! and must release it with `ht_result_free`. See include/hecke_trace.h.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hecke_trace::heckeops::{kottwitz_poly, SlopeVector};
use hecke_trace::repmodel::{classify_type, speh_expand, CharSpec, RepDescriptor};
use hecke_trace::spectral::{aggregate_trace, load_spectrum};
use hecke_trace::symcomb::{min_coset_reps, Composition, Flavor};
use hecke_trace::traceengine::{
    closed_form_trace, truncated_trace, ClosedFormParams, SignConvention,
};
use hecke_trace::Error;

pub const HT_OK: c_int = 0;
pub const HT_ERR_ARGS: c_int = 1;
pub const HT_ERR_DOMAIN: c_int = 2;
pub const HT_ERR_UNSUPPORTED: c_int = 3;

/// Opaque result handle.
pub struct HtResult {
    status: c_int,
    output: CString,
    error: CString,
}

fn nul_safe(s: String) -> CString {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed")
}

fn finish(out: Result<String, Error>) -> *mut HtResult {
    let res = match out {
        Ok(text) => HtResult {
            status: HT_OK,
            output: nul_safe(text),
            error: CString::default(),
        },
        Err(e) => HtResult {
            status: e.exit_code() as c_int,
            output: CString::default(),
            error: nul_safe(e.to_string()),
        },
    };
    Box::into_raw(Box::new(res))
}

fn args_error(msg: &str) -> *mut HtResult {
    Box::into_raw(Box::new(HtResult {
        status: HT_ERR_ARGS,
        output: CString::default(),
        error: nul_safe(msg.to_string()),
    }))
}

fn guarded(f: impl FnOnce() -> Result<String, Error>) -> *mut HtResult {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(out) => finish(out),
        Err(_) => args_error("internal panic"),
    }
}

/// # Safety
/// `ptr` must be NULL or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, &'static str> {
    if ptr.is_null() {
        return Err("NULL string argument");
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| "non-UTF-8 input")
}

/// Status code of a result (0 ok, 1 bad arguments, 2 domain, 3 unsupported).
#[no_mangle]
pub extern "C" fn ht_result_status(res: *const HtResult) -> c_int {
    if res.is_null() {
        return HT_ERR_ARGS;
    }
    unsafe { (*res).status }
}

/// Canonical text output; empty string on error. Owned by the handle.
#[no_mangle]
pub extern "C" fn ht_result_output(res: *const HtResult) -> *const c_char {
    if res.is_null() {
        return std::ptr::null();
    }
    unsafe { (*res).output.as_ptr() }
}

/// Error message; empty string on success. Owned by the handle.
#[no_mangle]
pub extern "C" fn ht_result_error(res: *const HtResult) -> *const c_char {
    if res.is_null() {
        return std::ptr::null();
    }
    unsafe { (*res).error.as_ptr() }
}

/// Release a result handle. NULL is ignored.
#[no_mangle]
pub extern "C" fn ht_result_free(res: *mut HtResult) {
    if !res.is_null() {
        drop(unsafe { Box::from_raw(res) });
    }
}

/// Satake transform of f_{nαs} as a canonical polynomial string.
#[no_mangle]
pub extern "C" fn ht_satake(n: usize, alpha: usize, s: usize) -> *mut HtResult {
    guarded(|| Ok(kottwitz_poly(n, alpha, s)?.canonical_string()))
}

/// Tadić expansion of Speh(x,y)(char), char in the form "eps|0".
///
/// # Safety
/// `char_` must be NULL-terminated UTF-8.
#[no_mangle]
pub unsafe extern "C" fn ht_speh_expand(
    x: usize,
    y: usize,
    char_: *const c_char,
) -> *mut HtResult {
    let c = match read_str(char_) {
        Ok(s) => s.to_string(),
        Err(m) => return args_error(m),
    };
    guarded(move || Ok(speh_expand(x, y, &CharSpec::parse(&c)?)?.render()))
}

/// Defs 5.2/5.3 classification ("TypeI" | "TypeII" | "Neither").
///
/// # Safety
/// `rep` must be NULL-terminated UTF-8 in canonical descriptor form.
#[no_mangle]
pub unsafe extern "C" fn ht_classify(
    rep: *const c_char,
    p1: usize,
    p2: usize,
) -> *mut HtResult {
    let rep = match read_str(rep) {
        Ok(s) => s.to_string(),
        Err(m) => return args_error(m),
    };
    guarded(move || {
        let rep = RepDescriptor::parse(&rep)?;
        Ok(classify_type(&rep, p1, p2)?.render().to_string())
    })
}

/// Minimal double-coset representatives S_λ\S_n/S_ν, newline-separated
/// one-line permutations.
///
/// # Safety
/// `shape` and `typ` must be NULL-terminated UTF-8, e.g. "2,1".
#[no_mangle]
pub unsafe extern "C" fn ht_min_reps(
    shape: *const c_char,
    typ: *const c_char,
) -> *mut HtResult {
    let (shape, typ) = match (read_str(shape), read_str(typ)) {
        (Ok(a), Ok(b)) => (a.to_string(), b.to_string()),
        (Err(m), _) | (_, Err(m)) => return args_error(m),
    };
    guarded(move || {
        let reps = min_coset_reps(
            &Composition::parse(&shape, Flavor::Strict)?,
            &Composition::parse(&typ, Flavor::Strict)?,
        )?;
        Ok(reps
            .iter()
            .map(|w| w.one_line())
            .collect::<Vec<_>>()
            .join("\n"))
    })
}

/// Engine-path truncated trace. `lambda` like "1/2:2,0:1", `rep` a canonical
/// descriptor. Output is the provenance/sign header plus the polynomial.
///
/// # Safety
/// `lambda` and `rep` must be NULL-terminated UTF-8.
#[no_mangle]
pub unsafe extern "C" fn ht_trace_engine(
    lambda: *const c_char,
    rep: *const c_char,
    alpha: usize,
) -> *mut HtResult {
    let (lambda, rep) = match (read_str(lambda), read_str(rep)) {
        (Ok(a), Ok(b)) => (a.to_string(), b.to_string()),
        (Err(m), _) | (_, Err(m)) => return args_error(m),
    };
    guarded(move || {
        let lambda = SlopeVector::parse(&lambda)?;
        let rep = RepDescriptor::parse(&rep)?;
        Ok(truncated_trace(&lambda, alpha, lambda.s(), &rep)?.render())
    })
}

/// Closed-form trace of Prop 5.3 case 1..6 against one or two characters
/// ("eps|0", second NULL unless the case takes two). `statement_sign` = 0
/// applies the proof-chain signs, nonzero the statement signs.
///
/// # Safety
/// String arguments must be NULL-terminated UTF-8; `char2` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn ht_trace_closed_form(
    case_: u8,
    lambda: *const c_char,
    char1: *const c_char,
    char2: *const c_char,
    alpha: usize,
    statement_sign: c_int,
) -> *mut HtResult {
    let (lambda, c1) = match (read_str(lambda), read_str(char1)) {
        (Ok(a), Ok(b)) => (a.to_string(), b.to_string()),
        (Err(m), _) | (_, Err(m)) => return args_error(m),
    };
    let c2 = if char2.is_null() {
        None
    } else {
        match read_str(char2) {
            Ok(s) => Some(s.to_string()),
            Err(m) => return args_error(m),
        }
    };
    guarded(move || {
        let lambda = SlopeVector::parse(&lambda)?;
        let mut chars = vec![CharSpec::parse(&c1)?];
        if let Some(c2) = c2 {
            chars.push(CharSpec::parse(&c2)?);
        }
        let conv = if statement_sign != 0 {
            SignConvention::Statement
        } else {
            SignConvention::Proof
        };
        let params = ClosedFormParams {
            alpha,
            lambda,
            chars,
        };
        Ok(closed_form_trace(case_, &params, conv)?.render())
    })
}

/// Theorem 6.1 aggregation over an in-memory spectrum JSON document.
///
/// # Safety
/// `spectrum_json` and `lambda` must be NULL-terminated UTF-8.
#[no_mangle]
pub unsafe extern "C" fn ht_aggregate(
    spectrum_json: *const c_char,
    alpha: usize,
    lambda: *const c_char,
) -> *mut HtResult {
    let (json, lambda) = match (read_str(spectrum_json), read_str(lambda)) {
        (Ok(a), Ok(b)) => (a.to_string(), b.to_string()),
        (Err(m), _) | (_, Err(m)) => return args_error(m),
    };
    guarded(move || {
        let spec = load_spectrum(json.as_bytes())?;
        let lambda = SlopeVector::parse(&lambda)?;
        Ok(aggregate_trace(alpha, &lambda, &spec)?.render())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn output(res: *mut HtResult) -> String {
        assert_eq!(ht_result_status(res), HT_OK, "{}", unsafe {
            CStr::from_ptr(ht_result_error(res)).to_str().unwrap()
        });
        let s = unsafe { CStr::from_ptr(ht_result_output(res)) }
            .to_str()
            .unwrap()
            .to_string();
        ht_result_free(res);
        s
    }

    #[test]
    fn satake_through_ffi() {
        let out = output(ht_satake(2, 1, 1));
        assert_eq!(out, "q^(1/2)*X1^1 + q^(1/2)*X2^1");
    }

    #[test]
    fn trace_round_trip() {
        let lambda = CString::new("1:1,0:1").unwrap();
        let rep = CString::new("St(2;eps|0)").unwrap();
        let out = output(unsafe { ht_trace_engine(lambda.as_ptr(), rep.as_ptr(), 1) });
        assert!(out.ends_with("eps^1"), "{out}");
        let c1 = CString::new("eps|0").unwrap();
        let out = output(unsafe {
            ht_trace_closed_form(1, lambda.as_ptr(), c1.as_ptr(), std::ptr::null(), 1, 0)
        });
        assert!(out.ends_with("eps^1"), "{out}");
    }

    #[test]
    fn error_paths() {
        let res = unsafe { ht_trace_engine(std::ptr::null(), std::ptr::null(), 1) };
        assert_eq!(ht_result_status(res), HT_ERR_ARGS);
        ht_result_free(res);
        let res = ht_satake(0, 1, 1);
        assert_eq!(ht_result_status(res), HT_ERR_DOMAIN);
        ht_result_free(res);
    }
}
