//! Theorem 6.1 aggregation skeleton: |ker¹(Q,G)| · Σ_π c_π ζ_π^α ·
//! Tr(C_λ f_{nαs}, ρ_{π,p}) over a user-supplied spectrum description.
//!
//! c_π is an opaque exact rational supplied by the user; ζ_π is a root of
//! unity e^{2πik/m}. Powers ζ_π^α are reduced in the cyclotomic residue
//! ring: orders 1 and 2 become ±1, larger orders stay exact as tagged unit
//! symbols `zeta_m`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::heckeops::SlopeVector;
use crate::polyring::{rat, LaurentPoly, Rat, VarCtx};
use crate::repmodel::{classify_type, Classification, RepDescriptor};
use crate::traceengine::truncated_trace_virtual;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawEntry {
    rep: String,
    cpi: String,
    zeta: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawFile {
    n: usize,
    p1: usize,
    p2: usize,
    s: usize,
    ker1: u64,
    entries: Vec<RawEntry>,
}

#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub rep: RepDescriptor,
    pub cpi: Rat,
    /// ζ_π = e^{2πi·power/order}, 0 ≤ power < order
    pub zeta_power: u64,
    pub zeta_order: u64,
}

#[derive(Debug, Clone)]
pub struct SpectrumFile {
    pub n: usize,
    pub p1: usize,
    pub p2: usize,
    pub s: usize,
    pub ker1: u64,
    pub entries: Vec<SpectrumEntry>,
}

fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: i64 = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        let b: i64 = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
        if b == 0 {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(rat(a, b))
    } else {
        Ok(Rat::from_integer(s.parse().map_err(|_| {
            Error::Parse(format!("bad rational `{s}`"))
        })?))
    }
}

fn render_rat(r: Rat) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Whether (p₁,p₂) puts λ in the type-II regime of Theorem 6.1(2).
pub fn type_ii_regime(n: usize, p1: usize, p2: usize) -> bool {
    n % 2 == 0
        && ((p1, p2) == (n / 2, n / 2)
            || (p1, p2) == (n / 2 + 1, n / 2 - 1)
            || (p1, p2) == (n / 2 - 1, n / 2 + 1))
}

/// Parse and validate a spectrum file. Every entry's representation must
/// pass classify_type for the regime declared by the header's (p₁,p₂).
pub fn load_spectrum(source: impl Read) -> Result<SpectrumFile> {
    let raw: RawFile = serde_json::from_reader(source)
        .map_err(|e| Error::Parse(format!("spectrum file: {e}")))?;
    if raw.p1 + raw.p2 != raw.n || raw.p1 == 0 || raw.p2 == 0 {
        return Err(Error::Domain(format!(
            "header requires p1 + p2 = n, got {} + {} vs {}",
            raw.p1, raw.p2, raw.n
        )));
    }
    if raw.s == 0 || raw.s >= raw.n {
        return Err(Error::Domain(format!(
            "header requires 0 < s < n, got s = {}",
            raw.s
        )));
    }
    if raw.ker1 == 0 {
        return Err(Error::Domain("ker1 must be a positive integer".into()));
    }
    let regime_ii = type_ii_regime(raw.n, raw.p1, raw.p2);
    let mut entries = Vec::with_capacity(raw.entries.len());
    for (idx, e) in raw.entries.iter().enumerate() {
        let tag = |msg: String| format!("entry {} ({}): {msg}", idx + 1, e.rep);
        let rep = RepDescriptor::parse(&e.rep).map_err(|err| Error::Parse(tag(err.to_string())))?;
        if rep.ambient_n() != raw.n {
            return Err(Error::Domain(tag(format!(
                "lives on GL_{} but the header has n = {}",
                rep.ambient_n(),
                raw.n
            ))));
        }
        let cls = classify_type(&rep, raw.p1, raw.p2)?;
        let admitted = match cls {
            Classification::TypeI => true,
            Classification::TypeII => regime_ii,
            Classification::Neither => false,
        };
        if !admitted {
            return Err(Error::Domain(tag(format!(
                "classifies as {} and is not admitted in the {} regime of Defs 5.2/5.3",
                cls.render(),
                if regime_ii { "type-II" } else { "type-I" }
            ))));
        }
        let cpi = parse_rat(&e.cpi).map_err(|err| Error::Parse(tag(err.to_string())))?;
        let (k, m) = e
            .zeta
            .split_once('/')
            .ok_or_else(|| Error::Parse(tag(format!("zeta must be `k/m`, got `{}`", e.zeta))))?;
        let k: u64 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(tag(format!("bad zeta numerator `{k}`"))))?;
        let m: u64 = m
            .trim()
            .parse()
            .map_err(|_| Error::Parse(tag(format!("bad zeta order `{m}`"))))?;
        if m == 0 || k >= m {
            return Err(Error::Domain(tag(format!(
                "zeta power {k} must satisfy 0 ≤ k < order {m}"
            ))));
        }
        entries.push(SpectrumEntry {
            rep,
            cpi,
            zeta_power: k,
            zeta_order: m,
        });
    }
    Ok(SpectrumFile {
        n: raw.n,
        p1: raw.p1,
        p2: raw.p2,
        s: raw.s,
        ker1: raw.ker1,
        entries,
    })
}

/// Bit-exact canonical serialization (fixed field order, canonical rep and
/// rational strings, reduced zeta fractions).
pub fn serialize_spectrum(spec: &SpectrumFile) -> String {
    let raw = RawFile {
        n: spec.n,
        p1: spec.p1,
        p2: spec.p2,
        s: spec.s,
        ker1: spec.ker1,
        entries: spec
            .entries
            .iter()
            .map(|e| RawEntry {
                rep: e.rep.render(),
                cpi: render_rat(e.cpi),
                zeta: format!("{}/{}", e.zeta_power, e.zeta_order),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("spectrum serialization cannot fail")
}

/// ζ^α reduced: `Ok(±1)` for residual order ≤ 2, otherwise the reduced
/// (power, order) pair to be tagged as the unit symbol `zeta_order`.
fn zeta_power_reduced(power: u64, order: u64, alpha: usize) -> std::result::Result<i64, (u64, u64)> {
    let k = (power * alpha as u64) % order;
    let g = k.gcd(&order);
    let (k, m) = (k / g, order / g);
    match m {
        1 => Ok(1),
        2 => Ok(-1),
        _ => Err((k, m)),
    }
}

/// The aggregate with exact rational c_π handled by a single common positive
/// denominator: the value is `poly / denom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateResult {
    pub poly: LaurentPoly,
    pub denom: i64,
}

impl AggregateResult {
    pub fn render(&self) -> String {
        if self.denom == 1 {
            self.poly.canonical_string()
        } else {
            format!("({}) / {}", self.poly.canonical_string(), self.denom)
        }
    }
}

fn ctx_for(spec: &SpectrumFile, alpha: usize) -> Arc<VarCtx> {
    let mut syms = Vec::new();
    for e in &spec.entries {
        syms.extend(e.rep.symbols());
        if let Err((_, m)) = zeta_power_reduced(e.zeta_power, e.zeta_order, alpha) {
            syms.push(format!("zeta_{m}"));
        }
    }
    syms.sort();
    syms.dedup();
    VarCtx::new(0, syms)
}

/// Theorem 6.1 skeleton: ker1 · Σ_entries cPi · ζ_π^α · Tr(C_λ f_{nαs}, ρ).
/// Linear in entries and in cPi; engine unsupported-case errors propagate
/// with the offending entry id.
pub fn aggregate_trace(
    alpha: usize,
    lambda: &SlopeVector,
    spec: &SpectrumFile,
) -> Result<AggregateResult> {
    let blocks = lambda.blocks();
    if blocks.parts() != [spec.p1, spec.p2] {
        return Err(Error::Domain(format!(
            "λ blocks {:?} do not match the header (p1,p2) = ({},{})",
            blocks.parts(),
            spec.p1,
            spec.p2
        )));
    }
    if lambda.s() != spec.s {
        return Err(Error::Domain(format!(
            "λ has Σλ_i n_i = {} but the header has s = {}",
            lambda.s(),
            spec.s
        )));
    }
    let ctx = ctx_for(spec, alpha);
    let mut denom: i64 = 1;
    for e in &spec.entries {
        denom = denom.lcm(e.cpi.denom());
    }
    denom = denom.abs().max(1);
    let mut total = LaurentPoly::zero(&ctx);
    for (idx, e) in spec.entries.iter().enumerate() {
        let vrep = crate::repmodel::normalize(&e.rep)?;
        let t = truncated_trace_virtual(lambda, alpha, spec.s, &vrep, &ctx).map_err(|err| {
            match err {
                Error::Unsupported(msg) => {
                    Error::Unsupported(format!("entry {} ({}): {msg}", idx + 1, e.rep.render()))
                }
                other => other,
            }
        })?;
        let scaled_cpi = e.cpi * Rat::from_integer(denom);
        debug_assert!(scaled_cpi.is_integer());
        let mut term = t.value.scale_i64(scaled_cpi.to_integer());
        match zeta_power_reduced(e.zeta_power, e.zeta_order, alpha) {
            Ok(sign) => term = term.scale_i64(sign),
            Err((k, m)) => {
                let z = LaurentPoly::symbol(&ctx, &format!("zeta_{m}"))?;
                for _ in 0..k {
                    term = term.mul(&z)?;
                }
            }
        }
        total = total.add(&term)?;
    }
    Ok(AggregateResult {
        poly: total.scale_i64(spec.ker1 as i64),
        denom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::traceengine::truncated_trace;

    fn file(json: &str) -> SpectrumFile {
        load_spectrum(json.as_bytes()).unwrap()
    }

    #[test]
    fn empty_spectrum() {
        let spec = file(r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":1,"entries":[]}"#);
        let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
        let out = aggregate_trace(1, &lambda, &spec).unwrap();
        assert!(out.poly.is_zero());
        assert_eq!(out.denom, 1);
    }

    #[test]
    fn single_entry_is_plain_trace() {
        let spec = file(
            r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":1,
                "entries":[{"rep":"St(2;eps|0)","cpi":"1","zeta":"0/1"}]}"#,
        );
        let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
        let out = aggregate_trace(1, &lambda, &spec).unwrap();
        let rep = RepDescriptor::parse("St(2;eps|0)").unwrap();
        let t = truncated_trace(&lambda, 1, 1, &rep).unwrap();
        assert_eq!(out.poly, t.value);
        assert_eq!(out.denom, 1);
    }

    #[test]
    fn ker1_scaling() {
        for ker1 in [1u64, 2] {
            let spec = file(&format!(
                r#"{{"n":2,"p1":1,"p2":1,"s":1,"ker1":{ker1},
                    "entries":[{{"rep":"St(2;eps|0)","cpi":"1","zeta":"0/1"}}]}}"#
            ));
            let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
            let out = aggregate_trace(1, &lambda, &spec).unwrap();
            let one = file(
                r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":1,
                    "entries":[{"rep":"St(2;eps|0)","cpi":"1","zeta":"0/1"}]}"#,
            );
            let base = aggregate_trace(1, &lambda, &one).unwrap();
            assert_eq!(out.poly, base.poly.scale_i64(ker1 as i64));
        }
    }

    #[test]
    fn zeta_reduction() {
        // ζ = e^{2πi/2} = −1 at α = 1; ζ = e^{2πi/4} at α = 2 gives −1 too
        let spec = file(
            r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":1,
                "entries":[{"rep":"St(2;eps|0)","cpi":"1","zeta":"1/2"}]}"#,
        );
        let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
        let out = aggregate_trace(1, &lambda, &spec).unwrap();
        let rep = RepDescriptor::parse("St(2;eps|0)").unwrap();
        let t = truncated_trace(&lambda, 1, 1, &rep).unwrap();
        assert_eq!(out.poly, t.value.scale_i64(-1));
        // order 3 stays symbolic
        let spec = file(
            r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":1,
                "entries":[{"rep":"St(2;eps|0)","cpi":"1","zeta":"1/3"}]}"#,
        );
        let out = aggregate_trace(1, &lambda, &spec).unwrap();
        assert!(out.poly.canonical_string().contains("zeta_3"));
    }

    #[test]
    fn rational_cpi_common_denominator() {
        let spec = file(
            r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":1,
                "entries":[{"rep":"St(2;eps|0)","cpi":"1/2","zeta":"0/1"},
                           {"rep":"Triv(2;eps|0)","cpi":"1/3","zeta":"0/1"}]}"#,
        );
        let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
        let out = aggregate_trace(1, &lambda, &spec).unwrap();
        assert_eq!(out.denom, 6);
        let ctx = out.poly.ctx().clone();
        let st = crate::repmodel::normalize(&RepDescriptor::parse("St(2;eps|0)").unwrap()).unwrap();
        let tv = crate::repmodel::normalize(&RepDescriptor::parse("Triv(2;eps|0)").unwrap()).unwrap();
        let t1 = truncated_trace_virtual(&lambda, 1, 1, &st, &ctx).unwrap();
        let t2 = truncated_trace_virtual(&lambda, 1, 1, &tv, &ctx).unwrap();
        let expect = t1.value.scale_i64(3).add(&t2.value.scale_i64(2)).unwrap();
        assert_eq!(out.poly, expect);
    }

    #[test]
    fn regime_gating() {
        // Speh(3,3) is Neither: rejected in any regime
        let err = load_spectrum(
            r#"{"n":9,"p1":5,"p2":4,"s":3,"ker1":1,
                "entries":[{"rep":"Speh(3,3;eps|0)","cpi":"1","zeta":"0/1"}]}"#
                .as_bytes(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("entry 1"));
        // Speh(2,3) is TypeII: fine under a type-II header, rejected under type-I
        assert!(load_spectrum(
            r#"{"n":6,"p1":3,"p2":3,"s":4,"ker1":1,
                "entries":[{"rep":"Speh(2,3;eps|0)","cpi":"1","zeta":"0/1"}]}"#
                .as_bytes(),
        )
        .is_ok());
        let err = load_spectrum(
            r#"{"n":6,"p1":5,"p2":1,"s":3,"ker1":1,
                "entries":[{"rep":"Speh(2,3;eps|0)","cpi":"1","zeta":"0/1"}]}"#
                .as_bytes(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("type-I"));
    }

    #[test]
    fn serialize_round_trip() {
        let text = r#"{"n":2,"p1":1,"p2":1,"s":1,"ker1":2,
            "entries":[{"rep":"St(2;eps|0)","cpi":"1/2","zeta":"1/3"}]}"#;
        let spec = file(text);
        let canon = serialize_spectrum(&spec);
        let spec2 = load_spectrum(canon.as_bytes()).unwrap();
        assert_eq!(canon, serialize_spectrum(&spec2));
    }
}
