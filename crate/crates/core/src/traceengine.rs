//! Truncated traces Tr(C_λ f_{nαs}, π), computed two ways.
//!
//! The engine path follows Cor 3.4: reduce to the Levi M_λ, expand the
//! normalized Jacquet module by the geometric lemma, kill the terms that are
//! properly induced inside a λ-block with coprime (s_i, p_i) (Prop 5.1 via
//! Lemma 5.1), and evaluate the surviving blockwise compact traces as
//! χ̂-truncated Satake polynomials at Hecke matrices. The closed-form path
//! implements the six displayed formulas of Prop 5.3 directly. The two paths
//! agree exactly under the proof-chain sign convention; the statement-level
//! signs of Prop 5.3(1) and of the Speh sign rule are kept available behind
//! `SignConvention` and compared, never silently absorbed.

use num_integer::Integer;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::heckeops::{c_const, chihat_satake, reduce_to_levi, BlockFn, SlopeVector};
use crate::polyring::{rat, LaurentPoly, Rat, VarCtx};
use crate::repmodel::{
    classify_type, geometric_lemma_terms, normalize, BlockTag, CharSpec, Classification,
    RepDescriptor, StdBlock, VirtualRep,
};
use crate::symcomb::Composition;

/// Which global sign of Prop 5.3 is applied: the signs printed in the
/// statement, or the signs produced by the proof chain (and by the engine).
/// They differ in case 1 ((−1)^{n−1} vs (−1)^n), in case 3 ((y,y) at y = 3
/// and the (y±1, y∓1) shape), and in case 6 for p₁ ≠ p₂ ((−1)^n vs +1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    Statement,
    #[default]
    Proof,
}

impl SignConvention {
    pub fn render(&self) -> &'static str {
        match self {
            SignConvention::Statement => "statement",
            SignConvention::Proof => "proof",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Engine,
    ClosedForm,
}

impl Provenance {
    pub fn render(&self) -> &'static str {
        match self {
            Provenance::Engine => "engine",
            Provenance::ClosedForm => "closed_form",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TraceResult {
    pub value: LaurentPoly,
    pub provenance: Provenance,
    pub sign_convention: SignConvention,
}

impl TraceResult {
    /// Canonical serialization: a provenance/sign header line, then the value.
    pub fn render(&self) -> String {
        format!(
            "# provenance={} sign={}\n{}",
            self.provenance.render(),
            self.sign_convention.render(),
            self.value.canonical_string()
        )
    }
}

/// (ε·|·|^e)^m as a monomial z^m q^{−em}, m ≥ 0.
fn char_power(ctx: &Arc<VarCtx>, c: &CharSpec, m: i64) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::q_pow(ctx, -c.shift * Rat::from_integer(m));
    if let Some(sym) = &c.symbol {
        let z = LaurentPoly::symbol(ctx, sym)?;
        for _ in 0..m {
            out = out.mul(&z)?;
        }
    }
    Ok(out)
}

/// B_p(s') = S(χ̂^{GL_p}_{M_0} f_{pαs'}) evaluated at the δ_{P_0}^{1/2} points
/// (q^{(2l−p−1)/2})_{l=1..p}: the scalar factor common to every Prop 5.3 case.
pub fn b_factor(ctx: &Arc<VarCtx>, p: usize, alpha: usize, s: usize) -> Result<LaurentPoly> {
    let sat = chihat_satake(p, alpha, s)?;
    let points: Vec<Option<LaurentPoly>> = (1..=p)
        .map(|l| Some(LaurentPoly::q_pow(ctx, rat(2 * l as i64 - p as i64 - 1, 2))))
        .collect();
    sat.substitute_into(&points, ctx)
}

/// Compact trace of C_c^{GL_p}(f_{pαs'}) against one twisted block:
/// (−1)^{p−1} (Steinberg) resp. +1 (trivial) times the χ̂-truncated Satake
/// polynomial at the Hecke matrix (z q^{−e} q^{(2l−p−1)/2})_l of the
/// δ^{1/2}-twisted character.
fn single_block_trace(
    ctx: &Arc<VarCtx>,
    block: &StdBlock,
    alpha: usize,
    s: usize,
) -> Result<LaurentPoly> {
    let p = block.m;
    let sat = chihat_satake(p, alpha, s)?;
    let mut points = Vec::with_capacity(p);
    for l in 1..=p {
        let mut pt = LaurentPoly::q_pow(ctx, -block.char_.shift + rat(2 * l as i64 - p as i64 - 1, 2));
        if let Some(sym) = &block.char_.symbol {
            pt = pt.mul(&LaurentPoly::symbol(ctx, sym)?)?;
        }
        points.push(Some(pt));
    }
    let val = sat.substitute_into(&points, ctx)?;
    let sign = match block.tag {
        BlockTag::St => {
            if (p - 1) % 2 == 0 {
                1
            } else {
                -1
            }
        }
        BlockTag::Triv => 1,
    };
    Ok(val.scale_i64(sign))
}

/// Tr(C_c^{M}(⊗f_i), ⊗σ_i) for a Levi M with one twisted St/Triv block per
/// factor: the product of the blockwise compact traces.
pub fn compact_trace_block(
    ctx: &Arc<VarCtx>,
    blocks: &Composition,
    fns: &[BlockFn],
    rep: &[StdBlock],
) -> Result<LaurentPoly> {
    if blocks.len() != fns.len() || blocks.len() != rep.len() {
        return Err(Error::Domain("mismatched block data".into()));
    }
    let mut out = LaurentPoly::one(ctx);
    for ((&pi, f), sigma) in blocks.parts().iter().zip(fns).zip(rep) {
        if sigma.m != pi || f.n != pi {
            return Err(Error::Domain(format!(
                "block size mismatch at GL_{pi}"
            )));
        }
        out = out.mul(&single_block_trace(ctx, sigma, f.alpha, f.s)?)?;
    }
    Ok(out)
}

fn result_ctx(symbols: Vec<String>) -> Arc<VarCtx> {
    VarCtx::new(0, symbols)
}

/// Engine path for a single standard module against the reduction plan data.
fn trace_standard_module(
    ctx: &Arc<VarCtx>,
    lambda: &SlopeVector,
    alpha: usize,
    std_rep: &[StdBlock],
) -> Result<LaurentPoly> {
    let lam_blocks = lambda.blocks();
    let s_parts = lambda.s_parts();
    let nu = Composition::strict(std_rep.iter().map(|b| b.m).collect())?;
    let mut sum = LaurentPoly::zero(ctx);
    for term in geometric_lemma_terms(&nu, lambda, std_rep)? {
        let mut vanishes = false;
        let mut unsupported: Option<Error> = None;
        for (i, col) in term.columns.iter().enumerate() {
            let pi = lam_blocks.parts()[i];
            let si = s_parts[i];
            if col.len() == 1 && col[0].m == pi {
                continue;
            }
            // properly induced inside the λ-block GL_{p_i}
            if si.gcd(&pi) == 1 {
                vanishes = true; // Prop 5.1 via Lemma 5.1
            } else if unsupported.is_none() {
                unsupported = Some(Error::Unsupported(format!(
                    "λ-block {} (GL_{pi}, s_{} = {si}) receives a properly \
                     induced term and gcd(s_{}, p_{}) = {} ≠ 1: the vanishing \
                     argument of Prop 5.1/Lemma 5.1 does not apply",
                    i + 1,
                    i + 1,
                    i + 1,
                    i + 1,
                    si.gcd(&pi)
                )));
            }
        }
        if vanishes {
            continue;
        }
        if let Some(e) = unsupported {
            return Err(e);
        }
        let mut prod = LaurentPoly::one(ctx);
        for (i, col) in term.columns.iter().enumerate() {
            prod = prod.mul(&single_block_trace(ctx, &col[0], alpha, s_parts[i])?)?;
        }
        sum = sum.add(&prod)?;
    }
    Ok(sum)
}

/// Engine trace over an explicit virtual combination of standard modules.
pub fn truncated_trace_virtual(
    lambda: &SlopeVector,
    alpha: usize,
    s: usize,
    vrep: &VirtualRep,
    ctx: &Arc<VarCtx>,
) -> Result<TraceResult> {
    let n = lambda.n();
    let plan = reduce_to_levi(lambda, n, alpha, s)?;
    let mut total = LaurentPoly::zero(ctx);
    for (std_rep, coeff) in vrep.terms() {
        let m: usize = std_rep.iter().map(|b| b.m).sum();
        if m != n {
            return Err(Error::Domain(format!(
                "standard module lives on GL_{m} but λ has total {n}"
            )));
        }
        let t = trace_standard_module(ctx, lambda, alpha, std_rep)?;
        total = total.add(&t.scale_i64(coeff))?;
    }
    Ok(TraceResult {
        value: total.mul_q(plan.prefactor_q_exp),
        provenance: Provenance::Engine,
        sign_convention: SignConvention::Proof,
    })
}

/// Tr(C_λ f_{nαs}, π) by the general engine (Cor 3.4 → geometric lemma →
/// Prop 5.1 vanishing → blockwise compact traces). Linear in VirtualRep
/// coefficients; exact. Errors with an unsupported-case if a surviving term
/// is properly induced inside a λ-block with non-coprime (s_i, p_i).
pub fn truncated_trace(
    lambda: &SlopeVector,
    alpha: usize,
    s: usize,
    rep: &RepDescriptor,
) -> Result<TraceResult> {
    let n = lambda.n();
    if rep.ambient_n() != n {
        return Err(Error::Domain(format!(
            "representation lives on GL_{} but λ has total {n}",
            rep.ambient_n()
        )));
    }
    if lambda.s() != s {
        return Err(Error::Domain(format!(
            "λ has Σλ_i n_i = {} but s = {s}",
            lambda.s()
        )));
    }
    let vrep = normalize(rep)?;
    let ctx = result_ctx(rep.symbols());
    truncated_trace_virtual(lambda, alpha, s, &vrep, &ctx)
}

/// Parameters of a Prop 5.3 closed form: the two-slope λ and the character
/// data of the representation (one character for cases 1–4; two, aligned
/// with the λ-blocks, for cases 5–6).
#[derive(Debug, Clone)]
pub struct ClosedFormParams {
    pub alpha: usize,
    pub lambda: SlopeVector,
    pub chars: Vec<CharSpec>,
}

struct TwoSlope {
    n: usize,
    s: usize,
    p1: usize,
    s1: usize,
    p2: usize,
    s2: usize,
    pref: Rat,
}

fn two_slope_data(params: &ClosedFormParams, case: u8) -> Result<TwoSlope> {
    if params.alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    let sl = params.lambda.slopes();
    if sl.len() != 2 {
        return Err(Error::Domain(format!(
            "Prop 5.3({case}) requires a two-slope λ"
        )));
    }
    let blocks = params.lambda.blocks();
    let s_parts = params.lambda.s_parts();
    let (p1, p2) = (blocks.parts()[0], blocks.parts()[1]);
    let (s1, s2) = (s_parts[0], s_parts[1]);
    let n = p1 + p2;
    let s = s1 + s2;
    if s == 0 || s >= n {
        return Err(Error::Domain(format!(
            "Prop 5.3({case}) requires 0 < s < n"
        )));
    }
    if case >= 3 && (s1.gcd(&p1) != 1 || s2.gcd(&p2) != 1) {
        return Err(Error::Domain(format!(
            "Prop 5.3({case}) requires (s_i, p_i) coprime"
        )));
    }
    let pref = c_const(n, s, &[(p1, s1), (p2, s2)]) * rat(params.alpha as i64, 1);
    Ok(TwoSlope {
        n,
        s,
        p1,
        s1,
        p2,
        s2,
        pref,
    })
}

fn one_char(params: &ClosedFormParams, case: u8) -> Result<&CharSpec> {
    if params.chars.len() != 1 {
        return Err(Error::Domain(format!(
            "Prop 5.3({case}) takes exactly one character"
        )));
    }
    Ok(&params.chars[0])
}

fn closed_ctx(params: &ClosedFormParams) -> Arc<VarCtx> {
    let mut syms: Vec<String> = params
        .chars
        .iter()
        .filter_map(|c| c.symbol.clone())
        .collect();
    syms.sort();
    syms.dedup();
    result_ctx(syms)
}

/// The speh-shape closed forms shared by cases 3 and 4: n = 2h, shapes
/// (h, h) and (h±1, h∓1).
fn speh_closed_magnitude(
    ctx: &Arc<VarCtx>,
    d: &TwoSlope,
    alpha: usize,
    c: &CharSpec,
    h: usize,
) -> Result<(LaurentPoly, bool)> {
    let a = alpha as i64;
    let base = char_power(ctx, c, a * d.s as i64)?
        .mul(&b_factor(ctx, d.p1, alpha, d.s1)?)?
        .mul(&b_factor(ctx, d.p2, alpha, d.s2)?)?
        .mul_q(d.pref);
    if (d.p1, d.p2) == (h, h) {
        let sym = LaurentPoly::q_pow(ctx, rat(a * (d.s1 as i64 - d.s2 as i64), 2))
            .add(&LaurentPoly::q_pow(ctx, rat(a * (d.s2 as i64 - d.s1 as i64), 2)))?;
        Ok((base.mul(&sym)?, true))
    } else if (d.p1, d.p2) == (h + 1, h - 1) || (d.p1, d.p2) == (h - 1, h + 1) {
        Ok((base, false))
    } else {
        Err(Error::Domain(format!(
            "Prop 5.3 Speh cases cover (p1,p2) ∈ {{({h},{h}), ({},{}), ({},{})}}",
            h + 1,
            h - 1,
            h - 1,
            h + 1
        )))
    }
}

/// The six displayed formulas of Prop 5.3, with the global prefactor
/// q^{α(s(n−s)/2 − Σ s_i(p_i−s_i)/2)}, character factors z^{αs}q^{−eαs}, and
/// χ̂-truncated Satake factors at the displayed evaluation tuples.
pub fn closed_form_trace(
    case: u8,
    params: &ClosedFormParams,
    conv: SignConvention,
) -> Result<TraceResult> {
    let d = two_slope_data(params, case)?;
    let ctx = closed_ctx(params);
    let alpha = params.alpha;
    let a = alpha as i64;
    let value = match case {
        1 | 2 => {
            let c = one_char(params, case)?;
            // blockwise δ^{±1/2} twists: q^{∓αs1·p2/2 ± αs2·p1/2}
            let skew = rat(a * (d.s2 * d.p1) as i64, 2) - rat(a * (d.s1 * d.p2) as i64, 2);
            let skew = if case == 1 { skew } else { -skew };
            let sign = match (case, conv) {
                (1, SignConvention::Proof) => {
                    if d.n % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                }
                (1, SignConvention::Statement) => {
                    if (d.n - 1) % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                }
                _ => 1,
            };
            char_power(&ctx, c, a * d.s as i64)?
                .mul(&b_factor(&ctx, d.p1, alpha, d.s1)?)?
                .mul(&b_factor(&ctx, d.p2, alpha, d.s2)?)?
                .mul_q(d.pref + skew)
                .scale_i64(sign)
        }
        3 | 4 => {
            if d.n % 2 != 0 {
                return Err(Error::Domain(format!(
                    "Prop 5.3({case}) requires n even"
                )));
            }
            let h = d.n / 2;
            if case == 3 && h < 3 {
                return Err(Error::Domain("Prop 5.3(3) requires n ≥ 6".into()));
            }
            if case == 4 && h < 2 {
                return Err(Error::Domain("Prop 5.3(4) requires n ≥ 4".into()));
            }
            let c = one_char(params, case)?;
            let (mag, balanced) = speh_closed_magnitude(&ctx, &d, alpha, c, h)?;
            let sign = if balanced {
                // (h,h): proof chain gives +; the statement's Speh(2,y) sign
                // rule flips it at y = 3
                match conv {
                    SignConvention::Proof => 1,
                    SignConvention::Statement => {
                        if case == 3 && h == 3 {
                            -1
                        } else {
                            1
                        }
                    }
                }
            } else {
                // (h±1, h∓1): proof chain gives −; the statement prints + in
                // case 3 and − in case 4
                match conv {
                    SignConvention::Proof => -1,
                    SignConvention::Statement => {
                        if case == 3 {
                            1
                        } else {
                            -1
                        }
                    }
                }
            };
            mag.scale_i64(sign)
        }
        5 | 6 => {
            if params.chars.len() != 2 {
                return Err(Error::Domain(format!(
                    "Prop 5.3({case}) takes two characters, one per λ-block"
                )));
            }
            let (c1, c2) = (&params.chars[0], &params.chars[1]);
            let bb = b_factor(&ctx, d.p1, alpha, d.s1)?
                .mul(&b_factor(&ctx, d.p2, alpha, d.s2)?)?;
            if d.p1 == d.p2 {
                // both displayed p1 = p2 branches (including the r-twist
                // branch) are the symmetrized two-term sum
                let t1 = char_power(&ctx, c1, a * d.s1 as i64)?
                    .mul(&char_power(&ctx, c2, a * d.s2 as i64)?)?;
                let t2 = char_power(&ctx, c2, a * d.s1 as i64)?
                    .mul(&char_power(&ctx, c1, a * d.s2 as i64)?)?;
                t1.add(&t2)?.mul(&bb)?.mul_q(d.pref)
            } else {
                let sign = match (case, conv) {
                    (5, _) | (6, SignConvention::Statement) => {
                        if d.n % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                    (6, SignConvention::Proof) => 1,
                    _ => unreachable!(),
                };
                char_power(&ctx, c1, a * d.s1 as i64)?
                    .mul(&char_power(&ctx, c2, a * d.s2 as i64)?)?
                    .mul(&bb)?
                    .mul_q(d.pref)
                    .scale_i64(sign)
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "Prop 5.3 has cases 1..6, got {case}"
            )))
        }
    };
    Ok(TraceResult {
        value,
        provenance: Provenance::ClosedForm,
        sign_convention: conv,
    })
}

/// Prop 5.2 read as "Tr = 0 unless": true iff the classification of `rep` is
/// insufficient for the regime of λ (type I everywhere; type II additionally
/// allowed when (p₁,p₂) ∈ {(n/2,n/2), (n/2±1,n/2∓1)} with n even).
pub fn vanishing_predicate(rep: &RepDescriptor, lambda: &SlopeVector) -> Result<bool> {
    let sl = lambda.slopes();
    if sl.len() != 2 {
        return Err(Error::Domain("Prop 5.2 concerns two-slope λ".into()));
    }
    let blocks = lambda.blocks();
    let (p1, p2) = (blocks.parts()[0], blocks.parts()[1]);
    let n = p1 + p2;
    let type_ii_regime = n % 2 == 0
        && ((p1, p2) == (n / 2, n / 2)
            || (p1, p2) == (n / 2 + 1, n / 2 - 1)
            || (p1, p2) == (n / 2 - 1, n / 2 + 1));
    let cls = classify_type(rep, p1, p2)?;
    let allowed = match cls {
        Classification::TypeI => true,
        Classification::TypeII => type_ii_regime,
        Classification::Neither => false,
    };
    Ok(!allowed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(p1: usize, s1: usize, p2: usize, s2: usize) -> SlopeVector {
        SlopeVector::two_slope(p1, s1, p2, s2).unwrap()
    }

    #[test]
    fn case1_gl2() {
        let lambda = lam(1, 1, 1, 0);
        let rep = RepDescriptor::SteinbergTwist(2, CharSpec::unit("z"));
        let eng = truncated_trace(&lambda, 1, 1, &rep).unwrap();
        assert_eq!(eng.value.canonical_string(), "z^1");
        let params = ClosedFormParams {
            alpha: 1,
            lambda: lambda.clone(),
            chars: vec![CharSpec::unit("z")],
        };
        let cf = closed_form_trace(1, &params, SignConvention::Proof).unwrap();
        assert_eq!(cf.value.canonical_string(), "z^1");
        let cf = closed_form_trace(1, &params, SignConvention::Statement).unwrap();
        assert_eq!(cf.value.canonical_string(), "-z^1");
    }

    #[test]
    fn case1_gl3_engine_matches() {
        let lambda = lam(2, 1, 1, 0);
        let rep = RepDescriptor::SteinbergTwist(3, CharSpec::unit("z"));
        let eng = truncated_trace(&lambda, 1, 1, &rep).unwrap();
        let params = ClosedFormParams {
            alpha: 1,
            lambda,
            chars: vec![CharSpec::unit("z")],
        };
        let cf = closed_form_trace(1, &params, SignConvention::Proof).unwrap();
        assert_eq!(eng.value, cf.value);
        assert_eq!(eng.value.canonical_string(), "-q^1*z^1");
    }

    #[test]
    fn case2_gl2() {
        let lambda = lam(1, 1, 1, 0);
        let rep = RepDescriptor::TrivialTwist(2, CharSpec::unit("z"));
        let eng = truncated_trace(&lambda, 1, 1, &rep).unwrap();
        assert_eq!(eng.value.canonical_string(), "q^1*z^1");
        let params = ClosedFormParams {
            alpha: 1,
            lambda,
            chars: vec![CharSpec::unit("z")],
        };
        let cf = closed_form_trace(2, &params, SignConvention::Proof).unwrap();
        assert_eq!(eng.value, cf.value);
    }

    #[test]
    fn case3_needs_even_n() {
        let params = ClosedFormParams {
            alpha: 1,
            lambda: lam(3, 2, 2, 1),
            chars: vec![CharSpec::unit("z")],
        };
        let err = closed_form_trace(3, &params, SignConvention::Proof).unwrap_err();
        assert!(err.to_string().contains("Prop 5.3(3) requires n even"));
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn case5_engine_matches_closed_form() {
        for (p1, s1, p2, s2) in [(2usize, 1usize, 1usize, 0usize), (3, 2, 2, 1), (3, 2, 3, 1)] {
            let lambda = lam(p1, s1, p2, s2);
            let rep = RepDescriptor::StandardModule(vec![
                StdBlock {
                    tag: BlockTag::St,
                    m: p1,
                    char_: CharSpec::unit("z1"),
                },
                StdBlock {
                    tag: BlockTag::St,
                    m: p2,
                    char_: CharSpec::unit("z2"),
                },
            ]);
            let s = s1 + s2;
            let eng = truncated_trace(&lambda, 1, s, &rep).unwrap();
            let params = ClosedFormParams {
                alpha: 1,
                lambda,
                chars: vec![CharSpec::unit("z1"), CharSpec::unit("z2")],
            };
            let cf = closed_form_trace(5, &params, SignConvention::Proof).unwrap();
            assert_eq!(eng.value, cf.value, "(p1,s1,p2,s2)=({p1},{s1},{p2},{s2})");
        }
    }

    #[test]
    fn speh_three_three_vanishes() {
        let lambda = lam(5, 2, 4, 1);
        let rep = RepDescriptor::Speh {
            x: 3,
            y: 3,
            char_: CharSpec::unit("z"),
        };
        let t = truncated_trace(&lambda, 1, 3, &rep).unwrap();
        assert!(t.value.is_zero());
        assert!(!crate::heckeops::iwahori_predicate(&t.value));
        assert!(vanishing_predicate(&rep, &lambda).unwrap());
    }

    #[test]
    fn speh_two_y_matches_case3() {
        for y in [3usize, 4] {
            let rep = RepDescriptor::Speh {
                x: 2,
                y,
                char_: CharSpec::unit("z"),
            };
            for (p1, p2) in [(y, y), (y + 1, y - 1)] {
                // pick coprime s_i with s1/p1 > s2/p2
                let (s1, s2) = (p1 - 1, 1);
                if s1.gcd(&p1) != 1 || rat(s1 as i64, p1 as i64) <= rat(s2 as i64, p2 as i64) {
                    continue;
                }
                let lambda = lam(p1, s1, p2, s2);
                let eng = truncated_trace(&lambda, 1, s1 + s2, &rep).unwrap();
                let params = ClosedFormParams {
                    alpha: 1,
                    lambda,
                    chars: vec![CharSpec::unit("z")],
                };
                let cf = closed_form_trace(3, &params, SignConvention::Proof).unwrap();
                assert_eq!(eng.value, cf.value, "y={y}, (p1,p2)=({p1},{p2})");
            }
        }
    }

    #[test]
    fn linearity_over_virtual_reps() {
        let lambda = lam(1, 1, 1, 0);
        let ctx = VarCtx::new(0, vec!["z".to_string()]);
        let st = normalize(&RepDescriptor::SteinbergTwist(2, CharSpec::unit("z"))).unwrap();
        let triv = normalize(&RepDescriptor::TrivialTwist(2, CharSpec::unit("z"))).unwrap();
        let combo = st.scale(3).add(&triv.scale(-2));
        let t_combo = truncated_trace_virtual(&lambda, 1, 1, &combo, &ctx).unwrap();
        let t_st = truncated_trace_virtual(&lambda, 1, 1, &st, &ctx).unwrap();
        let t_triv = truncated_trace_virtual(&lambda, 1, 1, &triv, &ctx).unwrap();
        let expect = t_st
            .value
            .scale_i64(3)
            .add(&t_triv.value.scale_i64(-2))
            .unwrap();
        assert_eq!(t_combo.value, expect);
    }

    #[test]
    fn unsupported_non_coprime_proper_induction() {
        // Ind(St_2 ⊗ St_2) on GL_4 against λ-block (4) with s = 2:
        // gcd(2,4) = 2 and the term is properly induced
        let lambda = SlopeVector::new(vec![(rat(1, 2), 4)]).unwrap();
        let rep = RepDescriptor::StandardModule(vec![
            StdBlock {
                tag: BlockTag::St,
                m: 2,
                char_: CharSpec::unit("z1"),
            },
            StdBlock {
                tag: BlockTag::St,
                m: 2,
                char_: CharSpec::unit("z2"),
            },
        ]);
        let err = truncated_trace(&lambda, 1, 2, &rep).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("Prop 5.1"));
    }
}
