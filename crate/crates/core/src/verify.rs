//! Property suites A1–A10: independent-oracle checks of Props 3.1–3.3,
//! 4.1–4.4, 5.1–5.3 and the Theorem 6.1 skeleton, each reported as one
//! deterministic pass/fail line.

use itertools::Itertools;
use num_integer::Integer;
use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::Result;
use crate::heckeops::{
    chi_truncated_ct, constant_term, kottwitz_poly, newton_truncated_ct, SlopeVector,
};
use crate::polyring::{rat, LaurentPoly, Rat, VarCtx};
use crate::repmodel::{BlockTag, CharSpec, RepDescriptor, StdBlock};
use crate::spectral::{aggregate_trace, load_spectrum};
use crate::symcomb::{
    all_strict_compositions, brute_double_cosets, inversions, min_coset_reps, tableau_from_perm,
    Composition, Flavor, Permutation, RowTableau,
};
use crate::traceengine::{
    closed_form_trace, truncated_trace, ClosedFormParams, SignConvention,
};

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        format!(
            "{}: {} — {}",
            self.id,
            if self.passed { "pass" } else { "FAIL" },
            self.detail
        )
    }
}

fn report(id: &'static str, outcome: Result<(bool, String)>) -> CriterionReport {
    match outcome {
        Ok((passed, detail)) => CriterionReport { id, passed, detail },
        Err(e) => CriterionReport {
            id,
            passed: false,
            detail: format!("errored: {e}"),
        },
    }
}

/// A1 (Prop 4.1): inversions(w) equals the BFS distance from the identity in
/// the Cayley graph on adjacent transpositions, for all w ∈ S_n, n ≤ 7.
fn a1() -> Result<(bool, String)> {
    let mut checked = 0usize;
    for n in 1..=7usize {
        let gens: Vec<Permutation> = (1..n).map(|i| Permutation::transposition(n, i, i + 1)).collect();
        let mut dist: HashMap<Permutation, usize> = HashMap::new();
        let id = Permutation::identity(n);
        dist.insert(id.clone(), 0);
        let mut queue = VecDeque::new();
        queue.push_back(id);
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            for g in &gens {
                let v = u.compose(g);
                if !dist.contains_key(&v) {
                    dist.insert(v.clone(), d + 1);
                    queue.push_back(v);
                }
            }
        }
        for (w, &d) in &dist {
            if inversions(w) != d {
                return Ok((false, format!("mismatch at n={n}, w={}", w.one_line())));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} permutations, n ≤ 7")))
}

/// A2 (Props 4.2–4.3): unique length-minima of brute-forced double cosets
/// match min_coset_reps, and the tableau map is a bijection.
fn a2() -> Result<(bool, String)> {
    let mut pairs = 0usize;
    for n in 1..=6usize {
        let comps = all_strict_compositions(n);
        for lam in &comps {
            for nu in &comps {
                let cosets = brute_double_cosets(lam, nu)?;
                let mut minima = Vec::new();
                for coset in &cosets {
                    let min_len = coset.iter().map(inversions).min().unwrap();
                    let mins: Vec<&Permutation> =
                        coset.iter().filter(|w| inversions(w) == min_len).collect();
                    if mins.len() != 1 {
                        return Ok((
                            false,
                            format!(
                                "non-unique minimum: n={n}, λ={}, ν={}",
                                lam.render(),
                                nu.render()
                            ),
                        ));
                    }
                    minima.push(mins[0].clone());
                }
                minima.sort();
                let mut reps = min_coset_reps(lam, nu)?;
                reps.sort();
                if reps != minima {
                    return Ok((
                        false,
                        format!("rep sets differ: n={n}, λ={}, ν={}", lam.render(), nu.render()),
                    ));
                }
                // bijection: counts equal and perm → tableau → perm round-trips
                let tableaux = RowTableau::enumerate_rss(lam, nu)?;
                if tableaux.len() != cosets.len() {
                    return Ok((
                        false,
                        format!("count mismatch: n={n}, λ={}, ν={}", lam.render(), nu.render()),
                    ));
                }
                for w in &reps {
                    let t = tableau_from_perm(w, lam, nu)?;
                    if &crate::symcomb::perm_from_tableau(&t)? != w {
                        return Ok((false, format!("round-trip failed at w={}", w.one_line())));
                    }
                }
                pairs += 1;
            }
        }
    }
    Ok((true, format!("{pairs} (λ,ν) pairs, n ≤ 6")))
}

/// A3 (Prop 4.4): |intersection_composition(w,ν,λ)| = Σ_i N(wT, i), the total
/// number of distinct entries per row; includes the paper's (2,2,1) example.
fn a3() -> Result<(bool, String)> {
    // the §4 worked example: shape (5,2,3), type (3,3,4),
    // w = (2,3,4)(6,7) in one-line form, N(wT) = (2,2,1)
    let w = Permutation::from_images(vec![1, 3, 4, 2, 5, 7, 6, 8, 9, 10])?;
    let shape = Composition::strict(vec![5, 2, 3])?;
    let typ = Composition::strict(vec![3, 3, 4])?;
    let t = tableau_from_perm(&w, &shape, &typ)?;
    let counts: Vec<usize> = t.distinct_row_entries();
    if counts != vec![2, 2, 1] {
        return Ok((false, format!("paper example gave {counts:?}, expected [2, 2, 1]")));
    }
    let mut checked = 0usize;
    for n in 1..=6usize {
        let comps = all_strict_compositions(n);
        for nu in &comps {
            for lam in &comps {
                for w in min_coset_reps(nu, lam)? {
                    let inner = crate::symcomb::intersection_composition(&w, nu, lam)?;
                    let t = tableau_from_perm(&w, nu, lam)?;
                    let total: usize = t.distinct_row_entries().iter().sum();
                    if inner.len() != total {
                        return Ok((
                            false,
                            format!(
                                "length {} ≠ ΣN = {total} at n={n}, w={}",
                                inner.len(),
                                w.one_line()
                            ),
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok((true, format!("paper example + {checked} minimal w, n ≤ 6")))
}

type TermKey = (Rat, Vec<(usize, usize)>);

fn term_multiset(terms: &[crate::heckeops::LeviTerm]) -> BTreeMap<TermKey, usize> {
    let mut out = BTreeMap::new();
    for t in terms {
        let key: TermKey = (
            t.q_exp,
            t.blocks.iter().map(|b| (b.n, b.s)).collect(),
        );
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

fn refinements(parts: &[usize]) -> Vec<Vec<Vec<usize>>> {
    // all ways to refine each part into a strict composition
    let refine_one = |p: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for k in 1..=p {
            if let Ok(cs) = crate::symcomb::enumerate_compositions(p, k, Flavor::Strict, None) {
                out.extend(cs.into_iter().map(|c| c.parts().to_vec()));
            }
        }
        out
    };
    let choices: Vec<Vec<Vec<usize>>> = parts.iter().map(|&p| refine_one(p)).collect();
    choices
        .iter()
        .multi_cartesian_product()
        .map(|combo| combo.into_iter().cloned().collect())
        .collect()
}

/// A4 (Prop 3.1 + §2 injectivity): flattened constant terms reproduce the
/// Kottwitz polynomial, and constant terms are transitive along nested
/// parabolics as formal Levi sums.
fn a4() -> Result<(bool, String)> {
    let mut flatten_checks = 0usize;
    let mut transitivity_checks = 0usize;
    for n in 1..=6usize {
        let comps = all_strict_compositions(n);
        for alpha in 1..=3usize {
            for s in 0..=n {
                let f = kottwitz_poly(n, alpha, s)?;
                for p in &comps {
                    let ct = constant_term(n, alpha, s, p)?;
                    if ct.flatten()? != f {
                        return Ok((
                            false,
                            format!("flatten mismatch: n={n}, α={alpha}, s={s}, P={}", p.render()),
                        ));
                    }
                    flatten_checks += 1;
                }
                // transitivity: coarse P, fine Q refining P blockwise
                if alpha > 1 {
                    continue; // the C-constant identity is α-linear; α = 1 suffices
                }
                for p in &comps {
                    for groups in refinements(p.parts()) {
                        let q_parts: Vec<usize> = groups.iter().flatten().copied().collect();
                        let q = Composition::strict(q_parts)?;
                        if q.parts() == p.parts() {
                            continue;
                        }
                        let direct = constant_term(n, alpha, s, &q)?;
                        // two-step: constant term to P, then blockwise to Q
                        let mut two_step: Vec<crate::heckeops::LeviTerm> = Vec::new();
                        let outer = constant_term(n, alpha, s, p)?;
                        for t in &outer.terms {
                            let inner_sums: Vec<crate::heckeops::LeviSum> = t
                                .blocks
                                .iter()
                                .zip(&groups)
                                .map(|(b, g)| {
                                    constant_term(
                                        b.n,
                                        alpha,
                                        b.s,
                                        &Composition::strict(g.clone()).unwrap(),
                                    )
                                })
                                .collect::<Result<_>>()?;
                            for combo in inner_sums
                                .iter()
                                .map(|ls| ls.terms.iter())
                                .multi_cartesian_product()
                            {
                                let mut q_exp = t.q_exp;
                                let mut blocks = Vec::new();
                                for it in combo {
                                    q_exp += it.q_exp;
                                    blocks.extend(it.blocks.iter().copied());
                                }
                                two_step.push(crate::heckeops::LeviTerm { q_exp, blocks });
                            }
                        }
                        if term_multiset(&direct.terms) != term_multiset(&two_step) {
                            return Ok((
                                false,
                                format!(
                                    "transitivity failed: n={n}, s={s}, P={}, Q={}",
                                    p.render(),
                                    q.render()
                                ),
                            ));
                        }
                        transitivity_checks += 1;
                    }
                }
            }
        }
    }
    Ok((
        true,
        format!("{flatten_checks} flatten checks (α ≤ 3), {transitivity_checks} nested pairs"),
    ))
}

fn slope_vectors_up_to(n: usize, max_blocks: usize) -> Vec<SlopeVector> {
    let mut out = Vec::new();
    for k in 1..=max_blocks {
        for blocks in crate::symcomb::enumerate_compositions(n, k, Flavor::Strict, None)
            .unwrap_or_default()
        {
            let ranges: Vec<Vec<usize>> = blocks.parts().iter().map(|&ni| (0..=ni).collect()).collect();
            for svec in ranges.iter().multi_cartesian_product() {
                let pairs: Vec<(Rat, usize)> = blocks
                    .parts()
                    .iter()
                    .zip(&svec)
                    .map(|(&ni, &&si)| (rat(si as i64, ni as i64), ni))
                    .collect();
                if pairs.windows(2).all(|w| w[0].0 > w[1].0) {
                    out.push(SlopeVector::new(pairs).unwrap());
                }
            }
        }
    }
    out
}

/// A5 (Prop 3.3(1)): the slope truncation kills every standard P ≠ P_λ and
/// leaves the single displayed term at P = P_λ.
fn a5() -> Result<(bool, String)> {
    let mut zero_checks = 0usize;
    let mut survivor_checks = 0usize;
    for n in 2..=6usize {
        let comps = all_strict_compositions(n);
        for lambda in slope_vectors_up_to(n, 3) {
            let s = lambda.s();
            for p in &comps {
                let out = newton_truncated_ct(&lambda, p, n, 1, s)?;
                if p.parts() == lambda.blocks().parts() {
                    if out.terms.len() != 1
                        || out.terms[0]
                            .blocks
                            .iter()
                            .map(|b| b.s)
                            .ne(lambda.s_parts())
                    {
                        return Ok((
                            false,
                            format!("P_λ survivor wrong: λ={}, P={}", lambda.render(), p.render()),
                        ));
                    }
                    survivor_checks += 1;
                } else {
                    if !out.terms.is_empty() {
                        return Ok((
                            false,
                            format!("nonzero at P≠P_λ: λ={}, P={}", lambda.render(), p.render()),
                        ));
                    }
                    zero_checks += 1;
                }
            }
        }
    }
    Ok((
        true,
        format!("{zero_checks} vanishing + {survivor_checks} survivor checks, ≤ 3 slopes, n ≤ 6"),
    ))
}

/// A6 (Prop 5.1): with (s,n) = 1 the compact part of the constant term along
/// any proper parabolic flattens to zero.
fn a6() -> Result<(bool, String)> {
    let mut checked = 0usize;
    for n in 2..=6usize {
        let comps = all_strict_compositions(n);
        for s in 1..n {
            if s.gcd(&n) != 1 {
                continue;
            }
            for alpha in 1..=3usize {
                for p in &comps {
                    if p.len() == 1 {
                        continue;
                    }
                    let compact = constant_term(n, alpha, s, p)?.compact_filter_global();
                    if !compact.flatten()?.is_zero() {
                        return Ok((
                            false,
                            format!("nonzero compact part: n={n}, s={s}, α={alpha}, P={}", p.render()),
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok((true, format!("{checked} proper parabolics, (s,n)=1, n ≤ 6, α ≤ 3")))
}

fn two_slope_sweep(n: usize, coprime: bool) -> Vec<SlopeVector> {
    let mut out = Vec::new();
    for p1 in 1..n {
        let p2 = n - p1;
        for s1 in 0..=p1 {
            for s2 in 0..=p2 {
                if rat(s1 as i64, p1 as i64) <= rat(s2 as i64, p2 as i64) {
                    continue;
                }
                let s = s1 + s2;
                if s == 0 || s >= n {
                    continue;
                }
                if coprime && (s1.gcd(&p1) != 1 || s2.gcd(&p2) != 1) {
                    continue;
                }
                out.push(SlopeVector::two_slope(p1, s1, p2, s2).unwrap());
            }
        }
    }
    out
}

struct CrossCheck {
    instances: usize,
    deltas: Vec<String>,
}

fn cross_check_case(
    case: u8,
    rep: &RepDescriptor,
    chars: Vec<CharSpec>,
    lambda: &SlopeVector,
    alpha: usize,
    acc: &mut CrossCheck,
) -> Result<Option<String>> {
    let s = lambda.s();
    let eng = truncated_trace(lambda, alpha, s, rep)?;
    let params = ClosedFormParams {
        alpha,
        lambda: lambda.clone(),
        chars,
    };
    let cf = closed_form_trace(case, &params, SignConvention::Proof)?;
    if eng.value != cf.value {
        return Ok(Some(format!(
            "case {case}: engine ≠ closed form (proof sign) at λ={}, α={alpha}, rep={}",
            lambda.render(),
            rep.render()
        )));
    }
    let st = closed_form_trace(case, &params, SignConvention::Statement)?;
    if st.value != cf.value {
        let tag = format!("case {case} λ-shape {}", lambda.blocks().render());
        if st.value == cf.value.scale_i64(-1) {
            if !acc.deltas.iter().any(|d| d.starts_with(&tag)) {
                acc.deltas.push(format!("{tag}: statement = -proof"));
            }
        } else {
            return Ok(Some(format!(
                "case {case}: statement sign differs non-globally at λ={}",
                lambda.render()
            )));
        }
    }
    acc.instances += 1;
    Ok(None)
}

/// A7 (Prop 5.3): engine path equals closed-form path for all six cases
/// (n ≤ 6, α ≤ 2, symbolic characters) under the proof-chain sign; statement
/// signs may differ only by the documented global flips, which are reported.
fn a7() -> Result<(bool, String)> {
    let mut acc = CrossCheck {
        instances: 0,
        deltas: Vec::new(),
    };
    for alpha in 1..=2usize {
        // cases 1 and 2
        for n in 2..=6usize {
            for lambda in two_slope_sweep(n, false) {
                let c = CharSpec::unit("z");
                for (case, rep) in [
                    (1u8, RepDescriptor::SteinbergTwist(n, c.clone())),
                    (2u8, RepDescriptor::TrivialTwist(n, c.clone())),
                ] {
                    if let Some(fail) =
                        cross_check_case(case, &rep, vec![c.clone()], &lambda, alpha, &mut acc)?
                    {
                        return Ok((false, fail));
                    }
                }
            }
        }
        // case 3 (n = 6, y = 3) and case 4 (n = 4 and 6)
        for (case, x, y) in [(3u8, 2usize, 3usize), (4, 2, 2), (4, 3, 2)] {
            let n = x * y;
            let h = n / 2;
            let c = CharSpec::unit("z");
            let rep = RepDescriptor::Speh { x, y, char_: c.clone() };
            for (p1, p2) in [(h, h), (h + 1, h - 1), (h - 1, h + 1)] {
                if p2 == 0 {
                    continue;
                }
                for lambda in two_slope_sweep(n, true) {
                    if lambda.blocks().parts() != [p1, p2] {
                        continue;
                    }
                    if let Some(fail) =
                        cross_check_case(case, &rep, vec![c.clone()], &lambda, alpha, &mut acc)?
                    {
                        return Ok((false, fail));
                    }
                }
            }
        }
        // cases 5 and 6, including a balanced-twist branch for p1 = p2
        for n in 2..=6usize {
            for lambda in two_slope_sweep(n, true) {
                let blocks = lambda.blocks();
                let (p1, p2) = (blocks.parts()[0], blocks.parts()[1]);
                let mut char_pairs = vec![(CharSpec::unit("z1"), CharSpec::unit("z2"))];
                if p1 == p2 {
                    let mut up = CharSpec::unit("z1");
                    up.shift = rat(1, 4);
                    let mut down = CharSpec::unit("z1");
                    down.shift = rat(-1, 4);
                    char_pairs.push((up, down)); // the r-twist branch, ε₁ = ε₂
                }
                for (c1, c2) in char_pairs {
                    for (case, tag) in [(5u8, BlockTag::St), (6u8, BlockTag::Triv)] {
                        let rep = RepDescriptor::StandardModule(vec![
                            StdBlock { tag, m: p1, char_: c1.clone() },
                            StdBlock { tag, m: p2, char_: c2.clone() },
                        ]);
                        if let Some(fail) = cross_check_case(
                            case,
                            &rep,
                            vec![c1.clone(), c2.clone()],
                            &lambda,
                            alpha,
                            &mut acc,
                        )? {
                            return Ok((false, fail));
                        }
                    }
                }
            }
        }
    }
    acc.deltas.sort();
    let delta_report = if acc.deltas.is_empty() {
        "no sign deltas".to_string()
    } else {
        format!("sign deltas: [{}]", acc.deltas.join("; "))
    };
    Ok((true, format!("{} instances exact under proof sign; {delta_report}", acc.instances)))
}

/// A8 (Prop 5.2 + Speh): Speh(2,y) engine traces reproduce the case-3 closed
/// forms for y ∈ {3,4,5} in both λ-shapes; Speh(3,3) traces vanish under
/// coprime two-slope λ.
fn a8() -> Result<(bool, String)> {
    let mut acc = CrossCheck {
        instances: 0,
        deltas: Vec::new(),
    };
    for y in [3usize, 4, 5] {
        let n = 2 * y;
        let c = CharSpec::unit("z");
        let rep = RepDescriptor::Speh { x: 2, y, char_: c.clone() };
        for (p1, p2) in [(y, y), (y + 1, y - 1), (y - 1, y + 1)] {
            for lambda in two_slope_sweep(n, true) {
                if lambda.blocks().parts() != [p1, p2] {
                    continue;
                }
                if let Some(fail) =
                    cross_check_case(3, &rep, vec![c.clone()], &lambda, 1, &mut acc)?
                {
                    return Ok((false, fail));
                }
            }
        }
    }
    // Speh(3,3) on GL_9 vanishes for every coprime two-slope λ
    let rep = RepDescriptor::Speh {
        x: 3,
        y: 3,
        char_: CharSpec::unit("z"),
    };
    let mut vanish_checks = 0usize;
    for lambda in two_slope_sweep(9, true) {
        let t = truncated_trace(&lambda, 1, lambda.s(), &rep)?;
        if !t.value.is_zero() {
            return Ok((false, format!("Speh(3,3) nonzero at λ={}", lambda.render())));
        }
        vanish_checks += 1;
    }
    acc.deltas.sort();
    let delta_report = if acc.deltas.is_empty() {
        "no sign deltas".to_string()
    } else {
        format!("statement-sign deltas: [{}]", acc.deltas.join("; "))
    };
    Ok((
        true,
        format!(
            "{} Speh(2,y) instances exact under proof sign, {} Speh(3,3) vanishing checks; {delta_report}",
            acc.instances, vanish_checks
        ),
    ))
}

/// A9 (Theorem 6.1 skeleton): a 3-entry synthetic spectrum aggregates to the
/// hand-assembled combination, and ker1 scales linearly.
fn a9() -> Result<(bool, String)> {
    let text = r#"{"n":4,"p1":3,"p2":1,"s":2,"ker1":2,
        "entries":[{"rep":"St(4;eps|0)","cpi":"1","zeta":"0/1"},
                   {"rep":"Triv(4;eps|0)","cpi":"-1/2","zeta":"1/2"},
                   {"rep":"Std[St(3;e1|0),St(1;e2|0)]","cpi":"1/3","zeta":"1/4"}]}"#;
    let spec = load_spectrum(text.as_bytes())?;
    let lambda = SlopeVector::two_slope(3, 2, 1, 0)?;
    let out = aggregate_trace(1, &lambda, &spec)?;
    // hand assembly: common denominator 6, symbols include zeta_4
    let ctx = VarCtx::new(
        0,
        vec![
            "e1".into(),
            "e2".into(),
            "eps".into(),
            "zeta_4".into(),
        ],
    );
    let tr = |src: &str| -> Result<LaurentPoly> {
        let rep = RepDescriptor::parse(src)?;
        let v = crate::repmodel::normalize(&rep)?;
        Ok(crate::traceengine::truncated_trace_virtual(&lambda, 1, 2, &v, &ctx)?.value)
    };
    let t1 = tr("St(4;eps|0)")?;
    let t2 = tr("Triv(4;eps|0)")?;
    let t3 = tr("Std[St(3;e1|0),St(1;e2|0)]")?;
    let zeta4 = LaurentPoly::symbol(&ctx, "zeta_4")?;
    let hand = t1
        .scale_i64(6)
        .add(&t2.scale_i64(3))? // −1/2 · (−1)^α with α = 1 → +1/2, times denom 6
        .add(&t3.scale_i64(2).mul(&zeta4)?)?
        .scale_i64(2); // ker1
    if out.denom != 6 || out.poly != hand {
        return Ok((false, "aggregate differs from hand assembly".into()));
    }
    // doubling ker1 doubles the polynomial
    let doubled_text = text.replace("\"ker1\":2", "\"ker1\":4");
    let doubled = aggregate_trace(1, &lambda, &load_spectrum(doubled_text.as_bytes())?)?;
    if doubled.poly != out.poly.scale_i64(2) {
        return Ok((false, "ker1 scaling failed".into()));
    }
    Ok((true, "3-entry spectrum matches hand assembly; ker1 scaling exact".into()))
}

/// A10 (determinism): the verify report and a canonical-string sample are
/// byte-identical across two consecutive in-process runs.
fn a10() -> Result<(bool, String)> {
    let sample = || -> Result<String> {
        let mut lines = Vec::new();
        lines.push(kottwitz_poly(4, 2, 2)?.canonical_string());
        let lambda = SlopeVector::two_slope(4, 3, 2, 1)?;
        let rep = RepDescriptor::parse("Speh(2,3;eps|0)")?;
        lines.push(truncated_trace(&lambda, 1, 4, &rep)?.render());
        let p = Composition::strict(vec![2, 2])?;
        lines.push(chi_truncated_ct(&Composition::strict(vec![4])?, &p, 4, 1, 2)?.render());
        Ok(lines.join("\n"))
    };
    let first = sample()?;
    let second = sample()?;
    if first != second {
        return Ok((false, "sample outputs differ between runs".into()));
    }
    Ok((true, "sample outputs byte-identical across two runs".into()))
}

pub const SUITE_IDS: [&str; 10] = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"];

/// Run the selected criteria (all of them when `filter` is None), in order.
pub fn run_suite(filter: Option<&str>) -> Vec<CriterionReport> {
    let wanted = |id: &str| filter.map_or(true, |f| f.eq_ignore_ascii_case(id));
    let mut out = Vec::new();
    if wanted("A1") {
        out.push(report("A1", a1()));
    }
    if wanted("A2") {
        out.push(report("A2", a2()));
    }
    if wanted("A3") {
        out.push(report("A3", a3()));
    }
    if wanted("A4") {
        out.push(report("A4", a4()));
    }
    if wanted("A5") {
        out.push(report("A5", a5()));
    }
    if wanted("A6") {
        out.push(report("A6", a6()));
    }
    if wanted("A7") {
        out.push(report("A7", a7()));
    }
    if wanted("A8") {
        out.push(report("A8", a8()));
    }
    if wanted("A9") {
        out.push(report("A9", a9()));
    }
    if wanted("A10") {
        out.push(report("A10", a10()));
    }
    out
}

/// Informational diagnostic: does Σ over all admissible slope rays of
/// Tr(C_λ f_{nαs}, π) recover the untruncated trace? Reported, not asserted
/// (the answer depends on support conventions the paper leaves implicit).
pub fn ray_sum_diagnostic() -> String {
    let run = |rep_src: &str, n: usize, s: usize| -> Result<String> {
        let rep = RepDescriptor::parse(rep_src)?;
        let ctx = VarCtx::new(0, rep.symbols());
        let v = crate::repmodel::normalize(&rep)?;
        let mut total = LaurentPoly::zero(&ctx);
        let mut rays = 0usize;
        for lambda in slope_vectors_up_to(n, n) {
            if lambda.s() != s {
                continue;
            }
            let t = crate::traceengine::truncated_trace_virtual(&lambda, 1, s, &v, &ctx)?;
            total = total.add(&t.value)?;
            rays += 1;
        }
        Ok(format!(
            "ray-sum {rep_src} (n={n}, s={s}, α=1, {rays} rays): {}",
            total.canonical_string()
        ))
    };
    let mut lines = vec![
        "# informational: whether Σ_λ Tr(C_λ f_{nαs}, π) recovers the untruncated trace".to_string(),
    ];
    for (rep, n, s) in [("St(2;z|0)", 2usize, 1usize), ("Triv(2;z|0)", 2, 1), ("St(3;z|0)", 3, 1)] {
        match run(rep, n, s) {
            Ok(line) => lines.push(line),
            Err(e) => lines.push(format!("ray-sum {rep}: errored: {e}")),
        }
    }
    // reference points: Tr(f_{nαs}, 1_{GL_n}(z)) is the Satake evaluation
    let ctx = VarCtx::new(0, vec!["z".to_string()]);
    if let (Ok(f), Ok(z)) = (kottwitz_poly(2, 1, 1), LaurentPoly::symbol(&ctx, "z")) {
        let pts = vec![
            Some(z.mul_q(rat(-1, 2))),
            Some(z.mul_q(rat(1, 2))),
        ];
        if let Ok(v) = f.substitute_into(&pts, &ctx) {
            lines.push(format!(
                "reference Satake evaluation Tr(f_{{2,1,1}}, 1_GL2(z)): {}",
                v.canonical_string()
            ));
        }
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_criteria_pass() {
        // the fast criteria run as unit tests; the full sweep lives in the
        // acceptance test target
        for rep in run_suite(Some("A9")) {
            assert!(rep.passed, "{}", rep.line());
        }
        for rep in run_suite(Some("A10")) {
            assert!(rep.passed, "{}", rep.line());
        }
    }
}
