//! Kottwitz functions and the truncation calculus of §3.
//!
//! The Kottwitz function f_{nαs} has Satake transform
//! q^{αs(n−s)/2} Σ_{|I|=s} Π_{i∈I} X_i^α. Its constant term along a standard
//! parabolic re-expands blockwise over extended compositions of s (Prop 3.1);
//! the χ and χ̂ truncations keep the strictly-decreasing-slope and
//! strictly-slope-deficient terms respectively (Prop 3.2); slope truncation by
//! a Newton vector λ kills every constant term except the one along P_λ
//! (Prop 3.3), which Cor 3.4 converts into a compact trace on the Levi M_λ.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::polyring::{rat, LaurentPoly, Rat, VarCtx};
use crate::symcomb::{enumerate_compositions, Composition, Constraint, Flavor};
use std::sync::Arc;

/// One Kottwitz block factor f_{n,α,s}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockFn {
    pub n: usize,
    pub alpha: usize,
    pub s: usize,
}

impl BlockFn {
    /// Satake transform embedded at variable offset `off` inside an ambient
    /// context: q^{αs(n−s)/2} Σ_{I⊆{off+1..off+n},|I|=s} Π X_i^α.
    pub fn flatten_at(&self, ctx: &Arc<VarCtx>, off: usize) -> Result<LaurentPoly> {
        if self.s > self.n {
            return Err(Error::Domain(format!(
                "f_{{{},{},{}}}: s out of range",
                self.n, self.alpha, self.s
            )));
        }
        let pref = rat(
            (self.alpha * self.s) as i64 * (self.n - self.s) as i64,
            2,
        );
        let mut sum = LaurentPoly::zero(ctx);
        for subset in (1..=self.n).combinations(self.s) {
            let mut term = LaurentPoly::one(ctx);
            for i in subset {
                let mut x = LaurentPoly::one(ctx);
                for _ in 0..self.alpha {
                    x = x.mul(&LaurentPoly::x_var(ctx, off + i))?;
                }
                term = term.mul(&x)?;
            }
            sum = sum.add(&term)?;
        }
        Ok(sum.mul_q(pref))
    }

    pub fn render(&self) -> String {
        format!("f({},{},{})", self.n, self.alpha, self.s)
    }
}

/// One term of a Levi-level expansion: q-prefactor exponent and a tensor of
/// Kottwitz block factors along the Levi's blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviTerm {
    pub q_exp: Rat,
    pub blocks: Vec<BlockFn>,
}

impl LeviTerm {
    /// The slope s_i/n_i of each block.
    pub fn slopes(&self) -> Vec<Rat> {
        self.blocks
            .iter()
            .map(|b| rat(b.s as i64, b.n as i64))
            .collect()
    }

    /// Slope profile expanded to an n-vector (slope repeated n_i times).
    pub fn profile(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for b in &self.blocks {
            out.extend(std::iter::repeat(rat(b.s as i64, b.n as i64)).take(b.n));
        }
        out
    }

    pub fn render(&self) -> String {
        let pref = if self.q_exp == Rat::from_integer(0) {
            "1".to_string()
        } else if self.q_exp.is_integer() {
            format!("q^{}", self.q_exp.numer())
        } else {
            format!("q^({}/{})", self.q_exp.numer(), self.q_exp.denom())
        };
        let blocks = self.blocks.iter().map(|b| b.render()).join(" (x) ");
        format!("{pref} * {blocks}")
    }
}

/// A formal sum of Levi-level terms over a fixed block structure; the
/// `compact` flag marks multiplication by the characteristic function C_c of
/// the compact elements (Def 3.1) — a support condition consumed only by the
/// trace engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSum {
    pub levi: Composition,
    pub terms: Vec<LeviTerm>,
    pub compact: bool,
}

impl LeviSum {
    /// Flatten every term to the ambient polynomial ring and sum.
    pub fn flatten(&self) -> Result<LaurentPoly> {
        let n = self.levi.total();
        let ctx = VarCtx::x_only(n);
        let offsets = self.levi.prefix_sums();
        let mut acc = LaurentPoly::zero(&ctx);
        for t in &self.terms {
            let mut prod = LaurentPoly::q_pow(&ctx, t.q_exp);
            for (i, b) in t.blocks.iter().enumerate() {
                prod = prod.mul(&b.flatten_at(&ctx, offsets[i])?)?;
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// Restrict to terms supported on the compact set of the full group:
    /// eigenvalue norms constant overall, i.e. all block slopes equal
    /// (Def 3.1 at the G level). Used for the Prop 5.1 vanishing check.
    pub fn compact_filter_global(&self) -> LeviSum {
        let terms = self
            .terms
            .iter()
            .filter(|t| {
                let sl = t.slopes();
                sl.windows(2).all(|w| w[0] == w[1])
            })
            .cloned()
            .collect();
        LeviSum {
            levi: self.levi.clone(),
            terms,
            compact: self.compact,
        }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let body = self.terms.iter().map(|t| t.render()).join(" + ");
        if self.compact {
            format!("C_c[{body}]")
        } else {
            body
        }
    }
}

/// The constant C(n_i, s_i) = s(n−s)/2 − Σ s_i(n_i−s_i)/2 of Prop 3.1.
pub fn c_const(n: usize, s: usize, blocks: &[(usize, usize)]) -> Rat {
    let mut c = rat((s * (n - s)) as i64, 2);
    for &(ni, si) in blocks {
        c -= rat((si * (ni - si)) as i64, 2);
    }
    c
}

fn check_ns_alpha(n: usize, alpha: usize, s: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    if s > n {
        return Err(Error::Domain(format!("s = {s} out of range 0..={n}")));
    }
    Ok(())
}

/// S(f_{nαs}) = q^{αs(n−s)/2} Σ_{|I|=s} Π_{i∈I} X_i^α (§3).
pub fn kottwitz_poly(n: usize, alpha: usize, s: usize) -> Result<LaurentPoly> {
    check_ns_alpha(n, alpha, s)?;
    let ctx = VarCtx::x_only(n);
    BlockFn { n, alpha, s }.flatten_at(&ctx, 0)
}

/// The constant term f_{nαs}^{(P)} = Σ_{(s_i)} q^{αC(n_i,s_i)} ⊗ f_{n_i α s_i}
/// over extended compositions (s_i) of s with s_i ≤ n_i (Prop 3.1).
pub fn constant_term(n: usize, alpha: usize, s: usize, p: &Composition) -> Result<LeviSum> {
    check_ns_alpha(n, alpha, s)?;
    if p.total() != n {
        return Err(Error::Domain(format!(
            "parabolic {:?} is not a composition of {n}",
            p.parts()
        )));
    }
    let mut terms = Vec::new();
    for svec in enumerate_compositions(s, p.len(), Flavor::Extended, None)? {
        if svec
            .parts()
            .iter()
            .zip(p.parts())
            .any(|(&si, &ni)| si > ni)
        {
            continue;
        }
        let blocks: Vec<(usize, usize)> = p
            .parts()
            .iter()
            .copied()
            .zip(svec.parts().iter().copied())
            .collect();
        terms.push(LeviTerm {
            q_exp: c_const(n, s, &blocks) * rat(alpha as i64, 1),
            blocks: blocks
                .iter()
                .map(|&(ni, si)| BlockFn { n: ni, alpha, s: si })
                .collect(),
        });
    }
    Ok(LeviSum {
        levi: p.clone(),
        terms,
        compact: false,
    })
}

/// χ^{M1}_{M2}-truncated constant term of f_{nαs} (Prop 3.2(1)): only the
/// terms whose slope chain is strictly decreasing inside each M1-block
/// survive.
pub fn chi_truncated_ct(
    m1: &Composition,
    m2: &Composition,
    n: usize,
    alpha: usize,
    s: usize,
) -> Result<LeviSum> {
    check_ns_alpha(n, alpha, s)?;
    if m1.total() != n {
        return Err(Error::Domain(format!(
            "M1 {:?} is not a composition of {n}",
            m1.parts()
        )));
    }
    let groups = m1.refinement_groups(m2)?;
    let full = constant_term(n, alpha, s, m2)?;
    let mut terms = Vec::new();
    'outer: for t in full.terms {
        let mut idx = 0;
        for group in &groups {
            let sizes: Vec<usize> = group.clone();
            let parts: Vec<usize> = t.blocks[idx..idx + group.len()]
                .iter()
                .map(|b| b.s)
                .collect();
            if !(Constraint::ChiChain { sizes: &sizes }).admits(&parts) {
                continue 'outer;
            }
            idx += group.len();
        }
        terms.push(t);
    }
    Ok(LeviSum {
        levi: m2.clone(),
        terms,
        compact: false,
    })
}

/// χ̂^{M1}_{M2}-truncated constant term of ⊗_i f_{n_i α s_i} (Prop 3.2(2)):
/// per M1-block i, only blockwise extended compositions with strictly
/// deficient proper prefix sums Σ_{j≤b} s_{i,j} < (s_i/n_i)·Σ_{j≤b} n_{i,j}
/// survive; prefactor q^{α Σ_i C_i}.
pub fn chihat_truncated_ct(
    m1: &Composition,
    m2: &Composition,
    s_vec: &Composition,
    alpha: usize,
) -> Result<LeviSum> {
    if alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    if s_vec.len() != m1.len() {
        return Err(Error::Domain(
            "sVec must have one entry per M1 block".into(),
        ));
    }
    if s_vec
        .parts()
        .iter()
        .zip(m1.parts())
        .any(|(&si, &ni)| si > ni)
    {
        return Err(Error::Domain("sVec entry exceeds its block size".into()));
    }
    let groups = m1.refinement_groups(m2)?;
    // per-block surviving refinements
    let mut per_block: Vec<Vec<(Rat, Vec<BlockFn>)>> = Vec::new();
    for (i, group) in groups.iter().enumerate() {
        let ni = m1.parts()[i];
        let si = s_vec.parts()[i];
        let mut choices = Vec::new();
        for sub in enumerate_compositions(
            si,
            group.len(),
            Flavor::Extended,
            Some(Constraint::ChiHatPrefix {
                sizes: group,
                s: si,
                n: ni,
            }),
        )? {
            if sub
                .parts()
                .iter()
                .zip(group.iter())
                .any(|(&sij, &nij)| sij > nij)
            {
                continue;
            }
            let blocks: Vec<(usize, usize)> = group
                .iter()
                .copied()
                .zip(sub.parts().iter().copied())
                .collect();
            let ci = c_const(ni, si, &blocks);
            choices.push((
                ci * rat(alpha as i64, 1),
                blocks
                    .iter()
                    .map(|&(nij, sij)| BlockFn {
                        n: nij,
                        alpha,
                        s: sij,
                    })
                    .collect(),
            ));
        }
        per_block.push(choices);
    }
    let mut terms = Vec::new();
    for combo in per_block.iter().multi_cartesian_product() {
        let mut q_exp = Rat::from_integer(0);
        let mut blocks = Vec::new();
        for (ci, bs) in combo {
            q_exp += *ci;
            blocks.extend(bs.iter().copied());
        }
        terms.push(LeviTerm { q_exp, blocks });
    }
    if per_block.iter().any(|c| c.is_empty()) {
        terms.clear();
    }
    Ok(LeviSum {
        levi: m2.clone(),
        terms,
        compact: false,
    })
}

/// S(χ̂^{GL_p}_{M_0} f_{pαs'}) as a polynomial in p variables — the building
/// block of every closed trace formula in §5.
pub fn chihat_satake(p: usize, alpha: usize, s: usize) -> Result<LaurentPoly> {
    check_ns_alpha(p, alpha, s)?;
    let m1 = Composition::strict(vec![p])?;
    let m0 = Composition::strict(vec![1; p])?;
    let s_vec = Composition::extended(vec![s]);
    chihat_truncated_ct(&m1, &m0, &s_vec, alpha)?.flatten()
}

/// A Newton slope vector λ = (λ_1^{n_1}, …, λ_k^{n_k}): strictly decreasing
/// rational slopes with λ_i n_i ∈ Z_{≥0} (§3 before Prop 3.3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeVector {
    slopes: Vec<(Rat, usize)>,
}

impl SlopeVector {
    pub fn new(slopes: Vec<(Rat, usize)>) -> Result<SlopeVector> {
        if slopes.is_empty() {
            return Err(Error::Domain("empty slope vector".into()));
        }
        for w in slopes.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::Domain("slopes must be strictly decreasing".into()));
            }
        }
        for &(l, ni) in &slopes {
            if ni == 0 {
                return Err(Error::Domain("zero multiplicity in slope vector".into()));
            }
            let prod = l * rat(ni as i64, 1);
            if !prod.is_integer() || prod < Rat::from_integer(0) {
                return Err(Error::Domain(format!(
                    "λ_i·n_i = {prod} must be a nonnegative integer"
                )));
            }
        }
        Ok(SlopeVector { slopes })
    }

    /// Two-slope convenience constructor from (p_i, s_i) data.
    pub fn two_slope(p1: usize, s1: usize, p2: usize, s2: usize) -> Result<SlopeVector> {
        SlopeVector::new(vec![
            (rat(s1 as i64, p1 as i64), p1),
            (rat(s2 as i64, p2 as i64), p2),
        ])
    }

    pub fn slopes(&self) -> &[(Rat, usize)] {
        &self.slopes
    }

    pub fn n(&self) -> usize {
        self.slopes.iter().map(|&(_, ni)| ni).sum()
    }

    pub fn s(&self) -> usize {
        self.slopes
            .iter()
            .map(|&(l, ni)| (l * rat(ni as i64, 1)).to_integer() as usize)
            .sum()
    }

    /// The blocks (n_1, …, n_k) of P_λ.
    pub fn blocks(&self) -> Composition {
        Composition::strict(self.slopes.iter().map(|&(_, ni)| ni).collect()).unwrap()
    }

    /// The integers s_i = λ_i n_i.
    pub fn s_parts(&self) -> Vec<usize> {
        self.slopes
            .iter()
            .map(|&(l, ni)| (l * rat(ni as i64, 1)).to_integer() as usize)
            .collect()
    }

    /// Slope profile expanded to an n-vector.
    pub fn profile(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for &(l, ni) in &self.slopes {
            out.extend(std::iter::repeat(l).take(ni));
        }
        out
    }

    /// Format "s/n:mult,…", e.g. "1/2:2,0/1:1".
    pub fn render(&self) -> String {
        self.slopes
            .iter()
            .map(|&(l, ni)| format!("{}/{}:{}", l.numer(), l.denom(), ni))
            .join(",")
    }

    pub fn parse(s: &str) -> Result<SlopeVector> {
        let mut slopes = Vec::new();
        for item in s.split(',') {
            let (val, mult) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad slope entry `{item}`")))?;
            let mult: usize = mult
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity `{mult}`")))?;
            let l = if let Some((a, b)) = val.split_once('/') {
                let a: i64 = a
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad slope `{val}`")))?;
                let b: i64 = b
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad slope `{val}`")))?;
                if b == 0 {
                    return Err(Error::Parse("zero slope denominator".into()));
                }
                rat(a, b)
            } else {
                Rat::from_integer(
                    val.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad slope `{val}`")))?,
                )
            };
            slopes.push((l, mult));
        }
        SlopeVector::new(slopes)
    }
}

fn check_lambda(lambda: &SlopeVector, n: usize, s: usize) -> Result<()> {
    if lambda.n() != n {
        return Err(Error::Domain(format!(
            "slope vector has total {} but n = {n}",
            lambda.n()
        )));
    }
    if lambda.s() != s {
        return Err(Error::Domain(format!(
            "slope vector has Σλ_i n_i = {} but s = {s}",
            lambda.s()
        )));
    }
    Ok(())
}

/// Slope truncation of a constant term (Prop 3.3): zero unless P = P_λ, in
/// which case a single compact-flagged term q^{αC(n_i,s_i)} ⊗ f_{n_i α s_i}
/// survives. Computed by filtering the χ-truncated expansion on the slope
/// profile of λ, not by pattern matching on P.
pub fn newton_truncated_ct(
    lambda: &SlopeVector,
    p: &Composition,
    n: usize,
    alpha: usize,
    s: usize,
) -> Result<LeviSum> {
    check_lambda(lambda, n, s)?;
    let g = Composition::strict(vec![n])?;
    let chi = chi_truncated_ct(&g, p, n, alpha, s)?;
    let profile = lambda.profile();
    let terms: Vec<LeviTerm> = chi
        .terms
        .into_iter()
        .filter(|t| t.profile() == profile)
        .collect();
    Ok(LeviSum {
        levi: p.clone(),
        terms,
        compact: true,
    })
}

/// The right-hand side of Cor 3.4: trace data on the Levi M_λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPlan {
    /// exponent of the global prefactor q^{α(s(n−s)/2 − Σ s_i(p_i−s_i)/2)}
    pub prefactor_q_exp: Rat,
    pub blocks: Composition,
    pub fns: Vec<BlockFn>,
    /// trace is against C_c^{M_λ}(⊗f_i) on the normalized Jacquet module
    pub compact: bool,
}

/// Cor 3.4: Tr(C_λ f_{nαs}, π) = q^{αC} · Tr(C_c^{M_λ}(⊗ f_{p_i α s_i}),
/// J_{N_λ}(π)) with the normalized (δ^{−1/2}-twisted) Jacquet module.
pub fn reduce_to_levi(lambda: &SlopeVector, n: usize, alpha: usize, s: usize) -> Result<ReductionPlan> {
    check_lambda(lambda, n, s)?;
    check_ns_alpha(n, alpha, s)?;
    let blocks = lambda.blocks();
    let s_parts = lambda.s_parts();
    let pairs: Vec<(usize, usize)> = blocks
        .parts()
        .iter()
        .copied()
        .zip(s_parts.iter().copied())
        .collect();
    let fns = pairs
        .iter()
        .map(|&(pi, si)| BlockFn {
            n: pi,
            alpha,
            s: si,
        })
        .collect();
    Ok(ReductionPlan {
        prefactor_q_exp: c_const(n, s, &pairs) * rat(alpha as i64, 1),
        blocks,
        fns,
        compact: true,
    })
}

/// Prop 3.5 as a flag: a nonzero truncated trace certifies π^{I_n} ≠ 0.
pub fn iwahori_predicate(reduction_result: &LaurentPoly) -> bool {
    !reduction_result.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kottwitz_small() {
        assert_eq!(
            kottwitz_poly(2, 1, 1).unwrap().canonical_string(),
            "q^(1/2)*X1^1 + q^(1/2)*X2^1"
        );
        assert_eq!(kottwitz_poly(4, 2, 0).unwrap().canonical_string(), "1");
        assert_eq!(
            kottwitz_poly(3, 2, 1).unwrap().canonical_string(),
            "q^2*X1^2 + q^2*X2^2 + q^2*X3^2"
        );
        assert!(kottwitz_poly(2, 1, 3).is_err());
    }

    #[test]
    fn constant_term_gl2() {
        let p = Composition::strict(vec![1, 1]).unwrap();
        let ct = constant_term(2, 1, 1, &p).unwrap();
        assert_eq!(ct.terms.len(), 2);
        for t in &ct.terms {
            assert_eq!(t.q_exp, rat(1, 2));
        }
        assert_eq!(
            ct.flatten().unwrap(),
            kottwitz_poly(2, 1, 1).unwrap()
        );
    }

    #[test]
    fn constant_term_full_parabolic_is_identity() {
        let p = Composition::strict(vec![3]).unwrap();
        let ct = constant_term(3, 2, 2, &p).unwrap();
        assert_eq!(ct.terms.len(), 1);
        assert_eq!(ct.terms[0].q_exp, Rat::from_integer(0));
        assert_eq!(ct.flatten().unwrap(), kottwitz_poly(3, 2, 2).unwrap());
    }

    #[test]
    fn constant_term_flattens_to_kottwitz() {
        let p = Composition::strict(vec![2, 1]).unwrap();
        let ct = constant_term(3, 1, 1, &p).unwrap();
        assert_eq!(ct.flatten().unwrap(), kottwitz_poly(3, 1, 1).unwrap());
    }

    #[test]
    fn chi_gl2() {
        let m1 = Composition::strict(vec![2]).unwrap();
        let m0 = Composition::strict(vec![1, 1]).unwrap();
        let chi = chi_truncated_ct(&m1, &m0, 2, 1, 1).unwrap();
        assert_eq!(chi.terms.len(), 1);
        assert_eq!(chi.flatten().unwrap().canonical_string(), "q^(1/2)*X1^1");
    }

    #[test]
    fn chi_gl3_two_one() {
        let m1 = Composition::strict(vec![3]).unwrap();
        let m2 = Composition::strict(vec![2, 1]).unwrap();
        let chi = chi_truncated_ct(&m1, &m2, 3, 1, 1).unwrap();
        assert_eq!(chi.terms.len(), 1);
        let t = &chi.terms[0];
        assert_eq!(t.q_exp, rat(1, 2));
        assert_eq!(t.blocks[0], BlockFn { n: 2, alpha: 1, s: 1 });
        assert_eq!(t.blocks[1], BlockFn { n: 1, alpha: 1, s: 0 });
    }

    #[test]
    fn chi_vacuous_when_m1_equals_m2() {
        let m = Composition::strict(vec![2, 1]).unwrap();
        let chi = chi_truncated_ct(&m, &m, 3, 1, 1).unwrap();
        let ct = constant_term(3, 1, 1, &m).unwrap();
        assert_eq!(chi.terms, ct.terms);
    }

    #[test]
    fn chihat_gl2_gl3() {
        assert_eq!(
            chihat_satake(2, 1, 1).unwrap().canonical_string(),
            "q^(1/2)*X2^1"
        );
        assert_eq!(
            chihat_satake(3, 1, 1).unwrap().canonical_string(),
            "q^1*X3^1"
        );
    }

    #[test]
    fn chihat_identity_filtering_when_m1_equals_m2() {
        let m = Composition::strict(vec![2, 1]).unwrap();
        let s_vec = Composition::extended(vec![1, 1]);
        let sum = chihat_truncated_ct(&m, &m, &s_vec, 1).unwrap();
        assert_eq!(sum.terms.len(), 1);
        assert_eq!(sum.terms[0].q_exp, Rat::from_integer(0));
    }

    #[test]
    fn newton_truncation_gl2() {
        let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
        let p_lambda = Composition::strict(vec![1, 1]).unwrap();
        let got = newton_truncated_ct(&lambda, &p_lambda, 2, 1, 1).unwrap();
        assert!(got.compact);
        assert_eq!(got.terms.len(), 1);
        assert_eq!(got.terms[0].q_exp, rat(1, 2));
        assert_eq!(
            got.terms[0].blocks,
            vec![BlockFn { n: 1, alpha: 1, s: 1 }, BlockFn { n: 1, alpha: 1, s: 0 }]
        );
        let g = Composition::strict(vec![2]).unwrap();
        assert!(newton_truncated_ct(&lambda, &g, 2, 1, 1).unwrap().terms.is_empty());
    }

    #[test]
    fn newton_truncation_single_slope() {
        let lambda = SlopeVector::new(vec![(rat(1, 3), 3)]).unwrap();
        let m0 = Composition::strict(vec![1, 1, 1]).unwrap();
        let got = newton_truncated_ct(&lambda, &m0, 3, 1, 1).unwrap();
        assert!(got.terms.is_empty());
    }

    #[test]
    fn reduction_prefactor() {
        let lambda = SlopeVector::two_slope(1, 1, 1, 0).unwrap();
        let plan = reduce_to_levi(&lambda, 2, 1, 1).unwrap();
        assert_eq!(plan.prefactor_q_exp, rat(1, 2));
        assert_eq!(plan.blocks.parts(), &[1, 1]);
        assert_eq!(
            plan.fns,
            vec![BlockFn { n: 1, alpha: 1, s: 1 }, BlockFn { n: 1, alpha: 1, s: 0 }]
        );
        assert!(plan.compact);
    }

    #[test]
    fn slope_vector_parse_render() {
        let l = SlopeVector::parse("1/2:2,0/1:1").unwrap();
        assert_eq!(l.n(), 3);
        assert_eq!(l.s(), 1);
        assert_eq!(l.render(), "1/2:2,0/1:1");
        assert!(SlopeVector::parse("0/1:1,1/2:2").is_err());
    }
}
