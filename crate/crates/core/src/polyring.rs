//! Exact multivariate Laurent polynomials.
//!
//! The unramified Hecke algebra of GL_n(F) is, via the Satake transform,
//! the ring of symmetric Laurent polynomials in X_1..X_n over C[q^{±1/2}].
//! We realize this with arbitrary-precision integer coefficients, exact
//! rational exponents for q (the paper freely uses q^{1/2} and q^{s/n}),
//! integer exponents for X_1..X_n, and integer exponents for a declared list
//! of opaque character symbols (values of unitary unramified characters at a
//! uniformizer, and symbolic roots of unity).

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::symcomb::{Composition, Permutation};

/// Exact rational, used for q-exponents and |·|^e twists.
pub type Rat = Ratio<i64>;

/// Convenience constructor for a rational a/b.
pub fn rat(a: i64, b: i64) -> Rat {
    Ratio::new(a, b)
}

/// Declared variables: X_1..X_n plus an ordered list of character symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarCtx {
    pub n: usize,
    pub symbols: Vec<String>,
}

impl VarCtx {
    pub fn new(n: usize, symbols: Vec<String>) -> Arc<VarCtx> {
        Arc::new(VarCtx { n, symbols })
    }

    pub fn x_only(n: usize) -> Arc<VarCtx> {
        Self::new(n, Vec::new())
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }
}

/// Exponent vector of one monomial. The ordering (q ascending, then X's and
/// symbols by descending lexicographic exponent, so X1-heavy terms print
/// first) is exactly the canonical term order of `canonical_string`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expo {
    pub q: Rat,
    pub x: Vec<i64>,
    pub z: Vec<i64>,
}

impl Ord for Expo {
    fn cmp(&self, other: &Expo) -> std::cmp::Ordering {
        self.q
            .cmp(&other.q)
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| other.z.cmp(&self.z))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Expo) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Expo {
    pub fn zero(ctx: &VarCtx) -> Expo {
        Expo {
            q: Rat::zero(),
            x: vec![0; ctx.n],
            z: vec![0; ctx.symbols.len()],
        }
    }

    fn mul(&self, other: &Expo) -> Expo {
        Expo {
            q: self.q + other.q,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
        }
    }

    fn pow(&self, e: i64) -> Expo {
        Expo {
            q: self.q * Rat::from_integer(e),
            x: self.x.iter().map(|a| a * e).collect(),
            z: self.z.iter().map(|a| a * e).collect(),
        }
    }
}

/// A Laurent polynomial over a fixed variable context. Immutable; all
/// operations are pure. Zero-coefficient terms are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ctx: Arc<VarCtx>,
    terms: BTreeMap<Expo, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ctx: &Arc<VarCtx>) -> LaurentPoly {
        LaurentPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<VarCtx>) -> LaurentPoly {
        LaurentPoly::monomial(ctx, BigInt::one(), Expo::zero(ctx))
    }

    pub fn constant(ctx: &Arc<VarCtx>, c: i64) -> LaurentPoly {
        LaurentPoly::monomial(ctx, BigInt::from(c), Expo::zero(ctx))
    }

    pub fn monomial(ctx: &Arc<VarCtx>, coeff: BigInt, expo: Expo) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            debug_assert_eq!(expo.x.len(), ctx.n);
            debug_assert_eq!(expo.z.len(), ctx.symbols.len());
            terms.insert(expo, coeff);
        }
        LaurentPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// q^r as a polynomial.
    pub fn q_pow(ctx: &Arc<VarCtx>, r: Rat) -> LaurentPoly {
        let mut e = Expo::zero(ctx);
        e.q = r;
        LaurentPoly::monomial(ctx, BigInt::one(), e)
    }

    /// The variable X_i (1-based).
    pub fn x_var(ctx: &Arc<VarCtx>, i: usize) -> LaurentPoly {
        assert!(1 <= i && i <= ctx.n, "X{i} out of range");
        let mut e = Expo::zero(ctx);
        e.x[i - 1] = 1;
        LaurentPoly::monomial(ctx, BigInt::one(), e)
    }

    /// The character symbol with the given name.
    pub fn symbol(ctx: &Arc<VarCtx>, name: &str) -> Result<LaurentPoly> {
        let j = ctx
            .symbol_index(name)
            .ok_or_else(|| Error::Context(format!("unknown symbol {name}")))?;
        let mut e = Expo::zero(ctx);
        e.z[j] = 1;
        Ok(LaurentPoly::monomial(ctx, BigInt::one(), e))
    }

    pub fn ctx(&self) -> &Arc<VarCtx> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigInt)> {
        self.terms.iter()
    }

    /// The single (expo, coeff) pair if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&Expo, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check_ctx(&self, other: &LaurentPoly) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::Context(
                "operands have different variable contexts".into(),
            ));
        }
        Ok(())
    }

    fn insert_term(terms: &mut BTreeMap<Expo, BigInt>, e: Expo, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_ctx(other)?;
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                Self::insert_term(&mut terms, e1.mul(e2), c1 * c2);
            }
        }
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero(&self.ctx);
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> LaurentPoly {
        self.scale(&BigInt::from(k))
    }

    /// Multiply by q^r.
    pub fn mul_q(&self, r: Rat) -> LaurentPoly {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.q += r;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Sum a sequence of polynomials over a common context.
    pub fn sum<'a>(ctx: &Arc<VarCtx>, polys: impl IntoIterator<Item = &'a LaurentPoly>) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(ctx);
        for p in polys {
            acc = acc.add(p)?;
        }
        Ok(acc)
    }

    /// Apply w to the variables: the exponent of X_i moves to X_{w(i)}.
    pub fn permute_vars(&self, w: &Permutation) -> Result<LaurentPoly> {
        if w.n() != self.ctx.n {
            return Err(Error::Context(format!(
                "permutation of S_{} applied to {} variables",
                w.n(),
                self.ctx.n
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut x = vec![0i64; e.x.len()];
                for (i, &xi) in e.x.iter().enumerate() {
                    x[w.image(i + 1) - 1] = xi;
                }
                (
                    Expo {
                        q: e.q,
                        x,
                        z: e.z.clone(),
                    },
                    c.clone(),
                )
            })
            .collect();
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Substitute monomials for the X variables, landing in `target`'s context.
    ///
    /// Each provided point must be a single-term monomial with ±1-free integer
    /// structure over `target`; every X_i occurring in `self` must be assigned
    /// (entries may be `None` for variables that never occur). Character-symbol
    /// exponents of `self` carry over only when both contexts declare the same
    /// symbol list; a pure q/X polynomial can be evaluated into any context.
    pub fn substitute_into(
        &self,
        points: &[Option<LaurentPoly>],
        target: &Arc<VarCtx>,
    ) -> Result<LaurentPoly> {
        if points.len() != self.ctx.n {
            return Err(Error::Context(format!(
                "assignment length {} for {} variables",
                points.len(),
                self.ctx.n
            )));
        }
        let z_uses: bool = self.terms.keys().any(|e| e.z.iter().any(|&v| v != 0));
        if z_uses && self.ctx.symbols != target.symbols {
            return Err(Error::Context(
                "substitution across contexts with different symbols".into(),
            ));
        }
        let mut mono_points: Vec<Option<(Expo, BigInt)>> = Vec::with_capacity(points.len());
        for p in points {
            match p {
                None => mono_points.push(None),
                Some(p) => {
                    if p.ctx != *target {
                        return Err(Error::Context(
                            "substitution point in wrong context".into(),
                        ));
                    }
                    let (e, c) = p.as_monomial().ok_or_else(|| {
                        Error::Domain("substitution points must be monomials".into())
                    })?;
                    mono_points.push(Some((e.clone(), c.clone())));
                }
            }
        }
        let mut out = LaurentPoly::zero(target);
        for (e, c) in &self.terms {
            let mut acc_e = Expo::zero(target);
            acc_e.q = e.q;
            if !target.symbols.is_empty() && self.ctx.symbols == target.symbols {
                acc_e.z = e.z.clone();
            }
            let mut acc_c = c.clone();
            for (i, &xi) in e.x.iter().enumerate() {
                if xi == 0 {
                    continue;
                }
                let (pe, pc) = mono_points[i].as_ref().ok_or_else(|| {
                    Error::Assignment(format!("X{} occurs but is unassigned", i + 1))
                })?;
                acc_e = acc_e.mul(&pe.pow(xi));
                if !pc.is_one() {
                    if xi < 0 && !(pc.magnitude().is_one()) {
                        return Err(Error::Domain(
                            "negative power of a non-unit substitution point".into(),
                        ));
                    }
                    // coefficients are ±1 in all evaluation tuples we use
                    let sign = if pc.is_negative() && xi % 2 != 0 { -1 } else { 1 };
                    if pc.magnitude().is_one() {
                        acc_c *= sign;
                    } else {
                        acc_c *= pc.pow(xi as u32);
                    }
                }
            }
            out = out.add(&LaurentPoly::monomial(target, acc_c, acc_e))?;
        }
        Ok(out)
    }

    /// Same-context substitution (the §5 evaluation of a Satake transform).
    pub fn substitute(&self, points: &[Option<LaurentPoly>]) -> Result<LaurentPoly> {
        self.substitute_into(points, &self.ctx)
    }

    /// True iff invariant under S_{b_1} × … × S_{b_k} permuting the X's
    /// blockwise (adjacent transpositions within blocks suffice).
    pub fn is_symmetric(&self, blocks: &Composition) -> Result<bool> {
        if blocks.total() != self.ctx.n {
            return Err(Error::Domain(format!(
                "blocks sum to {}, expected {}",
                blocks.total(),
                self.ctx.n
            )));
        }
        let mut offset = 0usize;
        for &b in blocks.parts() {
            let b = b as usize;
            for i in 1..b {
                let w = Permutation::transposition(self.ctx.n, offset + i, offset + i + 1);
                if self.permute_vars(&w)? != *self {
                    return Ok(false);
                }
            }
            offset += b;
        }
        Ok(true)
    }

    /// Deterministic rendering: terms in (qExp, xExps, zExps) order.
    pub fn canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            if !e.q.is_zero() {
                factors.push(format!("q^{}", fmt_rat(e.q)));
            }
            for (i, &xi) in e.x.iter().enumerate() {
                if xi != 0 {
                    factors.push(format!("X{}^{}", i + 1, xi));
                }
            }
            for (j, &zj) in e.z.iter().enumerate() {
                if zj != 0 {
                    factors.push(format!("{}^{}", self.ctx.symbols[j], zj));
                }
            }
            let mut s = String::new();
            if factors.is_empty() {
                let _ = write!(s, "{c}");
            } else if c.is_one() {
                s = factors.join("*");
            } else if (-c).is_one() {
                s = format!("-{}", factors.join("*"));
            } else {
                s = format!("{}*{}", c, factors.join("*"));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Parse the `canonical_string` format back into a polynomial over `ctx`.
    pub fn parse(ctx: &Arc<VarCtx>, input: &str) -> Result<LaurentPoly> {
        let input = input.trim();
        if input == "0" {
            return Ok(LaurentPoly::zero(ctx));
        }
        let mut out = LaurentPoly::zero(ctx);
        for raw in input.split(" + ") {
            let raw = raw.trim();
            if raw.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let (sign, body) = match raw.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, raw),
            };
            let mut coeff = BigInt::from(sign);
            let mut expo = Expo::zero(ctx);
            let mut saw_factor = false;
            for factor in body.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{raw}`")));
                }
                if let Some((base, exp)) = factor.split_once('^') {
                    let e = parse_rat(exp)?;
                    if base == "q" {
                        expo.q += e;
                    } else if let Some(idx) = base.strip_prefix('X') {
                        let i: usize = idx
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad variable `{base}`")))?;
                        if i < 1 || i > ctx.n {
                            return Err(Error::Parse(format!("X{i} out of context")));
                        }
                        if !e.is_integer() {
                            return Err(Error::Parse("fractional X exponent".into()));
                        }
                        expo.x[i - 1] += e.to_integer();
                    } else if let Some(j) = ctx.symbol_index(base) {
                        if !e.is_integer() {
                            return Err(Error::Parse("fractional symbol exponent".into()));
                        }
                        expo.z[j] += e.to_integer();
                    } else {
                        return Err(Error::Parse(format!("unknown factor `{factor}`")));
                    }
                    saw_factor = true;
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
                    coeff *= c;
                }
            }
            let _ = saw_factor;
            out = out.add(&LaurentPoly::monomial(ctx, coeff, expo))?;
        }
        Ok(out)
    }
}

fn fmt_rat(r: Rat) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
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
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Ratio::new(a, b))
    } else {
        let a: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent `{s}`")))?;
        Ok(Rat::from_integer(a))
    }
}

/// The evaluation tuple (q^{-c_1}·ε_1, …, q^{-c_n}·ε_n) attached to an
/// unramified character of the diagonal torus (Def 5.4). Each entry is a
/// single-term monomial over a common context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeMatrix {
    entries: Vec<LaurentPoly>,
}

impl HeckeMatrix {
    pub fn new(entries: Vec<LaurentPoly>) -> Result<HeckeMatrix> {
        if entries.is_empty() {
            return Err(Error::Domain("empty Hecke matrix".into()));
        }
        for e in &entries {
            if e.as_monomial().is_none() {
                return Err(Error::Domain("Hecke matrix entries must be nonzero monomials".into()));
            }
        }
        let ctx = entries[0].ctx().clone();
        if entries.iter().any(|e| *e.ctx() != ctx) {
            return Err(Error::Context("Hecke matrix entries in mixed contexts".into()));
        }
        Ok(HeckeMatrix { entries })
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn canonical_string(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.canonical_string()).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx2() -> Arc<VarCtx> {
        VarCtx::x_only(2)
    }

    #[test]
    fn monomial_product() {
        let ctx = ctx2();
        let a = LaurentPoly::q_pow(&ctx, rat(1, 2))
            .mul(&LaurentPoly::x_var(&ctx, 1))
            .unwrap();
        let b = LaurentPoly::q_pow(&ctx, rat(1, 2))
            .mul(&LaurentPoly::x_var(&ctx, 2))
            .unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.canonical_string(), "q^1*X1^1*X2^1");
    }

    #[test]
    fn additive_identity_and_binomial() {
        let ctx = ctx2();
        let f = LaurentPoly::x_var(&ctx, 1)
            .add(&LaurentPoly::x_var(&ctx, 2))
            .unwrap();
        assert_eq!(f.add(&LaurentPoly::zero(&ctx)).unwrap(), f);
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.canonical_string(), "X1^2 + 2*X1^1*X2^1 + X2^2");
    }

    #[test]
    fn permute_moves_x1_to_x2() {
        let ctx = ctx2();
        let f = LaurentPoly::x_var(&ctx, 1);
        let w = Permutation::transposition(2, 1, 2);
        assert_eq!(f.permute_vars(&w).unwrap(), LaurentPoly::x_var(&ctx, 2));
        let id = Permutation::identity(2);
        assert_eq!(f.permute_vars(&id).unwrap(), f);
    }

    #[test]
    fn permute_three_cycle() {
        let ctx = VarCtx::x_only(3);
        // w = (1 2 3): 1→2, 2→3, 3→1
        let w = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let f = LaurentPoly::x_var(&ctx, 1)
            .mul(&LaurentPoly::x_var(&ctx, 2).mul(&LaurentPoly::x_var(&ctx, 2)).unwrap())
            .unwrap();
        let g = LaurentPoly::x_var(&ctx, 2)
            .mul(&LaurentPoly::x_var(&ctx, 3).mul(&LaurentPoly::x_var(&ctx, 3)).unwrap())
            .unwrap();
        assert_eq!(f.permute_vars(&w).unwrap(), g);
    }

    #[test]
    fn substitute_basic() {
        let ctx = ctx2();
        let f = LaurentPoly::q_pow(&ctx, rat(1, 2))
            .mul(
                &LaurentPoly::x_var(&ctx, 1)
                    .add(&LaurentPoly::x_var(&ctx, 2))
                    .unwrap(),
            )
            .unwrap();
        let pts = vec![
            Some(LaurentPoly::q_pow(&ctx, rat(-1, 2))),
            Some(LaurentPoly::q_pow(&ctx, rat(1, 2))),
        ];
        let v = f.substitute(&pts).unwrap();
        assert_eq!(v.canonical_string(), "1 + q^1");
    }

    #[test]
    fn substitute_squares() {
        let ctx = VarCtx::x_only(3);
        let mut f = LaurentPoly::zero(&ctx);
        for i in 1..=3 {
            let xi = LaurentPoly::x_var(&ctx, i);
            f = f.add(&xi.mul(&xi).unwrap()).unwrap();
        }
        f = f.mul_q(rat(2, 1));
        let pts = vec![
            Some(LaurentPoly::q_pow(&ctx, rat(-1, 1))),
            Some(LaurentPoly::one(&ctx)),
            Some(LaurentPoly::q_pow(&ctx, rat(1, 1))),
        ];
        assert_eq!(f.substitute(&pts).unwrap().canonical_string(), "1 + q^2 + q^4");
    }

    #[test]
    fn symmetry_checks() {
        let ctx = ctx2();
        let x1 = LaurentPoly::x_var(&ctx, 1);
        let sym = x1.add(&LaurentPoly::x_var(&ctx, 2)).unwrap();
        let blocks = Composition::strict(vec![2]).unwrap();
        assert!(!x1.is_symmetric(&blocks).unwrap());
        assert!(sym.is_symmetric(&blocks).unwrap());
    }

    #[test]
    fn canonical_sort_order() {
        let ctx = ctx2();
        let f = LaurentPoly::q_pow(&ctx, rat(1, 2))
            .mul(&LaurentPoly::x_var(&ctx, 2))
            .unwrap()
            .add(
                &LaurentPoly::q_pow(&ctx, rat(1, 2))
                    .mul(&LaurentPoly::x_var(&ctx, 1))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(f.canonical_string(), "q^(1/2)*X1^1 + q^(1/2)*X2^1");
        assert_eq!(LaurentPoly::zero(&ctx).canonical_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        let ctx = VarCtx::new(2, vec!["eps".into()]);
        let f = LaurentPoly::q_pow(&ctx, rat(-3, 2))
            .mul(&LaurentPoly::symbol(&ctx, "eps").unwrap())
            .unwrap()
            .scale_i64(-5)
            .add(&LaurentPoly::x_var(&ctx, 2))
            .unwrap();
        let s = f.canonical_string();
        let g = LaurentPoly::parse(&ctx, &s).unwrap();
        assert_eq!(f, g);
        assert_eq!(g.canonical_string(), s);
    }
}
