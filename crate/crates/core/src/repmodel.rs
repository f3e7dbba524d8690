//! Representation descriptors and the structural operations of §5.
//!
//! Every representation in scope is built from twisted Steinberg and trivial
//! blocks St_{GL_m}(ε|·|^e), 1_{GL_m}(ε|·|^e): Speh representations expand
//! into alternating sums of standard modules in the Zelevinsky ring (Tadić's
//! formula over S_y^{(x)}), and semi-stable rigid representations (Def 5.1)
//! are induced products of Speh blocks. Jacquet restriction of a single
//! twisted block follows Rodier; Jacquet modules of induced representations
//! follow the geometric lemma, indexed here by nonnegative integer matrices
//! with prescribed row and column sums (equivalently, by the minimal
//! double-coset representatives of §4).

use itertools::Itertools;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::heckeops::SlopeVector;
use crate::polyring::{rat, HeckeMatrix, LaurentPoly, Rat, VarCtx};
use crate::symcomb::{inversions, perm_from_tableau, Composition, Permutation, RowTableau};

/// An unramified character ε|·|^e of GL_m(F): an opaque unitary symbol plus
/// an exact rational twist exponent. (Def 5.1 allows real e; only rational
/// twists are representable here, which covers every computation in scope.)
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CharSpec {
    pub symbol: Option<String>,
    pub shift: Rat,
}

impl CharSpec {
    pub fn unit(symbol: &str) -> CharSpec {
        CharSpec {
            symbol: Some(symbol.to_string()),
            shift: Rat::from_integer(0),
        }
    }

    pub fn shift_only(shift: Rat) -> CharSpec {
        CharSpec {
            symbol: None,
            shift,
        }
    }

    pub fn trivial() -> CharSpec {
        CharSpec {
            symbol: None,
            shift: Rat::from_integer(0),
        }
    }

    pub fn shifted(&self, by: Rat) -> CharSpec {
        CharSpec {
            symbol: self.symbol.clone(),
            shift: self.shift + by,
        }
    }

    pub fn is_unitary(&self) -> bool {
        self.shift == Rat::from_integer(0)
    }

    /// |e| < 1/2, the Def 5.1 twist window.
    pub fn in_unit_window(&self) -> bool {
        self.shift > rat(-1, 2) && self.shift < rat(1, 2)
    }

    /// Rendered as "eps|1/2", with "-" for a trivial symbol.
    pub fn render(&self) -> String {
        let sym = self.symbol.as_deref().unwrap_or("-");
        let sh = if self.shift.is_integer() {
            format!("{}", self.shift.numer())
        } else {
            format!("{}/{}", self.shift.numer(), self.shift.denom())
        };
        format!("{sym}|{sh}")
    }

    pub fn parse(s: &str) -> Result<CharSpec> {
        let (sym, sh) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bad character `{s}`")))?;
        let symbol = match sym.trim() {
            "-" | "" => None,
            name => {
                if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(Error::Parse(format!("bad symbol `{name}`")));
                }
                Some(name.to_string())
            }
        };
        let sh = sh.trim();
        let shift = if let Some((a, b)) = sh.split_once('/') {
            let a: i64 = a
                .parse()
                .map_err(|_| Error::Parse(format!("bad shift `{sh}`")))?;
            let b: i64 = b
                .parse()
                .map_err(|_| Error::Parse(format!("bad shift `{sh}`")))?;
            if b == 0 {
                return Err(Error::Parse("zero shift denominator".into()));
            }
            rat(a, b)
        } else {
            Rat::from_integer(
                sh.parse()
                    .map_err(|_| Error::Parse(format!("bad shift `{sh}`")))?,
            )
        };
        Ok(CharSpec { symbol, shift })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockTag {
    St,
    Triv,
}

impl BlockTag {
    pub fn render(&self) -> &'static str {
        match self {
            BlockTag::St => "St",
            BlockTag::Triv => "Triv",
        }
    }
}

/// One twisted Steinberg or trivial block of a standard module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StdBlock {
    pub tag: BlockTag,
    pub m: usize,
    pub char_: CharSpec,
}

impl StdBlock {
    pub fn render(&self) -> String {
        format!("{}({};{})", self.tag.render(), self.m, self.char_.render())
    }
}

/// A standard module: a parabolically induced product of twisted St/Triv
/// blocks, in block order.
pub type StandardRep = Vec<StdBlock>;

/// Tagged representation descriptors (Def 5.1–5.3 inputs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepDescriptor {
    SteinbergTwist(usize, CharSpec),
    TrivialTwist(usize, CharSpec),
    Speh {
        x: usize,
        y: usize,
        char_: CharSpec,
    },
    StandardModule(StandardRep),
    SemiStableRigid {
        y: usize,
        factors: Vec<(usize, CharSpec)>,
    },
}

impl RepDescriptor {
    pub fn ambient_n(&self) -> usize {
        match self {
            RepDescriptor::SteinbergTwist(m, _) | RepDescriptor::TrivialTwist(m, _) => *m,
            RepDescriptor::Speh { x, y, .. } => x * y,
            RepDescriptor::StandardModule(blocks) => blocks.iter().map(|b| b.m).sum(),
            RepDescriptor::SemiStableRigid { y, factors } => {
                y * factors.iter().map(|(x, _)| x).sum::<usize>()
            }
        }
    }

    pub fn symbols(&self) -> Vec<String> {
        let mut syms: Vec<String> = match self {
            RepDescriptor::SteinbergTwist(_, c) | RepDescriptor::TrivialTwist(_, c) => {
                c.symbol.iter().cloned().collect()
            }
            RepDescriptor::Speh { char_, .. } => char_.symbol.iter().cloned().collect(),
            RepDescriptor::StandardModule(blocks) => blocks
                .iter()
                .filter_map(|b| b.char_.symbol.clone())
                .collect(),
            RepDescriptor::SemiStableRigid { factors, .. } => factors
                .iter()
                .filter_map(|(_, c)| c.symbol.clone())
                .collect(),
        };
        syms.sort();
        syms.dedup();
        syms
    }

    /// Canonical one-line text form, e.g. `St(4;eps|0)`,
    /// `Std[St(2;eps1|0),Triv(1;-|0)]`, `SSR(2)[(2;eps|0),(1;eps2|0)]`.
    pub fn render(&self) -> String {
        match self {
            RepDescriptor::SteinbergTwist(m, c) => format!("St({};{})", m, c.render()),
            RepDescriptor::TrivialTwist(m, c) => format!("Triv({};{})", m, c.render()),
            RepDescriptor::Speh { x, y, char_ } => {
                format!("Speh({},{};{})", x, y, char_.render())
            }
            RepDescriptor::StandardModule(blocks) => {
                format!("Std[{}]", blocks.iter().map(|b| b.render()).join(","))
            }
            RepDescriptor::SemiStableRigid { y, factors } => format!(
                "SSR({})[{}]",
                y,
                factors
                    .iter()
                    .map(|(x, c)| format!("({};{})", x, c.render()))
                    .join(",")
            ),
        }
    }

    pub fn parse(s: &str) -> Result<RepDescriptor> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad representation `{s}`"));
        if let Some(rest) = s.strip_prefix("Std[") {
            let inner = rest.strip_suffix(']').ok_or_else(bad)?;
            let blocks = split_top_level(inner)?
                .iter()
                .map(|b| parse_std_block(b))
                .collect::<Result<Vec<_>>>()?;
            if blocks.is_empty() {
                return Err(bad());
            }
            return Ok(RepDescriptor::StandardModule(blocks));
        }
        if let Some(rest) = s.strip_prefix("SSR(") {
            let (y, rest) = rest.split_once(')').ok_or_else(bad)?;
            let y: usize = y.trim().parse().map_err(|_| bad())?;
            let inner = rest
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(bad)?;
            let mut factors = Vec::new();
            for piece in split_top_level(inner)? {
                let piece = piece
                    .trim()
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let (x, c) = piece.split_once(';').ok_or_else(bad)?;
                let x: usize = x.trim().parse().map_err(|_| bad())?;
                factors.push((x, CharSpec::parse(c)?));
            }
            if factors.is_empty() || y == 0 || factors.iter().any(|&(x, _)| x == 0) {
                return Err(bad());
            }
            return Ok(RepDescriptor::SemiStableRigid { y, factors });
        }
        for (prefix, which) in [("St(", 0), ("Triv(", 1), ("Speh(", 2)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                let (nums, c) = inner.split_once(';').ok_or_else(bad)?;
                let c = CharSpec::parse(c)?;
                return match which {
                    0 => Ok(RepDescriptor::SteinbergTwist(
                        nums.trim().parse().map_err(|_| bad())?,
                        c,
                    )),
                    1 => Ok(RepDescriptor::TrivialTwist(
                        nums.trim().parse().map_err(|_| bad())?,
                        c,
                    )),
                    _ => {
                        let (x, y) = nums.split_once(',').ok_or_else(bad)?;
                        Ok(RepDescriptor::Speh {
                            x: x.trim().parse().map_err(|_| bad())?,
                            y: y.trim().parse().map_err(|_| bad())?,
                            char_: c,
                        })
                    }
                };
            }
        }
        Err(bad())
    }
}

fn split_top_level(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn parse_std_block(s: &str) -> Result<StdBlock> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad standard-module block `{s}`"));
    let (tag, rest) = if let Some(r) = s.strip_prefix("St(") {
        (BlockTag::St, r)
    } else if let Some(r) = s.strip_prefix("Triv(") {
        (BlockTag::Triv, r)
    } else {
        return Err(bad());
    };
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let (m, c) = inner.split_once(';').ok_or_else(bad)?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    if m == 0 {
        return Err(bad());
    }
    Ok(StdBlock {
        tag,
        m,
        char_: CharSpec::parse(c)?,
    })
}

/// An integer-linear combination of standard modules (an element of the
/// Zelevinsky ring restricted to the span of standard modules).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualRep {
    terms: BTreeMap<StandardRep, i64>,
}

impl VirtualRep {
    pub fn zero() -> VirtualRep {
        VirtualRep {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(rep: StandardRep) -> VirtualRep {
        VirtualRep::from_terms(vec![(1, rep)])
    }

    pub fn from_terms(terms: Vec<(i64, StandardRep)>) -> VirtualRep {
        let mut map = BTreeMap::new();
        for (c, rep) in terms {
            let e = map.entry(rep).or_insert(0i64);
            *e += c;
        }
        map.retain(|_, c| *c != 0);
        VirtualRep { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&StandardRep, i64)> {
        self.terms.iter().map(|(r, &c)| (r, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &VirtualRep) -> VirtualRep {
        let mut map = self.terms.clone();
        for (r, &c) in &other.terms {
            *map.entry(r.clone()).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        VirtualRep { terms: map }
    }

    pub fn scale(&self, k: i64) -> VirtualRep {
        if k == 0 {
            return VirtualRep::zero();
        }
        VirtualRep {
            terms: self.terms.iter().map(|(r, &c)| (r.clone(), c * k)).collect(),
        }
    }

    /// Product in the Zelevinsky ring at the level of standard modules:
    /// concatenation of block lists, bilinear.
    pub fn product(&self, other: &VirtualRep) -> VirtualRep {
        let mut out = Vec::new();
        for (r1, c1) in self.terms() {
            for (r2, c2) in other.terms() {
                let mut blocks = r1.clone();
                blocks.extend(r2.iter().cloned());
                out.push((c1 * c2, blocks));
            }
        }
        VirtualRep::from_terms(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms()
            .map(|(r, c)| {
                let body = format!("Std[{}]", r.iter().map(|b| b.render()).join(","));
                match c {
                    1 => body,
                    -1 => format!("-{body}"),
                    c => format!("{c}*{body}"),
                }
            })
            .join(" + ")
    }
}

/// The Hecke matrix (q^{-c_1}·sym, …, q^{-c_n}·sym) of an unramified torus
/// character given coordinatewise as |·|^{c_i}ε_i (Def 5.4).
pub fn hecke_matrix(chars: &[CharSpec], ctx: &Arc<VarCtx>) -> Result<HeckeMatrix> {
    let mut entries = Vec::with_capacity(chars.len());
    for c in chars {
        let mut e = LaurentPoly::q_pow(ctx, -c.shift);
        if let Some(sym) = &c.symbol {
            e = e.mul(&LaurentPoly::symbol(ctx, sym)?)?;
        }
        entries.push(e);
    }
    HeckeMatrix::new(entries)
}

/// Normalized Jacquet restriction of a single twisted block along the blocks
/// of P (Rodier): St_{GL_m}(η) ↦ ⊗_l St_{c_l}(η·|det|^{d_l/2}) with
/// d_l = Σ_{l'>l} c_{l'} − Σ_{l'<l} c_{l'}; the trivial case twists by
/// |det|^{−d_l/2} instead. P = (m) is the identity transform.
pub fn jacquet_twisted(
    tag: BlockTag,
    m: usize,
    char_: &CharSpec,
    p: &Composition,
) -> Result<Vec<StdBlock>> {
    if p.total() != m {
        return Err(Error::Domain(format!(
            "parabolic {:?} is not a composition of {m}",
            p.parts()
        )));
    }
    let parts = p.parts();
    let total: i64 = m as i64;
    let mut out = Vec::with_capacity(parts.len());
    let mut before: i64 = 0;
    for &cl in parts {
        let after = total - before - cl as i64;
        let d = after - before;
        let half_d = rat(d, 2);
        let shift = match tag {
            BlockTag::St => half_d,
            BlockTag::Triv => -half_d,
        };
        out.push(StdBlock {
            tag,
            m: cl,
            char_: char_.shifted(shift),
        });
        before += cl as i64;
    }
    Ok(out)
}

/// One summand of the geometric lemma for J_{N_λ}(Ind_{P_ν}(⊗σ_j)): a matrix
/// (m_{ji}) with row sums ν_j and column sums p_i, its minimal double-coset
/// representative w ∈ S^min_{ν,λ}, and the blocks landing in each λ-column
/// (row j Jacquet-restricted along its nonzero entries, pieces listed per
/// column in increasing row order — the inner induction inside M_λ).
#[derive(Debug, Clone)]
pub struct GeomTerm {
    pub matrix: Vec<Vec<usize>>,
    pub w: Permutation,
    /// the standard parabolic P_ν ∩ wP_λw⁻¹ (via intersection_composition)
    pub inner: Composition,
    pub columns: Vec<Vec<StdBlock>>,
}

/// All nonnegative integer matrices with the given row and column sums.
fn matrices_with_margins(rows: &[usize], cols: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        rows: &[usize],
        j: usize,
        col_left: &mut Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if j == rows.len() {
            if col_left.iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        }
        let k = col_left.len();
        let mut row = vec![0usize; k];
        fn fill(
            i: usize,
            left: usize,
            k: usize,
            row: &mut Vec<usize>,
            col_left: &mut Vec<usize>,
            cont: &mut dyn FnMut(&mut Vec<usize>, &mut Vec<usize>),
        ) {
            if i == k {
                if left == 0 {
                    cont(row, col_left);
                }
                return;
            }
            let max = left.min(col_left[i]);
            for v in 0..=max {
                row[i] = v;
                col_left[i] -= v;
                fill(i + 1, left - v, k, row, col_left, cont);
                col_left[i] += v;
                row[i] = 0;
            }
        }
        let mut cont = |row: &mut Vec<usize>, col_left: &mut Vec<usize>| {
            acc.push(row.clone());
            rec(rows, j + 1, col_left, acc, out);
            acc.pop();
        };
        fill(0, rows[j], k, &mut row, col_left, &mut cont);
    }
    let mut out = Vec::new();
    let mut col_left = cols.to_vec();
    let mut acc = Vec::new();
    rec(rows, 0, &mut col_left, &mut acc, &mut out);
    out
}

/// The geometric lemma (Bernstein–Zelevinsky/Renard) for J_{N_λ}(Ind_{P_ν}σ):
/// one term per w ∈ S^min_{ν,λ}, equivalently per row semi-standard shape-ν
/// tableau of type λ, equivalently per matrix with row sums ν and column
/// sums (p_i).
pub fn geometric_lemma_terms(
    nu: &Composition,
    lambda: &SlopeVector,
    sigma: &[StdBlock],
) -> Result<Vec<GeomTerm>> {
    if sigma.len() != nu.len() || sigma.iter().zip(nu.parts()).any(|(b, &nj)| b.m != nj) {
        return Err(Error::Domain(
            "σ blocks do not match the blocks of ν".into(),
        ));
    }
    let lam_blocks = lambda.blocks();
    if nu.total() != lam_blocks.total() {
        return Err(Error::Domain("ν and λ have different totals".into()));
    }
    let mut out = Vec::new();
    for matrix in matrices_with_margins(nu.parts(), lam_blocks.parts()) {
        // tableau with m_{ji} entries equal to i in row j, weakly increasing
        let rows: Vec<Vec<usize>> = matrix
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .flat_map(|(i, &m)| std::iter::repeat(i + 1).take(m))
                    .collect()
            })
            .collect();
        let t = RowTableau::new(nu.clone(), lam_blocks.clone(), rows)?;
        let w = perm_from_tableau(&t)?;
        let inner = crate::symcomb::intersection_composition(&w, nu, &lam_blocks)?;
        let mut columns: Vec<Vec<StdBlock>> = vec![Vec::new(); lam_blocks.len()];
        for (j, row) in matrix.iter().enumerate() {
            let nonzero: Vec<(usize, usize)> = row
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m > 0)
                .map(|(i, &m)| (i, m))
                .collect();
            let p = Composition::strict(nonzero.iter().map(|&(_, m)| m).collect())?;
            let pieces = jacquet_twisted(sigma[j].tag, sigma[j].m, &sigma[j].char_, &p)?;
            for ((i, _), piece) in nonzero.into_iter().zip(pieces) {
                columns[i].push(piece);
            }
        }
        out.push(GeomTerm {
            matrix,
            w,
            inner,
            columns,
        });
    }
    Ok(out)
}

/// Tadić's expansion of Speh(x,y)(char) in the Zelevinsky ring:
/// Σ_{w∈S_y^{(x)}} (−1)^{ℓ(w)} Π_i St_{x+w(i)−i}(char·|·|^{(w(i)+i−y−1)/2}),
/// size-0 blocks dropped, centered so that Speh(x,1) = St_x(char) and
/// Speh(1,y) = 1_{GL_y}(char) hold on the nose.
pub fn speh_expand(x: usize, y: usize, char_: &CharSpec) -> Result<VirtualRep> {
    if x == 0 || y == 0 {
        return Err(Error::Domain("Speh(x,y) needs x, y ≥ 1".into()));
    }
    if x == 1 {
        return Ok(VirtualRep::single(vec![StdBlock {
            tag: BlockTag::Triv,
            m: y,
            char_: char_.clone(),
        }]));
    }
    if y == 1 {
        return Ok(VirtualRep::single(vec![StdBlock {
            tag: BlockTag::St,
            m: x,
            char_: char_.clone(),
        }]));
    }
    let mut terms = Vec::new();
    for images in (1..=y).permutations(y) {
        let w = Permutation::from_images(images)?;
        if (1..=y).any(|i| w.image(i) + x < i) {
            continue;
        }
        let sign = if inversions(&w) % 2 == 0 { 1 } else { -1 };
        let mut blocks = Vec::new();
        for i in 1..=y {
            let size = x + w.image(i) - i;
            if size == 0 {
                continue;
            }
            let shift = rat((w.image(i) + i) as i64 - y as i64 - 1, 2);
            blocks.push(StdBlock {
                tag: BlockTag::St,
                m: size,
                char_: char_.shifted(shift),
            });
        }
        terms.push((sign, blocks));
    }
    Ok(VirtualRep::from_terms(terms))
}

/// Expand any descriptor into a virtual combination of standard modules.
/// SemiStableRigid factors multiply in the Zelevinsky ring (block lists
/// concatenate in factor order).
pub fn normalize(rep: &RepDescriptor) -> Result<VirtualRep> {
    match rep {
        RepDescriptor::SteinbergTwist(m, c) => Ok(VirtualRep::single(vec![StdBlock {
            tag: BlockTag::St,
            m: *m,
            char_: c.clone(),
        }])),
        RepDescriptor::TrivialTwist(m, c) => Ok(VirtualRep::single(vec![StdBlock {
            tag: BlockTag::Triv,
            m: *m,
            char_: c.clone(),
        }])),
        RepDescriptor::Speh { x, y, char_ } => speh_expand(*x, *y, char_),
        RepDescriptor::StandardModule(blocks) => Ok(VirtualRep::single(blocks.clone())),
        RepDescriptor::SemiStableRigid { y, factors } => {
            if factors.is_empty() {
                return Err(Error::Domain("semi-stable rigid needs k ≥ 1 factors".into()));
            }
            for (_, c) in factors {
                if !c.in_unit_window() {
                    return Err(Error::Domain(
                        "Def 5.1 requires twist exponents in (-1/2, 1/2)".into(),
                    ));
                }
            }
            let mut acc: Option<VirtualRep> = None;
            for (x, c) in factors {
                let f = speh_expand(*x, *y, c)?;
                acc = Some(match acc {
                    None => f,
                    Some(a) => a.product(&f),
                });
            }
            Ok(acc.unwrap())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    TypeI,
    TypeII,
    Neither,
}

impl Classification {
    pub fn render(&self) -> &'static str {
        match self {
            Classification::TypeI => "TypeI",
            Classification::TypeII => "TypeII",
            Classification::Neither => "Neither",
        }
    }
}

fn is_p1p2_type(blocks: &[StdBlock], p1: usize, p2: usize) -> bool {
    if blocks.len() != 2 || blocks[0].tag != blocks[1].tag {
        return false;
    }
    let sizes = (blocks[0].m, blocks[1].m);
    if sizes != (p1, p2) && sizes != (p2, p1) {
        return false;
    }
    let (c1, c2) = (&blocks[0].char_, &blocks[1].char_);
    if !c1.in_unit_window() || !c2.in_unit_window() {
        return false;
    }
    if blocks[0].m != blocks[1].m {
        // Remark 5.1: p1 ≠ p2 forces e1 = e2 = 0
        c1.is_unitary() && c2.is_unitary()
    } else {
        // Remark 5.2: either e1 = e2 = 0, or e1 + e2 = 0 with ε1 = ε2
        (c1.is_unitary() && c2.is_unitary())
            || (c1.shift + c2.shift == Rat::from_integer(0) && c1.symbol == c2.symbol)
    }
}

/// Defs 5.2/5.3. `TypeI` covers the list valid in both regimes ((p₁,p₂)-type
/// plus twisted St/trivial of the full group); `TypeII` marks the two Speh
/// representations admitted only when n is even; `Neither` otherwise.
pub fn classify_type(rep: &RepDescriptor, p1: usize, p2: usize) -> Result<Classification> {
    let n = rep.ambient_n();
    if p1 + p2 != n {
        return Err(Error::Domain(format!(
            "p1 + p2 = {} but the representation lives on GL_{n}",
            p1 + p2
        )));
    }
    if p1 == 0 || p2 == 0 {
        return Err(Error::Domain("p1, p2 must be positive".into()));
    }
    // degenerate Speh descriptors collapse to trivial/Steinberg twists
    let rep = match rep {
        RepDescriptor::Speh { x: 1, y, char_ } => {
            &RepDescriptor::TrivialTwist(*y, char_.clone())
        }
        RepDescriptor::Speh { x, y: 1, char_ } => {
            &RepDescriptor::SteinbergTwist(*x, char_.clone())
        }
        other => other,
    };
    let type_i = match rep {
        RepDescriptor::SteinbergTwist(_, c) | RepDescriptor::TrivialTwist(_, c) => c.is_unitary(),
        RepDescriptor::StandardModule(blocks) => is_p1p2_type(blocks, p1, p2),
        _ => false,
    };
    if type_i {
        return Ok(Classification::TypeI);
    }
    if n % 2 == 0 {
        if let RepDescriptor::Speh { x, y, char_ } = rep {
            let speh_ii = ((*x, *y) == (n / 2, 2) || (*x, *y) == (2, n / 2)) && char_.is_unitary();
            if speh_ii {
                return Ok(Classification::TypeII);
            }
        }
    }
    Ok(Classification::Neither)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hecke_matrix_examples() {
        let n = 4;
        let ctx = VarCtx::new(0, vec![]);
        // δ_{P0}^{1/2}: coordinate i is |·|^{(n+1-2i)/2}
        let chars: Vec<CharSpec> = (1..=n)
            .map(|i| CharSpec::shift_only(rat(n as i64 + 1 - 2 * i as i64, 2)))
            .collect();
        let hm = hecke_matrix(&chars, &ctx).unwrap();
        assert_eq!(
            hm.canonical_string(),
            "(q^(-3/2), q^(-1/2), q^(1/2), q^(3/2))"
        );
        let ctx = VarCtx::new(0, vec!["eps".into()]);
        let hm = hecke_matrix(&[CharSpec::unit("eps")], &ctx).unwrap();
        assert_eq!(hm.canonical_string(), "(eps^1)");
        let ctx = VarCtx::new(0, vec![]);
        let hm = hecke_matrix(
            &[
                CharSpec::shift_only(rat(1, 2)),
                CharSpec::shift_only(rat(-1, 2)),
            ],
            &ctx,
        )
        .unwrap();
        assert_eq!(hm.canonical_string(), "(q^(-1/2), q^(1/2))");
    }

    #[test]
    fn jacquet_steinberg_gl2() {
        let p = Composition::strict(vec![1, 1]).unwrap();
        let out = jacquet_twisted(BlockTag::St, 2, &CharSpec::trivial(), &p).unwrap();
        assert_eq!(out[0].char_.shift, rat(1, 2));
        assert_eq!(out[1].char_.shift, rat(-1, 2));
        // its Hecke matrix is the δ_B^{1/2} tuple (q^{-1/2}, q^{1/2})
        let ctx = VarCtx::new(0, vec![]);
        let chars: Vec<CharSpec> = out.iter().map(|b| b.char_.clone()).collect();
        assert_eq!(
            hecke_matrix(&chars, &ctx).unwrap().canonical_string(),
            "(q^(-1/2), q^(1/2))"
        );
    }

    #[test]
    fn jacquet_gl4_two_two() {
        let p = Composition::strict(vec![2, 2]).unwrap();
        let out = jacquet_twisted(BlockTag::St, 4, &CharSpec::unit("eps"), &p).unwrap();
        assert_eq!(out[0].char_.shift, Rat::from_integer(1));
        assert_eq!(out[1].char_.shift, Rat::from_integer(-1));
        assert_eq!(out[0].tag, BlockTag::St);
        let idp = Composition::strict(vec![4]).unwrap();
        let out = jacquet_twisted(BlockTag::Triv, 4, &CharSpec::unit("eps"), &idp).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].char_, CharSpec::unit("eps"));
    }

    #[test]
    fn jacquet_transitivity_on_torus() {
        // restricting along (2,2) then refining each block to (1,1) equals
        // restricting along (1,1,1,1) directly
        for tag in [BlockTag::St, BlockTag::Triv] {
            let p22 = Composition::strict(vec![2, 2]).unwrap();
            let p11 = Composition::strict(vec![1, 1]).unwrap();
            let mut two_step = Vec::new();
            for b in jacquet_twisted(tag, 4, &CharSpec::unit("eps"), &p22).unwrap() {
                two_step.extend(jacquet_twisted(b.tag, b.m, &b.char_, &p11).unwrap());
            }
            let p1111 = Composition::strict(vec![1; 4]).unwrap();
            let one_step = jacquet_twisted(tag, 4, &CharSpec::unit("eps"), &p1111).unwrap();
            assert_eq!(two_step, one_step);
        }
    }

    #[test]
    fn speh_degenerate_cases() {
        let c = CharSpec::unit("eps");
        let v = speh_expand(1, 3, &c).unwrap();
        assert_eq!(v.render(), "Std[Triv(3;eps|0)]");
        let v = speh_expand(3, 1, &c).unwrap();
        assert_eq!(v.render(), "Std[St(3;eps|0)]");
    }

    #[test]
    fn speh_two_two() {
        let v = speh_expand(2, 2, &CharSpec::trivial()).unwrap();
        assert_eq!(
            v.render(),
            "Std[St(2;-|-1/2),St(2;-|1/2)] + -Std[St(3;-|0),St(1;-|0)]"
        );
    }

    #[test]
    fn speh_two_y_has_the_two_key_terms() {
        // the (y,y) and (y+1,y−1) standard modules of Speh(2,y), centered
        for y in [3usize, 4, 5] {
            let v = speh_expand(2, y, &CharSpec::trivial()).unwrap();
            let mut found_yy = 0i64;
            let mut found_pm = 0i64;
            for (r, c) in v.terms() {
                let sizes: Vec<usize> = r.iter().map(|b| b.m).collect();
                if sizes == vec![y, y] {
                    assert_eq!(r[0].char_.shift, rat(-1, 2));
                    assert_eq!(r[1].char_.shift, rat(1, 2));
                    found_yy = c;
                }
                if sizes == vec![y + 1, y - 1] {
                    assert_eq!(r[0].char_.shift, Rat::from_integer(0));
                    assert_eq!(r[1].char_.shift, Rat::from_integer(0));
                    found_pm = c;
                }
            }
            assert_eq!(found_yy, 1, "y = {y}");
            assert_eq!(found_pm, -1, "y = {y}");
        }
    }

    #[test]
    fn s_y_x_constraint_vacuous_for_large_x() {
        for y in 2..=5usize {
            let x = y; // x ≥ y−1
            let v = speh_expand(x, y, &CharSpec::trivial()).unwrap();
            let count: i64 = v.terms().map(|(_, c)| c.abs()).sum();
            let fact: i64 = (1..=y as i64).product();
            assert_eq!(count, fact, "x={x}, y={y}");
        }
    }

    #[test]
    fn geometric_lemma_counts() {
        let nu = Composition::strict(vec![2, 1]).unwrap();
        let lambda = SlopeVector::two_slope(2, 1, 1, 0).unwrap();
        let sigma = vec![
            StdBlock {
                tag: BlockTag::St,
                m: 2,
                char_: CharSpec::trivial(),
            },
            StdBlock {
                tag: BlockTag::St,
                m: 1,
                char_: CharSpec::trivial(),
            },
        ];
        let terms = geometric_lemma_terms(&nu, &lambda, &sigma).unwrap();
        let rss = RowTableau::enumerate_rss(&nu, &lambda.blocks()).unwrap();
        assert_eq!(terms.len(), rss.len());
        assert_eq!(terms.len(), 2);
    }

    #[test]
    fn geometric_lemma_full_group_single_term() {
        let nu = Composition::strict(vec![3]).unwrap();
        let lambda = SlopeVector::two_slope(2, 1, 1, 0).unwrap();
        let sigma = vec![StdBlock {
            tag: BlockTag::St,
            m: 3,
            char_: CharSpec::unit("eps"),
        }];
        let terms = geometric_lemma_terms(&nu, &lambda, &sigma).unwrap();
        assert_eq!(terms.len(), 1);
        assert!(terms[0].w.is_identity());
        assert_eq!(terms[0].columns[0].len(), 1);
        assert_eq!(terms[0].columns[1].len(), 1);
        assert_eq!(terms[0].columns[0][0].char_.shift, rat(1, 2));
        assert_eq!(terms[0].columns[1][0].char_.shift, rat(-1, 1));
    }

    #[test]
    fn geometric_lemma_block_swap() {
        let nu = Composition::strict(vec![2, 2]).unwrap();
        let lambda = SlopeVector::two_slope(2, 1, 2, 0).unwrap();
        let sigma = vec![
            StdBlock {
                tag: BlockTag::St,
                m: 2,
                char_: CharSpec::unit("e1"),
            },
            StdBlock {
                tag: BlockTag::St,
                m: 2,
                char_: CharSpec::unit("e2"),
            },
        ];
        let terms = geometric_lemma_terms(&nu, &lambda, &sigma).unwrap();
        let full: Vec<_> = terms
            .iter()
            .filter(|t| t.columns.iter().all(|c| c.len() == 1))
            .collect();
        assert_eq!(full.len(), 2);
        assert!(full.iter().any(|t| t.w.is_identity()));
        assert!(full.iter().any(|t| !t.w.is_identity()));
    }

    #[test]
    fn classification() {
        let eps = CharSpec::unit("eps");
        let st = RepDescriptor::SteinbergTwist(4, eps.clone());
        assert_eq!(classify_type(&st, 2, 2).unwrap(), Classification::TypeI);
        let speh = RepDescriptor::Speh {
            x: 2,
            y: 3,
            char_: eps.clone(),
        };
        assert_eq!(classify_type(&speh, 3, 3).unwrap(), Classification::TypeII);
        let speh33 = RepDescriptor::Speh {
            x: 3,
            y: 3,
            char_: eps.clone(),
        };
        assert_eq!(
            classify_type(&speh33, 5, 4).unwrap(),
            Classification::Neither
        );
        let std = RepDescriptor::StandardModule(vec![
            StdBlock {
                tag: BlockTag::St,
                m: 3,
                char_: CharSpec::unit("e1"),
            },
            StdBlock {
                tag: BlockTag::St,
                m: 2,
                char_: CharSpec::unit("e2"),
            },
        ]);
        assert_eq!(classify_type(&std, 3, 2).unwrap(), Classification::TypeI);
        assert_eq!(classify_type(&std, 2, 3).unwrap(), Classification::TypeI);
        assert_eq!(classify_type(&std, 4, 1).unwrap(), Classification::Neither);
    }

    #[test]
    fn rep_parse_round_trip() {
        for s in [
            "St(4;eps|0)",
            "Triv(3;-|0)",
            "Speh(2,3;eps|0)",
            "Std[St(2;e1|0),Triv(1;-|1/2)]",
            "SSR(2)[(2;eps|0),(1;eps2|-1/4)]",
        ] {
            let r = RepDescriptor::parse(s).unwrap();
            assert_eq!(r.render(), s);
        }
        assert!(RepDescriptor::parse("Nope(1)").is_err());
    }
}
