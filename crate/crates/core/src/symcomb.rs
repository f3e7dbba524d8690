//! Symmetric-group and composition combinatorics (§4).
//!
//! Double cosets S_λ\S_n/S_ν have unique minimal-length representatives
//! (Prop 4.2) parameterized by row semi-standard λ-tableaux of type ν
//! (Prop 4.3); the intersection parabolic P_ν ∩ wP_λw⁻¹ for minimal w is
//! standard and its block count is read off the tableau (Prop 4.4). A
//! brute-force closure oracle is provided for small n.

use itertools::Itertools;
use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// Cap for the factorial-cost oracles, overridable via HECKE_TRACE_MAX_N.
pub fn brute_force_cap() -> usize {
    std::env::var("HECKE_TRACE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}

/// An element of S_n in one-line notation (images of 1..n, 1-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v < 1 || v > n || seen[v] {
                return Err(Error::Domain(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// One-line rendering "2,3,1".
    pub fn one_line(&self) -> String {
        self.images.iter().map(|v| v.to_string()).join(",")
    }

    pub fn parse_one_line(s: &str) -> Result<Permutation> {
        let images: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|t| t.trim().parse()).collect();
        let images = images.map_err(|_| Error::Parse(format!("bad permutation `{s}`")))?;
        Permutation::from_images(images)
    }
}

/// inv(w) = #{(i,j) : i<j, w(i)>w(j)}; equals the Coxeter length ℓ(w)
/// (Prop 4.1).
pub fn inversions(w: &Permutation) -> usize {
    let im = w.images();
    let mut count = 0;
    for i in 0..im.len() {
        for j in i + 1..im.len() {
            if im[i] > im[j] {
                count += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    /// all parts positive
    Strict,
    /// parts ≥ 0 allowed ("extended partitions" of §2)
    Extended,
}

/// A composition (ordered tuple of parts) of n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    flavor: Flavor,
}

// Hash/Ord only look at parts; flavor is a validation mode.
impl Composition {
    pub fn strict(parts: Vec<usize>) -> Result<Composition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain(format!(
                "strict composition has a zero part: {parts:?}"
            )));
        }
        Ok(Composition {
            parts,
            flavor: Flavor::Strict,
        })
    }

    pub fn extended(parts: Vec<usize>) -> Composition {
        Composition {
            parts,
            flavor: Flavor::Extended,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Partial sums (0, p_1, p_1+p_2, …, n).
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &p in &self.parts {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The half-open 1-based interval of block i (0-based index).
    pub fn block_interval(&self, i: usize) -> std::ops::Range<usize> {
        let ps = self.prefix_sums();
        ps[i] + 1..ps[i + 1] + 1
    }

    /// Group the parts of `fine` into consecutive runs matching `self`'s
    /// parts; errors unless `fine` refines `self` blockwise.
    pub fn refinement_groups(&self, fine: &Composition) -> Result<Vec<Vec<usize>>> {
        let mut groups = Vec::with_capacity(self.parts.len());
        let mut it = fine.parts.iter().copied().peekable();
        for &target in &self.parts {
            let mut group = Vec::new();
            let mut acc = 0;
            while acc < target {
                match it.next() {
                    Some(p) => {
                        acc += p;
                        group.push(p);
                    }
                    None => {
                        return Err(Error::Domain(format!(
                            "{:?} does not refine {:?}",
                            fine.parts, self.parts
                        )))
                    }
                }
            }
            if acc != target {
                return Err(Error::Domain(format!(
                    "{:?} does not refine {:?}",
                    fine.parts, self.parts
                )));
            }
            groups.push(group);
        }
        if it.next().is_some() {
            return Err(Error::Domain(format!(
                "{:?} does not refine {:?}",
                fine.parts, self.parts
            )));
        }
        Ok(groups)
    }

    pub fn render(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).join(",")
    }

    pub fn parse(s: &str, flavor: Flavor) -> Result<Composition> {
        let parts: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|t| t.trim().parse()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad composition `{s}`")))?;
        match flavor {
            Flavor::Strict => Composition::strict(parts),
            Flavor::Extended => Ok(Composition::extended(parts)),
        }
    }
}

/// Built-in filters for `enumerate_compositions`, implementing the
/// truncation conditions of Prop 3.2.
#[derive(Debug, Clone, Copy)]
pub enum Constraint<'a> {
    /// χ (Prop 3.2(1)): slopes s_j/m_j strictly decreasing along the given
    /// block sizes.
    ChiChain { sizes: &'a [usize] },
    /// χ̂ (Prop 3.2(2)): strict slope deficiency Σ_{j≤b} s_j < (s/n)·Σ_{j≤b} m_j
    /// on every proper prefix b.
    ChiHatPrefix { sizes: &'a [usize], s: usize, n: usize },
}

impl Constraint<'_> {
    pub fn admits(&self, parts: &[usize]) -> bool {
        match self {
            Constraint::ChiChain { sizes } => {
                debug_assert_eq!(parts.len(), sizes.len());
                for j in 0..parts.len().saturating_sub(1) {
                    // s_j/m_j > s_{j+1}/m_{j+1} without rationals
                    if parts[j] * sizes[j + 1] <= parts[j + 1] * sizes[j] {
                        return false;
                    }
                }
                true
            }
            Constraint::ChiHatPrefix { sizes, s, n } => {
                debug_assert_eq!(parts.len(), sizes.len());
                let mut ps = 0usize;
                let mut pm = 0usize;
                for b in 0..parts.len().saturating_sub(1) {
                    ps += parts[b];
                    pm += sizes[b];
                    if ps * n >= s * pm {
                        return false;
                    }
                }
                true
            }
        }
    }
}

/// All compositions of n into k parts in ascending lexicographic order,
/// optionally filtered by a built-in constraint.
pub fn enumerate_compositions(
    n: usize,
    k: usize,
    flavor: Flavor,
    constraint: Option<Constraint>,
) -> Result<Vec<Composition>> {
    if k == 0 {
        return Err(Error::Domain("need at least one part".into()));
    }
    let min_part = match flavor {
        Flavor::Strict => 1usize,
        Flavor::Extended => 0usize,
    };
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        n_left: usize,
        k_left: usize,
        min_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k_left == 0 {
            if n_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let reserve = min_part * (k_left - 1);
        if n_left < min_part + reserve {
            return;
        }
        for p in min_part..=(n_left - reserve) {
            cur.push(p);
            rec(n_left - p, k_left - 1, min_part, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, k, min_part, &mut cur, &mut raw);
    for parts in raw {
        if let Some(c) = &constraint {
            if !c.admits(&parts) {
                continue;
            }
        }
        out.push(match flavor {
            Flavor::Strict => Composition::strict(parts)?,
            Flavor::Extended => Composition::extended(parts),
        });
    }
    Ok(out)
}

/// All strict compositions of n (any length), ascending by length then lex.
pub fn all_strict_compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_compositions(n, k, Flavor::Strict, None).unwrap());
    }
    out
}

fn check_pair(lambda: &Composition, nu: &Composition) -> Result<usize> {
    let n = lambda.total();
    if nu.total() != n {
        return Err(Error::Domain(format!(
            "compositions of different totals: {:?} vs {:?}",
            lambda.parts, nu.parts
        )));
    }
    if lambda.parts.iter().any(|&p| p == 0) || nu.parts.iter().any(|&p| p == 0) {
        return Err(Error::Domain("double cosets need strict compositions".into()));
    }
    Ok(n)
}

/// Adjacent-transposition generators of the Young subgroup S_c ⊆ S_n.
fn young_generators(c: &Composition) -> Vec<Permutation> {
    let n = c.total();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &b in c.parts() {
        for i in 1..b {
            gens.push(Permutation::transposition(n, offset + i, offset + i + 1));
        }
        offset += b;
    }
    gens
}

/// The exact partition of S_n into S_λ·g·S_ν double cosets, by exhaustive
/// closure. Guarded by the brute-force cap (default n ≤ 8).
pub fn brute_double_cosets(
    lambda: &Composition,
    nu: &Composition,
) -> Result<Vec<BTreeSet<Permutation>>> {
    let n = check_pair(lambda, nu)?;
    let cap = brute_force_cap();
    if n > cap {
        return Err(Error::SizeGuard(format!(
            "brute_double_cosets limited to n <= {cap} (got n = {n})"
        )));
    }
    let left = young_generators(lambda);
    let right = young_generators(nu);
    let mut assigned: HashMap<Permutation, usize> = HashMap::new();
    let mut cosets: Vec<BTreeSet<Permutation>> = Vec::new();
    for images in (1..=n).permutations(n) {
        let w = Permutation { images };
        if assigned.contains_key(&w) {
            continue;
        }
        let id = cosets.len();
        let mut coset = BTreeSet::new();
        let mut queue = VecDeque::new();
        assigned.insert(w.clone(), id);
        coset.insert(w.clone());
        queue.push_back(w);
        while let Some(u) = queue.pop_front() {
            for g in left.iter() {
                let v = g.compose(&u);
                if !assigned.contains_key(&v) {
                    assigned.insert(v.clone(), id);
                    coset.insert(v.clone());
                    queue.push_back(v);
                }
            }
            for g in right.iter() {
                let v = u.compose(g);
                if !assigned.contains_key(&v) {
                    assigned.insert(v.clone(), id);
                    coset.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// A filling of the diagram of shape λ (row lengths) with values 1..len(ν),
/// value v appearing ν_v times. Cells are labeled row-major 1..n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowTableau {
    shape: Composition,
    typ: Composition,
    rows: Vec<Vec<usize>>,
}

impl RowTableau {
    pub fn new(shape: Composition, typ: Composition, rows: Vec<Vec<usize>>) -> Result<RowTableau> {
        if rows.len() != shape.len()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(r, &len)| r.len() != len)
        {
            return Err(Error::Domain("tableau rows do not match shape".into()));
        }
        let mut counts = vec![0usize; typ.len()];
        for r in &rows {
            for &v in r {
                if v < 1 || v > typ.len() {
                    return Err(Error::Domain(format!("entry {v} out of range")));
                }
                counts[v - 1] += 1;
            }
        }
        if counts != typ.parts() {
            return Err(Error::Domain(format!(
                "entry multiplicities {counts:?} do not match type {:?}",
                typ.parts()
            )));
        }
        Ok(RowTableau { shape, typ, rows })
    }

    /// The base filling T^λ_ν: cell with row-major label l gets entry j when
    /// Δ_{j−1} < l ≤ Δ_j (Δ = prefix sums of ν).
    pub fn base(shape: &Composition, typ: &Composition) -> Result<RowTableau> {
        if shape.total() != typ.total() {
            return Err(Error::Domain("shape and type have different totals".into()));
        }
        let delta = typ.prefix_sums();
        let entry_of = |l: usize| delta.iter().position(|&d| l <= d).unwrap();
        let mut rows = Vec::with_capacity(shape.len());
        let mut label = 1usize;
        for &len in shape.parts() {
            let mut row = Vec::with_capacity(len);
            for _ in 0..len {
                row.push(entry_of(label));
                label += 1;
            }
            rows.push(row);
        }
        RowTableau::new(shape.clone(), typ.clone(), rows)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn typ(&self) -> &Composition {
        &self.typ
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at row-major label l (1-based).
    pub fn entry(&self, l: usize) -> usize {
        let mut l = l - 1;
        for r in &self.rows {
            if l < r.len() {
                return r[l];
            }
            l -= r.len();
        }
        panic!("label out of range");
    }

    pub fn is_row_semi_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    /// N(T,i): number of distinct values in row i, for each row (Prop 4.4).
    pub fn distinct_row_entries(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().collect::<BTreeSet<_>>().len())
            .collect()
    }

    /// Fixed-width grid rendering, one line per row.
    pub fn render(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| format!("{v:>width$}")).join(" "))
            .join("\n")
    }

    /// All row semi-standard fillings of shape λ and type ν, in row-major
    /// lexicographic order of their entry sequences.
    pub fn enumerate_rss(shape: &Composition, typ: &Composition) -> Result<Vec<RowTableau>> {
        if shape.total() != typ.total() {
            return Err(Error::Domain("shape and type have different totals".into()));
        }
        // A row semi-standard filling is determined by how many of each value
        // land in each row: matrices with row sums λ_i and column sums ν_v.
        let mut out = Vec::new();
        let k = typ.len();
        let mut remaining: Vec<usize> = typ.parts().to_vec();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        fn rec(
            shape: &[usize],
            i: usize,
            k: usize,
            remaining: &mut Vec<usize>,
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<RowTableau>,
            shape_c: &Composition,
            typ_c: &Composition,
        ) {
            if i == shape.len() {
                out.push(
                    RowTableau::new(shape_c.clone(), typ_c.clone(), rows.clone()).unwrap(),
                );
                return;
            }
            // choose counts c_1..c_k for row i with Σc_v = λ_i, c_v ≤ remaining
            let target = shape[i];
            let mut counts = vec![0usize; k];
            fn choose(
                v: usize,
                left: usize,
                k: usize,
                counts: &mut Vec<usize>,
                remaining: &mut Vec<usize>,
                cont: &mut dyn FnMut(&mut Vec<usize>, &mut Vec<usize>),
            ) {
                if v == k {
                    if left == 0 {
                        cont(counts, remaining);
                    }
                    return;
                }
                let max = left.min(remaining[v]);
                for c in 0..=max {
                    counts[v] = c;
                    remaining[v] -= c;
                    choose(v + 1, left - c, k, counts, remaining, cont);
                    remaining[v] += c;
                    counts[v] = 0;
                }
            }
            let mut cont = |counts: &mut Vec<usize>, remaining: &mut Vec<usize>| {
                let mut row = Vec::with_capacity(target);
                for (v, &c) in counts.iter().enumerate() {
                    row.extend(std::iter::repeat(v + 1).take(c));
                }
                rows.push(row);
                rec(shape, i + 1, k, remaining, rows, out, shape_c, typ_c);
                rows.pop();
            };
            choose(0, target, k, &mut counts, remaining, &mut cont);
        }
        rec(
            shape.parts(),
            0,
            k,
            &mut remaining,
            &mut rows,
            &mut out,
            shape,
            typ,
        );
        // row-major lexicographic order on entry sequences
        out.sort_by(|a, b| a.rows.cmp(&b.rows));
        Ok(out)
    }
}

/// w acting on the base filling: (wT)(k) = T(w⁻¹(k)) on row-major labels.
pub fn tableau_from_perm(
    w: &Permutation,
    lambda: &Composition,
    nu: &Composition,
) -> Result<RowTableau> {
    let n = check_pair(lambda, nu)?;
    if w.n() != n {
        return Err(Error::Domain("permutation size mismatch".into()));
    }
    let base = RowTableau::base(lambda, nu)?;
    let winv = w.inverse();
    let mut rows = Vec::with_capacity(lambda.len());
    let mut label = 1usize;
    for &len in lambda.parts() {
        let mut row = Vec::with_capacity(len);
        for _ in 0..len {
            row.push(base.entry(winv.image(label)));
            label += 1;
        }
        rows.push(row);
    }
    RowTableau::new(lambda.clone(), nu.clone(), rows)
}

/// The minimal w with w·T^λ_ν = T: within each type block, positions map in
/// increasing order to the (row-major sorted) cells carrying that entry.
pub fn perm_from_tableau(t: &RowTableau) -> Result<Permutation> {
    if !t.is_row_semi_standard() {
        return Err(Error::Domain(
            "perm_from_tableau needs a row semi-standard tableau (Prop 4.3)".into(),
        ));
    }
    let n = t.shape().total();
    let delta = t.typ().prefix_sums();
    let mut cells_by_entry: Vec<Vec<usize>> = vec![Vec::new(); t.typ().len()];
    for l in 1..=n {
        cells_by_entry[t.entry(l) - 1].push(l);
    }
    let mut images = vec![0usize; n];
    for (j, cells) in cells_by_entry.iter().enumerate() {
        for (off, &cell) in cells.iter().enumerate() {
            images[delta[j] + off] = cell;
        }
    }
    Permutation::from_images(images)
}

/// One minimal-length representative per double coset S_λ·g·S_ν, via the
/// tableau bijection (Prop 4.3); deterministic tableau order.
pub fn min_coset_reps(lambda: &Composition, nu: &Composition) -> Result<Vec<Permutation>> {
    check_pair(lambda, nu)?;
    RowTableau::enumerate_rss(lambda, nu)?
        .iter()
        .map(perm_from_tableau)
        .collect()
}

/// Membership test for S^min_{λ,ν}.
pub fn is_min_rep(w: &Permutation, lambda: &Composition, nu: &Composition) -> Result<bool> {
    let t = tableau_from_perm(w, lambda, nu)?;
    if !t.is_row_semi_standard() {
        return Ok(false);
    }
    Ok(&perm_from_tableau(&t)? == w)
}

/// The strict composition describing P_ν ∩ wP_λw⁻¹ for w ∈ S^min_{ν,λ}: the
/// sets w(Λ-interval) ∩ Δ-interval are intervals of consecutive integers
/// tiling {1..n}; their lengths are returned in tiling order (§4 after
/// Prop 4.3).
pub fn intersection_composition(
    w: &Permutation,
    nu: &Composition,
    lambda: &Composition,
) -> Result<Composition> {
    let n = check_pair(nu, lambda)?;
    if w.n() != n {
        return Err(Error::Domain("permutation size mismatch".into()));
    }
    if !is_min_rep(w, nu, lambda)? {
        return Err(Error::Domain(
            "intersection_composition needs w minimal in S_ν\\S_n/S_λ (§4, Prop 4.3)".into(),
        ));
    }
    let mut intervals: Vec<(usize, usize)> = Vec::new(); // (start, len)
    for i in 0..lambda.len() {
        for j in 0..nu.len() {
            let mut cells: Vec<usize> = lambda
                .block_interval(i)
                .map(|l| w.image(l))
                .filter(|&k| nu.block_interval(j).contains(&k))
                .collect();
            if cells.is_empty() {
                continue;
            }
            cells.sort_unstable();
            if cells[cells.len() - 1] - cells[0] + 1 != cells.len() {
                return Err(Error::Domain(
                    "intersection is not an interval; w is not minimal".into(),
                ));
            }
            intervals.push((cells[0], cells.len()));
        }
    }
    intervals.sort_unstable();
    Composition::strict(intervals.into_iter().map(|(_, len)| len).collect())
}
