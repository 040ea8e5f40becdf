//! L/R-replacements on power forms and the disconnection witness.
//!
//! A [`PowerForm`] `(q; m, n)` stands for the positive word `(xy^q)^m x y^n`.
//! Replacing an ordered pair `(D₁, D₂)` produces `D_*` with
//! `m_* = m₁ + m₂ + 1` and `n_* = n₁ + n₂ − q`; an R-replacement continues
//! with `(D₁, D_*)`, an L-replacement with `(D_*, D₂)`. Vertices carry Farey
//! labels and each child gets the mediant of its parents.
//!
//! [`witness`] runs the construction for a lens space whose complex is not
//! contractible and returns the resulting strip of triangles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{RecordError, ReplacementError};
use crate::pqseq::LensParams;
use crate::primitivity::is_primitive;
use crate::record::{from_record, to_record, STRIP_SCHEMA};
use crate::words::{Alphabet, Generator, Letter, Word};

/// `(xy^q)^m x y^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerForm {
    pub q: u64,
    pub m: u64,
    pub n: u64,
}

impl PowerForm {
    pub fn new(q: u64, m: u64, n: u64) -> PowerForm {
        PowerForm { q, m, n }
    }

    /// Length `m(q+1) + 1 + n`.
    pub fn len(&self) -> u64 {
        self.m * (self.q + 1) + 1 + self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn expand(&self) -> Word {
        let x = Letter::pos(Generator::G1);
        let y = Letter::pos(Generator::G2);
        let mut letters = Vec::with_capacity(self.len() as usize);
        for _ in 0..self.m {
            letters.push(x);
            letters.extend(std::iter::repeat_n(y, self.q as usize));
        }
        letters.push(x);
        letters.extend(std::iter::repeat_n(y, self.n as usize));
        Word::reduce(letters, Alphabet::XY)
    }

    /// Exponent sums of `x` and `y` in the expansion.
    pub fn abelianization(&self) -> (u64, u64) {
        (self.m + 1, self.m * self.q + self.n)
    }
}

impl fmt::Display for PowerForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ypow = |k: u64| match k {
            0 => String::new(),
            1 => "y".to_string(),
            k => format!("y^{k}"),
        };
        let block = format!("x{}", ypow(self.q));
        match self.m {
            0 => {}
            1 => f.write_str(&block)?,
            m => write!(f, "({block})^{m}")?,
        }
        write!(f, "x{}", ypow(self.n))
    }
}

/// `a/b` in lowest terms; `1/0` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyLabel {
    a: u64,
    b: u64,
}

impl FareyLabel {
    /// Reduces to lowest terms. `None` for `0/0`.
    pub fn new(a: u64, b: u64) -> Option<FareyLabel> {
        if a == 0 && b == 0 {
            return None;
        }
        let g = a.gcd(&b);
        Some(FareyLabel { a: a / g, b: b / g })
    }

    pub const INFINITY: FareyLabel = FareyLabel { a: 1, b: 0 };
    pub const ZERO: FareyLabel = FareyLabel { a: 0, b: 1 };

    pub fn numer(&self) -> u64 {
        self.a
    }

    pub fn denom(&self) -> u64 {
        self.b
    }

    pub fn mediant(&self, other: &FareyLabel) -> FareyLabel {
        FareyLabel::new(self.a + other.a, self.b + other.b).expect("mediant of labels is nonzero")
    }

    /// `a·r − (b − 1)·q`, the tail exponent predicted for this label.
    pub fn tail(&self, r: u64, q: u64) -> i64 {
        self.a as i64 * r as i64 - (self.b as i64 - 1) * q as i64
    }
}

impl fmt::Display for FareyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl std::str::FromStr for FareyLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('/').ok_or_else(|| format!("expected a/b, got {s:?}"))?;
        let a: u64 = a.trim().parse().map_err(|e| format!("{e}"))?;
        let b: u64 = b.trim().parse().map_err(|e| format!("{e}"))?;
        FareyLabel::new(a, b).ok_or_else(|| "0/0 is not a label".to_string())
    }
}

impl Serialize for FareyLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FareyLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReplaceSide {
    L,
    R,
}

/// Replaces the ordered pair `(first, second)`. Returns `D_*` and the new
/// ordered pair.
pub fn replace(
    first: PowerForm,
    second: PowerForm,
    side: ReplaceSide,
) -> Result<(PowerForm, (PowerForm, PowerForm)), ReplacementError> {
    if first.q != second.q {
        return Err(ReplacementError::BlockMismatch(first.q, second.q));
    }
    let q = first.q;
    let n = (first.n + second.n)
        .checked_sub(q)
        .ok_or(ReplacementError::NegativeTail {
            n1: first.n,
            n2: second.n,
            q,
        })?;
    let child = PowerForm::new(q, first.m + second.m + 1, n);
    let pair = match side {
        ReplaceSide::R => (first, child),
        ReplaceSide::L => (child, second),
    };
    Ok((child, pair))
}

/// Continued fraction `[p₀; p₁, …, p_k]` of `num/den`, last quotient ≥ 2
/// unless the value is an integer.
pub fn continued_fraction(num: u64, den: u64) -> Result<Vec<u64>, ReplacementError> {
    if num == 0 || den == 0 || num.gcd(&den) != 1 {
        return Err(ReplacementError::BadFraction(num, den));
    }
    let (mut a, mut b) = (num, den);
    let mut out = Vec::new();
    while b != 0 {
        out.push(a / b);
        (a, b) = (b, a % b);
    }
    Ok(out)
}

/// Arithmetic data behind a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessData {
    /// Block exponent, the normalized `q`.
    pub q: u64,
    pub m: u64,
    pub r: u64,
    pub s: u64,
    pub t: u64,
}

impl WitnessData {
    /// `p = qm + r` with `2 <= r <= q − 2`, then the minimal `t >= 0` with
    /// `s·r − t·q = q + 1`. `None` when no such `r` exists.
    pub fn for_params(params: LensParams) -> Option<WitnessData> {
        let q = params.q_norm;
        let (m, r) = params.p.div_rem(&q);
        if q < 4 || r < 2 || r > q - 2 {
            return None;
        }
        // gcd(r, q) = 1, so a solution exists with t < r
        let t = (0..r).find(|t| (q + 1 + t * q).is_multiple_of(r))?;
        let s = (q + 1 + t * q) / r;
        Some(WitnessData { q, m, r, s, t })
    }

    pub fn target(&self) -> FareyLabel {
        FareyLabel::new(self.s, self.t + 1).expect("s >= 1")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripVertex {
    pub id: i64,
    pub label: FareyLabel,
    pub form: PowerForm,
    pub word: String,
    pub primitive: bool,
}

/// Vertices, disjointness edges and triangles produced by the replacement
/// process. Vertex ids follow creation order; the seed `D_{−1}` has id −1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripGraph {
    pub params: LensParams,
    pub data: WitnessData,
    pub continued_fraction: Vec<u64>,
    vertices: Vec<StripVertex>,
    edges: Vec<(i64, i64)>,
    triangles: Vec<(i64, i64, i64)>,
}

impl StripGraph {
    pub fn vertices(&self) -> &[StripVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(i64, i64)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[(i64, i64, i64)] {
        &self.triangles
    }

    pub fn vertex(&self, id: i64) -> Option<&StripVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    /// The seed `D_{−1}` (the disk with boundary word `x`).
    pub fn first(&self) -> &StripVertex {
        &self.vertices[0]
    }

    /// The last vertex created.
    pub fn last(&self) -> &StripVertex {
        self.vertices.last().expect("strip has seeds")
    }

    /// A copy with one more edge.
    pub fn with_edge(&self, a: i64, b: i64) -> StripGraph {
        let mut g = self.clone();
        g.edges.push((a, b));
        g
    }

    pub fn to_record(&self) -> String {
        to_record(STRIP_SCHEMA, self)
    }

    pub fn from_record(text: &str) -> Result<StripGraph, RecordError> {
        from_record(STRIP_SCHEMA, text)
    }

    pub fn to_dot(&self) -> String {
        let LensParams { p, q, .. } = self.params;
        let node = |id: i64| {
            if id < 0 {
                format!("D_m{}", -id)
            } else {
                format!("D_{id}")
            }
        };
        let mut out = format!("graph strip_{p}_{q} {{\n");
        out.push_str("  node [shape=circle];\n");
        for v in &self.vertices {
            let shape = if v.primitive { "doublecircle" } else { "circle" };
            let _ = writeln!(
                out,
                "  {} [label=\"D_{}\\n{}\\n{}\", shape={}];",
                node(v.id),
                v.id,
                v.label,
                v.form,
                shape
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", node(a), node(b));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let LensParams { p, q, .. } = self.params;
        let d = self.data;
        let cf: Vec<String> = self.continued_fraction.iter().map(u64::to_string).collect();
        let mut out = String::new();
        let _ = writeln!(out, "witness strip for L({p}, {q})");
        let _ = writeln!(
            out,
            "p = {}*{} + {}  s = {}  t = {}  s/(t+1) = [{}]",
            d.q,
            d.m,
            d.r,
            d.s,
            d.t,
            cf.join(", ")
        );
        for v in &self.vertices {
            let flag = if v.primitive { "primitive" } else { "not primitive" };
            let _ = writeln!(
                out,
                "D_{:<3} {:>7}  {:<24}  {}",
                v.id,
                v.label.to_string(),
                v.form.to_string(),
                flag
            );
        }
        let _ = writeln!(out, "edges: {}  triangles: {}", self.edges.len(), self.triangles.len());
        let sep = if separation_check(self) { "yes" } else { "no" };
        let _ = writeln!(out, "primitive endpoints separated: {sep}");
        out
    }
}

/// Builds the strip for a non-contractible `params`.
///
/// Seeds `D_{−1} = x` (label 0/1) and `D_0 = (xy^q)^{m−1} x y^{q+r}` (label
/// 1/0), then applies blocks of `p₀` R-replacements, `p₁` L-replacements and
/// so on along the continued fraction of `s/(t+1)`, starting from the ordered
/// pair `(D_0, D_{−1})`.
pub fn witness(params: LensParams) -> Result<StripGraph, ReplacementError> {
    let data = WitnessData::for_params(params).ok_or(ReplacementError::ContractibleInput)?;
    let WitnessData { q, m, r, s, t } = data;
    let cf = continued_fraction(s, t + 1)?;

    let vertex = |id: i64, label: FareyLabel, form: PowerForm| {
        let word = form.expand();
        StripVertex {
            id,
            label,
            form,
            primitive: is_primitive(&word),
            word: word.to_string(),
        }
    };
    let seed_low = vertex(-1, FareyLabel::ZERO, PowerForm::new(q, 0, 0));
    let seed_high = vertex(0, FareyLabel::INFINITY, PowerForm::new(q, m - 1, q + r));

    let mut edges = vec![(0, -1)];
    let mut triangles = Vec::new();
    let mut pair = (
        (seed_high.id, seed_high.label, seed_high.form),
        (seed_low.id, seed_low.label, seed_low.form),
    );
    let mut vertices = vec![seed_low, seed_high];
    let mut next_id = 1i64;
    for (block, &count) in cf.iter().enumerate() {
        let side = if block % 2 == 0 { ReplaceSide::R } else { ReplaceSide::L };
        for _ in 0..count {
            let (first, second) = pair;
            let (child, _) = replace(first.2, second.2, side)?;
            let label = first.1.mediant(&second.1);
            let v = vertex(next_id, label, child);
            edges.push((first.0, v.id));
            edges.push((second.0, v.id));
            triangles.push((first.0, second.0, v.id));
            let node = (v.id, label, child);
            pair = match side {
                ReplaceSide::R => (first, node),
                ReplaceSide::L => (node, second),
            };
            vertices.push(v);
            next_id += 1;
        }
    }
    Ok(StripGraph {
        params,
        data,
        continued_fraction: cf,
        vertices,
        edges,
        triangles,
    })
}

/// True iff `D_{−1}` and the last vertex are primitive and lie in different
/// components once every non-primitive vertex is deleted.
pub fn separation_check(strip: &StripGraph) -> bool {
    let (start, end) = (strip.first(), strip.last());
    if !start.primitive || !end.primitive || start.id == end.id {
        return false;
    }
    let keep: BTreeSet<i64> = strip.vertices.iter().filter(|v| v.primitive).map(|v| v.id).collect();
    let mut adj: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &(a, b) in &strip.edges {
        if keep.contains(&a) && keep.contains(&b) {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let mut seen = BTreeSet::from([start.id]);
    let mut queue = VecDeque::from([start.id]);
    while let Some(u) = queue.pop_front() {
        if u == end.id {
            return false;
        }
        for &v in adj.get(&u).into_iter().flatten() {
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(q: u64, m: u64, n: u64) -> PowerForm {
        PowerForm::new(q, m, n)
    }

    #[test]
    fn expand_examples() {
        assert_eq!(pf(5, 0, 0).expand().to_string(), "x");
        assert_eq!(pf(5, 1, 7).expand().to_string(), "xyyyyyxyyyyyyy");
        assert_eq!(pf(5, 2, 2).expand().to_string(), "xyyyyyxyyyyyxyy");
        assert_eq!(pf(5, 2, 2).expand().len() as u64, pf(5, 2, 2).len());
    }

    #[test]
    fn display_examples() {
        assert_eq!(pf(5, 0, 0).to_string(), "x");
        assert_eq!(pf(5, 1, 7).to_string(), "xy^5xy^7");
        assert_eq!(pf(5, 4, 4).to_string(), "(xy^5)^4xy^4");
        assert_eq!(pf(1, 2, 1).to_string(), "(xy)^2xy");
    }

    #[test]
    fn replace_examples() {
        let (child, pair) = replace(pf(5, 1, 7), pf(5, 0, 0), ReplaceSide::R).unwrap();
        assert_eq!(child, pf(5, 2, 2));
        assert_eq!(pair, (pf(5, 1, 7), pf(5, 2, 2)));
        let (child, _) = replace(pf(5, 1, 7), pf(5, 2, 2), ReplaceSide::R).unwrap();
        assert_eq!(child, pf(5, 4, 4));
        let (_, pair) = replace(pf(5, 1, 7), pf(5, 2, 2), ReplaceSide::L).unwrap();
        assert_eq!(pair, (pf(5, 4, 4), pf(5, 2, 2)));
        assert_eq!(
            replace(pf(5, 1, 2), pf(5, 0, 1), ReplaceSide::R),
            Err(ReplacementError::NegativeTail { n1: 2, n2: 1, q: 5 })
        );
        assert!(matches!(
            replace(pf(5, 1, 2), pf(4, 0, 1), ReplaceSide::R),
            Err(ReplacementError::BlockMismatch(5, 4))
        ));
    }

    #[test]
    fn farey_labels() {
        assert_eq!(
            FareyLabel::INFINITY
                .mediant(&FareyLabel::new(1, 1).unwrap())
                .to_string(),
            "2/1"
        );
        assert_eq!(FareyLabel::new(4, 2).unwrap().to_string(), "2/1");
        assert!(FareyLabel::new(0, 0).is_none());
        assert_eq!("1/0".parse::<FareyLabel>().unwrap(), FareyLabel::INFINITY);
        assert_eq!(FareyLabel::ZERO.tail(2, 5), 0);
        assert_eq!(FareyLabel::INFINITY.tail(2, 5), 7);
    }

    #[test]
    fn continued_fraction_examples() {
        assert_eq!(continued_fraction(3, 1).unwrap(), vec![3]);
        assert_eq!(continued_fraction(5, 2).unwrap(), vec![2, 2]);
        assert_eq!(continued_fraction(1, 1).unwrap(), vec![1]);
        assert_eq!(continued_fraction(3, 2).unwrap(), vec![1, 2]);
        assert_eq!(continued_fraction(4, 2), Err(ReplacementError::BadFraction(4, 2)));
    }

    #[test]
    fn witness_data_examples() {
        let d = WitnessData::for_params(LensParams::new(12, 5).unwrap()).unwrap();
        assert_eq!((d.m, d.r, d.s, d.t), (2, 2, 3, 0));
        let d = WitnessData::for_params(LensParams::new(17, 7).unwrap()).unwrap();
        assert_eq!((d.m, d.r, d.s, d.t), (2, 3, 5, 1));
        assert!(WitnessData::for_params(LensParams::new(7, 2).unwrap()).is_none());
    }

    #[test]
    fn witness_twelve_five() {
        let strip = witness(LensParams::new(12, 5).unwrap()).unwrap();
        let labels: Vec<String> = strip.vertices().iter().map(|v| v.label.to_string()).collect();
        assert_eq!(labels, ["0/1", "1/0", "1/1", "2/1", "3/1"]);
        let forms: Vec<PowerForm> = strip.vertices().iter().map(|v| v.form).collect();
        assert_eq!(forms, [pf(5, 0, 0), pf(5, 1, 7), pf(5, 2, 2), pf(5, 4, 4), pf(5, 6, 6)]);
        // D_2 = (xy^5)^4xy^4 has y-runs 5,5,5,5,4 and is primitive as well
        let prim: Vec<bool> = strip.vertices().iter().map(|v| v.primitive).collect();
        assert_eq!(prim, [true, false, false, true, true]);
        assert_eq!(strip.triangles(), &[(0, -1, 1), (0, 1, 2), (0, 2, 3)]);
        assert_eq!(strip.last().form.abelianization(), (7, 36));
        assert!(separation_check(&strip));
        assert!(!separation_check(&strip.with_edge(-1, 3)));
    }

    #[test]
    fn witness_seventeen_seven() {
        let strip = witness(LensParams::new(17, 7).unwrap()).unwrap();
        assert_eq!(strip.continued_fraction, vec![2, 2]);
        let last = strip.last();
        assert_eq!(last.label.to_string(), "5/2");
        assert_eq!(last.form.n, 8);
        assert!(last.primitive);
        assert!(separation_check(&strip));
    }

    #[test]
    fn witness_rejects_contractible() {
        assert_eq!(
            witness(LensParams::new(7, 2).unwrap()),
            Err(ReplacementError::ContractibleInput)
        );
        assert_eq!(
            witness(LensParams::new(9, 4).unwrap()),
            Err(ReplacementError::ContractibleInput)
        );
    }

    #[test]
    fn strip_record_round_trip() {
        let strip = witness(LensParams::new(17, 7).unwrap()).unwrap();
        let text = strip.to_record();
        assert_eq!(StripGraph::from_record(&text).unwrap(), strip);
    }
}
