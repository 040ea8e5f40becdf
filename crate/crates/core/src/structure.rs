//! Combinatorial shape of the primitive disk complex `P(V)` of `L(p, q)`.
//!
//! Everything is keyed on `p` and `q_norm`. The complex is contractible iff
//! `p ≡ ±1 (mod q_norm)`; small `q_norm` (1, 2, 3) is always contractible.
//! Contractible complexes are trees unless `q_norm = 2` or `p = 2 q_norm + 1`,
//! in which case they are two-dimensional.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{ParamsError, RecordError};
use crate::pqseq::LensParams;
use crate::record::{from_record, to_record, REPORT_SCHEMA};
use crate::words::Word;

/// Contractibility of `P(V)`.
pub fn classify(params: LensParams) -> bool {
    let q = params.q_norm;
    if q <= 3 {
        return true;
    }
    let r = params.p % q;
    r == 1 || r == q - 1
}

/// Two-dimensional (given contractible): `q_norm = 2` or `p = 2 q_norm + 1`.
pub fn has_primitive_triples(params: LensParams) -> bool {
    params.q_norm == 2 || params.p == 2 * params.q_norm + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureCase {
    /// `L(2, 1)`.
    TreeAllType2,
    /// `q = 1`, `p >= 4`.
    TreeAllType1,
    /// Contractible, `q >= 2`, no primitive triples.
    TreeType0Type1,
    /// `L(3, 1)`.
    PlanarP3,
    /// `L(5, 2)`.
    PlanarP5,
    /// Two-dimensional with `p >= 7`.
    PlanarP7Plus,
    /// Not contractible.
    DisconnectedTrees,
}

impl StructureCase {
    pub fn of(params: LensParams) -> StructureCase {
        let (p, q) = (params.p, params.q_norm);
        if !classify(params) {
            StructureCase::DisconnectedTrees
        } else if has_primitive_triples(params) {
            match p {
                3 => StructureCase::PlanarP3,
                5 => StructureCase::PlanarP5,
                _ => StructureCase::PlanarP7Plus,
            }
        } else if q == 1 {
            if p == 2 {
                StructureCase::TreeAllType2
            } else {
                StructureCase::TreeAllType1
            }
        } else {
            StructureCase::TreeType0Type1
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            StructureCase::TreeAllType2 => "tree-all-type2",
            StructureCase::TreeAllType1 => "tree-all-type1",
            StructureCase::TreeType0Type1 => "tree-type0-type1",
            StructureCase::PlanarP3 => "planar-p3",
            StructureCase::PlanarP5 => "planar-p5",
            StructureCase::PlanarP7Plus => "planar-p7-plus",
            StructureCase::DisconnectedTrees => "disconnected-trees",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connectivity {
    Connected,
    InfinitelyManyTreeComponents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentShape {
    Tree,
    TwoDimensional,
}

/// Edge types by the common dual disks of the end vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeType {
    /// No common dual disk.
    T0,
    /// A unique common dual disk.
    T1,
    /// Exactly two common dual disks, forming a primitive pair.
    T2,
}

/// 2-simplex types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimplexType {
    /// Exactly one of the three pairs has a unique common dual.
    S1,
    /// All three pairs have unique common duals forming a primitive triple.
    S3,
}

/// How many 2-simplices contain an edge of a given type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimplexIncidence {
    None,
    ExactlyOne,
    ExactlyTwo,
    OneOrNone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeTypeRule {
    pub edge_type: EdgeType,
    pub simplices: SimplexIncidence,
    /// Infinitely many edges of this type meet at every vertex; `None` where
    /// the classification does not say.
    pub infinitely_many_at_each_vertex: Option<bool>,
}

/// Which primitive pairs have common dual disks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommonDualRule {
    /// `q = 1`, `p = 2`: every pair has exactly two disjoint common duals.
    EveryPairTwoDisjoint,
    /// `q = 1`, `p >= 3`: every pair has a unique common dual.
    EveryPairUnique,
    /// `q >= 2`: some primitive pair has no common dual.
    NotEveryPair,
}

/// Primitive triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TripleRule {
    /// No primitive triple exists.
    NoTriples,
    /// `p = 3`: each pair lies in a unique triple; the three common duals of
    /// a triple form a primitive triple of `W`.
    P3UniqueDualTriple,
    /// `p = 5`: a pair with a common dual lies in a unique triple, one without
    /// lies in exactly two; exactly one pair of each triple has a common dual.
    P5OneOrTwo,
    /// `p >= 7`: a pair with a common dual lies in a unique triple or in none,
    /// one without lies in a unique triple; exactly one pair of each triple
    /// has a common dual.
    P7UniqueOrNone,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub params: LensParams,
    pub case_id: StructureCase,
    pub contractible: bool,
    pub dimension: u8,
    pub connectivity: Connectivity,
    pub component_shape: ComponentShape,
    /// Components are pairwise isomorphic (only meaningful when disconnected).
    pub components_isomorphic: bool,
    pub vertex_valency_infinite: bool,
    pub vertex_meets_infinitely_many_simplices: bool,
    pub edge_types: Vec<EdgeTypeRule>,
    pub simplex_types: Vec<SimplexType>,
    pub common_dual_rule: CommonDualRule,
    pub triple_rule: TripleRule,
    pub summary: String,
}

/// The classification fields, without `params`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeKey {
    case: StructureCase,
    rules: (Vec<EdgeTypeRule>, Vec<SimplexType>, CommonDualRule, TripleRule),
}

impl StructureReport {
    pub fn new(params: LensParams) -> StructureReport {
        use EdgeType::*;
        use SimplexIncidence as I;
        let case = StructureCase::of(params);
        let edge = |edge_type, simplices, inf| EdgeTypeRule {
            edge_type,
            simplices,
            infinitely_many_at_each_vertex: inf,
        };
        let (edge_types, simplex_types, summary) = match case {
            StructureCase::TreeAllType2 => (
                vec![edge(T2, I::None, Some(true))],
                vec![],
                "tree, every vertex of infinite valency; every edge is of type 2",
            ),
            StructureCase::TreeAllType1 => (
                vec![edge(T1, I::None, Some(true))],
                vec![],
                "tree, every vertex of infinite valency; every edge is of type 1",
            ),
            StructureCase::TreeType0Type1 => (
                vec![edge(T0, I::None, Some(true)), edge(T1, I::None, Some(true))],
                vec![],
                "tree, every vertex of infinite valency; edges of type 0 or 1, infinitely many of each at every vertex",
            ),
            StructureCase::PlanarP3 => (
                vec![edge(T1, I::ExactlyOne, Some(true))],
                vec![SimplexType::S3],
                "2-dimensional; every edge of type 1 in a unique 2-simplex; every 2-simplex of type 3",
            ),
            StructureCase::PlanarP5 => (
                vec![edge(T0, I::ExactlyTwo, None), edge(T1, I::ExactlyOne, None)],
                vec![SimplexType::S1],
                "2-dimensional; type-0 edges in exactly two 2-simplices, type-1 edges in a unique 2-simplex; every 2-simplex of type 1",
            ),
            StructureCase::PlanarP7Plus => (
                vec![edge(T0, I::ExactlyOne, None), edge(T1, I::OneOrNone, None)],
                vec![SimplexType::S1],
                "2-dimensional; type-0 edges in a unique 2-simplex, type-1 edges in a unique 2-simplex or none; every 2-simplex of type 1",
            ),
            StructureCase::DisconnectedTrees => (
                vec![edge(T0, I::None, Some(true)), edge(T1, I::None, Some(true))],
                vec![],
                "infinitely many connected components, all trees isomorphic to each other; infinitely many edges of type 0 and of type 1 at every vertex",
            ),
        };
        let contractible = case != StructureCase::DisconnectedTrees;
        let two_dim = matches!(
            case,
            StructureCase::PlanarP3 | StructureCase::PlanarP5 | StructureCase::PlanarP7Plus
        );
        let common_dual_rule = match (params.q_norm, params.p) {
            (1, 2) => CommonDualRule::EveryPairTwoDisjoint,
            (1, _) => CommonDualRule::EveryPairUnique,
            _ => CommonDualRule::NotEveryPair,
        };
        let triple_rule = match case {
            StructureCase::PlanarP3 => TripleRule::P3UniqueDualTriple,
            StructureCase::PlanarP5 => TripleRule::P5OneOrTwo,
            StructureCase::PlanarP7Plus => TripleRule::P7UniqueOrNone,
            _ => TripleRule::NoTriples,
        };
        StructureReport {
            params,
            case_id: case,
            contractible,
            dimension: if two_dim { 2 } else { 1 },
            connectivity: if contractible {
                Connectivity::Connected
            } else {
                Connectivity::InfinitelyManyTreeComponents
            },
            component_shape: if two_dim {
                ComponentShape::TwoDimensional
            } else {
                ComponentShape::Tree
            },
            components_isomorphic: !contractible,
            vertex_valency_infinite: true,
            vertex_meets_infinitely_many_simplices: two_dim,
            edge_types,
            simplex_types,
            common_dual_rule,
            triple_rule,
            summary: summary.to_string(),
        }
    }

    /// Everything that must agree between homeomorphic lens spaces.
    pub fn shape_key(&self) -> ShapeKey {
        ShapeKey {
            case: self.case_id,
            rules: (
                self.edge_types.clone(),
                self.simplex_types.clone(),
                self.common_dual_rule,
                self.triple_rule,
            ),
        }
    }

    pub fn to_record(&self) -> String {
        to_record(REPORT_SCHEMA, self)
    }

    pub fn from_record(text: &str) -> Result<StructureReport, RecordError> {
        from_record(REPORT_SCHEMA, text)
    }

    pub fn to_text(&self) -> String {
        let LensParams { p, q, q_norm, q_prime } = self.params;
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(out, "L({p}, {q})  q_norm = {q_norm}  q' = {q_prime}");
        let _ = writeln!(out, "case: {}", self.case_id.id());
        let _ = writeln!(out, "contractible: {}", yn(self.contractible));
        let _ = writeln!(out, "dimension: {}", self.dimension);
        let conn = match self.connectivity {
            Connectivity::Connected => "connected",
            Connectivity::InfinitelyManyTreeComponents => "infinitely many tree components, pairwise isomorphic",
        };
        let _ = writeln!(out, "connectivity: {conn}");
        let shape = match self.component_shape {
            ComponentShape::Tree => "tree",
            ComponentShape::TwoDimensional => "2-dimensional",
        };
        let _ = writeln!(out, "component shape: {shape}");
        let _ = writeln!(out, "vertex valency: infinite");
        let _ = writeln!(
            out,
            "every vertex meets infinitely many 2-simplices: {}",
            yn(self.vertex_meets_infinitely_many_simplices)
        );
        for e in &self.edge_types {
            let inc = match e.simplices {
                SimplexIncidence::None => "in no 2-simplex",
                SimplexIncidence::ExactlyOne => "in a unique 2-simplex",
                SimplexIncidence::ExactlyTwo => "in exactly two 2-simplices",
                SimplexIncidence::OneOrNone => "in a unique 2-simplex or in none",
            };
            let at_vertex = match e.infinitely_many_at_each_vertex {
                Some(true) => ", infinitely many at each vertex",
                _ => "",
            };
            let _ = writeln!(out, "edge type {:?}: {inc}{at_vertex}", e.edge_type);
        }
        let simplices: Vec<String> = self.simplex_types.iter().map(|s| format!("{s:?}")).collect();
        let simplices = if simplices.is_empty() {
            "none".to_string()
        } else {
            simplices.join(", ")
        };
        let _ = writeln!(out, "2-simplex types: {simplices}");
        let dual = match self.common_dual_rule {
            CommonDualRule::EveryPairTwoDisjoint => "every primitive pair has exactly two disjoint common dual disks",
            CommonDualRule::EveryPairUnique => "every primitive pair has a unique common dual disk",
            CommonDualRule::NotEveryPair => "not every primitive pair has a common dual disk",
        };
        let _ = writeln!(out, "common duals: {dual}");
        let triples = match self.triple_rule {
            TripleRule::NoTriples => "no primitive triples",
            TripleRule::P3UniqueDualTriple => {
                "each primitive pair lies in a unique primitive triple; its common duals form a primitive triple in W"
            }
            TripleRule::P5OneOrTwo => {
                "pairs with a common dual lie in a unique triple, pairs without lie in exactly two; one pair per triple has a common dual"
            }
            TripleRule::P7UniqueOrNone => {
                "pairs with a common dual lie in a unique triple or none, pairs without lie in a unique triple; one pair per triple has a common dual"
            }
        };
        let _ = writeln!(out, "primitive triples: {triples}");
        let _ = writeln!(out, "summary: {}", self.summary);
        out
    }
}

pub fn report(params: LensParams) -> StructureReport {
    StructureReport::new(params)
}

/// The sequence of disks `E_0, …, E_p` modeled by boundary words.
///
/// Intersection counts are formula-backed (`|E_i ∩ E_j| = j − i − 1`), not
/// computed from curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSequenceModel {
    pub params: LensParams,
    pub boundary_words: Vec<Word>,
    pub primitive: Vec<bool>,
    pub semiprimitive: Vec<bool>,
}

impl DiskSequenceModel {
    pub fn new(params: LensParams) -> DiskSequenceModel {
        let p = params.p;
        let prim = params.four_primitives();
        let boundary_words = (0..=p)
            .map(|j| params.word(j).expect("j <= p").substitute_z_to_xy())
            .collect();
        DiskSequenceModel {
            params,
            boundary_words,
            primitive: (0..=p).map(|j| prim.contains(&j)).collect(),
            semiprimitive: (0..=p).map(|j| j == 0 || j == p).collect(),
        }
    }

    /// `|E_i ∩ E_j|` for distinct indices in `0..=p`.
    pub fn intersections(&self, i: u64, j: u64) -> Result<u64, ParamsError> {
        let p = self.params.p;
        for k in [i, j] {
            if k > p {
                return Err(ParamsError::IndexOutOfRange { p, j: k });
            }
        }
        if i == j {
            return Err(ParamsError::IndexOutOfRange { p, j });
        }
        Ok(i.abs_diff(j) - 1)
    }

    pub fn primitive_indices(&self) -> Vec<u64> {
        (0..=self.params.p).filter(|&j| self.primitive[j as usize]).collect()
    }
}

pub fn disk_sequence_model(params: LensParams) -> DiskSequenceModel {
    DiskSequenceModel::new(params)
}

/// `q`, `p − q`, `q'` and `p − q'` with `q'` the inverse of `q` mod `p`.
pub fn homeomorphism_orbit(p: u64, q: u64) -> Vec<u64> {
    let inv = crate::pqseq::mod_inverse(q, p);
    let mut v = vec![q, p - q, inv, p - inv];
    v.sort_unstable();
    v.dedup();
    v
}

/// For every `q` coprime to `p`, classification and report agree across the
/// homeomorphism orbit of `q`.
pub fn homeomorphism_invariance_check(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (1..p).filter_map(|q| LensParams::new(p, q).ok()).all(|params| {
        let c = classify(params);
        let key = report(params).shape_key();
        homeomorphism_orbit(p, params.q).into_iter().all(|q2| {
            let other = LensParams::new(p, q2).expect("orbit stays coprime");
            classify(other) == c && report(other).shape_key() == key
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(p: u64, q: u64) -> LensParams {
        LensParams::new(p, q).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert!(classify(lp(7, 2)));
        assert!(!classify(lp(12, 5)));
        assert!(!classify(lp(12, 7)));
        for p in 2..30 {
            assert!(classify(lp(p, 1)));
        }
        assert!(classify(lp(9, 4)));
        assert!(!classify(lp(17, 7)));
        assert!(!classify(lp(17, 5)));
    }

    #[test]
    fn report_cases() {
        assert_eq!(report(lp(2, 1)).case_id, StructureCase::TreeAllType2);
        assert_eq!(report(lp(4, 1)).case_id, StructureCase::TreeAllType1);
        assert_eq!(report(lp(3, 1)).case_id, StructureCase::PlanarP3);
        assert_eq!(report(lp(5, 2)).case_id, StructureCase::PlanarP5);
        assert_eq!(report(lp(7, 2)).case_id, StructureCase::PlanarP7Plus);
        assert_eq!(report(lp(7, 3)).case_id, StructureCase::PlanarP7Plus);
        assert_eq!(report(lp(9, 4)).case_id, StructureCase::PlanarP7Plus);
        assert_eq!(report(lp(11, 3)).case_id, StructureCase::TreeType0Type1);
        assert_eq!(report(lp(12, 5)).case_id, StructureCase::DisconnectedTrees);
    }

    #[test]
    fn report_fields() {
        let r = report(lp(3, 1));
        assert_eq!(r.edge_types.len(), 1);
        assert_eq!(r.edge_types[0].edge_type, EdgeType::T1);
        assert_eq!(r.edge_types[0].simplices, SimplexIncidence::ExactlyOne);
        assert_eq!(r.simplex_types, vec![SimplexType::S3]);
        assert_eq!(r.common_dual_rule, CommonDualRule::EveryPairUnique);

        let r = report(lp(5, 2));
        assert_eq!(r.simplex_types, vec![SimplexType::S1]);
        assert_eq!(r.edge_types[0].simplices, SimplexIncidence::ExactlyTwo);
        assert_eq!(r.edge_types[1].simplices, SimplexIncidence::ExactlyOne);

        let r = report(lp(12, 5));
        assert_eq!(r.connectivity, Connectivity::InfinitelyManyTreeComponents);
        assert!(r
            .edge_types
            .iter()
            .all(|e| e.infinitely_many_at_each_vertex == Some(true)));
        assert_eq!(r.dimension, 1);
        assert!(r.components_isomorphic);

        assert_eq!(report(lp(2, 1)).common_dual_rule, CommonDualRule::EveryPairTwoDisjoint);
    }

    #[test]
    fn report_round_trip() {
        let r = report(lp(5, 2));
        assert_eq!(StructureReport::from_record(&r.to_record()).unwrap(), r);
    }

    #[test]
    fn disk_model_examples() {
        let m = disk_sequence_model(lp(5, 3));
        assert_eq!(m.boundary_words[5].to_string(), "xyxyxyxyxy");
        assert_eq!(m.intersections(0, 2).unwrap(), 1);
        assert_eq!(m.intersections(1, 2).unwrap(), 0);
        assert!(m.intersections(2, 2).is_err());
        assert!(m.intersections(0, 6).is_err());
        // E_1 = x y^p, E_2 = x y^q x y^{p−q}
        assert_eq!(m.boundary_words[1].to_string(), "xyyyyy");
        assert_eq!(m.boundary_words[2].to_string(), "xyyyxyy");
        assert_eq!(m.semiprimitive, vec![true, false, false, false, false, true]);

        let m = disk_sequence_model(lp(8, 3));
        assert_eq!(m.primitive_indices(), vec![1, 3, 5, 7]);
    }

    #[test]
    fn invariance_examples() {
        assert!(homeomorphism_invariance_check(17));
        assert!(homeomorphism_invariance_check(7));
        assert!((1..7).all(|q| classify(lp(7, q))));
        assert_eq!(homeomorphism_orbit(17, 7), vec![5, 7, 10, 12]);
    }
}
