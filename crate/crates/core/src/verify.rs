//! Per-graph checks of the energy inequalities, energy-regime
//! classification, and the numeric vs. structural equality decision for
//! `E(G) = 2R(G)`.

use std::fmt;

use serde::Serialize;

use crate::descriptors::{
    decompose, energy_from, randic_index, vertex_energies_from, DescriptorError,
    VertexEnergyProfile,
};
use crate::graph::{
    classify_structure, is_union_complete_bipartite, maximum_matching, Graph, StructureKind,
    StructuralClass,
};
use crate::json;

/// Slack for inequality checks and band for equality detection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub slack: f64,
    pub equality: f64,
}

impl Tolerances {
    pub const DEFAULT_SLACK: f64 = 1e-8;
    pub const DEFAULT_EQUALITY: f64 = 1e-7;

    /// Same value for both tolerances.
    pub fn uniform(tol: f64) -> Self {
        Tolerances {
            slack: tol,
            equality: tol,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            slack: Self::DEFAULT_SLACK,
            equality: Self::DEFAULT_EQUALITY,
        }
    }
}

/// Tolerance for the algebraic identity `n1√(d1/d2) + n2√(d2/d1) = 2R`.
pub const SEMIREGULAR_IDENTITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnergyClass {
    Hypoenergetic,
    Orderenergetic,
    Neither,
}

impl fmt::Display for EnergyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyClass::Hypoenergetic => "hypoenergetic",
            EnergyClass::Orderenergetic => "orderenergetic",
            EnergyClass::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MainInequality {
    pub energy: f64,
    pub twice_randic: f64,
    pub gap: f64,
    pub holds: bool,
}

/// An edge whose endpoint energies break the product or sum bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VertexViolation {
    pub edge: (usize, usize),
    pub product: f64,
    pub sum: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MatchingBound {
    pub nu: usize,
    pub energy: f64,
    pub bound_ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityCase {
    pub numeric_equality: bool,
    pub structural_equality: bool,
    pub agree: bool,
}

/// `E ≥ n` for `d`-regular graphs, `d > 0`, with equality exactly on
/// unions of `K_{d,d}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegularBound {
    pub degree: usize,
    pub energy: f64,
    pub order: usize,
    pub holds: bool,
    pub numeric_equality: bool,
    pub all_components_krr: bool,
}

impl RegularBound {
    pub fn consistent(&self) -> bool {
        self.holds && self.numeric_equality == self.all_components_krr
    }
}

/// `E ≥ n1√(d1/d2) + n2√(d2/d1)` for bipartite semi-regular graphs, with
/// equality exactly on unions of `K_{d1,d2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SemiRegularBound {
    pub n1: usize,
    pub n2: usize,
    pub d1: usize,
    pub d2: usize,
    pub energy: f64,
    pub rhs: f64,
    pub twice_randic: f64,
    pub holds: bool,
    pub numeric_equality: bool,
    pub all_components_complete: bool,
}

impl SemiRegularBound {
    pub fn rhs_matches_randic(&self) -> bool {
        (self.rhs - self.twice_randic).abs() <= SEMIREGULAR_IDENTITY_TOL
    }

    pub fn consistent(&self) -> bool {
        self.holds
            && self.rhs_matches_randic()
            && self.numeric_equality == self.all_components_complete
    }
}

/// All descriptors and check outcomes for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct DescriptorReport {
    pub energy: f64,
    pub randic: f64,
    pub twice_randic: f64,
    pub gap: f64,
    pub matching_size: usize,
    pub matching_bound_ok: bool,
    /// `None` for edgeless graphs.
    pub vertex_product_min: Option<f64>,
    pub vertex_sum_min: Option<f64>,
    pub numeric_equality: bool,
    pub structural_equality: bool,
    pub energy_class: EnergyClass,
    pub structure: StructuralClass,
}

#[derive(Serialize)]
struct FlatReport<'a> {
    energy: f64,
    randic: f64,
    twice_randic: f64,
    gap: f64,
    matching_size: usize,
    matching_bound_ok: bool,
    vertex_product_min: Option<f64>,
    vertex_sum_min: Option<f64>,
    numeric_equality: bool,
    structural_equality: bool,
    energy_class: EnergyClass,
    structure: &'a str,
}

impl DescriptorReport {
    /// Flat JSON object, keys in field order, floats at 17 significant
    /// digits, `structure` rendered as its label.
    pub fn to_json(&self) -> String {
        let label = self.structure.label();
        json::to_string(&FlatReport {
            energy: self.energy,
            randic: self.randic,
            twice_randic: self.twice_randic,
            gap: self.gap,
            matching_size: self.matching_size,
            matching_bound_ok: self.matching_bound_ok,
            vertex_product_min: self.vertex_product_min,
            vertex_sum_min: self.vertex_sum_min,
            numeric_equality: self.numeric_equality,
            structural_equality: self.structural_equality,
            energy_class: self.energy_class,
            structure: &label,
        })
    }
}

/// One failed check.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    MainInequality(MainInequality),
    Vertex(VertexViolation),
    MatchingBound(MatchingBound),
    EqualityDisagreement { gap: f64, case: EqualityCase },
    RegularBound(RegularBound),
    SemiRegularBound(SemiRegularBound),
}

/// Check families, used for per-check tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    MainInequality,
    Vertex,
    MatchingBound,
    Equality,
    RegularBound,
    SemiRegularBound,
}

impl Violation {
    pub fn kind(&self) -> CheckKind {
        match self {
            Violation::MainInequality(_) => CheckKind::MainInequality,
            Violation::Vertex(_) => CheckKind::Vertex,
            Violation::MatchingBound(_) => CheckKind::MatchingBound,
            Violation::EqualityDisagreement { .. } => CheckKind::Equality,
            Violation::RegularBound(_) => CheckKind::RegularBound,
            Violation::SemiRegularBound(_) => CheckKind::SemiRegularBound,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MainInequality(m) => write!(
                f,
                "E - 2R = {:e} (E = {}, 2R = {})",
                m.gap, m.energy, m.twice_randic
            ),
            Violation::Vertex(v) => write!(
                f,
                "edge {:?}: E(u)E(v) = {}, E(u)+E(v) = {}",
                v.edge, v.product, v.sum
            ),
            Violation::MatchingBound(m) => {
                write!(f, "E = {} < 2 * matching size {}", m.energy, m.nu)
            }
            Violation::EqualityDisagreement { gap, case } => write!(
                f,
                "equality mismatch: numeric {} (gap {:e}), structural {}",
                case.numeric_equality, gap, case.structural_equality
            ),
            Violation::RegularBound(r) => write!(
                f,
                "regular bound: E = {}, n = {}, equality {}, K_(r,r) components {}",
                r.energy, r.order, r.numeric_equality, r.all_components_krr
            ),
            Violation::SemiRegularBound(s) => write!(
                f,
                "semi-regular bound: E = {}, rhs = {}, 2R = {}, equality {}, complete components {}",
                s.energy, s.rhs, s.twice_randic, s.numeric_equality, s.all_components_complete
            ),
        }
    }
}

/// Everything about one graph needed by the checks, computed once.
#[derive(Debug, Clone)]
pub struct Analysis<'g> {
    graph: &'g Graph,
    vertex: VertexEnergyProfile,
    energy: f64,
    randic: f64,
    matching_size: usize,
    structure: StructuralClass,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self, DescriptorError> {
        let d = decompose(graph)?;
        Ok(Analysis {
            graph,
            vertex: vertex_energies_from(&d),
            energy: energy_from(&d),
            randic: randic_index(graph),
            matching_size: maximum_matching(graph).len(),
            structure: classify_structure(graph),
        })
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn randic(&self) -> f64 {
        self.randic
    }

    pub fn vertex_energies(&self) -> &VertexEnergyProfile {
        &self.vertex
    }

    pub fn structure(&self) -> &StructuralClass {
        &self.structure
    }

    pub fn main_inequality(&self, slack: f64) -> MainInequality {
        let twice_randic = 2.0 * self.randic;
        let gap = self.energy - twice_randic;
        MainInequality {
            energy: self.energy,
            twice_randic,
            gap,
            holds: gap >= -slack,
        }
    }

    /// Minimum product and sum of endpoint energies over all edges.
    pub fn vertex_extremes(&self) -> (Option<f64>, Option<f64>) {
        let e = &self.vertex.per_vertex;
        let fold = |f: fn(f64, f64) -> f64| {
            self.graph
                .edges()
                .iter()
                .map(|&(u, v)| f(e[u], e[v]))
                .reduce(f64::min)
        };
        (fold(|a, b| a * b), fold(|a, b| a + b))
    }

    pub fn vertex_violations(&self, slack: f64) -> Vec<VertexViolation> {
        let e = &self.vertex.per_vertex;
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| VertexViolation {
                edge: (u, v),
                product: e[u] * e[v],
                sum: e[u] + e[v],
            })
            .filter(|x| x.product < 1.0 - slack || x.sum < 2.0 - slack)
            .collect()
    }

    pub fn matching_bound(&self, slack: f64) -> MatchingBound {
        MatchingBound {
            nu: self.matching_size,
            energy: self.energy,
            bound_ok: self.energy >= 2.0 * self.matching_size as f64 - slack,
        }
    }

    pub fn energy_class(&self, tol: f64) -> EnergyClass {
        let n = self.graph.order() as f64;
        if (self.energy - n).abs() <= tol {
            EnergyClass::Orderenergetic
        } else if self.energy < n - tol {
            EnergyClass::Hypoenergetic
        } else {
            EnergyClass::Neither
        }
    }

    pub fn equality_case(&self, tol: f64) -> EqualityCase {
        let numeric_equality = (self.energy - 2.0 * self.randic).abs() <= tol;
        let structural_equality = is_union_complete_bipartite(self.graph);
        EqualityCase {
            numeric_equality,
            structural_equality,
            agree: numeric_equality == structural_equality,
        }
    }

    pub fn regular_bound(&self, tol: Tolerances) -> Option<RegularBound> {
        let StructureKind::Regular(d) = self.structure.kind else {
            return None;
        };
        if d == 0 {
            return None;
        }
        let n = self.graph.order();
        Some(RegularBound {
            degree: d,
            energy: self.energy,
            order: n,
            holds: self.energy >= n as f64 - tol.slack,
            numeric_equality: (self.energy - n as f64).abs() <= tol.equality,
            all_components_krr: self
                .structure
                .certificates
                .iter()
                .all(|c| *c == Some((d, d))),
        })
    }

    pub fn semiregular_bound(&self, tol: Tolerances) -> Option<SemiRegularBound> {
        let StructureKind::BipartiteSemiRegular { n1, n2, d1, d2, .. } = self.structure.kind
        else {
            return None;
        };
        let ratio = (d1 as f64 / d2 as f64).sqrt();
        let rhs = n1 as f64 * ratio + n2 as f64 / ratio;
        let sides = (d1.min(d2), d1.max(d2));
        Some(SemiRegularBound {
            n1,
            n2,
            d1,
            d2,
            energy: self.energy,
            rhs,
            twice_randic: 2.0 * self.randic,
            holds: self.energy >= rhs - tol.slack,
            numeric_equality: (self.energy - rhs).abs() <= tol.equality,
            all_components_complete: self
                .structure
                .certificates
                .iter()
                .all(|c| *c == Some(sides)),
        })
    }

    pub fn report(&self, tol: Tolerances) -> DescriptorReport {
        let main = self.main_inequality(tol.slack);
        let equality = self.equality_case(tol.equality);
        let (vertex_product_min, vertex_sum_min) = self.vertex_extremes();
        DescriptorReport {
            energy: self.energy,
            randic: self.randic,
            twice_randic: main.twice_randic,
            gap: main.gap,
            matching_size: self.matching_size,
            matching_bound_ok: self.matching_bound(tol.slack).bound_ok,
            vertex_product_min,
            vertex_sum_min,
            numeric_equality: equality.numeric_equality,
            structural_equality: equality.structural_equality,
            energy_class: self.energy_class(tol.equality),
            structure: self.structure.clone(),
        }
    }

    /// Every failed check, in a fixed order.
    pub fn violations(&self, tol: Tolerances) -> Vec<Violation> {
        let mut out = Vec::new();
        let main = self.main_inequality(tol.slack);
        if !main.holds {
            out.push(Violation::MainInequality(main));
        }
        out.extend(self.vertex_violations(tol.slack).into_iter().map(Violation::Vertex));
        let matching = self.matching_bound(tol.slack);
        if !matching.bound_ok {
            out.push(Violation::MatchingBound(matching));
        }
        let case = self.equality_case(tol.equality);
        if !case.agree {
            out.push(Violation::EqualityDisagreement { gap: main.gap, case });
        }
        if let Some(r) = self.regular_bound(tol).filter(|r| !r.consistent()) {
            out.push(Violation::RegularBound(r));
        }
        if let Some(s) = self.semiregular_bound(tol).filter(|s| !s.consistent()) {
            out.push(Violation::SemiRegularBound(s));
        }
        out
    }
}

/// Report plus violations for one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub report: DescriptorReport,
    pub violations: Vec<Violation>,
}

pub fn verify_graph(g: &Graph, tol: Tolerances) -> Result<Verification, DescriptorError> {
    let analysis = Analysis::new(g)?;
    Ok(Verification {
        report: analysis.report(tol),
        violations: analysis.violations(tol),
    })
}

pub fn check_main_inequality(g: &Graph, tol: f64) -> Result<MainInequality, DescriptorError> {
    Ok(Analysis::new(g)?.main_inequality(tol))
}

pub fn check_vertex_inequalities(
    g: &Graph,
    tol: f64,
) -> Result<Vec<VertexViolation>, DescriptorError> {
    Ok(Analysis::new(g)?.vertex_violations(tol))
}

pub fn check_matching_bound(g: &Graph, tol: f64) -> Result<MatchingBound, DescriptorError> {
    Ok(Analysis::new(g)?.matching_bound(tol))
}

pub fn classify_energy(g: &Graph, tol: f64) -> Result<EnergyClass, DescriptorError> {
    Ok(Analysis::new(g)?.energy_class(tol))
}

pub fn check_equality_case(g: &Graph, tol: f64) -> Result<EqualityCase, DescriptorError> {
    Ok(Analysis::new(g)?.equality_case(tol))
}

pub fn check_regular_bound(g: &Graph, tol: f64) -> Result<Option<RegularBound>, DescriptorError> {
    Ok(Analysis::new(g)?.regular_bound(Tolerances::uniform(tol)))
}

pub fn check_semiregular_bound(
    g: &Graph,
    tol: f64,
) -> Result<Option<SemiRegularBound>, DescriptorError> {
    Ok(Analysis::new(g)?.semiregular_bound(Tolerances::uniform(tol)))
}

pub fn full_report(g: &Graph, tol: Tolerances) -> Result<DescriptorReport, DescriptorError> {
    Ok(Analysis::new(g)?.report(tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    #[test]
    fn main_inequality_examples() {
        let p4 = check_main_inequality(&Graph::path(4), TOL).unwrap();
        assert!(p4.holds);
        assert!((p4.gap - 0.643_708_83).abs() < 1e-8);

        let k23 = check_main_inequality(&Graph::complete_bipartite(2, 3), TOL).unwrap();
        assert!(k23.holds && k23.gap.abs() <= 1e-9);
        assert!((k23.energy - 2.0 * 6f64.sqrt()).abs() < 1e-12);

        let k1 = check_main_inequality(&Graph::empty(1), TOL).unwrap();
        assert!(k1.holds && k1.gap == 0.0);
    }

    #[test]
    fn vertex_inequality_examples() {
        assert!(check_vertex_inequalities(&Graph::star(4), TOL).unwrap().is_empty());
        let star = Graph::star(4);
        let a = Analysis::new(&star).unwrap();
        let (product, sum) = a.vertex_extremes();
        assert!((product.unwrap() - 1.0).abs() < 1e-9);
        assert!((sum.unwrap() - 2.5).abs() < 1e-9);

        assert!(check_vertex_inequalities(&Graph::complete(4), TOL).unwrap().is_empty());
        let (product, _) = Analysis::new(&Graph::complete(4)).unwrap().vertex_extremes();
        assert!((product.unwrap() - 2.25).abs() < 1e-9);

        assert!(check_vertex_inequalities(&Graph::empty(3), TOL).unwrap().is_empty());
        assert_eq!(
            Analysis::new(&Graph::empty(3)).unwrap().vertex_extremes(),
            (None, None)
        );
    }

    #[test]
    fn matching_bound_examples() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let m = check_matching_bound(&two_k2, TOL).unwrap();
        assert_eq!(m.nu, 2);
        assert!((m.energy - 4.0).abs() < 1e-12 && m.bound_ok);

        let m = check_matching_bound(&Graph::path(4), TOL).unwrap();
        assert_eq!(m.nu, 2);
        assert!(m.bound_ok);

        let m = check_matching_bound(&Graph::cycle(5), TOL).unwrap();
        assert_eq!(m.nu, 2);
        // Spectrum 2, 2cos(2π/5) twice, 2cos(4π/5) twice.
        let pi = std::f64::consts::PI;
        let expected = 2.0 + 4.0 * (2.0 * pi / 5.0).cos() - 4.0 * (4.0 * pi / 5.0).cos();
        assert!((m.energy - expected).abs() < 1e-12);
    }

    #[test]
    fn energy_class_examples() {
        assert_eq!(
            classify_energy(&Graph::star(4), TOL).unwrap(),
            EnergyClass::Hypoenergetic
        );
        assert_eq!(
            classify_energy(&Graph::cycle(4), TOL).unwrap(),
            EnergyClass::Orderenergetic
        );
        assert_eq!(
            classify_energy(&Graph::complete(4), TOL).unwrap(),
            EnergyClass::Neither
        );
        assert_eq!(
            classify_energy(&Graph::empty(0), TOL).unwrap(),
            EnergyClass::Orderenergetic
        );
    }

    #[test]
    fn equality_case_examples() {
        let g = Graph::complete_bipartite(3, 3).disjoint_union(&Graph::complete_bipartite(1, 2));
        let all = EqualityCase {
            numeric_equality: true,
            structural_equality: true,
            agree: true,
        };
        let none = EqualityCase {
            numeric_equality: false,
            structural_equality: false,
            agree: true,
        };
        assert_eq!(check_equality_case(&g, 1e-7).unwrap(), all);
        assert_eq!(check_equality_case(&Graph::path(4), 1e-7).unwrap(), none);
        assert_eq!(check_equality_case(&Graph::cycle(6), 1e-7).unwrap(), none);
        let cycle = Graph::cycle(6);
        let c6 = Analysis::new(&cycle).unwrap();
        assert!((c6.energy() - 8.0).abs() < 1e-12);
        assert!((2.0 * c6.randic() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn regular_bound_examples() {
        let c4 = check_regular_bound(&Graph::cycle(4), TOL).unwrap().unwrap();
        assert!(c4.holds && c4.numeric_equality && c4.all_components_krr && c4.consistent());

        let k4 = check_regular_bound(&Graph::complete(4), TOL).unwrap().unwrap();
        assert!(k4.holds && !k4.numeric_equality && !k4.all_components_krr);

        let p = check_regular_bound(&Graph::petersen(), TOL).unwrap().unwrap();
        assert!((p.energy - 16.0).abs() < 1e-10);
        assert!(p.consistent() && !p.numeric_equality);

        assert_eq!(check_regular_bound(&Graph::path(4), TOL).unwrap(), None);
        assert_eq!(check_regular_bound(&Graph::empty(3), TOL).unwrap(), None);
    }

    #[test]
    fn semiregular_bound_examples() {
        let s = check_semiregular_bound(&Graph::star(3), TOL).unwrap().unwrap();
        assert!((s.rhs - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!(s.numeric_equality && s.all_components_complete && s.consistent());

        let k23 = check_semiregular_bound(&Graph::complete_bipartite(2, 3), TOL)
            .unwrap()
            .unwrap();
        assert!((k23.rhs - 2.0 * 6f64.sqrt()).abs() < 1e-12);
        assert!(k23.consistent() && k23.numeric_equality);

        // Subdivided K_3 is C_6, which is regular: out of scope.
        assert_eq!(check_semiregular_bound(&Graph::cycle(6), TOL).unwrap(), None);
    }

    #[test]
    fn full_report_examples() {
        let tol = Tolerances::default();
        let c4 = full_report(&Graph::cycle(4), tol).unwrap();
        assert!((c4.energy - 4.0).abs() < 1e-12);
        assert!((c4.randic - 2.0).abs() < 1e-12);
        assert!(c4.gap.abs() < 1e-12);
        assert_eq!(c4.matching_size, 2);
        assert_eq!(c4.energy_class, EnergyClass::Orderenergetic);
        assert!(c4.numeric_equality && c4.structural_equality);

        let p4 = full_report(&Graph::path(4), tol).unwrap();
        assert!((p4.energy - 2.0 * 5f64.sqrt()).abs() < 1e-12);
        assert!((p4.randic - (2f64.sqrt() + 0.5)).abs() < 1e-12);
        assert_eq!(p4.matching_size, 2);
        assert_eq!(p4.energy_class, EnergyClass::Neither);
        assert!(!p4.numeric_equality && !p4.structural_equality);

        let e3 = full_report(&Graph::empty(3), tol).unwrap();
        assert_eq!((e3.energy, e3.randic, e3.gap), (0.0, 0.0, 0.0));
        assert_eq!(e3.energy_class, EnergyClass::Hypoenergetic);
        assert!(e3.numeric_equality && e3.structural_equality);

        let e0 = full_report(&Graph::empty(0), tol).unwrap();
        assert_eq!(e0.energy_class, EnergyClass::Orderenergetic);
        assert!(e0.numeric_equality && e0.structural_equality);
    }

    #[test]
    fn report_json_is_flat_and_ordered() {
        let r = full_report(&Graph::complete(2), Tolerances::default()).unwrap();
        let text = r.to_json();
        assert!(text.starts_with("{\"energy\":2.0,\"randic\":1.0,"), "{text}");
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 12);
        assert_eq!(value["structure"], "Regular(1)");
        assert_eq!(value["energy_class"], "orderenergetic");

        let empty = full_report(&Graph::empty(2), Tolerances::default()).unwrap();
        let value: serde_json::Value = serde_json::from_str(&empty.to_json()).unwrap();
        assert!(value["vertex_product_min"].is_null());
    }

    #[test]
    fn no_violations_on_named_graphs() {
        for g in [
            Graph::petersen(),
            Graph::path(7),
            Graph::cycle(9),
            Graph::complete(6),
            Graph::star(8),
            Graph::complete_bipartite(3, 5),
        ] {
            let v = verify_graph(&g, Tolerances::default()).unwrap();
            assert!(v.violations.is_empty(), "{g}: {:?}", v.violations);
        }
    }

    #[test]
    fn tighter_tolerance_is_monotone() {
        let g = Graph::complete_bipartite(2, 3);
        for t in [1e-12, 1e-10, 1e-8] {
            let m = check_main_inequality(&g, t).unwrap();
            if m.holds {
                assert!(check_main_inequality(&g, t * 10.0).unwrap().holds);
            }
        }
    }
}
