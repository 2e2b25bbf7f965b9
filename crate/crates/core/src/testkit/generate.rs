//! Random topology and document generation, seed-deterministic.

use rand::prelude::*;

/// Element of a generated topology.
#[derive(Debug, Clone)]
pub struct ElementSpec {
    pub linear: bool,
    /// Ends that actually carry a coordinate.
    pub has_end0: bool,
    pub has_end1: bool,
    /// Extra coordinates strictly between the ends.
    pub intermediates: Vec<f64>,
}

/// Relation between elements `a` and `b` (indices), with end positions
/// and a navigability lexical.
#[derive(Debug, Clone)]
pub struct RelationSpec {
    pub a: usize,
    pub b: usize,
    pub pos_a: u8,
    pub pos_b: u8,
    pub navigability: &'static str,
}

#[derive(Debug, Clone)]
pub struct TopologySpec {
    pub elements: Vec<ElementSpec>,
    pub relations: Vec<RelationSpec>,
}

pub const GEN_NS: &str = "https://example.org/gen#";

const NAVIGABILITIES: [&str; 4] = ["Both", "AB", "BA", "None"];

/// A random topology: mostly linear elements, with occasional non-linear
/// elements, missing end coordinates and self-relations so the skip
/// paths stay honest.
pub fn random_topology(rng: &mut StdRng, max_elements: usize) -> TopologySpec {
    let n = rng.gen_range(2..=max_elements.max(2));
    let elements = (0..n)
        .map(|_| {
            let linear = rng.gen_bool(0.9);
            let intermediates = if rng.gen_bool(0.2) {
                vec![rng.gen_range(1..=9) as f64 / 10.0]
            } else {
                Vec::new()
            };
            ElementSpec {
                linear,
                has_end0: rng.gen_bool(0.97),
                has_end1: rng.gen_bool(0.97),
                intermediates,
            }
        })
        .collect::<Vec<_>>();
    let relation_count = rng.gen_range(1..=2 * n);
    let relations = (0..relation_count)
        .map(|_| {
            let a = rng.gen_range(0..n);
            let b = if rng.gen_bool(0.05) {
                a // invalid on purpose; both routes must skip it
            } else {
                rng.gen_range(0..n)
            };
            RelationSpec {
                a,
                b,
                pos_a: rng.gen_range(0..=1),
                pos_b: rng.gen_range(0..=1),
                navigability: NAVIGABILITIES[rng.gen_range(0..NAVIGABILITIES.len())],
            }
        })
        .collect();
    TopologySpec {
        elements,
        relations,
    }
}

/// A random connected tree over all-linear, fully-coordinated elements
/// with bidirectional navigability everywhere.
pub fn random_tree(rng: &mut StdRng, max_elements: usize) -> TopologySpec {
    let n = rng.gen_range(2..=max_elements.max(2));
    let elements = (0..n)
        .map(|_| ElementSpec {
            linear: true,
            has_end0: true,
            has_end1: true,
            intermediates: Vec::new(),
        })
        .collect();
    let relations = (1..n)
        .map(|i| RelationSpec {
            a: rng.gen_range(0..i),
            b: i,
            pos_a: rng.gen_range(0..=1),
            pos_b: rng.gen_range(0..=1),
            navigability: "Both",
        })
        .collect();
    TopologySpec {
        elements,
        relations,
    }
}

impl TopologySpec {
    pub fn element_iri(&self, index: usize) -> String {
        format!("{GEN_NS}e{index}")
    }

    /// Coordinate IRI for an element end (0 or 1).
    pub fn end_iri(&self, index: usize, end: u8) -> String {
        format!("{GEN_NS}e{index}_c{end}")
    }

    /// Render as Turtle instance data.
    pub fn to_turtle(&self) -> String {
        let mut out = String::new();
        out.push_str("@prefix topo: <https://w3id.org/rail/topo#> .\n");
        out.push_str(&format!("@prefix g: <{GEN_NS}> .\n\n"));
        for (i, element) in self.elements.iter().enumerate() {
            let class = if element.linear {
                "topo:LinearElement"
            } else {
                "topo:NonLinearElement"
            };
            out.push_str(&format!(
                "g:e{i} a {class} ;\n    topo:name \"e{i}\" ;\n    topo:associatedPositioningSystem g:e{i}_aps .\n"
            ));
            let mut coords: Vec<(String, f64)> = Vec::new();
            if element.has_end0 {
                coords.push((format!("e{i}_c0"), 0.0));
            }
            if element.has_end1 {
                coords.push((format!("e{i}_c1"), 1.0));
            }
            for (k, v) in element.intermediates.iter().enumerate() {
                coords.push((format!("e{i}_m{k}"), *v));
            }
            out.push_str(&format!("g:e{i}_aps a topo:AssociatedPositioningSystem"));
            if coords.is_empty() {
                out.push_str(" .\n");
            } else {
                let refs: Vec<String> = coords.iter().map(|(l, _)| format!("g:{l}")).collect();
                out.push_str(&format!(
                    " ;\n    topo:intrinsicCoordinate {} .\n",
                    refs.join(" , ")
                ));
            }
            for (label, value) in &coords {
                let lexical = if *value == value.trunc() {
                    format!("{value:.1}")
                } else {
                    format!("{value}")
                };
                out.push_str(&format!(
                    "g:{label} a topo:IntrinsicCoordinate ; topo:intrinsicCoord {lexical} .\n"
                ));
            }
        }
        out.push('\n');
        for (j, relation) in self.relations.iter().enumerate() {
            out.push_str(&format!(
                "g:r{j} a topo:PositionedRelation ;\n    topo:elementA g:e{} ;\n    topo:elementB g:e{} ;\n    topo:positionOnA {} ;\n    topo:positionOnB {} ;\n    topo:navigability \"{}\" .\n",
                relation.a, relation.b, relation.pos_a, relation.pos_b, relation.navigability
            ));
        }
        out
    }

    /// Flip every relation (swap A and B ends, mirror directional
    /// navigability). The reaches relation must be unchanged.
    pub fn flipped(&self) -> TopologySpec {
        TopologySpec {
            elements: self.elements.clone(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationSpec {
                    a: r.b,
                    b: r.a,
                    pos_a: r.pos_b,
                    pos_b: r.pos_a,
                    navigability: match r.navigability {
                        "AB" => "BA",
                        "BA" => "AB",
                        other => other,
                    },
                })
                .collect(),
        }
    }

    /// Same topology with one relation's navigability replaced.
    pub fn with_navigability(&self, relation: usize, navigability: &'static str) -> TopologySpec {
        let mut spec = self.clone();
        spec.relations[relation].navigability = navigability;
        spec
    }
}

/// A random document mixing topology with network structure, an ordered
/// composition, entities and assorted literal shapes; exercises the full
/// parser surface for round-trip checks.
pub fn random_document(rng: &mut StdRng) -> String {
    let topology = random_topology(rng, 8);
    let mut out = topology.to_turtle();
    let n = topology.elements.len();

    if rng.gen_bool(0.8) {
        out.push_str("\ng:net a topo:Network ; topo:id \"net\" ; topo:level g:lv .\n");
        let level = ["micro", "meso", "macro"][rng.gen_range(0..3)];
        let members: Vec<String> = (0..n).map(|i| format!("g:e{i}")).collect();
        out.push_str(&format!(
            "g:lv a topo:LevelNetwork ; topo:descriptionLevel \"{level}\" ; topo:networkResource {} .\n",
            members.join(" , ")
        ));
    }
    if n >= 3 && rng.gen_bool(0.7) {
        let mut order: Vec<usize> = (0..3).collect();
        // cheap shuffle
        if rng.gen_bool(0.5) {
            order.swap(0, 1);
        }
        if rng.gen_bool(0.5) {
            order.swap(1, 2);
        }
        let list: Vec<String> = order.iter().map(|i| format!("g:e{i}")).collect();
        let parts: Vec<String> = (0..3).map(|i| format!("g:e{i}")).collect();
        out.push_str(&format!(
            "g:comp a topo:CompositionNetElement ; topo:elementCollection g:coll .\n\
             g:coll a topo:OrderedCollection ;\n    topo:sequence {} ;\n    topo:elementPartList ( {} ) ;\n    topo:elementPart {} .\n",
            rng.gen_range(1..10),
            list.join(" "),
            parts.join(" , ")
        ));
    }
    if rng.gen_bool(0.6) {
        let element = rng.gen_range(0..n);
        let coordinate = rng.gen_range(1..=9) as f64 / 10.0;
        let direction = ["normal", "reverse", "both"][rng.gen_range(0..3)];
        out.push_str(&format!(
            "g:sig a topo:LocatedNetEntity ; topo:name \"signal one\" ; topo:location g:sig_loc .\n\
             g:sig_loc a topo:SpotLocation ;\n    topo:netElement g:e{element} ;\n    topo:coordinate {coordinate} ;\n    topo:applicationDirection \"{direction}\" .\n"
        ));
    }
    if rng.gen_bool(0.4) {
        out.push_str("g:note a topo:LocatedNetEntity ; topo:longname \"line \\\"7\\\"\" .\n");
    }
    if rng.gen_bool(0.4) {
        out.push_str("# trailing comment\n[] topo:name \"anonymous entity\" .\n");
    }
    out
}
