//! The classification atlas: every indecomposable pure-injective family at a
//! bounded set of parameters, placed in layers and blocks, with the direction
//! of maps between blocks probed on finite truncations.

use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactnum::{Polynomial, Rational};
use crate::tame::symbolic::is_lower_triangular;
use crate::tame::{probe_hom, CatalogLabel, Probe, TubePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasOptions {
    /// Largest degree of a tube point.
    pub max_degree: usize,
    /// Preprojectives and preinjectives `P(n)`, `I(n)` with `n ≤ max_index`.
    pub max_index: usize,
    /// Regular modules `R(p; r)` with `r ≤ max_length`.
    pub max_length: usize,
    /// Truncation depth for the Hom probes.
    pub depth: usize,
}

impl Default for AtlasOptions {
    fn default() -> Self {
        AtlasOptions {
            max_degree: 2,
            max_index: 2,
            max_length: 2,
            depth: 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Layer {
    #[serde(rename = "finite-length")]
    FiniteLength,
    #[serde(rename = "pruefer-adic")]
    PrueferAdic,
    #[serde(rename = "generic")]
    Generic,
}

impl Layer {
    pub const ALL: [Layer; 3] = [Layer::FiniteLength, Layer::PrueferAdic, Layer::Generic];

    pub fn name(self) -> &'static str {
        match self {
            Layer::FiniteLength => "finite-length",
            Layer::PrueferAdic => "pruefer-adic",
            Layer::Generic => "generic",
        }
    }

    pub fn of(label: &CatalogLabel) -> Layer {
        match label {
            CatalogLabel::Pruefer(_) | CatalogLabel::Adic(_) => Layer::PrueferAdic,
            CatalogLabel::Generic => Layer::Generic,
            _ => Layer::FiniteLength,
        }
    }
}

/// The six blocks of the classification figure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum AtlasBlock {
    #[serde(rename = "P-bar")]
    PBar,
    #[serde(rename = "R-bar")]
    RBar,
    #[serde(rename = "I-bar")]
    IBar,
    D,
    E,
    #[serde(rename = "omega")]
    Omega,
}

impl AtlasBlock {
    pub const ALL: [AtlasBlock; 6] = [
        AtlasBlock::PBar,
        AtlasBlock::RBar,
        AtlasBlock::IBar,
        AtlasBlock::D,
        AtlasBlock::E,
        AtlasBlock::Omega,
    ];
    /// Left to right in the trisection.
    pub const TRISECTION: [AtlasBlock; 3] = [AtlasBlock::E, AtlasBlock::Omega, AtlasBlock::IBar];
    /// Left to right along the torsion pairs.
    pub const COLUMNS: [AtlasBlock; 3] = [AtlasBlock::PBar, AtlasBlock::RBar, AtlasBlock::IBar];

    pub fn name(self) -> &'static str {
        match self {
            AtlasBlock::PBar => "P-bar",
            AtlasBlock::RBar => "R-bar",
            AtlasBlock::IBar => "I-bar",
            AtlasBlock::D => "D",
            AtlasBlock::E => "E",
            AtlasBlock::Omega => "omega",
        }
    }

    pub fn contains(self, label: &CatalogLabel) -> bool {
        use CatalogLabel::*;
        match self {
            AtlasBlock::PBar => matches!(label, Preprojective(_) | Adic(_) | Generic),
            AtlasBlock::RBar => matches!(label, Regular(..) | Pruefer(_)),
            AtlasBlock::IBar => matches!(label, Preinjective(_)),
            AtlasBlock::D => matches!(label, Pruefer(_) | Generic | Preinjective(_)),
            AtlasBlock::E => matches!(label, Preprojective(_) | Regular(..) | Adic(_)),
            AtlasBlock::Omega => matches!(label, Pruefer(_) | Generic),
        }
    }
}

pub fn family(label: &CatalogLabel) -> &'static str {
    match label {
        CatalogLabel::Preprojective(_) => "preprojective",
        CatalogLabel::Regular(..) => "regular",
        CatalogLabel::Preinjective(_) => "preinjective",
        CatalogLabel::Pruefer(_) => "pruefer",
        CatalogLabel::Adic(_) => "adic",
        CatalogLabel::Generic => "generic",
    }
}

pub const FAMILIES: [&str; 6] = ["preprojective", "regular", "preinjective", "pruefer", "adic", "generic"];

/// Monic irreducible polynomials of degree `1..=max_degree` with coefficients
/// in `{-1, 0, 1}`, then infinity.
pub fn tube_points(max_degree: usize) -> Vec<TubePoint> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let mut coeffs = vec![-1i64; d];
        loop {
            let mut c = coeffs.clone();
            c.push(1);
            let p = Polynomial::new(c.iter().map(|&x| Rational::from(x)).collect());
            if p.is_irreducible() {
                out.push(TubePoint::Finite(p));
            }
            let Some(i) = coeffs.iter().position(|&x| x < 1) else { break };
            coeffs[i] += 1;
            for x in &mut coeffs[..i] {
                *x = -1;
            }
        }
    }
    out.sort();
    out.push(TubePoint::Infinity);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct AtlasEntry {
    pub label: CatalogLabel,
    pub family: &'static str,
    pub layer: Layer,
    pub blocks: Vec<AtlasBlock>,
}

/// Block-level Hom directions: `matrix[i][j]` probes maps from block `j` into block `i`.
#[derive(Clone, Debug, Serialize)]
pub struct HomDirection {
    pub order: Vec<AtlasBlock>,
    pub matrix: Vec<Vec<Probe>>,
    pub lower_triangular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Atlas {
    pub options: AtlasOptions,
    pub entries: Vec<AtlasEntry>,
    pub trisection: HomDirection,
    pub columns: HomDirection,
}

pub fn atlas_labels(opts: &AtlasOptions) -> Vec<CatalogLabel> {
    let points = tube_points(opts.max_degree);
    let mut out: Vec<CatalogLabel> = (0..=opts.max_index).map(CatalogLabel::Preprojective).collect();
    for p in &points {
        for r in 1..=opts.max_length {
            out.push(CatalogLabel::Regular(p.clone(), r));
        }
    }
    out.extend((0..=opts.max_index).map(CatalogLabel::Preinjective));
    out.extend(points.iter().cloned().map(CatalogLabel::Pruefer));
    out.extend(points.iter().cloned().map(CatalogLabel::Adic));
    out.push(CatalogLabel::Generic);
    out
}

fn direction(order: [AtlasBlock; 3], labels: &[CatalogLabel], probes: &[Vec<Probe>]) -> HomDirection {
    let mut m = [[Probe::Zero; 3]; 3];
    for (s, source) in labels.iter().enumerate() {
        for (t, target) in labels.iter().enumerate() {
            let (Some(j), Some(i)) = (
                order.iter().position(|b| b.contains(source)),
                order.iter().position(|b| b.contains(target)),
            ) else {
                continue;
            };
            m[i][j] = m[i][j].join(probes[s][t]);
        }
    }
    HomDirection {
        order: order.to_vec(),
        matrix: m.iter().map(|r| r.to_vec()).collect(),
        lower_triangular: is_lower_triangular(&m),
    }
}

pub fn build_atlas(opts: &AtlasOptions) -> Result<Atlas> {
    let labels = atlas_labels(opts);
    let probes = labels
        .iter()
        .map(|s| labels.iter().map(|t| probe_hom(s, t, opts.depth)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let entries = labels
        .iter()
        .map(|l| AtlasEntry {
            label: l.clone(),
            family: family(l),
            layer: Layer::of(l),
            blocks: AtlasBlock::ALL.into_iter().filter(|b| b.contains(l)).collect(),
        })
        .collect();
    Ok(Atlas {
        options: *opts,
        entries,
        trisection: direction(AtlasBlock::TRISECTION, &labels, &probes),
        columns: direction(AtlasBlock::COLUMNS, &labels, &probes),
    })
}

impl Atlas {
    pub fn labels_in_layer(&self, layer: Layer) -> Vec<&CatalogLabel> {
        self.entries.iter().filter(|e| e.layer == layer).map(|e| &e.label).collect()
    }

    pub fn to_json(&self) -> Value {
        let layers: Vec<Value> = Layer::ALL
            .iter()
            .map(|&l| json!({"name": l.name(), "labels": self.labels_in_layer(l)}))
            .collect();
        let blocks: Vec<Value> = AtlasBlock::ALL
            .iter()
            .map(|&b| {
                let labels: Vec<&CatalogLabel> = self.entries.iter().filter(|e| b.contains(&e.label)).map(|e| &e.label).collect();
                json!({"name": b.name(), "labels": labels})
            })
            .collect();
        json!({
            "options": self.options,
            "layers": layers,
            "blocks": blocks,
            "entries": self.entries,
            "hom_direction": {"trisection": self.trisection, "columns": self.columns},
        })
    }

    /// Layers stacked bottom to top, the columns `P-bar`, `R-bar`, `I-bar`
    /// ordered left to right.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph atlas {\n  rankdir=BT;\n  newrank=true;\n  node [shape=box];\n");
        for layer in Layer::ALL {
            let _ = writeln!(out, "  subgraph cluster_{} {{", layer.name().replace('-', "_"));
            let _ = writeln!(out, "    label=\"{}\";", layer.name());
            for l in self.labels_in_layer(layer) {
                let _ = writeln!(out, "    \"{l}\";");
            }
            out.push_str("  }\n");
        }
        for (k, col) in AtlasBlock::COLUMNS.iter().enumerate() {
            let _ = writeln!(out, "  \"{}\" [shape=plaintext];", col.name());
            if k > 0 {
                let _ = writeln!(
                    out,
                    "  {{ rank=same; \"{}\" -> \"{}\" [style=invis]; }}",
                    AtlasBlock::COLUMNS[k - 1].name(),
                    col.name()
                );
            }
        }
        let d = &self.columns;
        for (i, target) in d.order.iter().enumerate() {
            for (j, source) in d.order.iter().enumerate() {
                if i != j && d.matrix[i][j] == Probe::Nonzero {
                    let _ = writeln!(out, "  \"{}\" -> \"{}\" [constraint=false, label=\"Hom\"];", source.name(), target.name());
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_up_to_degree_two() {
        let pts = tube_points(2);
        let names: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
        assert_eq!(pts.len(), 9, "{names:?}");
        assert!(names.contains(&"x^2+1".to_string()));
        assert_eq!(pts.last(), Some(&TubePoint::Infinity));
        assert_eq!(tube_points(1).len(), 4);
    }

    #[test]
    fn small_atlas() {
        let opts = AtlasOptions {
            max_degree: 1,
            max_index: 1,
            max_length: 1,
            depth: 2,
        };
        let a = build_atlas(&opts).unwrap();
        assert_eq!(a.labels_in_layer(Layer::Generic), vec![&CatalogLabel::Generic]);
        let fams: std::collections::BTreeSet<_> = a.entries.iter().map(|e| e.family).collect();
        assert_eq!(fams.len(), 6);
        assert!(a.trisection.lower_triangular, "{:?}", a.trisection.matrix);
        assert!(a.columns.lower_triangular, "{:?}", a.columns.matrix);
        for e in &a.entries {
            let tri = AtlasBlock::TRISECTION.iter().filter(|b| b.contains(&e.label)).count();
            let col = AtlasBlock::COLUMNS.iter().filter(|b| b.contains(&e.label)).count();
            assert_eq!((tri, col), (1, 1), "{}", e.label);
        }
        let json = a.to_json().to_string();
        assert_eq!(json, build_atlas(&opts).unwrap().to_json().to_string());
        assert!(a.to_dot().contains("cluster_generic"));
    }
}
