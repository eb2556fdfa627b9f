use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{girth, Girth, Graph};
use crate::error::{Error, Result};
use crate::expansion::{certify_epsilon, CertMethod, EpsilonCertificate};
use crate::rational::{self, Rational};

/// Which graph a [`SubgraphRef`] points into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HostRef {
    /// The single graph an operation was handed.
    Graph,
    /// A component of a family, by position.
    Component(usize),
}

/// A vertex subset of a host graph, standing for its induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubgraphRef {
    pub host: HostRef,
    pub vertices: Vec<usize>,
}

impl SubgraphRef {
    pub fn new(host: HostRef, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        SubgraphRef { host, vertices }
    }

    pub fn of_graph(vertices: Vec<usize>) -> Self {
        Self::new(HostRef::Graph, vertices)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Recomputes the induced subgraph from the host alone.
    pub fn induced(&self, host: &Graph) -> Result<Graph> {
        host.check_vertices(&self.vertices)?;
        Ok(host.induced(&self.vertices).0)
    }
}

/// One member of a family, with its per-component certificates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyComponent {
    /// 1-based index of this component in the sequence it was drawn from.
    pub index: usize,
    pub name: String,
    pub graph: Graph,
    pub girth: Girth,
    pub epsilon: Option<EpsilonCertificate>,
    pub max_degree: usize,
}

impl FamilyComponent {
    pub fn new(index: usize, name: impl Into<String>, graph: Graph) -> Self {
        FamilyComponent {
            index,
            name: name.into(),
            girth: girth(&graph),
            max_degree: graph.max_degree(),
            epsilon: None,
            graph,
        }
    }

    pub fn with_epsilon(mut self, eps: EpsilonCertificate) -> Self {
        self.epsilon = Some(eps);
        self
    }

    pub fn size(&self) -> usize {
        self.graph.vertex_count()
    }
}

/// An ordered disjoint union of finite graphs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFamily {
    components: Vec<FamilyComponent>,
}

impl GraphFamily {
    /// Validates that stored girths and degrees match the graphs.
    pub fn new(components: Vec<FamilyComponent>) -> Result<Self> {
        for c in &components {
            let g = girth(&c.graph);
            if g != c.girth {
                return Err(Error::precondition(format!(
                    "component {} declares girth {} but has girth {g}",
                    c.name, c.girth
                )));
            }
            if c.max_degree < c.graph.max_degree() {
                return Err(Error::precondition(format!(
                    "component {} declares degree bound {} below its maximum degree {}",
                    c.name,
                    c.max_degree,
                    c.graph.max_degree()
                )));
            }
        }
        Ok(GraphFamily { components })
    }

    pub fn from_graphs(graphs: Vec<Graph>) -> Self {
        let components = graphs
            .into_iter()
            .enumerate()
            .map(|(i, g)| FamilyComponent::new(i + 1, format!("component-{}", i + 1), g))
            .collect();
        GraphFamily { components }
    }

    pub fn components(&self) -> &[FamilyComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn host(&self, host: HostRef) -> Option<&Graph> {
        match host {
            HostRef::Component(i) => self.components.get(i).map(|c| &c.graph),
            HostRef::Graph => None,
        }
    }

    /// Family-level expansion constant: the minimum of the component
    /// certificates, if every component carries one.
    pub fn epsilon(&self) -> Option<Rational> {
        self.components
            .iter()
            .map(|c| c.epsilon.as_ref().map(|e| e.value))
            .collect::<Option<Vec<_>>>()?
            .into_iter()
            .min()
    }

    pub fn max_degree(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.max_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn total_vertices(&self) -> usize {
        self.components.iter().map(FamilyComponent::size).sum()
    }

    pub fn to_manifest(&self) -> Vec<ManifestEntry> {
        self.components
            .iter()
            .map(|c| ManifestEntry {
                source: c.name.clone(),
                index: Some(c.index),
                girth: Some(c.girth),
                epsilon: c.epsilon.as_ref().map(|e| e.value),
                method: c.epsilon.as_ref().map(|e| e.method),
                degree: Some(c.max_degree),
            })
            .collect()
    }

    /// Loads a manifest: a JSON list of entries whose `source` is either
    /// `builtin:<name>` or an edge-list path relative to the manifest.
    pub fn load_manifest(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let entries: Vec<ManifestEntry> = serde_json::from_str(&text)?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        Self::from_manifest(&entries, base)
    }

    pub fn from_manifest(entries: &[ManifestEntry], base_dir: &Path) -> Result<Self> {
        let mut comps = Vec::with_capacity(entries.len());
        for (pos, e) in entries.iter().enumerate() {
            let graph = match e.source.strip_prefix("builtin:") {
                Some(name) => crate::families::builtin_graph(name)?,
                None => Graph::parse(&std::fs::read_to_string(base_dir.join(&e.source))?)?,
            };
            let mut comp =
                FamilyComponent::new(e.index.unwrap_or(pos + 1), e.source.clone(), graph);
            if let Some(g) = e.girth {
                if g != comp.girth {
                    return Err(Error::precondition(format!(
                        "{}: manifest girth {g} but recomputed girth {}",
                        e.source, comp.girth
                    )));
                }
            }
            if let Some(d) = e.degree {
                if d < comp.max_degree {
                    return Err(Error::precondition(format!(
                        "{}: manifest degree {d} below actual maximum degree {}",
                        e.source, comp.max_degree
                    )));
                }
                comp.max_degree = d;
            }
            if let Some(eps) = e.epsilon {
                let method = e.method.unwrap_or(CertMethod::Exhaustive);
                let fresh = certify_epsilon(&comp.graph, method)?;
                if eps > fresh.value {
                    return Err(Error::precondition(format!(
                        "{}: manifest epsilon {} exceeds the recomputed {} bound {}",
                        e.source,
                        rational::format(&eps),
                        method,
                        rational::format(&fresh.value)
                    )));
                }
                comp.epsilon = Some(EpsilonCertificate { value: eps, method });
            }
            comps.push(comp);
        }
        GraphFamily::new(comps)
    }
}

/// One line of a family manifest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default)]
    pub girth: Option<Girth>,
    #[serde(default, with = "crate::rational::serde_ratio_opt")]
    pub epsilon: Option<Rational>,
    #[serde(default)]
    pub method: Option<CertMethod>,
    #[serde(default)]
    pub degree: Option<usize>,
}
