use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{rank, ExplicitMatroid, GraphicMatroid, Matroid, PartitionMatroid, UniformMatroid};
use crate::objective::{
    ConcaveMap, ConcaveOfModular, CoverageFunction, LinearRegularizer, ModularFunction, ValueOracle,
};
use crate::scalar::Scalar;
use crate::set::ElementSet;

use super::FORMAT_VERSION;

/// On-disk description of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub name: String,
    /// Ground-set size, repeated by every section that depends on it.
    pub n: usize,
    /// Checked against the matroid when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_rank: Option<usize>,
    pub objective: ObjectiveSpec,
    pub matroid: MatroidSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regularizer: Option<RegularizerSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectiveSpec {
    /// `covers[u]` lists the named universe points covered by element `u`.
    Coverage {
        universe: Vec<String>,
        weights: Vec<u64>,
        covers: Vec<Vec<String>>,
    },
    Modular {
        weights: Vec<u64>,
    },
    ConcaveOfModular {
        weights: Vec<u64>,
        map: ConcaveSpec,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ConcaveSpec {
    Sqrt,
    Cap { cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidSpec {
    Uniform {
        k: usize,
    },
    Partition {
        blocks: Vec<Vec<usize>>,
        capacities: Vec<usize>,
    },
    /// Element `u` is the edge `edges[u]`.
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Explicit {
        independent: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegularizerSpec {
    pub weights: Vec<i64>,
}

/// Objective built from an [`ObjectiveSpec`].
#[derive(Debug, Clone)]
pub enum Objective<T> {
    Coverage(CoverageFunction),
    Modular(ModularFunction<T>),
    ConcaveOfModular(ConcaveOfModular<T>),
}

impl<T: Scalar> ValueOracle<T> for Objective<T> {
    fn ground_size(&self) -> usize {
        match self {
            Objective::Coverage(f) => ValueOracle::<T>::ground_size(f),
            Objective::Modular(f) => f.ground_size(),
            Objective::ConcaveOfModular(f) => f.ground_size(),
        }
    }

    fn eval(&self, set: &ElementSet) -> T {
        match self {
            Objective::Coverage(f) => f.eval(set),
            Objective::Modular(f) => f.eval(set),
            Objective::ConcaveOfModular(f) => f.eval(set),
        }
    }
}

/// Matroid built from a [`MatroidSpec`].
#[derive(Debug, Clone)]
pub enum AnyMatroid {
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
    Graphic(GraphicMatroid),
    Explicit(ExplicitMatroid),
}

impl Matroid for AnyMatroid {
    fn ground_size(&self) -> usize {
        match self {
            AnyMatroid::Uniform(m) => m.ground_size(),
            AnyMatroid::Partition(m) => m.ground_size(),
            AnyMatroid::Graphic(m) => m.ground_size(),
            AnyMatroid::Explicit(m) => m.ground_size(),
        }
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        match self {
            AnyMatroid::Uniform(m) => m.is_independent(set),
            AnyMatroid::Partition(m) => m.is_independent(set),
            AnyMatroid::Graphic(m) => m.is_independent(set),
            AnyMatroid::Explicit(m) => m.is_independent(set),
        }
    }
}

/// A parsed instance ready to solve.
#[derive(Debug, Clone)]
pub struct Instance<T> {
    pub name: String,
    pub objective: Objective<T>,
    pub matroid: AnyMatroid,
    pub regularizer: Option<LinearRegularizer<T>>,
}

impl<T: Scalar> Instance<T> {
    pub fn n(&self) -> usize {
        self.matroid.ground_size()
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInstance(msg.into())
}

fn check_len(section: &str, found: usize, n: usize) -> Result<()> {
    if found == n {
        Ok(())
    } else {
        Err(invalid(format!(
            "{section} describes {found} elements, expected n = {n}"
        )))
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Err(invalid(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                file.format_version
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("instance serializes");
        text.push('\n');
        text
    }

    /// Builds the oracles, checking that every section agrees on `n` and that
    /// the matroid has the declared rank.
    pub fn build<T: Scalar>(&self) -> Result<Instance<T>> {
        let n = self.n;
        let objective = match &self.objective {
            ObjectiveSpec::Coverage {
                universe,
                weights,
                covers,
            } => {
                check_len("objective.covers", covers.len(), n)?;
                if weights.len() != universe.len() {
                    return Err(invalid(format!(
                        "{} universe points but {} weights",
                        universe.len(),
                        weights.len()
                    )));
                }
                let mut index = HashMap::with_capacity(universe.len());
                for (i, name) in universe.iter().enumerate() {
                    if index.insert(name.as_str(), i).is_some() {
                        return Err(invalid(format!("universe point {name:?} listed twice")));
                    }
                }
                let covers = covers
                    .iter()
                    .map(|points| {
                        points
                            .iter()
                            .map(|p| {
                                index
                                    .get(p.as_str())
                                    .copied()
                                    .ok_or_else(|| invalid(format!("unknown universe point {p:?}")))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Objective::Coverage(CoverageFunction::new(weights.clone(), covers)?)
            }
            ObjectiveSpec::Modular { weights } => {
                check_len("objective.weights", weights.len(), n)?;
                Objective::Modular(ModularFunction::new(scalars(weights)))
            }
            ObjectiveSpec::ConcaveOfModular { weights, map } => {
                check_len("objective.weights", weights.len(), n)?;
                let map = match map {
                    ConcaveSpec::Sqrt => ConcaveMap::Sqrt,
                    ConcaveSpec::Cap { cap } => ConcaveMap::Cap(T::from_count(*cap as usize)),
                };
                Objective::ConcaveOfModular(ConcaveOfModular::new(scalars(weights), map))
            }
        };
        let matroid = match &self.matroid {
            MatroidSpec::Uniform { k } => AnyMatroid::Uniform(UniformMatroid::new(n, *k)),
            MatroidSpec::Partition { blocks, capacities } => {
                AnyMatroid::Partition(PartitionMatroid::new(n, blocks.clone(), capacities.clone())?)
            }
            MatroidSpec::Graphic { vertices, edges } => {
                check_len("matroid.edges", edges.len(), n)?;
                let edges = edges.iter().map(|e| (e[0], e[1])).collect();
                AnyMatroid::Graphic(GraphicMatroid::new(*vertices, edges)?)
            }
            MatroidSpec::Explicit { independent } => AnyMatroid::Explicit(ExplicitMatroid::new(n, independent)?),
        };
        if let Some(expected) = self.expected_rank {
            let found = rank(&matroid);
            if found != expected {
                return Err(invalid(format!(
                    "matroid has rank {found}, expected_rank is {expected}"
                )));
            }
        }
        let regularizer = match &self.regularizer {
            Some(spec) => {
                check_len("regularizer.weights", spec.weights.len(), n)?;
                let weights = spec.weights.iter().map(|&w| T::from_int(w)).collect();
                Some(LinearRegularizer::new(weights))
            }
            None => None,
        };
        Ok(Instance {
            name: self.name.clone(),
            objective,
            matroid,
            regularizer,
        })
    }
}

fn scalars<T: Scalar>(weights: &[u64]) -> Vec<T> {
    weights.iter().map(|&w| T::from_count(w as usize)).collect()
}
