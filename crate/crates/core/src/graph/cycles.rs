use serde::{Deserialize, Serialize};

use super::{GraphError, SimpleGraph, Vertex};

/// Simple cycles of a graph, each as a closed vertex sequence (the closing
/// edge from last back to first is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleList {
    pub cycles: Vec<Vec<Vertex>>,
}

impl CycleList {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Rotates so the smallest vertex is first, then picks the direction with
/// the smaller second vertex.
fn normalize_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let forward: Vec<_> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    let backward: Vec<_> = (0..len).map(|i| cycle[(start + len - i) % len]).collect();
    if forward <= backward {
        forward
    } else {
        backward
    }
}

pub(crate) fn validate_cycle(cycle: &[Vertex], vertex_count: usize) -> Result<(), GraphError> {
    if cycle.len() < 3 {
        return Err(GraphError::MalformedCycle(format!(
            "length {} is below 3",
            cycle.len()
        )));
    }
    let mut seen = vec![false; vertex_count];
    for &v in cycle {
        if v >= vertex_count {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count,
            });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(GraphError::MalformedCycle(format!("vertex {v} repeated")));
        }
    }
    Ok(())
}

impl SimpleGraph {
    /// All simple cycles, normalized and sorted by (length, vertices).
    ///
    /// Enumerates simple paths, so only use it on graphs with few cycles
    /// (bicyclic bases have two or three).
    pub fn simple_cycles(&self) -> CycleList {
        let n = self.vertex_count();
        let mut found = Vec::new();
        let mut on_path = vec![false; n];
        let mut path = Vec::new();
        // each cycle is reported from its smallest vertex
        for start in 0..n {
            on_path[start] = true;
            path.push(start);
            self.extend_cycles(start, &mut path, &mut on_path, &mut found);
            path.pop();
            on_path[start] = false;
        }
        let mut cycles: Vec<_> = found.iter().map(|c: &Vec<Vertex>| normalize_cycle(c)).collect();
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        cycles.dedup();
        CycleList { cycles }
    }

    fn extend_cycles(
        &self,
        start: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        found: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *path.last().expect("path is nonempty");
        for &w in self.neighbors(last) {
            if w == start && path.len() >= 3 {
                // each cycle is seen twice (two directions); keep one
                if path[1] < last {
                    found.push(path.clone());
                }
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_cycles(start, path, on_path, found);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    /// Cycles of a bicyclic graph: three for a theta base, two for a dumbbell.
    /// Vertex labels refer to `self`, not to the relabelled base.
    pub fn induced_cycles(&self) -> Result<CycleList, GraphError> {
        if !self.is_bicyclic() {
            return Err(GraphError::NotBicyclic);
        }
        let core = self.core_vertices();
        let base = self.induced_subgraph(&core);
        let mut list = base.simple_cycles();
        for cycle in &mut list.cycles {
            for v in cycle.iter_mut() {
                *v = core[*v];
            }
        }
        Ok(list)
    }
}
