use std::collections::VecDeque;

use serde::Serialize;

use super::{DelPezzoError, PicardClass};

/// Intersection graph: vertices are classes, edges join classes pairing to 1.
#[derive(Clone, Debug)]
pub struct CurveGraph {
    pub vertices: Vec<PicardClass>,
    adjacency: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PetersenReport {
    pub vertices: usize,
    pub edges: usize,
    /// Common vertex degree, if the graph is regular.
    pub regular_degree: Option<usize>,
    pub girth: Option<usize>,
    pub automorphisms: usize,
}

impl CurveGraph {
    pub fn new(vertices: Vec<PicardClass>) -> Self {
        let n = vertices.len();
        let adjacency = (0..n)
            .map(|i| (0..n).map(|j| i != j && vertices[i].pair(&vertices[j]) == 1).collect())
            .collect();
        CurveGraph { vertices, adjacency }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.len()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn regular_degree(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let d0 = self.degree(0);
        (1..self.len()).all(|i| self.degree(i) == d0).then_some(d0)
    }

    /// Length of the shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let n = self.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if !self.adjacency[u][v] {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(cycle, |b| b.min(cycle)));
                    }
                }
            }
        }
        best
    }

    /// Every adjacency-preserving vertex permutation, found by backtracking over
    /// partial assignments (degree mismatches and broken adjacencies prune early).
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &mut image, &mut used, &mut out);
        out
    }

    fn extend(&self, k: usize, image: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = self.len();
        if k == n {
            out.push(image.to_vec());
            return;
        }
        for cand in 0..n {
            if used[cand] || self.degree(cand) != self.degree(k) {
                continue;
            }
            if (0..k).any(|j| self.adjacency[k][j] != self.adjacency[cand][image[j]]) {
                continue;
            }
            image[k] = cand;
            used[cand] = true;
            self.extend(k + 1, image, used, out);
            used[cand] = false;
            image[k] = usize::MAX;
        }
    }

    pub fn report(&self) -> PetersenReport {
        PetersenReport {
            vertices: self.len(),
            edges: self.edge_count(),
            regular_degree: self.regular_degree(),
            girth: self.girth(),
            automorphisms: self.automorphisms().len(),
        }
    }
}

/// Checks that `g` is the Petersen graph: 10 vertices, 15 edges, cubic, girth 5, 120 automorphisms.
pub fn petersen_check(g: &CurveGraph) -> Result<PetersenReport, DelPezzoError> {
    let r = g.report();
    let checks: [(&'static str, String, String); 5] = [
        ("vertices", "10".into(), r.vertices.to_string()),
        ("edges", "15".into(), r.edges.to_string()),
        ("regular", "3".into(), r.regular_degree.map_or("irregular".into(), |d| d.to_string())),
        ("girth", "5".into(), r.girth.map_or("none".into(), |g| g.to_string())),
        ("automorphisms", "120".into(), r.automorphisms.to_string()),
    ];
    for (property, expected, found) in checks {
        if expected != found {
            return Err(DelPezzoError::Property {
                property,
                expected,
                found,
            });
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delpezzo::minus_one_curves;

    #[test]
    fn curve_graph_is_petersen() {
        let g = CurveGraph::new(minus_one_curves());
        let r = petersen_check(&g).unwrap();
        assert_eq!(r.edges, 15);
        assert_eq!(r.girth, Some(5));
        assert_eq!(r.automorphisms, 120);
    }

    #[test]
    fn automorphisms_preserve_the_full_pairing() {
        let curves = minus_one_curves();
        let g = CurveGraph::new(curves.clone());
        for sigma in g.automorphisms() {
            for i in 0..10 {
                for j in 0..10 {
                    assert_eq!(curves[i].pair(&curves[j]), curves[sigma[i]].pair(&curves[sigma[j]]));
                }
            }
        }
    }

    #[test]
    fn failing_property_is_named() {
        // Drop one vertex: 9 vertices, the first check to fail is the vertex count.
        let mut curves = minus_one_curves();
        curves.pop();
        let err = petersen_check(&CurveGraph::new(curves)).unwrap_err();
        assert!(matches!(err, DelPezzoError::Property { property: "vertices", .. }));
    }

    #[test]
    fn girth_of_small_cycles() {
        // H·H = 1, so three copies of H form a triangle.
        let a = PicardClass::new(1, [0, 0, 0, 0]);
        let g = CurveGraph::new(vec![a, a, a]);
        assert_eq!(g.girth(), Some(3));
        assert_eq!(g.automorphisms().len(), 6);
    }
}
