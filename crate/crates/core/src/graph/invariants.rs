//! Combinatorial invariants: connectivity, bipartiteness, longest cycle,
//! matching number, pendant structure, twin classes.

use super::{bit, bits, full_mask, Graph};

/// A set of vertices whose members are pairwise twins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwinClass {
    /// Pairwise adjacent with equal closed neighbourhoods; induces a clique.
    Adjacent(Vec<usize>),
    /// Pairwise non-adjacent with equal open neighbourhoods; induces an independent set.
    NonAdjacent(Vec<usize>),
}

impl TwinClass {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Self::Adjacent(v) | Self::NonAdjacent(v) => v,
        }
    }
}

impl Graph {
    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| bits(m).collect())
            .collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut unseen = full_mask(self.n);
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    /// Connected in the usual sense; the empty graph on 0 vertices is not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_masks().len() == 1
    }

    /// A proper 2-colouring `(X, Y)` if one exists. Each component's smallest
    /// vertex goes to `X`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut colour = vec![None; self.n];
        for comp in self.component_masks() {
            let root = comp.trailing_zeros() as usize;
            colour[root] = Some(false);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let cu = colour[u].expect("coloured before push");
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (x, y): (Vec<_>, Vec<_>) = (0..self.n).partition(|&v| colour[v] == Some(false));
        Some((x, y))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.component_masks().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.size() == self.n - 1
    }

    pub fn is_complete(&self) -> bool {
        2 * self.size() == self.n * self.n.saturating_sub(1)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, |m| m.count_ones() as usize);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|&m| m == 0)
    }

    /// Number of components isomorphic to `K_2`.
    pub fn isolated_edge_count(&self) -> usize {
        self.component_masks()
            .into_iter()
            .filter(|m| m.count_ones() == 2)
            .count()
    }

    /// Whether some component with at least one edge is bipartite.
    pub fn has_nontrivial_bipartite_component(&self) -> bool {
        self.component_masks().into_iter().any(|m| {
            m.count_ones() >= 2 && self.induced(m).is_bipartite()
        })
    }

    /// Subgraph induced by a vertex mask, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph::from_masks(adj)
    }

    /// Number of vertices adjacent to every other vertex.
    pub fn full_degree_count(&self) -> usize {
        let target = self.n.saturating_sub(1);
        (0..self.n).filter(|&v| self.degree(v) == target).count()
    }

    /// `(p, q)`: pendant vertices (degree 1) and vertices adjacent to at least one pendant.
    pub fn pendant_counts(&self) -> (usize, usize) {
        let pendant: u64 = (0..self.n)
            .filter(|&v| self.degree(v) == 1)
            .fold(0, |m, v| m | bit(v));
        let quasi = (0..self.n)
            .filter(|&v| self.adj[v] & pendant != 0)
            .count();
        (pendant.count_ones() as usize, quasi)
    }

    /// Maximal twin classes with at least two members.
    ///
    /// Vertices with identical closed neighbourhoods form cliques; vertices
    /// with identical open neighbourhoods form independent sets. A set of
    /// equal-degree vertices with a common neighbourhood outside the set is
    /// exactly a subset of one of these classes.
    pub fn twin_classes(&self) -> Vec<TwinClass> {
        let mut out = Vec::new();
        let group = |key: &dyn Fn(usize) -> u64| {
            let mut used = 0u64;
            let mut classes = Vec::new();
            for u in 0..self.n {
                if used & bit(u) != 0 {
                    continue;
                }
                let members: Vec<usize> = (u..self.n).filter(|&v| key(v) == key(u)).collect();
                for &v in &members {
                    used |= bit(v);
                }
                if members.len() >= 2 {
                    classes.push(members);
                }
            }
            classes
        };
        for c in group(&|v| self.adj[v] | bit(v)) {
            out.push(TwinClass::Adjacent(c));
        }
        for c in group(&|v| self.adj[v]) {
            out.push(TwinClass::NonAdjacent(c));
        }
        out
    }

    /// Length of a longest cycle, 0 for forests.
    ///
    /// Exact backtracking: each cycle is rooted at its smallest vertex and
    /// extended through larger vertices only. Exponential in the worst case;
    /// intended for n <= 12.
    pub fn circumference(&self) -> usize {
        let mut best = 0;
        for root in 0..self.n {
            let allowed = full_mask(self.n) & !full_mask(root + 1);
            // a cycle rooted here has at most 1 + |allowed| vertices
            if best >= 1 + allowed.count_ones() as usize {
                break;
            }
            self.extend_cycle(root, root, bit(root), allowed, 1, &mut best);
            if best == self.n {
                break;
            }
        }
        best
    }

    fn extend_cycle(
        &self,
        root: usize,
        tail: usize,
        on_path: u64,
        allowed: u64,
        len: usize,
        best: &mut usize,
    ) {
        if len >= 3 && self.has_edge(tail, root) && len > *best {
            *best = len;
        }
        let free = allowed & !on_path;
        if len + free.count_ones() as usize <= *best {
            return;
        }
        for v in bits(self.adj[tail] & free) {
            self.extend_cycle(root, v, on_path | bit(v), allowed, len + 1, best);
            if *best == self.n {
                return;
            }
        }
    }

    /// Size of a maximum matching, by exact branch and bound.
    pub fn matching_number(&self) -> usize {
        let mut best = 0;
        self.extend_matching(full_mask(self.n), 0, &mut best);
        best
    }

    fn extend_matching(&self, free: u64, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        // vertices that can still be matched
        let live = bits(free)
            .filter(|&v| self.adj[v] & free != 0)
            .fold(0u64, |m, v| m | bit(v));
        if size + live.count_ones() as usize / 2 <= *best {
            return;
        }
        let v = live.trailing_zeros() as usize;
        for u in bits(self.adj[v] & free) {
            self.extend_matching(free & !bit(v) & !bit(u), size + 1, best);
        }
        // leave v unmatched
        self.extend_matching(free & !bit(v), size, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn fam(spec: FamilySpec) -> Graph {
        spec.build().unwrap()
    }

    #[test]
    fn components_examples() {
        let g = fam(FamilySpec::Complete(2))
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 1]);
        assert_eq!(fam(FamilySpec::Cycle(5)).components().len(), 1);
        let k2 = fam(FamilySpec::Complete(2));
        let three = k2.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap();
        assert_eq!(three.components(), vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert_eq!(three.isolated_edge_count(), 3);
    }

    #[test]
    fn bipartition_examples() {
        let (x, y) = fam(FamilySpec::Cycle(4)).bipartition().unwrap();
        assert_eq!((x.len(), y.len()), (2, 2));
        assert!(fam(FamilySpec::Cycle(5)).bipartition().is_none());
        let (x, y) = fam(FamilySpec::Star(4)).bipartition().unwrap();
        assert_eq!((x.len(), y.len()), (1, 3));
    }

    #[test]
    fn circumference_examples() {
        assert_eq!(fam(FamilySpec::Star(6)).circumference(), 0);
        assert_eq!(fam(FamilySpec::Path(7)).circumference(), 0);
        assert_eq!(fam(FamilySpec::Cycle(7)).circumference(), 7);
        assert_eq!(fam(FamilySpec::Complete(4)).circumference(), 4);
        // two triangles sharing a vertex
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(bowtie.circumference(), 3);
        assert_eq!(Graph::empty(0).unwrap().circumference(), 0);
    }

    #[test]
    fn matching_examples() {
        assert_eq!(fam(FamilySpec::Complete(2)).matching_number(), 1);
        assert_eq!(fam(FamilySpec::Cycle(5)).matching_number(), 2);
        assert_eq!(fam(FamilySpec::Star(5)).matching_number(), 1);
        assert_eq!(fam(FamilySpec::Complete(7)).matching_number(), 3);
        assert_eq!(Graph::empty(4).unwrap().matching_number(), 0);
    }

    #[test]
    fn pendant_examples() {
        assert_eq!(fam(FamilySpec::Star(6)).pendant_counts(), (5, 1));
        assert_eq!(fam(FamilySpec::Path(4)).pendant_counts(), (2, 2));
        assert_eq!(fam(FamilySpec::Cycle(6)).pendant_counts(), (0, 0));
        assert_eq!(fam(FamilySpec::Complete(2)).pendant_counts(), (2, 2));
    }

    #[test]
    fn predicates() {
        assert!(fam(FamilySpec::Path(5)).is_tree());
        assert!(!fam(FamilySpec::Cycle(5)).is_forest());
        assert!(Graph::empty(3).unwrap().is_forest());
        assert!(!Graph::empty(3).unwrap().is_tree());
        assert_eq!(fam(FamilySpec::Cycle(5)).regular_degree(), Some(2));
        assert_eq!(fam(FamilySpec::Path(3)).regular_degree(), None);
        assert!(fam(FamilySpec::Complete(5)).is_complete());
        assert_eq!(fam(FamilySpec::CompleteMinusEdge(5)).full_degree_count(), 3);
        let tri_k2 = fam(FamilySpec::Complete(3))
            .disjoint_union(&fam(FamilySpec::Complete(2)))
            .unwrap();
        assert!(tri_k2.has_nontrivial_bipartite_component());
        let tri_k1 = fam(FamilySpec::Complete(3))
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert!(!tri_k1.has_nontrivial_bipartite_component());
    }

    #[test]
    fn twin_classes_of_small_families() {
        let star = fam(FamilySpec::Star(4));
        assert_eq!(star.twin_classes(), vec![TwinClass::NonAdjacent(vec![1, 2, 3])]);
        let km = fam(FamilySpec::CompleteMinusEdge(4));
        assert_eq!(
            km.twin_classes(),
            vec![TwinClass::Adjacent(vec![0, 1]), TwinClass::NonAdjacent(vec![2, 3])]
        );
        assert!(fam(FamilySpec::Cycle(5)).twin_classes().is_empty());
    }
}
