//! Textbook graph checks used as independent verdicts in tests.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Number of weakly connected components among the nodes that appear in
/// at least one edge. Union-find.
pub fn weak_component_count(edges: &[(String, String)]) -> usize {
    let mut nodes: BTreeSet<&str> = BTreeSet::new();
    for (a, b) in edges {
        nodes.insert(a);
        nodes.insert(b);
    }
    let index: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(i, n)| (*n, i)).collect();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for (a, b) in edges {
        let ra = find(&mut parent, index[a.as_str()]);
        let rb = find(&mut parent, index[b.as_str()]);
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let roots: BTreeSet<usize> = (0..parent.len()).map(|i| find(&mut parent, i)).collect();
    roots.len()
}

/// Whether the directed graph has no cycle. Kahn's algorithm.
pub fn is_acyclic(edges: &[(String, String)]) -> bool {
    let mut successors: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    let mut indegree: BTreeMap<&str, usize> = BTreeMap::new();
    for (a, b) in edges {
        successors.entry(a).or_default().push(b);
        indegree.entry(a).or_default();
        *indegree.entry(b).or_default() += 1;
    }
    let mut queue: VecDeque<&str> = indegree
        .iter()
        .filter(|(_, d)| **d == 0)
        .map(|(n, _)| *n)
        .collect();
    let mut removed = 0;
    while let Some(node) = queue.pop_front() {
        removed += 1;
        for next in successors.get(node).into_iter().flatten() {
            let d = indegree.get_mut(next).expect("every edge endpoint counted");
            *d -= 1;
            if *d == 0 {
                queue.push_back(next);
            }
        }
    }
    removed == indegree.len()
}

/// Recursive three-color DFS cycle detection; the reference verdict for
/// the aggregation-acyclicity rule.
pub fn has_cycle_dfs(edges: &BTreeMap<String, BTreeSet<String>>) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }

    fn visit<'a>(
        node: &'a str,
        edges: &'a BTreeMap<String, BTreeSet<String>>,
        colors: &mut BTreeMap<&'a str, Color>,
    ) -> bool {
        colors.insert(node, Color::Grey);
        if let Some(targets) = edges.get(node) {
            for next in targets {
                match colors.get(next.as_str()).copied().unwrap_or(Color::White) {
                    Color::Grey => return true,
                    Color::Black => {}
                    Color::White => {
                        if visit(next, edges, colors) {
                            return true;
                        }
                    }
                }
            }
        }
        colors.insert(node, Color::Black);
        false
    }

    let mut nodes: BTreeSet<&str> = BTreeSet::new();
    for (a, targets) in edges {
        nodes.insert(a);
        for b in targets {
            nodes.insert(b);
        }
    }
    let mut colors: BTreeMap<&str, Color> = BTreeMap::new();
    for node in nodes {
        if colors.get(node).copied().unwrap_or(Color::White) == Color::White
            && visit(node, edges, &mut colors)
        {
            return true;
        }
    }
    false
}
