//! Non-isomorphic free trees via level sequences (Wright, Richmond, Odlyzko,
//! McKay), plus AHU canonical forms used to check the generator.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tree order {order} outside 1..={max}", max = MAX_ENUMERATION_ORDER)]
pub struct OrderOutOfRange {
    pub order: usize,
}

/// Every free tree on `n` vertices once, in generation order.
pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees, OrderOutOfRange> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(OrderOutOfRange { order: n });
    }
    let layout = if n == 1 {
        None
    } else {
        Some((0..=n / 2).chain(1..n.div_ceil(2)).collect())
    };
    Ok(FreeTrees {
        single: n == 1,
        layout,
    })
}

/// Trees of every order in `1..=max_n`, ascending.
pub fn all_free_trees(max_n: usize) -> Result<Vec<Graph>, OrderOutOfRange> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_free_trees(n)?);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct FreeTrees {
    single: bool,
    layout: Option<Vec<usize>>,
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single {
            self.single = false;
            return Some(Graph::empty(1));
        }
        let candidate = self.layout.take()?;
        let layout = next_tree(candidate)?;
        self.layout = next_rooted_tree(&layout, None);
        Some(layout_to_graph(&layout))
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().max().copied().unwrap_or(0);
    let rest_height = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (k, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] < level {
                edges.push((i, j));
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), edges).expect("level sequence is a tree")
}

/// AHU canonical string of a tree, rooted at its centre (the smaller
/// encoding when there are two centres). Equal strings iff isomorphic.
pub fn canonical_form(t: &Graph) -> String {
    assert!(t.is_tree(), "canonical_form expects a tree");
    centres(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .expect("tree has a centre")
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| encode(t, c, v))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    children.iter().for_each(|c| s.push_str(c));
    s.push(')');
    s
}

fn centres(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Canonical forms of all trees on `n` vertices, grown one leaf at a time
/// from `K_1` with deduplication. Slow; used as a reference.
pub fn trees_by_leaf_growth(n: usize) -> BTreeSet<String> {
    assert!(n >= 1);
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for k in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in t.vertices() {
                let grown =
                    Graph::from_edges(k + 1, t.edges().iter().copied().chain([(v, k)])).unwrap();
                if seen.insert(canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level.iter().map(canonical_form).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    const FREE_TREE_COUNTS: [usize; 18] = [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
    ];

    #[test]
    fn counts_match_known_sequence() {
        for n in 1..=16 {
            assert_eq!(
                enumerate_free_trees(n).unwrap().count(),
                FREE_TREE_COUNTS[n - 1],
                "n = {n}"
            );
        }
    }

    #[test]
    fn every_output_is_a_tree_of_the_right_order() {
        for n in 1..=10 {
            for t in enumerate_free_trees(n).unwrap() {
                assert_eq!(t.vertex_count(), n);
                assert!(t.is_tree());
            }
        }
    }

    #[test]
    fn matches_leaf_growth_reference() {
        for n in 1..=10 {
            let generated: Vec<String> = enumerate_free_trees(n)
                .unwrap()
                .map(|t| canonical_form(&t))
                .collect();
            let distinct: BTreeSet<String> = generated.iter().cloned().collect();
            assert_eq!(distinct.len(), generated.len(), "duplicate at n = {n}");
            assert_eq!(distinct, trees_by_leaf_growth(n), "n = {n}");
        }
    }

    #[test]
    fn small_orders() {
        let four: Vec<Graph> = enumerate_free_trees(4).unwrap().collect();
        let forms: BTreeSet<String> = four.iter().map(canonical_form).collect();
        assert_eq!(
            forms,
            [canonical_form(&path(4)), canonical_form(&star(3))]
                .into_iter()
                .collect()
        );
        assert_eq!(
            enumerate_free_trees(1).unwrap().collect::<Vec<_>>(),
            vec![Graph::empty(1)]
        );
        assert_eq!(
            enumerate_free_trees(2).unwrap().collect::<Vec<_>>(),
            vec![path(2)]
        );
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_free_trees(19).is_err());
    }

    #[test]
    fn all_up_to_fifteen() {
        assert_eq!(all_free_trees(15).unwrap().len(), 13188);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = a.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&path(5)), canonical_form(&a));
    }
}
