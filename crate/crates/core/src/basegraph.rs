//! The graph of bases under reflections, singular equivalence classes and
//! the search for bases exposing a principal root.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reflections::{reflect_base, reflect_step, ReflectionStep};
use crate::scalar::Weight;
use crate::system::{Base, RestrictedRootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseEdge {
    pub from: usize,
    pub to: usize,
    pub root: Weight,
    pub singular: bool,
}

/// Bases reachable from a seed; node 0 is the seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseGraph {
    pub nodes: Vec<Base>,
    pub edges: Vec<BaseEdge>,
}

impl BaseGraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of `base` up to reordering of its simples.
    pub fn find(&self, base: &Base) -> Option<usize> {
        let key = base.canonical();
        self.nodes.iter().position(|b| b.canonical() == key)
    }

    /// Connected components of the subgraph of singular edges.
    pub fn singular_classes(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for e in self.edges.iter().filter(|e| e.singular) {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut label = vec![usize::MAX; self.nodes.len()];
        let mut classes = Vec::new();
        for start in 0..self.nodes.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            label[start] = id;
            let mut i = 0;
            while i < members.len() {
                for &n in &adj[members[i]] {
                    if label[n] == usize::MAX {
                        label[n] = id;
                        members.push(n);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Whether every node is reachable from the seed along any edges.
    pub fn is_connected(&self) -> bool {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        while let Some(n) = stack.pop() {
            if !std::mem::replace(&mut seen[n], true) {
                stack.extend(&adj[n]);
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bases {\n");
        for (i, b) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{b}\"];");
        }
        for e in &self.edges {
            let style = if e.singular { "solid" } else { "dashed" };
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\", style={style}];",
                e.from, e.to, e.root
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Sorted copy of the simples, the order in which reflections are tried.
fn canonical_simples(base: &Base) -> Vec<Weight> {
    base.canonical().simples().to_vec()
}

fn explore(system: &RestrictedRootSystem, seed: &Base, singular_only: bool) -> Result<BaseGraph> {
    let mut nodes = vec![seed.clone()];
    let mut index: HashMap<Base, usize> = HashMap::from([(seed.canonical(), 0)]);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let base = nodes[i].clone();
        for alpha in canonical_simples(&base) {
            let singular = system.is_singular(&alpha)?;
            if singular_only && !singular {
                continue;
            }
            let next = reflect_base(system, &base, &alpha)?;
            let j = match index.get(&next.canonical()) {
                Some(&j) => j,
                None => {
                    let j = nodes.len();
                    index.insert(next.canonical(), j);
                    nodes.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(BaseEdge {
                from: i,
                to: j,
                root: alpha,
                singular,
            });
        }
    }
    Ok(BaseGraph { nodes, edges })
}

/// Breadth-first closure of `seed` under reflections in all simple roots.
pub fn enumerate_bases(system: &RestrictedRootSystem, seed: &Base) -> Result<BaseGraph> {
    explore(system, seed, false)
}

/// Bases reachable from `seed` by singular reflections only.
pub fn singular_graph(system: &RestrictedRootSystem, seed: &Base) -> Result<BaseGraph> {
    explore(system, seed, true)
}

/// Every base of the system, by testing all `rank`-subsets of roots.
/// Exponential; intended as an independent check on small systems.
pub fn exhaustive_bases(system: &RestrictedRootSystem) -> Vec<Base> {
    let roots: Vec<&Weight> = system.roots().iter().map(|r| &r.vector).collect();
    let rank = system.rank();
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(rank);
    fn rec(
        system: &RestrictedRootSystem,
        roots: &[&Weight],
        start: usize,
        rank: usize,
        pick: &mut Vec<Weight>,
        out: &mut Vec<Base>,
    ) {
        if pick.len() == rank {
            if let Ok(b) = system.validate_base(pick) {
                out.push(b.canonical());
            }
            return;
        }
        for i in start..roots.len() {
            pick.push(roots[i].clone());
            rec(system, roots, i + 1, rank, pick, out);
            pick.pop();
        }
    }
    rec(system, &roots, 0, rank, &mut pick, &mut out);
    out.sort_by(|a, b| a.simples().cmp(b.simples()));
    out
}

/// A member of a singular equivalence class with a witness path from the seed.
#[derive(Clone, Debug, Serialize)]
pub struct ClassMember {
    pub base: Base,
    pub path: Vec<Weight>,
}

/// Closure of `base` under singular reflections, each member carrying a
/// shortest path (the roots reflected, in order).
pub fn equivalence_class(system: &RestrictedRootSystem, base: &Base) -> Result<Vec<ClassMember>> {
    let g = explore(system, base, true)?;
    let mut parent: Vec<Option<(usize, Weight)>> = vec![None; g.nodes.len()];
    for e in &g.edges {
        if e.to != 0 && parent[e.to].is_none() && e.from < e.to {
            parent[e.to] = Some((e.from, e.root.clone()));
        }
    }
    Ok((0..g.nodes.len())
        .map(|i| {
            let mut path = Vec::new();
            let mut cur = i;
            while let Some((p, r)) = &parent[cur] {
                path.push(r.clone());
                cur = *p;
            }
            path.reverse();
            ClassMember {
                base: g.nodes[i].clone(),
                path,
            }
        })
        .collect())
}

/// All shortest singular-reflection paths from `base` to a base in which
/// `gamma` or `gamma/2` is simple, in canonical order, at most `cap` of them.
pub fn minimal_exposing_paths(
    system: &RestrictedRootSystem,
    base: &Base,
    gamma: &Weight,
    cap: usize,
) -> Result<Vec<Vec<Weight>>> {
    if base.exposed_form(gamma).is_some() {
        return Ok(vec![Vec::new()]);
    }
    let g = explore(system, base, true)?;
    // Distances from the seed.
    let mut dist = vec![usize::MAX; g.nodes.len()];
    dist[0] = 0;
    let mut out_edges: BTreeMap<usize, Vec<&BaseEdge>> = BTreeMap::new();
    for e in &g.edges {
        out_edges.entry(e.from).or_default().push(e);
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for e in out_edges.get(&i).into_iter().flatten() {
            if dist[e.to] == usize::MAX {
                dist[e.to] = dist[i] + 1;
                queue.push_back(e.to);
            }
        }
    }
    let target = (0..g.nodes.len())
        .filter(|&i| g.nodes[i].exposed_form(gamma).is_some())
        .map(|i| dist[i])
        .min()
        .ok_or_else(|| Error::NotFound(gamma.clone()))?;
    let mut paths = Vec::new();
    let mut stack: Vec<Weight> = Vec::new();
    fn walk(
        g: &BaseGraph,
        out_edges: &BTreeMap<usize, Vec<&BaseEdge>>,
        dist: &[usize],
        node: usize,
        target: usize,
        gamma: &Weight,
        cap: usize,
        stack: &mut Vec<Weight>,
        paths: &mut Vec<Vec<Weight>>,
    ) {
        if paths.len() >= cap {
            return;
        }
        if dist[node] == target {
            if g.nodes[node].exposed_form(gamma).is_some() {
                paths.push(stack.clone());
            }
            return;
        }
        for e in out_edges.get(&node).into_iter().flatten() {
            if dist[e.to] == dist[node] + 1 {
                stack.push(e.root.clone());
                walk(g, out_edges, dist, e.to, target, gamma, cap, stack, paths);
                stack.pop();
            }
        }
    }
    walk(
        &g, &out_edges, &dist, 0, target, gamma, cap, &mut stack, &mut paths,
    );
    Ok(paths)
}

/// A base in the singular class of `base` exposing `gamma` (or `gamma/2`),
/// with the shortest reflection path leading to it.
pub fn find_base_exposing(
    system: &RestrictedRootSystem,
    base: &Base,
    gamma: &Weight,
) -> Result<(Base, Vec<ReflectionStep>)> {
    let path = minimal_exposing_paths(system, base, gamma, 1)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NotFound(gamma.clone()))?;
    let mut cur = base.clone();
    let mut steps = Vec::with_capacity(path.len());
    for alpha in &path {
        let step = reflect_step(system, &cur, alpha, None)?;
        cur = step.to_base.clone();
        steps.push(step);
    }
    Ok((cur, steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_pair, PairSpec};
    use crate::scalar::{frac, int};
    use std::collections::BTreeSet;

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    #[test]
    fn bc_graph_matches_exhaustive_search() {
        let e = build_pair(&PairSpec::bc(int(-1), 1, 1)).unwrap();
        let g = enumerate_bases(&e.system, &e.default_base).unwrap();
        assert!(g.is_connected());
        let found: BTreeSet<_> = g.nodes.iter().map(Base::canonical).collect();
        let all: BTreeSet<_> = exhaustive_bases(&e.system).into_iter().collect();
        assert_eq!(found, all);
        for b in &g.nodes {
            e.system.validate_base(b.simples()).unwrap();
        }
    }

    #[test]
    fn d21_graphs_isomorphic_across_parameters() {
        let shape = |a| {
            let e = build_pair(&PairSpec::D21 { a }).unwrap();
            let g = enumerate_bases(&e.system, &e.default_base).unwrap();
            let mut edges: Vec<_> = g
                .edges
                .iter()
                .map(|x| (x.from, x.to, x.root.clone(), x.singular))
                .collect();
            edges.sort();
            (g.nodes.clone(), edges)
        };
        assert_eq!(shape(int(2)), shape(frac(-3, 1)));
        assert_eq!(shape(int(2)), shape(frac(1, 2)));
    }

    #[test]
    fn trivial_class_without_singular_roots() {
        let e = build_pair(&PairSpec::Ag12).unwrap();
        let class = equivalence_class(&e.system, &e.default_base).unwrap();
        assert_eq!(class.len(), 1);
        assert!(class[0].path.is_empty());
    }

    #[test]
    fn sl14_class_exposes_epsilon() {
        let e = build_pair(&PairSpec::Ab13Sl14).unwrap();
        let class = equivalence_class(&e.system, &e.default_base).unwrap();
        assert!(class.iter().any(|m| m.base.contains(&w(&[1, 0]))));
        let pi: BTreeSet<_> = e
            .system
            .principal_roots(&e.default_base)
            .into_iter()
            .collect();
        for m in &class {
            let here: BTreeSet<_> = e.system.principal_roots(&m.base).into_iter().collect();
            assert_eq!(here, pi);
        }
    }

    #[test]
    fn bc_exposure_path() {
        // gamma_r in BC_{-1}(2,2): reflect gamma_2 - nu_1 then gamma_2 - nu_2.
        let e = build_pair(&PairSpec::bc(int(-1), 2, 2)).unwrap();
        let gamma = w(&[0, 1, 0, 0]);
        let (b, steps) = find_base_exposing(&e.system, &e.default_base, &gamma).unwrap();
        let roots: Vec<_> = steps.iter().map(|s| s.root.clone()).collect();
        assert_eq!(roots, vec![w(&[0, 1, -1, 0]), w(&[0, 1, 0, -1])]);
        assert!(b.contains(&gamma));
        let (b0, none) =
            find_base_exposing(&e.system, &e.default_base, &w(&[1, -1, 0, 0])).unwrap();
        assert!(none.is_empty());
        assert_eq!(b0, e.default_base);
    }

    #[test]
    fn osp_osp_eq_exposure_path() {
        // Coordinates (e1, e2, e3, n1). Reflecting in e3 after n1-e1, n1-e2
        // would send n1-e3 to n1+e3 (the e3-string through n1-e3 has length
        // 2), so the shortest route ends with n1-e3 instead.
        let e = build_pair(&PairSpec::OspOspEqual { r: 3, s: 1, n: 3 }).unwrap();
        let paths =
            minimal_exposing_paths(&e.system, &e.default_base, &w(&[0, 0, 0, 1]), 64).unwrap();
        assert_eq!(
            paths,
            vec![vec![
                w(&[-1, 0, 0, 1]),
                w(&[0, -1, 0, 1]),
                w(&[0, 0, -1, 1])
            ]]
        );
    }

    #[test]
    fn dot_export_mentions_every_node() {
        let e = build_pair(&PairSpec::D21 { a: int(2) }).unwrap();
        let g = enumerate_bases(&e.system, &e.default_base).unwrap();
        let dot = g.to_dot();
        for i in 0..g.len() {
            assert!(dot.contains(&format!("n{i} [")));
        }
    }
}
