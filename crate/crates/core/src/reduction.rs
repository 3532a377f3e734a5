//! Deligne-Lusztig reduction: conjugation moves, the relation `~>`, reduction
//! trees with dimension bookkeeping, and chains of elementary steps certifying
//! `x => y`.
//!
//! `x => y` means `dim X_x(b) - d(x) >= dim X_y(b) - d(y)` for every `b`. The
//! elementary steps are:
//!
//! * `Conjugation`: a `~>` path whose endpoints have `η` of equal length;
//! * `DropLeft(s)` / `DropRight(s)`: `x => sx` (resp. `xs`) for finite `s` with
//!   `ℓ(sxs) < ℓ(x)` and `ℓ(η)` dropping by exactly one;
//! * `LengthPreserving`: a single length-preserving conjugation with `ℓ(η)` unchanged;
//! * `Construction`: `x => a t^γ` from [`construct_a_t_gamma`].

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::affine_weyl::{AffineElt, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::finite_weyl::{Side, WeylElt};
use crate::halfint::{DimBound, HalfInt};
use crate::root_system::{Coweight, NodeSet};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Effect of conjugating by a simple reflection on the length.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum MoveCase {
    Raise,
    Equal,
    Drop2,
}

pub fn classify_move(g: &AffineWeylGroup, x: &AffineElt, i: usize) -> MoveCase {
    let l = g.length(x);
    let l2 = g.length(&g.conj_simple(i, x));
    match l2.cmp(&l) {
        std::cmp::Ordering::Greater => MoveCase::Raise,
        std::cmp::Ordering::Equal => MoveCase::Equal,
        std::cmp::Ordering::Less => MoveCase::Drop2,
    }
}

/// An edge of a reduction tree or a `~>` path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveKind {
    /// `s x s` with the same length.
    Equal { node: usize },
    /// `s x s` with length lower by 2.
    Closed { node: usize },
    /// `s x` where `s x s` is shorter by 2.
    Open { node: usize },
    /// `τ x τ^{-1}` with `ℓ(τ) = 0`.
    Omega { tau: String },
}

impl MoveKind {
    /// Lower bound on `dim X_source - dim X_target` carried by the edge.
    pub fn increment(&self) -> u32 {
        match self {
            MoveKind::Equal { .. } | MoveKind::Omega { .. } => 0,
            MoveKind::Closed { .. } | MoveKind::Open { .. } => 1,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Equal { node } => write!(f, "equal s{node}"),
            MoveKind::Closed { node } => write!(f, "closed s{node}"),
            MoveKind::Open { node } => write!(f, "open s{node}"),
            MoveKind::Omega { tau } => write!(f, "omega {tau}"),
        }
    }
}

/// Single `~>` moves out of `x`: simple conjugations that do not raise the
/// length, then conjugations by nontrivial length-zero elements.
pub fn tilde_moves(g: &AffineWeylGroup, x: &AffineElt) -> Vec<(MoveKind, AffineElt)> {
    let l = g.length(x);
    let mut out = Vec::new();
    for i in 0..=g.rank() {
        let y = g.conj_simple(i, x);
        let ly = g.length(&y);
        if y == *x || ly > l {
            continue;
        }
        let kind = if ly == l {
            MoveKind::Equal { node: i }
        } else {
            MoveKind::Closed { node: i }
        };
        out.push((kind, y));
    }
    out.extend(omega_moves(g, x));
    out
}

fn omega_moves(g: &AffineWeylGroup, x: &AffineElt) -> Vec<(MoveKind, AffineElt)> {
    g.omega_elements()
        .iter()
        .skip(1)
        .filter_map(|tau| {
            let y = g.conjugate(tau, x);
            (y != *x).then(|| (MoveKind::Omega { tau: g.omega_name(tau) }, y))
        })
        .collect()
}

/// `y` is obtained from `x` by one `~>` move.
pub fn is_single_move(g: &AffineWeylGroup, x: &AffineElt, y: &AffineElt) -> bool {
    x == y || tilde_moves(g, x).iter().any(|(_, z)| z == y)
}

/// Result of a bounded closure computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachable {
    pub elements: Vec<AffineElt>,
    pub partial: bool,
}

/// All `x'` with `x ~> x'` and `ℓ(x') >= length_floor`, sorted canonically.
pub fn tilde_reachable(
    g: &AffineWeylGroup,
    x: &AffineElt,
    length_floor: usize,
    budget: usize,
) -> Reachable {
    let mut seen: HashSet<AffineElt> = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    let mut partial = false;
    while let Some(cur) = queue.pop_front() {
        for (_, y) in tilde_moves(g, &cur) {
            if g.length(&y) < length_floor || seen.contains(&y) {
                continue;
            }
            if seen.len() >= budget {
                partial = true;
                break;
            }
            seen.insert(y.clone());
            queue.push_back(y);
        }
    }
    let mut elements: Vec<AffineElt> = seen.into_iter().collect();
    crate::enumerate::sort_canonical(g, &mut elements);
    Reachable { elements, partial }
}

/// Shortest `~>` path from `x` to an element satisfying `goal`.
pub fn tilde_path(
    g: &AffineWeylGroup,
    x: &AffineElt,
    goal: impl Fn(&AffineElt) -> bool,
    budget: usize,
) -> Result<Option<Vec<AffineElt>>> {
    let mut parent: HashMap<AffineElt, Option<AffineElt>> = HashMap::from([(x.clone(), None)]);
    let mut queue = VecDeque::from([x.clone()]);
    let mut exhausted = false;
    while let Some(cur) = queue.pop_front() {
        if goal(&cur) {
            let mut path = vec![cur.clone()];
            let mut at = cur;
            while let Some(Some(p)) = parent.get(&at) {
                path.push(p.clone());
                at = p.clone();
            }
            path.reverse();
            return Ok(Some(path));
        }
        for (_, y) in tilde_moves(g, &cur) {
            if parent.contains_key(&y) {
                continue;
            }
            if parent.len() >= budget {
                exhausted = true;
                break;
            }
            parent.insert(y.clone(), Some(cur.clone()));
            queue.push_back(y);
        }
    }
    if exhausted {
        Err(Error::BudgetExhausted(budget))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub kind: MoveKind,
    pub increment: u32,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub element: AffineElt,
    pub length: usize,
    pub eta_length: usize,
    /// No length-decreasing conjugation is reachable: `x` has minimal length
    /// in its conjugacy class.
    pub minimal: bool,
    pub edges: Vec<TreeEdge>,
}

/// A reduction DAG rooted at `nodes[0]`, with nodes deduplicated by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTree {
    pub nodes: Vec<TreeNode>,
    pub partial: bool,
}

/// First simple index with a length-drop conjugation, trying the finite
/// nodes `1..=rank` in order and `s_0` last.
fn first_drop(g: &AffineWeylGroup, x: &AffineElt) -> Option<usize> {
    (1..=g.rank())
        .chain([0])
        .find(|&i| classify_move(g, x, i) == MoveCase::Drop2)
}

/// First move of a shortest equal-length path from `x` to an element that
/// admits a length drop.
fn step_towards_drop(g: &AffineWeylGroup, x: &AffineElt) -> Option<(MoveKind, AffineElt)> {
    let l = g.length(x);
    let mut first: HashMap<AffineElt, Option<(MoveKind, AffineElt)>> =
        HashMap::from([(x.clone(), None)]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(cur) = queue.pop_front() {
        if first_drop(g, &cur).is_some() {
            return first[&cur].clone();
        }
        for (kind, y) in tilde_moves(g, &cur) {
            if g.length(&y) != l || first.contains_key(&y) {
                continue;
            }
            let via = match &first[&cur] {
                None => Some((kind, y.clone())),
                Some(step) => Some(step.clone()),
            };
            first.insert(y.clone(), via);
            queue.push_back(y);
        }
    }
    None
}

/// Builds the reduction tree of `x`: at each node the first `i` (finite
/// nodes ascending, then `0`) with `ℓ(s_i x s_i) = ℓ(x) - 2` splits into the
/// closed child `s_i x s_i` and the open child `s_i x`; otherwise one
/// equal-length move is taken towards the nearest element admitting such a
/// split; otherwise the node is minimal.
pub fn build_reduction_tree(g: &AffineWeylGroup, x: &AffineElt, budget: usize) -> ReductionTree {
    let mut tree = ReductionTree {
        nodes: Vec::new(),
        partial: false,
    };
    let mut index: HashMap<AffineElt, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let new_node = |g: &AffineWeylGroup, element: AffineElt| TreeNode {
        length: g.length(&element),
        eta_length: g.weyl().length(&g.eta(&element)),
        element,
        minimal: false,
        edges: Vec::new(),
    };
    tree.nodes.push(new_node(g, x.clone()));
    index.insert(x.clone(), 0);
    queue.push_back(0);
    while let Some(k) = queue.pop_front() {
        let cur = tree.nodes[k].element.clone();
        let moves: Vec<(MoveKind, AffineElt)> = match first_drop(g, &cur) {
            Some(i) => vec![
                (MoveKind::Closed { node: i }, g.conj_simple(i, &cur)),
                (MoveKind::Open { node: i }, g.mul(g.s(i), &cur)),
            ],
            None => match step_towards_drop(g, &cur) {
                Some(step) => vec![step],
                None => {
                    tree.nodes[k].minimal = true;
                    continue;
                }
            },
        };
        for (kind, y) in moves {
            let target = match index.get(&y) {
                Some(&t) => t,
                None => {
                    if tree.nodes.len() >= budget {
                        tree.partial = true;
                        continue;
                    }
                    let t = tree.nodes.len();
                    tree.nodes.push(new_node(g, y.clone()));
                    index.insert(y, t);
                    queue.push_back(t);
                    t
                }
            };
            let increment = kind.increment();
            tree.nodes[k].edges.push(TreeEdge {
                kind,
                increment,
                target,
            });
        }
    }
    tree
}

impl ReductionTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.edges.is_empty())
    }

    /// Every root-to-leaf path as a list of node indices.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![vec![0usize]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            if self.nodes[last].edges.is_empty() {
                out.push(path);
                continue;
            }
            for e in self.nodes[last].edges.iter().rev() {
                let mut p = path.clone();
                p.push(e.target);
                stack.push(p);
            }
        }
        out
    }

    /// Best lower bound for the root given dimensions of some nodes: the
    /// maximum over nodes with known dimension of that dimension plus the
    /// largest sum of increments along a path to it.
    pub fn lower_bound(&self, base_dims: &HashMap<AffineElt, HalfInt>) -> DimBound {
        let mut memo: Vec<Option<DimBound>> = vec![None; self.nodes.len()];
        // Children have larger indices than some parent, but not necessarily
        // than every parent, so evaluate by explicit post-order.
        fn go(
            t: &ReductionTree,
            k: usize,
            base: &HashMap<AffineElt, HalfInt>,
            memo: &mut Vec<Option<DimBound>>,
        ) -> DimBound {
            if let Some(v) = memo[k] {
                return v;
            }
            let mut best = base
                .get(&t.nodes[k].element)
                .map_or(DimBound::NegInfinity, |&d| DimBound::Finite(d));
            for e in &t.nodes[k].edges {
                if let DimBound::Finite(d) = go(t, e.target, base, memo) {
                    let cand = DimBound::Finite(d + HalfInt::from_int(e.increment as i64));
                    best = best.max(cand);
                }
            }
            memo[k] = Some(best);
            best
        }
        go(self, 0, base_dims, &mut memo)
    }

    /// Nested JSON with fields `element`, `length`, `eta_length`, `move`,
    /// `increment`, `minimal`, `shared`, `children`. A node reached a second
    /// time is written once more with `shared: true` and no children.
    pub fn to_json(&self, g: &AffineWeylGroup) -> Value {
        let mut emitted = vec![false; self.nodes.len()];
        let root = self.node_json(g, 0, None, &mut emitted);
        json!({
            "type": g.cartan_type().to_string(),
            "partial": self.partial,
            "root": root,
        })
    }

    fn node_json(
        &self,
        g: &AffineWeylGroup,
        k: usize,
        via: Option<&TreeEdge>,
        emitted: &mut Vec<bool>,
    ) -> Value {
        let n = &self.nodes[k];
        let shared = emitted[k];
        emitted[k] = true;
        let children: Vec<Value> = if shared {
            Vec::new()
        } else {
            n.edges
                .iter()
                .map(|e| self.node_json(g, e.target, Some(e), emitted))
                .collect()
        };
        json!({
            "element": g.format(&n.element),
            "length": n.length,
            "eta_length": n.eta_length,
            "move": via.map(|e| e.kind.to_string()),
            "increment": via.map(|e| e.increment),
            "minimal": n.minimal,
            "shared": shared,
            "children": children,
        })
    }

    pub fn to_dot(&self, g: &AffineWeylGroup) -> String {
        let mut out = String::from("digraph reduction {\n  node [shape=box];\n");
        for (k, n) in self.nodes.iter().enumerate() {
            let style = if n.minimal { ", style=bold" } else { "" };
            out.push_str(&format!(
                "  n{k} [label=\"{}\\nℓ={}\"{style}];\n",
                g.format(&n.element),
                n.length
            ));
        }
        for (k, n) in self.nodes.iter().enumerate() {
            for e in &n.edges {
                out.push_str(&format!(
                    "  n{k} -> n{} [label=\"{} +{}\"];\n",
                    e.target, e.kind, e.increment
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `max` over known elements `x'` of `dim(x') + (ℓ(x) - ℓ(x'))/2`, the bound
/// for `x ~> x'`; `-inf` when nothing is known.
pub fn lower_bound_dim(
    g: &AffineWeylGroup,
    x: &AffineElt,
    base_dims: &HashMap<AffineElt, HalfInt>,
) -> DimBound {
    let lx = g.length(x) as i64;
    base_dims
        .iter()
        .map(|(y, &d)| DimBound::Finite(d + HalfInt::from_twice(lx - g.length(y) as i64)))
        .max()
        .unwrap_or(DimBound::NegInfinity)
}

/// `dim X_{wτ}(τ) = ℓ(w)` for `w ∈ W_J` with `J ⊆ S` stable under `τ`.
/// Returns `None` when `x` is not of that form.
pub fn length_zero_base_dim(g: &AffineWeylGroup, x: &AffineElt) -> Option<HalfInt> {
    let (w, tau) = g.split_omega(x);
    if !w.transl().is_zero() {
        return None;
    }
    let perm = g.omega_permutation(&tau);
    let mut nodes = g.weyl().support(w.finite());
    loop {
        let image: NodeSet = nodes.iter().map(|i| perm[i]).collect();
        let next = nodes.union(image);
        if next == nodes {
            break;
        }
        nodes = next;
    }
    if nodes.contains(0) {
        return None;
    }
    Some(HalfInt::from_int(g.weyl().length(w.finite()) as i64))
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum StepKind {
    Conjugation,
    LengthPreserving,
    DropLeft { node: usize },
    DropRight { node: usize },
    Construction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    /// `path[0]` is the source and the last entry the target; intermediate
    /// entries are the `~>` moves of a conjugation step.
    pub path: Vec<AffineElt>,
}

impl Step {
    pub fn source(&self) -> &AffineElt {
        &self.path[0]
    }

    pub fn target(&self) -> &AffineElt {
        self.path.last().unwrap()
    }
}

fn eta_len(g: &AffineWeylGroup, x: &AffineElt) -> usize {
    g.weyl().length(&g.eta(x))
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidWitness(msg.into()))
}

pub fn validate_step(g: &AffineWeylGroup, step: &Step) -> Result<()> {
    if step.path.len() < 2 {
        return invalid("a step needs a source and a target");
    }
    let (x, y) = (step.source(), step.target());
    if g.kappa(x) != g.kappa(y) {
        return invalid("source and target lie in different components");
    }
    match step.kind {
        StepKind::Conjugation | StepKind::LengthPreserving => {
            for pair in step.path.windows(2) {
                if !is_single_move(g, &pair[0], &pair[1]) {
                    return invalid(format!(
                        "{} -> {} is not a single conjugation move",
                        g.format(&pair[0]),
                        g.format(&pair[1])
                    ));
                }
            }
            if step.kind == StepKind::LengthPreserving
                && (step.path.len() != 2 || g.length(x) != g.length(y))
            {
                return invalid("a length-preserving step is one length-preserving conjugation");
            }
            if eta_len(g, x) != eta_len(g, y) {
                return invalid("ℓ(η) differs at the endpoints");
            }
        }
        StepKind::DropLeft { node } | StepKind::DropRight { node } => {
            if node == 0 || node > g.rank() || step.path.len() != 2 {
                return invalid("drop steps use one finite simple reflection");
            }
            let s = g.s(node);
            let expected = match step.kind {
                StepKind::DropLeft { .. } => g.mul(s, x),
                _ => g.mul(x, s),
            };
            if &expected != y {
                return invalid("target is not sx (resp. xs)");
            }
            if g.length(&g.conj_simple(node, x)) >= g.length(x) {
                return invalid("ℓ(sxs) < ℓ(x) fails");
            }
            if eta_len(g, y) + 1 != eta_len(g, x) {
                return invalid("ℓ(η) does not drop by exactly one");
            }
        }
        StepKind::Construction => {
            if step.path.len() != 2 {
                return invalid("a construction step has no intermediate elements");
            }
            let c = construct_a_t_gamma(g, x)?;
            if !c.claims.all() {
                return invalid(format!("construction claims fail: {:?}", c.claims));
            }
            if &c.target(g) != y {
                return invalid("target is not a t^γ");
            }
        }
    }
    Ok(())
}

/// A validated chain of steps certifying `start => end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImpliesWitness {
    start: AffineElt,
    steps: Vec<Step>,
}

impl ImpliesWitness {
    pub fn trivial(x: &AffineElt) -> Self {
        Self {
            start: x.clone(),
            steps: Vec::new(),
        }
    }

    pub fn start(&self) -> &AffineElt {
        &self.start
    }

    pub fn end(&self) -> &AffineElt {
        self.steps.last().map_or(&self.start, |s| s.target())
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn push(&mut self, g: &AffineWeylGroup, step: Step) -> Result<()> {
        if step.source() != self.end() {
            return invalid("step does not start where the chain ends");
        }
        validate_step(g, &step)?;
        self.steps.push(step);
        Ok(())
    }

    /// Transitivity: `x => y` and `y => z` give `x => z`.
    pub fn compose(mut self, g: &AffineWeylGroup, other: ImpliesWitness) -> Result<Self> {
        if other.start != *self.end() {
            return invalid("chains do not meet");
        }
        for step in other.steps {
            self.push(g, step)?;
        }
        Ok(self)
    }

    /// Revalidates every step.
    pub fn validate(&self, g: &AffineWeylGroup) -> Result<()> {
        let mut at = &self.start;
        for step in &self.steps {
            if step.source() != at {
                return invalid("chain is broken");
            }
            validate_step(g, step)?;
            at = step.target();
        }
        Ok(())
    }

    pub fn to_json(&self, g: &AffineWeylGroup) -> Value {
        json!({
            "start": g.format(&self.start),
            "end": g.format(self.end()),
            "steps": self.steps.iter().map(|s| json!({
                "rule": s.kind,
                "path": s.path.iter().map(|x| g.format(x)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `x => x'` when `x'` is one `~>` move from `x` with `ℓ(η)` unchanged.
pub fn implies_by_conjugation(g: &AffineWeylGroup, x: &AffineElt, x2: &AffineElt) -> Option<ImpliesWitness> {
    if x == x2 {
        return Some(ImpliesWitness::trivial(x));
    }
    let mut w = ImpliesWitness::trivial(x);
    w.push(
        g,
        Step {
            kind: StepKind::Conjugation,
            path: vec![x.clone(), x2.clone()],
        },
    )
    .ok()?;
    Some(w)
}

/// `x => sx` (left) or `x => xs` (right) for a finite simple reflection `s`.
pub fn implies_by_drop(
    g: &AffineWeylGroup,
    x: &AffineElt,
    s: usize,
    side: Side,
) -> Result<ImpliesWitness> {
    if s == 0 || s > g.rank() {
        return Err(Error::Precondition(format!("s{s} is not a finite simple reflection")));
    }
    if g.length(&g.conj_simple(s, x)) >= g.length(x) {
        return Err(Error::Precondition("ℓ(sxs) < ℓ(x) fails".into()));
    }
    let (kind, y) = match side {
        Side::Left => (StepKind::DropLeft { node: s }, g.mul(g.s(s), x)),
        Side::Right => (StepKind::DropRight { node: s }, g.mul(x, g.s(s))),
    };
    let mut w = ImpliesWitness::trivial(x);
    w.push(
        g,
        Step {
            kind,
            path: vec![x.clone(), y],
        },
    )?;
    Ok(w)
}

/// `w_0 t^μ => v t^μ w` for `w ∈ ^{I(μ)}W`, when `v = w_0` or `μ` is regular.
pub fn witness_from_longest(
    g: &AffineWeylGroup,
    mu: &Coweight,
    v: &WeylElt,
    w: &WeylElt,
    budget: usize,
) -> Result<ImpliesWitness> {
    let weyl = g.weyl();
    let walls = g.root_system().wall_set(mu)?;
    if !weyl.is_min_coset_rep(w, walls, Side::Left) {
        return Err(Error::Precondition("w is not minimal in W_{I(μ)} w".into()));
    }
    let w0 = weyl.longest();
    let base = g.mul(&g.from_finite(&w0), &g.translation(mu));
    let right_chain = |tail: &WeylElt| -> Result<ImpliesWitness> {
        let mut chain = ImpliesWitness::trivial(&base);
        for i in weyl.reduced_word(tail) {
            let next = implies_by_drop(g, chain.end(), i, Side::Right)?;
            chain = chain.compose(g, next)?;
        }
        Ok(chain)
    };
    if *v == w0 {
        return right_chain(w);
    }
    if !mu.is_regular_dominant() {
        return Err(Error::Precondition("needs v = w0 or μ regular".into()));
    }
    let tail = w.mul(v).mul(&w0);
    let chain = right_chain(&tail)?;
    let target = g.mul(
        &g.mul(&g.from_finite(v), &g.translation(mu)),
        &g.from_finite(w),
    );
    let path = tilde_path(g, chain.end(), |y| *y == target, budget)?
        .ok_or_else(|| Error::InvalidWitness("no ~> path to v t^μ w".into()))?;
    let mut last = ImpliesWitness::trivial(chain.end());
    if path.len() > 1 {
        last.push(g, Step { kind: StepKind::Conjugation, path })?;
    }
    chain.compose(g, last)
}

/// Outcome of the claims verified by [`construct_a_t_gamma`].
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionClaims {
    /// `ℓ(w'y) = ℓ(w') - ℓ(y)`.
    pub a: bool,
    /// `x = x_1 x_2` and `ℓ(x) = ℓ(x_1) + ℓ(x_2)`.
    pub b: bool,
    pub supp_a_full: bool,
    /// `ℓ(a t^γ) = ℓ(a) + ℓ(t^γ)`.
    pub length_additive: bool,
    /// `d(x) - d(a t^γ) = (ℓ(x) + ℓ(wv) - ℓ(t^γ))/2 - ℓ(a)`.
    pub dimension_gap: bool,
}

impl ConstructionClaims {
    pub fn all(&self) -> bool {
        self.a && self.b && self.supp_a_full && self.length_additive && self.dimension_gap
    }
}

/// Intermediate data of the reduction `x => a t^γ` for shrunken `x` with
/// `supp(η(x)) = S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub v: WeylElt,
    pub mu: Coweight,
    pub w: WeylElt,
    /// Left descents of `w`.
    pub j: NodeSet,
    /// `I(μ - ρ^∨_J)`.
    pub j_prime: NodeSet,
    /// `v = v' w^0_{J'}`.
    pub v_prime: WeylElt,
    /// `wv = w' z` with `w' ∈ W^{J'}`, `z ∈ W_{J'}`.
    pub w_prime: WeylElt,
    pub z: WeylElt,
    /// `μ - ρ^∨_J + w'^{-1} ρ^∨_J = y γ`, `y ∈ W^{I(γ)}`.
    pub y: WeylElt,
    pub gamma: Coweight,
    /// `(y^{-1} z) * (w' y)`.
    pub a: WeylElt,
    pub x1: AffineElt,
    pub x2: AffineElt,
    pub claims: ConstructionClaims,
}

impl Construction {
    /// `a t^γ`.
    pub fn target(&self, g: &AffineWeylGroup) -> AffineElt {
        g.mul(&g.from_finite(&self.a), &g.translation(&self.gamma))
    }
}

pub fn construct_a_t_gamma(g: &AffineWeylGroup, x: &AffineElt) -> Result<Construction> {
    let weyl = g.weyl();
    let rs = g.root_system();
    if !g.is_shrunken(x) {
        return Err(Error::Precondition("x is not in the shrunken chambers".into()));
    }
    let eta = g.eta(x);
    if weyl.support(&eta) != rs.finite_nodes() {
        return Err(Error::Precondition("supp(η(x)) is not S".into()));
    }
    let d = g.canonical_decomposition(x);
    let (v, mu, w) = (d.v, d.mu, d.w);
    let j = weyl.left_descents(&w);
    let rho_j = rs.rho_check(j);
    let mu_j = &mu - &rho_j;
    let j_prime = rs.wall_set(&mu_j)?;
    let v_prime = v.mul(&weyl.longest_element(j_prime));
    let (w_prime, z) = weyl.coset_decompose(&w.mul(&v), j_prime, Side::Right);
    let gamma_prime = &mu_j + &weyl.act_cw(&w_prime.inverse(), &rho_j);
    let (gamma, y0) = weyl.to_dominant(&gamma_prime);
    let (y, _) = weyl.coset_decompose(&y0, rs.wall_set(&gamma)?, Side::Right);
    let yinv = y.inverse();
    let a = weyl.star(&yinv.mul(&z), &w_prime.mul(&y));

    let x1 = g.mul(
        &g.mul(&g.from_finite(&v.mul(&z.inverse())), &g.translation(&mu_j)),
        &g.from_finite(&y),
    );
    let x2 = g.mul(
        &g.mul(&g.from_finite(&yinv.mul(&z)), &g.translation(&rho_j)),
        &g.from_finite(&w),
    );
    let len = |e: &WeylElt| weyl.length(e) as i64;
    let t_gamma = g.length(&g.translation(&gamma)) as i64;
    let at = g.mul(&g.from_finite(&a), &g.translation(&gamma));
    let lx = g.length(x) as i64;
    let gap_twice = (g.virtual_dim(x, 0) - g.virtual_dim(&at, 0)).twice();
    let claims = ConstructionClaims {
        a: len(&w_prime.mul(&y)) == len(&w_prime) - len(&y),
        b: g.mul(&x1, &x2) == *x && lx == (g.length(&x1) + g.length(&x2)) as i64,
        supp_a_full: weyl.support(&a) == rs.finite_nodes(),
        length_additive: g.length(&at) as i64 == len(&a) + t_gamma,
        dimension_gap: gap_twice == lx + len(&w.mul(&v)) - t_gamma - 2 * len(&a),
    };
    Ok(Construction {
        v,
        mu,
        w,
        j,
        j_prime,
        v_prime,
        w_prime,
        z,
        y,
        gamma,
        a,
        x1,
        x2,
        claims,
    })
}

/// `x => a t^γ` as a one-step witness.
pub fn a_t_gamma_witness(g: &AffineWeylGroup, x: &AffineElt) -> Result<(Construction, ImpliesWitness)> {
    let c = construct_a_t_gamma(g, x)?;
    let mut w = ImpliesWitness::trivial(x);
    w.push(
        g,
        Step {
            kind: StepKind::Construction,
            path: vec![x.clone(), c.target(g)],
        },
    )?;
    Ok((c, w))
}

/// Result of the search for `a t^μ => t^{μ'} c` with `c` a Coxeter element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterChain {
    pub witness: ImpliesWitness,
    pub c: WeylElt,
    pub mu: Coweight,
    /// Every Coxeter element met as the finite part of a goal, sorted.
    pub all_c: Vec<WeylElt>,
}

/// Single `=>` steps out of `x`, in a fixed order.
fn implies_moves(g: &AffineWeylGroup, x: &AffineElt) -> Vec<Step> {
    let n = g.rank();
    let lx = g.length(x);
    let ex = eta_len(g, x);
    let mut out = Vec::new();
    for s in 1..=n {
        if g.length(&g.conj_simple(s, x)) >= lx {
            continue;
        }
        for (kind, y) in [
            (StepKind::DropLeft { node: s }, g.mul(g.s(s), x)),
            (StepKind::DropRight { node: s }, g.mul(x, g.s(s))),
        ] {
            if eta_len(g, &y) + 1 == ex {
                out.push(Step {
                    kind,
                    path: vec![x.clone(), y],
                });
            }
        }
    }
    for (_, y) in tilde_moves(g, x) {
        if eta_len(g, &y) != ex {
            continue;
        }
        let kind = if g.length(&y) == lx {
            StepKind::LengthPreserving
        } else {
            StepKind::Conjugation
        };
        out.push(Step {
            kind,
            path: vec![x.clone(), y],
        });
    }
    out
}

fn is_coxeter_goal(g: &AffineWeylGroup, y: &AffineElt) -> bool {
    y.transl().is_dominant() && g.weyl().is_coxeter(y.finite())
}

/// Breadth-first search over rule-checked steps from `x` to some
/// `t^{μ'} c` with `μ'` dominant and `c` Coxeter. Goals with `μ' = mu` are
/// preferred; among those the first found is reported.
pub fn coxeter_chain_search(
    g: &AffineWeylGroup,
    x: &AffineElt,
    mu: &Coweight,
    budget: usize,
) -> Result<CoxeterChain> {
    let mut parent: HashMap<AffineElt, Option<Step>> = HashMap::from([(x.clone(), None)]);
    let mut order = vec![x.clone()];
    let mut head = 0;
    let mut exhausted = false;
    while head < order.len() {
        let cur = order[head].clone();
        head += 1;
        for step in implies_moves(g, &cur) {
            let y = step.target().clone();
            if parent.contains_key(&y) {
                continue;
            }
            if parent.len() >= budget {
                exhausted = true;
                break;
            }
            parent.insert(y.clone(), Some(step));
            order.push(y);
        }
    }
    let goals: Vec<&AffineElt> = order.iter().filter(|y| is_coxeter_goal(g, y)).collect();
    let chosen = goals
        .iter()
        .find(|y| y.transl() == mu)
        .or_else(|| goals.first())
        .copied();
    let Some(goal) = chosen else {
        return Err(if exhausted {
            Error::BudgetExhausted(budget)
        } else {
            Error::InvalidWitness("no chain to t^μ c with c Coxeter".into())
        });
    };
    let mut steps = Vec::new();
    let mut at = goal.clone();
    while let Some(Some(step)) = parent.get(&at) {
        at = step.source().clone();
        steps.push(step.clone());
    }
    steps.reverse();
    let mut witness = ImpliesWitness::trivial(x);
    for step in steps {
        witness.push(g, step)?;
    }
    let mut all_c: Vec<WeylElt> = goals.iter().map(|y| y.finite().clone()).collect();
    all_c.sort_by_key(|c| g.weyl().reduced_word(c));
    all_c.dedup();
    Ok(CoxeterChain {
        witness,
        c: goal.finite().clone(),
        mu: goal.transl().clone(),
        all_c,
    })
}

/// `a t^μ => t^μ c` for `supp(a) = S`, `μ != 0` dominant.
pub fn coxeter_chain_from(
    g: &AffineWeylGroup,
    a: &WeylElt,
    mu: &Coweight,
    budget: usize,
) -> Result<CoxeterChain> {
    if g.weyl().support(a) != g.root_system().finite_nodes() {
        return Err(Error::Precondition("supp(a) is not S".into()));
    }
    if !mu.is_dominant() || mu.is_zero() {
        return Err(Error::Precondition("μ must be dominant and nonzero".into()));
    }
    let x = g.mul(&g.from_finite(a), &g.translation(mu));
    coxeter_chain_search(g, &x, mu, budget)
}

/// `x => η(x)` for `η(x)` Coxeter, as one conjugation step along a `~>` path.
pub fn coxeter_eta_witness(g: &AffineWeylGroup, x: &AffineElt, budget: usize) -> Result<ImpliesWitness> {
    let eta = g.eta(x);
    if !g.weyl().is_coxeter(&eta) {
        return Err(Error::Precondition("η(x) is not a Coxeter element".into()));
    }
    let target = g.from_finite(&eta);
    let path = tilde_path(g, x, |y| *y == target, budget)?
        .ok_or_else(|| Error::InvalidWitness("x does not reach η(x) under ~>".into()))?;
    let mut w = ImpliesWitness::trivial(x);
    if path.len() > 1 {
        w.push(g, Step { kind: StepKind::Conjugation, path })?;
    }
    Ok(w)
}
