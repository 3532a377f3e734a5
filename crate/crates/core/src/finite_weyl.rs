//! The finite Weyl group `W`, with elements stored as permutations of the root
//! set.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::root_system::{Coweight, NodeSet, Root, RootIdx, RootSystem};

/// An element of `W`, given by its action on the indexed root set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    images: Box<[u16]>,
}

impl WeylElt {
    fn identity(num_roots: usize) -> Self {
        WeylElt {
            images: (0..num_roots as u16).collect(),
        }
    }

    /// Image of root index `k`.
    pub fn image(&self, k: RootIdx) -> RootIdx {
        self.images[k] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    /// Composition `self * other`, acting as `other` first.
    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        WeylElt {
            images: other.images.iter().map(|&k| self.images[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElt {
        let mut images = vec![0u16; self.images.len()].into_boxed_slice();
        for (k, &v) in self.images.iter().enumerate() {
            images[v as usize] = k as u16;
        }
        WeylElt { images }
    }

    pub fn conjugate_by(&self, g: &WeylElt) -> WeylElt {
        g.mul(self).mul(&g.inverse())
    }
}

/// Which side a coset or multiplication is taken on.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// The finite Weyl group of a root system.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    simple: Vec<WeylElt>,
    identity: WeylElt,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Self {
        let identity = WeylElt::identity(rs.num_roots());
        let simple = (1..=rs.rank())
            .map(|i| rs_reflection(&rs, rs.simple_idx(i)))
            .collect();
        Self {
            rs,
            simple,
            identity,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn identity(&self) -> WeylElt {
        self.identity.clone()
    }

    /// The simple reflection `s_i`, `1 <= i <= rank`.
    pub fn s(&self, i: usize) -> &WeylElt {
        &self.simple[i - 1]
    }

    /// The reflection in root `k`.
    pub fn reflection(&self, k: RootIdx) -> WeylElt {
        rs_reflection(&self.rs, k)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut w = self.identity();
        for &i in word {
            if i == 0 || i > self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: self.rank(),
                });
            }
            w = w.mul(self.s(i));
        }
        Ok(w)
    }

    pub fn act(&self, u: &WeylElt, root: &Root) -> Root {
        let k = self.rs.root_index(root).expect("not a root of this system");
        self.rs.root(u.image(k)).clone()
    }

    pub fn act_cw(&self, u: &WeylElt, lambda: &Coweight) -> Coweight {
        // <u lambda, alpha_i> = <lambda, u^{-1} alpha_i>
        let inv = u.inverse();
        Coweight(
            (1..=self.rank())
                .map(|i| self.rs.pairing_idx(lambda, inv.image(self.rs.simple_idx(i))))
                .collect(),
        )
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, u: &WeylElt) -> usize {
        let n = self.rs.num_positive();
        u.images[..n].iter().filter(|&&k| k as usize >= n).count()
    }

    /// `s_i u < u`.
    pub fn is_left_descent(&self, u: &WeylElt, i: usize) -> bool {
        let inv = u.inverse();
        !self.rs.is_positive_idx(inv.image(self.rs.simple_idx(i)))
    }

    /// `u s_i < u`.
    pub fn is_right_descent(&self, u: &WeylElt, i: usize) -> bool {
        !self.rs.is_positive_idx(u.image(self.rs.simple_idx(i)))
    }

    pub fn left_descents(&self, u: &WeylElt) -> NodeSet {
        let inv = u.inverse();
        (1..=self.rank())
            .filter(|&i| !self.rs.is_positive_idx(inv.image(self.rs.simple_idx(i))))
            .collect()
    }

    pub fn right_descents(&self, u: &WeylElt) -> NodeSet {
        (1..=self.rank())
            .filter(|&i| self.is_right_descent(u, i))
            .collect()
    }

    /// The lexicographically smallest reduced word, by greedy removal of the
    /// smallest left descent.
    pub fn reduced_word(&self, u: &WeylElt) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(u));
        let mut cur = u.clone();
        'outer: loop {
            for i in 1..=self.rank() {
                if self.is_left_descent(&cur, i) {
                    word.push(i);
                    cur = self.s(i).mul(&cur);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(cur.is_identity());
        word
    }

    pub fn support(&self, u: &WeylElt) -> NodeSet {
        self.reduced_word(u).into_iter().collect()
    }

    /// Bruhat order, by the lifting property on right descents.
    pub fn bruhat_leq(&self, u: &WeylElt, v: &WeylElt) -> bool {
        let (mut u, mut v) = (u.clone(), v.clone());
        loop {
            let (lu, lv) = (self.length(&u), self.length(&v));
            if lu > lv {
                return false;
            }
            if lv == 0 {
                return u.is_identity();
            }
            let s = (1..=self.rank())
                .find(|&i| self.is_right_descent(&v, i))
                .expect("nontrivial element has a descent");
            if self.is_right_descent(&u, s) {
                u = u.mul(self.s(s));
            }
            v = v.mul(self.s(s));
        }
    }

    /// Splits `u` along the parabolic subgroup `W_J`. Returns the minimal
    /// coset representative and the `W_J` part: `u = u^J * u_J` on the right,
    /// `u = u_J * ^J u` on the left.
    pub fn coset_decompose(&self, u: &WeylElt, nodes: NodeSet, side: Side) -> (WeylElt, WeylElt) {
        let mut rep = u.clone();
        let mut part = self.identity();
        'outer: loop {
            for j in nodes.iter() {
                let descent = match side {
                    Side::Right => self.is_right_descent(&rep, j),
                    Side::Left => self.is_left_descent(&rep, j),
                };
                if descent {
                    match side {
                        Side::Right => {
                            rep = rep.mul(self.s(j));
                            part = self.s(j).mul(&part);
                        }
                        Side::Left => {
                            rep = self.s(j).mul(&rep);
                            part = part.mul(self.s(j));
                        }
                    }
                    continue 'outer;
                }
            }
            return (rep, part);
        }
    }

    pub fn is_min_coset_rep(&self, u: &WeylElt, nodes: NodeSet, side: Side) -> bool {
        nodes.iter().all(|j| match side {
            Side::Right => !self.is_right_descent(u, j),
            Side::Left => !self.is_left_descent(u, j),
        })
    }

    /// The longest element `w^0_J` of `W_J`.
    pub fn longest_element(&self, nodes: NodeSet) -> WeylElt {
        let mut w = self.identity();
        'outer: loop {
            for j in nodes.iter() {
                if !self.is_right_descent(&w, j) {
                    w = w.mul(self.s(j));
                    continue 'outer;
                }
            }
            return w;
        }
    }

    pub fn longest(&self) -> WeylElt {
        self.longest_element(self.rs.finite_nodes())
    }

    /// Every simple reflection occurs exactly once in a reduced word.
    pub fn is_coxeter(&self, u: &WeylElt) -> bool {
        self.length(u) == self.rank() && self.support(u) == self.rs.finite_nodes()
    }

    /// Coxeter element of the parabolic subgroup `W_J`.
    pub fn is_coxeter_in(&self, u: &WeylElt, nodes: NodeSet) -> bool {
        self.length(u) == nodes.len() && self.support(u) == nodes
    }

    /// The conjugacy class of `u`, sorted.
    pub fn conjugacy_class(&self, u: &WeylElt) -> Vec<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::from([u.clone()]);
        let mut queue = VecDeque::from([u.clone()]);
        while let Some(x) = queue.pop_front() {
            for s in &self.simple {
                let y = s.mul(&x).mul(s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut class: Vec<_> = seen.into_iter().collect();
        class.sort_by_key(|w| (self.length(w), self.reduced_word(w)));
        class
    }

    /// No conjugate of `u` lies in a proper standard parabolic subgroup.
    pub fn is_cuspidal(&self, u: &WeylElt) -> bool {
        let full = self.rs.finite_nodes();
        self.conjugacy_class(u)
            .iter()
            .all(|w| self.support(w) == full)
    }

    /// All elements, sorted by length and then canonical word.
    pub fn elements(&self) -> Vec<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for s in &self.simple {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().collect();
        all.sort_by_key(|w| (self.length(w), self.reduced_word(w)));
        all
    }

    /// Elements of the parabolic subgroup `W_J`.
    pub fn parabolic_elements(&self, nodes: NodeSet) -> Vec<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for j in nodes.iter() {
                let y = x.mul(self.s(j));
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut all: Vec<_> = seen.into_iter().collect();
        all.sort_by_key(|w| (self.length(w), self.reduced_word(w)));
        all
    }

    /// Demazure product, folding `u` along a reduced word of `v`.
    pub fn star(&self, u: &WeylElt, v: &WeylElt) -> WeylElt {
        self.reduced_word(v).into_iter().fold(u.clone(), |acc, i| {
            if self.is_right_descent(&acc, i) {
                acc
            } else {
                acc.mul(self.s(i))
            }
        })
    }

    /// Dominant representative of the orbit of `lambda`, with `v` such that
    /// `v(mu) = lambda`.
    pub fn to_dominant(&self, lambda: &Coweight) -> (Coweight, WeylElt) {
        let mut cur = lambda.clone();
        let mut v = self.identity();
        'outer: loop {
            for i in 1..=self.rank() {
                if cur.0[i - 1] < 0 {
                    cur = self.rs.reflect_coweight(self.rs.simple_idx(i), &cur);
                    v = v.mul(self.s(i));
                    continue 'outer;
                }
            }
            return (cur, v);
        }
    }

    /// Formats an element as a space separated word, `e` for the identity.
    pub fn format(&self, u: &WeylElt) -> String {
        format_word(&self.reduced_word(u))
    }

    pub fn parse(&self, text: &str) -> Result<WeylElt> {
        crate::parse::parse_finite(self, text)
    }
}

fn rs_reflection(rs: &RootSystem, beta: RootIdx) -> WeylElt {
    WeylElt {
        images: (0..rs.num_roots())
            .map(|k| rs.reflect_root(beta, k) as u16)
            .collect(),
    }
}

pub(crate) fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> WeylGroup {
        WeylGroup::new(RootSystem::build(t.parse().unwrap()))
    }

    fn w(g: &WeylGroup, word: &[usize]) -> WeylElt {
        g.from_word(word).unwrap()
    }

    #[test]
    fn simple_reflection_action() {
        let g = group("A2");
        let rs = g.root_system();
        assert_eq!(g.act(g.s(1), &rs.simple_root(1)), -rs.simple_root(1));
        assert_eq!(g.act(g.s(1), &rs.simple_root(2)), Root(vec![1, 1]));
        let u = w(&g, &[1, 2]);
        assert_eq!(g.identity().mul(&u), u);
    }

    #[test]
    fn group_orders() {
        assert_eq!(group("A2").elements().len(), 6);
        assert_eq!(group("A3").elements().len(), 24);
        assert_eq!(group("B2").elements().len(), 8);
        assert_eq!(group("B3").elements().len(), 48);
        assert_eq!(group("G2").elements().len(), 12);
        assert_eq!(group("D4").elements().len(), 192);
    }

    #[test]
    fn lengths() {
        let g = group("A2");
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&g.longest()), 3);
        let a3 = group("A3");
        assert_eq!(a3.length(&w(&a3, &[1, 2, 3, 2])), 4);
        assert_eq!(a3.reduced_word(&w(&a3, &[2, 1, 2])), vec![1, 2, 1]);
    }

    #[test]
    fn supports() {
        let g = group("A3");
        assert_eq!(g.support(&g.identity()), NodeSet::EMPTY);
        assert_eq!(g.support(&w(&g, &[1, 3])), NodeSet(0b1010));
        assert_eq!(g.support(&w(&g, &[1, 2, 3, 2, 1, 2])), g.root_system().finite_nodes());
        // s1 s1 cancels
        assert_eq!(g.support(&w(&g, &[1, 2, 1, 1])), NodeSet(0b0110));
    }

    #[test]
    fn bruhat_examples() {
        let g = group("A2");
        for v in g.elements() {
            assert!(g.bruhat_leq(&g.identity(), &v));
        }
        assert!(g.bruhat_leq(&w(&g, &[1]), &w(&g, &[2, 1])));
        assert!(!g.bruhat_leq(&w(&g, &[1, 2]), &w(&g, &[2, 1])));
    }

    #[test]
    fn coset_examples() {
        let g = group("A2");
        let s1 = w(&g, &[1]);
        let j1 = NodeSet::singleton(1);
        assert_eq!(g.coset_decompose(&s1, j1, Side::Right), (g.identity(), s1.clone()));
        assert_eq!(g.coset_decompose(&s1, j1, Side::Left), (g.identity(), s1.clone()));
        // s2 s1 W_{2}: {s2 s1, s2 s1 s2}; the shorter is s2 s1.
        let u = w(&g, &[2, 1]);
        let (rep, part) = g.coset_decompose(&u, NodeSet::singleton(2), Side::Right);
        assert_eq!(rep, u);
        assert!(part.is_identity());
        let (rep, part) = g.coset_decompose(&u, NodeSet::singleton(2), Side::Left);
        assert_eq!(rep, s1);
        assert_eq!(part, w(&g, &[2]));
    }

    #[test]
    fn longest_elements() {
        let g = group("A2");
        assert!(g.longest_element(NodeSet::EMPTY).is_identity());
        assert_eq!(g.longest_element(NodeSet::singleton(1)), w(&g, &[1]));
        assert_eq!(g.longest(), w(&g, &[1, 2, 1]));
        let b3 = group("B3");
        let w0 = b3.longest();
        assert_eq!(b3.length(&w0), 9);
        assert!(w0.mul(&w0).is_identity());
    }

    #[test]
    fn coxeter_and_cuspidal() {
        let g = group("A2");
        assert!(!g.is_coxeter(&g.identity()));
        assert!(!g.is_cuspidal(&g.identity()));
        let c = w(&g, &[1, 2]);
        assert!(g.is_coxeter(&c));
        assert!(g.is_cuspidal(&c));
        assert!(!g.is_cuspidal(&w(&g, &[1])));
        assert!(!g.is_coxeter(&g.longest()));
        // w0 in A2 is a reflection, conjugate to s1
        assert!(!g.is_cuspidal(&g.longest()));
        // w0 = -1 in B2 is cuspidal but not Coxeter
        let b2 = group("B2");
        assert!(b2.is_cuspidal(&b2.longest()));
        assert!(!b2.is_coxeter(&b2.longest()));
    }

    #[test]
    fn act_cw_is_linear_action() {
        let g = group("B3");
        let lambda = Coweight(vec![2, -1, 3]);
        for u in g.elements().iter().step_by(5) {
            for v in g.elements().iter().step_by(7) {
                assert_eq!(
                    g.act_cw(&u.mul(v), &lambda),
                    g.act_cw(u, &g.act_cw(v, &lambda))
                );
            }
            // pairing invariance
            for k in 0..g.root_system().num_roots() {
                let rs = g.root_system();
                assert_eq!(
                    rs.pairing_idx(&g.act_cw(u, &lambda), u.image(k)),
                    rs.pairing_idx(&lambda, k)
                );
            }
        }
    }

    #[test]
    fn to_dominant_examples() {
        let g = group("A2");
        let (mu, v) = g.to_dominant(&Coweight(vec![-1, 0]));
        assert_eq!(mu, Coweight(vec![0, 1]));
        assert_eq!(g.act_cw(&v, &mu), Coweight(vec![-1, 0]));
    }

    #[test]
    fn demazure_examples() {
        let g = group("A2");
        let s1 = w(&g, &[1]);
        assert_eq!(g.star(&s1, &s1), s1);
        assert_eq!(g.star(&w(&g, &[1, 2]), &w(&g, &[2, 1])), g.longest());
        assert_eq!(g.star(&g.identity(), &s1), s1);
    }

    #[test]
    fn format_and_parse() {
        let g = group("A3");
        let u = w(&g, &[3, 2, 1]);
        assert_eq!(g.format(&u), "s3 s2 s1");
        assert_eq!(g.format(&g.identity()), "e");
        assert_eq!(g.parse("s3*s2*s1").unwrap(), u);
    }
}
