//! The extended affine Weyl group `W~ = W ⋉ Y` of an adjoint group.
//!
//! Elements are stored as `t^λ w`, translation first, so that
//! `t^λ w · t^μ v = t^{λ + w(μ)} wv` and `w t^μ = t^{w(μ)} w`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite_weyl::{format_word, Side, WeylElt, WeylGroup};
use crate::halfint::HalfInt;
use crate::root_system::{CartanType, Coweight, NodeSet, RootIdx, RootSystem};

/// `t^transl · finite`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElt {
    transl: Coweight,
    finite: WeylElt,
}

impl AffineElt {
    pub fn new(transl: Coweight, finite: WeylElt) -> Self {
        Self { transl, finite }
    }

    pub fn transl(&self) -> &Coweight {
        &self.transl
    }

    pub fn finite(&self) -> &WeylElt {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.transl.is_zero() && self.finite.is_identity()
    }
}

/// The affine function `y ↦ <y, root> + level`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub root: RootIdx,
    pub level: i64,
}

/// Which alcove is the base alcove. `(β, k)` is positive iff `k >= offset(β)`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Positivity {
    /// Base alcove in the dominant chamber: offset 0 on positive roots, 1 on
    /// negative roots.
    DominantAlcove,
    /// Base alcove in the antidominant chamber.
    AntidominantAlcove,
}

impl Positivity {
    fn offset(self, rs: &RootSystem, k: RootIdx) -> i64 {
        match self {
            Positivity::DominantAlcove => rs.delta(k),
            Positivity::AntidominantAlcove => 1 - rs.delta(k),
        }
    }
}

/// A class in `Y/X`, as residues modulo the nontrivial elementary divisors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Kappa(pub Vec<i64>);

impl Kappa {
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => write!(f, "0"),
            [c] => write!(f, "{c}"),
            cs => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// `x = v t^μ w` with `μ` dominant and `w` minimal in `W_{I(μ)} w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalDecomposition {
    pub v: WeylElt,
    pub mu: Coweight,
    pub w: WeylElt,
}

#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    weyl: WeylGroup,
    positivity: Positivity,
    kappa_rows: Vec<Vec<i64>>,
    kappa_moduli: Vec<i64>,
    /// Length-zero elements sorted by class; the identity comes first.
    omega: Vec<AffineElt>,
    /// `s_0, s_1, ..., s_n`.
    simple: Vec<AffineElt>,
}

impl AffineWeylGroup {
    pub fn new(cartan_type: CartanType) -> Self {
        Self::from_root_system(RootSystem::build(cartan_type))
    }

    pub fn from_root_system(rs: RootSystem) -> Self {
        let weyl = WeylGroup::new(rs);
        let rs = weyl.root_system();
        let theta = rs.highest_root_idx();
        let mut simple = vec![AffineElt::new(
            rs.highest_coroot().clone(),
            weyl.reflection(theta),
        )];
        for i in 1..=rs.rank() {
            simple.push(AffineElt::new(Coweight::zero(rs.rank()), weyl.s(i).clone()));
        }
        let (kappa_rows, kappa_moduli) = kappa_data(rs);
        let mut g = AffineWeylGroup {
            weyl,
            positivity: Positivity::DominantAlcove,
            kappa_rows,
            kappa_moduli,
            omega: Vec::new(),
            simple,
        };
        g.positivity = g.select_positivity();
        g.omega = g.find_omega();
        g
    }

    /// The positivity convention whose inversion count matches word length over
    /// `S~` on all elements of word length at most 3.
    fn select_positivity(&self) -> Positivity {
        let dist = self.word_length_ball(3);
        [Positivity::DominantAlcove, Positivity::AntidominantAlcove]
            .into_iter()
            .find(|&p| dist.iter().all(|(x, &d)| self.length_with(p, x) == d))
            .expect("no positivity convention matches word length")
    }

    /// Word lengths over `S~` of all elements of `W_a` up to `depth`, by BFS.
    pub fn word_length_ball(&self, depth: usize) -> HashMap<AffineElt, usize> {
        let mut dist = HashMap::from([(self.identity(), 0)]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == depth {
                continue;
            }
            for s in &self.simple {
                let y = self.mul(s, &x);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    fn find_omega(&self) -> Vec<AffineElt> {
        let rs = self.root_system();
        let n = rs.rank();
        let w0 = self.weyl.longest();
        let mut by_class: HashMap<Kappa, AffineElt> = HashMap::new();
        by_class.insert(self.kappa_of_coweight(&Coweight::zero(n)), self.identity());
        for i in (1..=n).filter(|&i| rs.highest_root_coefficient(i) == 1) {
            let lambda = rs.fundamental_coweights()[i - 1].clone();
            let mut rest = rs.finite_nodes();
            rest.remove(i);
            let w0j = self.weyl.longest_element(rest);
            let candidates = [w0j.mul(&w0), w0.mul(&w0j)];
            let tau = candidates
                .iter()
                .map(|w| AffineElt::new(lambda.clone(), w.clone()))
                .find(|x| self.length(x) == 0)
                .or_else(|| {
                    self.weyl
                        .elements()
                        .into_iter()
                        .map(|w| AffineElt::new(lambda.clone(), w))
                        .find(|x| self.length(x) == 0)
                })
                .expect("minuscule coweight has a length-zero lift");
            by_class.entry(self.kappa(&tau)).or_insert(tau);
        }
        let mut omega: Vec<(Kappa, AffineElt)> = by_class.into_iter().collect();
        omega.sort();
        let order: i64 = self.kappa_moduli.iter().product();
        assert_eq!(omega.len() as i64, order, "length-zero elements miss a class");
        omega.into_iter().map(|(_, x)| x).collect()
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn root_system(&self) -> &RootSystem {
        self.weyl.root_system()
    }

    pub fn cartan_type(&self) -> CartanType {
        self.root_system().cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.weyl.rank()
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    pub fn identity(&self) -> AffineElt {
        AffineElt::new(Coweight::zero(self.rank()), self.weyl.identity())
    }

    /// The affine simple reflection `s_i`, `0 <= i <= rank`.
    pub fn s(&self, i: usize) -> &AffineElt {
        &self.simple[i]
    }

    pub fn translation(&self, lambda: &Coweight) -> AffineElt {
        AffineElt::new(lambda.clone(), self.weyl.identity())
    }

    pub fn from_finite(&self, w: &WeylElt) -> AffineElt {
        AffineElt::new(Coweight::zero(self.rank()), w.clone())
    }

    /// Product of affine simple reflections.
    pub fn from_word(&self, word: &[usize]) -> Result<AffineElt> {
        let mut x = self.identity();
        for &i in word {
            if i > self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: self.rank(),
                });
            }
            x = self.mul(&x, self.s(i));
        }
        Ok(x)
    }

    pub fn mul(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        let moved = self.weyl.act_cw(&x.finite, &y.transl);
        AffineElt::new(&x.transl + &moved, x.finite.mul(&y.finite))
    }

    pub fn inverse(&self, x: &AffineElt) -> AffineElt {
        let inv = x.finite.inverse();
        AffineElt::new(-&self.weyl.act_cw(&inv, &x.transl), inv)
    }

    pub fn pow(&self, x: &AffineElt, k: i64) -> AffineElt {
        let base = if k < 0 { self.inverse(x) } else { x.clone() };
        (0..k.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(&acc, &base))
    }

    /// `g x g^{-1}`.
    pub fn conjugate(&self, g: &AffineElt, x: &AffineElt) -> AffineElt {
        self.mul(&self.mul(g, x), &self.inverse(g))
    }

    /// `s_i x s_i`.
    pub fn conj_simple(&self, i: usize, x: &AffineElt) -> AffineElt {
        let s = self.s(i);
        self.mul(&self.mul(s, x), s)
    }

    pub fn act_on_affine_root(&self, x: &AffineElt, a: AffineRoot) -> AffineRoot {
        let image = x.finite.image(a.root);
        AffineRoot {
            root: image,
            level: a.level - self.root_system().pairing_idx(&x.transl, image),
        }
    }

    pub fn is_positive_affine_root(&self, a: AffineRoot) -> bool {
        a.level >= self.positivity.offset(self.root_system(), a.root)
    }

    fn length_with(&self, p: Positivity, x: &AffineElt) -> usize {
        // Counting the affine roots (β, k) and (-β, -k) together gives
        // |<λ, wβ> + offset(wβ) - offset(β)| per positive β.
        let rs = self.root_system();
        (0..rs.num_positive())
            .map(|k| {
                let wk = x.finite.image(k);
                let c = rs.pairing_idx(&x.transl, wk) + p.offset(rs, wk) - p.offset(rs, k);
                c.unsigned_abs() as usize
            })
            .sum()
    }

    /// Number of positive affine roots sent to negative ones.
    pub fn length(&self, x: &AffineElt) -> usize {
        self.length_with(self.positivity, x)
    }

    pub fn kappa_of_coweight(&self, lambda: &Coweight) -> Kappa {
        Kappa(
            self.kappa_rows
                .iter()
                .zip(&self.kappa_moduli)
                .map(|(row, &d)| {
                    let c: i64 = row.iter().zip(&lambda.0).map(|(a, b)| a * b).sum();
                    c.rem_euclid(d)
                })
                .collect(),
        )
    }

    pub fn kappa(&self, x: &AffineElt) -> Kappa {
        self.kappa_of_coweight(&x.transl)
    }

    /// Orders of the cyclic factors of `Y/X`.
    pub fn kappa_moduli(&self) -> &[i64] {
        &self.kappa_moduli
    }

    pub fn is_in_affine_weyl(&self, x: &AffineElt) -> bool {
        self.kappa(x).is_trivial()
    }

    /// The length-zero elements, one per class in `Y/X`, identity first.
    pub fn omega_elements(&self) -> &[AffineElt] {
        &self.omega
    }

    pub fn omega_for_kappa(&self, kappa: &Kappa) -> &AffineElt {
        self.omega
            .iter()
            .find(|t| &self.kappa(t) == kappa)
            .expect("every class has a length-zero element")
    }

    /// The length-zero element in the class of `ω_j^∨`.
    pub fn omega_for_node(&self, j: usize) -> Result<&AffineElt> {
        if j == 0 || j > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: j,
                rank: self.rank(),
            });
        }
        let lambda = self.root_system().fundamental_coweights()[j - 1].clone();
        Ok(self.omega_for_kappa(&self.kappa_of_coweight(&lambda)))
    }

    /// Smallest node whose fundamental coweight is minuscule.
    pub fn default_omega_node(&self) -> Option<usize> {
        let rs = self.root_system();
        (1..=rs.rank()).find(|&i| rs.highest_root_coefficient(i) == 1)
    }

    /// Splits `x = x' τ` with `x' ∈ W_a` and `ℓ(τ) = 0`.
    pub fn split_omega(&self, x: &AffineElt) -> (AffineElt, AffineElt) {
        let tau = self.omega_for_kappa(&self.kappa(x)).clone();
        (self.mul(x, &self.inverse(&tau)), tau)
    }

    /// The permutation `π` of `S~` with `τ s_i τ^{-1} = s_{π(i)}`.
    pub fn omega_permutation(&self, tau: &AffineElt) -> Vec<usize> {
        (0..=self.rank())
            .map(|i| {
                let c = self.conjugate(tau, self.s(i));
                self.simple
                    .iter()
                    .position(|s| *s == c)
                    .expect("length-zero elements permute the simple reflections")
            })
            .collect()
    }

    /// `s_i x < x`.
    pub fn is_left_descent(&self, x: &AffineElt, i: usize) -> bool {
        self.length(&self.mul(self.s(i), x)) < self.length(x)
    }

    /// `x s_i < x`.
    pub fn is_right_descent(&self, x: &AffineElt, i: usize) -> bool {
        self.length(&self.mul(x, self.s(i))) < self.length(x)
    }

    /// Canonical word: `x = s_{i_1} ... s_{i_k} τ` with the lexicographically
    /// smallest reduced word. Returns the word and `τ`.
    pub fn reduced_word(&self, x: &AffineElt) -> (Vec<usize>, AffineElt) {
        let (mut cur, tau) = self.split_omega(x);
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len);
        'outer: while len > 0 {
            for i in 0..=self.rank() {
                let y = self.mul(self.s(i), &cur);
                let ly = self.length(&y);
                if ly < len {
                    word.push(i);
                    cur = y;
                    len = ly;
                    continue 'outer;
                }
            }
            unreachable!("element of positive length has a descent");
        }
        (word, tau)
    }

    /// Key for deterministic ordering: length, canonical word, class.
    pub fn sort_key(&self, x: &AffineElt) -> (usize, Vec<usize>, Kappa) {
        let (word, _) = self.reduced_word(x);
        (word.len(), word, self.kappa(x))
    }

    /// Simple affine reflections in a reduced word of the `W_a` part.
    pub fn support(&self, x: &AffineElt) -> NodeSet {
        self.reduced_word(x).0.into_iter().collect()
    }

    /// Bruhat order; elements in different classes are incomparable.
    pub fn bruhat_leq(&self, x: &AffineElt, y: &AffineElt) -> bool {
        if self.kappa(x) != self.kappa(y) {
            return false;
        }
        let (mut u, _) = self.split_omega(x);
        let (mut v, _) = self.split_omega(y);
        loop {
            let (lu, lv) = (self.length(&u), self.length(&v));
            if lu > lv {
                return false;
            }
            if lv == 0 {
                return lu == 0;
            }
            let s = (0..=self.rank())
                .find(|&i| self.is_right_descent(&v, i))
                .expect("element of positive length has a descent");
            if self.is_right_descent(&u, s) {
                u = self.mul(&u, self.s(s));
            }
            v = self.mul(&v, self.s(s));
        }
    }

    /// `x` is the minimal element of `x W_J` (right) or `W_J x` (left).
    pub fn min_length_in_coset(&self, x: &AffineElt, nodes: NodeSet, side: Side) -> bool {
        nodes.iter().all(|j| match side {
            Side::Right => !self.is_right_descent(x, j),
            Side::Left => !self.is_left_descent(x, j),
        })
    }

    pub fn canonical_decomposition(&self, x: &AffineElt) -> CanonicalDecomposition {
        let (mu, v0) = self.weyl.to_dominant(&x.transl);
        let walls = self
            .root_system()
            .wall_set(&mu)
            .expect("to_dominant returns a dominant coweight");
        let rest = v0.inverse().mul(&x.finite);
        let (w, z) = self.weyl.coset_decompose(&rest, walls, Side::Left);
        CanonicalDecomposition { v: v0.mul(&z), mu, w }
    }

    pub fn recompose(&self, d: &CanonicalDecomposition) -> AffineElt {
        AffineElt::new(self.weyl.act_cw(&d.v, &d.mu), d.v.mul(&d.w))
    }

    pub fn eta1(&self, x: &AffineElt) -> WeylElt {
        x.finite.clone()
    }

    pub fn eta2(&self, x: &AffineElt) -> WeylElt {
        self.canonical_decomposition(x).v
    }

    /// `η(x) = wv`.
    pub fn eta(&self, x: &AffineElt) -> WeylElt {
        let d = self.canonical_decomposition(x);
        d.w.mul(&d.v)
    }

    /// `η_2(x)` found directly as the unique `v` with `v^{-1} x` minimal in
    /// `W_S v^{-1} x`, by search over `W`.
    pub fn eta2_by_search(&self, x: &AffineElt) -> WeylElt {
        let full = self.root_system().finite_nodes();
        let mut hits = self.weyl.elements().into_iter().filter(|v| {
            let y = self.mul(&self.from_finite(&v.inverse()), x);
            self.min_length_in_coset(&y, full, Side::Left)
        });
        let v = hits.next().expect("every element has a dominant-chamber representative");
        debug_assert!(hits.next().is_none());
        v
    }

    /// Membership in the lowest two-sided cell (the shrunken Weyl chambers).
    pub fn is_shrunken(&self, x: &AffineElt) -> bool {
        let d = self.canonical_decomposition(x);
        self.shrunken_terms(&d).iter().all(|&c| c != 0)
    }

    /// `<μ, α_i> + δ(vα_i) - δ(w^{-1}α_i)` for each `i`.
    pub fn shrunken_terms(&self, d: &CanonicalDecomposition) -> Vec<i64> {
        let rs = self.root_system();
        let winv = d.w.inverse();
        (1..=rs.rank())
            .map(|i| {
                let a = rs.simple_idx(i);
                d.mu.0[i - 1] + rs.delta(d.v.image(a)) - rs.delta(winv.image(a))
            })
            .collect()
    }

    /// `d(x) = (ℓ(x) + ℓ(η(x)) - defect) / 2`.
    pub fn virtual_dim(&self, x: &AffineElt, defect: i64) -> HalfInt {
        let eta = self.eta(x);
        HalfInt::from_twice(
            self.length(x) as i64 + self.weyl.length(&eta) as i64 - defect,
        )
    }

    /// `t^λ` followed by the canonical word of the finite part.
    pub fn format(&self, x: &AffineElt) -> String {
        let fin = self.weyl.reduced_word(&x.finite);
        if x.transl.is_zero() {
            return format_word(&fin);
        }
        if fin.is_empty() {
            format!("t{}", x.transl)
        } else {
            format!("t{} {}", x.transl, format_word(&fin))
        }
    }

    /// The canonical decomposition written as `v t[μ] w`.
    pub fn format_decomposition(&self, x: &AffineElt) -> String {
        let d = self.canonical_decomposition(x);
        let mut parts = Vec::new();
        if !d.v.is_identity() {
            parts.push(self.weyl.format(&d.v));
        }
        parts.push(format!("t{}", d.mu));
        if !d.w.is_identity() {
            parts.push(self.weyl.format(&d.w));
        }
        parts.join(" ")
    }

    /// The canonical affine word followed by the length-zero part.
    pub fn format_word(&self, x: &AffineElt) -> String {
        let (word, tau) = self.reduced_word(x);
        let mut parts = Vec::new();
        if !word.is_empty() {
            parts.push(format_word(&word));
        }
        if !tau.is_identity() {
            parts.push(self.omega_name(&tau));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// `pi_j` for a nontrivial length-zero element, with `j` the smallest node
    /// in its class.
    pub fn omega_name(&self, tau: &AffineElt) -> String {
        if tau.is_identity() {
            return "e".to_string();
        }
        let kappa = self.kappa(tau);
        let rs = self.root_system();
        let j = (1..=rs.rank())
            .find(|&j| self.kappa_of_coweight(&rs.fundamental_coweights()[j - 1]) == kappa)
            .expect("each class contains a fundamental coweight");
        format!("pi_{j}")
    }

    pub fn parse(&self, text: &str) -> Result<AffineElt> {
        crate::parse::parse_affine(self, text)
    }
}

/// Rows of `U` and the elementary divisors `d > 1` from a diagonalisation
/// `U B V = diag(d)` of the matrix whose columns are the simple coroots.
fn kappa_data(rs: &RootSystem) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = rs.rank();
    let basis = rs.coroot_lattice_basis();
    let mut a: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| basis[j].0[i]).collect()).collect();
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    for t in 0..n {
        loop {
            let (pi, pj) = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs())
                .expect("coroot lattice has full rank");
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t] / p;
                for j in 0..n {
                    a[i][j] -= q * a[t][j];
                    u[i][j] -= q * u[t][j];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = a[t][j] / p;
                for row in a.iter_mut() {
                    row[j] -= q * row[t];
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
    }
    (0..n)
        .filter(|&t| a[t][t].abs() > 1)
        .map(|t| (u[t].clone(), a[t][t].abs()))
        .unzip()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn group(t: &str) -> AffineWeylGroup {
        AffineWeylGroup::new(t.parse().unwrap())
    }

    fn cw(c: &[i64]) -> Coweight {
        Coweight(c.to_vec())
    }

    #[test]
    fn chooses_dominant_base_alcove() {
        for t in ["A1", "A2", "B2", "G2", "C3"] {
            assert_eq!(group(t).positivity(), Positivity::DominantAlcove, "{t}");
        }
    }

    #[test]
    fn basic_lengths() {
        let g = group("A2");
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(g.s(0)), 1);
        assert_eq!(g.length(&g.translation(&cw(&[1, 1]))), 4);
        assert_eq!(g.length(&g.from_finite(&g.weyl().longest())), 3);
        let x = g.from_word(&[0, 1, 2, 0]).unwrap();
        assert_eq!(g.length(&x), 4);
    }

    #[test]
    fn arithmetic() {
        let g = group("A2");
        let x = g.from_word(&[0, 1, 2, 1, 0]).unwrap();
        assert_eq!(g.mul(&x, &g.identity()), x);
        assert!(g.mul(&x, &g.inverse(&x)).is_identity());
        let (a, b) = (cw(&[1, -2]), cw(&[3, 0]));
        assert_eq!(
            g.mul(&g.translation(&a), &g.translation(&b)),
            g.translation(&(&a + &b))
        );
        assert_eq!(g.s(0).finite(), &g.weyl().reflection(g.root_system().highest_root_idx()));
        assert_eq!(g.s(0).transl(), &cw(&[1, 1]));
        assert!(g.mul(g.s(0), g.s(0)).is_identity());
    }

    #[test]
    fn affine_root_action_is_a_group_action() {
        let g = group("B2");
        let x = g.from_word(&[0, 1, 2]).unwrap();
        let y = g.from_word(&[2, 0, 1, 0]).unwrap();
        let xy = g.mul(&x, &y);
        for k in 0..g.root_system().num_roots() {
            for level in -3..=3 {
                let a = AffineRoot { root: k, level };
                assert_eq!(
                    g.act_on_affine_root(&xy, a),
                    g.act_on_affine_root(&x, g.act_on_affine_root(&y, a))
                );
            }
        }
    }

    #[test]
    fn kappa_classes() {
        let a2 = group("A2");
        assert_eq!(a2.kappa_moduli(), &[3]);
        let k1 = a2.kappa_of_coweight(&cw(&[1, 0]));
        assert!(!k1.is_trivial());
        assert!(a2.kappa_of_coweight(&cw(&[3, 0])).is_trivial());
        assert!(a2.kappa(a2.s(0)).is_trivial());
        assert_eq!(group("A1").kappa_moduli(), &[2]);
        assert_eq!(group("B2").kappa_moduli(), &[2]);
        assert_eq!(group("D4").kappa_moduli(), &[2, 2]);
        assert_eq!(group("D5").kappa_moduli(), &[4]);
        assert!(group("G2").kappa_moduli().is_empty());
    }

    #[test]
    fn omega_counts() {
        assert_eq!(group("A1").omega_elements().len(), 2);
        assert_eq!(group("A2").omega_elements().len(), 3);
        assert_eq!(group("A3").omega_elements().len(), 4);
        assert_eq!(group("B2").omega_elements().len(), 2);
        assert_eq!(group("C3").omega_elements().len(), 2);
        assert_eq!(group("D4").omega_elements().len(), 4);
        assert_eq!(group("G2").omega_elements().len(), 1);
        for t in ["A3", "B3", "D4"] {
            let g = group(t);
            for tau in g.omega_elements() {
                assert_eq!(g.length(tau), 0);
                let perm = g.omega_permutation(tau);
                let mut sorted = perm.clone();
                sorted.sort();
                assert_eq!(sorted, (0..=g.rank()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let g = group("A2");
        let t = g.translation(&cw(&[2, 1]));
        let d = g.canonical_decomposition(&t);
        assert!(d.v.is_identity() && d.w.is_identity());
        assert_eq!(d.mu, cw(&[2, 1]));

        let d = g.canonical_decomposition(g.s(0));
        assert!(d.v.is_identity());
        assert_eq!(d.mu, cw(&[1, 1]));
        assert_eq!(d.w, g.weyl().longest());
        assert_eq!(&g.recompose(&d), g.s(0));
    }

    #[test]
    fn non_equidim_element() {
        let g = group("A3");
        let w = g.weyl();
        let v = w.from_word(&[1, 2]).unwrap();
        let ww = w.from_word(&[1, 2, 3, 2]).unwrap();
        let mu = cw(&[2, 2, 2]);
        let x = g.recompose(&CanonicalDecomposition {
            v: v.clone(),
            mu: mu.clone(),
            w: ww.clone(),
        });
        let d = g.canonical_decomposition(&x);
        assert_eq!((d.v, d.mu, d.w), (v, mu, ww));
        assert_eq!(g.eta(&x), w.from_word(&[1, 2, 3, 2, 1, 2]).unwrap());
        let sx = g.mul(g.s(1), &x);
        assert_eq!(g.eta(&sx), w.from_word(&[1, 2, 3]).unwrap());
    }

    #[test]
    fn shrunken_examples() {
        let g = group("A2");
        assert!(!g.is_shrunken(&g.identity()));
        assert!(g.is_shrunken(&g.translation(&cw(&[1, 2]))));
        // s0 = t^θ s_θ: terms 1 + 0 - 1 for both simple roots
        let d = g.canonical_decomposition(g.s(0));
        assert_eq!(g.shrunken_terms(&d), vec![0, 0]);
        assert!(!g.is_shrunken(g.s(0)));
    }

    #[test]
    fn cosets_and_eta2() {
        let g = group("A2");
        let full = g.root_system().finite_nodes();
        for n in 0..=2 {
            assert!(g.min_length_in_coset(&g.identity(), NodeSet::affine(2), Side::Left), "{n}");
        }
        assert!(!g.min_length_in_coset(g.s(1), full, Side::Left));
        let x = g.from_word(&[1, 0, 2, 1, 0]).unwrap();
        let d = g.canonical_decomposition(&x);
        let tw = g.mul(&g.translation(&d.mu), &g.from_finite(&d.w));
        assert!(g.min_length_in_coset(&tw, full, Side::Left));
        assert_eq!(g.eta2_by_search(&x), d.v);
    }

    #[test]
    fn virtual_dims() {
        let g = group("A2");
        assert_eq!(g.virtual_dim(&g.identity(), 0), HalfInt::ZERO);
        let mu = cw(&[1, 2]);
        let w0 = g.weyl().longest();
        let x = g.mul(&g.from_finite(&w0), &g.translation(&mu));
        let twice = g.length(&x) as i64 + 3;
        assert_eq!(g.virtual_dim(&x, 0).twice(), twice);
    }

    #[test]
    fn reduced_words_and_bruhat() {
        let g = group("A2");
        let x = g.from_word(&[2, 0, 1]).unwrap();
        let (word, tau) = g.reduced_word(&x);
        assert_eq!(g.from_word(&word).unwrap(), x);
        assert!(tau.is_identity());
        assert!(g.bruhat_leq(g.s(0), &x));
        assert!(!g.bruhat_leq(&x, g.s(0)));
        let pi = g.omega_for_node(1).unwrap().clone();
        let y = g.mul(&x, &pi);
        assert_eq!(g.length(&y), 3);
        assert_eq!(g.reduced_word(&y), (word, pi.clone()));
        assert!(!g.bruhat_leq(&x, &y));
        assert_eq!(g.format_word(&y), format!("{} pi_1", format_word(&g.reduced_word(&x).0)));
    }

    #[test]
    fn formatting() {
        let g = group("A2");
        assert_eq!(g.format(&g.identity()), "e");
        assert_eq!(g.format(g.s(1)), "s1");
        assert_eq!(g.format(g.s(0)), "t[1,1] s1 s2 s1");
        assert_eq!(g.format_decomposition(g.s(0)), "t[1,1] s1 s2 s1");
        assert_eq!(g.format_word(g.s(0)), "s0");
    }

    #[test]
    fn stabilizer_of_dominant_is_parabolic() {
        let g = group("A3");
        let mu = cw(&[1, 0, 0]);
        let stab: HashSet<WeylElt> = g
            .weyl()
            .elements()
            .into_iter()
            .filter(|v| g.weyl().act_cw(v, &mu) == mu)
            .collect();
        let walls = g.root_system().wall_set(&mu).unwrap();
        let parabolic: HashSet<_> = g.weyl().parabolic_elements(walls).into_iter().collect();
        assert_eq!(stab, parabolic);
    }
}
