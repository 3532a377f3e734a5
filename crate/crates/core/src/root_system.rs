//! Root systems of the adjoint groups of type A, B, C, D and G2.
//!
//! Roots are stored in the basis of simple roots and coweights in the basis of
//! fundamental coweights, so the pairing is the plain dot product of the two
//! coordinate vectors. Simple reflections are labelled `1..=rank`; label `0` is
//! reserved for the affine simple reflection.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Family letter of a Cartan type.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidCartanType(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Types A to D are the classical groups.
    pub fn is_classical(self) -> bool {
        self.family != Family::G
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::InvalidCartanType(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidCartanType(s.to_string()))?;
        let family = match letter {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'G' => Family::G,
            'E' | 'F' => return Err(Error::UnsupportedType(s.to_string())),
            _ => return Err(Error::InvalidCartanType(s.to_string())),
        };
        CartanType::new(family, rank)
    }
}

/// A root, in coordinates with respect to the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

/// A coweight of the adjoint group, in coordinates with respect to the
/// fundamental coweights. The i-th coordinate is the pairing with the i-th
/// simple root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.0)
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[i64]) -> fmt::Result {
    write!(f, "[")?;
    for (k, c) in coords.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, "]")
}

/// A set of simple reflection labels; bit `k` stands for `s_k`, with `0` the
/// affine node.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(pub u32);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    /// The finite simple reflections `{1, ..., rank}`.
    pub fn finite(rank: usize) -> Self {
        NodeSet(((1u32 << rank) - 1) << 1)
    }

    /// All affine simple reflections `{0, 1, ..., rank}`.
    pub fn affine(rank: usize) -> Self {
        NodeSet((1u32 << (rank + 1)) - 1)
    }

    pub fn singleton(k: usize) -> Self {
        NodeSet(1 << k)
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn insert(&mut self, k: usize) {
        self.0 |= 1 << k;
    }

    pub fn remove(&mut self, k: usize) {
        self.0 &= !(1 << k);
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&k| self.contains(k))
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = NodeSet::EMPTY;
        for k in iter {
            set.insert(k);
        }
        set
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, k) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// Index of a root in [`RootSystem::roots`]. Positive roots come first; the
/// negative of root `k` is root `k + num_positive`.
pub type RootIdx = usize;

/// Immutable root datum of an adjoint quasi-simple group.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths of the simple roots, short roots normalised to 1.
    half_norms: Vec<i64>,
    roots: Vec<Root>,
    coroots: Vec<Coweight>,
    index: HashMap<Root, RootIdx>,
    num_positive: usize,
    highest_root: RootIdx,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            cartan[i][j] = cij;
            cartan[j][i] = cji;
        };
        let mut half_norms = vec![1i64; n];
        match cartan_type.family() {
            Family::A => {
                for i in 0..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // alpha_n short
                link(n - 2, n - 1, -1, -2);
                half_norms = vec![2; n];
                half_norms[n - 1] = 1;
            }
            Family::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // alpha_n long
                link(n - 2, n - 1, -2, -1);
                half_norms[n - 1] = 2;
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                link(0, 1, -3, -1);
                half_norms = vec![1, 3];
            }
        }

        // Close the simple roots under simple reflections.
        let simple: Vec<Root> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                Root(c)
            })
            .collect();
        let mut positive: Vec<Root> = simple.clone();
        let mut k = 0;
        while k < positive.len() {
            let beta = positive[k].clone();
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta.0[j]).sum();
                let mut image = beta.0.clone();
                image[i] -= pairing;
                let image = Root(image);
                if image.is_positive() && !positive.contains(&image) {
                    positive.push(image);
                }
            }
            k += 1;
        }
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let num_positive = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| -r));
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();

        let coroots = roots
            .iter()
            .map(|r| coroot_of(&cartan, &half_norms, r))
            .collect();

        let highest_root = (0..num_positive)
            .max_by_key(|&k| positive[k].height())
            .expect("nonempty root system");

        Self {
            cartan_type,
            cartan,
            half_norms,
            roots,
            coroots,
            index,
            num_positive,
            highest_root,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// `<alpha_i^vee, alpha_j>` for 1-based labels.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn half_norm(&self, i: usize) -> i64 {
        self.half_norms[i - 1]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn root(&self, k: RootIdx) -> &Root {
        &self.roots[k]
    }

    pub fn root_index(&self, root: &Root) -> Option<RootIdx> {
        self.index.get(root).copied()
    }

    pub fn is_positive_idx(&self, k: RootIdx) -> bool {
        k < self.num_positive
    }

    pub fn negate_idx(&self, k: RootIdx) -> RootIdx {
        if k < self.num_positive {
            k + self.num_positive
        } else {
            k - self.num_positive
        }
    }

    /// Index of the simple root `alpha_i` (1-based label).
    pub fn simple_idx(&self, i: usize) -> RootIdx {
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        self.index[&Root(c)]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        self.roots[self.simple_idx(i)].clone()
    }

    /// Label of a simple root, if `k` is one.
    pub fn simple_label(&self, k: RootIdx) -> Option<usize> {
        let r = &self.roots[k];
        if r.height() == 1 && r.is_positive() {
            r.0.iter().position(|&c| c == 1).map(|p| p + 1)
        } else {
            None
        }
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.highest_root]
    }

    pub fn highest_root_idx(&self) -> RootIdx {
        self.highest_root
    }

    /// The coroot of root `k`, as a coweight.
    pub fn coroot(&self, k: RootIdx) -> &Coweight {
        &self.coroots[k]
    }

    /// `theta^vee`.
    pub fn highest_coroot(&self) -> &Coweight {
        &self.coroots[self.highest_root]
    }

    /// Basis `alpha_1^vee, ..., alpha_n^vee` of the coroot lattice X.
    pub fn coroot_lattice_basis(&self) -> Vec<Coweight> {
        (1..=self.rank()).map(|i| self.coroots[self.simple_idx(i)].clone()).collect()
    }

    pub fn fundamental_coweights(&self) -> Vec<Coweight> {
        (0..self.rank())
            .map(|i| {
                let mut c = vec![0; self.rank()];
                c[i] = 1;
                Coweight(c)
            })
            .collect()
    }

    pub fn pairing(&self, lambda: &Coweight, alpha: &Root) -> i64 {
        lambda.0.iter().zip(&alpha.0).map(|(a, b)| a * b).sum()
    }

    pub fn pairing_idx(&self, lambda: &Coweight, k: RootIdx) -> i64 {
        self.pairing(lambda, &self.roots[k])
    }

    /// `<beta^vee, alpha>` for root indices.
    pub fn coroot_pairing(&self, beta: RootIdx, alpha: RootIdx) -> i64 {
        self.pairing(&self.coroots[beta], &self.roots[alpha])
    }

    /// Reflection `s_beta` applied to root `alpha`.
    pub fn reflect_root(&self, beta: RootIdx, alpha: RootIdx) -> RootIdx {
        let c = self.coroot_pairing(beta, alpha);
        let image = Root(
            self.roots[alpha]
                .0
                .iter()
                .zip(&self.roots[beta].0)
                .map(|(a, b)| a - c * b)
                .collect(),
        );
        self.index[&image]
    }

    /// Reflection `s_beta` applied to a coweight.
    pub fn reflect_coweight(&self, beta: RootIdx, lambda: &Coweight) -> Coweight {
        let c = self.pairing_idx(lambda, beta);
        Coweight(
            lambda
                .0
                .iter()
                .zip(&self.coroots[beta].0)
                .map(|(l, b)| l - c * b)
                .collect(),
        )
    }

    /// `rho^vee_J`: pairing 1 with `alpha_j` for `j` in `J`, 0 otherwise.
    pub fn rho_check(&self, nodes: NodeSet) -> Coweight {
        Coweight((1..=self.rank()).map(|i| nodes.contains(i) as i64).collect())
    }

    /// `rho^vee = rho^vee_S`.
    pub fn rho_check_full(&self) -> Coweight {
        self.rho_check(self.finite_nodes())
    }

    /// 0 for positive roots, 1 for negative roots.
    pub fn delta(&self, k: RootIdx) -> i64 {
        (!self.is_positive_idx(k)) as i64
    }

    /// The set of walls `I(lambda)` of a dominant coweight.
    pub fn wall_set(&self, lambda: &Coweight) -> Result<NodeSet> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok((1..=self.rank()).filter(|&i| lambda.0[i - 1] == 0).collect())
    }

    pub fn finite_nodes(&self) -> NodeSet {
        NodeSet::finite(self.rank())
    }

    pub fn affine_nodes(&self) -> NodeSet {
        NodeSet::affine(self.rank())
    }

    /// `<rho, mu>` doubled, i.e. the sum of `<mu, alpha>` over positive roots.
    pub fn two_rho_pairing(&self, mu: &Coweight) -> i64 {
        self.positive_roots().iter().map(|a| self.pairing(mu, a)).sum()
    }

    /// Coxeter number `h = ht(theta) + 1`.
    pub fn coxeter_number(&self) -> i64 {
        self.highest_root().height() + 1
    }

    /// Coefficient of `alpha_i` in the highest root.
    pub fn highest_root_coefficient(&self, i: usize) -> i64 {
        self.highest_root().0[i - 1]
    }
}

fn coroot_of(cartan: &[Vec<i64>], half_norms: &[i64], root: &Root) -> Coweight {
    let n = cartan.len();
    // (alpha, alpha) / 2 with (alpha_i, alpha_j) = d_i <alpha_i^vee, alpha_j>
    let mut norm2 = 0;
    for (i, row) in cartan.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            norm2 += root.0[i] * root.0[j] * half_norms[i] * c;
        }
    }
    let half_norm = norm2 / 2;
    // alpha^vee = sum_i a_i d_i / d_alpha * alpha_i^vee
    let coeffs: Vec<i64> = (0..n)
        .map(|i| {
            let num = root.0[i] * half_norms[i];
            debug_assert_eq!(num % half_norm, 0);
            num / half_norm
        })
        .collect();
    Coweight(
        (0..n)
            .map(|k| (0..n).map(|i| coeffs[i] * cartan[i][k]).sum())
            .collect(),
    )
}
