//! Independent reference implementations for tests. Elements are integer
//! affine maps `p ↦ M p + b` of the coweight space in fundamental-coweight
//! coordinates; nothing here calls into the library's group arithmetic except
//! the conversion [`Oracle::to_aff`].

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{HashMap, HashSet, VecDeque};

use adlv_core::{AffineElt, AffineWeylGroup, WeylElt};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Aff {
    pub m: Vec<i64>,
    pub b: Vec<i64>,
}

impl Aff {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        Aff { m, b: vec![0; n] }
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    pub fn apply_linear(&self, p: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| self.m[i * n + j] * p[j]).sum()).collect()
    }

    /// `self ∘ other`.
    pub fn then(&self, other: &Aff) -> Aff {
        let n = self.rank();
        let mut m = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = (0..n).map(|k| self.m[i * n + k] * other.m[k * n + j]).sum();
            }
        }
        let mb = self.apply_linear(&other.b);
        let b = (0..n).map(|i| mb[i] + self.b[i]).collect();
        Aff { m, b }
    }

    pub fn linear(&self) -> Aff {
        Aff {
            m: self.m.clone(),
            b: vec![0; self.rank()],
        }
    }

    pub fn translation(t: &[i64]) -> Aff {
        let mut a = Aff::identity(t.len());
        a.b = t.to_vec();
        a
    }

    /// Inverse of an integral affine map whose linear part has an integral
    /// inverse (true for all group elements here): found as `M^k = 1`.
    pub fn inverse(&self) -> Aff {
        let n = self.rank();
        let lin = self.linear();
        let mut pow = lin.clone();
        let mut prev = Aff::identity(n);
        while pow != Aff::identity(n) {
            prev = pow.clone();
            pow = pow.then(&lin);
        }
        let minv = prev;
        let t = minv.apply_linear(&self.b);
        Aff {
            m: minv.m,
            b: t.iter().map(|x| -x).collect(),
        }
    }
}

pub struct Oracle {
    pub n: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub pos_roots: Vec<Vec<i64>>,
    /// Matching coroots in fundamental-coweight coordinates.
    pub pos_coroots: Vec<Vec<i64>>,
    pub theta: Vec<i64>,
    /// `θ^∨` in fundamental-coweight coordinates.
    pub theta_check: Vec<i64>,
    pub coxeter_number: i64,
    pub gens: Vec<Aff>,
    /// Finite Weyl group: linear part -> a reduced word (BFS).
    pub finite: HashMap<Aff, Vec<usize>>,
}

pub fn cartan_matrix(t: &str) -> Vec<Vec<i64>> {
    match t {
        "A1" => vec![vec![2]],
        "A2" => vec![vec![2, -1], vec![-1, 2]],
        "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
        "B2" => vec![vec![2, -1], vec![-2, 2]],
        other => panic!("no reference Cartan matrix for {other}"),
    }
}

impl Oracle {
    pub fn new(t: &str) -> Self {
        let cartan = cartan_matrix(t);
        let n = cartan.len();
        // Close simple roots and coroots under simple reflections together.
        let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                (r, cartan[i].clone())
            })
            .collect();
        let mut k = 0;
        while k < pairs.len() {
            let (r, c) = pairs[k].clone();
            for i in 0..n {
                let a: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
                let mut r2 = r.clone();
                r2[i] -= a;
                let b = c[i];
                let c2: Vec<i64> = (0..n).map(|j| c[j] - b * cartan[i][j]).collect();
                if r2.iter().all(|&x| x >= 0) && !pairs.iter().any(|(q, _)| *q == r2) {
                    pairs.push((r2, c2));
                }
            }
            k += 1;
        }
        let (theta, theta_check) = pairs
            .iter()
            .max_by_key(|(r, _)| r.iter().sum::<i64>())
            .cloned()
            .unwrap();
        let coxeter_number = theta.iter().sum::<i64>() + 1;
        let (pos_roots, pos_coroots) = pairs.into_iter().unzip();
        let mut gens = Vec::new();
        // s_0: p ↦ p - (<p, θ> - 1) θ^∨
        let mut s0 = Aff::identity(n);
        for i in 0..n {
            for j in 0..n {
                s0.m[i * n + j] -= theta_check[i] * theta[j];
            }
        }
        s0.b = theta_check.clone();
        gens.push(s0);
        for k in 0..n {
            // s_k: p ↦ p - p_k α_k^∨
            let mut s = Aff::identity(n);
            for i in 0..n {
                s.m[i * n + k] -= cartan[k][i];
            }
            gens.push(s);
        }
        let mut oracle = Oracle {
            n,
            cartan,
            pos_roots,
            pos_coroots,
            theta,
            theta_check,
            coxeter_number,
            gens,
            finite: HashMap::new(),
        };
        oracle.finite = oracle.bfs_words(&(1..=n).collect::<Vec<_>>(), usize::MAX);
        oracle
    }

    /// Shortest words in the given generators, up to `depth`.
    pub fn bfs_words(&self, nodes: &[usize], depth: usize) -> HashMap<Aff, Vec<usize>> {
        let id = Aff::identity(self.n);
        let mut words = HashMap::from([(id.clone(), Vec::new())]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let w = words[&x].clone();
            if w.len() >= depth {
                continue;
            }
            for &i in nodes {
                let y = x.then(&self.gens[i]);
                if !words.contains_key(&y) {
                    let mut w2 = w.clone();
                    w2.push(i);
                    words.insert(y.clone(), w2);
                    queue.push_back(y);
                }
            }
        }
        words
    }

    pub fn affine_ball(&self, depth: usize) -> HashMap<Aff, Vec<usize>> {
        self.bfs_words(&(0..=self.n).collect::<Vec<_>>(), depth)
    }

    pub fn word(&self, word: &[usize]) -> Aff {
        word.iter()
            .fold(Aff::identity(self.n), |acc, &i| acc.then(&self.gens[i]))
    }

    pub fn to_aff(&self, g: &AffineWeylGroup, x: &AffineElt) -> Aff {
        let n = self.n;
        let mut m = vec![0; n * n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let col = g.weyl().act_cw(x.finite(), &adlv_core::Coweight(e));
            for i in 0..n {
                m[i * n + j] = col.0[i];
            }
        }
        Aff {
            m,
            b: x.transl().0.clone(),
        }
    }

    pub fn finite_to_aff(&self, g: &AffineWeylGroup, w: &WeylElt) -> Aff {
        self.to_aff(g, &g.from_finite(w))
    }

    /// Number of affine root hyperplanes separating the base alcove from its
    /// image, counted at the interior point `ρ^∨ / h`.
    pub fn alcove_length(&self, x: &Aff) -> usize {
        let h = self.coxeter_number;
        let ones = vec![1; self.n];
        let img = x.apply_linear(&ones);
        let p: Vec<i64> = (0..self.n).map(|i| img[i] + h * x.b[i]).collect();
        self.pos_roots
            .iter()
            .map(|a| {
                let v: i64 = (0..self.n).map(|i| p[i] * a[i]).sum();
                assert!(v % h != 0, "interior point on a wall");
                v.div_euclid(h).unsigned_abs() as usize
            })
            .sum()
    }

    /// `w α` for a finite element given by a word, `α` in simple-root
    /// coordinates.
    pub fn act_root(&self, word: &[usize], root: &[i64]) -> Vec<i64> {
        let mut r = root.to_vec();
        for &i in word.iter().rev() {
            let k = i - 1;
            let a: i64 = (0..self.n).map(|j| self.cartan[k][j] * r[j]).sum();
            r[k] -= a;
        }
        r
    }

    pub fn is_positive(root: &[i64]) -> bool {
        root.iter().all(|&c| c >= 0)
    }

    pub fn finite_word(&self, w: &Aff) -> &[usize] {
        &self.finite[&w.linear()]
    }

    pub fn finite_len(&self, w: &Aff) -> usize {
        self.finite_word(w).len()
    }

    pub fn support(&self, w: &Aff) -> Vec<usize> {
        let mut s: Vec<usize> = self.finite_word(w).to_vec();
        s.sort();
        s.dedup();
        s
    }

    pub fn is_coxeter(&self, w: &Aff) -> bool {
        let word = self.finite_word(w);
        word.len() == self.n && self.support(w).len() == self.n
    }

    pub fn t_length(&self, mu: &[i64]) -> usize {
        self.pos_roots
            .iter()
            .map(|a| (0..self.n).map(|i| mu[i] * a[i]).sum::<i64>().unsigned_abs() as usize)
            .sum()
    }

    /// Every `(v, μ, w)` with `x = v t^μ w`, `μ` dominant and `w` minimal in
    /// `W_{I(μ)} w`.
    pub fn decompositions(&self, x: &Aff) -> Vec<(Aff, Vec<i64>, Aff)> {
        let u = x.linear();
        let mut out = Vec::new();
        for v in self.finite.keys() {
            let vinv = v.inverse();
            let mu = vinv.apply_linear(&x.b);
            if mu.iter().any(|&c| c < 0) {
                continue;
            }
            let w = vinv.then(&u);
            let lw = self.finite_len(&w);
            let min_rep = (1..=self.n)
                .filter(|&i| mu[i - 1] == 0)
                .all(|i| self.finite_len(&self.gens[i].then(&w)) > lw);
            if min_rep {
                out.push((v.clone(), mu, w));
            }
        }
        out
    }

    /// `η(x) = w v` from the unique decomposition.
    pub fn eta(&self, x: &Aff) -> Aff {
        let d = self.decompositions(x);
        assert_eq!(d.len(), 1, "decomposition is not unique");
        let (v, _, w) = &d[0];
        w.then(v)
    }

    /// `2 d(x)` for `b` with the given defect.
    pub fn twice_d(&self, x: &Aff, defect: i64) -> i64 {
        (self.alcove_length(x) + self.finite_len(&self.eta(x))) as i64 - defect
    }

    pub fn is_shrunken(&self, x: &Aff) -> bool {
        let d = self.decompositions(x);
        let (v, mu, w) = &d[0];
        let vw = self.finite_word(v).to_vec();
        let winv = w.inverse();
        let ww = self.finite_word(&winv).to_vec();
        (0..self.n).all(|i| {
            let mut a = vec![0; self.n];
            a[i] = 1;
            let dv = i64::from(!Self::is_positive(&self.act_root(&vw, &a)));
            let dw = i64::from(!Self::is_positive(&self.act_root(&ww, &a)));
            mu[i] + dv - dw != 0
        })
    }

    /// All products of subwords of `word`: the Bruhat lower set.
    pub fn lower_set(&self, word: &[usize], tail: &Aff) -> HashSet<Aff> {
        let mut out = HashSet::new();
        for mask in 0u64..(1 << word.len()) {
            let sub: Vec<usize> = (0..word.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| word[k])
                .collect();
            out.insert(self.word(&sub).then(tail));
        }
        out
    }

    /// Reflection in the root `alpha` (either sign).
    pub fn reflection(&self, alpha: &[i64]) -> Aff {
        let pos: Vec<i64> = if Self::is_positive(alpha) {
            alpha.to_vec()
        } else {
            alpha.iter().map(|c| -c).collect()
        };
        let k = self.pos_roots.iter().position(|r| *r == pos).expect("not a root");
        let co = &self.pos_coroots[k];
        let n = self.n;
        let mut s = Aff::identity(n);
        for i in 0..n {
            for j in 0..n {
                s.m[i * n + j] -= co[i] * pos[j];
            }
        }
        s
    }

    /// `floor(<x(q), β>)` for the interior point `q = ρ^∨ / h` of the base
    /// alcove: the alcove `x(A_0)` lies between the walls `β = k` and
    /// `β = k + 1`.
    pub fn alcove_floor(&self, x: &Aff, beta: &[i64]) -> i64 {
        let h = self.coxeter_number;
        let img = x.apply_linear(&vec![1; self.n]);
        let v: i64 = (0..self.n).map(|i| (img[i] + h * x.b[i]) * beta[i]).sum();
        v.div_euclid(h)
    }

    /// Conjugation by `g`: `g x g^{-1}`.
    pub fn conj(&self, g: &Aff, x: &Aff) -> Aff {
        g.then(x).then(&g.inverse())
    }

    /// Shortest path of conjugations by simple reflections and `omegas`
    /// with non-increasing length from `x` to `target`.
    pub fn tilde_reaches(&self, x: &Aff, target: &Aff, omegas: &[Aff], budget: usize) -> bool {
        let mut seen = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(cur) = queue.pop_front() {
            if &cur == target {
                return true;
            }
            let l = self.alcove_length(&cur);
            let movers = self.gens.iter().chain(omegas.iter());
            for s in movers {
                let y = self.conj(s, &cur);
                if self.alcove_length(&y) <= l && seen.len() < budget && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        false
    }
}
