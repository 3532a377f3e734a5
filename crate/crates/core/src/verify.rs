//! Exhaustive self-checks over desk-scale windows, one suite per family of
//! combinatorial statements. Each suite reports how many cases it checked
//! and the first counterexample, printed in element syntax.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::affine_weyl::{AffineElt, AffineWeylGroup};
use crate::demazure;
use crate::enumerate::{affine_ball, extended_ball};
use crate::error::{Error, Result};
use crate::finite_weyl::{Side, WeylElt, WeylGroup};
use crate::halfint::HalfInt;
use crate::predict::{is_p_alcove, non_equidim_witness, p_alcove_hypothesis_check};
use crate::reduction::{
    coxeter_chain_search, length_zero_base_dim, lower_bound_dim, witness_from_longest,
    construct_a_t_gamma, coxeter_eta_witness, tilde_path,
};
use crate::root_system::{Coweight, Family};

pub const SUITES: [&str; 8] = [
    "lengths",
    "demazure",
    "decomposition",
    "virtual-dim",
    "thm3",
    "p-alcove",
    "non-equidim",
    "reachability",
];

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Length bound for the enumerated window.
    pub bound: usize,
    pub seed: u64,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Records one case; keeps only the first failure.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} checked)", self.name, self.checked)?,
            Some(c) => write!(f, "FAIL {} ({} checked): {c}", self.name, self.checked)?,
        }
        for n in &self.notes {
            write!(f, "\n  {n}")?;
        }
        Ok(())
    }
}

/// Runs one named suite, or every suite for `"all"`.
pub fn run(name: &str, g: &AffineWeylGroup, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, g, cfg)).collect();
    }
    Ok(vec![run_one(name, g, cfg)?])
}

fn run_one(name: &str, g: &AffineWeylGroup, cfg: &SuiteConfig) -> Result<SuiteReport> {
    Ok(match name {
        "lengths" => lengths(g, cfg),
        "demazure" => demazure_suite(g, cfg),
        "decomposition" => decomposition(g, cfg),
        "virtual-dim" => virtual_dim(g, cfg),
        "thm3" => thm3(g, cfg),
        "p-alcove" => p_alcove(g, cfg),
        "non-equidim" => non_equidim(g, cfg),
        "reachability" => reachability(g, cfg),
        other => {
            return Err(Error::Precondition(format!(
                "unknown suite '{other}'; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    })
}

fn lengths(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("lengths");
    let mut ball: Vec<(AffineElt, usize)> = g.word_length_ball(cfg.bound).into_iter().collect();
    ball.sort_by_cached_key(|(x, _)| g.sort_key(x));
    for (x, d) in &ball {
        r.check(g.length(x) == *d, || {
            format!("{}: ℓ = {}, word length {d}", g.format(x), g.length(x))
        });
        r.check(g.length(&g.inverse(x)) == *d, || format!("ℓ({}^-1) differs", g.format(x)));
    }
    for tau in g.omega_elements() {
        r.check(g.length(tau) == 0, || format!("{} has positive length", g.format(tau)));
    }
    let w = g.weyl();
    for u in w.elements() {
        let inv = w.length(&u);
        r.check(w.reduced_word(&u).len() == inv, || format!("{}: word length", w.format(&u)));
    }
    r
}

/// All `u <= x`, as products of subwords of a reduced word.
fn finite_lower_set(w: &WeylGroup, x: &WeylElt) -> Vec<WeylElt> {
    let word = w.reduced_word(x);
    let mut out: HashSet<WeylElt> = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = (0..word.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| word[k])
            .collect();
        out.insert(w.from_word(&sub).expect("valid word"));
    }
    out.into_iter().collect()
}

fn affine_lower_set(g: &AffineWeylGroup, x: &AffineElt) -> Vec<AffineElt> {
    let (word, tau) = g.reduced_word(x);
    let mut out: HashSet<AffineElt> = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = (0..word.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| word[k])
            .collect();
        out.insert(g.mul(&g.from_word(&sub).expect("valid word"), &tau));
    }
    out.into_iter().collect()
}

fn demazure_suite(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("demazure");
    let w = g.weyl();
    let elts = w.elements();
    let max_pairs = 2_000usize;
    let mut pairs: Vec<(WeylElt, WeylElt)> = elts
        .iter()
        .flat_map(|a| elts.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    if pairs.len() > max_pairs {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(max_pairs);
        r.notes.push(format!("sampled {max_pairs} finite pairs with seed {}", cfg.seed));
    }
    for (a, b) in &pairs {
        let star = w.star(a, b);
        let lower_a = finite_lower_set(w, a);
        let lower_b = finite_lower_set(w, b);
        let products: HashSet<WeylElt> = lower_a
            .iter()
            .flat_map(|u| lower_b.iter().map(move |v| u.mul(v)))
            .collect();
        let ok = products.contains(&star) && products.iter().all(|p| w.bruhat_leq(p, &star));
        let len_ok = w.length(&star) == w.length(a) + w.length(&a.inverse().mul(&star));
        let supp_ok = w.support(&star) == w.support(a).union(w.support(b));
        r.check(ok && len_ok && supp_ok, || {
            format!("star({}, {}) = {}", w.format(a), w.format(b), w.format(&star))
        });
    }
    let ball = affine_ball(g, cfg.bound.min(3));
    for x in &ball {
        for y in &ball {
            let star = demazure::star(g, x, y);
            let lx = affine_lower_set(g, x);
            let ly = affine_lower_set(g, y);
            let products: HashSet<AffineElt> =
                lx.iter().flat_map(|u| ly.iter().map(move |v| g.mul(u, v))).collect();
            let ok = products.contains(&star) && products.iter().all(|p| g.bruhat_leq(p, &star));
            r.check(ok, || {
                format!("star({}, {}) = {}", g.format(x), g.format(y), g.format(&star))
            });
        }
    }
    r
}

fn decomposition(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("decomposition");
    let w = g.weyl();
    let rs = g.root_system();
    for x in extended_ball(g, cfg.bound) {
        let d = g.canonical_decomposition(&x);
        let walls = rs.wall_set(&d.mu).expect("μ is dominant");
        let t_mu = g.length(&g.translation(&d.mu));
        let ok = g.recompose(&d) == x
            && w.is_min_coset_rep(&d.w, walls, Side::Left)
            && g.eta2_by_search(&x) == d.v
            && g.length(&x) + w.length(&d.w) == w.length(&d.v) + t_mu;
        r.check(ok, || format!("{} = {}", g.format(&x), g.format_decomposition(&x)));
    }
    r
}

fn virtual_dim(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("virtual-dim");
    let w = g.weyl();
    let rs = g.root_system();
    let one = HalfInt::from_int(1);
    for x in extended_ball(g, cfg.bound) {
        let lx = g.length(&x);
        let dx = g.virtual_dim(&x, 0);
        let eta = w.length(&g.eta(&x));
        for s in 1..=g.rank() {
            if g.length(&g.conj_simple(s, &x)) + 2 != lx {
                continue;
            }
            let sx = g.mul(g.s(s), &x);
            let dsx = g.virtual_dim(&sx, 0);
            let equal = w.length(&g.eta(&sx)) + 1 == eta;
            r.check(dx >= dsx + one && ((dx == dsx + one) == equal), || {
                format!("left: x = {}, s{s}", g.format(&x))
            });
            let d = g.canonical_decomposition(&x);
            let ws = d.w.mul(w.s(s));
            let walls = rs.wall_set(&d.mu).expect("μ is dominant");
            if d.w.is_identity() || w.is_min_coset_rep(&ws, walls, Side::Left) {
                let xs = g.mul(&x, g.s(s));
                let dxs = g.virtual_dim(&xs, 0);
                let equal = w.length(&g.eta(&xs)) + 1 == eta;
                r.check(dx >= dxs + one && ((dx == dxs + one) == equal), || {
                    format!("right: x = {}, s{s}", g.format(&x))
                });
            }
        }
    }
    // Length subtraction in W.
    for u in w.elements() {
        for y in w.elements() {
            let hyp = (0..rs.num_positive())
                .filter(|&k| !rs.is_positive_idx(y.inverse().image(k)))
                .all(|k| !rs.is_positive_idx(u.image(k)));
            if hyp {
                r.check(w.length(&u.mul(&y)) + w.length(&y) == w.length(&u), || {
                    format!("ℓ(wy) with w = {}, y = {}", w.format(&u), w.format(&y))
                });
            }
        }
    }
    r
}

fn thm3(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("thm3");
    let w = g.weyl();
    let full = g.root_system().finite_nodes();
    let mut found_c: HashSet<Vec<usize>> = HashSet::new();
    for x in affine_ball(g, cfg.bound) {
        if g.is_shrunken(&x) && w.support(&g.eta(&x)) == full {
            match construct_a_t_gamma(g, &x) {
                Ok(c) => r.check(c.claims.all(), || {
                    format!("construction claims at {}: {:?}", g.format(&x), c.claims)
                }),
                Err(e) => r.check(false, || format!("construction at {}: {e}", g.format(&x))),
            }
        }
        if w.is_coxeter(&g.eta(&x)) {
            let ok = coxeter_eta_witness(g, &x, cfg.budget).is_ok();
            r.check(ok, || format!("no ~> path from {} to η(x)", g.format(&x)));
        }
    }
    let w0 = w.longest();
    for mu in small_dominant(g, 2) {
        if mu.is_zero() {
            continue;
        }
        if mu.is_regular_dominant() {
            for u in w.elements() {
                let ok = witness_from_longest(g, &mu, &u, &w.identity(), cfg.budget)
                    .and_then(|c| c.validate(g))
                    .is_ok();
                r.check(ok, || format!("w0 t^μ => v t^μ with v = {}, μ = {mu}", w.format(&u)));
            }
        }
        for a in w.elements().iter().filter(|a| w.support(a) == full) {
            let x = g.mul(&g.from_finite(a), &g.translation(&mu));
            match coxeter_chain_search(g, &x, &mu, cfg.budget) {
                Ok(chain) => {
                    found_c.insert(w.reduced_word(&chain.c));
                    r.check(chain.witness.validate(g).is_ok(), || {
                        format!("invalid chain from {}", g.format(&x))
                    })
                }
                Err(e) => r.check(false, || format!("a t^μ with a = {}, μ = {mu}: {e}", w.format(a))),
            }
        }
        let chain = witness_from_longest(g, &mu, &w0, &w.identity(), cfg.budget);
        r.check(chain.is_ok(), || format!("w0 t^μ => w0 t^μ failed for μ = {mu}"));
    }
    let mut cs: Vec<Vec<usize>> = found_c.into_iter().collect();
    cs.sort();
    r.notes.push(format!(
        "Coxeter elements reached: {}",
        cs.iter()
            .map(|c| crate::finite_weyl::format_word(c))
            .collect::<Vec<_>>()
            .join("; ")
    ));
    r
}

/// Dominant coweights with all coordinates in `0..=max`.
pub fn small_dominant(g: &AffineWeylGroup, max: i64) -> Vec<Coweight> {
    let n = g.rank();
    let mut out = vec![Coweight(vec![])];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|c| {
                (0..=max).map(move |k| {
                    let mut c = c.clone();
                    c.0.push(k);
                    c
                })
            })
            .collect();
    }
    out
}

fn p_alcove(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("p-alcove");
    let rs = g.root_system();
    let mut hits = 0usize;
    for x in extended_ball(g, cfg.bound) {
        for alpha in 0..rs.num_roots() {
            for j in 1..=g.rank() {
                if let Some((u, nodes)) = p_alcove_hypothesis_check(g, &x, alpha, j) {
                    hits += 1;
                    r.check(is_p_alcove(g, &x, &u, nodes), || {
                        format!("x = {}, α = {:?}, j = {j}", g.format(&x), rs.root(alpha).0)
                    });
                }
            }
        }
    }
    r.notes.push(format!("{hits} (x, α, j) satisfy the hypotheses"));
    r
}

/// Smallest multiple `k ρ^∨`, `k >= 2`, lying in the coroot lattice.
fn very_regular_in_coroot_lattice(g: &AffineWeylGroup) -> Coweight {
    let rho = g.root_system().rho_check_full();
    (2..)
        .map(|k| rho.scale(k))
        .find(|mu| g.kappa_of_coweight(mu).is_trivial())
        .expect("some multiple lies in the coroot lattice")
}

fn non_equidim(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("non-equidim");
    let w = g.weyl();
    let mu = very_regular_in_coroot_lattice(g);
    let elts = w.elements();
    let mut triples = Vec::new();
    for v in &elts {
        for ww in &elts {
            if w.length(v) + w.length(ww) > cfg.bound {
                continue;
            }
            for s in 1..=g.rank() {
                let rep = non_equidim_witness(g, v, ww, s, &mu, 0).expect("valid input");
                if !rep.conditions_hold() {
                    continue;
                }
                r.check(rep.eta_values && rep.drop2 && rep.strict, || {
                    format!("v = {}, w = {}, s = s{s}", w.format(v), w.format(ww))
                });
                triples.push(format!("v = {}, w = {}, s = s{s}", w.format(v), w.format(ww)));
            }
        }
    }
    r.notes.push(format!("μ = {mu}; {} witness triples", triples.len()));
    r.notes.extend(triples);
    r
}

fn reachability(g: &AffineWeylGroup, cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("reachability");
    let w = g.weyl();
    for x in affine_ball(g, cfg.bound) {
        let eta = g.eta(&x);
        if !w.is_coxeter(&eta) {
            continue;
        }
        let target = g.from_finite(&eta);
        let ok = matches!(tilde_path(g, &x, |y| *y == target, cfg.budget), Ok(Some(_)));
        r.check(ok, || format!("{} does not reach η(x) = {}", g.format(&x), w.format(&eta)));
    }
    if g.cartan_type().family() == Family::A {
        for (x, target) in pgl_chain_cases(g) {
            let found = matches!(tilde_path(g, &x, |y| *y == target, cfg.budget), Ok(Some(_)));
            r.check(found, || {
                format!("{} does not reach {}", g.format(&x), g.format_word(&target))
            });
        }
    }
    r
}

/// For type `A_{n-1}`: pairs `(t^λ c, (1 2 ... m)τ_r)` with `0 < r < n`,
/// `m = gcd(n, r)`, `c` Coxeter and `λ` dominant with entries at most 2 in
/// the class of `ω_r^∨`.
pub fn pgl_chain_cases(g: &AffineWeylGroup) -> Vec<(AffineElt, AffineElt)> {
    let w = g.weyl();
    let n = g.rank() + 1;
    let coxeter: Vec<WeylElt> = w.elements().into_iter().filter(|c| w.is_coxeter(c)).collect();
    let mut out = Vec::new();
    for r in 1..n {
        let tau = g.omega_for_node(r).expect("type A has all nodes minuscule").clone();
        let m = gcd(n, r);
        let cycle: Vec<usize> = (1..m).collect();
        let target = g.mul(&g.from_word(&cycle).expect("valid word"), &tau);
        for lambda in small_dominant(g, 2) {
            if g.kappa_of_coweight(&lambda) != g.kappa(&tau) {
                continue;
            }
            for c in &coxeter {
                let x = g.mul(&g.translation(&lambda), &g.from_finite(c));
                out.push((x, target.clone()));
            }
        }
    }
    out
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The lower bound `dim X_{t^λ c}(τ) >= (ℓ(t^λ c) + m - 1)/2` obtained from
/// the base value at `(1 2 ... m)τ`.
pub fn pgl_chain_bound(g: &AffineWeylGroup, x: &AffineElt, target: &AffineElt) -> Option<HalfInt> {
    let base = length_zero_base_dim(g, target)?;
    let map = std::collections::HashMap::from([(target.clone(), base)]);
    lower_bound_dim(g, x, &map).finite()
}
