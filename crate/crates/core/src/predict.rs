//! Emptiness and dimension predictions for `X_x(b)` with `b` basic.
//!
//! For `x` in the shrunken Weyl chambers, `X_x(b)` is nonempty exactly when
//! `supp(η(x)) = S`, and then `dim X_x(b) = d(x)` where
//! `d(x) = (ℓ(x) + ℓ(η(x)) - def(b)) / 2`. The inequality `dim <= d(x)` is
//! known when `η_2(x) = w_0` or `μ` is regular; `dim >= d(x)` is known for
//! classical groups with `b = 1` and for type A with any basic `b`. Outside
//! the shrunken chambers only emptiness is predicted: `supp(η(x)) != S`
//! together with a nonzero translation part forces `X_x(b) = ∅`.

use std::fmt;

use serde::Serialize;

use crate::affine_weyl::{AffineElt, AffineWeylGroup, Kappa};
use crate::error::{Error, Result};
use crate::finite_weyl::WeylElt;
use crate::halfint::HalfInt;
use crate::reduction::{build_reduction_tree, classify_move, MoveCase, MoveKind};
use crate::root_system::{Coweight, Family, NodeSet, RootIdx};

/// What the predictor needs to know about a basic `b`: its class in `π_1`,
/// its defect, and a label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicClassData {
    pub label: String,
    pub kappa: Kappa,
    pub defect: i64,
}

impl BasicClassData {
    /// `b = 1`.
    pub fn trivial(g: &AffineWeylGroup) -> Self {
        Self {
            label: "1".into(),
            kappa: g.kappa_of_coweight(&Coweight::zero(g.rank())),
            defect: 0,
        }
    }

    /// The basic class of `PGL_n` with `κ = r mod n`.
    pub fn pgl(g: &AffineWeylGroup, n: usize, r: i64) -> Result<Self> {
        let t = g.cartan_type();
        if t.family() != Family::A || t.rank() + 1 != n {
            return Err(Error::UnsupportedType(format!(
                "pgl:{n} needs type A{}, got {t}",
                n.saturating_sub(1)
            )));
        }
        let r = r.rem_euclid(n as i64);
        let mut omega = Coweight::zero(g.rank());
        if r > 0 {
            omega.0[0] = r;
        }
        Ok(Self {
            label: format!("pgl:{n}:{r}"),
            kappa: g.kappa_of_coweight(&omega),
            defect: defect_pgl(n as i64, r),
        })
    }

    /// `"1"` or `"pgl:n:r"`.
    pub fn parse(g: &AffineWeylGroup, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" {
            return Ok(Self::trivial(g));
        }
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("expected '1' or 'pgl:n:r', got '{text}'"),
        };
        let rest = text.strip_prefix("pgl:").ok_or_else(bad)?;
        let (n, r) = rest.split_once(':').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        let r: i64 = r.parse().map_err(|_| bad())?;
        Self::pgl(g, n, r)
    }
}

/// `n - gcd(n, r)`.
pub fn defect_pgl(n: i64, r: i64) -> i64 {
    let (mut a, mut b) = (n.abs(), r.rem_euclid(n.max(1)));
    while b != 0 {
        (a, b) = (b, a % b);
    }
    n - a
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Empty,
    Nonempty,
    OutsideTheoremScope,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Empty => "empty",
            Status::Nonempty => "nonempty",
            Status::OutsideTheoremScope => "outside",
        })
    }
}

/// Which halves of `dim = d(x)` are established.
#[derive(Debug, Copy, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PredictionFlags {
    pub upper: bool,
    pub lower: bool,
    pub exact: bool,
}

impl fmt::Display for PredictionFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = [(self.upper, "upper"), (self.lower, "lower"), (self.exact, "exact")]
            .iter()
            .filter(|(on, _)| *on)
            .map(|(_, name)| *name)
            .collect();
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub status: Status,
    /// `d(x)` when nonempty.
    pub dim: Option<HalfInt>,
    pub flags: PredictionFlags,
    pub shrunken: bool,
    /// Why the answer is what it is, when not plain.
    pub note: Option<String>,
}

pub fn predict(g: &AffineWeylGroup, x: &AffineElt, b: &BasicClassData) -> Prediction {
    let weyl = g.weyl();
    let rs = g.root_system();
    let shrunken = g.is_shrunken(x);
    let empty = |note: String| Prediction {
        status: Status::Empty,
        dim: None,
        flags: PredictionFlags::default(),
        shrunken,
        note: Some(note),
    };
    let kx = g.kappa(x);
    if kx != b.kappa {
        return empty(Error::KappaMismatch {
            x: kx.to_string(),
            b: b.kappa.to_string(),
        }
        .to_string());
    }
    let eta = g.eta(x);
    let full_support = weyl.support(&eta) == rs.finite_nodes();
    if !full_support && !x.transl().is_zero() {
        return empty("supp(η(x)) is not S and the translation part is nonzero".into());
    }
    if !shrunken {
        return Prediction {
            status: Status::OutsideTheoremScope,
            dim: None,
            flags: PredictionFlags::default(),
            shrunken,
            note: Some("x is not in the shrunken Weyl chambers".into()),
        };
    }
    let d = g.canonical_decomposition(x);
    let upper = d.v == weyl.longest() || d.mu.is_regular_dominant();
    let ty = g.cartan_type();
    let lower = (ty.is_classical() && b.kappa.is_trivial() && b.defect == 0)
        || ty.family() == Family::A;
    Prediction {
        status: Status::Nonempty,
        dim: Some(g.virtual_dim(x, b.defect)),
        flags: PredictionFlags {
            upper,
            lower,
            exact: upper && lower,
        },
        shrunken,
        note: None,
    }
}

/// `dim Gr_μ ∩ X(b) = <ρ, μ> - def(b)/2`.
pub fn grassmannian_dim(g: &AffineWeylGroup, mu: &Coweight, b: &BasicClassData) -> Result<HalfInt> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    Ok(HalfInt::from_twice(g.root_system().two_rho_pairing(mu) - b.defect))
}

/// `X_{t^μ w}(b)` for cuspidal `w`: nonempty. `None` when `w` is not
/// cuspidal.
pub fn cuspidal_base_case(
    g: &AffineWeylGroup,
    mu: &Coweight,
    w: &WeylElt,
    b: &BasicClassData,
) -> Result<Option<Status>> {
    let x = g.mul(&g.translation(mu), &g.from_finite(w));
    let kx = g.kappa(&x);
    if kx != b.kappa {
        return Err(Error::KappaMismatch {
            x: kx.to_string(),
            b: b.kappa.to_string(),
        });
    }
    Ok(g.weyl().is_cuspidal(w).then_some(Status::Nonempty))
}

/// `1` on positive roots and `0` on negative ones: `I ∩ U_α = U_α(ε^k O)`
/// for the Iwahori in the negative Borel.
fn iwahori_level(g: &AffineWeylGroup, alpha: RootIdx) -> i64 {
    i64::from(g.root_system().is_positive_idx(alpha))
}

/// `k` with `^x I ∩ U_α = U_α(ε^k O)`.
pub fn conjugate_level(g: &AffineWeylGroup, x: &AffineElt, alpha: RootIdx) -> i64 {
    let pre = x.finite().inverse().image(alpha);
    g.root_system().pairing_idx(x.transl(), alpha) + iwahori_level(g, pre)
}

/// `^x I ∩ U_α ⊆ I`.
pub fn root_subgroup_contained(g: &AffineWeylGroup, x: &AffineElt, alpha: RootIdx) -> bool {
    conjugate_level(g, x, alpha) >= iwahori_level(g, alpha)
}

/// If `^x I ∩ U_α ⊆ I ∩ U_α`, `-v^{-1}α` is the simple root `α_j`, and
/// `u^{-1} η_1(x) u ∈ W_{S∖{j}}` for `u = s_α v`, returns `(u, S∖{j})`.
pub fn p_alcove_hypothesis_check(
    g: &AffineWeylGroup,
    x: &AffineElt,
    alpha: RootIdx,
    j: usize,
) -> Option<(WeylElt, NodeSet)> {
    let weyl = g.weyl();
    let rs = g.root_system();
    if j == 0 || j > g.rank() || !root_subgroup_contained(g, x, alpha) {
        return None;
    }
    let v = g.canonical_decomposition(x).v;
    let neg = rs.negate_idx(v.inverse().image(alpha));
    if rs.simple_label(neg) != Some(j) {
        return None;
    }
    let u = weyl.reflection(alpha).mul(&v);
    let mut nodes = rs.finite_nodes();
    nodes.remove(j);
    let inner = u.inverse().mul(x.finite()).mul(&u);
    weyl.support(&inner).is_subset(nodes).then_some((u, nodes))
}

/// `x` is a `P`-alcove for `P = ^u(M_J N_J)`: `x ∈ W~_M` and
/// `^x I ∩ U_β ⊆ I` for every root `β` of `N`.
pub fn is_p_alcove(g: &AffineWeylGroup, x: &AffineElt, u: &WeylElt, nodes: NodeSet) -> bool {
    let weyl = g.weyl();
    let rs = g.root_system();
    let inner = u.inverse().mul(x.finite()).mul(u);
    if !weyl.support(&inner).is_subset(nodes) {
        return false;
    }
    let in_levi = |k: RootIdx| rs.root(k).0.iter().enumerate().all(|(i, &c)| c == 0 || nodes.contains(i + 1));
    (0..rs.num_positive())
        .filter(|&k| !in_levi(k))
        .all(|k| root_subgroup_contained(g, x, u.image(k)))
}

/// Conditions and consequences for the non-equidimensional example
/// `x = v t^μ w` with a simple reflection `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonEquidimReport {
    /// `ℓ(sv) < ℓ(v)` and `ℓ(ws) > ℓ(w)`.
    pub cond1: bool,
    /// `ℓ(wsv) < ℓ(wv) - 1`.
    pub cond2: bool,
    /// `supp(wv) = supp(wsv) = S`.
    pub cond3: bool,
    /// `<μ, α_i> >= 2` for all `i`.
    pub very_regular: bool,
    pub in_affine_weyl: bool,
    pub shrunken: bool,
    pub wv: String,
    pub wsv: String,
    /// `η(x) = η(sxs) = wv` and `η(sx) = wsv`.
    pub eta_values: bool,
    /// `ℓ(sxs) = ℓ(x) - 2`.
    pub drop2: bool,
    pub d_x: HalfInt,
    pub d_sx: HalfInt,
    /// `d(sx) + 1 < d(x)`: the open part is too small.
    pub strict: bool,
    pub closed_child: String,
    pub open_child: String,
    /// The reduction tree of `x` splits first at `s`; `None` when no tree
    /// was built.
    pub tree_splits_at_s: Option<bool>,
}

impl NonEquidimReport {
    pub fn conditions_hold(&self) -> bool {
        self.cond1 && self.cond2 && self.cond3
    }

    /// Names of the failing conditions.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.cond1, "(1) ℓ(sv) < ℓ(v), ℓ(ws) > ℓ(w)"),
            (self.cond2, "(2) ℓ(wsv) < ℓ(wv) - 1"),
            (self.cond3, "(3) supp(wv) = supp(wsv) = S"),
            (self.very_regular, "μ very regular"),
            (self.in_affine_weyl, "x ∈ W_a"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

pub const VERY_REGULAR_THRESHOLD: i64 = 2;

pub fn non_equidim_witness(
    g: &AffineWeylGroup,
    v: &WeylElt,
    w: &WeylElt,
    s: usize,
    mu: &Coweight,
    tree_budget: usize,
) -> Result<NonEquidimReport> {
    let weyl = g.weyl();
    let rs = g.root_system();
    if s == 0 || s > g.rank() {
        return Err(Error::IndexOutOfRange {
            index: s,
            rank: g.rank(),
        });
    }
    if mu.0.len() != g.rank() {
        return Err(Error::WrongRank {
            expected: g.rank(),
            got: mu.0.len(),
        });
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    let len = |u: &WeylElt| weyl.length(u);
    let ss = weyl.s(s);
    let wv = w.mul(v);
    let wsv = w.mul(ss).mul(v);
    let full = rs.finite_nodes();
    let x = g.mul(
        &g.mul(&g.from_finite(v), &g.translation(mu)),
        &g.from_finite(w),
    );
    let sx = g.mul(g.s(s), &x);
    let sxs = g.conj_simple(s, &x);
    let tree_splits_at_s = (tree_budget > 0).then(|| {
        let tree = build_reduction_tree(g, &x, tree_budget);
        let first: Vec<&MoveKind> = tree.root().edges.iter().map(|e| &e.kind).collect();
        first == [&MoveKind::Closed { node: s }, &MoveKind::Open { node: s }]
    });
    let d_x = g.virtual_dim(&x, 0);
    let d_sx = g.virtual_dim(&sx, 0);
    Ok(NonEquidimReport {
        cond1: len(&ss.mul(v)) < len(v) && len(&w.mul(ss)) > len(w),
        cond2: len(&wsv) + 1 < len(&wv),
        cond3: weyl.support(&wv) == full && weyl.support(&wsv) == full,
        very_regular: mu.0.iter().all(|&c| c >= VERY_REGULAR_THRESHOLD),
        in_affine_weyl: g.is_in_affine_weyl(&x),
        shrunken: g.is_shrunken(&x),
        wv: weyl.format(&wv),
        wsv: weyl.format(&wsv),
        eta_values: g.eta(&x) == wv && g.eta(&sxs) == wv && g.eta(&sx) == wsv,
        drop2: classify_move(g, &x, s) == MoveCase::Drop2,
        d_x,
        d_sx,
        strict: d_sx + HalfInt::from_int(1) < d_x,
        closed_child: g.format(&sxs),
        open_child: g.format(&sx),
        tree_splits_at_s,
    })
}
