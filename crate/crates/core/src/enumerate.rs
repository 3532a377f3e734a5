//! Enumeration of `W_a` and `W~` by length, in deterministic order.

use std::collections::HashSet;

use crate::affine_weyl::{AffineElt, AffineWeylGroup};

/// Elements of `W_a` of length exactly `0..=max_len`, layer by layer.
pub fn affine_layers(g: &AffineWeylGroup, max_len: usize) -> Vec<Vec<AffineElt>> {
    let mut layers = vec![vec![g.identity()]];
    for len in 1..=max_len {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for x in &layers[len - 1] {
            for i in 0..=g.rank() {
                let y = g.mul(x, g.s(i));
                if g.length(&y) == len && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        sort_canonical(g, &mut next);
        layers.push(next);
    }
    layers
}

/// Elements of `W_a` with `ℓ(x) <= max_len`, sorted by length and canonical word.
pub fn affine_ball(g: &AffineWeylGroup, max_len: usize) -> Vec<AffineElt> {
    affine_layers(g, max_len).into_iter().flatten().collect()
}

/// Elements of `W~` with `ℓ(x) <= max_len`: the ball of `W_a` times each
/// length-zero element.
pub fn extended_ball(g: &AffineWeylGroup, max_len: usize) -> Vec<AffineElt> {
    let mut all: Vec<AffineElt> = affine_ball(g, max_len)
        .iter()
        .flat_map(|x| g.omega_elements().iter().map(move |tau| g.mul(x, tau)))
        .collect();
    sort_canonical(g, &mut all);
    all
}

pub fn sort_canonical(g: &AffineWeylGroup, elts: &mut [AffineElt]) {
    elts.sort_by_cached_key(|x| g.sort_key(x));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layer_sizes_a2() {
        let g = AffineWeylGroup::new("A2".parse().unwrap());
        let sizes: Vec<usize> = affine_layers(&g, 5).iter().map(|l| l.len()).collect();
        // Poincaré series of affine A2: 1, 3, 6, 9, 12, 15
        assert_eq!(sizes, vec![1, 3, 6, 9, 12, 15]);
        assert_eq!(extended_ball(&g, 0).len(), 3);
    }

    #[test]
    fn a1_is_infinite_dihedral() {
        let g = AffineWeylGroup::new("A1".parse().unwrap());
        let sizes: Vec<usize> = affine_layers(&g, 6).iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn ordering_is_deterministic() {
        let g = AffineWeylGroup::new("B2".parse().unwrap());
        let a = extended_ball(&g, 4);
        let b = extended_ball(&g, 4);
        assert_eq!(a, b);
        assert!(a.windows(2).all(|p| g.length(&p[0]) <= g.length(&p[1])));
    }
}
