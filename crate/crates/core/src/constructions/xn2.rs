//! The graphs `X(n,2)` and their regular group `⟨α, β, γ⟩`.
//!
//! Vertex `x_k^r` (`k ∈ Z_2n`, `r ∈ Z_2`) is index `2k + r`.

use crate::constructions::{cayley_graph, FiniteGroup};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::PermutationGroup;
use crate::perm::Permutation;

fn check(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("X(n,2) needs n >= 2, got {n}")));
    }
    Ok(())
}

pub fn vertex(n: usize, k: usize, r: usize) -> usize {
    2 * (k % (2 * n)) + r
}

pub fn x_n_2(n: usize) -> Result<Graph> {
    check(n)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for r in 0..2 {
            edges.push((vertex(n, 2 * i, r), vertex(n, 2 * i + 1, r)));
            for s in 0..2 {
                edges.push((vertex(n, 2 * i + 1, r), vertex(n, 2 * i + 2, s)));
            }
        }
    }
    Graph::from_edges(4 * n, &edges)
}

fn vertex_map(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Permutation {
    let mut images = vec![0; 4 * n];
    for k in 0..2 * n {
        for r in 0..2 {
            let (k2, r2) = f(k, r);
            images[vertex(n, k, r)] = vertex(n, k2, r2);
        }
    }
    Permutation::from_images(images).expect("vertex maps are bijections")
}

/// `α: x_k^r ↦ x_{k+2}^r`.
pub fn alpha(n: usize) -> Result<Permutation> {
    check(n)?;
    Ok(vertex_map(n, |k, r| (k + 2, r)))
}

/// `β: x_k^r ↦ x_k^{r+1}`.
pub fn beta(n: usize) -> Result<Permutation> {
    check(n)?;
    Ok(vertex_map(n, |k, r| (k, 1 - r)))
}

/// `γ: x_k^r ↦ x_{2n-1-k}^r`.
pub fn gamma(n: usize) -> Result<Permutation> {
    check(n)?;
    Ok(vertex_map(n, move |k, r| (2 * n - 1 - k, r)))
}

pub fn x_n_2_regular_group(n: usize) -> Result<PermutationGroup> {
    PermutationGroup::new(4 * n, vec![alpha(n)?, beta(n)?, gamma(n)?])
}

/// `X(n,2)` rebuilt as `Cay(⟨α,β,γ⟩, S)` where `S` holds the elements
/// carrying vertex 0 to its neighbours. Element `g` corresponds to vertex
/// `0^g`, which is returned as the second value.
pub fn x_n_2_as_cayley(n: usize) -> Result<(Graph, Permutation)> {
    let x = x_n_2(n)?;
    let g = FiniteGroup::new(x_n_2_regular_group(n)?)?;
    let s: Vec<usize> = (0..g.order())
        .filter(|&i| x.has_edge(0, g.element(i).apply(0)))
        .collect();
    let cay = cayley_graph(&g, &s)?;
    let to_vertex = Permutation::from_images((0..g.order()).map(|i| g.element(i).apply(0)).collect())?;
    Ok((cay, to_vertex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn orders_and_degrees() {
        for n in 2..10 {
            let x = x_n_2(n).unwrap();
            assert_eq!(x.n(), 4 * n);
            assert!(x.is_cubic());
            assert!(x.is_connected());
        }
        assert!(x_n_2(1).is_err());
    }

    #[test]
    fn girth_four() {
        for n in 3..10 {
            assert_eq!(x_n_2(n).unwrap().girth(), Girth::Finite(4));
        }
    }

    #[test]
    fn regular_dihedral_group() {
        for n in 2..10 {
            let x = x_n_2(n).unwrap();
            let g = x_n_2_regular_group(n).unwrap();
            assert_eq!(g.order(), 4 * n as u64);
            assert!(g.is_regular());
            for s in g.generators() {
                assert!(x.is_automorphism(s));
            }
            let (b, c) = (beta(n).unwrap(), gamma(n).unwrap());
            assert!(b.then(&b).is_identity());
            assert!(c.then(&c).is_identity());
            assert_eq!(alpha(n).unwrap().order(), n as u64);
            if n >= 3 {
                assert!(g.derived_subgroup().order() > 1);
            }
        }
    }

    #[test]
    fn cayley_reconstruction_is_an_isomorphism() {
        for n in [3, 5, 6] {
            let x = x_n_2(n).unwrap();
            let (cay, map) = x_n_2_as_cayley(n).unwrap();
            assert_eq!(cay.relabel(&map).unwrap(), x);
        }
    }
}
