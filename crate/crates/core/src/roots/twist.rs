//! Automorphisms of Δ obtained by cutting the Dynkin diagram at vᵢ and
//! regluing the piece containing v1 through the affine vertex.

use std::collections::{BTreeSet, VecDeque};

use super::{positive_roots_of, Family, Root, RootSystem};
use crate::error::{Error, Result};

/// A root-system automorphism stored as images of the simple roots plus a
/// permutation table on `RootSystem::roots()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinTwist {
    vertex: usize,
    images: Vec<Root>,
    permutation: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Simple(usize),
    Affine,
}

impl DynkinTwist {
    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// σ(αⱼ) for j = 1..n.
    pub fn images(&self) -> &[Root] {
        &self.images
    }

    /// σ(β) = Σ βʲ σ(αⱼ); defined on the whole lattice.
    pub fn apply(&self, beta: &Root) -> Root {
        let n = self.images.len();
        assert_eq!(beta.rank(), n, "rank mismatch");
        let mut out = Root::zero(n);
        for (c, img) in beta.coeffs().iter().zip(&self.images) {
            if *c != 0 {
                out = out + (*c * img);
            }
        }
        out
    }

    /// `permutation()[k]` is the index of σ(roots[k]).
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }
}

impl RootSystem {
    /// The twist at vertex vᵢ of an E-type diagram, i ∉ {1, 2, 8}.
    pub fn dynkin_twist(&self, i: usize) -> Result<DynkinTwist> {
        if self.family != Family::E {
            return Err(Error::UnsupportedSystem { family: self.family, rank: self.rank });
        }
        if !(3..=self.rank).contains(&i) || i == 8 {
            return Err(Error::InvalidTwistVertex(i));
        }
        let n = self.rank;
        let adjacent = |a: usize, b: usize| a != b && self.cartan[a - 1][b - 1] != 0;

        // 1. cut the edge (vᵢ, vᵢ₊₁); D′ is the piece holding v1
        let cut = |a: usize, b: usize| (a.min(b), a.max(b)) == (i, i + 1);
        let mut in_d1 = vec![false; n + 1];
        in_d1[1] = true;
        let mut queue = VecDeque::from([1]);
        while let Some(v) = queue.pop_front() {
            for w in 1..=n {
                if adjacent(v, w) && !cut(v, w) && !in_d1[w] {
                    in_d1[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let d1: Vec<usize> = (1..=n).filter(|&v| in_d1[v]).collect();
        let d2: Vec<usize> = (1..=n).filter(|&v| !in_d1[v]).collect();

        // 2. the affine vertex of D′, decorated with the lowest root of Δ(D′)
        let sub_cartan: Vec<Vec<i32>> =
            d1.iter().map(|&a| d1.iter().map(|&b| self.cartan[a - 1][b - 1]).collect()).collect();
        let sub_high = positive_roots_of(&sub_cartan).pop().expect("nonempty");
        let mut lowest = Root::zero(n);
        for (k, &v) in d1.iter().enumerate() {
            lowest.0[v - 1] = -sub_high.coeffs()[k];
        }

        // 3-5. negate the D̂′ decorations, drop vᵢ, reattach D″ at the affine vertex
        let decoration = |node: Node| -> Root {
            match node {
                Node::Affine => -&lowest,
                Node::Simple(v) if in_d1[v] => -&self.simple_root(v),
                Node::Simple(v) => self.simple_root(v),
            }
        };
        let new_adjacent = |x: Node, y: Node| -> bool {
            match (x, y) {
                (Node::Simple(a), Node::Simple(b)) => adjacent(a, b) && !cut(a, b),
                (Node::Affine, Node::Simple(v)) | (Node::Simple(v), Node::Affine) => {
                    if in_d1[v] {
                        self.inner(&lowest, &self.simple_root(v)) != 0
                    } else {
                        v == i + 1
                    }
                }
                (Node::Affine, Node::Affine) => false,
            }
        };

        // φ: D → D̃ fixes D″ pointwise and sends vᵢ to the affine vertex
        let mut phi: Vec<Option<Node>> = vec![None; n + 1];
        phi[i] = Some(Node::Affine);
        for &v in &d2 {
            phi[v] = Some(Node::Simple(v));
        }
        let free: Vec<usize> = d1.iter().copied().filter(|&v| v != i).collect();
        let targets: Vec<Node> = free.iter().map(|&v| Node::Simple(v)).collect();
        let mut solutions = Vec::new();
        search_isomorphisms(&free, 0, &targets, &mut phi, &adjacent, &new_adjacent, n, &mut solutions);
        debug_assert_eq!(solutions.len(), 1, "twist at v{i} should be unique");
        let phi = solutions.into_iter().next().ok_or(Error::InvalidTwistVertex(i))?;

        let images: Vec<Root> = (1..=n).map(|j| decoration(phi[j].expect("total"))).collect();
        for a in 0..n {
            for b in 0..n {
                if self.inner(&images[a], &images[b]) != self.cartan[a][b] {
                    return Err(Error::InvalidImages(format!("twist v{i}")));
                }
            }
        }
        let mut twist = DynkinTwist { vertex: i, images, permutation: Vec::new() };
        twist.permutation = self
            .roots
            .iter()
            .map(|r| self.root_index(&twist.apply(r)).ok_or_else(|| Error::NotARoot(r.to_string())))
            .collect::<Result<_>>()?;
        Ok(twist)
    }
}

#[allow(clippy::too_many_arguments)]
fn search_isomorphisms(
    free: &[usize],
    k: usize,
    targets: &[Node],
    phi: &mut Vec<Option<Node>>,
    old_adj: &dyn Fn(usize, usize) -> bool,
    new_adj: &dyn Fn(Node, Node) -> bool,
    n: usize,
    out: &mut Vec<Vec<Option<Node>>>,
) {
    if k == free.len() {
        out.push(phi.clone());
        return;
    }
    let v = free[k];
    let used: BTreeSet<usize> = phi
        .iter()
        .filter_map(|x| match x {
            Some(Node::Simple(w)) => Some(*w),
            _ => None,
        })
        .collect();
    for &t in targets {
        let Node::Simple(tw) = t else { continue };
        if used.contains(&tw) {
            continue;
        }
        let consistent = (1..=n).all(|u| match phi[u] {
            Some(image) if u != v => old_adj(u, v) == new_adj(image, t),
            _ => true,
        });
        if consistent {
            phi[v] = Some(t);
            search_isomorphisms(free, k + 1, targets, phi, old_adj, new_adj, n, out);
            phi[v] = None;
        }
    }
}
