//! Folds over HFS trees and directly over codes, plus functor-style
//! transport of operations between the number side and the set side.
//!
//! `nat_fold` is the deforested form of `hfold`: it produces the value that
//! `hfold` would compute on `nat_to_hfs(n, ulimit)` while recursing over the
//! binary decomposition of `n - ulimit`, never materializing the tree.

use num_traits::One;

use crate::bitset::{self, Nat};
use crate::error::Result;
use crate::hfs::{hfs_to_nat, nat_to_hfs, pure_members, Hfs, HfsView, Ulimit};

/// An algebra for consuming an HFS tree: one case per node shape.
pub trait FoldAlgebra {
    type Output;

    /// Value at an urelement leaf.
    fn leaf(&self, urelement: &Nat) -> Result<Self::Output>;

    /// Combination of member results at a set node (empty at `{}`).
    fn combine(&self, members: Vec<Self::Output>) -> Result<Self::Output>;
}

/// Structural fold over an HFS tree.
pub fn hfold<A: FoldAlgebra>(algebra: &A, h: &Hfs) -> Result<A::Output> {
    match h.view() {
        HfsView::Urelement(k) => algebra.leaf(k),
        HfsView::Set(members) => {
            let results = members
                .iter()
                .map(|m| hfold(algebra, m))
                .collect::<Result<Vec<_>>>()?;
            algebra.combine(results)
        }
    }
}

/// Fold over the virtual tree of `n`: equal to
/// `hfold(algebra, nat_to_hfs(n, ulimit))` for every algebra.
pub fn nat_fold<A: FoldAlgebra>(algebra: &A, ulimit: &Ulimit, n: &Nat) -> Result<A::Output> {
    if ulimit.admits(n) {
        algebra.leaf(n)
    } else {
        let shifted = n - ulimit.as_nat();
        let results = bitset::bit_elements(&shifted)
            .map(|x| nat_fold(algebra, ulimit, &x))
            .collect::<Result<Vec<_>>>()?;
        algebra.combine(results)
    }
}

/// Node count of the fully expanded tree: 1 per urelement leaf, 1 plus the
/// members' total per set node.
pub struct SizeAlgebra;

impl FoldAlgebra for SizeAlgebra {
    type Output = Nat;

    fn leaf(&self, _urelement: &Nat) -> Result<Nat> {
        Ok(Nat::one())
    }

    fn combine(&self, members: Vec<Nat>) -> Result<Nat> {
        Ok(members.into_iter().sum::<Nat>() + Nat::one())
    }
}

/// Nesting depth: urelement leaves count 0, a set node counts 1 plus its
/// deepest member (so `{}` has depth 1).
pub struct DepthAlgebra;

impl FoldAlgebra for DepthAlgebra {
    type Output = Nat;

    fn leaf(&self, _urelement: &Nat) -> Result<Nat> {
        Ok(Nat::from(0u8))
    }

    fn combine(&self, members: Vec<Nat>) -> Result<Nat> {
        Ok(members.into_iter().max().unwrap_or_default() + Nat::one())
    }
}

/// Structural size of the virtual tree of `n`: `nat_fold` with
/// [`SizeAlgebra`]. Always at least 1.
pub fn nat_size(n: &Nat, ulimit: &Ulimit) -> Nat {
    nat_fold(&SizeAlgebra, ulimit, n).expect("the size algebra is total")
}

/// Transports a numeric operation to the set side: encode the arguments in
/// the pure universe, apply `op`, decode the result.
pub fn lift_to_nat<F>(op: F, args: &[Hfs]) -> Result<Hfs>
where
    F: FnOnce(&[Nat]) -> Result<Nat>,
{
    let u = Ulimit::pure();
    let ns = args
        .iter()
        .map(|h| hfs_to_nat(h, &u))
        .collect::<Result<Vec<_>>>()?;
    Ok(nat_to_hfs(&op(&ns)?, &u))
}

/// Transports a set operation to the number side: decode the arguments in
/// the pure universe, apply `op`, encode the result.
pub fn lift_to_hfs<F>(op: F, args: &[Nat]) -> Result<Nat>
where
    F: FnOnce(&[Hfs]) -> Result<Hfs>,
{
    let u = Ulimit::pure();
    let hs: Vec<Hfs> = args.iter().map(|n| nat_to_hfs(n, &u)).collect();
    hfs_to_nat(&op(&hs)?, &u)
}

fn merge_union(xs: &[Hfs], ys: &[Hfs]) -> Vec<Hfs> {
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => {
                out.push(xs[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(ys[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(xs[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(xs[i..].iter().cloned());
    out.extend(ys[j..].iter().cloned());
    out
}

fn merge_intersection(xs: &[Hfs], ys: &[Hfs]) -> Vec<Hfs> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(xs[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn merge_difference(xs: &[Hfs], ys: &[Hfs]) -> Vec<Hfs> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() {
        if j == ys.len() {
            out.extend(xs[i..].iter().cloned());
            break;
        }
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => {
                out.push(xs[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Set union transported to codes; agrees with bitwise or.
pub fn nat_union(a: &Nat, b: &Nat) -> Result<Nat> {
    lift_to_hfs(
        |hs| {
            Ok(Hfs::from_sorted(merge_union(
                pure_members(&hs[0]),
                pure_members(&hs[1]),
            )))
        },
        &[a.clone(), b.clone()],
    )
}

/// Set intersection transported to codes; agrees with bitwise and.
pub fn nat_intersection(a: &Nat, b: &Nat) -> Result<Nat> {
    lift_to_hfs(
        |hs| {
            Ok(Hfs::from_sorted(merge_intersection(
                pure_members(&hs[0]),
                pure_members(&hs[1]),
            )))
        },
        &[a.clone(), b.clone()],
    )
}

/// Set difference transported to codes; agrees with bitwise and-not.
pub fn nat_difference(a: &Nat, b: &Nat) -> Result<Nat> {
    lift_to_hfs(
        |hs| {
            Ok(Hfs::from_sorted(merge_difference(
                pure_members(&hs[0]),
                pure_members(&hs[1]),
            )))
        },
        &[a.clone(), b.clone()],
    )
}

/// Adjoins the set coded by `a` as an element of the set coded by `s`:
/// the result is `s` with bit `a` set.
pub fn nat_adduction(a: &Nat, s: &Nat) -> Result<Nat> {
    lift_to_hfs(
        |hs| {
            Ok(Hfs::from_sorted(merge_union(
                pure_members(&hs[1]),
                std::slice::from_ref(&hs[0]),
            )))
        },
        &[a.clone(), s.clone()],
    )
}
