//! The center of a monomial algebra and its structure constants.
//!
//! `z` is central iff it commutes with every generator. For a monomial
//! algebra each coordinate of `z u_g - u_g z` involves at most two
//! coordinates of `z`, so the equations are solved with a weighted
//! union-find: `z_x = w(x) z_root`. Components carrying an inconsistent
//! cycle are forced to zero, and every other component contributes one
//! basis vector (a twisted class sum).

use crate::error::{Error, Result};
use crate::ff::PrimeField;
use crate::linalg;

use super::algebra::ExplicitAlgebra;

struct WeightedUnionFind {
    field: PrimeField,
    parent: Vec<usize>,
    /// `z_x = weight[x] z_{parent[x]}`.
    weight: Vec<u64>,
    dead: Vec<bool>,
}

impl WeightedUnionFind {
    fn new(field: PrimeField, n: usize) -> Self {
        Self { field, parent: (0..n).collect(), weight: vec![1; n], dead: vec![false; n] }
    }

    /// Root of `x` and `w` with `z_x = w z_root`.
    fn find(&mut self, x: usize) -> (usize, u64) {
        let mut path = Vec::new();
        let mut cur = x;
        while self.parent[cur] != cur {
            path.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // Compress from the top down so each weight is relative to the root.
        for &node in path.iter().rev() {
            let p = self.parent[node];
            if p != root {
                self.weight[node] = self.field.mul(self.weight[node], self.weight[p]);
            }
            self.parent[node] = root;
        }
        (root, if x == root { 1 } else { self.weight[x] })
    }

    /// Imposes `z_u = q z_v`.
    fn relate(&mut self, u: usize, v: usize, q: u64) {
        let f = self.field;
        let (ru, wu) = self.find(u);
        let (rv, wv) = self.find(v);
        if ru == rv {
            if wu != f.mul(q, wv) {
                self.dead[ru] = true;
            }
            return;
        }
        // wu z_ru = q wv z_rv.
        self.parent[ru] = rv;
        self.weight[ru] = f.mul(f.mul(q, wv), f.inv(wu).expect("weights are nonzero"));
        self.dead[rv] |= self.dead[ru];
    }
}

/// Basis of the center as twisted class sums, each normalized to 1 at its
/// smallest index (its representative). Sorted by representative, hence
/// already in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Center {
    pub basis: Vec<Vec<(usize, u64)>>,
    pub representatives: Vec<usize>,
    /// Index of the class sum `u_identity`, which is the unit.
    pub unit: usize,
}

impl Center {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dense(&self, n: usize) -> Vec<Vec<u64>> {
        self.basis
            .iter()
            .map(|v| {
                let mut row = vec![0; n];
                for &(x, c) in v {
                    row[x] = c;
                }
                row
            })
            .collect()
    }
}

/// For each `y`, the unique `x` with `u_x u_g` a multiple of `u_y` (when the
/// right multiplication by `u_g` permutes the basis).
fn inverse_permutation(images: impl Iterator<Item = usize>, n: usize) -> Result<Vec<usize>> {
    let mut inv = vec![usize::MAX; n];
    for (x, y) in images.enumerate() {
        if inv[y] != usize::MAX {
            return Err(Error::Internal(format!("multiplication by a generator is not injective at u_{y}")));
        }
        inv[y] = x;
    }
    Ok(inv)
}

pub fn center(alg: &ExplicitAlgebra) -> Result<Center> {
    let n = alg.dim();
    let f = alg.field();
    let mut uf = WeightedUnionFind::new(f, n);
    for &g in alg.generators() {
        let right = inverse_permutation((0..n).map(|x| alg.product(x, g).1), n)?;
        let left = inverse_permutation((0..n).map(|x| alg.product(g, x).1), n)?;
        for y in 0..n {
            // (z u_g)_y = z_u c(u, g) and (u_g z)_y = z_v c(g, v).
            let (u, v) = (right[y], left[y]);
            let cu = alg.product(u, g).0;
            let cv = alg.product(g, v).0;
            uf.relate(u, v, f.mul(cv, f.inv(cu).expect("nonzero scalar")));
        }
    }
    let mut members: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for x in 0..n {
        let (root, w) = uf.find(x);
        members[root].push((x, w));
    }
    let mut classes: Vec<Vec<(usize, u64)>> = Vec::new();
    for root in 0..n {
        if uf.dead[root] || members[root].is_empty() {
            continue;
        }
        let comp = &members[root];
        // Members are pushed in increasing index order.
        let scale = f.inv(comp[0].1).expect("nonzero weight");
        classes.push(comp.iter().map(|&(x, w)| (x, f.mul(w, scale))).collect());
    }
    classes.sort_by_key(|c| c[0].0);
    let representatives: Vec<usize> = classes.iter().map(|c| c[0].0).collect();
    let unit = classes
        .iter()
        .position(|c| c.len() == 1 && c[0].0 == alg.identity())
        .ok_or_else(|| Error::Internal("the unit is not an isolated central class".into()))?;
    Ok(Center { basis: classes, representatives, unit })
}

/// Center as the dense nullspace of the commutator equations; `O(N^3)`.
pub fn center_dense(alg: &ExplicitAlgebra) -> Vec<Vec<u64>> {
    let n = alg.dim();
    let f = alg.field();
    let mut rows = Vec::new();
    for &g in alg.generators() {
        let mut eqs = vec![vec![0u64; n]; n];
        for x in 0..n {
            let (c, y) = alg.product(x, g);
            eqs[y][x] = f.add(eqs[y][x], c);
            let (c, y) = alg.product(g, x);
            eqs[y][x] = f.sub(eqs[y][x], c);
        }
        rows.extend(eqs);
    }
    linalg::nullspace(&f, rows, n)
}

/// Multiplication in `Z` written in the class-sum basis. `products[i * k + j]`
/// lists the nonzero coordinates of `z_i z_j`.
#[derive(Debug, Clone)]
pub struct CenterAlgebra {
    pub field: PrimeField,
    pub center: Center,
    products: Vec<Vec<(usize, u64)>>,
}

impl CenterAlgebra {
    pub fn new(alg: &ExplicitAlgebra, center: Center) -> Result<Self> {
        let n = alg.dim();
        let k = center.dim();
        let f = alg.field();
        // Class and weight of each index; dead indices have no class.
        let mut class_of = vec![usize::MAX; n];
        let mut weight_of = vec![0u64; n];
        for (i, class) in center.basis.iter().enumerate() {
            for &(x, w) in class {
                class_of[x] = i;
                weight_of[x] = w;
            }
        }
        let mut products = Vec::with_capacity(k * k);
        let mut buf = vec![0u64; n];
        for i in 0..k {
            for j in 0..k {
                buf.iter_mut().for_each(|c| *c = 0);
                alg.mul_sparse(&center.basis[i], &center.basis[j], &mut buf);
                let dense: Vec<u64> = center.representatives.iter().map(|&r| buf[r]).collect();
                // The product must be central, i.e. equal to this combination.
                for (x, &c) in buf.iter().enumerate() {
                    let expected = if class_of[x] == usize::MAX { 0 } else { f.mul(dense[class_of[x]], weight_of[x]) };
                    if c != expected {
                        return Err(Error::Internal(format!("z_{i} z_{j} is not central at u_{x}")));
                    }
                }
                products.push(dense.iter().enumerate().filter(|(_, &c)| c != 0).map(|(t, &c)| (t, c)).collect());
            }
        }
        Ok(Self { field: f, center, products })
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn unit(&self) -> Vec<u64> {
        let mut e = vec![0; self.dim()];
        e[self.center.unit] = 1;
        e
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = self.field;
        let k = self.dim();
        let mut out = vec![0u64; k];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &c)| c != 0) {
                let s = f.mul(ai, bj);
                for &(t, c) in &self.products[i * k + j] {
                    out[t] = f.add(out[t], f.mul(s, c));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut result = self.unit();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Expands `Z`-coordinates into algebra coordinates.
    pub fn to_algebra(&self, a: &[u64], n: usize) -> Vec<u64> {
        let f = self.field;
        let mut out = vec![0u64; n];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for &(x, c) in &self.center.basis[i] {
                out[x] = f.add(out[x], f.mul(ai, c));
            }
        }
        out
    }
}
