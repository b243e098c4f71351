//! Finite acyclic quivers, the Euler form and its derived invariants.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Rational};

/// A finite quiver without oriented cycles. Arrow `k` is `arrows[k] = (source, target)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for (k, &(s, t)) in arrows.iter().enumerate() {
            if s >= vertices || t >= vertices {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {k} = ({s},{t}) out of range for {vertices} vertices"
                )));
            }
        }
        let q = Quiver { vertices, arrows };
        if q.topological_order().is_none() {
            return Err(Error::InvalidQuiver("oriented cycle".into()));
        }
        Ok(q)
    }

    /// Two vertices, two arrows `a, b: 0 → 1`.
    pub fn kronecker() -> Self {
        Quiver {
            vertices: 2,
            arrows: vec![(0, 1), (0, 1)],
        }
    }

    pub fn is_kronecker(&self) -> bool {
        *self == Quiver::kronecker()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn opposite(&self) -> Self {
        Quiver {
            vertices: self.vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.vertices);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        (order.len() == self.vertices).then_some(order)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.arrows {
                let next = if s == v {
                    t
                } else if t == v {
                    s
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// All paths `from → to` as arrow sequences in traversal order.
    /// The trivial path at a vertex is the empty sequence.
    pub fn paths(&self, from: usize, to: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_paths(from, to, &mut current, &mut out);
        out
    }

    fn extend_paths(&self, at: usize, to: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == to {
            out.push(current.clone());
        }
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            if s == at {
                current.push(k);
                self.extend_paths(t, to, current, out);
                current.pop();
            }
        }
    }

    /// Index of every path `from → to`, keyed by its arrow sequence.
    pub fn path_index(&self, from: usize, to: usize) -> HashMap<Vec<usize>, usize> {
        self.paths(from, to)
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect()
    }

    /// Dimension vector of the indecomposable projective at `v`.
    pub fn projective_dims(&self, v: usize) -> Vec<usize> {
        (0..self.vertices).map(|w| self.paths(v, w).len()).collect()
    }

    /// Dimension vector of the indecomposable injective at `v`.
    pub fn injective_dims(&self, v: usize) -> Vec<usize> {
        (0..self.vertices).map(|w| self.paths(w, v).len()).collect()
    }

    fn check_len(&self, d: &[i64]) -> Result<()> {
        if d.len() != self.vertices {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector of length {} for {} vertices",
                d.len(),
                self.vertices
            )));
        }
        Ok(())
    }

    /// Matrix `C` with `⟨d, e⟩ = dᵀ C e`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; self.vertices]; self.vertices];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            c[s][t] -= 1;
        }
        c
    }

    /// `Σ dᵢeᵢ − Σ_{a: i→j} dᵢeⱼ`
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> Result<i64> {
        self.check_len(d)?;
        self.check_len(e)?;
        let diag: i64 = d.iter().zip(e).map(|(x, y)| x * y).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| d[s] * e[t]).sum();
        Ok(diag - off)
    }

    pub fn quadratic_form(&self, d: &[i64]) -> Result<i64> {
        self.euler_form(d, d)
    }

    fn symmetrized(&self) -> Matrix<Rational> {
        let c = self.euler_matrix();
        Matrix::from_fn(self.vertices, self.vertices, |i, j| {
            Rational::from(c[i][j] + c[j][i])
        })
    }

    /// Positive semidefinite with a one-dimensional radical, connected.
    pub fn is_extended_dynkin(&self) -> bool {
        self.is_connected() && psd_corank(&self.symmetrized()) == Some(1)
    }

    /// The minimal positive radical vector of the quadratic form.
    pub fn null_root(&self) -> Result<Vec<i64>> {
        if !self.is_extended_dynkin() {
            return Err(Error::UnsupportedQuiver(
                "quadratic form is not positive semidefinite of corank one".into(),
            ));
        }
        let kernel = self.symmetrized().kernel_basis();
        let v = &kernel[0];
        let lcm = v
            .iter()
            .fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let g = ints
            .iter()
            .fold(num_bigint::BigInt::from(0), |acc, x| acc.gcd(x));
        let mut out: Vec<i64> = ints
            .iter()
            .map(|x| i64::try_from(x / &g).expect("null root fits in i64"))
            .collect();
        if out.iter().any(|&x| x < 0) {
            out.iter_mut().for_each(|x| *x = -*x);
        }
        if out.iter().any(|&x| x <= 0) {
            return Err(Error::UnsupportedQuiver("radical vector is not positive".into()));
        }
        Ok(out)
    }

    /// Sign and divisor of the defect: `∂(d) = sign · ⟨δ, d⟩ / divisor`.
    pub fn defect_normalization(&self) -> Result<(i64, i64)> {
        let delta = self.null_root()?;
        let values: Vec<i64> = (0..self.vertices)
            .map(|v| {
                let p: Vec<i64> = self.projective_dims(v).iter().map(|&x| x as i64).collect();
                self.euler_form(&delta, &p)
            })
            .collect::<Result<_>>()?;
        let sign = if values.iter().any(|&x| x > 0) { -1 } else { 1 };
        let divisor = values.iter().fold(0i64, |acc, &x| acc.gcd(&x)).max(1);
        Ok((sign, divisor))
    }

    pub fn defect(&self, d: &[i64]) -> Result<i64> {
        self.check_len(d)?;
        let (sign, divisor) = self.defect_normalization()?;
        let delta = self.null_root()?;
        Ok(sign * self.euler_form(&delta, d)? / divisor)
    }

    /// The matrix `Φ = −C⁻¹Cᵀ`, so that `⟨e, d⟩ = −⟨d, Φe⟩`.
    pub fn coxeter_matrix(&self) -> Vec<Vec<i64>> {
        let c = self.euler_matrix();
        let cm = Matrix::from_fn(self.vertices, self.vertices, |i, j| Rational::from(c[i][j]));
        let inv = cm.inverse().expect("Euler matrix of an acyclic quiver is unitriangular");
        let phi = inv.mul(&cm.transpose()).neg();
        (0..self.vertices)
            .map(|i| {
                (0..self.vertices)
                    .map(|j| {
                        let x = phi.get(i, j);
                        assert!(x.is_integer());
                        i64::try_from(x.numer().clone()).expect("small entries")
                    })
                    .collect()
            })
            .collect()
    }

    pub fn coxeter_transform(&self, d: &[i64]) -> Result<Vec<i64>> {
        self.check_len(d)?;
        let phi = self.coxeter_matrix();
        Ok(phi
            .iter()
            .map(|row| row.iter().zip(d).map(|(a, b)| a * b).sum())
            .collect())
    }
}

/// Corank of a symmetric rational matrix if it is positive semidefinite.
fn psd_corank(m: &Matrix<Rational>) -> Option<usize> {
    let mut m = m.clone();
    let n = m.rows();
    let mut active: Vec<usize> = (0..n).collect();
    let mut positive = 0;
    loop {
        if active.iter().any(|&i| m.get(i, i).is_negative()) {
            return None;
        }
        let Some(pos) = active.iter().position(|&i| !m.get(i, i).is_zero()) else {
            let all_zero = active
                .iter()
                .all(|&i| active.iter().all(|&j| m.get(i, j).is_zero()));
            return all_zero.then_some(n - positive);
        };
        let p = active.remove(pos);
        let pivot = m.get(p, p).clone();
        for &i in &active {
            for &j in &active {
                let v = m.get(i, j) - &(m.get(i, p) * m.get(p, j)).checked_div(&pivot).unwrap();
                m.set(i, j, v);
            }
        }
        positive += 1;
    }
}
