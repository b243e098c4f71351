use super::{Rep, RepMap};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix};

/// Relation matrix of `Y ⊗ C` for `Y` over the opposite quiver.
///
/// Columns live in `⊕_i Y_i ⊗ C_i` (basis `y ⊗ c` at offset `y·dim C_i + c`);
/// for every arrow `a: i → j` and basis vectors `y ∈ Y_j`, `c ∈ C_i` there is
/// one relation `(y·a) ⊗ c − y ⊗ (a·c)`. The tensor product is the cokernel.
pub fn tensor_relations<F: Field>(y: &Rep<F>, c: &Rep<F>) -> Result<Matrix<F>> {
    let q = c.quiver();
    if *y.quiver() != q.opposite() {
        return Err(Error::QuiverMismatch);
    }
    let n = q.vertex_count();
    let mut offset = Vec::with_capacity(n);
    let mut total = 0;
    for v in 0..n {
        offset.push(total);
        total += y.dim(v) * c.dim(v);
    }
    let mut cols: Vec<Vec<F>> = Vec::new();
    for (k, &(i, j)) in q.arrows().iter().enumerate() {
        let ya = y.arrow(k);
        let ca = c.arrow(k);
        for yb in 0..y.dim(j) {
            for cb in 0..c.dim(i) {
                let mut col = vec![F::zero(); total];
                for r in 0..y.dim(i) {
                    let v = ya.get(r, yb);
                    if !v.is_zero() {
                        let pos = offset[i] + r * c.dim(i) + cb;
                        col[pos] = col[pos].plus(v);
                    }
                }
                for r in 0..c.dim(j) {
                    let v = ca.get(r, cb);
                    if !v.is_zero() {
                        let pos = offset[j] + yb * c.dim(j) + r;
                        col[pos] = col[pos].minus(v);
                    }
                }
                cols.push(col);
            }
        }
    }
    Ok(Matrix::from_columns(&cols, total))
}

pub fn tensor_dim<F: Field>(y: &Rep<F>, c: &Rep<F>) -> Result<usize> {
    let rel = tensor_relations(y, c)?;
    Ok(rel.rows() - rel.rank())
}

/// `⊕_i id ⊗ φ_i` on the vertex-wise tensor spaces.
fn tensor_block<F: Field>(y: &Rep<F>, phi: &RepMap<F>) -> Matrix<F> {
    let blocks: Vec<Matrix<F>> = (0..y.quiver().vertex_count())
        .map(|v| Matrix::identity(y.dim(v)).kronecker(phi.at(v)))
        .collect();
    Matrix::block_diag(&blocks.iter().collect::<Vec<_>>())
}

/// Rank of the induced map `Y ⊗ C₀ → Y ⊗ C₁`.
pub fn tensor_map_rank<F: Field>(y: &Rep<F>, phi: &RepMap<F>) -> Result<usize> {
    let rel1 = tensor_relations(y, phi.target())?;
    let m = tensor_block(y, phi);
    Ok(rel1.hstack(&m).rank() - rel1.rank())
}
