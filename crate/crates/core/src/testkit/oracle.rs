use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Mat, Scalar, Subspace, Vector};
use crate::relations::Relation;

/// `Q ∘ R` by eliminating the middle variable directly: with spanning pairs
/// `(x_i, y_i)` of `R` and `(y′_j, z_j)` of `Q`, every solution of
/// `Σ a_i y_i = Σ b_j y′_j` contributes `(Σ a_i x_i, Σ b_j z_j)`.
pub fn brute_compose_oracle(q: &Relation, r: &Relation) -> Result<Relation> {
    const LIMIT: usize = 6;
    let (x, y, z) = (r.source_dim(), r.target_dim(), q.target_dim());
    if x.max(y).max(z) > LIMIT || q.source_dim() > LIMIT {
        return Err(Error::InvalidArgument(format!("oracle dimensions are limited to {LIMIT}")));
    }
    if q.source_dim() != y {
        return Err(Error::DimensionMismatch {
            expected: y,
            found: q.source_dim(),
        });
    }
    let rp = r.pairs();
    let qp = q.pairs();
    let mut cols: Vec<Vector> = rp.iter().map(|(_, yy)| yy.clone()).collect();
    cols.extend(qp.iter().map(|(yy, _)| yy.iter().map(|c| -c).collect::<Vector>()));
    let system = Mat::from_columns(&cols, y);
    let solutions = Subspace::kernel(&system).basis_vectors();
    let combine = |coeffs: &[Scalar], vs: &mut dyn Iterator<Item = &Vector>, n: usize| {
        let mut out = zero_vector(n);
        for (c, v) in coeffs.iter().zip(vs) {
            for (o, e) in out.iter_mut().zip(v) {
                *o += c * e;
            }
        }
        out
    };
    let pairs: Vec<(Vector, Vector)> = solutions
        .iter()
        .map(|s| {
            let (a, b) = s.split_at(rp.len());
            (
                combine(a, &mut rp.iter().map(|(xx, _)| xx), x),
                combine(b, &mut qp.iter().map(|(_, zz)| zz), z),
            )
        })
        .collect();
    Ok(Relation::from_pairs(x, z, &pairs))
}
