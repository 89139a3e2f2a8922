use crate::poly::{Coeff, PrimeField};

/// Rank of a dense matrix over `F_p`, by row reduction in place.
pub fn rank(field: PrimeField, mut rows: Vec<Vec<Coeff>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for c in col..ncols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f != 0 {
                for c in col..ncols {
                    if prow[c] != 0 {
                        row[c] = field.sub(row[c], field.mul(f, prow[c]));
                    }
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
