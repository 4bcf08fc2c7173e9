use crate::qubo::QuboProblem;
use crate::scalar::Scalar;

/// Dense state for single-bit-flip moves.
///
/// `field[i] = Q_ii + 2 sum_{j != i} Q_ij z_j`, so flipping bit `i` changes
/// the energy by `(1 - 2 z_i) field[i]`.
#[derive(Debug, Clone)]
pub(crate) struct LocalFields<'a, T> {
    n: usize,
    matrix: &'a [T],
    pub(crate) z: Vec<u8>,
    field: Vec<T>,
}

impl<'a, T: Scalar> LocalFields<'a, T> {
    pub(crate) fn new(matrix: &'a [T], z: Vec<u8>) -> Self {
        let n = z.len();
        debug_assert_eq!(matrix.len(), n * n);
        let two = T::one() + T::one();
        let field = (0..n)
            .map(|i| {
                let row = &matrix[i * n..(i + 1) * n];
                let mut h = row[i];
                for (j, &q) in row.iter().enumerate() {
                    if j != i && z[j] == 1 {
                        h += two * q;
                    }
                }
                h
            })
            .collect();
        Self {
            n,
            matrix,
            z,
            field,
        }
    }

    #[inline]
    pub(crate) fn delta(&self, i: usize) -> T {
        if self.z[i] == 0 {
            self.field[i]
        } else {
            -self.field[i]
        }
    }

    #[inline]
    pub(crate) fn flip(&mut self, i: usize) {
        let two = T::one() + T::one();
        let step = if self.z[i] == 0 { two } else { -two };
        self.z[i] ^= 1;
        let row = &self.matrix[i * self.n..(i + 1) * self.n];
        let keep = self.field[i];
        for (h, &q) in self.field.iter_mut().zip(row) {
            *h += step * q;
        }
        self.field[i] = keep;
    }

    /// Largest single-flip energy change magnitude from the current state.
    pub(crate) fn max_abs_delta(&self) -> T {
        self.field.iter().map(|h| h.abs()).fold(T::zero(), T::max)
    }
}

pub(crate) fn dense<T: Scalar>(problem: &QuboProblem<T>) -> Vec<T> {
    problem.to_dense()
}
