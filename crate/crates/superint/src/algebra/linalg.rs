//! Small exact determinants over any commutative ring.

/// Minimal ring interface for determinant expansion.
pub trait Ring: Clone {
    fn ring_zero() -> Self;
    fn ring_add(&self, rhs: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_mul(&self, rhs: &Self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

impl Ring for super::scalar::ParamScalar {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Ring for super::poly::ParamPoly {
    fn ring_zero() -> Self {
        Self::zero()
    }
    fn ring_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn ring_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Determinant of the `n x n` matrix `entry(row, col)`, by Laplace expansion
/// with minors memoized over column subsets. Exact over any commutative ring;
/// fine for the small matrices used throughout (`n <= 10`).
pub fn det<T: Ring>(n: usize, entry: impl Fn(usize, usize) -> T) -> T {
    assert!(n <= 20, "determinant dimension out of intended range");
    if n == 0 {
        // Empty determinant is 1; rings here have no one(), so special-case at
        // call sites needing it. Returning zero would be wrong.
        panic!("det of empty matrix; handle n = 0 at the call site");
    }
    let mut memo: std::collections::HashMap<u32, T> = std::collections::HashMap::new();
    // minor(cols): determinant of rows n-|cols|..n restricted to `cols`.
    fn minor<T: Ring>(
        n: usize,
        cols: u32,
        entry: &impl Fn(usize, usize) -> T,
        memo: &mut std::collections::HashMap<u32, T>,
    ) -> T {
        let k = cols.count_ones() as usize;
        if k == 1 {
            let c = cols.trailing_zeros() as usize;
            return entry(n - 1, c);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let row = n - k;
        let mut acc = T::ring_zero();
        let mut sign_neg = false;
        for c in 0..n {
            if cols & (1 << c) == 0 {
                continue;
            }
            let e = entry(row, c);
            if !e.ring_is_zero() {
                let sub = minor(n, cols & !(1 << c), entry, memo);
                let term = e.ring_mul(&sub);
                acc = if sign_neg {
                    acc.ring_add(&term.ring_neg())
                } else {
                    acc.ring_add(&term)
                };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    minor(n, (1u32 << n) - 1, &entry, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ParamScalar;

    #[test]
    fn numeric_determinants() {
        let m = [[1i64, 2, 3], [4, 5, 6], [7, 8, 10]];
        let d = det(3, |i, j| ParamScalar::int(m[i][j]));
        assert!(d.equals(&ParamScalar::int(-3)));
        let vandermonde = det(3, |i, j| ParamScalar::int([2i64, 3, 5][i].pow(2 - j as u32)));
        // prod_{i<j} (x_i - x_j) for rows (x^2, x, 1) = (2-3)(2-5)(3-5) = -6
        assert!(vandermonde.equals(&ParamScalar::int(-6)));
    }

    #[test]
    fn symbolic_determinant() {
        let a = ParamScalar::named("a");
        let b = ParamScalar::named("b");
        let entries = [
            [a.clone(), b.clone()],
            [b.clone(), a.clone()],
        ];
        let d = det(2, |i, j| entries[i][j].clone());
        assert!(d.equals(&a.mul(&a).sub(&b.mul(&b))));
    }
}
