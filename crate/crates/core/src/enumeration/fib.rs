//! Fibonacci numbers, `F_0 = 0`, `F_1 = 1`.

/// Largest `k` for which `F_k` fits in a `u64`.
pub const MAX_FIB_INDEX: usize = 93;

/// # Panics
/// If `k > MAX_FIB_INDEX`.
pub fn fibonacci(k: usize) -> u64 {
    assert!(k <= MAX_FIB_INDEX, "F_{k} overflows u64");
    if k == 0 {
        return 0;
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    b
}

/// `F_{2n+1} - 1`, the largest possible number of Hamiltonian sets of
/// polygonal paths in a simple assembly graph on `n` vertices.
pub fn hamiltonian_bound(n: usize) -> u64 {
    fibonacci(2 * n + 1) - 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibTable {
    values: Vec<u64>,
}

impl FibTable {
    /// `F_0..=F_k`.
    pub fn new(k: usize) -> Self {
        assert!(k <= MAX_FIB_INDEX, "F_{k} overflows u64");
        let mut values = vec![0, 1];
        while values.len() <= k {
            let m = values.len();
            values.push(values[m - 1] + values[m - 2]);
        }
        values.truncate(k + 1);
        FibTable { values }
    }

    pub fn get(&self, k: usize) -> Option<u64> {
        self.values.get(k).copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(fibonacci(0), 0);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(7), 13);
        assert_eq!(fibonacci(9), 34);
        assert_eq!(fibonacci(93), 12_200_160_415_121_876_738);
    }

    #[test]
    fn table_matches_recurrence() {
        let t = FibTable::new(50);
        assert_eq!(t.as_slice().len(), 51);
        for m in 2..=50 {
            assert_eq!(
                t.get(m).unwrap(),
                t.get(m - 1).unwrap() + t.get(m - 2).unwrap()
            );
            assert_eq!(t.get(m).unwrap(), fibonacci(m));
        }
        assert_eq!(FibTable::new(0).as_slice(), &[0]);
        assert_eq!(t.get(51), None);
    }

    #[test]
    fn bounds() {
        let expected = [1, 4, 12, 33, 88, 232, 609, 1596];
        for (n, &b) in (1..=8).zip(&expected) {
            assert_eq!(hamiltonian_bound(n), b);
        }
    }
}
