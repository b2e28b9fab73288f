use super::SchurIndex;

/// Kostka number `K_{mu,nu}` for a two-row shape `mu = (k, l)`.
///
/// Counts semistandard tableaux of shape `mu` and content `nu` by filling the
/// values `1, 2, ...` one at a time. After placing value `v` the row lengths
/// `(r1, r2)` must satisfy `r2 <= r1` and the new entries of row two must sit
/// below old entries of row one (`r2 <= r1_before`), which is column
/// strictness. `nu` may be any composition; zero entries are allowed.
pub fn kostka(mu: SchurIndex, nu: &[u32]) -> u64 {
    let total: u32 = nu.iter().sum();
    if total != mu.k + mu.l {
        return 0;
    }
    fn rec(nu: &[u32], r1: u32, r2: u32, k: u32, l: u32) -> u64 {
        let Some((&count, rest)) = nu.split_first() else {
            return u64::from(r1 == k && r2 == l);
        };
        let mut n = 0;
        // x copies go to the first row, count - x to the second
        for x in 0..=count {
            let y = count - x;
            let n1 = r1 + x;
            let n2 = r2 + y;
            if n1 > k || n2 > l || n2 > r1 {
                continue;
            }
            n += rec(rest, n1, n2, k, l);
        }
        n
    }
    rec(nu, 0, 0, mu.k, mu.l)
}
