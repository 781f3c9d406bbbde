use num_traits::One;

use super::{rat, PolyX};

/// `u_n(x)`: `u_0 = 1`, `u_1 = x`, `u_n = x u_{n-1} - u_{n-2}`.
pub fn chebyshev_u(n: usize) -> PolyX {
    let x = PolyX::x();
    let (mut prev, mut cur) = (PolyX::one(), x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `u_n(x - 1)`, the polynomial that governs the Gram determinants.
pub fn chebyshev_u_shifted(n: usize) -> PolyX {
    chebyshev_u(n).shift(&rat(-1))
}

/// The roots `2 cos(pi m / (n + 1)) + 1`, `m = 1..=n`, of `u_n(x - 1)`.
pub fn chebyshev_shifted_roots(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|m| 2.0 * (std::f64::consts::PI * m as f64 / (n as f64 + 1.0)).cos() + 1.0)
        .collect()
}
