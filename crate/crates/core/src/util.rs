pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0, |g, x| gcd(g, *x))
}

/// Floor division for a positive divisor.
pub fn floor_div(n: i128, d: i128) -> i128 {
    debug_assert!(d > 0);
    n.div_euclid(d)
}

/// Ceiling division for a positive divisor.
pub fn ceil_div(n: i128, d: i128) -> i128 {
    -floor_div(-n, d)
}
