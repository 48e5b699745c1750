/// Five-point central difference estimate of `f'(x)` (`order == 1`) or
/// `f''(x)` (`order == 2`). Truncation error is O(h^4); the caller owns the
/// step-size policy.
///
/// # Panics
///
/// Panics if `order` is not 1 or 2, or `h` is not positive.
pub fn derivative_fd<F>(f: F, x: f64, order: u32, h: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    assert!(h > 0.0, "step must be positive");
    let (m2, m1, p1, p2) = (f(x - 2.0 * h), f(x - h), f(x + h), f(x + 2.0 * h));
    match order {
        1 => (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h),
        2 => {
            let c = f(x);
            (16.0 * ((m1 - c) + (p1 - c)) - ((m2 - c) + (p2 - c))) / (12.0 * h * h)
        }
        _ => panic!("derivative order must be 1 or 2, got {order}"),
    }
}
