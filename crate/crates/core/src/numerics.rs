//! Approximation helpers for floating-point magnitudes.

/// Number of decimal places kept by [`approx`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Order(pub u32);

impl From<u32> for Order {
    fn from(places: u32) -> Self {
        Order(places)
    }
}

/// Rounds `x` half-away-from-zero to `order` decimal places.
pub fn approx(x: f64, order: impl Into<Order>) -> f64 {
    let scale = 10f64.powi(order.into().0 as i32);
    let scaled = x * scale;
    if !scaled.is_finite() {
        return x;
    }
    scaled.round() / scale
}

/// True iff `x` and `y` round to the same value at `order` decimal places.
pub fn approx_eq(x: f64, y: f64, order: impl Into<Order>) -> bool {
    let order = order.into();
    approx(x, order) == approx(y, order)
}

/// Smallest integer not less than `r`.
pub fn ceiling(r: f64) -> i64 {
    r.ceil() as i64
}

/// Product of every element, duplicates included. The empty product is 1.
pub fn product<I>(xs: I) -> f64
where
    I: IntoIterator<Item = f64>,
{
    xs.into_iter().product()
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn approx_examples() {
        assert_eq!(approx(3.14159, 2), 3.14);
        assert_eq!(approx(-3.14159, 2), -3.14);
        assert_eq!(approx(3.14, 2), 3.14);
        assert_eq!(approx(2.5, 0), 3.0);
        assert_eq!(approx(-2.5, 0), -3.0);
    }

    #[test]
    fn approx_eq_examples() {
        assert!(approx_eq(PI, 3.14, 2));
        assert!(!approx_eq(PI, 3.15, 2));
        assert!(approx_eq(1.0e-3, 1.0e-3, 9));
    }

    #[test]
    fn ceiling_examples() {
        assert_eq!(ceiling(2.1), 3);
        assert_eq!(ceiling(2.0), 2);
        assert_eq!(ceiling(-2.1), -2);
    }

    #[test]
    fn product_examples() {
        assert_eq!(product([]), 1.0);
        assert_eq!(product([2.0, 2.0]), 4.0);
        assert_eq!(product([0.5, 4.0, 0.5]), 1.0);
    }

    proptest! {
        #[test]
        fn rounding_error_bounded(x in -1.0e6f64..1.0e6, order in 0u32..6) {
            let bound = 0.5 * 10f64.powi(-(order as i32));
            prop_assert!((approx(x, order) - x).abs() <= bound * (1.0 + 1e-9) + x.abs() * f64::EPSILON);
        }

        #[test]
        fn approx_idempotent(x in -1.0e6f64..1.0e6, order in 0u32..6) {
            let once = approx(x, order);
            prop_assert_eq!(approx(once, order), once);
        }

        #[test]
        fn ceiling_bracket(r in -1.0e9f64..1.0e9) {
            let c = ceiling(r) as f64;
            prop_assert!(c - 1.0 < r && r <= c);
        }

        #[test]
        fn product_splits(a in prop::collection::vec(0.1f64..10.0, 0..8),
                          b in prop::collection::vec(0.1f64..10.0, 0..8)) {
            let joined: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
            let lhs = product(joined);
            let rhs = product(a) * product(b);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }
    }
}
