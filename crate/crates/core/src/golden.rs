//! Golden-section search for the maximum of a unimodal function.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes `f` on `[a, b]` until the bracket is shorter than `tol` or
/// `max_iter` evaluations have been spent. Returns `(argmax, max)`; the
/// endpoints are compared too, so monotone functions are handled.
pub(crate) fn maximize<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_iter: usize,
) -> (f64, f64) {
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let (fa, fb) = (f(lo), f(hi));
    let mut best = if fb > fa { (hi, fb) } else { (lo, fa) };
    if hi - lo <= tol {
        return best;
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if hi - lo <= tol {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    for cand in [(x1, f1), (x2, f2)] {
        if cand.1 > best.1 {
            best = cand;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_peak() {
        let (x, fx) = maximize(|x| -(x - 0.3) * (x - 0.3), -1.0, 2.0, 1e-10, 200);
        assert!((x - 0.3).abs() < 1e-8);
        assert!(fx.abs() < 1e-15);
    }

    #[test]
    fn monotone_returns_endpoint() {
        let (x, _) = maximize(|x| x, 0.0, 1.0, 1e-10, 200);
        assert_eq!(x, 1.0);
        let (x, _) = maximize(|x| -x, 0.0, 1.0, 1e-10, 200);
        assert_eq!(x, 0.0);
    }

    #[test]
    fn plateau_is_fine() {
        let (_, fx) = maximize(|x| (1.0 - x.abs()).min(0.5), -1.0, 1.0, 1e-10, 200);
        assert_eq!(fx, 0.5);
    }
}
