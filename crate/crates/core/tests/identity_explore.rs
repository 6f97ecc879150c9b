// full sweep at acceptance ranges
use cuspkit_core::algebra::identities::{case_sweep, verify_identity};
use cuspkit_core::scalar::Qa;

#[test]
fn sweep_all() {
    let a = Qa::var();
    let mut bad = 0;
    let mut total = 0;
    for (case, l, n) in case_sweep(8) {
        for r in 1..=3i64 {
            total += 1;
            let chk = verify_identity(case, l, n, &a, r).unwrap();
            if !chk.is_zero() {
                bad += 1;
                if bad <= 10 {
                    println!("FAIL {case:?} l={l} n={n} r={r}: residual {}", chk.residual);
                }
            }
        }
    }
    println!("sweep: {}/{} zero residuals", total - bad, total);
    assert_eq!(bad, 0);
}
