//! Arithmetic in Z[q]/(1 + q + ... + q^{N-1}), where q is a primitive N-th root of unity.

use cyclic_plane::{CycNum, Order};

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(5)?;
    let q = CycNum::q_pow(n, 1);

    println!("q^5        = {}", q.pow(5));
    println!("q^4        = {}", q.pow(4));
    println!("q * q^-1   = {}", &q * &CycNum::q_pow(n, -1));

    let sum: CycNum = (0..5).map(|k| CycNum::q_pow(n, k)).sum();
    println!("sum of q^k = {sum}");

    // q-integers with step -2 and the identity (1 - q^-2)[s] = 1 - q^-2s.
    let one = CycNum::one(n);
    for s in 0..=5 {
        let qint = CycNum::q_integer(n, s, -2);
        let lhs = &(&one - &CycNum::q_pow(n, -2)) * &qint;
        println!("[{s}]_(q^-2) = {:<16} (1-q^-2)[s] = {lhs}", qint.to_string());
    }

    let z = CycNum::from_dense(n, &[2, -1, 0, 3])?;
    println!("{z} at exp(2 pi i/5) = {:.6}", z.to_complex());

    let big = CycNum::from_int(n, i64::MAX / 2);
    match big.checked_mul(&CycNum::from_int(n, 4)) {
        Ok(v) => println!("unexpected {v}"),
        Err(e) => println!("overflow is reported: {e}"),
    }
    Ok(())
}
