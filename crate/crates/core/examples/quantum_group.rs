//! The quantum group F generated by a, b, c with the normal form a^α b^β c^γ.

use cyclic_plane::hopf::{expand_d, normalize_word, word_product, FElement, FLetter, QDet, RewriteStrategy};
use cyclic_plane::{CycNum, Order};

fn main() -> cyclic_plane::Result<()> {
    let n = Order::new(3)?;
    let (a, b, c) = (FElement::a(n), FElement::b(n), FElement::c(n));
    let q = CycNum::q_pow(n, 1);

    println!("ba       = {}", &b * &a);
    println!("ab - qba = {}", &(&a * &b) - &(&b * &a).scale(&q));
    println!("b^3      = {}", b.pow(3));
    println!("a^3      = {}", a.pow(3));
    println!("d        = {}", expand_d(n));

    let det = QDet::compute(n);
    println!("ad - q bc      = {}", det.left);
    println!("da - q^-1 bc   = {}", det.right);
    println!("d^3            = {}", expand_d(n).pow(3));

    // Rewriting a word from either end reaches the same normal form.
    let word = [FLetter::C, FLetter::B, FLetter::A, FLetter::C, FLetter::A];
    let left = normalize_word(n, &word, RewriteStrategy::LeftmostFirst);
    let right = normalize_word(n, &word, RewriteStrategy::RightmostFirst);
    println!("cbaca = {left} (agree: {}, matches product: {})", left == right, left == word_product(n, &word));
    println!("(a + c)^2 = {}", (&a + &c).pow(2));
    Ok(())
}
