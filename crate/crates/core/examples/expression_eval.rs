//! Parsing and evaluating expressions; printed normal forms parse back to themselves.

use cyclic_plane::cli::eval::eval_str;

fn main() {
    let inputs = [
        ("y*x", 3),
        ("x^3", 3),
        ("(x + y)^4", 4),
        ("y^-1 x", 5),
        ("b*a", 3),
        ("a*d - q*b*c", 7),
        ("(1 - q)(1 - q^2)", 3),
        ("x*a", 3),
        ("b^-1", 3),
        ("x +", 3),
    ];
    for (src, n) in inputs {
        match eval_str(src, n) {
            Ok(out) => {
                let again = eval_str(&out, n).expect("normal forms reparse");
                println!("N={n}  {src:<18} => {out}{}", if again == out { "" } else { "  (unstable!)" });
            }
            Err(e) => println!("N={n}  {src:<18} => error: {e}"),
        }
    }
}
