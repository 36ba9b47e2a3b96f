//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use cyclic_plane::calculus::{self, d_power, leibniz_defect};
use cyclic_plane::cli::eval::eval_str;
use cyclic_plane::cli::table::{emit_table, TableFormat, TableKind};
use cyclic_plane::cli::verify::verify_order;
use cyclic_plane::hopf::{
    act_from_coaction, act_h, act_xm, act_xp, coact_generators, decompose, DualGenerator, FElement, LinearOperator,
    QDet, Side, TensorElement,
};
use cyclic_plane::qplane::{bracket, rep_matrix, PlaneMatrix};
use cyclic_plane::report::Status;
use cyclic_plane::{BasisIndex, CycNum, Order, PlaneElement};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ord(n: usize) -> Order {
    Order::new(n).unwrap()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn basis(order: Order) -> Vec<BasisIndex> {
    BasisIndex::all(order).collect()
}

fn el(order: Order, i: BasisIndex) -> PlaneElement {
    PlaneElement::basis(order, i)
}

fn plane(src: &str, n: usize) -> String {
    eval_str(src, n).unwrap_or_else(|e| panic!("{src}: {e}"))
}

/// The nine differentials of the worked `N = 3` example, as printed there.
const N3_PRINTED: [(&str, &str); 9] = [
    ("1", "0"),
    ("y", "(1-q^2)*x*y"),
    ("y^2", "(1-q)*x*y^2"),
    ("x", "(1-q)*x^2"),
    ("x*y", "0"),
    ("x*y^2", "(1-q^2)*x^2*y^2"),
    ("x^2", "(1-q^2)"),
    ("x^2*y", "(1-q)*y"),
    ("x^2*y^2", "0"),
];

fn c1_golden_table() -> Outcome {
    let emitted = emit_table(TableKind::Differential, ord(3), TableFormat::Text);
    let lines: Vec<&str> = emitted.lines().collect();
    check(lines.len() == 9, || format!("{} lines", lines.len()))?;
    let expected: BTreeSet<String> =
        N3_PRINTED.iter().map(|(s, img)| format!("d({}) = {}", plane(s, 3), plane(img, 3))).collect();
    let got: BTreeSet<String> = lines.iter().map(|l| l.to_string()).collect();
    check(got == expected, || format!("emitted:\n{emitted}expected:\n{expected:#?}"))?;
    check(emitted == calculus::N3_DIFFERENTIAL_TABLE, || "differs from the golden file".into())
}

fn c2_nilpotency() -> Outcome {
    for n in [3, 5, 7] {
        let o = ord(n);
        for i in basis(o) {
            let z = d_power(&el(o, i), n);
            check(z.is_zero(), || format!("N={n}: d^N({i}) = {z}"))?;
        }
    }
    for n in [2, 4, 6, 8, 9] {
        let r = verify_order(ord(n), &["calc.nilpotent".to_owned()], false);
        let e = r.entry("calc.nilpotent").ok_or(format!("N={n}: no nilpotency row"))?;
        check(e.status.is_recorded(), || format!("N={n}: status {:?}", e.status))?;
    }
    Ok(())
}

fn c3_leibniz() -> Outcome {
    for n in 2..=7 {
        let o = ord(n);
        for i in basis(o) {
            for j in basis(o) {
                let defect = leibniz_defect(&el(o, i), &el(o, j)).map_err(|e| e.to_string())?;
                check(defect.is_zero(), || format!("N={n} ({i},{j}): {defect}"))?;
            }
        }
    }
    Ok(())
}

fn c4_braiding() -> Outcome {
    for n in 2..=8 {
        let o = ord(n);
        for i in basis(o) {
            for j in basis(o) {
                let e = (i.r * j.s) as i64 - (j.r * i.s) as i64;
                let lhs = &el(o, i) * &el(o, j);
                let rhs = (&el(o, j) * &el(o, i)).scale(&CycNum::q_pow(o, e));
                check(lhs == rhs, || format!("N={n} ({i},{j}): {lhs} vs {rhs}"))?;
            }
        }
    }
    Ok(())
}

fn c5_jacobi() -> Outcome {
    for n in 2..=5 {
        let o = ord(n);
        let b = basis(o);
        let elems: Vec<PlaneElement> = b.iter().map(|&i| el(o, i)).collect();
        let br = |u: &PlaneElement, v: &PlaneElement| bracket(u, v).unwrap();
        let pairs: Vec<Vec<PlaneElement>> =
            elems.iter().map(|u| elems.iter().map(|v| br(u, v)).collect()).collect();
        for (x, a) in elems.iter().enumerate() {
            for (y, bb) in elems.iter().enumerate() {
                for (z, c) in elems.iter().enumerate() {
                    let s = &(&br(a, &pairs[y][z]) + &br(bb, &pairs[z][x])) + &br(c, &pairs[x][y]);
                    check(s.is_zero(), || format!("N={n} ({},{},{}): {s}", b[x], b[y], b[z]))?;
                }
            }
        }
    }
    Ok(())
}

fn c6_representation() -> Outcome {
    for n in 2..=8 {
        let o = ord(n);
        let entry = |c: CycNum, cond: bool| if cond { c } else { CycNum::zero(o) };
        let rows = |f: &dyn Fn(usize, usize) -> CycNum| (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        let x = PlaneMatrix::from_rows(o, rows(&|i, j| entry(CycNum::one(o), j == (i + 1) % n))).unwrap();
        let y = PlaneMatrix::from_rows(o, rows(&|i, j| entry(CycNum::q_pow(o, i as i64), i == j))).unwrap();
        check(rep_matrix(&PlaneElement::x(o)) == x, || format!("N={n}: rep(x)"))?;
        check(rep_matrix(&PlaneElement::y(o)) == y, || format!("N={n}: rep(y)"))?;
        let id = PlaneMatrix::identity(o);
        check(x.pow(n as u32) == id && y.pow(n as u32) == id, || format!("N={n}: X^N or Y^N"))?;
        let reps: Vec<PlaneMatrix> = basis(o).iter().map(|&i| rep_matrix(&el(o, i))).collect();
        for (a, i) in basis(o).into_iter().enumerate() {
            for (b, j) in basis(o).into_iter().enumerate() {
                let lhs = rep_matrix(&(&el(o, i) * &el(o, j)));
                check(lhs == &reps[a] * &reps[b], || format!("N={n}: rep({i}·{j})"))?;
            }
        }
    }
    Ok(())
}

fn c7_decomposition() -> Outcome {
    for n in 3..=8 {
        let o = ord(n);
        let dec = decompose(o);
        let blocks = dec.blocks();
        check(blocks.len() == n, || format!("N={n}: {} blocks", blocks.len()))?;
        let mut seen = BTreeSet::new();
        for block in blocks {
            check(block.len() == n, || format!("N={n}: block of size {}", block.len()))?;
            for i in block {
                check(seen.insert(*i), || format!("N={n}: {i} repeated"))?;
            }
        }
        check(seen.len() == n * n, || format!("N={n}: blocks cover {} indices", seen.len()))?;
        for block in blocks {
            let members: BTreeSet<BasisIndex> = block.iter().copied().collect();
            for &i in block {
                let z = el(o, i);
                for img in [act_h(&z), act_xp(&z), act_xm(&z)] {
                    check(img.terms().all(|(k, _)| members.contains(&k)), || {
                        format!("N={n}: image {img} of {i} leaves its block")
                    })?;
                }
            }
        }
    }
    let o = ord(3);
    let dec = decompose(o);
    let idx = |r, s| BasisIndex { r, s };
    let triples = [
        [idx(0, 0), idx(1, 2), idx(2, 1)],
        [idx(1, 0), idx(0, 1), idx(2, 2)],
        [idx(2, 0), idx(0, 2), idx(1, 1)],
    ];
    for (k, t) in triples.iter().enumerate() {
        let want: BTreeSet<_> = t.iter().copied().collect();
        let got: BTreeSet<_> = dec.block(k + 1).iter().copied().collect();
        check(got == want, || format!("N_{}: {got:?}", k + 1))?;
    }
    Ok(())
}

fn c8_coaction() -> Outcome {
    for n in [3, 5, 7] {
        let o = ord(n);
        let q = CycNum::q_pow(o, 1);
        for side in [Side::Left, Side::Right] {
            let (x, y) = coact_generators(o, side);
            let braid = &(&x * &y) - &(&y * &x).scale(&q);
            check(braid.is_zero(), || format!("N={n} {side:?}: x'y' - q y'x' = {braid}"))?;
            let one = TensorElement::one(o, side);
            check(x.pow(n as u32) == one, || format!("N={n} {side:?}: x'^N"))?;
            check(y.pow(n as u32) == one, || format!("N={n} {side:?}: y'^N"))?;
        }
        let (a, b, c, dd) = (FElement::a(o), FElement::b(o), FElement::c(o), FElement::d(o));
        let bc = &b * &c;
        let left = &(&a * &dd) - &bc.scale(&q);
        let right = &(&dd * &a) - &bc.scale(&CycNum::q_pow(o, -1));
        let one = FElement::one(o);
        check(left == one && right == one, || format!("N={n}: ad - q bc = {left}, da - q^-1 bc = {right}"))?;
        check(QDet::compute(o).holds(), || format!("N={n}: QDet"))?;
    }
    Ok(())
}

fn c9_operators() -> Outcome {
    for n in 3..=7 {
        let o = ord(n);
        let e = n as u32;
        let h = LinearOperator::of(o, DualGenerator::H).pow(e);
        check(h == LinearOperator::identity(o), || format!("N={n}: H^N != 1"))?;
        for g in [DualGenerator::XPlus, DualGenerator::XMinus] {
            check(LinearOperator::of(o, g).pow(e).is_zero(), || format!("N={n}: {g}^N != 0"))?;
        }
    }
    Ok(())
}

fn c10_action_table() -> Outcome {
    let table = [
        ("1", DualGenerator::H, "1"),
        ("x", DualGenerator::H, "q*x"),
        ("y", DualGenerator::H, "q^2*y"),
        ("1", DualGenerator::XPlus, "0"),
        ("x", DualGenerator::XPlus, "0"),
        ("y", DualGenerator::XPlus, "x"),
        ("1", DualGenerator::XMinus, "0"),
        ("x", DualGenerator::XMinus, "y"),
        ("y", DualGenerator::XMinus, "0"),
    ];
    let o = ord(3);
    let gen = |s: &str| match s {
        "1" => PlaneElement::one(o),
        "x" => PlaneElement::x(o),
        _ => PlaneElement::y(o),
    };
    for (src, g, want) in table {
        let got = act_from_coaction(g, &gen(src)).map_err(|e| e.to_string())?;
        check(got.to_string() == plane(want, 3), || format!("{g}({src}) = {got}, expected {want}"))?;
    }
    Ok(())
}

fn c11_ratio() -> Outcome {
    for n in 2..=12 {
        let o = ord(n);
        let one = CycNum::one(o);
        let factor = &one - &CycNum::q_pow(o, -2);
        for s in 0..=2 * n {
            let mut qint = CycNum::zero(o);
            for k in 0..s {
                qint = &qint + &CycNum::q_pow(o, -2 * k as i64);
            }
            let via_lib = CycNum::q_integer(o, s, -2);
            check(via_lib == qint, || format!("N={n} s={s}: [s] = {via_lib}, sum gives {qint}"))?;
            let lhs = &factor * &via_lib;
            let rhs = &one - &CycNum::q_pow(o, -2 * s as i64);
            check(lhs == rhs, || format!("N={n} s={s}: {lhs} vs {rhs}"))?;
        }
    }
    Ok(())
}

const CORPUS: [(&str, usize); 50] = [
    ("x", 3), ("y", 3), ("x*y", 3), ("y*x", 3), ("y*x", 5),
    ("x^3", 3), ("y^7", 7), ("x^-1", 4), ("y^-2*x", 5), ("x*y - q*y*x", 3),
    ("(x + y)^2", 3), ("(x + y)^3", 3), ("(x + y)^3", 4), ("(x - y)^5", 5), ("(1 + x)*(1 - x)", 6),
    ("q", 3), ("q^2", 3), ("q^-1", 7), ("2*q^3 - q + 1", 5), ("(1 - q)*(1 - q^2)", 3),
    ("x*y*x*y", 4), ("y*y*x*x", 6), ("3*x^2*y - 2*y*x^2", 5), ("-x", 2), ("-(x + y)*q", 8),
    ("x^2*y^2", 3), ("(x*y)^3", 3), ("(q*x + y)^2", 7), ("x + x + x", 9), ("0*x", 4),
    ("a", 3), ("b*a", 3), ("a*b", 5), ("c*a - q^-1*a*c", 5), ("a*d - q*b*c", 3),
    ("a*d - q*b*c", 5), ("d*a - q^-1*b*c", 7), ("b^3", 3), ("b^2*c^2", 4), ("(a + b)^2", 3),
    ("(b + c)^3", 5), ("a^-1*b", 6), ("d", 3), ("d*b - q^-1*b*d", 5), ("(a*d)^2", 3),
    ("c*b - b*c", 7), ("q*a*b*c", 4), ("(a - c)*(a + c)", 5), ("d^3", 3), ("a^4*b", 4),
];

fn run_bin(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclic-plane")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn c12_cli() -> Outcome {
    for (src, n) in CORPUS {
        let first = eval_str(src, n).map_err(|e| format!("{src} @ N={n}: {e}"))?;
        let second = eval_str(&first, n).map_err(|e| format!("reparse of {first:?}: {e}"))?;
        check(first == second, || format!("{src} @ N={n}: {first:?} reprints as {second:?}"))?;
    }
    let (code, out) = run_bin(&["eval", "--n", "3", "y*x"]);
    check(code == 0 && out == plane("y*x", 3).into_bytes().into_iter().chain(*b"\n").collect::<Vec<_>>(), || {
        format!("eval via binary: {code} {}", String::from_utf8_lossy(&out))
    })?;
    let cases: [(&[&str], i32); 6] = [
        (&["verify", "--n", "3"], 0),
        (&["verify", "--n", "3,5,7", "--only", "calc"], 0),
        (&["verify", "--n", "4", "--strict"], 1),
        (&["eval", "--n", "3", "x*(y"], 2),
        (&["eval", "--n", "3", "x*a"], 2),
        (&["table", "--kind", "nonsense", "--n", "3"], 2),
    ];
    for (args, want) in cases {
        let (code, _) = run_bin(args);
        check(code == want, || format!("{args:?}: exit {code}, expected {want}"))?;
    }
    let reruns: [&[&str]; 3] = [
        &["verify", "--n", "2..6", "--json"],
        &["table", "--kind", "structure-C", "--n", "4", "--format", "json"],
        &["table", "--kind", "action", "--n", "5", "--format", "latex"],
    ];
    for args in reruns {
        let (c1, o1) = run_bin(args);
        let (c2, o2) = run_bin(args);
        check(c1 == c2 && o1 == o2 && !o1.is_empty(), || format!("{args:?}: reruns differ"))?;
    }
    let (_, json) = run_bin(&["verify", "--n", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json).map_err(|e| e.to_string())?;
    let report = &v[0];
    check(report["n"] == 3 && report["entries"].is_array() && report["summary"]["fail"] == 0, || {
        "JSON report shape".into()
    })?;
    let report = verify_order(ord(3), &[], false);
    check(report.entries.iter().all(|e| e.status != Status::Fail), || "N=3 report contains failures".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("N=3 golden differential table", Duration::from_secs(1), c1_golden_table),
        ("d^N = 0 on the basis, N in {3,5,7}; recorded for {2,4,6,8,9}", Duration::from_secs(5), c2_nilpotency),
        ("q-Leibniz on all basis pairs, N in 2..=7", Duration::from_secs(10), c3_leibniz),
        ("braiding on all basis pairs, N in 2..=8", Duration::from_secs(5), c4_braiding),
        ("Jacobi on all basis triples, N in 2..=5", Duration::from_secs(30), c5_jacobi),
        ("matrix representation, N in 2..=8", Duration::from_secs(10), c6_representation),
        ("decomposition into invariant blocks, N in 3..=8", Duration::from_secs(5), c7_decomposition),
        ("coaction preserves the relations, N in {3,5,7}", Duration::from_secs(20), c8_coaction),
        ("H^N = 1 and X±^N = 0, N in 3..=7", Duration::from_secs(5), c9_operators),
        ("N=3 action table from the coaction", Duration::from_secs(1), c10_action_table),
        ("(1-q^-2)[s] = 1-q^-2s, N in 2..=12", Duration::from_secs(1), c11_ratio),
        ("CLI round-trip, exit codes, determinism", Duration::from_secs(5), c12_cli),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            check(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("[PASS] {:>2} {name} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
