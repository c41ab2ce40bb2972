//! Acceptance suite. Every criterion is exact; each prints one PASS/FAIL line.

use std::process::Command;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use rider_count::board::{count_below_diag_table, count_by_size, verify_collapse, Board, MoveSet};
use rider_count::formulas::{
    anassa_closed, anassa_pk_closed, bishops_arshon_kotesovec, bishops_closed, bishops_convolution,
    kotesovec_diagonal, rk_closed, rw_arshon, rw_closed, AnassaRecurrence, ColorRecurrence,
};
use rider_count::kernel::{assoc_stirling2, binomial, factorial, pow, sign, stirling2};
use rider_count::quasipoly::{beta, divide_by_falling_factorial, QuasiPolynomial};
use rider_count::Piece;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn brute(piece: Piece, m: usize, k_max: usize) -> Vec<BigInt> {
    let ms = match piece {
        Piece::Anassa => MoveSet::anassa(),
        _ => MoveSet::bishop(),
    };
    count_by_size(&Board::square(m), &ms, k_max)
}

/// `Σ_d a_d m^d` for `12 C(m,4) + 14 C(m,3) + 4 C(m,2)`, expanded by
/// multiplying out the falling factorials.
fn pair_formula_monomials() -> Vec<BigRational> {
    let mut total = vec![BigRational::zero(); 5];
    for (weight, i) in [(12, 4usize), (14, 3), (4, 2)] {
        let mut poly = vec![BigRational::one()];
        for r in 0..i as i64 {
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigRational::from_integer(int(r));
            }
            poly = next;
        }
        let scale = BigRational::new(int(weight), factorial(i));
        for (d, c) in poly.into_iter().enumerate() {
            total[d] += c * &scale;
        }
    }
    total
}

fn criterion_1() -> Outcome {
    for m in 0..=6usize {
        let k_top = Piece::Bishop.max_pieces(m);
        let counts = brute(Piece::Bishop, m, k_top);
        for (k, c) in counts.iter().enumerate() {
            ensure(bishops_closed(m as i64, k) == *c, || {
                format!("B_S({m},{k}) != {c}")
            })?;
        }
        if m >= 1 {
            ensure(counts[1] == int((m * m) as i64), || {
                format!("m^2 vs oracle at m={m}")
            })?;
        }
        if m >= 2 {
            let pair = int(12) * binomial(m as i64, 4)
                + int(14) * binomial(m as i64, 3)
                + int(4) * binomial(m as i64, 2);
            ensure(counts[2] == pair, || {
                format!("pair formula vs oracle at m={m}")
            })?;
        }
    }
    let pair8 = int(12) * binomial(8, 4) + int(14) * binomial(8, 3) + int(4) * binomial(8, 2);
    ensure(pair8 == int(1736), || {
        format!("pair formula at 8 = {pair8}")
    })?;
    ensure(bishops_closed(8, 1) == int(64), || "B_S(8,1) != 64".into())?;
    ensure(bishops_closed(8, 2) == int(1736), || {
        "B_S(8,2) != 1736".into()
    })?;
    let eight = brute(Piece::Bishop, 8, 2);
    ensure(eight[1] == int(64) && eight[2] == int(1736), || {
        format!("oracle at m=8: {eight:?}")
    })
}

fn criterion_2() -> Outcome {
    for m in 0..=6usize {
        let counts = brute(Piece::Anassa, m, m);
        for (k, c) in counts.iter().enumerate() {
            ensure(anassa_closed(m as i64, k) == *c, || {
                format!("A_S({m},{k}) != {c}")
            })?;
        }
    }
    for m in 0..=5usize {
        for (k, row) in count_below_diag_table(m).iter().enumerate() {
            for (p, c) in row.iter().enumerate() {
                ensure(anassa_pk_closed(m as i64, k, p) == *c, || {
                    format!("A_S({m},{k},{p}) != {c}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for m in 0..=12usize {
        for k in 0..=10usize {
            let closed = bishops_closed(m as i64, k);
            ensure(bishops_convolution(m as i64, k) == closed, || {
                format!("convolution ({m},{k})")
            })?;
            ensure(bishops_arshon_kotesovec(m, k) == closed, || {
                format!("m-dependent form ({m},{k})")
            })?;
        }
    }
    let (mut w, mut b) = (ColorRecurrence::white(), ColorRecurrence::black());
    for m in 0..=20usize {
        for k in 0..=10usize {
            ensure(w.get(m, k) == rw_closed(m as i64, k), || {
                format!("R_W recurrence ({m},{k})")
            })?;
            ensure(b.get(m, k) == rk_closed(m as i64, k), || {
                format!("R_K recurrence ({m},{k})")
            })?;
        }
        for k in 0..=m {
            let v = rw_arshon(m, k).map_err(|e| e.to_string())?;
            ensure(v == rw_closed(m as i64, k), || {
                format!("alternating sum ({m},{k})")
            })?;
        }
    }
    let mut rec = AnassaRecurrence::new();
    for m in 0..=12usize {
        for k in 0..=8usize {
            for p in 0..=k {
                ensure(rec.get(m, k, p) == anassa_pk_closed(m as i64, k, p), || {
                    format!("anassa recurrence ({m},{k},{p})")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for piece in [Piece::Bishop, Piece::Anassa] {
        for m in 1..=6usize {
            let ok = verify_collapse(m, piece, piece.max_pieces(m)).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{piece} collapse fails at m={m}"))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for k in 0..=8usize {
        ensure(bishops_closed(-1, k) == factorial(k), || {
            format!("B_S(-1,{k})")
        })?;
        ensure(anassa_closed(-1, k) == factorial(k), || {
            format!("A_S(-1,{k})")
        })?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for piece in [Piece::Bishop, Piece::Anassa] {
        for k in 0..=5usize {
            let qp = QuasiPolynomial::for_piece(piece, k);
            for m in 0..=2 * k as i64 + 6 {
                let want = match piece {
                    Piece::Bishop => bishops_closed(m, k),
                    _ => anassa_closed(m, k),
                };
                let got = qp.evaluate(m).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("{piece} k={k} m={m}: {got} vs {want}")
                })?;
            }
        }
    }
    let one: Vec<BigRational> = [0, 0, 1]
        .iter()
        .map(|&v| BigRational::from_integer(int(v)))
        .collect();
    let b1 = QuasiPolynomial::for_piece(Piece::Bishop, 1);
    ensure(b1.coeffs.iter().all(|c| *c == one), || {
        format!("bishop k=1: {:?}", b1.coeffs)
    })?;
    let pair = pair_formula_monomials();
    let b2 = QuasiPolynomial::for_piece(Piece::Bishop, 2);
    ensure(b2.coeffs.iter().all(|c| *c == pair), || {
        format!("bishop k=2: {:?}", b2.coeffs)
    })?;
    for (k, t) in [(1, 1), (2, 1), (3, 2)] {
        let got = QuasiPolynomial::for_piece(Piece::Bishop, k).effective_period();
        ensure(got == t, || {
            format!("bishop k={k} period {got}, expected {t}")
        })?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for k in 0..=5usize {
        let qp = QuasiPolynomial::for_piece(Piece::Anassa, k);
        divide_by_falling_factorial(&qp.coeffs[0], k).map_err(|e| format!("k={k}: {e}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for p in 0..=4usize {
        for q in 0..=4usize {
            for z in -1..=1i64 {
                for x in 0..=10i64 {
                    let lhs = binomial(2 * x + z - q as i64, p as i64) * binomial(x, q as i64);
                    let rhs: BigRational = (0..=(p + q) as i64)
                        .map(|i| {
                            beta(p, q, z, i) * BigRational::from_integer(binomial(2 * x + z, i))
                        })
                        .sum();
                    ensure(BigRational::from_integer(lhs) == rhs, || {
                        format!("beta identity p={p} q={q} z={z} x={x}")
                    })?;
                }
            }
        }
    }
    for k in 0..=8i64 {
        for m in 0..=20i64 {
            let s: BigInt = (0..=k)
                .map(|p| assoc_stirling2((k + p) as usize, p) * binomial(m, k + p))
                .sum();
            ensure(s == stirling2(m, m - k), || {
                format!("Ward expansion m={m} k={k}")
            })?;
        }
    }
    for k in 0..=20i64 {
        let s: BigInt = (0..=(k + 1) / 2)
            .map(|j| sign(j) * pow(2, (k - 2 * j).max(0) as u32) * binomial(k - j, k - 2 * j))
            .sum();
        ensure(s == int(k + 1), || format!("Gould sum k={k}: {s}"))?;
    }
    for m in 0..=10i64 {
        for k in 0..=m {
            ensure(
                anassa_pk_closed(m, k as usize, k as usize) == stirling2(m, m - k),
                || format!("A_S({m},{k},{k})"),
            )?;
        }
    }
    for m in 0..=8usize {
        let (a, b) = kotesovec_diagonal(m).map_err(|e| e.to_string())?;
        ensure(a == b && a == anassa_closed(m as i64, m), || {
            format!("full diagonal m={m}: {a}, {b}")
        })?;
    }
    Ok(())
}

fn cli(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_rider-count"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run rider-count: {e}"))?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn criterion_9() -> Outcome {
    let runs: &[&[&str]] = &[
        &["table", "bishop", "10"],
        &["--format", "bfile", "table", "anassa", "10"],
        &["--format", "json", "table", "bishop", "8"],
        &["coeffs", "bishop", "4"],
        &["--format", "json", "coeffs", "anassa", "5"],
    ];
    for args in runs {
        let first = cli(args)?;
        let second = cli(args)?;
        ensure(first.1 == 0, || format!("{args:?} exited {}", first.1))?;
        ensure(first == second, || format!("{args:?} differs between runs"))?;
    }
    let (_, code) = cli(&["verify", "all"])?;
    ensure(code == 0, || format!("verify all exited {code}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "bishop closed form = brute force (m <= 6), B_S(8,1) = 64, B_S(8,2) = 1736",
            criterion_1,
        ),
        (
            "anassa closed form = brute force (m <= 6), p-split (m <= 5)",
            criterion_2,
        ),
        (
            "bishop forms, single-color recurrences, alternating sum, anassa recurrence agree",
            criterion_3,
        ),
        ("collapsibility for both pieces, 1 <= m <= 6", criterion_4),
        (
            "bishop and anassa counts at m = -1 equal k! (k <= 8)",
            criterion_5,
        ),
        (
            "coefficient round trip (k <= 5), bishop k <= 2 vectors, periods 1, 1, 2",
            criterion_6,
        ),
        (
            "(m)_k divides anassa quasi-polynomials (k <= 5)",
            criterion_7,
        ),
        (
            "beta, Ward, Gould, A_S(m,k,k), full-diagonal identities",
            criterion_8,
        ),
        ("CLI output deterministic, verify all exits 0", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
