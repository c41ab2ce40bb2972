//! Verification suites: formulas against the brute-force oracle, formulas
//! against each other, identity batteries, collapsibility and coefficient
//! round trips.

use std::fmt::{self, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::board::{
    collapse_bijection, count_below_diag_table, count_by_size, preserves_attacks, verify_collapse,
    Board,
};
use crate::formulas::{
    anassa_closed, anassa_pk_closed, anassa_total_by_sum, bishops_arshon_kotesovec, bishops_closed,
    bishops_convolution, bishops_pair, count, kotesovec_diagonal, rk_closed, rw_arshon, rw_closed,
    AnassaRecurrence, ColorRecurrence,
};
use crate::kernel::{assoc_stirling2, binomial, factorial, pow, sign, stirling1, stirling2};
use crate::quasipoly::{beta, binomial_to_monomial, divide_by_falling_factorial, QuasiPolynomial};
use crate::Piece;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Oracle,
    Identities,
    Collapse,
    Coeffs,
    All,
}

/// Optional overrides of each suite's default grid.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub m_max: Option<usize>,
    pub k_max: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>) -> Self {
        Check {
            suite,
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, case: impl Display, got: T, want: T) {
        self.cases += 1;
        if got != want {
            self.failures
                .push(format!("{case}: got {got}, expected {want}"));
        }
    }

    fn holds(&mut self, case: impl Display, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures.push(format!("{case}"));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} [{}] {} ({} cases)", c.suite, c.name, c.cases)?;
            for failure in &c.failures {
                writeln!(f, "    {failure}")?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        writeln!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

pub fn run(suite: Suite, bounds: Bounds) -> Report {
    let checks = match suite {
        Suite::Oracle => oracle(bounds.m_max.unwrap_or(5)),
        Suite::Identities => identities(bounds.m_max.unwrap_or(12), bounds.k_max.unwrap_or(10)),
        Suite::Collapse => collapse(bounds.m_max.unwrap_or(6)),
        Suite::Coeffs => coeffs(bounds.k_max.unwrap_or(4)),
        Suite::All => {
            // independent suites; results are assembled in a fixed order
            let suites = [
                Suite::Oracle,
                Suite::Identities,
                Suite::Collapse,
                Suite::Coeffs,
            ];
            std::thread::scope(|s| {
                let handles: Vec<_> = suites
                    .iter()
                    .map(|&x| s.spawn(move || run(x, bounds).checks))
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("suite panicked"))
                    .collect()
            })
        }
    };
    Report { checks }
}

/// Closed forms against exhaustive enumeration on `S_m`, `m <= m_max`.
pub fn oracle(m_max: usize) -> Vec<Check> {
    const S: &str = "oracle";
    let mut out = Vec::new();
    for piece in [Piece::Bishop, Piece::Anassa, Piece::White, Piece::Black] {
        let mut c = Check::new(S, format!("{piece} closed form = brute force"));
        let mut bound = Check::new(
            S,
            format!("{piece} counts vanish past the feasibility bound"),
        );
        for m in 0..=m_max {
            let k_top = piece.max_pieces(m);
            let counts = count_by_size(&piece.board(m), &piece.move_set(), k_top + 1);
            for (k, brute) in counts.iter().enumerate() {
                c.eq(
                    format_args!("(m={m}, k={k})"),
                    count(piece, m as i64, k),
                    brute.clone(),
                );
            }
            bound.holds(
                format_args!("(m={m}, k={})", k_top + 1),
                counts[k_top + 1].is_zero(),
            );
        }
        out.push(c);
        out.push(bound);
    }

    let mut summed = Check::new(S, "anassa sum over p = brute force");
    let mut split = Check::new(S, "anassa below-diagonal split = brute force");
    for m in 0..=m_max {
        let table = count_below_diag_table(m);
        for (k, row) in table.iter().enumerate() {
            let total: BigInt = row.iter().sum();
            summed.eq(
                format_args!("(m={m}, k={k})"),
                anassa_total_by_sum(m, k),
                total,
            );
            for (p, brute) in row.iter().enumerate() {
                split.eq(
                    format_args!("(m={m}, k={k}, p={p})"),
                    anassa_pk_closed(m as i64, k, p),
                    brute.clone(),
                );
            }
        }
    }
    out.push(summed);
    out.push(split);
    out
}

pub fn identities(m_max: usize, k_max: usize) -> Vec<Check> {
    const S: &str = "identities";
    let mut out = Vec::new();

    let mut c = Check::new(S, "Pascal's rule off the origin on [-10,10]^2");
    for n in -10..=10 {
        for k in -10..=10 {
            if (n, k) != (0, 0) {
                c.eq(
                    format_args!("(n={n}, k={k})"),
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                );
            }
        }
    }
    out.push(c);

    let mut c = Check::new(S, "S(-n,-k) = c(k,n)");
    for n in 0..=12i64 {
        for k in 0..=12i64 {
            c.eq(
                format_args!("(n={n}, k={k})"),
                stirling2(-n, -k),
                stirling1(k as usize, n),
            );
        }
    }
    out.push(c);

    let mut c = Check::new(S, "alternating first-kind row sums");
    for j in 0..=12usize {
        let s: BigInt = (0..=j)
            .map(|i| sign(i as i64) * stirling1(j + 1, i as i64 + 1))
            .sum();
        c.eq(format_args!("(j={j})"), s, BigInt::from((j == 0) as i64));
    }
    out.push(c);

    let mut c = Check::new(S, "Gould sum = k+1");
    for k in 0..=20i64 {
        let s: BigInt = (0..=(k + 1) / 2)
            .map(|j| sign(j) * pow(2, (k - 2 * j).max(0) as u32) * binomial(k - j, k - 2 * j))
            .sum();
        c.eq(format_args!("(k={k})"), s, BigInt::from(k + 1));
    }
    out.push(c);

    let mut c = Check::new(S, "Ward expansion of S(m, m-k)");
    for k in 0..=8i64 {
        for m in 0..=20i64 {
            let s: BigInt = (0..=k)
                .map(|p| assoc_stirling2((k + p) as usize, p) * binomial(m, k + p))
                .sum();
            c.eq(format_args!("(m={m}, k={k})"), s, stirling2(m, m - k));
        }
    }
    out.push(c);

    let mut c = Check::new(S, "beta basis-change identity");
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
                    c.eq(
                        format_args!("(p={p}, q={q}, z={z}, x={x})"),
                        BigRational::from_integer(lhs),
                        rhs,
                    );
                }
            }
        }
    }
    out.push(c);

    let mut c = Check::new(S, "A_S(m,k,k) = S(m, m-k)");
    for m in 0..=10i64 {
        for k in 0..=m {
            c.eq(
                format_args!("(m={m}, k={k})"),
                anassa_pk_closed(m, k as usize, k as usize),
                stirling2(m, m - k),
            );
        }
    }
    out.push(c);

    let mut c = Check::new(S, "full-diagonal anassa expressions agree");
    for m in 0..=8usize {
        match kotesovec_diagonal(m) {
            Ok((a, b)) => {
                c.eq(format_args!("(m={m}) first vs second"), a.clone(), b);
                c.eq(
                    format_args!("(m={m}) vs closed form"),
                    a,
                    anassa_closed(m as i64, m),
                );
            }
            Err(e) => c.holds(format_args!("(m={m}) {e}"), false),
        }
    }
    out.push(c);

    let mut c = Check::new(S, "counts at m = -1 equal k!");
    for k in 0..=8usize {
        c.eq(
            format_args!("bishop (k={k})"),
            bishops_closed(-1, k),
            factorial(k),
        );
        c.eq(
            format_args!("anassa (k={k})"),
            anassa_closed(-1, k),
            factorial(k),
        );
    }
    out.push(c);

    let mut c = Check::new(S, "two-bishop polynomial");
    for m in 0..=20i64 {
        c.eq(
            format_args!("(m={m})"),
            bishops_closed(m, 2),
            bishops_pair(m),
        );
    }
    out.push(c);

    let mut c = Check::new(S, "bishop closed = convolution = m-dependent formula");
    for m in 0..=m_max {
        for k in 0..=k_max {
            let closed = bishops_closed(m as i64, k);
            c.eq(
                format_args!("conv (m={m}, k={k})"),
                bishops_convolution(m as i64, k),
                closed.clone(),
            );
            c.eq(
                format_args!("older (m={m}, k={k})"),
                bishops_arshon_kotesovec(m, k),
                closed,
            );
        }
    }
    out.push(c);

    let mut c = Check::new(S, "single-color recurrences = closed forms");
    let (mut w, mut b) = (ColorRecurrence::white(), ColorRecurrence::black());
    for m in 0..=m_max.max(20) {
        for k in 0..=k_max {
            c.eq(
                format_args!("white (m={m}, k={k})"),
                w.get(m, k),
                rw_closed(m as i64, k),
            );
            c.eq(
                format_args!("black (m={m}, k={k})"),
                b.get(m, k),
                rk_closed(m as i64, k),
            );
        }
    }
    out.push(c);

    let mut c = Check::new(S, "alternating power sum = white closed form");
    for m in 0..=m_max.max(20) {
        for k in 0..=m {
            match rw_arshon(m, k) {
                Ok(v) => c.eq(format_args!("(m={m}, k={k})"), v, rw_closed(m as i64, k)),
                Err(e) => c.holds(format_args!("(m={m}, k={k}) {e}"), false),
            }
        }
    }
    out.push(c);

    let mut c = Check::new(S, "even boards: white = black");
    for m in (0..=2 * m_max).step_by(2) {
        for k in 0..=k_max.min(8) {
            c.eq(
                format_args!("(m={m}, k={k})"),
                rw_closed(m as i64, k),
                rk_closed(m as i64, k),
            );
        }
    }
    out.push(c);

    let mut c = Check::new(S, "anassa split recurrence = closed form");
    let mut rec = AnassaRecurrence::new();
    for m in 0..=m_max {
        for k in 0..=k_max.min(8) {
            for p in 0..=k {
                c.eq(
                    format_args!("(m={m}, k={k}, p={p})"),
                    rec.get(m, k, p),
                    anassa_pk_closed(m as i64, k, p),
                );
            }
        }
    }
    out.push(c);
    out
}

/// Counts on `S_m - I_m` against `S_{m-1}`, plus the explicit bijections.
pub fn collapse(m_max: usize) -> Vec<Check> {
    const S: &str = "collapse";
    let mut out = Vec::new();
    for piece in [Piece::Bishop, Piece::Anassa] {
        let mut counts = Check::new(S, format!("{piece}: P(S_m - I_m, k) = P(S_(m-1), k)"));
        let mut map = Check::new(S, format!("{piece}: collapse bijection preserves attacks"));
        for m in 1..=m_max {
            let ok = verify_collapse(m, piece, piece.max_pieces(m)).unwrap_or(false);
            counts.holds(format_args!("(m={m})"), ok);
            let ok = collapse_bijection(m, piece)
                .map(|f| preserves_attacks(&f, &Board::square(m - 1), &piece.move_set()))
                .unwrap_or(false);
            map.holds(format_args!("(m={m})"), ok);
        }
        out.push(counts);
        out.push(map);
    }
    out
}

/// Quasi-polynomial coefficients for `k <= k_max`.
pub fn coeffs(k_max: usize) -> Vec<Check> {
    const S: &str = "coeffs";
    let mut out = Vec::new();
    for piece in [Piece::Bishop, Piece::Anassa, Piece::White, Piece::Black] {
        let mut c = Check::new(S, format!("{piece}: evaluation = closed form"));
        for k in 0..=k_max {
            let qp = QuasiPolynomial::for_piece(piece, k);
            for m in 0..=2 * k as i64 + 6 {
                match qp.evaluate(m) {
                    Ok(v) => c.eq(format_args!("(k={k}, m={m})"), v, count(piece, m, k)),
                    Err(e) => c.holds(format_args!("(k={k}, m={m}) {e}"), false),
                }
            }
        }
        out.push(c);
    }

    let mut c = Check::new(S, "bishop k <= 2 vectors");
    let one: Vec<BigRational> = [0, 0, 1]
        .map(|v| BigRational::from_integer(BigInt::from(v)))
        .to_vec();
    let pair = binomial_to_monomial(
        &[0, 0, 4, 14, 12].map(|v| BigRational::from_integer(BigInt::from(v))),
    );
    let b1 = QuasiPolynomial::for_piece(Piece::Bishop, 1);
    let b2 = QuasiPolynomial::for_piece(Piece::Bishop, 2);
    for r in 0..2 {
        c.holds(format_args!("k=1 residue {r}"), b1.coeffs[r] == one);
        c.holds(format_args!("k=2 residue {r}"), b2.coeffs[r] == pair);
    }
    out.push(c);

    let mut c = Check::new(S, "bishop effective periods");
    for k in 1..=k_max.max(3) {
        let want = if k <= 2 { 1 } else { 2 };
        c.eq(
            format_args!("(k={k})"),
            QuasiPolynomial::for_piece(Piece::Bishop, k).effective_period(),
            want,
        );
    }
    out.push(c);

    let mut c = Check::new(S, "anassa: single vector and (m)_k factor");
    for k in 0..=k_max.max(5) {
        let qp = QuasiPolynomial::for_piece(Piece::Anassa, k);
        c.eq(format_args!("period (k={k})"), qp.effective_period(), 1);
        let res = divide_by_falling_factorial(&qp.coeffs[0], k);
        c.holds(
            format_args!(
                "(k={k}) {}",
                res.as_ref().err().map_or(String::new(), |e| e.to_string())
            ),
            res.is_ok(),
        );
    }
    out.push(c);
    out
}
