//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use octacat::category::{Category, Morphism};
use octacat::diagrams::{colored_classes, even_partitions, partitions, Partition, Sign};
use octacat::matrix_rep::{averaging_projector, functor_g, MatrixDatum, MatrixQ, RepSpec};
use octacat::omega;
use octacat::poly::{qi, Q};
use octacat::presentations::{verify_datum, Presentation};
use octacat::rank::DEFAULT_SEED;
use octacat::report::CheckReport;
use octacat::suites;

fn failures(reports: &[CheckReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            format!(
                "{} {} {}",
                r.check,
                r.params,
                r.counterexample.clone().unwrap_or_default()
            )
        })
        .collect()
}

const BELL: [usize; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];

/// Set partitions of `n` points into blocks of even size: the block of the
/// first point takes `2j - 1` partners.
fn even_set_partitions(n: usize) -> usize {
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    if n == 0 {
        return 1;
    }
    (1..=n / 2)
        .map(|j| binom(n - 1, 2 * j - 1) * even_set_partitions(n - 2 * j))
        .sum()
}

/// Orbits of all labelings of `p` under flipping whole blocks, each
/// represented by the labeling that is `+1` at every block minimum.
fn labeling_orbits(p: &Partition) -> BTreeSet<Vec<i8>> {
    let n = p.k() + p.l();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let labels: Vec<i8> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect();
        let mut canon = labels.clone();
        for b in 0..p.num_blocks() {
            let members: Vec<usize> = (0..n).filter(|&i| p.block_of_pos(i) == b).collect();
            if labels[members[0]] == -1 {
                for &i in &members {
                    canon[i] = -canon[i];
                }
            }
        }
        out.insert(canon);
    }
    out
}

fn counting() -> Vec<String> {
    let mut bad = failures(&suites::counting(8));
    for (total, &bell) in BELL.iter().enumerate() {
        for k in 0..=total {
            let l = total - k;
            let all = partitions(k, l);
            if all.len() != bell {
                bad.push(format!("|P({k},{l})| = {}", all.len()));
            }
            if even_partitions(k, l).len() != even_set_partitions(total) {
                bad.push(format!(
                    "|P_even({k},{l})| = {}",
                    even_partitions(k, l).len()
                ));
            }
            if total > 6 {
                continue;
            }
            let orbits: usize = all.iter().map(|p| labeling_orbits(p).len()).sum();
            let formula: usize = all.iter().map(|p| 1 << (total - p.num_blocks())).sum();
            let classes = colored_classes(k, l);
            if orbits != formula || classes.len() != orbits {
                bad.push(format!(
                    "coloured ({k},{l}): {} classes, {orbits} orbits",
                    classes.len()
                ));
            }
            for c in &classes {
                let labels: Vec<i8> = c
                    .labels()
                    .iter()
                    .map(|s| if *s == Sign::Plus { 1 } else { -1 })
                    .collect();
                if !labeling_orbits(c.base()).contains(&labels) {
                    bad.push(format!("{c} is not an orbit representative"));
                }
            }
        }
    }
    if even_partitions(2, 2).len() != 4 {
        bad.push("|P_even(2,2)| != 4".into());
    }
    bad
}

fn schur_weyl() -> Vec<String> {
    let mut bad = failures(&suites::schur_weyl());
    // the averaged dimension is the trace of the projector
    for spec in [RepSpec::reflection(3), RepSpec::permutation(2)] {
        for m in 0..=4 {
            let p = averaging_projector(spec, m).unwrap();
            if Q::from_integer((p.rank() as i64).into()) != p.trace() {
                bad.push(format!("{spec:?} m={m}: rank differs from trace"));
            }
        }
    }
    bad
}

/// `G(f)` written out from the labelling condition directly.
fn g_oracle(p: &Partition, n: usize) -> MatrixQ {
    let (k, l) = (p.k(), p.l());
    let total = k + l;
    let mut trip = Vec::new();
    for x in 0..n.pow(total as u32) {
        let digits: Vec<usize> = (0..total)
            .map(|i| x / n.pow((total - 1 - i) as u32) % n)
            .collect();
        let ok = (0..total).all(|a| {
            (0..total).all(|b| p.block_of_pos(a) != p.block_of_pos(b) || digits[a] == digits[b])
        });
        if ok {
            let col = digits[..k].iter().fold(0, |acc, d| acc * n + d);
            let row = digits[k..].iter().fold(0, |acc, d| acc * n + d);
            trip.push((row, col, qi(1)));
        }
    }
    MatrixQ::from_triplets(n.pow(l as u32), n.pow(k as u32), trip)
}

fn square() -> Vec<String> {
    let mut bad = Vec::new();
    for n in [2usize, 3] {
        bad.extend(failures(&suites::square(n, 3)));
        for (k, l) in [(1, 1), (2, 0), (2, 2), (3, 1)] {
            for p in even_partitions(k, l) {
                let f = Morphism::from_partition(&Category::even(), p.clone()).unwrap();
                let g = functor_g(&f.specialize(&qi(n as i64)), n).unwrap();
                if g != g_oracle(&p, n) {
                    bad.push(format!(
                        "G({p}) at n={n} disagrees with the labelling oracle"
                    ));
                }
            }
        }
    }
    bad
}

fn omega_battery() -> Vec<String> {
    let mut bad = failures(&omega::omega_battery(DEFAULT_SEED));
    for total in 0..=6 {
        for k in 0..=total {
            let r = omega::verify_full_faithful(k, total - k, DEFAULT_SEED);
            let want = even_set_partitions(total);
            if r.params["faithful_rank"] != want {
                bad.push(format!(
                    "rank at ({k},{}) is {}, expected {want}",
                    total - k,
                    r.params["faithful_rank"]
                ));
            }
        }
    }
    bad
}

fn datum() -> Vec<String> {
    let mut bad = Vec::new();
    if let Err(e) = verify_datum(MatrixDatum::colored(2)) {
        bad.push(e.to_string());
    }
    if let Err(e) = verify_datum(MatrixDatum::even(2)) {
        bad.push(e.to_string());
    }
    bad.extend(failures(&suites::datum(Presentation::ParZ2, 2)));
    bad
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Vec<String>);
    let criteria: [Criterion; 8] = [
        ("relation suites", || {
            let mut r = suites::relations(Presentation::ParZ2);
            r.extend(suites::relations(Presentation::ParT));
            failures(&r)
        }),
        ("basis counts", counting),
        ("category axioms", || {
            let mut r = suites::category_axioms(&Category::even(), 2);
            r.extend(suites::category_axioms(&Category::colored(), 2));
            failures(&r)
        }),
        ("interpolation functoriality", || {
            failures(&suites::interpolation())
        }),
        ("schur-weyl regimes", schur_weyl),
        ("omega battery", omega_battery),
        ("commuting square", square),
        ("matrix data", datum),
    ];
    let mut ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let bad = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {name}: {verdict} ({secs:.1}s)", i + 1);
        for b in bad.iter().take(5) {
            println!("    {b}");
        }
        ok &= bad.is_empty();
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
