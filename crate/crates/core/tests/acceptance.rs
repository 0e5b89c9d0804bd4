//! Acceptance criteria, one PASS/FAIL line each with sub-lines below.
//!
//! Some criteria are stated in a form that does not hold; those sub-lines
//! print FAIL next to a passing corrected form. `EXPECTED_FAIL` lists them,
//! and the run fails if any line comes out differently, in either
//! direction.

use std::time::{Duration, Instant};

use qsymkit::composition::Composition;
use qsymkit::families::counterexamples::{combination, four_posets, positivity};
use qsymkit::families::eulerian::{
    cycle_eulerian_by_inversion, cycle_eulerian_closed_form, cycle_eulerian_q, moebius_q_int_sides, q_graded,
    SingleRowTerm,
};
use qsymkit::families::llt::{llt_vertical_psi, non_unimodal_witness};
use qsymkit::families::matroid::{bipartite_closed_form, matroid_psi, uniform_closed_form, Matroid};
use qsymkit::families::trees::distinguishes_rooted_trees;
use qsymkit::posets::DirectedGraph;
use qsymkit::textfmt::sym_to_text;
use qsymkit::verify::{
    bases_suite, chromatic_fixtures, cons_suite, counterexamples_suite, eulerian_checks, kp_suite, kpe_suite,
    roichman_checks, unimodal_suite, vertical_strip_fixtures, Check,
};

/// Sub-lines whose FAIL is expected: the printed statements that do not
/// hold. Each has a corrected sibling that passes.
const EXPECTED_FAIL: &[&str] = &["10a", "12a", "13b", "13e", "14b", "14d"];

struct Line {
    id: String,
    check: Check,
}

struct Criterion {
    num: usize,
    title: &'static str,
    lines: Vec<Line>,
}

fn lines(num: usize, checks: Vec<Check>) -> Vec<Line> {
    checks
        .into_iter()
        .enumerate()
        .map(|(i, check)| Line { id: format!("{}{}", num, (b'a' + i as u8) as char), check })
        .collect()
}

fn within(name: &str, took: Duration, limit: Duration) -> Check {
    Check::holds(format!("{} in under {}s", name, limit.as_secs()), took < limit, || {
        format!("took {:.1}s", took.as_secs_f64())
    })
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn graph(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
    DirectedGraph::new(n, edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect()).unwrap()
}

fn criteria() -> Vec<Criterion> {
    let mut out = Vec::new();

    let (uni, t_uni) = timed(|| unimodal_suite(9));
    let mut c1: Vec<Check> = uni[..3].to_vec();
    c1.push(within("counting formulas", t_uni, Duration::from_secs(30)));
    out.push(Criterion { num: 1, title: "unimodal and V counting formulas, n <= 9", lines: lines(1, c1) });
    out.push(Criterion {
        num: 2,
        title: "A001353 recursion and the trivariate generating function",
        lines: lines(2, uni[3..].to_vec()),
    });

    let cons = cons_suite(7);
    out.push(Criterion { num: 3, title: "hook formula for CONS, n <= 7", lines: lines(3, cons[..2].to_vec()) });
    out.push(Criterion {
        num: 4,
        title: "alternating CONS sum (checked to n <= 7)",
        lines: lines(4, cons[2..].to_vec()),
    });

    out.push(Criterion { num: 5, title: "F to Psi consistency, Psi[2,3,1] display", lines: lines(5, bases_suite(8)) });

    let (kp, t_kp) = timed(|| kp_suite(6));
    let mut c6: Vec<Check> = kp[..3].to_vec();
    c6.push(within("K_P routes", t_kp, Duration::from_secs(300)));
    out.push(Criterion { num: 6, title: "K_P routes agree, certificates in N", lines: lines(6, c6) });
    out.push(Criterion {
        num: 7,
        title: "|O*| closed forms: bipartite, paths, cycles",
        lines: lines(7, kp[3..].to_vec()),
    });

    out.push(Criterion { num: 8, title: "K_(P,E) and K^d_P against coloring oracles", lines: lines(8, kpe_suite(5)) });

    out.push(Criterion { num: 9, title: "omega X fixtures for G and H", lines: lines(9, chromatic_fixtures()) });

    // the printed instance: a 5-vertex graph with a degree 3 index
    let printed = graph(5, &[(1, 2), (1, 3), (2, 4), (2, 5)]);
    let r = llt_vertical_psi(&printed, 0b11, true).unwrap();
    let at12 = r.certificates.get(&Composition::of(&[1, 2])).cloned();
    let mut c10 = vec![Check::holds(
        "printed G = {1->2,1->3,2->4,2->5}, S = {1->2,1->3}: 1+q^2 on Psi[1,2]",
        at12.is_some() && non_unimodal_witness(&r).is_some(),
        || format!("degree {}, no Psi[1,2] term, all certificates unimodal", r.element.degree()),
    )];
    c10.extend(vertical_strip_fixtures());
    let sweep = qsymkit::families::llt::unimodality_sweep(5).unwrap();
    c10.push(Check::pass_unless(
        format!("unicellular certificates unimodal on all {} oriented graphs <= 5", sweep.graphs_checked),
        sweep.counterexample.map(|(g, a)| format!("{:?} alpha={}", g.edges, a)),
    ));
    out.push(Criterion { num: 10, title: "vertical strip non-unimodality, unimodality sweep", lines: lines(10, c10) });

    out.push(Criterion { num: 11, title: "Roichman coefficients", lines: lines(11, roichman_checks(5)) });

    let mut printed_bad = None;
    let mut fixed_bad = None;
    for n in 1..=6 {
        for r in 0..=n {
            let psi = matroid_psi(&Matroid::uniform(n, r).unwrap(), true);
            if !psi.all_checks_passed() || psi.element != uniform_closed_form(n, r) {
                fixed_bad.get_or_insert(format!("U^{}_{}", r, n));
            }
            if r >= 1 && printed_bad.is_none() && psi.element != bipartite_closed_form(r, n - r, true) {
                printed_bad = Some(format!("U^{}_{}", r, n));
            }
        }
    }
    out.push(Criterion {
        num: 12,
        title: "uniform matroid closed form",
        lines: lines(
            12,
            vec![
                Check::pass_unless(
                    "printed sum_k C(n,k+1) Psi[1^(r-1),k+1,1^(m-k)] matches both routes, n <= 6",
                    printed_bad,
                ),
                Check::pass_unless(
                    "Psi[1^(m-1),k+1,1^(r-k)] with coefficient 1 at k = 0 matches both routes, n <= 6",
                    fixed_bad,
                ),
            ],
        ),
    });

    let eul = eulerian_checks(6, 30);
    let one = q_graded(&cycle_eulerian_q(1));
    let printed_n1 = one == cycle_eulerian_closed_form(1, SingleRowTerm::QTimesA0).to_qsym()
        && one == cycle_eulerian_by_inversion(1);
    let (l1, r1) = moebius_q_int_sides(1);
    out.push(Criterion {
        num: 13,
        title: "Eulerian and cycle Eulerian closed forms, amusing identity",
        lines: lines(
            13,
            vec![
                eul[0].clone(),
                Check::holds("cycle Eulerian closed form as printed at n = 1", printed_n1, || {
                    "q p_1 against p_1".into()
                }),
                Check::holds(
                    "cyclic words and cycle Eulerian closed form as printed for 2 <= n <= 6, with one-row term 1 for n <= 6",
                    eul[2].passed && eul[3].passed && eul[1].passed,
                    || format!("{:?} {:?}", eul[2].witness, eul[3].witness),
                ),
                eul[4].clone(),
                Check::holds("amusing identity at n = 1", l1 == r1, || format!("{} against {}", l1, r1)),
            ],
        ),
    });

    let mut c14 = Vec::new();
    let r = positivity(&combination(&four_posets(), &[2, 3, 2, 0])).unwrap();
    let s = sym_to_text(&r.schur, false);
    let h = sym_to_text(&r.complete, false);
    c14.push(Check::holds(
        "2K_A+3K_B+2K_C = 7s4+7s31+s22+2s211, byte-exact",
        s == "7*s[4] + 7*s[3,1] + s[2,2] + 2*s[2,1,1]",
        || s.clone(),
    ));
    c14.push(Check::holds(
        "printed h-form 2h4+4h31-h22+2h1111, byte-exact",
        h == "2*h[4] + 4*h[3,1] - h[2,2] + 2*h[1,1,1,1]",
        || h.clone(),
    ));
    c14.push(Check::holds(
        "h-form 2h4+4h31-h22+2h211, byte-exact",
        h == "2*h[4] + 4*h[3,1] - h[2,2] + 2*h[2,1,1]",
        || h.clone(),
    ));
    let printed = positivity(&combination(&four_posets(), &[1, 3, 1, 3]));
    c14.push(Check::holds(
        "printed K_A+3K_B+K_C+3K_D = 8s4+5s31-s22+s211",
        printed.as_ref().is_ok_and(|p| sym_to_text(&p.schur, false) == "8*s[4] + 5*s[3,1] - s[2,2] + s[2,1,1]"),
        || match &printed {
            Ok(p) => sym_to_text(&p.schur, false),
            Err(e) => e.to_string(),
        },
    ));
    c14.push(counterexamples_suite()[2].clone());
    out.push(Criterion { num: 14, title: "positivity counterexamples", lines: lines(14, c14) });

    let (trees, t_trees) = timed(|| (1..=6).map(distinguishes_rooted_trees).find(|r| !r.passed()));
    out.push(Criterion {
        num: 15,
        title: "X distinguishes rooted trees",
        lines: lines(
            15,
            vec![
                Check::pass_unless(
                    "rooted trees on <= 6 vertices have distinct X",
                    trees.map(|r| format!("n={}", r.n)),
                ),
                within("rooted tree sweep", t_trees, Duration::from_secs(120)),
            ],
        ),
    });
    out
}

fn main() {
    let start = Instant::now();
    let all = criteria();
    let mut surprises = Vec::new();
    for c in &all {
        let ok = c.lines.iter().all(|l| l.check.passed);
        println!("{}  {:>2}  {}", if ok { "PASS" } else { "FAIL" }, c.num, c.title);
        for l in &c.lines {
            println!("    {}  {:<4} {}", if l.check.passed { "PASS" } else { "FAIL" }, l.id, l.check.name);
            if let Some(w) = &l.check.witness {
                println!("                witness: {}", w);
            }
            let expected = !EXPECTED_FAIL.contains(&l.id.as_str());
            if l.check.passed != expected {
                surprises.push(l.id.clone());
            }
        }
    }
    let failing = all.iter().filter(|c| !c.lines.iter().all(|l| l.check.passed)).count();
    println!(
        "{} criteria, {} pass, {} fail ({:.1}s)",
        all.len(),
        all.len() - failing,
        failing,
        start.elapsed().as_secs_f64()
    );
    for id in EXPECTED_FAIL {
        if !all.iter().flat_map(|c| &c.lines).any(|l| l.id == *id) {
            surprises.push(format!("{} (missing)", id));
        }
    }
    if !surprises.is_empty() {
        println!("unexpected results: {}", surprises.join(", "));
        std::process::exit(1);
    }
}
