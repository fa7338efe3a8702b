//! The ten acceptance criteria, each printed as one pass/fail line. All
//! comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ribbonpoly::identities::{
    check_bracket_vs_cp, check_determination, check_duality, check_genus, check_homfly_formula,
    check_jones_mirror, check_jones_paths, check_labels, check_rearranged_br, check_tensor_c3,
    check_tensor_odd, determination_points, verify_all, Reading, UpperLimit, VerificationReport,
    TENSOR_ODD_BUDGET,
};
use ribbonpoly::invariants::{
    bollobas_riordan, boundary_label, default_writhe, homfly_formula, jones_cp, kauffman_bracket,
    tutte, CyclicWord, Letter,
};
use ribbonpoly::laurent::{LaurentPoly, Monomial};
use ribbonpoly::ribbon::samples::{bridge, planar_loop, torus_loops, triangle};
use ribbonpoly::ribbon::{isomorphic, random_graph, GraphFamily, RibbonGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Corpus) -> Outcome);

struct Corpus {
    family: GraphFamily,
    random: Vec<RibbonGraph>,
}

impl Corpus {
    fn up_to(&self, e: usize) -> impl Iterator<Item = RibbonGraph> + '_ {
        self.family.graphs_up_to(e)
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn require_pass(r: &VerificationReport) -> Result<(), String> {
    require(r.passed(), || r.to_string())
}

fn mono(pairs: &[(&str, i64)]) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::from_ints(pairs.iter().copied()))
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn br_sums_agree(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for g in c.up_to(5).chain(c.random.iter().cloned()) {
        require_pass(&check_rearranged_br(&g))?;
        n += 1;
    }
    let took = start.elapsed();
    require(took < Duration::from_secs(60), || {
        format!("took {took:.1?}")
    })?;
    Ok(format!("{n} graphs in {took:.1?}"))
}

fn homfly_formula_agrees(c: &Corpus) -> Outcome {
    let mut n = 0;
    for g in c.up_to(5).chain(c.random.iter().cloned()) {
        require_pass(&check_homfly_formula(&g))?;
        n += 1;
    }
    let p1 = homfly_formula(&bridge());
    require(p1 == LaurentPoly::one(), || format!("P(F1) = {p1}"))?;
    let p2 = homfly_formula(&planar_loop());
    let expect = mono(&[("x", -1), ("y", 1)]) + mono(&[("x", -1), ("y", -1)])
        - mono(&[("x", -3), ("y", -1)]);
    require(p2 == expect, || format!("P(F2) = {p2}"))?;
    Ok(format!("{n} graphs, P(F1) = {p1}, P(F2) = {p2}"))
}

fn known_values(_: &Corpus) -> Outcome {
    let cases = [
        (bollobas_riordan(&bridge()).to_string(), "1 + 1*alpha"),
        (bollobas_riordan(&planar_loop()).to_string(), "1 + 1*beta"),
        (
            bollobas_riordan(&torus_loops()).to_string(),
            "1 + 2*beta + 1*beta^2*gamma^2",
        ),
        (tutte(&triangle()).to_string(), "1*y_T + 1*x_T + 1*x_T^2"),
    ];
    for (got, want) in &cases {
        require(got == want, || format!("got `{got}`, want `{want}`"))?;
    }
    Ok(format!("{} strings", cases.len()))
}

fn duality(c: &Corpus) -> Outcome {
    let (mut n, mut positive_genus) = (0, 0);
    for g in c.up_to(6) {
        require_pass(&check_duality(&g).map_err(|e| e.to_string())?)?;
        let d = g.dual().map_err(|e| e.to_string())?;
        require(d.num_vertices() == g.metrics().p, || {
            format!("{}: v(F*) != p(F)", g.name())
        })?;
        require(
            isomorphic(&d.dual().map_err(|e| e.to_string())?, &g),
            || format!("{}: dual is not an involution", g.name()),
        )?;
        n += 1;
        positive_genus += usize::from(g.genus() >= 1);
    }
    require(positive_genus >= 10, || {
        format!("only {positive_genus} graphs of positive genus")
    })?;
    Ok(format!("{n} graphs, {positive_genus} of positive genus"))
}

fn determination(c: &Corpus) -> Outcome {
    let points = determination_points(25, 11);
    let mut n = 0;
    for g in c.up_to(6) {
        let r = check_determination(&g, &points, Reading::PlusOne).map_err(|e| e.to_string())?;
        require(r.points >= 25, || {
            format!("{}: only {} points", g.name(), r.points)
        })?;
        require_pass(&r)?;
        n += 1;
    }
    let control = [(rat(2), rat(1))];
    let plus = check_determination(&planar_loop(), &control, Reading::PlusOne)
        .map_err(|e| e.to_string())?;
    require_pass(&plus)?;
    let minus = check_determination(&planar_loop(), &control, Reading::MinusOne);
    require(
        !minus.as_ref().is_ok_and(VerificationReport::passed),
        || "the alpha = x^2 - 1 reading passed on F2 at (2, 1)".into(),
    )?;
    Ok(format!(
        "{n} graphs at 25 points; x^2 - 1 reading fails on F2 at (2, 1)"
    ))
}

fn genus_recovery(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for g in c.up_to(8) {
        require_pass(&check_genus(&g).map_err(|e| e.to_string())?)?;
        n += 1;
    }
    Ok(format!("{n} graphs in {:.1?}", start.elapsed()))
}

fn tensor_products(c: &Corpus) -> Outcome {
    let (mut three, mut odd) = (0, 0);
    for (seed, g) in c.up_to(5).enumerate() {
        let r = check_tensor_c3(&g, seed as u64);
        require(r.mode.to_string() == "multipoint", || r.to_string())?;
        require_pass(&r)?;
        three += 1;
    }
    let extra = c
        .random
        .iter()
        .filter(|g| g.is_connected() && g.num_edges() * 2 <= TENSOR_ODD_BUDGET);
    for (seed, g) in c.up_to(5).chain(extra.cloned()).enumerate() {
        for p in 1..=2u32 {
            if g.num_edges() << p <= TENSOR_ODD_BUDGET {
                let r = check_tensor_odd(&g, p, seed as u64, UpperLimit::Exclusive)
                    .map_err(|e| e.to_string())?;
                require_pass(&r)?;
                odd += 1;
            }
        }
    }
    let control =
        check_tensor_odd(&planar_loop(), 1, 0, UpperLimit::Inclusive).map_err(|e| e.to_string())?;
    require(!control.passed(), || {
        "the inclusive upper limit passed on F2".into()
    })?;
    Ok(format!(
        "{three} C3 checks, {odd} odd-cycle checks; inclusive limit fails on F2"
    ))
}

fn jones(c: &Corpus) -> Outcome {
    let mut n = 0;
    for g in c.up_to(5) {
        require_pass(&check_jones_paths(&g))?;
        let w = default_writhe(&g);
        for writhe in [w, w + 2, -w] {
            require_pass(&check_bracket_vs_cp(&g, writhe).map_err(|e| e.to_string())?)?;
        }
        require_pass(&check_jones_mirror(&g).map_err(|e| e.to_string())?)?;
        n += 1;
    }
    let unknot = jones_cp(&bridge(), -1).map_err(|e| e.to_string())?;
    require(unknot == LaurentPoly::one(), || {
        format!("jones_cp(F1, -1) = {unknot}")
    })?;
    Ok(format!("{n} graphs; jones_cp(F1, -1) = {unknot}"))
}

fn labels(c: &Corpus) -> Outcome {
    let mut n = 0;
    for g in c.up_to(6) {
        require_pass(&check_labels(&g).map_err(|e| e.to_string())?)?;
        n += 1;
    }
    let mut walks = 0;
    for g in c.up_to(4) {
        for s in g.states() {
            for w in s.boundary_walks() {
                let label = boundary_label(&g, &w);
                require(CyclicWord::new(label.letters().to_vec()) == label, || {
                    format!("{}: label {label:?} is not canonical", g.name())
                })?;
                for k in 0..w.darts.len() {
                    let mut turned = w.clone();
                    turned.darts.rotate_left(k);
                    require(boundary_label(&g, &turned) == label, || {
                        format!("{}: rotated walk changes its label", g.name())
                    })?;
                }
                walks += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..2000 {
        let len = rng.gen_range(0..16);
        let word: Vec<Letter> = (0..len)
            .map(|_| Letter {
                edge: rng.gen_range(0..3),
                inverse: rng.gen(),
            })
            .collect();
        let canon = CyclicWord::new(word.clone());
        require(CyclicWord::new(canon.letters().to_vec()) == canon, || {
            format!("{word:?} not idempotent")
        })?;
        let mut turned = word.clone();
        turned.rotate_left(rng.gen_range(0..len.max(1)));
        require(CyclicWord::new(turned) == canon, || {
            format!("{word:?} not rotation invariant")
        })?;
    }
    Ok(format!(
        "{n} graphs, {walks} boundary walks, 2000 random words"
    ))
}

fn performance(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut reports = 0;
    for (seed, g) in c.up_to(5).enumerate() {
        for r in verify_all(&g, seed as u64) {
            require_pass(&r)?;
            reports += 1;
        }
    }
    let corpus_time = start.elapsed();
    require(corpus_time < Duration::from_secs(300), || {
        format!("verify all took {corpus_time:.1?}")
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let g = loop {
        let g = random_graph(&mut rng, 16, 0);
        if g.is_connected() {
            break g;
        }
    };
    let start = Instant::now();
    let r = bollobas_riordan(&g);
    let p = homfly_formula(&g);
    let j = jones_cp(&g, default_writhe(&g)).map_err(|e| e.to_string())?;
    let b = kauffman_bracket(&g);
    let big_time = start.elapsed();
    require(
        !r.is_zero() && !p.is_zero() && !j.is_zero() && !b.is_zero(),
        || "zero state sum".into(),
    )?;
    require(big_time < Duration::from_secs(60), || {
        format!("e = 16 state sums took {big_time:.1?}")
    })?;
    Ok(format!(
        "verify all: {reports} reports in {corpus_time:.1?}; e = 16 state sums in {big_time:.1?}"
    ))
}

fn main() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let random = (0..100)
        .map(|i| {
            let e = rng.gen_range(1..=8);
            let isolated = rng.gen_range(0..=1);
            random_graph(&mut rng, e, isolated).with_name(format!("random{i}"))
        })
        .collect();
    let corpus = Corpus {
        family: GraphFamily::up_to(8),
        random,
    };
    println!("corpus ready in {:.1?}", start.elapsed());

    let criteria: [Criterion; 10] = [
        ("Bollobás–Riordan sums agree", br_sums_agree),
        ("HOMFLY formula and resolution agree", homfly_formula_agrees),
        ("known small values", known_values),
        ("duality", duality),
        ("determination by HOMFLY", determination),
        ("genus recovery", genus_recovery),
        ("tensor products with cycles", tensor_products),
        ("Jones cross-checks", jones),
        ("labelled HOMFLY and boundary labels", labels),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&corpus)))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
