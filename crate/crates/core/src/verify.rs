//! Self-contained acceptance checks.
//!
//! Every check generates its own inputs, uses exact arithmetic, and renders
//! deterministic text (no timing), so two runs can be compared byte for
//! byte. [`run_all`] evaluates checks 1 to 9 under rayon pools of one and
//! four threads and adds check 10, which compares the two renderings.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::{at_least_power, gprs_upper, highdim_pinned, kms, main2_exponent};
use crate::constructions::{build_is_lattice, build_kms_columns, build_perp_lines_3d, LatticeMode, LatticeSpec};
use crate::counting::{
    count_embeddings, distinct_dot_products, distinct_weight_tuples, incidences, pair_multiplicity, pinned_set,
    pinned_sizes, proof_multigraph, radial_histogram, CountOptions, TupleOptions,
};
use crate::sampling::{integer_grid, random_integer_set};
use crate::tree::{bipartition, make_path, make_perfect_binary, make_star};
use crate::{dot, AlphaHyperplane, Point, PointSet, Result, Scalar, Tree, WeightedTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub pass: bool,
    pub details: Vec<String>,
}

impl CriterionResult {
    fn new(id: u8, title: &str) -> Self {
        CriterionResult {
            id,
            title: title.to_string(),
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: String) {
        self.pass &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        self.details.push(format!("{mark} {detail}"));
    }

    pub fn status(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// One summary line followed by indented detail lines.
    pub fn render(&self) -> String {
        let mut out = format!("criterion {:>2}: {} {}\n", self.id, self.status(), self.title);
        for d in &self.details {
            out.push_str(&format!("    {d}\n"));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub criteria: Vec<CriterionResult>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out: String = self.criteria.iter().map(CriterionResult::render).collect();
        let passed = self.criteria.iter().filter(|c| c.pass).count();
        out.push_str(&format!("{passed}/{} criteria passed\n", self.criteria.len()));
        out
    }
}

fn s(text: &str) -> Scalar {
    text.parse().expect("literal scalar")
}

fn acceptance_trees() -> Result<Vec<(&'static str, Tree)>> {
    Ok(vec![
        ("path k=2", make_path(2)?),
        ("path k=3", make_path(3)?),
        ("star k=3", make_star(3)?),
        ("binary h=1", make_perfect_binary(1)?),
    ])
}

/// Column construction counts equal `⌊(n−k2)/k1⌋^{k1}`.
pub fn criterion_1() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(1, "column construction: brute-force count equals predicted count");
    for (name, tree) in acceptance_trees()? {
        let bip = bipartition(&tree);
        for n in [8usize, 12, 16, 20] {
            let built = build_kms_columns(&tree, n)?;
            let wt = WeightedTree::new(tree.clone(), built.weights.clone())?;
            let count = count_embeddings(&wt, &built.points, &CountOptions::default())?;
            let m = (n - bip.k2()) / bip.k1();
            let expected = BigUint::from(m).pow(bip.k1() as u32);
            let ok = BigUint::from(count) == expected && built.predicted_count == expected;
            r.check(
                ok,
                format!(
                    "{name} n={n}: count {count}, predicted {}, formula {expected}",
                    built.predicted_count
                ),
            );
        }
    }
    Ok(r)
}

/// Perpendicular lines give `⌊n/3⌋³` copies of the 2-path.
pub fn criterion_2() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(2, "perpendicular lines: brute-force count equals floor(n/3)^3");
    let tree = make_path(2)?;
    for n in [9usize, 12] {
        let built = build_perp_lines_3d(&tree, n)?;
        let wt = WeightedTree::new(tree.clone(), built.weights.clone())?;
        let count = count_embeddings(&wt, &built.points, &CountOptions::default())?;
        let expected = (n / 3).pow(3) as u64;
        r.check(
            count == expected,
            format!("path k=2 n={n}: count {count}, expected {expected}"),
        );
        let flagged = built.metadata.notes.iter().any(|note| note.contains("n^3"));
        r.check(
            flagged,
            format!("n={n}: scaling note: {}", built.metadata.notes.join("; ")),
        );
    }
    Ok(r)
}

/// `f·x = 1` for every `f` and every lattice point on `h_f`.
pub fn criterion_3() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(3, "lattice identity f.x = 1 on every hyperplane h_f");
    for mode in [LatticeMode::Paper, LatticeMode::Calibrated] {
        for d in [2usize, 3] {
            for q in [2u64, 3, 4] {
                let l = build_is_lattice(LatticeSpec { d, q, mode })?;
                let expected_checks = l.f.len() * (q as usize).pow(d as u32 - 1);
                let mut on_plane = 0;
                let mut failures = 0;
                for f in l.f.iter() {
                    // recover (c, b) from f = (-c/b, 1/b)
                    let b = Scalar::one() / f.coord(d - 1);
                    let c: Vec<Scalar> = (0..d - 1).map(|j| -(f.coord(j) * &b)).collect();
                    for x in l.e.iter() {
                        let plane: Scalar = c.iter().zip(x.coords()).map(|(cj, xj)| cj * xj).sum::<Scalar>() + &b;
                        if *x.coord(d - 1) == plane {
                            on_plane += 1;
                            if dot(f, x)? != Scalar::one() {
                                failures += 1;
                            }
                        }
                    }
                }
                let ok = failures == 0 && l.identity_checks == expected_checks && on_plane == l.unit_pairs;
                r.check(
                    ok,
                    format!(
                        "{mode:?} d={d} q={q}: {} build-time checks, {on_plane} lattice points on hyperplanes, {failures} failures",
                        l.identity_checks
                    )
                    .to_lowercase(),
                );
            }
        }
    }
    Ok(r)
}

/// Calibrated planar lattice has at least `q⁴/16` unit-product pairs.
pub fn criterion_4() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(4, "calibrated lattice: unit-product pairs >= q^4/16");
    for q in 4u64..=8 {
        let l = build_is_lattice(LatticeSpec {
            d: 2,
            q,
            mode: LatticeMode::Calibrated,
        })?;
        let pairs = pair_multiplicity(&l.e, &l.f, &Scalar::one())?;
        let threshold = Scalar::new(q.pow(4), 16u32);
        r.check(
            Scalar::from(pairs) >= threshold && pairs == l.unit_pairs,
            format!("q={q} N={}: {pairs} pairs, threshold {threshold}", q.pow(3)),
        );
    }
    Ok(r)
}

fn grids() -> Result<Vec<(usize, PointSet)>> {
    [8usize, 10, 12, 14]
        .iter()
        .map(|&side| Ok((side * side, integer_grid(2, side, 1)?)))
        .collect()
}

/// Shifted grids determine at least `n^{2/3}/4` distinct dot products.
pub fn criterion_5() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(5, "grids: distinct nonzero dot products >= n^(2/3)/4");
    for (n, grid) in grids()? {
        let stats = distinct_dot_products(&grid, &CountOptions::default());
        let ok = at_least_power(&BigUint::from(stats.distinct), &s("1/4"), n as u64, &s("2/3"));
        r.check(
            ok,
            format!(
                "n={n}: {} distinct values, max multiplicity {}",
                stats.distinct, stats.max_multiplicity
            ),
        );
    }
    Ok(r)
}

/// At least half of the grid points pin `n^{2/3}/4` distinct values.
pub fn criterion_6() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(6, "grids: at least ceil(n/2) pins with |Pi_p(E)| >= n^(2/3)/4");
    for (n, grid) in grids()? {
        let sizes = pinned_sizes(&grid, &CountOptions::default());
        let good = sizes
            .iter()
            .filter(|&&c| at_least_power(&BigUint::from(c), &s("1/4"), n as u64, &s("2/3")))
            .count();
        let min = sizes.iter().min().copied().unwrap_or(0);
        r.check(
            good >= n.div_ceil(2),
            format!("n={n}: {good} good pins, smallest pinned set {min}"),
        );
    }
    Ok(r)
}

/// Distinct weight 2-tuples of the 2-path on the 100-point grid.
pub fn criterion_7() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(7, "distinct weight 2-tuples on the n=100 grid >= n^(4/3)/8");
    let grid = integer_grid(2, 10, 1)?;
    let tuples = distinct_weight_tuples(&make_path(2)?, &grid, &TupleOptions::default())?;
    let ok = at_least_power(&BigUint::from(tuples.count), &s("1/8"), 100, &s("4/3"));
    r.check(ok, format!("path k=2 n=100: {} distinct tuples", tuples.count));
    Ok(r)
}

/// `Σ (|F ∩ ℓ_α(p)| − 1)` over alpha-lines with at least two points.
fn edge_sum_oracle(e: &PointSet, f: &PointSet) -> Result<usize> {
    let mut total = 0;
    for p in e.iter() {
        for alpha in pinned_set(p, f, &CountOptions::default())? {
            let line = AlphaHyperplane::new(p.clone(), alpha)?;
            let on = incidences(f, std::slice::from_ref(&line))?;
            total += on.saturating_sub(1);
        }
    }
    Ok(total)
}

fn multigraph_case(r: &mut CriterionResult, label: &str, e: &PointSet) -> Result<()> {
    let g = proof_multigraph(e, e, &CountOptions::default())?;
    let st = &g.stats;
    let oracle = edge_sum_oracle(e, e)?;
    let radially_distinct = radial_histogram(e).max <= 1;
    let m_ok = !radially_distinct || st.m == usize::from(st.e > 0);
    let ok = st.e == oracle && m_ok && st.crossings_within_bound();
    r.check(
        ok,
        format!(
            "{label} n={}: v={} e={} (oracle {oracle}) m={} t={} crossings={} <= {}{}",
            e.len(),
            st.v,
            st.e,
            st.m,
            st.t,
            st.drawing_crossings,
            st.crossing_bound,
            if radially_distinct { " [radially distinct]" } else { "" }
        ),
    );
    Ok(())
}

/// Proof multigraph invariants on the worked example and seeded random sets.
pub fn criterion_8() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(8, "proof multigraph: edge sum, multiplicity, and crossing bound");
    let worked = PointSet::new(
        2,
        vec![
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[1, 1]),
        ],
    )?;
    let g = proof_multigraph(&worked, &worked, &CountOptions::default())?;
    let st = &g.stats;
    r.check(
        (st.v, st.e, st.m, st.drawing_crossings) == (3, 3, 2, 0),
        format!(
            "worked example: v={} e={} m={} crossings={}",
            st.v, st.e, st.m, st.drawing_crossings
        ),
    );
    for i in 0..20u64 {
        let n = 20 + 2 * i as usize;
        let raw = random_integer_set(2, n, 12, 1000 + i)?;
        let e = if i % 2 == 0 {
            // keep the first point on each radial line
            let mut seen = std::collections::BTreeSet::new();
            let kept = raw
                .iter()
                .filter(|p| seen.insert(crate::geometry::radial_direction(p).expect("origin excluded")))
                .cloned()
                .collect();
            PointSet::new(2, kept)?
        } else {
            raw
        };
        multigraph_case(&mut r, &format!("seed {}", 1000 + i), &e)?;
    }
    Ok(r)
}

/// Exact exponent identities.
pub fn criterion_9() -> Result<CriterionResult> {
    let mut r = CriterionResult::new(9, "exponent consistency");
    for h in 1..=6u32 {
        let k = (1u64 << (h + 1)) - 2;
        let (a, b) = (kms(k)?, gprs_upper(h)?);
        r.check(a == b, format!("kms({k}) = {a}, 2^{h} = {b}"));
    }
    let hp = highdim_pinned(2)?;
    r.check(hp == s("2/3"), format!("highdim_pinned(2) = {hp}"));
    let m2 = main2_exponent(2, 2)?;
    r.check(m2 == Scalar::from(2), format!("main2_exponent(2, 2) = {m2}"));
    Ok(r)
}

/// Checks 1 to 9 in order.
pub fn run_core() -> Result<Vec<CriterionResult>> {
    Ok(vec![
        criterion_1()?,
        criterion_2()?,
        criterion_3()?,
        criterion_4()?,
        criterion_5()?,
        criterion_6()?,
        criterion_7()?,
        criterion_8()?,
        criterion_9()?,
    ])
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| crate::Error::param(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Compares renderings of checks 1 to 9 produced under different pools.
pub fn criterion_10(runs: &[(usize, &[CriterionResult])]) -> CriterionResult {
    let mut r = CriterionResult::new(10, "determinism across thread counts");
    let render = |c: &[CriterionResult]| -> String { c.iter().map(CriterionResult::render).collect() };
    if let Some(((t0, base), rest)) = runs.split_first() {
        let reference = render(base);
        for (t, other) in rest {
            let same = render(other) == reference;
            r.check(
                same,
                format!("{t0} vs {t} threads: {} bytes, identical = {same}", reference.len()),
            );
        }
    }
    r
}

/// Runs every check; checks 1 to 9 are reported from the single-thread run.
pub fn run_all() -> Result<VerifyReport> {
    let single = in_pool(1, run_core)??;
    let four = in_pool(4, run_core)??;
    let determinism = criterion_10(&[(1, &single), (4, &four)]);
    let mut criteria = single;
    criteria.push(determinism);
    Ok(VerifyReport { criteria })
}
