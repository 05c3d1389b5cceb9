//! Built-in consistency suites behind `plhom verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use plhom::analysis::{g_product_identity_holds, rank_one_shift, taylor_coeffs_rational};
use plhom::classifier::{classify, Verdict};
use plhom::exact_algebra::{format_rational, int, rat, Rational};
use plhom::graph_core::{corpus::planar_corpus, stretch, thicken, GraphFile, Multigraph};
use plhom::partition::{BruteForce, Elimination, SymMatrix};
use plhom::poly_solvers::dispatch_solve;
use plhom::Error;

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: usize,
    /// The first few counterexamples.
    pub failures: Vec<Value>,
}

const MAX_DUMPS: usize = 10;

struct Tally {
    checks: usize,
    failed: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, dump: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_DUMPS {
                self.failures.push(dump());
            }
        }
    }

    fn report(self, suite: &str, seed: u64) -> SuiteReport {
        SuiteReport { suite: suite.into(), seed, passed: self.failed == 0, checks: self.checks, failures: self.failures }
    }
}

pub fn run_suite(name: &str, seed: u64, brute: &BruteForce) -> Result<SuiteReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tally = match name {
        "identities" => identities(&mut rng, brute)?,
        "solvers-vs-brute" => solvers_vs_brute(&mut rng, brute)?,
        "taylor-claims" => taylor_claims(&mut rng)?,
        other => {
            return Err(Error::Input(format!("unknown suite {other:?}; expected identities, solvers-vs-brute or taylor-claims")))
        }
    };
    Ok(tally.report(name, seed))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn random_matrix(rng: &mut ChaCha8Rng, q: usize) -> SymMatrix {
    let upper: Vec<Rational> = (0..q * (q + 1) / 2).map(|_| small_rational(rng)).collect();
    SymMatrix::from_upper(q, &upper)
}

fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let e = rng.gen_range(0..=max_edges);
    let edges = (0..e).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::new(n, edges).expect("endpoints in range")
}

fn dump(m: &SymMatrix, g: &Multigraph, extra: Value) -> Value {
    json!({ "matrix": serde_json::to_value(m).expect("matrix"), "graph": serde_json::to_value(GraphFile::from_graph(g)).expect("graph"), "detail": extra })
}

/// Z_M(T_k G) = Z_{T_k M}(G) and Z_M(S_k G) = Z_{M^k}(G) for k ≤ 4. The
/// stretched side goes through vertex elimination, the rest through brute force.
fn identities(rng: &mut ChaCha8Rng, brute: &BruteForce) -> Result<Tally, Error> {
    let mut t = Tally::new();
    let elim = Elimination::default();
    for _ in 0..100 {
        let q = rng.gen_range(1..=3);
        let m = random_matrix(rng, q);
        let g = random_graph(rng, 6, 8);
        let k = rng.gen_range(1..=4);
        let lhs = brute.z(&m, &thicken(&g, k)?)?;
        let rhs = brute.z(&m.thickened(k), &g)?;
        t.check(lhs == rhs, || dump(&m, &g, json!({ "identity": "thicken", "k": k })));
        let lhs = elim.z(&m, &stretch(&g, k)?)?;
        let rhs = brute.z(&m.power(k), &g)?;
        t.check(lhs == rhs, || dump(&m, &g, json!({ "identity": "stretch", "k": k })));
    }
    Ok(t)
}

/// One random matrix from each tractable family.
pub fn tractable_samples(rng: &mut ChaCha8Rng) -> Vec<(&'static str, SymMatrix)> {
    let mut out = Vec::new();
    let nz = |rng: &mut ChaCha8Rng| loop {
        let r = small_rational(rng);
        if r != Rational::from_integer(0.into()) {
            break r;
        }
    };
    let q = rng.gen_range(2..=4);
    let u: Vec<Rational> = (0..q).map(|_| small_rational(rng)).collect();
    let sign = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
    let rank_one = (0..q).map(|i| (0..q).map(|j| &sign * &u[i] * &u[j]).collect()).collect();
    out.push(("rank_one", SymMatrix::new(rank_one).expect("symmetric")));
    let (x, y) = (nz(rng), nz(rng));
    out.push(("case1", SymMatrix::new(vec![vec![&x * &x, &x * &y], vec![&x * &y, &y * &y]]).expect("symmetric")));
    let z = nz(rng);
    out.push(("case2", SymMatrix::new(vec![vec![x.clone(), int(0)], vec![int(0), z.clone()]]).expect("symmetric")));
    out.push(("case3", SymMatrix::new(vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]).expect("symmetric")));
    let s = if rng.gen_bool(0.5) { x.clone() } else { -x.clone() };
    out.push(("case4", SymMatrix::new(vec![vec![x.clone(), s.clone()], vec![s, -x.clone()]]).expect("symmetric")));
    let block = [vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
    let mut f2 = vec![vec![int(0); 3]; 3];
    for i in 0..2 {
        for j in 0..2 {
            f2[i][j] = block[i][j].clone();
        }
    }
    f2[2][2] = z;
    let perm: [usize; 3] = [[0, 1, 2], [0, 2, 1], [2, 0, 1]][rng.gen_range(0..3)];
    out.push(("form2", SymMatrix::new(f2).expect("symmetric").permuted(&perm)));
    let f3 = vec![vec![int(0), int(0), x.clone()], vec![int(0), int(0), y.clone()], vec![x.clone(), y.clone(), int(0)]];
    out.push(("form3", SymMatrix::new(f3).expect("symmetric")));
    let (a, b) = loop {
        let (a, b) = (rat(rng.gen_range(0..=4), rng.gen_range(1..=3)), rat(rng.gen_range(1..=4), rng.gen_range(1..=3)));
        if a != b {
            break (a, b);
        }
    };
    let zero = int(0);
    let t4 = vec![
        vec![zero.clone(), zero.clone(), a.clone(), b.clone()],
        vec![zero.clone(), zero.clone(), b.clone(), a.clone()],
        vec![a.clone(), b.clone(), zero.clone(), zero.clone()],
        vec![b.clone(), a.clone(), zero.clone(), zero],
    ];
    out.push(("tensor4", SymMatrix::new(t4).expect("symmetric")));
    out
}

/// Every polynomial solver against brute force on the embedded corpus.
fn solvers_vs_brute(rng: &mut ChaCha8Rng, brute: &BruteForce) -> Result<Tally, Error> {
    let mut t = Tally::new();
    let corpus: Vec<_> = planar_corpus().into_iter().filter(|(_, g)| g.graph().vertex_count() <= 7).collect();
    for _ in 0..10 {
        for (family, m) in tractable_samples(rng) {
            let cls = classify(&m);
            t.check(cls.verdict == Verdict::Tractable, || json!({ "family": family, "matrix": serde_json::to_value(&m).expect("matrix"), "verdict": "not tractable" }));
            if cls.verdict != Verdict::Tractable {
                continue;
            }
            for (name, g) in &corpus {
                let fast = dispatch_solve(&m, g.graph(), Some(g), &cls)?;
                let slow = brute.z(&m, g.graph())?;
                t.check(fast == slow, || {
                    dump(&m, g.graph(), json!({ "family": family, "graph": name, "poly": format_rational(&fast), "brute": format_rational(&slow) }))
                });
            }
        }
    }
    Ok(t)
}

/// Exact Taylor identities and the two algebraic claims behind them.
fn taylor_claims(rng: &mut ChaCha8Rng) -> Result<Tally, Error> {
    let mut t = Tally::new();
    for _ in 0..1000 {
        let v: Vec<i64> = (0..6).map(|_| rng.gen_range(0..=6)).collect();
        let x = vec![vec![v[0], v[1], v[2]], vec![v[1], v[3], v[4]], vec![v[2], v[4], v[5]]];
        let xr: Vec<Vec<Rational>> = x.iter().map(|r| r.iter().map(|&e| int(e)).collect()).collect();
        let ok = taylor_coeffs_rational(&xr)?.consistent;
        t.check(ok, || json!({ "check": "taylor", "x": x }));
    }
    for _ in 0..1000 {
        let u = [rng.gen_range(-20..=20), rng.gen_range(-20..=20), rng.gen_range(-20..=20)];
        t.check(g_product_identity_holds(u), || json!({ "check": "g_product", "u": u }));
    }
    let mut done = 0;
    while done < 200 {
        let (a, b, c) = (small_rational(rng), small_rational(rng), small_rational(rng));
        if &a + &c == int(2) * &b {
            continue;
        }
        let alpha = small_rational(rng);
        let (_, r) = rank_one_shift(&a, &b, &c, &alpha)?;
        t.check(r <= 1, || json!({ "check": "rank_one_shift", "x": [format_rational(&a), format_rational(&b), format_rational(&c)], "alpha": format_rational(&alpha), "rank": r }));
        done += 1;
    }
    Ok(t)
}
