use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chebflag::chebpoly::{binomial, p_poly};
use chebflag::families::{attach_product_route, corollary_multiplicity, find_pair_decomposition, FamilyKind, FamilyQuery};
use chebflag::pathcomb::{
    continuant_determinant, dyck_to_walk, enumerate_dyck, enumerate_strip_walks, strip_walk_count, walk_to_dyck,
    DyckConstraint,
};
use chebflag::quotient::{cross_validate, make_spec, multiplicity};
use chebflag::Partition;

use crate::commands::table_row;
use crate::input::parse_list;
use crate::render::{SuiteReport, TABLE_HEADER};

/// Check count so far, and the first counterexample if one was found.
type SuiteResult = Result<usize, (usize, String)>;

fn finish(name: &str, result: SuiteResult) -> SuiteReport {
    let (checks, counterexample) = match result {
        Ok(checks) => (checks, None),
        Err((checks, c)) => (checks, Some(c)),
    };
    SuiteReport { name: name.to_string(), checks, passed: counterexample.is_none(), counterexample }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn closed_form() -> SuiteResult {
    let mut checks = 0;
    for r in 0..=24usize {
        let p = p_poly(r);
        for j in 0..=r {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let closed = binomial(r as i64 - j as i64, j as i64) * sign;
            if p.coeff(j) != closed {
                return Err((checks, format!("[x^{j}]p_{r} = {} but closed form gives {closed}", p.coeff(j))));
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn walk_transfer() -> SuiteResult {
    let mut checks = 0;
    for m in 1..=6 {
        for a in 0..m {
            for b in 0..m {
                for len in 0..=16 {
                    let transfer = strip_walk_count(m, a, b, len).map_err(|e| (checks, e.to_string()))?;
                    let listed = enumerate_strip_walks(m, a, b, len).map_err(|e| (checks, e.to_string()))?.len();
                    if transfer != BigInt::from(listed) {
                        return Err((checks, format!("m={m} a={a} b={b} L={len}: transfer {transfer}, listed {listed}")));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

fn continuant() -> SuiteResult {
    for m in 0..=8 {
        let det = continuant_determinant(m);
        let expected = p_poly(m).stretch(2);
        if det != expected {
            return Err((m, format!("m={m}: det(I - sA) = {det}, p_m(s^2) = {expected}")));
        }
    }
    Ok(9)
}

fn bijection() -> SuiteResult {
    let mut checks = 0;
    for m in 1..=5 {
        for a in 0..m {
            for b in 0..m - a {
                for u in 0..=4 {
                    let tag = format!("m={m} a={a} b={b} u={u}");
                    let fail = |what: String| (checks, format!("{tag}: {what}"));
                    let c = DyckConstraint::new(m, a, b, u).map_err(|e| fail(e.to_string()))?;
                    let walks = enumerate_strip_walks(m, a, c.walk_end(), c.walk_len()).map_err(|e| fail(e.to_string()))?;
                    let dycks: BTreeSet<_> = enumerate_dyck(&c).map_err(|e| fail(e.to_string()))?.into_iter().collect();
                    let mut images = BTreeSet::new();
                    for w in &walks {
                        let p = walk_to_dyck(w, &c).map_err(|e| fail(e.to_string()))?;
                        if dyck_to_walk(&p, &c).map_err(|e| fail(e.to_string()))? != *w {
                            return Err(fail(format!("round trip fails at {:?}", w.heights())));
                        }
                        images.insert(p);
                    }
                    if images.len() != walks.len() || images != dycks {
                        return Err(fail(format!("{} walks map onto {} of {} paths", walks.len(), images.len(), dycks.len())));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

fn random_partition(rng: &mut ChaCha8Rng, max_part: usize, max_len: usize) -> Partition {
    let len = rng.gen_range(0..=max_len);
    let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("positive parts")
}

fn three_way(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = rng(seed, 1);
    let mut checks = 0;
    while checks < cases {
        let m = rng.gen_range(1..=5);
        let xi = random_partition(&mut rng, m, 4);
        let mu = rng.gen_range(0..=3 * m);
        let spec = make_spec(&xi, m, mu).map_err(|e| (checks, e.to_string()))?;
        if !(0..=3).contains(&spec.k()) {
            continue;
        }
        let fail = |e: chebflag::Error| (checks, format!("{spec}: {e}"));
        let mut report = cross_validate(&spec, 12).map_err(fail)?;
        if spec.k() >= 1 {
            if let Some(dec) = find_pair_decomposition(&spec).map_err(fail)? {
                attach_product_route(&mut report, &dec).map_err(fail)?;
            }
        }
        checks += 1;
    }
    Ok(checks)
}

fn corollary(seed: u64, cases: usize) -> SuiteResult {
    let mut rng = rng(seed, 2);
    let mut checks = 0;
    while checks < cases {
        let m = rng.gen_range(2..=5);
        let t = rng.gen_range(0..=2);
        let s = rng.gen_range(0..=2 * m);
        let d = rng.gen_range(0..=3);
        let rs: Vec<usize> = (0..d).map(|_| rng.gen_range(1..m)).collect();
        let kind = match d {
            0 => FamilyKind::A,
            1 => FamilyKind::B,
            _ => FamilyKind::C,
        };
        let total = t * m + rs.iter().sum::<usize>() + s;
        let big_n = rng.gen_range(0..=total / 2 + 1);
        let fq = FamilyQuery::new(kind, m, t, s, rs, big_n).map_err(|e| (checks, e.to_string()))?;
        let xi = fq.partition();
        let fail = |e: chebflag::Error| (checks, format!("{fq:?}: {e}"));
        let direct = corollary_multiplicity(&fq).map_err(fail)?;
        let extracted = multiplicity(&xi, m, fq.weight()).map_err(fail)?;
        if direct != extracted {
            return Err((checks, format!("{fq:?}: direct {direct}, extracted {extracted}")));
        }
        checks += 1;
    }
    Ok(checks)
}

/// Recomputes every row of a table CSV. Unreadable or malformed files
/// count as a failure of this suite.
fn golden(path: &Path) -> SuiteResult {
    let mut reader = csv::Reader::from_path(path).map_err(|e| (0, format!("{}: {e}", path.display())))?;
    let header = reader.headers().map_err(|e| (0, e.to_string()))?.clone();
    if header.iter().ne(TABLE_HEADER) {
        return Err((0, format!("header {:?} is not {:?}", header.iter().collect::<Vec<_>>(), TABLE_HEADER)));
    }
    let mut checks = 0;
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| (checks, format!("line {line}: {e}")))?;
        let field = |j: usize| record.get(j).unwrap_or_default();
        let parsed = (|| {
            let xi = Partition::new(parse_list(field(0)).ok()?).ok()?;
            Some((xi, field(1).parse::<usize>().ok()?, field(2).parse::<usize>().ok()?))
        })();
        let Some((xi, m, n)) = parsed else {
            return Err((checks, format!("line {line}: unparseable row {:?}", record.iter().collect::<Vec<_>>())));
        };
        let row = table_row(&xi, m, n).map_err(|e| (checks, format!("line {line}: {e}")))?;
        let expected = [row.xi.as_str(), &row.m.to_string(), &row.n.to_string(), &row.value, &row.class, &row.family]
            .map(str::to_string);
        let found: Vec<String> = record.iter().map(str::to_string).collect();
        if found != expected {
            return Err((checks, format!("line {line}: file has {found:?}, recomputed {expected:?}")));
        }
        checks += 1;
    }
    Ok(checks)
}

pub fn run_suites(seed: u64, cases: usize, golden_path: Option<&Path>) -> Vec<SuiteReport> {
    let mut suites = vec![
        finish("closed-form", closed_form()),
        finish("walk-transfer", walk_transfer()),
        finish("continuant", continuant()),
        finish("bijection", bijection()),
        finish("three-way", three_way(seed, cases)),
        finish("corollary", corollary(seed, cases)),
    ];
    if let Some(path) = golden_path {
        suites.push(finish("golden", golden(path)));
    }
    suites
}
