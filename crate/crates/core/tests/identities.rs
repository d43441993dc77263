use num_bigint::BigInt;
use proptest::prelude::*;

use chebflag::chebpoly::{p_partition, p_poly};
use chebflag::families::{
    corollary_multiplicity, family_shape, find_pair_decomposition, product_model_series,
};
use chebflag::pathcomb::{
    enumerate_matchings, enumerate_strip_walks, full_height_counts, walk_counts,
};
use chebflag::quotient::{cross_validate, expand, make_spec, multiplicity, signed_series};
use chebflag::series::{series_div_unit, IntPolynomial};
use chebflag::Partition;

#[test]
fn p4_counts_matchings_of_p4() {
    let counts: Vec<usize> = (0..=2).map(|j| enumerate_matchings(4, j).unwrap().len()).collect();
    assert_eq!(counts, [1, 3, 1]);
    assert_eq!(p_poly(4), IntPolynomial::from_i64s(&[1, -3, 1]));
}

#[test]
fn matchings_give_every_p_coefficient() {
    for r in 0..=12 {
        let p = p_poly(r);
        for j in 0..=r / 2 {
            let n = enumerate_matchings(r, j).unwrap().len() as i64;
            assert_eq!(p.coeff(j), BigInt::from(if j % 2 == 0 { n } else { -n }), "r={r} j={j}");
        }
    }
}

#[test]
fn transfer_counts_match_enumeration() {
    for m in 1..=6 {
        for a in 0..m {
            for b in 0..m {
                let counts = walk_counts(m, a, b, 16).unwrap();
                for (len, c) in counts.iter().enumerate() {
                    let listed = enumerate_strip_walks(m, a, b, len).unwrap().len();
                    assert_eq!(c, &BigInt::from(listed), "m={m} a={a} b={b} L={len}");
                }
            }
        }
    }
}

#[test]
fn reciprocal_of_pm_counts_full_height_walks() {
    for m in 1..=8 {
        let series = series_div_unit(&IntPolynomial::one(), &p_poly(m), 15).unwrap();
        assert_eq!(series.coeffs(), full_height_counts(m, 15).unwrap().as_slice(), "m={m}");
    }
}

#[test]
fn product_model_matches_division_on_grid() {
    let mut checked = 0;
    for m in 2..=5 {
        for parts in bounded_partitions(m, 3) {
            let xi = Partition::new(parts).unwrap();
            for mu in 0..=3 * m {
                let spec = make_spec(&xi, m, mu).unwrap();
                if !(1..=3).contains(&spec.k()) {
                    continue;
                }
                if let Some(dec) = find_pair_decomposition(&spec).unwrap() {
                    let model = product_model_series(&dec, 15).unwrap();
                    assert_eq!(expand(&spec, 15).coeffs.coeffs(), model.as_slice(), "{spec} {dec}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn back_multiplication_recovers_numerator() {
    let spec = make_spec(&Partition::new(vec![3, 2, 2]).unwrap(), 3, 3).unwrap();
    let series = expand(&spec, 30).coeffs;
    let lhs = (&series.to_polynomial() * &spec.denominator()).coeffs()[..=30].to_vec();
    let mut rhs = spec.numerator().coeffs().to_vec();
    rhs.resize(31, BigInt::from(0));
    assert_eq!(lhs, rhs);
}

fn bounded_partitions(max_part: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    if max_len == 0 {
        return out;
    }
    for p in 1..=max_part {
        for mut tail in bounded_partitions(p, max_len - 1) {
            tail.insert(0, p);
            out.push(tail);
        }
    }
    out
}

fn partition_strategy(max_part: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=max_part, 0..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

proptest! {
    #[test]
    fn division_and_signed_routes_agree(m in 1usize..=5, parts in partition_strategy(5), mu in 0usize..=15) {
        let mut parts: Vec<usize> = parts.into_iter().map(|p| p.min(m)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let spec = make_spec(&Partition::new(parts).unwrap(), m, mu).unwrap();
        prop_assume!((0..=3).contains(&spec.k()));
        let report = cross_validate(&spec, 12).unwrap();
        let signed = signed_series(&spec, 12).unwrap();
        prop_assert_eq!(report.coeffs.coeffs(), signed.as_slice());
    }

    #[test]
    fn direct_formula_matches_multiplicity(m in 2usize..=5, parts in partition_strategy(5), big_n in 0usize..=6) {
        let mut parts: Vec<usize> = parts.into_iter().map(|p| p.min(m)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let xi = Partition::new(parts).unwrap();
        prop_assume!(2 * big_n <= xi.size());
        let query = family_shape(&xi, m).unwrap().query(m, big_n).unwrap();
        prop_assert_eq!(query.partition(), xi.clone());
        let n = xi.size() as i64 - 2 * big_n as i64;
        prop_assert_eq!(corollary_multiplicity(&query).unwrap(), multiplicity(&xi, m, n).unwrap());
    }

    #[test]
    fn numerator_is_product_of_parts(parts in partition_strategy(8)) {
        let xi = Partition::new(parts.clone()).unwrap();
        let direct: IntPolynomial = parts.iter().map(|&p| p_poly(p)).product();
        prop_assert_eq!(p_partition(&xi), direct);
    }
}
