use std::io::Write;

use num_bigint::BigInt;

use chebflag::families::{
    attach_product_route, corollary_evaluation, corollary_multiplicity, family_quotient, family_shape,
    find_pair_decomposition, FamilyQuery,
};
use chebflag::quotient::{
    classify, classify_with_evidence, cross_validate, expand, make_spec, multiplicity, PositivityClass,
    ThresholdEvidence,
};
use chebflag::Partition;

use crate::args::{ClassifyArgs, ExpandArgs, FamiliesArgs, Kind, MultArgs, TableArgs};
use crate::error::CliError;
use crate::input::{check_ceiling, parse_grid, parse_list, parse_partition, partition_key};
use crate::render::{ClassifyReport, ExpandReport, FamiliesReport, MultReport, Table, TableRow};

fn check_level(xi: &Partition, m: usize, ceiling: usize) -> Result<(), CliError> {
    check_ceiling("m", m, ceiling)?;
    if m == 0 || xi.largest() > m {
        return Err(CliError::Hypothesis(format!(
            "level m={m} must be at least max(1, xi_1) = {}",
            xi.largest().max(1)
        )));
    }
    Ok(())
}

pub fn cmd_expand(args: &ExpandArgs, ceiling: usize, warn: &mut dyn Write) -> Result<ExpandReport, CliError> {
    let xi = parse_partition(&args.xi, warn)?;
    check_level(&xi, args.m, ceiling)?;
    check_ceiling("order", args.order, ceiling)?;
    check_ceiling("mu", args.mu, ceiling)?;
    let spec = make_spec(&xi, args.m, args.mu)?;
    let report = if args.cross_validate {
        let mut report = cross_validate(&spec, args.order)?;
        if spec.k() >= 1 {
            if let Some(dec) = find_pair_decomposition(&spec)? {
                attach_product_route(&mut report, &dec)?;
            }
        }
        report
    } else {
        expand(&spec, args.order)
    };
    Ok(ExpandReport {
        xi: xi.parts().to_vec(),
        m: spec.m(),
        mu: spec.mu(),
        mu1: spec.mu1(),
        mu0: spec.mu0(),
        t: spec.t(),
        k: spec.k(),
        alphas: spec.alphas().to_vec(),
        order: args.order,
        routes: report.routes.iter().map(|r| r.name().to_string()).collect(),
        coefficients: report.coeffs.coeffs().iter().map(BigInt::to_string).collect(),
    })
}

/// Multiplicity by quotient extraction, cross-checked against the direct
/// family formula whenever the coefficient index is an integer.
fn checked_multiplicity(xi: &Partition, m: usize, n: i64) -> Result<(BigInt, Option<usize>, String), CliError> {
    let value = multiplicity(xi, m, n)?;
    let shape = family_shape(xi, m)?;
    let size = xi.size() as i64;
    let index = (n >= 0 && n <= size && (size - n) % 2 == 0).then(|| ((size - n) / 2) as usize);
    if let Some(big_n) = index {
        let direct = corollary_multiplicity(&shape.query(m, big_n)?)?;
        if direct != value {
            return Err(CliError::Mismatch(format!(
                "xi={xi} m={m} n={n}: quotient gives {value}, direct formula gives {direct}"
            )));
        }
    }
    Ok((value, index, shape.kind.tag().to_string()))
}

pub fn cmd_mult(args: &MultArgs, ceiling: usize, warn: &mut dyn Write) -> Result<MultReport, CliError> {
    let xi = parse_partition(&args.xi, warn)?;
    check_level(&xi, args.m, ceiling)?;
    check_ceiling("n", args.n.unsigned_abs() as usize, ceiling)?;
    let (value, index, family) = checked_multiplicity(&xi, args.m, args.n)?;
    Ok(MultReport {
        xi: xi.parts().to_vec(),
        m: args.m,
        n: args.n,
        index,
        family,
        value: value.to_string(),
    })
}

pub fn cmd_classify(args: &ClassifyArgs, ceiling: usize, warn: &mut dyn Write) -> Result<ClassifyReport, CliError> {
    let xi = parse_partition(&args.xi, warn)?;
    check_level(&xi, args.m, ceiling)?;
    check_ceiling("horizon", args.horizon, ceiling)?;
    check_ceiling("mu", args.mu, ceiling)?;
    let spec = make_spec(&xi, args.m, args.mu)?;
    let class = classify_with_evidence(&spec, args.horizon);
    let (degree_bound, horizon, r0) = match class {
        PositivityClass::ConstantOne => (None, None, None),
        PositivityClass::Polynomial { degree_bound } => (Some(degree_bound), None, None),
        PositivityClass::EventuallyPositive { evidence } => match evidence {
            Some(ThresholdEvidence::Resolved { r0, horizon }) => (None, Some(horizon), Some(r0)),
            Some(ThresholdEvidence::Unresolved { horizon }) => (None, Some(horizon), None),
            None => (None, None, None),
        },
    };
    Ok(ClassifyReport {
        xi: xi.parts().to_vec(),
        m: spec.m(),
        mu: spec.mu(),
        k: spec.k(),
        class: class.name().to_string(),
        degree_bound,
        horizon,
        r0,
    })
}

pub fn cmd_families(args: &FamiliesArgs, ceiling: usize) -> Result<FamiliesReport, CliError> {
    check_ceiling("m", args.m, ceiling)?;
    check_ceiling("N", args.big_n, ceiling)?;
    let query = match args.kind {
        Kind::A => {
            if args.r.is_some() || args.rs.is_some() {
                return Err(CliError::Usage("kind a takes neither --r nor --rs".into()));
            }
            FamilyQuery::a(args.m, args.t, args.s, args.big_n)?
        }
        Kind::B => {
            let r = args.r.ok_or_else(|| CliError::Usage("kind b needs --r".into()))?;
            FamilyQuery::b(args.m, args.t, r, args.s, args.big_n)?
        }
        Kind::C => {
            let raw = args.rs.as_deref().ok_or_else(|| CliError::Usage("kind c needs --rs".into()))?;
            FamilyQuery::c(args.m, args.t, parse_list(raw)?, args.s, args.big_n)?
        }
    };
    let eval = corollary_evaluation(&query)?;
    let quotient = family_quotient(&query)?;
    Ok(FamiliesReport {
        kind: query.kind().tag().to_string(),
        m: query.m(),
        t: query.t(),
        s: query.s(),
        rs: query.rs().to_vec(),
        big_n: query.n_index(),
        xi: query.partition().parts().to_vec(),
        weight: eval.weight,
        q: eval.q,
        rho: eval.rho,
        pairs: quotient.pairs.map(|p| p.to_string()),
        value: eval.value.to_string(),
        tuple_count: eval.tuple_count.map(|c| c.to_string()),
    })
}

/// One row of the multiplicity table. The class is that of `F_{xi,m,n}`.
pub fn table_row(xi: &Partition, m: usize, n: usize) -> Result<TableRow, CliError> {
    let (value, _, family) = checked_multiplicity(xi, m, n as i64)?;
    let class = classify(&make_spec(xi, m, n)?);
    Ok(TableRow {
        xi: partition_key(xi),
        m,
        n,
        value: value.to_string(),
        class: class.name().to_string(),
        family,
    })
}

/// Rows in grid order: partition, then level, then weight.
pub fn cmd_table(args: &TableArgs, ceiling: usize, warn: &mut dyn Write) -> Result<Table, CliError> {
    let partitions = args.xi.iter().map(|raw| parse_partition(raw, warn)).collect::<Result<Vec<_>, _>>()?;
    let levels = parse_grid(&args.m)?;
    let weights = args.n.as_deref().map(parse_grid).transpose()?;
    let mut rows = Vec::new();
    for xi in &partitions {
        let ns = weights.clone().unwrap_or_else(|| (0..=xi.size()).collect());
        for &m in &levels {
            check_level(xi, m, ceiling)?;
            for &n in &ns {
                check_ceiling("n", n, ceiling)?;
                rows.push(table_row(xi, m, n)?);
            }
        }
    }
    Ok(Table(rows))
}
