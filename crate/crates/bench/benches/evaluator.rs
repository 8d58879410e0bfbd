use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sunya_bench::sample_values;
use sunya_core::{eval_binary, eval_expression, parse_expression, BinaryOp, RuleSet};

fn binary(c: &mut Criterion) {
    let values = sample_values(200);
    let mut group = c.benchmark_group("eval_binary");
    for rules in RuleSet::ALL {
        group.bench_function(rules.name(), |b| {
            b.iter(|| {
                values
                    .windows(2)
                    .filter_map(|w| eval_binary(BinaryOp::Div, black_box(&w[0]), &w[1], rules).ok())
                    .count()
            })
        });
    }
    group.finish();
}

fn expressions(c: &mut Criterion) {
    let e = parse_expression("((5 * 0) / 0 + sqrt(9/4) * (2 - 1/3)^2) - cbrt(27)").unwrap();
    c.bench_function("eval_expression/bhaskara", |b| {
        b.iter(|| eval_expression(black_box(&e), RuleSet::Bhaskara1150).unwrap())
    });
    c.bench_function("parse_expression", |b| {
        b.iter(|| parse_expression(black_box("((5 * 0) / 0 + sqrt(9/4) * (2 - 1/3)^2) - cbrt(27)")).unwrap())
    });
}

criterion_group!(benches, binary, expressions);
criterion_main!(benches);
