use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use invcomp_core::{gen_cyclic, gen_katsura, inv_bas, inv_comp, parse_system, DivisionSpec, SystemFile};

const WORKED: &str = "vars: x y\norder: lex\np: x^2 - 3/2*y^2\np: 2*x*y + 3*y^2\n";

fn systems() -> Vec<(&'static str, SystemFile)> {
    vec![
        ("worked", parse_system(WORKED).unwrap()),
        ("cyclic4", gen_cyclic(4).unwrap()),
        ("katsura3", gen_katsura(3).unwrap()),
    ]
}

fn bench_completion(c: &mut Criterion) {
    let mut group = c.benchmark_group("janet");
    for (name, sys) in systems() {
        let div = DivisionSpec::janet(sys.vars());
        group.bench_with_input(BenchmarkId::new("invcomp", name), &sys, |b, sys| {
            b.iter(|| inv_comp(&sys.polynomials, &div, &sys.ordering).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("invbas", name), &sys, |b, sys| {
            b.iter(|| inv_bas(&sys.polynomials, &div, &sys.ordering).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_completion);
criterion_main!(benches);
