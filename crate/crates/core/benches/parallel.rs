use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use realism::codes::CodeName;
use realism::ks::{build_ks_set, enumerate_contexts, ks_colorability, OrthogonalityGraph};
use realism::paradox::{search_parity_contradictions, SearchOptions};
use realism::stabilizer::{knill_laflamme_check, single_qubit_errors};
use realism::{Codeword, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn ks_graph(c: &mut Criterion) {
    let vertices = build_ks_set().unwrap();
    let mut group = c.benchmark_group("ks-graph");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| OrthogonalityGraph::build(black_box(vertices.clone()), exec).unwrap())
        });
    }
    group.finish();
}

fn ks_search(c: &mut Criterion) {
    let g = OrthogonalityGraph::build(build_ks_set().unwrap(), Exec::Sequential).unwrap();
    let mut group = c.benchmark_group("ks-contexts-and-coloring");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let contexts = enumerate_contexts(&g, 10_000_000, exec).unwrap();
                ks_colorability(&g, &contexts).unwrap()
            })
        });
    }
    group.finish();
}

fn steane_search(c: &mut Criterion) {
    let code = CodeName::Steane.build().unwrap();
    let stab = code.group().unwrap();
    let state = code.codeword(Codeword::Zero).clone();
    let workloads = [("max6-all", SearchOptions::up_to(6)), ("max10-first", SearchOptions::up_to(10).with_limit(1))];
    let mut group = c.benchmark_group("steane-search");
    group.sample_size(10);
    for (label, opts) in workloads {
        for (name, exec) in MODES {
            let opts = opts.with_exec(exec);
            group.bench_function(BenchmarkId::new(label, name), |b| {
                b.iter(|| search_parity_contradictions(&stab, &state, Codeword::Zero, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn knill_laflamme(c: &mut Criterion) {
    let code = CodeName::Steane.build().unwrap();
    let errors = single_qubit_errors(7).unwrap();
    let mut group = c.benchmark_group("steane-knill-laflamme");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                knill_laflamme_check(code.codeword(Codeword::Zero), code.codeword(Codeword::One), &errors, exec).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, ks_graph, ks_search, steane_search, knill_laflamme);
criterion_main!(benches);
