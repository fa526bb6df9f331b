use std::io::Write;

use quickswap::instances::{load_snap, parse_caps, InstanceSpec};
use quickswap::{CountingOracle, ElementSet, Matroid, Objective, SetFunction};

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    path
}

#[test]
fn snap_files_round_trip_through_the_spec() {
    let dir = tempfile::tempdir().unwrap();
    let edges = write(
        &dir,
        "toy.txt",
        "# toy graph\n10 20\n20 30\n30 10\n10 20\n10 40\n",
    );
    let labels = write(&dir, "toy-labels.txt", "10 1\n20 1\n30 0\n40 0\n50 2\n");

    let g = load_snap(&edges, Some(&labels)).unwrap();
    assert_eq!(g.raw_arcs, 5);
    assert_eq!(g.graph.num_arcs(), 4);
    assert_eq!(g.graph.num_nodes(), 5);
    assert_eq!(g.labels.as_ref().unwrap().num_parts, 3);

    let spec = InstanceSpec::Snap {
        edges: edges.clone(),
        labels: Some(labels),
    };
    assert_eq!(spec.short_name(), "toy");
    let inst = spec.build().unwrap().with_cap(1).unwrap();
    assert_eq!(inst.rank(), 3);
    // node 10 reaches 20 and 40
    let f = &inst.objective;
    assert_eq!(f.value(&ElementSet::singleton(0)), 2);
    assert_eq!(f.value(&ElementSet::full(5)), 4);
}

#[test]
fn snap_without_labels_is_a_single_part() {
    let dir = tempfile::tempdir().unwrap();
    let edges = write(&dir, "e.txt", "0 1\n1 2\n2 0\n");
    let spec = InstanceSpec::Snap {
        edges,
        labels: None,
    };
    let base = spec.build().unwrap();
    assert_eq!(base.with_cap(2).unwrap().rank(), 2);
    assert_eq!(base.with_cap(9).unwrap().rank(), 3);
}

#[test]
fn missing_and_malformed_files_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert!(load_snap(&dir.path().join("absent.txt"), None).is_err());
    let bad = write(&dir, "bad.txt", "0 1\n1 two\n");
    let err = load_snap(&bad, None).unwrap_err().to_string();
    assert!(err.contains(":2:"), "{err}");
}

#[test]
fn paper_generators_have_the_documented_shape() {
    let er = InstanceSpec::paper_erdos_renyi(7).build().unwrap();
    assert_eq!(er.ground_size(), 1000);
    assert_eq!(er.with_cap(1).unwrap().rank(), 20);

    let sbm = InstanceSpec::paper_sbm(7).build().unwrap();
    let inst = sbm.with_cap(1).unwrap();
    assert_eq!(inst.rank(), 100);
    assert!((1000..=5000).contains(&inst.ground_size()));
    // a huge cap makes every set independent
    let everything = sbm.with_cap(1000).unwrap();
    assert_eq!(everything.rank(), inst.ground_size());
}

#[test]
fn same_seed_same_instance() {
    for spec in [
        InstanceSpec::paper_erdos_renyi(3),
        InstanceSpec::paper_sbm(3),
    ] {
        let a = spec.build().unwrap().with_cap(2).unwrap();
        let b = spec.build().unwrap().with_cap(2).unwrap();
        assert_eq!(a.matroid, b.matroid);
        let (Objective::Coverage(fa), Objective::Coverage(fb)) = (&a.objective, &b.objective)
        else {
            panic!("coverage expected")
        };
        assert_eq!(fa.graph(), fb.graph());
    }
}

#[test]
fn coverage_queries_on_generated_graphs_are_consistent() {
    let inst = InstanceSpec::paper_sbm(11)
        .build()
        .unwrap()
        .with_cap(3)
        .unwrap();
    let f = &inst.objective;
    let mut oracle = CountingOracle::new(f);
    let s: ElementSet = (0..50).step_by(7).collect();
    let v = oracle.value(&s).unwrap();
    assert_eq!(oracle.value(&s).unwrap(), v);
    assert_eq!(oracle.queries(), 1);
    assert!(inst.matroid.is_independent(&ElementSet::new()).unwrap());
}

#[test]
fn cap_sweeps() {
    assert_eq!(parse_caps("1-25").unwrap().len(), 25);
    assert_eq!(parse_caps("2, 4").unwrap(), vec![2, 4]);
}
