mod common;

use std::path::Path;

use common::s_pairs_reduce_to_zero;
use idealcore::corpus::{
    builtin_fixtures, load_fixture_dir, run_fixture_with, ExampleFixture, RunOptions,
};
use idealcore::groebner::satisfies_buchberger_criterion;

#[test]
fn every_fixture_passes_with_its_seed() {
    for fx in builtin_fixtures() {
        let rep = run_fixture_with(&fx, &RunOptions::default()).unwrap();
        for c in &rep.checks {
            assert!(c.passed, "{}: {} expected {} got {}", fx.name, c.label, c.expected, c.actual);
        }
        assert!(!rep.checks.is_empty());
    }
}

#[test]
fn fixtures_round_trip_through_text() {
    for fx in builtin_fixtures() {
        let text = fx.to_string();
        let back = ExampleFixture::parse(&text, &fx.name).unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(back, fx);
    }
}

#[test]
fn directory_matches_builtin_corpus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let loaded = load_fixture_dir(&dir).unwrap();
    assert_eq!(loaded, builtin_fixtures());
}

#[test]
fn corpus_bases_satisfy_the_buchberger_criterion() {
    for fx in builtin_fixtures() {
        for (name, i) in fx.evaluate_ideals(&RunOptions::default()).unwrap() {
            let gb = i.groebner();
            assert!(s_pairs_reduce_to_zero(&gb), "{} {name}", fx.name);
            assert!(satisfies_buchberger_criterion(&gb), "{} {name}", fx.name);
        }
    }
}
