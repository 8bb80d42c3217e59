use algebroid::algebra::Group;
use algebroid::verify::Verification;
use algebroid_cli::scenario::select_tasks;
use algebroid_cli::{builtins, run, Report, Scenario, ScenarioError, Status, TaskReport, TASKS};
use proptest::prelude::*;

fn names(ts: &[&str]) -> Vec<String> {
    ts.iter().map(|s| s.to_string()).collect()
}

#[test]
fn tasks_run_in_pipeline_order() {
    let picked = select_tasks(&names(&["sugano", "d2", "hsep"])).unwrap();
    assert_eq!(picked, ["d2", "hsep", "sugano"]);
    assert_eq!(select_tasks(&names(&["all"])).unwrap(), TASKS);
    assert!(matches!(select_tasks(&names(&["d2", "nope"])), Err(ScenarioError::UnknownTask(t)) if t == "nope"));
}

proptest! {
    #[test]
    fn selection_is_an_ordered_subsequence(mask in proptest::collection::vec(any::<bool>(), TASKS.len()), rev in any::<bool>()) {
        let mut req: Vec<String> = TASKS.iter().zip(&mask).filter(|(_, &m)| m).map(|(t, _)| t.to_string()).collect();
        if rev {
            req.reverse();
        }
        let picked = select_tasks(&req).unwrap();
        prop_assert_eq!(picked.len(), req.len());
        let pos: Vec<usize> = picked.iter().map(|t| TASKS.iter().position(|x| x == t).unwrap()).collect();
        prop_assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn failed_check_fails_the_task_and_report() {
    let mut t = TaskReport::new("d2");
    let mut v = Verification::new();
    v.check("ok", true, "fine");
    v.check("broken", false, "basis pair (1, 0)");
    t.add("S: ", v);
    t.settle();
    assert_eq!(t.status, Status::Fail);
    assert_eq!(t.summary, "S: broken: basis pair (1, 0)");
    let r = Report { scenario: "x".into(), field: "rational".into(), tasks: vec![t] };
    assert!(r.failed());
    assert!(r.to_text().contains("failed: S: broken [basis pair (1, 0)]"));

    let mut none = TaskReport::new("hsep");
    none.status = Status::NoneFound;
    none.settle();
    let r = Report { scenario: "x".into(), field: "rational".into(), tasks: vec![none] };
    assert!(!r.failed());
    assert!(r.to_json().contains("\"status\": \"none-found\""));
}

#[test]
fn every_builtin_parses_and_builds() {
    for (name, _) in builtins::BUILTINS {
        let sc = builtins::scenario(name).unwrap().unwrap();
        let b = sc.build(None, None).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(b.name, name);
    }
    assert!(builtins::scenario("e0").is_none());
}

#[test]
fn field_override_and_options() {
    let sc = builtins::scenario("e1").unwrap().unwrap();
    let b = sc.build(Some("gf:3".parse().unwrap()), Some(&names(&["d2"]))).unwrap();
    assert_eq!(b.field.to_string(), "gf:3");
    assert_eq!(b.tasks, ["d2"]);
    let report = run(&b, false);
    assert_eq!(report.field, "gf:3");
    assert_eq!(report.tasks[0].status, Status::Pass);

    let text = r#"{"field": {"kind": "rational"}, "algebra": {"matrix": 2}, "subalgebra": "unit", "tasks": ["d2"],
                   "options": {"sweep_bound": 3, "seed": 9, "parallelism": 2, "verify_limit": 8}}"#;
    let b = Scenario::parse(text).unwrap().build(None, None).unwrap();
    assert_eq!((b.sweep.bound, b.sweep.seed, b.parallelism, b.verify_limit), (3, 9, 2, 8));
}

#[test]
fn verify_limit_skips_full_axioms() {
    let text = r#"{"field": {"kind": "rational"}, "algebra": {"matrix": 2}, "subalgebra": "unit", "tasks": ["bialgebroids"],
                   "options": {"verify_limit": 4}}"#;
    let b = Scenario::parse(text).unwrap().build(None, None).unwrap();
    let r = run(&b, false);
    assert_eq!(r.tasks[0].status, Status::Pass);
    assert!(r.tasks[0].detail["axioms"].as_str().unwrap().starts_with("skipped"));
}

#[test]
fn generators_and_tensor_factors() {
    let t = Group::symmetric(3).index_of("(12)").unwrap();
    let gen: Vec<u8> = (0..6).map(|i| u8::from(i == t)).collect();
    let text = format!(
        r#"{{"field": {{"kind": "rational"}}, "algebra": {{"group": {{"symmetric": 3}}}},
             "subalgebra": {{"generators": [{gen:?}]}}, "tasks": ["d2"]}}"#
    );
    let b = Scenario::parse(&text).unwrap().build(None, None).unwrap();
    assert_eq!(b.ext.base().dim(), 2);

    let text = r#"{"field": {"kind": "rational"}, "algebra": {"tensor": [{"matrix": 2}, {"group": {"cyclic": 2}}]},
                   "subalgebra": "unit", "intermediate": [{"tensor_factor": 1}], "tasks": ["d2"]}"#;
    let b = Scenario::parse(text).unwrap().build(None, None).unwrap();
    assert_eq!(b.intermediates[0].dim(), 2);
    assert!(!b.intermediates[0].ambient().is_commutative());

    let text = r#"{"field": {"kind": "rational"}, "algebra": {"matrix": 2}, "subalgebra": {"tensor_factor": 0}, "tasks": ["d2"]}"#;
    let err = Scenario::parse(text).unwrap().build(None, None).err().unwrap();
    assert!(err.to_string().contains("subalgebra.tensor_factor"));
}

#[test]
fn coaction_must_match_the_subalgebra() {
    // regular coaction has coinvariants k, not all of k[C2]
    let text = r#"{"field": {"kind": "rational"}, "algebra": {"group": {"cyclic": 2}}, "subalgebra": "full",
                   "coaction": "regular", "tasks": ["d2"]}"#;
    let err = Scenario::parse(text).unwrap().build(None, None).err().unwrap();
    assert!(matches!(err, ScenarioError::Invalid { ref path, .. } if path == "coaction"), "{err}");
}

#[test]
fn bad_prime_is_rejected() {
    let text = r#"{"field": {"kind": "prime", "p": 4}, "algebra": {"matrix": 2}, "subalgebra": "unit", "tasks": ["d2"]}"#;
    let err = Scenario::parse(text).unwrap().build(None, None).err().unwrap();
    assert!(err.to_string().contains("field.p"));
}
