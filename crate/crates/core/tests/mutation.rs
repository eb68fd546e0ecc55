use nr_workbench::report::{verify, Status, Subjects, Target};
use nr_workbench::Vertex;

fn corrupted() -> Subjects {
    let mut s = Subjects::standard();
    let w = s.nr.word(100);
    s.nr = s.nr.with_word_replaced(100, Vertex::new(16, w.bits() ^ 1).unwrap()).unwrap();
    s
}

#[test]
fn corrupted_nr_word_is_caught() {
    let r = verify(Target::Nr, &corrupted(), Default::default());
    let failing = r.failing_ids();
    for id in ["nr.delta", "nr.cr", "nr.ct"] {
        assert!(failing.contains(&id), "{id} should fail, failing: {failing:?}");
    }
    assert!(!r.all_passed());
}

#[test]
fn standard_subjects_pass() {
    let r = verify(Target::All, &Subjects::standard(), Default::default());
    assert!(r.all_passed(), "{:?}", r.failing_ids());
    assert!(r.claims.iter().filter(|c| c.status == Status::ExternalFact).count() > 0);
}

#[test]
fn corrupted_golay_is_caught() {
    let mut s = Subjects::standard();
    let w = s.golay.word(7);
    s.golay = s.golay.with_word_replaced(7, Vertex::new(24, w.bits() ^ 0x800000).unwrap()).unwrap();
    let r = verify(Target::All, &s, Default::default());
    assert!(r.failing_ids().iter().any(|id| id.starts_with("golay.")));
}
