use ringcodes::selftest::{self, CriterionResult};

fn check(result: CriterionResult) {
    println!("{result}");
    assert!(result.passed, "{result}");
}

#[test]
fn criterion_1_component_counts() {
    check(selftest::component_counts());
}

#[test]
fn criterion_2_idempotent_lifting() {
    check(selftest::idempotent_lifting());
}

#[test]
fn criterion_3_closed_forms_in_family() {
    check(selftest::closed_forms_in_family());
}

#[test]
fn criterion_4_word_counts() {
    check(selftest::word_counts());
}

#[test]
fn criterion_5_minimum_weights() {
    check(selftest::minimum_weights());
}

#[test]
fn criterion_6_bound_sandwich() {
    check(selftest::bound_sandwich());
}

#[test]
fn criterion_7_multiplicative_order() {
    check(selftest::multiplicative_order());
}

#[test]
fn criterion_8_weight_table() {
    check(selftest::weight_table());
}

#[test]
fn criterion_9_properties() {
    check(selftest::properties());
}
