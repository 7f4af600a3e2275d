mod common;

#[test]
fn trefoil_relations_hold_on_a_coordinate_realization() {
    let worst = common::geometric::trefoil_relation_check().unwrap();
    assert!(worst < 1e-9);
}
