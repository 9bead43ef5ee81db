mod pebble_game {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pebble_game.rs"));
}

#[test]
fn pebble_game_runs() {
    pebble_game::run_example().expect("pebble_game example should run");
}

mod symmetric_check {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/symmetric_check.rs"));
}

#[test]
fn symmetric_check_runs() {
    symmetric_check::run_example().expect("symmetric_check example should run");
}

mod construction_sequence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/construction_sequence.rs"));
}

#[test]
fn construction_sequence_runs() {
    construction_sequence::run_example().expect("construction_sequence example should run");
}

mod tree_partition {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tree_partition.rs"));
}

#[test]
fn tree_partition_runs() {
    tree_partition::run_example().expect("tree_partition example should run");
}

mod exact_field {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_field.rs"));
}

#[test]
fn exact_field_runs() {
    exact_field::run_example().expect("exact_field example should run");
}

mod generic_realization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/generic_realization.rs"));
}

#[test]
fn generic_realization_runs() {
    generic_realization::run_example().expect("generic_realization example should run");
}

mod frame_pull_apart {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/frame_pull_apart.rs"));
}

#[test]
fn frame_pull_apart_runs() {
    frame_pull_apart::run_example().expect("frame_pull_apart example should run");
}

mod render_svg {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/render_svg.rs"));
}

#[test]
fn render_svg_runs() {
    render_svg::run_example().expect("render_svg example should run");
}

mod random_growth {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/random_growth.rs"));
}

#[test]
fn random_growth_runs() {
    random_growth::run_example().expect("random_growth example should run");
}
