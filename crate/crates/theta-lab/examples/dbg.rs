use std::collections::BTreeSet;
fn main() {
    use theta_lab::{fixtures, Budget};
    let g = fixtures::k23();
    let targets: BTreeSet<usize> = [1].into();
    let flow = theta_lab::paths::disjoint_paths_to_set(&g, &[(0, 3)], &targets, 3, &BTreeSet::new());
    println!("flow3: {:?}", flow.as_ref().map(|p| p.len()));
    let rest = g.clone();
    let p3 = theta_lab::longest::max_weight_path(&rest, 0, 1, &[2usize,3].into(), &mut Budget::default());
    println!("p3: {:?}", p3);
}
