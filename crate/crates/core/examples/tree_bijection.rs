//! Walk one operator through its digraph, level function and coloured tree,
//! then rebuild it.

use rblab::fixtures::five_field_sample;
use rblab::{matrix_to_tree, tree_to_matrix, StructureDigraph};

fn main() -> rblab::Result<()> {
    let op = five_field_sample();
    for row in op.matrix().to_rows() {
        println!(
            "  {}",
            row.iter().map(|x| format!("{x:>3}")).collect::<String>()
        );
    }

    let g = StructureDigraph::from_operator(&op);
    let edges: Vec<_> = g.edges().iter().map(|(i, k)| (i + 1, k + 1)).collect();
    println!("digraph edges {edges:?}, moral: {}", g.is_moral());
    println!("levels {:?}", g.level_function()?.as_slice());

    let form = matrix_to_tree(&op)?;
    println!("tree edges {:?}", form.tree.tree().edges());
    println!("colours {:?}", form.tree.colors());
    println!("code {}", form.tree.canonical_code());

    let back = tree_to_matrix(&form);
    assert_eq!(back, op);
    println!("round trip ok");
    Ok(())
}
