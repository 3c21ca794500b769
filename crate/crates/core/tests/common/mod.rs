use std::path::PathBuf;

use polytet::TetMeshF64;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load_random_fixture(points: usize) -> TetMeshF64 {
    let dir = fixture_dir();
    let (positions, quads) = polytet::io::load_node_ele(
        dir.join(format!("random_{points}.node")),
        dir.join(format!("random_{points}.ele")),
    )
    .expect("fixture files must parse");
    TetMeshF64::build_from_tets(positions, &quads).expect("fixture mesh must build")
}
