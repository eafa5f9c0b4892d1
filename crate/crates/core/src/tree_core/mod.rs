//! Port-labeled trees, advice assignments and the radius-limited views nodes
//! build from them.

pub mod advice;
pub mod ball;
pub mod center;
pub mod classes;
pub mod io;
pub mod path;
pub mod tree;

pub use advice::{AdviceAssignment, AdviceError, AdviceString};
pub use ball::{balls_equal, extract_ball, extract_ball_labeled, extract_ball_with_ids, BallError, BallLink, BallNode, LabeledBall};
pub use center::{bfs_distances, canonical_form, diameter_and_center, Center, CenterInfo, Rooted};
pub use classes::ball_classes;
pub use io::{format_advice, format_tree, parse_advice, parse_tree, FormatError};
pub use path::{follow_path, path_nodes, path_ports, PathCode, PathError};
pub use tree::{build_tree, Edge, NodeId, Port, PortLabeledTree, TreeError};
