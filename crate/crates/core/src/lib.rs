//! Antimagic edge labelings for trees whose even-degree vertices induce a
//! path of even order.
//!
//! The construction runs in time linear in the number of edges. The crate
//! also ships the machinery used to check it: a verifier for vertex sums and
//! residue structure, an exhaustive backtracking oracle for small trees,
//! Prüfer-sequence enumeration, AHU canonical forms and a seeded generator of
//! trees that satisfy the precondition.
//!
//! ```
//! use antimagic_core::{label, parse_tree, is_antimagic};
//!
//! let tree = parse_tree("0 1\n1 2\n2 3").unwrap();
//! let labeling = label(&tree).unwrap();
//! assert_eq!(labeling.as_slice(), &[1, 3, 2]);
//! assert!(is_antimagic(&tree, &labeling).is_antimagic());
//! ```

pub mod canonical;
pub mod even_path;
pub mod format;
pub mod generator;
pub mod labeler;
pub mod oracle;
pub mod tree;
pub mod verifier;

pub use canonical::canonical_form;
pub use even_path::{find_even_path, EvenPathStatus, NotAPathReason};
pub use format::{serialize, Format, FormatError, StructuredDocument};
pub use generator::{generate, generate_odd_subtree, GenError, GenSpec, RootedTree};
pub use labeler::{
    decompose, label, label_with, CaseTag, Construction, EdgeLabeling, EvenPathDecomposition,
    LabelError, LabelOptions, PairSchedule,
};
pub use oracle::{sample_tree, search_antimagic, trees_from_pruefer, OracleOutcome, OracleResult};
pub use tree::{parse_tree, Tree, TreeError};
pub use verifier::{
    is_antimagic, residue_audit, vertex_sums, AntimagicVerdict, ResidueAudit, SumReport,
};
