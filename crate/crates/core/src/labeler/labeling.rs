use serde::{Deserialize, Serialize};

/// Edge labels indexed by edge id. Label 0 marks an unlabeled edge; valid
/// labels are `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeLabeling {
    labels: Vec<usize>,
}

impl EdgeLabeling {
    /// A labeling of `m` edges with nothing assigned yet.
    pub fn empty(m: usize) -> Self {
        EdgeLabeling { labels: vec![0; m] }
    }

    /// Wraps a full label vector; zeros are treated as unlabeled.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        EdgeLabeling { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, edge: usize) -> Option<usize> {
        match self.labels.get(edge) {
            Some(&0) | None => None,
            Some(&l) => Some(l),
        }
    }

    pub fn set(&mut self, edge: usize, label: usize) {
        self.labels[edge] = label;
    }

    pub fn is_labeled(&self, edge: usize) -> bool {
        self.get(edge).is_some()
    }

    pub fn labeled_count(&self) -> usize {
        self.labels.iter().filter(|&&l| l != 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.labels.iter().all(|&l| l != 0)
    }

    /// Raw label slice; unlabeled edges read as 0.
    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.labels
    }
}
