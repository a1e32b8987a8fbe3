/// Size guards for the exhaustive searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for exact acyclic/star coloring.
    pub coloring_vertices: usize,
    /// Source vertex cap for homomorphism search.
    pub hom_source: usize,
    /// Target vertex cap for homomorphism search.
    pub hom_target: usize,
    /// Vertex cap when enumerating a universal target.
    pub target_vertices: u128,
    /// Cap on `k^m` when enumerating every edge coloring of a graph.
    pub edge_colorings: u128,
    /// Largest target size the minimum-target search will try.
    pub min_target_p: usize,
    /// Cap on `k^(p choose 2)` candidate targets at a single size.
    pub min_target_candidates: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            coloring_vertices: 20,
            hom_source: 12,
            hom_target: 64,
            target_vertices: 1_000_000,
            edge_colorings: 1 << 20,
            min_target_p: 5,
            min_target_candidates: 1 << 20,
        }
    }
}

impl Limits {
    /// Every guard multiplied by `factor`.
    pub fn scaled(factor: usize) -> Self {
        let d = Limits::default();
        let f = factor.max(1);
        Limits {
            coloring_vertices: d.coloring_vertices.saturating_mul(f),
            hom_source: d.hom_source.saturating_mul(f),
            hom_target: d.hom_target.saturating_mul(f),
            target_vertices: d.target_vertices.saturating_mul(f as u128),
            edge_colorings: d.edge_colorings.saturating_mul(f as u128),
            min_target_p: d.min_target_p.saturating_mul(f),
            min_target_candidates: d.min_target_candidates.saturating_mul(f as u128),
        }
    }
}
