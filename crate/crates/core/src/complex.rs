//! Finite abstract simplicial complexes and their reduced homology over `F_p`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::{rank, FieldConfig, SparseColumn};

/// A face: strictly increasing vertex indices. Ordered by size, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face(Vec<u32>);

impl Face {
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, with the empty face at -1.
    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A subset-closed family of faces on `vertex_count` vertices.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They differ in reduced homology: the void complex is acyclic,
/// the irrelevant complex has `H̃_{-1} = F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: BTreeSet::new(),
        }
    }

    pub fn irrelevant(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: BTreeSet::from([Face::empty()]),
        }
    }

    /// The smallest complex containing every facet in `facets`.
    pub fn from_facets(vertex_count: usize, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        let mut faces = BTreeSet::new();
        for facet in facets {
            check_vertices(vertex_count, &facet)?;
            if faces.contains(&facet) {
                continue;
            }
            let verts = facet.vertices();
            let n = verts.len();
            if n > 30 {
                return Err(Error::Malformed(format!("facet of size {n} is too large to close")));
            }
            for mask in 0u32..(1 << n) {
                let sub = (0..n)
                    .filter(|&t| mask >> t & 1 == 1)
                    .map(|t| verts[t])
                    .collect();
                faces.insert(Face(sub));
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces,
        })
    }

    /// Wraps an explicit face list, rejecting it unless it is subset-closed.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        for f in &faces {
            check_vertices(vertex_count, f)?;
            for t in 0..f.len() {
                let mut sub = f.0.clone();
                sub.remove(t);
                if !faces.contains(&Face(sub)) {
                    return Err(Error::Malformed(format!(
                        "face {:?} is present but not all of its subfaces are",
                        f.vertices()
                    )));
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&Face::empty())
    }

    /// Nonzero ranks of reduced homology `H̃_q`, `q >= -1`, over `field`.
    pub fn reduced_homology_ranks(&self, field: &FieldConfig) -> BTreeMap<i32, usize> {
        let max_len = self.faces.iter().map(Face::len).max();
        let Some(max_len) = max_len else {
            return BTreeMap::new();
        };
        // levels[k] = faces with k vertices, in canonical order
        let mut levels: Vec<Vec<&Face>> = vec![Vec::new(); max_len + 1];
        for f in &self.faces {
            levels[f.len()].push(f);
        }
        let index: Vec<HashMap<&Face, usize>> = levels
            .iter()
            .map(|lvl| lvl.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        // boundary_rank[k]: rank of the boundary from level k to level k-1
        let mut boundary_rank = vec![0usize; max_len + 2];
        for k in 1..=max_len {
            let cols: Vec<SparseColumn> = levels[k]
                .iter()
                .map(|f| {
                    let mut col: SparseColumn = (0..f.len())
                        .map(|t| {
                            let mut sub = f.0.clone();
                            sub.remove(t);
                            let row = index[k - 1][&Face(sub)];
                            let sign = if t % 2 == 0 { 1 } else { field.characteristic() - 1 };
                            (row, sign % field.characteristic())
                        })
                        .collect();
                    col.sort_unstable_by_key(|e| e.0);
                    col
                })
                .collect();
            boundary_rank[k] = rank(cols, field);
        }
        (0..=max_len)
            .filter_map(|k| {
                let h = levels[k].len() - boundary_rank[k] - boundary_rank[k + 1];
                (h > 0).then_some((k as i32 - 1, h))
            })
            .collect()
    }
}

fn check_vertices(vertex_count: usize, f: &Face) -> Result<()> {
    match f.vertices().last() {
        Some(&v) if v as usize >= vertex_count => Err(Error::Malformed(format!(
            "vertex {v} out of range for a complex on {vertex_count} vertices"
        ))),
        _ => Ok(()),
    }
}

/// Reduced homology of a complex on at most 64 vertices whose faces are bitmasks.
///
/// `faces` must be subset-closed. This is the hot path of the Koszul-complex
/// Betti computation.
pub(crate) fn mask_reduced_homology(faces: &[u64], field: &FieldConfig) -> BTreeMap<i32, usize> {
    if faces.is_empty() {
        return BTreeMap::new();
    }
    let max_len = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut levels: Vec<Vec<u64>> = vec![Vec::new(); max_len + 1];
    for &f in faces {
        levels[f.count_ones() as usize].push(f);
    }
    for lvl in &mut levels {
        lvl.sort_unstable();
    }
    let minus_one = field.characteristic() - 1;
    let mut boundary_rank = vec![0usize; max_len + 2];
    for k in 1..=max_len {
        let lower = &levels[k - 1];
        let cols: Vec<SparseColumn> = levels[k]
            .iter()
            .map(|&f| {
                let mut col = SparseColumn::with_capacity(k);
                let mut rest = f;
                let mut t = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let row = lower.binary_search(&(f ^ bit)).expect("complex is subset-closed");
                    col.push((row, if t % 2 == 0 { 1 } else { minus_one }));
                    t += 1;
                }
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        boundary_rank[k] = rank(cols, field);
    }
    (0..=max_len)
        .filter_map(|k| {
            let h = levels[k].len() - boundary_rank[k] - boundary_rank[k + 1];
            (h > 0).then_some((k as i32 - 1, h))
        })
        .collect()
}
