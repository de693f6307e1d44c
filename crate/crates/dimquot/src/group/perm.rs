use std::fmt;

use super::GroupError;

/// Permutation of `{0, …, degree-1}` stored by its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::MalformedPermutation(format!(
                    "image table {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based disjoint cycles, e.g.
    /// `[[1,2,3],[4,5]]`. The degree is the largest moved point unless a
    /// larger one is forced by `min_degree`.
    pub fn from_cycles(cycles: &[Vec<usize>], min_degree: usize) -> Result<Self, GroupError> {
        let mut degree = min_degree;
        for c in cycles {
            for &p in c {
                if p == 0 {
                    return Err(GroupError::MalformedPermutation(
                        "cycle points are 1-based; 0 is not a point".into(),
                    ));
                }
                degree = degree.max(p);
            }
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for c in cycles {
            for w in 0..c.len() {
                let from = c[w] - 1;
                let to = c[(w + 1) % c.len()] - 1;
                if moved[from] {
                    return Err(GroupError::MalformedPermutation(format!(
                        "point {} appears twice",
                        from + 1
                    )));
                }
                moved[from] = true;
                images[from] = to;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Composition "self after other": `(self·other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Pads the permutation to act trivially on extra points.
    pub fn extended_to(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(images.len()..degree);
        Permutation { images }
    }

    /// Disjoint cycle decomposition, 1-based, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
