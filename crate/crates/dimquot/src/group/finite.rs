use std::collections::HashMap;
use std::sync::Arc;

use super::perm::Permutation;
use super::word::Word;
use super::GroupError;

/// Default cap on the order of groups built by closure.
pub const DEFAULT_ORDER_CAP: usize = 128;

/// Finite group with a full multiplication table. Element 0 is the
/// identity; indexing is the breadth-first closure order from the
/// generators in input order, so it is deterministic for a given
/// construction path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mult: Vec<u16>,
    inv: Vec<u16>,
    gen_names: Vec<String>,
    gen_elems: Vec<usize>,
    perms: Option<Vec<Permutation>>,
}

impl FiniteGroup {
    /// Breadth-first closure of named permutation generators.
    pub fn from_permutations(
        generators: &[(String, Permutation)],
    ) -> Result<Arc<Self>, GroupError> {
        Self::from_permutations_capped(generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutations_capped(
        generators: &[(String, Permutation)],
        cap: usize,
    ) -> Result<Arc<Self>, GroupError> {
        let degree = generators
            .iter()
            .map(|(_, p)| p.degree())
            .max()
            .unwrap_or(1);
        let gens: Vec<Permutation> = generators
            .iter()
            .map(|(_, p)| p.extended_to(degree))
            .collect();
        {
            let mut names: Vec<&String> = generators.iter().map(|(n, _)| n).collect();
            names.sort();
            names.dedup();
            if names.len() != generators.len() {
                return Err(GroupError::DuplicateGeneratorName);
            }
        }

        let mut elems: Vec<Permutation> = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut cursor = 0;
        while cursor < elems.len() {
            let current = elems[cursor].clone();
            for g in &gens {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    if elems.len() >= cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            cursor += 1;
        }

        let order = elems.len();
        let mut mult = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let p = elems[a].compose(&elems[b]);
                mult[a * order + b] = index[&p] as u16;
            }
        }
        let gen_elems: Vec<usize> = gens.iter().map(|g| index[g]).collect();
        let gen_names: Vec<String> = generators.iter().map(|(n, _)| n.clone()).collect();
        let g = Self::from_parts(
            String::new(),
            order,
            mult,
            gen_names,
            gen_elems,
            Some(elems),
        )?;
        Ok(Arc::new(g))
    }

    /// Builds a group from an explicit multiplication table (row-major,
    /// `table[a][b] = a·b`); index 0 must be the identity.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Arc<Self>, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        let mut mult = vec![0u16; order * order];
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::MalformedTable(format!(
                    "row {a} has length {} but order is {order}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::MalformedTable(format!(
                        "entry {v} out of range at ({a},{b})"
                    )));
                }
                mult[a * order + b] = v as u16;
            }
        }
        Ok(Arc::new(Self::from_parts(
            String::new(),
            order,
            mult,
            vec![],
            vec![],
            None,
        )?))
    }

    fn from_parts(
        name: String,
        order: usize,
        mult: Vec<u16>,
        gen_names: Vec<String>,
        gen_elems: Vec<usize>,
        perms: Option<Vec<Permutation>>,
    ) -> Result<Self, GroupError> {
        // Identity and inverses.
        for a in 0..order {
            if mult[a * order] as usize != a || mult[a] as usize != a {
                return Err(GroupError::MalformedTable(format!(
                    "element 0 is not a two-sided identity at {a}"
                )));
            }
        }
        let mut inv = vec![u16::MAX; order];
        for a in 0..order {
            let mut found = None;
            for b in 0..order {
                if mult[a * order + b] == 0 && mult[b * order + a] == 0 {
                    found = Some(b as u16);
                    break;
                }
            }
            inv[a] = found.ok_or_else(|| {
                GroupError::MalformedTable(format!("element {a} has no two-sided inverse"))
            })?;
        }
        // Associativity.
        for a in 0..order {
            for b in 0..order {
                let ab = mult[a * order + b] as usize;
                for c in 0..order {
                    let bc = mult[b * order + c] as usize;
                    if mult[ab * order + c] != mult[a * order + bc] {
                        return Err(GroupError::MalformedTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name,
            order,
            mult,
            inv,
            gen_names,
            gen_elems,
            perms,
        })
    }

    pub fn with_name(self: &Arc<Self>, name: &str) -> Arc<Self> {
        let mut g = (**self).clone();
        g.name = name.to_string();
        Arc::new(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut n = 1;
        let mut p = x;
        while p != 0 {
            p = self.mul(p, x);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, x| {
            num_integer::lcm(acc, self.element_order(x) as u64)
        })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn generator_elements(&self) -> &[usize] {
        &self.gen_elems
    }

    pub fn generator_permutations(&self) -> Option<Vec<(String, Permutation)>> {
        let perms = self.perms.as_ref()?;
        Some(
            self.gen_names
                .iter()
                .zip(&self.gen_elems)
                .map(|(n, &e)| (n.clone(), perms[e].clone()))
                .collect(),
        )
    }

    /// Printable form of an element: cycle notation when a permutation
    /// representation exists, the index otherwise.
    pub fn element_label(&self, x: usize) -> String {
        match &self.perms {
            Some(ps) => ps[x].to_string(),
            None => format!("g{x}"),
        }
    }

    pub fn generator_element(&self, name: &str) -> Option<usize> {
        self.gen_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.gen_elems[i])
    }

    /// Evaluates a word in the bound generator names.
    pub fn evaluate_word(&self, w: &Word) -> Result<usize, GroupError> {
        let mut acc = self.identity();
        for (name, exp) in w.terms() {
            let g = self
                .generator_element(name)
                .ok_or_else(|| GroupError::UnknownGenerator(name.clone()))?;
            let base = if *exp >= 0 { g } else { self.inv(g) };
            for _ in 0..exp.unsigned_abs() {
                acc = self.mul(acc, base);
            }
        }
        Ok(acc)
    }

    /// Conjugacy classes in element order, each sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|g| self.conjugate(x, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class);
        }
        classes
    }
}
