use std::collections::HashMap;

use serde::Serialize;

use super::GroupError;
use crate::algebra::{AlgebraicScalar, Quaternion};

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// A finite group of unit quaternions with precomputed multiplication and
/// inverse tables. Elements are sorted canonically (lexicographically on
/// their exact components), so indices are stable across runs.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    elements: Vec<Quaternion>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn generate(generators: &[Quaternion]) -> Result<Self, GroupError> {
        Self::generate_with_bound(generators, DEFAULT_CLOSURE_BOUND)
    }

    /// BFS closure of the generating set, then index tables. Quaternion
    /// products are only taken for frontier×generator pairs; the full
    /// multiplication table comes from composing the generators'
    /// left-translation permutations, which keeps exact arithmetic off the
    /// |G|² hot path.
    pub fn generate_with_bound(
        generators: &[Quaternion],
        bound: usize,
    ) -> Result<Self, GroupError> {
        assert!(
            generators.iter().all(Quaternion::is_unit),
            "generators must be unit quaternions"
        );
        let one = Quaternion::one();
        let mut seen: HashMap<Quaternion, ()> = HashMap::new();
        seen.insert(one.clone(), ());
        let mut frontier = vec![one];
        while let Some(elem) = frontier.pop() {
            for g in generators {
                let product = g * &elem;
                if !seen.contains_key(&product) {
                    if seen.len() >= bound {
                        return Err(GroupError::ClosureOverflow { bound });
                    }
                    seen.insert(product.clone(), ());
                    frontier.push(product);
                }
            }
        }

        let mut elements: Vec<Quaternion> = seen.into_keys().collect();
        elements.sort();
        let n = elements.len();
        let index: HashMap<&Quaternion, usize> =
            elements.iter().enumerate().map(|(i, q)| (q, i)).collect();
        let identity = index[&Quaternion::one()];

        // Left-translation permutation of each generator.
        let gen_perms: Vec<Vec<usize>> = generators
            .iter()
            .map(|g| elements.iter().map(|x| index[&(g * x)]).collect())
            .collect();

        // Propagate λ_{g·x} = λ_g ∘ λ_x from the identity outward.
        let mut mul: Vec<Option<Vec<usize>>> = vec![None; n];
        mul[identity] = Some((0..n).collect());
        let mut queue = vec![identity];
        while let Some(x) = queue.pop() {
            for perm in &gen_perms {
                let y = perm[x];
                if mul[y].is_none() {
                    let row = {
                        let base = mul[x].as_ref().unwrap();
                        base.iter().map(|&t| perm[t]).collect::<Vec<usize>>()
                    };
                    mul[y] = Some(row);
                    queue.push(y);
                }
            }
        }
        let mul: Vec<Vec<usize>> = mul
            .into_iter()
            .map(|row| row.expect("generators must reach every element"))
            .collect();

        let mut inv = vec![usize::MAX; n];
        for (i, row) in mul.iter().enumerate() {
            let j = row.iter().position(|&p| p == identity).unwrap();
            inv[i] = j;
        }

        let group = Self {
            elements,
            mul,
            inv,
            identity,
        };
        debug_assert!(group.spot_check_table());
        Ok(group)
    }

    fn spot_check_table(&self) -> bool {
        let n = self.len();
        let step = (n / 8).max(1);
        for i in (0..n).step_by(step) {
            for j in (0..n).step_by(step) {
                let direct = &self.elements[i] * &self.elements[j];
                if self.elements[self.mul[i][j]] != direct {
                    return false;
                }
            }
        }
        true
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Quaternion] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Quaternion {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    /// g x g⁻¹.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut power = i;
        let mut order = 1;
        while power != self.identity {
            power = self.mul(power, i);
            order += 1;
        }
        order
    }

    /// Index of −1 if the group contains it.
    pub fn minus_one(&self) -> Option<usize> {
        let minus_one = -&Quaternion::one();
        self.elements.iter().position(|q| *q == minus_one)
    }

    /// Order, class sizes and irrep dimensions, the JSON metadata shape.
    pub fn summary(&self, class_sizes: Vec<usize>, irrep_dims: Vec<usize>) -> GroupSummary {
        GroupSummary {
            order: self.len(),
            class_sizes,
            irrep_dims,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub irrep_dims: Vec<usize>,
}

/// Shipped generator sets, validated by their closure sizes (24, 48, 120)
/// at construction time.
pub mod generators {
    use super::{AlgebraicScalar, Quaternion};

    fn half(n: i64) -> AlgebraicScalar {
        AlgebraicScalar::rational(n, 2)
    }

    /// (1 + i + j + k)/2, a lift of an order-3 rotation.
    pub fn omega() -> Quaternion {
        Quaternion::new(half(1), half(1), half(1), half(1))
    }

    /// (1 + i)/√2 = (√2 + √2·i)/2, a lift of an order-4 rotation.
    pub fn octahedral_extra() -> Quaternion {
        Quaternion::new(
            AlgebraicScalar::sqrt2_times(1, 2),
            AlgebraicScalar::sqrt2_times(1, 2),
            AlgebraicScalar::zero(),
            AlgebraicScalar::zero(),
        )
    }

    /// (i + φ⁻¹j + φk)/2 with φ the golden ratio, a lift of an order-5 axis
    /// half-turn; together with the tetrahedral pair it generates 2I.
    pub fn icosahedral_extra() -> Quaternion {
        let quarter = |n: i64, s: i64| {
            // (n + s·√5)/4
            &AlgebraicScalar::rational(n, 4) + &AlgebraicScalar::sqrt5_times(s, 4)
        };
        Quaternion::new(
            AlgebraicScalar::zero(),
            half(1),
            quarter(-1, 1),
            quarter(1, 1),
        )
    }

    pub fn binary_tetrahedral() -> Vec<Quaternion> {
        vec![Quaternion::i(), omega()]
    }

    pub fn binary_octahedral() -> Vec<Quaternion> {
        vec![Quaternion::i(), omega(), octahedral_extra()]
    }

    pub fn binary_icosahedral() -> Vec<Quaternion> {
        vec![Quaternion::i(), omega(), icosahedral_extra()]
    }
}
