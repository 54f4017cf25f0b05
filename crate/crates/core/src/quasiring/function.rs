use std::sync::Arc;

use rand::Rng;
use serde_json::{json, Value};

use super::Group;
use crate::error::{Error, Result};

#[derive(Debug)]
enum Node<E> {
    Identity,
    Trivial,
    Constant(E),
    Conjugation(E),
    Compose(Arc<Node<E>>, Arc<Node<E>>),
    Smile(Arc<Node<E>>, Arc<Node<E>>),
    PointwiseInverse(Arc<Node<E>>),
}

/// A function `G -> G` built as a finite expression tree.
///
/// Leaves are the identity map, the trivial endomorphism (everything to the
/// unit), constants and inner automorphisms `x -> g x g^-1`; inner nodes are
/// composition, smile and pointwise inverse.
#[derive(Debug)]
pub struct GroupFn<G: Group> {
    group: G,
    node: Arc<Node<G::Element>>,
}

impl<G: Group> Clone for GroupFn<G> {
    fn clone(&self) -> Self {
        Self {
            group: self.group.clone(),
            node: self.node.clone(),
        }
    }
}

impl<G: Group> GroupFn<G> {
    fn leaf(group: &G, node: Node<G::Element>) -> Self {
        Self {
            group: group.clone(),
            node: Arc::new(node),
        }
    }

    /// `x -> x`.
    pub fn identity(group: &G) -> Self {
        Self::leaf(group, Node::Identity)
    }

    /// `x -> 1`, the zero of the quasi-ring.
    pub fn trivial(group: &G) -> Self {
        Self::leaf(group, Node::Trivial)
    }

    pub fn constant(group: &G, value: G::Element) -> Self {
        Self::leaf(group, Node::Constant(value))
    }

    /// `x -> g x g^-1`.
    pub fn conjugation(group: &G, g: G::Element) -> Self {
        Self::leaf(group, Node::Conjugation(g))
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "functions on different groups: {:?} vs {:?}",
                self.group, other.group
            )))
        }
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Self {
            group: self.group.clone(),
            node: Arc::new(Node::Compose(self.node.clone(), other.node.clone())),
        })
    }

    /// `x -> self(x) other(x)`.
    pub fn smile(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Self {
            group: self.group.clone(),
            node: Arc::new(Node::Smile(self.node.clone(), other.node.clone())),
        })
    }

    /// `x -> self(x)^-1`, the negation of the quasi-ring.
    pub fn pointwise_inverse(&self) -> Self {
        Self {
            group: self.group.clone(),
            node: Arc::new(Node::PointwiseInverse(self.node.clone())),
        }
    }

    pub fn eval(&self, x: &G::Element) -> Result<G::Element> {
        eval_node(&self.group, &self.node, x)
    }

    /// True when the tree is built only from identity, trivial map,
    /// inner automorphisms and compositions of those, which are always
    /// endomorphisms. Other trees may still be endomorphisms by accident.
    pub fn is_endomorphism(&self) -> bool {
        is_endo(&self.node)
    }

    pub fn depth(&self) -> usize {
        depth(&self.node)
    }

    pub fn to_json(&self) -> Value {
        node_json(&self.group, &self.node)
    }

    /// Random tree of at most `depth` levels over all node types.
    pub fn random(
        group: &G,
        depth: usize,
        rng: &mut impl Rng,
        sample: &mut impl FnMut(&mut dyn rand::RngCore) -> G::Element,
    ) -> Self {
        let node = random_node::<G>(depth, rng, sample, false);
        Self {
            group: group.clone(),
            node,
        }
    }

    /// Random tree that is structurally an endomorphism.
    pub fn random_endomorphism(
        group: &G,
        depth: usize,
        rng: &mut impl Rng,
        sample: &mut impl FnMut(&mut dyn rand::RngCore) -> G::Element,
    ) -> Self {
        let node = random_node::<G>(depth, rng, sample, true);
        Self {
            group: group.clone(),
            node,
        }
    }
}

fn eval_node<G: Group>(group: &G, node: &Node<G::Element>, x: &G::Element) -> Result<G::Element> {
    match node {
        Node::Identity => Ok(x.clone()),
        Node::Trivial => Ok(group.identity()),
        Node::Constant(c) => Ok(c.clone()),
        Node::Conjugation(g) => {
            let gx = group.operate(g, x)?;
            group.operate(&gx, &group.inverse(g)?)
        }
        Node::Compose(f, h) => {
            let inner = eval_node(group, h, x)?;
            eval_node(group, f, &inner)
        }
        Node::Smile(f, h) => {
            let a = eval_node(group, f, x)?;
            let b = eval_node(group, h, x)?;
            group.operate(&a, &b)
        }
        Node::PointwiseInverse(f) => group.inverse(&eval_node(group, f, x)?),
    }
}

fn is_endo<E>(node: &Node<E>) -> bool {
    match node {
        Node::Identity | Node::Trivial | Node::Conjugation(_) => true,
        Node::Compose(f, h) => is_endo(f) && is_endo(h),
        Node::Constant(_) | Node::Smile(..) | Node::PointwiseInverse(_) => false,
    }
}

fn depth<E>(node: &Node<E>) -> usize {
    match node {
        Node::Identity | Node::Trivial | Node::Constant(_) | Node::Conjugation(_) => 1,
        Node::Compose(f, h) | Node::Smile(f, h) => 1 + depth(f).max(depth(h)),
        Node::PointwiseInverse(f) => 1 + depth(f),
    }
}

fn node_json<G: Group>(group: &G, node: &Node<G::Element>) -> Value {
    match node {
        Node::Identity => json!("id"),
        Node::Trivial => json!("trivial"),
        Node::Constant(c) => json!({ "const": group.describe(c) }),
        Node::Conjugation(g) => json!({ "conj": group.describe(g) }),
        Node::Compose(f, h) => json!({ "compose": [node_json(group, f), node_json(group, h)] }),
        Node::Smile(f, h) => json!({ "smile": [node_json(group, f), node_json(group, h)] }),
        Node::PointwiseInverse(f) => json!({ "inverse": node_json(group, f) }),
    }
}

fn random_node<G: Group>(
    depth: usize,
    rng: &mut impl Rng,
    sample: &mut impl FnMut(&mut dyn rand::RngCore) -> G::Element,
    endo_only: bool,
) -> Arc<Node<G::Element>> {
    let leaf = depth <= 1 || rng.gen_bool(0.35);
    let node = if leaf {
        let choices = if endo_only { 3 } else { 4 };
        match rng.gen_range(0..choices) {
            0 => Node::Identity,
            1 => {
                // keep the trivial map rare so trees stay informative
                if rng.gen_bool(0.3) {
                    Node::Trivial
                } else {
                    Node::Conjugation(sample(rng))
                }
            }
            2 => Node::Conjugation(sample(rng)),
            _ => Node::Constant(sample(rng)),
        }
    } else if endo_only {
        Node::Compose(
            random_node::<G>(depth - 1, rng, sample, true),
            random_node::<G>(depth - 1, rng, sample, true),
        )
    } else {
        match rng.gen_range(0..3) {
            0 => Node::Compose(
                random_node::<G>(depth - 1, rng, sample, false),
                random_node::<G>(depth - 1, rng, sample, false),
            ),
            1 => Node::Smile(
                random_node::<G>(depth - 1, rng, sample, false),
                random_node::<G>(depth - 1, rng, sample, false),
            ),
            _ => Node::PointwiseInverse(random_node::<G>(depth - 1, rng, sample, false)),
        }
    };
    Arc::new(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{pauli_spec, AlgebraElement};
    use crate::group::TElement;
    use crate::quasiring::{GroupKind, SemidirectGroup};
    use crate::sample::trial_rng;

    fn group() -> SemidirectGroup {
        SemidirectGroup::new(GroupKind::D, pauli_spec()).unwrap()
    }

    #[test]
    fn smile_with_trivial_is_neutral() {
        let g = group();
        let mut rng = trial_rng(7, 0);
        let f = GroupFn::conjugation(&g, g.random_element(&mut rng));
        let h = f.smile(&GroupFn::trivial(&g)).unwrap();
        for _ in 0..5 {
            let x = g.random_element(&mut rng);
            assert!(h.eval(&x).unwrap().approx_eq(&f.eval(&x).unwrap(), 1e-12));
        }
    }

    #[test]
    fn smile_with_pointwise_inverse_is_trivial() {
        let g = group();
        let mut rng = trial_rng(8, 0);
        let f = GroupFn::constant(&g, g.random_element(&mut rng))
            .smile(&GroupFn::identity(&g))
            .unwrap();
        let z = f.smile(&f.pointwise_inverse()).unwrap();
        let twice = f.pointwise_inverse().pointwise_inverse();
        for _ in 0..5 {
            let x = g.random_element(&mut rng);
            assert!(z
                .eval(&x)
                .unwrap()
                .approx_eq(&TElement::identity(g.spec()), 1e-12));
            assert!(twice.eval(&x).unwrap().approx_eq(&f.eval(&x).unwrap(), 1e-12));
        }
    }

    #[test]
    fn identity_then_f_is_f() {
        let g = group();
        let mut rng = trial_rng(9, 0);
        let f = GroupFn::conjugation(&g, g.random_element(&mut rng));
        let comp = GroupFn::identity(&g).compose(&f).unwrap();
        let x = g.random_element(&mut rng);
        assert_eq!(comp.eval(&x).unwrap(), f.eval(&x).unwrap());
    }

    #[test]
    fn smile_of_conjugations_adds_on_translations() {
        // oracle: ([l1] ⌣ [l2])(b) = l1 b + l2 b, computed directly
        let g = group();
        let spec = pauli_spec();
        let mut rng = trial_rng(10, 0);
        let l1 = g.random_linear(&mut rng);
        let l2 = g.random_linear(&mut rng);
        let f = GroupFn::conjugation(&g, g.lift(&l1).unwrap())
            .smile(&GroupFn::conjugation(&g, g.lift(&l2).unwrap()))
            .unwrap();
        let b = crate::sample::element(&mut rng, &spec);
        let out = f.eval(&TElement::shift(b.clone())).unwrap();
        let want = l1.mul(&b).unwrap().add(&l2.mul(&b).unwrap()).unwrap();
        assert!(out.is_pure_translation(1e-12));
        assert!(out.translation().approx_eq(&want, 1e-12));
        let _ = AlgebraElement::zero(&spec);
    }

    #[test]
    fn right_distributivity_instance() {
        let g = group();
        let mut rng = trial_rng(11, 0);
        let mut sample = |r: &mut dyn rand::RngCore| {
            let mut r = r;
            g.random_element(&mut r)
        };
        let f = GroupFn::random(&g, 3, &mut rng, &mut sample);
        let k = GroupFn::random(&g, 3, &mut rng, &mut sample);
        let h = GroupFn::random(&g, 3, &mut rng, &mut sample);
        let lhs = f.smile(&k).unwrap().compose(&h).unwrap();
        let rhs = f.compose(&h).unwrap().smile(&k.compose(&h).unwrap()).unwrap();
        for _ in 0..3 {
            let x = g.random_element(&mut rng);
            assert!(lhs.eval(&x).unwrap().approx_eq(&rhs.eval(&x).unwrap(), 1e-9));
        }
    }

    #[test]
    fn functions_on_different_groups_do_not_mix() {
        let d = group();
        let t = SemidirectGroup::new(GroupKind::T, pauli_spec()).unwrap();
        let f = GroupFn::identity(&d);
        let h = GroupFn::identity(&t);
        assert!(f.smile(&h).is_err());
        assert!(f.compose(&h).is_err());
    }

    #[test]
    fn structural_endomorphism_flag() {
        let g = group();
        let mut rng = trial_rng(12, 0);
        let c = GroupFn::conjugation(&g, g.random_element(&mut rng));
        assert!(c.compose(&GroupFn::identity(&g)).unwrap().is_endomorphism());
        assert!(!GroupFn::constant(&g, g.random_element(&mut rng)).is_endomorphism());
        assert!(!c.smile(&c).unwrap().is_endomorphism());
    }
}
