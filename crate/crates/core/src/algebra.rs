//! Associative matrix algebras with involution.
//!
//! An [`Algebra`] is either the full matrix algebra `M_n` or the doubled
//! algebra `M_n ⊕ M_nᵒᵖ` (componentwise product with the second factor
//! reversed), carrying one of four involutions: transpose, the adjoint of a
//! symmetric or skew-symmetric bilinear form, or the exchange of the two
//! components of a doubled algebra. Elements flatten to coordinate vectors
//! so that ideals, products of subspaces and skew parts are ordinary
//! [`Subspace`] computations.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use num::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    /// The full matrix algebra `M_n`.
    Full(usize),
    /// `M_n ⊕ M_nᵒᵖ`: pairs with `(b,c)·(b',c') = (bb', c'c)`.
    Doubled(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Involution {
    None,
    Transpose,
    /// Adjoint of a symmetric invertible Gram matrix: `x ↦ G⁻¹xᵀG`.
    Orthogonal(Matrix),
    /// Adjoint of a skew-symmetric invertible Gram matrix: `x ↦ G⁻¹xᵀG`.
    Symplectic(Matrix),
    /// `(b, c) ↦ (c, b)` on a doubled algebra.
    Exchange,
}

/// An element of an [`Algebra`]: one matrix for `Full`, a pair for `Doubled`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Element {
    Single(Matrix),
    Pair(Matrix, Matrix),
}

impl Element {
    pub fn single(m: Matrix) -> Self {
        Element::Single(m)
    }

    pub fn pair(b: Matrix, c: Matrix) -> Self {
        Element::Pair(b, c)
    }

    pub fn as_single(&self) -> &Matrix {
        match self {
            Element::Single(m) => m,
            Element::Pair(..) => panic!("expected a Full-algebra element"),
        }
    }

    pub fn as_pair(&self) -> (&Matrix, &Matrix) {
        match self {
            Element::Pair(b, c) => (b, c),
            Element::Single(_) => panic!("expected a Doubled-algebra element"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Single(m) => m.is_zero(),
            Element::Pair(b, c) => b.is_zero() && c.is_zero(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    shape: Shape,
    involution: Involution,
    gram_inv: Option<Matrix>,
}

impl Algebra {
    pub fn new(shape: Shape, involution: Involution) -> Result<Self> {
        let gram_inv = match (&shape, &involution) {
            (Shape::Doubled(_), Involution::Exchange) => None,
            (Shape::Full(_), Involution::Exchange) => {
                return Err(Error::invalid(
                    "exchange involution requires a doubled algebra",
                ))
            }
            (Shape::Doubled(_), Involution::None) => None,
            (Shape::Doubled(_), _) => {
                return Err(Error::invalid(
                    "doubled algebras support only the exchange involution",
                ))
            }
            (Shape::Full(_), Involution::None | Involution::Transpose) => None,
            (Shape::Full(n), Involution::Orthogonal(g)) => {
                if g.rows() != *n || g.cols() != *n {
                    return Err(Error::Shape(format!(
                        "Gram matrix must be {n}x{n}, got {}x{}",
                        g.rows(),
                        g.cols()
                    )));
                }
                if g.transpose() != *g {
                    return Err(Error::invalid("orthogonal Gram matrix must be symmetric"));
                }
                Some(
                    g.inverse()
                        .ok_or_else(|| Error::invalid("orthogonal Gram matrix must be invertible"))?,
                )
            }
            (Shape::Full(n), Involution::Symplectic(g)) => {
                if g.rows() != *n || g.cols() != *n {
                    return Err(Error::Shape(format!(
                        "Gram matrix must be {n}x{n}, got {}x{}",
                        g.rows(),
                        g.cols()
                    )));
                }
                if g.transpose() != -g {
                    return Err(Error::invalid(
                        "symplectic Gram matrix must be skew-symmetric",
                    ));
                }
                Some(
                    g.inverse()
                        .ok_or_else(|| Error::invalid("symplectic Gram matrix must be invertible"))?,
                )
            }
        };
        Ok(Algebra {
            shape,
            involution,
            gram_inv,
        })
    }

    pub fn full(n: usize) -> Self {
        Algebra::new(Shape::Full(n), Involution::None).unwrap()
    }

    pub fn full_transpose(n: usize) -> Self {
        Algebra::new(Shape::Full(n), Involution::Transpose).unwrap()
    }

    pub fn full_orthogonal(n: usize, gram: Matrix) -> Result<Self> {
        Algebra::new(Shape::Full(n), Involution::Orthogonal(gram))
    }

    pub fn full_symplectic(n: usize, gram: Matrix) -> Result<Self> {
        Algebra::new(Shape::Full(n), Involution::Symplectic(gram))
    }

    /// `M_n ⊕ M_nᵒᵖ` with the exchange involution.
    pub fn doubled(n: usize) -> Self {
        Algebra::new(Shape::Doubled(n), Involution::Exchange).unwrap()
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn has_involution(&self) -> bool {
        !matches!(self.involution, Involution::None)
    }

    /// Size of the underlying matrices.
    pub fn matrix_size(&self) -> usize {
        match self.shape {
            Shape::Full(n) | Shape::Doubled(n) => n,
        }
    }

    /// Dimension of the algebra as a vector space (the flattened ambient).
    pub fn dim(&self) -> usize {
        let n = self.matrix_size();
        match self.shape {
            Shape::Full(_) => n * n,
            Shape::Doubled(_) => 2 * n * n,
        }
    }

    pub fn zero(&self) -> Element {
        let n = self.matrix_size();
        match self.shape {
            Shape::Full(_) => Element::Single(Matrix::zeros(n, n)),
            Shape::Doubled(_) => Element::Pair(Matrix::zeros(n, n), Matrix::zeros(n, n)),
        }
    }

    pub fn one(&self) -> Element {
        let n = self.matrix_size();
        match self.shape {
            Shape::Full(_) => Element::Single(Matrix::identity(n)),
            Shape::Doubled(_) => Element::Pair(Matrix::identity(n), Matrix::identity(n)),
        }
    }

    /// The `k`-th coordinate basis element under the flattening order.
    pub fn basis_element(&self, k: usize) -> Element {
        let mut flat = vec![Scalar::zero(); self.dim()];
        flat[k] = num::One::one();
        self.unflatten(&flat).unwrap()
    }

    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim()).map(|k| self.basis_element(k)).collect()
    }

    pub fn shape_matches(&self, a: &Element) -> bool {
        let n = self.matrix_size();
        match (&self.shape, a) {
            (Shape::Full(_), Element::Single(m)) => m.rows() == n && m.cols() == n,
            (Shape::Doubled(_), Element::Pair(b, c)) => {
                b.rows() == n && b.cols() == n && c.rows() == n && c.cols() == n
            }
            _ => false,
        }
    }

    pub fn flatten(&self, a: &Element) -> Vec<Scalar> {
        debug_assert!(self.shape_matches(a));
        match a {
            Element::Single(m) => m.flatten(),
            Element::Pair(b, c) => {
                let mut v = b.flatten();
                v.extend(c.flatten());
                v
            }
        }
    }

    pub fn unflatten(&self, flat: &[Scalar]) -> Result<Element> {
        crate::linalg::check_len(self.dim(), flat.len())?;
        let n = self.matrix_size();
        Ok(match self.shape {
            Shape::Full(_) => Element::Single(Matrix::from_flat(n, n, flat)?),
            Shape::Doubled(_) => Element::Pair(
                Matrix::from_flat(n, n, &flat[..n * n])?,
                Matrix::from_flat(n, n, &flat[n * n..])?,
            ),
        })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (a, b) {
            (Element::Single(x), Element::Single(y)) => Element::Single(x + y),
            (Element::Pair(x1, x2), Element::Pair(y1, y2)) => Element::Pair(x1 + y1, x2 + y2),
            _ => panic!("mixed element shapes"),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        match (a, b) {
            (Element::Single(x), Element::Single(y)) => Element::Single(x - y),
            (Element::Pair(x1, x2), Element::Pair(y1, y2)) => Element::Pair(x1 - y1, x2 - y2),
            _ => panic!("mixed element shapes"),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        match a {
            Element::Single(x) => Element::Single(-x),
            Element::Pair(x, y) => Element::Pair(-x, -y),
        }
    }

    pub fn scale(&self, a: &Element, c: &Scalar) -> Element {
        match a {
            Element::Single(x) => Element::Single(x.scale(c)),
            Element::Pair(x, y) => Element::Pair(x.scale(c), y.scale(c)),
        }
    }

    /// Associative product; the second component of a doubled algebra
    /// multiplies in the opposite order.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (a, b) {
            (Element::Single(x), Element::Single(y)) => Element::Single(x * y),
            (Element::Pair(x1, x2), Element::Pair(y1, y2)) => Element::Pair(x1 * y1, y2 * x2),
            _ => panic!("mixed element shapes"),
        }
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn apply_involution(&self, a: &Element) -> Result<Element> {
        debug_assert!(self.shape_matches(a));
        match (&self.involution, a) {
            (Involution::None, _) => Err(Error::NoInvolution),
            (Involution::Transpose, Element::Single(m)) => Ok(Element::Single(m.transpose())),
            (Involution::Orthogonal(g) | Involution::Symplectic(g), Element::Single(m)) => {
                let gi = self.gram_inv.as_ref().expect("cached at construction");
                Ok(Element::Single(&(gi * &m.transpose()) * g))
            }
            (Involution::Exchange, Element::Pair(b, c)) => Ok(Element::Pair(c.clone(), b.clone())),
            _ => Err(Error::Shape("element does not match algebra shape".into())),
        }
    }

    /// Span of `{q − q* : q ∈ basis of S}`. For a ∗-invariant `S` this is the
    /// space of skew-symmetric elements of `S`.
    pub fn skew_part(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: s.ambient(),
                right: self.dim(),
            });
        }
        let vecs: Vec<Vec<Scalar>> = s
            .basis()
            .iter()
            .map(|v| {
                let q = self.unflatten(v)?;
                let qs = self.apply_involution(&q)?;
                Ok(self.flatten(&self.sub(&q, &qs)))
            })
            .collect::<Result<_>>()?;
        Subspace::span(&vecs, self.dim())
    }

    /// The Lie algebra `𝔲*(A)` of skew-symmetric elements.
    pub fn skew_space(&self) -> Result<Subspace> {
        self.skew_part(&Subspace::full(self.dim()))
    }

    /// Span of all pairwise products of basis elements of `S` and `T`.
    pub fn product_space(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        if s.ambient() != self.dim() || t.ambient() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: s.ambient(),
                right: t.ambient(),
            });
        }
        let se: Vec<Element> = s
            .basis()
            .iter()
            .map(|v| self.unflatten(v))
            .collect::<Result<_>>()?;
        let te: Vec<Element> = t
            .basis()
            .iter()
            .map(|v| self.unflatten(v))
            .collect::<Result<_>>()?;
        let mut prods = Vec::with_capacity(se.len() * te.len());
        for a in &se {
            for b in &te {
                prods.push(self.flatten(&self.mul(a, b)));
            }
        }
        Subspace::span(&prods, self.dim())
    }

    /// Subspace spanned by a list of elements.
    pub fn span_of(&self, elements: &[Element]) -> Subspace {
        let vecs: Vec<Vec<Scalar>> = elements.iter().map(|e| self.flatten(e)).collect();
        Subspace::span(&vecs, self.dim()).expect("element flattening has the right length")
    }

    pub fn elements_of(&self, s: &Subspace) -> Result<Vec<Element>> {
        s.basis().iter().map(|v| self.unflatten(v)).collect()
    }

    /// Rank of an element: matrix rank, summed over both components for a
    /// doubled algebra.
    pub fn element_rank(&self, a: &Element) -> usize {
        match a {
            Element::Single(m) => m.rank(),
            Element::Pair(b, c) => b.rank() + c.rank(),
        }
    }

    /// dim `x·A·x`, the sandwich space of `x`.
    pub fn sandwich_dimension(&self, x: &Element) -> usize {
        let line = self.span_of(std::slice::from_ref(x));
        let full = Subspace::full(self.dim());
        let xa = self.product_space(&line, &full).expect("ambient matches");
        self.product_space(&xa, &line)
            .expect("ambient matches")
            .dim()
    }

    /// A `y` with `x·y·x = x`, when one exists. In a matrix algebra a witness
    /// always exists; the solver works over any shape.
    pub fn von_neumann_witness(&self, x: &Element) -> Option<Element> {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d)
            .map(|k| {
                let b = self.basis_element(k);
                self.flatten(&self.mul(&self.mul(x, &b), x))
            })
            .collect();
        let m = Matrix::from_fn(d, d, |i, j| cols[j][i].clone());
        let rhs = self.flatten(x);
        let sol = m.solve(&rhs).expect("square system")?;
        Some(self.unflatten(&sol).expect("length d"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A one-sided ideal of an [`Algebra`], stored as a canonical subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneSidedIdeal {
    pub side: Side,
    pub space: Subspace,
}

impl OneSidedIdeal {
    /// Wrap a subspace after verifying closure under multiplication from the
    /// declared side by every algebra basis element.
    pub fn new(alg: &Algebra, side: Side, space: Subspace) -> Result<Self> {
        let ideal = OneSidedIdeal { side, space };
        if !ideal.is_closed(alg)? {
            return Err(Error::precondition(
                "subspace is not closed under one-sided multiplication",
            ));
        }
        Ok(ideal)
    }

    pub fn is_closed(&self, alg: &Algebra) -> Result<bool> {
        let full = Subspace::full(alg.dim());
        let prod = match self.side {
            Side::Left => alg.product_space(&full, &self.space)?,
            Side::Right => alg.product_space(&self.space, &full)?,
        };
        Ok(self.space.contains(&prod))
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// Smallest one-sided ideal containing the given generators:
/// `A·x + F·x` on the left, `x·A + F·x` on the right.
pub fn ideal_generated(alg: &Algebra, generators: &[Element], side: Side) -> OneSidedIdeal {
    let mut vecs: Vec<Vec<Scalar>> = generators.iter().map(|g| alg.flatten(g)).collect();
    for g in generators {
        for k in 0..alg.dim() {
            let b = alg.basis_element(k);
            let prod = match side {
                Side::Left => alg.mul(&b, g),
                Side::Right => alg.mul(g, &b),
            };
            vecs.push(alg.flatten(&prod));
        }
    }
    let space = Subspace::span(&vecs, alg.dim()).expect("flattened lengths agree");
    OneSidedIdeal { side, space }
}

/// Product of the underlying subspaces of two ideals.
pub fn ideal_product(alg: &Algebra, a: &OneSidedIdeal, b: &OneSidedIdeal) -> Result<Subspace> {
    alg.product_space(&a.space, &b.space)
}

/// The idempotent generating a one-sided ideal of a semisimple algebra:
/// for a left ideal `L`, the `f ∈ L` with `x·f = x` for all `x ∈ L`
/// (then `L = A·f`); mirrored for right ideals.
pub fn idempotent_generator(alg: &Algebra, ideal: &OneSidedIdeal) -> Result<Element> {
    if ideal.is_zero() {
        return Ok(alg.zero());
    }
    let gens: Vec<Element> = alg.elements_of(&ideal.space)?;
    let k = gens.len();
    let d = alg.dim();
    // unknowns: coefficients of the generator in the ideal basis
    let mut m = Matrix::zeros(k * d, k);
    let mut rhs = Vec::with_capacity(k * d);
    for (i, x) in gens.iter().enumerate() {
        for (j, v) in gens.iter().enumerate() {
            let prod = match ideal.side {
                Side::Left => alg.mul(x, v),
                Side::Right => alg.mul(v, x),
            };
            for (row, val) in alg.flatten(&prod).into_iter().enumerate() {
                m.set(i * d + row, j, val);
            }
        }
        rhs.extend(alg.flatten(x));
    }
    let sol = m
        .solve(&rhs)?
        .ok_or_else(|| Error::Internal("no idempotent generator: inconsistent system".into()))?;
    let mut f = alg.zero();
    for (j, c) in sol.iter().enumerate() {
        f = alg.add(&f, &alg.scale(&gens[j], c));
    }
    if alg.mul(&f, &f) != f {
        return Err(Error::Internal(
            "recovered generator is not idempotent".into(),
        ));
    }
    let regenerated = ideal_generated(alg, std::slice::from_ref(&f), ideal.side);
    if regenerated.space != ideal.space {
        return Err(Error::Internal(
            "idempotent does not regenerate the ideal".into(),
        ));
    }
    Ok(f)
}

/// Standard symplectic Gram matrix `[[0, I], [−I, 0]]` on 2m coordinates.
pub fn symplectic_standard_gram(n: usize) -> Result<Matrix> {
    if n % 2 != 0 {
        return Err(Error::invalid("symplectic forms need even dimension"));
    }
    let m = n / 2;
    let mut g = Matrix::zeros(n, n);
    let one: Scalar = num::One::one();
    for i in 0..m {
        g.set(i, m + i, one.clone());
        g.set(m + i, i, -one.clone());
    }
    Ok(g)
}

/// Split symmetric Gram matrix: hyperbolic block `[[0, I], [I, 0]]` on the
/// first 2m coordinates, plus a single diagonal 1 when the dimension is odd.
pub fn split_symmetric_gram(n: usize) -> Matrix {
    let m = n / 2;
    let mut g = Matrix::zeros(n, n);
    let one: Scalar = num::One::one();
    for i in 0..m {
        g.set(i, m + i, one.clone());
        g.set(m + i, i, one.clone());
    }
    if n % 2 == 1 {
        g.set(n - 1, n - 1, one);
    }
    g
}

/// Symmetric Gram pairing coordinates `2i ↔ 2i+1`; the even-size truncations
/// of the hyperbolic self-dual pairing on a countable basis.
pub fn paired_symmetric_gram(n: usize) -> Result<Matrix> {
    if n % 2 != 0 {
        return Err(Error::invalid("paired Gram matrices need even dimension"));
    }
    let mut g = Matrix::zeros(n, n);
    let one: Scalar = num::One::one();
    for i in 0..n / 2 {
        g.set(2 * i, 2 * i + 1, one.clone());
        g.set(2 * i + 1, 2 * i, one.clone());
    }
    Ok(g)
}

/// Skew Gram pairing coordinates `2i ↔ 2i+1` with sign.
pub fn paired_skew_gram(n: usize) -> Result<Matrix> {
    if n % 2 != 0 {
        return Err(Error::invalid("paired Gram matrices need even dimension"));
    }
    let mut g = Matrix::zeros(n, n);
    let one: Scalar = num::One::one();
    for i in 0..n / 2 {
        g.set(2 * i, 2 * i + 1, one.clone());
        g.set(2 * i + 1, 2 * i, -one.clone());
    }
    Ok(g)
}
