//! Lie algebras realized as bracket-closed subspaces of an associative
//! matrix algebra: the classical families `sl`, `so`, `sp`, skew-part
//! algebras `𝔲*`/`𝔰𝔲*`, derived algebras, block direct sums, and the
//! Killing form.

use crate::algebra::{
    split_symmetric_gram, symplectic_standard_gram, Algebra, Element, Shape,
};
use crate::delta::{Family, RootType};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use num::Zero;

/// Structural tag recording how a handle was built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LieKind {
    SpecialLinear,
    Orthogonal,
    Symplectic,
    SuStar,
    Derived,
    DirectSum(Vec<SumComponent>),
    Custom,
}

/// One block of a direct sum: the component algebra plus where its block
/// starts in the ambient matrix and its span inside the ambient space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumComponent {
    pub offset: usize,
    pub lie: LieAlgebra,
    pub embedded_space: Subspace,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    pub algebra: Algebra,
    pub space: Subspace,
    pub kind: LieKind,
}

/// Span of `[s, t]` over basis pairs of two subspaces.
pub fn bracket_space(alg: &Algebra, s: &Subspace, t: &Subspace) -> Result<Subspace> {
    if s.ambient() != alg.dim() || t.ambient() != alg.dim() {
        return Err(Error::AmbientMismatch {
            left: s.ambient(),
            right: t.ambient(),
        });
    }
    let se = alg.elements_of(s)?;
    let te = alg.elements_of(t)?;
    let mut vecs = Vec::with_capacity(se.len() * te.len());
    for a in &se {
        for b in &te {
            vecs.push(alg.flatten(&alg.commutator(a, b)));
        }
    }
    Subspace::span(&vecs, alg.dim())
}

impl LieAlgebra {
    /// Trace-zero matrices in `M_n`.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("sl(n) needs n >= 2"));
        }
        let algebra = Algebra::full(n);
        let mut vecs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    vecs.push(Matrix::unit(n, n, i, j).flatten());
                }
            }
        }
        for i in 0..n - 1 {
            let d = &Matrix::unit(n, n, i, i) - &Matrix::unit(n, n, i + 1, i + 1);
            vecs.push(d.flatten());
        }
        let space = Subspace::span(&vecs, algebra.dim())?;
        Ok(LieAlgebra {
            algebra,
            space,
            kind: LieKind::SpecialLinear,
        })
    }

    /// Skew elements of `M_n` under a symmetric form; defaults to the split
    /// form (hyperbolic pairs plus one anisotropic vector when n is odd) so
    /// that isotropic vectors exist over ℚ.
    pub fn so(n: usize, gram: Option<Matrix>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("so(n) needs n >= 3"));
        }
        let gram = gram.unwrap_or_else(|| split_symmetric_gram(n));
        let algebra = Algebra::full_orthogonal(n, gram)?;
        let space = algebra.skew_space()?;
        let dim = space.dim();
        if dim != n * (n - 1) / 2 {
            return Err(Error::Internal(format!(
                "so({n}) dimension {dim}, expected {}",
                n * (n - 1) / 2
            )));
        }
        Ok(LieAlgebra {
            algebra,
            space,
            kind: LieKind::Orthogonal,
        })
    }

    /// Skew elements of `M_n` (n even) under a skew form; defaults to the
    /// standard block form `[[0, I], [−I, 0]]`.
    pub fn sp(n: usize, gram: Option<Matrix>) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::invalid("sp(n) needs even n >= 2"));
        }
        let gram = match gram {
            Some(g) => g,
            None => symplectic_standard_gram(n)?,
        };
        let algebra = Algebra::full_symplectic(n, gram)?;
        let space = algebra.skew_space()?;
        let m = n / 2;
        let dim = space.dim();
        if dim != m * (2 * m + 1) {
            return Err(Error::Internal(format!(
                "sp({n}) dimension {dim}, expected {}",
                m * (2 * m + 1)
            )));
        }
        Ok(LieAlgebra {
            algebra,
            space,
            kind: LieKind::Symplectic,
        })
    }

    /// `𝔰𝔲*(A) = [𝔲*(A), 𝔲*(A)]` for an algebra with involution.
    pub fn su_star(algebra: &Algebra) -> Result<Self> {
        if !algebra.has_involution() {
            return Err(Error::NoInvolution);
        }
        let u = algebra.skew_space()?;
        let space = bracket_space(algebra, &u, &u)?;
        Ok(LieAlgebra {
            algebra: algebra.clone(),
            space,
            kind: LieKind::SuStar,
        })
    }

    /// `𝔲*(A)` itself as a handle.
    pub fn u_star(algebra: &Algebra) -> Result<Self> {
        if !algebra.has_involution() {
            return Err(Error::NoInvolution);
        }
        let space = algebra.skew_space()?;
        Ok(LieAlgebra {
            algebra: algebra.clone(),
            space,
            kind: LieKind::Custom,
        })
    }

    /// Wrap an explicit bracket-closed subspace.
    pub fn custom(algebra: Algebra, space: Subspace) -> Result<Self> {
        let l = LieAlgebra {
            algebra,
            space,
            kind: LieKind::Custom,
        };
        if !l.is_bracket_closed()? {
            return Err(Error::precondition("subspace is not closed under brackets"));
        }
        Ok(l)
    }

    /// Block-diagonal direct sum of components, each over a full matrix
    /// algebra.
    pub fn direct_sum(components: Vec<LieAlgebra>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid("direct sum needs at least one component"));
        }
        for c in &components {
            if !matches!(c.algebra.shape(), Shape::Full(_)) {
                return Err(Error::invalid(
                    "direct-sum components must live in full matrix algebras",
                ));
            }
        }
        let total: usize = components.iter().map(|c| c.algebra.matrix_size()).sum();
        let ambient_alg = Algebra::full(total);
        let mut sum_components = Vec::with_capacity(components.len());
        let mut offset = 0;
        let mut vecs: Vec<Vec<Scalar>> = Vec::new();
        for lie in components {
            let n = lie.algebra.matrix_size();
            let embed = |v: &[Scalar]| -> Vec<Scalar> {
                let m = Matrix::from_flat(n, n, v).expect("component flat length");
                embed_block(total, offset, &m).flatten()
            };
            let embedded_space = lie.space.map(embed, total * total);
            vecs.extend(embedded_space.basis().iter().cloned());
            sum_components.push(SumComponent {
                offset,
                lie,
                embedded_space,
            });
            offset += n;
        }
        let space = Subspace::span(&vecs, ambient_alg.dim())?;
        // blocks are disjoint, so the sum is direct
        let expected: usize = sum_components.iter().map(|c| c.lie.space.dim()).sum();
        if space.dim() != expected {
            return Err(Error::Internal("direct sum is not direct".into()));
        }
        Ok(LieAlgebra {
            algebra: ambient_alg,
            space,
            kind: LieKind::DirectSum(sum_components),
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Matrix size of the natural (column) module, for handles over `Full`.
    pub fn natural_dim(&self) -> usize {
        self.algebra.matrix_size()
    }

    pub fn is_bracket_closed(&self) -> Result<bool> {
        let b = bracket_space(&self.algebra, &self.space, &self.space)?;
        Ok(self.space.contains(&b))
    }

    pub fn derived(&self) -> Result<LieAlgebra> {
        let space = bracket_space(&self.algebra, &self.space, &self.space)?;
        Ok(LieAlgebra {
            algebra: self.algebra.clone(),
            space,
            kind: LieKind::Derived,
        })
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.derived()?.space == self.space)
    }

    /// Matrices of `ad x_i` in the coordinates of the canonical basis.
    pub fn ad_matrices(&self) -> Result<Vec<Matrix>> {
        let basis = self.algebra.elements_of(&self.space)?;
        let d = self.dim();
        let mut ads = Vec::with_capacity(d);
        for x in &basis {
            let mut m = Matrix::zeros(d, d);
            for (j, y) in basis.iter().enumerate() {
                let br = self.algebra.commutator(x, y);
                let coords = self
                    .space
                    .coordinates_of(&self.algebra.flatten(&br))
                    .ok_or_else(|| Error::Internal("handle is not bracket-closed".into()))?;
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            ads.push(m);
        }
        Ok(ads)
    }

    /// Gram matrix of `(x, y) ↦ trace(ad x · ad y)` on the canonical basis.
    pub fn killing_form(&self) -> Result<Matrix> {
        let ads = self.ad_matrices()?;
        let d = self.dim();
        let mut k = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = (&ads[i] * &ads[j]).trace();
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        Ok(k)
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(true);
        }
        Ok(self.killing_form()?.rank() == self.dim())
    }

    pub fn contains_element(&self, x: &Element) -> bool {
        self.space.contains_vector(&self.algebra.flatten(x))
    }

    pub fn components(&self) -> Option<&[SumComponent]> {
        match &self.kind {
            LieKind::DirectSum(cs) => Some(cs),
            _ => None,
        }
    }

    /// Project an ambient element onto the `k`-th block of a direct sum.
    pub fn project_component(&self, k: usize, x: &Element) -> Result<Element> {
        let cs = self
            .components()
            .ok_or_else(|| Error::precondition("handle is not a direct sum"))?;
        let c = &cs[k];
        let n = c.lie.algebra.matrix_size();
        let m = x.as_single();
        Ok(Element::single(m.diagonal_block(c.offset, n)))
    }

    /// Root-system data for standard-form classical handles.
    pub fn root_type(&self) -> Option<RootType> {
        let n = self.algebra.matrix_size();
        match self.kind {
            LieKind::SpecialLinear => RootType::new(Family::A, n - 1).ok(),
            LieKind::Orthogonal => {
                if n % 2 == 1 {
                    RootType::new(Family::B, n / 2).ok()
                } else {
                    RootType::new(Family::D, n / 2).ok()
                }
            }
            LieKind::Symplectic => RootType::new(Family::C, n / 2).ok(),
            _ => None,
        }
    }
}

/// Place an `n × n` matrix at the diagonal block starting at `offset` inside
/// an `total × total` zero matrix.
pub fn embed_block(total: usize, offset: usize, m: &Matrix) -> Matrix {
    let n = m.rows();
    assert!(offset + n <= total);
    let mut out = Matrix::zeros(total, total);
    for i in 0..n {
        for j in 0..n {
            out.set(offset + i, offset + j, m.get(i, j).clone());
        }
    }
    out
}

/// Cartan generators and simple-root raising/lowering operators for a
/// standard-form classical handle. The Cartan elements are the coroots, so
/// their eigenvalues on a weight vector are the weight's coordinates in the
/// fundamental-weight basis.
#[derive(Clone, Debug)]
pub struct StandardGenerators {
    pub root_type: RootType,
    pub cartan: Vec<Matrix>,
    pub raising: Vec<Matrix>,
    pub lowering: Vec<Matrix>,
}

/// Standard generators for `sl(n)`, `so(n)` (split form), `sp(n)` (standard
/// form). Only handles built by the corresponding constructors are supported.
pub fn standard_generators(lie: &LieAlgebra) -> Result<StandardGenerators> {
    let n = lie.algebra.matrix_size();
    let u = |i: usize, j: usize| Matrix::unit(n, n, i, j);
    let gens = match lie.kind {
        LieKind::SpecialLinear => {
            let rank = n - 1;
            let root_type = RootType::new(Family::A, rank)?;
            let mut cartan = Vec::new();
            let mut raising = Vec::new();
            let mut lowering = Vec::new();
            for i in 0..rank {
                cartan.push(&u(i, i) - &u(i + 1, i + 1));
                raising.push(u(i, i + 1));
                lowering.push(u(i + 1, i));
            }
            StandardGenerators {
                root_type,
                cartan,
                raising,
                lowering,
            }
        }
        LieKind::Symplectic => {
            let m = n / 2;
            let root_type = RootType::new(Family::C, m)?;
            let mut cartan = Vec::new();
            let mut raising = Vec::new();
            let mut lowering = Vec::new();
            for i in 0..m - 1 {
                cartan.push(&(&u(i, i) - &u(i + 1, i + 1)) - &(&u(m + i, m + i) - &u(m + i + 1, m + i + 1)));
                raising.push(&u(i, i + 1) - &u(m + i + 1, m + i));
                lowering.push(&u(i + 1, i) - &u(m + i, m + i + 1));
            }
            cartan.push(&u(m - 1, m - 1) - &u(2 * m - 1, 2 * m - 1));
            raising.push(u(m - 1, 2 * m - 1));
            lowering.push(u(2 * m - 1, m - 1));
            StandardGenerators {
                root_type,
                cartan,
                raising,
                lowering,
            }
        }
        LieKind::Orthogonal if n % 2 == 1 => {
            let m = n / 2;
            let root_type = RootType::new(Family::B, m)?;
            let mut cartan = Vec::new();
            let mut raising = Vec::new();
            let mut lowering = Vec::new();
            for i in 0..m - 1 {
                cartan.push(&(&u(i, i) - &u(i + 1, i + 1)) - &(&u(m + i, m + i) - &u(m + i + 1, m + i + 1)));
                raising.push(&u(i, i + 1) - &u(m + i + 1, m + i));
                lowering.push(&u(i + 1, i) - &u(m + i, m + i + 1));
            }
            // short root: coroot is doubled
            cartan.push((&u(m - 1, m - 1) - &u(2 * m - 1, 2 * m - 1)).scale(&crate::linalg::scalar_from_int(2)));
            raising.push(&u(m - 1, 2 * m) - &u(2 * m, 2 * m - 1));
            lowering.push(&u(2 * m - 1, 2 * m) - &u(2 * m, m - 1));
            StandardGenerators {
                root_type,
                cartan,
                raising,
                lowering,
            }
        }
        LieKind::Orthogonal => {
            let m = n / 2;
            let root_type = RootType::new(Family::D, m)?;
            let mut cartan = Vec::new();
            let mut raising = Vec::new();
            let mut lowering = Vec::new();
            for i in 0..m - 1 {
                cartan.push(&(&u(i, i) - &u(i + 1, i + 1)) - &(&u(m + i, m + i) - &u(m + i + 1, m + i + 1)));
                raising.push(&u(i, i + 1) - &u(m + i + 1, m + i));
                lowering.push(&u(i + 1, i) - &u(m + i, m + i + 1));
            }
            cartan.push(
                &(&u(m - 2, m - 2) + &u(m - 1, m - 1)) - &(&u(2 * m - 2, 2 * m - 2) + &u(2 * m - 1, 2 * m - 1)),
            );
            raising.push(&u(m - 2, 2 * m - 1) - &u(m - 1, 2 * m - 2));
            lowering.push(&u(2 * m - 1, m - 2) - &u(2 * m - 2, m - 1));
            StandardGenerators {
                root_type,
                cartan,
                raising,
                lowering,
            }
        }
        _ => {
            return Err(Error::precondition(
                "standard generators exist only for sl/so/sp in standard form",
            ))
        }
    };
    // all generators must lie in the handle and satisfy the sl2-style weights
    for g in gens.cartan.iter().chain(&gens.raising).chain(&gens.lowering) {
        if !lie.space.contains_vector(&g.flatten()) {
            return Err(Error::Internal(
                "standard generator escapes the handle".into(),
            ));
        }
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar_from_int;
    use crate::sampling::Sampler;

    #[test]
    fn classical_dimensions() {
        assert_eq!(LieAlgebra::sl(2).unwrap().dim(), 3);
        assert_eq!(LieAlgebra::sl(4).unwrap().dim(), 15);
        assert_eq!(LieAlgebra::so(5, None).unwrap().dim(), 10);
        assert_eq!(LieAlgebra::sp(4, None).unwrap().dim(), 10);
        assert!(LieAlgebra::sp(5, None).is_err());
        assert!(LieAlgebra::sl(1).is_err());
    }

    #[test]
    fn brackets_of_abelian_space_vanish() {
        let alg = Algebra::full(2);
        let diag = Subspace::span(
            &[
                Matrix::unit(2, 2, 0, 0).flatten(),
                Matrix::unit(2, 2, 1, 1).flatten(),
            ],
            4,
        )
        .unwrap();
        assert!(bracket_space(&alg, &diag, &diag).unwrap().is_zero());
        // and the handle has zero derived algebra
        let h = LieAlgebra::custom(alg, diag).unwrap();
        assert_eq!(h.derived().unwrap().dim(), 0);
        assert!(!h.is_perfect().unwrap());
    }

    #[test]
    fn sl2_is_its_own_derived_algebra() {
        let sl2 = LieAlgebra::sl(2).unwrap();
        let der = bracket_space(&sl2.algebra, &sl2.space, &sl2.space).unwrap();
        assert_eq!(der, sl2.space);
        assert!(sl2.is_perfect().unwrap());
    }

    #[test]
    fn bracket_is_bilinear_over_sums() {
        let alg = Algebra::full(3);
        let mut smp = Sampler::new(17);
        let s = alg.span_of(&[smp.element(&alg), smp.element(&alg)]);
        let t1 = alg.span_of(&[smp.element(&alg)]);
        let t2 = alg.span_of(&[smp.element(&alg)]);
        let lhs = bracket_space(&alg, &s, &t1.sum(&t2).unwrap()).unwrap();
        let rhs = bracket_space(&alg, &s, &t1)
            .unwrap()
            .sum(&bracket_space(&alg, &s, &t2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn classical_handles_are_bracket_closed() {
        for l in [
            LieAlgebra::sl(3).unwrap(),
            LieAlgebra::so(5, None).unwrap(),
            LieAlgebra::so(6, None).unwrap(),
            LieAlgebra::sp(6, None).unwrap(),
        ] {
            assert!(l.is_bracket_closed().unwrap());
        }
    }

    #[test]
    fn jacobi_identity_smoke() {
        let alg = Algebra::full(3);
        let mut s = Sampler::new(29);
        for _ in 0..20 {
            let (a, b, c) = (s.element(&alg), s.element(&alg), s.element(&alg));
            let j = alg.add(
                &alg.commutator(&alg.commutator(&a, &b), &c),
                &alg.add(
                    &alg.commutator(&alg.commutator(&b, &c), &a),
                    &alg.commutator(&alg.commutator(&c, &a), &b),
                ),
            );
            assert!(j.is_zero());
        }
    }

    #[test]
    fn su_star_of_doubled_projects_onto_sl() {
        for n in 2..=3 {
            let d = Algebra::doubled(n);
            let su = LieAlgebra::su_star(&d).unwrap();
            assert_eq!(su.dim(), n * n - 1);
            let sl = LieAlgebra::sl(n).unwrap();
            // projection of the first component carries su* onto sl(n)
            let projected = su.space.map(|v| v[..n * n].to_vec(), n * n);
            assert_eq!(projected, sl.space);
            // and it preserves brackets
            let mut s = Sampler::new(41);
            for _ in 0..10 {
                let x = d.unflatten(&s.vector_in(&su.space)).unwrap();
                let y = d.unflatten(&s.vector_in(&su.space)).unwrap();
                let (xb, _) = x.as_pair();
                let (yb, _) = y.as_pair();
                let br = d.commutator(&x, &y);
                let (brb, _) = br.as_pair();
                assert_eq!(*brb, xb.commutator(yb));
            }
        }
    }

    #[test]
    fn compact_orthogonal_form_is_perfect() {
        for n in [5usize, 6] {
            let alg = Algebra::full_transpose(n);
            let u = LieAlgebra::u_star(&alg).unwrap();
            assert_eq!(u.dim(), n * (n - 1) / 2);
            assert!(u.is_perfect().unwrap());
        }
    }

    #[test]
    fn killing_form_detects_semisimplicity() {
        let sl2 = LieAlgebra::sl(2).unwrap();
        let k = sl2.killing_form().unwrap();
        assert_eq!(k.rank(), 3);
        assert!(sl2.is_semisimple().unwrap());

        // oracle: on sl(n) the Killing form is 2n·tr(xy)
        for n in 2..=3 {
            let sl = LieAlgebra::sl(n).unwrap();
            let k = sl.killing_form().unwrap();
            let basis = sl.algebra.elements_of(&sl.space).unwrap();
            for (i, x) in basis.iter().enumerate() {
                for (j, y) in basis.iter().enumerate() {
                    let expected =
                        (x.as_single() * y.as_single()).trace() * scalar_from_int(2 * n as i64);
                    assert_eq!(*k.get(i, j), expected);
                }
            }
        }

        let alg = Algebra::full(2);
        let line = Subspace::span(&[Matrix::identity(2).flatten()], 4).unwrap();
        let abelian = LieAlgebra::custom(alg, line).unwrap();
        assert!(abelian.killing_form().unwrap().is_zero());
        assert!(!abelian.is_semisimple().unwrap());
    }

    #[test]
    fn direct_sum_blocks_and_projections() {
        let sum =
            LieAlgebra::direct_sum(vec![LieAlgebra::sl(2).unwrap(), LieAlgebra::sl(3).unwrap()])
                .unwrap();
        assert_eq!(sum.algebra.matrix_size(), 5);
        assert_eq!(sum.dim(), 3 + 8);
        assert!(sum.is_bracket_closed().unwrap());
        assert!(sum.is_semisimple().unwrap());

        // projections are Lie homomorphisms
        let mut s = Sampler::new(13);
        for _ in 0..10 {
            let x = sum.algebra.unflatten(&s.vector_in(&sum.space)).unwrap();
            let y = sum.algebra.unflatten(&s.vector_in(&sum.space)).unwrap();
            for k in 0..2 {
                let px = sum.project_component(k, &x).unwrap();
                let py = sum.project_component(k, &y).unwrap();
                let pbr = sum
                    .project_component(k, &sum.algebra.commutator(&x, &y))
                    .unwrap();
                let comp = &sum.components().unwrap()[k].lie;
                assert_eq!(pbr, comp.algebra.commutator(&px, &py));
            }
        }
    }

    #[test]
    fn su_star_equals_u_star_for_so_and_sp() {
        for l in [
            LieAlgebra::so(5, None).unwrap(),
            LieAlgebra::so(6, None).unwrap(),
            LieAlgebra::sp(4, None).unwrap(),
            LieAlgebra::sp(6, None).unwrap(),
        ] {
            let su = LieAlgebra::su_star(&l.algebra).unwrap();
            assert_eq!(su.space, l.space);
        }
    }

    #[test]
    fn standard_generators_live_in_their_algebras() {
        for l in [
            LieAlgebra::sl(4).unwrap(),
            LieAlgebra::so(5, None).unwrap(),
            LieAlgebra::so(8, None).unwrap(),
            LieAlgebra::sp(6, None).unwrap(),
        ] {
            let g = standard_generators(&l).unwrap();
            assert_eq!(g.cartan.len(), g.root_type.rank());
            assert_eq!(g.raising.len(), g.root_type.rank());
            // sl2-triple sanity: [h_i, e_i] has eigenvalue 2 on e_i
            for (h, e) in g.cartan.iter().zip(&g.raising) {
                let br = h.commutator(e);
                assert_eq!(br, e.scale(&scalar_from_int(2)));
            }
        }
    }
}
