use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{combine, inertia, is_zero_vector, rref, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector};

/// A Lie algebra of `n × n` rational matrices with a fixed ordered basis.
///
/// Elements are handled as coordinate vectors in that basis; structure
/// constants are computed once at construction.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: Option<String>,
    matrix_size: usize,
    basis: Vec<Matrix>,
    structure: Vec<Vec<Vector>>,
    flat_span: Subspace,
    to_basis: Vec<Vector>,
}

impl LieAlgebra {
    /// Validates the basis (square shape, independence, bracket closure) and
    /// caches structure constants.
    pub fn new(matrix_size: usize, basis: Vec<Matrix>, name: Option<String>) -> Result<Self> {
        for (index, b) in basis.iter().enumerate() {
            if b.rows() != matrix_size || b.cols() != matrix_size {
                return Err(Error::MatrixShape { index, size: matrix_size });
            }
        }
        let d = basis.len();
        let flat_dim = matrix_size * matrix_size;
        let mut rows: Vec<Vector> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut r = b.as_flat().to_vec();
                r.extend(unit_vector(d, i));
                r
            })
            .collect();
        let (reduced, pivots) = rref(&mut rows, flat_dim);
        if pivots.len() < d {
            return Err(Error::DependentBasis { index: first_dependent(&basis, flat_dim) });
        }
        let flat_rows: Vec<Vector> = reduced.iter().map(|r| r[..flat_dim].to_vec()).collect();
        let to_basis: Vec<Vector> = reduced.iter().map(|r| r[flat_dim..].to_vec()).collect();
        let flat_span = Subspace::span(flat_dim, &flat_rows)?;

        let mut g = LieAlgebra { name, matrix_size, basis, structure: Vec::new(), flat_span, to_basis };
        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            structure[i][i] = zero_vector(d);
            for j in i + 1..d {
                let c = g.basis[i].commutator(&g.basis[j]);
                let coords = g.coordinates(&c).ok_or(Error::NotClosed { i, j })?;
                structure[j][i] = coords.iter().map(|x| -x).collect();
                structure[i][j] = coords;
            }
        }
        g.structure = structure;
        Ok(g)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.matrix_size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i][j]
    }

    /// Coordinates of a matrix in the basis, or `None` if it lies outside the
    /// algebra.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        if m.rows() != self.matrix_size || m.cols() != self.matrix_size {
            return None;
        }
        let flat = m.as_flat();
        self.flat_span.coordinates(flat)?;
        let weights: Vector = self.flat_span.pivots().iter().map(|&p| flat[p].clone()).collect();
        Some(combine(self.dim(), &weights, &self.to_basis))
    }

    /// The matrix with the given coordinates.
    pub fn matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.matrix_size;
        let mut m = Matrix::zeros(n, n);
        for (c, b) in x.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c));
            }
        }
        m
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.dim())
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn span(&self, vectors: &[Vector]) -> Result<Subspace> {
        Subspace::span(self.dim(), vectors)
    }

    /// Subspace spanned by matrices, each of which must lie in the algebra.
    pub fn span_matrices(&self, ms: &[Matrix]) -> Result<Subspace> {
        let coords = ms
            .iter()
            .enumerate()
            .map(|(i, m)| self.coordinates(m).ok_or(Error::Parse { path: format!("[{i}]"), message: "matrix is not in the algebra".into() }))
            .collect::<Result<Vec<_>>>()?;
        self.span(&coords)
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (o, s) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x` on coordinates; column `j` is `[x, b_j]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.bracket(x, &unit_vector(d, j))).collect();
        Matrix::from_columns(d, &cols)
    }

    /// `B(x, y) = tr(ad x ad y)` in the basis.
    pub fn killing_form(&self) -> Matrix {
        let d = self.dim();
        let ads: Vec<Matrix> = (0..d).map(|i| self.ad(&unit_vector(d, i))).collect();
        let mut b = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = ads[i].mul(&ads[j]).trace();
                b[(i, j)] = t.clone();
                b[(j, i)] = t;
            }
        }
        b
    }

    /// Nondegenerate invariant form: the Killing form on `[g, g]` plus the
    /// trace form `tr(XY)` on the center.
    pub fn invariant_form(&self) -> Result<Matrix> {
        let d = self.dim();
        let killing = self.killing_form();
        let center = self.center_of(&self.full());
        if center.is_zero() {
            return Ok(killing);
        }
        let derived = self.derived(&self.full());
        let split = crate::linalg::DirectSum::new(vec![center, derived])
            .map_err(|_| Error::NotReductive("center meets [g, g]".into()))?;
        if split.total().dim() != d {
            return Err(Error::NotReductive("g != z(g) + [g, g]".into()));
        }
        let centers: Vec<Matrix> = (0..d)
            .map(|i| {
                let z = split.project(0, &unit_vector(d, i)).expect("direct sum spans g");
                self.matrix(&z)
            })
            .collect();
        let mut form = killing;
        for i in 0..d {
            for j in 0..d {
                form[(i, j)] += centers[i].mul(&centers[j]).trace();
            }
        }
        Ok(form)
    }

    /// Gram matrix of a bilinear form restricted to a subspace basis.
    pub fn restrict_form(&self, form: &Matrix, s: &Subspace) -> Matrix {
        let k = s.dim();
        let mut out = Matrix::zeros(k, k);
        for (i, x) in s.basis().iter().enumerate() {
            let fx = form.mul_vec(x);
            for (j, y) in s.basis().iter().enumerate() {
                out[(i, j)] = crate::linalg::dot(&fx, y);
            }
        }
        out
    }

    /// Span of all brackets `[a_i, b_j]`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let z = self.bracket(x, y);
                if !is_zero_vector(&z) {
                    vs.push(z);
                }
            }
        }
        Subspace::span_unchecked(self.dim(), vs)
    }

    pub fn derived(&self, s: &Subspace) -> Subspace {
        self.bracket_span(s, s)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.derived(s))
    }

    pub fn is_abelian(&self, s: &Subspace) -> bool {
        self.derived(s).is_zero()
    }

    /// `{x ∈ within : [x, y] ∈ target for every y in ys}`.
    pub fn bracket_condition(&self, within: &Subspace, ys: &[Vector], target: &Subspace) -> Subspace {
        let d = self.dim();
        let ann = target.annihilator();
        if within.is_zero() || ys.is_empty() || ann.is_zero() {
            return within.clone();
        }
        let k = within.dim();
        let brackets: Vec<Vec<Vector>> =
            within.basis().iter().map(|w| ys.iter().map(|y| self.bracket(w, y)).collect()).collect();
        let mut rows = Vec::new();
        for yi in 0..ys.len() {
            for phi in ann.basis() {
                let row: Vector = (0..k).map(|wk| crate::linalg::dot(phi, &brackets[wk][yi])).collect();
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return within.clone();
        }
        let sol = crate::linalg::kernel(&Matrix::from_rows(&rows).expect("rows share a length"));
        let vs: Vec<Vector> = sol.basis().iter().map(|t| within.element(t)).collect();
        Subspace::span_unchecked(d, vs)
    }

    /// Centralizer of `s` inside `within`.
    pub fn centralizer(&self, s: &Subspace, within: &Subspace) -> Subspace {
        self.bracket_condition(within, s.basis(), &Subspace::zero(self.dim()))
    }

    pub fn center_of(&self, l: &Subspace) -> Subspace {
        self.centralizer(l, l)
    }

    /// Normalizer of `s` in `within`.
    pub fn normalizer_within(&self, s: &Subspace, within: &Subspace) -> Subspace {
        self.bracket_condition(within, s.basis(), s)
    }

    /// Smallest `ad(l)`-invariant subspace containing `vs`.
    pub fn ideal_generated(&self, vs: &[Vector], l: &Subspace) -> Subspace {
        let mut s = Subspace::span_unchecked(self.dim(), vs.to_vec());
        loop {
            let next = s.sum(&self.bracket_span(l, &s)).expect("same ambient");
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }

    /// Largest ideal of `g` contained in `h`.
    pub fn largest_ideal_in(&self, h: &Subspace) -> Subspace {
        let basis: Vec<Vector> = (0..self.dim()).map(|i| unit_vector(self.dim(), i)).collect();
        let mut s = h.clone();
        loop {
            // [b_i, x] ∈ s for all i  <=>  [x, b_i] ∈ s
            let next = self.bracket_condition(&s, &basis, &s);
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }

    /// Matrix of `ad x` restricted to an invariant subspace, in its basis.
    pub fn restricted_ad(&self, x: &[Rational], v: &Subspace) -> Option<Matrix> {
        let cols = v.basis().iter().map(|b| v.coordinates(&self.bracket(x, b))).collect::<Option<Vec<_>>>()?;
        Some(Matrix::from_columns(v.dim(), &cols))
    }

    /// Intrinsic Killing form of a subalgebra, in the subalgebra's basis.
    pub fn killing_form_on(&self, s: &Subspace) -> Result<Matrix> {
        let ads = s
            .basis()
            .iter()
            .map(|x| self.restricted_ad(x, s))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotSubalgebra)?;
        let k = s.dim();
        let mut b = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let t = ads[i].mul(&ads[j]).trace();
                b[(i, j)] = t.clone();
                b[(j, i)] = t;
            }
        }
        Ok(b)
    }

    /// Whether `[g, g]` has nondegenerate Killing form and no center, i.e.
    /// `g` itself is semisimple.
    pub fn is_semisimple(&self) -> bool {
        inertia(&self.killing_form()).map(|i| i.is_nondegenerate()).unwrap_or(false)
    }

    /// Jacobi identity on all basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let d = self.dim();
        let e: Vec<Vector> = (0..d).map(|i| unit_vector(d, i)).collect();
        for i in 0..d {
            for j in i + 1..d {
                let ij = self.bracket(&e[i], &e[j]);
                for k in j + 1..d {
                    let a = self.bracket(&ij, &e[k]);
                    let b = self.bracket(&self.bracket(&e[j], &e[k]), &e[i]);
                    let c = self.bracket(&self.bracket(&e[k], &e[i]), &e[j]);
                    let sum: Vector = a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vector(&sum) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn first_dependent(basis: &[Matrix], flat_dim: usize) -> usize {
    let mut acc: Vec<Vector> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        acc.push(b.as_flat().to_vec());
        let mut rows = acc.clone();
        if rref(&mut rows, flat_dim).1.len() < acc.len() {
            return i;
        }
    }
    basis.len()
}
