//! Inner automorphisms of `g` as coordinate matrices: exponentials of
//! nilpotent elements, rational torus elements, Weyl representatives and
//! deterministic random products of these.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::liealg::{CartanData, LieAlgebra};
use crate::linalg::{frac, is_zero_vector, rat, DirectSum, Matrix, Rational, Subspace, Vector};

/// `e^{ad x}` as the finite series `Σ (ad x)^k / k!`.
pub fn exp_ad(g: &LieAlgebra, x: &[Rational]) -> Result<Matrix> {
    exp_nilpotent(&g.ad(x))
}

/// Exponential of a nilpotent matrix.
pub fn exp_nilpotent(a: &Matrix) -> Result<Matrix> {
    let d = a.rows();
    let mut out = Matrix::identity(d);
    let mut term = Matrix::identity(d);
    for k in 1..=d + 1 {
        term = term.mul(a).scale(&frac(1, k as i64));
        if term.is_zero() {
            return Ok(out);
        }
        out = out.add(&term);
    }
    Err(Error::NotNilpotent)
}

/// Action of the torus element `exp(t·h)` with `e^t = base`: multiplies
/// `g_α` by `base^{α(h)}`. Every root must take an integer value on `h`.
pub fn torus_element(cd: &CartanData, h: &[Rational], base: &Rational) -> Result<Matrix> {
    let d = cd.zero_space.ambient_dim();
    let mut parts = vec![cd.zero_space.clone()];
    let mut scales = vec![Rational::one()];
    for root in &cd.roots {
        let value = cd.evaluate(&root.values, h).ok_or(Error::Hypothesis("torus parameter is not in a".into()))?;
        if !value.is_integer() {
            return Err(Error::Hypothesis("root takes a non-integer value on the torus parameter".into()));
        }
        parts.push(root.space.clone());
        scales.push(rational_pow(base, value.to_integer()));
    }
    let split = DirectSum::new(parts)?;
    let cols: Vec<Vector> = (0..d)
        .map(|j| {
            let comps = split.components(&crate::linalg::unit_vector(d, j)).expect("root decomposition spans g");
            let scaled: Vec<Vector> = comps.iter().zip(&scales).map(|(c, s)| crate::linalg::scale_vector(s, c)).collect();
            scaled.iter().fold(crate::linalg::zero_vector(d), |acc, v| crate::linalg::add_vectors(&acc, v))
        })
        .collect();
    Ok(Matrix::from_columns(d, &cols))
}

fn rational_pow(base: &Rational, exp: BigInt) -> Rational {
    let e: i64 = i64::try_from(&exp).expect("small exponent");
    let mut out = Rational::one();
    let b = if e < 0 { base.recip() } else { base.clone() };
    for _ in 0..e.unsigned_abs() {
        out *= &b;
    }
    out
}

/// `w_α = e^{ad X} e^{-ad Y} e^{ad X}` for an sl2-triple through the first
/// basis vector `X` of the simple root space `g_α`. It normalizes `a` and
/// acts there as the reflection in `α`.
pub fn simple_reflection(g: &LieAlgebra, cd: &CartanData, simple_index: usize) -> Result<Matrix> {
    let root_idx = *cd.simple.get(simple_index).ok_or(Error::NotSimpleRoot(simple_index))?;
    let root = &cd.roots[root_idx];
    let x = root.space.basis()[0].clone();
    let y0: Vector = cd.theta.mul_vec(&x).iter().map(|v| -v).collect();
    let hx = g.bracket(&x, &y0);
    let value = cd.evaluate(&root.values, &hx).ok_or_else(|| Error::Internal("[X, -θX] is not in a".into()))?;
    if value.is_zero() {
        return Err(Error::Internal("degenerate sl2-triple".into()));
    }
    let c = rat(2) / value;
    let y: Vector = y0.iter().map(|v| v * &c).collect();
    let ex = exp_ad(g, &x)?;
    let ey = exp_ad(g, &y.iter().map(|v| -v).collect::<Vec<_>>())?;
    Ok(ex.mul(&ey).mul(&ex))
}

/// Restriction of an automorphism normalizing `a` to `a`, as images of the
/// echelon basis (used as a Weyl group key).
fn action_on_a(cd: &CartanData, w: &Matrix) -> Vec<Vector> {
    cd.a.basis().iter().map(|h| w.mul_vec(h)).collect()
}

/// One representative per Weyl group element, identity first, found by
/// breadth-first search over simple reflections.
pub fn weyl_representatives(g: &LieAlgebra, cd: &CartanData) -> Result<Vec<Matrix>> {
    let gens = (0..cd.simple.len()).map(|i| simple_reflection(g, cd, i)).collect::<Result<Vec<_>>>()?;
    let id = Matrix::identity(g.dim());
    let mut seen = vec![action_on_a(cd, &id)];
    let mut reps = vec![id];
    let mut frontier = 0;
    while frontier < reps.len() {
        let current = reps[frontier].clone();
        frontier += 1;
        for s in &gens {
            let w = s.mul(&current);
            let key = action_on_a(cd, &w);
            if !seen.contains(&key) {
                seen.push(key);
                reps.push(w);
            }
        }
    }
    Ok(reps)
}

/// Small random rational `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 2`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// Random element of a subspace with small rational coefficients.
pub fn random_element<R: Rng>(rng: &mut R, s: &Subspace) -> Vector {
    let coeffs: Vector = (0..s.dim()).map(|_| random_rational(rng)).collect();
    s.element(&coeffs)
}

/// Random nonzero element of a subspace (the zero vector when `s = 0`).
pub fn random_nonzero_element<R: Rng>(rng: &mut R, s: &Subspace) -> Vector {
    if s.is_zero() {
        return crate::linalg::zero_vector(s.ambient_dim());
    }
    loop {
        let v = random_element(rng, s);
        if !is_zero_vector(&v) {
            return v;
        }
    }
}

/// Random element of the identity component of `P`: a torus element with a
/// positive rational base followed by exponentials of random elements of `n`.
pub fn random_p_element<R: Rng>(rng: &mut R, g: &LieAlgebra, cd: &CartanData) -> Result<Matrix> {
    let mut m = match integral_a_element(cd) {
        Some(h) => {
            let base = frac(rng.gen_range(1..=3), rng.gen_range(1..=3));
            torus_element(cd, &h, &base)?
        }
        None => Matrix::identity(g.dim()),
    };
    for root in cd.positive_roots() {
        if rng.gen_bool(0.5) {
            m = exp_ad(g, &random_element(rng, &root.space))?.mul(&m);
        }
    }
    if !cd.n.is_zero() {
        m = exp_ad(g, &random_element(rng, &cd.n))?.mul(&m);
    }
    Ok(m)
}

/// Random product of a Weyl representative with one to three exponentials
/// of random root vectors.
pub fn random_group_element<R: Rng>(rng: &mut R, g: &LieAlgebra, cd: &CartanData, weyl: &[Matrix]) -> Result<Matrix> {
    let mut m = weyl[rng.gen_range(0..weyl.len())].clone();
    if cd.roots.is_empty() {
        return Ok(m);
    }
    for _ in 0..rng.gen_range(1..=3) {
        let root = &cd.roots[rng.gen_range(0..cd.roots.len())];
        m = exp_ad(g, &random_element(rng, &root.space))?.mul(&m);
    }
    Ok(m)
}

/// A nonzero element of `a` on which every root takes an integer value.
fn integral_a_element(cd: &CartanData) -> Option<Vector> {
    let h = cd.a.basis().first()?.clone();
    let mut lcm = BigInt::one();
    for root in &cd.roots {
        let v = cd.evaluate(&root.values, &h)?;
        lcm = num_integer::lcm(lcm, v.denom().clone());
    }
    let scale = Rational::from_integer(lcm);
    Some(h.iter().map(|x| x * &scale).collect())
}

/// Whether a coordinate matrix is a Lie algebra automorphism of `g`.
pub fn is_automorphism(g: &LieAlgebra, m: &Matrix) -> bool {
    let d = g.dim();
    let images: Vec<Vector> = (0..d).map(|i| m.column(i)).collect();
    (0..d).all(|i| (i + 1..d).all(|j| m.mul_vec(g.structure_constants(i, j)) == g.bracket(&images[i], &images[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exp_of_e_in_sl2() {
        let g = models::sl(2);
        let m = exp_ad(&g, &[rat(0), rat(1), rat(0)]).unwrap();
        // H -> H - 2E
        assert_eq!(m.mul_vec(&[rat(1), rat(0), rat(0)]), vec![rat(1), rat(-2), rat(0)]);
        assert!(is_automorphism(&g, &m));
        assert_eq!(exp_ad(&g, &[rat(1), rat(0), rat(0)]), Err(Error::NotNilpotent));
    }

    #[test]
    fn weyl_group_orders() {
        let g = models::sl(3);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        let w = weyl_representatives(&g, &cd).unwrap();
        assert_eq!(w.len(), 6);
        for m in &w {
            assert!(is_automorphism(&g, m));
            assert_eq!(cd.a.image(m), cd.a);
        }
        let g = models::direct_sum(&[&models::sl(2), &models::sl(2), &models::sl(2)]);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        assert_eq!(weyl_representatives(&g, &cd).unwrap().len(), 8);
    }

    #[test]
    fn weyl_flip_swaps_n_and_opposite() {
        let g = models::sl(2);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        let w = simple_reflection(&g, &cd, 0).unwrap();
        assert_eq!(cd.n.image(&w), Subspace::span(3, &[vec![rat(0), rat(0), rat(1)]]).unwrap());
    }

    #[test]
    fn torus_scales_root_spaces() {
        let g = models::sl(2);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        let t = torus_element(&cd, &[rat(1), rat(0), rat(0)], &rat(3)).unwrap();
        assert_eq!(t.mul_vec(&[rat(0), rat(1), rat(0)]), vec![rat(0), rat(9), rat(0)]);
        assert_eq!(t.mul_vec(&[rat(0), rat(0), rat(1)]), vec![rat(0), rat(0), frac(1, 9)]);
        assert!(is_automorphism(&g, &t));
    }

    #[test]
    fn random_p_elements_preserve_p() {
        let g = models::sl(3);
        let cd = CartanData::new(&g, None, None, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let m = random_p_element(&mut rng, &g, &cd).unwrap();
            assert!(is_automorphism(&g, &m));
            assert_eq!(cd.p.image(&m), cd.p);
        }
    }
}
