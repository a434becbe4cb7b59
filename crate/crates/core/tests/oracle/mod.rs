//! Brute-force reference computations.
//!
//! Nothing here calls into the library's linear algebra or Lie algebra code:
//! matrices are plain nested vectors, elimination is written out again, and
//! root data is entered by hand for every catalog pair.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type M = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn mat(rows: &[&[i64]]) -> M {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

pub fn unit(n: usize, i: usize, j: usize) -> M {
    let mut m = vec![vec![q(0); n]; n];
    m[i][j] = q(1);
    m
}

pub fn zeros(n: usize) -> M {
    vec![vec![q(0); n]; n]
}

pub fn ident(n: usize) -> M {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect()
}

pub fn add(a: &M, b: &M) -> M {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn sub(a: &M, b: &M) -> M {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

pub fn scal(c: &Q, a: &M) -> M {
    a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
}

pub fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![q(0); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][t] * &b[t][j];
            }
        }
    }
    out
}

pub fn br(a: &M, b: &M) -> M {
    sub(&mul(a, b), &mul(b, a))
}

pub fn transpose(a: &M) -> M {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn flat(a: &M) -> Vec<Q> {
    a.iter().flatten().cloned().collect()
}

pub fn blocks(bs: &[&M]) -> M {
    let n: usize = bs.iter().map(|b| b.len()).sum();
    let mut out = zeros(n);
    let mut o = 0;
    for b in bs {
        for i in 0..b.len() {
            for j in 0..b.len() {
                out[o + i][o + j] = b[i][j].clone();
            }
        }
        o += b.len();
    }
    out
}

/// Gauss–Jordan elimination in place; returns pivot columns.
fn eliminate(rows: &mut [Vec<Q>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(vectors: &[Vec<Q>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut rows = vectors.to_vec();
    eliminate(&mut rows).len()
}

pub fn mrank(ms: &[M]) -> usize {
    rank(&ms.iter().map(flat).collect::<Vec<_>>())
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut rows = a.to_vec();
    let pivots = if rows.is_empty() { Vec::new() } else { eliminate(&mut rows) };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![q(0); ncols];
            v[f] = q(1);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// Basis of `span(A) ∩ span(B)` for lists of matrices.
pub fn intersect(a: &[M], b: &[M]) -> Vec<M> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a[0].len();
    // solve Σ s_i a_i - Σ t_j b_j = 0
    let cols: Vec<Vec<Q>> = a.iter().map(flat).chain(b.iter().map(|m| flat(&scal(&q(-1), m)))).collect();
    let rows: Vec<Vec<Q>> = (0..n * n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let sols = nullspace(&rows, cols.len());
    let vs: Vec<M> = sols
        .iter()
        .map(|s| a.iter().zip(s).fold(zeros(n), |acc, (m, c)| add(&acc, &scal(c, m))))
        .collect();
    independent(&vs)
}

/// A maximal independent sublist.
pub fn independent(ms: &[M]) -> Vec<M> {
    let mut out: Vec<M> = Vec::new();
    for m in ms {
        let mut trial = out.clone();
        trial.push(m.clone());
        if mrank(&trial) == trial.len() {
            out = trial;
        }
    }
    out
}

/// Coordinates of `x` in the independent list `basis`.
pub fn coords(basis: &[M], x: &M) -> Option<Vec<Q>> {
    let n = x.len();
    let k = basis.len();
    let mut rows: Vec<Vec<Q>> = (0..n * n)
        .map(|r| {
            let mut row: Vec<Q> = basis.iter().map(|b| flat(b)[r].clone()).collect();
            row.push(flat(x)[r].clone());
            row
        })
        .collect();
    let pivots = eliminate(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut out = vec![q(0); k];
    for (i, &p) in pivots.iter().enumerate() {
        out[p] = rows[i][k].clone();
    }
    Some(out)
}

pub fn det(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return q(0) };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            for j in c..n {
                let v = &f * &m[c][j];
                m[i][j] -= v;
            }
        }
    }
    d
}

/// Killing form of the matrix algebra spanned by `basis`.
pub fn killing(basis: &[M]) -> Vec<Vec<Q>> {
    let ad = |x: &M| -> Vec<Vec<Q>> {
        let cols: Vec<Vec<Q>> = basis.iter().map(|b| coords(basis, &br(x, b)).expect("closed")).collect();
        (0..basis.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    };
    let ads: Vec<Vec<Vec<Q>>> = basis.iter().map(ad).collect();
    let k = basis.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let p = mul(&ads[i], &ads[j]);
                    (0..k).fold(q(0), |acc, t| acc + &p[t][t])
                })
                .collect()
        })
        .collect()
}

/// Sylvester's criterion: `(-1)^k D_k > 0` for every leading minor.
pub fn negative_definite(form: &[Vec<Q>]) -> bool {
    (1..=form.len()).all(|k| {
        let minor: Vec<Vec<Q>> = form[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = det(&minor);
        if k % 2 == 0 {
            d.is_positive()
        } else {
            d.is_negative()
        }
    })
}

/// Dimension of `{x ∈ g : [x, h] ⊆ h}` from the joint system in `(x, t)`.
pub fn normalizer_dim(g: &[M], h: &[M]) -> usize {
    if h.is_empty() {
        return g.len();
    }
    let n = g[0].len();
    let (dg, dh) = (g.len(), h.len());
    // unknowns: c (dg) and t_{i,j} (dh * dh); equations: Σ c_k [g_k, h_i] - Σ_j t_ij h_j = 0
    let ncols = dg + dh * dh;
    let mut rows = Vec::new();
    for i in 0..dh {
        let brs: Vec<Vec<Q>> = g.iter().map(|gk| flat(&br(gk, &h[i]))).collect();
        for r in 0..n * n {
            let mut row = vec![q(0); ncols];
            for k in 0..dg {
                row[k] = brs[k][r].clone();
            }
            for j in 0..dh {
                row[dg + i * dh + j] = -flat(&h[j])[r].clone();
            }
            rows.push(row);
        }
    }
    nullspace(&rows, ncols).len()
}

/// A hand-entered positive root: simple-root coordinates and root vectors.
pub struct HandRoot {
    pub coords: Vec<i64>,
    pub vectors: Vec<M>,
}

pub struct Case {
    pub name: &'static str,
    pub g: Vec<M>,
    /// An open representative of the pair (conjugated by hand when needed).
    pub h: Vec<M>,
    pub p: Vec<M>,
    pub positive: Vec<HandRoot>,
    pub simple_count: usize,
    /// Basis of `z(l) + l_c` for the expected adapted subset.
    pub d: Vec<M>,
    pub dim_z_np: usize,
    /// Coordinates of the projection of an element of `d` onto `z(l)_np`.
    pub z_np_coords: fn(&M) -> Vec<Q>,
}

pub struct Verdict {
    pub spherical: bool,
    pub passing: Vec<Vec<usize>>,
    pub rank: usize,
    pub normalizer_dim: usize,
}

pub fn dim_sum(a: &[M], b: &[M]) -> usize {
    let all: Vec<M> = a.iter().chain(b).cloned().collect();
    mrank(&all)
}

pub fn evaluate(case: &Case) -> Verdict {
    let dim_g = case.g.len();
    let spherical = dim_sum(&case.p, &case.h) == dim_g;
    let n: Vec<M> = case.positive.iter().flat_map(|r| r.vectors.clone()).collect();
    let dim_n = mrank(&n);
    let dim_n_h = dim_n + mrank(&case.h) - dim_sum(&n, &case.h);
    let mut passing = Vec::new();
    for mask in 0..1usize << case.simple_count {
        let f: Vec<usize> = (0..case.simple_count).filter(|i| mask >> i & 1 == 1).collect();
        let u: Vec<M> = case
            .positive
            .iter()
            .filter(|r| r.coords.iter().enumerate().any(|(i, &c)| c != 0 && !f.contains(&i)))
            .flat_map(|r| r.vectors.clone())
            .collect();
        let dim_u = mrank(&u);
        let u_cap_h = dim_u + mrank(&case.h) - dim_sum(&u, &case.h);
        if u_cap_h == 0 && dim_u + dim_n_h == dim_n {
            passing.push(f);
        }
    }
    let c = intersect(&case.d, &case.h);
    let projected: Vec<Vec<Q>> = c.iter().map(|x| (case.z_np_coords)(x)).collect();
    let rank = case.dim_z_np - rank(&projected);
    Verdict { spherical, passing, rank, normalizer_dim: normalizer_dim(&case.g, &case.h) }
}

pub fn sl2() -> (M, M, M) {
    (mat(&[&[1, 0], &[0, -1]]), mat(&[&[0, 1], &[0, 0]]), mat(&[&[0, 0], &[1, 0]]))
}

pub fn sl_n(n: usize) -> Vec<M> {
    let mut b: Vec<M> = (0..n - 1).map(|i| sub(&unit(n, i, i), &unit(n, i + 1, i + 1))).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b.push(unit(n, i, j));
            }
        }
    }
    b
}

pub fn gl_n(n: usize) -> Vec<M> {
    let mut b: Vec<M> = (0..n).map(|i| unit(n, i, i)).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b.push(unit(n, i, j));
            }
        }
    }
    b
}

fn embed(total: usize, slot: usize, x: &M) -> M {
    let z = zeros(2);
    let parts: Vec<&M> = (0..total).map(|k| if k == slot { x } else { &z }).collect();
    blocks(&parts)
}

fn sl2_power(k: usize) -> Vec<M> {
    let (h, e, f) = sl2();
    (0..k).flat_map(|s| [embed(k, s, &h), embed(k, s, &e), embed(k, s, &f)]).collect()
}

fn complexify(re: &M, im: &M) -> M {
    let mut m = zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            m[2 * i][2 * j] = re[i][j].clone();
            m[2 * i][2 * j + 1] = -im[i][j].clone();
            m[2 * i + 1][2 * j] = im[i][j].clone();
            m[2 * i + 1][2 * j + 1] = re[i][j].clone();
        }
    }
    m
}

fn entry(x: &M, i: usize, j: usize) -> Q {
    x[i][j].clone()
}

pub fn cases() -> Vec<Case> {
    let (h, e, f) = sl2();
    let z2 = zeros(2);
    let mut out = Vec::new();

    let sl2_pos = || vec![HandRoot { coords: vec![1], vectors: vec![sl2().1] }];
    out.push(Case {
        name: "sl2_so2",
        g: vec![h.clone(), e.clone(), f.clone()],
        h: vec![sub(&e, &f)],
        p: vec![h.clone(), e.clone()],
        positive: sl2_pos(),
        simple_count: 1,
        d: vec![h.clone()],
        dim_z_np: 1,
        z_np_coords: |x| vec![entry(x, 0, 0)],
    });
    out.push(Case {
        name: "sl2_opposite_borel",
        g: vec![h.clone(), e.clone(), f.clone()],
        h: vec![h.clone(), f.clone()],
        p: vec![h.clone(), e.clone()],
        positive: sl2_pos(),
        simple_count: 1,
        d: vec![h.clone()],
        dim_z_np: 1,
        z_np_coords: |x| vec![entry(x, 0, 0)],
    });

    // sl2 + sl2, positive system (+, -): n = E ⊕ 0, 0 ⊕ F
    let g2 = sl2_power(2);
    out.push(Case {
        name: "sl2xsl2_diag",
        g: g2.clone(),
        h: vec![blocks(&[&h, &h]), blocks(&[&e, &e]), blocks(&[&f, &f])],
        p: vec![embed(2, 0, &h), embed(2, 1, &h), embed(2, 0, &e), embed(2, 1, &f)],
        positive: vec![
            HandRoot { coords: vec![1, 0], vectors: vec![embed(2, 0, &e)] },
            HandRoot { coords: vec![0, 1], vectors: vec![embed(2, 1, &f)] },
        ],
        simple_count: 2,
        d: vec![embed(2, 0, &h), embed(2, 1, &h)],
        dim_z_np: 2,
        z_np_coords: |x| vec![entry(x, 0, 0), entry(x, 2, 2)],
    });

    // sl2^3, positive system (+, +, -); diagonal conjugated by (1, w, v) with
    // w the Weyl flip and v = exp(E)
    let w = mat(&[&[0, 1], &[-1, 0]]);
    let w_inv = mat(&[&[0, -1], &[1, 0]]);
    let v = mat(&[&[1, 1], &[0, 1]]);
    let v_inv = mat(&[&[1, -1], &[0, 1]]);
    let conj3 = |x: &M| blocks(&[x, &mul(&mul(&w, x), &w_inv), &mul(&mul(&v, x), &v_inv)]);
    out.push(Case {
        name: "sl2_cubed_diag",
        g: sl2_power(3),
        h: vec![conj3(&h), conj3(&e), conj3(&f)],
        p: vec![
            embed(3, 0, &h),
            embed(3, 1, &h),
            embed(3, 2, &h),
            embed(3, 0, &e),
            embed(3, 1, &e),
            embed(3, 2, &f),
        ],
        positive: vec![
            HandRoot { coords: vec![1, 0, 0], vectors: vec![embed(3, 0, &e)] },
            HandRoot { coords: vec![0, 1, 0], vectors: vec![embed(3, 1, &e)] },
            HandRoot { coords: vec![0, 0, 1], vectors: vec![embed(3, 2, &f)] },
        ],
        simple_count: 3,
        d: vec![embed(3, 0, &h), embed(3, 1, &h), embed(3, 2, &h)],
        dim_z_np: 3,
        z_np_coords: |x| vec![entry(x, 0, 0), entry(x, 2, 2), entry(x, 4, 4)],
    });

    let u3 = |i, j| unit(3, i, j);
    let sl3_pos = || {
        vec![
            HandRoot { coords: vec![1, 0], vectors: vec![unit(3, 0, 1)] },
            HandRoot { coords: vec![0, 1], vectors: vec![unit(3, 1, 2)] },
            HandRoot { coords: vec![1, 1], vectors: vec![unit(3, 0, 2)] },
        ]
    };
    let h1 = sub(&u3(0, 0), &u3(1, 1));
    let h2 = sub(&u3(1, 1), &u3(2, 2));
    let b3 = vec![h1.clone(), h2.clone(), u3(0, 1), u3(1, 2), u3(0, 2)];
    out.push(Case {
        name: "sl3_so3",
        g: sl_n(3),
        h: vec![sub(&u3(0, 1), &u3(1, 0)), sub(&u3(0, 2), &u3(2, 0)), sub(&u3(1, 2), &u3(2, 1))],
        p: b3.clone(),
        positive: sl3_pos(),
        simple_count: 2,
        d: vec![h1.clone(), h2.clone()],
        dim_z_np: 2,
        z_np_coords: |x| vec![entry(x, 0, 0), entry(x, 1, 1)],
    });
    let z = add(&add(&u3(0, 0), &u3(1, 1)), &scal(&q(-2), &u3(2, 2)));
    out.push(Case {
        name: "sl3_affine",
        g: sl_n(3),
        h: vec![h1.clone(), u3(0, 1), u3(1, 0), u3(2, 0), u3(2, 1)],
        p: b3,
        positive: sl3_pos(),
        simple_count: 2,
        d: vec![z],
        dim_z_np: 1,
        z_np_coords: |x| vec![entry(x, 2, 2)],
    });

    let u2 = |i, j| unit(2, i, j);
    let gl2_pos = || vec![HandRoot { coords: vec![1], vectors: vec![unit(2, 0, 1)] }];
    out.push(Case {
        name: "gl2_e11",
        g: gl_n(2),
        h: vec![add(&u2(0, 0), &u2(1, 0))],
        p: vec![u2(0, 0), u2(1, 1), u2(0, 1)],
        positive: gl2_pos(),
        simple_count: 1,
        d: vec![u2(0, 0), u2(1, 1)],
        dim_z_np: 2,
        z_np_coords: |x| vec![entry(x, 0, 0), entry(x, 1, 1)],
    });
    out.push(Case {
        name: "gl2_sl2",
        g: gl_n(2),
        h: vec![h.clone(), e.clone(), f.clone()],
        p: vec![u2(0, 0), u2(1, 1), u2(0, 1)],
        positive: gl2_pos(),
        simple_count: 1,
        d: vec![ident(2)],
        dim_z_np: 1,
        z_np_coords: |x| vec![entry(x, 0, 0)],
    });

    let so3: Vec<M> = vec![
        sub(&u3(0, 1), &u3(1, 0)),
        sub(&u3(0, 2), &u3(2, 0)),
        sub(&u3(1, 2), &u3(2, 1)),
    ];
    out.push(Case {
        name: "so3_so2",
        g: so3.clone(),
        h: vec![so3[0].clone()],
        p: so3.clone(),
        positive: Vec::new(),
        simple_count: 0,
        d: so3,
        dim_z_np: 0,
        z_np_coords: |_| Vec::new(),
    });

    let hc = complexify(&h, &z2);
    let ihc = complexify(&z2, &h);
    let ec = complexify(&e, &z2);
    let iec = complexify(&z2, &e);
    let fc = complexify(&f, &z2);
    let ifc = complexify(&z2, &f);
    out.push(Case {
        name: "sl2c_real_borel",
        g: vec![hc.clone(), ec.clone(), fc.clone(), ihc.clone(), iec.clone(), ifc.clone()],
        h: vec![hc.clone(), fc, ifc],
        p: vec![hc.clone(), ihc.clone(), ec.clone(), iec.clone()],
        positive: vec![HandRoot { coords: vec![1], vectors: vec![ec, iec] }],
        simple_count: 1,
        d: vec![hc, ihc],
        dim_z_np: 1,
        z_np_coords: |x| vec![entry(x, 0, 0)],
    });
    out
}

/// Non-spherical pairs: only the base-point defect is computed.
pub fn defect(g: &[M], p: &[M], h: &[M]) -> usize {
    g.len() - dim_sum(p, h)
}

pub fn one() -> Q {
    Q::one()
}

pub fn half() -> Q {
    qf(1, 2)
}
