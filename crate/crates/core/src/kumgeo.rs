//! Kummer surface equations.
//!
//! Surface B lives in P^5 with coordinates `(c0, .., c4, d)`: a point of L = Q[x]/(f)
//! is `u = c0 + c1 θ + .. + c4 θ^4` and `d` is the extra coordinate `u0`. Every
//! Gram matrix in this module uses that order.
//!
//! Surface A is the affine double cover `z^2 = g1(x) g2(y)`.

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{input, Result};
use crate::exact::{format_rational, int, is_irreducible, PolyQ, QuotientRing, Rational};
use crate::localarith::LambdaElement;

/// Number of projective coordinates of surface B.
pub const NVARS: usize = 6;

/// `I`, `J` and `t^3 - 27 I t - 27 J` of a quartic `a x^4 + b x^3 + c x^2 + d x + e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventData {
    pub i: Rational,
    pub j: Rational,
    pub cubic: PolyQ,
}

impl Serialize for ResolventData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ResolventData", 3)?;
        st.serialize_field("I", &format_rational(&self.i))?;
        st.serialize_field("J", &format_rational(&self.j))?;
        st.serialize_field("cubic", &self.cubic)?;
        st.end()
    }
}

fn quartic_coeffs(g: &PolyQ) -> Result<[Rational; 5]> {
    if g.degree() != Some(4) {
        return input(format!("expected a quartic, got {g}"));
    }
    Ok([g.coeff(4), g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0)])
}

pub fn resolvent_cubic(g: &PolyQ) -> Result<ResolventData> {
    let [a, b, c, d, e] = quartic_coeffs(g)?;
    let i = int(12) * &a * &e - int(3) * &b * &d + &c * &c;
    let j = int(72) * &a * &c * &e + int(9) * &b * &c * &d
        - int(27) * &a * &d * &d
        - int(27) * &e * &b * &b
        - int(2) * &c * &c * &c;
    let cubic = PolyQ::new(vec![int(-27) * &j, int(-27) * &i, Rational::zero(), Rational::one()]);
    Ok(ResolventData { i, j, cubic })
}

/// `z^3 - c z^2 + (bd - 4ae) z - (b^2 e + a d^2 - 4ace)`, whose discriminant
/// equals that of the quartic. `t^3 - 27 I t - 27 J` has discriminant
/// `3^12 disc(g)` instead.
pub fn classical_resolvent(g: &PolyQ) -> Result<PolyQ> {
    let [a, b, c, d, e] = quartic_coeffs(g)?;
    Ok(PolyQ::new(vec![
        -(&b * &b * &e + &a * &d * &d - int(4) * &a * &c * &e),
        &b * &d - int(4) * &a * &e,
        -c,
        Rational::one(),
    ]))
}

/// Symmetric 6x6 Gram matrix over Q; the form is `x^T G x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricForm {
    gram: Vec<Vec<Rational>>,
}

impl QuadricForm {
    pub fn new(gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return input("Gram matrix is not square");
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return input("Gram matrix is not symmetric");
                }
            }
        }
        Ok(QuadricForm { gram })
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.gram[i][j]
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.gram.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            let mut r = Rational::zero();
            for (j, g) in row.iter().enumerate() {
                if !g.is_zero() && !x[j].is_zero() {
                    r += g * &x[j];
                }
            }
            acc += &x[i] * r;
        }
        acc
    }

    /// Gradient `2 G x`.
    pub fn gradient(&self, x: &[Rational]) -> Vec<Rational> {
        self.gram
            .iter()
            .map(|row| int(2) * row.iter().zip(x).map(|(g, xi)| g * xi).sum::<Rational>())
            .collect()
    }

    /// `P^T G P` for a `dim x k` matrix `P` given by columns.
    pub fn pullback(&self, cols: &[Vec<Rational>]) -> QuadricForm {
        let gp: Vec<Vec<Rational>> = cols
            .iter()
            .map(|c| {
                self.gram
                    .iter()
                    .map(|row| row.iter().zip(c).map(|(g, x)| g * x).sum())
                    .collect()
            })
            .collect();
        let k = cols.len();
        let mut out = vec![vec![Rational::zero(); k]; k];
        for a in 0..k {
            for b in 0..k {
                out[a][b] = cols[a].iter().zip(&gp[b]).map(|(x, y)| x * y).sum();
            }
        }
        QuadricForm { gram: out }
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn scale(&self, c: &Rational) -> QuadricForm {
        QuadricForm { gram: self.gram.iter().map(|r| r.iter().map(|g| g * c).collect()).collect() }
    }
}

impl Serialize for QuadricForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Vec<String>> =
            self.gram.iter().map(|r| r.iter().map(format_rational).collect()).collect();
        v.serialize(s)
    }
}

/// The three quadrics `Tr(λ θ^e u^2 / f'(θ))`, `e = 0, 1, 2`, with `-N(λ) d^2`
/// added to the third.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerSurfaceB {
    pub f: PolyQ,
    pub lambda: LambdaElement,
    pub quadrics: [QuadricForm; 3],
    pub norm: Rational,
}

impl Serialize for KummerSurfaceB {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("KummerSurfaceB", 5)?;
        st.serialize_field("f", &self.f)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("coordinates", &["c0", "c1", "c2", "c3", "c4", "d"])?;
        st.serialize_field("quadrics", &self.quadrics)?;
        st.serialize_field("norm", &format_rational(&self.norm))?;
        st.end()
    }
}

impl KummerSurfaceB {
    pub fn eval(&self, x: &[Rational]) -> [Rational; 3] {
        [self.quadrics[0].eval(x), self.quadrics[1].eval(x), self.quadrics[2].eval(x)]
    }

    pub fn is_point(&self, x: &[Rational]) -> bool {
        x.iter().any(|c| !c.is_zero()) && self.eval(x).iter().all(Zero::is_zero)
    }

    /// Restrictions of the three forms to `u = r + s θ`, `d = s`, as binary forms in `(r, s)`.
    pub fn line_restrictions(&self) -> [QuadricForm; 3] {
        let mut r = vec![Rational::zero(); NVARS];
        let mut s = vec![Rational::zero(); NVARS];
        r[0] = Rational::one();
        s[1] = Rational::one();
        s[5] = Rational::one();
        let cols = [r, s];
        [
            self.quadrics[0].pullback(&cols),
            self.quadrics[1].pullback(&cols),
            self.quadrics[2].pullback(&cols),
        ]
    }

    pub fn contains_line(&self) -> bool {
        self.line_restrictions().iter().all(QuadricForm::is_zero)
    }
}

pub fn kummer_quadrics(f: &PolyQ, lambda: &LambdaElement) -> Result<KummerSurfaceB> {
    if f.degree() != Some(5) || !f.is_monic() {
        return input(format!("expected a monic quintic, got {f}"));
    }
    if !is_irreducible(f)? {
        return input(format!("{f} is reducible, so Q[x]/(f) is not a field"));
    }
    let ring = QuotientRing::new(f)?;
    let lam = ring.reduce(lambda.poly());
    if lam.is_zero() {
        return input("λ is zero in L");
    }
    let base = ring.mul(&lam, &ring.inverse(&f.derivative())?);
    // t[k] = Tr(λ θ^k / f'(θ)) for k = 0..=10
    let mut t = Vec::with_capacity(11);
    let mut cur = base;
    for _ in 0..=10 {
        t.push(ring.trace(&cur));
        cur = ring.mul(&cur, &PolyQ::x());
    }
    let norm = ring.norm(&lam);
    let make = |e: usize| {
        let mut g = vec![vec![Rational::zero(); NVARS]; NVARS];
        for i in 0..5 {
            for j in 0..5 {
                g[i][j] = t[e + i + j].clone();
            }
        }
        if e == 2 {
            g[5][5] = -norm.clone();
        }
        QuadricForm { gram: g }
    };
    Ok(KummerSurfaceB {
        f: f.clone(),
        lambda: LambdaElement::new(lam)?,
        quadrics: [make(0), make(1), make(2)],
        norm: norm.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KummerSurfaceA {
    pub g1: PolyQ,
    pub g2: PolyQ,
}

impl KummerSurfaceA {
    /// `g1(x) g2(y)`, the value that must be a square.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.g1.eval(x) * self.g2.eval(y)
    }

    pub fn is_point(&self, x: &Rational, y: &Rational, z: &Rational) -> bool {
        z * z == self.eval(x, y)
    }
}

pub fn theorem_a_surface(g1: &PolyQ, g2: &PolyQ) -> Result<KummerSurfaceA> {
    if g1.degree() != Some(4) || g2.degree() != Some(4) {
        return input(format!("both polynomials must be quartics, got {g1} and {g2}"));
    }
    Ok(KummerSurfaceA { g1: g1.clone(), g2: g2.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{discriminant, ratio, resultant, trace_powers};
    use proptest::prelude::*;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    #[test]
    fn resolvent_examples() {
        let r = resolvent_cubic(&poly("x^4 + 1")).unwrap();
        assert_eq!((r.i.clone(), r.j.clone()), (int(12), int(0)));
        assert_eq!(r.cubic, poly("t^3 - 324t"));
        let r = resolvent_cubic(&poly("x^4 - x - 1")).unwrap();
        assert_eq!((r.i.clone(), r.j.clone()), (int(-12), int(-27)));
        assert_eq!(r.cubic, poly("t^3 + 324t + 729"));
        assert!(resolvent_cubic(&poly("x^3 + 1")).is_err());
    }

    #[test]
    fn resolvent_discriminant_scaling() {
        let g = poly("x^4 - x - 1");
        let dg = discriminant(&g).unwrap();
        let r = resolvent_cubic(&g).unwrap();
        assert_eq!(discriminant(&r.cubic).unwrap(), int(3).pow(12) * &dg);
        assert_eq!(int(4) * r.i.pow(3) - r.j.pow(2), int(27) * &dg);
        assert_eq!(discriminant(&classical_resolvent(&g).unwrap()).unwrap(), dg);
    }

    #[test]
    fn lambda_one_gram_entries() {
        let f = poly("x^5 - x - 1");
        let s = kummer_quadrics(&f, &LambdaElement::one()).unwrap();
        let q1 = &s.quadrics[0];
        // Tr(θ^k / f'(θ)) = 0 for k <= 3 and 1 for k = 4.
        for i in 0..5 {
            for j in 0..5 {
                if i + j <= 3 {
                    assert!(q1.entry(i, j).is_zero());
                }
                if i + j == 4 {
                    assert_eq!(q1.entry(i, j), &int(1));
                }
            }
        }
        assert_eq!(s.quadrics[2].entry(5, 5), &int(-1));
        assert!(s.contains_line());
    }

    /// Oracle: Tr(θ^k / f'(θ)) from power sums and the coordinates of 1/f'(θ).
    #[test]
    fn trace_oracle() {
        let f = poly("x^5 + 2x^3 - x^2 + 3x - 7");
        let ring = QuotientRing::new(&f).unwrap();
        let inv = ring.inverse(&f.derivative()).unwrap();
        let s = trace_powers(&f, 16).unwrap();
        let lam = LambdaElement::new(poly("x^2 - 3")).unwrap();
        let surf = kummer_quadrics(&f, &lam).unwrap();
        let w = ring.mul(&inv, lam.poly());
        for e in 0..3 {
            for i in 0..5 {
                for j in 0..5 {
                    // Tr(w θ^k) = sum_m w_m s_{m+k}
                    let k = e + i + j;
                    let expect: Rational = (0..5).map(|m| w.coeff(m) * &s[m + k]).sum();
                    assert_eq!(surf.quadrics[e].entry(i, j), &expect);
                }
            }
        }
        assert_eq!(surf.norm, resultant(&f, lam.poly()).unwrap());
    }

    #[test]
    fn surface_a() {
        let s = theorem_a_surface(&poly("x^4 + 1"), &poly("x^4 + 1")).unwrap();
        assert_eq!(s.eval(&int(0), &int(0)), int(1));
        let s = theorem_a_surface(&poly("(x - 2)*(x^3 + x + 1)"), &poly("x^4 + 3")).unwrap();
        assert!(s.is_point(&int(2), &ratio(7, 3), &int(0)));
        assert!(theorem_a_surface(&poly("x^3"), &poly("x^4")).is_err());
    }

    fn quartic() -> impl Strategy<Value = PolyQ> {
        (prop::collection::vec(-9i64..10, 4), 1i64..4).prop_map(|(mut v, a)| {
            v.push(a);
            PolyQ::from_ints(&v)
        })
    }

    proptest! {
        #[test]
        fn eval_factorizes(x in -20i64..20, y in -20i64..20, d in 1i64..7) {
            let g1 = poly("3x^4 - x + 2");
            let g2 = poly("-x^4 + 5x^2 - 1");
            let s = theorem_a_surface(&g1, &g2).unwrap();
            let (x, y) = (ratio(x, d), ratio(y, d + 1));
            prop_assert_eq!(s.eval(&x, &y), g1.eval(&x) * g2.eval(&y));
        }

        #[test]
        fn classical_resolvent_discriminant(g in quartic()) {
            let dg = discriminant(&g).unwrap();
            prop_assume!(!dg.is_zero());
            prop_assert_eq!(discriminant(&classical_resolvent(&g).unwrap()).unwrap(), dg.clone());
            let r = resolvent_cubic(&g).unwrap();
            prop_assert_eq!(discriminant(&r.cubic).unwrap(), int(3).pow(12) * dg);
        }

        #[test]
        fn gram_matrices_symmetric(v in prop::collection::vec(-5i64..6, 5), a in prop::collection::vec(-3i64..4, 1..5)) {
            let mut v = v;
            v.push(1);
            let f = PolyQ::from_ints(&v);
            prop_assume!(is_irreducible(&f).unwrap());
            let lam = PolyQ::from_ints(&a);
            prop_assume!(!lam.is_zero());
            let s = kummer_quadrics(&f, &LambdaElement::new(lam).unwrap()).unwrap();
            for (e, q) in s.quadrics.iter().enumerate() {
                for i in 0..6 {
                    for j in 0..6 {
                        prop_assert_eq!(q.entry(i, j), q.entry(j, i));
                    }
                    if e < 2 {
                        prop_assert!(q.entry(5, i).is_zero());
                    }
                }
            }
            prop_assert_eq!(s.quadrics[2].entry(5, 5), &-s.norm.clone());
        }
    }
}
