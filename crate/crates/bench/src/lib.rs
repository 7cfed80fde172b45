//! Shared inputs for the criterion benches.

use kumcert::kumgeo::{kummer_quadrics, theorem_a_surface, KummerSurfaceA, KummerSurfaceB};
use kumcert::{LambdaElement, PolyQ};

pub fn poly(s: &str) -> PolyQ {
    s.parse().expect("bench polynomial")
}

/// The quartic pair with discriminants -283 and 229.
pub fn surface_a() -> KummerSurfaceA {
    theorem_a_surface(&poly("x^4 - x - 1"), &poly("x^4 + x + 1")).expect("surface A")
}

/// x^5 - x - 1 twisted by θ.
pub fn surface_b() -> KummerSurfaceB {
    kummer_quadrics(&poly("x^5 - x - 1"), &LambdaElement::theta()).expect("surface B")
}

/// A dense quintic with large coefficients.
pub fn wide_quintic() -> PolyQ {
    poly("x^5 - 123456789x^3 + 987654321x^2 - 31415926535x + 27182818284")
}
