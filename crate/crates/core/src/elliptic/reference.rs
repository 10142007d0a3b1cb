//! Reference forms of the polynomials reproduced by the pipelines, as
//! transcribed. `d` and `Delta` are independent symbols here; see
//! [`super::curve::expand_discriminants`].

/// `y^2 = x^3 + a x + b`, degree-8 polynomial attached to a point `(z, w)`.
pub const OCTIC: &str = "x^8 - 8*w*x^6 + 6*(2*a*z + 3*b)*x^4 - (4*a^3 + 27*b^2)";
/// Half of the primitive 4-division polynomial.
pub const SEXTIC: &str = "Y^6 + 5*a*Y^4 + 20*b*Y^3 - 5*a^2*Y^2 - 4*a*b*Y - a^3 - 8*b^2";

pub const A3: &str = "3*x^4 + 6*a*x^2 + 12*b*x - a^2";
pub const A4: &str = "4*y*(x^6 + 5*a*x^4 + 20*b*x^3 - 5*a^2*x^2 - 4*a*b*x - 8*b^2 - a^3)";
pub const GAMMA4: &str = "2*(X^6 + 5*a*X^4 + 20*b*X^3 - 5*a^2*X^2 - 4*a*b*X - 8*b^2 - a^3)";
pub const T4: &str = "X^12 + 54*b*X^10 + (132*a^3 + 891*b^2)*X^8 + (432*a^3*b + 2916*b^3)*X^6 \
    + (-528*a^6 - 7128*a^3*b^2 - 24057*b^4)*X^4 + (864*a^6*b + 11664*a^3*b^3 + 39366*b^5)*X^2 \
    - 64*a^9 - 1296*a^6*b^2 - 8748*a^3*b^4 - 19683*b^6";

/// Quartic resolvent of the sextic before and after `Y -> Y + 2a`.
pub const RESOLVENT_RGP: &str = "Y^4 - 8*a*Y^3 + 24*a^2*Y^2 + (224*a^3 + 1728*b^2)*Y + 272*a^4 + 1728*a*b^2";
pub const RESOLVENT_B: &str = "Y^4 - 4*Delta*Y - 12*a*Delta";

pub const H1: &str = "x^4 - 512*d*x^2 + 2^15*d*w^2*x + 2^16*d*(d + w^2*(12*a*z - 36*b)) \
    + 2^18*d*(27*b*z^3 - 9*a^2*z^2 - a^3)";
pub const H2: &str = "x^4 - 512*d*x^2 + 2^15*d*w^2*x + 2^16*d*(d + w^2*(12*a*z - 36*b))";
pub const H3: &str = "x^4 - 8*w*x^3 + 6*(2*a*z + 3*b)*x^2 - d";
/// Difference `h1 - h2`.
pub const H_GAP: &str = "2^18*d*(27*b*z^3 - 9*a^2*z^2 - a^3)";
