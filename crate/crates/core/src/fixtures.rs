//! Frozen high-precision constants.
//!
//! Every value here was computed independently with mpmath at 60+ decimal
//! digits and pasted in verbatim; the test suites compare the crate's own
//! arbitrary-precision arithmetic against these strings. `PI_TRUNC_50` is the
//! default generator value: the decimal truncation (not rounding) of pi to 50
//! significant digits, which is an exact rational.

/// pi truncated to 50 significant digits (49 decimals). Exact rational input.
pub const PI_TRUNC_50: &str = "3.1415926535897932384626433832795028841971693993751";

/// exp(1/pi) at 60 digits, with the exact value of pi.
pub const EXP_INV_PI: &str =
    "1.37480222743935863178282187920965725698630775946736666544176";

/// exp(1/theta) at 60 digits, where theta is `PI_TRUNC_50` (exact rational).
pub const EXP_INV_PI_TRUNC: &str =
    "1.37480222743935863178282187920965725698630775946736747628371";

/// pi^2 at 60 digits.
pub const PI_SQUARED: &str =
    "9.86960440108935861883449099987615113531369940724079062641335";

/// theta^2 at 60 digits (theta = `PI_TRUNC_50`).
pub const PI_TRUNC_SQUARED: &str =
    "9.8696044010893586188344909998761511353136994072407540521491";

/// pi^2 * exp(1/pi) at 60 digits.
pub const PI_SQUARED_EXP_INV_PI: &str =
    "13.568754114562947341075640146797037633478505998067874862026";

/// theta^2 * exp(1/theta) at 60 digits.
pub const PI_TRUNC_SQUARED_EXP_INV: &str =
    "13.5687541145629473410756401467970376334785059980678325823354";

/// pi * exp(1/pi) at 60 digits.
pub const PI_EXP_INV_PI: &str =
    "4.31906857786237313860816043725789440664087565082906482964568";

/// theta * exp(1/theta) at 60 digits.
pub const PI_TRUNC_EXP_INV: &str =
    "4.31906857786237313860816043725789440664087565082905937429148";

/// 1/pi at 60 digits.
pub const INV_PI: &str =
    "0.318309886183790671537767526745028724068919291480912897495335";

/// pi^2 * (exp(1/pi) - 1) at 60 digits: the analytic jump of
/// `t^2 * exp(d(t)/t)` at the default assignment with `d(t1) = 1`.
pub const PI_SQUARED_JUMP: &str =
    "3.6991497134735887222411491469208864981648065908270842356127";
