#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsurf/core/polynomial.hpp"

namespace tsurf {

struct NoSquareRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// t0 t1 s1 s0 zeta c e, the parameters theta tau, and symbolic coefficients
// k0..k11, l0..l16 for the general forms k'_11 and l'_16
Ring elliptic_ring();

// sum_i <prefix>i * a^i * b^(degree - i)
Polynomial general_binary_form(const Ring& ring, const std::string& prefix, int degree, const Polynomial& a,
                               const Polynomial& b);

// zeta^2 = s0^3 + j s0^2 s1^2 + k s0 s1^4 + l s1^6, with j, k, l binary forms
// in (t0, t1) of degrees 6, 12, 18 and rational coefficients
struct WeierstrassModel {
    Polynomial j, k, l;
};

// zeta^2 - (s0^3 + j s0^2 s1^2 + k s0 s1^4 + l s1^6)
Polynomial weierstrass_equation(const WeierstrassModel& m);

// discriminant of the cubic in s0 (sign fixed so that it is 4k^3 + 27l^2
// once j = 0); invariant under s0 -> s0 + h(t0,t1) s1^2
Polynomial discriminant(const WeierstrassModel& m);

struct NormalizedModel {
    WeierstrassModel depressed;  // after s0 -> s0 - j/3 s1^2
    Rational alpha, beta;        // t1^12 coefficient of k, t1^18 coefficient of l
    Rational epsilon;            // alpha = -3 eps^2, beta = 2 eps^3
    Rational tau;
    Polynomial k11, l16;
    Rational theta_squared;       // 12 eps
    std::optional<Rational> theta;  // set when 12 eps is a rational square
    // (zeta - theta t1^3 s0 s1) zeta - s0^3 - t0 k11 s0 s1^4 - t0 (t0 l16 + tau t1^17) s1^6,
    // theta the ring variable unless it is rational
    Polynomial equation;
    std::vector<std::string> steps;  // substitutions applied, each verified
};

Rational rational_sqrt(const Rational& q);  // NoSquareRoot otherwise

// Removes j, moves the singular point of the fibre t0 = 0 onto s0 = 0 and
// absorbs the s0^2 term into the left side.  Requires the fibre over t0 = 0
// to be singular (4 alpha^3 + 27 beta^2 = 0).  The composite substitution is
// checked against the original equation, reducing theta^2 -> 12 eps when
// theta stays formal.
NormalizedModel weierstrass_normalize(const WeierstrassModel& m);

enum class FiberType { I1, II, I2, III };
std::string to_string(FiberType f);
FiberType fiber_type(const Rational& theta, const Rational& tau);

// the normal form with symbolic k'_11, l'_16 and free theta, tau
Polynomial elliptic_normal_form(const Ring& ring);
// the strict transform after both blowups, written out directly
Polynomial double_blowup_form(const Ring& ring);

// sets the listed variables to 1 (default s1, t0, c: the chart of the
// weighted projective space P(1,3,17,25) in e, t1, s0, zeta)
Polynomial wps_collapse(const Polynomial& f, const std::vector<std::string>& to_one = {"s1", "t0", "c"});

}  // namespace tsurf
