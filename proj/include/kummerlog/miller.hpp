#ifndef KUMMERLOG_MILLER_HPP
#define KUMMERLOG_MILLER_HPP

#include "kummerlog/elliptic.hpp"

namespace kummerlog {

/* Polynomial in x over K, lowest coefficient first. */
struct KPoly {
    std::vector<Elem> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Elem eval(Elem const& x, NumberRing const& ring) const;
};

/* A(x) + B(x)*y, divided by a scalar; stored as the product of Miller-loop
 * line factors l_i / v_i as well as in reduced form. */
class RationalFunctionOnCurve {
    EllipticCurve E_;
    KPoly A_, B_;
    Elem scale_;
    struct Factor {
        KPoly line_A, line_B; // line: line_A(x) + line_B(x) y
        KPoly vertical;       // x - c, or the constant 1
    };
    std::vector<Factor> factors_;

    friend RationalFunctionOnCurve miller_function(EllipticCurve const&, CurvePoint const&, long);

    explicit RationalFunctionOnCurve(EllipticCurve E) : E_(std::move(E)) {}

  public:
    EllipticCurve const& curve() const { return E_; }
    KPoly const& A() const { return A_; }
    KPoly const& B() const { return B_; }

    /* value at an affine point, from the reduced form */
    Elem eval(CurvePoint const& P) const;
    /* value as the product of the line factors; nullopt when a factor
     * vanishes at P */
    std::optional<Elem> eval_straight_line(CurvePoint const& P) const;
    RationalFunctionOnCurve scaled(Elem const& c) const;
    std::string to_string() const;
};

/* f with div(f) = n(y) - n(O), for y of exact order n. */
RationalFunctionOnCurve miller_function(EllipticCurve const& E, CurvePoint const& y, long n);

/* g(P1)/g(P2) for g = f_{n,y}; the order n is computed (<= 24). */
Elem miller_function_eval(EllipticCurve const& E, CurvePoint const& y, CurvePoint const& P1, CurvePoint const& P2);

} // namespace kummerlog

#endif
