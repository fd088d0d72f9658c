#ifndef KUMMERLOG_ELLIPTIC_HPP
#define KUMMERLOG_ELLIPTIC_HPP

#include "kummerlog/numring.hpp"

#include <array>

namespace kummerlog {

/* Point of E(K): affine (x, y) or the point at infinity. */
struct CurvePoint {
    bool infinity = true;
    Elem x, y;

    static CurvePoint zero() { return {}; }
    static CurvePoint affine(Elem x, Elem y) { return {false, std::move(x), std::move(y)}; }
    bool is_zero() const { return infinity; }
    /* projective (X:Y:Z) */
    std::array<Elem, 3> projective(NumberRing const& ring) const;
    std::string to_string() const; // "O" or "(x, y)"
    bool operator==(CurvePoint const& o) const
    {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
    bool operator!=(CurvePoint const& o) const { return !(*this == o); }
};

/* x = u^2 x' + r, y = u^3 y' + s u^2 x' + t */
struct Iso {
    Elem u, r, s, t;
    static Iso identity(NumberRing const& ring);
    /* first this, then o */
    Iso then(Iso const& o) const;
};

class EllipticCurve {
    NumberRing ring_;
    std::array<Elem, 5> a_; // a1 a2 a3 a4 a6
    Elem b2_, b4_, b6_, b8_, c4_, c6_, disc_;

  public:
    EllipticCurve(NumberRing ring, std::array<Elem, 5> a); // throws when singular

    NumberRing const& ring() const { return ring_; }
    Elem const& a1() const { return a_[0]; }
    Elem const& a2() const { return a_[1]; }
    Elem const& a3() const { return a_[2]; }
    Elem const& a4() const { return a_[3]; }
    Elem const& a6() const { return a_[4]; }
    std::array<Elem, 5> const& coefficients() const { return a_; }
    Elem const& b2() const { return b2_; }
    Elem const& b4() const { return b4_; }
    Elem const& b6() const { return b6_; }
    Elem const& b8() const { return b8_; }
    Elem const& c4() const { return c4_; }
    Elem const& c6() const { return c6_; }
    Elem const& discriminant() const { return disc_; }

    bool contains(CurvePoint const& P) const;
    CurvePoint neg(CurvePoint const& P) const;
    CurvePoint add(CurvePoint const& P, CurvePoint const& Q) const;
    CurvePoint mul(long k, CurvePoint const& P) const;
    /* exact order if at most bound, else 0 */
    long order(CurvePoint const& P, long bound = 24) const;

    EllipticCurve transform(Iso const& i) const;
    CurvePoint transform(Iso const& i, CurvePoint const& P) const;

    /* "[a1,a2,a3,a4,a6]" */
    std::string to_string() const;
    bool operator==(EllipticCurve const& o) const { return ring_ == o.ring_ && a_ == o.a_; }
};

/* Points with x = a/d^2, |a| <= height * d^2, d <= height, and y in K,
 * for curves over Q; sorted by (d, |a|, a, y). */
std::vector<CurvePoint> small_points(EllipticCurve const& E, long height);

/* Primes of bad reduction of the given model (support of the discriminant). */
std::vector<PrimeIdeal> discriminant_primes(EllipticCurve const& E);

} // namespace kummerlog

#endif
