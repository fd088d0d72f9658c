#include "kummerlog/elliptic.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"

#include <algorithm>
#include <numeric>

namespace kummerlog {

namespace {

Elem k(NumberRing const& r, long v) { return scalar(r, v); }

} // namespace

std::array<Elem, 3> CurvePoint::projective(NumberRing const& ring) const
{
    if (infinity)
        return {k(ring, 0), k(ring, 1), k(ring, 0)};
    return {x, y, k(ring, 1)};
}

std::string CurvePoint::to_string() const
{
    if (infinity)
        return "O";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

Iso Iso::identity(NumberRing const& ring) { return {k(ring, 1), k(ring, 0), k(ring, 0), k(ring, 0)}; }

Iso Iso::then(Iso const& o) const
{
    Elem u2 = u * u;
    return {u * o.u, r + u2 * o.r, s + u * o.s, t + u2 * u * o.t + s * u2 * o.r};
}

EllipticCurve::EllipticCurve(NumberRing ring, std::array<Elem, 5> a) : ring_(std::move(ring)), a_(std::move(a))
{
    for (auto& c : a_)
        if (c.ring() != ring_)
            c = Elem(ring_, c.a(), c.b());
    auto const& [a1, a2, a3, a4, a6] = a_;
    b2_ = a1 * a1 + k(ring_, 4) * a2;
    b4_ = a1 * a3 + k(ring_, 2) * a4;
    b6_ = a3 * a3 + k(ring_, 4) * a6;
    b8_ = a1 * a1 * a6 + k(ring_, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4_ = b2_ * b2_ - k(ring_, 24) * b4_;
    c6_ = -b2_ * b2_ * b2_ + k(ring_, 36) * b2_ * b4_ - k(ring_, 216) * b6_;
    disc_ = -b2_ * b2_ * b8_ - k(ring_, 8) * b4_ * b4_ * b4_ - k(ring_, 27) * b6_ * b6_ +
            k(ring_, 9) * b2_ * b4_ * b6_;
    if (disc_.is_zero())
        throw invalid_input("singular_curve", "the Weierstrass equation " + to_string() + " is singular");
}

bool EllipticCurve::contains(CurvePoint const& P) const
{
    if (P.infinity)
        return true;
    auto const& [a1, a2, a3, a4, a6] = a_;
    Elem lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
    Elem rhs = P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
    return lhs == rhs;
}

CurvePoint EllipticCurve::neg(CurvePoint const& P) const
{
    if (P.infinity)
        return P;
    return CurvePoint::affine(P.x, -P.y - a1() * P.x - a3());
}

CurvePoint EllipticCurve::add(CurvePoint const& P, CurvePoint const& Q) const
{
    if (P.infinity)
        return Q;
    if (Q.infinity)
        return P;
    auto const& [a1, a2, a3, a4, a6] = a_;
    Elem lambda, nu;
    if (P.x == Q.x) {
        if (P.y + Q.y + a1 * Q.x + a3 == k(ring_, 0))
            return CurvePoint::zero();
        Elem den = k(ring_, 2) * P.y + a1 * P.x + a3;
        lambda = (k(ring_, 3) * P.x * P.x + k(ring_, 2) * a2 * P.x + a4 - a1 * P.y) / den;
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    nu = P.y - lambda * P.x;
    Elem x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    Elem y3 = -(lambda + a1) * x3 - nu - a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint EllipticCurve::mul(long n, CurvePoint const& P) const
{
    CurvePoint base = n < 0 ? neg(P) : P;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::zero();
    while (e) {
        if (e & 1)
            acc = add(acc, base);
        base = add(base, base);
        e >>= 1;
    }
    return acc;
}

long EllipticCurve::order(CurvePoint const& P, long bound) const
{
    CurvePoint Q = P;
    for (long n = 1; n <= bound; ++n) {
        if (Q.infinity)
            return n;
        Q = add(Q, P);
    }
    return 0;
}

EllipticCurve EllipticCurve::transform(Iso const& i) const
{
    auto const& [a1, a2, a3, a4, a6] = a_;
    auto const& [u, r, s, t] = i;
    Elem ui = u.inverse();
    Elem two = k(ring_, 2), three = k(ring_, 3);
    Elem n1 = a1 + two * s;
    Elem n2 = a2 - s * a1 + three * r - s * s;
    Elem n3 = a3 + r * a1 + two * t;
    Elem n4 = a4 - s * a3 + two * r * a2 - (t + r * s) * a1 + three * r * r - two * s * t;
    Elem n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    return EllipticCurve(ring_, {n1 * ui, n2 * ui.pow(2), n3 * ui.pow(3), n4 * ui.pow(4), n6 * ui.pow(6)});
}

CurvePoint EllipticCurve::transform(Iso const& i, CurvePoint const& P) const
{
    if (P.infinity)
        return P;
    Elem ui = i.u.inverse();
    Elem xr = P.x - i.r;
    return CurvePoint::affine(xr * ui.pow(2), (P.y - i.s * xr - i.t) * ui.pow(3));
}

std::string EllipticCurve::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < 5; ++i)
        s += (i ? "," : "") + a_[i].to_string();
    return s + "]";
}

std::vector<CurvePoint> small_points(EllipticCurve const& E, long height)
{
    NumberRing const& R = E.ring();
    for (auto const& c : E.coefficients())
        if (!c.is_rational())
            throw unsupported("point_search", "point search needs rational coefficients");
    // sqrt(d) in the basis 1, w
    std::optional<Elem> root_d;
    if (!R.is_rational())
        root_d = R.t() == 1 ? Elem(R, -1, 2) : Elem(R, 0, 1);
    auto qsqrt = [](mpq_class const& q) -> std::optional<mpq_class> {
        if (q < 0 || !is_square(q.get_num()) || !is_square(q.get_den()))
            return std::nullopt;
        return mpq_class(isqrt(q.get_num()), isqrt(q.get_den()));
    };
    std::vector<CurvePoint> out;
    for (long d = 1; d <= height; ++d)
        for (long a = -height * d * d; a <= height * d * d; ++a) {
            if (std::gcd(a, d) != 1)
                continue;
            mpq_class x(a, d * d);
            x.canonicalize();
            Elem X = scalar(R, x);
            Elem h = E.a1() * X + E.a3();
            Elem f = X * X * X + E.a2() * X * X + E.a4() * X + E.a6();
            mpq_class disc = (h * h + scalar(R, 4) * f).a();
            std::vector<Elem> roots;
            if (auto s = qsqrt(disc))
                roots.push_back(scalar(R, *s));
            else if (root_d) {
                if (auto s2 = qsqrt(disc / mpq_class(R.d())))
                    roots.push_back(scalar(R, *s2) * *root_d);
            }
            if (roots.empty())
                continue;
            Elem s = roots.front();
            Elem half = scalar(R, mpq_class(1, 2));
            std::vector<Elem> ys{(-h + s) * half, (-h - s) * half};
            if (ys[0] == ys[1])
                ys.pop_back();
            for (auto const& y : ys) {
                auto P = CurvePoint::affine(X, y);
                if (E.contains(P))
                    out.push_back(P);
            }
        }
    return out;
}

std::vector<PrimeIdeal> discriminant_primes(EllipticCurve const& E)
{
    std::vector<PrimeIdeal> out;
    for (auto const& [P, e] : factor_element(E.ring(), E.discriminant()))
        if (e != 0)
            out.push_back(P);
    return out;
}

} // namespace kummerlog
