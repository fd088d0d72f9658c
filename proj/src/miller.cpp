#include "kummerlog/miller.hpp"

#include "kummerlog/error.hpp"

namespace kummerlog {

namespace {

KPoly trim(KPoly p)
{
    while (!p.c.empty() && p.c.back().is_zero())
        p.c.pop_back();
    return p;
}

KPoly add(KPoly const& a, KPoly const& b, NumberRing const& R)
{
    KPoly r;
    r.c.assign(std::max(a.c.size(), b.c.size()), scalar(R, 0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[i] += b.c[i];
    return trim(r);
}

KPoly neg(KPoly p)
{
    for (auto& c : p.c)
        c = -c;
    return p;
}

KPoly mul(KPoly const& a, KPoly const& b, NumberRing const& R)
{
    if (a.c.empty() || b.c.empty())
        return {};
    KPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, scalar(R, 0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    return trim(r);
}

// exact division, throws when the remainder is nonzero
KPoly divide_exact(KPoly a, KPoly const& b, NumberRing const& R)
{
    a = trim(a);
    if (b.c.empty())
        throw consistency_failure("miller_divisor", "division by the zero polynomial");
    if (a.c.size() < b.c.size()) {
        if (!a.c.empty())
            throw consistency_failure("miller_divisor", "Miller function is not regular away from O");
        return {};
    }
    KPoly q;
    q.c.assign(a.c.size() - b.c.size() + 1, scalar(R, 0));
    Elem li = b.c.back().inverse();
    for (std::size_t k = a.c.size(); k-- >= b.c.size();) {
        Elem c = a.c[k] * li;
        std::size_t shift = k - (b.c.size() - 1);
        q.c[shift] = c;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] -= c * b.c[i];
        if (k == 0)
            break;
    }
    if (!trim(a).c.empty())
        throw consistency_failure("miller_divisor", "Miller function is not regular away from O");
    return trim(q);
}

KPoly constant(Elem const& c) { return trim(KPoly{{c}}); }

} // namespace

Elem KPoly::eval(Elem const& x, NumberRing const& ring) const
{
    Elem acc = scalar(ring, 0);
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

Elem RationalFunctionOnCurve::eval(CurvePoint const& P) const
{
    if (P.infinity)
        throw invalid_input("support_collision", "evaluation at the point at infinity");
    NumberRing const& R = E_.ring();
    return scale_ * (A_.eval(P.x, R) + B_.eval(P.x, R) * P.y);
}

std::optional<Elem> RationalFunctionOnCurve::eval_straight_line(CurvePoint const& P) const
{
    if (P.infinity)
        return std::nullopt;
    NumberRing const& R = E_.ring();
    Elem acc = scale_;
    for (auto const& f : factors_) {
        Elem l = f.line_A.eval(P.x, R) + f.line_B.eval(P.x, R) * P.y;
        Elem v = f.vertical.eval(P.x, R);
        if (l.is_zero() || v.is_zero())
            return std::nullopt;
        acc = acc * l / v;
    }
    return acc;
}

RationalFunctionOnCurve RationalFunctionOnCurve::scaled(Elem const& c) const
{
    if (c.is_zero())
        throw invalid_input("zero_scalar", "a Miller function cannot be scaled by zero");
    RationalFunctionOnCurve g = *this;
    g.scale_ = scale_ * c;
    return g;
}

std::string RationalFunctionOnCurve::to_string() const
{
    auto poly = [](KPoly const& p) {
        if (p.c.empty())
            return std::string("0");
        std::string s;
        for (std::size_t i = p.c.size(); i-- > 0;) {
            if (p.c[i].is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + p.c[i].to_string() + ")";
            if (i > 0)
                s += i == 1 ? "*x" : "*x^" + std::to_string(i);
        }
        return s;
    };
    std::string s = poly(A_);
    if (!B_.c.empty())
        s += " + (" + poly(B_) + ")*y";
    if (!scale_.is_one())
        s = "(" + scale_.to_string() + ")*(" + s + ")";
    return s;
}

RationalFunctionOnCurve miller_function(EllipticCurve const& E, CurvePoint const& y, long n)
{
    NumberRing const& R = E.ring();
    if (!E.contains(y))
        throw invalid_input("not_on_curve", y.to_string() + " is not on the curve");
    if (y.infinity || n < 1 || !E.mul(n, y).infinity || E.order(y, n) != n)
        throw invalid_input("wrong_order", "point " + y.to_string() + " does not have exact order " + std::to_string(n));
    RationalFunctionOnCurve g(E);
    g.scale_ = scalar(R, 1);
    KPoly A = constant(scalar(R, 1)), B, C = constant(scalar(R, 1));
    KPoly h{{E.a3(), E.a1()}};
    h = trim(h);
    KPoly f = trim(KPoly{{E.a6(), E.a4(), E.a2(), scalar(R, 1)}});
    CurvePoint Q = y;
    for (long k = 1; k < n; ++k) {
        RationalFunctionOnCurve::Factor fac;
        bool vertical_line = false;
        Elem lambda;
        if (Q.x == y.x) {
            Elem den = scalar(R, 2) * y.y + E.a1() * y.x + E.a3();
            if (Q.y != y.y || den.is_zero())
                vertical_line = true;
            else
                lambda = (scalar(R, 3) * y.x * y.x + scalar(R, 2) * E.a2() * y.x + E.a4() - E.a1() * y.y) / den;
        } else {
            lambda = (y.y - Q.y) / (y.x - Q.x);
        }
        if (vertical_line) {
            fac.line_A = trim(KPoly{{-y.x, scalar(R, 1)}});
        } else {
            fac.line_A = trim(KPoly{{-(Q.y - lambda * Q.x), -lambda}});
            fac.line_B = constant(scalar(R, 1));
        }
        CurvePoint S = E.add(Q, y);
        fac.vertical = S.infinity ? constant(scalar(R, 1)) : trim(KPoly{{-S.x, scalar(R, 1)}});
        // (A + B y)(LA + LB y), y^2 = f - h y
        KPoly BB = mul(B, fac.line_B, R);
        KPoly nA = add(mul(A, fac.line_A, R), mul(BB, f, R), R);
        KPoly nB = add(add(mul(A, fac.line_B, R), mul(B, fac.line_A, R), R), neg(mul(BB, h, R)), R);
        A = nA;
        B = nB;
        C = mul(C, fac.vertical, R);
        g.factors_.push_back(std::move(fac));
        Q = S;
    }
    g.A_ = divide_exact(A, C, R);
    g.B_ = divide_exact(B, C, R);
    if (!g.eval(y).is_zero())
        throw consistency_failure("miller_divisor", "Miller function does not vanish at the torsion point");
    return g;
}

Elem miller_function_eval(EllipticCurve const& E, CurvePoint const& y, CurvePoint const& P1, CurvePoint const& P2)
{
    for (auto const* P : {&P1, &P2})
        if (!E.contains(*P))
            throw invalid_input("not_on_curve", P->to_string() + " is not on the curve");
    if (P1 == P2)
        return scalar(E.ring(), 1);
    long n = E.order(y);
    if (n == 0)
        throw unsupported("non_torsion", y.to_string() + " has no order up to 24");
    for (auto const* P : {&P1, &P2})
        if (P->infinity || *P == y)
            throw invalid_input("support_collision", P->to_string() + " lies in the support of the Miller divisor");
    auto g = miller_function(E, y, n);
    Elem v = g.eval(P1) / g.eval(P2);
    auto s1 = g.eval_straight_line(P1), s2 = g.eval_straight_line(P2);
    if (s1 && s2 && *s1 / *s2 != v)
        throw consistency_failure("miller_eval", "straight-line and reduced evaluations differ");
    return v;
}

} // namespace kummerlog
