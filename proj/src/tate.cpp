#include "kummerlog/tate.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"
#include "kummerlog/residue.hpp"

#include <algorithm>

namespace kummerlog {

namespace {

struct Outcome {
    KodairaType type;
    long cp = 1;
    int f = 0;
    std::optional<int> component;
};

class Run {
    NumberRing R_;
    PrimeIdeal P_;
    ResidueField F_;
    Elem pi_;
    mpz_class p_;

  public:
    EllipticCurve E;
    Iso total;
    std::optional<CurvePoint> pt;

    Run(EllipticCurve const& curve, PrimeIdeal const& P, std::optional<CurvePoint> point)
        : R_(curve.ring()), P_(P), F_(R_, P), pi_(uniformizer(R_, P)), p_(P.p()), E(curve),
          total(Iso::identity(R_)), pt(std::move(point))
    {
    }

    Elem k(mpq_class const& q) const { return scalar(R_, q); }
    int v(Elem const& x) const { return val_or_inf(R_, x, P_); }
    Fq red(Elem const& x) const { return F_.reduce(x); }
    Elem lift(Fq const& x) const { return F_.lift(x); }
    bool zero(Elem const& x) const { return v(x) >= 1; }
    Elem pi_pow(int e) const { return pi_.pow(e); }
    ResidueField const& F() const { return F_; }
    bool char_is(long q) const { return p_ == q; }

    void apply(Elem const& u, Elem const& r, Elem const& s, Elem const& t)
    {
        Iso i{u, r, s, t};
        if (pt)
            pt = E.transform(i, *pt);
        E = E.transform(i);
        total = total.then(i);
    }
    void translate(Elem const& r, Elem const& s, Elem const& t) { apply(k(1), r, s, t); }

    // point reduces to the singular point (0,0) of the current model
    bool at_singular() const
    {
        return pt && !pt->infinity && v(pt->x) >= 1 && v(pt->y) >= 1;
    }

    // index of red(value) among the sorted roots, or failure
    int root_index(Elem const& value, std::vector<Fq> const& roots) const
    {
        Fq r = red(value);
        auto it = std::find(roots.begin(), roots.end(), r);
        if (it == roots.end())
            throw consistency_failure("component_tracking", "point does not reduce onto a rational component");
        return static_cast<int>(it - roots.begin());
    }

    Fq sqrt_char2(Fq const& x) const { return F_.pth_root(x); }

    Outcome multiplicative(int n);
    Outcome go();
};

Outcome Run::multiplicative(int n)
{
    Outcome o;
    o.type = {KodairaTag::In, n, std::nullopt};
    o.f = 1;
    auto roots = F_.roots({F_.neg(red(E.a2())), red(E.a1()), F_.one()});
    bool split = !roots.empty();
    o.type.split = split;
    o.cp = split ? n : (n % 2 ? 1 : 2);
    if (!pt)
        return o;
    if (!at_singular()) {
        o.component = 0;
        return o;
    }
    if (!split) {
        if (n % 2)
            throw consistency_failure("component_tracking", "point at the node of a nonsplit fiber of odd length");
        o.component = n / 2;
        return o;
    }
    // Hensel-lift the node and the two tangent slopes, then read off the
    // valuations along the branches.
    int N = 2 * n + 8;
    LocalRing L(R_, P_, N);
    using Elt = LocalRing::Elt;
    Elt a1 = L.from(E.a1()), a2 = L.from(E.a2()), a3 = L.from(E.a3()), a4 = L.from(E.a4());
    Elt two = L.from(k(2)), three = L.from(k(3)), six = L.from(k(6));
    Elt x{}, y{};
    for (int it = 0; (1 << it) < 4 * N + 8; ++it) {
        Elt G1 = L.add(L.add(L.mul(two, y), L.mul(a1, x)), a3);
        Elt G2 = L.sub(L.sub(L.sub(L.mul(a1, y), L.mul(three, L.mul(x, x))), L.mul(two, L.mul(a2, x))), a4);
        Elt c = L.add(L.mul(six, x), L.mul(two, a2));
        Elt det = L.add(L.mul(a1, a1), L.mul(two, c));
        Elt di = L.inv(det);
        Elt dx = L.mul(L.sub(L.mul(a1, G1), L.mul(two, G2)), di);
        Elt dy = L.mul(L.add(L.mul(c, G1), L.mul(a1, G2)), di);
        x = L.sub(x, dx);
        y = L.sub(y, dy);
    }
    Elt A2 = L.add(a2, L.mul(three, x)); // a2 after moving the node to the origin
    auto lift_root = [&](Fq const& r0) {
        Elt t = L.from(lift(r0));
        for (int it = 0; (1 << it) < 4 * N + 8; ++it) {
            Elt q = L.sub(L.add(L.mul(t, t), L.mul(a1, t)), A2);
            Elt dq = L.add(L.mul(two, t), a1);
            t = L.sub(t, L.mul(q, L.inv(dq)));
        }
        return t;
    };
    Elt alpha = lift_root(roots.at(0)), beta = lift_root(roots.at(1));
    Elt X = L.sub(L.from(pt->x), x), Y = L.sub(L.from(pt->y), y);
    int A = L.val(L.sub(Y, L.mul(alpha, X)));
    int B = L.val(L.sub(Y, L.mul(beta, X)));
    if (A >= N || B >= N)
        throw consistency_failure("component_tracking", "insufficient precision at the node");
    int idx;
    if (A == B) {
        if (n % 2)
            throw consistency_failure("component_tracking", "balanced branch valuations on an odd cycle");
        idx = n / 2;
    } else {
        idx = A > B ? B : n - A;
    }
    if (idx <= 0 || idx >= n)
        throw consistency_failure("component_tracking", "branch valuations out of range");
    o.component = idx;
    return o;
}

Outcome Run::go()
{
    // integral model
    {
        int kk = 0;
        auto const& a = E.coefficients();
        int weights[5] = {1, 2, 3, 4, 6};
        for (int i = 0; i < 5; ++i)
            if (!a[i].is_zero()) {
                int vi = v(a[i]);
                if (vi < 0)
                    kk = std::max(kk, (-vi + weights[i] - 1) / weights[i]);
            }
        if (kk > 0)
            apply(pi_pow(kk).inverse(), k(0), k(0), k(0));
    }
    Fq const one = F_.one();
    for (;;) {
        int vD = v(E.discriminant());
        if (vD == 0) {
            Outcome o{{KodairaTag::I0, 0, std::nullopt}, 1, 0, std::nullopt};
            if (pt)
                o.component = 0;
            return o;
        }
        // move the singular point of the reduction to (0,0)
        Fq r, t;
        if (char_is(2)) {
            if (F_.is_zero(red(E.b2()))) {
                r = sqrt_char2(red(E.a4()));
                Fq rr = F_.add(F_.mul(r, F_.add(F_.mul(r, F_.add(r, red(E.a2()))), red(E.a4()))), red(E.a6()));
                t = sqrt_char2(rr);
            } else {
                Fq a1i = F_.inv(red(E.a1()));
                r = F_.mul(a1i, red(E.a3()));
                t = F_.mul(a1i, F_.add(red(E.a4()), F_.mul(r, r)));
            }
        } else if (char_is(3)) {
            if (F_.is_zero(red(E.b2())))
                r = F_.pow(F_.neg(red(E.b6())), F_.size() / 3); // cube root
            else
                r = F_.neg(F_.mul(red(E.b4()), F_.inv(red(E.b2()))));
            t = F_.add(F_.mul(red(E.a1()), r), red(E.a3()));
        } else {
            Fq twelve = F_.from_int(12);
            if (F_.is_zero(red(E.c4())))
                r = F_.neg(F_.mul(red(E.b2()), F_.inv(twelve)));
            else
                r = F_.neg(F_.mul(F_.add(red(E.c6()), F_.mul(red(E.b2()), red(E.c4()))),
                                  F_.inv(F_.mul(twelve, red(E.c4())))));
            t = F_.neg(F_.mul(F_.add(F_.mul(red(E.a1()), r), red(E.a3())), F_.inv(F_.from_int(2))));
        }
        translate(lift(r), k(0), lift(t));
        if (!zero(E.a3()) || !zero(E.a4()) || !zero(E.a6()))
            throw consistency_failure("tate", "singular point not moved to the origin");

        if (!zero(E.b2()))
            return multiplicative(vD);

        if (v(E.a6()) < 2) {
            Outcome o{{KodairaTag::II, 0, std::nullopt}, 1, vD, std::nullopt};
            if (pt) {
                if (at_singular())
                    throw consistency_failure("component_tracking", "point at the cusp of a type II fiber");
                o.component = 0;
            }
            return o;
        }
        if (v(E.b8()) < 3) {
            Outcome o{{KodairaTag::III, 0, std::nullopt}, 2, vD - 1, std::nullopt};
            if (pt)
                o.component = at_singular() ? 1 : 0;
            return o;
        }

        // π | a1, a2; π^2 | a3, a4; π^3 | a6 (IV needs the first two)
        auto normalize = [&]() {
            if (char_is(2)) {
                Elem s = lift(sqrt_char2(red(E.a2())));
                Elem tt = pi_ * lift(sqrt_char2(red(E.a6() / pi_pow(2))));
                translate(k(0), s, tt);
            } else if (char_is(3)) {
                translate(k(0), E.a1(), E.a3());
            } else {
                translate(k(0), -E.a1() / k(2), -E.a3() / k(2));
            }
        };

        if (v(E.b6()) < 3) {
            bool sing = at_singular();
            normalize();
            if (!zero(E.a1()) || !zero(E.a2()))
                throw consistency_failure("tate", "normalization failed at type IV");
            auto roots = F_.roots({F_.neg(red(E.a6() / pi_pow(2))), red(E.a3() / pi_), one});
            Outcome o{{KodairaTag::IV, 0, std::nullopt}, roots.empty() ? 1 : 3, vD - 2, std::nullopt};
            if (pt)
                o.component = sing ? 1 + root_index(pt->y / pi_, roots) : 0;
            return o;
        }

        bool sing = at_singular();
        normalize();
        if (!zero(E.a1()) || !zero(E.a2()) || v(E.a3()) < 2 || v(E.a4()) < 2 || v(E.a6()) < 3)
            throw consistency_failure("tate", "normalization failed");

        Fq b = red(E.a2() / pi_), c = red(E.a4() / pi_pow(2)), d = red(E.a6() / pi_pow(3));
        auto F = [&](long n) { return F_.from_int(n); };
        Fq bb = F_.mul(b, b), cc = F_.mul(c, c), bc = F_.mul(b, c);
        Fq w = F_.add(F_.add(F_.sub(F_.mul(F(27), F_.mul(d, d)), F_.mul(bb, cc)), F_.mul(F(4), F_.mul(F_.mul(bb, b), d))),
                      F_.sub(F_.mul(F(4), F_.mul(cc, c)), F_.mul(F(18), F_.mul(bc, d))));
        Fq xq = F_.sub(F_.mul(F(3), c), bb);

        if (!F_.is_zero(w)) {
            auto roots = F_.roots({d, c, b, one});
            Outcome o{{KodairaTag::I0s, 0, std::nullopt}, 1 + static_cast<long>(roots.size()), vD - 4, std::nullopt};
            if (pt)
                o.component = sing ? 1 + root_index(pt->x / pi_, roots) : 0;
            return o;
        }

        if (!F_.is_zero(xq)) {
            // double root to 0
            Fq alpha = char_is(2) ? sqrt_char2(c)
                                  : F_.mul(F_.sub(bc, F_.mul(F(9), d)), F_.inv(F_.mul(F(2), xq)));
            Fq simple = F_.sub(F_.neg(b), F_.mul(F(2), alpha));
            bool on_chain = false;
            std::optional<int> comp;
            if (pt) {
                if (!sing)
                    comp = 0;
                else {
                    Fq X = red(pt->x / pi_);
                    if (X == simple && !(simple == alpha))
                        comp = 1;
                    else if (X == alpha)
                        on_chain = true;
                    else
                        throw consistency_failure("component_tracking", "point off the cubic at an In* fiber");
                }
            }
            translate(pi_ * lift(alpha), k(0), k(0));
            int ix = 3, iy = 3;
            Elem mx = pi_pow(2), my = pi_pow(2);
            long cp = 0;
            for (;;) {
                Fq xa3 = red(E.a3() / my), xa6 = red(E.a6() / (mx * my));
                Fq disc = F_.add(F_.mul(xa3, xa3), F_.mul(F(4), xa6));
                if (!F_.is_zero(disc)) {
                    auto roots = F_.roots({F_.neg(xa6), xa3, one});
                    cp = roots.empty() ? 2 : 4;
                    if (on_chain)
                        comp = 2 + root_index(pt->y / my, roots);
                    break;
                }
                Fq root = char_is(2) ? sqrt_char2(xa6) : F_.neg(F_.mul(xa3, F_.inv(F(2))));
                if (on_chain && red(pt->y / my) != root)
                    throw consistency_failure("component_tracking", "point on a multiplicity-two component");
                translate(k(0), k(0), my * lift(root));
                my = my * pi_;
                ++iy;
                Fq xa2 = red(E.a2() / pi_), xa4 = red(E.a4() / (pi_ * mx));
                xa6 = red(E.a6() / (mx * my));
                Fq disc2 = F_.sub(F_.mul(xa4, xa4), F_.mul(F(4), F_.mul(xa2, xa6)));
                if (!F_.is_zero(disc2)) {
                    auto roots = F_.roots({xa6, xa4, xa2});
                    cp = roots.empty() ? 2 : 4;
                    if (on_chain)
                        comp = 2 + root_index(pt->x / mx, roots);
                    break;
                }
                Fq rootx = char_is(2) ? sqrt_char2(F_.mul(xa6, F_.inv(xa2)))
                                      : F_.neg(F_.mul(xa4, F_.inv(F_.mul(F(2), xa2))));
                if (on_chain && red(pt->x / mx) != rootx)
                    throw consistency_failure("component_tracking", "point on a multiplicity-two component");
                translate(mx * lift(rootx), k(0), k(0));
                mx = mx * pi_;
                ++ix;
            }
            return {{KodairaTag::Ins, ix + iy - 5, std::nullopt}, cp, vD - ix - iy + 1, comp};
        }

        // triple root to 0
        Fq alpha = char_is(3) ? F_.pow(F_.neg(d), F_.size() / 3) : F_.neg(F_.mul(b, F_.inv(F(3))));
        translate(pi_ * lift(alpha), k(0), k(0));
        Fq x3 = red(E.a3() / pi_pow(2)), x6 = red(E.a6() / pi_pow(4));
        if (!F_.is_zero(F_.add(F_.mul(x3, x3), F_.mul(F(4), x6)))) {
            auto roots = F_.roots({F_.neg(x6), x3, one});
            Outcome o{{KodairaTag::IVs, 0, std::nullopt}, roots.empty() ? 1 : 3, vD - 6, std::nullopt};
            if (pt)
                o.component = sing ? 1 + root_index(pt->y / pi_pow(2), roots) : 0;
            return o;
        }
        Fq root = char_is(2) ? sqrt_char2(x6) : F_.neg(F_.mul(x3, F_.inv(F(2))));
        translate(k(0), k(0), pi_pow(2) * lift(root));
        if (v(E.a4()) < 4) {
            Outcome o{{KodairaTag::IIIs, 0, std::nullopt}, 2, vD - 7, std::nullopt};
            if (pt)
                o.component = sing ? 1 : 0;
            return o;
        }
        if (v(E.a6()) < 6) {
            Outcome o{{KodairaTag::IIs, 0, std::nullopt}, 1, vD - 8, std::nullopt};
            if (pt) {
                if (sing)
                    throw consistency_failure("component_tracking", "point at the singular point of a type II* fiber");
                o.component = 0;
            }
            return o;
        }
        // not minimal
        apply(pi_, k(0), k(0), k(0));
    }
}

} // namespace

ReductionData tate_algorithm(EllipticCurve const& E, PrimeIdeal const& P)
{
    Run run(E, P, std::nullopt);
    Outcome o = run.go();
    FiberGeometry fib = fiber_geometry(o.type);
    ComponentGroup G = component_group_from_matrix(fib);
    if (mpz_class(G.order()) % o.cp != 0)
        throw consistency_failure("tate", "Tamagawa number does not divide the component-group order");
    int vD = val_or_inf(E.ring(), run.E.discriminant(), P);
    return ReductionData{P, run.E, run.total, o.type, fib, G, o.cp, o.f, vD};
}

int reduction_component(EllipticCurve const& E, CurvePoint const& pt, PrimeIdeal const& P)
{
    if (!E.contains(pt))
        throw invalid_input("not_on_curve", pt.to_string() + " is not on " + E.to_string());
    if (pt.infinity)
        return 0;
    Run run(E, P, pt);
    Outcome o = run.go();
    if (!o.component)
        throw consistency_failure("component_tracking", "no component determined");
    return *o.component;
}

std::vector<PrimeIdeal> bad_primes(EllipticCurve const& E)
{
    std::vector<PrimeIdeal> out;
    for (auto const& P : discriminant_primes(E))
        if (!tate_algorithm(E, P).good())
            out.push_back(P);
    return out;
}

} // namespace kummerlog
