#include "kummerlog/pairing.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"

#include <algorithm>
#include <set>

namespace kummerlog {

namespace {

void check_points(EllipticCurve const& E, std::initializer_list<CurvePoint const*> pts)
{
    for (auto const* P : pts)
        if (!E.contains(*P))
            throw invalid_input("not_on_curve", P->to_string() + " is not on " + E.to_string());
}

long torsion_order(EllipticCurve const& E, CurvePoint const& y)
{
    long n = E.order(y);
    if (n == 0)
        throw unsupported("non_torsion", y.to_string() + " is not torsion of order at most 24");
    return n;
}

void check_marked_set(EllipticCurve const& E, MarkedBase const& B)
{
    if (B.ring() != E.ring())
        throw invalid_input("ring_mismatch", "curve and marked base live over different rings");
    auto bad = bad_primes(E);
    std::vector<PrimeIdeal> D = B.D();
    std::sort(D.begin(), D.end());
    std::sort(bad.begin(), bad.end());
    if (D != bad) {
        std::string s;
        for (auto const& P : bad)
            s += (s.empty() ? "" : ", ") + P.to_string();
        throw invalid_input("marked_set_mismatch", "D must be the set of bad primes {" + s + "}");
    }
}

// max(0, -v(x)/2) in the minimal model at P
mpq_class section_meets_zero(EllipticCurve const& E, ReductionData const& rd, CurvePoint const& pt)
{
    if (pt.infinity)
        throw consistency_failure("intersection", "intersection with the zero section of O itself");
    CurvePoint q = E.transform(rd.to_minimal, pt);
    if (q.x.is_zero())
        return 0;
    int v = valuation(E.ring(), q.x, rd.prime);
    if (v >= 0)
        return 0;
    if (v % 2)
        throw consistency_failure("intersection", "odd pole order of x in a minimal model");
    return mpq_class(-v / 2);
}

void add_denominator_primes(NumberRing const& R, Elem const& x, std::set<PrimeIdeal>& S)
{
    if (x.is_zero())
        return;
    for (auto const& [P, e] : factor_element(R, x))
        if (e < 0)
            S.insert(P);
}

} // namespace

mpq_class monodromy_pairing(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y, PrimeIdeal const& s)
{
    check_points(E, {&x, &y});
    ReductionData rd = tate_algorithm(E, s);
    if (rd.group.order() == 1)
        return 0;
    int gx = reduction_component(E, x, s);
    int gy = reduction_component(E, y, s);
    return rd.group.pair_components(gx, gy);
}

MonodromyProfile monodromy_profile(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                   MarkedBase const& B)
{
    check_marked_set(E, B);
    MonodromyProfile out;
    for (auto const& s : B.D())
        out[s] = monodromy_pairing(E, x, y, s);
    return out;
}

std::vector<CurvePoint> admissible_translations(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                                PairingOptions const& opt)
{
    std::vector<CurvePoint> cand = opt.translations;
    if (cand.empty()) {
        // small points, then their small multiples
        auto base = small_points(E, opt.search_height);
        cand = base;
        for (long k = 2; k <= 4; ++k)
            for (auto const& P : base)
                cand.push_back(E.mul(k, P));
    }
    std::vector<CurvePoint> out;
    for (auto const& T : cand) {
        if (!E.contains(T))
            throw invalid_input("not_on_curve", "translation point " + T.to_string() + " is not on the curve");
        CurvePoint xT = E.add(x, T);
        if (T.infinity || T == y || xT.infinity || xT == y)
            continue;
        if (std::find(out.begin(), out.end(), T) == out.end())
            out.push_back(T);
    }
    return out;
}

LogPairing log_class_pairing_detail(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                    std::shared_ptr<MarkedBase const> const& B, PairingOptions const& opt)
{
    check_points(E, {&x, &y});
    NumberRing const& R = E.ring();
    LogPairing out;
    out.n = torsion_order(E, y);
    check_marked_set(E, *B);
    out.profile = monodromy_profile(E, x, y, *B);

    if (x.infinity) {
        out.cls = log_pic_class(B, {});
        out.profile_matches = nu(*out.cls).coeffs == out.profile;
        return out;
    }

    auto Ts = admissible_translations(E, x, y, opt);
    if (Ts.empty() || opt.max_retries == 0)
        throw unsupported("support_collision", "no admissible translation point among the candidates");
    out.T = Ts.front();
    CurvePoint const& T = out.T;

    auto g = miller_function(E, y, out.n);
    if (opt.miller_scale)
        g = g.scaled(*opt.miller_scale);
    CurvePoint xT = E.add(x, T);
    Elem ratio = g.eval(xT) / g.eval(T);
    if (ratio.is_zero())
        throw consistency_failure("miller_eval", "Miller function vanishes off its support");
    FractionalIdeal route_a = factor_element(R, ratio);

    CurvePoint my = E.neg(y);
    std::vector<CurvePoint> pts{xT, T, E.add(xT, my), E.add(T, my)};
    std::set<PrimeIdeal> S(B->D().begin(), B->D().end());
    for (auto const& [P, e] : route_a)
        S.insert(P);
    for (auto const& P : discriminant_primes(E))
        S.insert(P);
    for (auto const& p : pts)
        add_denominator_primes(R, p.x, S);

    for (auto const& P : S) {
        ReductionData rd = tate_algorithm(E, P);
        LocalTerm lt;
        auto it = route_a.find(P);
        lt.miller = it == route_a.end() ? mpq_class(0) : mpq_class(-it->second, out.n);
        lt.miller.canonicalize();
        mpq_class c = section_meets_zero(E, rd, pts[0]) - section_meets_zero(E, rd, pts[1]) -
                      section_meets_zero(E, rd, pts[2]) + section_meets_zero(E, rd, pts[3]);
        if (rd.group.order() > 1) {
            int gxT = reduction_component(E, xT, P), gT = reduction_component(E, T, P);
            int gy = reduction_component(E, y, P);
            c += rd.group.correction(gxT, gy) - rd.group.correction(gT, gy);
        }
        lt.intersection = c;
        if (lt.miller != lt.intersection)
            out.routes_agree = false;
        if (c != 0)
            out.divisor.coeffs[P] = c;
        out.local[P] = lt;
    }
    if (opt.cross_check && !out.routes_agree) {
        std::string detail;
        for (auto const& [P, lt] : out.local)
            if (lt.miller != lt.intersection)
                detail += " " + P.to_string() + ": " + to_string(lt.miller) + " vs " + to_string(lt.intersection);
        throw consistency_failure("route_mismatch", "Miller valuations and intersection numbers differ:" + detail);
    }
    out.cls = log_pic_class(B, out.divisor);
    out.profile_matches = nu(*out.cls).coeffs == out.profile;
    return out;
}

LogPicClass log_class_pairing(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                              std::shared_ptr<MarkedBase const> const& B, PairingOptions const& opt)
{
    auto d = log_class_pairing_detail(E, x, y, B, opt);
    if (!d.profile_matches)
        throw consistency_failure("profile_mismatch", "nu of the log pairing differs from the monodromy profile");
    return *d.cls;
}

IdealClass class_pairing_restricted(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                    std::shared_ptr<MarkedBase const> const& B, ComponentSelection const& gamma,
                                    ComponentSelection const& gamma_dual, PairingOptions const& opt)
{
    check_points(E, {&x, &y});
    torsion_order(E, y);
    check_marked_set(E, *B);
    for (auto const* sel : {&gamma, &gamma_dual})
        for (auto const& [P, comps] : *sel)
            if (!B->marked(P))
                throw invalid_input("membership_violation", "selection at unmarked prime " + P.to_string());
    for (auto const& s : B->D()) {
        ReductionData rd = tate_algorithm(E, s);
        auto gens = [&](ComponentSelection const& sel) {
            std::vector<std::vector<mpz_class>> g;
            auto it = sel.find(s);
            if (it != sel.end())
                for (int c : it->second)
                    g.push_back(rd.group.coordinates(c));
            return g;
        };
        auto G1 = gens(gamma), G2 = gens(gamma_dual);
        for (auto const& a : G1)
            for (auto const& b : G2)
                if (rd.group.pair(a, b) != 0)
                    throw invalid_input("orthogonality_violation",
                                        "selected subgroups are not orthogonal at " + s.to_string());
        if (!rd.group.in_subgroup(rd.group.coordinates(reduction_component(E, x, s)), G1))
            throw invalid_input("membership_violation", "x does not reduce into the selected subgroup at " + s.to_string());
        if (!rd.group.in_subgroup(rd.group.coordinates(reduction_component(E, y, s)), G2))
            throw invalid_input("membership_violation", "y does not reduce into the selected subgroup at " + s.to_string());
    }
    auto d = log_class_pairing_detail(E, x, y, B, opt);
    if (!nu(*d.cls).is_zero() || !d.profile_matches)
        throw consistency_failure("nu_nonzero", "nu of the log pairing does not vanish on orthogonal subgroups");
    RationalDivisor rep = d.cls->representative();
    if (!rep.is_integral())
        throw consistency_failure("nu_nonzero", "representative is not integral");
    IdealClass out;
    out.representative = rep.to_ideal();
    out.coordinates = B->class_group().reduce(d.cls->class_coordinates());
    out.trivial = B->class_group().is_trivial(out.coordinates);
    return out;
}

} // namespace kummerlog
