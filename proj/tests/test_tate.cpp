#include "doctest.h"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"
#include "kummerlog/residue.hpp"
#include "kummerlog/tate.hpp"

#include <random>
#include <set>

using namespace kummerlog;

namespace {

EllipticCurve curve(NumberRing const& R, std::array<long, 5> a)
{
    std::array<Elem, 5> e;
    for (int i = 0; i < 5; ++i)
        e[i] = scalar(R, a[i]);
    return EllipticCurve(R, e);
}

int v(NumberRing const& R, Elem const& x, PrimeIdeal const& P) { return val_or_inf(R, x, P); }

struct Expected {
    std::string type;
    long cp;
    int f;
};

// Table lookup in residue characteristic >= 5, from valuations alone.
Expected classify_large_p(EllipticCurve const& E, PrimeIdeal const& P)
{
    NumberRing const& R = E.ring();
    int c4 = v(R, E.c4(), P), c6 = v(R, E.c6(), P), d = v(R, E.discriminant(), P);
    Elem c6m = -E.c6();
    Elem pi = uniformizer(R, P);
    while (c4 >= 4 && c6 >= 6 && d >= 12) {
        c4 -= 4;
        c6 -= 6;
        d -= 12;
        for (int i = 0; i < 6; ++i)
            c6m = c6m / pi;
    }
    if (d == 0)
        return {"I0", 1, 0};
    if (c4 == 0) {
        ResidueField F(R, P);
        bool split = F.pow(F.reduce(c6m), (F.size() - 1) / 2) == F.one();
        return {"I" + std::to_string(d), split ? d : (d % 2 ? 1 : 2), 1};
    }
    int vj = 3 * c4 - d;
    if (vj < 0)
        return {"I" + std::to_string(d - 6) + "*", -1, 2};
    switch (d) {
    case 2: return {"II", 1, 2};
    case 3: return {"III", 2, 2};
    case 4: return {"IV", -1, 2};
    case 6: return {"I0*", -1, 2};
    case 8: return {"IV*", -1, 2};
    case 9: return {"III*", 2, 2};
    case 10: return {"II*", 1, 2};
    }
    FAIL("valuation pattern outside the table");
    return {};
}

std::vector<mpz_class> add_coords(ComponentGroup const& G, std::vector<mpz_class> a, std::vector<mpz_class> const& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = mod(a[i] + b[i], G.invariants()[i]);
    return a;
}

} // namespace

TEST_CASE("tabulated curves")
{
    // Cremona's tables: local data at each bad prime
    struct Local {
        long p;
        std::string type;
        long cp;
        int f;
    };
    struct Row {
        std::array<long, 5> a;
        std::vector<Local> local;
    };
    std::vector<Row> rows{
        {{0, -1, 1, -10, -20}, {{11, "I5", 5, 1}}},
        {{0, 0, 1, -1, 0}, {{37, "I1", 1, 1}}},
        {{1, 0, 1, 4, -6}, {{2, "I6", 2, 1}, {7, "I3", 3, 1}}},
        {{1, 1, 1, -10, -10}, {{3, "I4", 2, 1}, {5, "I4", 4, 1}}},
        {{0, -1, 0, -4, 4}, {{2, "I1*", 4, 3}, {3, "I2", 2, 1}}},
        {{0, 0, 1, 0, -7}, {{3, "IV*", 3, 3}}},
        {{0, 0, 0, 4, 0}, {{2, "I3*", 4, 5}}},
        {{0, 0, 0, -1, 0}, {{2, "III", 2, 5}}},
        {{0, 0, 0, 0, 1}, {{2, "IV", 3, 2}, {3, "III", 2, 2}}},
        {{1, -1, 0, -2, -1}, {{7, "III", 2, 2}}},
        {{0, 0, 0, -4, 0}, {{2, "I2*", 4, 6}}},
        {{0, 1, 1, -2, 0}, {{389, "I1", 1, 1}}},
        {{0, 0, 1, -7, 6}, {{5077, "I1", 1, 1}}},
        {{0, 1, 0, 4, 4}, {{2, "IV*", 3, 2}, {5, "I2", 2, 1}}},
        {{0, 1, 0, -4, -4}, {{2, "I0*", 2, 4}, {3, "I2", 2, 1}}},
        {{0, 0, 0, -2, 0}, {{2, "III", 2, 8}}},
        {{0, -2, 0, -3, 0}, {{2, "I0*", 2, 4}, {3, "I2", 2, 1}}},
        // non-minimal model of 11a1 (u = 2)
        {{0, -4, 8, -160, -1280}, {{11, "I5", 5, 1}}},
    };
    NumberRing Z;
    for (auto const& r : rows) {
        auto E = curve(Z, r.a);
        auto bad = bad_primes(E);
        CAPTURE(E.to_string());
        REQUIRE(bad.size() == r.local.size());
        for (std::size_t i = 0; i < bad.size(); ++i) {
            auto rd = tate_algorithm(E, bad[i]);
            CHECK(bad[i].p() == r.local[i].p);
            CHECK(rd.type.to_string() == r.local[i].type);
            CHECK(rd.tamagawa == r.local[i].cp);
            CHECK(rd.conductor_exponent == r.local[i].f);
            // Ogg: f = v(disc) + 1 - (number of components)
            CHECK(rd.conductor_exponent == rd.disc_valuation + 1 - static_cast<int>(rd.fiber.size()));
        }
    }
    // the non-minimal model is good at 2 after minimization
    auto rd = tate_algorithm(curve(Z, {0, -4, 8, -160, -1280}), PrimeIdeal(2, Splitting::rational));
    CHECK(rd.good());
    CHECK(rd.disc_valuation == 0);
}

TEST_CASE("residue characteristic >= 5 against the valuation table")
{
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long> coef(-6, 6);
    std::vector<NumberRing> rings{NumberRing::integers(), NumberRing::quadratic(-1), NumberRing::quadratic(5),
                                  NumberRing::quadratic(-7), NumberRing::quadratic(-5)};
    int checked = 0;
    std::set<std::string> types;
    for (auto const& R : rings) {
        for (int trial = 0; trial < 40; ++trial) {
            std::array<Elem, 5> a;
            for (auto& x : a)
                x = Elem(R, coef(rng), R.is_rational() || trial % 2 ? 0 : coef(rng) / 3);
            // every few curves: force additive reduction at 5 or 7
            if (trial % 5 == 0) {
                long q = trial % 10 ? 5 : 7;
                Elem s = scalar(R, q);
                a = {scalar(R, 0), scalar(R, 0), scalar(R, 0), a[3] * s, a[4] * s * s};
                if (trial % 3 == 0)
                    a[4] = a[4] * s * s * s;
            }
            std::optional<EllipticCurve> E;
            try {
                E.emplace(R, a);
            } catch (Error const&) {
                continue;
            }
            for (auto const& P : discriminant_primes(*E)) {
                if (P.p() < 5)
                    continue;
                auto rd = tate_algorithm(*E, P);
                auto ex = classify_large_p(*E, P);
                CAPTURE(E->to_string());
                CAPTURE(P.to_string());
                CHECK(rd.type.to_string() == ex.type);
                CHECK(rd.conductor_exponent == ex.f);
                if (ex.cp > 0)
                    CHECK(rd.tamagawa == ex.cp);
                CHECK(rd.group.order() % rd.tamagawa == 0);
                types.insert(rd.type.to_string());
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
    // the sample reaches additive types
    CHECK(types.count("I0*") + types.count("II") + types.count("IV") + types.count("III") > 0);
}

TEST_CASE("invariance under change of model")
{
    NumberRing Z;
    NumberRing R5 = NumberRing::quadratic(-5);
    std::vector<EllipticCurve> curves{curve(Z, {1, 0, 1, 4, -6}), curve(Z, {0, -1, 0, -4, 4}),
                                      curve(Z, {0, 0, 1, 0, -7}), curve(R5, {0, -2, 0, -3, 0}),
                                      curve(R5, {0, 0, 0, -2, 0})};
    std::vector<Iso> isos{{scalar(Z, 1), scalar(Z, 3), scalar(Z, -2), scalar(Z, 5)},
                          {scalar(Z, mpq_class(1, 2)), scalar(Z, -1), scalar(Z, 1), scalar(Z, 0)},
                          {scalar(Z, 3), scalar(Z, mpq_class(2, 3)), scalar(Z, 0), scalar(Z, 7)}};
    for (auto const& E : curves) {
        auto bad = bad_primes(E);
        for (auto iso : isos) {
            NumberRing const& R = E.ring();
            iso = {scalar(R, iso.u.a()), scalar(R, iso.r.a()), scalar(R, iso.s.a()), scalar(R, iso.t.a())};
            auto F = E.transform(iso);
            CHECK(bad_primes(F) == bad);
            for (auto const& P : bad) {
                auto a = tate_algorithm(E, P), b = tate_algorithm(F, P);
                CHECK(a.type.to_string() == b.type.to_string());
                CHECK(a.tamagawa == b.tamagawa);
                CHECK(a.conductor_exponent == b.conductor_exponent);
                CHECK(a.disc_valuation == b.disc_valuation);
            }
        }
    }
}

TEST_CASE("reduction_component is a homomorphism")
{
    NumberRing Z;
    struct Fixture {
        EllipticCurve E;
        std::vector<CurvePoint> gens;
    };
    auto P = [&](NumberRing const& R, long x, long y) { return CurvePoint::affine(scalar(R, x), scalar(R, y)); };
    NumberRing R5 = NumberRing::quadratic(-5), Ri = NumberRing::quadratic(-1);
    std::vector<Fixture> fx{
        {curve(Z, {0, -1, 1, -10, -20}), {P(Z, 5, 5)}},
        {curve(Z, {1, 0, 1, 4, -6}), {P(Z, 9, 23), P(Z, 2, -5)}},
        {curve(Z, {0, -2, 0, -3, 0}), {P(Z, 0, 0), P(Z, 3, 0), P(Z, -1, 0)}},
        {curve(Z, {0, 0, 0, -2, 0}), {P(Z, 0, 0), P(Z, -1, 1), P(Z, 2, 2)}},
        {curve(Z, {1, 1, 1, -10, -10}), {P(Z, -1, 0), P(Z, 3, -2)}},
        {curve(R5, {0, 0, 0, -2, 0}), {P(R5, 0, 0), P(R5, -1, 1), P(R5, 2, 2)}},
        {curve(Ri, {0, -2, 0, -3, 0}), {P(Ri, 0, 0), P(Ri, 3, 0)}},
    };
    for (auto const& f : fx) {
        auto const& E = f.E;
        std::vector<CurvePoint> pts{CurvePoint::zero()};
        for (auto const& g : f.gens) {
            REQUIRE(E.contains(g));
            for (int k = 1; k <= 6; ++k)
                pts.push_back(E.mul(k, g));
        }
        for (auto const& s : bad_primes(E)) {
            auto rd = tate_algorithm(E, s);
            CAPTURE(E.to_string());
            CAPTURE(s.to_string());
            for (auto const& a : pts)
                for (auto const& b : pts) {
                    int ca = reduction_component(E, a, s), cb = reduction_component(E, b, s);
                    int cab = reduction_component(E, E.add(a, b), s);
                    CHECK(rd.group.coordinates(cab) ==
                          add_coords(rd.group, rd.group.coordinates(ca), rd.group.coordinates(cb)));
                }
            CHECK(reduction_component(E, CurvePoint::zero(), s) == 0);
        }
    }
}

TEST_CASE("11a1 components of multiples")
{
    NumberRing Z;
    auto E = curve(Z, {0, -1, 1, -10, -20});
    PrimeIdeal p11(11, Splitting::rational);
    CurvePoint P = CurvePoint::affine(scalar(Z, 5), scalar(Z, 5));
    std::vector<int> comps;
    for (int k = 0; k <= 6; ++k)
        comps.push_back(reduction_component(E, E.mul(k, P), p11));
    // a generator of the 5-torsion meets a non-identity component, and
    // k*P meets component k*c
    int c = comps[1];
    CHECK(c != 0);
    for (int k = 0; k <= 6; ++k)
        CHECK(comps[k] == (k * c) % 5);
}
