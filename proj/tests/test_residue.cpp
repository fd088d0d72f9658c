#include "doctest.h"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"
#include "kummerlog/residue.hpp"

#include <set>

using namespace kummerlog;

namespace {

std::vector<std::pair<NumberRing, PrimeIdeal>> small_primes()
{
    std::vector<std::pair<NumberRing, PrimeIdeal>> out;
    for (long d : {1L, -1L, -5L, -3L, 2L, 5L, -7L}) {
        NumberRing R = d == 1 ? NumberRing::integers() : NumberRing::quadratic(d);
        for (long p : {2L, 3L, 5L, 7L, 11L})
            for (auto const& P : primes_above(R, p))
                out.push_back({R, P});
    }
    return out;
}

// product of (X - r) over the list
FqPoly from_roots(ResidueField const& F, std::vector<Fq> const& rs)
{
    FqPoly f{F.one()};
    for (auto const& r : rs)
        f = F.poly_mul(f, {F.neg(r), F.one()});
    return f;
}

} // namespace

TEST_CASE("residue fields are fields of the right size")
{
    for (auto const& [R, P] : small_primes()) {
        ResidueField F(R, P);
        auto els = F.elements();
        CHECK(mpz_class(static_cast<unsigned long>(els.size())) == P.norm());
        CHECK(F.size() == P.norm());
        std::set<Fq> distinct(els.begin(), els.end());
        CHECK(distinct.size() == els.size());
        for (auto const& x : els) {
            if (F.is_zero(x))
                continue;
            CHECK(F.mul(x, F.inv(x)) == F.one());
            CHECK(F.pow(x, F.size() - 1) == F.one());
            Fq r = F.pth_root(x);
            CHECK(F.pow(r, F.characteristic()) == x);
        }
    }
}

TEST_CASE("reduction is a ring map")
{
    for (auto const& [R, P] : small_primes()) {
        ResidueField F(R, P);
        for (long a = -4; a <= 4; ++a)
            for (long b = -3; b <= 3; ++b)
                for (long c = -2; c <= 2; ++c) {
                    Elem x(R, a, R.is_rational() ? 0 : b), y(R, c, R.is_rational() ? 0 : 1);
                    CHECK(F.reduce(x * y) == F.mul(F.reduce(x), F.reduce(y)));
                    CHECK(F.reduce(x + y) == F.add(F.reduce(x), F.reduce(y)));
                    bool in_P = x.is_zero() || valuation(R, x, P) > 0;
                    CHECK(F.is_zero(F.reduce(x)) == in_P);
                    CHECK(F.reduce(F.lift(F.reduce(x))) == F.reduce(x));
                }
    }
}

TEST_CASE("roots against enumeration")
{
    for (auto const& [R, P] : small_primes()) {
        ResidueField F(R, P);
        auto els = F.elements();
        // a few fixed polynomials, compared with brute force
        std::vector<FqPoly> polys{
            {F.from_int(1), F.zero(), F.one()},
            {F.from_int(-2), F.zero(), F.zero(), F.one()},
            {F.from_int(3), F.from_int(1), F.from_int(2), F.one()},
            {F.zero(), F.from_int(-1), F.zero(), F.one()},
        };
        if (P.residue_degree() == 2)
            polys.push_back({F.neg(Fq{0, 1}), F.zero(), F.one()});
        for (auto const& f : polys) {
            std::vector<Fq> expect;
            for (auto const& x : els) {
                Fq acc = F.zero();
                for (std::size_t i = f.size(); i-- > 0;)
                    acc = F.add(F.mul(acc, x), f[i]);
                if (F.is_zero(acc))
                    expect.push_back(x);
            }
            std::sort(expect.begin(), expect.end());
            CHECK(F.roots(f) == expect);
        }
    }
}

TEST_CASE("roots in a large prime field")
{
    NumberRing Z;
    PrimeIdeal P(10007, Splitting::rational);
    ResidueField F(Z, P);
    std::vector<Fq> rs{F.from_int(3), F.from_int(77), F.from_int(9001), F.from_int(5000)};
    FqPoly f = from_roots(F, rs);
    // times an irreducible quadratic: -1 is a non-residue since 10007 = 3 mod 4
    f = F.poly_mul(f, {F.one(), F.zero(), F.one()});
    std::sort(rs.begin(), rs.end());
    CHECK(F.roots(f) == rs);
    // repeated roots are reported once
    CHECK(F.roots(F.poly_mul(from_roots(F, {F.from_int(2)}), from_roots(F, {F.from_int(2)}))) ==
          std::vector<Fq>{F.from_int(2)});

    // degree two over a large inert prime
    NumberRing Ri = NumberRing::quadratic(-1);
    PrimeIdeal Q = primes_above(Ri, 10007).front();
    REQUIRE(Q.residue_degree() == 2);
    ResidueField G(Ri, Q);
    std::vector<Fq> s{Fq{1, 2}, Fq{4000, 17}, Fq{0, 1}};
    auto got = G.roots(from_roots(G, s));
    std::sort(s.begin(), s.end());
    CHECK(got == s);
    // Frobenius-conjugate pair a +- b*i: the polynomial has coefficients in F_p
    std::vector<Fq> conj{Fq{12, 345}, Fq{12, 10007 - 345}};
    FqPoly f2 = from_roots(G, conj);
    CHECK(f2[1].b == 0);
    CHECK(f2[0].b == 0);
    std::sort(conj.begin(), conj.end());
    CHECK(G.roots(f2) == conj);
}

TEST_CASE("local rings")
{
    for (auto const& [R, P] : small_primes()) {
        LocalRing L(R, P, 7);
        Elem pi = uniformizer(R, P);
        for (int k = 0; k <= 5; ++k) {
            Elem x = scalar(R, 1);
            for (int i = 0; i < k; ++i)
                x = x * pi;
            Elem u = Elem(R, 1, 0) + pi * scalar(R, 3);
            Elem z = x * u;
            CHECK(L.val(L.from(z)) == std::min(valuation(R, z, P), 7));
            auto ui = L.inv(L.from(u));
            CHECK(L.val(L.sub(L.mul(ui, L.from(u)), L.from(scalar(R, 1)))) == 7);
        }
        CHECK(L.val(L.from(scalar(R, 0))) == 7);
        // lift is congruent mod P^N
        Elem e = Elem(R, 5, R.is_rational() ? 0 : 3);
        Elem diff = L.lift(L.from(e)) - e;
        CHECK((diff.is_zero() || valuation(R, diff, P) >= 7));
    }
    NumberRing Z;
    CHECK_THROWS_AS(LocalRing(Z, PrimeIdeal(5, Splitting::rational), 3).from(Elem(Z, mpq_class(1, 5))), Error);
    CHECK_THROWS_AS(LocalRing(Z, PrimeIdeal(5, Splitting::rational), 3).inv(LocalRing::Elt{10, 0}), Error);
}
