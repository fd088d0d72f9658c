#include "doctest.h"

#include <cmath>
#include <numeric>

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"
#include "kummerlog/numring.hpp"

using namespace kummerlog;

namespace {

NumberRing Q(long d) { return NumberRing::quadratic(d); }

// Oracle: class number of an imaginary quadratic order of discriminant
// disc < 0 by counting reduced primitive forms (a, b, c).
long reduced_form_count(long disc)
{
    long h = 0;
    for (long a = 1; 3 * a * a <= -disc; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - disc;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            ++h;
        }
    return h;
}

// Oracle: smallest b > 0 with a^2 + t*a*b + m*b^2 = +-1 by brute force.
std::pair<long, long> brute_unit(long d)
{
    long t = (((d % 4) + 4) % 4 == 1) ? 1 : 0;
    long m = t ? (1 - d) / 4 : -d;
    for (long b = 1;; ++b)
        for (long a = -50 * b - 50; a <= 50 * b + 50; ++a) {
            long n = a * a + t * a * b + m * b * b;
            if (n == 1 || n == -1) {
                double w = t ? (1 + std::sqrt(double(d))) / 2 : std::sqrt(double(d));
                if (a + b * w > 1)
                    return {a, b};
            }
        }
}

} // namespace

TEST_CASE("ring basics")
{
    CHECK(Q(-5).discriminant() == -20);
    CHECK(Q(5).discriminant() == 5);
    CHECK(Q(-3).t() == 1);
    CHECK(Q(-3).m() == 1);
    CHECK_THROWS_AS(NumberRing::quadratic(12), Error);
    CHECK_THROWS_AS(NumberRing::quadratic(1), Error);
    CHECK(Q(-5).to_string() == "Q(sqrt -5)");

    NumberRing r = Q(-5);
    Elem w(r, 0, 1);
    CHECK(w * w == scalar(r, -5));
    Elem x(r, 3, 2);
    CHECK(x.norm() == 9 + 5 * 4);
    CHECK((x * x.inverse()).is_one());
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) * x.pow(2) == scalar(r, 1));
    CHECK(Elem(r, 1, -1).to_string() == "1-w");
    CHECK(Elem(r, mpq_class(1, 2), 3).to_string() == "1/2+3*w");
}

TEST_CASE("splitting matches the Kronecker symbol")
{
    for (long d : {-1, -2, -3, -5, -7, -15, 2, 3, 5, 13, 17}) {
        NumberRing r = Q(d);
        for (long p : primes_up_to(60)) {
            auto ps = primes_above(r, p);
            int k = mpz_kronecker_si(r.discriminant().get_mpz_t(), p);
            long efg = 0;
            for (auto const& P : ps)
                efg += P.ramification() * P.residue_degree();
            CHECK(efg == 2);
            if (k == 0)
                CHECK(ps[0].kind() == Splitting::ramified);
            else if (k == 1)
                CHECK(ps.size() == 2);
            else
                CHECK(ps[0].kind() == Splitting::inert);
        }
    }
}

TEST_CASE("factor_element")
{
    NumberRing z;
    auto f = factor_element(z, scalar(z, 12));
    CHECK(f.size() == 2);
    CHECK(f[PrimeIdeal(2, Splitting::rational)] == 2);
    CHECK(f[PrimeIdeal(3, Splitting::rational)] == 1);
    CHECK_THROWS_AS(factor_element(z, scalar(z, 0)), Error);

    NumberRing r = Q(-5);
    PrimeIdeal p2 = prime_from_generators(r, 2, Elem(r, 1, 1));
    CHECK(p2.to_string() == "(2, 1+w)");
    auto f2 = factor_element(r, scalar(r, 2));
    CHECK(f2.size() == 1);
    CHECK(f2[p2] == 2);
    auto f5 = factor_element(r, Elem(r, 0, 1));
    CHECK(f5.size() == 1);
    CHECK(f5.begin()->first.to_string() == "(5, w)");
    CHECK(f5.begin()->second == 1);

    // multiplicativity, including fractions and split primes
    for (long d : {-5, -1, 7, -23}) {
        NumberRing s = Q(d);
        Elem a(s, mpq_class(3, 2), 7), b(s, -11, mpq_class(2, 5));
        auto fa = factor_element(s, a), fb = factor_element(s, b);
        CHECK(factor_element(s, a * b) == ideal_add(fa, fb));
        CHECK(ideal_norm(fa) == abs(a.norm()));
    }
}

TEST_CASE("prime ideal literals")
{
    NumberRing r = Q(-5);
    CHECK_THROWS_AS(prime_from_generators(r, 2, std::nullopt), Error);
    CHECK_THROWS(prime_from_generators(r, 3, std::optional<Elem>()));
    PrimeIdeal a = prime_from_generators(r, 3, Elem(r, 1, 1));
    PrimeIdeal b = prime_from_generators(r, 3, Elem(r, -1, 1));
    CHECK(a != b);
    CHECK(conjugate(r, a) == b);
    CHECK(prime_from_generators(r, 11, std::nullopt).to_string() == "(11)");
}

TEST_CASE("principality")
{
    NumberRing z;
    auto g = is_principal(z, {{PrimeIdeal(5, Splitting::rational), 1}});
    REQUIRE(g);
    CHECK(*g == scalar(z, 5));

    NumberRing r = Q(-5);
    PrimeIdeal p2 = prime_from_generators(r, 2, Elem(r, 1, 1));
    CHECK_FALSE(is_principal(r, {{p2, 1}}));
    auto g2 = is_principal(r, {{p2, 2}});
    REQUIRE(g2);
    CHECK(factor_element(r, *g2) == FractionalIdeal{{p2, 2}});
    // brute-force oracle: a^2 + 5 b^2 = 2 has no solution
    bool any = false;
    for (int a = -2; a <= 2; ++a)
        for (int b = -1; b <= 1; ++b)
            any = any || a * a + 5 * b * b == 2;
    CHECK_FALSE(any);

    auto g3 = is_principal(r, {{p2, -1}, {prime_from_generators(r, 3, Elem(r, 1, 1)), 1}});
    REQUIRE(g3);
    CHECK(factor_element(r, *g3) == FractionalIdeal{{p2, -1}, {prime_from_generators(r, 3, Elem(r, 1, 1)), 1}});
}

TEST_CASE("class numbers against reduced forms")
{
    for (long d : {-1, -2, -3, -5, -6, -7, -10, -11, -13, -14, -15, -17, -19, -21, -23, -26, -30, -31, -41, -47,
                   -71, -89, -105}) {
        NumberRing r = Q(d);
        ClassGroup cl(r);
        CAPTURE(d);
        CHECK(cl.order() == reduced_form_count(r.discriminant().get_si()));
        auto const& g = cl.group();
        for (std::size_t i = 0; i < g.invariants.size(); ++i) {
            // each generator has exactly the order of its factor
            long ord = g.invariants[i].get_si();
            CHECK(is_principal(r, ideal_scale(g.generators[i], ord)));
            for (long k = 1; k < ord; ++k)
                if (ord % k == 0)
                    CHECK_FALSE(is_principal(r, ideal_scale(g.generators[i], k)));
        }
        // h-th powers are principal
        long h = cl.order().get_si();
        for (long p : {2, 3, 5, 7}) {
            PrimeIdeal P = primes_above(r, p).front();
            CHECK(is_principal(r, {{P, h}}));
        }
    }
}

TEST_CASE("class group examples")
{
    CHECK(class_group(NumberRing()).invariants.empty());
    auto c5 = class_group(Q(-5));
    REQUIRE(c5.invariants.size() == 1);
    CHECK(c5.invariants[0] == 2);
    CHECK(to_string(c5.generators[0]) == "(2, 1+w)");
    CHECK(class_group(Q(-1)).invariants.empty());
    // (Z/2)^2 for discriminant -84
    auto c21 = class_group(Q(-21));
    CHECK(c21.invariants == std::vector<mpz_class>{2, 2});
    // real quadratic, literature values
    CHECK(class_group(Q(10)).order() == 2);
    CHECK(class_group(Q(15)).order() == 2);
    CHECK(class_group(Q(79)).order() == 3);
    CHECK(class_group(Q(82)).order() == 4);
    CHECK(class_group(Q(7)).order() == 1);
}

TEST_CASE("fundamental units")
{
    for (long d : {2, 3, 5, 6, 7, 10, 13, 14, 21, 29, 31, 43}) {
        NumberRing r = Q(d);
        Elem e = fundamental_unit(r);
        CAPTURE(d);
        CHECK(abs(e.norm()) == 1);
        auto [a, b] = brute_unit(d);
        CHECK(e == Elem(r, a, b));
    }
    SearchLimits tight;
    tight.unit_iterations = 2;
    try {
        fundamental_unit(Q(94), tight);
        CHECK(false);
    } catch (Error const& e) {
        CHECK(e.kind() == "bound_exceeded");
    }
}

TEST_CASE("pic of open and units mod n")
{
    NumberRing z;
    PrimeIdeal five(5, Splitting::rational);
    CHECK(pic_of_open(z, {PrimeIdeal(7, Splitting::rational)}).invariants.empty());

    NumberRing r = Q(-5);
    PrimeIdeal p2 = prime_from_generators(r, 2, Elem(r, 1, 1));
    PrimeIdeal p5 = prime_from_generators(r, 5, Elem(r, 0, 1));
    CHECK(pic_of_open(r, {p2}).invariants.empty());
    CHECK(pic_of_open(r, {p5}).invariants == std::vector<mpz_class>{2});

    auto u = units_mod_n(z, {}, 2);
    CHECK(u.order() == 2);
    CHECK(u.representatives[0] == scalar(z, -1));
    auto u5 = units_mod_n(z, {five}, 2);
    CHECK(u5.order() == 4);
    CHECK(u5.representatives[1] == scalar(z, 5));
    auto ui = units_mod_n(Q(-1), {}, 2);
    CHECK(ui.order() == 2);
    CHECK(ui.representatives[0] == Elem(Q(-1), 0, 1));

    // S-unit generators really are S-units
    auto us = units_mod_n(r, {p2, p5}, 3);
    CHECK(us.order() == 9);
    for (auto const& g : us.representatives)
        for (auto const& [P, e] : factor_element(r, g))
            CHECK((P == p2 || P == p5));

    // rank bound for imaginary rings: order divides 2 n^{|S|+1}... checked exactly
    for (long n : {2, 3, 4, 6})
        CHECK(units_mod_n(r, {p2}, n).order() == std::gcd(2L, n) * n);
}
