#include "doctest.h"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"
#include "kummerlog/kodaira.hpp"

#include <algorithm>
#include <set>

using namespace kummerlog;

namespace {

ComponentGroup group_of(KodairaTag t, int n = 0) { return component_group_from_matrix(fiber_geometry({t, n})); }

mpq_class frac_of(mpq_class q)
{
    q.canonicalize();
    return frac(q);
}

} // namespace

TEST_CASE("In: cyclic of order n with form ij/n")
{
    for (int n = 1; n <= 12; ++n) {
        auto G = group_of(KodairaTag::In, n);
        CHECK(G.order() == n);
        CHECK(G.invariants().size() == (n == 1 ? 0u : 1u));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(G.pair_components(i, j) == frac_of(mpq_class(i * j, n)));
    }
}

TEST_CASE("orders match the classification")
{
    struct Row {
        KodairaTag t;
        int n;
        long order;
        std::size_t comps;
    };
    std::vector<Row> rows{{KodairaTag::I0, 0, 1, 1},  {KodairaTag::II, 0, 1, 1},   {KodairaTag::III, 0, 2, 2},
                          {KodairaTag::IV, 0, 3, 3},  {KodairaTag::I0s, 0, 4, 5},  {KodairaTag::IVs, 0, 3, 7},
                          {KodairaTag::IIIs, 0, 2, 8}, {KodairaTag::IIs, 0, 1, 9}};
    for (int n = 1; n <= 8; ++n)
        rows.push_back({KodairaTag::Ins, n, 4, static_cast<std::size_t>(5 + n)});
    for (auto const& r : rows) {
        KodairaType k{r.t, r.n};
        auto F = fiber_geometry(k);
        CHECK_NOTHROW(F.validate());
        CHECK(F.size() == r.comps);
        auto G = component_group_from_matrix(F);
        CHECK(G.order() == r.order);
        CHECK(classical_component_order(k) == r.order);
        // multiplicity-one components represent every class exactly once
        std::set<std::vector<mpz_class>> seen;
        std::size_t simple = 0;
        for (std::size_t c = 0; c < F.size(); ++c)
            if (G.is_multiplicity_one(static_cast<int>(c))) {
                ++simple;
                seen.insert(G.coordinates(static_cast<int>(c)));
            }
        CHECK(simple == static_cast<std::size_t>(r.order));
        CHECK(seen.size() == simple);
    }
}

TEST_CASE("In*: structure by parity")
{
    for (int n = 0; n <= 9; ++n) {
        auto G = group_of(n == 0 ? KodairaTag::I0s : KodairaTag::Ins, n);
        if (n % 2)
            CHECK(G.invariants() == std::vector<mpz_class>{4});
        else
            CHECK(G.invariants() == std::vector<mpz_class>{2, 2});
    }
}

// Oracle: discriminant forms of the root lattices A_{n-1}, D_{n+4}, E6, E7,
// negated (the fiber matrix is negative definite). For D_m the classes are
// v (near end) with b(v,v) = 1, spinors s, s' with b(s,s) = m/4 and
// b(s,s') = (m-2)/4, and b(v,s) = 1/2.
TEST_CASE("forms against root-lattice discriminant forms")
{
    mpq_class const half(1, 2);
    for (int n = 0; n <= 9; ++n) {
        auto G = group_of(n == 0 ? KodairaTag::I0s : KodairaTag::Ins, n);
        int m = n + 4;
        CHECK(G.pair_components(1, 1) == 0);
        CHECK(G.pair_components(1, 2) == half);
        CHECK(G.pair_components(1, 3) == half);
        CHECK(G.pair_components(2, 2) == frac_of(mpq_class(-m, 4)));
        CHECK(G.pair_components(3, 3) == frac_of(mpq_class(-m, 4)));
        CHECK(G.pair_components(2, 3) == frac_of(mpq_class(-(m - 2), 4)));
        for (int c = 0; c < 4; ++c)
            CHECK(G.pair_components(0, c) == 0);
    }
    // IV = A2, IV* = E6: b(g,g) = 2/3 and 4/3
    auto IV = group_of(KodairaTag::IV);
    CHECK(IV.pair_components(1, 1) == mpq_class(1, 3));
    CHECK(IV.pair_components(2, 2) == mpq_class(1, 3));
    CHECK(IV.pair_components(1, 2) == mpq_class(2, 3));
    auto IVs = group_of(KodairaTag::IVs);
    CHECK(IVs.pair_components(1, 1) == mpq_class(2, 3));
    CHECK(IVs.pair_components(2, 2) == mpq_class(2, 3));
    CHECK(IVs.pair_components(1, 2) == mpq_class(1, 3));
    // III = A1, III* = E7: b(g,g) = 1/2 and 3/2
    CHECK(group_of(KodairaTag::III).pair_components(1, 1) == half);
    CHECK(group_of(KodairaTag::IIIs).pair_components(1, 1) == half);
}

TEST_CASE("form is symmetric, bilinear and nondegenerate")
{
    std::vector<KodairaType> types{{KodairaTag::In, 6}, {KodairaTag::I0s, 0}, {KodairaTag::Ins, 3},
                                   {KodairaTag::Ins, 4}, {KodairaTag::IVs, 0}, {KodairaTag::III, 0}};
    for (auto const& k : types) {
        auto G = component_group_from_matrix(fiber_geometry(k));
        std::vector<std::vector<mpz_class>> els;
        std::vector<mpz_class> cur(G.invariants().size(), 0);
        // all elements of the group
        for (;;) {
            els.push_back(cur);
            std::size_t i = 0;
            while (i < cur.size() && ++cur[i] == G.invariants()[i])
                cur[i++] = 0;
            if (i == cur.size())
                break;
        }
        CHECK(mpz_class(static_cast<unsigned long>(els.size())) == G.order());
        for (auto const& a : els) {
            bool degenerate = true;
            for (auto const& b : els) {
                CHECK(G.pair(a, b) == G.pair(b, a));
                if (G.pair(a, b) != 0)
                    degenerate = false;
                for (auto const& c : els) {
                    std::vector<mpz_class> bc(b.size());
                    for (std::size_t i = 0; i < b.size(); ++i)
                        bc[i] = b[i] + c[i];
                    CHECK(G.pair(a, bc) == frac_of(G.pair(a, b) + G.pair(a, c)));
                }
            }
            bool zero = std::all_of(a.begin(), a.end(), [](mpz_class const& x) { return x == 0; });
            CHECK(degenerate == zero);
        }
    }
}

TEST_CASE("component_group_from_matrix rejects bad input")
{
    FiberGeometry F;
    F.M = IntMatrix(2, 2);
    F.M(0, 0) = -2;
    F.M(0, 1) = 1;
    F.M(1, 0) = 2;
    F.M(1, 1) = -2;
    F.multiplicity = {1, 1};
    CHECK_THROWS_AS(component_group_from_matrix(F), Error);
}

TEST_CASE("kodaira symbols")
{
    for (std::string s : {"I0", "I5", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*"})
        CHECK(parse_kodaira(s).to_string() == s);
    CHECK_THROWS_AS(parse_kodaira("V"), Error);
}
