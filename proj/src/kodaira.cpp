#include "kummerlog/kodaira.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"

#include <algorithm>
#include <cctype>

namespace kummerlog {

std::string KodairaType::to_string() const
{
    switch (tag) {
    case KodairaTag::I0: return "I0";
    case KodairaTag::In: return "I" + std::to_string(n);
    case KodairaTag::II: return "II";
    case KodairaTag::III: return "III";
    case KodairaTag::IV: return "IV";
    case KodairaTag::I0s: return "I0*";
    case KodairaTag::Ins: return "I" + std::to_string(n) + "*";
    case KodairaTag::IVs: return "IV*";
    case KodairaTag::IIIs: return "III*";
    case KodairaTag::IIs: return "II*";
    }
    return "?";
}

KodairaType parse_kodaira(std::string const& s)
{
    static std::pair<char const*, KodairaTag> const fixed[] = {
        {"I0", KodairaTag::I0},    {"II", KodairaTag::II},     {"III", KodairaTag::III},
        {"IV", KodairaTag::IV},    {"I0*", KodairaTag::I0s},   {"IV*", KodairaTag::IVs},
        {"III*", KodairaTag::IIIs}, {"II*", KodairaTag::IIs}};
    for (auto const& [name, tag] : fixed)
        if (s == name)
            return {tag, 0, std::nullopt};
    if (s.size() >= 2 && s[0] == 'I' && std::isdigit(static_cast<unsigned char>(s[1]))) {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 6) {
            int n = std::stoi(digits);
            if (n >= 1)
                return {star ? KodairaTag::Ins : KodairaTag::In, n, std::nullopt};
        }
    }
    throw ParseError("unknown Kodaira symbol '" + s + "'", 0);
}

namespace {

FiberGeometry tree(std::vector<long> mult, std::vector<std::pair<int, int>> const& edges)
{
    FiberGeometry F;
    std::size_t r = mult.size();
    F.M = IntMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        F.M(i, i) = -2;
    for (auto [a, b] : edges) {
        F.M(a, b) += 1;
        F.M(b, a) += 1;
    }
    F.multiplicity = std::move(mult);
    return F;
}

} // namespace

FiberGeometry fiber_geometry(KodairaType const& k)
{
    switch (k.tag) {
    case KodairaTag::I0:
    case KodairaTag::II: {
        FiberGeometry F;
        F.M = IntMatrix(1, 1);
        F.multiplicity = {1};
        return F;
    }
    case KodairaTag::In: {
        if (k.n == 1) {
            FiberGeometry F;
            F.M = IntMatrix(1, 1);
            F.multiplicity = {1};
            return F;
        }
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < k.n; ++i)
            e.emplace_back(i, (i + 1) % k.n);
        return tree(std::vector<long>(k.n, 1), e);
    }
    case KodairaTag::III:
        return tree({1, 1}, {{0, 1}, {0, 1}});
    case KodairaTag::IV:
        return tree({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
    case KodairaTag::I0s:
        return tree({1, 1, 1, 1, 2}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    case KodairaTag::Ins: {
        int n = k.n;
        std::vector<long> mult{1, 1, 1, 1};
        for (int i = 0; i <= n; ++i)
            mult.push_back(2);
        std::vector<std::pair<int, int>> e{{0, 4}, {1, 4}, {2, 4 + n}, {3, 4 + n}};
        for (int i = 0; i < n; ++i)
            e.emplace_back(4 + i, 5 + i);
        return tree(mult, e);
    }
    case KodairaTag::IVs:
        return tree({1, 1, 1, 2, 2, 2, 3}, {{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
    case KodairaTag::IIIs:
        return tree({1, 1, 2, 3, 4, 3, 2, 2}, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {4, 7}});
    case KodairaTag::IIs:
        return tree({1, 2, 3, 4, 5, 6, 4, 2, 3},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}});
    }
    throw consistency_failure("kodaira_table", "unknown Kodaira tag");
}

void FiberGeometry::validate() const
{
    std::size_t r = size();
    auto bad = [](std::string const& why) { return invalid_input("fiber_geometry", "invalid fiber: " + why); };
    if (M.rows() != r || M.cols() != r || r == 0)
        throw bad("matrix size does not match the multiplicities");
    for (std::size_t i = 0; i < r; ++i) {
        if (multiplicity[i] <= 0)
            throw bad("nonpositive multiplicity");
        if (r > 1 && M(i, i) >= 0)
            throw bad("nonnegative self-intersection");
        for (std::size_t j = 0; j < r; ++j) {
            if (M(i, j) != M(j, i))
                throw bad("asymmetric matrix");
            if (i != j && M(i, j) < 0)
                throw bad("negative intersection of distinct components");
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < r; ++j)
            s += M(i, j) * multiplicity[j];
        if (s != 0)
            throw bad("the multiplicity vector is not in the kernel");
    }
    // -M0 positive definite via leading minors (Sylvester)
    std::size_t k = r - 1;
    RatMatrix A(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            A(i, j) = -M(i + 1, j + 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (A(i, i) <= 0)
            throw bad("not negative semidefinite with one-dimensional kernel");
        for (std::size_t row = i + 1; row < k; ++row) {
            mpq_class f = A(row, i) / A(i, i);
            for (std::size_t j = i; j < k; ++j)
                A(row, j) -= f * A(i, j);
        }
    }
}

mpq_class ComponentGroup::frac(mpq_class const& q) { return kummerlog::frac(q); }

mpz_class ComponentGroup::order() const
{
    mpz_class o = 1;
    for (auto const& d : invariants_)
        o *= d;
    return o;
}

bool ComponentGroup::is_multiplicity_one(int c) const
{
    return c >= 0 && static_cast<std::size_t>(c) < mult_.size() && mult_[c] == 1;
}

std::vector<mpz_class> ComponentGroup::coordinates(int c) const
{
    if (!is_multiplicity_one(c))
        throw invalid_input("component", "component " + std::to_string(c) + " does not carry a group element");
    return *coords_[c];
}

mpq_class ComponentGroup::correction(int i, int j) const
{
    if (!is_multiplicity_one(i) || !is_multiplicity_one(j))
        throw invalid_input("component", "components must have multiplicity one");
    if (i == 0 || j == 0)
        return 0;
    return M0inv_(i - 1, j - 1);
}

mpq_class ComponentGroup::pair(std::vector<mpz_class> const& a, std::vector<mpz_class> const& b) const
{
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * b[j] * form_[i][j];
    return frac(s);
}

bool ComponentGroup::in_subgroup(std::vector<mpz_class> const& x, std::vector<std::vector<mpz_class>> const& gens) const
{
    // breadth-first closure; component groups have order at most 4 or n
    std::vector<std::vector<mpz_class>> seen{std::vector<mpz_class>(invariants_.size(), 0)};
    auto norm = [&](std::vector<mpz_class> v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = mod(v[i], invariants_[i]);
        return v;
    };
    for (std::size_t at = 0; at < seen.size(); ++at)
        for (auto const& g : gens) {
            std::vector<mpz_class> s = seen[at];
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] += g[i];
            s = norm(s);
            if (std::find(seen.begin(), seen.end(), s) == seen.end())
                seen.push_back(s);
        }
    return std::find(seen.begin(), seen.end(), norm(x)) != seen.end();
}

ComponentGroup component_group_from_matrix(FiberGeometry const& F)
{
    F.validate();
    ComponentGroup G;
    G.mult_ = F.multiplicity;
    std::size_t r = F.size(), k = r - 1;
    G.coords_.assign(r, std::nullopt);
    if (k == 0) {
        G.coords_[0] = std::vector<mpz_class>{};
        return G;
    }
    IntMatrix M0(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            M0(i, j) = F.M(i + 1, j + 1);
    G.M0inv_ = inverse(to_rational(M0));
    SmithForm snf = smith_normal_form(M0);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < k; ++i)
        if (snf.diagonal[i] != 1) {
            if (snf.diagonal[i] == 0)
                throw consistency_failure("component_group", "degenerate intersection matrix");
            keep.push_back(i);
            G.invariants_.push_back(snf.diagonal[i]);
        }
    // coker(M0): x -> U x reduced modulo the diagonal
    G.coords_[0] = std::vector<mpz_class>(keep.size(), 0);
    for (std::size_t c = 1; c < r; ++c) {
        if (F.multiplicity[c] != 1)
            continue;
        std::vector<mpz_class> v;
        for (std::size_t idx = 0; idx < keep.size(); ++idx)
            v.push_back(mod(snf.U(keep[idx], c - 1), G.invariants_[idx]));
        G.coords_[c] = v;
    }
    for (std::size_t idx = 0; idx < keep.size(); ++idx) {
        int found = -1;
        for (std::size_t c = 1; c < r && found < 0; ++c) {
            if (!G.coords_[c])
                continue;
            bool unit = true;
            for (std::size_t j = 0; j < keep.size(); ++j)
                unit = unit && (*G.coords_[c])[j] == (j == idx ? 1 : 0);
            if (unit)
                found = static_cast<int>(c);
        }
        if (found < 0)
            throw consistency_failure("component_group", "no component realizes a generator");
        G.generators_.push_back(found);
    }
    std::size_t g = G.generators_.size();
    G.form_.assign(g, std::vector<mpq_class>(g, 0));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            G.form_[i][j] = G.pair_components(G.generators_[i], G.generators_[j]);
    // symmetric and nondegenerate on the group
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            if (G.form_[i][j] != G.form_[j][i])
                throw consistency_failure("component_group", "pairing form is not symmetric");
    for (std::size_t c = 1; c < r; ++c) {
        if (!G.coords_[c])
            continue;
        bool zero = true;
        for (auto const& x : *G.coords_[c])
            zero = zero && x == 0;
        if (zero)
            continue;
        bool hit = false;
        for (std::size_t c2 = 1; c2 < r && !hit; ++c2)
            hit = G.coords_[c2] && G.pair_components(static_cast<int>(c), static_cast<int>(c2)) != 0;
        if (!hit)
            throw consistency_failure("component_group", "pairing form is degenerate");
    }
    return G;
}

long classical_component_order(KodairaType const& k)
{
    switch (k.tag) {
    case KodairaTag::In: return k.n;
    case KodairaTag::I0s:
    case KodairaTag::Ins: return 4;
    case KodairaTag::III:
    case KodairaTag::IIIs: return 2;
    case KodairaTag::IV:
    case KodairaTag::IVs: return 3;
    default: return 1;
    }
}

} // namespace kummerlog
