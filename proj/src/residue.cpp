#include "kummerlog/residue.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"

#include <algorithm>

namespace kummerlog {

namespace {

// fields this small are searched exhaustively
mpz_class const kEnumerationLimit = 4096;

// x = (A + B w)/den with den = p^j * u; returns (A, B, j, u)
struct Split {
    mpz_class A, B, u;
    unsigned j;
};

Split split_denominator(Elem const& x, mpz_class const& p)
{
    mpz_class den = x.denominator();
    Split s;
    s.A = mpq_class(x.a() * den).get_num();
    s.B = mpq_class(x.b() * den).get_num();
    s.j = 0;
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        ++s.j;
    }
    s.u = den;
    return s;
}

} // namespace

int val_or_inf(NumberRing const& ring, Elem const& x, PrimeIdeal const& P)
{
    return x.is_zero() ? kInfiniteValuation : valuation(ring, x, P);
}

// ------------------------------------------------------------ residue field

ResidueField::ResidueField(NumberRing ring, PrimeIdeal P) : ring_(std::move(ring)), P_(std::move(P)), p_(P_.p())
{
    q_ = P_.norm();
}

Fq ResidueField::from_int(mpz_class const& n) const { return {mod(n, p_), 0}; }

Fq ResidueField::add(Fq const& x, Fq const& y) const { return {mod(x.a + y.a, p_), mod(x.b + y.b, p_)}; }
Fq ResidueField::sub(Fq const& x, Fq const& y) const { return {mod(x.a - y.a, p_), mod(x.b - y.b, p_)}; }
Fq ResidueField::neg(Fq const& x) const { return {mod(-x.a, p_), mod(-x.b, p_)}; }

Fq ResidueField::mul(Fq const& x, Fq const& y) const
{
    if (degree() == 1)
        return {mod(x.a * y.a, p_), 0};
    mpz_class bb = x.b * y.b;
    return {mod(x.a * y.a - ring_.m() * bb, p_), mod(x.a * y.b + x.b * y.a + ring_.t() * bb, p_)};
}

Fq ResidueField::inv(Fq const& x) const
{
    if (is_zero(x))
        throw invalid_input("division_by_zero", "inverse of zero in the residue field");
    if (degree() == 1)
        return {inverse_mod(x.a, p_), 0};
    // conjugate over norm
    mpz_class n = mod(x.a * x.a + ring_.t() * x.a * x.b + ring_.m() * x.b * x.b, p_);
    mpz_class ni = inverse_mod(n, p_);
    return {mod((x.a + x.b * ring_.t()) * ni, p_), mod(-x.b * ni, p_)};
}

Fq ResidueField::pow(Fq x, mpz_class e) const
{
    Fq r = one();
    if (e < 0) {
        x = inv(x);
        e = -e;
    }
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Fq ResidueField::reduce(Elem const& x) const
{
    LocalRing loc(ring_, P_, 1);
    LocalRing::Elt e = loc.from(x);
    if (degree() == 2)
        return {mod(e.a, p_), mod(e.b, p_)};
    if (P_.kind() == Splitting::ramified)
        return {mod(e.a + e.b * P_.residue_of_w(), p_), 0};
    return {mod(e.a, p_), 0};
}

Elem ResidueField::lift(Fq const& x) const
{
    return Elem(ring_, mpq_class(x.a), mpq_class(x.b));
}

std::vector<Fq> ResidueField::elements() const
{
    if (q_ > 1000000)
        throw unsupported("field_too_large", "residue field of size " + q_.get_str() + " is too large to enumerate");
    std::vector<Fq> out;
    for (mpz_class b = 0; b < (degree() == 2 ? p_ : mpz_class(1)); ++b)
        for (mpz_class a = 0; a < p_; ++a)
            out.push_back({a, b});
    return out;
}

Fq ResidueField::pth_root(Fq const& x) const
{
    // Frobenius has order degree(); its inverse is x -> x^(q/p)
    return pow(x, q_ / p_);
}

std::string ResidueField::to_string(Fq const& x) const
{
    return Elem(ring_, mpq_class(x.a), mpq_class(x.b)).to_string();
}

// -------------------------------------------------------------- polynomials

FqPoly ResidueField::trim(FqPoly f) const
{
    while (!f.empty() && is_zero(f.back()))
        f.pop_back();
    return f;
}

FqPoly ResidueField::poly_mul(FqPoly const& f, FqPoly const& g) const
{
    if (f.empty() || g.empty())
        return {};
    FqPoly h(f.size() + g.size() - 1, zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = add(h[i + j], mul(f[i], g[j]));
    return trim(h);
}

namespace {

std::pair<FqPoly, FqPoly> divmod(ResidueField const& F, FqPoly f, FqPoly g)
{
    f = F.trim(f);
    g = F.trim(g);
    if (g.empty())
        throw invalid_input("division_by_zero", "polynomial division by zero");
    if (f.size() < g.size())
        return {{}, f};
    FqPoly q(f.size() - g.size() + 1, F.zero());
    Fq lead_inv = F.inv(g.back());
    for (std::size_t k = f.size(); k-- >= g.size();) {
        Fq c = F.mul(f[k], lead_inv);
        std::size_t shift = k - (g.size() - 1);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
        if (k == 0)
            break;
    }
    return {F.trim(q), F.trim(f)};
}

} // namespace

FqPoly ResidueField::poly_mod(FqPoly f, FqPoly const& g) const { return divmod(*this, std::move(f), g).second; }
FqPoly ResidueField::poly_div(FqPoly f, FqPoly const& g) const { return divmod(*this, std::move(f), g).first; }

FqPoly ResidueField::poly_gcd(FqPoly f, FqPoly g) const
{
    f = trim(f);
    g = trim(g);
    while (!g.empty()) {
        FqPoly r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty()) {
        Fq li = inv(f.back());
        for (auto& c : f)
            c = mul(c, li);
    }
    return f;
}

FqPoly ResidueField::poly_powmod(FqPoly base, mpz_class e, FqPoly const& m) const
{
    FqPoly r{one()};
    base = poly_mod(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = poly_mod(poly_mul(r, base), m);
        base = poly_mod(poly_mul(base, base), m);
        e >>= 1;
    }
    return r;
}

std::vector<Fq> ResidueField::roots(FqPoly f) const
{
    f = trim(f);
    if (f.empty())
        throw invalid_input("zero_polynomial", "roots of the zero polynomial");
    std::vector<Fq> out;
    if (f.size() == 1)
        return out;
    auto eval = [&](Fq const& x) {
        Fq acc = zero();
        for (std::size_t i = f.size(); i-- > 0;)
            acc = add(mul(acc, x), f[i]);
        return acc;
    };
    if (q_ <= kEnumerationLimit) {
        for (auto const& x : elements())
            if (is_zero(eval(x)))
                out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    }
    // product of the distinct linear factors: gcd(f, X^q - X)
    FqPoly xq = poly_powmod({zero(), one()}, q_, f);
    xq.resize(std::max<std::size_t>(xq.size(), 2), zero());
    xq[1] = sub(xq[1], one());
    FqPoly g = poly_gcd(f, trim(xq));
    // equal-degree splitting, deterministic shifts
    std::vector<FqPoly> stack{g};
    mpz_class const half = (q_ - 1) / 2;
    while (!stack.empty()) {
        FqPoly h = stack.back();
        stack.pop_back();
        if (h.size() <= 1)
            continue;
        if (h.size() == 2) {
            out.push_back(neg(mul(h[0], inv(h[1]))));
            continue;
        }
        bool split = false;
        for (mpz_class c = 0; c < 1000 && !split; ++c) {
            // shifts outside F_p, so Frobenius-conjugate roots separate
            Fq shift = degree() == 2 ? Fq{mod(c, p_), mod(c + 1, p_)} : from_int(c);
            FqPoly s = poly_powmod({shift, one()}, half, h);
            if (s.empty())
                continue;
            s[0] = sub(s[0], one());
            FqPoly d = poly_gcd(h, trim(s));
            if (d.size() > 1 && d.size() < h.size()) {
                stack.push_back(d);
                stack.push_back(poly_div(h, d));
                split = true;
            }
        }
        if (!split)
            throw unsupported("root_finding", "could not split a polynomial over the residue field");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------- local ring

LocalRing::LocalRing(NumberRing ring, PrimeIdeal P, int precision)
    : ring_(std::move(ring)), P_(std::move(P)), N_(std::max(precision, 1))
{
    M_ = P_.kind() == Splitting::ramified ? static_cast<unsigned>((N_ + 1) / 2) : static_cast<unsigned>(N_);
    mod_ = pow(P_.p(), M_);
    if (P_.kind() == Splitting::split)
        root_ = lifted_root(ring_, P_, M_);
}

LocalRing::Elt LocalRing::from(Elem const& x) const
{
    mpz_class const& p = P_.p();
    Split s = split_denominator(x, p);
    mpz_class ui = inverse_mod(s.u, mod_);
    mpz_class pj = pow(p, s.j);
    bool embedded = P_.kind() == Splitting::split || P_.kind() == Splitting::rational;
    if (embedded) {
        mpz_class big = pow(p, M_ + s.j);
        mpz_class r = P_.kind() == Splitting::split ? lifted_root(ring_, P_, M_ + s.j) : mpz_class(0);
        mpz_class v = mod(s.A + s.B * r, big);
        if (!mpz_divisible_p(v.get_mpz_t(), pj.get_mpz_t()))
            throw invalid_input("not_integral", x.to_string() + " is not integral at " + P_.to_string());
        return {mod(v / pj * ui, mod_), 0};
    }
    if (!mpz_divisible_p(s.A.get_mpz_t(), pj.get_mpz_t()) || !mpz_divisible_p(s.B.get_mpz_t(), pj.get_mpz_t()))
        throw invalid_input("not_integral", x.to_string() + " is not integral at " + P_.to_string());
    return {mod(s.A / pj * ui, mod_), mod(s.B / pj * ui, mod_)};
}

LocalRing::Elt LocalRing::add(Elt const& x, Elt const& y) const { return {mod(x.a + y.a, mod_), mod(x.b + y.b, mod_)}; }
LocalRing::Elt LocalRing::sub(Elt const& x, Elt const& y) const { return {mod(x.a - y.a, mod_), mod(x.b - y.b, mod_)}; }

LocalRing::Elt LocalRing::mul(Elt const& x, Elt const& y) const
{
    mpz_class bb = x.b * y.b;
    return {mod(x.a * y.a - ring_.m() * bb, mod_), mod(x.a * y.b + x.b * y.a + ring_.t() * bb, mod_)};
}

LocalRing::Elt LocalRing::inv(Elt const& x) const
{
    mpz_class n = mod(x.a * x.a + ring_.t() * x.a * x.b + ring_.m() * x.b * x.b, mod_);
    if (gcd(n, P_.p()) != 1)
        throw invalid_input("not_unit", "inverting a non-unit in the local ring");
    mpz_class ni = inverse_mod(n, mod_);
    return {mod((x.a + x.b * ring_.t()) * ni, mod_), mod(-x.b * ni, mod_)};
}

int LocalRing::val(Elt const& x) const
{
    mpz_class const& p = P_.p();
    if (P_.kind() == Splitting::split || P_.kind() == Splitting::rational)
        return x.a == 0 ? N_ : std::min(N_, valuation(x.a, p));
    if (x.a == 0 && x.b == 0)
        return N_;
    int j = std::min(x.a == 0 ? kInfiniteValuation : valuation(x.a, p),
                     x.b == 0 ? kInfiniteValuation : valuation(x.b, p));
    if (P_.kind() == Splitting::inert)
        return std::min(N_, j);
    mpz_class pj = pow(p, static_cast<unsigned long>(j));
    mpz_class a = x.a / pj, b = x.b / pj;
    int extra = mod(a + b * P_.residue_of_w(), p) == 0 ? 1 : 0;
    return std::min(N_, 2 * j + extra);
}

Elem LocalRing::lift(Elt const& x) const
{
    return Elem(ring_, mpq_class(x.a), mpq_class(x.b));
}

} // namespace kummerlog
