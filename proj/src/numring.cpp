#include "kummerlog/numring.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"
#include "kummerlog/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace kummerlog {

// ---------------------------------------------------------------- rings

NumberRing NumberRing::quadratic(mpz_class const& d)
{
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw invalid_input("bad_discriminant",
                            "Q(sqrt " + d.get_str() + ") needs squarefree d not in {0, 1}");
    NumberRing r;
    r.rational_ = false;
    r.d_ = d;
    if (mod(d, 4) == 1) {
        r.t_ = 1;
        r.m_ = (1 - d) / 4;
        r.disc_ = d;
    } else {
        r.t_ = 0;
        r.m_ = -d;
        r.disc_ = 4 * d;
    }
    return r;
}

std::string NumberRing::to_string() const
{
    return rational_ ? "Z" : "Q(sqrt " + d_.get_str() + ")";
}

// ------------------------------------------------------------- elements

Elem::Elem(NumberRing ring, mpq_class a, mpq_class b) : ring_(std::move(ring)), a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
    if (ring_.is_rational() && b_ != 0)
        throw invalid_input("not_in_ring", "w is not defined over Z");
}

Elem scalar(NumberRing const& ring, mpq_class const& q) { return Elem(ring, q, 0); }

bool Elem::is_integral() const { return is_integer(a_) && is_integer(b_); }

Elem Elem::conjugate() const { return Elem(ring_, a_ + b_ * ring_.t(), -b_); }

mpq_class Elem::norm() const
{
    return a_ * a_ + ring_.t() * a_ * b_ + ring_.m() * b_ * b_;
}

mpq_class Elem::trace() const { return 2 * a_ + ring_.t() * b_; }

Elem Elem::inverse() const
{
    if (is_zero())
        throw invalid_input("division_by_zero", "inverse of zero");
    mpq_class n = norm();
    Elem c = conjugate();
    return Elem(ring_, c.a_ / n, c.b_ / n);
}

Elem operator+(Elem const& x, Elem const& y) { return Elem(x.ring_, x.a_ + y.a_, x.b_ + y.b_); }
Elem operator-(Elem const& x, Elem const& y) { return Elem(x.ring_, x.a_ - y.a_, x.b_ - y.b_); }

Elem operator*(Elem const& x, Elem const& y)
{
    mpq_class bb = x.b_ * y.b_;
    return Elem(x.ring_, x.a_ * y.a_ - x.ring_.m() * bb,
                x.a_ * y.b_ + x.b_ * y.a_ + x.ring_.t() * bb);
}

Elem operator/(Elem const& x, Elem const& y) { return x * y.inverse(); }

Elem Elem::pow(long e) const
{
    Elem base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Elem r = scalar(ring_, 1);
    while (k) {
        if (k & 1)
            r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

mpz_class Elem::denominator() const
{
    return lcm(a_.get_den(), b_.get_den());
}

std::string Elem::to_string() const
{
    if (b_ == 0)
        return kummerlog::to_string(a_);
    std::string s;
    if (a_ != 0)
        s = kummerlog::to_string(a_);
    mpq_class ab = abs(b_);
    std::string coef = ab == 1 ? "w" : kummerlog::to_string(ab) + "*w";
    if (b_ < 0)
        s += "-" + coef;
    else
        s += (s.empty() ? "" : "+") + coef;
    return s;
}

// --------------------------------------------------------------- primes

PrimeIdeal::PrimeIdeal(mpz_class p, Splitting kind, mpz_class r)
    : p_(std::move(p)), kind_(kind), r_(std::move(r))
{
    if (kind_ == Splitting::rational || kind_ == Splitting::inert)
        r_ = 0;
}

std::string PrimeIdeal::to_string() const
{
    if (residue_degree() == 2 || kind_ == Splitting::rational)
        return "(" + p_.get_str() + ")";
    mpz_class a = mod(-r_, p_);
    return "(" + p_.get_str() + ", " + (a == 0 ? std::string("w") : a.get_str() + "+w") + ")";
}

namespace {

mpz_class min_poly(NumberRing const& ring, mpz_class const& x)
{
    return x * x - ring.t() * x + ring.m();
}

} // namespace

std::vector<PrimeIdeal> primes_above(NumberRing const& ring, mpz_class const& p)
{
    if (!is_prime(p))
        throw invalid_input("not_prime", p.get_str() + " is not a prime");
    if (ring.is_rational())
        return {PrimeIdeal(p, Splitting::rational)};
    std::vector<mpz_class> roots;
    for (mpz_class r = 0; p == 2 && r < 2; ++r)
        if (mod(min_poly(ring, r), p) == 0)
            roots.push_back(r);
    if (p != 2) {
        if (auto s = sqrt_mod(ring.discriminant(), p)) {
            mpz_class inv2 = inverse_mod(2, p);
            roots.push_back(mod((ring.t() + *s) * inv2, p));
            mpz_class r2 = mod((ring.t() - *s) * inv2, p);
            if (r2 != roots.front())
                roots.push_back(r2);
        }
    }
    std::sort(roots.begin(), roots.end());
    if (roots.empty())
        return {PrimeIdeal(p, Splitting::inert)};
    if (mod(ring.discriminant(), p) == 0)
        return {PrimeIdeal(p, Splitting::ramified, roots.front())};
    return {PrimeIdeal(p, Splitting::split, roots[0]), PrimeIdeal(p, Splitting::split, roots[1])};
}

PrimeIdeal prime_from_generators(NumberRing const& ring, mpz_class const& p,
                                 std::optional<Elem> const& alpha)
{
    auto primes = primes_above(ring, p);
    std::string shown = "(" + p.get_str() + (alpha ? ", " + alpha->to_string() : "") + ")";
    bool in_p = true;
    if (alpha) {
        if (!alpha->is_integral())
            throw invalid_input("not_integral", "generator " + alpha->to_string() + " is not integral");
        in_p = mod(alpha->a().get_num(), p) == 0 && mod(alpha->b().get_num(), p) == 0;
    }
    if (in_p) {
        if (primes.size() == 1 && primes[0].ramification() == 1)
            return primes[0];
        throw invalid_input("not_prime_ideal", shown + " is not a prime ideal of " + ring.to_string());
    }
    for (auto const& P : primes) {
        if (P.residue_degree() != 1 || P.kind() == Splitting::rational)
            continue;
        if (mod(alpha->a().get_num() + alpha->b().get_num() * P.residue_of_w(), p) == 0)
            return P;
    }
    throw invalid_input("not_prime_ideal", shown + " is not a prime ideal of " + ring.to_string());
}

PrimeIdeal conjugate(NumberRing const& ring, PrimeIdeal const& P)
{
    if (P.kind() != Splitting::split)
        return P;
    return PrimeIdeal(P.p(), Splitting::split, mod(ring.t() - P.residue_of_w(), P.p()));
}

mpz_class lifted_root(NumberRing const& ring, PrimeIdeal const& P, unsigned k)
{
    mpz_class const pk = pow(P.p(), std::max(k, 1u));
    mpz_class r = P.residue_of_w();
    if (P.kind() != Splitting::split)
        return mod(r, pk);
    for (unsigned prec = 1; prec < k; prec *= 2) {
        mpz_class fp = 2 * r - ring.t();
        r = mod(r - min_poly(ring, r) * inverse_mod(fp, pk), pk);
    }
    return mod(r, pk);
}

namespace {

int integral_valuation(NumberRing const& ring, mpz_class const& A, mpz_class const& B, PrimeIdeal const& P)
{
    mpz_class const& p = P.p();
    switch (P.kind()) {
    case Splitting::rational:
        return valuation(A, p);
    case Splitting::inert:
        if (B == 0)
            return valuation(A, p);
        if (A == 0)
            return valuation(B, p);
        return std::min(valuation(A, p), valuation(B, p));
    case Splitting::ramified:
        return valuation(mpz_class((Elem(ring, A, B)).norm().get_num()), p);
    case Splitting::split: {
        int k = valuation(mpz_class(Elem(ring, A, B).norm().get_num()), p);
        unsigned prec = static_cast<unsigned>(k) + 1;
        mpz_class pk = pow(p, prec);
        mpz_class v = mod(A + B * lifted_root(ring, P, prec), pk);
        if (v == 0)
            throw consistency_failure("valuation", "split valuation exceeded norm bound");
        return valuation(v, p);
    }
    }
    return 0;
}

} // namespace

int valuation(NumberRing const& ring, Elem const& x, PrimeIdeal const& P)
{
    if (x.is_zero())
        throw invalid_input("zero_valuation", "valuation of zero");
    mpz_class den = x.denominator();
    mpz_class A = mpq_class(x.a() * den).get_num();
    mpz_class B = mpq_class(x.b() * den).get_num();
    return integral_valuation(ring, A, B, P) - P.ramification() * valuation(den, P.p());
}

Elem uniformizer(NumberRing const& ring, PrimeIdeal const& P)
{
    if (P.kind() == Splitting::ramified)
        return Elem(ring, -mpq_class(P.residue_of_w()), 1);
    return scalar(ring, mpq_class(P.p()));
}

// -------------------------------------------------------------- ideals

FractionalIdeal ideal_add(FractionalIdeal a, FractionalIdeal const& b, long scale)
{
    for (auto const& [P, e] : b) {
        long& slot = a[P];
        slot += scale * e;
        if (slot == 0)
            a.erase(P);
    }
    return a;
}

FractionalIdeal ideal_scale(FractionalIdeal a, long k)
{
    if (k == 0)
        return {};
    for (auto& [P, e] : a)
        e *= k;
    return a;
}

mpq_class ideal_norm(FractionalIdeal const& I)
{
    mpq_class n = 1;
    for (auto const& [P, e] : I) {
        mpz_class pe = pow(P.norm(), static_cast<unsigned long>(e < 0 ? -e : e));
        if (e > 0)
            n *= pe;
        else
            n /= pe;
    }
    return n;
}

std::string to_string(FractionalIdeal const& I)
{
    if (I.empty())
        return "(1)";
    std::string s;
    for (auto const& [P, e] : I) {
        if (!s.empty())
            s += " * ";
        s += P.to_string();
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

FractionalIdeal factor_element(NumberRing const& ring, Elem const& x)
{
    if (x.is_zero())
        throw invalid_input("zero_element", "cannot factor zero");
    std::map<mpz_class, int> primes;
    mpz_class den = x.denominator();
    if (den != 1)
        primes = factor(den);
    mpq_class n = (x * scalar(ring, mpq_class(den))).norm();
    if (abs(n) != 1)
        for (auto const& [p, e] : factor(n.get_num()))
            primes[p] += e;
    FractionalIdeal out;
    for (auto const& [p, e] : primes)
        for (auto const& P : primes_above(ring, p))
            if (int v = valuation(ring, x, P); v != 0)
                out[P] = v;
    return out;
}

bool IdealBasis::contains(NumberRing const& ring, Elem const& x) const
{
    if (!x.is_integral())
        return false;
    mpz_class xa = x.a().get_num(), xb = x.b().get_num();
    if (ring.is_rational())
        return xb == 0 && mod(xa, a) == 0;
    if (mod(xb, c) != 0)
        return false;
    mpz_class k = xb / c;
    return mod(xa - k * b, a) == 0;
}

namespace {

IdealBasis prime_basis(PrimeIdeal const& P)
{
    if (P.residue_degree() == 2)
        return {P.p(), 0, P.p()};
    return {P.p(), mod(-P.residue_of_w(), P.p()), 1};
}

IdealBasis multiply(NumberRing const& ring, IdealBasis const& I, IdealBasis const& J)
{
    Elem ib[2] = {scalar(ring, mpq_class(I.a)), Elem(ring, I.b, I.c)};
    Elem jb[2] = {scalar(ring, mpq_class(J.a)), Elem(ring, J.b, J.c)};
    std::vector<std::vector<mpz_class>> rows;
    for (auto const& x : ib)
        for (auto const& y : jb) {
            Elem z = x * y;
            rows.push_back({z.b().get_num(), z.a().get_num()});
        }
    auto h = lattice_basis(rows);
    if (h.size() != 2)
        throw consistency_failure("ideal_basis", "ideal product lost rank");
    return {h[1][1], h[0][1], h[0][0]};
}

} // namespace

IdealBasis ideal_basis(NumberRing const& ring, FractionalIdeal const& I)
{
    if (ring.is_rational()) {
        mpz_class a = 1;
        for (auto const& [P, e] : I) {
            if (e < 0)
                throw invalid_input("not_integral", "ideal_basis needs an integral ideal");
            a *= pow(P.p(), static_cast<unsigned long>(e));
        }
        return {a, 0, 1};
    }
    IdealBasis acc{1, 0, 1};
    for (auto const& [P, e] : I) {
        if (e < 0)
            throw invalid_input("not_integral", "ideal_basis needs an integral ideal");
        IdealBasis pb = prime_basis(P);
        for (long k = 0; k < e; ++k)
            acc = multiply(ring, acc, pb);
    }
    return acc;
}

// ---------------------------------------------------------------- units

namespace {

// floor((P + sqrt D) / Q) for nonsquare D > 0 and Q != 0
mpz_class quadratic_floor(mpz_class const& P, mpz_class const& D, mpz_class const& Q)
{
    mpz_class s = isqrt(D);
    mpz_class r;
    if (Q > 0)
        mpz_fdiv_q(r.get_mpz_t(), mpz_class(P + s).get_mpz_t(), Q.get_mpz_t());
    else {
        mpz_class aq = -Q;
        mpz_fdiv_q(r.get_mpz_t(), mpz_class(-P - s - 1).get_mpz_t(), aq.get_mpz_t());
    }
    return r;
}

long double approx(NumberRing const& ring, Elem const& x)
{
    long double sd = std::sqrt(static_cast<long double>(ring.d().get_d()));
    long double w = ring.t() == 1 ? (1 + sd) / 2 : sd;
    return static_cast<long double>(x.a().get_d()) + static_cast<long double>(x.b().get_d()) * w;
}

} // namespace

Elem fundamental_unit(NumberRing const& ring, SearchLimits const& lim)
{
    if (!ring.is_real_quadratic())
        throw invalid_input("not_real_quadratic", "fundamental unit needs a real quadratic ring");
    // continued fraction of -w' = (P + sqrt D)/Q
    mpz_class P = ring.t() == 1 ? -1 : 0;
    mpz_class Q = ring.t() == 1 ? 2 : 1;
    mpz_class const& D = ring.d();
    mpz_class p_prev = 0, p_cur = 1, q_prev = 1, q_cur = 0;
    for (unsigned long it = 0; it < lim.unit_iterations; ++it) {
        mpz_class a = quadratic_floor(P, D, Q);
        mpz_class p_next = a * p_cur + p_prev;
        mpz_class q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        Elem e(ring, mpq_class(p_cur), mpq_class(q_cur));
        if (abs(e.norm()) == 1)
            return e;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw unsupported("bound_exceeded", "fundamental unit search exceeded " +
                                            std::to_string(lim.unit_iterations) + " steps");
}

std::pair<Elem, long> roots_of_unity(NumberRing const& ring)
{
    if (!ring.is_rational() && ring.d() == -1)
        return {Elem(ring, 0, 1), 4};
    if (!ring.is_rational() && ring.d() == -3)
        return {Elem(ring, 0, 1), 6};
    return {scalar(ring, -1), 2};
}

// ---------------------------------------------------------- principality

std::optional<Elem> is_principal(NumberRing const& ring, FractionalIdeal const& I, SearchLimits const& lim)
{
    if (ring.is_rational()) {
        mpq_class g = 1;
        for (auto const& [P, e] : I) {
            mpz_class pe = pow(P.p(), static_cast<unsigned long>(e < 0 ? -e : e));
            if (e > 0)
                g *= pe;
            else
                g /= pe;
        }
        return scalar(ring, g);
    }

    // I = J * (scale) with J integral and free of rational prime factors
    mpq_class scale = 1;
    FractionalIdeal J;
    std::map<mpz_class, std::vector<std::pair<PrimeIdeal, long>>> by_p;
    for (auto const& [P, e] : I)
        by_p[P.p()].push_back({P, e});
    for (auto const& [p, list] : by_p) {
        long rational_power = 0;
        PrimeIdeal const& P0 = list.front().first;
        if (P0.kind() == Splitting::inert) {
            rational_power = list.front().second;
        } else if (P0.kind() == Splitting::ramified) {
            long e = list.front().second;
            long half = e >= 0 ? e / 2 : -((-e + 1) / 2);
            rational_power = half;
            if (e - 2 * half)
                J[P0] = 1;
        } else {
            long e1 = 0, e2 = 0;
            PrimeIdeal P1 = P0, P2 = conjugate(ring, P0);
            if (P2 < P1)
                std::swap(P1, P2);
            for (auto const& [P, e] : list)
                (P == P1 ? e1 : e2) = e;
            long mn = std::min(e1, e2);
            rational_power = mn;
            if (e1 - mn)
                J[P1] = e1 - mn;
            if (e2 - mn)
                J[P2] = e2 - mn;
        }
        mpz_class pk = pow(p, static_cast<unsigned long>(std::abs(rational_power)));
        if (rational_power >= 0)
            scale *= pk;
        else
            scale /= pk;
    }

    IdealBasis basis = ideal_basis(ring, J);
    mpz_class const N = basis.norm();
    Elem const sc = scalar(ring, scale);
    if (N == 1)
        return sc;

    mpz_class const disc = ring.discriminant();
    mpz_class const absdisc = abs(disc);
    mpz_class bound;
    if (ring.is_imaginary()) {
        bound = isqrt(4 * N / absdisc);
    } else {
        long double eps = approx(ring, fundamental_unit(ring, lim));
        long double b = std::sqrt(4.0L * static_cast<long double>(N.get_d()) * eps /
                                  static_cast<long double>(disc.get_d()));
        if (!std::isfinite(b) || b > static_cast<long double>(lim.principal_candidates))
            throw unsupported("bound_exceeded", "principality search box too large");
        bound = mpz_class(static_cast<double>(b)) + 1;
    }
    if (bound > lim.principal_candidates)
        throw unsupported("bound_exceeded", "principality search box too large");

    std::vector<int> signs = ring.is_imaginary() ? std::vector<int>{1} : std::vector<int>{1, -1};
    for (mpz_class b = -bound; b <= bound; ++b) {
        for (int sgn : signs) {
            mpz_class dd = disc * b * b + 4 * sgn * N;
            if (dd < 0 || !is_square(dd))
                continue;
            mpz_class s = isqrt(dd);
            for (mpz_class num : {mpz_class(-ring.t() * b + s), mpz_class(-ring.t() * b - s)}) {
                if (mod(num, 2) != 0)
                    continue;
                Elem g(ring, mpq_class(num / 2), mpq_class(b));
                if (basis.contains(ring, g))
                    return g * sc;
            }
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------- class groups

mpz_class IdealClassGroup::order() const
{
    mpz_class h = 1;
    for (auto const& d : invariants)
        h *= d;
    return h;
}

namespace {

FractionalIdeal ideal_from_exponents(std::vector<PrimeIdeal> const& base, std::vector<mpz_class> const& e)
{
    FractionalIdeal I;
    for (std::size_t j = 0; j < base.size(); ++j)
        if (e[j] != 0)
            I[base[j]] = e[j].get_si();
    return I;
}

IntMatrix integer_inverse(IntMatrix const& v)
{
    RatMatrix inv = inverse(to_rational(v));
    IntMatrix out(v.rows(), v.cols());
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) {
            if (inv(i, j).get_den() != 1)
                throw consistency_failure("unimodular", "transform is not unimodular");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

// every coordinate vector of a finite abelian group with the given invariants
void enumerate(std::vector<mpz_class> const& inv, std::function<bool(std::vector<mpz_class> const&)> const& f)
{
    std::vector<mpz_class> c(inv.size(), 0);
    for (;;) {
        if (f(c))
            return;
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < inv[i])
                break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size())
            return;
    }
}

} // namespace

ClassGroup::ClassGroup(NumberRing const& ring, SearchLimits const& lim) : ring_(ring), lim_(lim)
{
    if (ring.is_rational())
        return;
    long double const absdisc = std::fabs(static_cast<long double>(ring.discriminant().get_d()));
    long double const bound = ring.is_imaginary() ? 2.0L / std::numbers::pi_v<long double> * std::sqrt(absdisc)
                                                  : std::sqrt(absdisc) / 2.0L;
    for (long p : primes_up_to(static_cast<long>(std::floor(bound))))
        for (auto const& P : primes_above(ring, p))
            if (P.residue_degree() == 1)
                base_.push_back(P);
    if (base_.empty())
        return;

    // relation lattice, built one prime at a time
    std::size_t const r = base_.size();
    std::vector<std::vector<mpz_class>> relations;
    for (std::size_t i = 0; i < r; ++i) {
        // structure of the subgroup spanned by base_[0..i)
        std::vector<mpz_class> sub_inv;
        IntMatrix sub_vinv;
        if (i > 0) {
            IntMatrix rel(i, i);
            for (std::size_t a = 0; a < i; ++a)
                for (std::size_t b = 0; b < i; ++b)
                    rel(a, b) = relations[a][b];
            SmithForm sf = smith_normal_form(rel);
            sub_inv = sf.diagonal;
            sub_vinv = integer_inverse(sf.V);
        }
        std::vector<mpz_class> found;
        for (long k = 1; found.empty(); ++k) {
            if (k > 4096)
                throw unsupported("bound_exceeded", "class group relation search exceeded its budget");
            enumerate(sub_inv, [&](std::vector<mpz_class> const& c) {
                std::vector<mpz_class> x(i, 0);
                for (std::size_t a = 0; a < i; ++a)
                    for (std::size_t b = 0; b < i; ++b)
                        x[b] += c[a] * sub_vinv(a, b);
                FractionalIdeal test;
                test[base_[i]] = k;
                for (std::size_t b = 0; b < i; ++b)
                    if (x[b] != 0)
                        test = ideal_add(test, FractionalIdeal{{base_[b], 1}}, -x[b].get_si());
                if (is_principal(ring_, test, lim_)) {
                    found.assign(r, 0);
                    for (std::size_t b = 0; b < i; ++b)
                        found[b] = -x[b];
                    found[i] = k;
                    return true;
                }
                return false;
            });
        }
        for (auto& row : relations)
            row.resize(r, 0);
        relations.push_back(found);
    }

    IntMatrix rel(r, r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            rel(a, b) = relations[a][b];
    SmithForm sf = smith_normal_form(rel);
    IntMatrix vinv = integer_inverse(sf.V);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < r; ++k)
        if (sf.diagonal[k] > 1)
            kept.push_back(k);

    for (auto k : kept)
        group_.invariants.push_back(sf.diagonal[k]);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<mpz_class> lg;
        for (std::size_t idx = 0; idx < kept.size(); ++idx)
            lg.push_back(mod(sf.V(j, kept[idx]), sf.diagonal[kept[idx]]));
        base_logs_.push_back(lg);
    }
    for (std::size_t idx = 0; idx < kept.size(); ++idx) {
        std::vector<mpz_class> unit(kept.size(), 0);
        unit[idx] = 1;
        // prefer a single prime when one realizes the generator
        auto hit = std::find(base_logs_.begin(), base_logs_.end(), unit);
        if (hit != base_logs_.end()) {
            group_.generators.push_back({{base_[static_cast<std::size_t>(hit - base_logs_.begin())], 1}});
        } else {
            std::vector<mpz_class> e(r);
            for (std::size_t j = 0; j < r; ++j)
                e[j] = vinv(kept[idx], j);
            group_.generators.push_back(ideal_from_exponents(base_, e));
        }
    }
}

std::vector<mpz_class> ClassGroup::reduce(std::vector<mpz_class> v) const
{
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mod(v[i], group_.invariants[i]);
    return v;
}

bool ClassGroup::is_trivial(std::vector<mpz_class> const& v) const
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (mod(v[i], group_.invariants[i]) != 0)
            return false;
    return true;
}

FractionalIdeal ClassGroup::ideal_of(std::vector<mpz_class> const& coords) const
{
    FractionalIdeal I;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            I = ideal_add(I, group_.generators[i], coords[i].get_si());
    return I;
}

std::vector<mpz_class> ClassGroup::dlog(PrimeIdeal const& P) const
{
    std::size_t const k = group_.invariants.size();
    if (k == 0 || P.kind() == Splitting::inert)
        return std::vector<mpz_class>(k, 0);
    auto it = std::find(base_.begin(), base_.end(), P);
    if (it != base_.end())
        return base_logs_[static_cast<std::size_t>(it - base_.begin())];
    std::optional<std::vector<mpz_class>> out;
    enumerate(group_.invariants, [&](std::vector<mpz_class> const& c) {
        FractionalIdeal test = ideal_add({{P, 1}}, ideal_of(c), -1);
        if (is_principal(ring_, test, lim_)) {
            out = c;
            return true;
        }
        return false;
    });
    if (!out)
        throw consistency_failure("class_group", "no class found for " + P.to_string());
    return *out;
}

std::vector<mpz_class> ClassGroup::dlog(FractionalIdeal const& I) const
{
    std::vector<mpz_class> v(group_.invariants.size(), 0);
    for (auto const& [P, e] : I) {
        auto lp = dlog(P);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += e * lp[i];
    }
    return reduce(v);
}

IdealClassGroup class_group(NumberRing const& ring, SearchLimits const& lim)
{
    return ClassGroup(ring, lim).group();
}

IdealClassGroup pic_of_open(ClassGroup const& cl, std::vector<PrimeIdeal> const& D)
{
    auto const& inv = cl.group().invariants;
    std::size_t const k = inv.size();
    IdealClassGroup out;
    if (k == 0)
        return out;
    IntMatrix a(k + D.size(), k);
    for (std::size_t i = 0; i < k; ++i)
        a(i, i) = inv[i];
    for (std::size_t j = 0; j < D.size(); ++j) {
        auto lg = cl.dlog(D[j]);
        for (std::size_t i = 0; i < k; ++i)
            a(k + j, i) = lg[i];
    }
    SmithForm sf = smith_normal_form(a);
    IntMatrix vinv = integer_inverse(sf.V);
    for (std::size_t i = 0; i < k; ++i) {
        if (sf.diagonal[i] <= 1)
            continue;
        out.invariants.push_back(sf.diagonal[i]);
        std::vector<mpz_class> c(k);
        for (std::size_t j = 0; j < k; ++j)
            c[j] = mod(vinv(i, j), inv[j]);
        out.generators.push_back(cl.ideal_of(c));
    }
    return out;
}

IdealClassGroup pic_of_open(NumberRing const& ring, std::vector<PrimeIdeal> const& D, SearchLimits const& lim)
{
    return pic_of_open(ClassGroup(ring, lim), D);
}

mpz_class UnitsModN::order() const
{
    mpz_class h = 1;
    for (auto const& d : invariants)
        h *= d;
    return h;
}

UnitsModN units_mod_n(NumberRing const& ring, std::vector<PrimeIdeal> const& S, long n, SearchLimits const& lim)
{
    if (n < 1)
        throw invalid_input("bad_n", "n must be at least 1");
    UnitsModN out;
    auto add = [&](mpz_class const& ord, Elem const& rep) {
        if (ord > 1) {
            out.invariants.push_back(ord);
            out.representatives.push_back(rep);
        }
    };
    auto [zeta, w] = roots_of_unity(ring);
    add(gcd(mpz_class(w), mpz_class(n)), zeta);
    if (ring.is_real_quadratic())
        add(n, fundamental_unit(ring, lim));

    if (S.empty())
        return out;
    ClassGroup cl(ring, lim);
    auto const& inv = cl.group().invariants;
    std::size_t const s = S.size(), k = inv.size();
    std::vector<std::vector<mpz_class>> kernel;
    if (k == 0) {
        for (std::size_t j = 0; j < s; ++j) {
            std::vector<mpz_class> e(s, 0);
            e[j] = 1;
            kernel.push_back(e);
        }
    } else {
        // kernel of Z^S -> Cl
        IntMatrix a(k, s + k);
        for (std::size_t j = 0; j < s; ++j) {
            auto lg = cl.dlog(S[j]);
            for (std::size_t i = 0; i < k; ++i)
                a(i, j) = lg[i];
        }
        for (std::size_t i = 0; i < k; ++i)
            a(i, s + i) = inv[i];
        SmithForm sf = smith_normal_form(a);
        std::size_t rank = 0;
        for (auto const& d : sf.diagonal)
            if (d != 0)
                ++rank;
        std::vector<std::vector<mpz_class>> gens;
        for (std::size_t c = rank; c < s + k; ++c) {
            std::vector<mpz_class> e(s);
            for (std::size_t j = 0; j < s; ++j)
                e[j] = sf.V(j, c);
            gens.push_back(e);
        }
        kernel = lattice_basis(gens);
    }
    if (kernel.size() != s)
        throw consistency_failure("s_units", "S-unit lattice has the wrong rank");
    for (auto const& e : kernel) {
        FractionalIdeal I;
        for (std::size_t j = 0; j < s; ++j)
            if (e[j] != 0)
                I[S[j]] = e[j].get_si();
        auto g = is_principal(ring, I, lim);
        if (!g)
            throw consistency_failure("s_units", "kernel ideal " + to_string(I) + " is not principal");
        add(n, *g);
    }
    return out;
}

} // namespace kummerlog
