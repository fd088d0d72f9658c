#include "kummerlog/integer.hpp"

#include "kummerlog/error.hpp"

#include <algorithm>

namespace kummerlog {

int valuation(mpz_class const& n, mpz_class const& p)
{
    if (n == 0)
        throw invalid_input("zero_valuation", "valuation of zero");
    mpz_class m = n;
    return static_cast<int>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

int valuation(mpq_class const& q, mpz_class const& p)
{
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_prime(mpz_class const& n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

mpz_class pollard_brent(mpz_class const& n, unsigned long c)
{
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    unsigned long const m = 64;
    auto f = [&](mpz_class const& v) { return mod(v * v + c, n); };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mod(q * abs(x - y), n);
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(mpz_class n, std::map<mpz_class, int>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    if (is_square(n)) {
        mpz_class r = isqrt(n);
        factor_rec(r, out);
        factor_rec(r, out);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        mpz_class d = pollard_brent(n, c);
        if (d != n && d != 1) {
            factor_rec(d, out);
            factor_rec(n / d, out);
            return;
        }
    }
}

} // namespace

std::map<mpz_class, int> factor(mpz_class const& n0)
{
    if (n0 == 0)
        throw invalid_input("zero_factor", "cannot factor zero");
    std::map<mpz_class, int> out;
    mpz_class n = abs(n0);
    for (unsigned long p = 2; p < 10000 && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out[mpz_class(p)] += e;
        }
    }
    factor_rec(n, out);
    return out;
}

bool is_squarefree(mpz_class const& n)
{
    if (n == 0)
        return false;
    for (auto const& [p, e] : factor(n))
        if (e > 1)
            return false;
    return true;
}

bool is_square(mpz_class const& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class isqrt(mpz_class const& n)
{
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<long> primes_up_to(long bound)
{
    std::vector<long> out;
    if (bound < 2)
        return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[static_cast<std::size_t>(i)])
            continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i)
            sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

mpz_class mod(mpz_class const& a, mpz_class const& m)
{
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class inverse_mod(mpz_class const& a, mpz_class const& m)
{
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw invalid_input("not_invertible", "element is not invertible modulo " + m.get_str());
    return r;
}

mpz_class pow(mpz_class const& b, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Tonelli-Shanks
std::optional<mpz_class> sqrt_mod(mpz_class const& a0, mpz_class const& p)
{
    mpz_class a = mod(a0, p);
    if (a == 0)
        return mpz_class(0);
    if (p == 2)
        return a;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        return std::nullopt;
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;
    auto powm = [&](mpz_class const& b, mpz_class const& e) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    mpz_class c = powm(z, q);
    mpz_class x = powm(a, (q + 1) / 2);
    mpz_class t = powm(a, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class tt = t;
        while (tt != 1) {
            tt = mod(tt * tt, p);
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b = mod(b * b, p);
        x = mod(x * b, p);
        c = mod(b * b, p);
        t = mod(t * c, p);
        m = i;
    }
    return x;
}

mpz_class floor(mpq_class const& q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpq_class frac(mpq_class const& q)
{
    mpq_class r = q - mpq_class(floor(q));
    r.canonicalize();
    return r;
}

bool is_integer(mpq_class const& q)
{
    return q.get_den() == 1;
}

std::string to_string(mpq_class const& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(mpz_class const& z)
{
    return z.get_str();
}

} // namespace kummerlog
