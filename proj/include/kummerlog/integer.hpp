#ifndef KUMMERLOG_INTEGER_HPP
#define KUMMERLOG_INTEGER_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kummerlog {

/* p-adic valuation of a nonzero integer or rational. */
int valuation(mpz_class const& n, mpz_class const& p);
int valuation(mpq_class const& q, mpz_class const& p);

/* Factorization of |n| (n != 0) into primes, trial division followed by
 * Pollard-Brent. Deterministic. */
std::map<mpz_class, int> factor(mpz_class const& n);

bool is_prime(mpz_class const& n);
bool is_squarefree(mpz_class const& n);
bool is_square(mpz_class const& n);
mpz_class isqrt(mpz_class const& n);

std::vector<long> primes_up_to(long bound);

/* Square root of a modulo an odd prime p, or nullopt. */
std::optional<mpz_class> sqrt_mod(mpz_class const& a, mpz_class const& p);

mpz_class mod(mpz_class const& a, mpz_class const& m);     // in [0, m)
mpz_class inverse_mod(mpz_class const& a, mpz_class const& m);
mpz_class pow(mpz_class const& b, unsigned long e);

mpz_class floor(mpq_class const& q);
/* q mod 1, in [0,1) */
mpq_class frac(mpq_class const& q);
bool is_integer(mpq_class const& q);

/* "a/b" or "a" */
std::string to_string(mpq_class const& q);
std::string to_string(mpz_class const& z);

} // namespace kummerlog

#endif
