#ifndef KUMMERLOG_NUMRING_HPP
#define KUMMERLOG_NUMRING_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace kummerlog {

/* Z, or the maximal order Z[w] of Q(sqrt d). The generator w satisfies
 * w^2 = t*w - m:  w = (1+sqrt d)/2 when d = 1 mod 4, else w = sqrt d. */
class NumberRing {
    bool rational_ = true;
    mpz_class d_ = 1;
    mpz_class t_ = 0, m_ = 0;
    mpz_class disc_ = 1;

  public:
    NumberRing() = default;
    static NumberRing integers() { return NumberRing(); }
    static NumberRing quadratic(mpz_class const& d);

    bool is_rational() const { return rational_; }
    bool is_imaginary() const { return !rational_ && d_ < 0; }
    bool is_real_quadratic() const { return !rational_ && d_ > 0; }
    mpz_class const& d() const { return d_; }
    mpz_class const& t() const { return t_; }
    mpz_class const& m() const { return m_; }
    mpz_class const& discriminant() const { return disc_; }
    int degree() const { return rational_ ? 1 : 2; }

    std::string to_string() const; // "Z" or "Q(sqrt -5)"

    bool operator==(NumberRing const& o) const
    {
        return rational_ == o.rational_ && d_ == o.d_;
    }
    bool operator!=(NumberRing const& o) const { return !(*this == o); }
};

/* a + b*w in the fraction field. */
class Elem {
    NumberRing ring_;
    mpq_class a_ = 0, b_ = 0;

  public:
    Elem() = default;
    Elem(NumberRing ring, mpq_class a, mpq_class b = 0);

    NumberRing const& ring() const { return ring_; }
    mpq_class const& a() const { return a_; }
    mpq_class const& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_integral() const;
    bool is_rational() const { return b_ == 0; }

    Elem conjugate() const;
    mpq_class norm() const;
    mpq_class trace() const;
    Elem inverse() const;

    Elem operator-() const { return Elem(ring_, -a_, -b_); }
    friend Elem operator+(Elem const& x, Elem const& y);
    friend Elem operator-(Elem const& x, Elem const& y);
    friend Elem operator*(Elem const& x, Elem const& y);
    friend Elem operator/(Elem const& x, Elem const& y);
    Elem& operator+=(Elem const& y) { return *this = *this + y; }
    Elem& operator-=(Elem const& y) { return *this = *this - y; }
    Elem& operator*=(Elem const& y) { return *this = *this * y; }
    Elem& operator/=(Elem const& y) { return *this = *this / y; }
    Elem pow(long e) const;

    bool operator==(Elem const& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(Elem const& o) const { return !(*this == o); }

    /* least positive integer c with c*x integral */
    mpz_class denominator() const;

    std::string to_string() const; // "1/2-3*w"
};

Elem scalar(NumberRing const& ring, mpq_class const& q);

enum class Splitting { rational, split, inert, ramified };

/* A nonzero prime of a NumberRing. For residue degree one the prime is
 * (p, w - r) with r the residue of w; inert and rational primes are (p). */
class PrimeIdeal {
    mpz_class p_;
    Splitting kind_ = Splitting::rational;
    mpz_class r_ = 0;

  public:
    PrimeIdeal() = default;
    PrimeIdeal(mpz_class p, Splitting kind, mpz_class r = 0);

    mpz_class const& p() const { return p_; }
    Splitting kind() const { return kind_; }
    mpz_class const& residue_of_w() const { return r_; }
    int residue_degree() const { return kind_ == Splitting::inert ? 2 : 1; }
    int ramification() const { return kind_ == Splitting::ramified ? 2 : 1; }
    mpz_class norm() const { return residue_degree() == 2 ? p_ * p_ : p_; }

    std::string to_string() const;

    auto key() const { return std::tie(p_, kind_, r_); }
    bool operator<(PrimeIdeal const& o) const { return key() < o.key(); }
    bool operator==(PrimeIdeal const& o) const { return key() == o.key(); }
    bool operator!=(PrimeIdeal const& o) const { return !(*this == o); }
};

std::vector<PrimeIdeal> primes_above(NumberRing const& ring, mpz_class const& p);

/* Resolve the ideal (p, alpha) (alpha integral) to a prime; throws when
 * it is not prime. The one-argument form resolves (p). */
PrimeIdeal prime_from_generators(NumberRing const& ring, mpz_class const& p,
                                 std::optional<Elem> const& alpha);

PrimeIdeal conjugate(NumberRing const& ring, PrimeIdeal const& P);

/* v_P(x) for nonzero x */
int valuation(NumberRing const& ring, Elem const& x, PrimeIdeal const& P);

/* An element of P \ P^2. */
Elem uniformizer(NumberRing const& ring, PrimeIdeal const& P);

/* Root of w^2 - t*w + m modulo p^k lifting the residue of a degree-one P. */
mpz_class lifted_root(NumberRing const& ring, PrimeIdeal const& P, unsigned k);

using FractionalIdeal = std::map<PrimeIdeal, long>;

FractionalIdeal ideal_add(FractionalIdeal a, FractionalIdeal const& b, long scale = 1);
FractionalIdeal ideal_scale(FractionalIdeal a, long k);
mpq_class ideal_norm(FractionalIdeal const& I);
std::string to_string(FractionalIdeal const& I);

FractionalIdeal factor_element(NumberRing const& ring, Elem const& x);

/* Integral ideal as the Z-module a*Z + (b + c*w)*Z, 0 <= b < a, c | a, c | b. */
struct IdealBasis {
    mpz_class a, b, c;
    mpz_class norm() const { return a * c; }
    bool contains(NumberRing const& ring, Elem const& x) const;
};

IdealBasis ideal_basis(NumberRing const& ring, FractionalIdeal const& integral_ideal);

struct SearchLimits {
    unsigned long unit_iterations = 100000;
    unsigned long principal_candidates = 20000000;
};

/* Fundamental unit > 1 of a real quadratic ring (continued fractions). */
Elem fundamental_unit(NumberRing const& ring, SearchLimits const& lim = {});

/* Generator of I when I is principal. */
std::optional<Elem> is_principal(NumberRing const& ring, FractionalIdeal const& I,
                                 SearchLimits const& lim = {});

struct IdealClassGroup {
    std::vector<mpz_class> invariants; // each > 1
    std::vector<FractionalIdeal> generators;
    mpz_class order() const;
};

/* Class group with a discrete-logarithm facility. */
class ClassGroup {
    NumberRing ring_;
    SearchLimits lim_;
    std::vector<PrimeIdeal> base_; // prime ideals below the Minkowski bound
    std::vector<std::vector<mpz_class>> base_logs_;
    IdealClassGroup group_;

  public:
    ClassGroup(NumberRing const& ring, SearchLimits const& lim = {});

    NumberRing const& ring() const { return ring_; }
    IdealClassGroup const& group() const { return group_; }
    mpz_class order() const { return group_.order(); }

    /* coordinates of [I] with respect to group().generators */
    std::vector<mpz_class> dlog(FractionalIdeal const& I) const;
    std::vector<mpz_class> dlog(PrimeIdeal const& P) const;
    std::vector<mpz_class> reduce(std::vector<mpz_class> v) const;
    bool is_trivial(std::vector<mpz_class> const& v) const;

    /* Product of generator powers realizing the coordinates. */
    FractionalIdeal ideal_of(std::vector<mpz_class> const& coords) const;
};

IdealClassGroup class_group(NumberRing const& ring, SearchLimits const& lim = {});

/* Cl modulo the subgroup generated by the classes of D. */
IdealClassGroup pic_of_open(ClassGroup const& cl, std::vector<PrimeIdeal> const& D);
IdealClassGroup pic_of_open(NumberRing const& ring, std::vector<PrimeIdeal> const& D,
                            SearchLimits const& lim = {});

struct UnitsModN {
    std::vector<mpz_class> invariants; // cyclic factor orders, factors equal to 1 dropped
    std::vector<Elem> representatives; // one per factor
    mpz_class order() const;
};

/* O_{K,S}^* / n */
UnitsModN units_mod_n(NumberRing const& ring, std::vector<PrimeIdeal> const& S, long n,
                      SearchLimits const& lim = {});

/* Generator and order of the roots of unity. */
std::pair<Elem, long> roots_of_unity(NumberRing const& ring);

} // namespace kummerlog

#endif
