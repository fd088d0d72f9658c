#ifndef KUMMERLOG_LOGDIV_HPP
#define KUMMERLOG_LOGDIV_HPP

#include "kummerlog/numring.hpp"

#include <memory>

namespace kummerlog {

/* A ring with a finite set D of marked primes. Holds its class group. */
class MarkedBase {
    NumberRing ring_;
    std::vector<PrimeIdeal> D_;
    std::shared_ptr<ClassGroup const> cl_;
    SearchLimits lim_;

  public:
    MarkedBase(NumberRing ring, std::vector<PrimeIdeal> D, SearchLimits const& lim = {});

    NumberRing const& ring() const { return ring_; }
    std::vector<PrimeIdeal> const& D() const { return D_; }
    ClassGroup const& class_group() const { return *cl_; }
    SearchLimits const& limits() const { return lim_; }
    bool marked(PrimeIdeal const& P) const;

    bool operator==(MarkedBase const& o) const { return ring_ == o.ring_ && D_ == o.D_; }
};

/* Finite Q-combination of primes, integral away from D. */
struct RationalDivisor {
    std::map<PrimeIdeal, mpq_class> coeffs;

    static RationalDivisor from_ideal(FractionalIdeal const& I);
    RationalDivisor& add(RationalDivisor const& o, mpq_class const& scale = 1);
    bool is_integral() const;
    FractionalIdeal to_ideal() const; // requires is_integral()
    std::string to_string() const;
    bool operator==(RationalDivisor const& o) const { return coeffs == o.coeffs; }
};

RationalDivisor operator+(RationalDivisor a, RationalDivisor const& b);
RationalDivisor operator-(RationalDivisor a, RationalDivisor const& b);
RationalDivisor operator*(mpq_class const& k, RationalDivisor a);

/* Coefficients on D in [0,1). Every prime of D is present. */
struct FracDivisorModZ {
    std::map<PrimeIdeal, mpq_class> coeffs;

    bool is_zero() const;
    std::string to_string() const;
    bool operator==(FracDivisorModZ const& o) const { return coeffs == o.coeffs; }
};

/* A class of DivRat(S, D) modulo principal divisors, kept in reduced form:
 * fractional parts on D, and the class of the integral remainder in
 * coordinates of the class group. */
class LogPicClass {
    std::shared_ptr<MarkedBase const> base_;
    std::map<PrimeIdeal, mpq_class> frac_;
    std::vector<mpz_class> cls_;

    LogPicClass(std::shared_ptr<MarkedBase const> base, std::map<PrimeIdeal, mpq_class> frac,
                std::vector<mpz_class> cls);
    friend LogPicClass log_pic_class(std::shared_ptr<MarkedBase const> const&, RationalDivisor const&);

  public:
    MarkedBase const& base() const { return *base_; }
    std::shared_ptr<MarkedBase const> const& base_ptr() const { return base_; }
    std::map<PrimeIdeal, mpq_class> const& fractional_part() const { return frac_; }
    std::vector<mpz_class> const& class_coordinates() const { return cls_; }

    /* the canonical divisor of the class */
    RationalDivisor representative() const;
    bool is_trivial() const;

    LogPicClass operator+(LogPicClass const& o) const;
    LogPicClass operator-() const;
    LogPicClass operator-(LogPicClass const& o) const { return *this + (-o); }
    LogPicClass scaled(mpz_class const& k) const;
    bool operator==(LogPicClass const& o) const;
    bool operator!=(LogPicClass const& o) const { return !(*this == o); }
};

LogPicClass log_pic_class(std::shared_ptr<MarkedBase const> const& base, RationalDivisor const& d);
bool class_equal(LogPicClass const& a, LogPicClass const& b);
mpz_class order_of_class(LogPicClass const& c);
FracDivisorModZ nu(LogPicClass const& c);

/* Element of pic(S)/n with respect to the class-group generators. */
struct ClassModN {
    std::vector<mpz_class> moduli; // gcd(d_i, n) for each generator
    std::vector<mpz_class> coords;
    bool is_zero() const;
    std::string to_string() const;
};

ClassModN theta_n(MarkedBase const& base, FracDivisorModZ const& w, long n);
RationalDivisor n_lifting(MarkedBase const& base, FracDivisorModZ const& w, long n);

/* For w in ker theta_n: an ideal W and a generator g with div(g) = M - n*W,
 * M the canonical n-lifting. nullopt when no such W exists. */
struct LiftWitness {
    FractionalIdeal W;
    Elem generator;
};
std::optional<LiftWitness> n_lifting_witness(MarkedBase const& base, FracDivisorModZ const& w, long n);

struct FppfGroup {
    long n = 1;
    UnitsModN units;                  // O_U^* / n
    std::vector<mpz_class> pic_torsion; // invariant factors of pic(U)[n]
    mpz_class order() const;
};

FppfGroup kummer_fppf_group(NumberRing const& ring, std::vector<PrimeIdeal> const& inverted, long n,
                            SearchLimits const& lim = {});

struct KummerLogGroup {
    long n = 1;
    mpz_class order;              // |H^1_pl(S, mu_n)| * |ker theta_n|
    mpz_class fppf_part_order;    // |H^1_pl(S, mu_n)|
    mpz_class kernel_order;
    std::vector<std::pair<FracDivisorModZ, long>> kernel_generators;
    std::vector<FracDivisorModZ> kernel; // every element, lexicographic order
    mpz_class open_order;         // |H^1_pl(U, mu_n)|
    bool consistent() const { return order == open_order; }
};

/* Throws a consistency failure when the two orders differ unless verify is false. */
KummerLogGroup kummer_log_group(MarkedBase const& base, long n, bool verify = true);

} // namespace kummerlog

#endif
