#ifndef KUMMERLOG_RESIDUE_HPP
#define KUMMERLOG_RESIDUE_HPP

#include "kummerlog/numring.hpp"

#include <vector>

namespace kummerlog {

/* Element of a residue field F_q; b is used only for residue degree 2,
 * where the element is a + b*w mod p. */
struct Fq {
    mpz_class a = 0, b = 0;
    bool operator==(Fq const& o) const { return a == o.a && b == o.b; }
    bool operator!=(Fq const& o) const { return !(*this == o); }
    bool operator<(Fq const& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

/* Polynomials over F_q, lowest coefficient first. */
using FqPoly = std::vector<Fq>;

class ResidueField {
    NumberRing ring_;
    PrimeIdeal P_;
    mpz_class p_, q_;

  public:
    ResidueField(NumberRing ring, PrimeIdeal P);

    mpz_class const& characteristic() const { return p_; }
    mpz_class const& size() const { return q_; }
    int degree() const { return P_.residue_degree(); }

    Fq zero() const { return {}; }
    Fq one() const { return {1, 0}; }
    Fq from_int(mpz_class const& n) const;
    Fq add(Fq const& x, Fq const& y) const;
    Fq sub(Fq const& x, Fq const& y) const;
    Fq neg(Fq const& x) const;
    Fq mul(Fq const& x, Fq const& y) const;
    Fq inv(Fq const& x) const;
    Fq pow(Fq x, mpz_class e) const;
    bool is_zero(Fq const& x) const { return x.a == 0 && x.b == 0; }

    /* reduction of a P-integral element, and a small integral lift */
    Fq reduce(Elem const& x) const;
    Elem lift(Fq const& x) const;

    std::vector<Fq> elements() const;

    /* distinct roots in F_q, sorted */
    std::vector<Fq> roots(FqPoly f) const;
    /* unique p-th root in characteristic p (Frobenius is bijective) */
    Fq pth_root(Fq const& x) const;

    std::string to_string(Fq const& x) const;

    // polynomial helpers
    FqPoly trim(FqPoly f) const;
    FqPoly poly_mul(FqPoly const& f, FqPoly const& g) const;
    FqPoly poly_mod(FqPoly f, FqPoly const& g) const;
    FqPoly poly_div(FqPoly f, FqPoly const& g) const;
    FqPoly poly_gcd(FqPoly f, FqPoly g) const;
    FqPoly poly_powmod(FqPoly base, mpz_class e, FqPoly const& m) const;
};

/* O_P / P^N, realized as (Z/p^M)[w] (inert and ramified primes) or as
 * Z/p^N through the embedding w -> root (split and rational primes). */
class LocalRing {
    NumberRing ring_;
    PrimeIdeal P_;
    int N_;
    unsigned M_;
    mpz_class mod_;
    mpz_class root_; // lifted residue of w, degree-one unramified primes

  public:
    struct Elt {
        mpz_class a = 0, b = 0;
    };

    LocalRing(NumberRing ring, PrimeIdeal P, int precision);

    int precision() const { return N_; }
    Elt from(Elem const& x) const; // x must be P-integral
    Elt add(Elt const& x, Elt const& y) const;
    Elt sub(Elt const& x, Elt const& y) const;
    Elt mul(Elt const& x, Elt const& y) const;
    Elt inv(Elt const& x) const; // x must be a unit
    /* valuation, capped at the precision */
    int val(Elt const& x) const;
    Elem lift(Elt const& x) const;
};

/* v_P with v(0) reported as a large sentinel */
int val_or_inf(NumberRing const& ring, Elem const& x, PrimeIdeal const& P);
constexpr int kInfiniteValuation = 1 << 28;

} // namespace kummerlog

#endif
