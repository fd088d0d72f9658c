#ifndef KUMMERLOG_PAIRING_HPP
#define KUMMERLOG_PAIRING_HPP

#include "kummerlog/logdiv.hpp"
#include "kummerlog/miller.hpp"
#include "kummerlog/tate.hpp"

namespace kummerlog {

/* values in [0,1) */
using MonodromyProfile = std::map<PrimeIdeal, mpq_class>;

mpq_class monodromy_pairing(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y, PrimeIdeal const& s);
MonodromyProfile monodromy_profile(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                   MarkedBase const& B);

struct PairingOptions {
    /* candidate translation points; empty means a small-height search */
    std::vector<CurvePoint> translations;
    long search_height = 5;
    std::size_t max_retries = 16;
    /* multiplies the Miller function (must not be zero) */
    std::optional<Elem> miller_scale;
    /* compare the Miller-valuation route with the intersection route */
    bool cross_check = true;
};

struct LocalTerm {
    mpq_class miller;       // -(1/n) v(g(x+T)/g(T))
    mpq_class intersection; // section intersections plus component correction
};

struct LogPairing {
    long n = 0;
    CurvePoint T;
    RationalDivisor divisor;
    std::map<PrimeIdeal, LocalTerm> local;
    MonodromyProfile profile;
    bool routes_agree = true;
    bool profile_matches = true; // nu(class) == profile
    std::optional<LogPicClass> cls;
};

/* Full computation with both routes; throws on a route mismatch when
 * cross_check is set. The returned class is built from the intersection route. */
LogPairing log_class_pairing_detail(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                    std::shared_ptr<MarkedBase const> const& B, PairingOptions const& opt = {});

LogPicClass log_class_pairing(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                              std::shared_ptr<MarkedBase const> const& B, PairingOptions const& opt = {});

/* subgroup of Phi_s by generating components; absent primes mean 0 */
using ComponentSelection = std::map<PrimeIdeal, std::vector<int>>;

struct IdealClass {
    FractionalIdeal representative;
    std::vector<mpz_class> coordinates; // against the class-group generators
    bool trivial = true;
};

IdealClass class_pairing_restricted(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                    std::shared_ptr<MarkedBase const> const& B, ComponentSelection const& gamma,
                                    ComponentSelection const& gamma_dual, PairingOptions const& opt = {});

/* Translation points that keep x+T and T off the support {O, y}. */
std::vector<CurvePoint> admissible_translations(EllipticCurve const& E, CurvePoint const& x, CurvePoint const& y,
                                                PairingOptions const& opt);

} // namespace kummerlog

#endif
