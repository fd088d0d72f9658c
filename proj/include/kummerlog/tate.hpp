#ifndef KUMMERLOG_TATE_HPP
#define KUMMERLOG_TATE_HPP

#include "kummerlog/elliptic.hpp"
#include "kummerlog/kodaira.hpp"

namespace kummerlog {

struct ReductionData {
    PrimeIdeal prime;
    EllipticCurve minimal_model;
    Iso to_minimal; // from the input model
    KodairaType type;
    FiberGeometry fiber;
    ComponentGroup group;
    long tamagawa = 1;
    int conductor_exponent = 0;
    int disc_valuation = 0; // of the minimal model

    bool good() const { return type.tag == KodairaTag::I0; }
};

ReductionData tate_algorithm(EllipticCurve const& E, PrimeIdeal const& P);

/* Index (into the fiber table of the reduction type) of the component met
 * by the section through pt. */
int reduction_component(EllipticCurve const& E, CurvePoint const& pt, PrimeIdeal const& P);

/* Primes where the curve has bad reduction (minimal model at each prime). */
std::vector<PrimeIdeal> bad_primes(EllipticCurve const& E);

} // namespace kummerlog

#endif
