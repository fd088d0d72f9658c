#ifndef KUMMERLOG_PARSE_HPP
#define KUMMERLOG_PARSE_HPP

#include "kummerlog/elliptic.hpp"
#include "kummerlog/logdiv.hpp"

/* Literal syntax; see docs/grammar.md. All functions throw ParseError with
 * the offending position, or a typed Error for well-formed but invalid input
 * (a non-prime ideal, a singular curve). */

namespace kummerlog {

NumberRing parse_ring(std::string const& s);
Elem parse_element(NumberRing const& R, std::string const& s);
PrimeIdeal parse_prime(NumberRing const& R, std::string const& s);
std::vector<PrimeIdeal> parse_prime_list(NumberRing const& R, std::string const& s);
RationalDivisor parse_divisor(NumberRing const& R, std::string const& s);
EllipticCurve parse_curve(NumberRing const& R, std::string const& s);
CurvePoint parse_point(NumberRing const& R, std::string const& s);

} // namespace kummerlog

#endif
