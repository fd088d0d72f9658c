#ifndef KUMMERLOG_REPORT_HPP
#define KUMMERLOG_REPORT_HPP

#include "kummerlog/error.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

/* Structured reports shared by the command-line tool and the Python module.
 * Every document carries schema_version, the command echo, a result object,
 * a verdicts object (name -> bool) and provenance notes. Inputs are literal
 * strings in the grammar of docs/grammar.md. */

namespace kummerlog::report {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

struct LogpicArgs {
    std::string ring = "Z";
    std::string D;
    std::optional<std::string> div;
};

struct MunArgs {
    std::string ring = "Z";
    std::string D;
    long n = 2;
};

struct CurveArgs {
    std::string E;
    std::string ring = "Z";
    std::optional<std::string> p;
};

struct PairArgs {
    std::string E;
    std::string x;
    std::string y;
    std::string ring = "Z";
    std::optional<std::string> D; // defaults to the bad primes
    std::vector<std::string> T;   // translation points; empty means search
    std::optional<std::string> scale;
};

Json logpic(LogpicArgs const& a);
Json mun(MunArgs const& a);
Json curve(CurveArgs const& a);
Json pair(PairArgs const& a);

/* error document for a failed command; kind/code mirror the Error */
Json error_document(std::string const& command, Json const& args, Error const& e);

/* true when every entry of "verdicts" is true */
bool verdicts_ok(Json const& doc);

/* indented text rendering of a document; same values, nothing added */
std::string render_pretty(Json const& doc);

} // namespace kummerlog::report

#endif
