#include "kummerlog/report.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>

using kummerlog::report::Json;

namespace {

// Runs one command: JSON on stdout, optional text on stderr, exit code.
int run(std::string const& name, Json const& echo, std::function<Json()> const& fn, bool pretty)
{
    namespace rp = kummerlog::report;
    try {
        Json doc = fn();
        std::cout << doc.dump(2) << '\n';
        if (pretty)
            std::cerr << rp::render_pretty(doc);
        if (!rp::verdicts_ok(doc)) {
            std::cerr << "kummerlog: a cross-check failed; see \"verdicts\"\n";
            return static_cast<int>(kummerlog::ErrorCode::internal_consistency);
        }
        return 0;
    } catch (kummerlog::Error const& e) {
        Json doc = rp::error_document(name, echo, e);
        std::cout << doc.dump(2) << '\n';
        std::cerr << "kummerlog " << name << ": " << e.kind() << ": " << e.what() << '\n';
        return e.exit_code();
    } catch (std::exception const& e) {
        kummerlog::Error wrapped(kummerlog::ErrorCode::internal_consistency, "internal", e.what());
        std::cout << rp::error_document(name, echo, wrapped).dump(2) << '\n';
        std::cerr << "kummerlog " << name << ": internal error: " << e.what() << '\n';
        return wrapped.exit_code();
    }
}

} // namespace

int main(int argc, char** argv)
{
    namespace rp = kummerlog::report;
    CLI::App app{"Log Picard groups, mu_n torsors and log class pairings over Z and quadratic rings"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable report on stderr");

    rp::LogpicArgs lp;
    auto* c_logpic = app.add_subcommand("logpic", "log Picard group of (ring, D), optionally the class of a divisor");
    c_logpic->add_option("--ring", lp.ring, "ring literal")->capture_default_str();
    c_logpic->add_option("--D", lp.D, "marked primes, e.g. \"(2,1+w) (11)\"");
    c_logpic->add_option("--div", lp.div, "divisor, e.g. \"1/2*(2,1+w) + 3*(11)\"");
    c_logpic->add_flag("--pretty", pretty);

    rp::MunArgs mu;
    auto* c_mun = app.add_subcommand("mun", "mu_n torsors: both presentations and the kernel of theta_n");
    c_mun->add_option("--ring", mu.ring, "ring literal")->capture_default_str();
    c_mun->add_option("--D", mu.D, "marked primes");
    c_mun->add_option("--n", mu.n, "n >= 1")->required();
    c_mun->add_flag("--pretty", pretty);

    rp::CurveArgs cv;
    auto* c_curve = app.add_subcommand("curve", "reduction data and component groups");
    c_curve->add_option("--E", cv.E, "\"[a1,a2,a3,a4,a6]\" or \"[a4,a6]\"")->required();
    c_curve->add_option("--p", cv.p, "one prime, e.g. 11 or \"(2,1+w)\"; default: every bad prime");
    c_curve->add_option("--ring", cv.ring, "ring literal")->capture_default_str();
    c_curve->add_flag("--pretty", pretty);

    rp::PairArgs pa;
    auto* c_pair = app.add_subcommand("pair", "log class pairing <x,y> for y torsion");
    c_pair->add_option("--E", pa.E, "curve")->required();
    c_pair->add_option("--x", pa.x, "point x: \"(x, y)\", \"(X:Y:Z)\" or O")->required();
    c_pair->add_option("--y", pa.y, "torsion point y")->required();
    c_pair->add_option("--ring", pa.ring, "ring literal")->capture_default_str();
    c_pair->add_option("--D", pa.D, "marked primes; must be the bad primes (default)");
    c_pair->add_option("--T", pa.T, "translation point (repeatable); default: small-height search");
    c_pair->add_option("--scale", pa.scale, "nonzero scalar applied to the Miller function");
    c_pair->add_flag("--pretty", pretty);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return static_cast<int>(kummerlog::ErrorCode::parse);
    }

    auto opt = [](auto const& o) { return o ? Json(*o) : Json(); };
    if (*c_logpic)
        return run("logpic", {{"ring", lp.ring}, {"D", lp.D}, {"div", opt(lp.div)}},
                   [&] { return rp::logpic(lp); }, pretty);
    if (*c_mun)
        return run("mun", {{"ring", mu.ring}, {"D", mu.D}, {"n", mu.n}}, [&] { return rp::mun(mu); }, pretty);
    if (*c_curve)
        return run("curve", {{"E", cv.E}, {"ring", cv.ring}, {"p", opt(cv.p)}}, [&] { return rp::curve(cv); },
                   pretty);
    return run("pair",
               {{"E", pa.E}, {"x", pa.x}, {"y", pa.y}, {"ring", pa.ring}, {"D", opt(pa.D)}, {"T", pa.T},
                {"scale", opt(pa.scale)}},
               [&] { return rp::pair(pa); }, pretty);
}
