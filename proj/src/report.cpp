#include "kummerlog/report.hpp"

#include "kummerlog/integer.hpp"
#include "kummerlog/pairing.hpp"
#include "kummerlog/parse.hpp"

#include <set>
#include <sstream>

namespace kummerlog::report {

namespace {

Json num(mpz_class const& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Json nums(std::vector<mpz_class> const& v)
{
    Json a = Json::array();
    for (auto const& z : v)
        a.push_back(num(z));
    return a;
}

std::string q(mpq_class const& x) { return to_string(x); }

// prime -> "a/b"
Json qmap(std::map<PrimeIdeal, mpq_class> const& m)
{
    Json o = Json::object();
    for (auto const& [P, c] : m)
        o[P.to_string()] = q(c);
    return o;
}

Json prime_list(std::vector<PrimeIdeal> const& D)
{
    Json a = Json::array();
    for (auto const& P : D)
        a.push_back(P.to_string());
    return a;
}

std::string ideal_str(FractionalIdeal const& I) { return RationalDivisor::from_ideal(I).to_string(); }

Json envelope(std::string const& name, Json args)
{
    Json d;
    d["schema_version"] = kSchemaVersion;
    d["command"] = {{"name", name}, {"args", std::move(args)}};
    return d;
}

void finish(Json& d, Json result, Json verdicts, std::vector<std::string> const& provenance)
{
    d["result"] = std::move(result);
    d["verdicts"] = std::move(verdicts);
    d["provenance"] = provenance;
}

Json group_json(IdealClassGroup const& g)
{
    Json gens = Json::array();
    for (auto const& I : g.generators)
        gens.push_back(ideal_str(I));
    return {{"order", num(g.order())}, {"invariants", nums(g.invariants)}, {"generators", gens}};
}

// smallest k with k*c trivial, by repeated addition; nullopt past the cap
std::optional<long> order_by_search(LogPicClass const& c, long cap)
{
    LogPicClass acc = c;
    for (long k = 1; k <= cap; ++k) {
        if (acc.is_trivial())
            return k;
        acc = acc + c;
    }
    return std::nullopt;
}

Json class_json(LogPicClass const& c)
{
    Json o;
    o["representative"] = c.representative().to_string();
    o["fractional_part"] = qmap(c.fractional_part());
    o["class_coordinates"] = nums(c.class_coordinates());
    o["trivial"] = c.is_trivial();
    o["order"] = num(order_of_class(c));
    o["nu"] = qmap(nu(c).coeffs);
    return o;
}

Json component_group_json(ComponentGroup const& G, FiberGeometry const& F)
{
    Json o;
    o["order"] = num(G.order());
    o["invariants"] = nums(G.invariants());
    o["generator_components"] = G.generator_components();
    Json form = Json::array();
    for (auto const& row : G.form()) {
        Json r = Json::array();
        for (auto const& x : row)
            r.push_back(q(x));
        form.push_back(r);
    }
    o["form"] = form;
    std::vector<int> simple;
    for (std::size_t c = 0; c < F.size(); ++c)
        if (G.is_multiplicity_one(static_cast<int>(c)))
            simple.push_back(static_cast<int>(c));
    o["multiplicity_one_components"] = simple;
    if (simple.size() <= 64) {
        Json table = Json::array();
        for (int i : simple) {
            Json r = Json::array();
            for (int j : simple)
                r.push_back(q(G.pair_components(i, j)));
            table.push_back(r);
        }
        o["pairing_table"] = table;
    }
    return o;
}

} // namespace

Json logpic(LogpicArgs const& a)
{
    Json d = envelope("logpic", {{"ring", a.ring}, {"D", a.D}, {"div", a.div ? Json(*a.div) : Json()}});
    NumberRing R = parse_ring(a.ring);
    auto D = parse_prime_list(R, a.D);
    auto B = std::make_shared<MarkedBase const>(R, D);
    std::vector<std::string> prov;

    Json r;
    r["ring"] = R.to_string();
    r["D"] = prime_list(B->D());
    r["pic"] = group_json(B->class_group().group());
    r["pic_open"] = group_json(pic_of_open(B->class_group(), B->D()));
    Json target = Json::object();
    for (auto const& P : B->D())
        target[P.to_string()] = "Q/Z";
    r["nu_target"] = target;

    Json v = Json::object();
    if (a.div) {
        RationalDivisor div = parse_divisor(R, *a.div);
        LogPicClass c = log_pic_class(B, div);
        r["divisor"] = div.to_string();
        r["class"] = class_json(c);
        auto k = order_by_search(c, 100000);
        if (k) {
            v["order_by_search"] = mpz_class(*k) == order_of_class(c);
            prov.push_back("class order compared with the first trivial multiple");
        }
    }
    finish(d, std::move(r), std::move(v), prov);
    return d;
}

Json mun(MunArgs const& a)
{
    Json d = envelope("mun", {{"ring", a.ring}, {"D", a.D}, {"n", a.n}});
    if (a.n < 1)
        throw invalid_input("bad_n", "n must be at least 1");
    NumberRing R = parse_ring(a.ring);
    auto B = std::make_shared<MarkedBase const>(R, parse_prime_list(R, a.D));
    KummerLogGroup g = kummer_log_group(*B, a.n, false);
    FppfGroup open = kummer_fppf_group(R, B->D(), a.n, B->limits());

    Json r;
    r["ring"] = R.to_string();
    r["D"] = prime_list(B->D());
    r["n"] = a.n;
    r["log_order"] = num(g.order);
    r["fppf_part_order"] = num(g.fppf_part_order);
    r["kernel_order"] = num(g.kernel_order);
    r["open_order"] = num(g.open_order);
    Json units = Json::array();
    for (std::size_t i = 0; i < open.units.invariants.size(); ++i)
        units.push_back({{"order", num(open.units.invariants[i])},
                         {"representative", open.units.representatives[i].to_string()}});
    r["open_units_mod_n"] = units;
    r["open_pic_torsion"] = nums(open.pic_torsion);
    Json gens = Json::array();
    for (auto const& [w, ord] : g.kernel_generators)
        gens.push_back({{"element", qmap(w.coeffs)}, {"order", ord}});
    r["kernel_generators"] = gens;

    bool lifts_ok = true;
    Json lifts = Json::array();
    for (auto const& w : g.kernel) {
        RationalDivisor M = n_lifting(*B, w, a.n);
        auto wit = n_lifting_witness(*B, w, a.n);
        bool ok = false;
        Json e{{"element", qmap(w.coeffs)}, {"lifting", M.to_string()}};
        if (wit) {
            FractionalIdeal expect = ideal_add(M.to_ideal(), wit->W, -a.n);
            ok = factor_element(R, wit->generator) == expect;
            e["witness"] = ideal_str(wit->W);
            e["generator"] = wit->generator.to_string();
        }
        e["ok"] = ok;
        lifts_ok = lifts_ok && ok;
        if (lifts.size() < 256)
            lifts.push_back(e);
    }
    r["n_liftings"] = lifts;

    Json v{{"two_presentations", g.consistent()}, {"n_lifting", lifts_ok}};
    finish(d, std::move(r), std::move(v),
           {"log order = |fppf part| * |ker theta_n| by enumeration of n^|D| candidates",
            "open order = |units of the localization mod n| * |pic(U)[n]|",
            "each canonical n-lifting M checked through a generator of M - n*W"});
    return d;
}

Json curve(CurveArgs const& a)
{
    Json args{{"E", a.E}, {"ring", a.ring}, {"p", a.p ? Json(*a.p) : Json()}};
    Json d = envelope("curve", args);
    NumberRing R = parse_ring(a.ring);
    EllipticCurve E = parse_curve(R, a.E);

    std::vector<PrimeIdeal> primes;
    if (a.p)
        primes.push_back(parse_prime(R, *a.p));
    else
        primes = bad_primes(E);

    Json r;
    r["ring"] = R.to_string();
    r["curve"] = E.to_string();
    r["discriminant"] = E.discriminant().to_string();
    r["bad_primes"] = prime_list(bad_primes(E));
    bool tam_ok = true, table_ok = true, simple_ok = true;
    RationalDivisor conductor;
    Json local = Json::array();
    for (auto const& P : primes) {
        ReductionData rd = tate_algorithm(E, P);
        Json o;
        o["prime"] = P.to_string();
        o["kodaira"] = rd.type.to_string();
        if (rd.type.split)
            o["split"] = *rd.type.split;
        o["minimal_model"] = rd.minimal_model.to_string();
        o["disc_valuation"] = rd.disc_valuation;
        o["conductor_exponent"] = rd.conductor_exponent;
        o["tamagawa"] = rd.tamagawa;
        o["fiber_multiplicities"] = rd.fiber.multiplicity;
        o["component_group"] = component_group_json(rd.group, rd.fiber);
        if (rd.conductor_exponent)
            conductor.coeffs[P] = rd.conductor_exponent;
        tam_ok = tam_ok && mpz_class(rd.group.order() % rd.tamagawa) == 0;
        table_ok = table_ok && rd.group.order() == classical_component_order(rd.type);
        std::set<std::vector<mpz_class>> seen;
        for (std::size_t c = 0; c < rd.fiber.size(); ++c)
            if (rd.group.is_multiplicity_one(static_cast<int>(c)))
                seen.insert(rd.group.coordinates(static_cast<int>(c)));
        simple_ok = simple_ok && mpz_class(static_cast<unsigned long>(seen.size())) == rd.group.order();
        local.push_back(o);
    }
    r["local"] = local;
    if (!a.p)
        r["conductor"] = conductor.to_string();

    Json v{{"tamagawa_divides_group_order", tam_ok},
           {"group_order_matches_table", table_ok},
           {"simple_components_represent_group", simple_ok}};
    finish(d, std::move(r), std::move(v),
           {"reduction types from Tate's algorithm on a local minimal model",
            "component groups from the intersection matrix by Smith normal form"});
    return d;
}

Json pair(PairArgs const& a)
{
    Json targs = Json::array();
    for (auto const& t : a.T)
        targs.push_back(t);
    Json args{{"E", a.E},
              {"x", a.x},
              {"y", a.y},
              {"ring", a.ring},
              {"D", a.D ? Json(*a.D) : Json()},
              {"T", targs},
              {"scale", a.scale ? Json(*a.scale) : Json()}};
    Json d = envelope("pair", args);
    NumberRing R = parse_ring(a.ring);
    EllipticCurve E = parse_curve(R, a.E);
    CurvePoint x = parse_point(R, a.x), y = parse_point(R, a.y);
    std::vector<PrimeIdeal> D = a.D ? parse_prime_list(R, *a.D) : bad_primes(E);
    auto B = std::make_shared<MarkedBase const>(R, D);

    PairingOptions opt;
    for (auto const& t : a.T)
        opt.translations.push_back(parse_point(R, t));
    if (a.scale)
        opt.miller_scale = parse_element(R, *a.scale);
    opt.cross_check = false;
    LogPairing lp = log_class_pairing_detail(E, x, y, B, opt);

    Json r;
    r["ring"] = R.to_string();
    r["curve"] = E.to_string();
    r["D"] = prime_list(B->D());
    r["x"] = x.to_string();
    r["y"] = y.to_string();
    r["n"] = lp.n;
    if (!x.infinity) {
        r["T"] = lp.T.to_string();
        auto g = miller_function(E, y, lp.n);
        r["miller_function"] = (opt.miller_scale ? g.scaled(*opt.miller_scale) : g).to_string();
    }
    Json local = Json::array();
    for (auto const& [P, lt] : lp.local)
        local.push_back({{"prime", P.to_string()}, {"miller", q(lt.miller)}, {"intersection", q(lt.intersection)}});
    r["local_terms"] = local;
    r["divisor"] = lp.divisor.to_string();
    Json comps = Json::array();
    for (auto const& s : B->D()) {
        ReductionData rd = tate_algorithm(E, s);
        comps.push_back({{"prime", s.to_string()},
                         {"kodaira", rd.type.to_string()},
                         {"component_x", reduction_component(E, x, s)},
                         {"component_y", reduction_component(E, y, s)}});
    }
    r["components"] = comps;
    r["monodromy_profile"] = qmap(lp.profile);
    bool n_trivial = false;
    if (lp.cls) {
        r["class"] = class_json(*lp.cls);
        n_trivial = lp.cls->scaled(lp.n).is_trivial();
        r["n_times_class_trivial"] = n_trivial;
    }

    Json v{{"routes_agree", lp.routes_agree},
           {"nu_equals_profile", lp.profile_matches},
           {"n_times_class_trivial", n_trivial}};
    std::vector<std::string> prov{"y has order n; the Miller function has divisor n(y) - n(O)",
                                  "x evaluated as (x+T) - (T) for an admissible translation T"};
    if (!x.infinity)
        prov.push_back("local terms by Miller valuations and by section intersections with component corrections");
    finish(d, std::move(r), std::move(v), prov);
    return d;
}

Json error_document(std::string const& command, Json const& args, Error const& e)
{
    Json d = envelope(command, args);
    Json err{{"exit_code", e.exit_code()}, {"kind", e.kind()}, {"message", e.what()}};
    if (auto const* pe = dynamic_cast<ParseError const*>(&e))
        err["position"] = pe->position();
    d["error"] = err;
    return d;
}

bool verdicts_ok(Json const& doc)
{
    auto it = doc.find("verdicts");
    if (it == doc.end())
        return true;
    for (auto const& [k, v] : it->items())
        if (!v.is_boolean() || !v.get<bool>())
            return false;
    return true;
}

namespace {

std::string scalar_text(Json const& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

bool is_flat_array(Json const& v)
{
    if (!v.is_array())
        return false;
    for (auto const& e : v)
        if (e.is_structured())
            return false;
    return true;
}

bool is_table(Json const& v)
{
    if (!v.is_array() || v.empty())
        return false;
    for (auto const& e : v)
        if (!is_flat_array(e))
            return false;
    return true;
}

void render(std::ostream& os, Json const& v, int indent)
{
    std::string pad(indent, ' ');
    for (auto const& [k, e] : v.items()) {
        if (!e.is_structured()) {
            os << pad << k << ": " << scalar_text(e) << '\n';
        } else if (is_flat_array(e)) {
            os << pad << k << ": [";
            bool first = true;
            for (auto const& x : e) {
                os << (first ? "" : ", ") << scalar_text(x);
                first = false;
            }
            os << "]\n";
        } else if (is_table(e)) {
            os << pad << k << ":\n";
            std::size_t w = 1;
            for (auto const& row : e)
                for (auto const& x : row)
                    w = std::max(w, scalar_text(x).size());
            for (auto const& row : e) {
                os << pad << "  ";
                for (auto const& x : row) {
                    std::string s = scalar_text(x);
                    os << std::string(w - s.size() + 1, ' ') << s;
                }
                os << '\n';
            }
        } else if (e.is_array()) {
            os << pad << k << ":\n";
            for (auto const& x : e) {
                if (x.is_structured()) {
                    os << pad << "  -\n";
                    render(os, x, indent + 4);
                } else {
                    os << pad << "  - " << scalar_text(x) << '\n';
                }
            }
        } else {
            os << pad << k << ":\n";
            render(os, e, indent + 2);
        }
    }
}

} // namespace

std::string render_pretty(Json const& doc)
{
    std::ostringstream os;
    render(os, doc, 0);
    return os.str();
}

} // namespace kummerlog::report
