#include "kummerlog/logdiv.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kummerlog {

MarkedBase::MarkedBase(NumberRing ring, std::vector<PrimeIdeal> D, SearchLimits const& lim)
    : ring_(std::move(ring)), D_(std::move(D)), lim_(lim)
{
    std::sort(D_.begin(), D_.end());
    if (std::adjacent_find(D_.begin(), D_.end()) != D_.end())
        throw invalid_input("duplicate_prime", "marked primes must be distinct");
    for (auto const& P : D_) {
        auto above = primes_above(ring_, P.p());
        if (std::find(above.begin(), above.end(), P) == above.end())
            throw invalid_input("foreign_prime", P.to_string() + " is not a prime of " + ring_.to_string());
    }
    cl_ = std::make_shared<ClassGroup const>(ring_, lim_);
}

bool MarkedBase::marked(PrimeIdeal const& P) const
{
    return std::binary_search(D_.begin(), D_.end(), P);
}

// ------------------------------------------------------ rational divisors

RationalDivisor RationalDivisor::from_ideal(FractionalIdeal const& I)
{
    RationalDivisor d;
    for (auto const& [P, e] : I)
        d.coeffs[P] = e;
    return d;
}

RationalDivisor& RationalDivisor::add(RationalDivisor const& o, mpq_class const& scale)
{
    for (auto const& [P, c] : o.coeffs) {
        mpq_class& slot = coeffs[P];
        slot += scale * c;
        if (slot == 0)
            coeffs.erase(P);
    }
    return *this;
}

bool RationalDivisor::is_integral() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto const& kv) { return is_integer(kv.second); });
}

FractionalIdeal RationalDivisor::to_ideal() const
{
    FractionalIdeal I;
    for (auto const& [P, c] : coeffs) {
        if (!is_integer(c))
            throw invalid_input("non_integral_divisor", "divisor has a fractional coefficient");
        I[P] = c.get_num().get_si();
    }
    return I;
}

namespace {

std::string render_terms(std::map<PrimeIdeal, mpq_class> const& coeffs)
{
    std::string s;
    for (auto const& [P, c] : coeffs) {
        if (c == 0)
            continue;
        mpq_class a = abs(c);
        std::string term = a == 1 ? P.to_string() : to_string(a) + "*" + P.to_string();
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

} // namespace

std::string RationalDivisor::to_string() const { return render_terms(coeffs); }

RationalDivisor operator+(RationalDivisor a, RationalDivisor const& b) { return a.add(b); }
RationalDivisor operator-(RationalDivisor a, RationalDivisor const& b) { return a.add(b, -1); }
RationalDivisor operator*(mpq_class const& k, RationalDivisor a)
{
    if (k == 0)
        return {};
    for (auto& [P, c] : a.coeffs)
        c *= k;
    return a;
}

bool FracDivisorModZ::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto const& kv) { return kv.second == 0; });
}

std::string FracDivisorModZ::to_string() const { return render_terms(coeffs); }

// ---------------------------------------------------------- class group

LogPicClass::LogPicClass(std::shared_ptr<MarkedBase const> base, std::map<PrimeIdeal, mpq_class> frac,
                         std::vector<mpz_class> cls)
    : base_(std::move(base)), frac_(std::move(frac)), cls_(std::move(cls))
{
}

LogPicClass log_pic_class(std::shared_ptr<MarkedBase const> const& base, RationalDivisor const& d)
{
    std::map<PrimeIdeal, mpq_class> fr;
    for (auto const& P : base->D())
        fr[P] = 0;
    FractionalIdeal integral;
    for (auto const& [P, c] : d.coeffs) {
        if (!base->marked(P)) {
            if (!is_integer(c))
                throw invalid_input("non_integral_off_D",
                                    "coefficient " + to_string(c) + " at unmarked prime " + P.to_string());
            auto above = primes_above(base->ring(), P.p());
            if (std::find(above.begin(), above.end(), P) == above.end())
                throw invalid_input("foreign_prime", P.to_string() + " is not a prime of " + base->ring().to_string());
            integral[P] += c.get_num().get_si();
            continue;
        }
        fr[P] = frac(c);
        mpz_class fl = floor(c);
        if (fl != 0)
            integral[P] += fl.get_si();
    }
    std::erase_if(integral, [](auto const& kv) { return kv.second == 0; });
    return LogPicClass(base, std::move(fr), base->class_group().dlog(integral));
}

RationalDivisor LogPicClass::representative() const
{
    RationalDivisor d;
    for (auto const& [P, c] : frac_)
        if (c != 0)
            d.coeffs[P] = c;
    d.add(RationalDivisor::from_ideal(base_->class_group().ideal_of(cls_)));
    return d;
}

bool LogPicClass::is_trivial() const
{
    return std::all_of(frac_.begin(), frac_.end(), [](auto const& kv) { return kv.second == 0; }) &&
           base_->class_group().is_trivial(cls_);
}

LogPicClass LogPicClass::operator+(LogPicClass const& o) const
{
    if (!(*base_ == *o.base_))
        throw invalid_input("base_mismatch", "classes live over different marked bases");
    return log_pic_class(base_, representative() + o.representative());
}

LogPicClass LogPicClass::operator-() const
{
    return log_pic_class(base_, mpq_class(-1) * representative());
}

LogPicClass LogPicClass::scaled(mpz_class const& k) const
{
    return log_pic_class(base_, mpq_class(k) * representative());
}

bool LogPicClass::operator==(LogPicClass const& o) const
{
    if (!(*base_ == *o.base_))
        throw invalid_input("base_mismatch", "classes live over different marked bases");
    return frac_ == o.frac_ && base_->class_group().reduce(cls_) == o.base_->class_group().reduce(o.cls_);
}

bool class_equal(LogPicClass const& a, LogPicClass const& b) { return a == b; }

mpz_class order_of_class(LogPicClass const& c)
{
    mpz_class L = 1;
    for (auto const& [P, f] : c.fractional_part())
        L = lcm(L, f.get_den());
    LogPicClass integral = c.scaled(L);
    auto const& inv = c.base().class_group().group().invariants;
    auto const& v = integral.class_coordinates();
    mpz_class ord = 1;
    for (std::size_t i = 0; i < inv.size(); ++i)
        ord = lcm(ord, inv[i] / gcd(inv[i], v[i]));
    return L * ord;
}

FracDivisorModZ nu(LogPicClass const& c)
{
    return FracDivisorModZ{c.fractional_part()};
}

// ---------------------------------------------------------------- theta

bool ClassModN::is_zero() const
{
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (mod(coords[i], moduli[i]) != 0)
            return false;
    return true;
}

std::string ClassModN::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i)
            s += ", ";
        s += coords[i].get_str() + " mod " + moduli[i].get_str();
    }
    return s + "]";
}

namespace {

std::vector<mpz_class> canonical_lift(MarkedBase const& base, FracDivisorModZ const& w, long n)
{
    if (n < 1)
        throw invalid_input("bad_n", "n must be at least 1");
    std::vector<mpz_class> k;
    for (auto const& P : base.D()) {
        auto it = w.coeffs.find(P);
        mpq_class c = it == w.coeffs.end() ? mpq_class(0) : frac(it->second);
        mpq_class kn = c * n;
        if (!is_integer(kn))
            throw invalid_input("denominator", "coefficient " + to_string(c) + " at " + P.to_string() +
                                                   " has denominator not dividing " + std::to_string(n));
        k.push_back(kn.get_num());
    }
    for (auto const& [P, c] : w.coeffs)
        if (!base.marked(P))
            throw invalid_input("foreign_prime", P.to_string() + " is not in D");
    return k;
}

ClassModN theta_from_lift(MarkedBase const& base, std::vector<std::vector<mpz_class>> const& logs,
                          std::vector<mpz_class> const& k, long n)
{
    auto const& inv = base.class_group().group().invariants;
    ClassModN out;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        mpz_class g = gcd(inv[i], mpz_class(n));
        mpz_class s = 0;
        for (std::size_t m = 0; m < k.size(); ++m)
            s += k[m] * logs[m][i];
        out.moduli.push_back(g);
        out.coords.push_back(mod(s, g));
    }
    return out;
}

std::vector<std::vector<mpz_class>> marked_logs(MarkedBase const& base)
{
    std::vector<std::vector<mpz_class>> logs;
    for (auto const& P : base.D())
        logs.push_back(base.class_group().dlog(P));
    return logs;
}

} // namespace

ClassModN theta_n(MarkedBase const& base, FracDivisorModZ const& w, long n)
{
    return theta_from_lift(base, marked_logs(base), canonical_lift(base, w, n), n);
}

RationalDivisor n_lifting(MarkedBase const& base, FracDivisorModZ const& w, long n)
{
    auto k = canonical_lift(base, w, n);
    RationalDivisor M;
    for (std::size_t m = 0; m < k.size(); ++m)
        if (k[m] != 0)
            M.coeffs[base.D()[m]] = k[m];
    return M;
}

std::optional<LiftWitness> n_lifting_witness(MarkedBase const& base, FracDivisorModZ const& w, long n)
{
    RationalDivisor M = n_lifting(base, w, n);
    ClassGroup const& cl = base.class_group();
    auto const& inv = cl.group().invariants;
    auto c = cl.dlog(M.to_ideal());
    std::vector<mpz_class> x(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
        // solve n * x = c mod d
        mpz_class g = gcd(inv[i], mpz_class(n));
        if (mod(c[i], g) != 0)
            return std::nullopt;
        mpz_class d = inv[i] / g;
        x[i] = d == 1 ? mpz_class(0) : mod((c[i] / g) * inverse_mod(mpz_class(n) / g, d), d);
    }
    FractionalIdeal W = cl.ideal_of(x);
    FractionalIdeal diff = ideal_add(M.to_ideal(), W, -n);
    auto gen = is_principal(base.ring(), diff, base.limits());
    if (!gen)
        return std::nullopt;
    return LiftWitness{W, *gen};
}

// ----------------------------------------------------------- mu_n torsors

mpz_class FppfGroup::order() const
{
    mpz_class h = units.order();
    for (auto const& d : pic_torsion)
        h *= d;
    return h;
}

FppfGroup kummer_fppf_group(NumberRing const& ring, std::vector<PrimeIdeal> const& inverted, long n,
                            SearchLimits const& lim)
{
    if (n < 1)
        throw invalid_input("bad_n", "n must be at least 1");
    FppfGroup g;
    g.n = n;
    g.units = units_mod_n(ring, inverted, n, lim);
    for (auto const& d : pic_of_open(ring, inverted, lim).invariants) {
        mpz_class t = gcd(d, mpz_class(n));
        if (t > 1)
            g.pic_torsion.push_back(t);
    }
    return g;
}

KummerLogGroup kummer_log_group(MarkedBase const& base, long n, bool verify)
{
    if (n < 1)
        throw invalid_input("bad_n", "n must be at least 1");
    KummerLogGroup out;
    out.n = n;
    out.fppf_part_order = kummer_fppf_group(base.ring(), {}, n, base.limits()).order();

    auto logs = marked_logs(base);
    std::size_t const r = base.D().size();
    long total = 1;
    for (std::size_t m = 0; m < r; ++m)
        total *= n;
    std::vector<std::vector<long>> kernel;
    for (long idx = 0; idx < total; ++idx) {
        std::vector<long> kv(r);
        long rest = idx;
        for (std::size_t m = r; m-- > 0;) {
            kv[m] = rest % n;
            rest /= n;
        }
        std::vector<mpz_class> k(kv.begin(), kv.end());
        if (theta_from_lift(base, logs, k, n).is_zero())
            kernel.push_back(kv);
    }
    out.kernel_order = static_cast<unsigned long>(kernel.size());
    auto to_frac = [&](std::vector<long> const& kv) {
        FracDivisorModZ w;
        for (std::size_t m = 0; m < r; ++m)
            w.coeffs[base.D()[m]] = mpq_class(kv[m], n);
        for (auto& [P, c] : w.coeffs)
            c.canonicalize();
        return w;
    };
    for (auto const& kv : kernel)
        out.kernel.push_back(to_frac(kv));

    // greedy generators of the kernel
    std::set<std::vector<long>> span{std::vector<long>(r, 0)};
    for (auto const& kv : kernel) {
        if (span.count(kv))
            continue;
        long g = n;
        for (long x : kv)
            g = std::gcd(g, x);
        long ord = n / g;
        std::set<std::vector<long>> next;
        for (auto const& s : span)
            for (long j = 0; j < ord; ++j) {
                std::vector<long> t(r);
                for (std::size_t m = 0; m < r; ++m)
                    t[m] = (s[m] + j * kv[m]) % n;
                next.insert(t);
            }
        span = std::move(next);
        out.kernel_generators.push_back({to_frac(kv), ord});
    }

    out.order = out.fppf_part_order * out.kernel_order;
    out.open_order = kummer_fppf_group(base.ring(), base.D(), n, base.limits()).order();
    if (verify && !out.consistent())
        throw consistency_failure("two_presentations",
                                  "log presentation gives " + out.order.get_str() + " but the open part gives " +
                                      out.open_order.get_str());
    return out;
}

} // namespace kummerlog
