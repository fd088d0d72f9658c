#include "kummerlog/parse.hpp"

#include "kummerlog/error.hpp"
#include "kummerlog/integer.hpp"

#include <cctype>

namespace kummerlog {

namespace {

class Cursor {
    std::string const& s_;
    std::size_t i_ = 0;

  public:
    explicit Cursor(std::string const& s) : s_(s) {}

    std::size_t pos() const { return i_; }
    void ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool at_end()
    {
        ws();
        return i_ >= s_.size();
    }
    char peek()
    {
        ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool eat(char c)
    {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool eat_word(std::string const& w)
    {
        ws();
        if (s_.compare(i_, w.size(), w) == 0) {
            i_ += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(std::string const& msg) const { throw ParseError(msg, i_); }
    void expect(char c, char const* what)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "' " + what);
    }
    void finish(char const* what)
    {
        if (!at_end())
            fail(std::string("unexpected trailing input after ") + what);
    }
    bool digit()
    {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }
    mpz_class natural()
    {
        ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (start == i_)
            fail("expected a number");
        return mpz_class(s_.substr(start, i_ - start));
    }
    mpz_class integer()
    {
        bool neg = eat('-');
        if (!neg)
            eat('+');
        mpz_class n = natural();
        return neg ? mpz_class(-n) : n;
    }
    mpq_class rational()
    {
        mpz_class num = natural();
        if (eat('/')) {
            std::size_t at = i_;
            mpz_class den = natural();
            if (den == 0)
                throw ParseError("zero denominator", at);
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }
};

// rational [ '*' ] 'w' | rational | 'w'
Elem term(NumberRing const& R, Cursor& c)
{
    mpq_class coeff = 1;
    bool has_number = false;
    if (c.digit()) {
        coeff = c.rational();
        has_number = true;
    }
    std::size_t before = c.pos();
    bool star = has_number && c.eat('*');
    if (c.peek() == 'w') {
        if (R.is_rational())
            c.fail("'w' is not available over Z");
        c.eat('w');
        return Elem(R, 0, coeff);
    }
    if (star)
        throw ParseError("expected 'w' after '*'", before);
    if (!has_number)
        c.fail("expected a number or 'w'");
    return Elem(R, coeff, 0);
}

Elem element(NumberRing const& R, Cursor& c)
{
    Elem acc = scalar(R, 0);
    bool first = true;
    for (;;) {
        bool neg = false;
        if (c.eat('-'))
            neg = true;
        else if (!c.eat('+') && !first)
            break;
        Elem t = term(R, c);
        acc = neg ? acc - t : acc + t;
        first = false;
        char nx = c.peek();
        if (nx != '+' && nx != '-')
            break;
    }
    return acc;
}

PrimeIdeal prime(NumberRing const& R, Cursor& c)
{
    c.expect('(', "to open a prime ideal");
    std::size_t at = c.pos();
    mpz_class p = c.natural();
    if (!is_prime(p))
        throw ParseError(p.get_str() + " is not a rational prime", at);
    std::optional<Elem> alpha;
    if (c.eat(','))
        alpha = element(R, c);
    c.expect(')', "to close a prime ideal");
    return prime_from_generators(R, p, alpha);
}

} // namespace

NumberRing parse_ring(std::string const& s)
{
    Cursor c(s);
    auto radicand = [&c](char close) {
        if (!c.eat_word("sqrt"))
            c.fail("expected 'sqrt'");
        bool paren = c.eat('(');
        std::size_t at = c.pos();
        mpz_class d = c.integer();
        if (paren)
            c.expect(')', "after the radicand");
        c.expect(close, "to close the ring literal");
        c.finish("the ring");
        if (d == 1 || d == 0 || !is_squarefree(d))
            throw ParseError("radicand must be squarefree and different from 0 and 1", at);
        return d;
    };
    if (c.eat('Q')) {
        if (c.at_end())
            return NumberRing::integers();
        c.expect('(', "after Q");
        return NumberRing::quadratic(radicand(')'));
    }
    if (c.eat('Z')) {
        if (c.at_end())
            return NumberRing::integers();
        c.expect('[', "after Z");
        if (c.eat('i')) {
            c.expect(']', "to close Z[i]");
            c.finish("the ring");
            return NumberRing::quadratic(-1);
        }
        mpz_class d = radicand(']');
        if (mod(d, 4) == 1)
            throw invalid_input("non_maximal_order",
                                "Z[sqrt " + d.get_str() + "] is not a maximal order; use Q(sqrt " + d.get_str() + ")");
        return NumberRing::quadratic(d);
    }
    c.fail("expected Z, Z[i], Z[sqrt d] or Q(sqrt d)");
}

Elem parse_element(NumberRing const& R, std::string const& s)
{
    Cursor c(s);
    Elem e = element(R, c);
    c.finish("the element");
    return e;
}

PrimeIdeal parse_prime(NumberRing const& R, std::string const& s)
{
    Cursor c(s);
    if (c.digit()) {
        std::size_t at = c.pos();
        mpz_class p = c.natural();
        c.finish("the prime");
        if (!is_prime(p))
            throw ParseError(p.get_str() + " is not a rational prime", at);
        return prime_from_generators(R, p, std::nullopt);
    }
    PrimeIdeal P = prime(R, c);
    c.finish("the prime");
    return P;
}

std::vector<PrimeIdeal> parse_prime_list(NumberRing const& R, std::string const& s)
{
    Cursor c(s);
    std::vector<PrimeIdeal> out;
    while (!c.at_end()) {
        out.push_back(prime(R, c));
        while (c.eat(',') || c.eat(';')) {
        }
    }
    return out;
}

RationalDivisor parse_divisor(NumberRing const& R, std::string const& s)
{
    Cursor c(s);
    RationalDivisor d;
    if (c.peek() == '0') {
        c.eat('0');
        c.finish("the zero divisor");
        return d;
    }
    bool first = true;
    while (!c.at_end()) {
        mpq_class sign = 1;
        if (c.eat('-'))
            sign = -1;
        else if (!c.eat('+') && !first)
            c.fail("expected '+' or '-' between terms");
        mpq_class coeff = 1;
        if (c.digit()) {
            coeff = c.rational();
            c.eat('*');
        }
        if (c.peek() != '(')
            c.fail("expected a prime ideal such as (7) or (2, 1+w)");
        PrimeIdeal P = prime(R, c);
        d.coeffs[P] += sign * coeff;
        if (d.coeffs[P] == 0)
            d.coeffs.erase(P);
        first = false;
    }
    if (first)
        c.fail("empty divisor; write 0 for the zero divisor");
    return d;
}

EllipticCurve parse_curve(NumberRing const& R, std::string const& s)
{
    Cursor c(s);
    c.expect('[', "to open the coefficient list");
    std::vector<Elem> a{element(R, c)};
    while (c.eat(','))
        a.push_back(element(R, c));
    c.expect(']', "to close the coefficient list");
    c.finish("the curve");
    if (a.size() == 2)
        a = {scalar(R, 0), scalar(R, 0), scalar(R, 0), a[0], a[1]};
    if (a.size() != 5)
        throw ParseError("a curve needs 5 coefficients [a1,a2,a3,a4,a6] or 2 coefficients [a4,a6]", 0);
    return EllipticCurve(R, {a[0], a[1], a[2], a[3], a[4]});
}

CurvePoint parse_point(NumberRing const& R, std::string const& s)
{
    Cursor c(s);
    if (c.eat('O')) {
        c.finish("the point");
        return CurvePoint::zero();
    }
    c.expect('(', "to open a point");
    Elem x = element(R, c);
    if (c.eat(':')) {
        Elem y = element(R, c);
        c.expect(':', "between projective coordinates");
        Elem z = element(R, c);
        c.expect(')', "to close the point");
        c.finish("the point");
        if (z.is_zero()) {
            if (!x.is_zero() || y.is_zero())
                throw invalid_input("not_on_curve", "the only point with Z = 0 is (0:1:0)");
            return CurvePoint::zero();
        }
        return CurvePoint::affine(x / z, y / z);
    }
    c.expect(',', "between coordinates");
    Elem y = element(R, c);
    c.expect(')', "to close the point");
    c.finish("the point");
    return CurvePoint::affine(x, y);
}

} // namespace kummerlog
