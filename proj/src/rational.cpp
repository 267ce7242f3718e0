#include "bck/rational.hpp"

#include "bck/errors.hpp"

#include <cctype>

namespace bck {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
        static_cast<unsigned char>(s[1]) == 0x88 && static_cast<unsigned char>(s[2]) == 0x92)
        s = "-" + s.substr(3);
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw InputError("not a rational number: \"" + std::string(text) + "\"");
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
    Rational r(negative ? mpz_class(-p) : p, q);
    r.canonicalize();
    return r;
}

Rational frac(long p, long q) {
    if (q == 0) throw InputError("zero denominator");
    Rational r{mpz_class(p), mpz_class(q)};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec axpy(const Vec& a, const Vec& b, const Rational& s) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
    return out;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec e = zeros(n);
    e[i] = 1;
    return e;
}

Rational ceil(const Rational& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(c);
}

}  // namespace bck
