#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>

#include "umbral/errors.hpp"

namespace umbral {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void { throw ParseError(i + 1, what); };
    auto digits = [&]() -> std::string {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("digit");
        return std::string(text.substr(start, i - start));
    };
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string num = digits();
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = digits();
    }
    if (i != text.size()) fail("end of rational");
    mpq_class v(mpz_class(num), mpz_class(den));
    if (v.get_den() == 0) throw ParseError(1, "nonzero denominator");
    v.canonicalize();
    if (neg) v = -v;
    return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class base = v_, acc = 1;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return Rational(std::move(acc));
}

Rational Rational::factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(mpq_class(f));
}

Rational Rational::binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

std::string Rational::num_str() const { return v_.get_num().get_str(); }
std::string Rational::den_str() const { return v_.get_den().get_str(); }

std::string Rational::str() const {
    if (v_.get_den() == 1) return num_str();
    return num_str() + "/" + den_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace umbral
