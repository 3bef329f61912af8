#include <cctype>
#include <string>

#include "umbral/errors.hpp"
#include "umbral/poly.hpp"

namespace umbral {

namespace {

constexpr long kMaxExponent = 1000000;

// Recursive descent over:
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := ['-'] (coeff ('*'? factor)*) | (factor ('*'? factor)*)
//   coeff  := int | int '/' posint
//   factor := 'x' posint ('^' posint)? | 'e' '[' posint (',' posint)* ']'
// Whitespace is insignificant between tokens; index digits attach directly to
// their 'x'/'e'. A unary '-' is accepted at the start of any term so sums like
// "x1 + -x1" read naturally.
class PolyParser {
public:
    PolyParser(std::string_view text, int n) : s_(text), n_(n) {
        if (n < 1) throw PreconditionError("dimension must be >= 1");
    }

    CliffPoly parse() {
        CliffPoly acc(n_);
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        acc += term(neg);
        skip_ws();
        while (!eof()) {
            bool subtract;
            if (eat('+'))
                subtract = false;
            else if (eat('-'))
                subtract = true;
            else
                fail("'+' or '-'");
            skip_ws();
            bool unary = eat('-');
            skip_ws();
            acc += term(subtract != unary);
            skip_ws();
        }
        return acc;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_ + 1, expected); }

    bool digit_next() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::string digits() {
        if (!digit_next()) fail("digit");
        std::size_t start = pos_;
        while (digit_next()) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    long bounded_posint(const std::string& what) {
        std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 7) throw ParseError(at + 1, what + " (too large)");
        long v = std::stol(d);
        if (v < 1) throw ParseError(at + 1, what);
        return v;
    }

    int coordinate_index() {
        std::size_t at = pos_;
        long v = bounded_posint("positive index");
        if (v > n_)
            throw ParseError(at + 1, "index <= n=" + std::to_string(n_));
        return static_cast<int>(v);
    }

    Rational coefficient() {
        std::string num = digits();
        skip_ws();
        std::string den = "1";
        if (eat('/')) {
            skip_ws();
            std::size_t at = pos_;
            den = digits();
            bool all_zero = den.find_first_not_of('0') == std::string::npos;
            if (all_zero) throw ParseError(at + 1, "positive denominator");
        }
        return Rational::parse(num + "/" + den);
    }

    CliffPoly term(bool negate) {
        Rational coeff(1);
        bool saw_anything = false;
        if (digit_next()) {
            coeff = coefficient();
            saw_anything = true;
        }
        std::vector<int> exps(static_cast<std::size_t>(n_), 0);
        Multivector blade_acc = Multivector::scalar(n_, Rational(1));
        while (true) {
            skip_ws();
            bool starred = eat('*');
            if (starred) skip_ws();
            if (peek() == 'x') {
                ++pos_;
                int j = coordinate_index();
                long e = 1;
                skip_ws();
                std::size_t save = pos_;
                if (eat('^')) {
                    skip_ws();
                    e = bounded_posint("positive exponent");
                } else {
                    pos_ = save;
                }
                long cur = exps[static_cast<std::size_t>(j - 1)];
                if (cur + e > kMaxExponent) fail("exponent within bounds");
                exps[static_cast<std::size_t>(j - 1)] = static_cast<int>(cur + e);
                saw_anything = true;
            } else if (peek() == 'e') {
                ++pos_;
                if (!eat('[')) fail("'[' after 'e'");
                std::vector<int> idx;
                skip_ws();
                std::size_t at = pos_;
                idx.push_back(coordinate_index());
                skip_ws();
                while (eat(',')) {
                    skip_ws();
                    at = pos_;
                    int j = coordinate_index();
                    if (j <= idx.back()) throw ParseError(at + 1, "strictly increasing blade indices");
                    idx.push_back(j);
                    skip_ws();
                }
                if (!eat(']')) fail("',' or ']'");
                blade_acc = blade_acc * Multivector::basis(n_, Blade::from_indices(idx, n_));
                saw_anything = true;
            } else {
                if (starred) fail("factor after '*'");
                break;
            }
        }
        if (!saw_anything) fail("term");
        if (negate) coeff = -coeff;
        return CliffPoly::monomial(n_, MultiIndex(std::move(exps)), blade_acc * coeff);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int n_;
};

} // namespace

CliffPoly parse_poly(std::string_view text, int n) { return PolyParser(text, n).parse(); }

} // namespace umbral
