#include "umbral/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

void check_coord(int j, int n) {
    if (j < 1 || j > n)
        throw PreconditionError("coordinate " + std::to_string(j) + " out of range 1.." +
                                std::to_string(n));
}

void check_same_dim(int a, int b) {
    if (a != b)
        throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty()) throw PreconditionError("multi-index must have positive length");
    for (int v : e_)
        if (v < 0) throw PreconditionError("multi-index exponents must be non-negative");
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

MultiIndex MultiIndex::bumped(int j, int by) const {
    check_coord(j, dim());
    std::vector<int> e = e_;
    e[static_cast<std::size_t>(j - 1)] += by;
    if (e[static_cast<std::size_t>(j - 1)] < 0)
        throw PreconditionError("multi-index exponent would become negative");
    return MultiIndex(std::move(e));
}

bool GradedLexDesc::operator()(const MultiIndex& a, const MultiIndex& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return a.exponents() > b.exponents(); // lexicographic, larger tuple first
}

CliffPoly CliffPoly::scalar(int dim, const Rational& c) {
    CliffPoly p(dim);
    p.add_term(MultiIndex(dim), Multivector::scalar(dim, c));
    return p;
}

CliffPoly CliffPoly::monomial(int dim, const MultiIndex& a, const Multivector& c) {
    check_same_dim(dim, c.dim());
    if (a.dim() != dim) throw PreconditionError("multi-index length mismatch");
    CliffPoly p(dim);
    p.add_term(a, c);
    return p;
}

CliffPoly CliffPoly::monomial(int dim, const MultiIndex& a, const Rational& c) {
    return monomial(dim, a, Multivector::scalar(dim, c));
}

CliffPoly CliffPoly::variable(int dim, int j) {
    check_coord(j, dim);
    return monomial(dim, MultiIndex(dim).bumped(j, 1), Rational(1));
}

int CliffPoly::degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

Multivector CliffPoly::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Multivector(dim_) : it->second;
}

CliffPoly& CliffPoly::add_term(const MultiIndex& a, const Multivector& c) {
    if (a.dim() != dim_) throw PreconditionError("multi-index length mismatch");
    check_same_dim(dim_, c.dim());
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

CliffPoly CliffPoly::operator-() const {
    CliffPoly out(dim_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
    return out;
}

CliffPoly& CliffPoly::operator+=(const CliffPoly& o) {
    check_same_dim(dim_, o.dim_);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

CliffPoly& CliffPoly::operator-=(const CliffPoly& o) {
    check_same_dim(dim_, o.dim_);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

CliffPoly operator*(const CliffPoly& a, const CliffPoly& b) {
    check_same_dim(a.dim_, b.dim_);
    CliffPoly out(a.dim_);
    for (const auto& [aa, ca] : a.terms_)
        for (const auto& [ab, cb] : b.terms_) {
            std::vector<int> e(static_cast<std::size_t>(a.dim_));
            for (int j = 0; j < a.dim_; ++j)
                e[static_cast<std::size_t>(j)] = aa.exponents()[static_cast<std::size_t>(j)] +
                                                 ab.exponents()[static_cast<std::size_t>(j)];
            out.add_term(MultiIndex(std::move(e)), ca * cb);
        }
    return out;
}

CliffPoly operator*(const CliffPoly& a, const Rational& c) {
    CliffPoly out(a.dim_);
    if (c.is_zero()) return out;
    for (const auto& [idx, m] : a.terms_) out.terms_.emplace(idx, m * c);
    return out;
}

CliffPoly CliffPoly::left_mul(const Multivector& m) const {
    check_same_dim(dim_, m.dim());
    CliffPoly out(dim_);
    for (const auto& [a, c] : terms_) out.add_term(a, m * c);
    return out;
}

bool operator==(const CliffPoly& a, const CliffPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

CliffPoly CliffPoly::partial(int j) const {
    check_coord(j, dim_);
    CliffPoly out(dim_);
    for (const auto& [a, c] : terms_) {
        int e = a.exponent(j);
        if (e == 0) continue;
        out.add_term(a.bumped(j, -1), c * Rational(e));
    }
    return out;
}

CliffPoly CliffPoly::mul_var(int j) const {
    check_coord(j, dim_);
    CliffPoly out(dim_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a.bumped(j, 1), c);
    return out;
}

int CliffPoly::max_exponent(int j) const {
    check_coord(j, dim_);
    int m = 0;
    for (const auto& [a, c] : terms_) m = std::max(m, a.exponent(j));
    return m;
}

std::vector<std::pair<int, CliffPoly>> CliffPoly::homogeneous_parts() const {
    std::map<int, CliffPoly> parts;
    for (const auto& [a, c] : terms_) {
        auto [it, inserted] = parts.emplace(a.total(), CliffPoly(dim_));
        it->second.add_term(a, c);
    }
    std::vector<std::pair<int, CliffPoly>> out;
    out.reserve(parts.size());
    for (auto& [deg, p] : parts) out.emplace_back(deg, std::move(p));
    return out;
}

std::string CliffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, mv] : terms_) {
        for (const auto& [b, c] : mv.terms()) {
            if (first) {
                if (c.sign() < 0) os << "-";
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            first = false;
            Rational mag = c.abs();
            bool have_factors = a.total() > 0 || !b.is_scalar();
            bool printed = false;
            if (!mag.is_one() || !have_factors) {
                os << mag.str();
                printed = true;
            }
            for (int j = 1; j <= dim_; ++j) {
                int e = a.exponent(j);
                if (e == 0) continue;
                if (printed) os << " ";
                printed = true;
                os << "x" << j;
                if (e > 1) os << "^" << e;
            }
            if (!b.is_scalar()) {
                if (printed) os << " ";
                os << b.str();
            }
        }
    }
    return os.str();
}

} // namespace umbral
