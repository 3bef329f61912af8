#include "umbral/clifford.hpp"

#include <bit>
#include <sstream>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

constexpr int kMaxDim = 62;

void check_index(int j, int n) {
    if (n < 1 || n > kMaxDim) throw PreconditionError("dimension must be in 1.." + std::to_string(kMaxDim));
    if (j < 1 || j > n)
        throw PreconditionError("generator index " + std::to_string(j) + " out of range 1.." +
                                std::to_string(n));
}

void check_same_dim(int a, int b) {
    if (a != b)
        throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

} // namespace

Blade Blade::unit(int j) {
    check_index(j, kMaxDim);
    return Blade(std::uint64_t{1} << (j - 1));
}

Blade Blade::from_indices(const std::vector<int>& indices, int n) {
    std::uint64_t bits = 0;
    int prev = 0;
    for (int j : indices) {
        check_index(j, n);
        if (j <= prev) throw PreconditionError("blade indices must be strictly increasing");
        prev = j;
        bits |= std::uint64_t{1} << (j - 1);
    }
    return Blade(bits);
}

int Blade::grade() const { return std::popcount(bits_); }

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    for (int j = 1; j <= kMaxDim; ++j)
        if (bits_ & (std::uint64_t{1} << (j - 1))) out.push_back(j);
    return out;
}

int Blade::max_index() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

bool operator<(const Blade& a, const Blade& b) {
    int ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga < gb;
    // Same grade: lexicographic on the increasing index lists. The list
    // starting with the smaller first index wins, so walk lowest bits first.
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x && y) {
        int ia = std::countr_zero(x), ib = std::countr_zero(y);
        if (ia != ib) return ia < ib;
        x &= x - 1;
        y &= y - 1;
    }
    return false; // equal
}

std::string Blade::str() const {
    if (bits_ == 0) return "1";
    std::ostringstream os;
    os << "e[";
    bool first = true;
    for (int j : indices()) {
        if (!first) os << ",";
        first = false;
        os << j;
    }
    os << "]";
    return os.str();
}

SignedBlade blade_mul(const Blade& a, const Blade& b, int n) {
    if (a.max_index() > n || b.max_index() > n)
        throw PreconditionError("blade index out of range 1.." + std::to_string(n));
    // Transpositions to merge the two sorted index lists: every pair (j in a,
    // k in b) with j > k swaps once. Each common index then annihilates with
    // e_k^2 = -1.
    std::uint64_t bits_a = a.bits();
    int swaps = 0;
    for (std::uint64_t x = b.bits(); x; x &= x - 1) {
        int k = std::countr_zero(x); // 0-based position of some k in b
        std::uint64_t higher = bits_a >> (k + 1);
        swaps += std::popcount(higher);
    }
    int common = std::popcount(a.bits() & b.bits());
    int sign = ((swaps + common) % 2 == 0) ? 1 : -1;
    return SignedBlade{sign, Blade::from_bits(a.bits() ^ b.bits())};
}

Multivector::Multivector(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim) throw PreconditionError("dimension must be in 1.." + std::to_string(kMaxDim));
}

Multivector Multivector::scalar(int dim, const Rational& c) {
    Multivector m(dim);
    m.add_term(Blade(), c);
    return m;
}

Multivector Multivector::basis(int dim, const Blade& b, const Rational& c) {
    if (b.max_index() > dim) throw PreconditionError("blade index exceeds dimension");
    Multivector m(dim);
    m.add_term(b, c);
    return m;
}

Rational Multivector::coeff(const Blade& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

Multivector& Multivector::add_term(const Blade& b, const Rational& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Multivector Multivector::operator-() const {
    Multivector out(dim_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    check_same_dim(dim_, o.dim_);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    check_same_dim(dim_, o.dim_);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    check_same_dim(a.dim_, b.dim_);
    Multivector out(a.dim_);
    for (const auto& [ba, ca] : a.terms_)
        for (const auto& [bb, cb] : b.terms_) {
            SignedBlade p = blade_mul(ba, bb, a.dim_);
            Rational c = ca * cb;
            if (p.sign < 0) c = -c;
            out.add_term(p.blade, c);
        }
    return out;
}

Multivector operator*(const Multivector& a, const Rational& c) {
    Multivector out(a.dim_);
    if (c.is_zero()) return out;
    for (const auto& [b, ca] : a.terms_) out.terms_.emplace(b, ca * c);
    return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

Multivector Multivector::grade_part(int g) const {
    Multivector out(dim_);
    for (const auto& [b, c] : terms_)
        if (b.grade() == g) out.terms_.emplace(b, c);
    return out;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        os << c.abs().str();
        if (!b.is_scalar()) os << "*" << b.str();
    }
    return os.str();
}

} // namespace umbral
