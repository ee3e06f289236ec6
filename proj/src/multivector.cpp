#include "monoclif/multivector.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace monoclif {

namespace {
constexpr int kMinDim = 2;
constexpr int kMaxDim = 8;

void check_dimension_range(int m) {
    if (m < kMinDim || m > kMaxDim)
        throw std::invalid_argument("MultiVector: dimension m must satisfy 2 <= m <= 8, got " +
                                    std::to_string(m));
}
} // namespace

int blade_grade(BladeMask a) { return std::popcount(a); }

int blade_product_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    for (BladeMask rest = b; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1)); // generators of a that must hop over e_{j+1}
    }
    swaps += std::popcount(a & b); // each contraction contributes e_j^2 = -1
    return (swaps & 1) ? -1 : 1;
}

int blade_conjugation_sign(BladeMask a) {
    const int g = blade_grade(a);
    return ((g * (g + 1) / 2) & 1) ? -1 : 1;
}

std::vector<int> blade_indices(BladeMask a) {
    std::vector<int> out;
    for (BladeMask rest = a; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

BladeMask blade_from_indices(const std::vector<int>& indices, int m) {
    BladeMask mask = 0;
    for (int j : indices) {
        if (j < 1 || j > m)
            throw std::invalid_argument("blade index " + std::to_string(j) +
                                        " out of range for m=" + std::to_string(m));
        const BladeMask bit = BladeMask{1} << (j - 1);
        if (mask & bit) throw std::invalid_argument("repeated blade index " + std::to_string(j));
        mask |= bit;
    }
    return mask;
}

bool BladeLess::operator()(BladeMask a, BladeMask b) const {
    const int ga = blade_grade(a), gb = blade_grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
}

MultiVector::MultiVector(int m) : m_(m) { check_dimension_range(m); }

MultiVector MultiVector::scalar(int m, const CRational& c) {
    MultiVector v(m);
    v.add_term(0, c);
    return v;
}

MultiVector MultiVector::generator(int m, int j) {
    MultiVector v(m);
    if (j < 1 || j > m)
        throw std::invalid_argument("generator index " + std::to_string(j) +
                                    " out of range for m=" + std::to_string(m));
    v.add_term(BladeMask{1} << (j - 1), CRational(1));
    return v;
}

MultiVector MultiVector::blade(int m, BladeMask mask, const CRational& c) {
    MultiVector v(m);
    if (mask >= (BladeMask{1} << m))
        throw std::invalid_argument("blade mask out of range for m=" + std::to_string(m));
    v.add_term(mask, c);
    return v;
}

bool MultiVector::is_scalar() const { return is_grade(0); }

bool MultiVector::is_grade(int g) const {
    for (const auto& [mask, c] : terms_)
        if (blade_grade(mask) != g) return false;
    return true;
}

CRational MultiVector::coefficient(BladeMask mask) const {
    const auto it = terms_.find(mask);
    return it == terms_.end() ? CRational() : it->second;
}

void MultiVector::add_term(BladeMask mask, const CRational& c) {
    if (c.is_zero()) return;
    if (mask >= (BladeMask{1} << m_))
        throw std::invalid_argument("blade mask out of range for m=" + std::to_string(m_));
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiVector MultiVector::operator-() const {
    MultiVector v(m_);
    for (const auto& [mask, c] : terms_) v.terms_.emplace(mask, -c);
    return v;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    check_same_dimension(o);
    for (const auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
    check_same_dimension(o);
    for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
    return *this;
}

MultiVector operator*(const MultiVector& a, const MultiVector& b) {
    a.check_same_dimension(b);
    MultiVector out(a.m_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            CRational c = ca * cb;
            if (blade_product_sign(ma, mb) < 0) c = -c;
            out.add_term(ma ^ mb, c);
        }
    }
    return out;
}

MultiVector MultiVector::scaled(const CRational& c) const {
    MultiVector v(m_);
    if (c.is_zero()) return v;
    for (const auto& [mask, t] : terms_) v.add_term(mask, t * c);
    return v;
}

MultiVector MultiVector::scaled(const Rational& c) const { return scaled(CRational(c)); }

MultiVector MultiVector::conjugate() const {
    MultiVector v(m_);
    for (const auto& [mask, c] : terms_)
        v.terms_.emplace(mask, blade_conjugation_sign(mask) < 0 ? -c : c);
    return v;
}

MultiVector MultiVector::hermitian_conjugate() const {
    MultiVector v(m_);
    for (const auto& [mask, c] : terms_) {
        const CRational cc = c.conj();
        v.terms_.emplace(mask, blade_conjugation_sign(mask) < 0 ? -cc : cc);
    }
    return v;
}

MultiVector MultiVector::grade_part(int g) const {
    MultiVector v(m_);
    for (const auto& [mask, c] : terms_)
        if (blade_grade(mask) == g) v.terms_.emplace(mask, c);
    return v;
}

void MultiVector::check_same_dimension(const MultiVector& o) const {
    if (m_ != o.m_)
        throw std::invalid_argument("MultiVector dimension mismatch: m=" + std::to_string(m_) +
                                    " vs m=" + std::to_string(o.m_));
}

std::string blade_str(BladeMask mask) {
    if (mask == 0) return "1";
    std::string s = "e";
    for (int j : blade_indices(mask)) s += std::to_string(j);
    return s;
}

std::string MultiVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (mask != 0) os << "*" << blade_str(mask);
    }
    return os.str();
}

std::pair<CRational, MultiVector> dot_and_wedge(const MultiVector& x, const MultiVector& y) {
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("dot_and_wedge: dimension mismatch");
    if (!x.is_grade(1) || !y.is_grade(1))
        throw std::invalid_argument("dot_and_wedge: both arguments must be pure 1-vectors");
    const int m = x.dimension();
    CRational dot;
    for (int j = 1; j <= m; ++j) {
        const BladeMask bit = BladeMask{1} << (j - 1);
        dot += x.coefficient(bit) * y.coefficient(bit);
    }
    MultiVector wedge(m);
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const BladeMask bi = BladeMask{1} << (i - 1);
            const BladeMask bj = BladeMask{1} << (j - 1);
            const CRational c =
                x.coefficient(bi) * y.coefficient(bj) - x.coefficient(bj) * y.coefficient(bi);
            wedge.add_term(bi | bj, c);
        }
    }
    return {dot, wedge};
}

} // namespace monoclif
