#include "monoclif/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monoclif {

namespace {

void check_degree_cap(int deg) {
    if (deg > kDegreeCap)
        throw std::domain_error("polynomial degree " + std::to_string(deg) +
                                " exceeds the cap of " + std::to_string(kDegreeCap));
}

Monomial mono_sum(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += b.exps[i];
    check_degree_cap(out.degree());
    return out;
}

std::string mono_str(const Monomial& mono, char var) {
    std::string s;
    for (std::size_t i = 0; i < mono.exps.size(); ++i) {
        if (mono.exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var;
        s += std::to_string(i + 1);
        if (mono.exps[i] > 1) s += "^" + std::to_string(mono.exps[i]);
    }
    return s;
}

} // namespace

char role_char(VarRole r) {
    switch (r) {
        case VarRole::X: return 'x';
        case VarRole::U: return 'u';
        case VarRole::Z: return 'z';
    }
    return '?';
}

std::string role_string(VarRole r) { return std::string(1, role_char(r)); }

VarRole role_from_string(const std::string& s) {
    if (s == "x") return VarRole::X;
    if (s == "u") return VarRole::U;
    if (s == "z") return VarRole::Z;
    throw ParseError("unknown variable role '" + s + "'");
}

Monomial Monomial::unit(int m) { return Monomial{std::vector<int>(m, 0)}; }

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(),
                                        b.exps.end());
}

// ---------------------------------------------------------------------------
// CliffPoly

CliffPoly::CliffPoly(int m, VarRole role) : m_(m), role_(role) {
    if (m < 2 || m > 8)
        throw std::invalid_argument("CliffPoly: dimension m must satisfy 2 <= m <= 8");
}

CliffPoly CliffPoly::constant(const MultiVector& c, VarRole role) {
    CliffPoly p(c.dimension(), role);
    p.add_term(Monomial::unit(c.dimension()), c);
    return p;
}

CliffPoly CliffPoly::scalar_constant(int m, VarRole role, const CRational& c) {
    return constant(MultiVector::scalar(m, c), role);
}

CliffPoly CliffPoly::variable(int m, VarRole role, int j) {
    if (j < 1 || j > m) throw std::invalid_argument("variable index out of range");
    CliffPoly p(m, role);
    Monomial mono = Monomial::unit(m);
    mono.exps[j - 1] = 1;
    p.add_term(mono, MultiVector::scalar(m, CRational(1)));
    return p;
}

CliffPoly CliffPoly::vector_variable(int m, VarRole role) {
    CliffPoly p(m, role);
    for (int j = 1; j <= m; ++j) {
        Monomial mono = Monomial::unit(m);
        mono.exps[j - 1] = 1;
        p.add_term(mono, MultiVector::generator(m, j));
    }
    return p;
}

int CliffPoly::total_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

void CliffPoly::add_term(const Monomial& mono, const MultiVector& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(mono.exps.size()) != m_)
        throw std::invalid_argument("monomial arity does not match dimension");
    if (c.dimension() != m_)
        throw std::invalid_argument("coefficient dimension does not match polynomial");
    check_degree_cap(mono.degree());
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiVector CliffPoly::coefficient(const Monomial& mono) const {
    const auto it = terms_.find(mono);
    return it == terms_.end() ? MultiVector(m_) : it->second;
}

MultiVector CliffPoly::constant_term() const { return coefficient(Monomial::unit(m_)); }

CliffPoly CliffPoly::operator-() const {
    CliffPoly p(m_, role_);
    for (const auto& [mono, c] : terms_) p.terms_.emplace(mono, -c);
    return p;
}

CliffPoly& CliffPoly::operator+=(const CliffPoly& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

CliffPoly& CliffPoly::operator-=(const CliffPoly& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

CliffPoly operator*(const CliffPoly& a, const CliffPoly& b) {
    a.check_compatible(b);
    CliffPoly out(a.m_, a.role_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_sum(ma, mb), ca * cb);
    return out;
}

CliffPoly CliffPoly::mul_left(const MultiVector& c) const {
    CliffPoly out(m_, role_);
    for (const auto& [mono, t] : terms_) out.add_term(mono, c * t);
    return out;
}

CliffPoly CliffPoly::mul_right(const MultiVector& c) const {
    CliffPoly out(m_, role_);
    for (const auto& [mono, t] : terms_) out.add_term(mono, t * c);
    return out;
}

CliffPoly CliffPoly::scaled(const CRational& c) const {
    CliffPoly out(m_, role_);
    if (c.is_zero()) return out;
    for (const auto& [mono, t] : terms_) out.add_term(mono, t.scaled(c));
    return out;
}

CliffPoly CliffPoly::scaled(const Rational& c) const { return scaled(CRational(c)); }

CliffPoly CliffPoly::divided(const Rational& c) const {
    if (c.is_zero()) throw std::domain_error("CliffPoly: division by zero scalar");
    return scaled(c.inverse());
}

CliffPoly CliffPoly::derivative(int j) const {
    if (j < 1 || j > m_) throw std::invalid_argument("derivative index out of range");
    CliffPoly out(m_, role_);
    for (const auto& [mono, c] : terms_) {
        const int e = mono.exps[j - 1];
        if (e == 0) continue;
        Monomial d = mono;
        d.exps[j - 1] = e - 1;
        out.add_term(d, c.scaled(CRational(Rational(e))));
    }
    return out;
}

CliffPoly CliffPoly::homogeneous_component(int k) const {
    CliffPoly out(m_, role_);
    for (const auto& [mono, c] : terms_)
        if (mono.degree() == k) out.terms_.emplace(mono, c);
    return out;
}

MultiVector CliffPoly::evaluate(const std::vector<CRational>& point) const {
    if (static_cast<int>(point.size()) != m_)
        throw std::invalid_argument("evaluation point arity does not match dimension");
    MultiVector acc(m_);
    for (const auto& [mono, c] : terms_) {
        CRational scale(1);
        for (int i = 0; i < m_; ++i)
            for (int e = 0; e < mono.exps[i]; ++e) scale *= point[i];
        acc += c.scaled(scale);
    }
    return acc;
}

CliffPoly CliffPoly::with_role(VarRole role) const {
    CliffPoly out(m_, role);
    out.terms_ = terms_;
    return out;
}

CliffPoly CliffPoly::hermitian_conjugate() const {
    CliffPoly out(m_, role_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c.hermitian_conjugate());
    return out;
}

void CliffPoly::check_compatible(const CliffPoly& o) const {
    if (m_ != o.m_)
        throw std::invalid_argument("CliffPoly dimension mismatch: m=" + std::to_string(m_) +
                                    " vs m=" + std::to_string(o.m_));
    if (role_ != o.role_)
        throw std::invalid_argument(std::string("CliffPoly role mismatch: ") + role_char(role_) +
                                    " vs " + role_char(o.role_));
}

std::string CliffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const std::string ms = mono_str(mono, role_char(role_));
        os << "(" << c.str() << ")";
        if (!ms.empty()) os << "*" << ms;
    }
    return os.str();
}

CliffPoly vector_mul(Side side, const CliffPoly& p) {
    const int m = p.dimension();
    CliffPoly out(m, p.role());
    for (const auto& [mono, c] : p.terms()) {
        for (int j = 1; j <= m; ++j) {
            Monomial up = mono;
            up.exps[j - 1] += 1;
            const MultiVector ej = MultiVector::generator(m, j);
            out.add_term(up, side == Side::Left ? ej * c : c * ej);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// BiPoly

bool BiPoly::KeyLess::operator()(const Key& a, const Key& b) const {
    GradedLexLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
}

BiPoly::BiPoly(int m, VarRole first, VarRole second)
    : m_(m), role_first_(first), role_second_(second) {
    if (m < 2 || m > 8)
        throw std::invalid_argument("BiPoly: dimension m must satisfy 2 <= m <= 8");
    if (first == second) throw std::invalid_argument("BiPoly: slots need distinct roles");
}

BiPoly BiPoly::scalar_constant(int m, VarRole first, VarRole second, const CRational& c) {
    BiPoly p(m, first, second);
    p.add_term({Monomial::unit(m), Monomial::unit(m)}, MultiVector::scalar(m, c));
    return p;
}

BiPoly BiPoly::embed(const CliffPoly& p, Slot slot, VarRole other_role) {
    const int m = p.dimension();
    const VarRole first = slot == Slot::First ? p.role() : other_role;
    const VarRole second = slot == Slot::First ? other_role : p.role();
    BiPoly out(m, first, second);
    const Monomial unit = Monomial::unit(m);
    for (const auto& [mono, c] : p.terms()) {
        if (slot == Slot::First)
            out.add_term({mono, unit}, c);
        else
            out.add_term({unit, mono}, c);
    }
    return out;
}

int BiPoly::degree(Slot slot) const {
    int d = -1;
    for (const auto& [key, c] : terms_)
        d = std::max(d, (slot == Slot::First ? key.first : key.second).degree());
    return d;
}

void BiPoly::add_term(const Key& key, const MultiVector& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(key.first.exps.size()) != m_ ||
        static_cast<int>(key.second.exps.size()) != m_)
        throw std::invalid_argument("BiPoly monomial arity does not match dimension");
    if (c.dimension() != m_)
        throw std::invalid_argument("coefficient dimension does not match polynomial");
    check_degree_cap(key.first.degree());
    check_degree_cap(key.second.degree());
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly p(m_, role_first_, role_second_);
    for (const auto& [key, c] : terms_) p.terms_.emplace(key, -c);
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    check_compatible(o);
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    check_compatible(o);
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.check_compatible(b);
    BiPoly out(a.m_, a.role_first_, a.role_second_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({mono_sum(ka.first, kb.first), mono_sum(ka.second, kb.second)}, ca * cb);
    return out;
}

BiPoly BiPoly::scaled(const CRational& c) const {
    BiPoly out(m_, role_first_, role_second_);
    if (c.is_zero()) return out;
    for (const auto& [key, t] : terms_) out.add_term(key, t.scaled(c));
    return out;
}

BiPoly BiPoly::scaled(const Rational& c) const { return scaled(CRational(c)); }

BiPoly BiPoly::divided(const Rational& c) const {
    if (c.is_zero()) throw std::domain_error("BiPoly: division by zero scalar");
    return scaled(c.inverse());
}

BiPoly BiPoly::derivative(Slot slot, int j) const {
    if (j < 1 || j > m_) throw std::invalid_argument("derivative index out of range");
    BiPoly out(m_, role_first_, role_second_);
    for (const auto& [key, c] : terms_) {
        const Monomial& mono = slot == Slot::First ? key.first : key.second;
        const int e = mono.exps[j - 1];
        if (e == 0) continue;
        Key d = key;
        (slot == Slot::First ? d.first : d.second).exps[j - 1] = e - 1;
        out.add_term(d, c.scaled(CRational(Rational(e))));
    }
    return out;
}

BiPoly BiPoly::homogeneous_component(Slot slot, int k) const {
    BiPoly out(m_, role_first_, role_second_);
    for (const auto& [key, c] : terms_)
        if ((slot == Slot::First ? key.first : key.second).degree() == k)
            out.terms_.emplace(key, c);
    return out;
}

std::optional<int> BiPoly::slot_homogeneous_degree(Slot slot) const {
    if (terms_.empty()) return 0;
    int deg = -1;
    for (const auto& [key, c] : terms_) {
        const int d = (slot == Slot::First ? key.first : key.second).degree();
        if (deg == -1) deg = d;
        if (d != deg) return std::nullopt;
    }
    return deg;
}

BiPoly BiPoly::mul_poly(Slot slot, Side side, const CliffPoly& p) const {
    if (p.dimension() != m_) throw std::invalid_argument("BiPoly::mul_poly dimension mismatch");
    if (p.role() != role(slot)) throw std::invalid_argument("BiPoly::mul_poly role mismatch");
    BiPoly out(m_, role_first_, role_second_);
    for (const auto& [key, c] : terms_) {
        for (const auto& [mono, pc] : p.terms()) {
            Key k = key;
            (slot == Slot::First ? k.first : k.second) =
                mono_sum(slot == Slot::First ? key.first : key.second, mono);
            out.add_term(k, side == Side::Left ? pc * c : c * pc);
        }
    }
    return out;
}

BiPoly BiPoly::swap_slots() const {
    BiPoly out(m_, role_second_, role_first_);
    for (const auto& [key, c] : terms_) out.add_term({key.second, key.first}, c);
    return out;
}

BiPoly BiPoly::with_roles(VarRole first, VarRole second) const {
    BiPoly out(m_, first, second);
    out.terms_ = terms_;
    return out;
}

BiPoly BiPoly::hermitian_conjugate() const {
    BiPoly out(m_, role_first_, role_second_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c.hermitian_conjugate());
    return out;
}

CliffPoly BiPoly::collapse(Slot keep) const {
    CliffPoly out(m_, keep == Slot::First ? role_first_ : role_second_);
    for (const auto& [key, c] : terms_) {
        const Monomial& other = keep == Slot::First ? key.second : key.first;
        if (other.degree() != 0)
            throw std::invalid_argument("BiPoly::collapse: the dropped slot is not trivial");
        out.add_term(keep == Slot::First ? key.first : key.second, c);
    }
    return out;
}

void BiPoly::check_compatible(const BiPoly& o) const {
    if (m_ != o.m_ || role_first_ != o.role_first_ || role_second_ != o.role_second_)
        throw std::invalid_argument("BiPoly dimension/role mismatch");
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        const std::string sa = mono_str(key.first, role_char(role_first_));
        const std::string sb = mono_str(key.second, role_char(role_second_));
        if (!sa.empty()) os << "*" << sa;
        if (!sb.empty()) os << "*" << sb;
    }
    return os.str();
}

BiPoly vector_mul(Slot slot, Side side, const BiPoly& p) {
    const int m = p.dimension();
    BiPoly out(m, p.role(Slot::First), p.role(Slot::Second));
    for (const auto& [key, c] : p.terms()) {
        for (int j = 1; j <= m; ++j) {
            BiPoly::Key up = key;
            (slot == Slot::First ? up.first : up.second).exps[j - 1] += 1;
            const MultiVector ej = MultiVector::generator(m, j);
            out.add_term(up, side == Side::Left ? ej * c : c * ej);
        }
    }
    return out;
}

BiPoly divide_by_norm_sq(const BiPoly& p, Slot slot) {
    const int m = p.dimension();
    BiPoly quotient(m, p.role(Slot::First), p.role(Slot::Second));
    BiPoly rest = p;
    // Exact division by sum_j v_j^2: repeatedly cancel the term whose slot
    // monomial is lex-greatest; it must be divisible by v_1^2.
    while (!rest.is_zero()) {
        const BiPoly::Key* best = nullptr;
        const MultiVector* best_c = nullptr;
        for (const auto& [key, c] : rest.terms()) {
            if (best == nullptr) {
                best = &key;
                best_c = &c;
                continue;
            }
            const Monomial& cand = slot == Slot::First ? key.first : key.second;
            const Monomial& cur = slot == Slot::First ? best->first : best->second;
            if (std::lexicographical_compare(cur.exps.begin(), cur.exps.end(), cand.exps.begin(),
                                             cand.exps.end())) {
                best = &key;
                best_c = &c;
            }
        }
        BiPoly::Key qkey = *best;
        Monomial& qmono = slot == Slot::First ? qkey.first : qkey.second;
        if (qmono.exps[0] < 2)
            throw std::domain_error("divide_by_norm_sq: polynomial is not divisible");
        qmono.exps[0] -= 2;
        const MultiVector qc = *best_c;
        quotient.add_term(qkey, qc);
        for (int j = 1; j <= m; ++j) {
            BiPoly::Key sub = qkey;
            (slot == Slot::First ? sub.first : sub.second).exps[j - 1] += 2;
            rest.add_term(sub, -qc);
        }
    }
    return quotient;
}

} // namespace monoclif
