#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoclif/multivector.hpp"

namespace monoclif {

/// Hard cap on the total degree of any monomial produced by arithmetic.
/// This is a desk-scale tool; blowing past the cap is an error, not a hang.
constexpr int kDegreeCap = 24;

/// Which of the three fixed variable tuples a polynomial lives in.
enum class VarRole { X, U, Z };

char role_char(VarRole r);
VarRole role_from_string(const std::string& s);
std::string role_string(VarRole r);

/// Exponent tuple of one variable tuple; length always equals m.
struct Monomial {
    std::vector<int> exps;

    static Monomial unit(int m);
    int degree() const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

/// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class Side { Left, Right };
enum class Slot { First, Second };

class BiPoly;

/// Sparse polynomial in one m-tuple of commuting scalar variables with
/// MultiVector coefficients. Variables commute with the algebra; all
/// noncommutativity lives in the coefficients.
class CliffPoly {
  public:
    using TermMap = std::map<Monomial, MultiVector, GradedLexLess>;

    CliffPoly(int m, VarRole role);
    static CliffPoly constant(const MultiVector& c, VarRole role);
    static CliffPoly scalar_constant(int m, VarRole role, const CRational& c);
    /// The scalar variable x_j as a polynomial (1-based j).
    static CliffPoly variable(int m, VarRole role, int j);
    /// The grade-1 linear polynomial x = sum_j x_j e_j.
    static CliffPoly vector_variable(int m, VarRole role);

    int dimension() const { return m_; }
    VarRole role() const { return role_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Max total degree of a stored term, -1 for the zero polynomial.
    int total_degree() const;

    void add_term(const Monomial& mono, const MultiVector& c);
    MultiVector coefficient(const Monomial& mono) const;
    MultiVector constant_term() const;

    CliffPoly operator-() const;
    CliffPoly& operator+=(const CliffPoly& o);
    CliffPoly& operator-=(const CliffPoly& o);
    friend CliffPoly operator+(CliffPoly a, const CliffPoly& b) { return a += b; }
    friend CliffPoly operator-(CliffPoly a, const CliffPoly& b) { return a -= b; }
    friend CliffPoly operator*(const CliffPoly& a, const CliffPoly& b);

    CliffPoly mul_left(const MultiVector& c) const;  // c * p
    CliffPoly mul_right(const MultiVector& c) const; // p * c
    CliffPoly scaled(const CRational& c) const;
    CliffPoly scaled(const Rational& c) const;
    CliffPoly divided(const Rational& c) const;

    CliffPoly derivative(int j) const; // d/dx_j, 1-based
    CliffPoly homogeneous_component(int k) const;
    MultiVector evaluate(const std::vector<CRational>& point) const;
    CliffPoly with_role(VarRole role) const;
    /// Coefficient-wise Hermitian conjugation (the variables are real).
    CliffPoly hermitian_conjugate() const;

    friend bool operator==(const CliffPoly& a, const CliffPoly& b) {
        return a.m_ == b.m_ && a.role_ == b.role_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffPoly& a, const CliffPoly& b) { return !(a == b); }

    std::string str() const;

  private:
    int m_;
    VarRole role_;
    TermMap terms_;

    void check_compatible(const CliffPoly& o) const;
};

/// x * p or p * x where x is the grade-1 vector variable of p's own tuple.
CliffPoly vector_mul(Side side, const CliffPoly& p);

/// Polynomial in two independent m-tuples (e.g. the x and u roles of a
/// kernel). Term keys are (first-slot monomial, second-slot monomial).
class BiPoly {
  public:
    using Key = std::pair<Monomial, Monomial>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const;
    };
    using TermMap = std::map<Key, MultiVector, KeyLess>;

    BiPoly(int m, VarRole first, VarRole second);
    static BiPoly scalar_constant(int m, VarRole first, VarRole second, const CRational& c);
    /// Embeds a one-tuple polynomial into the given slot, the other slot constant.
    static BiPoly embed(const CliffPoly& p, Slot slot, VarRole other_role);

    int dimension() const { return m_; }
    VarRole role(Slot slot) const { return slot == Slot::First ? role_first_ : role_second_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree(Slot slot) const; // max slot degree, -1 for zero

    void add_term(const Key& key, const MultiVector& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    BiPoly scaled(const CRational& c) const;
    BiPoly scaled(const Rational& c) const;
    BiPoly divided(const Rational& c) const;

    BiPoly derivative(Slot slot, int j) const;
    BiPoly homogeneous_component(Slot slot, int k) const;
    /// Homogeneous in the slot? Returns the common degree (0 for zero).
    std::optional<int> slot_homogeneous_degree(Slot slot) const;

    /// Multiplies by a one-tuple polynomial living in the given slot;
    /// side says which side of the coefficient product the argument takes.
    BiPoly mul_poly(Slot slot, Side side, const CliffPoly& p) const;

    /// Swaps the two variable tuples (roles move with their exponents);
    /// the represented polynomial is unchanged.
    BiPoly swap_slots() const;
    /// Relabels the slots without touching exponents: turns K(x,u) into
    /// K(u,x) when called with the roles exchanged.
    BiPoly with_roles(VarRole first, VarRole second) const;
    BiPoly hermitian_conjugate() const;

    /// Requires the other slot to be exponent-free everywhere.
    CliffPoly collapse(Slot keep) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.m_ == b.m_ && a.role_first_ == b.role_first_ &&
               a.role_second_ == b.role_second_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;

  private:
    int m_;
    VarRole role_first_;
    VarRole role_second_;
    TermMap terms_;

    void check_compatible(const BiPoly& o) const;
};

BiPoly vector_mul(Slot slot, Side side, const BiPoly& p);

/// Exact division by |v|^2 = sum_j v_j^2 of the slot's variable tuple.
/// Throws std::domain_error if the polynomial is not divisible.
BiPoly divide_by_norm_sq(const BiPoly& p, Slot slot);

} // namespace monoclif
