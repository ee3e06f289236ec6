#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monoclif/rational.hpp"

namespace monoclif {

/// Basis blade e_A as a bitmask: bit j-1 set means generator e_j is present.
/// Mask 0 is the identity blade.
using BladeMask = std::uint32_t;

int blade_grade(BladeMask a);

/// Sign of e_A * e_B with e_j^2 = -1 and anticommuting distinct generators:
/// one transposition per out-of-order pair plus one -1 per contracted index.
/// The resulting blade is A xor B.
int blade_product_sign(BladeMask a, BladeMask b);

/// Sign of the Clifford conjugation on e_A: reversal combined with e_j -> -e_j,
/// i.e. (-1)^{g(g+1)/2} for grade g.
int blade_conjugation_sign(BladeMask a);

std::vector<int> blade_indices(BladeMask a);
BladeMask blade_from_indices(const std::vector<int>& indices, int m);

/// Canonical blade order: by grade, then by mask.
struct BladeLess {
    bool operator()(BladeMask a, BladeMask b) const;
};

/// Element of the complexified Clifford algebra C_m, 2 <= m <= 8.
/// Immutable in spirit: all operations return new values. No zero
/// coefficients are ever stored.
class MultiVector {
  public:
    using TermMap = std::map<BladeMask, CRational, BladeLess>;

    explicit MultiVector(int m);
    static MultiVector scalar(int m, const CRational& c);
    static MultiVector generator(int m, int j); // e_j, 1-based
    static MultiVector blade(int m, BladeMask mask, const CRational& c);

    int dimension() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    /// True when every stored term has the given grade (zero qualifies).
    bool is_grade(int g) const;

    CRational coefficient(BladeMask mask) const;
    CRational scalar_part() const { return coefficient(0); }

    void add_term(BladeMask mask, const CRational& c);

    MultiVector operator-() const;
    MultiVector& operator+=(const MultiVector& o);
    MultiVector& operator-=(const MultiVector& o);
    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }

    /// Geometric product.
    friend MultiVector operator*(const MultiVector& a, const MultiVector& b);

    MultiVector scaled(const CRational& c) const;
    MultiVector scaled(const Rational& c) const;

    /// Clifford conjugation a -> a-bar (blade reversal with e_j -> -e_j);
    /// complex scalars are untouched.
    MultiVector conjugate() const;
    /// Hermitian conjugation c -> c-dagger = a-bar - i b-bar: Clifford
    /// conjugation plus complex conjugation of every coefficient.
    MultiVector hermitian_conjugate() const;

    MultiVector grade_part(int g) const;

    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

    std::string str() const;

  private:
    int m_;
    TermMap terms_;

    void check_same_dimension(const MultiVector& o) const;
};

std::string blade_str(BladeMask mask);

/// Splits the product of two 1-vectors: xy = -<x,y> + x^y.
/// Returns (<x,y>, x^y); throws std::invalid_argument unless both inputs are
/// pure grade 1.
std::pair<CRational, MultiVector> dot_and_wedge(const MultiVector& x, const MultiVector& y);

} // namespace monoclif
