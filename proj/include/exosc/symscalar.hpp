#pragma once

#include <array>
#include <map>
#include <string>

#include "exosc/cyclotomic.hpp"
#include "exosc/rational.hpp"

namespace exosc {

// Commutative monomial in the formal parameters q, Q1 (Laurent) and
// Q2, Q2*, Q3, Q3* (polynomial).  Used by the covariance derivation, which
// works with generic oscillator parameters.
struct SymMono {
    // exponents of: q, Q1, Q2, Q2*, Q3, Q3*
    std::array<int, 6> e{0, 0, 0, 0, 0, 0};
    bool operator<(const SymMono& o) const { return e < o.e; }
    bool operator==(const SymMono& o) const { return e == o.e; }
};

class SymScalar {
  public:
    SymScalar() = default;

    static SymScalar zero() { return {}; }
    static SymScalar one() { return from_rational(Rational(1)); }
    static SymScalar from_rational(const Rational& r);
    static SymScalar q(int e = 1);
    static SymScalar Q1(int e = 1);
    static SymScalar Q2();
    static SymScalar Q2c();
    static SymScalar Q3();
    static SymScalar Q3c();

    bool is_zero() const { return t_.empty(); }
    bool operator==(const SymScalar& o) const;
    bool operator!=(const SymScalar& o) const { return !(*this == o); }

    SymScalar operator+(const SymScalar& o) const;
    SymScalar operator-(const SymScalar& o) const;
    SymScalar operator*(const SymScalar& o) const;
    SymScalar operator-() const;
    SymScalar& operator+=(const SymScalar& o) { return *this = *this + o; }
    SymScalar& operator*=(const SymScalar& o) { return *this = *this * o; }

    // q -> q^-1, Q1 -> Q1^-1, Q2 <-> Q2*, Q3 <-> Q3*.
    SymScalar conj() const;

    // Inverse of a single monomial with invertible symbols (q, Q1 powers and
    // rational coefficient only); throws otherwise.
    SymScalar inv() const;

    bool is_single_monomial() const { return t_.size() == 1; }

    // Substitute exact values for all symbols (Q2* and Q3* get the conjugates).
    Cyclotomic substitute(const Cyclotomic& q, const Cyclotomic& Q1, const Cyclotomic& Q2,
                          const Cyclotomic& Q3) const;

    // Classical limit: q -> 1, Q1 -> q1_sign (+1/-1); Q2, Q3 stay symbolic.
    SymScalar specialize_classical(int q1_sign) const;

    const std::map<SymMono, Rational>& terms() const { return t_; }
    std::string str() const;

  private:
    std::map<SymMono, Rational> t_;
    void insert(const SymMono& m, const Rational& r);
};

}  // namespace exosc
