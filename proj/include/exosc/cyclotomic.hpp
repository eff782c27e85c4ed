#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exosc/rational.hpp"

namespace exosc {

class FieldError : public std::runtime_error {
  public:
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public FieldError {
  public:
    DivisionByZero() : FieldError("division by zero in cyclotomic field") {}
};

// Exact element of Q(zeta_m), stored as a rational combination of powers of
// zeta_m = exp(2*pi*i/m).  Elements are kept in the canonical residue basis
// modulo the m-th cyclotomic polynomial, so equality is coefficient equality.
// Orders are lifted to the lcm automatically when two elements meet.
//
// For very large m (above kReduceLimit) the element stays as a raw sparse sum
// of roots; arithmetic and numeric evaluation still work, but zero-testing a
// nonempty sum throws ReductionUnavailable.  That mode exists for large-k
// spectrum evaluation, where only the floating image is consumed.
class Cyclotomic {
  public:
    static constexpr long kReduceLimit = 512;

    Cyclotomic() : order_(1) {}

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return from_rational(Rational(1)); }
    static Cyclotomic from_int(long v) { return from_rational(Rational(v)); }
    static Cyclotomic from_rational(const Rational& r);
    // zeta_order^power; order >= 1 required.
    static Cyclotomic root(long order, long power);
    static Cyclotomic imaginary_unit() { return root(4, 1); }
    static Cyclotomic sqrt2() { return root(8, 1) + root(8, 7); }
    static Cyclotomic inv_sqrt2();  // 1/sqrt(2) = (zeta8 + zeta8^-1)/2

    long order() const { return order_; }
    const std::map<long, Rational>& terms() const { return c_; }
    bool reduced() const { return reduced_; }

    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic conj() const;
    Cyclotomic inv() const;
    Cyclotomic pow(long e) const;

    bool is_real() const { return (*this - conj()).is_zero(); }
    bool is_unit_modulus() const { return (*this * conj()).is_one(); }
    // True when the element equals zeta_order^j for some j.
    bool is_root_of_unity() const;

    std::complex<double> to_complex() const;
    double abs() const { return std::abs(to_complex()); }
    std::string str() const;

    // Total order usable as a map key (order, then coefficient table).
    bool key_less(const Cyclotomic& o) const;

  private:
    long order_;
    std::map<long, Rational> c_;  // exponent (mod order_) -> nonzero coeff
    bool reduced_ = true;

    void insert_term(long e, const Rational& r);
    void reduce();
    Cyclotomic lifted(long new_order) const;
    static long lcm(long a, long b);
};


// Unit-modulus parameter wrapper: construction checks x * conj(x) == 1.
class UnitParam {
  public:
    explicit UnitParam(Cyclotomic v) : value_(std::move(v)) {
        if (!value_.is_unit_modulus())
            throw FieldError("parameter is not unit-modulus: " + value_.str());
    }
    const Cyclotomic& value() const { return value_; }

  private:
    Cyclotomic value_;
};

// Gaussian binomial [n choose j]_base computed by the Pascal recurrence
// (division-free).
Cyclotomic gauss_binomial(long n, long j, const Cyclotomic& base);

}  // namespace exosc
