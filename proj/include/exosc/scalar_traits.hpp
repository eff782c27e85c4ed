#pragma once

#include <complex>
#include <string>

#include "exosc/cyclotomic.hpp"
#include "exosc/symscalar.hpp"

namespace exosc {

// Uniform scalar interface for the free-algebra templates.  Instantiated with
// Cyclotomic (exact engine), SymScalar (generic-parameter derivations) and
// std::complex<double> (numeric path of the solver).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Cyclotomic> {
    static Cyclotomic zero() { return Cyclotomic::zero(); }
    static Cyclotomic one() { return Cyclotomic::one(); }
    static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
    static Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
    static Cyclotomic inv(const Cyclotomic& x) { return x.inv(); }
    static std::string str(const Cyclotomic& x) { return x.str(); }
    static double magnitude(const Cyclotomic& x) { return x.abs(); }
    static constexpr bool exact = true;
};

template <>
struct ScalarTraits<SymScalar> {
    static SymScalar zero() { return SymScalar::zero(); }
    static SymScalar one() { return SymScalar::one(); }
    static bool is_zero(const SymScalar& x) { return x.is_zero(); }
    static SymScalar conj(const SymScalar& x) { return x.conj(); }
    static SymScalar inv(const SymScalar& x) { return x.inv(); }
    static std::string str(const SymScalar& x) { return x.str(); }
    static double magnitude(const SymScalar&) {
        throw FieldError("symbolic scalars have no numeric magnitude");
    }
    static constexpr bool exact = true;
};

template <>
struct ScalarTraits<std::complex<double>> {
    static constexpr double kZeroTol = 1e-13;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x) { return std::abs(x) < kZeroTol; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
    static std::complex<double> inv(const std::complex<double>& x) { return 1.0 / x; }
    static std::string str(const std::complex<double>& x) {
        return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
    }
    static double magnitude(const std::complex<double>& x) { return std::abs(x); }
    static constexpr bool exact = false;
};

}  // namespace exosc
