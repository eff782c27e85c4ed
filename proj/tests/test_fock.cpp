#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "exosc/fock.hpp"
#include "oracles.hpp"

using namespace exosc;
using C = Cyclotomic;

TEST_CASE("spectrum endpoints and known values") {
    // ground state
    for (auto type : {SolutionType::bosonic, SolutionType::fermionic})
        for (int k : {2, 3, 5})
            CHECK(spectrum_value(k, type, default_b(type), 0).is_zero());
    // Pauli point: k=2 fermionic with B = 1/sqrt(2) has spectrum {0, 1}
    C s1 = spectrum_value(2, SolutionType::fermionic, C::inv_sqrt2(), 1);
    CHECK(s1.is_one());
    CHECK(spectrum_value(2, SolutionType::fermionic, C::inv_sqrt2(), 2).is_zero());
    // bosonic k=3, B=1/2, n=1: sin(pi/3)/(2 sin(pi/6))
    C b1 = spectrum_value(3, SolutionType::bosonic, C::from_rational(Rational(1, 2)), 1);
    CHECK(std::abs(b1.to_complex().real() - 0.8660254037844386) <= 1e-12);
    CHECK(std::abs(b1.to_complex().imag()) <= 1e-14);
    // out-of-range state index
    CHECK_THROWS_AS(spectrum_value(3, SolutionType::bosonic, C::one(), 4), AlgebraError);
    CHECK_THROWS_AS(spectrum_value(3, SolutionType::bosonic, C::one(), -1), AlgebraError);
}

TEST_CASE("large-k bosonic spectrum approaches the integer ladder") {
    for (long n = 0; n <= 5; ++n) {
        C s = spectrum_value(10000, SolutionType::bosonic, C::from_rational(Rational(1, 2)), n);
        CHECK(std::abs(s.to_complex().real() - static_cast<double>(n)) <= 1e-5);
        CHECK(std::abs(s.to_complex().imag()) <= 1e-9);
    }
}

TEST_CASE("closed form agrees exactly with the recursion oracle") {
    for (auto type : {SolutionType::bosonic, SolutionType::fermionic}) {
        for (int k = 2; k <= 12; ++k) {
            auto params = solution_params(type, k, default_b(type));
            auto oracle = exosc_test::spectrum_recursion(params, k);
            for (int n = 0; n <= k; ++n) {
                CHECK(spectrum_value(k, type, params.B, n) == oracle[n]);
            }
        }
    }
}

TEST_CASE("solution parameters satisfy the stated side conditions") {
    for (auto type : {SolutionType::bosonic, SolutionType::fermionic}) {
        for (int k : {2, 3, 4, 7}) {
            auto p = solution_params(type, k, default_b(type));
            CHECK(p.R.is_real());
            CHECK(p.Q1.is_unit_modulus());
            CHECK(p.Q2.conj() == p.q.pow(-2) * p.Q1.inv() * p.Q2);  // ground state
            CHECK(p.Q3 == p.Q1 * p.R * p.Q2.conj());
        }
    }
    // fermionic Q2 = -i q B: float image for k=2, B=1/sqrt(2) is (1/2, -1/2)
    auto pf = solution_params(SolutionType::fermionic, 2, C::inv_sqrt2());
    auto q2 = pf.Q2.to_complex();
    CHECK(std::abs(q2.real() - 0.5) <= 1e-12);
    CHECK(std::abs(q2.imag() + 0.5) <= 1e-12);
    CHECK_THROWS_AS(compute_R(C::root(8, 1), C::root(8, 2)), FieldError);  // Q1 = q^2
}

TEST_CASE("fock representation matrices") {
    FockRep f2 = build_fock_rep(2, SolutionType::fermionic, C::inv_sqrt2());
    CHECK(std::abs(f2.mat_a(0, 1) - std::complex<double>(1, 0)) <= 1e-12);
    CHECK(std::abs(f2.mat_a(0, 0)) <= 1e-15);
    CHECK(std::abs(f2.mat_a(1, 0)) <= 1e-15);
    CHECK(std::abs(f2.mat_a(1, 1)) <= 1e-15);
    CHECK((f2.mat_astar - f2.mat_a.adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
    // aa* + a*a = identity at the Pauli point
    Eigen::MatrixXcd anti = f2.mat_a * f2.mat_astar + f2.mat_astar * f2.mat_a;
    CHECK((anti - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);

    FockRep b4 = build_fock_rep(4, SolutionType::bosonic, C::from_rational(Rational(1, 2)));
    Eigen::MatrixXcd a4 = b4.mat_a * b4.mat_a * b4.mat_a * b4.mat_a;
    CHECK(a4.cwiseAbs().maxCoeff() <= 1e-12);
    for (int n = 0; n < 4; ++n) {
        std::complex<double> expect = std::polar(1.0, M_PI * n / 8.0);
        CHECK(std::abs(b4.mat_qN(n, n) - expect) <= 1e-12);
    }
}

TEST_CASE("number operator behavior: a*a and aa* are diagonal shifts of s") {
    auto sys = make_oscillator_system(SolutionType::bosonic, 5, default_b(SolutionType::bosonic),
                                      true);
    FockRep rep = build_fock_rep(5, SolutionType::bosonic, default_b(SolutionType::bosonic));
    using E = Element<C>;
    for (int n = 0; n < 5; ++n) {
        DiagValue low = apply_element_exact(rep, sys.ids,
                                            E::from_word({sys.ids.astar, sys.ids.a}, C::one()), n);
        if (n == 0) {
            CHECK(diag_is_zero(low));
        } else {
            REQUIRE(low.size() == 1);
            CHECK(low.begin()->first.first == n);
            CHECK(low.begin()->second == rep.spectral[n]);
        }
        DiagValue high = apply_element_exact(rep, sys.ids,
                                             E::from_word({sys.ids.a, sys.ids.astar}, C::one()), n);
        if (n == 4) {
            CHECK(diag_is_zero(high));
        } else {
            REQUIRE(high.size() == 1);
            CHECK(high.begin()->second == rep.spectral[n + 1]);
        }
    }
}

TEST_CASE("relation suite passes for both types at small k") {
    for (auto type : {SolutionType::bosonic, SolutionType::fermionic}) {
        for (int k : {2, 3, 4}) {
            auto sys = make_oscillator_system(type, k, default_b(type), true);
            FockRep rep = build_fock_rep(k, type, default_b(type));
            auto checks = verify_relations(rep, sys.ids, sys.presentation, 1e-10);
            for (const auto& c : checks) {
                INFO(c.name);
                CHECK(c.pass);
            }
            auto inv = verify_rep_invariants(rep, 1e-10);
            for (const auto& c : inv) {
                INFO(c.name);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("tampered representation fails the relation suite") {
    auto sys = make_oscillator_system(SolutionType::bosonic, 3, default_b(SolutionType::bosonic),
                                      true);
    FockRep rep = build_fock_rep(3, SolutionType::bosonic, default_b(SolutionType::bosonic));
    rep.mat_a *= 1.01;
    auto checks = verify_relations(rep, sys.ids, sys.presentation, 1e-10);
    double worst = 0.0;
    for (const auto& c : checks)
        if (c.kind == CheckKind::floating) worst = std::max(worst, c.residual_float);
    CHECK(worst > 1e-3);
}

TEST_CASE("b presets parse") {
    CHECK(parse_b_preset("half") == C::from_rational(Rational(1, 2)));
    CHECK(parse_b_preset("one") == C::one());
    CHECK((parse_b_preset("sqrt-half") * C::sqrt2()).is_one());
    CHECK(parse_b_preset("3/7") == C::from_rational(Rational(3, 7)));
    CHECK_THROWS(parse_b_preset("xyzzy"));
}
