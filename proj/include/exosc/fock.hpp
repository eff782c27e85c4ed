#pragma once

#include <Eigen/Dense>
#include <numeric>
#include <optional>

#include "exosc/cyclotomic.hpp"
#include "exosc/freealg.hpp"
#include "exosc/report.hpp"

namespace exosc {

enum class SolutionType { bosonic, fermionic };

inline const char* solution_type_str(SolutionType t) {
    return t == SolutionType::bosonic ? "bosonic" : "fermionic";
}
std::optional<SolutionType> parse_solution_type(const std::string& s);

// B presets: "half" = 1/2, "sqrt-half" = 1/sqrt(2), "one" = 1, or a rational.
Cyclotomic parse_b_preset(const std::string& s);
Cyclotomic default_b(SolutionType t);

struct OscIds {
    GenId qNinv = -1, qN = -1, astar = -1, a = -1;
};

// Generator order: qNinv < qN < astar < a (annihilators rightmost in normal
// words).  Appends to an existing generator set so combined systems can share
// one set.
OscIds add_oscillator_gens(GeneratorSet& gs, std::optional<int> nilpotency);

// Defining relations with explicit coefficients; works for exact, symbolic
// and numeric scalars.
template <class S>
void add_oscillator_relations(Presentation<S>& p, const OscIds& g, const S& q, const S& Q1,
                              const S& Q2, const S& Q3, std::optional<int> nilpotency) {
    using E = Element<S>;
    auto W = [](std::initializer_list<GenId> gs) { return Word(gs); };
    auto one = ScalarTraits<S>::one();
    auto mono = [&](std::initializer_list<GenId> gs, const S& c) {
        return E::from_word(Word(gs), c);
    };

    p.relations.push_back({"exchange relation (a a*)", mono({g.a, g.astar}, one),
                           mono({g.astar, g.a}, Q1) + mono({g.qN, g.qN}, Q2) +
                               mono({g.qNinv, g.qNinv}, Q3)});
    p.relations.push_back({"a qN commutation", mono({g.a, g.qN}, one), mono({g.qN, g.a}, q)});
    p.relations.push_back(
        {"qN a* commutation", mono({g.qN, g.astar}, one), mono({g.astar, g.qN}, q)});
    p.relations.push_back({"a qNinv commutation", mono({g.a, g.qNinv}, one),
                           mono({g.qNinv, g.a}, ScalarTraits<S>::inv(q))});
    p.relations.push_back({"qNinv a* commutation", mono({g.qNinv, g.astar}, one),
                           mono({g.astar, g.qNinv}, ScalarTraits<S>::inv(q))});
    p.relations.push_back({"qN qNinv inverse", mono({g.qN, g.qNinv}, one), E::identity()});
    p.relations.push_back({"qNinv qN inverse", mono({g.qNinv, g.qN}, one), E::identity()});
    if (nilpotency) {
        Word ak(*nilpotency, g.a), sk(*nilpotency, g.astar);
        p.relations.push_back({"a^k nilpotency", E::from_word(ak, one), E::zero()});
        p.relations.push_back({"a*^k nilpotency", E::from_word(sk, one), E::zero()});
    }
    (void)W;
}

// Exact parameters of one solution algebra at exclusion order k.
struct SolutionParams {
    SolutionType type = SolutionType::bosonic;
    int k = 2;
    long field_order = 8;  // lcm(4k, 8)
    Cyclotomic q, z, Q1, Q2, Q3, B, R;
};

SolutionParams solution_params(SolutionType type, int k, const Cyclotomic& B);

// R = (1 - q^2 Q1) / (Q1 - q^2); throws FieldError at the degenerate
// q-oscillator points Q1 = q^{+-2}.
Cyclotomic compute_R(const Cyclotomic& q, const Cyclotomic& Q1);

struct OscillatorSystem {
    SolutionParams params;
    OscIds ids;
    Presentation<Cyclotomic> presentation;
    RewriteSystem<Cyclotomic> system;
};

OscillatorSystem make_oscillator_system(SolutionType type, int k, const Cyclotomic& B,
                                        bool with_nilpotency);

// Exact spectrum a_n^* a_n (division-free geometric-sum form; valid for any k,
// including orders past the exact-reduction limit).
Cyclotomic spectrum_value(int k, SolutionType type, const Cyclotomic& B, long n);

class PositivityViolation : public AlgebraError {
  public:
    explicit PositivityViolation(const std::string& what) : AlgebraError(what) {}
};

struct FockRep {
    int k = 0;
    SolutionType type = SolutionType::bosonic;
    Cyclotomic B;
    long field_order = 8;
    std::vector<Cyclotomic> spectral;  // s_0 .. s_k (exact squares a_n^* a_n)
    Eigen::MatrixXcd mat_a, mat_astar, mat_qN, mat_qNinv;

    Eigen::MatrixXcd matrix_of(const OscIds& ids, GenId g) const;
    Eigen::MatrixXcd word_matrix(const OscIds& ids, const Word& w) const;
    Eigen::MatrixXcd element_matrix(const OscIds& ids, const Element<Cyclotomic>& e) const;
};

FockRep build_fock_rep(int k, SolutionType type, const Cyclotomic& B);

// Exact diagonal action of a word on |n>: scalar is a cyclotomic coefficient
// times a product of sqrt(s_j) factors; even powers fold back into the
// coefficient, so relations quadratic in the ladder operators stay exact.
using SqrtMono = std::map<int, int>;
using DiagValue = std::map<std::pair<int, SqrtMono>, Cyclotomic>;

DiagValue apply_element_exact(const FockRep& rep, const OscIds& ids, const Element<Cyclotomic>& e,
                              int n);
bool diag_is_zero(const DiagValue& v);
std::string diag_str(const DiagValue& v);

// Per-relation verification: exact spectral residual on every state plus the
// floating matrix residual.
std::vector<Check> verify_relations(const FockRep& rep, const OscIds& ids,
                                    const Presentation<Cyclotomic>& pres, double float_tol);

// Representation invariants (hermiticity, nilpotent matrices, unitary q^N,
// spectrum endpoints, trigonometric form of the exchange relation).
std::vector<Check> verify_rep_invariants(const FockRep& rep, double float_tol);

}  // namespace exosc
