#include "exosc/fock.hpp"

#include <cmath>

namespace exosc {

std::optional<SolutionType> parse_solution_type(const std::string& s) {
    if (s == "bosonic") return SolutionType::bosonic;
    if (s == "fermionic") return SolutionType::fermionic;
    return std::nullopt;
}

Cyclotomic parse_b_preset(const std::string& s) {
    if (s == "half") return Cyclotomic::from_rational(Rational(1, 2));
    if (s == "sqrt-half") return Cyclotomic::inv_sqrt2();
    if (s == "one") return Cyclotomic::one();
    return Cyclotomic::from_rational(parse_rational(s));
}

Cyclotomic default_b(SolutionType t) {
    return t == SolutionType::bosonic ? Cyclotomic::from_rational(Rational(1, 2))
                                      : Cyclotomic::inv_sqrt2();
}

OscIds add_oscillator_gens(GeneratorSet& gs, std::optional<int> nilpotency) {
    OscIds ids;
    ids.qNinv = gs.add("qNinv", 0);
    ids.qN = gs.add("qN", 0);
    ids.astar = gs.add("astar", 1, nilpotency);
    ids.a = gs.add("a", -1, nilpotency);
    gs.set_star_pair(ids.qN, ids.qNinv);
    gs.set_star_pair(ids.a, ids.astar);
    return ids;
}

Cyclotomic compute_R(const Cyclotomic& q, const Cyclotomic& Q1) {
    Cyclotomic q2 = q * q;
    Cyclotomic den = Q1 - q2;
    if (den.is_zero())
        throw FieldError("R undefined: Q1 equals q^2 (degenerate q-oscillator point)");
    Cyclotomic num = Cyclotomic::one() - q2 * Q1;
    Cyclotomic R = num * den.inv();
    if (!R.is_real()) throw FieldError("internal: R is not real");
    return R;
}

SolutionParams solution_params(SolutionType type, int k, const Cyclotomic& B) {
    if (k < 2) throw AlgebraError("exclusion order k must be >= 2");
    SolutionParams p;
    p.type = type;
    p.k = k;
    p.field_order = std::lcm(4L * k, 8L);
    p.B = B;
    p.q = Cyclotomic::root(p.field_order, p.field_order / (4L * k));
    Cyclotomic i = Cyclotomic::imaginary_unit();
    if (type == SolutionType::bosonic) {
        p.Q1 = Cyclotomic::one();
        p.z = Cyclotomic::one();
        p.Q2 = p.q * B;
    } else {
        p.Q1 = -Cyclotomic::one();
        p.z = -Cyclotomic::one();
        p.Q2 = -i * p.q * B;  // Q1^{1/2} branch chosen so the spectrum is positive
    }
    p.R = compute_R(p.q, p.Q1);
    p.Q3 = p.Q1 * p.R * p.Q2.conj();
    // ground-state constraint Q2* = q^-2 Q1^-1 Q2 must hold by construction
    if (p.Q2.conj() != p.q.pow(-2) * p.Q1.inv() * p.Q2)
        throw AlgebraError("internal: ground-state constraint violated");
    return p;
}

OscillatorSystem make_oscillator_system(SolutionType type, int k, const Cyclotomic& B,
                                        bool with_nilpotency) {
    SolutionParams params = solution_params(type, k, B);
    GeneratorSet gs;
    OscIds ids = add_oscillator_gens(gs, with_nilpotency ? std::optional<int>(k) : std::nullopt);
    Presentation<Cyclotomic> pres;
    pres.gens = gs;
    add_oscillator_relations<Cyclotomic>(pres, ids, params.q, params.Q1, params.Q2, params.Q3,
                                         with_nilpotency ? std::optional<int>(k) : std::nullopt);
    RewriteSystem<Cyclotomic> rs = pres.system();
    return OscillatorSystem{std::move(params), ids, std::move(pres), std::move(rs)};
}

Cyclotomic spectrum_value(int k, SolutionType type, const Cyclotomic& B, long n) {
    if (k < 2) throw AlgebraError("exclusion order k must be >= 2");
    if (n < 0 || n > k)
        throw AlgebraError("state index n out of range [0, k]: " + std::to_string(n));
    long m = std::lcm(4L * k, 8L);
    long e = m / (4L * k);  // q = zeta_m^e
    Cyclotomic s = Cyclotomic::zero();
    for (long j = 0; j < 2 * n; ++j) {
        long expo = (2 * n - 1 - 2 * j) * e;
        Cyclotomic term = Cyclotomic::root(m, expo);
        if (type == SolutionType::fermionic && (j % 2)) term = -term;
        s += term;
    }
    if (type == SolutionType::fermionic) {
        // divide by i: multiply by -i = zeta_4^3
        s *= Cyclotomic::root(4, 3);
    }
    return B * s;
}

Eigen::MatrixXcd FockRep::matrix_of(const OscIds& ids, GenId g) const {
    if (g == ids.a) return mat_a;
    if (g == ids.astar) return mat_astar;
    if (g == ids.qN) return mat_qN;
    if (g == ids.qNinv) return mat_qNinv;
    throw AlgebraError("generator has no Fock matrix");
}

Eigen::MatrixXcd FockRep::word_matrix(const OscIds& ids, const Word& w) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(k, k);
    for (GenId g : w) m = m * matrix_of(ids, g);
    return m;
}

Eigen::MatrixXcd FockRep::element_matrix(const OscIds& ids, const Element<Cyclotomic>& e) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
    for (const auto& [w, c] : e.terms()) m += c.to_complex() * word_matrix(ids, w);
    return m;
}

FockRep build_fock_rep(int k, SolutionType type, const Cyclotomic& B) {
    if (k < 2) throw AlgebraError("exclusion order k must be >= 2");
    if (k > 1024) throw AlgebraError("matrix representation limited to k <= 1024");
    FockRep rep;
    rep.k = k;
    rep.type = type;
    rep.B = B;
    rep.field_order = std::lcm(4L * k, 8L);
    rep.spectral.reserve(k + 1);
    bool exact_checks = rep.field_order <= Cyclotomic::kReduceLimit;
    for (long n = 0; n <= k; ++n) {
        Cyclotomic s = spectrum_value(k, type, B, n);
        if (exact_checks && !s.is_real())
            throw PositivityViolation("spectrum value not real at n=" + std::to_string(n));
        double v = s.to_complex().real();
        if (v < -1e-9)
            throw PositivityViolation("negative spectrum at n=" + std::to_string(n) + ": " +
                                      std::to_string(v));
        rep.spectral.push_back(std::move(s));
    }
    rep.mat_a = Eigen::MatrixXcd::Zero(k, k);
    rep.mat_astar = Eigen::MatrixXcd::Zero(k, k);
    rep.mat_qN = Eigen::MatrixXcd::Zero(k, k);
    rep.mat_qNinv = Eigen::MatrixXcd::Zero(k, k);
    for (int n = 0; n < k; ++n) {
        double theta = M_PI * n / (2.0 * k);
        rep.mat_qN(n, n) = std::complex<double>(std::cos(theta), std::sin(theta));
        rep.mat_qNinv(n, n) = std::complex<double>(std::cos(theta), -std::sin(theta));
    }
    for (int n = 1; n < k; ++n) {
        double an = std::sqrt(std::max(0.0, rep.spectral[n].to_complex().real()));
        rep.mat_a(n - 1, n) = an;
        rep.mat_astar(n, n - 1) = an;
    }
    return rep;
}

namespace {

void diag_insert(DiagValue& dv, const FockRep& rep, int state, const SqrtMono& mono,
                 Cyclotomic coeff) {
    SqrtMono residue;
    for (const auto& [j, e] : mono) {
        if (e / 2 > 0) coeff *= rep.spectral[j].pow(e / 2);
        if (e % 2) residue[j] = 1;
    }
    if (coeff.is_zero()) return;
    auto key = std::make_pair(state, std::move(residue));
    auto it = dv.find(key);
    if (it == dv.end()) {
        dv.emplace(std::move(key), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) dv.erase(it);
    }
}

}  // namespace

DiagValue apply_element_exact(const FockRep& rep, const OscIds& ids, const Element<Cyclotomic>& e,
                              int n) {
    DiagValue dv;
    long m = rep.field_order;
    long qe = m / (4L * rep.k);
    for (const auto& [w, c] : e.terms()) {
        int state = n;
        SqrtMono mono;
        Cyclotomic coeff = c;
        bool dead = false;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            GenId g = *it;
            if (g == ids.a) {
                if (state == 0 || rep.spectral[state].is_zero()) {
                    dead = true;
                    break;
                }
                mono[state] += 1;
                --state;
            } else if (g == ids.astar) {
                if (state == rep.k - 1 || rep.spectral[state + 1].is_zero()) {
                    dead = true;
                    break;
                }
                mono[state + 1] += 1;
                ++state;
            } else if (g == ids.qN) {
                coeff *= Cyclotomic::root(m, qe * state);
            } else if (g == ids.qNinv) {
                coeff *= Cyclotomic::root(m, -qe * state);
            } else {
                throw AlgebraError("generator has no Fock action");
            }
        }
        if (!dead) diag_insert(dv, rep, state, mono, coeff);
    }
    return dv;
}

bool diag_is_zero(const DiagValue& v) { return v.empty(); }

std::string diag_str(const DiagValue& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : v) {
        if (!s.empty()) s += "  +  ";
        s += "(" + c.str() + ")|" + std::to_string(key.first) + ">";
        for (const auto& [j, e] : key.second)
            s += "*sqrt(s" + std::to_string(j) + ")^" + std::to_string(e);
    }
    return s;
}

std::vector<Check> verify_relations(const FockRep& rep, const OscIds& ids,
                                    const Presentation<Cyclotomic>& pres, double float_tol) {
    std::vector<Check> out;
    for (const auto& rel : pres.relations) {
        Element<Cyclotomic> diff = rel.lhs - rel.rhs;
        bool zero = true;
        std::string witness = "0";
        for (int n = 0; n < rep.k && zero; ++n) {
            DiagValue v = apply_element_exact(rep, ids, diff, n);
            if (!diag_is_zero(v)) {
                zero = false;
                witness = "on |" + std::to_string(n) + ">: " + diag_str(v);
            }
        }
        out.push_back(exact_check(rel.name + " (spectral)", zero, witness));
        double res = rep.element_matrix(ids, diff).cwiseAbs().maxCoeff();
        out.push_back(float_check(rel.name + " (matrix)", res, float_tol));
    }
    return out;
}

std::vector<Check> verify_rep_invariants(const FockRep& rep, double float_tol) {
    std::vector<Check> out;
    int k = rep.k;
    double herm = (rep.mat_astar - rep.mat_a.adjoint()).cwiseAbs().maxCoeff();
    out.push_back(float_check("a* is the conjugate transpose of a", herm, float_tol));

    Eigen::MatrixXcd apow = Eigen::MatrixXcd::Identity(k, k);
    for (int i = 0; i < k; ++i) apow = apow * rep.mat_a;
    out.push_back(float_check("a^k vanishes as a matrix", apow.cwiseAbs().maxCoeff(), float_tol));
    Eigen::MatrixXcd spow = Eigen::MatrixXcd::Identity(k, k);
    for (int i = 0; i < k; ++i) spow = spow * rep.mat_astar;
    out.push_back(float_check("a*^k vanishes as a matrix", spow.cwiseAbs().maxCoeff(), float_tol));

    double unitary =
        (rep.mat_qN * rep.mat_qNinv - Eigen::MatrixXcd::Identity(k, k)).cwiseAbs().maxCoeff();
    out.push_back(float_check("qN qNinv = identity", unitary, float_tol));

    out.push_back(exact_check("ground state spectrum s_0 = 0", rep.spectral[0].is_zero(),
                              rep.spectral[0].str()));
    bool highest_ok = true;
    std::string highest_witness = "0";
    if (rep.field_order <= Cyclotomic::kReduceLimit) {
        highest_ok = rep.spectral[k].is_zero();
        if (!highest_ok) highest_witness = rep.spectral[k].str();
    } else {
        highest_ok = std::abs(rep.spectral[k].to_complex()) <= float_tol;
    }
    out.push_back(exact_check("highest state annihilated: s_k = 0", highest_ok, highest_witness));

    bool real_nonneg = true;
    std::string rn_witness = "0";
    for (int n = 0; n <= k; ++n) {
        bool real = rep.field_order <= Cyclotomic::kReduceLimit ? rep.spectral[n].is_real()
                                                                : true;
        if (!real || rep.spectral[n].to_complex().real() < -1e-12) {
            real_nonneg = false;
            rn_witness = "s_" + std::to_string(n) + " = " + rep.spectral[n].str();
            break;
        }
    }
    out.push_back(exact_check("spectrum real and nonnegative", real_nonneg, rn_witness));

    // Trigonometric form of the exchange relation on every state.
    if (rep.field_order <= Cyclotomic::kReduceLimit) {
        long m = rep.field_order;
        long e = m / (4L * k);
        bool trig_ok = true;
        std::string trig_witness = "0";
        for (int n = 0; n < k && trig_ok; ++n) {
            Cyclotomic rhs;
            Cyclotomic lhs;
            Cyclotomic qp = Cyclotomic::root(m, e * (2 * n + 1));
            Cyclotomic qm = Cyclotomic::root(m, -e * (2 * n + 1));
            if (rep.type == SolutionType::bosonic) {
                lhs = rep.spectral[n + 1] - rep.spectral[n];
                rhs = rep.B * (qp + qm);  // 2B cos((2n+1)pi/2k)
            } else {
                lhs = rep.spectral[n + 1] + rep.spectral[n];
                rhs = -Cyclotomic::imaginary_unit() * rep.B * (qp - qm);  // 2B sin((2n+1)pi/2k)
            }
            if (lhs != rhs) {
                trig_ok = false;
                trig_witness = "n=" + std::to_string(n) + ": " + (lhs - rhs).str();
            }
        }
        out.push_back(
            exact_check("exchange relation, trigonometric form", trig_ok, trig_witness));
    }
    return out;
}

}  // namespace exosc
