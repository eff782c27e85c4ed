#include "exosc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace exosc {

namespace {

using Poly = std::vector<Rational>;  // coeff[i] of x^i

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, requires monic divisor and zero remainder.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    const size_t dd = den.size() - 1;
    for (size_t i = num.size(); i-- > dd;) {
        if (num[i] == 0) continue;
        Rational f = num[i];  // den is monic
        q[i - dd] = f;
        for (size_t j = 0; j < den.size(); ++j) num[i - dd + j] -= f * den[j];
    }
    poly_trim(num);
    if (!num.empty()) throw FieldError("internal: inexact polynomial division");
    return q;
}

const Poly& cyclotomic_polynomial(long m) {
    static std::unordered_map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    std::function<const Poly&(long)> get = [&](long n) -> const Poly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        Poly f(n + 1, Rational(0));
        f[0] = -1;
        f[n] = 1;  // x^n - 1
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            f = poly_div_exact(std::move(f), get(d));
        }
        return cache.emplace(n, std::move(f)).first->second;
    };
    return get(m);
}

}  // namespace

long Cyclotomic::lcm(long a, long b) { return std::lcm(a, b); }

void Cyclotomic::insert_term(long e, const Rational& r) {
    if (r == 0) return;
    e %= order_;
    if (e < 0) e += order_;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, r);
    } else {
        it->second += r;
        if (it->second == 0) c_.erase(it);
    }
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
    Cyclotomic x;
    x.insert_term(0, r);
    return x;
}

Cyclotomic Cyclotomic::root(long order, long power) {
    if (order < 1) throw FieldError("root of unity needs order >= 1");
    Cyclotomic x;
    x.order_ = order;
    x.insert_term(power, Rational(1));
    x.reduce();
    return x;
}

Cyclotomic Cyclotomic::inv_sqrt2() {
    Cyclotomic s = sqrt2();
    Cyclotomic x;
    x.order_ = s.order_;
    for (const auto& [e, r] : s.c_) x.insert_term(e, r / 2);
    x.reduce();
    return x;
}

void Cyclotomic::reduce() {
    if (order_ > kReduceLimit) {
        reduced_ = false;
        return;
    }
    reduced_ = true;
    if (c_.empty()) return;
    const Poly& phi = cyclotomic_polynomial(order_);
    const long deg = static_cast<long>(phi.size()) - 1;
    if (c_.rbegin()->first < deg) return;  // already in the residue basis
    std::vector<Rational> dense(order_, Rational(0));
    for (const auto& [e, r] : c_) dense[e] = r;
    for (long i = order_ - 1; i >= deg; --i) {
        if (dense[i] == 0) continue;
        Rational f = dense[i];
        for (long j = 0; j <= deg; ++j) dense[i - deg + j] -= f * phi[j];
    }
    c_.clear();
    for (long e = 0; e < deg; ++e)
        if (dense[e] != 0) c_.emplace(e, dense[e]);
}

Cyclotomic Cyclotomic::lifted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw FieldError("internal: bad order lift");
    Cyclotomic x;
    x.order_ = new_order;
    const long k = new_order / order_;
    for (const auto& [e, r] : c_) x.insert_term(e * k, r);
    x.reduce();
    return x;
}

bool Cyclotomic::is_zero() const {
    if (c_.empty()) return true;
    if (!reduced_)
        throw FieldError("exact zero test unavailable: field order " +
                         std::to_string(order_) + " exceeds reduction limit");
    return false;
}

bool Cyclotomic::is_rational() const {
    if (c_.empty()) return true;
    if (!reduced_) return false;
    return c_.size() == 1 && c_.begin()->first == 0;
}

Rational Cyclotomic::rational_value() const {
    if (c_.empty()) return Rational(0);
    if (!is_rational()) throw FieldError("element is not rational: " + str());
    return c_.begin()->second;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = lcm(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (const auto& [e, r] : b.c_) a.insert_term(e, r);
    a.reduce();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& [e, r] : x.c_) r = -r;
    return x;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long m = lcm(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    Cyclotomic out;
    out.order_ = m;
    for (const auto& [e1, r1] : a.c_)
        for (const auto& [e2, r2] : b.c_) out.insert_term(e1 + e2, r1 * r2);
    out.reduce();
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic x;
    x.order_ = order_;
    for (const auto& [e, r] : c_) x.insert_term(-e, r);
    x.reduce();
    return x;
}

Cyclotomic Cyclotomic::inv() const {
    if (c_.empty()) throw DivisionByZero();
    // Monomial shortcut: (r * zeta^e)^-1 = (1/r) * zeta^-e.
    if (c_.size() == 1) {
        Cyclotomic x;
        x.order_ = order_;
        x.insert_term(-c_.begin()->first, Rational(1) / c_.begin()->second);
        x.reduce();
        return x;
    }
    if (!reduced_)
        throw FieldError("inversion unavailable at field order " + std::to_string(order_));
    // Exact linear solve in the residue basis: find y with x*y = 1.
    const Poly& phi = cyclotomic_polynomial(order_);
    const long n = static_cast<long>(phi.size()) - 1;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1, Rational(0)));
    for (long i = 0; i < n; ++i) {
        Cyclotomic col = *this * root(order_, i);
        col = col.lifted(order_);
        for (const auto& [e, r] : col.c_) aug[e][i] = r;
    }
    aug[0][n] = 1;
    long row = 0;
    for (long col = 0; col < n && row < n; ++col) {
        long piv = -1;
        for (long i = row; i < n; ++i)
            if (aug[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(aug[row], aug[piv]);
        Rational p = aug[row][col];
        for (long j = col; j <= n; ++j) aug[row][j] /= p;
        for (long i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (long j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        ++row;
    }
    // The system x*y = 1 is solvable iff x != 0 (Q(zeta_m) is a field); an
    // inconsistent row therefore means x was a nonzero-looking zero.
    for (long i = row; i < n; ++i)
        if (aug[i][n] != 0) throw DivisionByZero();
    Cyclotomic y;
    y.order_ = order_;
    // Back-substitution result: after full elimination each leading column
    // holds the solution directly.
    std::vector<Rational> sol(n, Rational(0));
    {
        long r2 = 0;
        for (long col = 0; col < n && r2 < n; ++col) {
            if (aug[r2][col] == 0) continue;
            sol[col] = aug[r2][n];
            ++r2;
        }
    }
    for (long i = 0; i < n; ++i) y.insert_term(i, sol[i]);
    y.reduce();
    if (!((*this * y).is_one())) throw DivisionByZero();
    return y;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclotomic acc = one();
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyclotomic::is_root_of_unity() const {
    if (c_.empty()) return false;
    for (long j = 0; j < order_; ++j)
        if (*this == root(order_, j)) return true;
    return false;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> s(0.0, 0.0);
    const double w = 2.0 * M_PI / static_cast<double>(order_);
    for (const auto& [e, r] : c_) {
        double c = rational_to_double(r);
        s += std::complex<double>(c * std::cos(w * e), c * std::sin(w * e));
    }
    return s;
}

std::string Cyclotomic::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, r] : c_) {
        Rational a = r;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out += rational_str(a);
        } else {
            if (a != 1) out += rational_str(a) + "*";
            out += "zeta(" + std::to_string(order_) + "," + std::to_string(e) + ")";
        }
    }
    return out;
}

bool Cyclotomic::key_less(const Cyclotomic& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    return c_ < o.c_;
}

Cyclotomic gauss_binomial(long n, long j, const Cyclotomic& base) {
    if (j < 0 || j > n) return Cyclotomic::zero();
    // [n,j] = [n-1,j-1] + base^j * [n-1,j]
    std::vector<Cyclotomic> row(1, Cyclotomic::one());
    for (long i = 1; i <= n; ++i) {
        std::vector<Cyclotomic> next(i + 1, Cyclotomic::zero());
        next[0] = Cyclotomic::one();
        next[i] = Cyclotomic::one();
        for (long t = 1; t < i; ++t)
            next[t] = row[t - 1] + base.pow(t) * ((t < static_cast<long>(row.size())) ? row[t] : Cyclotomic::zero());
        row = std::move(next);
    }
    return row[j];
}

}  // namespace exosc
