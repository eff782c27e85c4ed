#include "exosc/symscalar.hpp"

namespace exosc {

namespace {
const char* kSymNames[6] = {"q", "Q1", "Q2", "Q2*", "Q3", "Q3*"};
}

void SymScalar::insert(const SymMono& m, const Rational& r) {
    if (r == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, r);
    } else {
        it->second += r;
        if (it->second == 0) t_.erase(it);
    }
}

SymScalar SymScalar::from_rational(const Rational& r) {
    SymScalar s;
    s.insert(SymMono{}, r);
    return s;
}

SymScalar SymScalar::q(int e) {
    SymScalar s;
    SymMono m;
    m.e[0] = e;
    s.insert(m, Rational(1));
    return s;
}

SymScalar SymScalar::Q1(int e) {
    SymScalar s;
    SymMono m;
    m.e[1] = e;
    s.insert(m, Rational(1));
    return s;
}

SymScalar SymScalar::Q2() {
    SymScalar s;
    SymMono m;
    m.e[2] = 1;
    s.insert(m, Rational(1));
    return s;
}

SymScalar SymScalar::Q2c() {
    SymScalar s;
    SymMono m;
    m.e[3] = 1;
    s.insert(m, Rational(1));
    return s;
}

SymScalar SymScalar::Q3() {
    SymScalar s;
    SymMono m;
    m.e[4] = 1;
    s.insert(m, Rational(1));
    return s;
}

SymScalar SymScalar::Q3c() {
    SymScalar s;
    SymMono m;
    m.e[5] = 1;
    s.insert(m, Rational(1));
    return s;
}

bool SymScalar::operator==(const SymScalar& o) const { return t_ == o.t_; }

SymScalar SymScalar::operator+(const SymScalar& o) const {
    SymScalar s = *this;
    for (const auto& [m, r] : o.t_) s.insert(m, r);
    return s;
}

SymScalar SymScalar::operator-(const SymScalar& o) const { return *this + (-o); }

SymScalar SymScalar::operator-() const {
    SymScalar s = *this;
    for (auto& [m, r] : s.t_) r = -r;
    return s;
}

SymScalar SymScalar::operator*(const SymScalar& o) const {
    SymScalar s;
    for (const auto& [m1, r1] : t_)
        for (const auto& [m2, r2] : o.t_) {
            SymMono m;
            for (int i = 0; i < 6; ++i) m.e[i] = m1.e[i] + m2.e[i];
            s.insert(m, r1 * r2);
        }
    return s;
}

SymScalar SymScalar::conj() const {
    SymScalar s;
    for (const auto& [m, r] : t_) {
        SymMono c;
        c.e[0] = -m.e[0];
        c.e[1] = -m.e[1];
        c.e[2] = m.e[3];
        c.e[3] = m.e[2];
        c.e[4] = m.e[5];
        c.e[5] = m.e[4];
        s.insert(c, r);
    }
    return s;
}

SymScalar SymScalar::inv() const {
    if (t_.size() != 1) throw FieldError("symbolic inverse needs a single monomial: " + str());
    const auto& [m, r] = *t_.begin();
    if (m.e[2] || m.e[3] || m.e[4] || m.e[5])
        throw FieldError("cannot invert non-unit symbol monomial: " + str());
    SymScalar s;
    SymMono i;
    i.e[0] = -m.e[0];
    i.e[1] = -m.e[1];
    s.insert(i, Rational(1) / r);
    return s;
}

Cyclotomic SymScalar::substitute(const Cyclotomic& q, const Cyclotomic& Q1, const Cyclotomic& Q2,
                                 const Cyclotomic& Q3) const {
    Cyclotomic out = Cyclotomic::zero();
    for (const auto& [m, r] : t_) {
        Cyclotomic v = Cyclotomic::from_rational(r);
        v *= q.pow(m.e[0]);
        v *= Q1.pow(m.e[1]);
        v *= Q2.pow(m.e[2]);
        v *= Q2.conj().pow(m.e[3]);
        v *= Q3.pow(m.e[4]);
        v *= Q3.conj().pow(m.e[5]);
        out += v;
    }
    return out;
}

SymScalar SymScalar::specialize_classical(int q1_sign) const {
    SymScalar s;
    for (const auto& [m, r] : t_) {
        SymMono n = m;
        n.e[0] = 0;
        int q1e = n.e[1];
        n.e[1] = 0;
        Rational coeff = r;
        if (q1_sign < 0 && (q1e % 2 != 0)) coeff = -coeff;
        s.insert(n, coeff);
    }
    return s;
}

std::string SymScalar::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, r] : t_) {
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
        std::string mono;
        for (int i = 0; i < 6; ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kSymNames[i];
            if (m.e[i] != 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            out += rational_str(a);
        } else {
            if (a != 1) out += rational_str(a) + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace exosc
