#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exosc/scalar_traits.hpp"

namespace exosc {

class AlgebraError : public std::runtime_error {
  public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExhausted : public AlgebraError {
  public:
    explicit BudgetExhausted(const std::string& word)
        : AlgebraError("rewrite step budget exhausted while reducing word: " + word) {}
};

using GenId = int;
using Word = std::vector<GenId>;  // empty word = identity

struct GeneratorInfo {
    std::string name;
    int degree = 0;       // particle-number charge
    GenId star = -1;      // star partner (may be self)
    std::optional<int> nilpotency;
};

class GeneratorSet {
  private:
    std::vector<GeneratorInfo> g_;

  public:
    GenId add(const std::string& name, int degree = 0, std::optional<int> nilpotency = {}) {
        if (has(name)) throw AlgebraError("duplicate generator name: " + name);
        GeneratorInfo gi;
        gi.name = name;
        gi.degree = degree;
        gi.nilpotency = nilpotency;
        gi.star = static_cast<GenId>(g_.size());  // self-adjoint unless paired
        g_.push_back(gi);
        return static_cast<GenId>(g_.size()) - 1;
    }

    void set_star_pair(GenId x, GenId y) {
        g_.at(x).star = y;
        g_.at(y).star = x;
    }

    bool has(const std::string& name) const {
        for (const auto& gi : g_)
            if (gi.name == name) return true;
        return false;
    }

    GenId id_of(const std::string& name) const {
        for (size_t i = 0; i < g_.size(); ++i)
            if (g_[i].name == name) return static_cast<GenId>(i);
        throw AlgebraError("unknown generator: " + name);
    }

    const GeneratorInfo& info(GenId id) const { return g_.at(id); }
    int size() const { return static_cast<int>(g_.size()); }

    int word_degree(const Word& w) const {
        int d = 0;
        for (GenId g : w) d += info(g).degree;
        return d;
    }

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += " ";
            s += info(w[i]).name;
        }
        return s;
    }

    // Star partnership must be an involution with opposite degrees.
    void validate() const {
        for (GenId i = 0; i < size(); ++i) {
            GenId j = info(i).star;
            if (j < 0 || j >= size() || info(j).star != i)
                throw AlgebraError("star map is not an involution at " + info(i).name);
            if (info(i).degree != -info(j).degree)
                throw AlgebraError("star partners must have opposite degree: " + info(i).name);
        }
    }
};

// Degree-lexicographic word order: length first, then generator ids.
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

template <class S>
class Element {
  public:
    using Traits = ScalarTraits<S>;

    Element() = default;

    static Element zero() { return {}; }
    static Element identity() { return from_word({}, Traits::one()); }
    static Element from_word(Word w, S coeff) {
        Element e;
        e.add_term(std::move(w), std::move(coeff));
        return e;
    }
    static Element from_gen(GenId g) { return from_word({g}, Traits::one()); }

    void add_term(Word w, S coeff) {
        if (Traits::is_zero(coeff)) return;
        auto it = t_.find(w);
        if (it == t_.end()) {
            t_.emplace(std::move(w), std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (Traits::is_zero(it->second)) t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::map<Word, S>& terms() const { return t_; }

    Element operator+(const Element& o) const {
        Element e = *this;
        for (const auto& [w, c] : o.t_) e.add_term(w, c);
        return e;
    }
    Element operator-(const Element& o) const { return *this + (-o); }
    Element operator-() const {
        Element e;
        for (const auto& [w, c] : t_) e.t_.emplace(w, S() - c);
        return e;
    }
    Element operator*(const Element& o) const {
        Element e;
        for (const auto& [w1, c1] : t_)
            for (const auto& [w2, c2] : o.t_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                e.add_term(std::move(w), c1 * c2);
            }
        return e;
    }
    Element scaled(const S& c) const {
        Element e;
        for (const auto& [w, cc] : t_) e.add_term(w, cc * c);
        return e;
    }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    bool operator==(const Element& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Words reversed, generators starred, coefficients conjugated.
    Element star(const GeneratorSet& gens) const {
        Element e;
        for (const auto& [w, c] : t_) {
            Word sw(w.rbegin(), w.rend());
            for (GenId& g : sw) g = gens.info(g).star;
            e.add_term(std::move(sw), Traits::conj(c));
        }
        return e;
    }

    // All words homogeneous of the same charge? (empty element counts as yes)
    bool is_homogeneous(const GeneratorSet& gens) const {
        if (t_.empty()) return true;
        int d = gens.word_degree(t_.begin()->first);
        for (const auto& [w, c] : t_)
            if (gens.word_degree(w) != d) return false;
        return true;
    }

    double max_magnitude() const {
        double m = 0.0;
        for (const auto& [w, c] : t_) m = std::max(m, Traits::magnitude(c));
        return m;
    }

    std::string str(const GeneratorSet& gens) const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : t_) {
            if (!first) s += "  +  ";
            first = false;
            s += "(" + Traits::str(c) + ")";
            if (!w.empty()) s += " " + gens.word_str(w);
        }
        return s;
    }

  private:
    std::map<Word, S> t_;
};

template <class T, class S, class F>
Element<T> map_scalars(const Element<S>& e, F&& f) {
    Element<T> out;
    for (const auto& [w, c] : e.terms()) out.add_term(w, f(c));
    return out;
}

template <class S>
struct ConfluenceFailure {
    Word overlap;
    Element<S> nf_left, nf_right;
    std::string rule_left, rule_right;
};

template <class S>
class RewriteSystem {
  public:
    using Traits = ScalarTraits<S>;

    explicit RewriteSystem(GeneratorSet gens) : gens_(std::move(gens)) { gens_.validate(); }

    const GeneratorSet& gens() const { return gens_; }
    long step_budget() const { return step_budget_; }
    void set_step_budget(long b) { step_budget_ = b; }

    // lhs -> rhs with lhs strictly greater than every rhs word (termination).
    void add_rule(Word lhs, Element<S> rhs) {
        if (lhs.empty()) throw AlgebraError("empty rule left side");
        for (const auto& [w, c] : rhs.terms())
            if (!word_less(w, lhs))
                throw AlgebraError("rule does not decrease the word order: " +
                                   gens_.word_str(lhs) + " -> " + gens_.word_str(w));
        if (rules_.count(lhs))
            throw AlgebraError("duplicate rule for word: " + gens_.word_str(lhs));
        rules_.emplace(std::move(lhs), std::move(rhs));
    }

    // Orient lhs = rhs: the largest word becomes the rule head.
    void add_relation(const Element<S>& lhs, const Element<S>& rhs) {
        Element<S> d = lhs - rhs;
        if (d.is_zero()) return;
        auto lead = d.terms().begin();
        for (auto it = d.terms().begin(); it != d.terms().end(); ++it)
            if (word_less(lead->first, it->first)) lead = it;
        Word head = lead->first;
        S c = lead->second;
        Element<S> rest;
        for (const auto& [w, cc] : d.terms())
            if (w != head) rest.add_term(w, cc);
        add_rule(head, (-rest).scaled(Traits::inv(c)));
    }

    const std::map<Word, Element<S>>& rules() const { return rules_; }

    Element<S> normal_form(const Element<S>& x) const {
        for (const auto& [w, c] : x.terms())
            for (GenId g : w)
                if (g < 0 || g >= gens_.size()) throw AlgebraError("word uses unknown generator");
        Element<S> out;
        std::vector<std::pair<Word, S>> work(x.terms().begin(), x.terms().end());
        long steps = 0;
        while (!work.empty()) {
            auto [w, c] = std::move(work.back());
            work.pop_back();
            if (Traits::is_zero(c)) continue;
            auto redex = find_redex(w);
            if (!redex) {
                out.add_term(std::move(w), std::move(c));
                continue;
            }
            if (++steps > step_budget_) throw BudgetExhausted(gens_.word_str(w));
            const auto& [pos, rule_it] = *redex;
            const Word& lhs = rule_it->first;
            for (const auto& [rw, rc] : rule_it->second.terms()) {
                Word nw;
                nw.reserve(w.size() - lhs.size() + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + pos + lhs.size(), w.end());
                work.emplace_back(std::move(nw), c * rc);
            }
        }
        return out;
    }

    bool word_irreducible(const Word& w) const { return !find_redex(w).has_value(); }

    // Critical pairs on overlap words up to max_word_len: both one-step
    // divergences must rejoin at a common normal form.
    std::vector<ConfluenceFailure<S>> check_local_confluence(int max_word_len) const {
        if (max_word_len < 3) throw AlgebraError("confluence check needs max_word_len >= 3");
        std::vector<ConfluenceFailure<S>> failures;
        std::map<Word, bool> seen;  // overlap word + rule pair dedup
        for (auto it1 = rules_.begin(); it1 != rules_.end(); ++it1) {
            for (auto it2 = rules_.begin(); it2 != rules_.end(); ++it2) {
                const Word& l1 = it1->first;
                const Word& l2 = it2->first;
                // suffix of l1 = prefix of l2 (proper overlap)
                for (size_t o = 1; o < std::min(l1.size(), l2.size()); ++o) {
                    if (!std::equal(l1.end() - o, l1.end(), l2.begin())) continue;
                    Word w = l1;
                    w.insert(w.end(), l2.begin() + o, l2.end());
                    if (static_cast<int>(w.size()) > max_word_len) continue;
                    check_pair(w, 0, it1, l1.size() - o, it2, failures);
                }
                // l2 contained in l1
                if (l2.size() < l1.size() || (l2.size() == l1.size() && it1 != it2)) {
                    for (size_t p = 0; p + l2.size() <= l1.size(); ++p) {
                        if (!std::equal(l2.begin(), l2.end(), l1.begin() + p)) continue;
                        if (static_cast<int>(l1.size()) > max_word_len) continue;
                        check_pair(l1, 0, it1, p, it2, failures);
                    }
                }
            }
        }
        return failures;
    }

  private:
    GeneratorSet gens_;
    std::map<Word, Element<S>> rules_;
    long step_budget_ = 1000000;

    using RuleIt = typename std::map<Word, Element<S>>::const_iterator;

    std::optional<std::pair<size_t, RuleIt>> find_redex(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            RuleIt best = rules_.end();
            for (auto it = rules_.begin(); it != rules_.end(); ++it) {
                const Word& lhs = it->first;
                if (lhs.size() > w.size() - pos) continue;
                if (!std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) continue;
                if (best == rules_.end() || lhs.size() < best->first.size()) best = it;
            }
            if (best != rules_.end()) return std::make_pair(pos, best);
        }
        return std::nullopt;
    }

    Element<S> apply_at(const Word& w, size_t pos, RuleIt rule) const {
        Element<S> out;
        const Word& lhs = rule->first;
        for (const auto& [rw, rc] : rule->second.terms()) {
            Word nw;
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + pos + lhs.size(), w.end());
            out.add_term(std::move(nw), rc);
        }
        return out;
    }

    void check_pair(const Word& w, size_t pos1, RuleIt r1, size_t pos2, RuleIt r2,
                    std::vector<ConfluenceFailure<S>>& failures) const {
        if (pos1 == pos2 && r1 == r2) return;
        Element<S> a = normal_form(apply_at(w, pos1, r1));
        Element<S> b = normal_form(apply_at(w, pos2, r2));
        if (a == b) return;
        for (const auto& f : failures)
            if (f.overlap == w) return;  // one report per overlap word
        ConfluenceFailure<S> f;
        f.overlap = w;
        f.nf_left = std::move(a);
        f.nf_right = std::move(b);
        f.rule_left = gens_.word_str(r1->first);
        f.rule_right = gens_.word_str(r2->first);
        failures.push_back(std::move(f));
    }
};

// Named relation list; the rewrite system is derived from it.
template <class S>
struct Relation {
    std::string name;
    Element<S> lhs, rhs;
};

template <class S>
struct Presentation {
    GeneratorSet gens;
    std::vector<Relation<S>> relations;

    RewriteSystem<S> system() const {
        RewriteSystem<S> rs(gens);
        for (const auto& rel : relations) rs.add_relation(rel.lhs, rel.rhs);
        return rs;
    }
};

}  // namespace exosc
