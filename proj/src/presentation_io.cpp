#include "exosc/presentation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace exosc {

namespace {

struct Token {
    enum Kind { kIdent, kNumber, kPunct, kEnd } kind = kEnd;
    std::string text;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') break;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' ||
                    line[j] == '\''))
                ++j;
            out.push_back({Token::kIdent, line.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            out.push_back({Token::kNumber, line.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::string("+-*/=(),").find(c) != std::string::npos) {
            out.push_back({Token::kPunct, std::string(1, c)});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in: " + line);
    }
    return out;
}

class ExprParser {
  public:
    ExprParser(const std::vector<Token>& toks, size_t pos, const GeneratorSet& gens)
        : t_(toks), i_(pos), gens_(gens) {}

    // Parses a sum of terms until '=' or end; returns element.
    Element<Cyclotomic> parse_sum(bool stop_at_equals) {
        Element<Cyclotomic> e;
        int sign = 1;
        if (match_punct("-")) sign = -1;
        e += parse_term(sign);
        while (!at_end()) {
            if (stop_at_equals && peek_punct("=")) break;
            if (match_punct("+")) {
                e += parse_term(1);
            } else if (match_punct("-")) {
                e += parse_term(-1);
            } else {
                throw ParseError("expected '+', '-' or '=' near token '" + t_[i_].text + "'");
            }
        }
        return e;
    }

    bool match_punct(const std::string& p) {
        if (peek_punct(p)) {
            ++i_;
            return true;
        }
        return false;
    }
    bool peek_punct(const std::string& p) const {
        return i_ < t_.size() && t_[i_].kind == Token::kPunct && t_[i_].text == p;
    }
    bool at_end() const { return i_ >= t_.size(); }
    size_t pos() const { return i_; }

  private:
    const std::vector<Token>& t_;
    size_t i_;
    const GeneratorSet& gens_;

    long parse_integer() {
        int sign = 1;
        if (match_punct("-")) sign = -1;
        if (at_end() || t_[i_].kind != Token::kNumber) throw ParseError("expected integer");
        long v = std::stol(t_[i_].text);
        ++i_;
        return sign * v;
    }

    Element<Cyclotomic> parse_term(int sign) {
        Cyclotomic coeff = Cyclotomic::from_int(sign);
        Word word;
        bool any = false;
        while (!at_end()) {
            const Token& tok = t_[i_];
            if (tok.kind == Token::kPunct) {
                if (tok.text == "*") {
                    ++i_;
                    continue;
                }
                break;  // +, -, = end the term
            }
            any = true;
            if (tok.kind == Token::kNumber) {
                Rational num(Integer(tok.text));
                ++i_;
                if (match_punct("/")) {
                    if (at_end() || t_[i_].kind != Token::kNumber)
                        throw ParseError("expected denominator");
                    Integer den(t_[i_].text);
                    ++i_;
                    if (den == 0) throw ParseError("zero denominator");
                    num /= den;
                }
                coeff *= Cyclotomic::from_rational(num);
                continue;
            }
            if (tok.text == "zeta") {
                ++i_;
                if (!match_punct("(")) throw ParseError("expected '(' after zeta");
                long m = parse_integer();
                if (!match_punct(",")) throw ParseError("expected ',' in zeta(m,j)");
                long j = parse_integer();
                if (!match_punct(")")) throw ParseError("expected ')' in zeta(m,j)");
                coeff *= Cyclotomic::root(m, j);
                continue;
            }
            word.push_back(gens_.id_of(tok.text));
            ++i_;
        }
        if (!any) throw ParseError("empty term");
        return Element<Cyclotomic>::from_word(std::move(word), coeff);
    }
};

}  // namespace

Presentation<Cyclotomic> parse_presentation(std::istream& in) {
    Presentation<Cyclotomic> p;
    struct PendingStar {
        std::string gen, star;
    };
    std::vector<PendingStar> stars;
    std::string line;
    int lineno = 0;
    std::vector<std::string> relation_lines;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].kind != Token::kIdent)
            throw ParseError("line " + std::to_string(lineno) + ": expected declaration");
        if (toks[0].text == "generator") {
            if (toks.size() < 2 || toks[1].kind != Token::kIdent)
                throw ParseError("line " + std::to_string(lineno) + ": generator needs a name");
            std::string name = toks[1].text;
            int degree = 0;
            std::optional<int> nilp;
            std::string star;
            size_t i = 2;
            while (i < toks.size()) {
                const std::string& key = toks[i].text;
                if (key == "degree") {
                    int sign = 1;
                    ++i;
                    if (i < toks.size() && toks[i].kind == Token::kPunct && toks[i].text == "-") {
                        sign = -1;
                        ++i;
                    }
                    degree = sign * std::stoi(toks.at(i).text);
                    ++i;
                } else if (key == "star") {
                    star = toks.at(++i).text;
                    ++i;
                } else if (key == "nilpotent") {
                    nilp = std::stoi(toks.at(++i).text);
                    ++i;
                } else {
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": unknown generator attribute '" + key + "'");
                }
            }
            p.gens.add(name, degree, nilp);
            if (!star.empty()) stars.push_back({name, star});
        } else if (toks[0].text == "relation") {
            relation_lines.push_back(line);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'generator' or 'relation'");
        }
    }
    for (const auto& s : stars) p.gens.set_star_pair(p.gens.id_of(s.gen), p.gens.id_of(s.star));
    p.gens.validate();
    int rel_idx = 0;
    for (const auto& rline : relation_lines) {
        auto toks = tokenize(rline);
        ExprParser lhs_parser(toks, 1, p.gens);
        Element<Cyclotomic> lhs = lhs_parser.parse_sum(true);
        if (!lhs_parser.match_punct("="))
            throw ParseError("relation without '=': " + rline);
        ExprParser rhs_parser(toks, lhs_parser.pos(), p.gens);
        Element<Cyclotomic> rhs = rhs_parser.parse_sum(false);
        Relation<Cyclotomic> rel;
        rel.name = "relation-" + std::to_string(++rel_idx);
        rel.lhs = std::move(lhs);
        rel.rhs = std::move(rhs);
        p.relations.push_back(std::move(rel));
    }
    return p;
}

Presentation<Cyclotomic> parse_presentation_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open presentation file: " + path);
    return parse_presentation(f);
}

Presentation<Cyclotomic> parse_presentation_string(const std::string& text) {
    std::istringstream s(text);
    return parse_presentation(s);
}

std::string presentation_str(const Presentation<Cyclotomic>& p) {
    std::ostringstream os;
    for (GenId i = 0; i < p.gens.size(); ++i) {
        const auto& gi = p.gens.info(i);
        os << "generator " << gi.name << " degree " << gi.degree;
        if (gi.star != i) os << " star " << p.gens.info(gi.star).name;
        if (gi.nilpotency) os << " nilpotent " << *gi.nilpotency;
        os << "\n";
    }
    for (const auto& rel : p.relations) {
        os << "relation " << rel.lhs.str(p.gens) << " = " << rel.rhs.str(p.gens) << "\n";
    }
    return os.str();
}

}  // namespace exosc
