#include "csieve/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace csieve {

namespace {

void append_term(std::string& out, bool first, long long c, const std::string& factors) {
    long long mag = c < 0 ? -c : c;
    if (first) {
        if (c < 0) out += '-';
    } else {
        out += (c < 0) ? " - " : " + ";
    }
    out += std::to_string(mag);
    out += factors;
}

std::string var_factor(char var, int e) {
    if (e == 0) return "";
    std::string s = "*";
    s += var;
    if (e != 1) {
        s += '^';
        s += std::to_string(e);
    }
    return s;
}

// One term of the canonical text form: [*var[^exp]] factors after an
// integer coefficient. Returns exponents for the two permitted variables.
struct ParsedTerm {
    long long coeff = 0;
    int exp_a = 0;
    int exp_b = 0;
};

ParsedTerm parse_term(std::string_view term, char var_a, char var_b) {
    ParsedTerm result;
    std::size_t pos = 0;
    bool negative = false;
    if (pos < term.size() && (term[pos] == '+' || term[pos] == '-')) {
        negative = term[pos] == '-';
        ++pos;
    }
    std::size_t start = pos;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial term missing coefficient");
    result.coeff = std::stoll(std::string(term.substr(start, pos - start)));
    if (negative) result.coeff = -result.coeff;
    while (pos < term.size()) {
        if (term[pos] != '*') throw std::invalid_argument("expected '*' in polynomial term");
        ++pos;
        if (pos >= term.size()) throw std::invalid_argument("dangling '*' in polynomial term");
        char v = term[pos++];
        int exp = 1;
        if (pos < term.size() && term[pos] == '^') {
            ++pos;
            std::size_t estart = pos;
            if (pos < term.size() && term[pos] == '-') ++pos;
            while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
            if (pos == estart) throw std::invalid_argument("bad exponent in polynomial term");
            exp = std::stoi(std::string(term.substr(estart, pos - estart)));
        }
        if (v == var_a) {
            result.exp_a = exp;
        } else if (v == var_b) {
            result.exp_b = exp;
        } else {
            throw std::invalid_argument(std::string("unexpected variable '") + v + "'");
        }
    }
    return result;
}

// Split "a + b - c" into signed term strings "+a", "+b", "-c".
std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> terms;
    std::string current = "+";
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        current = text[pos] == '-' ? "-" : "+";
        ++pos;
    }
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch == ' ') {
            // separator form " + " / " - "
            if (pos + 2 < text.size() && (text[pos + 1] == '+' || text[pos + 1] == '-') &&
                text[pos + 2] == ' ') {
                terms.push_back(current);
                current = text[pos + 1] == '-' ? "-" : "+";
                pos += 2;
                continue;
            }
            continue;
        }
        current += ch;
    }
    if (current.size() > 1) terms.push_back(current);
    return terms;
}

}  // namespace

LaurentPoly LaurentPoly::constant(long long c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(long long c, int e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

long long LaurentPoly::coeff(int e) const noexcept {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

long long LaurentPoly::eval_at_one() const noexcept {
    long long total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

void LaurentPoly::add_term(int e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::times_monomial(long long c, int e) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e1, c1] : terms_) out.add_term(e1 + e, c1 * c);
    return out;
}

LaurentPoly LaurentPoly::substitute_power(int d) const {
    if (d < 1) throw std::invalid_argument("substitute_power needs d >= 1");
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e * d, c);
    return out;
}

std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(out, first, c, var_factor(var, e));
        first = false;
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, char var) {
    LaurentPoly out;
    std::string trimmed(text);
    if (trimmed == "0") return out;
    for (const std::string& term : split_terms(text)) {
        ParsedTerm p = parse_term(term, var, '\0');
        out.add_term(p.exp_a, p.coeff);
    }
    return out;
}

LaurentPoly reduce_mod_qn_minus_1(const LaurentPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("modulus order must be positive");
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        int r = ((e % n) + n) % n;
        out.add_term(r, c);
    }
    return out;
}

LaurentPoly geometric_sum(int n) {
    LaurentPoly out;
    for (int e = 0; e < n; ++e) out.add_term(e, 1);
    return out;
}

BivariatePoly BivariatePoly::from_q(const LaurentPoly& f) {
    BivariatePoly out;
    for (const auto& [e, c] : f.terms()) out.add_term(e, 0, c);
    return out;
}

BivariatePoly BivariatePoly::from_t(const LaurentPoly& f) {
    BivariatePoly out;
    for (const auto& [e, c] : f.terms()) out.add_term(0, e, c);
    return out;
}

long long BivariatePoly::coeff(int qe, int te) const noexcept {
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? 0 : it->second;
}

void BivariatePoly::add_term(int qe, int te, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(qe, te), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& rhs) const {
    BivariatePoly out;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : rhs.terms_) {
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        }
    }
    return out;
}

BivariatePoly BivariatePoly::times_monomial(long long c, int qe, int te) const {
    BivariatePoly out;
    if (c == 0) return out;
    for (const auto& [k, c1] : terms_) out.add_term(k.first + qe, k.second + te, c1 * c);
    return out;
}

LaurentPoly BivariatePoly::at_t_one() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, c);
    return out;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        append_term(out, first, c, var_factor('q', k.first) + var_factor('t', k.second));
        first = false;
    }
    return out;
}

BivariatePoly BivariatePoly::parse(std::string_view text) {
    BivariatePoly out;
    std::string trimmed(text);
    if (trimmed == "0") return out;
    for (const std::string& term : split_terms(text)) {
        ParsedTerm p = parse_term(term, 'q', 't');
        out.add_term(p.exp_a, p.exp_b, p.coeff);
    }
    return out;
}

}  // namespace csieve
