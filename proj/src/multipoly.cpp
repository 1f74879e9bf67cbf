#include "trileib/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trileib {

bool MultiPoly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!trileib::is_zero(c)) terms_[Exponents{}] = c;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[Exponents{1}] = 1;
    return p;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& top = terms_.rbegin()->first;
    return std::accumulate(top.begin(), top.end(), 0L);
}

namespace {

// Remap exponent vectors from `from` variables onto `to` (a superset).
MultiPoly::Exponents remap(const MultiPoly::Exponents& e, const std::vector<std::string>& from,
                           const std::vector<std::string>& to) {
    MultiPoly::Exponents out(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        out[it - to.begin()] = e[i];
    }
    return out;
}

std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

void MultiPoly::trim() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;

    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(vars_[i]);
    std::map<Exponents, Rational, GradedLex> slim;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(keep.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        slim[ne] = c;
    }
    vars_ = std::move(keep);
    terms_ = std::move(slim);
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out;
    out.vars_ = merged_vars(vars_, rhs.vars_);
    for (const auto& [e, c] : terms_) out.terms_[remap(e, vars_, out.vars_)] = c;
    for (const auto& [e, c] : rhs.terms_) {
        Exponents ne = remap(e, rhs.vars_, out.vars_);
        Rational& slot = out.terms_[ne];
        slot += c;
        if (trileib::is_zero(slot)) out.terms_.erase(ne);
    }
    out.trim();
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly out;
    if (trileib::is_zero(s)) return out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    if (terms_.empty() || rhs.terms_.empty()) return out;
    out.vars_ = merged_vars(vars_, rhs.vars_);
    for (const auto& [ea, ca] : terms_) {
        Exponents ra = remap(ea, vars_, out.vars_);
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents rb = remap(eb, rhs.vars_, out.vars_);
            for (std::size_t i = 0; i < rb.size(); ++i) rb[i] += ra[i];
            Rational& slot = out.terms_[rb];
            slot += ca * cb;
            if (trileib::is_zero(slot)) out.terms_.erase(rb);
        }
    }
    out.trim();
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    std::vector<const Rational*> point(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end())
            throw std::invalid_argument("multipoly: no value for variable " + vars_[i]);
        point[i] = &it->second;
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= *point[i];
        acc += term;
    }
    return acc;
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::map<std::string, Rational> MultiPoly::linear_coefficients() const {
    if (total_degree() > 1) throw std::invalid_argument("multipoly: not linear");
    std::map<std::string, Rational> out;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 1) {
                out[vars_[i]] = c;
                break;
            }
        }
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms (highest graded-lex) first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (!first) {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (!has_vars || a != 1) {
            os << rat_to_string(a);
            if (has_vars) os << "*";
        }
        bool firstv = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            firstv = false;
        }
        first = false;
    }
    return os.str();
}

}  // namespace trileib
