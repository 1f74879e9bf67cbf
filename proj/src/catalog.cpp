#include "trileib/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "trileib/triangular.hpp"

namespace trileib {

LinExpr LinExpr::param(const std::string& name, const Rational& coef) {
    LinExpr e;
    if (!is_zero(coef)) e.coeffs[name] = coef;
    return e;
}

LinExpr LinExpr::operator+(const LinExpr& rhs) const {
    LinExpr out = *this;
    out.c0 += rhs.c0;
    for (const auto& [name, c] : rhs.coeffs) {
        Rational& slot = out.coeffs[name];
        slot += c;
        if (is_zero(slot)) out.coeffs.erase(name);
    }
    return out;
}

LinExpr LinExpr::operator-() const {
    LinExpr out;
    out.c0 = -c0;
    for (const auto& [name, c] : coeffs) out.coeffs[name] = -c;
    return out;
}

Rational LinExpr::eval(const ParamMap& params) const {
    Rational acc = c0;
    for (const auto& [name, c] : coeffs) {
        auto it = params.find(name);
        if (it == params.end())
            throw std::invalid_argument("catalog: missing parameter " + name);
        acc += c * it->second;
    }
    return acc;
}

std::string LinExpr::text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : coeffs) {
        if (first) {
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << rat_to_string(c) << "*";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            Rational a = abs(c);
            if (a != 1) os << rat_to_string(a) << "*";
        }
        os << name;
        first = false;
    }
    if (first) return rat_to_string(c0);
    if (!is_zero(c0)) os << (sgn(c0) < 0 ? " - " : " + ") << rat_to_string(abs(c0));
    return os.str();
}

bool ParamConstraint::satisfied(const ParamMap& params) const {
    if (kind == Kind::NonZero) return !is_zero(exprs.front().eval(params));
    for (const auto& e : exprs)
        if (!is_zero(e.eval(params))) return true;
    return false;
}

namespace {

ParamConstraint nonzero(const LinExpr& e, const std::string& text) {
    return {ParamConstraint::Kind::NonZero, {e}, text};
}

ParamConstraint not_all_zero(std::vector<LinExpr> es, const std::string& text) {
    return {ParamConstraint::Kind::NotAllZero, std::move(es), text};
}

// Builds a 4-triangular entry from superdiagonal expressions; the other
// diagonal entries are forced by the sums.
struct EntryBuilder {
    CatalogEntry e;
    TriBasis tb{4};

    explicit EntryBuilder(std::string id, std::size_t f) {
        e.id = std::move(id);
        e.n = 4;
        e.f = f;
        e.a_tpl.resize(f);
        e.b_tpl.resize(f);
    }

    void diag(std::size_t alpha, LinExpr d1, LinExpr d2, LinExpr d3, bool b_negated = true) {
        LinExpr sup[3] = {d1, d2, d3};
        for (std::size_t i = 1; i <= 3; ++i)
            for (std::size_t k = i + 1; k <= 4; ++k) {
                LinExpr sum;
                for (std::size_t j = i; j < k; ++j) sum = sum + sup[j - 1];
                std::size_t p = tb.position(i, k);
                if (!sum.is_constant_zero()) {
                    e.a_tpl[alpha][{p, p}] = sum;
                    if (b_negated) e.b_tpl[alpha][{p, p}] = -sum;
                }
            }
    }

    void a_entry(std::size_t alpha, std::size_t i1, std::size_t k1, std::size_t i2,
                 std::size_t k2, LinExpr v, bool b_negated = true) {
        e.a_tpl[alpha][{tb.position(i1, k1), tb.position(i2, k2)}] = v;
        if (b_negated) e.b_tpl[alpha][{tb.position(i1, k1), tb.position(i2, k2)}] = -v;
    }

    void b_entry(std::size_t alpha, std::size_t i1, std::size_t k1, std::size_t i2,
                 std::size_t k2, LinExpr v) {
        e.b_tpl[alpha][{tb.position(i1, k1), tb.position(i2, k2)}] = v;
    }

    void sigma(std::size_t alpha, std::size_t beta, LinExpr v) {
        e.sigma_tpl[{alpha, beta, tb.position(1, 4)}] = v;
    }
};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    const LinExpr one(1), none(-1);
    auto P = [](const char* s) { return LinExpr::param(s); };

    {
        EntryBuilder b("T1-1", 1);
        b.diag(0, one, P("a"), none + -P("a"));
        b.sigma(0, 0, P("s11"));
        b.e.params = {"a", "s11"};
        b.e.constraints = {nonzero(P("s11"), "s11 != 0"),
                           nonzero(P("a") + one, "a != -1")};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-2", 1);
        b.diag(0, one, LinExpr(), none);
        b.b_entry(0, 2, 3, 1, 4, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-3", 1);
        b.diag(0, one, none, LinExpr());
        b.b_entry(0, 3, 4, 1, 4, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-4", 1);
        b.diag(0, LinExpr(), one, none);
        b.b_entry(0, 1, 2, 1, 4, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-5", 1);
        b.diag(0, LinExpr(), one, none);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        b.e.constraints = {nonzero(P("s11"), "s11 != 0")};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-6", 1);
        b.diag(0, LinExpr(), one, none);
        b.a_entry(0, 1, 2, 2, 4, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        b.e.constraints = {nonzero(P("s11"), "s11 != 0")};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-7", 1);
        b.diag(0, LinExpr(), one, none);
        b.a_entry(0, 1, 2, 2, 4, one);
        b.b_entry(0, 1, 2, 1, 4, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-8", 1);
        b.diag(0, one, LinExpr(), none);
        b.a_entry(0, 2, 3, 1, 4, one, /*b_negated=*/false);
        b.b_entry(0, 2, 3, 1, 4, P("b"));
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11", "b"};
        b.e.constraints = {not_all_zero({P("s11"), P("b") + one},
                                        "s11, b+1 not both zero")};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-9", 1);
        b.diag(0, one, none, LinExpr());
        b.a_entry(0, 3, 4, 1, 3, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        b.e.constraints = {nonzero(P("s11"), "s11 != 0")};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T1-10", 1);
        b.diag(0, one, none, LinExpr());
        b.a_entry(0, 3, 4, 1, 3, one);
        b.b_entry(0, 3, 4, 1, 4, one);
        b.sigma(0, 0, P("s11"));
        b.e.params = {"s11"};
        out.push_back(b.e);
    }
    {
        EntryBuilder b("T2-11", 2);
        b.diag(0, one, LinExpr(), none);
        b.diag(1, LinExpr(), one, none);
        b.sigma(0, 0, P("s11"));
        b.sigma(0, 1, P("s12"));
        b.sigma(1, 0, P("s21"));
        b.sigma(1, 1, P("s22"));
        b.e.params = {"s11", "s12", "s21", "s22"};
        b.e.constraints = {not_all_zero({P("s11"), P("s22"), P("s12") + P("s21")},
                                        "s11, s22, s12+s21 not all zero")};
        b.e.featured_samples = {
            {{"s11", Rational(1)}, {"s12", Rational(0)}, {"s21", Rational(0)}, {"s22", Rational(0)}},
            {{"s11", Rational(0)}, {"s12", Rational(0)}, {"s21", Rational(0)}, {"s22", Rational(1)}},
            {{"s11", Rational(0)}, {"s12", Rational(1)}, {"s21", Rational(0)}, {"s22", Rational(0)}},
        };
        out.push_back(b.e);
    }
    {
        CatalogEntry e;
        e.id = "L(c)";
        e.n = 2;
        e.f = 1;
        e.raw = true;
        e.raw_dim = 2;
        e.raw_basis = {"a", "b"};
        // [b,a] = c a, [b,b] = a, all other products zero
        e.raw_brackets = {{2, 1, 1, LinExpr::param("c")}, {2, 2, 1, LinExpr(1)}};
        e.params = {"c"};
        e.constraints = {nonzero(LinExpr::param("c"), "c != 0")};
        out.push_back(e);
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw std::invalid_argument("catalog: unknown entry " + id);
}

namespace {

void enforce_constraints(const CatalogEntry& e, const ParamMap& params) {
    for (const auto& p : e.params)
        if (!params.count(p))
            throw std::invalid_argument("catalog: missing parameter " + p + " for " + e.id);
    for (const auto& c : e.constraints)
        if (!c.satisfied(params)) throw ConstraintViolation(c.description);
}

}  // namespace

ExtensionSpec instantiate_spec(const CatalogEntry& e, const ParamMap& params, bool enforce) {
    if (e.raw)
        throw std::invalid_argument("catalog: entry " + e.id + " is not extension-backed");
    if (enforce) enforce_constraints(e, params);
    ExtensionSpec s(e.n, e.f);
    for (std::size_t a = 0; a < e.f; ++a) {
        for (const auto& [rc, expr] : e.a_tpl[a]) s.A[a].at(rc.first, rc.second) = expr.eval(params);
        for (const auto& [rc, expr] : e.b_tpl[a]) s.B[a].at(rc.first, rc.second) = expr.eval(params);
    }
    for (const auto& [key, expr] : e.sigma_tpl) {
        auto [a, b, p] = key;
        s.sigma_at(a, b, p) = expr.eval(params);
    }
    return s;
}

StructureConstants instantiate(const CatalogEntry& e, const ParamMap& params, bool enforce) {
    if (!e.raw) return build_L(instantiate_spec(e, params, enforce));
    if (enforce) enforce_constraints(e, params);
    StructureConstants L(e.raw_dim, e.raw_basis);
    for (const auto& [i, j, k, expr] : e.raw_brackets)
        L.c(i - 1, j - 1, k - 1) = expr.eval(params);
    return L;
}

std::vector<ParamMap> default_samples(const CatalogEntry& e, std::size_t cap) {
    const std::vector<Rational> pool = {Rational(-2), Rational(-1), Rational(0), Rational(1, 2),
                                        Rational(3)};
    const std::vector<Rational> extra = {Rational(5), Rational(-1, 3)};
    std::vector<ParamMap> out;
    if (e.params.empty()) {
        out.push_back({});
        return out;
    }

    auto admissible = [&](const ParamMap& p) {
        for (const auto& c : e.constraints)
            if (!c.satisfied(p)) return false;
        return true;
    };

    // cartesian walk over the pool, thinned to the cap
    std::vector<ParamMap> all;
    std::vector<std::size_t> index(e.params.size(), 0);
    while (true) {
        ParamMap p;
        for (std::size_t i = 0; i < e.params.size(); ++i) p[e.params[i]] = pool[index[i]];
        if (admissible(p)) all.push_back(p);
        std::size_t i = 0;
        while (i < index.size() && ++index[i] == pool.size()) index[i++] = 0;
        if (i == index.size()) break;
    }
    std::size_t step = all.size() > cap ? (all.size() + cap - 1) / cap : 1;
    for (std::size_t i = 0; i < all.size() && out.size() < cap; i += step) out.push_back(all[i]);

    // the base pool can leave too few admissible values; widen it
    for (std::size_t xi = 0; out.size() < 5 && xi < extra.size(); ++xi) {
        ParamMap p;
        for (const auto& name : e.params) p[name] = extra[xi];
        if (admissible(p) &&
            std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    }
    for (const auto& fs : e.featured_samples)
        if (std::find(out.begin(), out.end(), fs) == out.end()) out.push_back(fs);
    return out;
}

EntryReport verify_entry(const CatalogEntry& e, const std::vector<ParamMap>& samples) {
    EntryReport rep;
    rep.id = e.id;
    for (const auto& params : samples) {
        SampleResult res;
        res.params = params;
        StructureConstants L = instantiate(e, params);
        res.leibniz_ok = check_leibniz(L).empty();
        res.non_lie = !is_lie(L);
        if (!res.non_lie) rep.lie_leakage++;
        res.solvable = is_solvable(L);
        res.non_nilpotent = !is_nilpotent(L);
        std::size_t nr_dim;
        if (e.raw) {
            // two-dimensional case: the first basis vector spans the unique
            // maximal nilpotent ideal; the second is not a nilpotent element
            Subspace nil = Subspace::span({L.basis_element(0)}, L.dim);
            res.nilradical_ok = is_ideal(L, nil) &&
                                is_nilpotent_element(L, L.basis_element(0)) &&
                                !is_nilpotent_element(L, L.basis_element(1));
            res.shape_ok = true;
            nr_dim = 1;
        } else {
            ExtensionSpec s = instantiate_spec(e, params);
            res.nilradical_ok = certify_nilradical(s).certified();
            res.shape_ok = shape_check(s).ok;
            nr_dim = s.r();
        }
        res.dim_bound_ok = 2 * nr_dim >= L.dim;
        rep.samples.push_back(res);
    }
    rep.passed = !rep.samples.empty() &&
                 std::all_of(rep.samples.begin(), rep.samples.end(),
                             [](const SampleResult& s) { return s.passed(); });
    return rep;
}

bool InvariantSignature::operator<(const InvariantSignature& o) const {
    auto tup = [](const InvariantSignature& s) {
        return std::tie(s.derived_dims, s.lcs_dims, s.ann_dim, s.derived1_dim, s.lie,
                        s.square_span_dim);
    };
    return tup(*this) < tup(o);
}

std::string InvariantSignature::to_string() const {
    std::ostringstream os;
    os << "derived(";
    for (std::size_t i = 0; i < derived_dims.size(); ++i)
        os << (i ? "," : "") << derived_dims[i];
    os << ") lcs(";
    for (std::size_t i = 0; i < lcs_dims.size(); ++i) os << (i ? "," : "") << lcs_dims[i];
    os << ") ann=" << ann_dim << " [L,L]=" << derived1_dim << " lie=" << (lie ? "yes" : "no")
       << " squares=" << square_span_dim;
    return os.str();
}

InvariantSignature invariant_signature(const StructureConstants& L) {
    InvariantSignature sig;
    for (const auto& s : derived_series(L)) sig.derived_dims.push_back(s.dim());
    for (const auto& s : lower_central_series(L)) sig.lcs_dims.push_back(s.dim());
    sig.ann_dim = left_annihilator(L).dim();
    sig.derived1_dim = sig.derived_dims.front();
    sig.lie = is_lie(L);
    std::vector<Element> squares;
    for (std::size_t i = 0; i < L.dim; ++i) {
        Element e = L.basis_element(i);
        squares.push_back(bracket(L, e, e));
    }
    sig.square_span_dim = Subspace::span(squares, L.dim).dim();
    return sig;
}

DistinctnessReport distinctness_report(const std::vector<CatalogEntry>& entries,
                                       std::size_t sample_cap) {
    std::vector<std::set<InvariantSignature>> sigsets;
    for (const auto& e : entries) {
        std::set<InvariantSignature> set;
        for (const auto& params : default_samples(e, sample_cap))
            set.insert(invariant_signature(instantiate(e, params)));
        sigsets.push_back(std::move(set));
    }
    DistinctnessReport rep;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i; j < entries.size(); ++j) {
            std::vector<InvariantSignature> common;
            std::set_intersection(sigsets[i].begin(), sigsets[i].end(), sigsets[j].begin(),
                                  sigsets[j].end(), std::back_inserter(common));
            std::string status;
            if (common.empty())
                status = "all";
            else if (sigsets[i] == sigsets[j])
                status = "never";
            else
                status = "some";
            rep.pairs.push_back({entries[i].id, entries[j].id, status});
        }
    return rep;
}

std::vector<DistinctnessPair> DistinctnessReport::undetermined() const {
    std::vector<DistinctnessPair> out;
    for (const auto& p : pairs)
        if (p.status == "never" && p.first != p.second) out.push_back(p);
    return out;
}

}  // namespace trileib
