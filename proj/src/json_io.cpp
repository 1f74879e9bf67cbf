#include "trileib/json_io.hpp"

#include <fstream>
#include <sstream>

#include "trileib/triangular.hpp"

namespace trileib {

namespace {

std::string pair_key(const TriBasis& tb, std::size_t pos) {
    TriIndex t = tb.pair_at(pos);
    if (tb.n() >= 10) return std::to_string(t.i) + "_" + std::to_string(t.k);
    return std::to_string(t.i) + std::to_string(t.k);
}

std::size_t pair_key_position(const TriBasis& tb, const std::string& key) {
    std::size_t i = 0, k = 0;
    if (key.find('_') != std::string::npos) {
        std::istringstream is(key);
        std::string si, sk;
        std::getline(is, si, '_');
        std::getline(is, sk);
        i = std::stoul(si);
        k = std::stoul(sk);
    } else if (key.size() == 2) {
        i = key[0] - '0';
        k = key[1] - '0';
    }
    if (!tb.valid(i, k)) throw JsonInputError("bad basis pair key \"" + key + "\"");
    return tb.position(i, k);
}

Rational rat_field(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw JsonInputError("expected a rational string");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw JsonInputError(e.what());
    }
}

}  // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw JsonInputError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                             e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonInputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

json algebra_to_json(const StructureConstants& L) {
    json brackets = json::array();
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j)
            for (std::size_t k = 0; k < L.dim; ++k)
                if (!is_zero(L.c(i, j, k)))
                    brackets.push_back({i + 1, j + 1, k + 1, rat_to_string(L.c(i, j, k))});
    return json{{"dim", L.dim}, {"basis", L.basis_names}, {"brackets", brackets}};
}

StructureConstants algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
        throw JsonInputError("algebra JSON needs \"dim\" and \"brackets\"");
    std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) {
        names = j.at("basis").get<std::vector<std::string>>();
        if (names.size() != d) throw JsonInputError("basis length != dim");
    } else {
        for (std::size_t i = 0; i < d; ++i) names.push_back("e" + std::to_string(i + 1));
    }
    StructureConstants L(d, names);
    for (const auto& item : j.at("brackets")) {
        if (!item.is_array() || item.size() != 4)
            throw JsonInputError("bracket rows are [i, j, k, \"c\"]");
        std::size_t i = item[0].get<std::size_t>(), jj = item[1].get<std::size_t>(),
                    k = item[2].get<std::size_t>();
        if (i < 1 || i > d || jj < 1 || jj > d || k < 1 || k > d)
            throw JsonInputError("bracket index out of range");
        L.c(i - 1, jj - 1, k - 1) = rat_field(item[3]);
    }
    return L;
}

json spec_to_json(const ExtensionSpec& spec) {
    spec.validate_shapes();
    TriBasis tb(spec.n);
    const std::size_t r = spec.r();
    auto mat_list = [&](const std::vector<RatMatrix>& ms) {
        json out = json::array();
        for (const auto& m : ms) {
            json flat = json::array();
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) flat.push_back(rat_to_string(m.at(i, j)));
            out.push_back(flat);
        }
        return out;
    };
    json sigma = json::object();
    for (std::size_t a = 0; a < spec.f; ++a)
        for (std::size_t b = 0; b < spec.f; ++b) {
            json row = json::object();
            for (std::size_t p = 0; p < r; ++p)
                if (!is_zero(spec.sigma_at(a, b, p)))
                    row[pair_key(tb, p)] = rat_to_string(spec.sigma_at(a, b, p));
            if (!row.empty())
                sigma[std::to_string(a + 1) + "," + std::to_string(b + 1)] = row;
        }
    return json{{"n", spec.n}, {"f", spec.f}, {"A", mat_list(spec.A)}, {"B", mat_list(spec.B)},
                {"sigma", sigma}};
}

ExtensionSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("f"))
        throw JsonInputError("extension JSON needs \"n\" and \"f\"");
    std::size_t n = j.at("n").get<std::size_t>(), f = j.at("f").get<std::size_t>();
    ExtensionSpec spec;
    try {
        spec = ExtensionSpec(n, f);
    } catch (const std::invalid_argument& e) {
        throw JsonInputError(e.what());
    }
    TriBasis tb(n);
    const std::size_t r = spec.r();
    auto read_mats = [&](const char* key, std::vector<RatMatrix>& out) {
        const json& arr = j.at(key);
        if (!arr.is_array() || arr.size() != f)
            throw JsonInputError(std::string(key) + " must list one matrix per generator");
        for (std::size_t a = 0; a < f; ++a) {
            const json& flat = arr[a];
            if (!flat.is_array() || flat.size() != r * r)
                throw JsonInputError(std::string(key) + " matrices are row-major with r*r entries");
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t jj = 0; jj < r; ++jj)
                    out[a].at(i, jj) = rat_field(flat[i * r + jj]);
        }
    };
    read_mats("A", spec.A);
    read_mats("B", spec.B);
    if (j.contains("sigma")) {
        for (const auto& [key, row] : j.at("sigma").items()) {
            std::size_t comma = key.find(',');
            if (comma == std::string::npos) throw JsonInputError("sigma keys look like \"1,2\"");
            std::size_t a = std::stoul(key.substr(0, comma));
            std::size_t b = std::stoul(key.substr(comma + 1));
            if (a < 1 || a > f || b < 1 || b > f)
                throw JsonInputError("sigma generator index out of range");
            for (const auto& [pk, val] : row.items())
                spec.sigma_at(a - 1, b - 1, pair_key_position(tb, pk)) = rat_field(val);
        }
    }
    return spec;
}

ShiftParams shift_from_json(std::size_t n, std::size_t f, const json& j) {
    if (!j.is_object() || !j.contains("mu")) throw JsonInputError("shift JSON needs \"mu\"");
    const json& arr = j.at("mu");
    if (!arr.is_array() || arr.size() != f)
        throw JsonInputError("\"mu\" lists one map per generator");
    ShiftParams p(n, f);
    TriBasis tb(n);
    for (std::size_t a = 0; a < f; ++a)
        for (const auto& [key, val] : arr[a].items())
            p.mu_at(a, pair_key_position(tb, key)) = rat_field(val);
    return p;
}

BasisTransform basis_transform_from_json(std::size_t n, const json& j) {
    if (!j.is_object() || !j.contains("G")) throw JsonInputError("basis JSON needs \"G\"");
    const std::size_t r = n * (n - 1) / 2;
    const json& flat = j.at("G");
    if (!flat.is_array() || flat.size() != r * r)
        throw JsonInputError("\"G\" is row-major with r*r entries");
    BasisTransform t{RatMatrix(r, r)};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t jj = 0; jj < r; ++jj) t.G.at(i, jj) = rat_field(flat[i * r + jj]);
    return t;
}

RatMatrix recombine_from_json(std::size_t f, const json& j) {
    if (!j.is_object() || !j.contains("M")) throw JsonInputError("recombine JSON needs \"M\"");
    const json& flat = j.at("M");
    if (!flat.is_array() || flat.size() != f * f)
        throw JsonInputError("\"M\" is row-major with f*f entries");
    RatMatrix m(f, f);
    for (std::size_t i = 0; i < f; ++i)
        for (std::size_t jj = 0; jj < f; ++jj) m.at(i, jj) = rat_field(flat[i * f + jj]);
    return m;
}

json signature_to_json(const InvariantSignature& sig) {
    return json{{"derived_dims", sig.derived_dims}, {"lcs_dims", sig.lcs_dims},
                {"ann_dim", sig.ann_dim},           {"derived1_dim", sig.derived1_dim},
                {"lie", sig.lie},                   {"square_span_dim", sig.square_span_dim}};
}

json residual_report_to_json(const ResidualReport& rep) {
    json out = json::array();
    for (const auto& v : rep.violations)
        out.push_back({{"family", v.family}, {"where", v.where}, {"output", v.output},
                       {"value", rat_to_string(v.value)}});
    return json{{"ok", rep.ok()}, {"violations", out}};
}

json reduction_to_json(const LinearReduction& red) {
    json pairs = json::array();
    for (const auto& [a, b] : red.negation_pairs) pairs.push_back({a, "-", b});
    for (const auto& [a, b] : red.equality_pairs) pairs.push_back({a, "+", b});
    return json{{"n", red.n},
                {"f", red.f},
                {"forced_zero", red.forced_zero},
                {"pairings", pairs},
                {"sum_relations", red.sum_relations},
                {"free_symbols", red.free_symbols},
                {"gauge_eliminable", red.gauge_eliminable},
                {"canonical_forced_zero", red.canonical_forced_zero},
                {"canonical_offdiag_support", red.canonical_offdiag_support}};
}

json entry_report_to_json(const EntryReport& rep) {
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json params = json::object();
        for (const auto& [k, v] : s.params) params[k] = rat_to_string(v);
        samples.push_back({{"params", params},
                           {"leibniz", s.leibniz_ok},
                           {"non_lie", s.non_lie},
                           {"nilradical", s.nilradical_ok},
                           {"shape", s.shape_ok},
                           {"dim_bound", s.dim_bound_ok},
                           {"solvable", s.solvable},
                           {"non_nilpotent", s.non_nilpotent},
                           {"passed", s.passed()}});
    }
    return json{{"id", rep.id}, {"passed", rep.passed}, {"lie_leakage", rep.lie_leakage},
                {"samples", samples}};
}

json distinctness_to_json(const DistinctnessReport& rep) {
    json out = json::array();
    for (const auto& p : rep.pairs)
        out.push_back({{"first", p.first}, {"second", p.second}, {"status", p.status}});
    return json{{"pairs", out}};
}

namespace {

json linexpr_to_json(const LinExpr& e) {
    json out = json::object();
    if (!is_zero(e.c0) || e.coeffs.empty()) out["const"] = rat_to_string(e.c0);
    for (const auto& [name, c] : e.coeffs) out[name] = rat_to_string(c);
    return out;
}

}  // namespace

json catalog_to_json() {
    json entries = json::array();
    for (const auto& e : catalog_entries()) {
        json je{{"id", e.id}, {"n", e.n}, {"f", e.f}};
        je["params"] = e.params;
        json cons = json::array();
        for (const auto& c : e.constraints) {
            json exprs = json::array();
            for (const auto& ex : c.exprs) exprs.push_back(linexpr_to_json(ex));
            cons.push_back({{"kind", c.kind == ParamConstraint::Kind::NonZero ? "nonzero"
                                                                              : "not_all_zero"},
                            {"exprs", exprs},
                            {"text", c.description}});
        }
        je["constraints"] = cons;
        if (e.raw) {
            je["kind"] = "raw";
            je["dim"] = e.raw_dim;
            je["basis"] = e.raw_basis;
            json brs = json::array();
            for (const auto& [i, j, k, expr] : e.raw_brackets)
                brs.push_back({i, j, k, linexpr_to_json(expr)});
            je["brackets"] = brs;
        } else {
            je["kind"] = "extension";
            TriBasis tb(e.n);
            auto tpl_json = [&](const std::map<std::pair<std::size_t, std::size_t>, LinExpr>& t) {
                json out = json::object();
                for (const auto& [rc, expr] : t)
                    out[pair_key(tb, rc.first) + "," + pair_key(tb, rc.second)] =
                        linexpr_to_json(expr);
                return out;
            };
            json amats = json::array(), bmats = json::array();
            for (std::size_t a = 0; a < e.f; ++a) {
                amats.push_back(tpl_json(e.a_tpl[a]));
                bmats.push_back(tpl_json(e.b_tpl[a]));
            }
            je["A"] = amats;
            je["B"] = bmats;
            json sig = json::object();
            for (const auto& [key, expr] : e.sigma_tpl) {
                auto [a, b, p] = key;
                std::string k = std::to_string(a + 1) + "," + std::to_string(b + 1);
                if (!sig.contains(k)) sig[k] = json::object();
                sig[k][pair_key(tb, p)] = linexpr_to_json(expr);
            }
            je["sigma"] = sig;
        }
        entries.push_back(je);
    }
    return json{{"version", 1}, {"entries", entries}};
}

bool looks_like_spec(const json& j) {
    return j.is_object() && j.contains("n") && j.contains("f") && j.contains("A");
}

}  // namespace trileib
