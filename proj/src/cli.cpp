#include "trileib/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "trileib/json_io.hpp"
#include "trileib/symbolic.hpp"

namespace trileib {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kInputError = 2;

void emit(const std::string& path, const json& j, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw JsonInputError("cannot write " + path);
    f << j.dump(2) << "\n";
}

std::string dims_text(const std::vector<Subspace>& series) {
    std::string s = "(";
    for (std::size_t i = 0; i < series.size(); ++i)
        s += (i ? ", " : "") + std::to_string(series[i].dim());
    return s + ")";
}

int cmd_verify(const std::string& file, const std::string& format, std::ostream& out) {
    json j = load_json_file(file);
    bool all_ok = true;
    json rep = json::object();
    if (looks_like_spec(j)) {
        ExtensionSpec spec = spec_from_json(j);
        StructureConstants L = build_L(spec);
        bool leib = check_leibniz(L).empty();
        ResidualReport r4 = residuals_4(spec);
        ResidualReport rs = residuals_sigma(spec);
        NilradicalReport cert = certify_nilradical(spec);
        ShapeReport shape = shape_check(spec);
        all_ok = leib && r4.ok() && rs.ok() && cert.certified();
        rep = {{"kind", "extension"},
               {"dim", L.dim},
               {"leibniz", leib},
               {"lie", is_lie(L)},
               {"residuals_4", residual_report_to_json(r4)},
               {"residuals_sigma", residual_report_to_json(rs)},
               {"nilradical_certified", cert.certified()},
               {"nilradical_notes", cert.notes},
               {"shape_canonical", shape.ok},
               {"pass", all_ok}};
    } else {
        StructureConstants L = algebra_from_json(j);
        bool leib = check_leibniz(L).empty();
        all_ok = leib;
        rep = {{"kind", "algebra"},
               {"dim", L.dim},
               {"leibniz", leib},
               {"lie", is_lie(L)},
               {"solvable", is_solvable(L)},
               {"nilpotent", is_nilpotent(L)},
               {"pass", all_ok}};
    }
    if (format == "json") {
        out << rep.dump(2) << "\n";
    } else {
        out << "dim: " << rep["dim"] << "\n";
        out << "leibniz: " << (rep["leibniz"].get<bool>() ? "pass" : "FAIL") << "\n";
        out << "is_lie: " << (rep["lie"].get<bool>() ? "true" : "false") << "\n";
        if (rep.contains("nilradical_certified"))
            out << "nilradical: " << (rep["nilradical_certified"].get<bool>() ? "certified" : "NOT certified")
                << "\n";
        if (rep.contains("residuals_4"))
            out << "residuals: "
                << (rep["residuals_4"]["ok"].get<bool>() && rep["residuals_sigma"]["ok"].get<bool>()
                        ? "pass"
                        : "FAIL")
                << "\n";
        out << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? kOk : kVerifyFail;
}

int cmd_series(const std::string& file, const std::string& format, std::ostream& out) {
    json j = load_json_file(file);
    StructureConstants L =
        looks_like_spec(j) ? build_L(spec_from_json(j)) : algebra_from_json(j);
    auto ds = derived_series(L);
    auto ls = lower_central_series(L);
    if (format == "json") {
        json dd = json::array(), ld = json::array();
        for (auto& s : ds) dd.push_back(s.dim());
        for (auto& s : ls) ld.push_back(s.dim());
        out << json{{"dim", L.dim}, {"derived_dims", dd}, {"lcs_dims", ld}}.dump(2) << "\n";
    } else {
        out << "dim: " << L.dim << "\n";
        out << "derived series dims: " << dims_text(ds) << "\n";
        out << "lower central series dims: " << dims_text(ls) << "\n";
    }
    return kOk;
}

std::vector<ParamMap> samples_for(const CatalogEntry& e, const std::string& samples_arg) {
    if (samples_arg.empty() || samples_arg == "default") return default_samples(e);
    json j = load_json_file(samples_arg);
    if (!j.is_array()) throw JsonInputError("samples file must be an array of parameter maps");
    std::vector<ParamMap> out;
    for (const auto& item : j) {
        ParamMap p;
        for (const auto& [k, v] : item.items())
            p[k] = v.is_string() ? rat_from_string(v.get<std::string>()) : Rational(v.get<long>());
        out.push_back(p);
    }
    return out;
}

int cmd_catalog_verify(const std::string& entry_id, const std::string& samples_arg,
                       const std::string& format, std::ostream& out) {
    std::vector<const CatalogEntry*> targets;
    for (const auto& e : catalog_entries())
        if (entry_id.empty() || e.id == entry_id) targets.push_back(&e);
    if (targets.empty()) throw JsonInputError("unknown catalog entry " + entry_id);

    json jreports = json::array();
    std::size_t table_total = 0, table_pass = 0, leakage = 0;
    bool lc_seen = false, lc_pass = true, all_pass = true;
    std::vector<std::string> lines;
    for (const CatalogEntry* e : targets) {
        EntryReport rep = verify_entry(*e, samples_for(*e, samples_arg));
        jreports.push_back(entry_report_to_json(rep));
        all_pass = all_pass && rep.passed;
        leakage += rep.lie_leakage;
        if (e->id == "L(c)") {
            lc_seen = true;
            lc_pass = rep.passed;
        } else {
            table_total++;
            if (rep.passed) table_pass++;
        }
        lines.push_back(e->id + ": " + (rep.passed ? "pass" : "FAIL") + " (" +
                        std::to_string(rep.samples.size()) + " samples)");
    }
    if (format == "json") {
        out << json{{"reports", jreports},
                    {"entries_pass", table_pass},
                    {"entries_total", table_total},
                    {"lie_leakage", leakage},
                    {"pass", all_pass}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& l : lines) out << l << "\n";
        if (table_total > 0)
            out << table_pass << "/" << table_total << " entries pass, " << leakage
                << " Lie leakage\n";
        if (lc_seen && entry_id.empty()) out << "L(c): " << (lc_pass ? "pass" : "FAIL") << "\n";
    }
    return all_pass ? kOk : kVerifyFail;
}

int cmd_catalog_distinctness(bool include_lc, const std::string& format, std::ostream& out) {
    std::vector<CatalogEntry> entries;
    for (const auto& e : catalog_entries())
        if (include_lc || e.id != "L(c)") entries.push_back(e);
    DistinctnessReport rep = distinctness_report(entries);
    if (format == "json") {
        out << distinctness_to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& p : rep.pairs)
            if (p.first != p.second)
                out << p.first << " vs " << p.second << ": separated at "
                    << (p.status == "all" ? "all samples"
                                          : (p.status == "some" ? "some samples" : "no samples"))
                    << "\n";
        auto und = rep.undetermined();
        out << "undetermined pairs: " << und.size();
        for (const auto& p : und) out << " [" << p.first << " ~ " << p.second << "]";
        out << "\n";
    }
    return kOk;
}

int cmd_constraints(std::size_t n, std::size_t f, const std::string& format, std::ostream& out) {
    ConstraintSet cs = generate_constraints(n, f);
    LinearReduction red = reduce_linear(cs);
    if (format == "json") {
        json counts = json::object();
        for (const auto& [fam, c] : cs.family_counts) counts[fam] = c;
        json j = reduction_to_json(red);
        j["family_counts"] = counts;
        out << j.dump(2) << "\n";
    } else {
        out << "constraints for n=" << n << ", f=" << f << "\n";
        out << "family counts:";
        for (const auto& [fam, c] : cs.family_counts) out << " " << fam << "=" << c;
        out << "\n";
        out << "forced zero (" << red.forced_zero.size() << "):";
        for (const auto& s : red.forced_zero) out << " " << s << "=0";
        out << "\n";
        out << "pairings: " << red.negation_pairs.size() << " negations, "
            << red.equality_pairs.size() << " equalities\n";
        for (const auto& rel : red.sum_relations) out << "  " << rel << "\n";
        out << "free symbols:";
        for (const auto& s : red.free_symbols) out << " " << s;
        out << "\n";
        out << "shift-eliminable:";
        for (const auto& s : red.gauge_eliminable) out << " " << s;
        out << "\n";
        out << "canonical off-diagonal support:";
        for (const auto& s : red.canonical_offdiag_support) out << " " << s;
        out << "\n";
    }
    return kOk;
}

int cmd_transform(const std::string& file, const std::string& shift_file,
                  const std::string& basis_file, const std::string& recombine_file,
                  const std::string& out_file, std::ostream& out, std::ostream& err) {
    json j = load_json_file(file);
    if (!looks_like_spec(j)) throw JsonInputError("transform expects an extension JSON");
    ExtensionSpec spec = spec_from_json(j);
    int chosen = (!shift_file.empty()) + (!basis_file.empty()) + (!recombine_file.empty());
    if (chosen != 1) throw JsonInputError("choose exactly one of --shift/--basis/--recombine");
    try {
        if (!shift_file.empty())
            spec = apply_shift(spec, shift_from_json(spec.n, spec.f, load_json_file(shift_file)));
        else if (!basis_file.empty())
            spec = apply_basis_transform(
                spec, basis_transform_from_json(spec.n, load_json_file(basis_file)));
        else
            spec = recombine_X(spec, recombine_from_json(spec.f, load_json_file(recombine_file)));
    } catch (const std::invalid_argument& e) {
        err << "transform rejected: " << e.what() << "\n";
        return kVerifyFail;
    }
    emit(out_file, spec_to_json(spec), out);
    return kOk;
}

int cmd_invariants(const std::string& file, const std::string& format, std::ostream& out) {
    json j = load_json_file(file);
    StructureConstants L =
        looks_like_spec(j) ? build_L(spec_from_json(j)) : algebra_from_json(j);
    InvariantSignature sig = invariant_signature(L);
    if (format == "json")
        out << signature_to_json(sig).dump(2) << "\n";
    else
        out << sig.to_string() << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for solvable Leibniz algebras with triangular nilradical"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string file, out_file, entry_id, samples_arg = "default";
    std::string shift_file, basis_file, recombine_file;
    std::size_t n = 4, f = 1;
    bool include_lc = false;

    auto* verify = app.add_subcommand("verify", "check an algebra or extension file");
    verify->add_option("file", file)->required();

    auto* series = app.add_subcommand("series", "derived and lower central series dims");
    series->add_option("file", file)->required();

    auto* catalog = app.add_subcommand("catalog", "classified-family operations");
    catalog->require_subcommand(1);
    auto* cat_verify = catalog->add_subcommand("verify", "verify catalog entries on samples");
    cat_verify->add_option("--entry", entry_id, "verify a single entry id");
    cat_verify->add_option("--samples", samples_arg, "\"default\" or a JSON file of parameter maps");
    auto* cat_dist = catalog->add_subcommand("distinctness", "pairwise signature separation");
    cat_dist->add_flag("--all", include_lc, "include the two-dimensional family");
    auto* cat_export = catalog->add_subcommand("export", "write the catalog JSON");
    cat_export->add_option("-o,--output", out_file, "output path");

    auto* constraints = app.add_subcommand("constraints", "derive structure constraints");
    constraints->require_subcommand(1);
    auto* derive = constraints->add_subcommand("derive", "generate and reduce");
    derive->add_option("--n", n, "triangular size")->required();
    derive->add_option("--f", f, "extension degree")->required();

    auto* transform = app.add_subcommand("transform", "apply an equivalence transformation");
    transform->add_option("file", file)->required();
    transform->add_option("--shift", shift_file, "generator shift JSON");
    transform->add_option("--basis", basis_file, "nilradical basis change JSON");
    transform->add_option("--recombine", recombine_file, "generator recombination JSON");
    transform->add_option("-o,--output", out_file, "output path");

    auto* invariants = app.add_subcommand("invariants", "invariant signature of an algebra");
    invariants->add_option("file", file)->required();

    auto* buildt = app.add_subcommand("build-t", "triangular algebra as JSON");
    buildt->add_option("--n", n, "triangular size")->required();
    buildt->add_option("-o,--output", out_file, "output path");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*verify) return cmd_verify(file, format, out);
        if (*series) return cmd_series(file, format, out);
        if (*catalog) {
            if (*cat_verify) return cmd_catalog_verify(entry_id, samples_arg, format, out);
            if (*cat_dist) return cmd_catalog_distinctness(include_lc, format, out);
            if (*cat_export) {
                emit(out_file, catalog_to_json(), out);
                return kOk;
            }
        }
        if (*constraints && *derive) return cmd_constraints(n, f, format, out);
        if (*transform)
            return cmd_transform(file, shift_file, basis_file, recombine_file, out_file, out, err);
        if (*invariants) return cmd_invariants(file, format, out);
        if (*buildt) {
            emit(out_file, algebra_to_json(build_T(n)), out);
            return kOk;
        }
    } catch (const JsonInputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConstraintViolation& e) {
        err << "constraint violated: " << e.what() << "\n";
        return kVerifyFail;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace trileib
