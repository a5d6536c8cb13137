// lsa: exact checks for nilpotent left-symmetric algebras.
//
//   lsa catalog list                 built-in algebra families
//   lsa check <file|label>           identity / nilpotency / annihilator checks
//   lsa cohomology <file|label>...   Z2, B2, H2 (Novikov and full) table
//   lsa extend <base> --cocycle ...  build a central extension
//   lsa invariants <label>...        invariant vectors + pairwise distinctness
//   lsa degenerate <A> <w> <B>       verify a degeneration witness file
//   lsa suite <name>                 run a verification suite
//
// Every computation is exact; --json writes a machine-readable report
// (under $LSA_REPORT_DIR when the path is relative).  Exit status 0 means
// every executed check passed.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lsa/algebra.hpp"
#include "lsa/catalog.hpp"
#include "lsa/cohomology.hpp"
#include "lsa/degeneration.hpp"
#include "lsa/extension.hpp"
#include "lsa/io.hpp"
#include "lsa/isomorphism.hpp"
#include "lsa/suites.hpp"

using json = nlohmann::ordered_json;
using namespace lsa;
using K = GaussRational;

namespace {

struct CommonOpts {
    std::string params;
    std::string json_path;
    bool quiet = false;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--params", o.params, "parameter bindings, e.g. lambda=2,alpha=5/2");
    cmd->add_option("--json", o.json_path, "write a JSON report to this path");
    cmd->add_flag("--quiet", o.quiet, "suppress text output");
    cmd->add_option("--samples", o.samples, "cap on parameter samples per family");
    cmd->add_option("--seed", o.seed, "seed for randomized checks");
}

void write_json(const CommonOpts& o, const json& doc) {
    if (o.json_path.empty()) return;
    std::filesystem::path path(o.json_path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("LSA_REPORT_DIR")) path = std::filesystem::path(dir) / path;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << doc.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// label from the catalog (with --params) or a presentation file on disk
Algebra<K> load_algebra(const std::string& spec, const std::string& params) {
    ParamMap binds = params.empty() ? ParamMap{} : io::parse_param_list(params);
    if (const CatalogEntry* e = find_entry(spec)) {
        std::map<std::string, K> b(binds.begin(), binds.end());
        return instantiate<K>(*e, b);
    }
    if (std::filesystem::exists(spec)) {
        Algebra<K> a = io::parse_presentation(read_file(spec));
        a.label = std::filesystem::path(spec).stem().string();
        return a;
    }
    throw Error("'" + spec + "' is neither a catalog label nor a readable file");
}

std::string cocycle_str(const Matrix<K>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            std::string term = io::detail::coef_times_basis(
                m(i, j), "D" + std::to_string(i + 1) + std::to_string(j + 1));
            if (out.empty()) out = term;
            else if (term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
    return out.empty() ? "0" : out;
}

json invariants_json(const InvariantVector& v) {
    return json{{"dim_ann", v.dim_ann},          {"dim_sq", v.dim_sq},
                {"dim_cube", v.dim_cube},        {"dim_der", v.dim_der},
                {"left_ann_dim", v.left_ann_dim}, {"right_ann_dim", v.right_ann_dim},
                {"commutative_rank", v.commutative_rank}};
}

int cmd_catalog(const CommonOpts& o) {
    json doc = json::array();
    for (const auto& e : catalog()) {
        json entry_doc{{"label", e.label}, {"dim", e.dim}, {"params", e.params}};
        entry_doc["kind"] = e.kind == EntryKind::Zero              ? "zero"
                            : e.kind == EntryKind::NovikovBase     ? "novikov-base"
                            : e.kind == EntryKind::NonNovikov      ? "non-novikov"
                                                                   : "novikov-component";
        json prods = json::array();
        for (const auto& p : e.products) {
            std::string coef = p.coef.str();
            std::string rhs = coef == "1" ? "" : "(" + coef + ")*";
            prods.push_back("e" + std::to_string(p.i) + "*e" + std::to_string(p.j) + " = " + rhs +
                            "e" + std::to_string(p.k));
        }
        entry_doc["products"] = prods;
        if (e.radical) entry_doc["radical"] = "mu^2 = 1 - 4*lambda";
        for (const auto& [name, v] : e.excluded_values)
            entry_doc["domain"].push_back(name + " != " + to_string(v));
        entry_doc["provenance"] = e.provenance;
        doc.push_back(entry_doc);
        if (!o.quiet) {
            std::string line = e.label;
            if (!e.params.empty()) {
                line += "(";
                for (std::size_t k = 0; k < e.params.size(); ++k)
                    line += (k ? "," : "") + e.params[k];
                line += ")";
            }
            std::cout << line << "  dim " << e.dim << "  [" << entry_doc["kind"].get<std::string>()
                      << "]\n";
        }
    }
    write_json(o, doc);
    return 0;
}

int cmd_check(const std::string& spec, const CommonOpts& o) {
    Algebra<K> a = load_algebra(spec, o.params);
    auto ls = left_symmetric_violation(a);
    auto rc = right_commutative_violation(a);
    auto chain = power_chain(a);
    bool nilpotent = chain.back().dim() == 0;
    std::size_t ann = annihilator(a).dim();

    json doc{{"label", a.label}, {"dim", a.n}};
    doc["left_symmetric"] = !ls.has_value();
    if (ls)
        doc["left_symmetric_violation"] = {{"i", ls->i + 1}, {"j", ls->j + 1}, {"k", ls->k + 1}};
    doc["right_commutative"] = !rc.has_value();
    doc["novikov"] = !ls && !rc;
    doc["nilpotent"] = nilpotent;
    json dims = json::array();
    for (const auto& s : chain) dims.push_back(s.dim());
    doc["power_chain_dims"] = dims;
    doc["ann_dim"] = ann;

    if (!o.quiet) {
        std::cout << a.label << ": " << (ls ? "NOT left-symmetric" : "left-symmetric") << ", "
                  << (!ls && !rc ? "Novikov" : "non-Novikov") << ", "
                  << (nilpotent ? "nilpotent" : "NOT nilpotent") << ", dim Ann = " << ann << "\n";
        if (ls)
            std::cout << "  identity fails on basis triple (" << ls->i + 1 << "," << ls->j + 1
                      << "," << ls->k + 1 << ")\n";
    }
    write_json(o, doc);
    return (!ls && nilpotent) ? 0 : 1;
}

int cmd_cohomology(const std::vector<std::string>& specs, const CommonOpts& o) {
    json rows = json::array();
    if (!o.quiet)
        std::cout << "algebra           dim Z2  dim B2  dim H2_N  dim H2_L\n";
    for (const auto& spec : specs) {
        Algebra<K> a = load_algebra(spec, o.params);
        CohomologySpace<K> coh = h2(a);
        json row{{"label", a.label},
                 {"dim_z2", coh.dim_z2()},
                 {"dim_b2", coh.dim_b2()},
                 {"dim_h2n", coh.dim_h2n()},
                 {"dim_h2l", coh.dim_h2()}};
        json reps = json::array();
        for (std::size_t k = 0; k < coh.h2_reps.size(); ++k)
            reps.push_back(coh.labels[k] + " = " + cocycle_str(coh.h2_reps[k]));
        row["h2_reps"] = reps;
        json nreps = json::array();
        for (const auto& r : coh.h2n_reps) nreps.push_back(cocycle_str(r));
        row["h2n_reps"] = nreps;
        rows.push_back(row);
        if (!o.quiet) {
            std::ostringstream line;
            line.width(16);
            line << std::left << a.label;
            std::cout << line.str() << "  " << coh.dim_z2() << "       " << coh.dim_b2()
                      << "       " << coh.dim_h2n() << "         " << coh.dim_h2() << "\n";
        }
    }
    write_json(o, rows);
    return 0;
}

int cmd_extend(const std::string& base_spec, const std::string& cocycle_expr,
               const CommonOpts& o) {
    Algebra<K> base = load_algebra(base_spec, o.params);
    ParamMap binds = o.params.empty() ? ParamMap{} : io::parse_param_list(o.params);
    Matrix<K> theta = io::parse_cocycle_expr(cocycle_expr, base.n, binds);
    ExtensionResult<K> ext =
        central_extension<K>({base, {theta}, base.label + "_ext"});
    std::string text = io::emit_presentation(ext.algebra);
    json doc{{"base", base.label},
             {"cocycle", cocycle_str(theta)},
             {"split_warning", ext.split_warning},
             {"annihilator_warning", ext.annihilator_warning},
             {"presentation", text}};
    if (!o.quiet) {
        std::cout << text;
        if (ext.split_warning)
            std::cout << "# warning: cocycle class is trivial, the extension splits\n";
        if (ext.annihilator_warning)
            std::cout << "# warning: Ann(theta) meets Ann(base)\n";
    }
    write_json(o, doc);
    return 0;
}

int cmd_invariants(const std::vector<std::string>& specs, const CommonOpts& o) {
    std::vector<Algebra<K>> algebras;
    for (const auto& s : specs) algebras.push_back(load_algebra(s, o.params));
    json doc;
    for (const auto& a : algebras) {
        InvariantVector v = invariants(a);
        doc["algebras"].push_back({{"label", a.label}, {"invariants", invariants_json(v)}});
        if (!o.quiet) std::cout << a.label << " " << v.str() << "\n";
    }
    json pairs = json::array();
    for (std::size_t x = 0; x < algebras.size(); ++x)
        for (std::size_t y = x + 1; y < algebras.size(); ++y) {
            DistinguishResult d = distinguish(algebras[x], algebras[y]);
            pairs.push_back({{"a", algebras[x].label},
                             {"b", algebras[y].label},
                             {"outcome", d.non_isomorphic ? "non-isomorphic" : "inconclusive"},
                             {"witness", d.witness}});
            if (!o.quiet && algebras.size() > 1)
                std::cout << algebras[x].label << " vs " << algebras[y].label << ": "
                          << (d.non_isomorphic ? "non-isomorphic via " + d.witness
                                               : "inconclusive")
                          << "\n";
        }
    doc["pairs"] = pairs;
    write_json(o, doc);
    return 0;
}

int cmd_degenerate(const std::string& a_spec, const std::string& witness_path,
                   const std::string& b_spec, const CommonOpts& o) {
    DegenerationWitness w = io::parse_witness(read_file(witness_path));
    Algebra<K> b = load_algebra(b_spec, o.params);

    Algebra<RatFunc> a_t;
    if (const CatalogEntry* e = find_entry(a_spec)) {
        std::map<std::string, RatFunc> binds;
        for (const auto& [k, v] : w.param_index) binds[k] = v;
        if (!o.params.empty())
            for (const auto& [k, v] : io::parse_param_list(o.params))
                if (!binds.count(k)) binds[k] = RatFunc(v);
        a_t = instantiate<RatFunc>(*e, binds);
    } else {
        a_t = lift(load_algebra(a_spec, o.params));
    }

    DegenerationCheck check = verify_degeneration(a_t, w, b);
    json doc{{"from", a_t.label}, {"to", b.label}, {"pass", check.pass}};
    if (!check.pass) {
        doc["entry"] = {check.i + 1, check.j + 1, check.k + 1};
        doc["value"] = check.value.str();
        doc["reason"] = check.reason;
    }
    if (!o.quiet) {
        if (check.pass)
            std::cout << a_t.label << " -> " << b.label << ": witness verified\n";
        else
            std::cout << a_t.label << " -> " << b.label << ": FAIL at entry (" << check.i + 1
                      << "," << check.j + 1 << "," << check.k + 1 << "): " << check.reason
                      << "\n";
    }
    write_json(o, doc);
    return check.pass ? 0 : 1;
}

int cmd_suite(const std::string& name, const CommonOpts& o) {
    SuiteOptions opt;
    opt.samples = o.samples;
    opt.seed = o.seed;
    SuiteReport rep = run_suite(name, opt);
    json doc{{"suite", rep.suite}, {"all_pass", rep.all_pass()}};
    json items = json::array();
    for (const auto& it : rep.items) {
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
        if (!o.quiet)
            std::cout << (it.pass ? "PASS " : "FAIL ") << it.name
                      << (it.detail.empty() ? "" : "  (" + it.detail + ")") << "\n";
    }
    doc["items"] = items;
    if (!o.quiet)
        std::cout << rep.suite << ": " << (rep.items.size() - rep.failures()) << "/"
                  << rep.items.size() << " checks passed\n";
    write_json(o, doc);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for nilpotent left-symmetric algebras"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* cat = app.add_subcommand("catalog", "list the built-in algebra catalog");
    std::string cat_action = "list";
    cat->add_option("action", cat_action)->check(CLI::IsMember({"list"}));
    add_common(cat, o);

    std::string check_spec;
    auto* check = app.add_subcommand("check", "run the identity checks on one algebra");
    check->add_option("algebra", check_spec, "catalog label or presentation file")->required();
    add_common(check, o);

    std::vector<std::string> coh_specs;
    auto* coh = app.add_subcommand("cohomology", "second cohomology table");
    coh->add_option("algebra", coh_specs)->required();
    add_common(coh, o);

    std::string ext_base, ext_cocycle;
    auto* ext = app.add_subcommand("extend", "build a central extension");
    ext->add_option("base", ext_base)->required();
    ext->add_option("--cocycle", ext_cocycle, "cocycle in D<i><j> coordinates")->required();
    add_common(ext, o);

    std::vector<std::string> inv_specs;
    auto* inv = app.add_subcommand("invariants", "invariant vectors and distinctness");
    inv->add_option("algebra", inv_specs)->required();
    add_common(inv, o);

    std::string deg_a, deg_w, deg_b;
    auto* deg = app.add_subcommand("degenerate", "verify a degeneration witness");
    deg->add_option("from", deg_a)->required();
    deg->add_option("witness", deg_w)->required();
    deg->add_option("to", deg_b)->required();
    add_common(deg, o);

    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("name", suite_name)->required()->check(CLI::IsMember(suite_names()));
    add_common(suite, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) return cmd_catalog(o);
        if (check->parsed()) return cmd_check(check_spec, o);
        if (coh->parsed()) return cmd_cohomology(coh_specs, o);
        if (ext->parsed()) return cmd_extend(ext_base, ext_cocycle, o);
        if (inv->parsed()) return cmd_invariants(inv_specs, o);
        if (deg->parsed()) return cmd_degenerate(deg_a, deg_w, deg_b, o);
        if (suite->parsed()) return cmd_suite(suite_name, o);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
