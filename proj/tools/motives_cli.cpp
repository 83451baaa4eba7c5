// Command-line front end: model file I/O, verification runner and
// human-readable motive-table reports.
//
// Exit codes: 0 clean, 1 certificate/validation failure, 2 malformed input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "motives/selftest.hpp"

using namespace motives;

namespace {

struct Options {
    std::string format = "md";
    std::string out;
    unsigned jobs = 1;
};

ReportFormat report_format(const Options& o) {
    return o.format == "json" ? ReportFormat::json : ReportFormat::markdown;
}

void deliver(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + o.out + "'");
    f << text;
}

// "catalog:KEY" loads a built-in entry, anything else is a file path
ModelFile resolve_input(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) {
        const std::string key = spec.substr(8);
        const auto entries = load_catalog();
        const CatalogEntry* e = find_entry(entries, key);
        if (!e) throw ParseError("unknown catalog key '" + key + "'", "catalog");
        return catalog_entry_to_file(*e);
    }
    std::ifstream f(spec, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + spec + "'", "file");
    std::stringstream buf;
    buf << f.rdbuf();
    return load_model_file(buf.str());
}

int run_validate(const Options& o, const std::string& input) {
    const ModelFile mf = resolve_input(input);
    std::ostringstream out;
    auto rep = validate_variety(*mf.variety);
    out << "# Validation: " << mf.variety->name << "\n\n";
    bool clean = rep.ok();
    if (rep.ok())
        out << "- variety: valid\n";
    else
        for (const auto& v : rep.violations) out << "- variety violation: " << v << "\n";
    if (mf.fibration) {
        auto frep = validate_fibration(*mf.fibration);
        clean &= frep.ok();
        if (frep.ok())
            out << "- fibration: valid\n";
        else
            for (const auto& v : frep.violations) out << "- fibration violation: " << v << "\n";
    }
    deliver(o, out.str());
    return clean ? 0 : 1;
}

int run_kunneth(const Options& o, const std::string& input) {
    const ModelFile mf = resolve_input(input);
    const ModelPtr& x = mf.variety;
    MurreSet set;
    set.variety = x;
    for (std::size_t j = 0; j <= 2 * x->dim; ++j)
        set.projectors.push_back(kunneth_projector(x, j));
    set.certificate = verify_murre_axioms(x, set.projectors);
    deliver(o, emit_report(set, report_format(o)));
    return set.certificate.all_pass() ? 0 : 1;
}

int run_murre(const Options& o, const std::string& input, bool want_fibration,
              bool want_algebraic) {
    const ModelFile mf = resolve_input(input);
    MurreSet set;
    if (want_fibration || (!want_algebraic && mf.fibration)) {
        if (!mf.fibration) throw ParseError("input carries no fibration data", "fibration");
        auto frep = validate_fibration(*mf.fibration);
        if (!frep.ok()) throw Error("fibration data invalid: " + frep.violations.front());
        auto pi = assemble_pi(*mf.fibration);
        auto c = catalog_correction_data(*mf.fibration, pi[2]);
        set = murre_set_fibration(*mf.fibration, c);
    } else {
        if (!mf.recipes) throw ParseError("input carries no projector recipes", "recipes");
        set = murre_set_algebraic(mf.variety, mf.recipes->first, mf.recipes->second);
    }
    deliver(o, emit_report(set, report_format(o)));
    return set.certificate.all_pass() ? 0 : 1;
}

int run_transport(const Options& o, const std::string& input, const std::string& blowup_arg) {
    const ModelFile mf = resolve_input(input);

    BlowupSpec spec;
    spec.base = mf.variety;
    if (blowup_arg == "point") {
        spec.center_kind = BlowupSpec::Center::point;
    } else if (blowup_arg.rfind("curve:", 0) == 0) {
        spec.center_kind = BlowupSpec::Center::curve;
        spec.center_h1_dim = 2 * static_cast<std::size_t>(std::stoul(blowup_arg.substr(6)));
    } else {
        bool found = false;
        for (const auto& [name, s] : mf.blowups)
            if (name == blowup_arg) {
                spec = s;
                found = true;
            }
        if (!found)
            throw ParseError("unknown blow-up '" + blowup_arg + "' (use point, curve:<g>, or a named spec)",
                             "blowups");
    }

    BlowupResult bl = blowup_model(spec);
    auto q1 = standard_recipe(bl.model, 1);
    auto q2 = standard_recipe(bl.model, 2);
    MurreSet up = murre_set_algebraic(bl.model, q1, q2);
    TransportResult res = transport_family(up.projectors, bl.phi);

    MurreSet down;
    down.variety = mf.variety;
    down.projectors = res.transported;
    down.certificate = res.certificate;
    auto split = verify_split_ranks(*mf.variety, *bl.model, spec);
    for (auto& c : split.checks) down.certificate.checks.push_back(std::move(c));

    deliver(o, emit_report(down, report_format(o)));
    return down.certificate.all_pass() && up.certificate.all_pass() ? 0 : 1;
}

int run_catalog(const Options& o, const std::string& sub, const std::string& key) {
    const auto entries = load_catalog();
    if (sub == "list") {
        std::ostringstream out;
        for (const auto& e : entries) {
            out << e.key << "  (dim " << e.model->dim << ", Betti";
            for (auto d : e.model->space.dims) out << " " << d;
            out << ")\n    " << e.notes << "\n";
        }
        deliver(o, out.str());
        return 0;
    }
    if (sub == "export") {
        const CatalogEntry* e = find_entry(entries, key);
        if (!e) throw ParseError("unknown catalog key '" + key + "'", "catalog");
        deliver(o, save_model_file(catalog_entry_to_file(*e)));
        return 0;
    }
    throw ParseError("catalog subcommand must be list or export", "catalog");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact correspondence calculus and Murre-projector verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--format", opt.format, "report format: md or json")
        ->check(CLI::IsMember({"md", "json"}));
    app.add_option("--out", opt.out, "write output to a file instead of stdout");
    app.add_option("--jobs", opt.jobs, "worker threads for independent checks")
        ->check(CLI::PositiveNumber);

    std::string input, blowup_arg, catalog_sub, catalog_key;
    bool flag_fibration = false, flag_algebraic = false;

    auto* validate = app.add_subcommand("validate", "run all validators on a model file");
    validate->add_option("input", input, "model file or catalog:KEY")->required();

    auto* kunneth = app.add_subcommand("kunneth", "print the Kunneth projectors and their ranks");
    kunneth->add_option("input", input, "model file or catalog:KEY")->required();

    auto* murre = app.add_subcommand("murre", "build a Murre set and print its certificate");
    murre->add_option("input", input, "model file or catalog:KEY")->required();
    murre->add_flag("--fibration", flag_fibration, "use the fibration construction");
    murre->add_flag("--algebraic", flag_algebraic, "use the algebraic (recipe) construction");

    auto* transport = app.add_subcommand("transport", "blow up, build projectors upstairs, transport down");
    transport->add_option("input", input, "model file or catalog:KEY")->required();
    transport->add_option("--blowup", blowup_arg, "point | curve:<genus> | named spec from the file")
        ->required();

    auto* catalog = app.add_subcommand("catalog", "list or export the built-in models");
    catalog->add_option("action", catalog_sub, "list | export")->required();
    catalog->add_option("key", catalog_key, "entry key (for export)");

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(opt, input);
        if (kunneth->parsed()) return run_kunneth(opt, input);
        if (murre->parsed()) {
            if (flag_fibration && flag_algebraic)
                throw ParseError("choose one of --fibration / --algebraic", "flags");
            return run_murre(opt, input, flag_fibration, flag_algebraic);
        }
        if (transport->parsed()) return run_transport(opt, input, blowup_arg);
        if (catalog->parsed()) return run_catalog(opt, catalog_sub, catalog_key);
        if (selftest->parsed()) {
            const auto results = run_acceptance(opt.jobs);
            std::ostringstream out;
            const int code = print_acceptance(out, results);
            deliver(opt, out.str());
            return code;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
