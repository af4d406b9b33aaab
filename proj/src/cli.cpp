#include "nucleus/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nucleus/io.hpp"

namespace nucleus::cli {

namespace {

using legendre::Grid;
using legendre::SampledFunction;

struct Options {
    std::vector<std::string> inputs;
    std::string check_kind;
    std::string dual;
    std::string out_path;
    double tol = legendre::kDefaultTolerance;
    bool json = false;
};

/// `lo:hi:step`; `auto` is resolved by the caller.
Grid parse_dual_spec(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        const ExtReal v = parse_extreal(item);
        if (!v.is_finite()) throw std::invalid_argument("--dual: bounds and step must be finite");
        parts.push_back(v.value());
    }
    if (parts.size() != 3) throw std::invalid_argument("--dual: expected lo:hi:step or auto, got '" + spec + "'");
    return Grid::range(parts[0], parts[1], parts[2]);
}

Grid resolve_dual(const std::string& spec, const SampledFunction& reference) {
    if (spec.empty()) throw std::invalid_argument("--dual is required for this command");
    if (spec == "auto") return legendre::default_dual_grid(reference);
    return parse_dual_spec(spec);
}

SampledFunction load_function(const std::string& path, legendre::Space space = legendre::Space::Primal) {
    return io::parse_function_csv(io::read_file(path), path, space);
}

galois::Context load_context(const std::string& path) {
    const std::string text = io::read_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return io::parse_context_csv(text, path);
    return io::parse_cxt(text, path);
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw ParseError(opt.out_path, 0, "--out", "cannot open for writing");
    file << text;
}

std::string render_tables() {
    const ExtReal alphabet[] = {kNegInf, -1.0, 0.0, 1.0, kPosInf};
    std::ostringstream out;
    auto table = [&](const char* title, auto op) {
        out << title << "\n";
        out << std::setw(6) << "x\\y";
        for (const auto& y : alphabet) out << std::setw(6) << to_string(y);
        out << "\n";
        for (const auto& x : alphabet) {
            out << std::setw(6) << to_string(x);
            for (const auto& y : alphabet) out << std::setw(6) << to_string(op(x, y));
            out << "\n";
        }
    };
    table("x + y", [](const ExtReal& x, const ExtReal& y) { return add(x, y); });
    out << "\n";
    table("y - x", [](const ExtReal& x, const ExtReal& y) { return sub(y, x); });
    return out.str();
}

std::string render_concepts(const galois::Context& ctx, const galois::ConceptLattice& lattice) {
    auto brace = [](const std::vector<std::string>& labels) {
        std::string s = "{";
        for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
        return s + "}";
    };
    std::string out;
    for (const auto& c : lattice.concepts) {
        out += brace(ctx.object_labels(c.extent)) + " | " + brace(ctx.attribute_labels(c.intent)) + "\n";
    }
    return out;
}

int run_check(const Options& opt, std::ostream& out) {
    legendre::DualityReport report;
    if (opt.check_kind == "adjunction") {
        const SampledFunction f = load_function(opt.inputs.at(0));
        const SampledFunction g = load_function(opt.inputs.at(1), legendre::Space::Dual);
        report = legendre::check_lf_adjunction(f, g, opt.tol);
    } else {
        const SampledFunction f1 = load_function(opt.inputs.at(0));
        const SampledFunction f2 = load_function(opt.inputs.at(1));
        const Grid dual = resolve_dual(opt.dual, f2);
        report = opt.check_kind == "short" ? legendre::check_short(f1, f2, dual, opt.tol)
                                           : legendre::check_toland_singer(f1, f2, dual, opt.tol);
    }
    emit(opt, out, opt.json ? report.to_json() : report.to_text());
    return report.holds() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete Legendre-Fenchel calculus and formal concept analysis"};
    app.name(args.empty() ? "nucleus" : args.front());
    app.require_subcommand(1);

    Options opt;
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "Write output to this file"); };
    auto add_inputs = [&](CLI::App* sub, std::size_t n, const char* what) {
        sub->add_option("inputs", opt.inputs, what)->required()->expected(static_cast<int>(n));
    };

    auto* tables = app.add_subcommand("tables", "Print the extended-real addition and subtraction tables");

    auto* conjugate = app.add_subcommand("conjugate", "Legendre-Fenchel conjugate of a function CSV");
    add_inputs(conjugate, 1, "Function CSV");
    conjugate->add_option("--dual", opt.dual, "Slope grid lo:hi:step, or auto")->required();
    add_out(conjugate);

    auto* biconjugate = app.add_subcommand("biconjugate", "Biconjugate (closed convex hull) of a function CSV");
    add_inputs(biconjugate, 1, "Function CSV");
    biconjugate->add_option("--dual", opt.dual, "Slope grid lo:hi:step, or auto (default)");
    add_out(biconjugate);

    auto* hull = app.add_subcommand("hull", "Geometric lower convex hull of a function CSV");
    add_inputs(hull, 1, "Function CSV");
    add_out(hull);

    auto* distance = app.add_subcommand("distance", "Climb and fall distances between two functions");
    add_inputs(distance, 2, "Two function CSVs");

    auto* check = app.add_subcommand("check", "Check a duality identity; exit 0 iff it holds");
    check->add_option("kind", opt.check_kind, "adjunction, short or toland-singer")
        ->required()
        ->check(CLI::IsMember({"adjunction", "short", "toland-singer"}));
    add_inputs(check, 2, "Two function CSVs (for adjunction: primal f, dual g)");
    check->add_option("--dual", opt.dual, "Slope grid lo:hi:step, or auto");
    check->add_option("--tol", opt.tol, "Absolute tolerance on finite values")->check(CLI::NonNegativeNumber);
    check->add_flag("--json", opt.json, "Emit the report as JSON");
    add_out(check);

    auto* concepts = app.add_subcommand("concepts", "List the formal concepts of a context");
    add_inputs(concepts, 1, "Context (.cxt or 0/1 .csv)");
    add_out(concepts);

    auto* lattice = app.add_subcommand("lattice", "Concept lattice as a GraphViz Hasse diagram");
    add_inputs(lattice, 1, "Context (.cxt or 0/1 .csv)");
    add_out(lattice);

    auto* compose = app.add_subcommand("compose", "Min-plus product of two matrix CSVs");
    add_inputs(compose, 2, "Two matrix CSVs");
    add_out(compose);

    auto* plotdata = app.add_subcommand("plotdata", "Tab-separated finite samples for plotting");
    add_inputs(plotdata, 1, "Function CSV");
    add_out(plotdata);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("nucleus");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (tables->parsed()) {
            out << render_tables();
        } else if (conjugate->parsed()) {
            const SampledFunction f = load_function(opt.inputs[0]);
            emit(opt, out, io::write_function_csv(legendre::conjugate(f, resolve_dual(opt.dual, f))));
        } else if (biconjugate->parsed()) {
            const SampledFunction f = load_function(opt.inputs[0]);
            const Grid dual = resolve_dual(opt.dual.empty() ? "auto" : opt.dual, f);
            emit(opt, out, io::write_function_csv(legendre::biconjugate(f, dual)));
        } else if (hull->parsed()) {
            emit(opt, out, io::write_function_csv(legendre::convex_hull_oracle(load_function(opt.inputs[0]))));
        } else if (distance->parsed()) {
            const SampledFunction f1 = load_function(opt.inputs[0]);
            const SampledFunction f2 = load_function(opt.inputs[1]);
            out << "climb: " << to_string(legendre::climb_distance(f1, f2)) << "\n"
                << "fall: " << to_string(legendre::fall_distance(f1, f2)) << "\n";
        } else if (check->parsed()) {
            return run_check(opt, out);
        } else if (concepts->parsed()) {
            const galois::Context ctx = load_context(opt.inputs[0]);
            emit(opt, out, render_concepts(ctx, galois::enumerate_concepts(ctx)));
        } else if (lattice->parsed()) {
            const galois::Context ctx = load_context(opt.inputs[0]);
            emit(opt, out, galois::export_dot(ctx, galois::enumerate_concepts(ctx)));
        } else if (compose->parsed()) {
            const auto a = io::parse_extreal_matrix_csv(io::read_file(opt.inputs[0]), opt.inputs[0]);
            const auto b = io::parse_extreal_matrix_csv(io::read_file(opt.inputs[1]), opt.inputs[1]);
            io::LabeledMatrix<ExtReal> c{a.row_labels, b.col_labels, compose_profunctors(a.entries, b.entries)};
            emit(opt, out, io::write_matrix_csv(c));
        } else if (plotdata->parsed()) {
            emit(opt, out, io::write_plot_data(load_function(opt.inputs[0])));
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}

}  // namespace nucleus::cli
