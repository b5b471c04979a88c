#include "zap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zap/errors.hpp"
#include "zap/families.hpp"
#include "zap/report.hpp"

namespace zap {

namespace {

// Raised for unreadable input or unwritable output.
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string input = "-";
    std::string output = "-";
    bool pretty = false;
};

struct FamilyArgs {
    std::string name;
    int n = 0, m = 0, d = 0, a = 0, b = 0, size = 0;
    std::uint64_t seed = 1;
    bool filled = false;
    bool no_angle = false;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoFailure("cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw IoFailure("cannot write " + path);
}

std::string dump(const ojson& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

void add_common(CLI::App* cmd, Common& c, bool with_input) {
    if (with_input) cmd->add_option("input", c.input, "graph file, or - for stdin");
    cmd->add_option("-o,--output", c.output, "output file, or - for stdout");
    cmd->add_flag("--json", "machine-readable JSON (default)");
    cmd->add_flag("--pretty", c.pretty, "indent the JSON output");
}

int require(const FamilyArgs& f, int value, const char* flag) {
    if (value == 0) throw DomainError("family " + f.name + " requires --" + flag);
    return value;
}

ZappaticGraph generate(const FamilyArgs& f) {
    const auto& name = f.name;
    if (name == "chain") return chain_planes(require(f, f.n, "n"));
    if (name == "cycle") return cycle_planes(require(f, f.n, "n"), f.filled);
    if (name == "fork") return fork_planes(require(f, f.n, "n"), !f.no_angle);
    if (name == "quadric-chain") return quadric_chain(require(f, f.n, "n"));
    if (name == "quadrics-plane") return two_quadrics_and_plane();
    if (name == "veronese") return veronese_mt(require(f, f.d, "d"));
    if (name == "pillow") return pillow(require(f, f.a, "a"), require(f, f.b, "b")).graph;
    if (name == "abelian") return abelian_grid(require(f, f.n, "n"), require(f, f.m, "m"));
    if (name == "star-obstruction") return star_obstruction();
    if (name == "nonsmooth") return nonsmooth_example();
    if (name == "random") return random_planar_config(f.seed, require(f, f.size, "size"));
    throw DomainError("unknown family " + name);
}

// Loads and validates; on failure writes the validation report and returns false.
bool load_valid(const Common& c, std::istream& in, std::ostream& out, ZappaticGraph& g) {
    g = load_graph(read_input(c.input, in));
    const auto report = validate(g);
    if (report.passed()) return true;
    write_output(c.output, dump(to_json(report), c.pretty), out);
    return false;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants and smoothability checks for Zappatic configurations", "zap"};
    app.require_subcommand(1);

    Common validate_opts, invariants_opts, check_opts, homology_opts, generate_opts;
    std::int64_t coker = 0, ker = 0, check_coker = 0, check_ker = 0;
    FamilyArgs family;

    auto* validate_cmd = app.add_subcommand("validate", "check a graph against the structural rules");
    add_common(validate_cmd, validate_opts, true);

    auto* invariants_cmd = app.add_subcommand("invariants", "compute the invariant report");
    add_common(invariants_cmd, invariants_opts, true);
    auto* coker_opt = invariants_cmd->add_option("--coker", coker, "dim coker(Phi), when known");
    auto* ker_opt = invariants_cmd->add_option("--ker", ker, "dim ker(Phi), when known");

    auto* check_cmd = app.add_subcommand("check", "run the smoothability obstructions");
    add_common(check_cmd, check_opts, true);
    auto* check_coker_opt = check_cmd->add_option("--coker", check_coker, "dim coker(Phi), when known");
    auto* check_ker_opt = check_cmd->add_option("--ker", check_ker, "dim ker(Phi), when known");

    auto* homology_cmd = app.add_subcommand("homology", "Betti numbers and boundary ranks");
    add_common(homology_cmd, homology_opts, true);

    auto* generate_cmd = app.add_subcommand("generate", "write a named family as canonical JSON");
    add_common(generate_cmd, generate_opts, false);
    generate_cmd
        ->add_option("family", family.name,
                     "chain, cycle, fork, quadric-chain, quadrics-plane, veronese, pillow, abelian, "
                     "star-obstruction, nonsmooth, random")
        ->required();
    generate_cmd->add_option("--n", family.n);
    generate_cmd->add_option("--m", family.m);
    generate_cmd->add_option("--d", family.d);
    generate_cmd->add_option("--a", family.a);
    generate_cmd->add_option("--b", family.b);
    generate_cmd->add_option("--seed", family.seed);
    generate_cmd->add_option("--size", family.size);
    generate_cmd->add_flag("--filled", family.filled, "cycle: one closed face instead of R_3 points");
    generate_cmd->add_flag("--no-angle", family.no_angle, "fork: R_3 points instead of one angle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "zap: " << e.what() << "\n";
        return exit_io;
    }

    try {
        ZappaticGraph g;
        if (*validate_cmd) {
            const auto& c = validate_opts;
            g = load_graph(read_input(c.input, in));
            const auto report = validate(g);
            write_output(c.output, dump(to_json(report), c.pretty), out);
            return report.passed() ? exit_ok : exit_invalid;
        }
        if (*invariants_cmd) {
            const auto& c = invariants_opts;
            if (!load_valid(c, in, out, g)) return exit_invalid;
            PhiData phi;
            if (coker_opt->count()) phi.coker = coker;
            if (ker_opt->count()) phi.ker = ker;
            write_output(c.output, dump(to_json(full_report(g, phi)), c.pretty), out);
            return exit_ok;
        }
        if (*check_cmd) {
            const auto& c = check_opts;
            if (!load_valid(c, in, out, g)) return exit_invalid;
            PhiData phi;
            if (check_coker_opt->count()) phi.coker = check_coker;
            if (check_ker_opt->count()) phi.ker = check_ker;
            const auto report = check_obstructions(g, phi);
            auto j = to_json(report);
            j["k3_profile"] = to_json(k3_profile(g));
            write_output(c.output, dump(j, c.pretty), out);
            return report.obstructed() ? exit_obstructed : exit_ok;
        }
        if (*homology_cmd) {
            const auto& c = homology_opts;
            if (!load_valid(c, in, out, g)) return exit_invalid;
            write_output(c.output, dump(to_json(homology(g)), c.pretty), out);
            return exit_ok;
        }
        if (*generate_cmd) {
            const auto& c = generate_opts;
            write_output(c.output, serialize(generate(family), c.pretty), out);
            return exit_ok;
        }
    } catch (const ParseError& e) {
        err << "zap: parse error: " << e.what() << "\n";
        return exit_io;
    } catch (const IoFailure& e) {
        err << "zap: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        err << "zap: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}

}  // namespace zap
