#include "fupdate/cli.hpp"

#include "fupdate/codes.hpp"
#include "fupdate/construct.hpp"
#include "fupdate/error.hpp"
#include "fupdate/fic.hpp"
#include "fupdate/io.hpp"
#include "fupdate/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace fupdate {

namespace {

std::string join(std::span<const Elem> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit_matrix(std::ostream& out, const std::string& key, const Matrix& m,
                 const std::string& path) {
    if (!path.empty()) {
        save_matrix(path, m);
        out << key << "_file: " << path << "\n";
        return;
    }
    out << key << ":\n" << serialize_matrix(m);
}

struct Options {
    std::string problem;
    std::string encoder;
    std::string method = "auto";
    std::optional<std::size_t> target_l;
    std::string s_out;
    std::string h_out;
    std::string codeword;
    std::string stale;
    std::string out_file;
    std::string matrix;
    std::string role = "parity";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t max_space = OracleOptions{}.max_space;
    std::uint64_t nodes = OracleOptions{}.node_budget;
};

int cmd_construct(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    const ConstructionReport r =
        o.method == "auto" ? auto_construct(p, o.budget)
                           : construct(p, method_from_string(o.method), o.target_l, o.budget);
    out << "method: " << to_string(r.scheme.method) << "\n";
    out << "l: " << r.length << "\n";
    out << "m: " << p.m() << "\n";
    out << "n: " << p.n() << "\n";
    out << "q: " << p.q() << "\n";
    out << "precondition: " << r.precondition << "\n";
    out << "validated: " << yes_no(r.checked) << "\n";
    if (r.bounds) {
        out << "lower_bound: " << r.bounds->lower << "\n";
        out << "upper_bound: " << r.bounds->upper << "\n";
    }
    emit_matrix(out, "S", r.scheme.S, o.s_out);
    emit_matrix(out, "H", r.scheme.H, o.h_out);
    return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    const Matrix s = load_matrix(o.encoder, p.field());
    const Validity v = is_valid_encoder(p, s, o.budget);
    out << "verdict: " << (v.valid ? "valid" : "invalid") << ", l=" << s.rows() << "\n";
    if (!v.valid) {
        out << "witness_syndrome: " << join(*v.witness_syndrome) << "\n";
        out << "witness_delta: " << join(*v.witness_delta) << "\n";
    }
    return v.valid ? kExitOk : kExitInvalid;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    const InterferenceSets sets = enumerate_interference(p, o.budget);
    const CodelengthBounds b = codelength_bounds(p, sets);
    out << "m: " << p.m() << "\n";
    out << "n: " << p.n() << "\n";
    out << "q: " << p.q() << "\n";
    out << "epsilon: " << p.epsilon() << "\n";
    out << "lower: " << b.lower << "\n";
    out << "upper: " << b.upper << "\n";
    out << "interference_size: " << sets.deltas.size() << "\n";
    out << "syndrome_count: " << sets.syndromes.size() << "\n";
    out << "eta: " << b.eta << "\n";
    out << "saving_possible: " << yes_no(saving_possible(p, sets)) << "\n";
    out << "naive_optimal: " << yes_no(p.naive_optimal()) << "\n";
    if (p.naive_optimal()) {
        out << "sufficient_field: n/a\n";
    } else {
        out << "sufficient_field: "
            << yes_no(sufficient_field_check(p.n(), p.m(), p.epsilon(), p.q())) << "\n";
    }
    out << "k_lower_side: " << b.k_lower_side.k_lower << ".." << b.k_lower_side.k_upper << " ("
        << to_string(b.k_lower_side.source) << ")\n";
    out << "k_upper_side: " << b.k_upper_side.k_lower << ".." << b.k_upper_side.k_upper << " ("
        << to_string(b.k_upper_side.source) << ")\n";
    return kExitOk;
}

int cmd_optimal(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    OracleOptions opt;
    opt.max_space = o.max_space;
    opt.node_budget = o.nodes;
    opt.enumeration_budget = o.budget;
    const OracleResult r = optimal_codelength(p, opt);
    out << "l_opt: " << r.l_opt << "\n";
    out << "certified: " << yes_no(r.certified) << "\n";
    out << "avoided_dim: " << r.avoided_dim << "\n";
    out << "nodes: " << r.nodes << "\n";
    emit_matrix(out, "S", r.S, o.s_out);
    return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    const Matrix s = load_matrix(o.encoder, p.field());
    const Vector c = load_vector(o.codeword, p.field());
    const Vector stale = load_vector(o.stale, p.field());
    const Decoder dec(p, s, o.budget);
    out << "updated: " << join(dec.decode(c, stale)) << "\n";
    return kExitOk;
}

int cmd_fic_export(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    const std::string doc = export_fic(from_function_update(p, o.budget));
    if (o.out_file.empty()) {
        out << doc;
    } else {
        std::ofstream f(o.out_file);
        if (!f) throw ParseError("cannot write " + o.out_file);
        f << doc;
        out << "fic_file: " << o.out_file << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const auto p = load_problem(o.problem);
    const Matrix s = load_matrix(o.encoder, p.field());
    const RoundTripStats st = o.exhaustive ? exhaustive_round_trips(p, s, o.seed, o.budget)
                                           : random_round_trips(p, s, o.trials, o.seed);
    out << "mode: " << (o.exhaustive ? "exhaustive" : "random") << "\n";
    out << "seed: " << o.seed << "\n";
    out << "trials: " << st.trials << "\n";
    out << "failures: " << st.failures << "\n";
    if (st.first_failure) out << "first_failure_e: " << join(*st.first_failure) << "\n";
    return st.failures == 0 ? kExitOk : kExitInvalid;
}

int cmd_covering_radius(const Options& o, std::ostream& out) {
    const Matrix g = load_matrix(o.matrix);
    const CodeRole role = o.role == "generator" ? CodeRole::generator : CodeRole::parity;
    out << "covering_radius: " << covering_radius(g, role, o.budget) << "\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear codes for the function update problem"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--budget", o.budget, "enumeration budget")->capture_default_str();

    auto add_problem = [&](CLI::App* sub) {
        sub->add_option("--problem", o.problem, "ProblemFile (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
    };
    auto add_encoder = [&](CLI::App* sub) {
        sub->add_option("--encoder", o.encoder, "S as a MatrixFile")
            ->required()
            ->check(CLI::ExistingFile);
    };

    auto* construct_cmd = app.add_subcommand("construct", "build an encoder");
    add_problem(construct_cmd);
    construct_cmd->add_option("--method", o.method)
        ->check(CLI::IsMember({"auto", "naive", "drop-one", "t1-ecc", "subspace", "companion",
                               "oracle"}))
        ->capture_default_str();
    construct_cmd->add_option("--target-l", o.target_l, "length for the subspace method");
    construct_cmd->add_option("--s-out", o.s_out, "write S here instead of stdout");
    construct_cmd->add_option("--h-out", o.h_out, "write H here instead of stdout");

    auto* validate_cmd = app.add_subcommand("validate", "check an encoder");
    add_problem(validate_cmd);
    add_encoder(validate_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "codelength bounds and interference stats");
    add_problem(bounds_cmd);

    auto* optimal_cmd = app.add_subcommand("optimal", "exact optimal codelength");
    add_problem(optimal_cmd);
    optimal_cmd->add_option("--max-space", o.max_space, "largest q^m searched")
        ->capture_default_str();
    optimal_cmd->add_option("--nodes", o.nodes, "search node budget")->capture_default_str();
    optimal_cmd->add_option("--s-out", o.s_out, "write S here instead of stdout");

    auto* decode_cmd = app.add_subcommand("decode", "recover A(x+e)");
    add_problem(decode_cmd);
    add_encoder(decode_cmd);
    decode_cmd->add_option("--codeword", o.codeword)->required()->check(CLI::ExistingFile);
    decode_cmd->add_option("--stale", o.stale)->required()->check(CLI::ExistingFile);

    auto* fic_cmd = app.add_subcommand("fic-export", "reduce to functional index coding");
    add_problem(fic_cmd);
    fic_cmd->add_option("--out", o.out_file, "write the document here instead of stdout");

    auto* sim_cmd = app.add_subcommand("simulate", "random encode/decode round trips");
    add_problem(sim_cmd);
    add_encoder(sim_cmd);
    sim_cmd->add_option("--trials", o.trials)->capture_default_str();
    sim_cmd->add_option("--seed", o.seed)->capture_default_str();
    sim_cmd->add_flag("--exhaustive", o.exhaustive, "every e with wt(e) <= eps");

    auto* cov_cmd = app.add_subcommand("covering-radius", "largest coset leader weight");
    cov_cmd->add_option("--matrix", o.matrix)->required()->check(CLI::ExistingFile);
    cov_cmd->add_option("--role", o.role)
        ->check(CLI::IsMember({"generator", "parity"}))
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct_cmd) return cmd_construct(o, out);
        if (*validate_cmd) return cmd_validate(o, out);
        if (*bounds_cmd) return cmd_bounds(o, out);
        if (*optimal_cmd) return cmd_optimal(o, out);
        if (*decode_cmd) return cmd_decode(o, out);
        if (*fic_cmd) return cmd_fic_export(o, out);
        if (*sim_cmd) return cmd_simulate(o, out);
        if (*cov_cmd) return cmd_covering_radius(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace fupdate
