// spindual: enumeration, tables, duality and verification from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spindual/serialize.hpp"

using namespace spindual;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    int rank = 0;
    std::string pq, lambda, chi, theta, grading;
    std::string format = "json";
    std::string output, config;
    int threads = 0;
    int rank_bound = kDefaultRankBound;
    bool classes = false;
    bool verbose = false;
};

RealForm parse_pq(const std::string& s) {
    const auto k = s.find(',');
    if (k == std::string::npos) throw UsageError("--pq expects p,q");
    try {
        const RealForm f{std::stoi(s.substr(0, k)), std::stoi(s.substr(k + 1))};
        if (f.p <= f.q || f.q < 0 || (f.p + f.q) % 2 == 0) throw UsageError("--pq needs p > q >= 0 with p + q odd");
        return f;
    } catch (const std::logic_error&) {
        throw UsageError("--pq expects two integers");
    }
}

int rank_of(const RealForm& f) { return (f.p + f.q - 1) / 2; }

std::optional<int> parse_chi(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "plus" || s == "+" || s == "1") return 1;
    if (s == "minus" || s == "-" || s == "-1") return -1;
    throw UsageError("--chi expects plus or minus");
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "tex") return Format::tex;
    throw UsageError("--format expects json, csv or tex");
}

InfChar lambda_for(const Options& o, int n) {
    if (o.lambda.empty()) throw UsageError("--lambda is required");
    InfChar l;
    try {
        l = parse_inf_char(o.lambda);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
    if (l.rank() != n) throw UsageError("--lambda has the wrong number of coordinates for this real form");
    return l;
}

void check_rank(const Options& o, int n) {
    if (n < 1 || n > o.rank_bound) throw UsageError("rank outside 1.." + std::to_string(o.rank_bound));
}

Setting setting_for(const Options& o, InfChar& l) {
    const auto form = parse_pq(o.pq);
    check_rank(o, rank_of(form));
    l = lambda_for(o, rank_of(form));
    return {form, family(l)};
}

void write(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.output);
    out << text;
    if (!out) throw UsageError("cannot write " + o.output);
}

void apply_config(Options& o, bool threads_given, bool bound_given) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw UsageError("cannot read config " + o.config);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    if (!threads_given && cfg.contains("threads")) o.threads = cfg["threads"].get<int>();
    if (!bound_given && cfg.contains("rank_bound")) o.rank_bound = cfg["rank_bound"].get<int>();
}

int execute(const Options& o) {
    const auto fmt = parse_format(o.format);
    const int threads = resolve_threads(o.threads);

    if (o.command == "involutions") {
        check_rank(o, o.rank);
        write(o, emit(o.classes ? class_table(o.rank) : involution_table(o.rank), fmt));
        return 0;
    }
    if (o.command == "fiber") {
        const auto form = parse_pq(o.pq);
        const int n = rank_of(form);
        check_rank(o, n);
        Involution t;
        try {
            t = o.theta.empty() || o.theta == "identity" ? SignedPerm::identity(n) : parse_diagram(o.theta);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--theta: ") + e.what());
        }
        if (t.rank() != n) throw UsageError("--theta has the wrong rank");
        ImGrading e;
        try {
            e = o.grading.empty() ? ImGrading{} : parse_grading(t, o.grading);
        } catch (const std::invalid_argument& err) {
            throw UsageError(std::string("--grading: ") + err.what());
        }
        if (real_form(t, e) != form)
            throw UsageError("grading belongs to " + to_string(real_form(t, e)) + ", not " + to_string(form));
        write(o, emit(fiber_table(enumerate_fiber(t, e)), fmt));
        return 0;
    }
    if (o.command == "params" || o.command == "dualize") {
        InfChar l;
        const auto s = setting_for(o, l);
        auto ps = enumerate_params(s, s.fam.index_of(l), parse_chi(o.chi));
        if (!o.theta.empty()) {
            const auto t = parse_diagram(o.theta);
            std::erase_if(ps, [&](const GenuineParam& g) { return !(g.theta == t); });
        }
        if (o.command == "dualize" && s.rank() % 2) throw UsageError("duality needs even rank");
        write(o, emit(o.command == "params" ? params_table(ps, s) : dualize_table(ps, s), fmt));
        return 0;
    }
    if (o.command == "block") {
        InfChar l;
        const auto s = setting_for(o, l);
        if (s.rank() % 2) throw UsageError("blocks need even rank");
        const auto chi = parse_chi(o.chi).value_or(1);
        Block b;
        try {
            b = build_block(s.form, l, chi);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        write(o, emit(block_table(b), fmt));
        return 0;
    }
    if (o.command == "verify") {
        if (o.rank) check_rank(o, o.rank);
        const auto results = o.rank ? rank_suites(o.rank, threads) : acceptance_suites(threads);
        bool ok = true;
        for (const auto& r : results) {
            ok = ok && r.pass();
            if (o.verbose)
                std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.title << " (" << static_cast<long long>(r.ms) << " ms)\n";
        }
        write(o, emit(verify_table(results), fmt));
        return ok ? 0 : 1;
    }
    throw UsageError("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genuine parameters and duality for even-rank spin double covers"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "json, csv or tex")->check(CLI::IsMember({"json", "csv", "tex"}));
    app.add_option("-o,--output", o.output, "write to a file instead of stdout");
    app.add_option("--config", o.config, "JSON config with threads and rank_bound");
    auto* threads_opt = app.add_option("--threads", o.threads, "worker threads (SPINDUAL_THREADS overrides)")->check(CLI::PositiveNumber);
    auto* bound_opt = app.add_option("--rank-bound", o.rank_bound, "largest accepted rank")->check(CLI::PositiveNumber);
    app.add_flag("-v,--verbose", o.verbose, "timings on stderr");

    const auto lambda_check = CLI::Validator(
        [](std::string& s) -> std::string {
            try {
                parse_inf_char(s);
            } catch (const std::invalid_argument& e) {
                return e.what();
            }
            return {};
        },
        "HALF-INTEGERS");
    const auto chi_check = CLI::IsMember({"plus", "minus", "+", "-"});

    auto* inv = app.add_subcommand("involutions", "list involutions or conjugacy classes");
    inv->add_option("--rank", o.rank, "rank n")->required()->check(CLI::PositiveNumber);
    inv->add_flag("--classes", o.classes, "one row per conjugacy class");

    auto* fib = app.add_subcommand("fiber", "orbits over one involution and grading");
    fib->add_option("--pq", o.pq, "real form p,q")->required();
    fib->add_option("--theta", o.theta, "diagram or 'identity'");
    fib->add_option("--grading", o.grading, "grading such as ++nn");

    for (const char* name : {"params", "dualize", "block"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "params"    ? "enumerate genuine parameters"
                                             : std::string(name) == "dualize" ? "images under psi and the dual group"
                                                                             : "block structure table");
        sub->add_option("--pq", o.pq, "real form p,q")->required();
        sub->add_option("--lambda", o.lambda, "infinitesimal character, e.g. 3/2,1")->required()->check(lambda_check);
        sub->add_option("--chi", o.chi, "central character plus or minus")->check(chi_check);
        if (std::string(name) != "block") sub->add_option("--theta", o.theta, "restrict to one involution");
    }

    auto* ver = app.add_subcommand("verify", "run the invariant and fixture suites");
    ver->add_option("--rank", o.rank, "sweep one rank instead of the acceptance ranks")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        apply_config(o, threads_opt->count() > 0, bound_opt->count() > 0);
        return execute(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
