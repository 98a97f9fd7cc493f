// shiftlab: exact computations with monomial ideals, multigraded Betti
// numbers and homological shift ideals. See the repository README for the
// ideal grammar and report schemas.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "shiftlab/betti.hpp"
#include "shiftlab/borel.hpp"
#include "shiftlab/budget.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/linear_quotients.hpp"
#include "shiftlab/shift_algebra.hpp"

namespace {

using namespace shiftlab;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdictNo = 2;

struct CommonOptions {
    std::string expr;
    std::size_t index = 1;
    std::uint32_t kmax = 4;
    std::size_t vars = 0;
    std::uint32_t field_char = 32003;
    std::string format = "text";
    std::string out_path;
    std::uint64_t budget = 0;

    FieldSpec field() const { return FieldSpec::make(field_char); }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool wants_index, bool wants_kmax) {
    cmd->add_option("expr", opt.expr, "ideal expression, e.g. \"(x^2, y^2, x*y*z)\"")->required();
    if (wants_index) cmd->add_option("--i", opt.index, "homological index i");
    if (wants_kmax) cmd->add_option("--kmax", opt.kmax, "largest power k");
    cmd->add_option("--vars", opt.vars, "ambient variable count (default: inferred)");
    cmd->add_option("--field", opt.field_char, "coefficient field: 0 (rationals) or a prime");
    cmd->add_option("--format", opt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--budget", opt.budget, "override search/lattice caps");
}

void apply_budget(const CommonOptions& opt) {
    std::uint64_t budget = 0;
    if (const char* env = std::getenv("SHIFTLAB_BUDGET")) budget = std::strtoull(env, nullptr, 10);
    if (opt.budget != 0) budget = opt.budget;
    if (budget != 0) {
        resource_caps().lattice_cap = static_cast<std::size_t>(budget);
        resource_caps().search_nodes = budget;
        resource_caps().component_cap = static_cast<std::size_t>(budget);
    }
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out_path);
    if (!file) throw Error("cannot open output file: " + opt.out_path);
    file << text;
}

std::string header(const CommonOptions& opt) { return "# field " + opt.field().name() + "\n"; }

MonomialIdeal parse_target(const CommonOptions& opt) { return parse_ideal(opt.expr, opt.vars); }

int run_hs(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const MonomialIdeal result = hs(ideal, opt.index, opt.field());
    if (opt.format == "json") {
        nlohmann::json j = {{"field", opt.field().characteristic},
                            {"ideal", to_string(ideal)},
                            {"i", opt.index},
                            {"hs", to_string(result)}};
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, header(opt) + to_string(result) + "\n");
    }
    return kExitOk;
}

int run_betti(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    auto table = default_betti_cache().get_or_compute(ideal, opt.field());
    if (opt.format == "json") {
        emit(opt, to_json(*table).dump(2) + "\n");
    } else {
        std::string text = header(opt) + betti_pretty(*table) + "multigraded entries:\n";
        for (const BettiEntry& e : table->entries())
            text += "  i=" + std::to_string(e.index) + "  " + to_string(e.multidegree, ideal.vars()) +
                    "  dim " + std::to_string(e.dim) + "\n";
        emit(opt, text);
    }
    return kExitOk;
}

int run_socle(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const SocleResult s = socle(ideal);
    std::string text = header(opt) + to_string(s.ideal) + "\n";
    if (s.degenerate) text += "# degenerate: colon by the maximal ideal reached the unit ideal\n";
    emit(opt, text);
    return kExitOk;
}

int run_reg_or_depth(const CommonOptions& opt, bool want_reg) {
    const MonomialIdeal ideal = parse_target(opt);
    const GradedInvariants inv = graded_invariants(ideal, opt.field());
    const std::uint64_t value = want_reg ? inv.regularity : inv.depth_of_quotient;
    if (opt.format == "json") {
        nlohmann::json j = {{"field", opt.field().characteristic},
                            {"ideal", to_string(ideal)},
                            {"reg", inv.regularity},
                            {"pdim", inv.projective_dimension},
                            {"depth_of_quotient", inv.depth_of_quotient}};
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, header(opt) + std::to_string(value) + "\n");
    }
    return kExitOk;
}

int run_ass(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const auto primes = associated_primes(ideal);
    if (opt.format == "json") {
        nlohmann::json j = {{"ideal", to_string(ideal)}, {"ass", ass_to_json(primes, ideal.vars())}};
        emit(opt, j.dump(2) + "\n");
    } else {
        std::string text;
        for (const MonomialPrime& p : primes) text += to_string(p, ideal.vars()) + "\n";
        emit(opt, text);
    }
    return kExitOk;
}

int run_vnum(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const VNumberReport report = v_number(ideal);
    if (opt.format == "json") {
        emit(opt, to_json(report, ideal.vars()).dump(2) + "\n");
    } else {
        std::string text = "v = " + std::to_string(report.v) + "  witness " +
                           to_string(report.witness, ideal.vars()) + "\n";
        for (const auto& e : report.primes)
            text += "  " + to_string(e.prime, ideal.vars()) + ": v_p = " + std::to_string(e.v) +
                    ", witness " + to_string(e.witness, ideal.vars()) + "\n";
        emit(opt, text);
    }
    return kExitOk;
}

int run_power(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    emit(opt, to_string(power(ideal, opt.kmax)) + "\n");
    return kExitOk;
}

int run_lq(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const LinearQuotientsResult result = find_linear_quotients_order(ideal);
    if (result.verdict == LqVerdict::budget_exhausted) {
        std::cerr << "search budget exhausted; existence undecided\n";
        return kExitError;
    }
    if (result.verdict == LqVerdict::none_exists) {
        emit(opt, "no linear quotients order exists\n");
        return kExitVerdictNo;
    }
    if (opt.format == "json") {
        emit(opt, to_json(*result.order, ideal.vars()).dump(2) + "\n");
    } else {
        std::string text;
        for (std::size_t j = 0; j < result.order->order.size(); ++j) {
            text += to_string(result.order->order[j], ideal.vars()) + "  set {";
            const auto& s = result.order->sets[j];
            for (std::size_t t = 0; t < s.size(); ++t)
                text += (t ? " " : "") + std::to_string(s[t] + 1);
            text += "}\n";
        }
        emit(opt, text);
    }
    return kExitOk;
}

int run_linrel(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const bool verdict = is_linearly_related(ideal);
    if (opt.format == "json") {
        nlohmann::json j = {{"ideal", to_string(ideal)},
                            {"linearly_related", verdict},
                            {"generator_graph", to_json(generator_graph(ideal), ideal.vars())}};
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, std::string(verdict ? "linearly related" : "not linearly related") + "\n");
    }
    return verdict ? kExitOk : kExitVerdictNo;
}

int run_borel(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    // Parsing already applies B(...)/Bc(...); for a plain generator list
    // this closes it.
    const MonomialIdeal closed = borel_closure(ideal.vars(), ideal.gens());
    emit(opt, to_string(closed) + "\n");
    return kExitOk;
}

int run_sweep(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const PowerSweep s = sweep(ideal, opt.index, opt.kmax, opt.field());
    const StabilizationReport report = analyze(s);
    if (opt.format == "json")
        emit(opt, to_json(s, report).dump(2) + "\n");
    else if (opt.format == "csv")
        emit(opt, sweep_to_csv(s, report));
    else
        emit(opt, header(opt) + sweep_pretty(s, report));
    return kExitOk;
}

int run_golod(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const GolodCertificate cert = strongly_golod(ideal);
    std::string text = cert.strongly_golod ? "strongly Golod\n" : "not strongly Golod\n";
    if (!cert.strongly_golod && cert.witness)
        text += "witness " + to_string(*cert.witness, ideal.vars()) + " = (" +
                to_string(cert.witness_pair->first, ideal.vars()) + ")*(" +
                to_string(cert.witness_pair->second, ideal.vars()) + ") lies outside the ideal\n";
    emit(opt, text);
    return cert.strongly_golod ? kExitOk : kExitVerdictNo;
}

int run_hlp(const CommonOptions& opt) {
    const MonomialIdeal ideal = parse_target(opt);
    const HlpMatrix matrix = homological_linear_powers(ideal, opt.kmax, opt.field());
    if (opt.format == "json") {
        nlohmann::json j = to_json(matrix, ideal.vars());
        j["field"] = opt.field().characteristic;
        emit(opt, j.dump(2) + "\n");
    } else
        emit(opt, header(opt) + hlp_pretty(matrix, ideal.vars()));
    return matrix.holds_within_window ? kExitOk : kExitVerdictNo;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shiftlab: monomial ideals, Betti tables and homological shift ideals"};
    app.require_subcommand(1);

    struct Verb {
        const char* name;
        const char* help;
        bool wants_index;
        bool wants_kmax;
        int (*run)(const CommonOptions&);
    };
    const Verb verbs[] = {
        {"hs", "print HS_i(I)", true, false, run_hs},
        {"betti", "graded and multigraded Betti table", false, false, run_betti},
        {"socle", "socle of I", false, false, run_socle},
        {"reg", "Castelnuovo-Mumford regularity of I", false, false,
         [](const CommonOptions& o) { return run_reg_or_depth(o, true); }},
        {"depth", "depth of S/I", false, false,
         [](const CommonOptions& o) { return run_reg_or_depth(o, false); }},
        {"ass", "associated primes of S/I", false, false, run_ass},
        {"vnum", "v-number with witnesses", false, false, run_vnum},
        {"power", "I^k (k from --kmax)", false, true, run_power},
        {"lq", "search for a linear-quotients order", false, false, run_lq},
        {"linrel", "linearly-related check", false, false, run_linrel},
        {"borel", "Borel closure of the generators", false, false, run_borel},
        {"sweep", "power sweep of HS_i(I^k) with containments and fits", true, true, run_sweep},
        {"golod", "strongly-Golod check", false, false, run_golod},
        {"hlp", "homological-linear-powers matrix", false, true, run_hlp},
    };

    std::vector<CommonOptions> options(std::size(verbs));
    std::vector<const Verb*> chosen;
    for (std::size_t t = 0; t < std::size(verbs); ++t) {
        CLI::App* cmd = app.add_subcommand(verbs[t].name, verbs[t].help);
        add_common(cmd, options[t], verbs[t].wants_index, verbs[t].wants_kmax);
        cmd->callback([&, t] { chosen.push_back(&verbs[t]); });
    }

    CLI11_PARSE(app, argc, argv);

    const Verb* verb = chosen.front();
    const CommonOptions& opt = options[static_cast<std::size_t>(verb - verbs)];
    try {
        apply_budget(opt);
        return verb->run(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitError;
}
