#include "shiftlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "shiftlab/borel.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/graph.hpp"

namespace shiftlab {

namespace {

/// Recursive-descent parser over the ideal grammar. Generators are parsed
/// into sparse (index, exponent) lists first because the ambient variable
/// count is only known once the whole expression has been read.
class IdealParser {
public:
    explicit IdealParser(const std::string& text) : text_(text) {}

    MonomialIdeal parse(std::size_t vars_request) {
        skip_space();
        MonomialIdeal result = parse_ideal_expr(vars_request);
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing input after ideal expression", pos_);
        return result;
    }

private:
    using SparseMonomial = std::map<std::size_t, std::uint64_t>; // 0-based index -> exponent

    MonomialIdeal parse_ideal_expr(std::size_t vars_request) {
        if (try_word("Bc")) return parse_bc(vars_request);
        if (try_word("B")) return parse_borel(vars_request);
        if (try_word("E")) return graph_ideal(vars_request, /*cover=*/false);
        if (try_word("C")) return graph_ideal(vars_request, /*cover=*/true);
        return parse_plain(vars_request);
    }

    MonomialIdeal parse_plain(std::size_t vars_request) {
        expect('(');
        std::vector<SparseMonomial> gens;
        skip_space();
        if (peek() != ')') {
            gens.push_back(parse_generator());
            while (try_char(',')) gens.push_back(parse_generator());
        }
        expect(')');
        const std::size_t vars = std::max(vars_request, max_index_seen_);
        std::vector<Monomial> monomials;
        for (const SparseMonomial& g : gens) monomials.push_back(densify(g, vars));
        return MonomialIdeal::make(vars, std::move(monomials));
    }

    MonomialIdeal parse_borel(std::size_t vars_request) {
        expect('(');
        std::vector<SparseMonomial> gens;
        gens.push_back(parse_generator());
        while (try_char(',')) gens.push_back(parse_generator());
        expect(')');
        const std::size_t vars = std::max(vars_request, max_index_seen_);
        std::vector<Monomial> monomials;
        for (const SparseMonomial& g : gens) monomials.push_back(densify(g, vars));
        return borel_closure(vars, monomials);
    }

    MonomialIdeal parse_bc(std::size_t vars_request) {
        expect('(');
        SparseMonomial u = parse_generator();
        expect(';');
        std::vector<Exponent> bounds;
        bounds.push_back(parse_uint("bound"));
        while (try_char(',')) bounds.push_back(parse_uint("bound"));
        expect(')');
        if (max_index_seen_ > bounds.size())
            throw ParseError("generator uses a variable beyond the bound vector", pos_);
        if (vars_request != 0 && vars_request != bounds.size())
            throw InputError("the bound vector fixes the ambient variable count");
        const Monomial monomial = densify(u, bounds.size());
        if (!is_c_bounded(monomial, bounds))
            throw InputError("Bc generator violates its bound vector");
        return c_bounded_borel_closure(monomial, bounds);
    }

    MonomialIdeal graph_ideal(std::size_t vars_request, bool cover) {
        expect('(');
        const std::size_t n = parse_uint("vertex count");
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        skip_space();
        if (try_char(';')) {
            skip_space();
            if (peek() != ')') {
                edges.push_back(parse_edge());
                while (try_char(',')) edges.push_back(parse_edge());
            }
        }
        expect(')');
        const Graph g = Graph::make(std::max(n, vars_request), std::move(edges));
        return cover ? cover_ideal(g) : edge_ideal(g);
    }

    std::pair<std::size_t, std::size_t> parse_edge() {
        const std::size_t a = parse_uint("vertex");
        expect('-');
        const std::size_t b = parse_uint("vertex");
        if (a == 0 || b == 0) throw ParseError("vertices are numbered from 1", pos_);
        return {a - 1, b - 1};
    }

    SparseMonomial parse_generator() {
        SparseMonomial m;
        parse_factor(m);
        while (try_char('*')) parse_factor(m);
        return m;
    }

    void parse_factor(SparseMonomial& m) {
        skip_space();
        if (peek() == '1') {
            ++pos_;
            return; // the factor 1 contributes nothing
        }
        const std::size_t index = parse_variable();
        std::uint64_t exponent = 1;
        if (try_char('^')) exponent = parse_uint("exponent");
        m[index] += exponent;
        max_index_seen_ = std::max(max_index_seen_, index + 1);
    }

    std::size_t parse_variable() {
        skip_space();
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const std::size_t idx = parse_uint("variable index");
                if (idx == 0) throw ParseError("variables are numbered from 1", pos_);
                return idx - 1;
            }
            return 0;
        }
        if (c == 'y' || c == 'z' || c == 'w') {
            ++pos_;
            return c == 'y' ? 1 : c == 'z' ? 2 : 3;
        }
        throw ParseError("expected a variable", pos_);
    }

    std::size_t parse_uint(const char* what) {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(std::string("expected ") + what, pos_);
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > std::numeric_limits<Exponent>::max())
                throw ParseError("integer literal too large", pos_);
            ++pos_;
        }
        return static_cast<std::size_t>(value);
    }

    Monomial densify(const SparseMonomial& sparse, std::size_t vars) {
        std::vector<Exponent> e(vars, 0);
        for (const auto& [index, exponent] : sparse) {
            const std::uint64_t total = e[index] + exponent;
            if (total > std::numeric_limits<Exponent>::max())
                throw OverflowError("exponent overflow in parsed generator");
            e[index] = static_cast<Exponent>(total);
        }
        return Monomial(std::move(e));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool try_char(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!try_char(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    /// Matches a keyword only when followed by '('; keeps plain generator
    /// text like "x" or "w^2" unambiguous.
    bool try_word(const std::string& word) {
        skip_space();
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        std::size_t after = pos_ + word.size();
        while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
        if (after >= text_.size() || text_[after] != '(') return false;
        pos_ += word.size();
        return true;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t max_index_seen_ = 0;
};

std::string variable_name(std::size_t index, std::size_t vars) {
    static const char* aliases[] = {"x", "y", "z"};
    if (vars <= 3) return aliases[index];
    return "x" + std::to_string(index + 1);
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text, std::size_t vars) {
    return IdealParser(text).parse(vars);
}

std::string to_string(const Monomial& m, std::size_t vars_for_alias) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(i, vars_for_alias);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
        if (i) out += ", ";
        out += to_string(ideal.gens()[i], ideal.vars());
    }
    out += ')';
    return out;
}

std::string to_string(const MonomialPrime& p, std::size_t vars_for_alias) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.variables.size(); ++i) {
        if (i) out += ", ";
        out += variable_name(p.variables[i], vars_for_alias);
    }
    out += ')';
    return out;
}

nlohmann::json to_json(const BettiTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const BettiEntry& e : table.entries()) {
        entries.push_back({{"i", e.index},
                           {"multidegree", e.multidegree.exponents()},
                           {"dim", e.dim}});
    }
    return {{"field", table.field().characteristic}, {"entries", entries}};
}

std::string betti_pretty(const BettiTable& table) {
    // Graded display: columns are homological indices, rows are j - i.
    const auto graded = table.graded();
    if (graded.empty()) return "(empty table)\n";
    std::size_t max_i = 0;
    std::uint64_t min_row = std::numeric_limits<std::uint64_t>::max(), max_row = 0;
    for (const auto& [key, dim] : graded) {
        max_i = std::max(max_i, key.first);
        min_row = std::min(min_row, key.second - key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    std::ostringstream out;
    out << "       ";
    for (std::size_t i = 0; i <= max_i; ++i) out << i << "\t";
    out << "\n";
    std::vector<std::size_t> totals(max_i + 1, 0);
    std::ostringstream body;
    for (std::uint64_t row = min_row; row <= max_row; ++row) {
        body << row << ":     ";
        for (std::size_t i = 0; i <= max_i; ++i) {
            auto it = graded.find({i, row + i});
            if (it == graded.end())
                body << ".\t";
            else {
                body << it->second << "\t";
                totals[i] += it->second;
            }
        }
        body << "\n";
    }
    out << "total: ";
    for (std::size_t t : totals) out << t << "\t";
    out << "\n" << body.str();
    return out.str();
}

nlohmann::json to_json(const VNumberReport& report, std::size_t vars) {
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& entry : report.primes) {
        nlohmann::json p = nlohmann::json::array();
        for (std::size_t i : entry.prime.variables) p.push_back(i + 1);
        primes.push_back({{"prime", p},
                          {"v", entry.v},
                          {"witness", to_string(entry.witness, vars)}});
    }
    return {{"v", report.v}, {"witness", to_string(report.witness, vars)}, {"primes", primes}};
}

nlohmann::json ass_to_json(const std::vector<MonomialPrime>& primes, std::size_t vars) {
    (void)vars;
    nlohmann::json out = nlohmann::json::array();
    for (const MonomialPrime& p : primes) {
        nlohmann::json vars_json = nlohmann::json::array();
        for (std::size_t i : p.variables) vars_json.push_back(i + 1);
        out.push_back(vars_json);
    }
    return out;
}

nlohmann::json to_json(const AdmissibleOrder& order, std::size_t vars) {
    nlohmann::json gens = nlohmann::json::array();
    nlohmann::json sets = nlohmann::json::array();
    for (std::size_t j = 0; j < order.order.size(); ++j) {
        gens.push_back(to_string(order.order[j], vars));
        nlohmann::json s = nlohmann::json::array();
        for (std::size_t i : order.sets[j]) s.push_back(i + 1);
        sets.push_back(s);
    }
    return {{"order", gens}, {"sets", sets}};
}

nlohmann::json to_json(const GeneratorGraph& graph, std::size_t vars) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const Monomial& v : graph.vertices) vertices.push_back(to_string(v, vars));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
    return {{"vertices", vertices}, {"edges", edges}};
}

namespace {

std::string ass_compact(const std::vector<MonomialPrime>& primes, std::size_t vars) {
    std::string out;
    for (std::size_t t = 0; t < primes.size(); ++t) {
        if (t) out += '|';
        out += '{';
        for (std::size_t i = 0; i < primes[t].variables.size(); ++i) {
            if (i) out += ' ';
            out += variable_name(primes[t].variables[i], vars);
        }
        out += '}';
    }
    return out;
}

const ContainmentVerdict* verdict_at(const StabilizationReport& report, std::uint32_t k) {
    for (const ContainmentVerdict& v : report.containments)
        if (v.k == k) return &v;
    return nullptr;
}

} // namespace

nlohmann::json to_json(const PowerSweep& sweep, const StabilizationReport& report) {
    const std::size_t vars = sweep.base.vars();
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRecord& r : sweep.records) {
        nlohmann::json row = {{"k", r.k},
                              {"power_gens", r.power.gens().size()},
                              {"hs_gens", r.shift.gens().size()},
                              {"hs", to_string(r.shift)},
                              {"power_linear_resolution", r.power_linear_resolution}};
        if (!r.shift_is_zero) {
            row["reg"] = r.invariants->regularity;
            row["depth"] = r.invariants->depth_of_quotient;
            row["v"] = r.vnum->v;
            row["ass"] = ass_to_json(r.ass, vars);
            row["hs_linear_resolution"] = *r.shift_linear_resolution;
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json containments = nlohmann::json::array();
    for (const ContainmentVerdict& v : report.containments) {
        nlohmann::json c = {{"k", v.k}, {"forward", v.forward}, {"backward", v.backward},
                            {"equal", v.equal}};
        if (v.forward_witness) c["forward_witness"] = to_string(*v.forward_witness, vars);
        if (v.backward_witness) c["backward_witness"] = to_string(*v.backward_witness, vars);
        containments.push_back(std::move(c));
    }
    auto fit_json = [](const LinearFit& fit) -> nlohmann::json {
        if (!fit.stabilized) return {{"verdict", "not stabilized within window"}};
        return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"onset", fit.onset}};
    };
    nlohmann::json out = {{"base", to_string(sweep.base)},
                          {"i", sweep.index},
                          {"kmax", sweep.kmax},
                          {"field", sweep.field.characteristic},
                          {"rows", rows},
                          {"containments", containments},
                          {"reg_fit", fit_json(report.reg_fit)},
                          {"v_fit", fit_json(report.v_fit)}};
    if (report.depth.stabilized)
        out["depth_stabilization"] = {{"value", report.depth.value}, {"onset", report.depth.onset}};
    else
        out["depth_stabilization"] = {{"verdict", "not stabilized within window"}};
    if (report.ass.stabilized)
        out["ass_stabilization"] = {{"value", ass_to_json(report.ass.value, vars)},
                                    {"onset", report.ass.onset}};
    else
        out["ass_stabilization"] = {{"verdict", "not stabilized within window"}};
    if (sweep.truncated_at) out["truncated_at"] = *sweep.truncated_at;
    if (report.equality_onset) out["equality_onset"] = *report.equality_onset;
    out["degenerate"] = report.degenerate;
    return out;
}

std::string sweep_to_csv(const PowerSweep& sweep, const StabilizationReport& report) {
    const std::size_t vars = sweep.base.vars();
    std::ostringstream out;
    out << "k,power_gens,hs_gens,reg,depth,v,ass,power_linres,hs_linres,forward,backward\n";
    for (const SweepRecord& r : sweep.records) {
        out << r.k << ',' << r.power.gens().size() << ',' << r.shift.gens().size() << ',';
        if (r.shift_is_zero)
            out << ",,,";
        else
            out << r.invariants->regularity << ',' << r.invariants->depth_of_quotient << ','
                << r.vnum->v << ',';
        out << ass_compact(r.ass, vars) << ',';
        out << (r.power_linear_resolution ? "yes" : "no") << ',';
        if (r.shift_is_zero)
            out << "";
        else
            out << (*r.shift_linear_resolution ? "yes" : "no");
        const ContainmentVerdict* v = verdict_at(report, r.k);
        out << ',' << (v ? (v->forward ? "ok" : "FAIL") : "");
        out << ',' << (v ? (v->backward ? "ok" : "FAIL") : "");
        out << '\n';
    }
    return out.str();
}

std::string sweep_pretty(const PowerSweep& sweep, const StabilizationReport& report) {
    const std::size_t vars = sweep.base.vars();
    std::ostringstream out;
    out << "sweep of " << to_string(sweep.base) << "  i=" << sweep.index
        << "  kmax=" << sweep.kmax << "  field=" << sweep.field.name() << "\n";
    for (const SweepRecord& r : sweep.records) {
        out << "k=" << r.k << "  |G(I^k)|=" << r.power.gens().size()
            << "  |G(HS)|=" << r.shift.gens().size();
        if (!r.shift_is_zero) {
            out << "  reg=" << r.invariants->regularity
                << "  depth=" << r.invariants->depth_of_quotient << "  v=" << r.vnum->v
                << "  Ass=" << ass_compact(r.ass, vars)
                << "  linres=" << (*r.shift_linear_resolution ? "yes" : "no");
        } else {
            out << "  HS=0";
        }
        const ContainmentVerdict* v = verdict_at(report, r.k);
        if (v)
            out << "  I*HS(k)<=HS(k+1): " << (v->forward ? "ok" : "FAIL")
                << "  HS(k+1)<=I*HS(k): " << (v->backward ? "ok" : "FAIL");
        if (v && !v->forward && v->forward_witness)
            out << "  witness=" << to_string(*v->forward_witness, vars);
        out << "\n";
    }
    auto fit_line = [&](const char* name, const LinearFit& fit) {
        out << name << ": ";
        if (fit.stabilized)
            out << "slope " << fit.slope << ", intercept " << fit.intercept << ", onset k="
                << fit.onset << "\n";
        else
            out << "not stabilized within window\n";
    };
    if (!report.degenerate) {
        fit_line("reg fit", report.reg_fit);
        fit_line("v fit", report.v_fit);
        out << "depth: ";
        if (report.depth.stabilized)
            out << "stable at " << report.depth.value << " from k=" << report.depth.onset << "\n";
        else
            out << "not stabilized within window\n";
        out << "Ass: ";
        if (report.ass.stabilized)
            out << "stable at " << ass_compact(report.ass.value, vars)
                << " from k=" << report.ass.onset << "\n";
        else
            out << "not stabilized within window\n";
    } else {
        out << "all shift ideals vanish over the window\n";
    }
    if (report.equality_onset)
        out << "equality HS(I^{k+1}) = I*HS(I^k) from k=" << *report.equality_onset << "\n";
    if (sweep.truncated_at) out << "truncated at k=" << *sweep.truncated_at << " (resource cap)\n";
    return out.str();
}

nlohmann::json to_json(const HlpMatrix& matrix, std::size_t vars) {
    (void)vars;
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint32_t k = 1; k <= matrix.kmax && k <= matrix.cells.size(); ++k) {
        nlohmann::json cells = nlohmann::json::array();
        for (const LinResCell cell : matrix.cells[k - 1])
            cells.push_back(cell == LinResCell::linear ? "linear"
                            : cell == LinResCell::zero ? "zero"
                                                       : "not_linear");
        rows.push_back({{"k", k}, {"power_linear", static_cast<bool>(matrix.power_linear[k - 1])},
                        {"hs", cells}});
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& [i, k] : matrix.failures) failures.push_back({{"i", i}, {"k", k}});
    nlohmann::json out = {{"kmax", matrix.kmax},
                          {"rows", rows},
                          {"holds_within_window", matrix.holds_within_window},
                          {"failures", failures}};
    if (matrix.eventual_onset) out["eventual_onset"] = *matrix.eventual_onset;
    return out;
}

std::string hlp_pretty(const HlpMatrix& matrix, std::size_t vars) {
    std::ostringstream out;
    out << "k\\i  ";
    for (std::size_t i = 0; i < vars; ++i) out << i << "       ";
    out << "\n";
    for (std::size_t k = 1; k <= matrix.cells.size(); ++k) {
        out << k << "    ";
        for (const LinResCell cell : matrix.cells[k - 1])
            out << (cell == LinResCell::linear ? "linear  "
                    : cell == LinResCell::zero ? "zero    "
                                               : "FAIL    ");
        out << "\n";
    }
    if (matrix.holds_within_window)
        out << "homological linear powers within window\n";
    else if (matrix.eventual_onset)
        out << "eventually homological linear powers within window (onset k=" << *matrix.eventual_onset
            << ")\n";
    else {
        out << "fails at";
        for (const auto& [i, k] : matrix.failures) out << " (i=" << i << ", k=" << k << ")";
        out << "\n";
    }
    return out.str();
}

} // namespace shiftlab
