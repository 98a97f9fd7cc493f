#include "shiftlab/shift_algebra.hpp"

#include <algorithm>

#include "shiftlab/errors.hpp"

namespace shiftlab {

PowerSweep sweep(const MonomialIdeal& ideal, std::size_t index, std::uint32_t kmax,
                 const FieldSpec& field) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError("power sweeps need a proper nonzero ideal");
    if (kmax < 2) throw InputError("kmax must be at least 2");

    PowerSweep result{ideal, index, kmax, field, {}, std::nullopt};
    MonomialIdeal current = ideal;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        if (k > 1) current = multiply(current, ideal);
        SweepRecord record;
        record.k = k;
        record.power = current;
        try {
            record.power_linear_resolution = has_linear_resolution(current, field);
            record.shift = hs(current, index, field);
            record.shift_is_zero = record.shift.is_zero();
            if (!record.shift_is_zero) {
                record.invariants = graded_invariants(record.shift, field);
                const Shape s = shape(record.shift);
                record.shift_linear_resolution =
                    s.equigenerated && record.invariants->regularity == s.alpha;
                record.ass = associated_primes(record.shift);
                record.vnum = v_number(record.shift);
            }
        } catch (const ResourceLimitError&) {
            result.truncated_at = k;
            break;
        }
        result.records.push_back(std::move(record));
    }
    return result;
}

StabilizationReport check_containments(const PowerSweep& sweep) {
    StabilizationReport report;
    report.degenerate = std::all_of(sweep.records.begin(), sweep.records.end(),
                                    [](const SweepRecord& r) { return r.shift_is_zero; });
    for (std::size_t t = 0; t + 1 < sweep.records.size(); ++t) {
        const SweepRecord& low = sweep.records[t];
        const SweepRecord& high = sweep.records[t + 1];
        ContainmentVerdict verdict;
        verdict.k = low.k;
        const MonomialIdeal product = multiply(sweep.base, low.shift);
        verdict.forward = true;
        for (const Monomial& g : product.gens())
            if (!high.shift.contains(g)) {
                verdict.forward = false;
                verdict.forward_witness = g;
                break;
            }
        verdict.backward = true;
        for (const Monomial& g : high.shift.gens())
            if (!product.contains(g)) {
                verdict.backward = false;
                verdict.backward_witness = g;
                break;
            }
        verdict.equal = verdict.forward && verdict.backward;
        report.containments.push_back(std::move(verdict));
    }
    // Smallest k from which equality holds through the whole window.
    for (std::size_t t = 0; t < report.containments.size(); ++t) {
        bool all_equal = true;
        for (std::size_t s = t; s < report.containments.size(); ++s)
            all_equal = all_equal && report.containments[s].equal;
        if (all_equal) {
            report.equality_onset = report.containments[t].k;
            break;
        }
    }
    return report;
}

namespace {

/// Exact affine fit over the longest trailing run of (k, value) points;
/// stabilized only when at least three points lie on the line.
LinearFit fit_tail(const std::vector<std::pair<std::uint32_t, std::int64_t>>& points) {
    LinearFit fit;
    if (points.size() < 2) return fit;
    const auto& [k2, v2] = points[points.size() - 1];
    const auto& [k1, v1] = points[points.size() - 2];
    if (k2 != k1 + 1) return fit;
    fit.slope = v2 - v1;
    fit.intercept = v2 - fit.slope * static_cast<std::int64_t>(k2);
    std::size_t start = points.size() - 2;
    while (start > 0) {
        const auto& [k0, v0] = points[start - 1];
        if (k0 + 1 != points[start].first) break;
        if (v0 != fit.slope * static_cast<std::int64_t>(k0) + fit.intercept) break;
        --start;
    }
    fit.onset = points[start].first;
    fit.stabilized = points.size() - start >= 3;
    return fit;
}

template <typename Value, typename Get>
StableValue<Value> stable_tail(const std::vector<SweepRecord>& records, Get get) {
    StableValue<Value> stable;
    std::vector<std::pair<std::uint32_t, Value>> points;
    for (const SweepRecord& r : records)
        if (!r.shift_is_zero) points.emplace_back(r.k, get(r));
    if (points.empty()) return stable;
    stable.value = points.back().second;
    std::size_t start = points.size() - 1;
    while (start > 0 && points[start - 1].first + 1 == points[start].first &&
           points[start - 1].second == stable.value)
        --start;
    stable.onset = points[start].first;
    stable.stabilized = points.size() - start >= 3;
    return stable;
}

} // namespace

StabilizationReport fit_linear_laws(const PowerSweep& sweep) {
    StabilizationReport report;
    report.degenerate = std::all_of(sweep.records.begin(), sweep.records.end(),
                                    [](const SweepRecord& r) { return r.shift_is_zero; });
    if (report.degenerate) return report;

    std::vector<std::pair<std::uint32_t, std::int64_t>> reg_points, v_points;
    for (const SweepRecord& r : sweep.records) {
        if (r.shift_is_zero) continue;
        reg_points.emplace_back(r.k, static_cast<std::int64_t>(r.invariants->regularity));
        v_points.emplace_back(r.k, static_cast<std::int64_t>(r.vnum->v));
    }
    report.reg_fit = fit_tail(reg_points);
    report.v_fit = fit_tail(v_points);
    report.depth = stable_tail<std::size_t>(
        sweep.records, [](const SweepRecord& r) { return r.invariants->depth_of_quotient; });
    report.ass = stable_tail<std::vector<MonomialPrime>>(
        sweep.records, [](const SweepRecord& r) { return r.ass; });
    return report;
}

StabilizationReport analyze(const PowerSweep& sweep) {
    StabilizationReport report = fit_linear_laws(sweep);
    StabilizationReport containments = check_containments(sweep);
    report.containments = std::move(containments.containments);
    report.equality_onset = containments.equality_onset;
    return report;
}

std::vector<SocleProfileRow> socle_degree_profile(const MonomialIdeal& ideal, std::uint32_t kmax) {
    const Shape s = shape(ideal);
    if (!s.equigenerated)
        throw UndefinedInputError("socle degree profiles need an equigenerated ideal");
    std::vector<SocleProfileRow> rows;
    MonomialIdeal current = ideal;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        if (k > 1) current = multiply(current, ideal);
        SocleProfileRow row;
        row.k = k;
        const SocleResult soc = socle(current);
        for (const Monomial& g : soc.ideal.gens()) row.degrees.push_back(g.degree());
        std::sort(row.degrees.begin(), row.degrees.end());
        // Vacuously true for a zero socle: every generator has the degree.
        const std::uint64_t target = s.alpha * k - 1;
        row.equigenerated_at_dk_minus_1 = std::all_of(
            row.degrees.begin(), row.degrees.end(),
            [target](std::uint64_t d) { return d == target; });
        rows.push_back(std::move(row));
    }
    return rows;
}

MonomialIdeal hs_top_via_socle(const MonomialIdeal& ideal, std::uint32_t k) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError("hs_top_via_socle needs a proper nonzero ideal");
    const MonomialIdeal pow = power(ideal, k);
    const SocleResult soc = socle(pow);
    Monomial square_free_all = Monomial::one(ideal.vars());
    for (std::size_t i = 0; i < ideal.vars(); ++i)
        square_free_all = square_free_all.times(Monomial::variable(ideal.vars(), i));
    std::vector<Monomial> gens;
    for (const Monomial& g : soc.ideal.gens()) gens.push_back(g.times(square_free_all));
    return MonomialIdeal::make(ideal.vars(), std::move(gens));
}

GolodCertificate strongly_golod(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError("the strongly-Golod test needs a proper nonzero ideal");
    std::vector<Monomial> derivative_gens;
    for (const Monomial& g : ideal.gens())
        for (std::size_t i : g.support()) {
            std::vector<Exponent> e = g.exponents();
            --e[i];
            derivative_gens.emplace_back(std::move(e));
        }
    GolodCertificate cert;
    cert.derivative = MonomialIdeal::make(ideal.vars(), std::move(derivative_gens));
    const auto& d = cert.derivative.gens();
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a; b < d.size(); ++b) {
            const Monomial product = d[a].times(d[b]);
            if (!ideal.contains(product)) {
                cert.strongly_golod = false;
                cert.witness = product;
                cert.witness_pair = std::make_pair(d[a], d[b]);
                return cert;
            }
        }
    cert.strongly_golod = true;
    return cert;
}

HlpMatrix homological_linear_powers(const MonomialIdeal& ideal, std::uint32_t kmax,
                                    const FieldSpec& field) {
    const Shape s = shape(ideal);
    if (!s.equigenerated)
        throw UndefinedInputError("homological linear powers need an equigenerated ideal");

    HlpMatrix matrix;
    matrix.kmax = kmax;
    MonomialIdeal current = ideal;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        if (k > 1) current = multiply(current, ideal);
        matrix.power_linear.push_back(has_linear_resolution(current, field));
        std::vector<LinResCell> row;
        for (std::size_t i = 0; i < ideal.vars(); ++i) {
            const MonomialIdeal shift = hs(current, i, field);
            if (shift.is_zero()) {
                row.push_back(LinResCell::zero);
                continue;
            }
            const bool linear = has_linear_resolution(shift, field);
            row.push_back(linear ? LinResCell::linear : LinResCell::not_linear);
            if (!linear) matrix.failures.emplace_back(i, k);
        }
        matrix.cells.push_back(std::move(row));
    }

    auto row_linear = [&](std::uint32_t k) {
        if (!matrix.power_linear[k - 1]) return false;
        for (const LinResCell cell : matrix.cells[k - 1])
            if (cell == LinResCell::not_linear) return false;
        return true;
    };
    matrix.holds_within_window = true;
    for (std::uint32_t k = 1; k <= kmax; ++k)
        matrix.holds_within_window = matrix.holds_within_window && row_linear(k);
    for (std::uint32_t onset = 1; onset <= kmax; ++onset) {
        bool all = true;
        for (std::uint32_t k = onset; k <= kmax; ++k) all = all && row_linear(k);
        if (all) {
            matrix.eventual_onset = onset;
            break;
        }
    }
    return matrix;
}

} // namespace shiftlab
