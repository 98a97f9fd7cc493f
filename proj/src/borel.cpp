#include "shiftlab/borel.hpp"

#include <algorithm>
#include <set>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

/// Orbit of the given monomials under the exchange moves x_i (u / x_j),
/// i < j, optionally restricted to c-bounded results.
std::vector<Monomial> exchange_orbit(std::size_t vars, const std::vector<Monomial>& start,
                                     const BoundVector* bounds) {
    std::set<std::vector<Exponent>> seen;
    std::vector<Monomial> queue;
    for (const Monomial& u : start) {
        if (u.vars() != vars) throw AmbientMismatchError("generator length mismatch");
        if (seen.insert(u.exponents()).second) queue.push_back(u);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Monomial u = queue[head];
        for (std::size_t j : u.support()) {
            for (std::size_t i = 0; i < j; ++i) {
                std::vector<Exponent> e = u.exponents();
                --e[j];
                ++e[i];
                if (bounds && e[i] > (*bounds)[i]) continue;
                if (seen.insert(e).second) queue.emplace_back(std::move(e));
            }
        }
    }
    return queue;
}

void sort_by_degree(std::vector<Monomial>& seq) {
    std::stable_sort(seq.begin(), seq.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return canonical_less(a, b);
    });
}

} // namespace

bool is_strongly_stable(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw UndefinedInputError("strong stability of the zero ideal is undefined");
    for (const Monomial& u : ideal.gens())
        for (std::size_t j : u.support())
            for (std::size_t i = 0; i < j; ++i) {
                std::vector<Exponent> e = u.exponents();
                --e[j];
                ++e[i];
                if (!ideal.contains(Monomial(std::move(e)))) return false;
            }
    return true;
}

MonomialIdeal borel_closure(std::size_t vars, const std::vector<Monomial>& borel_gens) {
    if (borel_gens.empty()) throw InputError("borel closure of an empty list is undefined");
    return MonomialIdeal::make(vars, exchange_orbit(vars, borel_gens, nullptr));
}

bool is_c_bounded(const Monomial& u, const BoundVector& bounds) {
    if (u.vars() != bounds.size())
        throw AmbientMismatchError("bound vector length does not match the ambient variable count");
    for (std::size_t i = 0; i < bounds.size(); ++i)
        if (u[i] > bounds[i]) return false;
    return true;
}

MonomialIdeal c_bounded_borel_closure(const Monomial& u, const BoundVector& bounds) {
    if (!is_c_bounded(u, bounds)) throw InputError("monomial is not c-bounded");
    return MonomialIdeal::make(u.vars(), exchange_orbit(u.vars(), {u}, &bounds));
}

bool is_c_bounded_strongly_stable(const MonomialIdeal& ideal, const BoundVector& bounds) {
    if (ideal.is_zero()) throw UndefinedInputError("strong stability of the zero ideal is undefined");
    for (const Monomial& u : ideal.gens()) {
        if (!is_c_bounded(u, bounds)) return false;
        for (std::size_t j : u.support())
            for (std::size_t i = 0; i < j; ++i) {
                std::vector<Exponent> e = u.exponents();
                --e[j];
                ++e[i];
                Monomial moved(std::move(e));
                if (!is_c_bounded(moved, bounds)) continue;
                if (!ideal.contains(moved)) return false;
            }
    }
    return true;
}

MonomialIdeal hs_principal_borel_power(const Monomial& u, std::size_t index, std::uint32_t k) {
    if (k == 0) throw InputError("the power must be positive");
    if (u.is_one()) throw InputError("the Borel generator must be a non-unit monomial");
    const std::size_t vars = u.vars();
    const std::size_t max_u = u.max_index() + 1; // 1-based maximum
    if (index >= max_u) return MonomialIdeal::zero(vars);

    Monomial uk = u;
    for (std::uint32_t step = 1; step < k; ++step) uk = uk.times(u);
    const MonomialIdeal base = borel_closure(vars, {uk});

    std::vector<Monomial> gens;
    std::vector<std::size_t> pick(index);
    for (const Monomial& v : base.gens()) {
        const std::size_t bound = v.max_index(); // choose indices strictly below, 0-based
        if (index > bound) continue;
        auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
            if (depth == index) {
                Monomial g = v;
                for (std::size_t t : pick) g = g.times(Monomial::variable(vars, t));
                gens.push_back(std::move(g));
                return;
            }
            for (std::size_t t = from; t < bound; ++t) {
                pick[depth] = t;
                self(self, t + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return MonomialIdeal::make(vars, std::move(gens));
}

namespace {

void validate_regular_sequence(std::size_t vars, const std::vector<Monomial>& seq) {
    if (seq.empty()) throw InputError("the regular sequence must be nonempty");
    std::vector<bool> used(vars, false);
    for (const Monomial& u : seq) {
        if (u.vars() != vars) throw AmbientMismatchError("generator length mismatch");
        if (u.is_one()) throw InputError("the regular sequence must consist of non-unit monomials");
        for (std::size_t i : u.support()) {
            if (used[i]) throw InputError("regular-sequence supports must be pairwise disjoint");
            used[i] = true;
        }
    }
}

} // namespace

MonomialIdeal monomial_ci_hs(std::size_t vars, std::vector<Monomial> regular_sequence,
                             std::size_t index, std::uint32_t k) {
    validate_regular_sequence(vars, regular_sequence);
    if (k == 0) throw InputError("the power must be positive");
    sort_by_degree(regular_sequence);
    const std::size_t m = regular_sequence.size();
    if (index >= m) return MonomialIdeal::zero(vars);

    std::vector<Monomial> gens;
    std::vector<std::uint32_t> b(m, 0);
    std::vector<std::size_t> pick(index);
    auto emit = [&]() {
        std::size_t max_b = 0; // 1-based position of the last nonzero b entry
        Monomial ub = Monomial::one(vars);
        for (std::size_t t = 0; t < m; ++t)
            for (std::uint32_t rep = 0; rep < b[t]; ++rep) {
                ub = ub.times(regular_sequence[t]);
                max_b = t + 1;
            }
        if (index + 1 > max_b) return; // needs j_i < max(u^b)
        auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
            if (depth == index) {
                Monomial g = ub;
                for (std::size_t t : pick) g = g.times(regular_sequence[t]);
                gens.push_back(std::move(g));
                return;
            }
            for (std::size_t t = from; t + 1 < max_b; ++t) { // 0-based t < max_b - 1
                pick[depth] = t;
                self(self, t + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    };
    auto compositions = [&](auto&& self, std::size_t slot, std::uint32_t remaining) -> void {
        if (slot + 1 == m) {
            b[slot] = remaining;
            emit();
            return;
        }
        for (std::uint32_t take = 0; take <= remaining; ++take) {
            b[slot] = take;
            self(self, slot + 1, remaining - take);
        }
    };
    compositions(compositions, 0, k);
    return MonomialIdeal::make(vars, std::move(gens));
}

namespace {

std::vector<std::uint64_t> sorted_degrees(std::vector<Monomial> seq) {
    sort_by_degree(seq);
    std::vector<std::uint64_t> d;
    d.reserve(seq.size());
    for (const Monomial& u : seq) d.push_back(u.degree());
    return d;
}

} // namespace

std::uint64_t ci_regularity_sum_all(const std::vector<Monomial>& regular_sequence,
                                    std::size_t index, std::uint32_t k) {
    const auto d = sorted_degrees(regular_sequence);
    const std::size_t m = d.size();
    if (index >= m) throw InputError("index must be below the sequence length");
    std::uint64_t r = d[m - 1] * k - (m - 1);
    for (std::size_t j = 0; j < m; ++j) r += d[j];
    for (std::size_t j = 1; j <= index; ++j) r += d[m - 1 - j];
    return r;
}

std::uint64_t ci_regularity_sum_below_max(const std::vector<Monomial>& regular_sequence,
                                          std::size_t index, std::uint32_t k) {
    const auto d = sorted_degrees(regular_sequence);
    const std::size_t m = d.size();
    if (index >= m) throw InputError("index must be below the sequence length");
    std::uint64_t r = d[m - 1] * k - (m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) r += d[j];
    for (std::size_t j = 1; j <= index; ++j) r += d[m - 1 - j];
    return r;
}

} // namespace shiftlab
