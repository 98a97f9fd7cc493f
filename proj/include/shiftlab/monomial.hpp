#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "shiftlab/errors.hpp"

namespace shiftlab {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored as its exponent vector.
/// The ambient variable count n is the length of the vector. Immutable
/// after construction; all arithmetic returns new values.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

    static Monomial one(std::size_t vars) { return Monomial(std::vector<Exponent>(vars, 0)); }

    /// The monomial x_{index+1} (0-based index) in `vars` variables.
    static Monomial variable(std::size_t vars, std::size_t index) {
        if (index >= vars) throw InputError("variable index out of range");
        std::vector<Exponent> e(vars, 0);
        e[index] = 1;
        return Monomial(std::move(e));
    }

    std::size_t vars() const { return exps_.size(); }
    const std::vector<Exponent>& exponents() const { return exps_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    /// 0-based indices of variables with positive exponent, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) s.push_back(i);
        return s;
    }

    std::size_t support_size() const {
        std::size_t c = 0;
        for (Exponent e : exps_)
            if (e > 0) ++c;
        return c;
    }

    /// Largest 0-based index with positive exponent. Undefined for 1.
    std::size_t max_index() const {
        for (std::size_t i = exps_.size(); i-- > 0;)
            if (exps_[i] > 0) return i;
        throw InputError("max_index of the monomial 1 is undefined");
    }

    bool divides(const Monomial& other) const {
        check_same_vars(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Product with overflow detection on each exponent.
    Monomial times(const Monomial& other) const {
        check_same_vars(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            std::uint64_t s = std::uint64_t{exps_[i]} + other.exps_[i];
            if (s > std::numeric_limits<Exponent>::max())
                throw OverflowError("exponent overflow in monomial product");
            e[i] = static_cast<Exponent>(s);
        }
        return Monomial(std::move(e));
    }

    /// Exact division; `other` must divide this monomial.
    Monomial divide(const Monomial& other) const {
        check_same_vars(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (other.exps_[i] > exps_[i]) throw InputError("inexact monomial division");
            e[i] = exps_[i] - other.exps_[i];
        }
        return Monomial(std::move(e));
    }

    /// The monomial quotient u : v = u / gcd(u, v).
    Monomial quotient_by(const Monomial& other) const {
        check_same_vars(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same_vars(b);
        std::vector<Exponent> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same_vars(b);
        std::vector<Exponent> e(a.exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void check_same_vars(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw AmbientMismatchError("monomials live in different ambient rings");
    }

    std::vector<Exponent> exps_;
};

/// Canonical order: degree ascending, then lexicographically descending
/// exponent vectors (so within one degree x^2 precedes x*y precedes y^2).
/// Generator sets, witnesses and reports all use this order, which makes
/// every output deterministic.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    const std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

} // namespace shiftlab
