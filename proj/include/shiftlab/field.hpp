#pragma once

#include <cstdint>
#include <string>

#include "shiftlab/errors.hpp"

namespace shiftlab {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Coefficient field for homological computations: GF(p) for a prime p,
/// or the rationals when the characteristic is 0. Betti numbers of
/// monomial ideals can depend on the characteristic, so the field is an
/// explicit parameter and is echoed in every report.
struct FieldSpec {
    std::uint32_t characteristic = 32003;

    static FieldSpec rationals() { return FieldSpec{0}; }

    static FieldSpec gf(std::uint32_t p) {
        if (!is_prime(p)) throw InputError("field characteristic must be 0 or a prime");
        return FieldSpec{p};
    }

    static FieldSpec make(std::uint32_t characteristic) {
        return characteristic == 0 ? rationals() : gf(characteristic);
    }

    bool is_rational() const { return characteristic == 0; }

    std::string name() const {
        return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.characteristic == b.characteristic;
    }
};

} // namespace shiftlab
