#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftlab/betti.hpp"
#include "shiftlab/invariants.hpp"

namespace shiftlab {

/// One row of a power sweep: the ideal power, its i-th homological shift
/// ideal, and the invariants of that shift ideal. Degenerate rows (zero
/// shift ideal) carry no invariants.
struct SweepRecord {
    std::uint32_t k = 0;
    MonomialIdeal power;
    MonomialIdeal shift; // HS_i(I^k)
    bool shift_is_zero = true;
    bool power_linear_resolution = false;
    std::optional<GradedInvariants> invariants; // of the shift ideal
    std::optional<bool> shift_linear_resolution;
    std::vector<MonomialPrime> ass; // of the shift ideal
    std::optional<VNumberReport> vnum;
};

struct PowerSweep {
    MonomialIdeal base;
    std::size_t index = 0;
    std::uint32_t kmax = 0;
    FieldSpec field;
    std::vector<SweepRecord> records;           // k = 1, 2, ...
    std::optional<std::uint32_t> truncated_at;  // k where a resource cap hit
};

/// Computes HS_i(I^k) and its invariants for k = 1..kmax, powers built
/// incrementally and Betti tables shared through the default cache. On a
/// resource error the sweep is returned truncated with the offending k
/// recorded.
PowerSweep sweep(const MonomialIdeal& ideal, std::size_t index, std::uint32_t kmax,
                 const FieldSpec& field);

struct ContainmentVerdict {
    std::uint32_t k = 0; // compares step k -> k+1
    bool forward = false; // I * HS_i(I^k) inside HS_i(I^{k+1})
    std::optional<Monomial> forward_witness;
    bool backward = false; // HS_i(I^{k+1}) inside I * HS_i(I^k)
    std::optional<Monomial> backward_witness;
    bool equal = false;
};

struct LinearFit {
    bool stabilized = false; // exact affine suffix of length >= 3
    std::int64_t slope = 0;
    std::int64_t intercept = 0;
    std::uint32_t onset = 0; // first k of the affine suffix
};

template <typename Value>
struct StableValue {
    bool stabilized = false; // constant suffix of length >= 3
    Value value{};
    std::uint32_t onset = 0;
};

struct StabilizationReport {
    bool degenerate = false; // every record had a zero shift ideal
    std::vector<ContainmentVerdict> containments;
    std::optional<std::uint32_t> equality_onset; // equality from here through the window
    LinearFit reg_fit;
    LinearFit v_fit;
    StableValue<std::size_t> depth;
    StableValue<std::vector<MonomialPrime>> ass;
};

/// Decides both containments between I * HS_i(I^k) and HS_i(I^{k+1}) for
/// every k in the window, with generator witnesses on failure.
StabilizationReport check_containments(const PowerSweep& sweep);

/// Exact affine fits (never regression) for reg and v over the largest
/// trailing window, plus depth and Ass stabilization onsets. A window
/// without an affine suffix of length >= 3 yields an unstabilized verdict,
/// not an error.
StabilizationReport fit_linear_laws(const PowerSweep& sweep);

/// Containments and fits in one report.
StabilizationReport analyze(const PowerSweep& sweep);

struct SocleProfileRow {
    std::uint32_t k = 0;
    std::vector<std::uint64_t> degrees; // generator degrees of soc(I^k), sorted
    bool equigenerated_at_dk_minus_1 = false;
};

/// Generator degrees of soc(I^k) for k = 1..kmax and whether they all
/// equal d*k - 1; I must be equigenerated of degree d.
std::vector<SocleProfileRow> socle_degree_profile(const MonomialIdeal& ideal, std::uint32_t kmax);

/// x_1 ... x_n * soc(I^k); equals HS_{n-1}(I^k).
MonomialIdeal hs_top_via_socle(const MonomialIdeal& ideal, std::uint32_t k);

struct GolodCertificate {
    bool strongly_golod = false;
    MonomialIdeal derivative; // the ideal generated by all partial derivatives
    /// On failure: a product of two derivative generators outside I.
    std::optional<Monomial> witness;
    std::optional<std::pair<Monomial, Monomial>> witness_pair;
};

/// The sufficient condition (dI)^2 inside I, with dI generated by all
/// partial derivatives of the generators (a positive exponent survives
/// differentiation; coefficients are immaterial for membership, which is
/// why characteristic p semantics are not offered here).
GolodCertificate strongly_golod(const MonomialIdeal& ideal);

enum class LinResCell { linear, not_linear, zero };

struct HlpMatrix {
    std::uint32_t kmax = 0;
    std::vector<bool> power_linear;              // I^k has linear resolution, k = 1..kmax
    std::vector<std::vector<LinResCell>> cells;  // cells[k-1][i], i = 0..n-1
    bool holds_within_window = false;            // every power and nonzero cell linear
    std::optional<std::uint32_t> eventual_onset; // first k with all rows >= k fully linear
    std::vector<std::pair<std::size_t, std::uint32_t>> failures; // (i, k) of non-linear cells
};

/// Linear-resolution flags for I^k and every HS_i(I^k) over the window;
/// I must be equigenerated.
HlpMatrix homological_linear_powers(const MonomialIdeal& ideal, std::uint32_t kmax,
                                    const FieldSpec& field);

} // namespace shiftlab
