#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/field.hpp"
#include "shiftlab/ideal.hpp"

namespace shiftlab {

/// An abstract simplicial complex on at most 32 vertices, faces stored as
/// bitmasks in ascending order. Any nonempty downward-closed complex
/// contains the mask 0 (the empty face); the void complex has no faces at
/// all and has vanishing reduced homology everywhere.
struct SimplicialComplex {
    std::size_t vertices = 0;
    std::vector<std::uint32_t> faces; // sorted ascending, unique

    bool has_face(std::uint32_t mask) const;
    bool is_downward_closed() const;
};

/// The upper Koszul complex of I at the multidegree a: the faces are the
/// subsets F of the support of a with x^{a - e_F} in I. Nonempty exactly
/// when x^a lies in I, in which case it is downward closed. Its reduced
/// homology in dimension i-1 computes the multigraded Betti number
/// beta_{i,a}(I).
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& a);

/// Dimensions of all reduced homology groups over the field, indexed by
/// dimension + 1 (entry 0 holds dim H~_{-1}, entry j holds dim H~_{j-1};
/// size vertices + 1).
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex,
                                               const FieldSpec& field);

/// dim of the reduced i-th homology over the field; i = -1 is allowed.
std::size_t simplicial_homology_dim(const SimplicialComplex& complex, int i,
                                    const FieldSpec& field);

} // namespace shiftlab
