#include "shiftlab/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "shiftlab/errors.hpp"
#include "shiftlab/linalg.hpp"

namespace shiftlab {

bool SimplicialComplex::has_face(std::uint32_t mask) const {
    return std::binary_search(faces.begin(), faces.end(), mask);
}

bool SimplicialComplex::is_downward_closed() const {
    for (std::uint32_t f : faces)
        for (std::uint32_t v = f; v;) {
            const std::uint32_t bit = v & (~v + 1);
            if (!has_face(f ^ bit)) return false;
            v ^= bit;
        }
    return true;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Monomial& a) {
    if (a.vars() != ideal.vars())
        throw AmbientMismatchError("multidegree length does not match the ambient variable count");
    if (ideal.vars() > 32) throw ResourceLimitError("upper Koszul complexes support at most 32 variables");

    std::uint32_t support_mask = 0;
    for (std::size_t i : a.support()) support_mask |= (1u << i);

    // Only generators dividing x^a can divide any x^{a - e_F}, and such a
    // generator divides x^{a - e_F} iff F avoids every variable where its
    // exponent is tight against a. One mask per divisor decides membership.
    std::vector<std::uint32_t> divisor_masks;
    for (const Monomial& g : ideal.gens()) {
        if (!g.divides(a)) continue;
        std::uint32_t tight = 0;
        for (std::size_t i = 0; i < a.vars(); ++i)
            if (g[i] == a[i] && a[i] > 0) tight |= (1u << i);
        divisor_masks.push_back(tight);
    }
    std::sort(divisor_masks.begin(), divisor_masks.end(), [](std::uint32_t x, std::uint32_t y) {
        return std::popcount(x) < std::popcount(y);
    });

    SimplicialComplex complex;
    complex.vertices = ideal.vars();
    // Iterate all subsets of the support of a, including the empty set.
    std::uint32_t sub = support_mask;
    while (true) {
        for (const std::uint32_t mask : divisor_masks) {
            if ((mask & sub) == 0) {
                complex.faces.push_back(sub);
                break;
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & support_mask;
    }
    std::sort(complex.faces.begin(), complex.faces.end());
    return complex;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex,
                                               const FieldSpec& field) {
    std::vector<std::size_t> dims(complex.vertices + 1, 0);
    if (complex.faces.empty()) return dims; // void complex

    // Group faces by cardinality; memorize each face's column index.
    std::size_t max_card = 0;
    for (std::uint32_t f : complex.faces)
        max_card = std::max<std::size_t>(max_card, std::popcount(f));
    std::vector<std::vector<std::uint32_t>> by_card(max_card + 1);
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::uint32_t f : complex.faces) by_card[std::popcount(f)].push_back(f);
    for (auto& faces : by_card) {
        std::sort(faces.begin(), faces.end());
        for (std::size_t i = 0; i < faces.size(); ++i) index[faces[i]] = i;
    }
    if (by_card[0].empty())
        throw UndefinedInputError("nonempty complex without the empty face is not downward closed");

    // boundary_rank[c]: rank of the boundary map from cardinality-c faces
    // to cardinality-(c-1) faces; index 0 unused.
    std::vector<std::size_t> boundary_rank(max_card + 2, 0);
    for (std::size_t card = 1; card <= max_card; ++card) {
        SparseIntMatrix m;
        m.rows = by_card[card - 1].size();
        m.cols = by_card[card].size();
        for (std::size_t col = 0; col < by_card[card].size(); ++col) {
            const std::uint32_t face = by_card[card][col];
            std::int64_t sign = 1;
            for (std::uint32_t v = face; v;) {
                const std::uint32_t bit = v & (~v + 1);
                auto it = index.find(face ^ bit);
                if (it == index.end())
                    throw UndefinedInputError("complex is not downward closed");
                m.entries.emplace_back(it->second, col, sign);
                sign = -sign;
                v ^= bit;
            }
        }
        boundary_rank[card] = rank(m, field);
    }

    // dim H~_{card-1} = #faces(card) - rank d_card - rank d_{card+1}.
    for (std::size_t card = 0; card <= max_card; ++card)
        dims[card] = by_card[card].size() - boundary_rank[card] - boundary_rank[card + 1];
    return dims;
}

std::size_t simplicial_homology_dim(const SimplicialComplex& complex, int i,
                                    const FieldSpec& field) {
    if (i < -1 || i + 1 > static_cast<int>(complex.vertices)) return 0;
    return reduced_homology_dims(complex, field)[static_cast<std::size_t>(i + 1)];
}

} // namespace shiftlab
