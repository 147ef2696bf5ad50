// Finite-dimensional truncations F/m^D F, exact rank computation, and
// certified codimension via the Nakayama stopping rule: when the codim
// profile repeats at consecutive degrees D, D+1 we get
// m^D F <= T + m*(m^D F), hence m^D F <= T, and the value is exact.
#pragma once

#include <cstdint>
#include <vector>

#include "findet/poly_matrix.hpp"

namespace findet {

struct JetBasis {
    std::size_t nvars = 0;
    std::size_t ambient_rank = 0;
    std::uint32_t degree_cap = 0;
    std::uint32_t min_degree = 0;
    // Ordered by component, then by the monomial order.
    std::vector<std::pair<std::size_t, Monomial>> entries;

    static JetBasis build(std::size_t nvars, std::size_t ambient_rank,
                          std::uint32_t degree_cap, std::uint32_t min_degree);
    std::size_t dim() const { return entries.size(); }
};

struct CodimResult {
    enum class Status { Finite, Inconclusive };
    Status status = Status::Inconclusive;
    std::uint64_t codim = 0;        // exact value (Finite) or lower bound at the cap
    std::uint32_t stab_degree = 0;  // D* for Finite, the cap for Inconclusive
    std::vector<std::uint64_t> profile;  // codim at D = 1, 2, ...

    bool is_finite() const { return status == Status::Finite; }
};

// dim of (F_{min_degree} / m^D F) minus the rank of the generator multiples
// x^alpha * g truncated to the jet basis.
std::uint64_t span_codim_at(const GeneratorSet& gens, std::uint32_t degree, std::uint32_t min_degree);

// Runs span_codim_at for D = 1, 2, ... and stops at the first repeat
// (Nakayama certificate); Inconclusive carries the value at the cap.
CodimResult codim_stabilized(const GeneratorSet& gens, std::uint32_t min_degree,
                             std::uint32_t degree_cap);

// codim_stabilized specialised to ideals (ambient_rank == 1).
CodimResult ideal_codim(const GeneratorSet& gens, std::uint32_t degree_cap);

// Smallest k with m^k contained in the ideal, given its finite codim
// certificate. Errors when called on an Inconclusive result.
std::uint32_t minimal_k_containment(const GeneratorSet& gens, const CodimResult& certified);

// Default truncation cap per variable count (an engineering parameter:
// the theory gives no effective bound).
std::uint32_t default_degree_cap(std::size_t nvars);

}  // namespace findet
