// Finite-determinacy verdicts: the three equivalent codimension criteria
// and the determinacy bound 2c - ord(A) + 2.
#pragma once

#include <optional>

#include "findet/jet.hpp"

namespace findet {

struct DeterminacyReport {
    enum class Verdict { FinitelyDetermined, NotDeterminedUpToCap };

    Verdict verdict = Verdict::NotDeterminedUpToCap;
    std::uint32_t ord_a = 0;
    CodimResult d;       // criterion (i):   dim m*M / T
    CodimResult d_e;     // criterion (ii):  dim M / T^e
    CodimResult ideal;   // criterion (iii): codim of I_mn(Theta)
    std::optional<std::uint32_t> k_min;
    std::optional<std::int64_t> bound_i, bound_ii, bound_iii;
    // All three criteria agree on finiteness. A mix can only come from cap
    // exhaustion on one of them and is surfaced here rather than hidden.
    bool consistent = false;

    Field field;
    std::size_t m = 0, n = 0, s = 0;
    std::uint32_t degree_cap = 0;
};

// Minimum of the orders of the entries; errors on the zero matrix (the
// order of 0 is the Infinity sentinel, never a number).
std::uint32_t ord_matrix(const PolyMatrix& a);

std::int64_t determinacy_bound(std::uint64_t c, std::uint32_t ord_a);

DeterminacyReport check(const PolyMatrix& a, std::uint32_t degree_cap);

bool criteria_agree(const PolyMatrix& a, std::uint32_t degree_cap);

}  // namespace findet
