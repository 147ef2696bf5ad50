// Deterministic RNG for coefficient sampling; avoids std distributions so
// two runs with the same seed produce identical draws everywhere.
#pragma once

#include <cstdint>
#include <random>

#include "findet/field.hpp"

namespace findet {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound) with rejection.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    long long uniform_int(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform residue over F_p; small integer in [-9, 9] over Q.
    FieldElem element(const Field& f) {
        if (f.is_prime_field())
            return FieldElem::from_int(f, static_cast<long long>(
                                              uniform(static_cast<std::uint64_t>(f.characteristic()))));
        return FieldElem::from_int(f, uniform_int(-9, 9));
    }

    FieldElem nonzero_element(const Field& f) {
        FieldElem e(f);
        do {
            e = element(f);
        } while (e.is_zero());
        return e;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace findet
