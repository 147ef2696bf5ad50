// Machine verification of the explicit computations in the existence
// proof: the det^2 identity, the last-column minor factorization, the
// 6-equation linear system with determinant a^7 + a^6, and the
// semi-continuity scan over the family B + t*A.
#pragma once

#include "findet/determinacy.hpp"
#include "findet/rng.hpp"

namespace findet {

struct GenericSpec {
    std::size_t s = 2;
    std::uint32_t n_exponent = 2;  // the N in c_ij x_k^N
    Field field;

    void validate() const;  // N >= 1, s >= 1, p does not divide N
};

// Coefficient grid with rows in flatten order (c11, c21, c12, c22).
using CoeffGrid = std::vector<std::vector<FieldElem>>;

// Throws std::domain_error when the explicit non-degeneracy conditions
// fail: det(B) must not vanish at any unit point, and every minor of the
// 4 x s coefficient matrix must be nonzero.
void validate_generic_coeffs(const GenericSpec& spec, const CoeffGrid& coeffs);

// Rejection sampling against the same conditions; errors after
// max_attempts draws (possible over very small fields).
CoeffGrid sample_generic_coeffs(const GenericSpec& spec, Rng& rng,
                                std::size_t max_attempts = 1000);

PolyMatrix build_generic_b(const GenericSpec& spec, const CoeffGrid& coeffs);
PolyMatrix build_generic_b(const GenericSpec& spec, Rng& rng);

// M_{1,2,3,4} == det(B)^2, symbolically.
bool verify_det_squared(const PolyMatrix& b);

// Minor from four of the derivative columns (1-based Theta indices in
// [9, 8+s]) equals coefficient-determinant * N^4 * prod x_i^(N-1).
bool verify_last_columns_factorization(const PolyMatrix& b,
                                       const std::vector<std::size_t>& theta_cols);

// A form supported on the monomials x_i^N x_j^N, i <= j, written in the
// coordinates y_ij. Coordinates are polynomials in the same ring with all
// x-exponents zero (constants unless the ring has trailing parameters).
struct YForm {
    std::uint32_t n_exponent = 0;
    std::size_t x_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // 1-based, i <= j
    std::vector<Poly> coords;
};

// Reads f as a linear form in the y_ij; throws std::domain_error when a
// term lies outside the y-lattice.
YForm extract_y_form(const Poly& f, std::uint32_t n_exponent, std::size_t x_count);

// Divides M_{i1,i2,9,10} by N^2 x_1^(N-1) x_2^(N-1) exactly and returns the
// resulting linear form in y (i1 < i2 are 1-based Theta columns <= 8).
YForm extract_f(const PolyMatrix& b, std::size_t i1, std::size_t i2);

// The 6x6 determinant of the system {det(B), F_{1,5}, F_{2,4}, F_{3,7},
// F_{6,8}, F_{3,6}} in the variables (y11, y12, y13, y22, y23, y33) with
// the paper's coefficient assignments; returns a univariate polynomial in
// the parameter a. Expected: a^7 + a^6 (reduced mod p over F_p).
Poly system_determinant_in_a(const Field& f);

struct ScanResult {
    std::vector<FieldElem> t_values;
    std::vector<CodimResult> d_e_values;
    CodimResult d_e_at_zero;
    std::vector<std::size_t> satisfied;  // indices with Finite d_e(t) <= d_e(0)
};

ScanResult semicontinuity_scan(const PolyMatrix& b, const PolyMatrix& a,
                               const std::vector<FieldElem>& t_samples,
                               std::uint32_t degree_cap, unsigned jobs = 1);

struct GenericityResult {
    std::size_t trials = 0;
    std::size_t finite = 0;
    bool vacuous = false;  // trials == 0; fraction defined as 1
    double fraction() const { return vacuous ? 1.0 : static_cast<double>(finite) / trials; }
};

GenericityResult genericity_trial(const GenericSpec& spec, std::size_t trials,
                                  std::uint64_t seed, std::uint32_t degree_cap);

}  // namespace findet
