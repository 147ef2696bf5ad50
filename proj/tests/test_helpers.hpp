// Shared helpers for building small polynomials and matrices in tests.
#pragma once

#include <string>
#include <vector>

#include "findet/poly_matrix.hpp"
#include "findet/rng.hpp"

namespace findet::testing {

// Polynomial from (coeff, exponents) pairs.
inline Poly make_poly(const Field& f, std::size_t nvars,
                      const std::vector<std::pair<long long, std::vector<std::uint32_t>>>& terms) {
    Poly p(f, nvars);
    for (const auto& [c, e] : terms) p.add_term(Monomial(e), FieldElem::from_int(f, c));
    return p;
}

inline PolyMatrix make_matrix(const Field& f, std::size_t nvars,
                              const std::vector<std::vector<Poly>>& rows) {
    PolyMatrix m(rows.size(), rows.at(0).size(), f, nvars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

// diag(x_1, x_2) over two variables.
inline PolyMatrix diag_xy(const Field& f) {
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1), z(f, 2);
    return make_matrix(f, 2, {{x, z}, {z, y}});
}

// [[x, y], [y, x]]
inline PolyMatrix symm_xy(const Field& f) {
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    return make_matrix(f, 2, {{x, y}, {y, x}});
}

// [[x, 0], [0, 0]]: position (2,2) is untouched by every tangent generator.
inline PolyMatrix corner_x(const Field& f) {
    Poly x = Poly::variable(f, 2, 0), z(f, 2);
    return make_matrix(f, 2, {{x, z}, {z, z}});
}

inline Poly random_poly(const Field& f, std::size_t nvars, std::uint32_t max_deg,
                        std::size_t max_terms, Rng& rng) {
    Poly p(f, nvars);
    std::size_t k = 1 + rng.uniform(max_terms);
    for (std::size_t t = 0; t < k; ++t) {
        auto mons = monomials_of_degree(nvars, static_cast<std::uint32_t>(rng.uniform(max_deg + 1)));
        p.add_term(mons[rng.uniform(mons.size())], rng.element(f));
    }
    return p;
}

}  // namespace findet::testing
