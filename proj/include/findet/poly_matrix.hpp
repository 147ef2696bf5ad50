// Matrices over the polynomial ring: tangent-image generators, the
// presentation matrix Theta, determinants and minor ideals.
#pragma once

#include <cstdint>
#include <vector>

#include "findet/poly.hpp"

namespace findet {

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const Field& f, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }

    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p);

    static PolyMatrix identity(std::size_t n, const Field& f, std::size_t nvars);

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix scaled(const FieldElem& c) const;
    PolyMatrix truncate(std::uint32_t degree_cap) const;
    static PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix mul_trunc(const PolyMatrix& a, const PolyMatrix& b,
                                std::uint32_t degree_cap);

    bool is_zero() const;

    // Column-major flattening: ((1,1),(2,1),...,(m,1),(1,2),...,(m,n)).
    // This matches the row layout of the presentation matrix.
    std::vector<Poly> flatten() const;
    static PolyMatrix unflatten(std::size_t rows, std::size_t cols, const Field& f,
                                std::size_t nvars, const std::vector<Poly>& flat);

private:
    std::size_t rows_, cols_;
    Field field_;
    std::size_t nvars_;
    std::vector<Poly> e_;  // row-major storage
};

enum class GeneratorLabel { TangentImage, ExtendedTangentImage, Ideal };

// Finite list of vectors in R^ambient_rank generating a submodule (or an
// ideal when ambient_rank == 1).
struct GeneratorSet {
    std::size_t ambient_rank = 0;
    GeneratorLabel label = GeneratorLabel::Ideal;
    Field field;
    std::size_t nvars = 0;
    std::vector<std::vector<Poly>> gens;
};

// E_{m,pq} * A: row q of A moved to row p (indices 1-based as in E_{pq}).
PolyMatrix e_mul_left(const PolyMatrix& a, std::size_t p, std::size_t q);
// A * E_{n,hl}: column h of A moved to column l (1-based).
PolyMatrix e_mul_right(const PolyMatrix& a, std::size_t h, std::size_t l);

// Generators of the tangent image (extended: partials over R; plain:
// partials multiplied by each variable). Requires A in m*M (no unit entry).
GeneratorSet tangent_image_gens(const PolyMatrix& a, bool extended);

Poly det(const PolyMatrix& a);
Poly det_cofactor(const PolyMatrix& a);
Poly det_bareiss(const PolyMatrix& a);

// Minor from strictly increasing 0-based row/column index lists.
Poly minor(const PolyMatrix& a, const std::vector<std::size_t>& row_idx,
           const std::vector<std::size_t>& col_idx);

// Presentation matrix of M_{m,n}/T^e: mn x (n^2 + m^2 + s_deriv) with the
// frozen column order A*E_11, A*E_21, ..., E_11*A, E_12*A, ...,
// dA/dx_1, ..., dA/dx_s. s_deriv defaults to nvars; passing a smaller
// count restricts the derivative columns (used when trailing variables
// are formal parameters).
PolyMatrix presentation_theta(const PolyMatrix& a, std::size_t s_deriv);
PolyMatrix presentation_theta(const PolyMatrix& a);

// All t x t minors with their 0-based column/row tuples, ordered by row
// tuple then column tuple.
struct LabelledMinor {
    std::vector<std::size_t> row_idx;
    std::vector<std::size_t> col_idx;
    Poly value;
};
std::vector<LabelledMinor> enumerate_minors(const PolyMatrix& a, std::size_t t,
                                            unsigned jobs = 1);

// The ideal generated by the t x t minors; zero minors are dropped.
GeneratorSet minors_ideal(const PolyMatrix& a, std::size_t t, unsigned jobs = 1);

std::vector<std::vector<std::size_t>> index_combinations(std::size_t n, std::size_t t);

}  // namespace findet
