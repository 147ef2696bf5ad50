#include "findet/poly_matrix.hpp"

#include <algorithm>

#include "findet/util.hpp"

namespace findet {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Field& f, std::size_t nvars)
    : rows_(rows), cols_(cols), field_(f), nvars_(nvars) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix shape");
    e_.assign(rows * cols, Poly(f, nvars));
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
    require_same_field(field_, p.field());
    if (p.nvars() != nvars_) throw std::invalid_argument("entry variable count mismatch");
    e_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::identity(std::size_t n, const Field& f, std::size_t nvars) {
    PolyMatrix m(n, n, f, nvars);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Poly::constant(f, nvars, 1));
    return m;
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars())
        throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_shape(a, b);
    PolyMatrix r(a.rows(), a.cols(), a.field(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_shape(a, b);
    PolyMatrix r(a.rows(), a.cols(), a.field(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) - b.at(i, j));
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

PolyMatrix PolyMatrix::scaled(const FieldElem& c) const {
    PolyMatrix r(rows_, cols_, field_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j).scaled(c));
    return r;
}

PolyMatrix PolyMatrix::truncate(std::uint32_t degree_cap) const {
    PolyMatrix r(rows_, cols_, field_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j).truncate(degree_cap));
    return r;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows() || a.nvars() != b.nvars())
        throw std::invalid_argument("matrix product shape mismatch");
    PolyMatrix r(a.rows(), b.cols(), a.field(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Poly acc(a.field(), a.nvars());
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

PolyMatrix PolyMatrix::mul_trunc(const PolyMatrix& a, const PolyMatrix& b,
                                 std::uint32_t degree_cap) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows() || a.nvars() != b.nvars())
        throw std::invalid_argument("matrix product shape mismatch");
    PolyMatrix r(a.rows(), b.cols(), a.field(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Poly acc(a.field(), a.nvars());
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc += Poly::mul_trunc(a.at(i, k), b.at(k, j), degree_cap);
            r.set(i, j, std::move(acc));
        }
    return r;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<Poly> PolyMatrix::flatten() const {
    std::vector<Poly> out;
    out.reserve(rows_ * cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

PolyMatrix PolyMatrix::unflatten(std::size_t rows, std::size_t cols, const Field& f,
                                 std::size_t nvars, const std::vector<Poly>& flat) {
    if (flat.size() != rows * cols)
        throw std::invalid_argument("flattened vector length differs from rows*cols");
    PolyMatrix out(rows, cols, f, nvars);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) out.set(i, j, flat[j * rows + i]);
    return out;
}

PolyMatrix e_mul_left(const PolyMatrix& a, std::size_t p, std::size_t q) {
    if (p < 1 || q < 1 || p > a.rows() || q > a.rows())
        throw std::out_of_range("E index out of range");
    PolyMatrix r(a.rows(), a.cols(), a.field(), a.nvars());
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(p - 1, j, a.at(q - 1, j));
    return r;
}

PolyMatrix e_mul_right(const PolyMatrix& a, std::size_t h, std::size_t l) {
    if (h < 1 || l < 1 || h > a.cols() || l > a.cols())
        throw std::out_of_range("E index out of range");
    PolyMatrix r(a.rows(), a.cols(), a.field(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, l - 1, a.at(i, h - 1));
    return r;
}

namespace {

void require_in_max_ideal(const PolyMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto o = a.at(i, j).ord();
            if (o && *o == 0)
                throw std::invalid_argument("matrix has a unit entry at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "): not in m*M");
        }
}

}  // namespace

GeneratorSet tangent_image_gens(const PolyMatrix& a, bool extended) {
    require_in_max_ideal(a);
    const std::size_t m = a.rows(), n = a.cols(), s = a.nvars();
    GeneratorSet out;
    out.ambient_rank = m * n;
    out.label = extended ? GeneratorLabel::ExtendedTangentImage : GeneratorLabel::TangentImage;
    out.field = a.field();
    out.nvars = s;
    for (std::size_t p = 1; p <= m; ++p)
        for (std::size_t q = 1; q <= m; ++q) out.gens.push_back(e_mul_left(a, p, q).flatten());
    for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t h = 1; h <= n; ++h) out.gens.push_back(e_mul_right(a, h, l).flatten());
    std::vector<std::vector<Poly>> partials;
    for (std::size_t v = 0; v < s; ++v) {
        PolyMatrix d(m, n, a.field(), s);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) d.set(i, j, a.at(i, j).partial(v));
        partials.push_back(d.flatten());
    }
    if (extended) {
        for (auto& g : partials) out.gens.push_back(std::move(g));
    } else {
        FieldElem one = FieldElem::from_int(a.field(), 1);
        for (std::size_t mu = 0; mu < s; ++mu) {
            Monomial xmu = Monomial::power(s, mu, 1);
            for (const auto& g : partials) {
                std::vector<Poly> v;
                v.reserve(g.size());
                for (const Poly& comp : g) v.push_back(comp.mul_monomial(xmu, one));
                out.gens.push_back(std::move(v));
            }
        }
    }
    return out;
}

Poly det_cofactor(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 1) return a.at(0, 0);
    // Expansion along the first column on a shrinking column mask.
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    std::vector<std::size_t> rows = cols;
    struct Rec {
        const PolyMatrix& m;
        Poly operator()(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) {
            if (ri.size() == 1) return m.at(ri[0], ci[0]);
            Poly acc(m.field(), m.nvars());
            std::vector<std::size_t> sub_rows(ri.begin() + 1, ri.end());
            for (std::size_t k = 0; k < ci.size(); ++k) {
                const Poly& piv = m.at(ri[0], ci[k]);
                if (piv.is_zero()) continue;
                std::vector<std::size_t> sub_cols;
                sub_cols.reserve(ci.size() - 1);
                for (std::size_t j = 0; j < ci.size(); ++j)
                    if (j != k) sub_cols.push_back(ci[j]);
                Poly term = piv * (*this)(sub_rows, sub_cols);
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    } rec{a};
    return rec(rows, cols);
}

Poly det_bareiss(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Poly> m;
    m.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.push_back(a.at(i, j));
    auto at = [&](std::size_t i, std::size_t j) -> Poly& { return m[i * n + j]; };
    Poly denom = Poly::constant(a.field(), a.nvars(), 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k).is_zero()) ++piv;
            if (piv == n) return Poly(a.field(), a.nvars());
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)).div_exact(denom);
            at(i, k) = Poly(a.field(), a.nvars());
        }
        denom = at(k, k);
    }
    return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

Poly det(const PolyMatrix& a) {
    return a.rows() <= 4 ? det_cofactor(a) : det_bareiss(a);
}

Poly minor(const PolyMatrix& a, const std::vector<std::size_t>& row_idx,
           const std::vector<std::size_t>& col_idx) {
    if (row_idx.size() != col_idx.size())
        throw std::invalid_argument("minor needs a square selection");
    if (row_idx.empty()) throw std::invalid_argument("empty minor selection");
    auto check = [](const std::vector<std::size_t>& idx, std::size_t bound) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= bound) throw std::out_of_range("minor index out of range");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw std::invalid_argument("minor indices must be strictly increasing");
        }
    };
    check(row_idx, a.rows());
    check(col_idx, a.cols());
    PolyMatrix sub(row_idx.size(), col_idx.size(), a.field(), a.nvars());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            sub.set(i, j, a.at(row_idx[i], col_idx[j]));
    return det(sub);
}

PolyMatrix presentation_theta(const PolyMatrix& a, std::size_t s_deriv) {
    const std::size_t m = a.rows(), n = a.cols();
    if (s_deriv > a.nvars()) throw std::invalid_argument("derivative count exceeds nvars");
    PolyMatrix theta(m * n, n * n + m * m + s_deriv, a.field(), a.nvars());
    std::size_t col = 0;
    auto emit = [&](const std::vector<Poly>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) theta.set(i, col, v[i]);
        ++col;
    };
    for (std::size_t l = 1; l <= n; ++l)
        for (std::size_t h = 1; h <= n; ++h) emit(e_mul_right(a, h, l).flatten());
    for (std::size_t p = 1; p <= m; ++p)
        for (std::size_t q = 1; q <= m; ++q) emit(e_mul_left(a, p, q).flatten());
    for (std::size_t v = 0; v < s_deriv; ++v) {
        PolyMatrix d(m, n, a.field(), a.nvars());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) d.set(i, j, a.at(i, j).partial(v));
        emit(d.flatten());
    }
    return theta;
}

PolyMatrix presentation_theta(const PolyMatrix& a) {
    return presentation_theta(a, a.nvars());
}

std::vector<std::vector<std::size_t>> index_combinations(std::size_t n, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    if (t > n) return out;
    std::vector<std::size_t> cur(t);
    for (std::size_t i = 0; i < t; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = t;
        while (i > 0 && cur[i - 1] == n - t + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<LabelledMinor> enumerate_minors(const PolyMatrix& a, std::size_t t, unsigned jobs) {
    if (t == 0 || t > std::min(a.rows(), a.cols()))
        throw std::out_of_range("minor size out of range");
    auto row_sets = index_combinations(a.rows(), t);
    auto col_sets = index_combinations(a.cols(), t);
    std::vector<LabelledMinor> out;
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto& ri : row_sets)
        for (const auto& ci : col_sets)
            out.push_back(LabelledMinor{ri, ci, Poly(a.field(), a.nvars())});
    parallel_for(out.size(), jobs, [&](std::size_t k) {
        out[k].value = minor(a, out[k].row_idx, out[k].col_idx);
    });
    return out;
}

GeneratorSet minors_ideal(const PolyMatrix& a, std::size_t t, unsigned jobs) {
    GeneratorSet out;
    out.ambient_rank = 1;
    out.label = GeneratorLabel::Ideal;
    out.field = a.field();
    out.nvars = a.nvars();
    for (auto& lm : enumerate_minors(a, t, jobs))
        if (!lm.value.is_zero()) out.gens.push_back({std::move(lm.value)});
    return out;
}

}  // namespace findet
