#include "findet/experiments.hpp"

#include <algorithm>

#include "findet/gaction.hpp"
#include "findet/util.hpp"

namespace findet {

void GenericSpec::validate() const {
    if (s < 1) throw std::invalid_argument("generic matrix needs at least one variable");
    if (n_exponent < 1) throw std::invalid_argument("exponent N must be >= 1");
    std::int64_t p = field.characteristic();
    if (p > 0 && n_exponent % p == 0)
        throw std::invalid_argument("characteristic " + std::to_string(p) + " divides N = " +
                                    std::to_string(n_exponent));
}

namespace {

bool coeffs_admissible(const GenericSpec& spec, const CoeffGrid& c, std::string* why) {
    const Field& f = spec.field;
    for (std::size_t k = 0; k < spec.s; ++k) {
        // rows in flatten order: c11, c21, c12, c22
        if ((c[0][k] * c[3][k] - c[2][k] * c[1][k]).is_zero()) {
            if (why) *why = "det(B) vanishes at unit point " + std::to_string(k + 1);
            return false;
        }
    }
    for (std::size_t t = 1; t <= std::min<std::size_t>(4, spec.s); ++t) {
        for (const auto& ri : index_combinations(4, t))
            for (const auto& ci : index_combinations(spec.s, t)) {
                std::vector<std::vector<FieldElem>> sub(t, std::vector<FieldElem>(t, FieldElem(f)));
                for (std::size_t i = 0; i < t; ++i)
                    for (std::size_t j = 0; j < t; ++j) sub[i][j] = c[ri[i]][ci[j]];
                if (scalar_det(sub, f).is_zero()) {
                    if (why)
                        *why = "vanishing " + std::to_string(t) + "x" + std::to_string(t) +
                               " minor of the coefficient matrix";
                    return false;
                }
            }
    }
    return true;
}

void require_grid_shape(const GenericSpec& spec, const CoeffGrid& c) {
    if (c.size() != 4) throw std::invalid_argument("coefficient grid needs 4 rows");
    for (const auto& row : c) {
        if (row.size() != spec.s)
            throw std::invalid_argument("coefficient grid needs s columns per row");
        for (const auto& e : row) require_same_field(e.field(), spec.field);
    }
}

}  // namespace

void validate_generic_coeffs(const GenericSpec& spec, const CoeffGrid& coeffs) {
    spec.validate();
    require_grid_shape(spec, coeffs);
    std::string why;
    if (!coeffs_admissible(spec, coeffs, &why))
        throw std::domain_error("coefficients are degenerate: " + why);
}

CoeffGrid sample_generic_coeffs(const GenericSpec& spec, Rng& rng, std::size_t max_attempts) {
    spec.validate();
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        CoeffGrid c(4, std::vector<FieldElem>(spec.s, FieldElem(spec.field)));
        for (auto& row : c)
            for (auto& e : row) e = rng.element(spec.field);
        if (coeffs_admissible(spec, c, nullptr)) return c;
    }
    throw std::domain_error("no admissible coefficients after " + std::to_string(max_attempts) +
                            " draws over " + spec.field.to_string());
}

PolyMatrix build_generic_b(const GenericSpec& spec, const CoeffGrid& coeffs) {
    validate_generic_coeffs(spec, coeffs);
    PolyMatrix b(2, 2, spec.field, spec.s);
    // flatten row order: (1,1), (2,1), (1,2), (2,2)
    const std::pair<std::size_t, std::size_t> pos[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (std::size_t r = 0; r < 4; ++r) {
        Poly f(spec.field, spec.s);
        for (std::size_t k = 0; k < spec.s; ++k)
            f.add_term(Monomial::power(spec.s, k, spec.n_exponent), coeffs[r][k]);
        b.set(pos[r].first, pos[r].second, std::move(f));
    }
    return b;
}

PolyMatrix build_generic_b(const GenericSpec& spec, Rng& rng) {
    return build_generic_b(spec, sample_generic_coeffs(spec, rng));
}

bool verify_det_squared(const PolyMatrix& b) {
    PolyMatrix theta = presentation_theta(b);
    Poly m1234 = minor(theta, {0, 1, 2, 3}, {0, 1, 2, 3});
    Poly d = det(b);
    return m1234 == d * d;
}

bool verify_last_columns_factorization(const PolyMatrix& b,
                                       const std::vector<std::size_t>& theta_cols) {
    const std::size_t s = b.nvars();
    if (s < 4) throw std::invalid_argument("last-column factorization needs s >= 4");
    if (theta_cols.size() != 4)
        throw std::invalid_argument("exactly four derivative columns required");
    for (std::size_t i = 0; i < 4; ++i) {
        if (theta_cols[i] < 9 || theta_cols[i] > 8 + s)
            throw std::out_of_range("column index outside the derivative block [9, 8+s]");
        if (i > 0 && theta_cols[i] <= theta_cols[i - 1])
            throw std::invalid_argument("column indices must be strictly increasing");
    }
    const std::uint32_t n_exp = ord_matrix(b);
    PolyMatrix theta = presentation_theta(b);
    std::vector<std::size_t> cols0;
    for (auto c : theta_cols) cols0.push_back(c - 1);
    Poly lhs = minor(theta, {0, 1, 2, 3}, cols0);

    const Field& f = b.field();
    auto flat = b.flatten();
    std::vector<std::vector<FieldElem>> cmat(4, std::vector<FieldElem>(4, FieldElem(f)));
    std::vector<std::uint32_t> exps(s, 0);
    for (std::size_t j = 0; j < 4; ++j) {
        std::size_t var = theta_cols[j] - 9;
        for (std::size_t r = 0; r < 4; ++r)
            cmat[r][j] = flat[r].coeff(Monomial::power(s, var, n_exp));
        exps[var] += n_exp - 1;
    }
    FieldElem scale = scalar_det(cmat, f) * FieldElem::from_int(f, n_exp).pow(4);
    Poly rhs = Poly::term(f, s, Monomial(std::move(exps)), scale);
    return lhs == rhs;
}

YForm extract_y_form(const Poly& f, std::uint32_t n_exponent, std::size_t x_count) {
    if (x_count < 1 || x_count > f.nvars())
        throw std::invalid_argument("x variable count out of range");
    YForm out;
    out.n_exponent = n_exponent;
    out.x_count = x_count;
    for (std::size_t i = 1; i <= x_count; ++i)
        for (std::size_t j = i; j <= x_count; ++j) out.pairs.emplace_back(i, j);
    out.coords.assign(out.pairs.size(), Poly(f.field(), f.nvars()));

    for (const auto& [m, c] : f.terms()) {
        // Split off the x-part; anything on trailing variables is a
        // coefficient (the symbolic parameter in the a-computation).
        std::size_t i = 0, j = 0;
        bool bad = false;
        for (std::size_t v = 0; v < x_count; ++v) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            if (e == 2 * n_exponent && i == 0 && j == 0) {
                i = j = v + 1;
            } else if (e == n_exponent && i == 0) {
                i = v + 1;
            } else if (e == n_exponent && j == 0) {
                j = v + 1;
            } else {
                bad = true;
                break;
            }
        }
        if (i == 0 || j == 0 || bad)
            throw std::domain_error("term " + m.to_string() +
                                    " lies outside the y-lattice x_i^N x_j^N");
        std::vector<std::uint32_t> rest(m.exponents());
        for (std::size_t v = 0; v < x_count; ++v) rest[v] = 0;
        std::size_t idx = 0;
        while (out.pairs[idx] != std::make_pair(std::min(i, j), std::max(i, j))) ++idx;
        out.coords[idx].add_term(Monomial(std::move(rest)), c);
    }
    return out;
}

namespace {

YForm extract_f_from_theta(const PolyMatrix& theta, std::uint32_t n_exp, std::size_t x_count,
                           std::size_t i1, std::size_t i2) {
    if (i1 < 1 || i2 <= i1 || i2 > 8)
        throw std::invalid_argument("F extraction needs 1 <= i1 < i2 <= 8");
    const Field& f = theta.field();
    Poly m = minor(theta, {0, 1, 2, 3}, {i1 - 1, i2 - 1, 8, 9});
    std::vector<std::uint32_t> exps(theta.nvars(), 0);
    exps[0] = n_exp - 1;
    exps[1] = n_exp - 1;
    Poly q = m.div_by_monomial(Monomial(std::move(exps)));
    FieldElem n2 = FieldElem::from_int(f, n_exp).pow(2);
    if (n2.is_zero()) throw std::domain_error("characteristic divides N");
    return extract_y_form(q.scaled(n2.inv()), n_exp, x_count);
}

}  // namespace

YForm extract_f(const PolyMatrix& b, std::size_t i1, std::size_t i2) {
    if (b.nvars() < 2) throw std::invalid_argument("F extraction needs s >= 2");
    return extract_f_from_theta(presentation_theta(b), ord_matrix(b), b.nvars(), i1, i2);
}

Poly system_determinant_in_a(const Field& f) {
    // Ring K[x1, x2, x3, a]; the parameter sits behind the x-block.
    const std::size_t s = 3, nv = 4, a_var = 3;
    const std::uint32_t n_exp = f.characteristic() == 2 ? 3 : 2;
    PolyMatrix b(2, 2, f, nv);
    FieldElem one = FieldElem::from_int(f, 1);
    {
        // f11 = a x1^N, f12 = x3^N, f21 = x2^N, f22 = x1^N + x2^N + x3^N
        std::vector<std::uint32_t> e(nv, 0);
        e[0] = n_exp;
        e[a_var] = 1;
        b.set(0, 0, Poly::term(f, nv, Monomial(e), one));
    }
    b.set(0, 1, Poly::term(f, nv, Monomial::power(nv, 2, n_exp), one));
    b.set(1, 0, Poly::term(f, nv, Monomial::power(nv, 1, n_exp), one));
    {
        Poly f22(f, nv);
        for (std::size_t v = 0; v < 3; ++v)
            f22.add_term(Monomial::power(nv, v, n_exp), one);
        b.set(1, 1, std::move(f22));
    }

    PolyMatrix theta = presentation_theta(b, s);
    std::vector<YForm> rows;
    rows.push_back(extract_y_form(det(b), n_exp, s));
    const std::pair<std::size_t, std::size_t> picks[5] = {{1, 5}, {2, 4}, {3, 7}, {6, 8}, {3, 6}};
    for (auto [i1, i2] : picks)
        rows.push_back(extract_f_from_theta(theta, n_exp, s, i1, i2));

    // 6x6 system matrix over the univariate ring K[a].
    PolyMatrix sys(6, 6, f, 1);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t cidx = 0; cidx < 6; ++cidx) {
            Poly uni(f, 1);
            for (const auto& [m, c] : rows[r].coords[cidx].terms())
                uni.add_term(Monomial::power(1, 0, m.exponent(a_var)), c);
            sys.set(r, cidx, std::move(uni));
        }
    return det_bareiss(sys);
}

ScanResult semicontinuity_scan(const PolyMatrix& b, const PolyMatrix& a,
                               const std::vector<FieldElem>& t_samples,
                               std::uint32_t degree_cap, unsigned jobs) {
    require_same_field(b.field(), a.field());
    if (b.rows() != a.rows() || b.cols() != a.cols() || b.nvars() != a.nvars())
        throw std::invalid_argument("family members must share shape and ring");
    ScanResult out;
    out.t_values = t_samples;
    out.d_e_at_zero = codim_stabilized(tangent_image_gens(b, true), 0, degree_cap);
    out.d_e_values.assign(t_samples.size(), CodimResult{});
    parallel_for(t_samples.size(), jobs, [&](std::size_t i) {
        PolyMatrix bt = b + a.scaled(t_samples[i]);
        out.d_e_values[i] = codim_stabilized(tangent_image_gens(bt, true), 0, degree_cap);
    });
    for (std::size_t i = 0; i < t_samples.size(); ++i)
        if (out.d_e_at_zero.is_finite() && out.d_e_values[i].is_finite() &&
            out.d_e_values[i].codim <= out.d_e_at_zero.codim)
            out.satisfied.push_back(i);
    return out;
}

GenericityResult genericity_trial(const GenericSpec& spec, std::size_t trials,
                                  std::uint64_t seed, std::uint32_t degree_cap) {
    spec.validate();
    GenericityResult res;
    res.trials = trials;
    if (trials == 0) {
        res.vacuous = true;
        return res;
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        PolyMatrix b = build_generic_b(spec, rng);
        auto ideal = minors_ideal(presentation_theta(b), 4);
        if (ideal_codim(ideal, degree_cap).is_finite()) ++res.finite;
    }
    return res;
}

}  // namespace findet
