#include "findet/gaction.hpp"

namespace findet {

FieldElem scalar_det(const std::vector<std::vector<FieldElem>>& m, const Field& f) {
    std::size_t n = m.size();
    std::vector<std::vector<FieldElem>> a = m;
    FieldElem det = FieldElem::from_int(f, 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return FieldElem(f);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det = det * a[k][k];
        FieldElem inv = a[k][k].inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            FieldElem factor = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - factor * a[k][j];
        }
    }
    return det;
}

LocalAutomorphism::LocalAutomorphism(std::vector<Poly> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("automorphism needs at least one variable");
    const Field& f = images_[0].field();
    const std::size_t s = images_.size();
    for (const Poly& phi : images_) {
        require_same_field(f, phi.field());
        if (phi.nvars() != s)
            throw std::invalid_argument("automorphism image variable count mismatch");
        if (!phi.coeff(Monomial(s)).is_zero())
            throw std::invalid_argument("automorphism image has a nonzero constant term");
    }
    if (scalar_det(jacobian0(), f).is_zero())
        throw std::invalid_argument("automorphism has singular linear part");
}

LocalAutomorphism LocalAutomorphism::identity(const Field& f, std::size_t nvars) {
    std::vector<Poly> images;
    images.reserve(nvars);
    for (std::size_t v = 0; v < nvars; ++v) images.push_back(Poly::variable(f, nvars, v));
    return LocalAutomorphism(std::move(images));
}

std::uint32_t LocalAutomorphism::degree() const {
    std::uint32_t d = 0;
    for (const Poly& phi : images_) {
        auto dd = phi.degree();
        if (dd && *dd > d) d = *dd;
    }
    return d;
}

std::vector<std::vector<FieldElem>> LocalAutomorphism::jacobian0() const {
    const std::size_t s = images_.size();
    const Field& f = images_[0].field();
    std::vector<std::vector<FieldElem>> jac(s, std::vector<FieldElem>(s, FieldElem(f)));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            jac[i][j] = images_[i].coeff(Monomial::power(s, j, 1));
    return jac;
}

namespace {

void require_unit(const PolyMatrix& m, const char* name) {
    std::vector<FieldElem> origin(m.nvars(), FieldElem(m.field()));
    if (det(m).eval(origin).is_zero())
        throw std::invalid_argument(std::string(name) + " is not invertible over the local ring");
}

}  // namespace

GroupElement::GroupElement(PolyMatrix u_, PolyMatrix v_, LocalAutomorphism phi_)
    : u(std::move(u_)), v(std::move(v_)), phi(std::move(phi_)) {
    if (u.rows() != u.cols() || v.rows() != v.cols())
        throw std::invalid_argument("group element matrices must be square");
    require_same_field(u.field(), v.field());
    require_same_field(u.field(), phi.field());
    if (u.nvars() != phi.nvars() || v.nvars() != phi.nvars())
        throw std::invalid_argument("group element variable count mismatch");
    require_unit(u, "U");
    require_unit(v, "V");
}

PolyMatrix apply(const GroupElement& g, const PolyMatrix& a, std::uint32_t degree_cap) {
    if (g.u.rows() != a.rows() || g.v.rows() != a.cols())
        throw std::invalid_argument("group element shape incompatible with matrix");
    if (a.nvars() != g.phi.nvars())
        throw std::invalid_argument("matrix variable count incompatible with automorphism");
    PolyMatrix phi_a(a.rows(), a.cols(), a.field(), a.nvars());
    std::span<const Poly> images(g.phi.images());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            phi_a.set(i, j, a.at(i, j).substitute(images, degree_cap));
    return PolyMatrix::mul_trunc(PolyMatrix::mul_trunc(g.u, phi_a, degree_cap), g.v, degree_cap);
}

GroupElement random_group_element(std::size_t m, std::size_t n, std::size_t s, const Field& f,
                                  std::uint64_t seed, std::uint32_t degree_cap) {
    if (degree_cap < 1) throw std::invalid_argument("degree cap must be >= 1");
    Rng rng(seed);
    auto random_m_poly = [&](std::size_t max_terms) {
        Poly p(f, s);
        std::size_t k = rng.uniform(max_terms + 1);
        for (std::size_t t = 0; t < k; ++t) {
            std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.uniform(degree_cap));
            auto mons = monomials_of_degree(s, d);
            p.add_term(mons[rng.uniform(mons.size())], rng.element(f));
        }
        return p;
    };
    auto unit_matrix = [&](std::size_t dim) {
        PolyMatrix u = PolyMatrix::identity(dim, f, s);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) u.set(i, j, u.at(i, j) + random_m_poly(2));
        return u;
    };
    PolyMatrix u = unit_matrix(m);
    PolyMatrix v = unit_matrix(n);

    // Resample the linear part until it is invertible.
    std::vector<std::vector<FieldElem>> lin;
    do {
        lin.assign(s, std::vector<FieldElem>(s, FieldElem(f)));
        for (auto& row : lin)
            for (auto& e : row) e = rng.element(f);
    } while (scalar_det(lin, f).is_zero());
    std::vector<Poly> images;
    for (std::size_t i = 0; i < s; ++i) {
        Poly phi(f, s);
        for (std::size_t j = 0; j < s; ++j)
            phi.add_term(Monomial::power(s, j, 1), lin[i][j]);
        if (degree_cap >= 2) {
            std::size_t extra = rng.uniform(3);
            for (std::size_t t = 0; t < extra; ++t) {
                std::uint32_t d = 2 + static_cast<std::uint32_t>(rng.uniform(degree_cap - 1));
                auto mons = monomials_of_degree(s, d);
                phi.add_term(mons[rng.uniform(mons.size())], rng.element(f));
            }
        }
        images.push_back(std::move(phi));
    }
    return GroupElement(std::move(u), std::move(v), LocalAutomorphism(std::move(images)));
}

}  // namespace findet
