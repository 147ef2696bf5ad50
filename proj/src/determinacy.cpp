#include "findet/determinacy.hpp"

#include "findet/util.hpp"

namespace findet {

std::uint32_t ord_matrix(const PolyMatrix& a) {
    std::optional<std::uint32_t> o;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            auto oe = a.at(i, j).ord();
            if (oe && (!o || *oe < *o)) o = oe;
        }
    if (!o) throw std::invalid_argument("ord undefined for zero matrix");
    return *o;
}

std::int64_t determinacy_bound(std::uint64_t c, std::uint32_t ord_a) {
    if (ord_a < 1) throw std::invalid_argument("ord(A) must be >= 1");
    return 2 * static_cast<std::int64_t>(c) - static_cast<std::int64_t>(ord_a) + 2;
}

DeterminacyReport check(const PolyMatrix& a, std::uint32_t degree_cap) {
    DeterminacyReport rep;
    rep.field = a.field();
    rep.m = a.rows();
    rep.n = a.cols();
    rep.s = a.nvars();
    rep.degree_cap = degree_cap;
    rep.ord_a = ord_matrix(a);  // rejects the zero matrix
    if (rep.ord_a < 1) throw std::invalid_argument("matrix has a unit entry: not in m*M");

    // (i) dim m*M / T, computed inside m*M (degree-0 jet positions excluded).
    rep.d = codim_stabilized(tangent_image_gens(a, /*extended=*/false), 1, degree_cap);
    // (ii) dim M / T^e.
    rep.d_e = codim_stabilized(tangent_image_gens(a, /*extended=*/true), 0, degree_cap);
    // (iii) m^k inside the ideal of mn x mn minors of Theta.
    auto ideal = minors_ideal(presentation_theta(a), a.rows() * a.cols());
    rep.ideal = ideal_codim(ideal, degree_cap);
    if (rep.ideal.is_finite()) rep.k_min = minimal_k_containment(ideal, rep.ideal);

    if (rep.d.is_finite()) rep.bound_i = determinacy_bound(rep.d.codim, rep.ord_a);
    if (rep.d_e.is_finite()) rep.bound_ii = determinacy_bound(rep.d_e.codim, rep.ord_a);
    if (rep.k_min) rep.bound_iii = determinacy_bound(*rep.k_min, rep.ord_a);

    bool any = rep.d.is_finite() || rep.d_e.is_finite() || rep.ideal.is_finite();
    bool all = rep.d.is_finite() && rep.d_e.is_finite() && rep.ideal.is_finite();
    rep.verdict = any ? DeterminacyReport::Verdict::FinitelyDetermined
                      : DeterminacyReport::Verdict::NotDeterminedUpToCap;
    rep.consistent = all || !any;
    return rep;
}

bool criteria_agree(const PolyMatrix& a, std::uint32_t degree_cap) {
    return check(a, degree_cap).consistent;
}

}  // namespace findet
