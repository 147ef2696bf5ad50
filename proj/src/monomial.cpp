#include "findet/monomial.hpp"

namespace findet {

std::string Monomial::to_string() const {
    if (deg_ == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

namespace {

void gen_degree(std::size_t nvars, std::size_t pos, std::uint32_t rem,
                std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = rem;
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= rem; ++e) {
        cur[pos] = e;
        gen_degree(nvars, pos + 1, rem - e, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    std::vector<std::uint32_t> cur(nvars, 0);
    gen_degree(nvars, 0, d, cur, out);
    return out;
}

std::vector<Monomial> monomials_below(std::size_t nvars, std::uint32_t degree_cap,
                                      std::uint32_t min_degree) {
    std::vector<Monomial> out;
    for (std::uint32_t d = min_degree; d < degree_cap; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace findet
