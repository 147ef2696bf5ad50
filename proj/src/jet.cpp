#include "findet/jet.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "findet/util.hpp"

namespace findet {

JetBasis JetBasis::build(std::size_t nvars, std::size_t ambient_rank, std::uint32_t degree_cap,
                         std::uint32_t min_degree) {
    if (degree_cap < 1) throw std::invalid_argument("jet degree cap must be >= 1");
    JetBasis b;
    b.nvars = nvars;
    b.ambient_rank = ambient_rank;
    b.degree_cap = degree_cap;
    b.min_degree = min_degree;
    auto mons = monomials_below(nvars, degree_cap, min_degree);
    b.entries.reserve(ambient_rank * mons.size());
    for (std::size_t c = 0; c < ambient_rank; ++c)
        for (const auto& m : mons) b.entries.emplace_back(c, m);
    return b;
}

std::uint32_t default_degree_cap(std::size_t nvars) {
    if (nvars <= 2) return 30;
    if (nvars == 3) return 20;
    return 12;
}

namespace {

// --- exact row reducers -------------------------------------------------
//
// Both keep a reduced pivot basis: every pivot row has zeros at all other
// pivot columns, so one ascending pass fully reduces an incoming row.

class FpReducer {
public:
    FpReducer(std::size_t ncols, std::int64_t p) : ncols_(ncols), p_(static_cast<std::uint64_t>(p)) {}

    bool insert(std::vector<std::uint64_t> row) {
        for (const auto& piv : pivots_) {
            std::uint64_t c = row[piv.col];
            if (c == 0) continue;
            const auto& pr = piv.row;
            for (std::size_t j = piv.col; j < ncols_; ++j) {
                if (pr[j] == 0) continue;
                std::uint64_t sub = c * pr[j] % p_;
                row[j] = row[j] >= sub ? row[j] - sub : row[j] + p_ - sub;
            }
        }
        std::size_t lead = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (row[j] != 0) { lead = j; break; }
        if (lead == ncols_) return false;
        std::uint64_t inv = inv_mod(row[lead]);
        for (std::size_t j = lead; j < ncols_; ++j) row[j] = row[j] * inv % p_;
        for (auto& piv : pivots_) {
            std::uint64_t c = piv.row[lead];
            if (c == 0) continue;
            for (std::size_t j = lead; j < ncols_; ++j) {
                std::uint64_t sub = c * row[j] % p_;
                piv.row[j] = piv.row[j] >= sub ? piv.row[j] - sub : piv.row[j] + p_ - sub;
            }
        }
        Pivot pv{lead, std::move(row)};
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pv,
                                    [](const Pivot& a, const Pivot& b) { return a.col < b.col; });
        pivots_.insert(pos, std::move(pv));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    std::uint64_t inv_mod(std::uint64_t a) const {
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
    }

    struct Pivot {
        std::size_t col;
        std::vector<std::uint64_t> row;
    };
    std::size_t ncols_;
    std::uint64_t p_;
    std::vector<Pivot> pivots_;
};

// Fraction-free reduction on integer rows; every row is divided by the gcd
// of its entries after each combination step to control growth.
class ZReducer {
public:
    explicit ZReducer(std::size_t ncols) : ncols_(ncols) {}

    bool insert(std::vector<mpz_class> row) {
        for (const auto& piv : pivots_) {
            if (row[piv.col] == 0) continue;
            combine(row, piv.row, piv.col);
            normalize(row);
        }
        std::size_t lead = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (row[j] != 0) { lead = j; break; }
        if (lead == ncols_) return false;
        normalize(row);
        if (row[lead] < 0)
            for (auto& v : row) v = -v;
        for (auto& piv : pivots_) {
            if (piv.row[lead] == 0) continue;
            combine(piv.row, row, lead);
            normalize(piv.row);
            if (piv.row[piv.col] < 0)
                for (auto& v : piv.row) v = -v;
        }
        Pivot pv{lead, std::move(row)};
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pv,
                                    [](const Pivot& a, const Pivot& b) { return a.col < b.col; });
        pivots_.insert(pos, std::move(pv));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    // target := target * piv[col] - piv * target[col]; clears target[col].
    void combine(std::vector<mpz_class>& target, const std::vector<mpz_class>& piv,
                 std::size_t col) const {
        mpz_class a = piv[col], b = target[col];
        for (std::size_t j = 0; j < ncols_; ++j) target[j] = target[j] * a - piv[j] * b;
    }

    void normalize(std::vector<mpz_class>& row) const {
        mpz_class g = 0;
        for (const auto& v : row) {
            if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto& v : row)
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    struct Pivot {
        std::size_t col;
        std::vector<mpz_class> row;
    };
    std::size_t ncols_;
    std::vector<Pivot> pivots_;
};

// Uniform front-end: sparse field rows in, rank out.
class Reducer {
public:
    Reducer(std::size_t ncols, const Field& f) : field_(f) {
        if (f.is_prime_field())
            fp_.emplace(ncols, f.characteristic());
        else
            z_.emplace(ncols);
        ncols_ = ncols;
    }

    void insert(const std::vector<std::pair<std::size_t, FieldElem>>& entries) {
        if (entries.empty()) return;
        if (fp_) {
            std::vector<std::uint64_t> row(ncols_, 0);
            for (const auto& [j, c] : entries) row[j] = static_cast<std::uint64_t>(c.residue());
            fp_->insert(std::move(row));
        } else {
            mpz_class lcm = 1;
            for (const auto& [j, c] : entries)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
            std::vector<mpz_class> row(ncols_, 0);
            for (const auto& [j, c] : entries)
                row[j] = c.rational().get_num() * (lcm / c.rational().get_den());
            z_->insert(std::move(row));
        }
    }

    std::size_t rank() const { return fp_ ? fp_->rank() : z_->rank(); }

private:
    Field field_;
    std::size_t ncols_ = 0;
    std::optional<FpReducer> fp_;
    std::optional<ZReducer> z_;
};

// --- generator bookkeeping ----------------------------------------------

void validate_gens(const GeneratorSet& gens, std::uint32_t min_degree) {
    for (const auto& g : gens.gens) {
        if (g.size() != gens.ambient_rank)
            throw std::invalid_argument("generator length differs from ambient rank");
        for (const Poly& comp : g) {
            require_same_field(comp.field(), gens.field);
            if (comp.nvars() != gens.nvars)
                throw std::invalid_argument("generator variable count mismatch");
            if (min_degree == 1) {
                auto o = comp.ord();
                if (o && *o == 0)
                    throw std::invalid_argument(
                        "generator has a unit component but ambient module is m*F");
            }
        }
    }
}

std::optional<std::uint32_t> gen_ord(const std::vector<Poly>& g) {
    std::optional<std::uint32_t> o;
    for (const Poly& comp : g) {
        auto oc = comp.ord();
        if (oc && (!o || *oc < *o)) o = oc;
    }
    return o;
}

// A generator is homogeneous when all terms across components share one
// total degree; the span then splits as a direct sum over degrees and each
// graded block can be reduced independently (and cached across caps).
std::optional<std::uint32_t> homogeneous_degree(const std::vector<Poly>& g) {
    std::optional<std::uint32_t> deg;
    for (const Poly& comp : g) {
        if (comp.is_zero()) continue;
        if (!comp.is_homogeneous()) return std::nullopt;
        std::uint32_t d = *comp.degree();
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<std::uint32_t>(0);  // zero generator: harmless
}

bool all_homogeneous(const GeneratorSet& gens) {
    for (const auto& g : gens.gens) {
        bool zero = std::all_of(g.begin(), g.end(), [](const Poly& p) { return p.is_zero(); });
        if (zero) continue;
        if (!homogeneous_degree(g)) return false;
    }
    return true;
}

class MonomialIndex {
public:
    explicit MonomialIndex(const std::vector<Monomial>& mons) {
        for (std::size_t i = 0; i < mons.size(); ++i) idx_.emplace(mons[i], i);
    }
    std::optional<std::size_t> find(const Monomial& m) const {
        auto it = idx_.find(m);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::map<Monomial, std::size_t, MonomialLess> idx_;
};

// Rank of the degree-d graded piece of the span.
std::uint64_t block_defect(const GeneratorSet& gens, std::uint32_t d) {
    auto mons = monomials_of_degree(gens.nvars, d);
    MonomialIndex index(mons);
    std::size_t dim = gens.ambient_rank * mons.size();
    Reducer red(dim, gens.field);
    for (const auto& g : gens.gens) {
        auto deg = homogeneous_degree(g);
        FINDET_CHECK(deg.has_value(), "block_defect on inhomogeneous generator");
        bool zero = std::all_of(g.begin(), g.end(), [](const Poly& p) { return p.is_zero(); });
        if (zero || *deg > d) continue;
        for (const auto& alpha : monomials_of_degree(gens.nvars, d - *deg)) {
            std::vector<std::pair<std::size_t, FieldElem>> row;
            for (std::size_t c = 0; c < gens.ambient_rank; ++c)
                for (const auto& [m, coef] : g[c].terms()) {
                    auto pos = index.find(m * alpha);
                    FINDET_CHECK(pos.has_value(), "graded block index miss");
                    row.emplace_back(c * mons.size() + *pos, coef);
                }
            red.insert(row);
        }
    }
    return dim - red.rank();
}

std::uint64_t generic_span_codim(const GeneratorSet& gens, std::uint32_t degree,
                                 std::uint32_t min_degree) {
    auto mons = monomials_below(gens.nvars, degree, min_degree);
    MonomialIndex index(mons);
    std::size_t dim = gens.ambient_rank * mons.size();
    Reducer red(dim, gens.field);
    for (const auto& g : gens.gens) {
        auto o = gen_ord(g);
        if (!o) continue;  // zero generator
        std::uint32_t max_alpha = degree - std::min(degree, *o);
        for (const auto& alpha : monomials_below(gens.nvars, max_alpha, 0)) {
            std::vector<std::pair<std::size_t, FieldElem>> row;
            for (std::size_t c = 0; c < gens.ambient_rank; ++c)
                for (const auto& [m, coef] : g[c].terms()) {
                    Monomial shifted = m * alpha;
                    if (shifted.degree() >= degree) continue;
                    auto pos = index.find(shifted);
                    FINDET_CHECK(pos.has_value(), "jet basis index miss");
                    row.emplace_back(c * mons.size() + *pos, coef);
                }
            red.insert(row);
        }
    }
    return dim - red.rank();
}

}  // namespace

std::uint64_t span_codim_at(const GeneratorSet& gens, std::uint32_t degree,
                            std::uint32_t min_degree) {
    if (degree < 1) throw std::invalid_argument("jet degree must be >= 1");
    if (min_degree > 1) throw std::invalid_argument("min_degree must be 0 or 1");
    validate_gens(gens, min_degree);
    if (all_homogeneous(gens)) {
        std::uint64_t codim = 0;
        for (std::uint32_t d = min_degree; d < degree; ++d) codim += block_defect(gens, d);
        return codim;
    }
    return generic_span_codim(gens, degree, min_degree);
}

CodimResult codim_stabilized(const GeneratorSet& gens, std::uint32_t min_degree,
                             std::uint32_t degree_cap) {
    if (degree_cap < 2) throw std::invalid_argument("degree cap must be >= 2");
    if (min_degree > 1) throw std::invalid_argument("min_degree must be 0 or 1");
    validate_gens(gens, min_degree);

    CodimResult res;
    const bool graded = all_homogeneous(gens);
    std::uint64_t cum = 0;
    for (std::uint32_t D = 1; D <= degree_cap; ++D) {
        std::uint64_t c;
        if (graded) {
            if (D - 1 >= min_degree) cum += block_defect(gens, D - 1);
            c = cum;
        } else {
            c = generic_span_codim(gens, D, min_degree);
        }
        res.profile.push_back(c);
        if (D >= 2 && res.profile[D - 1] == res.profile[D - 2]) {
            res.status = CodimResult::Status::Finite;
            res.codim = c;
            res.stab_degree = D - 1;
            return res;
        }
    }
    res.status = CodimResult::Status::Inconclusive;
    res.codim = res.profile.back();
    res.stab_degree = degree_cap;
    return res;
}

CodimResult ideal_codim(const GeneratorSet& gens, std::uint32_t degree_cap) {
    if (gens.ambient_rank != 1)
        throw std::invalid_argument("ideal_codim needs ambient rank 1");
    return codim_stabilized(gens, 0, degree_cap);
}

std::uint32_t minimal_k_containment(const GeneratorSet& gens, const CodimResult& certified) {
    if (!certified.is_finite())
        throw std::invalid_argument("minimal_k_containment needs a Finite certificate");
    if (gens.ambient_rank != 1)
        throw std::invalid_argument("minimal_k_containment needs ambient rank 1");
    // codim of I + m^k equals the codim of I at jet cap k, so k_min is the
    // first cap whose profile value reaches the certified codim.
    for (std::uint32_t k = 1; k <= certified.stab_degree + 1; ++k)
        if (span_codim_at(gens, k, 0) == certified.codim) return k;
    FINDET_CHECK(false, "containment degree exceeds stabilization degree");
    return 0;
}

}  // namespace findet
