#include "findet/poly.hpp"

#include <sstream>

namespace findet {

namespace {

void require_compatible(const Poly& f, const Poly& g) {
    require_same_field(f.field(), g.field());
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("variable count mismatch: " + std::to_string(f.nvars()) +
                                    " vs " + std::to_string(g.nvars()));
}

}  // namespace

Poly Poly::constant(const Field& f, std::size_t nvars, const FieldElem& c) {
    Poly p(f, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::constant(const Field& f, std::size_t nvars, long long c) {
    return constant(f, nvars, FieldElem::from_int(f, c));
}

Poly Poly::variable(const Field& f, std::size_t nvars, std::size_t v) {
    return term(f, nvars, Monomial::power(nvars, v, 1), FieldElem::from_int(f, 1));
}

Poly Poly::term(const Field& f, std::size_t nvars, const Monomial& m, const FieldElem& c) {
    Poly p(f, nvars);
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m, const FieldElem& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    require_same_field(field_, c.field());
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElem Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem(field_) : it->second;
}

Poly Poly::operator-() const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    Poly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    Poly r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    Poly r(f.field_, f.nvars_);
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
    return r;
}

Poly Poly::mul_trunc(const Poly& f, const Poly& g, std::uint32_t degree_cap) {
    require_compatible(f, g);
    Poly r(f.field_, f.nvars_);
    for (const auto& [mf, cf] : f.terms_) {
        if (mf.degree() >= degree_cap) break;  // terms are degree-sorted
        for (const auto& [mg, cg] : g.terms_) {
            if (mf.degree() + mg.degree() >= degree_cap) break;
            r.add_term(mf * mg, cf * cg);
        }
    }
    return r;
}

bool operator==(const Poly& f, const Poly& g) {
    require_compatible(f, g);
    if (f.terms_.size() != g.terms_.size()) return false;
    auto it = g.terms_.begin();
    for (const auto& [m, c] : f.terms_) {
        if (m != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Poly Poly::scaled(const FieldElem& c) const {
    require_same_field(field_, c.field());
    Poly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cf] : terms_) r.add_term(m, cf * c);
    return r;
}

Poly Poly::mul_monomial(const Monomial& m, const FieldElem& c) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    Poly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mf, cf] : terms_) r.terms_.emplace(mf * m, cf * c);
    return r;
}

std::optional<std::uint32_t> Poly::ord() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

std::optional<std::uint32_t> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Poly Poly::partial(std::size_t v) const {
    if (v >= nvars_) throw std::out_of_range("variable index out of range");
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        auto exps = m.exponents();
        exps[v] -= 1;
        // The exponent acts through the field, so char(K) | e kills the term.
        r.add_term(Monomial(std::move(exps)), c * FieldElem::from_int(field_, e));
    }
    return r;
}

Poly Poly::truncate(std::uint32_t degree_cap) const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() >= degree_cap) break;
        r.terms_.emplace(m, c);
    }
    return r;
}

Poly Poly::substitute(std::span<const Poly> images, std::uint32_t degree_cap) const {
    if (images.size() != nvars_)
        throw std::invalid_argument("substitution needs one image per variable");
    for (const Poly& phi : images) {
        require_same_field(field_, phi.field());
        if (!phi.coeff(Monomial(phi.nvars())).is_zero())
            throw std::invalid_argument("substitution image has a nonzero constant term");
    }
    std::size_t out_vars = images.empty() ? nvars_ : images[0].nvars();
    // Per-variable power cache: powers[v][k] = phi_v^k mod m^degree_cap.
    std::vector<std::vector<Poly>> powers(nvars_);
    Poly result(field_, out_vars);
    for (const auto& [m, c] : terms_) {
        Poly prod = Poly::constant(field_, out_vars, c);
        for (std::size_t v = 0; v < nvars_ && !prod.is_zero(); ++v) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(Poly::constant(field_, out_vars, 1));
            while (pw.size() <= e)
                pw.push_back(mul_trunc(pw.back(), images[v], degree_cap));
            prod = mul_trunc(prod, pw[e], degree_cap);
        }
        result += prod;
    }
    return result;
}

Poly Poly::div_by_monomial(const Monomial& m) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    Poly r(field_, nvars_);
    for (const auto& [mf, c] : terms_) {
        if (!m.divides(mf))
            throw std::domain_error("term " + mf.to_string() + " not divisible by " +
                                    m.to_string());
        r.terms_.emplace(m.quotient_of(mf), c);
    }
    return r;
}

Poly Poly::div_exact(const Poly& g) const {
    require_compatible(*this, g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(field_, nvars_);
    Poly rem = *this;
    const auto& glt = *g.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms_.rbegin();
        if (!glt.first.divides(rlt.first))
            throw std::domain_error("inexact polynomial division");
        Monomial qm = glt.first.quotient_of(rlt.first);
        FieldElem qc = rlt.second / glt.second;
        q.add_term(qm, qc);
        rem -= g.mul_monomial(qm, qc);
    }
    return q;
}

FieldElem Poly::eval(std::span<const FieldElem> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    FieldElem acc(field_);
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (std::size_t v = 0; v < nvars_; ++v)
            if (m.exponent(v) > 0) t = t * point[v].pow(m.exponent(v));
        acc += t;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (highest) term first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->first.is_constant())
            os << it->second.to_string();
        else if (it->second.is_one())
            os << it->first.to_string();
        else
            os << it->second.to_string() << "*" << it->first.to_string();
    }
    return os.str();
}

}  // namespace findet
