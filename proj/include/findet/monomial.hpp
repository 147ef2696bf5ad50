// Monomials in s variables with the degree-then-lex term order.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace findet {

class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps)
        : e_(std::move(exps)), deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

    static Monomial power(std::size_t nvars, std::size_t var, std::uint32_t k) {
        Monomial m(nvars);
        if (var >= nvars) throw std::out_of_range("variable index out of range");
        m.e_[var] = k;
        m.deg_ = k;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint32_t exponent(std::size_t v) const { return e_[v]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    bool is_constant() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Quotient o -> o / *this is handled by the caller as quotient_of.
    Monomial quotient_of(const Monomial& num) const {
        Monomial r(num);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] > num.e_[i])
                throw std::domain_error("monomial division not exact");
            r.e_[i] -= e_[i];
        }
        r.deg_ -= deg_;
        return r;
    }

    // Total order: degree first, ties broken lexicographically on the
    // exponent vector (first differing exponent decides).
    friend int compare(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

    std::string to_string() const;

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a < b; }
};

// All monomials of total degree exactly d, ascending in the term order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

// All monomials with degree in [min_degree, degree_cap), ascending.
std::vector<Monomial> monomials_below(std::size_t nvars, std::uint32_t degree_cap,
                                      std::uint32_t min_degree = 0);

}  // namespace findet
