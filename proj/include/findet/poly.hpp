// Sparse multivariate polynomials, standing in for power-series germs via
// explicit degree truncation. Terms are kept in a sorted map so iteration
// (and everything downstream) is deterministic.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "findet/field.hpp"
#include "findet/monomial.hpp"

namespace findet {

class Poly {
public:
    using TermMap = std::map<Monomial, FieldElem, MonomialLess>;

    Poly(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {}

    static Poly constant(const Field& f, std::size_t nvars, const FieldElem& c);
    static Poly constant(const Field& f, std::size_t nvars, long long c);
    static Poly variable(const Field& f, std::size_t nvars, std::size_t v);
    static Poly term(const Field& f, std::size_t nvars, const Monomial& m, const FieldElem& c);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Adds c * m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const FieldElem& c);
    FieldElem coeff(const Monomial& m) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    friend bool operator==(const Poly& f, const Poly& g);
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    Poly scaled(const FieldElem& c) const;
    Poly mul_monomial(const Monomial& m, const FieldElem& c) const;
    // Product with every term of total degree >= degree_cap dropped.
    static Poly mul_trunc(const Poly& f, const Poly& g, std::uint32_t degree_cap);

    // Minimal total degree of a nonzero term; nullopt is the Infinity
    // sentinel for the zero polynomial.
    std::optional<std::uint32_t> ord() const;
    std::optional<std::uint32_t> degree() const;
    bool is_homogeneous() const;

    Poly partial(std::size_t v) const;
    // Sum of the terms of total degree < degree_cap.
    Poly truncate(std::uint32_t degree_cap) const;
    // f(phi_1, ..., phi_s) mod m^degree_cap; every phi_i must have zero
    // constant term.
    Poly substitute(std::span<const Poly> images, std::uint32_t degree_cap) const;
    Poly div_by_monomial(const Monomial& m) const;
    // Exact quotient f / g; throws std::domain_error when not divisible.
    Poly div_exact(const Poly& g) const;
    FieldElem eval(std::span<const FieldElem> point) const;

    std::string to_string() const;

private:
    Field field_;
    std::size_t nvars_;
    TermMap terms_;
};

}  // namespace findet
