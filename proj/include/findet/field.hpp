// Exact field arithmetic over Q (arbitrary precision) and prime fields F_p.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace findet {

// A field is either Q or F_p with p prime, p < 2^31 so that products of
// residues fit in a 64-bit word.
class Field {
public:
    Field() = default;  // Q

    static Field rationals() { return Field(); }
    static Field prime_field(std::int64_t p);

    std::int64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    std::string to_string() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_ = 0;  // 0 means Q
};

bool is_prime(std::int64_t n);

// Immutable field element in canonical form: reduced fraction over Q
// (positive denominator), residue in [0, p) over F_p.
class FieldElem {
public:
    explicit FieldElem(const Field& f) : field_(f) {}  // zero

    static FieldElem from_int(const Field& f, long long v);
    static FieldElem from_fraction(const Field& f, long long num, long long den);
    static FieldElem from_mpq(const Field& f, const mpq_class& q);
    // Accepts "n" or "n/d" over Q, a decimal integer over F_p.
    static FieldElem parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string to_string() const;

    // Raw accessors for the linear-algebra kernels.
    std::int64_t residue() const { return r_; }
    const mpq_class& rational() const { return q_; }

private:
    Field field_;
    std::int64_t r_ = 0;  // F_p representative
    mpq_class q_ = 0;     // Q value
};

void require_same_field(const Field& a, const Field& b);

}  // namespace findet
