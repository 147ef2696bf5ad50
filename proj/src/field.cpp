#include "findet/field.hpp"

namespace findet {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below 3.2e9.
bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n - 1)) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
        throw std::invalid_argument("prime field modulus must satisfy 2 <= p < 2^31");
    if (!is_prime(p))
        throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

void require_same_field(const Field& a, const Field& b) {
    if (a != b)
        throw std::invalid_argument("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

namespace {

std::int64_t mod_reduce(long long v, std::int64_t p) {
    std::int64_t r = static_cast<std::int64_t>(v % p);
    return r < 0 ? r + p : r;
}

// Extended Euclid inverse of a in [1, p).
std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    return t < 0 ? t + p : t;
}

}  // namespace

FieldElem FieldElem::from_int(const Field& f, long long v) {
    FieldElem e(f);
    if (f.is_rationals())
        e.q_ = mpq_class(static_cast<long>(v));
    else
        e.r_ = mod_reduce(v, f.characteristic());
    return e;
}

FieldElem FieldElem::from_fraction(const Field& f, long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    FieldElem e(f);
    if (f.is_rationals()) {
        e.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        e.q_.canonicalize();
    } else {
        std::int64_t p = f.characteristic();
        std::int64_t d = mod_reduce(den, p);
        if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
        e.r_ = mod_reduce(num, p) * mod_inv(d, p) % p;
    }
    return e;
}

FieldElem FieldElem::from_mpq(const Field& f, const mpq_class& q) {
    FieldElem e(f);
    if (f.is_rationals()) {
        e.q_ = q;
        e.q_.canonicalize();
    } else {
        std::int64_t p = f.characteristic();
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        std::int64_t n = num.get_si(), d = den.get_si();
        if (n < 0) n += p;
        if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
        e.r_ = n * mod_inv(d, p) % p;
    }
    return e;
}

FieldElem FieldElem::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty field element literal");
    auto slash = text.find('/');
    mpz_class num, den = 1;
    if (num.set_str(text.substr(0, slash), 10) != 0)
        throw std::invalid_argument("bad field element literal: " + text);
    if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0)
        throw std::invalid_argument("bad field element literal: " + text);
    if (den == 0) throw std::domain_error("zero denominator in literal: " + text);
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(f, q);
}

bool FieldElem::is_zero() const {
    return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool FieldElem::is_one() const {
    return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

FieldElem FieldElem::operator-() const {
    FieldElem e(field_);
    if (field_.is_rationals())
        e.q_ = -q_;
    else
        e.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
    return e;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    FieldElem e(field_);
    if (field_.is_rationals())
        e.q_ = 1 / q_;
    else
        e.r_ = mod_inv(r_, field_.characteristic());
    return e;
}

FieldElem FieldElem::pow(std::uint64_t n) const {
    FieldElem r = from_int(field_, 1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    FieldElem e(a.field_);
    if (a.field_.is_rationals()) {
        e.q_ = a.q_ + b.q_;
    } else {
        e.r_ = a.r_ + b.r_;
        if (e.r_ >= a.field_.characteristic()) e.r_ -= a.field_.characteristic();
    }
    return e;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    FieldElem e(a.field_);
    if (a.field_.is_rationals()) {
        e.q_ = a.q_ - b.q_;
    } else {
        e.r_ = a.r_ - b.r_;
        if (e.r_ < 0) e.r_ += a.field_.characteristic();
    }
    return e;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    FieldElem e(a.field_);
    if (a.field_.is_rationals())
        e.q_ = a.q_ * b.q_;
    else
        e.r_ = a.r_ * b.r_ % a.field_.characteristic();
    return e;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    return a * b.inv();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string FieldElem::to_string() const {
    if (!field_.is_rationals()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace findet
