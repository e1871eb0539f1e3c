#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace centrum {

// Exact field element. A scalar is either a rational number or a residue
// modulo a prime p (p < 2^31). Rationals are kept as a reduced int64 pair and
// promoted to GMP on overflow, so the common small case stays allocation free.
//
// Rationals mix freely with residues: a rational operand is mapped into GF(p)
// (its denominator must be invertible mod p). Mixing two different primes is
// an error.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : num_(v) {}
    Scalar(long v) : num_(v) {}
    Scalar(long long v) : num_(v) {}
    Scalar(std::int64_t num, std::int64_t den);
    explicit Scalar(const mpq_class& q);

    static Scalar residue(std::int64_t value, std::uint32_t prime);
    // Accepts "p", "p/q", "-p/q" with arbitrary-size integers.
    static Scalar parse(std::string_view text);
    static Scalar parse(std::string_view text, std::uint32_t prime);

    std::uint32_t modulus() const { return mod_; }
    bool is_rational() const { return mod_ == 0; }
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const;

    // Rational parts; residues report themselves as r/1.
    mpz_class numerator() const;
    mpz_class denominator() const;
    mpq_class to_mpq() const;

    // Canonical text "p/q" (q > 0, gcd 1; residues as "r/1").
    std::string str() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    // this += a * b, the inner loop of elimination.
    void add_product(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Total order on rationals; residues compare by representative.
    friend bool operator<(const Scalar& a, const Scalar& b);

    std::size_t hash() const;

private:
    static Scalar from_mpq(const mpq_class& q);
    Scalar to_field(std::uint32_t prime) const;
    static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;  // set only when num_/den_ overflow
    std::uint32_t mod_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace centrum
