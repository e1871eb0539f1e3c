#include "centrum/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "centrum/errors.hpp"

namespace centrum {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v > i128(kMin) && v <= i128(kMax); }

mpz_class mpz_from_i64(std::int64_t v) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

std::int64_t mod_reduce(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t mod_inverse(std::int64_t x, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = x;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw ArithmeticError("residue is not invertible");
    return t < 0 ? t + p : t;
}

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Scalar::Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    i128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(abs128(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        *this = from_mpq(mpq_class(mpz_from_i64(num), mpz_from_i64(den)));
    }
}

Scalar::Scalar(const mpq_class& q) { *this = from_mpq(q); }

Scalar Scalar::from_mpq(const mpq_class& q_in) {
    mpq_class q(q_in);
    q.canonicalize();
    Scalar s;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        long nl = mpz_get_si(n.get_mpz_t());
        if (nl != kMin) {
            s.num_ = nl;
            s.den_ = mpz_get_si(d.get_mpz_t());
            return s;
        }
    }
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar Scalar::residue(std::int64_t value, std::uint32_t prime) {
    if (prime < 2) throw ArithmeticError("modulus must be a prime >= 2");
    Scalar s;
    std::int64_t r = value % static_cast<std::int64_t>(prime);
    if (r < 0) r += prime;
    s.num_ = r;
    s.mod_ = prime;
    return s;
}

Scalar Scalar::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view ns = text.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(ns) || !valid_integer_text(ds) || ds.front() == '-' || ds.front() == '+')
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    std::string nstr(ns.front() == '+' ? ns.substr(1) : ns);
    mpz_class n(nstr, 10), d(std::string(ds), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return from_mpq(mpq_class(n, d));
}

Scalar Scalar::parse(std::string_view text, std::uint32_t prime) {
    Scalar s = parse(text);
    return prime == 0 ? s : s.to_field(prime);
}

int Scalar::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Scalar::numerator() const {
    if (big_) return big_->get_num();
    return mpz_from_i64(num_);
}

mpz_class Scalar::denominator() const {
    if (big_) return big_->get_den();
    return mpz_from_i64(den_);
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

std::string Scalar::str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::to_field(std::uint32_t prime) const {
    if (mod_ == prime) return *this;
    if (mod_ != 0) throw ArithmeticError("scalars from different prime fields");
    std::int64_t n = big_ ? mod_reduce(big_->get_num(), prime) : mod_reduce(mpz_from_i64(num_), prime);
    std::int64_t d = big_ ? mod_reduce(big_->get_den(), prime) : mod_reduce(mpz_from_i64(den_), prime);
    if (d == 0) throw ArithmeticError("denominator vanishes modulo " + std::to_string(prime));
    return residue(n * mod_inverse(d, prime) % prime, prime);
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
    if (a.mod_ == b.mod_) return a.mod_;
    if (a.mod_ == 0) return b.mod_;
    if (b.mod_ == 0) return a.mod_;
    throw ArithmeticError("scalars from different prime fields");
}

Scalar Scalar::operator-() const {
    if (mod_) return residue(num_ == 0 ? 0 : mod_ - num_, mod_);
    if (big_) return from_mpq(-*big_);
    Scalar s = *this;
    s.num_ = -num_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (mod_) return residue(mod_inverse(num_, mod_), mod_);
    if (big_) return from_mpq(1 / *big_);
    return num_ < 0 ? Scalar(-den_, -num_) : Scalar(den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.mod_ | b.mod_) {
        std::uint32_t p = Scalar::common_modulus(a, b);
        Scalar x = a.to_field(p), y = b.to_field(p);
        return Scalar::residue((x.num_ + y.num_) % p, p);
    }
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != kMin) {
                Scalar s;
                s.num_ = r;
                return s;
            }
        } else {
            i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
            i128 d = i128(a.den_) * b.den_;
            u128 g = gcd128(abs128(n), u128(d));
            if (g > 1) {
                n /= i128(g);
                d /= i128(g);
            }
            if (n == 0) return Scalar();
            if (fits(n) && fits(d)) {
                Scalar s;
                s.num_ = static_cast<std::int64_t>(n);
                s.den_ = static_cast<std::int64_t>(d);
                return s;
            }
        }
    }
    return Scalar::from_mpq(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.mod_ | b.mod_) {
        std::uint32_t p = Scalar::common_modulus(a, b);
        Scalar x = a.to_field(p), y = b.to_field(p);
        return Scalar::residue(x.num_ * y.num_ % p, p);
    }
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != kMin) {
                Scalar s;
                s.num_ = r;
                return s;
            }
        }
        std::int64_t g1 = std::gcd(a.num_, b.den_);
        std::int64_t g2 = std::gcd(b.num_, a.den_);
        i128 n = i128(a.num_ / g1) * (b.num_ / g2);
        i128 d = i128(a.den_ / g2) * (b.den_ / g1);
        if (fits(n) && fits(d)) {
            Scalar s;
            s.num_ = static_cast<std::int64_t>(n);
            s.den_ = static_cast<std::int64_t>(d);
            return s;
        }
    }
    return Scalar::from_mpq(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!(mod_ | a.mod_ | b.mod_) && !big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &r) && r != kMin) {
            num_ = r;
            return;
        }
    }
    *this = *this + a * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mod_ != b.mod_) {
        std::uint32_t p = Scalar::common_modulus(a, b);
        return a.to_field(p).num_ == b.to_field(p).num_;
    }
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.mod_ | b.mod_) {
        std::uint32_t p = Scalar::common_modulus(a, b);
        return a.to_field(p).num_ < b.to_field(p).num_;
    }
    if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::size_t Scalar::hash() const {
    if (big_) return std::hash<std::string>{}(str());
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace centrum
