#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace mss {

// Exact integer with an int64 fast path. Values that overflow int64 are
// promoted to an mpz and demoted again once they fit.
class Integer {
public:
    Integer() = default;
    Integer(int v) : small_(v) {}
    Integer(long v) : small_(v) {}
    Integer(long long v) : small_(v) {}
    explicit Integer(const mpz_class& v) { assign(v); }
    explicit Integer(const std::string& decimal);

    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o)
    {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    bool is_small() const { return !big_; }
    bool fits_int64() const { return !big_; }
    int64_t to_int64() const;
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
    std::string str() const;

    int sign() const;
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o);
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    // Truncating division and remainder, as for built-in integers.
    friend Integer operator/(const Integer& a, const Integer& b);
    friend Integer operator%(const Integer& a, const Integer& b);

    friend int cmp(const Integer& a, const Integer& b);
    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

private:
    void assign(const mpz_class& v);

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
// Floor division and the matching remainder in [0, |b|) for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);
Integer pow(const Integer& base, unsigned e);

}  // namespace mss
