#include "mackeyss/integer.hpp"

#include <limits>
#include <stdexcept>

namespace mss {

Integer::Integer(const std::string& decimal)
{
    assign(mpz_class(decimal, 10));
}

void Integer::assign(const mpz_class& v)
{
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = v.get_si();
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(v);
    }
}

int64_t Integer::to_int64() const
{
    if (big_)
        throw std::overflow_error("Integer does not fit in int64");
    return small_;
}

std::string Integer::str() const
{
    return big_ ? big_->get_str() : std::to_string(small_);
}

int Integer::sign() const
{
    if (big_)
        return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const
{
    if (!big_ && small_ != std::numeric_limits<int64_t>::min())
        return Integer(static_cast<long long>(-small_));
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o)
{
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& o)
{
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& o)
{
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Integer operator/(const Integer& a, const Integer& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1))
        return Integer(static_cast<long long>(a.small_ / b.small_));
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_) {
        if (b.small_ == -1)
            return Integer(0);
        return Integer(static_cast<long long>(a.small_ % b.small_));
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

int cmp(const Integer& a, const Integer& b)
{
    if (!a.big_ && !b.big_)
        return (a.small_ > b.small_) - (a.small_ < b.small_);
    int c = ::cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

Integer abs(const Integer& a)
{
    return a.sign() < 0 ? -a : a;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    Integer r = a - q * b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0)))
        q -= Integer(1);
    return q;
}

Integer mod(const Integer& a, const Integer& m)
{
    if (m.is_zero())
        return a;
    Integer r = a % m;
    if (r.sign() < 0)
        r += abs(m);
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    if (a.is_small() && b.is_small()) {
        int64_t x = a.to_int64(), y = b.to_int64();
        if (x != std::numeric_limits<int64_t>::min() && y != std::numeric_limits<int64_t>::min()) {
            x = x < 0 ? -x : x;
            y = y < 0 ? -y : y;
            while (y) {
                int64_t t = x % y;
                x = y;
                y = t;
            }
            return Integer(static_cast<long long>(x));
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a.is_zero() || b.is_zero())
        return Integer(0);
    return abs(a / gcd(a, b) * b);
}

bool divides(const Integer& d, const Integer& a)
{
    if (d.is_zero())
        return a.is_zero();
    return (a % d).is_zero();
}

Integer pow(const Integer& base, unsigned e)
{
    Integer r(1), b = base;
    while (e) {
        if (e & 1u)
            r *= b;
        e >>= 1u;
        if (e)
            b *= b;
    }
    return r;
}

}  // namespace mss
