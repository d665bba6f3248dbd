#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace torvex {

// All arithmetic in the library is exact. No floating point anywhere.
//
// Coefficients throughout (structure constants, Schur expansion terms,
// straightening coefficients) are tiny, so an int64 rational with __int128
// intermediates is ample. Every operation checks its result still fits;
// on overflow it throws instead of ever returning a wrong value.
using Int = long long;

class Rat {
  public:
    Rat() = default;
    template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
    Rat(T n) : num_(static_cast<long long>(n)), den_(1)
    {
    }
    Rat(long long n, long long d) : num_(n), den_(d)
    {
        if (den_ == 0)
            throw std::invalid_argument("zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rat operator-(const Rat& a) { return Rat(unchecked{}, -a.num_, a.den_); }

    Rat& operator+=(const Rat& o)
    {
        __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        assign(n, d);
        return *this;
    }
    Rat& operator-=(const Rat& o)
    {
        __int128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        assign(n, d);
        return *this;
    }
    Rat& operator*=(const Rat& o)
    {
        assign(i128(num_) * o.num_, i128(den_) * o.den_);
        return *this;
    }
    Rat& operator/=(const Rat& o)
    {
        if (o.num_ == 0)
            throw std::invalid_argument("division by zero");
        assign(i128(num_) * o.den_, i128(den_) * o.num_);
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        __int128 l = i128(a.num_) * b.den_;
        __int128 r = i128(b.num_) * a.den_;
        return l < r ? std::strong_ordering::less
               : l > r ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

  private:
    struct unchecked {};
    Rat(unchecked, long long n, long long d) : num_(n), den_(d) {}

    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    void assign(__int128 n, __int128 d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        n /= g;
        d /= g;
        constexpr __int128 lo = -__int128(INT64_MAX) - 1;
        if (n > INT64_MAX || n < lo || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }

    void normalize()
    {
        assign(i128(num_), i128(den_));
    }

    static __int128 gcd128(__int128 a, __int128 b)
    {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Int numerator(const Rat& r)
{
    return r.num();
}
inline Int denominator(const Rat& r)
{
    return r.den();
}

inline std::string rat_to_string(const Rat& r)
{
    if (r.den() == 1)
        return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

// Parses "p", "-p" or "p/q". Throws on malformed input or q = 0.
inline Rat rat_from_string(const std::string& s)
{
    auto parse_int = [](const std::string& t) {
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size() || t.empty())
            throw std::invalid_argument("trailing characters");
        return v;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(parse_int(s));
        long long p = parse_int(s.substr(0, slash));
        long long q = parse_int(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

} // namespace torvex
