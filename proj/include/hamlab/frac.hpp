#ifndef HAMLAB_FRAC_HPP
#define HAMLAB_FRAC_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hamlab {

// Exact rational on int64 with overflow detection. Densities, tiling
// weights and degree targets all live on small denominators, so 64 bits
// with a checked 128-bit intermediate is plenty.
class Frac {
public:
    constexpr Frac() : num_(0), den_(1) {}
    Frac(long long n) : num_(n), den_(1) {}
    Frac(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Frac: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }
    Frac operator-() const { return Frac(-num_, den_); }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    // largest integer m with m*q <= *this (q > 0)
    long long floor_div(const Frac& q) const {
        if (q.num_ <= 0) throw std::domain_error("Frac::floor_div: q <= 0");
        i128 n = i128(num_) * q.den_;
        i128 d = i128(den_) * q.num_;
        i128 r = n / d;
        if (r * d > n) r -= 1;
        return (long long)r;
    }

    // true iff *this is an integer multiple of q
    bool multiple_of(const Frac& q) const {
        if (q.num_ == 0) return num_ == 0;
        i128 n = i128(num_) * q.den_;
        i128 d = i128(den_) * q.num_;
        return d != 0 && n % d == 0;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Frac& f) {
        return os << f.str();
    }

    // gcd of two positive rationals: gcd(a/b, c/d) = gcd(a*d, c*b)/(b*d)
    static Frac gcd(const Frac& a, const Frac& b) {
        if (a.num_ == 0) return b;
        if (b.num_ == 0) return a;
        i128 x = i128(a.num_ < 0 ? -a.num_ : a.num_) * b.den_;
        i128 y = i128(b.num_ < 0 ? -b.num_ : b.num_) * a.den_;
        while (y != 0) { i128 t = x % y; x = y; y = t; }
        return make(x, i128(a.den_) * b.den_);
    }

    // parses "a", "a/b" or a plain decimal like "0.25"
    static Frac parse(const std::string& s);

private:
    using i128 = __int128;
    long long num_;
    long long den_;

    static Frac make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n;
        i128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Frac: overflow");
        Frac f;
        f.num_ = (long long)n;
        f.den_ = (long long)d;
        return f;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void normalize() {
        *this = make(num_, den_);
    }
};

inline Frac Frac::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Frac(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Frac(std::stoll(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.size() > 15) fp = fp.substr(0, 15);
    long long den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    long long in = ip.empty() || ip == "-" ? 0 : std::stoll(ip);
    long long fn = fp.empty() ? 0 : std::stoll(fp);
    bool neg = !ip.empty() && ip[0] == '-';
    long long num = in * den + (neg ? -fn : fn);
    return Frac(num, den);
}

}  // namespace hamlab

#endif
