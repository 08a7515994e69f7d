#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tropfan {

namespace detail {

inline long long narrow128(__int128 v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min()) {
        throw std::overflow_error("exact rational arithmetic left the 64-bit range");
    }
    return static_cast<long long>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

/// Exact rational number with 64-bit numerator and denominator.
/// Always kept in lowest terms with a positive denominator; every
/// operation routes intermediates through 128-bit integers and throws
/// std::overflow_error instead of wrapping.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : Rat(make(static_cast<__int128>(n), static_cast<__int128>(d))) {}

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::invalid_argument("division by zero rational");
        return make(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = detail::narrow128(-static_cast<__int128>(num_));
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parse a rational written in canonical form: "0", "-7", "2/3", "-5/9".
    /// Rejects anything else ("+1", "2/4", "3/1", "-0", "02", "1/-2", ...).
    static Rat parse(const std::string& s) {
        auto bad = [&]() -> Rat {
            throw std::invalid_argument("non-canonical rational literal: \"" + s + "\"");
        };
        auto slash = s.find('/');
        std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
        std::string ds = slash == std::string::npos ? "" : s.substr(slash + 1);
        if (!valid_int_literal(ns, /*allow_sign=*/true)) return bad();
        if (slash != std::string::npos) {
            if (!valid_int_literal(ds, /*allow_sign=*/false)) return bad();
            if (ds == "1" || ns == "0") return bad(); // canonical forms: "n", never "n/1" or "0/d"
        }
        long long n = parse_ll(s, ns);
        long long d = slash == std::string::npos ? 1 : parse_ll(s, ds);
        Rat r(n, d);
        if (r.num() != n || r.den() != d) return bad(); // not in lowest terms
        return r;
    }

private:
    static bool valid_int_literal(const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && t[i] == '-') ++i;
        if (i >= t.size()) return false;
        if (t[i] == '0') return i + 1 == t.size() && i == 0; // bare "0" only, no "-0"
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    }
    static long long parse_ll(const std::string& whole, const std::string& t) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(t, &pos);
            if (pos != t.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("rational literal out of range: \"" + whole + "\"");
        }
    }
    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num_ = detail::narrow128(n);
        r.den_ = detail::narrow128(d);
        return r;
    }

    long long num_;
    long long den_;
};

} // namespace tropfan
