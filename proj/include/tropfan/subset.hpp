#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropfan {

using Mask = std::uint32_t;

/// Largest ground set we will ever touch; enumeration below is exponential,
/// so callers additionally pass an explicit cap (default 20).
inline constexpr int kMaxGroundHard = 30;
inline constexpr int kDefaultGroundCap = 20;

/// Hypothesis violations (loops, disconnectedness, non-essential input,
/// degenerate rank) are reported through this type so the CLI can name the
/// violated hypothesis and exit with a data error.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subset of the ground set {0, ..., n}, stored as a bitmask and treated
/// everywhere as its sorted element list. Ordering is lexicographic on that
/// list, which is the global tie-breaking rule for all enumerations.
class Subset {
public:
    Subset() = default;
    explicit Subset(Mask m) : bits_(m) {}

    static Subset of(std::initializer_list<int> xs) {
        Mask m = 0;
        for (int x : xs) {
            check_element(x);
            m |= Mask{1} << x;
        }
        return Subset(m);
    }
    static Subset from_elements(const std::vector<int>& xs) {
        Mask m = 0;
        for (int x : xs) {
            check_element(x);
            Mask b = Mask{1} << x;
            if (m & b) throw std::invalid_argument("duplicate element in subset");
            m |= b;
        }
        return Subset(m);
    }
    /// Strict variant for parsing canonical input: elements must be listed
    /// in increasing order without repeats.
    static Subset from_sorted(const std::vector<int>& xs) {
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (xs[i - 1] >= xs[i]) throw std::invalid_argument("subset not in canonical sorted order");
        return from_elements(xs);
    }
    static Subset full(int n) {
        if (n < 0 || n > kMaxGroundHard) throw std::invalid_argument("ground size out of range");
        return Subset(n == 0 ? 0 : (n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1));
    }
    static Subset single(int e) {
        check_element(e);
        return Subset(Mask{1} << e);
    }

    Mask mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int e) const { return e >= 0 && e < 32 && (bits_ >> e & 1); }
    bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

    Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
    Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
    Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
    Subset with(int e) const { return *this | single(e); }
    Subset complement_in(int n) const { return Subset(full(n).bits_ & ~bits_); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask m = bits_; m;) {
            int e = std::countr_zero(m);
            out.push_back(e);
            m &= m - 1;
        }
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const Subset& o) const { return bits_ == o.bits_; }
    bool operator!=(const Subset& o) const { return bits_ != o.bits_; }

    /// Lexicographic order on sorted element lists: {0,2} < {1}, {0} < {0,1}.
    bool operator<(const Subset& o) const {
        Mask a = bits_, b = o.bits_;
        while (a && b) {
            int ea = std::countr_zero(a), eb = std::countr_zero(b);
            if (ea != eb) return ea < eb;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    }

private:
    static void check_element(int e) {
        if (e < 0 || e >= kMaxGroundHard) throw std::invalid_argument("element label out of range");
    }
    Mask bits_ = 0;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const { return std::hash<Mask>{}(s.mask()); }
};

inline void validate_ground_size(int n, int cap) {
    if (n < 1) throw std::invalid_argument("ground set must have at least one element");
    if (cap < 1 || cap > kMaxGroundHard) throw std::invalid_argument("ground cap out of range");
    if (n > cap) {
        throw std::invalid_argument("ground set size " + std::to_string(n) +
                                    " exceeds the configured cap " + std::to_string(cap));
    }
}

} // namespace tropfan
