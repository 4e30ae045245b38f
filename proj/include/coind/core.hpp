#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coind {

/// Subsets of group/space carriers, indexed by dense element indices.
using ElemSet = boost::dynamic_bitset<>;

enum class ErrorKind { validation, budget, parse, usage, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_validation(const std::string& msg) { throw Error(ErrorKind::validation, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw Error(ErrorKind::budget, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw Error(ErrorKind::internal, "internal consistency fault: " + msg);
}

/// Enumeration limits. Operations refuse (never truncate) when exceeded.
struct Budget {
    int input_order = 24;          // largest group accepted as a primary input
    int hom_source_order = 8;      // largest source group for hom-set enumeration
    long hom_search = 2'000'000;   // cap on |target|^#generators image assignments
    int carrier_order = 512;       // largest constructed group (semidirect products, map carriers)
    long map_enum = 2'000'000;     // cap on brute-force map-space enumerations
    long opens_cap = 200'000;      // cap on materialised open-set families
    int subfiltration_order = 8;   // oracle_max_subfiltration: group order limit
    int subfiltration_len = 3;     // oracle_max_subfiltration: chain length limit

    /// Scale the order-shaped knobs from a base order n (default presets use n = 8).
    static Budget with_order(int n) {
        Budget b;
        if (n <= 0) fail_validation("budget order must be positive");
        b.input_order = 3 * n;
        b.hom_source_order = n;
        b.carrier_order = n * n * n;
        b.subfiltration_order = n;
        double scale = double(n) / 8.0;
        b.hom_search = long(2'000'000 * scale * scale);
        b.map_enum = long(2'000'000 * scale * scale);
        return b;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "input<=" << input_order << ",hom_src<=" << hom_source_order
           << ",carrier<=" << carrier_order << ",oracle<=" << subfiltration_order
           << "x" << subfiltration_len;
        return os.str();
    }
};

inline ElemSet empty_set(int n) { return ElemSet(static_cast<size_t>(n)); }

inline ElemSet full_set(int n) {
    ElemSet s(static_cast<size_t>(n));
    s.set();
    return s;
}

inline ElemSet singleton(int n, int x) {
    ElemSet s(static_cast<size_t>(n));
    s.set(static_cast<size_t>(x));
    return s;
}

inline ElemSet set_from(int n, const std::vector<int>& xs) {
    ElemSet s(static_cast<size_t>(n));
    for (int x : xs) {
        if (x < 0 || x >= n) fail_validation("element index " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1));
        s.set(static_cast<size_t>(x));
    }
    return s;
}

inline std::vector<int> elements(const ElemSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

inline std::string show_set(const ElemSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto i = s.find_first(); i != ElemSet::npos; i = s.find_next(i)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

/// Odometer over fixed-radix digit vectors; calls fn for every assignment.
template <typename Fn>
void for_each_tuple(int digits, long radix, Fn&& fn) {
    std::vector<int> tuple(static_cast<size_t>(digits), 0);
    while (true) {
        fn(tuple);
        int pos = digits - 1;
        while (pos >= 0) {
            if (++tuple[static_cast<size_t>(pos)] < radix) break;
            tuple[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return;
    }
}

inline long checked_pow(long base, int exp, long cap) {
    long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / (base > 0 ? base : 1)) return cap + 1;
        v *= base;
    }
    return v;
}

}  // namespace coind
