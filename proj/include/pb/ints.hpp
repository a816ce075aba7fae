#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pb {

using Int = boost::multiprecision::cpp_int;

// Thrown when a configurable cap (enumeration size, face count, group order)
// would be exceeded.  Callers can retry with a higher cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Usage errors: preconditions violated by the caller.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline int mobius(long d) {
    int r = 1;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            r = -r;
        }
    }
    if (d > 1) r = -r;
    return r;
}

inline Int multinomial(long n, const std::vector<long>& ks) {
    Int r = factorial(n);
    for (long k : ks) r /= factorial(k);
    return r;
}

inline long gcd_of(const std::vector<long>& xs) {
    long g = 0;
    for (long x : xs) g = std::gcd(g, x);
    return g;
}

inline Int bell_number(int n) {
    // Bell triangle
    std::vector<Int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.push_back(row.back());
        for (size_t j = 0; j < row.size(); ++j) next.push_back(next.back() + row[j]);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace pb
