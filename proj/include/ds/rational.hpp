#ifndef DS_RATIONAL_HPP
#define DS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ds {

// Exact rational scalar used everywhere; no floating point in this project.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// "num/den" with the slash omitted for integers; canonical sign on numerator.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace ds

#endif
