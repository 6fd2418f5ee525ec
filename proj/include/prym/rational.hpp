// Exact rational scalars for the whole toolkit. Everything downstream
// (divisor classes, lattice Gram matrices, the LP certifier) is computed
// over these; no floating point appears anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace prym {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not reduce; GMP arithmetic assumes canonical
// form, so every fraction built from a numerator/denominator pair must go
// through here.
inline Rat rat_frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" (decimal digits only). The result is reduced
// with a positive denominator. Throws std::invalid_argument on malformed
// input or a zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("rational: empty string");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw std::invalid_argument("rational: bad character in '" + s + "'");
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise; never a decimal expansion.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace prym
