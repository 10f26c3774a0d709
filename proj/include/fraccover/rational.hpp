#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fraccover {

// Exact rational arithmetic. All quantities that the library reasons about
// (weights, cover numbers, LP optima, thresholds) are mpq_class values; no
// floating point is used anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// Parses "p" or "p/q" with arbitrary-precision integers.
inline Rat rat_parse(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    Int p(num), q(den);
    if (q == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
    Rat r(p);
    r /= Rat(q);
    return r;
}

// Canonical exact form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat acc(1);
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace fraccover
