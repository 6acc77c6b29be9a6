#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace injscheme {

// Exact arithmetic everywhere outside the per-injection hot loops.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// n! / (n-k)!, the number of injections from [k] to [n].
inline Int falling_factorial(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
    Int r = 1;
    for (long i = n - k + 1; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Quotient that must be exact; integrality failures signal upstream bugs.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::runtime_error(std::string("exact_div: non-exact division in ") + what);
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline std::string to_dec(const Int& v) { return v.get_str(10); }

inline Int int_from_dec(const std::string& s) {
    Int v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("int_from_dec: bad integer literal '" + s + "'");
    return v;
}

// "p/q" with q omitted when 1; matches the machine-readable output format.
inline std::string to_frac(const Rat& q) {
    std::string s = q.get_num().get_str(10);
    if (q.get_den() != 1) s += "/" + q.get_den().get_str(10);
    return s;
}

inline Rat rat_from_frac(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_frac: bad rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

// FNV-1a, used for cache content checksums.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace injscheme
