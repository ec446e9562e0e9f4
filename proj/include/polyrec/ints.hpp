#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polyrec {

using Int = mpz_class;
using Rat = mpq_class;

struct inconsistent_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_applicable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int pow2(unsigned long e) { return pow_int(2, e); }

// canonical residue in [0, m)
inline Int mod_canon(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divisible(const Int& x, const Int& d) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int div_exact(const Int& x, const Int& d, const char* what = "exact division") {
    if (d == 0 || !divisible(x, d))
        throw inconsistent_error(std::string(what) + ": " + x.get_str() + " not divisible by " + d.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

// p-adic valuation; requires x != 0
inline int valuation(const Int& x, const Int& p) {
    if (x == 0) throw std::invalid_argument("valuation of 0 is infinite");
    if (p == 2) return (int)mpz_scan1(x.get_mpz_t(), 0);
    int v = 0;
    Int y = abs(x);
    while (divisible(y, p)) {
        y = div_exact(y, p);
        ++v;
    }
    return v;
}

inline int v2(long m) {
    if (m == 0) throw std::invalid_argument("v2(0) is infinite");
    int v = 0;
    while ((m & 1) == 0) { m >>= 1; ++v; }
    return v;
}

inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q, const char* what = "rational-to-integer") {
    if (!is_integer(q)) throw inconsistent_error(std::string(what) + ": " + q.get_str() + " is not an integer");
    return q.get_num();
}

}  // namespace polyrec
