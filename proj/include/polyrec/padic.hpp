#pragma once

#include "polyrec/ints.hpp"

namespace polyrec {

// An integer known modulo p^prec. Division by p^j costs j bits of precision
// and asserts divisibility; the paper handles these congruences informally,
// here the precision travels with the value.
struct PadicResidue {
    Int p;
    int prec = 0;
    Int value;  // canonical in [0, p^prec)

    static PadicResidue from_exact(Int p, int prec, const Int& x) {
        if (prec < 0) throw std::invalid_argument("negative precision");
        Int m = pow_int(p, prec);
        return {std::move(p), prec, mod_canon(x, m)};
    }

    PadicResidue reduce_to(int new_prec) const {
        if (new_prec > prec) throw std::invalid_argument("cannot raise residue precision");
        return from_exact(p, new_prec, value);
    }

    PadicResidue add(const PadicResidue& o) const { return combine(o, value + o.value); }
    PadicResidue sub(const PadicResidue& o) const { return combine(o, value - o.value); }
    PadicResidue add_exact(const Int& x) const { return from_exact(p, prec, value + x); }
    PadicResidue sub_exact(const Int& x) const { return from_exact(p, prec, value - x); }

    // multiply by p^j (raises precision: p^j * x mod p^{e+j} depends on x mod p^e)
    PadicResidue scale_pow(int j) const {
        if (j < 0) throw std::invalid_argument("negative scale");
        return {p, prec + j, value * pow_int(p, j)};
    }

    // divide by p^j; the held value must witness divisibility
    PadicResidue div_pow(int j, const char* what = "p-adic division") const {
        if (j > prec) throw std::invalid_argument("dividing past the residue precision");
        Int pj = pow_int(p, j);
        if (!divisible(value, pj))
            throw inconsistent_error(std::string(what) + ": residue " + value.get_str() +
                                     " not divisible by " + pj.get_str());
        return {p, prec - j, div_exact(value, pj)};
    }

    Int residue(int k) const {  // value mod p^k, k <= prec
        if (k > prec) throw std::invalid_argument("requested residue beyond precision");
        return mod_canon(value, pow_int(p, k));
    }

private:
    PadicResidue combine(const PadicResidue& o, Int v) const {
        if (p != o.p) throw std::invalid_argument("mixing residues of different primes");
        int e = std::min(prec, o.prec);
        return from_exact(p, e, std::move(v));
    }
};

}  // namespace polyrec
