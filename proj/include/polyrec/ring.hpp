#pragma once

#include "polyrec/ints.hpp"

namespace polyrec {

// Coefficient rings. The spec's three kinds: exact integers, integers mod M
// (canonical residues in [0, M)), exact rationals. Rings are value types
// carried inside polynomials/series so modulus mismatches are caught.

struct ZRing {
    using Elem = Int;
    static constexpr bool modular = false;
    Elem canon(Elem x) const { return x; }
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem from_integer(const Int& v) const { return v; }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool same(const ZRing&) const { return true; }
};

struct QRing {
    using Elem = Rat;
    static constexpr bool modular = false;
    Elem canon(Elem x) const { return x; }
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_integer(const Int& v) const { return Rat(v); }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool same(const QRing&) const { return true; }
};

class ModRing {
public:
    using Elem = Int;
    static constexpr bool modular = true;

    explicit ModRing(Int m) : m_(std::move(m)) {
        if (m_ < 2) throw std::invalid_argument("modulus must be >= 2");
    }
    const Int& modulus() const { return m_; }

    Elem canon(const Elem& x) const { return mod_canon(x, m_); }
    Elem zero() const { return Int(0); }
    Elem one() const { return canon(Int(1)); }
    Elem from_integer(const Int& v) const { return canon(v); }
    bool is_zero(const Elem& x) const { return canon(x) == 0; }
    bool same(const ModRing& o) const { return m_ == o.m_; }

    Elem inverse(const Elem& x) const {
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m_.get_mpz_t()))
            throw inconsistent_error("element " + x.get_str() + " not invertible mod " + m_.get_str());
        return inv;
    }

private:
    Int m_;
};

template <class R>
void require_same_ring(const R& a, const R& b) {
    if (!a.same(b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace polyrec
