#include "polyrec/series.hpp"

namespace polyrec {

ModSeries deconvolve_mod4(const ModSeries& u, const ModSeries& s) {
    if (u.ring.modulus() != 4 || s.ring.modulus() != 4)
        throw std::invalid_argument("deconvolve_mod4: series must be mod 4");
    if (s.len() < 1) throw std::invalid_argument("deconvolve_mod4: empty divisor");
    const Int s0 = s.c[0];
    if (s0 != 1 && s0 != 3)
        throw inconsistent_error("deconvolve_mod4: leading coefficient " + s0.get_str() + " not invertible in Z4");
    if (u.len() < 1 || u.c[0] != 0) throw inconsistent_error("deconvolve_mod4: u_0 must be 0");
    const int m = std::min(u.len() - 1, s.len());
    const Int inv = s0;  // 1 and 3 are self-inverse mod 4
    std::vector<Int> t(m);
    for (int k = 1; k <= m; ++k) {
        // u_k = sum_{i=0}^{k-1} s_i t_{k-1-i}  =>  s_0 t_{k-1} = u_k - sum_{i=1}^{k-1} s_i t_{k-1-i}
        Int rhs = u.c[k];
        for (int i = 1; i <= k - 1; ++i) rhs -= s.c[i] * t[k - 1 - i];
        t[k - 1] = u.ring.canon(rhs * inv);
    }
    return ModSeries{u.ring, std::move(t)};
}

ModSeries square_mod2_to_mod4(const ModSeries& s) {
    if (s.ring.modulus() != 2) throw std::invalid_argument("square_mod2_to_mod4: input must be mod 2");
    const int m = s.len();
    const ModRing& r4 = z4();
    std::vector<Int> t(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
        Int acc = 0;
        if (k % 2 == 1) {
            acc = s.c[(k - 1) / 2] * s.c[(k - 1) / 2];
            for (int i = 0; i <= (k - 3) / 2; ++i) acc += 2 * s.c[i] * s.c[k - 1 - i];
        } else {
            for (int i = 0; i <= (k - 2) / 2; ++i) acc += 2 * s.c[i] * s.c[k - 1 - i];
        }
        t[k] = r4.canon(acc);
    }
    return ModSeries{r4, std::move(t)};
}

ModSeries sqrt_mod4_to_mod2(const ModSeries& u) {
    if (u.ring.modulus() != 4) throw std::invalid_argument("sqrt_mod4_to_mod2: input must be mod 4");
    if (u.len() < 1 || u.c[0] != 0) throw inconsistent_error("sqrt_mod4_to_mod2: u_0 must be 0 mod 4");
    const int m = u.len() - 1;
    const ModRing& r2 = z2();
    std::vector<Int> s;
    s.reserve(m);
    if (m >= 1) {
        if (u.c[1] != 1)
            throw inconsistent_error("sqrt_mod4_to_mod2: u_1 = " + u.c[1].get_str() + " is not an odd square mod 4");
        s.push_back(1);
    }
    for (int k = 2; k <= m; ++k) {
        // 2 s_0 s_{k-1} = u_k - [k odd] s_{(k-1)/2}^2 - 2 * sum_{i=1}^{...} s_i s_{k-1-i}  (mod 4)
        Int rhs = u.c[k];
        if (k % 2 == 1) {
            rhs -= s[(k - 1) / 2] * s[(k - 1) / 2];
            for (int i = 1; i <= (k - 3) / 2; ++i) rhs -= 2 * s[i] * s[k - 1 - i];
        } else {
            for (int i = 1; i <= (k - 2) / 2; ++i) rhs -= 2 * s[i] * s[k - 1 - i];
        }
        rhs = mod_canon(rhs, Int(4));
        if (rhs % 2 != 0) throw inconsistent_error("sqrt_mod4_to_mod2: non-square series");
        s.push_back(r2.canon(rhs / 2));
    }
    return ModSeries{r2, std::move(s)};
}

}  // namespace polyrec
