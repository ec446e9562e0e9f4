#include "polyrec/partitions.hpp"

#include "polyrec/series.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace polyrec {

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

const std::vector<Partition>& partitions_of(int m) {
    if (m < 1) throw std::invalid_argument("partitions_of: m must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    auto list = std::make_unique<std::vector<Partition>>();
    std::vector<int> a = {m};
    for (;;) {
        list->push_back(Partition{a});
        int i = (int)a.size() - 1, ones = 0;
        while (i >= 0 && a[i] == 1) { ++ones; --i; }
        if (i < 0) break;
        a[i] -= 1;
        int rem = ones + 1;
        a.resize(i + 1);
        while (rem > a[i]) { a.push_back(a[i]); rem -= a[i]; }
        if (rem > 0) a.push_back(rem);
    }
    auto& ref = *list;
    cache.emplace(m, std::move(list));
    return ref;
}

const std::vector<TraceTerm>& trace_terms(int m) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<TraceTerm>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;

    const auto& parts = partitions_of(m);
    auto list = std::make_unique<std::vector<TraceTerm>>();
    list->reserve(parts.size());
    for (const auto& lam : parts) {
        TraceTerm term;
        term.part_mult = lam.multiplicities();
        const int k = lam.k();
        Int num;
        mpz_fac_ui(num.get_mpz_t(), (unsigned long)(k - 1));
        num *= m;
        Int den = 1;
        for (auto [part, r] : term.part_mult) {
            (void)part;
            Int f;
            mpz_fac_ui(f.get_mpz_t(), (unsigned long)r);
            den *= f;
        }
        // m (k-1)! / prod r_j! is an integer for every partition (Kummer)
        term.signed_coef = div_exact(num, den, "partition term coefficient");
        if ((m + k) % 2 != 0) term.signed_coef = -term.signed_coef;
        list->push_back(std::move(term));
    }
    auto& ref = *list;
    cache.emplace(m, std::move(list));
    return ref;
}

Int trace_from_coeffs(int m, std::span<const Int> b) {
    if (m < 1) throw std::invalid_argument("trace_from_coeffs: m must be >= 1");
    Int total = 0;
    for (const auto& term : trace_terms(m)) {
        Int prod = term.signed_coef;
        bool zero = false;
        for (auto [part, r] : term.part_mult) {
            const Int& bj = (part <= (int)b.size()) ? b[part - 1] : Int(0);
            if (bj == 0) { zero = true; break; }
            prod *= pow_int(bj, (unsigned long)r);
        }
        if (!zero) total += prod;
    }
    return total;
}

std::vector<PadicResidue> traces_mod(std::span<const Int> b_mod, const Int& p, int l, int mmax) {
    if (l < 1) throw std::invalid_argument("traces_mod: l must be >= 1");
    // the canonical residues are lifts; Corollary-level precision bookkeeping
    // makes the reduced result independent of the lift choice
    std::vector<PadicResidue> out;
    out.reserve(mmax);
    for (int m = 1; m <= mmax; ++m) {
        int prec = (m == 0) ? l : valuation(Int(m), p) + l;
        out.push_back(PadicResidue::from_exact(p, prec, trace_from_coeffs(m, b_mod)));
    }
    return out;
}

std::vector<Int> coeffs_from_traces(const TraceLookup& traces, const Int& p, int l, int k) {
    const Int pl = pow_int(p, l);
    std::vector<Int> b;
    b.reserve(k);
    for (int m = 1; m <= k; ++m) {
        const int v = valuation(Int(m), p);
        const int prec = v + l;
        PadicResidue target = traces(m, prec).reduce_to(prec);
        // every term except the one from the trivial partition (m) is already
        // determined by b_1..b_{m-1}; that term is (-1)^{m+1} m b_m
        Int rest = trace_from_coeffs(m, b);  // b_m treated as 0 kills the (m) term
        PadicResidue lin = target.sub_exact(rest);
        if (m % 2 == 0) lin = PadicResidue::from_exact(p, prec, -lin.value);
        lin = lin.div_pow(v, "coefficient recovery");
        Int unit = div_exact(Int(m), pow_int(p, v));
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), pl.get_mpz_t()))
            throw std::logic_error("unit part not invertible");
        b.push_back(mod_canon(lin.value * inv, pl));
    }
    return b;
}

Int gram_walk_mod4(long m, const TraceLookup& traces) {
    if (m < 1) throw std::invalid_argument("gram_walk_mod4: m must be >= 1");
    const int t = v2(m);
    // common-denominator form: individual summands of the paper's identity
    // need not be integral, the total is
    PadicResidue total = traces(2 * m, t + 2).reduce_to(t + 2);
    for (int l = 0; l <= t; ++l) {
        PadicResidue term = traces(m >> l, (t - l) + 2).reduce_to(t - l + 2).scale_pow(l);
        total = total.add(term);
    }
    total = total.div_pow(t, "walk congruence");
    return total.residue(2);
}

TraceLookup exact_trace_lookup(std::vector<Int> traces) {
    auto shared = std::make_shared<std::vector<Int>>(std::move(traces));
    return [shared](long m, int min_prec) {
        if (m < 0 || m >= (long)shared->size())
            throw std::invalid_argument("trace lookup out of range at m = " + std::to_string(m));
        return PadicResidue::from_exact(Int(2), min_prec, (*shared)[m]);
    };
}

ModPoly complement_charpoly_mod4(const ModPoly& phi4) {
    if (phi4.ring.modulus() != 4) throw std::invalid_argument("input must be a mod-4 polynomial");
    const int n = phi4.degree;
    if (n < 1 || !phi4.monic() || !phi4.full())
        throw std::invalid_argument("input must be a full monic mod-4 polynomial");

    // b_j mod 4, padded with zeros past degree n (b_k := 0 for k > n)
    const int mmax = std::max(2 * (n - 1), 1);
    std::vector<Int> b(std::max(n, mmax), 0);
    for (int j = 1; j <= n; ++j) b[j - 1] = bk(phi4, j);

    std::vector<PadicResidue> tr = traces_mod(b, Int(2), 2, mmax);
    TraceLookup lookup = [&tr](long m, int min_prec) {
        if (m < 1 || m > (long)tr.size()) throw std::logic_error("trace out of range");
        const PadicResidue& r = tr[m - 1];
        if (r.prec < min_prec) throw std::logic_error("insufficient trace precision");
        return r;
    };

    const ModRing& r4 = z4();
    std::vector<Int> w(n);
    w[0] = r4.canon(Int(n));
    for (int k = 1; k < n; ++k) w[k] = gram_walk_mod4(k, lookup);
    ModSeries wg{r4, std::move(w)};

    ModPoly num = numerator_prefix(phi4, wg, n);
    return complement_from_numerator(phi4, num);
}

}  // namespace polyrec
