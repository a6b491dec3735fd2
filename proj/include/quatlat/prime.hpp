#ifndef QUATLAT_PRIME_HPP
#define QUATLAT_PRIME_HPP

// Prime ideals of the ring of integers, residue systems, truncated p-adic
// arithmetic and Hensel lifting.  All local values are carried as exact field
// elements; "x mod pi^N" means the canonical digit representative.

#include <optional>
#include <set>
#include <vector>

#include "field.hpp"

namespace quatlat {

struct Prime {
    const Field* F = nullptr;
    long p = 0;      // rational prime below
    int eram = 1;    // ramification index
    int fdeg = 1;    // inertia degree
    KNum pi;         // global uniformizer, v(pi) = 1
    long root = -1;  // omega mod P when fdeg == 1 over a quadratic field

    long q() const {
        long r = 1;
        for (int i = 0; i < fdeg; ++i) r *= p;
        return r;
    }
    bool dyadic() const { return p == 2; }
    std::string str() const {
        if (F->rational() || eram * fdeg == 2) return std::to_string(p);
        return "(" + pi.str() + ")|" + std::to_string(p);
    }
    friend bool operator==(const Prime& x, const Prime& y) {
        return x.F == y.F && x.p == y.p && x.pi == y.pi;
    }
    friend bool operator<(const Prime& x, const Prime& y) {
        if (x.p != y.p) return x.p < y.p;
        if (x.root != y.root) return x.root < y.root;
        return false;
    }
};

// Splits p in the ring of integers.  Returns one prime (inert or ramified)
// or two (split).  Dyadic primes are accepted only when inert, which is the
// only dyadic shape the local order tables cover.
inline std::vector<Prime> factor_prime(const Field* F, long p) {
    require(p >= 2, errc::invalid_argument, "not a prime");
    Int P(p);
    require(P.probab_prime(), errc::invalid_argument, "not a prime");
    if (F->rational()) {
        Prime pr{F, p, 1, 1, F->make(p), -1};
        return {pr};
    }
    // minimal polynomial of omega: t^2 - wt*t - wn
    long wt = F->half_integral() ? 1 : 0;
    long wn = F->half_integral() ? (F->d() - 1) / 4 : F->d();
    auto poly = [&](const Int& t) { return t * t - Int(wt) * t - Int(wn); };
    std::vector<long> roots;
    for (long r = 0; r < p; ++r)
        if (poly(Int(r)).divisible_by(P)) roots.push_back(r);
    if (p == 2) {
        require(roots.empty(), errc::unsupported_prime,
                "2 is not inert in this field; dyadic support requires 2 inert");
        return {Prime{F, 2, 1, 2, F->make(2), -1}};
    }
    if (roots.empty()) return {Prime{F, p, 1, 2, F->make(p), -1}};
    if (roots.size() == 1) {
        // ramified: every allowlisted d is prime, so sqrt(d) has norm -p
        require(Int(F->d()) == P, errc::unsupported_prime, "unexpected ramified prime");
        return {Prime{F, p, 2, 1, F->sqrt_d(), roots[0]}};
    }
    // Split: a uniformizer must have |norm| exactly p so it carries no
    // valuation at other primes.  Class number 1 guarantees one exists;
    // search small coordinates deterministically.
    std::vector<Prime> out;
    for (long r : roots) {
        KNum pi;
        bool found = false;
        for (long bb = 0; bb <= 4 * p + 8 && !found; ++bb)
            for (long aa = -(4 * p + 8); aa <= 4 * p + 8 && !found; ++aa) {
                KNum cand = F->make(aa, bb);
                if (F->norm(cand).abs() != Rat(p)) continue;
                if ((Int(aa) + Int(bb) * Int(r)).divisible_by(P)) { pi = cand; found = true; }
            }
        require(found, errc::unsupported_prime, "no small uniformizer found");
        out.push_back(Prime{F, p, 1, 1, pi, r});
    }
    return out;
}

// Valuation of a nonzero field element at P.
inline long val(const Prime& pr, const KNum& x) {
    require(!x.is_zero(), errc::invalid_argument, "valuation of zero");
    const Field* F = pr.F;
    Int D = x.a().den().lcm(x.b().den());
    KNum u = Rat(D) * x;
    long shift = 0;
    {
        Int m = D;
        Int P(pr.p);
        while (m.divisible_by(P)) { m = m.divexact(P); shift += pr.eram; }
    }
    long v = 0;
    Int nrm = Rat(F->rational() ? Rat(pr.p) : F->norm(pr.pi)).num().abs();
    KNum cj = F->rational() ? F->one() : F->conj(pr.pi);
    if (F->rational()) cj = F->one(); // divide by p directly below
    while (true) {
        KNum y = F->rational() ? u : F->mul(u, cj);
        if (!y.a().num().divisible_by(nrm) || !y.b().num().divisible_by(nrm)) break;
        u = KNum(F, Rat(y.a().num().divexact(nrm), y.a().den()),
                 Rat(y.b().num().divexact(nrm), y.b().den()));
        ++v;
        if (u.is_zero()) break;
    }
    return v - shift;
}

inline bool is_plocal_integral(const Prime& pr, const KNum& x) {
    return x.is_zero() || val(pr, x) >= 0;
}

// Residue system at P: `natural` lists canonical digit representatives;
// `ordered` is the convention the representative tables expect
// (odd: a1 = 1, a2 = -1, aq = 0; dyadic: a1 = 1 and, when the residue field
// contains F4, the last two entries are the roots of t^2+t+1).
struct ResidueSys {
    Prime pr;
    std::vector<KNum> natural;
    std::vector<KNum> ordered;
    std::set<long> square_idx; // indices (into natural) of nonzero squares, odd p only

    long size() const { return (long)natural.size(); }
};

inline long natural_index(const Prime& pr, const KNum& rep) {
    // rep must be one of the natural representatives
    long a = rep.a().num().fdiv_r(Int(pr.p)).to_long();
    long b = rep.b().is_zero() ? 0 : rep.b().num().fdiv_r(Int(pr.p)).to_long();
    return a + b * pr.p;
}

// Residue of a P-integral field element, as a natural representative.
inline KNum residue_of(const Prime& pr, const KNum& x);

namespace detail {

inline std::vector<KNum> natural_reps(const Prime& pr) {
    const Field* F = pr.F;
    std::vector<KNum> out;
    if (pr.fdeg == 1) {
        for (long a = 0; a < pr.p; ++a) out.push_back(F->make(a));
    } else {
        for (long b = 0; b < pr.p; ++b)
            for (long a = 0; a < pr.p; ++a) out.push_back(F->make(a, b));
    }
    return out;
}

} // namespace detail

inline ResidueSys residue_system(const Prime& pr) {
    ResidueSys rs;
    rs.pr = pr;
    rs.natural = detail::natural_reps(pr);
    const Field* F = pr.F;
    if (!pr.dyadic()) {
        for (const KNum& r : rs.natural) {
            if (r.is_zero()) continue;
            rs.square_idx.insert(natural_index(pr, residue_of(pr, F->mul(r, r))));
        }
        KNum one = F->one();
        KNum mone = residue_of(pr, F->make(-1));
        rs.ordered.push_back(one);
        rs.ordered.push_back(mone);
        for (const KNum& r : rs.natural)
            if (!r.is_zero() && r != one && r != mone) rs.ordered.push_back(r);
        rs.ordered.push_back(F->zero());
    } else {
        KNum one = F->one();
        std::vector<KNum> roots, middle;
        for (const KNum& r : rs.natural) {
            if (r == one) continue;
            // roots of t^2 + t + 1 in the residue field
            KNum v = F->add(F->add(F->mul(r, r), r), F->one());
            if (!residue_of(pr, v).is_zero()) middle.push_back(r);
            else roots.push_back(r);
        }
        rs.ordered.push_back(one);
        for (auto& r : middle) rs.ordered.push_back(r);
        for (auto& r : roots) rs.ordered.push_back(r);
    }
    return rs;
}

inline KNum residue_of(const Prime& pr, const KNum& x) {
    const Field* F = pr.F;
    if (x.is_zero()) return F->zero();
    Int D = x.a().den().lcm(x.b().den());
    Int P(pr.p);
    if (!D.divisible_by(P)) {
        // direct reduction: denominators invertible mod p
        Int A = (x.a() * Rat(D)).num(), B = (x.b() * Rat(D)).num();
        Int Dinv;
        mpz_invert(Dinv.raw(), D.raw(), P.raw());
        if (pr.fdeg == 2) {
            long a = (A * Dinv).fdiv_r(P).to_long();
            long b = (B * Dinv).fdiv_r(P).to_long();
            return F->make(a, b);
        }
        Int r(pr.root < 0 ? 0 : pr.root);
        long a = ((A + B * r) * Dinv).fdiv_r(P).to_long();
        return F->make(a);
    }
    // denominator meets p: fall back to a valuation scan
    for (const KNum& r : detail::natural_reps(pr)) {
        KNum dfc = F->sub(x, r);
        if (dfc.is_zero() || val(pr, dfc) >= 1) return r;
    }
    fail(errc::invalid_argument, "element is not P-integral");
}

// chi(x) = +1 if x is a square unit mod P, -1 otherwise (odd residue fields).
inline int chi(const ResidueSys& rs, const KNum& x) {
    require(!rs.pr.dyadic(), errc::invalid_argument, "chi needs odd residue field");
    KNum r = residue_of(rs.pr, x);
    require(!r.is_zero(), errc::invalid_argument, "chi of a non-unit");
    return rs.square_idx.count(natural_index(rs.pr, r)) ? +1 : -1;
}

// Canonical representative of x modulo pi^N (the digit expansion).
inline KNum reduce_mod(const Prime& pr, const KNum& x, int digits) {
    const Field* F = pr.F;
    KNum acc = F->zero();
    KNum pipow = F->one();
    KNum cur = x;
    for (int i = 0; i < digits; ++i) {
        if (cur.is_zero()) break;
        KNum r = residue_of(pr, cur);
        acc = F->add(acc, F->mul(r, pipow));
        cur = F->div(F->sub(cur, r), pr.pi);
        pipow = F->mul(pipow, pr.pi);
    }
    return acc;
}

inline bool congruent_mod(const Prime& pr, const KNum& x, const KNum& y, int digits) {
    KNum d = pr.F->sub(x, y);
    return d.is_zero() || val(pr, d) >= digits;
}

// Inverse of a unit modulo pi^N.
inline KNum inv_mod(const Prime& pr, const KNum& x, int N) {
    const Field* F = pr.F;
    require(val(pr, x) == 0, errc::invalid_argument, "inverse of a non-unit");
    KNum y;
    bool found = false;
    for (const KNum& r : detail::natural_reps(pr)) {
        if (r.is_zero()) continue;
        if (residue_of(pr, F->sub(F->mul(x, r), F->one())).is_zero()) { y = r; found = true; break; }
    }
    require(found, errc::invalid_argument, "no residue inverse");
    int prec = 1;
    while (prec < N) {
        // Newton: y <- y(2 - xy), doubling precision
        y = reduce_mod(pr, F->mul(y, F->sub(F->make(2), F->mul(x, y))), std::min(2 * prec, N));
        prec = std::min(2 * prec, N);
    }
    return reduce_mod(pr, y, N);
}

namespace detail {

inline bool lex_less(const KNum& x, const KNum& y) {
    if (x.a() != y.a()) return x.a() < y.a();
    return x.b() < y.b();
}

} // namespace detail

// Square root of a square unit modulo pi^N; empty when no root exists.
// Root choice is canonical: odd p picks the root whose residue comes first in
// the ordered representative list, dyadic ties are broken coordinatewise.
inline std::optional<KNum> hensel_sqrt_opt(const ResidueSys& rs, const KNum& a, int N) {
    const Prime& pr = rs.pr;
    const Field* F = pr.F;
    require(N >= 1, errc::precision_too_low, "precision must be >= 1");
    if (val(pr, a) != 0) return std::nullopt;
    if (!pr.dyadic()) {
        if (chi(rs, a) != 1) return std::nullopt;
        KNum x;
        for (const KNum& r : rs.natural)
            if (!r.is_zero() && residue_of(pr, F->sub(F->mul(r, r), a)).is_zero()) { x = r; break; }
        int prec = 1;
        while (prec < N) {
            int next = std::min(2 * prec, N);
            KNum half = inv_mod(pr, F->mul(F->make(2), x), next);
            x = reduce_mod(pr, F->sub(x, F->mul(F->sub(F->mul(x, x), a), half)), next);
            prec = next;
        }
        x = reduce_mod(pr, x, N);
        KNum mx = reduce_mod(pr, F->neg(x), N);
        KNum rx = residue_of(pr, x), rmx = residue_of(pr, mx);
        auto pos = [&](const KNum& r) {
            for (size_t i = 0; i < rs.ordered.size(); ++i)
                if (rs.ordered[i] == r) return i;
            return rs.ordered.size();
        };
        return pos(rx) <= pos(rmx) ? x : mx;
    }
    // dyadic: a unit square iff solvable mod 8
    require(N >= 3, errc::precision_too_low, "dyadic square roots need precision >= 3");
    KNum x;
    bool found = false;
    std::vector<KNum> mod8;
    if (pr.fdeg == 1) {
        for (long v = 0; v < 8; ++v) mod8.push_back(F->make(v));
    } else {
        for (long u = 0; u < 8; ++u)
            for (long v = 0; v < 8; ++v) mod8.push_back(F->make(u, v));
    }
    for (const KNum& r : mod8)
        if (congruent_mod(pr, F->mul(r, r), a, 3)) { x = r; found = true; break; }
    if (!found) return std::nullopt;
    for (int m = 3; m < N; ++m) {
        KNum err = F->div(F->sub(a, F->mul(x, x)), F->make(Rat(Int(2).pow(m))));
        KNum t = residue_of(pr, F->mul(err, inv_mod(pr, x, 1)));
        x = reduce_mod(pr, F->add(x, F->mul(t, F->make(Rat(Int(2).pow(m - 1))))), N);
    }
    // every root modulo 2^N has the form +-x + 2^(N-1) r; take the smallest
    KNum best = reduce_mod(pr, x, N);
    KNum half = F->make(Rat(Int(2).pow(N - 1)));
    for (const KNum& r : detail::natural_reps(pr))
        for (int s = 0; s < 2; ++s) {
            KNum cand = reduce_mod(pr, F->add(s ? F->neg(x) : x, F->mul(half, r)), N);
            if (detail::lex_less(cand, best)) best = cand;
        }
    return best;
}

inline KNum hensel_sqrt(const ResidueSys& rs, const KNum& a, int N) {
    auto r = hensel_sqrt_opt(rs, a, N);
    require(r.has_value(), errc::not_a_square, "not a square at this prime");
    return *r;
}

// Local working context: a prime, a precision and the fixed non-residue.
struct Local {
    ResidueSys rs;
    int N = 1;
    KNum delta; // odd p: canonical non-residue (first non-square in the ordered list)

    const Prime& prime() const { return rs.pr; }
    const Field* field() const { return rs.pr.F; }
};

inline Local make_local(const Prime& pr, int N) {
    require(N >= 1, errc::precision_too_low, "precision must be >= 1");
    Local L;
    L.rs = residue_system(pr);
    L.N = N;
    if (!pr.dyadic()) {
        for (const KNum& r : L.rs.ordered) {
            if (r.is_zero()) continue;
            if (chi(L.rs, r) == -1) { L.delta = r; break; }
        }
        require(!L.delta.is_zero(), errc::invalid_argument, "no non-residue found");
    } else {
        L.delta = pr.F->zero();
    }
    return L;
}

// Hensel-solved parameters feeding the suborder tables.
// alpha: a0^2 - a1^2 = pi.     beta: b0^2 + b1^2 = delta.
// mu: mu^2 = -1 (when -1 is a square), nu: nu^2 = -delta (otherwise).
inline std::pair<KNum, KNum> param_alpha(const Local& L) {
    const Field* F = L.field();
    for (const KNum& r : L.rs.ordered) {
        if (r.is_zero()) continue;
        KNum t = F->add(L.prime().pi, F->mul(r, r));
        if (val(L.prime(), t) != 0) continue;
        auto s = hensel_sqrt_opt(L.rs, t, L.N);
        if (s) return {*s, r};
    }
    fail(errc::parameter_failure, "no alpha parameters at " + L.prime().str());
}

inline std::pair<KNum, KNum> param_beta(const Local& L) {
    const Field* F = L.field();
    require(!L.prime().dyadic(), errc::parameter_failure, "beta is an odd-prime parameter");
    for (const KNum& r : L.rs.ordered) {
        KNum t = F->sub(L.delta, F->mul(r, r));
        if (t.is_zero() || val(L.prime(), t) != 0) continue;
        auto s = hensel_sqrt_opt(L.rs, t, L.N);
        if (s) return {*s, r};
    }
    fail(errc::parameter_failure, "no beta parameters at " + L.prime().str());
}

inline KNum param_mu(const Local& L) { return hensel_sqrt(L.rs, L.field()->make(-1), L.N); }
inline KNum param_nu(const Local& L) { return hensel_sqrt(L.rs, L.field()->neg(L.delta), L.N); }

// The eight dyadic Hensel constants: k * mu_i^2 = c with
// (k,c) = (1,-7), (3,-13), (25,1), (9,1), (3,-5), (1,-15), (3,-29), (3,-533).
inline KNum param_dyadic_mu(const Local& L, int i) {
    static const long ks[8] = {1, 3, 25, 9, 3, 1, 3, 3};
    static const long cs[8] = {-7, -13, 1, 1, -5, -15, -29, -533};
    require(i >= 1 && i <= 8, errc::invalid_argument, "mu index out of range");
    require(L.prime().dyadic(), errc::parameter_failure, "dyadic constant at an odd prime");
    const Field* F = L.field();
    KNum rhs = F->mul(F->make(cs[i - 1]), inv_mod(L.prime(), F->make(ks[i - 1]), L.N));
    return hensel_sqrt(L.rs, rhs, L.N);
}

} // namespace quatlat

#endif
