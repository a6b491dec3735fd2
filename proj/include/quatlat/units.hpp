#ifndef QUATLAT_UNITS_HPP
#define QUATLAT_UNITS_HPP

// Norm-one unit groups of orders in totally definite algebras, enumerated
// exactly: rational LDL^T of the rank-4[K:Q] Gram matrix of Tr_{K/Q} o N,
// then recursive bounded search.  No floating point anywhere.

#include <functional>
#include <map>
#include <set>

#include "lattice.hpp"

namespace quatlat {

struct UnitGroup {
    Lattice order;
    std::vector<Quat> elems; // norm-one elements modulo +-1; elems[0] = 1
    long count() const { return 2 * (long)elems.size(); } // |O^{x,1}|
};

namespace detail {

inline bool quat_lex_less(const Quat& x, const Quat& y) {
    for (int t = 0; t < 4; ++t) {
        if (x[t].a() != y[t].a()) return x[t].a() < y[t].a();
        if (x[t].b() != y[t].b()) return x[t].b() < y[t].b();
    }
    return false;
}

inline Quat sign_canonical(const Quat& x) {
    Quat m = -x;
    return quat_lex_less(m, x) ? m : x;
}

} // namespace detail

// All x in O with Tr_{K/Q}(N(x)) <= bound, as coordinate vectors over the
// Z-basis {b_i} resp. {b_i, w b_i}.  Callers filter by exact norm.
inline std::vector<Quat> short_norm_vectors(const Lattice& O, long bound) {
    const Algebra* A = O.alg();
    const Field* F = A->F;
    require(A->totally_definite(), errc::not_definite, "algebra is not totally definite");
    int n = F->rational() ? 4 : 8;
    std::vector<Quat> zbasis;
    for (int i = 0; i < 4; ++i) zbasis.push_back(O.row(i));
    if (n == 8)
        for (int i = 0; i < 4; ++i) zbasis.push_back(F->omega() * O.row(i));

    // Gram of the positive definite rational form 2 q(x) = x^t G x
    std::vector<std::vector<Rat>> G(n, std::vector<Rat>(n, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            KNum t = zbasis[r].pair_conj(zbasis[s]);
            G[r][s] = F->rational() ? t.a() : F->trace(t);
        }
    // LDL^T
    std::vector<std::vector<Rat>> Lm(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> D(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat d = G[j][j];
        for (int k = 0; k < j; ++k) d = d - Lm[j][k] * Lm[j][k] * D[k];
        require(d.sign() > 0, errc::not_definite, "Gram matrix is not positive definite");
        D[j] = d;
        Lm[j][j] = Rat(1);
        for (int i = j + 1; i < n; ++i) {
            Rat v = G[i][j];
            for (int k = 0; k < j; ++k) v = v - Lm[i][k] * Lm[j][k] * D[k];
            Lm[i][j] = v / d;
        }
    }
    // enumerate x^t G x <= 2 * bound;   x^t G x = sum_r D_r (x_r + c_r)^2,
    // c_r = sum_{s>r} L_sr x_s
    Rat budget(2 * bound);
    std::vector<Quat> out;
    std::vector<long> x(n, 0);
    std::vector<Rat> partial(n + 1, Rat(0)); // used budget above level r
    std::function<void(int)> walk = [&](int r) {
        if (r < 0) {
            Quat u = Quat::zero(A);
            for (int s = 0; s < n; ++s)
                if (x[s] != 0) u = u + Rat(x[s]) * zbasis[s];
            if (!u.is_zero()) out.push_back(u);
            return;
        }
        Rat c(0);
        for (int s = r + 1; s < n; ++s) c = c + Lm[s][r] * Rat(x[s]);
        Rat room = budget - partial[r + 1];
        // integers m with D_r (m + c)^2 <= room
        long center = (-c).round().to_long();
        for (int dir = 0; dir < 2; ++dir) {
            long m = dir == 0 ? center : center - 1;
            long step = dir == 0 ? 1 : -1;
            while (true) {
                Rat y = Rat(m) + c;
                Rat used = D[r] * y * y;
                if (used > room) break;
                x[r] = m;
                partial[r] = partial[r + 1] + used;
                walk(r - 1);
                m += step;
            }
        }
        x[r] = 0;
    };
    walk(n - 1);
    return out;
}

inline UnitGroup norm_one_units(const Lattice& O) {
    const Field* F = O.alg()->F;
    UnitGroup U;
    U.order = O;
    std::map<std::string, Quat> seen;
    for (const Quat& u : short_norm_vectors(O, F->degree())) {
        if (!(u.norm() == F->one())) continue;
        Quat c = detail::sign_canonical(u);
        std::string key;
        for (int t = 0; t < 4; ++t) key += c[t].a().str() + "," + c[t].b().str() + ";";
        seen.emplace(key, c);
    }
    Quat one = Quat::one(O.alg());
    U.elems.push_back(one);
    for (auto& [k, q] : seen)
        if (!(q == one) && !(q == -one)) U.elems.push_back(q);
    return U;
}

// Group-law sanity: the mod-(+-1) element list is closed under products.
inline bool unit_group_closed(const UnitGroup& U) {
    std::set<std::string> keys;
    auto key_of = [](const Quat& q) {
        Quat c = detail::sign_canonical(q);
        std::string key;
        for (int t = 0; t < 4; ++t) key += c[t].a().str() + "," + c[t].b().str() + ";";
        return key;
    };
    for (const Quat& u : U.elems) keys.insert(key_of(u));
    for (const Quat& u : U.elems)
        for (const Quat& v : U.elems)
            if (!keys.count(key_of(u * v))) return false;
    return true;
}

// Equivalence of two members of the same fiber: J1 = J2 u for an enumerated
// norm-one unit of the right order of the common parent ideal.
inline bool ideal_equivalent(const Lattice& J1, const Lattice& J2, const UnitGroup& right_units) {
    if (J1 == J2) return true;
    for (const Quat& u : right_units.elems)
        if (J1 == J2.mul_right(u)) return true;
    return false;
}

// Cache keyed by the canonical lattice matrix.
class UnitCache {
public:
    const UnitGroup& get(const Lattice& O) {
        auto it = cache_.find(O.key());
        if (it != cache_.end()) return it->second;
        return cache_.emplace(O.key(), norm_one_units(O)).first->second;
    }
    std::map<std::string, UnitGroup>& raw() { return cache_; }

private:
    std::map<std::string, UnitGroup> cache_;
};

} // namespace quatlat

#endif
