#ifndef QUATLAT_LATTICE_HPP
#define QUATLAT_LATTICE_HPP

// Full-rank O-lattices in B with canonical Hermite normal form bases.
// Canonicity makes lattice equality a coordinate comparison.

#include <algorithm>
#include <limits>
#include <memory>
#include <vector>

#include "prime.hpp"
#include "quat.hpp"

namespace quatlat {

struct KMat4 {
    std::array<std::array<KNum, 4>, 4> m;
};

inline KMat4 kmat_identity(const Field* F) {
    KMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = (i == j) ? F->one() : F->zero();
    return r;
}

inline KMat4 kmat_inv(const Field* F, const KMat4& A) {
    KMat4 a = A, inv = kmat_identity(F);
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!a.m[r][col].is_zero()) { piv = r; break; }
        require(piv >= 0, errc::rank_deficient, "singular matrix");
        std::swap(a.m[piv], a.m[col]);
        std::swap(inv.m[piv], inv.m[col]);
        KNum d = F->inv(a.m[col][col]);
        for (int j = 0; j < 4; ++j) {
            a.m[col][j] = d * a.m[col][j];
            inv.m[col][j] = d * inv.m[col][j];
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || a.m[r][col].is_zero()) continue;
            KNum f = a.m[r][col];
            for (int j = 0; j < 4; ++j) {
                a.m[r][j] = a.m[r][j] - f * a.m[col][j];
                inv.m[r][j] = inv.m[r][j] - f * inv.m[col][j];
            }
        }
    }
    return inv;
}

inline KNum kmat_det(const Field* F, KMat4 a) {
    KNum det = F->one();
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!a.m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return F->zero();
        if (piv != col) {
            std::swap(a.m[piv], a.m[col]);
            det = -det;
        }
        det = det * a.m[col][col];
        KNum d = F->inv(a.m[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            if (a.m[r][col].is_zero()) continue;
            KNum f = d * a.m[r][col];
            for (int j = col; j < 4; ++j) a.m[r][j] = a.m[r][j] - f * a.m[col][j];
        }
    }
    return det;
}

namespace detail {

// Canonical representative of an integral element x modulo the principal
// ideal (y), via the 2x2 integer HNF of the coordinate lattice of yO.
inline KNum box_reduce(const Field* F, const KNum& x, const KNum& y) {
    require(x.is_integral() && y.is_integral() && !y.is_zero(), errc::invalid_argument, "box_reduce");
    if (F->rational()) {
        Int m = y.a().num().abs();
        return F->make(Rat(x.a().num().fdiv_r(m)));
    }
    KNum yw = F->mul(y, F->omega());
    Int r1a = y.a().num(), r1b = y.b().num();
    Int r2a = yw.a().num(), r2b = yw.b().num();
    // clear the b-entry of row 1
    while (!r1b.is_zero() && !r2b.is_zero()) {
        if (r2b.is_zero() || (!r1b.is_zero() && r1b.abs() < r2b.abs())) {
            std::swap(r1a, r2a);
            std::swap(r1b, r2b);
        }
        Int q = r1b.fdiv_q(r2b);
        r1a -= q * r2a;
        r1b -= q * r2b;
    }
    if (r1b != 0) { std::swap(r1a, r2a); std::swap(r1b, r2b); }
    if (r1a.sign() < 0) r1a = -r1a;
    if (r2b.sign() < 0) { r2a = -r2a; r2b = -r2b; }
    require(!r1a.is_zero() && !r2b.is_zero(), errc::invalid_argument, "degenerate modulus");
    r2a = r2a.fdiv_r(r1a);
    Int xa = x.a().num(), xb = x.b().num();
    Int k2 = xb.fdiv_q(r2b);
    xa -= k2 * r2a;
    xb -= k2 * r2b;
    Int k1 = xa.fdiv_q(r1a);
    xa -= k1 * r1a;
    return F->make(Rat(xa), Rat(xb));
}

} // namespace detail

class Lattice {
public:
    Lattice() : A_(nullptr) {}

    static Lattice from_generators(const Algebra* A, const std::vector<Quat>& gens) {
        require(gens.size() >= 4, errc::rank_deficient, "need at least 4 generators");
        Lattice L;
        L.A_ = A;
        L.rows_ = hnf(A, gens);
        return L;
    }
    static Lattice from_rows(const Algebra* A, const std::array<Quat, 4>& rows) {
        return from_generators(A, {rows.begin(), rows.end()});
    }

    const Algebra* alg() const { return A_; }
    const std::array<Quat, 4>& basis() const { return rows_; }
    const Quat& row(int i) const { return rows_[i]; }

    friend bool operator==(const Lattice& x, const Lattice& y) {
        if (x.A_ != y.A_ && !(x.A_ && y.A_ && *x.A_ == *y.A_)) return false;
        return x.rows_ == y.rows_;
    }
    friend bool operator!=(const Lattice& x, const Lattice& y) { return !(x == y); }

    std::string key() const {
        std::string s;
        for (const Quat& r : rows_)
            for (int t = 0; t < 4; ++t) s += r[t].a().str() + "," + r[t].b().str() + ";";
        return s;
    }

    std::array<KNum, 4> coords(const Quat& x) const {
        const KMat4& inv = binv();
        const Field* F = A_->F;
        std::array<KNum, 4> out;
        for (int j = 0; j < 4; ++j) {
            KNum s = F->zero();
            for (int t = 0; t < 4; ++t) s = s + x[t] * inv.m[t][j];
            out[j] = s;
        }
        return out;
    }
    bool contains(const Quat& x) const {
        for (const KNum& c : coords(x))
            if (!c.is_integral()) return false;
        return true;
    }
    bool contains(const Lattice& inner) const {
        for (const Quat& r : inner.rows_)
            if (!contains(r)) return false;
        return true;
    }

    Lattice sum(const Lattice& o) const {
        std::vector<Quat> g(rows_.begin(), rows_.end());
        g.insert(g.end(), o.rows_.begin(), o.rows_.end());
        return from_generators(A_, g);
    }
    Lattice intersect(const Lattice& o) const {
        return this->dual_plain().sum(o.dual_plain()).dual_plain();
    }
    // lattice product: O-span of pairwise basis products
    Lattice mul(const Lattice& o) const {
        std::vector<Quat> g;
        for (const Quat& x : rows_)
            for (const Quat& y : o.rows_) g.push_back(x * y);
        return from_generators(A_, g);
    }
    Lattice mul_right(const Quat& x) const {
        std::vector<Quat> g;
        for (const Quat& r : rows_) g.push_back(r * x);
        return from_generators(A_, g);
    }
    Lattice mul_left(const Quat& x) const {
        std::vector<Quat> g;
        for (const Quat& r : rows_) g.push_back(x * r);
        return from_generators(A_, g);
    }
    Lattice scale(const KNum& s) const {
        std::vector<Quat> g;
        for (const Quat& r : rows_) g.push_back(s * r);
        return from_generators(A_, g);
    }

    // Dual with respect to Tr(x conj(y)); for conjugation-stable lattices
    // (all orders) this coincides with the Tr(xy)-dual as a set.
    Lattice dual_conj() const { return dual_impl(true); }
    Lattice dual_plain() const { return dual_impl(false); }

    bool is_order() const {
        if (!contains(Quat::one(A_))) return false;
        for (const Quat& x : rows_)
            for (const Quat& y : rows_)
                if (!contains(x * y)) return false;
        return true;
    }

    // determinant of the coordinate matrix (used by index computations)
    KNum coord_det() const {
        KMat4 M;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M.m[i][j] = rows_[i][j];
        return kmat_det(A_->F, M);
    }

    static std::array<Quat, 4> hnf(const Algebra* A, const std::vector<Quat>& gens);

private:
    Lattice dual_impl(bool conj) const {
        const Field* F = A_->F;
        KMat4 G;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                G.m[i][j] = conj ? rows_[i].pair_conj(rows_[j]) : rows_[i].pair_plain(rows_[j]);
        KMat4 Ginv = kmat_inv(F, G);
        std::vector<Quat> g;
        for (int i = 0; i < 4; ++i) {
            Quat v = Quat::zero(A_);
            for (int t = 0; t < 4; ++t) v = v + Ginv.m[i][t] * rows_[t];
            g.push_back(v);
        }
        return from_generators(A_, g);
    }

    const KMat4& binv() const {
        if (!binv_) {
            KMat4 M;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) M.m[i][j] = rows_[i][j];
            binv_ = std::make_shared<KMat4>(kmat_inv(A_->F, M));
        }
        return *binv_;
    }

    const Algebra* A_;
    std::array<Quat, 4> rows_;
    mutable std::shared_ptr<KMat4> binv_;
};

inline std::array<Quat, 4> Lattice::hnf(const Algebra* A, const std::vector<Quat>& gens) {
    const Field* F = A->F;
    // scale to integral entries
    Int D(1);
    for (const Quat& g : gens)
        for (int t = 0; t < 4; ++t) D = D.lcm(g[t].a().den().lcm(g[t].b().den()));
    size_t n = gens.size();
    std::vector<std::array<KNum, 4>> m(n);
    for (size_t r = 0; r < n; ++r)
        for (int t = 0; t < 4; ++t) m[r][t] = Rat(D) * gens[r][t];

    auto norm_abs = [&](const KNum& x) { return F->norm(x).abs(); };
    size_t pivot_row = 0;
    for (int col = 0; col < 4 && pivot_row < n; ++col) {
        while (true) {
            size_t best = n;
            Rat bestn(0);
            int nonzero = 0;
            for (size_t r = pivot_row; r < n; ++r) {
                if (m[r][col].is_zero()) continue;
                ++nonzero;
                Rat v = norm_abs(m[r][col]);
                if (best == n || v < bestn) { best = r; bestn = v; }
            }
            if (nonzero == 0) { best = n; }
            if (nonzero <= 1) {
                if (nonzero == 1) std::swap(m[best], m[pivot_row]);
                if (nonzero == 0) goto next_col;
                break;
            }
            for (size_t r = pivot_row; r < n; ++r) {
                if (r == best || m[r][col].is_zero()) continue;
                KNum q = F->euc_div(m[r][col], m[best][col]);
                for (int t = col; t < 4; ++t) m[r][t] = m[r][t] - F->mul(q, m[best][t]);
            }
            std::swap(m[best], m[pivot_row]);
        }
        {
            // canonical pivot
            KNum piv = m[pivot_row][col];
            KNum can = F->canonical_associate(piv);
            KNum u = F->div(can, piv);
            for (int t = col; t < 4; ++t) m[pivot_row][t] = F->mul(u, m[pivot_row][t]);
            piv = m[pivot_row][col];
            // reduce entries above the pivot to canonical residues
            for (size_t r = 0; r < pivot_row; ++r) {
                if (m[r][col].is_zero()) continue;
                KNum red = detail::box_reduce(F, m[r][col], piv);
                KNum q = F->div(F->sub(m[r][col], red), piv);
                for (int t = col; t < 4; ++t) m[r][t] = m[r][t] - F->mul(q, m[pivot_row][t]);
            }
            ++pivot_row;
        }
    next_col:;
    }
    require(pivot_row == 4, errc::rank_deficient, "generators do not span a rank-4 lattice");
    for (size_t r = 4; r < n; ++r)
        for (int t = 0; t < 4; ++t)
            require(m[r][t].is_zero(), errc::rank_deficient, "HNF reduction left a nonzero tail row");

    std::array<Quat, 4> out;
    Rat dinv = Rat(Int(1), D);
    for (int r = 0; r < 4; ++r)
        out[r] = Quat(A, dinv * m[r][0], dinv * m[r][1], dinv * m[r][2], dinv * m[r][3]);
    return out;
}

// [outer : inner] as a canonical principal-ideal generator.
inline KNum index_ideal(const Lattice& outer, const Lattice& inner) {
    const Field* F = outer.alg()->F;
    std::array<std::array<KNum, 4>, 4> T;
    for (int i = 0; i < 4; ++i) {
        auto c = outer.coords(inner.row(i));
        for (int j = 0; j < 4; ++j) {
            require(c[j].is_integral(), errc::not_a_sublattice, "index of a non-sublattice");
            T[i][j] = c[j];
        }
    }
    KMat4 M;
    M.m = T;
    KNum det = kmat_det(F, M);
    require(!det.is_zero(), errc::rank_deficient, "degenerate transition");
    return F->canonical_associate(det);
}

// Norm ideal N(I): generated by the reduced norms; computed from the values
// N(w_i) and the polarizations Tr(w_i conj(w_j)).
inline KNum norm_ideal(const Lattice& I) {
    const Field* F = I.alg()->F;
    std::vector<KNum> vals;
    for (int i = 0; i < 4; ++i) {
        vals.push_back(I.row(i).norm());
        for (int j = i + 1; j < 4; ++j) vals.push_back(I.row(i).pair_conj(I.row(j)));
    }
    Int D(1);
    for (const KNum& v : vals) D = D.lcm(v.a().den().lcm(v.b().den()));
    KNum g = F->zero();
    for (const KNum& v : vals) {
        KNum w = Rat(D) * v;
        if (w.is_zero()) continue;
        g = g.is_zero() ? F->canonical_associate(w) : F->euc_gcd(g, w);
    }
    require(!g.is_zero(), errc::invalid_argument, "zero lattice norm");
    return F->canonical_associate(KNum(F, g.a() / Rat(D), g.b() / Rat(D)));
}

namespace detail {

inline KMat4 mult_matrix_right(const Algebra* A, const Quat& w) {
    // row r = coordinates of e_r * w
    KMat4 M;
    const Field* F = A->F;
    Quat e[4] = {Quat::one(A), Quat(A, F->zero(), F->one(), F->zero(), F->zero()),
                 Quat(A, F->zero(), F->zero(), F->one(), F->zero()),
                 Quat(A, F->zero(), F->zero(), F->zero(), F->one())};
    for (int r = 0; r < 4; ++r) {
        Quat v = e[r] * w;
        for (int c = 0; c < 4; ++c) M.m[r][c] = v[c];
    }
    return M;
}

inline KMat4 mult_matrix_left(const Algebra* A, const Quat& w) {
    KMat4 M;
    const Field* F = A->F;
    Quat e[4] = {Quat::one(A), Quat(A, F->zero(), F->one(), F->zero(), F->zero()),
                 Quat(A, F->zero(), F->zero(), F->one(), F->zero()),
                 Quat(A, F->zero(), F->zero(), F->zero(), F->one())};
    for (int r = 0; r < 4; ++r) {
        Quat v = w * e[r];
        for (int c = 0; c < 4; ++c) M.m[r][c] = v[c];
    }
    return M;
}

// Solution lattice of x * M in L, i.e. rows of M^{-1} in L-basis coordinates.
inline Lattice preimage_lattice(const Lattice& L, const KMat4& M) {
    const Algebra* A = L.alg();
    const Field* F = A->F;
    // x satisfies coords_L(x * M) integral; basis of solutions: rows of
    // (M * Binv_L)^{-1} as quaternions
    KMat4 B;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) B.m[i][j] = L.row(i)[j];
    KMat4 Binv = kmat_inv(F, B);
    KMat4 MB;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            KNum s = F->zero();
            for (int t = 0; t < 4; ++t) s = s + M.m[i][t] * Binv.m[t][j];
            MB.m[i][j] = s;
        }
    KMat4 inv = kmat_inv(F, MB);
    std::vector<Quat> g;
    for (int i = 0; i < 4; ++i) g.push_back(Quat(A, inv.m[i][0], inv.m[i][1], inv.m[i][2], inv.m[i][3]));
    return Lattice::from_generators(A, g);
}

} // namespace detail

inline Lattice left_order(const Lattice& L) {
    const Algebra* A = L.alg();
    Lattice acc;
    bool first = true;
    for (int j = 0; j < 4; ++j) {
        Lattice Lj = detail::preimage_lattice(L, detail::mult_matrix_right(A, L.row(j)));
        acc = first ? Lj : acc.intersect(Lj);
        first = false;
    }
    return acc;
}

inline Lattice right_order(const Lattice& L) {
    const Algebra* A = L.alg();
    Lattice acc;
    bool first = true;
    for (int j = 0; j < 4; ++j) {
        Lattice Lj = detail::preimage_lattice(L, detail::mult_matrix_left(A, L.row(j)));
        acc = first ? Lj : acc.intersect(Lj);
        first = false;
    }
    return acc;
}

// The colon lattice {y in B : y * Oic in Oprime} for orders Oprime in O.
inline Lattice colon_lattice(const Lattice& O, const Lattice& Oprime) {
    const Algebra* A = O.alg();
    Lattice acc;
    bool first = true;
    for (int j = 0; j < 4; ++j) {
        Lattice Lj = detail::preimage_lattice(Oprime, detail::mult_matrix_right(A, O.row(j)));
        acc = first ? Lj : acc.intersect(Lj);
        first = false;
    }
    return acc;
}

// Local-to-global gluing: the lattice agreeing with Lam away from P and with
// the span of `local_basis` at P, where that span has index P^e in Lam_P.
// Coefficients are split along the pi-adic digit expansion truncated at e.
inline Lattice glue_local(const Lattice& Lam, const Prime& pr, int e,
                          const std::vector<Quat>& local_basis) {
    require(e >= 0, errc::invalid_argument, "negative exponent");
    if (e == 0) return Lam;
    const Algebra* A = Lam.alg();
    const Field* F = A->F;
    KNum pie = F->one();
    for (int i = 0; i < e; ++i) pie = F->mul(pie, pr.pi);
    std::vector<Quat> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(pie * Lam.row(i));
    for (const Quat& w : local_basis) {
        auto c = Lam.coords(w);
        Quat wt = Quat::zero(A);
        for (int j = 0; j < 4; ++j) {
            require(c[j].is_zero() || val(pr, c[j]) >= 0, errc::coefficient_not_integral,
                    "local basis coefficient is not P-integral");
            wt = wt + reduce_mod(pr, c[j], e) * Lam.row(j);
        }
        gens.push_back(wt);
    }
    return Lattice::from_generators(A, gens);
}

// Local generator of a locally principal left O-module at P, following the
// minimum-valuation Gram scan with a short exhaustive fallback.
inline Quat local_generator(const Lattice& I, const Lattice& O, const Prime& pr) {
    const Algebra* A = I.alg();
    auto is_gen = [&](const Quat& x) {
        if (x.is_zero() || x.norm().is_zero()) return false;
        Lattice Ox = O.mul_right(x);
        if (!I.contains(Ox)) return false;
        return val(pr, index_ideal(I, Ox)) == 0;
    };
    // fast path: orders and order-like ideals are generated by 1 at P
    if (I.contains(Quat::one(A)) && is_gen(Quat::one(A))) return Quat::one(A);

    long best = std::numeric_limits<long>::max();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            KNum t = I.row(i).pair_conj(I.row(j));
            if (!t.is_zero()) best = std::min(best, val(pr, t));
        }
    int bi = -1, bj = -1;
    for (int i = 0; i < 4 && bi < 0; ++i) {
        KNum t = I.row(i).pair_conj(I.row(i));
        if (!t.is_zero() && val(pr, t) == best) { bi = bj = i; }
    }
    for (int i = 0; i < 4 && bi < 0; ++i)
        for (int j = 0; j < 4 && bi < 0; ++j) {
            if (i == j) continue;
            KNum t = I.row(i).pair_conj(I.row(j));
            if (!t.is_zero() && val(pr, t) == best) { bi = i; bj = j; }
        }
    if (bi >= 0) {
        Quat cand = (bi == bj) ? I.row(bi) : I.row(bi) + I.row(bj);
        if (is_gen(cand)) return cand;
    }
    for (int i = 0; i < 4; ++i)
        if (is_gen(I.row(i))) return I.row(i);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && is_gen(I.row(i) + I.row(j))) return I.row(i) + I.row(j);
    ResidueSys rs = residue_system(pr);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (const KNum& c : rs.natural) {
                if (i == j || c.is_zero()) continue;
                Quat cand = I.row(i) + c * I.row(j);
                if (is_gen(cand)) return cand;
            }
    fail(errc::not_principal, "no local generator found at " + pr.str());
}

// Sublattices J with Lam <= J <= I of index P^e in I.  For e = 1 these are
// the q+1 lines in the 2-dimensional quotient; for e = 2 the enumeration
// walks the q^2+1 submodules stable under the quadratic structure given by
// theta (theta^2 = delta up to P).
inline std::vector<Lattice> intermediate_sublattices(const Lattice& I, const Lattice& Lam,
                                                     const Prime& pr, int e,
                                                     const Quat* theta = nullptr) {
    const Algebra* A = I.alg();
    const Field* F = A->F;
    require(I.contains(Lam), errc::index_mismatch, "inner lattice not contained in outer");
    if (e == 0) return {I};
    KNum idx = index_ideal(I, Lam);
    require(val(pr, idx) == 2 * e, errc::index_mismatch, "index is not P^(2e)");
    ResidueSys rs = residue_system(pr);
    std::vector<Lattice> out;
    if (e == 1) {
        auto line = [&](const std::vector<Quat>& ws) {
            std::vector<Quat> g = ws;
            for (int t = 0; t < 4; ++t) g.push_back(Lam.row(t));
            return Lattice::from_generators(A, g);
        };
        // pick u1, u2 spanning the 2-dimensional quotient I/Lam
        int i1 = -1, i2 = -1;
        for (int i = 0; i < 4 && i1 < 0; ++i)
            if (val(pr, index_ideal(I, line({I.row(i)}))) == 1) i1 = i;
        require(i1 >= 0, errc::index_mismatch, "no first quotient generator");
        for (int i = 0; i < 4 && i2 < 0; ++i) {
            if (i == i1) continue;
            if (val(pr, index_ideal(I, line({I.row(i1), I.row(i)}))) == 0) i2 = i;
        }
        require(i2 >= 0, errc::index_mismatch, "no second quotient generator");
        for (const KNum& c : rs.natural) out.push_back(line({I.row(i1) + c * I.row(i2)}));
        out.push_back(line({I.row(i2)}));
        for (const Lattice& J : out)
            require(val(pr, index_ideal(I, J)) == 1, errc::index_mismatch, "bad line index");
        return out;
    }
    require(e == 2 && theta != nullptr, errc::index_mismatch, "e = 2 needs the quadratic structure");
    // K_P = k(theta) lines in the 2-dimensional K_P-space I/Lam; theta is
    // only P-integral, so the spans are glued rather than generated globally
    auto span = [&](const std::vector<Quat>& ws) {
        std::vector<Quat> g;
        for (const Quat& w : ws) {
            g.push_back(w);
            g.push_back((*theta) * w);
        }
        for (int t = 0; t < 4; ++t) g.push_back(Lam.row(t));
        return glue_local(I, pr, 2, g);
    };
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 4 && i1 < 0; ++i)
        if (val(pr, index_ideal(I, span({I.row(i)}))) == 2) i1 = i;
    require(i1 >= 0, errc::index_mismatch, "no first K_P generator");
    for (int i = 0; i < 4 && i2 < 0; ++i) {
        if (i == i1) continue;
        if (val(pr, index_ideal(I, span({I.row(i1), I.row(i)}))) == 0) i2 = i;
    }
    require(i2 >= 0, errc::index_mismatch, "no second K_P generator");
    for (const KNum& c0 : rs.natural)
        for (const KNum& c1 : rs.natural) {
            Quat w = I.row(i1) + c0 * I.row(i2) + c1 * ((*theta) * I.row(i2));
            out.push_back(span({w}));
        }
    out.push_back(span({I.row(i2)}));
    for (const Lattice& J : out)
        require(val(pr, index_ideal(I, J)) == 2, errc::index_mismatch, "bad K_P-line index");
    return out;
}

} // namespace quatlat

#endif
