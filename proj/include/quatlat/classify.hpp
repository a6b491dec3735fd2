#ifndef QUATLAT_CLASSIFY_HPP
#define QUATLAT_CLASSIFY_HPP

// Local Bass-order classification and quasi-good bases.
//
// An order is classified at a prime through the ternary form carried by the
// trace-zero part of its dual: M = (Tr(f_i conj(f_j)))_{1<=i,j<=3} for a
// trace-adapted dual basis {f_0,...,f_3}.  Diagonal rows are matched by
// congruence-normalizing M to diag(1,a,b)/(2ab); the dyadic even rows by the
// hyperbolic/anisotropic 2x2 block shapes.  The same normalization yields the
// quasi-good basis: after fixing the determinant scale, the order elements
// are rebuilt as scaled products of dual vectors and the multiplication
// table congruences are certified directly.

#include <optional>

#include "lattice.hpp"

namespace quatlat {

struct KMat3 {
    std::array<std::array<KNum, 3>, 3> m;
};

inline KNum kmat3_det(const KMat3& a) {
    auto& m = a.m;
    KNum d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    d = d - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    d = d + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return d;
}

enum class Cls { A1, A2, B, C, D, E, Fc, G };

inline const char* cls_name(Cls c) {
    switch (c) {
        case Cls::A1: return "A1";
        case Cls::A2: return "A2";
        case Cls::B: return "B";
        case Cls::C: return "C";
        case Cls::D: return "D";
        case Cls::E: return "E";
        case Cls::Fc: return "F";
        case Cls::G: return "G";
    }
    return "?";
}

inline std::optional<Cls> cls_from_name(const std::string& s) {
    if (s == "A1") return Cls::A1;
    if (s == "A2") return Cls::A2;
    if (s == "B") return Cls::B;
    if (s == "C") return Cls::C;
    if (s == "D") return Cls::D;
    if (s == "E") return Cls::E;
    if (s == "F") return Cls::Fc;
    if (s == "G") return Cls::G;
    return std::nullopt;
}

// One row of the local classification tables, with its parameters.
struct LocalClass {
    bool dyadic = false;
    Cls letter = Cls::A1;
    int s = 0;
    bool eps1_delta = false; // odd B/C rows: epsilon_1 = delta
    bool eps2_delta = false; // odd C rows: epsilon_2 = delta
    long dy_delta = 1;       // dyadic diagonal rows: delta_1 in {1,3} / delta_2 in {1,5}
    KNum a, b;               // the diagonal form <1,a,b>; unused by block rows

    bool is_block() const { return dyadic && (letter == Cls::A1 || letter == Cls::A2); }

    int disc_exponent() const {
        if (!dyadic) {
            switch (letter) {
                case Cls::A1:
                case Cls::A2: return s;
                case Cls::B: return 2;
                default: return s + 1;
            }
        }
        switch (letter) {
            case Cls::A1:
            case Cls::A2: return s;
            case Cls::B:
            case Cls::D: return s + 2;
            default: return s + 3;
        }
    }

    std::string label() const {
        std::string out = cls_name(letter);
        out += "[s=" + std::to_string(s);
        if (!dyadic && (letter == Cls::B || letter == Cls::C)) {
            out += eps1_delta ? ",e1=d" : ",e1=1";
            if (letter == Cls::C) out += eps2_delta ? ",e2=d" : ",e2=1";
        }
        if (dyadic && !is_block()) out += ",d=" + std::to_string(dy_delta);
        out += "]";
        return out;
    }

    friend bool operator==(const LocalClass& x, const LocalClass& y) {
        return x.dyadic == y.dyadic && x.letter == y.letter && x.s == y.s &&
               x.eps1_delta == y.eps1_delta && x.eps2_delta == y.eps2_delta &&
               x.dy_delta == y.dy_delta;
    }
    friend bool operator!=(const LocalClass& x, const LocalClass& y) { return !(x == y); }
};

// Hilbert-symbol column of the classification tables: +1 split, -1 division.
inline int algebra_ramification(const LocalClass& c, const Local& L) {
    int odd_s = (c.s % 2 == 0) ? +1 : -1;
    if (!c.dyadic) {
        switch (c.letter) {
            case Cls::A1: return +1;
            case Cls::A2: return odd_s;
            case Cls::B: {
                KNum e1 = c.eps1_delta ? L.delta : L.field()->one();
                return chi(L.rs, L.field()->neg(e1));
            }
            case Cls::C: {
                KNum e1 = c.eps1_delta ? L.delta : L.field()->one();
                KNum e2 = c.eps2_delta ? L.delta : L.field()->one();
                int h = chi(L.rs, L.field()->neg(e2));
                if (c.s % 2 == 1) h *= chi(L.rs, e1);
                return h;
            }
            default: fail(errc::unknown_class, "odd class letter out of range");
        }
    }
    switch (c.letter) {
        case Cls::A1: return +1;
        case Cls::A2: return odd_s;
        case Cls::B: return c.dy_delta == 1 ? -1 : +1;
        case Cls::C: return c.dy_delta == 1 ? odd_s : -odd_s;
        case Cls::D: return c.dy_delta == 1 ? -odd_s : odd_s;
        case Cls::E: return c.dy_delta == 1 ? -1 : +1;
        case Cls::Fc: return c.dy_delta == 1 ? +1 : -1;
        case Cls::G: return c.dy_delta == 1 ? -odd_s : odd_s;
    }
    fail(errc::unknown_class, "class letter out of range");
}

// v_P(d(O)) read off the Gram determinant (d(O)^2 = (det Gram)).
inline int disc_exponent_at(const Lattice& O, const Prime& pr) {
    KMat4 G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G.m[i][j] = O.row(i).pair_conj(O.row(j));
    KNum D = kmat_det(O.alg()->F, G);
    long v = val(pr, D);
    require(v % 2 == 0, errc::not_bass, "Gram determinant with odd valuation");
    return (int)(v / 2);
}

// Global reduced discriminant: the canonical generator d with (d)^2 = (det Gram).
inline KNum reduced_discriminant(const Lattice& O) {
    const Field* F = O.alg()->F;
    KMat4 G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G.m[i][j] = O.row(i).pair_conj(O.row(j));
    KNum D = kmat_det(F, G);
    require(!D.is_zero(), errc::rank_deficient, "degenerate Gram matrix");
    Rat nrm = F->rational() ? D.a() : F->norm(D);
    KNum g = F->one();
    auto apply = [&](const Int& l) {
        if (!l.fits_long()) fail(errc::invalid_argument, "discriminant prime too large");
        for (const Prime& pr : factor_prime(F, l.to_long())) {
            long v = val(pr, D);
            require(v % 2 == 0, errc::not_bass, "discriminant is not a square ideal");
            long h = v / 2;
            if (h == 0) continue;
            KNum piw = F->one();
            for (long t = 0; t < std::labs(h); ++t) piw = F->mul(piw, pr.pi);
            g = (h > 0) ? F->mul(g, piw) : F->div(g, piw);
        }
    };
    for (auto& [l, e] : factor_int(nrm.num().abs())) apply(l);
    for (auto& [l, e] : factor_int(nrm.den())) apply(l);
    g = F->canonical_associate(g);
    KNum u = F->div(D, F->mul(g, g));
    require(F->is_unit(u), errc::not_bass, "discriminant extraction failed");
    return g;
}

// A local basis of O_P whose first element is 1, together with the
// trace-adapted dual basis and the ternary Gram matrix M.
struct LocalGram {
    std::array<Quat, 4> basis1;
    std::array<Quat, 4> dual;
    KMat3 M;
};

inline LocalGram local_gram(const Lattice& O, const Prime& pr) {
    const Algebra* A = O.alg();
    const Field* F = A->F;
    require(O.contains(Quat::one(A)), errc::not_bass, "lattice does not contain 1");
    auto c = O.coords(Quat::one(A));
    int t = -1;
    for (int i = 0; i < 4 && t < 0; ++i)
        if (!c[i].is_zero() && val(pr, c[i]) == 0) t = i;
    require(t >= 0, errc::not_bass, "1 is not part of a local basis");
    LocalGram out;
    out.basis1[0] = Quat::one(A);
    int w = 1;
    for (int i = 0; i < 4; ++i)
        if (i != t) out.basis1[w++] = O.row(i);
    KMat4 G;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) G.m[i][j] = out.basis1[i].pair_conj(out.basis1[j]);
    KMat4 Gi = kmat_inv(F, G);
    for (int i = 0; i < 4; ++i) {
        Quat v = Quat::zero(A);
        for (int k = 0; k < 4; ++k) v = v + Gi.m[i][k] * out.basis1[k];
        out.dual[i] = v;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.M.m[i][j] = out.dual[i + 1].pair_conj(out.dual[j + 1]);
    return out;
}

namespace detail {

inline long vval(const Prime& pr, const KNum& x) {
    return x.is_zero() ? std::numeric_limits<long>::max() / 4 : val(pr, x);
}

// Working view of a symmetric 3x3 form under congruence column operations.
struct SymWork {
    const Field* F;
    KMat3 S; // current form
    KMat3 C; // accumulated transform: S = C^t M C

    explicit SymWork(const Field* field, const KMat3& M) : F(field), S(M) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) C.m[i][j] = (i == j) ? F->one() : F->zero();
    }
    void colop(int dst, int src, const KNum& f) {
        if (f.is_zero()) return;
        for (int r = 0; r < 3; ++r) {
            S.m[r][dst] = S.m[r][dst] + f * S.m[r][src];
            C.m[r][dst] = C.m[r][dst] + f * C.m[r][src];
        }
        for (int c = 0; c < 3; ++c) S.m[dst][c] = S.m[dst][c] + f * S.m[src][c];
    }
    void scalecol(int idx, const KNum& f) {
        for (int r = 0; r < 3; ++r) {
            S.m[r][idx] = S.m[r][idx] * f;
            C.m[r][idx] = C.m[r][idx] * f;
        }
        for (int c = 0; c < 3; ++c) S.m[idx][c] = S.m[idx][c] * f;
    }
    void swapcols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < 3; ++r) {
            std::swap(S.m[r][a], S.m[r][b]);
            std::swap(C.m[r][a], C.m[r][b]);
        }
        for (int c = 0; c < 3; ++c) std::swap(S.m[a][c], S.m[b][c]);
    }
};

// Symmetric congruence diagonalization for odd residue characteristic,
// where the Jordan splitting is unique and mixing resolves off-diagonal
// minima.  (Dyadic forms are normalized constructively; see below.)
inline SymWork sym3_diagonalize_odd(const Field* F, const Prime& pr, const KMat3& M) {
    require(!pr.dyadic(), errc::diagonalization_failed, "odd-prime reduction only");
    SymWork w(F, M);
    int pos = 0;
    int guard = 0;
    while (pos < 3) {
        require(++guard < 64, errc::diagonalization_failed, "reduction did not settle");
        long best_diag = std::numeric_limits<long>::max() / 4;
        int bd = -1;
        for (int i = pos; i < 3; ++i)
            if (vval(pr, w.S.m[i][i]) < best_diag) { best_diag = vval(pr, w.S.m[i][i]); bd = i; }
        long best_off = std::numeric_limits<long>::max() / 4;
        int bi = -1, bj = -1;
        for (int i = pos; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (vval(pr, w.S.m[i][j]) < best_off) { best_off = vval(pr, w.S.m[i][j]); bi = i; bj = j; }
        require(std::min(best_diag, best_off) < std::numeric_limits<long>::max() / 8,
                errc::rank_deficient, "degenerate ternary form");
        if (best_diag <= best_off) {
            w.swapcols(pos, bd);
            for (int j = pos + 1; j < 3; ++j)
                w.colop(j, pos, F->neg(F->div(w.S.m[pos][j], w.S.m[pos][pos])));
            ++pos;
            continue;
        }
        // mix so that a diagonal entry attains the minimum valuation
        KNum plus = w.S.m[bi][bi] + w.S.m[bj][bj] + Rat(2) * w.S.m[bi][bj];
        w.colop(bi, bj, vval(pr, plus) == best_off ? F->one() : F->make(-1));
    }
    return w;
}

inline bool unit_is_square(const Local& L, const KNum& x) {
    if (x.is_zero() || val(L.prime(), x) != 0) return false;
    if (!L.prime().dyadic()) return chi(L.rs, x) == 1;
    return hensel_sqrt_opt(L.rs, x, 3).has_value();
}

// Canonical representatives modulo pi^digits (small searches only).
inline std::vector<KNum> reps_mod(const Local& L, int digits) {
    const Prime& pr = L.prime();
    const Field* F = pr.F;
    std::vector<KNum> out = {F->zero()};
    KNum piw = F->one();
    for (int d = 0; d < digits; ++d) {
        std::vector<KNum> next;
        for (const KNum& base : out)
            for (const KNum& r : L.rs.natural) next.push_back(F->add(base, F->mul(r, piw)));
        out = std::move(next);
        piw = F->mul(piw, pr.pi);
    }
    return out;
}

// Solve c1 x^2 + c2 y^2 = target to precision pi^N at an odd prime, with x
// a unit; binary mixing suffices there since residue conics always have
// points.  (Dyadic representations go through dyadic_find_vector instead.)
struct RepSol {
    KNum x, y;
};

inline std::optional<RepSol> represent_value(const Local& L, const KNum& c1, const KNum* c2,
                                             const KNum& target, int N) {
    const Field* F = L.field();
    const Prime& pr = L.prime();
    KNum u = F->div(target, c1);
    if (unit_is_square(L, u)) return RepSol{hensel_sqrt(L.rs, u, N), F->zero()};
    if (!c2 || vval(pr, *c2) != vval(pr, c1)) return std::nullopt;
    for (const KNum& y0 : L.rs.natural) {
        if (y0.is_zero()) continue;
        KNum rem = F->sub(target, F->mul(*c2, F->mul(y0, y0)));
        if (rem.is_zero() || val(pr, rem) != vval(pr, c1)) continue;
        KNum q = F->div(rem, c1);
        if (!unit_is_square(L, q)) continue;
        return RepSol{hensel_sqrt(L.rs, q, N), y0};
    }
    return std::nullopt;
}

inline long quat_cong_val(const Lattice& O, const Prime& pr, const Quat& x, const Quat& y) {
    Quat d = x - y;
    if (d.is_zero()) return std::numeric_limits<long>::max() / 4;
    long m = std::numeric_limits<long>::max() / 4;
    for (const KNum& c : O.coords(d))
        if (!c.is_zero()) m = std::min(m, val(pr, c));
    return m;
}

// ---- dyadic constructive normalization ---------------------------------
//
// The dyadic Jordan splitting is not unique (an even block next to an odd
// vector can be rearranged), so the target pattern is constructed directly:
// find vectors with prescribed values of the integral form T, then complete
// and clear.

using Vec3 = std::array<KNum, 3>;

inline KNum tpair(const Field* F, const KMat3& T, const Vec3& u, const Vec3& v) {
    KNum s = F->zero();
    for (int a = 0; a < 3; ++a) {
        if (u[a].is_zero()) continue;
        for (int b = 0; b < 3; ++b) {
            if (v[b].is_zero()) continue;
            s = s + u[a] * T.m[a][b] * v[b];
        }
    }
    return s;
}

// Search a vector in the span of `gens` with T-value = target mod 2^M.
// Newton steps are taken along any generator meeting the dyadic progress
// condition val(F) > 2 val(2B) - val(Q(g)); the pairing need not be a unit.
inline std::optional<Vec3> dyadic_find_vector(const Local& L, const KMat3& T,
                                              const std::vector<Vec3>& gens, const KNum& target,
                                              int M) {
    const Field* F = L.field();
    const Prime& pr = L.prime();
    size_t n = gens.size();
    auto polish = [&](Vec3 v) -> std::optional<Vec3> {
        for (int iter = 0; iter < 4 * M + 16; ++iter) {
            KNum F0 = F->sub(tpair(F, T, v, v), target);
            if (F0.is_zero() || val(pr, F0) >= M) return v;
            long vF = val(pr, F0);
            int dir = -1;
            long best_gain = -1;
            for (size_t g = 0; g < n; ++g) {
                KNum B = tpair(F, T, v, gens[g]);
                if (B.is_zero()) continue;
                long w = 1 + val(pr, B); // val of 2B
                KNum Qg = tpair(F, T, gens[g], gens[g]);
                long vq = Qg.is_zero() ? (M + 8) : val(pr, Qg);
                if (vF < w) continue;                    // step not integral
                long gain = 2 * (vF - w) + vq;           // val of t^2 Q(g)
                if (gain <= vF) continue;                // no progress
                if (gain > best_gain) { best_gain = gain; dir = (int)g; }
            }
            if (dir < 0) return std::nullopt;
            KNum B = tpair(F, T, v, gens[dir]);
            KNum t = F->neg(F->div(F->div(F0, F->make(2)), B));
            t = reduce_mod(pr, t, M + 6);
            for (int c = 0; c < 3; ++c)
                v[c] = reduce_mod(pr, F->add(v[c], F->mul(t, gens[dir][c])), M + 8);
        }
        return std::nullopt;
    };
    for (int digits : {3, 4}) {
        if (digits == 4 && n > 2) break; // mod-16 refinement only for small scans
        std::vector<KNum> seeds = reps_mod(L, digits);
        std::vector<size_t> counter(n, 0);
        while (true) {
            Vec3 v = {F->zero(), F->zero(), F->zero()};
            bool primitive = false;
            for (size_t g = 0; g < n; ++g) {
                const KNum& c = seeds[counter[g]];
                if (c.is_zero()) continue;
                if (val(pr, c) == 0) primitive = true;
                for (int t = 0; t < 3; ++t) v[t] = v[t] + c * gens[g][t];
            }
            if (primitive) {
                KNum F0 = F->sub(tpair(F, T, v, v), target);
                if (F0.is_zero() || val(pr, F0) >= 3) {
                    auto r = polish(v);
                    if (r) return r;
                }
            }
            bool advanced = false;
            for (size_t g = 0; g < n; ++g) {
                if (++counter[g] < seeds.size()) { advanced = true; break; }
                counter[g] = 0;
            }
            if (!advanced) break;
        }
    }
    return std::nullopt;
}

// Normalize M to the pattern of a dyadic table row; returns the column
// transform C with C^t M C matching the row shape to precision 2^Nw
// (last diagonal entry free).
inline std::optional<KMat3> dyadic_normalize(const Local& L, const KMat3& M,
                                             const LocalClass& cls, int Nw) {
    const Field* F = L.field();
    const Prime& pr = L.prime();
    KNum scale;
    if (cls.is_block()) {
        KNum tw = F->one();
        for (int t = 0; t < cls.s; ++t) tw = F->mul(tw, F->make(2));
        scale = (cls.letter == Cls::A2) ? F->mul(F->make(3), tw) : F->neg(tw);
    } else {
        scale = Rat(2) * cls.a * cls.b;
    }
    KMat3 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T.m[i][j] = F->mul(scale, M.m[i][j]);
            if (!T.m[i][j].is_zero() && val(pr, T.m[i][j]) < 0) return std::nullopt;
        }
    Vec3 e[3] = {{F->one(), F->zero(), F->zero()},
                 {F->zero(), F->one(), F->zero()},
                 {F->zero(), F->zero(), F->one()}};
    auto det3 = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
        KMat3 D;
        for (int r = 0; r < 3; ++r) {
            D.m[r][0] = a[r];
            D.m[r][1] = b[r];
            D.m[r][2] = c[r];
        }
        return kmat3_det(D);
    };
    Vec3 c0, c1, c2;
    if (!cls.is_block()) {
        // target diag(1, a, free)
        auto v1 = dyadic_find_vector(L, T, {e[0], e[1], e[2]}, F->one(), Nw + 2);
        if (!v1) return std::nullopt;
        c0 = *v1;
        int j1 = -1, j2 = -1;
        for (int j = 0; j < 3 && j1 < 0; ++j)
            for (int k = j + 1; k < 3; ++k) {
                KNum d = det3(c0, e[j], e[k]);
                if (!d.is_zero() && val(pr, d) == 0) { j1 = j; j2 = k; break; }
            }
        if (j1 < 0) return std::nullopt;
        KNum q0inv = inv_mod(pr, tpair(F, T, c0, c0), Nw + 4);
        auto clear0 = [&](const Vec3& x) {
            KNum t = reduce_mod(pr, F->mul(tpair(F, T, c0, x), q0inv), Nw + 4);
            Vec3 out;
            for (int r = 0; r < 3; ++r) out[r] = F->sub(x[r], F->mul(t, c0[r]));
            return out;
        };
        Vec3 f1 = clear0(e[j1]), f2 = clear0(e[j2]);
        auto v2 = dyadic_find_vector(L, T, {f1, f2}, cls.a, Nw + 2);
        if (!v2) return std::nullopt;
        c1 = *v2;
        // third: whichever of f1, f2 keeps the triple unimodular, cleared vs c1
        Vec3 rest = f1;
        if (det3(c0, c1, rest).is_zero() || val(pr, det3(c0, c1, rest)) != 0) rest = f2;
        if (det3(c0, c1, rest).is_zero() || val(pr, det3(c0, c1, rest)) != 0) return std::nullopt;
        KNum q1 = tpair(F, T, c1, c1);
        KNum b12 = tpair(F, T, c1, rest);
        if (!b12.is_zero()) {
            KNum t = F->div(b12, q1);
            if (val(pr, t) < 0) return std::nullopt;
            t = reduce_mod(pr, t, Nw + 4);
            for (int r = 0; r < 3; ++r) rest[r] = F->sub(rest[r], F->mul(t, c1[r]));
        }
        c2 = rest;
    } else {
        KNum eps = (cls.letter == Cls::A2) ? F->one() : F->zero();
        KNum two_eps = Rat(2) * eps;
        auto v1 = dyadic_find_vector(L, T, {e[0], e[1], e[2]}, two_eps, Nw + 2);
        if (!v1) return std::nullopt;
        c0 = *v1;
        // second vector: unit pairing scaled to 1, own value 2 eps
        bool have = false;
        std::vector<KNum> seeds = reps_mod(L, 1);
        for (const KNum& w0 : seeds) {
            for (const KNum& w1 : seeds) {
                for (const KNum& w2 : seeds) {
                    Vec3 w = {w0, w1, w2};
                    if (w0.is_zero() && w1.is_zero() && w2.is_zero()) continue;
                    KNum p = tpair(F, T, c0, w);
                    if (p.is_zero() || val(pr, p) != 0) continue;
                    {
                        KNum s = inv_mod(pr, p, Nw + 4);
                        for (int r = 0; r < 3; ++r) w[r] = reduce_mod(pr, F->mul(s, w[r]), Nw + 6);
                    }
                    bool ok = false;
                    for (int round = 0; round < Nw + 6; ++round) {
                        KNum pv = tpair(F, T, c0, w);
                        KNum dp = F->sub(pv, F->one());
                        if (!dp.is_zero() && val(pr, dp) < Nw) {
                            KNum s = inv_mod(pr, pv, Nw + 4);
                            for (int r = 0; r < 3; ++r)
                                w[r] = reduce_mod(pr, F->mul(s, w[r]), Nw + 6);
                        }
                        KNum V = tpair(F, T, w, w);
                        KNum dv = F->sub(V, two_eps);
                        if (dv.is_zero() || val(pr, dv) >= Nw) {
                            KNum pv2 = F->sub(tpair(F, T, c0, w), F->one());
                            if (pv2.is_zero() || val(pr, pv2) >= Nw) { ok = true; break; }
                            continue;
                        }
                        if (val(pr, dv) < 1) break; // odd defect: unreachable target
                        // g(t) = (V-2eps)/2 + t * pair + t^2 * (Q(c0)/2)
                        KNum aq = F->div(tpair(F, T, c0, c0), F->make(2));
                        KNum pair = tpair(F, T, c0, w);
                        auto g = [&](const KNum& t) {
                            return F->add(F->add(F->div(dv, F->make(2)), F->mul(t, pair)),
                                          F->mul(F->mul(t, t), aq));
                        };
                        KNum t;
                        bool seeded = false;
                        for (const KNum& t0 : L.rs.natural) {
                            KNum g0 = g(t0);
                            if (g0.is_zero() || val(pr, g0) >= 1) { t = t0; seeded = true; break; }
                        }
                        if (!seeded) break;
                        for (int it = 0; it < Nw + 6; ++it) {
                            KNum g0 = g(t);
                            if (g0.is_zero() || val(pr, g0) >= Nw + 1) break;
                            KNum der = F->add(pair, F->mul(Rat(2) * aq, t));
                            t = reduce_mod(pr, F->sub(t, F->mul(g0, inv_mod(pr, der, Nw + 4))), Nw + 4);
                        }
                        if (!g(t).is_zero() && val(pr, g(t)) < Nw) break;
                        for (int r = 0; r < 3; ++r)
                            w[r] = reduce_mod(pr, F->add(w[r], F->mul(t, c0[r])), Nw + 6);
                    }
                    if (ok) { c1 = w; have = true; }
                    if (have) break;
                }
                if (have) break;
            }
            if (have) break;
        }
        if (!have) return std::nullopt;
        // third vector: complete and clear against the near-unimodular block
        int k3 = -1;
        for (int k = 0; k < 3 && k3 < 0; ++k) {
            KNum d = det3(c0, c1, e[k]);
            if (!d.is_zero() && val(pr, d) == 0) k3 = k;
        }
        if (k3 < 0) return std::nullopt;
        Vec3 x = e[k3];
        KNum q00 = tpair(F, T, c0, c0), q01 = tpair(F, T, c0, c1), q11 = tpair(F, T, c1, c1);
        KNum det = F->sub(F->mul(q00, q11), F->mul(q01, q01));
        if (det.is_zero() || val(pr, det) != 0) return std::nullopt;
        KNum b0 = tpair(F, T, c0, x), b1 = tpair(F, T, c1, x);
        KNum alpha = F->div(F->sub(F->mul(q11, b0), F->mul(q01, b1)), det);
        KNum beta = F->div(F->sub(F->mul(q00, b1), F->mul(q01, b0)), det);
        alpha = reduce_mod(pr, alpha, Nw + 4);
        beta = reduce_mod(pr, beta, Nw + 4);
        for (int r = 0; r < 3; ++r)
            x[r] = F->sub(x[r], F->add(F->mul(alpha, c0[r]), F->mul(beta, c1[r])));
        c2 = x;
    }
    KNum dC = det3(c0, c1, c2);
    if (dC.is_zero() || val(pr, dC) != 0) return std::nullopt;
    KMat3 C;
    for (int r = 0; r < 3; ++r) {
        C.m[r][0] = c0[r];
        C.m[r][1] = c1[r];
        C.m[r][2] = c2[r];
    }
    return C;
}

inline bool local_basis_of(const Lattice& O, const Prime& pr, const std::array<Quat, 4>& e) {
    KMat4 T;
    for (int i = 0; i < 4; ++i) {
        auto c = O.coords(e[i]);
        for (int j = 0; j < 4; ++j) {
            if (!c[j].is_zero() && val(pr, c[j]) < 0) return false;
            T.m[i][j] = c[j];
        }
    }
    KNum det = kmat_det(O.alg()->F, T);
    return !det.is_zero() && val(pr, det) == 0;
}

} // namespace detail

// Quasi-good basis data: {1, e1, e2, e3} whose multiplication table matches
// the good-basis relations of `cls` modulo pi^certified.
struct QuasiGood {
    LocalClass cls;
    std::array<Quat, 4> e;    // e[0] = 1
    std::array<Quat, 4> dual; // normalized trace-adapted dual
    int certified = 0;
};

namespace detail {

inline int verify_relations(const Lattice& O, const Prime& pr, const LocalClass& cls,
                            const std::array<Quat, 4>& e, int cap) {
    const Algebra* A = O.alg();
    const Field* F = A->F;
    Quat one = Quat::one(A);
    auto S = [&](const KNum& v) { return Quat::scalar(A, v); };
    std::vector<std::pair<Quat, Quat>> rel;
    const Quat &e1 = e[1], &e2 = e[2], &e3 = e[3];
    if (!cls.is_block()) {
        const KNum &a = cls.a, &b = cls.b;
        rel = {{e1 * e1, S(F->neg(a * b))}, {e2 * e2, S(F->neg(b))}, {e3 * e3, S(F->neg(a))},
               {e1 * e2, F->neg(b) * e3},   {e2 * e3, -e1},          {e3 * e1, F->neg(a) * e2},
               {e2 * e1, b * e3},           {e3 * e2, e1},           {e1 * e3, a * e2}};
    } else {
        KNum tw = F->one();
        for (int t = 0; t < cls.s; ++t) tw = F->mul(tw, F->make(2));
        if (cls.letter == Cls::A1) {
            rel = {{e1 * e1, Quat::zero(A)}, {e1 * e2, tw * (one - e3)}, {e2 * e1, tw * e3},
                   {e2 * e2, Quat::zero(A)}, {e2 * e3, Quat::zero(A)},   {e3 * e2, e2},
                   {e3 * e3, e3},            {e3 * e1, Quat::zero(A)},   {e1 * e3, e1}};
        } else {
            rel = {{e1 * e1, S(F->neg(tw))}, {e1 * e2, tw * (one - e3)}, {e2 * e1, tw * e3},
                   {e2 * e2, S(F->neg(tw))}, {e2 * e3, -e1},             {e3 * e2, e1 + e2},
                   {e3 * e3, e3 - one},      {e3 * e1, -e2},             {e1 * e3, e1 + e2}};
        }
    }
    long cert = cap;
    for (auto& [x, y] : rel) cert = std::min(cert, quat_cong_val(O, pr, x, y));
    return (int)std::max<long>(cert, 0);
}

} // namespace detail

// Attempt the quasi-good normalization of O at P for a given table row.
// Returns the certified basis, or nullopt when the row does not match.
inline std::optional<QuasiGood> try_quasi_good(const Lattice& O, const Local& L,
                                               const LocalClass& cls) {
    const Prime& pr = L.prime();
    const Field* F = pr.F;
    const Algebra* A = O.alg();
    if (disc_exponent_at(O, pr) != cls.disc_exponent()) return std::nullopt;
    int m = cls.disc_exponent();
    int va = cls.is_block() ? 0 : (int)detail::vval(pr, cls.a);
    int need = pr.dyadic() ? (cls.is_block() ? 3 : 3 * va + 2) : 2 * va + 1;
    int Nw = std::max({need, m + 1, L.N}) + 4 + 2 * va;

    LocalGram G = local_gram(O, pr);
    KMat3 C, S;
    auto recompute_S = [&]() {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                KNum s = F->zero();
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) s = s + C.m[a][i] * G.M.m[a][b] * C.m[b][j];
                S.m[i][j] = s;
            }
    };
    if (!pr.dyadic()) {
        detail::SymWork w = detail::sym3_diagonalize_odd(F, pr, G.M);
        KNum two_ab = Rat(2) * cls.a * cls.b;
        // 2ab M = diag(1, a, btilde), i.e. M = diag(1, a, btilde)/(2ab)
        std::array<KNum, 3> target = {F->inv(two_ab), F->div(cls.a, two_ab), F->div(cls.b, two_ab)};
        for (int i = 0; i < 2; ++i) {
            // keep the remaining diagonal sorted by valuation
            for (int x = i; x < 3; ++x)
                for (int y = x + 1; y < 3; ++y)
                    if (detail::vval(pr, w.S.m[y][y]) < detail::vval(pr, w.S.m[x][x]))
                        w.swapcols(x, y);
            if (detail::vval(pr, w.S.m[i][i]) != detail::vval(pr, target[i])) return std::nullopt;
            const KNum* c2 = nullptr;
            if (detail::vval(pr, w.S.m[i + 1][i + 1]) == detail::vval(pr, w.S.m[i][i]))
                c2 = &w.S.m[i + 1][i + 1];
            auto sol = detail::represent_value(L, w.S.m[i][i], c2, target[i], Nw + 2);
            if (!sol) return std::nullopt;
            w.scalecol(i, sol->x);
            w.colop(i, i + 1, sol->y);
            for (int j = i + 1; j < 3; ++j)
                w.colop(j, i, reduce_mod(pr, F->neg(F->div(w.S.m[i][j], w.S.m[i][i])), Nw + 6));
        }
        if (detail::vval(pr, w.S.m[2][2]) != detail::vval(pr, target[2])) return std::nullopt;
        C = w.C;
        S = w.S;
    } else {
        auto copt = detail::dyadic_normalize(L, G.M, cls, Nw);
        if (!copt) return std::nullopt;
        C = *copt;
        recompute_S();
    }

    // determinant normalization: det(M') must be the table determinant times
    // a unit square u^2; rescale the last dual vector by 1/u.
    {
        KNum detS = kmat3_det(S);
        if (detS.is_zero()) return std::nullopt;
        KNum want;
        if (!cls.is_block()) {
            KNum ab = cls.a * cls.b;
            want = F->div(F->one(), Rat(8) * ab * ab);
        } else {
            KNum tw = F->one();
            for (int t = 0; t < cls.s; ++t) tw = F->mul(tw, F->make(2));
            want = F->div(F->make(2), F->mul(tw, tw));
            if (cls.letter == Cls::A2) want = F->div(want, F->make(9));
        }
        KNum u2 = F->div(detS, want);
        if (detail::vval(pr, u2) != 0) return std::nullopt;
        if (!detail::unit_is_square(L, u2)) return std::nullopt;
        KNum u = inv_mod(pr, hensel_sqrt(L.rs, u2, Nw + 4), Nw + 4);
        for (int r = 0; r < 3; ++r) C.m[r][2] = C.m[r][2] * u;
    }

    QuasiGood out;
    out.cls = cls;
    out.dual[0] = G.dual[0];
    for (int i = 0; i < 3; ++i) {
        Quat v = Quat::zero(A);
        for (int k = 0; k < 3; ++k) v = v + C.m[k][i] * G.dual[k + 1];
        out.dual[i + 1] = v;
    }
    KNum c;
    if (!cls.is_block()) {
        c = Rat(4) * cls.a * cls.b;
    } else {
        KNum tw = F->one();
        for (int t = 0; t < cls.s; ++t) tw = F->mul(tw, F->make(2));
        c = (cls.letter == Cls::A2) ? F->mul(F->make(3), tw) : F->neg(tw);
    }
    out.e[0] = Quat::one(A);
    out.e[1] = c * (out.dual[2] * out.dual[3].conj());
    out.e[2] = c * (out.dual[3] * out.dual[1].conj());
    out.e[3] = c * (out.dual[1] * out.dual[2].conj());
    if (!detail::local_basis_of(O, pr, out.e)) return std::nullopt;
    out.certified = detail::verify_relations(O, pr, cls, out.e, Nw);
    if (out.certified < 1) return std::nullopt;
    return out;
}

// Candidate table rows with the given disc exponent, in canonical try order.
inline std::vector<LocalClass> candidate_rows(const Local& L, int m) {
    const Field* F = L.field();
    const Prime& pr = L.prime();
    auto piw = [&](int s) {
        KNum w = F->one();
        for (int t = 0; t < s; ++t) w = F->mul(w, pr.pi);
        return w;
    };
    std::vector<LocalClass> out;
    if (!pr.dyadic()) {
        out.push_back({false, Cls::A1, m, false, false, 1, F->make(-1), piw(m)});
        if (m >= 1) out.push_back({false, Cls::A2, m, false, false, 1, F->neg(L.delta), piw(m)});
        if (m == 2)
            for (int e1 = 0; e1 < 2; ++e1)
                out.push_back({false, Cls::B, 1, e1 == 1, false, 1, pr.pi,
                               e1 ? F->mul(L.delta, pr.pi) : pr.pi});
        if (m >= 3)
            for (int e1 = 0; e1 < 2; ++e1)
                for (int e2 = 0; e2 < 2; ++e2)
                    out.push_back({false, Cls::C, m - 1, e1 == 1, e2 == 1, 1,
                                   e1 ? F->mul(L.delta, pr.pi) : pr.pi,
                                   e2 ? F->mul(L.delta, piw(m - 1)) : piw(m - 1)});
        return out;
    }
    out.push_back({true, Cls::A1, m, false, false, 1, F->zero(), F->zero()});
    if (m >= 1) out.push_back({true, Cls::A2, m, false, false, 1, F->zero(), F->zero()});
    auto push_diag = [&](Cls letter, long aval, int s, long dval) {
        out.push_back({true, letter, s, false, false, dval, F->make(aval),
                       F->mul(F->make(dval), piw(s))});
    };
    if (m >= 2)
        for (long dl : {1L, 3L}) push_diag(Cls::B, 1, m - 2, dl);
    if (m >= 5)
        for (long dl : {1L, 3L}) push_diag(Cls::D, 5, m - 2, dl);
    if (m >= 4)
        for (long dl : {1L, 3L}) push_diag(Cls::C, 6, m - 3, dl);
    if (m >= 6)
        for (long dl : {1L, 5L}) push_diag(Cls::E, 2, m - 3, dl);
    if (m >= 7) {
        for (long dl : {1L, 5L}) push_diag(Cls::Fc, 14, m - 3, dl);
        for (long dl : {1L, 5L}) push_diag(Cls::G, 10, m - 3, dl);
    }
    return out;
}

inline LocalClass classify_local_order(const Lattice& O, const Local& L) {
    int m = disc_exponent_at(O, L.prime());
    for (const LocalClass& cls : candidate_rows(L, m))
        if (try_quasi_good(O, L, cls)) return cls;
    fail(errc::not_bass, "no classification row matches at " + L.prime().str());
}

inline QuasiGood quasi_good_basis(const Lattice& O, const Local& L, const LocalClass& cls) {
    auto r = try_quasi_good(O, L, cls);
    require(r.has_value(), errc::diagonalization_failed,
            "quasi-good normalization failed for " + cls.label() + " at " + L.prime().str());
    return *r;
}

} // namespace quatlat

#endif
