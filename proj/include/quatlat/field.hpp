#ifndef QUATLAT_FIELD_HPP
#define QUATLAT_FIELD_HPP

// The base field K: either Q or a real quadratic field Q(sqrt d) whose ring
// of integers is norm-Euclidean and whose narrow class number is 1.
// Elements are stored as a + b*w with exact rational coordinates, where
// w = (1+sqrt d)/2 for d = 1 mod 4 and w = sqrt d otherwise.

#include <array>
#include <map>
#include <memory>

#include "arith.hpp"
#include "common.hpp"

namespace quatlat {

class Field;

class KNum {
public:
    KNum() : F_(nullptr), a_(0), b_(0) {}
    KNum(const Field* F, Rat a, Rat b) : F_(F), a_(std::move(a)), b_(std::move(b)) {}

    const Field* field() const { return F_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_integral() const { return a_.is_integer() && b_.is_integer(); }
    bool is_rational() const { return b_.is_zero(); }

    friend bool operator==(const KNum& x, const KNum& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const KNum& x, const KNum& y) { return !(x == y); }

    std::string str() const;

private:
    friend class Field;
    const Field* F_;
    Rat a_, b_;
};

class Field {
public:
    // d = 0 selects Q. Only allowlisted d are accepted: norm-Euclidean real
    // quadratic rings of integers with a fundamental unit of norm -1, so the
    // narrow class number is 1.
    static const Field* get(long d) {
        static std::map<long, std::unique_ptr<Field>> cache;
        auto it = cache.find(d);
        if (it != cache.end()) return it->second.get();
        require(d == 0 || allowed(d), errc::unsupported_field,
                "field Q(sqrt " + std::to_string(d) + ") not supported");
        auto f = std::unique_ptr<Field>(new Field(d));
        const Field* p = f.get();
        cache.emplace(d, std::move(f));
        return p;
    }

    long d() const { return d_; }
    bool rational() const { return d_ == 0; }
    bool half_integral() const { return half_; } // w = (1+sqrt d)/2
    int degree() const { return rational() ? 1 : 2; }

    KNum make(Rat a, Rat b = Rat(0)) const {
        require(rational() ? b.is_zero() : true, errc::invalid_argument, "rational field has no w part");
        return KNum(this, std::move(a), std::move(b));
    }
    KNum make(long a, long b = 0) const { return make(Rat(a), Rat(b)); }
    KNum zero() const { return make(0); }
    KNum one() const { return make(1); }
    KNum omega() const { return make(0, 1); }
    KNum sqrt_d() const { // 2w-1 or w
        require(!rational(), errc::invalid_argument, "sqrt d in Q");
        return half_ ? make(-1, 2) : make(0, 1);
    }
    KNum fundamental_unit() const {
        require(!rational(), errc::invalid_argument, "no fundamental unit over Q");
        return make(Rat(u_a_), Rat(u_b_));
    }

    KNum add(const KNum& x, const KNum& y) const { return KNum(this, x.a() + y.a(), x.b() + y.b()); }
    KNum sub(const KNum& x, const KNum& y) const { return KNum(this, x.a() - y.a(), x.b() - y.b()); }
    KNum neg(const KNum& x) const { return KNum(this, -x.a(), -x.b()); }
    KNum mul(const KNum& x, const KNum& y) const {
        // w^2 = wt*w + wn
        Rat cross = x.a() * y.b() + x.b() * y.a();
        Rat ww = x.b() * y.b();
        return KNum(this, x.a() * y.a() + ww * wn_, cross + ww * wt_);
    }
    KNum conj(const KNum& x) const {
        // conjugate of w is wt - w
        return KNum(this, x.a() + x.b() * wt_, -x.b());
    }
    Rat trace(const KNum& x) const { return rational() ? x.a() : Rat(2) * x.a() + x.b() * wt_; }
    Rat norm(const KNum& x) const {
        if (rational()) return x.a();
        KNum n = mul(x, conj(x));
        return n.a(); // b part vanishes
    }
    KNum inv(const KNum& x) const {
        require(!x.is_zero(), errc::invalid_argument, "inverting zero");
        if (rational()) return KNum(this, x.a().inv(), Rat(0));
        Rat n = norm(x);
        KNum c = conj(x);
        return KNum(this, c.a() / n, c.b() / n);
    }
    KNum div(const KNum& x, const KNum& y) const { return mul(x, inv(y)); }

    // Sign of x under the embedding sending sqrt d to the positive root
    // (sig = +1) or the negative root (sig = -1).
    int emb_sign(const KNum& x, int sig = +1) const {
        if (rational()) return x.a().sign();
        // 2x = s + t*sqrt d with s = 2a + b*wt and t = b (half type) or 2b
        Rat s = Rat(2) * x.a() + x.b() * wt_;
        Rat t = half_ ? x.b() : Rat(2) * x.b();
        if (sig < 0) t = -t;
        int ss = s.sign(), ts = t.sign();
        if (ss == 0 && ts == 0) return 0;
        if (ss >= 0 && ts >= 0) return +1;
        if (ss <= 0 && ts <= 0) return -1;
        Rat cmp = s * s - t * t * Rat(d_);
        return ss > 0 ? cmp.sign() : -cmp.sign();
    }
    bool totally_positive(const KNum& x) const {
        return emb_sign(x, +1) > 0 && (rational() || emb_sign(x, -1) > 0);
    }

    // Canonical associate: a fixed representative of x modulo units.  We pick
    // the totally positive associate whose embedding ratio lies in the
    // fundamental domain of the squared fundamental unit.
    KNum canonical_associate(const KNum& x) const {
        require(!x.is_zero(), errc::invalid_argument, "associate of zero");
        if (rational()) return KNum(this, x.a().abs(), Rat(0));
        KNum y = x;
        if (norm(y).sign() < 0) y = mul(y, fundamental_unit());
        if (emb_sign(y) < 0) y = neg(y);
        KNum eps = mul(fundamental_unit(), fundamental_unit()); // totally positive, > 1
        KNum eps_inv = inv(eps);
        // want sigma1(y) >= sigma2(y) and sigma1(y') < sigma2(y') for y' = y/eps
        auto ratio_ge_one = [&](const KNum& v) { return v.b().sign() >= 0; }; // sigma1-sigma2 = b*sqrt(d)
        while (!ratio_ge_one(y)) y = mul(y, eps);
        while (ratio_ge_one(mul(y, eps_inv))) y = mul(y, eps_inv);
        return y;
    }
    bool is_unit(const KNum& x) const { return x.is_integral() && norm(x).abs().is_one(); }

    // Euclidean division in the ring of integers: q with |N(x - q y)| < |N(y)|.
    KNum euc_div(const KNum& x, const KNum& y) const {
        require(!y.is_zero(), errc::invalid_argument, "euclidean division by zero");
        KNum t = div(x, y);
        if (rational()) return make(t.a().round());
        Int ra = t.a().round(), rb = t.b().round();
        KNum best = zero();
        Rat bestn(-1);
        for (long da = -2; da <= 2; ++da)
            for (long db = -2; db <= 2; ++db) {
                KNum q = make(Rat(ra + Int(da)), Rat(rb + Int(db)));
                Rat n = norm(sub(x, mul(q, y))).abs();
                if (bestn.sign() < 0 || n < bestn) { bestn = n; best = q; }
            }
        require(bestn < norm(y).abs(), errc::invalid_argument, "euclidean division failed");
        return best;
    }

    // gcd of integral elements via the Euclidean algorithm, canonicalized.
    KNum euc_gcd(KNum x, KNum y) const {
        require(x.is_integral() && y.is_integral(), errc::invalid_argument, "gcd of non-integral values");
        while (!y.is_zero()) {
            KNum q = euc_div(x, y);
            KNum r = sub(x, mul(q, y));
            x = y;
            y = r;
        }
        if (x.is_zero()) return x;
        return canonical_associate(x);
    }

    static bool allowed(long d) {
        for (long v : {2L, 5L, 13L, 17L, 29L, 37L, 41L, 73L})
            if (v == d) return true;
        return false;
    }

private:
    explicit Field(long d) : d_(d) {
        if (d == 0) {
            half_ = false;
            wt_ = Rat(0);
            wn_ = Rat(0);
            return;
        }
        half_ = (d % 4 == 1);
        if (half_) {
            wt_ = Rat(1);
            wn_ = Rat((d - 1) / 4);
        } else {
            wt_ = Rat(0);
            wn_ = Rat(d);
        }
        struct { long d, a, b; } units[] = {
            {2, 1, 1}, {5, 0, 1}, {13, 1, 1}, {17, 3, 2},
            {29, 2, 1}, {37, 5, 2}, {41, 27, 10}, {73, 943, 250},
        };
        for (auto& u : units)
            if (u.d == d) { u_a_ = u.a; u_b_ = u.b; }
    }

    long d_;
    bool half_;
    Rat wt_, wn_; // w^2 = wt*w + wn
    long u_a_ = 0, u_b_ = 0;
};

inline std::string KNum::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str();
    if (b_.sign() > 0 && !s.empty()) s += "+";
    if (b_.is_one())
        s += "w";
    else if (b_ == Rat(-1))
        s += "-w";
    else
        s += b_.str() + "*w";
    return s;
}

inline KNum operator+(const KNum& x, const KNum& y) { return x.field()->add(x, y); }
inline KNum operator-(const KNum& x, const KNum& y) { return x.field()->sub(x, y); }
inline KNum operator*(const KNum& x, const KNum& y) { return x.field()->mul(x, y); }
inline KNum operator/(const KNum& x, const KNum& y) { return x.field()->div(x, y); }
inline KNum operator-(const KNum& x) { return x.field()->neg(x); }
inline KNum operator*(const Rat& c, const KNum& x) { return KNum(x.field(), c * x.a(), c * x.b()); }

} // namespace quatlat

#endif
