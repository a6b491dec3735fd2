#ifndef QUATLAT_QUAT_HPP
#define QUATLAT_QUAT_HPP

// The quaternion algebra B = (a,b)_K with basis 1, i, j, k = ij:
// i^2 = a, j^2 = b, ji = -ij.

#include <array>

#include "field.hpp"

namespace quatlat {

struct Algebra {
    const Field* F = nullptr;
    KNum a, b;

    Algebra() = default;
    Algebra(const Field* field, KNum ai, KNum bj) : F(field), a(std::move(ai)), b(std::move(bj)) {
        require(!a.is_zero() && !b.is_zero(), errc::invalid_argument, "degenerate algebra");
    }

    bool totally_definite() const {
        if (F->rational()) return a.a().sign() < 0 && b.a().sign() < 0;
        auto neg = [&](const KNum& x) { return F->emb_sign(x, +1) < 0 && F->emb_sign(x, -1) < 0; };
        return neg(a) && neg(b);
    }
    friend bool operator==(const Algebra& x, const Algebra& y) {
        return x.F == y.F && x.a == y.a && x.b == y.b;
    }
};

class Quat {
public:
    Quat() : A_(nullptr) {}
    Quat(const Algebra* A, KNum c0, KNum c1, KNum c2, KNum c3)
        : A_(A), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    static Quat zero(const Algebra* A) {
        const Field* F = A->F;
        return Quat(A, F->zero(), F->zero(), F->zero(), F->zero());
    }
    static Quat one(const Algebra* A) {
        const Field* F = A->F;
        return Quat(A, F->one(), F->zero(), F->zero(), F->zero());
    }
    static Quat scalar(const Algebra* A, const KNum& s) {
        const Field* F = A->F;
        return Quat(A, s, F->zero(), F->zero(), F->zero());
    }

    const Algebra* alg() const { return A_; }
    const KNum& operator[](int i) const { return c_[i]; }
    KNum& operator[](int i) { return c_[i]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }

    friend Quat operator+(const Quat& x, const Quat& y) {
        return Quat(x.A_, x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]);
    }
    friend Quat operator-(const Quat& x, const Quat& y) {
        return Quat(x.A_, x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]);
    }
    friend Quat operator-(const Quat& x) {
        return Quat(x.A_, -x.c_[0], -x.c_[1], -x.c_[2], -x.c_[3]);
    }
    friend Quat operator*(const KNum& s, const Quat& x) {
        return Quat(x.A_, s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3]);
    }
    friend Quat operator*(const Rat& s, const Quat& x) {
        return Quat(x.A_, s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3]);
    }

    friend Quat operator*(const Quat& x, const Quat& y) {
        const Algebra* A = x.A_;
        const KNum& a = A->a;
        const KNum& b = A->b;
        const KNum &x0 = x.c_[0], &x1 = x.c_[1], &x2 = x.c_[2], &x3 = x.c_[3];
        const KNum &y0 = y.c_[0], &y1 = y.c_[1], &y2 = y.c_[2], &y3 = y.c_[3];
        KNum ab = a * b;
        KNum c0 = x0 * y0 + a * (x1 * y1) + b * (x2 * y2) - ab * (x3 * y3);
        KNum c1 = x0 * y1 + x1 * y0 - b * (x2 * y3) + b * (x3 * y2);
        KNum c2 = x0 * y2 + x2 * y0 + a * (x1 * y3) - a * (x3 * y1);
        KNum c3 = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
        return Quat(A, std::move(c0), std::move(c1), std::move(c2), std::move(c3));
    }

    friend bool operator==(const Quat& x, const Quat& y) {
        return x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] && x.c_[2] == y.c_[2] && x.c_[3] == y.c_[3];
    }
    friend bool operator!=(const Quat& x, const Quat& y) { return !(x == y); }

    Quat conj() const { return Quat(A_, c_[0], -c_[1], -c_[2], -c_[3]); }
    KNum trace() const { return Rat(2) * c_[0]; }
    KNum norm() const {
        const KNum& a = A_->a;
        const KNum& b = A_->b;
        return c_[0] * c_[0] - a * (c_[1] * c_[1]) - b * (c_[2] * c_[2]) + (a * b) * (c_[3] * c_[3]);
    }
    // Tr(x * conj(y)), the bilinear form of the reduced norm.
    KNum pair_conj(const Quat& y) const { return ((*this) * y.conj()).trace(); }
    // Tr(x * y), the plain trace pairing.
    KNum pair_plain(const Quat& y) const { return ((*this) * y).trace(); }

    bool is_integral() const {
        return c_[0].is_integral() && c_[1].is_integral() && c_[2].is_integral() && c_[3].is_integral();
    }

    std::string str() const {
        static const char* names[4] = {"", "i", "j", "k"};
        std::string s;
        for (int t = 0; t < 4; ++t) {
            if (c_[t].is_zero()) continue;
            std::string piece = c_[t].str();
            if (piece.find_first_of("+-", 1) != std::string::npos || piece.find('w') != std::string::npos)
                piece = "(" + piece + ")";
            if (t > 0) piece = (piece == "1" ? "" : piece == "-1" ? "-" : piece + "*") + std::string(names[t]);
            if (!s.empty() && piece[0] != '-') s += "+";
            s += piece;
        }
        return s.empty() ? "0" : s;
    }

private:
    const Algebra* A_;
    std::array<KNum, 4> c_;
};

inline Quat quat_inv(const Quat& x) {
    KNum n = x.norm();
    require(!n.is_zero(), errc::invalid_argument, "inverting a zero-norm quaternion");
    Quat c = x.conj();
    KNum ninv = x.alg()->F->inv(n);
    return ninv * c;
}

} // namespace quatlat

#endif
