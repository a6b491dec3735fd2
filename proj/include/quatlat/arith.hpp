#ifndef QUATLAT_ARITH_HPP
#define QUATLAT_ARITH_HPP

// Thin value-type wrappers around GMP integers and rationals.

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace quatlat {

class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            fail(errc::invalid_argument, "bad integer literal: " + s);
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept { mpz_init(z_); mpz_swap(z_, o.z_); }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.z_, a.z_); return r; }
    Int& operator+=(const Int& o) { mpz_add(z_, z_, o.z_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(z_, z_, o.z_); return *this; }

    // Truncated division; exact division asserts divisibility.
    friend Int operator/(const Int& a, const Int& b) { Int r; mpz_tdiv_q(r.z_, a.z_, b.z_); return r; }
    friend Int operator%(const Int& a, const Int& b) { Int r; mpz_tdiv_r(r.z_, a.z_, b.z_); return r; }
    Int divexact(const Int& b) const {
        Int r;
        mpz_divexact(r.z_, z_, b.z_);
        return r;
    }
    Int fdiv_q(const Int& b) const { Int r; mpz_fdiv_q(r.z_, z_, b.z_); return r; }
    Int fdiv_r(const Int& b) const { Int r; mpz_fdiv_r(r.z_, z_, b.z_); return r; }

    bool divisible_by(const Int& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }
    friend bool operator==(const Int& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }
    friend bool operator!=(const Int& a, long b) { return mpz_cmp_si(a.z_, b) != 0; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    Int abs() const { Int r; mpz_abs(r.z_, z_); return r; }
    Int gcd(const Int& o) const { Int r; mpz_gcd(r.z_, z_, o.z_); return r; }
    Int lcm(const Int& o) const { Int r; mpz_lcm(r.z_, z_, o.z_); return r; }
    Int pow(unsigned long e) const { Int r; mpz_pow_ui(r.z_, z_, e); return r; }

    bool is_perfect_square() const { return mpz_perfect_square_p(z_) != 0; }
    Int isqrt() const { Int r; mpz_sqrt(r.z_, z_); return r; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        require(fits_long(), errc::invalid_argument, "integer too large for long");
        return mpz_get_si(z_);
    }

    bool probab_prime() const { return mpz_probab_prime_p(z_, 30) != 0; }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpz_t z_;
};

inline Int gcd(const Int& a, const Int& b) { return a.gcd(b); }

// Trial division with a Pollard rho fallback; plenty for the sizes this
// library produces (discriminant data of desk-scale orders).
inline std::vector<std::pair<Int, int>> factor_int(Int n) {
    std::vector<std::pair<Int, int>> out;
    n = n.abs();
    require(!n.is_zero(), errc::invalid_argument, "factoring zero");
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n.divisible_by(p)) {
            n = n.divexact(p);
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(Int(2));
    for (long d = 3; d <= 1000000 && Int(d) * Int(d) <= n; d += 2) strip(Int(d));
    // Whatever is left is either prime or needs rho.
    std::vector<Int> stack;
    if (!n.is_one()) stack.push_back(n);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m.is_one()) continue;
        if (m.probab_prime()) {
            bool merged = false;
            for (auto& [p, e] : out)
                if (p == m) { ++e; merged = true; break; }
            if (!merged) out.emplace_back(m, 1);
            continue;
        }
        // Pollard rho (Brent variant not needed at this scale).
        Int c(1), x(2), y(2), d(1);
        while (d.is_one()) {
            auto f = [&](const Int& v) { return (v * v + c) % m; };
            x = f(x);
            y = f(f(y));
            d = gcd((x - y).abs(), m);
            if (d == m) { c += Int(1); x = Int(2); y = Int(2); d = Int(1); }
        }
        stack.push_back(d);
        stack.push_back(m.divexact(d));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rat(const Int& n) { mpq_init(q_); mpq_set_z(q_, n.raw()); }
    Rat(const Int& n, const Int& d) {
        require(!d.is_zero(), errc::invalid_argument, "zero denominator");
        mpq_init(q_);
        mpq_set_num(q_, n.raw());
        mpq_set_den(q_, d.raw());
        mpq_canonicalize(q_);
    }
    Rat(long n, long d) : Rat(Int(n), Int(d)) {}
    explicit Rat(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0) {
            mpq_clear(q_);
            fail(errc::invalid_argument, "bad rational literal: " + s);
        }
        mpq_canonicalize(q_);
    }
    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        require(mpq_sgn(b.q_) != 0, errc::invalid_argument, "division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_, a.q_); return r; }
    Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }

    Int num() const { Int r; mpz_set(r.raw(), mpq_numref(q_)); return r; }
    Int den() const { Int r; mpz_set(r.raw(), mpq_denref(q_)); return r; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }

    Rat abs() const { Rat r; mpq_abs(r.q_, q_); return r; }
    Rat inv() const {
        require(!is_zero(), errc::invalid_argument, "inverting zero");
        Rat r;
        mpq_inv(r.q_, q_);
        return r;
    }

    Int floor() const { return num().fdiv_q(den()); }
    Int round() const { // nearest, half toward +inf
        Int two_n = Int(2) * num() + den();
        return two_n.fdiv_q(Int(2) * den());
    }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

private:
    mpq_t q_;
};

} // namespace quatlat

#endif
