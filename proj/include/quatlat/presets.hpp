#ifndef QUATLAT_PRESETS_HPP
#define QUATLAT_PRESETS_HPP

// Built-in maximal orders, so the standard examples run as one-liners.

#include "lattice.hpp"

namespace quatlat {

struct Preset {
    const Algebra* algebra;
    Lattice order;
};

// The icosian-type maximal order of (-1,-1) over Q(sqrt 5):
// <(1+w'i+wj)/2, (w'i+j+wk)/2, (wi+w'j+k)/2, (i+wj+w'k)/2>, w' = w - 1.
inline Preset preset_maximal_sqrt5() {
    const Field* F = Field::get(5);
    static Algebra A(F, F->make(-1), F->make(-1));
    auto half = Rat(1, 2);
    KNum z = F->zero();
    KNum wp = F->make(-1, 1), w = F->omega(), one = F->one();
    std::vector<Quat> g = {
        Quat(&A, half * one, half * wp, half * w, z),
        Quat(&A, z, half * wp, half * one, half * w),
        Quat(&A, z, half * w, half * wp, half * one),
        Quat(&A, z, half * one, half * w, half * wp),
    };
    return {&A, Lattice::from_generators(&A, g)};
}

// The Hurwitz order of (-1,-1) over Q.
inline Preset preset_hurwitz() {
    const Field* F = Field::get(0);
    static Algebra A(F, F->make(-1), F->make(-1));
    KNum z = F->zero(), one = F->one();
    auto half = Rat(1, 2);
    std::vector<Quat> g = {
        Quat(&A, one, z, z, z),
        Quat(&A, z, one, z, z),
        Quat(&A, z, z, one, z),
        Quat(&A, half * one, half * one, half * one, half * one),
    };
    return {&A, Lattice::from_generators(&A, g)};
}

// A maximal order of (-1,-3) over Q: <1, i, (1+j)/2, (i+k)/2>.
inline Preset preset_maximal_q3() {
    const Field* F = Field::get(0);
    static Algebra A(F, F->make(-1), F->make(-3));
    KNum z = F->zero(), one = F->one();
    auto half = Rat(1, 2);
    std::vector<Quat> g = {
        Quat(&A, one, z, z, z),
        Quat(&A, z, one, z, z),
        Quat(&A, half * one, z, half * one, z),
        Quat(&A, z, half * one, z, half * one),
    };
    return {&A, Lattice::from_generators(&A, g)};
}

inline Preset preset_by_name(const std::string& name) {
    if (name == "maximal-sqrt5") return preset_maximal_sqrt5();
    if (name == "hurwitz") return preset_hurwitz();
    if (name == "maximal-q3") return preset_maximal_q3();
    fail(errc::invalid_argument, "unknown preset: " + name);
}

} // namespace quatlat

#endif
