#ifndef QUATLAT_TEST_FIXTURES_HPP
#define QUATLAT_TEST_FIXTURES_HPP

// Shared reference data for the test suites: the standard quaternion orders
// over Q(sqrt 5) and Q used as known-good inputs and expected outputs.

#include <quatlat/lattice.hpp>

namespace fixtures {

using namespace quatlat;

struct Ctx {
    const Field* F;
    Algebra A;
    Ctx(long d, long a0, long b0) : F(Field::get(d)), A(F, F->make(a0), F->make(b0)) {}
};

inline Ctx& sqrt5_ctx() {
    static Ctx c(5, -1, -1);
    return c;
}
inline Ctx& rational_ctx() {
    static Ctx c(0, -1, -1);
    return c;
}
inline Ctx& rational_b3_ctx() {
    static Ctx c(0, -1, -3);
    return c;
}

// q(c0,c1,c2,c3) with each coordinate given as (num_a, num_b, den)
inline Quat mk(const Ctx& C, std::array<std::array<long, 3>, 4> co) {
    auto f = [&](const std::array<long, 3>& t) {
        return KNum(C.F, Rat(t[0], t[2]), Rat(t[1], t[2]));
    };
    return Quat(&C.A, f(co[0]), f(co[1]), f(co[2]), f(co[3]));
}

// The standard maximal order of (-1,-1) over Q(sqrt 5) (icosian-type):
// <(1+w'i+wj)/2, (w'i+j+wk)/2, (wi+w'j+k)/2, (i+wj+w'k)/2> with w' = w - 1.
inline Lattice R1() {
    Ctx& C = sqrt5_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 2}, {-1, 1, 2}, {0, 1, 2}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {-1, 1, 2}, {1, 0, 2}, {0, 1, 2}}}),
        mk(C, {{{0, 0, 1}, {0, 1, 2}, {-1, 1, 2}, {1, 0, 2}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {-1, 1, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// R(2) = <1, i, j, (1+i+j+k)/2>
inline Lattice R2() {
    Ctx& C = sqrt5_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 0, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// R(6) = <1, i+2k, 3k, (1+i+j+k)/2>
inline Lattice R6() {
    Ctx& C = sqrt5_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {3, 0, 1}}}),
        mk(C, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 0, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// R(6 sqrt 5) = <1, i+2k, 3 sqrt5 k, (1+i+j+7k)/2>,  sqrt5 = 2w-1
inline Lattice R6s5() {
    Ctx& C = sqrt5_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}}),
        mk(C, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, 0, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// R(30) = <1, i+2k, 15k, (1+i+j+7k)/2>
inline Lattice R30() {
    Ctx& C = sqrt5_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {15, 0, 1}}}),
        mk(C, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, 0, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// The non-principal class representative at discriminant 6:
// J = <i+(w-1)k, j-(w+1)k, 3k, 1+(w/2)(3-i-j-3k)>
inline Lattice J6() {
    Ctx& C = sqrt5_ctx();
    std::vector<Quat> g = {
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {-1, 1, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-1, -1, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {3, 0, 1}}}),
        mk(C, {{{2, 3, 2}, {0, -1, 2}, {0, -1, 2}, {0, -3, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// Table of discriminant-(6 sqrt 5) class representatives, in printed order:
// I1, I4, J1, J2, J3, J5 (ideals over R(6 sqrt 5)).
inline std::vector<Lattice> table_disc6s5() {
    Ctx& C = sqrt5_ctx();
    auto L = [&](std::array<std::array<long, 3>, 4> r0, std::array<std::array<long, 3>, 4> r1,
                 std::array<std::array<long, 3>, 4> r2, std::array<std::array<long, 3>, 4> r3) {
        return Lattice::from_generators(&C.A, {mk(C, r0), mk(C, r1), mk(C, r2), mk(C, r3)});
    };
    std::vector<Lattice> out;
    // I1
    out.push_back(L({{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, 0, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}},
                    {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}},
                    {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, 0, 2}}}));
    // I4
    out.push_back(L({{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, 0, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {14, 0, 1}}},
                    {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {19, 0, 2}}}));
    // J1: i+(w-1)k, 3 sqrt5 k, j-(w+7)k, (1-i-j+(17+2w)k)/2
    out.push_back(L({{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {-1, 1, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-7, -1, 1}}},
                    {{{1, 0, 2}, {-1, 0, 2}, {-1, 0, 2}, {17, 2, 2}}}));
    // J2: ..., j-(w+4)k, (1-i-j+(5+2w)k)/2
    out.push_back(L({{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {-1, 1, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-4, -1, 1}}},
                    {{{1, 0, 2}, {-1, 0, 2}, {-1, 0, 2}, {5, 2, 2}}}));
    // J3: ..., j-(w+1)k, (1-i+j+(7-2w)k)/2
    out.push_back(L({{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {-1, 1, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-1, -1, 1}}},
                    {{{1, 0, 2}, {-1, 0, 2}, {1, 0, 2}, {7, -2, 2}}}));
    // J5: ..., j-(w-5)k, (1-i-j+(2w-1)k)/2
    out.push_back(L({{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {-1, 1, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {-3, 6, 1}}},
                    {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {5, -1, 1}}},
                    {{{1, 0, 2}, {-1, 0, 2}, {-1, 0, 2}, {-1, 2, 2}}}));
    return out;
}

// Table of the 26 discriminant-30 class representatives, listed with the
// index of their parent in table_disc6s5() order.
struct Disc30Entry {
    Lattice L;
    int parent;
};

inline std::vector<Disc30Entry> table_disc30() {
    Ctx& C = sqrt5_ctx();
    // rows are (first basis vector, j-row, last vector); second vector is 15k
    auto mkL = [&](std::array<std::array<long, 3>, 4> v1, std::array<std::array<long, 3>, 4> vj,
                   std::array<std::array<long, 3>, 4> vl) {
        std::vector<Quat> g = {mk(C, v1), mk(C, {{{0, 0, 1}, {0, 0, 1}, {0, 0, 1}, {15, 0, 1}}}),
                               mk(C, vj), mk(C, vl)};
        return Lattice::from_generators(&C.A, g);
    };
    std::array<std::array<long, 3>, 4> ipk = {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, 0, 1}}};       // i+2k
    std::array<std::array<long, 3>, 4> iwk = {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {2, -5, 1}}};      // i+(2-5w)k
    std::vector<Disc30Entry> out;
    auto add = [&](int parent, std::array<std::array<long, 3>, 4> v1,
                   std::array<std::array<long, 3>, 4> vj, std::array<std::array<long, 3>, 4> vl) {
        out.push_back({mkL(v1, vj, vl), parent});
    };
    // I1,* (parent 0)
    add(0, ipk, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, 0, 2}}});
    add(0, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, 6, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {13, -12, 2}}});
    add(0, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-1, -3, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {-11, 6, 2}}});
    add(0, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-4, 3, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {5, 6, 2}}});
    add(0, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-7, -6, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 12, 2}}});
    // I4,* (parent 1)
    add(1, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {4, -6, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {-5, -12, 2}}});
    add(1, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-7, -3, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 6, 2}}});
    add(1, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {5, 3, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, -12, 2}}});
    add(1, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, -6, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {13, 12, 2}}});
    add(1, ipk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {14, 0, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {19, 0, 2}}});
    // J1,* (parent 2)
    add(2, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {5, 5, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, -10, 2}}});
    add(2, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, -4, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {13, 8, 2}}});
    add(2, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, -1, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {-11, -4, 2}}});
    add(2, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-4, -7, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {-5, 14, 2}}});
    add(2, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-1, -7, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 2, 2}}});
    // J2,* (parent 3)
    add(3, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {5, -7, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, -10, 2}}});
    add(3, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {5, -4, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, 8, 2}}});
    add(3, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, 2, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {13, -4, 2}}});
    // J3,* (parent 4)
    add(4, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-4, 5, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {-5, -10, 2}}});
    add(4, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-7, -4, 1}}}, {{{1, 0, 2}, {-1, 0, 2}, {1, 0, 2}, {1, 8, 2}}});
    add(4, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {5, 2, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {7, -4, 2}}});
    add(4, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, -7, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {13, 14, 2}}});
    add(4, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {-11, 2, 2}}});
    // J5,* (parent 5)
    add(5, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {2, 5, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {13, -10, 2}}});
    add(5, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-1, -4, 1}}}, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {11, 8, 2}}});
    add(5, iwk, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {-4, 2, 1}}}, {{{1, 0, 2}, {-1, 0, 2}, {1, 0, 2}, {-9, 6, 2}}});
    return out;
}

// Hurwitz order in (-1,-1)_Q: <1, i, j, (1+i+j+k)/2>
inline Lattice hurwitz() {
    Ctx& C = rational_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {0, 0, 1}, {1, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, {1, 0, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

// Maximal order of (-1,-3)_Q: <1, i, (1+j)/2, (i+k)/2>
inline Lattice max_b3() {
    Ctx& C = rational_b3_ctx();
    std::vector<Quat> g = {
        mk(C, {{{1, 0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 1}}}),
        mk(C, {{{1, 0, 2}, {0, 0, 1}, {1, 0, 2}, {0, 0, 1}}}),
        mk(C, {{{0, 0, 1}, {1, 0, 2}, {0, 0, 1}, {1, 0, 2}}}),
    };
    return Lattice::from_generators(&C.A, g);
}

} // namespace fixtures

#endif
