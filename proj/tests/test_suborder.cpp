#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quatlat/suborder.hpp>

#include "fixtures.hpp"

using namespace quatlat;

static LocalClass classify_at(const Lattice& O, long p) {
    Prime pr = factor_prime(O.alg()->F, p)[0];
    Local L = make_local(pr, 6);
    return classify_local_order(O, L);
}

TEST_CASE("single descent step at an odd prime") {
    const Field* F = Field::get(5);
    Lattice R2 = fixtures::R2();
    Prime p3 = factor_prime(F, 3)[0];
    Local L = make_local(p3, 6);
    LocalClass from = classify_local_order(R2, L);
    REQUIRE(from.letter == Cls::A1);
    REQUIRE(from.s == 0);
    LocalClass target = detail::make_odd_class(L, Cls::A1, 1, false, false);
    SuborderStep st = maximal_suborder(R2, L, from, target);

    CHECK(st.child.is_order());
    CHECK(st.e == 1);
    CHECK(reduced_discriminant(st.child) == F->make(6));
    CHECK(R2.contains(st.child));
    CHECK(index_ideal(R2, st.child) == F->make(3));
    // p O' <= O
    CHECK(R2.contains(st.child.scale(p3.pi)));
    // away from 3 nothing changed
    Prime p2 = factor_prime(F, 2)[0];
    CHECK(val(p2, index_ideal(R2, st.child)) == 0);
    // re-classification returns the target
    CHECK(classify_local_order(st.child, L) == target);
    // the constructed order is locally isomorphic to the reference R(6)
    CHECK(classify_at(fixtures::R6(), 3) == target);
}

TEST_CASE("dyadic descent step: H-block, s = 0 to s = 1") {
    const Field* F = Field::get(5);
    Lattice R1 = fixtures::R1();
    Prime p2 = factor_prime(F, 2)[0];
    Local L = make_local(p2, 6);
    LocalClass from = classify_local_order(R1, L);
    REQUIRE(from.letter == Cls::A1);
    LocalClass target = detail::make_dyadic_class(L, Cls::A1, 1, 1);
    SuborderStep st = maximal_suborder(R1, L, from, target);
    CHECK(st.child.is_order());
    CHECK(reduced_discriminant(st.child) == F->make(2));
    CHECK(classify_local_order(st.child, L) == target);
    CHECK(classify_at(fixtures::R2(), 2) == target);
}

TEST_CASE("the reference chain of discriminants over Q(sqrt 5)") {
    const Field* F = Field::get(5);
    Lattice R1 = fixtures::R1();
    std::vector<std::pair<Prime, std::pair<Cls, int>>> targets;
    for (auto& [pr, e] : factor_discriminant(F, F->make(30)))
        targets.push_back({pr, {Cls::A1, (int)e}});
    ChainResult chain = suborder_chain(R1, targets);

    REQUIRE(chain.orders.size() == 5);
    CHECK(reduced_discriminant(chain.orders[0]) == F->one());
    CHECK(reduced_discriminant(chain.orders[1]) == F->make(2));
    CHECK(reduced_discriminant(chain.orders[2]) == F->make(6));
    CHECK(reduced_discriminant(chain.orders[3]) ==
          F->canonical_associate(F->mul(F->make(6), F->sqrt_d())));
    CHECK(reduced_discriminant(chain.orders[4]) == F->make(30));
    for (size_t i = 1; i < chain.orders.size(); ++i)
        CHECK(chain.orders[i - 1].contains(chain.orders[i]));
    for (const SuborderStep& st : chain.steps) {
        CHECK(st.to.letter == Cls::A1);
        CHECK(st.child.is_order());
    }
    // each constructed order is locally isomorphic to its printed counterpart
    CHECK(classify_at(chain.orders[2], 3) == classify_at(fixtures::R6(), 3));
    CHECK(classify_at(chain.orders[3], 5) == classify_at(fixtures::R6s5(), 5));
    CHECK(classify_at(chain.orders[4], 5) == classify_at(fixtures::R30(), 5));
}

TEST_CASE("A2 target at an inert odd prime (index p^2 step)") {
    const Field* F = Field::get(5);
    Lattice R1 = fixtures::R1();
    Prime p3 = factor_prime(F, 3)[0];
    std::vector<std::pair<Prime, std::pair<Cls, int>>> targets = {{p3, {Cls::A2, 2}}};
    ChainResult chain = suborder_chain(R1, targets);
    REQUIRE(chain.orders.size() == 2);
    CHECK(reduced_discriminant(chain.orders[1]) == F->make(9));
    CHECK(chain.steps[0].e == 2);
    Local L = make_local(p3, 6);
    LocalClass got = classify_local_order(chain.orders[1], L);
    CHECK(got.letter == Cls::A2);
    CHECK(got.s == 2);
}

TEST_CASE("the typographically ambiguous dyadic row certifies some variant") {
    // (-1,-3)_Q maximal order: A1 s=0 at 2; descend to A2 s=2 (J + <4>)
    const Field* Q = Field::get(0);
    Lattice M3 = fixtures::max_b3();
    Prime p2 = factor_prime(Q, 2)[0];
    Local L = make_local(p2, 6);
    LocalClass from = classify_local_order(M3, L);
    REQUIRE(from.letter == Cls::A1);
    REQUIRE(from.s == 0);
    LocalClass target = detail::make_dyadic_class(L, Cls::A2, 2, 1);
    SuborderStep st = maximal_suborder(M3, L, from, target);
    CHECK(st.e == 2);
    CHECK(reduced_discriminant(st.child) == Q->make(12));
    CHECK(classify_local_order(st.child, L) == target);
    MESSAGE("ambiguous-row variant chosen: ", st.variant);
}

TEST_CASE("dyadic descents over Q: J-block and diagonal rows") {
    const Field* Q = Field::get(0);
    Lattice hur = fixtures::hurwitz();
    Prime p2 = factor_prime(Q, 2)[0];

    // A2(1) -> A2(3): the division-algebra tower
    {
        std::vector<std::pair<Prime, std::pair<Cls, int>>> t = {{p2, {Cls::A2, 3}}};
        ChainResult ch = suborder_chain(hur, t);
        REQUIRE(ch.orders.size() == 2);
        CHECK(reduced_discriminant(ch.orders[1]) == Q->make(8));
        CHECK(ch.steps[0].e == 2);
    }
    // A2(1) -> B(0,1): the Lipschitz class
    {
        std::vector<std::pair<Prime, std::pair<Cls, int>>> t = {{p2, {Cls::B, 2}}};
        ChainResult ch = suborder_chain(hur, t);
        REQUIRE(ch.orders.size() == 2);
        CHECK(reduced_discriminant(ch.orders[1]) == Q->make(4));
        Local L = make_local(p2, 6);
        LocalClass got = classify_local_order(ch.orders[1], L);
        CHECK(got.letter == Cls::B);
        CHECK(got.dy_delta == 1);
    }
    // deeper diagonal tower: B -> B -> C -> E exercises several table rows
    {
        std::vector<std::pair<Prime, std::pair<Cls, int>>> t = {{p2, {Cls::E, 6}}};
        ChainResult ch = suborder_chain(hur, t);
        CHECK(reduced_discriminant(ch.orders.back()) == Q->make(64));
        Local L = make_local(p2, 6);
        LocalClass got = classify_local_order(ch.orders.back(), L);
        CHECK(got.letter == Cls::E);
    }
    // and the D-row: B(2,1) -> D(3,3)
    {
        std::vector<std::pair<Prime, std::pair<Cls, int>>> t = {{p2, {Cls::D, 5}}};
        ChainResult ch = suborder_chain(hur, t);
        CHECK(reduced_discriminant(ch.orders.back()) == Q->make(32));
        Local L = make_local(p2, 6);
        CHECK(classify_local_order(ch.orders.back(), L).letter == Cls::D);
    }
}

TEST_CASE("odd-prime B and C rows over Q") {
    const Field* Q = Field::get(0);
    Lattice M3 = fixtures::max_b3();
    Prime p3 = factor_prime(Q, 3)[0];
    // at 3 the order is A2 s=1 (division); descend A2 -> B -> C -> C
    std::vector<std::pair<Prime, std::pair<Cls, int>>> t = {{p3, {Cls::C, 4}}};
    ChainResult ch = suborder_chain(M3, t);
    Local L = make_local(p3, 7);
    LocalClass got = classify_local_order(ch.orders.back(), L);
    CHECK(got.letter == Cls::C);
    CHECK(got.disc_exponent() == 4);
    // intermediate classes walked through B
    bool sawB = false;
    for (auto& st : ch.steps) sawB |= (st.to.letter == Cls::B);
    CHECK(sawB);
    // the algebra is division at 3, so every class in the tower must carry
    // the ramified sign from the table
    for (auto& st : ch.steps) CHECK(algebra_ramification(st.to, L) == -1);
}

TEST_CASE("dyadic tower signs match the division algebra at 2") {
    const Field* Q = Field::get(0);
    Prime p2 = factor_prime(Q, 2)[0];
    std::vector<std::pair<Prime, std::pair<Cls, int>>> t = {{p2, {Cls::E, 6}}};
    ChainResult ch = suborder_chain(fixtures::hurwitz(), t);
    Local L = make_local(p2, 6);
    for (auto& st : ch.steps) CHECK(algebra_ramification(st.to, L) == -1);
}

TEST_CASE("trivial chain: target discriminant (1)") {
    ChainResult ch = suborder_chain(fixtures::R1(), {});
    REQUIRE(ch.orders.size() == 1);
    CHECK(ch.orders[0] == fixtures::R1());
    CHECK(ch.steps.empty());
}

TEST_CASE("unreachable targets are reported") {
    const Field* F = Field::get(5);
    Prime p3 = factor_prime(F, 3)[0];
    Local L = make_local(p3, 6);
    LocalClass from = classify_local_order(fixtures::R1(), L);
    // B sits at disc exponent 2 only; asking for exponent 1 cannot be met
    CHECK_THROWS_AS(descent_path(from, L, Cls::B, 1), error);
}
