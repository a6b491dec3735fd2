#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quatlat/arith.hpp>
#include <quatlat/field.hpp>

#include <random>

using namespace quatlat;

TEST_CASE("integer arithmetic against native reference") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int it = 0; it < 2000; ++it) {
        long a = dist(rng), b = dist(rng);
        CHECK(Int(a) + Int(b) == Int(a + b));
        CHECK(Int(a) * Int(b) == Int(a * b));
        CHECK(Int(a) - Int(b) == Int(a - b));
        if (b != 0) {
            CHECK(Int(a).fdiv_q(Int(b)) * Int(b) + Int(a).fdiv_r(Int(b)) == Int(a));
            CHECK(Int(a).fdiv_r(Int(b)).sign() * b >= 0);
        }
    }
    CHECK(Int("123456789123456789") * Int("987654321987654321") ==
          Int("121932631356500531347203169112635269"));
    CHECK(Int(2).pow(100).str() == "1267650600228229401496703205376");
}

TEST_CASE("factor_int recovers prime powers") {
    auto f = factor_int(Int(2) * Int(2) * Int(3) * Int(5) * Int(5) * Int(7919));
    REQUIRE(f.size() == 4);
    CHECK(f[0].first == Int(2));
    CHECK(f[0].second == 2);
    CHECK(f[1].first == Int(3));
    CHECK(f[2].first == Int(5));
    CHECK(f[2].second == 2);
    CHECK(f[3].first == Int(7919));
    auto g = factor_int(Int("1140624")); // 2^4 * 3 * 23763
    Int back(1);
    for (auto& [p, e] : g) back *= p.pow(e);
    CHECK(back == Int("1140624"));
}

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat(-5, 10).str() == "-1/2");
    CHECK(Rat(7, 2).floor() == Int(3));
    CHECK(Rat(-7, 2).floor() == Int(-4));
    CHECK(Rat(5, 2).round() == Int(3));
    CHECK(Rat(-5, 2).round() == Int(-2));
    CHECK(Rat("22/7").num() == Int(22));
}

TEST_CASE("field element arithmetic in Q(sqrt 5)") {
    const Field* F = Field::get(5);
    KNum w = F->omega();
    CHECK(F->mul(w, w) == F->add(w, F->one())); // w^2 = w + 1
    CHECK(F->norm(w) == Rat(-1));
    CHECK(F->trace(w) == Rat(1));
    KNum s5 = F->sqrt_d();
    CHECK(F->mul(s5, s5) == F->make(5));
    CHECK(F->emb_sign(s5, +1) > 0);
    CHECK(F->emb_sign(s5, -1) < 0);
    CHECK(F->totally_positive(F->make(3)));
    CHECK(!F->totally_positive(s5));
    CHECK(F->totally_positive(F->mul(w, w)));
}

TEST_CASE("embedding signs are exact for w = sqrt d fields") {
    const Field* F = Field::get(2);
    KNum x = F->make(-1, 1); // -1 + sqrt 2 > 0, conjugate < 0
    CHECK(F->emb_sign(x, +1) > 0);
    CHECK(F->emb_sign(x, -1) < 0);
    KNum u = F->fundamental_unit();
    CHECK(F->norm(u) == Rat(-1));
}

TEST_CASE("canonical associate is a canonical form modulo units") {
    for (long d : {2L, 5L, 13L, 73L}) {
        const Field* F = Field::get(d);
        KNum u = F->fundamental_unit();
        std::mt19937_64 rng(d);
        std::uniform_int_distribution<long> dist(-30, 30);
        for (int it = 0; it < 50; ++it) {
            KNum x = F->make(dist(rng), dist(rng));
            if (x.is_zero()) continue;
            KNum c = F->canonical_associate(x);
            CHECK(F->totally_positive(c));
            CHECK(F->norm(F->div(c, x)).abs().is_one());
            // associates map to the same representative
            KNum y = F->mul(x, u);
            CHECK(F->canonical_associate(y) == c);
            CHECK(F->canonical_associate(F->neg(x)) == c);
        }
    }
    const Field* Q = Field::get(0);
    CHECK(Q->canonical_associate(Q->make(-7)) == Q->make(7));
}

TEST_CASE("euclidean division has small remainders") {
    for (long d : {2L, 5L, 13L, 17L, 29L, 37L, 41L, 73L}) {
        const Field* F = Field::get(d);
        std::mt19937_64 rng(d * 7);
        std::uniform_int_distribution<long> dist(-50, 50);
        for (int it = 0; it < 200; ++it) {
            KNum x = F->make(dist(rng), dist(rng));
            KNum y = F->make(dist(rng), dist(rng));
            if (y.is_zero()) continue;
            KNum q = F->euc_div(x, y);
            CHECK(q.is_integral());
            KNum r = F->sub(x, F->mul(q, y));
            CHECK(F->norm(r).abs() < F->norm(y).abs());
        }
    }
}

TEST_CASE("euclidean gcd divides both arguments") {
    const Field* F = Field::get(5);
    KNum x = F->make(12, 6), y = F->make(8, 2);
    KNum g = F->euc_gcd(x, y);
    CHECK(F->div(x, g).is_integral());
    CHECK(F->div(y, g).is_integral());
    CHECK(F->euc_gcd(F->make(4), F->make(6)) == F->make(2));
}

TEST_CASE("unsupported base fields are rejected") {
    CHECK_THROWS_AS((void)Field::get(3), error);  // narrow class number 2
    CHECK_THROWS_AS((void)Field::get(10), error);
    CHECK_NOTHROW((void)Field::get(0));
    CHECK_NOTHROW((void)Field::get(13));
}

TEST_CASE("every allowlisted field has a norm minus-one fundamental unit") {
    // this is what makes every totally positive unit a square of a unit
    for (long d : {2L, 5L, 13L, 17L, 29L, 37L, 41L, 73L}) {
        const Field* F = Field::get(d);
        KNum u = F->fundamental_unit();
        CHECK(F->norm(u) == Rat(-1));
        CHECK(u.is_integral());
        KNum sq = F->mul(u, u);
        CHECK(F->totally_positive(sq));
    }
}
