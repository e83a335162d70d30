#include <doctest.h>

#include "oracle.hpp"
#include "z2cover/walsh.hpp"

using namespace z2c;

TEST_CASE("forward transform examples") {
    CHECK(forward(GroupFunction(3)).v == std::vector<std::int64_t>(8, 0));
    GroupFunction d(2);
    const Elem chi0 = parse_bits("01", 2);
    for (Elem g = 1; g < 4; ++g) d[g] = dot(chi0, g);
    CHECK(forward(d).v == std::vector<std::int64_t>{2, 0, -2, 0});

    GroupFunction e(4);
    for (Elem g = 1; g < 16; ++g) e[g] = dot(1, g) ? 2 : 0;
    auto S = forward(e);
    for (Elem chi = 0; chi < 16; ++chi) CHECK(S[chi] == (chi == 0 ? 16 : chi == 1 ? -16 : 0));
    auto l = degrees_from_spectrum(S);
    for (Elem chi = 1; chi < 16; ++chi) CHECK(l[chi] == (chi == 1 ? 8 : 4));
}

TEST_CASE("forward matches direct summation") {
    std::mt19937_64 rng(1);
    for (int s = 1; s <= 8; ++s)
        for (int i = 0; i < 30; ++i) {
            auto d = oracle::random_function(rng, s, -40, 40);
            CHECK(forward(d).v == oracle::walsh(d.values()));
        }
}

TEST_CASE("inverse examples") {
    // three characters summing to zero at -4
    Spectrum S{4, std::vector<std::int64_t>(16, 0)};
    S.v[0] = 12;
    S.v[1] = S.v[2] = S.v[3] = -4;
    auto d = inverse(S);
    CHECK(d.total() == 12);
    for (Elem g = 1; g < 16; ++g) CHECK(d[g] == ((g & 3) == 0 ? 0 : 1));

    Spectrum T{4, std::vector<std::int64_t>(16, 0)};
    T.v[0] = 12;
    T.v[1] = -4;
    T.v[2] = -8;
    CHECK_THROWS_AS(inverse(T), NonIntegral);
    CHECK_FALSE(try_inverse(T).has_value());
}

TEST_CASE("degrees from spectrum") {
    auto l = degrees_from_spectrum(forward(GroupFunction::from_nonzero(2, {2, 6, 6})));
    CHECK(l[1] == 4);
    CHECK(l[2] == 6);
    CHECK(l[3] == 4);
    auto z = degrees_from_spectrum(Spectrum{3, std::vector<std::int64_t>(8, 0)});
    for (const auto& x : z) CHECK(x == 0);
}

TEST_CASE("cubic moment examples") {
    Spectrum S{6, std::vector<std::int64_t>(64, 1)};
    S.v[0] = 9;
    for (Elem chi = 1; chi <= 9; ++chi) S.v[chi] = -7;
    CHECK(triple_convolution_at_zero(S) == -36);

    GroupFunction d(2);
    for (Elem g = 1; g < 4; ++g) d[g] = dot(1, g);
    CHECK(triple_convolution_at_zero(forward(d)) == 0);
    CHECK(triple_convolution_at_zero(forward(GroupFunction(3))) == 0);
}

TEST_CASE("transform identities on random functions") {
    std::mt19937_64 rng(2024);
    for (int s = 1; s <= 8; ++s) {
        const std::int64_t n = std::int64_t{1} << s;
        for (int i = 0; i < 150; ++i) {
            auto f = oracle::random_function(rng, s, -30, 30);
            auto g = oracle::random_function(rng, s, -30, 30);
            auto F = forward(f), G = forward(g);
            CHECK(inverse(F) == f);
            std::int64_t first = 0, pars = 0, plan = 0, fg = 0, ff = 0;
            for (Elem x = 0; x < f.size(); ++x) {
                first += F[x];
                pars += F[x] * G[x];
                plan += F[x] * F[x];
                fg += f[x] * g[x];
                ff += f[x] * f[x];
            }
            CHECK(first == n * f[0]);
            CHECK(pars == n * fg);
            CHECK(plan == n * ff);
            if (s <= 5) {
                auto c = forward(GroupFunction(s, oracle::convolve(f.values(), g.values())));
                for (Elem x = 0; x < f.size(); ++x) CHECK(c[x] == F[x] * G[x]);
            }
        }
    }
}

TEST_CASE("cubic moment equals the direct triple sum") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const int s = 1 + i % 6;
        auto d = oracle::random_function(rng, s, 0, 9);
        CHECK(triple_convolution_at_zero(forward(d)) == oracle::ordered_triples(d.values()));
    }
}

TEST_CASE("overflow is an error, not a wrap") {
    GroupFunction d(2);
    d[1] = d[2] = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    CHECK_THROWS_AS(forward(d), std::overflow_error);
}
