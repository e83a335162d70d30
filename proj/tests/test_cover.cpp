#include <doctest.h>

#include "oracle.hpp"
#include "z2cover/cover.hpp"

using namespace z2c;

namespace {
CoverSpec make(WeightTuple w, int s, std::vector<std::int64_t> tail) {
    return {Weights(w), GroupFunction::from_nonzero(s, tail)};
}
}  // namespace

TEST_CASE("eigensheaf degrees") {
    CHECK(eigensheaf_degrees(GroupFunction::from_nonzero(2, {6, 6, 6})) == std::vector<std::int64_t>{0, 6, 6, 6});
    CHECK(eigensheaf_degrees(GroupFunction::from_nonzero(2, {2, 6, 6})) == std::vector<std::int64_t>{0, 4, 6, 4});
    try {
        eigensheaf_degrees(GroupFunction::from_nonzero(2, {1, 2, 2}));
        FAIL("expected NonIntegral");
    } catch (const NonIntegral& e) {
        CHECK(e.element == parse_bits("10", 2));
    }
}

TEST_CASE("eigensheaf degrees: half-sum oracle, spectrum agreement and first moment") {
    std::mt19937_64 rng(8);
    int valid = 0;
    while (valid < 1000) {
        const int s = 1 + valid % 8;
        auto d = oracle::random_branch(rng, s, 6);
        if (parity_vector(d) != 0) continue;
        ++valid;
        auto l = eigensheaf_degrees(d);
        auto q = degrees_from_spectrum(forward(d));
        std::int64_t sum = 0;
        for (Elem chi = 1; chi < d.size(); ++chi) {
            CHECK(2 * l[chi] == oracle::half_sum(d, chi));
            CHECK(q[chi] == l[chi]);
            sum += l[chi];
        }
        // sum of l = 2^{s-2} D, i.e. 4 * sum = 2^s D
        CHECK(4 * sum == (std::int64_t{1} << s) * d.total());
    }
}

TEST_CASE("flatness") {
    GroupFunction d(5);
    for (Elem g = 1; g < 32; ++g) d[g] = dot(1, g);
    CHECK(is_flat(CoverSpec{Weights({1, 1, 2, 2}), d}));
    auto l = eigensheaf_degrees(d);
    CHECK(l[1] == 8);
    CHECK(l[2] == 4);

    GroupFunction e(4);
    for (Elem g = 1; g < 16; ++g) e[g] = g == 1 ? 2 : 4;
    CHECK_FALSE(is_flat(CoverSpec{Weights({1, 1, 1, 4}), e}));
    CHECK(is_flat(make({1, 1, 1, 1}, 2, {1, 3, 5})));
}

TEST_CASE("Hurwitz degree") {
    CHECK(hurwitz_degree(make({1, 1, 1, 1}, 1, {10})) == 1);
    CHECK(hurwitz_degree(make({1, 1, 1, 1}, 2, {3, 3, 3})) == mpq_class(1, 2));
    CHECK(hurwitz_degree(make({1, 1, 1, 1}, 1, {8})) == 0);
}

TEST_CASE("half-point count") {
    CHECK(half_point_count(make({1, 1, 1, 1}, 2, {3, 3, 3})) == 27);
    CHECK(half_point_count(make({1, 1, 1, 1}, 3, {2, 2, 2, 2, 2, 2, 2})) == 56);
    CHECK(half_point_count(make({1, 1, 1, 1}, 1, {10})) == 0);
    CHECK_THROWS_AS(half_point_count(make({1, 1, 2, 2}, 2, {1, 1, 1})), NonIntegral);
}

TEST_CASE("half-point count is a GL invariant") {
    std::mt19937_64 rng(9);
    for (int s = 2; s <= 4; ++s) {
        const auto bases = oracle::all_bases(s);
        std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
        for (int i = 0; i < 30; ++i) {
            CoverSpec c{Weights(), oracle::random_branch(rng, s, 5)};
            CoverSpec t{Weights(), oracle::compose(c.d, bases[pick(rng)])};
            CHECK(half_point_count(c) == half_point_count(t));
        }
    }
}

TEST_CASE("validation reports") {
    auto ok = validate(make({1, 1, 3, 3}, 2, {6, 6, 6}));
    CHECK(ok.ok());
    CHECK(ok.flat == true);
    CHECK(ok.hurwitz == 1);
    CHECK(ok.hurwitz_sign == 1);

    auto bad = validate(make({1, 1, 1, 1}, 2, {1, 2, 2}));
    CHECK_FALSE(bad.parity_ok);
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.flat.has_value());

    auto unsorted = validate(CoverSpec{Weights({2, 2, 1, 1}), GroupFunction::from_nonzero(2, {4, 4, 8})}, false);
    CHECK(unsorted.ok());
    CHECK_FALSE(unsorted.weights_were_sorted);

    auto ill = validate(make({2, 2, 2, 1}, 1, {4}));
    CHECK_FALSE(ill.weights_well_formed);

    GroupFunction z(2);
    auto empty = validate(CoverSpec{Weights(), z});
    CHECK_FALSE(empty.branch_ok);
}
