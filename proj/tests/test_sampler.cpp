#include "fracdim/sampler.hpp"
#include "fracdim/errors.hpp"

#include "doctest.h"

#include <map>
#include <vector>

using namespace fracdim;

namespace {

ValidatedSpec demo_s(int depth) {
    return validate_spec({ScheduleSpec::recurrence(5), Rational(1, 2), Rational(1, 4)}, depth);
}

ValidatedSpec demo_t(int depth) {
    return validate_spec({ScheduleSpec::recurrence(5), Rational(1, 4), Rational(1, 3)}, depth);
}

ProductSpec demo_pair(int depth) { return make_product({demo_s(depth), demo_t(depth)}); }

std::vector<BigInt> first_coords(const PointCloud& cloud) {
    std::vector<BigInt> out;
    for (const auto& point : cloud.points) out.push_back(point[0]);
    return out;
}

}  // namespace

TEST_CASE("full enumeration of the demo set at K = 10") {
    const PointCloud cloud = enumerate_points(make_product({demo_s(2)}), 10);
    CHECK(cloud.K == 10);
    CHECK(cloud.d == 1);
    CHECK(cloud.mode == PointCloud::Mode::Full);
    // Allowed positions {7, 9, 10} carry weights 8, 2, 1 over 2^10.
    const std::vector<BigInt> expected = {0, 1, 2, 3, 8, 9, 10, 11};
    CHECK(first_coords(cloud) == expected);
    CHECK(cloud_matches_spec(cloud, make_product({demo_s(2)})));
}

TEST_CASE("enumeration is factor-major over the product") {
    const PointCloud cloud = enumerate_points(demo_pair(2), 10);
    REQUIRE(cloud.points.size() == 32);
    CHECK(cloud.d == 2);
    // T allows {9, 10} below 10, so the second coordinate cycles 0,1,2,3.
    CHECK(cloud.points[0] == std::vector<BigInt>{0, 0});
    CHECK(cloud.points[1] == std::vector<BigInt>{0, 1});
    CHECK(cloud.points[3] == std::vector<BigInt>{0, 3});
    CHECK(cloud.points[4] == std::vector<BigInt>{1, 0});
    CHECK(cloud.points[31] == std::vector<BigInt>{11, 3});
}

TEST_CASE("levels below the first element yield the origin only") {
    const PointCloud cloud = enumerate_points(make_product({demo_s(2)}), 6);
    REQUIRE(cloud.points.size() == 1);
    CHECK(cloud.points[0][0] == 0);
}

TEST_CASE("enumeration refuses to exceed the point cap") {
    CHECK_THROWS_AS(enumerate_points(demo_pair(2), 10, 31), CapExceeded);
    CHECK_NOTHROW(enumerate_points(demo_pair(2), 10, 32));
    try {
        enumerate_points(demo_pair(3), 30, 64);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("sample_points") != std::string::npos);
    }
}

TEST_CASE("truncation level must stay within the horizon") {
    CHECK_THROWS_AS(enumerate_points(make_product({demo_s(1)}), 11), DepthExceeded);
    CHECK_NOTHROW(enumerate_points(make_product({demo_s(1)}), 10));
    CHECK_THROWS_AS(enumerate_points(make_product({demo_s(1)}), -1), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in the seed") {
    const ProductSpec prod = demo_pair(4);
    const PointCloud a = sample_points(prod, 30, 1000, 42);
    const PointCloud b = sample_points(prod, 30, 1000, 42);
    const PointCloud c = sample_points(prod, 30, 1000, 43);
    CHECK(a.mode == PointCloud::Mode::Sampled);
    REQUIRE(a.points.size() == 1000);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
    CHECK(cloud_matches_spec(a, prod));
    CHECK(cloud_matches_spec(c, prod));
    CHECK_THROWS_AS(sample_points(prod, 30, 0, 42), ParameterOutOfRange);
}

TEST_CASE("cube keys collapse points into dyadic prefixes") {
    const PointCloud cloud = enumerate_points(make_product({demo_s(2)}), 10);
    CHECK(empirical_box_count(cloud, 10) == 8);
    CHECK(empirical_box_count(cloud, 9) == 4);
    CHECK(empirical_box_count(cloud, 7) == 2);
    CHECK(empirical_box_count(cloud, 6) == 1);
    CHECK(empirical_box_count(cloud, 0) == 1);
    CHECK(cube_keys(cloud, 9) ==
          std::vector<std::vector<BigInt>>{{0}, {1}, {4}, {5}});
    CHECK_THROWS_AS(empirical_box_count(cloud, 11), LevelExceedsTruncation);
    CHECK_THROWS_AS(empirical_box_count(cloud, -1), LevelExceedsTruncation);
}

TEST_CASE("full crosscheck matches the analytic exponents at every level") {
    const ProductSpec prod = demo_pair(3);
    const CrosscheckReport report = crosscheck(prod, 12);
    CHECK_FALSE(report.sampled);
    REQUIRE(report.rows.size() == 12);
    for (const CrosscheckRow& row : report.rows) {
        CHECK(row.ok);
        CHECK(row.empirical == pow2(row.exponent.convert_to<unsigned>()));
    }
    CHECK(report.all_ok());
}

TEST_CASE("sampled crosscheck can only undershoot") {
    const ProductSpec prod = demo_pair(4);
    const CrosscheckReport report = crosscheck(prod, sample_points(prod, 20, 200, 7));
    CHECK(report.sampled);
    REQUIRE(report.rows.size() == 20);
    CHECK(report.all_ok());
    for (const CrosscheckRow& row : report.rows)
        CHECK(row.empirical <= pow2(row.exponent.convert_to<unsigned>()));
}

TEST_CASE("a mutilated full cloud fails the crosscheck") {
    const ProductSpec prod = demo_pair(3);
    PointCloud cloud = enumerate_points(prod, 12);
    cloud.points.resize(cloud.points.size() / 2);
    CHECK_FALSE(crosscheck(prod, cloud).all_ok());
}

TEST_CASE("digit mask violations are detected") {
    const ProductSpec prod = make_product({demo_s(2)});
    PointCloud cloud = enumerate_points(prod, 10);
    SUBCASE("disallowed position") {
        cloud.points[0][0] = pow2(9);  // digit at position 1
        CHECK_FALSE(cloud_matches_spec(cloud, prod));
    }
    SUBCASE("numerator outside [0, 2^K)") {
        cloud.points[0][0] = pow2(10);
        CHECK_FALSE(cloud_matches_spec(cloud, prod));
    }
    SUBCASE("dimension mismatch") {
        CHECK_FALSE(cloud_matches_spec(cloud, demo_pair(2)));
    }
}

TEST_CASE("full cloud restricted to one cube keeps the homogeneous count") {
    const ProductSpec prod = demo_pair(3);
    const PointCloud cloud = enumerate_points(prod, 14);
    const BigInt e8 = covering_exponent(prod, 8);
    const BigInt e12 = covering_exponent(prod, 12);
    // Group level-12 keys by their level-8 prefix: every level-8 cube must
    // hold exactly 2^{E_12 - E_8} level-12 cubes.
    std::map<std::vector<BigInt>, BigInt> per_cube;
    for (const auto& key : cube_keys(cloud, 12)) {
        std::vector<BigInt> prefix(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) prefix[i] = key[i] >> 4;
        ++per_cube[prefix];
    }
    CHECK(per_cube.size() == pow2(e8.convert_to<unsigned>()));
    const BigInt expected = pow2((e12 - e8).convert_to<unsigned>());
    for (const auto& [prefix, count] : per_cube) CHECK(count == expected);
}
