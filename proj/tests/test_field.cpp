#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qps/field.hpp"

using namespace qps;

TEST_CASE("dimension validation accepts odd primes only") {
    CHECK(Dimension::validate(5).n() == 5);
    CHECK(Dimension::validate(3).half() == 2);
    CHECK(Dimension::validate(7).half() == 4);
    CHECK_THROWS_AS(Dimension::validate(9), NotPrimeError);
    CHECK_THROWS_AS(Dimension::validate(15), NotPrimeError);
    CHECK_THROWS_AS(Dimension::validate(2), EvenOrTooSmallError);
    CHECK_THROWS_AS(Dimension::validate(4), EvenOrTooSmallError);
    CHECK_THROWS_AS(Dimension::validate(1), EvenOrTooSmallError);
    CHECK_THROWS_AS(Dimension::validate(-3), EvenOrTooSmallError);
}

TEST_CASE("half is the inverse of 2") {
    for (int n : {3, 5, 7, 11, 13}) {
        const auto dim = Dimension::validate(n);
        CHECK(mod_n(2LL * dim.half(), dim) == 1);
        CHECK(dim.half() == mod_inverse(2, dim));
    }
}

TEST_CASE("mod_inverse") {
    const auto n5 = Dimension::validate(5);
    const auto n7 = Dimension::validate(7);
    CHECK(mod_inverse(2, n5) == 3);
    CHECK(mod_inverse(1, n7) == 1);
    CHECK(mod_inverse(4, n7) == 2);
    CHECK_THROWS_AS(mod_inverse(0, n5), ZeroDivisorError);
    CHECK_THROWS_AS(mod_inverse(10, n5), ZeroDivisorError);
    for (int n : {3, 5, 7, 11}) {
        const auto dim = Dimension::validate(n);
        for (int a = 1; a < n; ++a)
            CHECK(mod_n(static_cast<long long>(a) * mod_inverse(a, dim), dim) == 1);
    }
}

TEST_CASE("line_point") {
    const auto n5 = Dimension::validate(5);
    CHECK(line_point(2, 1, BasisIndex::reference(), n5) == 2);
    CHECK(line_point(2, 1, BasisIndex::shifted(0), n5) == 4);
    CHECK(line_point(2, 1, BasisIndex::shifted(3), n5) == 0);
}

TEST_CASE("line_points enumerates the N+1 bases in order") {
    const auto n3 = Dimension::validate(3);
    for (const auto& [b, m] : line_points(0, 0, n3)) CHECK(m == 0);

    const auto n5 = Dimension::validate(5);
    const auto pts = line_points(2, 1, n5);
    REQUIRE(pts.size() == 6);
    CHECK(pts[0].first.is_reference());
    const int expected[] = {2, 4, 1, 3, 0, 2};
    for (int i = 0; i < 6; ++i) CHECK(pts[i].second == expected[i]);
    for (int i = 1; i < 6; ++i) CHECK(pts[i].first.shift() == i - 1);
}

TEST_CASE("two distinct lines meet in exactly one point") {
    for (int n : {3, 5, 7}) {
        const auto dim = Dimension::validate(n);
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p)
                for (int q2 = 0; q2 < n; ++q2)
                    for (int p2 = 0; p2 < n; ++p2) {
                        if (q == q2 && p == p2) continue;
                        const auto a = line_points(q, p, dim);
                        const auto b = line_points(q2, p2, dim);
                        int common = 0;
                        for (std::size_t i = 0; i < a.size(); ++i)
                            if (a[i].second == b[i].second) ++common;
                        CHECK(common == 1);
                    }
    }
}

TEST_CASE("each line equation has N phase-space solutions") {
    for (int n : {3, 5, 7}) {
        const auto dim = Dimension::validate(n);
        for (int b = 0; b < n; ++b)
            for (int m = 0; m < n; ++m) {
                int count = 0;
                for (int q = 0; q < n; ++q)
                    for (int p = 0; p < n; ++p)
                        if (line_point(q, p, BasisIndex::shifted(b), dim) == m)
                            ++count;
                CHECK(count == n);
            }
    }
}
