#include <doctest.h>

#include <set>

#include "qzeno/core.hpp"

using namespace qzeno;

TEST_CASE("basis_index matches the stated bit layout") {
    CHECK(basis_index(0, 0, 0, 0) == 0);
    CHECK(basis_index(1, 1, 0, 0) == 12);
    CHECK(basis_index(1, 0, 0, 1) == 9);
}

TEST_CASE("basis_index is a bijection onto 0..15") {
    std::set<int> seen;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int A = 0; A < 2; ++A)
                for (int B = 0; B < 2; ++B) {
                    const int idx = basis_index(a, b, A, B);
                    CHECK(idx >= 0);
                    CHECK(idx <= 15);
                    seen.insert(idx);
                }
    CHECK(seen.size() == 16);
}

TEST_CASE("SystemParams rejects non-normalized amplitudes") {
    CHECK_THROWS_AS(SystemParams(0.9, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1.0, 1e-5), std::invalid_argument);
    CHECK_NOTHROW(SystemParams(std::sqrt(0.8), std::sqrt(0.2)));
}

TEST_CASE("SystemParams rejects non-positive coupling") {
    CHECK_THROWS_AS(SystemParams(1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SystemParams(1.0, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("SystemParams accepts complex amplitudes") {
    const Complex a = std::polar(std::sqrt(0.8), 1.3);
    const Complex b = std::polar(std::sqrt(0.2), -0.4);
    CHECK_NOTHROW(SystemParams(a, b));
}
