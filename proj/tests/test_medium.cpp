#include <doctest.h>

#include "utm/medium.hpp"

using namespace utm;

TEST_CASE("dispersion relation") {
    CHECK(std::abs(dispersion(Medium(1, 2), 1, 1.0) - I) < 1e-15);
    CHECK(std::abs(dispersion(Medium(1.3, -0.4), 2, 0.0)) == 0.0);
    CHECK(std::abs(dispersion(Medium(-1, 2), 1, 1.0) + I) < 1e-15);
}

TEST_CASE("phase velocity") {
    CHECK(phase_velocity(Medium(1, 1), 1, 2.0) == doctest::Approx(4.0));
    CHECK(phase_velocity(Medium(0.7, 1), 1, 0.0) == 0.0);
    CHECK(phase_velocity(Medium(-1, 1), 1, 1.0) == doctest::Approx(-1.0));
}

TEST_CASE("sign case classification") {
    CHECK(classify(Medium(1, -1)).tag == SignCase::PosNeg);
    CHECK(classify(Medium(-1, 1)).tag == SignCase::NegPos);
    Classification c = classify(Medium(-2, -3));
    CHECK(c.tag == SignCase::PosPos);
    CHECK(c.reflected);
    CHECK(c.medium.sigma1 == 3.0);
    CHECK(c.medium.sigma2 == 2.0);
    CHECK_FALSE(classify(Medium(1, 2)).reflected);
}

TEST_CASE("required counts and invalid media") {
    CHECK(required_condition_count(SignCase::PosNeg) == 2);
    CHECK(required_condition_count(SignCase::PosPos) == 3);
    CHECK(required_condition_count(SignCase::NegPos) == 4);
    CHECK_THROWS_AS(Medium(0.0, 1.0), Error);
    CHECK(Medium::from_coefficients(8.0, -27.0).sigma2 == doctest::Approx(-3.0));
}
