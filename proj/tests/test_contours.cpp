#include <doctest.h>

#include "utm/contours.hpp"

using namespace utm;

TEST_CASE("sector membership") {
    CHECK(sector_of(std::polar(1.0, pi / 6)) == SectorClass::D1);
    CHECK(sector_of(1.0) == SectorClass::Boundary);
    CHECK(sector_of(cplx(0, -1)) == SectorClass::D5);
    CHECK(sector_of(std::polar(2.0, 5 * pi / 6)) == SectorClass::D3);
    CHECK(sector_of(cplx(0, 1)) == SectorClass::Exterior);
    CHECK_THROWS_AS(sector_of(0.0), Error);
}

TEST_CASE("gamma paths") {
    GammaPaths pn = gamma_paths(SignCase::PosNeg, Medium(1, -1), 2.0);
    REQUIRE(pn.side1.size() == 1);
    CHECK(pn.flag1 == -1);
    const auto& segs = pn.side1[0].segments;
    REQUIRE(segs.size() == 3);
    CHECK(segs[0].kind == Segment::Ray);
    CHECK(segs[0].inbound);
    CHECK(segs[0].phi == doctest::Approx(-pi / 3));
    CHECK(std::abs(segs[0].end() - std::polar(2.0, -pi / 3)) < 1e-14);
    CHECK(segs[1].kind == Segment::Arc);
    CHECK(std::abs(segs[1].end() - std::polar(2.0, -2 * pi / 3)) < 1e-14);
    CHECK_FALSE(segs[2].inbound);
    CHECK(pn.side2.size() == 1);

    GammaPaths pp = gamma_paths(SignCase::PosPos, Medium(1, 2), 1.0);
    REQUIRE(pp.side2.size() == 2);
    CHECK(pp.side2[0].sector == 1);
    CHECK(pp.side2[1].sector == 3);
    CHECK(pp.side1[0].sector == 5);

    GammaPaths np = gamma_paths(SignCase::NegPos, Medium(-1, 2), 1.0);
    REQUIRE(np.side1.size() == 2);
    REQUIRE(np.side2.size() == 2);
    CHECK(np.side1[0].sector == np.side2[0].sector);
    CHECK(np.side1[1].sector == np.side2[1].sector);
}

TEST_CASE("outward deformation") {
    ContourPath p = sector_boundary(5, 1.0);
    ContourPath same = deform_outward(p, 0.0, 0.5);
    for (size_t i = 0; i < p.segments.size(); ++i) CHECK(same.segments[i].phi == p.segments[i].phi);
    CHECK_THROWS_AS(deform_outward(p, pi / 24, 0.0), Error);
    ContourPath d = deform_outward(p, pi / 24, 0.5);
    for (const Segment& s : d.segments) {
        if (s.kind != Segment::Ray) continue;
        for (double r : {1.0, 10.0, 100.0}) {
            cplx k = s.p + r * std::polar(1.0, s.phi);
            CHECK(std::real(I * k * k * k) > 0.0);
        }
    }
}

TEST_CASE("path integrals of exact derivatives") {
    auto f = [](cplx k) { return 3.0 * I * k * k * std::exp(I * k * k * k); };
    QuadOptions o;
    o.abs_tol = 1e-12;
    // rays turned into the sector, where e^{ik^3} decays at both ends
    ContourPath d = deform(sector_boundary(1, 1.0), pi / 24, 1.0, false);
    truncate_rays(d, [](cplx k) { return std::real(I * k * k * k) + 2 * std::log(1 + std::abs(k)); },
                  std::log(1e-16));
    QuadResult r = integrate_path(d, f, o);
    CHECK(r.converged);
    CHECK(std::abs(r.value) < 1e-10);

    ContourPath arc;
    arc.segments = {sector_boundary(3, 1.3).segments[1]};
    QuadResult a = integrate_path(arc, f, o);
    cplx k0 = arc.segments[0].start(), k1 = arc.segments[0].end();
    CHECK(std::abs(a.value - (std::exp(I * k1 * k1 * k1) - std::exp(I * k0 * k0 * k0))) < 1e-11);
}
