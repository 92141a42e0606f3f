#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <string>

#include "pwl/regions.hpp"

using namespace pwl;

TEST_CASE("parameter-plane region fixtures") {
  CHECK(classify_region({0.80, 0.25, 0.05}) == ParamRegion::R1);
  CHECK(classify_region({0.80, 2.50, 0.05}) == ParamRegion::R2);
  CHECK(classify_region({0.80, 3.61, 0.05}) == ParamRegion::R3);  // 3.61 > 3.6
  CHECK(classify_region({1.05, 1.35, 0.05}) == ParamRegion::R4);
}

TEST_CASE("boundary tolerance") {
  const double b = 0.4;
  CHECK(classify_region({b, 2.0 * (1.0 - b), 0.05}) == ParamRegion::BoundaryCase);
  CHECK(classify_region({b, 2.0 * (1.0 + b), 0.05}) == ParamRegion::BoundaryCase);
  CHECK(classify_region({1.0, 1.0, 0.05}) == ParamRegion::BoundaryCase);
  CHECK(classify_region({b, 2.0 * (1.0 - b) + 1e-6, 0.05}) == ParamRegion::R2);
  CHECK(classify_region({b, 2.0 * (1.0 - b) - 1e-6, 0.05}) == ParamRegion::R1);
  // wider tolerance captures nearby points
  CHECK(classify_region({b, 2.0 * (1.0 - b) + 1e-6, 0.05}, 1e-5) ==
        ParamRegion::BoundaryCase);
}

TEST_CASE("stability subregion fixtures") {
  CHECK(f_subregion({0.80, 1.35, 0.05}) == FSubregion::S1);
  CHECK(f_subregion({0.20, 2.30, 0.05}) == FSubregion::S2);
  CHECK(f_subregion({0.20, 0.30, 0.05}) == FSubregion::S3);
  CHECK(f_subregion({0.80, 3.70, 0.05}) == FSubregion::Unstable);  // c > 2+2b
  CHECK(f_subregion({1.20, 1.00, 0.05}) == FSubregion::Unstable);  // b > 1
}

TEST_CASE("stability margins flip sign exactly on the box edges") {
  for (const double b : {0.2, 0.5, 0.8}) {
    const double edge = 2.0 + 2.0 * b;
    CHECK(f_stability_margins({b, edge, 0.05}).one_plus_tr_plus_det == 0.0);
    CHECK(f_stability_margins({b, std::nextafter(edge, 0.0), 0.05})
              .one_plus_tr_plus_det > 0.0);
    CHECK(f_stability_margins({b, std::nextafter(edge, 10.0), 0.05})
              .one_plus_tr_plus_det < 0.0);
  }
  CHECK(f_stability_margins({1.0, 1.0, 0.05}).one_minus_det == 0.0);
  CHECK(f_stability_margins({std::nextafter(1.0, 0.0), 1.0, 0.05}).one_minus_det > 0.0);
  CHECK(f_stability_margins({std::nextafter(1.0, 2.0), 1.0, 0.05}).one_minus_det < 0.0);
  // the second condition reduces to c > 0
  CHECK(f_stability_margins({0.5, 1.35, 0.05}).one_minus_tr_plus_det == 1.35);
}

TEST_CASE("region names") {
  CHECK(std::string(to_string(ParamRegion::R2)) == "R2");
  CHECK(std::string(to_string(ParamRegion::BoundaryCase)) == "boundary");
  CHECK(std::string(to_string(FSubregion::S1)) == "S1");
}
