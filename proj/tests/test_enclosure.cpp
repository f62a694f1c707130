#include "doctest.h"
#include "hyperratio/enclosure.hpp"

using namespace hyperratio;

TEST_CASE("addition is outward rounded") {
  const Enclosure s = Enclosure(1, 2) + Enclosure(3, 4);
  CHECK(s.lo() <= 4.0);
  CHECK(s.hi() >= 6.0);
  CHECK(s.lo() >= std::nextafter(4.0, 0.0));
  CHECK(s.hi() <= std::nextafter(6.0, 10.0));
}

TEST_CASE("sqrt of a perfect square stays within one ulp") {
  const Enclosure r = sqrt(Enclosure(4.0));
  CHECK(r.contains(2.0));
  CHECK(r.lo() == std::nextafter(2.0, 0.0));
  CHECK(r.hi() == std::nextafter(2.0, 3.0));
}

TEST_CASE("division by an enclosure of zero is rejected") {
  const double eps = 1e-300;
  try {
    (void)(Enclosure(1.0) / Enclosure(-eps, eps));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionContainsZero);
  }
}

TEST_CASE("negative sqrt is rejected") {
  CHECK_THROWS_AS(sqrt(Enclosure(-1, 1)), Error);
}

TEST_CASE("constructor rejects inverted bounds") {
  CHECK_THROWS_AS(Enclosure(2, 1), Error);
}

TEST_CASE("containment monotonicity on mixed-sign products") {
  const Enclosure a(-1, 2), b(-3, 0.5);
  const Enclosure a2(-2, 3), b2(-4, 1);
  const Enclosure p = a * b, p2 = a2 * b2;
  CHECK(p.subset_of(p2));
  for (double u : {-1.0, 0.0, 2.0})
    for (double v : {-3.0, 0.5}) CHECK(p.contains(u * v));
}

TEST_CASE("division covers all quotients") {
  const Enclosure q = Enclosure(1, 2) / Enclosure(-4, -1);
  CHECK(q.contains(-2.0));
  CHECK(q.contains(-0.25));
}

TEST_CASE("rel_width and widening conversion") {
  const WideEnclosure w(1.0L / 3, 1.0L / 3);
  const Enclosure e = w.convert<double>();
  CHECK(e.lo() <= 1.0L / 3);
  CHECK(e.hi() >= 1.0L / 3);
  CHECK(e.rel_width() < 1e-15);
  CHECK(std::isinf(Enclosure(-1, 1).rel_width()));
}

TEST_CASE("square of a straddling enclosure starts at zero") {
  const Enclosure s = square(Enclosure(-2, 1));
  CHECK(s.lo() == 0.0);
  CHECK(s.hi() >= 4.0);
}

TEST_CASE("free-function wrappers match operators") {
  CHECK(enclosure_add(Enclosure(1), Enclosure(2)) == Enclosure(1) + Enclosure(2));
  CHECK(enclosure_div(Enclosure(1), Enclosure(3)) == Enclosure(1) / Enclosure(3));
  CHECK(enclosure_sqrt(Enclosure(2)) == sqrt(Enclosure(2)));
}
