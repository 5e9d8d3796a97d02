#include <cmath>
#include <complex>

#include "doctest.h"
#include "freeact/cyclo.hpp"
#include "test_support.hpp"

using namespace freeact;

namespace {
const Cyclo kOmega = Cyclo::root_of_unity(3, 1);
}

TEST_CASE("primitive cube root satisfies its minimal polynomial") {
  CHECK(kOmega * kOmega * kOmega == Cyclo::one());
  CHECK((Cyclo::one() + kOmega + kOmega * kOmega).is_zero());
  CHECK(kOmega + kOmega * kOmega == Cyclo(-1L));
  CHECK(kOmega * (kOmega * kOmega) == Cyclo::one());
}

TEST_CASE("roots of unity coerce across orders") {
  CHECK(Cyclo::root_of_unity(9, 3) == kOmega);
  CHECK(Cyclo::root_of_unity(1, 0) == Cyclo::one());
  CHECK(Cyclo::root_of_unity(9, -1) == Cyclo::root_of_unity(9, 8));
  CHECK(Cyclo::root_of_unity(12, 6) == Cyclo(-1L));
}

TEST_CASE("multiplicative order of zeta_n^k is n/gcd(n,k)") {
  CHECK(Cyclo::root_of_unity(9, 1).multiplicative_order() == 9u);
  CHECK(Cyclo::root_of_unity(9, 3).multiplicative_order() == 3u);
  CHECK(Cyclo::root_of_unity(9, 6).multiplicative_order() == 3u);
  CHECK(Cyclo::root_of_unity(12, 8).multiplicative_order() == 3u);
  CHECK(Cyclo::one().multiplicative_order() == 1u);
}

TEST_CASE("inverse passes the multiply-back oracle") {
  // 1 + omega = -omega^2, so the inverse is -omega; the multiply-back
  // product must be exactly 1.
  Cyclo x = Cyclo::one() + kOmega;
  Cyclo xi = x.inv();
  CHECK(xi * x == Cyclo::one());
  CHECK(xi == -kOmega);

  testing::CycloGen gen(0xC0FFEE);
  for (int t = 0; t < 100; ++t) {
    Cyclo y = gen.nonzero();
    CHECK(y.inv() * y == Cyclo::one());
  }
  CHECK_THROWS_AS(Cyclo::zero().inv(), DivisionByZeroError);
}

TEST_CASE("conjugation fixes rationals and inverts roots") {
  CHECK(kOmega.conj() == kOmega * kOmega);
  CHECK(Cyclo(make_rational(5, 7)).conj() == Cyclo(make_rational(5, 7)));
  Cyclo x = Cyclo::one() + Cyclo(2L) * kOmega;
  CHECK(x.conj() == Cyclo::one() + Cyclo(2L) * kOmega * kOmega);
}

TEST_CASE("conj is a ring involution and x*conj(x) is real") {
  testing::CycloGen gen(0xBEEF);
  for (int t = 0; t < 200; ++t) {
    Cyclo x = gen.value(), y = gen.value();
    CHECK(x.conj().conj() == x);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
    Cyclo norm = x * x.conj();
    CHECK(norm.is_real());
    CHECK(std::abs((norm.embed()).imag()) < 1e-12);
  }
}

TEST_CASE("ring axioms hold exactly on random triples") {
  testing::CycloGen gen(0x5EED);
  for (int t = 0; t < 200; ++t) {
    Cyclo x = gen.value(), y = gen.value(), z = gen.value();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("canonical reduction is idempotent") {
  testing::CycloGen gen(0xA11CE);
  for (int t = 0; t < 100; ++t) {
    Cyclo x = gen.value();
    auto once = x.reduced();
    // Rebuild from the reduced vector and reduce again.
    Cyclo back;
    for (size_t k = 0; k < once.size(); ++k)
      back += Cyclo(once[k]) * Cyclo::root_of_unity(x.order(), static_cast<long>(k));
    CHECK(back == x);
    CHECK(back.coerced(x.order()).reduced() == once);
  }
}

TEST_CASE("numeric embedding tracks exact products") {
  testing::CycloGen gen(0xD00D);
  for (int t = 0; t < 1000; ++t) {
    Cyclo x = gen.value(), y = gen.value();
    auto ex = x.embed(), ey = y.embed();
    CHECK(std::abs((x * y).embed() - ex * ey) < 1e-12);
    CHECK(std::abs((x + y).embed() - (ex + ey)) < 1e-12);
  }
}

TEST_CASE("embedding of large-height values stays accurate in relative terms") {
  testing::CycloGen gen(0xFEED);
  for (int t = 0; t < 50; ++t) {
    Cyclo x = gen.value(1000000, 1), y = gen.value(1000000, 1);
    auto ex = x.embed(), ey = y.embed();
    double scale = std::max({1.0, std::abs(ex), std::abs(ey), std::abs(ex * ey)});
    CHECK(std::abs((x * y).embed() - ex * ey) < 1e-12 * scale);
    CHECK(std::abs((x + y).embed() - (ex + ey)) < 1e-12 * scale);
  }
}

TEST_CASE("equality is decided modulo the cyclotomic polynomial") {
  // 1 + z9^3 + z9^6 = 0 because zeta_9^3 is a primitive cube root.
  Cyclo s = Cyclo::one() + Cyclo::root_of_unity(9, 3) + Cyclo::root_of_unity(9, 6);
  CHECK(s.is_zero());
  // Distinct representations of the same value.
  CHECK(Cyclo::root_of_unity(6, 1) == Cyclo::one() + Cyclo::root_of_unity(3, 1));
  CHECK(Cyclo::root_of_unity(4, 1) != kOmega);
}

TEST_CASE("rationality detection") {
  CHECK(Cyclo(make_rational(3, 4)).is_rational());
  CHECK((kOmega + kOmega.conj()).is_rational());
  CHECK((kOmega + kOmega.conj()).rational_value() == make_rational(-1));
  CHECK(!kOmega.is_rational());
  CHECK(kOmega.order() == 3u);
}
