#include <doctest.h>

#include <cmath>

#include "curveode/rational.hpp"
#include "oracles.hpp"
#include "testing.hpp"

using namespace curveode;
using testutil::error_code_of;
using testutil::rat;

TEST_CASE("parse_rational accepts integers and quotients, canonicalized") {
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("0/5") == Rational(0));
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  // A signed denominator is tolerated and canonicalized away.
  CHECK(parse_rational("1/-2") == Rational(-1, 2));
}

TEST_CASE("parse_rational rejects malformed tokens") {
  for (const char* bad : {"", "1/", "/2", "a", "1.5", "1 /2", "+3",
                          "--1", "1/2/3", " 1", "0x10"}) {
    CAPTURE(bad);
    CHECK(error_code_of([&] { parse_rational(bad); }) == errc::syntax_error);
  }
  CHECK(error_code_of([&] { parse_rational("1/0"); }) == errc::zero_division);
}

TEST_CASE("to_string round-trips through parse_rational") {
  oracles::Rng rng(20240811);
  for (int i = 0; i < 200; ++i) {
    Rational q = rng.rational(1000, 1000);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("to_double_nearest picks the closest double") {
  CHECK(to_double_nearest(Rational(1, 2)) == 0.5);
  CHECK(to_double_nearest(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_double_nearest(Rational(2, 3)) == 2.0 / 3.0);
  CHECK(to_double_nearest(Rational(-1, 3)) == -1.0 / 3.0);
  CHECK(to_double_nearest(Rational(0)) == 0.0);

  oracles::Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    Rational q = rng.rational(1'000'000, 999'983);
    double d = to_double_nearest(q);
    Rational err = abs(q - Rational(d));
    Rational err_up = abs(q - Rational(std::nextafter(d, INFINITY)));
    Rational err_dn = abs(q - Rational(std::nextafter(d, -INFINITY)));
    CAPTURE(to_string(q));
    CHECK(err <= err_up);
    CHECK(err <= err_dn);
  }
}

TEST_CASE("exact_sqrt recognizes rational squares") {
  CHECK(exact_sqrt(Rational(0)) == Rational(0));
  CHECK(exact_sqrt(Rational(1)) == Rational(1));
  CHECK(exact_sqrt(Rational(4)) == Rational(2));
  CHECK(exact_sqrt(rat("9/16")) == rat("3/4"));
  CHECK(exact_sqrt(rat("225/4")) == rat("15/2"));
  CHECK(!exact_sqrt(Rational(2)).has_value());
  CHECK(!exact_sqrt(rat("4/5")).has_value());
  CHECK(!exact_sqrt(Rational(-1)).has_value());

  oracles::Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    Rational q = rng.rational(50, 50);
    Rational sq = q * q;
    auto root = exact_sqrt(sq);
    REQUIRE(root.has_value());
    CHECK(*root * *root == sq);
    CHECK(*root >= 0);
  }
}

TEST_CASE("factorial and binomial match a product-loop oracle") {
  for (unsigned long n = 0; n <= 20; ++n) {
    CHECK(factorial(n) == oracles::fact(static_cast<long>(n)));
    for (unsigned long k = 0; k <= n; ++k) {
      Integer expect = oracles::fact(static_cast<long>(n)) /
                       (oracles::fact(static_cast<long>(k)) *
                        oracles::fact(static_cast<long>(n - k)));
      CHECK(binomial(n, k) == expect);
    }
  }
}
