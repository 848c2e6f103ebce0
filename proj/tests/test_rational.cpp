#include "doctest.h"
#include "pencilaid/rational.hpp"
#include "pencilaid/error.hpp"

using namespace pencilaid;

TEST_CASE("rationals parse into lowest terms") {
  CHECK(Rat::parse("6/8") == Rat(3, 4));
  CHECK(Rat::parse("-6/8").str() == "-3/4");
  CHECK(Rat::parse("4/-2") == Rat(-2));
  CHECK(Rat::parse("0/5").str() == "0");
  CHECK(Rat::parse("12").str() == "12");
  CHECK(Rat::parse("123456789012345678901234567890/2").str() == "61728394506172839450617283945");
}

TEST_CASE("malformed rationals are parse errors") {
  for (const char* s : {"", "1/0", "abc", "1/", "/2", "1.5", "1/2/3", " 1"}) {
    CAPTURE(s);
    try {
      (void)Rat::parse(s);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("field operations") {
  const Rat a(2, 3), b(-5, 7);
  CHECK(a + b == Rat(-1, 21));
  CHECK(a * b == Rat(-10, 21));
  CHECK(a / b == Rat(-14, 15));
  CHECK(a.inverse() == Rat(3, 2));
  CHECK(b.abs() == Rat(5, 7));
  CHECK(b < a);
  CHECK_THROWS_AS((void)Rat(0).inverse(), Error);
  CHECK_THROWS_AS((void)(a / Rat(0)), Error);
}

TEST_CASE("field axioms on a sample") {
  std::vector<Rat> xs{Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-7, 3), Rat(22, 9)};
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (const auto& z : xs) {
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        if (!y.is_zero()) CHECK((x / y) * y == x);
      }
}

TEST_CASE("rational square roots") {
  Rat r;
  CHECK(rational_sqrt(Rat(9, 4), &r));
  CHECK(r == Rat(3, 2));
  CHECK_FALSE(rational_sqrt(Rat(2), &r));
  CHECK_FALSE(rational_sqrt(Rat(-4), &r));
  CHECK(rational_sqrt(Rat(0), &r));
  CHECK(r.is_zero());
}
