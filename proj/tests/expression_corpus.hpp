#pragma once

// Canonical expressions: print(parse(s)) must reproduce each string exactly.

#include <string>
#include <vector>

namespace corpus {

inline const std::vector<std::string>& canonical_expressions() {
  static const std::vector<std::string> items{
      "0",
      "K",
      "-K",
      "1/2*K",
      "-3/7*K",
      "b(1)",
      "b(-1)",
      "-b(5)",
      "2*b(-3)",
      "1/3*b(2)",
      "b(-2) + b(1)",
      "b(-4) - b(-1) + 5*b(3)",
      "K + b(1)",
      "-2*K - 1/2*b(-1) + b(7)",
      ":b(-1)b(1):",
      ":b(1)b(1):",
      ":b(-1)b(-1):",
      ":b(-3)b(-2):",
      ":b(2)b(3):",
      "-:b(-2)b(5):",
      "3/4*:b(-4)b(4):",
      "1/2*:b(-1)b(-1):",
      "K + 1/2*:b(-1)b(-1):",
      ":b(-2)b(-2): + :b(1)b(1):",
      ":b(-3)b(-1): + :b(-2)b(-2):",
      ":b(-5)b(2): - :b(-4)b(1): + 2*:b(-2)b(-1):",
      "T(0)",
      "T(1)",
      "T(-1)",
      "T(2)",
      "T(-2)",
      "-T(3)",
      "1/2*T(-3)",
      "K + T(0)",
      "1/2*K + 4*T(0)",
      "b(2) + T(2)",
      "3/2*b(2) + T(2)",
      "-3/2*b(2) + T(2)",
      "b(-2) - 1/2*b(-1) + T(-1) + T(1)",
      "T(-2) + T(0) + T(2)",
      "T(0) + :b(-1)b(1):",
      "T(0) - :b(-2)b(2):",
      "T(2) + 1/2*:b(1)b(1):",
      "T(2) - :b(-1)b(3):",
      "2*T(-2) + :b(-1)b(-1):",
      "T(4) + 1/3*:b(1)b(3): - 1/3*:b(2)b(2):",
      "K + b(1) + :b(-1)b(2): + T(3)",
      "b(-1) + T(-1) + :b(-3)b(2): + T(0)",
      "-K + T(-5) + T(5)",
      "7*T(7)",
      "-1/12*T(-6)",
      "12345678901234567890*K",
      "1/98765432109876543210*b(9)",
      "b(-12) + b(12)",
      ":b(-12)b(-11):",
      "T(-4) + :b(-9)b(5): + :b(-2)b(-2):",
      "-T(1) + :b(-2)b(3): - :b(-1)b(2):",
  };
  return items;
}

}  // namespace corpus
