#include "qmorse/format.hpp"

#include <cmath>
#include <cstdio>

namespace qmorse {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";

  char buf[48];
  const double ax = std::fabs(x);
  if (ax >= 1e-3 && ax < 1e6) {
    const int exp10 = static_cast<int>(std::floor(std::log10(ax)));
    const int decimals = 8 - exp10;  // 9 significant digits in total
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  } else {
    std::snprintf(buf, sizeof buf, "%.8e", x);
  }
  return buf;
}

}  // namespace qmorse
