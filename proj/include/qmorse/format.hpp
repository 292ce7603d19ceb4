#ifndef QMORSE_FORMAT_HPP
#define QMORSE_FORMAT_HPP

#include <string>

namespace qmorse {

/// Deterministic number formatting for CSV output: 9 significant digits,
/// plain decimal inside [1e-3, 1e6), scientific outside.
std::string format_number(double x);

}  // namespace qmorse

#endif
