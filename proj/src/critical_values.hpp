#pragma once

#include <array>

namespace sos::detail {

extern const std::array<double, 50> kDfGrid;
extern const std::array<double, 50> kTCritical;
extern const double kTCriticalInf;
extern const std::array<std::array<double, 50>, 10> kFCritical;
extern const std::array<double, 10> kFCriticalInf;

}  // namespace sos::detail
