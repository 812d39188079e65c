#ifndef PASYM_BAND_HPP
#define PASYM_BAND_HPP

#include "pasym/real.hpp"

namespace pasym {

/// A certified enclosure: the target quantity divided by `prefactor` lies in
/// [center - radius, center + radius].
struct BoundedApprox {
  Real prefactor;
  Real center;
  Real radius;
};

}  // namespace pasym

#endif  // PASYM_BAND_HPP
