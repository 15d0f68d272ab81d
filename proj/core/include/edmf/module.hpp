#pragma once

#include <string>
#include <vector>

#include "edmf/ring.hpp"

namespace edmf {

// A finitely generated module given by its cyclic decomposition
// R/<c_1> + R/<c_2> + ... with c_1 | c_2 | ...; a factor 0 is a free
// summand. Unit factors (trivial summands) are never stored.
struct ModuleInvariants {
  Ring ring;
  std::string context = "R";  // ring the module lives over, for display
  std::vector<Element> cyclic_factors;

  // Canonicalizes, drops units and orders the factors as a divisibility
  // chain (zeros last). The input must already be a chain up to units.
  static ModuleInvariants from_chain(const Ring& ring, std::vector<Element> chain,
                                     std::string context = "R");

  bool is_zero() const { return cyclic_factors.empty(); }
  std::size_t free_rank() const;
  // Does g annihilate the module.
  bool annihilated_by(const Element& g) const;

  friend bool operator==(const ModuleInvariants& a, const ModuleInvariants& b) {
    return a.ring == b.ring && a.cyclic_factors == b.cyclic_factors;
  }
};

}  // namespace edmf
