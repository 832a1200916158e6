#include "satsel/core/oracle.hpp"

#include "satsel/core/types.hpp"

namespace satsel {

double marginal_gain(const SetFunctionOracle& oracle, std::span<const int> subset, int j) {
    ElementSet grown = set_with_element(subset, j);
    return oracle.evaluate(grown) - oracle.evaluate(subset);
}

} // namespace satsel
