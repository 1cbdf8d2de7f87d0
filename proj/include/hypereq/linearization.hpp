#pragma once

#include <map>
#include <string>

#include "hypereq/hypergroup.hpp"
#include "hypereq/recurrence.hpp"

namespace hypereq {

using LinearizationRows = std::map<std::pair<Element, Element>, FiniteMeasure>;

// Exact linearization coefficients of the polynomial system generated by R:
// P_x * P_y = sum_k c(x,y,k) P_k, tabulated for every pair x <= y with
// x + y <= nmax. Row invariants (unit sum, support inside [y-x, y+x]) are
// verified exactly; a negative coefficient throws NotAHypergroup, because
// nonnegativity of the c(x,y,k) is precisely the hypergroup property.
LinearizationRows linearization_table(const Recurrence& R, int nmax);

// Wraps linearization rows as a hypergroup with identity 0.
Hypergroup to_hypergroup(LinearizationRows rows, int nmax, std::string provenance);

// linearization_table followed by to_hypergroup.
Hypergroup polynomial_hypergroup(const Recurrence& R, int nmax);

}  // namespace hypereq
