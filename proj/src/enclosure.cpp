#include "hyperratio/enclosure.hpp"

namespace hyperratio {

Enclosure enclosure_add(const Enclosure& a, const Enclosure& b) { return a + b; }
Enclosure enclosure_sub(const Enclosure& a, const Enclosure& b) { return a - b; }
Enclosure enclosure_mul(const Enclosure& a, const Enclosure& b) { return a * b; }
Enclosure enclosure_div(const Enclosure& a, const Enclosure& b) { return a / b; }
Enclosure enclosure_sqrt(const Enclosure& a) { return sqrt(a); }

}  // namespace hyperratio
