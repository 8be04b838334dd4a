#include "superend/polynomial.hpp"

namespace superend {

UniPoly upoly_desc(std::initializer_list<long> desc) {
    std::vector<Rat> c;
    c.reserve(desc.size());
    for (long v : desc) c.emplace_back(v);
    return UniPoly::from_desc(std::move(c));
}

UniPoly upoly_desc(const std::vector<Int>& desc) {
    std::vector<Rat> c;
    c.reserve(desc.size());
    for (const Int& v : desc) c.emplace_back(v);
    return UniPoly::from_desc(std::move(c));
}

bool has_integer_coeffs(const UniPoly& f) {
    for (const auto& v : f.coeffs())
        if (!is_integer(v)) return false;
    return true;
}

}  // namespace superend
