#include "superend/rigidity.hpp"

namespace superend {

std::vector<std::uint64_t> set_A(const CurveShape& shape) {
    if (!shape.coprime()) throw DomainError("set_A requires p not dividing n");
    const std::uint64_t q = shape.q();
    const std::uint64_t p = shape.p();
    const std::uint64_t bound = (q - 1) / static_cast<std::uint64_t>(shape.n);
    std::vector<std::uint64_t> a;
    for (std::uint64_t i = 1; i <= bound; ++i)
        if (i % p != 0) a.push_back(i);
    return a;
}

std::optional<std::uint64_t> first_failing_index(const MultiplicityTable& table,
                                                 std::uint64_t m) {
    const std::uint64_t q = table.shape.q();
    const std::uint64_t p = table.shape.p();
    if (m < 1 || m >= q || m % p == 0)
        throw DomainError("multiplier must be a unit mod q in [1, q)");
    for (std::uint64_t i = 1; i < q; ++i) {
        if (i % p == 0) continue;
        if (table.at(i) != table.at(i * m % q)) return i;
    }
    return std::nullopt;
}

bool multiplier_preserves_tuple(const MultiplicityTable& table, std::uint64_t m) {
    return !first_failing_index(table, m).has_value();
}

bool multiplier_preserves_tuple(const CurveShape& shape, std::uint64_t m) {
    if (!shape.coprime()) throw DomainError("multiplier check requires p not dividing n");
    return multiplier_preserves_tuple(multiplicity_table(shape), m);
}

RigidityVerdict rigidity_check(const CurveShape& shape) {
    if (!shape.coprime()) throw DomainError("rigidity_check requires p not dividing n");
    if (shape.n < 4) throw DomainError("rigidity_check requires n >= 4");
    const std::uint64_t q = shape.q();
    const std::uint64_t p = shape.p();
    const MultiplicityTable table = multiplicity_table(shape);

    RigidityVerdict v;
    v.shape = shape;
    v.set_a = set_A(shape);
    v.rigid = true;
    for (std::uint64_t m = 2; m < q; ++m) {
        if (m % p == 0) continue;
        auto fail = first_failing_index(table, m);
        if (!fail) {
            v.rigid = false;
            v.counterexample = m;
            v.failing_index.reset();
            return v;
        }
        if (!v.failing_index) v.failing_index = *fail;  // witness for smallest m
    }
    return v;
}

}  // namespace superend
