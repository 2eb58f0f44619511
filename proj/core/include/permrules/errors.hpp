#pragma once

#include <stdexcept>
#include <string>

namespace permrules {

// Breach of an internal invariant: a corrupted schedule, a rule that is not
// a bijection, a query that violates the in-order discipline.  Distinct from
// std::invalid_argument, which flags bad input at the API boundary.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace permrules
