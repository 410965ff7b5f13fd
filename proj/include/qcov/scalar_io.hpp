#pragma once

#include <string>

#include "qcov/qscalar.hpp"

namespace qcov {

// Canonical textual form. Monomials print with integer or half-integer
// exponents of q (q^(3), q^(-1/2), ...); radicals print as sqrt(...) of a
// polynomial in q^(1/2); general rational functions print as
// (num)/(den). Printing is deterministic and round-trips through parse.
std::string to_string(const Poly& p);
std::string to_string(const RatFun& f);
std::string to_string(const QScalar& s);

QScalar parse_scalar(const std::string& text);

namespace detail {
// Laurent print of num/t^shift, descending exponents. Used by relation and
// matrix printers as well.
std::string laurent_string(const Poly& num, int tshift);
}  // namespace detail

}  // namespace qcov
