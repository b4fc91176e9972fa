#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace skewhopf {

// Exact rational coefficients. mpq_class keeps values in lowest terms with a
// positive denominator as long as construction goes through rat()/parse_rational().
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p" or "p/q" with q > 0 after sign normalization.
std::optional<Scalar> parse_rational(const std::string& text);

std::string to_string(const Scalar& s);

}  // namespace skewhopf
