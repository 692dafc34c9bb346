#pragma once

#include <string>
#include <string_view>

namespace dsurf {

// The two explicit solution families: cos(w/2) is a dn- or a cn-function.
enum class Family { dn, cn };

// A compound sign written as a plus/minus pair in the formulas.
enum class Sign { plus, minus };

inline double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

inline std::string_view to_string(Family f) { return f == Family::dn ? "dn" : "cn"; }

// (-1)^m for any integer m.
inline double parity(long m) { return (m % 2 == 0) ? 1.0 : -1.0; }

}  // namespace dsurf
