#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stonework {

/// Unbounded signed integer used for dyadic numerators and matrix entries.
using Int = boost::multiprecision::cpp_int;

}  // namespace stonework
