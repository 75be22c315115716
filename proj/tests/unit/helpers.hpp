#pragma once

#include <initializer_list>
#include <string>

#include "stonework/boolalg.hpp"

namespace testing {

using namespace stonework::boolalg;

inline Term g(const std::string& name) { return Term::gen(name); }

/// Element selecting exactly the named points.
inline ElementVec select(const FinBoolAlg& a, std::initializer_list<const char*> points) {
  ElementVec v(a.size());
  for (const char* p : points) {
    bool found = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.point_string(i) == p) {
        v.set(i);
        found = true;
      }
    }
    if (!found) throw std::logic_error(std::string("no point ") + p);
  }
  return v;
}

inline std::vector<std::string> point_strings(const FinBoolAlg& a) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.point_string(i));
  return out;
}

}  // namespace testing
