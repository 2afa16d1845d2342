#pragma once

#include <string>
#include <vector>

#include "toric/fan_document.hpp"

namespace toric::testing {

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "p1",   "p2",    "p3",     "p1xp1", "p1xp1xp1", "f2",    "blp2",
      "bl2p3", "p112", "p1112", "p1xp2", "blp3",     "p112xp1"};
  return names;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(TORIC_FIXTURE_DIR) + "/" + name + ".json";
}

inline FanDocument fixture(const std::string& name) { return load_fan_document(fixture_path(name)); }

inline Fan fixture_fan(const std::string& name) { return fixture(name).fan(); }

inline ZVector zvec(std::initializer_list<long> xs) {
  ZVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline QVector qvec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace toric::testing
