#pragma once

// Shared fixtures and doctest printers for the unit tests.

#include <map>
#include <string>

#include "coxsol/characters.hpp"
#include "coxsol/coxeter.hpp"
#include "doctest.h"

namespace doctest {
template <>
struct StringMaker<coxsol::Cyclotomic> {
  static String convert(const coxsol::Cyclotomic& c) { return c.to_string().c_str(); }
};
template <>
struct StringMaker<coxsol::ClassFunction> {
  static String convert(const coxsol::ClassFunction& f) { return f.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

inline coxsol::GroupPtr group(const std::string& name) {
  using coxsol::CoxeterMatrix;
  static std::map<std::string, coxsol::GroupPtr> cache;
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  CoxeterMatrix m;
  if (name == "A1") m = CoxeterMatrix::type_A(1);
  else if (name == "A2") m = CoxeterMatrix::type_A(2);
  else if (name == "A3") m = CoxeterMatrix::type_A(3);
  else if (name == "B3") m = CoxeterMatrix::type_B(3);
  else if (name == "H3") m = CoxeterMatrix::type_H3();
  else if (name == "A1xI2(5)") m = CoxeterMatrix::product(CoxeterMatrix::type_A(1), CoxeterMatrix::dihedral(5));
  else if (name.rfind("I2(", 0) == 0) m = CoxeterMatrix::dihedral(std::stoi(name.substr(3)));
  else FAIL("unknown test group " << name);
  auto g = coxsol::CoxeterGroup::build(m);
  cache.emplace(name, g);
  return g;
}

inline coxsol::GroupPtr dihedral(int m) { return group("I2(" + std::to_string(m) + ")"); }

}  // namespace testing
