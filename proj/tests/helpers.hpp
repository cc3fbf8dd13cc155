#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "slab/ideal.hpp"

namespace slab::test {

inline Element e(std::size_t i) { return Element{i}; }

inline std::set<std::size_t> indices(const ElementSet& set) {
  std::set<std::size_t> out;
  for (Element a : set) out.insert(a.index());
  return out;
}

inline std::vector<std::size_t> indices(const std::vector<Element>& elems) {
  std::vector<std::size_t> out;
  for (Element a : elems) out.push_back(a.index());
  return out;
}

inline MultSet closure(const FiniteRing& r, std::initializer_list<std::size_t> gens) {
  std::vector<Element> g;
  for (std::size_t i : gens) g.push_back(Element{i});
  return mult_closure(r, g);
}

inline Ideal ideal(const FiniteRing& r, std::initializer_list<std::size_t> gens) {
  std::vector<Element> g;
  for (std::size_t i : gens) g.push_back(Element{i});
  return generated_ideal(r, g);
}

}  // namespace slab::test
