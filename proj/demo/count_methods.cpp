// Minimal library walkthrough: build an arrangement, count its regions by
// three unrelated routes, and inspect one tree's contribution.

#include <iostream>

#include "braid/boxed.hpp"
#include "braid/contribution.hpp"
#include "braid/ish.hpp"
#include "braid/oracle.hpp"
#include "braid/render.hpp"

int main() {
  using namespace braid;

  ArrangementSpec ish = preset_ish(3);
  std::cout << "ish n=3 hyperplanes: " << ish.hyperplane_count() << ", m = "
            << ish.max_offset() << "\n";

  std::cout << "regions (boxed-tree signed sum, brute): "
            << count_regions_brute(ish).str() << "\n";
  std::cout << "regions (per-tree chain algorithm):     "
            << count_regions_fast(ish).str() << "\n";
  std::cout << "regions (finite fields + Zaslavsky):    "
            << count_regions_oracle(ish).str() << "\n";
  std::cout << "regions (closed nested-Ish product):    "
            << count_regions_formula(ish).str() << "\n";

  PlaneTree tree = decode_tree("1(3(2(***)**)**)");
  std::cout << "\none tree, step by step:\n" << explain_text(ish, tree);

  std::cout << "\nclassification histogram over T^(2)(3):\n";
  for (const auto& [cls, count] : class_histogram(ish).classes)
    std::cout << "  " << to_string(cls) << " x " << count.str() << "\n";
  return 0;
}
