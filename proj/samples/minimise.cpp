// Plant levels at 5 and 7 in a ternary cubic, then minimise it globally.
#include <iostream>

#include "g1min/g1min.hpp"

int main() {
  using namespace g1min;
  auto inst = generate_instance(-2, 5, 3, {{5, 2}, {7, 1}}, 2024);
  std::cout << "input    " << print_model({inst.equation, std::nullopt, std::nullopt});
  std::cout << "disc     " << to_string(discriminant(inst.equation)) << "\n";

  auto cert = minimise_global(inst.equation);
  for (const auto& m : cert.moves) std::cout << "move     " << m.tag << " at " << m.prime << "\n";
  std::cout << "output   " << to_json(cert.output).dump() << "\n";
  std::cout << "disc     " << to_string(discriminant(cert.output)) << "\n";
  std::cout << "status   " << status_name(cert.status) << "\n";

  auto inv = invariants(cert.output);
  auto jac = jacobian(inv.c4, inv.c6);
  std::cout << "jacobian " << to_json(jac.model).dump() << "\n";
  std::cout << "disc_min " << to_string(minimal_discriminant_global(jac.model).disc_min) << "\n";
}
