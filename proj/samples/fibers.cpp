// Classify the special fibre of a quadric pair read from a model file.
#include <iostream>

#include "g1min/g1min.hpp"

int main(int argc, char** argv) {
  using namespace g1min;
  if (argc != 2) {
    std::cerr << "usage: sample_fibers model.json\n";
    return 1;
  }
  try {
    auto model = read_model(argv[1]);
    LocalContext ctx(model.prime.value_or(5));
    auto rep = classify_fiber(model.equation, ctx);
    auto verdict = normality(model.equation, ctx);
    std::cout << "p=" << ctx.p() << " fibre: " << fiber_name(rep.cls) << "\n";
    std::cout << (verdict.normal ? "normal" : "not normal") << " via " << verdict.criterion << "\n";
    if (rep.position) std::cout << "standard position: " << to_json(rep.position->equation).dump() << "\n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
