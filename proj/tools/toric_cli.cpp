#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "toric/error.hpp"
#include "toric/fan_document.hpp"
#include "toric/report.hpp"

namespace {

std::optional<std::string> opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on complete simplicial toric varieties"};
  app.require_subcommand(1);

  std::string file, divisor, b, a, ample, scaling;
  long dilate = 1;
  std::function<toric::report::Json(const toric::FanDocument&)> run;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "fan document (JSON)")->required();
    return sub;
  };

  auto* classify = add("classify", "singularity classification and positivity");
  classify->add_option("--divisor", divisor, "boundary divisor name");
  classify->callback([&] { run = [&](const auto& d) { return toric::report::classify(d, opt(divisor)); }; });

  add("cones", "nef, effective, movable and Mori cones")->callback([&] {
    run = [](const auto& d) { return toric::report::cones(d); };
  });

  add("chambers", "Mori chamber decomposition of the movable cone")->callback([&] {
    run = [](const auto& d) { return toric::report::chambers(d); };
  });

  auto* nef = add("nef-value", "nef threshold of B with respect to ample A");
  nef->add_option("--b", b, "divisor B")->required();
  nef->add_option("--a", a, "ample divisor A")->required();
  nef->callback([&] { run = [&](const auto& d) { return toric::report::nef_value(d, b, a); }; });

  auto* vol = add("volume", "volume of a divisor");
  vol->add_option("--divisor", divisor, "divisor name")->required();
  vol->callback([&] { run = [&](const auto& d) { return toric::report::volume(d, divisor); }; });

  auto* h0 = add("h0", "number of global sections");
  h0->add_option("--divisor", divisor, "divisor name")->required();
  h0->add_option("--dilate", dilate, "multiply the divisor by k")->check(CLI::PositiveNumber);
  h0->callback([&] { run = [&](const auto& d) { return toric::report::h0(d, divisor, dilate); }; });

  auto* cox = add("cox", "Cox ring grading and degree bounds");
  cox->add_option("--ample", ample, "ample divisor name");
  cox->callback([&] { run = [&](const auto& d) { return toric::report::cox(d, opt(ample)); }; });

  auto* mmp = add("mmp", "run the toric MMP with scaling");
  mmp->add_option("--divisor", divisor, "boundary divisor name");
  mmp->add_option("--scaling", scaling, "ample scaling divisor name");
  mmp->callback([&] { run = [&](const auto& d) { return toric::report::mmp(d, opt(divisor), opt(scaling)); }; });

  add("rigidity", "check the rigidity hypotheses")->callback([&] {
    run = [](const auto& d) { return toric::report::rigidity(d); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    toric::FanDocument doc = toric::load_fan_document(file);
    std::cout << toric::report::render(run(doc));
    return 0;
  } catch (const toric::SchemaError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const toric::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
