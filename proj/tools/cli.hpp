#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lctinf::cli {

enum class Command { newton, lct, multipliers, mass, verify, bergman, report };

struct RunConfig {
  Command command = Command::report;
  std::optional<std::string> map;
  std::optional<std::string> indicator;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  bool json = false;

  std::optional<std::string> scale;  // rational t, threshold and masses of t*u
  // verify
  std::optional<double> c;
  unsigned shells = 12;
  std::uint64_t samples = 100000;
  double r_inner = 1.0;
  std::optional<double> mesh;
  // bergman
  std::string m = "1,2,4,8,16";
  std::string kappa = "3";
  std::optional<std::string> points;  // "x,y; x,y" real coordinates
  std::size_t num_points = 20;
};

// Exit status: 0 ok, 2 bad input, 3 internal consistency or numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lctinf::cli
