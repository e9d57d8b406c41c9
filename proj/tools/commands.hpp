#pragma once

#include <optional>
#include <string>

#include "gsws/model.hpp"

namespace gsws_cli {

struct CommonConfig {
  gsws::PotentialParams params;
  std::string format = "csv";  // csv | json
  std::string out;             // empty: stdout
};

// each command returns the process exit code (0 ok, 2 computation error,
// 3 verification failure); computation errors are thrown and mapped in main
int cmd_potential(const CommonConfig& cfg, double x_min, double x_max,
                  int samples, std::optional<int> mws_p,
                  std::optional<int> mws_q);
int cmd_scatter(const CommonConfig& cfg, const std::string& axis, double lo,
                double hi, int steps, std::optional<double> energy);
int cmd_resonances(const CommonConfig& cfg, double lo, double hi);
int cmd_bound(const CommonConfig& cfg, const std::string& parity, bool dump,
              int x_samples, bool normalize);
int cmd_quasibound(const CommonConfig& cfg, const std::string& parity,
                   double lo, double hi, bool dump, int x_samples);
int cmd_verify(const CommonConfig& cfg, bool negative_control, bool quick);

}  // namespace gsws_cli
