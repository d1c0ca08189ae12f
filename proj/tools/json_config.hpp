#pragma once

#include <CLI11.hpp>

namespace dipolewave::cli {

// JSON config files for CLI11. Top-level keys are global flags; an object
// under a subcommand name holds that subcommand's flags:
//
//   { "format": "json", "quad-nodes": 96, "stats": { "eta-re": 1, "tau": [0, 1] } }
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace dipolewave::cli
