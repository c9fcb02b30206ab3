#pragma once

#include <iosfwd>

#include "config.hpp"

namespace nbspec::cli {

// Each command writes its JSON summary to `out` and returns the exit code.
int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_bound(const RunConfig& cfg, std::ostream& out);

}  // namespace nbspec::cli
