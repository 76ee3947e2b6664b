#pragma once

// Deterministic text output for the CLI commands.  Formats: json, csv,
// text (graph: dot).  All listings are ordered lexicographically on str2
// (crystal, decompose), on mu (kostka), or on vertices (graph).

#include "c2charge/root_system.hpp"

#include <optional>
#include <string>

namespace c2c {

struct RenderResult {
  std::string text;
  bool ok = true;  // kostka: all rows match; verify: all checks pass
};

std::string render_crystal(Weight lam, const std::string& format);
std::string render_decompose(Weight lam, const std::string& format);
RenderResult render_kostka(Weight lam, std::optional<Weight> mu, const std::string& format);
std::string render_graph(Weight lam, std::optional<long long> m);
RenderResult render_verify(long long bound, long long jobs, const std::string& format);

}  // namespace c2c
