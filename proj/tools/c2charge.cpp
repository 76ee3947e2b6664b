// Command-line front end; thin wrapper over the C API in c2charge.h.
//
// Exit codes: 0 ok, 1 usage error, 2 verification failure.

#include "c2charge.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

bool parse_weight(const std::string& text, long long& l1, long long& l2) {
  long long a, b;
  char tail;
  if (std::sscanf(text.c_str(), "%lld,%lld%c", &a, &b, &tail) != 2) return false;
  l1 = a;
  l2 = b;
  return true;
}

int emit(const char* text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return 1;
  }
  f << text;
  return 0;
}

int fail(c2c_status s) {
  std::cerr << "error: " << c2c_status_name(s) << "\n";
  return s == C2C_EINVAL || s == C2C_EFORMAT ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact C2 crystal combinatorics: atomic decompositions, charge "
               "statistics and Kostka-Foulkes polynomials"};
  app.require_subcommand(1);

  std::string lambda_text, mu_text, format = "text", out_path;
  long long m = -1, bound = 4, jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    if (needs_lambda)
      cmd->add_option("--lambda", lambda_text, "dominant weight, written l1,l2")->required();
    cmd->add_option("--format", format, "json|csv|text")->capture_default_str();
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    return cmd;
  };

  CLI::App* crystal = add_common(app.add_subcommand("crystal", "list B(lambda)"), true);
  CLI::App* decompose =
      add_common(app.add_subcommand("decompose", "atoms, preatoms and charges"), true);
  CLI::App* kostka = add_common(
      app.add_subcommand("kostka", "Kostka-Foulkes table: charge vs oracle"), true);
  kostka->add_option("--mu", mu_text, "restrict to one dominant weight l1,l2");
  CLI::App* graph = app.add_subcommand("graph", "DOT export of the Bruhat graph");
  graph->add_option("--lambda", lambda_text, "dominant weight, written l1,l2")->required();
  graph->add_option("--m", m, "twist index (omit for the untwisted orientation)");
  graph->add_option("--out", out_path, "write output to a file instead of stdout");
  CLI::App* verify = add_common(app.add_subcommand("verify", "run the property suite"), false);
  verify->add_option("--bound", bound, "cap l1+l2 for the checks")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  long long l1 = 0, l2 = 0;
  if (!lambda_text.empty() && !parse_weight(lambda_text, l1, l2)) {
    std::cerr << "error: --lambda expects l1,l2\n";
    return 1;
  }

  char* text = nullptr;
  c2c_status s = C2C_OK;
  int rc = 0;

  if (crystal->parsed()) {
    s = c2c_render_crystal(l1, l2, format.c_str(), &text);
  } else if (decompose->parsed()) {
    s = c2c_render_decompose(l1, l2, format.c_str(), &text);
  } else if (kostka->parsed()) {
    long long m1 = 0, m2 = 0;
    int have_mu = 0;
    if (!mu_text.empty()) {
      if (!parse_weight(mu_text, m1, m2)) {
        std::cerr << "error: --mu expects l1,l2\n";
        return 1;
      }
      have_mu = 1;
    }
    int all_match = 0;
    s = c2c_render_kostka(l1, l2, format.c_str(), have_mu, m1, m2, &text, &all_match);
    if (s == C2C_OK && !all_match) rc = 2;
  } else if (graph->parsed()) {
    s = c2c_render_graph(l1, l2, m, &text);
  } else if (verify->parsed()) {
    int all_passed = 0;
    s = c2c_render_verify(bound, jobs, format.c_str(), &text, &all_passed);
    if (s == C2C_OK && !all_passed) rc = 2;
  }

  if (s != C2C_OK) return fail(s);
  int emit_rc = emit(text, out_path);
  c2c_free_string(text);
  return emit_rc != 0 ? emit_rc : rc;
}
