#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goldbach/cli.hpp"

using goldbach::cli::Command;
using goldbach::cli::JobConfig;

int main(int argc, char** argv) {
  JobConfig config;
  std::string out_path;
  std::string cache_dir = ".goldbach_cache";
  std::vector<std::string> zero_tables;

  CLI::App app{"Two-progression Goldbach sums, L-function zeros and explicit-formula checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", goldbach::cli::kToolVersion);
  app.add_option("--out", out_path, "CSV output file (default: stdout)");
  app.add_option("--cache-dir", cache_dir, "sieve and zero cache, empty to disable; GOLDBACH_CACHE_DIR overrides")
      ->capture_default_str();

  auto classes = [&](CLI::App* sub) {
    sub->add_option("--q1", config.q1)->capture_default_str();
    sub->add_option("--a1", config.a1)->capture_default_str();
    sub->add_option("--q2", config.q2)->capture_default_str();
    sub->add_option("--a2", config.a2)->capture_default_str();
  };
  auto character = [&](CLI::App* sub) {
    sub->add_option("--modulus", config.modulus)->capture_default_str();
    sub->add_option("--char-index", config.char_index, "rank of the exponent vector, see README")
        ->capture_default_str();
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--xmax", config.xmax)->capture_default_str();
    sub->add_option("--samples", config.samples, "geometric points over [1e3, xmax]")->capture_default_str();
    sub->add_option("--x", config.sample_points, "explicit sample points instead of the geometric grid");
  };
  auto zeros = [&](CLI::App* sub) {
    sub->add_option("--height", config.height, "zero height T")->capture_default_str();
    sub->add_option("--real-grid", config.real_grid, "grid for the real-zero scan")->capture_default_str();
    sub->add_option("--zero-table", zero_tables, "LABEL=FILE, e.g. 1.0=zeros.txt; repeatable");
    sub->add_flag("--recertify", config.recertify_ingested, "sign-check and count-check ingested tables");
  };

  auto* sieve = app.add_subcommand("sieve", "psi(x) at the sample points; fills the sieve cache");
  sampling(sieve);
  auto* zeros_cmd = app.add_subcommand("zeros", "certified zero ordinates of L(s, chi) as a plain table");
  character(zeros_cmd);
  zeros_cmd->add_option("--height", config.height)->capture_default_str();
  auto* theorem = app.add_subcommand("theorem", "TheoremReport rows for two residue classes");
  classes(theorem);
  sampling(theorem);
  zeros(theorem);
  auto* fujii = app.add_subcommand("fujii", "modulus-one special case, with and without the zero terms");
  sampling(fujii);
  zeros(fujii);
  auto* ruppel = app.add_subcommand("ruppel", "bare, real-zero-augmented and full residuals for one modulus");
  classes(ruppel);
  sampling(ruppel);
  zeros(ruppel);
  auto* explicit_cmd = app.add_subcommand("explicit", "explicit-formula residuals of S~(alpha, chi)");
  character(explicit_cmd);
  explicit_cmd->add_option("--N", config.N)->capture_default_str();
  explicit_cmd->add_option("--alpha", config.alphas)->capture_default_str();
  zeros(explicit_cmd);
  auto* mean_cmd = app.add_subcommand("mean-square", "mean square of the corrected S~ over |alpha| <= xi");
  character(mean_cmd);
  mean_cmd->add_option("--N", config.N)->capture_default_str();
  mean_cmd->add_option("--xi", config.xis)->capture_default_str();
  mean_cmd->add_option("--real-grid", config.real_grid)->capture_default_str();
  auto* lemmas = app.add_subcommand("lemmas", "Hankel, detection and oscillation checks on the example grids");
  zeros(lemmas);
  auto* audit = app.add_subcommand("audit", "Siegel-zero scan of the real characters mod q");
  audit->add_option("--q", config.modulus)->capture_default_str();
  audit->add_option("--c1", config.c1)->capture_default_str();
  audit->add_option("--real-grid", config.real_grid)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return goldbach::cli::kInvalidConfig;
  }

  const std::vector<std::pair<CLI::App*, Command>> commands{
      {sieve, Command::sieve},     {zeros_cmd, Command::zeros},
      {theorem, Command::theorem}, {fujii, Command::fujii},
      {ruppel, Command::ruppel},   {explicit_cmd, Command::explicit_formula},
      {mean_cmd, Command::mean_square}, {lemmas, Command::lemmas},
      {audit, Command::audit},
  };
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  for (const auto& entry : zero_tables) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
      std::cerr << "invalid configuration: --zero-table expects LABEL=FILE, got '" << entry << "'\n";
      return goldbach::cli::kInvalidConfig;
    }
    config.zero_tables.emplace_back(entry.substr(0, eq), entry.substr(eq + 1));
  }
  if (!out_path.empty()) config.output_path = out_path;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  goldbach::cli::apply_environment(config);
  return goldbach::cli::run(config);
}
