#pragma once

// Job orchestration behind the command-line tool: configuration, caching of
// the sieve and of zero sets, CSV emission and the exit-code contract.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/characters.hpp"
#include "goldbach/circle.hpp"
#include "goldbach/error.hpp"
#include "goldbach/goldbach.hpp"
#include "goldbach/lfun.hpp"
#include "goldbach/numtheory.hpp"

namespace goldbach::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { sieve, zeros, theorem, fujii, ruppel, explicit_formula, mean_square, lemmas, audit };

enum ExitCode : int { kOk = 0, kInvalidConfig = 2, kCertificationFailure = 3, kIoFailure = 4 };

inline constexpr double kMaxHeight = 1e4;
inline constexpr std::int64_t kMaxX = 10'000'000;
inline constexpr std::int64_t kMaxN = 100'000;
/// Monitored constant for |E(X)| / (X log X log(q1 X) log(q2 X)).
inline constexpr double kBoundRatioTarget = 2.0;
/// Largest accepted normalized residual in the lemma suite.
inline constexpr double kLemmaRatioLimit = 5.0;

inline std::string command_name(Command c) {
  switch (c) {
    case Command::sieve: return "sieve";
    case Command::zeros: return "zeros";
    case Command::theorem: return "theorem";
    case Command::fujii: return "fujii";
    case Command::ruppel: return "ruppel";
    case Command::explicit_formula: return "explicit";
    case Command::mean_square: return "mean-square";
    case Command::lemmas: return "lemmas";
    case Command::audit: return "audit";
  }
  return "?";
}

struct JobConfig {
  Command command = Command::theorem;
  std::int64_t xmax = 100'000;
  std::int64_t N = 1000;
  std::uint64_t q1 = 1;
  std::int64_t a1 = 1;
  std::uint64_t q2 = 1;
  std::int64_t a2 = 1;
  std::uint64_t modulus = 1;
  std::uint64_t char_index = 0;
  double height = 1000.0;
  double c1 = 0.1;
  std::int64_t real_grid = 10000;
  std::size_t samples = 50;
  std::vector<double> sample_points;  // overrides the geometric default when non-empty
  std::vector<double> alphas{0.0, 0.01, 0.05, 0.17, 0.31};
  std::vector<double> xis{1.0 / 64.0, 1.0 / 8.0, 0.5};
  std::vector<std::pair<std::string, std::string>> zero_tables;  // character label, path
  std::optional<std::string> output_path;
  std::optional<std::filesystem::path> cache_dir;
  bool recertify_ingested = false;
};

/// GOLDBACH_CACHE_DIR, when set and nonempty, wins over the configured directory.
inline void apply_environment(JobConfig& config) {
  if (const char* env = std::getenv("GOLDBACH_CACHE_DIR"); env != nullptr && *env != '\0') {
    config.cache_dir = std::filesystem::path(env);
  }
}

inline void validate(const JobConfig& c) {
  auto fail = [](const std::string& what) { throw ConfigurationError(what); };
  if (!(c.height > 0.0 && c.height <= kMaxHeight)) fail("height must lie in (0, 1e4]");
  if (c.xmax < 2 || c.xmax > kMaxX) fail("xmax must lie in [2, 1e7]");
  if (c.N < 2 || c.N > kMaxN) fail("N must lie in [2, 1e5]");
  if (c.samples == 0) fail("samples must be positive");
  if (c.real_grid < 1000) fail("real-zero grid must be at least 1000");
  if (!(c.c1 > 0.0)) fail("c1 must be positive");
  if (c.modulus == 0 || c.q1 == 0 || c.q2 == 0) fail("moduli must be positive");
  if (c.char_index >= euler_phi(c.modulus)) {
    fail("char-index " + std::to_string(c.char_index) + " out of range for modulus " + std::to_string(c.modulus));
  }
  for (double x : c.sample_points) {
    if (!(x >= 2.0 && x <= static_cast<double>(c.xmax))) fail("sample points must lie in [2, xmax]");
  }
  for (double a : c.alphas) {
    if (!(a >= -0.5 && a <= 0.5)) fail("alpha must lie in [-1/2, 1/2]");
  }
  for (double xi : c.xis) {
    if (!(xi > 0.0 && xi <= 0.5)) fail("xi must lie in (0, 1/2]");
  }
  if (c.command == Command::ruppel && c.q1 != c.q2) fail("ruppel needs q1 = q2");
  ResidueClass(c.q1, c.a1);
  ResidueClass(c.q2, c.a2);
}

namespace detail {

inline std::string echo(const JobConfig& c) {
  using goldbach::detail::format_g;
  std::ostringstream s;
  auto classes = [&] { s << " q1=" << c.q1 << " a1=" << c.a1 << " q2=" << c.q2 << " a2=" << c.a2; };
  auto character = [&] { s << " modulus=" << c.modulus << " char-index=" << c.char_index; };
  auto list = [&](const char* name, const std::vector<double>& v) {
    s << ' ' << name << '=';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ";" : "") << format_g(v[i]);
  };
  switch (c.command) {
    case Command::sieve: s << " xmax=" << c.xmax << " samples=" << c.samples; break;
    case Command::zeros: character(); s << " height=" << format_g(c.height); break;
    case Command::theorem:
    case Command::ruppel:
      classes();
      s << " xmax=" << c.xmax << " samples=" << c.samples << " height=" << format_g(c.height);
      break;
    case Command::fujii: s << " xmax=" << c.xmax << " samples=" << c.samples << " height=" << format_g(c.height); break;
    case Command::explicit_formula:
      character();
      s << " N=" << c.N << " height=" << format_g(c.height);
      list("alpha", c.alphas);
      break;
    case Command::mean_square:
      character();
      s << " N=" << c.N;
      list("xi", c.xis);
      break;
    case Command::lemmas: s << " height=" << format_g(c.height); break;
    case Command::audit: s << " q=" << c.modulus << " c1=" << format_g(c.c1); break;
  }
  if (c.command != Command::audit) s << " real-grid=" << c.real_grid;
  if (!c.sample_points.empty()) list("x", c.sample_points);
  for (const auto& [label, path] : c.zero_tables) s << " zero-table=" << label << ':' << path;
  if (c.recertify_ingested) s << " recertify";
  return s.str();
}

inline std::vector<double> sample_points(const JobConfig& c) {
  if (!c.sample_points.empty()) return c.sample_points;
  const double hi = static_cast<double>(c.xmax);
  return geometric_samples(std::min(1e3, hi), hi, c.samples);
}

/// Table of Lambda up to at least `limit`, reusing the cached file when it is long enough.
inline MangoldtTable mangoldt(const JobConfig& c, std::uint64_t limit, std::ostream& log) {
  if (!c.cache_dir) return sieve_mangoldt(static_cast<std::int64_t>(limit));
  const auto file = *c.cache_dir / "mangoldt.bin";
  if (std::ifstream in(file, std::ios::binary); in) {
    try {
      auto table = MangoldtTable::load(in);
      if (table.limit() >= limit) {
        log << "loaded sieve to " << table.limit() << " from " << file.string() << "\n";
        return table;
      }
      log << "sieve cache " << file.string() << " reaches " << table.limit() << ", need " << limit
          << "; invalidated\n";
    } catch (const IoError& e) {
      log << "sieve cache " << file.string() << " unreadable (" << e.what() << "); invalidated\n";
    }
  }
  auto table = sieve_mangoldt(static_cast<std::int64_t>(limit));
  std::error_code ec;
  std::filesystem::create_directories(*c.cache_dir, ec);
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write sieve cache '" + file.string() + "'");
  table.save(out);
  log << "sieved to " << limit << ", cached in " << file.string() << "\n";
  return table;
}

inline ZeroBank make_bank(const JobConfig& c, std::ostream& log) {
  ZeroBank::Options options;
  options.height = c.height;
  options.real_grid = c.real_grid;
  options.cache_dir = c.cache_dir;
  options.log = &log;
  ZeroBank bank(options);
  for (const auto& [label, path] : c.zero_tables) {
    const auto chi = character_from_label(label);
    if (!chi.is_primitive()) throw ConfigurationError("zero table for " + label + ": character is not primitive");
    ZeroSet set = ingest_zero_table(path, chi, c.recertify_ingested);
    std::erase_if(set.zeros, [&](const Zero& z) { return z.ordinate > c.height; });
    if (c.recertify_ingested) {
      const auto count = count_zeros_argument_principle(chi, c.height);
      if (count != static_cast<std::int64_t>(set.zeros.size())) {
        throw CertificationFailure("zero table " + path + " lists " + std::to_string(set.zeros.size()) +
                                   " zeros of " + label + " up to height " + goldbach::detail::format_g(c.height) +
                                   ", the argument principle counts " + std::to_string(count));
      }
      set.count_certificate = count;
    } else {
      set.count_certificate = static_cast<std::int64_t>(set.zeros.size());
      log << "ingested " << set.zeros.size() << " zeros of " << label << " from " << path << " (not recertified)\n";
    }
    set.height = c.height;
    bank.insert(chi, std::move(set));
  }
  return bank;
}

inline DirichletCharacter selected_character(const JobConfig& c) { return build_group(c.modulus)[c.char_index]; }

inline ClassPair classes(const JobConfig& c) { return {ResidueClass(c.q1, c.a1), ResidueClass(c.q2, c.a2)}; }

inline void job_sieve(const JobConfig& c, std::ostream& out, std::ostream& log) {
  const auto table = mangoldt(c, static_cast<std::uint64_t>(c.xmax), log);
  out << "x,psi\n";
  for (double x : sample_points(c)) out << format_sci(x) << ',' << format_sci(psi(table, x)) << '\n';
}

inline void job_zeros(const JobConfig& c, std::ostream& out, std::ostream&) {
  write_zero_table(out, find_critical_zeros(selected_character(c), c.height));
}

inline void job_theorem(const JobConfig& c, std::ostream& out, std::ostream& log) {
  const auto table = mangoldt(c, static_cast<std::uint64_t>(c.xmax), log);
  const auto rep = representation_fft(table, classes(c), c.xmax);
  auto bank = make_bank(c, log);
  out << kTheoremCsvHeader << '\n';
  for (double X : sample_points(c)) {
    const auto r = theorem_report(rep, X, bank);
    write_theorem_row(out, r);
    if (!(r.bound_ratio < kBoundRatioTarget)) {
      log << "red flag: bound_ratio " << format_sci(r.bound_ratio) << " at X = " << format_sci(X)
          << " exceeds the monitored constant " << kBoundRatioTarget << "\n";
    }
  }
}

inline void job_fujii(const JobConfig& c, std::ostream& out, std::ostream& log) {
  const auto table = mangoldt(c, static_cast<std::uint64_t>(c.xmax), log);
  const auto rep = representation_fft(table, {ResidueClass(1, 0), ResidueClass(1, 0)}, c.xmax);
  auto bank = make_bank(c, log);
  out << "X,lhs,main,zero_terms,residual,bare_residual,T,tail_bound\n";
  CompensatedSum<double> full, bare;
  for (double X : sample_points(c)) {
    const auto r = theorem_report(rep, X, bank);
    const double plain = r.lhs - r.main_term;
    full += r.residual * r.residual;
    bare += plain * plain;
    out << format_sci(X) << ',' << format_sci(r.lhs) << ',' << format_sci(r.main_term) << ','
        << format_sci(-(r.g_term_1 + r.g_term_2)) << ',' << format_sci(r.residual) << ',' << format_sci(plain) << ','
        << format_sci(r.height) << ',' << format_sci(r.truncation_bound) << '\n';
  }
  log << "rms(residual) / rms(bare residual) = " << format_sci(std::sqrt(full.value() / bare.value())) << "\n";
}

inline void job_ruppel(const JobConfig& c, std::ostream& out, std::ostream& log) {
  const auto table = mangoldt(c, static_cast<std::uint64_t>(c.xmax), log);
  const auto rep = representation_fft(table, classes(c), c.xmax);
  auto bank = make_bank(c, log);
  out << "X,q,a,b,lhs,main,ruppel_residual,real_zero_terms,augmented_residual,theorem_residual,delta,ruppel_scale\n";
  for (double X : sample_points(c)) {
    const auto r = ruppel_comparison(rep, X, bank);
    out << format_sci(X) << ',' << r.q << ',' << r.a << ',' << r.b << ',' << format_sci(r.lhs) << ','
        << format_sci(r.main_term) << ',' << format_sci(r.ruppel_residual) << ',' << format_sci(r.real_zero_terms)
        << ',' << format_sci(r.augmented_residual) << ',' << format_sci(r.theorem_residual) << ','
        << format_sci(r.delta) << ',' << format_sci(r.ruppel_scale) << '\n';
  }
}

inline void job_explicit(const JobConfig& c, std::ostream& out, std::ostream& log) {
  const auto chi = selected_character(c);
  if (!chi.is_primitive()) throw ConfigurationError("explicit: character " + chi.label() + " is not primitive");
  const auto table = mangoldt(c, damped_cutoff(c.N), log);
  auto bank = make_bank(c, log);
  const auto zeros = bank.all_zeros(chi);
  out << kVerificationCsvHeader << '\n';
  for (double a : c.alphas) {
    const auto r = verify_explicit_formula(ThetaPoint(a, c.N), chi, zeros, table);
    write_verification_row(out, r.row());
    auto coarse = r.row();
    coarse.job = "explicit_log";
    coarse.normalization = r.scale / std::sqrt(static_cast<double>(c.N));
    coarse.ratio = r.normalized_log;
    write_verification_row(out, coarse);
  }
}

inline void job_mean_square(const JobConfig& c, std::ostream& out, std::ostream& log) {
  const auto chi = selected_character(c);
  const auto table = mangoldt(c, damped_cutoff(c.N), log);
  auto bank = make_bank(c, log);
  std::vector<double> betas;
  for (const auto& z : bank.real_zeros(chi)) betas.push_back(z.real_position);
  out << kVerificationCsvHeader << '\n';
  for (double xi : c.xis) write_verification_row(out, mean_square(chi, c.N, xi, betas, table).row());
}

inline void job_lemmas(const JobConfig& c, std::ostream& out, std::ostream& log) {
  std::size_t failures = 0;
  out << kVerificationCsvHeader << '\n';
  for (std::int64_t n : {1, -1, 20, -20, 50, -50, 0}) {
    for (double mu : {0.5, 1.0, 1.5, 2.0}) {
      if (n == 0 && mu > 1.0) continue;
      for (std::int64_t N : {100, 1000}) {
        const auto h = hankel_integral(n, mu, N);
        const Verification v{"hankel",
                             "n=" + std::to_string(n) + ";mu=" + goldbach::detail::format_g(mu) +
                                 ";N=" + std::to_string(N),
                             h.value,
                             {h.prediction, 0.0},
                             h.deviation(),
                             h.envelope,
                             h.deviation() / h.envelope};
        write_verification_row(out, v);
        if (!h.within_envelope()) {
          ++failures;
          log << "hankel n=" << n << " mu=" << mu << " N=" << N << " leaves its envelope\n";
        }
      }
    }
  }
  const std::int64_t M = 10000;
  const auto table = mangoldt(c, std::max<std::uint64_t>(M, damped_cutoff(200)), log);
  auto bank = make_bank(c, log);
  const auto chi3 = build_group(3)[1];
  const auto chi4 = build_group(4)[1];
  std::vector<Verification> checks{
      verify_t_detect(100.0, 1.0, 100),
      verify_t_detect(5.0, 2.0, 100),
      verify_detect(200.0, 1.0, trivial_character(), 200, table),
      verify_detect(100.0, 0.5, chi3, 200, table),
      verify_cal_osc(M, 1.0, trivial_character(), bank.all_zeros(trivial_character()), table),
      verify_cal_osc(1000, 0.75, chi4, bank.all_zeros(chi4), table),
  };
  for (const auto& v : checks) {
    write_verification_row(out, v);
    if (!(v.ratio < kLemmaRatioLimit)) {
      ++failures;
      log << v.job << ' ' << v.parameters << " normalized residual " << format_sci(v.ratio) << "\n";
    }
  }
  if (failures != 0) throw CertificationFailure("lemma suite: " + std::to_string(failures) + " check(s) failed");
}

inline void job_audit(const JobConfig& c, std::ostream& out, std::ostream&) {
  const auto report = siegel_audit(c.modulus, c.c1, c.real_grid);
  out << "q,c1,threshold,characters_scanned,offender,beta\n";
  out << report.modulus << ',' << format_sci(report.landau_constant_c1) << ',' << format_sci(report.threshold) << ','
      << report.characters_scanned << ',';
  if (report.offender) {
    out << report.offender->character << ',' << format_sci(report.offender->beta) << '\n';
  } else {
    out << "none,\n";
  }
}

inline void execute(const JobConfig& c, std::ostream& out, std::ostream& log) {
  switch (c.command) {
    case Command::sieve: return job_sieve(c, out, log);
    case Command::zeros: return job_zeros(c, out, log);
    case Command::theorem: return job_theorem(c, out, log);
    case Command::fujii: return job_fujii(c, out, log);
    case Command::ruppel: return job_ruppel(c, out, log);
    case Command::explicit_formula: return job_explicit(c, out, log);
    case Command::mean_square: return job_mean_square(c, out, log);
    case Command::lemmas: return job_lemmas(c, out, log);
    case Command::audit: return job_audit(c, out, log);
  }
}

}  // namespace detail

/// Runs one job. The CSV (with its '#' header) goes to the output path, or to
/// `out` when none is set; diagnostics go to `log`. Nothing is written to the
/// output path unless the job succeeds.
inline int run(const JobConfig& config, std::ostream& out = std::cout, std::ostream& log = std::cerr) {
  try {
    validate(config);
    std::ostringstream body;
    body << "# goldbach_cli " << kToolVersion << "\n";
    body << "# command " << command_name(config.command) << "\n";
    body << "# config" << detail::echo(config) << "\n";
    detail::execute(config, body, log);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw IoError("cannot open output '" + *config.output_path + "'");
      file << body.str();
      file.flush();
      if (!file) throw IoError("write to '" + *config.output_path + "' failed");
    } else {
      out << body.str();
      out.flush();
    }
    return kOk;
  } catch (const InvalidArgument& e) {
    log << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const OutOfRange& e) {
    log << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const ConfigurationError& e) {
    log << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const IoError& e) {
    log << "i/o failure: " << e.what() << "\n";
    return kIoFailure;
  } catch (const IngestionError& e) {
    log << "i/o failure: " << e.what() << "\n";
    return kIoFailure;
  } catch (const Error& e) {
    log << "certification failure: " << e.what() << "\n";
    return kCertificationFailure;
  }
}

}  // namespace goldbach::cli
