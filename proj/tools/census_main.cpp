// census: sweep primes, emit L(p)/U(p) rows, and check them against the
// published table. See README for the file formats and exit codes.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "galrep/census.hpp"
#include "galrep/numth.hpp"
#include "galrep/reference_table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Sweeps beyond this need --long-run; the full p <= 1999 table is a
// long-running batch job.
constexpr std::uint64_t kLongRunGate = 500;

using galrep::Census;

std::vector<Census::PrimeResult> sweep(Census& census, std::uint64_t p_min,
                                       std::uint64_t p_max, unsigned jobs) {
  std::vector<std::uint64_t> primes;
  std::uint64_t p = galrep::is_prime(p_min) ? p_min : galrep::next_prime(p_min);
  for (; p <= p_max; p = galrep::next_prime(p)) primes.push_back(p);

  std::vector<Census::PrimeResult> results(primes.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      results[i] = census.prime_census(primes[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mu;
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= primes.size() || failed.load()) return;
        try {
          results[i] = census.prime_census(primes[i]);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mu);
          error = e.what();
          failed.store(true);
          return;
        }
      }
    });
  for (auto& w : workers) w.join();
  if (failed.load()) throw std::runtime_error(error);
  return results;
}

void emit_csv(std::ostream& out, const std::vector<Census::PrimeResult>& rows) {
  out << "p,L,U,exact,ratio\n";
  for (const auto& r : rows)
    out << r.row.p << "," << r.row.L << "," << r.row.U << ","
        << (r.row.exact ? "*" : "") << "," << r.row.ratio << "\n";
}

void emit_json(std::ostream& out, const std::vector<Census::PrimeResult>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json weights = nlohmann::ordered_json::array();
    for (const auto& w : r.weights) {
      nlohmann::ordered_json jw{{"k", w.k},
                                {"n_k", w.n_k},
                                {"e_count", w.e_count},
                                {"e_exact", w.e_exact},
                                {"eis", w.eis},
                                {"split_bound", w.split_bound},
                                {"irr_bound", w.irr_bound},
                                {"dihedral", w.dihedral},
                                {"ells_used", w.ells_used}};
      if (w.p_good_r)
        jw["p_good_r"] = *w.p_good_r;
      else
        jw["p_good_r"] = nullptr;
      weights.push_back(std::move(jw));
    }
    arr.push_back(nlohmann::ordered_json{{"p", r.row.p},
                                         {"L", r.row.L},
                                         {"U", r.row.U},
                                         {"exact", r.row.exact},
                                         {"ratio", r.row.ratio},
                                         {"weights", std::move(weights)}});
  }
  out << arr.dump(2) << "\n";
}

struct CommonArgs {
  unsigned r_max = 20;
  std::vector<std::uint64_t> ells{2, 3};
  std::string cache_dir;
  unsigned jobs = 1;
  bool long_run = false;
};

int check_common(const CommonArgs& a) {
  if (a.r_max < 3) {
    std::cerr << "error: --r-max must be >= 3\n";
    return kExitUsage;
  }
  if (a.ells.empty()) {
    std::cerr << "error: --ell needs at least one prime\n";
    return kExitUsage;
  }
  for (auto l : a.ells)
    if (!galrep::is_prime(l)) {
      std::cerr << "error: --ell entries must be prime, got " << l << "\n";
      return kExitUsage;
    }
  return kExitOk;
}

int run_command(const CommonArgs& common, std::uint64_t p_min, std::uint64_t p_max,
                const std::string& out_path, const std::string& format) {
  if (int rc = check_common(common)) return rc;
  if (p_min < 11) {
    std::cerr << "error: --p-min must be >= 11\n";
    return kExitUsage;
  }
  if (format != "csv" && format != "json") {
    std::cerr << "error: --format must be csv or json\n";
    return kExitUsage;
  }
  if (p_max > kLongRunGate && !common.long_run) {
    std::cerr << "error: --p-max " << p_max << " exceeds the desk-scale gate ("
              << kLongRunGate << "); pass --long-run to attempt it\n";
    return kExitUsage;
  }

  try {
    galrep::CharpolyCache cache(common.cache_dir);
    Census census(cache, {common.r_max, common.ells});
    auto rows = sweep(census, p_min, p_max, common.jobs);

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitIo;
      }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (format == "csv")
      emit_csv(out, rows);
    else
      emit_json(out, rows);
    out.flush();
    if (!out) {
      std::cerr << "error: write failed\n";
      return kExitIo;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int verify_command(const CommonArgs& common, std::uint64_t p_max) {
  if (int rc = check_common(common)) return rc;
  if (p_max > 1999) {
    std::cerr << "error: the reference table ends at p = 1999\n";
    return kExitUsage;
  }
  if (p_max > kLongRunGate && !common.long_run) {
    std::cerr << "error: --p-max " << p_max << " exceeds the desk-scale gate ("
              << kLongRunGate << "); pass --long-run to attempt it\n";
    return kExitUsage;
  }
  unsigned pass = 0, known = 0, fail = 0;
  try {
    galrep::CharpolyCache cache(common.cache_dir);
    Census census(cache, {common.r_max, common.ells});
    auto rows = sweep(census, 11, p_max, common.jobs);
    for (const auto& r : rows) {
      const galrep::ReferenceRow* ref = galrep::reference_row(r.row.p);
      if (!ref) {
        std::cerr << "error: no reference row for p = " << r.row.p << "\n";
        return kExitVerifyFail;
      }
      bool match = r.row.L == ref->L && r.row.U == ref->U &&
                   r.row.exact == ref->star && r.row.ratio == ref->ratio;
      auto print_pair = [&](const char* tag) {
        std::cout << tag << " p=" << r.row.p << ": computed L=" << r.row.L
                  << (r.row.exact ? "*" : "") << " U=" << r.row.U
                  << " ratio=" << r.row.ratio << " | table L=" << ref->L
                  << (ref->star ? "*" : "") << " U=" << ref->U
                  << " ratio=" << ref->ratio << "\n";
      };
      if (match) {
        std::cout << "PASS p=" << r.row.p << " L=" << r.row.L
                  << (r.row.exact ? "*" : "") << " U=" << r.row.U
                  << " ratio=" << r.row.ratio << "\n";
        ++pass;
      } else if (galrep::is_annotated_discrepancy(r.row.p)) {
        print_pair("KNOWN-DISCREPANCY");
        ++known;
      } else {
        print_pair("FAIL");
        ++fail;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  std::cout << "verify: " << pass << " pass, " << known << " known-discrepancy, "
            << fail << " fail\n";
  return fail == 0 ? kExitOk : kExitVerifyFail;
}

int warm_command(const std::string& cache_dir, unsigned k_max, unsigned r_max) {
  if (cache_dir.empty()) {
    std::cerr << "error: cache-warm requires --cache DIR\n";
    return kExitUsage;
  }
  try {
    galrep::CharpolyCache cache(cache_dir);
    std::size_t written = cache.warm(k_max, r_max);
    std::cout << "wrote " << written << " cache entries\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of mod-p Hecke eigensystems: lower/upper bounds for the "
               "number of irreducible odd mod-p Galois representations of Q "
               "unramified outside p"};
  app.require_subcommand(1);

  CommonArgs common;
  std::uint64_t p_min = 11, p_max = 11;
  std::string out_path, format = "csv";
  unsigned k_max = 30, warm_r_max = 20;

  auto add_common = [&](CLI::App* cmd, bool with_jobs = true) {
    cmd->add_option("--r-max", common.r_max, "p-good search bound (r < r_max)");
    cmd->add_option("--ell", common.ells, "tame-bound primes")->delimiter(',');
    cmd->add_option("--cache", common.cache_dir, "charpoly cache directory");
    if (with_jobs) cmd->add_option("--jobs", common.jobs, "worker threads");
    cmd->add_flag("--long-run", common.long_run, "allow sweeps past the desk-scale gate");
  };

  CLI::App* run = app.add_subcommand("run", "sweep primes and emit census rows");
  run->add_option("--p-min", p_min, "first prime (>= 11)")->required();
  run->add_option("--p-max", p_max, "last prime")->required();
  run->add_option("--out", out_path, "output file (default stdout)");
  run->add_option("--format", format, "csv or json");
  add_common(run);

  CLI::App* verify = app.add_subcommand("verify", "compare against the published table");
  verify->add_option("--p-max", p_max, "verify rows for 11 <= p <= p-max")->required();
  add_common(verify);

  CLI::App* warm = app.add_subcommand("cache-warm", "precompute Hecke charpolys");
  warm->add_option("--k-max", k_max, "largest weight")->required();
  warm->add_option("--r-max", warm_r_max, "operator bound (n < r-max)")->required();
  warm->add_option("--cache", common.cache_dir, "cache directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (run->parsed()) return run_command(common, p_min, p_max, out_path, format);
  if (verify->parsed()) return verify_command(common, p_max);
  return warm_command(common.cache_dir, k_max, warm_r_max);
}
