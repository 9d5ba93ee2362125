// Command-line front-end: construct complementary sets, verify the defining
// correlation property, evaluate envelope-power peaks, run randomized
// parameter sweeps, and emit the bundled reference artifacts.

#include "gcs/construct.hpp"
#include "gcs/correlation.hpp"
#include "gcs/errors.hpp"
#include "gcs/io.hpp"
#include "gcs/kernels.hpp"
#include "gcs/pmepr.hpp"
#include "gcs/rng.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBound = 3;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view tok =
        rest.substr(0, comma == std::string_view::npos ? std::string_view::npos : comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument(what + ": '" + std::string(tok) +
                                  "' is not an integer");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

// Default output files land in GCS_OUTPUT_DIR when it is set; "-" selects
// standard output.
std::string resolve_output(const std::string& flag_value,
                           const std::string& default_name) {
  if (!flag_value.empty()) return flag_value;
  if (const char* dir = std::getenv("GCS_OUTPUT_DIR"); dir && *dir)
    return (std::filesystem::path(dir) / default_name).string();
  return default_name;
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  gcs::write_file(path, content);
}

std::vector<gcs::ComplexSequence> complex_rows(const gcs::GcsSet& set) {
  std::vector<gcs::ComplexSequence> out;
  out.reserve(set.members.size());
  for (const gcs::GcsSet::Member& mem : set.members) out.push_back(mem.cx);
  return out;
}

std::vector<gcs::ComplexSequence> complex_rows(const std::vector<gcs::ZqSequence>& rows) {
  std::vector<gcs::ComplexSequence> out;
  out.reserve(rows.size());
  for (const gcs::ZqSequence& row : rows) out.push_back(gcs::to_complex(row));
  return out;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateCfg {
  int p = 0, q = 0;
  std::uint64_t L = 0;
  std::string pi, g, c;
  std::optional<int> c_prime;
  std::optional<std::uint64_t> seed;
  double tol = -1.0;
  std::string output;
};

gcs::GcsParams generate_params(const GenerateCfg& cfg) {
  // Validates (p, q, L) up front so flag errors surface before any drawing.
  gcs::GcsParams base = gcs::GcsParams::defaults(cfg.p, cfg.q, cfg.L);
  if (cfg.seed) {
    std::mt19937_64 rng(gcs::splitmix64(*cfg.seed));
    base = gcs::random_params(cfg.p, cfg.q, cfg.L, rng);
  }
  const std::vector<int> pi =
      cfg.pi.empty() ? base.pi : parse_int_list(cfg.pi, "--pi");
  const gcs::Ebf g = cfg.g.empty()
                         ? base.g
                         : gcs::parse_anf(cfg.g, cfg.p, base.m - 1, cfg.q);
  const std::vector<int> c =
      cfg.c.empty() ? base.c : parse_int_list(cfg.c, "--c");
  const int c_prime = cfg.c_prime ? *cfg.c_prime : base.c_prime;
  return gcs::GcsParams::make(cfg.p, cfg.q, cfg.L, pi, g, c, c_prime);
}

int cmd_generate(const GenerateCfg& cfg) {
  const gcs::GcsParams params = generate_params(cfg);
  const gcs::GcsSet raw = gcs::build_gcs(params);
  const gcs::GcsSet set = gcs::dedupe(raw);

  const double tol = cfg.tol >= 0.0
                         ? cfg.tol
                         : gcs::default_tolerance(set.members.size(),
                                                  static_cast<std::size_t>(params.L));
  const gcs::GcsCheck check = gcs::is_gcs(complex_rows(set), tol);

  const std::string path = resolve_output(cfg.output, "gcs_set.json");
  emit(path, gcs::set_to_json(set));

  std::printf("(q, M, L) = (%d, %zu->%zu, %llu); verdict %s; "
              "max off-peak |AACF sum| = %.12g at tau=%lld (tolerance %.12g); "
              "wrote %s\n",
              params.q, raw.members.size(), set.members.size(),
              static_cast<unsigned long long>(params.L),
              check.ok ? "PASS" : "FAIL", check.worst_abs, check.worst_tau, tol,
              path.c_str());
  return check.ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// verify / pmepr input loading

struct InputCfg {
  std::string input;
  std::string format;  // "", "json", or "csv"
  int q = 0;
};

gcs::LoadedSet load_input(const InputCfg& cfg) {
  std::string format = cfg.format;
  if (format.empty()) {
    const std::filesystem::path p(cfg.input);
    std::string ext = p.extension().string();
    for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    format = ext == ".json" ? "json" : "csv";
  }
  const std::string text = gcs::read_file(cfg.input);
  if (format == "json") return gcs::load_set_json(text);
  if (cfg.q == 0)
    throw std::invalid_argument("--q is required for CSV input (the alphabet "
                                "size is not stored in the file)");
  return gcs::load_set_csv(text, cfg.q);
}

struct VerifyCfg {
  InputCfg in;
  double tol = -1.0;
};

int cmd_verify(const VerifyCfg& cfg) {
  const gcs::LoadedSet ls = load_input(cfg.in);
  const std::size_t L = ls.rows.front().size();
  const double tol = cfg.tol >= 0.0
                         ? cfg.tol
                         : gcs::default_tolerance(ls.rows.size(), L);
  const gcs::GcsCheck check = gcs::is_gcs(complex_rows(ls.rows), tol);
  std::printf("members %zu, length %zu; peak %.12g at tau=0; "
              "max off-peak |AACF sum| = %.12g at tau=%lld; tolerance %.12g; %s\n",
              ls.rows.size(), L, check.peak, check.worst_abs, check.worst_tau,
              tol, check.ok ? "PASS" : "FAIL");
  return check.ok ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// pmepr

struct PmeprCfg {
  InputCfg in;
  int oversampling = 64;
  std::string output;
};

int cmd_pmepr(const PmeprCfg& cfg) {
  const gcs::LoadedSet ls = load_input(cfg.in);
  const gcs::PmeprReport rep = gcs::pmepr_report_rows(ls.rows, cfg.oversampling);
  const std::string path = resolve_output(cfg.output, "pmepr.csv");
  emit(path, gcs::pmepr_csv(rep, ls.gammas));
  std::printf("members %zu; max PMEPR %.12g (member %zu); flock bound %.12g: %s; "
              "wrote %s\n",
              rep.values.size(), rep.max_value, rep.argmax, rep.bound,
              rep.within_bound ? "within bound" : "EXCEEDED", path.c_str());
  return rep.within_bound ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepCfg {
  std::string ps = "2,3,4,5";
  std::string q_mults = "1,2,3";
  std::uint64_t L_max = 200;
  std::uint64_t count = 200;
  std::uint64_t seed = 1;
  int oversampling = 64;
  std::optional<std::uint64_t> fix_L;
  std::string fix_pi, fix_g, fix_c;
  std::optional<int> fix_c_prime;
  std::string output;
};

int cmd_sweep(const SweepCfg& cfg) {
  gcs::SweepSpec spec;
  spec.ps = parse_int_list(cfg.ps, "--p");
  spec.q_mults = parse_int_list(cfg.q_mults, "--q-mult");
  spec.L_max = cfg.L_max;
  spec.fix_L = cfg.fix_L;
  if (!cfg.fix_pi.empty()) spec.fix_pi = parse_int_list(cfg.fix_pi, "--pi");
  if (!cfg.fix_g.empty()) spec.fix_g_anf = cfg.fix_g;
  if (!cfg.fix_c.empty()) spec.fix_c = parse_int_list(cfg.fix_c, "--c");
  spec.fix_c_prime = cfg.fix_c_prime;
  if (cfg.count < 1) throw std::invalid_argument("--count must be >= 1");

  std::string csv = "p,q,L,m,k,M,verdict,max_sidelobe,max_pmepr\n";
  std::size_t failures = 0, skipped = 0;
  char buf[256];
  for (std::uint64_t t = 0; t < cfg.count; ++t) {
    const gcs::SweepDraw d = gcs::draw_sweep(spec, cfg.seed, t);
    if (d.skipped) {
      std::snprintf(buf, sizeof buf, "%d,%d,%llu,,,,skipped: %s,,\n", d.p, d.q,
                    static_cast<unsigned long long>(d.L), d.skip_reason.c_str());
      csv += buf;
      ++skipped;
      continue;
    }
    const gcs::GcsSet set = gcs::dedupe(gcs::build_gcs(*d.params));
    const double tol = gcs::default_tolerance(set.members.size(),
                                              static_cast<std::size_t>(d.L));
    const gcs::GcsCheck check = gcs::is_gcs(complex_rows(set), tol);
    const gcs::PmeprReport rep = gcs::pmepr_report(set, cfg.oversampling);
    const bool ok = check.ok && rep.within_bound;
    failures += ok ? 0 : 1;
    std::snprintf(buf, sizeof buf, "%d,%d,%llu,%d,%d,%zu,%s,%.12g,%.12g\n", d.p,
                  d.q, static_cast<unsigned long long>(d.L), d.params->m,
                  d.params->k, set.members.size(), ok ? "pass" : "fail",
                  check.worst_abs, rep.max_value);
    csv += buf;
  }

  const std::string path = resolve_output(cfg.output, "sweep.csv");
  emit(path, csv);
  std::printf("sweep: %llu draws, %zu skipped, %zu failures; wrote %s\n",
              static_cast<unsigned long long>(cfg.count), skipped, failures,
              path.c_str());
  return failures == 0 ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// reproduce

// The bundled reference set: quaternary, length 19, flock 16, built from the
// seed function x1*x2 + 3*x1*x2*x3 with the constant offset fixed to 0.
gcs::GcsSet reference_set() {
  const gcs::GcsParams params = gcs::GcsParams::make(
      4, 4, 19, {1, 2}, gcs::parse_anf("3:1,1", 4, 2, 4), {0, 0, 0}, 0);
  return gcs::build_gcs(params);
}

struct ReproduceCfg {
  std::string target;
  std::string output;
};

int cmd_reproduce(const ReproduceCfg& cfg) {
  std::string content, default_name;
  if (cfg.target == "table1") {
    const gcs::GcsSet set = reference_set();
    std::vector<gcs::ZqSequence> rows;
    rows.reserve(set.members.size());
    for (const gcs::GcsSet::Member& mem : set.members) rows.push_back(mem.zq);
    content = gcs::matrix_csv(rows);
    default_name = "table1.csv";
  } else {  // fig1 (flag values are validated by the parser)
    content = gcs::profile_csv(gcs::aacf_sum(complex_rows(reference_set())));
    default_name = "fig1.csv";
  }
  const std::string path = resolve_output(cfg.output, default_name);
  emit(path, content);
  if (path != "-") std::printf("wrote %s\n", path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementary sequence set construction and verification"};
  app.require_subcommand(1);

  std::string kernel;
  app.add_option("--kernel", kernel,
                 "Force a compute backend (scalar, avx2, neon); default: "
                 "fastest available, or the GCS_KERNEL environment variable");

  GenerateCfg gen_cfg;
  CLI::App* gen = app.add_subcommand(
      "generate", "Construct a complementary set and write it as JSON");
  gen->add_option("--p", gen_cfg.p, "Alphabet base (variables range over Z_p)")
      ->required();
  gen->add_option("--q", gen_cfg.q, "Symbol modulus (must be a multiple of p)")
      ->required();
  gen->add_option("--L", gen_cfg.L, "Sequence length (>= p)")->required();
  gen->add_option("--pi", gen_cfg.pi,
                  "Comma list: images of 1..m-1 under the chain permutation "
                  "(default identity, or drawn when --seed is given)");
  gen->add_option("--g", gen_cfg.g,
                  "Product-term factor over the first m-1 variables, in ANF "
                  "text form 'coeff:e1,...,e(m-1);...'");
  gen->add_option("--c", gen_cfg.c, "Comma list: m linear coefficients");
  gen->add_option("--c-prime", gen_cfg.c_prime, "Constant offset in [0, q)");
  gen->add_option("--seed", gen_cfg.seed,
                  "Draw unset free parameters (pi, g, c, c-prime) from this seed");
  gen->add_option("--tol", gen_cfg.tol,
                  "Verification tolerance (default 1e-9 * members * L)");
  gen->add_option("-o,--output", gen_cfg.output,
                  "Output path (default gcs_set.json; '-' for stdout)");

  VerifyCfg ver_cfg;
  CLI::App* ver = app.add_subcommand(
      "verify", "Check the complementarity property of a stored set");
  ver->add_option("input", ver_cfg.in.input, "JSON or CSV set file")->required();
  ver->add_option("--format", ver_cfg.in.format, "Input format")
      ->check(CLI::IsMember({"json", "csv"}));
  ver->add_option("--q", ver_cfg.in.q, "Alphabet size (required for CSV input)");
  ver->add_option("--tol", ver_cfg.tol,
                  "Zero-test tolerance (default 1e-9 * members * L)");

  PmeprCfg pm_cfg;
  CLI::App* pm = app.add_subcommand(
      "pmepr", "Per-member envelope-power peaks of a stored set");
  pm->add_option("input", pm_cfg.in.input, "JSON or CSV set file")->required();
  pm->add_option("--format", pm_cfg.in.format, "Input format")
      ->check(CLI::IsMember({"json", "csv"}));
  pm->add_option("--q", pm_cfg.in.q, "Alphabet size (required for CSV input)");
  pm->add_option("--oversampling", pm_cfg.oversampling,
                 "Grid points per subcarrier spacing (default 64)")
      ->check(CLI::PositiveNumber);
  pm->add_option("-o,--output", pm_cfg.output,
                 "Output CSV path (default pmepr.csv; '-' for stdout)");

  SweepCfg sw_cfg;
  CLI::App* sw = app.add_subcommand(
      "sweep", "Randomized parameter sweep: construct, verify, and bound-check "
               "many sets");
  sw->add_option("--p", sw_cfg.ps, "Comma list of alphabet bases (default 2,3,4,5)");
  sw->add_option("--q-mult", sw_cfg.q_mults,
                 "Comma list of q/p multipliers (default 1,2,3)");
  sw->add_option("--L-max", sw_cfg.L_max, "Largest length to draw (default 200)");
  sw->add_option("--count", sw_cfg.count, "Number of draws (default 200)");
  sw->add_option("--seed", sw_cfg.seed, "Sweep seed (default 1)");
  sw->add_option("--oversampling", sw_cfg.oversampling,
                 "Envelope grid density (default 64)")
      ->check(CLI::PositiveNumber);
  sw->add_option("--L", sw_cfg.fix_L, "Fix the length instead of drawing it");
  sw->add_option("--pi", sw_cfg.fix_pi, "Fix the permutation instead of drawing it");
  sw->add_option("--g", sw_cfg.fix_g, "Fix the product-term factor (ANF text)");
  sw->add_option("--c", sw_cfg.fix_c, "Fix the linear coefficients");
  sw->add_option("--c-prime", sw_cfg.fix_c_prime, "Fix the constant offset");
  sw->add_option("-o,--output", sw_cfg.output,
                 "Output CSV path (default sweep.csv; '-' for stdout)");

  ReproduceCfg rep_cfg;
  CLI::App* rep = app.add_subcommand(
      "reproduce", "Emit a bundled reference artifact byte-for-byte");
  rep->add_option("--target", rep_cfg.target,
                  "table1 (reference 16x19 matrix) or fig1 (its correlation "
                  "profile)")
      ->required()
      ->check(CLI::IsMember({"table1", "fig1"}));
  rep->add_option("-o,--output", rep_cfg.output,
                  "Output path (default <target>.csv; '-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // help/version exit cleanly
  }

  try {
    if (!kernel.empty() && !gcs::kernels::force(kernel)) {
      std::cerr << "error: kernel '" << kernel
                << "' is unknown or unavailable on this machine; available:";
      for (const gcs::kernels::Backend* b : gcs::kernels::available())
        std::cerr << ' ' << b->name;
      std::cerr << '\n';
      return kExitUsage;
    }
    if (gen->parsed()) return cmd_generate(gen_cfg);
    if (ver->parsed()) return cmd_verify(ver_cfg);
    if (pm->parsed()) return cmd_pmepr(pm_cfg);
    if (sw->parsed()) return cmd_sweep(sw_cfg);
    if (rep->parsed()) return cmd_reproduce(rep_cfg);
  } catch (const gcs::BoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const gcs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
