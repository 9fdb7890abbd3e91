// compositum: command-line front end.
//
// Exit codes
//   0  success
//   1  usage error or input rejected by a precondition
//   2  parse error (malformed group spec, cycle or field file)
//   3  a size cap was exceeded
//   4  field not totally real, or an element not totally positive
//   5  internal error (including a Schur check reported as Violated)

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compositum/bounds.hpp"
#include "compositum/diagonal.hpp"
#include "compositum/error.hpp"
#include "compositum/galois_bridge.hpp"
#include "compositum/io.hpp"
#include "compositum/reports.hpp"

namespace {

using namespace compositum;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCap = 3,
  kNotPositive = 4,
  kInternal = 5,
};

struct RunConfig {
  unsigned precision = kDefaultPrecision;
  Caps caps;
  std::string format = "text";
  bool assert_irreducible = false;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidPermutation:
      return kParse;
    case ErrorKind::CapExceeded:
      return kCap;
    case ErrorKind::FieldNotTotallyReal:
    case ErrorKind::NotTotallyPositive:
      return kNotPositive;
    case ErrorKind::Internal:
      return kInternal;
    default:
      return kUsage;
  }
}

template <class Report>
void emit(const RunConfig& cfg, const Report& r) {
  if (cfg.format == "structured") {
    std::cout << to_structured(r);
  } else {
    std::cout << to_text(r);
  }
}

// Groups from one or more files, concatenated in order.
std::vector<PermGroup> load_groups(const std::vector<std::string>& paths, std::size_t want,
                                   const Caps& caps) {
  std::vector<PermGroup> all;
  for (const auto& p : paths) {
    auto gs = read_group_file(p, caps);
    all.insert(all.end(), gs.begin(), gs.end());
  }
  if (all.size() != want) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(want) + " groups, found " +
                                    std::to_string(all.size()));
  }
  return all;
}

int cmd_diagonal(const RunConfig& cfg, const std::vector<std::string>& files) {
  const auto g = load_groups(files, 4, cfg.caps);
  const DiagonalInstance inst(g[0], g[1], g[2], g[3], cfg.caps);
  emit(cfg, decide(inst));
  return kOk;
}

int cmd_bound(const RunConfig& cfg, const std::string& file, unsigned k) {
  const FieldFile f = read_field_file(file, cfg.assert_irreducible);
  const BoundReport r = capital_C(f.field, k, f.values(), cfg.precision);
  emit(cfg, r);
  return kOk;
}

int cmd_check(const RunConfig& cfg, const std::string& file, std::uint64_t ell,
              const HypothesisFlags& flags, bool allow_core) {
  const auto g = load_groups({file}, 2, cfg.caps);
  const GaloisDatum k(g[0], g[1], allow_core);
  emit(cfg, check_theorem_hypotheses(k, ell, flags, cfg.caps));
  return kOk;
}

int cmd_field(const RunConfig& cfg, const std::string& file, const std::string& against) {
  const FieldFile f = read_field_file(file, cfg.assert_irreducible);
  FieldReport r;
  if (against.empty()) {
    r = field_report(f, cfg.precision);
  } else {
    const FieldFile other = read_field_file(against, cfg.assert_irreducible);
    r = field_report(f, cfg.precision, &other);
  }
  emit(cfg, r);
  for (const auto& e : r.elements) {
    if (e.schur && e.schur->verdict == SchurVerdict::Violated) return kInternal;
  }
  return kOk;
}

int cmd_goursat(const RunConfig& cfg, const std::vector<std::string>& files, bool all) {
  const auto g = load_groups(files, 2, cfg.caps);
  emit(cfg, goursat_report(g[0], g[1], all, cfg.caps));
  return kOk;
}

int cmd_bridge(const RunConfig& cfg, const std::string& kfile, const std::string& lfile,
               bool allow_core) {
  const auto kg = load_groups({kfile}, 2, cfg.caps);
  const auto lg = load_groups({lfile}, 2, cfg.caps);
  const GaloisDatum k(kg[0], kg[1], allow_core);
  const GaloisDatum l(lg[0], lg[1], allow_core);
  emit(cfg, bridge_report(k, l, cfg.caps));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal subgroups of products and discriminant bounds for composite fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "interval precision in bits")
      ->check(CLI::Range(16u, 1u << 16))
      ->capture_default_str();
  app.add_option("--cap-closure", cfg.caps.closure, "largest group order built by closure")
      ->capture_default_str();
  app.add_option("--cap-subgroups", cfg.caps.subgroups, "largest group whose lattice is enumerated")
      ->capture_default_str();
  app.add_option("--cap-iso", cfg.caps.iso, "largest group order for isomorphism search")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_flag("--assert-irreducible", cfg.assert_irreducible,
               "accept minimal polynomials whose irreducibility is not proven");

  std::vector<std::string> diag_files;
  auto* diag = app.add_subcommand("diagonal", "decide whether S x U <= G <= T x V has a diagonal G");
  diag->add_option("files", diag_files, "group files holding S, T, U, V in order")
      ->required()
      ->check(CLI::ExistingFile);

  std::string bound_file;
  unsigned bound_k = 0;
  auto* bound = app.add_subcommand("bound", "certified interval for the discriminant bound C(L,k)");
  bound->add_option("field", bound_file, "field spec (JSON)")->required()->check(CLI::ExistingFile);
  bound->add_option("-k,--k", bound_k, "degree k >= 2")->required();

  std::string check_file;
  std::uint64_t check_ell = 0;
  std::string disc_ok = "unknown", coprime_ok = "unknown";
  bool check_core = false;
  auto* check = app.add_subcommand("check", "hypothesis checker for a group datum (T then S)");
  check->add_option("group", check_file, "group file holding T then S")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--ell", check_ell, "degree of L")->required()->check(CLI::PositiveNumber);
  check->add_option("--disc-bound-ok", disc_ok, "condition (i)")
      ->check(CLI::IsMember({"yes", "no", "unknown"}))
      ->capture_default_str();
  check->add_option("--coprime-ok", coprime_ok, "condition (ii)")
      ->check(CLI::IsMember({"yes", "no", "unknown"}))
      ->capture_default_str();
  check->add_flag("--allow-core", check_core, "accept a stabilizer with nontrivial core");

  std::string field_file, field_against;
  auto* field = app.add_subcommand("field", "traces, norms, discriminants and total positivity");
  field->add_option("field", field_file, "field spec (JSON)")->required()->check(CLI::ExistingFile);
  field->add_option("--against", field_against, "second field for the coprimality check")
      ->check(CLI::ExistingFile);

  std::vector<std::string> gour_files;
  bool gour_all = false;
  auto* gour = app.add_subcommand("goursat", "subgroups of A x B via Goursat quintuples");
  gour->add_option("files", gour_files, "group files holding A, B in order")
      ->required()
      ->check(CLI::ExistingFile);
  gour->add_flag("--all", gour_all, "list every quintuple");

  std::string bridge_k, bridge_l;
  bool bridge_core = false;
  auto* bridge = app.add_subcommand("bridge", "classify the subfields of the compositum");
  bridge->add_option("k", bridge_k, "group file for K: T then S")
      ->required()
      ->check(CLI::ExistingFile);
  bridge->add_option("l", bridge_l, "group file for L: V then U")
      ->required()
      ->check(CLI::ExistingFile);
  bridge->add_flag("--allow-core", bridge_core, "accept stabilizers with nontrivial core");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*diag) return cmd_diagonal(cfg, diag_files);
    if (*bound) return cmd_bound(cfg, bound_file, bound_k);
    if (*check) {
      const HypothesisFlags flags{parse_tri(disc_ok), parse_tri(coprime_ok)};
      return cmd_check(cfg, check_file, check_ell, flags, check_core);
    }
    if (*field) return cmd_field(cfg, field_file, field_against);
    if (*gour) return cmd_goursat(cfg, gour_files, gour_all);
    if (*bridge) return cmd_bridge(cfg, bridge_k, bridge_l, bridge_core);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
