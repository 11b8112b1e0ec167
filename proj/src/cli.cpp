#include "fqpts/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fqpts/bounds.hpp"
#include "fqpts/error.hpp"
#include "fqpts/report.hpp"
#include "fqpts/sections.hpp"
#include "fqpts/variety.hpp"

namespace fqpts {

namespace {

struct Options {
  std::string file;
  unsigned ext = 1;
  unsigned workers = 1;
  std::optional<int> s;
  std::optional<std::string> betti;
  std::optional<std::string> output;
  std::string mode = "affine";
  std::uint64_t q = 0;
  std::vector<std::uint64_t> d;
  std::vector<std::uint64_t> n;
};

std::optional<BigInt> parse_betti(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  if (text->empty() || !std::all_of(text->begin(), text->end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::InvalidInput, "--betti expects a nonnegative integer, got '" + *text + "'");
  }
  return BigInt(*text);
}

void emit(const Options& o, const std::string& csv, std::ostream& out) {
  if (o.output) write_file(*o.output, csv);
  else out << csv;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const auto v = load_variety(o.file);
  const auto n = count_points(v, o.ext, o.workers);
  if (auto warning = dimension_drift_warning(v, o.ext, n)) err << *warning << '\n';
  out << n << '\n';
  return 0;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto v = load_variety(o.file);
  emit(o, bounds_csv(estimate_suite(bound_inputs(v, o.s, parse_betti(o.betti)))), out);
  return 0;
}

int cmd_second_moment(const Options& o, std::ostream& out) {
  const auto v = load_variety(o.file);
  const auto m = second_moment(v, *o.s, o.workers);
  out << "computed=" << m.computed << " lemma=" << m.lemma_value << ' ' << (m.equal ? "EQUAL" : "DIFFER") << '\n';
  return m.equal ? 0 : 1;
}

int cmd_hooley_census(const Options& o, std::ostream& out) {
  const auto v = load_variety(o.file);
  const auto c = hooley_condition_census(v, *o.s, o.workers);
  out << "satisfying=" << c.satisfying << " total=" << c.total << ' ' << (c.half_mass ? "HALF_MASS" : "NO_HALF_MASS")
      << '\n';
  return c.half_mass ? 0 : 1;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto v = load_variety(o.file);
  const ScanMode mode = o.mode == "projective" ? ScanMode::Projective : ScanMode::Affine;
  const auto rep = bertini_scan(v, o.s, o.ext, mode, o.workers);
  emit(o, scan_csv(v, rep), out);
  bool ok = true;
  if (rep.floor_applicable && BigInt(rep.pass) < rep.floor) {
    err << "FAIL: pass count " << rep.pass << " below floor " << rep.floor << '\n';
    ok = false;
  }
  if (BigInt(rep.fail) > rep.eta_ceiling) {
    err << "FAIL: fail count " << rep.fail << " above ceiling " << rep.eta_ceiling << '\n';
    ok = false;
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto v = load_variety(o.file);
  const auto rep = verify_estimates(v, o.s, parse_betti(o.betti), o.workers);
  emit(o, verify_csv(rep), out);
  err << "trivial: N=" << rep.point_count << " <= delta*p_r=" << rep.bounds.trivial_projective << ' '
      << (rep.trivial_ok ? "PASS" : "FAIL") << '\n';
  return rep.all_pass() ? 0 : 1;
}

int cmd_eta(const Options& o, std::ostream& out) {
  if (o.q < 2) throw Error(ErrorCode::InvalidInput, "--q must be at least 2");
  out << eta(o.q, o.d, o.n) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational point counts and estimates for complete intersections over finite fields", "fqpts"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Variety file")->required(); };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* count = app.add_subcommand("count", "Count |V(F_{q^e})|");
  add_file(count);
  count->add_option("--ext", o.ext, "Extension degree e")->check(CLI::Range(1u, 64u));
  add_workers(count);

  auto* bounds = app.add_subcommand("bounds", "Emit the estimate table as CSV");
  add_file(bounds);
  bounds->add_option("--s", o.s, "Singular locus dimension override");
  bounds->add_option("--betti", o.betti, "Primitive Betti number b'_{r-s-1}");
  bounds->add_option("--output", o.output, "CSV path (default stdout)");

  auto* moment = app.add_subcommand("second-moment", "Exact second moment of section counts");
  add_file(moment);
  moment->add_option("--s", o.s, "Sections cut by s+1 covectors")->required();
  add_workers(moment);

  auto* census = app.add_subcommand("hooley-census", "Count tuples satisfying the second-moment condition");
  add_file(census);
  census->add_option("--s", o.s, "Sections cut by s+1 covectors")->required();
  add_workers(census);

  auto* scan = app.add_subcommand("bertini-scan", "Classify every linear section");
  add_file(scan);
  scan->add_option("--s", o.s, "Sections cut by s+1 covectors");
  scan->add_option("--ext", o.ext, "Check ranks over F_{q^e} for e <= E")->check(CLI::Range(1u, 64u));
  scan->add_option("--mode", o.mode, "affine or projective")->check(CLI::IsMember({"affine", "projective"}));
  add_workers(scan);
  scan->add_option("--output", o.output, "CSV path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check |N - p_r| against every estimate");
  add_file(verify);
  verify->add_option("--s", o.s, "Singular locus dimension override");
  verify->add_option("--betti", o.betti, "Primitive Betti number b'_{r-s-1}");
  verify->add_option("--output", o.output, "CSV path (default stdout)");
  add_workers(verify);

  auto* eta_cmd = app.add_subcommand("eta", "Evaluate eta_m(d, n)");
  eta_cmd->add_option("--q", o.q, "Field order")->required();
  eta_cmd->add_option("--d", o.d, "Comma separated degrees")->required()->delimiter(',');
  eta_cmd->add_option("--n", o.n, "Comma separated group dimensions")->required()->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(o, out, err);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (moment->parsed()) return cmd_second_moment(o, out);
    if (census->parsed()) return cmd_hooley_census(o, out);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (eta_cmd->parsed()) return cmd_eta(o, out);
  } catch (const Error& e) {
    err << "fqpts: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "fqpts: internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fqpts
