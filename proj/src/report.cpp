#include "fqpts/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fqpts/error.hpp"

namespace fqpts {

namespace {

std::string format_tuple(const Field& f, const std::vector<std::vector<FieldElement>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i ? " (" : "(";
    for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? "," : "") + f.format(rows[i][j]);
    out += ")";
  }
  return out;
}

std::string rhs_text(const std::optional<SurdSum>& rhs) { return rhs ? format_real12(rhs->approx()) : ""; }

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string bounds_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "estimate,rhs,applicable,condition\n";
  for (const auto& row : report.rows) {
    out << row.name << ',' << rhs_text(row.rhs) << ',' << bool_text(row.applicable) << ','
        << csv_field(row.condition) << '\n';
  }
  return out.str();
}

std::string scan_csv(const VarietyDescriptor& v, const ScanReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  out << "mode," << (r.mode == ScanMode::Affine ? "affine" : "projective") << '\n';
  out << "q," << r.q << '\n';
  out << "n," << r.n << '\n';
  out << "r," << r.r << '\n';
  out << "s," << r.s << '\n';
  out << "max_ext," << r.max_ext << '\n';
  out << "total," << r.total << '\n';
  out << "pass," << r.pass << '\n';
  out << "fail," << r.fail << '\n';
  out << "degenerate," << r.degenerate << '\n';
  out << "hooley_pass," << r.hooley_pass << '\n';
  out << "bertini_degree," << r.bertini_degree << '\n';
  out << "floor," << r.floor << '\n';
  out << "floor_applicable," << bool_text(r.floor_applicable) << '\n';
  out << "eta_ceiling," << r.eta_ceiling << '\n';
  out << "proxy_note,"
      << csv_field("rank checked at F_{q^e}-points for e <= " + std::to_string(r.max_ext) +
                   "; pure dimension of sections not verified")
      << '\n';
  for (std::size_t i = 0; i < r.fail_witnesses.size(); ++i) {
    const auto& w = r.fail_witnesses[i];
    const Field f = w.witness_ext <= 1 ? v.field : v.field.extension(w.witness_ext);
    std::string text = "gamma=" + format_tuple(v.field, w.gamma.gamma);
    if (w.witness) text += " at " + format_tuple(f, {w.witness->coords}) + " over e=" + std::to_string(w.witness_ext);
    out << "fail_witness_" << (i + 1) << ',' << csv_field(text) << '\n';
  }
  return out.str();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::NotApplicable:
      return "N-A";
  }
  return "";
}

bool VerifyReport::all_pass() const {
  return trivial_ok && std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.verdict == Verdict::Fail; });
}

VerifyReport verify_estimates(const VarietyDescriptor& v, std::optional<int> s, std::optional<BigInt> betti,
                              unsigned workers) {
  VerifyReport rep;
  rep.bounds = estimate_suite(bound_inputs(v, s, std::move(betti)));
  rep.point_count = count_points(v, 1, workers);
  rep.p_r = projective_count(v.q(), v.dim);
  rep.deviation = abs(BigInt(rep.point_count) - rep.p_r);
  rep.trivial_ok = BigInt(rep.point_count) <= rep.bounds.trivial_projective;
  for (const auto& row : rep.bounds.rows) {
    VerifyRow out{row.name, row.rhs, row.applicable, Verdict::NotApplicable};
    if (row.applicable && row.rhs) out.verdict = row.rhs->bounds(rep.deviation) ? Verdict::Pass : Verdict::Fail;
    rep.rows.push_back(std::move(out));
  }
  return rep;
}

std::string verify_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "estimate,deviation,rhs,rhs_ceil,applicable,verdict\n";
  for (const auto& row : report.rows) {
    out << row.name << ',' << report.deviation << ',' << rhs_text(row.rhs) << ','
        << (row.rhs ? row.rhs->ceil().str() : "") << ',' << bool_text(row.applicable) << ',' << to_string(row.verdict)
        << '\n';
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

}  // namespace fqpts
