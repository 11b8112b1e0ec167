#include <charconv>
#include <fstream>
#include <sstream>

#include "fqpts/error.hpp"
#include "fqpts/variety.hpp"

namespace fqpts {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

long long parse_int(std::string_view s, std::size_t line, std::string_view key) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    parse_fail(line, "'" + std::string(key) + "' expects an integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

VarietyDescriptor parse_variety(std::string_view text) {
  enum class Section { None, Field, Variety } section = Section::None;
  std::optional<long long> p, k, nvars, dim, singdim;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<std::pair<std::size_t, std::string>> polys;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "[field]") {
      section = Section::Field;
      continue;
    }
    if (line == "[variety]") {
      section = Section::Variety;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(line_no, "expected 'key = value' or a section header");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (section == Section::Field) {
      if (key == "p") p = parse_int(value, line_no, key);
      else if (key == "k") k = parse_int(value, line_no, key);
      else if (key == "mod") {
        std::vector<std::uint32_t> coeffs;
        std::string_view rest = value;
        while (true) {
          const auto comma = rest.find(',');
          const auto c = parse_int(trim(rest.substr(0, comma)), line_no, key);
          if (c < 0) parse_fail(line_no, "negative modulus coefficient");
          coeffs.push_back(static_cast<std::uint32_t>(c));
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
        modulus = std::move(coeffs);
      } else {
        parse_fail(line_no, "unknown [field] key '" + std::string(key) + "'");
      }
    } else if (section == Section::Variety) {
      if (key == "nvars") nvars = parse_int(value, line_no, key);
      else if (key == "dim") dim = parse_int(value, line_no, key);
      else if (key == "singdim") singdim = parse_int(value, line_no, key);
      else if (key == "poly") polys.emplace_back(line_no, std::string(value));
      else parse_fail(line_no, "unknown [variety] key '" + std::string(key) + "'");
    } else {
      parse_fail(line_no, "key outside of a section");
    }
  }
  if (!p) parse_fail(line_no, "missing 'p' in [field]");
  if (!nvars || !dim || !singdim) parse_fail(line_no, "[variety] needs nvars, dim and singdim");
  if (*p < 2 || k.value_or(1) < 1 || *nvars < 1) parse_fail(line_no, "p, k and nvars must be positive");
  if (*k > 64 || *nvars > 64) parse_fail(line_no, "k and nvars must be at most 64");

  const Field field = Field::make(static_cast<std::uint64_t>(*p), static_cast<unsigned>(k.value_or(1)), modulus);
  std::vector<SparsePolynomial> generators;
  for (const auto& [at, src] : polys) {
    try {
      generators.push_back(parse_poly(src, static_cast<std::size_t>(*nvars), field));
    } catch (const Error& e) {
      parse_fail(at, e.what());
    }
  }
  return make_variety(field, static_cast<std::size_t>(*nvars), std::move(generators), static_cast<int>(*dim),
                      static_cast<int>(*singdim));
}

VarietyDescriptor load_variety(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_variety(buf.str());
}

std::string format_variety(const VarietyDescriptor& v) {
  std::ostringstream out;
  out << "[field]\n";
  out << "p = " << v.field.characteristic() << "\n";
  out << "k = " << v.field.degree() << "\n";
  if (v.field.degree() > 1) {
    out << "mod = ";
    const auto& m = v.field.modulus();
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
    out << "\n";
  }
  out << "[variety]\n";
  out << "nvars = " << v.nvars << "\n";
  out << "dim = " << v.dim << "\n";
  out << "singdim = " << v.sing_dim << "\n";
  for (const auto& g : v.generators) out << "poly = " << g.format() << "\n";
  return out.str();
}

}  // namespace fqpts
