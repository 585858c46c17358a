#include "nanobeam/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "nanobeam/error.hpp"

namespace nanobeam {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7e", v);
  return buf;
}

double rounded(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v).c_str(), nullptr);
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw InvalidParameter("table row width mismatch");
  rows.push_back(std::move(row));
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Provenance make_provenance(const nlohmann::json& config, std::uint64_t seed, std::string command) {
  // nlohmann::json objects are key-sorted, so dump() is canonical.
  return {fnv1a_hex(config.dump()), seed, NANOBEAM_VERSION, std::move(command)};
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "both") return OutputFormat::Both;
  throw InvalidParameter("unknown output format '" + s + "'");
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return rounded(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& t, const Provenance& p) {
  std::ostringstream os;
  os << "# nanobeam " << p.version << "\n";
  os << "# command " << p.command << "\n";
  os << "# config_hash " << p.config_hash << "\n";
  os << "# seed " << p.seed << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const Table& t, const Provenance& p) {
  nlohmann::json j;
  j["meta"] = {{"version", p.version},
               {"command", p.command},
               {"config_hash", p.config_hash},
               {"seed", p.seed}};
  j["columns"] = t.columns;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
    j["rows"].push_back(std::move(r));
  }
  return j;
}

std::vector<std::filesystem::path> write_table(const std::filesystem::path& dir,
                                               const std::string& stem, const Table& t,
                                               const Provenance& p, OutputFormat fmt) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto dump = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << text;
    written.push_back(path);
  };
  if (fmt != OutputFormat::Json) dump(dir / (stem + ".csv"), to_csv(t, p));
  if (fmt != OutputFormat::Csv) dump(dir / (stem + ".json"), to_json(t, p).dump(2) + "\n");
  return written;
}

std::string svg_line_plot(const std::vector<double>& x, const std::vector<std::vector<double>>& ys,
                          const std::string& title, const std::string& x_label) {
  constexpr double W = 640, H = 400, pad = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const double v : x) x0 = std::min(x0, v), x1 = std::max(x1, v);
  for (const auto& y : ys) {
    for (const double v : y) {
      if (std::isfinite(v)) y0 = std::min(y0, v), y1 = std::max(y1, v);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">" << x_label
     << "</text>\n";
  os << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad << "\" height=\""
     << H - 2 * pad << "\" fill=\"none\" stroke=\"black\"/>\n";
  const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (std::size_t k = 0; k < ys.size(); ++k) {
    os << "<polyline fill=\"none\" stroke=\"" << colours[k % 4] << "\" points=\"";
    for (std::size_t i = 0; i < x.size() && i < ys[k].size(); ++i) {
      if (!std::isfinite(ys[k][i])) continue;
      const double px = pad + (x[i] - x0) / (x1 - x0) * (W - 2 * pad);
      const double py = H - pad - (ys[k][i] - y0) / (y1 - y0) * (H - 2 * pad);
      os << px << "," << py << " ";
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace nanobeam
