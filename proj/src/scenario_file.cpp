#include "diffscatter/scenario_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace diffscatter {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>>& known_keys() {
  static const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> keys{
      {"source", {"position", "power_dbm", "gain"}},
      {"surface", {"endpoint_a", "endpoint_b", "diffusing_coefficient"}},
      {"tag", {"position", "gain"}},
      {"reader", {"gain", "position", "x_range", "y_range", "z", "nx", "ny"}},
      {"radio", {"frequency_hz", "noise_dbm"}},
      {"model", {"amplitude_variant", "db_convention"}},
  };
  return keys;
}

class Parser {
 public:
  explicit Parser(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(int line, const std::string& message) const {
    throw ScenarioParseError(origin_, line, message);
  }

  std::map<std::string, Section, std::less<>> read(std::string_view text) {
    std::map<std::string, Section, std::less<>> sections;
    Section* current = nullptr;
    std::string current_name;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.front() == '[') {
        if (line.back() != ']') {
          fail(line_no, "malformed section header '" + std::string(line) + "'");
        }
        current_name = std::string(trim(line.substr(1, line.size() - 2)));
        if (!known_keys().contains(current_name)) {
          fail(line_no, "unknown section [" + current_name + "]");
        }
        if (sections.contains(current_name)) {
          fail(line_no, "duplicate section [" + current_name + "]");
        }
        current = &sections[current_name];
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        fail(line_no, "expected 'key = value', got '" + std::string(line) + "'");
      }
      if (current == nullptr) {
        fail(line_no, "key outside of any section");
      }
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (!known_keys().find(current_name)->second.contains(key)) {
        fail(line_no, "unknown key '" + key + "' in section [" + current_name + "]");
      }
      if (value.empty()) {
        fail(line_no, "empty value for key '" + key + "'");
      }
      if (current->contains(key)) {
        fail(line_no, "duplicate key '" + key + "' in section [" + current_name + "]");
      }
      (*current)[key] = Entry{value, line_no};
    }
    return sections;
  }

  double number(std::string_view text, int line) const {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
      text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
      fail(line, "expected a finite number, got '" + std::string(text) + "'");
    }
    return value;
  }

  double number(const Entry& entry) const { return number(entry.value, entry.line); }

  std::vector<double> numbers(const Entry& entry) const {
    std::vector<double> out;
    std::string_view rest = entry.value;
    while (true) {
      const auto comma = rest.find(',');
      out.push_back(number(rest.substr(0, comma), entry.line));
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
    }
    return out;
  }

  std::vector<double> numbers(const Entry& entry, std::size_t expected) const {
    auto out = numbers(entry);
    if (out.size() != expected) {
      fail(entry.line, "expected " + std::to_string(expected) + " comma-separated numbers, got " +
                           std::to_string(out.size()));
    }
    return out;
  }

  Point3 point(const Entry& entry) const {
    const auto v = numbers(entry, 3);
    return {v[0], v[1], v[2]};
  }

  std::int64_t integer(const Entry& entry) const {
    const std::string_view text = trim(entry.value);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      fail(entry.line, "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
  }

  const Entry& required(const std::map<std::string, Section, std::less<>>& sections,
                        std::string_view section, std::string_view key) const {
    const auto s = sections.find(section);
    if (s != sections.end()) {
      if (const auto k = s->second.find(key); k != s->second.end()) {
        return k->second;
      }
    }
    fail(0, "missing required key '" + std::string(key) + "' in section [" + std::string(section) +
                "]");
  }

  static const Entry* optional(const std::map<std::string, Section, std::less<>>& sections,
                               std::string_view section, std::string_view key) {
    const auto s = sections.find(section);
    if (s == sections.end()) {
      return nullptr;
    }
    const auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

 private:
  std::string origin_;
};

}  // namespace

ScenarioParseError::ScenarioParseError(const std::string& origin, int line,
                                       const std::string& message)
    : std::runtime_error(line > 0 ? origin + ":" + std::to_string(line) + ": " + message
                                  : origin + ": " + message),
      line_(line) {}

Scenario ScenarioFile::scenario(double frequency_hz) const {
  Scenario s;
  s.source = source;
  s.surface_a = surface_a;
  s.surface_b = surface_b;
  s.tag = tag;
  s.frequency_hz = frequency_hz;
  s.transmit_power_w = dbm_to_watts(power_dbm);
  s.gain_source = gain_source;
  s.gain_reader = gain_reader;
  s.gain_tag = gain_tag;
  s.diffusing_coefficient = diffusing_coefficient;
  s.noise_power_w = dbm_to_watts(noise_dbm);
  return s;
}

std::optional<AmplitudeVariant> parse_variant(std::string_view text) {
  if (text == "paper-bound") return AmplitudeVariant::PaperBound;
  if (text == "exact-integral") return AmplitudeVariant::ExactIntegral;
  return std::nullopt;
}

std::optional<DbConvention> parse_db_convention(std::string_view text) {
  if (text == "power20") return DbConvention::Power20;
  if (text == "power10") return DbConvention::Power10;
  return std::nullopt;
}

ScenarioFile parse_scenario(std::string_view text, const std::string& origin) {
  Parser p(origin);
  const auto sections = p.read(text);
  ScenarioFile f;

  f.source = p.point(p.required(sections, "source", "position"));
  f.power_dbm = p.number(p.required(sections, "source", "power_dbm"));
  f.surface_a = p.point(p.required(sections, "surface", "endpoint_a"));
  f.surface_b = p.point(p.required(sections, "surface", "endpoint_b"));
  f.tag = p.point(p.required(sections, "tag", "position"));
  f.frequencies_hz = p.numbers(p.required(sections, "radio", "frequency_hz"));
  f.noise_dbm = p.number(p.required(sections, "radio", "noise_dbm"));

  auto scalar = [&](std::string_view section, std::string_view key, double& target) {
    if (const Entry* e = Parser::optional(sections, section, key)) {
      target = p.number(*e);
      if (target < 0.0) {
        p.fail(e->line, "'" + std::string(key) + "' must be >= 0");
      }
    }
  };
  scalar("source", "gain", f.gain_source);
  scalar("surface", "diffusing_coefficient", f.diffusing_coefficient);
  scalar("tag", "gain", f.gain_tag);
  scalar("reader", "gain", f.gain_reader);

  for (double freq : f.frequencies_hz) {
    if (!(freq > 0.0)) {
      p.fail(p.required(sections, "radio", "frequency_hz").line,
             "frequencies must be > 0 Hz");
    }
  }

  if (const Entry* e = Parser::optional(sections, "reader", "position")) {
    f.reader_position = p.point(*e);
  }
  const Entry* x_range = Parser::optional(sections, "reader", "x_range");
  const Entry* y_range = Parser::optional(sections, "reader", "y_range");
  const Entry* z = Parser::optional(sections, "reader", "z");
  const Entry* nx = Parser::optional(sections, "reader", "nx");
  const Entry* ny = Parser::optional(sections, "reader", "ny");
  const int grid_keys = (x_range != nullptr) + (y_range != nullptr) + (z != nullptr) +
                        (nx != nullptr) + (ny != nullptr);
  if (grid_keys != 0 && grid_keys != 5) {
    p.fail(0, "reader grid needs all of x_range, y_range, z, nx, ny");
  }
  if (grid_keys == 5) {
    GridSpec g;
    const auto xr = p.numbers(*x_range, 2);
    const auto yr = p.numbers(*y_range, 2);
    g.x_min = xr[0];
    g.x_max = xr[1];
    g.y_min = yr[0];
    g.y_max = yr[1];
    g.z = p.number(*z);
    g.nx = p.integer(*nx);
    g.ny = p.integer(*ny);
    if (g.x_min > g.x_max) p.fail(x_range->line, "x_range min exceeds max");
    if (g.y_min > g.y_max) p.fail(y_range->line, "y_range min exceeds max");
    if (g.nx < 1) p.fail(nx->line, "nx must be >= 1");
    if (g.ny < 1) p.fail(ny->line, "ny must be >= 1");
    f.grid = g;
  }

  if (const Entry* e = Parser::optional(sections, "model", "amplitude_variant")) {
    const auto v = parse_variant(e->value);
    if (!v) p.fail(e->line, "amplitude_variant must be paper-bound or exact-integral");
    f.variant = *v;
  }
  if (const Entry* e = Parser::optional(sections, "model", "db_convention")) {
    const auto v = parse_db_convention(e->value);
    if (!v) p.fail(e->line, "db_convention must be power20 or power10");
    f.db_convention = *v;
  }

  try {
    validate(f.scenario());
  } catch (const std::exception& err) {
    p.fail(0, err.what());
  }
  return f;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ScenarioParseError(path, 0, "cannot open scenario file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string serialize_scenario(const ScenarioFile& f) {
  auto point = [](const Point3& p) {
    return format_double(p.x) + ", " + format_double(p.y) + ", " + format_double(p.z);
  };
  std::ostringstream out;
  out << "[source]\n"
      << "position = " << point(f.source) << "\n"
      << "power_dbm = " << format_double(f.power_dbm) << "\n"
      << "gain = " << format_double(f.gain_source) << "\n\n"
      << "[surface]\n"
      << "endpoint_a = " << point(f.surface_a) << "\n"
      << "endpoint_b = " << point(f.surface_b) << "\n"
      << "diffusing_coefficient = " << format_double(f.diffusing_coefficient) << "\n\n"
      << "[tag]\n"
      << "position = " << point(f.tag) << "\n"
      << "gain = " << format_double(f.gain_tag) << "\n\n"
      << "[reader]\n"
      << "gain = " << format_double(f.gain_reader) << "\n";
  if (f.reader_position) {
    out << "position = " << point(*f.reader_position) << "\n";
  }
  if (f.grid) {
    const GridSpec& g = *f.grid;
    out << "x_range = " << format_double(g.x_min) << ", " << format_double(g.x_max) << "\n"
        << "y_range = " << format_double(g.y_min) << ", " << format_double(g.y_max) << "\n"
        << "z = " << format_double(g.z) << "\n"
        << "nx = " << g.nx << "\n"
        << "ny = " << g.ny << "\n";
  }
  out << "\n[radio]\nfrequency_hz = ";
  for (std::size_t i = 0; i < f.frequencies_hz.size(); ++i) {
    out << (i ? ", " : "") << format_double(f.frequencies_hz[i]);
  }
  out << "\nnoise_dbm = " << format_double(f.noise_dbm) << "\n\n"
      << "[model]\n"
      << "amplitude_variant = " << to_string(f.variant) << "\n"
      << "db_convention = " << to_string(f.db_convention) << "\n";
  return out.str();
}

}  // namespace diffscatter
