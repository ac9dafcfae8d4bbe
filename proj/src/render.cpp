#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace boxkite {

namespace {

Rgb hsv_to_rgb(double hue_degrees, double saturation, double value) {
  const double h = hue_degrees / 60.0;
  const int sector = static_cast<int>(h) % 6;
  const double f = h - std::floor(h);
  const double p = value * (1.0 - saturation);
  const double q = value * (1.0 - saturation * f);
  const double t = value * (1.0 - saturation * (1.0 - f));
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = value; g = t; b = p; break;
    case 1: r = q; g = value; b = p; break;
    case 2: r = p; g = value; b = t; break;
    case 3: r = p; g = q; b = value; break;
    case 4: r = t; g = p; b = value; break;
    default: r = value; g = p; b = q; break;
  }
  auto byte = [](double x) { return static_cast<std::uint8_t>(std::lround(x * 255.0)); };
  return {byte(r), byte(g), byte(b)};
}

Rgb parse_rgb(const std::string& text) {
  unsigned r, g, b;
  char tail;
  if (std::sscanf(text.c_str(), "%u,%u,%u%c", &r, &g, &b, &tail) != 3 || r > 255 || g > 255 ||
      b > 255)
    throw std::invalid_argument("malformed RGB value: " + text);
  return {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
          static_cast<std::uint8_t>(b)};
}

}  // namespace

Rgb Palette::color(std::uint32_t dimension_exponent, std::uint32_t magnitude,
                   bool positive) const {
  const auto it = overrides_.find(magnitude);
  if (it != overrides_.end()) {
    if (positive) return it->second;
    Rgb dim = it->second;
    for (auto& ch : dim) ch = static_cast<std::uint8_t>((ch * 6 + 5) / 10);
    return dim;
  }
  const double wheel = static_cast<double>(std::size_t{1} << dimension_exponent);
  const double hue = 360.0 * static_cast<double>(magnitude) / wheel;
  return hsv_to_rgb(hue, 0.8, positive ? 1.0 : 0.6);
}

Palette Palette::parse(const std::string& text) {
  Palette p;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("palette line lacks '=': " + line);
    const std::string key = line.substr(start, eq - start);
    const Rgb rgb = parse_rgb(line.substr(eq + 1));
    if (key == "background") {
      p.background_ = rgb;
    } else if (key == "diagonal") {
      p.diagonal_ = rgb;
    } else {
      std::size_t used = 0;
      unsigned long mag = 0;
      try {
        mag = std::stoul(key, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad palette key: " + key);
      }
      if (used != key.size() || mag > 0xffffffffUL)
        throw std::invalid_argument("bad palette key: " + key);
      p.overrides_[static_cast<std::uint32_t>(mag)] = rgb;
    }
  }
  return p;
}

std::string to_delimited(const EmanationTable& t) {
  std::ostringstream os;
  const std::uint32_t k = t.size();
  for (std::uint32_t c = 0; c < k; ++c) os << ',' << t.row_order()[c].low;
  os << '\n';
  for (std::uint32_t r = 0; r < k; ++r) {
    os << t.row_order()[r].low;
    for (std::uint32_t c = 0; c < k; ++c) {
      os << ',';
      if (t.filled(r, c)) os << t.cell(r, c);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::uint32_t parse_u32_field(const std::string& field) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(field, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed index field: " + field);
  }
  if (used != field.size() || value > 0xffffffffUL)
    throw std::invalid_argument("malformed index field: " + field);
  return static_cast<std::uint32_t>(value);
}

int parse_cell_field(const std::string& field) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed cell field: " + field);
  }
  if (used != field.size()) throw std::invalid_argument("malformed cell field: " + field);
  return value;
}

}  // namespace

EmanationTable parse_delimited(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    for (char ch : line) {
      if (ch == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += ch;
      }
    }
    fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  if (rows.empty() || rows.front().size() < 3 || !rows.front()[0].empty())
    throw std::invalid_argument("malformed table header");
  const std::size_t k = rows.front().size() - 1;
  if (rows.size() != k + 1) throw std::invalid_argument("row count does not match header");

  std::uint32_t n = 0;
  while ((std::size_t{1} << n) < k + 2) ++n;
  if ((std::size_t{1} << n) != k + 2) throw std::invalid_argument("row length is not 2^(N-1)-2");
  ++n;

  std::vector<std::uint32_t> lows(k);
  for (std::size_t c = 0; c < k; ++c) lows[c] = parse_u32_field(rows[0][c + 1]);
  const StrutContext ctx = make_context(n, lows[0] ^ lows[k - 1]);

  std::vector<Assessor> order;
  for (std::uint32_t low : lows) order.push_back(make_assessor(ctx, low));

  std::vector<int> cells(k * k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& fields = rows[r + 1];
    if (fields.size() != k + 1) throw std::invalid_argument("short table row");
    if (parse_u32_field(fields[0]) != lows[r])
      throw std::invalid_argument("row label does not mirror the header");
    for (std::size_t c = 0; c < k; ++c)
      if (!fields[c + 1].empty()) cells[r * k + c] = parse_cell_field(fields[c + 1]);
  }
  return EmanationTable(ctx, std::move(order), std::move(cells));
}

std::vector<std::uint8_t> to_pixmap(const EmanationTable& t, const Palette& p,
                                    std::uint32_t cell_px) {
  if (cell_px < 1) throw std::invalid_argument("cell_px must be at least 1");
  const std::uint32_t k = t.size();
  const std::uint32_t side = k * cell_px;
  std::ostringstream header;
  header << "P6\n" << side << ' ' << side << "\n255\n";
  const std::string head = header.str();

  std::vector<std::uint8_t> bytes;
  bytes.reserve(head.size() + static_cast<std::size_t>(side) * side * 3);
  bytes.insert(bytes.end(), head.begin(), head.end());
  for (std::uint32_t py = 0; py < side; ++py) {
    const std::uint32_t r = py / cell_px;
    for (std::uint32_t px = 0; px < side; ++px) {
      const std::uint32_t c = px / cell_px;
      Rgb rgb;
      if (t.filled(r, c)) {
        const int v = t.cell(r, c);
        rgb = p.color(t.context().n, static_cast<std::uint32_t>(v < 0 ? -v : v), v > 0);
      } else if (c == r || c == k - 1 - r) {
        rgb = p.diagonal();
      } else {
        rgb = p.background();
      }
      bytes.insert(bytes.end(), rgb.begin(), rgb.end());
    }
  }
  return bytes;
}

std::string default_filename(const StrutContext& ctx, const std::string& extension) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "N%03uS%03u", ctx.n, ctx.strut_constant);
  return std::string(buf) + "." + extension;
}

}  // namespace boxkite
