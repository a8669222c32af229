#include "mdhll/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "mdhll/errors.hpp"

namespace mdhll {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') throw ConfigError("cannot parse " + what + ": '" + text + "'");
  return v;
}

}  // namespace

std::vector<double> schlieren_field(const std::vector<double>& ln_rho, int nx, int ny, double dx,
                                    double dy) {
  auto at = [&](int i, int j) { return ln_rho[static_cast<std::size_t>(j) * nx + i]; };
  auto diff = [](double lo, double hi, int span, double h) { return (hi - lo) / (span * h); };
  std::vector<double> out(ln_rho.size(), 0.0);
  double peak = 0.0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      double gx = 0.0;
      double gy = 0.0;
      if (nx > 1) {
        const int a = std::max(i - 1, 0);
        const int b = std::min(i + 1, nx - 1);
        gx = diff(at(a, j), at(b, j), b - a, dx);
      }
      if (ny > 1) {
        const int a = std::max(j - 1, 0);
        const int b = std::min(j + 1, ny - 1);
        gy = diff(at(i, a), at(i, b), b - a, dy);
      }
      const double g = std::hypot(gx, gy);
      out[static_cast<std::size_t>(j) * nx + i] = g;
      peak = std::max(peak, g);
    }
  }
  if (peak > 0.0) {
    for (double& g : out) g /= peak;
  }
  return out;
}

Snapshot make_snapshot(const Field& field, double time, const std::map<std::string, std::string>& header) {
  Snapshot s;
  const Mesh& m = field.mesh();
  s.time = time;
  s.nx = m.nx();
  s.ny = m.ny();
  s.x0 = m.x0();
  s.x1 = m.x1();
  s.y0 = m.y0();
  s.y1 = m.y1();
  s.header = header;
  s.cells.reserve(static_cast<std::size_t>(s.nx) * s.ny);
  std::vector<double> ln_rho;
  ln_rho.reserve(s.cells.capacity());
  for (int j = 0; j < s.ny; ++j) {
    for (int i = 0; i < s.nx; ++i) {
      const Conserved& u = field(i, j);
      const Primitive w = recover_primitive(u, field.eos());
      SnapshotCell c;
      c.i = i;
      c.j = j;
      c.x = m.xc(i);
      c.y = m.yc(j);
      c.rho = w.rho;
      c.u = w.u;
      c.v = w.v;
      c.p = w.p;
      c.D = u.D;
      c.E = u.E;
      c.ln_rho = std::log(w.rho);
      c.ln_p = std::log(w.p);
      s.cells.push_back(c);
      ln_rho.push_back(c.ln_rho);
    }
  }
  const std::vector<double> sch = schlieren_field(ln_rho, s.nx, s.ny, m.dx(), m.dy());
  for (std::size_t k = 0; k < sch.size(); ++k) s.cells[k].schlieren = sch[k];
  return s;
}

void write_snapshot_csv(const Snapshot& s, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# time=" << num(s.time) << '\n'
      << "# nx=" << s.nx << '\n'
      << "# ny=" << s.ny << '\n'
      << "# x0=" << num(s.x0) << '\n'
      << "# x1=" << num(s.x1) << '\n'
      << "# y0=" << num(s.y0) << '\n'
      << "# y1=" << num(s.y1) << '\n';
  for (const auto& [k, v] : s.header) out << "# " << k << '=' << v << '\n';
  out << "i,j,x,y,rho,u,v,p,D,E,ln_rho,ln_p,schlieren\n";
  for (const SnapshotCell& c : s.cells) {
    out << c.i << ',' << c.j << ',' << num(c.x) << ',' << num(c.y) << ',' << num(c.rho) << ','
        << num(c.u) << ',' << num(c.v) << ',' << num(c.p) << ',' << num(c.D) << ',' << num(c.E)
        << ',' << num(c.ln_rho) << ',' << num(c.ln_p) << ',' << num(c.schlieren) << '\n';
  }
  if (!out) throw NumericalError("failed writing '" + path + "'");
}

Snapshot read_snapshot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open snapshot '" + path + "'");
  Snapshot s;
  std::string line;
  bool columns_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = body.substr(0, eq);
      const std::string value = body.substr(eq + 1);
      if (key == "time") s.time = parse_double(value, key);
      else if (key == "nx") s.nx = static_cast<int>(parse_double(value, key));
      else if (key == "ny") s.ny = static_cast<int>(parse_double(value, key));
      else if (key == "x0") s.x0 = parse_double(value, key);
      else if (key == "x1") s.x1 = parse_double(value, key);
      else if (key == "y0") s.y0 = parse_double(value, key);
      else if (key == "y1") s.y1 = parse_double(value, key);
      else s.header[key] = value;
      continue;
    }
    if (!columns_seen) {
      columns_seen = true;
      continue;
    }
    std::array<double, 13> f{};
    std::size_t start = 0;
    for (int k = 0; k < 13; ++k) {
      const std::size_t comma = line.find(',', start);
      const std::string field = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      f[k] = parse_double(field, "snapshot value");
      if (comma == std::string::npos && k < 12) throw ConfigError("short snapshot row in '" + path + "'");
      start = comma + 1;
    }
    SnapshotCell c;
    c.i = static_cast<int>(f[0]);
    c.j = static_cast<int>(f[1]);
    c.x = f[2];
    c.y = f[3];
    c.rho = f[4];
    c.u = f[5];
    c.v = f[6];
    c.p = f[7];
    c.D = f[8];
    c.E = f[9];
    c.ln_rho = f[10];
    c.ln_p = f[11];
    c.schlieren = f[12];
    s.cells.push_back(c);
  }
  if (s.nx <= 0 || s.ny <= 0 || s.cells.size() != static_cast<std::size_t>(s.nx) * s.ny) {
    throw ConfigError("snapshot '" + path + "' is malformed");
  }
  return s;
}

void write_snapshot_vtk(const Snapshot& s, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# vtk DataFile Version 3.0\n"
      << "mdhll snapshot time=" << num(s.time) << '\n'
      << "ASCII\nDATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << s.nx << ' ' << s.ny << " 1\n"
      << "ORIGIN " << num(s.x0 + 0.5 * s.dx()) << ' ' << num(s.y0 + 0.5 * s.dy()) << " 0\n"
      << "SPACING " << num(s.dx()) << ' ' << num(s.dy()) << " 1\n"
      << "POINT_DATA " << s.cells.size() << '\n';
  auto scalar = [&](const char* name, double SnapshotCell::*member) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (const SnapshotCell& c : s.cells) out << num(c.*member) << '\n';
  };
  scalar("rho", &SnapshotCell::rho);
  scalar("u", &SnapshotCell::u);
  scalar("v", &SnapshotCell::v);
  scalar("p", &SnapshotCell::p);
  scalar("D", &SnapshotCell::D);
  scalar("E", &SnapshotCell::E);
  scalar("ln_rho", &SnapshotCell::ln_rho);
  scalar("ln_p", &SnapshotCell::ln_p);
  scalar("schlieren", &SnapshotCell::schlieren);
  if (!out) throw NumericalError("failed writing '" + path + "'");
}

LineSpec parse_line(const std::string& text) {
  LineSpec l;
  if (text == "y-axis") {
    l.kind = LineKind::YAxis;
    return l;
  }
  if (text == "y=x") return l;
  const std::string prefix = "y=x:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string range = text.substr(prefix.size());
    const auto comma = range.find(',');
    if (comma != std::string::npos) {
      l.windowed = true;
      l.x_lo = parse_double(range.substr(0, comma), "window");
      l.x_hi = parse_double(range.substr(comma + 1), "window");
      if (l.x_lo > l.x_hi) throw ConfigError("empty cross-section window");
      return l;
    }
  }
  throw ConfigError("line must be 'y-axis', 'y=x' or 'y=x:lo,hi', got '" + text + "'");
}

namespace {

ProfileSample sample_of(const SnapshotCell& c, double s) {
  return {s, c.x, c.y, c.rho, c.u, c.v, c.p, c.ln_rho, c.ln_p};
}

ProfileSample mean(const ProfileSample& a, const ProfileSample& b) {
  return {0.5 * (a.s + b.s),     0.5 * (a.x + b.x),           0.5 * (a.y + b.y),
          0.5 * (a.rho + b.rho), 0.5 * (a.u + b.u),           0.5 * (a.v + b.v),
          0.5 * (a.p + b.p),     0.5 * (a.ln_rho + b.ln_rho), 0.5 * (a.ln_p + b.ln_p)};
}

}  // namespace

std::vector<ProfileSample> cross_section(const Snapshot& s, const LineSpec& line) {
  std::vector<ProfileSample> out;
  if (line.kind == LineKind::YAxis) {
    // Fractional column index of x = 0; columns are clamped to the domain.
    const double pos = -s.x0 / s.dx() - 0.5;
    int a = static_cast<int>(std::floor(pos));
    int b = static_cast<int>(std::ceil(pos));
    if (std::abs(pos - std::round(pos)) < 1e-9) a = b = static_cast<int>(std::round(pos));
    a = std::clamp(a, 0, s.nx - 1);
    b = std::clamp(b, 0, s.nx - 1);
    for (int j = 0; j < s.ny; ++j) {
      const ProfileSample pa = sample_of(s.at(a, j), s.at(a, j).y);
      out.push_back(a == b ? pa : mean(pa, sample_of(s.at(b, j), s.at(b, j).y)));
    }
    return out;
  }
  if (s.nx != s.ny || std::abs(s.x0 - s.y0) > 1e-12 || std::abs(s.x1 - s.y1) > 1e-12) {
    throw ConfigError("the y=x cross section needs a square domain with nx == ny");
  }
  for (int i = 0; i < s.nx; ++i) {
    const SnapshotCell& c = s.at(i, i);
    if (line.windowed && (c.x < line.x_lo || c.x > line.x_hi)) continue;
    out.push_back(sample_of(c, c.x));
  }
  return out;
}

void write_profile_csv(const std::vector<ProfileSample>& profile, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "s,x,y,rho,u,v,p,ln_rho,ln_p\n";
  for (const ProfileSample& p : profile) {
    out << num(p.s) << ',' << num(p.x) << ',' << num(p.y) << ',' << num(p.rho) << ',' << num(p.u)
        << ',' << num(p.v) << ',' << num(p.p) << ',' << num(p.ln_rho) << ',' << num(p.ln_p) << '\n';
  }
}

double symmetry_metric(const Snapshot& s) {
  const std::vector<ProfileSample> axis = cross_section(s, {LineKind::YAxis});
  const std::vector<ProfileSample> diag = cross_section(s, {LineKind::Diagonal});
  std::vector<std::pair<double, double>> d;
  d.reserve(diag.size());
  for (const ProfileSample& p : diag) d.emplace_back(std::numbers::sqrt2 * p.x, p.rho);
  double sum = 0.0;
  int count = 0;
  for (const ProfileSample& p : axis) {
    const double r = p.y;
    if (r < d.front().first || r > d.back().first) continue;
    auto hi = std::lower_bound(d.begin(), d.end(), r,
                               [](const auto& e, double v) { return e.first < v; });
    double rho;
    if (hi == d.begin()) {
      rho = hi->second;
    } else {
      const auto lo = hi - 1;
      const double t = (r - lo->first) / (hi->first - lo->first);
      rho = (1.0 - t) * lo->second + t * hi->second;
    }
    sum += (p.rho - rho) * (p.rho - rho);
    ++count;
  }
  if (count == 0) throw ConfigError("no overlap between the y-axis and diagonal profiles");
  return std::sqrt(sum / count);
}

}  // namespace mdhll
