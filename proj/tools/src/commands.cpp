#include "maxsurf/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <system_error>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "maxsurf/cli/report.hpp"
#include "maxsurf/errors.hpp"
#include "maxsurf/flux.hpp"

namespace maxsurf::cli {
namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::optional<double> parse_plain(const std::string& s) {
  double v = 0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes through a temporary stream so a half-written file is never left on
// failure; "-" selects stdout.
template <class Writer>
void emit(const std::string& path, std::ostream& stdout_stream, Writer write) {
  if (path == "-") {
    write(stdout_stream);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("write to " + path + " failed");
}

}  // namespace

double parse_scalar(const std::string& raw) {
  std::string s = trim(raw);
  if (auto v = parse_plain(s)) return *v;

  const auto pos = s.find("pi");
  if (pos == std::string::npos) throw DomainError("not a number: '" + raw + "'");
  std::string coeff = s.substr(0, pos);
  std::string tail = s.substr(pos + 2);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();

  double c = 1;
  if (coeff == "-") c = -1;
  else if (coeff == "+") c = 1;
  else if (!coeff.empty()) {
    auto v = parse_plain(coeff);
    if (!v) throw DomainError("not a number: '" + raw + "'");
    c = *v;
  }
  double d = 1;
  if (!tail.empty()) {
    auto v = tail[0] == '/' ? parse_plain(tail.substr(1)) : std::nullopt;
    if (!v || *v == 0) throw DomainError("not a number: '" + raw + "'");
    d = *v;
  }
  return c * std::numbers::pi / d;
}

GridSpec parse_grid(const std::string& text, double exclusion_radius) {
  const auto parts = split(text, ',');
  if (parts.size() != 6) throw DomainError("grid must be x0,x1,y0,y1,nx,ny");
  GridSpec g;
  g.x0 = parse_scalar(parts[0]);
  g.x1 = parse_scalar(parts[1]);
  g.y0 = parse_scalar(parts[2]);
  g.y1 = parse_scalar(parts[3]);
  for (int idx : {4, 5}) {
    int n = 0;
    const auto& p = parts[static_cast<std::size_t>(idx)];
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), n);
    if (ec != std::errc() || ptr != p.data() + p.size())
      throw DomainError("grid counts must be integers: '" + p + "'");
    (idx == 4 ? g.nx : g.ny) = n;
  }
  g.exclusion_radius = exclusion_radius;
  g.validate();
  return g;
}

std::string format_eval(const SurfaceFamily& family, double x, double y) {
  const SurfaceSample s = family.sample(x, y);
  return fmt::format("{:.17g} {:.17g} {:.17g} {:.17g} {:d}", x, y, s.point.z, s.gradient_norm,
                     s.singular ? 1 : 0);
}

std::string format_flux(const SurfaceFamily& family, long k, double radius, int nodes) {
  const FluxReport r = flux_at_singularity(family, k, radius, nodes);
  return fmt::format("{:.17g} {:.17g} {:.17g}", r.value, *r.closed_form, *r.abs_deviation);
}

MeshStats write_obj(std::ostream& out, const SurfaceFamily& family, const GridSpec& grid) {
  grid.validate();
  MeshStats stats;
  std::vector<long> index(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny), 0);
  const auto at = [&](int i, int j) -> long& {
    return index[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.nx) +
                 static_cast<std::size_t>(i)];
  };

  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "# maxsurf alpha={:.9g} grid {}x{}\n", family.alpha(),
                 grid.nx, grid.ny);
  stats.z_min = std::numeric_limits<double>::infinity();
  stats.z_max = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      if (grid.excluded(i, j)) continue;
      const double x = grid.x_at(i), y = grid.y_at(j), z = family.height(x, y);
      at(i, j) = ++stats.vertices;
      stats.z_min = std::min(stats.z_min, z);
      stats.z_max = std::max(stats.z_max, z);
      fmt::format_to(std::back_inserter(buf), "v {:.9g} {:.9g} {:.9g}\n", x, y, z);
    }
  for (int j = 0; j + 1 < grid.ny; ++j)
    for (int i = 0; i + 1 < grid.nx; ++i) {
      const long a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
      if (!a || !b || !c || !d) continue;
      fmt::format_to(std::back_inserter(buf), "f {} {} {} {}\n", a, b, c, d);
      ++stats.faces;
    }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  return stats;
}

void write_profile_csv(std::ostream& out, const Modulus& modulus, double eta0, double eta1,
                       int samples) {
  if (samples < 2) throw DomainError("profile: samples must be at least 2");
  if (!(eta0 < eta1)) throw DomainError("profile: eta range must be increasing");
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "eta,F,F_prime,ode_residual\n");
  for (int i = 0; i < samples; ++i) {
    const double eta = eta0 + (eta1 - eta0) * i / (samples - 1);
    fmt::format_to(std::back_inserter(buf), "{:.17g},{:.17g},{:.17g},{:.17g}\n", eta,
                   profile_F(eta, modulus), profile_F_prime(eta, modulus),
                   profile_ode_residual(eta, modulus));
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the one-periodic maximal surfaces M(alpha) in Minkowski 3-space",
               "maxsurf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "maxsurf 0.1.0");

  std::vector<double> alphas{0.3, 0.6, 0.9};
  std::string report_path = "-";
  std::string timestamp;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite and write a JSON report");
  verify->add_option("--alpha", alphas, "Moduli to test")->delimiter(',');
  verify->add_option("--output", report_path, "Report path, - for stdout");
  verify->add_option("--timestamp", timestamp, "Fixed report timestamp");

  double alpha = 0.6, x = 0, y = 0;
  auto* eval = app.add_subcommand("eval", "Height and gradient norm at one point");
  eval->add_option("--alpha", alpha)->required();
  eval->add_option("--x", x)->required();
  eval->add_option("--y", y)->required();

  long center = 0;
  double radius = kDefaultFluxRadius;
  int nodes = kDefaultFluxNodes;
  auto* flux = app.add_subcommand("flux", "Flux around the singular point A_k");
  flux->add_option("--alpha", alpha)->required();
  flux->add_option("--k", center, "Lattice index of the enclosed point");
  flux->add_option("--radius", radius);
  flux->add_option("--nodes", nodes);

  std::string grid_text = "-pi,3pi,-3,3,201,101";
  double exclude = 0;
  std::string out_path = "-";
  auto* mesh = app.add_subcommand("mesh", "Export the surface as a Wavefront OBJ");
  mesh->add_option("--alpha", alpha);
  mesh->add_option("--grid", grid_text, "x0,x1,y0,y1,nx,ny; bounds accept multiples of pi");
  mesh->add_option("--exclude-radius", exclude);
  mesh->add_option("--output", out_path);

  std::string eta_text = "-3,3";
  int samples = 7;
  auto* profile = app.add_subcommand("profile", "Tabulate the profile F as CSV");
  profile->add_option("--alpha", alpha);
  profile->add_option("--eta-range", eta_text, "a,b");
  profile->add_option("--samples", samples);
  profile->add_option("--output", out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "maxsurf 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "maxsurf: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) {
      if (timestamp.empty()) timestamp = default_timestamp();
      const VerificationReport report = run_verification(alphas, timestamp);
      emit(report_path, out, [&](std::ostream& s) { s << report.to_json().dump(2) << "\n"; });
      for (const Check& c : report.checks)
        if (!c.passed)
          err << fmt::format("FAIL {} alpha={} observed={:.6g} bound={:.6g}\n", c.name, c.alpha,
                             c.observed, c.bound);
      return report.all_passed() ? kOk : kChecksFailed;
    }
    if (*eval) {
      out << format_eval(SurfaceFamily::from_alpha(alpha), x, y) << "\n";
      return kOk;
    }
    if (*flux) {
      if (!(radius > 0 && radius < std::numbers::pi))
        throw DomainError("flux: radius must lie in (0, pi) so neighbouring singularities stay outside");
      out << format_flux(SurfaceFamily::from_alpha(alpha), center, radius, nodes) << "\n";
      return kOk;
    }
    if (*mesh) {
      const auto fam = SurfaceFamily::from_alpha(alpha);
      const GridSpec grid = parse_grid(grid_text, exclude);
      emit(out_path, out, [&](std::ostream& s) { write_obj(s, fam, grid); });
      return kOk;
    }
    if (*profile) {
      const auto parts = split(eta_text, ',');
      if (parts.size() != 2) throw DomainError("eta-range must be a,b");
      const Modulus m = Modulus::from_alpha(alpha);
      const double a = parse_scalar(parts[0]), b = parse_scalar(parts[1]);
      if (samples < 2) throw DomainError("profile: samples must be at least 2");
      if (!(a < b)) throw DomainError("profile: eta range must be increasing");
      emit(out_path, out, [&](std::ostream& s) { write_profile_csv(s, m, a, b, samples); });
      return kOk;
    }
  } catch (const IoError& e) {
    err << "maxsurf: " << e.what() << "\n";
    return kIo;
  } catch (const std::domain_error& e) {
    err << "maxsurf: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "maxsurf: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace maxsurf::cli
