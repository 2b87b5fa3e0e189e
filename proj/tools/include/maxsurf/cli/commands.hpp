#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maxsurf/surface.hpp"

namespace maxsurf::cli {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kUsage = 2, kIo = 3 };

/// A number, optionally a multiple of pi: "1.5", "-pi", "3pi", "0.5*pi", "pi/2".
/// DomainError on anything else.
double parse_scalar(const std::string& text);

/// "x0,x1,y0,y1,nx,ny", validated.
GridSpec parse_grid(const std::string& text, double exclusion_radius);

/// `x y z |grad| singular_flag`, 17 significant digits.
std::string format_eval(const SurfaceFamily& family, double x, double y);

/// `flux closed_form deviation` for the circle of given radius about A_k.
/// ContourError unless radius < pi and nodes >= 16.
std::string format_flux(const SurfaceFamily& family, long k, double radius, int nodes);

struct MeshStats {
  long vertices = 0;
  long faces = 0;
  double z_min = 0;
  double z_max = 0;
};

/// Wavefront OBJ of the height over `grid`: vertices row-major (x fastest),
/// then quads over cells whose four corners survive the exclusion.
MeshStats write_obj(std::ostream& out, const SurfaceFamily& family, const GridSpec& grid);

/// CSV `eta,F,F_prime,ode_residual` at `samples` equispaced points.
void write_profile_csv(std::ostream& out, const Modulus& modulus, double eta0, double eta1,
                       int samples);

/// Full command line dispatch; args exclude the program name.  Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxsurf::cli
