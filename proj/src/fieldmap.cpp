#include "mmc/fieldmap.hpp"

#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mmc/util.hpp"

namespace mmc {

FieldmapWhich fieldmap_which_from_string(const std::string& s) {
  if (s == "strip-response") return FieldmapWhich::StripResponse;
  if (s == "applied") return FieldmapWhich::Applied;
  if (s == "total") return FieldmapWhich::Total;
  throw parse_error("fieldmap: unknown --which '" + s +
                    "' (expected strip-response, applied or total)");
}

const char* fieldmap_which_label(FieldmapWhich w) {
  switch (w) {
    case FieldmapWhich::StripResponse: return "strip-response";
    case FieldmapWhich::Applied: return "applied";
    default: return "total";
  }
}

void FieldmapGrid::check() const {
  if (ny < 1 || nz < 1)
    throw std::domain_error("fieldmap: grid needs at least one node per axis");
  if (!(y1 >= y0) || !(z1 >= z0))
    throw std::domain_error("fieldmap: require y1 >= y0 and z1 >= z0");
  if (static_cast<long long>(ny) * nz > 4000000LL)
    throw numerical_error("fieldmap: grid exceeds 4e6 points");
}

namespace {

// A_x of the ideal applied sources in the same gauge as the strip response:
// odd in y, zero on the axis.
double ideal_applied_potential(const FieldPoint& p, const StripState& st) {
  if (st.mode == Mode::Quadrupole) return -st.amplitude * p.y * p.z;
  return -st.amplitude * p.y;
}

struct PointValues {
  double A_x = 0.0;
  double B_y = 0.0;
  double B_z = 0.0;
  bool masked = false;
};

PointValues eval_point(const FieldPoint& p, const ResolvedScenario& rs,
                       const StripState& st, FieldmapWhich which) {
  PointValues v;
  try {
    switch (which) {
      case FieldmapWhich::StripResponse: {
        const FieldVec f = b_field(p, st, rs.strip);
        v.A_x = vector_potential(p, st, rs.strip);
        v.B_y = f.B_y;
        v.B_z = f.B_z;
        break;
      }
      case FieldmapWhich::Applied: {
        if (rs.wire) {
          const FieldVec f = wire_applied_field(p, *rs.wire);
          v.A_x = wire_vector_potential(p, *rs.wire);
          v.B_y = f.B_y;
          v.B_z = f.B_z;
        } else {
          const FieldVec f = applied_field(p, st);
          v.A_x = ideal_applied_potential(p, st);
          v.B_y = f.B_y;
          v.B_z = f.B_z;
        }
        break;
      }
      case FieldmapWhich::Total: {
        const FieldVec resp = b_field(p, st, rs.strip);
        FieldVec app;
        double A_app;
        if (rs.wire) {
          app = wire_applied_field(p, *rs.wire);
          A_app = wire_vector_potential(p, *rs.wire);
        } else {
          app = applied_field(p, st);
          A_app = ideal_applied_potential(p, st);
        }
        v.A_x = A_app + vector_potential(p, st, rs.strip);
        v.B_y = app.B_y + resp.B_y;
        v.B_z = app.B_z + resp.B_z;
        break;
      }
    }
  } catch (const std::domain_error&) {
    v.masked = true;
  }
  return v;
}

} // namespace

std::string render_fieldmap(const ResolvedScenario& rs, FieldmapWhich which,
                            const FieldmapGrid& g, int threads) {
  g.check();
  const StripState st{rs.z_m, rs.amplitude, rs.mode};
  const long long n = static_cast<long long>(g.ny) * g.nz;
  const double dy = g.ny > 1 ? (g.y1 - g.y0) / (g.ny - 1) : 0.0;
  const double dz = g.nz > 1 ? (g.z1 - g.z0) / (g.nz - 1) : 0.0;

  std::vector<std::string> rows(static_cast<size_t>(n));
  const auto fill = [&](long long lo, long long hi) {
    for (long long k = lo; k < hi; ++k) {
      const int iy = static_cast<int>(k / g.nz);
      const int iz = static_cast<int>(k % g.nz);
      const FieldPoint p{g.y0 + dy * iy, g.z0 + dz * iz};
      const PointValues v = eval_point(p, rs, st, which);
      std::string& row = rows[static_cast<size_t>(k)];
      row = fmt_sci(p.y) + "," + fmt_sci(p.z) + ",";
      if (v.masked) {
        row += "nan,nan,nan,1\n";
      } else {
        row += fmt_sci(v.A_x) + "," + fmt_sci(v.B_y) + "," + fmt_sci(v.B_z) +
               ",0\n";
      }
    }
  };

  int T = threads < 1 ? 1 : threads;
  if (T > 64) T = 64;
  if (static_cast<long long>(T) > n) T = static_cast<int>(n);
  if (T <= 1) {
    fill(0, n);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mtx;
    pool.reserve(static_cast<size_t>(T));
    for (int t = 0; t < T; ++t) {
      const long long lo = n * t / T;
      const long long hi = n * (t + 1) / T;
      pool.emplace_back([&, lo, hi] {
        try {
          fill(lo, hi);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mtx);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::string out = "y_m,z_m_coord,A_x_Tm,B_y_T,B_z_T,masked\n";
  size_t bytes = out.size();
  for (const auto& r : rows) bytes += r.size();
  out.reserve(bytes);
  for (const auto& r : rows) out += r;
  return out;
}

} // namespace mmc
