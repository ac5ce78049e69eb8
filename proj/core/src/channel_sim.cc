// Copyright 2026 The cransched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cransched/channel_sim.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cransched/rng.h"

namespace cran {

std::string ToString(Fading fading) {
  return fading == Fading::kRayleigh ? "rayleigh" : "none";
}

Fading ParseFading(const std::string& text) {
  if (text == "rayleigh") return Fading::kRayleigh;
  if (text == "none") return Fading::kNone;
  throw std::invalid_argument("unknown fading model '" + text +
                              "' (expected rayleigh or none)");
}

double Distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void ValidateSimParams(const SimParams& p) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(name) + " must be positive");
    }
  };
  positive(p.cell_to_cell_m, "cell_to_cell_m");
  positive(p.carrier_hz, "carrier_hz");
  positive(p.bs_height_m, "bs_height_m");
  positive(p.user_height_m, "user_height_m");
  positive(p.bandwidth_hz, "bandwidth_hz");
  if (!(p.shadow_sigma_db >= 0.0) || !std::isfinite(p.shadow_sigma_db)) {
    throw std::invalid_argument("shadow_sigma_db must be >= 0");
  }
  if (!(p.sinr_gap_db >= 0.0) || !std::isfinite(p.sinr_gap_db)) {
    throw std::invalid_argument("sinr_gap_db must be >= 0");
  }
  if (!(p.min_distance_m >= 0.0) || !std::isfinite(p.min_distance_m)) {
    throw std::invalid_argument("min_distance_m must be >= 0");
  }
  if (!std::isfinite(p.power_dbm_per_hz) || !std::isfinite(p.noise_dbm_per_hz)) {
    throw std::invalid_argument("power and noise densities must be finite");
  }
}

namespace {

std::vector<Point> RingFill(int num_bs, double spacing) {
  // Lattice basis (spacing, 0) and (spacing/2, spacing*sqrt(3)/2).
  const int radius = static_cast<int>(std::ceil(std::sqrt(num_bs))) + 2;
  struct Site {
    Point p;
    double dist;
    double angle;
  };
  std::vector<Site> sites;
  for (int i = -radius; i <= radius; ++i) {
    for (int j = -radius; j <= radius; ++j) {
      const Point p{spacing * (i + 0.5 * j),
                    spacing * j * std::numbers::sqrt3 / 2.0};
      // Rounded so ring members compare equal.
      const double dist = std::round(std::hypot(p.x, p.y) * 1e6) / 1e6;
      double angle = std::atan2(p.y, p.x);
      if (angle < -1e-12) angle += 2.0 * std::numbers::pi;
      if (angle < 0.0) angle = 0.0;
      sites.push_back({p, dist, angle});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.angle < b.angle;
  });
  std::vector<Point> out;
  for (int k = 0; k < num_bs; ++k) out.push_back(sites[k].p);
  return out;
}

std::vector<Point> OffsetGrid(int side, double spacing) {
  std::vector<Point> out;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      out.push_back({spacing * (c + 0.5 * (r % 2)),
                     spacing * r * std::numbers::sqrt3 / 2.0});
    }
  }
  return out;
}

double Cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Counter-clockwise convex hull (Andrew's monotone chain).
std::vector<Point> ConvexHull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double SegmentDistance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Distance from p to the hull (zero inside).
double HullDistance(const std::vector<Point>& hull, const Point& p) {
  if (hull.size() == 1) return Distance(hull[0], p);
  if (hull.size() >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (Cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    best = std::min(best,
                    SegmentDistance(p, hull[i], hull[(i + 1) % hull.size()]));
  }
  return best;
}

}  // namespace

std::vector<Point> HexBsPositions(int num_bs, double spacing_m,
                                  bool allow_any) {
  if (num_bs < 1) throw std::invalid_argument("need at least one BS");
  switch (num_bs) {
    case 1:
    case 3:
    case 7:
    case 21:
      return RingFill(num_bs, spacing_m);
    case 4:
      return OffsetGrid(2, spacing_m);
    case 9:
      return OffsetGrid(3, spacing_m);
    default:
      if (allow_any) return RingFill(num_bs, spacing_m);
      throw std::invalid_argument(
          "no native hexagonal layout for B = " + std::to_string(num_bs) +
          " (supported: 1, 3, 4, 7, 9, 21; allow any B to fill rings)");
  }
}

NetworkLayout GenerateLayout(const Dimensions& dims, const SimParams& params) {
  ValidateSimParams(params);
  NetworkLayout layout;
  if (!params.bs_positions.empty()) {
    if (static_cast<int>(params.bs_positions.size()) != dims.num_bs()) {
      throw std::invalid_argument("explicit BS positions do not match B");
    }
    layout.bs_positions = params.bs_positions;
  } else {
    layout.bs_positions = HexBsPositions(dims.num_bs(), params.cell_to_cell_m,
                                         params.allow_any_bs);
  }

  const double cell_radius = params.cell_to_cell_m / std::numbers::sqrt3;
  const std::vector<Point> hull = ConvexHull(layout.bs_positions);
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Point& p : layout.bs_positions) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  min_x -= cell_radius;
  min_y -= cell_radius;
  max_x += cell_radius;
  max_y += cell_radius;

  constexpr int kMaxAttempts = 1'000'000;
  for (int u = 0; u < dims.num_users(); ++u) {
    RandomStream rng(params.seed,
                     {kUserPositionStream, static_cast<std::uint64_t>(u)});
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const Point p{rng.Uniform(min_x, max_x), rng.Uniform(min_y, max_y)};
      if (HullDistance(hull, p) > cell_radius) continue;
      bool too_close = false;
      for (const Point& bs : layout.bs_positions) {
        if (Distance(bs, p) < params.min_distance_m) {
          too_close = true;
          break;
        }
      }
      if (too_close) continue;
      layout.user_positions.push_back(p);
      placed = true;
      break;
    }
    if (!placed) {
      throw std::runtime_error("could not place user " + std::to_string(u) +
                               " in the network area");
    }
  }
  return layout;
}

double PathLossDb(double distance_m, const SimParams& params) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("path loss needs a positive distance");
  }
  // SUI terrain type B.
  constexpr double kRefDistanceM = 100.0;
  constexpr double kA = 4.0;
  constexpr double kB = 0.0065;
  constexpr double kC = 17.1;
  constexpr double kSpeedOfLight = 299792458.0;

  const double wavelength = kSpeedOfLight / params.carrier_hz;
  const double intercept =
      20.0 * std::log10(4.0 * std::numbers::pi * kRefDistanceM / wavelength);
  const double exponent =
      kA - kB * params.bs_height_m + kC / params.bs_height_m;
  const double d = std::max(distance_m, kRefDistanceM);
  const double freq_correction = 6.0 * std::log10(params.carrier_hz / 2e9);
  const double height_correction =
      -10.8 * std::log10(params.user_height_m / 2.0);
  return intercept + 10.0 * exponent * std::log10(d / kRefDistanceM) +
         freq_correction + height_correction;
}

double DbmPerHzToDbm(double dbm_per_hz, double bandwidth_hz) {
  return dbm_per_hz + 10.0 * std::log10(bandwidth_hz);
}

double DbmToWatts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double DbmPerHzToWatts(double dbm_per_hz, double bandwidth_hz) {
  return DbmToWatts(DbmPerHzToDbm(dbm_per_hz, bandwidth_hz));
}

Instance GenerateInstance(const Dimensions& dims, const SimParams& params) {
  return GenerateInstance(dims, params, GenerateLayout(dims, params));
}

Instance GenerateInstance(const Dimensions& dims, const SimParams& params,
                          const NetworkLayout& layout) {
  ValidateSimParams(params);
  if (static_cast<int>(layout.bs_positions.size()) != dims.num_bs() ||
      static_cast<int>(layout.user_positions.size()) != dims.num_users()) {
    throw std::invalid_argument("layout does not match dimensions");
  }
  const int num_users = dims.num_users();
  const int num_bs = dims.num_bs();
  const int num_pz = dims.num_pz();
  const double pz_bandwidth = params.bandwidth_hz / num_pz;

  std::vector<double> power(static_cast<std::size_t>(dims.z_tot()),
                            DbmPerHzToWatts(params.power_dbm_per_hz,
                                            pz_bandwidth));
  const double noise = DbmPerHzToWatts(params.noise_dbm_per_hz, pz_bandwidth);

  std::vector<double> gain_sq;
  gain_sq.reserve(static_cast<std::size_t>(dims.num_associations()));
  for (int u = 0; u < num_users; ++u) {
    for (int b = 0; b < num_bs; ++b) {
      const double d = Distance(layout.user_positions[u], layout.bs_positions[b]);
      RandomStream shadow_rng(params.seed,
                              {kShadowingStream, static_cast<std::uint64_t>(u),
                               static_cast<std::uint64_t>(b)});
      const double shadow_db = params.shadow_sigma_db * shadow_rng.Normal();
      const double large_scale =
          std::pow(10.0, -(PathLossDb(d, params) + shadow_db) / 10.0);
      for (int z = 0; z < num_pz; ++z) {
        double fading = 1.0;
        if (params.fading == Fading::kRayleigh) {
          RandomStream fading_rng(
              params.seed,
              {kFadingStream, static_cast<std::uint64_t>(u),
               static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(z)});
          fading = fading_rng.Exponential();
        }
        gain_sq.push_back(large_scale * fading);
      }
    }
  }
  return Instance(dims, std::move(power), std::move(gain_sq), noise,
                  std::pow(10.0, params.sinr_gap_db / 10.0));
}

void WriteLayoutCsv(const NetworkLayout& layout, std::ostream& out) {
  out << "entity,type,x_m,y_m\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < layout.bs_positions.size(); ++i) {
    out << i << ",bs," << layout.bs_positions[i].x << ","
        << layout.bs_positions[i].y << "\n";
  }
  for (std::size_t i = 0; i < layout.user_positions.size(); ++i) {
    out << i << ",user," << layout.user_positions[i].x << ","
        << layout.user_positions[i].y << "\n";
  }
}

}  // namespace cran
