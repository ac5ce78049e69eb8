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

// Random network drops for the downlink scheduling experiments.
//
// Base-stations sit on a hexagonal lattice. Users are dropped uniformly
// inside the convex hull of the base-stations padded by one cell radius,
// keeping at least min_distance_m from every base-station. Channels
// combine SUI terrain-B path loss, log-normal shadowing per (u, b) link
// and unit-mean exponential (Rayleigh power) fading per (u, b, z).

#ifndef CRANSCHED_CHANNEL_SIM_H_
#define CRANSCHED_CHANNEL_SIM_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cransched/model.h"

namespace cran {

enum class Fading { kRayleigh, kNone };

std::string ToString(Fading fading);
// Accepts "rayleigh" or "none"; throws std::invalid_argument otherwise.
Fading ParseFading(const std::string& text);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double Distance(const Point& a, const Point& b);

struct SimParams {
  double cell_to_cell_m = 500.0;
  double carrier_hz = 2.5e9;
  double bs_height_m = 30.0;
  double user_height_m = 1.5;
  double shadow_sigma_db = 8.0;
  double bandwidth_hz = 1e7;
  double power_dbm_per_hz = -42.60;
  double noise_dbm_per_hz = -168.60;
  double sinr_gap_db = 0.0;
  double min_distance_m = 20.0;
  Fading fading = Fading::kRayleigh;
  std::uint64_t seed = 1;
  // Lay out any B by filling hexagonal rings outward instead of failing
  // for counts without a native pattern.
  bool allow_any_bs = false;
  // Explicit base-station positions; replaces the generated lattice.
  std::vector<Point> bs_positions;
};

// Throws std::invalid_argument on non-physical parameters.
void ValidateSimParams(const SimParams& params);

inline constexpr double kLowShadowDb = 2.0;
inline constexpr double kHighShadowDb = 8.0;

struct NetworkLayout {
  std::vector<Point> bs_positions;
  std::vector<Point> user_positions;
};

// Base-station positions with nearest-neighbor spacing `spacing_m`.
//   B = 1, 3, 7, 21: hexagonal rings around the origin, filled by
//     increasing distance and then by angle from the +x axis; 21 is two
//     full rings (19 sites) plus the first two sites of the third ring.
//   B = 4, 9: 2x2 and 3x3 grids with every other row shifted by half a
//     spacing.
// Other counts use the ring-filling rule when allow_any is set and throw
// std::invalid_argument otherwise.
std::vector<Point> HexBsPositions(int num_bs, double spacing_m,
                                  bool allow_any);

NetworkLayout GenerateLayout(const Dimensions& dims, const SimParams& params);

// SUI terrain-B path loss in dB. Distances below 100 m are clamped to 100 m.
// Throws std::invalid_argument for distance_m <= 0.
double PathLossDb(double distance_m, const SimParams& params);

// Total power of a flat spectral density over `bandwidth_hz`.
double DbmPerHzToDbm(double dbm_per_hz, double bandwidth_hz);
double DbmToWatts(double dbm);
double DbmPerHzToWatts(double dbm_per_hz, double bandwidth_hz);

Instance GenerateInstance(const Dimensions& dims, const SimParams& params);
Instance GenerateInstance(const Dimensions& dims, const SimParams& params,
                          const NetworkLayout& layout);

// CSV with header entity,type,x_m,y_m; entity is the zero-based index and
// type is "bs" or "user".
void WriteLayoutCsv(const NetworkLayout& layout, std::ostream& out);

}  // namespace cran

#endif  // CRANSCHED_CHANNEL_SIM_H_
