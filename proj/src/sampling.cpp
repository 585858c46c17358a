#include "nanobeam/sampling.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "nanobeam/error.hpp"
#include "nanobeam/invariant_plane.hpp"

namespace nanobeam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kMaxProposalsPerSample = 1'000'000;
constexpr double kMinAcceptance = 1e-3;
constexpr std::size_t kMcBlock = 4096;

double integrate(const auto& f, double a, double b) {
  if (!(b > a)) return 0.0;
  static thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-13);
}

// Samples in [0, n) split into fixed-size blocks; each block owns one substream.
template <class Body>
std::vector<double> run_blocks(std::uint64_t n, RngSeed seed, StreamTag tag, Execution exec,
                               Body body) {
  const std::size_t blocks = static_cast<std::size_t>((n + kMcBlock - 1) / kMcBlock);
  std::vector<double> hits(blocks, 0.0);
  for_each_index(blocks, exec, [&](std::size_t b) {
    auto g = substream(seed, tag, b);
    const std::uint64_t begin = b * kMcBlock;
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + kMcBlock);
    std::uint64_t count = 0;
    for (std::uint64_t k = begin; k < end; ++k) count += body(g) ? 1u : 0u;
    hits[b] = static_cast<double>(count);
  });
  return hits;
}

McEstimate binomial_estimate(double volume, double hits, double n, double scale) {
  const double f = hits / n;
  return {volume * f * scale, volume * std::sqrt(f * (1.0 - f) / n) * scale,
          static_cast<std::uint64_t>(n)};
}

// Width in A1 of the well region {A1 > 0, V <= E} at fixed A2 = y.
double well_width(const ModelParams& m, double E, double y) {
  const double y2 = y * y;
  const double c = m.alpha + 4.0 * y2;
  const double c0 = 4.0 * m.beta * y2 + 8.0 * y2 * y2 - E;
  // c^2 - 2 c0 simplifies to a function linear in y^2.
  const double disc = m.alpha * m.alpha + 2.0 * E + 8.0 * (m.alpha - m.beta) * y2;
  if (disc < 0.0) return 0.0;
  const double r = std::sqrt(disc);
  double u_hi;
  double u_lo;
  if (c < 0.0) {
    u_hi = -c + r;
    u_lo = 2.0 * c0 / u_hi;
  } else {
    u_lo = -c - r;
    u_hi = u_lo != 0.0 ? 2.0 * c0 / u_lo : 0.0;
  }
  if (!(u_hi > 0.0)) return 0.0;
  return std::sqrt(u_hi) - std::sqrt(std::max(u_lo, 0.0));
}

// Largest |A2| reached by the well region at energy E.
double well_A2_extent(const ModelParams& m, double E) {
  const double base = m.alpha * m.alpha + 2.0 * E;
  if (m.beta > m.alpha) {
    const double y2 = base / (8.0 * (m.beta - m.alpha));
    if (m.alpha + 4.0 * y2 < 0.0) return std::sqrt(y2);
  }
  // Otherwise the region is closed off where it meets the A1 = 0 axis.
  return std::sqrt(plane2_turning_roots(m, E).u_plus);
}

void require_above_well_bottom(const ModelParams& m, double E) {
  if (!(m.alpha < 0.0)) throw UnsupportedRegime("reactant density of states requires alpha < 0");
  if (!(E > -0.5 * m.alpha * m.alpha)) {
    throw DomainError("energy " + std::to_string(E) + " lies below the well bottom");
  }
}

double flux_quadrature(const ModelParams& m, double E) {
  const auto r = plane2_turning_roots(m, E);
  const double a = std::sqrt(r.u_plus);
  const double lo = r.u_minus > 0.0 ? std::sqrt(r.u_minus) : 0.0;
  // p-extent of the region at fixed A is 2 |p|, |p| = 4 sqrt((u+ - A^2)(A^2 - u-)).
  auto extent = [&](double A) {
    const double A2 = A * A;
    const double v = (r.u_plus - A2) * (A2 - r.u_minus);
    return v > 0.0 ? 8.0 * std::sqrt(v) : 0.0;
  };
  // Mirror image in A (single loop) or the second lobe (double lobe).
  return 2.0 * integrate(extent, lo, a);
}

double flux_elliptic(const ModelParams& m, double E) {
  const auto r = plane2_turning_roots(m, E);
  const double a2 = r.u_plus;
  if (r.u_minus <= 0.0) {
    // 16 int_0^a sqrt((a^2 - x^2)(x^2 + b^2)) dx
    const double b2 = -r.u_minus;
    const double s = a2 + b2;
    const double k2 = a2 / s;
    const double k = std::sqrt(k2);
    const double K = k2 < 1.0 ? std::comp_ellint_1(k) : 0.0;
    const double Ek = std::comp_ellint_2(k);
    return 16.0 * std::pow(s, 1.5) * ((1.0 - k2) * K + (2.0 * k2 - 1.0) * Ek) / 3.0;
  }
  // Two lobes: 16 int_c^a sqrt((a^2 - x^2)(x^2 - c^2)) dx
  const double a = std::sqrt(a2);
  const double c2 = r.u_minus;
  const double k = std::sqrt((a2 - c2) / a2);
  return 16.0 * (a / 3.0) * ((a2 + c2) * std::comp_ellint_2(k) - 2.0 * c2 * std::comp_ellint_1(k));
}

McEstimate flux_monte_carlo(const ModelParams& m, double E, const McOptions& mc) {
  const DsBox box = ds_bounding_box(m, E);
  const auto hits = run_blocks(mc.n_samples, mc.seed, StreamTag::FluxMc, mc.exec,
                               [&](std::mt19937_64& g) {
                                 const double A = (2.0 * uniform01(g) - 1.0) * box.A2_max;
                                 const double p = (2.0 * uniform01(g) - 1.0) * box.p2_max;
                                 return plane_energy(m, Plane::Pi2, A, p) < E;
                               });
  const double area = 4.0 * box.A2_max * box.p2_max;
  return binomial_estimate(area, pairwise_sum(hits), static_cast<double>(mc.n_samples), 1.0);
}

McEstimate dos_monte_carlo(const ModelParams& m, double E, const McOptions& mc) {
  // Central difference of the phase volume N(E) = vol{A1 > 0, H <= E} over a thin shell.
  const double depth = E + 0.5 * m.alpha * m.alpha;
  const double h = 0.02 * depth;
  const double top = E + h;
  const double y_max = well_A2_extent(m, top);
  double x_max = 0.0;
  for (int i = 0; i <= 256; ++i) {
    const double y = y_max * i / 256.0;
    const double y2 = y * y;
    const double c = m.alpha + 4.0 * y2;
    const double disc = std::max(0.0, m.alpha * m.alpha + 2.0 * top + 8.0 * (m.alpha - m.beta) * y2);
    x_max = std::max(x_max, std::sqrt(std::max(0.0, -c + std::sqrt(disc))));
  }
  x_max *= 1.05;
  const double y_box = 1.05 * y_max;
  const double p_max = std::sqrt(2.0 * (top + 0.5 * m.alpha * m.alpha));
  const auto hits = run_blocks(mc.n_samples, mc.seed, StreamTag::DosMc, mc.exec,
                               [&](std::mt19937_64& g) {
                                 const ScaledState s{uniform01(g) * x_max,
                                                     (2.0 * uniform01(g) - 1.0) * p_max,
                                                     (2.0 * uniform01(g) - 1.0) * y_box,
                                                     (2.0 * uniform01(g) - 1.0) * p_max};
                                 const double H = total_energy(m, s);
                                 return H > E - h && H <= top;
                               });
  const double volume = x_max * 2.0 * y_box * 4.0 * p_max * p_max;
  return binomial_estimate(volume, pairwise_sum(hits), static_cast<double>(mc.n_samples),
                           1.0 / (2.0 * h));
}

}  // namespace

std::mt19937_64 substream(RngSeed seed, StreamTag tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master),
                    static_cast<std::uint32_t>(seed.master >> 32),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(tag)),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

const char* to_string(FluxMethod m) {
  switch (m) {
    case FluxMethod::Quadrature:
      return "quadrature";
    case FluxMethod::MonteCarlo:
      return "monte-carlo";
    case FluxMethod::Elliptic:
      return "elliptic";
  }
  return "?";
}

const char* to_string(DosMethod m) {
  return m == DosMethod::Quadrature ? "quadrature" : "monte-carlo";
}

void require_nonempty_ds(const ModelParams& m, double E) {
  const double emin = plane2_minimum_energy(m);
  if (!(E > emin)) {
    throw DomainError("empty DS: energy " + std::to_string(E) + " does not exceed the Pi2 minimum " +
                      std::to_string(emin));
  }
}

DsBox ds_bounding_box(const ModelParams& m, double E) {
  require_nonempty_ds(m, E);
  const auto r = plane2_turning_roots(m, E);
  return {std::sqrt(r.u_plus), std::sqrt(2.0 * (E - plane2_minimum_energy(m)))};
}

DsSampleSet sample_ds_plus(const ModelParams& m, double E, std::size_t n, RngSeed seed,
                           Execution exec) {
  const DsBox box = ds_bounding_box(m, E);
  std::vector<DsSample> samples(n);
  std::vector<std::uint64_t> proposals(n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    auto g = substream(seed, StreamTag::DsSample, i);
    for (std::uint64_t k = 1; k <= kMaxProposalsPerSample; ++k) {
      const double A = (2.0 * uniform01(g) - 1.0) * box.A2_max;
      const double p = (2.0 * uniform01(g) - 1.0) * box.p2_max;
      const double h = plane_energy(m, Plane::Pi2, A, p);
      if (h < E) {
        samples[i] = {A, p, std::sqrt(2.0 * (E - h))};
        proposals[i] = k;
        return;
      }
    }
    throw PathologicalRegion("DS rejection sampler exhausted its proposal budget");
  });
  DsSampleSet out;
  out.samples = std::move(samples);
  for (const auto k : proposals) out.proposals += k;
  for (const auto& s : out.samples) {
    out.positive_lobe += s.A2 > 0.0;
    out.negative_lobe += s.A2 < 0.0;
  }
  if (n > 0 && out.acceptance() < kMinAcceptance) {
    throw PathologicalRegion("DS rejection sampler acceptance " + std::to_string(out.acceptance()) +
                             " below 1e-3");
  }
  return out;
}

McEstimate flux(const ModelParams& m, double E, FluxMethod method, const McOptions& mc) {
  require_nonempty_ds(m, E);
  switch (method) {
    case FluxMethod::Quadrature:
      return {flux_quadrature(m, E), 0.0, 0};
    case FluxMethod::Elliptic:
      return {flux_elliptic(m, E), 0.0, 0};
    case FluxMethod::MonteCarlo:
      return flux_monte_carlo(m, E, mc);
  }
  throw InvalidParameter("unknown flux method");
}

double reactant_configuration_area(const ModelParams& m, double E) {
  require_above_well_bottom(m, E);
  const double y_end = well_A2_extent(m, E);
  std::vector<double> breaks{0.0, y_end};
  // The inner boundary A1 = sqrt(u_lo) switches on or off where the Pi2 level set crosses A2 = y.
  const double disc = m.beta * m.beta + 2.0 * E;
  if (disc >= 0.0) {
    const auto r = plane2_turning_roots(m, E);
    for (const double u : {r.u_minus, r.u_plus}) {
      if (u > 0.0 && std::sqrt(u) < y_end) breaks.push_back(std::sqrt(u));
    }
  }
  std::sort(breaks.begin(), breaks.end());
  auto w = [&](double y) { return well_width(m, E, y); };
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) area += integrate(w, breaks[i], breaks[i + 1]);
  return 2.0 * area;  // A2 -> -A2
}

McEstimate reactant_dos(const ModelParams& m, double E, DosMethod method, const McOptions& mc) {
  require_above_well_bottom(m, E);
  if (method == DosMethod::Quadrature) {
    return {2.0 * kPi * reactant_configuration_area(m, E), 0.0, 0};
  }
  return dos_monte_carlo(m, E, mc);
}

}  // namespace nanobeam
