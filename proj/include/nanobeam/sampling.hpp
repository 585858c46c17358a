#pragma once

// Flux-measure sampling of DS+(E) = {A1 = 0, p1 > 0, H = E} and the two phase-space
// measures entering the rate expressions: the directional flux phi(E) (area of DS+ in the
// (A2, p2) plane) and the reactant density of states rho+(E).

#include <cstdint>
#include <random>
#include <vector>

#include "nanobeam/hamiltonian.hpp"
#include "nanobeam/parallel.hpp"

namespace nanobeam {

struct RngSeed {
  std::uint64_t master = 0;
};

/// Independent streams derived from (master seed, purpose tag, index).
enum class StreamTag : std::uint64_t { DsSample = 1, FluxMc = 2, DosMc = 3 };

std::mt19937_64 substream(RngSeed seed, StreamTag tag, std::uint64_t index);

/// Uniform double in [0, 1) built from the top 53 bits.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

struct McEstimate {
  double value = 0.0;
  double std_err = 0.0;
  std::uint64_t n_samples = 0;
};

struct DsSample {
  double A2;
  double p2;
  double p1;

  ScaledState state() const { return {0.0, p1, A2, p2}; }
};

/// Axis-aligned box containing {H2 <= E}: |A2| <= A2_max, |p2| <= p2_max.
struct DsBox {
  double A2_max;
  double p2_max;
};

/// Throws DomainError when DS+(E) is empty.
void require_nonempty_ds(const ModelParams& m, double E);
DsBox ds_bounding_box(const ModelParams& m, double E);

struct DsSampleSet {
  std::vector<DsSample> samples;
  std::uint64_t proposals = 0;
  std::size_t positive_lobe = 0;  // samples with A2 > 0
  std::size_t negative_lobe = 0;

  double acceptance() const {
    return proposals ? static_cast<double>(samples.size()) / static_cast<double>(proposals) : 0.0;
  }
};

/// Uniform samples (w.r.t. dA2 dp2) of DS+(E); sample i draws from its own substream.
DsSampleSet sample_ds_plus(const ModelParams& m, double E, std::size_t n, RngSeed seed,
                           Execution exec = Execution::Parallel);

enum class FluxMethod { Quadrature, MonteCarlo, Elliptic };
enum class DosMethod { Quadrature, MonteCarlo };

const char* to_string(FluxMethod m);
const char* to_string(DosMethod m);

struct McOptions {
  std::uint64_t n_samples = 100000;
  RngSeed seed{};
  Execution exec = Execution::Parallel;
};

McEstimate flux(const ModelParams& m, double E, FluxMethod method, const McOptions& mc = {});

/// rho+(E) = 2 pi * area{A1 > 0, V(A1, A2) <= E}; the Monte Carlo route estimates the
/// 4-D phase volume of a thin energy shell instead and differentiates it.
McEstimate reactant_dos(const ModelParams& m, double E, DosMethod method, const McOptions& mc = {});

/// Area of the configuration-space well region {A1 > 0, V <= E}.
double reactant_configuration_area(const ModelParams& m, double E);

}  // namespace nanobeam
