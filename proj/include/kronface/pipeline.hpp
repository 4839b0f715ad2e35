#pragma once

// End-to-end run for one grid shape: order matrices, pairs, face
// equations, certificates, point spans, stability probes and dedup.

#include <string>
#include <vector>

#include "kronface/faces.hpp"

namespace kronface {

struct PipelineOptions {
  int n1 = 2;
  int n2 = 2;
  int n_max = 10;       // lattice-point bound for spans and stability
  int depth = 3;        // stability depth D
  int cert_n_max = 10;  // bound for the certificate search
  bool probe_faces = true;  // spans and stability; skipping leaves dominant faces unmerged

  /// Defaults for a grid: D=3, N_max=10 up to 6 cells, D=2, N_max=9 above.
  static PipelineOptions defaults_for(int n1, int n2);
};

struct PipelineResult {
  PipelineOptions options;
  std::vector<OrderMatrix> matrices;
  std::vector<PairDescriptor> pairs;  // status updated by certification
  std::vector<FaceDescriptor> faces;  // deduplicated

  [[nodiscard]] int pair_count(int length) const;
  [[nodiscard]] int face_count(FaceClass c) const;
  /// Regular faces coming from additive pairs.
  [[nodiscard]] int additive_face_count() const;
  [[nodiscard]] int certified_pair_count() const;
  [[nodiscard]] int refuted_triples() const;
};

/// Raises DomainError for n1, n2 < 1 and InternalConsistencyError when a
/// pair guaranteed dominant fails the dominance test.
PipelineResult run_pipeline(const PipelineOptions& options, KroneckerOracle& oracle);
PipelineResult run_pipeline(const PipelineOptions& options);

}  // namespace kronface
