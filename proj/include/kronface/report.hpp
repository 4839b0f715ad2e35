#pragma once

// Markdown rendering of a pipeline run. Output depends only on the result,
// never on timing or thread count.

#include <string>

#include "kronface/pipeline.hpp"

namespace kronface {

std::string witness_string(const AdditiveWitness& w);  // "(4,2,0|1,0)"

/// One row per order matrix: id, ranks, minimized witness.
std::string render_matrix_table(const std::vector<OrderMatrix>& matrices);

/// One row per pair: matrix, configuration, length, u_hat in cycle and
/// one-line notation, status.
std::string render_pair_table(const std::vector<PairDescriptor>& pairs);

struct FaceSummary {
  int regular = 0;
  int regular_additive = 0;
  int non_regular = 0;
  int unprobed = 0;  // dominant faces when probing is off
  int possibly_zero = 0;
  int certified_pairs = 0;
  int collisions = 0;
  int refuted_triples = 0;

  /// "6 regular (4 new), 1 non-regular"
  [[nodiscard]] std::string headline() const;
};

FaceSummary summarize(const PipelineResult& r);

std::string render_report(const PipelineResult& r);

}  // namespace kronface
