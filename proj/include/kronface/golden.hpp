#pragma once

// Readers for the reference tables under tests/golden.

#include <string>
#include <vector>

#include "kronface/faces.hpp"

namespace kronface {

struct GoldenMatrix {
  int id = 0;
  std::vector<int> ranks;  // row-major
  AdditiveWitness witness;
};

struct GoldenPair {
  int matrix_id = 0;
  std::string label;
  int length = 0;
  std::string u_hat;  // cycle notation as listed
};

struct GoldenCorrection {
  std::string label;
  std::string listed;
  std::string recomputed;
};

struct UhatTable {
  int n1 = 0;
  int n2 = 0;
  std::vector<GoldenMatrix> matrices;
  std::vector<GoldenPair> pairs;
  std::vector<GoldenCorrection> corrections;
  std::vector<std::string> certified;  // labels

  [[nodiscard]] const GoldenMatrix& matrix(int id) const;
  [[nodiscard]] const GoldenPair& pair(const std::string& label) const;
  /// Listed u_hat with any correction applied.
  [[nodiscard]] Permutation corrected_u_hat(const GoldenPair& p) const;
};

/// Reads "uhat_<n1>x<n2>.txt"; DomainError on malformed lines.
UhatTable load_uhat_table(const std::string& path, int n1, int n2);

/// Reads face_equations.txt.
std::vector<CalibrationExample> load_equation_examples(const std::string& path);

struct SpanSystem {
  int n1 = 0;
  int n2 = 0;
  std::vector<std::string> equations;
  /// RREF of the listed equations together with the ambient weight rows.
  [[nodiscard]] RationalMatrix rref_rows() const;
};

/// Reads spans.txt.
std::vector<SpanSystem> load_span_systems(const std::string& path);

/// Directory holding the reference tables, fixed at configure time.
std::string default_golden_dir();

}  // namespace kronface
