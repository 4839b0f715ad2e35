#include "kronface/pipeline.hpp"

#include <algorithm>

#include "kronface/errors.hpp"

namespace kronface {

PipelineOptions PipelineOptions::defaults_for(int n1, int n2) {
  PipelineOptions o;
  o.n1 = n1;
  o.n2 = n2;
  if (n1 * n2 > 6) {
    o.n_max = 9;
    o.depth = 2;
    o.cert_n_max = 9;
  }
  return o;
}

int PipelineResult::pair_count(int length) const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.length() == length; }));
}

int PipelineResult::face_count(FaceClass c) const {
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [&](const auto& f) { return f.classify() == c; }));
}

int PipelineResult::additive_face_count() const {
  return static_cast<int>(std::count_if(faces.begin(), faces.end(), [](const FaceDescriptor& f) {
    return f.well_covering() &&
           std::any_of(f.provenance.begin(), f.provenance.end(), [](const PairRef& r) { return r.anchor == "ADD"; });
  }));
}

int PipelineResult::certified_pair_count() const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) {
    return p.status == PairStatus::WellCoveringCertified;
  }));
}

int PipelineResult::refuted_triples() const {
  int n = 0;
  for (const auto& f : faces) n += f.stability.refuted;
  return n;
}

PipelineResult run_pipeline(const PipelineOptions& options, KroneckerOracle& oracle) {
  if (options.n1 < 1 || options.n2 < 1) throw DomainError("grid dimensions must be positive");
  if (options.n_max < 1 || options.depth < 1 || options.cert_n_max < 0) {
    throw DomainError("n_max and depth must be >= 1, cert_n_max >= 0");
  }
  PipelineResult result;
  result.options = options;
  result.matrices = enumerate_order_matrices(options.n1, options.n2);
  result.pairs = build_all_pairs(result.matrices);

  std::vector<FaceDescriptor> faces;
  faces.reserve(result.pairs.size());
  for (auto& pair : result.pairs) {
    FaceDescriptor face = face_equations(pair);
    if (pair.status == PairStatus::Dominant && options.cert_n_max > 0) {
      face.certificate = wellcovering_certificate(face, options.cert_n_max, oracle);
      if (face.certificate) {
        pair.status = PairStatus::WellCoveringCertified;
        face.status = pair.status;
      }
    }
    if (options.probe_faces) {
      const FacePoints points = probe_face(face, options.n_max, options.depth, oracle);
      const SpanResult span = span_of(points, face.n1, face.n2);
      face.span_equations = span.equations;
      face.dimension_estimate = span.dimension;
      face.stability = stability_of(points);
    }
    faces.push_back(std::move(face));
  }
  if (options.probe_faces) {
    result.faces = dedup_faces(std::move(faces));
  } else {
    // Without spans only the u_hat merge of well-covering faces is sound.
    std::vector<FaceDescriptor> wc, rest;
    for (auto& f : faces) (f.well_covering() ? wc : rest).push_back(std::move(f));
    result.faces = dedup_faces(std::move(wc));
    result.faces.insert(result.faces.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  }
  return result;
}

PipelineResult run_pipeline(const PipelineOptions& options) {
  KroneckerOracle oracle;
  return run_pipeline(options, oracle);
}

}  // namespace kronface
