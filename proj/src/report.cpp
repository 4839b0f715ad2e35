#include "kronface/report.hpp"

#include <sstream>

namespace kronface {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string one_line(const Permutation& p) { return "[" + join(p.one_line()) + "]"; }

}  // namespace

std::string witness_string(const AdditiveWitness& w) { return "(" + join(w.x) + "|" + join(w.y) + ")"; }

std::string render_matrix_table(const std::vector<OrderMatrix>& matrices) {
  std::ostringstream os;
  os << "| id | ranks | witness |\n|---:|---|---|\n";
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    os << "| " << i + 1 << " | " << matrices[i].to_string() << " | " << witness_string(matrices[i].witness())
       << " |\n";
  }
  return os.str();
}

std::string render_pair_table(const std::vector<PairDescriptor>& pairs) {
  std::ostringstream os;
  os << "| matrix | configuration | length | u_hat | one-line | status |\n|---:|---|---:|---|---|---|\n";
  for (const auto& p : pairs) {
    os << "| " << p.matrix_id << " | " << p.anchor.to_string() << " | " << p.length() << " | "
       << to_cycle_string(p.u_hat) << " | " << one_line(p.u_hat) << " | " << to_string(p.status) << " |\n";
  }
  return os.str();
}

std::string FaceSummary::headline() const {
  return std::to_string(regular) + " regular (" + std::to_string(regular - regular_additive) + " new), " +
         std::to_string(non_regular) + " non-regular" +
         (unprobed > 0 ? ", " + std::to_string(unprobed) + " dominant not probed" : "");
}

FaceSummary summarize(const PipelineResult& r) {
  FaceSummary s;
  s.regular = r.face_count(FaceClass::Regular);
  s.regular_additive = r.additive_face_count();
  for (const auto& f : r.faces) {
    if (f.well_covering()) continue;
    if (f.dimension_estimate < 0) {
      ++s.unprobed;
    } else if (f.classify() == FaceClass::NonRegular) {
      ++s.non_regular;
    }
  }
  s.possibly_zero = r.face_count(FaceClass::PossiblyZero);
  s.certified_pairs = r.certified_pair_count();
  for (const auto& f : r.faces) s.collisions += f.collision ? 1 : 0;
  s.refuted_triples = r.refuted_triples();
  return s;
}

std::string render_report(const PipelineResult& r) {
  const auto& o = r.options;
  const FaceSummary s = summarize(r);
  std::ostringstream os;
  os << "# Faces for " << o.n1 << " x " << o.n2 << " grids\n\n";
  os << "Parameters: N_max = " << o.n_max << ", depth D = " << o.depth << ", certificate bound = " << o.cert_n_max
     << (o.probe_faces ? "" : ", faces not probed") << ".\n\n";

  os << "## Order matrices\n\n" << r.matrices.size() << " order matrices.\n\n" << render_matrix_table(r.matrices);

  os << "\n## Pairs\n\n";
  os << r.pair_count(0) << " additive, " << r.pair_count(1) << " length-1 well-covering, " << r.pair_count(2)
     << " length-2 dominant.\n\n";
  os << render_pair_table(r.pairs);

  os << "\n## Faces\n\n" << s.headline() << ".\n\n";
  os << "- regular faces: " << s.regular << " (" << s.regular_additive << " additive)\n";
  os << "- non-regular faces: " << s.non_regular << "\n";
  if (s.unprobed > 0) os << "- dominant faces not probed: " << s.unprobed << "\n";
  os << "- possibly reduced to zero: " << s.possibly_zero << "\n";
  os << "- length-2 pairs with a certificate: " << s.certified_pairs << "\n";
  os << "- u_hat-distinct regular faces with equal spans: " << s.collisions << "\n";
  os << "- triples with some g(d.) >= 2: " << s.refuted_triples << "\n";

  if (o.probe_faces) {
    os << "\n| u_hat | class | dim >= | verified | undetermined | stable | almost stable | certificate |\n"
       << "|---|---|---:|---:|---:|---:|---:|---|\n";
    for (const auto& f : r.faces) {
      os << "| " << to_cycle_string(f.u_hat) << " | " << to_string(f.classify()) << " | " << f.dimension_estimate
         << " | " << f.stability.verified << " | " << f.stability.undetermined << " | " << f.stability.stable << " | "
         << f.stability.almost_stable << " | " << (f.certificate ? f.certificate->to_string() : "") << " |\n";
    }
  }

  for (const auto& f : r.faces) {
    if (f.well_covering()) continue;
    if (f.dimension_estimate < 0) {
      os << "\n### Dominant face " << to_cycle_string(f.u_hat) << ", not probed\n\nFace equations:\n\n";
      for (const auto& e : f.equations) os << "    " << e.to_string() << "\n";
    } else {
      os << "\n### Non-regular face, dimension >= " << f.dimension_estimate << "\n\nSpan equations:\n\n";
      for (const auto& row : f.span_equations) os << "    " << render_row(row, f.n1, f.n2) << "\n";
    }
    os << "\nFrom:\n\n";
    for (const auto& p : f.provenance) os << "- matrix " << p.matrix_id << " (" << p.matrix << "), " << p.anchor << "\n";
    if (!f.stability.non_stable.empty()) {
      os << "\nNon-stable examples:";
      for (const auto& t : f.stability.non_stable) os << " " << t.to_string();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace kronface
