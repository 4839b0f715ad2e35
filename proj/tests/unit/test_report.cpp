#include <doctest.h>

#include <omp.h>

#include "kronface/errors.hpp"
#include "kronface/report.hpp"
#include "kronface/serialize.hpp"

using namespace kronface;

TEST_SUITE("report") {
  TEST_CASE("2 x 2 run") {
    const auto r = run_pipeline(PipelineOptions::defaults_for(2, 2));
    CHECK(r.matrices.size() == 2);
    CHECK(r.pair_count(0) == 2);
    CHECK(r.pair_count(1) == 4);
    CHECK(r.pair_count(2) == 4);
    CHECK(summarize(r).headline() == "6 regular (4 new), 1 non-regular");
    CHECK(r.additive_face_count() == 2);
    CHECK(r.certified_pair_count() == 0);
    CHECK(r.refuted_triples() == 0);
  }

  TEST_CASE("output does not depend on the thread count") {
    PipelineOptions o = PipelineOptions::defaults_for(3, 2);
    o.n_max = 8;
    o.cert_n_max = 8;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    KroneckerOracle a;
    const auto serial = run_pipeline(o, a);
    omp_set_num_threads(4);
    KroneckerOracle b;
    const auto parallel = run_pipeline(o, b);
    omp_set_num_threads(saved);
    CHECK(render_report(serial) == render_report(parallel));
    CHECK(result_to_json(serial).dump() == result_to_json(parallel).dump());
  }

  TEST_CASE("summary counts agree with the face list") {
    PipelineOptions o = PipelineOptions::defaults_for(3, 2);
    o.n_max = 8;
    o.cert_n_max = 8;
    const auto r = run_pipeline(o);
    const auto s = summarize(r);
    CHECK(s.regular + s.non_regular + s.possibly_zero == static_cast<int>(r.faces.size()));
    CHECK(s.unprobed == 0);
    const auto text = render_report(r);
    CHECK(text.find(s.headline()) != std::string::npos);
    CHECK(text.find("| 1 | 1 2 / 3 4 / 5 6 | (4,2,0|1,0) |") != std::string::npos);
  }

  TEST_CASE("unprobed runs keep dominant faces apart") {
    PipelineOptions o = PipelineOptions::defaults_for(2, 2);
    o.probe_faces = false;
    const auto s = summarize(run_pipeline(o));
    CHECK(s.unprobed == 4);
    CHECK(s.non_regular == 0);
  }

  TEST_CASE("witness rendering and bad shapes") {
    CHECK(witness_string(AdditiveWitness{{4, 2, 0}, {1, 0}}) == "(4,2,0|1,0)");
    PipelineOptions o;
    o.n1 = 0;
    CHECK_THROWS_AS(run_pipeline(o), DomainError);
  }
}
