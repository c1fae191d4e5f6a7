// Exercises the shared-library surface the way an external client would:
// only hp0.h, opaque handles, status codes.
#include "hp0/hp0.h"

#include <cstdio>
#include <cstring>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

static int failures = 0;

#define REQUIRE_C(cond)                                                       \
  do {                                                                        \
    if (!(cond)) {                                                            \
      std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);    \
      ++failures;                                                             \
    }                                                                         \
  } while (0)

int main() {
  char err[512] = {0};

  // parse errors surface with positions and HP0_ERR_INPUT
  hp0_frame* bad = nullptr;
  REQUIRE_C(hp0_frame_parse("1 2\n1 x\n", &bad, err, sizeof err) == HP0_ERR_INPUT);
  REQUIRE_C(std::strstr(err, "not an integer") != nullptr);

  REQUIRE_C(hp0_frame_parse("2 2\n1 1\n-1 1\n", &bad, err, sizeof err) == HP0_ERR_INPUT);
  REQUIRE_C(std::strstr(err, "not totally unimodular") != nullptr);

  hp0_frame* frame = nullptr;
  REQUIRE_C(hp0_frame_parse("2 3\n1 0 1\n0 1 1\n", &frame, err, sizeof err) == HP0_OK);
  REQUIRE_C(hp0_frame_rows(frame) == 2);
  REQUIRE_C(hp0_frame_cols(frame) == 3);

  hp0_options opt;
  hp0_options_init(&opt);
  REQUIRE_C(opt.d_max == 12);
  opt.d_max = 6;
  opt.seed = 3;

  char* out = nullptr;
  REQUIRE_C(hp0_hilbert_json(frame, &opt, &out, err, sizeof err) == HP0_OK);
  {
    json j = json::parse(out);
    REQUIRE_C(j["hilbert"] == json::array({1, 3, 5, 7, 9, 11, 13}));
  }
  hp0_string_free(out);
  out = nullptr;

  // JSON frames parse through the same entry point
  hp0_frame* jframe = nullptr;
  REQUIRE_C(hp0_frame_parse(R"({"k":1,"n":2,"rows":[[1,1]]})", &jframe, err, sizeof err) ==
            HP0_OK);
  REQUIRE_C(hp0_frame_cols(jframe) == 2);

  // permutation handle
  int order[3] = {3, 1, 2};
  hp0_frame* permuted = nullptr;
  REQUIRE_C(hp0_frame_permute(frame, order, 3, &permuted, err, sizeof err) == HP0_OK);
  char* ph = nullptr;
  REQUIRE_C(hp0_hilbert_json(permuted, &opt, &ph, err, sizeof err) == HP0_OK);
  {
    json j = json::parse(ph);
    REQUIRE_C(j["hilbert"] == json::array({1, 3, 5, 7, 9, 11, 13}));
  }
  hp0_string_free(ph);
  int bad_order[3] = {1, 1, 2};
  hp0_frame* nope = nullptr;
  REQUIRE_C(hp0_frame_permute(frame, bad_order, 3, &nope, err, sizeof err) == HP0_ERR_INPUT);

  // fiber with an explicit base point
  REQUIRE_C(hp0_fiber_json(frame, &opt, "1,2", &out, err, sizeof err) == HP0_OK);
  {
    json j = json::parse(out);
    REQUIRE_C(j["fiber"]["dim"] == 2);
  }
  hp0_string_free(out);
  out = nullptr;
  REQUIRE_C(hp0_fiber_json(frame, &opt, "1", &out, err, sizeof err) == HP0_ERR_INPUT);

  // full report: exit status reflects the verified identities
  REQUIRE_C(hp0_report_json(frame, &opt, &out, err, sizeof err) == HP0_OK);
  {
    json j = json::parse(out);
    REQUIRE_C(j["ok"] == true);
    REQUIRE_C(j["hp0"]["h_poly"] == json::array({1, 1}));
  }
  hp0_string_free(out);
  out = nullptr;

  // deterministic bytes for fixed options
  char* again = nullptr;
  char* once = nullptr;
  REQUIRE_C(hp0_report_json(frame, &opt, &once, err, sizeof err) == HP0_OK);
  REQUIRE_C(hp0_report_json(frame, &opt, &again, err, sizeof err) == HP0_OK);
  REQUIRE_C(std::string(once) == std::string(again));
  hp0_string_free(once);
  hp0_string_free(again);

  hp0_frame_free(frame);
  hp0_frame_free(jframe);
  hp0_frame_free(permuted);

  if (failures == 0) std::printf("capi tests passed\n");
  return failures == 0 ? 0 : 1;
}
