#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pencilaid/pencilaid.h"

namespace {

std::string fixture(const char* name) {
  std::ifstream in(std::string(PENCILAID_DATA_DIR) + "/fixtures/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Owned {
  pa_pencil* p = nullptr;
  ~Owned() { pa_pencil_free(p); }
};

std::string take(char* s) {
  std::string r = s ? s : "";
  pa_string_free(s);
  return r;
}

}  // namespace

TEST_CASE("parse, size and invariants") {
  Owned p;
  REQUIRE(pa_pencil_parse(fixture("singular_m2.json").c_str(), &p.p) == PA_OK);
  int n = 0;
  CHECK(pa_pencil_size(p.p, &n) == PA_OK);
  CHECK(n == 5);
  char* s = nullptr;
  REQUIRE(pa_invariants_json(p.p, &s) == PA_OK);
  const std::string inv = take(s);
  CHECK(inv.find("\"minimal_indices\": [\n    2\n  ]") != std::string::npos);
}

TEST_CASE("status codes") {
  Owned p;
  CHECK(pa_pencil_parse(nullptr, &p.p) == PA_ERR_NULL_ARGUMENT);
  CHECK(pa_pencil_parse("{", &p.p) == PA_ERR_PARSE);
  CHECK(std::strlen(pa_last_error()) > 0);
  CHECK(pa_pencil_parse(fixture("not_skew.json").c_str(), &p.p) == PA_ERR_INVALID_INPUT);
  CHECK(p.p == nullptr);
  Owned q;
  REQUIRE(pa_pencil_parse(fixture("a_equals_b.json").c_str(), &q.p) == PA_OK);
  char* s = nullptr;
  CHECK(pa_solve_aid_json(q.p, PA_FIELD_REAL, &s) == PA_ERR_GENUS_TOO_LOW);
  pa_check_report r{};
  CHECK(pa_cross_check(q.p, PA_FIELD_REAL, &r) == PA_ERR_GENUS_TOO_LOW);
  CHECK(std::string(pa_status_name(PA_ERR_GENUS_TOO_LOW)) == "genus too low");
  CHECK(pa_pencil_canonical(R"({"blocks": [{"kind": "inf", "e": 0}]})", &p.p) == PA_ERR_INVALID_SPEC);
  CHECK(pa_pencil_canonical(R"({"n": 3, "pairs": [{"type": "inf", "exp": 1}], "minimal_indices": []})", &p.p) ==
        PA_ERR_UNREALIZABLE_SPEC);
  CHECK(pa_formula_json(R"({"n": 3, "pairs": [], "minimal_indices": [2]})", PA_FIELD_REAL, &s) ==
        PA_ERR_SIZE_IDENTITY_VIOLATION);
}

TEST_CASE("aid and cross check") {
  Owned p;
  REQUIRE(pa_pencil_parse(fixture("regular_c011.json").c_str(), &p.p) == PA_OK);
  char* s = nullptr;
  REQUIRE(pa_solve_aid_json(p.p, PA_FIELD_CLOSED, &s) == PA_OK);
  CHECK(take(s).find("\"dim_aid\": 4") != std::string::npos);
  pa_check_report r{};
  REQUIRE(pa_cross_check(p.p, PA_FIELD_REAL, &r) == PA_OK);
  CHECK(r.agree == 1);
  CHECK(r.formula_inn == 4);
  CHECK(r.formula_aid == 8);
  CHECK(r.solver_aid == 8);
}

TEST_CASE("canonical, randomize, congruence and direct sums") {
  Owned ex, c, r, sum;
  REQUIRE(pa_pencil_parse(fixture("regular_c011.json").c_str(), &ex.p) == PA_OK);
  REQUIRE(pa_pencil_canonical(fixture("regular_c011_invariants.json").c_str(), &c.p) == PA_OK);
  REQUIRE(pa_pencil_randomize(ex.p, 5, &r.p) == PA_OK);
  int same = 0;
  CHECK(pa_strictly_congruent(c.p, r.p, &same) == PA_OK);
  CHECK(same == 1);
  REQUIRE(pa_pencil_direct_sum(ex.p, c.p, &sum.p) == PA_OK);
  int n = 0;
  pa_pencil_size(sum.p, &n);
  CHECK(n == 8);
  CHECK(pa_strictly_congruent(sum.p, c.p, &same) == PA_OK);
  CHECK(same == 0);
  char* s = nullptr;
  REQUIRE(pa_pencil_to_json(r.p, &s) == PA_OK);
  Owned back;
  CHECK(pa_pencil_parse(take(s).c_str(), &back.p) == PA_OK);
}

TEST_CASE("formula through the C interface") {
  char* s = nullptr;
  REQUIRE(pa_formula_json(fixture("regular_c011_invariants.json").c_str(), PA_FIELD_CLOSED, &s) == PA_OK);
  const std::string f = take(s);
  CHECK(f.find("\"dim_aid\": 4") != std::string::npos);
  CHECK(f.find("\"mode\": \"closed\"") != std::string::npos);
}

TEST_CASE("corpus run") {
  char* table = nullptr;
  int all = 0;
  const std::string dir = std::string(PENCILAID_DATA_DIR) + "/corpus";
  REQUIRE(pa_corpus_run(dir.c_str(), PA_FIELD_CLOSED, nullptr, &table, &all) == PA_OK);
  CHECK(all == 1);
  CHECK(take(table).find("sweep_inf_e1") != std::string::npos);
  CHECK(pa_corpus_run("/nonexistent", PA_FIELD_REAL, nullptr, &table, &all) == PA_ERR_INVALID_INPUT);
}
