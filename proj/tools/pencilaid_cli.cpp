#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pencilaid/pencilaid.h"

namespace {

enum Exit { kOk = 0, kError = 1, kDisagree = 2, kUsage = 3 };

struct Failure {
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pencilaid: cannot read " << path << "\n";
    throw Failure{kError};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void check(pa_status s, const std::string& what) {
  if (s == PA_OK) return;
  std::cerr << "pencilaid: " << what << ": " << pa_status_name(s);
  const std::string msg = pa_last_error();
  if (!msg.empty()) std::cerr << ": " << msg;
  std::cerr << "\n";
  throw Failure{kError};
}

class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { pa_pencil_free(p_); }
  pa_pencil** out() { return &p_; }
  const pa_pencil* get() const { return p_; }

 private:
  pa_pencil* p_ = nullptr;
};

void load(const std::string& path, Handle& h) {
  check(pa_pencil_parse(read_file(path).c_str(), h.out()), path);
}

void emit(char* s) {
  std::fputs(s, stdout);
  pa_string_free(s);
}

pa_field field_of(const std::string& s) { return s == "closed" ? PA_FIELD_CLOSED : PA_FIELD_REAL; }

std::string dims(const pa_check_report& r) {
  std::ostringstream os;
  os << "(inn " << r.formula_inn << ", aid " << r.formula_aid << ")";
  if (r.agree)
    os << " ✓";
  else
    os << " ✗ solver (inn " << r.solver_inn << ", aid " << r.solver_aid << ")";
  return os.str();
}

int run_check(const std::string& path, pa_field field, int seeds, std::uint64_t seed) {
  Handle h;
  load(path, h);
  pa_check_report r{};
  check(pa_cross_check(h.get(), field, &r), path);
  bool ok = r.agree != 0;
  std::cout << "pencil " << dims(r) << "\n";
  for (int k = 0; k < seeds; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    Handle c;
    check(pa_pencil_randomize(h.get(), s, c.out()), "randomize");
    pa_check_report rc{};
    check(pa_cross_check(c.get(), field, &rc), "congruent copy");
    const bool same = rc.agree && rc.formula_inn == r.formula_inn && rc.formula_aid == r.formula_aid;
    ok = ok && same;
    std::cout << "seed " << s << " " << dims(rc);
    if (rc.agree && !same) std::cout << " differs from the original";
    std::cout << "\n";
  }
  return ok ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strict-congruence invariants and almost inner derivations of skew pencils"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pa_version());

  const std::vector<std::string> fields{"real", "closed"};
  std::string file, file2, field = "real", out_dir, data_dir = PENCILAID_DEFAULT_DATA_DIR "/corpus";
  std::uint64_t seed = 1;
  int seeds = 1;

  auto* inv = app.add_subcommand("invariants", "Strict-congruence invariants of a pencil");
  inv->add_option("FILE", file, "Pencil or Algebra JSON")->required();

  auto* aid = app.add_subcommand("aid", "Almost inner derivations by the constraint solver");
  aid->add_option("FILE", file, "Pencil or Algebra JSON")->required();
  aid->add_option("--field", field)->check(CLI::IsMember(fields))->capture_default_str();

  auto* formula = app.add_subcommand("formula", "Closed-form dimensions from invariants");
  formula->add_option("FILE", file, "Invariants JSON")->required();
  formula->add_option("--field", field)->check(CLI::IsMember(fields))->capture_default_str();

  auto* canonical = app.add_subcommand("canonical", "Build the canonical pencil");
  canonical->add_option("FILE", file, "CanonicalSpec or Invariants JSON")->required();

  auto* congruent = app.add_subcommand("congruent", "Decide strict congruence of two pencils");
  congruent->add_option("FILE1", file, "Pencil JSON")->required();
  congruent->add_option("FILE2", file2, "Pencil JSON")->required();

  auto* randomize = app.add_subcommand("randomize", "Apply a random congruence");
  randomize->add_option("FILE", file, "Pencil JSON")->required();
  randomize->add_option("--seed", seed)->capture_default_str();

  auto* chk = app.add_subcommand("check", "Formula against solver, also on random congruences");
  chk->add_option("FILE", file, "Pencil or Algebra JSON")->required();
  chk->add_option("--field", field)->check(CLI::IsMember(fields))->capture_default_str();
  chk->add_option("--seeds", seeds, "Number of random congruences")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  chk->add_option("--seed", seed, "First seed")->capture_default_str();

  auto* corpus = app.add_subcommand("corpus", "Run the corpus and print the summary table");
  corpus->add_option("--field", field)->check(CLI::IsMember(fields))->capture_default_str();
  corpus->add_option("--out", out_dir, "Directory for per-case JSON");
  corpus->add_option("--data", data_dir, "Corpus directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const pa_field f = field_of(field);
    char* s = nullptr;
    if (inv->parsed()) {
      Handle h;
      load(file, h);
      check(pa_invariants_json(h.get(), &s), file);
      emit(s);
    } else if (aid->parsed()) {
      Handle h;
      load(file, h);
      check(pa_solve_aid_json(h.get(), f, &s), file);
      emit(s);
    } else if (formula->parsed()) {
      check(pa_formula_json(read_file(file).c_str(), f, &s), file);
      emit(s);
    } else if (canonical->parsed()) {
      Handle h;
      check(pa_pencil_canonical(read_file(file).c_str(), h.out()), file);
      check(pa_pencil_to_json(h.get(), &s), file);
      emit(s);
    } else if (congruent->parsed()) {
      Handle p, q;
      load(file, p);
      load(file2, q);
      int same = 0;
      check(pa_strictly_congruent(p.get(), q.get(), &same), "congruent");
      std::cout << (same ? "congruent" : "not congruent") << "\n";
    } else if (randomize->parsed()) {
      Handle h, r;
      load(file, h);
      check(pa_pencil_randomize(h.get(), seed, r.out()), file);
      check(pa_pencil_to_json(r.get(), &s), file);
      emit(s);
    } else if (chk->parsed()) {
      return run_check(file, f, seeds, seed);
    } else if (corpus->parsed()) {
      int all = 0;
      check(pa_corpus_run(data_dir.c_str(), f, out_dir.empty() ? nullptr : out_dir.c_str(), &s, &all),
            "corpus");
      emit(s);
      return all ? kOk : kDisagree;
    }
  } catch (const Failure& e) {
    return e.code;
  }
  return kOk;
}
