#include "pencilaid/pencilaid.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <string>

#include "pencilaid/corpus.hpp"
#include "pencilaid/serialize.hpp"

struct pa_pencil {
  pencilaid::Pencil value;
};

using namespace pencilaid;

namespace {

thread_local std::string last_error;

pa_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return PA_ERR_INVALID_INPUT;
    case ErrorCode::Parse: return PA_ERR_PARSE;
    case ErrorCode::IrreducibleFactorTooLarge: return PA_ERR_IRREDUCIBLE_FACTOR_TOO_LARGE;
    case ErrorCode::ModulusMismatch: return PA_ERR_MODULUS_MISMATCH;
    case ErrorCode::PairingViolation: return PA_ERR_PAIRING_VIOLATION;
    case ErrorCode::SizeIdentityViolation: return PA_ERR_SIZE_IDENTITY_VIOLATION;
    case ErrorCode::InvalidSpec: return PA_ERR_INVALID_SPEC;
    case ErrorCode::UnrealizableSpec: return PA_ERR_UNREALIZABLE_SPEC;
    case ErrorCode::GenusTooLow: return PA_ERR_GENUS_TOO_LOW;
    case ErrorCode::Unsupported: return PA_ERR_UNSUPPORTED;
    case ErrorCode::Internal: return PA_ERR_INTERNAL;
  }
  return PA_ERR_INTERNAL;
}

pa_status fail(pa_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
pa_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PA_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PA_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FieldMode mode_of(pa_field f) {
  if (f == PA_FIELD_REAL) return FieldMode::Real;
  if (f == PA_FIELD_CLOSED) return FieldMode::AlgebraicallyClosed;
  throw Error(ErrorCode::InvalidInput, "unknown field");
}

}  // namespace

extern "C" {

const char* pa_version(void) { return "0.1.0"; }

const char* pa_last_error(void) { return last_error.c_str(); }

const char* pa_status_name(pa_status status) {
  switch (status) {
    case PA_OK: return "ok";
    case PA_ERR_NULL_ARGUMENT: return "null argument";
    case PA_ERR_PARSE: return "parse error";
    case PA_ERR_INVALID_INPUT: return "invalid input";
    case PA_ERR_IRREDUCIBLE_FACTOR_TOO_LARGE: return "irreducible factor too large";
    case PA_ERR_MODULUS_MISMATCH: return "modulus mismatch";
    case PA_ERR_PAIRING_VIOLATION: return "pairing violation";
    case PA_ERR_SIZE_IDENTITY_VIOLATION: return "size identity violation";
    case PA_ERR_INVALID_SPEC: return "invalid spec";
    case PA_ERR_UNREALIZABLE_SPEC: return "unrealizable spec";
    case PA_ERR_GENUS_TOO_LOW: return "genus too low";
    case PA_ERR_UNSUPPORTED: return "unsupported";
    case PA_ERR_IO: return "i/o error";
    case PA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pa_string_free(char* s) { std::free(s); }

pa_status pa_pencil_parse(const char* text, pa_pencil** out) {
  if (!text || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new pa_pencil{pencil_from_json(parse_json(text))}; });
}

pa_status pa_pencil_canonical(const char* text, pa_pencil** out) {
  if (!text || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const json j = parse_json(text);
    if (j.is_object() && j.contains("blocks"))
      *out = new pa_pencil{build_canonical(spec_from_json(j))};
    else
      *out = new pa_pencil{canonical_from_invariants(invariants_from_json(j))};
  });
}

void pa_pencil_free(pa_pencil* p) { delete p; }

pa_status pa_pencil_size(const pa_pencil* p, int* out) {
  if (!p || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  *out = static_cast<int>(p->value.size());
  return PA_OK;
}

pa_status pa_pencil_to_json(const pa_pencil* p, char** out) {
  if (!p || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(dump(pencil_to_json(p->value))); });
}

pa_status pa_pencil_randomize(const pa_pencil* p, uint64_t seed, pa_pencil** out) {
  if (!p || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new pa_pencil{random_congruence(p->value, seed)}; });
}

pa_status pa_pencil_direct_sum(const pa_pencil* p, const pa_pencil* q, pa_pencil** out) {
  if (!p || !q || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new pa_pencil{direct_sum(p->value, q->value)}; });
}

pa_status pa_invariants_json(const pa_pencil* p, char** out) {
  if (!p || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(dump(invariants_to_json(invariants(p->value)))); });
}

pa_status pa_strictly_congruent(const pa_pencil* p, const pa_pencil* q, int* out) {
  if (!p || !q || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = strictly_congruent(p->value, q->value) ? 1 : 0; });
}

pa_status pa_solve_aid_json(const pa_pencil* p, pa_field field, char** out) {
  if (!p || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const Genus2Algebra g(p->value);
    *out = copy_string(dump(aid_result_to_json(solve_aid(g, mode_of(field)))));
  });
}

pa_status pa_formula_json(const char* invariants_json, pa_field field, char** out) {
  if (!invariants_json || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const FieldMode mode = mode_of(field);
    const auto inv = invariants_from_json(parse_json(invariants_json));
    *out = copy_string(dump(formula_to_json(formula_dimension(inv, mode), mode)));
  });
}

pa_status pa_cross_check(const pa_pencil* p, pa_field field, pa_check_report* out) {
  if (!p || !out) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto r = cross_check(p->value, mode_of(field));
    out->formula_inn = static_cast<int>(r.formula.dim_inn);
    out->formula_aid = static_cast<int>(r.formula.dim_aid);
    out->solver_inn = static_cast<int>(r.solver.dim_inn);
    out->solver_aid = static_cast<int>(r.solver.dim_aid);
    out->agree = r.agree ? 1 : 0;
  });
}

pa_status pa_corpus_run(const char* data_dir, pa_field field, const char* out_dir, char** table,
                        int* all_agree) {
  if (!data_dir || !table || !all_agree) return fail(PA_ERR_NULL_ARGUMENT, "null argument");
  std::optional<pa_status> io;
  const pa_status s = guarded([&] {
    const FieldMode mode = mode_of(field);
    const auto cases = load_corpus(data_dir);
    const auto rows = run_corpus(cases, mode);
    bool ok = !rows.empty();
    for (const auto& r : rows) ok = ok && r.error.empty() && r.agree;
    if (out_dir) {
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& r = rows[i];
        json j{{"case", r.name}, {"n", r.n}, {"mode", field_mode_name(mode)}};
        if (r.error.empty()) {
          j["dim_inn"] = r.dim_inn;
          j["formula_aid"] = r.formula_aid;
          j["solver_aid"] = r.solver_aid;
          j["agree"] = r.agree;
          j["invariants"] = invariants_to_json(invariants(cases[i].pencil));
        } else {
          j["error"] = r.error;
        }
        std::ofstream f(std::filesystem::path(out_dir) / (r.name + ".json"), std::ios::binary);
        f << dump(j);
        if (!f) {
          io = PA_ERR_IO;
          last_error = "cannot write to " + std::string(out_dir);
          return;
        }
      }
    }
    *table = copy_string(format_corpus_table(rows));
    *all_agree = ok ? 1 : 0;
  });
  return io ? *io : s;
}

}  // extern "C"
